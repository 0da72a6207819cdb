"""Labeled unitrivalent trees, the free Lie algebra, and symplectic derivations.

Basis letters of H are encoded as integers: ``p_i -> 2(i-1)`` and
``q_i -> 2i-1``, so the natural integer order is p1 < q1 < p2 < q2 < ...
Tensors are dicts mapping words (tuples of letters) to Fractions.

A tree stores, for every node, its neighbours in cyclic order.  Leaves
have one neighbour; internal vertices have three.  Trees are never put in a
combinatorial normal form: the coordinates of record are the eta-images in
H (x) H^(x)(s+1), where AS, IHX and multilinearity hold automatically.
"""

from __future__ import annotations

import random
import re
from dataclasses import dataclass
from fractions import Fraction
from typing import Iterable, Mapping, Sequence, Union

Word = tuple[int, ...]
Tensor = dict[Word, Fraction]
HVector = dict[int, Fraction]
Label = Union[HVector, str]  # str labels are abstract hair indices "#k"


class TreeError(ValueError):
    pass


class TreeParseError(TreeError):
    def __init__(self, msg: str, pos: int):
        super().__init__(f"{msg} at position {pos}")
        self.pos = pos


class ConsistencyError(ArithmeticError):
    pass


# --- the symplectic space ----------------------------------------------------


def p(i: int) -> int:
    return 2 * (i - 1)


def q(i: int) -> int:
    return 2 * i - 1


def letter_name(a: int) -> str:
    if a < 0:
        return f"<{a}>"
    return ("p" if a % 2 == 0 else "q") + str(a // 2 + 1)


def parse_letter(name: str) -> int:
    m = re.fullmatch(r"([pq])(\d+)", name)
    if not m or int(m.group(2)) < 1:
        raise ValueError(f"not a basis letter: {name!r}")
    i = int(m.group(2))
    return p(i) if m.group(1) == "p" else q(i)


def genus_of(letters: Iterable[int]) -> int:
    return max((a // 2 + 1 for a in letters if a >= 0), default=0)


@dataclass(frozen=True)
class SymplecticSpace:
    g: int

    @property
    def dim(self) -> int:
        return 2 * self.g

    def letters(self) -> list[int]:
        return list(range(2 * self.g))


def pair_letters(a: int, b: int) -> int:
    """<a, b> on basis letters: <p_i, q_i> = 1 = -<q_i, p_i>."""
    if a < 0 or b < 0 or a // 2 != b // 2 or a == b:
        return 0
    return 1 if a % 2 == 0 else -1


def partner(a: int) -> int:
    return a + 1 if a % 2 == 0 else a - 1


def hvec(x) -> HVector:
    """Coerce a letter, letter name or mapping to an HVector."""
    if isinstance(x, Mapping):
        return {int(k): Fraction(v) for k, v in x.items() if v}
    if isinstance(x, str):
        return {parse_letter(x): Fraction(1)}
    return {int(x): Fraction(1)}


def contract(u, v) -> Fraction:
    u, v = hvec(u), hvec(v)
    total = Fraction(0)
    for a, x in u.items():
        b = partner(a)
        if b in v:
            total += pair_letters(a, b) * x * v[b]
    return total


# --- tensor algebra helpers --------------------------------------------------


def t_add(acc: Tensor, other: Mapping[Word, Fraction], scale=1) -> Tensor:
    for w, c in other.items():
        nc = acc.get(w, 0) + scale * c
        if nc:
            acc[w] = nc
        else:
            acc.pop(w, None)
    return acc


def t_mul(x: Mapping[Word, Fraction], y: Mapping[Word, Fraction]) -> Tensor:
    out: Tensor = {}
    for u, a in x.items():
        for v, b in y.items():
            w = u + v
            c = out.get(w, 0) + a * b
            if c:
                out[w] = c
            else:
                out.pop(w, None)
    return out


def t_bracket(x: Mapping[Word, Fraction], y: Mapping[Word, Fraction]) -> Tensor:
    return t_add(t_mul(x, y), t_mul(y, x), -1)


def t_clean(x: Mapping[Word, Fraction]) -> Tensor:
    return {w: Fraction(c) for w, c in x.items() if c}


def letter_tensor(v: HVector) -> Tensor:
    return {(a,): Fraction(c) for a, c in v.items() if c}


def left_normed(word: Word) -> Tensor:
    """Expansion of [[..[w1,w2],..],wn] in the tensor algebra."""
    acc: Tensor = {word[:1]: Fraction(1)}
    for a in word[1:]:
        acc = t_bracket(acc, {(a,): Fraction(1)})
    return acc


def is_lie(x: Mapping[Word, Fraction]) -> bool:
    """Dynkin-Specht-Wever test, degree by degree."""
    by_deg: dict[int, Tensor] = {}
    for w, c in x.items():
        if c:
            by_deg.setdefault(len(w), {})[w] = Fraction(c)
    for n, part in by_deg.items():
        if n == 0:
            return False
        img: Tensor = {}
        for w, c in part.items():
            t_add(img, left_normed(w), c)
        if t_add(img, part, -n):
            return False
    return True


# --- Lyndon words --------------------------------------------------------------


def lyndon_words(degree: int, alphabet_size: int) -> list[Word]:
    """Lyndon words of exactly ``degree`` letters, in lexicographic order (Duval)."""
    if degree < 1:
        raise ValueError("degree must be >= 1")
    out: list[Word] = []
    w = [-1]
    while w:
        w[-1] += 1
        if len(w) == degree:
            out.append(tuple(w))
        m = len(w)
        while len(w) < degree:
            w.append(w[len(w) - m])
        while w and w[-1] == alphabet_size - 1:
            w.pop()
    return out


def standard_bracketing(word: Word):
    """Nested-pair LieMonomial for a Lyndon word (longest proper Lyndon suffix split)."""
    if len(word) == 1:
        return word[0]
    for i in range(1, len(word)):
        suffix = word[i:]
        if _is_lyndon(suffix):
            return (standard_bracketing(word[:i]), standard_bracketing(suffix))
    raise ValueError(f"{word} is not Lyndon")


def _is_lyndon(w: Word) -> bool:
    return all(w < w[i:] + w[:i] for i in range(1, len(w)))


def expand_lie(mono) -> Tensor:
    if isinstance(mono, int):
        return {(mono,): Fraction(1)}
    return t_bracket(expand_lie(mono[0]), expand_lie(mono[1]))


def lie_degree(mono) -> int:
    return 1 if isinstance(mono, int) else lie_degree(mono[0]) + lie_degree(mono[1])


def lyndon_basis(degree: int, alphabet_size: int) -> list:
    return [standard_bracketing(w) for w in lyndon_words(degree, alphabet_size)]


# --- trees -------------------------------------------------------------------


@dataclass(frozen=True, eq=False)
class Tree:
    adj: tuple[tuple[int, ...], ...]
    labels: Mapping[int, Label]

    def __post_init__(self):
        for v, nb in enumerate(self.adj):
            if len(nb) not in (1, 3):
                raise TreeError(f"node {v} has degree {len(nb)}")
            for u in nb:
                if v not in self.adj[u]:
                    raise TreeError(f"edge {v}-{u} is not symmetric")
        leaves = self.leaves
        if set(self.labels) - set(leaves):
            raise TreeError("labels on non-leaf nodes")
        if self.adj and len(leaves) != self.order + 2:
            raise TreeError("not a tree")

    @property
    def leaves(self) -> list[int]:
        return [v for v, nb in enumerate(self.adj) if len(nb) == 1]

    @property
    def internal(self) -> list[int]:
        return [v for v, nb in enumerate(self.adj) if len(nb) == 3]

    @property
    def order(self) -> int:
        return sum(1 for nb in self.adj if len(nb) == 3)

    def label(self, leaf: int) -> Label:
        try:
            return self.labels[leaf]
        except KeyError:
            raise TreeError(f"leaf {leaf} is unlabeled") from None

    def hlabel(self, leaf: int) -> HVector:
        lab = self.label(leaf)
        if isinstance(lab, str):
            raise TreeError(f"leaf {leaf} carries abstract label {lab}")
        return lab

    def relabel(self, new: Mapping[int, Label]) -> "Tree":
        labels = dict(self.labels)
        labels.update(new)
        return Tree(self.adj, labels)

    def flip(self, vertex: int) -> "Tree":
        """Reverse the cyclic order at an internal vertex (AS: negates the tree)."""
        nb = self.adj[vertex]
        if len(nb) != 3:
            raise TreeError("can only flip internal vertices")
        adj = list(self.adj)
        adj[vertex] = (nb[0], nb[2], nb[1])
        return Tree(tuple(adj), self.labels)

    def path(self, start: int, end: int) -> list[int]:
        prev = {start: None}
        stack = [start]
        while stack:
            v = stack.pop()
            if v == end:
                break
            for u in self.adj[v]:
                if u not in prev:
                    prev[u] = v
                    stack.append(u)
        out = [end]
        while out[-1] != start:
            out.append(prev[out[-1]])
        return out[::-1]

    def __repr__(self):
        return f"Tree({format_tree(self)!r})"


def rotate_to(nb: Sequence[int], first: int) -> tuple[int, ...]:
    i = nb.index(first)
    return tuple(nb[i:]) + tuple(nb[:i])


def lie_element(tree: Tree, node: int, parent: int, label_tensor=None) -> Tensor:
    """Lie element of the subtree at ``node`` seen from ``parent``.

    A vertex with cyclic order (parent, A, B) is the bracket [A, B].
    ``label_tensor`` maps a leaf to its degree-one tensor (defaults to the
    leaf's H label).
    """
    nb = tree.adj[node]
    if len(nb) == 1:
        if label_tensor is not None:
            return label_tensor(node)
        return letter_tensor(tree.hlabel(node))
    _, a, b = rotate_to(nb, parent)
    return t_bracket(
        lie_element(tree, a, node, label_tensor), lie_element(tree, b, node, label_tensor)
    )


def rooted_expansion(tree: Tree, root: int, label_tensor=None) -> Tensor:
    """t_x: the element of L_{s+1} obtained by rooting the tree at leaf ``root``."""
    (v,) = tree.adj[root]
    return lie_element(tree, v, root, label_tensor)


# --- parsing -----------------------------------------------------------------
#
#   tree   := "(" branch "," branch ")" | "(" branch "," branch "," branch ")"
#   branch := leaf | "(" branch "," branch ")"
#   leaf   := p<i> | q<i> | #<k> | 0
#
# A branch "(A,B)" is an internal vertex with cyclic order (parent, A, B).
# A top-level "(A,B,C)" is a vertex with cyclic order (A, B, C); a top-level
# "(A,B)" is the edge joining the roots of A and B.


class _Parser:
    def __init__(self, text: str):
        self.text = text
        self.pos = 0
        self.adj: list[list[int]] = []
        self.labels: dict[int, Label] = {}

    def skip(self):
        while self.pos < len(self.text) and self.text[self.pos].isspace():
            self.pos += 1

    def peek(self) -> str:
        self.skip()
        return self.text[self.pos] if self.pos < len(self.text) else ""

    def expect(self, ch: str):
        if self.peek() != ch:
            got = self.peek() or "end of input"
            raise TreeParseError(f"expected {ch!r}, got {got!r}", self.pos)
        self.pos += 1

    def new_node(self) -> int:
        self.adj.append([])
        return len(self.adj) - 1

    def leaf(self) -> int:
        self.skip()
        m = re.compile(r"[pq][1-9]\d*|#\d+|0").match(self.text, self.pos)
        if not m:
            raise TreeParseError("expected a leaf label", self.pos)
        self.pos = m.end()
        v = self.new_node()
        tok = m.group(0)
        if tok == "0":
            self.labels[v] = {}
        elif tok.startswith("#"):
            self.labels[v] = tok
        else:
            self.labels[v] = {parse_letter(tok): Fraction(1)}
        return v

    def branch(self) -> int:
        if self.peek() != "(":
            return self.leaf()
        start = self.pos
        self.expect("(")
        kids = [self.branch()]
        while self.peek() == ",":
            self.pos += 1
            kids.append(self.branch())
        self.expect(")")
        if len(kids) != 2:
            raise TreeParseError("a nested vertex needs exactly two branches", start)
        v = self.new_node()
        self.adj[v] = [-1, kids[0], kids[1]]  # parent filled in by the caller
        for k in kids:
            self.attach(k, v)
        return v

    def attach(self, child: int, parent: int):
        if self.adj[child]:
            self.adj[child][0] = parent
        else:
            self.adj[child].append(parent)

    def tree(self) -> Tree:
        start = self.pos
        self.expect("(")
        kids = [self.branch()]
        while self.peek() == ",":
            self.pos += 1
            kids.append(self.branch())
        self.expect(")")
        if self.peek():
            raise TreeParseError("trailing input", self.pos)
        if len(kids) == 3:
            v = self.new_node()
            self.adj[v] = list(kids)
            for k in kids:
                self.attach(k, v)
        elif len(kids) == 2:
            a, b = kids
            self.attach(a, b)
            self.attach(b, a)
        else:
            raise TreeParseError("a tree needs two or three top-level branches", start)
        return Tree(tuple(tuple(nb) for nb in self.adj), self.labels)


def parse_tree(text: str) -> Tree:
    # nested vertices hold -1 in their parent slot until attached
    return _Parser(text).tree()


def _label_text(lab: Label) -> str:
    if isinstance(lab, str):
        return lab
    if not lab:
        return "0"
    if len(lab) == 1:
        (a, c), = lab.items()
        if c == 1:
            return letter_name(a)
    raise TreeError("only single basis letters can be printed")


def format_tree(tree: Tree) -> str:
    def br(node: int, parent: int) -> str:
        nb = tree.adj[node]
        if len(nb) == 1:
            return _label_text(tree.labels.get(node, "?")) if node in tree.labels else "?"
        _, a, b = rotate_to(nb, parent)
        return f"({br(a, node)},{br(b, node)})"

    internal = tree.internal
    if not internal:
        a, b = tree.leaves
        return f"({br(a, b)},{br(b, a)})"
    v = internal[0]
    return "(" + ",".join(br(u, v) for u in tree.adj[v]) + ")"


# --- building trees ------------------------------------------------------------


def tripod(a, b, c) -> Tree:
    labels = {i: (x if isinstance(x, str) and x.startswith("#") else hvec(x)) for i, x in enumerate((a, b, c))}
    return Tree(((3,), (3,), (3,), (0, 1, 2)), labels)


def from_bracket(expr) -> Tree:
    """Tree from a nested pair (A, B) of letters: the edge joining A and B."""
    adj: list[list[int]] = []
    labels: dict[int, Label] = {}

    def build(e) -> int:
        v = len(adj)
        adj.append([])
        if isinstance(e, tuple):
            a, b = build(e[0]), build(e[1])
            adj[v] = [-1, a, b]
            adj[a][0] = v
            adj[b][0] = v
        else:
            labels[v] = hvec(e)
            adj[v] = [-1]
        return v

    a, b = build(expr[0]), build(expr[1])
    adj[a][0] = b
    adj[b][0] = a
    return Tree(tuple(tuple(x) for x in adj), labels)


def random_tree(order: int, letters: Sequence[int], rng: random.Random) -> Tree:
    """A random tree of the given order with leaves labeled by basis letters."""
    if order < 0:
        raise ValueError("order must be >= 0")
    nodes = [rng.choice(letters) for _ in range(order + 2)]
    items = list(nodes)
    # random binary bracketing of order+1 leaves, then an edge to the last leaf
    exprs = items[:-1]
    while len(exprs) > 1:
        i = rng.randrange(len(exprs) - 1)
        pair = (exprs[i], exprs[i + 1]) if rng.random() < 0.5 else (exprs[i + 1], exprs[i])
        exprs[i : i + 2] = [pair]
    return from_bracket((exprs[0], items[-1]))


def bracket_trees(t1: Tree, t2: Tree) -> list[tuple[Fraction, Tree]]:
    """Sum over joining a leaf of t1 to a leaf of t2, weighted by the contraction."""
    out = []
    off = len(t1.adj)
    for x1 in t1.leaves:
        for x2 in t2.leaves:
            c = contract(t1.hlabel(x1), t2.hlabel(x2))
            if not c:
                continue
            (n1,) = t1.adj[x1]
            (n2,) = t2.adj[x2]
            n2 += off
            keep = [v for v in range(len(t1.adj)) if v != x1] + [v + off for v in range(len(t2.adj)) if v != x2]
            index = {v: i for i, v in enumerate(keep)}
            merged = [list(nb) for nb in t1.adj] + [[u + off for u in nb] for nb in t2.adj]
            merged[n1] = [n2 if u == x1 else u for u in merged[n1]]
            merged[n2] = [n1 if u == x2 + off else u for u in merged[n2]]
            adj = tuple(tuple(index[u] for u in merged[v]) for v in keep)
            labels = {index[v]: lab for v, lab in t1.labels.items() if v != x1}
            labels.update({index[v + off]: lab for v, lab in t2.labels.items() if v != x2})
            out.append((c, Tree(adj, labels)))
    return out


def bracket_sums(xs: Sequence[tuple[Fraction, Tree]], ys: Sequence[tuple[Fraction, Tree]]):
    out = []
    for a, t in xs:
        for b, u in ys:
            out.extend((a * b * c, v) for c, v in bracket_trees(t, u))
    return out


def iterated_bracket(trees: Sequence[Tree]) -> list[tuple[Fraction, Tree]]:
    """Left-normed bracket [[[t1,t2],t3],...] as a formal sum of trees."""
    acc = [(Fraction(1), trees[0])]
    for t in trees[1:]:
        acc = bracket_sums(acc, [(Fraction(1), t)])
    return acc


def ihx_triple(tree: Tree, u: int, v: int) -> tuple[Tree, Tree, Tree]:
    """The three trees of an IHX relation on the internal edge u-v.

    With (v, A, B) at u and (u, C, D) at v the trees are D-rooted
    [[A,B],C], [[B,C],A], [[C,A],B]; their signed sum is zero.
    """
    if len(tree.adj[u]) != 3 or len(tree.adj[v]) != 3 or v not in tree.adj[u]:
        raise TreeError("u-v must be an internal edge")
    _, a, b = rotate_to(tree.adj[u], v)
    _, c, d = rotate_to(tree.adj[v], u)

    def make(x, y, z) -> Tree:
        adj = [list(nb) for nb in tree.adj]
        adj[u] = [v, x, y]
        adj[v] = [d, u, z]
        for w in (a, b, c):
            host = u if w in (x, y) else v
            adj[w] = [host if n in (u, v) else n for n in adj[w]]
        return Tree(tuple(tuple(nb) for nb in adj), tree.labels)

    return make(a, b, c), make(b, c, a), make(c, a, b)


# --- derivations ----------------------------------------------------------------


@dataclass
class DerivationElement:
    """Element of H (x) H^(x)(s+1); key = (first letter,) + word."""

    order: int
    terms: Tensor

    def __add__(self, other: "DerivationElement") -> "DerivationElement":
        return DerivationElement(self.order, t_add(dict(self.terms), other.terms))

    def __sub__(self, other: "DerivationElement") -> "DerivationElement":
        return DerivationElement(self.order, t_add(dict(self.terms), other.terms, -1))

    def scale(self, c) -> "DerivationElement":
        return DerivationElement(self.order, t_clean({w: c * x for w, x in self.terms.items()}))

    def is_zero(self) -> bool:
        return not self.terms

    def slots(self) -> dict[int, Tensor]:
        out: dict[int, Tensor] = {}
        for w, c in self.terms.items():
            out.setdefault(w[0], {})[w[1:]] = c
        return out


def eta(tree: Tree) -> DerivationElement:
    """eta(t) = sum over leaves x of label(x) (x) t_x."""
    terms: Tensor = {}
    for x in tree.leaves:
        lab = tree.hlabel(x)
        if not lab:
            continue
        tx = rooted_expansion(tree, x)
        for a, c in lab.items():
            t_add(terms, {(a,) + w: v for w, v in tx.items()}, c)
    return DerivationElement(tree.order, terms)


def eta_sum(xs: Iterable[tuple[Fraction, Tree]], order: int) -> DerivationElement:
    acc = DerivationElement(order, {})
    for c, t in xs:
        acc = acc + eta(t).scale(c)
    return acc


def _apply_derivation(images: Mapping[int, Tensor], x: Mapping[Word, Fraction]) -> Tensor:
    out: Tensor = {}
    for w, c in x.items():
        for i, a in enumerate(w):
            img = images.get(a)
            if not img:
                continue
            pre, post = w[:i], w[i + 1 :]
            for u, d in img.items():
                k = pre + u + post
                nv = out.get(k, 0) + c * d
                if nv:
                    out[k] = nv
                else:
                    out.pop(k, None)
    return out


def derivation_images(x: DerivationElement) -> dict[int, Tensor]:
    """The derivation v -> sum <v, a> w attached to x = sum a (x) w."""
    images: dict[int, Tensor] = {}
    for a, w_part in x.slots().items():
        v = partner(a)
        c = pair_letters(v, a)
        t_add(images.setdefault(v, {}), w_part, c)
    return {v: img for v, img in images.items() if img}


def _from_images(images: Mapping[int, Tensor], order: int) -> DerivationElement:
    # inverse of derivation_images: dual(p_i) = q_i, dual(q_i) = -p_i
    terms: Tensor = {}
    for v, img in images.items():
        a = partner(v)
        sign = pair_letters(v, a)
        t_add(terms, {(a,) + w: c for w, c in img.items()}, sign)
    return DerivationElement(order, terms)


def bracketing_image(x: DerivationElement) -> Tensor:
    out: Tensor = {}
    for key, c in x.terms.items():
        a, w = key[0], key[1:]
        t_add(out, {(a,) + w: c})
        t_add(out, {w + (a,): c}, -1)
    return out


def omega_image(x: DerivationElement) -> Tensor:
    """X(omega) for omega = sum_i [p_i, q_i] in the tensor algebra."""
    g = genus_of(k[0] for k in x.terms)
    omega: Tensor = {}
    for i in range(1, g + 1):
        omega[(p(i), q(i))] = Fraction(1)
        omega[(q(i), p(i))] = Fraction(-1)
    return _apply_derivation(derivation_images(x), omega)


def in_lie_tensor(x: DerivationElement) -> bool:
    return all(is_lie(part) for part in x.slots().values())


def is_in_D(x: DerivationElement) -> bool:
    """Membership in D_s(H): kernel of bracketing, cross-checked against X(omega) = 0."""
    if not in_lie_tensor(x):
        return False
    by_bracket = not bracketing_image(x)
    by_omega = not omega_image(x)
    if by_bracket != by_omega:
        raise ConsistencyError("bracketing-map and omega tests disagree")
    return by_bracket


def derivation_bracket(x: DerivationElement, y: DerivationElement, check: bool = True) -> DerivationElement:
    """Bracket in D(H): the commutator Y X - X Y of the associated derivations.

    The order of the commutator is fixed so that eta intertwines the tree
    bracket with this one.
    """
    if check and not (is_in_D(x) and is_in_D(y)):
        raise ValueError("derivation_bracket needs elements of D")
    X, Y = derivation_images(x), derivation_images(y)
    letters = set(X) | set(Y)
    images: dict[int, Tensor] = {}
    for v in letters:
        z = _apply_derivation(Y, X.get(v, {}))
        t_add(z, _apply_derivation(X, Y.get(v, {})), -1)
        if z:
            images[v] = z
    return _from_images(images, x.order + y.order)
