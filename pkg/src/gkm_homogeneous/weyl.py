"""Weyl groups as integer matrices acting on t* in the simple-root basis."""

from __future__ import annotations

from dataclasses import dataclass, field
from fractions import Fraction
from typing import Iterable, Sequence

from .rootsystem import RootSystem, Subsystem, is_positive

Matrix = tuple[tuple[int, ...], ...]

MAX_RANK = 6


def _matmul(a: Matrix, b: Matrix) -> Matrix:
    n = len(a)
    cols = list(zip(*b))
    return tuple(tuple(sum(x * y for x, y in zip(row, col)) for col in cols) for row in a)


def _identity(n: int) -> Matrix:
    return tuple(tuple(int(i == j) for j in range(n)) for i in range(n))


@dataclass(frozen=True)
class WeylElement:
    """An element of W_G; column ``j`` of ``matrix`` is the image of ``alpha_j``.

    Equality is matrix equality.  ``length`` is the word length in simple
    reflections and does not take part in comparisons.
    """

    matrix: Matrix
    length: int = field(default=-1, compare=False)

    def apply(self, v: Sequence) -> tuple:
        return tuple(sum(m * x for m, x in zip(row, v) if x) for row in self.matrix)

    def __mul__(self, other: WeylElement) -> WeylElement:
        return WeylElement(_matmul(self.matrix, other.matrix))

    @property
    def flat(self) -> tuple[int, ...]:
        return tuple(x for row in self.matrix for x in row)

    @property
    def sort_key(self):
        return (self.length, self.flat)

    def is_identity(self) -> bool:
        return self.matrix == _identity(len(self.matrix))


def reflection_matrix(R: RootSystem, beta: Sequence[int]) -> Matrix:
    cols = [R.reflect(beta, s) for s in R.simples]
    return tuple(tuple(int(c[i]) for c in cols) for i in range(R.rank))


def inversion_count(R: RootSystem, w: WeylElement) -> int:
    """Number of positive roots sent to negative roots by ``w``."""
    return sum(1 for b in R.positive_roots if not is_positive(w.apply(b)))


class WeylGroup:
    """A finite group of Weyl elements, closed under products.

    For W_G itself ``parent`` is None.  Reflection subgroups keep a
    reference to the ambient group and reuse its elements, so lengths are
    always lengths in W_G.
    """

    def __init__(self, R: RootSystem, elements: Iterable[WeylElement],
                 generators: Iterable[WeylElement], parent: WeylGroup | None = None):
        self.root_system = R
        self.elements: tuple[WeylElement, ...] = tuple(sorted(elements, key=lambda w: w.sort_key))
        self.generators: tuple[WeylElement, ...] = tuple(generators)
        self.parent = parent
        self._index = {w.matrix: i for i, w in enumerate(self.elements)}
        self._inverse: dict[Matrix, WeylElement] = {}

    def __len__(self):
        return len(self.elements)

    def __iter__(self):
        return iter(self.elements)

    def __contains__(self, w: WeylElement):
        return w.matrix in self._index

    @property
    def order(self) -> int:
        return len(self.elements)

    @property
    def identity(self) -> WeylElement:
        return self.canonical(_identity(self.root_system.rank))

    def index(self, w: WeylElement) -> int:
        return self._index[w.matrix]

    def canonical(self, w: WeylElement | Matrix) -> WeylElement:
        """The stored element equal to ``w`` (carrying its length)."""
        m = w.matrix if isinstance(w, WeylElement) else w
        try:
            return self.elements[self._index[m]]
        except KeyError:
            raise ValueError("matrix is not an element of this group") from None

    def mul(self, a: WeylElement, b: WeylElement) -> WeylElement:
        return self.canonical(_matmul(a.matrix, b.matrix))

    def inverse(self, w: WeylElement) -> WeylElement:
        # W preserves the form, so w^-1 = G^-1 w^T G.
        hit = self._inverse.get(w.matrix)
        if hit is None:
            R = self.root_system
            G = [[Fraction(x) for x in row] for row in R.gram]
            Ginv = _invert(G)
            wt = [list(col) for col in zip(*w.matrix)]
            prod = _fmatmul(_fmatmul(Ginv, wt), G)
            m = tuple(tuple(int(x) for x in row) for row in prod)
            hit = self.canonical(m)
            self._inverse[w.matrix] = hit
        return hit

    def reflection(self, beta: Sequence[int]) -> WeylElement:
        top = self if self.parent is None else self.parent
        return top.canonical(reflection_matrix(self.root_system, beta))

    def simple_reflection(self, i: int) -> WeylElement:
        """The simple reflection ``s_i`` (1-based)."""
        return self.reflection(self.root_system.simples[i - 1])

    def reduced_word(self, w: WeylElement) -> list[int]:
        """A reduced word for ``w`` by greedy removal of right descents (1-based)."""
        R = self.root_system
        top = self if self.parent is None else self.parent
        word = []
        m = w.matrix
        while m != _identity(R.rank):
            # right descent: w(alpha_i) < 0
            for i in range(R.rank):
                col = tuple(row[i] for row in m)
                if not is_positive(col):
                    break
            else:  # pragma: no cover - only the identity has no descent
                raise AssertionError("no descent found")
            word.append(i + 1)
            m = _matmul(m, top.simple_reflection(i + 1).matrix)
        return word[::-1]

    def longest(self) -> WeylElement:
        return self.elements[-1]


def _fmatmul(a, b):
    cols = list(zip(*b))
    return [[sum(x * y for x, y in zip(row, col)) for col in cols] for row in a]


def _invert(m: list[list[Fraction]]) -> list[list[Fraction]]:
    n = len(m)
    aug = [list(row) + [Fraction(int(i == j)) for j in range(n)] for i, row in enumerate(m)]
    for c in range(n):
        p = next(r for r in range(c, n) if aug[r][c] != 0)
        aug[c], aug[p] = aug[p], aug[c]
        piv = aug[c][c]
        aug[c] = [x / piv for x in aug[c]]
        for r in range(n):
            if r != c and aug[r][c] != 0:
                f = aug[r][c]
                aug[r] = [x - f * y for x, y in zip(aug[r], aug[c])]
    return [row[n:] for row in aug]


def generate_weyl(R: RootSystem) -> WeylGroup:
    """Enumerate W_G by breadth-first search over left multiplication by simple reflections."""
    n = R.rank
    if n > MAX_RANK:
        raise ValueError(
            f"Weyl group enumeration is limited to rank <= {MAX_RANK}; {R.datum} has rank {n}"
        )
    g = R.gram
    # s_i acting on a column v changes only coordinate i: v_i -= sum_j <alpha_j, alpha_i> v_j
    cartan = [[2 * g[j][i] // g[i][i] for j in range(n)] for i in range(n)]

    def left_simple(i: int, m: Matrix) -> Matrix:
        rows = list(m)
        new_row = list(rows[i])
        for j in range(n):
            c = cartan[i][j]
            if c:
                rj = rows[j]
                for k in range(n):
                    new_row[k] -= c * rj[k]
        rows[i] = tuple(new_row)
        return tuple(rows)

    ident = _identity(n)
    depth = {ident: 0}
    frontier = [ident]
    level = 0
    while frontier:
        level += 1
        nxt = []
        for m in frontier:
            for i in range(n):
                m2 = left_simple(i, m)
                if m2 not in depth:
                    depth[m2] = level
                    nxt.append(m2)
        frontier = nxt
    elements = [WeylElement(m, d) for m, d in depth.items()]
    simples = [WeylElement(left_simple(i, ident), 1) for i in range(n)]
    return WeylGroup(R, elements, simples)


def reflection_of(W: WeylGroup, beta: Sequence[int]) -> WeylElement:
    return W.reflection(beta)


def subgroup_from(W: WeylGroup, delta_k: Subsystem) -> WeylGroup:
    """The reflection subgroup W_K generated by ``sigma_alpha``, alpha in ``delta_k``."""
    R = W.root_system
    if not R.is_closed(delta_k.roots):
        raise ValueError("delta_k is not a closed subsystem")
    gens = [W.reflection(a) for a in delta_k if is_positive(a)]
    ident = W.identity
    seen = {ident.matrix: ident}
    frontier = [ident]
    while frontier:
        nxt = []
        for u in frontier:
            for s in gens:
                v = W.mul(u, s)
                if v.matrix not in seen:
                    seen[v.matrix] = v
                    nxt.append(v)
        frontier = nxt
    return WeylGroup(R, seen.values(), gens, parent=W)


class CosetSpace:
    """Left cosets ``w W_K`` with canonical minimal-length representatives.

    Ties between representatives of equal length are broken by the
    lexicographic order of the flattened matrix.
    """

    def __init__(self, W: WeylGroup, WK: WeylGroup):
        if any(u not in W for u in WK):
            raise ValueError("WK is not a subgroup of W")
        self.group = W
        self.subgroup = WK
        reps: list[WeylElement] = []
        lookup: dict[Matrix, int] = {}
        for w in W:  # already in (length, lex) order
            if w.matrix in lookup:
                continue
            idx = len(reps)
            reps.append(w)
            for u in WK:
                lookup[_matmul(w.matrix, u.matrix)] = idx
        if len(reps) * len(WK) != len(W):
            raise ValueError("WK is not a subgroup of W")
        self.representatives: tuple[WeylElement, ...] = tuple(reps)
        self._lookup = lookup

    def __len__(self):
        return len(self.representatives)

    def coset_of(self, w: WeylElement) -> int:
        return self._lookup[w.matrix]

    def same_coset(self, w1: WeylElement, w2: WeylElement) -> bool:
        """Independent membership test: ``w2^-1 w1`` lies in W_K."""
        return self.group.mul(self.group.inverse(w2), w1) in self.subgroup

    def members(self, idx: int) -> list[WeylElement]:
        w = self.representatives[idx]
        return [self.group.mul(w, u) for u in self.subgroup]


def cosets(W: WeylGroup, WK: WeylGroup) -> CosetSpace:
    return CosetSpace(W, WK)
