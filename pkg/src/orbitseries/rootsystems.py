"""Root systems of the simple complex Lie algebras, rank at most 12.

Simple roots follow the Bourbaki numbering in the standard orthonormal-model
coordinates; everything downstream (weighted diagrams, gradings, orbit
dimensions) is exact rational arithmetic on those coordinates.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from functools import lru_cache
from typing import Sequence

Vector = tuple[Fraction, ...]

_EXCEPTIONAL_RANKS = {"G": 2, "F": 4}
_E_RANKS = (6, 7, 8)

# Degrees of the basic invariants; |G(F_q)| = q^N * prod (q^{d_i} - 1).
_INVARIANT_DEGREES = {
    "G2": (2, 6),
    "F4": (2, 6, 8, 12),
    "E6": (2, 5, 6, 8, 9, 12),
    "E7": (2, 6, 8, 10, 12, 14, 18),
    "E8": (2, 8, 12, 14, 18, 20, 24, 30),
}


class UnsupportedRankError(ValueError):
    pass


class AdjointNotFundamentalError(ValueError):
    """The adjoint representation of this algebra is not fundamental."""


@dataclass(frozen=True)
class AlgebraType:
    """A simple Lie algebra type: family in A..G plus rank."""

    family: str
    rank: int

    def __post_init__(self):
        fam, n = self.family, self.rank
        if fam not in "ABCDEFG":
            raise UnsupportedRankError(f"unknown family {fam!r}")
        if fam == "E" and n not in _E_RANKS:
            raise UnsupportedRankError(f"E{n} does not exist")
        if fam in _EXCEPTIONAL_RANKS and n != _EXCEPTIONAL_RANKS[fam]:
            raise UnsupportedRankError(f"{fam}{n} does not exist")
        if fam in "ABCD" and not 1 <= n <= 12:
            raise UnsupportedRankError(f"{fam}{n} outside supported range")
        if fam == "B" and n < 2 or fam == "C" and n < 2 or fam == "D" and n < 3:
            raise UnsupportedRankError(f"{fam}{n} is not treated as a distinct type")

    @property
    def name(self) -> str:
        return f"{self.family}{self.rank}"

    @property
    def num_positive_roots(self) -> int:
        n = self.rank
        fam = self.family
        if fam == "A":
            return n * (n + 1) // 2
        if fam in "BC":
            return n * n
        if fam == "D":
            return n * (n - 1)
        if fam == "E":
            return {6: 36, 7: 63, 8: 120}[n]
        return 24 if fam == "F" else 6

    @property
    def dimension(self) -> int:
        return self.rank + 2 * self.num_positive_roots

    @property
    def invariant_degrees(self) -> tuple[int, ...]:
        fam, n = self.family, self.rank
        if fam == "A":
            return tuple(range(2, n + 2))
        if fam in "BC":
            return tuple(range(2, 2 * n + 1, 2))
        if fam == "D":
            return tuple(range(2, 2 * n - 1, 2)) + (n,)
        return _INVARIANT_DEGREES[self.name]

    def __str__(self) -> str:
        return self.name


_TYPE_ALIASES = {
    "sl": "A", "so": "BD", "sp": "C", "spin": "BD", "co": None,
}


def algebra(name: str) -> AlgebraType:
    """Parse names like 'e8', 'F4', 'sl6', 'so12', 'sp6', 'spin7', 'g2'."""
    s = name.strip().lower()
    for prefix in ("spin", "sl", "so", "sp"):
        if s.startswith(prefix):
            n = int(s[len(prefix):])
            if prefix == "sl":
                return AlgebraType("A", n - 1)
            if prefix == "sp":
                if n % 2:
                    raise UnsupportedRankError("sp only defined in even matrix size")
                return AlgebraType("C", n // 2)
            # orthogonal: so_n / spin_n share one root system
            if n % 2:
                return AlgebraType("B", (n - 1) // 2)
            return AlgebraType("D", n // 2)
    fam = s[0].upper()
    return AlgebraType(fam, int(s[1:]))


def _fr(*xs) -> Vector:
    return tuple(Fraction(x) for x in xs)


def _simple_roots(alg: AlgebraType) -> list[Vector]:
    fam, n = alg.family, alg.rank

    def e(i, dim):
        return tuple(Fraction(1 if j == i else 0) for j in range(dim))

    def sub(u, v):
        return tuple(a - b for a, b in zip(u, v))

    if fam == "A":
        dim = n + 1
        return [sub(e(i, dim), e(i + 1, dim)) for i in range(n)]
    if fam == "B":
        return [sub(e(i, n), e(i + 1, n)) for i in range(n - 1)] + [e(n - 1, n)]
    if fam == "C":
        return [sub(e(i, n), e(i + 1, n)) for i in range(n - 1)] + \
            [tuple(2 * x for x in e(n - 1, n))]
    if fam == "D":
        last = tuple(a + b for a, b in zip(e(n - 2, n), e(n - 1, n)))
        return [sub(e(i, n), e(i + 1, n)) for i in range(n - 1)] + [last]
    if fam == "G":
        # Bourbaki plane-in-R^3 model: alpha1 short, alpha2 long.
        return [_fr(1, -1, 0), _fr(-2, 1, 1)]
    if fam == "F":
        return [_fr(0, 1, -1, 0), _fr(0, 0, 1, -1), _fr(0, 0, 0, 1),
                _fr(Fraction(1, 2), Fraction(-1, 2), Fraction(-1, 2), Fraction(-1, 2))]
    # E6/E7/E8 inside R^8 (Bourbaki)
    half = Fraction(1, 2)
    a1 = (half, -half, -half, -half, -half, -half, -half, half)
    a2 = _fr(1, 1, 0, 0, 0, 0, 0, 0)
    chain = [tuple(Fraction(1 if j == i else (-1 if j == i - 1 else 0))
                   for j in range(8)) for i in range(1, 7)]  # e_i - e_{i-1}
    roots = [a1, a2] + chain[: n - 2]
    return roots


def _dot(u: Vector, v: Vector) -> Fraction:
    return sum((a * b for a, b in zip(u, v)), Fraction(0))


class RootSystem:
    """Roots, Cartan data and the invariant form of one simple algebra.

    The bilinear form is the ambient dot product rescaled so the highest root
    has squared length 2; instances are immutable and cached per type.
    """

    def __init__(self, alg: AlgebraType):
        self.algebra = alg
        self.rank = alg.rank
        self.simple_roots = tuple(_simple_roots(alg))
        roots = self._reflection_closure(self.simple_roots)
        gram = [[_dot(a, b) for b in self.simple_roots] for a in self.simple_roots]
        self._gram_inv = _invert(gram)
        coords = {r: self._simple_coords(r) for r in roots}
        pos = [r for r in roots if sum(coords[r]) > 0]
        self.positive_roots = tuple(sorted(pos, key=lambda r: (sum(coords[r]), coords[r])))
        self.root_coords = {r: coords[r] for r in roots}
        self.N = len(self.positive_roots)
        if self.N != alg.num_positive_roots:
            raise AssertionError(f"{alg}: built {self.N} positive roots")
        self.highest_root = self.positive_roots[-1]
        self._scale = Fraction(2) / _dot(self.highest_root, self.highest_root)
        self.cartan_matrix = tuple(
            tuple(_i(2 * _dot(a, b) / _dot(b, b)) for b in self.simple_roots)
            for a in self.simple_roots)
        self.rho = tuple(sum(c) / 2 for c in zip(*self.positive_roots))
        self.invariant_degrees = alg.invariant_degrees
        cartan_inv = _invert([[Fraction(x) for x in row] for row in self.cartan_matrix])
        self.fundamental_weights = tuple(
            tuple(sum(cartan_inv[i][k] * self.simple_roots[k][c] for k in range(self.rank))
                  for c in range(len(self.simple_roots[0])))
            for i in range(self.rank))

    @staticmethod
    def _reflection_closure(simple: Sequence[Vector]) -> set[Vector]:
        roots = set(simple)
        frontier = set(simple)
        while frontier:
            new = set()
            for beta in frontier:
                for alpha in simple:
                    coef = 2 * _dot(beta, alpha) / _dot(alpha, alpha)
                    refl = tuple(b - coef * a for b, a in zip(beta, alpha))
                    if refl not in roots:
                        new.add(refl)
            roots |= new
            frontier = new
        return roots

    def _simple_coords(self, root: Vector) -> tuple[Fraction, ...]:
        rhs = [_dot(root, a) for a in self.simple_roots]
        return tuple(sum(self._gram_inv[i][j] * rhs[j] for j in range(self.rank))
                     for i in range(self.rank))

    # -- the normalized invariant form --------------------------------------

    def inner(self, u: Vector, v: Vector) -> Fraction:
        return self._scale * _dot(u, v)

    def pair_coroot(self, lam: Vector, root: Vector) -> Fraction:
        """<lam, root^vee> = 2(lam,root)/(root,root); scale independent."""
        return 2 * _dot(lam, root) / _dot(root, root)

    @property
    def dimension(self) -> int:
        return self.rank + 2 * self.N

    def dual_coxeter(self) -> int:
        val = 1 + 2 * _dot(self.rho, self.highest_root) / _dot(self.highest_root,
                                                               self.highest_root)
        assert val.denominator == 1
        return int(val)

    def adjoint_marks(self) -> tuple[int, ...]:
        """Fundamental-weight coordinates of the highest root."""
        return tuple(_i(self.pair_coroot(self.highest_root, a)) for a in self.simple_roots)

    def group_order_exponents(self) -> tuple[int, tuple[int, ...]]:
        """(N, invariant degrees), the data of the order polynomial."""
        return self.N, self.invariant_degrees


def _i(x: Fraction) -> int:
    assert x.denominator == 1, x
    return int(x)


def _invert(m: list[list[Fraction]]) -> list[list[Fraction]]:
    n = len(m)
    aug = [[Fraction(m[i][j]) for j in range(n)] + [Fraction(1 if i == j else 0)
                                                    for j in range(n)] for i in range(n)]
    for col in range(n):
        piv = next(r for r in range(col, n) if aug[r][col] != 0)
        aug[col], aug[piv] = aug[piv], aug[col]
        inv = 1 / aug[col][col]
        aug[col] = [x * inv for x in aug[col]]
        for r in range(n):
            if r != col and aug[r][col]:
                f = aug[r][col]
                aug[r] = [x - f * y for x, y in zip(aug[r], aug[col])]
    return [row[n:] for row in aug]


@lru_cache(maxsize=None)
def build_root_system(alg: AlgebraType) -> RootSystem:
    return RootSystem(alg)


def root_system(name: str) -> RootSystem:
    return build_root_system(algebra(name))


# -- weighted Dynkin diagrams ------------------------------------------------


@dataclass(frozen=True)
class WeightedDiagram:
    """Nonnegative integer labels on the simple roots, Bourbaki order.

    The labels are the values alpha_i(H) of the semisimple element H of an
    sl2-triple; they determine the nilpotent orbit.
    """

    algebra: AlgebraType
    labels: tuple[int, ...]

    def __post_init__(self):
        if len(self.labels) != self.algebra.rank:
            raise ValueError("one label per simple root required")
        if any(x < 0 for x in self.labels):
            raise ValueError("labels must be nonnegative")

    def is_even(self) -> bool:
        return all(x % 2 == 0 for x in self.labels)

    def as_string(self) -> str:
        """Compact form: labels along the long arm, '/branch' for E types."""
        fam, n = self.algebra.family, self.algebra.rank
        if fam == "E":
            arm = [self.labels[0]] + list(self.labels[2:])
            return ",".join(map(str, arm)) + f"/{self.labels[1]}"
        if fam == "D":
            arm = list(self.labels[: n - 2])
            return ",".join(map(str, arm)) + f"/{self.labels[n - 2]},{self.labels[n - 1]}"
        return ",".join(map(str, self.labels))

    def pretty(self) -> str:
        fam, n = self.algebra.family, self.algebra.rank
        if fam == "E":
            arm = [self.labels[0]] + list(self.labels[2:])
            return " ".join(map(str, arm)) + f" / branch {self.labels[1]}"
        if fam == "D":
            arm = self.labels[: n - 2]
            return " ".join(map(str, arm)) + f" / fork {self.labels[n-2]} {self.labels[n-1]}"
        return " ".join(map(str, self.labels))


def grading_dims(wd: WeightedDiagram) -> dict[int, int]:
    """Dimensions of the eigenspaces of ad H, keyed by eigenvalue."""
    rs = build_root_system(wd.algebra)
    dims: dict[int, int] = {0: rs.rank}
    for root in rs.positive_roots:
        coords = rs.root_coords[root]
        val = sum(c * l for c, l in zip(coords, wd.labels))
        v = _i(val)
        dims[v] = dims.get(v, 0) + 1
        dims[-v] = dims.get(-v, 0) + 1
    return dict(sorted(dims.items()))


def orbit_dim_from_diagram(wd: WeightedDiagram) -> int:
    """dim g - dim g(0) - dim g(1); exact for genuine orbit diagrams."""
    dims = grading_dims(wd)
    rs = build_root_system(wd.algebra)
    return rs.dimension - dims.get(0, 0) - dims.get(1, 0)


def desing_dims(wd: WeightedDiagram) -> tuple[int, int]:
    """(dim G/P, dim fiber) of the collapsing of the bundle over g(>=2)."""
    dims = grading_dims(wd)
    base = sum(d for i, d in dims.items() if i >= 1)
    fiber = sum(d for i, d in dims.items() if i >= 2)
    return base, fiber


def zero_diagram(alg: AlgebraType) -> WeightedDiagram:
    return WeightedDiagram(alg, (0,) * alg.rank)


def minimal_orbit_diagram(rs: RootSystem) -> WeightedDiagram:
    """Labels alpha_i(H) for H the coroot of the highest root."""
    labels = tuple(_i(rs.pair_coroot(a, rs.highest_root)) for a in rs.simple_roots)
    return WeightedDiagram(rs.algebra, labels)


def adjoint_node(rs: RootSystem) -> int:
    marks = rs.adjoint_marks()
    nodes = [i for i, m in enumerate(marks) if m]
    if len(nodes) != 1 or marks[nodes[0]] != 1:
        raise AdjointNotFundamentalError(
            f"{rs.algebra}: adjoint weight has marks {marks}")
    return nodes[0]


def sigma1_diagram(rs: RootSystem) -> WeightedDiagram:
    """Ones on the neighbours of the adjoint node, zeros elsewhere."""
    node = adjoint_node(rs)
    labels = [0] * rs.rank
    for j in range(rs.rank):
        if j != node and rs.cartan_matrix[node][j] != 0:
            labels[j] = 1
    return WeightedDiagram(rs.algebra, tuple(labels))


def sigma3_diagram(rs: RootSystem) -> WeightedDiagram:
    """Twos on the adjoint node(s), zeros elsewhere."""
    return WeightedDiagram(rs.algebra, tuple(2 * m for m in rs.adjoint_marks()))


# -- the preferred-weight table for the exceptional row ----------------------

# Fundamental-weight combinations of the four generating so8 weights, read off
# the marked diagrams of the source tables, one row per exceptional algebra.
# Entries are 1-based node lists with multiplicity.
_SERIES_WEIGHTS = {
    "F4": {"g": {1: 1}, "g2": {2: 1}, "g3": {3: 1}, "gQ": {4: 1}},
    "E6": {"g": {2: 1}, "g2": {4: 1}, "g3": {3: 1, 5: 1}, "gQ": {1: 1, 6: 1}},
    "E7": {"g": {1: 1}, "g2": {3: 1}, "g3": {4: 1}, "gQ": {6: 1}},
    "E8": {"g": {8: 1}, "g2": {7: 1}, "g3": {6: 1}, "gQ": {1: 1}},
}

EXCEPTIONAL_ROW = ("F4", "E6", "E7", "E8")


def series_weight_to_diagram(p: int, q: int, r: int, s: int,
                             alg: AlgebraType | str) -> WeightedDiagram:
    """Diagram of the orbit labeled g^p g2^q g3^r gQ^s in one exceptional algebra."""
    if isinstance(alg, str):
        alg = algebra(alg)
    if alg.name not in _SERIES_WEIGHTS:
        raise UnsupportedRankError(f"series weights only defined for {EXCEPTIONAL_ROW}")
    table = _SERIES_WEIGHTS[alg.name]
    labels = [0] * alg.rank
    for weight, mult in (("g", p), ("g2", q), ("g3", r), ("gQ", s)):
        for node, k in table[weight].items():
            labels[node - 1] += mult * k
    return WeightedDiagram(alg, tuple(labels))
