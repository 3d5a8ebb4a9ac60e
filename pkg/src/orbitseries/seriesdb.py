"""Registry of the nilpotent-orbit series tables.

Every record transcribes one row of the published series tables: orbit labels,
the dimension and radical-dimension coefficients (both affine in the parameter
a), reductive stabilizers, grading claims, point-count expressions and
unipotent-character degree expressions.  The registry is the ground truth the
verify module audits, so values are data, never computed at load time.

A handful of printed entries are provably inconsistent with the rest of the
tables (they fail the stabilizer bookkeeping identity, or the expression
fails to be a polynomial / match its companion explicit degree).  Those
entries carry the corrected value together with a ``notes`` item quoting the
printed form; the verify suite reports every such correction.
"""

from __future__ import annotations

import re
from dataclasses import dataclass
from fractions import Fraction
from functools import lru_cache

from .exactpoly import Cyclo, LinExp, Literal, ProductExpr, QLaurent
from .partitions import EMPTY, Family, Partition, PartitionPair, pair_to_partition
from .rootsystems import AlgebraType, algebra, build_root_system

__all__ = [
    "ReductiveSpec", "Member", "CharacterFormula", "NamedDegree", "SeriesRecord",
    "UnknownSeriesError", "reductive", "group_order", "lookup", "all_series",
    "rows", "hasse_edges", "series_by_row", "L", "EXCEPTIONAL_AMBIENTS",
]


class UnknownSeriesError(KeyError):
    pass


def L(s) -> LinExp:
    """Parse exponents written the way the tables print them: '3a/2+2', 'a/4', '11a+8'."""
    if isinstance(s, LinExp):
        return s
    if isinstance(s, (int, Fraction)):
        return LinExp(s)
    text = s.replace(" ", "")
    c0 = Fraction(0)
    c1 = Fraction(0)
    for term in re.findall(r"[+-]?[^+-]+", text):
        sign = -1 if term.startswith("-") else 1
        term = term.lstrip("+-")
        if "a" in term:
            head, _, tail = term.partition("a")
            coeff = Fraction(head) if head else Fraction(1)
            if tail:
                if not tail.startswith("/"):
                    raise ValueError(f"cannot parse term {term!r}")
                coeff /= Fraction(tail[1:])
            c1 += sign * coeff
        else:
            c0 += sign * Fraction(term)
    return LinExp(c0, c1)


def _factors(entries, mult_sign, plus_one=False):
    out = []
    for entry in entries or ():
        mult = 1
        if isinstance(entry, tuple):
            entry, mult = entry
        out.append((Cyclo(L(entry), -1 if plus_one else 1), mult_sign * mult))
    return tuple(out)


def pexpr(constant=1, prefactor=0, num=(), den=(), num_plus=(), den_plus=(),
          literal_den=()) -> ProductExpr:
    """Product expression from table-style exponent strings.

    ``num``/``den`` hold (q^e - 1) factors, ``num_plus``/``den_plus`` hold
    (q^e + 1) factors; entries may be (exponent, multiplicity) pairs.
    """
    factors = _factors(num, 1) + _factors(den, -1) + \
        _factors(num_plus, 1, True) + _factors(den_plus, -1, True) + \
        tuple((Literal(v), -1) for v in literal_den)
    return ProductExpr(Fraction(constant), L(prefactor), factors)


# -- reductive stabilizer specifications --------------------------------------


@dataclass(frozen=True)
class ReductiveSpec:
    """Product of simple factors and a central torus."""

    factors: tuple[AlgebraType, ...] = ()
    torus_rank: int = 0
    name: str = ""

    @property
    def dim(self) -> int:
        return sum(f.dimension for f in self.factors) + self.torus_rank

    @property
    def rank(self) -> int:
        return sum(f.rank for f in self.factors) + self.torus_rank

    def __str__(self) -> str:
        return self.name or "0"


def reductive(spec: str) -> ReductiveSpec:
    """Parse stabilizer names: 'sl2+g2', '3sl2', 'co7', 'gl4', 'T2', '0'."""
    text = spec.strip()
    factors: list[AlgebraType] = []
    torus = 0
    if text not in ("", "0"):
        for token in text.split("+"):
            token = token.strip()
            m = re.match(r"^(\d*)([a-zA-Z]+)(\d*)$", token)
            if not m:
                raise ValueError(f"cannot parse factor {token!r}")
            rep, kind, size = m.groups()
            rep = int(rep) if rep else 1
            if kind == "T":
                torus += rep * int(size or 1)
                continue
            if kind == "co":
                factors.extend([algebra(f"so{size}")] * rep)
                torus += rep
                continue
            if kind == "gl":
                factors.extend([algebra(f"sl{size}")] * rep)
                torus += rep
                continue
            factors.extend([algebra(kind + size)] * rep)
    return ReductiveSpec(tuple(factors), torus, text if text else "0")


def group_order(spec: ReductiveSpec) -> ProductExpr:
    """Order polynomial q^N prod (q^{d_i} - 1) times (q-1)^torus."""
    prefactor = LinExp(0)
    degrees: list[int] = []
    for f in spec.factors:
        rs = build_root_system(f)
        prefactor = prefactor + rs.N
        degrees.extend(rs.invariant_degrees)
    degrees.extend([1] * spec.torus_rank)
    return pexpr(1, prefactor, num=degrees)


EXCEPTIONAL_AMBIENTS = {1: "f4", 2: "e6", 4: "e7", 8: "e8"}


# -- members and character formulas -------------------------------------------


@dataclass(frozen=True)
class Member:
    """One algebra in a series: ambient, orbit label and stabilizer data."""

    a: int
    ambient: ReductiveSpec
    carter: str
    h: ReductiveSpec
    family: Family | None = None
    pair: PartitionPair | None = None
    partition: Partition | None = None
    sl_pair: tuple[Partition, Partition] | None = None

    def orbit_datum(self):
        """Classical parametrization resolved to the family's datum, if any."""
        if self.family is None:
            return None
        if self.family.kind == "2sl":
            return self.sl_pair
        if self.pair is not None:
            return pair_to_partition(self.pair, self.family.n)
        return self.partition


def _norm_entries(entries) -> tuple[tuple[LinExp, int], ...]:
    out = []
    for entry in entries or ():
        mult = 1
        if isinstance(entry, tuple) and not isinstance(entry, LinExp):
            entry, mult = entry
        out.append((L(entry), int(mult)))
    return tuple(out)


@dataclass(frozen=True)
class CharacterFormula:
    """One degree expression: constant * q^(N - shift(a)) * cyclotomic product.

    Exponent lists are normalized to (LinExp, multiplicity) pairs.
    """

    name: str
    constant: Fraction
    shift: LinExp
    num: tuple = ()
    den: tuple = ()
    num_plus: tuple = ()
    den_plus: tuple = ()
    literal_den: tuple = ()
    a_values: tuple[int, ...] = (2, 4, 8)
    doubled_at: int | None = None   # member whose unique character is the pair sum

    def __post_init__(self):
        for name in ("num", "den", "num_plus", "den_plus"):
            object.__setattr__(self, name, _norm_entries(getattr(self, name)))
        object.__setattr__(self, "literal_den", tuple(self.literal_den))
        object.__setattr__(self, "a_values", tuple(self.a_values))

    def expr(self, n_positive_roots: int) -> ProductExpr:
        pre = LinExp(n_positive_roots) - self.shift
        factors = tuple((Cyclo(e, 1), m) for e, m in self.num) + \
            tuple((Cyclo(e, 1), -m) for e, m in self.den) + \
            tuple((Cyclo(e, -1), m) for e, m in self.num_plus) + \
            tuple((Cyclo(e, -1), -m) for e, m in self.den_plus) + \
            tuple((Literal(v), -1) for v in self.literal_den)
        return ProductExpr(Fraction(self.constant), pre, factors)


@dataclass(frozen=True)
class NamedDegree:
    """A named character this series hits, with its printed invariants."""

    a: int
    variant: str        # name of the CharacterFormula it instantiates
    label: str          # e.g. "phi_{64,13}"
    weyl_dim: int
    b_index: int
    display: ProductExpr | None = None   # explicit printed degree, when given


@dataclass(frozen=True)
class SeriesRecord:
    row: str
    label: str
    dim_coeffs: tuple[int, int]          # (slope, intercept) of dim O_a
    rad_coeffs: tuple[int, int]          # (slope, intercept) of dim r(a)
    members: tuple[Member, ...]
    exponents: tuple[int, int, int, int] | None = None   # (p, q, r, s)
    so8_partition: Partition | None = None
    so8_h: ReductiveSpec | None = None
    fundamental_group: str = "trivial"   # "trivial" | "Z2" | "mixed"
    folding: bool = False                # so8 orbit symmetric about the folding
    grading_claims: tuple[tuple[int, LinExp], ...] = ()
    grading_positive_count: int | None = None
    pointcount_Y: ProductExpr | None = None       # divisor of the master count
    pointcount: ProductExpr | None = None          # explicit count (E6 row)
    characters: tuple[CharacterFormula, ...] = ()
    named_degrees: tuple[NamedDegree, ...] = ()
    notes: tuple[str, ...] = ()

    def dim_at(self, a) -> Fraction:
        s, i = self.dim_coeffs
        return Fraction(s) * a + i

    def rad_at(self, a) -> Fraction:
        s, i = self.rad_coeffs
        return Fraction(s) * a + i

    def member(self, a: int) -> Member:
        for m in self.members:
            if m.a == a:
                return m
        raise UnknownSeriesError(f"{self.label} has no member at a={a}")


def _pt(s: str) -> Partition:
    """Partition from a digit string such as '3221' (single-digit parts)."""
    return Partition(tuple(int(c) for c in s))


def _pp(alpha: str, beta: str) -> PartitionPair:
    return PartitionPair(_pt(alpha) if alpha else EMPTY, _pt(beta) if beta else EMPTY)


def _exc_member(a: int, carter: str, h: str, ambient: str | None = None) -> Member:
    name = ambient or EXCEPTIONAL_AMBIENTS[a]
    return Member(a, ReductiveSpec((algebra(name),), 0, name), carter, reductive(h))


def _cls_member(a: int, ambient: str, carter: str, h: str, *, family: Family,
                pair: PartitionPair | None = None, partition: Partition | None = None,
                sl_pair=None) -> Member:
    amb = reductive(ambient)
    return Member(a, ReductiveSpec(amb.factors, amb.torus_rank, ambient), carter,
                  reductive(h), family=family, pair=pair, partition=partition,
                  sl_pair=sl_pair)


def _grading(claims: dict) -> tuple[tuple[int, LinExp], ...]:
    return tuple(sorted((i, L(e)) for i, e in claims.items()))


# -- the f4 row ---------------------------------------------------------------

# Shared eight-factor numerator of the master point count.
_MASTER_NUM = ["a", "3a/2", "3a/2+2", "2a+2", "2a+4", "5a/2+4", "3a+6"]

MASTER_POINTCOUNT = pexpr(1, "11a+8", num=_MASTER_NUM, den=["a/2+2"])

_PHI6 = QLaurent.from_q_terms({2: 1, 1: -1, 0: 1})   # q^2 - q + 1


def _f4_series():
    recs = []

    def add(label, pqrs, dims, rads, carter, h_list, *, so8=None, so8_h=None,
            fg="trivial", folding=False, grading=None, gpos=None, Y=None,
            chars=(), notes=()):
        members = tuple(_exc_member(a, c, h) for a, c, h in
                        zip((1, 2, 4, 8), carter, h_list))
        recs.append(SeriesRecord(
            row="f4", label=label, exponents=pqrs, dim_coeffs=dims, rad_coeffs=rads,
            members=members, so8_partition=_pt(so8) if so8 else None,
            so8_h=reductive(so8_h) if so8_h is not None else None,
            fundamental_group=fg, folding=folding,
            grading_claims=_grading(grading or {}), grading_positive_count=gpos,
            pointcount_Y=Y, characters=tuple(chars), notes=tuple(notes)))

    add("g", (1, 0, 0, 0), (6, 10), (6, 9),
        ["A1", "A1", "A1", "A1"], ["sp6", "sl6", "so12", "e7"],
        so8="221111", so8_h="3sl2", folding=True,
        grading={1: "6a+8", 2: "1"},
        Y=pexpr(1, "11a+8", num=["a", "a+2", "3a/2", "3a/2+2", "2a+2"]),
        chars=[CharacterFormula("principal", Fraction(1), L("3a+5"),
                                num=["2a+4", "5a/2+4"], den=["a/2+2", "a+2"])])

    add("gQ", (0, 0, 0, 1), (10, 12), (9, 6),
        ["A~1", "2A1", "2A1", "2A1"], ["sl4", "co7", "so9+sl2", "so13"],
        so8="2222", so8_h="so5",
        grading={1: "8a", 2: "a+6"},
        Y=pexpr(1, "21a/2+6", num=["a/2", "a", "a+2", "a+4"]),
        chars=[CharacterFormula("principal", Fraction(1), L("5a+6"),
                                num=["3a/2", "3a/2+2", "2a+4", "3a+6"],
                                den=["a/2", "a/2+2", "a+2", "a+4"])])

    add("g2", (0, 1, 0, 0), (12, 16), (9, 9),
        ["A1+A~1", "3A1", "3A1", "3A1"], ["2sl2", "sl2+sl3", "sl2+sp6", "sl2+f4"],
        so8="3221", so8_h="sl2", folding=True,
        grading={1: "6a+6", 2: "3a+3", 3: "2"},
        Y=pexpr(1, "19a/2+6", num=["2", "a", "3a/2"]),
        chars=[CharacterFormula("principal", Fraction(1, 2), L("6a+9"),
                                num=["a/2+1", "a+1", "3a/2+2", "2a+4", "5a/2+4", "3a+6"],
                                den=["1", ("a/2+2", 2), ("a+2", 2), "3a/2+3"])],
        notes=["printed degree denominator repeats the numerator factor "
               "q^(a/2+1)-1; with it the expression is not a polynomial in q "
               "at any a, so the duplicate is dropped here"])

    add("g^2", (2, 0, 0, 0), (12, 18), (6, 8),
        ["A2", "A2", "A2", "A2"], ["sl3", "2sl3", "sl6", "e6"],
        so8="3311", so8_h="T2", fg="Z2", folding=True,
        grading={2: "6a+8", 4: "1"},
        Y=pexpr(1, "8a+4", num=["a/2+1", "a", "a+1", "3a/2"]),
        chars=[CharacterFormula("first", Fraction(1, 2), L("6a+9"),
                                num=["a+2", "3a/2+2", "2a+2", "5a/2+4", "3a+6"],
                                den=["1", "a/2+1", "a+1", "a+4", "3a/2+3"]),
               CharacterFormula("second", Fraction(1, 2), L("6a+9"),
                                num=["1", "3a/2+2", "3a/2+3", "2a+2", "2a+4", "5a/2+4"],
                                den=["2", "a/2+1", ("a/2+2", 2), "a+1", "a+2"])])

    add("g3", (0, 0, 1, 0), (16, 18), (9, 6),
        ["A2+A~1", "A2+2A1", "A2+2A1", "A2+2A1"], ["sl2", "gl2", "3sl2", "sl2+so7"],
        grading={1: "6a", 2: "3a+6", 3: "2a", 4: "3"},
        Y=pexpr(1, "15a/2+4", num=["2", "a/2"]),
        chars=[CharacterFormula("principal", Fraction(1), L("8a+9"),
                                num=["a/2+4", "2a-2", "2a+4", "5a/2+4", "3a+6"],
                                den=["2", "6", "a/2", "a/2+2", "a+2"])])

    add("g^2.gQ", (2, 0, 0, 1), (16, 20), (5, 5),
        ["B2", "A3", "A3", "A3"], ["2sl2", "co5", "so7+sl2", "so11"],
        so8="44", so8_h="sl2",
        grading={1: "4a", 2: "a+5", 3: "4a", 4: "a+4", 6: "1"},
        Y=pexpr(1, "11a/2+2", num=["a/2", "a", "a+2"]),
        chars=[CharacterFormula("principal", Fraction(1), L("8a+10"),
                                num=["3a/2", "3a/2+2", "2a+2", "5a/2+4", "3a+6"],
                                den=["2", "a/2", "a/2+2", "a/2+4", "a+2"])],
        notes=["printed stabilizer for the so8 member is 2C; the reductive "
               "centralizer of the (4,4) nilpotent in so8 is sp2 = sl2, and "
               "only that value satisfies the radical identity at a=0",
               "printed grading text gives dim g(a,2) = a+4 and a "
               "one-dimensional g(a,5); the computed grading has g(a,2) of "
               "dimension a+5 and its one-dimensional level at i=6, and only "
               "those values sum to dim g with the quoted g(a,0)"])

    add("gQ^2", (0, 0, 0, 2), (18, 12), (8, 0),
        ["A~2", "2A2", "2A2", "2A2"], ["g2", "g2", "sl2+g2", "2g2"],
        fg="mixed",
        grading={2: "8a", 4: "a+6"},
        Y=pexpr(1, "6a+4", num=["2", "6"]),
        chars=[CharacterFormula("principal", Fraction(1), L("9a+6"),
                                num=["a", "3a/2+2", "2a+4", "5a/2+4", "3a+6"],
                                den=[("2", 2), "6", "a/2+2", "a/2+4"]),
               CharacterFormula("eps=+1", Fraction(1, 2), L("9a+6"),
                                num=["a", "3a/2+2", "2a+4", "5a/2+4", "3a+6",
                                     "9", "1"],
                                den=[("2", 2), "6", "a/2+2", "a/2+4", "3", "7"],
                                a_values=(8,)),
               CharacterFormula("eps=-1", Fraction(1, 2), L("9a+6"),
                                num=["a", "3a/2+2", "2a+4", "5a/2+4", "3a+6"],
                                den=[("2", 2), "6", "a/2+2", "a/2+4"],
                                num_plus=["9", "1"], den_plus=["3", "7"],
                                a_values=(8,))])

    add("g2.gQ", (0, 1, 0, 1), (18, 18), (8, 5),
        ["A~2+A1", "2A2+A1", "2A2+A1", "2A2+A1"], ["sl2", "sl2", "2sl2", "sl2+g2"],
        grading={1: "4a+4", 2: "4a+1", 3: "2a+2", 4: "a+2", 5: "2"},
        Y=pexpr(1, "6a+4", num=["2"]),
        chars=[CharacterFormula("principal", Fraction(1, 3), L("9a+11"),
                                num=["a/2", "a", "3a/2+2", "2a+2", "2a+4",
                                     "5a/2+4", "3a+6"],
                                den=[("2", 2), ("a/2+2", 3), ("a+2", 2)])])

    add("g.g3", (1, 0, 1, 0), (18, 20), (7, 4),
        ["C3(a1)", "A3+A1", "A~3+A~1", "A3+A1"], ["sl2", "gl2", "3sl2", "sl2+so7"],
        grading={1: "4a+2", 2: "3a+2", 3: "2a+4", 4: "2a", 5: "2", 6: "1"},
        Y=pexpr(1, "11a/2+2", num=["2", "a/2"]),
        chars=[CharacterFormula("principal", Fraction(1, 2), L("9a+11"),
                                num=["3a/2", "3a/2+2", "2a+2", "2a+4", "5a/2+4", "3a+6"],
                                den=["1", "3", "a/2+1", "a/2+2", "a+4", "3a/2+3"])])

    add("g2^2", (0, 2, 0, 0), (18, 22), (6, 6),
        ["F4(a3)", "D4(a1)", "D4(a1)", "D4(a1)"], ["0", "T2", "3sl2", "so8"],
        so8="53", so8_h="0", fg="Z2",
        grading={2: "6a+6", 4: "3a+3", 6: "2"},
        Y=pexpr(1, "5a+2", num=[("a/2", 2)]),
        chars=[CharacterFormula("first", Fraction(1, 6), L("9a+11"),
                                num=[("a/2+1", 3), "a", "3a/2", "3a/2+2", "2a+2",
                                     "2a+4", "5a/2+4", "3a+6"],
                                den=[("1", 2), ("a/2", 2), ("a/2+2", 3),
                                     ("a+2", 2), "3a/2+3"],
                                literal_den=(_PHI6,)),
               CharacterFormula("second", Fraction(1, 3), L("9a+11"),
                                num=["a", "3a/2", "3a/2+2", "2a+2", "2a+4",
                                     "5a/2+4", "3a+6"],
                                den=[("2", 2), ("a/2", 2), ("a+2", 2), "3a/2+6"])])

    add("g^2.g2^2", (2, 2, 0, 0), (18, 24), (3, 4),
        ["B3", "D4", "D4", "D4"], ["sl2", "sl3", "sp6", "f4"],
        so8="71", so8_h="0", folding=True,
        Y=pexpr(1, "7a/2", num=["a", "3a/2"]),
        chars=[CharacterFormula("principal", Fraction(1), L("9a+12"),
                                num=["3a/2+2", "2a+2", "2a+4", "5a/2+4", "3a+6"],
                                den=["2", "6", "a/2+2", "a/2+4", "a+4"])])

    add("g.g3.gQ^2", (1, 0, 1, 2), (22, 20), (4, 3),
        ["C3", "A5", "A~5", "A5"], ["sl2", "sl2", "2sl2", "sl2+g2"],
        gpos=10,
        Y=pexpr(1, "2a+2", num=["2"]),
        chars=[CharacterFormula("principal", Fraction(1, 2), L("11a+11"),
                                num=["a", "3a/2", "3a/2+2", "2a+2", "2a+4",
                                     "5a/2+4", "3a+6"],
                                den=["1", "3", "4", "a/2+2", "a/2+3", "a/2+5", "a+4"])])

    add("g2^2.gQ^2", (0, 2, 0, 2), (22, 22), (4, 4),
        ["F4(a2)", "E6(a3)", "E6(a3)", "E6(a3)"], ["0", "0", "sl2", "g2"],
        Y=pexpr(1, "2a+2"),
        chars=[CharacterFormula("principal", Fraction(1, 2), L("11a+11"),
                                num=["a/2+3", "a", "3a/2", "3a/2+2", "2a+2",
                                     "2a+4", "5a/2+4", "3a+6"],
                                den=["1", ("2", 2), ("a/2+2", 3), "a/2+5", "a+6"],
                                den_plus=["3"])])

    add("g^2.g2^2.gQ^2", (2, 2, 0, 2), (22, 24), (3, 3),
        ["F4(a1)", "D5", "D5", "D5"], ["0", "T1", "2sl2", "so7"],
        Y=pexpr(1, "3a/2", num=["a/2"]),
        chars=[CharacterFormula("principal", Fraction(1), L("11a+12"),
                                num=["a/2+4", "2a-2", "2a+2", "2a+4", "5a/2+4", "3a+6"],
                                den=["2", "4", ("6", 2), "a/2", "a/2+8"])])

    add("g^2.g2^2.g3^2.gQ^2", (2, 2, 2, 2), (24, 24), (2, 2),
        ["F4", "E6", "E6", "E6"], ["0", "0", "sl2", "g2"],
        Y=pexpr(1, 0),
        chars=[CharacterFormula("principal", Fraction(1), L("12a+12"),
                                num=["a", "3a/2", "3a/2+2", "2a+2", "2a+4",
                                     "5a/2+4", "3a+6"],
                                den=["2", "6", "8", "12", "a/2+2", "a/2+4", "a/2+8"])])

    return recs


# -- the E6 row ---------------------------------------------------------------

def _phi_display(constant, prefactor, num=(), den=(), num_plus=(), den_plus=()):
    return pexpr(constant, prefactor, num=num, den=den,
                 num_plus=num_plus, den_plus=den_plus)


def _e6_series():
    recs = []

    def add(label, pqrs, dims, rads, carter, h_list, *, pc, chars, named,
            notes=()):
        members = tuple(_exc_member(a, carter, h)
                        for a, h in zip((2, 4, 8), h_list))
        recs.append(SeriesRecord(
            row="e6", label=label, exponents=pqrs, dim_coeffs=dims,
            rad_coeffs=rads, members=members, fundamental_group="mixed",
            pointcount=pc, characters=tuple(chars), named_degrees=tuple(named),
            notes=tuple(notes)))

    e6_pc_core = ["5a/4-2", "3a/2", "3a/2+2", "2a+2", "2a+4", "5a/2+4", "3a+6"]

    add("g.gQ", (1, 0, 0, 1), (15, 16), (9, 5), "A2+A1",
        ["gl3", "gl4", "sl6"],
        pc=pexpr(1, "3a+4", num=["2"] + e6_pc_core,
                 den=["3", "a/4", "a/2", "a/2+1", "a/2+2"]),
        chars=[
            CharacterFormula("pair-", Fraction(1, 2), L("15a/2+8"),
                             num=["2", "5a/4-2", "3a/2+2", "2a+2", "2a+4", "3a+6",
                                  "a/4+2", "5a/4+2"],
                             den=["3", "a/4", "a/2", "a/2+1", "a/2+2", "a/2+4",
                                  "3a/4+1", "3a/4+3"],
                             doubled_at=2),
            CharacterFormula("pair+", Fraction(1, 2), L("15a/2+8"),
                             num=["2", "5a/4-2", "3a/2+2", "2a+2", "2a+4", "3a+6"],
                             den=["3", "a/4", "a/2", "a/2+1", "a/2+2", "a/2+4"],
                             num_plus=["a/4+2", "5a/4+2"],
                             den_plus=["3a/4+1", "3a/4+3"],
                             doubled_at=2),
        ],
        named=[
            NamedDegree(2, "pair-", "phi_{64,13}", 64, 13,
                        _phi_display(1, 13, num=[6, 8, 12], den=[1, (3, 2)])),
            NamedDegree(4, "pair+", "phi_{120,25}", 120, 25,
                        _phi_display(Fraction(1, 2), 25, num=[8, 10, 12, 18],
                                     den=[1, 3, 4, 6], num_plus=[3, 7],
                                     den_plus=[4, 6])),
            NamedDegree(4, "pair-", "phi_{105,26}", 105, 26,
                        _phi_display(Fraction(1, 2), 25, num=[8, 10, 12, 18, 3, 7],
                                     den=[1, 3, 4, 6, 4, 6])),
            NamedDegree(8, "pair+", "phi_{210,52}", 210, 52,
                        _phi_display(Fraction(1, 2), 52, num=[14, 18, 20, 30],
                                     den=[3, 4, 5, 6], num_plus=[4, 12],
                                     den_plus=[7, 9])),
            NamedDegree(8, "pair-", "phi_{160,55}", 160, 55,
                        _phi_display(Fraction(1, 2), 52, num=[14, 18, 20, 30, 4, 12],
                                     den=[3, 4, 5, 6, 7, 9])),
        ],
        notes=["printed point count lacks the leading q^2-1 numerator factor "
               "carried by every other count in this row; without it the "
               "degree falls two short of dim O_a and the group-order "
               "quotient is missed by exactly q^2-1",
               "printed degree denominator factor q^(a/4-1)-1 corrected to "
               "q^(a/4)-1: the printed form vanishes identically at a=4 and "
               "misses the explicit degrees at a=2 and a=8"])

    add("g^2.gQ^2", (2, 0, 0, 2), (20, 20), (5, 4), "A4",
        ["gl2", "gl3", "sl5"],
        pc=pexpr(1, "15a/2+6", num=["2"] + e6_pc_core,
                 den=["3", "a/4", "a/2", "a/2+1"]),
        chars=[
            CharacterFormula("pair-", Fraction(1, 2), L("10a+10"),
                             num=["3a/4-1", "3a/4", "a+4", "2a-2", "2a+2",
                                  "5a/2+4", "3a+6", "2", "a+2"],
                             den=["4", "6", "a/4", "a/4+1", "a/2", ("a/2+1", 2),
                                  "a/2+1", "a/2+3"],
                             doubled_at=2),
            CharacterFormula("pair+", Fraction(1, 2), L("10a+10"),
                             num=["3a/4-1", "3a/4", "a+4", "2a-2", "2a+2",
                                  "5a/2+4", "3a+6"],
                             den=["4", "6", "a/4", "a/4+1", "a/2", ("a/2+1", 2)],
                             num_plus=["2", "a+2"], den_plus=["a/2+1", "a/2+3"],
                             doubled_at=2),
        ],
        named=[
            NamedDegree(2, "pair-", "phi_{81,6}", 81, 6, None),
            NamedDegree(4, "pair+", "phi_{420,13}", 420, 13, None),
            NamedDegree(4, "pair-", "phi_{336,14}", 336, 14, None),
            NamedDegree(8, "pair+", "phi_{2268,30}", 2268, 30, None),
            NamedDegree(8, "pair-", "phi_{1296,33}", 1296, 33, None),
        ])

    add("g.g3.gQ", (1, 0, 1, 1), (21, 20), (6, 3), "A4+A1",
        ["T1", "T2", "gl3"],
        pc=pexpr(1, "15a/2+6", num=["2"] + e6_pc_core, den=["1", "3", "a/4"]),
        chars=[
            CharacterFormula("pair", Fraction(1, 2), L("21a/2+10"),
                             num=["2", "5a/4-2", "3a/2", "3a/2+2", "2a+2",
                                  "2a+4", "5a/2+4", "3a+6"],
                             den=["1", ("3", 2), "a/4", "a/2+1", "a/2+3",
                                  "a/2+5", "3a/2+3"],
                             doubled_at=2),
        ],
        named=[
            NamedDegree(2, "pair", "phi_{60,5}", 60, 5, None),
            NamedDegree(4, "pair", "phi_{512,11}", 512, 11, None),
            NamedDegree(4, "pair", "phi_{512,12}", 512, 12, None),
            NamedDegree(8, "pair", "phi_{4096,26}", 4096, 26, None),
            NamedDegree(8, "pair", "phi_{4096,27}", 4096, 27, None),
        ])

    add("g^2.g3.gQ", (2, 0, 1, 1), (21, 22), (5, 3), "D5(a1)",
        ["T1", "gl2", "sl4"],
        pc=pexpr(1, "8a+7", num=["2"] + e6_pc_core, den=["3", "a/4", "a/2"]),
        chars=[
            CharacterFormula("psi", Fraction(1, 2), L("21a/2+11"),
                             num=["a/4+4", "3a/4", "5a/4-2", "3a/2+2", "2a+2",
                                  "2a+4", "5a/2+4", "3a+6"],
                             den=[("3", 2), "a/4", "a/4+1", "a/2", "a/2+4",
                                  "a/2+8", "3a/4+3"],
                             doubled_at=2),
            CharacterFormula("psi'", Fraction(1, 2), L("21a/2+11"),
                             num=["3a/4-1", "5a/4-1", "3a/2", "3a/2+2", "2a+2",
                                  "2a+4", "5a/2+4", "3a+6"],
                             den=["3", "5", "a/4", "a/2", ("a/2+2", 2), "3a/4",
                                  "3a/2+6"],
                             doubled_at=2),
        ],
        named=[
            NamedDegree(2, "psi", "phi_{64,4}", 64, 4, None),
            NamedDegree(4, "psi", "phi_{420,10}", 420, 10, None),
            NamedDegree(4, "psi'", "phi_{336,11}", 336, 11, None),
            NamedDegree(8, "psi", "phi_{2800,25}", 2800, 25, None),
            NamedDegree(8, "psi'", "phi_{2100,28}", 2100, 28, None),
        ])

    add("g^2.g3^2.gQ^2", (2, 0, 2, 2), (24, 22), (3, 2), "E6(a1)",
        ["0", "T1", "sl3"],
        pc=pexpr(1, "21a/2+7", num=["2"] + e6_pc_core, den=["3", "a/4"]),
        chars=[
            CharacterFormula("psi", Fraction(1, 2), L("12a+11"),
                             num=["a/2+2", "3a/4-1", "3a/4", "2a-2", "2a+2",
                                  "2a+4", "5a/2+4", "3a+6"],
                             den=[("3", 2), "4", "12", "a/4", "a/4+1",
                                  "a/2+1", "a/2+5"],
                             doubled_at=2),
            CharacterFormula("psi'", Fraction(1, 2), L("12a+11"),
                             num=["a/2+5", "5a/4-2", "3a/2", "3a/2+2", "2a+2",
                                  "2a+4", "5a/2+4", "3a+6"],
                             den=["3", "4", ("6", 2), "a/4", "a/2+2", "a/2+4",
                                  "a+10"],
                             doubled_at=2),
        ],
        named=[
            NamedDegree(2, "psi", "phi_{6,1}", 6, 1, None),
            NamedDegree(4, "psi", "phi_{120,4}", 120, 4, None),
            NamedDegree(4, "psi'", "phi_{105,5}", 105, 5, None),
            NamedDegree(8, "psi", "phi_{2800,13}", 2800, 13, None),
            NamedDegree(8, "psi'", "phi_{2100,16}", 2100, 16, None),
        ],
        notes=["printed psi repeats q^(3a/4)-1 twice; the first copy is "
               "corrected to q^(3a/4-1)-1 (the same adjacent pair appears in "
               "the A4-series formula), restoring polynomiality and the "
               "companion degrees",
               "printed psi' has prefactor exponent N-21a/2-11 and a "
               "denominator pair q^(3a/2)-1, q^(3a/2+2)-1 that cancels its "
               "own numerator; corrected to N-12a-11 with denominator pair "
               "q^(a/2+2)-1, q^(a/2+4)-1, which reproduces phi_{6,1}, "
               "phi_{120,4}, phi_{105,5}, phi_{2800,13} and phi_{2100,16} "
               "exactly",
               "stabilizer for the a=4 member printed as 0; the radical "
               "identity forces a one-dimensional torus"])

    return recs


# -- the subexceptional, Severi and sub-Severi rows ---------------------------


def _sub_members(spec):
    """Members over [sp6, sl6, so12, e7] from (carter, h, datum) triples."""
    out = []
    table = {1: ("sp6", Family("sp", 6)), 2: ("sl6", Family("sl", 6)),
             4: ("so12", Family("so", 12)), 8: ("e7", None)}
    for a, carter, h, datum in spec:
        ambient, fam = table[a]
        if fam is None:
            out.append(_exc_member(8, carter, h, ambient="e7"))
        elif isinstance(datum, PartitionPair):
            out.append(_cls_member(a, ambient, carter, h, family=fam, pair=datum))
        else:
            out.append(_cls_member(a, ambient, carter, h, family=fam, partition=datum))
    return tuple(out)


def _other_rows():
    recs = []

    def add(row, label, dims, rads, members, *, exponents=None, notes=()):
        recs.append(SeriesRecord(row=row, label=label, dim_coeffs=dims,
                                 rad_coeffs=rads, members=members,
                                 exponents=exponents, notes=tuple(notes)))

    tor = "subexceptional torus factors restored: the printed tables quote "\
          "only the semisimple type, and the radical identity plus the "\
          "centralizer oracle fix the full reductive centralizer"

    add("subexceptional", "g", (4, 2), (4, 1), _sub_members([
        (1, "(11|1)", "so5", _pp("11", "1")),
        (2, "(21111)", "gl4", _pt("21111")),
        (4, "(21111|-)", "sl2+so8", _pp("21111", "")),
        (8, "A1", "so12", None)]),
        notes=["printed h for the sl6 member is sl4(so6); the centralizer is "
               "gl4 and the identity needs the torus", tor])

    add("subexceptional", "gQ", (6, 4), (5, 2), _sub_members([
        (1, "(21|-)", "gl2", _pp("21", "")),
        (2, "(2211)", "2sl2+T1", _pt("2211")),
        (4, "(2211|-)", "so5+2sl2", _pp("2211", "")),
        (8, "2A1", "sl2+so9", None)]),
        notes=["printed h for the so12 member is sl2+so5; the centralizer of "
               "the (2,2,2,2,1,1,1,1) nilpotent is sp4+so4 = so5+2sl2 and the "
               "radical identity requires dimension 16", tor])

    add("subexceptional", "gAP2", (6, 6), (3, 3), _sub_members([
        (1, "(2|1)", "sl2", _pp("2", "1")),
        (2, "(222)", "sl3", _pt("222")),
        (4, "(222|-)", "sp6", _pp("222", "")),
        (8, "3A1''", "f4", None)]))

    add("subexceptional", "gQ^2", (10, 4), (4, 0), _sub_members([
        (1, "(3|-)", "sl2", _pp("3", "")),
        (2, "(33)", "sl2", _pt("33")),
        (4, "(33|-)", "2sl2", _pp("33", "")),
        (8, "2A2", "sl2+g2", None)]))

    add("subexceptional", "gAP2^2.gQ", (10, 4), (3, 1), _sub_members([
        (1, "(1|2)", "sl2", _pp("1", "2")),
        (2, "(411)", "gl2", _pt("411")),
        (4, "(411|-)", "3sl2", _pp("411", "")),
        (8, "A3", "sl2+so7", None)]))

    add("subexceptional", "gAP2.g", (10, 6), (3, 2), _sub_members([
        (1, "(-|21)", "0", _pp("", "21")),
        (2, "(42)", "T1", _pt("42")),
        (4, "(42|-)", "2sl2", _pp("42", "")),
        (8, "A3+A1''", "so7", None)]))

    add("subexceptional", "g^2.gAP2^2.gQ^2", (12, 6), (2, 1), _sub_members([
        (1, "(-|3)", "0", _pp("", "3")),
        (2, "(6)", "0", _pt("6")),
        (4, "(6|-)", "sl2", _pp("6", "")),
        (8, "A5", "g2", None)]))

    add("subexceptional", "g^2.gQ^2", (12, 4), (3, 0), _sub_members([
        (2, "(51)", "T1", _pt("51")),
        (4, "(51|-)", "T2", _pp("51", "")),
        (8, "A4", "gl3", None)]),
        notes=["printed h column reads 0, 0, sl3; the centralizers are the "
               "tori S(gl1 x gl1), so2 x so2 and gl3, as the identity requires", tor])

    add("subexceptional", "g.gQ", (9, 4), (5, 1), _sub_members([
        (2, "(321)", "T2", _pt("321")),
        (4, "(321|-)", "sl2+T2", _pp("321", "")),
        (8, "A2+A1", "gl4", None)]),
        notes=[tor])

    add("subexceptional", "g^2", (8, 2), (4, 0), _sub_members([
        (2, "(3111)", "gl3", _pt("3111")),
        (4, "(3111|-)", "co6", _pp("3111", "")),
        (8, "A2", "sl6", None)]),
        notes=["printed radical dimension 5a+1 duplicates the line above; "
               "the stabilizer bookkeeping gives 4a for all three members", tor])

    # Severi row: ambient algebras sl3, 2sl3, sl6, e6
    def sev_members(spec):
        table = {1: ("sl3", Family("sl", 3)), 2: ("2sl3", Family("2sl", 3)),
                 4: ("sl6", Family("sl", 6)), 8: ("e6", None)}
        out = []
        for a, carter, h, datum in spec:
            ambient, fam = table[a]
            if fam is None:
                out.append(_exc_member(8, carter, h, ambient="e6"))
            elif fam.kind == "2sl":
                out.append(_cls_member(a, ambient, carter, h, family=fam,
                                       sl_pair=datum))
            else:
                out.append(_cls_member(a, ambient, carter, h, family=fam,
                                       partition=datum))
        return tuple(out)

    swap = "printed Carter labels and stabilizers of the two Severi series "\
           "are exchanged: the dimension formulas force 2A1 (dim 32) on the "\
           "V line and 2A2 (dim 48) on the VV* line, and the stabilizers "\
           "follow the centralizer oracle"

    add("severi", "V", (4, 0), (3, 0), sev_members([
        (1, "(21)", "T1", _pt("21")),
        (2, "((21),(21))", "T2", (_pt("21"), _pt("21"))),
        (4, "(2211)", "2sl2+T1", _pt("2211")),
        (8, "2A1", "co7", None)]), notes=[swap])

    add("severi", "gQ=VV*", (6, 0), (2, 0), sev_members([
        (1, "(3)", "0", _pt("3")),
        (2, "((3),(3))", "0", (_pt("3"), _pt("3"))),
        (4, "(33)", "sl2", _pt("33")),
        (8, "2A2", "g2", None)]), notes=[swap])

    # sub-Severi row: sl2, sl3, sp6, f4
    add("subseveri", "gQ=W", (4, -2), (1, 0), (
        _cls_member(1, "sl2", "(2)", "0", family=Family("sl", 2),
                    partition=_pt("2")),
        _cls_member(2, "sl3", "(3)", "0", family=Family("sl", 3),
                    partition=_pt("3")),
        _cls_member(4, "sp6", "(3|-)", "sl2", family=Family("sp", 6),
                    pair=_pp("3", "")),
        _exc_member(8, "A~2", "g2", ambient="f4")))

    return recs


# -- assembled registry --------------------------------------------------------


@lru_cache(maxsize=1)
def all_series() -> tuple[SeriesRecord, ...]:
    return tuple(_f4_series() + _e6_series() + _other_rows())


def rows() -> tuple[str, ...]:
    return ("f4", "e6", "subexceptional", "severi", "subseveri")


def series_by_row(row: str) -> tuple[SeriesRecord, ...]:
    if row not in rows():
        raise UnknownSeriesError(f"unknown row {row!r}")
    return tuple(r for r in all_series() if r.row == row)


def lookup(row: str, label: str) -> SeriesRecord:
    for r in all_series():
        if r.row == row and r.label == label:
            return r
    raise UnknownSeriesError(f"no series {label!r} in row {row!r}")


# Closure order of the f4-row series, upper covers lower.
HASSE_EDGES_F4 = (
    ("g^2.g2^2.g3^2.gQ^2", "g^2.g2^2.gQ^2"),
    ("g^2.g2^2.gQ^2", "g2^2.gQ^2"),
    ("g2^2.gQ^2", "g^2.g2^2"),
    ("g2^2.gQ^2", "g.g3.gQ^2"),
    ("g^2.g2^2", "g2^2"),
    ("g.g3.gQ^2", "g2^2"),
    ("g2^2", "g.g3"),
    ("g.g3", "g2.gQ"),
    ("g.g3", "g^2.gQ"),
    ("g2.gQ", "g3"),
    ("g2.gQ", "gQ^2"),
    ("g^2.gQ", "g3"),
    ("g3", "g^2"),
    ("gQ^2", "g2"),
    ("g^2", "g2"),
    ("g2", "gQ"),
    ("gQ", "g"),
)


def hasse_edges() -> tuple[tuple[str, str], ...]:
    return HASSE_EDGES_F4
