"""Lossless JSON encoding of the registry.

The export mirrors the record structure field by field; ``registry_from_json``
rebuilds equal SeriesRecord objects, which the round-trip test relies on.
"""

from __future__ import annotations

from fractions import Fraction

from .exactpoly import Cyclo, LinExp, Literal, ProductExpr, QLaurent
from .partitions import Family, Partition, PartitionPair
from . import seriesdb as db


def _frac(x: Fraction) -> list[int]:
    return [x.numerator, x.denominator]


def _unfrac(v) -> Fraction:
    return Fraction(v[0], v[1])


def linexp_to_json(e: LinExp) -> dict:
    return {"c0": _frac(e.c0), "c1": _frac(e.c1)}


def linexp_from_json(d) -> LinExp:
    return LinExp(_unfrac(d["c0"]), _unfrac(d["c1"]))


def qlaurent_to_json(p: QLaurent) -> list:
    return [list(t) for t in p.to_triples()]


def qlaurent_from_json(v) -> QLaurent:
    return QLaurent.from_triples(tuple(tuple(t) for t in v))


def product_to_json(e: ProductExpr) -> dict:
    factors = []
    for f, m in e.factors:
        if isinstance(f, Cyclo):
            factors.append({"kind": "cyclo", "exponent": linexp_to_json(f.exponent),
                            "sign": f.sign, "mult": m})
        else:
            factors.append({"kind": "literal", "value": qlaurent_to_json(f.value),
                            "mult": m})
    return {"constant": _frac(e.constant),
            "prefactor": linexp_to_json(e.prefactor_exponent),
            "factors": factors}


def product_from_json(d) -> ProductExpr:
    factors = []
    for f in d["factors"]:
        if f["kind"] == "cyclo":
            factors.append((Cyclo(linexp_from_json(f["exponent"]), f["sign"]),
                            f["mult"]))
        else:
            factors.append((Literal(qlaurent_from_json(f["value"])), f["mult"]))
    return ProductExpr(_unfrac(d["constant"]), linexp_from_json(d["prefactor"]),
                       tuple(factors))


def _partition_to_json(p: Partition | None):
    return None if p is None else list(p.parts)


def _partition_from_json(v) -> Partition | None:
    return None if v is None else Partition(tuple(v))


def _pair_to_json(pp: PartitionPair | None):
    if pp is None:
        return None
    return {"alpha": list(pp.alpha.parts), "beta": list(pp.beta.parts)}


def _pair_from_json(v) -> PartitionPair | None:
    if v is None:
        return None
    return PartitionPair(Partition(tuple(v["alpha"])), Partition(tuple(v["beta"])))


def member_to_json(m: db.Member) -> dict:
    return {"a": m.a, "ambient": m.ambient.name, "carter": m.carter,
            "h": m.h.name,
            "family": None if m.family is None else [m.family.kind, m.family.n],
            "pair": _pair_to_json(m.pair),
            "partition": _partition_to_json(m.partition),
            "sl_pair": None if m.sl_pair is None else
            [list(m.sl_pair[0].parts), list(m.sl_pair[1].parts)]}


def member_from_json(d) -> db.Member:
    amb = db.reductive(d["ambient"])
    amb = db.ReductiveSpec(amb.factors, amb.torus_rank, d["ambient"])
    fam = None if d["family"] is None else Family(d["family"][0], d["family"][1])
    sl_pair = None
    if d["sl_pair"] is not None:
        sl_pair = (Partition(tuple(d["sl_pair"][0])),
                   Partition(tuple(d["sl_pair"][1])))
    return db.Member(d["a"], amb, d["carter"], db.reductive(d["h"]), family=fam,
                     pair=_pair_from_json(d["pair"]),
                     partition=_partition_from_json(d["partition"]),
                     sl_pair=sl_pair)


def _entries_to_json(entries) -> list:
    return [[linexp_to_json(e), m] for e, m in entries]


def _entries_from_json(v) -> tuple:
    return tuple((linexp_from_json(e), m) for e, m in v)


def character_to_json(c: db.CharacterFormula) -> dict:
    return {"name": c.name, "constant": _frac(c.constant),
            "shift": linexp_to_json(c.shift),
            "num": _entries_to_json(c.num), "den": _entries_to_json(c.den),
            "num_plus": _entries_to_json(c.num_plus),
            "den_plus": _entries_to_json(c.den_plus),
            "literal_den": [qlaurent_to_json(v) for v in c.literal_den],
            "a_values": list(c.a_values), "doubled_at": c.doubled_at}


def character_from_json(d) -> db.CharacterFormula:
    return db.CharacterFormula(
        d["name"], _unfrac(d["constant"]), linexp_from_json(d["shift"]),
        num=_entries_from_json(d["num"]), den=_entries_from_json(d["den"]),
        num_plus=_entries_from_json(d["num_plus"]),
        den_plus=_entries_from_json(d["den_plus"]),
        literal_den=tuple(qlaurent_from_json(v) for v in d["literal_den"]),
        a_values=tuple(d["a_values"]), doubled_at=d["doubled_at"])


def named_to_json(n: db.NamedDegree) -> dict:
    return {"a": n.a, "variant": n.variant, "label": n.label,
            "weyl_dim": n.weyl_dim, "b_index": n.b_index,
            "display": None if n.display is None else product_to_json(n.display)}


def named_from_json(d) -> db.NamedDegree:
    disp = None if d["display"] is None else product_from_json(d["display"])
    return db.NamedDegree(d["a"], d["variant"], d["label"], d["weyl_dim"],
                          d["b_index"], disp)


def record_to_json(rec: db.SeriesRecord) -> dict:
    return {
        "row": rec.row, "label": rec.label,
        "exponents": None if rec.exponents is None else list(rec.exponents),
        "dim_coeffs": list(rec.dim_coeffs), "rad_coeffs": list(rec.rad_coeffs),
        "members": [member_to_json(m) for m in rec.members],
        "so8_partition": _partition_to_json(rec.so8_partition),
        "so8_h": None if rec.so8_h is None else rec.so8_h.name,
        "fundamental_group": rec.fundamental_group,
        "folding": rec.folding,
        "grading_claims": [[i, linexp_to_json(e)] for i, e in rec.grading_claims],
        "grading_positive_count": rec.grading_positive_count,
        "pointcount_Y": None if rec.pointcount_Y is None else
        product_to_json(rec.pointcount_Y),
        "pointcount": None if rec.pointcount is None else
        product_to_json(rec.pointcount),
        "characters": [character_to_json(c) for c in rec.characters],
        "named_degrees": [named_to_json(n) for n in rec.named_degrees],
        "notes": list(rec.notes),
    }


def record_from_json(d) -> db.SeriesRecord:
    return db.SeriesRecord(
        row=d["row"], label=d["label"],
        exponents=None if d["exponents"] is None else tuple(d["exponents"]),
        dim_coeffs=tuple(d["dim_coeffs"]), rad_coeffs=tuple(d["rad_coeffs"]),
        members=tuple(member_from_json(m) for m in d["members"]),
        so8_partition=_partition_from_json(d["so8_partition"]),
        so8_h=None if d["so8_h"] is None else db.reductive(d["so8_h"]),
        fundamental_group=d["fundamental_group"], folding=d["folding"],
        grading_claims=tuple((i, linexp_from_json(e))
                             for i, e in d["grading_claims"]),
        grading_positive_count=d["grading_positive_count"],
        pointcount_Y=None if d["pointcount_Y"] is None else
        product_from_json(d["pointcount_Y"]),
        pointcount=None if d["pointcount"] is None else
        product_from_json(d["pointcount"]),
        characters=tuple(character_from_json(c) for c in d["characters"]),
        named_degrees=tuple(named_from_json(n) for n in d["named_degrees"]),
        notes=tuple(d["notes"]))


def registry_to_json() -> dict:
    return {"series": [record_to_json(r) for r in db.all_series()],
            "hasse_f4": [list(e) for e in db.hasse_edges()]}


def registry_from_json(data) -> tuple[db.SeriesRecord, ...]:
    return tuple(record_from_json(d) for d in data["series"])
