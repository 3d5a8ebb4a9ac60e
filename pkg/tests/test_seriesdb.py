import json
from fractions import Fraction as F

import pytest

from orbitseries import serialize
from orbitseries.exactpoly import LinExp, QLaurent
from orbitseries.partitions import Family, orbit_dim_classical
from orbitseries.seriesdb import (MASTER_POINTCOUNT, L, UnknownSeriesError,
                                  all_series, group_order, hasse_edges, lookup,
                                  reductive, rows, series_by_row)


class TestExponentParser:
    @pytest.mark.parametrize("text,c0,c1", [
        ("3a/2+2", 2, F(3, 2)),
        ("a", 0, 1),
        ("a/4", 0, F(1, 4)),
        ("5a/4-2", -2, F(5, 4)),
        ("11a+8", 8, 11),
        ("2", 2, 0),
        ("21a/2+6", 6, F(21, 2)),
        ("-2a-2", -2, -2),
    ])
    def test_parse(self, text, c0, c1):
        assert L(text) == LinExp(c0, c1)


class TestReductiveSpecs:
    def test_dims(self):
        assert reductive("sl2+g2").dim == 17
        assert reductive("3sl2").dim == 9
        assert reductive("co7").dim == 22
        assert reductive("gl4").dim == 16
        assert reductive("T2").dim == 2
        assert reductive("0").dim == 0
        assert reductive("so5+2sl2").dim == 16

    def test_group_orders(self):
        sp6 = group_order(reductive("sp6"))
        num, den = sp6.expand(0)
        expect = QLaurent.q_power(9)
        for d in (2, 4, 6):
            expect = expect * (QLaurent.q_power(d) - 1)
        assert num == expect and den == QLaurent.one()

        torus = group_order(reductive("T2"))
        num, den = torus.expand(0)
        assert num == (QLaurent.q_power(1) - 1) ** 2

        e7 = group_order(reductive("e7"))
        assert e7.degree_in_q(0) == 63 + sum((2, 6, 8, 10, 12, 14, 18))

    def test_gl_order_matches_general_linear_group(self):
        # |GL_n(q)| = q^(n(n-1)/2) prod_{i<=n} (q^i - 1)
        gl3 = group_order(reductive("gl3"))
        val = gl3.eval_at(0, 2)
        assert val == 2 ** 3 * (2 - 1) * (4 - 1) * (8 - 1)


class TestRegistryShape:
    def test_counts(self):
        assert len(all_series()) == 33
        expected = {"f4": 15, "e6": 5, "subexceptional": 10, "severi": 2,
                    "subseveri": 1}
        for row, count in expected.items():
            assert len(series_by_row(row)) == count

    def test_lookup_examples(self):
        g = lookup("f4", "g")
        assert g.dim_coeffs == (6, 10)
        assert [m.h.name for m in g.members] == ["sp6", "sl6", "so12", "e7"]
        assert g.so8_h.name == "3sl2"

        gq2 = lookup("f4", "gQ^2")
        assert gq2.rad_coeffs == (8, 0)
        assert gq2.fundamental_group == "mixed"

        w = lookup("subseveri", "gQ=W")
        assert w.dim_coeffs == (4, -2)

    def test_unknown(self):
        with pytest.raises(UnknownSeriesError):
            lookup("f4", "nonsense")
        with pytest.raises(UnknownSeriesError):
            series_by_row("f5")

    def test_five_label_rows_have_so8_data(self):
        with_so8 = {r.label for r in series_by_row("f4")
                    if r.so8_partition is not None}
        assert with_so8 == {"g", "gQ", "g2", "g^2", "g^2.gQ", "g2^2", "g^2.g2^2"}

    def test_master_pointcount_degree(self):
        for a in (1, 2, 4, 8):
            assert MASTER_POINTCOUNT.degree_in_q(a) == 24 * a + 24

    def test_minimal_series_count_reduction(self):
        z = MASTER_POINTCOUNT / lookup("f4", "g").pointcount_Y
        num, den = z.reduced(2)
        assert den == QLaurent.one() and num.is_q_polynomial()
        # frozen from the independent |G|/|K| integer computation
        assert num.eval_at(2) == 5081895
        assert num.eval_at(3) == 32988606560
        num1, den1 = z.reduced(1)
        assert not (num1.is_q_polynomial() and den1 == QLaurent.one())
        assert num1.degree_in_q() - den1.degree_in_q() == 16


class TestInternalConsistency:
    def test_radical_identity_all_rows(self):
        for rec in all_series():
            for m in rec.members:
                lhs = m.ambient.dim - rec.dim_at(m.a) - m.h.dim
                assert lhs == rec.rad_at(m.a), (rec.row, rec.label, m.a)

    def test_so8_column(self):
        for rec in series_by_row("f4"):
            if rec.so8_partition is None:
                continue
            d0 = orbit_dim_classical(rec.so8_partition, Family("so", 8))
            assert d0 == rec.dim_coeffs[1]
            assert 28 - d0 - rec.so8_h.dim == rec.rad_coeffs[1]

    def test_classical_members_match_formulas(self):
        for rec in all_series():
            for m in rec.members:
                if m.family is None:
                    continue
                got = orbit_dim_classical(m.orbit_datum(), m.family)
                assert got == rec.dim_at(m.a), (rec.row, rec.label, m.a)

    def test_hasse_edges_reference_known_series(self):
        labels = {r.label for r in series_by_row("f4")}
        for up, dn in hasse_edges():
            assert up in labels and dn in labels

    def test_hasse_dims_strictly_decrease(self):
        for up, dn in hasse_edges():
            u, d = lookup("f4", up), lookup("f4", dn)
            for a in (1, 2, 4, 8):
                assert u.dim_at(a) > d.dim_at(a)


class TestSerialization:
    def test_round_trip_exact(self):
        data = serialize.registry_to_json()
        text = json.dumps(data, sort_keys=True)
        back = serialize.registry_from_json(json.loads(text))
        assert back == all_series()

    def test_json_is_deterministic(self):
        a = json.dumps(serialize.registry_to_json(), sort_keys=True)
        b = json.dumps(serialize.registry_to_json(), sort_keys=True)
        assert a == b
