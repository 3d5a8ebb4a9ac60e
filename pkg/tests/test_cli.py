import json

from orbitseries import serialize
from orbitseries.cli import main
from orbitseries.seriesdb import all_series


def run(capsys, *argv):
    code = main(list(argv))
    out = capsys.readouterr()
    return code, out.out, out.err


class TestList:
    def test_severi_row(self, capsys):
        code, out, _ = run(capsys, "list", "--row", "severi")
        assert code == 0
        lines = [l for l in out.splitlines() if l.strip()]
        assert len(lines) == 2
        assert "V" in lines[0] and "VV*" in lines[1]

    def test_all_rows(self, capsys):
        code, out, _ = run(capsys, "list")
        assert code == 0
        assert len(out.splitlines()) == 33


class TestShow:
    def test_show_record(self, capsys):
        code, out, _ = run(capsys, "show", "f4", "gQ^2")
        assert code == 0
        assert "18a+12" in out and "fundamental group: mixed" in out

    def test_unknown_series(self, capsys):
        code, _, err = run(capsys, "show", "f4", "bogus")
        assert code == 2
        assert "error" in err


class TestDiagram:
    def test_example_picture(self, capsys):
        code, out, _ = run(capsys, "diagram", "f4", "g.g3.gQ^2",
                           "--algebra", "e8")
        assert code == 0
        assert out.strip() == "2 0 0 0 1 0 1 / branch 0"

    def test_f4_picture(self, capsys):
        code, out, _ = run(capsys, "diagram", "f4", "g.g3.gQ^2",
                           "--algebra", "f4")
        assert out.strip() == "1 0 1 2"


class TestGrading:
    def test_json_output(self, capsys):
        code, out, _ = run(capsys, "grading", "f4", "gQ", "--algebra", "e7",
                           "--json")
        assert code == 0
        data = json.loads(out)
        assert data["1"] == 32 and data["2"] == 10


class TestPoints:
    def test_value_is_group_order_quotient(self, capsys):
        code, out, _ = run(capsys, "points", "f4", "g", "--a", "2", "--q", "2")
        assert code == 0
        # |E6(F_2)| / |K(F_2)|, frozen from the independent order computation
        assert out.strip() == "5081895"

    def test_polynomial_output(self, capsys):
        code, out, _ = run(capsys, "points", "f4", "g", "--a", "2")
        assert code == 0
        assert out.startswith("q^22")


class TestVerify:
    def test_verify_subset_and_json(self, capsys, tmp_path):
        path = tmp_path / "report.json"
        code, out, _ = run(capsys, "verify", "--suite", "dims", "--json",
                           str(path))
        assert code == 0
        payload = json.loads(path.read_text())
        assert payload["summary"]["fail"] == 0
        assert "passed" in out

    def test_verify_json_matches_text_counts(self, capsys, tmp_path):
        path = tmp_path / "r.json"
        code, out, _ = run(capsys, "verify", "--suite", "gradings", "--json",
                           str(path))
        payload = json.loads(path.read_text())
        total = sum(payload["summary"].values())
        assert total == len(payload["results"])
        assert f"{payload['summary']['pass']} passed" in out


class TestExport:
    def test_json_round_trip(self, capsys, tmp_path):
        path = tmp_path / "registry.json"
        code, _, _ = run(capsys, "export", "--format", "json", "--out", str(path))
        assert code == 0
        data = json.loads(path.read_text())
        assert serialize.registry_from_json(data) == all_series()

    def test_csv(self, capsys):
        code, out, _ = run(capsys, "export", "--format", "csv")
        assert code == 0
        header, *rows = [l for l in out.splitlines() if l]
        assert header.startswith("row,label")
        assert len(rows) == sum(len(r.members) for r in all_series())

    def test_latex(self, capsys):
        code, out, _ = run(capsys, "export", "--format", "latex")
        assert code == 0
        assert out.count(r"\begin{array}") == 33
        assert r"\dim O_a = 6a+10" in out


class TestUsage:
    def test_bad_subcommand(self, capsys):
        assert main(["frobnicate"]) == 2

    def test_bad_flag_value(self, capsys):
        assert main(["points", "f4", "g", "--a", "3"]) == 2
