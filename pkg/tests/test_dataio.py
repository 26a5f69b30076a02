import json

import pytest

from fuzzydea.dataio import (
    Deviation,
    FuzzyDataset,
    FuzzyDmu,
    Report,
    ReportRow,
    fixture_path,
    list_fixtures,
    load_dataset,
    load_dataset_path,
    load_fixture,
    read_report,
    write_dataset,
    write_report,
)
from fuzzydea.errors import DataError, ParseError, SchemaError
from fuzzydea.trifuzzy import TriFuzzy

GOOD_JSON = """
{
  "name": "toy",
  "inputs": ["I1"],
  "outputs": ["O1", "O2"],
  "dmus": [
    {"name": "a", "inputs": [[1, 2, 3]], "outputs": [4, [1, 1.5, 2]]},
    {"name": "b", "inputs": [2.5], "outputs": [[3, 4, 5], 6]}
  ]
}
"""

GOOD_CSV = """# name=toy
dmu,in:I1,out:O1,out:O2
a,1;2;3,4,1;1.5;2
b,2.5,3;4;5,6
"""


class TestJsonLoading:
    def test_loads_shapes_and_values(self):
        ds = load_dataset(GOOD_JSON, "json")
        assert ds.name == "toy"
        assert ds.dmu_names == ("a", "b")
        assert ds.n_inputs == 1 and ds.n_outputs == 2
        assert ds.dmus[0].inputs[0] == TriFuzzy(1, 2, 3)
        assert ds.dmus[0].outputs[0] == TriFuzzy(4, 4, 4)  # scalar shorthand

    def test_accepts_bytes(self):
        assert load_dataset(GOOD_JSON.encode(), "json").name == "toy"

    def test_malformed_json_is_parse_error(self):
        with pytest.raises(ParseError):
            load_dataset("{not json", "json")

    def test_missing_key_is_schema_error(self):
        with pytest.raises(SchemaError):
            load_dataset('{"inputs": [], "outputs": []}', "json")

    def test_bad_cell_is_schema_error(self):
        doc = json.loads(GOOD_JSON)
        doc["dmus"][0]["inputs"][0] = [1, 2]
        with pytest.raises(SchemaError):
            load_dataset(json.dumps(doc), "json")

    def test_unordered_triple_reports_location(self):
        doc = json.loads(GOOD_JSON)
        doc["dmus"][1]["outputs"][0] = [4, 3, 5]
        with pytest.raises(ValueError) as err:
            load_dataset(json.dumps(doc), "json")
        assert "'b'" in str(err.value) and "outputs[0]" in str(err.value)

    def test_non_positive_lower_bound_rejected(self):
        doc = json.loads(GOOD_JSON)
        doc["dmus"][0]["inputs"][0] = [0, 1, 2]
        with pytest.raises(DataError) as err:
            load_dataset(json.dumps(doc), "json")
        assert "'a'" in str(err.value)

    def test_duplicate_dmu_names(self):
        doc = json.loads(GOOD_JSON)
        doc["dmus"][1]["name"] = "a"
        with pytest.raises(DataError):
            load_dataset(json.dumps(doc), "json")


class TestCsvLoading:
    def test_loads_same_as_json(self):
        a = load_dataset(GOOD_JSON, "json")
        b = load_dataset(GOOD_CSV, "csv")
        assert a == b

    def test_header_required(self):
        with pytest.raises(SchemaError):
            load_dataset("a,1,2\n", "csv")

    def test_unprefixed_column(self):
        with pytest.raises(SchemaError):
            load_dataset("dmu,I1,out:O1\na,1,2\n", "csv")

    def test_ragged_row_reports_row_number(self):
        bad = "dmu,in:I1,out:O1\na,1\n"
        with pytest.raises(SchemaError) as err:
            load_dataset(bad, "csv")
        assert "row 2" in str(err.value)

    def test_bad_cell_reports_location(self):
        bad = "dmu,in:I1,out:O1\na,1;2,3\n"
        with pytest.raises(ParseError) as err:
            load_dataset(bad, "csv")
        assert "row 2" in str(err.value) and "in:I1" in str(err.value)

    def test_non_numeric_cell(self):
        with pytest.raises(ParseError):
            load_dataset("dmu,in:I1,out:O1\na,x,3\n", "csv")

    def test_unknown_format(self):
        with pytest.raises(ParseError):
            load_dataset(GOOD_JSON, "yaml")


class TestRoundTrip:
    @pytest.mark.parametrize("fmt", ["json", "csv"])
    def test_dataset_round_trip(self, fmt, gt, ac):
        for ds in (gt, ac, load_dataset(GOOD_JSON, "json")):
            again = load_dataset(write_dataset(ds, fmt), fmt)
            assert again == ds

    def test_write_marks_crisp_cells_as_scalars(self, ac):
        doc = json.loads(write_dataset(ac, "json"))
        b757 = doc["dmus"][0]
        assert b757["inputs"][2] == 5522
        assert isinstance(b757["inputs"][0], list)

    def test_load_dataset_path_infers_format(self, tmp_path, gt):
        for fmt in ("json", "csv"):
            f = tmp_path / f"ds.{fmt}"
            f.write_text(write_dataset(gt, fmt))
            assert load_dataset_path(f) == gt

    def test_unknown_suffix(self, tmp_path):
        f = tmp_path / "ds.txt"
        f.write_text("x")
        with pytest.raises(ParseError):
            load_dataset_path(f)

    def test_missing_file(self, tmp_path):
        with pytest.raises(ParseError):
            load_dataset_path(tmp_path / "absent.json")


class TestFixtures:
    def test_list_fixtures(self):
        assert set(list_fixtures()) >= {"guo_tanaka", "aircraft"}

    def test_guo_tanaka_shape(self, gt):
        assert gt.n_dmus == 5 and gt.n_inputs == 2 and gt.n_outputs == 2
        assert gt.dmus[0].inputs[0] == TriFuzzy(3.5, 4.0, 4.5)

    def test_aircraft_shape(self, ac):
        assert ac.n_dmus == 5 and ac.n_inputs == 4 and ac.n_outputs == 2
        b757 = ac.dmus[0]
        assert b757.inputs[2] == TriFuzzy(5522, 5522, 5522)  # crisp I3
        a321 = ac.dmus[1]
        assert a321.inputs[1].is_crisp

    def test_unknown_fixture(self):
        with pytest.raises(DataError):
            fixture_path("nope")


class TestValidationTotal:
    def test_count_mismatch(self):
        with pytest.raises(DataError):
            FuzzyDataset(
                "x",
                ("I1", "I2"),
                ("O1",),
                (FuzzyDmu("a", (TriFuzzy(1, 1, 1),), (TriFuzzy(1, 1, 1),)),),
            )

    def test_no_dmus(self):
        with pytest.raises(DataError):
            FuzzyDataset("x", ("I1",), ("O1",), ())


def sample_report():
    return Report(
        model="mo",
        policy="exclude-self",
        alphas=(0.0,),
        rows=(
            ReportRow("a", 0.0, 1.25, h_star=0.5, z_star=2.5, rank=1),
            ReportRow("b", 0.0, 0.75, h_star=0.8, z_star=0.9375, rank=2),
        ),
        deviations=(Deviation(1.2, 1.25, "reference table row a"),),
    )


class TestReports:
    def test_shape_invariant(self):
        with pytest.raises(DataError):
            Report("mo", "exclude-self", (0.0, 0.5), (ReportRow("a", 0.0, 1.0),))

    def test_json_round_trip(self):
        rep = sample_report()
        assert read_report(write_report(rep, "json")) == rep

    def test_markdown_layout_matrix(self, gt):
        rows = tuple(
            ReportRow(d, a, 1.0) for a in (0.0, 0.5) for d in ("a", "b")
        )
        text = write_report(Report("alpha", "exclude-self", (0.0, 0.5), rows), "md")
        lines = text.splitlines()
        assert "| alpha | a | b |" in lines
        assert any(line.startswith("| 0.5 |") for line in lines)

    def test_markdown_layout_ranked(self):
        text = write_report(sample_report(), "md")
        assert "| dmu | h* | efficiency | z* | rank |" in text
        assert "| a | 0.5000 | 1.2500 | 2.5000 | 1 |" in text
        assert "## deviations" in text

    def test_markdown_empty_rows_header_only(self):
        text = write_report(Report("alpha", "exclude-self", (0.0,), ()), "md")
        assert "| alpha |" in text
        assert "| 0 |" not in text

    def test_csv_contains_all_rows(self):
        text = write_report(sample_report(), "csv")
        lines = text.splitlines()
        assert lines[0].startswith("model,policy,dmu,alpha,score")
        assert sum(1 for l in lines if l.startswith("mo,")) == 2

    def test_deterministic_output(self):
        for fmt in ("md", "csv", "json"):
            assert write_report(sample_report(), fmt) == write_report(
                sample_report(), fmt
            )

    def test_bad_report_json(self):
        with pytest.raises(ParseError):
            read_report("{oops")
        with pytest.raises(SchemaError):
            read_report('{"model": "mo"}')

    def test_unknown_format(self):
        with pytest.raises(ParseError):
            write_report(sample_report(), "pdf")
