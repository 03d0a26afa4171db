import json
import xml.etree.ElementTree as ET

import numpy as np
import pytest

from lineametrics.errors import InvalidParameterError
from lineametrics.report import (
    ReportBundle,
    format_value,
    svg_grid_map,
    svg_line_chart,
    write_text_atomic,
)


class TestFormatValue:
    def test_six_significant_digits(self):
        assert format_value(0.008064516) == "0.00806452"
        assert format_value(1.2499890) == "1.24999"
        assert format_value(0.3039460) == "0.303946"

    def test_integers_unchanged(self):
        assert format_value(13699) == "13699"
        assert format_value(np.int64(7)) == "7"

    def test_negative_zero_normalized(self):
        assert format_value(-0.0) == "0"

    def test_booleans(self):
        assert format_value(True) == "true"
        assert format_value(np.bool_(False)) == "false"

    def test_strings_pass_through(self):
        assert format_value("q_hat") == "q_hat"


class TestAtomicWrite:
    def test_writes_and_replaces(self, tmp_path):
        path = tmp_path / "sub" / "file.txt"
        write_text_atomic(path, "one\n")
        write_text_atomic(path, "two\n")
        assert path.read_text() == "two\n"
        leftovers = [p for p in path.parent.iterdir() if p.name != "file.txt"]
        assert leftovers == []


class TestReportBundle:
    def make_bundle(self, **parameters):
        bundle = ReportBundle(command="demo", parameters=parameters)
        bundle.add_table("numbers", ["n", "value"], [(1, 0.5), (2, 0.25)])
        return bundle

    def test_csv_dialect(self, tmp_path):
        self.make_bundle(q=0.7).write(tmp_path)
        text = (tmp_path / "numbers.csv").read_bytes().decode()
        assert text == "n,value\n1,0.5\n2,0.25\n"
        assert "\r" not in text

    def test_manifest_digest_stable(self, tmp_path):
        first = self.make_bundle(q=0.7).manifest()["digest"]
        second = self.make_bundle(q=0.7).manifest()["digest"]
        assert first == second

    def test_manifest_digest_tracks_parameters(self):
        base = self.make_bundle(q=0.7).manifest()["digest"]
        changed = self.make_bundle(q=0.8).manifest()["digest"]
        assert base != changed

    def test_manifest_digest_tracks_inputs(self, tmp_path):
        data = tmp_path / "input.txt"
        data.write_text("abc")
        bundle = self.make_bundle(q=0.7)
        bundle.record_input("file", data)
        with_input = bundle.manifest()["digest"]
        data.write_text("abcd")
        bundle.record_input("file", data)
        assert bundle.manifest()["digest"] != with_input

    def test_manifest_written(self, tmp_path):
        self.make_bundle(q=0.7).write(tmp_path)
        manifest = json.loads((tmp_path / "manifest.json").read_text())
        assert manifest["command"] == "demo"
        assert manifest["tables"] == ["numbers"]
        assert "digest" in manifest

    def test_duplicate_table_rejected(self):
        bundle = self.make_bundle(q=0.7)
        with pytest.raises(InvalidParameterError):
            bundle.add_table("numbers", ["n"], [(1,)])

    def test_format_selection(self, tmp_path):
        bundle = self.make_bundle(q=0.7)
        bundle.add_plot("numbers", svg_line_chart([1, 2], {"v": [0.5, 0.25]}, "t"))
        bundle.write(tmp_path / "csv_only", "csv")
        bundle.write(tmp_path / "svg_only", "svg")
        bundle.write(tmp_path / "both", "both")
        assert (tmp_path / "csv_only" / "numbers.csv").exists()
        assert not (tmp_path / "csv_only" / "numbers.svg").exists()
        assert (tmp_path / "svg_only" / "numbers.svg").exists()
        assert not (tmp_path / "svg_only" / "numbers.csv").exists()
        assert (tmp_path / "both" / "numbers.csv").exists()
        assert (tmp_path / "both" / "numbers.svg").exists()

    def test_unknown_format_rejected(self, tmp_path):
        with pytest.raises(InvalidParameterError):
            self.make_bundle().write(tmp_path, "pdf")


class TestSvg:
    def test_line_chart_is_valid_xml(self):
        svg = svg_line_chart([1, 2, 3], {"a": [0.1, 0.2, 0.3]}, "title")
        root = ET.fromstring(svg)
        assert root.tag.endswith("svg")
        assert "viewBox" in root.attrib

    def test_grid_map_is_valid_xml(self):
        values = np.array([[0.1, -0.2], [0.3, 0.0]])
        svg = svg_grid_map([0.1, 0.9], [0.1, 0.9], values, "grid")
        root = ET.fromstring(svg)
        rects = [el for el in root.iter() if el.tag.endswith("rect")]
        assert len(rects) >= 4

    def test_flat_series_does_not_crash(self):
        svg = svg_line_chart([1, 2], {"flat": [0.5, 0.5]}, "flat")
        assert "polyline" in svg
