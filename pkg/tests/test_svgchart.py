import xml.etree.ElementTree as ET

import numpy as np

from qcdyn.svgchart import line_chart


def test_chart_is_valid_xml_with_polylines():
    xs = np.linspace(0, 8, 50)
    svg = line_chart(
        [("a", xs, np.sin(xs)), ("b", xs, np.cos(xs))],
        title="demo", x_label="t", y_label="y",
    )
    root = ET.fromstring(svg)
    assert root.tag == "{http://www.w3.org/2000/svg}svg"
    polylines = root.findall(".//{http://www.w3.org/2000/svg}polyline")
    assert len(polylines) == 2
    assert all(p.get("points") for p in polylines)


def test_chart_is_deterministic():
    xs = np.linspace(0, 1, 20)
    ys = xs ** 2
    assert line_chart([("s", xs, ys)]) == line_chart([("s", xs, ys)])


def test_chart_handles_flat_series():
    xs = np.linspace(0, 1, 5)
    svg = line_chart([("flat", xs, np.zeros(5))])
    ET.fromstring(svg)  # still valid markup


def test_chart_escapes_labels():
    xs = np.linspace(0, 1, 3)
    svg = line_chart([("a<b", xs, xs)], title="x & y")
    assert "a&lt;b" in svg and "x &amp; y" in svg
