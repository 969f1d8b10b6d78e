from varbench import report, stats
from varbench.cli import load_html_report


def test_bar_chart_fills_missing_buckets():
    svg = report.bar_chart_svg({2: 5, 5: 1})
    assert svg.count("<rect") == 4
    assert 'data-bucket="3" data-count="0"' in svg
    assert 'data-peak-bucket="2"' in svg


def test_full_scale_html_is_self_contained_with_peak_40(tmp_path):
    s = stats.summary(stats.expand_fixture(stats.FULL_SCALE))
    html = report.render_html("replay", s)
    assert "http" not in html and "<script" not in html and "src=" not in html
    p = tmp_path / "r.html"
    p.write_text(html)
    assert load_html_report(p) == {"peak_bucket": 40, "has_svg": True}


def test_scatter_needs_two_points():
    assert "<svg" not in report.scatter_svg([(1.0, 2.0)])
    assert report.scatter_svg([(1.0, 2.0), (2.0, 3.0)]).count("<circle") == 2


def test_text_is_escaped():
    html = report.render_html("<b>&", notes=["a < b"])
    assert "<b>&" not in html and "&lt;b&gt;&amp;" in html


def test_summary_line():
    assert report.summary_line([1.0, 2.0, 4.0]) == "g min=1.000 median=2.000 max=4.000 (n=3)"
