import re

from pi1lab.loops import standard_f, standard_fn
from pi1lab.spaces import SpaceKind, compact_y
from pi1lab.svg import render_scene, write_scene


def count(pattern, text):
    return len(re.findall(pattern, text))


class TestScene:
    def test_space_line_count(self):
        # circles C2..C8 are three <line> elements each, plus one for alpha
        y = compact_y(hint=8)
        text = render_scene([(y, 8)])
        assert count(r"<line ", text) == 3 * 7 + 1
        assert count(r'class="alpha"', text) == 1

    def test_x_space_has_no_alpha(self):
        y = compact_y(hint=6)
        x = y.sibling(SpaceKind.BOUQUET_X)
        text = render_scene([(x, 6)])
        assert count(r"<line ", text) == 3 * 5
        assert count(r'class="alpha"', text) == 0

    def test_empty_scene_minimal(self):
        text = render_scene()
        assert text.startswith("<?xml")
        assert 'viewBox="0 0 1 1"' in text
        assert "<line" not in text and "<polyline" not in text
        assert text.rstrip().endswith("</svg>")

    def test_loops_as_distinct_polylines(self):
        y = compact_y(hint=6)
        text = render_scene([], [standard_f(y), standard_fn(5, y)])
        assert count(r"<polyline ", text) == 2
        assert 'class="loop loop-0"' in text and 'class="loop loop-1"' in text

    def test_byte_identical_across_runs(self):
        y = compact_y(hint=8)
        args = ([(y, 8)], [standard_f(y), standard_fn(5, y)])
        assert render_scene(*args) == render_scene(*args)

    def test_header_documents_rounding(self):
        text = render_scene()
        assert "rounded half-even to 6 decimal places" in text

    def test_write_scene(self, tmp_path):
        y = compact_y(hint=4)
        path = tmp_path / "scene.svg"
        text = write_scene(str(path), [(y, 4)], [standard_f(y)])
        assert path.read_text(encoding="utf-8") == text
