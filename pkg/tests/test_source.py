import io
import sys

import numpy as np
import pytest

from twosquares.source import ArraySource, InstanceError, count_segments, parse_instance


def test_parse_two_segments(tmp_path):
    p = tmp_path / "two.txt"
    p.write_text("0 0 4 4\n6 0 10 4\n")
    src = parse_instance(p)
    assert count_segments(src) == 2
    rows = np.concatenate(list(src.blocks()))
    assert rows.tolist() == [[0, 0, 4, 4], [6, 0, 10, 4]]


def test_comments_and_blanks_are_skipped(tmp_path):
    p = tmp_path / "c.txt"
    p.write_text("# header\n\n  1 2 3 4  \n# tail\n")
    assert count_segments(parse_instance(p)) == 1


def test_comment_only_is_empty(tmp_path):
    p = tmp_path / "e.txt"
    p.write_text("# comment\n")
    with pytest.raises(InstanceError, match="empty instance"):
        parse_instance(p)


@pytest.mark.parametrize("text", ["0 0 x 4\n", "0 0 4\n", "0 0 4 4 5\n", "0 0 inf 4\n"])
def test_bad_line_names_line_number(tmp_path, text):
    p = tmp_path / "bad.txt"
    p.write_text(text)
    with pytest.raises(InstanceError, match="line 1"):
        parse_instance(p)


def test_stdin(monkeypatch):
    monkeypatch.setattr(sys, "stdin", io.StringIO("0 0 1 1\n2 2 3 3\n"))
    src = parse_instance("-")
    assert count_segments(src) == 2
    assert count_segments(src) == 2


def test_parse_leaves_counters_clean(tmp_path):
    p = tmp_path / "two.txt"
    p.write_text("0 0 4 4\n6 0 10 4\n")
    src = parse_instance(p)
    assert (src.resets, src.items_read) == (0, 0)


def test_counters_and_order():
    data = np.arange(40, dtype=float).reshape(10, 4)
    src = ArraySource(data)
    first = np.concatenate(list(src.blocks(3)))
    second = np.concatenate(list(src.blocks(4)))
    assert np.array_equal(first, data) and np.array_equal(second, data)
    assert (src.resets, src.items_read) == (2, 20)
    src.reset()
    assert src.next().as_tuple() == (0, 1, 2, 3)
