import pytest
from hypothesis import given

from prismatic import format_edgelist, parse_edgelist, read_edgelist, write_edgelist
from prismatic.errors import EdgeListError
from prismatic.families.chains import BUILTIN_SPECS, triangle_chain
from prismatic.families.special import prism
from strategies import graphs


def test_prism_text():
    text = format_edgelist(prism(), ["family: prism"])
    lines = text.splitlines()
    assert lines[0] == "# family: prism"
    assert lines[1] == "6 9"
    assert text.endswith("\n") and "\r" not in text


def test_labels_round_trip(tmp_path):
    g, _ = triangle_chain(BUILTIN_SPECS["ladder"])
    path = tmp_path / "ladder.el"
    write_edgelist(g, path)
    back = read_edgelist(path)
    assert back == g and back.labels == g.labels


@pytest.mark.parametrize("text", [
    "",
    "3\n",
    "3 1\n0 1\n1 2\n",
    "3 1\n0 x\n",
    "3 1\n0 3\n",
    "3 1\n1 1\n",
    "2 0\n# labels\n# 0 a\n",
])
def test_malformed(text):
    with pytest.raises(EdgeListError):
        parse_edgelist(text)


@given(graphs())
def test_round_trip_is_exact(g):
    text = format_edgelist(g)
    back = parse_edgelist(text)
    assert back == g
    assert format_edgelist(back) == text
