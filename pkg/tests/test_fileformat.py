import random

import pytest
from hypothesis import given, settings, strategies as st

from qoddtown.errors import DuplicateMember, NotCanonical, ParseError
from qoddtown.family import Family, construct_extremal
from qoddtown.field import make_field
from qoddtown.fileformat import format_family, parse_family, read_family_file, write_family_file
from qoddtown.subspace import all_subspaces


def test_round_trip_f3(tmp_path, f3):
    fam = construct_extremal("F3", f3, 4)
    path = tmp_path / "f3.fam"
    write_family_file(fam, path)
    assert read_family_file(path) == fam
    assert path.read_bytes() == format_family(fam).encode()


def test_write_examples(f2, f3):
    text = format_family(construct_extremal("F1", f2, 2))
    assert text == "2 2 3\n1\n1 0\n\n1\n1 1\n\n1\n0 1\n"
    assert format_family(Family(f3, 3, ())) == "3 3 0\n"
    f2fam = construct_extremal("F2", f3, 3)
    blocks = format_family(f2fam).split("\n\n")
    assert len(blocks) == 13
    assert blocks[0].splitlines()[1] == "2" and all(b.splitlines()[0] == "2" for b in blocks[1:])


def test_comments_and_blank_lines(f2):
    text = "# a family\n2 2 2\n\n# first\n1\n1 0\n\n\n1\n  1 1  \n# done\n"
    fam = parse_family(text)
    assert [a.basis for a in fam] == [((1, 0),), ((1, 1),)]


def test_zero_dimensional_block(f3):
    fam = parse_family("3 2 2\n0\n\n2\n1 0\n0 1\n")
    assert [a.k for a in fam] == [0, 2]
    assert parse_family(format_family(fam)) == fam


def test_not_canonical():
    with pytest.raises(NotCanonical) as info:
        parse_family("3 2 1\n1\n2 1\n")
    assert info.value.block == 0 and info.value.line == 2
    with pytest.raises(NotCanonical):
        parse_family("2 3 1\n2\n1 1 0\n0 1 0\n")
    with pytest.raises(NotCanonical):
        parse_family("2 2 1\n2\n1 0\n1 0\n")


def test_duplicate_member():
    with pytest.raises(DuplicateMember) as info:
        parse_family("2 2 3\n1\n1 0\n\n1\n0 1\n\n1\n1 0\n")
    assert info.value.indices == (0, 2)


@pytest.mark.parametrize("text,line", [
    ("", 1),
    ("2 2\n", 1),
    ("6 2 0\n", 1),
    ("2 2 1\n1\n1 0 0\n", 3),
    ("3 2 1\n1\n1 3\n", 3),
    ("2 2 1\n3\n", 2),
    ("2 2 1\n1\nx 0\n", 3),
    ("2 2 1\n1\n1 0\n\n1\n0 1\n", 5),
])
def test_parse_errors_name_the_line(text, line):
    with pytest.raises(ParseError) as info:
        parse_family(text)
    assert info.value.line == line
    assert f"line {line}" in str(info.value)


def test_missing_blocks():
    with pytest.raises(ParseError):
        parse_family("2 2 2\n1\n1 0\n")
    with pytest.raises(ParseError):
        parse_family("2 2 1\n2\n1 0\n")


_POOLS = {}


def _pool(q, n):
    if (q, n) not in _POOLS:
        _POOLS[q, n] = list(all_subspaces(make_field(q), n))
    return _POOLS[q, n]


@settings(max_examples=60, deadline=None)
@given(st.sampled_from([(2, 3), (3, 3), (4, 2), (5, 2), (2, 4)]), st.integers(0, 10**9))
def test_round_trip_random(params, seed):
    q, n = params
    rng = random.Random(seed)
    pool = _pool(q, n)
    members = rng.sample(pool, rng.randrange(0, min(12, len(pool)) + 1))
    fam = Family(make_field(q), n, tuple(members))
    text = format_family(fam)
    assert parse_family(text) == fam
    assert format_family(parse_family(text)) == text
