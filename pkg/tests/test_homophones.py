from collections import Counter

import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from windtalk import fixtures
from windtalk.errors import FormatError, UnknownLetter, UnknownSymbol
from windtalk.freq import ENGLISH, FrequencyTable, tally
from windtalk.homophones import (
    FIRST_IDENTITY,
    HomophoneTable,
    build_formula_table,
    build_rule_table,
    build_table,
    denormalize,
    normalize,
    parse_group,
    table_lines,
)


@pytest.fixture(scope="module")
def rule(abstract):
    return build_rule_table(tally(abstract))


def test_rule_table_shape(rule):
    assert rule.alphabet_size == 47
    sizes = {k: len(v) for k, v in rule.groups.items()}
    assert sizes["E"] == 4
    assert sorted(k for k, n in sizes.items() if n == 3) == sorted("TOASNIRCH")
    # identities follow the letters' rank order
    assert rule.groups["E"][1:] == (256, 257, 258)
    assert rule.identities() == list(range(256, 256 + 21))


def test_formula_table(abstract):
    t = build_formula_table(tally(abstract))
    sizes = {k: len(v) for k, v in t.groups.items() if len(v) > 1}
    assert sizes == {"E": 3, "T": 2, "O": 2, "A": 2, "S": 2, "N": 2}


def test_formula_rounding_half_up():
    counts = dict.fromkeys("ABCDEFGHIJKLMNOPQRSTUVWXYZ", 0)
    counts["A"] = 3
    counts["B"] = 49  # pct/mean for A is exactly 1.5
    t = build_formula_table(FrequencyTable.from_counts(counts))
    assert len(t.groups["A"]) == 2


def test_labels(rule):
    assert rule.label(ord("E")) == "E"
    assert rule.label(257) == "E2"
    assert rule.label(ord(" ")) == " "
    assert rule.label(999) == "#999"


def test_table_validation():
    with pytest.raises(ValueError):
        HomophoneTable({"A": (65, 256), "B": (66, 256)})
    with pytest.raises(ValueError):
        HomophoneTable({"A": (66,)})
    with pytest.raises(ValueError):
        HomophoneTable({"A": (65, 100)})


@pytest.mark.parametrize("mode", ["balanced", "uniform", "round-robin"])
@given(text=st.text(alphabet="ABCDEFGHIJKLMNOPQRSTUVWXYZ .,!\n"), seed=st.integers(0, 2**64 - 1))
@settings(max_examples=40)
def test_normalize_round_trip(rule, mode, text, seed):
    symbols = normalize(text, rule, seed, mode)
    assert len(symbols) == len(text)
    assert denormalize(symbols, rule) == text


def test_normalize_is_seeded(rule, abstract):
    assert normalize(abstract, rule, 4) == normalize(abstract, rule, 4)
    assert normalize(abstract, rule, 4) != normalize(abstract, rule, 5)


def test_balanced_groups_stay_within_one(rule, abstract):
    counts = Counter(normalize(abstract, rule, 9))
    for letter, ids in rule.groups.items():
        seen = [counts[i] for i in ids]
        assert max(seen) - min(seen) <= 1, letter


def test_round_robin_cycles(rule):
    assert normalize("EEEEE", rule, mode="round-robin") == [69, 256, 257, 258, 69]


def test_normalize_errors(rule):
    with pytest.raises(UnknownLetter):
        normalize("e", rule)
    with pytest.raises(UnknownSymbol):
        normalize([300], rule)
    with pytest.raises(UnknownSymbol):
        denormalize([999], rule)
    with pytest.raises(ValueError):
        normalize("A", rule, mode="zipf")


def test_english_reference_table():
    t = build_rule_table(FrequencyTable.from_counts({k: int(v * 1000) for k, v in ENGLISH.items()}))
    assert len(t.groups["E"]) == 4


def test_text_form_round_trip(rule):
    lines = table_lines(rule)
    assert lines[4] == "group=E:69,256,257,258"
    groups = dict(parse_group(line.partition("=")[2], i) for i, line in enumerate(lines))
    assert build_table(groups) == rule


@pytest.mark.parametrize("value", ["E69", "e:69", "EE:69", "E:69,x"])
def test_parse_group_rejects(value):
    with pytest.raises(FormatError):
        parse_group(value, 3)


def test_build_table_rejects_overlap():
    with pytest.raises(FormatError):
        build_table({"A": (65, 256), "B": (66, 256)})


def test_fixture_counts_match_abstract():
    assert tally(fixtures.abstract_text(1)).counts == tally(fixtures.abstract_text(2)).counts
