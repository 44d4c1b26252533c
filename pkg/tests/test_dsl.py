import pytest
from hypothesis import given, strategies as st

from liarsim.dsl import (
    DOUBLE_LIAR_A,
    DOUBLE_LIAR_B,
    PRESETS,
    Claim,
    SentenceSystem,
    format_system,
    parse,
)
from liarsim.errors import (
    DuplicateSubject,
    EmptySystem,
    MalformedLine,
    MissingSubject,
    ParseError,
    TargetOutOfRange,
)


def test_parse_double_liar_a():
    system = parse(DOUBLE_LIAR_A)
    assert system.claims == (Claim(1, 2, False), Claim(2, 1, True))


def test_parse_single_liar():
    assert parse("(1) sentence (1) is false").claims == (Claim(1, 1, False),)


def test_target_out_of_range():
    with pytest.raises(TargetOutOfRange) as exc:
        parse("(1) sentence (3) is true")
    assert exc.value.subject == 1 and exc.value.target == 3


def test_keywords_case_insensitive_and_whitespace_free():
    text = "  ( 1 )   SENTENCE (2) IS FALSE\n(2)sentence(1)is true"
    assert parse(text).claims == parse(DOUBLE_LIAR_A).claims


def test_comments_blanks_and_crlf():
    text = "# a liar\r\n\r\n(1) sentence (2) is false\r\n   # indented note\r\n(2) sentence (1) is true\r\n"
    assert parse(text).claims == parse(DOUBLE_LIAR_A).claims


@pytest.mark.parametrize(
    "bad",
    [
        "gibberish",
        "(1) sentence (2) istrue",          # fused keyword
        "(1) phrase (2) is true",           # wrong keyword
        "1) sentence (2) is true",          # missing paren
        "(1) sentence (2) is maybe",        # bad value
        "(1) sentence (2) is true extra",   # trailing tokens
        "(1) sentence (2) is true!",        # stray punctuation
        "(-1) sentence (1) is true",        # sign is not part of INT
    ],
)
def test_malformed_lines(bad):
    with pytest.raises(MalformedLine) as exc:
        parse(bad)
    assert exc.value.line == 1


def test_malformed_line_number_is_reported():
    with pytest.raises(MalformedLine) as exc:
        parse("(1) sentence (1) is true\n???")
    assert exc.value.line == 2


def test_duplicate_subject():
    with pytest.raises(DuplicateSubject) as exc:
        parse("(1) sentence (1) is true\n(1) sentence (1) is false")
    assert exc.value.subject == 1


def test_missing_subject_gap():
    with pytest.raises(MissingSubject) as exc:
        parse("(1) sentence (1) is true\n(3) sentence (1) is false")
    assert exc.value.subject == 2


def test_empty_system():
    with pytest.raises(EmptySystem):
        parse("# only a comment\n\n")


def test_format_is_canonical():
    system = SentenceSystem((Claim(1, 2, False), Claim(2, 1, True)))
    assert format_system(system) == "(1) sentence (2) is false\n(2) sentence (1) is true"
    assert format_system(parse("(1) sentence (1) is false")) == "(1) sentence (1) is false"


def test_round_trip_of_case_b_text_is_identity():
    assert format_system(parse(DOUBLE_LIAR_B)) == DOUBLE_LIAR_B


def test_out_of_order_input_is_normalized():
    text = "(2) sentence (1) is true\n(1) sentence (2) is false"
    assert format_system(parse(text)) == DOUBLE_LIAR_A


def test_presets_all_parse():
    for text in PRESETS.values():
        assert format_system(parse(text)) == text


def test_direct_construction_validates():
    with pytest.raises(MissingSubject):
        SentenceSystem((Claim(1, 1, True), Claim(3, 1, True)))
    with pytest.raises(TargetOutOfRange):
        SentenceSystem((Claim(1, 2, True),))
    with pytest.raises(EmptySystem):
        SentenceSystem(())


@st.composite
def systems(draw):
    n = draw(st.integers(min_value=1, max_value=8))
    return SentenceSystem(
        tuple(
            Claim(i, draw(st.integers(min_value=1, max_value=n)), draw(st.booleans()))
            for i in range(1, n + 1)
        )
    )


@given(systems())
def test_round_trip_identity(system):
    assert parse(format_system(system)) == system


@given(st.text(max_size=200))
def test_parse_is_total(text):
    # arbitrary input either parses or raises a structured ParseError
    try:
        system = parse(text)
    except ParseError:
        return
    assert isinstance(system, SentenceSystem)
