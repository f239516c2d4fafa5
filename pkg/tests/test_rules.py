import pytest

from uzpos.errors import ResourceError
from uzpos.rules import Action, ActionKind, ContextRule, Predicate, RuleSet, parse_rules, load_rules
from uzpos.tags import Tag

TEXT = """
# comment
max_passes: 2
list aux: edi, Ekan
list aux: emas
rule b priority=2: IF prev.tag=ADV AND cur.sufclass=kesim THEN cur=VERB
rule a priority=2: IF next.in=aux THEN cur,next=VERB
rule z priority=1: IF cur.in=aux THEN copy_across
"""


def test_parse():
    rs = parse_rules(TEXT)
    assert rs.max_passes == 2
    assert [r.id for r in rs] == ["z", "a", "b"]
    assert rs.word_lists["aux"] == {"edi", "ekan", "emas"}
    b = rs.rules[2]
    assert b.premise == (Predicate("prev", "tag", Tag.ADV), Predicate("cur", "sufclass", "kesim"))
    assert b.action == Action(ActionKind.SET_CURRENT, Tag.VERB)
    assert rs.rules[0].action.kind is ActionKind.COPY_ACROSS
    assert [p.offset for p in b.premise] == [-1, 0]


def test_to_text_roundtrip():
    rs = parse_rules(TEXT)
    again = parse_rules(rs.to_text())
    assert again == rs
    assert load_rules(rs.to_text().encode()) == rs


def test_bundled_rules(bundled):
    assert len(bundled.rules) == 7
    assert bundled.rules.max_passes == 3


@pytest.mark.parametrize("text,line,fragment", [
    ("rule a priority=1: IF prev.tag=FOO THEN cur=NOUN", 1, "unknown tag"),
    ("\nrule a priority=1: IF side.tag=ADJ THEN cur=NOUN", 2, "position"),
    ("rule a priority=1: IF prev.colour=x THEN cur=NOUN", 1, "prev.'colour'"),
    ("rule a priority=1: IF prev.tag=ADJ THEN next=NOUN", 1, "unknown action"),
    ("rule a priority=1: IF prev.tag=ADJ THEN cur=PUNCT", 1, "PUNCT"),
    ("rule a priority=1: IF prev.tag=ADJ THEN cur=NOUN\nrule a priority=2: IF prev.tag=ADV THEN cur=VERB", 2, "duplicate"),
    ("whatever", 1, "cannot parse"),
])
def test_errors_carry_line(text, line, fragment):
    with pytest.raises(ResourceError, match=fragment) as info:
        parse_rules(text)
    assert info.value.line == line


def test_unknown_list():
    with pytest.raises(ResourceError, match="unknown list"):
        parse_rules("rule a priority=1: IF cur.in=nope THEN cur=NOUN")


def test_rule_validation():
    with pytest.raises(ResourceError):
        ContextRule("x", 1, (), Action(ActionKind.SET_CURRENT, Tag.NOUN))
    with pytest.raises(ResourceError):
        RuleSet((), {}, max_passes=0)
