"""Contextual disambiguation rules and their text format.

A rule file holds one declaration per line::

    # comment
    max_passes: 3
    list boglovchi: va, hamda, yoki
    rule r7 priority=7: IF cur.in=boglovchi THEN copy_across

Predicates are ``<pos>.<attr>=<value>`` with ``pos`` one of prev/cur/next
and ``attr`` one of ``tag`` (resolved tag equals), ``sufclass`` (some
suffix analysis of the word carries that class label) and ``in`` (folded
surface belongs to a named word list).  Actions are ``cur=T``,
``cur,next=T`` and ``copy_across``.
"""
from dataclasses import dataclass, field
from enum import Enum
from types import MappingProxyType
import re

from .errors import ResourceError
from .normalizer import fold
from .tags import Tag

DEFAULT_MAX_PASSES = 3

POSITIONS = {"prev": -1, "cur": 0, "next": 1}
ATTRIBUTES = ("tag", "sufclass", "in")

_RULE_RE = re.compile(
    r"^rule\s+(?P<id>\S+)\s+priority=(?P<prio>-?\d+)\s*:\s*IF\s+(?P<premise>.+?)\s+THEN\s+(?P<action>.+?)\s*$"
)
_LIST_RE = re.compile(r"^list\s+(?P<name>[\w-]+)\s*:(?P<words>.*)$")
_PASSES_RE = re.compile(r"^max_passes\s*:\s*(?P<n>\d+)\s*$")
_PRED_RE = re.compile(r"^(?P<pos>\w+)\.(?P<attr>\w+)=(?P<value>\S+)$")
_ACTION_RE = re.compile(r"^(?P<targets>cur|cur,next)=(?P<tag>\S+)$")


class ActionKind(str, Enum):
    SET_CURRENT = "cur"
    SET_CURRENT_AND_NEXT = "cur,next"
    COPY_ACROSS = "copy_across"


@dataclass(frozen=True)
class Predicate:
    position: str
    attribute: str
    value: object

    @property
    def offset(self):
        return POSITIONS[self.position]

    def __str__(self):
        value = self.value.value if isinstance(self.value, Tag) else self.value
        return f"{self.position}.{self.attribute}={value}"


@dataclass(frozen=True)
class Action:
    kind: ActionKind
    tag: Tag = None

    def __str__(self):
        if self.kind is ActionKind.COPY_ACROSS:
            return self.kind.value
        return f"{self.kind.value}={self.tag.value}"


@dataclass(frozen=True)
class ContextRule:
    id: str
    priority: int
    premise: tuple
    action: Action

    def __post_init__(self):
        if not self.premise:
            raise ResourceError(f"rule {self.id!r} has an empty premise")
        if self.action.kind is not ActionKind.COPY_ACROSS:
            if self.action.tag is None or self.action.tag is Tag.PUNCT:
                raise ResourceError(f"rule {self.id!r}: action tag must be a word class")

    def __str__(self):
        premise = " AND ".join(str(p) for p in self.premise)
        return f"rule {self.id} priority={self.priority}: IF {premise} THEN {self.action}"


@dataclass(frozen=True)
class RuleSet:
    """Rules sorted by ``(priority, id)`` plus the word lists they reference."""

    rules: tuple = ()
    word_lists: dict = field(default_factory=dict)
    max_passes: int = DEFAULT_MAX_PASSES

    def __post_init__(self):
        ids = [r.id for r in self.rules]
        dupes = sorted({i for i in ids if ids.count(i) > 1})
        if dupes:
            raise ResourceError(f"duplicate rule id {dupes[0]!r}")
        if self.max_passes < 1:
            raise ResourceError("max_passes must be at least 1")
        lists = {name: frozenset(fold(w) for w in words) for name, words in self.word_lists.items()}
        for rule in self.rules:
            for p in rule.premise:
                if p.attribute == "in" and p.value not in lists:
                    raise ResourceError(f"rule {rule.id!r} references unknown list {p.value!r}")
        object.__setattr__(self, "rules", tuple(sorted(self.rules, key=lambda r: (r.priority, r.id))))
        object.__setattr__(self, "word_lists", MappingProxyType(lists))

    def __len__(self):
        return len(self.rules)

    def __iter__(self):
        return iter(self.rules)

    def to_text(self):
        lines = [f"max_passes: {self.max_passes}"]
        for name in sorted(self.word_lists):
            lines.append(f"list {name}: " + ", ".join(sorted(self.word_lists[name])))
        lines.extend(str(r) for r in self.rules)
        return "\n".join(lines) + "\n"


def _parse_predicate(text, lineno):
    m = _PRED_RE.match(text.strip())
    if not m:
        raise ResourceError(f"cannot parse predicate {text.strip()!r}", lineno)
    pos, attr, value = m["pos"], m["attr"], m["value"]
    if pos not in POSITIONS:
        raise ResourceError(f"unknown predicate position {pos!r}", lineno)
    if attr not in ATTRIBUTES:
        raise ResourceError(f"unknown predicate {pos}.{attr!r}", lineno)
    if attr == "tag":
        try:
            value = Tag.parse(value)
        except ValueError:
            raise ResourceError(f"unknown tag {value!r} in predicate", lineno) from None
    return Predicate(pos, attr, value)


def _parse_action(text, lineno):
    text = text.strip()
    if text == ActionKind.COPY_ACROSS.value:
        return Action(ActionKind.COPY_ACROSS)
    m = _ACTION_RE.match(text)
    if not m:
        raise ResourceError(f"unknown action {text!r}", lineno)
    try:
        tag = Tag.parse(m["tag"])
    except ValueError:
        raise ResourceError(f"unknown action tag {m['tag']!r}", lineno) from None
    if tag is Tag.PUNCT:
        raise ResourceError("action tag PUNCT is not a word class", lineno)
    return Action(ActionKind(m["targets"]), tag)


def parse_rules(text):
    rules = []
    lists = {}
    max_passes = DEFAULT_MAX_PASSES
    seen_ids = set()
    for lineno, raw in enumerate(text.splitlines(), 1):
        line = raw.strip()
        if not line or line.startswith("#"):
            continue
        if m := _LIST_RE.match(line):
            words = [w.strip() for w in m["words"].split(",") if w.strip()]
            lists.setdefault(m["name"], []).extend(words)
        elif m := _PASSES_RE.match(line):
            max_passes = int(m["n"])
        elif m := _RULE_RE.match(line):
            if m["id"] in seen_ids:
                raise ResourceError(f"duplicate rule id {m['id']!r}", lineno)
            seen_ids.add(m["id"])
            premise = tuple(_parse_predicate(p, lineno) for p in re.split(r"\s+AND\s+", m["premise"]))
            try:
                rules.append(ContextRule(m["id"], int(m["prio"]), premise, _parse_action(m["action"], lineno)))
            except ResourceError as exc:
                if exc.line is None:
                    raise ResourceError(str(exc), lineno) from None
                raise
        else:
            raise ResourceError(f"cannot parse line {line!r}", lineno)
    return RuleSet(tuple(rules), lists, max_passes)


def load_rules(source):
    """Load a :class:`RuleSet` from a UTF-8 byte stream, bytes or str."""
    data = source.read() if hasattr(source, "read") else source
    if isinstance(data, bytes):
        try:
            data = data.decode("utf-8")
        except UnicodeDecodeError as exc:
            raise ResourceError(f"rule file is not UTF-8: {exc}") from None
    return parse_rules(data)
