"""The tagging pipeline: lookup, suffix analysis, contextual rules, fallback.

Each word token is resolved by the first stage that yields a single tag:

1. punctuation tokens are PUNCT;
2. a lexicon entry with exactly one tag;
3. suffix analysis whose readings agree on one tag;
4. contextual rules over a prev/cur/next window, applied in passes until
   nothing changes or ``max_passes`` is reached;
5. fallback: the first remaining candidate, or NOUN for unknown words.

Rules only ever resolve unresolved tokens and only to a tag inside the
token's candidate set (unknown words accept any tag).  Besides firing
forward, a rule ``IF <nb>.tag=A THEN cur=B`` is also read backwards: when
the anchor word is already resolved to something other than B, tag A is
struck from the neighbour's candidates, and a neighbour left with a single
candidate is resolved by that rule.
"""
from dataclasses import dataclass
from enum import Enum

from .lexicon import lookup
from .morphology import analyze, candidate_tags
from .normalizer import fold, normalize_text
from .rules import ActionKind
from .tags import Tag
from .tokenizer import sentence_spans, tokenize


class Source(str, Enum):
    LEXICON = "LEXICON"
    SUFFIX = "SUFFIX"
    RULE = "RULE"
    FALLBACK = "FALLBACK"
    PUNCT = "PUNCT"


FALLBACK_TAG = Tag.NOUN


@dataclass(frozen=True)
class TaggedToken:
    token: object
    tag: Tag
    source: Source
    rule_id: str = None

    @property
    def surface(self):
        return self.token.surface

    @property
    def provenance(self):
        if self.source is Source.RULE:
            return f"RULE({self.rule_id})"
        return self.source.value


class Slot:
    """Mutable per-token state while rules run."""

    __slots__ = ("token", "key", "candidates", "classes", "analyses", "tag", "source", "rule_id")

    def __init__(self, token, key, candidates=(), classes=frozenset(), analyses=(),
                 tag=None, source=None, rule_id=None):
        self.token = token
        self.key = key
        self.candidates = tuple(candidates)
        self.classes = frozenset(classes)
        self.analyses = tuple(analyses)
        self.tag = tag
        self.source = source
        self.rule_id = rule_id

    @property
    def is_word(self):
        return not self.token.is_punct

    def allows(self, tag):
        return self.tag is None and (not self.candidates or tag in self.candidates)

    def assign(self, tag, rule_id):
        self.tag = tag
        self.source = Source.RULE
        self.rule_id = rule_id

    def __repr__(self):
        state = self.tag.value if self.tag else "/".join(t.value for t in self.candidates) or "?"
        return f"Slot({self.token.surface!r}, {state})"


def make_slot(lex, suf, token):
    if token.is_punct:
        return Slot(token, token.surface, tag=Tag.PUNCT, source=Source.PUNCT)
    key = fold(token.surface)
    lex_tags = lookup(lex, key)
    analyses = analyze(lex, suf, key)
    classes = {label for a in analyses for label in a.class_labels}
    slot = Slot(token, key, classes=classes, analyses=analyses)
    if len(lex_tags) == 1:
        slot.tag, slot.source = lex_tags[0], Source.LEXICON
        return slot
    morph_tags = candidate_tags(analyses)
    if len(morph_tags) == 1:
        slot.tag, slot.source = morph_tags[0], Source.SUFFIX
        return slot
    slot.candidates = tuple(lex_tags) + tuple(t for t in morph_tags if t not in lex_tags)
    return slot


def _holds(pred, rules, slots, i):
    j = i + pred.offset
    if j < 0 or j >= len(slots):
        return False
    slot = slots[j]
    if pred.attribute == "tag":
        return slot.tag is pred.value
    if pred.attribute == "sufclass":
        return pred.value in slot.classes
    return slot.key in rules.word_lists[pred.value]


def premise_holds(rule, rules, slots, i, skip=None):
    return all(_holds(p, rules, slots, i) for p in rule.premise if p is not skip)


def fire(rule, rules, slots, i):
    """Apply ``rule``'s action anchored at ``i``; return True if a tag was set.

    The premise is assumed to hold.
    """
    action = rule.action
    n = len(slots)
    changed = False
    if action.kind is ActionKind.COPY_ACROSS:
        if i == 0 or i == n - 1:
            return False
        prev, nxt = slots[i - 1], slots[i + 1]
        if not (prev.is_word and nxt.is_word):
            return False
        if prev.tag is not None and nxt.allows(prev.tag):
            nxt.assign(prev.tag, rule.id)
            changed = True
        elif nxt.tag is not None and prev.allows(nxt.tag):
            prev.assign(nxt.tag, rule.id)
            changed = True
        return changed
    targets = [slots[i]]
    if action.kind is ActionKind.SET_CURRENT_AND_NEXT and i + 1 < n and slots[i + 1].is_word:
        targets.append(slots[i + 1])
    for slot in targets:
        if slot.allows(action.tag):
            slot.assign(action.tag, rule.id)
            changed = True
    return changed


def eliminate(rule, rules, slots, i):
    """Strike candidates ruled out by reading ``rule`` backwards at anchor ``i``."""
    action = rule.action
    anchor = slots[i]
    if action.kind is not ActionKind.SET_CURRENT or anchor.tag is None or anchor.tag is action.tag:
        return False
    changed = False
    for pred in rule.premise:
        if pred.attribute != "tag" or pred.offset == 0:
            continue
        j = i + pred.offset
        if j < 0 or j >= len(slots):
            continue
        target = slots[j]
        if (target.tag is not None or not target.is_word or len(target.candidates) < 2
                or pred.value not in target.candidates):
            continue
        if not premise_holds(rule, rules, slots, i, skip=pred):
            continue
        target.candidates = tuple(t for t in target.candidates if t is not pred.value)
        if len(target.candidates) == 1:
            target.assign(target.candidates[0], rule.id)
        changed = True
    return changed


def run_pass(rules, slots):
    """One left-to-right sweep of forward firing, then one of elimination.

    At each anchor only the first applicable rule in ``(priority, id)``
    order fires.
    """
    changed = False
    for i, slot in enumerate(slots):
        if not slot.is_word:
            continue
        for rule in rules:
            if premise_holds(rule, rules, slots, i) and fire(rule, rules, slots, i):
                changed = True
                break
    for i, slot in enumerate(slots):
        if not slot.is_word:
            continue
        for rule in rules:
            if eliminate(rule, rules, slots, i):
                changed = True
    return changed


def apply_rules(rules, slots):
    """Run passes to a fixed point; return the number of passes that changed something."""
    for passes in range(rules.max_passes):
        if not any(s.tag is None for s in slots) or not run_pass(rules, slots):
            return passes
    return rules.max_passes


def finalize(slots):
    tagged = []
    for slot in slots:
        if slot.tag is None:
            slot.tag = slot.candidates[0] if slot.candidates else FALLBACK_TAG
            slot.source = Source.FALLBACK
        tagged.append(TaggedToken(slot.token, slot.tag, slot.source, slot.rule_id))
    return tagged


def tag_sentence(lex, suf, rules, tokens):
    """Tag one tokenized sentence; returns one :class:`TaggedToken` per token."""
    slots = [make_slot(lex, suf, tok) for tok in tokens]
    apply_rules(rules, slots)
    return finalize(slots)


def tag_text(lex, suf, rules, raw):
    """Normalize, split, tokenize and tag ``raw``; one list per sentence."""
    text = normalize_text(raw)
    return [
        tag_sentence(lex, suf, rules, tokenize(text[start:end], offset=start))
        for start, end in sentence_spans(text)
    ]
