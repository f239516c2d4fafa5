"""Suffix-stripping analysis of agglutinated word forms."""
from dataclasses import dataclass

from .normalizer import fold

MAX_SUFFIXES = 5


@dataclass(frozen=True)
class MorphAnalysis:
    """A lexicon stem plus a suffix chain, innermost suffix first."""

    stem: str
    suffix_chain: tuple
    final_tag: object

    @property
    def surface(self):
        return self.stem + "".join(s.form for s in self.suffix_chain)

    @property
    def class_labels(self):
        return tuple(s.class_label for s in self.suffix_chain)

    def __str__(self):
        parts = [self.stem, *(s.form for s in self.suffix_chain)]
        return "+".join(parts) + f"/{self.final_tag.value}"


def analyze(lex, suf, surface, max_suffixes=MAX_SUFFIXES):
    """Return every stem + suffix-chain decomposition of ``surface``.

    Suffixes are stripped from the right, longest form first, backtracking
    over every alternative.  A chain is kept only if tags flow through it:
    some tag of the stem is accepted by the innermost suffix, each suffix
    yields a tag accepted by the next one.  The zero-suffix reading is
    included (one analysis per stem tag) when the whole word is a stem.

    Results are ordered by descending stem length; ties keep search order.
    """
    word = fold(surface)
    found = []
    seen = set()

    def emit(stem, chain):
        if chain:
            inner = chain[0].attaches_to
            if not any(t in inner for t in lex[stem]):
                return
            readings = [chain[-1].yields]
        else:
            readings = list(lex[stem])
        for tag in readings:
            key = (stem, chain, tag)
            if key not in seen:
                seen.add(key)
                found.append(MorphAnalysis(stem, chain, tag))

    def strip(rest, chain):
        # chain is innermost-first and already type-consistent internally
        if rest in lex:
            emit(rest, chain)
        if len(chain) >= max_suffixes:
            return
        for form, entries in suf.endings(rest):
            stem_part = rest[: -len(form)]
            for entry in entries:
                if chain and entry.yields not in chain[0].attaches_to:
                    continue
                strip(stem_part, (entry,) + chain)

    if word:
        strip(word, ())
    found.sort(key=lambda a: -len(a.stem))
    return found


def candidate_tags(analyses):
    """Distinct final tags of ``analyses`` in first-seen order."""
    tags = []
    for a in analyses:
        if a.final_tag not in tags:
            tags.append(a.final_tag)
    return tags
