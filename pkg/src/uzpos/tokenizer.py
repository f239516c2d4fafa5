"""Sentence splitting and word tokenization for normalized text."""
from dataclasses import dataclass
from enum import Enum

SENTENCE_TERMINATORS = frozenset(".!?")
PUNCTUATION = frozenset('.,;:!?()"«»—')


class TokenKind(str, Enum):
    WORD = "WORD"
    PUNCT = "PUNCT"


@dataclass(frozen=True)
class Token:
    """A surface form with its ``[start, end)`` codepoint span in the source."""

    surface: str
    start: int
    end: int
    kind: TokenKind = TokenKind.WORD

    @property
    def span(self):
        return (self.start, self.end)

    @property
    def is_punct(self):
        return self.kind is TokenKind.PUNCT


def classify(surface):
    if surface and all(ch in PUNCTUATION for ch in surface):
        return TokenKind.PUNCT
    return TokenKind.WORD


def sentence_spans(text):
    """Return ``(start, end)`` offsets of the sentences in ``text``.

    A sentence runs up to and including a run of terminators (``.``, ``!``,
    ``?``) or to the end of the text.  Leading and trailing whitespace is
    excluded from each span and whitespace-only stretches are dropped.
    """
    spans = []
    start = 0
    i = 0
    n = len(text)
    while i < n:
        if text[i] in SENTENCE_TERMINATORS:
            while i + 1 < n and text[i + 1] in SENTENCE_TERMINATORS:
                i += 1
            _push_span(text, start, i + 1, spans)
            start = i + 1
        i += 1
    _push_span(text, start, n, spans)
    return spans


def _push_span(text, start, end, spans):
    while start < end and text[start].isspace():
        start += 1
    while end > start and text[end - 1].isspace():
        end -= 1
    if start < end:
        spans.append((start, end))


def split_sentences(text):
    return [text[s:e] for s, e in sentence_spans(text)]


def tokenize(sentence, offset=0):
    """Split ``sentence`` into tokens.

    Whitespace separates tokens and each punctuation codepoint becomes its
    own PUNCT token.  Apostrophe signs and hyphens stay inside words, so
    ``oʻqituvchi`` and ``kuk-kuk`` are single tokens.  Spans are shifted by
    ``offset`` so they index into the enclosing text.
    """
    tokens = []
    word_start = None
    for i, ch in enumerate(sentence):
        if ch.isspace() or ch in PUNCTUATION:
            if word_start is not None:
                tokens.append(Token(sentence[word_start:i], offset + word_start, offset + i))
                word_start = None
            if ch in PUNCTUATION:
                tokens.append(Token(ch, offset + i, offset + i + 1, TokenKind.PUNCT))
        elif word_start is None:
            word_start = i
    if word_start is not None:
        end = len(sentence)
        tokens.append(Token(sentence[word_start:end], offset + word_start, offset + end))
    return tokens


def tokens_from_surfaces(surfaces):
    """Build tokens for an already-segmented sentence.

    Spans index into the surfaces joined by single spaces.
    """
    tokens = []
    pos = 0
    for surface in surfaces:
        if not surface or any(ch.isspace() for ch in surface):
            raise ValueError(f"{surface!r} is not a single token")
        tokens.append(Token(surface, pos, pos + len(surface), classify(surface)))
        pos += len(surface) + 1
    return tokens
