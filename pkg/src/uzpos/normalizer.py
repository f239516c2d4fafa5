"""Apostrophe canonicalization for Uzbek Latin text.

Uzbek Latin spells two letters with a sign (oʻ, gʻ) and additionally uses
the tutuq belgisi (glottal stop sign, as in taʼlim).  Real text writes both
with whatever apostrophe-like character is at hand, which makes tokenizers
split words such as ``O`qituvchi``.  Every apostrophe variant is rewritten
to one of two canonical codepoints:

* U+02BB MODIFIER LETTER TURNED COMMA after o/O/g/G (the letter sign);
* U+02BC MODIFIER LETTER APOSTROPHE everywhere else (tutuq belgisi).
"""

TURNED_COMMA = "ʻ"
MODIFIER_APOSTROPHE = "ʼ"

APOSTROPHE_VARIANTS = frozenset("'`‘’ʻʼ")
LETTER_SIGN_HOSTS = frozenset("oOgG")


def normalize_text(raw):
    """Rewrite apostrophe variants in ``raw`` to their canonical form.

    The output has the same length as the input and differs only at
    positions holding one of :data:`APOSTROPHE_VARIANTS`.

    >>> normalize_text("o`rdak")
    'oʻrdak'
    >>> normalize_text("ta`lim")
    'taʼlim'
    """
    if not any(ch in APOSTROPHE_VARIANTS for ch in raw):
        return raw
    out = []
    prev = ""
    for ch in raw:
        if ch in APOSTROPHE_VARIANTS:
            out.append(TURNED_COMMA if prev in LETTER_SIGN_HOSTS else MODIFIER_APOSTROPHE)
        else:
            out.append(ch)
        prev = ch
    return "".join(out)


def is_normalized(text):
    return normalize_text(text) == text


def fold(text):
    """Lookup key for a surface form: normalized and lowercased."""
    return normalize_text(text).lower()
