"""Input checks for the estimator API, in the spirit of sklearn's check_array."""
from collections.abc import Sequence

from .tags import Tag


def _materialize(X, what):
    if isinstance(X, (str, bytes)):
        raise TypeError(f"{what} must be an iterable of samples, not a single {type(X).__name__}")
    try:
        return list(X)
    except TypeError:
        raise TypeError(f"{what} must be iterable, got {type(X).__name__}") from None


def check_texts(X):
    """Return ``X`` as a list of str, rejecting a bare string."""
    items = _materialize(X, "X")
    for i, item in enumerate(items):
        if not isinstance(item, str):
            raise TypeError(f"X[{i}] must be str, got {type(item).__name__}")
    return items


def check_sentences(X):
    """Return ``X`` as a list whose items are raw strings or token tuples.

    A pre-tokenized sample must be a sequence of non-empty strings without
    whitespace.
    """
    items = _materialize(X, "X")
    out = []
    for i, item in enumerate(items):
        if isinstance(item, str):
            out.append(item)
            continue
        if not isinstance(item, Sequence):
            raise TypeError(f"X[{i}] must be a str or a sequence of tokens, got {type(item).__name__}")
        tokens = tuple(item)
        for j, tok in enumerate(tokens):
            if not isinstance(tok, str):
                raise TypeError(f"X[{i}][{j}] must be str, got {type(tok).__name__}")
            if not tok or any(ch.isspace() for ch in tok):
                raise ValueError(f"X[{i}][{j}] = {tok!r} is not a single token")
        out.append(tokens)
    return out


def check_tag_sequences(y, lengths):
    """Validate gold tag sequences against per-sample token counts."""
    rows = _materialize(y, "y")
    if len(rows) != len(lengths):
        raise ValueError(f"y has {len(rows)} samples, X has {len(lengths)}")
    out = []
    for i, (row, n) in enumerate(zip(rows, lengths)):
        if isinstance(row, str):
            row = row.split()
        tags = [Tag.parse(t) if isinstance(t, str) else Tag(t) for t in row]
        if len(tags) != n:
            raise ValueError(f"y[{i}] has {len(tags)} tags for {n} tokens")
        out.append(tags)
    return out
