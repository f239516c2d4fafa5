"""Category-partitioned gold corpus format and slash rendering.

The corpus file is UTF-8 text with LF line endings::

    # category: Informatika
    Mantiqiy<TAB>ADJ
    formulalar<TAB>NOUN
    ...

    Keyingi<TAB>ADJ
    ...

A ``# category:`` header opens each category block, token lines carry a
surface and a gold tag separated by one tab, and blank lines separate
sentences.  Other lines starting with ``#`` and holding no tab are
comments, so a ``#`` surface is still a valid token line.
"""
from dataclasses import dataclass, field
import io

from .errors import CorpusFormatError
from .normalizer import normalize_text
from .tags import Tag

CATEGORY_PREFIX = "# category:"


@dataclass
class Category:
    name: str
    sentences: list = field(default_factory=list)

    @property
    def word_count(self):
        return sum(len(s) for s in self.sentences)

    @property
    def sentence_count(self):
        return len(self.sentences)


@dataclass
class AnnotatedCorpus:
    """Ordered categories; each sentence is a list of ``(surface, Tag)``."""

    categories: list = field(default_factory=list)

    def __post_init__(self):
        names = [c.name for c in self.categories]
        for name in names:
            if not name:
                raise CorpusFormatError("empty category name")
            if names.count(name) > 1:
                raise CorpusFormatError(f"duplicate category {name!r}")

    def __getitem__(self, name):
        for cat in self.categories:
            if cat.name == name:
                return cat
        raise KeyError(name)

    @property
    def word_count(self):
        return sum(c.word_count for c in self.categories)

    @property
    def sentence_count(self):
        return sum(c.sentence_count for c in self.categories)

    def sentences(self):
        for cat in self.categories:
            yield from cat.sentences


def _decode(source):
    data = source.read() if hasattr(source, "read") else source
    if isinstance(data, bytes):
        try:
            data = data.decode("utf-8")
        except UnicodeDecodeError as exc:
            raise CorpusFormatError(f"corpus is not UTF-8: {exc}") from None
    return data


def read_corpus(source):
    text = _decode(source)
    categories = []
    seen = set()
    current = None
    sentence = []

    def close_sentence():
        nonlocal sentence
        if sentence:
            current.sentences.append(sentence)
            sentence = []

    for lineno, raw in enumerate(text.splitlines(), 1):
        line = raw.rstrip("\r")
        if line.startswith(CATEGORY_PREFIX) and "\t" not in line:
            name = line[len(CATEGORY_PREFIX):].strip()
            if not name:
                raise CorpusFormatError("empty category name", lineno)
            if name in seen:
                raise CorpusFormatError(f"duplicate category {name!r}", lineno)
            if current is not None:
                close_sentence()
            seen.add(name)
            current = Category(name)
            categories.append(current)
        elif line.startswith("#") and "\t" not in line:
            continue
        elif not line.strip():
            if current is not None:
                close_sentence()
        else:
            fields = line.split("\t")
            if len(fields) != 2:
                raise CorpusFormatError(
                    f"expected 2 tab-separated fields, found {len(fields)}", lineno
                )
            if current is None:
                raise CorpusFormatError("token line before any category header", lineno)
            surface, gold = fields[0].strip(), fields[1].strip()
            if not surface:
                raise CorpusFormatError("empty surface", lineno)
            try:
                tag = Tag.parse(gold)
            except ValueError:
                raise CorpusFormatError(f"unknown tag {gold!r}", lineno) from None
            sentence.append((normalize_text(surface), tag))
    if current is not None:
        close_sentence()
    return AnnotatedCorpus(categories)


def write_corpus(corpus, sink):
    """Write ``corpus`` in canonical form to a binary or text stream."""
    out = io.StringIO()
    for i, cat in enumerate(corpus.categories):
        if not cat.name or any(ch in cat.name for ch in "\t\r\n"):
            raise CorpusFormatError(f"category name {cat.name!r} cannot be written")
        if i:
            out.write("\n")
        out.write(f"{CATEGORY_PREFIX} {cat.name}\n")
        for j, sentence in enumerate(cat.sentences):
            if j:
                out.write("\n")
            for surface, tag in sentence:
                if not surface or any(ch.isspace() for ch in surface):
                    raise CorpusFormatError(f"surface {surface!r} cannot be written")
                out.write(f"{normalize_text(surface)}\t{Tag(tag).value}\n")
    text = out.getvalue()
    if isinstance(sink, io.TextIOBase):
        sink.write(text)
    else:
        sink.write(text.encode("utf-8"))


def dumps_corpus(corpus):
    buf = io.BytesIO()
    write_corpus(corpus, buf)
    return buf.getvalue()


def format_slash(sentence):
    """Render tagged tokens as ``surface/TAG`` items joined by spaces."""
    return " ".join(f"{t.surface}/{t.tag.value}" for t in sentence)
