"""Stem dictionary and suffix inventory, with their XML loaders."""
from collections.abc import Mapping
from dataclasses import dataclass
from types import MappingProxyType
import xml.etree.ElementTree as ET

from .errors import ResourceError
from .normalizer import fold
from .tags import Tag


def _parse_xml(source, root_name):
    data = source.read() if hasattr(source, "read") else source
    if isinstance(data, str):
        data = data.encode("utf-8")
    try:
        root = ET.fromstring(data)
    except ET.ParseError as exc:
        line, _col = exc.position
        raise ResourceError(f"malformed XML: {exc}", line) from None
    if root.tag != root_name:
        raise ResourceError(f"expected <{root_name}> root element, found <{root.tag}>")
    return root


def _word_tag(value, what):
    try:
        tag = Tag.parse(value or "")
    except ValueError:
        raise ResourceError(f"{what}: unknown tag {value!r}") from None
    if tag is Tag.PUNCT:
        raise ResourceError(f"{what}: PUNCT is not a word class")
    return tag


class Lexicon(Mapping):
    """Read-only mapping from folded stem to its tags in priority order."""

    def __init__(self, entries=()):
        merged = {}
        for stem, tags in (entries.items() if isinstance(entries, Mapping) else entries):
            key = fold(stem)
            if not key:
                raise ResourceError("empty stem")
            bucket = merged.setdefault(key, [])
            for tag in tags:
                tag = Tag(tag)
                if tag is Tag.PUNCT:
                    raise ResourceError(f"stem {stem!r}: PUNCT is not a word class")
                if tag not in bucket:
                    bucket.append(tag)
        for key, bucket in merged.items():
            if not bucket:
                raise ResourceError(f"stem {key!r} has no tags")
        self._entries = MappingProxyType({k: tuple(v) for k, v in merged.items()})

    def __getitem__(self, stem):
        return self._entries[stem]

    def __iter__(self):
        return iter(self._entries)

    def __len__(self):
        return len(self._entries)

    def __repr__(self):
        return f"Lexicon(<{len(self)} entries>)"

    def lookup(self, surface):
        return lookup(self, surface)


def lookup(lex, surface):
    """Return the tags of ``surface`` in priority order, or ``()``."""
    return lex._entries.get(fold(surface), ())


def load_lexicon(source):
    """Load a lexicon from a UTF-8 XML document (bytes, str or binary file).

    Duplicate stems are merged, keeping first-seen tag order.
    """
    root = _parse_xml(source, "lexicon")
    entries = []
    for entry in root:
        if entry.tag != "entry":
            raise ResourceError(f"unexpected element <{entry.tag}> in <lexicon>")
        stem = entry.get("stem")
        if not stem or not stem.strip():
            raise ResourceError("<entry> without a stem attribute")
        tags = [_word_tag(pos.text, f"stem {stem!r}") for pos in entry.iter("pos")]
        if not tags:
            raise ResourceError(f"stem {stem!r} has no <pos> children")
        entries.append((stem.strip(), tags))
    return Lexicon(entries)


def dump_lexicon(lex):
    """Serialize ``lex`` to the XML format read by :func:`load_lexicon`."""
    root = ET.Element("lexicon", version="1")
    for stem, tags in lex.items():
        entry = ET.SubElement(root, "entry", stem=stem)
        for tag in tags:
            ET.SubElement(entry, "pos").text = tag.value
    ET.indent(root)
    return ET.tostring(root, encoding="utf-8", xml_declaration=True) + b"\n"


@dataclass(frozen=True)
class SuffixEntry:
    form: str
    attaches_to: frozenset
    yields: Tag
    class_label: str

    def __post_init__(self):
        form = fold(self.form)
        if not form:
            raise ResourceError("empty suffix form")
        object.__setattr__(self, "form", form)
        object.__setattr__(self, "attaches_to", frozenset(Tag(t) for t in self.attaches_to))
        object.__setattr__(self, "yields", Tag(self.yields))
        if not self.attaches_to:
            raise ResourceError(f"suffix {form!r} attaches to nothing")
        if self.yields is Tag.PUNCT or Tag.PUNCT in self.attaches_to:
            raise ResourceError(f"suffix {form!r}: PUNCT is not a word class")


class SuffixTable:
    """Ordered suffix inventory indexed by form for right-edge matching."""

    def __init__(self, entries=()):
        seen = set()
        ordered = []
        by_form = {}
        for entry in entries:
            key = (entry.form, entry.attaches_to, entry.yields)
            if key in seen:
                raise ResourceError(
                    f"duplicate suffix {entry.form!r} {sorted(entry.attaches_to)}->{entry.yields}"
                )
            seen.add(key)
            ordered.append(entry)
            by_form.setdefault(entry.form, []).append(entry)
        self.entries = tuple(ordered)
        self._by_form = {form: tuple(group) for form, group in by_form.items()}
        self.max_length = max((len(f) for f in self._by_form), default=0)

    def __len__(self):
        return len(self.entries)

    def __iter__(self):
        return iter(self.entries)

    def __repr__(self):
        return f"SuffixTable(<{len(self)} entries>)"

    @property
    def forms(self):
        return frozenset(self._by_form)

    def with_form(self, form):
        return self._by_form.get(form, ())

    def endings(self, word):
        """Yield ``(form, entries)`` for suffixes ending ``word``, longest first.

        A suffix never covers the whole word, so a non-empty stem remains.
        """
        for length in range(min(self.max_length, len(word) - 1), 0, -1):
            group = self._by_form.get(word[-length:])
            if group:
                yield word[-length:], group


def load_suffixes(source):
    root = _parse_xml(source, "suffixes")
    entries = []
    for node in root:
        if node.tag != "suffix":
            raise ResourceError(f"unexpected element <{node.tag}> in <suffixes>")
        form = (node.get("form") or "").strip()
        if not form:
            raise ResourceError("<suffix> without a form attribute")
        what = f"suffix {form!r}"
        attaches = [_word_tag(v, what) for v in (node.get("attaches") or "").split(",") if v.strip()]
        if not attaches:
            raise ResourceError(f"{what}: empty attaches list")
        yields = _word_tag(node.get("yields"), what)
        label = (node.get("class") or "").strip()
        if not label:
            raise ResourceError(f"{what}: missing class label")
        entries.append(SuffixEntry(form, frozenset(attaches), yields, label))
    return SuffixTable(entries)


def dump_suffixes(table):
    root = ET.Element("suffixes", version="1")
    for entry in table:
        ET.SubElement(
            root,
            "suffix",
            form=entry.form,
            attaches=",".join(t.value for t in sorted(entry.attaches_to, key=list(Tag).index)),
            yields=entry.yields.value,
            **{"class": entry.class_label},
        )
    ET.indent(root)
    return ET.tostring(root, encoding="utf-8", xml_declaration=True) + b"\n"
