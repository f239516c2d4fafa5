import io

import pytest

from uzpos.corpus_io import AnnotatedCorpus, Category, dumps_corpus, format_slash, read_corpus, write_corpus
from uzpos.errors import CorpusFormatError
from uzpos.tags import Tag

from oracles import scan_counts

SAMPLE = """# category: Sport
# a comment
Futbolchi\tNOUN
to'pni\tNOUN
tepdi\tVERB
.\tPUNCT

Ular\tPRON
yutdi\tVERB

# category: Tarix
Amir\tNOUN
"""


def test_read():
    c = read_corpus(SAMPLE)
    assert [cat.name for cat in c.categories] == ["Sport", "Tarix"]
    assert c["Sport"].sentence_count == 2
    assert c["Sport"].word_count == 6
    assert c.sentence_count == 3 and c.word_count == 7
    assert c["Sport"].sentences[0][1] == ("toʻpni", Tag.NOUN)
    with pytest.raises(KeyError):
        c["Dunyo"]


def test_canonical_write():
    out = dumps_corpus(read_corpus(SAMPLE)).decode()
    assert "# a comment" not in out
    assert out.startswith("# category: Sport\nFutbolchi\tNOUN\n")
    assert "\n\n# category: Tarix\nAmir\tNOUN\n" in out
    assert read_corpus(out) == read_corpus(SAMPLE)


def test_write_to_text_stream():
    buf = io.StringIO()
    write_corpus(read_corpus(SAMPLE), buf)
    assert buf.getvalue().encode() == dumps_corpus(read_corpus(SAMPLE))


def test_crlf_and_bytes():
    assert read_corpus(SAMPLE.replace("\n", "\r\n").encode()) == read_corpus(SAMPLE)


@pytest.mark.parametrize("text,line,fragment", [
    ("# category: A\nx\tNOUN\textra\n", 2, "2 tab-separated"),
    ("# category: A\nx\n", 2, "found 1"),
    ("x\tNOUN\n", 1, "before any category"),
    ("# category: A\nx\tFOO\n", 2, "unknown tag"),
    ("# category: A\n# category: A\n", 2, "duplicate"),
    ("# category:   \n", 1, "empty category"),
    ("# category: A\n \tNOUN\n", 2, "empty surface"),
])
def test_errors_carry_line(text, line, fragment):
    with pytest.raises(CorpusFormatError, match=fragment) as info:
        read_corpus(text)
    assert info.value.line == line


def test_not_utf8():
    with pytest.raises(CorpusFormatError, match="UTF-8"):
        read_corpus(b"# category: A\n\xff\tNOUN\n")


@pytest.mark.parametrize("corpus", [
    AnnotatedCorpus([Category("A", [[("a b", Tag.NOUN)]])]),
    AnnotatedCorpus([Category("A\tB", [])]),
])
def test_unwritable(corpus):
    with pytest.raises(CorpusFormatError):
        dumps_corpus(corpus)


def test_duplicate_category_object():
    with pytest.raises(CorpusFormatError):
        AnnotatedCorpus([Category("A"), Category("A")])


def test_mini_corpus_counts(mini_corpus):
    from uzpos.resources import mini_corpus_path
    with open(mini_corpus_path(), encoding="utf-8") as f:
        text = f.read()
    counts = scan_counts(text)
    assert {c.name: (c.sentence_count, c.word_count) for c in mini_corpus.categories} == counts
    assert dumps_corpus(mini_corpus).decode() == text


def test_format_slash(bundled):
    from uzpos.tagger import tag_text
    (s,) = tag_text(bundled.lexicon, bundled.suffixes, bundled.rules, "Olma.")
    assert format_slash(s) == "Olma/NOUN ./PUNCT"
