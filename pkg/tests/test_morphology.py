from uzpos.morphology import MAX_SUFFIXES, MorphAnalysis, analyze, candidate_tags
from uzpos.tags import Tag

from oracles import morph_oracle


def readings(lex, suf, word):
    return [str(a) for a in analyze(lex, suf, word)]


def test_plural(sample_lexicon, sample_suffixes):
    assert readings(sample_lexicon, sample_suffixes, "Formulalar") == [
        "formula+lar/NOUN", "formula+la+r/VERB",
    ]


def test_bare_stem_gives_every_tag(sample_lexicon, sample_suffixes):
    got = analyze(sample_lexicon, sample_suffixes, "ish")
    assert [a.final_tag for a in got] == [Tag.NOUN, Tag.VERB]
    assert all(a.suffix_chain == () for a in got)


def test_tag_flow_is_enforced(sample_lexicon, sample_suffixes):
    # "ysan" only follows verbs; "olma" is a noun, so ol+ma+ysan needs the verbal ma
    got = readings(sample_lexicon, sample_suffixes, "olmaysan")
    assert got == ["ol+ma+ysan/VERB"]


def test_unknown(sample_lexicon, sample_suffixes):
    assert analyze(sample_lexicon, sample_suffixes, "zzz") == []
    assert candidate_tags(()) == []


def test_candidate_order(sample_lexicon, sample_suffixes):
    got = analyze(sample_lexicon, sample_suffixes, "olma")
    assert candidate_tags(got) == [Tag.NOUN, Tag.VERB]


def test_class_labels_and_surface():
    a = MorphAnalysis("kitob", (), Tag.NOUN)
    assert a.surface == "kitob" and a.class_labels == ()


def test_agrees_with_oracle_on_bundled_words(bundled):
    lex = {k: list(v) for k, v in bundled.lexicon.items()}
    rows = [(e.form, frozenset(e.attaches_to), e.yields, e.class_label) for e in bundled.suffixes]
    for word in ["jadvallari", "izohlanadi", "ishlaysan", "mevalardir", "kitoblarimizda"]:
        got = {
            (a.stem, tuple((e.form, e.yields, e.class_label) for e in a.suffix_chain), a.final_tag)
            for a in analyze(bundled.lexicon, bundled.suffixes, word)
        }
        want = {
            (s, tuple((r[0], r[2], r[3]) for r in c), t)
            for s, c, t in morph_oracle(lex, rows, word, MAX_SUFFIXES)
        }
        assert got == want and got


def test_max_suffixes_bound(sample_lexicon, sample_suffixes):
    assert analyze(sample_lexicon, sample_suffixes, "formulalar", max_suffixes=1)
    assert all(len(a.suffix_chain) <= 1
               for a in analyze(sample_lexicon, sample_suffixes, "formulalar", max_suffixes=1))
