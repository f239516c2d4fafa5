from collections import defaultdict

import pytest

from uzpos.lexicon import Lexicon, SuffixEntry, SuffixTable
from uzpos.resources import default_resources, mini_corpus_path
from uzpos.corpus_io import read_corpus
from uzpos.tags import Tag

_criteria = defaultdict(list)
_titles = {}


def pytest_configure(config):
    config.addinivalue_line("markers", "criterion(n, title): acceptance criterion this test belongs to")


@pytest.hookimpl(hookwrapper=True)
def pytest_runtest_makereport(item, call):
    outcome = yield
    report = outcome.get_result()
    marker = item.get_closest_marker("criterion")
    if marker is None:
        return
    n, title = marker.args
    _titles[n] = title
    if report.when == "call" or (report.when == "setup" and report.outcome != "passed"):
        _criteria[n].append(report.outcome == "passed")


def pytest_terminal_summary(terminalreporter):
    if not _criteria:
        return
    terminalreporter.section("acceptance criteria")
    for n in sorted(_criteria):
        ok = all(_criteria[n])
        terminalreporter.write_line(
            f"criterion {n}: {'PASS' if ok else 'FAIL'}  {_titles[n]}  ({len(_criteria[n])} checks)"
        )


@pytest.fixture(scope="session")
def bundled():
    return default_resources()


@pytest.fixture(scope="session")
def mini_corpus():
    with open(mini_corpus_path(), "rb") as f:
        return read_corpus(f)


@pytest.fixture
def sample_lexicon():
    return Lexicon([
        ("formula", [Tag.NOUN]),
        ("olma", [Tag.NOUN]),
        ("ishla", [Tag.VERB]),
        ("ish", [Tag.NOUN, Tag.VERB]),
        ("ol", [Tag.VERB]),
    ])


@pytest.fixture
def sample_suffixes():
    N, V = Tag.NOUN, Tag.VERB
    return SuffixTable([
        SuffixEntry("lar", frozenset({N}), N, "plural"),
        SuffixEntry("ysan", frozenset({V}), V, "verb_suffix"),
        SuffixEntry("la", frozenset({N}), V, "verb_derivation"),
        SuffixEntry("r", frozenset({V}), V, "aorist"),
        SuffixEntry("ma", frozenset({V}), V, "negation"),
        SuffixEntry("ma", frozenset({V}), N, "noun_suffix"),
        SuffixEntry("i", frozenset({N}), N, "egalik"),
    ])
