"""Locating and loading the lexicon, suffix table and rule set."""
from dataclasses import dataclass
from importlib import resources as _pkg_resources
import os
from pathlib import Path

from .errors import ResourceError
from .lexicon import load_lexicon, load_suffixes
from .rules import load_rules

ENV_VAR = "UZPOS_RESOURCES"
LEXICON_FILE = "lexicon.xml"
SUFFIX_FILE = "suffixes.xml"
RULES_FILE = "rules.txt"
MINI_CORPUS_FILE = "mini_corpus.tsv"


@dataclass(frozen=True)
class Resources:
    lexicon: object
    suffixes: object
    rules: object


def bundled_dir():
    return Path(str(_pkg_resources.files("uzpos") / "data"))


def resolve_dir(explicit=None):
    """Pick the resource directory: explicit path, then $UZPOS_RESOURCES, then bundled."""
    if explicit:
        return Path(explicit)
    env = os.environ.get(ENV_VAR)
    if env:
        return Path(env)
    return bundled_dir()


def _read(path):
    try:
        return path.read_bytes()
    except OSError as exc:
        raise ResourceError(f"cannot read {path}: {exc.strerror or exc}") from None


def _load(loader, path):
    try:
        return loader(_read(path))
    except ResourceError as exc:
        err = ResourceError(f"{path.name}: {exc}")
        err.line = exc.line
        raise err from None


def load_resources(directory=None):
    d = resolve_dir(directory)
    if not d.is_dir():
        raise ResourceError(f"resource directory {d} does not exist")
    return Resources(
        lexicon=_load(load_lexicon, d / LEXICON_FILE),
        suffixes=_load(load_suffixes, d / SUFFIX_FILE),
        rules=_load(load_rules, d / RULES_FILE),
    )


def default_resources():
    return load_resources(bundled_dir())


def mini_corpus_path():
    return bundled_dir() / MINI_CORPUS_FILE
