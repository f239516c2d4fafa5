"""scikit-learn compatible wrappers around the tagging pipeline."""
from dataclasses import replace

from sklearn.base import BaseEstimator, TransformerMixin
from sklearn.utils.validation import check_is_fitted

from .evaluator import accuracy, count_mistakes
from .normalizer import normalize_text
from .resources import load_resources
from .tagger import tag_sentence, tag_text
from .tokenizer import tokens_from_surfaces
from .validation import check_sentences, check_tag_sequences, check_texts


class UzposNormalizer(TransformerMixin, BaseEstimator):
    """Stateless transformer mapping raw strings to apostrophe-normalized strings."""

    def fit(self, X=None, y=None):
        return self

    def transform(self, X):
        return [normalize_text(x) for x in check_texts(X)]


class UzposTagger(BaseEstimator):
    """Rule-based part-of-speech tagger.

    Nothing is learned: :meth:`fit` only loads and validates the lexicon,
    suffix table and rules.  Explicit ``lexicon``/``suffixes``/``rules``
    objects take precedence over files found in ``resource_dir`` (which
    itself defaults to ``$UZPOS_RESOURCES`` or the bundled data).

    Each sample passed to :meth:`predict` is either a raw string, which is
    normalized, split into sentences and tokenized, or a sequence of token
    strings treated as one sentence.  The result is one list of tag names
    per sample.

    Parameters
    ----------
    resource_dir : str or path, optional
    lexicon, suffixes, rules : loaded resources, optional
    max_passes : int, optional
        Overrides the rule file's pass limit.
    """

    def __init__(self, resource_dir=None, lexicon=None, suffixes=None, rules=None, max_passes=None):
        self.resource_dir = resource_dir
        self.lexicon = lexicon
        self.suffixes = suffixes
        self.rules = rules
        self.max_passes = max_passes

    def fit(self, X=None, y=None):
        missing = self.lexicon is None or self.suffixes is None or self.rules is None
        loaded = load_resources(self.resource_dir) if missing else None
        self.lexicon_ = self.lexicon if self.lexicon is not None else loaded.lexicon
        self.suffixes_ = self.suffixes if self.suffixes is not None else loaded.suffixes
        rules = self.rules if self.rules is not None else loaded.rules
        if self.max_passes is not None:
            rules = replace(rules, max_passes=int(self.max_passes))
        self.rules_ = rules
        return self

    def _tag_one(self, sample):
        if isinstance(sample, str):
            sentences = tag_text(self.lexicon_, self.suffixes_, self.rules_, sample)
            return [t for sentence in sentences for t in sentence]
        tokens = tokens_from_surfaces([normalize_text(s) for s in sample])
        return tag_sentence(self.lexicon_, self.suffixes_, self.rules_, tokens)

    def tag(self, X):
        """Like :meth:`predict` but returns :class:`TaggedToken` objects."""
        check_is_fitted(self, "rules_")
        return [self._tag_one(sample) for sample in check_sentences(X)]

    def predict(self, X):
        return [[t.tag.value for t in sample] for sample in self.tag(X)]

    def score(self, X, y):
        """Accuracy with repeated wrong surface forms counted once."""
        tagged = self.tag(X)
        gold = check_tag_sequences(y, [len(s) for s in tagged])
        triples = [
            (t.surface, g, t.tag)
            for sample, tags in zip(tagged, gold)
            for t, g in zip(sample, tags)
        ]
        return float(accuracy(len(triples), count_mistakes(triples)))
