"""Rule-based part-of-speech tagging for Uzbek Latin text."""
from .corpus_io import AnnotatedCorpus, Category, format_slash, read_corpus, write_corpus
from .errors import CorpusFormatError, ResourceError, UzposError
from .estimator import UzposNormalizer, UzposTagger
from .evaluator import EvaluationReport, accuracy, count_mistakes, evaluate, format_percent, render_report
from .lexicon import Lexicon, SuffixEntry, SuffixTable, load_lexicon, load_suffixes, lookup
from .morphology import MAX_SUFFIXES, MorphAnalysis, analyze, candidate_tags
from .normalizer import is_normalized, normalize_text
from .resources import Resources, default_resources, load_resources
from .rules import ContextRule, RuleSet, load_rules
from .tagger import Source, TaggedToken, tag_sentence, tag_text
from .tags import WORD_TAGS, Tag
from .tokenizer import Token, TokenKind, split_sentences, tokenize

__version__ = "0.1.0"

__all__ = [
    "AnnotatedCorpus", "Category", "ContextRule", "CorpusFormatError", "EvaluationReport",
    "Lexicon", "MAX_SUFFIXES", "MorphAnalysis", "ResourceError", "Resources", "RuleSet",
    "Source", "SuffixEntry", "SuffixTable", "Tag", "TaggedToken", "Token", "TokenKind",
    "UzposNormalizer", "UzposTagger", "UzposError", "WORD_TAGS", "accuracy", "analyze",
    "candidate_tags", "count_mistakes", "default_resources", "evaluate", "format_percent",
    "format_slash", "is_normalized", "load_lexicon", "load_resources", "load_rules",
    "load_suffixes", "lookup", "normalize_text", "read_corpus", "render_report",
    "split_sentences", "tag_sentence", "tag_text", "tokenize", "write_corpus",
]
