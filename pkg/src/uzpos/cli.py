"""Command-line interface: ``uzpos normalize|tokenize|tag|eval``.

Exit codes: 0 success, 1 usage error, 2 resource or validation error,
3 input/output error.  Diagnostics go to stderr only.
"""
import argparse
import contextlib
import io
import sys

from .corpus_io import CATEGORY_PREFIX, format_slash, read_corpus
from .errors import CorpusFormatError, UzposError
from .evaluator import evaluate, render_report
from .morphology import analyze
from .normalizer import normalize_text
from .resources import load_resources
from .tagger import tag_text
from .tokenizer import sentence_spans, tokenize

EXIT_OK = 0
EXIT_USAGE = 1
EXIT_RESOURCE = 2
EXIT_IO = 3


class UsageError(Exception):
    pass


class InputError(Exception):
    pass


class _Parser(argparse.ArgumentParser):
    def error(self, message):
        raise UsageError(f"{self.prog}: error: {message}")

    def exit(self, status=0, message=None):
        if status:
            raise UsageError(message or "")
        if message:
            sys.stderr.write(message)
        raise SystemExit(status)


def build_parser():
    parser = _Parser(prog="uzpos", description="Rule-based POS tagging for Uzbek Latin text.")
    sub = parser.add_subparsers(dest="command", required=True, parser_class=_Parser)

    def io_args(p):
        p.add_argument("--in", dest="infile", metavar="F", help="input file (default: stdin)")
        p.add_argument("--out", dest="outfile", metavar="F", help="output file (default: stdout)")

    p = sub.add_parser("normalize", help="canonicalize apostrophes")
    io_args(p)
    p = sub.add_parser("tokenize", help="one token per line, blank line between sentences")
    io_args(p)

    p = sub.add_parser("tag", help="tag raw text")
    io_args(p)
    p.add_argument("--format", choices=("slash", "tsv"), default="slash")
    p.add_argument("--resources", metavar="DIR", help="directory with lexicon.xml, suffixes.xml, rules.txt")
    p.add_argument("--trace", action="store_true", help="show how each tag was resolved")
    p.add_argument("--analyze", action="store_true", help="show suffix analyses of each word")
    p.add_argument("--category", default="untitled", help="category header for tsv output")

    p = sub.add_parser("eval", help="score the tagger against a gold corpus")
    p.add_argument("--gold", required=True, metavar="F")
    p.add_argument("--resources", metavar="DIR")
    p.add_argument("--report", choices=("table", "json"), default="table")
    return parser


@contextlib.contextmanager
def _open_in(path, stdin):
    if path is None:
        yield stdin
        return
    try:
        f = open(path, encoding="utf-8", newline="")
    except OSError as exc:
        raise InputError(f"cannot open {path}: {exc.strerror}") from None
    with f:
        yield f


@contextlib.contextmanager
def _open_out(path, stdout):
    if path is None:
        yield stdout
        return
    try:
        f = open(path, "w", encoding="utf-8", newline="\n")
    except OSError as exc:
        raise InputError(f"cannot open {path}: {exc.strerror}") from None
    with f:
        yield f


def _read_all(path, stdin):
    with _open_in(path, stdin) as f:
        return f.read()


def cmd_normalize(args, stdin, stdout):
    with _open_in(args.infile, stdin) as src, _open_out(args.outfile, stdout) as dst:
        for line in src:
            dst.write(normalize_text(line))


def cmd_tokenize(args, stdin, stdout):
    text = normalize_text(_read_all(args.infile, stdin))
    blocks = []
    for start, end in sentence_spans(text):
        tokens = tokenize(text[start:end], offset=start)
        blocks.append("".join(f"{t.surface}\n" for t in tokens))
    with _open_out(args.outfile, stdout) as dst:
        dst.write("\n".join(blocks))


def _analyses(res, token):
    if token.is_punct:
        return ""
    return "|".join(str(a) for a in analyze(res.lexicon, res.suffixes, token.surface))


def cmd_tag(args, stdin, stdout):
    res = load_resources(args.resources)
    text = _read_all(args.infile, stdin)
    sentences = tag_text(res.lexicon, res.suffixes, res.rules, text)
    out = io.StringIO()
    if args.format == "slash":
        for sentence in sentences:
            if not (args.trace or args.analyze):
                out.write(format_slash(sentence) + "\n")
                continue
            items = []
            for t in sentence:
                item = f"{t.surface}/{t.tag.value}"
                if args.trace:
                    item += f"/{t.provenance}"
                if args.analyze:
                    item += "{" + _analyses(res, t.token) + "}"
                items.append(item)
            out.write(" ".join(items) + "\n")
    else:
        if sentences:
            out.write(f"{CATEGORY_PREFIX} {args.category}\n")
        for i, sentence in enumerate(sentences):
            if i:
                out.write("\n")
            for t in sentence:
                fields = [t.surface, t.tag.value]
                if args.trace:
                    fields.append(t.provenance)
                if args.analyze:
                    fields.append(_analyses(res, t.token))
                out.write("\t".join(fields) + "\n")
    with _open_out(args.outfile, stdout) as dst:
        dst.write(out.getvalue())


def cmd_eval(args, stdin, stdout):
    res = load_resources(args.resources)
    gold = read_corpus(_read_all(args.gold, stdin))
    if not gold.word_count:
        raise CorpusFormatError(f"gold corpus {args.gold} has no tokens")
    report = evaluate(gold, res.lexicon, res.suffixes, res.rules)
    stdout.write(render_report(report, args.report))


COMMANDS = {
    "normalize": cmd_normalize,
    "tokenize": cmd_tokenize,
    "tag": cmd_tag,
    "eval": cmd_eval,
}


def run(argv=None, stdin=None, stdout=None, stderr=None):
    """Run the CLI and return its exit code instead of exiting."""
    stdin = stdin if stdin is not None else sys.stdin
    stdout = stdout if stdout is not None else sys.stdout
    stderr = stderr if stderr is not None else sys.stderr
    try:
        args = build_parser().parse_args(argv)
        COMMANDS[args.command](args, stdin, stdout)
    except SystemExit as exc:
        return exc.code or EXIT_OK
    except UsageError as exc:
        stderr.write(f"{exc}\n")
        return EXIT_USAGE
    except UzposError as exc:
        stderr.write(f"uzpos: {exc}\n")
        return EXIT_RESOURCE
    except (InputError, UnicodeDecodeError, OSError) as exc:
        stderr.write(f"uzpos: {exc}\n")
        return EXIT_IO
    return EXIT_OK


def main():
    for stream in (sys.stdin, sys.stdout, sys.stderr):
        if hasattr(stream, "reconfigure"):
            stream.reconfigure(encoding="utf-8")
    sys.exit(run())


if __name__ == "__main__":
    main()
