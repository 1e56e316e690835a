"""Command line: stats, saturate, augment, parse, validate, convert.

Exit status is 0 on success, 2 for bad input or configuration and 1 for
anything unexpected. Options may come from a JSON file given with
``--config``; flags on the command line win.
"""
from __future__ import annotations

import argparse
import json
import logging
import sys
from dataclasses import asdict, dataclass, field, fields
from pathlib import Path

from . import __version__
from .ccg.category import CategoryParseError, parse_category
from .ccg.chart import Parser
from .ccg.rules import RuleSet
from .corpus import (CorpusFormatError, classify_sentence, corpus_stats, from_tagged_text, read_xml,
                     write_xml)
from .evaluate import parsing_ability, svo_profile
from .fileio import atomic_write_many
from .lexicon import Lexicon, LexiconFormatError
from .saturation import Selector, new_type_curve, read_terms, segment
from .tags import POS_TAGS

log = logging.getLogger("ccgeval")

DEFAULT_POS_FILTERS = ("verb", "preposition", "coordinator")


class InputError(Exception):
    """Bad input or configuration; exit status 2."""


@dataclass
class RunConfig:
    corpus: str | None = None
    lexicon: str | None = None
    terms: list[str] = field(default_factory=list)
    out: str = "."
    samples: int = 15
    epsilon: float = 0.02
    window: int = 3
    pos_filters: list[str] = field(default_factory=lambda: list(DEFAULT_POS_FILTERS))
    max_derivations: int = 256
    root: str = "s"
    conj_promote: bool = False
    composition: bool = True
    fallback: bool = True
    diagnose: bool = True

    def validate(self) -> "RunConfig":
        if self.samples < 1:
            raise InputError(f"samples must be at least 1, got {self.samples}")
        if not 0 < self.epsilon < 1:
            raise InputError(f"epsilon must lie in (0, 1), got {self.epsilon}")
        if self.window < 1:
            raise InputError(f"window must be at least 1, got {self.window}")
        if self.max_derivations < 1:
            raise InputError(f"max_derivations must be at least 1, got {self.max_derivations}")
        for pos in self.pos_filters:
            if pos not in POS_TAGS:
                raise InputError(f"unknown POS filter {pos!r}")
        try:
            parse_category(self.root)
        except CategoryParseError as exc:
            raise InputError(f"bad root category: {exc}") from None
        return self

    def parser(self) -> Parser:
        return Parser(parse_category(self.root), RuleSet(self.composition, self.conj_promote), self.max_derivations)

    def echo(self) -> dict:
        return asdict(self)


def _dump_json(data) -> bytes:
    return (json.dumps(data, indent=2, sort_keys=True, ensure_ascii=False) + "\n").encode("utf-8")


def _config_comment(config: RunConfig) -> str:
    return "config=" + json.dumps(config.echo(), sort_keys=True, separators=(",", ":"))


def _out_dir(config: RunConfig) -> Path:
    out = Path(config.out)
    if out.exists() and not out.is_dir():
        raise InputError(f"output path {out} is not a directory")
    try:
        out.mkdir(parents=True, exist_ok=True)
    except OSError as exc:
        raise InputError(f"cannot create output directory {out}: {exc}") from None
    return out


def _write_all(outputs: dict[Path, bytes]) -> None:
    try:
        atomic_write_many(outputs)
    except OSError as exc:
        raise InputError(f"cannot write outputs: {exc}") from None
    for path in outputs:
        log.info("wrote %s", path)


def _load_corpus(config: RunConfig):
    if not config.corpus:
        raise InputError("no corpus given (--corpus)")
    path = Path(config.corpus)
    try:
        data = path.read_bytes()
    except OSError as exc:
        raise InputError(f"cannot read corpus {path}: {exc.strerror or exc}") from None
    try:
        return read_xml(data)
    except CorpusFormatError as exc:
        raise InputError(f"{path}: {exc}") from None


def _load_lexicon(config: RunConfig, required: bool = False) -> Lexicon:
    if not config.lexicon:
        if required:
            raise InputError("no lexicon given (--lexicon)")
        return Lexicon()
    path = Path(config.lexicon)
    if not path.exists() and not required:
        log.info("lexicon %s does not exist yet; starting empty", path)
        return Lexicon()
    try:
        return Lexicon.load(path)
    except LexiconFormatError as exc:
        raise InputError(f"{path}: {exc}") from None
    except OSError as exc:
        raise InputError(f"cannot read lexicon {path}: {exc.strerror or exc}") from None


def cmd_stats(config: RunConfig) -> int:
    corpus = _load_corpus(config)
    out = _out_dir(config)
    stats = corpus_stats(corpus).to_dict()
    stats["config"] = config.echo()
    rows = ["sentence_id,kind"]
    for doc_index, doc in enumerate(corpus.documents, 1):
        for s in doc.sentences:
            rows.append(f"{doc_index}/{s.id},{s.kind or classify_sentence(s)}")
    rows.append(f"# {_config_comment(config)}")
    _write_all({out / "stats.json": _dump_json(stats),
                out / "sentence_kinds.csv": ("\n".join(rows) + "\n").encode("utf-8")})
    return 0


def cmd_saturate(config: RunConfig) -> int:
    corpus = _load_corpus(config)
    out = _out_dir(config)
    try:
        samples = segment(corpus, config.samples)
    except ValueError as exc:
        raise InputError(str(exc)) from None
    selectors = {"all": Selector.all_words()}
    for pos in config.pos_filters:
        selectors[f"pos_{pos}"] = Selector.for_pos(pos)
    for term_file in config.terms:
        path = Path(term_file)
        try:
            terms = read_terms(path.read_text(encoding="utf-8"))
            selectors[f"terms_{path.stem}"] = Selector.for_terms(terms)
        except OSError as exc:
            raise InputError(f"cannot read term list {path}: {exc.strerror or exc}") from None
        except ValueError as exc:
            raise InputError(f"{path}: {exc}") from None
    outputs = {}
    for name, selector in selectors.items():
        curve = new_type_curve(samples, selector, config.epsilon, config.window)
        comments = [f"selector={curve.selector}", _config_comment(config)]
        outputs[out / f"saturation_{name}.csv"] = curve.to_csv(comments).encode("utf-8")
    _write_all(outputs)
    return 0


def cmd_augment(config: RunConfig) -> int:
    corpus = _load_corpus(config)
    lexicon = _load_lexicon(config)
    out = _out_dir(config)
    try:
        report = lexicon.augment_from_corpus(corpus)
    except ValueError as exc:
        raise InputError(str(exc)) from None
    data = report.to_dict()
    data["noun_and_pronoun"] = report.noun_and_pronoun
    data["coverage"] = lexicon.vocabulary_coverage(corpus).to_dict() if corpus.unique_words() else None
    data["config"] = config.echo()
    _write_all({out / "lexicon.tsv": lexicon.dumps().encode("utf-8"),
                out / "augmentation.json": _dump_json(data)})
    return 0


def cmd_parse(config: RunConfig) -> int:
    corpus = _load_corpus(config)
    lexicon = _load_lexicon(config)
    out = _out_dir(config)
    report = parsing_ability(corpus, lexicon, config.parser(), fallback=config.fallback,
                             diagnose=config.diagnose)
    data = report.to_dict()
    data["config"] = config.echo()
    profile = svo_profile(report).to_dict()
    profile["config"] = config.echo()
    comment = f"# {_config_comment(config)}\n".encode("utf-8")
    _write_all({
        out / "parse_report.json": _dump_json(data),
        out / "parse_summary.csv": report.summary_csv().encode("utf-8") + comment,
        out / "failures.csv": report.failures_csv().encode("utf-8") + comment,
        out / "svo_profile.json": _dump_json(profile),
    })
    return 0


def cmd_validate(config: RunConfig) -> int:
    corpus = _load_corpus(config)
    print(f"ok: {len(corpus.documents)} documents, {corpus.sentence_count} sentences, "
          f"{corpus.token_count} tokens")
    return 0


def cmd_convert(args) -> int:
    try:
        text = Path(args.text).read_text(encoding="utf-8")
        tags = Path(args.tags).read_text(encoding="utf-8")
    except OSError as exc:
        raise InputError(f"cannot read input: {exc}") from None
    try:
        corpus = from_tagged_text(text, tags, url=args.url, date=args.date)
    except CorpusFormatError as exc:
        raise InputError(str(exc)) from None
    data = write_xml(corpus)
    if args.output == "-":
        sys.stdout.buffer.write(data)
    else:
        _write_all({Path(args.output): data})
    return 0


COMMANDS = {"stats": cmd_stats, "saturate": cmd_saturate, "augment": cmd_augment, "parse": cmd_parse,
            "validate": cmd_validate}


def build_parser() -> argparse.ArgumentParser:
    ap = argparse.ArgumentParser(prog="ccgeval", description=__doc__.splitlines()[0])
    ap.add_argument("--version", action="version", version=f"%(prog)s {__version__}")
    ap.add_argument("-v", "--verbose", action="store_true")
    sub = ap.add_subparsers(dest="command", required=True)

    def common(p, out=True):
        p.add_argument("--config", help="JSON file with option defaults")
        p.add_argument("--corpus", help="corpus XML file")
        if out:
            p.add_argument("--out", help="output directory (default: current directory)")

    p = sub.add_parser("stats", help="corpus totals and sentence kinds")
    common(p)

    p = sub.add_parser("saturate", help="new-type saturation curves")
    common(p)
    p.add_argument("-k", "--samples", type=int)
    p.add_argument("--epsilon", type=float)
    p.add_argument("--window", type=int)
    p.add_argument("--pos", dest="pos_filters", action="append", choices=POS_TAGS,
                   help="POS filter (repeatable; default: verb, preposition, coordinator)")
    p.add_argument("--terms", action="append", help="term list file, one term per line (repeatable)")

    p = sub.add_parser("augment", help="add corpus words to a lexicon")
    common(p)
    p.add_argument("--lexicon", help="input lexicon TSV (missing file means empty)")

    p = sub.add_parser("parse", help="parse-ability report")
    common(p)
    p.add_argument("--lexicon")
    p.add_argument("--root")
    p.add_argument("--max-derivations", type=int)
    p.add_argument("--conj-promote", action="store_const", const=True, default=None)
    p.add_argument("--no-composition", dest="composition", action="store_const", const=False, default=None)
    p.add_argument("--no-fallback", dest="fallback", action="store_const", const=False, default=None,
                   help="do not use POS default categories for unknown words")
    p.add_argument("--no-diagnose", dest="diagnose", action="store_const", const=False, default=None)

    p = sub.add_parser("validate", help="check a corpus XML file against the schema")
    common(p, out=False)

    p = sub.add_parser("convert", help="plain text + tag file to corpus XML")
    p.add_argument("--text", required=True, help="one sentence per line")
    p.add_argument("--tags", required=True, help="one line of pos[|stem[|cat]] tags per sentence")
    p.add_argument("--url", default="")
    p.add_argument("--date", default="")
    p.add_argument("-o", "--output", default="-")
    return ap


def resolve_config(args) -> RunConfig:
    values = {}
    if getattr(args, "config", None):
        try:
            values = json.loads(Path(args.config).read_text(encoding="utf-8"))
        except (OSError, json.JSONDecodeError) as exc:
            raise InputError(f"cannot load config {args.config}: {exc}") from None
        if not isinstance(values, dict):
            raise InputError("config file must hold a JSON object")
    known = {f.name for f in fields(RunConfig)}
    unknown = set(values) - known
    if unknown:
        raise InputError(f"unknown config keys: {', '.join(sorted(unknown))}")
    for name in known:
        flag = getattr(args, name, None)
        if flag is not None:
            values[name] = flag
    try:
        return RunConfig(**values).validate()
    except TypeError as exc:
        raise InputError(f"bad config: {exc}") from None


def main(argv=None) -> int:
    args = build_parser().parse_args(argv)
    logging.basicConfig(level=logging.INFO if args.verbose else logging.WARNING,
                        format="%(levelname)s %(message)s")
    try:
        if args.command == "convert":
            return cmd_convert(args)
        return COMMANDS[args.command](resolve_config(args))
    except InputError as exc:
        print(f"ccgeval: error: {exc}", file=sys.stderr)
        return 2
    except Exception as exc:  # noqa: BLE001
        log.debug("internal error", exc_info=True)
        print(f"ccgeval: internal error: {exc}", file=sys.stderr)
        return 1
