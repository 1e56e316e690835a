"""Annotated corpus model and its XML form.

Schema::

    <corpus>
      <document url="..." date="YYYY-MM-DD">
        <sentence id="s1">
          <word stem="the" pos="determiner" cat="np/n">The</word>
          ...

``cat`` is optional on ``word``; ``stem`` and ``pos`` are required. A
sentence may also carry ``kind`` (simple, compound or complex).
"""
from __future__ import annotations

import datetime as dt
import io
import xml.sax
from collections import Counter
from dataclasses import dataclass, field
from typing import Iterator, Sequence
from xml.sax.handler import ContentHandler

from .ccg.category import Category, CategoryParseError, format_category, parse_category
from .tags import POS_TAGS, normalize_word

SENTENCE_KINDS = ("simple", "compound", "complex")
SUBORDINATORS = frozenset({"when", "if", "because", "since", "although", "while", "that", "which", "who"})


class CorpusFormatError(ValueError):
    def __init__(self, message: str, line: int | None = None, path: str | None = None):
        self.line = line
        self.path = path
        where = ", ".join(p for p in (f"line {line}" if line else "", path or "") if p)
        super().__init__(f"{where}: {message}" if where else message)


@dataclass(frozen=True)
class AnnotatedToken:
    word: str
    stem: str
    pos: str
    category: Category | None = None

    def __post_init__(self):
        if not self.word:
            raise ValueError("token word must be non-empty")
        if not self.stem:
            raise ValueError(f"token {self.word!r} has no stem")
        if self.pos not in POS_TAGS:
            raise ValueError(f"token {self.word!r} has unknown POS {self.pos!r}")


@dataclass(frozen=True)
class Sentence:
    id: str
    tokens: tuple[AnnotatedToken, ...]
    kind: str | None = None

    def __post_init__(self):
        object.__setattr__(self, "tokens", tuple(self.tokens))
        if not self.tokens:
            raise ValueError(f"sentence {self.id!r} has no tokens")
        if self.kind is not None and self.kind not in SENTENCE_KINDS:
            raise ValueError(f"sentence {self.id!r} has unknown kind {self.kind!r}")

    @property
    def words(self) -> list[str]:
        return [t.word for t in self.tokens]

    @property
    def text(self) -> str:
        return " ".join(self.words)


def _check_date(value: str) -> None:
    if not value:
        return
    try:
        dt.date.fromisoformat(value)
    except ValueError:
        try:
            dt.datetime.fromisoformat(value)
        except ValueError:
            raise ValueError(f"date {value!r} is not ISO-8601") from None


@dataclass(frozen=True)
class Document:
    url: str
    date: str
    sentences: tuple[Sentence, ...] = ()

    def __post_init__(self):
        object.__setattr__(self, "sentences", tuple(self.sentences))
        _check_date(self.date)
        seen = set()
        for s in self.sentences:
            if s.id in seen:
                raise ValueError(f"duplicate sentence id {s.id!r} in document {self.url!r}")
            seen.add(s.id)


@dataclass(frozen=True)
class AnnotatedCorpus:
    documents: tuple[Document, ...] = ()

    def __post_init__(self):
        object.__setattr__(self, "documents", tuple(self.documents))

    def sentences(self) -> Iterator[Sentence]:
        for doc in self.documents:
            yield from doc.sentences

    def tokens(self) -> Iterator[AnnotatedToken]:
        for sentence in self.sentences():
            yield from sentence.tokens

    @property
    def sentence_count(self) -> int:
        return sum(len(d.sentences) for d in self.documents)

    @property
    def token_count(self) -> int:
        return sum(len(s.tokens) for s in self.sentences())

    def unique_words(self) -> set[str]:
        return {w for w in (normalize_word(t.word) for t in self.tokens()) if w}


# XML reading


class _Handler(ContentHandler):
    ALLOWED = {
        "corpus": ((), ()),
        "document": (("url", "date"), ()),
        "sentence": (("id",), ("kind",)),
        "word": (("stem", "pos"), ("cat",)),
    }
    PARENT = {"corpus": None, "document": "corpus", "sentence": "document", "word": "sentence"}

    def __init__(self):
        super().__init__()
        self.stack: list[tuple[str, int]] = []
        self.counts: list[Counter] = [Counter()]
        self.documents: list[Document] = []
        self.doc_attrs: dict = {}
        self.sentences: list[Sentence] = []
        self.sent_attrs: dict = {}
        self.tokens: list[AnnotatedToken] = []
        self.word_attrs: dict = {}
        self.text: list[str] = []
        self.seen_root = False

    def path(self) -> str:
        return "/" + "/".join(f"{name}[{i}]" if name != "corpus" else name for name, i in self.stack)

    def fail(self, message: str):
        line = self._locator.getLineNumber() if self._locator else None
        raise CorpusFormatError(message, line, self.path())

    def startElement(self, name, attrs):
        parent = self.stack[-1][0] if self.stack else None
        if name not in self.ALLOWED:
            self.fail(f"unknown element <{name}>")
        if self.PARENT[name] != parent or (name == "corpus" and self.seen_root):
            self.fail(f"<{name}> not allowed inside <{parent}>" if parent else f"unexpected root <{name}>")
        self.seen_root = True
        self.counts[-1][name] += 1
        self.stack.append((name, self.counts[-1][name]))
        self.counts.append(Counter())
        required, optional = self.ALLOWED[name]
        for key in attrs.getNames():
            if key not in required and key not in optional:
                self.fail(f"unknown attribute {key!r} on <{name}>")
        for key in required:
            if key not in attrs.getNames():
                self.fail(f"<{name}> is missing attribute {key!r}")
        values = {k: attrs.getValue(k) for k in attrs.getNames()}
        if name == "document":
            self.doc_attrs, self.sentences = values, []
        elif name == "sentence":
            self.sent_attrs, self.tokens = values, []
        elif name == "word":
            self.word_attrs, self.text = values, []

    def characters(self, content):
        if self.stack and self.stack[-1][0] == "word":
            self.text.append(content)
        elif content.strip():
            self.fail(f"unexpected text {content.strip()[:20]!r}")

    def endElement(self, name):
        try:
            if name == "word":
                a = self.word_attrs
                if a["pos"] not in POS_TAGS:
                    self.fail(f"invalid pos value {a['pos']!r}")
                category = None
                if "cat" in a:
                    try:
                        category = parse_category(a["cat"])
                    except CategoryParseError as exc:
                        self.fail(f"invalid category: {exc}")
                self.tokens.append(AnnotatedToken("".join(self.text).strip(), a["stem"], a["pos"], category))
            elif name == "sentence":
                a = self.sent_attrs
                self.sentences.append(Sentence(a["id"], self.tokens, a.get("kind")))
            elif name == "document":
                a = self.doc_attrs
                self.documents.append(Document(a["url"], a["date"], self.sentences))
        except ValueError as exc:
            if isinstance(exc, CorpusFormatError):
                raise
            self.fail(str(exc))
        self.stack.pop()
        self.counts.pop()


def read_xml(data: bytes | str) -> AnnotatedCorpus:
    if isinstance(data, str):
        data = data.encode("utf-8")
    handler = _Handler()
    parser = xml.sax.make_parser()
    parser.setContentHandler(handler)
    try:
        parser.parse(io.BytesIO(data))
    except xml.sax.SAXParseException as exc:
        raise CorpusFormatError(f"malformed XML: {exc.getMessage()}", exc.getLineNumber()) from None
    if not handler.seen_root:
        raise CorpusFormatError("no <corpus> element")
    return AnnotatedCorpus(handler.documents)


# XML writing

_ATTR_ESCAPES = {"&": "&amp;", "<": "&lt;", ">": "&gt;", '"': "&quot;", "\n": "&#10;", "\r": "&#13;", "\t": "&#9;"}
_TEXT_ESCAPES = {"&": "&amp;", "<": "&lt;", ">": "&gt;"}


def _esc(value: str, table: dict) -> str:
    return "".join(table.get(ch, ch) for ch in value)


def _attrs(pairs: Sequence[tuple[str, str | None]]) -> str:
    return "".join(f' {k}="{_esc(v, _ATTR_ESCAPES)}"' for k, v in pairs if v is not None)


def write_xml(corpus: AnnotatedCorpus) -> bytes:
    """Canonical serialization: fixed attribute order, 2-space indent, LF."""
    lines = ['<?xml version="1.0" encoding="UTF-8"?>']
    if not corpus.documents:
        lines.append("<corpus/>")
    else:
        lines.append("<corpus>")
        for doc in corpus.documents:
            head = f"  <document{_attrs([('url', doc.url), ('date', doc.date)])}"
            if not doc.sentences:
                lines.append(head + "/>")
                continue
            lines.append(head + ">")
            for s in doc.sentences:
                lines.append(f"    <sentence{_attrs([('id', s.id), ('kind', s.kind)])}>")
                for t in s.tokens:
                    cat = format_category(t.category) if t.category is not None else None
                    attrs = _attrs([("stem", t.stem), ("pos", t.pos), ("cat", cat)])
                    lines.append(f"      <word{attrs}>{_esc(t.word, _TEXT_ESCAPES)}</word>")
                lines.append("    </sentence>")
            lines.append("  </document>")
        lines.append("</corpus>")
    return ("\n".join(lines) + "\n").encode("utf-8")


# sentence kinds and statistics


def _verb_groups(sentence: Sentence) -> list[int]:
    """Start index of each maximal run of verb/modal tokens."""
    starts = []
    previous = False
    for i, token in enumerate(sentence.tokens):
        is_verb = token.pos in ("verb", "modal")
        if is_verb and not previous:
            starts.append(i)
        previous = is_verb
    return starts


def classify_sentence(sentence: Sentence) -> str:
    """Simple, compound or complex, from POS tags alone.

    Verb groups (runs of verb/modal tokens) stand in for clauses. A
    subordinator followed somewhere by a verb group makes the sentence
    complex; otherwise a coordinator with a verb group on each side makes
    it compound.
    """
    groups = _verb_groups(sentence)
    for i, token in enumerate(sentence.tokens):
        if token.pos == "determiner" or normalize_word(token.word) not in SUBORDINATORS:
            continue
        if any(g > i for g in groups):
            return "complex"
    if len(groups) >= 2:
        for i, token in enumerate(sentence.tokens):
            if token.pos == "coordinator" and any(g < i for g in groups) and any(g > i for g in groups):
                return "compound"
    return "simple"


@dataclass(frozen=True)
class CorpusStats:
    documents: int
    sentences: int
    tokens: int
    unique_words: int
    kind_counts: dict[str, int] = field(default_factory=dict)
    pos_counts: dict[str, int] = field(default_factory=dict)
    document_sentences: tuple[int, ...] = ()

    @property
    def kind_percentages(self) -> dict[str, float]:
        if not self.sentences:
            return {k: 0.0 for k in SENTENCE_KINDS}
        return {k: round(100 * self.kind_counts.get(k, 0) / self.sentences, 2) for k in SENTENCE_KINDS}

    def to_dict(self) -> dict:
        return {
            "documents": self.documents,
            "sentences": self.sentences,
            "tokens": self.tokens,
            "unique_words": self.unique_words,
            "sentence_kinds": {k: self.kind_counts.get(k, 0) for k in SENTENCE_KINDS},
            "sentence_kind_percent": self.kind_percentages,
            "pos_tokens": {p: self.pos_counts.get(p, 0) for p in POS_TAGS},
        }


def sentence_kind(sentence: Sentence) -> str:
    return sentence.kind or classify_sentence(sentence)


def corpus_stats(corpus: AnnotatedCorpus) -> CorpusStats:
    kinds = Counter(sentence_kind(s) for s in corpus.sentences())
    pos = Counter(t.pos for t in corpus.tokens())
    return CorpusStats(
        documents=len(corpus.documents),
        sentences=corpus.sentence_count,
        tokens=corpus.token_count,
        unique_words=len(corpus.unique_words()),
        kind_counts={k: kinds.get(k, 0) for k in SENTENCE_KINDS},
        pos_counts={p: pos.get(p, 0) for p in POS_TAGS},
        document_sentences=tuple(len(d.sentences) for d in corpus.documents),
    )


# plain text + tag file


def from_tagged_text(text: str, tags: str, url: str = "", date: str = "") -> AnnotatedCorpus:
    """Build a one-document corpus from parallel sentence-per-line files.

    Each tag is ``pos``, ``pos|stem`` or ``pos|stem|cat``; tags align with
    the non-punctuation tokens of the text line. A missing stem defaults to
    the normalized word.
    """
    text_lines = [line for line in text.splitlines() if line.strip()]
    tag_lines = [line for line in tags.splitlines() if line.strip()]
    if len(text_lines) != len(tag_lines):
        raise CorpusFormatError(f"{len(text_lines)} text lines but {len(tag_lines)} tag lines")
    sentences = []
    for n, (line, tag_line) in enumerate(zip(text_lines, tag_lines), 1):
        words = [w for w in line.split() if normalize_word(w)]
        tag_fields = tag_line.split()
        if len(words) != len(tag_fields):
            raise CorpusFormatError(f"sentence {n}: {len(words)} words but {len(tag_fields)} tags", n)
        tokens = []
        for word, tag in zip(words, tag_fields):
            parts = tag.split("|")
            if len(parts) > 3:
                raise CorpusFormatError(f"sentence {n}: bad tag {tag!r}", n)
            pos = parts[0]
            stem = parts[1] if len(parts) > 1 and parts[1] else normalize_word(word)
            try:
                category = parse_category(parts[2]) if len(parts) > 2 and parts[2] else None
                tokens.append(AnnotatedToken(word, stem, pos, category))
            except ValueError as exc:
                raise CorpusFormatError(f"sentence {n}: {exc}", n) from None
        sentences.append(Sentence(f"s{n}", tokens))
    try:
        return AnnotatedCorpus([Document(url, date, sentences)])
    except ValueError as exc:
        raise CorpusFormatError(str(exc)) from None
