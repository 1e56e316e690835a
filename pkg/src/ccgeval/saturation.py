"""Corpus representativeness by lexical closure.

The token stream is cut into equal samples and, for a tracked set of
items, the number of previously unseen types is counted per sample. A
corpus is saturated once new-type counts stay small for a few samples in
a row.
"""
from __future__ import annotations

import io
from dataclasses import dataclass
from typing import Iterable, Sequence

from .tags import POS_TAGS, normalize_word

DEFAULT_EPSILON = 0.02
DEFAULT_WINDOW = 3


@dataclass(frozen=True)
class Sample:
    start: int
    end: int
    tokens: tuple

    def __len__(self) -> int:
        return self.end - self.start


def segment(corpus, k: int) -> list[Sample]:
    """Split the token stream into ``k`` contiguous samples.

    Sizes differ by at most one token, larger samples first. Sentence
    boundaries are ignored. ``corpus`` may also be a plain token sequence.
    """
    tokens = tuple(corpus.tokens()) if hasattr(corpus, "tokens") else tuple(corpus)
    if k <= 0:
        raise ValueError(f"number of samples must be positive, got {k}")
    if k > len(tokens):
        raise ValueError(f"cannot cut {len(tokens)} tokens into {k} samples")
    size, extra = divmod(len(tokens), k)
    samples, start = [], 0
    for i in range(k):
        end = start + size + (1 if i < extra else 0)
        samples.append(Sample(start, end, tokens[start:end]))
        start = end
    return samples


def _word(token) -> str:
    return normalize_word(token if isinstance(token, str) else token.word)


@dataclass(frozen=True)
class Selector:
    """Which tokens a curve tracks: every word, one POS, or a term list."""

    kind: str = "all"
    pos: str | None = None
    terms: frozenset[str] = frozenset()

    def __post_init__(self):
        if self.kind not in ("all", "pos", "terms"):
            raise ValueError(f"unknown selector kind {self.kind!r}")
        if self.kind == "pos" and self.pos not in POS_TAGS:
            raise ValueError(f"unknown POS {self.pos!r}")
        if self.kind == "terms":
            terms = frozenset(w for w in (normalize_word(t) for t in self.terms) if w)
            if not terms:
                raise ValueError("term list is empty")
            object.__setattr__(self, "terms", terms)

    @classmethod
    def all_words(cls) -> "Selector":
        return cls("all")

    @classmethod
    def for_pos(cls, pos: str) -> "Selector":
        return cls("pos", pos=pos)

    @classmethod
    def for_terms(cls, terms: Iterable[str]) -> "Selector":
        return cls("terms", terms=frozenset(terms))

    def describe(self) -> str:
        if self.kind == "pos":
            return f"pos:{self.pos}"
        if self.kind == "terms":
            return "terms:" + ",".join(sorted(self.terms))
        return "all"

    def select(self, token) -> str | None:
        """Normalized type of ``token`` if tracked, else None."""
        word = _word(token)
        if not word:
            return None
        if self.kind == "pos" and getattr(token, "pos", None) != self.pos:
            return None
        if self.kind == "terms" and word not in self.terms:
            return None
        return word


def cumulative_frequency(samples: Sequence[Sample], terms: Iterable[str]) -> tuple[list[int], list[int]]:
    """Occurrences of ``terms`` per sample and their running total."""
    wanted = {w for w in (normalize_word(t) for t in terms) if w}
    if not wanted:
        raise ValueError("term set is empty")
    per_sample = [sum(1 for t in s.tokens if _word(t) in wanted) for s in samples]
    running, cumulative = 0, []
    for count in per_sample:
        running += count
        cumulative.append(running)
    return per_sample, cumulative


def saturation_index(curve: "SaturationCurve | Sequence[int]", epsilon: float = DEFAULT_EPSILON,
                     window: int = DEFAULT_WINDOW) -> int | None:
    """Smallest 1-based sample index after which growth stays below ``epsilon``.

    Index ``i`` qualifies when every sample in ``(i, i + window]`` (clipped to
    the curve, at least one sample) adds at most ``epsilon`` times the final
    cumulative count. ``curve`` is a curve or its per-sample new counts.
    """
    per_sample_new = list(getattr(curve, "per_sample_new", curve))
    if not 0 < epsilon < 1:
        raise ValueError("epsilon must lie strictly between 0 and 1")
    if window < 1:
        raise ValueError("window must be at least 1")
    k = len(per_sample_new)
    limit = epsilon * sum(per_sample_new)
    for i in range(1, k):
        following = per_sample_new[i:min(i + window, k)]
        if all(count <= limit for count in following):
            return i
    return None


@dataclass(frozen=True)
class SaturationCurve:
    selector: str
    boundaries: tuple[tuple[int, int], ...]
    per_sample_new: tuple[int, ...]
    cumulative: tuple[int, ...]
    saturation_index: int | None
    epsilon: float = DEFAULT_EPSILON
    window: int = DEFAULT_WINDOW

    @property
    def sample_count(self) -> int:
        return len(self.per_sample_new)

    def to_csv(self, comments: Sequence[str] = ()) -> str:
        out = io.StringIO()
        out.write("sample,new,cumulative\n")
        for i, (new, total) in enumerate(zip(self.per_sample_new, self.cumulative), 1):
            out.write(f"{i},{new},{total}\n")
        for line in comments:
            out.write(f"# {line}\n")
        index = "none" if self.saturation_index is None else self.saturation_index
        out.write(f"# saturation_index={index}\n")
        return out.getvalue()


def new_type_curve(samples: Sequence[Sample], selector: Selector | None = None,
                   epsilon: float = DEFAULT_EPSILON, window: int = DEFAULT_WINDOW) -> SaturationCurve:
    selector = selector or Selector.all_words()
    seen: set[str] = set()
    per_sample, cumulative = [], []
    for sample in samples:
        fresh = 0
        for token in sample.tokens:
            word = selector.select(token)
            if word is not None and word not in seen:
                seen.add(word)
                fresh += 1
        per_sample.append(fresh)
        cumulative.append(len(seen))
    return SaturationCurve(
        selector=selector.describe(),
        boundaries=tuple((s.start, s.end) for s in samples),
        per_sample_new=tuple(per_sample),
        cumulative=tuple(cumulative),
        saturation_index=saturation_index(per_sample, epsilon, window),
        epsilon=epsilon,
        window=window,
    )


def read_terms(text: str) -> list[str]:
    """One term per line; blank lines and ``#`` comments are skipped."""
    return [line.strip() for line in text.splitlines() if line.strip() and not line.lstrip().startswith("#")]
