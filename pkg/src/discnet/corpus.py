"""Transcript ingestion, target-word lists, and word/unit matching.

The discourse transcript is a UTF-8 CSV with header ``id,agent,text`` and an
optional trailing ``group`` column.  The word list is plain UTF-8 text, one
word per line, with ``#`` comments and blank lines ignored.  Matching a word
list against a corpus yields a boolean occurrence matrix (units x words) that
seeds every network downstream.
"""

from __future__ import annotations

import csv
import io
import re
import unicodedata
from dataclasses import dataclass
from functools import cached_property

from .errors import (
    CorpusFormatError,
    EmptyCorpusError,
    EmptyVocabularyError,
    EncodingError,
    IntegrityError,
    ParameterError,
)

MATCH_MODES = ("normalized-token", "exact-token", "substring")

# Unicode-aware: one token = a maximal run of word characters.
_TOKEN_RE = re.compile(r"\w+")


@dataclass(frozen=True)
class MatchPolicy:
    """How vocabulary words are located inside unit text.

    ``normalized-token`` compares tokens after optional NFKC folding and
    casefolding (the default).  ``exact-token`` compares raw tokens and
    ignores both flags.  ``substring`` tests containment of the normalized
    word in the normalized text, which is the practical choice for
    unsegmented scripts where whitespace tokenization fails.
    """

    mode: str = "normalized-token"
    case_fold: bool = True
    unicode_normalize: bool = True

    def __post_init__(self):
        if self.mode not in MATCH_MODES:
            raise ParameterError(
                f"unknown match mode {self.mode!r}; expected one of {', '.join(MATCH_MODES)}"
            )

    def normalize(self, text: str) -> str:
        if self.mode == "exact-token":
            return text
        if self.unicode_normalize:
            text = unicodedata.normalize("NFKC", text)
        if self.case_fold:
            text = text.casefold()
        return text

    def tokens(self, text: str) -> list[str]:
        return _TOKEN_RE.findall(self.normalize(text))

    def to_dict(self) -> dict:
        return {
            "mode": self.mode,
            "case_fold": self.case_fold,
            "unicode_normalize": self.unicode_normalize,
        }

    @classmethod
    def from_dict(cls, d: dict) -> "MatchPolicy":
        return cls(
            mode=d.get("mode", "normalized-token"),
            case_fold=bool(d.get("case_fold", True)),
            unicode_normalize=bool(d.get("unicode_normalize", True)),
        )


@dataclass(frozen=True)
class DiscourseUnit:
    """One analyzable utterance: a turn, posting, or sentence."""

    unit_id: int
    agent: str
    text: str
    group: str | None = None

    def __post_init__(self):
        if not isinstance(self.unit_id, int) or self.unit_id < 1:
            raise IntegrityError(f"unit_id must be a positive integer, got {self.unit_id!r}")
        if not self.agent.strip():
            raise IntegrityError(f"unit {self.unit_id}: agent label is empty")

    @property
    def label(self) -> str:
        return f"u{self.unit_id}"


@dataclass(frozen=True)
class Corpus:
    """An ordered transcript of discourse units.

    ``warnings`` records tolerated oddities found at load time (currently
    empty-text rows).  Construction enforces unique, strictly increasing
    unit ids; emptiness is only rejected by analysis operations.
    """

    units: tuple[DiscourseUnit, ...]
    warnings: tuple[str, ...] = ()

    def __post_init__(self):
        prev = 0
        for u in self.units:
            if u.unit_id <= prev:
                raise IntegrityError(
                    f"unit ids must be unique and strictly increasing: "
                    f"{u.unit_id} after {prev}"
                )
            prev = u.unit_id

    def __len__(self) -> int:
        return len(self.units)

    @cached_property
    def agents(self) -> frozenset[str]:
        return frozenset(u.agent for u in self.units)

    @cached_property
    def agent_order(self) -> tuple[str, ...]:
        """Agent labels in order of first appearance."""
        seen: dict[str, None] = {}
        for u in self.units:
            seen.setdefault(u.agent, None)
        return tuple(seen)

    @cached_property
    def unit_ids(self) -> tuple[int, ...]:
        return tuple(u.unit_id for u in self.units)

    def position_of(self, unit_id: int) -> int:
        """0-based corpus position of a unit id; raises if unknown."""
        try:
            return self._positions[unit_id]
        except KeyError:
            raise IntegrityError(f"unknown unit id {unit_id}") from None

    @cached_property
    def _positions(self) -> dict[int, int]:
        return {u.unit_id: i for i, u in enumerate(self.units)}


@dataclass(frozen=True)
class Vocabulary:
    """Ordered list of target words, deduplicated after normalization."""

    words: tuple[str, ...]
    normalized: bool = True

    def __post_init__(self):
        if len(set(self.words)) != len(self.words):
            raise IntegrityError("vocabulary contains duplicate entries")

    def __len__(self) -> int:
        return len(self.words)

    def index_of(self, word: str) -> int:
        try:
            return self._index[word]
        except KeyError:
            raise ParameterError(f"word {word!r} is not in the vocabulary") from None

    @cached_property
    def _index(self) -> dict[str, int]:
        return {w: i for i, w in enumerate(self.words)}


@dataclass(frozen=True)
class OccurrenceMatrix:
    """Boolean incidence of words in units.

    Stored sparsely as one frozenset of matched word indices per unit, in
    corpus order.  ``cell(u, w)`` exposes the dense view.
    """

    n_units: int
    n_words: int
    rows: tuple[frozenset[int], ...]

    def __post_init__(self):
        if len(self.rows) != self.n_units:
            raise IntegrityError(
                f"matrix has {len(self.rows)} rows but claims {self.n_units} units"
            )
        for i, row in enumerate(self.rows):
            for w in row:
                if not 0 <= w < self.n_words:
                    raise IntegrityError(f"row {i}: word index {w} out of range")

    def cell(self, unit_pos: int, word_idx: int) -> bool:
        return word_idx in self.rows[unit_pos]

    @property
    def incidence_count(self) -> int:
        return sum(len(r) for r in self.rows)

    def dense(self) -> list[list[bool]]:
        return [[w in row for w in range(self.n_words)] for row in self.rows]


def _decode_utf8(data: bytes, what: str) -> str:
    try:
        text = data.decode("utf-8")
    except UnicodeDecodeError as exc:
        raise EncodingError(f"{what} is not valid UTF-8: {exc}") from None
    return text.lstrip("﻿")


_HEADERS = (["id", "agent", "text"], ["id", "agent", "text", "group"])


def load_corpus(data: bytes) -> Corpus:
    """Parse a transcript CSV into a Corpus.

    Expects UTF-8 with RFC-4180 quoting and the exact header
    ``id,agent,text`` or ``id,agent,text,group``.  Rows with empty text are
    kept and reported through ``Corpus.warnings``.
    """
    text = _decode_utf8(data, "corpus file")
    reader = csv.reader(io.StringIO(text, newline=""))
    try:
        header = next(reader)
    except StopIteration:
        raise CorpusFormatError("corpus file is empty: missing header row", line=1) from None
    header = [h.strip() for h in header]
    if header not in _HEADERS:
        raise CorpusFormatError(
            f"bad header {','.join(header)!r}: expected 'id,agent,text' or 'id,agent,text,group'",
            line=1,
        )
    has_group = len(header) == 4

    units: list[DiscourseUnit] = []
    warnings: list[str] = []
    seen_ids: set[int] = set()
    prev_id = 0
    for lineno, row in enumerate(reader, start=2):
        if not row:
            continue
        if len(row) != len(header):
            raise CorpusFormatError(
                f"line {lineno}: expected {len(header)} columns, got {len(row)}", line=lineno
            )
        raw_id, agent, body = row[0].strip(), row[1], row[2]
        try:
            unit_id = int(raw_id)
        except ValueError:
            raise CorpusFormatError(
                f"line {lineno}: id {raw_id!r} is not an integer", line=lineno
            ) from None
        if unit_id < 1:
            raise IntegrityError(f"line {lineno}: id {unit_id} is not positive", line=lineno)
        if unit_id in seen_ids:
            raise IntegrityError(f"line {lineno}: duplicate unit id {unit_id}", line=lineno)
        if unit_id <= prev_id:
            raise IntegrityError(
                f"line {lineno}: unit id {unit_id} is not increasing (previous {prev_id})",
                line=lineno,
            )
        if not agent.strip():
            raise IntegrityError(f"line {lineno}: agent label is empty", line=lineno)
        if not body.strip():
            warnings.append(f"line {lineno}: unit {unit_id} has empty text")
        group = row[3] if has_group and row[3] != "" else None
        units.append(DiscourseUnit(unit_id=unit_id, agent=agent.strip(), text=body, group=group))
        seen_ids.add(unit_id)
        prev_id = unit_id

    return Corpus(units=tuple(units), warnings=tuple(warnings))


def dump_corpus(corpus: Corpus) -> bytes:
    """Serialize back to the transcript CSV; load_corpus round-trips it."""
    has_group = any(u.group is not None for u in corpus.units)
    buf = io.StringIO(newline="")
    writer = csv.writer(buf, lineterminator="\n")
    writer.writerow(["id", "agent", "text", "group"] if has_group else ["id", "agent", "text"])
    for u in corpus.units:
        row = [str(u.unit_id), u.agent, u.text]
        if has_group:
            row.append(u.group or "")
        writer.writerow(row)
    return buf.getvalue().encode("utf-8")


def load_vocabulary(data: bytes, policy: MatchPolicy = MatchPolicy()) -> Vocabulary:
    """Parse a word list: one word per line, ``#`` comments, blanks ignored.

    Entries are normalized under ``policy`` and deduplicated keeping the
    first occurrence.  An empty result is an error.
    """
    text = _decode_utf8(data, "word list")
    words: dict[str, None] = {}
    for line in text.splitlines():
        entry = line.strip()
        if not entry or entry.startswith("#"):
            continue
        entry = policy.normalize(entry)
        if entry:
            words.setdefault(entry, None)
    if not words:
        raise EmptyVocabularyError("word list contains no words after filtering")
    return Vocabulary(words=tuple(words), normalized=policy.mode != "exact-token")


def match_words(unit: DiscourseUnit, vocab: Vocabulary, policy: MatchPolicy) -> frozenset[int]:
    """Indices of vocabulary words present in the unit text under the policy."""
    if len(vocab) == 0:
        raise EmptyVocabularyError("cannot match against an empty vocabulary")
    if policy.mode == "substring":
        text = policy.normalize(unit.text)
        return frozenset(
            i for i, w in enumerate(vocab.words) if (nw := policy.normalize(w)) and nw in text
        )
    tokens = set(policy.tokens(unit.text))
    return frozenset(i for i, w in enumerate(vocab.words) if policy.normalize(w) in tokens)


def occurrence_matrix(
    corpus: Corpus, vocab: Vocabulary, policy: MatchPolicy = MatchPolicy()
) -> OccurrenceMatrix:
    """Match every unit against the vocabulary; rows follow corpus order."""
    if len(corpus) == 0:
        raise EmptyCorpusError("cannot build an occurrence matrix from an empty corpus")
    if len(vocab) == 0:
        raise EmptyVocabularyError("cannot build an occurrence matrix from an empty vocabulary")
    if policy.mode == "substring":
        rows = tuple(match_words(u, vocab, policy) for u in corpus.units)
    else:
        # One dict lookup per token instead of one scan per word.
        index = {policy.normalize(w): i for i, w in enumerate(vocab.words)}
        rows = tuple(
            frozenset(index[t] for t in set(policy.tokens(u.text)) if t in index)
            for u in corpus.units
        )
    return OccurrenceMatrix(n_units=len(corpus), n_words=len(vocab), rows=rows)
