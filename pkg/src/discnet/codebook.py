"""Coding scheme, collaboration rubric, and questionnaire records.

Three record kinds feed the assessment statistics: coded reports (a set of
category ids per report), rubric scores (one 1-5 level per report), and
Likert responses (pre/post 1-5 per student and question).  A report may
carry several codes or none, so codes are a set, not a single label.
"""

from __future__ import annotations

import csv
import io
from dataclasses import dataclass

from .errors import CorpusFormatError, EncodingError, ParameterError, SampleSizeError
from .stats import TTestResult, mean_score, paired_t


@dataclass(frozen=True)
class CodeCategory:
    id: str
    name: str
    criteria: str


# Codes for "what changed your view of learning" statements, in table order.
CODE_CATEGORIES: tuple[CodeCategory, ...] = (
    CodeCategory("SHR", "Knowledge Sharing", "values exchanging what each member knows"),
    CodeCategory("COM", "Communication Skills", "stresses individual skill at keeping talk productive"),
    CodeCategory("DIV", "Idea Diversity", "values the variety of ideas a group surfaces"),
    CodeCategory("CNT", "Controversy", "finds group work effective for contested questions"),
    CodeCategory("ELB", "Argument Elaboration", "sees arguments improve by combining contributions"),
    CodeCategory("DEP", "Deep Understanding", "links collaboration to deeper individual understanding"),
    CodeCategory("EVD", "Reasoning and Evidences", "demands reasons backed by evidence to persuade"),
    CodeCategory("CRA", "Knowledge Creation", "frames learning as producing knowledge for the community"),
    CodeCategory("PTA", "Passive to Active", "reports a shift from receiving to producing"),
    CodeCategory("MET", "Meta Learning", "values analyzing the group's own process"),
    CodeCategory("MNG", "Collaboration Management", "attends to scheduling and task allocation"),
)

CODE_IDS: tuple[str, ...] = tuple(c.id for c in CODE_CATEGORIES)
_CODE_SET = frozenset(CODE_IDS)

LIKERT_QUESTIONS = ("general-learning", "collaborative-learning")

# Five attitude levels toward working in groups, lowest to highest.
RUBRIC_LEVELS: dict[int, str] = {
    1: "not ready for work together",
    2: "task role sharing",
    3: "knowledge sharing",
    4: "solo knowledge building",
    5: "collaborative knowledge building",
}

RUBRIC_LEVEL_CRITERIA: dict[int, str] = {
    1: "does not address how the group should work together",
    2: "group work means splitting tasks, with no shared responsibility",
    3: "members share responsibility by exchanging their own thinking",
    4: "members improve their own thinking through the exchange, decisions still individual",
    5: "members share responsibility and make substantive decisions together",
}

# The four-level source collaboration rubric maps onto the five levels by
# splitting its third level in two.
_ITL_TO_RUBRIC: dict[int, frozenset[int]] = {
    1: frozenset({1}),
    2: frozenset({2}),
    3: frozenset({3, 4}),
    4: frozenset({5}),
}


def map_itl_to_rubkb(itl_level: int) -> frozenset[int]:
    """Five-level rubric levels corresponding to a four-level source level."""
    try:
        return _ITL_TO_RUBRIC[itl_level]
    except KeyError:
        raise ParameterError(f"source rubric level must be 1..4, got {itl_level}") from None


@dataclass(frozen=True)
class CodedReport:
    report_id: str
    class_year: str
    codes: frozenset[str]
    excerpt: str | None = None

    def __post_init__(self):
        unknown = self.codes - _CODE_SET
        if unknown:
            raise ParameterError(
                f"report {self.report_id}: unknown codes {sorted(unknown)}"
            )
        if not self.class_year.strip():
            raise ParameterError(f"report {self.report_id}: class_year is empty")


@dataclass(frozen=True)
class RubricScore:
    report_id: str
    class_year: str
    level: int

    def __post_init__(self):
        if self.level not in RUBRIC_LEVELS:
            raise ParameterError(
                f"report {self.report_id}: rubric level must be 1..5, got {self.level}"
            )

    @property
    def level_name(self) -> str:
        return RUBRIC_LEVELS[self.level]


@dataclass(frozen=True)
class LikertResponse:
    student_id: str
    question: str
    pre: int
    post: int

    def __post_init__(self):
        if self.question not in LIKERT_QUESTIONS:
            raise ParameterError(
                f"question must be one of {LIKERT_QUESTIONS}, got {self.question!r}"
            )
        for label, v in (("pre", self.pre), ("post", self.post)):
            if not 1 <= v <= 5:
                raise ParameterError(
                    f"student {self.student_id}: {label} rating must be 1..5, got {v}"
                )


@dataclass(frozen=True)
class ClassFrequencies:
    class_year: str
    n: int
    counts: dict[str, int]  # all 11 category ids, zero-filled


def frequency_table(
    reports: list[CodedReport], classes: tuple[str, ...] = ()
) -> dict[str, ClassFrequencies]:
    """Per-class report count and per-category report counts.

    A category is counted once per report containing it.  ``classes`` can
    declare rows that must appear even with zero reports.  Keys are sorted.
    """
    years = sorted(set(classes) | {r.class_year for r in reports})
    table: dict[str, ClassFrequencies] = {}
    for year in years:
        members = [r for r in reports if r.class_year == year]
        counts = {cid: sum(1 for r in members if cid in r.codes) for cid in CODE_IDS}
        table[year] = ClassFrequencies(class_year=year, n=len(members), counts=counts)
    return table


@dataclass(frozen=True)
class LikertSummary:
    question: str
    pre_mean: float
    post_mean: float
    test: TTestResult


def likert_summary(responses: list[LikertResponse], question: str) -> LikertSummary:
    """Pre/post means plus the paired t-test for one question."""
    if question not in LIKERT_QUESTIONS:
        raise ParameterError(f"unknown question {question!r}")
    rows = [r for r in responses if r.question == question]
    if len(rows) < 2:
        raise SampleSizeError(
            f"need at least two responses for {question!r}, got {len(rows)}"
        )
    pre = [float(r.pre) for r in rows]
    post = [float(r.post) for r in rows]
    return LikertSummary(
        question=question,
        pre_mean=mean_score(pre),
        post_mean=mean_score(post),
        test=paired_t(pre, post),
    )


def _read_rows(data: bytes, expected_header: list[str], what: str):
    try:
        text = data.decode("utf-8")
    except UnicodeDecodeError as exc:
        raise EncodingError(f"{what} is not valid UTF-8: {exc}") from None
    reader = csv.reader(io.StringIO(text.lstrip("﻿"), newline=""))
    try:
        header = [h.strip() for h in next(reader)]
    except StopIteration:
        raise CorpusFormatError(f"{what} is empty: missing header", line=1) from None
    if header != expected_header:
        raise CorpusFormatError(
            f"{what}: bad header {','.join(header)!r}, expected {','.join(expected_header)!r}",
            line=1,
        )
    for lineno, row in enumerate(reader, start=2):
        if not row:
            continue
        if len(row) != len(expected_header):
            raise CorpusFormatError(
                f"{what} line {lineno}: expected {len(expected_header)} columns, got {len(row)}",
                line=lineno,
            )
        yield lineno, row


def load_coded_reports(data: bytes) -> list[CodedReport]:
    """CSV ``report_id,class_year,codes`` with ``|``-separated code ids."""
    reports = []
    for lineno, (rid, year, codes) in _read_rows(
        data, ["report_id", "class_year", "codes"], "coded reports"
    ):
        ids = frozenset(c.strip() for c in codes.split("|") if c.strip())
        try:
            reports.append(CodedReport(report_id=rid.strip(), class_year=year.strip(), codes=ids))
        except ParameterError as exc:
            raise CorpusFormatError(f"line {lineno}: {exc.message}", line=lineno) from None
    return reports


def load_rubric_scores(data: bytes) -> list[RubricScore]:
    """CSV ``report_id,class_year,level`` with integer levels 1..5."""
    scores = []
    for lineno, (rid, year, level) in _read_rows(
        data, ["report_id", "class_year", "level"], "rubric scores"
    ):
        try:
            lvl = int(level.strip())
        except ValueError:
            raise CorpusFormatError(
                f"line {lineno}: level {level!r} is not an integer", line=lineno
            ) from None
        try:
            scores.append(RubricScore(report_id=rid.strip(), class_year=year.strip(), level=lvl))
        except ParameterError as exc:
            raise CorpusFormatError(f"line {lineno}: {exc.message}", line=lineno) from None
    return scores


def load_likert_responses(data: bytes) -> list[LikertResponse]:
    """CSV ``student_id,question,pre,post`` with ratings 1..5."""
    responses = []
    for lineno, (sid, question, pre, post) in _read_rows(
        data, ["student_id", "question", "pre", "post"], "responses"
    ):
        try:
            pre_v, post_v = int(pre.strip()), int(post.strip())
        except ValueError:
            raise CorpusFormatError(
                f"line {lineno}: ratings must be integers", line=lineno
            ) from None
        try:
            responses.append(
                LikertResponse(
                    student_id=sid.strip(), question=question.strip(), pre=pre_v, post=post_v
                )
            )
        except ParameterError as exc:
            raise CorpusFormatError(f"line {lineno}: {exc.message}", line=lineno) from None
    return responses
