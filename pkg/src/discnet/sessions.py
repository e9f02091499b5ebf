"""On-disk analysis sessions: one folder per session, no database.

A session binds one corpus, one vocabulary, and one match policy; the
occurrence matrix and bipartite graph are built eagerly at creation since
corpora are classroom-sized and interactivity dominates.  New upload means
new session; inputs never change in place.

Layout under the store root::

    <session_id>/
        corpus.csv      original transcript bytes
        words.txt       original word list bytes
        policy.json     match policy
        meta.json       id, creation time, counts
        sheet.json      current analysis sheet (present once saved)
        records/        uploaded assessment record CSVs
"""

from __future__ import annotations

import json
import threading
import uuid
from dataclasses import dataclass
from datetime import datetime, timezone
from pathlib import Path

from .corpus import Corpus, MatchPolicy, Vocabulary, load_corpus, load_vocabulary, occurrence_matrix
from .errors import ParameterError, SessionNotFoundError
from .netcore import BipartiteGraph, build_bipartite
from .sheet import AnalysisSheet, ValidationReport, new_sheet, sheet_from_obj

RECORD_KINDS = ("coded", "rubric", "likert")


@dataclass
class Session:
    session_id: str
    created_at: str
    corpus: Corpus
    vocab: Vocabulary
    policy: MatchPolicy
    bip: BipartiteGraph
    path: Path

    @property
    def n_units(self) -> int:
        return len(self.corpus)

    @property
    def n_words(self) -> int:
        return len(self.vocab)

    def meta_obj(self) -> dict:
        return {
            "session_id": self.session_id,
            "created_at": self.created_at,
            "n_units": self.n_units,
            "n_words": self.n_words,
            "words": list(self.vocab.words),
            "agents": list(self.corpus.agent_order),
            "warnings": list(self.corpus.warnings),
        }


class SessionStore:
    """Directory-backed session registry.

    Reads are safe from any thread once a session is cached; mutations
    (creation, sheet saves, record uploads) are serialized per store.
    """

    def __init__(self, root: Path | str):
        self.root = Path(root)
        self.root.mkdir(parents=True, exist_ok=True)
        self._cache: dict[str, Session] = {}
        self._lock = threading.Lock()

    def create(
        self,
        corpus_bytes: bytes,
        words_bytes: bytes,
        policy: MatchPolicy = MatchPolicy(),
    ) -> Session:
        corpus = load_corpus(corpus_bytes)
        vocab = load_vocabulary(words_bytes, policy)
        matrix = occurrence_matrix(corpus, vocab, policy)
        bip = build_bipartite(matrix, corpus, vocab)
        session_id = uuid.uuid4().hex[:12]
        created_at = datetime.now(timezone.utc).isoformat(timespec="seconds")
        path = self.root / session_id
        session = Session(
            session_id=session_id,
            created_at=created_at,
            corpus=corpus,
            vocab=vocab,
            policy=policy,
            bip=bip,
            path=path,
        )
        with self._lock:
            path.mkdir(parents=True)
            (path / "records").mkdir()
            (path / "corpus.csv").write_bytes(corpus_bytes)
            (path / "words.txt").write_bytes(words_bytes)
            (path / "policy.json").write_text(
                json.dumps(policy.to_dict(), indent=2) + "\n", encoding="utf-8"
            )
            (path / "meta.json").write_text(
                json.dumps(session.meta_obj(), ensure_ascii=False, indent=2) + "\n",
                encoding="utf-8",
            )
            self._cache[session_id] = session
        return session

    def get(self, session_id: str) -> Session:
        with self._lock:
            if session_id in self._cache:
                return self._cache[session_id]
        session = self._load(session_id)
        with self._lock:
            self._cache.setdefault(session_id, session)
        return session

    def _load(self, session_id: str) -> Session:
        path = self.root / session_id
        if not (path / "meta.json").is_file():
            raise SessionNotFoundError(f"no session {session_id!r} in {self.root}")
        meta = json.loads((path / "meta.json").read_text(encoding="utf-8"))
        policy = MatchPolicy.from_dict(
            json.loads((path / "policy.json").read_text(encoding="utf-8"))
        )
        corpus = load_corpus((path / "corpus.csv").read_bytes())
        vocab = load_vocabulary((path / "words.txt").read_bytes(), policy)
        matrix = occurrence_matrix(corpus, vocab, policy)
        bip = build_bipartite(matrix, corpus, vocab)
        return Session(
            session_id=session_id,
            created_at=meta.get("created_at", ""),
            corpus=corpus,
            vocab=vocab,
            policy=policy,
            bip=bip,
            path=path,
        )

    def list_ids(self) -> list[str]:
        return sorted(p.name for p in self.root.iterdir() if (p / "meta.json").is_file())

    # sheets -----------------------------------------------------------------

    def save_sheet(self, session_id: str, sheet_obj: dict) -> ValidationReport:
        """Persist a sheet document and report its validation state.

        Incomplete drafts are stored as-is; only referential integrity
        failures raise.
        """
        session = self.get(session_id)
        sheet = sheet_from_obj(session.corpus, session.vocab, sheet_obj)
        report = sheet.validate()
        with self._lock:
            (session.path / "sheet.json").write_text(
                json.dumps(sheet.to_obj(), ensure_ascii=False, indent=2) + "\n",
                encoding="utf-8",
            )
        return report

    def load_sheet(self, session_id: str) -> AnalysisSheet:
        session = self.get(session_id)
        sheet_path = session.path / "sheet.json"
        if not sheet_path.is_file():
            return new_sheet(session.corpus, session.vocab)
        obj = json.loads(sheet_path.read_text(encoding="utf-8"))
        return sheet_from_obj(session.corpus, session.vocab, obj)

    # assessment records -----------------------------------------------------

    def save_records(self, session_id: str, kind: str, data: bytes) -> Path:
        if kind not in RECORD_KINDS:
            raise ParameterError(f"unknown record kind {kind!r}; expected one of {RECORD_KINDS}")
        session = self.get(session_id)
        target = session.path / "records" / f"{kind}.csv"
        with self._lock:
            target.write_bytes(data)
        return target

    def load_records(self, session_id: str, kind: str) -> bytes:
        if kind not in RECORD_KINDS:
            raise ParameterError(f"unknown record kind {kind!r}; expected one of {RECORD_KINDS}")
        session = self.get(session_id)
        target = session.path / "records" / f"{kind}.csv"
        if not target.is_file():
            raise SessionNotFoundError(f"session {session_id}: no {kind} records uploaded")
        return target.read_bytes()
