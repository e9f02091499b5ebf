"""Discourse network workbench.

Builds the bipartite words x units graph from a transcript and target-word
list, derives word/unit/agent networks, steps them through discourse time
with SNA metrics, and carries the surrounding assessment machinery:
analysis sheets, an 11-category coding scheme, a five-level collaboration
rubric, and t-test statistics.
"""

from .corpus import (
    Corpus,
    DiscourseUnit,
    MatchPolicy,
    OccurrenceMatrix,
    Vocabulary,
    dump_corpus,
    load_corpus,
    load_vocabulary,
    match_words,
    occurrence_matrix,
)
from .errors import WorkbenchError
from .metrics import (
    betweenness_centrality,
    clustering_coefficient,
    degree_centrality,
    density,
    metric_timeseries,
)
from .netcore import (
    BipartiteGraph,
    MetricSeries,
    Network,
    NetworkTriple,
    advance,
    build_bipartite,
    project_agents,
    project_units,
    project_words,
    step_state,
)
from .codebook import (
    CODE_CATEGORIES,
    CodedReport,
    LikertResponse,
    RubricScore,
    frequency_table,
    likert_summary,
    map_itl_to_rubkb,
)
from .sheet import (
    AnalysisSheet,
    PhaseSegment,
    PivotalUnit,
    new_sheet,
    phase_summary,
    suggest_keywords,
    validate_sheet,
)
from .stats import TTestResult, mean_score, paired_t, t_pvalue, unpaired_t
from .sessions import Session, SessionStore

__version__ = "0.1.0"

__all__ = [
    "AnalysisSheet",
    "BipartiteGraph",
    "CODE_CATEGORIES",
    "CodedReport",
    "Corpus",
    "DiscourseUnit",
    "LikertResponse",
    "MatchPolicy",
    "MetricSeries",
    "Network",
    "NetworkTriple",
    "OccurrenceMatrix",
    "PhaseSegment",
    "PivotalUnit",
    "RubricScore",
    "Session",
    "SessionStore",
    "TTestResult",
    "Vocabulary",
    "WorkbenchError",
    "advance",
    "betweenness_centrality",
    "build_bipartite",
    "clustering_coefficient",
    "degree_centrality",
    "density",
    "dump_corpus",
    "frequency_table",
    "likert_summary",
    "load_corpus",
    "load_vocabulary",
    "map_itl_to_rubkb",
    "match_words",
    "mean_score",
    "metric_timeseries",
    "new_sheet",
    "occurrence_matrix",
    "paired_t",
    "phase_summary",
    "project_agents",
    "project_units",
    "project_words",
    "step_state",
    "suggest_keywords",
    "t_pvalue",
    "unpaired_t",
    "validate_sheet",
    "__version__",
]
