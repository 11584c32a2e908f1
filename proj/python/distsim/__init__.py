"""Distributional similarity measures over word co-occurrence stores."""

from ._core import (
    DistsimError,
    EvalReport,
    MeasureSpec,
    Score,
    ScoredPair,
    Store,
    build_windowed,
    ingest_triples,
    load_store,
    measures,
    merge,
    neighbors,
    pearson,
    pmi,
    read_gold,
    run_cli,
    score_pairs,
    similarity,
    spearman,
)

__all__ = [
    "DistsimError",
    "EvalReport",
    "MeasureSpec",
    "Score",
    "ScoredPair",
    "Store",
    "build_windowed",
    "ingest_triples",
    "load_store",
    "measures",
    "merge",
    "neighbors",
    "pearson",
    "pmi",
    "read_gold",
    "run_cli",
    "score_pairs",
    "similarity",
    "spearman",
]
