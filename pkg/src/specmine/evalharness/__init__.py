"""Ground truths, coverage trace generation and precision/recall scoring."""
from specmine.evalharness.coverage import PATH, STATE, generate_traces
from specmine.evalharness.metrics import EvalReport, precision_recall, render_table, reports_to_csv
from specmine.evalharness.models import (
    PUBLISHED,
    RECONSTRUCTED,
    GroundTruthModel,
    builtin_models,
    flower,
    get_model,
)

__all__ = [
    "PATH", "STATE", "generate_traces", "EvalReport", "precision_recall", "render_table",
    "reports_to_csv", "PUBLISHED", "RECONSTRUCTED", "GroundTruthModel", "builtin_models",
    "flower", "get_model",
]
