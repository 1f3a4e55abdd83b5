"""
Pydantic models for mining and benchmark reports

Records are written one JSON object per line; the summaries are also dumped
as YAML next to the archive.
"""
from typing import List, Optional, Tuple

from pydantic import BaseModel, ConfigDict, Field, model_validator


class DisagreementRecord(BaseModel):
    """One trial where the heuristic and the exact oracle disagree"""
    trial: int = Field(..., ge=0, description="Trial index within the run")
    provenance: str = Field(..., description="How the pair was built (permuted, independent-gnp, named:<a>/<b>)")
    left_g6: str = Field(..., description="graph6 encoding of the left graph")
    right_g6: str = Field(..., description="graph6 encoding of the right graph")
    heuristic: str = Field(..., description="Heuristic outcome")
    oracle: bool = Field(..., description="Exact oracle answer: True when isomorphic")
    failure_stage: Optional[str] = Field(None, description="Where the heuristic rejected, if it did")
    trace: List[Tuple[int, int]] = Field(default_factory=list, description="Removed (G, H) vertex pairs")

    model_config = ConfigDict(
        json_schema_extra={
            "example": {
                "trial": 2000,
                "provenance": "named:rook_4x4/shrikhande",
                "left_g6": "O...",
                "right_g6": "O...",
                "heuristic": "HEURISTIC_ISOMORPHIC",
                "oracle": False,
                "failure_stage": None,
                "trace": [[0, 0], [1, 1]],
            }
        }
    )

    @property
    def is_false_accept(self) -> bool:
        return self.heuristic == "HEURISTIC_ISOMORPHIC" and not self.oracle


class MiningReport(BaseModel):
    """Tally of heuristic verdicts against the exact oracle"""
    seed: int = Field(..., ge=0)
    min_n: int = Field(..., ge=1)
    max_n: int = Field(..., ge=1)
    edge_probability: float = Field(..., ge=0.0, le=1.0)
    trials: int = Field(0, ge=0)
    agreements: int = Field(0, ge=0)
    false_accepts: List[DisagreementRecord] = Field(default_factory=list)
    false_rejects: List[DisagreementRecord] = Field(default_factory=list)
    disconnected_intermediate_count: int = Field(0, ge=0)
    permuted_trials: int = Field(0, ge=0)
    permuted_round_one_rejects: int = Field(0, ge=0, description="Relabeled pairs rejected in the first round; must stay 0")
    verified_mappings: int = Field(0, ge=0, description="Complete traces whose candidate mapping is an isomorphism")
    unsound_witnesses: int = Field(0, ge=0, description="Verified mappings the oracle rejects; must stay 0")
    cross_checked: int = Field(0, ge=0, description="Trials also decided by exhaustive enumeration")
    oracle_mismatches: int = Field(0, ge=0, description="Backtracking and enumeration disagreed; must stay 0")

    @model_validator(mode="after")
    def _tally_adds_up(self) -> "MiningReport":
        if self.agreements + len(self.false_accepts) + len(self.false_rejects) != self.trials:
            raise ValueError("agreements + false accepts + false rejects must equal trials")
        return self

    def summary(self) -> dict:
        return {
            "seed": self.seed,
            "n_range": [self.min_n, self.max_n],
            "edge_probability": self.edge_probability,
            "trials": self.trials,
            "permuted_trials": self.permuted_trials,
            "permuted_round_one_rejects": self.permuted_round_one_rejects,
            "agreements": self.agreements,
            "false_accepts": len(self.false_accepts),
            "false_rejects": len(self.false_rejects),
            "disconnected_intermediate": self.disconnected_intermediate_count,
            "verified_mappings": self.verified_mappings,
            "unsound_witnesses": self.unsound_witnesses,
            "cross_checked": self.cross_checked,
            "oracle_mismatches": self.oracle_mismatches,
        }


class BenchPoint(BaseModel):
    n: int = Field(..., ge=4)
    median_seconds: float = Field(..., gt=0.0)
    reps: int = Field(..., ge=1)


class BenchReport(BaseModel):
    """Median decision time per size and the fitted log-log slope"""
    edge_probability: float = Field(..., ge=0.0, le=1.0)
    seed: int = Field(..., ge=0)
    points: List[BenchPoint] = Field(default_factory=list)
    slope: Optional[float] = Field(None, description="Least-squares slope of log(time) on log(n); None with fewer than two sizes")

    @model_validator(mode="after")
    def _sizes_increase(self) -> "BenchReport":
        sizes = [point.n for point in self.points]
        if any(b <= a for a, b in zip(sizes, sizes[1:])):
            raise ValueError("benchmark sizes must be strictly increasing")
        return self
