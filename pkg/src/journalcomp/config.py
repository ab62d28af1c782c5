"""Analysis configuration shared by the ingest and metrics layers."""

from dataclasses import dataclass

DIAGONAL_POLICIES = ("include", "exclude")
SYMMETRIZATION_MODES = ("sum", "citing_only", "cited_only")
ZERO_TC_POLICIES = ("reject", "exclude_as_basic")


@dataclass(frozen=True)
class AnalysisConfig:
    """Every knob the pipeline exposes, with defaults.

    similarity_clamp_epsilon: similarities at or above 1 - epsilon are clamped
        to 1 - epsilon before the distance transform, so identical citation
        profiles yield a large-but-finite pressure instead of a division by
        zero. Must lie in (0, 1e-3).
    diagonal_policy: "include" keeps the self-citation cells when comparing
        two citation rows; "exclude" deletes positions i and j from both rows
        before taking the cosine.
    symmetrization: how a directed inter-citation matrix is folded into the
        mutual-citation matrix ("sum"), or left directed ("citing_only" /
        "cited_only").
    zero_tc_policy: "reject" fails validation on a journal with zero total
        citations; "exclude_as_basic" keeps it as a rival but reports its own
        competitive intensity as missing.
    """

    similarity_clamp_epsilon: float = 1e-9
    diagonal_policy: str = "include"
    symmetrization: str = "sum"
    zero_tc_policy: str = "reject"

    def __post_init__(self):
        if not 0.0 < self.similarity_clamp_epsilon < 1e-3:
            raise ValueError(
                "similarity_clamp_epsilon must be in (0, 1e-3), got "
                f"{self.similarity_clamp_epsilon!r}"
            )
        if self.diagonal_policy not in DIAGONAL_POLICIES:
            raise ValueError(f"diagonal_policy must be one of {DIAGONAL_POLICIES}")
        if self.symmetrization not in SYMMETRIZATION_MODES:
            raise ValueError(f"symmetrization must be one of {SYMMETRIZATION_MODES}")
        if self.zero_tc_policy not in ZERO_TC_POLICIES:
            raise ValueError(f"zero_tc_policy must be one of {ZERO_TC_POLICIES}")
