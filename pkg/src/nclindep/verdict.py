"""Dependence verdicts with certificates, shared by the exact deciders and samplers.

Status semantics:

* ``dependent`` -- always carries coefficients that re-verify exactly;
* ``independent`` -- from a sampler, always carries a witness tuple (and a
  direction vector for the directional sampler) whose stacked evaluations
  have full rank; exact deciders certify independence with no witness;
* ``no_witness_found`` -- only ever emitted by the randomized samplers; it is
  evidence of local dependence, not proof, and records the trial count.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Optional

DEPENDENT = "dependent"
INDEPENDENT = "independent"
NO_WITNESS_FOUND = "no_witness_found"


@dataclass(frozen=True)
class DependenceVerdict:
    status: str
    coefficients: Optional[tuple] = None
    witness: Optional[object] = None  # MatTuple, when produced by a sampler
    direction: Optional[tuple] = None
    trials_used: int = 0
    note: Optional[str] = None

    @property
    def is_dependent(self) -> bool:
        return self.status == DEPENDENT

    @property
    def is_independent(self) -> bool:
        return self.status == INDEPENDENT

    def to_json(self, bounds: Optional[dict] = None) -> dict:
        from .matexact import mat_tuple_to_json

        out: dict = {"status": self.status}
        if self.coefficients is not None:
            out["coefficients"] = [str(c) for c in self.coefficients]
        if self.witness is not None:
            wit = mat_tuple_to_json(self.witness)
            if self.direction is not None:
                wit["direction"] = [str(c) for c in self.direction]
            out["witness"] = wit
        out["trials_used"] = self.trials_used
        if self.note:
            out["note"] = self.note
        if bounds is not None:
            out["bounds"] = bounds
        return out
