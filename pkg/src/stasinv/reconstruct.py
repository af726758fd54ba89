"""Recovery of a single missing weighted sample from the four-point identity.

A complete window (g0, g1, g2, g3) of unit-spaced weighted samples satisfies
g0 + g1 = a * (g2 + g3).  That one linear equation determines any single
unknown slot from the other three; the solver inverts it exactly, so exact
input types (e.g. Fraction) pass through without rounding.
"""

from __future__ import annotations

from dataclasses import dataclass

from .errors import ContractViolation, DegenerateParameter

__all__ = ["Window", "recover_missing", "predict_next"]


@dataclass(frozen=True)
class Window:
    """Four consecutive weighted samples, at most one marked missing.

    `g` holds the slot values; the slot at index `missing` (if any) is the
    unknown and its entry is ignored (conventionally None).  All other slots
    must be present.
    """

    g: tuple
    missing: int | None = None

    def __post_init__(self):
        g = tuple(self.g)
        object.__setattr__(self, "g", g)
        if len(g) != 4:
            raise ContractViolation(f"window needs exactly 4 slots, got {len(g)}")
        if self.missing is not None and self.missing not in (0, 1, 2, 3):
            raise ContractViolation(f"missing index must be in 0..3, got {self.missing}")
        holes = [i for i, v in enumerate(g) if v is None]
        if self.missing is None:
            if holes:
                raise ContractViolation(f"slots {holes} are empty but none marked missing")
        elif any(i != self.missing for i in holes):
            raise ContractViolation(
                f"empty slots {holes} but only index {self.missing} is marked missing")

    def residual(self, a) -> float:
        """|g0 + g1 - a*(g2 + g3)| for a complete window."""
        if self.missing is not None:
            raise ContractViolation("residual needs a complete window")
        g = self.g
        return abs(g[0] + g[1] - a * (g[2] + g[3]))


def recover_missing(window: Window, a):
    """Solve g0 + g1 = a*(g2 + g3) for the single missing slot.

    Missing slot 0 or 1 needs no division; slots 2 and 3 divide by a, so
    a = 0 is rejected there.  Arithmetic stays in the input number types.
    """
    m = window.missing
    if m is None:
        raise ContractViolation("window has no missing slot")
    g = window.g
    if m == 0:
        return a * (g[2] + g[3]) - g[1]
    if m == 1:
        return a * (g[2] + g[3]) - g[0]
    if a == 0:
        raise DegenerateParameter("a = 0 cannot determine slots 2 or 3")
    if m == 2:
        return (g[0] + g[1]) / a - g[3]
    return (g[0] + g[1]) / a - g[2]


def predict_next(g0, g1, g2, a):
    """Next weighted sample after (g0, g1, g2): (g0 + g1)/a - g2.

    Identical to recover_missing with the final slot missing.
    """
    if a == 0:
        raise DegenerateParameter("a = 0 cannot predict the next sample")
    return (g0 + g1) / a - g2
