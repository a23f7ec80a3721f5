"""Laurent data at the gauge point for arithmetic-progression spectra.

A family eps_n = scale * (n + offset), n >= 0, gauged with |eps|^z, has a
trace that continues analytically to z = 0.  The finitely many negative
eigenvalues are split off and evaluated exactly at z = 0 with their signs;
the positive tail is a Hurwitz zeta value.  Regularized expectation values
are quotients of the resulting Laurent data, by constant terms when both
sides are regular and by residues when both sides have simple poles.
"""

from __future__ import annotations

import math
import warnings
from dataclasses import dataclass, field

from . import specfun
from .errors import (
    NonpositiveParameterError,
    PoleOrderMismatchError,
    ZeroDenominatorError,
    ZeroModeError,
)


class ZeroModeWarning(UserWarning):
    """A zero eigenvalue was dropped from an energy-weighted sum."""


@dataclass(frozen=True)
class SpectralFamily:
    """Eigenvalues eps_n = scale * (n + offset) for n = 0, 1, 2, ...

    weight multiplies every term of a gauged sum (it carries e.g. the
    particle/antiparticle sign), multiplicity counts identical copies.
    Descending index windows are rewritten to this ascending form by
    from_descending_window; the rewrite negates the eigenvalues, so
    energy-type sums over such a window need the opposite weight.
    """

    scale: float
    offset: float
    weight: int = 1
    multiplicity: int = 1
    has_zero_mode: bool = field(init=False)

    def __post_init__(self):
        if not self.scale > 0:
            raise NonpositiveParameterError("scale must be positive")
        if self.weight not in (-1, 1):
            raise ValueError("weight must be +1 or -1")
        if self.multiplicity < 1:
            raise ValueError("multiplicity must be a positive integer")
        zero = self.offset <= 0 and self.offset == int(self.offset)
        object.__setattr__(self, "has_zero_mode", zero)

    @classmethod
    def from_descending_window(
        cls,
        scale: float,
        offset: float,
        below: int,
        weight: int = 1,
        multiplicity: int = 1,
    ) -> "SpectralFamily":
        """Family enumerating scale * (n + offset) over n < below.

        The substitution n -> below - 1 - n makes the window ascending;
        the enumerated values are the negatives of the originals.
        """
        return cls(
            scale=scale,
            offset=1.0 - below - offset,
            weight=weight,
            multiplicity=multiplicity,
        )

    def eigenvalue(self, n: int) -> float:
        return self.scale * (n + self.offset)

    def negative_count(self) -> int:
        """Number of indices n >= 0 with n + offset < 0."""
        if self.offset >= 0:
            return 0
        m = math.ceil(-self.offset)
        # an exact zero mode sits at n = -offset, not below it
        if self.has_zero_mode:
            m = int(-self.offset)
        return m


@dataclass(frozen=True)
class GaugedSumSpec:
    """A spectral family with an energy-power insertion eps^k, k in {0, 1}."""

    family: SpectralFamily
    power: int

    def __post_init__(self):
        if self.power not in (0, 1):
            raise ValueError("power must be 0 (charge) or 1 (energy)")


@dataclass(frozen=True)
class LaurentValue:
    """Pole order, residue and constant term of a trace at the gauge point."""

    pole_order: int
    residue: complex
    constant: complex

    def __post_init__(self):
        if self.pole_order not in (0, 1):
            raise ValueError("pole order is capped at 1 for lattice families")
        if self.pole_order == 0 and self.residue != 0:
            raise ValueError("a regular value cannot carry a residue")


def gauged_trace(spec: GaugedSumSpec) -> LaurentValue:
    """Continue sum_n weight * mult * eps_n^k |eps_n|^z to z = 0.

    The terms with eps_n < 0 are split off and evaluated exactly at z = 0
    (|eps|^z -> 1); the remaining positive tail is
    scale^k * zeta_H(-k, offset + m), so the whole family is regular at
    z = 0 and the returned Laurent value has pole order zero.

    A zero eigenvalue is an error for power 0 (|0|^z is ill-defined) and
    is dropped with a warning for power 1, where it contributes nothing.
    """
    fam = spec.family
    k = spec.power
    m = fam.negative_count()
    skip_zero = False
    if fam.has_zero_mode:
        if k == 0:
            raise ZeroModeError(
                "family has a zero eigenvalue; |0|^z has no value at z = 0"
            )
        warnings.warn(
            "zero eigenvalue dropped from energy sum", ZeroModeWarning
        )
        skip_zero = True

    split = 0.0
    for n in range(m):
        split += (n + fam.offset) ** k  # sign kept, |eps|^z -> 1
    tail_offset = fam.offset + m + (1 if skip_zero else 0)
    tail = specfun.hurwitz_zeta(-k, tail_offset).real
    constant = fam.weight * fam.multiplicity * fam.scale**k * (split + tail)
    return LaurentValue(pole_order=0, residue=0j, constant=complex(constant))


def vev_quotient(num: LaurentValue, den: LaurentValue) -> tuple[complex, str]:
    """Regularized quotient of two traces at the gauge point.

    Both regular: ratio of constant terms.  Both simple poles: ratio of
    residues.  Mixed pole orders are reported, never coerced.
    """
    if num.pole_order != den.pole_order:
        raise PoleOrderMismatchError(
            f"numerator pole order {num.pole_order} != "
            f"denominator pole order {den.pole_order}"
        )
    if num.pole_order == 0:
        if den.constant == 0:
            raise ZeroDenominatorError("denominator constant term is zero")
        return num.constant / den.constant, "constant-ratio"
    if den.residue == 0:
        raise ZeroDenominatorError("denominator residue is zero")
    return num.residue / den.residue, "residue-ratio"


def rescale_laurent(value: LaurentValue, theta: float) -> LaurentValue:
    """Laurent data after replacing the gauge |eps|^z by (theta |eps|)^z.

    theta^z = 1 + z ln(theta) + ..., so a regular value is untouched and a
    simple pole shifts its constant term by residue * ln(theta).
    """
    if not theta > 0:
        raise NonpositiveParameterError("gauge rescaling needs theta > 0")
    if value.pole_order == 0:
        return value
    return LaurentValue(
        pole_order=1,
        residue=value.residue,
        constant=value.constant + value.residue * math.log(theta),
    )


def rescale_gauge(spec: GaugedSumSpec, theta: float) -> LaurentValue:
    """gauged_trace evaluated with the gauge (theta |eps|)^z."""
    return rescale_laurent(gauged_trace(spec), theta)
