"""Trace coordinates of the irreducible representation classes.

Traces of the three cone generators are numbers 2cos(pi*t) with t rational,
so every comparison here is exact rational arithmetic; floating point only
appears as a cross-check discriminant. The module enumerates the unitary
classes directly and produces the real (non-unitary) classes by pulling back
rotations through the coverings that the euler classes select.
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from enum import Enum
from fractions import Fraction

from .errors import (
    CountMismatch,
    DegenerateAngle,
    InconsistentClassification,
    InjectivityViolation,
)
from .euler import (
    EulerClass,
    enumerate_E,
    enumerate_X0,
    reverse_orientation,
    seifert_from_euler,
)
from .seifert import (
    BrieskornParams,
    SeifertInvariant,
    euler_number,
    h1_order,
    solve_seifert,
)

# |kappa| below this is treated as "indistinguishable from reducible" and
# any irreducible label must clear it with the right sign
KAPPA_TOLERANCE = 1e-9


def _fold(angle: Fraction) -> Fraction:
    """Reduce an angle (in units of pi) into [0, 1] using evenness and 2-periodicity of cos."""
    t = angle % 2
    return 2 - t if t > 1 else t


@dataclass(frozen=True, order=True)
class TraceValue:
    """The number 2cos(pi*t) for rational t stored in canonical form 0 <= t <= 1.

    Folding (-1)**q * 2cos(pi*s) into this shape makes equality of trace
    values literal equality of the stored rationals.
    """

    t: Fraction

    def __post_init__(self) -> None:
        t = self.t if isinstance(self.t, Fraction) else Fraction(self.t)
        object.__setattr__(self, "t", t)
        if not 0 <= t <= 1:
            raise ValueError(f"canonical angle must lie in [0, 1], got {t}")

    @classmethod
    def from_angle(cls, angle: Fraction | int) -> "TraceValue":
        return cls(_fold(Fraction(angle)))

    @property
    def value(self) -> float:
        return 2.0 * math.cos(math.pi * float(self.t))

    def __str__(self) -> str:
        return f"2cos({self.t.numerator}π/{self.t.denominator})"


class ClassLabel(Enum):
    REDUCIBLE = "Reducible"
    SU2 = "SU2"
    SL2R = "SL2R"


@dataclass(frozen=True)
class CharacterTriple:
    """Generator traces (tr X, tr Y, tr Z) plus the central sign rho(h) = epsilon*I."""

    tx: TraceValue
    ty: TraceValue
    tz: TraceValue
    epsilon: int

    def __post_init__(self) -> None:
        if self.epsilon not in (1, -1):
            raise ValueError("epsilon must be +1 or -1")

    @property
    def angles(self) -> tuple[Fraction, Fraction, Fraction]:
        return (self.tx.t, self.ty.t, self.tz.t)

    @property
    def values(self) -> tuple[float, float, float]:
        return (self.tx.value, self.ty.value, self.tz.value)

    @property
    def key(self) -> tuple[Fraction, Fraction, Fraction]:
        """Identity of the class: the trace triple alone."""
        return self.angles


@dataclass(frozen=True)
class CountReport:
    """Class counts and the Casson-type identities tying them together."""

    total: int
    su2: int
    sl2r: int
    casson_abs: int
    casson_sl2c: int

    def __post_init__(self) -> None:
        if self.total != self.su2 + self.sl2r:
            raise CountMismatch(
                f"total {self.total} != su2 {self.su2} + sl2r {self.sl2r}"
            )
        if self.su2 % 2 or self.casson_abs != self.su2 // 2:
            raise CountMismatch(f"su2 count {self.su2} is not twice |casson|")
        if self.casson_sl2c != self.total:
            raise CountMismatch("sl2c casson invariant must equal the total count")
        if self.casson_sl2c - 2 * self.casson_abs != self.sl2r:
            raise CountMismatch("count identity sl2c - 2|casson| = sl2r failed")


def trace_of_generator(beta_i: int, a_i: int, order: int, b_i: int) -> TraceValue:
    """Canonical form of the generator trace 2cos(-order * b_i * pi / a_i).

    beta_i pins the expected residue of -order*b_i mod a_i: coherent covering
    data lands on beta_i or a_i - beta_i depending on the sign convention.
    """
    if not 0 < beta_i < a_i:
        raise ValueError(f"beta_i must lie in (0, {a_i}), got {beta_i}")
    if order < 1:
        raise ValueError("order must be a positive integer")
    # integer fold of -order*b_i/a_i into [0, 1]; one Fraction at the end
    folded = (-order * b_i) % (2 * a_i)
    if folded > a_i:
        folded = 2 * a_i - folded
    r = (-order * b_i) % a_i
    if r == 0:
        raise DegenerateAngle(
            f"generator of order {a_i} maps to the center (trace +-2)"
        )
    assert r in (beta_i, a_i - beta_i), "residue disagrees with the euler class"
    return TraceValue(Fraction(folded, a_i))


def _check_sphere_data(params: BrieskornParams, sigma: SeifertInvariant) -> None:
    if sigma.multiplicities != params.triple:
        raise ValueError("sigma multiplicities disagree with params")
    if h1_order(sigma) != 1:
        raise ValueError("sigma must describe a homology sphere (h1 order 1)")


def trace_triple_of(eu: EulerClass, sigma: SeifertInvariant) -> CharacterTriple:
    """Trace triple of the class attached to eu, computed from the covering order.

    The covering space eu selects has first homology of order a*|e|; the
    central generator goes to a lift of rotation by that order times pi, so
    epsilon is -1 exactly when the order is odd.
    """
    params = eu.params
    _check_sphere_data(params, sigma)
    order = h1_order(seifert_from_euler(eu, params))
    traces = [
        trace_of_generator(beta, ai, order, bi)
        for beta, (ai, bi) in zip(eu.betas, sigma.pairs)
    ]
    return CharacterTriple(*traces, epsilon=-1 if order % 2 else 1)


def is_reducible_triple(c: CharacterTriple) -> bool:
    """Exact test: the third angle equals the folded sum or difference of the first two."""
    t1, t2, t3 = c.angles
    return t3 == _fold(t1 + t2) or t3 == _fold(t1 - t2)


def kappa(c: CharacterTriple) -> float:
    """Floating discriminant t1^2 + t2^2 + t3^2 - t1*t2*t3 - 4 of the triple.

    Negative inside the unitary region, zero on the reducible walls, positive
    outside; used only to corroborate the exact tests.
    """
    t1, t2, t3 = c.values
    return t1 * t1 + t2 * t2 + t3 * t3 - t1 * t2 * t3 - 4.0


def classify(c: CharacterTriple) -> ClassLabel:
    """Split a triple into Reducible / SU2 / SL2R by exact rational tests.

    A triple of elliptic angles is unitary exactly when the third angle lies
    strictly inside the interval the first two can span,
    |t1 - t2| < t3 < min(t1 + t2, 2 - t1 - t2). The float discriminant must
    agree in sign, otherwise the data is inconsistent and we refuse to label.
    """
    for tv in (c.tx, c.ty, c.tz):
        if tv.t == 0 or tv.t == 1:
            raise DegenerateAngle("classification needs all traces strictly inside (-2, 2)")
    if is_reducible_triple(c):
        return ClassLabel.REDUCIBLE
    t1, t2, t3 = c.angles
    lower = abs(t1 - t2)
    upper = min(t1 + t2, 2 - t1 - t2)
    label = ClassLabel.SU2 if lower < t3 < upper else ClassLabel.SL2R
    k = kappa(c)
    if label is ClassLabel.SU2 and not k < -KAPPA_TOLERANCE:
        raise InconsistentClassification(f"unitary triple with kappa = {k}")
    if label is ClassLabel.SL2R and not k > KAPPA_TOLERANCE:
        raise InconsistentClassification(f"real-form triple with kappa = {k}")
    return label


def enumerate_su2(
    params: BrieskornParams, sigma: SeifertInvariant
) -> list[CharacterTriple]:
    """Trace triples of all irreducible unitary classes, in rotation-number order.

    For central sign epsilon, generator i is a rotation by pi*l_i/a_i whose
    a_i-th power must be epsilon**(-b_i) * I, forcing l_i even when epsilon
    is +1 and l_i = b_i mod 2 when epsilon is -1. A candidate survives
    exactly when it classifies as SU2, and the final count must match the
    closed form (a1-1)(a2-1)(a3-1)/4 - |X0|.
    """
    _check_sphere_data(params, sigma)
    if sigma.b != 0:
        raise ValueError("unitary enumeration needs data with b = 0 (product relator xyz = 1)")
    a1, a2, a3 = params.triple
    a = params.a
    cofactors = (a // a1, a // a2, a // a3)
    survivors: list[tuple[int, int, int, int]] = []
    for eps in (-1, 1):
        starts = [
            2 if (eps == 1 or bi % 2 == 0) else 1
            for bi in sigma.coefficients
        ]
        for l1 in range(starts[0], a1, 2):
            big1 = l1 * cofactors[0]
            for l2 in range(starts[1], a2, 2):
                big2 = l2 * cofactors[1]
                lower = abs(big1 - big2)
                upper = min(big1 + big2, 2 * a - big1 - big2)
                for l3 in range(starts[2], a3, 2):
                    big3 = l3 * cofactors[2]
                    if lower < big3 < upper:
                        survivors.append((l1, l2, l3, eps))
    survivors.sort()
    triples: list[CharacterTriple] = []
    for l1, l2, l3, eps in survivors:
        triple = CharacterTriple(
            TraceValue(Fraction(l1, a1)),
            TraceValue(Fraction(l2, a2)),
            TraceValue(Fraction(l3, a3)),
            epsilon=eps,
        )
        if classify(triple) is not ClassLabel.SU2:
            raise InconsistentClassification(
                f"rotation numbers {(l1, l2, l3)} passed the triangle test but failed classify"
            )
        triples.append(triple)
    expected = (a1 - 1) * (a2 - 1) * (a3 - 1) // 4 - len(enumerate_X0(params))
    if len(triples) != expected:
        raise CountMismatch(
            f"found {len(triples)} unitary classes on {params.triple}, expected {expected}"
        )
    if len({t.key for t in triples}) != len(triples):
        raise CountMismatch("duplicate trace triples in the unitary enumeration")
    return triples


def count_report(params: BrieskornParams) -> CountReport:
    """Class counts for the canonical Seifert data, with identities enforced."""
    a1, a2, a3 = params.triple
    product = (a1 - 1) * (a2 - 1) * (a3 - 1)
    assert product % 4 == 0  # a2, a3 odd
    total = product // 4
    su2 = len(enumerate_su2(params, solve_seifert(params)))
    sl2r = len(enumerate_E(params))
    return CountReport(
        total=total,
        su2=su2,
        sl2r=sl2r,
        casson_abs=su2 // 2,
        casson_sl2c=total,
    )


def phi_map(
    params: BrieskornParams, sigma: SeifertInvariant
) -> list[tuple[EulerClass, CharacterTriple]]:
    """The class-to-triple map on the beta = -1 classes, with injectivity asserted."""
    pairs = [(eu, trace_triple_of(eu, sigma)) for eu in enumerate_E(params)]
    keys = [triple.key for _, triple in pairs]
    if len(set(keys)) != len(keys):
        raise InjectivityViolation(
            f"distinct euler classes of {params.triple} share a trace triple"
        )
    return pairs


def reversed_trace_check(eu: EulerClass, sigma: SeifertInvariant) -> bool:
    """Recompute the triple through the orientation-reversed covering.

    The reversed covering must have the negated euler number, the same
    homology order, and (with the opposite sign convention for the central
    image) the same canonical trace triple.
    """
    params = eu.params
    forward = trace_triple_of(eu, sigma)
    cover = seifert_from_euler(eu, params)
    reversed_cover = seifert_from_euler(reverse_orientation(eu), params)
    if euler_number(reversed_cover) != -euler_number(cover):
        return False
    order = h1_order(reversed_cover)
    if order != h1_order(cover):
        return False
    reversed_traces = tuple(
        TraceValue.from_angle(Fraction(order * bi, ai)) for ai, bi in sigma.pairs
    )
    return (forward.tx, forward.ty, forward.tz) == reversed_traces
