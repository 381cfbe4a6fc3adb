"""First-layer coefficients of the q-Dyson product and their closed forms.

A layer selects m distinct indices I = {i_1 < ... < i_m} and m indices
J = {j_1 <= ... <= j_m} (repeats allowed) disjoint from I.  The first-layer
coefficient is the constant term of

    (x_{j_1} ... x_{j_m}) / (x_{i_1} ... x_{i_m}) * q-Dyson product,

equivalently the coefficient of (prod x_i) / (prod x_j) in the product
itself.  The closed form is a signed sum over nonempty subsets T of I whose
q-exponents are the layer exponents computed here.
"""

from __future__ import annotations

import itertools
import time
from dataclasses import dataclass
from fractions import Fraction
from typing import Iterable, Iterator, Sequence

from .dyson import DysonSpec, dyson_source, q_dyson_source
from .laurent import FactoredProduct
from .qpoly import QPoly, QRat, ZERO, multinomial, one_minus_q, q_multinomial
from .reports import VerificationReport, make_params


@dataclass(frozen=True)
class LayerSpec:
    """A choice of numerator indices J and denominator indices I over
    variables x_0..x_n; I strictly increasing, J weakly increasing, the two
    disjoint and of the same length m <= n."""

    n: int
    I: tuple[int, ...]  # noqa: E741 - interface name
    J: tuple[int, ...]

    def __post_init__(self):
        object.__setattr__(self, "I", tuple(self.I))
        object.__setattr__(self, "J", tuple(self.J))
        if self.n < 0:
            raise ValueError("need at least one variable")
        if len(self.I) != len(self.J):
            raise ValueError("index lists must have equal length")
        if len(self.I) > self.n:
            raise ValueError("at most n indices may be selected")
        for v in self.I + self.J:
            if not 0 <= v <= self.n:
                raise ValueError(f"index {v} out of range 0..{self.n}")
        if any(x >= y for x, y in zip(self.I, self.I[1:])):
            raise ValueError("I must be strictly increasing")
        if any(x > y for x, y in zip(self.J, self.J[1:])):
            raise ValueError("J must be weakly increasing")
        if set(self.I) & set(self.J):
            raise ValueError("I and J must be disjoint")

    @property
    def m(self) -> int:
        return len(self.I)


def count_upto(k: int, values: Iterable[int]) -> int:
    """Number of entries <= k, counted with multiplicity."""
    return sum(1 for v in values if v <= k)


def weight_vector(a: Sequence[int], T: Iterable[int]) -> tuple[int, ...]:
    """Copy of a with the entries indexed by T zeroed out."""
    tset = set(T)
    return tuple(0 if k in tset else ak for k, ak in enumerate(a))


def nonempty_subsets(values: Sequence[int]) -> Iterator[tuple[int, ...]]:
    """Nonempty subsets in a fixed order: by size, lexicographic within."""
    for size in range(1, len(values) + 1):
        yield from itertools.combinations(values, size)


def layer_exponent(T: Sequence[int], spec: LayerSpec, a: Sequence[int]) -> int:
    """q-exponent attached to subset T when the smallest selected index is 0:

        sum_k (count_upto(k, I) - count_upto(k, J)) * w_k

    with w the weight vector of a zeroed on T.
    """
    if not T:
        raise ValueError("subset must be nonempty")
    if spec.I[0] != 0:
        raise ValueError("only defined when the smallest selected index is 0")
    w = weight_vector(a, T)
    return sum(
        (count_upto(k, spec.I) - count_upto(k, spec.J)) * w[k]
        for k in range(spec.n + 1)
    )


def layer_exponent_general(T: Sequence[int], spec: LayerSpec, a: Sequence[int]) -> int:
    """q-exponent attached to subset T without restriction on min(I).

    With i1 = min(I), t = #{j in J : j < i1}, J- = {j < i1}, J+ = {j > i1}:

        t + sum_{k=i1..n} (count_upto(k, I) - count_upto(k, J+)) * w_k
          + sum_{k=0..i1-1} (t - count_upto(k, J-)) * a_k

    Coincides with ``layer_exponent`` whenever i1 = 0.
    """
    if not T:
        raise ValueError("subset must be nonempty")
    i1 = spec.I[0]
    j_below = [j for j in spec.J if j < i1]
    j_above = [j for j in spec.J if j > i1]
    t = len(j_below)
    w = weight_vector(a, T)
    high = sum(
        (count_upto(k, spec.I) - count_upto(k, j_above)) * w[k]
        for k in range(i1, spec.n + 1)
    )
    low = sum((t - count_upto(k, j_below)) * a[k] for k in range(i1))
    return t + high + low


def first_layer_target(spec: LayerSpec) -> tuple[int, ...]:
    """Exponent vector whose coefficient in the q-Dyson product is the
    first-layer coefficient: +1 at each index of I, -1 per occurrence in J."""
    target = [0] * (spec.n + 1)
    for i in spec.I:
        target[i] += 1
    for j in spec.J:
        target[j] -= 1
    return tuple(target)


def first_layer_brute(
    spec: LayerSpec, a: Sequence[int], source: FactoredProduct | None = None
) -> QPoly:
    """First-layer coefficient straight out of the product."""
    if source is None:
        source = q_dyson_source(DysonSpec(spec.n, tuple(a)))
    return source.coeff(first_layer_target(spec))


def first_layer_closed(spec: LayerSpec, a: Sequence[int]) -> QRat:
    """Closed form of the first-layer coefficient:

        qmultinomial(a) * sum over nonempty T subset I of
            (-1)^|T| q^(layer exponent of T)
            * (1 - q^(sum of a over T)) / (1 - q^(1 + total - sum of a over T))

    Layers with m = 0 are rejected.
    """
    if spec.m == 0:
        raise ValueError("layer must select at least one index")
    a = tuple(a)
    if len(a) != spec.n + 1:
        raise ValueError(f"expected {spec.n + 1} exponents, got {len(a)}")
    total = sum(a)
    acc = QRat(ZERO)
    for T in nonempty_subsets(spec.I):
        s_t = sum(a[k] for k in T)
        exponent = layer_exponent_general(T, spec, a)
        num = one_minus_q(s_t).shifted(exponent)
        if len(T) % 2:
            num = -num
        acc = acc + QRat(num, one_minus_q(1 + total - s_t))
    return q_multinomial(a) * acc


def first_layer_closed_q1(spec: LayerSpec, a: Sequence[int]) -> Fraction:
    """The q = 1 specialisation of the closed form:

        multinomial(a) * sum over nonempty T subset I of
            (-1)^|T| * (sum of a over T) / (1 + total - sum of a over T)

    Independent of J.
    """
    if spec.m == 0:
        raise ValueError("layer must select at least one index")
    a = tuple(a)
    total = sum(a)
    acc = Fraction(0)
    for T in nonempty_subsets(spec.I):
        s_t = sum(a[k] for k in T)
        term = Fraction(s_t, 1 + total - s_t)
        acc += -term if len(T) % 2 else term
    return multinomial(a) * acc


def first_layer_brute_q1(
    spec: LayerSpec, a: Sequence[int], source: FactoredProduct | None = None
) -> int:
    """First-layer coefficient of the classical product (integer)."""
    if source is None:
        source = dyson_source(DysonSpec(spec.n, tuple(a)))
    return source.coeff(first_layer_target(spec)).as_int()


def verify_first_layer(
    spec: LayerSpec,
    a: Sequence[int],
    source: FactoredProduct | None = None,
    classical_source: FactoredProduct | None = None,
) -> VerificationReport:
    """Brute-force first-layer coefficient against the closed form, plus the
    q = 1 cross-check against the classical product."""
    t0 = time.perf_counter()
    a = tuple(a)
    brute = first_layer_brute(spec, a, source)
    closed = first_layer_closed(spec, a)
    holds = QRat(brute) == closed

    q1_brute = first_layer_brute_q1(spec, a, classical_source)
    q1_closed = first_layer_closed_q1(spec, a)
    holds = holds and (q1_closed == q1_brute)

    elapsed = (time.perf_counter() - t0) * 1000.0
    return VerificationReport(
        identity="firstlayer",
        params=make_params(
            spec.n,
            a,
            spec.I,
            spec.J,
            extra={"q1_brute": str(q1_brute), "q1_closed": str(q1_closed)},
        ),
        holds=holds,
        lhs=brute.render(),
        rhs=closed.render(),
        elapsed_ms=round(elapsed, 3),
    )
