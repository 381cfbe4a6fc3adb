"""Sparse multivariate Laurent polynomials in x_0..x_n over ``QPoly``.

The heavy operation in this package is picking one coefficient out of a large
product of small factors.  ``ct_of_factor_list`` multiplies the factors
incrementally and discards every partial monomial that can no longer reach the
requested exponent vector, using per-variable bounds on what the remaining
factors may still contribute.  ``expand_product`` is the unpruned counterpart
used as a cross-check.
"""

from __future__ import annotations

from typing import Iterable, Mapping, Sequence

from .qpoly import ONE, ZERO, QPoly

Monomial = tuple[int, ...]


class AmbientMismatchError(ValueError):
    """Operands live over different variable sets x_0..x_n."""


class LaurentPoly:
    """Map from exponent vectors (length n+1, entries may be negative) to
    nonzero ``QPoly`` coefficients.  Zero coefficients are dropped on
    construction; instances are treated as immutable."""

    __slots__ = ("n", "terms")

    n: int
    terms: dict[Monomial, QPoly]

    def __init__(self, n: int, terms: Mapping[Monomial, QPoly] | None = None) -> None:
        if n < 0:
            raise ValueError("need at least one variable")
        width = n + 1
        clean: dict[Monomial, QPoly] = {}
        if terms:
            for exps, coeff in terms.items():
                if len(exps) != width:
                    raise AmbientMismatchError(
                        f"exponent vector {exps!r} does not fit {width} variables"
                    )
                if not coeff.is_zero():
                    clean[tuple(exps)] = coeff
        object.__setattr__(self, "n", n)
        object.__setattr__(self, "terms", clean)

    def __setattr__(self, name, value):  # pragma: no cover - guard only
        raise AttributeError("LaurentPoly is immutable")

    # -- constructors ------------------------------------------------------

    @staticmethod
    def zero(n: int) -> "LaurentPoly":
        return LaurentPoly(n)

    @staticmethod
    def one(n: int) -> "LaurentPoly":
        return LaurentPoly(n, {(0,) * (n + 1): ONE})

    @staticmethod
    def constant(n: int, coeff: QPoly) -> "LaurentPoly":
        return LaurentPoly(n, {(0,) * (n + 1): coeff})

    @staticmethod
    def monomial(n: int, exps: Sequence[int], coeff: QPoly = ONE) -> "LaurentPoly":
        return LaurentPoly(n, {tuple(exps): coeff})

    # -- queries -----------------------------------------------------------

    def is_zero(self) -> bool:
        return not self.terms

    def num_terms(self) -> int:
        return len(self.terms)

    def coeff(self, exps: Sequence[int]) -> QPoly:
        """Coefficient of the given exponent vector (zero if absent)."""
        key = tuple(exps)
        if len(key) != self.n + 1:
            raise AmbientMismatchError(
                f"exponent vector {key!r} does not fit {self.n + 1} variables"
            )
        return self.terms.get(key, ZERO)

    def constant_term(self) -> QPoly:
        """Coefficient of x_0^0 ... x_n^0."""
        return self.terms.get((0,) * (self.n + 1), ZERO)

    def _check(self, other: "LaurentPoly") -> None:
        if self.n != other.n:
            raise AmbientMismatchError(f"{self.n + 1} variables vs {other.n + 1}")

    # -- arithmetic ----------------------------------------------------------

    def __add__(self, other: "LaurentPoly") -> "LaurentPoly":
        if not isinstance(other, LaurentPoly):
            return NotImplemented
        self._check(other)
        out = dict(self.terms)
        for exps, coeff in other.terms.items():
            prev = out.get(exps)
            out[exps] = coeff if prev is None else prev + coeff
        return LaurentPoly(self.n, out)

    def __neg__(self) -> "LaurentPoly":
        return LaurentPoly(self.n, {e: -c for e, c in self.terms.items()})

    def __sub__(self, other: "LaurentPoly") -> "LaurentPoly":
        if not isinstance(other, LaurentPoly):
            return NotImplemented
        return self + (-other)

    def __mul__(self, other: "LaurentPoly") -> "LaurentPoly":
        if not isinstance(other, LaurentPoly):
            return NotImplemented
        self._check(other)
        out: dict[Monomial, QPoly] = {}
        for e1, c1 in self.terms.items():
            for e2, c2 in other.terms.items():
                key = tuple(a + b for a, b in zip(e1, e2))
                c = c1 * c2
                prev = out.get(key)
                out[key] = c if prev is None else prev + c
        return LaurentPoly(self.n, out)

    def __eq__(self, other) -> bool:
        if not isinstance(other, LaurentPoly):
            return NotImplemented
        return self.n == other.n and self.terms == other.terms

    def __hash__(self):  # dict-of-dict content hash, rarely needed
        return hash((self.n, frozenset(self.terms.items())))

    # -- specialisations ------------------------------------------------------

    def eval_q1(self) -> "LaurentPoly":
        """Substitute q = 1 in every coefficient."""
        out: dict[Monomial, QPoly] = {}
        for exps, coeff in self.terms.items():
            out[exps] = QPoly(0, (coeff.at_q1(),))
        return LaurentPoly(self.n, out)

    # -- rendering -------------------------------------------------------------

    def render(self) -> str:
        """Canonical text form: monomials in lexicographic exponent order,
        coefficients parenthesised, zero exponents omitted."""
        if not self.terms:
            return "(0)"
        parts = []
        for exps in sorted(self.terms):
            coeff = self.terms[exps]
            vars_part = "*".join(f"x{i}^{e}" for i, e in enumerate(exps) if e != 0)
            if vars_part:
                parts.append(f"({coeff.render()})*{vars_part}")
            else:
                parts.append(f"({coeff.render()})")
        return " + ".join(parts)

    def __str__(self) -> str:
        return self.render()

    def __repr__(self) -> str:
        return f"LaurentPoly(n={self.n}, {len(self.terms)} terms)"


def shifted_factorial(z: Sequence[int], m: int, offset: int = 0) -> LaurentPoly:
    """Product (1 - q^offset * x^z)(1 - q^(offset+1) * x^z) ... , m factors.

    ``z`` is an exponent vector; ``offset=0`` gives the plain q-shifted
    factorial of the monomial, ``offset=1`` starts at q.
    """
    if m < 0:
        raise ValueError("negative length")
    n = len(z) - 1
    result = LaurentPoly.one(n)
    zkey = tuple(z)
    for k in range(m):
        binom = LaurentPoly(
            n, {(0,) * (n + 1): ONE, zkey: QPoly(offset + k, (-1,))}
        )
        result = result * binom
    return result


def expand_product(factors: Iterable[LaurentPoly], n: int) -> LaurentPoly:
    """Multiply the factors outright (no pruning)."""
    result = LaurentPoly.one(n)
    for f in factors:
        result = result * f
    return result


def ct_of_factor_list(factors: Sequence[LaurentPoly], target: Sequence[int]) -> QPoly:
    """Coefficient of x^target in the product of ``factors``.

    Factors are multiplied in ascending order of term count (stable on ties).
    After each step, a partial monomial e survives only if, for every
    variable, target - e lies inside the interval of exponents the remaining
    factors can still contribute.  An empty factor list is the constant 1.
    """
    target = tuple(target)
    width = len(target)
    n = width - 1
    for f in factors:
        if f.n != n:
            raise AmbientMismatchError(f"{f.n + 1} variables vs {width}")
        if f.is_zero():
            return ZERO

    ordered = sorted(factors, key=LaurentPoly.num_terms)

    # suffix[k][v] = (lo, hi) bounds of variable v over factors k..end
    k_factors = len(ordered)
    suffix_lo = [[0] * width for _ in range(k_factors + 1)]
    suffix_hi = [[0] * width for _ in range(k_factors + 1)]
    for k in range(k_factors - 1, -1, -1):
        exps_list = list(ordered[k].terms)
        for v in range(width):
            column = [e[v] for e in exps_list]
            suffix_lo[k][v] = suffix_lo[k + 1][v] + min(column)
            suffix_hi[k][v] = suffix_hi[k + 1][v] + max(column)

    partial: dict[Monomial, QPoly] = {(0,) * width: ONE}
    for k, f in enumerate(ordered):
        lo = suffix_lo[k + 1]
        hi = suffix_hi[k + 1]
        grown: dict[Monomial, QPoly] = {}
        for e1, c1 in partial.items():
            for e2, c2 in f.terms.items():
                key = tuple(a + b for a, b in zip(e1, e2))
                ok = True
                for v in range(width):
                    rest = target[v] - key[v]
                    if rest < lo[v] or rest > hi[v]:
                        ok = False
                        break
                if not ok:
                    continue
                c = c1 * c2
                prev = grown.get(key)
                grown[key] = c if prev is None else prev + c
        partial = {e: c for e, c in grown.items() if not c.is_zero()}
        if not partial:
            return ZERO
    return partial.get(target, ZERO)


def pi_action(f: LaurentPoly, k: int = 1) -> LaurentPoly:
    """Apply the index rotation x_i -> x_{i+k} k times, where stepping past
    x_n wraps to x_{i+k-n-1} at the price of one factor 1/q per wrap.

    Rotating n+1 times is the identity on homogeneous polynomials of
    degree 0.
    """
    if k < 0:
        raise ValueError("negative rotation")
    if k == 0 or f.is_zero():
        return f
    width = f.n + 1
    out: dict[Monomial, QPoly] = {}
    for exps, coeff in f.terms.items():
        new = [0] * width
        shift = 0
        for i, e in enumerate(exps):
            wraps, pos = divmod(i + k, width)
            new[pos] = e
            shift -= wraps * e
        out[tuple(new)] = coeff.shifted(shift)
    return LaurentPoly(f.n, out)


def homogeneous_degree(f: LaurentPoly) -> int | None:
    """Total degree if every monomial has the same one, else None.

    The zero polynomial has no degree and raises ``ValueError``.
    """
    if f.is_zero():
        raise ValueError("zero polynomial has no homogeneous degree")
    degrees = {sum(exps) for exps in f.terms}
    if len(degrees) == 1:
        return degrees.pop()
    return None


class FactoredProduct:
    """Coefficient source for a product kept in factored form.

    By default every requested coefficient runs the pruned extractor over the
    factor list.  With ``expand=True`` the product is expanded once up front
    and requests become dictionary lookups — worthwhile when many coefficients
    of the same product are needed.
    """

    def __init__(self, n: int, factors: Sequence[LaurentPoly], expand: bool = False) -> None:
        self.n = n
        self.factors = list(factors)
        for f in self.factors:
            if f.n != n:
                raise AmbientMismatchError(f"{f.n + 1} variables vs {n + 1}")
        self.expanded: LaurentPoly | None = None
        if expand:
            self.expanded = expand_product(self.factors, n)

    def coeff(self, target: Sequence[int]) -> QPoly:
        if self.expanded is not None:
            return self.expanded.coeff(target)
        return ct_of_factor_list(self.factors, target)

    def constant_term(self) -> QPoly:
        return self.coeff((0,) * (self.n + 1))

    def ct_times(self, multiplier: LaurentPoly) -> QPoly:
        """Constant term of multiplier * product, by linearity: each term
        c * x^e of the multiplier contributes c * (coefficient of x^-e)."""
        if multiplier.n != self.n:
            raise AmbientMismatchError(f"{multiplier.n + 1} variables vs {self.n + 1}")
        total = ZERO
        for exps, coeff in multiplier.terms.items():
            flipped = tuple(-e for e in exps)
            total = total + coeff * self.coeff(flipped)
        return total
