"""Grid enumeration and (optionally parallel) execution of identity sweeps.

A sweep walks every exponent vector a in [0..amax]^(n+1) — and, for layer
identities, every admissible (I, J) layout — and verifies the chosen identity
on each instance.  Work is chunked by exponent vector so each worker expands
the relevant product once and reuses it across layouts; results are merged in
grid order regardless of completion order.
"""

from __future__ import annotations

import itertools
import random
from concurrent.futures import ProcessPoolExecutor
from dataclasses import dataclass
from typing import Sequence

from .dyson import DysonSpec, dyson_source, q_dyson_source, verify_dyson, verify_q_dyson
from .firstlayer import LayerSpec, verify_first_layer
from .kadell import verify_kadell
from .paired import (
    PairedLayer,
    matrix_choice_property,
    npc_holds,
    tail_cancel_values,
    verify_factorization,
    verify_paired,
)
from .reports import VerificationReport, make_params

IDENTITIES = ("dyson", "qdyson", "firstlayer", "kadell", "main", "lemmas")

FACTORIZATION_DRAWS = 500
TAIL_CANCEL_DRAWS = 100
CHOICE_PRODUCT_SIZES = (2, 3, 4, 5)


@dataclass
class SweepConfig:
    identity: str
    n: int
    amax: int
    mmax: int | None = None
    jobs: int = 1
    seed: int = 0
    semantics: str = "multiset"

    def validate(self) -> None:
        if self.identity not in IDENTITIES:
            raise ValueError(f"unknown identity {self.identity!r}; choose from {IDENTITIES}")
        if self.n < 1:
            raise ValueError("n must be at least 1")
        if self.amax < 0:
            raise ValueError("amax must be nonnegative")
        if self.jobs < 1:
            raise ValueError("jobs must be at least 1")
        if self.mmax is not None and self.mmax < 0:
            raise ValueError("m bound must be nonnegative")
        if self.semantics not in ("multiset", "set"):
            raise ValueError("semantics must be 'multiset' or 'set'")


def a_grid(n: int, amax: int) -> list[tuple[int, ...]]:
    """All exponent vectors, lexicographic."""
    return list(itertools.product(range(amax + 1), repeat=n + 1))


def layout_grid(n: int, mmin: int, mmax: int) -> list[tuple[tuple[int, ...], tuple[int, ...]]]:
    """All (I, J) layouts with mmin <= m <= mmax: I runs over m-subsets of
    0..n, J over weakly increasing m-tuples from the complement."""
    out: list[tuple[tuple[int, ...], tuple[int, ...]]] = []
    for m in range(mmin, min(mmax, n) + 1):
        if m == 0:
            out.append(((), ()))
            continue
        for I in itertools.combinations(range(n + 1), m):  # noqa: E741
            rest = [x for x in range(n + 1) if x not in I]
            for J in itertools.combinations_with_replacement(rest, m):
                out.append((I, J))
    return out


# -- per-exponent-vector workers (top level so they pickle) -------------------


def _run_task(task) -> list[VerificationReport]:
    kind = task[0]
    if kind == "qdyson":
        _, n, a = task
        return [verify_q_dyson(DysonSpec(n, a))]
    if kind == "dyson":
        _, n, a = task
        return [verify_dyson(DysonSpec(n, a))]
    if kind == "firstlayer":
        _, n, a, layouts = task
        q_src = q_dyson_source(DysonSpec(n, a), expand=True)
        c_src = dyson_source(DysonSpec(n, a), expand=True)
        return [
            verify_first_layer(LayerSpec(n, I, J), a, q_src, c_src)
            for I, J in layouts
        ]
    if kind == "kadell":
        _, n, a, layouts = task
        c_src = dyson_source(DysonSpec(n, a), expand=True)
        return [verify_kadell(LayerSpec(n, I, J), a, c_src) for I, J in layouts]
    if kind == "main":
        _, n, a, layouts, semantics = task
        q_src = q_dyson_source(DysonSpec(n, a), expand=True)
        return [
            verify_paired(PairedLayer.of(n, I, J), a, semantics, q_src)
            for I, J in layouts
        ]
    raise ValueError(f"unknown task kind {kind!r}")


def _execute(tasks: Sequence[tuple], jobs: int) -> list[VerificationReport]:
    if jobs <= 1 or len(tasks) <= 1:
        out: list[VerificationReport] = []
        for t in tasks:
            out.extend(_run_task(t))
        return out
    with ProcessPoolExecutor(max_workers=jobs) as pool:
        chunks = pool.map(_run_task, tasks)
        out = []
        for chunk in chunks:
            out.extend(chunk)
        return out


# -- randomized lemma suite ----------------------------------------------------


def random_paired_layer(rng: random.Random, nmax: int, mmin: int = 1) -> PairedLayer:
    """Uniform-ish draw of a paired layer with m >= mmin and n <= nmax."""
    n = rng.randint(max(2, mmin), nmax)
    m = rng.randint(mmin, n)
    I = tuple(sorted(rng.sample(range(n + 1), m)))  # noqa: E741
    rest = [x for x in range(n + 1) if x not in I]
    J = tuple(sorted(rng.choices(rest, k=m)))
    return PairedLayer.of(n, I, J)


def lemma_suite_reports(
    nmax: int,
    amax: int,
    seed: int,
    factorization_draws: int = FACTORIZATION_DRAWS,
    tail_cancel_draws: int = TAIL_CANCEL_DRAWS,
    semantics: str = "multiset",
) -> list[VerificationReport]:
    """Randomized checks of the supporting combinatorial statements:
    factorization of subset sums (with the vanishing product under the
    no-crossing condition), tail cancellation, and the exhaustive
    inversion-pair property of choice products."""
    rng = random.Random(seed)
    reports: list[VerificationReport] = []

    for _ in range(factorization_draws):
        layer = random_paired_layer(rng, nmax, mmin=2)
        a = tuple(rng.randint(0, amax) for _ in range(layer.n + 1))
        usize = rng.randint(1, layer.m - 1)
        U = tuple(sorted(rng.sample(layer.I, usize)))
        floors = [x for x in layer.I if x <= min(U)]
        i_v = rng.choice(floors)
        reports.append(verify_factorization(layer, U, i_v, a, semantics))

    for _ in range(tail_cancel_draws):
        layer = random_paired_layer(rng, nmax, mmin=2)
        a = tuple(rng.randint(0, amax) for _ in range(layer.n + 1))
        for h in range(2, layer.m + 1):
            bare, joined, expected = tail_cancel_values(layer, h, a, semantics)
            reports.append(
                VerificationReport(
                    identity="tailcancel",
                    params=make_params(
                        layer.n, a, layer.I, layer.J, extra={"h": h, "semantics": semantics}
                    ),
                    holds=(bare == joined == expected),
                    lhs=f"{bare},{joined}",
                    rhs=str(expected),
                    elapsed_ms=0.0,
                )
            )

    for size in CHOICE_PRODUCT_SIZES:
        ok = matrix_choice_property(size)
        reports.append(
            VerificationReport(
                identity="choiceproduct",
                params=make_params(size, [0] * (size + 1)),
                holds=ok,
                lhs="every choice product",
                rhs="contains an inversion pair",
                elapsed_ms=0.0,
            )
        )
    return reports


# -- top-level sweep ------------------------------------------------------------


def run_sweep(config: SweepConfig) -> tuple[list[VerificationReport], dict]:
    """Execute a sweep; returns the reports in grid order plus a summary
    {"total", "passed", "failed", "rejected", "seed"}."""
    config.validate()
    n, amax = config.n, config.amax
    rejected = 0

    if config.identity == "lemmas":
        reports = lemma_suite_reports(n, amax, config.seed, semantics=config.semantics)
    else:
        avecs = a_grid(n, amax)
        if config.identity == "qdyson":
            tasks = [("qdyson", n, a) for a in avecs]
        elif config.identity == "dyson":
            tasks = [("dyson", n, a) for a in avecs]
        elif config.identity == "firstlayer":
            mmax = n if config.mmax is None else config.mmax
            layouts = layout_grid(n, 1, mmax)
            tasks = [("firstlayer", n, a, layouts) for a in avecs]
        elif config.identity == "kadell":
            mmax = n if config.mmax is None else config.mmax
            layouts = layout_grid(n, 0, mmax)
            tasks = [("kadell", n, a, layouts) for a in avecs]
        else:  # main
            mmax = n if config.mmax is None else config.mmax
            layouts = layout_grid(n, 0, mmax)
            kept = [lay for lay in layouts if npc_holds(PairedLayer.of(n, *lay))]
            rejected = (len(layouts) - len(kept)) * len(avecs)
            tasks = [("main", n, a, kept, config.semantics) for a in avecs]
        reports = _execute(tasks, config.jobs)

    passed = sum(1 for r in reports if r.holds)
    summary = {
        "total": len(reports),
        "passed": passed,
        "failed": len(reports) - passed,
        "rejected": rejected,
        "seed": config.seed,
    }
    return reports, summary
