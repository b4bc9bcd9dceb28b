"""Exhaustive zero-divisor searches over Schubert basis pairs.

The effective cone of each codimension in G(k, n) is generated by the
Schubert classes of that codimension, and products of Schubert classes
have nonnegative coefficients, so a product of nonzero effective cycles
vanishes only if some pair of basis classes multiplies to zero.  The
searches here therefore range over unordered pairs of box partitions
(codimension convention, self-pairs included):

* :func:`enumerate_zero_pairs` lists vanishing pairs up to a codimension
  bound;
* :func:`compute_egd` finds the effective good divisibility, one less
  than the minimal total codimension of a vanishing pair;
* :func:`md_pairs` lists maximal disjoint pairs, the vanishing pairs of
  total codimension egd + 1;
* :func:`verify_thm_md` and :func:`verify_prop_comp` are mechanical
  checks of the two classification claims this engine is built around,
  scanning their full hypothesis spaces and reporting counterexamples
  (expected: none).

Scans use the O(k) Bruhat vanishing test; ``cross_validate`` recomputes
every product through the Littlewood-Richardson route as well.  Pair
enumeration is deterministic: partitions are ordered by (weight, parts)
and unordered pairs are canonicalized with the smaller partition first.
Optional thread fan-out (``threads`` argument or the SCHUBCALC_THREADS
environment variable) never changes output order: chunks are collected,
then sorted.
"""

from __future__ import annotations

import os
import time
from bisect import bisect_right
from concurrent.futures import ThreadPoolExecutor
from dataclasses import dataclass, field
from functools import lru_cache

from schubcalc.chow import (
    _pair_vanishes_unchecked,
    multiply,
    schubert_class,
)
from schubcalc.core import GrassmannContext, Partition, box_partitions

ZeroPair = tuple[Partition, Partition, int]


@dataclass(frozen=True)
class MdPair:
    """A maximal disjoint pair: basis classes with zero product at codim egd+1."""

    ctx: GrassmannContext
    a: Partition
    b: Partition

    @property
    def codims(self) -> tuple[int, int]:
        return (sum(self.a), sum(self.b))

    @property
    def pair_type(self) -> tuple[int, int]:
        """Unordered pair of codimensions, sorted ascending."""
        return tuple(sorted(self.codims))

    def to_json_dict(self) -> dict:
        return {
            "a": list(self.a),
            "b": list(self.b),
            "codims": list(self.codims),
            "type": list(self.pair_type),
        }


@dataclass(frozen=True)
class SearchReport:
    """Outcome of a full md-pair search on one Grassmannian."""

    ctx: GrassmannContext
    scanned_pair_count: int
    zero_pairs: tuple[ZeroPair, ...]
    computed_egd: int
    md_pairs: tuple[MdPair, ...]
    elapsed_ms: int

    def to_json_dict(self) -> dict:
        return {
            "k": self.ctx.k,
            "n": self.ctx.n,
            "scanned": self.scanned_pair_count,
            "egd": self.computed_egd,
            "zero_pairs": [
                {"a": list(a), "b": list(b), "codim_sum": s}
                for a, b, s in self.zero_pairs
            ],
            "md_pairs": [p.to_json_dict() for p in self.md_pairs],
            "elapsed_ms": self.elapsed_ms,
        }


@dataclass(frozen=True)
class VerificationReport:
    """Result of mechanically checking one claim on one Grassmannian."""

    claim: str
    k: int
    n: int
    status: str  # "pass" | "fail"
    counterexamples: tuple = ()
    hypothesis_count: int = 0
    exceptional_pairs: tuple = field(default=None)

    @property
    def passed(self) -> bool:
        return self.status == "pass"

    def to_json_dict(self) -> dict:
        out = {
            "claim": self.claim,
            "k": self.k,
            "n": self.n,
            "status": self.status,
            "counterexamples": [dict(c) for c in self.counterexamples],
            "hypothesis_count": self.hypothesis_count,
        }
        if self.exceptional_pairs is not None:
            out["exceptional_pairs"] = [
                {"lambda": list(a), "mu": list(b)} for a, b in self.exceptional_pairs
            ]
        return out


def _resolve_threads(threads: int | None) -> int:
    if threads is not None:
        return max(1, int(threads))
    env = os.environ.get("SCHUBCALC_THREADS")
    return max(1, int(env)) if env else 1


def _scan_rows(ctx, parts, weights, rows, max_sum, cross_validate) -> list[ZeroPair]:
    k, cols = ctx.k, ctx.cols
    found: list[ZeroPair] = []
    for i in rows:
        a = parts[i]
        wa = weights[i]
        for j in range(i, len(parts)):
            s = wa + weights[j]
            if s > max_sum:
                break  # weights are nondecreasing along the list
            b = parts[j]
            vanishes = _pair_vanishes_unchecked(a, b, k, cols)
            if cross_validate:
                lr_zero = not multiply(schubert_class(ctx, a), schubert_class(ctx, b))
                if lr_zero != vanishes:
                    raise RuntimeError(
                        f"vanishing criterion disagrees with LR product on "
                        f"{a} x {b} in {ctx}: fast={vanishes}, lr={lr_zero}"
                    )
            if vanishes:
                found.append((a, b, s) if a <= b else (b, a, s))
    return found


def enumerate_zero_pairs(
    ctx: GrassmannContext,
    max_codim_sum: int,
    cross_validate: bool = False,
    threads: int | None = None,
) -> list[ZeroPair]:
    """All unordered basis pairs {a, b} with |a|+|b| <= bound and zero product.

    Returns triples ``(a, b, codim_sum)`` with a <= b, sorted by
    (codim_sum, a, b).  ``cross_validate`` recomputes every scanned
    product via the LR rule and raises if the two routes ever disagree.
    """
    if not 0 <= max_codim_sum <= 2 * ctx.dim:
        raise ValueError(f"max_codim_sum {max_codim_sum} out of range for {ctx}")
    parts = box_partitions(ctx)
    weights = [sum(p) for p in parts]
    nthreads = _resolve_threads(threads)
    all_rows = range(len(parts))
    if nthreads == 1:
        found = _scan_rows(ctx, parts, weights, all_rows, max_codim_sum, cross_validate)
    else:
        chunks = [list(all_rows)[i::nthreads] for i in range(nthreads)]
        with ThreadPoolExecutor(max_workers=nthreads) as pool:
            futures = [
                pool.submit(
                    _scan_rows, ctx, parts, weights, chunk, max_codim_sum, cross_validate
                )
                for chunk in chunks
            ]
            found = [hit for f in futures for hit in f.result()]
    found.sort(key=lambda t: (t[2], t[0], t[1]))
    return found


@lru_cache(maxsize=None)
def compute_egd(ctx: GrassmannContext) -> int:
    """Effective good divisibility: minimal vanishing codim-sum minus one.

    Equals n for every Grassmannian; that equality is what the test
    suite verifies, it is not assumed here.
    """
    parts = box_partitions(ctx)
    buckets: dict[int, list[Partition]] = {}
    for p in parts:
        buckets.setdefault(sum(p), []).append(p)
    k, cols = ctx.k, ctx.cols
    for s in range(0, 2 * ctx.dim + 1):
        for wa in range(0, s // 2 + 1):
            wb = s - wa
            if wa not in buckets or wb not in buckets:
                continue
            for a in buckets[wa]:
                for b in buckets[wb]:
                    if wa == wb and b < a:
                        continue
                    if _pair_vanishes_unchecked(a, b, k, cols):
                        return s - 1
    raise RuntimeError(f"no vanishing pair found in {ctx}")  # unreachable: full box squares to zero


@lru_cache(maxsize=None)
def md_pairs(ctx: GrassmannContext) -> tuple[MdPair, ...]:
    """All maximal disjoint basis pairs of ``ctx``, deterministically ordered."""
    egd = compute_egd(ctx)
    zero = enumerate_zero_pairs(ctx, egd + 1)
    return tuple(MdPair(ctx, a, b) for a, b, s in zero if s == egd + 1)


def has_mdpair_of_type(ctx: GrassmannContext, pair_type) -> bool:
    """True when some md-pair of ``ctx`` has the given unordered type {i, j}."""
    t = tuple(sorted(int(x) for x in pair_type))
    if len(t) != 2:
        raise ValueError(f"pair type must have two entries, got {pair_type}")
    if t[0] + t[1] != compute_egd(ctx) + 1:
        return False
    return any(p.pair_type == t for p in md_pairs(ctx))


def search_report(
    ctx: GrassmannContext, cross_validate: bool = False, threads: int | None = None
) -> SearchReport:
    """Full md-pair search: egd, zero pairs at the critical codimension, timing."""
    start = time.perf_counter()
    egd = compute_egd(ctx)
    limit = egd + 1
    zero = enumerate_zero_pairs(ctx, limit, cross_validate=cross_validate, threads=threads)
    pairs = tuple(MdPair(ctx, a, b) for a, b, s in zero if s == limit)
    weights = [sum(p) for p in box_partitions(ctx)]
    from collections import Counter

    cnt = Counter(weights)
    scanned = 0
    for wa in cnt:
        for wb in cnt:
            if wa < wb and wa + wb <= limit:
                scanned += cnt[wa] * cnt[wb]
            elif wa == wb and 2 * wa <= limit:
                scanned += cnt[wa] * (cnt[wa] + 1) // 2
    elapsed_ms = int(round((time.perf_counter() - start) * 1000))
    return SearchReport(
        ctx=ctx,
        scanned_pair_count=scanned,
        zero_pairs=tuple(zero),
        computed_egd=egd,
        md_pairs=pairs,
        elapsed_ms=elapsed_ms,
    )


def _require_interior(ctx: GrassmannContext) -> None:
    if not 1 <= ctx.k <= ctx.n - 2:
        raise ValueError(f"claim requires 1 <= k <= n-2, got {ctx}")


def verify_thm_md(ctx: GrassmannContext, threads: int | None = None) -> VerificationReport:
    """Check: the only vanishing basis pair with codim-sum <= n+1 is {[X_H], [X_p]}.

    Scans every unordered basis pair in range, computing the product
    with BOTH the Bruhat test and the LR rule; any disagreement or any
    unexpected (missing) zero pair is a counterexample.
    """
    _require_interior(ctx)
    parts = box_partitions(ctx)
    weights = [sum(p) for p in parts]
    k, cols, limit = ctx.k, ctx.cols, ctx.n + 1
    counterexamples: list[dict] = []
    zero_found: list[tuple[Partition, Partition]] = []
    scanned = 0
    for i in range(len(parts)):
        a = parts[i]
        wa = weights[i]
        for j in range(i, len(parts)):
            if wa + weights[j] > limit:
                break
            b = parts[j]
            scanned += 1
            fast = _pair_vanishes_unchecked(a, b, k, cols)
            lr_zero = not multiply(schubert_class(ctx, a), schubert_class(ctx, b))
            if fast != lr_zero:
                counterexamples.append(
                    {"kind": "fast-vs-lr-mismatch", "a": list(a), "b": list(b)}
                )
            if lr_zero:
                zero_found.append((a, b) if a <= b else (b, a))
    expected = tuple(
        sorted([(1,) * ctx.rows, (cols,) + (0,) * (ctx.rows - 1)])
    )
    for a, b in zero_found:
        if (a, b) != expected:
            counterexamples.append(
                {"kind": "unexpected-zero-pair", "a": list(a), "b": list(b)}
            )
    if expected not in zero_found:
        counterexamples.append(
            {
                "kind": "missing-expected-pair",
                "a": list(expected[0]),
                "b": list(expected[1]),
            }
        )
    return VerificationReport(
        claim="thm-md",
        k=ctx.k,
        n=ctx.n,
        status="pass" if not counterexamples else "fail",
        counterexamples=tuple(counterexamples),
        hypothesis_count=scanned,
    )


def verify_prop_comp(ctx: GrassmannContext) -> VerificationReport:
    """Check the comparability dichotomy for box partition pairs.

    Over all ordered pairs (lam, mu) of box partitions satisfying
    ``|lam| <= |mu| - k(n-k) + (k+1)``, incomparability ``lam <= mu``
    fails exactly for the two pairs
    ((n-k, 0, ..., 0), (n-k-1, ..., n-k-1)) and
    ((1, ..., 1), (n-k, ..., n-k, 0)).
    """
    _require_interior(ctx)
    rows, cols, k = ctx.rows, ctx.cols, ctx.k
    parts = box_partitions(ctx)
    weights = [sum(p) for p in parts]
    exc_a = ((cols,) + (0,) * (rows - 1), (cols - 1,) * rows)
    exc_b = ((1,) * rows, (cols,) * (rows - 1) + (0,))
    expected = {exc_a, exc_b}
    counterexamples: list[dict] = []
    exceptional: list[tuple[Partition, Partition]] = []
    hypothesis_count = 0
    shift = k * cols - (k + 1)
    for mu in parts:
        bound = sum(mu) - shift
        if bound < 0:
            continue
        stop = bisect_right(weights, bound)
        for idx in range(stop):
            lam = parts[idx]
            hypothesis_count += 1
            incomparable = any(l > m for l, m in zip(lam, mu))
            is_expected = (lam, mu) in expected
            if incomparable != is_expected:
                counterexamples.append(
                    {
                        "kind": "incomparable-but-unexpected"
                        if incomparable
                        else "expected-but-comparable",
                        "lambda": list(lam),
                        "mu": list(mu),
                    }
                )
            if incomparable:
                exceptional.append((lam, mu))
    if set(exceptional) != expected:
        for lam, mu in sorted(expected - set(exceptional)):
            counterexamples.append(
                {
                    "kind": "expected-pair-not-found",
                    "lambda": list(lam),
                    "mu": list(mu),
                }
            )
    return VerificationReport(
        claim="prop-comp",
        k=ctx.k,
        n=ctx.n,
        status="pass" if not counterexamples else "fail",
        counterexamples=tuple(counterexamples),
        hypothesis_count=hypothesis_count,
        exceptional_pairs=tuple(sorted(exceptional)),
    )


def verify_egd(ctx: GrassmannContext) -> VerificationReport:
    """Check compute_egd(ctx) == n, reporting the scanned certificate space."""
    egd = compute_egd(ctx)
    report = search_report(ctx)
    counterexamples: tuple = ()
    if egd != ctx.n:
        counterexamples = (
            {"kind": "egd-mismatch", "egd": egd, "expected": ctx.n},
        )
    return VerificationReport(
        claim="egd",
        k=ctx.k,
        n=ctx.n,
        status="pass" if not counterexamples else "fail",
        counterexamples=counterexamples,
        hypothesis_count=report.scanned_pair_count,
    )
