"""Partitions, Schubert symbols and the Bruhat order on a Grassmannian.

Throughout, ``G(k, n)`` is the Grassmannian of projective k-planes in
``P^n``, identified with (k+1)-dimensional linear subspaces of an
(n+1)-dimensional vector space.  A Schubert variety is indexed by a
*Schubert symbol* ``I = (i_1 < ... < i_{k+1})`` with ``1 <= i_j <= n+1``,
or equivalently by a Young diagram inside a ``(k+1) x (n-k)`` box: walk
the box boundary from the lower-left to the upper-right corner in n+1
steps, stepping vertically at step i exactly when ``i in I``; the diagram
is the region above-left of the path, i.e. the partition with

    lambda_j = i_{k+2-j} - (k+2-j),        j = 1, ..., k+1.

Two partition conventions coexist deliberately:

* the *dimension* convention ``symbol_to_dim_partition(ctx, I)``, whose
  weight is dim X_I (used throughout this module);
* the *codimension* convention, its box complement, whose weight is
  codim X_I and which is the canonical key of Chow classes in
  :mod:`schubcalc.chow`.

The conversion between the two is a single call to
:func:`dual_partition`; forcing one convention everywhere invites
off-by-complement bugs.

Partitions are plain ``tuple[int, ...]`` of fixed length k+1 with
explicit trailing zeros; symbols are plain 1-based tuples.  All
functions are pure and all values immutable, so everything here is
safe to share across threads.
"""

from __future__ import annotations

from dataclasses import dataclass
from functools import lru_cache
from itertools import combinations

Partition = tuple[int, ...]
SchubertSymbol = tuple[int, ...]

FILLED = "#"
EMPTY = "."
OVERLAY = "*"


@dataclass(frozen=True, order=True)
class GrassmannContext:
    """The ambient Grassmannian G(k, n) of projective k-planes in P^n."""

    k: int
    n: int

    def __post_init__(self) -> None:
        if self.n < 1 or not 0 <= self.k <= self.n - 1:
            raise ValueError(
                f"invalid Grassmannian G({self.k},{self.n}): need n >= 1 and 0 <= k <= n-1"
            )

    @property
    def rows(self) -> int:
        """Number of rows of the ambient box, k+1."""
        return self.k + 1

    @property
    def cols(self) -> int:
        """Number of columns of the ambient box, n-k."""
        return self.n - self.k

    @property
    def dim(self) -> int:
        """dim G(k, n) = (k+1)(n-k)."""
        return (self.k + 1) * (self.n - self.k)

    def __str__(self) -> str:
        return f"G({self.k},{self.n})"


def check_partition(ctx: GrassmannContext, parts) -> Partition:
    """Validate ``parts`` as a box partition for ``ctx`` and return it as a tuple.

    A valid partition has exactly k+1 entries (trailing zeros explicit),
    is weakly decreasing, and fits the box: ``cols >= p_1 >= ... >= p_{k+1} >= 0``.
    """
    p = tuple(int(x) for x in parts)
    if len(p) != ctx.rows:
        raise ValueError(
            f"partition {p} has {len(p)} parts, expected {ctx.rows} for {ctx}"
        )
    if any(a < b for a, b in zip(p, p[1:])):
        raise ValueError(f"partition {p} is not weakly decreasing")
    if p and (p[0] > ctx.cols or p[-1] < 0):
        raise ValueError(f"partition {p} does not fit the {ctx.rows}x{ctx.cols} box")
    return p


def normalize_partition(ctx: GrassmannContext, parts) -> Partition:
    """Pad or strip trailing zeros to length k+1, then validate."""
    p = list(int(x) for x in parts)
    while len(p) > ctx.rows and p and p[-1] == 0:
        p.pop()
    p.extend([0] * (ctx.rows - len(p)))
    return check_partition(ctx, p)


def check_symbol(ctx: GrassmannContext, indices) -> SchubertSymbol:
    """Validate a Schubert symbol: strictly increasing, within [1, n+1]."""
    s = tuple(int(x) for x in indices)
    if len(s) != ctx.rows:
        raise ValueError(
            f"symbol {s} has {len(s)} indices, expected {ctx.rows} for {ctx}"
        )
    if any(a >= b for a, b in zip(s, s[1:])):
        raise ValueError(f"symbol {s} is not strictly increasing")
    if s[0] < 1 or s[-1] > ctx.n + 1:
        raise ValueError(f"symbol {s} is out of range [1, {ctx.n + 1}] for {ctx}")
    return s


def symbol_to_dim_partition(ctx: GrassmannContext, symbol) -> Partition:
    """Young diagram of a Schubert symbol, dimension convention.

    ``lambda_j = i_{k+2-j} - (k+2-j)``; the weight of the result is the
    dimension of the Schubert variety X_I.
    """
    s = check_symbol(ctx, symbol)
    k = ctx.k
    return tuple(s[k - t] - (k + 1 - t) for t in range(k + 1))


def dim_partition_to_symbol(ctx: GrassmannContext, parts) -> SchubertSymbol:
    """Inverse of :func:`symbol_to_dim_partition`."""
    p = check_partition(ctx, parts)
    k = ctx.k
    return tuple(p[k - t] + (t + 1) for t in range(k + 1))


def dual_symbol(ctx: GrassmannContext, symbol) -> SchubertSymbol:
    """The dual symbol ``(n+2-i_{k+1}, ..., n+2-i_1)``; an involution."""
    s = check_symbol(ctx, symbol)
    return tuple(ctx.n + 2 - i for i in reversed(s))


def dual_partition(ctx: GrassmannContext, parts) -> Partition:
    """Box complement rotated by 180 degrees: ``dual_j = n-k - p_{k+2-j}``.

    Swaps the dimension and codimension conventions; the weights of a
    partition and its dual always add up to dim G(k, n).
    """
    p = check_partition(ctx, parts)
    return tuple(ctx.cols - x for x in reversed(p))


def partition_contains(outer, inner) -> bool:
    """Componentwise Young-diagram containment ``inner <= outer``.

    Accepts tuples of any lengths; missing entries count as zero.
    """
    outer = tuple(outer)
    inner = tuple(inner)
    if len(inner) > len(outer) and any(x > 0 for x in inner[len(outer):]):
        return False
    return all(i <= o for o, i in zip(outer, inner))


def bruhat_leq(ctx: GrassmannContext, symbol_a, symbol_b) -> bool:
    """Bruhat order on symbols: ``I <= L`` iff ``i_j <= l_j`` for every j.

    Equivalent to containment of the associated Young diagrams (this is
    exercised as a test invariant, not recomputed here).  Both symbols
    must be valid for ``ctx``; mixing contexts is rejected as far as the
    plain-tuple representation allows (wrong length or range).
    """
    a = check_symbol(ctx, symbol_a)
    b = check_symbol(ctx, symbol_b)
    return all(i <= j for i, j in zip(a, b))


def special_symbols(ctx: GrassmannContext) -> tuple[SchubertSymbol, SchubertSymbol]:
    """The symbols (I_H, I_p) of the two distinguished Schubert varieties.

    X_H parametrizes k-planes contained in a fixed hyperplane,
    I_H = (n-k, ..., n); X_p parametrizes k-planes through a fixed
    point, I_p = (1, n-k+2, ..., n+1).
    """
    n, k = ctx.n, ctx.k
    i_h = tuple(range(n - k, n + 1))
    i_p = (1,) + tuple(range(n - k + 2, n + 2))
    return i_h, i_p


@lru_cache(maxsize=None)
def box_partitions(ctx: GrassmannContext) -> tuple[Partition, ...]:
    """All partitions in the (k+1) x (n-k) box, sorted by (weight, parts).

    There are C(n+1, k+1) of them; the order is the canonical scan order
    used by the zero-divisor searches.
    """
    rows, cols = ctx.rows, ctx.cols
    out: list[Partition] = []

    def rec(prefix: list[int], row: int, cap: int) -> None:
        if row == rows:
            out.append(tuple(prefix))
            return
        for v in range(cap + 1):
            prefix.append(v)
            rec(prefix, row + 1, v)
            prefix.pop()

    rec([], 0, cols)
    out.sort(key=lambda p: (sum(p), p))
    return tuple(out)


def all_symbols(ctx: GrassmannContext) -> tuple[SchubertSymbol, ...]:
    """All C(n+1, k+1) Schubert symbols for ``ctx``, lexicographically."""
    return tuple(combinations(range(1, ctx.n + 2), ctx.rows))


def render_diagram(ctx: GrassmannContext, parts, overlay=None) -> str:
    """Fixed-width ASCII rendering of a Young diagram in its box.

    Each cell is two characters: ``"# "`` for a cell of the partition,
    ``". "`` for an empty box cell, ``"* "`` for an overlay cell
    (overlay wins over fill).  Trailing whitespace is stripped from each
    row and every row, including the last, ends with a newline.
    """
    p = check_partition(ctx, parts)
    o = check_partition(ctx, overlay) if overlay is not None else None
    lines = []
    for r in range(ctx.rows):
        cells = []
        for c in range(ctx.cols):
            if o is not None and c < o[r]:
                cells.append(OVERLAY)
            elif c < p[r]:
                cells.append(FILLED)
            else:
                cells.append(EMPTY)
        lines.append(" ".join(cells))
    return "".join(line + "\n" for line in lines)
