"""Beta tables, the Hilbert depth criterion, and the alpha<->beta inversion.

For a quotient with alpha vector (a_0, ..., a_n) and a level 0 <= q <= n, the
beta table at q is

    b_k = sum_{j=0}^{k} (-1)^(k-j) * C(q-j, k-j) * a_j,   k = 0..q,

and the Hilbert depth is the largest d such that every entry of the beta
table at d is nonnegative.  The transform inverts exactly:

    a_k = sum_{j=0}^{k} C(q-j, k-j) * b_j,   k = 0..q.

All arithmetic is exact.  ``hdepth_report`` bundles both sides (S/I and I)
for a proper nonzero ideal, materializing full beta triangles for debugging.
"""

from __future__ import annotations

from dataclasses import dataclass

from .combinatorics import _PASCAL, binom_row
from .errors import DomainError
from .ideals import AlphaVector, Ideal, alpha_of_ideal, alpha_of_quotient


@dataclass(frozen=True)
class BetaTable:
    """The integers (b_0, ..., b_q) at one level q."""

    q: int
    values: tuple[int, ...]

    def __getitem__(self, k: int) -> int:
        return self.values[k]

    def __iter__(self):
        return iter(self.values)


def _counts(alpha) -> tuple[int, ...]:
    if isinstance(alpha, AlphaVector):
        return alpha.counts
    return tuple(alpha)


def beta_values(counts, q: int) -> tuple[int, ...]:
    """(b_0, ..., b_q) for the given alpha counts, exact."""
    n = len(counts) - 1
    if not 0 <= q <= n:
        raise ValueError(f"beta level q={q} outside [0, {n}]")
    out = []
    for k in range(q + 1):
        b = 0
        for j in range(k + 1):
            term = _PASCAL[q - j][k - j] * counts[j]
            b += term if (k - j) % 2 == 0 else -term
        out.append(b)
    return tuple(out)


def beta_table(alpha, q: int) -> BetaTable:
    """Beta table of an alpha vector at level q."""
    return BetaTable(q, beta_values(_counts(alpha), q))


def beta_triangle(alpha) -> tuple[BetaTable, ...]:
    """Beta tables for every level d = 0..n."""
    counts = _counts(alpha)
    return tuple(BetaTable(d, beta_values(counts, d)) for d in range(len(counts)))


def alpha_from_beta(table: BetaTable) -> tuple[int, ...]:
    """Recover (a_0, ..., a_q) from a beta table; exact inverse of beta_values."""
    q = table.q
    return tuple(
        sum(_PASCAL[q - j][k - j] * table.values[j] for j in range(k + 1))
        for k in range(q + 1)
    )


def hdepth(alpha) -> int:
    """The largest d in [0, n] whose beta table is entrywise nonnegative.

    Scans d from n downward and returns the first admissible level (d = 0 is
    always admissible, since b_0 = a_0 >= 0).  Raises DomainError on the
    all-zero alpha vector: the zero module has no depth.
    """
    counts = _counts(alpha)
    if not any(counts):
        raise DomainError("hdepth is undefined for the zero module (all-zero alpha)")
    n = len(counts) - 1
    for d in range(n, -1, -1):
        admissible = True
        for k in range(d + 1):
            b = 0
            for j in range(k + 1):
                term = _PASCAL[d - j][k - j] * counts[j]
                b += term if (k - j) % 2 == 0 else -term
            if b < 0:
                admissible = False
                break
        if admissible:
            return d
    raise AssertionError("unreachable: d = 0 is always admissible")


@dataclass(frozen=True)
class HdepthReport:
    """Everything the checkers need about one proper nonzero ideal."""

    ideal: Ideal
    alpha_quotient: AlphaVector
    alpha_ideal: AlphaVector
    hdepth_quotient: int
    hdepth_ideal: int
    beta_triangle_quotient: tuple[BetaTable, ...]
    beta_triangle_ideal: tuple[BetaTable, ...]
    principal: bool
    in_m2: bool

    @property
    def n(self) -> int:
        return self.ideal.n


def hdepth_report(I: Ideal) -> HdepthReport:
    """Compute alpha vectors, both Hilbert depths, and both beta triangles.

    Requires 0 != I != S; raises DomainError naming the offending side.
    """
    if I.is_zero:
        raise DomainError("hdepth report needs a nonzero ideal (I = 0 given)")
    if I.is_unit:
        raise DomainError("hdepth report needs a proper ideal (I = S given)")
    a_q = alpha_of_quotient(I)
    a_i = alpha_of_ideal(I)
    return HdepthReport(
        ideal=I,
        alpha_quotient=a_q,
        alpha_ideal=a_i,
        hdepth_quotient=hdepth(a_q),
        hdepth_ideal=hdepth(a_i),
        beta_triangle_quotient=beta_triangle(a_q),
        beta_triangle_ideal=beta_triangle(a_i),
        principal=I.is_principal,
        in_m2=I.in_m2,
    )


def complement_counts(n: int, counts) -> tuple[int, ...]:
    """Apply a_j -> C(n,j) - a_j (swaps the roles of I and S/I)."""
    row = binom_row(n)
    return tuple(row[j] - counts[j] for j in range(n + 1))
