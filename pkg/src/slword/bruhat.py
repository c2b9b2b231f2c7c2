"""Bruhat and big-cell decompositions in SL_n, plus the open-cell splitting
used by the factorization pipeline.

Big cell: g lies in U- T U exactly when all leading principal minors of g are
nonzero, and then g = lower * diag * upper uniquely (LDU elimination without
pivoting; a zero pivot at step k is the same thing as a vanishing k-th minor).

Bruhat: every g is u * w_rep * b with u upper unitriangular, w a permutation
and b upper triangular.  The permutation is forced by g; u is canonicalized by
requiring u[i][j] = 0 whenever i < j and w^-1(i) < w^-1(j), which the
elimination below produces automatically.  The representative of w is the
pinned one from :mod:`slword.rootdata`, so all sign bookkeeping lands in b.

``split_over_big_cell`` writes g = h * h' with h' in U- T U and h^-1 in
U- T U.  Such a splitting always exists over an infinite field because the
valid h' form a dense open set; we search for one (random big-cell elements of
growing height, interleaved with a deterministic one-parameter family) and
verify both memberships exactly before returning.
"""

from __future__ import annotations

from dataclasses import dataclass
from random import Random

from .fields import Field
from .matrix import SLMatrix, mat_product
from .rootdata import coroot, elementary, weyl_representative


class SearchBudgetExceeded(RuntimeError):
    """A randomized open-condition search ran out of attempts."""

    def __init__(self, what: str, attempts: int):
        super().__init__(f"{what}: no hit in {attempts} attempts (raise the budget or reseed)")
        self.attempts = attempts


@dataclass(frozen=True)
class BigCellForm:
    """g = lower * diag * upper with the shapes the names promise."""

    lower: SLMatrix  # lower unitriangular
    diag: SLMatrix   # diagonal
    upper: SLMatrix  # upper unitriangular


@dataclass(frozen=True)
class BruhatForm:
    """g = u * w_rep * b; w is a 0-based permutation tuple, w_rep its pinned
    SL_n representative, u the canonical unipotent coset representative."""

    u: SLMatrix
    w: tuple[int, ...]
    w_rep: SLMatrix
    b: SLMatrix


def big_cell_decompose(g: SLMatrix) -> BigCellForm | None:
    """LDU factorization, or None if g is outside the big cell.

    None is a normal outcome (it happens exactly when some leading principal
    minor vanishes), not an error.
    """
    field, n = g.field, g.n
    m = [list(r) for r in g.rows]
    one, zero = field.one, field.zero
    lower = [[one if i == j else zero for j in range(n)] for i in range(n)]
    for k in range(n):
        piv = m[k][k]
        if not piv:
            return None
        for i in range(k + 1, n):
            f = m[i][k] / piv
            if f:
                lower[i][k] = f
                m[i] = [x - f * y for x, y in zip(m[i], m[k])]
    diag = [m[k][k] for k in range(n)]
    upper = [[m[i][j] / diag[i] if j > i else (one if i == j else zero) for j in range(n)] for i in range(n)]
    return BigCellForm(
        lower=SLMatrix(field, lower),
        diag=SLMatrix.diagonal(field, diag),
        upper=SLMatrix(field, upper),
    )


def in_big_cell(g: SLMatrix) -> bool:
    return big_cell_decompose(g) is not None


def bruhat_decompose(g: SLMatrix) -> BruhatForm:
    """Bruhat factorization g = u * w_rep * b; total on SL_n.

    Scan columns left to right; in each column the bottom-most entry in a row
    not yet used as a pivot survives and names w, and everything above it in
    unused rows is cleared by adding multiples of the pivot row (an upper
    unitriangular row operation).  The cleared matrix is w_rep * b.
    """
    field, n = g.field, g.n
    m = [list(r) for r in g.rows]
    one, zero = field.one, field.zero
    u = [[one if i == j else zero for j in range(n)] for i in range(n)]
    w = [0] * n
    used = [False] * n
    for j in range(n):
        pivot_row = max(i for i in range(n) if not used[i] and m[i][j])
        w[j] = pivot_row
        used[pivot_row] = True
        piv = m[pivot_row][j]
        for i in range(pivot_row):
            if not used[i] and m[i][j]:
                f = m[i][j] / piv
                # left-multiply by E_{i,pivot_row}(-f); accumulate the inverse in u
                m[i] = [x - f * y for x, y in zip(m[i], m[pivot_row])]
                for r in range(n):
                    u[r][pivot_row] = u[r][pivot_row] + f * u[r][i]
    w = tuple(w)
    w_rep = weyl_representative(field, w)
    b = mat_product([w_rep.inverse(), SLMatrix(field, m)])
    assert all(not b.rows[i][j] for i in range(n) for j in range(i))
    return BruhatForm(u=SLMatrix(field, u), w=w, w_rep=w_rep, b=b)


def _random_big_cell_element(field: Field, n: int, rng: Random, bound: int) -> SLMatrix:
    """A random element of U- T U, built by shape so membership is free."""
    one, zero = field.one, field.zero
    lower = [[one if i == j else zero for j in range(n)] for i in range(n)]
    upper = [[one if i == j else zero for j in range(n)] for i in range(n)]
    for i in range(n):
        for j in range(i):
            lower[i][j] = field.random_scalar(rng, bound)
            upper[j][i] = field.random_scalar(rng, bound)
    t = SLMatrix.identity(field, n)
    for i in range(1, n):
        t = t * coroot(field, n, i, field.random_nonzero(rng, bound))
    return mat_product([SLMatrix(field, lower), t, SLMatrix(field, upper)])


def split_over_big_cell(g: SLMatrix, rng: Random, budget: int = 10_000) -> tuple[SLMatrix, SLMatrix]:
    """Write g = h * h' with h' and h^-1 both in the big cell U- T U.

    Candidates for h' are drawn from U- T U with entries of slowly growing
    height, interleaved with the deterministic family h' = E_12(m); the
    identity is tried first, which succeeds whenever g^-1 is already in the
    big cell.  Each success is verified exactly before returning.
    """
    field, n = g.field, g.n
    g_inv = g.inverse()
    for attempt in range(budget):
        if attempt == 0:
            hp = SLMatrix.identity(field, n)
        elif attempt % 8 == 1:
            hp = elementary(field, n, 1, 2, (attempt // 8) + 1)
        else:
            hp = _random_big_cell_element(field, n, rng, 2 + attempt // 500)
        h_inv = hp * g_inv
        if in_big_cell(h_inv):
            h = h_inv.inverse()
            assert in_big_cell(hp) and h * hp == g
            return h, hp
    raise SearchBudgetExceeded("splitting over the big cell", budget)
