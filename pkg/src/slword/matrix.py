"""Exact determinant-one matrices and the operations the rest of the package
builds on.

An :class:`SLMatrix` is an immutable n-by-n array of canonical scalars with
determinant exactly 1; the determinant is checked on every construction, so a
value that exists is a group element.  All operations are pure and exact:
products, inverses (Gauss-Jordan elimination; no pivot growth concerns since
everything is exact), conjugates, commutators, characteristic polynomials
(Samuelson-Berkowitz, division-free, so it works in any characteristic) and
eigenvalue tests.

Matrix multiplication skips zero entries of the left factor.  Triangular,
diagonal and elementary matrices dominate this domain, so the guard pays for
itself many times over.

JSON encoding of a matrix is ``{"n": int, "field": {...}, "entries": [[str]]}``
with entries formatted canonically on output and parsed loosely on input.
"""

from __future__ import annotations

from fractions import Fraction
from typing import Iterable, Sequence

from .fields import Field, Fp, Scalar


class SLMatrix:
    """Square matrix over an exact field with determinant 1."""

    __slots__ = ("field", "n", "rows")

    def __init__(self, field: Field, rows: Sequence[Sequence]):
        n = len(rows)
        if n < 2:
            raise ValueError(f"dimension must be >= 2, got {n}")
        if any(len(r) != n for r in rows):
            raise ValueError("matrix must be square")
        canon = tuple(tuple(field.scalar(e) for e in row) for row in rows)
        d = _det_rows(canon, field)
        if d != field.one:
            raise ValueError(f"determinant must be 1, got {field.format(d)}")
        self.field = field
        self.n = n
        self.rows = canon

    @classmethod
    def _wrap(cls, field: Field, n: int, rows) -> "SLMatrix":
        # rows must already be canonical; the determinant check still runs
        d = _det_rows(rows, field)
        if d != field.one:
            raise ValueError(f"determinant must be 1, got {field.format(d)}")
        out = cls.__new__(cls)
        out.field, out.n, out.rows = field, n, rows
        return out

    @classmethod
    def identity(cls, field: Field, n: int) -> "SLMatrix":
        one, zero = field.one, field.zero
        return cls(field, [[one if i == j else zero for j in range(n)] for i in range(n)])

    @classmethod
    def diagonal(cls, field: Field, entries: Sequence) -> "SLMatrix":
        es = [field.scalar(e) for e in entries]
        zero = field.zero
        return cls(field, [[es[i] if i == j else zero for j in range(len(es))] for i in range(len(es))])

    def __mul__(self, other: "SLMatrix") -> "SLMatrix":
        self._check_compatible(other)
        return SLMatrix._wrap(self.field, self.n, _mul_rows(self.rows, other.rows, self.field))

    def inverse(self) -> "SLMatrix":
        return SLMatrix._wrap(self.field, self.n, _inverse_rows(self.rows, self.field))

    def __pow__(self, k: int) -> "SLMatrix":
        if k < 0:
            return self.inverse() ** (-k)
        acc = SLMatrix.identity(self.field, self.n)
        for _ in range(k):
            acc = acc * self
        return acc

    def is_identity(self) -> bool:
        one, zero = self.field.one, self.field.zero
        return all(
            self.rows[i][j] == (one if i == j else zero)
            for i in range(self.n)
            for j in range(self.n)
        )

    def _check_compatible(self, other: "SLMatrix"):
        if self.field != other.field or self.n != other.n:
            raise ValueError("dimension/field mismatch")

    def __eq__(self, other):
        if not isinstance(other, SLMatrix):
            return NotImplemented
        return self.field == other.field and self.n == other.n and self.rows == other.rows

    def __hash__(self):
        return hash((self.field.p, self.n, tuple(_entry_key(e) for row in self.rows for e in row)))

    def key(self) -> tuple:
        """Canonical hashable key: field, size and flattened entries."""
        return (self.field.p, self.n) + tuple(_entry_key(e) for row in self.rows for e in row)

    def __repr__(self):
        f = self.field.format
        body = ", ".join("[" + ", ".join(f(e) for e in row) + "]" for row in self.rows)
        return f"SLMatrix({self.field!r}, [{body}])"


def _entry_key(e: Scalar):
    if isinstance(e, Fp):
        return e.val
    return (e.numerator, e.denominator)


def _mul_rows(a, b, field: Field):
    n = len(a)
    zero = field.zero
    out = []
    for i in range(n):
        arow = a[i]
        acc = [zero] * n
        for k in range(n):
            aik = arow[k]
            if not aik:
                continue
            brow = b[k]
            for j in range(n):
                bkj = brow[j]
                if bkj:
                    acc[j] = acc[j] + aik * bkj
        out.append(tuple(acc))
    return tuple(out)


def _det_rows(rows, field: Field) -> Scalar:
    n = len(rows)
    m = [list(r) for r in rows]
    det = field.one
    for col in range(n):
        piv = next((r for r in range(col, n) if m[r][col]), None)
        if piv is None:
            return field.zero
        if piv != col:
            m[col], m[piv] = m[piv], m[col]
            det = -det
        pval = m[col][col]
        det = det * pval
        for r in range(col + 1, n):
            f = m[r][col] / pval
            if f:
                m[r] = [x - f * y for x, y in zip(m[r], m[col])]
    return det


def _inverse_rows(rows, field: Field):
    n = len(rows)
    m = [list(r) for r in rows]
    one, zero = field.one, field.zero
    inv = [[one if i == j else zero for j in range(n)] for i in range(n)]
    for col in range(n):
        piv = next(r for r in range(col, n) if m[r][col])
        if piv != col:
            m[col], m[piv] = m[piv], m[col]
            inv[col], inv[piv] = inv[piv], inv[col]
        pval = m[col][col]
        if pval != one:
            m[col] = [x / pval for x in m[col]]
            inv[col] = [x / pval for x in inv[col]]
        for r in range(n):
            if r == col:
                continue
            f = m[r][col]
            if f:
                m[r] = [x - f * y for x, y in zip(m[r], m[col])]
                inv[r] = [x - f * y for x, y in zip(inv[r], inv[col])]
    return tuple(tuple(r) for r in inv)


def mat_product(mats: Iterable[SLMatrix]) -> SLMatrix:
    """Product of a nonempty sequence of matrices, left to right.

    Intermediate products are accumulated on raw rows, so only the final
    result pays the construction-time determinant check.
    """
    mats = list(mats)
    if not mats:
        raise ValueError("empty product")
    field, n = mats[0].field, mats[0].n
    acc = mats[0].rows
    for m in mats[1:]:
        mats[0]._check_compatible(m)
        acc = _mul_rows(acc, m.rows, field)
    return SLMatrix._wrap(field, n, acc)


def conjugate(g: SLMatrix, c: SLMatrix) -> SLMatrix:
    """c g c^-1."""
    return mat_product([c, g, c.inverse()])


def commutator(g: SLMatrix, h: SLMatrix) -> SLMatrix:
    """g h g^-1 h^-1."""
    return mat_product([g, h, g.inverse(), h.inverse()])


# shape predicates

def is_diagonal(g: SLMatrix) -> bool:
    return all(not g.rows[i][j] for i in range(g.n) for j in range(g.n) if i != j)


def is_upper_triangular(g: SLMatrix) -> bool:
    return all(not g.rows[i][j] for i in range(g.n) for j in range(i))


def is_lower_triangular(g: SLMatrix) -> bool:
    return all(not g.rows[i][j] for i in range(g.n) for j in range(i + 1, g.n))


def is_upper_unitriangular(g: SLMatrix) -> bool:
    one = g.field.one
    return is_upper_triangular(g) and all(g.rows[i][i] == one for i in range(g.n))


def is_lower_unitriangular(g: SLMatrix) -> bool:
    one = g.field.one
    return is_lower_triangular(g) and all(g.rows[i][i] == one for i in range(g.n))


def is_central(g: SLMatrix) -> bool:
    """True iff g is a scalar matrix (the center of SL_n)."""
    d = g.rows[0][0]
    return is_diagonal(g) and all(g.rows[i][i] == d for i in range(g.n))


def leading_principal_minors(g: SLMatrix) -> list:
    """Determinants of the leading k-by-k blocks, k = 1..n.

    Computed by direct determinant expansion of each block, independently of
    any factorization routine, so it can serve as a cross-check.
    """
    return [
        _det_rows(tuple(row[: k + 1] for row in g.rows[: k + 1]), g.field)
        for k in range(g.n)
    ]


# characteristic polynomial and eigenvalue tests
#
# Polynomials are plain coefficient lists, leading coefficient first.

def char_poly(g: SLMatrix) -> list:
    """Coefficients of det(xI - g), monic, leading coefficient first.

    Samuelson-Berkowitz: iterate over leading principal blocks, extending the
    characteristic polynomial by one truncated convolution per step.  No
    divisions, so valid over any field including small characteristic.
    """
    a = g.rows
    one = g.field.one
    c = [one, -a[0][0]]
    for r in range(1, g.n):
        row = a[r][:r]
        vec = [a[i][r] for i in range(r)]
        s = []
        for i in range(r):
            s.append(sum((row[k] * vec[k] for k in range(r)), g.field.zero))
            if i < r - 1:
                vec = [
                    sum((a[x][k] * vec[k] for k in range(r)), g.field.zero)
                    for x in range(r)
                ]
        t0 = [one, -a[r][r]] + [-si for si in s]
        c = [
            sum(
                (t0[k - j] * c[j] for j in range(len(c)) if 0 <= k - j < len(t0)),
                g.field.zero,
            )
            for k in range(r + 2)
        ]
    return c


def _poly_trim(p):
    i = 0
    while i < len(p) - 1 and not p[i]:
        i += 1
    return p[i:]


def _poly_deriv(p, field: Field):
    n = len(p) - 1
    if n == 0:
        return [field.zero]
    return _poly_trim([p[i] * (n - i) for i in range(n)])


def _poly_mod(a, b):
    a, b = list(_poly_trim(a)), _poly_trim(b)
    lead = b[0]
    while len(a) >= len(b) and any(a):
        f = a[0] / lead
        for i in range(len(b)):
            a[i] = a[i] - f * b[i]
        a = list(_poly_trim(a))  # a[0] is now exactly zero, so this shortens a
    return a


def _poly_gcd(a, b):
    a, b = list(_poly_trim(a)), list(_poly_trim(b))
    while any(b):
        a, b = b, _poly_mod(a, b)
    lead = a[0]
    return [x / lead for x in a]


def poly_eval(p, x: Scalar) -> Scalar:
    acc = p[0]
    for c in p[1:]:
        acc = acc * x + c
    return acc


def is_regular_semisimple(g: SLMatrix) -> bool:
    """True iff the characteristic polynomial is squarefree, i.e. g has
    distinct eigenvalues over the algebraic closure."""
    f = char_poly(g)
    df = _poly_deriv(f, g.field)
    return len(_poly_gcd(f, df)) == 1


def _divisors(m: int) -> list[int]:
    m = abs(m)
    small, large = [], []
    d = 1
    while d * d <= m:
        if m % d == 0:
            small.append(d)
            if d != m // d:
                large.append(m // d)
        d += 1
    return small + large[::-1]


def has_distinct_eigenvalues_in_field(g: SLMatrix) -> bool:
    """True iff the characteristic polynomial has n distinct roots in the
    base field, so that g is conjugate to a diagonal matrix over that field.

    Over F_p this needs n distinct nonzero residues, which is impossible for
    p <= n; such calls raise ``ValueError``.  Over the rationals the roots are
    found exactly via the rational root bound.
    """
    field, n = g.field, g.n
    if field.p is not None and field.p <= n:
        raise ValueError(f"F_{field.p} cannot contain {n} distinct eigenvalues of a determinant-1 matrix")
    f = char_poly(g)
    if field.p is not None:
        found = sum(1 for v in range(field.p) if not poly_eval(f, Fp(v, field.p)))
        return found == n
    # Clear denominators; candidate roots a/b need a | constant and b | leading.
    den = 1
    for c in f:
        den = den * c.denominator // _gcd(den, c.denominator)
    ints = [int(c * den) for c in f]
    lead, const = ints[0], ints[-1]
    if const == 0:
        return False  # 0 is never an eigenvalue of a determinant-1 matrix
    roots = set()
    for a in _divisors(const):
        for b in _divisors(lead):
            for cand in (Fraction(a, b), Fraction(-a, b)):
                if cand not in roots and not poly_eval(f, cand):
                    roots.add(cand)
    return len(roots) == n


def _gcd(a: int, b: int) -> int:
    while b:
        a, b = b, a % b
    return a


# JSON encoding

def matrix_to_json(g: SLMatrix) -> dict:
    f = g.field.format
    return {
        "n": g.n,
        "field": g.field.to_json(),
        "entries": [[f(e) for e in row] for row in g.rows],
    }


def matrix_from_json(d: dict) -> SLMatrix:
    try:
        field = Field.from_json(d["field"])
        n = int(d["n"])
        entries = d["entries"]
    except (KeyError, TypeError) as exc:
        raise ValueError(f"malformed matrix JSON: {exc}") from exc
    if len(entries) != n or any(len(r) != n for r in entries):
        raise ValueError(f"matrix JSON claims n={n} but entries are {len(entries)} rows")
    return SLMatrix(field, [[field.parse(str(e)) for e in row] for row in entries])
