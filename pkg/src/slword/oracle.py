"""Brute-force ground truth for small finite SL_n(F_p): full enumeration,
conjugacy classes, exact conjugate-word norms, diameters and the invariants
Delta / Delta_k.

Elements are stored as flat row-major tuples of residues, which keeps the
breadth-first searches in plain int arithmetic; :class:`SLMatrix` appears only
at the API boundary.

Word norms here are with respect to a set of conjugacy classes: the letter
set of a class selection is the union of the chosen classes and their inverse
classes (a word may use conjugates of generators and of their inverses), and
the norm of g is the least number of letters multiplying to g.  Because the
letter set is closed under conjugation, ball(k+1) = ball(k) * letters, which
is exactly the layered search ``norm_ball_table`` runs.  A second,
deliberately different implementation (Bellman-style relaxation over the full
multiplication table, ``norms_by_fixed_point``) exists purely to cross-check
the first.

Delta is computable for a finite group because a norm only depends on which
conjugacy classes the generating set touches: the supremum over all finite
normally generating sets is a maximum over the finitely many class subsets.
Results over finite fields are consistency evidence for the factorization
pipeline, not statements about infinite fields; reports label them as such.
"""

from __future__ import annotations

from dataclasses import dataclass
from itertools import combinations

from .fields import GF
from .matrix import SLMatrix
from .rootdata import elementary


FINITE_FIELD_NOTE = (
    "finite-field analog computed by exhaustive search; "
    "not a statement about groups over infinite fields"
)


class GroupSizeCapExceeded(RuntimeError):
    pass


def _mul(a: tuple, b: tuple, n: int, p: int) -> tuple:
    if n == 2:
        a0, a1, a2, a3 = a
        b0, b1, b2, b3 = b
        return (
            (a0 * b0 + a1 * b2) % p,
            (a0 * b1 + a1 * b3) % p,
            (a2 * b0 + a3 * b2) % p,
            (a2 * b1 + a3 * b3) % p,
        )
    if n == 3:
        a0, a1, a2, a3, a4, a5, a6, a7, a8 = a
        b0, b1, b2, b3, b4, b5, b6, b7, b8 = b
        return (
            (a0 * b0 + a1 * b3 + a2 * b6) % p,
            (a0 * b1 + a1 * b4 + a2 * b7) % p,
            (a0 * b2 + a1 * b5 + a2 * b8) % p,
            (a3 * b0 + a4 * b3 + a5 * b6) % p,
            (a3 * b1 + a4 * b4 + a5 * b7) % p,
            (a3 * b2 + a4 * b5 + a5 * b8) % p,
            (a6 * b0 + a7 * b3 + a8 * b6) % p,
            (a6 * b1 + a7 * b4 + a8 * b7) % p,
            (a6 * b2 + a7 * b5 + a8 * b8) % p,
        )
    return tuple(
        sum(a[i * n + k] * b[k * n + j] for k in range(n)) % p
        for i in range(n)
        for j in range(n)
    )


def _inv(a: tuple, n: int, p: int) -> tuple:
    m = [[a[i * n + j] for j in range(n)] for i in range(n)]
    inv = [[1 if i == j else 0 for j in range(n)] for i in range(n)]
    for col in range(n):
        piv = next(r for r in range(col, n) if m[r][col] % p)
        if piv != col:
            m[col], m[piv] = m[piv], m[col]
            inv[col], inv[piv] = inv[piv], inv[col]
        f = pow(m[col][col], -1, p)
        m[col] = [x * f % p for x in m[col]]
        inv[col] = [x * f % p for x in inv[col]]
        for r in range(n):
            if r != col and m[r][col]:
                f = m[r][col]
                m[r] = [(x - f * y) % p for x, y in zip(m[r], m[col])]
                inv[r] = [(x - f * y) % p for x, y in zip(inv[r], inv[col])]
    return tuple(x for row in inv for x in row)


def _det(a: tuple, n: int, p: int) -> int:
    m = [[a[i * n + j] for j in range(n)] for i in range(n)]
    det = 1
    for col in range(n):
        piv = next((r for r in range(col, n) if m[r][col] % p), None)
        if piv is None:
            return 0
        if piv != col:
            m[col], m[piv] = m[piv], m[col]
            det = -det
        det = det * m[col][col] % p
        f = pow(m[col][col], -1, p)
        for r in range(col + 1, n):
            if m[r][col]:
                g = m[r][col] * f % p
                m[r] = [(x - g * y) % p for x, y in zip(m[r], m[col])]
    return det % p


@dataclass
class GroupTable:
    """Complete enumeration of SL_n(F_p) with conjugacy data.

    elements are in breadth-first order from the identity (element 0), so the
    table is deterministic for a given (n, p).
    """

    n: int
    p: int
    elements: list[tuple]
    index: dict  # tuple -> position
    inverse: list[int]  # position of the inverse
    classes: list[tuple[int, ...]]  # sorted member positions per class
    class_of: list[int]
    class_inverse: list[int]  # class of the inverses of a class

    @property
    def order(self) -> int:
        return len(self.elements)

    def mul(self, i: int, j: int) -> int:
        return self.index[_mul(self.elements[i], self.elements[j], self.n, self.p)]

    def matrix(self, i: int) -> SLMatrix:
        field, n = GF(self.p), self.n
        e = self.elements[i]
        return SLMatrix(field, [[e[r * n + c] for c in range(n)] for r in range(n)])

    def index_of(self, g: SLMatrix) -> int:
        if g.field.p != self.p or g.n != self.n:
            raise ValueError("dimension/field mismatch")
        return self.index[tuple(e.val for row in g.rows for e in row)]

    def central_class_indices(self) -> tuple[int, ...]:
        return tuple(i for i, cls in enumerate(self.classes) if len(cls) == 1)


def enumerate_group(n: int, p: int, cap: int = 10**6) -> GroupTable:
    """Enumerate SL_n(F_p) by closure from the elementary generators
    E_{i,i+1}(1), E_{i+1,i}(1); raises GroupSizeCapExceeded past ``cap``."""
    field = GF(p)
    gens = []
    for i in range(1, n):
        for (a, b) in ((i, i + 1), (i + 1, i)):
            g = elementary(field, n, a, b, 1)
            gens.append(tuple(e.val for row in g.rows for e in row))
    ident = tuple(1 if i == j else 0 for i in range(n) for j in range(n))

    elements = [ident]
    index = {ident: 0}
    frontier = [ident]
    while frontier:
        nxt = []
        for e in frontier:
            for g in gens:
                prod = _mul(e, g, n, p)
                if prod not in index:
                    if len(elements) >= cap:
                        raise GroupSizeCapExceeded(
                            f"SL_{n}(F_{p}) exceeds the cap of {cap} elements"
                        )
                    index[prod] = len(elements)
                    elements.append(prod)
                    nxt.append(prod)
        frontier = nxt

    inverse = [index[_inv(e, n, p)] for e in elements]

    # conjugacy classes: orbits under conjugation by the generators
    class_of = [-1] * len(elements)
    classes = []
    gen_pairs = [(g, _inv(g, n, p)) for g in gens]
    for start in range(len(elements)):
        if class_of[start] != -1:
            continue
        cid = len(classes)
        orbit = [start]
        class_of[start] = cid
        queue = [start]
        while queue:
            e = elements[queue.pop()]
            for g, gi in gen_pairs:
                conj = _mul(_mul(g, e, n, p), gi, n, p)
                ci = index[conj]
                if class_of[ci] == -1:
                    class_of[ci] = cid
                    orbit.append(ci)
                    queue.append(ci)
        classes.append(tuple(sorted(orbit)))

    class_inverse = [class_of[inverse[cls[0]]] for cls in classes]
    return GroupTable(
        n=n,
        p=p,
        elements=elements,
        index=index,
        inverse=inverse,
        classes=classes,
        class_of=class_of,
        class_inverse=class_inverse,
    )


def brute_force_elements(n: int, p: int) -> set[tuple]:
    """All determinant-1 matrices by sheer enumeration of every entry tuple.

    Exponential in n^2; only sane for the tiny groups the tests cross-check.
    Kept deliberately independent of :func:`enumerate_group`.
    """
    out = set()
    total = p ** (n * n)
    for code in range(total):
        e, c = [], code
        for _ in range(n * n):
            e.append(c % p)
            c //= p
        e = tuple(e)
        if _det(e, n, p) == 1:
            out.add(e)
    return out


def _letters(table: GroupTable, class_ids) -> list[int]:
    """Element positions of the letter set: chosen classes and their inverse
    classes, identity excluded (it never shortens a word)."""
    ids = set()
    for c in class_ids:
        if not 0 <= c < len(table.classes):
            raise ValueError(f"no conjugacy class {c}")
        ids.add(c)
        ids.add(table.class_inverse[c])
    out = sorted(i for c in ids for i in table.classes[c] if i != 0)
    return out


def _bfs_norms(table: GroupTable, class_ids) -> list[int]:
    """Layered ball growth; norms[i] = -1 where the letters never reach."""
    letters = [table.elements[i] for i in _letters(table, class_ids)]
    n, p = table.n, table.p
    norms = [-1] * table.order
    norms[0] = 0
    frontier = [table.elements[0]]
    dist = 0
    while frontier:
        dist += 1
        nxt = []
        for e in frontier:
            for l in letters:
                prod = _mul(e, l, n, p)
                i = table.index[prod]
                if norms[i] == -1:
                    norms[i] = dist
                    nxt.append(prod)
        frontier = nxt
    return norms


def normally_generates(table: GroupTable, class_ids) -> bool:
    """True iff the chosen classes (with inverses) generate the whole group;
    as class unions are conjugation-closed, the subgroup they generate is
    normal and equals the normal closure."""
    norms = _bfs_norms(table, class_ids)
    return all(v >= 0 for v in norms)


@dataclass
class NormTable:
    class_ids: tuple[int, ...]
    norms: list[int]
    diameter: int


def norm_ball_table(table: GroupTable, class_ids) -> NormTable:
    norms = _bfs_norms(table, class_ids)
    if any(v < 0 for v in norms):
        raise ValueError(f"classes {tuple(class_ids)} do not normally generate the group")
    return NormTable(class_ids=tuple(sorted(set(class_ids))), norms=norms, diameter=max(norms))


def norms_by_fixed_point(table: GroupTable, class_ids) -> list[int]:
    """Independent recomputation of the norms: initialize the letters at 1 and
    the identity at 0, then relax norm(g*l) <= norm(g) + 1 over the whole
    group until nothing changes."""
    letter_ids = _letters(table, class_ids)
    INF = table.order + 1
    norms = [INF] * table.order
    norms[0] = 0
    for l in letter_ids:
        norms[l] = 1
    changed = True
    while changed:
        changed = False
        for i in range(table.order):
            if norms[i] == INF:
                continue
            cand = norms[i] + 1
            for l in letter_ids:
                j = table.mul(i, l)
                if cand < norms[j]:
                    norms[j] = cand
                    changed = True
    return [v if v <= table.order else -1 for v in norms]


@dataclass
class SubsetResult:
    class_ids: tuple[int, ...]
    generates: bool
    diameter: int | None


@dataclass
class DeltaReport:
    delta: int
    delta_k: list[int]  # delta_k[k-1] = max diameter over generating subsets of <= k classes
    witnesses: list[tuple[int, ...]]  # subsets achieving delta
    results: list[SubsetResult]


def delta(table: GroupTable, max_classes: int | None = None, subset_cap: int = 2**20) -> DeltaReport:
    """Exact Delta and Delta_k by enumerating every class subset.

    A finite normally generating set is interchangeable with the set of
    conjugacy classes it touches, and the inverse classes are free, so the
    supremum over all finite sets is the maximum over class subsets; a set of
    at most k elements touches at most k classes, giving Delta_k.
    """
    m = len(table.classes)
    if 2**m > subset_cap:
        raise GroupSizeCapExceeded(f"2^{m} class subsets exceed the cap of {subset_cap}")
    kmax = m if max_classes is None else min(max_classes, m)

    results = []
    cache: dict[tuple[int, ...], int | None] = {}
    best = 0
    best_k = [0] * kmax
    witnesses = []
    for k in range(1, m + 1):
        for subset in combinations(range(m), k):
            closure = set()
            for c in subset:
                closure.add(c)
                closure.add(table.class_inverse[c])
            key = tuple(sorted(closure))
            if key not in cache:
                norms = _bfs_norms(table, key)
                cache[key] = max(norms) if all(v >= 0 for v in norms) else None
            diam = cache[key]
            results.append(SubsetResult(class_ids=subset, generates=diam is not None, diameter=diam))
            if diam is None:
                continue
            if diam > best:
                best, witnesses = diam, [subset]
            elif diam == best:
                witnesses.append(subset)
            for kk in range(k - 1, kmax):
                if diam > best_k[kk]:
                    best_k[kk] = diam
    return DeltaReport(delta=best, delta_k=best_k, witnesses=witnesses, results=results)


def transvection_diameter(n: int, p: int, cap: int = 10**6) -> dict:
    """Exact diameter of SL_n(F_p) with respect to the conjugacy class of the
    transvection E_1n(1), reported next to rank/2 for scale."""
    table = enumerate_group(n, p, cap)
    field = GF(p)
    g = elementary(field, n, 1, n, 1)
    cls = table.class_of[table.index_of(g)]
    norm = norm_ball_table(table, (cls,))
    return {
        "group": f"SL({n},{p})",
        "order": table.order,
        "class": cls,
        "class_size": len(table.classes[cls]),
        "generates": True,
        "diameter": norm.diameter,
        "half_rank": (n - 1) / 2,
        "note": FINITE_FIELD_NOTE,
    }
