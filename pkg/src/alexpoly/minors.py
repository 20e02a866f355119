"""Greatest common divisor of the k x k minors of a Laurent-polynomial matrix.

The result generates the smallest principal ideal containing the ideal of
k-minors, which is all the downstream invariants need.  Three devices keep
this tractable:

* rows that are zero or duplicated are discarded (they add no new minors),
* a unit entry lets the matrix contract: clearing its column with row
  operations and deleting its row and column turns the gcd of k-minors
  into the gcd of (k-1)-minors of the smaller matrix,
* when exhaustive enumeration would be too wide and the ring is
  univariate, the answer is read off a Smith normal form over Q[t] as the
  k-th determinant divisor.
"""

from __future__ import annotations

from fractions import Fraction
from math import comb

from .ring import LaurentPoly, gcd, normalize

# row-subset count above which univariate matrices switch to the
# Smith-normal-form path
ENUMERATION_LIMIT = 20000

Row = tuple[LaurentPoly, ...]


def minor_gcd(rows: list[Row] | list[list[LaurentPoly]], k: int, nvars: int) -> LaurentPoly:
    """Unit-normal gcd of all k x k minors; zero when every minor vanishes."""
    if k <= 0:
        return LaurentPoly.one(nvars)
    work = _tidy([tuple(r) for r in rows])
    while k > 0:
        spot = _find_unit(work)
        if spot is None:
            break
        work = _contract(work, *spot)
        k -= 1
        work = _tidy(work)
    if k == 0:
        return LaurentPoly.one(nvars)
    if len(work) < k or (work and len(work[0]) < k):
        return LaurentPoly.zero(nvars)
    if nvars == 1 and comb(len(work), k) > ENUMERATION_LIMIT:
        return _snf_minor_gcd(work, k)
    return _enumerate_minor_gcd(work, k, nvars)


def _tidy(rows: list[Row]) -> list[Row]:
    """Drop zero rows and duplicates; neither changes the nonzero minors."""
    kept = [r for r in rows if any(not e.is_zero for e in r)]
    return list(dict.fromkeys(kept))


def _find_unit(rows: list[Row]) -> tuple[int, int] | None:
    for i, row in enumerate(rows):
        for j, entry in enumerate(row):
            if entry.is_unit:
                return i, j
    return None


def _contract(rows: list[Row], i: int, j: int) -> list[Row]:
    """Clear column j with the unit pivot at (i, j), then delete row i, col j."""
    pivot_row = rows[i]
    inv = pivot_row[j] ** -1
    out: list[Row] = []
    for r, row in enumerate(rows):
        if r == i:
            continue
        factor = row[j] * inv
        out.append(tuple(row[c] - factor * pivot_row[c]
                         for c in range(len(row)) if c != j))
    return out


# ---------------------------------------------------------------------------
# exhaustive enumeration with shared-prefix expansion


def _enumerate_minor_gcd(rows: list[Row], k: int, nvars: int) -> LaurentPoly:
    m = len(rows)
    n = len(rows[0])
    one = LaurentPoly.one(nvars)
    zero = LaurentPoly.zero(nvars)
    running = zero

    def expand(state: dict[tuple[int, ...], LaurentPoly], row: Row,
               depth: int) -> dict[tuple[int, ...], LaurentPoly]:
        new: dict[tuple[int, ...], LaurentPoly] = {}
        for cols, det in state.items():
            for c in range(n):
                if c in cols:
                    continue
                entry = row[c]
                if entry.is_zero:
                    continue
                ncols = tuple(sorted(cols + (c,)))
                pos = ncols.index(c)
                term = entry * det
                if (depth + pos) % 2:
                    term = -term
                acc = new.get(ncols)
                new[ncols] = term if acc is None else acc + term
        return {cols: det for cols, det in new.items() if not det.is_zero}

    def recurse(start: int, state: dict[tuple[int, ...], LaurentPoly],
                depth: int) -> bool:
        nonlocal running
        if depth == k:
            for det in state.values():
                running = gcd(running, det)
                if running.is_unit:
                    return True
            return False
        for i in range(start, m - (k - depth) + 1):
            nxt = expand(state, rows[i], depth)
            if nxt and recurse(i + 1, nxt, depth + 1):
                return True
        return False

    recurse(0, {(): one}, 0)
    return normalize(running)


# ---------------------------------------------------------------------------
# univariate fallback: Smith normal form over Q[t]
#
# entries become dense Fraction coefficient lists; the k-th determinant
# divisor (gcd of k-minors) is the product of the first k invariant factors


def _snf_minor_gcd(rows: list[Row], k: int) -> LaurentPoly:
    mat = []
    for row in rows:
        shift = min(e.min_exponents()[0] for e in row if not e.is_zero)
        mat.append([_dense(e.shift((-shift,))) for e in row])
    diag = _snf_diagonal(mat)
    if len(diag) < k:
        return LaurentPoly.zero(1)
    product = [Fraction(1)]
    for d in diag[:k]:
        product = _pmul(product, d)
    return normalize(_from_dense(product))


def _dense(p: LaurentPoly) -> list[Fraction]:
    if p.is_zero:
        return []
    top = p.max_exponents()[0]
    out = [Fraction(0)] * (top + 1)
    for exps, coeff in p.terms.items():
        out[exps[0]] = coeff
    return out


def _from_dense(coeffs: list[Fraction]) -> LaurentPoly:
    return LaurentPoly(1, {(i,): c for i, c in enumerate(coeffs) if c})


def _ptrim(a: list[Fraction]) -> list[Fraction]:
    while a and not a[-1]:
        a.pop()
    return a


def _pmul(a: list[Fraction], b: list[Fraction]) -> list[Fraction]:
    if not a or not b:
        return []
    out = [Fraction(0)] * (len(a) + len(b) - 1)
    for i, ai in enumerate(a):
        if not ai:
            continue
        for j, bj in enumerate(b):
            out[i + j] += ai * bj
    return _ptrim(out)


def _padd(a: list[Fraction], b: list[Fraction]) -> list[Fraction]:
    out = [Fraction(0)] * max(len(a), len(b))
    for i, ai in enumerate(a):
        out[i] += ai
    for i, bi in enumerate(b):
        out[i] += bi
    return _ptrim(out)


def _psub(a: list[Fraction], b: list[Fraction]) -> list[Fraction]:
    out = [Fraction(0)] * max(len(a), len(b))
    for i, ai in enumerate(a):
        out[i] += ai
    for i, bi in enumerate(b):
        out[i] -= bi
    return _ptrim(out)


def _pdivmod(a: list[Fraction], b: list[Fraction]) -> tuple[list[Fraction], list[Fraction]]:
    if not b:
        raise ZeroDivisionError("polynomial division by zero")
    rem = list(a)
    quo = [Fraction(0)] * max(len(a) - len(b) + 1, 0)
    db = len(b) - 1
    lead = b[-1]
    while len(rem) - 1 >= db and rem:
        shift = len(rem) - 1 - db
        factor = rem[-1] / lead
        quo[shift] = factor
        for i, bi in enumerate(b):
            rem[shift + i] -= factor * bi
        _ptrim(rem)
    return _ptrim(quo), rem


def _snf_diagonal(mat: list[list[list[Fraction]]]) -> list[list[Fraction]]:
    """Nonzero invariant factors of a matrix over Q[t], divisibility-ordered."""
    m = len(mat)
    n = len(mat[0]) if mat else 0
    diag: list[list[Fraction]] = []
    top = 0
    left = 0
    while top < m and left < n:
        pivot = None
        for i in range(top, m):
            for j in range(left, n):
                if mat[i][j] and (pivot is None
                                  or len(mat[i][j]) < len(mat[pivot[0]][pivot[1]])):
                    pivot = (i, j)
        if pivot is None:
            break
        i0, j0 = pivot
        mat[top], mat[i0] = mat[i0], mat[top]
        for row in mat:
            row[left], row[j0] = row[j0], row[left]
        dirty = True
        while dirty:
            dirty = False
            p = mat[top][left]
            for i in range(top + 1, m):
                if mat[i][left]:
                    q, r = _pdivmod(mat[i][left], p)
                    for j in range(left, n):
                        mat[i][j] = _psub(mat[i][j], _pmul(q, mat[top][j]))
                    if r:
                        mat[top], mat[i] = mat[i], mat[top]
                        dirty = True
                        break
            if dirty:
                continue
            for j in range(left + 1, n):
                if mat[top][j]:
                    q, r = _pdivmod(mat[top][j], p)
                    for i in range(top, m):
                        mat[i][j] = _psub(mat[i][j], _pmul(q, mat[i][left]))
                    if r:
                        for row in mat:
                            row[left], row[j] = row[j], row[left]
                        dirty = True
                        break
        p = mat[top][left]
        offender = None
        for i in range(top + 1, m):
            for j in range(left + 1, n):
                if mat[i][j] and _pdivmod(mat[i][j], p)[1]:
                    offender = i
                    break
            if offender is not None:
                break
        if offender is not None:
            for j in range(left, n):
                mat[top][j] = _padd(mat[top][j], mat[offender][j])
            continue
        diag.append(p)
        top += 1
        left += 1
    return diag
