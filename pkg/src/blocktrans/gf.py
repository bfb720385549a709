"""Finite fields GF(p^e) with table-driven arithmetic.

Elements are integers 0 <= x < q encoding polynomial coefficients base p
(least significant digit = constant term).  Extension fields use a fixed
irreducible polynomial from the bundled table, so element encodings (and the
point enumerations built on them) are stable across builds.  Primitivity of
the generator and absence of zero divisors are re-verified on every load.
"""

from __future__ import annotations

from functools import lru_cache
from importlib import resources
from math import gcd

from .errors import ValidationError


def _is_prime(p):
    if p < 2:
        return False
    d = 2
    while d * d <= p:
        if p % d == 0:
            return False
        d += 1
    return True


def _load_poly_table():
    table = {}
    text = resources.files("blocktrans").joinpath("data/polys.txt").read_text()
    for line in text.splitlines():
        line = line.strip()
        if not line or line.startswith("#"):
            continue
        parts = [int(t) for t in line.split()]
        p, e, coeffs = parts[0], parts[1], parts[2:]
        if len(coeffs) != e + 1 or coeffs[-1] != 1:
            raise ValidationError(f"bad polynomial entry for ({p},{e})")
        table[(p, e)] = tuple(coeffs)
    return table


class FiniteField:
    """GF(p^e) with add/mul/inv tables and a fixed primitive element mu."""

    def __init__(self, p, e, poly):
        self.p = p
        self.e = e
        self.q = p ** e
        self.poly = tuple(poly)
        q = self.q
        self._add = [[0] * q for _ in range(q)]
        self._mul = [[0] * q for _ in range(q)]
        neg_digit = [(p - d) % p for d in range(p)]
        for a in range(q):
            da = self._digits(a)
            for b in range(a, q):
                db = self._digits(b)
                s = self._undigits([(x + y) % p for x, y in zip(da, db)])
                self._add[a][b] = s
                self._add[b][a] = s
        for a in range(q):
            for b in range(a, q):
                m = self._polymul(a, b)
                self._mul[a][b] = m
                self._mul[b][a] = m
        self._neg = [self._undigits([neg_digit[d] for d in self._digits(a)])
                     for a in range(q)]
        # sanity: no zero divisors (finite integral domain => field)
        for a in range(1, q):
            row = self._mul[a]
            for b in range(1, q):
                if row[b] == 0:
                    raise ValidationError(
                        f"polynomial for GF({p}^{e}) is not irreducible")
        self._inv = [0] * q
        for a in range(1, q):
            row = self._mul[a]
            for b in range(1, q):
                if row[b] == 1:
                    self._inv[a] = b
                    break
        self.mu = self._find_primitive()
        self._frob = [self.pow(a, p) for a in range(q)]

    # -- encoding ----------------------------------------------------------

    def _digits(self, a):
        out = []
        for _ in range(self.e):
            out.append(a % self.p)
            a //= self.p
        return out

    def _undigits(self, digits):
        a = 0
        for d in reversed(digits):
            a = a * self.p + d
        return a

    def _polymul(self, a, b):
        p, e = self.p, self.e
        da, db = self._digits(a), self._digits(b)
        prod = [0] * (2 * e - 1)
        for i, x in enumerate(da):
            if x:
                for j, y in enumerate(db):
                    prod[i + j] = (prod[i + j] + x * y) % p
        # reduce modulo the defining polynomial (monic)
        for i in range(len(prod) - 1, e - 1, -1):
            c = prod[i]
            if c:
                prod[i] = 0
                for j in range(e):
                    prod[i - e + j] = (prod[i - e + j] - c * self.poly[j]) % p
        return self._undigits(prod[:e])

    # -- arithmetic ----------------------------------------------------------

    def add(self, a, b):
        return self._add[a][b]

    def sub(self, a, b):
        return self._add[a][self._neg[b]]

    def neg(self, a):
        return self._neg[a]

    def mul(self, a, b):
        return self._mul[a][b]

    def inv(self, a):
        if a == 0:
            raise ZeroDivisionError("0 has no inverse")
        return self._inv[a]

    def div(self, a, b):
        return self._mul[a][self.inv(b)]

    def pow(self, a, n):
        if n < 0:
            a, n = self.inv(a), -n
        r = 1
        while n:
            if n & 1:
                r = self._mul[r][a]
            a = self._mul[a][a]
            n >>= 1
        return r

    def frobenius(self, a, power=1):
        for _ in range(power % self.e):
            a = self._frob[a]
        return a

    def element_order(self, a):
        if a == 0:
            raise ValidationError("0 has no multiplicative order")
        n = 1
        x = a
        while x != 1:
            x = self._mul[x][a]
            n += 1
        return n

    def _find_primitive(self):
        if self.q == 2:
            return 1
        if self.e > 1:
            # x itself, encoded as the integer p; must be primitive
            if self.element_order(self.p) != self.q - 1:
                raise ValidationError(
                    f"bundled polynomial for GF({self.p}^{self.e}) does not "
                    f"make x primitive")
            return self.p
        for a in range(2, self.q):
            if self.element_order(a) == self.q - 1:
                return a
        raise ValidationError("no primitive element found")

    def elements(self):
        return range(self.q)

    def __repr__(self):
        return f"GF({self.p}^{self.e})" if self.e > 1 else f"GF({self.p})"

    def __eq__(self, other):
        return (isinstance(other, FiniteField)
                and (self.p, self.e, self.poly) == (other.p, other.e, other.poly))

    def __hash__(self):
        return hash((self.p, self.e, self.poly))


@lru_cache(maxsize=None)
def GF(q):
    """The finite field with q elements (q a prime power from the table)."""
    p, e = _split_prime_power(q)
    if e == 1:
        return FiniteField(p, 1, (0, 1))
    table = _load_poly_table()
    if (p, e) not in table:
        raise ValidationError(f"no bundled irreducible polynomial for ({p},{e})")
    return FiniteField(p, e, table[(p, e)])


def _split_prime_power(q):
    if q < 2:
        raise ValidationError("q must be a prime power >= 2")
    for p in range(2, q + 1):
        if q % p == 0:
            if not _is_prime(p):
                raise ValidationError(f"{q} is not a prime power")
            e = 0
            m = q
            while m % p == 0:
                m //= p
                e += 1
            if m != 1:
                raise ValidationError(f"{q} is not a prime power")
            return p, e
    raise ValidationError(f"{q} is not a prime power")


# ---------------------------------------------------------------------------
# matrices (tuples of row tuples, acting on column vectors)

def mat_identity(F, m):
    return tuple(tuple(1 if i == j else 0 for j in range(m)) for i in range(m))


def mat_mul(F, A, B):
    m = len(A)
    k = len(B)
    n = len(B[0])
    Bt = list(zip(*B))
    out = []
    mul, add = F.mul, F.add
    for i in range(m):
        row = []
        Ai = A[i]
        for j in range(n):
            Bj = Bt[j]
            s = 0
            for t in range(k):
                a = Ai[t]
                if a:
                    s = add(s, mul(a, Bj[t]))
            row.append(s)
        out.append(tuple(row))
    return tuple(out)


def mat_vec(F, A, v):
    mul, add = F.mul, F.add
    out = []
    for row in A:
        s = 0
        for a, x in zip(row, v):
            if a and x:
                s = add(s, mul(a, x))
        out.append(s)
    return tuple(out)


def mat_pow(F, A, n):
    r = mat_identity(F, len(A))
    while n:
        if n & 1:
            r = mat_mul(F, r, A)
        A = mat_mul(F, A, A)
        n >>= 1
    return r


def mat_det(F, A):
    m = len(A)
    rows = [list(r) for r in A]
    det = 1
    for col in range(m):
        piv = next((r for r in range(col, m) if rows[r][col]), None)
        if piv is None:
            return 0
        if piv != col:
            rows[col], rows[piv] = rows[piv], rows[col]
            det = F.neg(det)
        det = F.mul(det, rows[col][col])
        inv = F.inv(rows[col][col])
        for r in range(col + 1, m):
            f = F.mul(rows[r][col], inv)
            if f:
                for c in range(col, m):
                    rows[r][c] = F.sub(rows[r][c], F.mul(f, rows[col][c]))
    return det


def mat_inv(F, A):
    m = len(A)
    rows = [list(r) + [1 if i == j else 0 for j in range(m)]
            for i, r in enumerate(A)]
    for col in range(m):
        piv = next((r for r in range(col, m) if rows[r][col]), None)
        if piv is None:
            raise ValidationError("matrix is singular")
        rows[col], rows[piv] = rows[piv], rows[col]
        inv = F.inv(rows[col][col])
        rows[col] = [F.mul(inv, x) for x in rows[col]]
        for r in range(m):
            if r != col and rows[r][col]:
                f = rows[r][col]
                rows[r] = [F.sub(x, F.mul(f, y))
                           for x, y in zip(rows[r], rows[col])]
    return tuple(tuple(r[m:]) for r in rows)


def mat_frobenius(F, A, power=1):
    return tuple(tuple(F.frobenius(x, power) for x in row) for row in A)


def elementary(F, m, i, j, val):
    """Identity plus val in position (i, j)."""
    rows = [list(r) for r in mat_identity(F, m)]
    rows[i][j] = F.add(rows[i][j], val) if i == j else val
    return tuple(tuple(r) for r in rows)


def scalar_matrix(F, m, val):
    return tuple(tuple(val if i == j else 0 for j in range(m))
                 for i in range(m))
