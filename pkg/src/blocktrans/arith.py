"""Number-theoretic kernel: modified totient, full-period test, and the
divisor/count computation for extensions of the rank-1 groups of Lie type.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from math import gcd

from .errors import ValidationError

RANK1_FAMILIES = ("PSL2", "PSU3", "Sz", "Ree", "PSL3")


def factorize(n):
    """Prime-exponent pairs of a positive integer, primes increasing."""
    if n < 1:
        raise ValidationError("factorize needs a positive integer")
    out = []
    d = 2
    while d * d <= n:
        if n % d == 0:
            e = 0
            while n % d == 0:
                n //= d
                e += 1
            out.append((d, e))
        d += 1 if d == 2 else 2
    if n > 1:
        out.append((n, 1))
    return out


def divisors(n):
    ds = [1]
    for p, e in factorize(n):
        ds = [d * p ** i for d in ds for i in range(e + 1)]
    return sorted(ds)


def multiplicative_order(a, n):
    if n == 1:
        return 1
    if gcd(a, n) != 1:
        raise ValidationError("order undefined: gcd(a, n) != 1")
    k = 1
    x = a % n
    while x != 1:
        x = x * a % n
        k += 1
    return k


def phi_k(k, t):
    """t * prod over primes p | t, p not dividing k of (p-1)/p.

    Reduces to Euler's totient for k = 1.  k may be any integer (divisibility
    by a prime is all that matters); t must be positive.
    """
    if t < 1:
        raise ValidationError("t must be positive")
    r = t
    for p, _ in factorize(t):
        if k % p != 0:
            r = r // p * (p - 1)
    return r


def is_full_period(a, n):
    """Whether x -> a*x + 1 mod n visits every residue class.

    True iff a = 1 mod p for every prime p | n and a = 1 mod 4 when 4 | n.
    """
    if n < 1:
        raise ValidationError("modulus must be positive")
    if n == 1:
        return True
    for p, _ in factorize(n):
        if (a - 1) % p != 0:
            return False
    if n % 4 == 0 and (a - 1) % 4 != 0:
        return False
    return True


def lcg_full_period(a, n):
    """Direct iteration oracle for is_full_period: the orbit of 0 under
    x -> a*x + 1 mod n first returns to 0 at step exactly n."""
    if n == 1:
        return True
    x = 0
    for t in range(1, n + 1):
        x = (a * x + 1) % n
        if x == 0:
            return t == n
    return False


# ---------------------------------------------------------------------------
# rank-1 parameter bundles

@dataclass
class LieParams:
    """Parameters of an almost simple group over GF(p^e) in its standard
    2-transitive action, as used by the divisor/count formulas.

    t is 2 for PSL2 with q odd, 3 for PSU3 with 3 | q+1 or PSL3 with 3 | q-1,
    and 1 otherwise; t_G in {1, t} records whether the group contains the full
    diagonal torus; e_G is the field-automorphism order induced by the group
    and r_G in [0, t_G) the torus twist on its generating field automorphism.
    """
    family: str
    p: int
    e: int
    t_G: int = 1
    e_G: int = 1
    r_G: int = 0
    label: str = ""

    def __post_init__(self):
        if self.family not in RANK1_FAMILIES:
            raise ValidationError(f"family must be one of {RANK1_FAMILIES}")
        if self.p < 2 or any(self.p % d == 0 for d in range(2, self.p)):
            raise ValidationError("p must be prime")
        if self.e < 1:
            raise ValidationError("e must be >= 1")
        q = self.q
        if self.family == "Sz" and not (self.p == 2 and self.e % 2 and self.e >= 3):
            raise ValidationError("Sz needs p = 2 and odd e >= 3")
        if self.family == "Ree" and not (self.p == 3 and self.e % 2 and self.e >= 3):
            raise ValidationError("Ree needs p = 3 and odd e >= 3")
        if self.family == "PSL2" and q < 4:
            raise ValidationError("PSL2 needs q >= 4")
        if self.t_G not in (1, self.t):
            raise ValidationError(f"t_G must be 1 or {self.t}")
        if not 0 <= self.r_G < self.t_G:
            raise ValidationError("need 0 <= r_G < t_G")
        if self.field_exponent % self.e_G:
            raise ValidationError("e_G must divide the field exponent")

    @property
    def q(self):
        return self.p ** self.e

    @property
    def t(self):
        if self.family == "PSL2" and self.q % 2:
            return 2
        if self.family == "PSU3" and (self.q + 1) % 3 == 0:
            return 3
        if self.family == "PSL3" and (self.q - 1) % 3 == 0:
            return 3
        return 1

    @property
    def field_exponent(self):
        """Exponent E of the defining field (|F| = p^E): 2e for PSU3, else e."""
        return 2 * self.e if self.family == "PSU3" else self.e

    @property
    def f_G(self):
        """Smallest f with x -> x^(p^f) of order e_G on the defining field."""
        return self.field_exponent // self.e_G

    @property
    def a_G(self):
        return self.p ** self.f_G

    @property
    def torus_order(self):
        """|<x>| = |F*| / t_G."""
        return (self.p ** self.field_exponent - 1) // self.t_G


@dataclass
class RankOneReport:
    d_G: int
    o_G: int
    h: dict = field(default_factory=dict)   # n -> class count (h[1] = 1)
    sharp: bool = False                     # never sharp for these families

    def block_sizes(self):
        return sorted(n for n in self.h if n > 1)


def rank1_classify(params: LieParams):
    """Divisors d_G and class counts h_n for proper extensions of the
    standard 2-transitive action of a rank-1 group of Lie type."""
    if params.family == "PSL3":
        raise ValidationError("PSL3 extensions are classified separately")
    t_G, e_G, r_G = params.t_G, params.e_G, params.r_G
    a_G = params.a_G
    # r'_G = r_G * sum(a_G^i, i < e_G); o_G = |<x> : <y^{e_G}>|
    r_prime = r_G * sum(a_G ** i for i in range(e_G))
    f_star = params.p ** params.field_exponent - 1
    if t_G > 1 and r_prime % t_G:
        raise ValidationError("r_G inconsistent: y^e_G must land in <x>")
    o_G = gcd(f_star // t_G, r_prime // t_G)
    core = gcd(e_G, o_G)
    d_G = 1
    for prime, exp in factorize(core) if core > 1 else []:
        if prime == 2:
            star = (params.t == 2 and t_G == 2 and e_G % 2 == 0 and r_G == 1)
            if star:
                d_G *= 2 ** exp if a_G % 4 == 1 else 2
        else:
            if params.family == "PSU3":
                qq = params.q
                if (qq + 1) % prime == 0 and (
                        prime != 3 or (qq + 1) % 9 == 0 or r_G == 0):
                    continue
            if (a_G - 1) % prime == 0:
                d_G *= prime ** exp
    h = {1: 1}
    for n in divisors(d_G):
        if n > 1:
            h[n] = phi_k(t_G, gcd(a_G - 1, n))
    return RankOneReport(d_G=d_G, o_G=o_G, h=h, sharp=False)


def ldc_example_params(p, n):
    """(m, q) with m = ord_n(p) odd and q = p^(m*n), or None when m is even.

    Recipe for building proper extensions with odd block size n over suitable
    large fields; n must be odd and > 1, and coprime to 3 when p = 3.
    """
    if n <= 1 or n % 2 == 0:
        raise ValidationError("n must be odd and > 1")
    if p == 3 and n % 3 == 0:
        raise ValidationError("for p = 3, n must be coprime to 3")
    if gcd(p, n) != 1:
        raise ValidationError("p must be invertible modulo n")
    m = multiplicative_order(p, n)
    if m % 2 == 0:
        return None
    return m, p ** (m * n)
