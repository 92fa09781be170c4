"""Arithmetic in the coefficient field F_q, q = p^nu with p an odd prime.

Elements of F_q are plain integers in ``range(q)``: the element with
coordinates (c_0, ..., c_{nu-1}) in the power basis of the defining
modulus is encoded as ``c_0 + c_1*p + ... + c_{nu-1}*p**(nu-1)``.  All
arithmetic goes through a :class:`FieldCtx`, which owns the modulus and,
for small q, precomputed operation tables.  Contexts are immutable and
safe to share between threads.

The encoding makes elements hashable, cheap to enumerate (``range(q)``)
and gives a fixed deterministic ordering, which the rest of the library
relies on for canonical output.
"""

from __future__ import annotations

_TABLE_LIMIT = 512  # full q-by-q tables only below this


def _is_prime(n: int) -> bool:
    if n < 2:
        return False
    if n % 2 == 0:
        return n == 2
    d = 3
    while d * d <= n:
        if n % d == 0:
            return False
        d += 2
    return True


# ---------------------------------------------------------------------------
# Polynomial helpers over F_p, used only to validate/construct the modulus.
# Coefficient tuples are little-endian and trimmed.


def _fp_trim(c: list[int]) -> tuple[int, ...]:
    while c and c[-1] == 0:
        c.pop()
    return tuple(c)


def _fp_mul(a: tuple[int, ...], b: tuple[int, ...], p: int) -> tuple[int, ...]:
    if not a or not b:
        return ()
    out = [0] * (len(a) + len(b) - 1)
    for i, ai in enumerate(a):
        if ai:
            for j, bj in enumerate(b):
                out[i + j] = (out[i + j] + ai * bj) % p
    return _fp_trim(out)


def _fp_mod(a: tuple[int, ...], m: tuple[int, ...], p: int) -> tuple[int, ...]:
    # m need not be monic; divide through by the leading coefficient.
    inv_lead = pow(m[-1], p - 2, p)
    r = list(a)
    dm = len(m) - 1
    while len(r) - 1 >= dm and any(r):
        while r and r[-1] == 0:
            r.pop()
        if len(r) - 1 < dm:
            break
        c = (r[-1] * inv_lead) % p
        shift = len(r) - 1 - dm
        for i, mi in enumerate(m):
            r[shift + i] = (r[shift + i] - c * mi) % p
    return _fp_trim(r)


def _fp_powmod(base: tuple[int, ...], e: int, m: tuple[int, ...], p: int) -> tuple[int, ...]:
    result: tuple[int, ...] = (1,)
    b = _fp_mod(base, m, p)
    while e > 0:
        if e & 1:
            result = _fp_mod(_fp_mul(result, b, p), m, p)
        b = _fp_mod(_fp_mul(b, b, p), m, p)
        e >>= 1
    return result


def _fp_gcd(a: tuple[int, ...], b: tuple[int, ...], p: int) -> tuple[int, ...]:
    while b:
        a, b = b, _fp_mod(a, b, p)
    if a:
        inv = pow(a[-1], p - 2, p)
        a = tuple((c * inv) % p for c in a)
    return a


def _fp_is_irreducible(f: tuple[int, ...], p: int) -> bool:
    """Rabin's test for f in F_p[u], f monic of degree >= 1."""
    d = len(f) - 1
    if d < 1:
        return False
    x: tuple[int, ...] = (0, 1)
    # x^(p^d) == x mod f
    h = x
    for _ in range(d):
        h = _fp_powmod(h, p, f, p)
    if h != _fp_mod(x, f, p):
        return False
    # for each prime l | d: gcd(x^(p^(d/l)) - x, f) must be trivial
    for l in _prime_divisors(d):
        h = x
        for _ in range(d // l):
            h = _fp_powmod(h, p, f, p)
        diff = list(h)
        while len(diff) < 2:
            diff.append(0)
        diff[1] = (diff[1] - 1) % p
        g = _fp_gcd(_fp_trim(diff), f, p)
        if len(g) - 1 > 0:
            return False
    return True


def _prime_divisors(n: int) -> list[int]:
    out = []
    d = 2
    while d * d <= n:
        if n % d == 0:
            out.append(d)
            while n % d == 0:
                n //= d
        d += 1
    if n > 1:
        out.append(n)
    return out


def _default_modulus(p: int, nu: int) -> tuple[int, ...]:
    """Lexicographically smallest monic irreducible of degree nu over F_p.

    Candidates are scanned in increasing order of their integer encoding,
    i.e. lexicographic order on (c_{nu-1}, ..., c_0).
    """
    for enc in range(p**nu):
        coeffs = []
        e = enc
        for _ in range(nu):
            e, c = divmod(e, p)
            coeffs.append(c)
        cand = tuple(coeffs) + (1,)
        if _fp_is_irreducible(cand, p):
            return cand
    raise AssertionError("no irreducible polynomial found")  # unreachable


class FieldCtx:
    """The field F_q together with its element encoding.

    Parameters
    ----------
    p : odd prime characteristic.
    nu : extension degree over F_p (default 1).
    modulus : optional coefficient tuple (little-endian, length nu+1,
        monic) of an irreducible degree-nu polynomial over F_p.  When
        omitted the lexicographically smallest such polynomial is chosen,
        so a (p, nu) pair always names the same field model.
    """

    __slots__ = ("p", "nu", "q", "modulus", "_mul")

    def __init__(self, p: int, nu: int = 1, modulus=None):
        if not _is_prime(p):
            raise ValueError(f"characteristic {p} is not prime")
        if p == 2:
            raise ValueError("even characteristic is not supported")
        if nu < 1:
            raise ValueError(f"extension degree must be >= 1, got {nu}")
        self.p = p
        self.nu = nu
        self.q = p**nu
        if modulus is None:
            self.modulus = _default_modulus(p, nu)
        else:
            m = tuple(int(c) % p for c in modulus)
            if len(m) != nu + 1 or m[-1] != 1:
                raise ValueError("modulus must be monic of degree nu")
            if not _fp_is_irreducible(m, p):
                raise ValueError("modulus is reducible over F_p")
            self.modulus = m
        if self.nu > 1 and self.q <= _TABLE_LIMIT:
            self._mul = [[self._mul_raw(a, b) for b in range(self.q)] for a in range(self.q)]
        else:
            self._mul = None

    # -- encoding -----------------------------------------------------------

    def coeffs(self, a: int) -> tuple[int, ...]:
        """Power-basis coordinates (c_0, ..., c_{nu-1}) of an element."""
        self._check(a)
        out = []
        for _ in range(self.nu):
            a, c = divmod(a, self.p)
            out.append(c)
        return tuple(out)

    def from_coeffs(self, cs) -> int:
        cs = list(cs)
        if len(cs) > self.nu:
            raise ValueError("too many coordinates")
        enc = 0
        for i, c in enumerate(cs):
            enc += (int(c) % self.p) * self.p**i
        return enc

    def elements(self):
        return range(self.q)

    def units(self):
        return range(1, self.q)

    def _check(self, a: int) -> None:
        if not 0 <= a < self.q:
            raise ValueError(f"{a} is not an element encoding for q={self.q}")

    # -- arithmetic ---------------------------------------------------------

    def add(self, a: int, b: int) -> int:
        if self.nu == 1:
            return (a + b) % self.p
        p = self.p
        out = 0
        pw = 1
        for _ in range(self.nu):
            out += ((a + b) % p) * pw
            a //= p
            b //= p
            pw *= p
        return out

    def neg(self, a: int) -> int:
        if self.nu == 1:
            return (-a) % self.p
        p = self.p
        out = 0
        pw = 1
        for _ in range(self.nu):
            out += ((-a) % p) * pw
            a //= p
            pw *= p
        return out

    def sub(self, a: int, b: int) -> int:
        return self.add(a, self.neg(b))

    def _mul_raw(self, a: int, b: int) -> int:
        p = self.p
        da = self.coeffs(a)
        db = self.coeffs(b)
        prod = [0] * (2 * self.nu - 1)
        for i, ai in enumerate(da):
            if ai:
                for j, bj in enumerate(db):
                    prod[i + j] = (prod[i + j] + ai * bj) % p
        red = _fp_mod(tuple(prod), self.modulus, p)
        enc = 0
        for i, c in enumerate(red):
            enc += c * p**i
        return enc

    def mul(self, a: int, b: int) -> int:
        if self.nu == 1:
            return (a * b) % self.p
        if self._mul is not None:
            return self._mul[a][b]
        return self._mul_raw(a, b)

    def inv(self, a: int) -> int:
        if a == 0:
            raise ZeroDivisionError("inversion of zero in F_q")
        if self.nu == 1:
            return pow(a, self.p - 2, self.p)
        return self.pow(a, self.q - 2)

    def pow(self, a: int, e: int) -> int:
        if e < 0:
            return self.pow(self.inv(a), -e)
        if self.nu == 1:
            return pow(a, e, self.p)
        result = 1
        base = a
        while e > 0:
            if e & 1:
                result = self.mul(result, base)
            base = self.mul(base, base)
            e >>= 1
        return result

    # -- structure maps -----------------------------------------------------

    def trace(self, a: int) -> int:
        """Absolute trace F_q -> F_p, returned as an integer in range(p).

        Tr(a) = a + a^p + ... + a^(p^(nu-1)); the result is F_p-rational,
        i.e. its encoding is already an integer below p.
        """
        self._check(a)
        if self.nu == 1:
            return a
        acc = a
        frob = a
        for _ in range(self.nu - 1):
            frob = self.pow(frob, self.p)
            acc = self.add(acc, frob)
        assert acc < self.p, "trace left the prime field"
        return acc

    def char_exponent(self, a: int) -> int:
        """Exponent k such that the additive character sends a to zeta_p^k."""
        return self.trace(a)

    def is_square_unit(self, a: int) -> bool:
        """Whether a is a nonzero square; membership test in (F_q^x)^2."""
        if a == 0:
            raise ValueError("square class of zero is undefined here")
        return self.pow(a, (self.q - 1) // 2) == 1

    def sqrt_unit(self, a: int):
        """Smallest b with b*b == a, or None if a is not a square unit."""
        if a == 0:
            raise ValueError("expected a unit")
        for b in self.units():
            if self.mul(b, b) == a:
                return b
        return None

    # -- misc ---------------------------------------------------------------

    def __eq__(self, other):
        return (
            isinstance(other, FieldCtx)
            and self.p == other.p
            and self.nu == other.nu
            and self.modulus == other.modulus
        )

    def __hash__(self):
        return hash((self.p, self.nu, self.modulus))

    def __repr__(self):
        if self.nu == 1:
            return f"FieldCtx(p={self.p})"
        return f"FieldCtx(p={self.p}, nu={self.nu}, modulus={list(self.modulus)})"
