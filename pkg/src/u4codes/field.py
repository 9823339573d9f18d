"""Exact arithmetic in the finite field GF(p^m).

Elements are plain Python ints: the element with power-basis coordinates
(c_0, ..., c_{m-1}) over GF(p) is encoded as c_0 + c_1*p + ... +
c_{m-1}*p^(m-1).  The encoding is a bijection onto range(q), 0 encodes 0
and 1 encodes 1, and for m = 1 it is the identity.  A GF instance owns the
defining modulus and provides all arithmetic; for small fields the four
operation tables are precomputed so hot loops reduce to list indexing.
"""

from __future__ import annotations

# Fields up to this size get full add/sub/mul tables (q^2 entries each).
_TABLE_MAX = 512


def is_prime(p: int) -> bool:
    """Trial-division primality test; intended for desk-scale p."""
    if p < 2:
        return False
    if p < 4:
        return True
    if p % 2 == 0:
        return False
    d = 3
    while d * d <= p:
        if p % d == 0:
            return False
        d += 2
    return True


def _digits(value: int, p: int, m: int) -> tuple[int, ...]:
    out = []
    for _ in range(m):
        out.append(value % p)
        value //= p
    return tuple(out)


class GF:
    """The field GF(p^m) = GF(p)[y]/(modulus), with int-encoded elements.

    The modulus is a monic irreducible polynomial of degree m over GF(p),
    given as coefficients in ascending order (constant term first).  When
    omitted it is generated deterministically: the monic irreducible of
    degree m whose coefficient vector has the smallest integer encoding.
    For m = 1 the modulus is the polynomial y and plays no role.
    """

    __slots__ = ("p", "m", "q", "modulus", "add_t", "sub_t", "mul_t",
                 "inv_t", "neg_t")

    def __init__(self, p: int, m: int = 1, modulus: tuple[int, ...] | None = None):
        if not is_prime(p):
            raise ValueError(f"p = {p} is not prime")
        if m < 1:
            raise ValueError(f"extension degree m = {m} must be >= 1")
        self.p = p
        self.m = m
        self.q = p ** m
        if modulus is None:
            modulus = self._default_modulus(p, m)
        else:
            modulus = tuple(int(c) for c in modulus)
            self._check_modulus(modulus)
        self.modulus = modulus

        self.add_t = self.sub_t = self.mul_t = self.inv_t = self.neg_t = None
        if self.q <= _TABLE_MAX:
            self._build_tables()

    # -- construction helpers -------------------------------------------

    @staticmethod
    def _default_modulus(p: int, m: int) -> tuple[int, ...]:
        if m == 1:
            return (0, 1)
        base = GF(p)
        from . import poly  # deferred: poly has no import-time dependency on us

        for t in range(p ** m):
            cand = _digits(t, p, m) + (1,)
            if poly.is_irreducible(base, cand):
                return cand
        raise RuntimeError("no irreducible modulus found")  # pragma: no cover

    def _check_modulus(self, modulus: tuple[int, ...]) -> None:
        p, m = self.p, self.m
        if len(modulus) != m + 1 or modulus[-1] != 1:
            raise ValueError("modulus must be monic of degree m")
        if any(not (0 <= c < p) for c in modulus):
            raise ValueError("modulus coefficients must be reduced mod p")
        if m > 1:
            base = GF(p)
            from . import poly

            if not poly.is_irreducible(base, modulus):
                raise ValueError("modulus is reducible over GF(p)")

    def _build_tables(self) -> None:
        q = self.q
        add = [[self._add_slow(a, b) for b in range(q)] for a in range(q)]
        sub = [[self._sub_slow(a, b) for b in range(q)] for a in range(q)]
        mul = [[self._mul_slow(a, b) for b in range(q)] for a in range(q)]
        inv = [0] * q
        for a in range(1, q):
            inv[a] = self._inv_slow(a)
        self.add_t, self.sub_t, self.mul_t, self.inv_t = add, sub, mul, inv
        self.neg_t = [sub[0][a] for a in range(q)]

    # -- slow (table-free) arithmetic ------------------------------------

    def _add_slow(self, a: int, b: int) -> int:
        if self.m == 1:
            return (a + b) % self.p
        p = self.p
        out = 0
        mult = 1
        for _ in range(self.m):
            out += ((a + b) % p) * mult
            a //= p
            b //= p
            mult *= p
        return out

    def _sub_slow(self, a: int, b: int) -> int:
        if self.m == 1:
            return (a - b) % self.p
        p = self.p
        out = 0
        mult = 1
        for _ in range(self.m):
            out += ((a - b) % p) * mult
            a //= p
            b //= p
            mult *= p
        return out

    def _mul_slow(self, a: int, b: int) -> int:
        if self.m == 1:
            return (a * b) % self.p
        p, m = self.p, self.m
        da = _digits(a, p, m)
        db = _digits(b, p, m)
        prod = [0] * (2 * m - 1)
        for i, ai in enumerate(da):
            if ai:
                for j, bj in enumerate(db):
                    prod[i + j] = (prod[i + j] + ai * bj) % p
        # reduce mod the (monic) modulus
        mod = self.modulus
        for k in range(len(prod) - 1, m - 1, -1):
            c = prod[k]
            if c:
                prod[k] = 0
                for i in range(m):
                    prod[k - m + i] = (prod[k - m + i] - c * mod[i]) % p
        out = 0
        mult = 1
        for i in range(m):
            out += prod[i] * mult
            mult *= p
        return out

    def _inv_slow(self, a: int) -> int:
        if a == 0:
            raise ZeroDivisionError("inversion of zero field element")
        if self.m == 1:
            return pow(a, self.p - 2, self.p)
        # a^(q-2) by square-and-multiply
        result = 1
        base = a
        e = self.q - 2
        while e:
            if e & 1:
                result = self._mul_slow(result, base)
            base = self._mul_slow(base, base)
            e >>= 1
        return result

    # -- public arithmetic ------------------------------------------------

    def add(self, a: int, b: int) -> int:
        if self.add_t is not None:
            return self.add_t[a][b]
        return self._add_slow(a, b)

    def sub(self, a: int, b: int) -> int:
        if self.sub_t is not None:
            return self.sub_t[a][b]
        return self._sub_slow(a, b)

    def neg(self, a: int) -> int:
        if self.neg_t is not None:
            return self.neg_t[a]
        return self._sub_slow(0, a)

    def mul(self, a: int, b: int) -> int:
        if self.mul_t is not None:
            return self.mul_t[a][b]
        return self._mul_slow(a, b)

    def inv(self, a: int) -> int:
        if a == 0:
            raise ZeroDivisionError("inversion of zero field element")
        if self.inv_t is not None:
            return self.inv_t[a]
        return self._inv_slow(a)

    def pow(self, a: int, e: int) -> int:
        if e < 0:
            a = self.inv(a)
            e = -e
        result = 1
        while e:
            if e & 1:
                result = self.mul(result, a)
            a = self.mul(a, a)
            e >>= 1
        return result

    # -- element helpers --------------------------------------------------

    def check(self, a: int) -> int:
        """Validate that a is an encoded element of this field."""
        if not isinstance(a, int) or not 0 <= a < self.q:
            raise ValueError(f"{a!r} does not encode an element of {self}")
        return a

    def coeffs(self, a: int) -> tuple[int, ...]:
        """Power-basis coordinates (c_0, ..., c_{m-1}) of an element."""
        return _digits(a, self.p, self.m)

    def from_coeffs(self, cs) -> int:
        out = 0
        mult = 1
        for c in cs:
            out += (int(c) % self.p) * mult
            mult *= self.p
        return out

    def element_str(self, a: int, poly_basis: bool = False, var: str = "y") -> str:
        """Render an element, either as its integer encoding or in the power basis."""
        if not poly_basis or self.m == 1:
            return str(a)
        cs = self.coeffs(a)
        terms = []
        for k in range(self.m - 1, -1, -1):
            c = cs[k]
            if c == 0:
                continue
            if k == 0:
                terms.append(str(c))
            elif k == 1:
                terms.append(var if c == 1 else f"{c}*{var}")
            else:
                terms.append(f"{var}^{k}" if c == 1 else f"{c}*{var}^{k}")
        return " + ".join(terms) if terms else "0"

    # -- equality / display ------------------------------------------------

    def __eq__(self, other) -> bool:
        if not isinstance(other, GF):
            return NotImplemented
        return (self.p, self.m, self.modulus) == (other.p, other.m, other.modulus)

    def __hash__(self) -> int:
        return hash((self.p, self.m, self.modulus))

    def __repr__(self) -> str:
        if self.m == 1:
            return f"GF({self.p})"
        return f"GF({self.p}^{self.m})"
