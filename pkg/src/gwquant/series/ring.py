"""Exact coefficient rings Q(zeta_m).

Elements are stored as integer-vector/denominator pairs in the power basis
1, zeta, ..., zeta^(phi(m)-1) and reduced modulo the m-th cyclotomic
polynomial, so equality is decidable and every element has a canonical
normal form.  No floating point enters here; complex embeddings for the
numeric diagnostics live in `gwquant.convergence`.
"""

from fractions import Fraction
from functools import lru_cache
from math import gcd

from gwquant.errors import RingMismatch, SqrtNotInField
from gwquant.series import _ops


def _poly_divexact(num, den):
    """Exact division of integer polynomials (ascending coefficients)."""
    num = list(num)
    out = [0] * (len(num) - len(den) + 1)
    for k in range(len(out) - 1, -1, -1):
        c = num[len(den) - 1 + k]
        assert c % den[-1] == 0
        q = c // den[-1]
        out[k] = q
        for j, d in enumerate(den):
            num[j + k] -= q * d
    assert all(x == 0 for x in num)
    return out


@lru_cache(maxsize=None)
def cyclotomic_polynomial(m):
    """Integer coefficients of Phi_m, ascending order, monic."""
    if m == 1:
        return (-1, 1)
    poly = [0] * (m + 1)
    poly[0] = -1
    poly[m] = 1
    for d in range(1, m):
        if m % d == 0:
            poly = _poly_divexact(poly, cyclotomic_polynomial(d))
    return tuple(poly)


class CoefficientRing:
    """Q(zeta_m): exact rationals extended by a primitive m-th root of unity.

    root_denominator records the denominator bound for Puiseux exponents of
    the adjoined root variables; it is carried here only so specs can declare
    the full extension in one place (the series layer enforces it).
    """

    def __init__(self, cyclotomic_order=1, root_denominator=1):
        if cyclotomic_order < 1:
            raise ValueError("cyclotomic order must be >= 1")
        self.m = cyclotomic_order
        self.root_denominator = root_denominator
        phi = cyclotomic_polynomial(self.m)
        self.degree = len(phi) - 1
        self._phi = phi
        # rows reducing zeta^(degree+j), j = 0..degree-2, into the power basis
        rows = []
        cur = [-c for c in phi[:-1]]  # zeta^degree
        rows.append(tuple(cur))
        for _ in range(self.degree - 2):
            cur = [0] + cur
            top = cur.pop()
            if top:
                cur = [c + top * r for c, r in zip(cur, rows[0])]
            rows.append(tuple(cur))
        self.red = tuple(rows)
        self.raw_zero = (1, (0,) * self.degree)
        one = [0] * self.degree
        one[0] = 1
        self.raw_one = (1, tuple(one))

    def __eq__(self, other):
        return isinstance(other, CoefficientRing) and self.m == other.m

    def __hash__(self):
        return hash(("CoefficientRing", self.m))

    def __repr__(self):
        return f"CoefficientRing(zeta_{self.m})"

    # -- element construction ---------------------------------------------

    def __call__(self, value):
        return CycNum(self, self.raw_from(value))

    def raw_from(self, value):
        if isinstance(value, CycNum):
            if value.ring.m != self.m:
                raise RingMismatch(f"zeta_{value.ring.m} element in zeta_{self.m} ring")
            return value.raw
        if isinstance(value, tuple):
            return value
        if isinstance(value, int):
            nums = [0] * self.degree
            nums[0] = value
            return (1, tuple(nums))
        if isinstance(value, Fraction):
            nums = [0] * self.degree
            nums[0] = value.numerator
            return (value.denominator, tuple(nums))
        raise TypeError(f"cannot coerce {type(value).__name__} into {self!r}")

    @property
    def zero(self):
        return CycNum(self, self.raw_zero)

    @property
    def one(self):
        return CycNum(self, self.raw_one)

    def zeta(self, power=1):
        """zeta_m^power as a ring element."""
        power %= self.m
        nums = [0] * max(self.degree, power + 1)
        nums[power] = 1
        return CycNum(self, self._reduce_vec(nums))

    def _reduce_vec(self, vec, den=1):
        deg = self.degree
        out = list(vec[:deg]) + [0] * (deg - min(deg, len(vec)))
        for j in range(len(vec) - 1, deg - 1, -1):
            c = vec[j]
            if c:
                row = self.red[j - deg]
                for k in range(deg):
                    if row[k]:
                        out[k] += c * row[k]
        return _ops.cnum_norm(den, out)

    # -- inversion ----------------------------------------------------------

    def raw_inv(self, a):
        """Inverse via the extended Euclidean algorithm mod Phi_m."""
        if _ops.cnum_is_zero(a):
            raise ZeroDivisionError("division by zero ring element")
        if self.degree == 1:
            den, (num,) = a
            return _ops.cnum_norm(num, (den,))
        # polynomials over Q, ascending coefficient lists of Fractions
        phi = [Fraction(c) for c in self._phi]
        av = [Fraction(n, a[0]) for n in a[1]]
        r0, r1 = phi, av
        s0, s1 = [Fraction(0)], [Fraction(1)]
        while True:
            while r1 and r1[-1] == 0:
                r1.pop()
            if len(r1) == 1:
                inv = [c / r1[0] for c in s1]
                break
            q, rem = self._poly_divmod(r0, r1)
            r0, r1 = r1, rem
            s0, s1 = s1, self._poly_sub(s0, self._poly_mul(q, s1))
        den = 1
        for c in inv:
            den = den * c.denominator // gcd(den, c.denominator)
        nums = [int(c * den) for c in inv]
        return self._reduce_vec(nums, den)

    @staticmethod
    def _poly_divmod(a, b):
        a = list(a)
        out = [Fraction(0)] * max(0, len(a) - len(b) + 1)
        for k in range(len(out) - 1, -1, -1):
            c = a[len(b) - 1 + k] / b[-1]
            out[k] = c
            for j, d in enumerate(b):
                a[j + k] -= c * d
        return out, a[: len(b) - 1]

    @staticmethod
    def _poly_mul(a, b):
        out = [Fraction(0)] * (len(a) + len(b) - 1)
        for i, x in enumerate(a):
            for j, y in enumerate(b):
                out[i + j] += x * y
        return out

    @staticmethod
    def _poly_sub(a, b):
        n = max(len(a), len(b))
        a = list(a) + [Fraction(0)] * (n - len(a))
        for j, y in enumerate(b):
            a[j] -= y
        return a

    # -- square roots --------------------------------------------------------

    def _sqrt_catalog(self):
        """Known square roots of small surds available in Q(zeta_m)."""
        cat = [(Fraction(1), self.one)]
        if self.m % 4 == 0:
            cat.append((Fraction(-1), self.zeta(self.m // 4)))
        if self.m % 8 == 0:
            z = self.m // 8
            cat.append((Fraction(2), self.zeta(z) + self.zeta(-z)))
            cat.append((Fraction(-2), self.zeta(z) - self.zeta(-z)))
        if self.m % 12 == 0:
            z = self.m // 12
            cat.append((Fraction(3), self.zeta(z) + self.zeta(-z)))
            cat.append((Fraction(-3), self.zeta(z) - self.zeta(-z)))
        return cat

    def sqrt(self, value):
        """A square root of value in the ring, or SqrtNotInField.

        Searches r * surd * zeta^k with r rational; the returned branch is
        made deterministic by scanning zeta-powers in a fixed order.
        """
        c = self(value)
        if c.is_zero():
            return self.zero
        for surd, elem in self._sqrt_catalog():
            for k in range(self.m):
                base = elem * self.zeta(k) if k else elem
                # need c / (surd * zeta^(2k)) to be a rational square
                denom = base * base
                ratio = c / denom
                r = ratio.as_fraction_or_none()
                if r is None or r < 0:
                    continue
                num = _int_sqrt_exact(r.numerator)
                den = _int_sqrt_exact(r.denominator)
                if num is None or den is None:
                    continue
                root = base * self(Fraction(num, den))
                assert root * root == c
                return root
        raise SqrtNotInField(f"sqrt of {c} not found in Q(zeta_{self.m})")

    # -- canonical text form --------------------------------------------------

    def format(self, value):
        c = self(value)
        r = c.as_fraction_or_none()
        if r is not None:
            return _fmt_fraction(r)
        den, nums = c.raw
        parts = []
        for k, n in enumerate(nums):
            if n == 0:
                continue
            coef = _fmt_fraction(Fraction(n, den))
            if k == 0:
                parts.append(coef)
            elif coef == "1":
                parts.append(f"zeta^{k}")
            elif coef == "-1":
                parts.append(f"-zeta^{k}")
            else:
                parts.append(f"{coef}*zeta^{k}")
        out = parts[0]
        for p in parts[1:]:
            out += f" - {p[1:]}" if p.startswith("-") else f" + {p}"
        return out

    def parse(self, text):
        """Inverse of format (also accepts plain 'p/q')."""
        text = text.replace(" ", "")
        if not text:
            raise ValueError("empty coefficient")
        terms, cur, depth = [], "", 0
        for ch in text:
            if ch == "(":
                depth += 1
            elif ch == ")":
                depth -= 1
            if ch in "+-" and depth == 0 and cur and cur[-1] not in "+-*^/(":
                terms.append(cur)
                cur = ch
            else:
                cur += ch
        terms.append(cur)
        total = self.zero
        for term in terms:
            sign = 1
            while term and term[0] in "+-":
                if term[0] == "-":
                    sign = -sign
                term = term[1:]
            if "zeta" in term:
                coef_s, _, zpart = term.partition("zeta")
                coef_s = coef_s.rstrip("*").strip("()") or "1"
                k = int(zpart[1:]) if zpart.startswith("^") else 1
                val = self.zeta(k) * self(Fraction(coef_s))
            else:
                val = self(Fraction(term.strip("()")))
            total = total + (val if sign == 1 else -val)
        return total


def _int_sqrt_exact(n):
    r = int(n ** 0.5)
    for cand in (r - 1, r, r + 1):
        if cand >= 0 and cand * cand == n:
            return cand
    return None


def _fmt_fraction(r):
    if r.denominator == 1:
        return str(r.numerator)
    return f"{r.numerator}/{r.denominator}"


class CycNum:
    """An element of Q(zeta_m); immutable, hashable, exact."""

    __slots__ = ("ring", "raw")

    def __init__(self, ring, raw):
        self.ring = ring
        self.raw = raw

    def is_zero(self):
        return _ops.cnum_is_zero(self.raw)

    def as_fraction_or_none(self):
        den, nums = self.raw
        if any(n for n in nums[1:]):
            return None
        return Fraction(nums[0], den)

    def as_fraction(self):
        r = self.as_fraction_or_none()
        if r is None:
            raise ValueError(f"{self} is not rational")
        return r

    def _coerce(self, other):
        if isinstance(other, CycNum):
            if other.ring.m != self.ring.m:
                raise RingMismatch("mixed cyclotomic orders")
            return other.raw
        if isinstance(other, (int, Fraction)):
            return self.ring.raw_from(other)
        return None

    def __add__(self, other):
        raw = self._coerce(other)
        if raw is None:
            return NotImplemented
        return CycNum(self.ring, _ops.cnum_add(self.raw, raw))

    __radd__ = __add__

    def __neg__(self):
        return CycNum(self.ring, _ops.cnum_neg(self.raw))

    def __sub__(self, other):
        raw = self._coerce(other)
        if raw is None:
            return NotImplemented
        return CycNum(self.ring, _ops.cnum_add(self.raw, _ops.cnum_neg(raw)))

    def __rsub__(self, other):
        return (-self) + other

    def __mul__(self, other):
        raw = self._coerce(other)
        if raw is None:
            return NotImplemented
        return CycNum(self.ring, _ops.cnum_mul(self.raw, raw, self.ring.red))

    __rmul__ = __mul__

    def __truediv__(self, other):
        raw = self._coerce(other)
        if raw is None:
            return NotImplemented
        return CycNum(self.ring, _ops.cnum_mul(self.raw, self.ring.raw_inv(raw), self.ring.red))

    def __rtruediv__(self, other):
        raw = self._coerce(other)
        if raw is None:
            return NotImplemented
        return CycNum(self.ring, _ops.cnum_mul(raw, self.ring.raw_inv(self.raw), self.ring.red))

    def inv(self):
        return CycNum(self.ring, self.ring.raw_inv(self.raw))

    def __pow__(self, k):
        if not isinstance(k, int):
            return NotImplemented
        if k < 0:
            return self.inv() ** (-k)
        out = self.ring.one
        base = self
        while k:
            if k & 1:
                out = out * base
            base = base * base
            k >>= 1
        return out

    def __eq__(self, other):
        if isinstance(other, (int, Fraction)):
            other = self.ring(other)
        if not isinstance(other, CycNum):
            return NotImplemented
        return self.ring.m == other.ring.m and self.raw == other.raw

    def __hash__(self):
        return hash((self.ring.m, self.raw))

    def __repr__(self):
        return self.ring.format(self)
