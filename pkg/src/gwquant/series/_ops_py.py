"""Pure-Python reference kernels for series and cyclotomic-number arithmetic.

A coefficient ("cnum") is a normalized pair ``(den, nums)`` with ``den`` a
positive int and ``nums`` a tuple of ints of length deg(Q(zeta_m)/Q): the
element sum(nums[k]/den * zeta^k).  A series term table is a dict mapping
scaled-exponent int tuples to cnums.  These functions are the only code that
touches term tables term-by-term; `gwquant.series._ops` swaps in the compiled
twin with the same signatures when it is available.
"""

from math import gcd

IMPL = "python"


def cnum_norm(den, nums):
    """Normalize (den, nums) to lowest terms with positive denominator."""
    g = 0
    for n in nums:
        g = gcd(g, n)
        if g == 1:
            break
    if g == 0:
        return (1, tuple(0 for _ in nums))
    g = gcd(g, den)
    if den < 0:
        g = -g
    if g != 1:
        den //= g
        nums = tuple(n // g for n in nums)
    else:
        nums = tuple(nums)
    return (den, nums)


def cnum_add(a, b):
    da, na = a
    db, nb = b
    if da == db:
        return cnum_norm(da, [x + y for x, y in zip(na, nb)])
    return cnum_norm(da * db, [x * db + y * da for x, y in zip(na, nb)])


def cnum_neg(a):
    return (a[0], tuple(-x for x in a[1]))


def cnum_is_zero(a):
    return all(x == 0 for x in a[1])


def cnum_mul(a, b, red):
    """Multiply two cnums; ``red`` holds the rows reducing zeta^(deg+j)."""
    da, na = a
    db, nb = b
    deg = len(na)
    if deg == 1:
        return cnum_norm(da * db, (na[0] * nb[0],))
    prod = [0] * (2 * deg - 1)
    for i, x in enumerate(na):
        if x:
            for j, y in enumerate(nb):
                if y:
                    prod[i + j] += x * y
    out = prod[:deg]
    for j in range(2 * deg - 2, deg - 1, -1):
        c = prod[j]
        if c:
            row = red[j - deg]
            for k in range(deg):
                r = row[k]
                if r:
                    out[k] += c * r
    return cnum_norm(da * db, out)


def _wval(key, wvec):
    s = 0
    for e, w in zip(key, wvec):
        if e:
            s += e * w
    return s


def series_add(ta, tb, wvec, cap):
    """Termwise sum; terms at scaled valuation >= cap are dropped."""
    out = {}
    for key, c in ta.items():
        if cap is None or _wval(key, wvec) < cap:
            out[key] = c
    for key, c in tb.items():
        if cap is not None and _wval(key, wvec) >= cap:
            continue
        prev = out.get(key)
        if prev is None:
            out[key] = c
        else:
            s = cnum_add(prev, c)
            if cnum_is_zero(s):
                del out[key]
            else:
                out[key] = s
    return out


def series_scale(t, c, red):
    if cnum_is_zero(c):
        return {}
    out = {}
    for key, v in t.items():
        p = cnum_mul(v, c, red)
        if not cnum_is_zero(p):
            out[key] = p
    return out


def series_mul(ta, tb, wvec, cap, red, maxpow):
    """Truncated Cauchy product of two term tables.

    maxpow: per-variable scaled exponent caps (None entries = unbounded);
    terms whose key exceeds a cap are dropped (nilpotent jet variables).
    """
    if len(ta) > len(tb):
        ta, tb = tb, ta
    out = {}
    items_b = list(tb.items())
    for ka, ca in ta.items():
        va = _wval(ka, wvec) if cap is not None else 0
        for kb, cb in items_b:
            if cap is not None and va + _wval(kb, wvec) >= cap:
                continue
            key = tuple(x + y for x, y in zip(ka, kb))
            if maxpow is not None:
                bad = False
                for e, mp in zip(key, maxpow):
                    if mp is not None and e > mp:
                        bad = True
                        break
                if bad:
                    continue
            c = cnum_mul(ca, cb, red)
            prev = out.get(key)
            if prev is None:
                if not cnum_is_zero(c):
                    out[key] = c
            else:
                s = cnum_add(prev, c)
                if cnum_is_zero(s):
                    del out[key]
                else:
                    out[key] = s
    return out
