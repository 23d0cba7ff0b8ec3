"""Deterministic finite fields: F_p, F_{p^e}, and flat extensions of degree m.

Every context is a function of (p, e, m) alone.  The modulus is the first
monic irreducible polynomial of degree e*m over F_p in integer-code order
(a polynomial's code reads its coefficients as base-p digits, constant term
least significant), and the primitive element is the first element of full
multiplicative order in the same code order.  Two builds with the same
parameters are therefore bit-identical, here and in any reimplementation
that follows the same two rules.

Elements of F_{p^e} with e >= 2 appearing as *scalars* (e.g. polynomial
coefficients) are also integer codes 0..q-1 under the same digit convention,
with arithmetic delegated to small tables built from the canonical degree-e
modulus.
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from functools import lru_cache

import numpy as np

FIELD_ORDER_CAP = 1 << 64  # contexts with p^(e*m) beyond this are refused
_TABLE_CAP = 1 << 16       # exp/log tables built for fields up to this order
_SCALAR_CAP = 1 << 9       # prime-power scalar fields get full op tables


class DomainError(ValueError):
    """Caller violated a precondition."""


class InternalError(RuntimeError):
    """A structural invariant failed; signals a bug, not bad input."""


# ---------------------------------------------------------------------------
# integer number theory


def is_prime(n: int) -> bool:
    """Deterministic Miller-Rabin, exact for anything this package accepts."""
    if n < 2:
        return False
    for p in (2, 3, 5, 7, 11, 13, 17, 19, 23, 29, 31, 37):
        if n % p == 0:
            return n == p
    d = n - 1
    r = 0
    while d % 2 == 0:
        d //= 2
        r += 1
    for a in (2, 3, 5, 7, 11, 13, 17, 19, 23, 29, 31, 37):
        x = pow(a, d, n)
        if x in (1, n - 1):
            continue
        for _ in range(r - 1):
            x = x * x % n
            if x == n - 1:
                break
        else:
            return False
    return True


def _pollard_rho(n):
    # Brent's variant; n odd composite, no factor below the trial bound.
    if n % 2 == 0:
        return 2
    for c in range(1, 100):
        x = y = 2
        d = 1
        while d == 1:
            x = (x * x + c) % n
            y = (y * y + c) % n
            y = (y * y + c) % n
            d = math.gcd(abs(x - y), n)
        if d != n:
            return d
    raise InternalError(f"rho splitting failed for {n}")


def factorize(n: int) -> dict:
    """Prime factorization as {prime: exponent}; trial division then rho."""
    if n < 1:
        raise DomainError("factorize wants n >= 1")
    out = {}
    for p in (2, 3, 5):
        while n % p == 0:
            out[p] = out.get(p, 0) + 1
            n //= p
    d = 7
    while d * d <= n and d < 10**6:
        while n % d == 0:
            out[d] = out.get(d, 0) + 1
            n //= d
        d += 2
    stack = [n] if n > 1 else []
    while stack:
        m = stack.pop()
        if m == 1:
            continue
        if is_prime(m):
            out[m] = out.get(m, 0) + 1
            continue
        f = _pollard_rho(m)
        stack.append(f)
        stack.append(m // f)
    return out


def euler_phi(n: int) -> int:
    phi = 1
    for p, e in factorize(n).items():
        phi *= (p - 1) * p ** (e - 1)
    return phi


def ord_mod(q: int, n: int) -> int:
    """Multiplicative order of q modulo n."""
    if n < 2:
        raise DomainError("ord_mod wants n >= 2")
    if math.gcd(q, n) != 1:
        raise DomainError(f"gcd({q},{n}) != 1, no multiplicative order")
    t = euler_phi(n)
    for p in factorize(t):
        while t % p == 0 and pow(q, t // p, n) == 1:
            t //= p
    return t


def is_primitive(q: int, n: int) -> bool:
    """True when q generates the full unit group modulo n."""
    return ord_mod(q, n) == euler_phi(n)


# ---------------------------------------------------------------------------
# polynomials over F_p, used only to bootstrap field contexts
# (dense tuples, lowest degree first, no trailing zeros)


def _pp_trim(c):
    i = len(c)
    while i and c[i - 1] == 0:
        i -= 1
    return tuple(c[:i])


def _pp_mul(a, b, p):
    if not a or not b:
        return ()
    out = np.convolve(np.asarray(a, np.int64), np.asarray(b, np.int64)) % p
    return _pp_trim(out.tolist())


def _pp_rem(a, m, p):
    # m monic
    dm = len(m) - 1
    arr = [x % p for x in a]
    for i in range(len(arr) - 1, dm - 1, -1):
        c = arr[i]
        if c:
            for j in range(dm + 1):
                arr[i - dm + j] = (arr[i - dm + j] - c * m[j]) % p
    return _pp_trim(arr[:dm])


def _pp_gcd(a, b, p):
    a, b = _pp_trim(a), _pp_trim(b)
    while b:
        if len(b) - 1 == 0:
            return (1,)
        # remainder of a by b (b made monic on the fly)
        inv = pow(b[-1], p - 2, p)
        bm = tuple(x * inv % p for x in b)
        a, b = b, _pp_rem(a, bm, p)
    inv = pow(a[-1], p - 2, p) if a else 0
    return tuple(x * inv % p for x in a)


def _pp_pow_x(e, m, p):
    """x^e mod m by square and multiply."""
    result = (1,)
    base = _pp_rem((0, 1), m, p)
    while e:
        if e & 1:
            result = _pp_rem(_pp_mul(result, base, p), m, p)
        base = _pp_rem(_pp_mul(base, base, p), m, p)
        e >>= 1
    return result


def _pp_add_const(t, c, p):
    if not c:
        return t
    if not t:
        return (c % p,)
    out = list(t)
    out[0] = (out[0] + c) % p
    return _pp_trim(out)


def _pp_compose(t, xp, m, p):
    """t(xp) mod m via Horner."""
    acc = ()
    for c in reversed(t):
        acc = _pp_rem(_pp_mul(acc, xp, p), m, p)
        acc = _pp_add_const(acc, c, p)
    return acc


def _pp_is_irreducible(f, p):
    """No irreducible factor of degree <= d/2 (a smallest factor always is)."""
    d = len(f) - 1
    if d < 1:
        return False
    if d == 1:
        return True
    if f[0] == 0:
        return False  # divisible by x
    for c in range(min(p, 12)):  # root screen
        acc = 0
        for co in reversed(f):
            acc = (acc * c + co) % p
        if acc == 0:
            return False
    xp = _pp_pow_x(p, f, p)
    t = xp  # x^(p^k), starting at k = 1
    for k in range(1, d // 2 + 1):
        diff = list(t) + [0] * max(0, 2 - len(t))
        diff[1] = (diff[1] - 1) % p
        g = _pp_gcd(_pp_trim(diff), f, p)
        if g != (1,):
            return False
        if k < d // 2:
            t = _pp_compose(t, xp, f, p)
    return True


def _find_irreducible(p, d):
    """First monic irreducible of degree d over F_p in integer-code order."""
    for low in range(p**d):
        coeffs = []
        v = low
        for _ in range(d):
            coeffs.append(v % p)
            v //= p
        if d > 1 and coeffs[0] == 0:
            continue
        f = tuple(coeffs) + (1,)
        if _pp_is_irreducible(f, p):
            return f
    raise InternalError(f"no irreducible of degree {d} over F_{p}")


# ---------------------------------------------------------------------------
# prime powers and base-field scalars


@dataclass(frozen=True)
class PrimePower:
    """A base field size q = p^e; scalars are integer codes 0..q-1."""

    p: int
    e: int
    q: int

    def __post_init__(self):
        if not is_prime(self.p):
            raise DomainError(f"{self.p} is not prime")
        if self.e < 1 or self.p**self.e != self.q:
            raise DomainError(f"{self.q} != {self.p}^{self.e}")

    @classmethod
    def make(cls, p: int, e: int = 1) -> "PrimePower":
        return cls(p, e, p**e)

    @classmethod
    def from_int(cls, q: int) -> "PrimePower":
        f = factorize(q) if q >= 2 else {}
        if len(f) != 1:
            raise DomainError(f"{q} is not a prime power")
        ((p, e),) = f.items()
        return cls(p, e, q)

    # scalar arithmetic on codes
    def sadd(self, a, b):
        if self.e == 1:
            return (a + b) % self.p
        return _scalar_tables(self.p, self.e)[0][a][b]

    def ssub(self, a, b):
        return self.sadd(a, self.sneg(b))

    def sneg(self, a):
        if self.e == 1:
            return -a % self.p
        if a == 0:
            return 0
        p = self.p
        out = 0
        mul = 1
        while a:
            out += (-a % p) % p * mul
            a //= p
            mul *= p
        return out

    def smul(self, a, b):
        if self.e == 1:
            return a * b % self.p
        return _scalar_tables(self.p, self.e)[1][a][b]

    def sinv(self, a):
        if a == 0:
            raise DomainError("no inverse of 0")
        if self.e == 1:
            return pow(a, self.p - 2, self.p)
        return _scalar_tables(self.p, self.e)[2][a]

    def spow(self, a, k):
        r = 1
        while k:
            if k & 1:
                r = self.smul(r, a)
            a = self.smul(a, a)
            k >>= 1
        return r

    def modulus_digits(self):
        """Canonical degree-e modulus over F_p (None for prime fields)."""
        if self.e == 1:
            return None
        return _find_irreducible(self.p, self.e)


@lru_cache(maxsize=None)
def _scalar_tables(p, e):
    q = p**e
    if q > _SCALAR_CAP:
        raise DomainError(f"prime-power scalar field F_{q} beyond table cap {_SCALAR_CAP}")
    mod = _find_irreducible(p, e)

    def decode(c):
        out = []
        for _ in range(e):
            out.append(c % p)
            c //= p
        return tuple(out)

    def encode(t):
        out = 0
        mul = 1
        for d in t:
            out += d * mul
            mul *= p
        return out

    add = tuple(
        tuple(encode(tuple((x + y) % p for x, y in zip(decode(a), decode(b))))
              for b in range(q))
        for a in range(q)
    )
    mul = []
    for a in range(q):
        da = _pp_trim(decode(a))
        row = []
        for b in range(q):
            db = _pp_trim(decode(b))
            prod = _pp_rem(_pp_mul(da, db, p), mod, p)
            row.append(encode(prod + (0,) * (e - len(prod))))
        mul.append(tuple(row))
    mul = tuple(mul)
    inv = [0] * q
    for a in range(1, q):
        for b in range(1, q):
            if mul[a][b] == 1:
                inv[a] = b
                break
        else:
            raise InternalError(f"no inverse for {a} in F_{q}")
    return add, mul, tuple(inv)


# ---------------------------------------------------------------------------
# field contexts and elements


@dataclass(frozen=True)
class FFElem:
    """Element of a FieldCtx; val is a bitmask (p=2) or digit tuple (p odd)."""

    val: object
    ctx: "FieldCtx"

    def __add__(self, other):
        return self.ctx.add(self, other)

    def __sub__(self, other):
        return self.ctx.add(self, self.ctx.neg(other))

    def __neg__(self):
        return self.ctx.neg(self)

    def __mul__(self, other):
        return self.ctx.mul(self, other)

    def __truediv__(self, other):
        return self.ctx.mul(self, self.ctx.inv(other))

    def __pow__(self, k):
        return self.ctx.pow(self, k)

    def __bool__(self):
        return bool(self.val) if isinstance(self.val, int) else any(self.val)

    @property
    def code(self) -> int:
        """Integer code: digits base p, constant term least significant."""
        if isinstance(self.val, int):
            return self.val
        out = 0
        mul = 1
        for d in self.val:
            out += d * mul
            mul *= self.ctx.char
        return out

    @property
    def digits(self) -> tuple:
        if isinstance(self.val, int):
            return tuple((self.val >> i) & 1 for i in range(self.ctx.deg))
        return self.val

    def __repr__(self):
        return f"FFElem({self.code} in GF({self.ctx.base.q}^{self.ctx.ext_degree}))"


class FieldCtx:
    """Concrete field F_{q^m} realized as F_p[x]/(modulus), deg = e*m.

    Immutable after construction; safe to share across workers.  Use
    field_ctx() to obtain one (cached, canonical).
    """

    def __init__(self, base: PrimePower, ext_degree: int):
        p = base.p
        deg = base.e * ext_degree
        order = p**deg
        if order >= FIELD_ORDER_CAP:
            raise DomainError(f"field order {base.q}^{ext_degree} exceeds cap 2^64")
        self.base = base
        self.ext_degree = ext_degree
        self.char = p
        self.deg = deg
        self.order = order
        self.group_order = order - 1
        self.group_factors = tuple(sorted(factorize(order - 1)))
        mod = _find_irreducible(p, deg)
        self._mod_digits = mod
        self._mod_int = sum(b << i for i, b in enumerate(mod)) if p == 2 else None
        self._exp = None
        self._log = None
        self._embed_map = None
        self._unembed_map = None

        prim = self._find_primitive()
        self.primitive_elt = prim
        if order <= _TABLE_CAP:
            self._build_tables(prim)
        if base.e >= 2:
            self._build_embedding()
        if mult_order(prim) != self.group_order:
            raise InternalError("primitive element lost its order")

    # -- representation helpers --

    def zero(self) -> FFElem:
        return FFElem(0 if self.char == 2 else (0,) * self.deg, self)

    def one(self) -> FFElem:
        return self.from_code(1)

    def from_code(self, code: int) -> FFElem:
        if not 0 <= code < self.order:
            raise DomainError(f"code {code} outside field of order {self.order}")
        if self.char == 2:
            return FFElem(code, self)
        p = self.char
        digs = []
        for _ in range(self.deg):
            digs.append(code % p)
            code //= p
        return FFElem(tuple(digs), self)

    def elements(self):
        for c in range(self.order):
            yield self.from_code(c)

    @property
    def modulus(self):
        from .polyring import FPoly

        return FPoly(PrimePower.make(self.char), self._mod_digits)

    # -- arithmetic --

    def _check(self, a):
        if a.ctx is not self:
            raise DomainError("elements from different field contexts")

    def add(self, a: FFElem, b: FFElem) -> FFElem:
        self._check(a), self._check(b)
        if self.char == 2:
            return FFElem(a.val ^ b.val, self)
        p = self.char
        return FFElem(tuple((x + y) % p for x, y in zip(a.val, b.val)), self)

    def neg(self, a: FFElem) -> FFElem:
        if self.char == 2:
            return a
        p = self.char
        return FFElem(tuple(-x % p for x in a.val), self)

    def mul(self, a: FFElem, b: FFElem) -> FFElem:
        self._check(a), self._check(b)
        if self._exp is not None:
            ca, cb = a.code, b.code
            if ca == 0 or cb == 0:
                return self.zero()
            return self.from_code(self._exp[self._log[ca] + self._log[cb]])
        if self.char == 2:
            r = 0
            x, y = a.val, b.val
            while x:
                r ^= y << ((x & -x).bit_length() - 1)
                x &= x - 1
            return FFElem(self._reduce2(r), self)
        prod = _pp_rem(_pp_mul(_pp_trim(a.val), _pp_trim(b.val), self.char),
                       self._mod_digits, self.char)
        return FFElem(prod + (0,) * (self.deg - len(prod)), self)

    def _reduce2(self, r):
        m, d = self._mod_int, self.deg
        while r.bit_length() > d:
            r ^= m << (r.bit_length() - 1 - d)
        return r

    def pow(self, a: FFElem, k: int) -> FFElem:
        if not a:
            if k == 0:
                return self.one()
            if k < 0:
                raise DomainError("0 has no negative powers")
            return self.zero()
        k %= self.group_order
        if k == 0:
            return self.one()
        if self._exp is not None:
            return self.from_code(self._exp[self._log[a.code] * k % self.group_order])
        r = self.one()
        while k:
            if k & 1:
                r = self.mul(r, a)
            a = self.mul(a, a)
            k >>= 1
        return r

    def inv(self, a: FFElem) -> FFElem:
        if not a:
            raise DomainError("no inverse of 0")
        return self.pow(a, self.group_order - 1)

    def frob_q(self, a: FFElem) -> FFElem:
        """Frobenius with respect to the base field: a -> a^q."""
        return self.pow(a, self.base.q)

    # -- base-field scalars inside the extension --

    def embed_scalar(self, c: int) -> FFElem:
        if not 0 <= c < self.base.q:
            raise DomainError(f"scalar code {c} outside F_{self.base.q}")
        if self.base.e == 1:
            return self.from_code(c)
        return self._embed_map[c]

    def scalar_code(self, a: FFElem):
        """Code of a in F_q if a lies in the embedded base field, else None."""
        if self.base.e == 1:
            return a.code if a.code < self.char else None
        return self._unembed_map.get(a.code)

    # -- construction internals --

    def _order_is_full(self, a):
        for ell in self.group_factors:
            if self.pow(a, self.group_order // ell).code == 1:
                return False
        return True

    def _find_primitive(self):
        for code in range(1, self.order):
            a = self.from_code(code)
            if self._order_is_full(a):
                return a
        raise InternalError("no primitive element found; field construction is broken")

    def _build_tables(self, prim):
        g = self.group_order
        exp = [0] * (2 * g)
        log = [0] * self.order
        x = self.one()
        for i in range(g):
            exp[i] = x.code
            exp[i + g] = x.code
            log[x.code] = i
            x = self.mul(x, prim)
        if x.code != 1:
            raise InternalError("primitive element order mismatch while building tables")
        self._exp = exp
        self._log = log

    def _build_embedding(self):
        # image of the canonical F_q generator: the smallest root (by code)
        # of the base modulus among the subfield generated by the right power
        q = self.base.q
        base_mod = _find_irreducible(self.char, self.base.e)
        w = self.pow(self.primitive_elt, self.group_order // (q - 1))
        roots = []
        cand = self.one()
        for _ in range(q - 1):
            acc = self.zero()
            for c in reversed(base_mod):
                acc = self.add(self.mul(acc, cand), self.embed_prime(c))
            if not acc:
                roots.append(cand)
            cand = self.mul(cand, w)
        if not roots:
            raise InternalError("base modulus has no root in the extension")
        root = min(roots, key=lambda e: e.code)
        emb = {}
        for c in range(q):
            digs = []
            v = c
            for _ in range(self.base.e):
                digs.append(v % self.char)
                v //= self.char
            acc = self.zero()
            for d in reversed(digs):
                acc = self.add(self.mul(acc, root), self.embed_prime(d))
            emb[c] = acc
        self._embed_map = emb
        self._unembed_map = {e.code: c for c, e in emb.items()}
        if len(self._unembed_map) != q:
            raise InternalError("scalar embedding is not injective")

    def embed_prime(self, c: int) -> FFElem:
        """Embed a prime-field scalar 0..p-1 (constant polynomial)."""
        return self.from_code(c % self.char)

    def __repr__(self):
        return f"FieldCtx(q={self.base.q}, m={self.ext_degree}, modulus_code={sum(b * self.char**i for i, b in enumerate(self._mod_digits))})"


@lru_cache(maxsize=None)
def field_ctx(p: int, e: int, m: int) -> FieldCtx:
    """The canonical context for F_{(p^e)^m}; cached and deterministic."""
    if m < 1 or e < 1:
        raise DomainError("extension degrees must be >= 1")
    return FieldCtx(PrimePower.make(p, e), m)


def splitting_ctx(q, n: int) -> FieldCtx:
    """Smallest canonical extension of F_q containing the n-th roots of unity."""
    base = q if isinstance(q, PrimePower) else PrimePower.from_int(q)
    if n == 1:
        return field_ctx(base.p, base.e, 1)
    if math.gcd(n, base.q) != 1:
        raise DomainError(f"gcd(n={n}, q={base.q}) != 1; no separable root of unity")
    return field_ctx(base.p, base.e, ord_mod(base.q, n))


def mult_order(a: FFElem) -> int:
    """Least t >= 1 with a^t = 1."""
    if not a:
        raise DomainError("0 has no multiplicative order")
    ctx = a.ctx
    t = ctx.group_order
    if t == 0:
        raise InternalError("trivial group")
    for ell in ctx.group_factors:
        while t % ell == 0 and ctx.pow(a, t // ell).code == 1:
            t //= ell
    return t


def nth_root_of_unity(ctx: FieldCtx, n: int) -> FFElem:
    """Canonical primitive n-th root of unity: primitive_elt^((q^m-1)/n)."""
    if n < 1:
        raise DomainError("n must be >= 1")
    if n == 1:
        return ctx.one()
    if ctx.group_order % n != 0:
        q = ctx.base.q
        if math.gcd(n, q) != 1:
            raise DomainError(f"no order-{n} root: gcd(n, q={q}) != 1")
        need = ord_mod(q, n)
        raise DomainError(
            f"no order-{n} root in F_{q}^{ctx.ext_degree}; smallest valid extension degree is m={need}"
        )
    z = ctx.pow(ctx.primitive_elt, ctx.group_order // n)
    return z
