"""The finite-field Fourier (Mattson-Solomon) transform and the support
inequality w(f) * w(f-hat) >= n that every nonzero word satisfies.

A length-n word f over F_q maps to the evaluation vector
(f(zeta), f(zeta^2), ..., f(zeta^n)) in the canonical splitting field;
position n holds f(1), which always lies in the base field.  Values are
indexed 1..n to keep that convention visible.
"""

from __future__ import annotations

import math
from dataclasses import dataclass

from .gf import DomainError, FFElem, FieldCtx, InternalError, PrimePower, nth_root_of_unity, splitting_ctx
_EXHAUSTIVE_CAP = 1 << 24


@dataclass(frozen=True)
class MSVector:
    """Evaluation vector; values[i-1] = f(zeta^i), i = 1..n."""

    n: int
    field: PrimePower
    ctx: FieldCtx
    values: tuple

    @property
    def weight(self) -> int:
        return sum(1 for v in self.values if v)

    def value(self, i: int) -> FFElem:
        if not 1 <= i <= self.n:
            raise DomainError(f"index {i} outside 1..{self.n}")
        return self.values[i - 1]

    def conjugacy_ok(self) -> bool:
        """Frobenius consistency: value(q*i) == value(i)^q, and value(n) in F_q."""
        q, n = self.field.q, self.n
        for i in range(1, n + 1):
            j = (q * i) % n or n
            if self.values[j - 1] != self.ctx.frob_q(self.values[i - 1]):
                return False
        return self.ctx.scalar_code(self.values[n - 1]) is not None

    def digit_rows(self) -> list:
        """Values as base-p coefficient vectors of the canonical modulus."""
        return [list(v.digits) for v in self.values]


def _as_field(q) -> PrimePower:
    return q if isinstance(q, PrimePower) else PrimePower.from_int(q)


def ms_forward(word, q, ctx: FieldCtx | None = None, zeta: FFElem | None = None) -> MSVector:
    """Evaluate the word's polynomial at zeta^1..zeta^n, Horner per point.

    zeta defaults to the canonical root; passing zeta^b for gcd(b, n) = 1
    permutes the values and is how weight invariance is exercised.
    """
    field = _as_field(q)
    word = tuple(word)
    n = len(word)
    if n == 0:
        raise DomainError("empty word")
    if math.gcd(n, field.q) != 1:
        raise DomainError(f"gcd(n={n}, q={field.q}) != 1")
    if ctx is None:
        ctx = splitting_ctx(field, n)
    if zeta is None:
        zeta = nth_root_of_unity(ctx, n)
    coeffs = [ctx.embed_scalar(c) for c in word]
    values = []
    point = ctx.one()
    for _ in range(n):
        point = ctx.mul(point, zeta)  # zeta^i for i = 1..n
        acc = ctx.zero()
        for c in reversed(coeffs):
            acc = ctx.add(ctx.mul(acc, point), c)
        values.append(acc)
    return MSVector(n, field, ctx, tuple(values))


def ms_inverse(msv: MSVector, zeta: FFElem | None = None) -> tuple:
    """Recover the word: f_j = n^{-1} * sum_i F_i zeta^{-ij}; the conjugacy
    invariant is checked first since it characterizes transforms of F_q words."""
    if not msv.conjugacy_ok():
        raise DomainError("conjugacy constraint violated: not the transform of a base-field word")
    ctx, n, field = msv.ctx, msv.n, msv.field
    if zeta is None:
        zeta = nth_root_of_unity(ctx, n)
    zinv = ctx.inv(zeta)
    n_inv = ctx.embed_prime(pow(n % ctx.char, ctx.char - 2, ctx.char))
    word = []
    for j in range(n):
        point = ctx.pow(zinv, j)
        # sum_i F_i point^i, Horner on coefficients F_n..F_1 then one factor
        acc = ctx.zero()
        for v in reversed(msv.values):
            acc = ctx.add(ctx.mul(acc, point), v)
        acc = ctx.mul(acc, point)  # promote index base from 0 to 1
        acc = ctx.mul(acc, n_inv)
        code = ctx.scalar_code(acc)
        if code is None:
            raise InternalError("inverse transform left the base field despite conjugacy")
        word.append(code)
    return tuple(word)


@dataclass(frozen=True)
class UPCheck:
    weight: int
    transform_weight: int
    product: int
    n: int
    holds: bool

    def json_dict(self):
        return {"n": self.n, "weight": self.weight, "transform_weight": self.transform_weight,
                "product": self.product, "holds": self.holds}


def naive_up_check(word, q, ctx: FieldCtx | None = None) -> UPCheck:
    """Both weights and whether their product reaches n (it always must)."""
    field = _as_field(q)
    word = tuple(word)
    w = sum(1 for c in word if c)
    if w == 0:
        raise DomainError("the inequality is stated for nonzero words")
    msv = ms_forward(word, field, ctx)
    wh = msv.weight
    return UPCheck(w, wh, w * wh, len(word), w * wh >= len(word))


def transform_weight(word, q, ctx: FieldCtx | None = None) -> int:
    """Weight of the transform without materializing it (same evaluations)."""
    return ms_forward(word, q, ctx).weight


@dataclass(frozen=True)
class UPScanReport:
    n: int
    q: int
    mode: str
    words_checked: int
    min_product: int
    argmin_word: str
    equality_count: int
    violations: int

    def json_dict(self):
        return {"n": self.n, "q": self.q, "mode": self.mode,
                "words_checked": self.words_checked, "min_product": self.min_product,
                "argmin_word": self.argmin_word, "equality_count": self.equality_count,
                "violations": self.violations}


def _word_string(word) -> str:
    from .polyring import _ALPHABET

    return "".join(_ALPHABET[c] for c in word)


def naive_up_scan(n: int, q, mode: str = "exhaustive", trials: int = 10000,
                  seed: int = 0) -> UPScanReport:
    """Sweep nonzero words and report the smallest weight product observed.

    Exhaustive mode covers all q^n - 1 words (capped); random mode samples.
    """
    field = _as_field(q)
    if math.gcd(n, field.q) != 1:
        raise DomainError(f"gcd(n={n}, q={field.q}) != 1")
    ctx = splitting_ctx(field, n)
    if mode == "exhaustive":
        if field.q**n > _EXHAUSTIVE_CAP:
            raise DomainError(f"q^n = {field.q**n} beyond exhaustive cap {_EXHAUSTIVE_CAP}")
        gen = _all_words(n, field.q)
        total = field.q**n - 1
    elif mode == "random":
        import random

        rng = random.Random(seed)
        gen = (_int_word(rng.randrange(1, field.q**n), n, field.q) for _ in range(trials))
        total = trials
    else:
        raise DomainError(f"unknown mode {mode!r}")

    if field.q == 2:
        weights = _binary_transform_weights(n, ctx)

    best = None
    best_word = None
    equality = 0
    violations = 0
    checked = 0
    for word in gen:
        checked += 1
        w = sum(1 for c in word if c)
        if field.q == 2:
            mask = sum(1 << i for i, c in enumerate(word) if c)
            wh = weights(mask)
        else:
            wh = transform_weight(word, field, ctx)
        prod = w * wh
        if prod < n:
            violations += 1
        if prod == n:
            equality += 1
        if best is None or prod < best:
            best = prod
            best_word = word
    return UPScanReport(n, field.q, mode, checked, best, _word_string(best_word),
                        equality, violations)


def _all_words(n, q):
    for v in range(1, q**n):
        yield _int_word(v, n, q)


def _int_word(v, n, q):
    out = []
    for _ in range(n):
        out.append(v % q)
        v //= q
    return tuple(out)


def _binary_transform_weights(n, ctx):
    """Closure computing w(f-hat) from a support bitmask; addition in
    characteristic 2 is XOR of element codes, so each evaluation folds a
    precomputed power table over the support."""
    zeta = nth_root_of_unity(ctx, n)
    pows = []
    for i in range(1, n + 1):
        zi = ctx.pow(zeta, i)
        row = []
        acc = ctx.one()
        for _ in range(n):
            row.append(acc.code)
            acc = ctx.mul(acc, zi)
        pows.append(row)

    def weight(mask):
        wh = 0
        support = []
        m = mask
        while m:
            support.append((m & -m).bit_length() - 1)
            m &= m - 1
        for row in pows:
            acc = 0
            for j in support:
                acc ^= row[j]
            if acc:
                wh += 1
        return wh

    return weight
