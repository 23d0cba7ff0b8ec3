"""Cyclic codes of length n over F_q: the ideals of F_q[x]/(x^n - 1).

Provides enumeration of every code of a given length, the BCH and
Hartmann-Tzeng designed-distance bounds, exact minimum distance (packed
Gray-code enumeration, with a multi-information-set deepening fallback for
dimensions beyond the budget), and the invariant

    mu(q, n) = min over nonzero codes of (minimum distance + dimension).
"""

from __future__ import annotations

import itertools
import math
from concurrent.futures import ProcessPoolExecutor
from dataclasses import dataclass

import numpy as np

from .gf import DomainError, InternalError, PrimePower
from .polyring import FPoly, cyclotomic_cosets, factor_xn_minus_1, xn_minus_1

DEFAULT_BUDGET = 1 << 28
_ENUM_CAP_T = 30  # refuse enumerating 2^t divisor lattices beyond this


@dataclass(frozen=True)
class CyclicCode:
    """A nonzero ideal of F_q[x]/(x^n - 1), held by its monic generator."""

    field: PrimePower
    n: int
    gen: FPoly
    zeros: tuple  # exponents i with gen(zeta^i) = 0, a union of cosets
    dim: int

    @property
    def q(self) -> int:
        return self.field.q

    def gen_string(self) -> str:
        return self.gen.to_string()

    @classmethod
    def from_gen(cls, n: int, q, gen) -> "CyclicCode":
        field = q if isinstance(q, PrimePower) else PrimePower.from_int(q)
        if isinstance(gen, str):
            gen = FPoly.from_string(field, gen)
        gen = gen.monic()
        if gen.degree >= n:
            raise DomainError("generator must be a proper divisor of x^n - 1")
        if not (xn_minus_1(field, n) % gen).is_zero():
            raise DomainError("generator does not divide x^n - 1")
        part = cyclotomic_cosets(n, field.q)
        factors = factor_xn_minus_1(n, field)
        zeros = []
        for coset, f in zip(part.cosets, factors):
            if (gen % f).is_zero():
                zeros.extend(coset)
        if len(zeros) != gen.degree:
            raise InternalError("zero count disagrees with generator degree")
        return cls(field, n, gen, tuple(sorted(zeros)), n - gen.degree)

    def __repr__(self):
        return f"CyclicCode([{self.n},{self.dim}] over F_{self.q}, gen={self.gen_string()!r})"


@dataclass(frozen=True)
class DistanceResult:
    """Exact distance (lower == upper) or a bracket, plus how it was obtained."""

    lower: int
    upper: int
    exact: bool
    method: str  # exhaustive | bz | bch_only
    work: int

    @property
    def d(self) -> int:
        if not self.exact:
            raise DomainError("distance is only a bracket; no exact value")
        return self.lower

    def json_dict(self, code: CyclicCode) -> dict:
        return {
            "q": code.q,
            "n": code.n,
            "gen": code.gen_string(),
            "dim": code.dim,
            "d_lower": self.lower,
            "d_upper": self.upper,
            "exact": self.exact,
            "method": self.method,
            "work": self.work,
        }


@dataclass(frozen=True)
class MuRecord:
    """min(distance + dimension) over all nonzero cyclic codes of length n."""

    q: int
    n: int
    mu_lower: int
    mu_upper: int
    exact: bool
    witness: CyclicCode
    per_divisor: tuple  # ((CyclicCode, DistanceResult), ...) in enumeration order

    @property
    def mu(self) -> int:
        if not self.exact:
            raise DomainError("mu is only a bracket under this budget")
        return self.mu_lower

    def json_dict(self, include_divisors: bool = False) -> dict:
        out = {
            "q": self.q,
            "n": self.n,
            "mu": self.mu_lower if self.exact else None,
            "mu_lower": self.mu_lower,
            "mu_upper": self.mu_upper,
            "exact": self.exact,
            "witness": self.witness.gen_string(),
            "witness_dim": self.witness.dim,
        }
        if include_divisors:
            out["per_divisor"] = [r.json_dict(c) for c, r in self.per_divisor]
        return out


# ---------------------------------------------------------------------------
# enumeration


def enumerate_codes(n: int, q) -> list:
    """All 2^t - 1 nonzero cyclic codes of length n, ascending generator degree.

    t is the number of irreducible factors of x^n - 1; the full product (the
    zero code) is excluded, the trivial generator 1 (the whole space) is kept.
    """
    field = q if isinstance(q, PrimePower) else PrimePower.from_int(q)
    part = cyclotomic_cosets(n, field.q)
    t = len(part.cosets)
    if t > _ENUM_CAP_T:
        raise DomainError(f"{t} irreducible factors: 2^{t} divisors is not enumerable")
    factors = factor_xn_minus_1(n, field)
    codes = []
    for mask in range((1 << t) - 1):  # all proper subsets
        gen = FPoly.one(field)
        zeros = []
        for i in range(t):
            if mask >> i & 1:
                gen = gen * factors[i]
                zeros.extend(part.cosets[i])
        codes.append(CyclicCode(field, n, gen, tuple(sorted(zeros)), n - gen.degree))
    codes.sort(key=lambda c: (c.gen.degree, c.gen_string()))
    return codes


# ---------------------------------------------------------------------------
# designed-distance bounds


def bch_bound(zeros, n: int) -> int:
    """Largest delta with delta-1 zeros in arithmetic progression, any stride
    coprime to n.  Empty zero sets give 1."""
    zs = set(zeros)
    if not zs:
        return 1
    if len(zs) >= n:
        return n + 1
    member = [i in zs for i in range(n)]
    best = 1
    for b in range(1, n):
        if math.gcd(b, n) != 1:
            continue
        run = 0
        longest = 0
        # the stride-b cycle covers Z/n once; scan it twice for wraparound
        pos = 0
        for _ in range(2 * n):
            if member[pos]:
                run += 1
                if run > longest:
                    longest = run
            else:
                run = 0
            pos = (pos + b) % n
        best = max(best, min(longest, n - 1) + 1)
    return best


def _runs_plus1(member, n):
    """Length of the consecutive-member run starting at each residue (step +1)."""
    runs = [0] * n
    try:
        gap = member.index(False)
    except ValueError:
        return [n] * n
    for off in range(1, n + 1):
        a = (gap - off) % n
        runs[a] = 1 + runs[(a + 1) % n] if member[a] else 0
    return runs


def ht_bound(zeros, n: int) -> int:
    """Hartmann-Tzeng style bound: the best delta+s over zero patterns
    {a + k*b + r*c : k < delta-1, r <= s} with b, c coprime to n.

    Equivalent search: over direction pairs, the largest (width + height) of
    a fully-contained grid; width along b, height along c.  At least the BCH
    value (s = 0).
    """
    zs = set(zeros)
    if not zs:
        return 1
    if len(zs) >= n:
        return n + 1
    units = [b for b in range(1, n) if math.gcd(b, n) == 1]
    best = 2  # a single zero is the (delta=2, s=0) pattern
    for b in units:
        binv = pow(b, -1, n)
        member = [False] * n
        for z in zs:
            member[z * binv % n] = True
        runs = _runs_plus1(member, n)
        for u in units:
            # sequence of run lengths along the u-cycle; zeros split segments
            seq = [runs[(j * u) % n] for j in range(n)]
            if 0 in seq:
                start = seq.index(0)
                seq = seq[start:] + seq[:start]
            else:
                seq = seq + seq  # full cycle; allow windows up to n
            best = max(best, _best_window(seq, n))
    return min(best, n)


def _best_window(seq, n):
    """Max over contiguous positive windows of (min(window) + len(window)), len capped."""
    best = 0
    stack = []  # (value, extent_start)
    for i, v in enumerate(seq + [0]):
        start = i
        while stack and stack[-1][0] >= v:
            val, s = stack.pop()
            length = min(i - s, n)
            cand = min(val, n) + length
            if cand > best:
                best = cand
            start = s
        if v:
            stack.append((v, start))
    return best


# ---------------------------------------------------------------------------
# generator matrices


def _shift_mask(g_int, shift, n):
    mask = (1 << n) - 1
    return ((g_int << shift) | (g_int >> (n - shift))) & mask if shift else g_int & mask


def _systematic_rows_q2(code: CyclicCode, offset: int = 0):
    """Row basis (bitmask ints) in systematic form on columns offset..offset+k-1."""
    n, k = code.n, code.dim
    g_int = 0
    for i, c in enumerate(code.gen.coeffs):
        g_int |= c << i
    rows = [_shift_mask(g_int, (offset + i) % n, n) for i in range(k)]
    for j in range(k):
        col = (offset + j) % n
        piv = next((r for r in range(j, k) if rows[r] >> col & 1), None)
        if piv is None:
            raise InternalError("window is not an information set")
        rows[j], rows[piv] = rows[piv], rows[j]
        for r in range(k):
            if r != j and rows[r] >> col & 1:
                rows[r] ^= rows[j]
    return rows


def _systematic_rows_qp(code: CyclicCode, offset: int = 0):
    """Same as above for prime q > 2, as a numpy int16 matrix."""
    n, k, p = code.n, code.dim, code.field.p
    base = np.zeros(n, np.int16)
    base[: len(code.gen.coeffs)] = code.gen.coeffs
    rows = np.stack([np.roll(base, (offset + i) % n) for i in range(k)])
    for j in range(k):
        col = (offset + j) % n
        piv = next((r for r in range(j, k) if rows[r, col]), None)
        if piv is None:
            raise InternalError("window is not an information set")
        rows[[j, piv]] = rows[[piv, j]]
        rows[j] = rows[j] * pow(int(rows[j, col]), p - 2, p) % p
        for r in range(k):
            if r != j and rows[r, col]:
                rows[r] = (rows[r] - rows[r, col] * rows[j]) % p
    return rows


# ---------------------------------------------------------------------------
# exhaustive kernels


def _gray_low_tables(rows, n, klo):
    """Per-64-bit-slot cumulative-XOR tables of the low 2^klo Gray codewords."""
    nslots = (n + 63) // 64
    tables = []
    for s in range(nslots):
        f = np.zeros(1 << klo, np.uint64)
        for b in range(klo):
            f[(1 << b):: (1 << (b + 1))] = (rows[b] >> (64 * s)) & 0xFFFFFFFFFFFFFFFF
        tables.append(np.bitwise_xor.accumulate(f))
    return tables


def _block_min_weight(tables, hi_cw, skip_first):
    acc = None
    for s, tab in enumerate(tables):
        part = tab if hi_cw == 0 else tab ^ np.uint64((hi_cw >> (64 * s)) & 0xFFFFFFFFFFFFFFFF)
        cnt = np.bitwise_count(part)
        acc = cnt if acc is None else acc + cnt
    if skip_first:
        acc = acc[1:]
    return int(acc.min())


def _min_weight_q2_range(rows, n, klo, h_lo, h_hi, stop_at, include_low_block):
    """Scan hi-part Gray steps in [h_lo, h_hi); returns (best, messages_done)."""
    tables = _gray_low_tables(rows, n, klo)
    block = 1 << klo
    best = n + 1
    work = 0
    if include_low_block:
        best = _block_min_weight(tables, 0, True)
        work += block - 1
        if best <= stop_at:
            return best, work
    g = (h_lo - 1) ^ ((h_lo - 1) >> 1) if h_lo > 0 else 0
    hi_cw = 0
    b = g
    while b:
        i = (b & -b).bit_length() - 1
        hi_cw ^= rows[klo + i]
        b &= b - 1
    for h in range(max(h_lo, 1), h_hi):
        hi_cw ^= rows[klo + ((h & -h).bit_length() - 1)]
        w = _block_min_weight(tables, hi_cw, False)
        work += block
        if w < best:
            best = w
            if best <= stop_at:
                break
    return best, work


def _min_weight_q2(rows, n, stop_at, workers=1):
    k = len(rows)
    klo = min(k, 16)
    khi = k - klo
    if workers <= 1 or khi == 0:
        return _min_weight_q2_range(rows, n, klo, 0, 1 << khi, stop_at, True)
    # split the hi Gray walk; merging min is associative, so chunk results agree
    # with the single-worker value (early exit is disabled inside workers)
    nchunk = min(workers, 1 << khi)
    bounds = [1 + (((1 << khi) - 1) * i) // nchunk for i in range(nchunk + 1)]
    args = [(rows, n, klo, bounds[i], bounds[i + 1], 0, i == 0) for i in range(nchunk)]
    best, work = n + 1, 0
    with ProcessPoolExecutor(max_workers=workers) as pool:
        for b, w in pool.map(_q2_worker, args):
            best = min(best, b)
            work += w
    return best, work


def _q2_worker(args):
    return _min_weight_q2_range(*args)


def _min_weight_qp(rows, q, stop_at, budget):
    """Exhaustive minimum weight over prime fields q > 2, blocked low tables.

    A position of the shifted block vanishes iff the low-table entry equals
    the negation of the high-part codeword there, so weights come from one
    equality comparison instead of an add-and-reduce pass.
    """
    k, n = rows.shape
    klo = 1
    while q ** (klo + 1) <= (1 << 16) and klo < k:
        klo += 1
    nlo = q**klo
    idx = np.arange(nlo)
    mlo = np.stack([(idx // q**j) % q for j in range(klo)], axis=1).astype(np.int16)
    lowtab = ((mlo @ rows[:klo]) % q).astype(np.int8)
    best = n + 1
    work = 0
    for hi in range(q ** (k - klo)):
        if hi == 0:
            zmax = int((lowtab[1:] == 0).sum(axis=1, dtype=np.int16).max())
            work += nlo - 1
        else:
            digits = []
            v = hi
            for _ in range(k - klo):
                digits.append(v % q)
                v //= q
            hi_cw = (np.asarray(digits, np.int16) @ rows[klo:]) % q
            neg = ((q - hi_cw) % q).astype(np.int8)
            zmax = int((lowtab == neg).sum(axis=1, dtype=np.int16).max())
            work += nlo
        w = n - zmax
        if w < best:
            best = w
            if best <= stop_at:
                break
        if work > budget:
            raise InternalError("q-ary kernel exceeded its prechecked budget")
    return best, work


def _min_weight_generic(code: CyclicCode, stop_at):
    """Plain enumeration for prime-power base fields; only for small q^k."""
    field, n, k = code.field, code.n, code.dim
    gen = code.gen.padded(n)
    rows = []
    for i in range(k):
        row = [0] * n
        for j, c in enumerate(gen):
            row[(i + j) % n] = c
        rows.append(row)
    best = n + 1
    work = 0
    msg = [0] * k
    for _ in range(field.q**k - 1):
        # odometer increment
        i = 0
        while msg[i] == field.q - 1:
            msg[i] = 0
            i += 1
        msg[i] += 1
        cw = [0] * n
        for r, m in zip(rows, msg):
            if m:
                for j in range(n):
                    if r[j]:
                        cw[j] = field.sadd(cw[j], field.smul(m, r[j]))
        w = sum(1 for c in cw if c)
        work += 1
        if w < best:
            best = w
            if best <= stop_at:
                break
    return best, work


# ---------------------------------------------------------------------------
# information-set deepening (dimension beyond the exhaustive budget)


def _basis_rows_q2(code: CyclicCode, cols):
    """Basis as bitmask ints with pivots chosen greedily along cols; returns
    (rows, pivot columns in priority order)."""
    n, k = code.n, code.dim
    g_int = 0
    for i, c in enumerate(code.gen.coeffs):
        g_int |= c << i
    rows = [_shift_mask(g_int, i, n) for i in range(k)]
    pivots = []
    for col in cols:
        r = len(pivots)
        piv = next((i for i in range(r, k) if rows[i] >> col & 1), None)
        if piv is None:
            continue
        rows[r], rows[piv] = rows[piv], rows[r]
        for i in range(k):
            if i != r and rows[i] >> col & 1:
                rows[i] ^= rows[r]
        pivots.append(col)
        if len(pivots) == k:
            break
    if len(pivots) < k:
        raise InternalError("generator rows lost rank during reduction")
    return rows, pivots


def _basis_rows_qp(code: CyclicCode, cols):
    n, k, p = code.n, code.dim, code.field.p
    base = np.zeros(n, np.int16)
    base[: len(code.gen.coeffs)] = code.gen.coeffs
    rows = np.stack([np.roll(base, i) for i in range(k)])
    pivots = []
    for col in cols:
        r = len(pivots)
        piv = next((i for i in range(r, k) if rows[i, col]), None)
        if piv is None:
            continue
        rows[[r, piv]] = rows[[piv, r]]
        rows[r] = rows[r] * pow(int(rows[r, col]), p - 2, p) % p
        for i in range(k):
            if i != r and rows[i, col]:
                rows[i] = (rows[i] - rows[i, col] * rows[r]) % p
        pivots.append(col)
        if len(pivots) == k:
            break
    if len(pivots) < k:
        raise InternalError("generator rows lost rank during reduction")
    return rows, pivots


def _scan_weight_w_q2(rows, w, upper):
    """Min codeword weight over messages of weight exactly w (binary rows)."""
    k = len(rows)
    best = upper

    def rec(start, depth, acc):
        nonlocal best
        if depth == w:
            wt = acc.bit_count()
            if wt < best:
                best = wt
            return
        for i in range(start, k - (w - depth) + 1):
            rec(i + 1, depth + 1, acc ^ rows[i])

    rec(0, 0, 0)
    return best


def _bz_distance(code: CyclicCode, bch_lower: int, budget: int,
                 target: int | None = None) -> DistanceResult:
    """Deepen over disjoint column windows, each with its own basis pivoted
    inside the window.  After all messages of weight <= w are covered in a
    basis with r of its k pivots inside a window, an unseen codeword weighs
    at least w+1 - (k-r) there; the windows are disjoint, so the bounds add.
    For a cyclic code every window of <= k consecutive columns has full rank,
    so the leftover n mod k columns still contribute.

    A target stops the deepening once the certified lower bound reaches it
    (the caller has established the code cannot matter past that point)."""
    n, k, q = code.n, code.dim, code.q
    binary = q == 2
    windows = [(i * k, k) for i in range(n // k)]
    if n % k:
        windows.append(((n // k) * k, n % k))
    bases = []
    ranks = []
    for off, width in windows:
        cols = [(off + j) % n for j in range(width)]
        cols += [(off + width + j) % n for j in range(n - width)]
        rows, pivots = (_basis_rows_q2(code, cols) if binary
                        else _basis_rows_qp(code, cols))
        bases.append(rows)
        ranks.append(sum(1 for c in pivots if c in set(cols[:width])))
    if binary:
        upper = min(min(r.bit_count() for r in rows) for rows in bases)
    else:
        upper = min(int(np.count_nonzero(rows, axis=1).min()) for rows in bases)
    work = len(bases) * k * (q - 1)
    scalars = list(range(1, q))
    w = 1  # rounds of message weight <= w are complete in every basis
    while True:
        lower = max(bch_lower, sum(max(0, (w + 1) - (k - r)) for r in ranks))
        lower = min(lower, upper)
        if lower >= upper or w >= k:
            return DistanceResult(upper, upper, True, "bz", work)
        if target is not None and lower >= target:
            return DistanceResult(lower, upper, False, "bz", work)
        wn = w + 1
        round_cost = math.comb(k, wn) * (q - 1) ** wn * len(bases)
        if work + round_cost > budget:
            return DistanceResult(lower, upper, lower == upper, "bz", work)
        for rows in bases:
            if binary:
                upper = _scan_weight_w_q2(rows, wn, upper)
                work += math.comb(k, wn)
            else:
                for combo in itertools.combinations(range(k), wn):
                    for coefs in itertools.product(scalars, repeat=wn):
                        cw = np.zeros(n, np.int16)
                        for i, c in zip(combo, coefs):
                            cw = (cw + c * rows[i]) % code.field.p
                        wgt = int(np.count_nonzero(cw))
                        work += 1
                        if wgt < upper:
                            upper = wgt
        w = wn


# ---------------------------------------------------------------------------
# public distance + invariant


def min_distance(code: CyclicCode, budget: int = DEFAULT_BUDGET, workers: int = 1,
                 lower_target: int | None = None) -> DistanceResult:
    """Exact minimum distance when q^dim fits the budget, else the deepening
    tier, which returns exact if its bracket closes and a bracket otherwise.
    lower_target lets a caller accept any certified bound reaching it."""
    k, n, q = code.dim, code.n, code.q
    lower = bch_bound(code.zeros, n)
    if k == 0:
        raise DomainError("zero code has no distance")
    if q**k <= budget:
        if q == 2:
            rows = _systematic_rows_q2(code)
            best, work = _min_weight_q2(rows, n, lower, workers)
        elif code.field.e == 1:
            rows = _systematic_rows_qp(code)
            best, work = _min_weight_qp(rows, q, lower, budget)
        else:
            best, work = _min_weight_generic(code, lower)
        if best < lower:
            raise InternalError(f"designed-distance bound {lower} exceeds true distance {best}")
        return DistanceResult(best, best, True, "exhaustive", work)
    if code.field.e > 1:
        # the deepening tier reduces mod p, which is wrong off prime fields
        return DistanceResult(lower, n, False, "bch_only", 0)
    return _bz_distance(code, lower, budget, lower_target)


def mu(n: int, q, budget: int = DEFAULT_BUDGET, workers: int = 1, cache=None) -> MuRecord:
    """min(d + dim) over all nonzero cyclic codes of length n over F_q.

    Divisors are processed smallest dimension first with a best-so-far bound
    B; a code whose dim + bch bound already reaches B is recorded with its
    bch bracket and skipped, which cannot change the minimum.  The result
    equals the unpruned computation; it degrades to a bracket only if some
    needed distance came back inexact under the budget.
    """
    field = q if isinstance(q, PrimePower) else PrimePower.from_int(q)
    codes = enumerate_codes(n, field)
    order = sorted(range(len(codes)), key=lambda i: (codes[i].dim, codes[i].gen_string()))
    results = [None] * len(codes)
    best = None  # (sum, position in processing order)
    inexact = []
    for pos, i in enumerate(order):
        code = codes[i]
        key = (code.q, code.n, code.gen_string())
        cached = cache.get(key) if cache is not None else None
        if cached is not None and cached.exact:
            res = DistanceResult(cached.lower, cached.upper, True, cached.method, 0)
        else:
            b = bch_bound(code.zeros, n)
            if best is not None and code.dim + b >= best[0]:
                results[i] = DistanceResult(b, n, False, "bch_only", 0)
                continue
            # past the running minimum a certified bound is as good as exact
            target = best[0] - code.dim if best is not None else None
            res = min_distance(code, budget, workers, lower_target=target)
        results[i] = res
        if res.exact:
            s = code.dim + res.lower
            if best is None or s < best[0]:
                best = (s, pos, i)
        else:
            inexact.append((code.dim + res.lower, i))
    if best is None:
        raise InternalError("no exact distance among divisors; budget too small to start")
    mu_upper = best[0]
    mu_lower = min([mu_upper] + [s for s, _ in inexact])
    exact = mu_lower == mu_upper
    witness = codes[best[2]]
    return MuRecord(field.q, n, mu_lower, mu_upper, exact, witness,
                    tuple((codes[i], results[i]) for i in range(len(codes))))


@dataclass(frozen=True)
class StrongUPReport:
    """Instance check of the distance+dimension collapse at prime length."""

    p: int
    q: int
    branch: str  # primitive | bounded | unconditioned
    record: MuRecord
    witness: CyclicCode | None

    def json_dict(self):
        out = {"p": self.p, "q": self.q, "branch": self.branch,
               "mu": self.record.mu_lower if self.record.exact else None}
        if self.witness is not None:
            out["witness"] = self.witness.gen_string()
            out["witness_dim"] = self.witness.dim
        return out


def strong_up_witness(p: int, q: int, budget: int = DEFAULT_BUDGET, workers: int = 1) -> StrongUPReport:
    """At prime length p: if q generates (Z/p)* the invariant must equal p+1
    (only the three trivial codes exist); otherwise, for p > 2q-2, some
    divisor must have d + dim <= p and is returned as a witness."""
    from .gf import is_prime, is_primitive

    if not is_prime(p):
        raise DomainError(f"{p} is not prime")
    if math.gcd(p, q) != 1:
        raise DomainError("q must be invertible modulo p")
    rec = mu(p, q, budget, workers)
    if is_primitive(q, p):
        if not rec.exact or rec.mu != p + 1:
            raise InternalError(
                f"primitive case must give mu = p+1 = {p + 1}, got {rec.mu_lower}..{rec.mu_upper}"
            )
        return StrongUPReport(p, q, "primitive", rec, None)
    if p > 2 * q - 2:
        if rec.exact and rec.mu > p:
            raise InternalError(
                f"non-primitive q with p > 2q-2 must give mu <= p, got {rec.mu}"
            )
        return StrongUPReport(p, q, "bounded", rec, rec.witness)
    return StrongUPReport(p, q, "unconditioned", rec, rec.witness if rec.mu_upper <= p else None)
