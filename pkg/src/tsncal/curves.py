"""Exact min-plus algebra over pseudo-periodic piecewise-affine curves.

Curves map t >= 0 (seconds) to bits.  A curve is a finite sequence of
breakpoints covering [0, T+d) plus a tail rule f(t+d) = f(t) + c for
t >= T.  All breakpoint times, values and slopes are `fractions.Fraction`,
so every operator below (convolution, deconvolution, horizontal deviation,
closure, min/max/sum) is computed exactly by breakpoint enumeration, never
by sampling.

Each breakpoint carries two values: the point value f(t_i) and the right
limit of f just after t_i.  This distinguishes, say, a token-bucket curve
(0 at the origin, burst b immediately after) from a shaper output curve
that genuinely stores b at 0, and lets staircases encode their step
convention explicitly.  Curves may take the value +inf (float("inf")
sentinel); the only finite/infinite boundary instant belongs to the finite
side, which is what the bounded-delay curve needs.
"""

from __future__ import annotations

import bisect
from dataclasses import dataclass
from fractions import Fraction
from math import ceil, floor, inf, isinf
from typing import Iterable, Sequence, Union

Rat = Fraction
Num = Union[Fraction, float]  # float only ever holds +inf

INF = inf


class CurveError(ValueError):
    """Malformed curve or invalid operand."""


class UnstableSystemError(CurveError):
    """Arrival outpaces service: the requested bound diverges."""


def as_rat(x, what: str = "value") -> Fraction:
    """Coerce ints, Fractions and numeric strings; floats are rejected
    because they would silently break exactness."""
    if isinstance(x, Fraction):
        return x
    if isinstance(x, int):
        return Fraction(x)
    if isinstance(x, str):
        return Fraction(x)
    raise CurveError(f"{what} must be int/Fraction/str, got {type(x).__name__}: {x!r}")


def _lcm(a: Fraction, b: Fraction) -> Fraction:
    # lcm of positive rationals: lcm(num)/gcd(den)
    from math import gcd, lcm

    return Fraction(lcm(a.numerator * b.denominator, b.numerator * a.denominator),
                    a.denominator * b.denominator)


@dataclass(frozen=True)
class Breakpoint:
    """One knot: f(start) = value, then f = right_value + slope*(t-start)
    on the open interval up to the next knot."""

    start: Fraction
    value: Num
    right_value: Num
    slope: Fraction


@dataclass(frozen=True)
class StaircaseSpec:
    """Periodic step function: height `jump` bits every `period` seconds,
    first step anchored at `offset`."""

    jump: Fraction
    offset: Fraction
    period: Fraction

    def __post_init__(self):
        if self.jump < 0:
            raise CurveError("staircase jump must be >= 0")
        if self.period <= 0:
            raise CurveError("staircase period must be > 0")


class Curve:
    """Immutable pseudo-periodic piecewise-affine function on t >= 0."""

    __slots__ = ("bps", "period_start", "period", "increment")

    def __init__(self, bps: Sequence[Breakpoint], period_start, period, increment,
                 *, monotone: bool = True):
        bps = tuple(bps)
        T = as_rat(period_start, "period_start")
        d = as_rat(period, "period")
        c = increment if (isinstance(increment, float) and isinf(increment)) \
            else as_rat(increment, "increment")
        if not bps:
            raise CurveError("curve needs at least one breakpoint")
        if bps[0].start != 0:
            raise CurveError("first breakpoint must start at t=0")
        if d <= 0:
            raise CurveError("period must be > 0")
        if T < 0:
            raise CurveError("period_start must be >= 0")
        if bps[-1].start >= T + d:
            raise CurveError("breakpoints must all lie in [0, period_start + period)")
        prev = None
        for bp in bps:
            if prev is not None and bp.start <= prev.start:
                raise CurveError("breakpoint starts must be strictly increasing")
            if _is_inf(bp.value) and not _is_inf(bp.right_value):
                raise CurveError("infinite point value needs infinite right value")
            if _is_inf(bp.right_value) and bp.slope != 0:
                raise CurveError("infinite segment must have zero slope")
            prev = bp
        object.__setattr__  # keep pylint quiet about slots; plain assigns below
        self.bps = bps
        self.period_start = T
        self.period = d
        self.increment = c
        if monotone:
            self._check_monotone()

    # -- construction helpers ------------------------------------------------

    def __setattr__(self, name, value):
        if name in self.__slots__ and hasattr(self, "bps") and name != "bps":
            raise AttributeError("Curve is immutable")
        object.__setattr__(self, name, value)

    def _check_monotone(self):
        if not _is_inf(self.bps[0].value) and self.bps[0].value < 0:
            raise CurveError("curve must be non-negative")
        prev_end = None
        for bp in self.bps:
            if prev_end is not None and _lt(bp.value, prev_end):
                raise CurveError(f"curve decreasing at t={bp.start}")
            if _lt(bp.right_value, bp.value):
                raise CurveError(f"right limit below point value at t={bp.start}")
            if bp.slope < 0 and not _is_inf(bp.right_value):
                raise CurveError(f"negative slope at t={bp.start}")
            prev_end = bp
            prev_end = None  # recomputed below
            prev_end = _seg_end_limit(bp, self._next_start(bp))
        # wrap: the limit approaching T+d must not exceed f(T) + c
        wrap_limit = _seg_end_limit(self.bps[-1], self.period_start + self.period)
        base = self.evaluate(self.period_start)
        if not _is_inf(wrap_limit) and _lt(_add(base, self.increment), wrap_limit):
            raise CurveError("tail increment inconsistent with segment growth")

    def _next_start(self, bp: Breakpoint) -> Fraction:
        i = self._index_of(bp.start)
        if i + 1 < len(self.bps):
            return self.bps[i + 1].start
        return self.period_start + self.period

    def _index_of(self, t: Fraction) -> int:
        i = bisect.bisect_right(self._starts(), t) - 1
        return i

    def _starts(self):
        return [bp.start for bp in self.bps]

    # -- evaluation ----------------------------------------------------------

    def _reduce(self, t: Fraction):
        """Map t into [0, T+d) and return (t', tail offset k*c)."""
        T, d = self.period_start, self.period
        if t < T + d:
            return t, Fraction(0)
        k = (t - T) // d
        t2 = t - k * d
        if t2 >= T + d:  # exact boundary arithmetic guard
            k += 1
            t2 -= d
        off = INF if _is_inf(self.increment) else self.increment * k
        return t2, off

    def evaluate(self, t) -> Num:
        """Exact f(t).  Errors on negative t."""
        t = as_rat(t, "t")
        if t < 0:
            raise CurveError("curve evaluated at negative time")
        t2, off = self._reduce(t)
        i = self._index_of(t2)
        bp = self.bps[i]
        if t2 == bp.start:
            v = bp.value
        else:
            v = _add(bp.right_value, bp.slope * (t2 - bp.start)) \
                if not _is_inf(bp.right_value) else INF
        return _add(v, off)

    def right_limit(self, t) -> Num:
        """lim f(u) as u -> t from above."""
        t = as_rat(t, "t")
        if t < 0:
            raise CurveError("negative time")
        t2, off = self._reduce(t)
        i = self._index_of(t2)
        bp = self.bps[i]
        if _is_inf(bp.right_value):
            return INF
        return _add(bp.right_value + bp.slope * (t2 - bp.start), off)

    def left_limit(self, t) -> Num:
        """lim f(u) as u -> t from below (t > 0)."""
        t = as_rat(t, "t")
        if t <= 0:
            raise CurveError("left limit needs t > 0")
        t2, off = self._reduce(t)
        if t2 == 0:  # t == multiple boundary; step one period down
            t2 += self.period
            off = _sub_inc(off, self.increment)
        i = self._index_of(t2)
        bp = self.bps[i]
        if t2 == bp.start:
            if i > 0:
                prev = self.bps[i - 1]
            else:
                # t2 == 0 handled above, so i > 0 always here
                raise AssertionError("unreachable")
            if _is_inf(prev.right_value):
                return INF
            return _add(prev.right_value + prev.slope * (t2 - prev.start), off)
        if _is_inf(bp.right_value):
            return INF
        return _add(bp.right_value + bp.slope * (t2 - bp.start), off)

    # -- structural queries ----------------------------------------------------

    def long_term_rate(self) -> Num:
        """Asymptotic growth rate c/d; +inf if the curve reaches +inf."""
        if any(_is_inf(bp.right_value) for bp in self.bps) or _is_inf(self.increment):
            return INF
        return self.increment / self.period

    def is_finite(self) -> bool:
        return not any(_is_inf(bp.right_value) or _is_inf(bp.value) for bp in self.bps)

    def breakpoints_until(self, hi: Fraction) -> list[Breakpoint]:
        """Materialized breakpoints with starts in [0, hi)."""
        hi = as_rat(hi, "hi")
        out = []
        T, d, c = self.period_start, self.period, self.increment
        for bp in self.bps:
            if bp.start >= hi:
                break
            out.append(bp)
        k = 1
        while T + k * d < hi:
            off = INF if _is_inf(c) else c * k
            shift = k * d
            for bp in self.bps:
                if bp.start < T:
                    continue
                s = bp.start + shift
                if s >= hi:
                    break
                out.append(Breakpoint(s, _add(bp.value, off),
                                      _add(bp.right_value, off), bp.slope))
            k += 1
        return out

    def elements_until(self, hi: Fraction):
        """Decompose [0, hi) into point and open-segment elements."""
        bps = self.breakpoints_until(hi)
        els = []
        for i, bp in enumerate(bps):
            end = bps[i + 1].start if i + 1 < len(bps) else hi
            els.append(_Pt(bp.start, bp.value))
            if end > bp.start:
                els.append(_Seg(bp.start, end, bp.right_value, bp.slope))
        return els

    # -- simple transforms -----------------------------------------------------

    def map_values(self, f_point, f_slope, *, monotone=True) -> "Curve":
        bps = [Breakpoint(bp.start, f_point(bp.value, bp.start),
                          f_point(bp.right_value, bp.start), f_slope(bp.slope))
               for bp in self.bps]
        inc = self.increment if _is_inf(self.increment) else None
        return Curve(bps, self.period_start, self.period,
                     inc if inc is not None else self._mapped_increment(f_point),
                     monotone=monotone)

    def _mapped_increment(self, f_point):
        # increment transforms like a value difference over one period
        z = Fraction(0)
        return f_point(self.increment, z) - f_point(z, z)

    def scale(self, factor) -> "Curve":
        """Pointwise multiply by a non-negative rational."""
        factor = as_rat(factor, "factor")
        if factor < 0:
            raise CurveError("scale factor must be >= 0")
        bps = [Breakpoint(bp.start, _mulf(bp.value, factor),
                          _mulf(bp.right_value, factor), bp.slope * factor)
               for bp in self.bps]
        inc = INF if _is_inf(self.increment) else self.increment * factor
        return Curve(bps, self.period_start, self.period, inc, monotone=False)

    def add_scalar(self, k) -> "Curve":
        k = as_rat(k, "offset")
        bps = [Breakpoint(bp.start, _add(bp.value, k), _add(bp.right_value, k),
                          bp.slope) for bp in self.bps]
        return Curve(bps, self.period_start, self.period, self.increment,
                     monotone=False)

    def shift_left(self, delta) -> "Curve":
        """t -> f(t + delta), delta >= 0."""
        delta = as_rat(delta, "delta")
        if delta < 0:
            raise CurveError("shift_left needs delta >= 0")
        if delta == 0:
            return self
        T, d = self.period_start, self.period
        newT = T - delta if T > delta else Fraction(0)
        hi = delta + newT + d
        bps = self.breakpoints_until(hi + d)
        out = []
        for i, bp in enumerate(bps):
            end = bps[i + 1].start if i + 1 < len(bps) else hi + d
            if end <= delta:
                continue
            if bp.start >= delta:
                out.append(Breakpoint(bp.start - delta, bp.value, bp.right_value,
                                      bp.slope))
            else:
                # segment straddles the cut: its interior value at delta
                v = _add(bp.right_value, bp.slope * (delta - bp.start)) \
                    if not _is_inf(bp.right_value) else INF
                out.append(Breakpoint(Fraction(0), v, v, bp.slope))
        out = [bp for bp in out if bp.start < newT + d]
        return Curve(_dedup(out), newT, d, self.increment, monotone=False)

    def shift_right(self, delta) -> "Curve":
        """t -> f(t - delta) with 0 before delta (delta >= 0)."""
        delta = as_rat(delta, "delta")
        if delta < 0:
            raise CurveError("shift_right needs delta >= 0")
        if delta == 0:
            return self
        bps = [Breakpoint(bp.start + delta, bp.value, bp.right_value, bp.slope)
               for bp in self.bps]
        head = Breakpoint(Fraction(0), Fraction(0), Fraction(0), Fraction(0))
        return Curve([head] + bps, self.period_start + delta, self.period,
                     self.increment, monotone=False)

    # -- comparison --------------------------------------------------------------

    def equivalent(self, other: "Curve") -> bool:
        """Exact semantic equality as functions on [0, inf)."""
        D = _lcm(self.period, other.period)
        ca = self.increment if _is_inf(self.increment) else self.increment * (D / self.period)
        cb = other.increment if _is_inf(other.increment) else other.increment * (D / other.period)
        T = max(self.period_start, other.period_start)
        if not _inc_eq(ca, cb):
            # different asymptotics can still coincide if both hit +inf; compare
            # a generous horizon then give up only on true divergence
            pass
        hi = T + 2 * D
        xs = sorted({bp.start for bp in self.breakpoints_until(hi)} |
                    {bp.start for bp in other.breakpoints_until(hi)} | {Fraction(0)})
        for x in xs:
            if not _eq(self.evaluate(x), other.evaluate(x)):
                return False
            if not _eq(self.right_limit(x), other.right_limit(x)):
                return False
            if x > 0 and not _eq(self.left_limit(x), other.left_limit(x)):
                return False
        # matching on [T, T+2D) plus equal per-D increments pins the tails
        return _inc_eq(ca, cb)

    def __repr__(self):
        seg = ", ".join(f"({bp.start}|{bp.value}/{bp.right_value}@{bp.slope})"
                        for bp in self.bps[:6])
        more = "..." if len(self.bps) > 6 else ""
        return (f"Curve[{seg}{more}; T={self.period_start} d={self.period} "
                f"c={self.increment}]")

    # -- CSV debug dump ------------------------------------------------------

    def dump_rows(self, horizon=None):
        """(t, value, right_value, slope) rows for plotting/debugging."""
        hi = as_rat(horizon, "horizon") if horizon is not None \
            else self.period_start + 2 * self.period
        return [(bp.start, bp.value, bp.right_value, bp.slope)
                for bp in self.breakpoints_until(hi)]


# -- infinity-aware scalar helpers ---------------------------------------------

def _is_inf(x) -> bool:
    return isinstance(x, float) and isinf(x)


def _add(a, b):
    if _is_inf(a) or _is_inf(b):
        return INF
    return a + b


def _mulf(a, k: Fraction):
    if _is_inf(a):
        return INF
    return a * k


def _sub_inc(off, inc):
    if _is_inf(off):
        return INF
    return off - inc


def _lt(a, b) -> bool:
    if _is_inf(a):
        return False
    if _is_inf(b):
        return True
    return a < b


def _eq(a, b) -> bool:
    if _is_inf(a) or _is_inf(b):
        return _is_inf(a) and _is_inf(b)
    return a == b


def _inc_eq(a, b) -> bool:
    return _eq(a, b)


def _seg_end_limit(bp: Breakpoint, end: Fraction):
    if _is_inf(bp.right_value):
        return INF
    return bp.right_value + bp.slope * (end - bp.start)


def _dedup(bps: list[Breakpoint]) -> list[Breakpoint]:
    """Drop breakpoints that merely continue the previous affine piece."""
    out: list[Breakpoint] = []
    for bp in bps:
        if out:
            prev = out[-1]
            cont = _seg_end_limit(prev, bp.start)
            if (_eq(bp.value, cont) and _eq(bp.right_value, cont)
                    and (bp.slope == prev.slope or _is_inf(cont))):
                continue
        out.append(bp)
    return out


# -- elements and envelopes ------------------------------------------------------

@dataclass(frozen=True)
class _Pt:
    x: Fraction
    v: Num


@dataclass(frozen=True)
class _Seg:
    """Affine piece on the open interval (x0, x1); v is the limit at x0+."""
    x0: Fraction
    x1: Fraction
    v: Num
    r: Fraction

    def at(self, x: Fraction) -> Num:
        if _is_inf(self.v):
            return INF
        return self.v + self.r * (x - self.x0)


def _envelope(elements, hi: Fraction, want_min: bool) -> list[Breakpoint]:
    """Exact lower/upper envelope of points and open segments on [0, hi).

    Regions covered by no finite element become +inf pieces (only the min
    envelope ever produces those; max callers always cover the axis).
    """
    pts = [e for e in elements if isinstance(e, _Pt) and 0 <= e.x < hi]
    segs = []
    for e in elements:
        if not isinstance(e, _Seg):
            continue
        x0, x1 = e.x0, e.x1
        if x1 <= 0 or x0 >= hi:
            continue
        v = e.v
        if x0 < 0:
            v = e.at(Fraction(0)) if not _is_inf(e.v) else INF
            x0 = Fraction(0)
        if x1 > hi:
            x1 = hi
        if x0 < x1:
            segs.append(_Seg(x0, x1, v, e.r))
    fin = [s for s in segs if not _is_inf(s.v)]
    xs = {Fraction(0)}
    for s in segs:
        xs.add(s.x0)
        if s.x1 < hi:
            xs.add(s.x1)
    for p in pts:
        xs.add(p.x)
    # pairwise crossings of overlapping finite segments
    fin.sort(key=lambda s: s.x0)
    for i, a in enumerate(fin):
        for b in fin[i + 1:]:
            if b.x0 >= a.x1:
                break
            if a.r == b.r:
                continue
            x = (b.v - a.v + a.r * a.x0 - b.r * b.x0) / (a.r - b.r)
            if max(a.x0, b.x0) < x < min(a.x1, b.x1) and 0 < x < hi:
                xs.add(x)
    xs = sorted(xs)
    pick = min if want_min else max
    ptmap: dict[Fraction, list] = {}
    for p in pts:
        ptmap.setdefault(p.x, []).append(p.v)
    out: list[Breakpoint] = []
    for i, x in enumerate(xs):
        nxt = xs[i + 1] if i + 1 < len(xs) else hi
        cand = list(ptmap.get(x, []))
        for s in segs:
            if s.x0 < x < s.x1:
                cand.append(s.at(x))
        pv = pick(cand) if cand else INF
        if nxt > x:
            mid = (x + nxt) / 2
            best = None
            for s in segs:
                if s.x0 < mid < s.x1:
                    val = s.at(mid)
                    if best is None:
                        best = s
                        bestval = val
                    elif (_lt(val, bestval) if want_min else _lt(bestval, val)):
                        best = s
                        bestval = val
            if best is None or _is_inf(best.v):
                rv, slope = INF, Fraction(0)
            else:
                rv, slope = best.at(x), best.r
        else:
            rv, slope = pv, Fraction(0)
        out.append(Breakpoint(x, pv, rv, slope))
    return _dedup(out)


# -- constructors --------------------------------------------------------------

def zero_curve() -> Curve:
    return Curve([Breakpoint(Fraction(0), Fraction(0), Fraction(0), Fraction(0))],
                 Fraction(0), Fraction(1), Fraction(0))


def constant_curve(v) -> Curve:
    v = as_rat(v, "value")
    return Curve([Breakpoint(Fraction(0), v, v, Fraction(0))],
                 Fraction(0), Fraction(1), Fraction(0), monotone=False)


def make_affine(burst, rate) -> Curve:
    """Token-bucket curve: 0 at the origin, then burst + rate*t."""
    b = as_rat(burst, "burst")
    r = as_rat(rate, "rate")
    if b < 0 or r < 0:
        raise CurveError("affine curve needs burst, rate >= 0")
    bp = Breakpoint(Fraction(0), Fraction(0), b, r)
    return Curve([bp], Fraction(0), Fraction(1), r)


def make_rate_latency(rate, latency) -> Curve:
    R = as_rat(rate, "rate")
    T = as_rat(latency, "latency")
    if R < 0 or T < 0:
        raise CurveError("rate-latency curve needs rate, latency >= 0")
    if T == 0:
        return make_affine(0, R)
    bps = [Breakpoint(Fraction(0), Fraction(0), Fraction(0), Fraction(0)),
           Breakpoint(T, Fraction(0), Fraction(0), R)]
    return Curve(bps, T, Fraction(1), R)


def make_burst_delay(delay) -> Curve:
    """0 up to and including `delay`, +inf after."""
    D = as_rat(delay, "delay")
    if D < 0:
        raise CurveError("burst-delay curve needs delay >= 0")
    if D == 0:
        bps = [Breakpoint(Fraction(0), Fraction(0), INF, Fraction(0))]
        return Curve(bps, Fraction(0), Fraction(1), Fraction(0))
    bps = [Breakpoint(Fraction(0), Fraction(0), Fraction(0), Fraction(0)),
           Breakpoint(D, Fraction(0), INF, Fraction(0))]
    return Curve(bps, D, Fraction(1), Fraction(0))


def make_staircase(spec_or_jump, offset=None, period=None) -> Curve:
    """Step curve jump*(floor((t-offset)/period)+1) clamped at 0.

    The value at each step instant includes the new step (upper, i.e.
    conservative, convention for arrival curves).  Negative offsets are
    allowed and simply fold earlier steps into the value at t=0.
    """
    if isinstance(spec_or_jump, StaircaseSpec):
        l, o, P = spec_or_jump.jump, spec_or_jump.offset, spec_or_jump.period
    else:
        l = as_rat(spec_or_jump, "jump")
        o = as_rat(offset, "offset")
        P = as_rat(period, "period")
    if l < 0 or P <= 0:
        raise CurveError("staircase needs jump >= 0 and period > 0")
    if l == 0:
        return zero_curve()
    return sum_staircases([(l, o, P)])


def sum_staircases(terms: Iterable[tuple]) -> Curve:
    """Exact sum of step terms (jump, offset, period); offsets may be
    negative.  All periods must divide a common hyperperiod."""
    terms = [(as_rat(l), as_rat(o), as_rat(P)) for (l, o, P) in terms if as_rat(l) != 0]
    if not terms:
        return zero_curve()
    P = terms[0][2]
    for (_, _, p) in terms[1:]:
        P = _lcm(P, p)
    base = Fraction(0)
    jumps: dict[Fraction, Fraction] = {}
    for (l, o, p) in terms:
        reps = int(P / p)
        # fold steps at or before 0 into the base value
        k0 = -floor(Fraction(-o) / p) if o < 0 else 0  # first step index with o+k*p >= 0... computed directly below
        # first step instant >= 0:
        kmin = ceil(Fraction(-o, p)) if o < 0 else 0
        base += l * kmin
        first = o + kmin * p
        for k in range(reps):
            t = first + k * p
            t_mod = t - P * (t // P)
            jumps[t_mod] = jumps.get(t_mod, Fraction(0)) + l
    total = sum(jumps.values())
    xs = sorted(jumps)
    bps = []
    acc = base
    if not xs or xs[0] != 0:
        bps.append(Breakpoint(Fraction(0), acc, acc, Fraction(0)))
    for x in xs:
        acc += jumps[x]
        bps.append(Breakpoint(x, acc, acc, Fraction(0)))
    return Curve(bps, Fraction(0), P, total)


# -- pointwise combinations -----------------------------------------------------

def sum_curves(curves: Sequence[Curve]) -> Curve:
    if not curves:
        raise CurveError("sum of empty curve list")
    acc = curves[0]
    for c in curves[1:]:
        acc = _sum2(acc, c)
    return acc


def _sum2(f: Curve, g: Curve) -> Curve:
    T = max(f.period_start, g.period_start)
    D = _lcm(f.period, g.period)
    hi = T + D
    xs = sorted({bp.start for bp in f.breakpoints_until(hi)} |
                {bp.start for bp in g.breakpoints_until(hi)})
    bps = []
    for x in xs:
        pv = _add(f.evaluate(x), g.evaluate(x))
        rv = _add(f.right_limit(x), g.right_limit(x))
        slope = Fraction(0)
        if not _is_inf(rv):
            i = f._index_of(f._reduce(x)[0])
            j = g._index_of(g._reduce(x)[0])
            slope = _slope_at(f, x) + _slope_at(g, x)
        bps.append(Breakpoint(x, pv, rv, slope))
    cf = INF if _is_inf(f.increment) else f.increment * (D / f.period)
    cg = INF if _is_inf(g.increment) else g.increment * (D / g.period)
    return Curve(_dedup(bps), T, D, _add(cf, cg), monotone=False)


def _slope_at(f: Curve, x: Fraction) -> Fraction:
    t2, _ = f._reduce(x)
    bp = f.bps[f._index_of(t2)]
    return bp.slope


def min_curves(curves: Sequence[Curve]) -> Curve:
    if not curves:
        raise CurveError("min of empty curve list")
    acc = curves[0]
    for c in curves[1:]:
        acc = _minmax2(acc, c, want_min=True)
    return acc


def max_curves(curves: Sequence[Curve]) -> Curve:
    if not curves:
        raise CurveError("max of empty curve list")
    acc = curves[0]
    for c in curves[1:]:
        acc = _minmax2(acc, c, want_min=False)
    return acc


def _extreme_on(f: Curve, g: Curve, lo: Fraction, hi: Fraction, want_max: bool):
    """Exact max (or min) of f-g over [lo, hi), one-sided limits included.
    Both curves must be finite on the window."""
    xs = {lo}
    for bp in f.breakpoints_until(hi) + g.breakpoints_until(hi):
        if lo <= bp.start < hi:
            xs.add(bp.start)
    best = None
    for x in sorted(xs):
        cand = [f.evaluate(x) - g.evaluate(x), f.right_limit(x) - g.right_limit(x)]
        if x > lo or lo > 0:
            if x > 0:
                cand.append(f.left_limit(x) - g.left_limit(x))
        for v in cand:
            if best is None or (v > best if want_max else v < best):
                best = v
    # limit approaching hi from the left
    if hi > 0:
        v = f.left_limit(hi) - g.left_limit(hi)
        if best is None or (v > best if want_max else v < best):
            best = v
    return best


def _minmax2(f: Curve, g: Curve, want_min: bool) -> Curve:
    T0 = max(f.period_start, g.period_start)
    D = _lcm(f.period, g.period)
    cf = INF if _is_inf(f.increment) else f.increment * (D / f.period)
    cg = INF if _is_inf(g.increment) else g.increment * (D / g.period)

    f_inf = not f.is_finite()
    g_inf = not g.is_finite()
    if f_inf or g_inf:
        return _minmax_with_inf(f, g, want_min, T0, D, cf, cg)

    if cf == cg:
        T_res, d_res, c_res = T0, D, cf
        win = None
    else:
        lo_c, hi_c = (f, g) if cf < cg else (g, f)
        lo_inc, hi_inc = min(cf, cg), max(cf, cg)
        # max over one hyperperiod of (eventual loser - eventual winner)
        if want_min:
            M = _extreme_on(hi_c, lo_c, T0, T0 + D, want_max=False)
            # loser dominates while hi - lo stays <= 0? min keeps the smaller:
            # the low-increment curve eventually wins; find when it is <= forever
            M = _extreme_on(lo_c, hi_c, T0, T0 + D, want_max=True)
            k = 0 if M <= 0 else ceil(M / (hi_inc - lo_inc))
            winner = lo_c
        else:
            M = _extreme_on(hi_c, lo_c, T0, T0 + D, want_max=False)
            k = 0 if M >= 0 else ceil(-M / (hi_inc - lo_inc))
            winner = hi_c
        T_res = T0 + k * D
        d_res, c_res = winner.period, winner.increment
        win = winner
    hi = T_res + d_res
    els = f.elements_until(hi) + g.elements_until(hi)
    bps = _envelope(els, hi, want_min)
    return Curve(bps, T_res, d_res, c_res, monotone=False)


def _minmax_with_inf(f: Curve, g: Curve, want_min: bool, T0, D, cf, cg) -> Curve:
    f_inf = not f.is_finite()
    g_inf = not g.is_finite()
    if f_inf and g_inf:
        winner_T = T0
        hi = T0 + D
        els = f.elements_until(hi) + g.elements_until(hi)
        bps = _envelope(els, hi, want_min)
        return Curve(bps, T0, D, _add(cf, Fraction(0)) if False else (cf if _is_inf(cf) else cg), monotone=False)
    fin, infc = (f, g) if g_inf else (g, f)
    x_inf = _first_inf(infc)
    if want_min:
        # finite curve wins beyond the infinite region's start
        T_res = max(T0, x_inf)
        d_res, c_res = fin.period, fin.increment
    else:
        T_res = max(T0, x_inf)
        d_res, c_res = infc.period, INF if _is_inf(infc.increment) else infc.increment
        # max with an infinite curve is infinite beyond x_inf
        hi = T_res + d_res
        els = f.elements_until(hi) + g.elements_until(hi)
        bps = _envelope(els, hi, want_min)
        return Curve(bps, T_res, d_res, INF, monotone=False)
    hi = T_res + d_res
    els = f.elements_until(hi) + g.elements_until(hi)
    bps = _envelope(els, hi, want_min)
    return Curve(bps, T_res, d_res, c_res, monotone=False)


def _first_inf(f: Curve) -> Fraction:
    for bp in f.bps:
        if _is_inf(bp.value):
            return bp.start
        if _is_inf(bp.right_value):
            return bp.start
    return f.period_start + f.period


# -- min-plus convolution ---------------------------------------------------------

def _conv_pair(a, b):
    """Min-plus convolution elements of two elements (points/open segments)."""
    if isinstance(a, _Pt) and isinstance(b, _Pt):
        return [_Pt(a.x + b.x, _add(a.v, b.v))]
    if isinstance(a, _Pt) and isinstance(b, _Seg):
        if _is_inf(a.v) or _is_inf(b.v):
            return []
        return [_Seg(a.x + b.x0, a.x + b.x1, a.v + b.v, b.r)]
    if isinstance(a, _Seg) and isinstance(b, _Pt):
        return _conv_pair(b, a)
    # segment x segment: traverse the shallower slope first
    if _is_inf(a.v) or _is_inf(b.v):
        return []
    s1, s2 = (a, b) if a.r <= b.r else (b, a)
    len1 = s1.x1 - s1.x0
    len2 = s2.x1 - s2.x0
    t0 = a.x0 + b.x0
    v0 = a.v + b.v
    tj = t0 + len1
    out = [_Seg(t0, tj, v0, s1.r)]
    vj = v0 + s1.r * len1
    if len2 > 0:
        out.append(_Pt(tj, vj))
        out.append(_Seg(tj, tj + len2, vj, s2.r))
    return out


def convolve(f: Curve, g: Curve) -> Curve:
    """Min-plus convolution inf_{0<=s<=t} f(t-s) + g(s), exact."""
    Tf, df = f.period_start, f.period
    Tg, dg = g.period_start, g.period
    D = _lcm(df, dg)
    cfD = INF if _is_inf(f.increment) else f.increment * (D / df)
    cgD = INF if _is_inf(g.increment) else g.increment * (D / dg)

    parts: list[Curve] = []

    f_t = [e for e in f.elements_until(Tf) if not _el_inf(e)] if Tf > 0 else []
    g_t = [e for e in g.elements_until(Tg) if not _el_inf(e)] if Tg > 0 else []

    # transient x transient: finite support, +inf afterwards
    if f_t and g_t:
        hi_tt = Tf + Tg
        els = [p for a in f_t for b in g_t for p in _conv_pair(a, b)]
        bps = _envelope(els, hi_tt, want_min=True)
        if bps and bps[-1].start < hi_tt:
            pass
        last = Breakpoint(hi_tt, INF, INF, Fraction(0)) if hi_tt > 0 else None
        if last is not None:
            bps = bps + [last]
            parts.append(Curve(bps, hi_tt, Fraction(1), Fraction(0), monotone=False))

    # transient x periodic (and symmetric)
    def _trans_x_periodic(trans_els, trans_T, per: Curve):
        if not trans_els:
            return None
        if _is_inf(per.increment) or not per.is_finite():
            per_fin = [e for e in per.elements_until(_first_inf(per)) if not _el_inf(e)]
            Tp = per.period_start
            # periodic part of an infinite curve contributes nothing finite
            return None
        T_res = trans_T + per.period_start
        hi = T_res + per.period
        per_els = [e for e in per.elements_until(hi + trans_T)
                   if _el_hi(e) > per.period_start and not _el_inf(e)]
        per_els = [_clip_lo(e, per.period_start) for e in per_els]
        per_els = [e for e in per_els if e is not None]
        els = [p for a in trans_els for b in per_els for p in _conv_pair(a, b)]
        bps = _envelope(els, hi, want_min=True)
        return Curve(bps, T_res, per.period, per.increment, monotone=False)

    pt = _trans_x_periodic(f_t, Tf, g)
    if pt is not None:
        parts.append(pt)
    tp = _trans_x_periodic(g_t, Tg, f)
    if tp is not None:
        parts.append(tp)

    # periodic x periodic
    f_fin_p = f.is_finite() or not _is_inf(f.increment)
    fp_els = _periodic_elements(f, 2 * D)
    gp_els = _periodic_elements(g, 2 * D)
    if fp_els and gp_els:
        c_res = cfD if _lt(cfD, cgD) or _eq(cfD, cgD) else cgD
        if _is_inf(c_res):
            c_res = cgD if not _is_inf(cgD) else cfD
        if not _is_inf(c_res):
            T_res = Tf + Tg + D
            hi = T_res + D
            els = [p for a in fp_els for b in gp_els for p in _conv_pair(a, b)]
            bps = _envelope(els, hi, want_min=True)
            parts.append(Curve(bps, T_res, D, c_res, monotone=False))

    if not parts:
        raise CurveError("convolution undefined: no finite content")
    acc = parts[0]
    for p in parts[1:]:
        acc = _minmax2(acc, p, want_min=True)
    return acc


def _el_inf(e) -> bool:
    return _is_inf(e.v)


def _el_hi(e) -> Fraction:
    return e.x if isinstance(e, _Pt) else e.x1


def _clip_lo(e, lo: Fraction):
    if isinstance(e, _Pt):
        return e if e.x >= lo else None
    if e.x1 <= lo:
        return None
    if e.x0 >= lo:
        return e
    return _Seg(lo, e.x1, e.at(lo), e.r)


def _periodic_elements(f: Curve, span: Fraction):
    """Finite elements of f on [T_f, T_f + span)."""
    T = f.period_start
    els = [e for e in f.elements_until(T + span) if _el_hi(e) > T and not _el_inf(e)]
    out = []
    for e in els:
        ce = _clip_lo(e, T)
        if ce is not None:
            out.append(ce)
    return out


# -- min-plus deconvolution -------------------------------------------------------

def _deconv_pair(a, b):
    """Pieces of sup_{u-s=t} a(u) - b(s) for elements a (of f) and b (of g)."""
    if _is_inf(b.v):
        return []  # -inf contributions never win the sup
    if isinstance(a, _Pt) and isinstance(b, _Pt):
        return [_Pt(a.x - b.x, _add(a.v, -b.v) if not _is_inf(a.v) else INF)]
    if isinstance(a, _Pt) and isinstance(b, _Seg):
        v_left = _add(a.v, -(b.v + b.r * (b.x1 - b.x0))) if not _is_inf(a.v) else INF
        return [_Seg(a.x - b.x1, a.x - b.x0, v_left, b.r)]
    if isinstance(a, _Seg) and isinstance(b, _Pt):
        return [_Seg(a.x0 - b.x, a.x1 - b.x, _add(a.v, -b.v) if not _is_inf(a.v) else INF, a.r)]
    if _is_inf(a.v):
        return []
    # segment x segment: sup, so traverse the steeper slope first
    t_lo = a.x0 - b.x1
    t_hi = a.x1 - b.x0
    tj = a.x1 - b.x1 if a.r >= b.r else a.x0 - b.x0
    v_lo = a.v - (b.v + b.r * (b.x1 - b.x0))  # limit at t -> t_lo+
    out = []
    if a.r >= b.r:
        # first regime: u pinned to t + b.x1 (slope a.r), then s slides (slope b.r)
        out.append(_Seg(t_lo, tj, v_lo, a.r))
        vj = v_lo + a.r * (tj - t_lo)
        if t_hi > tj:
            out.append(_Pt(tj, vj))
            out.append(_Seg(tj, t_hi, vj, b.r))
    else:
        out.append(_Seg(t_lo, tj, v_lo, b.r))
        vj = v_lo + b.r * (tj - t_lo)
        if t_hi > tj:
            out.append(_Pt(tj, vj))
            out.append(_Seg(tj, t_hi, vj, a.r))
    return out


def deconvolve(f: Curve, g: Curve) -> Curve:
    """Min-plus deconvolution sup_{s>=0} f(t+s) - g(s), exact.

    Requires rate(f) <= rate(g); otherwise the supremum diverges and an
    UnstableSystemError is raised.
    """
    if not f.is_finite():
        raise CurveError("deconvolution needs a finite left operand")
    rf, rg = f.long_term_rate(), g.long_term_rate()
    if _lt(rg, rf):
        raise UnstableSystemError(
            f"deconvolution diverges: arrival rate {rf} exceeds service rate {rg}")
    if not _is_inf(rg):
        # equal or larger finite rate: also diverges when rates equal but f
        # runs away... equal rates are fine; only rf > rg diverges (handled).
        pass
    D = _lcm(f.period, g.period)
    s_max = max(f.period_start, g.period_start) + D
    T_res, d_res, c_res = f.period_start, f.period, f.increment
    hi = T_res + d_res
    f_els = [e for e in f.elements_until(hi + s_max + d_res)]
    g_els = []
    for e in g.elements_until(s_max + g.period):
        ce = _clip_hi(e, s_max)
        if ce is not None and not _is_inf(ce.v):
            g_els.append(ce)
    els = []
    for a in f_els:
        for b in g_els:
            els.extend(_deconv_pair(a, b))
    els = [e for e in els if not _el_neg(e)]
    els = [_clip_zero(e) for e in els]
    els = [e for e in els if e is not None]
    bps = _envelope(els, hi, want_min=False)
    if any(_is_inf(bp.value) or _is_inf(bp.right_value) for bp in bps):
        raise UnstableSystemError("deconvolution diverges on the computed horizon")
    return Curve(bps, T_res, d_res, c_res, monotone=False)


def _clip_hi(e, hi: Fraction):
    if isinstance(e, _Pt):
        return e if e.x <= hi else None
    if e.x0 >= hi:
        return None
    if e.x1 <= hi:
        return e
    return _Seg(e.x0, hi, e.v, e.r)


def _el_neg(e) -> bool:
    return (e.x < 0) if isinstance(e, _Pt) else (e.x1 <= 0)


def _clip_zero(e):
    if isinstance(e, _Pt):
        return e
    if e.x0 >= 0:
        return e
    return _Seg(Fraction(0), e.x1, e.at(Fraction(0)), e.r)


# -- closure --------------------------------------------------------------------

def closure_up(f: Curve) -> Curve:
    """Non-decreasing non-negative closure: max over [0, t] of max(f(s), 0)."""
    if not f.is_finite():
        raise CurveError("closure of an infinite curve is not supported")
    T, d, c = f.period_start, f.period, f.increment
    if c > 0:
        w0 = _window_max(f, T, T + d)
        m0 = _running_max_value(f, T)
        k = max(0, ceil((m0 - w0) / c)) + 1
        T_res = T + k * d
        d_res, c_res = d, c
    else:
        T_res = T + d
        d_res, c_res = d, Fraction(0)
    hi = T_res + d_res
    bps = _running_max_breakpoints(f, hi)
    return Curve(bps, T_res, d_res, c_res, monotone=True)


def _window_max(f: Curve, lo: Fraction, hi: Fraction) -> Fraction:
    z = zero_curve()
    return _extreme_on(f, z, lo, hi, want_max=True)


def _running_max_value(f: Curve, t: Fraction) -> Fraction:
    if t == 0:
        return max(Fraction(0), f.evaluate(Fraction(0)))
    m = _window_max(f, Fraction(0), t)
    m = max(m, f.evaluate(t))
    return max(m, Fraction(0))


def _running_max_breakpoints(f: Curve, hi: Fraction) -> list[Breakpoint]:
    """Breakpoints of t -> max(0, max_{s<=t} f(s)) on [0, hi)."""
    xs = sorted({bp.start for bp in f.breakpoints_until(hi)} | {Fraction(0)})
    out: list[Breakpoint] = []
    run = Fraction(0)
    for i, x in enumerate(xs):
        nxt = xs[i + 1] if i + 1 < len(xs) else hi
        pv = max(run, f.evaluate(x))
        run = pv
        # within (x, nxt) f is affine from its right limit
        rv = f.right_limit(x)
        sl = _slope_at(f, x) if not _is_inf(rv) else Fraction(0)
        if rv >= run and sl >= 0:
            seg_v, seg_r = rv, sl
            run = rv + sl * (nxt - x)
        elif rv >= run and sl < 0:
            # rises above the running max at x+, then decays: max holds at rv
            # until f drops below it: f only decreases, so max freezes at rv
            seg_v, seg_r = rv, Fraction(0)
            run = max(run, rv)
        else:
            # f below running max at x+
            if sl <= 0:
                seg_v, seg_r = run, Fraction(0)
            else:
                # f may climb back above run inside the interval
                cross = x + (run - rv) / sl
                if cross < nxt:
                    out.append(Breakpoint(x, pv, run, Fraction(0)))
                    out.append(Breakpoint(cross, run, run, sl))
                    run = run + sl * (nxt - cross)
                    continue
                seg_v, seg_r = run, Fraction(0)
        out.append(Breakpoint(x, pv, seg_v, seg_r))
    return _dedup(out)


# -- pseudo-inverse and horizontal deviation ---------------------------------------

def lower_pseudo_inverse(beta: Curve, y) -> Num:
    """inf{x >= 0 : beta(x) >= y}; +inf when beta never reaches y."""
    y = as_rat(y, "level")
    if y <= 0:
        return Fraction(0) if beta.evaluate(Fraction(0)) >= y else _lpi_walk(beta, y)
    return _lpi_walk(beta, y)


def _lpi_walk(beta: Curve, y: Fraction) -> Num:
    T, d, c = beta.period_start, beta.period, beta.increment
    top = beta.evaluate(T + d)
    shift = Fraction(0)
    if not _is_inf(top) and top > 0 and y > top:
        if _is_inf(c) or c <= 0:
            return INF if not _is_inf(c) else _lpi_scan(beta, y, T + 2 * d)
        k = ceil((y - top) / c)
        y = y - k * c
        shift = k * d
    r = _lpi_scan(beta, y, T + 2 * d)
    return INF if _is_inf(r) else r + shift


def _lpi_scan(beta: Curve, y: Fraction, hi: Fraction) -> Num:
    for bp in beta.breakpoints_until(hi):
        if not _is_inf(bp.value) and bp.value >= y:
            return bp.start
        if _is_inf(bp.value):
            return bp.start
        end = hi
        i = beta._index_of(beta._reduce(bp.start)[0])
        # walk materialized: recompute end as next materialized start
        # (breakpoints_until gives consecutive starts; find from the list)
        # simpler: handle via right values
        if _is_inf(bp.right_value):
            return bp.start
        if bp.slope > 0:
            x = bp.start + (y - bp.right_value) / bp.slope
            if x <= bp.start:
                return bp.start
            # confirm x lies before the next breakpoint by evaluating
            if beta.evaluate(x) >= y and x < hi:
                lo_ok = True
                return x
        elif bp.right_value >= y:
            return bp.start
    # fall back to the tail
    if _is_inf(beta.increment) or beta.increment > 0:
        # extend the scan window; the tail must eventually reach y
        return _lpi_scan(beta, y, hi + 4 * beta.period) if hi < beta.period_start + 64 * beta.period else INF
    return INF


def lpi_right_limit(beta: Curve, y) -> Num:
    """lim_{y'->y+} of the lower pseudo-inverse: inf{x : beta(x) > y}."""
    y = as_rat(y, "level")
    T, d, c = beta.period_start, beta.period, beta.increment
    top = beta.evaluate(T + d)
    shift = Fraction(0)
    if not _is_inf(top) and y > top:
        if _is_inf(c) or c <= 0:
            if not _is_inf(c):
                return INF
        else:
            k = ceil((y - top) / c)
            y = y - k * c
            shift = k * d
    hi = T + 2 * d
    guard = 0
    while True:
        for bp in beta.breakpoints_until(hi):
            if _is_inf(bp.value) or bp.value > y:
                return bp.start + shift
            if _is_inf(bp.right_value):
                return bp.start + shift
            if bp.slope > 0:
                x = bp.start + (y - bp.right_value) / bp.slope
                x = max(x, bp.start)
                if x < hi and beta.right_limit(x) > y and beta.evaluate(x) <= y:
                    return x + shift
                if x < hi and beta.evaluate(x) > y:
                    return x + shift
            elif bp.right_value > y:
                return bp.start + shift
        if _is_inf(beta.increment) or beta.increment > 0:
            hi += 4 * beta.period
            guard += 1
            if guard > 64:
                return INF
        else:
            return INF


def horizontal_deviation(alpha: Curve, beta: Curve) -> Fraction:
    """Worst horizontal gap sup_s inf{tau >= 0 : alpha(s) <= beta(s+tau)}.

    Raises UnstableSystemError when the arrival's long-term rate exceeds the
    service's, or when the service never reaches a needed level.
    """
    if not alpha.is_finite():
        raise CurveError("horizontal deviation needs a finite arrival curve")
    ra, rb = alpha.long_term_rate(), beta.long_term_rate()
    if _lt(rb, ra):
        raise UnstableSystemError(
            f"unstable: arrival rate {ra} exceeds service rate {rb}")
    s_limit = _hdev_horizon(alpha, beta)
    cands = {Fraction(0), s_limit}
    for bp in alpha.breakpoints_until(s_limit):
        cands.add(bp.start)
    # crossings of alpha with beta's level set
    levels = set()
    hi_b = beta.period_start + 2 * beta.period
    for bp in beta.breakpoints_until(hi_b):
        if not _is_inf(bp.value):
            levels.add(bp.value)
        if not _is_inf(bp.right_value):
            levels.add(bp.right_value)
    if not _is_inf(beta.increment) and beta.increment > 0:
        # lift levels into the range alpha actually reaches
        a_top = alpha.evaluate(s_limit)
        base_top = beta.evaluate(beta.period_start + beta.period)
        extra = set()
        for lv in levels:
            if beta.increment > 0:
                k = 0
                while lv + k * beta.increment <= a_top:
                    extra.add(lv + k * beta.increment)
                    k += 1
                    if k > 4096:
                        break
        levels |= extra
    for lv in levels:
        for s in _level_crossings(alpha, lv, s_limit):
            cands.add(s)
    best = Fraction(0)
    for s in sorted(cands):
        if s < 0 or s > s_limit:
            continue
        for tau in _tau_candidates(alpha, beta, s):
            if _is_inf(tau):
                raise UnstableSystemError(
                    "unstable: service curve never reaches the arrival level")
            if tau > best:
                best = tau
    return best


def _hdev_horizon(alpha: Curve, beta: Curve) -> Fraction:
    ca, da = alpha.increment, alpha.period
    cb, db = beta.increment, beta.period
    if ca == 0:
        delta = da
    else:
        if _is_inf(cb):
            delta = da
        elif cb == 0:
            delta = da  # beta bounded; divergence checked during the sweep
        else:
            L = _lcm(ca, cb)
            delta = da * (L / ca)
    s_base = alpha.period_start
    if not _is_inf(cb) and cb > 0:
        y_star = beta.evaluate(beta.period_start + beta.period)
        s_y = _first_reach(alpha, y_star)
        if s_y is not None:
            s_base = max(s_base, s_y)
    return s_base + delta


def _first_reach(alpha: Curve, y: Fraction):
    """Smallest s with alpha(s) >= y, None if alpha stays below forever."""
    if _is_inf(y):
        return None
    if alpha.increment == 0:
        top = _window_max(alpha, Fraction(0), alpha.period_start + alpha.period)
        if top < y:
            return None
    x = lower_pseudo_inverse(alpha, y)
    return None if _is_inf(x) else x


def _level_crossings(alpha: Curve, level: Fraction, s_limit: Fraction):
    out = []
    for bp in alpha.breakpoints_until(s_limit):
        if _is_inf(bp.right_value) or bp.slope <= 0:
            continue
        x = bp.start + (level - bp.right_value) / bp.slope
        if bp.start < x <= s_limit and alpha.evaluate(x) == level:
            out.append(x)
    return out


def _tau_candidates(alpha: Curve, beta: Curve, s: Fraction):
    """tau at s plus its one-sided limits, all exact."""
    vals = []
    lv = alpha.evaluate(s)
    vals.append(_tau_of(beta, lv, s))
    rv = alpha.right_limit(s)
    t2, _ = alpha._reduce(s)
    slope_r = _slope_at(alpha, s)
    if slope_r == 0:
        x = lower_pseudo_inverse(beta, rv)
    else:
        x = lpi_right_limit(beta, rv)
    vals.append(_tau_from_x(x, s))
    if s > 0:
        lvl = alpha.left_limit(s)
        x = lower_pseudo_inverse(beta, lvl)  # lower pseudo-inverse is left-continuous
        vals.append(_tau_from_x(x, s))
    return vals


def _tau_of(beta: Curve, level, s: Fraction):
    x = lower_pseudo_inverse(beta, level)
    return _tau_from_x(x, s)


def _tau_from_x(x, s: Fraction):
    if _is_inf(x):
        return INF
    return max(Fraction(0), x - s)
