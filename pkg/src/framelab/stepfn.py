"""Exact calculus for compactly supported piecewise constant functions.

Every function here is a finite list of half open cells [t_i, t_{i+1})
carrying a constant value, and is identically zero outside its span.  All
integrals, norms and inner products reduce to finite sums over cells, so
results are exact up to float rounding; there is no quadrature error.
Dyadic breakpoints and dyadic translations therefore compose without any
drift, which is what the reconstruction experiments lean on.
"""

import math

import numpy as np

from .intervals import IntervalSet

# breakpoints closer than this are merged when two cell grids are combined
MERGE_TOL = 1e-12

_EMPTY = np.empty(0, dtype=float)


def _canonicalize(bp, vals):
    """Merge equal-value neighbours and trim zero cells at both ends."""
    if vals.size == 0:
        return _EMPTY, _EMPTY
    if vals.size > 1:
        change = np.empty(vals.size, dtype=bool)
        change[0] = True
        change[1:] = vals[1:] != vals[:-1]
        if not change.all():
            starts = np.flatnonzero(change)
            vals = vals[starts]
            bp = np.concatenate([bp[starts], bp[-1:]])
    nz = np.flatnonzero(vals)
    if nz.size == 0:
        return _EMPTY, _EMPTY
    lo, hi = nz[0], nz[-1]
    if lo > 0 or hi + 1 < vals.size:
        bp = bp[lo:hi + 2]
        vals = vals[lo:hi + 1]
    return bp, vals


class StepFunction:
    """Piecewise constant function, zero outside its breakpoint span.

    ``values[i]`` is held on ``[breakpoints[i], breakpoints[i+1])``.  The
    zero function is the empty cell list.  Instances are immutable and all
    operations return new objects.
    """

    __slots__ = ("breakpoints", "values")

    def __init__(self, breakpoints=(), values=()):
        bp = np.array(breakpoints, dtype=float)
        vals = np.array(values, dtype=float)
        if bp.ndim != 1 or vals.ndim != 1:
            raise ValueError("breakpoints and values must be one dimensional")
        expected = vals.size + 1 if vals.size else 0
        if bp.size != expected:
            raise ValueError(
                f"need {expected} breakpoints for {vals.size} cells, got {bp.size}")
        if bp.size and not np.all(np.diff(bp) > 0):
            raise ValueError("breakpoints must be strictly increasing")
        bp, vals = _canonicalize(bp, vals)
        bp.setflags(write=False)
        vals.setflags(write=False)
        object.__setattr__(self, "breakpoints", bp)
        object.__setattr__(self, "values", vals)

    def __setattr__(self, name, value):
        raise AttributeError("StepFunction is immutable")

    # -- constructors ------------------------------------------------------

    @classmethod
    def zero(cls):
        return cls((), ())

    @classmethod
    def indicator(cls, a, b):
        """Indicator of the half open interval [a, b)."""
        if not b > a:
            raise ValueError("indicator needs a < b")
        return cls((a, b), (1.0,))

    @classmethod
    def from_dict(cls, record):
        return cls(record["breakpoints"], record["values"])

    def to_dict(self):
        return {"breakpoints": [float(t) for t in self.breakpoints],
                "values": [float(v) for v in self.values]}

    # -- basic queries -----------------------------------------------------

    def is_zero(self):
        return self.values.size == 0

    def support(self):
        """(left, right) span of the nonzero cells, or None for the zero function."""
        if self.values.size == 0:
            return None
        return (float(self.breakpoints[0]), float(self.breakpoints[-1]))

    def num_cells(self):
        return int(self.values.size)

    def evaluate(self, t):
        """Pointwise value; accepts a scalar or an array of points."""
        arr = np.asarray(t, dtype=float)
        if self.values.size == 0:
            out = np.zeros_like(arr)
        else:
            idx = np.searchsorted(self.breakpoints, arr, side="right") - 1
            inside = (idx >= 0) & (idx < self.values.size)
            out = np.where(inside,
                           self.values[np.clip(idx, 0, self.values.size - 1)],
                           0.0)
        if arr.ndim == 0:
            return float(out)
        return out

    __call__ = evaluate

    # -- algebra -----------------------------------------------------------

    def _combine(self, other, op):
        grid = np.union1d(self.breakpoints, other.breakpoints)
        if grid.size:
            keep = np.empty(grid.size, dtype=bool)
            keep[0] = True
            keep[1:] = np.diff(grid) > MERGE_TOL
            grid = grid[keep]
        if grid.size < 2:
            return StepFunction.zero()
        mids = 0.5 * (grid[:-1] + grid[1:])
        vals = op(self.evaluate(mids), other.evaluate(mids))
        return StepFunction(grid, vals)

    def add(self, other):
        return self._combine(other, np.add)

    def multiply(self, other):
        """Pointwise product."""
        return self._combine(other, np.multiply)

    def scale(self, c):
        c = float(c)
        if c == 0.0 or self.values.size == 0:
            return StepFunction.zero()
        return StepFunction(self.breakpoints, self.values * c)

    def translate(self, b):
        """t -> f(t - b)."""
        if self.values.size == 0:
            return self
        return StepFunction(self.breakpoints + float(b), self.values)

    def dilate(self, a, p):
        """Lp normalized dyadic dilation t -> 2^(a/p) f(2^a t); needs p > 1."""
        if not p > 1:
            raise ValueError("dilation exponent requires p > 1")
        if self.values.size == 0:
            return self
        a = float(a)
        return StepFunction(self.breakpoints * 2.0 ** (-a),
                            self.values * 2.0 ** (a / p))

    def __add__(self, other):
        return self.add(other)

    def __sub__(self, other):
        return self.add(other.scale(-1.0))

    def __neg__(self):
        return self.scale(-1.0)

    def __mul__(self, other):
        if isinstance(other, StepFunction):
            return self.multiply(other)
        return self.scale(other)

    __rmul__ = __mul__

    @staticmethod
    def sum(funcs):
        """Balanced pairwise summation of a sequence of step functions."""
        items = list(funcs)
        if not items:
            return StepFunction.zero()
        while len(items) > 1:
            nxt = [items[i].add(items[i + 1]) for i in range(0, len(items) - 1, 2)]
            if len(items) % 2:
                nxt.append(items[-1])
            items = nxt
        return items[0]

    # -- integrals and norms -------------------------------------------------

    def integrate(self, region=None):
        """Integral over an IntervalSet, or over the whole line if None."""
        if self.values.size == 0:
            return 0.0
        lens = np.diff(self.breakpoints)
        if region is None:
            return float(np.dot(self.values, lens))
        if not isinstance(region, IntervalSet):
            raise TypeError("region must be an IntervalSet or None")
        total = 0.0
        left = self.breakpoints[:-1]
        right = self.breakpoints[1:]
        for l, r in region.intervals:
            overlap = np.minimum(right, r) - np.maximum(left, l)
            np.clip(overlap, 0.0, None, out=overlap)
            total += float(np.dot(self.values, overlap))
        return total

    def abs_integral(self):
        """Integral of |f|; the L1 norm."""
        if self.values.size == 0:
            return 0.0
        return float(np.dot(np.abs(self.values), np.diff(self.breakpoints)))

    def lp_norm(self, p):
        if not p >= 1:
            raise ValueError("lp_norm requires p >= 1")
        if self.values.size == 0:
            return 0.0
        lens = np.diff(self.breakpoints)
        return float(np.dot(np.abs(self.values) ** p, lens) ** (1.0 / p))

    def inner(self, other):
        """Exact integral of the pointwise product of two step functions."""
        if self.values.size == 0 or other.values.size == 0:
            return 0.0
        grid = np.union1d(self.breakpoints, other.breakpoints)
        keep = np.empty(grid.size, dtype=bool)
        keep[0] = True
        keep[1:] = np.diff(grid) > MERGE_TOL
        grid = grid[keep]
        if grid.size < 2:
            return 0.0
        mids = 0.5 * (grid[:-1] + grid[1:])
        return float(np.dot(self.evaluate(mids) * other.evaluate(mids),
                            np.diff(grid)))

    def periodized_l1_sup(self):
        """sup over t of the 1-periodization of |f|.

        Folds every cell of |f| onto [0, 1) and takes the maximum of the
        accumulated step function.  Finiteness is automatic for compactly
        supported step functions; the point of computing it exactly is that
        it certifies the frame bound of a translated generator.
        """
        if self.values.size == 0:
            return 0.0
        frags = []
        for s, e, v in zip(self.breakpoints[:-1], self.breakpoints[1:],
                           np.abs(self.values)):
            if v == 0.0:
                continue
            pos = s
            while pos < e:
                k = math.floor(pos)
                seg_end = min(e, k + 1.0)
                frags.append((pos - k, seg_end - k, v))
                pos = seg_end
        if not frags:
            return 0.0
        points = {0.0, 1.0}
        for fs, fe, _ in frags:
            points.add(fs)
            points.add(fe)
        grid = np.array(sorted(points))
        acc = np.zeros(grid.size - 1)
        for fs, fe, v in frags:
            i0 = np.searchsorted(grid, fs)
            i1 = np.searchsorted(grid, fe)
            acc[i0:i1] += v
        return float(acc.max())

    # -- comparisons ---------------------------------------------------------

    def __eq__(self, other):
        """Exact equality of the canonical representations."""
        if not isinstance(other, StepFunction):
            return NotImplemented
        return (np.array_equal(self.breakpoints, other.breakpoints)
                and np.array_equal(self.values, other.values))

    def __hash__(self):
        return hash((self.breakpoints.tobytes(), self.values.tobytes()))

    def __repr__(self):
        if self.values.size == 0:
            return "StepFunction(zero)"
        lo, hi = self.support()
        return f"StepFunction({self.values.size} cells on [{lo}, {hi}))"


def haar_mother():
    """The Haar step: +1 on [0, 1/2), -1 on [1/2, 1)."""
    return StepFunction((0.0, 0.5, 1.0), (1.0, -1.0))
