"""Lattice sampling of translated-generator frames.

Replacing the reconstruction integral by a Riemann sum over the lattice
t_j = offset + j*h turns the continuous family into a discrete frame with
weighted functionals h * f_t.  When h is commensurate with the cell grid
of every integrand, each lattice cell holds exactly one sample and the
Riemann sum IS the integral, so reconstruction is exact up to float
rounding.  Incommensurate steps leave a genuine discretization error that
the sweep quantifies against refinement.
"""

import dataclasses
import math

import numpy as np

from .intervals import IntervalSet
from .diagnostics import DiscreteFrame, SpaceTag
from .lp import CoordinateVector


@dataclasses.dataclass(frozen=True)
class SamplingPlan:
    """Lattice step, offset, parameter window and quadrature weight rule."""
    step: float
    window: IntervalSet
    offset: float = 0.0
    weight_rule: str = "riemann"

    def __post_init__(self):
        if not self.step > 0:
            raise ValueError("lattice step must be positive")
        if self.weight_rule != "riemann":
            raise ValueError("only the 'riemann' weight rule is supported")
        if not isinstance(self.window, IntervalSet):
            raise TypeError("window must be an IntervalSet")

    def points(self):
        """All lattice points inside the window, in increasing order."""
        hull = self.window.hull()
        if hull is None:
            return np.empty(0)
        lo, hi = hull
        j_min = math.ceil((lo - self.offset) / self.step - 1e-12)
        j_max = math.floor((hi - self.offset) / self.step + 1e-12)
        ts = self.offset + np.arange(j_min, j_max + 1) * self.step
        return np.array([t for t in ts if self.window.contains(t)])


def _coefficient_rows(g, ts, window):
    """Matrix F[j, i] = f(t_j - n_i) for the window coordinates n_i."""
    ns = np.arange(-window, window + 1)
    if len(ts) == 0:
        return ns, np.zeros((0, ns.size))
    return ns, g.f.evaluate(np.asarray(ts)[:, None] - ns[None, :])


def sample_frame(g, plan, window, p=2.0):
    """Discrete frame of Riemann-weighted samples of the continuous family.

    Pair j is (coefficient vector at t_j, h * same vector); coordinates run
    over |n| <= window.
    """
    ts = plan.points()
    ns, rows = _coefficient_rows(g, ts, window)
    pairs = []
    for row in rows:
        vec = CoordinateVector({int(n): float(v)
                                for n, v in zip(ns, row) if v != 0.0})
        pairs.append((vec, vec.scale(plan.step)))
    return DiscreteFrame(pairs=tuple(pairs), space=SpaceTag.lp(p))


def default_window(g, window):
    """Parameter window wide enough to cover every integrand for |n| <= window."""
    lo, hi = g.f.support()
    return IntervalSet([(lo - window, hi + window)])


def reconstruction_matrix(g, plan, window):
    """Lattice reconstruction of every unit vector, as a matrix over the window.

    Row n holds the coordinates of sum_j h * f_{t_j}(e_n) * x_{t_j}, which
    is the Riemann sum approximation of the restricted reconstruction
    integral.  Built with sequential dot products so reruns are bit stable.
    """
    ts = plan.points()
    _, rows = _coefficient_rows(g, ts, window)
    size = rows.shape[1]
    mat = np.zeros((size, size))
    for i in range(size):
        for j in range(i, size):
            val = plan.step * float(np.dot(rows[:, i], rows[:, j]))
            mat[i, j] = val
            mat[j, i] = val
    return mat


@dataclasses.dataclass(frozen=True)
class SweepRow:
    step: float
    num_samples: int
    max_error: float
    exact: bool


def sampling_sweep(g, steps, window, p=2.0, offset=0.0, exact_tol=1e-10):
    """Reconstruction error of the sampled frame for each lattice step.

    ``max_error`` is the worst lp error over all unit vectors in the
    window; ``exact`` flags errors below ``exact_tol``.  Steps commensurate
    with the generator grid come out exact; refining an incommensurate
    step shrinks the error.
    """
    rows = []
    region = default_window(g, window)
    for h in steps:
        plan = SamplingPlan(step=float(h), window=region, offset=offset)
        mat = reconstruction_matrix(g, plan, window)
        size = mat.shape[0]
        worst = 0.0
        for i in range(size):
            diff = mat[i].copy()
            diff[i] -= 1.0
            err = float(np.sum(np.abs(diff) ** p) ** (1.0 / p))
            worst = max(worst, err)
        rows.append(SweepRow(step=float(h),
                             num_samples=len(plan.points()),
                             max_error=worst,
                             exact=worst < exact_tol))
    return rows


def commensurate_step(g, max_halvings=40):
    """A lattice step h with every breakpoint of the generator in h*Z and 1/h integer.

    Starts from the narrowest cell and halves until the divisibility test
    passes; generators built on dyadic grids succeed immediately.
    """
    bp = g.f.breakpoints
    w = float(np.min(np.diff(bp)))
    for _ in range(max_halvings):
        ratios = bp / w
        unit = 1.0 / w
        if (np.all(np.abs(ratios - np.round(ratios)) < 1e-9)
                and abs(unit - round(unit)) < 1e-9):
            return w
        w /= 2.0
    raise ValueError("no commensurate lattice step found; generator grid is not dyadic")
