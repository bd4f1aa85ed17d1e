"""Discrete frame diagnostics: tail functionals, completeness probes, and
an exact sign-cancellation counterexample.

A DiscreteFrame is a finite list of (vector, functional) pairs over a
tagged sequence space.  The probes mirror the structural dichotomies of
frame theory: decaying tail functional norms witness a shrinking family,
Cauchy partial sums against double-dual coefficients witness bounded
completeness, and the alternating triple frame below shows how a family
can reconstruct every vector from the full index set while a restricted
index set pushes the candidate limit out of c0 entirely.  That frame is
built from integer data and every check on it is exact integer
arithmetic.
"""

import dataclasses
import math

import numpy as np

from .lp import CoordinateVector


@dataclasses.dataclass(frozen=True)
class SpaceTag:
    """Sequence space label: lp(p) with 1 < p < inf, or c0, or l1."""
    kind: str
    p: float | None = None

    def __post_init__(self):
        if self.kind not in ("lp", "c0", "l1"):
            raise ValueError("kind must be 'lp', 'c0' or 'l1'")
        if self.kind == "lp":
            if self.p is None or not 1.0 < self.p < math.inf:
                raise ValueError("lp tag needs a finite p > 1")
        elif self.p is not None:
            raise ValueError(f"{self.kind} does not take an exponent")

    @classmethod
    def lp(cls, p):
        return cls("lp", float(p))

    @classmethod
    def c0(cls):
        return cls("c0")

    @classmethod
    def l1(cls):
        return cls("l1")

    def norm(self, v):
        if self.kind == "lp":
            return v.norm(self.p)
        if self.kind == "c0":
            return v.norm(math.inf)
        return v.norm(1)

    def dual_norm(self, v):
        """Norm in the dual space: lq for lp, l1 for c0, sup for l1."""
        if self.kind == "lp":
            return v.norm(self.p / (self.p - 1.0))
        if self.kind == "c0":
            return v.norm(1)
        return v.norm(math.inf)

    def label(self):
        return f"lp({self.p})" if self.kind == "lp" else self.kind


@dataclasses.dataclass(frozen=True)
class DiscreteFrame:
    """Finite family of (vector, functional) pairs over a tagged space."""
    pairs: tuple
    space: SpaceTag

    def __len__(self):
        return len(self.pairs)

    def reconstruct(self, x, positions=None):
        """sum over j of f_j(x) * x_j, restricted to the given pair positions."""
        if positions is None:
            positions = range(len(self.pairs))
        total = {}
        for j in positions:
            vec, fun = self.pairs[j]
            c = fun.pair(x)
            if c != 0:
                for n, v in vec.items():
                    total[n] = total.get(n, 0) + c * v
        return CoordinateVector(total)

    def max_unit_reconstruction_error(self, coordinates):
        """Worst space-norm error reconstructing unit vectors at the given coordinates."""
        worst = 0.0
        for n in coordinates:
            e = CoordinateVector.unit(n)
            err = self.space.norm(self.reconstruct(e).sub(e))
            worst = max(worst, err)
        return worst


def unit_vector_frame(space, coordinates):
    """The coordinate frame (e_n, e_n*) over the listed coordinates."""
    pairs = tuple((CoordinateVector.unit(n), CoordinateVector.unit(n))
                  for n in coordinates)
    return DiscreteFrame(pairs=pairs, space=space)


def project_frame(frame, kept_coordinates):
    """Push the frame through a coordinate projection (vectors and functionals)."""
    keep = set(kept_coordinates)
    pairs = tuple((vec.restrict(keep), fun.restrict(keep))
                  for vec, fun in frame.pairs)
    return DiscreteFrame(pairs=pairs, space=frame.space)


# -- tail functionals ---------------------------------------------------------


@dataclasses.dataclass(frozen=True)
class TailReport:
    positions: tuple
    tail_dual_norm: float
    estimate: float


def tail_functional(frame, f, positions):
    """Coordinates of x -> f(sum_{j outside positions} f_j(x) x_j)."""
    inside = set(positions)
    total = {}
    for j in range(len(frame.pairs)):
        if j in inside:
            continue
        vec, fun = frame.pairs[j]
        weight = f.pair(vec)
        if weight != 0:
            for n, v in fun.items():
                total[n] = total.get(n, 0) + weight * v
    return CoordinateVector(total)


def tail_dual_norm(frame, f, positions):
    """Exact dual-space norm of the tail functional outside the given positions.

    For a unit-vector frame this is just the dual norm of f restricted to
    the coordinates not covered by ``positions``.
    """
    return frame.space.dual_norm(tail_functional(frame, f, positions))


def _unit_sphere_draw(rng, space, coordinates):
    vals = rng.standard_normal(len(coordinates))
    v = CoordinateVector({n: float(c) for n, c in zip(coordinates, vals)})
    norm = space.norm(v)
    if norm == 0.0:
        return None
    return v.scale(1.0 / norm)


def _dual_witnesses(space, g):
    """Unit vectors at which a coordinate functional attains its dual norm."""
    support = g.support()
    if not support:
        return []
    out = [CoordinateVector.unit(n) for n in support]
    if space.kind == "c0":
        out.append(CoordinateVector({n: 1.0 if g[n] > 0 else -1.0 for n in support}))
    elif space.kind == "lp":
        q = space.p / (space.p - 1.0)
        w = CoordinateVector({n: math.copysign(abs(g[n]) ** (q - 1.0), g[n])
                              for n in support})
        norm = space.norm(w)
        if norm > 0.0:
            out.append(w.scale(1.0 / norm))
    else:
        top = max(support, key=lambda n: abs(g[n]))
        out.append(CoordinateVector.unit(top, 1.0 if g[top] > 0 else -1.0))
    return out


def estimate_tail_dual_norm(frame, f, positions, trials=10000, seed=0):
    """Maximize |f(tail reconstruction of x)| over random unit x plus witnesses.

    A lower-bound estimator for the exact route; included so the two can be
    cross-checked.  The witness vectors make the estimate attain the exact
    value for all three space tags.
    """
    g = tail_functional(frame, f, positions)
    if g.is_zero():
        return 0.0
    coordinates = sorted({n for vec, fun in frame.pairs
                          for n in vec.support()} | set(g.support()))
    rng = np.random.default_rng(seed)
    best = 0.0
    for x in _dual_witnesses(frame.space, g):
        best = max(best, abs(g.pair(x)))
    for _ in range(trials):
        x = _unit_sphere_draw(rng, frame.space, coordinates)
        if x is not None:
            best = max(best, abs(g.pair(x)))
    return best


def tail_report(frame, f, positions, trials=10000, seed=0):
    return TailReport(positions=tuple(sorted(positions)),
                      tail_dual_norm=tail_dual_norm(frame, f, positions),
                      estimate=estimate_tail_dual_norm(frame, f, positions,
                                                       trials, seed))


# -- bounded completeness probe ----------------------------------------------


@dataclasses.dataclass(frozen=True)
class CompletenessReport:
    increments: tuple
    tol: float

    @property
    def non_cauchy(self):
        """True when the last nested increment has not decayed below tol."""
        return bool(self.increments and self.increments[-1] > self.tol)


def boundedly_complete_probe(frame, xss, nesting, tol=1e-10):
    """Norms of partial-sum increments against double-dual coefficients.

    ``xss`` plays the role of a double-dual element acting on the frame
    functionals by coordinate pairing.  For each consecutive pair E inside F
    of ``nesting`` the report holds || P_F(xss) - P_E(xss) || in the frame's
    space norm.  A flat, non-decaying increment sequence flags the limit as
    escaping the space.
    """
    partials = []
    for positions in nesting:
        total = {}
        for j in positions:
            vec, fun = frame.pairs[j]
            c = xss.pair(fun)
            if c != 0:
                for n, v in vec.items():
                    total[n] = total.get(n, 0) + c * v
        partials.append(CoordinateVector(total))
    increments = tuple(
        float(frame.space.norm(b.sub(a)))
        for a, b in zip(partials[:-1], partials[1:]))
    return CompletenessReport(increments=increments, tol=tol)


# -- suppression behaviour -----------------------------------------------------


def suppression_ratio_scan(frame, trials=200, seed=0):
    """Max of ||restricted reconstruction|| / ||x|| over random x and index subsets."""
    coordinates = sorted({n for vec, _ in frame.pairs for n in vec.support()})
    rng = np.random.default_rng(seed)
    worst = 0.0
    for _ in range(trials):
        x = _unit_sphere_draw(rng, frame.space, coordinates)
        if x is None:
            continue
        mask = rng.integers(0, 2, size=len(frame.pairs)).astype(bool)
        positions = [j for j in range(len(frame.pairs)) if mask[j]]
        worst = max(worst, frame.space.norm(frame.reconstruct(x, positions)))
    return worst


# -- the alternating triple frame ----------------------------------------------


def counterexample_frame(K):
    """Frame of c0 pairing each basis vector with a cancelling sign triple.

    Block j contributes (e_j, e_j*), (e_j, -e_1*), (e_j, e_1*) for
    j = 1..K.  Summed over a full block the last two functionals cancel,
    so full-index reconstruction is exact; summed over every third index
    they do not, and the candidate limit leaves c0.  All data are ints.
    """
    if K < 1:
        raise ValueError("K must be a positive integer")
    pairs = []
    for j in range(1, K + 1):
        e_j = CoordinateVector.unit(j)
        pairs.append((e_j, CoordinateVector.unit(j)))
        pairs.append((e_j, CoordinateVector.unit(1, -1)))
        pairs.append((e_j, CoordinateVector.unit(1)))
    return DiscreteFrame(pairs=tuple(pairs), space=SpaceTag.c0())


def _restricted_dual_functional(f, positions_one_based, K):
    """Closed form for the restricted dual functional of the triple frame.

    Splits the index set by residue mod 3: residue-1 indices contribute
    f(e_j) e_j*, residue-0 indices contribute f(e_j) e_1*, residue-2
    indices contribute -f(e_j) e_1*, with j the block of the index.  Exact
    for integer-valued f.
    """
    total = {}
    for n in positions_one_based:
        if not 1 <= n <= 3 * K:
            raise ValueError(f"index {n} outside the frame")
        if n % 3 == 1:
            j = (n + 2) // 3
            total[j] = total.get(j, 0) + f[j]
        elif n % 3 == 0:
            j = n // 3
            total[1] = total.get(1, 0) + f[j]
        else:
            j = (n + 1) // 3
            total[1] = total.get(1, 0) - f[j]
    return CoordinateVector(total)


@dataclasses.dataclass(frozen=True)
class CounterexampleReport:
    K: int
    full_reconstruction_exact: bool
    restricted_coordinates_all_one: bool
    restricted_escapes_c0: bool
    dual_series_matches_direct: bool
    dual_action_matches_sum: bool

    @property
    def ok(self):
        return (self.full_reconstruction_exact
                and self.restricted_coordinates_all_one
                and self.restricted_escapes_c0
                and self.dual_series_matches_direct
                and self.dual_action_matches_sum)


def counterexample_report(K, reconstruction_limit=50):
    """Run the exact checks on the alternating triple frame of size K.

    Verifies full-index reconstruction of e_j for j up to the limit, the
    all-ones candidate produced by the every-third-index set (which has
    sup-norm 1 but no coordinate decay, so it cannot lie in c0), and the
    closed-form restricted dual functional against the direct sum.
    """
    frame = counterexample_frame(K)

    full = True
    for j in range(1, min(K, reconstruction_limit) + 1):
        e = CoordinateVector.unit(j)
        if frame.reconstruct(e) != e:
            full = False
            break

    # every third pair carries functional e_1*, so testing against e_1
    # accumulates one copy of each block vector
    thirds = [j for j in range(len(frame.pairs)) if (j + 1) % 3 == 0]
    candidate = frame.reconstruct(CoordinateVector.unit(1), thirds)
    coords_one = (len(candidate) == K
                  and all(candidate[j] == 1 for j in range(1, K + 1)))
    escapes = coords_one and K >= 2  # constant nonzero coordinates never decay

    f = CoordinateVector({1: 3, 2: -2, 5: 7})
    rng_positions = [n for n in range(1, 3 * K + 1) if n % 3 == 0]
    series = _restricted_dual_functional(f, rng_positions, K)
    direct_terms = {}
    for n in rng_positions:
        vec, fun = frame.pairs[n - 1]
        w = f.pair(vec)
        if w != 0:
            for idx, v in fun.items():
                direct_terms[idx] = direct_terms.get(idx, 0) + w * v
    direct = CoordinateVector(direct_terms)
    series_ok = series == direct

    x = CoordinateVector({1: 2, 2: -1, 5: 4})
    lhs = series.pair(x)
    rhs = 0
    for n in rng_positions:
        vec, fun = frame.pairs[n - 1]
        rhs += fun.pair(x) * f.pair(vec)
    action_ok = lhs == rhs

    return CounterexampleReport(
        K=K,
        full_reconstruction_exact=full,
        restricted_coordinates_all_one=coords_one,
        restricted_escapes_c0=escapes,
        dual_series_matches_direct=series_ok,
        dual_action_matches_sum=action_ok,
    )
