"""Killing form, inertia, classification and the pseudoorthogonal embedding."""

from __future__ import annotations

import math
from dataclasses import dataclass
from fractions import Fraction
from functools import lru_cache
from itertools import combinations

import numpy as np

from . import linalg
from .core import (
    DIM,
    F,
    F_PAIRS,
    ID,
    InternalConsistencyError,
    InvalidInputError,
    P,
    ParameterSet,
    Representation,
    StructureTensor,
    UnsupportedDomainError,
    X,
    _TableBuilder,
    is_exact,
    metric,
    rational_sqrt,
)


def adjoint_representation(t):
    """Adjoint matrices (rho_a)^c_b = i f^c_{ab} as complex arrays."""
    mats = {a: np.zeros((t.dim, t.dim), dtype=complex) for a in range(t.dim)}
    for (a, b), row in t.table.items():
        for c, v in row.items():
            mats[a][c, b] = 1j * float(v)
    return Representation(dim=t.dim, mats=mats, params=t.params)


def killing_form(t):
    """Killing-Cartan form K_ab = sum_{c,d} f^c_{ad} f^d_{bc}.

    The sign is that of the real Lie algebra, so compact directions come
    out negative: rotations like F(1,2) have negative diagonal entries,
    boosts like F(0,1) positive ones.
    """
    n = t.dim
    zero = Fraction(0) if t.exact else 0.0
    K = [[zero] * n for _ in range(n)]
    for (a, d), row in t.table.items():
        for c, v1 in row.items():
            for b in range(n):
                v2 = t.table.get((b, c), {}).get(d)
                if v2 is not None:
                    K[a][b] += v1 * v2
    if not t.exact:
        return np.array(K, dtype=float)
    return K


def killing_det(K):
    if isinstance(K, np.ndarray):
        return float(np.linalg.det(K))
    return linalg.det_exact(K)


def inertia(K, tol=1e-9):
    """Sylvester inertia of a symmetric form (exact or float)."""
    return linalg.inertia(K, tol=tol)


def semisimplicity_indicator(params):
    """lambda^2 mu^2 - kappa^2; nonzero exactly when the algebra is semisimple."""
    return params.lambda_sq * params.mu_sq - params.kappa * params.kappa


@dataclass(frozen=True)
class AlgebraClass:
    tag: str  # "SO(2,4)" | "SO(1,5)" | "SO(3,3)" | "Degenerate"
    reason: str = None

    @property
    def degenerate(self):
        return self.tag == "Degenerate"

    @property
    def signature(self):
        """(p, q) of the preserved 6-metric, or None if degenerate."""
        return {"SO(2,4)": (2, 4), "SO(1,5)": (1, 5), "SO(3,3)": (3, 3)}.get(self.tag)

    def __str__(self):
        if self.degenerate:
            return "Degenerate(%s)" % (self.reason or "")
        return self.tag


def deformation_gram(params):
    """The 2x2 symmetric Gram matrix [[mu^2, kappa], [kappa, lambda^2]]."""
    return ((params.mu_sq, params.kappa), (params.kappa, params.lambda_sq))


def classify(params, tol=1e-9):
    """Pseudoorthogonal class of the algebra at the given parameters."""
    det_q = semisimplicity_indicator(params)
    zero = det_q == 0 if params.exact else abs(det_q) <= tol
    if zero:
        return AlgebraClass("Degenerate", "det Q = 0 (lambda^2 mu^2 = kappa^2)")
    if det_q < 0:
        return AlgebraClass("SO(2,4)")
    # det Q > 0: mu^2 and lambda^2 are nonzero with a common sign
    if params.mu_sq > 0:
        return AlgebraClass("SO(1,5)")
    return AlgebraClass("SO(3,3)")


# ---------------------------------------------------------------------------
# canonical so(eta) algebra on the J_AB basis (A < B over 0..5)

SO6_PAIRS = tuple((a, b) for a, b in combinations(range(6), 2))
_SO6_INDEX = {pair: k for k, pair in enumerate(SO6_PAIRS)}


def so6_index(a, b):
    return _SO6_INDEX[(a, b)]


def so_structure_constants(eta_diag):
    """Structure constants of so(eta) for a diagonal 6-metric.

    [J_AB, J_CD] = i(eta_BC J_AD - eta_AC J_BD + eta_AD J_BC - eta_BD J_AC)
    """

    def eta(a, b):
        return eta_diag[a] if a == b else 0

    tb = _TableBuilder()

    def add_term(r, s, coef, m, n):
        if coef == 0 or m == n:
            return
        if m < n:
            tb.add(r, s, so6_index(m, n), coef)
        else:
            tb.add(r, s, so6_index(n, m), -coef)

    for pa, pb in combinations(SO6_PAIRS, 2):
        (a, b), (c, d) = pa, pb
        r, s = so6_index(a, b), so6_index(c, d)
        add_term(r, s, eta(b, c), a, d)
        add_term(r, s, -eta(a, c), b, d)
        add_term(r, s, eta(a, d), b, c)
        add_term(r, s, -eta(b, d), a, c)

    exact = is_exact(*eta_diag)
    names = tuple("J%d%d" % p for p in SO6_PAIRS)
    return StructureTensor(len(SO6_PAIRS), tb.finish(), exact, names=names)


@lru_cache(maxsize=None)
def canonical_inertia(p, q):
    """Killing inertia of the textbook so(p,q) algebra (p + q = 6)."""
    eta = (1,) * p + (-1,) * q
    K = killing_form(so_structure_constants(eta))
    return linalg.inertia_exact(K)


# ---------------------------------------------------------------------------
# explicit embedding into the canonical J_AB basis

@dataclass
class Embedding:
    """Change of basis onto the canonical so(eta) generators.

    ``basis_map`` rows give J_AB (in SO6_PAIRS order) as combinations of
    the 15 algebra generators; ``six_metric`` is the diagonal 6-metric.
    """

    six_metric: tuple
    basis_map: object  # 15x15, nested Fractions (exact) or ndarray (float)
    s_matrix: object  # the 2x2 congruence transform of the (p, x) Gram
    params: ParameterSet
    exact: bool

    def basis_map_array(self):
        return np.array([[float(v) for v in row] for row in self.basis_map])


def _diagonalize_gram(params, exact):
    """Columns c4, c5 with c^T Q c = diag(sigma4, sigma5), sigma in {+1,-1}."""
    m2, k, l2 = params.mu_sq, params.kappa, params.lambda_sq
    det_q = semisimplicity_indicator(params)

    def norm_col(col, quad):
        # quad = col^T Q col before normalization
        sigma = 1 if quad > 0 else -1
        if exact:
            root = rational_sqrt(Fraction(abs(quad)))
            if root is None:
                return None
            return (Fraction(col[0]) / root, Fraction(col[1]) / root), sigma
        root = math.sqrt(abs(float(quad)))
        return (float(col[0]) / root, float(col[1]) / root), sigma

    def div(a, b):
        return Fraction(a) / Fraction(b) if exact else a / b

    if m2 != 0:
        pairs = [((1, 0), m2), ((div(-k, m2), 1), div(det_q, m2))]
    elif l2 != 0:
        pairs = [((0, 1), l2), ((1, div(-k, l2)), div(det_q, l2))]
    else:
        # mu^2 = lambda^2 = 0, kappa != 0: hyperbolic plane
        pairs = [((1, 1), 2 * k), ((1, -1), -2 * k)]
    cols, sigmas = [], []
    for col, quad in pairs:
        res = norm_col(col, quad)
        if res is None:
            return None
        cols.append(res[0])
        sigmas.append(res[1])
    return cols, sigmas


def pseudo_orthogonal_embedding(params, tol=1e-9):
    """Basis change onto canonical so(eta) generators; semisimple points only.

    Verified at construction: the transformed structure constants must match
    the canonical ones entrywise (exactly in exact mode, else within tol).
    """
    if classify(params, tol=tol).degenerate:
        raise InvalidInputError("embedding requires a semisimple point (det Q != 0)")
    exact = params.exact
    res = _diagonalize_gram(params, exact)
    if res is None:
        # rational normalizers unavailable; fall back to floats
        exact = False
        params_f = params.as_floats()
        res = _diagonalize_gram(params_f, False)
        params = params_f
    cols, sigmas = res
    (a4, b4), (a5, b5) = cols
    det_s = a4 * b5 - a5 * b4
    eps = tuple(-s for s in sigmas)
    six_metric = (1, -1, -1, -1) + eps

    zero = Fraction(0) if exact else 0.0
    basis_map = [[zero] * DIM for _ in range(DIM)]
    for r, (A, B) in enumerate(SO6_PAIRS):
        if B <= 3:
            basis_map[r][F(A, B)] = Fraction(1) if exact else 1.0
        elif A <= 3 and B == 4:
            basis_map[r][P(A)] = a4
            basis_map[r][X(A)] = b4
        elif A <= 3 and B == 5:
            basis_map[r][P(A)] = a5
            basis_map[r][X(A)] = b5
        else:  # (4, 5)
            basis_map[r][ID] = -det_s

    emb = Embedding(six_metric, basis_map, ((a4, a5), (b4, b5)), params, exact)
    dev = embedding_deviation(emb)
    limit = 0 if exact else tol
    if dev > limit:
        raise InternalConsistencyError(
            "embedding does not reproduce canonical constants (deviation %r)" % dev
        )
    sig = (sum(1 for e in six_metric if e > 0), sum(1 for e in six_metric if e < 0))
    cls = classify(params, tol=tol).signature
    if sig != cls:
        raise InternalConsistencyError(
            "embedding signature %r disagrees with classification %r" % (sig, cls)
        )
    return emb


def transform_structure_constants(t, basis_map, exact):
    """Structure constants in the new basis J_r = sum_a B[r][a] T_a."""
    n = t.dim
    if not exact:
        B = np.array([[float(v) for v in row] for row in basis_map])
        Binv = np.linalg.inv(B)
        D = t.dense()
        return np.einsum("pa,qb,cab,cr->rpq", B, B, D, Binv)
    B = [[Fraction(v) for v in row] for row in basis_map]
    Binv = _invert_exact(B)
    out = [[[Fraction(0)] * n for _ in range(n)] for _ in range(n)]  # [r][p][q]
    for (a, b), row in t.table.items():
        for c, v in row.items():
            for p in range(n):
                Bpa = B[p][a]
                if Bpa == 0:
                    continue
                for q in range(n):
                    w = Bpa * B[q][b] * v
                    if w == 0:
                        continue
                    for r in range(n):
                        if Binv[c][r] != 0:
                            out[r][p][q] += w * Binv[c][r]
    return out


def _invert_exact(mat):
    n = len(mat)
    m = [[Fraction(v) for v in row] for row in mat]
    inv = [[Fraction(1) if i == j else Fraction(0) for j in range(n)] for i in range(n)]
    for col in range(n):
        piv = next((r for r in range(col, n) if m[r][col] != 0), None)
        if piv is None:
            raise InvalidInputError("basis map is singular")
        m[col], m[piv] = m[piv], m[col]
        inv[col], inv[piv] = inv[piv], inv[col]
        scale = Fraction(1) / m[col][col]
        m[col] = [v * scale for v in m[col]]
        inv[col] = [v * scale for v in inv[col]]
        for r in range(n):
            if r == col or m[r][col] == 0:
                continue
            factor = m[r][col]
            m[r] = [v - factor * w for v, w in zip(m[r], m[col])]
            inv[r] = [v - factor * w for v, w in zip(inv[r], inv[col])]
    return inv


def embedding_deviation(emb):
    """Max |transformed - canonical| structure constant for the embedding."""
    from .core import structure_constants

    t = structure_constants(emb.params)
    canon = so_structure_constants(emb.six_metric)
    if emb.exact:
        got = transform_structure_constants(t, emb.basis_map, True)
        worst = Fraction(0)
        for p in range(DIM):
            for q in range(DIM):
                row = canon.table.get((p, q), {})
                for r in range(DIM):
                    dev = abs(got[r][p][q] - row.get(r, 0))
                    if dev > worst:
                        worst = dev
        return worst
    got = transform_structure_constants(t, emb.basis_map, False)
    # got is [r][p][q]; the dense canonical tensor is [c][a][b], same roles
    return float(np.max(np.abs(got - canon.dense())))
