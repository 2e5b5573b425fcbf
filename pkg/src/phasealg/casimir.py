"""Invariant operators: the quadratic Casimir, the epsilon-contracted
cubic/quartic Casimirs, and the generalized wave-operator check."""

from __future__ import annotations

from dataclasses import dataclass
from itertools import combinations, permutations

import numpy as np

from .core import (
    F,
    F_PAIRS,
    ID,
    InvalidInputError,
    METRIC_DIAG,
    P,
    X,
    representation_residual,
    structure_constants,
)
from .classify import SO6_PAIRS, so6_index


def levi_civita6():
    """Rank-6 totally antisymmetric array with eps[0,1,2,3,4,5] = +1."""
    eps = np.zeros((6,) * 6, dtype=np.int8)
    for perm in permutations(range(6)):
        sign = 1
        for i, j in combinations(range(6), 2):
            if perm[i] > perm[j]:
                sign = -sign
        eps[perm] = sign
    return eps


@dataclass
class CasimirReport:
    """An assembled invariant operator and its centrality diagnostics."""

    matrix: np.ndarray
    centrality_residual: float
    scalar_value: complex = None  # present iff matrix ~ scalar * identity


def centrality_residual(C, rep):
    return max(
        float(np.max(np.abs(C @ m - m @ C))) for m in rep.mats.values()
    )


def _scalar_part(C, tol):
    dim = C.shape[0]
    c = complex(np.trace(C)) / dim
    if float(np.max(np.abs(C - c * np.identity(dim)))) <= tol:
        return c
    return None


def _report(C, rep, tol):
    return CasimirReport(C, centrality_residual(C, rep), _scalar_part(C, tol))


def _validate_rep(rep, params, tol):
    t = structure_constants(params)
    res = representation_residual(rep, t)
    if res > max(tol, 1e-8):
        raise InvalidInputError(
            "representation does not satisfy the bracket relations for these "
            "parameters (residual %g)" % res
        )


def quadratic_casimir_matrix(rep, params):
    """Matrix of the quadratic invariant in terms of F, p, x and I:

        (l2 m2 - k^2) sum_{i<j} F_ij F^ij + I^2
        + k (x_i p^i + p_i x^i) - m2 x_i x^i - l2 p_i p^i

    with all indices raised by the Minkowski metric.  Generators absent
    from the representation (restricted subalgebra reps) contribute zero.
    """
    k, l2, m2 = params.kappa, params.lambda_sq, params.mu_sq
    dim = next(iter(rep.mats.values())).shape[0]
    C = np.zeros((dim, dim), dtype=complex)

    def mat(idx):
        return rep.mats.get(idx)

    coef_ff = float(l2 * m2 - k * k)
    for i, j in F_PAIRS:
        m = mat(F(i, j))
        if m is not None and coef_ff != 0:
            C += coef_ff * METRIC_DIAG[i] * METRIC_DIAG[j] * (m @ m)
    mi = mat(ID)
    if mi is not None:
        C += mi @ mi
    for i in range(4):
        g = METRIC_DIAG[i]
        mp, mx = mat(P(i)), mat(X(i))
        if mp is not None and mx is not None and k != 0:
            C += float(k) * g * (mx @ mp + mp @ mx)
        if mx is not None and m2 != 0:
            C -= float(m2) * g * (mx @ mx)
        if mp is not None and l2 != 0:
            C -= float(l2) * g * (mp @ mp)
    return C


def casimir_k2(rep, params, tol=1e-9):
    """Quadratic Casimir evaluated in a representation, with centrality check."""
    _validate_rep(rep, params, tol)
    return _report(quadratic_casimir_matrix(rep, params), rep, tol)


def _embedded_generators(rep, emb):
    """J_AB matrices (SO6_PAIRS order) in the representation, via the embedding."""
    B = emb.basis_map_array()
    dim = next(iter(rep.mats.values())).shape[0]
    Js = []
    for r in range(15):
        m = np.zeros((dim, dim), dtype=complex)
        for a in range(15):
            if B[r, a] != 0:
                m += B[r, a] * rep.mats[a]
        Js.append(m)
    return Js


def _raised_pair(Js, eta, A, B):
    """J^{AB} with both indices raised; antisymmetric in (A, B)."""
    if A == B:
        return None
    sign = eta[A] * eta[B]
    if A < B:
        return sign * Js[so6_index(A, B)]
    return -sign * Js[so6_index(B, A)]


def epsilon_pair_contraction(Js, eta):
    """G_AB = eps_ABCDEF J^{CD} J^{EF}, symmetrized over the two factors.

    Returns the 6x6 antisymmetric array of matrices (entries for A < B;
    the rest follow by antisymmetry).  G_AB is a tensor operator, not an
    invariant: its components do not commute with the algebra.
    """
    dim = Js[0].shape[0]
    G = {}
    for A, B in SO6_PAIRS:
        rest = [k for k in range(6) if k not in (A, B)]
        acc = np.zeros((dim, dim), dtype=complex)
        for perm in permutations(rest):
            C, D, E, Fi = perm
            sign = _perm_sign((A, B) + perm)
            j1 = _raised_pair(Js, eta, C, D)
            j2 = _raised_pair(Js, eta, E, Fi)
            acc += sign * 0.5 * (j1 @ j2 + j2 @ j1)
        G[(A, B)] = acc
    return G


def _perm_sign(seq):
    sign = 1
    for i, j in combinations(range(len(seq)), 2):
        if seq[i] > seq[j]:
            sign = -sign
    return sign


def casimir_eps(rep, emb, kind, tol=1e-9):
    """The epsilon-contracted invariants on the embedded J_AB basis.

    kind="K1": eps_ABCDEF J^{AB} J^{CD} J^{EF}, fully symmetrized over the
    three factors.  kind="K3": G_AB G^{AB} with G the pair contraction.
    """
    if kind not in ("K1", "K3"):
        raise InvalidInputError("kind must be 'K1' or 'K3'")
    eta = emb.six_metric
    Js = _embedded_generators(rep, emb)
    dim = Js[0].shape[0]
    if kind == "K1":
        C = np.zeros((dim, dim), dtype=complex)
        for perm in permutations(range(6)):
            sign = _perm_sign(perm)
            A, B, Cc, D, E, Fi = perm
            f1 = _raised_pair(Js, eta, A, B)
            f2 = _raised_pair(Js, eta, Cc, D)
            f3 = _raised_pair(Js, eta, E, Fi)
            acc = np.zeros((dim, dim), dtype=complex)
            for o1, o2, o3 in permutations((f1, f2, f3)):
                acc += o1 @ o2 @ o3
            C += sign / 6.0 * acc
        return _report(C, rep, tol)
    G = epsilon_pair_contraction(Js, eta)
    C = np.zeros((dim, dim), dtype=complex)
    for A, B in SO6_PAIRS:
        g = G[(A, B)]
        # full double sum = 2 * sum over A < B with both indices raised
        C += 2.0 * eta[A] * eta[B] * (g @ g)
    return _report(C, rep, tol)


def kgf_check(rep, params, tol=1e-9):
    """Evaluate the generalized wave operator on a representation.

    Returns (eigenvalue, satisfied): eigenvalue is the scalar value of the
    operator when it is scalar (None otherwise); satisfied means every
    vector of the representation solves the generalized wave equation.
    """
    report = casimir_k2(rep, params, tol=tol)
    if report.scalar_value is not None:
        return report.scalar_value, abs(report.scalar_value) <= tol
    # non-scalar: the equation holds on the whole space iff the kernel is full
    rank = np.linalg.matrix_rank(report.matrix, tol=tol)
    return None, rank == 0
