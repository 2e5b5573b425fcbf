"""Quark-mass arithmetic: the reduced Dirac-type operator and the
constituent/current mass relation m = m0 + 2|mu_s|."""

from __future__ import annotations

from dataclasses import dataclass, field

import numpy as np

from .core import F_PAIRS, InvalidInputError, METRIC_DIAG, UnsupportedDomainError
from .spinor import gamma_basis


class MassDomainError(InvalidInputError):
    """Mass inputs outside the physically meaningful domain."""


@dataclass(frozen=True)
class MassInputs:
    """Constituent (m) and current (m0) quark masses in MeV."""

    m_constituent: float
    m_current: float

    def __post_init__(self):
        if self.m_constituent <= 0:
            raise MassDomainError("constituent mass must be positive")
        if self.m_current < 0:
            raise MassDomainError("current mass must be nonnegative")
        if not self.m_constituent > self.m_current:
            raise MassDomainError(
                "constituent mass must exceed current mass (m > m0); got "
                "m=%g, m0=%g" % (self.m_constituent, self.m_current)
            )


@dataclass(frozen=True)
class DGLOptions:
    """Switches for the reduced Dirac-type operator.

    mu_s is pure imaginary negative, mu_s = -i * mu_s_imag with
    mu_s_imag > 0, so the mass shift 2i*mu_s is real positive.  Orbital
    terms have no matrix realization here and cannot be enabled.
    """

    mu_s_imag: float
    include_spin_spin: bool = False
    include_orbital: bool = field(default=False)

    def __post_init__(self):
        if self.include_orbital:
            raise UnsupportedDomainError(
                "orbital terms are not realized; include_orbital must be False"
            )
        if self.mu_s_imag <= 0:
            raise MassDomainError("mu_s_imag must be positive")


def mu_s_from_masses(mi):
    """|mu_s| = (m - m0)/2 in MeV, from m = m0 + 2|mu_s|."""
    return (mi.m_constituent - mi.m_current) / 2.0


def current_mass(m_constituent, mu_abs):
    """Current-mass estimate m0 = m - 2|mu_s|; rejects nonpositive results."""
    if mu_abs < 0:
        raise MassDomainError("|mu_s| must be nonnegative")
    m0 = m_constituent - 2.0 * mu_abs
    if m0 <= 0:
        raise MassDomainError(
            "m - 2|mu_s| = %g is not positive: the constituent mass %g is too "
            "small for |mu_s| = %g" % (m0, m_constituent, mu_abs)
        )
    return m0


def dgl_operator(m0, opts):
    """The 4x4 reduced operator m0 gamma0 + 2|mu_s| (+ spin-spin term).

    On-shell momentum (m0, 0, 0, 0) and mu_s = -i|mu_s| make the
    gamma-contracted term 2i*mu_s*Identity = +2|mu_s|*Identity real.
    """
    if m0 < 0:
        raise MassDomainError("m0 must be nonnegative")
    gb = gamma_basis()
    D = m0 * gb.gamma[0] + 2.0 * opts.mu_s_imag * np.identity(4, dtype=complex)
    if opts.include_spin_spin:
        ss = np.zeros((4, 4), dtype=complex)
        for i, j in F_PAIRS:
            s = gb.S[(i, j)]
            # full double contraction S_ij S^ij = 2 * sum_{i<j}
            ss += 2.0 * METRIC_DIAG[i] * METRIC_DIAG[j] * (s @ s)
        D += 2.0 * opts.mu_s_imag * ss
    return D


def dgl_spectrum(m0, opts):
    """Eigenvalues of the reduced operator, sorted by descending real part.

    With the spin-spin term off these are {m0 + 2|mu_s|} and {-m0 + 2|mu_s|},
    each twice; the positive-energy branch reproduces m = m0 + 2|mu_s|.
    """
    D = dgl_operator(m0, opts)
    vals = np.linalg.eigvals(D)
    order = np.argsort(-vals.real)
    vals = vals[order]
    if float(np.max(np.abs(vals.imag))) < 1e-9:
        return [float(v.real) for v in vals]
    return [complex(v) for v in vals]


def load_quark_table(obj):
    """Validate a {flavor: {"constituent_MeV": R}} mapping."""
    if not isinstance(obj, dict):
        raise InvalidInputError("quark table must be a JSON object")
    table = {}
    for flavor, entry in obj.items():
        if not isinstance(entry, dict) or "constituent_MeV" not in entry:
            raise InvalidInputError(
                "quark table entry for %r must contain 'constituent_MeV'" % flavor
            )
        value = entry["constituent_MeV"]
        if not isinstance(value, (int, float)) or value <= 0:
            raise InvalidInputError("bad constituent mass for %r: %r" % (flavor, value))
        table[str(flavor)] = float(value)
    return table
