"""Tests for the quark-mass arithmetic."""

import numpy as np
import pytest

from phasealg.core import UnsupportedDomainError
from phasealg.pheno import (
    DGLOptions,
    MassDomainError,
    MassInputs,
    current_mass,
    dgl_spectrum,
    load_quark_table,
    mu_s_from_masses,
)


class TestMuSFromMasses:
    def test_u_quark_numbers(self):
        assert mu_s_from_masses(MassInputs(316.0, 2.0)) == 157.0

    def test_equal_masses_rejected(self):
        with pytest.raises(MassDomainError):
            MassInputs(100.0, 100.0)

    def test_limiting_value_from_above(self):
        assert mu_s_from_masses(MassInputs(100.0 + 1e-9, 100.0)) == pytest.approx(
            0.0, abs=1e-9
        )

    def test_other_point(self):
        assert mu_s_from_masses(MassInputs(500.0, 186.0)) == 157.0

    def test_monotonicity(self):
        base = mu_s_from_masses(MassInputs(316.0, 2.0))
        assert mu_s_from_masses(MassInputs(320.0, 2.0)) > base
        assert mu_s_from_masses(MassInputs(316.0, 4.0)) < base


class TestCurrentMass:
    def test_inversion_of_u_quark(self):
        assert current_mass(316.0, 157.0) == 2.0

    def test_other_point(self):
        assert current_mass(500.0, 157.0) == 186.0

    def test_negative_result_rejected(self):
        with pytest.raises(MassDomainError):
            current_mass(300.0, 157.0)

    def test_round_trip(self):
        for m, m0 in [(316.0, 2.0), (500.0, 186.0), (450.0, 95.0)]:
            assert current_mass(m, mu_s_from_masses(MassInputs(m, m0))) == m0


class TestDglSpectrum:
    def test_u_quark_spectrum(self):
        vals = dgl_spectrum(2.0, DGLOptions(157.0))
        assert vals == [316.0, 316.0, 312.0, 312.0]

    def test_massless_case(self):
        assert dgl_spectrum(0.0, DGLOptions(157.0)) == [314.0] * 4

    def test_spread_and_mean(self):
        for m0, mu in [(2.0, 157.0), (10.0, 50.0), (0.5, 3.25)]:
            vals = dgl_spectrum(m0, DGLOptions(mu))
            assert max(vals) - min(vals) == pytest.approx(2 * m0)
            assert np.mean(vals) == pytest.approx(2 * mu)

    def test_real_spectrum(self):
        vals = dgl_spectrum(7.3, DGLOptions(41.2))
        assert all(isinstance(v, float) for v in vals)

    def test_spin_spin_gap_reported(self):
        """The residual spin-spin contraction shifts every eigenvalue by
        2|mu_s| * 3 (the scalar value of the full contraction), moving the
        spectrum away from the plain m0 + 2|mu_s| relation."""
        plain = dgl_spectrum(2.0, DGLOptions(157.0))
        shifted = dgl_spectrum(2.0, DGLOptions(157.0, include_spin_spin=True))
        gap = np.array(shifted) - np.array(plain)
        assert gap == pytest.approx([2 * 157.0 * 3.0] * 4)

    def test_orbital_terms_unsupported(self):
        with pytest.raises(UnsupportedDomainError):
            DGLOptions(157.0, include_orbital=True)

    def test_negative_m0_rejected(self):
        with pytest.raises(MassDomainError):
            dgl_spectrum(-1.0, DGLOptions(157.0))


class TestQuarkTable:
    def test_valid_table(self):
        table = load_quark_table({"u": {"constituent_MeV": 316}, "s": {"constituent_MeV": 480}})
        assert table == {"u": 316.0, "s": 480.0}

    def test_bad_entries_rejected(self):
        with pytest.raises(Exception):
            load_quark_table({"u": 316})
        with pytest.raises(Exception):
            load_quark_table({"u": {"constituent_MeV": -3}})
        with pytest.raises(Exception):
            load_quark_table([1, 2])
