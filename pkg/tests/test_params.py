"""
Test suite for physical constants, unit conversions and system configuration.
"""

import json
import math

import numpy as np
import pytest
from scipy import constants as codata

from gravicav.errors import ApproximationDomainWarning, ConfigError, InvalidParameter, StrainTooLarge
from gravicav.models import Coherent, Vacuum
from gravicav.params import (
    DEFAULT_LN_CUTOFF_RATIO,
    CavityConfig,
    GwModeConfig,
    PhysicalConstants,
    SystemConfig,
    cavity_frequency_shift,
    coupling_from_config,
    coupling_q,
    frequency_shift,
    graviton_number_from_strain,
    ligo_phase_estimate,
    nbar,
    phase_amplitude,
    q_max,
    single_graviton_strain,
    upsilon_of_hubble,
    wave_energy,
    xi0_from_frequency,
)
from tests.conftest import OPTICAL_OMEGA0

KB_OVER_HBAR = codata.k / codata.hbar


class TestPhysicalConstants:

    def test_planck_frequency(self, constants):
        assert abs(constants.Epl / 1.855e43 - 1.0) < 1e-3

    def test_default_cutoff_ratio(self, constants):
        assert constants.ln_cutoff_ratio == DEFAULT_LN_CUTOFF_RATIO == 62.0

    def test_from_dict_aliases_and_envelope(self):
        k = PhysicalConstants.from_dict({"constants": {"lnCutoffRatio": 50, "k_B": 1.0, "unknown": 3}})
        assert k.ln_cutoff_ratio == 50.0
        assert k.kB == 1.0

    def test_from_file(self, tmp_path):
        path = tmp_path / "constants.json"
        path.write_text(json.dumps({"G": 1.0, "hbar": 1.0, "c": 1.0}), encoding="utf-8")
        k = PhysicalConstants.from_file(str(path))
        assert k.Epl == 1.0

    def test_from_file_bad_json(self, tmp_path):
        path = tmp_path / "constants.json"
        path.write_text("{ bad", encoding="utf-8")
        with pytest.raises(ConfigError):
            PhysicalConstants.from_file(str(path))

    def test_non_positive_constant(self):
        with pytest.raises(InvalidParameter):
            PhysicalConstants(G=-1.0)

    def test_to_dict_includes_planck_frequency(self, constants):
        assert constants.to_dict()["Epl"] == constants.Epl


class TestFrequencyShift:

    def test_first_order_shift(self):
        assert cavity_frequency_shift(2.0, 0.01) == pytest.approx(1.99)

    def test_shift_below_ulp(self):
        assert frequency_shift(1e15, 1e-21) == pytest.approx(-5e-7)

    def test_strain_too_large(self):
        with pytest.raises(StrainTooLarge):
            cavity_frequency_shift(1.0, 0.02)


class TestStrainAndCoupling:

    def test_single_graviton_round_trip(self):
        Omega, V = 2 * math.pi * 100, 1e3
        f_k = single_graviton_strain(Omega, V)
        assert abs(graviton_number_from_strain(f_k, Omega, V) - 1.0) < 1e-10

    def test_wave_energy_is_graviton_count(self, constants):
        Omega, V, f = 2 * math.pi * 50, 10.0, 1e-21
        quanta = wave_energy(f, Omega, V) / (constants.hbar * Omega)
        assert quanta == pytest.approx(graviton_number_from_strain(f, Omega, V), rel=1e-12)

    def test_phase_amplitude(self):
        Omega = 2 * math.pi * 100
        amplitude = phase_amplitude(OPTICAL_OMEGA0, Omega, 1e-21, 1.0)
        assert amplitude == pytest.approx(OPTICAL_OMEGA0 / Omega * 1e-21, rel=1e-10)
        assert amplitude == pytest.approx(2.8e-9, rel=0.02)

    @pytest.mark.parametrize("V", [1e-3, 1.0, 1e6, 1e12])
    def test_phase_amplitude_volume_independent(self, V):
        Omega = 2 * math.pi * 100
        assert phase_amplitude(OPTICAL_OMEGA0, Omega, 1e-21, V) == pytest.approx(
            phase_amplitude(OPTICAL_OMEGA0, Omega, 1e-21, 1.0), rel=1e-10
        )

    def test_coupling_below_planck_bound(self):
        assert coupling_q(OPTICAL_OMEGA0, 2 * math.pi * 100, 1.0) < 1.0

    def test_q_max(self):
        assert q_max(OPTICAL_OMEGA0) == pytest.approx(9.54e-29, rel=1e-2)

    def test_q_max_above_planck(self, constants):
        with pytest.raises(InvalidParameter):
            q_max(2 * constants.Epl)

    def test_ligo_estimate(self):
        assert ligo_phase_estimate(200, 4e3, 1064e-9, 1e-21) == pytest.approx(4.72e-9, rel=1e-2)

    def test_ligo_zero_strain(self):
        assert ligo_phase_estimate(200, 4e3, 1064e-9, 0.0) == 0.0

    def test_non_positive_volume(self):
        with pytest.raises(InvalidParameter):
            single_graviton_strain(1.0, 0.0)


class TestThermalAndCosmological:

    def test_nbar_high_temperature(self):
        assert nbar(2 * math.pi * 10, 1.0) == pytest.approx(2.08e9, rel=1e-2)

    def test_nbar_low_temperature_underflows_to_zero(self):
        assert nbar(1e16, 1e-3) == 0.0

    @pytest.mark.parametrize("T", [1e-2, 1.0, 300.0])
    def test_nbar_decreases_with_frequency(self, T):
        # ħΩ/k_BT from 1e-3 to 50
        values = [nbar(x * T * KB_OVER_HBAR, T) for x in np.geomspace(1e-3, 50.0, 25)]
        assert all(later < earlier for earlier, later in zip(values, values[1:]))

    @pytest.mark.parametrize("Omega", [2 * math.pi * 10, 2 * math.pi * 1e9])
    def test_nbar_increases_with_temperature(self, Omega):
        values = [nbar(Omega, T) for T in np.geomspace(1e-3, 1e3, 25)]
        assert all(later > earlier for earlier, later in zip(values, values[1:]))

    def test_upsilon(self):
        assert upsilon_of_hubble(1e-4) == pytest.approx(1e9)

    def test_xi0_large(self):
        assert xi0_from_frequency(1e9, 0.1) == pytest.approx(46.05, abs=0.01)

    def test_xi0_small_warns(self):
        with pytest.warns(ApproximationDomainWarning):
            xi0 = xi0_from_frequency(2.0, 1.0)
        assert xi0 == pytest.approx(math.asinh(2.0))

    def test_xi0_sub_horizon(self):
        with pytest.raises(InvalidParameter):
            xi0_from_frequency(1.0, 1.0)


class TestSystemConfig:

    def test_exactly_one_of_v_or_q(self):
        with pytest.raises(InvalidParameter):
            GwModeConfig(Omega=1.0).validate()
        with pytest.raises(InvalidParameter):
            GwModeConfig(Omega=1.0, V=1.0, q=0.1).validate()

    def test_coupling_from_q(self):
        cavity = CavityConfig(omega0=10.0)
        assert coupling_from_config(cavity, GwModeConfig(Omega=1.0, q=0.05)) == 0.05

    def test_coupling_from_volume(self):
        cavity = CavityConfig(omega0=OPTICAL_OMEGA0)
        mode = GwModeConfig(Omega=2 * math.pi * 100, V=1.0)
        assert coupling_from_config(cavity, mode) == pytest.approx(coupling_q(OPTICAL_OMEGA0, 2 * math.pi * 100, 1.0))

    def test_from_dict(self):
        config = SystemConfig.from_dict({
            "cavity": {"omega0": 10.0, "alpha": 2.0},
            "modes": [{"Omega": 1.0, "q": 0.1, "state": {"kind": "coherent", "lambda": 3}}],
            "tolerances": {"tail": 1e-6, "ignored": 5},
        })
        assert config.cavity.alpha == 2.0
        assert config.modes[0].state == Coherent(lam=3.0)
        assert config.tolerances.tail == 1e-6
        assert config.couplings() == [0.1]

    def test_default_state_is_vacuum(self):
        assert GwModeConfig.from_dict({"Omega": 1.0, "q": 0.1}).state == Vacuum()

    def test_no_modes(self):
        with pytest.raises(InvalidParameter):
            SystemConfig(cavity=CavityConfig(omega0=1.0), modes=[])

    def test_negative_cavity_frequency(self):
        with pytest.raises(InvalidParameter):
            SystemConfig(cavity=CavityConfig(omega0=-1.0), modes=[GwModeConfig(Omega=1.0, q=0.1)])
