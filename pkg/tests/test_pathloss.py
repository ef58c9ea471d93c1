import math

import numpy as np
import pytest

from irsnoma.errors import DomainError, ValidationError
from irsnoma.pathloss import (
    AntennaGains,
    IncidenceAngles,
    IrsPanel,
    conventional_link_db,
    conventional_segment_db,
    irs_pathloss_linear,
    scattering_gain,
)
from irsnoma.units import linear_to_db, wavelength_m

TABLE_PANEL = IrsPanel(m_elems=64, n_elems=64, dx=0.0038, dy=0.0038, reflection_a=0.9)
TABLE_ANGLES = IncidenceAngles(45.0, 45.0)
MODIFIED_GAINS = AntennaGains(5.0, 5.0)
CARRIER_HZ = 90e9


class TestConventionalSegment:
    def test_unit_distance(self):
        assert conventional_segment_db(1.0) == 35.1

    def test_ten_metres(self):
        assert conventional_segment_db(10.0) == pytest.approx(71.8, abs=1e-12)

    def test_hundred_metres(self):
        assert conventional_segment_db(100.0) == pytest.approx(108.5, abs=1e-12)

    def test_rejects_non_positive(self):
        with pytest.raises(DomainError):
            conventional_segment_db(0.0)

    def test_warns_below_far_field_distance(self):
        with pytest.warns(UserWarning):
            conventional_segment_db(0.5)


class TestConventionalLink:
    def test_reference_link(self):
        db = conventional_link_db(50.0, 10.0, AntennaGains(10.0, 10.0))
        assert db == pytest.approx(149.252, abs=0.01)

    def test_twenty_db_gains(self):
        db = conventional_link_db(50.0, 10.0, AntennaGains(20.0, 20.0))
        assert db == pytest.approx(129.252, abs=0.01)

    def test_unit_segments_zero_gain(self):
        assert conventional_link_db(1.0, 1.0, AntennaGains(0.0, 0.0)) == pytest.approx(70.2)

    def test_symmetric_in_distances(self):
        gains = AntennaGains(10.0, 10.0)
        assert conventional_link_db(50.0, 10.0, gains) == conventional_link_db(10.0, 50.0, gains)

    def test_per_segment_mode_subtracts_gains_twice(self):
        gains = AntennaGains(10.0, 10.0)
        per_link = conventional_link_db(50.0, 10.0, gains, mode="per_link")
        per_segment = conventional_link_db(50.0, 10.0, gains, mode="per_segment")
        assert per_segment == pytest.approx(per_link - 20.0, abs=1e-12)

    def test_unknown_mode_rejected(self):
        with pytest.raises(ValidationError):
            conventional_link_db(50.0, 10.0, AntennaGains(10.0, 10.0), mode="per_hop")

    def test_monotone_in_each_distance(self):
        gains = AntennaGains(10.0, 10.0)
        assert conventional_link_db(51.0, 10.0, gains) > conventional_link_db(50.0, 10.0, gains)
        assert conventional_link_db(50.0, 11.0, gains) > conventional_link_db(50.0, 10.0, gains)


class TestScatteringGain:
    def test_wavelength_sized_element_cancels(self):
        lam = 0.01
        panel = IrsPanel(dx=lam, dy=lam)
        assert scattering_gain(panel, lam) == pytest.approx(4 * math.pi, rel=1e-12)

    def test_reference_panel(self):
        assert scattering_gain(TABLE_PANEL, wavelength_m(CARRIER_HZ)) == pytest.approx(16.354, abs=0.005)

    def test_doubling_wavelength_quarters_gain(self):
        lam = wavelength_m(CARRIER_HZ)
        assert scattering_gain(TABLE_PANEL, 2 * lam) == pytest.approx(
            scattering_gain(TABLE_PANEL, lam) / 4.0, rel=1e-12
        )

    def test_rejects_non_positive_wavelength(self):
        with pytest.raises(DomainError):
            scattering_gain(TABLE_PANEL, 0.0)


def reference_loss(**overrides):
    args = dict(
        d1=50.0, d2=10.0, panel=TABLE_PANEL, angles=TABLE_ANGLES,
        gains=MODIFIED_GAINS, carrier_hz=CARRIER_HZ,
    )
    args.update(overrides)
    return irs_pathloss_linear(**args)


class TestSurfacePathloss:
    def test_reference_configuration(self):
        loss = reference_loss()
        assert loss == pytest.approx(2.786e9, rel=2e-4)
        assert linear_to_db(loss) == pytest.approx(94.45, abs=0.05)

    def test_distance_product_scaling_is_exact(self):
        assert reference_loss(d1=100.0, d2=20.0) == 16.0 * reference_loss()

    def test_halving_reflection_quadruples_loss(self):
        panel = IrsPanel(dx=0.0038, dy=0.0038, reflection_a=0.45)
        assert reference_loss(panel=panel) == 4.0 * reference_loss()

    def test_frequency_cancels_through_scattering_gain(self):
        # The lam^2 factor cancels against the aperture term, so the loss is
        # pinned frequency-independent: loss(2f) / loss(f) = 1 exactly.
        assert reference_loss(carrier_hz=2 * CARRIER_HZ) == reference_loss()

    def test_rejects_grazing_angles(self):
        with pytest.raises(ValidationError):
            IncidenceAngles(theta_t_deg=90.0)

    def test_rejects_zero_distance(self):
        with pytest.raises(DomainError):
            reference_loss(d1=0.0)

    def test_monotone_in_each_distance(self):
        assert reference_loss(d1=51.0) > reference_loss()
        assert reference_loss(d2=11.0) > reference_loss()


class TestScalingIdentities:
    """Randomized scaling laws of the product-distance quotient."""

    @staticmethod
    def random_cases(n):
        rng = np.random.default_rng(321)
        for _ in range(n):
            yield dict(
                d1=float(rng.uniform(1.0, 200.0)),
                d2=float(rng.uniform(1.0, 200.0)),
                panel=IrsPanel(
                    m_elems=int(rng.integers(1, 129)),
                    n_elems=int(rng.integers(1, 129)),
                    dx=float(rng.uniform(1e-4, 0.05)),
                    dy=float(rng.uniform(1e-4, 0.05)),
                    reflection_a=float(rng.uniform(0.05, 1.0)),
                ),
                angles=IncidenceAngles(
                    theta_t_deg=float(rng.uniform(-80.0, 80.0)),
                    theta_r_deg=float(rng.uniform(-80.0, 80.0)),
                ),
                gains=AntennaGains(float(rng.uniform(-10, 30)), float(rng.uniform(-10, 30))),
                carrier_hz=float(rng.uniform(1e9, 3e11)),
            )

    def test_distance_element_reflection_and_angle_scalings(self):
        for case in self.random_cases(250):
            base = irs_pathloss_linear(**case)

            doubled_d = irs_pathloss_linear(**{**case, "d1": 2 * case["d1"], "d2": 2 * case["d2"]})
            assert doubled_d == pytest.approx(16.0 * base, rel=1e-12)

            panel = case["panel"]
            more_elems = IrsPanel(2 * panel.m_elems, 2 * panel.n_elems, panel.dx, panel.dy,
                                  panel.reflection_a)
            assert irs_pathloss_linear(**{**case, "panel": more_elems}) == pytest.approx(
                base / 16.0, rel=1e-12
            )

            half_a = IrsPanel(panel.m_elems, panel.n_elems, panel.dx, panel.dy,
                              panel.reflection_a / 2)
            assert irs_pathloss_linear(**{**case, "panel": half_a}) == pytest.approx(
                4.0 * base, rel=1e-12
            )

            angles = case["angles"]
            ct = math.cos(math.radians(angles.theta_t_deg))
            cr = math.cos(math.radians(angles.theta_r_deg))
            straight = irs_pathloss_linear(**{**case, "angles": IncidenceAngles(0.0, 0.0)})
            assert straight == pytest.approx(base * ct * cr, rel=1e-12)
