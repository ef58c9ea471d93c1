import math

import pytest

from irsnoma.errors import DomainError, ValidationError
from irsnoma.noma import LinkState, received_power_w, sinr_far, snr_near, validate_split


def unit_link(**overrides):
    args = dict(h1=1 + 0j, h2=1 + 0j, l1=1.0, l2=1.0, rho_w=6.0, noise_w=1.0)
    args.update(overrides)
    return LinkState(**args)


SPLIT = validate_split(0.2, 0.8)


class TestValidateSplit:
    def test_standard_split_amplitudes(self):
        split = validate_split(0.2, 0.8)
        assert split.a1 == pytest.approx(0.44721, abs=1e-5)
        assert split.a2 == pytest.approx(0.89443, abs=1e-5)
        assert split.a1**2 + split.a2**2 == pytest.approx(1.0, abs=1e-12)

    def test_equal_split_violates_ordering(self):
        with pytest.raises(ValidationError, match="power_split.*exceed"):
            validate_split(0.5, 0.5)

    def test_sum_constraint(self):
        with pytest.raises(ValidationError, match="power_split.*sum to 1"):
            validate_split(0.3, 0.6)

    def test_rejects_out_of_range(self):
        with pytest.raises(DomainError):
            validate_split(0.0, 1.0)

    def test_accepts_tiny_sum_slack(self):
        split = validate_split(0.2, 0.8 + 5e-10)
        assert split.a1**2 + split.a2**2 == pytest.approx(1.0, abs=1e-12)


class TestReceivedPower:
    def test_unit_link(self):
        assert received_power_w(unit_link(), "u1") == 6.0

    def test_reference_value(self):
        # rho=6, |h|^2=64, loss=2.786e9 -> 1.378e-7 W = -38.6 dBm
        link = unit_link(h1=8 + 0j, l1=2.786e9)
        power = received_power_w(link, "u1")
        assert power == pytest.approx(1.378e-7, rel=1e-3)
        assert 10 * math.log10(power * 1e3) == pytest.approx(-38.6, abs=0.1)

    def test_zero_transmit_power(self):
        assert received_power_w(unit_link(rho_w=0.0), "u2") == 0.0

    def test_total_power_splits_into_message_components(self):
        link = unit_link(h1=0.3 - 1.2j, l1=7.5)
        total = received_power_w(link, "u1")
        parts = (
            link.rho_w * SPLIT.a1**2 * abs(link.h1) ** 2 / link.l1
            + link.rho_w * SPLIT.a2**2 * abs(link.h1) ** 2 / link.l1
        )
        assert total == pytest.approx(parts, rel=1e-12)

    def test_unknown_user(self):
        with pytest.raises(ValidationError):
            received_power_w(unit_link(), "u3")


class TestSinrFar:
    def test_unit_example_both_modes_coincide(self):
        link = unit_link()
        expected = 4.8 / 2.2
        assert sinr_far(link, SPLIT, "as_printed") == pytest.approx(expected, abs=1e-5)
        assert sinr_far(link, SPLIT, "own_channel") == pytest.approx(expected, abs=1e-5)

    def test_interference_vanishes_with_tiny_near_share(self):
        split = validate_split(1e-9, 1.0 - 1e-9)
        link = unit_link(noise_w=1.0)
        assert sinr_far(link, split, "own_channel") == pytest.approx(
            link.rho_w * abs(link.h2) ** 2 / link.l2, rel=1e-6
        )

    def test_high_power_ceiling_own_channel(self):
        link = unit_link(rho_w=1e12, noise_w=1e-9)
        assert sinr_far(link, SPLIT, "own_channel") == pytest.approx(0.8 / 0.2, rel=1e-6)

    def test_high_power_limit_approached_from_below(self):
        small = sinr_far(unit_link(rho_w=10.0), SPLIT, "own_channel")
        large = sinr_far(unit_link(rho_w=1e6), SPLIT, "own_channel")
        assert small < large < 0.8 / 0.2

    def test_modes_differ_when_channels_differ(self):
        link = unit_link(h1=2 + 0j, l1=3.0)
        assert sinr_far(link, SPLIT, "as_printed") != sinr_far(link, SPLIT, "own_channel")

    def test_unknown_mode(self):
        with pytest.raises(ValidationError):
            sinr_far(unit_link(), SPLIT, "printed")

    @pytest.mark.parametrize("mode", ["as_printed", "own_channel"])
    def test_scale_invariance_in_power_and_noise(self, mode):
        link = unit_link(h1=1.4 - 0.3j, h2=0.2 + 2.1j, l1=17.0, l2=230.0)
        scaled = unit_link(h1=link.h1, h2=link.h2, l1=link.l1, l2=link.l2,
                           rho_w=link.rho_w * 37.0, noise_w=link.noise_w * 37.0)
        assert sinr_far(scaled, SPLIT, mode) == pytest.approx(sinr_far(link, SPLIT, mode), rel=1e-12)
        assert snr_near(scaled, SPLIT) == pytest.approx(snr_near(link, SPLIT), rel=1e-12)

    def test_monotone_in_near_user_share(self):
        previous = math.inf
        for a1_sq in (0.1, 0.2, 0.3, 0.4):
            split = validate_split(a1_sq, 1.0 - a1_sq)
            value = sinr_far(unit_link(), split, "as_printed")
            assert value < previous
            previous = value


class TestSnrNear:
    def test_unit_example(self):
        assert snr_near(unit_link(), SPLIT) == pytest.approx(1.2, abs=1e-9)

    def test_doubled_noise_halves_snr(self):
        assert snr_near(unit_link(noise_w=2.0), SPLIT) == pytest.approx(
            snr_near(unit_link(), SPLIT) / 2.0, rel=1e-12
        )

    def test_dead_channel(self):
        assert snr_near(unit_link(h1=0j), SPLIT) == 0.0

    def test_monotone_in_near_user_share(self):
        previous = 0.0
        for a1_sq in (0.1, 0.2, 0.3, 0.4):
            split = validate_split(a1_sq, 1.0 - a1_sq)
            value = snr_near(unit_link(), split)
            assert value > previous
            previous = value


class TestLinkStateValidation:
    def test_rejects_non_positive_loss(self):
        with pytest.raises(DomainError):
            unit_link(l1=0.0)

    def test_rejects_negative_power(self):
        with pytest.raises(DomainError):
            unit_link(rho_w=-1.0)

    def test_rejects_zero_noise(self):
        with pytest.raises(DomainError):
            unit_link(noise_w=0.0)
