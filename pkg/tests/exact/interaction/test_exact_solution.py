import math

import numpy as np
import pytest

import polytrack


@pytest.mark.parametrize(
    ("gamma", "expected"),
    [(5 / 3, 2.0), (7 / 5, 3.0), (2.0, 1.5), (3.0, 1.0)],
)
def test_alpha(gamma: float, expected: float) -> None:
    assert np.isclose(polytrack.exact.alpha(gamma), expected)


@pytest.mark.parametrize("gamma", [1.0, 0.5])
def test_alpha_invalid_gamma(gamma: float) -> None:
    with pytest.raises(polytrack.AdmissibleGammaError):
        polytrack.exact.alpha(gamma)


@pytest.mark.parametrize(
    ("t_bar", "S_bar"),
    [(0.0, 1.0), (-1.0, 1.0), (1.0, 0.0), (1.0, -0.5)],
)
def test_invalid_config(t_bar: float, S_bar: float) -> None:  # noqa: N803
    with pytest.raises(polytrack.InvariantDomainError):
        polytrack.exact.InteractionConfig(
            t_bar=t_bar,
            S_bar=S_bar,
            params=polytrack.GasParams(1.0, 5 / 3),
        )


def test_legendre_needs_integer_exponent() -> None:
    cfg = polytrack.exact.InteractionConfig(
        t_bar=1.0,
        S_bar=1.0,
        params=polytrack.GasParams(1.0, 2.0),
    )
    with pytest.raises(polytrack.AdmissibleGammaError):
        polytrack.exact.t_interaction_legendre(cfg, 0.5, -0.5)

    cfg = polytrack.exact.InteractionConfig(
        t_bar=1.0,
        S_bar=1.0,
        params=polytrack.GasParams(1.0, 5 / 3),
    )
    with pytest.raises(polytrack.AdmissibleGammaError):
        polytrack.exact.t_interaction_legendre(cfg, 0.5, -0.5, N=3)


def test_hyper_matches_legendre_off_diagonal() -> None:
    cfg = polytrack.exact.InteractionConfig(
        t_bar=0.7,
        S_bar=0.8,
        params=polytrack.GasParams(1.0, 9 / 7),
    )
    for S, R in ((0.3, -0.6), (0.75, -0.1), (0.05, -0.8)):  # noqa: N806
        assert np.isclose(
            polytrack.exact.t_interaction_hyper(cfg, S, R),
            polytrack.exact.t_interaction_legendre(cfg, S, R, N=4),
            rtol=1e-10,
        )


def test_time_grows_as_invariants_shrink() -> None:
    cfg = polytrack.exact.InteractionConfig(
        t_bar=1.0,
        S_bar=1.0,
        params=polytrack.GasParams(1.0, 2.0),
    )
    times = [
        polytrack.exact.t_interaction_hyper(cfg, value, -value)
        for value in (1.0, 0.5, 0.1, 0.01)
    ]
    assert times[0] == pytest.approx(1.0)
    assert all(np.diff(times) > 0)


def test_volume_from_invariants() -> None:
    params = polytrack.GasParams(1.0, 5 / 3)
    for S, R in ((0.5, -0.5), (2.0, 1.0), (0.01, -0.01)):  # noqa: N806
        volume, density = polytrack.exact.volume_from_invariants(
            params,
            S,
            R,
        )
        assert np.isclose(volume, (6 / (S - R)) ** 3, rtol=1e-12)
        assert np.isclose(volume * density, 1.0)

    params = polytrack.GasParams(2.0, 1.4)
    half_gap = 2 * math.sqrt(2.0) / 0.4
    volume, density = polytrack.exact.volume_from_invariants(
        params,
        half_gap,
        -half_gap,
    )
    assert np.isclose(volume, 1.0)
    assert np.isclose(density, 1.0)

    with pytest.raises(polytrack.InvariantDomainError):
        polytrack.exact.volume_from_invariants(params, -0.1, 0.1)


def test_decay_curve() -> None:
    cfg = polytrack.exact.InteractionConfig(
        t_bar=1.0,
        S_bar=1.0,
        params=polytrack.GasParams(1.0, 5 / 3),
    )
    samples = polytrack.exact.default_decay_samples()
    assert len(samples) == 31
    assert np.isclose(samples[0], 1e-1)
    assert np.isclose(samples[-1], 1e-4)

    curve = polytrack.exact.decay_curve(cfg, [0.01])
    time, density = curve[0]
    assert np.isclose(time, 500050.0)
    assert np.isclose(density, 1 / 2.7e7)
    assert np.isclose(time * density, 0.018520, atol=1e-6)

    curve = polytrack.exact.decay_curve(cfg, samples)
    times = np.array([time for time, _ in curve])
    densities = np.array([density for _, density in curve])
    assert np.all(np.diff(times) > 0)
    assert np.all(np.diff(densities) < 0)
    # Late-time decay approaches rho ~ 1/t.
    slope = polytrack.loglog_slope(times[-10:], densities[-10:])
    assert math.isclose(slope, -1.0, abs_tol=0.05)


def test_decay_curve_outside_simulation_range(
    caplog: pytest.LogCaptureFixture,
) -> None:
    cfg = polytrack.exact.InteractionConfig(
        t_bar=1.0,
        S_bar=1.0,
        params=polytrack.GasParams(1.0, 3.0),
    )
    with caplog.at_level("WARNING"):
        curve = polytrack.exact.decay_curve(cfg, [0.5])
    assert "outside 1 < gamma < 3" in caplog.text
    assert len(curve) == 1
