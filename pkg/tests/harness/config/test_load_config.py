import json
import pathlib

import pytest

import polytrack
from tests.harness.config.case_data import CaseData

_MINIMAL = {
    "K": 1.0,
    "gamma": 2.0,
    "n": 10,
    "preset": "two_rarefactions",
    "t_max": 1.0,
}


def test_defaults() -> None:
    config = polytrack.RunConfig.init_from_dict(_MINIMAL)
    assert config.get_mode() is polytrack.RunMode.RUN
    assert config.get_resolutions() == (10,)
    assert config.get_domain() == (-2.0, 2.0)
    assert config.get_t_max() == 1.0
    assert config.get_sample_times() == ()
    assert config.get_outputs() == frozenset(polytrack.OUTPUTS)
    assert all(config.get_checks()[name] for name in polytrack.CHECKS)
    assert config.get_K0() is None
    assert config.get_lifespan_rate() == 1.0
    assert config.get_preset() == {
        "name": "two_rarefactions",
        "strength": 0.2,
        "width": 0.5,
        "gap": 0.5,
    }
    params = config.get_params()
    assert params.get_pressure_coefficient() == 1.0
    assert params.get_gamma() == 2.0


def test_ladder_is_sorted() -> None:
    data = {**_MINIMAL, "n_ladder": [40, 10, 20]}
    del data["n"]
    config = polytrack.RunConfig.init_from_dict(data)
    assert config.get_resolutions() == (10, 20, 40)


def test_overrides() -> None:
    config = polytrack.RunConfig.init_from_dict(
        {
            **_MINIMAL,
            "sample_times": [0.5, 0.1],
            "outputs": ["svg_diagram", "trace_json"],
            "checks": {"tracing": False},
            "K0": 0.5,
        }
    )
    assert config.get_sample_times() == (0.1, 0.5)
    assert config.is_output_enabled("trace_json")
    assert config.is_output_enabled("svg_diagram")
    assert not config.is_output_enabled("fronts_csv")
    assert not config.is_check_enabled("tracing")
    assert config.is_check_enabled("density_bound")
    assert config.get_K0() == 0.5


def test_exact_mode_admits_large_gamma() -> None:
    config = polytrack.RunConfig.init_from_dict(
        {"K": 1.0, "gamma": 3.0},
        mode="exact",
    )
    assert config.get_resolutions() == ()
    assert config.get_exact() == {"t_bar": 1.0, "S_bar": 1.0, "samples": None}


def test_invalid_config(invalid_config: CaseData) -> None:
    with pytest.raises(polytrack.ConfigError) as error:
        polytrack.RunConfig.init_from_dict(
            invalid_config.data,
            mode=invalid_config.mode,
        )
    assert str(error.value).startswith(f"{invalid_config.path}: ")


def test_load_config(tmp_path: pathlib.Path) -> None:
    path = tmp_path / "config.json"
    path.write_text(json.dumps(_MINIMAL), encoding="utf-8")
    config = polytrack.load_config(path)
    assert config.get_resolutions() == (10,)
    assert config.to_dict()["mode"] == "run"


def test_load_invalid_json(tmp_path: pathlib.Path) -> None:
    path = tmp_path / "config.json"
    path.write_text("{not json", encoding="utf-8")
    with pytest.raises(polytrack.ConfigError) as error:
        polytrack.load_config(path)
    assert str(error.value).startswith("<root>: ")


def test_load_missing_file(tmp_path: pathlib.Path) -> None:
    with pytest.raises(OSError):  # noqa: PT011
        polytrack.load_config(tmp_path / "missing.json")


def test_output_dir_override(
    tmp_path: pathlib.Path,
    monkeypatch: pytest.MonkeyPatch,
) -> None:
    config = polytrack.RunConfig.init_from_dict(
        {**_MINIMAL, "output_dir": "configured"}
    )
    monkeypatch.delenv("POLYTRACK_OUTPUT_DIR", raising=False)
    assert config.get_output_dir() == pathlib.Path("configured")
    monkeypatch.setenv("POLYTRACK_OUTPUT_DIR", str(tmp_path))
    assert config.get_output_dir() == tmp_path
