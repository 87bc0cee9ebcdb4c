import pathlib

import pytest

import polytrack


def _run(
    directory: pathlib.Path,
    preset: str,
    t_max: float,
) -> tuple[pathlib.Path, polytrack.ExitCode]:
    # The volume bound needs a finer lattice than n = 10.
    config = polytrack.RunConfig.init_from_dict(
        {
            "K": 1.0,
            "gamma": 2.0,
            "n": 10,
            "preset": preset,
            "t_max": t_max,
            "checks": {"density_bound": False},
            "output_dir": str(directory),
        }
    )
    return directory, polytrack.execute(config)


@pytest.fixture(autouse=True)
def _no_output_override(monkeypatch: pytest.MonkeyPatch) -> None:
    monkeypatch.delenv("POLYTRACK_OUTPUT_DIR", raising=False)


@pytest.fixture(scope="session")
def two_rarefactions_run(
    tmp_path_factory: pytest.TempPathFactory,
) -> tuple[pathlib.Path, polytrack.ExitCode]:
    with pytest.MonkeyPatch.context() as monkeypatch:
        monkeypatch.delenv("POLYTRACK_OUTPUT_DIR", raising=False)
        return _run(
            tmp_path_factory.mktemp("two_rarefactions"),
            "two_rarefactions",
            1.0,
        )


@pytest.fixture(scope="session")
def compression_pair_run(
    tmp_path_factory: pytest.TempPathFactory,
) -> tuple[pathlib.Path, polytrack.ExitCode]:
    with pytest.MonkeyPatch.context() as monkeypatch:
        monkeypatch.delenv("POLYTRACK_OUTPUT_DIR", raising=False)
        return _run(
            tmp_path_factory.mktemp("compression_pair"),
            "compression_pair",
            50.0,
        )
