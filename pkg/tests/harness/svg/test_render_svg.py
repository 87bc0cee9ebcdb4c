import xml.etree.ElementTree as ET

import polytrack

_NAMESPACE = "{http://www.w3.org/2000/svg}"


def _groups(document: str, prefix: str) -> dict[str, ET.Element]:
    root = ET.fromstring(document.encode())  # noqa: S314
    assert root.tag == f"{_NAMESPACE}svg"
    return {
        group.get("id", ""): group
        for group in root.iter(f"{_NAMESPACE}g")
        if group.get("id", "").startswith(prefix)
    }


def _style(group: ET.Element) -> str:
    (path,) = group.iter(f"{_NAMESPACE}path")
    return path.get("style", "")


def test_deterministic(two_rarefactions: polytrack.Trace) -> None:
    document = polytrack.render_svg(two_rarefactions)
    assert "<svg" in document
    assert document == polytrack.render_svg(two_rarefactions)


def test_one_group_per_front(two_rarefactions: polytrack.Trace) -> None:
    fronts = _groups(polytrack.render_svg(two_rarefactions), "front-")
    assert sorted(fronts) == [
        f"front-{front.get_id()}" for front in two_rarefactions.get_fronts()
    ]
    assert all(
        "stroke-dasharray" not in _style(group) for group in fronts.values()
    )


def test_districts_are_shaded(two_rarefactions: polytrack.Trace) -> None:
    blocks = _groups(polytrack.render_svg(two_rarefactions), "district-")
    assert sorted(blocks) == [f"district-0-{i}" for i in range(4)]


def test_compressive_fronts_are_dashed(
    compression_pair: polytrack.Trace,
) -> None:
    fronts = _groups(polytrack.render_svg(compression_pair), "front-")
    assert sorted(fronts) == ["front-0", "front-1"]
    assert all(
        "stroke-dasharray" in _style(group) for group in fronts.values()
    )


def test_constant_state() -> None:
    grid = polytrack.build_grid(polytrack.GasParams(1.0, 2.0), 10)
    profile = polytrack.sample_initial_data(
        grid,
        lambda x: 0 * x,
        lambda x: 0 * x,
        (-1.0, 1.0),
    )
    trace = polytrack.FrontTracker(grid, 1.0).run(profile)
    document = polytrack.render_svg(trace)
    assert "<svg" in document
    assert not _groups(document, "front-")
