"""Shared fixtures plus the acceptance-criterion report hook."""

from __future__ import annotations

import numpy as np
import pytest

from uvbeams import SatelliteState, ScenarioConfig, build_layout

_ACCEPTANCE_LINES: list[str] = []


def record_criterion(label: str, ok: bool, detail: str) -> bool:
    """Queue a one-line verdict for the terminal summary and return ``ok``."""
    _ACCEPTANCE_LINES.append(f"[{label}] {'PASS' if ok else 'FAIL'} {detail}")
    return ok


def pytest_terminal_summary(terminalreporter, exitstatus, config):
    if _ACCEPTANCE_LINES:
        terminalreporter.section("acceptance criteria")
        for line in _ACCEPTANCE_LINES:
            terminalreporter.write_line(line)


def uv_disk_points(n: int, limit: float, seed: int) -> np.ndarray:
    """n uniform points on the open UV disk of the given radius."""
    rng = np.random.default_rng(seed)
    pts = np.empty((0, 2))
    while len(pts) < n:
        cand = rng.uniform(-limit, limit, size=(max(1000, int(n * 1.5)), 2))
        keep = cand[np.hypot(cand[:, 0], cand[:, 1]) <= limit * (1.0 - 1e-12)]
        pts = np.vstack([pts, keep])
    return pts[:n]


@pytest.fixture(scope="session")
def leo_sat() -> SatelliteState:
    return SatelliteState(earth_radius_km=6371.0, altitude_km=1200.0)


@pytest.fixture(scope="session")
def frf1_layout():
    return build_layout(
        ScenarioConfig(beamwidth_3db_deg=4.4127, altitude_km=1200.0, frf=1, rings=4)
    )


@pytest.fixture(scope="session")
def frf3_layout():
    return build_layout(
        ScenarioConfig(beamwidth_3db_deg=4.4127, altitude_km=1200.0, frf=3, rings=6)
    )
