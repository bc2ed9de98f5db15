"""Seeded uniform UE drops inside each beam hexagon.

Every beam gets its own PCG64 stream spawned from the run seed and the beam
id, so the drop is reproducible bit-for-bit no matter how beams are iterated
or parallelised.
"""

from __future__ import annotations

import math
from dataclasses import dataclass

import numpy as np

from .layout import BeamLayout, hexagon_vertices
from .projection import GroundPoint, SatelliteState, UvPoint, los_geometry, uv_to_earth

__all__ = [
    "RNG_ALGORITHM",
    "RNG_STREAM_RULE",
    "UeRecord",
    "beam_rng",
    "sample_point_in_hexagon",
    "drop_ues",
]

RNG_ALGORITHM = "PCG64"
RNG_STREAM_RULE = "SeedSequence(seed, spawn_key=(beam_id,))"


@dataclass(frozen=True, slots=True)
class UeRecord:
    """One dropped UE with its projected position and link geometry."""

    ue_id: int
    beam_id: int
    uv: UvPoint
    ground: GroundPoint
    slant_range_km: float
    elevation_deg: float
    zod_deg: float
    aod_deg: float


def beam_rng(seed: int, beam_id: int) -> np.random.Generator:
    """Independent generator for one beam: PCG64 seeded by the documented
    stream rule, see :data:`RNG_STREAM_RULE`."""
    return np.random.Generator(np.random.PCG64(np.random.SeedSequence(seed, spawn_key=(beam_id,))))


def sample_point_in_hexagon(
    center: UvPoint, circumradius: float, rng: np.random.Generator
) -> UvPoint:
    """Draw one point uniformly from the closed pointy-top hexagon.

    The hexagon is fanned into six congruent triangles around the centre;
    a uniform triangle index plus a reflected pair of uniforms gives an
    exact, rejection-free draw (three values consumed from ``rng``).
    """
    if circumradius <= 0.0:
        raise ValueError(f"circumradius must be positive, got {circumradius}")
    vertices = hexagon_vertices(center, circumradius)
    k = int(rng.integers(6))
    a1, a2 = rng.random(2)
    if a1 + a2 > 1.0:
        a1, a2 = 1.0 - a1, 1.0 - a2
    v0 = vertices[k]
    v1 = vertices[(k + 1) % 6]
    return UvPoint(
        center.u + a1 * (v0.u - center.u) + a2 * (v1.u - center.u),
        center.v + a1 * (v0.v - center.v) + a2 * (v1.v - center.v),
    )


def drop_ues(
    layout: BeamLayout, sat: SatelliteState, ues_per_beam: int, seed: int
) -> list[UeRecord]:
    """Drop ``ues_per_beam`` uniform UEs in every beam and project them.

    UE ids are ``beam_id * ues_per_beam + k`` so they are stable under any
    iteration order.  A :class:`~uvbeams.projection.HorizonError` from the
    projection would indicate a layout built past the horizon guard and is
    propagated as-is.
    """
    if ues_per_beam < 1:
        raise ValueError(f"ues_per_beam must be at least 1, got {ues_per_beam}")
    records: list[UeRecord] = []
    for beam in layout.beams:
        rng = beam_rng(seed, beam.id)
        for k in range(ues_per_beam):
            uv = sample_point_in_hexagon(beam.center_uv, layout.beam_radius, rng)
            los = los_geometry(uv, sat)
            records.append(
                UeRecord(
                    ue_id=beam.id * ues_per_beam + k,
                    beam_id=beam.id,
                    uv=uv,
                    ground=uv_to_earth(uv, sat),
                    slant_range_km=los.slant_range_km,
                    elevation_deg=math.degrees(los.elevation_rad),
                    zod_deg=math.degrees(los.zod_rad),
                    aod_deg=math.degrees(los.aod_rad),
                )
            )
    return records
