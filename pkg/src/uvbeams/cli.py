"""Command-line pipeline: scenario presets, layout -> drop -> project ->
analyse orchestration, and CSV/JSON emission.

Exit codes: 0 success, 1 configuration error, 2 horizon/geometry error,
3 I/O error.
"""

from __future__ import annotations

import argparse
import dataclasses
import json
import sys
from dataclasses import dataclass
from pathlib import Path

from . import __version__
from .analysis import beam_stats, project_footprints, scenario_summary
from .deployment import RNG_ALGORITHM, RNG_STREAM_RULE, drop_ues
from .layout import ScenarioConfig, build_layout
from .projection import HorizonError

__all__ = [
    "GEO_ALTITUDE_KM",
    "LEO_ALTITUDE_KM",
    "PRESET_BEAMWIDTH_DEG",
    "RunManifest",
    "preset",
    "run",
    "main",
]

GEO_ALTITUDE_KM = 35786.0
LEO_ALTITUDE_KM = 1200.0

# 3GPP TR 38.821 Set-1/Set-2 3 dB beamwidths per orbit and band, degrees.
PRESET_BEAMWIDTH_DEG = {
    ("set1", "geo_s"): 0.4011,
    ("set1", "geo_ka"): 0.1765,
    ("set1", "leo_s"): 4.4127,
    ("set1", "leo_ka"): 1.7647,
    ("set2", "geo_s"): 0.7353,
    ("set2", "geo_ka"): 0.4412,
    ("set2", "leo_s"): 8.832,
    ("set2", "leo_ka"): 4.4127,
}

OUTPUT_FILES = ("beams.csv", "ues.csv", "footprints.csv", "stats.json", "manifest.json")

BEAMS_CSV_HEADER = "id,q,r,u,v,color,role"
UES_CSV_HEADER = "ue_id,beam_id,u,v,x_km,y_km,z_km,slant_km,elev_deg,zod_deg,aod_deg"
FOOTPRINTS_CSV_HEADER = "beam_id,vertex_idx,x_km,y_km,z_km"


@dataclass(frozen=True)
class RunManifest:
    """Everything needed to reproduce a run byte-for-byte."""

    version: str
    config: dict
    derived: dict
    rng: dict
    outputs: tuple[str, ...]


def preset(set_name: str, scenario: str) -> ScenarioConfig:
    """Scenario config for a named TR 38.821 parameter set.

    ``set_name`` is ``set1`` or ``set2``; ``scenario`` is one of ``geo_s``,
    ``geo_ka``, ``leo_s``, ``leo_ka``.  Defaults: centre elevation 70 deg,
    FRF 1, 4 rings, 10 UEs per beam, seed 0.
    """
    key = (set_name, scenario)
    if key not in PRESET_BEAMWIDTH_DEG:
        known = ", ".join(f"{s}:{sc}" for s, sc in sorted(PRESET_BEAMWIDTH_DEG))
        raise ValueError(f"unknown preset {set_name}:{scenario}; known presets: {known}")
    return ScenarioConfig(
        beamwidth_3db_deg=PRESET_BEAMWIDTH_DEG[key],
        altitude_km=GEO_ALTITUDE_KM if scenario.startswith("geo") else LEO_ALTITUDE_KM,
        frf=1,
        rings=4,
        center_elevation_deg=70.0,
        ues_per_beam=10,
        seed=0,
    )


def _fmt(value: float) -> str:
    """CSV float format: 9 significant digits, no negative zero."""
    if value == 0.0:
        value = 0.0
    return format(value, ".9g")


def _config_dict(config: ScenarioConfig) -> dict:
    out = dataclasses.asdict(config)
    out["rings"] = config.ring_count
    return out


def run(config: ScenarioConfig, out_dir: Path, bins: int = 50, edge_samples: int = 8) -> RunManifest:
    """Run the full pipeline and write the output files into ``out_dir``."""
    layout = build_layout(config)
    sat = config.satellite()
    ues = drop_ues(layout, sat, config.ues_per_beam, config.seed)
    stats = beam_stats(ues, layout, bins)
    footprints = project_footprints(layout, sat, edge_samples)
    summary = scenario_summary(config)

    out_dir = Path(out_dir)
    out_dir.mkdir(parents=True, exist_ok=True)

    with open(out_dir / "beams.csv", "w", encoding="utf-8", newline="") as f:
        f.write(BEAMS_CSV_HEADER + "\n")
        for beam in layout.beams:
            f.write(
                f"{beam.id},{beam.index.q},{beam.index.r},"
                f"{_fmt(beam.center_uv.u)},{_fmt(beam.center_uv.v)},"
                f"{beam.color},{beam.role.value}\n"
            )

    with open(out_dir / "ues.csv", "w", encoding="utf-8", newline="") as f:
        f.write(UES_CSV_HEADER + "\n")
        for ue in ues:
            f.write(
                f"{ue.ue_id},{ue.beam_id},{_fmt(ue.uv.u)},{_fmt(ue.uv.v)},"
                f"{_fmt(ue.ground.x_km)},{_fmt(ue.ground.y_km)},{_fmt(ue.ground.z_km)},"
                f"{_fmt(ue.slant_range_km)},{_fmt(ue.elevation_deg)},"
                f"{_fmt(ue.zod_deg)},{_fmt(ue.aod_deg)}\n"
            )

    with open(out_dir / "footprints.csv", "w", encoding="utf-8", newline="") as f:
        f.write(FOOTPRINTS_CSV_HEADER + "\n")
        for fp in footprints:
            for idx, p in enumerate(fp.boundary):
                f.write(f"{fp.beam_id},{idx},{_fmt(p.x_km)},{_fmt(p.y_km)},{_fmt(p.z_km)}\n")

    stats_doc = {
        "bins": bins,
        "global": {
            "ue_count": len(ues),
            "min_slant_km": min(s.min_slant_km for s in stats),
            "max_slant_km": max(s.max_slant_km for s in stats),
        },
        "beams": [
            {
                "beam_id": s.beam_id,
                "role": s.role.value,
                "ue_count": s.ue_count,
                "min_slant_km": s.min_slant_km,
                "max_slant_km": s.max_slant_km,
                "mean_slant_km": s.mean_slant_km,
                "min_elevation_deg": s.min_elevation_deg,
                "max_elevation_deg": s.max_elevation_deg,
                "histogram": [[lo, hi, count] for lo, hi, count in s.histogram],
            }
            for s in stats
        ],
    }
    with open(out_dir / "stats.json", "w", encoding="utf-8") as f:
        json.dump(stats_doc, f, indent=2)
        f.write("\n")

    manifest = RunManifest(
        version=__version__,
        config=_config_dict(config),
        derived={
            "beam_radius": summary.beam_radius,
            "adjacent_beam_spacing": summary.spacing,
            "center_offset_u": summary.center_offset_u,
            "horizon_limit": summary.horizon_limit,
            "beam_count": summary.beam_count,
            "statistics_beam_count": summary.statistics_beam_count,
        },
        rng={
            "generator": RNG_ALGORITHM,
            "stream_rule": RNG_STREAM_RULE,
            "seed": config.seed,
        },
        outputs=OUTPUT_FILES,
    )
    with open(out_dir / "manifest.json", "w", encoding="utf-8") as f:
        json.dump(dataclasses.asdict(manifest), f, indent=2)
        f.write("\n")
    return manifest


class _Parser(argparse.ArgumentParser):
    """Argument parser whose usage errors exit with the config error code."""

    def error(self, message: str):  # noqa: D102 - argparse override
        self.exit(1, f"{self.prog}: error: {message}\n")


def _build_parser() -> _Parser:
    parser = _Parser(
        prog="uvbeams",
        description="Generate a UV-plane beam layout, drop UEs, and project them onto the Earth.",
    )
    parser.add_argument(
        "--preset",
        metavar="SET:SCENARIO",
        help="named scenario, e.g. set1:leo_s (sets beamwidth and altitude; flags override)",
    )
    parser.add_argument("--beamwidth-deg", type=float, help="3 dB beamwidth in degrees")
    parser.add_argument("--altitude-km", type=float, help="satellite altitude in km")
    parser.add_argument("--earth-radius-km", type=float, help="Earth radius in km (default 6371)")
    parser.add_argument("--elevation-deg", type=float, help="centre-beam elevation in degrees (default 70)")
    parser.add_argument("--frf", type=int, choices=(1, 3), help="frequency reuse factor (default 1)")
    parser.add_argument("--rings", type=int, help="hex rings around the centre beam (default 4 for FRF=1, 6 for FRF=3)")
    parser.add_argument("--ues-per-beam", type=int, help="UEs dropped per beam (default 10)")
    parser.add_argument("--seed", type=int, help="RNG seed, unsigned 64-bit (default 0)")
    parser.add_argument("--bins", type=int, default=50, help="slant-range histogram bins (default 50)")
    parser.add_argument("--edge-samples", type=int, default=8, help="boundary samples per hexagon edge (default 8)")
    parser.add_argument("--out", default="out", help="output directory (default ./out)")
    parser.add_argument("--version", action="version", version=f"%(prog)s {__version__}")
    return parser


def _config_from_args(args: argparse.Namespace) -> ScenarioConfig:
    if args.preset is not None:
        set_name, sep, scenario = args.preset.partition(":")
        if not sep:
            raise ValueError(f"preset must look like set1:leo_s, got {args.preset!r}")
        base = preset(set_name, scenario)
        beamwidth = args.beamwidth_deg if args.beamwidth_deg is not None else base.beamwidth_3db_deg
        altitude = args.altitude_km if args.altitude_km is not None else base.altitude_km
    else:
        if args.beamwidth_deg is None or args.altitude_km is None:
            raise ValueError("--beamwidth-deg and --altitude-km are required without --preset")
        beamwidth = args.beamwidth_deg
        altitude = args.altitude_km
    frf = args.frf if args.frf is not None else 1
    if args.rings is not None:
        rings = args.rings
    elif args.frf is not None:
        rings = None  # resolved from the reuse factor by ScenarioConfig
    elif args.preset is not None:
        rings = 4
    else:
        rings = None
    return ScenarioConfig(
        beamwidth_3db_deg=beamwidth,
        altitude_km=altitude,
        earth_radius_km=args.earth_radius_km if args.earth_radius_km is not None else 6371.0,
        frf=frf,
        rings=rings,
        center_elevation_deg=args.elevation_deg if args.elevation_deg is not None else 70.0,
        ues_per_beam=args.ues_per_beam if args.ues_per_beam is not None else 10,
        seed=args.seed if args.seed is not None else 0,
    )


def main(argv: list[str] | None = None) -> int:
    parser = _build_parser()
    args = parser.parse_args(argv)
    if args.bins < 1:
        print("uvbeams: error: --bins must be at least 1", file=sys.stderr)
        return 1
    if args.edge_samples < 1:
        print("uvbeams: error: --edge-samples must be at least 1", file=sys.stderr)
        return 1
    try:
        config = _config_from_args(args)
    except ValueError as exc:
        print(f"uvbeams: error: {exc}", file=sys.stderr)
        return 1
    try:
        manifest = run(config, Path(args.out), bins=args.bins, edge_samples=args.edge_samples)
    except HorizonError as exc:
        print(f"uvbeams: error: {exc}", file=sys.stderr)
        return 2
    except ValueError as exc:
        print(f"uvbeams: error: {exc}", file=sys.stderr)
        return 1
    except OSError as exc:
        print(f"uvbeams: error: {exc}", file=sys.stderr)
        return 3
    print(
        f"{manifest.derived['beam_count']} beams, "
        f"{manifest.config['ues_per_beam'] * manifest.derived['beam_count']} UEs -> {args.out}"
    )
    return 0


if __name__ == "__main__":
    sys.exit(main())
