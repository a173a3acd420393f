# app/main.py - Línea de comandos de geometría esférica: distancias, áreas, holonomía y mallas
from __future__ import annotations
import argparse
import json
import logging
import sys
from pathlib import Path
from typing import List, Optional

from cli.commands import (
    CommandResult,
    RunConfig,
    cmd_coords,
    cmd_distance,
    cmd_foucault,
    cmd_mesh,
    cmd_polygon,
    cmd_transport,
    cmd_triangle,
    export_result,
)
from cli.points import (
    NEGATIVE_POINT,
    CityLookupError,
    CityTable,
    PointParseError,
    parse_coordinate,
    parse_latlon,
)
from config.settings import ConfigManager, OUTPUT_FORMATS

logger = logging.getLogger(__name__)

EXIT_OK = 0
EXIT_ERROR = 1
EXIT_USAGE = 2

POINT_HELP = "city name from the table, or LAT,LON (41N,74W or 41,-74)"


def _common_options() -> argparse.ArgumentParser:
    """Opciones globales; valen antes o después del subcomando"""
    common = argparse.ArgumentParser(add_help=False)
    common.add_argument('--radius', type=float, default=argparse.SUPPRESS,
                        help="sphere radius in km (default 6378)")
    common.add_argument('--format', choices=OUTPUT_FORMATS, default=argparse.SUPPRESS,
                        help="text (rounded) or json (full precision)")
    common.add_argument('--cities', type=Path, default=argparse.SUPPRESS,
                        help="CSV with name,lat,lon (default data/cities.csv)")
    common.add_argument('--precision', type=int, default=argparse.SUPPRESS,
                        help="decimals for angles in text mode (default 1)")
    common.add_argument('-v', '--verbose', action='count', default=argparse.SUPPRESS,
                        help="-v for INFO, -vv for DEBUG on stderr")
    return common


def build_parser() -> argparse.ArgumentParser:
    common = _common_options()
    parser = argparse.ArgumentParser(
        prog="spherical",
        description="Distances, areas, parallel transport and Euler characteristic on a sphere",
        parents=[common],
    )
    sub = parser.add_subparsers(dest='command', required=True, metavar='COMMAND')

    p = sub.add_parser('coords', parents=[common], help="Cartesian coordinates of a point")
    p.add_argument('point', nargs='?', help=POINT_HELP)
    p.add_argument('--lat', help="latitude, e.g. 41N or 41")
    p.add_argument('--lon', help="longitude, e.g. 74W or -74")

    p = sub.add_parser('distance', parents=[common], help="central angle and Great-Circle distance")
    p.add_argument('points', nargs=2, metavar='POINT', help=POINT_HELP)

    p = sub.add_parser('triangle', parents=[common], help="angles, area and Heron comparison")
    p.add_argument('points', nargs=3, metavar='POINT', help=POINT_HELP)
    p.add_argument('--export', type=Path, help="write the report tables to an .xlsx workbook")

    for name, text in (('polygon', "interior angles, excess, area and holonomy"),
                       ('transport', "parallel transport wheel around a polygon")):
        p = sub.add_parser(name, parents=[common], help=text)
        p.add_argument('points', nargs='+', metavar='POINT', help=POINT_HELP)
        p.add_argument('--export', type=Path, help="write the report tables to an .xlsx workbook")

    p = sub.add_parser('foucault', parents=[common], help="daily precession of a Foucault pendulum")
    p.add_argument('lat', help="latitude, e.g. 49, 49N or 33S")

    p = sub.add_parser('mesh', parents=[common], help="Euler characteristic and angle checks of a mesh")
    p.add_argument('source', help="mesh JSON file, bundled mesh or canonical name (soccer-ball, torus-grid, ...)")
    p.add_argument('--n', type=int, default=4, help="torus grid rows (default 4)")
    p.add_argument('--m', type=int, default=4, help="torus grid columns (default 4)")
    p.add_argument('--export', type=Path, help="write the report tables to an .xlsx workbook")

    # puntos del hemisferio sur en decimal ("-10,0") son posicionales, no opciones
    for p in (parser, *sub.choices.values()):
        p._negative_number_matcher = NEGATIVE_POINT
    return parser


def _log_level(verbosity: int) -> Optional[str]:
    if verbosity >= 2:
        return 'DEBUG'
    if verbosity == 1:
        return 'INFO'
    return None


def build_run_config(args: argparse.Namespace, manager: ConfigManager) -> RunConfig:
    """La configuración (archivo + entorno) da los valores base; las opciones los reemplazan"""
    config = manager.get_config()
    cities_path = getattr(args, 'cities', None) or config.cities_path
    # una tabla pedida explícitamente debe existir; la incluida es opcional
    if hasattr(args, 'cities') or Path(cities_path).is_file():
        cities = CityTable.from_csv(cities_path)
    else:
        cities = CityTable()
    if not len(cities):
        logger.warning(f"⚠️ Sin tabla de ciudades en {cities_path}; solo se aceptan coordenadas")
    return RunConfig(
        radius_km=getattr(args, 'radius', config.geometry.radius_km),
        output_format=getattr(args, 'format', config.output.format),
        angle_precision=getattr(args, 'precision', config.output.angle_precision),
        distance_precision=config.output.distance_precision,
        cities=cities,
        meshes_dir=config.meshes_path,
        export_path=getattr(args, 'export', None),
    )


def dispatch(args: argparse.Namespace, run: RunConfig) -> CommandResult:
    if args.command == 'coords':
        if args.lat is not None or args.lon is not None:
            if args.lat is None or args.lon is None or args.point is not None:
                raise PointParseError("give either POINT or both --lat and --lon")
            point = parse_latlon(args.lat, args.lon)
            return cmd_coords(f"{args.lat},{args.lon}", run, point=point)
        if args.point is None:
            raise PointParseError("coords needs a POINT or --lat/--lon")
        return cmd_coords(args.point, run)
    if args.command == 'distance':
        return cmd_distance(*args.points, run)
    if args.command == 'triangle':
        return cmd_triangle(args.points, run)
    if args.command == 'polygon':
        return cmd_polygon(args.points, run)
    if args.command == 'transport':
        return cmd_transport(args.points, run)
    if args.command == 'foucault':
        return cmd_foucault(parse_coordinate(args.lat, 'lat'), run)
    if args.command == 'mesh':
        return cmd_mesh(args.source, run, n=args.n, m=args.m)
    raise PointParseError(f"unknown command '{args.command}'")


def emit(result: CommandResult, run: RunConfig):
    if run.output_format == 'json':
        print(json.dumps(result.data, indent=2, ensure_ascii=False))
    else:
        print("\n".join(result.lines))


def main(argv: Optional[List[str]] = None) -> int:
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as e:
        return int(e.code or 0)

    manager = ConfigManager()
    manager.setup_logging(_log_level(getattr(args, 'verbose', 0)))

    try:
        run = build_run_config(args, manager)
        result = dispatch(args, run)
        if run.export_path is not None:
            path = export_result(result, run.export_path)
            result.data['export'] = str(path)
            result.lines.append(f"Report exported to {path}")
        emit(result, run)
    except (PointParseError, CityLookupError) as e:
        print(f"{parser.prog}: error: {e}", file=sys.stderr)
        return EXIT_USAGE
    except (ValueError, KeyError, OSError) as e:
        message = e.args[0] if isinstance(e, KeyError) and e.args else e
        print(f"{parser.prog}: error: {message}", file=sys.stderr)
        logger.debug("detalle del error", exc_info=True)
        return EXIT_ERROR
    return EXIT_OK


if __name__ == "__main__":
    sys.exit(main())
