# app/cli/commands.py - Comandos: coords, distance, triangle, polygon, transport, foucault, mesh
from __future__ import annotations
from dataclasses import dataclass, field
from pathlib import Path
from typing import Any, Dict, List, Optional, Sequence, Tuple
import logging
import math

import pandas as pd

from geometry.core import (
    LatLon,
    SphereConfig,
    central_angle,
    dot,
    great_circle_distance,
    to_cartesian,
)
from geometry.holonomy import (
    area_from_holonomy,
    cap_area,
    foucault_precession,
    latitude_circle_holonomy,
    precession_sense,
    transport_reading,
    walk_polygon,
)
from geometry.polygon import (
    GeodesicPolygon,
    compare_with_plane,
    exit_points,
    polygon_report,
)
from topology.mesh import (
    SurfaceMesh,
    edge_double_count_check,
    euler_characteristic,
    gauss_bonnet_summary,
    vertex_angle_sum_check,
)
from topology.solids import canonical_mesh
from utils.exporters import ReportExporter
from utils.io import read_mesh_file
from .points import CityTable, resolve_point

logger = logging.getLogger(__name__)

ANGLE_CHECK_TOLERANCE = 1e-6


@dataclass
class RunConfig:
    """Opciones de una ejecución: radio, formato de salida y precisión de pantalla"""
    radius_km: float = 6378.0
    output_format: str = "text"
    angle_precision: int = 1
    distance_precision: int = 0
    cities: CityTable = field(default_factory=CityTable)
    meshes_dir: Optional[Path] = None
    export_path: Optional[Path] = None

    def __post_init__(self):
        if not math.isfinite(self.radius_km) or self.radius_km <= 0:
            raise ValueError(f"radius must be positive, got {self.radius_km}")
        if self.output_format not in ('text', 'json'):
            raise ValueError(f"unknown output format '{self.output_format}'")

    @property
    def sphere(self) -> SphereConfig:
        return SphereConfig(self.radius_km)

    def angle(self, degrees: float) -> str:
        return f"{degrees:.{self.angle_precision}f}°"

    def km(self, value: float) -> str:
        return f"{value:,.{self.distance_precision}f} km"

    def km2(self, value: float) -> str:
        return f"{value:,.{self.distance_precision}f} km²"


@dataclass
class CommandResult:
    """`data` va a JSON sin redondear; `lines` es la vista de texto; `tables` alimenta --export"""
    data: Dict[str, Any]
    lines: List[str]
    tables: Dict[str, pd.DataFrame] = field(default_factory=dict)


def _label(text: str, run: RunConfig) -> str:
    return run.cities.canonical_name(text) if text in run.cities else text


def _resolve_all(texts: Sequence[str], run: RunConfig) -> Tuple[List[str], List[LatLon]]:
    points = [resolve_point(t, run.cities) for t in texts]
    return [_label(t, run) for t in texts], points


def _xyz(point: LatLon, run: RunConfig) -> Dict[str, float]:
    v = to_cartesian(point, run.sphere)
    return {'x': v.x, 'y': v.y, 'z': v.z}


def _triple(values: Dict[str, float], precision: int) -> str:
    return "(" + ", ".join(f"{values[k]:.{precision}f}" for k in ('x', 'y', 'z')) + ")"


def cmd_coords(text: str, run: RunConfig, point: Optional[LatLon] = None) -> CommandResult:
    """Coordenadas cartesianas (km) de una ciudad o de un par lat/lon"""
    if point is None:
        label, point = _label(text, run), resolve_point(text, run.cities)
    else:
        label = text
    xyz = _xyz(point, run)
    data = {'point': label, 'lat': point.lat, 'lon': point.lon, **xyz, 'radius_km': run.radius_km}
    lines = [f"{label} {point} -> {_triple(xyz, run.distance_precision)} km"]
    return CommandResult(data, lines)


def cmd_distance(first: str, second: str, run: RunConfig) -> CommandResult:
    """Ángulo central por producto punto y distancia sobre el Gran Círculo"""
    (la, lb), (a, b) = _resolve_all((first, second), run)
    va, vb = to_cartesian(a, run.sphere), to_cartesian(b, run.sphere)
    cosine = dot(va, vb) / run.radius_km ** 2
    alpha = central_angle(va, vb)
    distance = great_circle_distance(a, b, run.sphere)
    data = {
        'from': la, 'to': lb,
        'cos_alpha': cosine,
        'central_angle_deg': alpha,
        'distance_km': distance,
        'radius_km': run.radius_km,
    }
    lines = [
        f"{la} {a} -> {lb} {b}",
        f"cos α = {cosine:.4f}, α = {run.angle(alpha)}, d = {run.km(distance)}",
    ]
    return CommandResult(data, lines)


def _vertex_table(labels, points, angles, run: RunConfig) -> pd.DataFrame:
    rows = []
    for label, point, alpha in zip(labels, points, angles):
        rows.append({'vertex': label, 'lat': point.lat, 'lon': point.lon,
                     **_xyz(point, run), 'interior_angle_deg': alpha})
    return pd.DataFrame(rows)


def _side_table(labels, sides) -> pd.DataFrame:
    n = len(labels)
    return pd.DataFrame([{'from': labels[i], 'to': labels[(i + 1) % n], 'length_km': sides[i]}
                         for i in range(n)])


def _report_lines(labels, report, run: RunConfig) -> List[str]:
    n = len(labels)
    lines = [f"  {label:<16} {run.angle(alpha)}" for label, alpha in zip(labels, report.interior_angles)]
    lines.append(f"  {'TOTAL':<16} {run.angle(report.angle_sum)}")
    lines.append(f"Spherical excess: {run.angle(report.excess)}")
    lines.append(f"Spherical area:   {run.km2(report.spherical_area)}")
    lines.append("Sides:")
    lines += [f"  {labels[i]} - {labels[(i + 1) % n]}: {run.km(report.side_lengths[i])}" for i in range(n)]
    if report.reversed:
        lines.append("(vertices given clockwise; measured counterclockwise)")
    return lines


def cmd_triangle(texts: Sequence[str], run: RunConfig) -> CommandResult:
    """Ángulos, área esférica, lados, comparación con Herón y puntos de salida"""
    if len(texts) != 3:
        raise ValueError(f"triangle takes exactly 3 points, got {len(texts)}")
    labels, points = _resolve_all(texts, run)
    poly = GeodesicPolygon(tuple(points), run.sphere)
    report = polygon_report(poly)
    plane = compare_with_plane(poly)
    exits = exit_points(poly)

    data = {
        'vertices': [{'name': lb, 'lat': p.lat, 'lon': p.lon, **_xyz(p, run)} for lb, p in zip(labels, points)],
        'interior_angles_deg': report.interior_angles,
        'angle_sum_deg': report.angle_sum,
        'excess_deg': report.excess,
        'spherical_area_km2': report.spherical_area,
        'side_lengths_km': report.side_lengths,
        'planar_area_km2': plane.planar_area,
        'difference_km2': plane.difference,
        'exit_points': [{'from': labels[i], 'to': labels[j], 'lat': q.lat, 'lon': q.lon} for i, j, q in exits],
        'reversed': report.reversed,
        'radius_km': run.radius_km,
    }

    lines = ["Vertices:"]
    lines += [f"  {lb:<16} {p} -> {_triple(_xyz(p, run), run.distance_precision)} km"
              for lb, p in zip(labels, points)]
    lines.append("Angles:")
    lines += _report_lines(labels, report, run)
    lines.append(f"Planar (Heron) area: {run.km2(plane.planar_area)}")
    lines.append(f"Sphere minus plane:  {run.km2(plane.difference)}")
    lines.append("Perpendicular exit points:")
    lines += [f"  {labels[i]} × {labels[j]} -> {q}" for i, j, q in exits]

    tables = {
        'Vértices': _vertex_table(labels, points, report.interior_angles, run),
        'Lados': _side_table(labels, report.side_lengths),
        'Salidas': pd.DataFrame(data['exit_points']),
    }
    return CommandResult(data, lines, tables)


def _polygon_result(texts: Sequence[str], run: RunConfig):
    if len(texts) < 3:
        raise ValueError(f"a polygon needs at least 3 points, got {len(texts)}")
    labels, points = _resolve_all(texts, run)
    poly = GeodesicPolygon(tuple(points), run.sphere)
    report = polygon_report(poly)
    # recorrido antihorario: mismo orden que los ángulos, invertido si hizo falta
    walk_angles = list(reversed(report.interior_angles)) if report.reversed else list(report.interior_angles)
    reading = transport_reading(walk_angles)
    holonomy_area = area_from_holonomy(reading.raw, run.sphere)

    data = {
        'vertices': [{'name': lb, 'lat': p.lat, 'lon': p.lon} for lb, p in zip(labels, points)],
        'interior_angles_deg': report.interior_angles,
        'angle_sum_deg': report.angle_sum,
        'excess_deg': report.excess,
        'spherical_area_km2': report.spherical_area,
        'side_lengths_km': report.side_lengths,
        'holonomy_raw_deg': reading.raw,
        'holonomy_reduced_deg': reading.reduced,
        'holonomy_area_km2': holonomy_area,
        'reversed': report.reversed,
        'radius_km': run.radius_km,
    }
    lines = ["Angles:"] + _report_lines(labels, report, run)
    lines.append(f"Holonomy: raw {run.angle(reading.raw)}, reduced {run.angle(reading.reduced)}")
    lines.append(f"Area from holonomy: {run.km2(holonomy_area)}")
    tables = {
        'Vértices': _vertex_table(labels, points, report.interior_angles, run),
        'Lados': _side_table(labels, report.side_lengths),
    }
    return data, lines, tables, walk_angles, labels, report.reversed


def cmd_polygon(texts: Sequence[str], run: RunConfig) -> CommandResult:
    data, lines, tables, *_ = _polygon_result(texts, run)
    return CommandResult(data, lines, tables)


def cmd_transport(texts: Sequence[str], run: RunConfig) -> CommandResult:
    """Como polygon, más la lectura de la rueda de transporte después de cada giro"""
    data, lines, tables, walk_angles, labels, was_reversed = _polygon_result(texts, run)
    walk = walk_polygon(walk_angles)
    order = list(reversed(labels)) if was_reversed else list(labels)
    steps = [{'vertex': name, 'turn_deg': step.turn_angle, 'wheel_raw_deg': step.reading_raw,
              'wheel_deg': step.reading} for name, step in zip(order, walk.steps)]
    data['wheel_readings'] = steps
    data['wheel_final_raw_deg'] = walk.final_raw

    lines.append("Wheel readings (after each turn):")
    lines += [f"  {s['vertex']:<16} turn {run.angle(s['turn_deg'])} -> wheel {run.angle(s['wheel_deg'])}"
              for s in steps]
    lines.append(f"Final wheel reading: {run.angle(walk.final_raw)} (one full turn plus the holonomy)")
    tables['Rueda'] = pd.DataFrame(steps)
    return CommandResult(data, lines, tables)


def cmd_foucault(lat: float, run: RunConfig) -> CommandResult:
    """Giro diario del péndulo de Foucault y área del casquete al norte de la latitud"""
    precession = foucault_precession(lat)
    sense = precession_sense(lat)
    area = cap_area(lat, run.sphere)
    circle = latitude_circle_holonomy(lat, run.sphere)
    data = {
        'lat': lat,
        'precession_deg': precession,
        'sense': sense,
        'cap_area_km2': area,
        'holonomy_raw_deg': circle.raw,
        'holonomy_reduced_deg': circle.reduced,
        'radius_km': run.radius_km,
    }
    if sense == "none":
        headline = f"Latitude {lat:g}°: {run.angle(0.0)} per day, pendulum plane does not rotate"
    else:
        headline = f"Latitude {lat:g}°: {run.angle(precession)} per day, {sense} seen from above"
    lines = [
        headline,
        f"Cap area north of {lat:g}°: {run.km2(area)}",
        f"Latitude circle holonomy: raw {run.angle(circle.raw)}, reduced {run.angle(circle.reduced)}",
    ]
    return CommandResult(data, lines)


def load_mesh_source(source: str, run: RunConfig, n: int = 4, m: int = 4) -> SurfaceMesh:
    """Archivo JSON, malla incluida en data/meshes o nombre canónico, en ese orden"""
    path = Path(source)
    if path.suffix.lower() == '.json' or path.is_file():
        return read_mesh_file(path)
    if run.meshes_dir is not None:
        bundled = run.meshes_dir / f"{source.strip().lower().replace('-', '_')}.json"
        if bundled.is_file():
            return read_mesh_file(bundled)
    return canonical_mesh(source, n=n, m=m)


def cmd_mesh(source: str, run: RunConfig, n: int = 4, m: int = 4) -> CommandResult:
    """χ, género, histograma de caras, doble conteo de aristas y sumas de ángulos si hay geometría"""
    mesh = load_mesh_source(source, run, n, m)
    topo = euler_characteristic(mesh)
    face_total, twice_edges = edge_double_count_check(mesh)

    data = {
        'name': mesh.name,
        'V': topo.V, 'E': topo.E, 'F': topo.F,
        'chi': topo.chi,
        'genus': topo.genus,
        'orientable': topo.orientable,
        'components': topo.components,
        'face_size_histogram': {str(k): v for k, v in topo.face_size_histogram.items()},
        'face_edge_total': face_total,
        'twice_edges': twice_edges,
        'double_count_ok': face_total == twice_edges,
    }
    histogram = ", ".join(f"{count}×{size}-gon" for size, count in topo.face_size_histogram.items())
    mark = "✓" if face_total == twice_edges else "✗"
    lines = [
        f"{mesh.name}: V={topo.V} F={topo.F} E={topo.E} χ={topo.chi} genus={topo.genus}",
        f"Faces: {histogram}",
        f"ΣE_f={face_total}={'2E' if face_total == twice_edges else f'≠ 2E={twice_edges}'} {mark}",
    ]
    if not topo.orientable:
        lines.append("Surface is not orientable")
    tables = {'Caras': pd.DataFrame([{'sides': k, 'count': v} for k, v in topo.face_size_histogram.items()])}

    if mesh.has_geometry:
        summary = gauss_bonnet_summary(mesh, run.sphere)
        vertex_sums = vertex_angle_sum_check(mesh, run.sphere)
        worst = max(abs(s - 360.0) for s in vertex_sums)
        data.update({
            'total_angle_sum_deg': summary.total_angle_sum,
            'total_excess_deg': summary.total_excess,
            'chi_from_angles': summary.chi_from_angles,
            'vertex_angle_sums_deg': vertex_sums,
            'max_vertex_deviation_deg': worst,
            'covers_sphere': worst <= ANGLE_CHECK_TOLERANCE,
        })
        lines.append(f"Total excess {run.angle(summary.total_excess)} "
                     f"(= 360° × {summary.chi_from_angles:.{run.angle_precision}f})")
        lines.append(f"Angle sum {run.angle(summary.total_angle_sum)} = 360° × {summary.vertex_term:.3f} "
                     f"(V={topo.V}); max vertex deviation from 360°: {worst:.2e}°")
        tables['Vértices'] = pd.DataFrame({'vertex': range(mesh.V), 'angle_sum_deg': vertex_sums})
    return CommandResult(data, lines, tables)


def export_result(result: CommandResult, path: Path) -> Path:
    summary = {k: v for k, v in result.data.items() if not isinstance(v, (list, dict))}
    return ReportExporter.export_report_excel(summary, result.tables, path)
