# app/geometry/polygon.py - Ángulos, exceso esférico y área de polígonos geodésicos
from __future__ import annotations
from dataclasses import dataclass, field
from typing import List, Sequence, Tuple
import logging
import math

from .core import (
    DEGENERATE_TOLERANCE,
    LatLon,
    SphereConfig,
    Vec3,
    arc_length,
    central_angle,
    cross,
    dot,
    exit_point,
    to_cartesian,
)
from .errors import GeometryError

logger = logging.getLogger(__name__)

HERON_TOLERANCE = 1e-9


def _unit_vectors(points: Sequence[LatLon]) -> List[Vec3]:
    return [to_cartesian(p, SphereConfig(1.0)) for p in points]


def _check_side(a: Vec3, b: Vec3, label: str):
    """Un lado necesita un Gran Círculo único: ni puntos coincidentes ni antípodas"""
    if cross(a, b).norm() <= DEGENERATE_TOLERANCE:
        raise GeometryError(f"degenerate side {label}: coincident or antipodal vertices")


def _turn(prev: Vec3, at: Vec3, nxt: Vec3) -> float:
    """Giro con signo en `at` (positivo a la izquierda), en grados (-180, 180]

    n1 = at × prev y n2 = nxt × at son las normales de los dos Grandes Círculos.
    La magnitud del giro es el ángulo entre ambas normales; el signo lo da (n1 × n2)·at.
    """
    n1 = cross(at, prev)
    n2 = cross(nxt, at)
    sine = dot(cross(n1, n2), at)
    cosine = dot(n1, n2)
    return math.degrees(math.atan2(sine, cosine))


@dataclass(frozen=True)
class GeodesicPolygon:
    """Polígono sobre la esfera con lados de Gran Círculo implícitos"""
    vertices: Tuple[LatLon, ...]
    cfg: SphereConfig = field(default_factory=SphereConfig)

    def __post_init__(self):
        vertices = tuple(self.vertices)
        object.__setattr__(self, 'vertices', vertices)
        if len(vertices) < 3:
            raise GeometryError(f"a polygon needs at least 3 vertices, got {len(vertices)}")
        units = _unit_vectors(vertices)
        for i, a in enumerate(units):
            j = (i + 1) % len(units)
            _check_side(a, units[j], f"{i}-{j}")

    @property
    def n(self) -> int:
        return len(self.vertices)

    def unit_vectors(self) -> List[Vec3]:
        return _unit_vectors(self.vertices)

    def positions(self) -> List[Vec3]:
        return [to_cartesian(p, self.cfg) for p in self.vertices]

    def reversed(self) -> GeodesicPolygon:
        return GeodesicPolygon(tuple(reversed(self.vertices)), self.cfg)

    def rotated(self, k: int) -> GeodesicPolygon:
        k %= self.n
        return GeodesicPolygon(self.vertices[k:] + self.vertices[:k], self.cfg)


@dataclass
class PolygonReport:
    """Resumen de un polígono geodésico. Ángulo i pertenece al vértice i; lado i une i con i+1."""
    interior_angles: List[float]
    angle_sum: float
    excess: float
    spherical_area: float
    side_lengths: List[float]
    reversed: bool = False

    @property
    def n(self) -> int:
        return len(self.interior_angles)


@dataclass
class PlaneComparison:
    """Área esférica contra la fórmula plana de Herón con los mismos lados"""
    spherical_area: float
    planar_area: float
    difference: float
    side_lengths: List[float]


def vertex_angle(prev: LatLon, at: LatLon, next: LatLon, cfg: SphereConfig = SphereConfig()) -> float:
    """Ángulo interior en `at`, en grados (0, 360), asumiendo recorrido antihorario

    Para vértices convexos es 180° − central_angle(n1, n2) con n1 = at × prev, n2 = next × at.
    """
    a, b, c = _unit_vectors((prev, at, next))
    _check_side(b, a, "at-prev")
    _check_side(c, b, "next-at")
    return 180.0 - _turn(a, b, c)


def interior_angles(poly: GeodesicPolygon) -> List[float]:
    """Ángulos interiores en el orden dado, tomando ese orden como antihorario"""
    units = poly.unit_vectors()
    n = len(units)
    return [180.0 - _turn(units[i - 1], units[i], units[(i + 1) % n]) for i in range(n)]


def accumulated_turning(poly: GeodesicPolygon) -> float:
    return sum(180.0 - alpha for alpha in interior_angles(poly))


def is_counterclockwise(poly: GeodesicPolygon) -> bool:
    """Antihorario visto desde fuera: el giro acumulado es positivo"""
    return accumulated_turning(poly) > -1e-9


def oriented(poly: GeodesicPolygon) -> GeodesicPolygon:
    return poly if is_counterclockwise(poly) else poly.reversed()


def excess_to_area(excess: float, cfg: SphereConfig) -> float:
    """A = R²·exceso·(2π/360)"""
    return excess * cfg.area_per_degree


def side_lengths(poly: GeodesicPolygon) -> List[float]:
    pts = poly.positions()
    n = len(pts)
    return [arc_length(central_angle(pts[i], pts[(i + 1) % n]), poly.cfg) for i in range(n)]


def polygon_report(poly: GeodesicPolygon, normalize_orientation: bool = True) -> PolygonReport:
    """Ángulos, suma, exceso, área y lados del polígono

    Con normalize_orientation el polígono se recorre antihorario (invirtiéndolo si hace
    falta) y los resultados se devuelven en el orden de vértices de quien llama.
    """
    n = poly.n
    angles = interior_angles(poly)
    was_reversed = False
    if normalize_orientation and not is_counterclockwise(poly):
        # el ángulo en el vértice i es el mismo sin importar por dónde se llegue
        flipped = interior_angles(poly.reversed())
        angles = [flipped[n - 1 - i] for i in range(n)]
        was_reversed = True
        logger.info("⚠️ Polígono recorrido en sentido horario; se invierte la orientación")

    angle_sum = sum(angles)
    excess = angle_sum - (n - 2) * 180.0
    report = PolygonReport(
        interior_angles=angles,
        angle_sum=angle_sum,
        excess=excess,
        spherical_area=excess_to_area(excess, poly.cfg),
        side_lengths=side_lengths(poly),
        reversed=was_reversed,
    )
    logger.debug(f"polygon n={n} sum={angle_sum:.6f} excess={excess:.6f}")
    return report


def exit_points(poly: GeodesicPolygon) -> List[Tuple[int, int, LatLon]]:
    """Salidas de las perpendiculares de cada lado como (i, j, punto) para el producto vi × vj

    Los pares (i, j) son consecutivos en sentido antihorario; los índices son los de quien llama.
    """
    n = poly.n
    order = list(range(n)) if is_counterclockwise(poly) else list(reversed(range(n)))
    pts = poly.positions()
    pairs = [(order[k], order[(k + 1) % n]) for k in range(n)]
    return [(i, j, exit_point(pts[i], pts[j], poly.cfg)) for i, j in pairs]


def heron_area(a: float, b: float, c: float) -> float:
    """Área plana con la fórmula de Herón; 0 para triángulos degenerados"""
    if min(a, b, c) < 0:
        raise GeometryError(f"side lengths must be non-negative: {a}, {b}, {c}")
    a, b, c = sorted((a, b, c), reverse=True)
    if a > (b + c) * (1.0 + HERON_TOLERANCE):
        raise GeometryError(f"not a triangle: {a} > {b} + {c}")
    # forma estable de sqrt(s(s−a)(s−b)(s−c)) con a ≥ b ≥ c
    product = (a + (b + c)) * (c - (a - b)) * (c + (a - b)) * (a + (b - c))
    return 0.25 * math.sqrt(max(product, 0.0))


def compare_with_plane(poly: GeodesicPolygon) -> PlaneComparison:
    """Los lados que se pasan a Herón son arcos de Gran Círculo, no cuerdas"""
    if poly.n != 3:
        raise GeometryError("triangle comparison only")
    report = polygon_report(poly)
    planar = heron_area(*report.side_lengths)
    return PlaneComparison(
        spherical_area=report.spherical_area,
        planar_area=planar,
        difference=report.spherical_area - planar,
        side_lengths=report.side_lengths,
    )


def sphere_vs_plane_excess_area(poly: GeodesicPolygon) -> float:
    return compare_with_plane(poly).difference
