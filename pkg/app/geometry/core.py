# app/geometry/core.py - Conversión geográfica <-> cartesiana y productos punto/cruz
from __future__ import annotations
from dataclasses import dataclass
import logging
import math

import numpy as np

from .errors import GeometryError

logger = logging.getLogger(__name__)

EARTH_RADIUS_KM = 6378.0
ACOS_TOLERANCE = 1e-9
# Por debajo de esto (en radianes, sobre vectores unitarios) dos direcciones se consideran paralelas
DEGENERATE_TOLERANCE = 1e-9


def normalize_longitude(lon: float) -> float:
    """Lleva la longitud al intervalo (-180, 180]"""
    lon = math.fmod(lon, 360.0)
    if lon <= -180.0:
        lon += 360.0
    elif lon > 180.0:
        lon -= 360.0
    return lon


@dataclass(frozen=True)
class SphereConfig:
    """Esfera de trabajo; por defecto la Tierra de 6378 km"""
    radius_km: float = EARTH_RADIUS_KM

    def __post_init__(self):
        if not math.isfinite(self.radius_km) or self.radius_km <= 0:
            raise GeometryError(f"radius must be positive, got {self.radius_km}")

    @property
    def area_per_degree(self) -> float:
        """km² encerrados por cada grado de exceso esférico: R²·(2π/360)"""
        return self.radius_km ** 2 * math.radians(1.0)


@dataclass(frozen=True)
class LatLon:
    """Coordenada geográfica en grados. Norte y Este positivos (NYC = 41, -74)."""
    lat: float
    lon: float

    def __post_init__(self):
        if not (math.isfinite(self.lat) and math.isfinite(self.lon)):
            raise GeometryError(f"non-finite coordinate ({self.lat}, {self.lon})")
        if not -90.0 <= self.lat <= 90.0:
            raise GeometryError(f"latitude out of range [-90, 90]: {self.lat}")
        object.__setattr__(self, 'lon', normalize_longitude(self.lon))

    def __str__(self) -> str:
        ns = 'N' if self.lat >= 0 else 'S'
        ew = 'E' if self.lon >= 0 else 'W'
        return f"({abs(self.lat):.0f}° {ns}, {abs(self.lon):.0f}° {ew})"


@dataclass(frozen=True)
class Vec3:
    """Triple cartesiano: km para posiciones, sin unidades para direcciones"""
    x: float
    y: float
    z: float

    def __post_init__(self):
        if not all(math.isfinite(c) for c in (self.x, self.y, self.z)):
            raise GeometryError(f"non-finite vector ({self.x}, {self.y}, {self.z})")

    @classmethod
    def from_array(cls, values) -> Vec3:
        x, y, z = (float(v) for v in values)
        return cls(x, y, z)

    def as_array(self) -> np.ndarray:
        return np.array([self.x, self.y, self.z], dtype=float)

    def as_tuple(self) -> tuple:
        return (self.x, self.y, self.z)

    def norm(self) -> float:
        return math.sqrt(dot(self, self))

    def unit(self) -> Vec3:
        length = self.norm()
        if length == 0.0:
            raise GeometryError("degenerate direction")
        return Vec3(self.x / length, self.y / length, self.z / length)

    def scaled(self, length: float) -> Vec3:
        """Mismo sentido, nueva longitud"""
        return self.unit() * length

    def __add__(self, other: Vec3) -> Vec3:
        return Vec3(self.x + other.x, self.y + other.y, self.z + other.z)

    def __sub__(self, other: Vec3) -> Vec3:
        return Vec3(self.x - other.x, self.y - other.y, self.z - other.z)

    def __neg__(self) -> Vec3:
        return Vec3(-self.x, -self.y, -self.z)

    def __mul__(self, k: float) -> Vec3:
        return Vec3(self.x * k, self.y * k, self.z * k)

    __rmul__ = __mul__


def to_cartesian(p: LatLon, cfg: SphereConfig = SphereConfig()) -> Vec3:
    """[R cos(lat) cos(lon), R cos(lat) sin(lon), R sin(lat)]"""
    lat, lon = math.radians(p.lat), math.radians(p.lon)
    r = cfg.radius_km
    return Vec3(r * math.cos(lat) * math.cos(lon),
                r * math.cos(lat) * math.sin(lon),
                r * math.sin(lat))


def to_latlon(v: Vec3, cfg: SphereConfig = SphereConfig()) -> LatLon:
    """Inversa de to_cartesian. En los polos la longitud se fija en 0 por convención.

    La latitud se obtiene con atan2(z, ρ), equivalente a asin(z/‖v‖) pero estable
    cerca de los polos. El radio de `cfg` no interviene: cualquier múltiplo
    positivo de v apunta a la misma coordenada.
    """
    length = v.norm()
    if length == 0.0:
        raise GeometryError("degenerate direction")
    rho = math.hypot(v.x, v.y)
    lat = math.degrees(math.atan2(v.z, rho))
    if rho <= 1e-15 * length:
        return LatLon(90.0 if v.z > 0 else -90.0, 0.0)
    return LatLon(lat, math.degrees(math.atan2(v.y, v.x)))


def dot(a: Vec3, b: Vec3) -> float:
    """Producto punto: x1·x2 + y1·y2 + z1·z2"""
    return float(np.dot(a.as_array(), b.as_array()))


def cross(a: Vec3, b: Vec3) -> Vec3:
    """Producto cruz (a2·b3 − b2·a3, a3·b1 − b3·a1, a1·b2 − b1·a2), regla de la mano derecha.

    Entradas paralelas devuelven el vector nulo; quien llama decide qué hacer.
    """
    return Vec3.from_array(np.cross(a.as_array(), b.as_array()))


def _clamped_acos(value: float) -> float:
    if value > 1.0 + ACOS_TOLERANCE or value < -1.0 - ACOS_TOLERANCE:
        raise GeometryError("not a triangle")
    return math.degrees(math.acos(min(1.0, max(-1.0, value))))


def central_angle(a: Vec3, b: Vec3) -> float:
    """Ángulo en el centro entre a y b, en grados [0, 180]"""
    la, lb = a.norm(), b.norm()
    if la == 0.0 or lb == 0.0:
        raise GeometryError("degenerate direction")
    cosine = dot(a, b) / (la * lb)
    # el redondeo puede empujar el coseno apenas fuera de [-1, 1]
    return math.degrees(math.acos(min(1.0, max(-1.0, cosine))))


def arc_length(angle_deg: float, cfg: SphereConfig = SphereConfig()) -> float:
    """(α/360)·2πR"""
    return angle_deg / 360.0 * 2.0 * math.pi * cfg.radius_km


def chord_length(a: Vec3, b: Vec3) -> float:
    return (a - b).norm()


def great_circle_distance(p: LatLon, q: LatLon, cfg: SphereConfig = SphereConfig()) -> float:
    """Distancia en km a lo largo del arco de Gran Círculo. Antípodas: πR."""
    alpha = central_angle(to_cartesian(p, cfg), to_cartesian(q, cfg))
    return arc_length(alpha, cfg)


def law_of_cosines_angle(l1: float, l2: float, l3: float) -> float:
    """Ángulo opuesto a l3: cos(α) = (l1² + l2² − l3²) / (2·l1·l2)"""
    if l1 <= 0 or l2 <= 0 or l3 < 0:
        raise GeometryError(f"side lengths must be positive: {l1}, {l2}, {l3}")
    return _clamped_acos((l1 * l1 + l2 * l2 - l3 * l3) / (2.0 * l1 * l2))


def exit_point(a: Vec3, b: Vec3, cfg: SphereConfig = SphereConfig()) -> LatLon:
    """Punto donde la perpendicular al Gran Círculo por a y b sale de la esfera"""
    normal = cross(a, b)
    if normal.norm() <= DEGENERATE_TOLERANCE * a.norm() * b.norm():
        raise GeometryError("degenerate direction")
    point = to_latlon(normal.scaled(cfg.radius_km), cfg)
    logger.debug(f"exit point {a} x {b} -> {point}")
    return point
