# app/geometry/holonomy.py - Transporte paralelo, área desde el ángulo acumulado y Foucault
from __future__ import annotations
from dataclasses import dataclass, field
from typing import List, Sequence
import logging
import math

from .core import LatLon, SphereConfig
from .errors import GeometryError
from .polygon import GeodesicPolygon, interior_angles

logger = logging.getLogger(__name__)

FULL_TURN = 360.0
_SNAP = 1e-9


def _check_latitude(lat: float):
    if not math.isfinite(lat) or not -90.0 <= lat <= 90.0:
        raise GeometryError(f"latitude out of range [-90, 90]: {lat}")


def reduce_angle(theta: float) -> float:
    """Representante en [0°, 360°); un valor de exactamente +360° se informa como 360°"""
    if abs(theta - FULL_TURN) <= _SNAP:
        return FULL_TURN
    reduced = theta % FULL_TURN
    if reduced > FULL_TURN - _SNAP or reduced < _SNAP:
        return 0.0
    return reduced


def _reduce_signed(theta: float) -> float:
    """Lectura de la rueda en (-180°, 180°]"""
    reduced = math.fmod(theta, FULL_TURN)
    if reduced <= -180.0:
        reduced += FULL_TURN
    elif reduced > 180.0:
        reduced -= FULL_TURN
    return reduced


@dataclass(frozen=True)
class HolonomyReading:
    """Ángulo acumulado: `raw` conserva la información de área, `reduced` es lo que se lee"""
    raw: float
    reduced: float

    @classmethod
    def from_raw(cls, raw: float) -> HolonomyReading:
        return cls(raw=raw, reduced=reduce_angle(raw))


@dataclass(frozen=True)
class TurnEvent:
    turn_angle: float
    reading_raw: float
    reading: float


@dataclass
class TransportWalk:
    """Recorrido con la rueda de transporte paralelo: tras cada giro α la rueda suma 180° − α"""
    steps: List[TurnEvent] = field(default_factory=list)

    @property
    def wheel_readings(self) -> List[float]:
        return [step.reading_raw for step in self.steps]

    @property
    def final_raw(self) -> float:
        return self.steps[-1].reading_raw if self.steps else 0.0

    def turn(self, alpha: float) -> TurnEvent:
        raw = self.final_raw + (180.0 - alpha)
        event = TurnEvent(turn_angle=alpha, reading_raw=raw, reading=_reduce_signed(raw))
        self.steps.append(event)
        return event


def _check_angles(angles: Sequence[float]):
    if len(angles) < 3:
        raise GeometryError(f"a closed walk needs at least 3 turns, got {len(angles)}")
    for alpha in angles:
        if not 0.0 < alpha < 360.0:
            raise GeometryError(f"interior angle out of range (0, 360): {alpha}")


def walk_polygon(interior_angles: Sequence[float]) -> TransportWalk:
    """Simula la rueda; la lectura final es θ + 360° (la vuelta completa que se descarta)"""
    _check_angles(interior_angles)
    walk = TransportWalk()
    for alpha in interior_angles:
        walk.turn(alpha)
    return walk


def transport_polygon(interior_angles: Sequence[float]) -> float:
    """θ = (N − 2)·180° − (α1 + … + αN), sin reducir"""
    _check_angles(interior_angles)
    return (len(interior_angles) - 2) * 180.0 - sum(interior_angles)


def transport_reading(interior_angles: Sequence[float]) -> HolonomyReading:
    return HolonomyReading.from_raw(transport_polygon(interior_angles))


def area_from_holonomy(theta: float, cfg: SphereConfig = SphereConfig()) -> float:
    """A = R²·(−θ)·(2π/360)"""
    return -theta * cfg.area_per_degree


def holonomy_from_area(area: float, cfg: SphereConfig = SphereConfig()) -> float:
    """θ = −(A/R²)·(360/2π)"""
    if area < 0:
        raise GeometryError(f"area must be non-negative, got {area}")
    return -area / cfg.area_per_degree


def cap_area(lat: float, cfg: SphereConfig = SphereConfig()) -> float:
    """Área del casquete al norte de la latitud: 2πR²[1 − sin(lat)]"""
    _check_latitude(lat)
    return 2.0 * math.pi * cfg.radius_km ** 2 * (1.0 - math.sin(math.radians(lat)))


def foucault_precession(lat: float) -> float:
    """Giro diario del plano del péndulo: 360°·sin(lat), con signo (impar en la latitud)"""
    _check_latitude(lat)
    if lat in (90.0, -90.0):
        return math.copysign(FULL_TURN, lat)
    return FULL_TURN * math.sin(math.radians(lat))


def precession_sense(lat: float) -> str:
    """Sentido de giro visto desde arriba: horario en el norte, antihorario en el sur"""
    _check_latitude(lat)
    if lat > 0:
        return "clockwise"
    if lat < 0:
        return "counterclockwise"
    return "none"


def latitude_circle_holonomy(lat: float, cfg: SphereConfig = SphereConfig()) -> HolonomyReading:
    """raw = −cap_area/R²·(360/2π) = 360(sin φ − 1); reduced = 360 sin φ módulo 360"""
    raw = holonomy_from_area(cap_area(lat, cfg), cfg)
    return HolonomyReading(raw=raw, reduced=reduce_angle(foucault_precession(lat)))


def latitude_circle_polyline(lat: float, n: int) -> List[LatLon]:
    """N-gono regular sobre el círculo de latitud, hacia el este (el casquete norte queda a la izquierda)"""
    _check_latitude(lat)
    if abs(lat) == 90.0:
        raise GeometryError("a latitude circle at a pole has no length")
    if n < 3:
        raise GeometryError(f"need at least 3 points, got {n}")
    return [LatLon(lat, -180.0 + FULL_TURN * k / n) for k in range(n)]


def smooth_curve_holonomy(curve: Sequence[LatLon], cfg: SphereConfig = SphereConfig()) -> HolonomyReading:
    """Curva cerrada aproximada por tramos de Gran Círculo, región encerrada a la izquierda"""
    poly = GeodesicPolygon(tuple(curve), cfg)
    reading = transport_reading(interior_angles(poly))
    logger.debug(f"smooth curve n={poly.n} raw={reading.raw:.9f}")
    return reading
