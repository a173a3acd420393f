# test_holonomy.py - Transporte paralelo, reducción de ángulos y péndulo de Foucault
import math

import pytest

from geometry.core import LatLon, SphereConfig
from geometry.errors import GeometryError
from geometry.holonomy import (
    HolonomyReading,
    area_from_holonomy,
    cap_area,
    foucault_precession,
    holonomy_from_area,
    latitude_circle_holonomy,
    latitude_circle_polyline,
    precession_sense,
    reduce_angle,
    smooth_curve_holonomy,
    transport_polygon,
    transport_reading,
    walk_polygon,
)
from geometry.polygon import GeodesicPolygon, polygon_report

R = 6378.0
HEMISPHERE = 2 * math.pi * R ** 2


def test_bermuda_holonomy_matches_excess_area(bermuda):
    report = polygon_report(GeodesicPolygon(bermuda))
    theta = transport_polygon(report.interior_angles)
    assert theta == pytest.approx(-1.7, abs=0.3)
    assert theta == pytest.approx(-report.excess)
    assert area_from_holonomy(theta) == pytest.approx(report.spherical_area)


def test_flat_triangle_has_no_holonomy():
    reading = transport_reading([60.0, 60.0, 60.0])
    assert reading.raw == pytest.approx(0.0, abs=1e-12)
    assert reading.reduced == 0.0


def test_octant_holonomy():
    reading = transport_reading([90.0, 90.0, 90.0])
    assert reading.raw == pytest.approx(-90.0)
    assert reading.reduced == pytest.approx(270.0)
    assert area_from_holonomy(reading.raw) == pytest.approx(4 * math.pi * R ** 2 / 8)


def test_area_and_holonomy_are_inverse():
    assert holonomy_from_area(area_from_holonomy(-12.5)) == pytest.approx(-12.5)
    assert holonomy_from_area(HEMISPHERE) == pytest.approx(-360.0)
    with pytest.raises(GeometryError):
        holonomy_from_area(-1.0)


@pytest.mark.parametrize("theta, expected", [
    (360.0, 360.0),
    (0.0, 0.0),
    (-360.0, 0.0),
    (720.0, 0.0),
    (-90.0, 270.0),
    (-1.706, 358.294),
    (450.0, 90.0),
])
def test_reduce_angle(theta, expected):
    assert reduce_angle(theta) == pytest.approx(expected)


def test_reading_from_raw():
    assert HolonomyReading.from_raw(-450.0) == HolonomyReading(raw=-450.0, reduced=270.0)


def test_transport_needs_a_closed_polygon():
    with pytest.raises(GeometryError):
        transport_polygon([90.0, 90.0])
    with pytest.raises(GeometryError):
        transport_polygon([0.0, 90.0, 90.0])
    with pytest.raises(GeometryError):
        transport_polygon([90.0, 360.0, 90.0])


def test_wheel_walk_adds_one_full_turn():
    angles = [52.789, 54.821, 74.096]
    walk = walk_polygon(angles)
    assert len(walk.steps) == 3
    assert walk.wheel_readings == pytest.approx([127.211, 252.39, 358.294])
    assert walk.final_raw == pytest.approx(transport_polygon(angles) + 360.0)
    # la lectura de la rueda vive en (-180, 180]
    assert walk.steps[1].reading == pytest.approx(252.39 - 360.0)
    assert all(-180.0 < step.reading <= 180.0 for step in walk.steps)


def test_foucault_precession():
    assert foucault_precession(49) == pytest.approx(272, abs=0.5)
    assert foucault_precession(90) == 360.0
    assert foucault_precession(0) == 0.0
    assert foucault_precession(-90) == -360.0
    assert foucault_precession(-30) == pytest.approx(-180.0)
    with pytest.raises(GeometryError):
        foucault_precession(91)


def test_precession_sense():
    assert precession_sense(49) == "clockwise"
    assert precession_sense(-33) == "counterclockwise"
    assert precession_sense(0) == "none"


def test_cap_area():
    assert cap_area(0) == pytest.approx(HEMISPHERE)
    assert cap_area(90) == pytest.approx(0.0, abs=1e-6)
    assert cap_area(-90) == pytest.approx(4 * math.pi * R ** 2)
    assert cap_area(30, SphereConfig(1.0)) == pytest.approx(math.pi)


@pytest.mark.parametrize("lat, raw, reduced", [
    (49, 360 * (math.sin(math.radians(49)) - 1), 360 * math.sin(math.radians(49))),
    (90, 0.0, 360.0),
    (0, -360.0, 0.0),
    (-30, -540.0, 180.0),
])
def test_latitude_circle_holonomy(lat, raw, reduced):
    reading = latitude_circle_holonomy(lat)
    assert reading.raw == pytest.approx(raw, abs=1e-9)
    assert reading.reduced == pytest.approx(reduced, abs=1e-9)


def test_latitude_circle_polyline():
    points = latitude_circle_polyline(49, 8)
    assert len(points) == 8
    assert all(p.lat == 49 for p in points)
    assert [p.lon for p in points[:3]] == pytest.approx([180.0, -135.0, -90.0])
    with pytest.raises(GeometryError):
        latitude_circle_polyline(90, 8)
    with pytest.raises(GeometryError):
        latitude_circle_polyline(49, 2)


@pytest.mark.parametrize("lat", [49.0, -30.0])
def test_smooth_curve_approaches_latitude_circle(lat):
    exact = latitude_circle_holonomy(lat).raw
    coarse = smooth_curve_holonomy(latitude_circle_polyline(lat, 16)).raw
    fine = smooth_curve_holonomy(latitude_circle_polyline(lat, 256)).raw
    assert abs(fine - exact) < abs(coarse - exact)
    assert fine == pytest.approx(exact, abs=0.1)


def test_tiny_polygon_has_vanishing_holonomy():
    tiny = GeodesicPolygon((LatLon(10, 10), LatLon(10, 10.001), LatLon(10.001, 10.001), LatLon(10.001, 10)))
    reading = transport_reading(polygon_report(tiny).interior_angles)
    assert reading.raw == pytest.approx(0.0, abs=1e-5)
