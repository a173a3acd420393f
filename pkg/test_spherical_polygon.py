# test_spherical_polygon.py - Ángulos interiores, exceso, área y comparación con Herón
import math

import pytest

from geometry.core import LatLon, SphereConfig
from geometry.errors import GeometryError
from geometry.polygon import (
    GeodesicPolygon,
    compare_with_plane,
    exit_points,
    heron_area,
    interior_angles,
    is_counterclockwise,
    oriented,
    polygon_report,
    sphere_vs_plane_excess_area,
    vertex_angle,
)

R = 6378.0
OCTANT = (LatLon(0, 0), LatLon(0, 90), LatLon(90, 0))


def test_bermuda_triangle_report(bermuda):
    florida, puerto_rico, bermuda_island = bermuda
    report = polygon_report(GeodesicPolygon((florida, puerto_rico, bermuda_island)))

    assert report.reversed is False
    assert report.interior_angles == pytest.approx([52.8, 54.8, 74.1], abs=0.3)
    assert report.angle_sum == pytest.approx(181.7, abs=0.3)
    assert report.spherical_area == pytest.approx(1_211_500, rel=0.01)
    # lados: F-PR, PR-B, B-F
    assert report.side_lengths == pytest.approx([1895, 1562, 1604], abs=10)


def test_clockwise_input_is_normalized_and_keeps_vertex_order(bermuda):
    florida, puerto_rico, bermuda_island = bermuda
    ccw = polygon_report(GeodesicPolygon((florida, puerto_rico, bermuda_island)))
    cw = polygon_report(GeodesicPolygon((florida, bermuda_island, puerto_rico)))

    assert cw.reversed is True
    assert cw.interior_angles == pytest.approx([ccw.interior_angles[0], ccw.interior_angles[2],
                                                ccw.interior_angles[1]])
    assert cw.spherical_area == pytest.approx(ccw.spherical_area)
    # lados F-B, B-PR, PR-F
    assert cw.side_lengths == pytest.approx([1604, 1562, 1895], abs=10)


def test_without_normalization_the_complement_is_measured(bermuda):
    florida, puerto_rico, bermuda_island = bermuda
    poly = GeodesicPolygon((florida, bermuda_island, puerto_rico))
    small = polygon_report(poly)
    large = polygon_report(poly, normalize_orientation=False)
    assert large.reversed is False
    assert large.excess == pytest.approx(720.0 - small.excess)
    assert small.spherical_area + large.spherical_area == pytest.approx(4 * math.pi * R ** 2)


def test_heron_comparison(bermuda):
    comparison = compare_with_plane(GeodesicPolygon(bermuda))
    assert comparison.planar_area == pytest.approx(1_200_800, rel=0.001)
    assert comparison.difference == pytest.approx(10_700, rel=0.15)
    assert comparison.difference == pytest.approx(comparison.spherical_area - comparison.planar_area)
    assert sphere_vs_plane_excess_area(GeodesicPolygon(bermuda)) == pytest.approx(comparison.difference)


def test_octant_triangle():
    report = polygon_report(GeodesicPolygon(OCTANT))
    assert report.interior_angles == pytest.approx([90, 90, 90])
    assert report.spherical_area == pytest.approx(4 * math.pi * R ** 2 / 8)
    assert report.side_lengths == pytest.approx([math.pi * R / 2] * 3)


def test_octant_on_unit_sphere():
    report = polygon_report(GeodesicPolygon(OCTANT, SphereConfig(1.0)))
    assert report.spherical_area == pytest.approx(math.pi / 2)


def test_degenerate_triangles_are_rejected():
    nyc = LatLon(41, -74)
    with pytest.raises(GeometryError, match="degenerate side"):
        GeodesicPolygon((nyc, nyc, LatLon(49, 3)))
    with pytest.raises(GeometryError, match="degenerate side"):
        GeodesicPolygon((LatLon(0, 0), LatLon(0, 180), LatLon(45, 90)))
    with pytest.raises(GeometryError):
        GeodesicPolygon((LatLon(0, 0), LatLon(0, 1)))


def test_orientation_helpers(bermuda):
    florida, puerto_rico, bermuda_island = bermuda
    ccw = GeodesicPolygon((florida, puerto_rico, bermuda_island))
    cw = ccw.reversed()
    assert is_counterclockwise(ccw)
    assert not is_counterclockwise(cw)
    assert oriented(cw).vertices == tuple(reversed(cw.vertices))
    assert oriented(ccw) is ccw


def test_rotation_rotates_angles(bermuda):
    poly = GeodesicPolygon(bermuda)
    angles = interior_angles(poly)
    assert interior_angles(poly.rotated(1)) == pytest.approx(angles[1:] + angles[:1])


def test_vertex_angle_straight_left_and_right():
    west, origin = LatLon(0, -10), LatLon(0, 0)
    assert vertex_angle(west, origin, LatLon(0, 10)) == pytest.approx(180.0)
    # hacia el norte es girar a la izquierda, hacia el sur a la derecha
    assert vertex_angle(west, origin, LatLon(10, 0)) == pytest.approx(90.0)
    assert vertex_angle(west, origin, LatLon(-10, 0)) == pytest.approx(270.0)


def test_reflex_vertex_polygon():
    # rectángulo con una muesca: el vértice de la muesca es reflejo
    poly = GeodesicPolygon((LatLon(0, 0), LatLon(0, 10), LatLon(10, 10),
                            LatLon(5, 5), LatLon(10, 0)))
    report = polygon_report(poly)
    assert report.reversed is False
    assert report.interior_angles[3] > 180.0
    assert report.excess > 0.0


def test_equator_square_covers_a_hemisphere():
    square = GeodesicPolygon((LatLon(0, 0), LatLon(0, 90), LatLon(0, 180), LatLon(0, -90)))
    report = polygon_report(square)
    assert report.interior_angles == pytest.approx([180.0] * 4)
    assert report.spherical_area == pytest.approx(2 * math.pi * R ** 2)


def test_exit_points_follow_counterclockwise_pairs(bermuda):
    florida, puerto_rico, bermuda_island = bermuda
    # entrada horaria: F=0, B=1, PR=2
    exits = {(i, j): p for i, j, p in exit_points(GeodesicPolygon((florida, bermuda_island, puerto_rico)))}
    assert set(exits) == {(0, 2), (2, 1), (1, 0)}
    assert (exits[(0, 2)].lat, exits[(0, 2)].lon) == pytest.approx((48, 45), abs=1)
    assert (exits[(2, 1)].lat, exits[(2, 1)].lon) == pytest.approx((3, -157), abs=1)
    assert (exits[(1, 0)].lat, exits[(1, 0)].lon) == pytest.approx((-56, -43), abs=1)


def test_heron_formula():
    assert heron_area(3, 4, 5) == pytest.approx(6.0)
    assert heron_area(1, 2, 3) == 0.0
    with pytest.raises(GeometryError, match="not a triangle"):
        heron_area(1, 1, 3)


def test_plane_comparison_only_for_triangles():
    square = GeodesicPolygon((LatLon(0, 0), LatLon(0, 10), LatLon(10, 10), LatLon(10, 0)))
    with pytest.raises(GeometryError, match="triangle comparison only"):
        compare_with_plane(square)


def test_octant_plane_comparison_closed_form():
    # lados de π·R/2: Herón equilátero √3/4·(πR/2)² contra πR²/2
    expected = math.pi * R ** 2 / 2 - math.sqrt(3) * math.pi ** 2 * R ** 2 / 16
    assert sphere_vs_plane_excess_area(GeodesicPolygon(OCTANT)) == pytest.approx(expected, rel=1e-9)


def test_kilometre_triangle_is_flat():
    side = math.degrees(1.0 / R)
    tiny = GeodesicPolygon((LatLon(0, 0), LatLon(0, side), LatLon(side, 0)))
    assert abs(sphere_vs_plane_excess_area(tiny)) < 1e-3


def test_small_triangles_approach_heron():
    errors = []
    for size in (1.0, 0.1, 0.01):
        comparison = compare_with_plane(
            GeodesicPolygon((LatLon(10, 10), LatLon(10, 10 + size), LatLon(10 + size, 10))))
        errors.append(abs(comparison.spherical_area / comparison.planar_area - 1.0))
    assert errors[1] < errors[0]
    assert errors[1] < 1e-5
    assert errors[2] < 1e-6
