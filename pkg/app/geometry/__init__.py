# app/geometry/__init__.py
from .core import (
    EARTH_RADIUS_KM,
    LatLon,
    SphereConfig,
    Vec3,
    arc_length,
    central_angle,
    chord_length,
    cross,
    dot,
    exit_point,
    great_circle_distance,
    law_of_cosines_angle,
    to_cartesian,
    to_latlon,
)
from .errors import GeometryError
from .holonomy import (
    HolonomyReading,
    TransportWalk,
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
from .polygon import (
    GeodesicPolygon,
    PlaneComparison,
    PolygonReport,
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

__all__ = [
    'EARTH_RADIUS_KM', 'LatLon', 'SphereConfig', 'Vec3', 'GeometryError',
    'arc_length', 'central_angle', 'chord_length', 'cross', 'dot', 'exit_point',
    'great_circle_distance', 'law_of_cosines_angle', 'to_cartesian', 'to_latlon',
    'GeodesicPolygon', 'PlaneComparison', 'PolygonReport', 'compare_with_plane',
    'exit_points', 'heron_area', 'interior_angles', 'is_counterclockwise', 'oriented',
    'polygon_report', 'sphere_vs_plane_excess_area', 'vertex_angle',
    'HolonomyReading', 'TransportWalk', 'area_from_holonomy', 'cap_area',
    'foucault_precession', 'holonomy_from_area', 'latitude_circle_holonomy',
    'latitude_circle_polyline', 'precession_sense', 'reduce_angle',
    'smooth_curve_holonomy', 'transport_polygon', 'transport_reading', 'walk_polygon',
]
