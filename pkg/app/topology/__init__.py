# app/topology/__init__.py
from .mesh import (
    GENUS_UNKNOWN,
    GaussBonnetSummary,
    MeshValidationError,
    SurfaceMesh,
    TopologyReport,
    angle_sum_identity_check,
    dump_mesh,
    edge_double_count_check,
    euler_characteristic,
    gauss_bonnet_summary,
    load_mesh,
    split_face,
    subdivide_edge,
    vertex_angle_sum_check,
)
from .solids import canonical_mesh

__all__ = [
    'GENUS_UNKNOWN', 'GaussBonnetSummary', 'MeshValidationError', 'SurfaceMesh',
    'TopologyReport', 'angle_sum_identity_check', 'canonical_mesh', 'dump_mesh',
    'edge_double_count_check', 'euler_characteristic', 'gauss_bonnet_summary',
    'load_mesh', 'split_face', 'subdivide_edge', 'vertex_angle_sum_check',
]
