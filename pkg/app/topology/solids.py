# app/topology/solids.py - Mallas canónicas: sólidos platónicos, balón de fútbol, toros
from __future__ import annotations
from itertools import combinations, product
from typing import Dict, List, Sequence, Tuple
import logging
import math
import re

import numpy as np

from geometry.core import Vec3
from .mesh import MeshValidationError, SurfaceMesh

logger = logging.getLogger(__name__)

GOLDEN = (1.0 + math.sqrt(5.0)) / 2.0

# caras del icosaedro sobre los 12 vértices de abajo
ICOSAHEDRON_FACES = [
    (0, 11, 5), (0, 5, 1), (0, 1, 7), (0, 7, 10), (0, 10, 11),
    (1, 5, 9), (5, 11, 4), (11, 10, 2), (10, 7, 6), (7, 1, 8),
    (3, 9, 4), (3, 4, 2), (3, 2, 6), (3, 6, 8), (3, 8, 9),
    (4, 9, 5), (2, 4, 11), (6, 2, 10), (8, 6, 7), (9, 8, 1),
]


def _unit_rows(points) -> np.ndarray:
    pts = np.asarray(points, dtype=float)
    return pts / np.linalg.norm(pts, axis=1, keepdims=True)


def orient_outward(faces: Sequence[Sequence[int]], positions: np.ndarray) -> List[Tuple[int, ...]]:
    """Deja cada cara antihoraria vista desde fuera (normal de Newell hacia afuera)"""
    oriented = []
    for face in faces:
        pts = positions[list(face)]
        normal = np.cross(pts, np.roll(pts, -1, axis=0)).sum(axis=0)
        if np.dot(normal, pts.mean(axis=0)) < 0:
            face = tuple(reversed(face))
        oriented.append(tuple(face))
    return oriented


def _geometric(name: str, positions: np.ndarray, faces) -> SurfaceMesh:
    positions = _unit_rows(positions)
    return SurfaceMesh(
        vertex_count=len(positions),
        faces=tuple(orient_outward(faces, positions)),
        positions=tuple(Vec3.from_array(p) for p in positions),
        name=name,
    )


def tetrahedron() -> SurfaceMesh:
    positions = np.array([(1, 1, 1), (1, -1, -1), (-1, 1, -1), (-1, -1, 1)], dtype=float)
    return _geometric("tetrahedron", positions, list(combinations(range(4), 3)))


def cube() -> SurfaceMesh:
    positions = np.array(list(product((-1.0, 1.0), repeat=3)))
    faces = []
    for axis in range(3):
        u, v = [k for k in range(3) if k != axis]
        for sign in (-1.0, 1.0):
            corners = [i for i, p in enumerate(positions) if p[axis] == sign]
            corners.sort(key=lambda i: math.atan2(positions[i][v], positions[i][u]))
            faces.append(tuple(corners))
    return _geometric("cube", positions, faces)


def octahedron() -> SurfaceMesh:
    # 0:+x 1:−x 2:+y 3:−y 4:+z 5:−z, una cara por octante
    positions = np.array([(1, 0, 0), (-1, 0, 0), (0, 1, 0), (0, -1, 0), (0, 0, 1), (0, 0, -1)], dtype=float)
    faces = [(ix, 2 + iy, 4 + iz) for ix, iy, iz in product((0, 1), repeat=3)]
    return _geometric("octahedron", positions, faces)


def _icosahedron_positions() -> np.ndarray:
    t = GOLDEN
    return np.array([
        (-1, t, 0), (1, t, 0), (-1, -t, 0), (1, -t, 0),
        (0, -1, t), (0, 1, t), (0, -1, -t), (0, 1, -t),
        (t, 0, -1), (t, 0, 1), (-t, 0, -1), (-t, 0, 1),
    ], dtype=float)


def icosahedron() -> SurfaceMesh:
    return _geometric("icosahedron", _icosahedron_positions(), ICOSAHEDRON_FACES)


def truncated_icosahedron() -> SurfaceMesh:
    """Icosaedro con las esquinas limadas: cada arista se triseca, 12 pentágonos + 20 hexágonos

    El vértice (i→j) está a un tercio del camino de i hacia j; luego todo se proyecta a la esfera.
    """
    ico = _icosahedron_positions()
    faces = orient_outward(ICOSAHEDRON_FACES, _unit_rows(ico))

    # sucesor antihorario de cada vecino alrededor de un vértice del icosaedro
    around: Dict[int, Dict[int, int]] = {i: {} for i in range(len(ico))}
    for face in faces:
        for k in range(3):
            a, b, c = face[k], face[(k + 1) % 3], face[(k + 2) % 3]
            around[a][b] = c

    directed = sorted((i, j) for i in around for j in around[i])
    index = {edge: n for n, edge in enumerate(directed)}
    positions = np.array([ico[i] + (ico[j] - ico[i]) / 3.0 for i, j in directed])

    new_faces = []
    for i, ring in around.items():
        j = min(ring)
        pentagon = []
        for _ in range(len(ring)):
            pentagon.append(index[(i, j)])
            j = ring[j]
        new_faces.append(tuple(pentagon))
    for a, b, c in faces:
        new_faces.append((index[(a, b)], index[(b, a)], index[(b, c)],
                          index[(c, b)], index[(c, a)], index[(a, c)]))
    return _geometric("truncated_icosahedron", positions, new_faces)


def _torus_faces(n: int, m: int, offset: int = 0) -> List[Tuple[int, ...]]:
    def vid(i: int, j: int) -> int:
        return offset + (i % n) * m + (j % m)

    return [(vid(i, j), vid(i + 1, j), vid(i + 1, j + 1), vid(i, j + 1))
            for i in range(n) for j in range(m)]


def torus_grid(n: int = 4, m: int = 4) -> SurfaceMesh:
    """Cuadrícula n×m con bordes identificados: V = F = nm, E = 2nm, χ = 0"""
    if n < 3 or m < 3:
        raise MeshValidationError(f"torus grid needs n, m >= 3, got {n}x{m}", "torus_grid")
    return SurfaceMesh(n * m, tuple(_torus_faces(n, m)), name=f"torus_grid({n},{m})")


def genus2_double_torus(n: int = 4, m: int = 4) -> SurfaceMesh:
    """Suma conexa de dos toros: se quita un cuadrado de cada uno y se pegan los bordes

    El segundo borde se pega en sentido inverso para que la orientación sea coherente.
    χ = 0 + 0 − 2 = −2.
    """
    first = _torus_faces(n, m)
    second = _torus_faces(n, m, offset=n * m)
    hole_a, hole_b = first[0], second[0]
    glue = {hole_b[(-k) % 4]: hole_a[k] for k in range(4)}

    remaining = sorted(set(range(n * m, 2 * n * m)) - set(glue))
    renumber = {old: n * m + k for k, old in enumerate(remaining)}
    renumber.update(glue)

    faces = first[1:] + [tuple(renumber[v] for v in face) for face in second[1:]]
    vertex_count = 2 * n * m - 4
    return SurfaceMesh(vertex_count, tuple(faces), name="genus2_double_torus")


CANONICAL_MESHES = {
    'tetrahedron': tetrahedron,
    'cube': cube,
    'octahedron': octahedron,
    'icosahedron': icosahedron,
    'truncated_icosahedron': truncated_icosahedron,
    'torus_grid': torus_grid,
    'genus2_double_torus': genus2_double_torus,
}

ALIASES = {
    'soccer_ball': 'truncated_icosahedron',
    'soccerball': 'truncated_icosahedron',
    'double_torus': 'genus2_double_torus',
    'torus': 'torus_grid',
}

_PARAMETRIC = re.compile(r'^(?P<name>[a-z0-9_]+)\((?P<n>\d+)\s*,\s*(?P<m>\d+)\)$')


def canonical_mesh(name: str, n: int = 4, m: int = 4) -> SurfaceMesh:
    """Malla por nombre; acepta guiones o guiones bajos y la forma 'torus_grid(n,m)'"""
    key = name.strip().lower().replace('-', '_').replace(' ', '')
    match = _PARAMETRIC.match(key)
    if match:
        key, n, m = match.group('name'), int(match.group('n')), int(match.group('m'))
    key = ALIASES.get(key, key)
    factory = CANONICAL_MESHES.get(key)
    if factory is None:
        raise KeyError(f"unknown mesh '{name}'. Available: {', '.join(sorted(CANONICAL_MESHES))}")
    if key == 'torus_grid':
        return torus_grid(n, m)
    mesh = factory()
    logger.debug(f"canonical mesh {key}: V={mesh.V} F={mesh.F} E={mesh.E}")
    return mesh
