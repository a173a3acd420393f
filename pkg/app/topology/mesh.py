# app/topology/mesh.py - Cubrimientos poligonales de superficies cerradas: χ, género y sumas de ángulos
from __future__ import annotations
from collections import Counter, defaultdict, deque
from dataclasses import dataclass, field
from functools import cached_property
from typing import Any, Dict, List, Mapping, Optional, Sequence, Tuple, Union
import logging

from geometry.core import SphereConfig, Vec3, to_latlon
from geometry.errors import GeometryError
from geometry.polygon import GeodesicPolygon, polygon_report

logger = logging.getLogger(__name__)

Edge = Tuple[int, int]
GENUS_UNKNOWN = "non-orientable/unknown"


class MeshValidationError(ValueError):
    """Malla que no es una 2-variedad cerrada; `location` indica la arista, vértice o cara"""

    def __init__(self, message: str, location: Any = None):
        super().__init__(message if location is None else f"{message} at {location}")
        self.location = location


def edge_key(u: int, v: int) -> Edge:
    return (u, v) if u < v else (v, u)


def face_edges(face: Sequence[int]) -> List[Edge]:
    return [edge_key(face[i], face[(i + 1) % len(face)]) for i in range(len(face))]


def check_manifold(vertex_count: int, faces: Sequence[Sequence[int]]) -> Dict:
    """Valida el cubrimiento y devuelve {'valid', 'issues', 'warnings', 'summary'}

    Cada issue es (mensaje, ubicación) para poder reportar la arista o el vértice culpable.
    """
    issues: List[Tuple[str, Any]] = []
    warnings: List[str] = []

    if vertex_count < 1:
        issues.append(("mesh has no vertices", None))
    if not faces:
        issues.append(("mesh has no faces", None))

    for f, face in enumerate(faces):
        if len(face) < 3:
            issues.append((f"face has {len(face)} corners, needs at least 3", f"face {f}"))
        if len(set(face)) != len(face):
            issues.append(("face repeats a vertex", f"face {f}"))
        for v in face:
            if not 0 <= v < vertex_count:
                issues.append((f"vertex index {v} out of range [0, {vertex_count})", f"face {f}"))

    if issues:
        return {'valid': False, 'issues': issues, 'warnings': warnings,
                'summary': {'vertex_count': vertex_count, 'face_count': len(faces)}}

    edge_use = Counter(e for face in faces for e in face_edges(face))
    for edge, count in sorted(edge_use.items()):
        if count != 2:
            issues.append((f"edge shared by {count} faces, expected 2", edge))

    vertex_use = Counter(v for face in faces for v in face)
    for v in range(vertex_count):
        if vertex_use[v] < 3:
            issues.append((f"vertex belongs to {vertex_use[v]} faces, expected at least 3", v))

    return {
        'valid': len(issues) == 0,
        'issues': issues,
        'warnings': warnings,
        'summary': {
            'vertex_count': vertex_count,
            'face_count': len(faces),
            'edge_count': len(edge_use),
        }
    }


@dataclass(frozen=True)
class SurfaceMesh:
    """Caras como ciclos de índices de vértices; las aristas se derivan. Inmutable."""
    vertex_count: int
    faces: Tuple[Tuple[int, ...], ...]
    positions: Optional[Tuple[Vec3, ...]] = None
    name: str = "mesh"

    def __post_init__(self):
        object.__setattr__(self, 'faces', tuple(tuple(int(v) for v in face) for face in self.faces))
        if self.positions is not None:
            object.__setattr__(self, 'positions', tuple(self.positions))
            if len(self.positions) != self.vertex_count:
                raise MeshValidationError(
                    f"{len(self.positions)} positions for {self.vertex_count} vertices", "vertices")
        result = check_manifold(self.vertex_count, self.faces)
        if not result['valid']:
            message, location = result['issues'][0]
            raise MeshValidationError(message, location)

    @property
    def V(self) -> int:
        return self.vertex_count

    @property
    def F(self) -> int:
        return len(self.faces)

    @property
    def E(self) -> int:
        return len(self.edges)

    @property
    def has_geometry(self) -> bool:
        return self.positions is not None

    @cached_property
    def edges(self) -> frozenset:
        return frozenset(e for face in self.faces for e in face_edges(face))

    @cached_property
    def edge_faces(self) -> Dict[Edge, List[int]]:
        incidence: Dict[Edge, List[int]] = defaultdict(list)
        for f, face in enumerate(self.faces):
            for e in face_edges(face):
                incidence[e].append(f)
        return dict(incidence)

    def face_sizes(self) -> List[int]:
        return [len(face) for face in self.faces]


@dataclass
class TopologyReport:
    V: int
    E: int
    F: int
    chi: int
    genus: Union[int, str]
    orientable: bool
    components: int
    face_size_histogram: Dict[int, int] = field(default_factory=dict)


@dataclass
class GaussBonnetSummary:
    """La cadena algebraica: suma de excesos → suma de ángulos por vértice → V + F − E"""
    total_angle_sum: float
    total_excess: float
    vertex_term: float
    F: int
    E: int
    chi_from_angles: float
    chi: int


def _connected_components(mesh: SurfaceMesh) -> int:
    parent = list(range(mesh.V))

    def find(i: int) -> int:
        while parent[i] != i:
            parent[i] = parent[parent[i]]
            i = parent[i]
        return i

    for u, v in mesh.edges:
        ru, rv = find(u), find(v)
        if ru != rv:
            parent[ru] = rv
    return len({find(i) for i in range(mesh.V)})


def orient_faces(mesh: SurfaceMesh) -> Optional[List[Tuple[int, ...]]]:
    """Intenta orientar todas las caras de forma coherente (BFS por caras vecinas)

    Dos caras vecinas están bien orientadas si recorren la arista común en sentidos opuestos.
    Devuelve las caras orientadas o None si la superficie no es orientable.
    """
    flipped: Dict[int, bool] = {}

    def directed(f: int) -> List[Tuple[int, int]]:
        face = mesh.faces[f]
        if flipped[f]:
            face = tuple(reversed(face))
        return [(face[i], face[(i + 1) % len(face)]) for i in range(len(face))]

    for start in range(mesh.F):
        if start in flipped:
            continue
        flipped[start] = False
        queue = deque([start])
        while queue:
            f = queue.popleft()
            for u, v in directed(f):
                for g in mesh.edge_faces[edge_key(u, v)]:
                    if g == f:
                        continue
                    face_g = mesh.faces[g]
                    k = face_g.index(u)
                    # g recorre u→v en su orden original
                    same_direction = face_g[(k + 1) % len(face_g)] == v
                    needs_flip = same_direction
                    if g not in flipped:
                        flipped[g] = needs_flip
                        queue.append(g)
                    elif flipped[g] != needs_flip:
                        return None

    return [tuple(reversed(face)) if flipped[f] else face for f, face in enumerate(mesh.faces)]


def euler_characteristic(m: SurfaceMesh) -> TopologyReport:
    """V + F − E, género para superficies cerradas orientables y conexas: (2 − χ)/2"""
    chi = m.V + m.F - m.E
    orientable = orient_faces(m) is not None
    components = _connected_components(m)
    if orientable and components == 1 and chi % 2 == 0:
        genus: Union[int, str] = (2 - chi) // 2
    else:
        genus = GENUS_UNKNOWN
    histogram = dict(sorted(Counter(m.face_sizes()).items()))
    logger.debug(f"{m.name}: V={m.V} E={m.E} F={m.F} chi={chi} genus={genus}")
    return TopologyReport(V=m.V, E=m.E, F=m.F, chi=chi, genus=genus, orientable=orientable,
                          components=components, face_size_histogram=histogram)


def edge_double_count_check(m: SurfaceMesh) -> Tuple[int, int]:
    """(Σ_f E_f, 2E): cada arista se cuenta una vez por cada una de sus dos caras"""
    return sum(m.face_sizes()), 2 * m.E


def _face_polygons(m: SurfaceMesh, cfg: SphereConfig) -> List[GeodesicPolygon]:
    if not m.has_geometry:
        raise GeometryError(f"mesh '{m.name}' has no vertex positions")
    points = [to_latlon(p) for p in m.positions]
    return [GeodesicPolygon(tuple(points[v] for v in face), cfg) for face in m.faces]


def angle_sum_identity_check(m: SurfaceMesh, cfg: SphereConfig = SphereConfig()) -> float:
    """Σ sobre caras de (α_f,1 + … + α_f,Vf − 180(Vf − 2)); para un cubrimiento de la esfera es 720°"""
    total = sum(polygon_report(poly).excess for poly in _face_polygons(m, cfg))
    logger.debug(f"{m.name}: total excess {total:.9f}")
    return total


def vertex_angle_sum_check(m: SurfaceMesh, cfg: SphereConfig = SphereConfig()) -> List[float]:
    """Suma de los ángulos de las caras alrededor de cada vértice (360° si cubren la esfera)"""
    sums = [0.0] * m.V
    for face, poly in zip(m.faces, _face_polygons(m, cfg)):
        for v, alpha in zip(face, polygon_report(poly).interior_angles):
            sums[v] += alpha
    return sums


def gauss_bonnet_summary(m: SurfaceMesh, cfg: SphereConfig = SphereConfig()) -> GaussBonnetSummary:
    reports = [polygon_report(poly) for poly in _face_polygons(m, cfg)]
    total_angles = sum(r.angle_sum for r in reports)
    total_excess = sum(r.excess for r in reports)
    return GaussBonnetSummary(
        total_angle_sum=total_angles,
        total_excess=total_excess,
        vertex_term=total_angles / 360.0,
        F=m.F,
        E=m.E,
        chi_from_angles=total_excess / 360.0,
        chi=m.V + m.F - m.E,
    )


def load_mesh(data: Mapping[str, Any], name: str = "mesh") -> SurfaceMesh:
    """Construye una SurfaceMesh desde el documento JSON

    {"vertices": [[x, y, z], ...] | null, "vertex_count": int, "faces": [[i, j, k, ...], ...]}
    """
    from utils.validators import MeshDocumentValidator

    result = MeshDocumentValidator.validate_document(data)
    if not result['valid']:
        raise MeshValidationError(f"invalid mesh document: {result['issues'][0]}", "document")
    for warning in result['warnings']:
        logger.warning(f"⚠️ {name}: {warning}")

    vertices = data.get('vertices')
    positions = tuple(Vec3.from_array(p) for p in vertices) if vertices is not None else None
    vertex_count = data.get('vertex_count')
    if vertex_count is None:
        vertex_count = len(vertices)
    mesh = SurfaceMesh(vertex_count=int(vertex_count), faces=data['faces'],
                       positions=positions, name=data.get('name', name))
    logger.info(f"✅ Malla '{mesh.name}' cargada: V={mesh.V} F={mesh.F} E={mesh.E}")
    return mesh


def dump_mesh(m: SurfaceMesh) -> Dict[str, Any]:
    return {
        'name': m.name,
        'vertex_count': m.V,
        'vertices': [list(p.as_tuple()) for p in m.positions] if m.has_geometry else None,
        'faces': [list(face) for face in m.faces],
    }


def _split_cycle(face: Sequence[int], i: int, j: int) -> Tuple[Tuple[int, ...], Tuple[int, ...]]:
    i, j = sorted((i, j))
    return tuple(face[i:j + 1]), tuple(face[j:]) + tuple(face[:i + 1])


def subdivide_edge(m: SurfaceMesh, u: int, v: int) -> SurfaceMesh:
    """Inserta un vértice w sobre la arista (u, v) y lo une a la esquina opuesta de cada cara vecina

    La inserción sola deja w en dos caras; las cuerdas lo llevan a 3 o 4 y χ no cambia
    (+1 V, +1 E por la inserción, +1 E y +1 F por cada cuerda).
    """
    key = edge_key(u, v)
    if key not in m.edge_faces:
        raise MeshValidationError("not an edge", key)
    w = m.V
    faces = list(m.faces)
    chords = set(m.edges)
    for f in m.edge_faces[key]:
        face = list(faces[f])
        n = len(face)
        k = next(k for k in range(n) if edge_key(face[k], face[(k + 1) % n]) == key)
        face.insert(k + 1, w)
        faces[f] = tuple(face)

    for f in m.edge_faces[key]:
        face = faces[f]
        n = len(face)
        at = face.index(w)
        candidates = [(at + d) % n for d in range(2, n - 1)]
        # la cuerda no puede repetir una arista existente
        target = next((c for c in candidates if edge_key(w, face[c]) not in chords), None)
        if target is None:
            continue
        chords.add(edge_key(w, face[target]))
        first, second = _split_cycle(face, at, target)
        faces[f] = first
        faces.append(second)

    positions = None
    if m.has_geometry:
        midpoint = (m.positions[u] + m.positions[v]).unit()
        positions = m.positions + (midpoint,)
    return SurfaceMesh(m.V + 1, tuple(faces), positions, m.name)


def split_face(m: SurfaceMesh, face_index: int, i: int, j: int) -> SurfaceMesh:
    """Parte una cara con una arista nueva entre sus esquinas no adyacentes i y j: +1 E, +1 F"""
    face = m.faces[face_index]
    n = len(face)
    i, j = sorted((i % n, j % n))
    if j - i in (0, 1, n - 1):
        raise MeshValidationError("corners must be distinct and non-adjacent", f"face {face_index}")
    if edge_key(face[i], face[j]) in m.edge_faces:
        raise MeshValidationError("edge already exists", edge_key(face[i], face[j]))
    first, second = _split_cycle(face, i, j)
    faces = m.faces[:face_index] + (first, second) + m.faces[face_index + 1:]
    return SurfaceMesh(m.V, faces, m.positions, m.name)
