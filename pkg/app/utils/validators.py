# app/utils/validators.py - Validadores de documentos de entrada (ciudades y mallas)
from __future__ import annotations
from pathlib import Path
from typing import Any, Dict, List, Mapping
import math
import numbers

import pandas as pd

from .schema import CITY_COLUMNS, city_key


def _is_number(value: Any) -> bool:
    return isinstance(value, numbers.Real) and not isinstance(value, bool) and math.isfinite(value)


class CityTableValidator:
    """Validador de la tabla name,lat,lon"""

    @staticmethod
    def validate_city_dataframe(df: pd.DataFrame) -> Dict:
        """Valida un DataFrame ya normalizado a encabezados canónicos"""
        if df is None or df.empty:
            return {
                'valid': False,
                'issues': ['Tabla de ciudades vacía'],
                'warnings': [],
                'summary': {'total_rows': 0, 'valid_rows': 0}
            }

        issues = []
        warnings = []

        missing_cols = [col for col in CITY_COLUMNS if col not in df.columns]
        if missing_cols:
            issues.append(f"Columnas faltantes: {missing_cols}")
            return {
                'valid': False,
                'issues': issues,
                'warnings': warnings,
                'summary': {'total_rows': len(df), 'valid_rows': 0}
            }

        extra_cols = [col for col in df.columns if col not in CITY_COLUMNS]
        if extra_cols:
            warnings.append(f"Columnas ignoradas: {extra_cols}")

        lat = pd.to_numeric(df['lat'], errors='coerce')
        lon = pd.to_numeric(df['lon'], errors='coerce')
        names = df['name'].astype(str).str.strip()

        valid_rows = 0
        for row, (name, la, lo) in enumerate(zip(names, lat, lon), start=2):
            row_valid = True
            if not name or name.lower() == 'nan':
                issues.append(f"Fila {row}: nombre vacío")
                row_valid = False
            if pd.isna(la) or not -90.0 <= la <= 90.0:
                issues.append(f"Fila {row} ({name}): latitud inválida {df['lat'].iloc[row - 2]!r}")
                row_valid = False
            if pd.isna(lo) or not math.isfinite(lo):
                issues.append(f"Fila {row} ({name}): longitud inválida {df['lon'].iloc[row - 2]!r}")
                row_valid = False
            elif abs(lo) > 180.0:
                warnings.append(f"Fila {row} ({name}): longitud {lo} fuera de [-180, 180], se normaliza")
            if row_valid:
                valid_rows += 1

        keys = names.map(city_key)
        duplicated = sorted(set(names[keys.duplicated(keep=False)]))
        if duplicated:
            issues.append(f"Nombres repetidos (sin distinguir mayúsculas): {duplicated}")

        return {
            'valid': len(issues) == 0,
            'issues': issues,
            'warnings': warnings,
            'summary': {
                'total_rows': len(df),
                'valid_rows': valid_rows,
            }
        }


class MeshDocumentValidator:
    """Validador del documento JSON de mallas: vertices, vertex_count, faces"""

    @staticmethod
    def validate_document(data: Mapping[str, Any]) -> Dict:
        if not isinstance(data, Mapping):
            return {'valid': False, 'issues': ['El documento debe ser un objeto JSON'], 'warnings': []}

        issues: List[str] = []
        warnings: List[str] = []

        vertices = data.get('vertices')
        vertex_count = data.get('vertex_count')
        faces = data.get('faces')

        if vertices is not None:
            if not isinstance(vertices, list):
                issues.append("'vertices' debe ser una lista de [x, y, z] o null")
            else:
                for i, p in enumerate(vertices):
                    if not (isinstance(p, (list, tuple)) and len(p) == 3 and all(_is_number(c) for c in p)):
                        issues.append(f"vértice {i}: se esperaban 3 números, llegó {p!r}")
                        break
                else:
                    off_sphere = [i for i, p in enumerate(vertices)
                                  if abs(math.sqrt(sum(c * c for c in p)) - 1.0) > 1e-6]
                    if vertices and off_sphere:
                        # las posiciones se usan como direcciones
                        warnings.append(f"{len(off_sphere)} vértices no son unitarios; se usan como direcciones")

        if vertex_count is None:
            if vertices is None:
                issues.append("falta 'vertex_count' (obligatorio cuando 'vertices' es null)")
        elif not isinstance(vertex_count, int) or isinstance(vertex_count, bool) or vertex_count < 1:
            issues.append(f"'vertex_count' debe ser un entero positivo, llegó {vertex_count!r}")
        elif isinstance(vertices, list) and len(vertices) != vertex_count:
            issues.append(f"'vertex_count' = {vertex_count} pero hay {len(vertices)} vértices")

        if not isinstance(faces, list) or not faces:
            issues.append("'faces' debe ser una lista no vacía de ciclos de índices")
        else:
            for f, face in enumerate(faces):
                if not isinstance(face, list) or not all(
                        isinstance(v, int) and not isinstance(v, bool) for v in face):
                    issues.append(f"cara {f}: se esperaba una lista de índices enteros")
                    break

        return {
            'valid': len(issues) == 0,
            'issues': issues,
            'warnings': warnings,
            'summary': {
                'vertex_count': vertex_count if vertex_count is not None else (
                    len(vertices) if isinstance(vertices, list) else 0),
                'face_count': len(faces) if isinstance(faces, list) else 0,
                'has_geometry': vertices is not None,
            }
        }


class FileValidator:
    """Validador de archivos de entrada"""

    @staticmethod
    def validate_input_file(file_path: Path, allowed_extensions: List[str], max_size_mb: int = 50) -> Dict:
        file_path = Path(file_path)
        if not file_path.is_file():
            return {
                'valid': False,
                'issues': [f'Archivo no existe: {file_path}'],
                'warnings': []
            }

        issues = []
        warnings = []

        size_mb = file_path.stat().st_size / (1024 * 1024)
        if size_mb > max_size_mb:
            issues.append(f"Archivo muy grande: {size_mb:.1f}MB (máximo: {max_size_mb}MB)")

        if file_path.suffix.lower() not in allowed_extensions:
            warnings.append(f"Extensión inesperada: {file_path.suffix} (se esperaba {', '.join(allowed_extensions)})")

        return {
            'valid': len(issues) == 0,
            'issues': issues,
            'warnings': warnings,
            'file_info': {
                'size_mb': round(size_mb, 1),
                'extension': file_path.suffix,
                'name': file_path.name
            }
        }
