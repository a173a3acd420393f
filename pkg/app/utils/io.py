from __future__ import annotations
import json
import logging
from pathlib import Path

import pandas as pd

from .schema import CITY_COLUMNS, to_canonical
from .validators import CityTableValidator, FileValidator

logger = logging.getLogger(__name__)


def _check_file(path: Path, extensions, max_size_mb: int = 50):
    result = FileValidator.validate_input_file(path, extensions, max_size_mb)
    if not result['valid']:
        if not path.is_file():
            raise FileNotFoundError(result['issues'][0])
        raise ValueError(f"invalid input file {path.name}: {'; '.join(result['issues'])}")
    for warning in result['warnings']:
        logger.warning(f"⚠️ {warning}")


def read_city_table(path: str | Path, max_size_mb: int = 50) -> pd.DataFrame:
    """Lee name,lat,lon (CSV con encabezado) y devuelve las columnas canónicas con lat/lon float"""
    path = Path(path)
    _check_file(path, ['.csv', '.txt'], max_size_mb)
    df = pd.read_csv(path, dtype=str, skipinitialspace=True, comment='#')
    df.columns = [str(c).strip() for c in df.columns]
    df = to_canonical(df)

    result = CityTableValidator.validate_city_dataframe(df)
    if not result['valid']:
        raise ValueError(f"invalid city table {path.name}: {'; '.join(result['issues'])}")
    for warning in result['warnings']:
        logger.warning(f"⚠️ {path.name}: {warning}")

    df = df[CITY_COLUMNS].copy()
    df['lat'] = df['lat'].astype(float)
    df['lon'] = df['lon'].astype(float)
    logger.info(f"✅ {len(df)} ciudades cargadas desde {path}")
    return df


def read_mesh_file(path: str | Path):
    """Carga un documento JSON de malla y lo convierte en SurfaceMesh"""
    from topology.mesh import load_mesh

    path = Path(path)
    _check_file(path, ['.json'])
    with open(path, 'r', encoding='utf-8') as f:
        try:
            data = json.load(f)
        except json.JSONDecodeError as e:
            raise ValueError(f"{path.name} is not valid JSON: {e}") from e
    return load_mesh(data, name=path.stem)


def write_mesh_json(mesh, path: str | Path) -> Path:
    from topology.mesh import dump_mesh

    path = Path(path)
    ensure_dir(path.parent)
    with open(path, 'w', encoding='utf-8') as f:
        json.dump(dump_mesh(mesh), f, indent=2)
    logger.info(f"✅ Malla '{mesh.name}' guardada en {path}")
    return path


def ensure_dir(p: str | Path) -> Path:
    p = Path(p)
    p.mkdir(parents=True, exist_ok=True)
    return p
