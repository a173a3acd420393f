# app/utils/schema.py - Encabezados canónicos de la tabla de ciudades
from typing import Dict
import re

import pandas as pd

# Mapeo a nombres canónicos internos
CANONICAL_SCHEMA = {
    # español -> canónico
    "nombre": "name",
    "ciudad": "name",
    "lugar": "name",
    "latitud": "lat",
    "longitud": "lon",
    # inglés y abreviaturas
    "city": "name",
    "place": "name",
    "latitude": "lat",
    "longitude": "lon",
    "lng": "lon",
    "long": "lon",
}

CITY_COLUMNS = ["name", "lat", "lon"]

def city_key(name: str) -> str:
    """Clave de búsqueda: minúsculas, sin espacios, guiones ni guiones bajos"""
    return re.sub(r"[\s\-_]+", "", str(name)).lower()


def normalize_headers(cols) -> Dict[str, str]:
    """Mapea headers variados hacia formato canónico."""
    mapping = {}
    for c in cols:
        key = str(c).strip().lower()
        mapping[c] = CANONICAL_SCHEMA.get(key, key.replace(" ", "_"))
    return mapping


def to_canonical(df: pd.DataFrame) -> pd.DataFrame:
    """Renombra columnas a name/lat/lon y limpia los nombres"""
    if df is None or df.empty:
        return df
    out = df.rename(columns=normalize_headers(df.columns)).copy()
    if "name" in out.columns:
        out["name"] = out["name"].astype(str).str.strip()
    return out
