# app/cli/points.py - Tabla de ciudades y lectura de puntos "41N,74W" / "41,-74" / "NYC"
from __future__ import annotations
from dataclasses import dataclass, field
from pathlib import Path
from typing import Dict, List, Optional
import logging
import re

import pandas as pd

from geometry.core import LatLon
from geometry.errors import GeometryError
from utils.io import read_city_table
from utils.schema import city_key

logger = logging.getLogger(__name__)

_COORDINATE = re.compile(
    r'^(?P<value>[+-]?(?:\d+(?:\.\d*)?|\.\d+))\s*°?\s*(?P<hemisphere>[NSEW])?$', re.IGNORECASE)
_PAIR_SEPARATOR = re.compile(r'\s*[,/]\s*')
# argparse trata un token con guion inicial como opción salvo que parezca número; "-10,0" y "-33.4/151" son puntos
NEGATIVE_POINT = re.compile(r'^-\d+$|^-\d*\.\d+$|^-(?:\d+(?:\.\d*)?|\.\d+)\s*°?\s*[,/]')


class CityLookupError(KeyError):
    """Nombre de ciudad que no está en la tabla"""

    def __str__(self) -> str:
        return str(self.args[0]) if self.args else "unknown city"


class PointParseError(ValueError):
    """Texto de latitud/longitud mal formado"""


def parse_coordinate(text: str, axis: str) -> float:
    """Convierte '41N', '74W', '-74' o '41.5°N' en grados con signo (norte y este positivos)

    `axis` es 'lat' o 'lon'; la letra de hemisferio debe corresponder al eje.
    """
    token = str(text).strip()
    match = _COORDINATE.match(token)
    if not match:
        raise PointParseError(f"malformed {axis} '{text}'")
    value = float(match.group('value'))
    hemisphere = (match.group('hemisphere') or '').upper()
    if hemisphere:
        allowed = 'NS' if axis == 'lat' else 'EW'
        if hemisphere not in allowed:
            raise PointParseError(f"'{text}' is not a {axis}: use {allowed[0]} or {allowed[1]}")
        if value < 0:
            raise PointParseError(f"'{text}': compass form takes a non-negative value")
        if hemisphere in 'SW':
            value = -value
    if axis == 'lat' and not -90.0 <= value <= 90.0:
        raise PointParseError(f"latitude out of range [-90, 90]: '{text}'")
    return value


def parse_latlon(lat_text: str, lon_text: str) -> LatLon:
    lat = parse_coordinate(lat_text, 'lat')
    lon = parse_coordinate(lon_text, 'lon')
    try:
        return LatLon(lat, lon)
    except GeometryError as e:
        raise PointParseError(str(e)) from e


def looks_like_coordinates(text: str) -> bool:
    return bool(_PAIR_SEPARATOR.search(str(text).strip()))


@dataclass
class CityTable:
    """Filas (name, lat, lon); los nombres se comparan sin mayúsculas, espacios ni guiones"""
    rows: pd.DataFrame = field(default_factory=lambda: pd.DataFrame(columns=['name', 'lat', 'lon']))
    source: Optional[Path] = None

    def __post_init__(self):
        self._index: Dict[str, int] = {city_key(name): i for i, name in enumerate(self.rows['name'])}

    @classmethod
    def from_csv(cls, path: str | Path) -> CityTable:
        return cls(read_city_table(path), Path(path))

    @property
    def names(self) -> List[str]:
        return list(self.rows['name'])

    def __len__(self) -> int:
        return len(self.rows)

    def __contains__(self, name: str) -> bool:
        return city_key(name) in self._index

    def lookup(self, name: str) -> LatLon:
        i = self._index.get(city_key(name))
        if i is None:
            known = ', '.join(self.names) or 'none loaded'
            raise CityLookupError(f"unknown city '{name}' (known: {known})")
        row = self.rows.iloc[i]
        return LatLon(float(row['lat']), float(row['lon']))

    def canonical_name(self, name: str) -> str:
        i = self._index.get(city_key(name))
        return self.rows.iloc[i]['name'] if i is not None else name


def resolve_point(text: str, table: Optional[CityTable] = None) -> LatLon:
    """Nombre de ciudad o par 'LAT,LON' / 'LAT/LON' en forma de brújula o decimal con signo"""
    token = str(text).strip()
    if looks_like_coordinates(token):
        parts = _PAIR_SEPARATOR.split(token)
        if len(parts) != 2 or not all(parts):
            raise PointParseError(f"expected LAT,LON, got '{text}'")
        point = parse_latlon(*parts)
    else:
        if table is None:
            raise CityLookupError(f"unknown city '{text}' (no city table loaded)")
        point = table.lookup(token)
    logger.debug(f"point '{text}' -> {point.lat}, {point.lon}")
    return point
