# app/cli/__init__.py
from .commands import CommandResult, RunConfig
from .points import CityLookupError, CityTable, PointParseError, parse_coordinate, resolve_point

__all__ = [
    'CommandResult', 'RunConfig', 'CityLookupError', 'CityTable', 'PointParseError',
    'parse_coordinate', 'resolve_point',
]
