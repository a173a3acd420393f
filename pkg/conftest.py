# conftest.py - Deja app/ en sys.path para los tests, como lo hacen los scripts de la app
import sys
from pathlib import Path

import pytest

PROJECT_ROOT = Path(__file__).resolve().parent
APP_DIR = PROJECT_ROOT / 'app'

if str(APP_DIR) not in sys.path:
    sys.path.insert(0, str(APP_DIR))


@pytest.fixture
def data_dir() -> Path:
    return PROJECT_ROOT / 'data'


@pytest.fixture
def bermuda():
    """Florida, Puerto Rico, Bermuda en sentido antihorario"""
    from geometry.core import LatLon
    return LatLon(28, -81), LatLon(18, -66), LatLon(32, -65)
