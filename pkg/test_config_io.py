# test_config_io.py - Configuración, lectura de ciudades y validadores de documentos
import json
import logging

import pandas as pd
import pytest

from cli.points import CityLookupError, CityTable, PointParseError, parse_coordinate, resolve_point
from config.settings import AppConfig, ConfigManager, PROJECT_ROOT
from geometry.core import LatLon
from utils.exporters import ReportExporter
from utils.io import read_city_table
from utils.schema import city_key, normalize_headers
from utils.validators import CityTableValidator, FileValidator, MeshDocumentValidator


def test_default_configuration(tmp_path):
    config = ConfigManager(tmp_path / "missing.json", environ={}).get_config()
    assert config.geometry.radius_km == 6378.0
    assert config.output.format == "text"
    assert config.output.angle_precision == 1
    assert config.logging.level == "WARNING"
    assert config.cities_path == PROJECT_ROOT / "data" / "cities.csv"
    assert config.meshes_path == PROJECT_ROOT / "data" / "meshes"


def test_json_file_then_environment(tmp_path):
    path = tmp_path / "app_config.json"
    path.write_text(json.dumps({"geometry": {"radius_km": 1.0}, "output": {"angle_precision": 3}}))
    config = ConfigManager(path, environ={"OUTPUT_FORMAT": "json", "SPHERE_RADIUS_KM": "2.5"}).get_config()
    assert config.geometry.radius_km == 2.5
    assert config.output.angle_precision == 3
    assert config.output.format == "json"


def test_invalid_values_fall_back_to_defaults(tmp_path, caplog):
    environ = {"SPHERE_RADIUS_KM": "-1", "OUTPUT_FORMAT": "yaml", "LOG_LEVEL": "chatty", "ANGLE_PRECISION": "x"}
    with caplog.at_level(logging.WARNING):
        config = ConfigManager(tmp_path / "missing.json", environ=environ).get_config()
    assert config.geometry.radius_km == AppConfig().geometry.radius_km
    assert config.output.format == "text"
    assert config.logging.level == "WARNING"
    assert config.output.angle_precision == 1
    assert "radius_km" in caplog.text


def test_cities_path_override(tmp_path):
    csv = tmp_path / "mine.csv"
    config = ConfigManager(tmp_path / "missing.json", environ={"CITIES_PATH": str(csv)}).get_config()
    assert config.cities_path == csv


def test_bundled_city_table(data_dir):
    table = CityTable.from_csv(data_dir / "cities.csv")
    assert len(table) == 6
    assert table.lookup("nyc") == LatLon(41, -74)
    assert table.lookup("Puerto Rico") == LatLon(18, -66)
    assert table.lookup("PARIS_PAPER") == LatLon(49, 3)
    assert table.lookup("paris") == LatLon(49, 2)
    assert table.canonical_name("puerto-rico") == "PuertoRico"
    with pytest.raises(CityLookupError, match="unknown city 'Atlantis'"):
        table.lookup("Atlantis")


def test_city_table_headers_are_normalized(tmp_path):
    path = tmp_path / "ciudades.csv"
    path.write_text("Ciudad, Latitud, Longitud, Pais\nSantiago,-33.45,-70.66,Chile\n", encoding="utf-8")
    df = read_city_table(path)
    assert list(df.columns) == ["name", "lat", "lon"]
    assert df.loc[0, "lat"] == pytest.approx(-33.45)


@pytest.mark.parametrize("content, message", [
    ("name,lat,lon\nA,10,10\na,20,20\n", "repetidos"),
    ("name,lat,lon\nA,95,10\n", "latitud"),
    ("name,lat,lon\nA,ten,10\n", "latitud"),
    ("name,lat\nA,10\n", "faltantes"),
])
def test_bad_city_tables(tmp_path, content, message):
    path = tmp_path / "bad.csv"
    path.write_text(content, encoding="utf-8")
    with pytest.raises(ValueError, match=message):
        read_city_table(path)


def test_city_validator_summary():
    df = pd.DataFrame({"name": ["A", "B"], "lat": ["1", "2"], "lon": ["3", "200"]})
    result = CityTableValidator.validate_city_dataframe(df)
    assert result['valid'] is True
    assert result['summary'] == {'total_rows': 2, 'valid_rows': 2}
    assert any("normaliza" in w for w in result['warnings'])


def test_city_key_and_headers():
    assert city_key("Puerto-Rico ") == city_key("puerto_rico") == "puertorico"
    assert normalize_headers(["Latitude", "LNG", "City"]) == {"Latitude": "lat", "LNG": "lon", "City": "name"}


@pytest.mark.parametrize("text, axis, expected", [
    ("41N", "lat", 41.0),
    ("41.5°S", "lat", -41.5),
    ("74W", "lon", -74.0),
    ("3e", "lon", 3.0),
    ("-74", "lon", -74.0),
    ("+12.25", "lat", 12.25),
])
def test_parse_coordinate(text, axis, expected):
    assert parse_coordinate(text, axis) == pytest.approx(expected)


@pytest.mark.parametrize("text, axis", [
    ("41E", "lat"),
    ("74N", "lon"),
    ("-41N", "lat"),
    ("91", "lat"),
    ("north", "lat"),
    ("", "lon"),
])
def test_parse_coordinate_rejects(text, axis):
    with pytest.raises(PointParseError):
        parse_coordinate(text, axis)


def test_resolve_point_forms():
    assert resolve_point("41N,74W") == LatLon(41, -74)
    assert resolve_point("41N/74W") == LatLon(41, -74)
    assert resolve_point("41, -74") == LatLon(41, -74)
    with pytest.raises(PointParseError):
        resolve_point("41N,74W,3")
    with pytest.raises(CityLookupError):
        resolve_point("NYC")


def test_mesh_document_validator():
    ok = MeshDocumentValidator.validate_document({"vertex_count": 4, "faces": [[0, 1, 2]]})
    assert ok['valid'] is True
    assert ok['summary'] == {'vertex_count': 4, 'face_count': 1, 'has_geometry': False}

    scaled = MeshDocumentValidator.validate_document({"vertices": [[2, 0, 0]], "faces": [[0, 0, 0]]})
    assert scaled['valid'] is True
    assert scaled['warnings']

    bad = MeshDocumentValidator.validate_document([1, 2, 3])
    assert bad['valid'] is False


def test_file_validator(tmp_path):
    missing = FileValidator.validate_input_file(tmp_path / "nope.csv", ['.csv'])
    assert missing['valid'] is False
    path = tmp_path / "cities.dat"
    path.write_text("name,lat,lon\n")
    odd = FileValidator.validate_input_file(path, ['.csv'])
    assert odd['valid'] is True
    assert odd['warnings']


def test_summary_frame():
    frame = ReportExporter.summary_frame({'V': 4, 'faces': [3, 3]})
    assert list(frame.columns) == ['Métrica', 'Valor']
    assert frame.loc[1, 'Valor'] == "[3, 3]"


def test_missing_and_oversize_files_are_told_apart(tmp_path):
    with pytest.raises(FileNotFoundError):
        read_city_table(tmp_path / "none.csv")
    path = tmp_path / "cities.csv"
    path.write_text("name,lat,lon\nA,10,10\n", encoding="utf-8")
    with pytest.raises(ValueError, match="muy grande") as excinfo:
        read_city_table(path, max_size_mb=0)
    assert not isinstance(excinfo.value, FileNotFoundError)
