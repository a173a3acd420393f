# app/config/settings.py - Radio, formato de salida, rutas de datos y logging (archivo JSON + entorno)
from __future__ import annotations
import os
import sys
import json
import math
from pathlib import Path
from dataclasses import dataclass, field, asdict
from typing import Dict, Any, Mapping, Optional
import logging

PROJECT_ROOT = Path(__file__).resolve().parents[2]

OUTPUT_FORMATS = ('text', 'json')


@dataclass
class GeometryConfig:
    """Configuración de la esfera"""
    radius_km: float = 6378.0


@dataclass
class OutputConfig:
    """Configuración de salida"""
    format: str = "text"  # text, json
    angle_precision: int = 1
    distance_precision: int = 0


@dataclass
class DataConfig:
    """Ubicación de los datos incluidos"""
    data_dir: str = "data"
    cities_file: str = "cities.csv"
    meshes_dir: str = "meshes"


@dataclass
class LoggingConfig:
    """Configuración de logging"""
    level: str = "WARNING"
    format: str = "%(asctime)s - %(name)s - %(levelname)s - %(message)s"
    file_path: Optional[str] = None
    max_file_size_mb: int = 10
    backup_count: int = 5
    enable_console: bool = True


@dataclass
class AppConfig:
    """Secciones de configuración: esfera, salida, datos y logging"""
    geometry: GeometryConfig = field(default_factory=GeometryConfig)
    output: OutputConfig = field(default_factory=OutputConfig)
    data: DataConfig = field(default_factory=DataConfig)
    logging: LoggingConfig = field(default_factory=LoggingConfig)

    def data_path(self) -> Path:
        path = Path(self.data.data_dir)
        return path if path.is_absolute() else PROJECT_ROOT / path

    @property
    def cities_path(self) -> Path:
        path = Path(self.data.cities_file)
        return path if path.is_absolute() else self.data_path() / path

    @property
    def meshes_path(self) -> Path:
        path = Path(self.data.meshes_dir)
        return path if path.is_absolute() else self.data_path() / path


_SECTIONS = {
    'geometry': GeometryConfig,
    'output': OutputConfig,
    'data': DataConfig,
    'logging': LoggingConfig,
}


class ConfigManager:
    """Arma AppConfig: valores por defecto, luego app_config.json, luego variables de entorno"""

    ENV_MAPPING = {
        'SPHERE_RADIUS_KM': ('geometry', 'radius_km'),
        'OUTPUT_FORMAT': ('output', 'format'),
        'ANGLE_PRECISION': ('output', 'angle_precision'),
        'CITIES_PATH': ('data', 'cities_file'),
        'LOG_LEVEL': ('logging', 'level'),
        'LOG_FILE': ('logging', 'file_path'),
    }

    def __init__(self, config_path: Optional[str | Path] = None,
                 environ: Optional[Mapping[str, str]] = None):
        self.config_path = Path(config_path) if config_path else PROJECT_ROOT / "config" / "app_config.json"
        self.environ = os.environ if environ is None else environ
        self.config = self._load_config()

    def _load_config(self) -> AppConfig:
        """Carga configuración desde archivo y variables de entorno"""
        config = AppConfig()

        if self.config_path.exists():
            try:
                with open(self.config_path, 'r', encoding='utf-8') as f:
                    json_config = json.load(f)
                config = self._merge_config(config, json_config)
            except Exception as e:
                logging.warning(f"Could not load config file: {e}")

        config = self._load_env_overrides(config)
        self._validate(config)
        return config

    def _merge_config(self, config: AppConfig, json_data: Dict[str, Any]) -> AppConfig:
        """Cada sección del JSON reemplaza solo los campos que trae"""
        for section, cls in _SECTIONS.items():
            if section not in json_data:
                continue
            try:
                merged = {**asdict(getattr(config, section)), **json_data[section]}
                setattr(config, section, cls(**merged))
            except Exception as e:
                logging.warning(f"Error merging config section '{section}': {e}")
        return config

    def _load_env_overrides(self, config: AppConfig) -> AppConfig:
        """SPHERE_RADIUS_KM, OUTPUT_FORMAT, ... convertidos al tipo del campo"""
        for env_var, (section, field_name) in self.ENV_MAPPING.items():
            value = self.environ.get(env_var)
            if value is None or value == '':
                continue
            try:
                section_obj = getattr(config, section)
                current = getattr(section_obj, field_name)

                # Type conversion
                if isinstance(current, bool):
                    value = value.lower() in ('true', '1', 'yes', 'on')
                elif isinstance(current, int):
                    value = int(value)
                elif isinstance(current, float):
                    value = float(value)

                setattr(section_obj, field_name, value)
            except Exception as e:
                logging.warning(f"Could not set {env_var}: {e}")

        return config

    def _validate(self, config: AppConfig):
        """Valores inválidos se descartan con una advertencia y queda el valor por defecto"""
        defaults = AppConfig()
        radius = config.geometry.radius_km
        if not isinstance(radius, (int, float)) or not math.isfinite(radius) or radius <= 0:
            logging.warning(f"⚠️ radius_km inválido ({radius}); se usa {defaults.geometry.radius_km}")
            config.geometry.radius_km = defaults.geometry.radius_km
        if config.output.format not in OUTPUT_FORMATS:
            logging.warning(f"⚠️ formato de salida desconocido ({config.output.format}); se usa 'text'")
            config.output.format = defaults.output.format
        if not isinstance(config.output.angle_precision, int) or config.output.angle_precision < 0:
            logging.warning(f"⚠️ angle_precision inválido ({config.output.angle_precision}); se usa 1")
            config.output.angle_precision = defaults.output.angle_precision
        if getattr(logging, str(config.logging.level).upper(), None) is None:
            logging.warning(f"⚠️ nivel de log desconocido ({config.logging.level}); se usa WARNING")
            config.logging.level = defaults.logging.level

    def setup_logging(self, level: Optional[str] = None):
        """Configura el sistema de logging: consola en stderr y archivo rotativo opcional"""
        log_config = self.config.logging
        handlers = []

        if log_config.file_path:
            from logging.handlers import RotatingFileHandler
            Path(log_config.file_path).parent.mkdir(parents=True, exist_ok=True)
            file_handler = RotatingFileHandler(
                log_config.file_path,
                maxBytes=log_config.max_file_size_mb * 1024 * 1024,
                backupCount=log_config.backup_count
            )
            file_handler.setFormatter(logging.Formatter(log_config.format))
            handlers.append(file_handler)

        # Los resultados van a stdout; los diagnósticos a stderr
        if log_config.enable_console:
            console_handler = logging.StreamHandler(sys.stderr)
            console_handler.setFormatter(logging.Formatter(log_config.format))
            handlers.append(console_handler)

        if not handlers:
            handlers.append(logging.NullHandler())

        logging.basicConfig(
            level=getattr(logging, (level or log_config.level).upper()),
            handlers=handlers,
            format=log_config.format,
            force=True
        )

    def get_config(self) -> AppConfig:
        return self.config
