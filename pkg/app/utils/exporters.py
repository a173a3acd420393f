# app/utils/exporters.py
from __future__ import annotations
import logging
from pathlib import Path
from typing import Any, Dict, Mapping

import pandas as pd

from .io import ensure_dir

logger = logging.getLogger(__name__)

# Excel limita los nombres de hoja a 31 caracteres
_SHEET_NAME_MAX = 31


class ReportExporter:
    """Exporta reportes en diferentes formatos"""

    @staticmethod
    def summary_frame(summary: Mapping[str, Any]) -> pd.DataFrame:
        """Hoja de resumen Métrica / Valor; listas y dicts se aplanan a texto"""
        rows = []
        for key, value in summary.items():
            if isinstance(value, (list, tuple, dict)):
                value = str(value)
            rows.append((key, value))
        return pd.DataFrame(rows, columns=['Métrica', 'Valor'])

    @staticmethod
    def export_report_excel(
            summary: Mapping[str, Any],
            tables: Dict[str, pd.DataFrame],
            output_path: Path
    ) -> Path:
        """Exporta el reporte a Excel: 'Resumen' primero y luego una hoja por tabla"""
        output_path = Path(output_path)
        if output_path.suffix.lower() != '.xlsx':
            raise ValueError(f"export path must end in .xlsx, got {output_path.name}")
        ensure_dir(output_path.parent)

        with pd.ExcelWriter(output_path, engine='openpyxl') as writer:
            ReportExporter.summary_frame(summary).to_excel(writer, sheet_name='Resumen', index=False)
            for name, df in tables.items():
                if df is None or df.empty:
                    continue
                df.to_excel(writer, sheet_name=name[:_SHEET_NAME_MAX], index=False)

        logger.info(f"✅ Reporte exportado a {output_path}")
        return output_path
