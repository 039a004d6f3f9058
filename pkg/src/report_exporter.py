"""
Выгрузка результатов в json, csv, xlsx и pdf.

Каждый результат подкоманды описывается объектом Report: имя файла,
заголовок, сводка (словарь), таблица pandas и строки для вывода в консоль.
"""

import json
import logging
from dataclasses import dataclass, field
from pathlib import Path
from typing import Any, Dict, List, Optional

import numpy as np
import pandas as pd

from .errors import InvalidInputError
from .pdf_report_generator import PDFReportGenerator
from .settings import SUPPORTED_FORMATS

logger = logging.getLogger(__name__)


@dataclass
class Report:
    name: str
    title: str
    summary: Dict[str, Any] = field(default_factory=dict)
    table: pd.DataFrame = field(default_factory=pd.DataFrame)
    lines: List[str] = field(default_factory=list)
    records: Optional[List[Dict[str, Any]]] = None

    def rows(self) -> List[Dict[str, Any]]:
        """Строки для JSON: явные записи или строки таблицы."""
        if self.records is not None:
            return self.records
        return self.table.to_dict(orient='records')


def _json_default(value):
    if isinstance(value, np.integer):
        return int(value)
    if isinstance(value, np.ndarray):
        return value.tolist()
    if isinstance(value, (set, frozenset, tuple)):
        return list(value)
    raise TypeError(f'Значение типа {type(value).__name__} не сериализуется в JSON')


def to_json(report: Report) -> str:
    payload = {'summary': report.summary, 'rows': report.rows()}
    return json.dumps(payload, sort_keys=True, ensure_ascii=False, indent=2, default=_json_default) + '\n'


def resolve_output(out: Path, name: str, fmt: str) -> Path:
    """Путь без расширения считается папкой (внутри создаётся <name>.<fmt>)."""
    if out.suffix:
        return out
    return out / f'{name}.{fmt}'


def output_format(out: Path, fmt: Optional[str]) -> str:
    """Формат по флагу, иначе по расширению файла, иначе json."""
    suffix = out.suffix.lstrip('.').lower()
    fmt = fmt or (suffix if suffix in SUPPORTED_FORMATS else 'json')
    if fmt not in SUPPORTED_FORMATS:
        raise InvalidInputError(f'Неизвестный формат {fmt}, доступны: {", ".join(SUPPORTED_FORMATS)}')
    return fmt


class ReportExporter:
    """Сохраняет Report в выбранном формате."""

    def __init__(self, pdf_generator: Optional[PDFReportGenerator] = None):
        self._pdf_generator = pdf_generator

    @property
    def pdf_generator(self) -> PDFReportGenerator:
        if self._pdf_generator is None:
            self._pdf_generator = PDFReportGenerator()
        return self._pdf_generator

    def save(self, report: Report, out: Path, fmt: Optional[str] = None) -> Path:
        fmt = output_format(out, fmt)
        path = resolve_output(out, report.name, fmt)
        path.parent.mkdir(parents=True, exist_ok=True)

        if fmt == 'json':
            path.write_text(to_json(report), encoding='utf-8')
        elif fmt == 'csv':
            report.table.to_csv(path, index=False)
        elif fmt == 'xlsx':
            with pd.ExcelWriter(path, engine='openpyxl') as writer:
                report.table.to_excel(writer, sheet_name='rows', index=False)
                summary = pd.DataFrame(sorted(report.summary.items()), columns=['key', 'value'])
                summary['value'] = summary['value'].astype(str)
                summary.to_excel(writer, sheet_name='summary', index=False)
        else:
            self.pdf_generator.generate(report.title, report.summary, report.table, path)

        logger.info('Отчёт "%s" сохранён: %s', report.title, path)
        return path
