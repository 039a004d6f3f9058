import logging
from pathlib import Path
from typing import Any, Dict, List, Optional, Sequence, Tuple

import pandas as pd
from reportlab.lib import colors
from reportlab.lib.pagesizes import A4, landscape
from reportlab.lib.styles import getSampleStyleSheet
from reportlab.pdfbase import pdfmetrics
from reportlab.pdfbase.ttfonts import TTFont
from reportlab.platypus import Paragraph, SimpleDocTemplate, Spacer, Table, TableStyle
from reportlab.platypus.flowables import Flowable

logger = logging.getLogger(__name__)

# Пары Regular/Bold с кириллицей и символами u, σ, λ
FONT_CANDIDATES: Tuple[Tuple[str, str], ...] = (
    ('/usr/share/fonts/truetype/dejavu/DejaVuSans.ttf',
     '/usr/share/fonts/truetype/dejavu/DejaVuSans-Bold.ttf'),
    ('/usr/share/fonts/truetype/noto/NotoSans-Regular.ttf',
     '/usr/share/fonts/truetype/noto/NotoSans-Bold.ttf'),
    ('/usr/share/fonts/truetype/liberation/LiberationSans-Regular.ttf',
     '/usr/share/fonts/truetype/liberation/LiberationSans-Bold.ttf'),
    ('/System/Library/Fonts/Supplemental/Arial Unicode.ttf',
     '/System/Library/Fonts/Supplemental/Arial Bold.ttf'),
    (r'C:\Windows\Fonts\arial.ttf', r'C:\Windows\Fonts\arialbd.ttf'),
)

MAX_PDF_ROWS = 500


class FontManager:
    """Подбирает TTF-шрифт с кириллицей; без него остаётся Helvetica."""

    def __init__(self, candidates: Sequence[Tuple[str, str]] = FONT_CANDIDATES):
        self.sans_font = 'Helvetica'
        self.bold_font = 'Helvetica-Bold'
        self._register(candidates)

    def _register(self, candidates: Sequence[Tuple[str, str]]) -> None:
        for regular, bold in candidates:
            if not Path(regular).exists():
                continue
            try:
                pdfmetrics.registerFont(TTFont('CodesSans', regular))
                self.bold_font = 'CodesSans'
                if Path(bold).exists():
                    pdfmetrics.registerFont(TTFont('CodesSans-Bold', bold))
                    self.bold_font = 'CodesSans-Bold'
                self.sans_font = 'CodesSans'
                logger.info('Используется шрифт %s', regular)
                return
            except Exception as e:
                logger.warning('Не удалось зарегистрировать %s: %s', regular, e)
        logger.warning('Не найден TTF-шрифт с кириллицей, русский текст может отображаться квадратами')


class PDFReportGenerator:
    """Отчёт PDF: заголовок, сводка ключ-значение и таблица результатов."""

    def __init__(self, font_manager: Optional[FontManager] = None):
        self.font_manager = font_manager or FontManager()

    def generate(self, title: str, summary: Dict[str, Any], table: pd.DataFrame, output_file: Path) -> None:
        wide = len(table.columns) > 8
        doc = SimpleDocTemplate(str(output_file), pagesize=landscape(A4) if wide else A4)
        styles = self._create_styles()
        elements: List[Flowable] = [Paragraph(title, styles['heading'])]
        elements.extend(self._create_summary(summary))
        elements.append(Spacer(1, 12))
        elements.extend(self._create_table(table, styles))
        doc.build(elements)
        logger.info('PDF отчёт сохранён: %s', output_file)

    def _create_styles(self) -> Dict[str, Any]:
        styles_raw = getSampleStyleSheet()

        normal_style = styles_raw['Normal'].clone('normal')
        normal_style.fontName = self.font_manager.sans_font

        heading_style = styles_raw['Normal'].clone('heading')
        heading_style.fontName = self.font_manager.bold_font
        heading_style.fontSize = 14
        heading_style.leading = 16
        heading_style.spaceAfter = 6

        return {'normal': normal_style, 'heading': heading_style}

    def _table_style(self, header_color) -> TableStyle:
        return TableStyle([
            ('FONTNAME', (0, 0), (-1, -1), self.font_manager.sans_font),
            ('FONTNAME', (0, 0), (-1, 0), self.font_manager.bold_font),
            ('FONTSIZE', (0, 0), (-1, -1), 6),
            ('GRID', (0, 0), (-1, -1), 0.5, colors.grey),
            ('BACKGROUND', (0, 0), (-1, 0), header_color),
            ('VALIGN', (0, 0), (-1, -1), 'TOP'),
            ('LEFTPADDING', (0, 0), (-1, -1), 2),
            ('RIGHTPADDING', (0, 0), (-1, -1), 2),
            ('TOPPADDING', (0, 0), (-1, -1), 1),
            ('BOTTOMPADDING', (0, 0), (-1, -1), 1),
        ])

    def _create_summary(self, summary: Dict[str, Any]) -> List[Flowable]:
        if not summary:
            return []
        data = [['Параметр', 'Значение']] + [[str(key), str(value)] for key, value in sorted(summary.items())]
        table = Table(data, colWidths=[120, 360])
        table.setStyle(self._table_style(colors.lightblue))
        return [table]

    def _create_table(self, table: pd.DataFrame, styles: Dict[str, Any]) -> List[Flowable]:
        if table.empty:
            return [Paragraph('Нет строк', styles['normal'])]
        shown = table
        if len(table) > MAX_PDF_ROWS:
            shown = table.head(MAX_PDF_ROWS)
            logger.info('В PDF выведены первые %d строк из %d', MAX_PDF_ROWS, len(table))
        data = [list(map(str, shown.columns))]
        data.extend([str(value) for value in row] for row in shown.itertuples(index=False))
        pdf_table = Table(data, repeatRows=1)
        pdf_table.setStyle(self._table_style(colors.lightgrey))
        elements: List[Flowable] = [pdf_table]
        if len(table) > MAX_PDF_ROWS:
            elements.append(Paragraph(f'… ещё {len(table) - MAX_PDF_ROWS} строк в CSV/JSON выгрузке',
                                      styles['normal']))
        return elements
