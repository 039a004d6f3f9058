import logging
from pathlib import Path
from typing import Dict, Iterator, List, Optional

import pandas as pd

from .cyclic_codes import CyclicCode, count_cyclic_codes
from .duality import dual_code
from .factor_system import FactorSystem, build_factor_system
from .gray_map import GRAY_K, QC_TABLE, QCCode, format_parameters
from .ideal_enumerator import IdealEnumerator, count_formulas, spec_table
from .report_exporter import Report, ReportExporter
from .self_dual import SelfDualCensus, census_table, check_printed_rules
from .settings import Settings
from .spec_parser import parse_code_specs

logger = logging.getLogger(__name__)


class CodeReportProcessor:
    """Основной класс: по одному методу на подкоманду, результат в виде Report."""

    def __init__(self, settings: Optional[Settings] = None, exporter: Optional[ReportExporter] = None):
        self.settings = settings or Settings()
        self.exporter = exporter or ReportExporter()
        self._systems: Dict[int, FactorSystem] = {}

    def system(self, n: int) -> FactorSystem:
        """Система множителей x^n - 1 в выбранном порядке (кэшируется)."""
        if n not in self._systems:
            self._systems[n] = build_factor_system(n, block_order=self.settings.block_order)
        return self._systems[n]

    def parse_code(self, n: int, k: int, specs: str) -> CyclicCode:
        return parse_code_specs(specs, self.system(n), k)

    def factor(self, n: int) -> Report:
        system = self.system(n)
        table = system.to_table()
        lines = [f'f_{row.j} = {row.f}   e_{row.j} = {row.e}   σ({row.j}) = {row.sigma}   δ_{row.j} = {row.delta}'
                 for row in table.itertuples(index=False)]
        lines.append(f'λ = {system.lam}, ε = {system.eps}')
        return Report(f'factor_{n}', f'Разложение x^{n} - 1 над Z4', system.summary(), table, lines)

    def count(self, n: int, k: int) -> Report:
        system = self.system(n)
        rows = []
        for j, d in enumerate(system.degrees):
            formulas = count_formulas(d, k)
            rows.append({'j': j + 1, 'degree': d, 'ideal_count': formulas.total})
        total = count_cyclic_codes(n, k, system)
        table = pd.DataFrame(rows, columns=['j', 'degree', 'ideal_count'])
        lines = [f'N(2,{row["degree"]},{k}) = {row["ideal_count"]}   (f_{row["j"]})' for row in rows]
        lines.append(str(total))
        return Report(f'count_{n}_{k}', f'Число циклических кодов длины {n} над Z4[u]/<u^{k}>',
                      {'n': n, 'k': k, 'total': total}, table, lines)

    def ideals(self, d: int, k: int, count_only: bool = False) -> Report:
        enumerator = IdealEnumerator(d, k)
        counts = enumerator.count()
        summary = {'d': d, 'k': k, 'total': counts.total, 'closed_form': counts.closed_form}
        if count_only:
            table = enumerator.case_table()
            lines = [f'{row.case}: {row.formula_count}' for row in table.itertuples(index=False)]
            lines.append(str(counts.total))
            return Report(f'ideals_{d}_{k}', f'Идеалы GR(4,{d})[u]/<u^{k}> по случаям', summary, table, lines)
        specs = list(enumerator.specs())
        table = spec_table(specs)
        lines = [f'{spec}   |C| = 2^{spec.cardinality.bit_length() - 1}' for spec in specs]
        lines.append(str(counts.total))
        return Report(f'ideals_{d}_{k}', f'Идеалы GR(4,{d})[u]/<u^{k}>', summary, table, lines,
                      records=[dict(spec.to_dict(), spec=str(spec), log2_size=spec.cardinality.bit_length() - 1)
                               for spec in specs])

    def dual(self, n: int, k: int, specs: str) -> Report:
        code = self.parse_code(n, k, specs)
        dual = dual_code(code)
        rows = [{'j': j + 1, 'code': str(spec), 'dual': str(dual.specs[j])} for j, spec in enumerate(code.specs)]
        summary = {'n': n, 'k': k, 'code': code.spec_string(), 'dual': dual.spec_string(),
                   'log2_size': code.log2_size, 'dual_log2_size': dual.log2_size,
                   'self_dual': dual.specs == code.specs}
        return Report(f'dual_{n}_{k}', 'Евклидов дуальный код', summary,
                      pd.DataFrame(rows, columns=['j', 'code', 'dual']), [dual.spec_string()],
                      records=[dict(row, code_spec=code.specs[row['j'] - 1].to_dict(),
                                    dual_spec=dual.specs[row['j'] - 1].to_dict()) for row in rows])

    def selfdual(self, n: int, k: int, count_only: bool = False, check_rules: bool = False) -> Report:
        system = self.system(n)
        census = SelfDualCensus(system, k, self.settings.threads)
        summary: Dict[str, object] = {'n': n, 'k': k}
        lines: List[str] = []
        if check_rules:
            checks = check_printed_rules(system, k)
            summary['rules_consistent'] = all(check.consistent for check in checks)
            for check in checks:
                for spec in check.missing_from_rules:
                    lines.append(f'f_{check.j + 1}: нет в правилах A: {spec}')
                for spec in check.extra_in_rules:
                    lines.append(f'f_{check.j + 1}: лишний в правилах A: {spec}')
        if count_only:
            total = census.count()
            summary['total'] = total
            lines.append(str(total))
            return Report(f'selfdual_{n}_{k}', 'Самодуальные коды', summary, census.pair_table(), lines)
        entries = list(census.entries())
        for number, entry in enumerate(entries, start=1):
            lines.append(f'{number}: {entry.code.spec_string()}   [{";".join(entry.tags)}]')
        summary['total'] = len(entries)
        lines.append(str(len(entries)))
        return Report(f'selfdual_{n}_{k}', 'Самодуальные коды', summary, census_table(entries), lines,
                      records=[dict(entry.to_dict(), number=number) for number, entry in enumerate(entries, start=1)])

    def _qc_code(self, n: int, specs: str) -> QCCode:
        return QCCode.from_cyclic_code(self.parse_code(n, GRAY_K, specs))

    def gray(self, n: int, specs: str) -> Report:
        qc = self._qc_code(n, specs)
        parameters = qc.parameters(self.settings.codeword_budget, self.settings.threads)
        summary = dict(qc.to_dict(self.settings.codeword_budget, self.settings.threads), specs=specs)
        return Report(f'gray_{n}', 'Порождающая матрица G_D квазициклического кода', summary,
                      qc.generator_table(), [format_parameters(parameters)])

    def distance(self, n: int, specs: str) -> Report:
        qc = self._qc_code(n, specs)
        parameters = qc.parameters(self.settings.codeword_budget, self.settings.threads)
        summary = dict(qc.to_dict(self.settings.codeword_budget, self.settings.threads), specs=specs)
        table = pd.DataFrame([summary], columns=['specs', 'length', 'log2_size', 'min_lee_distance'])
        return Report(f'distance_{n}', 'Параметры образа Υ', summary, table, [format_parameters(parameters)])

    def iterate_qc_table(self) -> Iterator[Dict[str, object]]:
        for specs, expected in QC_TABLE:
            qc = self._qc_code(7, specs)
            parameters = qc.parameters(self.settings.codeword_budget, self.settings.threads)
            yield {'specs': specs, 'length': parameters[0], 'log2_size': parameters[1],
                   'min_lee_distance': parameters[2], 'expected': format_parameters(expected),
                   'matches': tuple(parameters) == expected}

    def qc_table(self) -> Report:
        rows = list(self.iterate_qc_table())
        table = pd.DataFrame(rows, columns=['specs', 'length', 'log2_size', 'min_lee_distance', 'expected', 'matches'])
        mismatches = int((~table['matches']).sum())
        if mismatches:
            logger.warning('Строк таблицы с расхождением параметров: %d', mismatches)
        lines = [f'{row.specs}   [{row.length}, {row.log2_size}, {row.min_lee_distance}]'
                 f'   {"ok" if row.matches else "ожидалось " + row.expected}' for row in table.itertuples(index=False)]
        return Report('qc_table', 'Квазициклические коды длины 28', {'rows': len(rows), 'mismatches': mismatches},
                      table, lines)

    def save_reports(self, report: Report, out: Path, fmt: Optional[str] = None) -> Path:
        """Сохраняет отчёт; путь без расширения считается папкой."""
        if fmt is None and not out.suffix:
            fmt = self.settings.output_format
        return self.exporter.save(report, out, fmt)
