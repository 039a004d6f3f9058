#!/usr/bin/env python3
"""
Командная строка для циклических кодов над Z4[u]/<u^k>.

Примеры:
    python main.py count 7 4
    python main.py selfdual 7 4 --count-only
    python main.py distance 7 --specs "u^4;u^3;u^4"
"""

import argparse
import logging
import sys
from pathlib import Path
from typing import List, Optional

from src.code_report_processor import CodeReportProcessor
from src.errors import CyclicCodeError
from src.settings import SUPPORTED_FORMATS, Settings

logger = logging.getLogger(__name__)


def build_parser() -> argparse.ArgumentParser:
    common = argparse.ArgumentParser(add_help=False)
    common.add_argument('--out', type=Path, help='Файл или папка для сохранения результата')
    common.add_argument('--format', choices=SUPPORTED_FORMATS, help='Формат выгрузки (по умолчанию json)')
    common.add_argument('--budget', type=int, help='Максимальное число кодовых слов при переборе')
    common.add_argument('--threads', type=int, help='Число рабочих потоков')
    common.add_argument('--paper-order', '--block-order', dest='block_order', action='store_true', default=None,
                        help='Блочный порядок множителей: самовзаимные, затем пары')
    common.add_argument('--verbose', action='store_true', help='Подробный лог')
    common.add_argument('--quiet', action='store_true', help='Только предупреждения и ошибки')

    parser = argparse.ArgumentParser(description='Циклические коды над Z4[u]/<u^k> нечётной длины')
    commands = parser.add_subparsers(dest='command', required=True)

    factor = commands.add_parser('factor', parents=[common], help='Разложение x^n - 1 и идемпотенты')
    factor.add_argument('n', type=int)

    count = commands.add_parser('count', parents=[common], help='Число циклических кодов')
    count.add_argument('n', type=int)
    count.add_argument('k', type=int)

    ideals = commands.add_parser('ideals', parents=[common], help='Идеалы GR(4,d)[u]/<u^k>')
    ideals.add_argument('d', type=int)
    ideals.add_argument('k', type=int)
    ideals.add_argument('--count-only', action='store_true', help='Только число идеалов по случаям')

    dual = commands.add_parser('dual', parents=[common], help='Дуальный код')
    dual.add_argument('n', type=int)
    dual.add_argument('k', type=int)
    dual.add_argument('--specs', required=True, help='Идеалы по множителям через ";"')

    selfdual = commands.add_parser('selfdual', parents=[common], help='Самодуальные коды')
    selfdual.add_argument('n', type=int)
    selfdual.add_argument('k', type=int)
    selfdual.add_argument('--count-only', action='store_true', help='Только число кодов')
    selfdual.add_argument('--check-rules', action='store_true', help='Сверить записанные правила A с фильтром')

    for name, text in (('gray', 'Порождающая матрица образа Υ (k=4)'), ('distance', 'Параметры [4n, log2 M, d] (k=4)')):
        command = commands.add_parser(name, parents=[common], help=text)
        command.add_argument('n', type=int)
        command.add_argument('--specs', required=True, help='Идеалы по множителям через ";"')

    commands.add_parser('qc-table', parents=[common], help='Таблица квазициклических кодов длины 28')
    return parser


def run(args: argparse.Namespace) -> int:
    settings = Settings.from_env().with_overrides(args.budget, args.threads, args.block_order, args.format)
    processor = CodeReportProcessor(settings)

    if args.command == 'factor':
        report = processor.factor(args.n)
    elif args.command == 'count':
        report = processor.count(args.n, args.k)
    elif args.command == 'ideals':
        report = processor.ideals(args.d, args.k, args.count_only)
    elif args.command == 'dual':
        report = processor.dual(args.n, args.k, args.specs)
    elif args.command == 'selfdual':
        report = processor.selfdual(args.n, args.k, args.count_only, args.check_rules)
    elif args.command == 'gray':
        report = processor.gray(args.n, args.specs)
    elif args.command == 'distance':
        report = processor.distance(args.n, args.specs)
    else:
        report = processor.qc_table()

    for line in report.lines:
        print(line)
    if args.out is not None:
        processor.save_reports(report, args.out, args.format)
    return 0


def main(argv: Optional[List[str]] = None) -> int:
    """Основная функция."""
    args = build_parser().parse_args(argv)
    level = logging.DEBUG if args.verbose else logging.WARNING if args.quiet else logging.INFO
    logging.basicConfig(level=level)
    try:
        return run(args)
    except CyclicCodeError as e:
        logger.error('%s', e)
        print(f'Ошибка: {e}', file=sys.stderr)
        return e.exit_code


if __name__ == '__main__':
    sys.exit(main())
