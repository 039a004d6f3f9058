import pytest

from src.code_report_processor import CodeReportProcessor
from src.errors import InvalidInputError
from src.settings import Settings


@pytest.fixture
def processor():
    return CodeReportProcessor(Settings(threads=2))


def test_system_is_cached(processor):
    assert processor.system(7) is processor.system(7)


def test_block_order_moves_self_paired_factors_first():
    sorted_table = CodeReportProcessor().factor(15).table
    block_table = CodeReportProcessor(Settings(block_order=True)).factor(15).table
    assert sorted_table['sigma'].tolist() == [1, 2, 4, 3, 5]
    assert block_table['sigma'].tolist() == [1, 2, 3, 5, 4]
    assert block_table['degree'].tolist() == [1, 2, 4, 4, 4]


def test_count_report(processor):
    report = processor.count(7, 3)
    assert report.summary['total'] == 12493
    assert report.table['ideal_count'].tolist() == [13, 31, 31]


def test_dual_report(processor):
    report = processor.dual(7, 4, 'u^2;2;2')
    assert report.summary['self_dual']
    assert report.summary['log2_size'] == report.summary['dual_log2_size'] == 28


def test_selfdual_listing_for_length_one(processor):
    report = processor.selfdual(1, 2)
    assert report.summary['total'] == 3
    assert len(report.records) == 3
    assert report.lines[-1] == '3'


def test_gray_report(processor):
    report = processor.gray(7, 'u^4;u^3;u^4')
    assert report.summary['min_lee_distance'] == 24
    assert report.table.shape[1] == 28


def test_ideals_listing(processor):
    report = processor.ideals(1, 2)
    assert report.summary['total'] == 7
    assert len(report.records) == 7


def test_gray_requires_odd_length(processor):
    with pytest.raises(InvalidInputError):
        processor.gray(4, 'u^4')
