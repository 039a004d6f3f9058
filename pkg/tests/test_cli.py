import json

import pandas as pd
import pytest

from main import main


def _output(capsys):
    captured = capsys.readouterr()
    return captured.out.strip().splitlines(), captured.err


def test_factor(capsys):
    assert main(['factor', '7']) == 0
    lines, _ = _output(capsys)
    assert len(lines) == 4
    assert lines[-1] == 'λ = 1, ε = 1'


def test_count(capsys):
    assert main(['count', '7', '4']) == 0
    lines, _ = _output(capsys)
    assert lines[-1] == '293687'


def test_ideals_count_only(capsys):
    assert main(['ideals', '3', '4', '--count-only']) == 0
    lines, _ = _output(capsys)
    assert lines[-1] == '113'
    assert lines[:-1] == ['I: 5', 'II: 4', 'III: 77', 'IV: 14', 'V: 6', 'VI: 7']


def test_dual(capsys):
    assert main(['dual', '7', '4', '--specs', 'u^2;u;2']) == 0
    lines, _ = _output(capsys)
    assert lines == ['u^2;2;u^3']


def test_selfdual_count(capsys):
    assert main(['selfdual', '7', '4', '--count-only']) == 0
    lines, _ = _output(capsys)
    assert lines[-1] == '791'


def test_selfdual_rule_check(capsys):
    assert main(['selfdual', '7', '4', '--count-only', '--check-rules', '--quiet']) == 0
    lines, _ = _output(capsys)
    assert lines == ['f_1: нет в правилах A: (u^3,2u)', '791']


def test_distance(capsys):
    assert main(['distance', '7', '--specs', 'u^4;u^3;u^4']) == 0
    lines, _ = _output(capsys)
    assert lines == ['[28, 6, 24]']


def test_distance_of_zero_code(capsys):
    assert main(['distance', '7', '--specs', '0;0;0']) == 0
    lines, _ = _output(capsys)
    assert lines == ['[28, 0, empty]']


def test_even_length_is_rejected(capsys):
    assert main(['count', '8', '4']) == 2
    _, err = _output(capsys)
    assert err.startswith('Ошибка:')


def test_bad_specs_are_rejected(capsys):
    assert main(['dual', '7', '4', '--specs', 'u^2;u']) == 2


def test_budget_exceeded(capsys):
    assert main(['distance', '7', '--specs', '1;1;1', '--budget', '100']) == 3


def test_save_json(tmp_path, capsys):
    out = tmp_path / 'count.json'
    assert main(['count', '7', '4', '--out', str(out)]) == 0
    payload = json.loads(out.read_text(encoding='utf-8'))
    assert payload['summary'] == {'k': 4, 'n': 7, 'total': 293687}
    assert [row['ideal_count'] for row in payload['rows']] == [23, 113, 113]


def test_save_csv(tmp_path, capsys):
    out = tmp_path / 'ideals.csv'
    assert main(['ideals', '3', '4', '--count-only', '--out', str(out)]) == 0
    assert pd.read_csv(out)['formula_count'].sum() == 113


def test_save_into_directory(tmp_path, capsys):
    out = tmp_path / 'reports'
    assert main(['factor', '7', '--out', str(out), '--format', 'csv']) == 0
    assert (out / 'factor_7.csv').exists()


@pytest.mark.parametrize('argv', [['count', '7'], ['distance', '7']])
def test_missing_arguments(argv):
    with pytest.raises(SystemExit):
        main(argv)


def test_paper_order_flag(capsys):
    assert main(['factor', '15']) == 0
    sorted_lines, _ = _output(capsys)
    assert main(['factor', '15', '--paper-order']) == 0
    block_lines, _ = _output(capsys)
    assert 'σ(3) = 4' in sorted_lines[2]
    assert 'σ(3) = 3' in block_lines[2]
    assert 'σ(4) = 5' in block_lines[3]
    assert main(['factor', '15', '--block-order']) == 0
    assert _output(capsys)[0] == block_lines
