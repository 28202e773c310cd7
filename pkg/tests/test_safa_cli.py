from pathlib import Path

import pytest

from package_safa.comparison_models import Cca
from package_safa.safa_cli import EXIT_ERROR, EXIT_NO, EXIT_YES, main
from package_safa.safa_core import Safa
from package_safa.safa_format import parse_automaton, parse_word
from package_safa.safa_semantics import accepts

DATA_DIR = Path(__file__).parent / 'data'


def write_fixture(tmp_path: Path,
                  name: str) -> str:
    path = tmp_path / f'{name}.safa'
    assert main(['fixture', name, '-o', str(path)]) == EXIT_YES
    return str(path)


def test_fixture_prints_to_stdout(capsys: pytest.CaptureFixture[str]) \
        -> None:
    assert main(['fixture', 'fig3_simple']) == EXIT_YES
    assert capsys.readouterr().out.splitlines()[0] == 'safa'


def test_check(tmp_path: Path,
               capsys: pytest.CaptureFixture[str]) -> None:
    fig1 = write_fixture(tmp_path, 'fig1')
    assert main(['check', fig1, '--word', 'a:1 a:2']) == EXIT_YES
    assert main(['check', fig1, '--word', 'a:1 a:1']) == EXIT_NO
    assert capsys.readouterr().out == 'ACCEPT\nREJECT\n'


def test_check_words_file(tmp_path: Path,
                          capsys: pytest.CaptureFixture[str]) -> None:
    fig1 = write_fixture(tmp_path, 'fig1')
    batch = tmp_path / 'words.txt'
    batch.write_text('a:1 a:2\n# skipped\n\na:3 a:3\n', encoding='utf-8')
    assert main(['check', fig1, '--words-file', str(batch)]) == EXIT_NO
    assert capsys.readouterr().out == 'ACCEPT\nACCEPT\nREJECT\n'


def test_check_register_automaton(tmp_path: Path) -> None:
    ex8 = tmp_path / 'ex8.reg'
    assert main(['fixture', 'ex8_register', '-o', str(ex8)]) == EXIT_YES
    assert main(['check', str(ex8), '--word', 'a:4 a:4']) == EXIT_YES
    assert main(['check', str(ex8), '--word', 'a:4 a:5']) == EXIT_NO


def test_run_trace_matches_golden_file(
        tmp_path: Path, capsys: pytest.CaptureFixture[str]) -> None:
    fig1 = write_fixture(tmp_path, 'fig1')
    assert main(['run', fig1, '--word', 'a:1 a:2', '--trace']) == EXIT_YES
    expected = (DATA_DIR / 'run_fig1_trace.txt').read_text(encoding='utf-8')
    assert capsys.readouterr().out == expected


def test_run_trace_reports_stuck_position(
        tmp_path: Path, capsys: pytest.CaptureFixture[str]) -> None:
    fig1 = write_fixture(tmp_path, 'fig1')
    assert main(['run', fig1, '--word', 'a:1 a:1 a:2', '--trace']) \
        == EXIT_NO
    lines = capsys.readouterr().out.splitlines()
    assert lines[-2:] == ['STUCK at 3: a:2', 'REJECT']


def test_run_rejects_nondeterministic(tmp_path: Path) -> None:
    fig2 = write_fixture(tmp_path, 'fig2')
    assert main(['run', fig2, '--word', 'a:1']) == EXIT_ERROR


def test_empty(tmp_path: Path,
               capsys: pytest.CaptureFixture[str]) -> None:
    fig3 = write_fixture(tmp_path, 'fig3_simple')
    assert main(['empty', fig3]) == EXIT_NO
    assert capsys.readouterr().out == 'NONEMPTY witness: a:1 a:1\n'

    dead = tmp_path / 'dead.safa'
    dead.write_text('safa\nstates: q0\nalphabet: a\nsets: 1\ninitial: q0\n'
                    + 'final:\ntrans: q0 a p1 - q0\n', encoding='utf-8')
    assert main(['empty', str(dead)]) == EXIT_YES
    assert capsys.readouterr().out == 'EMPTY\n'


def test_deterministic(tmp_path: Path) -> None:
    assert main(['deterministic', write_fixture(tmp_path, 'fig6')]) \
        == EXIT_YES
    assert main(['deterministic', write_fixture(tmp_path, 'fig2')]) \
        == EXIT_NO


def test_union_and_complement(tmp_path: Path) -> None:
    fig1 = write_fixture(tmp_path, 'fig1')
    fig6 = write_fixture(tmp_path, 'fig6')
    joined = tmp_path / 'union.safa'
    flipped = tmp_path / 'complement.safa'
    assert main(['union', fig1, fig6, '-o', str(joined)]) == EXIT_YES
    assert main(['complement', fig1, '-o', str(flipped)]) == EXIT_YES

    u = parse_automaton(joined.read_text(encoding='utf-8'))
    c = parse_automaton(flipped.read_text(encoding='utf-8'))
    assert isinstance(u, Safa) and isinstance(c, Safa)
    assert accepts(u, parse_word('b:1 a:1 a:1'))
    assert accepts(c, parse_word('a:1 a:1'))
    assert not accepts(c, parse_word('a:1 a:2'))


def test_concat_and_to_cca(tmp_path: Path) -> None:
    fig5 = write_fixture(tmp_path, 'fig5_pair')
    joined = tmp_path / 'concat.safa'
    translated = tmp_path / 'concat.cca'
    assert main(['concat', fig5, fig5, '-o', str(joined)]) == EXIT_YES
    assert main(['to-cca', str(joined), '-o', str(translated)]) == EXIT_YES
    assert isinstance(parse_automaton(translated.read_text(encoding='utf-8')),
                      Cca)
    assert main(['check', str(translated), '--word', 'a:1 a:1 a:2 a:2']) \
        == EXIT_YES


def test_lift(tmp_path: Path) -> None:
    nfa = tmp_path / 'ab.nfa'
    nfa.write_text('nfa\nstates: s t\nalphabet: a b\ninitial: s\nfinal: t\n'
                   + 'trans: s a t\ntrans: t b t\n', encoding='utf-8')
    lifted = tmp_path / 'ab.safa'
    assert main(['lift', str(nfa), '-o', str(lifted)]) == EXIT_YES
    assert main(['check', str(lifted), '--word', 'a:1 b:1 b:1']) == EXIT_YES
    assert main(['lift', write_fixture(tmp_path, 'fig1')]) == EXIT_ERROR


def test_from_cnf(tmp_path: Path,
                  capsys: pytest.CaptureFixture[str]) -> None:
    cnf = tmp_path / 'formula.cnf'
    cnf.write_text('c example\np cnf 3 2\n1 -2 3 0\n1 2 3 0\n',
                   encoding='utf-8')
    gadget = tmp_path / 'gadget.safa'
    assert main(['from-cnf', str(cnf), '-o', str(gadget)]) == EXIT_YES
    assert main(['empty', str(gadget)]) == EXIT_NO
    capsys.readouterr()

    instance = tmp_path / 'instance.safa'
    assert main(['from-cnf', str(cnf), '--membership', '-o',
                 str(instance)]) == EXIT_YES
    word = capsys.readouterr().out.strip()
    assert word == 'a:1 a:1 a:1 a:1 a:1'
    assert main(['check', str(instance), '--word', word]) == EXIT_YES


def test_pump(tmp_path: Path,
              capsys: pytest.CaptureFixture[str]) -> None:
    fig1 = write_fixture(tmp_path, 'fig1')
    assert main(['pump', fig1, '--word', 'a:1 a:2', '--ell', '2']) \
        == EXIT_YES
    assert capsys.readouterr().out == 'a:1 a:3 a:2\na:1 a:3 a:4 a:2\n'


def test_oracle(capsys: pytest.CaptureFixture[str]) -> None:
    assert main(['oracle', 'pairs', '--word', 'a:1 a:1']) == EXIT_YES
    assert main(['oracle', 'contains_d(5)', '--word', 'a:1']) == EXIT_NO
    assert capsys.readouterr().out == 'IN\nOUT\n'


@pytest.mark.parametrize('argv', [
    ['check'],
    ['check', 'missing.safa', '--word', 'a:1'],
    ['oracle', 'nope', '--word', ''],
    ['fixture', 'fig4'],
    ['--log-level', 'BOGUS', 'fixture', 'fig1'],
])
def test_errors_exit_with_two(argv: list[str]) -> None:
    assert main(argv) == EXIT_ERROR


def test_malformed_word_exits_with_two(tmp_path: Path) -> None:
    fig1 = write_fixture(tmp_path, 'fig1')
    assert main(['check', fig1, '--word', 'a:x']) == EXIT_ERROR
    assert main(['check', fig1, '--word', 'c:1']) == EXIT_ERROR
    assert main(['check', fig1, '--word', 'a:²']) == EXIT_ERROR


def test_non_ascii_count_exits_with_two(tmp_path: Path) -> None:
    path = tmp_path / 'bad.safa'
    path.write_text('safa\nstates: q0\nalphabet: a\nsets: ²\n'
                    + 'initial: q0\nfinal: q0\n', encoding='utf-8')
    assert main(['check', str(path), '--word', 'a:1']) == EXIT_ERROR


def test_logging_and_timing_options(
        tmp_path: Path, capsys: pytest.CaptureFixture[str]) -> None:
    fig1 = write_fixture(tmp_path, 'fig1')
    assert main(['--log-level', 'INFO', '--timing', 'check', fig1,
                 '--word', 'a:1']) == EXIT_YES
    assert capsys.readouterr().out == 'ACCEPT\n'
