"""A Python module to provide the `safa` command-line driver.

Verdicts go to standard output, logs to standard error. The exit code is 0
for an affirmative answer or a successful construction, 1 for a negative
answer and 2 for a usage, parse or precondition error.

Examples
--------
Run in a shell:
    $ safa check fig1.safa --word "a:1 a:2"
    ACCEPT
    $ safa empty fig1.safa
    NONEMPTY witness:
"""

import argparse
from functools import partial
from pathlib import Path

from package_safa.common_errors import SafaError
from package_safa.common_types import Callable, Sequence
from package_safa.comparison_models import (Cca, RegisterAutomaton,
                                            cca_accepts, register_accepts,
                                            safa_to_cca)
from package_safa.default_config import DefaultConfig
from package_safa.default_logger import DefaultLogger
from package_safa.default_timer import DefaultTimer
from package_safa.safa_closure import (complement, concat, lift_regular,
                                       union)
from package_safa.safa_core import (Configuration, DataWord, Safa,
                                    is_deterministic)
from package_safa.safa_emptiness import witness
from package_safa.safa_fixtures import fixture, oracle
from package_safa.safa_format import (Automaton, parse_automaton,
                                      parse_dimacs, parse_word, parse_words,
                                      print_automaton, print_word)
from package_safa.safa_reductions import (CnfFormula,
                                          cnf_to_membership_instance,
                                          cnf_to_safa)
from package_safa.safa_semantics import (accepts, pump, run_deterministic,
                                         step)
from package_safa.utils_name import create_function_name_logger
from package_safa.utils_nfa import Nfa
from package_safa.utils_parallel import parallel_map

EXIT_YES: int = 0
EXIT_NO: int = 1
EXIT_ERROR: int = 2


def classify(automaton: Automaton,
             w: DataWord) -> bool:
    """Decide membership of a word for an automaton of any kind."""

    match automaton:
        case Safa():
            return accepts(automaton, w)
        case RegisterAutomaton():
            return register_accepts(automaton, w)
        case Cca():
            return cca_accepts(automaton, w)
        case _:
            return automaton.accepts(w.letters())


def _read(path: str) -> str:

    try:
        return Path(path).read_text(encoding='utf-8')
    except OSError as error:
        logger: DefaultLogger = create_function_name_logger()
        logger.error(f'Cannot read {path}: {error.strerror}')


def _emit(text: str,
          path: str | None) -> None:

    if path is None:
        print(text, end='')
        return
    try:
        Path(path).write_text(text, encoding='utf-8')
    except OSError as error:
        logger: DefaultLogger = create_function_name_logger()
        logger.error(f'Cannot write {path}: {error.strerror}')


def _load_safa(path: str) -> Safa:

    automaton: Automaton = parse_automaton(_read(path))
    if not isinstance(automaton, Safa):
        logger: DefaultLogger = create_function_name_logger()
        logger.error(f'{path} does not hold a SAFA')
    return automaton


def _verdict(flag: bool,
             yes: str,
             no: str) -> int:

    print(yes if flag else no)
    return EXIT_YES if flag else EXIT_NO


def _command_check(args: argparse.Namespace) -> int:

    automaton: Automaton = parse_automaton(_read(args.file))

    if args.words_file is None:
        return _verdict(classify(automaton, parse_word(args.word or '')),
                        'ACCEPT', 'REJECT')

    words: list[DataWord] = parse_words(_read(args.words_file))
    verdicts: list[bool] = parallel_map(partial(classify, automaton), words,
                                        DefaultConfig.num_process)
    for verdict in verdicts:
        print('ACCEPT' if verdict else 'REJECT')
    return EXIT_YES if all(verdicts) else EXIT_NO


def _trace(a: Safa,
           w: DataWord) -> None:

    config: Configuration = Configuration.initial(a)
    print(f'start: {config.describe()}')

    for position, item in enumerate(w, start=1):
        successors: list[tuple[int, Configuration]] = step(a, config, item)
        if not successors:
            print(f'STUCK at {position}: {item[0]}:{item[1]}')
            return
        index, config = successors[0]
        print(f'{position}: {item[0]}:{item[1]} [{index}] '
              + f'{a.transitions[index]} => {config.describe()}')


def _command_run(args: argparse.Namespace) -> int:

    a: Safa = _load_safa(args.file)
    w: DataWord = parse_word(args.word or '')
    accepted, _ = run_deterministic(a, w)

    if args.trace:
        _trace(a, w)
    return _verdict(accepted, 'ACCEPT', 'REJECT')


def _command_empty(args: argparse.Namespace) -> int:

    found: DataWord | None = witness(_load_safa(args.file))
    if found is None:
        print('EMPTY')
        return EXIT_YES
    print(f'NONEMPTY witness: {print_word(found)}'.rstrip())
    return EXIT_NO


def _command_deterministic(args: argparse.Namespace) -> int:

    return _verdict(is_deterministic(_load_safa(args.file)), 'YES', 'NO')


def _command_union(args: argparse.Namespace) -> int:

    _emit(print_automaton(union(_load_safa(args.first),
                                _load_safa(args.second))), args.output)
    return EXIT_YES


def _command_concat(args: argparse.Namespace) -> int:

    _emit(print_automaton(concat(_load_safa(args.first),
                                 _load_safa(args.second))), args.output)
    return EXIT_YES


def _command_complement(args: argparse.Namespace) -> int:

    _emit(print_automaton(complement(_load_safa(args.file))), args.output)
    return EXIT_YES


def _command_from_cnf(args: argparse.Namespace) -> int:

    formula: CnfFormula = parse_dimacs(_read(args.file))
    if not args.membership:
        _emit(print_automaton(cnf_to_safa(formula)), args.output)
        return EXIT_YES

    a, w = cnf_to_membership_instance(formula)
    _emit(print_automaton(a), args.output)
    print(print_word(w))
    return EXIT_YES


def _command_pump(args: argparse.Namespace) -> int:

    for pumped in pump(_load_safa(args.file), parse_word(args.word),
                       args.ell):
        print(print_word(pumped))
    return EXIT_YES


def _command_to_cca(args: argparse.Namespace) -> int:

    _emit(print_automaton(safa_to_cca(_load_safa(args.file))), args.output)
    return EXIT_YES


def _command_lift(args: argparse.Namespace) -> int:

    automaton: Automaton = parse_automaton(_read(args.file))
    if not isinstance(automaton, Nfa):
        logger: DefaultLogger = create_function_name_logger()
        logger.error(f'{args.file} does not hold an NFA')
    _emit(print_automaton(lift_regular(automaton)), args.output)
    return EXIT_YES


def _command_oracle(args: argparse.Namespace) -> int:

    return _verdict(oracle(args.language, parse_word(args.word or '')),
                    'IN', 'OUT')


def _command_fixture(args: argparse.Namespace) -> int:

    _emit(print_automaton(fixture(args.name)), args.output)
    return EXIT_YES


def build_parser() -> argparse.ArgumentParser:
    """Build the argument parser of the `safa` command.

    Returns
    -------
    argparse.ArgumentParser
        The parser; each sub-command stores its handler as `handler`.
    """

    parser: argparse.ArgumentParser = argparse.ArgumentParser(
        prog='safa',
        description='Set augmented finite automata over data words')
    parser.add_argument('--log-level', default=None,
                        help='DEBUG, INFO, WARNING, ERROR or CRITICAL')
    parser.add_argument('--timing', action='store_true',
                        help='log the time spent by the command')
    commands = parser.add_subparsers(dest='command', required=True)

    def add(name: str,
            handler: Callable[[argparse.Namespace], int],
            help_text: str) -> argparse.ArgumentParser:
        sub: argparse.ArgumentParser = commands.add_parser(name,
                                                           help=help_text)
        sub.set_defaults(handler=handler)
        return sub

    sub: argparse.ArgumentParser

    sub = add('check', _command_check, 'decide membership of words')
    sub.add_argument('file')
    words = sub.add_mutually_exclusive_group(required=True)
    words.add_argument('--word')
    words.add_argument('--words-file')

    sub = add('run', _command_run, 'simulate a deterministic SAFA')
    sub.add_argument('file')
    sub.add_argument('--word', required=True)
    sub.add_argument('--trace', action='store_true')

    sub = add('empty', _command_empty, 'decide emptiness')
    sub.add_argument('file')

    sub = add('deterministic', _command_deterministic,
              'decide determinism')
    sub.add_argument('file')

    for name, handler in (('union', _command_union),
                          ('concat', _command_concat)):
        sub = add(name, handler, f'{name} of two SAFA')
        sub.add_argument('first')
        sub.add_argument('second')
        sub.add_argument('-o', '--output')

    for name, handler, help_text in (
            ('complement', _command_complement, 'complement a DSAFA'),
            ('to-cca', _command_to_cca, 'translate a SAFA into a CCA'),
            ('lift', _command_lift, 'lift an NFA to a SAFA')):
        sub = add(name, handler, help_text)
        sub.add_argument('file')
        sub.add_argument('-o', '--output')

    sub = add('from-cnf', _command_from_cnf,
              'build a SAFA from a DIMACS CNF formula')
    sub.add_argument('file')
    sub.add_argument('-o', '--output')
    sub.add_argument('--membership', action='store_true')

    sub = add('pump', _command_pump, 'pump an accepted word')
    sub.add_argument('file')
    sub.add_argument('--word', required=True)
    sub.add_argument('--ell', type=int, default=1)

    sub = add('oracle', _command_oracle, 'evaluate a reference language')
    sub.add_argument('language')
    sub.add_argument('--word', required=True)

    sub = add('fixture', _command_fixture, 'export a reference automaton')
    sub.add_argument('name')
    sub.add_argument('-o', '--output')

    return parser


def main(argv: Sequence[str] | None = None) -> int:
    """Run the `safa` command.

    Parameters
    ----------
    argv : Sequence[str] | None, optional, default None
        The arguments; `sys.argv[1:]` if None.

    Returns
    -------
    int
        The exit code.
    """

    parser: argparse.ArgumentParser = build_parser()
    try:
        args: argparse.Namespace = parser.parse_args(argv)
    except SystemExit as stop:
        if stop.code is None:
            return EXIT_YES
        return stop.code if isinstance(stop.code, int) else EXIT_ERROR

    timer: DefaultTimer | None = None
    try:
        if args.log_level is not None:
            DefaultConfig.set_class_variable(log_level=args.log_level)
        logger: DefaultLogger = DefaultLogger(__name__)
        logger.show_params(*(f'{key}={value}'
                             for key, value in sorted(vars(args).items())
                             if key != 'handler'))
        if args.timing:
            timer = DefaultTimer(args.command)
            timer.start()
        return args.handler(args)
    except SafaError:
        return EXIT_ERROR
    finally:
        if timer is not None:
            timer.end()
