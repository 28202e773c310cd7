"""A Python module to provide reference automata and reference language
predicates.

The predicates are written as plainly as possible, since they are what the
automata are checked against.

Examples
--------
>>> from package_safa.safa_core import DataWord
>>> from package_safa.safa_fixtures import oracle
>>> oracle('a_exists_b', DataWord((('b', 1), ('a', 1))))
True
>>> oracle('contains_d(5)', DataWord((('a', 3),)))
False
"""

import re

from package_safa.common_types import Callable, Final
from package_safa.comparison_models import RegisterAutomaton
from package_safa.default_logger import DefaultLogger
from package_safa.safa_core import (NO_OP, DataWord, Predicate, Safa, SetOp,
                                    Transition, make_safa)
from package_safa.utils_name import create_function_name_logger

DEFAULT_DATUM: Final[int] = 5

__pattern_id: Final[re.Pattern[str]] = \
    re.compile(r'^\s*([a-z_0-9]+?)\s*(?:\(\s*([^()]*?)\s*\))?\s*$')
__pattern_natural: Final[re.Pattern[str]] = re.compile(r'[0-9]+')


def _split_id(identifier: str) -> tuple[str, str | None]:

    match: re.Match[str] | None = __pattern_id.match(identifier)
    if match is None:
        logger: DefaultLogger = create_function_name_logger()
        logger.error(f'Malformed identifier {identifier!r}')
    return match.group(1), match.group(2)


def _int_argument(name: str,
                  argument: str | None,
                  default: int | None) -> int:

    logger: DefaultLogger
    if (argument is None) or (argument == ''):
        if default is None:
            logger = create_function_name_logger()
            logger.error(f'{name} needs an integer argument')
        return default
    if __pattern_natural.fullmatch(argument) is None:
        logger = create_function_name_logger()
        logger.error(f'{name}: argument {argument!r} is not a natural number')
    return int(argument)


# ----- Language predicates -----

def lang_fd(w: DataWord,
            letter: str = 'a') -> bool:
    """Return whether the data carried by `letter` are pairwise distinct."""

    seen: set[int] = set()
    for current, datum in w:
        if current != letter:
            continue
        if datum in seen:
            return False
        seen.add(datum)
    return True


def lang_all_cnt_2(w: DataWord) -> bool:
    """Return whether every datum occurs exactly twice."""

    counts: dict[int, int] = {}
    for datum in w.data():
        counts[datum] = counts.get(datum, 0) + 1
    return all(count == 2 for count in counts.values())


def lang_exists_cnt_ne_2(w: DataWord) -> bool:
    """Return whether some datum occurs a number of times other than two."""

    return not lang_all_cnt_2(w)


def lang_a_exists_b(w: DataWord) -> bool:
    """Return whether every datum read with 'a' was read with 'b' before."""

    with_b: set[int] = set()
    for letter, datum in w:
        if letter == 'b':
            with_b.add(datum)
        elif (letter == 'a') and (datum not in with_b):
            return False
    return True


def lang_contains_d(w: DataWord,
                    d: int = DEFAULT_DATUM) -> bool:
    """Return whether the datum `d` occurs."""

    return d in w.data()


def lang_pairs(w: DataWord) -> bool:
    """Return whether the word is a sequence of (a, d)(a, d) blocks."""

    if len(w) % 2 != 0:
        return False
    for position in range(0, len(w), 2):
        if (w[position][0] != 'a') or (w[position] != w[position+1]):
            return False
    return True


def lang_hierarchy(w: DataWord,
                   k: int) -> bool:
    """Return whether the letters read a1* a2* ... ak* and the data of each
    letter are pairwise distinct."""

    letters: list[str] = [f'a{index}' for index in range(1, k + 1)]
    block: int = 0
    for letter, _ in w:
        if letter not in letters:
            return False
        position: int = letters.index(letter)
        if position < block:
            return False
        block = position
    return all(lang_fd(w, letter) for letter in letters)


def _with_argument(name: str,
                   argument: str | None) -> Callable[[DataWord], bool]:

    logger: DefaultLogger
    match name:
        case 'fd':
            letter: str = 'a' if not argument else argument
            return lambda w: lang_fd(w, letter)
        case 'all_cnt_2':
            return lang_all_cnt_2
        case 'exists_cnt_ne_2':
            return lang_exists_cnt_ne_2
        case 'a_exists_b':
            return lang_a_exists_b
        case 'contains_d':
            d: int = _int_argument(name, argument, DEFAULT_DATUM)
            return lambda w: lang_contains_d(w, d)
        case 'pairs':
            return lang_pairs
        case 'hierarchy':
            k: int = _int_argument(name, argument, None)
            if k < 1:
                logger = create_function_name_logger()
                logger.error(f'hierarchy needs k >= 1, got {k}')
            return lambda w: lang_hierarchy(w, k)
        case _:
            logger = create_function_name_logger()
            logger.error(f'Unknown language id {name!r}')


def language_ids() -> tuple[str, ...]:
    """Return the accepted language ids."""

    return ('fd(a)', 'all_cnt_2', 'exists_cnt_ne_2', 'a_exists_b',
            'contains_d(d)', 'pairs', 'hierarchy(k)')


def oracle(lang: str,
           w: DataWord) -> bool:
    """Evaluate a reference language predicate.

    Parameters
    ----------
    lang : str
        One of `language_ids()`, with its argument written in parentheses,
        e.g. 'fd(a)', 'contains_d(5)', 'hierarchy(2)'. 'fd' and
        'contains_d' default to 'a' and 5.
    w : DataWord
        The word.

    Returns
    -------
    bool
        Whether `w` belongs to the language.

    Raises
    ------
    InvalidArgumentError
        If the language id is unknown or its argument is malformed.
    """

    name, argument = _split_id(lang)
    return _with_argument(name, argument)(w)


# ----- Reference automata -----

def fig1() -> Safa:
    """Return the DSAFA for fd(a) over {a, b}."""

    return make_safa(['q0', 'q1'], ['a', 'b'], 1, 'q0', ['q0'],
                     [('q0', 'a', '!p1', 'ins1', 'q0'),
                      ('q0', 'b', 'p1', '-', 'q0'),
                      ('q0', 'b', '!p1', '-', 'q0'),
                      ('q0', 'a', 'p1', '-', 'q1')])


def fig2() -> Safa:
    """Return the SAFA for exists_cnt_ne_2 over {a}.

    The automaton stores every datum in h1 until it guesses, with ins2, the
    datum whose count differs from two. q1 counts its first occurrence, q2
    its second and q3 any further one.
    """

    return make_safa(['q0', 'q1', 'q2', 'q3'], ['a'], 2, 'q0', ['q1', 'q3'],
                     [('q3', 'a', '!p1', '-', 'q3'),
                      ('q3', 'a', 'p1', '-', 'q3'),
                      ('q0', 'a', 'p1', 'ins1', 'q0'),
                      ('q0', 'a', '!p1', 'ins1', 'q0'),
                      ('q0', 'a', '!p1', 'ins2', 'q1'),
                      ('q1', 'a', '!p2', '-', 'q1'),
                      ('q1', 'a', 'p2', '-', 'q2'),
                      ('q2', 'a', '!p2', '-', 'q2'),
                      ('q2', 'a', 'p2', '-', 'q3')])


def fig3_simple() -> Safa:
    """Return the one-set SAFA accepting (a, d1) ... (a, d1) with a repeated
    datum at the end."""

    return make_safa(['q0', 'qf'], ['a'], 1, 'q0', ['qf'],
                     [('q0', 'a', 'p1', '-', 'qf'),
                      ('q0', 'a', '!p1', 'ins1', 'q0')])


def fig5_pair() -> Safa:
    """Return the SAFA accepting exactly the words (a, d)(a, d)."""

    return make_safa(['q0', 'q1', 'q2'], ['a'], 1, 'q0', ['q2'],
                     [('q0', 'a', '!p1', 'ins1', 'q1'),
                      ('q1', 'a', 'p1', '-', 'q2')])


def fig6() -> Safa:
    """Return the DSAFA for a_exists_b over {a, b}."""

    return make_safa(['q0', 'q1'], ['a', 'b'], 1, 'q0', ['q0'],
                     [('q0', 'a', 'p1', '-', 'q0'),
                      ('q0', 'b', 'p1', '-', 'q0'),
                      ('q0', 'b', '!p1', 'ins1', 'q0'),
                      ('q0', 'a', '!p1', '-', 'q1')])


def ex7_register(d: int = DEFAULT_DATUM) -> RegisterAutomaton:
    """Return the 2-register automaton accepting the words containing `d`.
    """

    return RegisterAutomaton(
        states=('q0', 'q1'),
        alphabet=('a',),
        register_count=2,
        initial_registers=(d, None),
        update=(('q0', 'a', 2), ('q1', 'a', 2)),
        initial='q0',
        finals=frozenset({'q1'}),
        transitions=(('q0', 'a', 1, 'q1'), ('q0', 'a', 2, 'q0'),
                     ('q1', 'a', 1, 'q1'), ('q1', 'a', 2, 'q1')))


def ex8_register() -> RegisterAutomaton:
    """Return the 2-register automaton accepting pairs."""

    return RegisterAutomaton(
        states=('q0', 'q1', 'q2'),
        alphabet=('a',),
        register_count=2,
        initial_registers=(None, None),
        update=(('q0', 'a', 1), ('q1', 'a', 2)),
        initial='q0',
        finals=frozenset({'q0'}),
        transitions=(('q0', 'a', 1, 'q1'), ('q1', 'a', 1, 'q0'),
                     ('q1', 'a', 2, 'q2')))


def hierarchy_safa(k: int) -> Safa:
    """Build the k-set SAFA for hierarchy(k).

    Parameters
    ----------
    k : int
        The number of letters a1, ..., ak and of sets.

    Returns
    -------
    Safa
        States s1, ..., sk, all final, initial s1. si loops on
        (ai, !pi, insi) and moves to sj, j > i, on (aj, !pj, insj).

    Raises
    ------
    InvalidArgumentError
        If `k` < 1.

    Examples
    --------
    >>> from package_safa.safa_fixtures import hierarchy_safa
    >>> a = hierarchy_safa(2)
    >>> [str(t) for t in a.transitions]
    ['s1 a1 !p1 ins1 s1', 's1 a2 !p2 ins2 s2', 's2 a2 !p2 ins2 s2']
    """

    if k < 1:
        logger: DefaultLogger = create_function_name_logger()
        logger.error(f'Invalid argument: k = {k} (must be >= 1)')

    states: tuple[str, ...] = tuple(f's{index}' for index in range(1, k + 1))
    transitions: list[Transition] = []
    for source in range(1, k + 1):
        for target in range(source, k + 1):
            transitions.append(Transition(
                f's{source}', f'a{target}', Predicate.not_member(target),
                SetOp.insert(target), f's{target}'))

    return Safa(states=states,
                alphabet=tuple(f'a{index}' for index in range(1, k + 1)),
                set_count=k,
                initial='s1',
                finals=frozenset(states),
                transitions=tuple(transitions))


def empty_member_only(initial_final: bool = False) -> Safa:
    """Return a one-state automaton whose only transition is a p guard on a
    set nothing ever inserts into."""

    return Safa(states=('q0',),
                alphabet=('a',),
                set_count=1,
                initial='q0',
                finals=frozenset({'q0'}) if initial_final else frozenset(),
                transitions=(Transition('q0', 'a', Predicate.member(1),
                                        NO_OP, 'q0'),))


__safa_fixtures: Final[dict[str, Callable[[], Safa]]] = {
    'fig1': fig1,
    'fig2': fig2,
    'fig3_simple': fig3_simple,
    'fig5_pair': fig5_pair,
    'fig6': fig6,
}


def fixture_names() -> tuple[str, ...]:
    """Return the accepted fixture names."""

    return tuple(__safa_fixtures) + ('ex7_register(d)', 'ex8_register',
                                     'hierarchy(k)')


def fixture(name: str) -> Safa | RegisterAutomaton:
    """Return a reference automaton by name.

    Parameters
    ----------
    name : str
        One of `fixture_names()`; 'ex7_register' takes an optional datum
        (default 5) and 'hierarchy' a mandatory k, in parentheses.

    Returns
    -------
    Safa | RegisterAutomaton
        A fresh automaton.

    Raises
    ------
    InvalidArgumentError
        If the name is unknown.
    """

    base, argument = _split_id(name)
    if (base in __safa_fixtures) and (argument is None):
        return __safa_fixtures[base]()

    logger: DefaultLogger
    match base:
        case 'ex7_register':
            return ex7_register(
                _int_argument(base, argument, DEFAULT_DATUM))
        case 'ex8_register' if argument is None:
            return ex8_register()
        case 'hierarchy':
            return hierarchy_safa(_int_argument(base, argument, None))
        case _:
            logger = create_function_name_logger()
            logger.error(f'Unknown fixture {name!r}')


def safa_fixture(name: str) -> Safa:
    """Return a reference SAFA by name.

    Raises
    ------
    InvalidArgumentError
        If the name is unknown or names a register automaton.
    """

    found: Safa | RegisterAutomaton = fixture(name)
    if not isinstance(found, Safa):
        logger: DefaultLogger = create_function_name_logger()
        logger.error(f'Fixture {name!r} is not a SAFA')
    return found
