"""A Python module to run data words through a SAFA: successor
configurations, nondeterministic acceptance, deterministic simulation,
accepting-run extraction and the pumping word generator.

Examples
--------
>>> from package_safa.safa_core import DataWord
>>> from package_safa.safa_fixtures import safa_fixture
>>> from package_safa.safa_semantics import accepts
>>> a = safa_fixture('fig1')
>>> accepts(a, DataWord((('a', 1), ('a', 2))))
True
>>> accepts(a, DataWord((('a', 1), ('a', 1))))
False
"""

from dataclasses import dataclass

from package_safa.common_types import DataValue, Item, Iterator
from package_safa.default_logger import DefaultLogger
from package_safa.safa_core import (Configuration, DataWord, Safa, Transition,
                                    is_deterministic, require_letters,
                                    require_valid)
from package_safa.utils_name import create_function_name_logger


@dataclass(frozen=True)
class Run:
    """Sequence of configurations visited while reading a word.

    Attributes
    ----------
    steps : tuple[tuple[int, DataValue], ...]
        The index of the fired transition and the datum consumed, per
        position.
    configs : tuple[Configuration, ...]
        The configurations; `configs[0]` is the initial one and
        `len(configs) == len(steps) + 1`.
    """

    steps: tuple[tuple[int, DataValue], ...]
    configs: tuple[Configuration, ...]

    def __len__(self) -> int:
        return len(self.steps)

    @property
    def last(self) -> Configuration:
        """Return the configuration reached after the last step."""

        return self.configs[-1]

    def states(self) -> tuple[str, ...]:
        """Return the visited states."""

        return tuple(config.state for config in self.configs)


def _successors(a: Safa,
                config: Configuration,
                item: Item) -> Iterator[tuple[int, Configuration]]:

    letter, datum = item
    for index, transition in a.outgoing(config.state, letter):
        if transition.guard.holds(datum, config.sets):
            yield index, Configuration(
                transition.target, transition.op.apply(datum, config.sets))


def step(a: Safa,
         c: Configuration,
         item: Item) -> list[tuple[int, Configuration]]:
    """Return every configuration succeeding `c` on one item.

    Parameters
    ----------
    a : Safa
        The automaton.
    c : Configuration
        The current configuration.
    item : Item
        The (letter, datum) pair read.

    Returns
    -------
    list[tuple[int, Configuration]]
        The (transition index, successor) pairs, ordered by transition index.

    Raises
    ------
    InvalidArgumentError
        If the letter is not in the alphabet.
    """

    if not a.has_letter(item[0]):
        logger: DefaultLogger = create_function_name_logger()
        logger.error(f'Unknown letter {item[0]!r}')

    return list(_successors(a, c, item))


def find_accepting_run(a: Safa,
                       w: DataWord) -> Run | None:
    """Search for an accepting run of a word.

    Parameters
    ----------
    a : Safa
        The automaton.
    w : DataWord
        The word.

    Returns
    -------
    Run | None
        The first accepting run in depth-first order over the transition
        order, or None if the word is rejected.

    Raises
    ------
    InvalidAutomatonError
        If `a` is structurally invalid.
    InvalidArgumentError
        If `w` uses a letter outside the alphabet.

    Notes
    -----
    Configurations known to have no accepting continuation are remembered
    with their position, so each (position, state, set contents) is expanded
    at most once. The search is exponential in the worst case.
    """

    require_valid(a)
    require_letters(a, w)

    start: Configuration = Configuration.initial(a)
    length: int = len(w)
    if length == 0:
        return Run((), (start,)) if start.state in a.finals else None

    dead: set[tuple[int, Configuration]] = set()
    path_steps: list[tuple[int, DataValue]] = []
    path_configs: list[Configuration] = [start]
    stack: list[Iterator[tuple[int, Configuration]]] \
        = [_successors(a, start, w[0])]

    position: int
    while stack:
        found: tuple[int, Configuration] | None = next(stack[-1], None)

        if found is None:
            stack.pop()
            dead.add((len(stack), path_configs.pop()))
            if path_steps:
                path_steps.pop()
            continue

        index, successor = found
        position = len(stack)
        if (position, successor) in dead:
            continue

        datum: DataValue = w[position-1][1]
        if position == length:
            if successor.state in a.finals:
                return Run(tuple(path_steps) + ((index, datum),),
                           tuple(path_configs) + (successor,))
            dead.add((position, successor))
            continue

        path_steps.append((index, datum))
        path_configs.append(successor)
        stack.append(_successors(a, successor, w[position]))

    return None


def accepts(a: Safa,
            w: DataWord) -> bool:
    """Decide whether some run of the automaton accepts the word.

    Parameters
    ----------
    a : Safa
        The automaton.
    w : DataWord
        The word.

    Returns
    -------
    bool
        Whether `w` is in the language of `a`.

    Raises
    ------
    InvalidAutomatonError
        If `a` is structurally invalid.
    InvalidArgumentError
        If `w` uses a letter outside the alphabet.
    """

    return find_accepting_run(a, w) is not None


def run_deterministic(a: Safa,
                      w: DataWord) -> tuple[bool, Run | int]:
    """Simulate a deterministic SAFA on a word.

    Parameters
    ----------
    a : Safa
        A deterministic automaton.
    w : DataWord
        The word.

    Returns
    -------
    accepted : bool
        Whether the word is accepted.
    outcome : Run | int
        The complete run, or the position at which no transition applied.

    Raises
    ------
    InvalidArgumentError
        If `a` is not deterministic or `w` uses an unknown letter.

    Examples
    --------
    >>> from package_safa.safa_core import DataWord
    >>> from package_safa.safa_fixtures import safa_fixture
    >>> from package_safa.safa_semantics import run_deterministic
    >>> accepted, run = run_deterministic(safa_fixture('fig1'),
    ...     DataWord((('a', 1), ('a', 2))))
    >>> accepted, run.last.describe()
    (True, 'q0 h1={1,2}')
    """

    if not is_deterministic(a):
        logger: DefaultLogger = create_function_name_logger()
        logger.error('The automaton is not deterministic')
    require_letters(a, w)

    config: Configuration = Configuration.initial(a)
    steps: list[tuple[int, DataValue]] = []
    configs: list[Configuration] = [config]

    for position, item in enumerate(w):
        found: tuple[int, Configuration] | None \
            = next(_successors(a, config, item), None)
        if found is None:
            return False, position
        index, config = found
        steps.append((index, item[1]))
        configs.append(config)

    return config.state in a.finals, Run(tuple(steps), tuple(configs))


def pump_decomposition(a: Safa,
                       w: DataWord) -> tuple[Run, int, int]:
    """Split the first accepting run of a word at its first repeated state.

    Parameters
    ----------
    a : Safa
        The automaton.
    w : DataWord
        An accepted word with at least as many items as `a` has states.

    Returns
    -------
    run : Run
        The depth-first first accepting run of `w`.
    start : int
        The position where the cycle starts.
    stop : int
        The position where the cycle returns to the same state, so that
        `w = w[:start] w[start:stop] w[stop:]` with `stop > start` and
        `stop <= len(a.states)`.

    Raises
    ------
    InvalidArgumentError
        If `w` is rejected or shorter than the number of states.
    """

    logger: DefaultLogger

    if len(w) < len(a.states):
        logger = create_function_name_logger()
        logger.error(
            f'The word has {len(w)} items, fewer than the '
            + f'{len(a.states)} states')

    run: Run | None = find_accepting_run(a, w)
    if run is None:
        logger = create_function_name_logger()
        logger.error('The word is not accepted')

    first_visit: dict[str, int] = {}
    for position, state in enumerate(run.states()):
        if state in first_visit:
            return run, first_visit[state], position
        first_visit[state] = position

    # unreachable: len(states) >= len(a.states) + 1
    logger = create_function_name_logger()
    logger.critical('No repeated state along the run')


def _rebuild(a: Safa,
             segments: list[tuple[list[tuple[int, DataValue]], bool]],
             fresh: int) -> DataWord:

    sets: tuple[frozenset[DataValue], ...] = \
        tuple(frozenset() for _ in range(a.set_count))
    items: list[Item] = []

    for steps, repeated in segments:
        for index, original in steps:
            transition: Transition = a.transitions[index]
            guard = transition.guard
            datum: DataValue = original

            if not guard.is_member:
                if repeated or (not guard.holds(original, sets)):
                    datum, fresh = fresh, fresh + 1
            elif not guard.holds(original, sets):
                eligible: frozenset[DataValue] = sets[guard.set_index-1]
                if not eligible:
                    logger: DefaultLogger = create_function_name_logger()
                    logger.critical(
                        f'No datum satisfies {guard} at transition {index}')
                datum = min(eligible)

            items.append((transition.letter, datum))
            sets = transition.op.apply(datum, sets)

    return DataWord(tuple(items))


def pump(a: Safa,
         w: DataWord,
         ell: int) -> list[DataWord]:
    """Pump the cycle of the first accepting run of a word.

    The run is split as x y z at its first repeated state, and for every
    r = 1, ..., ell the word read by x y y^r z is rebuilt. Inside the extra
    copies of y, a !p guard consumes a datum never seen before and a p guard
    consumes the datum of the original y step. Elsewhere the original datum
    is kept whenever its guard still holds. Fresh data count up from
    max(w) + 1.

    Parameters
    ----------
    a : Safa
        The automaton.
    w : DataWord
        An accepted word with at least as many items as `a` has states.
    ell : int
        The largest number of extra cycle copies.

    Returns
    -------
    list[DataWord]
        The pumped words, for 1, ..., ell extra copies.

    Raises
    ------
    InvalidArgumentError
        If `ell` < 1, `w` is rejected or shorter than the number of states.
    VerificationError
        If a pumped word is not accepted.

    Examples
    --------
    >>> from package_safa.safa_core import DataWord
    >>> from package_safa.safa_fixtures import safa_fixture
    >>> from package_safa.safa_semantics import pump
    >>> w = DataWord((('a', 1), ('a', 2)))
    >>> [str(v) for v in pump(safa_fixture('fig1'), w, 1)]
    ['a:1 a:3 a:2']
    """

    logger: DefaultLogger

    if ell < 1:
        logger = create_function_name_logger()
        logger.error(f'Invalid argument: ell = {ell} (must be >= 1)')

    run, start, stop = pump_decomposition(a, w)
    prefix: list[tuple[int, DataValue]] = list(run.steps[:start])
    cycle: list[tuple[int, DataValue]] = list(run.steps[start:stop])
    suffix: list[tuple[int, DataValue]] = list(run.steps[stop:])
    fresh: int = max(w.data(), default=0) + 1

    pumped: list[DataWord] = []
    for repetition in range(1, ell + 1):
        segments: list[tuple[list[tuple[int, DataValue]], bool]] = \
            [(prefix, False), (cycle, False)] \
            + [(cycle, True)] * repetition + [(suffix, False)]
        word: DataWord = _rebuild(a, segments, fresh)
        if not accepts(a, word):
            logger = create_function_name_logger()
            logger.critical(f'Pumped word is rejected: {word}')
        pumped.append(word)

    return pumped
