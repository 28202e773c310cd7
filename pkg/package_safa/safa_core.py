"""A Python module to define the domain types of set augmented finite
automata (SAFA): data words, guards, set operations, transitions, automata and
configurations, together with structural validation and the determinism test.

Notes
-----
Data values are natural numbers. The model only ever compares data values for
equality, so any countably infinite domain can be embedded this way. Set
indices are 1-based: the sets of an automaton with `set_count` = k are
h_1, ..., h_k.
"""

import re
from collections import Counter, defaultdict
from dataclasses import dataclass
from enum import Enum
from functools import cached_property

from package_safa.common_errors import InvalidAutomatonError
from package_safa.common_types import (DataValue, Final, Item, Iterator,
                                       Letter, Renaming, Sequence, SetContents,
                                       StateId)
from package_safa.default_logger import DefaultLogger
from package_safa.utils_name import create_function_name_logger

__pattern_natural: Final[re.Pattern[str]] = re.compile(r'[0-9]+')


class Polarity(Enum):
    """Polarity of a membership guard."""

    MEMBER = 'p'
    NOT_MEMBER = '!p'


@dataclass(frozen=True)
class Predicate:
    """Membership guard p(h_i) or !p(h_i).

    Attributes
    ----------
    polarity : Polarity
        MEMBER for p(h_i), NOT_MEMBER for !p(h_i).
    set_index : int
        The 1-based index i of the tested set.

    Examples
    --------
    >>> from package_safa.safa_core import Predicate
    >>> guard = Predicate.not_member(1)
    >>> str(guard)
    '!p1'
    >>> guard.holds(3, (frozenset({1, 2}),))
    True
    """

    polarity: Polarity
    set_index: int

    @classmethod
    def member(cls,
               set_index: int) -> 'Predicate':
        """Return the guard p(h_i)."""

        return cls(Polarity.MEMBER, set_index)

    @classmethod
    def not_member(cls,
                   set_index: int) -> 'Predicate':
        """Return the guard !p(h_i)."""

        return cls(Polarity.NOT_MEMBER, set_index)

    @property
    def is_member(self) -> bool:
        """Return True for p(h_i)."""

        return self.polarity is Polarity.MEMBER

    def opposite(self) -> 'Predicate':
        """Return the guard on the same set with the other polarity."""

        if self.is_member:
            return Predicate.not_member(self.set_index)
        return Predicate.member(self.set_index)

    def holds(self,
              datum: DataValue,
              sets: SetContents) -> bool:
        """Evaluate the guard on a datum against the current set contents.

        Parameters
        ----------
        datum : DataValue
            The datum being read.
        sets : SetContents
            The contents of h_1, ..., h_k.

        Returns
        -------
        bool
            Whether the guard is satisfied.
        """

        present: bool = datum in sets[self.set_index - 1]
        return present if self.is_member else not present

    def __str__(self) -> str:
        return f'{self.polarity.value}{self.set_index}'


@dataclass(frozen=True)
class SetOp:
    """Set operation: no-op (-) or ins(h_j).

    Attributes
    ----------
    set_index : int | None
        The 1-based index j of the set receiving the datum, or None for the
        no-op.
    """

    set_index: int | None = None

    @classmethod
    def insert(cls,
               set_index: int) -> 'SetOp':
        """Return the operation ins(h_j)."""

        return cls(set_index)

    @property
    def is_insert(self) -> bool:
        """Return True for ins(h_j)."""

        return self.set_index is not None

    def apply(self,
              datum: DataValue,
              sets: SetContents) -> SetContents:
        """Return the set contents after executing the operation.

        Parameters
        ----------
        datum : DataValue
            The datum being read.
        sets : SetContents
            The contents of h_1, ..., h_k before the operation.

        Returns
        -------
        SetContents
            The contents after the operation; `sets` itself for the no-op or
            when the datum is already present.
        """

        if self.set_index is None:
            return sets

        position: int = self.set_index - 1
        if datum in sets[position]:
            return sets
        return sets[:position] + (sets[position] | {datum},) \
            + sets[position+1:]

    def __str__(self) -> str:
        return '-' if self.set_index is None else f'ins{self.set_index}'


NO_OP: Final[SetOp] = SetOp()


@dataclass(frozen=True)
class Transition:
    """Transition (source, letter, guard, op, target).

    Examples
    --------
    >>> from package_safa.safa_core import (NO_OP, Predicate, SetOp,
    ...     Transition)
    >>> str(Transition('q0', 'a', Predicate.not_member(1), SetOp.insert(1),
    ...     'q0'))
    'q0 a !p1 ins1 q0'
    """

    source: StateId
    letter: Letter
    guard: Predicate
    op: SetOp
    target: StateId

    @property
    def label(self) -> str:
        """Return the (letter, guard, op) triple as a single label id."""

        return f'{self.letter},{self.guard},{self.op}'

    def __str__(self) -> str:
        return f'{self.source} {self.letter} {self.guard} {self.op} ' \
            + f'{self.target}'


type Outgoing = tuple[tuple[int, Transition], ...]


@dataclass(frozen=True)
class DataWord:
    """Finite sequence of (letter, datum) pairs.

    Examples
    --------
    >>> from package_safa.safa_core import DataWord
    >>> word = DataWord((('a', 1), ('b', 5)))
    >>> len(word), word.letters(), word.data()
    (2, ('a', 'b'), (1, 5))
    >>> str(word)
    'a:1 b:5'
    """

    items: tuple[Item, ...] = ()

    def __post_init__(self) -> None:

        items: tuple[Item, ...] = tuple(
            (str(letter), int(datum)) for letter, datum in self.items)
        for _, datum in items:
            if datum < 0:
                logger: DefaultLogger = create_function_name_logger()
                logger.error(f'Data values are natural numbers: {datum}')
        object.__setattr__(self, 'items', items)

    def __len__(self) -> int:
        return len(self.items)

    def __iter__(self) -> Iterator[Item]:
        return iter(self.items)

    def __getitem__(self,
                    position: int) -> Item:
        return self.items[position]

    def __add__(self,
                other: 'DataWord') -> 'DataWord':
        return DataWord(self.items + other.items)

    def slice(self,
              start: int,
              stop: int | None = None) -> 'DataWord':
        """Return the infix between two positions."""

        return DataWord(self.items[start:stop])

    def letters(self) -> tuple[Letter, ...]:
        """Return the projection on the alphabet."""

        return tuple(letter for letter, _ in self.items)

    def data(self) -> tuple[DataValue, ...]:
        """Return the projection on the data values."""

        return tuple(datum for _, datum in self.items)

    def __str__(self) -> str:
        return ' '.join(f'{letter}:{datum}' for letter, datum in self.items)


@dataclass(frozen=True)
class Safa:
    """Set augmented finite automaton.

    Attributes
    ----------
    states : tuple[StateId, ...]
        The states, in declaration order.
    alphabet : tuple[Letter, ...]
        The letters, in declaration order.
    set_count : int
        The number |H| of sets.
    initial : StateId
        The initial state.
    finals : frozenset[StateId]
        The final states.
    transitions : tuple[Transition, ...]
        The transition relation. Its order is the tie-break of every search.

    Notes
    -----
    Sequences passed to the constructor are converted to tuples (and the
    finals to a frozenset), so two automata built from equal data compare
    equal.
    """

    states: tuple[StateId, ...]
    alphabet: tuple[Letter, ...]
    set_count: int
    initial: StateId
    finals: frozenset[StateId]
    transitions: tuple[Transition, ...]

    def __post_init__(self) -> None:

        object.__setattr__(self, 'states', tuple(self.states))
        object.__setattr__(self, 'alphabet', tuple(self.alphabet))
        object.__setattr__(self, 'finals', frozenset(self.finals))
        object.__setattr__(self, 'transitions', tuple(self.transitions))

    @cached_property
    def __outgoing_map(self) -> dict[tuple[StateId, Letter], Outgoing]:

        grouped: defaultdict[tuple[StateId, Letter],
                             list[tuple[int, Transition]]] = defaultdict(list)
        for index, transition in enumerate(self.transitions):
            grouped[(transition.source, transition.letter)].append(
                (index, transition))
        return {key: tuple(value) for key, value in grouped.items()}

    @cached_property
    def __letter_set(self) -> frozenset[Letter]:
        return frozenset(self.alphabet)

    def outgoing(self,
                 state: StateId,
                 letter: Letter) -> Outgoing:
        """Return the (index, transition) pairs leaving a state on a letter,
        in transition order."""

        return self.__outgoing_map.get((state, letter), ())

    def has_letter(self,
                   letter: Letter) -> bool:
        """Return whether a letter belongs to the alphabet."""

        return letter in self.__letter_set


@dataclass(frozen=True)
class Configuration:
    """Current state plus the contents of every set.

    Examples
    --------
    >>> from package_safa.safa_core import Configuration
    >>> Configuration('q0', (frozenset({2, 1}), frozenset())).describe()
    'q0 h1={1,2} h2={}'
    """

    state: StateId
    sets: SetContents

    @classmethod
    def initial(cls,
                a: Safa) -> 'Configuration':
        """Return the initial configuration: initial state, all sets empty.
        """

        return cls(a.initial, tuple(frozenset() for _ in range(a.set_count)))

    def describe(self) -> str:
        """Return the state followed by every set, values ascending."""

        parts: list[str] = [self.state]
        for index, contents in enumerate(self.sets, start=1):
            values: str = ','.join(str(datum) for datum in sorted(contents))
            parts.append(f'h{index}={{{values}}}')
        return ' '.join(parts)


def validate(a: Safa) -> list[str]:
    """Check the structural invariants of a SAFA.

    Parameters
    ----------
    a : Safa
        The automaton.

    Returns
    -------
    problems : list[str]
        One message per violation, each starting with its location. The
        automaton is valid iff the list is empty.

    Examples
    --------
    >>> from package_safa.safa_core import validate
    >>> from package_safa.safa_fixtures import safa_fixture
    >>> validate(safa_fixture('fig1'))
    []
    """

    problems: list[str] = []

    if a.set_count < 0:
        problems.append(f'sets: negative set count {a.set_count}')

    for state, count in Counter(a.states).items():
        if count > 1:
            problems.append(f'states: duplicate state {state}')
    for letter, count in Counter(a.alphabet).items():
        if count > 1:
            problems.append(f'alphabet: duplicate letter {letter}')

    state_set: frozenset[StateId] = frozenset(a.states)
    if a.initial not in state_set:
        problems.append(f'initial: undeclared state {a.initial}')
    for state in sorted(a.finals - state_set):
        problems.append(f'final: undeclared state {state}')

    seen: set[Transition] = set()
    location: str
    for index, transition in enumerate(a.transitions):
        location = f'transition {index} ({transition})'
        if transition.source not in state_set:
            problems.append(
                f'{location}: undeclared source {transition.source}')
        if not a.has_letter(transition.letter):
            problems.append(
                f'{location}: undeclared letter {transition.letter}')
        if not 1 <= transition.guard.set_index <= a.set_count:
            problems.append(
                f'{location}: guard set index {transition.guard.set_index} '
                + f'out of bounds [1, {a.set_count}]')
        if (transition.op.set_index is not None) \
                and (not 1 <= transition.op.set_index <= a.set_count):
            problems.append(
                f'{location}: insert set index {transition.op.set_index} '
                + f'out of bounds [1, {a.set_count}]')
        if transition.target not in state_set:
            problems.append(
                f'{location}: undeclared target {transition.target}')
        if transition in seen:
            problems.append(f'{location}: duplicate transition')
        seen.add(transition)

    return problems


def require_valid(a: Safa) -> None:
    """Raise if the automaton is structurally invalid.

    Raises
    ------
    InvalidAutomatonError
        If `validate(a)` is not empty.
    """

    problems: list[str] = validate(a)
    if problems:
        message: str = 'Invalid automaton: ' + '; '.join(problems)
        logger: DefaultLogger = create_function_name_logger()
        logger.error(message, InvalidAutomatonError(message, problems))


def require_letters(a: Safa,
                    w: DataWord) -> None:
    """Raise if a word uses a letter outside the alphabet.

    Raises
    ------
    InvalidArgumentError
        If some letter of `w` is not in the alphabet of `a`.
    """

    for position, (letter, _) in enumerate(w):
        if not a.has_letter(letter):
            logger: DefaultLogger = create_function_name_logger()
            logger.error(f'Unknown letter {letter!r} at position {position}')


def is_deterministic(a: Safa) -> bool:
    """Decide whether a valid SAFA is deterministic (DSAFA).

    Every (state, letter) pair may have at most two outgoing transitions; when
    there are two, their guards test the same set with opposite polarities.

    Parameters
    ----------
    a : Safa
        The automaton.

    Returns
    -------
    bool
        Whether `a` is deterministic.

    Raises
    ------
    InvalidAutomatonError
        If `a` is structurally invalid.
    """

    require_valid(a)

    guards: defaultdict[tuple[StateId, Letter], list[Predicate]] \
        = defaultdict(list)
    for transition in a.transitions:
        guards[(transition.source, transition.letter)].append(
            transition.guard)

    for pair in guards.values():
        if len(pair) > 2:
            return False
        if len(pair) == 2:
            if pair[0].set_index != pair[1].set_index:
                return False
            if pair[0].polarity is pair[1].polarity:
                return False

    return True


def rename_data(w: DataWord,
                pi: Renaming) -> DataWord:
    """Replace every datum of a word by its image under an injective map.

    Parameters
    ----------
    w : DataWord
        The word.
    pi : Renaming
        A map defined on every datum of `w`, injective on those data.

    Returns
    -------
    DataWord
        The renamed word; letters are unchanged.

    Raises
    ------
    InvalidArgumentError
        If a datum is outside the domain of `pi`, or two data of `w` share an
        image.

    Examples
    --------
    >>> from package_safa.safa_core import DataWord, rename_data
    >>> str(rename_data(DataWord((('a', 1), ('a', 2))), {1: 7, 2: 9}))
    'a:7 a:9'
    """

    logger: DefaultLogger

    images: dict[DataValue, DataValue] = {}
    for datum in w.data():
        if datum not in pi:
            logger = create_function_name_logger()
            logger.error(f'Datum {datum} is outside the renaming')
        images[datum] = pi[datum]

    if len(set(images.values())) != len(images):
        logger = create_function_name_logger()
        logger.error('The renaming is not injective on the data of the word')

    return DataWord(tuple((letter, images[datum]) for letter, datum in w))


def make_safa(states: Sequence[StateId],
              alphabet: Sequence[Letter],
              set_count: int,
              initial: StateId,
              finals: Sequence[StateId],
              transitions: Sequence[tuple[StateId, Letter, str, str,
                                          StateId]]) -> Safa:
    """Build a SAFA from transitions written in the text-format notation.

    Parameters
    ----------
    states : Sequence[StateId]
        The states.
    alphabet : Sequence[Letter]
        The letters.
    set_count : int
        The number of sets.
    initial : StateId
        The initial state.
    finals : Sequence[StateId]
        The final states.
    transitions : Sequence[tuple[StateId, Letter, str, str, StateId]]
        Tuples (source, letter, guard, op, target) where guard is 'p<i>' or
        '!p<i>' and op is '-' or 'ins<j>'.

    Returns
    -------
    Safa
        The automaton (not validated).

    Raises
    ------
    InvalidArgumentError
        If a guard or operation is malformed.

    Examples
    --------
    >>> from package_safa.safa_core import make_safa
    >>> a = make_safa(['q0', 'qf'], ['a'], 1, 'q0', ['qf'],
    ...     [('q0', 'a', 'p1', '-', 'qf'), ('q0', 'a', '!p1', 'ins1', 'q0')])
    >>> len(a.transitions)
    2
    """

    return Safa(states=tuple(states),
                alphabet=tuple(alphabet),
                set_count=set_count,
                initial=initial,
                finals=frozenset(finals),
                transitions=tuple(
                    Transition(source, letter, parse_guard(guard),
                               parse_op(op), target)
                    for source, letter, guard, op, target in transitions))


def parse_guard(token: str) -> Predicate:
    """Parse 'p<i>' or '!p<i>'.

    Raises
    ------
    InvalidArgumentError
        If the token is malformed.
    """

    polarity: Polarity = Polarity.MEMBER
    digits: str = token
    if token.startswith('!p'):
        polarity, digits = Polarity.NOT_MEMBER, token[2:]
    elif token.startswith('p'):
        digits = token[1:]
    else:
        digits = ''

    if __pattern_natural.fullmatch(digits) is None:
        logger: DefaultLogger = create_function_name_logger()
        logger.error(f'Malformed guard {token!r}')

    return Predicate(polarity, int(digits))


def parse_op(token: str) -> SetOp:
    """Parse '-' or 'ins<j>'.

    Raises
    ------
    InvalidArgumentError
        If the token is malformed.
    """

    if token == '-':
        return NO_OP

    if (not token.startswith('ins')) \
            or (__pattern_natural.fullmatch(token[3:]) is None):
        logger: DefaultLogger = create_function_name_logger()
        logger.error(f'Malformed set operation {token!r}')

    return SetOp.insert(int(token[3:]))
