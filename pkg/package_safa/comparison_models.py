"""A Python module to define the two data-word models SAFA are compared
with, k-register automata and k-bag class counting automata (CCA), with their
simulation and the translation of a SAFA into an equivalent CCA.
"""

import operator
from collections import Counter
from dataclasses import dataclass
from enum import Enum
from functools import cached_property

from package_safa.common_errors import InvalidAutomatonError
from package_safa.common_types import (Callable, DataValue, Letter, StateId)
from package_safa.default_logger import DefaultLogger
from package_safa.safa_core import DataWord, Safa, require_valid
from package_safa.utils_name import create_function_name_logger

type Registers = tuple[DataValue | None, ...]
type Bag = tuple[tuple[DataValue, int], ...]


@dataclass(frozen=True)
class RegisterAutomaton:
    """k-register automaton.

    Attributes
    ----------
    states : tuple[StateId, ...]
        The states.
    alphabet : tuple[Letter, ...]
        The letters.
    register_count : int
        The number k of registers.
    initial_registers : tuple[DataValue | None, ...]
        The initial contents; None is the empty register.
    update : tuple[tuple[StateId, Letter, int], ...]
        The partial update function as (state, letter, register) entries.
    initial : StateId
        The initial state.
    finals : frozenset[StateId]
        The final states.
    transitions : tuple[tuple[StateId, Letter, int, StateId], ...]
        The (source, letter, register, target) transitions.
    """

    states: tuple[StateId, ...]
    alphabet: tuple[Letter, ...]
    register_count: int
    initial_registers: Registers
    update: tuple[tuple[StateId, Letter, int], ...]
    initial: StateId
    finals: frozenset[StateId]
    transitions: tuple[tuple[StateId, Letter, int, StateId], ...]

    def __post_init__(self) -> None:

        object.__setattr__(self, 'states', tuple(self.states))
        object.__setattr__(self, 'alphabet', tuple(self.alphabet))
        object.__setattr__(self, 'initial_registers',
                           tuple(self.initial_registers))
        object.__setattr__(self, 'update', tuple(
            (str(state), str(letter), int(register))
            for state, letter, register in self.update))
        object.__setattr__(self, 'finals', frozenset(self.finals))
        object.__setattr__(self, 'transitions', tuple(
            (str(source), str(letter), int(register), str(target))
            for source, letter, register, target in self.transitions))

    @cached_property
    def update_map(self) -> dict[tuple[StateId, Letter], int]:
        """Return the update function as a mapping."""

        return {(state, letter): register
                for state, letter, register in self.update}


class Comparator(Enum):
    """Comparison of a bag count against a threshold."""

    LT = '<'
    GT = '>'
    EQ = '='
    LE = '<='
    GE = '>='
    NE = '!='

    @property
    def function(self) -> Callable[[int, int], bool]:
        """Return the comparison as a function."""

        return {Comparator.LT: operator.lt,
                Comparator.GT: operator.gt,
                Comparator.EQ: operator.eq,
                Comparator.LE: operator.le,
                Comparator.GE: operator.ge,
                Comparator.NE: operator.ne}[self]


@dataclass(frozen=True)
class Constraint:
    """Constraint (op, e) on the count of the current datum in one bag."""

    comparator: Comparator
    threshold: int

    def holds(self,
              count: int) -> bool:
        """Return whether `count op e` holds."""

        return self.comparator.function(count, self.threshold)

    def __str__(self) -> str:
        return f'{self.comparator.value}{self.threshold}'


@dataclass(frozen=True)
class BagOp:
    """Bag operation: increment the count by `amount`, or reset it to
    `amount`."""

    reset: bool
    amount: int

    def apply(self,
              count: int) -> int:
        """Return the new count."""

        return self.amount if self.reset else count + self.amount

    def __str__(self) -> str:
        return f'={self.amount}' if self.reset else f'+{self.amount}'


@dataclass(frozen=True)
class CcaTransition:
    """Transition of a k-bag CCA."""

    source: StateId
    letter: Letter
    constraints: tuple[Constraint, ...]
    operations: tuple[BagOp, ...]
    target: StateId

    def __post_init__(self) -> None:

        object.__setattr__(self, 'constraints', tuple(self.constraints))
        object.__setattr__(self, 'operations', tuple(self.operations))


@dataclass(frozen=True)
class Cca:
    """k-bag class counting automaton."""

    states: tuple[StateId, ...]
    alphabet: tuple[Letter, ...]
    bag_count: int
    initial: StateId
    finals: frozenset[StateId]
    transitions: tuple[CcaTransition, ...]

    def __post_init__(self) -> None:

        object.__setattr__(self, 'states', tuple(self.states))
        object.__setattr__(self, 'alphabet', tuple(self.alphabet))
        object.__setattr__(self, 'finals', frozenset(self.finals))
        object.__setattr__(self, 'transitions', tuple(self.transitions))


@dataclass(frozen=True)
class CcaConfiguration:
    """Current state and the nonzero counts of every bag.

    Attributes
    ----------
    state : StateId
        The current state.
    bags : tuple[Bag, ...]
        Per bag, the (datum, count) pairs with a nonzero count, sorted by
        datum. Absent data count 0.
    """

    state: StateId
    bags: tuple[Bag, ...]

    def count(self,
              bag_index: int,
              datum: DataValue) -> int:
        """Return the count of a datum in a bag (0-based bag index)."""

        return dict(self.bags[bag_index]).get(datum, 0)


def _check_common(states: tuple[StateId, ...],
                  alphabet: tuple[Letter, ...],
                  initial: StateId,
                  finals: frozenset[StateId]) -> list[str]:

    problems: list[str] = []
    for state, count in Counter(states).items():
        if count > 1:
            problems.append(f'states: duplicate state {state}')
    for letter, count in Counter(alphabet).items():
        if count > 1:
            problems.append(f'alphabet: duplicate letter {letter}')
    if initial not in states:
        problems.append(f'initial: undeclared state {initial}')
    for state in sorted(finals - set(states)):
        problems.append(f'final: undeclared state {state}')
    return problems


def validate_register(r: RegisterAutomaton) -> list[str]:
    """Check the structural invariants of a register automaton.

    Returns
    -------
    problems : list[str]
        One message per violation; empty iff `r` is well formed.
    """

    problems: list[str] = _check_common(r.states, r.alphabet, r.initial,
                                        r.finals)
    k: int = r.register_count

    if k < 0:
        problems.append(f'registers: negative register count {k}')
    if len(r.initial_registers) != k:
        problems.append(f'registers: {len(r.initial_registers)} initial '
                        + f'values for {k} registers')
    values: list[DataValue] = \
        [value for value in r.initial_registers if value is not None]
    if len(values) != len(set(values)):
        problems.append('registers: initial values are not distinct')

    keys: Counter[tuple[StateId, Letter]] = Counter(
        (state, letter) for state, letter, _ in r.update)
    location: str
    for index, (state, letter, register) in enumerate(r.update):
        location = f'update {index} ({state} {letter} {register})'
        if keys[(state, letter)] > 1:
            problems.append(f'{location}: update defined twice')
        if state not in r.states:
            problems.append(f'{location}: undeclared state {state}')
        if letter not in r.alphabet:
            problems.append(f'{location}: undeclared letter {letter}')
        if not 1 <= register <= k:
            problems.append(f'{location}: register {register} out of bounds '
                            + f'[1, {k}]')

    for index, (source, letter, register, target) in \
            enumerate(r.transitions):
        location = f'transition {index} ({source} {letter} {register} ' \
            + f'{target})'
        if source not in r.states:
            problems.append(f'{location}: undeclared source {source}')
        if letter not in r.alphabet:
            problems.append(f'{location}: undeclared letter {letter}')
        if not 1 <= register <= k:
            problems.append(f'{location}: register {register} out of bounds '
                            + f'[1, {k}]')
        if target not in r.states:
            problems.append(f'{location}: undeclared target {target}')

    return problems


def validate_cca(c: Cca) -> list[str]:
    """Check the structural invariants of a CCA.

    Returns
    -------
    problems : list[str]
        One message per violation; empty iff `c` is well formed.
    """

    problems: list[str] = _check_common(c.states, c.alphabet, c.initial,
                                        c.finals)
    if c.bag_count < 0:
        problems.append(f'bags: negative bag count {c.bag_count}')

    for index, transition in enumerate(c.transitions):
        location: str = f'transition {index}'
        if transition.source not in c.states:
            problems.append(
                f'{location}: undeclared source {transition.source}')
        if transition.letter not in c.alphabet:
            problems.append(
                f'{location}: undeclared letter {transition.letter}')
        if transition.target not in c.states:
            problems.append(
                f'{location}: undeclared target {transition.target}')
        if len(transition.constraints) != c.bag_count:
            problems.append(f'{location}: {len(transition.constraints)} '
                            + f'constraints for {c.bag_count} bags')
        if len(transition.operations) != c.bag_count:
            problems.append(f'{location}: {len(transition.operations)} '
                            + f'operations for {c.bag_count} bags')
        if any(constraint.threshold < 0
               for constraint in transition.constraints):
            problems.append(f'{location}: negative threshold')
        if any(bag_op.amount < 0 for bag_op in transition.operations):
            problems.append(f'{location}: negative amount')

    return problems


def _require(problems: list[str],
             kind: str) -> None:

    if problems:
        message: str = f'Invalid {kind}: ' + '; '.join(problems)
        logger: DefaultLogger = create_function_name_logger()
        logger.error(message, InvalidAutomatonError(message, problems))


def register_accepts(r: RegisterAutomaton,
                     w: DataWord) -> bool:
    """Decide whether a register automaton accepts a word.

    Parameters
    ----------
    r : RegisterAutomaton
        The automaton.
    w : DataWord
        The word.

    Returns
    -------
    bool
        Whether some branch reads all of `w` and stops in a final state.

    Raises
    ------
    InvalidAutomatonError
        If `r` is structurally invalid.

    Notes
    -----
    On (a, d) in state q: if registers i1, i2, ... hold d, only transitions
    (q, a, i, q') with i among them fire. Otherwise d is written to register
    U(q, a) and the transitions (q, a, U(q, a), q') fire. A branch with no
    firing transition halts.

    Examples
    --------
    >>> from package_safa.comparison_models import register_accepts
    >>> from package_safa.safa_core import DataWord
    >>> from package_safa.safa_fixtures import ex7_register
    >>> register_accepts(ex7_register(5), DataWord((('a', 3), ('a', 5))))
    True
    """

    _require(validate_register(r), 'register automaton')

    frontier: set[tuple[StateId, Registers]] = \
        {(r.initial, r.initial_registers)}

    for letter, datum in w:
        following: set[tuple[StateId, Registers]] = set()
        for state, registers in frontier:
            matching: list[int] = [index for index, value
                                   in enumerate(registers, start=1)
                                   if value == datum]
            updated: Registers = registers
            if not matching:
                target_register: int | None = \
                    r.update_map.get((state, letter))
                if target_register is None:
                    continue
                matching = [target_register]
                updated = registers[:target_register-1] + (datum,) \
                    + registers[target_register:]
            for source, label, register, target in r.transitions:
                if (source == state) and (label == letter) \
                        and (register in matching):
                    following.add((target, updated))
        frontier = following
        if not frontier:
            return False

    return any(state in r.finals for state, _ in frontier)


def cca_frontier(c: Cca,
                 w: DataWord) -> frozenset[CcaConfiguration]:
    """Return every configuration a CCA can be in after reading a word.

    Parameters
    ----------
    c : Cca
        The automaton.
    w : DataWord
        The word.

    Returns
    -------
    frozenset[CcaConfiguration]
        The reachable configurations.

    Raises
    ------
    InvalidAutomatonError
        If `c` is structurally invalid.
    """

    _require(validate_cca(c), 'CCA')

    frontier: set[CcaConfiguration] = \
        {CcaConfiguration(c.initial, ((),) * c.bag_count)}

    for letter, datum in w:
        following: set[CcaConfiguration] = set()
        for config in frontier:
            counts: list[int] = [config.count(index, datum)
                                 for index in range(c.bag_count)]
            for transition in c.transitions:
                if (transition.source != config.state) \
                        or (transition.letter != letter):
                    continue
                if not all(constraint.holds(count) for constraint, count
                           in zip(transition.constraints, counts)):
                    continue
                bags: list[Bag] = []
                for bag, bag_op, count in zip(config.bags,
                                              transition.operations, counts):
                    contents: dict[DataValue, int] = dict(bag)
                    contents[datum] = bag_op.apply(count)
                    bags.append(tuple(sorted(
                        (value, number) for value, number in contents.items()
                        if number != 0)))
                following.add(CcaConfiguration(transition.target,
                                               tuple(bags)))
        frontier = following
        if not frontier:
            break

    return frozenset(frontier)


def cca_accepts(c: Cca,
                w: DataWord) -> bool:
    """Decide whether some run of a CCA reads the word into a final state.
    """

    return any(config.state in c.finals for config in cca_frontier(c, w))


def safa_to_cca(a: Safa) -> Cca:
    """Translate a SAFA into a CCA with one bag per set.

    A p guard on h_i becomes (=, 1) on bag i and a !p guard becomes (=, 0);
    ins(h_j) resets bag j to 1. Every other bag gets (>=, 0) and +0.

    Parameters
    ----------
    a : Safa
        The automaton.

    Returns
    -------
    Cca
        An automaton with the same language.

    Raises
    ------
    InvalidAutomatonError
        If `a` is structurally invalid.
    """

    require_valid(a)

    unconstrained: Constraint = Constraint(Comparator.GE, 0)
    untouched: BagOp = BagOp(False, 0)
    transitions: list[CcaTransition] = []

    for transition in a.transitions:
        constraints: list[Constraint] = [unconstrained] * a.set_count
        constraints[transition.guard.set_index-1] = Constraint(
            Comparator.EQ, 1 if transition.guard.is_member else 0)
        operations: list[BagOp] = [untouched] * a.set_count
        if transition.op.set_index is not None:
            operations[transition.op.set_index-1] = BagOp(True, 1)
        transitions.append(CcaTransition(
            transition.source, transition.letter, tuple(constraints),
            tuple(operations), transition.target))

    return Cca(states=a.states,
               alphabet=a.alphabet,
               bag_count=a.set_count,
               initial=a.initial,
               finals=a.finals,
               transitions=tuple(transitions))
