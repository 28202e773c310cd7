"""A Python module to generate SAFA instances from CNF formulas, for the
nonemptiness problem and for the membership problem.

Notes
-----
Literal +v owns set 2v - 1 and literal -v owns set 2v. The chain of states is
q0, qv1, ..., qv<l>, qc1, ..., qc<k>. Reading a1 (resp. a2) from qv<v-1>
inserts the datum into the set of +v (resp. -v), and the literal at position
j of a clause is checked with a p guard on letter a<j>.
"""

from dataclasses import dataclass
from itertools import product

from package_safa.common_types import Item, Sequence, StateId
from package_safa.default_logger import DefaultLogger
from package_safa.safa_core import (NO_OP, DataWord, Predicate, Safa, SetOp,
                                    Transition)
from package_safa.utils_name import create_function_name_logger


@dataclass(frozen=True)
class CnfFormula:
    """Propositional formula in conjunctive normal form.

    Attributes
    ----------
    variable_count : int
        The number of variables, named 1, ..., variable_count.
    clauses : tuple[tuple[int, ...], ...]
        The clauses; literal v > 0 stands for variable v and -v for its
        negation.

    Examples
    --------
    >>> from package_safa.safa_reductions import CnfFormula
    >>> f = CnfFormula(3, ((1, -2, 3), (1, 2, 3)))
    >>> f.width
    3
    """

    variable_count: int
    clauses: tuple[tuple[int, ...], ...]

    def __post_init__(self) -> None:

        object.__setattr__(self, 'clauses', tuple(
            tuple(int(literal) for literal in clause)
            for clause in self.clauses))

        logger: DefaultLogger
        if self.variable_count < 1:
            logger = create_function_name_logger()
            logger.error(
                f'Invalid argument: variable_count = {self.variable_count}')

        for number, clause in enumerate(self.clauses, start=1):
            if not clause:
                logger = create_function_name_logger()
                logger.error(f'Clause {number} is empty')
            for literal in clause:
                if (literal == 0) or (abs(literal) > self.variable_count):
                    logger = create_function_name_logger()
                    logger.error(
                        f'Clause {number}: literal {literal} out of range '
                        + f'[1, {self.variable_count}]')

    @property
    def width(self) -> int:
        """Return the length of the longest clause (0 without clauses)."""

        return max((len(clause) for clause in self.clauses), default=0)


def literal_set(literal: int) -> int:
    """Return the 1-based index of the set owned by a literal."""

    return 2*literal - 1 if literal > 0 else -2*literal


def _variable_state(variable: int) -> StateId:
    return 'q0' if variable == 0 else f'qv{variable}'


def _gadget(f: CnfFormula,
            letter_of_choice: Sequence[str],
            letter_of_position: Sequence[str]) -> list[Transition]:

    transitions: list[Transition] = []

    for variable in range(1, f.variable_count + 1):
        for literal, letter in ((variable, letter_of_choice[0]),
                                (-variable, letter_of_choice[1])):
            index: int = literal_set(literal)
            transitions.append(Transition(
                _variable_state(variable - 1), letter,
                Predicate.not_member(index), SetOp.insert(index),
                _variable_state(variable)))

    previous: StateId = _variable_state(f.variable_count)
    for number, clause in enumerate(f.clauses, start=1):
        current: StateId = f'qc{number}'
        for position, literal in enumerate(clause):
            transitions.append(Transition(
                previous, letter_of_position[position],
                Predicate.member(literal_set(literal)), NO_OP, current))
        previous = current

    return transitions


def _states(f: CnfFormula) -> tuple[StateId, ...]:
    return tuple(_variable_state(variable)
                 for variable in range(f.variable_count + 1)) \
        + tuple(f'qc{number}' for number in range(1, len(f.clauses) + 1))


def cnf_to_safa(f: CnfFormula) -> Safa:
    """Build a deterministic acyclic SAFA that is nonempty iff the formula is
    satisfiable.

    Parameters
    ----------
    f : CnfFormula
        The formula.

    Returns
    -------
    Safa
        The chain automaton over the letters a1, ..., a<max(2, width)>, with
        2 * variable_count sets and the last state final.

    Examples
    --------
    >>> from package_safa.safa_reductions import CnfFormula, cnf_to_safa
    >>> a = cnf_to_safa(CnfFormula(3, ((1, -2, 3), (1, 2, 3))))
    >>> len(a.states), a.set_count
    (6, 6)
    """

    alphabet: tuple[str, ...] = tuple(
        f'a{position}' for position in range(1, max(2, f.width) + 1))
    states: tuple[StateId, ...] = _states(f)

    a: Safa = Safa(states=states,
                   alphabet=alphabet,
                   set_count=2 * f.variable_count,
                   initial='q0',
                   finals=frozenset({states[-1]}),
                   transitions=tuple(_gadget(f, alphabet[:2], alphabet)))

    logger: DefaultLogger = create_function_name_logger()
    logger.debug(f'{len(a.states)} states, {a.set_count} sets, '
                 + f'{len(a.transitions)} transitions')

    return a


def cnf_to_membership_instance(f: CnfFormula) -> tuple[Safa, DataWord]:
    """Build a one-letter SAFA and a word it accepts iff the formula is
    satisfiable.

    Parameters
    ----------
    f : CnfFormula
        The formula.

    Returns
    -------
    a : Safa
        The chain of `cnf_to_safa` with every letter replaced by 'a'.
        Transitions that coincide after the replacement are kept once.
    w : DataWord
        The word (a, 1) repeated variable_count + len(clauses) times.
    """

    width: int = max(1, f.width)
    transitions: list[Transition] = _gadget(f, ('a', 'a'), ('a',) * width)

    unique: list[Transition] = list(dict.fromkeys(transitions))
    if len(unique) < len(transitions):
        logger: DefaultLogger = create_function_name_logger()
        logger.warning(
            f'Dropped {len(transitions) - len(unique)} duplicate transitions')

    states: tuple[StateId, ...] = _states(f)
    a: Safa = Safa(states=states,
                   alphabet=('a',),
                   set_count=2 * f.variable_count,
                   initial='q0',
                   finals=frozenset({states[-1]}),
                   transitions=tuple(unique))

    items: tuple[Item, ...] = \
        (('a', 1),) * (f.variable_count + len(f.clauses))
    return a, DataWord(items)


def satisfies(f: CnfFormula,
              assignment: Sequence[bool]) -> bool:
    """Evaluate the formula.

    Parameters
    ----------
    f : CnfFormula
        The formula.
    assignment : Sequence[bool]
        `assignment[v - 1]` is the value of variable v.

    Returns
    -------
    bool
        Whether every clause has a true literal.
    """

    if len(assignment) != f.variable_count:
        logger: DefaultLogger = create_function_name_logger()
        logger.error(f'Expected {f.variable_count} values, got '
                     + f'{len(assignment)}')

    return all(any(assignment[abs(literal)-1] == (literal > 0)
                   for literal in clause) for clause in f.clauses)


def is_satisfiable(f: CnfFormula) -> bool:
    """Decide satisfiability by enumerating the truth table."""

    return any(satisfies(f, assignment)
               for assignment in product((True, False),
                                         repeat=f.variable_count))


def decode_assignment(f: CnfFormula,
                      w: DataWord) -> tuple[bool, ...]:
    """Read the truth assignment chosen by an accepted word of
    `cnf_to_safa(f)`.

    Parameters
    ----------
    f : CnfFormula
        The formula.
    w : DataWord
        A word accepted by `cnf_to_safa(f)`.

    Returns
    -------
    tuple[bool, ...]
        Variable v is true iff the letter at position v - 1 is a1.

    Raises
    ------
    InvalidArgumentError
        If `w` is too short or a variable position holds another letter.
    """

    logger: DefaultLogger
    if len(w) < f.variable_count:
        logger = create_function_name_logger()
        logger.error(f'The word has {len(w)} items, fewer than the '
                     + f'{f.variable_count} variables')

    letters: tuple[str, ...] = w.letters()[:f.variable_count]
    for position, letter in enumerate(letters):
        if letter not in ('a1', 'a2'):
            logger = create_function_name_logger()
            logger.error(f'Unexpected letter {letter!r} at position '
                         + f'{position}')

    return tuple(letter == 'a1' for letter in letters)
