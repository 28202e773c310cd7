"""A Python module to combine SAFA languages: union, concatenation,
completion and complement of deterministic automata, and lifting of a
regular language.

Notes
-----
The sets of the second operand of `union` and `concat` are shifted past the
sets of the first operand, so the two automata never share storage. Operand
states are prefixed with 'L.' and 'R.'.
"""

from package_safa.common_types import Final, Letter, StateId
from package_safa.default_logger import DefaultLogger
from package_safa.safa_core import (NO_OP, Predicate, Safa, SetOp, Transition,
                                    is_deterministic, require_valid)
from package_safa.utils_name import create_function_name_logger
from package_safa.utils_nfa import Nfa, require_valid_nfa

LEFT_PREFIX: Final[str] = 'L.'
RIGHT_PREFIX: Final[str] = 'R.'


def _fresh_state(base: StateId,
                 taken: tuple[StateId, ...]) -> StateId:

    name: StateId = base
    suffix: int = 0
    while name in taken:
        suffix += 1
        name = f'{base}_{suffix}'
    return name


def _relocate(a: Safa,
              prefix: str,
              shift: int) -> tuple[Transition, ...]:
    """Return the transitions with renamed states and shifted set indices.
    """

    relocated: list[Transition] = []
    for transition in a.transitions:
        op: SetOp = transition.op if transition.op.set_index is None \
            else SetOp.insert(transition.op.set_index + shift)
        relocated.append(Transition(
            prefix + transition.source,
            transition.letter,
            Predicate(transition.guard.polarity,
                      transition.guard.set_index + shift),
            op,
            prefix + transition.target))
    return tuple(relocated)


def _require_same_alphabet(a: Safa,
                           b: Safa) -> None:

    if set(a.alphabet) != set(b.alphabet):
        logger: DefaultLogger = create_function_name_logger()
        logger.error(
            f'Alphabet mismatch: {sorted(a.alphabet)} != {sorted(b.alphabet)}')


def union(a: Safa,
          b: Safa) -> Safa:
    """Build a SAFA accepting L(a) | L(b).

    Parameters
    ----------
    a : Safa
        The first automaton.
    b : Safa
        The second automaton, over the same alphabet.

    Returns
    -------
    Safa
        The automaton with a fresh initial state that copies every
        transition leaving either initial state. It uses
        `a.set_count + b.set_count` sets.

    Raises
    ------
    InvalidArgumentError
        If the alphabets differ.
    InvalidAutomatonError
        If an operand is structurally invalid.
    """

    require_valid(a)
    require_valid(b)
    _require_same_alphabet(a, b)

    left: tuple[Transition, ...] = _relocate(a, LEFT_PREFIX, 0)
    right: tuple[Transition, ...] = _relocate(b, RIGHT_PREFIX, a.set_count)
    states: tuple[StateId, ...] = \
        tuple(LEFT_PREFIX + state for state in a.states) \
        + tuple(RIGHT_PREFIX + state for state in b.states)
    start: StateId = _fresh_state('q0', states)

    copied: list[Transition] = [
        Transition(start, transition.letter, transition.guard,
                   transition.op, transition.target)
        for transition in left + right
        if transition.source in (LEFT_PREFIX + a.initial,
                                 RIGHT_PREFIX + b.initial)]

    finals: set[StateId] = {LEFT_PREFIX + state for state in a.finals} \
        | {RIGHT_PREFIX + state for state in b.finals}
    if (a.initial in a.finals) or (b.initial in b.finals):
        finals.add(start)

    return Safa(states=(start,) + states,
                alphabet=a.alphabet,
                set_count=a.set_count + b.set_count,
                initial=start,
                finals=frozenset(finals),
                transitions=tuple(dict.fromkeys(
                    left + right + tuple(copied))))


def concat(a: Safa,
           b: Safa) -> Safa:
    """Build a SAFA accepting L(a) . L(b).

    Every final state of `a` receives a copy of each transition leaving the
    initial state of `b`. The finals of `a` stay final only when `b` accepts
    the empty word.

    Parameters
    ----------
    a : Safa
        The first automaton.
    b : Safa
        The second automaton, over the same alphabet.

    Returns
    -------
    Safa
        The concatenation automaton, with `a.set_count + b.set_count` sets.

    Raises
    ------
    InvalidArgumentError
        If the alphabets differ.
    InvalidAutomatonError
        If an operand is structurally invalid.
    """

    require_valid(a)
    require_valid(b)
    _require_same_alphabet(a, b)

    left: tuple[Transition, ...] = _relocate(a, LEFT_PREFIX, 0)
    right: tuple[Transition, ...] = _relocate(b, RIGHT_PREFIX, a.set_count)
    second_start: StateId = RIGHT_PREFIX + b.initial

    bridges: list[Transition] = [
        Transition(LEFT_PREFIX + final, transition.letter, transition.guard,
                   transition.op, transition.target)
        for final in sorted(a.finals)
        for transition in right if transition.source == second_start]

    finals: set[StateId] = {RIGHT_PREFIX + state for state in b.finals}
    if b.initial in b.finals:
        finals |= {LEFT_PREFIX + state for state in a.finals}

    return Safa(states=tuple(LEFT_PREFIX + state for state in a.states)
                + tuple(RIGHT_PREFIX + state for state in b.states),
                alphabet=a.alphabet,
                set_count=a.set_count + b.set_count,
                initial=LEFT_PREFIX + a.initial,
                finals=frozenset(finals),
                transitions=tuple(dict.fromkeys(
                    left + right + tuple(bridges))))


def complete(a: Safa) -> Safa:
    """Make a deterministic SAFA total without changing its language.

    A non-final sink state is added. A (state, letter) pair without
    transitions gets (!p1, -) and (p1, -) to the sink; a pair with a single
    transition gets the opposite guard on the same set to the sink. The sink
    loops on itself the same way.

    Parameters
    ----------
    a : Safa
        A deterministic automaton.

    Returns
    -------
    Safa
        A deterministic automaton in which every configuration has exactly
        one successor on every item. It has at least one set.

    Raises
    ------
    InvalidArgumentError
        If `a` is not deterministic.
    """

    if not is_deterministic(a):
        logger: DefaultLogger = create_function_name_logger()
        logger.error('The automaton is not deterministic')

    sink: StateId = _fresh_state('sink', a.states)
    states: tuple[StateId, ...] = a.states + (sink,)
    added: list[Transition] = []

    for state in states:
        for letter in a.alphabet:
            added.extend(_completing(a, state, letter, sink))

    return Safa(states=states,
                alphabet=a.alphabet,
                set_count=max(1, a.set_count),
                initial=a.initial,
                finals=a.finals,
                transitions=a.transitions + tuple(added))


def _completing(a: Safa,
                state: StateId,
                letter: Letter,
                sink: StateId) -> list[Transition]:

    leaving: tuple[tuple[int, Transition], ...] = a.outgoing(state, letter)
    if not leaving:
        return [Transition(state, letter, Predicate.not_member(1), NO_OP,
                           sink),
                Transition(state, letter, Predicate.member(1), NO_OP, sink)]
    if len(leaving) == 1:
        return [Transition(state, letter, leaving[0][1].guard.opposite(),
                           NO_OP, sink)]
    return []


def complement(a: Safa) -> Safa:
    """Build a deterministic SAFA accepting the complement of L(a).

    Parameters
    ----------
    a : Safa
        A deterministic automaton.

    Returns
    -------
    Safa
        `complete(a)` with final and non-final states swapped.

    Raises
    ------
    InvalidArgumentError
        If `a` is not deterministic.

    Examples
    --------
    >>> from package_safa.safa_closure import complement
    >>> from package_safa.safa_core import DataWord
    >>> from package_safa.safa_fixtures import safa_fixture
    >>> from package_safa.safa_semantics import accepts
    >>> w = DataWord((('a', 1), ('a', 1)))
    >>> accepts(complement(safa_fixture('fig1')), w)
    True
    """

    total: Safa = complete(a)

    return Safa(states=total.states,
                alphabet=total.alphabet,
                set_count=total.set_count,
                initial=total.initial,
                finals=frozenset(total.states) - total.finals,
                transitions=total.transitions)


def lift_regular(n: Nfa) -> Safa:
    """Turn an NFA over plain letters into a SAFA ignoring the data.

    Parameters
    ----------
    n : Nfa
        The NFA.

    Returns
    -------
    Safa
        The same graph with every edge labelled (letter, !p1, -) and one
        set that is never written, so a word is accepted iff its letter
        projection is accepted by `n`.

    Raises
    ------
    InvalidArgumentError
        If `n` is structurally invalid.
    """

    require_valid_nfa(n)

    return Safa(states=n.states,
                alphabet=n.alphabet,
                set_count=1,
                initial=n.initial,
                finals=n.finals,
                transitions=tuple(dict.fromkeys(
                    Transition(source, letter, Predicate.not_member(1),
                               NO_OP, target)
                    for source, letter, target in n.transitions)))
