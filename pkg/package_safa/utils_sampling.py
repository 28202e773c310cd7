"""A Python module to provide the utilities for generating random automata,
formulas, words and renamings, and for enumerating every small word.

Examples
--------
>>> import numpy as np
>>> from package_safa.safa_core import validate
>>> from package_safa.utils_sampling import random_safa
>>> validate(random_safa(np.random.default_rng(0)))
[]
"""

from itertools import product

import numpy as np

from package_safa.common_types import (ArrayInt, DataValue, Iterator, Letter,
                                       Sequence)
from package_safa.comparison_models import RegisterAutomaton
from package_safa.safa_core import (NO_OP, DataWord, Polarity, Predicate,
                                    Safa, SetOp, Transition)
from package_safa.safa_reductions import CnfFormula
from package_safa.utils_nfa import Nfa


def random_safa(rng: np.random.Generator,
                *,
                max_states: int = 4,
                max_sets: int = 2,
                max_letters: int = 2,
                max_transitions: int = 8) -> Safa:
    """Draw a valid SAFA without duplicate transitions.

    Parameters
    ----------
    rng : np.random.Generator
        The random generator.
    max_states : int, optional, default 4
        The largest number of states.
    max_sets : int, optional, default 2
        The largest number of sets (at least one set is used).
    max_letters : int, optional, default 2
        The largest alphabet size.
    max_transitions : int, optional, default 8
        The largest number of transitions.

    Returns
    -------
    Safa
        States q0, q1, ..., letters a, b, ..., initial q0 and a random set
        of finals.
    """

    state_count: int = int(rng.integers(1, max_states + 1))
    set_count: int = int(rng.integers(1, max_sets + 1))
    letter_count: int = int(rng.integers(1, max_letters + 1))
    transition_count: int = int(rng.integers(0, max_transitions + 1))

    states: tuple[str, ...] = tuple(f'q{index}'
                                    for index in range(state_count))
    alphabet: tuple[Letter, ...] = tuple('abcdefgh'[:letter_count])
    finals: frozenset[str] = frozenset(
        state for state, chosen
        in zip(states, rng.random(state_count) < 0.4) if chosen)

    transitions: dict[Transition, None] = {}
    for _ in range(transition_count):
        polarity: Polarity = Polarity.MEMBER if rng.random() < 0.5 \
            else Polarity.NOT_MEMBER
        insert: int = int(rng.integers(0, set_count + 1))
        transition: Transition = Transition(
            states[int(rng.integers(state_count))],
            alphabet[int(rng.integers(letter_count))],
            Predicate(polarity, int(rng.integers(1, set_count + 1))),
            NO_OP if insert == 0 else SetOp.insert(insert),
            states[int(rng.integers(state_count))])
        transitions[transition] = None

    return Safa(states=states,
                alphabet=alphabet,
                set_count=set_count,
                initial=states[0],
                finals=finals,
                transitions=tuple(transitions))


def random_register(rng: np.random.Generator,
                    *,
                    max_states: int = 4,
                    max_registers: int = 2,
                    max_letters: int = 2,
                    max_transitions: int = 8) -> RegisterAutomaton:
    """Draw a valid register automaton.

    Initial register values are distinct or empty, and each (state, letter)
    pair gets an update register with probability 1/2.
    """

    state_count: int = int(rng.integers(1, max_states + 1))
    register_count: int = int(rng.integers(1, max_registers + 1))
    letter_count: int = int(rng.integers(1, max_letters + 1))
    transition_count: int = int(rng.integers(0, max_transitions + 1))

    states: tuple[str, ...] = tuple(f'q{index}'
                                    for index in range(state_count))
    alphabet: tuple[Letter, ...] = tuple('abcdefgh'[:letter_count])
    finals: frozenset[str] = frozenset(
        state for state, chosen
        in zip(states, rng.random(state_count) < 0.4) if chosen)

    values: ArrayInt = rng.choice(np.arange(1, 10), size=register_count,
                                  replace=False)
    initial_registers: tuple[int | None, ...] = tuple(
        int(value) if empty >= 0.5 else None
        for value, empty in zip(values, rng.random(register_count)))

    update: list[tuple[str, Letter, int]] = [
        (state, letter, int(rng.integers(1, register_count + 1)))
        for state in states for letter in alphabet if rng.random() < 0.5]

    transitions: dict[tuple[str, Letter, int, str], None] = {}
    for _ in range(transition_count):
        transitions[(states[int(rng.integers(state_count))],
                     alphabet[int(rng.integers(letter_count))],
                     int(rng.integers(1, register_count + 1)),
                     states[int(rng.integers(state_count))])] = None

    return RegisterAutomaton(states=states,
                             alphabet=alphabet,
                             register_count=register_count,
                             initial_registers=initial_registers,
                             update=tuple(update),
                             initial=states[0],
                             finals=finals,
                             transitions=tuple(transitions))


def random_nfa(rng: np.random.Generator,
               *,
               max_states: int = 4,
               max_letters: int = 2,
               max_transitions: int = 8) -> Nfa:
    """Draw an NFA over plain letters without duplicate edges."""

    state_count: int = int(rng.integers(1, max_states + 1))
    letter_count: int = int(rng.integers(1, max_letters + 1))
    transition_count: int = int(rng.integers(0, max_transitions + 1))

    states: tuple[str, ...] = tuple(f'n{index}'
                                    for index in range(state_count))
    alphabet: tuple[Letter, ...] = tuple('abcdefgh'[:letter_count])
    edges: dict[tuple[str, Letter, str], None] = {}
    for _ in range(transition_count):
        edges[(states[int(rng.integers(state_count))],
               alphabet[int(rng.integers(letter_count))],
               states[int(rng.integers(state_count))])] = None

    return Nfa(states=states,
               alphabet=alphabet,
               initial=states[0],
               finals=frozenset(
                   state for state, chosen
                   in zip(states, rng.random(state_count) < 0.4) if chosen),
               transitions=tuple(edges))


def random_cnf(rng: np.random.Generator,
               *,
               max_variables: int = 4,
               max_clauses: int = 4,
               max_width: int = 3) -> CnfFormula:
    """Draw a CNF formula with nonempty clauses."""

    variable_count: int = int(rng.integers(1, max_variables + 1))
    clause_count: int = int(rng.integers(1, max_clauses + 1))
    clauses: list[tuple[int, ...]] = []
    for _ in range(clause_count):
        width: int = int(rng.integers(1, max_width + 1))
        variables: ArrayInt = rng.integers(1, variable_count + 1, size=width)
        signs: ArrayInt = rng.choice(np.array([-1, 1]), size=width)
        clauses.append(tuple(int(variable * sign)
                             for variable, sign in zip(variables, signs)))

    return CnfFormula(variable_count, tuple(clauses))


def random_word(rng: np.random.Generator,
                alphabet: Sequence[Letter],
                *,
                max_length: int = 6,
                max_datum: int = 3) -> DataWord:
    """Draw a word over an alphabet with data in 1, ..., max_datum."""

    length: int = int(rng.integers(0, max_length + 1))
    letters: ArrayInt = rng.integers(len(alphabet), size=length)
    data: ArrayInt = rng.integers(1, max_datum + 1, size=length)
    return DataWord(tuple((alphabet[int(letter)], int(datum))
                          for letter, datum in zip(letters, data)))


def random_injection(rng: np.random.Generator,
                     data: Sequence[DataValue],
                     *,
                     span: int = 1000) -> dict[DataValue, DataValue]:
    """Draw an injective map from the given data into 0, ..., span - 1."""

    domain: list[DataValue] = sorted(set(data))
    images: ArrayInt = rng.choice(span, size=len(domain), replace=False)
    return {datum: int(image) for datum, image in zip(domain, images)}


def enumerate_words(alphabet: Sequence[Letter],
                    data: Sequence[DataValue],
                    max_length: int) -> Iterator[DataWord]:
    """Yield every word of length at most `max_length`, shortest first.

    Examples
    --------
    >>> from package_safa.utils_sampling import enumerate_words
    >>> sum(1 for _ in enumerate_words(['a', 'b'], [1, 2], 2))
    21
    """

    items: list[tuple[Letter, DataValue]] = \
        [(letter, datum) for letter in alphabet for datum in data]
    for length in range(max_length + 1):
        for chosen in product(items, repeat=length):
            yield DataWord(chosen)
