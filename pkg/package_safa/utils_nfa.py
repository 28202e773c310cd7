"""A Python module to provide the utilities for plain nondeterministic finite
automata (NFA): the type, structural validation, emptiness by graph
reachability and membership.

Examples
--------
>>> from package_safa.utils_nfa import Nfa, nfa_is_empty
>>> n = Nfa(('s', 't'), ('a',), 's', frozenset({'t'}), (('s', 'a', 't'),))
>>> nfa_is_empty(n)
False
>>> n.accepts(('a',)), n.accepts(('a', 'a'))
(True, False)
"""

from collections import Counter
from dataclasses import dataclass
from functools import cached_property

import numpy as np
from scipy.sparse import csr_array
from scipy.sparse.csgraph import breadth_first_order

from package_safa.common_types import ArrayInt, Iterable, Letter, StateId
from package_safa.default_logger import DefaultLogger
from package_safa.utils_name import create_function_name_logger


@dataclass(frozen=True)
class Nfa:
    """Nondeterministic finite automaton over string labels.

    Attributes
    ----------
    states : tuple[StateId, ...]
        The states.
    alphabet : tuple[str, ...]
        The labels. A label may be a plain letter or a serialized SAFA
        transition triple.
    initial : StateId
        The initial state.
    finals : frozenset[StateId]
        The final states.
    transitions : tuple[tuple[StateId, str, StateId], ...]
        The (source, label, target) edges.
    """

    states: tuple[StateId, ...]
    alphabet: tuple[str, ...]
    initial: StateId
    finals: frozenset[StateId]
    transitions: tuple[tuple[StateId, str, StateId], ...]

    def __post_init__(self) -> None:

        object.__setattr__(self, 'states', tuple(self.states))
        object.__setattr__(self, 'alphabet', tuple(self.alphabet))
        object.__setattr__(self, 'finals', frozenset(self.finals))
        object.__setattr__(self, 'transitions', tuple(
            (str(source), str(label), str(target))
            for source, label, target in self.transitions))

    @cached_property
    def __index(self) -> dict[StateId, int]:
        return {state: index for index, state in enumerate(self.states)}

    def state_index(self,
                    state: StateId) -> int:
        """Return the position of a state in `states`."""

        return self.__index[state]

    def accepts(self,
                letters: Iterable[Letter]) -> bool:
        """Decide membership of a label sequence by subset simulation.

        Parameters
        ----------
        letters : Iterable[Letter]
            The labels read.

        Returns
        -------
        bool
            Whether some path reading `letters` ends in a final state.
        """

        current: set[StateId] = {self.initial}
        for letter in letters:
            current = {target for source, label, target in self.transitions
                       if (source in current) and (label == letter)}
            if not current:
                return False

        return not current.isdisjoint(self.finals)


def validate_nfa(n: Nfa) -> list[str]:
    """Check the structural invariants of an NFA.

    Returns
    -------
    problems : list[str]
        One message per violation; empty iff the NFA is well formed.
    """

    problems: list[str] = []

    for state, count in Counter(n.states).items():
        if count > 1:
            problems.append(f'states: duplicate state {state}')
    for label, count in Counter(n.alphabet).items():
        if count > 1:
            problems.append(f'alphabet: duplicate letter {label}')

    state_set: frozenset[StateId] = frozenset(n.states)
    label_set: frozenset[str] = frozenset(n.alphabet)
    if n.initial not in state_set:
        problems.append(f'initial: undeclared state {n.initial}')
    for state in sorted(n.finals - state_set):
        problems.append(f'final: undeclared state {state}')

    for index, (source, label, target) in enumerate(n.transitions):
        location: str = f'transition {index} ({source} {label} {target})'
        if source not in state_set:
            problems.append(f'{location}: undeclared source {source}')
        if label not in label_set:
            problems.append(f'{location}: undeclared letter {label}')
        if target not in state_set:
            problems.append(f'{location}: undeclared target {target}')

    return problems


def require_valid_nfa(n: Nfa) -> None:
    """Raise if the NFA is structurally invalid.

    Raises
    ------
    InvalidArgumentError
        If `validate_nfa(n)` is not empty.
    """

    problems: list[str] = validate_nfa(n)
    if problems:
        logger: DefaultLogger = create_function_name_logger()
        logger.error('Invalid NFA: ' + '; '.join(problems))


def reachable_states(n: Nfa) -> frozenset[StateId]:
    """Return the states reachable from the initial state.

    Parameters
    ----------
    n : Nfa
        A well-formed NFA.

    Returns
    -------
    frozenset[StateId]
        The reachable states, the initial one included.
    """

    size: int = len(n.states)
    sources: ArrayInt = np.array(
        [n.state_index(source) for source, _, _ in n.transitions],
        dtype=np.int_)
    targets: ArrayInt = np.array(
        [n.state_index(target) for _, _, target in n.transitions],
        dtype=np.int_)

    adjacency: csr_array = csr_array(
        (np.ones(len(sources), dtype=np.int8), (sources, targets)),
        shape=(size, size))
    order: ArrayInt = breadth_first_order(
        adjacency, n.state_index(n.initial), directed=True,
        return_predecessors=False)

    return frozenset(n.states[index] for index in order)


def nfa_is_empty(n: Nfa) -> bool:
    """Decide whether an NFA accepts no word.

    Parameters
    ----------
    n : Nfa
        The NFA.

    Returns
    -------
    bool
        True iff no final state is reachable from the initial state.

    Raises
    ------
    InvalidArgumentError
        If `n` is structurally invalid.
    """

    require_valid_nfa(n)

    return reachable_states(n).isdisjoint(n.finals)
