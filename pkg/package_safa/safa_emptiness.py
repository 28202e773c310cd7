"""A Python module to decide the emptiness of SAFA languages and to extract
witness words.

Notes
-----
Emptiness only depends on which sets are nonempty. A !p guard can always be
satisfied with a datum never used before, and a p guard with any datum that
was inserted into the tested set earlier, so the search runs over pairs
(state, occupancy) where occupancy has one bit per set.
"""

from collections import deque
from dataclasses import dataclass

import numpy as np
from scipy.sparse import csr_array

from package_safa.common_errors import SearchLimitError
from package_safa.common_types import (ArrayBool, ArrayInt, DataValue, Item,
                                       Occupancy, StateId)
from package_safa.default_config import DefaultConfig
from package_safa.default_logger import DefaultLogger
from package_safa.safa_core import (DataWord, Safa, Transition, make_safa,
                                    require_valid)
from package_safa.safa_semantics import accepts
from package_safa.utils_name import create_function_name_logger
from package_safa.utils_nfa import Nfa, nfa_is_empty


@dataclass(frozen=True)
class OccupancyState:
    """Abstract configuration: a state and which sets are nonempty.

    Attributes
    ----------
    state : StateId
        The SAFA state.
    occupied : Occupancy
        Bit i - 1 is set iff h_i is nonempty.
    """

    state: StateId
    occupied: Occupancy

    def fire(self,
             transition: Transition) -> 'OccupancyState | None':
        """Return the abstract successor, or None if the guard is a p guard
        on an empty set."""

        guard = transition.guard
        if guard.is_member and (not self.occupied[guard.set_index-1]):
            return None

        occupied: Occupancy = self.occupied
        if transition.op.set_index is not None:
            position: int = transition.op.set_index - 1
            occupied = occupied[:position] + (True,) + occupied[position+1:]
        return OccupancyState(transition.target, occupied)


def witness_length_bound(a: Safa) -> int:
    """Return |Q| * (|H| + 2) - 1, the length under which every nonempty SAFA
    has an accepted word."""

    return len(a.states) * (a.set_count + 2) - 1


def _initial_occupancy(a: Safa) -> OccupancyState:
    return OccupancyState(a.initial, (False,) * a.set_count)


def _leaving(a: Safa) -> dict[StateId, list[int]]:

    leaving: dict[StateId, list[int]] = {state: [] for state in a.states}
    for index, transition in enumerate(a.transitions):
        leaving[transition.source].append(index)
    return leaving


def reachable_occupancy(a: Safa) -> frozenset[OccupancyState]:
    """Return every abstract configuration reachable from the initial one.

    Parameters
    ----------
    a : Safa
        The automaton.

    Returns
    -------
    frozenset[OccupancyState]
        The reachable (state, occupancy) pairs; at most |Q| * 2^|H| of them.

    Raises
    ------
    InvalidAutomatonError
        If `a` is structurally invalid.
    """

    require_valid(a)

    leaving: dict[StateId, list[int]] = _leaving(a)
    start: OccupancyState = _initial_occupancy(a)
    seen: set[OccupancyState] = {start}
    queue: deque[OccupancyState] = deque([start])

    while queue:
        current: OccupancyState = queue.popleft()
        for index in leaving[current.state]:
            successor: OccupancyState | None = \
                current.fire(a.transitions[index])
            if (successor is not None) and (successor not in seen):
                seen.add(successor)
                queue.append(successor)

    return frozenset(seen)


def _shortest_path(a: Safa) -> list[int] | None:
    """Breadth-first search for the shortest abstract path to a final state,
    ties broken by transition order."""

    start: OccupancyState = _initial_occupancy(a)
    if start.state in a.finals:
        return []

    leaving: dict[StateId, list[int]] = _leaving(a)
    parent: dict[OccupancyState, tuple[OccupancyState, int] | None] = \
        {start: None}
    queue: deque[OccupancyState] = deque([start])

    while queue:
        current: OccupancyState = queue.popleft()
        for index in leaving[current.state]:
            successor: OccupancyState | None = \
                current.fire(a.transitions[index])
            if (successor is None) or (successor in parent):
                continue
            parent[successor] = (current, index)
            if successor.state in a.finals:
                path: list[int] = []
                node: OccupancyState = successor
                link: tuple[OccupancyState, int] | None = parent[node]
                while link is not None:
                    node, fired = link
                    path.append(fired)
                    link = parent[node]
                return path[::-1]
            queue.append(successor)

    return None


def is_empty(a: Safa) -> bool:
    """Decide whether a SAFA accepts no data word.

    Parameters
    ----------
    a : Safa
        The automaton.

    Returns
    -------
    bool
        True iff the language of `a` is empty.

    Raises
    ------
    InvalidAutomatonError
        If `a` is structurally invalid.

    Examples
    --------
    >>> from package_safa.safa_emptiness import is_empty
    >>> from package_safa.safa_fixtures import safa_fixture
    >>> is_empty(safa_fixture('fig3_simple'))
    False
    """

    require_valid(a)

    return _shortest_path(a) is None


def witness(a: Safa) -> DataWord | None:
    """Return a shortest accepted word, or None if the language is empty.

    !p steps consume the data 1, 2, 3, ... in order and a p guard on h_i
    consumes the smallest datum inserted into h_i so far.

    Parameters
    ----------
    a : Safa
        The automaton.

    Returns
    -------
    DataWord | None
        An accepted word of length at most |Q| * (|H| + 2) - 1.

    Raises
    ------
    InvalidAutomatonError
        If `a` is structurally invalid.
    VerificationError
        If the constructed word fails its acceptance or length check.

    Examples
    --------
    >>> from package_safa.safa_emptiness import witness
    >>> from package_safa.safa_fixtures import safa_fixture
    >>> str(witness(safa_fixture('fig3_simple')))
    'a:1 a:1'
    """

    require_valid(a)

    path: list[int] | None = _shortest_path(a)
    if path is None:
        return None

    sets: tuple[frozenset[DataValue], ...] = \
        tuple(frozenset() for _ in range(a.set_count))
    fresh: int = 1
    items: list[Item] = []
    for index in path:
        transition: Transition = a.transitions[index]
        datum: DataValue
        if transition.guard.is_member:
            datum = min(sets[transition.guard.set_index-1])
        else:
            datum, fresh = fresh, fresh + 1
        items.append((transition.letter, datum))
        sets = transition.op.apply(datum, sets)

    word: DataWord = DataWord(tuple(items))
    logger: DefaultLogger
    if len(word) > witness_length_bound(a):
        logger = create_function_name_logger()
        logger.critical(
            f'Witness of length {len(word)} exceeds {witness_length_bound(a)}')
    if not accepts(a, word):
        logger = create_function_name_logger()
        logger.critical(f'Witness is rejected: {word}')

    return word


def bounded_run_oracle(a: Safa) -> bool:
    """Decide emptiness by propagating every abstract run of length up to
    |Q| * (|H| + 2) - 1, one length at a time.

    Parameters
    ----------
    a : Safa
        The automaton.

    Returns
    -------
    bool
        True iff no abstract run within the bound reaches a final state.

    Raises
    ------
    InvalidAutomatonError
        If `a` is structurally invalid.
    SearchLimitError
        If the bound exceeds `DefaultConfig.oracle_max_depth` or the
        abstract space exceeds `DefaultConfig.oracle_max_states`.

    Notes
    -----
    Abstract configuration (state s, occupancy mask m) is numbered
    s * 2^|H| + m, where bit i - 1 of m stands for h_i. The abstract
    transition relation is a sparse boolean matrix and layer n + 1 of
    reachable configurations is obtained from layer n by one product.
    """

    require_valid(a)

    logger: DefaultLogger
    bound: int = witness_length_bound(a)
    if bound > DefaultConfig.oracle_max_depth:
        logger = create_function_name_logger()
        logger.error(
            f'Run-length bound {bound} exceeds oracle_max_depth = '
            + f'{DefaultConfig.oracle_max_depth}', SearchLimitError)

    width: int = 1 << a.set_count
    size: int = len(a.states) * width
    if size > DefaultConfig.oracle_max_states:
        logger = create_function_name_logger()
        logger.error(
            f'Abstract space of {size} configurations exceeds '
            + f'oracle_max_states = {DefaultConfig.oracle_max_states}',
            SearchLimitError)

    number: dict[StateId, int] = \
        {state: index for index, state in enumerate(a.states)}
    rows: list[int] = []
    cols: list[int] = []
    for transition in a.transitions:
        source: int = number[transition.source] * width
        target: int = number[transition.target] * width
        member_bit: int = 0 if not transition.guard.is_member \
            else 1 << (transition.guard.set_index - 1)
        insert_bit: int = 0 if transition.op.set_index is None \
            else 1 << (transition.op.set_index - 1)
        for mask in range(width):
            if mask & member_bit != member_bit:
                continue
            rows.append(source + mask)
            cols.append(target + (mask | insert_bit))

    relation: csr_array = csr_array(
        (np.ones(len(rows), dtype=np.int64),
         (np.array(rows, dtype=np.int_), np.array(cols, dtype=np.int_))),
        shape=(size, size))
    forward: csr_array = relation.T.tocsr()

    final_rows: ArrayBool = np.zeros(size, dtype=np.bool_)
    for state in a.finals:
        final_rows[number[state]*width:(number[state]+1)*width] = True

    layer: ArrayInt = np.zeros(size, dtype=np.int64)
    layer[number[a.initial] * width] = 1
    for _ in range(bound + 1):
        if np.any(layer[final_rows] > 0):
            return False
        layer = (forward @ layer > 0).astype(np.int64)
        if not np.any(layer):
            break

    return True


def singleton_product(a: Safa) -> tuple[Nfa, Nfa, Nfa]:
    """Reduce emptiness of a one-set SAFA to emptiness of an NFA.

    Parameters
    ----------
    a : Safa
        An automaton with exactly one set.

    Returns
    -------
    m1 : Nfa
        The transition graph of `a`, each transition labelled by its
        'letter,guard,op' triple.
    m2 : Nfa
        The two-state monitor: in m0 only !p1 labels are allowed, and an
        ins1 label moves to m1, where every label is allowed. Both states
        are final.
    m3 : Nfa
        The reachable part of the synchronous product of m1 and m2, with
        states named 'q|m'.

    Raises
    ------
    InvalidArgumentError
        If `a` does not have exactly one set.
    InvalidAutomatonError
        If `a` is structurally invalid.

    Examples
    --------
    >>> from package_safa.safa_emptiness import singleton_product
    >>> from package_safa.safa_fixtures import safa_fixture
    >>> _, _, m3 = singleton_product(safa_fixture('fig3_simple'))
    >>> m3.states
    ('q0|m0', 'q0|m1', 'qf|m1')
    """

    logger: DefaultLogger = create_function_name_logger()
    if a.set_count != 1:
        logger.error(f'Expected exactly one set, got {a.set_count}')
    require_valid(a)

    labels: tuple[str, ...] = tuple(
        f'{letter},{guard},{op}' for letter in a.alphabet
        for guard in ('p1', '!p1') for op in ('-', 'ins1'))

    m1: Nfa = Nfa(states=a.states,
                  alphabet=labels,
                  initial=a.initial,
                  finals=a.finals,
                  transitions=tuple(
                      (transition.source, transition.label, transition.target)
                      for transition in a.transitions))

    monitor: list[tuple[str, str, str]] = []
    for letter in a.alphabet:
        monitor.append(('m0', f'{letter},!p1,-', 'm0'))
        monitor.append(('m0', f'{letter},!p1,ins1', 'm1'))
    monitor.extend(('m1', label, 'm1') for label in labels)
    m2: Nfa = Nfa(states=('m0', 'm1'),
                  alphabet=labels,
                  initial='m0',
                  finals=frozenset({'m0', 'm1'}),
                  transitions=tuple(monitor))

    m3: Nfa = _synchronous_product(m1, m2)

    logger.debug(
        f'Product has {len(m3.states)} states for {len(a.states)} states')

    return m1, m2, m3


def _synchronous_product(m1: Nfa,
                         m2: Nfa) -> Nfa:

    def name(pair: tuple[StateId, StateId]) -> StateId:
        return f'{pair[0]}|{pair[1]}'

    start: tuple[StateId, StateId] = (m1.initial, m2.initial)
    order: list[tuple[StateId, StateId]] = [start]
    seen: set[tuple[StateId, StateId]] = {start}
    edges: list[tuple[StateId, str, StateId]] = []

    position: int = 0
    while position < len(order):
        left, right = order[position]
        position += 1
        for source1, label1, target1 in m1.transitions:
            if source1 != left:
                continue
            for source2, label2, target2 in m2.transitions:
                if (source2 != right) or (label2 != label1):
                    continue
                pair: tuple[StateId, StateId] = (target1, target2)
                edges.append((name((left, right)), label1, name(pair)))
                if pair not in seen:
                    seen.add(pair)
                    order.append(pair)

    return Nfa(states=tuple(name(pair) for pair in order),
               alphabet=m1.alphabet,
               initial=name(start),
               finals=frozenset(name(pair) for pair in order
                                if (pair[0] in m1.finals)
                                and (pair[1] in m2.finals)),
               transitions=tuple(edges))


def graph_to_safa(edges: list[tuple[StateId, StateId]],
                  source: StateId,
                  target: StateId) -> Safa:
    """Encode directed-graph reachability as SAFA nonemptiness.

    Parameters
    ----------
    edges : list[tuple[StateId, StateId]]
        The directed edges.
    source : StateId
        The start vertex.
    target : StateId
        The vertex to reach.

    Returns
    -------
    Safa
        A one-set automaton over the letter 'a' with one (a, !p1, -)
        transition per edge; its language is nonempty iff `target` is
        reachable from `source`.
    """

    vertices: list[StateId] = [source]
    for vertex in [target] + [end for edge in edges for end in edge]:
        if vertex not in vertices:
            vertices.append(vertex)

    unique: list[tuple[StateId, StateId]] = list(dict.fromkeys(edges))
    return make_safa(vertices, ['a'], 1, source, [target],
                     [(u, 'a', '!p1', '-', v) for u, v in unique])


def product_is_empty(a: Safa) -> bool:
    """Decide emptiness of a one-set SAFA through its product NFA."""

    _, _, m3 = singleton_product(a)
    return nfa_is_empty(m3)
