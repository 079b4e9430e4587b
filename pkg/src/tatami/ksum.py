"""Constant amortised time generation of the subsets of {1..n} with sum k.

The current subset lives in a linked array ``c[0..capacity]``: ``c[0]`` is
the smallest element, ``c[a]`` is the element after ``a``, and the largest
element links to ``n + 1``.  Every index not in the subset holds ``i + 1``,
so the empty set for any ``n`` is ``[n+1, 2, 3, ..., capacity+1]`` and a run
of consecutive elements is already linked without any writes.  That last
property lets the generator emit "all of {1..m}" in O(1), and lets it work
from either end: it picks the largest *included* element while the target
sum is at most half of the available total, and the largest *excluded*
element otherwise.  Every branch taken yields at least one subset, and
nodes with a single child only occur a bounded distance above the leaves,
so the work per subset is bounded by a constant.
"""

from __future__ import annotations

from typing import Callable, Iterator, Optional

from .instrument import OpCounter, StopTraversal


def tri(m: int) -> int:
    return m * (m + 1) // 2


class C4State:
    """Linked-array subset state serving every n up to ``capacity``."""

    __slots__ = ("capacity", "c", "active_n")

    def __init__(self, capacity: int, c: list[int], active_n: int):
        self.capacity = capacity
        self.c = c
        self.active_n = active_n

    def is_empty_form(self) -> bool:
        # a nonempty subset always has c[0] = smallest element <= active_n
        return self.c[0] == self.active_n + 1

    def subset(self) -> tuple[int, ...]:
        return tuple(SubsetView(self))

    def __repr__(self) -> str:
        return f"C4State(capacity={self.capacity}, active_n={self.active_n}, c={self.c})"


def init_c4(n: int, counter: Optional[OpCounter] = None) -> C4State:
    if n < 0:
        raise ValueError(f"n must be non-negative, got {n}")
    c = list(range(1, n + 2))
    c[0] = n + 1
    if counter is not None:
        counter.preprocessing += n + 1
    return C4State(n, c, n)


def empty_encoding(n: int) -> list[int]:
    c = list(range(1, n + 2))
    c[0] = n + 1
    return c


def shift_active(state: C4State, new_n: int, counter: Optional[OpCounter] = None) -> C4State:
    """Move an empty-set state to ``new_n = active_n +/- 1`` in O(1).

    Cells ``1..capacity`` already hold ``i + 1`` in the empty state whatever
    ``active_n`` is, so only the head ``c[0]`` changes.
    """
    if abs(new_n - state.active_n) != 1:
        raise ValueError(f"can only shift by one, from {state.active_n} to {new_n}")
    if new_n < 0 or new_n > state.capacity:
        raise ValueError(f"n={new_n} is outside the capacity {state.capacity}")
    if not state.is_empty_form():
        raise ValueError("state is in the middle of a traversal")
    state.c[0] = new_n + 1
    state.active_n = new_n
    if counter is not None:
        counter.preprocessing += 1
    return state


def move_active(state: C4State, new_n: int, counter: Optional[OpCounter] = None) -> C4State:
    """Shift one step at a time until ``active_n == new_n``."""
    step = 1 if new_n > state.active_n else -1
    while state.active_n != new_n:
        shift_active(state, state.active_n + step, counter)
    return state


class SubsetView:
    """Read-only view of the subset currently encoded in a state.

    Nothing is copied until the view is iterated, so it is only valid
    during the visit callback that received it.
    """

    __slots__ = ("_state",)

    def __init__(self, state: C4State):
        self._state = state

    def __iter__(self) -> Iterator[int]:
        c, top = self._state.c, self._state.active_n
        x = c[0]
        while x <= top:
            yield x
            x = c[x]

    def elements(self) -> tuple[int, ...]:
        return tuple(self)

    def __repr__(self) -> str:
        return f"SubsetView({self.elements()})"


def _reset(state: C4State, counter: Optional[OpCounter]) -> None:
    c = state.c
    for i in range(1, state.active_n + 1):
        c[i] = i + 1
    c[0] = state.active_n + 1
    if counter is not None:
        counter.preprocessing += state.active_n + 1


def gen_ksum(
    state: C4State,
    n: int,
    k: int,
    visit: Optional[Callable[[SubsetView], None]] = None,
    counter: Optional[OpCounter] = None,
    limit: Optional[int] = None,
) -> int:
    """Visit every subset of {1..n} summing to ``k``; return how many.

    ``state`` must be an empty-set state with ``active_n == n`` and is left
    in that form on return.  Out-of-range ``k`` yields 0 without visiting.
    With ``limit`` the traversal stops after that many subsets.  If
    ``visit`` raises :class:`StopTraversal` the state is reset and the
    exception propagates.
    """
    if state.active_n != n:
        raise ValueError(f"state serves n={state.active_n}, not n={n}")
    if not state.is_empty_form():
        raise ValueError("state is in the middle of a traversal")
    if k < 0 or k > tri(n):
        if counter is not None:
            counter.steps += 1
        return 0

    c = state.c
    view = SubsetView(state)
    steps = 0
    produced = 0

    def emit():
        nonlocal produced
        produced += 1
        if visit is not None:
            visit(view)
        if produced == limit:
            raise _Limit

    def rec(m: int, s: int, nxt: int):
        # Subsets of {1..m} summing to s; their largest element links to nxt.
        # Cells 1..m are in the empty form on entry and on exit.
        nonlocal steps
        steps += 1
        if s == 0:
            c[0] = nxt
            emit()
            return
        t = tri(m)
        if s == t:
            c[0] = 1
            c[m] = nxt
            emit()
            c[m] = m + 1
            return
        if 2 * s <= t:
            b = min(m, s)
            while b >= 1 and s - b <= tri(b - 1):
                steps += 1
                c[b] = nxt
                rec(b - 1, s - b, b)
                c[b] = b + 1
                b -= 1
        else:
            d = t - s
            x = min(m, d)
            while x >= 1 and d - x <= tri(x - 1):
                steps += 1
                if x < m:
                    c[m] = nxt
                    rec(x - 1, tri(x - 1) - (d - x), x + 1)
                    c[m] = m + 1
                else:
                    rec(x - 1, tri(x - 1) - (d - x), nxt)
                x -= 1

    try:
        rec(n, k, n + 1)
        c[0] = n + 1
    except _Limit:
        _reset(state, counter)
    except StopTraversal:
        _reset(state, counter)
        raise
    finally:
        if counter is not None:
            counter.steps += steps
            counter.outputs += produced
    return produced


class _Limit(Exception):
    pass


def iter_ksum(n: int, k: int) -> Iterator[tuple[int, ...]]:
    """Convenience: the subsets of {1..n} summing to k as tuples, in generator order."""
    out: list[tuple[int, ...]] = []
    gen_ksum(init_c4(n), n, k, lambda v: out.append(v.elements()))
    return iter(out)


_DISTRIBUTIONS: list[tuple[int, ...]] = [(1,)]


def ksum_distribution(n: int) -> tuple[int, ...]:
    """``|Sd(n, k)|`` for k = 0..n(n+1)/2, the coefficients of prod (1 + x^j)."""
    if n < 0:
        raise ValueError(f"n must be non-negative, got {n}")
    while len(_DISTRIBUTIONS) <= n:
        j = len(_DISTRIBUTIONS)
        prev = _DISTRIBUTIONS[-1]
        cur = list(prev) + [0] * j
        for s in range(j, len(cur)):
            cur[s] += prev[s - j]
        _DISTRIBUTIONS.append(tuple(cur))
    return _DISTRIBUTIONS[n]


def count_ksum(n: int, k: int) -> int:
    if n < 0:
        raise ValueError(f"n must be non-negative, got {n}")
    if k < 0 or k > tri(n):
        return 0
    return ksum_distribution(n)[k]


def format_subset(elements) -> str:
    items = list(elements)
    return " ".join(map(str, items)) if items else "-"
