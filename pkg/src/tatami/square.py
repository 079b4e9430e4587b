"""Tatami coverings of the n x n grid with n monominoes, by vertical-domino count.

The coverings are described symbolically by sets of *flipped diagonal*
sizes.  Start from the all-horizontal covering of an even square, whose
monominoes sit at both ends of every odd row.  The boundary monomino of an
odd row ``r`` (``3 <= r <= n-1``) can slide diagonally to the top edge,
turning ``r - 1`` horizontal dominoes vertical, or to the bottom edge,
turning ``n - r``.  Every size from 1 to ``n - 2`` is therefore realised by
exactly one slide from each edge: even sizes go up, odd sizes go down.

Diagonals running the same way (both ``/`` or both ``\\``) never interfere.
A ``/`` diagonal and a ``\\`` diagonal collide exactly when their sizes sum
to more than ``n - 2``.  A covering is thus a pair of size sets, one per
slope, with ``max(first) + max(second) <= n - 2``.  Either both maxima are
at most ``(n-2)/2`` (a :class:`Balanced` element) or exactly one slope holds
a larger diagonal ``n - i - 1`` and the other is confined to ``{1..i-1}``
(a :class:`Dominant` element, ``side`` naming the slope of the large one).

Slope convention used by :func:`render_square`: ``Side.LEFT`` diagonals run
``/`` (slides up from the left edge and down from the right edge) and
``Side.RIGHT`` diagonals run ``\\`` (slides down from the left edge and up
from the right edge).
"""

from __future__ import annotations

import enum
import re
from dataclasses import dataclass
from typing import Callable, Optional, Union

from .grid import Covering, Kind, Tile
from .instrument import OpCounter, StopTraversal
from .ksum import C4State, count_ksum, gen_ksum, init_c4, move_active, tri


class Side(enum.Enum):
    LEFT = "L"
    RIGHT = "R"

    @property
    def other(self) -> "Side":
        return Side.RIGHT if self is Side.LEFT else Side.LEFT


@dataclass(frozen=True)
class Dominant:
    side: Side
    i: int
    largest: int
    companions: tuple[int, ...]
    opposite: tuple[int, ...]

    def total(self) -> int:
        return self.largest + sum(self.companions) + sum(self.opposite)


@dataclass(frozen=True)
class Balanced:
    left_set: tuple[int, ...]
    right_set: tuple[int, ...]

    def total(self) -> int:
        return sum(self.left_set) + sum(self.right_set)


VHElement = Union[Dominant, Balanced]


def _check_set(values, top: int, what: str):
    if list(values) != sorted(set(values)):
        raise ValueError(f"{what} must be strictly ascending: {values}")
    if values and (values[0] < 1 or values[-1] > top):
        raise ValueError(f"{what} {values} must lie in 1..{top}")


def check_element(e: VHElement, n: int) -> int:
    """Raise ``ValueError`` unless ``e`` belongs to VH(n, k) for some k; return k."""
    if n < 2:
        raise ValueError(f"n must be at least 2, got {n}")
    if isinstance(e, Dominant):
        if not 1 <= e.i <= (n - 1) // 2:
            raise ValueError(f"i={e.i} outside 1..{(n - 1) // 2}")
        if e.largest != n - e.i - 1:
            raise ValueError(f"largest diagonal must be n-i-1={n - e.i - 1}, got {e.largest}")
        _check_set(e.companions, n - e.i - 2, "companions")
        _check_set(e.opposite, e.i - 1, "opposite")
    elif isinstance(e, Balanced):
        _check_set(e.left_set, (n - 2) // 2, "left set")
        _check_set(e.right_set, (n - 2) // 2, "right set")
    else:
        raise TypeError(f"not a VH element: {e!r}")
    return e.total()


def diagonal_sets(e: VHElement) -> tuple[tuple[int, ...], tuple[int, ...]]:
    """Sizes of the ``/`` (left) and ``\\`` (right) diagonals of an element."""
    if isinstance(e, Balanced):
        return e.left_set, e.right_set
    big = tuple(sorted(e.companions + (e.largest,)))
    return (big, e.opposite) if e.side is Side.LEFT else (e.opposite, big)


# -- generation ------------------------------------------------------------


def _dominant_range(n: int, k: int, i: int) -> Optional[tuple[int, int, int]]:
    # k1 splits with both factors nonempty, or None
    rest = k - (n - i - 1)
    lo, hi = max(0, rest - tri(i - 1)), min(rest, tri(n - i - 2))
    if rest < 0 or lo > hi:
        return None
    return rest, lo, hi


def gen_vh(
    n: int,
    k: int,
    visit: Optional[Callable[[VHElement], None]] = None,
    counter: Optional[OpCounter] = None,
    limit: Optional[int] = None,
) -> int:
    """Visit every element of VH(n, k) once and return the count.

    Order: dominant elements by ``i`` ascending, then by companion sum
    ascending; within one ``(i, k1)`` block all ``Side.LEFT`` elements
    precede all ``Side.RIGHT`` ones.  Balanced elements follow, by
    left-set sum ascending.  Subset order within a block is the order of
    :func:`gen_ksum`.  ``limit`` stops the traversal after that many
    elements.

    Two linked-array states serve the two factors of each product.  They
    are set up once in O(n); between consecutive ``i`` their active sizes
    move by one in opposite directions, which costs O(1) per step.
    """
    if n < 2:
        raise ValueError(f"n must be at least 2, got {n}")
    m = (n - 2) // 2
    big = init_c4(max(n - 3, 0), counter)  # serves n-i-2, then m
    small = init_c4(m, counter)  # serves i-1, then m
    move_active(small, 0, counter)
    produced = 0

    def emit(e_factory, a, b):
        nonlocal produced
        produced += 1
        if visit is not None:
            visit(e_factory(a, b))
        if produced == limit:
            raise StopTraversal

    try:
        for i in range(1, (n - 1) // 2 + 1):
            move_active(big, n - i - 2, counter)
            move_active(small, i - 1, counter)
            if counter is not None:
                counter.preprocessing += 1
            span = _dominant_range(n, k, i)
            if span is None:
                continue
            rest, lo, hi = span
            largest = n - i - 1
            for k1 in range(lo, hi + 1):
                for side in (Side.LEFT, Side.RIGHT):
                    make = lambda a, b, side=side: Dominant(side, i, largest, a, b)
                    _product(big, n - i - 2, k1, small, i - 1, rest - k1, counter,
                             lambda a, b, make=make: emit(make, a, b), visit is not None)

        move_active(big, m, counter)
        move_active(small, m, counter)
        for k1 in range(max(0, k - tri(m)), min(k, tri(m)) + 1):
            _product(big, m, k1, small, m, k - k1, counter,
                     lambda a, b: emit(Balanced, a, b), visit is not None)
    except StopTraversal:
        if produced != limit:
            raise
    if counter is not None:
        counter.outputs += produced
    return produced


def _product(
    outer: C4State, n1: int, k1: int,
    inner: C4State, n2: int, k2: int,
    counter: Optional[OpCounter],
    emit: Callable[[tuple, tuple], None],
    materialize: bool,
) -> None:
    """Enumerate Sd(n1, k1) x Sd(n2, k2), outer factor major."""
    # The subset generators tally their own visits as outputs; here only
    # the pairs count, and gen_vh adds those itself.
    local = OpCounter() if counter is not None else None
    if local is not None:
        local.steps += 1

    def on_outer(view):
        first = view.elements() if materialize else ()
        gen_ksum(inner, n2, k2, lambda v: emit(first, v.elements() if materialize else ()), local)

    try:
        gen_ksum(outer, n1, k1, on_outer, local)
    finally:
        if counter is not None:
            counter.steps += local.steps
            counter.preprocessing += local.preprocessing


def count_vd(n: int, k: int) -> int:
    """``|VH(n, k)|`` from the subset counts alone.

    Equals the number of coverings with k vertical dominoes for even n and
    with k horizontal dominoes for odd n.
    """
    if n < 2:
        raise ValueError(f"n must be at least 2, got {n}")
    total = 0
    for i in range(1, (n - 1) // 2 + 1):
        span = _dominant_range(n, k, i)
        if span is None:
            continue
        rest, lo, hi = span
        total += 2 * sum(count_ksum(n - i - 2, k1) * count_ksum(i - 1, rest - k1) for k1 in range(lo, hi + 1))
    m = (n - 2) // 2
    total += sum(count_ksum(m, k1) * count_ksum(m, k - k1) for k1 in range(max(0, k - tri(m)), min(k, tri(m)) + 1))
    return total


def max_k(n: int) -> int:
    """Largest k with VH(n, k) nonempty."""
    return tri(n - 2)


# -- tiles -------------------------------------------------------------------


def render_square(e: VHElement, n: int) -> Covering:
    """Realise an element of VH(n, k) as a tiling of the n x n grid (n even).

    The result has monominoes at (1, 1) and (1, n), n monominoes in all,
    and k vertical dominoes, one per unit of diagonal size.
    """
    if n % 2:
        raise ValueError(f"tile rendering is only defined for even n, got {n}")
    check_element(e, n)
    slash, backslash = diagonal_sets(e)
    board = [[None] * (n + 1) for _ in range(n + 1)]
    tiles: list[Tile] = []

    def put(kind: Kind, r: int, c: int):
        t = Tile(r, c, kind)
        for rr, cc in t.cells():
            if board[rr][cc] is not None:
                raise AssertionError(f"diagonals of {e!r} collide at ({rr}, {cc})")
            board[rr][cc] = t
        tiles.append(t)

    moved = set()
    for sizes, up_from_left in ((slash, True), (backslash, False)):
        for s in sizes:
            up = s % 2 == 0
            from_left = up == up_from_left
            col, step = (1, 1) if from_left else (n, -1)
            if up:
                row = s + 1
                for j in range(s):
                    put(Kind.VDOMINO, row - 1 - j, col + step * j)
                put(Kind.MONOMINO, 1, col + step * s)
            else:
                row = n - s
                for j in range(s):
                    put(Kind.VDOMINO, row + j, col + step * j)
                put(Kind.MONOMINO, n, col + step * s)
            moved.add((row, col))

    for r in range(1, n, 2):
        for c in (1, n):
            if (r, c) not in moved:
                put(Kind.MONOMINO, r, c)
    for r in range(1, n + 1):
        c = 1
        while c <= n:
            if board[r][c] is None:
                put(Kind.HDOMINO, r, c)
                c += 2
            else:
                c += 1
    return Covering(n, n, tiles)


# -- text form ---------------------------------------------------------------


def _group(values, star: bool = False) -> str:
    body = ",".join(map(str, values))
    return "{" + body + ("*" if star else "") + "}"


def serialize_vh(e: VHElement) -> str:
    """Brace-group notation: ``{6*}{1}{}`` (left), ``{}{6*}{1}`` (right), ``B{1}{1,2,3}``."""
    if isinstance(e, Balanced):
        return "B" + _group(e.left_set) + _group(e.right_set)
    head = _group((e.largest,), star=True)
    if e.side is Side.LEFT:
        return head + _group(e.companions) + _group(e.opposite)
    return _group(e.opposite) + head + _group(e.companions)


_VH_RE = re.compile(r"^(B?)\{([^{}]*)\}\{([^{}]*)\}(?:\{([^{}]*)\})?$")


def _parse_set(text: str) -> tuple[int, ...]:
    text = text.strip()
    if not text:
        return ()
    return tuple(int(part) for part in text.split(","))


def parse_vh(text: str, n: int) -> VHElement:
    m = _VH_RE.match(text.strip())
    if m is None:
        raise ValueError(f"not a VH element: {text!r}")
    balanced, g1, g2, g3 = m.groups()
    try:
        if balanced:
            if g3 is not None:
                raise ValueError(f"balanced elements have two groups: {text!r}")
            e: VHElement = Balanced(_parse_set(g1), _parse_set(g2))
        else:
            if g3 is None:
                raise ValueError(f"dominant elements have three groups: {text!r}")
            if g1.endswith("*") and not g2.endswith("*"):
                side, largest, comp, opp = Side.LEFT, g1[:-1], g2, g3
            elif g2.endswith("*") and not g1.endswith("*"):
                side, largest, comp, opp = Side.RIGHT, g2[:-1], g3, g1
            else:
                raise ValueError(f"exactly one of the first two groups must carry '*': {text!r}")
            size = int(largest)
            e = Dominant(side, n - size - 1, size, _parse_set(comp), _parse_set(opp))
    except ValueError as exc:
        raise ValueError(f"bad VH element {text!r}: {exc}") from None
    check_element(e, n)
    return e
