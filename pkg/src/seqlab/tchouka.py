"""Tchoukaillon solitaire and the sequence t(n).

Holes are numbered 0, 1, 2, ...; a board is written hole m first, down to
hole 1 (hole 0, the store, is never shown), so "4201" means holes 4..1
hold 4, 2, 0, 1 stones.
"""
from __future__ import annotations

import math
from functools import lru_cache
from dataclasses import dataclass
from typing import NamedTuple

import numpy as np


@dataclass(frozen=True)
class Board:
    stones: tuple  # stones[h] for h = 0..H; stones[0] is the store

    def __post_init__(self):
        if not self.stones or any(s < 0 for s in self.stones):
            raise ValueError("stone counts must be nonnegative and hole 0 must exist")

    @classmethod
    def from_holes(cls, holes_high_to_low, store: int = 0) -> Board:
        """Board from counts listed hole m first, down to hole 1."""
        return cls((store,) + tuple(reversed(list(holes_high_to_low))))

    @classmethod
    def parse(cls, text: str) -> Board:
        return cls.from_holes(int(c) for c in text)

    def holes(self) -> tuple:
        """Counts for holes 1..H with empty top holes dropped."""
        h = list(self.stones[1:])
        while h and h[-1] == 0:
            h.pop()
        return tuple(h)

    def in_play(self) -> int:
        return sum(self.stones[1:])

    def __str__(self) -> str:
        h = self.holes()
        if not h:
            return "0"
        digits = [str(s) for s in reversed(h)]
        return ("," if any(s > 9 for s in h) else "").join(digits)


class MoveOutcome(NamedTuple):
    board: Board | None  # None when stones would pass hole 0
    continues: bool  # True only if the last stone fell in hole 0


def play_move(b: Board, h: int) -> MoveOutcome:
    """Pick up hole h and sow one stone into each lower hole."""
    if h < 1 or h >= len(b.stones):
        raise ValueError(f"hole {h} is not on the board")
    k = b.stones[h]
    if k == 0:
        raise ValueError(f"hole {h} is empty")
    if k > h:
        return MoveOutcome(None, False)
    s = list(b.stones)
    s[h] = 0
    for j in range(h - k, h):
        s[j] += 1
    return MoveOutcome(Board(tuple(s)), k == h)


def _wins(holes) -> bool:
    """holes[i] = stones in hole i+1.

    Playing hole h adds a stone to every lower hole, so a lower hole j that
    held exactly j stones would then be stuck. The only move that can still
    win is therefore the lowest hole h holding exactly h stones, and a board
    wins exactly when repeating that move empties it.
    """
    s = list(holes)
    left = sum(s)
    while left:
        h = next((i for i, v in enumerate(s) if v == i + 1), None)
        if h is None:
            return False
        s[h] = 0
        for j in range(h):
            s[j] += 1
        left -= 1
    return True


def is_winning(b: Board) -> bool:
    """Some sequence of moves, each ending in hole 0, empties holes 1..H."""
    return _wins(b.holes())


def winning_line(b: Board) -> list[int] | None:
    """Holes to play, in order, that clear the board (None if it cannot be won)."""
    board, line = b, []
    while board.in_play():
        for h in range(1, len(board.stones)):
            if board.stones[h] == h:
                out = play_move(board, h)
                if is_winning(out.board):
                    board = out.board
                    line.append(h)
                    break
        else:
            return None
    return line


def _next_position(holes: list[int]) -> int:
    """Advance holes (index 0 = hole 1) in place by one stone; return i."""
    i = 1
    while i <= len(holes) and holes[i - 1] != 0:
        i += 1
    if i > len(holes):
        holes.append(0)
    holes[i - 1] = i
    for j in range(i - 1):
        holes[j] -= 1
    return i


def winning_positions(max_n: int) -> list[Board]:
    """Winning boards for 0..max_n stones, built backwards: find the first
    empty hole i (from hole 1 up), put i stones there and take one from
    each of holes 1..i-1."""
    if max_n < 0:
        raise ValueError("max_n must be >= 0")
    holes: list[int] = []
    out = [Board.from_holes([])]
    for _ in range(max_n):
        _next_position(holes)
        out.append(Board.from_holes(reversed(holes)))
    return out


def i_sequence(count: int) -> list[int]:
    """The hole index i used at each backward step (1, 2, 1, 3, 1, 4, ...)."""
    if count < 1:
        raise ValueError("count must be >= 1")
    holes: list[int] = []
    return [_next_position(holes) for _ in range(count)]


def t_by_game(max_k: int) -> list[int]:
    """t(1..max_k): first positions of 1, 2, ... in the i sequence."""
    first: dict[int, int] = {}
    holes: list[int] = []
    pos = 0
    while len(first) < max_k or any(k not in first for k in range(1, max_k + 1)):
        pos += 1
        first.setdefault(_next_position(holes), pos)
    return [first[k] for k in range(1, max_k + 1)]


def t_by_rounding(n: int) -> int:
    """Start at n and round up to multiples of n-1, n-2, ..., 1 in turn."""
    if n < 1:
        raise ValueError("n must be >= 1")
    x = n
    for k in range(n - 1, 0, -1):
        x = -(-x // k) * k
    return x


def t_by_sieve(max_k: int) -> list[int]:
    """Column 1 is 1, 2, 3, ...; stage n crosses off the 1st, (n+1)st,
    (2n+1)st, ... survivors. The top of column n is t(n)."""
    if max_k < 1:
        raise ValueError("max_k must be >= 1")
    col = np.arange(1, max_k * max_k + 2, dtype=np.int64)
    tops = [int(col[0])]
    for n in range(2, max_k + 1):
        keep = np.ones(len(col), dtype=bool)
        keep[::n] = False
        col = col[keep]
        if not len(col):
            raise ArithmeticError("sieve column ran out; start column too short")
        tops.append(int(col[0]))
    return tops


def pi_asymptotic_check(n: int) -> float:
    """t(n) pi / n^2, which tends to 1."""
    return t_by_rounding(n) * math.pi / (n * n)


def _boards_with(n: int, holes: int, cap: bool) -> np.ndarray:
    """Every way to put n stones into holes 1..holes, one board per row
    (column 0 = hole 1); with ``cap`` a hole h holds at most h stones."""

    @lru_cache(maxsize=None)
    def fill(h: int, left: int) -> np.ndarray:
        if h == holes - 1:
            if cap and left > holes:
                return np.zeros((0, 1), dtype=np.int16)
            return np.array([[left]], dtype=np.int16)
        parts = []
        for k in range(min(left, h + 1) if cap else left, -1, -1):
            rest = fill(h + 1, left - k)
            if len(rest):
                parts.append(np.hstack([np.full((len(rest), 1), k, dtype=np.int16), rest]))
        return np.vstack(parts) if parts else np.zeros((0, holes - h), dtype=np.int16)

    return fill(0, n)


def _wins_batch(boards: np.ndarray) -> np.ndarray:
    """_wins applied to every row of ``boards`` at once."""
    s = boards.astype(np.int16)
    rows, holes = s.shape
    target = np.arange(1, holes + 1, dtype=np.int16)
    alive = np.ones(rows, dtype=bool)
    for _ in range(int(s.sum(axis=1).max(initial=0))):
        live = alive & (s.sum(axis=1) > 0)
        if not live.any():
            break
        eq = s == target
        has = eq.any(axis=1)
        alive &= has | ~live
        move = live & has
        h = eq.argmax(axis=1)
        r = np.nonzero(move)[0]
        s[r, h[r]] = 0
        s[r] += (np.arange(holes) < h[r, None]).astype(np.int16)
    return alive & (s.sum(axis=1) == 0)


def uniqueness_check(n: int, exhaustive: bool = False) -> tuple[int, Board | None]:
    """Count the winning boards with n stones in holes 1..n and return the
    winner when there is exactly one.

    By default boards with more than h stones in some hole h are skipped:
    such a hole only gains stones until it is played, and playing it would
    carry stones past hole 0. ``exhaustive`` tests every board instead.
    """
    if n == 0:
        return 1, Board((0,))
    boards = _boards_with(n, n, cap=not exhaustive)
    winners = boards[_wins_batch(boards)]
    if len(winners) == 1:
        return 1, Board((0,) + tuple(int(v) for v in winners[0]))
    return len(winners), None
