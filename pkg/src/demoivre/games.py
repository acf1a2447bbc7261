"""Deck-matching odds and the knight's tour on the standard board.

A tour is an ordered cover of all 64 squares by knight moves (open: the
last square need not attack the first).  The solver runs a depth-first
search ordered by Warnsdorff's degree heuristic with lowest-(file, rank)
tie-breaking, so results are deterministic and the search is complete.
"""

from __future__ import annotations

import math
from dataclasses import dataclass

from .exactnum import Odds

BOARD = 8
KNIGHT_MOVES = ((-2, -1), (-2, 1), (-1, -2), (-1, 2), (1, -2), (1, 2), (2, -1), (2, 1))


def deck_match_odds(deck_size: int) -> Odds:
    """Odds against two freshly shuffled identical decks matching exactly."""
    if deck_size < 1:
        raise ValueError("deck must have at least one card")
    return Odds(math.factorial(deck_size) - 1, 1)


@dataclass(frozen=True)
class Tour:
    squares: tuple

    def __post_init__(self):
        object.__setattr__(self, "squares", tuple((int(f), int(r)) for f, r in self.squares))
        verdict = validate_tour(self.squares)
        if not verdict.valid:
            raise ValueError(f"not a tour: {verdict.reason} at index {verdict.index}")


@dataclass(frozen=True)
class TourVerdict:
    valid: bool
    index: int | None = None
    reason: str | None = None


def _on_board(square) -> bool:
    f, r = square
    return 0 <= f < BOARD and 0 <= r < BOARD


def _is_knight_move(a, b) -> bool:
    df, dr = abs(a[0] - b[0]), abs(a[1] - b[1])
    return (df, dr) in ((1, 2), (2, 1))


def validate_tour(squares) -> TourVerdict:
    """Accept exactly the 64-square knight covers; report the first violation."""
    squares = [tuple(s) for s in squares]
    if len(squares) != BOARD * BOARD:
        return TourVerdict(False, len(squares), "length")
    seen = set()
    for i, sq in enumerate(squares):
        if not _on_board(sq):
            return TourVerdict(False, i, "off board")
        if sq in seen:
            return TourVerdict(False, i, "repeat")
        if i > 0 and not _is_knight_move(squares[i - 1], sq):
            return TourVerdict(False, i, "illegal move")
        seen.add(sq)
    return TourVerdict(True)


def _neighbors(square):
    f, r = square
    out = []
    for df, dr in KNIGHT_MOVES:
        t = (f + df, r + dr)
        if _on_board(t):
            out.append(t)
    return out


def find_tour(start) -> Tour:
    """A deterministic open tour from the given square.

    Candidates are tried in (onward degree, file, rank) order; backtracking
    guarantees completion since open tours exist from every square.
    """
    start = (int(start[0]), int(start[1]))
    if not _on_board(start):
        raise ValueError(f"square {start} is off the board")
    visited = {start}
    path = [start]

    def degree(sq):
        return sum(1 for t in _neighbors(sq) if t not in visited)

    def extend():
        if len(path) == BOARD * BOARD:
            return True
        options = sorted(
            (t for t in _neighbors(path[-1]) if t not in visited),
            key=lambda t: (degree(t), t),
        )
        for t in options:
            visited.add(t)
            path.append(t)
            if extend():
                return True
            visited.remove(t)
            path.pop()
        return False

    if not extend():
        raise RuntimeError(f"no tour from {start}")  # unreachable on the 8x8 board
    return Tour(tuple(path))


def square_to_algebraic(square) -> str:
    f, r = square
    return f"{chr(ord('a') + f)}{r + 1}"


def algebraic_to_square(text: str):
    text = text.strip().lower()
    if len(text) < 2 or not ("a" <= text[0] <= "h"):
        raise ValueError(f"bad square {text!r}")
    f = ord(text[0]) - ord("a")
    try:
        r = int(text[1:]) - 1
    except ValueError:
        raise ValueError(f"bad square {text!r}") from None
    if not 0 <= r < BOARD:
        raise ValueError(f"bad square {text!r}")
    return (f, r)


def tour_to_text(tour: Tour) -> str:
    return ",".join(square_to_algebraic(sq) for sq in tour.squares)


def tour_from_text(text: str):
    return [algebraic_to_square(part) for part in text.split(",") if part.strip()]
