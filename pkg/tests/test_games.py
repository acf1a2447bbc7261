import math
import random

import pytest

from demoivre.exactnum import Odds
from demoivre.games import (
    Tour,
    algebraic_to_square,
    deck_match_odds,
    find_tour,
    square_to_algebraic,
    tour_from_text,
    tour_to_text,
    validate_tour,
)


def test_deck_match_odds_examples():
    assert deck_match_odds(1) == Odds(0, 1)
    assert deck_match_odds(3) == Odds(5, 1)
    assert deck_match_odds(32).favor // 10**28 == 26313083
    assert deck_match_odds(32).against == 1


def test_deck_match_odds_factorial_relation():
    for k in range(1, 41):
        assert deck_match_odds(k).favor + 1 == math.factorial(k)


def test_validate_short_list():
    verdict = validate_tour([(0, 0)] * 63)
    assert not verdict.valid
    assert verdict.reason == "length"


def test_validate_illegal_move():
    tour = [sq for sq in find_tour((0, 0)).squares]
    tour[1] = (1, 1)  # diagonal step, not a knight move; (1,1) is not square 0 or 1
    verdict = validate_tour(tour)
    assert not verdict.valid
    assert verdict.reason in ("illegal move", "repeat")


def test_validate_off_board():
    tour = [sq for sq in find_tour((0, 0)).squares]
    tour[5] = (8, 3)
    verdict = validate_tour(tour)
    assert not verdict.valid
    assert verdict.index == 5
    assert verdict.reason == "off board"


def test_validate_accepts_solver_output():
    verdict = validate_tour(find_tour((3, 4)).squares)
    assert verdict.valid
    assert verdict.index is None


def test_single_square_corruptions_rejected():
    base = list(find_tour((2, 2)).squares)
    rng = random.Random(64)
    positions = rng.sample(range(64), 12)
    for i in positions:
        for replacement in [(f, r) for f in range(8) for r in range(8)]:
            if replacement == base[i]:
                continue
            mutated = list(base)
            mutated[i] = replacement
            assert not validate_tour(mutated).valid, (i, replacement)


def test_find_tour_contract():
    tour = find_tour((7, 7))
    assert tour.squares[0] == (7, 7)
    assert len(set(tour.squares)) == 64
    assert find_tour((7, 7)).squares == tour.squares  # deterministic


def test_find_tour_several_starts_validate():
    for start in ((0, 0), (4, 3), (6, 1)):
        assert validate_tour(find_tour(start).squares).valid


def test_find_tour_rejects_off_board_start():
    with pytest.raises(ValueError):
        find_tour((8, 0))


def test_tour_type_enforces_invariants():
    with pytest.raises(ValueError):
        Tour(((0, 0), (1, 1)) + tuple((i % 8, i // 8) for i in range(62)))


def test_algebraic_serialization():
    assert square_to_algebraic((0, 0)) == "a1"
    assert square_to_algebraic((7, 7)) == "h8"
    assert algebraic_to_square("e4") == (4, 3)
    tour = find_tour((0, 0))
    text = tour_to_text(tour)
    assert text.startswith("a1,")
    assert tour_from_text(text) == list(tour.squares)
    with pytest.raises(ValueError):
        algebraic_to_square("j9")
