import random

import pytest

from conftest import BK_PATH, DESCENT_FIGURE, UNIQUE_321_N5
from nearly_toric.bk import (
    NotAvoiding312Error,
    path_to_perm,
    perm_to_path,
    perm_to_path_search,
    reading_word,
    segments,
)
from nearly_toric.dyck import (
    DyckPath,
    area,
    east_heights,
    path_leq,
    primary_dip,
    secondary_dip,
    subpath_system,
)
from nearly_toric.perm import (
    bruhat_leq,
    contains,
    identity,
    is_reduced,
    left_descent_set,
    length,
)

DESCENT_PERM = (3, 2, 4, 5, 7, 9, 8, 6, 12, 11, 10, 1)


def test_bk_example():
    assert segments(BK_PATH) == [(6, 7), (6,), (3, 4, 5), (3, 4), (3,), (), (1,), ()]
    assert path_to_perm(BK_PATH) == (2, 1, 6, 5, 4, 8, 7, 3)
    assert perm_to_path((2, 1, 6, 5, 4, 8, 7, 3)) == BK_PATH


def test_descent_figure_segments():
    nonempty = [s for s in segments(DESCENT_FIGURE) if s]
    assert nonempty == [(9, 10, 11), (9, 10), (9,), (6, 7, 8), (6, 7), (5, 6), (5,), (4,), (3,), (1, 2), (1,)]
    assert path_to_perm(DESCENT_FIGURE) == DESCENT_PERM


def test_trivial_paths():
    for n in range(0, 7):
        assert path_to_perm(DyckPath.staircase(n)) == identity(n)
        assert perm_to_path(identity(n)) == DyckPath.staircase(n)
        assert all(s == () for s in segments(DyckPath.staircase(n)))


def test_unique_321_figure_labels():
    for steps, label in UNIQUE_321_N5.items():
        w = tuple(int(c) for c in label)
        assert path_to_perm(DyckPath.parse(steps)) == w
        assert perm_to_path(w) == DyckPath.parse(steps)


def test_rejects_312():
    with pytest.raises(NotAvoiding312Error):
        perm_to_path((3, 1, 2))
    with pytest.raises(NotAvoiding312Error):
        perm_to_path_search((2, 5, 3, 1, 4))


def test_segments_increase_by_one(paths_upto_8):
    for n in range(1, 9):
        for p in paths_upto_8[n]:
            for seg in segments(p):
                assert all(b == a + 1 for a, b in zip(seg, seg[1:]))


def test_round_trip_area_and_312(paths_upto_8):
    for n in range(0, 9):
        images = set()
        for p in paths_upto_8[n]:
            w = path_to_perm(p)
            assert perm_to_path(w) == p
            assert length(w) == area(p)
            assert is_reduced(reading_word(p), n) or n == 0
            assert not contains(w, (3, 1, 2))
            images.add(w)
        assert len(images) == len(paths_upto_8[n])


def test_constructive_inverse_matches_search(paths_upto_8):
    for n in range(0, 7):
        for p in paths_upto_8[n]:
            w = path_to_perm(p)
            assert perm_to_path_search(w) == perm_to_path(w)


def test_poset_isomorphism(paths_upto_8):
    for n in range(1, 6):
        paths = paths_upto_8[n]
        images = {p: path_to_perm(p) for p in paths}
        for p in paths:
            for q in paths:
                assert path_leq(p, q) == bruhat_leq(images[p], images[q])
    rng = random.Random(6)
    paths = paths_upto_8[6]
    for _ in range(2000):
        p, q = rng.choice(paths), rng.choice(paths)
        assert path_leq(p, q) == bruhat_leq(path_to_perm(p), path_to_perm(q))


# -- the lemmas relating dips and heights to one-line entries ------------------------------

def test_last_entry_from_primary_dip(paths_upto_8):
    for n in range(1, 9):
        for p in paths_upto_8[n]:
            a, _ = primary_dip(p)
            assert path_to_perm(p)[n - 1] == a + 1


def test_second_to_last_entry_from_secondary_dip(paths_upto_8):
    checked = 0
    for n in range(2, 9):
        for p in paths_upto_8[n]:
            a, _ = primary_dip(p)
            if a > n - 2:
                continue
            _, b = secondary_dip(p)
            w = path_to_perm(p)
            assert (w[n - 2] - 1, w[n - 2]) == (b, b + 1)
            checked += 1
    assert checked > 1000


def test_secondary_dip_on_bk_path():
    assert secondary_dip(BK_PATH) == (5, 6)
    assert path_to_perm(BK_PATH)[6] == 7


def test_position_of_n_from_top_row(paths_upto_8):
    for n in range(1, 9):
        for p in paths_upto_8[n]:
            t = sum(1 for h in east_heights(p) if h == n)
            assert path_to_perm(p)[n - t] == n


def _mds_heads_with_lengths(w):
    runs = []
    for x in w:
        if runs and x < runs[-1][-1]:
            runs[-1].append(x)
        else:
            runs.append([x])
    return [(r[0], len(r)) for r in runs]


def test_mds_figure():
    assert [h for h, _ in _mds_heads_with_lengths(DESCENT_PERM)] == [3, 4, 5, 7, 9, 12]
    assert east_heights(DESCENT_FIGURE) == [3, 3, 4, 5, 7, 9, 9, 9, 12, 12, 12, 12]


def test_east_heights_encode_mds(paths_upto_8):
    # each run's first entry appears once per entry of the run, in order
    for n in range(1, 9):
        for p in paths_upto_8[n]:
            expanded = [h for h, k in _mds_heads_with_lengths(path_to_perm(p)) for _ in range(k)]
            assert east_heights(p) == expanded


def _first_diagonal_touches(p):
    return [x for x, y in p.points if y - x == 1]


def test_skipped_descents_figure():
    assert _first_diagonal_touches(DESCENT_FIGURE) == [0, 2, 3, 4, 8, 11]
    excluded = {3, 4, 8}
    assert not excluded & left_descent_set(DESCENT_PERM)


def test_skipped_descents(paths_upto_8):
    checked = 0
    for n in range(2, 9):
        for p in paths_upto_8[n]:
            if len(subpath_system(p, 0)) != 1:
                continue
            touches = _first_diagonal_touches(p)
            assert touches[0] == 0 and touches[-1] == n - 1
            skipped = set(touches[2:-1])
            assert not skipped & left_descent_set(path_to_perm(p))
            checked += 1
    assert checked > 400
