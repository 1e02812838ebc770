import itertools
from collections import Counter

from schurkron import (
    SkewShape,
    Tableau,
    conjugate,
    count_ssyt_alpha_lattice,
    enumerate_partitions,
    is_alpha_lattice,
    is_ssyt,
    lr_coefficient,
    reverse_reading_word,
    skew_shape,
    tableau_type,
)

FIG1 = Tableau(
    skew_shape((9, 5, 2, 1, 1), (3, 1)),
    ((2, 2, 5, 7, 8, 9), (4, 5, 7, 9), (2, 8), (8,), (9,)),
)


def brute_force_count(shape, type_counts, alpha):
    """Independent oracle: try every filling of the skew cells and check the
    SSYT, type, and lattice conditions from their definitions."""
    outer, inner = shape
    cells = []
    for r, end in enumerate(outer):
        start = inner[r] if r < len(inner) else 0
        cells.extend((r, c) for c in range(start, end))
    counts = list(type_counts)
    while counts and counts[-1] == 0:
        counts.pop()
    if sum(counts) != len(cells):
        return 0
    kmax = len(counts)
    hits = 0
    for values in itertools.product(range(1, kmax + 1), repeat=len(cells)):
        grid = dict(zip(cells, values))
        tally = Counter(values)
        if any(tally.get(v + 1, 0) != c for v, c in enumerate(counts)):
            continue
        ok = True
        for (r, c), v in grid.items():
            right = grid.get((r, c + 1))
            below = grid.get((r + 1, c))
            if right is not None and right < v:
                ok = False
                break
            if below is not None and below <= v:
                ok = False
                break
        if not ok:
            continue
        word = []
        for r, end in enumerate(outer):
            start = inner[r] if r < len(inner) else 0
            word.extend(grid[(r, c)] for c in range(end - 1, start - 1, -1))
        prefix = Counter()
        for v in word:
            prefix[v] += 1
            for i in range(1, max(prefix) + 1):
                left = prefix.get(i, 0) + (alpha[i - 1] if i - 1 < len(alpha) else 0)
                right_side = prefix.get(i + 1, 0) + (alpha[i] if i < len(alpha) else 0)
                if left < right_side:
                    ok = False
                    break
            if not ok:
                break
        if ok:
            hits += 1
    return hits


class TestReadingWord:
    def test_displayed_tableau(self):
        assert is_ssyt(FIG1)
        assert reverse_reading_word(FIG1) == (
            9, 8, 7, 5, 2, 2, 9, 7, 5, 4, 8, 2, 8, 9,
        )
        assert tableau_type(FIG1) == (0, 3, 0, 1, 2, 0, 2, 3, 3)

    def test_single_row(self):
        t = Tableau(skew_shape((3,), ()), ((1, 1, 2),))
        assert reverse_reading_word(t) == (2, 1, 1)

    def test_empty(self):
        t = Tableau(skew_shape((), ()), ())
        assert reverse_reading_word(t) == ()

    def test_is_ssyt_rejects_bad_fillings(self):
        bad_row = Tableau(skew_shape((2,), ()), ((2, 1),))
        assert not is_ssyt(bad_row)
        bad_col = Tableau(skew_shape((1, 1), ()), ((1,), (1,)))
        assert not is_ssyt(bad_col)


class TestAlphaLattice:
    def test_shifted_examples(self):
        assert is_alpha_lattice((2, 2, 1), (2,))
        assert not is_alpha_lattice((2, 2, 2), (2,))
        assert is_alpha_lattice((1, 1, 2, 1, 2, 3), ())

    def test_matches_plain_lattice_definition(self):
        # classic definition: every prefix has at least as many i's as (i+1)'s
        def plain(word):
            seen = Counter()
            for v in word:
                seen[v] += 1
                if any(seen[i + 1] > seen[i] for i in range(1, max(seen) + 1)):
                    return False
            return True

        for length in range(9):
            for word in itertools.product((1, 2, 3), repeat=length):
                assert is_alpha_lattice(word, ()) == plain(word), word


class TestCountSsyt:
    def test_lr_tableaux_example(self):
        shape = skew_shape((5, 4, 3), (2, 1))
        assert count_ssyt_alpha_lattice(shape, (4, 3, 2), ()) == 2

    def test_superstandard_unique(self):
        for lam in enumerate_partitions(6):
            assert count_ssyt_alpha_lattice(skew_shape(lam, ()), lam, ()) == 1

    def test_shifted_count_against_brute_force(self):
        shape = skew_shape((4, 3), (2, 1))
        got = count_ssyt_alpha_lattice(shape, (2, 1, 1), (2, 1))
        assert got == brute_force_count(shape, (2, 1, 1), (2, 1))
        assert got >= 2

    def test_brute_force_equivalence_small_shapes(self):
        box = (4, 4, 4, 4)
        shapes = [
            (outer, inner)
            for size in range(1, 7)
            for outer_size in range(size, size + 5)
            for outer in enumerate_partitions(outer_size, inside=box)
            for inner in enumerate_partitions(outer_size - size, inside=outer)
        ]
        alphas = [(), (1,), (2, 1)]
        checked = 0
        for outer, inner in shapes[::3]:  # thin the grid, keep it varied
            size = sum(outer) - sum(inner)
            for type_counts in enumerate_partitions(size):
                for alpha in alphas:
                    shape = SkewShape(outer, inner)
                    assert count_ssyt_alpha_lattice(
                        shape, type_counts, alpha
                    ) == brute_force_count(shape, type_counts, alpha)
                    checked += 1
        assert checked > 600


class TestLrCoefficient:
    def test_worked_example(self):
        assert lr_coefficient((5, 4, 3), (4, 3, 2), (2, 1)) == 2
        assert lr_coefficient((5, 4, 3), (2, 1), (4, 3, 2)) == 2

    def test_pieri_cases(self):
        assert lr_coefficient((7,), (4,), (3,)) == 1
        assert lr_coefficient((2, 1), (1,), (1, 1)) == 1

    def test_size_and_containment_guards(self):
        assert lr_coefficient((3, 1), (2,), (1,)) == 0
        assert lr_coefficient((2, 2), (3,), (1,)) == 0

    def test_symmetry_and_conjugation(self):
        for n in range(1, 8):
            for lam in enumerate_partitions(n):
                for msize in range(n + 1):
                    for mu in enumerate_partitions(msize, inside=lam):
                        for nu in enumerate_partitions(n - msize):
                            c = lr_coefficient(lam, mu, nu)
                            assert c == lr_coefficient(lam, nu, mu)
                            assert c == lr_coefficient(
                                conjugate(lam), conjugate(mu), conjugate(nu)
                            )
