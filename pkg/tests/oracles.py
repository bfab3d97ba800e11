"""Independent brute-force oracles used only by the tests.

These deliberately share no code with the package: partition counts come
from the pentagonal-number recurrence, and tableau counts from
generate-all-then-filter enumeration over every possible filling.
"""

from itertools import product


def pentagonal_counts(limit):
    """p(0..limit) via Euler's pentagonal number recurrence."""
    counts = [1]
    for n in range(1, limit + 1):
        total = 0
        k = 1
        while True:
            g1 = k * (3 * k - 1) // 2
            g2 = k * (3 * k + 1) // 2
            if g1 > n and g2 > n:
                break
            sign = -1 if k % 2 == 0 else 1
            if g1 <= n:
                total += sign * counts[n - g1]
            if g2 <= n:
                total += sign * counts[n - g2]
            k += 1
        counts.append(total)
    return counts


def _skew_cells(outer, inner):
    inner = tuple(inner) + (0,) * (len(outer) - len(inner))
    return [(i, j) for i in range(len(outer)) for j in range(inner[i], outer[i])]


def _semistandard(grid):
    for (i, j), v in grid.items():
        right = grid.get((i, j + 1))
        if right is not None and right < v:
            return False
        below = grid.get((i + 1, j))
        if below is not None and below <= v:
            return False
    return True


def _reverse_reading_word(outer, inner, grid):
    inner = tuple(inner) + (0,) * (len(outer) - len(inner))
    word = []
    for i in range(len(outer)):
        for j in range(outer[i] - 1, inner[i] - 1, -1):
            word.append(grid[(i, j)])
    return word


def _is_lattice(word):
    counts = {}
    for v in word:
        counts[v] = counts.get(v, 0) + 1
        if v > 1 and counts[v] > counts.get(v - 1, 0):
            return False
    return True


def brute_lr_count(outer, inner, content):
    """LR tableaux of shape outer/inner and content, by filtering all fillings."""
    outer, inner, content = tuple(outer), tuple(inner), tuple(content)
    cells = _skew_cells(outer, inner)
    if sum(content) != len(cells):
        return 0
    nvals = len(content)
    count = 0
    for fill in product(range(1, nvals + 1), repeat=len(cells)):
        grid = dict(zip(cells, fill))
        hist = [0] * nvals
        for v in fill:
            hist[v - 1] += 1
        if tuple(hist) != content:
            continue
        if not _semistandard(grid):
            continue
        if not _is_lattice(_reverse_reading_word(outer, inner, grid)):
            continue
        count += 1
    return count


def brute_ssyt_count(shape, content):
    """Semistandard tableaux of straight shape and (composition) content."""
    shape, content = tuple(shape), tuple(content)
    cells = _skew_cells(shape, ())
    if sum(content) != len(cells):
        return 0
    nvals = len(content)
    count = 0
    for fill in product(range(1, nvals + 1), repeat=len(cells)):
        grid = dict(zip(cells, fill))
        hist = [0] * nvals
        for v in fill:
            hist[v - 1] += 1
        if tuple(hist) != content:
            continue
        if _semistandard(grid):
            count += 1
    return count
