import itertools

import pytest

from truncsym.partition import Partition


def brute_matrix_count(rows, cols, allowed):
    """Count matrices by trying every entry assignment; only for tiny margins."""
    rows, cols = tuple(rows), tuple(cols)
    if sum(rows) != sum(cols):
        return 0
    ranges = [[v for v in range(min(r, c) + 1) if allowed(v)] for r in rows for c in cols]
    total = 0
    for cells in itertools.product(*ranges):
        grid = [cells[i * len(cols):(i + 1) * len(cols)] for i in range(len(rows))]
        if all(sum(g) == r for g, r in zip(grid, rows)) and all(
            sum(g[j] for g in grid) == c for j, c in enumerate(cols)
        ):
            total += 1
    return total


def brute_partitions(n):
    """Every multiset of positive integers summing to n, via compositions."""
    out = set()
    for cuts in itertools.product([0, 1], repeat=max(n - 1, 0)):
        parts, run = [], 1
        for c in cuts:
            if c:
                parts.append(run)
                run = 1
            else:
                run += 1
        if n:
            parts.append(run)
        out.add(Partition(sorted(parts, reverse=True)))
    return out


@pytest.fixture
def P():
    return Partition
