"""Independent oracles and generators shared across the test suite.

Everything here is written directly from the definitions (quantifier-style
brute force), deliberately not reusing the library's algorithms, so the
suite cross-checks two implementations against each other.
"""

import itertools

L1_ASCII = ".##\n###\n###\n##.\n##."
L2_ASCII = ".####\n.####\n.###.\n###..\n###.."
L3_ASCII = ".##\n.##\n###\n##.\n##."

L3_CELLS = [
    [1, 2], [1, 3], [2, 2], [2, 3],
    [3, 1], [3, 2], [3, 3],
    [4, 1], [4, 2], [5, 1], [5, 2],
]


def closure_holds(cells):
    """Direct quantifier check of the rectangle-closure axiom."""
    s = set(cells)
    for (i, j) in s:
        for (p, q) in s:
            if i <= p and j <= q and ((i, q) not in s or (p, j) not in s):
                return False
    return True


def naive_corners(cells):
    """Corner scan written from the four-cell membership patterns."""
    s = set(cells)
    m = max(r for r, _ in s)
    n = max(c for _, c in s)
    lower, upper = [], []
    for a in range(1, m + 1):
        for b in range(1, n + 1):
            if (a, b) in s and (a - 1, b) in s and (a, b - 1) in s and (a - 1, b - 1) not in s:
                lower.append((a, b))
            if (a, b) in s and (a + 1, b) in s and (a, b + 1) in s and (a + 1, b + 1) not in s:
                upper.append((a, b))
    return sorted(lower), sorted(upper)


def full_minors(cells):
    """All full 2-minors as 4-cell frozensets."""
    s = set(cells)
    out = []
    for (i, j), (p, q) in itertools.combinations(sorted(s), 2):
        if i < p and j < q and (i, q) in s and (p, j) in s:
            out.append(frozenset({(i, j), (i, q), (p, j), (p, q)}))
    return out


def two_connected_by_partitions(cells):
    """The partition-based 2-connectivity definition, brute-forced.

    Not 2-connected iff the cells split into two nonempty subladders such
    that every full 2-minor lies inside one part.  Only sensible for small
    inputs (2 <= |cells| <= ~14).
    """
    cells = sorted(cells)
    k = len(cells)
    assert 2 <= k <= 16, "partition brute force is for small inputs"
    idx = {c: i for i, c in enumerate(cells)}
    demands = []
    for a, (i, j) in enumerate(cells):
        for b, (p, q) in enumerate(cells):
            if a < b and i <= p and j <= q:
                pm = (1 << a) | (1 << b)
                rm = (1 << idx[(i, q)]) | (1 << idx[(p, j)])
                if rm & pm != rm:
                    demands.append((pm, rm))
            elif a < b and p <= i and q <= j:
                pm = (1 << a) | (1 << b)
                rm = (1 << idx[(p, j)]) | (1 << idx[(i, q)])
                if rm & pm != rm:
                    demands.append((pm, rm))
    minor_masks = []
    for minor in full_minors(cells):
        mask = 0
        for c in minor:
            mask |= 1 << idx[c]
        minor_masks.append(mask)

    full = (1 << k) - 1

    def is_subladder(mask):
        for pm, rm in demands:
            if mask & pm == pm and mask & rm != rm:
                return False
        return True

    for z1 in range(1, full, 2):  # cell 0 always in z1, z1 != full
        z2 = full ^ z1
        if not is_subladder(z1) or not is_subladder(z2):
            continue
        if all(mask & z1 == mask or mask & z2 == mask for mask in minor_masks):
            return False
    return True


def enumerate_ladder_cellsets(max_m, max_n):
    """Every normalized closure-valid cell set with m <= max_m, n <= max_n.

    Enumerated row by row from the pairwise row-compatibility form of the
    closure axiom, independently of the library's constructor.
    """
    out = []
    for n in range(1, max_n + 1):
        sets = [frozenset(c) for r in range(n + 1) for c in itertools.combinations(range(1, n + 1), r)]
        compat = {}
        for upper_cols in sets:
            for lower_cols in sets:
                ok = all(
                    q in upper_cols and j in lower_cols
                    for j in upper_cols
                    for q in lower_cols
                    if j <= q
                )
                compat[(upper_cols, lower_cols)] = ok
        nonempty = [s for s in sets if s]
        for m in range(1, max_m + 1):
            stack = [()]
            while stack:
                rows = stack.pop()
                if len(rows) == m:
                    cells = frozenset((r + 1, c) for r, cols in enumerate(rows) for c in cols)
                    colsused = {c for _, c in cells}
                    if 1 in colsused and n in colsused:
                        out.append(cells)
                    continue
                choices = nonempty if len(rows) in (0, m - 1) else sets
                for cols in choices:
                    if all(compat[(prev, cols)] for prev in rows):
                        stack.append(rows + (cols,))
    return out


def random_staircase_cells(rng, max_m, max_n):
    """Random path-connected interval ladder (normalized), as a cell set."""
    m = rng.randint(2, max_m)
    n = rng.randint(2, max_n)
    right = [n]
    for _ in range(1, m):
        right.append(rng.randint(1, right[-1]))
    left = [0] * m
    left[m - 1] = 1
    for i in range(m - 2, -1, -1):
        left[i] = rng.randint(left[i + 1], min(right[i], right[i + 1]))
    return {(i + 1, c) for i in range(m) for c in range(left[i], right[i] + 1)}
