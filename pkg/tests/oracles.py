"""Slow, independently coded references used by the tests.

Nothing here imports from hdtl: configurations are re-parsed from their
strings, trees are plain adjacency maps and chains are found by cutting edges.
"""

import itertools
from math import comb


def parents_of(text):
    """Parent of each circle (1-based, 0 = outside) read straight off the string."""
    parents, stack = [], [0]
    for ch in text:
        if ch == "(":
            parents.append(stack[-1])
            stack.append(len(parents))
        else:
            stack.pop()
    return parents


def balanced_strings(n_pairs):
    """Every balanced-parenthesis string with exactly n_pairs pairs."""
    if n_pairs == 0:
        return [""]
    out = []
    for k in range(n_pairs):
        for inner in balanced_strings(k):
            for rest in balanced_strings(n_pairs - 1 - k):
                out.append("(" + inner + ")" + rest)
    return sorted(out)


def bell(n):
    row = [1]
    for _ in range(n):
        nxt = [row[-1]]
        for x in row:
            nxt.append(nxt[-1] + x)
        row = nxt
    return row[0]


def set_partitions(items):
    """All set partitions, built by inserting each item into a block or a new one."""
    items = list(items)
    if not items:
        yield []
        return
    first, rest = items[0], items[1:]
    for part in set_partitions(rest):
        yield [[first]] + part
        for k in range(len(part)):
            yield part[:k] + [[first] + part[k]] + part[k + 1 :]


def joined_edges(top, bottom):
    """Edges as (name, vertex_a, vertex_b) with names like 't1', 'b2'."""
    edges = []
    for side, text in (("t", top), ("b", bottom)):
        for i, p in enumerate(parents_of(text), start=1):
            here = f"{side}{i}"
            there = "root" if p == 0 else f"{side}{p}"
            edges.append((here, here, there))
    return edges


def _connected(edges, skip, a_ends, b_ends):
    adj = {}
    for name, u, v in edges:
        if name == skip:
            continue
        adj.setdefault(u, set()).add(v)
        adj.setdefault(v, set()).add(u)
    seen, stack = set(a_ends), list(a_ends)
    while stack:
        x = stack.pop()
        for y in adj.get(x, ()):
            if y not in seen:
                seen.add(y)
                stack.append(y)
    return bool(seen & set(b_ends))


def naive_chain(edges, e, f):
    """Edges whose removal separates e from f, as a set of names."""
    ends = {name: (u, v) for name, u, v in edges}
    return {
        g
        for g, _, _ in edges
        if g not in (e, f) and not _connected(edges, g, ends[e], ends[f])
    }


def naive_admissible(edges, partition):
    colour = {x: k for k, block in enumerate(partition) for x in block}
    for block in partition:
        for e, f in itertools.combinations(block, 2):
            between = naive_chain(edges, e, f)
            if any(colour[g] == colour[e] for g in between):
                continue
            tally = {}
            for g in between:
                tally[colour[g]] = tally.get(colour[g], 0) + 1
            if any(v % 2 for v in tally.values()):
                return False
    return True


def as_key(partition):
    """Order-free form of a partition of names, for set comparisons."""
    return frozenset(frozenset(b) for b in partition)


def brute_sh_classes(top, bottom):
    edges = joined_edges(top, bottom)
    names = [name for name, _, _ in edges]
    return [p for p in set_partitions(names) if naive_admissible(edges, p)]


def brute_automorphisms(text):
    """Parent-preserving permutations of circles, as dicts i -> image."""
    parents = parents_of(text)
    n = len(parents)
    out = []
    for perm in itertools.permutations(range(1, n + 1)):
        image = dict(zip(range(1, n + 1), perm))
        image[0] = 0
        if all(parents[image[i] - 1] == image[parents[i - 1]] for i in range(1, n + 1)):
            out.append({i: image[i] for i in range(1, n + 1)})
    return out


def burnside_count(top, bottom, classes):
    keys = {as_key(p) for p in classes}
    group = list(itertools.product(brute_automorphisms(top), brute_automorphisms(bottom)))
    fixed = 0
    for gt, gb in group:
        def move(name):
            m = gt if name[0] == "t" else gb
            return f"{name[0]}{m[int(name[1:])]}"

        for k in keys:
            if frozenset(frozenset(move(x) for x in b) for b in k) == k:
                fixed += 1
    assert fixed % len(group) == 0
    return fixed // len(group)


def catalan(n):
    return comb(2 * n, n) // (n + 1)
