"""Brute-force shortest-edit-sequence oracle.

Breadth-first search over strings, one edit per step (insert, delete,
substitute, adjacent transpose).  Independent of the DP implementation:
no cost tables, no recurrences, just exhaustive enumeration.  States are
length-pruned, which cannot cut off an optimal path for the string sizes
used in the tests (lengths <= 4, distances <= 4).
"""

from __future__ import annotations

from collections import deque

MAX_LEN = 8


def neighbors(s: str, alphabet: str):
    for i in range(len(s)):
        yield s[:i] + s[i + 1 :]  # delete
        for c in alphabet:
            if c != s[i]:
                yield s[:i] + c + s[i + 1 :]  # substitute
    if len(s) < MAX_LEN:
        for i in range(len(s) + 1):
            for c in alphabet:
                yield s[:i] + c + s[i:]  # insert
    for i in range(len(s) - 1):
        if s[i] != s[i + 1]:
            yield s[:i] + s[i + 1] + s[i] + s[i + 2 :]  # transpose

def bfs_distance(a: str, b: str, alphabet: str = "abc") -> int:
    """Minimum number of single edits turning a into b."""
    if a == b:
        return 0
    seen = {a}
    queue = deque([(a, 0)])
    while queue:
        s, depth = queue.popleft()
        for t in neighbors(s, alphabet):
            if t == b:
                return depth + 1
            if t not in seen and len(t) <= MAX_LEN:
                seen.add(t)
                queue.append((t, depth + 1))
    raise AssertionError(f"no path from {a!r} to {b!r}")


def all_strings(alphabet: str, max_len: int):
    out = [""]
    frontier = [""]
    for _ in range(max_len):
        frontier = [s + c for s in frontier for c in alphabet]
        out.extend(frontier)
    return out
