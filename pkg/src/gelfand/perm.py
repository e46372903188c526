"""Permutations of [0, n) in word notation.

A permutation of degree n is a tuple ``p`` of length n with ``p[i]`` the
image of ``i``.  Composition is function composition: ``compose(p, q)``
applies ``q`` first, then ``p``.  This convention is fixed repo-wide.

The user-facing cycle notation is 1-based, e.g. ``"(1 6 7)(2 3)"``; the
internal representation is always 0-based.
"""

from __future__ import annotations

Perm = tuple[int, ...]


class CycleParseError(ValueError):
    """Malformed cycle notation; the message names the offending token."""


def identity(n: int) -> Perm:
    return tuple(range(n))


def is_permutation(word) -> bool:
    n = len(word)
    return sorted(word) == list(range(n))


def compose(p: Perm, q: Perm) -> Perm:
    """Product p*q, i.e. the map x -> p(q(x)) (apply q first)."""
    if len(p) != len(q):
        raise ValueError(f"degree mismatch: {len(p)} vs {len(q)}")
    return tuple(p[x] for x in q)


def inverse(p: Perm) -> Perm:
    inv = [0] * len(p)
    for i, x in enumerate(p):
        inv[x] = i
    return tuple(inv)


def conjugate(g: Perm, x: Perm) -> Perm:
    """g * x * g^{-1}."""
    if len(g) != len(x):
        raise ValueError(f"degree mismatch: {len(g)} vs {len(x)}")
    out = [0] * len(g)
    for i, gi in enumerate(g):
        out[gi] = g[x[i]]
    return tuple(out)


def perm_order(p: Perm) -> int:
    import math

    return math.lcm(*cycle_type(p)) if p else 1


def cycles(p: Perm) -> list[tuple[int, ...]]:
    """Nontrivial cycles of p, each starting at its smallest point."""
    seen = bytearray(len(p))
    out = []
    for s in range(len(p)):
        if seen[s] or p[s] == s:
            seen[s] = 1
            continue
        cyc = []
        x = s
        while not seen[x]:
            seen[x] = 1
            cyc.append(x)
            x = p[x]
        out.append(tuple(cyc))
    return out


def cycle_type(p: Perm) -> tuple[int, ...]:
    """Cycle type including fixed points, parts sorted descending."""
    seen = bytearray(len(p))
    lengths = []
    for s in range(len(p)):
        if seen[s]:
            continue
        k = 0
        x = s
        while not seen[x]:
            seen[x] = 1
            k += 1
            x = p[x]
        lengths.append(k)
    return tuple(sorted(lengths, reverse=True))


def cycle_string(p: Perm) -> str:
    """1-based disjoint-cycle notation; the identity renders as "()"."""
    cs = cycles(p)
    if not cs:
        return "()"
    return "".join("(" + " ".join(str(x + 1) for x in cyc) + ")" for cyc in cs)


def parse_cycles(text: str, degree: int) -> Perm:
    """Parse 1-based disjoint-cycle notation into a permutation.

    Points absent from the text are fixed.  The empty string (or "()")
    yields the identity of the stated degree.
    """
    images = list(range(degree))
    used = set()
    depth = 0
    token = ""
    cyc: list[int] = []

    def close_token():
        nonlocal token
        if not token:
            return
        pt = int(token)
        if pt < 1 or pt > degree:
            raise CycleParseError(f"point {pt} out of range 1..{degree}")
        if pt - 1 in used:
            raise CycleParseError(f"repeated point {pt}")
        used.add(pt - 1)
        cyc.append(pt - 1)
        token = ""

    for ch in text:
        if ch == "(":
            if depth:
                raise CycleParseError("nested '(' in cycle notation")
            depth = 1
        elif ch == ")":
            if not depth:
                raise CycleParseError("unmatched ')' in cycle notation")
            close_token()
            for a, b in zip(cyc, cyc[1:] + cyc[:1]):
                images[a] = b
            cyc = []
            depth = 0
        elif ch.isdigit():
            if not depth:
                raise CycleParseError(f"point '{ch}' outside parentheses")
            token += ch
        elif ch in " \t,":
            close_token()
        else:
            raise CycleParseError(f"unexpected character {ch!r}")
    if depth:
        raise CycleParseError("unclosed '(' in cycle notation")
    return tuple(images)
