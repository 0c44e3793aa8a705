r"""
Dyck paths, bracket vectors, the Tamari order and new intervals.

A Dyck path is stored as a word over {u, d} with all prefixes having at
least as many u's as d's. The Tamari order is tested through bracket
vectors: entry i is the size of the factor matched by the i-th up step.
New intervals are Tamari intervals [P, Q] such that the first up step of
Q matches the final down step, and V_P(i) <= V_Q(i+1) whenever V_Q(i) > 0.

Up steps are indexed from 1, step positions likewise.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Iterator


@dataclass(frozen=True)
class DyckPath:
    """A Dyck path as a word over {u, d}. The empty path is allowed."""

    steps: str

    def __post_init__(self):
        height = 0
        for ch in self.steps:
            if ch == 'u':
                height += 1
            elif ch == 'd':
                height -= 1
            else:
                raise ValueError(f"invalid step {ch!r}, expected 'u' or 'd'")
            if height < 0:
                raise ValueError(f"path {self.steps!r} falls below the x-axis")
        if height != 0:
            raise ValueError(f"path {self.steps!r} does not end on the x-axis")

    @property
    def size(self) -> int:
        return len(self.steps) // 2

    def __str__(self) -> str:
        return self.steps

    def up_positions(self) -> list[int]:
        """1-based step positions of the up steps."""
        return [k + 1 for k, ch in enumerate(self.steps) if ch == 'u']

    def heights(self) -> list[int]:
        """Height after each step; starts implicitly at 0."""
        out, h = [], 0
        for ch in self.steps:
            h += 1 if ch == 'u' else -1
            out.append(h)
        return out


def match_index(path: DyckPath, i: int) -> int:
    """Step position of the down step matching the i-th up step.

    The factor strictly between the two steps is itself a Dyck path.
    """
    ups = path.up_positions()
    if not 1 <= i <= len(ups):
        raise IndexError(f"up-step index {i} out of range 1..{len(ups)}")
    pos = ups[i - 1]
    balance = 0
    for j in range(pos, len(path.steps)):  # j is 0-based position of step j+1
        ch = path.steps[j]
        if ch == 'd':
            if balance == 0:
                return j + 1
            balance -= 1
        else:
            balance += 1
    raise AssertionError("unbalanced path slipped past validation")


def factor_between(path: DyckPath, i: int) -> DyckPath:
    """The Dyck factor strictly between up step i and its match."""
    ups = path.up_positions()
    if not 1 <= i <= len(ups):
        raise IndexError(f"up-step index {i} out of range 1..{len(ups)}")
    j = match_index(path, i)
    return DyckPath(path.steps[ups[i - 1]:j - 1])


def bracket_vector(path: DyckPath) -> tuple[int, ...]:
    """V_P(i) = size of the factor matched by up step i, for i = 1..n."""
    ups = path.up_positions()
    return tuple((match_index(path, i) - ups[i - 1] - 1) // 2
                 for i in range(1, len(ups) + 1))


def tamari_leq(lower: DyckPath, upper: DyckPath) -> bool:
    """Tamari comparison: bracket vectors compare pointwise."""
    if lower.size != upper.size:
        raise ValueError("Tamari comparison needs paths of equal size")
    return all(a <= b for a, b in
               zip(bracket_vector(lower), bracket_vector(upper)))


def type_word(path: DyckPath) -> str:
    """Binary word: letter i is 1 iff up step i is followed by an up step."""
    if path.size == 0:
        raise ValueError("type word undefined for the empty path")
    return ''.join('1' if path.steps[p] == 'u' else '0'
                   for p in path.up_positions())


def rising_contacts(path: DyckPath) -> int:
    """Number of up steps starting at height 0."""
    count, h = 0, 0
    for ch in path.steps:
        if ch == 'u':
            if h == 0:
                count += 1
            h += 1
        else:
            h -= 1
    return count


def is_new_interval(lower: DyckPath, upper: DyckPath) -> bool:
    """Whether [lower, upper] is a new Tamari interval.

    Requires: Tamari comparability, the first up step of the upper path
    matching the final down step, and V_P(i) <= V_Q(i+1) whenever
    V_Q(i) > 0.
    """
    n = lower.size
    if n != upper.size:
        raise ValueError("interval components must have equal size")
    if n == 0:
        raise ValueError("intervals are defined for size >= 1")
    vp = bracket_vector(lower)
    vq = bracket_vector(upper)
    if any(a > b for a, b in zip(vp, vq)):
        return False
    if vq[0] != n - 1:  # first up step of Q matches the final down step
        return False
    for i in range(n):
        if vq[i] > 0:
            nxt = vq[i + 1] if i + 1 < n else 0
            if vp[i] > nxt:
                return False
    return True


@dataclass(frozen=True)
class NewInterval:
    """A valid new interval [lower, upper]."""

    lower: DyckPath
    upper: DyckPath

    def __post_init__(self):
        if not is_new_interval(self.lower, self.upper):
            raise ValueError(
                f"[{self.lower}; {self.upper}] is not a new interval")

    @property
    def size(self) -> int:
        return self.lower.size

    def __str__(self) -> str:
        return f"{self.lower};{self.upper}"

    @staticmethod
    def parse(text: str) -> "NewInterval":
        parts = text.strip().split(';')
        if len(parts) != 2:
            raise ValueError(f"expected '<lower>;<upper>', got {text!r}")
        return NewInterval(DyckPath(parts[0]), DyckPath(parts[1]))


@dataclass(frozen=True)
class IntervalStats:
    """Type-pair counts and rising contacts of a new interval."""

    c00: int
    c01: int
    c11: int
    rcont: int


def interval_stats(interval: NewInterval) -> IntervalStats:
    """Count the type pairs (0,0), (0,1), (1,1) and rising contacts.

    The pair (1,0) cannot occur in a valid interval; finding one means the
    input was corrupted, and is reported as an error.
    """
    tp = type_word(interval.lower)
    tq = type_word(interval.upper)
    c00 = c01 = c11 = 0
    for i, (a, b) in enumerate(zip(tp, tq)):
        if (a, b) == ('0', '0'):
            c00 += 1
        elif (a, b) == ('0', '1'):
            c01 += 1
        elif (a, b) == ('1', '1'):
            c11 += 1
        else:
            raise ValueError(f"type pair (1,0) at index {i + 1}: "
                             "not a valid new interval")
    return IntervalStats(c00, c01, c11, rising_contacts(interval.lower))


def iter_dyck_words(n: int) -> Iterator[str]:
    """All Dyck words of size n in lexicographic order ('d' < 'u')."""

    def rec(prefix: list[str], ups: int, height: int):
        if ups == 0 and height == 0:
            yield ''.join(prefix)
            return
        if height > 0:
            prefix.append('d')
            yield from rec(prefix, ups, height - 1)
            prefix.pop()
        if ups > 0:
            prefix.append('u')
            yield from rec(prefix, ups - 1, height + 1)
            prefix.pop()

    yield from rec([], n, 0)
