"""Macaulay bounds and M-, level- and Gorenstein-sequence tests.

Pure integer functions.  Verdicts carry a re-checkable witness of the
first failure.
"""

from __future__ import annotations

from dataclasses import dataclass
from math import comb


@dataclass(frozen=True)
class SequenceVerdict:
    holds: bool
    failing_index: int | None = None
    failing_pair: tuple[int, int] | None = None
    detail: str = ""

    def __bool__(self):
        return self.holds


def macaulay_expansion(a: int, i: int) -> list[tuple[int, int]]:
    """The unique expansion a = C(n_i, i) + C(n_{i-1}, i-1) + ... + C(n_j, j)
    with n_i > n_{i-1} > ... > n_j >= j >= 1, found greedily from the top."""
    if a < 0 or i < 1:
        raise ValueError("need a >= 0 and i >= 1")
    terms = []
    rest = a
    t = i
    while rest > 0 and t >= 1:
        n = t
        while comb(n + 1, t) <= rest:
            n += 1
        terms.append((n, t))
        rest -= comb(n, t)
        t -= 1
    if rest:
        raise ArithmeticError(f"expansion of {a} at level {i} left {rest}")
    return terms


def macaulay_upper(a: int, i: int) -> int:
    """The Macaulay bound a^<i> (with 0^<i> = 0) obtained by shifting the
    binomial expansion of a one step up."""
    if a < 0:
        raise ValueError("need a >= 0")
    if a == 0:
        return 0
    if i < 1:
        raise ValueError("need i >= 1 when a > 0")
    return sum(comb(n + 1, t + 1) for n, t in macaulay_expansion(a, i))


def is_M_sequence(seq) -> SequenceVerdict:
    """a_0 = 1, entries nonnegative, and a_{i+1} <= a_i^<i> for i >= 1."""
    seq = list(seq)
    if not seq:
        return SequenceVerdict(False, failing_index=0, detail="empty sequence")
    if any(x < 0 for x in seq):
        bad = next(i for i, x in enumerate(seq) if x < 0)
        return SequenceVerdict(False, failing_index=bad,
                               detail=f"negative entry {seq[bad]} at index {bad}")
    if seq[0] != 1:
        return SequenceVerdict(False, failing_index=0,
                               detail=f"must start with 1, got {seq[0]}")
    for i in range(1, len(seq) - 1):
        bound = macaulay_upper(seq[i], i)
        if seq[i + 1] > bound:
            return SequenceVerdict(
                False, failing_index=i + 1,
                detail=f"a_{i + 1} = {seq[i + 1]} exceeds a_{i}^<{i}> = {bound}")
    return SequenceVerdict(True)


def is_sum_of_M_sequences(seq) -> SequenceVerdict:
    """A nonnegative sequence is a sum of M-sequences iff it is all zero,
    or starts with a positive entry and stays an M-sequence after the
    leading entry is replaced by 1."""
    seq = list(seq)
    if any(x < 0 for x in seq):
        bad = next(i for i, x in enumerate(seq) if x < 0)
        return SequenceVerdict(False, failing_index=bad,
                               detail=f"negative entry at index {bad}")
    if all(x == 0 for x in seq):
        return SequenceVerdict(True, detail="zero sequence")
    if seq[0] < 1:
        return SequenceVerdict(False, failing_index=0,
                               detail="leading entry is 0 but the sequence is not zero")
    return is_M_sequence([1] + seq[1:])


def level_necessary_conditions(seq) -> SequenceVerdict:
    """Necessary conditions for (1, l_1, ..., l_s) to be a level sequence.

    Checked: it is an M-sequence; l_i <= l_j * l_{i+j} for all i, j >= 1
    with i + j <= s; the reversed sequence (l_s, ..., l_1, 1) is a sum of
    M-sequences; and when l_s = 1 the sequence must be symmetric (a
    one-dimensional top socle forces Gorenstein, hence symmetry).
    """
    seq = list(seq)
    if not seq or seq[0] != 1:
        raise ValueError("level sequence test expects a sequence starting with 1")
    s = len(seq) - 1
    failures = []
    first_index = None
    first_pair = None

    m = is_M_sequence(seq)
    if not m:
        failures.append(f"not an M-sequence ({m.detail})")
        first_index = m.failing_index

    for i in range(1, s + 1):
        for j in range(1, s - i + 1):
            if seq[i] > seq[j] * seq[i + j]:
                failures.append(
                    f"product bound fails: l_{i} = {seq[i]} > l_{j} * l_{i + j} "
                    f"= {seq[j] * seq[i + j]}")
                if first_pair is None:
                    first_pair = (i, j)

    rev = list(reversed(seq))
    rv = is_sum_of_M_sequences(rev)
    if not rv:
        failures.append(f"reversed sequence is not a sum of M-sequences ({rv.detail})")

    if s >= 1 and seq[s] == 1 and seq != rev:
        bad = next(i for i in range(s + 1) if seq[i] != rev[i])
        failures.append(
            f"top entry 1 forces symmetry, but entry {bad} differs: "
            f"{seq[bad]} vs {rev[bad]}")
        if first_index is None:
            first_index = bad

    if failures:
        return SequenceVerdict(False, failing_index=first_index,
                               failing_pair=first_pair, detail="; ".join(failures))
    return SequenceVerdict(True)


def corollary_level_g_check(g, u_tilde: int) -> SequenceVerdict:
    """The three level-ring consequences on the truncated g-vector
    (g_0, ..., g_{u_tilde}): product bounds g_i <= g_j g_{i+j}; the
    truncation is an M-sequence; and (1, g_{u_tilde - 1}, ..., g_1, 1)
    is an M-sequence."""
    g = list(g)
    if not g or g[0] != 1:
        raise ValueError("g-vector must start with 1")
    if u_tilde < 0 or u_tilde >= len(g):
        raise ValueError(f"truncation degree {u_tilde} out of range")
    trunc = g[:u_tilde + 1]
    failures = []
    first_pair = None

    for i in range(1, u_tilde + 1):
        for j in range(1, u_tilde - i + 1):
            if trunc[i] > trunc[j] * trunc[i + j]:
                failures.append(
                    f"g_{i} = {trunc[i]} > g_{j} * g_{i + j} = {trunc[j] * trunc[i + j]}")
                if first_pair is None:
                    first_pair = (i, j)

    m = is_M_sequence(trunc)
    if not m:
        failures.append(f"truncated g-vector is not an M-sequence ({m.detail})")

    rev = [1] + trunc[1:u_tilde][::-1] + ([1] if u_tilde >= 1 else [])
    mr = is_M_sequence(rev)
    if not mr:
        failures.append(f"reversed truncation {rev} is not an M-sequence ({mr.detail})")

    if failures:
        return SequenceVerdict(False, failing_pair=first_pair, detail="; ".join(failures))
    return SequenceVerdict(True)
