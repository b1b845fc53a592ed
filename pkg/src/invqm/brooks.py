"""Counting quasimorphisms on free groups: evaluation, homogenization by
power stabilization, enumerated defect certificates, and duality-based
lower-bound reporting for stable (mixed) commutator length."""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from typing import Iterator, Sequence

from .words import FreeWord

LITTLE = "little"
BIG = "big"


class HorizonExceededError(RuntimeError):
    """Power differences did not stabilize within the allowed horizon."""


@dataclass(frozen=True)
class CountingQM:
    """Linear combination of subword-counting functions.

    In big mode every (possibly overlapping) occurrence of a base word in
    the reduced input counts; in little mode the maximal number of disjoint
    occurrences counts.  Occurrences are counted in the word as written;
    the inverse direction is handled by combinations such as
    count(w) - count(w^-1).
    """

    rank: int
    terms: tuple[tuple[FreeWord, Fraction], ...]
    mode: str = BIG

    def __post_init__(self):
        if self.mode not in (LITTLE, BIG):
            raise ValueError(f"unknown mode {self.mode!r}")
        for w, _ in self.terms:
            if not w.letters:
                raise ValueError("base words must be nonempty")
            if w.rank != self.rank:
                raise ValueError("base word rank mismatch")

    def __call__(self, x: FreeWord) -> Fraction:
        return qm_eval(self, x)


def _count_big(pattern: tuple[int, ...], text: tuple[int, ...]) -> int:
    k = len(pattern)
    return sum(1 for i in range(len(text) - k + 1) if text[i:i + k] == pattern)


def _count_little(pattern: tuple[int, ...], text: tuple[int, ...]) -> int:
    # greedy left-to-right is optimal for disjoint occurrences of one pattern
    k = len(pattern)
    count = 0
    i = 0
    while i + k <= len(text):
        if text[i:i + k] == pattern:
            count += 1
            i += k
        else:
            i += 1
    return count


def qm_eval(f: CountingQM, x: FreeWord) -> Fraction:
    if x.rank != f.rank:
        raise ValueError("rank mismatch")
    count = _count_big if f.mode == BIG else _count_little
    total = Fraction(0)
    for w, coeff in f.terms:
        total += coeff * count(w.letters, x.letters)
    return total


def homogenize_eval(f: CountingQM, x: FreeWord, k_max: int = 32) -> Fraction:
    """Stable slope of k |-> f(x^k), verified over a terminal window.

    Raises HorizonExceededError when the first differences of f on powers of
    x have not settled within k_max; never returns an unverified number.
    """
    if k_max < 4:
        raise ValueError("k_max must be at least 4")
    if not x.letters:
        return Fraction(0)
    window = max(4, k_max // 4)
    values = []
    p = FreeWord(x.rank)
    for _ in range(k_max + 1):
        values.append(qm_eval(f, p))
        p = p * x
    diffs = [b - a for a, b in zip(values, values[1:])]
    tail = diffs[-window:]
    if any(d != tail[0] for d in tail):
        raise HorizonExceededError(
            f"power differences not stable within horizon {k_max}")
    return tail[0]


@dataclass(frozen=True)
class DefectCertificate:
    """A one-sided bound on the defect.  Lower certificates are enumerated
    and carry the witnessing pair; upper certificates are user-supplied."""

    bound: Fraction
    kind: str  # "lower" | "upper"
    witness: tuple[FreeWord, FreeWord] | None = None
    provenance: str = ""

    def __post_init__(self):
        if self.kind not in ("lower", "upper"):
            raise ValueError("kind must be 'lower' or 'upper'")
        if self.kind == "lower" and self.witness is None:
            raise ValueError("lower certificates need a witness")


def reduced_words_up_to(rank: int, max_len: int) -> Iterator[FreeWord]:
    """All freely reduced words of length <= max_len, breadth first, letters
    ordered 1, -1, 2, -2, ...; deterministic for witness reproducibility."""
    alphabet = [s * g for g in range(1, rank + 1) for s in (1, -1)]
    frontier: list[tuple[int, ...]] = [()]
    yield FreeWord(rank)
    for _ in range(max_len):
        nxt = []
        for w in frontier:
            for x in alphabet:
                if w and w[-1] == -x:
                    continue
                nw = w + (x,)
                nxt.append(nw)
                yield FreeWord(rank, nw)
        frontier = nxt


def defect_lower_bound(f: CountingQM, max_len: int) -> DefectCertificate:
    """Exhaustive maximum of |f(xy) - f(x) - f(y)| over reduced pairs with
    |x|, |y| <= max_len; monotone nondecreasing in max_len."""
    if max_len < 1:
        raise ValueError("max_len must be at least 1")
    words = list(reduced_words_up_to(f.rank, max_len))
    values = {w.letters: qm_eval(f, w) for w in words}
    best = Fraction(0)
    witness = (words[0], words[0])
    for x in words:
        for y in words:
            gap = abs(qm_eval(f, x * y) - values[x.letters] - values[y.letters])
            if gap > best:
                best = gap
                witness = (x, y)
    return DefectCertificate(best, "lower", witness,
                             provenance=f"enumerated to length {max_len}")


def bavard_lower_bound(f: CountingQM, x: FreeWord,
                       defect_upper: DefectCertificate,
                       k_max: int = 32) -> Fraction:
    """|homogenization of f at x| / (2 * D) for a supplied upper defect
    certificate D > 0; a certified lower bound for the stable mixed
    commutator length given that certificate."""
    if defect_upper.kind != "upper":
        raise ValueError("need an upper defect certificate")
    if defect_upper.bound <= 0:
        raise ValueError("upper defect certificate must be positive")
    value = homogenize_eval(f, x, k_max)
    return abs(value) / (2 * defect_upper.bound)


def conjugation_invariance_check(f: CountingQM,
                                 samples: Sequence[tuple[FreeWord, FreeWord]],
                                 k_max: int = 32) -> list[dict]:
    """For each (x, g), compare homogenized values of x and g x g^-1.

    Returns one record per sample; failures carry the witnessing values.
    """
    report = []
    for x, g in samples:
        hx = homogenize_eval(f, x, k_max)
        hc = homogenize_eval(f, g * x * g.inverse(), k_max)
        report.append({"x": x, "g": g, "value": hx, "conjugated": hc,
                       "equal": hx == hc})
    return report


def equivalence_report(C: Fraction, flag: str = "generic") -> str:
    """Sandwich statement relating scl to its mixed version on mixed
    commutators, under the hypothesis that every invariant quasimorphism
    splits as invariant homomorphism plus extendable.

    flag 'solvable' forces C = 1 (the two lengths agree), 'amenable' forces
    C = 2; 'generic' uses the supplied constant.
    """
    if flag == "solvable":
        return ("scl_G = scl_{G,N} on [G,N] "
                "(solvable quotient; constant 1)")
    if flag == "amenable":
        return ("scl_G(x) <= scl_{G,N}(x) <= 2*scl_G(x) on [G,N] "
                "(amenable quotient; constant 2)")
    if flag == "generic":
        C = Fraction(C)
        if C < 1:
            raise ValueError("the sandwich constant must be at least 1")
        return f"scl_G(x) <= scl_{{G,N}}(x) <= {C}*scl_G(x) on [G,N]"
    raise ValueError(f"unknown flag {flag!r}")
