"""Membership in the inductive class of step-down coefficient vectors.

Decision is by goal-directed search: peel the tail base-power off the
last-extended position and recurse on the two premise vectors.  Successful
searches return a replayable derivation.
"""

from dataclasses import dataclass
from typing import Optional, Tuple, Union

from .terms import E_ZERO, EOrd, Exp, Ord, ZERO, is_zero_vec
from .cnf import (
    exp_add, from_pairs, irreducible, pairs, te, vec_step_down,
)

__all__ = [
    "Base", "Extend", "SdDerivation", "in_sd", "replay",
    "SdConditions", "sd_necessary_conditions", "clear_sd_cache",
]


@dataclass(frozen=True)
class Base:
    """The axiom: zeros followed by a single ordinal entry."""
    a: Ord


@dataclass(frozen=True)
class Extend:
    """Add a base-power with exponent zeta and coefficient a at logical
    position k; the tail is either kept or zeroed."""
    k: int
    zeta: Exp
    a: Ord
    keep_tail: bool


Step = Union[Base, Extend]


@dataclass(frozen=True)
class SdDerivation:
    steps: Tuple[Step, ...]
    seq: Tuple[Exp, ...]


_SD_CACHE = {}


def clear_sd_cache():
    _SD_CACHE.clear()


def in_sd(seq) -> Optional[SdDerivation]:
    """A derivation of the vector, or None when there is none.

    The vector carries logical indices 2..N-1; N is read off its length.
    """
    seq = tuple(seq)
    if seq in _SD_CACHE:
        return _SD_CACHE[seq]
    d = _search(seq)
    _SD_CACHE[seq] = d
    return d


def _base_of(seq):
    """Base-rule reading of the vector, if it has that shape."""
    if not all(e is E_ZERO for e in seq[:-1]):
        return None
    last = seq[-1]
    if last is E_ZERO:
        return Base(ZERO)
    if isinstance(last, EOrd):
        return Base(last.a)
    return None


def _search(seq):
    base = _base_of(seq)
    if base is not None:
        return SdDerivation((base,), seq)
    n = len(seq) + 2
    # last step must have extended some position k in 2..N-2
    for j in range(len(seq) - 1):
        entry = seq[j]
        if entry is E_ZERO:
            continue
        ps = pairs(entry)
        zeta, coeff = ps[-1]
        if zeta is E_ZERO:
            continue  # extension heads always carry a positive exponent
        mu = from_pairs(ps[:-1])
        tail = seq[j + 1:]
        prem2 = seq[:j] + (mu, zeta) + (E_ZERO,) * (len(seq) - j - 2)
        if in_sd(prem2) is None:
            continue
        if is_zero_vec(tail):
            prem1 = seq[:j] + (mu,) + tail
            d1 = in_sd(prem1)
            if d1 is not None:
                step = Extend(j + 2, zeta, coeff, keep_tail=False)
                return SdDerivation(d1.steps + (step,), seq)
        else:
            if not vec_step_down(tail, zeta):
                continue
            prem1 = seq[:j] + (mu,) + tail
            d1 = in_sd(prem1)
            if d1 is not None:
                step = Extend(j + 2, zeta, coeff, keep_tail=True)
                return SdDerivation(d1.steps + (step,), seq)
    return None


def replay(derivation, n):
    """Rebuild the vector by applying the recorded steps in order."""
    cur = None
    for step in derivation.steps:
        if isinstance(step, Base):
            last = E_ZERO if step.a is ZERO else _eord(step.a)
            cur = (E_ZERO,) * (n - 3) + (last,)
        else:
            j = step.k - 2
            entry = exp_add(cur[j], from_pairs(((step.zeta, step.a),)))
            tail = cur[j + 1:] if step.keep_tail else (E_ZERO,) * (n - 2 - j - 1)
            cur = cur[:j] + (entry,) + tail
    return cur


def _eord(a):
    from .terms import mk_eord
    return mk_eord(a)


# ---------------------------------------------------------------------------
# Necessary conditions
# ---------------------------------------------------------------------------

@dataclass(frozen=True)
class SdConditions:
    prefixes_in_sd: bool
    no_zero_gap: bool
    tail_step_down: bool
    irreducible: bool

    @property
    def all_hold(self):
        return (self.prefixes_in_sd and self.no_zero_gap
                and self.tail_step_down and self.irreducible)


def sd_necessary_conditions(seq):
    """The four necessary conditions every derivable vector satisfies."""
    seq = tuple(seq)
    n = len(seq)

    prefix_ok = True
    for i in range(n + 1):
        filled = seq[:i] + (E_ZERO,) * (n - i)
        if in_sd(filled) is None:
            prefix_ok = False
            break

    gap_ok = True
    nz = [j for j, e in enumerate(seq) if e is not E_ZERO]
    if nz:
        lo, hi = nz[0], nz[-1]
        gap_ok = all(seq[j] is not E_ZERO for j in range(lo, hi + 1))

    tail_ok = True
    for j, e in enumerate(seq):
        if e is E_ZERO or j == n - 1:
            continue
        t = te(e)
        if not vec_step_down(seq[j + 1:], t):
            tail_ok = False
            break

    return SdConditions(prefix_ok, gap_ok, tail_ok, irreducible(seq))
