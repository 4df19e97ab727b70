"""The decidable linear order on ordinal and exponent terms.

Comparison of psi terms follows the four-clause recursion of the notation
system's computability lemma and is mutually recursive with the component
sets K_delta; both directions are memoized on interned nodes.
"""

from .errors import BadDelta, ComparisonUndecided, InvalidTerm
from .terms import (
    BIG_K, E_ZERO, ZERO,
    BigKT, EOrd, EZeroT, LamSum, OmegaExp, OmegaIdx, Psi, Sum, Veblen, ZeroT,
    is_successor_term, k_components, m_profile,
)

__all__ = [
    "LT", "EQ", "GT", "cmp_ord", "cmp_exp", "lt", "le",
    "k_delta", "k_delta_set", "k_delta_exp", "kset_below", "le_kset",
    "rule_tag", "hull_member", "clear_caches", "max_term",
]

LT, EQ, GT = -1, 0, 1

_CMP_CACHE = {}
_KD_CACHE = {}
_RULE_CACHE = {}

# rough guard against unbounded growth in long-running processes
_CACHE_LIMIT = 6_000_000


def clear_caches():
    _CMP_CACHE.clear()
    _KD_CACHE.clear()
    _RULE_CACHE.clear()


# ---------------------------------------------------------------------------
# Formation-rule tags (shape only; side conditions live in validate)
# ---------------------------------------------------------------------------

PSI9, PSI10, PSI11, PSI12 = "Psi9", "Psi10", "Psi11", "Psi12"


def rule_tag(t):
    """Which psi-formation rule shapes t, or None when no rule fits.

    Determined by the coefficient vector and the recorded coefficients of
    the collapse base alone, so it is available before validation.
    """
    tag = _RULE_CACHE.get(t)
    if tag is None and t not in _RULE_CACHE:
        tag = _rule_tag(t)
        _RULE_CACHE[t] = tag
    return tag


def _rule_tag(t):
    if not isinstance(t, Psi):
        return None
    if t.nu_zero:
        return PSI9
    if t.pi is BIG_K:
        last = t.nu[-1]
        body_zero = all(e is E_ZERO for e in t.nu[:-1])
        return PSI10 if body_zero and isinstance(last, EOrd) else None
    prof = m_profile(t.pi)
    if not prof:
        return None
    return PSI11 if prof[-1] >= 3 else PSI12


# ---------------------------------------------------------------------------
# cmp on ordinal terms
# ---------------------------------------------------------------------------

# strata for cross-class principal comparison: everything below the top
# term, the top term itself, omega-powers above it
_STRATUM = {Veblen: 0, OmegaIdx: 0, Psi: 0, BigKT: 1, OmegaExp: 2}


def cmp_ord(s, t):
    """Trichotomous comparison; EQ exactly on identical (interned) terms."""
    if s is t:
        return EQ
    key = (s, t)
    r = _CMP_CACHE.get(key)
    if r is None:
        if len(_CMP_CACHE) > _CACHE_LIMIT:
            _CMP_CACHE.clear()
        r = _cmp_ord(s, t)
        _CMP_CACHE[key] = r
        _CMP_CACHE[(t, s)] = -r
    return r


def lt(s, t):
    return cmp_ord(s, t) == LT


def le(s, t):
    return cmp_ord(s, t) <= EQ


def _cmp_ord(s, t):
    if isinstance(s, ZeroT):
        return LT
    if isinstance(t, ZeroT):
        return GT
    sp = s.parts if isinstance(s, Sum) else (s,)
    tp = t.parts if isinstance(t, Sum) else (t,)
    if len(sp) > 1 or len(tp) > 1:
        return _cmp_lex(sp, tp)
    return _cmp_principal(s, t)


def _cmp_lex(sp, tp):
    for a, b in zip(sp, tp):
        c = cmp_ord(a, b)
        if c != EQ:
            return c
    if len(sp) == len(tp):
        return EQ
    return GT if len(sp) > len(tp) else LT


def _cmp_principal(s, t):
    ra, rb = _STRATUM[type(s)], _STRATUM[type(t)]
    if ra != rb:
        return LT if ra < rb else GT
    if ra == 2:                                   # omega-powers above the top
        return cmp_ord(s.b, t.b)
    if ra == 1:                                   # both are the top term
        return EQ
    ts, tt = type(s), type(t)
    if ts is Veblen:
        return _cmp_veblen_any(s, t)
    if tt is Veblen:
        return -_cmp_veblen_any(t, s)
    if ts is OmegaIdx and tt is OmegaIdx:
        return cmp_ord(s.b, t.b)
    if ts is OmegaIdx:
        return -_cmp_psi_omega(t, s)
    if tt is OmegaIdx:
        return _cmp_psi_omega(s, t)
    return _cmp_psi_psi(s, t)


def _cmp_veblen_any(s, t):
    if type(t) is not Veblen:
        # t is strongly critical: phi(b,g) < t iff both arguments are
        if cmp_ord(s.b, t) == LT and cmp_ord(s.g, t) == LT:
            return LT
        return GT
    c = cmp_ord(s.b, t.b)
    if c == EQ:
        return cmp_ord(s.g, t.g)
    if c == LT:
        r = cmp_ord(s.g, t)
        if r == EQ:
            raise ComparisonUndecided(
                "non-normal Veblen argument: %r vs %r" % (s, t))
        return r
    return -_cmp_veblen_any(t, s)


def _cmp_psi_omega(p, om):
    """psi term p against Om_alpha; result from p's viewpoint."""
    alpha = om.b
    pi = p.pi
    if isinstance(pi, OmegaIdx) and is_successor_term(pi.b):
        # Om_g < psi_{Om_{g+1}}(a) < Om_{g+1}
        return LT if cmp_ord(pi.b, alpha) <= EQ else GT
    # p names an Omega-fixed point: Om_alpha < p iff alpha < p
    c = cmp_ord(p, alpha)
    if c == LT:
        return LT
    if cmp_ord(alpha, p) == LT:
        return GT
    raise ComparisonUndecided("Omega index ties a psi term: %r vs %r" % (om, p))


def _cmp_psi_psi(s, t):
    if _psi_lt(s, t):
        return LT
    if _psi_lt(t, s):
        return GT
    raise ComparisonUndecided("psi comparison undecided: %r vs %r" % (s, t))


def _psi_lt(s, t):
    """The four-clause test for psi_pi^nu(b) < psi_ka^xi(a)."""
    pi, nu, b = s.pi, s.nu, s.a
    ka, xi, a = t.pi, t.nu, t.a
    if cmp_ord(pi, t) <= EQ:                                        # clause 1
        return True
    c = cmp_ord(b, a)
    if c == LT:                                                     # clause 2
        if cmp_ord(s, ka) == LT:
            ks = k_delta_set(t, (pi, b)) | k_delta_set(t, s.nu_comps)
            if kset_below(ks, a):
                return True
    else:                                                           # clause 3
        # guard: with ka <= s any genuine t satisfies t < ka <= s, so a
        # firing could only certify an ill-formed right-hand side
        if cmp_ord(ka, s) == GT:
            ks = k_delta_set(s, (ka, a)) | k_delta_set(s, t.nu_comps)
            if le_kset(b, ks):
                return True
        if c == EQ and pi is ka:                                    # clause 4
            if kset_below(k_delta_set(t, s.nu_comps), a):
                from .cnf import lx_lt
                if lx_lt(nu, xi, 2):
                    return True
    return False


# ---------------------------------------------------------------------------
# cmp on exponent terms
# ---------------------------------------------------------------------------

def cmp_exp(x, y):
    """Comparison under the base-CNF reading; every base-power sum exceeds
    every plain ordinal term."""
    if x is y:
        return EQ
    if isinstance(x, EZeroT):
        return LT
    if isinstance(y, EZeroT):
        return GT
    xl, yl = isinstance(x, LamSum), isinstance(y, LamSum)
    if not xl and not yl:
        return cmp_ord(x.a, y.a)
    if not xl:
        return LT
    if not yl:
        return GT
    for (e1, c1), (e2, c2) in zip(x.pairs, y.pairs):
        c = cmp_exp(e1, e2)
        if c != EQ:
            return c
        c = cmp_ord(c1, c2)
        if c != EQ:
            return c
    if len(x.pairs) == len(y.pairs):
        return EQ
    return GT if len(x.pairs) > len(y.pairs) else LT


def max_term(items):
    """Maximum of a non-empty iterable of ordinal terms under cmp_ord."""
    best = None
    for t in items:
        if best is None or cmp_ord(t, best) == GT:
            best = t
    if best is None:
        raise ValueError("max of empty term collection")
    return best


# ---------------------------------------------------------------------------
# Component sets K_delta
# ---------------------------------------------------------------------------

_EMPTY = frozenset()


def _check_delta(delta):
    if not (delta is ZERO or delta is BIG_K or isinstance(delta, Psi)):
        raise BadDelta("delta must be 0, the top term, or a psi term: %r"
                       % (delta,))


def k_delta(delta, alpha):
    """The finite component set K_delta(alpha)."""
    _check_delta(delta)
    return _k_delta(delta, alpha)


def _k_delta(delta, alpha):
    if isinstance(alpha, (ZeroT, BigKT)):
        return _EMPTY
    key = (delta, alpha)
    r = _KD_CACHE.get(key)
    if r is not None:
        return r
    if isinstance(alpha, Sum):
        r = _EMPTY
        for p in alpha.parts:
            r |= _k_delta(delta, p)
    elif isinstance(alpha, Veblen):
        r = _k_delta(delta, alpha.b) | _k_delta(delta, alpha.g)
    elif isinstance(alpha, (OmegaExp, OmegaIdx)):
        r = _k_delta(delta, alpha.b)
    else:
        r = _k_delta_psi(delta, alpha)
    _KD_CACHE[key] = r
    return r


def _k_delta_psi(delta, alpha):
    if cmp_ord(alpha, delta) == LT:
        return _EMPTY
    if rule_tag(alpha) is None:
        raise InvalidTerm("no formation rule shapes %r" % (alpha,))
    # uniform clause {a} u K(a, pi) u K(vector components); the top-collapse
    # case needs K(a) too or comparison completeness fails (see ledger)
    a = alpha.a
    r = frozenset((a,)) | _k_delta(delta, a) | _k_delta(delta, alpha.pi)
    for g in alpha.nu_comps:
        r |= _k_delta(delta, g)
    return r


def k_delta_set(delta, items):
    """Pointwise union of K_delta over a collection of ordinal terms."""
    _check_delta(delta)
    r = _EMPTY
    for x in items:
        r |= _k_delta(delta, x)
    return r


def k_delta_exp(delta, x):
    """K_delta over an exponent term, via its components."""
    return k_delta_set(delta, k_components(x))


def kset_below(kset, beta):
    """True when every element of the set lies strictly below beta."""
    return all(cmp_ord(g, beta) == LT for g in kset)


def le_kset(beta, kset):
    """True when some element of the set is >= beta."""
    return any(cmp_ord(beta, g) <= EQ for g in kset)


def hull_member(gamma, delta, alpha):
    """The notation-level rendering of hull membership: K_delta(alpha) < gamma."""
    return kset_below(k_delta(delta, alpha), gamma)
