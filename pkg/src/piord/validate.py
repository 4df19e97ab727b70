"""Membership checking for ordinal and exponent terms.

``check_ot`` decides which formation rule built a term and verifies that
rule's side conditions bottom-up, producing a replayable report.  The
component sets and recorded coefficients live in :mod:`piord.order` and
:mod:`piord.terms`; this module re-exports them as the public surface.
"""

from dataclasses import dataclass
from typing import Optional, Tuple

from .terms import (
    BIG_K, E_ZERO, ZERO,
    BigKT, EOrd, EZeroT, LamSum, OmegaExp, OmegaIdx, Psi, Sum, Veblen, ZeroT,
    is_strongly_critical,
    k_components, m_at, m_profile, m_vec,
)
from .order import (
    EQ, GT, LT,
    cmp_exp, cmp_ord, k_delta, k_delta_exp, k_delta_set, kset_below,
    max_term, rule_tag, hull_member,
    PSI9, PSI10, PSI11, PSI12,
)
from .cnf import is_strict_exp, pairs, vec_sp
from .sd import in_sd
from .errors import NotMahloTerm

__all__ = [
    "ValidationReport", "check_ot", "check_exp", "m_vec", "k_delta",
    "hull_member", "rule_vs_series", "clear_validation_cache",
    "RULE_ATOM", "RULE_SUM", "RULE_VEBLEN", "RULE_OMEGA_EXP", "RULE_OMEGA_IDX",
]

RULE_ATOM = "Atom"
RULE_SUM = "Sum"
RULE_VEBLEN = "Veblen"
RULE_OMEGA_EXP = "OmegaExp"
RULE_OMEGA_IDX = "OmegaIdx"


@dataclass(frozen=True)
class ValidationReport:
    ok: bool
    rule: Optional[str]
    checks: Tuple[Tuple[str, bool, str], ...] = ()
    m_vec: Optional[Tuple] = None

    def first_failure(self):
        for name, passed, detail in self.checks:
            if not passed:
                return "%s: %s" % (name, detail) if detail else name
        return None


_OT_CACHE = {}
_EXP_CACHE = {}


def clear_validation_cache():
    _OT_CACHE.clear()
    _EXP_CACHE.clear()


def check_ot(t, params):
    """Validate t as a member of the notation system for the given N."""
    key = (t, params.n)
    rep = _OT_CACHE.get(key)
    if rep is None:
        rep = _check_ot(t, params)
        _OT_CACHE[key] = rep
    return rep


def check_exp(x, params):
    """Validate x as a member of the strict exponent grammar."""
    key = (x, params.n)
    rep = _EXP_CACHE.get(key)
    if rep is None:
        rep = _check_exp(x, params)
        _EXP_CACHE[key] = rep
    return rep


def _fail(rule, name, detail=""):
    return ValidationReport(False, rule, ((name, False, detail),))


def _ok(rule, checks, mv=None):
    return ValidationReport(True, rule, tuple(checks), mv)


def _check_ot(t, params):
    if isinstance(t, (ZeroT, BigKT)):
        return _ok(RULE_ATOM, [("atom", True, "")], m_vec(t, params))
    if isinstance(t, Sum):
        return _check_sum(t, params)
    if isinstance(t, Veblen):
        return _check_veblen(t, params)
    if isinstance(t, OmegaExp):
        return _check_omega_exp(t, params)
    if isinstance(t, OmegaIdx):
        return _check_omega_idx(t, params)
    if isinstance(t, Psi):
        return _check_psi(t, params)
    return _fail(None, "unknown node", repr(t))


def _sub_ok(rule, t, params):
    if not check_ot(t, params).ok:
        return _fail(rule, "subterm", "invalid subterm %r" % (t,))
    return None


def _check_sum(t, params):
    for p in t.parts:
        bad = _sub_ok(RULE_SUM, p, params)
        if bad:
            return bad
    for a, b in zip(t.parts, t.parts[1:]):
        if cmp_ord(a, b) == LT:
            return _fail(RULE_SUM, "weakly decreasing",
                         "%r < %r" % (a, b))
    return _ok(RULE_SUM, [("weakly decreasing", True, "")],
               m_vec(t, params))


def _check_veblen(t, params):
    for x in (t.b, t.g):
        bad = _sub_ok(RULE_VEBLEN, x, params)
        if bad:
            return bad
        if cmp_ord(x, BIG_K) != LT:
            return _fail(RULE_VEBLEN, "args below top", repr(x))
    # normal form: the value must exceed both arguments
    if isinstance(t.g, Veblen) and cmp_ord(t.g.b, t.b) == GT:
        return _fail(RULE_VEBLEN, "normal form",
                     "second argument is a fixed point of the first level")
    if is_strongly_critical(t.g) and cmp_ord(t.b, t.g) == LT:
        return _fail(RULE_VEBLEN, "normal form",
                     "strongly critical second argument absorbs")
    if t.g is ZERO and is_strongly_critical(t.b):
        return _fail(RULE_VEBLEN, "normal form",
                     "value collapses to the first argument")
    return _ok(RULE_VEBLEN, [("normal form", True, "")], m_vec(t, params))


def _check_omega_exp(t, params):
    bad = _sub_ok(RULE_OMEGA_EXP, t.b, params)
    if bad:
        return bad
    if cmp_ord(t.b, BIG_K) != GT:
        return _fail(RULE_OMEGA_EXP, "exponent above top", repr(t.b))
    return _ok(RULE_OMEGA_EXP, [("exponent above top", True, "")],
               m_vec(t, params))


def _check_omega_idx(t, params):
    bad = _sub_ok(RULE_OMEGA_IDX, t.b, params)
    if bad:
        return bad
    if t.b is ZERO or cmp_ord(t.b, BIG_K) != LT:
        return _fail(RULE_OMEGA_IDX, "index in range", repr(t.b))
    if isinstance(t.b, Psi):
        return _fail(RULE_OMEGA_IDX, "normal form",
                     "psi indices are fixed points")
    return _ok(RULE_OMEGA_IDX, [("index in range", True, "")],
               m_vec(t, params))


def _check_exp(x, params):
    if isinstance(x, EZeroT):
        return _ok("EZero", [("zero", True, "")])
    if isinstance(x, EOrd):
        if not check_ot(x.a, params).ok:
            return _fail("EOrd", "subterm", repr(x.a))
        return _ok("EOrd", [("positive ordinal", True, "")])
    assert isinstance(x, LamSum)
    if not is_strict_exp(x):
        return _fail("LamSum", "nonzero exponents",
                     "zero base-power inside a sum")
    prev = None
    for e, c in x.pairs:
        if not check_exp(e, params).ok:
            return _fail("LamSum", "subterm", repr(e))
        if not check_ot(c, params).ok or c is ZERO:
            return _fail("LamSum", "coefficient", repr(c))
        if prev is not None and cmp_exp(prev, e) != GT:
            return _fail("LamSum", "strictly decreasing",
                         "%r then %r" % (prev, e))
        prev = e
    return _ok("LamSum", [("strictly decreasing", True, "")])


# ---------------------------------------------------------------------------
# psi formation
# ---------------------------------------------------------------------------

def _check_psi(t, params):
    n = params.n
    if len(t.nu) != n - 2:
        return _fail(None, "arity",
                     "coefficient vector has length %d, need %d"
                     % (len(t.nu), n - 2))
    bad = _sub_ok(None, t.pi, params) or _sub_ok(None, t.a, params)
    if bad:
        return bad
    for e in t.nu:
        if not check_exp(e, params).ok:
            return _fail(None, "coefficient entry", repr(e))
    tag = rule_tag(t)
    if tag is PSI9:
        return _check_psi9(t, params)
    if tag is PSI10:
        return _check_psi10(t, params)
    if tag is PSI11:
        return _check_psi11(t, params)
    if tag is PSI12:
        return _check_psi12(t, params)
    return _fail(None, "formation rule",
                 "no psi rule matches base %r with this vector" % (t.pi,))


def _is_regular(pi):
    if pi is BIG_K:
        return True
    if isinstance(pi, (OmegaIdx, Psi)):
        return bool(m_profile(pi))
    return False


def _check_psi9(t, params):
    checks = []
    reg = _is_regular(t.pi)
    checks.append(("regular base", reg, repr(t.pi)))
    if not reg:
        return ValidationReport(False, PSI9, tuple(checks))
    ks = k_delta_set(t, (t.pi, t.a))
    cond = kset_below(ks, t.a)
    checks.append(("K(pi,a) < a", cond, _kset_repr(ks)))
    if not cond:
        return ValidationReport(False, PSI9, tuple(checks))
    return _ok(PSI9, checks, t.nu)


def _check_psi10(t, params):
    checks = []
    b = t.nu[-1].a
    cond = cmp_ord(b, t.a) <= EQ
    checks.append(("0 < b <= a", cond, "b=%r a=%r" % (b, t.a)))
    if not cond:
        return ValidationReport(False, PSI10, tuple(checks))
    ks = k_delta_set(t, (b, t.a))
    cond = kset_below(ks, t.a)
    checks.append(("K(b,a) < a", cond, _kset_repr(ks)))
    if not cond:
        return ValidationReport(False, PSI10, tuple(checks))
    return _ok(PSI10, checks, t.nu)


def _check_psi11(t, params):
    checks = []
    pi = t.pi
    prof = m_profile(pi)
    j = prof[-1]                       # position of the last non-zero m
    k = j - 1
    if not 2 <= k <= params.n - 2:
        return _fail(PSI11, "position", "k=%d" % k)
    # vector must copy m(pi) strictly below k and vanish strictly above
    for i in params.logical_indices():
        if i < k and t.nu[i - 2] is not m_at(pi, i):
            return _fail(PSI11, "vector prefix",
                         "entry %d differs from base coefficient" % i)
        if i > k and t.nu[i - 2] is not E_ZERO:
            return _fail(PSI11, "vector tail", "entry %d non-zero" % i)
    mk = m_at(pi, k)
    mk1 = m_at(pi, j)
    ps_k = pairs(t.nu[k - 2])
    ps_m = pairs(mk)
    shape = (len(ps_k) == len(ps_m) + 1 and ps_k[:len(ps_m)] == ps_m
             and ps_k[-1][0] is mk1)
    checks.append(("entry k = m_k + base-power", shape, ""))
    if not shape:
        return ValidationReport(False, PSI11, tuple(checks))
    b = ps_k[-1][1]
    cond = cmp_ord(b, t.a) <= EQ
    checks.append(("0 < b <= a", cond, "b=%r a=%r" % (b, t.a)))
    if not cond:
        return ValidationReport(False, PSI11, tuple(checks))
    ks = k_delta_set(t, (pi, t.a, b))
    for g in _mvec_components(pi, params):
        ks |= k_delta(t, g)
    cond = kset_below(ks, t.a)
    checks.append(("K(pi,a,b) u K(K(m(pi))) < a", cond, _kset_repr(ks)))
    if not cond:
        return ValidationReport(False, PSI11, tuple(checks))
    return _ok(PSI11, checks, t.nu)


def _mvec_components(pi, params):
    out = frozenset()
    for i in params.logical_indices():
        out |= k_components(m_at(pi, i))
    return out


def _check_psi12(t, params):
    checks = []
    pi = t.pi
    d = in_sd(t.nu)
    checks.append(("vector in SD", d is not None, ""))
    if d is None:
        return ValidationReport(False, PSI12, tuple(checks))
    m2 = m_at(pi, 2)
    cond = vec_sp(t.nu, m2)
    checks.append(("vector sp-below m_2(pi)", cond, repr(m2)))
    if not cond:
        return ValidationReport(False, PSI12, tuple(checks))
    ks = k_delta_set(t, (pi, t.a))
    cond = kset_below(ks, t.a)
    checks.append(("K(pi,a) < a", cond, _kset_repr(ks)))
    if not cond:
        return ValidationReport(False, PSI12, tuple(checks))
    # each non-zero entry's components must not all collapse below the stage
    for i, e in enumerate(t.nu):
        if e is E_ZERO:
            continue
        comps = k_components(e)
        top = max_term(comps)
        cond = kset_below(k_delta_exp(t, e), top)
        checks.append(("K_a(nu_%d) < max K(nu_%d)" % (i + 2, i + 2),
                       cond, repr(top)))
        if not cond:
            return ValidationReport(False, PSI12, tuple(checks))
    return _ok(PSI12, checks, t.nu)


def _kset_repr(ks):
    if not ks:
        return "{}"
    return "{" + ", ".join(sorted(repr(g) for g in ks)) + "}"


# ---------------------------------------------------------------------------
# Collapsing-series classification
# ---------------------------------------------------------------------------

def rule_vs_series(t, params):
    """True when the pd-chain length matches the formation rule of a
    psi term with non-zero coefficients."""
    from .terms import collapsing_series
    if not isinstance(t, Psi) or t.nu_zero:
        raise NotMahloTerm(repr(t))
    rep = check_ot(t, params)
    if not rep.ok:
        raise NotMahloTerm("unvalidated term %r" % (t,))
    series = collapsing_series(t)
    L = len(series) - 1
    if L == 1:
        expected = PSI10
    elif (L - 1) % (params.n - 2) == 0:
        expected = PSI12
    else:
        expected = PSI11
    return rep.rule == expected
