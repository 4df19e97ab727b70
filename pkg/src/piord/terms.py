"""Hash-consed term nodes for the notation system and its exponent algebra.

Ordinal terms (class ``Ord``) name ordinals below the big epsilon base;
exponent terms (class ``Exp``) name ordinals below the next epsilon number,
written in Cantor normal form with the big base.  All nodes are interned:
building the same shape twice returns the same object, so equality is
identity and terms key dicts at pointer speed.

Raw factories (``mk_*``) perform only structural sanity checks; normal-form
side conditions live in :mod:`piord.validate` and normalizing constructors
in :mod:`piord.arith`.
"""

import threading

from .errors import MalformedChain

__all__ = [
    "Ord", "ZeroT", "BigKT", "Sum", "Veblen", "OmegaExp", "OmegaIdx", "Psi",
    "Exp", "EZeroT", "EOrd", "LamSum",
    "ZERO", "BIG_K", "ONE", "E_ZERO", "E_ONE",
    "mk_sum", "mk_veblen", "mk_omega_exp", "mk_omega_idx", "mk_psi",
    "mk_eord", "mk_lamsum",
    "term_size", "is_principal", "is_strongly_critical", "is_successor_term",
    "zero_vec", "is_zero_vec", "strip_zeros",
    "k_components", "k_components_vec",
    "m_at", "m_profile",
    "pd", "pd_iter", "collapsing_series", "prec", "prec_eq",
    "all_subterms",
]


# ---------------------------------------------------------------------------
# Node classes
# ---------------------------------------------------------------------------

class Ord:
    """Base class of ordinal term nodes."""
    __slots__ = ("size",)


class ZeroT(Ord):
    __slots__ = ()

    def __repr__(self):
        return "0"


class BigKT(Ord):
    __slots__ = ()

    def __repr__(self):
        return "K"


class Sum(Ord):
    """Non-empty sum of at least two principal terms, weakly decreasing."""
    __slots__ = ("parts",)

    def __repr__(self):
        return "+".join(repr(p) for p in self.parts)


class Veblen(Ord):
    __slots__ = ("b", "g")

    def __repr__(self):
        return "phi(%r,%r)" % (self.b, self.g)


class OmegaExp(Ord):
    """omega**b for b above the top regular term."""
    __slots__ = ("b",)

    def __repr__(self):
        return "w^(%r)" % (self.b,)


class OmegaIdx(Ord):
    """Om_b for 0 < b below the top regular term."""
    __slots__ = ("b",)

    def __repr__(self):
        return "Om(%r)" % (self.b,)


class Psi(Ord):
    """Collapsing term psi_pi^nu(a); nu is a tuple of Exp, length N - 2."""
    __slots__ = ("pi", "nu", "a", "nu_comps", "nu_zero")

    def __repr__(self):
        if self.nu_zero:
            return "psi(%r;%r)" % (self.pi, self.a)
        return "psi(%r;[%s];%r)" % (
            self.pi, ",".join(repr(e) for e in self.nu), self.a)


class Exp:
    """Base class of exponent term nodes."""
    __slots__ = ("size", "comps")


class EZeroT(Exp):
    __slots__ = ()

    def __repr__(self):
        return "0"


class EOrd(Exp):
    """A positive ordinal term viewed as an exponent (base-power zero)."""
    __slots__ = ("a",)

    def __repr__(self):
        return repr(self.a)


class LamSum(Exp):
    """Sum of base-powers: pairs (exponent, coefficient), exponents strictly
    decreasing.  The strict grammar requires all exponents non-zero; a
    trailing zero-exponent pair is tolerated internally for CNF arithmetic
    (such values never validate as coefficient entries)."""
    __slots__ = ("pairs",)

    def __repr__(self):
        return "+".join("L^(%r)*(%r)" % (e, c) for e, c in self.pairs)


# ---------------------------------------------------------------------------
# Interning
# ---------------------------------------------------------------------------

_POOL = {}
_POOL_LOCK = threading.Lock()


def _intern(key, build):
    t = _POOL.get(key)
    if t is None:
        # lock only the miss path so concurrent builders agree on one node
        with _POOL_LOCK:
            t = _POOL.get(key)
            if t is None:
                t = build()
                _POOL[key] = t
    return t


def _new(cls):
    return object.__new__(cls)


def _mk_atom(cls):
    t = _new(cls)
    t.size = 1
    return t


ZERO = _mk_atom(ZeroT)
BIG_K = _mk_atom(BigKT)
E_ZERO = _new(EZeroT)
E_ZERO.size = 1
E_ZERO.comps = frozenset()


def mk_sum(parts):
    parts = tuple(parts)
    assert len(parts) >= 2, "a sum needs at least two parts"
    for p in parts:
        assert isinstance(p, Ord) and not isinstance(p, (ZeroT, Sum)), \
            "sum parts must be principal terms"

    def build():
        t = _new(Sum)
        t.parts = parts
        t.size = sum(p.size for p in parts) + len(parts) - 1
        return t

    return _intern(("+",) + parts, build)


def mk_veblen(b, g):
    def build():
        t = _new(Veblen)
        t.b, t.g = b, g
        t.size = 1 + b.size + g.size
        return t

    return _intern(("phi", b, g), build)


def mk_omega_exp(b):
    def build():
        t = _new(OmegaExp)
        t.b = b
        t.size = 1 + b.size
        return t

    return _intern(("w", b), build)


def mk_omega_idx(b):
    def build():
        t = _new(OmegaIdx)
        t.b = b
        t.size = 1 + b.size
        return t

    return _intern(("Om", b), build)


def mk_psi(pi, nu, a):
    nu = tuple(nu)
    assert all(isinstance(e, Exp) for e in nu)

    def build():
        t = _new(Psi)
        t.pi, t.nu, t.a = pi, nu, a
        # zero coefficient entries are notation padding and cost no symbols
        t.size = 1 + pi.size + a.size + sum(
            e.size for e in nu if e is not E_ZERO)
        t.nu_zero = all(e is E_ZERO for e in nu)
        t.nu_comps = k_components_vec(nu)
        return t

    return _intern(("psi", pi, nu, a), build)


def mk_eord(a):
    assert isinstance(a, Ord) and a is not ZERO, "EOrd wraps positive terms"

    def build():
        t = _new(EOrd)
        t.a = a
        t.size = a.size
        t.comps = frozenset((a,))
        return t

    return _intern(("e", a), build)


def mk_lamsum(pairs):
    pairs = tuple(pairs)
    assert pairs, "a base-power sum needs at least one pair"
    assert not (len(pairs) == 1 and pairs[0][0] is E_ZERO), \
        "a single zero-exponent pair is an EOrd"

    def build():
        t = _new(LamSum)
        t.pairs = pairs
        t.size = sum(1 + e.size + c.size for e, c in pairs) + len(pairs) - 1
        cs = set()
        for e, c in pairs:
            cs.add(c)
            cs |= k_components(e)
        t.comps = frozenset(cs)
        return t

    return _intern(("L",) + pairs, build)


ONE = mk_veblen(ZERO, ZERO)          # the canonical 1 = phi(0,0)
E_ONE = mk_eord(ONE)


# ---------------------------------------------------------------------------
# Structural queries
# ---------------------------------------------------------------------------

def term_size(t):
    """Number of grammar-symbol occurrences in t (zero coefficient padding
    in psi terms costs nothing)."""
    return t.size


def is_principal(t):
    return isinstance(t, Ord) and not isinstance(t, (ZeroT, Sum))


def is_strongly_critical(t):
    """Terms naming hull-closed ordinals: the top term, Om- and psi-terms."""
    return isinstance(t, (BigKT, OmegaIdx, Psi))


def is_successor_term(t):
    """True when t names a successor ordinal: its CNF tail is 1."""
    if t is ONE:
        return True
    return isinstance(t, Sum) and t.parts[-1] is ONE


def zero_vec(n):
    """The all-zero coefficient vector for parameter N = n."""
    return (E_ZERO,) * (n - 2)


def is_zero_vec(vec):
    return all(e is E_ZERO for e in vec)


def strip_zeros(vec):
    """Drop trailing zero entries (the ``*0`` padding convention)."""
    k = len(vec)
    while k > 0 and vec[k - 1] is E_ZERO:
        k -= 1
    return tuple(vec[:k])


def k_components(x):
    """K(x): the finite set of ordinal-term components of an exponent."""
    return x.comps


def k_components_vec(vec):
    out = frozenset()
    for e in vec:
        out |= e.comps
    return out


# ---------------------------------------------------------------------------
# Recorded coefficients m_k
# ---------------------------------------------------------------------------

def m_at(t, i):
    """The coefficient recorded at logical position i >= 2 of t.

    Undefined for the top regular term (callers special-case it).
    """
    assert t is not BIG_K, "m-vector of the top term is not defined"
    if isinstance(t, Psi):
        j = i - 2
        return t.nu[j] if 0 <= j < len(t.nu) else E_ZERO
    if isinstance(t, OmegaIdx) and i == 2 and is_successor_term(t.b):
        return E_ONE
    return E_ZERO


def m_profile(t):
    """Logical positions at which t carries a non-zero coefficient."""
    assert t is not BIG_K
    if isinstance(t, Psi):
        return tuple(i + 2 for i, e in enumerate(t.nu) if e is not E_ZERO)
    if isinstance(t, OmegaIdx) and is_successor_term(t.b):
        return (2,)
    return ()


def m_vec(t, params):
    """The full recorded coefficient vector of t, or None for the top term."""
    if t is BIG_K:
        return None
    if isinstance(t, Psi):
        return t.nu
    vec = zero_vec(params.n)
    if isinstance(t, OmegaIdx) and is_successor_term(t.b):
        return (E_ONE,) + vec[1:]
    return vec


# ---------------------------------------------------------------------------
# Predecessors and collapsing series
# ---------------------------------------------------------------------------

def pd(t):
    """The collapse base of a psi term; None for anything else."""
    return t.pi if isinstance(t, Psi) else None


def pd_iter(t, k):
    """pd applied k times; None once the chain leaves psi terms."""
    for _ in range(k):
        if not isinstance(t, Psi):
            return None
        t = t.pi
    return t


def collapsing_series(t):
    """The chain (pi_0, ..., pi_L) with pi_L = t, pi_i = pd(pi_{i+1}) and
    pi_0 the top regular term.  Fails when the chain leaves psi terms before
    reaching the top."""
    if not isinstance(t, Psi):
        raise MalformedChain("collapsing series requires a psi term: %r" % (t,))
    chain = [t]
    cur = t
    while isinstance(cur, Psi):
        cur = cur.pi
        chain.append(cur)
    if cur is not BIG_K:
        raise MalformedChain(
            "pd chain of %r stops at %r before the top term" % (t, cur))
    chain.reverse()
    return chain


def prec(s, t):
    """True when t = pd^(n)(s) for some n >= 1."""
    cur = s
    while isinstance(cur, Psi):
        cur = cur.pi
        if cur is t:
            return True
    return False


def prec_eq(s, t):
    return s is t or prec(s, t)


def all_subterms(t):
    """Every ordinal term occurring in t, including t itself."""
    seen = set()
    stack = [t]
    while stack:
        cur = stack.pop()
        if cur in seen:
            continue
        if isinstance(cur, Ord):
            seen.add(cur)
        if isinstance(cur, Sum):
            stack.extend(cur.parts)
        elif isinstance(cur, Veblen):
            stack.append(cur.b)
            stack.append(cur.g)
        elif isinstance(cur, (OmegaExp, OmegaIdx)):
            stack.append(cur.b)
        elif isinstance(cur, Psi):
            stack.append(cur.pi)
            stack.append(cur.a)
            stack.extend(cur.nu)
        elif isinstance(cur, EOrd):
            stack.append(cur.a)
        elif isinstance(cur, LamSum):
            for e, c in cur.pairs:
                stack.append(e)
                stack.append(c)
    return seen
