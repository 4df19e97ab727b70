"""Concrete syntax: a whitespace-insensitive grammar with decimal sugar.

    ord  := "0" | "K" | prin ("+" prin)*
    prin := "phi(" ord "," ord ")" | "w^(" ord ")" | "Om(" ord ")"
          | "psi(" ord ";" ord ")" | "psi(" ord ";" "[" exp ("," exp)* "]" ";" ord ")"
    exp  := "0" | ord | lam ("+" lam)*
    lam  := "L^(" exp ")*(" ord ")"

Decimal literals abbreviate finite sums of phi(0,0).  Parsing is structural:
normal-form side conditions are left to validation, so ``check`` can report
on ill-formed input.
"""

from .errors import ArityError, OrdSyntaxError
from .terms import (
    BIG_K, E_ZERO, ONE, ZERO,
    BigKT, EOrd, EZeroT, OmegaExp, OmegaIdx, Psi, Sum, Veblen, ZeroT,
    mk_eord, mk_lamsum, mk_omega_exp, mk_omega_idx, mk_psi, mk_sum, mk_veblen,
)

__all__ = ["parse_ord", "parse_exp", "parse_seq", "print_ord", "print_exp",
           "print_seq"]


# ---------------------------------------------------------------------------
# Printing
# ---------------------------------------------------------------------------

def print_ord(t):
    if isinstance(t, ZeroT):
        return "0"
    if isinstance(t, BigKT):
        return "K"
    parts = t.parts if isinstance(t, Sum) else (t,)
    # coalesce the maximal run of trailing ones into a decimal literal
    k = len(parts)
    while k > 0 and parts[k - 1] is ONE:
        k -= 1
    chunks = [_print_principal(p) for p in parts[:k]]
    ones = len(parts) - k
    if ones:
        chunks.append(str(ones))
    return "+".join(chunks)


def _print_principal(t):
    if isinstance(t, Veblen):
        return "phi(%s,%s)" % (print_ord(t.b), print_ord(t.g))
    if isinstance(t, OmegaExp):
        return "w^(%s)" % print_ord(t.b)
    if isinstance(t, OmegaIdx):
        return "Om(%s)" % print_ord(t.b)
    if isinstance(t, Psi):
        if t.nu_zero:
            return "psi(%s; %s)" % (print_ord(t.pi), print_ord(t.a))
        return "psi(%s; %s; %s)" % (
            print_ord(t.pi), print_seq(t.nu), print_ord(t.a))
    if isinstance(t, BigKT):
        return "K"
    raise ValueError("not a principal term: %r" % (t,))


def print_exp(x):
    if isinstance(x, EZeroT):
        return "0"
    if isinstance(x, EOrd):
        return print_ord(x.a)
    return "+".join("L^(%s)*(%s)" % (print_exp(e), print_ord(c))
                    for e, c in x.pairs)


def print_seq(vec):
    return "[%s]" % ",".join(print_exp(e) for e in vec)


# ---------------------------------------------------------------------------
# Parsing
# ---------------------------------------------------------------------------

class _Parser:
    def __init__(self, text, params):
        self.text = text
        self.n = params.n
        self.pos = 0
        # psi terms spelled with an explicit all-zero vector: the spelling
        # claims a coefficient-carrying rule, which `check` must refute
        self.zero_claims = []

    def error(self, message, pos=None):
        raise OrdSyntaxError(message, self.pos if pos is None else pos)

    def skip_ws(self):
        while self.pos < len(self.text) and self.text[self.pos].isspace():
            self.pos += 1

    def peek(self):
        self.skip_ws()
        return self.text[self.pos] if self.pos < len(self.text) else ""

    def looking_at(self, lit):
        self.skip_ws()
        return self.text.startswith(lit, self.pos)

    def expect(self, lit):
        if not self.looking_at(lit):
            self.error("expected %r" % lit)
        self.pos += len(lit)

    def at_end(self):
        self.skip_ws()
        return self.pos >= len(self.text)

    # -- ord ----------------------------------------------------------------

    def ord(self):
        parts = [self.ord_chunk()]
        while self.looking_at("+"):
            self.expect("+")
            parts.append(self.ord_chunk())
        if len(parts) == 1:
            return parts[0]
        flat = []
        for p in parts:
            if isinstance(p, Sum):
                flat.extend(p.parts)
            elif isinstance(p, ZeroT):
                self.error("zero cannot appear inside a sum")
            else:
                flat.append(p)
        return mk_sum(flat)

    def ord_chunk(self):
        c = self.peek()
        if c.isdigit():
            return self.number()
        if c == "K":
            self.expect("K")
            return BIG_K
        return self.principal()

    def number(self):
        self.skip_ws()
        start = self.pos
        while self.pos < len(self.text) and self.text[self.pos].isdigit():
            self.pos += 1
        k = int(self.text[start:self.pos])
        if k == 0:
            return ZERO
        if k == 1:
            return ONE
        return mk_sum((ONE,) * k)

    def principal(self):
        if self.looking_at("phi("):
            self.expect("phi(")
            b = self.ord()
            self.expect(",")
            g = self.ord()
            self.expect(")")
            return mk_veblen(b, g)
        if self.looking_at("w^("):
            self.expect("w^(")
            b = self.ord()
            self.expect(")")
            return mk_omega_exp(b)
        if self.looking_at("Om("):
            self.expect("Om(")
            b = self.ord()
            self.expect(")")
            return mk_omega_idx(b)
        if self.looking_at("psi("):
            return self.psi()
        self.error("expected a term")

    def psi(self):
        self.expect("psi(")
        pi = self.ord()
        self.expect(";")
        if self.looking_at("["):
            nu = self.seq()
            self.expect(";")
            a = self.ord()
            self.expect(")")
            t = mk_psi(pi, nu, a)
            if all(e is E_ZERO for e in nu):
                self.zero_claims.append(t)
            return t
        a = self.ord()
        self.expect(")")
        return mk_psi(pi, (E_ZERO,) * (self.n - 2), a)

    # -- exponents ------------------------------------------------------------

    def seq(self):
        start = self.pos
        self.expect("[")
        entries = [self.exp()]
        while self.looking_at(","):
            self.expect(",")
            entries.append(self.exp())
        self.expect("]")
        if len(entries) != self.n - 2:
            raise ArityError(
                "coefficient vector has %d entries, need %d for N=%d"
                % (len(entries), self.n - 2, self.n), start)
        return tuple(entries)

    def exp(self):
        if self.looking_at("L^("):
            ps = [self.lam()]
            while self.looking_at("+") and self.looking_at_lam_after_plus():
                self.expect("+")
                ps.append(self.lam())
            return mk_lamsum(tuple(ps))
        a = self.ord()
        return E_ZERO if isinstance(a, ZeroT) else mk_eord(a)

    def looking_at_lam_after_plus(self):
        save = self.pos
        self.expect("+")
        ok = self.looking_at("L^(")
        self.pos = save
        return ok

    def lam(self):
        start = self.pos
        self.expect("L^(")
        e = self.exp()
        if isinstance(e, EZeroT):
            self.error("zero base-power exponent is not a term", start)
        self.expect(")*(")
        c = self.ord()
        if isinstance(c, ZeroT):
            self.error("zero base-power coefficient is not a term", start)
        self.expect(")")
        return (e, c)


def parse_ord(text, params):
    """Parse an ordinal term; raises on leftover input."""
    return parse_ord_claims(text, params)[0]


def parse_ord_claims(text, params):
    """Parse an ordinal term; also return the psi subterms whose spelling
    carried an explicit all-zero coefficient vector."""
    p = _Parser(text, params)
    t = p.ord()
    if not p.at_end():
        p.error("unexpected trailing input")
    return t, tuple(p.zero_claims)


def parse_exp(text, params):
    """Parse an exponent term."""
    p = _Parser(text, params)
    x = p.exp()
    if not p.at_end():
        p.error("unexpected trailing input")
    return x


def parse_seq(text, params):
    """Parse a bracketed coefficient vector."""
    p = _Parser(text, params)
    vec = p.seq()
    if not p.at_end():
        p.error("unexpected trailing input")
    return vec
