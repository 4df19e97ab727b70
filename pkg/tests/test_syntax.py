import pytest
from hypothesis import given, settings, strategies as st

from piord.errors import ArityError, OrdSyntaxError
from piord.params import SystemParams
from piord.terms import BIG_K, E_ZERO, ONE, ZERO, mk_eord
from piord.syntax import parse_ord, parse_seq, print_ord, print_seq
from piord.arith import from_int, psi0

P3 = SystemParams(3)
P4 = SystemParams(4)


def test_atoms_and_numbers():
    assert parse_ord("0", P4) is ZERO
    assert parse_ord("K", P4) is BIG_K
    assert parse_ord("1", P4) is ONE
    assert parse_ord("3", P4) is from_int(3)
    assert print_ord(from_int(3)) == "3"


def test_whitespace_insensitive():
    a = parse_ord("psi( K ;  [ 0 , 1 ] ; 1 )", P4)
    b = parse_ord("psi(K;[0,1];1)", P4)
    assert a is b


def test_psi_sugar():
    t = parse_ord("psi(K; 0)", P4)
    assert t.nu == (E_ZERO, E_ZERO)
    t3 = parse_ord("psi(K; 0)", P3)
    assert t3.nu == (E_ZERO,)


def test_decimal_coalescing():
    t = parse_ord("K+2", P4)
    assert print_ord(t) == "K+2"
    assert parse_ord(print_ord(t), P4) is t


def test_bound_print_form():
    from piord.arith import theorem_bound
    assert print_ord(theorem_bound(1, P4)) == "psi(Om(1); w^(K+1))"


def test_seq_parse():
    vec = parse_seq("[L^(1)*(2),0]", P4)
    assert vec[1] is E_ZERO
    assert print_seq(vec) == "[L^(1)*(2),0]"


def test_arity_error():
    with pytest.raises(ArityError):
        parse_ord("psi(K; [0]; 1)", P4)
    with pytest.raises(ArityError):
        parse_ord("psi(K; [0,1]; 1)", P3)


def test_zero_lambda_exponent_rejected():
    with pytest.raises(OrdSyntaxError):
        parse_ord("psi(K; [L^(1)*(2)+L^(0)*(1),0]; 1)", P4)


def test_syntax_errors_have_positions():
    with pytest.raises(OrdSyntaxError) as exc:
        parse_ord("phi(0;0)", P4)
    assert exc.value.pos >= 0
    with pytest.raises(OrdSyntaxError):
        parse_ord("K+", P4)
    with pytest.raises(OrdSyntaxError):
        parse_ord("K K", P4)
    with pytest.raises(OrdSyntaxError):
        parse_ord("0+K", P4)


@settings(max_examples=400, deadline=None)
@given(data=st.data())
def test_roundtrip_corpus4(data, corpus4):
    t = data.draw(st.sampled_from(corpus4.terms))
    assert parse_ord(print_ord(t), P4) is t


@settings(max_examples=200, deadline=None)
@given(data=st.data())
def test_roundtrip_corpus3(data, corpus3):
    t = data.draw(st.sampled_from(corpus3.terms))
    assert parse_ord(print_ord(t), P3) is t
