import pytest
from hypothesis import given, settings, strategies as st

from flagsplit.action import build_action
from flagsplit.bundled import available, bundled_text, load_bundled
from flagsplit.coinvariant import build_algebra
from flagsplit.groupring import (
    BudgetExceeded,
    GroupRingElement,
    GroupRingParseError,
    build_character_element,
    character_value,
    complement,
    gr_multiply,
    parse_gr,
    read_systems,
    search_idempotents,
    verify_system,
    write_systems,
)


def W_of(t):
    return build_algebra(t).W


def test_parse_examples():
    W = W_of("A2")
    c = parse_gr("1 + s[12] + s[21]", 2, W)
    assert c.coeffs == {0: 1, W.parse_word("12").index: 1, W.parse_word("21").index: 1}
    assert parse_gr("1", 5, W) == GroupRingElement.unit(W, 5)
    C = W_of("C2")
    c5 = parse_gr("1/8 * (1 + s[1] - s[212] - s[1212])", 3, C)
    # 8^{-1} = 2 mod 3
    assert c5 == parse_gr("2 + 2*s[1] + s[212] + s[1212]", 3, C)


def test_parse_syntax_variants():
    W = W_of("A2")
    ref = parse_gr("s[12] - 2*s[1]", 5, W)
    for text in ("s_{12} - 2 s_1", "s12 - 2*s1", "s[1]*s[2] + 3*s[1]", "-(2*s[1] - s[12])"):
        assert parse_gr(text, 5, W) == ref
    assert parse_gr("(1 + s[1])(1 + s[1])", 5, W) == parse_gr("2 + 2*s[1]", 5, W)


@pytest.mark.parametrize("text,p", [("1/3 + s[1]", 3), ("s[14]", 5), ("1 + ", 5), ("(1 + s[1]", 5), ("foo", 5)])
def test_parse_errors(text, p):
    with pytest.raises(GroupRingParseError):
        parse_gr(text, p, W_of("A2"))


def test_parse_rejects_composite_modulus():
    with pytest.raises((GroupRingParseError, ValueError)):
        parse_gr("1", 4, W_of("A2"))


def test_character_elements():
    G = W_of("G2")
    c1 = build_character_element(G, "trivial", "1/12", 5)
    assert c1 == load_bundled("G2", 5).elements[0]
    c4 = build_character_element(G, "sign_2", "1/12", 7)
    assert c4 == load_bundled("G2", 7).elements[3]
    assert character_value(G, "sign_2", G.parse_word("121")) == -1
    assert character_value(G, "sign", G.w0) == 1
    A1 = W_of("A1")
    e = build_character_element(A1, "sign", "1/2", 3)
    assert e == parse_gr("(1 - s[1])/2", 3, A1)
    assert gr_multiply(e, e) == e


@settings(max_examples=60, deadline=None)
@given(st.sampled_from([("A2", 3), ("C2", 5), ("G2", 2)]), st.data())
def test_convolution_ring_axioms(tp, data):
    t, p = tp
    W = W_of(t)
    coeff = st.dictionaries(st.integers(0, len(W) - 1), st.integers(0, p - 1), max_size=4)
    a, b, c = (GroupRingElement(W, p, data.draw(coeff)) for _ in range(3))
    one = GroupRingElement.unit(W, p)
    assert (a * b) * c == a * (b * c)
    assert one * a == a == a * one
    assert a * (b + c) == a * b + a * c
    assert (a + b) * c == a * c + b * c


def test_convolution_is_group_multiplication():
    W = W_of("A2")
    s1, s2 = (GroupRingElement.basis(W, 3, W.generator(i)) for i in (1, 2))
    assert s1 * s2 == GroupRingElement.basis(W, 3, W.parse_word("12"))
    assert s1 * s1 == GroupRingElement.unit(W, 3)


def test_verify_examples():
    W = W_of("A2")
    system = load_bundled("A2", 2)
    total = GroupRingElement(W, 2)
    for c in system:
        total = total + c
    assert total == GroupRingElement.unit(W, 2)
    assert verify_system(system.elements)["pass"]
    assert verify_system([GroupRingElement.unit(W, 7)])["pass"]
    su4 = load_bundled("A3", 3)
    assert len(su4) == 8 and verify_system(su4.elements)["pass"]


def test_verify_reports_failures():
    W = W_of("A2")
    x = parse_gr("1 + s[1]", 3, W)
    rep = verify_system([x])
    assert not rep["pass"]
    assert rep["ring_level"] == {"idempotent": False, "orthogonal": True, "sum_to_one": False}


def test_published_literals_that_need_normalising():
    # as printed, the SU(4) c1 satisfies x*x = 2*x and the Sp(2) c5 satisfies 2*y*y = y
    A3 = W_of("A3")
    x = parse_gr("(1 + s[1] + s[2] + s[12] + s[21] + s[121]) * (1 - s[12321])", 3, A3)
    assert gr_multiply(x, x) == 2 * x
    C = W_of("C2")
    for p in (3, 5):
        y = parse_gr("1/8 * (1 + s[1] - s[212] - s[1212])", p, C)
        assert 2 * gr_multiply(y, y) == y != gr_multiply(y, y)


@pytest.mark.parametrize("t,p", available())
def test_bundled_systems_verify_and_round_trip(t, p):
    alg = build_algebra(t, p)
    system = load_bundled(t, p)
    rep = verify_system(system.elements, alg, build_action(alg))
    assert all(rep["ring_level"].values())
    assert all(rep["operator_level"].values())
    [again] = read_systems(write_systems([system]), p, alg.W)
    assert again.elements == system.elements and again.names == system.names


def test_bundled_inventory():
    assert available() == [
        ("A2", 2), ("A2", 3), ("A3", 2), ("A3", 3),
        ("C2", 3), ("C2", 5), ("C2", 7),
        ("G2", 2), ("G2", 3), ("G2", 5), ("G2", 7),
    ]
    with pytest.raises(FileNotFoundError):
        bundled_text("A2", 5)


def test_read_systems_format():
    W = W_of("A2")
    text = """# two systems
a = 1 + s[12] + s[21]   # first
b = 1 - a

1
"""
    first, second = read_systems(text, 2, W)
    assert first.names == ["a", "b"]
    assert first.elements[1] == complement([first.elements[0]])
    assert second.elements == [GroupRingElement.unit(W, 2)]
    with pytest.raises(GroupRingParseError, match="line 2"):
        read_systems("1\ns[9]\n", 2, W)


def test_search_su3_p3():
    W = W_of("A2")
    span = [parse_gr(t, 3, W) for t in ("1", "s[121]")]
    [found] = search_idempotents(span, 3)
    assert set(found.elements) == {parse_gr("2 + s[121]", 3, W), parse_gr("2 + 2*s[121]", 3, W)}
    assert set(found.elements) == set(load_bundled("A2", 3).elements)


def test_search_unit_span():
    W = W_of("G2")
    for p in (2, 3, 5):
        [found] = search_idempotents([GroupRingElement.unit(W, p)], p)
        assert found.elements == [GroupRingElement.unit(W, p)]


def test_search_g2_p3():
    W = W_of("G2")
    span = [parse_gr(t, 3, W) for t in ("1", "s[1]", "s[21212]", "s[121212]")]
    found = search_idempotents(span, 3)
    assert set(found[0].elements) == set(load_bundled("G2", 3).elements)
    assert all(len(f) <= len(found[0]) for f in found)
    for f in found:
        assert verify_system(f.elements)["pass"]


@settings(max_examples=10, deadline=None)
@given(st.permutations(["1", "s[1]", "s[21212]", "s[121212]"]))
def test_search_is_order_independent(order):
    W = W_of("G2")
    ref = search_idempotents([parse_gr(t, 3, W) for t in ("1", "s[1]", "s[21212]", "s[121212]")], 3)
    got = search_idempotents([parse_gr(t, 3, W) for t in order], 3)
    assert [f.elements for f in got] == [f.elements for f in ref]


def test_search_budget():
    W = W_of("A3")
    span = [GroupRingElement.basis(W, 3, w) for w in list(W)[:16]]
    with pytest.raises(BudgetExceeded):
        search_idempotents(span, 3)
    with pytest.raises(BudgetExceeded):
        search_idempotents(span[:3], 3, budget=26)
