import pytest

from u4codes import GF


def test_rejects_composite_characteristic():
    with pytest.raises(ValueError):
        GF(4)
    with pytest.raises(ValueError):
        GF(1)


def test_generated_moduli_are_the_smallest_irreducibles():
    assert GF(2).modulus == (0, 1)
    assert GF(2, 2).modulus == (1, 1, 1)       # y^2 + y + 1
    assert GF(2, 3).modulus == (1, 1, 0, 1)    # y^3 + y + 1
    assert GF(3, 2).modulus == (1, 0, 1)       # y^2 + 1
    assert GF(2, 4).modulus == (1, 1, 0, 0, 1)


def test_rejects_reducible_modulus():
    with pytest.raises(ValueError):
        GF(2, 2, modulus=(1, 0, 1))   # y^2 + 1 = (y + 1)^2
    with pytest.raises(ValueError):
        GF(2, 3, modulus=(1, 1, 0))   # not monic of degree 3


def test_gf2_basics(gf2):
    assert gf2.add(1, 1) == 0
    assert gf2.inv(1) == 1
    assert gf2.mul(1, 1) == 1


def test_gf4_table():
    gf4 = GF(2, 2)
    # y * y = y + 1 since y^2 + y + 1 = 0
    assert gf4.mul(2, 2) == 3
    assert gf4.mul(2, 3) == 1      # y * (y + 1) = y^2 + y = 1
    assert gf4.inv(2) == 3


def test_encoding_bijection(gf8):
    seen = {gf8.from_coeffs(gf8.coeffs(a)) for a in range(gf8.q)}
    assert seen == set(range(gf8.q))
    assert gf8.coeffs(0) == (0, 0, 0)
    assert gf8.coeffs(1) == (1, 0, 0)


def test_field_axioms_randomized(rng):
    for gf in (GF(2), GF(3), GF(5), GF(2, 2), GF(2, 3), GF(3, 2)):
        for _ in range(200):
            a = rng.randrange(gf.q)
            b = rng.randrange(gf.q)
            c = rng.randrange(gf.q)
            assert gf.add(a, b) == gf.add(b, a)
            assert gf.mul(a, b) == gf.mul(b, a)
            assert gf.mul(a, gf.add(b, c)) == gf.add(gf.mul(a, b), gf.mul(a, c))
            assert gf.mul(gf.mul(a, b), c) == gf.mul(a, gf.mul(b, c))
            assert gf.sub(gf.add(a, b), b) == a
            if a:
                assert gf.mul(a, gf.inv(a)) == 1
                assert gf.pow(a, gf.q - 1) == 1


def test_inversion_of_zero(gf3):
    with pytest.raises(ZeroDivisionError):
        gf3.inv(0)


def test_slow_path_agrees_with_tables(rng):
    gf = GF(3, 2)
    for _ in range(100):
        a, b = rng.randrange(9), rng.randrange(9)
        assert gf.mul(a, b) == gf._mul_slow(a, b)
        assert gf.add(a, b) == gf._add_slow(a, b)
        assert gf.sub(a, b) == gf._sub_slow(a, b)
        if a:
            assert gf.inv(a) == gf._inv_slow(a)


def test_element_str():
    gf = GF(2, 3)
    assert gf.element_str(5) == "5"
    assert gf.element_str(5, poly_basis=True) == "y^2 + 1"
    assert gf.element_str(0, poly_basis=True) == "0"
    assert GF(3).element_str(2, poly_basis=True) == "2"


def test_check_rejects_out_of_range(gf4):
    with pytest.raises(ValueError):
        gf4.check(4)
    with pytest.raises(ValueError):
        gf4.check(-1)
