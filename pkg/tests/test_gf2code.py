import random

import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

import rmdesigns.gf2code as g
from conftest import naive_codewords
from rmdesigns.errors import CapacityError, InputError
from rmdesigns.gf2code import (
    BinaryCode,
    BlockSet,
    codewords,
    dual,
    extended_hamming,
    format_blockset,
    format_generator_matrix,
    gray_flips,
    make_code,
    minimum_distance,
    parse_blockset,
    parse_generator_matrix,
    pattern_histogram,
    read_generator_matrix,
    reed_muller_1,
    shell,
    weight_distribution,
    weight_enumerator,
)
from rmdesigns.poly import X, Y, macwilliams_substitute


@st.composite
def small_codes(draw, max_n=12):
    n = draw(st.integers(1, max_n))
    rows = draw(st.lists(st.integers(0, (1 << n) - 1), max_size=n + 2))
    return make_code(n, rows)


def brute_dual_words(code: BinaryCode) -> set[int]:
    return {v for v in range(1 << code.n) if all((v & c).bit_count() % 2 == 0 for c in code.generators)}


def gf2_rank(rows):
    rows, rank = list(rows), 0
    for bit in range(max((r.bit_length() for r in rows), default=0)):
        piv = next((i for i in range(rank, len(rows)) if (rows[i] >> bit) & 1), None)
        if piv is None:
            continue
        rows[rank], rows[piv] = rows[piv], rows[rank]
        rows = [r ^ rows[rank] if i != rank and (r >> bit) & 1 else r for i, r in enumerate(rows)]
        rank += 1
    return rank


def test_make_code_examples():
    c = make_code(3, ["111", "111"])
    assert c.k == 1 and c.generators == (0b111,)
    assert make_code(3, []).k == 0
    rm_rows = ["01010101", "00110011", "00001111", "11111111"]
    assert make_code(8, rm_rows).k == gf2_rank([g.str_to_bits(r) for r in rm_rows]) == 4
    with pytest.raises(InputError):
        make_code(3, ["11"])


def test_rref_canonical():
    a = make_code(8, ["11110000", "00111100"])
    b = make_code(8, ["11001100", "11110000"])
    assert a == b


def test_reed_muller_examples():
    rm3 = reed_muller_1(3)
    assert (rm3.n, rm3.k) == (8, 4)
    assert weight_enumerator(rm3) == X**8 + 14 * X**4 * Y**4 + Y**8
    rm4 = reed_muller_1(4)
    assert (rm4.n, rm4.k) == (16, 5)
    assert weight_enumerator(rm4) == X**16 + 30 * X**8 * Y**8 + Y**16
    rm1 = reed_muller_1(1)
    assert (rm1.n, rm1.k) == (2, 2)
    with pytest.raises(InputError):
        reed_muller_1(0)


@pytest.mark.parametrize("m", range(3, 11))
def test_rm_weight_enumerator_formula(m):
    n, h = 1 << m, 1 << (m - 1)
    assert weight_enumerator(reed_muller_1(m)) == X**n + (2 ** (m + 1) - 2) * X**h * Y**h + Y**n


@pytest.mark.parametrize("m", range(3, 8))
def test_rm_nonconstant_words_are_balanced(m):
    dist = weight_distribution(reed_muller_1(m))
    assert [w for w, a in enumerate(dist) if a] == [0, 1 << (m - 1), 1 << m]


def test_rm_coordinates_are_affine_functions():
    m = 4
    words = set(codewords(reed_muller_1(m)))
    affine = set()
    for a in range(1 << m):
        for b in (0, 1):
            affine.add(sum((((a & j).bit_count() + b) % 2) << j for j in range(1 << m)))
    assert words == affine


def test_extended_hamming_examples():
    assert set(codewords(extended_hamming(3))) == set(codewords(reed_muller_1(3)))
    h16 = extended_hamming(4)
    assert h16.k == 11 and h16.size == 2048
    assert minimum_distance(h16) == 4
    with pytest.raises(InputError):
        extended_hamming(1)


def test_extended_hamming_4_weight_distribution():
    oracle = [0] * 17
    for v in brute_dual_words(reed_muller_1(4)):
        oracle[v.bit_count()] += 1
    expected = [1, 0, 0, 0, 140, 0, 448, 0, 870, 0, 448, 0, 140, 0, 0, 0, 1]
    assert oracle == expected
    assert weight_distribution(extended_hamming(4)) == expected
    assert weight_enumerator(extended_hamming(4)) == macwilliams_substitute(weight_enumerator(reed_muller_1(4))).div(32)


def test_dual_of_zero_code():
    assert dual(make_code(5, [])).k == 5


@given(small_codes())
@settings(max_examples=60, deadline=None)
def test_dual_matches_brute_force(code):
    d = dual(code)
    assert d.k == code.n - code.k
    assert set(codewords(d)) == brute_dual_words(code)
    assert dual(d) == code


@given(small_codes(max_n=16))
@settings(max_examples=40, deadline=None)
def test_macwilliams_identity(code):
    lhs = weight_enumerator(dual(code))
    rhs = macwilliams_substitute(weight_enumerator(code)).div(code.size)
    assert lhs == rhs


@given(small_codes(max_n=10))
@settings(max_examples=40, deadline=None)
def test_enumeration_matches_naive(code):
    words = list(codewords(code))
    assert len(words) == len(set(words)) == code.size
    naive = {sum(b << j for j, b in enumerate(bits)) for bits in naive_codewords(code)}
    assert set(words) == naive


def test_codeword_examples():
    assert list(codewords(make_code(4, []))) == [0]
    assert weight_distribution(reed_muller_1(3)) == [1, 0, 0, 0, 14, 0, 0, 0, 1]
    assert weight_enumerator(make_code(6, [])) == X**6


def test_gray_flips():
    k = 5
    v, seen = 0, {0}
    for i in gray_flips(k):
        v ^= 1 << i
        seen.add(v)
    assert len(seen) == 1 << k


def test_capacity_error():
    big = make_code(30, [1 << i for i in range(27)])
    with pytest.raises(CapacityError):
        next(codewords(big))
    with pytest.raises(CapacityError):
        weight_distribution(big)


def test_numpy_and_python_paths_agree():
    rng = random.Random(7)
    for _ in range(10):
        n = rng.randint(18, 40)
        code = make_code(n, [rng.getrandbits(n) for _ in range(rng.randint(1, 19))])
        pts = tuple(rng.sample(range(n), 4))
        assert g._pattern_counts_numpy(code, pts, 1) == g._pattern_counts_python(code, pts)
        assert g._pattern_counts_numpy(code, pts, 3) == g._pattern_counts_python(code, pts)


def test_long_codes_use_python_path():
    code = make_code(70, [(1 << 70) - 1, 0b1111 << 60])
    assert weight_distribution(code)[70] == 1
    assert weight_distribution(code)[4] == 1
    assert weight_distribution(code)[66] == 1


def test_thread_count_does_not_change_results():
    code = extended_hamming(4)
    assert pattern_histogram(code, (0, 3, 5), threads=1) == pattern_histogram(code, (0, 3, 5), threads=4)


def test_pattern_histogram_rejects_bad_points():
    with pytest.raises(InputError):
        pattern_histogram(reed_muller_1(3), (0, 8))
    with pytest.raises(InputError):
        pattern_histogram(reed_muller_1(3), (1, 1))


def test_shell_examples():
    s = shell(reed_muller_1(3), 4)
    assert len(s) == 14 and s.block_sizes() == {4}
    assert len(shell(reed_muller_1(3), 3)) == 0
    assert len(shell(reed_muller_1(4), 8)) == 30
    with pytest.raises(InputError):
        shell(reed_muller_1(3), 9)


def test_minimum_distance_zero_code():
    assert minimum_distance(make_code(3, [])) is None


def test_generator_matrix_roundtrip(tmp_path):
    code = reed_muller_1(3)
    text = format_generator_matrix(code)
    assert text.splitlines()[0] == "8 4"
    assert parse_generator_matrix(text) == code
    path = tmp_path / "g.txt"
    path.write_text(text)
    assert read_generator_matrix(path) == code
    with pytest.raises(InputError):
        parse_generator_matrix("8 2\n11110000\n")
    with pytest.raises(InputError):
        parse_generator_matrix("")
    with pytest.raises(InputError):
        parse_generator_matrix("eight\n")


def test_generator_matrix_char_j_is_coordinate_j():
    code = parse_generator_matrix("4 1\n1000\n")
    assert code.generators == (1,)


def test_blockset_roundtrip():
    b = BlockSet.of(5, [(3, 1), (), (0, 4), (0, 4)])
    text = format_blockset(b)
    assert parse_blockset(text, 5) == b
    assert len(parse_blockset(text, 5)) == 4
    with pytest.raises(InputError):
        parse_blockset("0 x\n", 5)
    with pytest.raises(InputError):
        BlockSet.of(3, [(0, 3)])
    with pytest.raises(InputError):
        BlockSet.of(3, [(1, 1)])


def test_encode_and_contains():
    code = reed_muller_1(3)
    words = {code.encode(i) for i in range(code.size)}
    assert words == set(codewords(code))
    assert all(code.contains(w) for w in words)
    assert not code.contains(1)
