"""Matrix parsing, classification, full indecomposability, witness walks."""

import json
import random

import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from ambigcolor.errors import InputFormatError, PreconditionError
from ambigcolor.matrix import (NORMAL, NOT_DESIRABLE, SMALL, SPECIAL, TINY,
                               VARIANT_A, VARIANT_B, VARIANT_C, VARIANT_PLAIN,
                               ColorMatrix, balance_flags, classify,
                               enumerate_desirable, is_fully_indecomposable,
                               is_mininormal, load_matrix, special_variant,
                               special_variants, witness_sequence)


def diag(*entries):
    k = len(entries)
    return ColorMatrix([[entries[i] if i == j else 0 for j in range(k)]
                        for i in range(k)])


# ---------------------------------------------------------------------------
# container and I/O
# ---------------------------------------------------------------------------

def test_indexing_is_one_based():
    a = ColorMatrix([[1, 2], [3, 4]])
    assert a[1, 1] == 1 and a[1, 2] == 2 and a[2, 1] == 3
    assert a.order == 10
    assert a.row_sums() == [3, 7] and a.col_sums() == [4, 6]
    with pytest.raises(PreconditionError):
        a[0, 1]


def test_rejects_bad_shapes_and_entries():
    with pytest.raises(InputFormatError):
        ColorMatrix([[1, 2], [3]])
    with pytest.raises(InputFormatError):
        ColorMatrix([[1, -1], [0, 2]])
    with pytest.raises(InputFormatError):
        ColorMatrix([])


def test_text_and_json_round_trip():
    a = ColorMatrix([[1, 2, 0], [1, 3, 1], [1, 1, 1]])
    assert ColorMatrix.from_text(a.to_text()) == a
    assert ColorMatrix.from_json(json.loads(json.dumps(a.to_json()))) == a
    assert load_matrix(a.to_text()) == a
    assert load_matrix(json.dumps(a.to_json())) == a


def test_transpose_and_submatrix():
    a = ColorMatrix([[1, 2], [3, 4]])
    assert a.transpose()[1, 2] == 3
    sub = ColorMatrix([[1, 2, 0], [1, 3, 1], [1, 1, 1]]).submatrix([0, 1])
    assert sub == [[1, 2], [1, 3]]


# ---------------------------------------------------------------------------
# classification
# ---------------------------------------------------------------------------

def test_tiny():
    assert classify(diag(2, 0, 0)).verdict == TINY
    assert classify(diag(2, 1, 0, 0)).verdict == TINY
    assert classify(diag(0, 0, 2)).verdict == TINY
    # exactly one 2 required, and at least two zeros
    assert classify(diag(2, 2, 0, 0)).verdict == NOT_DESIRABLE
    assert classify(diag(3, 0, 0)).verdict == NOT_DESIRABLE
    assert classify(diag(1, 1, 0, 0)).verdict == NOT_DESIRABLE


def test_small():
    assert classify(diag(2, 2, 0)).verdict == SMALL
    assert classify(diag(2, 1, 0)).verdict == SMALL
    assert classify(diag(2, 2, 2, 0)).verdict == SMALL
    # exactly one zero, all entries <= 2, at least one 2
    assert classify(diag(1, 1, 0)).verdict == NOT_DESIRABLE
    assert classify(diag(3, 2, 0)).verdict == NOT_DESIRABLE
    assert classify(diag(2, 2, 1)).verdict == NOT_DESIRABLE


def test_special():
    v = classify(ColorMatrix([[1, 1, 0], [0, 1, 0], [0, 0, 1]]))
    assert v.verdict == SPECIAL
    # positive diagonal plus exactly one off-diagonal 1
    assert classify(ColorMatrix([[1, 2], [0, 1]])).verdict == NOT_DESIRABLE
    assert classify(ColorMatrix([[1, 1], [0, 0]])).verdict == NOT_DESIRABLE
    assert classify(ColorMatrix([[1, 1], [1, 1]])).verdict == NORMAL


def test_normal():
    a = ColorMatrix([[1, 2, 0], [1, 3, 1], [1, 1, 1]])
    v = classify(a)
    assert v.verdict == NORMAL and v.r == 3 and not v.mininormal
    b = ColorMatrix([[1, 1, 0], [1, 1, 0], [0, 0, 2]])
    v = classify(b)
    assert v.verdict == NORMAL and v.r == 2 and v.mininormal
    # block must be fully indecomposable
    c = ColorMatrix([[1, 1, 0], [0, 1, 1], [0, 0, 1]])
    assert classify(c).verdict == NOT_DESIRABLE


def test_desirable_classes_are_mutually_exclusive():
    seen = {}
    for k in range(2, 5):
        for n in range(0, 8):
            for m in enumerate_desirable(k, n):
                key = (k, tuple(m.entries))
                assert key not in seen
                seen[key] = classify(m).verdict
    assert set(seen.values()) == {TINY, SMALL, SPECIAL, NORMAL}


def test_classify_not_desirable_has_reason():
    v = classify(diag(1, 1, 1))
    assert v.verdict == NOT_DESIRABLE and v.witness
    assert not v.desirable


# ---------------------------------------------------------------------------
# special variants
# ---------------------------------------------------------------------------

def test_variant_a_and_b():
    # upper-triangular 2x2 all-ones: n = 3, alpha = 1; both readings hold
    m = ColorMatrix([[1, 1], [0, 1]])
    assert special_variants(m) == (VARIANT_A, VARIANT_B)
    assert special_variant(m) == VARIANT_A


def test_variant_a_only():
    # entry at (1, 2); n = 6, alpha = 2.  Row sums (2, 2, 2) balanced and
    # A(2,2) = 2 = alpha, so (a) holds; column sums (1, 3, 2) unbalanced,
    # so (b) fails
    m = ColorMatrix([[1, 1, 0], [0, 2, 0], [0, 0, 2]])
    assert classify(m).verdict == SPECIAL
    assert special_variants(m) == (VARIANT_A,)
    # (b) is exactly (a) of the transpose
    assert special_variants(m.transpose()) == (VARIANT_B,)


def test_variant_c():
    # k = 3, n = 6, alpha = 2: diagonal (1, 1, 3) with entry at (1, 2)
    m = ColorMatrix([[1, 1, 0], [0, 1, 0], [0, 0, 3]])
    assert VARIANT_C in special_variants(m)


def test_variant_plain():
    # k = 3, n = 5, alpha = 1: diagonal (2, 2, 1) with entry at (1, 2)
    # row sums (3, 2, 1) unbalanced, column sums (2, 3, 1) unbalanced,
    # diagonal not of (c) shape
    m = ColorMatrix([[2, 1, 0], [0, 2, 0], [0, 0, 1]])
    assert classify(m).verdict == SPECIAL
    assert special_variant(m) == VARIANT_PLAIN


def test_variant_c_existence_window():
    # (c)-special k x k matrices of order n exist iff n >= 2k >= 6 and
    # n mod k <= k - 3
    for k in range(2, 5):
        for n in range(0, 16):
            found = any(
                VARIANT_C in classify(m).variants
                for m in enumerate_desirable(k, n, filters=("special",)))
            expect = n >= 2 * k >= 6 and n % k <= k - 3
            assert found == expect, (k, n)


def test_balance_flags():
    assert balance_flags(ColorMatrix([[1, 1], [0, 1]])) == (True, True)
    assert balance_flags(ColorMatrix([[2, 1], [0, 1]])) == (False, True)
    assert balance_flags(ColorMatrix([[2, 0], [1, 1]])) == (True, False)
    assert balance_flags(diag(2, 2, 1)) == (True, True)


def test_mininormal_window():
    # balanced all-ones 2x2 block and 2k <= n < 3k
    assert is_mininormal(ColorMatrix([[1, 1, 0], [1, 1, 0], [0, 0, 2]]))
    # block must be exactly all-ones 2x2
    assert not is_mininormal(ColorMatrix([[1, 2, 0], [1, 3, 1], [1, 1, 1]]))
    # n = 3k is excluded from the window
    assert not is_mininormal(ColorMatrix([[1, 1, 0], [1, 1, 0], [0, 0, 5]]))
    for k in range(2, 5):
        ns = {m.order for m in enumerate_desirable(k, 3 * k, filters=("mininormal",))}
        assert not ns          # n = 3k excluded


def test_mininormal_k2():
    m = ColorMatrix([[1, 1], [1, 1]])
    v = classify(m)
    assert v.verdict == NORMAL and v.r == 2
    # n = 4, k = 2: 2k <= n < 3k holds and sums are balanced
    assert v.mininormal


# ---------------------------------------------------------------------------
# full indecomposability and witness sequences
# ---------------------------------------------------------------------------

def test_fully_indecomposable_known():
    assert is_fully_indecomposable(ColorMatrix([[1, 1], [1, 1]]))
    assert not is_fully_indecomposable(ColorMatrix([[1, 1], [0, 1]]))
    assert not is_fully_indecomposable(diag(1, 1, 1))
    assert is_fully_indecomposable(
        ColorMatrix([[1, 2, 0], [1, 3, 1], [1, 1, 1]]))
    # order-1 convention: nonzero entry
    assert is_fully_indecomposable(ColorMatrix([[3]]))
    assert not is_fully_indecomposable(ColorMatrix([[0]]))


def test_fully_indecomposable_methods_agree():
    rng = random.Random(5)
    for _ in range(300):
        r = rng.randint(1, 5)
        m = ColorMatrix([[rng.randint(0, 2) for _ in range(r)]
                         for _ in range(r)])
        assert (is_fully_indecomposable(m, method="subset")
                == is_fully_indecomposable(m, method="matching")), m.entries


@st.composite
def fi_matrices(draw):
    """Random fully indecomposable matrices, r <= 6, by rejection."""
    r = draw(st.integers(2, 6))
    for _ in range(200):
        rows = draw(st.lists(
            st.lists(st.integers(0, 3), min_size=r, max_size=r),
            min_size=r, max_size=r))
        m = ColorMatrix(rows)
        if is_fully_indecomposable(m, method="matching"):
            return m
    # dense fallback, always fully indecomposable
    return ColorMatrix([[1] * r for _ in range(r)])


@settings(max_examples=120, deadline=None)
@given(fi_matrices())
def test_witness_sequence_invariants(m):
    r = m.k
    for i in range(1, r + 1):
        for j in range(1, r + 1):
            if i == j or m[i, j] == 0:
                continue
            ws = witness_sequence(m, i, j)
            seq = ws.indices
            # starts i, j and ends i, j; odd walk length; all steps nonzero
            assert seq[0] == i and seq[1] == j
            assert seq[-2] == i and seq[-1] == j
            assert len(seq) >= 4            # walk length l >= 3
            for a, b in zip(seq, seq[1:]):
                assert a != b and m[a, b] != 0


def test_witness_sequence_rejects_zero_entry():
    m = ColorMatrix([[1, 1], [1, 1]])
    with pytest.raises(PreconditionError):
        witness_sequence(m, 1, 1)


# ---------------------------------------------------------------------------
# exhaustive generation
# ---------------------------------------------------------------------------

def test_enumerate_desirable_orders_and_filters():
    for m in enumerate_desirable(3, 6):
        assert m.order == 6 and classify(m).desirable
    tiny = list(enumerate_desirable(3, 2, filters=("tiny",)))
    assert all(classify(m).verdict == TINY for m in tiny) and tiny
    vs = list(enumerate_desirable(3, 6, filters=("very-special",)))
    assert vs and all(classify(m).verdict == SPECIAL
                      and classify(m).variants for m in vs)


def test_enumerate_desirable_no_duplicates():
    for k in (2, 3):
        for n in range(0, 9):
            mats = [tuple(m.entries) for m in enumerate_desirable(k, n)]
            assert len(mats) == len(set(mats))
