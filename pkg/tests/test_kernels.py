import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from overq import _pykernels, kernels

try:
    from overq import _ckernels
except ImportError:  # extension not built
    _ckernels = None

BACKENDS = [pytest.param(_pykernels, id="python")]
if _ckernels is not None:
    BACKENDS.append(pytest.param(_ckernels, id="cython"))

small = st.lists(st.integers(-50, 50), min_size=1, max_size=25)
wide = st.lists(st.integers(-(2**80), 2**80), min_size=1, max_size=12)


def naive_mul(a, b, n):
    out = [0] * (n + 1)
    for i, x in enumerate(a):
        for j, y in enumerate(b):
            if i + j <= n:
                out[i + j] += x * y
    return out


@pytest.mark.parametrize("k", BACKENDS)
def test_mul_trunc_examples(k):
    assert k.mul_trunc([1, 1], [1, -1], 5) == [1, 0, -1]
    assert k.mul_trunc([1, 1, 1, 1], [1, -1], 3) == [1, 0, 0, 0]
    assert k.mul_trunc([], [1], 3) == []
    assert k.mul_trunc([5], [7], 0) == [35]


@pytest.mark.parametrize("k", BACKENDS)
@given(a=st.one_of(small, wide), b=st.one_of(small, wide), n=st.integers(0, 30))
@settings(max_examples=150, deadline=None)
def test_mul_trunc_matches_naive(k, a, b, n):
    got = k.mul_trunc(a, b, n)
    want = naive_mul(a, b, n)[: len(got)]
    assert got == want
    assert len(got) == min(n + 1, len(a) + len(b) - 1)


@pytest.mark.parametrize("k", BACKENDS)
@given(tail=st.one_of(small, wide), sign=st.sampled_from([1, -1]), n=st.integers(0, 25))
@settings(max_examples=150, deadline=None)
def test_inv_trunc_is_inverse(k, tail, sign, n):
    a = [sign] + tail
    inv = k.inv_trunc(a, n)
    prod = naive_mul(a, inv, n)
    assert prod == [1] + [0] * n


@pytest.mark.parametrize("k", BACKENDS)
def test_inv_trunc_rejects_non_unit(k):
    with pytest.raises(ValueError):
        k.inv_trunc([2, 1], 3)


def test_cython_overflow_falls_back_to_exact_ints():
    if _ckernels is None:
        pytest.skip("extension not built")
    # 2^62 * 4 overflows int64 in the middle of the product
    a = [2**62, 2**62]
    b = [4, 4]
    assert _ckernels.mul_trunc(a, b, 2) == naive_mul(a, b, 2)
    assert _ckernels.mul_trunc([2**70], [3], 0) == [3 * 2**70]
    # inverse of 1 - 3q grows as 3^k; 3^40 > 2^63
    inv = _ckernels.inv_trunc([1, -3], 45)
    assert inv == [3**k for k in range(46)]


@pytest.mark.parametrize("k", BACKENDS)
def test_walkers_small_values(k):
    # A(8) = B(8) = C(8) = 16 from the worked example lists
    assert k.gap_counts(8)[8] == 16
    assert k.congruence_counts(8)[8] == 16
    assert k.regular4_counts(8)[8] == 16
    assert k.gap_counts(0) == [1]
    assert k.gap_counts(-1) == []


@pytest.mark.skipif(_ckernels is None, reason="extension not built")
@pytest.mark.parametrize("name", ["gap_counts", "congruence_counts", "regular4_counts"])
def test_walkers_agree_across_backends(name):
    assert getattr(_ckernels, name)(35) == getattr(_pykernels, name)(35)


def test_backend_selection_reports_name():
    assert kernels.BACKEND in ("python", "cython")
