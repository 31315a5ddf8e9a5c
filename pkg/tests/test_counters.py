import pytest

from scoreseq import counters, dp
from scoreseq.counters import ConsistencyError, Method, MethodMismatch
from scoreseq.model import ClassKind

from tests.brute import brute_count
from tests.conftest import KNOWN_ALL

K = ClassKind


def test_count_all_known_series():
    assert [counters.count_all(n) for n in range(11)] == KNOWN_ALL


@pytest.mark.parametrize("fn, n, expected", [
    (counters.count_self_complementary, 6, 6),
    (counters.count_self_complementary, 34, 438068242),
    (counters.count_self_complementary, 1, 1),
    (counters.count_self_complementary, 0, 1),
    (counters.count_strong_direct, 6, 7),
    (counters.count_strong_direct, 2, 0),
    (counters.count_strong_direct, 25, 68243466611),
    (counters.count_ssc_direct, 6, 3),
    (counters.count_ssc_direct, 7, 9),
    (counters.count_ssc_direct, 2, 0),
])
def test_direct_examples(fn, n, expected):
    assert fn(n) == expected


def test_recurrence_examples():
    ss = counters.count_strong_recurrence(10)
    assert ss[2] == 0 and ss[3] == 1 and ss[10] == 573
    sscs = counters.count_ssc_recurrence(10)
    assert sscs[1] == 1 and sscs[6] == 3 and sscs[10] == 39


@pytest.mark.parametrize("n", range(0, 9))
def test_counts_against_brute_force(n):
    assert counters.count_all(n) == brute_count(n)
    assert counters.count_strong_direct(n) == brute_count(n, strict=True)
    assert counters.count_self_complementary(n) == brute_count(n, sc=True)
    assert counters.count_ssc_direct(n) == brute_count(n, strict=True, sc=True)


def test_single_counts_agree_with_sweep_tables():
    for kind in K:
        table = counters.series(kind, 30, Method.DP)
        for n in (0, 1, 2, 7, 18, 29, 30):
            assert counters.count(kind, n, Method.DP) == table[n]


def test_table_conventions_and_containment():
    n_max = 40
    S, SCS, SS, SSCS = (counters.series(k, n_max).values for k in
                        (K.ALL, K.SELF_COMPLEMENTARY, K.STRONG, K.STRONG_SELF_COMPLEMENTARY))
    assert S[0] == SCS[0] == SS[0] == SSCS[0] == 1
    assert SS[2] == SSCS[2] == 0
    for n in range(n_max + 1):
        assert 0 <= SSCS[n] <= SCS[n] <= S[n]
        assert SSCS[n] <= SS[n] <= S[n]


def test_count_dispatch():
    assert counters.count(K.STRONG, 50, Method.BOTH) == 14038428397405785380236980
    assert counters.count(K.ALL, 4, Method.DP) == 4
    assert counters.count(K.STRONG_SELF_COMPLEMENTARY, 100, Method.BOTH) == \
        10503211857303255611182940572


@pytest.mark.parametrize("kind", [K.ALL, K.SELF_COMPLEMENTARY])
@pytest.mark.parametrize("method", [Method.RECURRENCE, Method.BOTH])
def test_method_mismatch(kind, method):
    with pytest.raises(MethodMismatch):
        counters.count(kind, 5, method)


def test_disagreement_is_signalled(monkeypatch):
    monkeypatch.setitem(counters._DIRECT_COUNTS, K.STRONG, lambda n: 12345)
    with pytest.raises(ConsistencyError):
        counters.count(K.STRONG, 6, Method.BOTH)
    counters.clear_cache()
    monkeypatch.setattr(counters, "_strong_recurrence", lambda S: tuple(S))
    with pytest.raises(ConsistencyError):
        counters.series(K.STRONG, 10, Method.BOTH)
    counters.clear_cache()


@pytest.mark.parametrize("n", [2, 3, 9, 10, 21])
def test_self_complementary_uses_half_length_layer(monkeypatch, n):
    requests = []
    real_build = dp.build

    def spy(request, budget=None):
        requests.append(request)
        return real_build(request, budget)

    monkeypatch.setattr(dp, "build", spy)
    counters.count_self_complementary(n)
    counters.count_ssc_direct(n)
    assert requests and all(r.n_target <= n // 2 for r in requests)


def test_negative_n_rejected():
    with pytest.raises(ValueError):
        counters.count_all(-1)
    with pytest.raises(ValueError):
        counters.series(K.ALL, -1)
