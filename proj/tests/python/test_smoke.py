import pytest

import slidewave as sw


def test_small_pair_every_algorithm():
    for algo in sw.ALGORITHMS:
        assert sw.distance(b"ABA", b"AAB", 2, algo) == 2


def test_exceeds_k_is_none():
    assert sw.distance("AAAA", "TTTT", 2) is None
    assert sw.banded_distance("AAAA", "TTTT", 2) is None
    assert sw.wf_distance("AAAA", "TTTT") == 4


def test_cap_and_gcd():
    assert sw.cap_c(0, 0) == 1
    assert sw.cap_c(0, 5) == 3
    assert sw.cap_c(-2, 3) == 2
    assert sw.gcd0(0, 5) == 5
    assert sw.gcd0(4, 6) == 2
    with pytest.raises(ValueError):
        sw.cap_c(4, 3)


def test_generated_pair_round_trip():
    x, y = sw.gen_pair(3000, 12, sigma=4, seed=7, preset="periodic")
    assert isinstance(x, bytes)
    want = sw.wf_distance(x, y)
    assert want <= 12
    for algo in ("rowwave", "stream-lce", "stream-periodic"):
        assert sw.distance(x, y, 12, algo) == want
    runs = sw.edit_script(x, y, 12)
    assert sw.apply_script(x, runs) == y
    assert sum(length for op, length, _ in runs if op != "=") == want


def test_align_returns_cigar():
    assert sw.align("ABA", "AAB", 2) == "1=2X"
    assert sw.align("ABA", "AAB", 1) is None


def test_report_and_auto_k():
    x, y = sw.gen_pair(2000, 5, sigma=26, seed=3)
    report = sw.run(x, y, 8)
    assert report["algorithm"] == "stream-periodic"
    assert report["x_reader"]["passes"] == 1
    assert report["x_reader"]["bytes_read"] == len(x)
    d, k, passes = sw.auto_k(x, y)
    assert d == sw.wf_distance(x, y)
    assert k >= d and passes == k.bit_length()


def test_unknown_algorithm():
    with pytest.raises(ValueError):
        sw.distance("A", "A", 0, "nope")
