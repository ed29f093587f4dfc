"""Smoke tests for the python bindings, runnable as a plain script."""

import itertools

import stopset as ss


def test_families():
    for name, m, n, k, d in [
        ("simplex", 3, 7, 3, 4),
        ("hamming", 3, 7, 4, 3),
        ("rm1", 4, 16, 5, 8),
        ("exthamming", 4, 16, 11, 4),
    ]:
        fam = ss.CodeFamily(name, m)
        assert (fam.n, fam.k, fam.d) == (n, k, d), fam
        assert fam.dual().dual() == fam
        assert fam.dual().k == n - k


def test_build_and_export():
    h = ss.build("hamming", 3)
    assert h.construction == "h2"
    assert (h.rows, h.cols) == (7, 7)
    assert h.rank() == 3
    assert len(h.row_support(1)) == 4
    assert h.family.name == "hamming"

    back = ss.import_alist(h.to_alist())
    assert (back.rows, back.cols) == (7, 7)
    assert [back.row_support(r) for r in range(1, 8)] == [
        h.row_support(r) for r in range(1, 8)
    ]
    dense = ss.import_dense(ss.build("hamming", 3, "fullrank").to_dense())
    assert (dense.rows, dense.cols) == (3, 7)


def test_ssd():
    T = ss.ssd_formula("hamming", 3)
    assert T == [1, 0, 0, 7, 7, 21, 7, 1]
    h = ss.build("hamming", 3)
    assert ss.exhaustive_ssd(h) == T
    assert ss.exhaustive_ssd(h, threads=4) == T
    assert ss.stopping_distance(h) == 3

    # a size-3 stopping set exists and there are exactly seven of them
    triples = [
        s for s in itertools.combinations(range(1, 8), 3) if ss.is_stopping_set(h, list(s))
    ]
    assert len(triples) == 7

    big = ss.ssd_formula("hamming", 6)
    assert sum(big) == sum(
        1 if i == 0 else 0 for i in range(1)
    ) + sum(big[1:])  # smoke: list of python ints, no overflow anywhere
    assert big[63] == 1


def test_big_integers_cross_python():
    # the decimal bridge reproduces python's own arbitrary-precision results
    for m in (4, 10, 20):
        assert ss.t3_fullrank_hamming(m) == (5**m - 3 ** (m + 1) + 2 ** (m + 1)) // 6
        assert ss.a3_hamming(m) == (2**m - 1) * (2 ** (m - 1) - 1) // 3
    assert ss.count_generators("pg", 4, 2) == 35
    assert ss.count_stopping_generators("eg", 4, 2) == 1
    assert ss.gaussian_binomial(5, 2) == 155
    assert ss.gaussian_binomial(40, 20) > 10**100  # definitely not a C long


def test_verify_and_patterns():
    h = ss.build("rm1", 3)
    rep = ss.verify_bec_optimal(h, "rm1", 3)
    assert rep["distributions_match"] and rep["optimal"]

    f = ss.build("hamming", 3, "fullrank")
    rep = ss.verify_bec_optimal(f, "hamming", 3)
    assert not rep["optimal"]
    assert rep["first_mismatch_size"] == 3
    assert rep["ssd_matrix"][3] == 10 and rep["ssd_star"][3] == 7

    pa = ss.exhaustive_pattern_analysis(ss.build("hamming", 3), "hamming", 3)
    assert pa["fail_peel"][3] == 7
    assert pa["fail_peel"] == pa["fail_ml"]


def test_decoding():
    h = ss.build("hamming", 3)
    ok, residual, word = ss.peel(h, "0000000", [1, 2])
    assert ok and residual == [] and word == "0000000"

    # erase a weight-3 codeword's support: the decoder must stall on exactly that set
    supp = next(
        s
        for s in itertools.combinations(range(1, 8), 3)
        if ss.is_incorrigible("hamming", 3, list(s))
    )
    cw = "".join("1" if j in supp else "0" for j in range(1, 8))
    ok, residual, word = ss.peel(h, cw, list(supp))
    assert not ok and residual == list(supp) and word is None
    assert not ss.is_incorrigible("hamming", 3, [1, 2])


def test_monte_carlo():
    h = ss.build("hamming", 3)
    a = ss.monte_carlo(h, 0.3, 100000, seed=7, threads=4, track_ml=True)
    b = ss.monte_carlo(h, 0.3, 100000, seed=7, threads=1, track_ml=True)
    assert a["fail_peel"] == b["fail_peel"]  # deterministic across thread counts
    assert a["fail_ml"] == a["fail_peel"]  # this matrix peels optimally
    assert ss.monte_carlo(h, 0.0, 1000, seed=1)["fail_peel"] == 0
    assert ss.monte_carlo(h, 1.0, 1000, seed=1)["fail_peel"] == 1000


def main():
    tests = [v for k, v in sorted(globals().items()) if k.startswith("test_")]
    for test in tests:
        test()
        print(f"ok: {test.__name__}")
    print(f"all {len(tests)} python smoke tests passed")


if __name__ == "__main__":
    main()
