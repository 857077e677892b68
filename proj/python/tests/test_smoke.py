import pytest

import padic_automata as pa

INCREMENT = {
    "p": 2,
    "digit_order": "lsb",
    "states": 2,
    "initial": 0,
    "transition": [[1, 0], [1, 1]],
    "output": [[1, 0], [0, 1]],
}

THUE_MORSE = {
    "p": 2,
    "digit_order": "lsb",
    "states": 2,
    "initial": 0,
    "delta": [[0, 1], [1, 0]],
    "output": [0, 1],
}


def test_evaluate():
    assert pa.evaluate("poly p=2 [1, 3]", 5, 4) == 0
    assert pa.evaluate("affine p=2 a=1 b=3", 5, 5) == 16
    assert pa.evaluate(INCREMENT, 6, 3) == 7
    assert pa.evaluate("poly p=5 [0, 1]", 10**30, 50) == 10**30


def test_lipschitz_and_vdp():
    assert pa.lipschitz_check("poly p=3 [1, 1/2, 4]", 4)["result"] == "Ok"
    s = pa.vdp("poly p=2 [0, 0, 1]", 4)
    assert s["K"] == 4
    # b_m = 2m - 2^floor(log2 m) for the square map
    assert [int(n) for n, _ in s["b"][1:8]] == [1, 2, 4, 4, 6, 8, 10]


def test_synthesis():
    r = pa.synth_minimal("affine p=2 a=1 b=3")
    assert r["status"] == "Finite"
    assert r["machine"]["states"] == 3
    assert pa.synth_minimal("poly p=2 [0, 0, 1]", max_states=64)["status"] == "BoundExceeded"
    assert pa.synth_naive("affine p=2 a=1 b=3", 4)["states"] == 15
    assert pa.minimize(INCREMENT)["states"] == 2


def test_kernel_and_dfao():
    k = pa.kernel(THUE_MORSE)
    assert k["closed"] and len(k["elements"]) == 2
    assert [pa.dfao_eval(THUE_MORSE, n) for n in range(8)] == [0, 1, 1, 0, 1, 0, 0, 1]
    assert "digraph" in pa.to_dot(THUE_MORSE)
    assert "digraph" in pa.to_dot(INCREMENT)


def test_finiteness():
    v = pa.finiteness("affine p=2 a=1 b=3")
    assert v["verdict"] == "SatisfiesCriterion"
    assert v["B_f"] == ["1", "3", "4"]
    assert pa.finiteness(INCREMENT)["verdict"] == "SatisfiesCriterion"
    assert pa.finiteness("poly p=2 [0, 0, 1]")["verdict"] == "ValueBoundExceeded"
    assert pa.cross_check(INCREMENT, depth=8)["agreement"] == "agree"


def test_christol():
    rel = pa.christol_find(THUE_MORSE)
    assert rel["d"] == 2
    assert rel["u"] == [[0, 1], [1, 0, 1], [1, 1, 1, 1]]


def test_errors():
    with pytest.raises(pa.PadicError):
        pa.evaluate("poly p=2 [1/2]", 0, 1)
    with pytest.raises(pa.PadicError):
        pa.evaluate("poly p=2 [1]", 9, 2)
    with pytest.raises(pa.PadicError):
        pa.kernel(dict(THUE_MORSE, digit_order="msb"))


def test_acceptance_report():
    report = pa.acceptance_report(threads=2)
    assert report["all_pass"]
    assert [c["id"] for c in report["checks"]] == list(range(1, 8))
