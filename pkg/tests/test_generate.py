from __future__ import annotations

import pytest

from dimsolve.generate import GenSpec, SplitMix64, gen_planted, gen_random_s223free, generate
from dimsolve.graph import is_connected, verify_dim
from dimsolve.patterns import find_induced, is_sijk_free


def test_splitmix_reference_stream():
    # published test vector for seed 1234567
    r = SplitMix64(1234567)
    assert [r.next_u64() for _ in range(5)] == [
        6457827717110365317,
        3203168211198807973,
        9817491932198370423,
        4593380528125082431,
        16408922859458223821,
    ]
    assert SplitMix64(0).next_u64() == 0xE220A8397B1DCDAF


def test_splitmix_helpers():
    r = SplitMix64(7)
    xs = [r.below(5) for _ in range(500)]
    assert set(xs) == set(range(5))
    fs = [r.random() for _ in range(200)]
    assert all(0.0 <= f < 1.0 for f in fs)
    items = list(range(10))
    r.shuffle(items)
    assert sorted(items) == list(range(10))
    assert r.choice("abc") in "abc"
    with pytest.raises(ValueError):
        r.below(0)


def test_random_examples():
    g = gen_random_s223free(GenSpec(1, 0.5, 3))
    assert g.n == 1 and g.m == 0
    tree = gen_random_s223free(GenSpec(6, 0.0, 3))
    assert tree.m == 5 and is_connected(tree)


@pytest.mark.parametrize("seed", range(25))
def test_random_outputs_are_certified(seed):
    spec = GenSpec(6 + seed % 15, (0.1, 0.3, 0.5)[seed % 3], seed)
    g = gen_random_s223free(spec)
    assert g.n == spec.n and is_connected(g)
    assert is_sijk_free(g, 2, 2, 3) and find_induced(g, "K4") is None
    assert gen_random_s223free(spec) == g


def test_different_seeds_differ():
    gs = {gen_random_s223free(GenSpec(12, 0.3, s)) for s in range(10)}
    assert len(gs) > 5


def test_planted_examples():
    g, planted = gen_planted(GenSpec(2, 0.5, 1, "planted", 1, 0))
    assert g.m == 1 and planted == [(0, 1)]
    g, planted = gen_planted(GenSpec(5, 0.0, 1, "planted", 2, 1))
    assert g.n == 5 and g.m == 4 and verify_dim(g, planted)
    with pytest.raises(ValueError):
        gen_planted(GenSpec(4, 0.5, 1, "planted", 2, 0))
    with pytest.raises(ValueError):
        gen_planted(GenSpec(4, 0.5, 1, "planted", 0, 4))


@pytest.mark.parametrize("seed", range(10))
def test_planted_outputs_are_certified(seed):
    k = 2 + seed % 4
    spec = GenSpec(0, (0.05, 0.2, 0.4)[seed % 3], seed, "planted", k, 4 * k)
    g, planted = gen_planted(spec)
    assert g.n == 6 * k and len(planted) == k
    assert verify_dim(g, planted) and is_connected(g) and is_sijk_free(g, 2, 2, 3)
    assert gen_planted(spec) == (g, planted)


def test_generate_dispatch():
    g, none = generate(GenSpec(5, 0.3, 1))
    assert none is None and g.n == 5
    g, planted = generate(GenSpec(0, 0.3, 1, "planted", 2, 3))
    assert verify_dim(g, planted)
    with pytest.raises(ValueError):
        generate(GenSpec(5, 0.3, 1, "bogus"))
