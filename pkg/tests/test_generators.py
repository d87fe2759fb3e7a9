import pytest

from p5color.errors import GenerationError, UsageError
from p5color.generators import (
    GeneratorSpec,
    c5_blowup,
    gen_rejection,
    gen_split,
    gen_substitution,
    generate,
    rejection_samples,
)
from p5color.oracles import clique_number, find_induced_p5


def test_depth_zero_is_k1():
    G, omega = gen_substitution(GeneratorSpec("substitution", 1, {"depth": 0}))
    assert G.n == 1 and omega == 1


def test_c5_blowups():
    for k in range(1, 5):
        G = c5_blowup(k)
        assert G.n == 5 * k and clique_number(G) == 2 * k
        assert find_induced_p5(G) is None


def test_substitution_cap():
    with pytest.raises(GenerationError):
        gen_substitution(GeneratorSpec("substitution", 0, {"depth": 6, "leaf_prob": 0.0, "max_vertices": 10}))


def test_substitution_sweep():
    made = 0
    for seed in range(1000):
        try:
            G, omega = gen_substitution(GeneratorSpec("substitution", seed, {"depth": 3, "max_vertices": 40}))
        except GenerationError:
            continue
        made += 1
        assert find_induced_p5(G) is None
        if seed % 10 == 0:
            assert clique_number(G) == omega
    assert made > 500


def test_split_examples():
    K3 = gen_split(GeneratorSpec("split", 0, {"k": 3, "s": 0}))
    assert K3.n == 3 and K3.num_edges == 3
    E4 = gen_split(GeneratorSpec("split", 0, {"k": 0, "s": 4}))
    assert E4.n == 4 and E4.num_edges == 0
    with pytest.raises(UsageError):
        gen_split(GeneratorSpec("split", 0, {"k": -1}))


def test_split_sweep():
    for seed in range(1000):
        G = gen_split(GeneratorSpec("split", seed, {"k": seed % 9, "s": seed % 13, "p": (seed % 10) / 10}))
        assert find_induced_p5(G) is None


def test_rejection_examples():
    spec = GeneratorSpec("rejection", 5, {"n": 4, "p": 0.5})
    assert len(list(rejection_samples(spec))) == 1
    K5 = gen_rejection(GeneratorSpec("rejection", 5, {"n": 5, "p": 1.0}))
    assert K5.num_edges == 10


def test_rejection_n12():
    spec = GeneratorSpec("rejection", 77, {"n": 12, "p": 0.5, "max_tries": 1000})
    samples = list(rejection_samples(spec))
    for G, wit in samples[:-1]:
        assert wit is not None and wit.is_valid(G)
    G = gen_rejection(spec)
    if G is not None:
        assert find_induced_p5(G) is None and samples[-1][1] is None
    else:
        assert len(samples) == 1000


def test_determinism():
    for kind, params in (("substitution", {"depth": 3}), ("split", {"k": 4, "s": 6}), ("rejection", {"n": 9})):
        a = generate(GeneratorSpec(kind, 42, params))
        b = generate(GeneratorSpec(kind, 42, params))
        assert a == b


def test_unknown_kind():
    with pytest.raises(UsageError):
        GeneratorSpec("lattice", 0)
