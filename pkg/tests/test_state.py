import random

import pytest

from dualize import Hypergraph, complement
from dualize.generators import gen_matching, gen_random
from dualize.state import (CritUncovState, EdgeBitsetState, choose_engine, init_state, make_state,
                           min_crit, min_uncov, violated_vertex)

ENGINES = [("lists", "off"), ("lists", "on"), ("bitset", "auto")]


def scratch(H, S):
    """uncov and crit by definition, over the real edges."""
    S = set(S)
    uncov, crit = [], {u: [] for u in S}
    for i, e in enumerate(H.real_edges()):
        hit = S.intersection(e)
        if not hit:
            uncov.append(i)
        elif len(hit) == 1:
            crit[hit.pop()].append(i)
    return uncov, crit


def check(state, H):
    uncov, crit = scratch(H, state.S)
    assert state.uncov() == uncov
    for u in state.S:
        assert state.crit(u) == crit[u]
    assert sum(len(state.crit(u)) for u in state.S) <= H.m
    assert state.min_uncov() == (uncov[0] if uncov else H.m)


@pytest.fixture(params=ENGINES, ids=lambda p: f"{p[0]}-bits{p[1]}")
def mk(request):
    engine, bits = request.param
    return lambda H: make_state(H, bits, engine)


def test_init(mk, example):
    st = mk(example)
    assert st.uncov() == [0, 1, 2]
    assert st.min_uncov() == 0
    assert st.S == []
    assert mk(Hypergraph(0, [])).is_hitting()
    assert mk(gen_matching(4)).uncov() == [0, 1]


def test_example_crit_lists(mk, example):
    # labels 1..4 are ids 0..3
    st = mk(example)
    st.add_vertex(0)
    assert st.min_uncov() == 2
    st.add_vertex(2)
    assert st.crit(0) == [0] and st.crit(2) == [2] and st.uncov() == []
    assert st.min_crit(0) == 0
    assert st.violated_vertex() is None
    st.add_vertex(3)
    assert st.crit(0) == [0] and st.crit(2) == [] and st.crit(3) == []
    assert st.violated_vertex() in (2, 3)
    assert not st.is_minimal()


def test_min_crit_pair(mk, example):
    st = mk(example)
    st.add_vertex(0)
    st.add_vertex(1)
    assert st.min_crit(0) == 1
    assert st.min_crit(1) == 2
    with pytest.raises(ValueError):
        st.min_crit(3)


def test_isolated_vertex_has_empty_frame():
    H = Hypergraph(3, [(0, 1)])
    st = CritUncovState(H, bits="off")
    f = st.add_vertex(2)
    assert len(f) == 0
    assert st.min_crit(2) == H.m
    assert st.violated_vertex() == 2


def test_add_twice_rejected(mk, example):
    st = mk(example)
    st.add_vertex(1)
    with pytest.raises(ValueError):
        st.add_vertex(1)


def test_nested_undo_restores_init(mk, example):
    st = mk(example)
    before = st.snapshot()
    frames = [st.add_vertex(v) for v in (3, 0, 1)]
    for f in reversed(frames):
        st.undo(f)
    assert st.snapshot() == before


def test_out_of_order_undo_rejected(example):
    st = CritUncovState(example)
    a = st.add_vertex(0)
    st.add_vertex(1)
    with pytest.raises(ValueError):
        st.undo(a)


def test_module_wrappers(example):
    st = init_state(example)
    assert min_uncov(st) == 0
    st.add_vertex(0)
    assert min_crit(st, 0) == 0
    assert violated_vertex(st) is None


@pytest.mark.parametrize("comp", [False, True])
def test_random_walk_matches_scratch(mk, comp):
    rng = random.Random(5)
    for seed in range(15):
        H = gen_random(12, 18, 0.35, seed)
        if comp:
            H = complement(H)
        st = mk(H)
        frames, snaps = [], []
        for _ in range(200):
            free = [v for v in range(H.n) if v not in st.S]
            if free and (not frames or rng.random() < 0.55):
                snaps.append(st.snapshot())
                frames.append(st.add_vertex(rng.choice(free)))
            elif frames:
                st.undo(frames.pop())
                assert st.snapshot() == snaps.pop()
            check(st, H)


def test_choose_engine():
    sparse = gen_random(30, 40, 0.1, 1)
    dense = gen_random(10, 40, 0.9, 1)
    assert choose_engine(sparse) == "lists"
    assert choose_engine(dense) == "bitset"
    assert choose_engine(sparse, "bitset") == "bitset"
    assert isinstance(make_state(dense), EdgeBitsetState)
    with pytest.raises(ValueError):
        choose_engine(sparse, "tree")
