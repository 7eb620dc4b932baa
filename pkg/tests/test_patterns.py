import json
import random
from itertools import combinations

import numpy as np
import pytest
from hypothesis import given, settings, strategies as st

from ramsey56.cfls import all_vertices, phi
from ramsey56.coloring import EdgeColoring
from ramsey56.patterns import (RESIDUAL, ForbiddenPattern, PatternError, Scanner, _match_naive,
                               aux_color_digraph, color_cycle, default_patterns, detect, dump_patterns,
                               equality_structure, load_patterns, match_pattern, mono_odd_cycle, scan,
                               select, soundness, structure_rows)

PATTERNS = default_patterns()
BY_NAME = {p.name: p for p in PATTERNS}
CLASS_PATTERNS = [p for p in PATTERNS if p.kind == "class-pattern"]


def instance(p: ForbiddenPattern, k: int = 5) -> EdgeColoring:
    """The pattern's classes as colors 0.., every other edge a fresh color."""
    m = np.full((k, k), -1, dtype=np.int32)
    for ci, cl in enumerate(p.classes):
        for u, v in cl:
            m[u, v] = m[v, u] = ci
    fresh = len(p.classes)
    for u, v in combinations(range(k), 2):
        if m[u, v] < 0:
            m[u, v] = m[v, u] = fresh
            fresh += 1
    return EdgeColoring(m)


def k4(ab, ac, ad, bc, bd, cd):
    return EdgeColoring.from_edge_colors(4, [ab, ac, ad, bc, bd, cd])


STRIPED = BY_NAME["fig4b"]


def test_shipped_set_shape():
    names = [p.name for p in PATTERNS]
    assert len(names) == len(set(names)) == 50
    assert {"mono-odd-cycle", "color-cycle"} <= set(names)
    figs = [n for n in names if n.startswith("fig")]
    assert len(figs) == 4 + 16 + 4 + 5 + 7
    assert set(RESIDUAL) <= set(names)
    assert sum(n.startswith("altc4-") for n in names) == 12


def test_striped_k4_examples():
    assert match_pattern(k4(1, 2, 3, 3, 2, 1), STRIPED) is not None
    assert match_pattern(EdgeColoring.rainbow(4), STRIPED) is None
    assert match_pattern(EdgeColoring.monochromatic(4), STRIPED) is not None


def test_distinct_classes_opt_in():
    strict = ForbiddenPattern("strict", "class-pattern", 4, STRIPED.classes, distinct_classes=((0, 1), (1, 2), (0, 2)))
    assert match_pattern(EdgeColoring.monochromatic(4), strict) is None
    assert match_pattern(k4(1, 2, 3, 3, 2, 1), strict) is not None


def test_witness_is_a_valid_embedding():
    c = k4(1, 2, 3, 3, 2, 1)
    w = match_pattern(c, STRIPED)
    for cl in STRIPED.classes:
        assert len({c[w[u], w[v]] for u, v in cl}) == 1


def test_smaller_host_never_matches():
    assert match_pattern(EdgeColoring.monochromatic(3), STRIPED) is None


def test_match_rejects_detector_kinds():
    with pytest.raises(PatternError):
        match_pattern(EdgeColoring.monochromatic(3), BY_NAME["color-cycle"])


def test_mono_odd_cycle_examples():
    assert mono_odd_cycle(EdgeColoring.monochromatic(3))
    assert not mono_odd_cycle(k4(1, 2, 1, 1, 2, 1))  # alternating C4 a-b-d-c, other edges color 2 form a matching
    c5 = EdgeColoring.from_function(5, lambda u, v: 0 if (v - u) % 5 in (1, 4) else (u, v))
    assert mono_odd_cycle(c5)


def test_color_cycle_examples():
    assert color_cycle(EdgeColoring.monochromatic(3))
    assert not color_cycle(EdgeColoring.rainbow(4))
    assert not aux_color_digraph(EdgeColoring.rainbow(4)).arcs
    for name in ("fig1a", "fig1b", "fig1c", "fig1d"):
        assert color_cycle(instance(BY_NAME[name])), name


def test_mono_triangle_self_loop_is_odd():
    dg = aux_color_digraph(EdgeColoring.monochromatic(3))
    assert dg.arcs[(0, 0)] == {1}


def test_scan_examples():
    tri = EdgeColoring.from_function(5, lambda u, v: 0 if v < 3 else (u, v))
    assert scan(tri, [BY_NAME["mono-odd-cycle"]]) == "mono-odd-cycle"
    assert scan(EdgeColoring.rainbow(5), PATTERNS) is None
    assert scan(instance(BY_NAME["fig4c"]), PATTERNS) == "fig4c"
    with pytest.raises(PatternError):
        scan(EdgeColoring.rainbow(6), PATTERNS)


@pytest.mark.parametrize("p", CLASS_PATTERNS, ids=lambda p: p.name)
def test_each_pattern_finds_its_own_instance(p):
    assert detect(instance(p), p)
    assert p.name in Scanner(PATTERNS).contained(instance(p))


# random small colorings ----------------------------------------------------

def colorings(k_min=3, k_max=5, colors=4):
    return st.integers(k_min, k_max).flatmap(
        lambda k: st.lists(st.integers(0, colors - 1), min_size=k * (k - 1) // 2, max_size=k * (k - 1) // 2)
        .map(lambda seq, k=k: EdgeColoring.from_edge_colors(k, seq)))


@settings(max_examples=300, deadline=None)
@given(colorings(), st.sampled_from(CLASS_PATTERNS))
def test_fast_matcher_agrees_with_naive(c, p):
    assert (match_pattern(c, p) is None) == (_match_naive(c.rows(), p) is None)


@settings(max_examples=200, deadline=None)
@given(colorings(), st.sampled_from(CLASS_PATTERNS), st.randoms(use_true_random=False))
def test_match_invariant_under_relabelling(c, p, rnd):
    perm = list(range(c.n))
    rnd.shuffle(perm)
    rename = {x: 100 + rnd.randrange(10_000) * 64 + x for x in range(4)}  # injective color renaming
    moved = EdgeColoring.from_function(c.n, lambda u, v: rename[c[perm[u], perm[v]]])
    assert (match_pattern(c, p) is None) == (match_pattern(moved, p) is None)
    # relabelling the pattern's own vertices changes nothing either
    k = p.k
    sigma = list(range(k))
    rnd.shuffle(sigma)
    q = ForbiddenPattern("relabelled", p.kind, k,
                         tuple(tuple(tuple(sorted((sigma[u], sigma[v]))) for u, v in cl) for cl in p.classes))
    assert (match_pattern(c, p) is None) == (match_pattern(c, q) is None)


@settings(max_examples=100, deadline=None)
@given(colorings(k_min=6, k_max=6, colors=3), st.sampled_from(CLASS_PATTERNS))
def test_large_host_uses_reference_matcher(c, p):
    assert (match_pattern(c, p) is None) == (_match_naive(c.rows(), p) is None)


def test_color_cycle_subsumes_mono_odd_cycle():
    rng = random.Random(7)
    cache: dict = {}
    fired = 0
    for _ in range(10_000):
        c = EdgeColoring.from_edge_colors(5, [rng.randrange(4) for _ in range(10)])
        key = equality_structure(c.rows())
        if key not in cache:
            cache[key] = (mono_odd_cycle(c), color_cycle(c))
        mono, cyc = cache[key]
        fired += mono
        assert cyc or not mono
    assert fired > 1000


def test_structure_roundtrip():
    c = EdgeColoring.from_edge_colors(4, [7, 7, 3, 9, 3, 7])
    key = equality_structure(c.rows())
    assert key == (4, (0, 0, 1, 2, 1, 0))
    assert equality_structure(structure_rows(key)) == key


def test_scanner_memo_matches_scan():
    rng = random.Random(3)
    sc = Scanner(PATTERNS)
    for _ in range(300):
        c = EdgeColoring.from_edge_colors(5, [rng.randrange(5) for _ in range(10)])
        assert sc(c) == scan(c, PATTERNS)
        assert sc(c) == sc.scan_key(equality_structure(c.rows()))


# pattern files ---------------------------------------------------------------

def test_dump_load_roundtrip(tmp_path):
    path = tmp_path / "p.json"
    dump_patterns(PATTERNS, path)
    assert load_patterns(path) == PATTERNS
    data = json.loads(path.read_text())
    assert data["patterns"][BY_NAME_INDEX["fig4b"]]["classes"] == [["ab", "cd"], ["ac", "bd"], ["ad", "bc"]]


BY_NAME_INDEX = {p.name: i for i, p in enumerate(PATTERNS)}


@pytest.mark.parametrize("bad", [
    {"name": "x", "kind": "blob"},
    {"name": "x", "k": 4, "classes": [["ab", "ab"]]},
    {"name": "x", "k": 3, "classes": [["ab", "cd"]]},
    {"name": "x", "k": 4, "classes": [["ab"], ["cd"], []]},
    {"name": "x", "k": 6, "classes": [["ab"]]},
    {"name": "x", "k": 3, "classes": [["aa"]]},
    {"name": "x", "k": 3, "classes": [["ab", "bc"]], "target": "psi"},
    {"name": "x", "k": 4, "classes": [["ab"], ["cd"]], "distinct_classes": [[0, 0]]},
])
def test_malformed_patterns_rejected(bad):
    with pytest.raises(PatternError):
        ForbiddenPattern.from_dict(bad)


def test_duplicate_names_rejected(tmp_path):
    path = tmp_path / "dup.json"
    path.write_text(json.dumps([{"name": "a", "kind": "color-cycle"}, {"name": "a", "kind": "color-cycle"}]))
    with pytest.raises(PatternError):
        load_patterns(path)


def test_select():
    rest = select(PATTERNS, exclude=RESIDUAL)
    assert len(rest) == len(PATTERNS) - len(RESIDUAL)
    assert {p.target for p in select(PATTERNS, target="chi")} == {"chi"}
    with pytest.raises(PatternError):
        select(PATTERNS, exclude=["fig9z"])


# soundness -----------------------------------------------------------------

def test_phi_patterns_absent_from_all_of_cfls_beta2():
    vs = all_vertices(2)
    m = EdgeColoring.from_function(16, lambda i, j: phi(vs[i], vs[j]))
    phi_pats = select(PATTERNS, target="phi")
    sc = Scanner(phi_pats)
    for sub in combinations(range(16), 5):
        assert sc(m.restrict(sub)) is None, sub


def test_soundness_smoke(construction):
    rep = soundness(construction(5), samples=3000, seed=1)
    assert rep.ok, "\n".join(rep.lines())
    assert len(rep.checked) == len(PATTERNS) + sum(p.target != "product" for p in PATTERNS)


def test_soundness_is_seeded(construction):
    a = soundness(construction(5), samples=500, seed=4)
    b = soundness(construction(5), samples=500, seed=4)
    assert a.lines() == b.lines() and a.checked == b.checked


def test_product_only_patterns_fire_on_chi_alone(construction):
    # the two configurations that need the phi factor do occur in chi; fig5d is rare
    as_chi = [ForbiddenPattern.from_dict({**BY_NAME[n].to_dict(), "target": "chi"}) for n in ("fig5c", "fig5d")]
    chi_only = soundness(construction(7), as_chi, samples=100_000, seed=0, include_product=False)
    assert {name for (name, _), hits in chi_only.fired.items() if hits} == {"fig5c", "fig5d"}
    on_product = soundness(construction(7), [BY_NAME["fig5c"], BY_NAME["fig5d"]], samples=100_000, seed=0)
    assert on_product.ok


def test_soundness_reports_firing(construction):
    # phi-patterns applied to chi must fire somewhere, or the suite proves nothing
    moved = [ForbiddenPattern.from_dict({**p.to_dict(), "target": "chi"}) for p in select(PATTERNS, target="phi")]
    rep = soundness(construction(7), moved, samples=5000, seed=0, include_product=False)
    assert not rep.ok
    assert any("FIRED" in line for line in rep.lines())
