import random
from fractions import Fraction

import pytest

from octlie.repspaces import (
    GL3_RAISE,
    LEVI_ROOTS,
    SP6_ROOTS,
    ZERO_WEIGHT,
    StandardModule,
    bracket_fidelity,
    build_X0,
    cartan_product,
    cayley_transform_check,
    invariant_family_rep,
    invariant_vector,
    is_fixed_by_cayley,
    is_sl2cubed_invariant,
    joint_kernel,
    k_component,
    k_types,
    lambda_bar_prime,
    lambda_prime,
    nonvanishing_report,
    p_plus,
    rep_211,
    sl2cubed_invariants,
    standard_rep,
    vector_v,
    vector_w,
    vector_z,
    vector_z1,
    wedge,
    wedge2_prim,
    wedge3_p_tensor,
    wedge3_prim,
    x0_ktype_check,
    x0_projection,
    zero_weight_basis_check,
)
from octlie.rootdata import BoundExceeded, branch_to_u3, kostant_multiplicity, trivial_sl2cubed_multiplicity

F = Fraction


def test_dimensions():
    assert standard_rep().dim == 6
    assert wedge2_prim().dim == 14
    assert wedge3_prim().dim == 14
    assert rep_211().dim == 70


def test_highest_weight_vectors():
    W2, W3 = wedge(2), wedge(3)
    top2 = wedge2_prim().embed(wedge2_prim().highest_vector)
    top3 = wedge3_prim().embed(wedge3_prim().highest_vector)
    assert top2 == W2.vector([(1, (0, 1))])
    assert top3 == W3.vector([(1, (0, 1, 2))])
    for key in ((1, -1, 0), (0, 1, -1), (0, 0, 2)):
        assert not wedge2_prim().apply(key, wedge2_prim().highest_vector)
        assert not wedge3_prim().apply(key, wedge3_prim().highest_vector)


@pytest.mark.parametrize("make", [standard_rep, lambda: wedge(2), lambda: wedge(3), wedge2_prim, wedge3_prim, rep_211])
def test_bracket_fidelity(make):
    assert bracket_fidelity(make(), SP6_ROOTS) == []


def test_bracket_fidelity_on_levi_modules():
    assert bracket_fidelity(p_plus(), LEVI_ROOTS) == []
    t = wedge3_p_tensor()
    sample = random.Random(3).sample(range(t.dim), 25)
    assert bracket_fidelity(t, LEVI_ROOTS, sample) == []


class _Corrupted(StandardModule):
    def _column(self, key, j):
        col = super()._column(key, j)
        if key == (1, -1, 0):
            return {i: 2 * c for i, c in col.items()}
        return col


def test_bracket_fidelity_detects_a_corrupted_module():
    assert bracket_fidelity(_Corrupted(), SP6_ROOTS)


def test_invariant_vectors():
    assert is_sl2cubed_invariant(wedge2_prim(), vector_v())
    assert is_sl2cubed_invariant(wedge2_prim(), vector_w())
    assert is_sl2cubed_invariant(rep_211(), vector_z())
    z1 = vector_z1()
    assert z1 and not is_sl2cubed_invariant(rep_211(), z1)


@pytest.mark.parametrize("make,lam", [(wedge2_prim, (1, 1, 0)), (wedge3_prim, (1, 1, 1)), (rep_211, (2, 1, 1))])
def test_invariant_count_matches_branching(make, lam):
    assert len(sl2cubed_invariants(make())) == trivial_sl2cubed_multiplicity(lam)


def test_invariant_space_dimensions_follow_branching_law():
    assert len(sl2cubed_invariants(invariant_family_rep((2, 2, 0)))) == 3
    assert len(sl2cubed_invariants(invariant_family_rep((3, 2, 1)))) == 2


def test_k_types_match_branching():
    assert k_types(wedge2_prim()) == branch_to_u3((1, 1, 0))
    assert k_types(rep_211()) == branch_to_u3((2, 1, 1))


def test_v_and_w_span_zero_weight_of_tau():
    comp = k_component(wedge2_prim(), (1, 0, -1))
    assert comp.weight_dim(ZERO_WEIGHT) == 2
    pv, pw = comp.project(vector_v()), comp.project(vector_w())
    # independent, and already inside the component
    assert pv == vector_v() and pw == vector_w()
    assert any(pv.get(i, 0) * pw.get(j, 0) != pv.get(j, 0) * pw.get(i, 0) for i in pv for j in pw)


def test_z_projections():
    M = rep_211()
    assert not k_component(M, (1, 0, -1)).project(vector_z())
    assert k_component(M, (1, 1, -2)).project(vector_z())
    assert k_component(M, (2, -1, -1)).project(vector_z())


def test_X0():
    t, x0 = build_X0()
    assert t.dim == 400
    assert len(x0) == 1
    assert x0_projection((2, 2, -4))
    assert x0_projection((4, -2, -2))
    assert x0_ktype_check()


def test_cayley_transform():
    assert all(cayley_transform_check().values())
    assert is_fixed_by_cayley(wedge2_prim(), vector_v())
    assert is_fixed_by_cayley(wedge2_prim(), vector_w())
    assert is_fixed_by_cayley(rep_211(), vector_z())
    top = wedge2_prim().highest_vector
    assert not is_fixed_by_cayley(wedge2_prim(), top)


def test_cayley_needs_even_degree():
    with pytest.raises(ValueError):
        is_fixed_by_cayley(standard_rep(), {0: F(1)})


LAMS = [(0, 0, 0), (1, 1, 0), (2, 1, 1), (2, 2, 0), (3, 2, 1)]


@pytest.mark.parametrize("lam", LAMS)
def test_nonvanishing(lam):
    for mu in range(lam[2], lam[1] + 1):
        r = nonvanishing_report(lam, mu)
        assert r.ok, r.to_json()


@pytest.mark.parametrize("lam", LAMS)
def test_zero_weight_bases(lam):
    assert zero_weight_basis_check(lam)


@pytest.mark.parametrize("lam", [(1, 1, 0), (2, 1, 1), (2, 2, 0), (3, 2, 1)])
def test_zero_weight_dimension_is_kostant(lam):
    M = invariant_family_rep(lam)
    for lp in (lambda_prime(lam), lambda_bar_prime(lam)):
        comp = k_component(M, lp)
        assert comp.multiplicity == 1
        assert comp.weight_dim(ZERO_WEIGHT) == kostant_multiplicity(lp, ZERO_WEIGHT) == lam[1] - lam[2] + 1


def test_invariant_vector_bounds():
    with pytest.raises(ValueError):
        invariant_vector((2, 1, 1), 0)
    with pytest.raises(ValueError):
        invariant_vector((2, 1, 0), 1)
    with pytest.raises(BoundExceeded):
        invariant_vector((4, 4, 0), 2)


def _random_vec(rng, module, support=4):
    idx = rng.sample(range(module.dim), support)
    return {i: F(rng.randint(1, 5) * rng.choice([-1, 1])) for i in idx}


def test_projection_is_idempotent_and_equivariant():
    rng = random.Random(11)
    M = rep_211()
    comp = k_component(M, (1, 1, -2))
    for _ in range(5):
        x = _random_vec(rng, M)
        p = comp.project(x)
        assert comp.project(p) == p
        for key in LEVI_ROOTS:
            assert comp.project(M.apply(key, x)) == M.apply(key, p)


def test_random_pure_tensors_reach_cartan_component():
    rng = random.Random(7)
    a, b = standard_rep(), wedge3_prim()
    for _ in range(20):
        x = {i: F(rng.randint(-3, 3) or 1) for i in range(a.dim)}
        y = {i: F(rng.randint(-3, 3) or 1) for i in range(b.dim)}
        assert cartan_product(a, x, b, y)[1]


def test_joint_kernel_at_top_weight_is_the_highest_vector():
    ks = joint_kernel(rep_211(), GL3_RAISE, (2, 1, 1))
    assert len(ks) == 1
