import math

import numpy as np
import pytest

from portho.cones import cone_contains, dual_cone_contains, ray_cone
from portho.decomp import (
    dual_one_orth_decompose,
    embed_to_lp,
    infty_orth_decompose,
    opt_decompose,
)
from portho.errors import InputError
from portho.ortho import p_orthogonal_exact
from portho.spaces import (
    base_space,
    dual_norm,
    lp_space,
    norm,
    order_unit_space,
    spectral_space,
    sup_space,
)
from portho.cones import nonneg_orthant

INF = math.inf

SIMPLICIAL = ray_cone(np.eye(4) + 0.2 * np.ones((4, 4)))


class TestOptDecompose:
    def test_base_l1(self):
        sp = base_space(nonneg_orthant(2), [1.0, 1.0])
        d = opt_decompose(sp, [3.0, -2.0], 1.0)
        assert d.status == "optimal"
        assert d.u1 == pytest.approx([3.0, 0.0])
        assert d.u2 == pytest.approx([0.0, 2.0])
        assert d.norm_aggregate == pytest.approx(5.0)

    def test_sup_minimax(self):
        sp = sup_space(2)
        d = opt_decompose(sp, [3.0, -2.0], INF)
        assert d.status == "optimal"
        assert d.norm_aggregate == pytest.approx(3.0)
        assert d.u1 - d.u2 == pytest.approx([3.0, -2.0])

    def test_positive_input_trivial(self):
        sp = lp_space(3, 2.0)
        d = opt_decompose(sp, [1.0, 2.0, 0.5], 2.0)
        assert d.u2 == pytest.approx(np.zeros(3))
        assert d.norm_aggregate == pytest.approx(norm(sp, [1.0, 2.0, 0.5]))

    @pytest.mark.parametrize("p", [1.5, 2.0, 3.0])
    def test_gradient_reaches_norm(self, p):
        sp = lp_space(5, p)
        rng = np.random.default_rng(20)
        for _ in range(10):
            v = rng.normal(size=5)
            d = opt_decompose(sp, v, p, epsilon=1e-6)
            assert d.status in ("optimal", "approximate")
            assert d.u1 - d.u2 == pytest.approx(v, abs=1e-9)
            assert np.all(d.u1 >= -1e-9) and np.all(d.u2 >= -1e-9)
            assert d.norm_aggregate <= norm(sp, v) + 1e-6
            # a decomposition can never beat the norm
            assert d.norm_aggregate >= norm(sp, v) - 1e-9

    def test_spectral_sup(self):
        sp = spectral_space(3)
        rng = np.random.default_rng(21)
        A = rng.normal(size=(3, 3))
        v = (A + A.T).ravel()
        d = opt_decompose(sp, v, INF)
        assert d.status == "optimal"
        assert d.norm_aggregate == pytest.approx(norm(sp, v), abs=1e-9)

    def test_simplicial_order_unit(self):
        e = SIMPLICIAL.generators.sum(axis=0)
        sp = order_unit_space(SIMPLICIAL, e)
        rng = np.random.default_rng(22)
        for _ in range(5):
            v = rng.normal(size=4)
            d = opt_decompose(sp, v, INF)
            assert d.status == "optimal"
            assert d.u1 - d.u2 == pytest.approx(v, abs=1e-8)
            assert cone_contains(SIMPLICIAL, d.u1, tol=1e-8)
            assert cone_contains(SIMPLICIAL, d.u2, tol=1e-8)
            assert d.norm_aggregate == pytest.approx(norm(sp, v), abs=1e-8)

    def test_bad_epsilon(self):
        with pytest.raises(InputError):
            opt_decompose(lp_space(2, 2.0), [1.0, -1.0], 2.0, epsilon=0.0)


class TestInftyOrthDecompose:
    def test_coordinate_parts(self):
        sp = sup_space(3)
        d = infty_orth_decompose(sp, [3.0, -2.0, 0.0])
        assert d.u1 == pytest.approx([3.0, 0.0, 0.0])
        assert d.u2 == pytest.approx([0.0, 2.0, 0.0])
        assert d.ortho_verdict is not None and d.ortho_verdict.is_orthogonal

    def test_spectral_parts(self):
        sp = spectral_space(2)
        d = infty_orth_decompose(sp, np.diag([1.0, -1.0]).ravel())
        assert d.u1 == pytest.approx(np.diag([1.0, 0.0]).ravel(), abs=1e-12)
        assert d.u2 == pytest.approx(np.diag([0.0, 1.0]).ravel(), abs=1e-12)
        assert d.ortho_verdict.is_orthogonal

    def test_positive_input(self):
        sp = sup_space(2)
        d = infty_orth_decompose(sp, [1.0, 2.0])
        assert d.u2 == pytest.approx([0.0, 0.0])
        assert d.ortho_verdict is None

    def test_simplicial_coefficient_split(self):
        e = SIMPLICIAL.generators.sum(axis=0)
        sp = order_unit_space(SIMPLICIAL, e)
        rng = np.random.default_rng(23)
        for _ in range(10):
            v = SIMPLICIAL.generators.T @ rng.normal(size=4)
            d = infty_orth_decompose(sp, v)
            assert d.u1 - d.u2 == pytest.approx(v, abs=1e-9)
            assert cone_contains(SIMPLICIAL, d.u1, tol=1e-9)
            if d.ortho_verdict is not None:
                assert d.ortho_verdict.is_orthogonal


class TestDualOneOrth:
    def test_sup_dual_split(self):
        sp = sup_space(3)
        d = dual_one_orth_decompose(sp, [2.0, -3.0, 0.0])
        assert d.status == "optimal"
        assert d.u1 == pytest.approx([2.0, 0.0, 0.0], abs=1e-9)
        assert d.u2 == pytest.approx([0.0, 3.0, 0.0], abs=1e-9)
        assert d.norm_aggregate == pytest.approx(5.0)
        assert d.ortho_verdict.is_orthogonal

    def test_positive_functional_trivial_half(self):
        sp = sup_space(2)
        d = dual_one_orth_decompose(sp, [1.0, 2.0])
        assert d.u2 == pytest.approx([0.0, 0.0], abs=1e-9)

    def test_spectral_trace_split(self):
        sp = spectral_space(2)
        d = dual_one_orth_decompose(sp, np.diag([1.0, -1.0]).ravel())
        assert d.status == "optimal"
        assert d.norm_aggregate == pytest.approx(2.0, abs=1e-9)
        assert d.ortho_verdict.is_orthogonal

    def test_rejects_one_smooth_space(self):
        with pytest.raises(InputError):
            dual_one_orth_decompose(lp_space(2, 2.0), [1.0, -1.0])

    @pytest.mark.parametrize(
        "sp",
        [
            sup_space(8),
            order_unit_space(SIMPLICIAL, SIMPLICIAL.generators.sum(axis=0)),
            spectral_space(4),
        ],
        ids=["sup", "order_unit", "spectral"],
    )
    def test_random_functionals_certify(self, sp):
        rng = np.random.default_rng(24)
        for _ in range(30):
            f = rng.normal(size=sp.dim)
            if sp.norm.kind == "spectral":
                d = sp.cone.side
                f = (f.reshape(d, d) + f.reshape(d, d).T).ravel()
            dec = dual_one_orth_decompose(sp, f)
            assert dec.status == "optimal"
            assert dec.u1 - dec.u2 == pytest.approx(f, abs=1e-8)
            assert dual_cone_contains(sp.cone, dec.u1, tol=1e-8)
            assert dual_cone_contains(sp.cone, dec.u2, tol=1e-8)
            assert dec.norm_aggregate == pytest.approx(dual_norm(sp, f), abs=1e-8)


class TestEmbedding:
    def test_standard_basis_identity(self):
        sp = lp_space(3, 2.0)
        emb = embed_to_lp(sp, list(np.eye(3)), 2.0)
        x = np.array([1.0, -2.0, 3.0])
        assert emb.coefficients(x) == pytest.approx(x)
        assert emb.synthesize(x) == pytest.approx(x)

    def test_subset_projection(self):
        sp = lp_space(3, 2.0)
        emb = embed_to_lp(sp, [np.eye(3)[0], np.eye(3)[2]], 2.0)
        v = 2.0 * np.eye(3)[0] - 1.0 * np.eye(3)[2]
        assert emb.coefficients(v) == pytest.approx([2.0, -1.0])
        with pytest.raises(InputError):
            emb.coefficients([0.0, 1.0, 0.0])

    def test_rejects_non_orthonormal(self):
        sp = lp_space(2, 1.0)
        with pytest.raises(InputError):
            embed_to_lp(sp, [np.array([1.0, 0.0]), np.array([0.5, 0.5])], 1.0)

    @pytest.mark.parametrize("p", [1.0, 1.5, 3.0, INF])
    def test_isometry_and_order_on_samples(self, p):
        sp = lp_space(8, p)
        rng = np.random.default_rng(25)
        # disjoint-support positive unit vectors form a p-orthonormal set
        supports = np.array_split(rng.permutation(8), 4)
        U = []
        for s in supports:
            u = np.zeros(8)
            u[s] = rng.random(size=len(s)) + 0.1
            U.append(u / norm(sp, u))
        emb = embed_to_lp(sp, U, p)
        subnorm = lp_space(4, p)
        for _ in range(50):
            alpha = rng.normal(size=4)
            x = emb.synthesize(alpha)
            assert norm(sp, x) == pytest.approx(norm(subnorm, alpha), abs=1e-9)
            assert cone_contains(sp.cone, x, tol=1e-12) == bool(np.all(alpha >= 0))

    def test_difference_of_orthogonal_pair_leaves_cone(self):
        # a nontrivial p-orthogonal positive pair never has u1 - u2 positive
        rng = np.random.default_rng(26)
        for p in (1.0, 2.0, 3.0, INF):
            sp = lp_space(6, p)
            for _ in range(50):
                mask = rng.random(size=6) < 0.5
                u1 = np.clip(rng.normal(size=6), 0.0, None) * mask
                u2 = np.clip(rng.normal(size=6), 0.0, None) * ~mask
                if u1.max() == 0.0 or u2.max() == 0.0:
                    continue
                assert p_orthogonal_exact(u1, u2, p)
                assert not cone_contains(sp.cone, u1 - u2, tol=1e-12)
