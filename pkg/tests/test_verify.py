"""Identity checkers: braid form, inverse laws, commutators, classical condition."""

import random
import warnings

from homyb import (
    Construction,
    ConstructionWarning,
    HomLieAlgebra,
    Matrix,
    Scalar,
    algebra_solution,
    algebra_solution_inverse,
    chybe_holds,
    chybe_r,
    commutes_with_alpha,
    flip,
    hybe_holds,
    inverse_holds,
    kron,
    lie_solution,
    lie_solution_inverse,
    parse_scalar,
    system_algebra,
    system_coalgebra,
    system_holds,
    tensor2,
    yb_commutator,
)
from conftest import PS2, random_assignment


def build_ex23_operator(ex23):
    a = ex23.structure
    lam = parse_scalar("lam", a.params)
    nu = parse_scalar("nu", a.params)
    return algebra_solution(a, Construction.ALG21, lam, nu)


def build_ex43_operator(ex43, nu_expr="nu"):
    lie = ex43.structure
    lam = parse_scalar("lam", lie.params)
    nu = parse_scalar(nu_expr, lie.params)
    with warnings.catch_warnings():
        warnings.simplefilter("ignore", ConstructionWarning)
        return lie_solution(lie, ex43.u_vector(), lam, nu)


class TestCommutesWithAlpha:
    def test_identity_always_commutes(self, ex23):
        alpha = ex23.structure.alpha
        b = Matrix.identity(9, ex23.structure.params)
        assert commutes_with_alpha(b, alpha).holds

    def test_algebra_operator_commutes_symbolically(self, ex23):
        op = build_ex23_operator(ex23)
        assert commutes_with_alpha(op.matrix, ex23.structure.alpha).holds

    def test_flip_commutes_with_any_twist_square(self):
        # tau(f⊗f) = (f⊗f)tau holds identically, even for non-diagonalizable f
        alpha = Matrix.from_rows(
            PS2, [[Scalar.one(PS2), Scalar.one(PS2)], [Scalar.zero(PS2), Scalar.one(PS2)]]
        )
        assert commutes_with_alpha(flip(2, 2, PS2), alpha).holds

    def test_failure_carries_a_witness(self):
        alpha = Matrix.from_rows(
            PS2, [[Scalar.one(PS2), Scalar.one(PS2)], [Scalar.zero(PS2), Scalar.one(PS2)]]
        )
        e01 = Matrix.zeros(4, 4, PS2)
        data = list(e01.data)
        data[0 * 4 + 1] = Scalar.one(PS2)
        b = Matrix(4, 4, PS2, data)
        report = commutes_with_alpha(b, alpha)
        assert not report.holds
        assert any((w.row, w.col) == (0, 3) for w in report.witnesses)

    def test_lie_operator_fails_when_twist_moves_u(self, ex43):
        op = build_ex43_operator(ex43)
        assert not commutes_with_alpha(op.matrix, ex43.structure.alpha).holds


class TestHybe:
    def test_identity_operator(self, ex23):
        # with B = id the two composites are alpha^2⊗1⊗alpha and alpha⊗1⊗alpha^2:
        # equal for idempotent or identity twists, not in general
        params = ex23.structure.params
        assert hybe_holds(Matrix.identity(9, params), Matrix.identity(3, params)).holds
        report = hybe_holds(Matrix.identity(9, params), ex23.structure.alpha)
        assert not report.holds
        assert any(
            (w.row, w.col) == (2, 2) and w.residual == parse_scalar("l - l^2", params)
            for w in report.witnesses
        )

    def test_3dim_algebra_operator_symbolically(self, ex23):
        op = build_ex23_operator(ex23)
        assert hybe_holds(op.matrix, ex23.structure.alpha).holds

    def test_lie_operator_with_moved_u_fails_at_two_entries(self, ex43):
        # independent hand computation: the residual is supported on exactly the
        # entries (e1⊗e3⊗e3 ; e1⊗e2⊗e2) and (e1⊗e3⊗e3 ; e2⊗e1⊗e2), with values
        # +-2*lam^2*nu
        op = build_ex43_operator(ex43)
        report = hybe_holds(op.matrix, ex43.structure.alpha, witness_cap=None)
        assert not report.holds
        params = ex43.structure.params
        expected = {
            (8, 4): parse_scalar("2*lam^2*nu", params),
            (8, 10): parse_scalar("-2*lam^2*nu", params),
        }
        assert {(w.row, w.col): w.residual for w in report.witnesses} == expected

    def test_lie_operator_passes_when_twist_fixes_u(self, ex43):
        # same bracket, identity twist: the invariance hypothesis holds
        lie = ex43.structure
        fixed = HomLieAlgebra.from_strings(
            "control",
            basis=list(lie.basis),
            params=lie.params,
            bracket=[
                [["0", "0", "0"], ["1", "0", "0"], ["0", "0", "0"]],
                [["-1", "0", "0"], ["0", "0", "0"], ["0", "0", "0"]],
                [["0", "0", "0"], ["0", "0", "0"], ["0", "0", "0"]],
            ],
            alpha=[["1", "0", "0"], ["0", "1", "0"], ["0", "0", "1"]],
        )
        lam = parse_scalar("lam", lie.params)
        nu = parse_scalar("nu", lie.params)
        op = lie_solution(fixed, fixed.basis_vec(2), lam, nu)
        assert hybe_holds(op.matrix, fixed.alpha).holds
        assert commutes_with_alpha(op.matrix, fixed.alpha).holds

    def test_basis_independence_under_commuting_conjugation(self, ex23):
        # conjugate by P⊗P for an invertible P with P·alpha = alpha·P
        a = ex23.structure
        params = a.params
        op = build_ex23_operator(ex23)
        p = Matrix.from_rows(
            params,
            [
                [parse_scalar(x, params) for x in row]
                for row in (["1", "0", "0"], ["0", "2", "0"], ["0", "0", "3"])
            ],
        )
        p_inv = Matrix.from_rows(
            params,
            [
                [parse_scalar(x, params) for x in row]
                for row in (["1", "0", "0"], ["0", "1/2", "0"], ["0", "0", "1/3"])
            ],
        )
        assert p @ a.alpha == a.alpha @ p
        pp = kron(p, p)
        pp_inv = kron(p_inv, p_inv)
        conjugated = pp @ op.matrix @ pp_inv
        assert hybe_holds(conjugated, a.alpha).holds == hybe_holds(op.matrix, a.alpha).holds


class TestInverse:
    def test_flip_is_self_inverse(self):
        f = flip(3, 3, PS2)
        assert inverse_holds(f, f).holds

    def test_lie_pair_on_published_example(self, ex43):
        lie = ex43.structure
        lam = parse_scalar("lam", lie.params)
        b = build_ex43_operator(ex43, nu_expr="1")
        with warnings.catch_warnings():
            warnings.simplefilter("ignore", ConstructionWarning)
            binv = lie_solution_inverse(lie, ex43.u_vector(), lam)
        report = inverse_holds(b.matrix, binv.matrix)
        assert report.holds
        assert [s.check_name for s in report.subreports] == [
            "inverse:B∘Binv",
            "inverse:Binv∘B",
        ]

    def test_algebra_pair_fails_without_involutivity(self, ex23):
        a = ex23.structure
        lam = parse_scalar("lam", a.params)
        nu = parse_scalar("nu", a.params)
        b = algebra_solution(a, Construction.ALG21, lam, nu)
        with warnings.catch_warnings():
            warnings.simplefilter("ignore", ConstructionWarning)
            binv = algebra_solution_inverse(
                a, Construction.ALG_INV22, lam, nu, unchecked=True
            )
        report = inverse_holds(b.matrix, binv.matrix, witness_cap=None)
        assert not report.holds
        for w in report.witnesses:
            assert w.residual.substitute({"l": 1}).is_zero()
            assert w.residual.substitute({"l": -1}).is_zero()

    def test_witnesses_sorted_and_capped(self, ex23):
        a = ex23.structure
        lam = parse_scalar("lam", a.params)
        nu = parse_scalar("nu", a.params)
        b = algebra_solution(a, Construction.ALG21, lam, nu)
        with warnings.catch_warnings():
            warnings.simplefilter("ignore", ConstructionWarning)
            binv = algebra_solution_inverse(
                a, Construction.ALG_INV22, lam, nu, unchecked=True
            )
        report = inverse_holds(b.matrix, binv.matrix, witness_cap=3)
        assert len(report.witnesses) == 3
        keys = [(w.row, w.col) for w in report.witnesses]
        assert keys == sorted(keys)


class TestCommutatorAndSystems:
    def test_all_identities_give_zero(self):
        n = 2
        i_n = Matrix.identity(n, PS2)
        i_nn = Matrix.identity(n * n, PS2)
        assert yb_commutator(i_nn, i_nn, i_nn, (n, n, n), i_n, i_n, i_n).is_zero()

    def test_flip_satisfies_classical_commutator(self):
        n = 2
        f = flip(n, n, PS2)
        i_n = Matrix.identity(n, PS2)
        assert yb_commutator(f, f, f, (n, n, n), i_n, i_n, i_n).is_zero()

    def test_algebra_system_on_3dim_example(self, ex23):
        a = ex23.structure
        lam = parse_scalar("lam", a.params)
        nu = parse_scalar("nu", a.params)
        w, z, x = system_algebra(a, lam, nu)
        report = system_holds(w, z, x, a.alpha)
        assert report.holds
        assert [s.check_name for s in report.subreports] == [
            "[W,W,W]",
            "[Z,Z,Z]",
            "[W,X,X]",
            "[X,X,Z]",
        ]
        www = yb_commutator(
            w.matrix, w.matrix, w.matrix, (3, 3, 3), a.alpha, a.alpha, a.alpha
        )
        assert www.is_zero()

    def test_coalgebra_system_on_3dim_example(self, ex33):
        c = ex33.structure
        lam = parse_scalar("lam", c.params)
        nu = parse_scalar("nu", c.params)
        w, z, x = system_coalgebra(c, lam, nu)
        assert system_holds(w, z, x, c.alpha).holds

    def test_identity_system(self):
        i2 = Matrix.identity(2, PS2)
        i4 = Matrix.identity(4, PS2)
        assert system_holds(i4, i4, i4, i2).holds


class TestChybe:
    def test_bracket_tensor_from_published_example(self, ex43):
        lie = ex43.structure
        r = chybe_r(lie, lie.basis_vec(0), lie.basis_vec(1), ex43.u_vector(), 0, 0)
        report = chybe_holds(r, lie)
        assert report.holds
        assert "typo_readings" in report.metadata

    def test_zero_tensor_holds(self, ex43):
        lie = ex43.structure
        zero = tuple(Scalar.zero(lie.params) for _ in range(9))
        assert chybe_holds(zero, lie).holds

    def test_non_solution_fails_with_predicted_witness(self, ex43):
        lie = ex43.structure
        r = tensor2(lie.basis_vec(0), lie.basis_vec(1))
        report = chybe_holds(r, lie)
        assert not report.holds
        # middle bracket contributes alpha(e1)⊗[e2,e1]⊗alpha(e2) = -e1⊗e1⊗e2,
        # flat index (0*3+0)*3+1 = 1
        assert len(report.witnesses) == 1
        w = report.witnesses[0]
        assert (w.row, w.col) == (1, 0)
        assert w.residual == Scalar.constant(lie.params, -1)


class TestSymbolicEvaluationAgreement:
    CASES = 5

    def _agrees(self, make_report, params):
        symbolic = make_report(lambda m: m).holds
        rng = random.Random(987654321)
        for _ in range(self.CASES):
            point = random_assignment(params, rng)
            evaluated = make_report(lambda m: m.substitute(point)).holds
            assert evaluated == symbolic

    def test_hybe_agreement(self, ex23):
        a = ex23.structure
        op = build_ex23_operator(ex23)
        self._agrees(
            lambda ev: hybe_holds(ev(op.matrix), ev(a.alpha)), a.params
        )

    def test_commutes_agreement(self, ex23):
        a = ex23.structure
        op = build_ex23_operator(ex23)
        self._agrees(
            lambda ev: commutes_with_alpha(ev(op.matrix), ev(a.alpha)), a.params
        )

    def test_failing_inverse_agreement(self, ex23):
        # generic rational points avoid l = +-1, so the verdict stays False
        a = ex23.structure
        lam = parse_scalar("lam", a.params)
        nu = parse_scalar("nu", a.params)
        b = algebra_solution(a, Construction.ALG21, lam, nu)
        with warnings.catch_warnings():
            warnings.simplefilter("ignore", ConstructionWarning)
            binv = algebra_solution_inverse(
                a, Construction.ALG_INV22, lam, nu, unchecked=True
            )
        self._agrees(
            lambda ev: inverse_holds(ev(b.matrix), ev(binv.matrix)), a.params
        )

    def test_system_agreement(self, ex33):
        c = ex33.structure
        lam = parse_scalar("lam", c.params)
        nu = parse_scalar("nu", c.params)
        w, z, x = system_coalgebra(c, lam, nu)
        self._agrees(
            lambda ev: system_holds(
                ev(w.matrix), ev(z.matrix), ev(x.matrix), ev(c.alpha)
            ),
            c.params,
        )

    def test_chybe_agreement(self, ex23, ex43):
        lie = ex43.structure
        r = tensor2(lie.basis_vec(0), lie.basis_vec(1))
        symbolic = chybe_holds(r, lie).holds
        rng = random.Random(24680)
        for _ in range(self.CASES):
            point = random_assignment(lie.params, rng)
            evaluated = chybe_holds(
                tuple(s.substitute(point) for s in r), lie.substitute(point)
            ).holds
            assert evaluated == symbolic
