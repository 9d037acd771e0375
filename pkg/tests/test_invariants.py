"""Randomized battery for the structural identities of E+ and E-."""

import math

import numpy as np
import pytest

from symxform.expfun import eval_antisym, eval_sym
from symxform.symgroup import enumerate_permutations

TOL = 1e-10


def close(a, b, scale=1.0):
    return abs(a - b) <= TOL * max(1.0, scale)


class TestPermutationBehavior:
    @pytest.mark.parametrize("n", [2, 3, 4])
    def test_sym_invariant(self, n):
        rng = np.random.default_rng(100 + n)
        perms = enumerate_permutations(n)
        for _ in range(10):
            lam = rng.uniform(-2, 2, n)
            x = rng.uniform(-1, 1, n)
            base = eval_sym(lam, x)
            for w in perms:
                assert close(eval_sym(lam, w.apply(x)), base, abs(base))
                assert close(eval_sym(w.apply(lam), x), base, abs(base))

    @pytest.mark.parametrize("n", [2, 3, 4])
    def test_antisym_alternates(self, n):
        rng = np.random.default_rng(110 + n)
        perms = enumerate_permutations(n)
        for _ in range(10):
            lam = rng.uniform(-2, 2, n)
            x = rng.uniform(-1, 1, n)
            base = eval_antisym(lam, x)
            for w in perms:
                assert close(eval_antisym(lam, w.apply(x)), w.sign * base, abs(base))
                assert close(eval_antisym(w.apply(lam), x), w.sign * base, abs(base))


class TestTranslationAndShift:
    @pytest.mark.parametrize("n", [2, 3, 5])
    def test_translation_picks_up_phase(self, n):
        rng = np.random.default_rng(120 + n)
        for _ in range(20):
            lam = rng.uniform(-2, 2, n)
            x = rng.uniform(-1, 1, n)
            a = rng.uniform(-1, 1)
            phase = np.exp(2j * np.pi * np.sum(lam) * a)
            for f in (eval_antisym, eval_sym):
                base = f(lam, x)
                assert close(f(lam, x + a), phase * base, abs(base))

    @pytest.mark.parametrize("n", [2, 3, 5])
    def test_weight_shift_on_sum_zero_hyperplane(self, n):
        rng = np.random.default_rng(130 + n)
        for _ in range(20):
            lam = rng.uniform(-2, 2, n)
            x = rng.uniform(-1, 1, n)
            x -= x.mean()  # project onto sum(x) = 0
            nu = rng.uniform(-2, 2)
            for f in (eval_antisym, eval_sym):
                base = f(lam, x)
                assert close(f(lam + nu, x), base, abs(base))


class TestScalingAndDuality:
    @pytest.mark.parametrize("n", [2, 3, 4])
    def test_scaling(self, n):
        rng = np.random.default_rng(140 + n)
        for _ in range(20):
            lam = rng.uniform(-2, 2, n)
            x = rng.uniform(-1, 1, n)
            c = rng.uniform(-2, 2)
            for f in (eval_antisym, eval_sym):
                assert close(f(c * lam, x), f(lam, c * x), abs(f(lam, c * x)))

    @pytest.mark.parametrize("n", [2, 3, 4])
    def test_duality(self, n):
        rng = np.random.default_rng(150 + n)
        for _ in range(20):
            lam = rng.uniform(-2, 2, n)
            x = rng.uniform(-1, 1, n)
            for f in (eval_antisym, eval_sym):
                assert close(f(lam, x), f(x, lam), abs(f(lam, x)))


class TestConjugation:
    @pytest.mark.parametrize("n,sign", [(2, -1), (3, -1), (4, 1), (5, 1)])
    def test_antisym_pairing(self, n, sign):
        # E-_lambda(x) = +/- conj(E-_{-reverse(lambda)}(x)), + for n mod 4 in
        # {0, 1} and - for n mod 4 in {2, 3}
        rng = np.random.default_rng(160 + n)
        for _ in range(20):
            lam = np.sort(rng.uniform(-2, 2, n))[::-1]
            x = rng.uniform(-1, 1, n)
            lhs = eval_antisym(lam, x)
            rhs = sign * np.conj(eval_antisym(-lam[::-1], x))
            assert close(lhs, rhs, abs(lhs))

    @pytest.mark.parametrize("n", [2, 3, 4, 5])
    def test_sym_pairing_always_plus(self, n):
        rng = np.random.default_rng(170 + n)
        for _ in range(20):
            lam = rng.uniform(-2, 2, n)
            x = rng.uniform(-1, 1, n)
            lhs = eval_sym(lam, x)
            rhs = np.conj(eval_sym(-lam[::-1], x))
            assert close(lhs, rhs, abs(lhs))

    @pytest.mark.parametrize("n", [2, 3, 4, 5])
    def test_self_conjugate_weights(self, n):
        # lambda = -reverse(lambda): E- is real for n mod 4 in {0,1} and pure
        # imaginary for n mod 4 in {2,3}; E+ is always real
        rng = np.random.default_rng(180 + n)
        for _ in range(20):
            half = rng.uniform(0.1, 2, n // 2)
            if n % 2:
                lam = np.concatenate([half, [0.0], -half[::-1]])
            else:
                lam = np.concatenate([half, -half[::-1]])
            x = rng.uniform(-1, 1, n)
            minus = eval_antisym(lam, x)
            plus = eval_sym(lam, x)
            if n % 4 in (0, 1):
                assert abs(minus.imag) <= TOL * max(1.0, abs(minus))
            else:
                assert abs(minus.real) <= TOL * max(1.0, abs(minus))
            assert abs(plus.imag) <= TOL * max(1.0, abs(plus))


class TestBoundary:
    @pytest.mark.parametrize("n", [2, 3, 4])
    def test_antisym_vanishes_on_walls(self, n):
        rng = np.random.default_rng(190 + n)
        for _ in range(20):
            lam = rng.uniform(-2, 2, n)
            x = rng.uniform(-1, 1, n)
            i, j = rng.choice(n, size=2, replace=False)
            x[j] = x[i]
            assert abs(eval_antisym(lam, x)) <= 1e-12 * math.factorial(n)

    @pytest.mark.parametrize("n", [2, 3])
    def test_sym_normal_derivative_second_order(self, n):
        # on a wall x_i = x_j the derivative of E+ along (e_i - e_j)/sqrt(2)
        # vanishes; its centered difference must shrink like h^2
        rng = np.random.default_rng(200 + n)
        for _ in range(5):
            lam = rng.uniform(-2, 2, n)
            x = rng.uniform(-1, 1, n)
            x[1] = x[0]
            u = np.zeros(n)
            u[0], u[1] = 1 / math.sqrt(2), -1 / math.sqrt(2)

            def deriv(h):
                return abs(eval_sym(lam, x + h * u) - eval_sym(lam, x - h * u)) / (2 * h)

            d1, d2 = deriv(1e-3), deriv(5e-4)
            scale = abs(eval_sym(lam, x)) + 1.0
            assert d1 <= 1e-4 * scale
            if d1 > 1e-11 * scale:  # ratio is noise once at rounding level
                assert d2 <= d1 / 3.0
