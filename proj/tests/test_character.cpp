#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <random>
#include <set>

#include "charfactor/character.hpp"
#include "charfactor/matrix.hpp"
#include "oracles.hpp"

using namespace charfactor;

namespace {

CyclotomicNumber q(long v) { return CyclotomicNumber(1, v); }
LaurentPoly t(int nvars, int i) { return LaurentPoly::variable(nvars, i); }

std::vector<CyclotomicNumber> rational_point(std::mt19937_64& rng, int size) {
    std::uniform_int_distribution<int> num(-30, 30);
    std::uniform_int_distribution<int> den(1, 7);
    for (;;) {
        std::vector<CyclotomicNumber> x;
        for (int i = 0; i < size; ++i) x.emplace_back(1, make_rational(num(rng), den(rng)));
        bool ok = true;
        for (int i = 0; i < size && ok; ++i) {
            ok = !x[static_cast<std::size_t>(i)].is_zero();
            for (int j = i + 1; j < size && ok; ++j) ok = !(x[static_cast<std::size_t>(i)] == x[static_cast<std::size_t>(j)]);
        }
        if (ok) return x;
    }
}

Perm random_perm(std::mt19937_64& rng, int size) {
    std::vector<int> images(static_cast<std::size_t>(size));
    std::iota(images.begin(), images.end(), 0);
    std::shuffle(images.begin(), images.end(), rng);
    return Perm(images);
}

std::vector<StrictVector> strict_decreasing_in_box(int length, int hi) {
    std::vector<StrictVector> out;
    std::vector<int> cur;
    auto rec = [&](auto&& self, int upper) -> void {
        if (static_cast<int>(cur.size()) == length) {
            out.emplace_back(cur);
            return;
        }
        for (int x = upper; x >= 0; --x) {
            cur.push_back(x);
            self(self, x - 1);
            cur.pop_back();
        }
    };
    rec(rec, hi);
    return out;
}

// Residues of lambda + rho mod N pairwise distinct: the classical criterion
// for a nonzero character value at the Coxeter element.
bool distinct_residues(const WeightVector& lambda) {
    std::set<int> seen;
    const StrictVector shifted = shift(lambda);
    for (int x : shifted.entries()) seen.insert(residue(x, lambda.size()));
    return static_cast<int>(seen.size()) == lambda.size();
}

}  // namespace

TEST_CASE("Weyl numerator at t.c_n: small direct cases") {
    // unbalanced: lambda = (1,0,0,0) -> lambda + rho = (4,2,1,0)
    CHECK(weyl_numerator_tc(StrictVector({4, 2, 1, 0}), 2, 2).is_zero());
    // m = 1, n = 2, mu = (2,1): x1^2 x2 - x1 x2^2 at (t, -t) = -t^3 - t^3
    CHECK(weyl_numerator_tc(StrictVector({2, 1}), 1, 2) == LaurentPoly::monomial({3}, q(-2)));
    CHECK_THROWS_AS(weyl_numerator_tc(StrictVector({9, 8, 7, 6, 5, 4, 3, 2, 1, 0}), 5, 2), BoundExceeded);
}

TEST_CASE("Weyl numerator matches the term-by-term alternating sum") {
    std::mt19937_64 rng(21);
    for (auto [m, n] : {std::pair{2, 2}, std::pair{2, 3}, std::pair{3, 2}, std::pair{1, 3}}) {
        for (int trial = 0; trial < 4; ++trial) {
            std::vector<int> pool(12);
            std::iota(pool.begin(), pool.end(), -3);
            std::shuffle(pool.begin(), pool.end(), rng);
            pool.resize(static_cast<std::size_t>(m * n));
            CHECK(weyl_numerator_tc(StrictVector(pool), m, n) == oracle::naive_numerator(pool, m, n));
        }
    }
}

TEST_CASE("alternation and homogeneity") {
    std::mt19937_64 rng(22);
    for (auto [m, n] : {std::pair{2, 2}, std::pair{2, 3}, std::pair{3, 2}}) {
        for (const auto& w : dominant_weights_in_box(m * n, 0, 2)) {
            const StrictVector mu = shift(w);
            const LaurentPoly a = weyl_numerator_tc(mu, m, n);
            CHECK(a.is_homogeneous());
            if (!a.is_zero()) CHECK(a.terms().begin()->first.total_degree() == mu.sum());
            const Perm s = random_perm(rng, m * n);
            const LaurentPoly b = weyl_numerator_tc(StrictVector(act(s, mu.entries())), m, n);
            CHECK(b == (s.sign() > 0 ? a : -a));
        }
    }
}

TEST_CASE("unbalanced exponent vectors give a vanishing numerator") {
    for (auto [m, n] : {std::pair{2, 2}, std::pair{2, 3}, std::pair{3, 2}}) {
        int checked = 0;
        for (const auto& v : strict_decreasing_in_box(m * n, 6)) {
            if (is_balanced(v, m, n)) continue;
            CHECK(weyl_numerator_tc(v, m, n).is_zero());
            ++checked;
        }
        CHECK(checked > 0);
    }
}

TEST_CASE("GL(m) alternants") {
    const LaurentPoly v3 = (t(3, 0) - t(3, 1)) * (t(3, 0) - t(3, 2)) * (t(3, 1) - t(3, 2));
    CHECK(weyl_numerator_gl(rho(3)) == v3);
    CHECK(weyl_numerator_gl(StrictVector({2, 0}), 2) == t(2, 0).pow(4) - t(2, 1).pow(4));
    CHECK(weyl_numerator_gl(StrictVector({1, 0})) == t(2, 0) - t(2, 1));
}

TEST_CASE("Weyl denominator closed form") {
    // (m,n) = (2,2): -4 t1 t2 (t1^2 - t2^2)^2
    const LaurentPoly d22 = LaurentPoly::monomial({1, 1}, q(-4)) * (t(2, 0).pow(2) - t(2, 1).pow(2)).pow(2);
    CHECK(denominator_closed_form(2, 2) == d22);
    CHECK(denominator_direct(2, 2) == d22);
    // (m,n) = (1,2): t1 - (-t1)
    CHECK(denominator_direct(1, 2) == LaurentPoly::monomial({1}, q(2)));
    for (int n = 2; n <= 5; ++n) {
        CyclotomicNumber v(n, 1);
        for (int i = 0; i < n; ++i)
            for (int j = i + 1; j < n; ++j) v *= root_power(n, i) - root_power(n, j);
        CHECK(denominator_closed_form(1, n) == LaurentPoly::monomial({n * (n - 1) / 2}, v));
    }
    for (auto [m, n] : {std::pair{2, 2}, std::pair{2, 3}, std::pair{3, 2}, std::pair{2, 4}})
        CHECK(denominator_direct(m, n) == denominator_closed_form(m, n));
}

TEST_CASE("telescoping product over all n-th roots") {
    for (int n = 2; n <= 6; ++n) {
        for (int k = 0; k < n; ++k) {
            LaurentPoly p = LaurentPoly::constant(2, CyclotomicNumber(n, 1));
            for (int l = k; l < n; ++l) p *= t(2, 0) - t(2, 1) * root_power(n, l - k);
            for (int s = 0; s < k; ++s) p *= t(2, 0) - t(2, 1) * root_power(n, s - k);
            CHECK(p == t(2, 0).pow(static_cast<unsigned>(n)) - t(2, 1).pow(static_cast<unsigned>(n)));
        }
    }
}

TEST_CASE("closed form denominator equals the signed normalized rho numerator") {
    for (auto [m, n] : {std::pair{2, 2}, std::pair{2, 3}, std::pair{3, 2}}) {
        const auto norm = normalize_to_mu(rho(m * n), m, n);
        LaurentPoly a = weyl_numerator_tc(norm.mu, m, n);
        if (norm.w0_sign < 0) a = -a;
        CHECK(a == denominator_closed_form(m, n));
    }
}

TEST_CASE("Bareiss determinant against Leibniz expansion") {
    std::mt19937_64 rng(23);
    for (int order : {1, 3, 4, 5}) {
        for (int size = 1; size <= 5; ++size) {
            SquareMatrix a(size);
            for (int i = 0; i < size; ++i)
                for (int j = 0; j < size; ++j) a(i, j) = oracle::random_cyclotomic(rng, order, 3);
            // force a zero leading pivot sometimes
            if (size > 1) a(0, 0) = CyclotomicNumber(order, 0);
            CHECK(determinant(a) == oracle::leibniz_det(a));
        }
    }
    SquareMatrix singular(3);
    for (int i = 0; i < 3; ++i)
        for (int j = 0; j < 3; ++j) singular(i, j) = CyclotomicNumber(1, i + j);
    CHECK(determinant(singular).is_zero());
}

TEST_CASE("Schur polynomial examples") {
    const std::vector<CyclotomicNumber> roots4{q(1), root_power(4, 1), q(-1), root_power(4, 3)};
    CHECK(schur_symbolic(WeightVector::zero(4)) == LaurentPoly::constant(4, q(1)));
    CHECK(schur_eval_tableau(WeightVector({1, 0, 0, 0}), roots4).is_zero());
    CHECK(schur_eval_alternant(WeightVector({1, 0, 0, 0}), roots4).is_zero());

    LaurentPoly e2(4);
    for (int a = 0; a < 4; ++a)
        for (int b = a + 1; b < 4; ++b) e2 += t(4, a) * t(4, b);
    CHECK(schur_symbolic(WeightVector({1, 1, 0, 0})) == e2);

    // dimension of the GL(3) module of highest weight (2,1,0) is 8
    Rational dim = 0;
    const LaurentPoly s21 = schur_symbolic(WeightVector({2, 1, 0}));
    for (const auto& [mono, c] : s21.terms()) dim += *c.as_rational();
    CHECK(dim == 8);
    // determinant twist
    CHECK(schur_symbolic(WeightVector({-1, -1})) == LaurentPoly::monomial({-1, -1}, q(1)));
    CHECK(schur_symbolic(WeightVector({1, 0, -1})) ==
          schur_symbolic(WeightVector({2, 1, 0})) * LaurentPoly::monomial({-1, -1, -1}, q(1)));
}

TEST_CASE("non-regular points are rejected by the alternant method") {
    const std::vector<CyclotomicNumber> repeated{q(2), q(2), q(3)};
    CHECK_THROWS_AS(schur_eval_alternant(WeightVector({1, 0, 0}), repeated), NonRegularPoint);
    CHECK_THROWS_WITH(schur_eval_alternant(WeightVector({1, 0, 0}), repeated),
                      "point not regular; use tableau method");
    CHECK(schur_eval_tableau(WeightVector({1, 0, 0}), repeated) == q(7));
    const std::vector<CyclotomicNumber> with_zero{q(0), q(2), q(3)};
    CHECK_THROWS_AS(schur_eval_alternant(WeightVector({1, 0, 0}), with_zero), NonRegularPoint);
}

TEST_CASE("tableau and alternant-ratio Schur agree") {
    std::mt19937_64 rng(24);
    for (int size = 1; size <= 4; ++size) {
        for (const auto& w : dominant_weights_in_box(size, -2, 2)) {
            const LaurentPoly s = schur_symbolic(w);
            for (int trial = 0; trial < 3; ++trial) {
                const auto x = rational_point(rng, size);
                CHECK(lp_eval(s, x) == schur_eval_alternant(w, x));
            }
        }
    }
    // cyclotomic regular point
    const auto x = twisted_point(std::vector{q(2), q(5)}, 3);
    for (const auto& w : dominant_weights_in_box(6, 0, 2))
        CHECK(schur_eval_tableau(w, x) == schur_eval_alternant(w, x));
}

TEST_CASE("Theta at t.c_n via block specialization") {
    // e_2(t1, t2, -t1, -t2) = -(t1^2 + t2^2)
    CHECK(schur_at_twisted(WeightVector({1, 1, 0, 0}), 2, 2) == -(t(2, 0).pow(2) + t(2, 1).pow(2)));
    CHECK(schur_at_twisted(WeightVector({1, 0, 0, 0}), 2, 2).is_zero());
    const std::vector<CyclotomicNumber> tp{q(2), q(3)};
    const auto x = twisted_point(tp, 2);
    CHECK(oracle::brute_e2(x) == q(-13));
    CHECK(lp_eval(schur_at_twisted(WeightVector({1, 1, 0, 0}), 2, 2), tp) == q(-13));
}

TEST_CASE("Coxeter values") {
    CHECK(coxeter_value(WeightVector::zero(5)).is_one());
    CHECK(coxeter_value(WeightVector({1, 0, 0, 0})).is_zero());
    // e_2(1, i, -1, -i) = 0 by direct expansion
    CHECK(oracle::brute_e2(coxeter_point(4)).is_zero());
    CHECK(coxeter_value(WeightVector({1, 1, 0, 0})).is_zero());
    CHECK(coxeter_value(WeightVector({1, 1, 1, 0})).is_zero());
    CHECK(coxeter_value(WeightVector({1, 1})) == q(-1));
    CHECK(coxeter_value(WeightVector({1, 0, -1})) == q(-1));
}

TEST_CASE("Kostant range and vanishing pattern at the Coxeter element") {
    for (int size = 1; size <= 6; ++size) {
        for (const auto& w : dominant_weights_in_box(size, -4, 4)) {
            CyclotomicNumber v;
            REQUIRE_NOTHROW(v = coxeter_value(w));
            CHECK(v.is_zero() == !distinct_residues(w));
            CHECK(coxeter_value(w, true) == v);
        }
    }
}
