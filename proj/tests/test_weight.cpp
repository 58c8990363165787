#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <random>

#include "charfactor/weight.hpp"
#include "oracles.hpp"

using namespace charfactor;

namespace {

std::vector<int> v(std::initializer_list<int> x) { return x; }

// Sign of the rearrangement v -> mu, via inversions of the source indices.
int rearrangement_sign(const StrictVector& from, const StrictVector& to) {
    std::vector<int> source;
    for (int x : to.entries())
        source.push_back(static_cast<int>(std::find(from.entries().begin(), from.entries().end(), x) -
                                          from.entries().begin()));
    return oracle::inversion_sign(source);
}

}  // namespace

TEST_CASE("rho and shift") {
    CHECK(rho(1).entries() == v({0}));
    CHECK(rho(4).entries() == v({3, 2, 1, 0}));
    CHECK(rho(6).entries() == v({5, 4, 3, 2, 1, 0}));
    CHECK(shift(WeightVector::zero(4)).entries() == v({3, 2, 1, 0}));
    CHECK(shift(WeightVector(v({1, 1, 0, 0}))).entries() == v({4, 3, 1, 0}));
    CHECK(shift(WeightVector(v({2, 0}))).entries() == v({3, 0}));
    CHECK_THROWS_WITH_AS(WeightVector(v({0, 1})), "weight not dominant", std::invalid_argument);
    CHECK_THROWS_AS(StrictVector(v({1, 1})), std::invalid_argument);
    for (const auto& w : dominant_weights_in_box(4, -2, 2)) CHECK(unshift(shift(w)) == w);
}

TEST_CASE("residue balance") {
    CHECK(is_balanced(StrictVector(v({3, 2, 1, 0})), 2, 2));
    CHECK_FALSE(is_balanced(StrictVector(v({4, 2, 1, 0})), 2, 2));
    for (int m = 1; m <= 9; ++m)
        for (int n = 1; m * n <= 9; ++n) CHECK(is_balanced(rho(m * n), m, n));
    CHECK(residue(-3, 2) == 1);
    CHECK_THROWS_AS(is_balanced(rho(5), 2, 2), std::invalid_argument);
}

TEST_CASE("balance is invariant under adding a constant vector") {
    for (auto [m, n] : {std::pair{2, 2}, std::pair{2, 3}, std::pair{3, 2}}) {
        for (const auto& w : dominant_weights_in_box(m * n, 0, 3)) {
            const bool base = is_balanced(shift(w), m, n);
            for (int c : {-5, -1, 1, 2, 7}) {
                auto e = w.entries();
                for (auto& x : e) x += c;
                CHECK(is_balanced(shift(WeightVector(e)), m, n) == base);
            }
        }
    }
}

TEST_CASE("normalize_to_mu examples") {
    const auto a = normalize_to_mu(StrictVector(v({3, 2, 1, 0})), 2, 2);
    CHECK(a.mu.entries() == v({2, 0, 3, 1}));
    CHECK(a.w0_sign == rearrangement_sign(StrictVector(v({3, 2, 1, 0})), a.mu));
    CHECK(a.w0_sign == -1);

    const auto b = normalize_to_mu(StrictVector(v({4, 3, 1, 0})), 2, 2);
    CHECK(b.mu.entries() == v({4, 0, 3, 1}));
    CHECK(b.w0_sign == 1);

    const auto c = normalize_to_mu(StrictVector(v({4, 2, 3, 1})), 2, 2);
    CHECK(c.mu.entries() == v({4, 2, 3, 1}));
    CHECK(c.w0_sign == 1);

    CHECK_THROWS_WITH_AS(normalize_to_mu(StrictVector(v({4, 2, 1, 0})), 2, 2), "residue condition fails",
                         std::invalid_argument);
}

TEST_CASE("normalization permutation realizes mu") {
    for (auto [m, n] : {std::pair{2, 2}, std::pair{2, 3}, std::pair{3, 2}, std::pair{1, 4}, std::pair{4, 1}}) {
        for (const auto& w : dominant_weights_in_box(m * n, -1, 3)) {
            const StrictVector s = shift(w);
            if (!is_balanced(s, m, n)) continue;
            const auto norm = normalize_to_mu(s, m, n);
            CHECK(act(norm.w0, s.entries()) == norm.mu.entries());
            CHECK(norm.w0.sign() == norm.w0_sign);
            CHECK(norm.w0_sign == rearrangement_sign(s, norm.mu));
            for (int i = 0; i < m * n; ++i) CHECK(residue(norm.mu[i], n) == i / m);
        }
    }
}

TEST_CASE("eta weights") {
    for (auto [m, n] : {std::pair{2, 2}, std::pair{2, 3}, std::pair{3, 2}, std::pair{1, 3}, std::pair{3, 3}}) {
        const auto norm = normalize_to_mu(rho(m * n), m, n);
        for (const auto& eta : eta_weights(norm.mu, m, n)) CHECK(eta == WeightVector::zero(m));
    }
    const auto e = eta_weights(StrictVector(v({4, 0, 3, 1})), 2, 2);
    REQUIRE(e.size() == 2);
    CHECK(e[0].entries() == v({1, 0}));
    CHECK(e[1].entries() == v({0, 0}));
    const auto z = eta_weights(StrictVector(v({2, 0, 3, 1})), 2, 2);
    CHECK(z[0] == WeightVector::zero(2));
    CHECK(z[1] == WeightVector::zero(2));
    // negative entries: (-2, -4) residue 0 mod 2, (-1, -3) residue 1
    const auto neg = eta_weights(StrictVector(v({-2, -4, -1, -3})), 2, 2);
    CHECK(neg[0].entries() == v({-2, -2}));
    CHECK(neg[1].entries() == v({-2, -2}));
}

TEST_CASE("eta weights are dominant whenever defined") {
    for (auto [m, n] : {std::pair{2, 2}, std::pair{2, 3}, std::pair{3, 2}}) {
        for (const auto& w : dominant_weights_in_box(m * n, -2, 4)) {
            const StrictVector s = shift(w);
            if (!is_balanced(s, m, n)) continue;
            std::vector<WeightVector> etas;
            CHECK_NOTHROW(etas = eta_weights(normalize_to_mu(s, m, n).mu, m, n));
            CHECK(etas.size() == static_cast<std::size_t>(n));
        }
    }
}

TEST_CASE("integer list parsing") {
    CHECK(parse_int_list("1,1,0,0") == v({1, 1, 0, 0}));
    CHECK(parse_int_list(" 3, -2 ,+1") == v({3, -2, 1}));
    CHECK(parse_int_list("").empty());
    CHECK_THROWS_AS(parse_int_list("1,,2"), std::invalid_argument);
    CHECK_THROWS_AS(parse_int_list("1,a"), std::invalid_argument);
    CHECK_THROWS_AS(parse_int_list("1.5"), std::invalid_argument);
    CHECK(join_ints(v({3, -1, 0})) == "3,-1,0");
}

TEST_CASE("dominant weights in a box") {
    CHECK(dominant_weights_in_box(4, 0, 3).size() == 35);
    CHECK(dominant_weights_in_box(6, 0, 3).size() == 84);
    CHECK(dominant_weights_in_box(3, 2, 1).empty());
    const auto w = dominant_weights_in_box(2, 0, 1);
    REQUIRE(w.size() == 3);
    CHECK(w[0].entries() == v({1, 1}));
    CHECK(w[2].entries() == v({0, 0}));
}
