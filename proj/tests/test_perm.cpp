#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <random>
#include <set>

#include "charfactor/perm.hpp"

using namespace charfactor;

namespace {

unsigned long long factorial(int k) {
    unsigned long long f = 1;
    for (int i = 2; i <= k; ++i) f *= static_cast<unsigned long long>(i);
    return f;
}

unsigned long long power(unsigned long long base, int e) {
    unsigned long long r = 1;
    while (e-- > 0) r *= base;
    return r;
}

Perm random_perm(std::mt19937_64& rng, int size) {
    std::vector<int> images(static_cast<std::size_t>(size));
    std::iota(images.begin(), images.end(), 0);
    std::shuffle(images.begin(), images.end(), rng);
    return Perm(images);
}

std::size_t count_FWH(int m, int n) {
    const BlockSubgroups blocks(m, n);
    std::size_t count = 0;
    for (const Perm& tau : enumerate_group(m * n)) count += in_FWH(tau, blocks);
    return count;
}

// Canonical coset label: images sorted within each row block.
std::vector<int> coset_label(const Perm& tau, int m) {
    auto images = tau.images();
    for (std::size_t b = 0; b < images.size(); b += static_cast<std::size_t>(m))
        std::sort(images.begin() + static_cast<long>(b), images.begin() + static_cast<long>(b) + m);
    return images;
}

}  // namespace

TEST_CASE("construction rejects non-bijections") {
    CHECK_THROWS_AS(Perm(std::vector{0, 0, 1}), std::invalid_argument);
    CHECK_THROWS_AS(Perm(std::vector{0, 3, 1}), std::invalid_argument);
    CHECK(Perm::identity(3).to_string() == "[1,2,3]");
}

TEST_CASE("sign") {
    CHECK(Perm::identity(4).sign() == 1);
    CHECK(Perm::transposition(4, 0, 1).sign() == -1);
    CHECK(Perm::cycle(4, std::vector{1, 2, 3}).sign() == 1);
    CHECK(Perm::cycle(5, std::vector{0, 1, 2, 3}).sign() == -1);
}

TEST_CASE("sign is a homomorphism") {
    std::mt19937_64 rng(1);
    for (int trial = 0; trial < 200; ++trial) {
        const Perm a = random_perm(rng, 7);
        const Perm b = random_perm(rng, 7);
        CHECK((a * b).sign() == a.sign() * b.sign());
        CHECK((a * a.inverse()).is_identity());
    }
}

TEST_CASE("act") {
    const std::vector<int> v{4, 3, 1, 0};
    CHECK(act(Perm::identity(4), v) == v);
    CHECK(act(Perm::transposition(4, 0, 1), v) == std::vector{3, 4, 1, 0});
    CHECK_THROWS_AS(act(Perm::identity(3), v), std::invalid_argument);
    std::mt19937_64 rng(2);
    for (int trial = 0; trial < 100; ++trial) {
        const Perm s = random_perm(rng, 6);
        const Perm t = random_perm(rng, 6);
        std::vector<int> w(6);
        for (auto& x : w) x = static_cast<int>(rng() % 20);
        CHECK(act(s * t, w) == act(s, act(t, w)));
    }
}

TEST_CASE("enumeration sizes and order") {
    std::vector<Perm> all(enumerate_group(4).begin(), enumerate_group(4).end());
    CHECK(all.size() == 24);
    CHECK(std::is_sorted(all.begin(), all.end()));
    CHECK(std::set<Perm>(all.begin(), all.end()).size() == 24);
    CHECK(all.front().is_identity());

    auto count = [](const BlockProductGroup& g) {
        std::set<Perm> seen(g.begin(), g.end());
        return seen.size();
    };
    CHECK(count(enumerate_WH(2, 2)) == 4);
    CHECK(count(enumerate_F(2, 2)) == 4);
    CHECK(count(enumerate_WH(2, 3)) == 8);
    CHECK(count(enumerate_F(2, 3)) == 36);
    CHECK(count(enumerate_WH(3, 2)) == 36);
    CHECK(enumerate_F(3, 3).order() == 216);

    CHECK_THROWS_AS(enumerate_group(10), BoundExceeded);
    CHECK_THROWS_WITH(enumerate_group(10), doctest::Contains("enumeration too large"));
    CHECK_NOTHROW(enumerate_group(10, 10));
    CHECK_THROWS_AS(enumerate_WH(5, 2), BoundExceeded);
}

TEST_CASE("subgroups preserve their blocks") {
    const BlockSubgroups b(3, 2);
    for (const Perm& s : enumerate_WH(3, 2))
        for (int i = 0; i < 6; ++i) CHECK(b.row_of(s(i)) == b.row_of(i));
    for (const Perm& e : enumerate_F(3, 2))
        for (int i = 0; i < 6; ++i) CHECK(b.col_of(e(i)) == b.col_of(i));
}

TEST_CASE("in_FWH examples") {
    const BlockSubgroups b(2, 2);
    CHECK(in_FWH(Perm::identity(4), b));
    CHECK(in_FWH(Perm::transposition(4, 0, 1), b));
    // (1 3) sends column 1 to column 1: in F
    CHECK(in_FWH(Perm::transposition(4, 0, 2), b));
    // (2 3) sends both entries of row 0 into column 0
    CHECK_FALSE(in_FWH(Perm::transposition(4, 1, 2), b));
    CHECK(count_FWH(2, 2) == 16);
}

TEST_CASE("brute-force F W(H) agrees with the row/column criterion") {
    const std::pair<int, int> shapes[] = {{2, 2}, {2, 3}, {3, 2}, {1, 4}, {4, 1}};
    for (auto [m, n] : shapes) {
        CAPTURE(m);
        CAPTURE(n);
        const BlockSubgroups blocks(m, n);
        const auto products = brute_force_FWH(blocks);
        const auto expected = power(factorial(m), n) * power(factorial(n), m);
        CHECK(products.size() == expected);
        std::set<Perm> by_criterion;
        for (const Perm& tau : enumerate_group(m * n))
            if (in_FWH(tau, blocks)) by_criterion.insert(tau);
        CHECK(by_criterion == products);
    }
    CHECK(brute_force_FWH(BlockSubgroups(2, 3)).size() == 288);
}

TEST_CASE("F and W(H) intersect trivially; products are injective") {
    const std::pair<int, int> shapes[] = {{2, 2}, {2, 3}, {3, 2}};
    for (auto [m, n] : shapes) {
        std::set<Perm> wh(enumerate_WH(m, n).begin(), enumerate_WH(m, n).end());
        std::size_t pairs = 0;
        std::set<Perm> products;
        for (const Perm& eta : enumerate_F(m, n)) {
            if (wh.count(eta)) CHECK(eta.is_identity());
            for (const Perm& s : wh) {
                products.insert(eta * s);
                ++pairs;
            }
        }
        CHECK(products.size() == pairs);
    }
}

TEST_CASE("F W(H) counts at mn = 8 and random cross-checks") {
    CHECK(count_FWH(4, 2) == 9216);
    CHECK(count_FWH(2, 4) == 9216);
    std::mt19937_64 rng(4);
    for (auto [m, n] : {std::pair{4, 2}, std::pair{2, 4}}) {
        const BlockSubgroups blocks(m, n);
        const auto products = brute_force_FWH(blocks);
        for (int trial = 0; trial < 300; ++trial) {
            const Perm tau = random_perm(rng, m * n);
            CHECK(in_FWH(tau, blocks) == (products.count(tau) == 1));
        }
    }
}

TEST_CASE("coset representatives of W(H)") {
    CHECK(coset_reps_WH(2, 2).size() == 6);
    CHECK(coset_reps_WH(2, 3).size() == 90);
    CHECK(coset_reps_WH(3, 2).size() == 20);
    // each coset hit exactly once
    const auto reps = coset_reps_WH(2, 3);
    std::set<std::vector<int>> labels;
    for (const Perm& r : reps) labels.insert(coset_label(r, 2));
    CHECK(labels.size() == reps.size());
    // F is a transversal of the cosets inside F W(H)
    for (auto [m, n] : {std::pair{2, 2}, std::pair{2, 3}, std::pair{3, 2}}) {
        std::set<std::vector<int>> f_labels;
        std::size_t f_size = 0;
        for (const Perm& eta : enumerate_F(m, n)) {
            f_labels.insert(coset_label(eta, m));
            ++f_size;
        }
        CHECK(f_labels.size() == f_size);
        std::size_t inside = 0;
        const BlockSubgroups blocks(m, n);
        for (const Perm& r : coset_reps_WH(m, n)) inside += in_FWH(r, blocks);
        CHECK(inside == f_size);
    }
}
