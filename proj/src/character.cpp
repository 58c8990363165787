#include "charfactor/character.hpp"

#include <algorithm>
#include <map>
#include <numeric>
#include <set>
#include <stdexcept>

#include "charfactor/matrix.hpp"

namespace charfactor {

namespace {

int inversion_parity(const std::vector<int>& p) {
    int inv = 0;
    for (std::size_t i = 0; i < p.size(); ++i)
        for (std::size_t j = i + 1; j < p.size(); ++j)
            if (p[i] > p[j]) ++inv;
    return inv % 2 == 0 ? 1 : -1;
}

// Sum over all arrangements a = (e_{pi(0)}, ..., e_{pi(N-1)}) of sign(pi) times
// the specialized monomial. Coefficients are collected as integer counts per
// power of zeta_n and turned into field elements once at the end.
LaurentPoly specialized_alternating_sum(std::span<const int> exponents, int m, int n) {
    const int size = m * n;
    std::map<std::vector<int>, std::vector<long long>> counts;
    std::vector<int> idx(static_cast<std::size_t>(size));
    std::iota(idx.begin(), idx.end(), 0);
    std::vector<int> t(static_cast<std::size_t>(m));
    do {
        std::fill(t.begin(), t.end(), 0);
        long long twist = 0;
        for (int k = 0; k < n; ++k) {
            for (int s = 0; s < m; ++s) {
                const int e = exponents[static_cast<std::size_t>(idx[static_cast<std::size_t>(k * m + s)])];
                t[static_cast<std::size_t>(s)] += e;
                twist += static_cast<long long>(k) * e;
            }
        }
        auto& slot = counts[t];
        if (slot.empty()) slot.assign(static_cast<std::size_t>(n), 0);
        slot[static_cast<std::size_t>(residue(static_cast<int>(twist % n), n))] += inversion_parity(idx);
    } while (std::next_permutation(idx.begin(), idx.end()));

    LaurentPoly out(m);
    for (auto& [mono, c] : counts) {
        std::vector<Rational> poly(c.size());
        bool any = false;
        for (std::size_t e = 0; e < c.size(); ++e) {
            poly[e] = Rational(static_cast<long>(c[e]));
            any = any || c[e] != 0;
        }
        if (!any) continue;
        out.add_term(Monomial{mono}, CyclotomicNumber::from_poly(n, std::move(poly)));
    }
    return out;
}

LaurentPoly vandermonde_of_powers(int m, int n) {
    // prod_{i<j} (t_i^n - t_j^n)
    LaurentPoly v = LaurentPoly::constant(m, CyclotomicNumber(1, 1));
    for (int i = 0; i < m; ++i) {
        for (int j = i + 1; j < m; ++j) {
            std::vector<int> ei(static_cast<std::size_t>(m), 0);
            std::vector<int> ej(static_cast<std::size_t>(m), 0);
            ei[static_cast<std::size_t>(i)] = n;
            ej[static_cast<std::size_t>(j)] = n;
            v *= LaurentPoly::monomial(ei, CyclotomicNumber(1, 1)) - LaurentPoly::monomial(ej, CyclotomicNumber(1, 1));
        }
    }
    return v;
}

void check_regular(std::span<const CyclotomicNumber> point) {
    for (std::size_t i = 0; i < point.size(); ++i) {
        if (point[i].is_zero()) throw NonRegularPoint("point not regular; use tableau method");
        for (std::size_t j = i + 1; j < point.size(); ++j)
            if (point[i] == point[j]) throw NonRegularPoint("point not regular; use tableau method");
    }
}

// Counts tableaux by content. shape is a partition with at most `letters` rows.
std::map<std::vector<int>, long long> ssyt_contents(const std::vector<int>& shape, int letters) {
    std::map<std::vector<int>, long long> out;
    const int rows = static_cast<int>(shape.size());
    std::vector<std::vector<int>> tab(shape.size());
    for (std::size_t r = 0; r < shape.size(); ++r) tab[r].assign(static_cast<std::size_t>(shape[r]), 0);
    std::vector<int> content(static_cast<std::size_t>(letters), 0);
    // column heights for pruning
    const int width = shape.empty() ? 0 : shape[0];
    std::vector<int> height(static_cast<std::size_t>(width), 0);
    for (int r = 0; r < rows; ++r)
        for (int c = 0; c < shape[static_cast<std::size_t>(r)]; ++c) ++height[static_cast<std::size_t>(c)];

    auto fill = [&](auto&& self, int r, int c) -> void {
        if (r == rows) {
            out[content] += 1;
            return;
        }
        if (c == shape[static_cast<std::size_t>(r)]) {
            self(self, r + 1, 0);
            return;
        }
        int lo = 1;
        if (c > 0) lo = std::max(lo, tab[r][static_cast<std::size_t>(c - 1)]);
        if (r > 0) lo = std::max(lo, tab[static_cast<std::size_t>(r - 1)][static_cast<std::size_t>(c)] + 1);
        const int hi = letters - (height[static_cast<std::size_t>(c)] - 1 - r);
        for (int v = lo; v <= hi; ++v) {
            tab[static_cast<std::size_t>(r)][static_cast<std::size_t>(c)] = v;
            ++content[static_cast<std::size_t>(v - 1)];
            self(self, r, c + 1);
            --content[static_cast<std::size_t>(v - 1)];
        }
    };
    fill(fill, 0, 0);
    return out;
}

}  // namespace

LaurentPoly weyl_numerator_tc(const StrictVector& mu, int m, int n, int bound) {
    if (m < 1 || n < 1 || mu.size() != m * n) throw std::invalid_argument("weyl_numerator_tc: length must equal m*n");
    check_enumeration_bound(m * n, bound);
    return specialized_alternating_sum(mu.entries(), m, n);
}

LaurentPoly weyl_numerator_gl(const StrictVector& nu, int power, int bound) {
    if (nu.size() < 1) throw std::invalid_argument("weyl_numerator_gl: empty exponent vector");
    check_enumeration_bound(nu.size(), bound);
    LaurentPoly a = specialized_alternating_sum(nu.entries(), nu.size(), 1);
    return power == 1 ? a : lp_power_subst(a, power);
}

LaurentPoly denominator_closed_form(int m, int n) {
    if (m < 1 || n < 1) throw std::invalid_argument("denominator_closed_form: m, n must be positive");
    // m(m-1)/2 * n(n-1)/2 = mn(m-1)(n-1)/4
    const long long sign_exp = (static_cast<long long>(m) * (m - 1) / 2) * (static_cast<long long>(n) * (n - 1) / 2);
    CyclotomicNumber scalar(n, sign_exp % 2 == 0 ? 1 : -1);
    for (int i = 0; i < n; ++i)
        for (int j = i + 1; j < n; ++j) scalar *= (root_power(n, i) - root_power(n, j)).pow(m);

    LaurentPoly result = LaurentPoly::constant(m, scalar);
    result *= vandermonde_of_powers(m, n).pow(static_cast<unsigned>(n));
    result *= LaurentPoly::monomial(std::vector<int>(static_cast<std::size_t>(m), n * (n - 1) / 2),
                                    CyclotomicNumber(1, 1));
    return result;
}

LaurentPoly denominator_direct(int m, int n) {
    if (m < 1 || n < 1) throw std::invalid_argument("denominator_direct: m, n must be positive");
    const int size = m * n;
    auto coord = [&](int a) {
        std::vector<int> e(static_cast<std::size_t>(m), 0);
        e[static_cast<std::size_t>(a % m)] = 1;
        return LaurentPoly::monomial(std::move(e), root_power(n, a / m));
    };
    LaurentPoly result = LaurentPoly::constant(m, CyclotomicNumber(n, 1));
    for (int a = 0; a < size; ++a)
        for (int b = a + 1; b < size; ++b) result *= coord(a) - coord(b);
    return result;
}

std::vector<CyclotomicNumber> twisted_point(std::span<const CyclotomicNumber> t, int n) {
    std::vector<CyclotomicNumber> x;
    x.reserve(t.size() * static_cast<std::size_t>(n));
    for (int k = 0; k < n; ++k) {
        const CyclotomicNumber w = root_power(n, k);
        for (const auto& ts : t) x.push_back(w * ts);
    }
    return x;
}

std::vector<CyclotomicNumber> power_point(std::span<const CyclotomicNumber> t, int n) {
    std::vector<CyclotomicNumber> y;
    y.reserve(t.size());
    for (const auto& ts : t) y.push_back(ts.pow(n));
    return y;
}

std::vector<CyclotomicNumber> coxeter_point(int size, bool conjugate) {
    std::vector<CyclotomicNumber> x;
    x.reserve(static_cast<std::size_t>(size));
    for (int j = 0; j < size; ++j) x.push_back(root_power(size, conjugate ? -j : j));
    return x;
}

CyclotomicNumber alternant(std::span<const int> exponents, std::span<const CyclotomicNumber> point) {
    const int size = static_cast<int>(point.size());
    if (static_cast<int>(exponents.size()) != size) throw std::invalid_argument("alternant: dimension mismatch");
    SquareMatrix a(size);
    for (int i = 0; i < size; ++i)
        for (int j = 0; j < size; ++j) {
            const int e = exponents[static_cast<std::size_t>(j)];
            if (e < 0 && point[static_cast<std::size_t>(i)].is_zero())
                throw std::domain_error("pole at evaluation point");
            a(i, j) = point[static_cast<std::size_t>(i)].pow(e);
        }
    return determinant(std::move(a));
}

LaurentPoly schur_symbolic(const WeightVector& lambda) {
    const int size = lambda.size();
    if (size < 1) throw std::invalid_argument("schur_symbolic: empty weight");
    const int twist = lambda[size - 1];
    std::vector<int> shape;
    for (int x : lambda.entries())
        if (x - twist > 0) shape.push_back(x - twist);

    LaurentPoly out(size);
    for (const auto& [content, count] : ssyt_contents(shape, size)) {
        std::vector<int> e = content;
        for (auto& x : e) x += twist;
        out.add_term(Monomial{std::move(e)}, CyclotomicNumber(1, Rational(static_cast<long>(count))));
    }
    return out;
}

CyclotomicNumber schur_eval_alternant(const WeightVector& lambda, std::span<const CyclotomicNumber> point) {
    if (lambda.size() != static_cast<int>(point.size())) throw std::invalid_argument("schur_eval: dimension mismatch");
    check_regular(point);
    const StrictVector top = shift(lambda);
    const StrictVector bottom = rho(lambda.size());
    return alternant(top.entries(), point) / alternant(bottom.entries(), point);
}

CyclotomicNumber schur_eval_tableau(const WeightVector& lambda, std::span<const CyclotomicNumber> point) {
    if (lambda.size() != static_cast<int>(point.size())) throw std::invalid_argument("schur_eval: dimension mismatch");
    return lp_eval(schur_symbolic(lambda), point);
}

CyclotomicNumber schur_eval(const WeightVector& lambda, std::span<const CyclotomicNumber> point, SchurMethod method) {
    return method == SchurMethod::Tableau ? schur_eval_tableau(lambda, point) : schur_eval_alternant(lambda, point);
}

LaurentPoly schur_at_twisted(const WeightVector& lambda, int m, int n) {
    if (lambda.size() != m * n) throw std::invalid_argument("schur_at_twisted: length must equal m*n");
    LaurentPoly out(m);
    const LaurentPoly full = schur_symbolic(lambda);
    for (const auto& [mono, c] : full.terms()) {
        LaurentPoly term = specialize_block(mono.exponents, m, n);
        term *= c;
        out += term;
    }
    return out;
}

CyclotomicNumber coxeter_value(const WeightVector& lambda, bool conjugate) {
    const auto point = coxeter_point(lambda.size(), conjugate);
    CyclotomicNumber v = schur_eval_alternant(lambda, point);
    const auto r = v.as_rational();
    if (!r || (*r != 0 && *r != 1 && *r != -1))
        throw InternalInconsistency("Coxeter character value " + v.to_string() + " outside {0, 1, -1}");
    return v;
}

}  // namespace charfactor
