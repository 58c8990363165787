#include "charfactor/laurent_poly.hpp"

#include <algorithm>
#include <numeric>
#include <sstream>
#include <stdexcept>
#include <unordered_map>

namespace charfactor {

int Monomial::total_degree() const { return std::accumulate(exponents.begin(), exponents.end(), 0); }

bool GradedLexOrder::operator()(const Monomial& a, const Monomial& b) const {
    const int da = a.total_degree();
    const int db = b.total_degree();
    if (da != db) return da > db;
    return std::lexicographical_compare(b.exponents.begin(), b.exponents.end(), a.exponents.begin(),
                                        a.exponents.end());
}

LaurentPoly::LaurentPoly(int nvars) : nvars_(nvars) {
    if (nvars < 0) throw std::invalid_argument("negative variable count");
}

LaurentPoly LaurentPoly::constant(int nvars, const CyclotomicNumber& c) {
    LaurentPoly p(nvars);
    p.add_term(Monomial{std::vector<int>(static_cast<std::size_t>(nvars), 0)}, c);
    return p;
}

LaurentPoly LaurentPoly::variable(int nvars, int index) {
    if (index < 0 || index >= nvars) throw std::out_of_range("variable index");
    std::vector<int> e(static_cast<std::size_t>(nvars), 0);
    e[static_cast<std::size_t>(index)] = 1;
    return monomial(std::move(e), CyclotomicNumber(1, 1));
}

LaurentPoly LaurentPoly::monomial(std::vector<int> exponents, const CyclotomicNumber& c) {
    LaurentPoly p(static_cast<int>(exponents.size()));
    p.add_term(Monomial{std::move(exponents)}, c);
    return p;
}

CyclotomicNumber LaurentPoly::coefficient(const Monomial& m) const {
    auto it = terms_.find(m);
    return it == terms_.end() ? CyclotomicNumber(order_, 0) : it->second;
}

void LaurentPoly::lift_to(int order) {
    if (order == order_) return;
    for (auto& [m, c] : terms_) c = embed(c, order);
    order_ = order;
}

void LaurentPoly::check_nvars(const LaurentPoly& other) const {
    if (nvars_ != other.nvars_)
        throw std::invalid_argument("Laurent polynomial variable count mismatch: " + std::to_string(nvars_) +
                                    " vs " + std::to_string(other.nvars_));
}

void LaurentPoly::add_term(Monomial m, const CyclotomicNumber& c) {
    if (static_cast<int>(m.exponents.size()) != nvars_)
        throw std::invalid_argument("monomial length does not match variable count");
    if (c.is_zero()) return;
    if (c.order() != order_) lift_to(std::lcm(order_, c.order()));
    const CyclotomicNumber coeff = embed(c, order_);
    auto [it, inserted] = terms_.try_emplace(std::move(m), coeff);
    if (!inserted) {
        it->second += coeff;
        if (it->second.is_zero()) terms_.erase(it);
    }
}

bool LaurentPoly::is_homogeneous() const {
    if (terms_.empty()) return true;
    const int d = terms_.begin()->first.total_degree();
    return std::all_of(terms_.begin(), terms_.end(),
                       [d](const auto& kv) { return kv.first.total_degree() == d; });
}

LaurentPoly& LaurentPoly::operator+=(const LaurentPoly& rhs) {
    check_nvars(rhs);
    for (const auto& [m, c] : rhs.terms_) add_term(m, c);
    return *this;
}

LaurentPoly& LaurentPoly::operator-=(const LaurentPoly& rhs) {
    check_nvars(rhs);
    for (const auto& [m, c] : rhs.terms_) add_term(m, -c);
    return *this;
}

LaurentPoly operator*(const LaurentPoly& a, const LaurentPoly& b) {
    a.check_nvars(b);
    LaurentPoly r(a.nvars_);
    const int order = std::lcm(a.order_, b.order_);
    r.lift_to(order);
    std::vector<int> e(static_cast<std::size_t>(a.nvars_));
    for (const auto& [ma, ca] : a.terms_) {
        const CyclotomicNumber la = embed(ca, order);
        for (const auto& [mb, cb] : b.terms_) {
            for (std::size_t i = 0; i < e.size(); ++i) e[i] = ma.exponents[i] + mb.exponents[i];
            r.add_term(Monomial{e}, la * cb);
        }
    }
    return r;
}

LaurentPoly& LaurentPoly::operator*=(const LaurentPoly& rhs) { return *this = *this * rhs; }

LaurentPoly& LaurentPoly::operator*=(const CyclotomicNumber& c) {
    if (c.is_zero()) {
        terms_.clear();
        return *this;
    }
    lift_to(std::lcm(order_, c.order()));
    const CyclotomicNumber lc = embed(c, order_);
    for (auto& [m, coeff] : terms_) coeff *= lc;
    return *this;
}

LaurentPoly LaurentPoly::operator-() const {
    LaurentPoly r = *this;
    for (auto& [m, c] : r.terms_) c = -c;
    return r;
}

LaurentPoly LaurentPoly::pow(unsigned exponent) const {
    LaurentPoly result = constant(nvars_, CyclotomicNumber(order_, 1));
    LaurentPoly base = *this;
    while (exponent != 0) {
        if (exponent & 1U) result *= base;
        exponent >>= 1U;
        if (exponent != 0) base *= base;
    }
    return result;
}

bool operator==(const LaurentPoly& a, const LaurentPoly& b) {
    if (a.nvars_ != b.nvars_ || a.terms_.size() != b.terms_.size()) return false;
    auto ia = a.terms_.begin();
    auto ib = b.terms_.begin();
    for (; ia != a.terms_.end(); ++ia, ++ib) {
        if (!(ia->first == ib->first) || !(ia->second == ib->second)) return false;
    }
    return true;
}

LaurentPoly lp_add(const LaurentPoly& p, const LaurentPoly& q) { return p + q; }
LaurentPoly lp_mul(const LaurentPoly& p, const LaurentPoly& q) { return p * q; }
LaurentPoly lp_neg(const LaurentPoly& p) { return -p; }
LaurentPoly lp_scale(const LaurentPoly& p, const CyclotomicNumber& c) { return p * c; }

CyclotomicNumber lp_eval(const LaurentPoly& p, std::span<const CyclotomicNumber> point) {
    if (static_cast<int>(point.size()) != p.nvars())
        throw std::invalid_argument("evaluation point has wrong dimension");
    int order = p.order();
    for (const auto& x : point) order = std::lcm(order, x.order());

    std::vector<CyclotomicNumber> coords;
    coords.reserve(point.size());
    for (const auto& x : point) coords.push_back(embed(x, order));

    // Powers are cached per variable since many terms share exponents.
    std::vector<std::unordered_map<int, CyclotomicNumber>> powers(coords.size());
    auto power = [&](std::size_t var, int e) -> const CyclotomicNumber& {
        auto& cache = powers[var];
        if (auto it = cache.find(e); it != cache.end()) return it->second;
        if (e < 0 && coords[var].is_zero()) throw std::domain_error("pole at evaluation point");
        return cache.emplace(e, coords[var].pow(e)).first->second;
    };

    CyclotomicNumber sum(order, 0);
    for (const auto& [m, c] : p.terms()) {
        CyclotomicNumber term = embed(c, order);
        for (std::size_t v = 0; v < coords.size(); ++v) {
            const int e = m.exponents[v];
            if (e != 0) term *= power(v, e);
        }
        sum += term;
    }
    return sum;
}

LaurentPoly lp_power_subst(const LaurentPoly& p, int n) {
    if (n < 1) throw std::invalid_argument("power substitution needs n >= 1");
    LaurentPoly r(p.nvars());
    for (const auto& [m, c] : p.terms()) {
        Monomial scaled = m;
        for (auto& e : scaled.exponents) e *= n;
        r.add_term(std::move(scaled), c);
    }
    return r;
}

LaurentPoly specialize_block(std::span<const int> exponent, int m, int n) {
    if (m < 1 || n < 1 || static_cast<long>(exponent.size()) != static_cast<long>(m) * n)
        throw std::invalid_argument("specialize_block: exponent length must equal m*n");
    std::vector<int> t(static_cast<std::size_t>(m), 0);
    long long twist = 0;
    for (int k = 0; k < n; ++k) {
        for (int s = 0; s < m; ++s) {
            const int e = exponent[static_cast<std::size_t>(k * m + s)];
            t[static_cast<std::size_t>(s)] += e;
            twist += static_cast<long long>(k) * e;
        }
    }
    return LaurentPoly::monomial(std::move(t), root_power(n, twist));
}

std::string to_string(const LaurentPoly& p) {
    if (p.is_zero()) return "0";
    std::ostringstream os;
    bool first = true;
    for (const auto& [m, c] : p.terms()) {
        if (!first) os << " + ";
        first = false;
        os << '(' << c.to_string() << ") *";
        for (std::size_t v = 0; v < m.exponents.size(); ++v) os << " t" << (v + 1) << '^' << m.exponents[v];
    }
    return os.str();
}

}  // namespace charfactor
