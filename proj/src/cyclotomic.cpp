#include "charfactor/cyclotomic.hpp"

#include <map>
#include <mutex>
#include <numeric>
#include <sstream>
#include <stdexcept>
#include <utility>

namespace charfactor {

namespace detail {

struct CyclotomicField {
    int order = 1;
    int degree = 1;
    std::vector<Rational> modulus;               // monic Phi_N, size degree + 1
    std::vector<std::vector<Rational>> powers;   // zeta^k reduced, k in [0, order)

    void reduce(std::vector<Rational>& poly) const {
        for (std::size_t d = poly.size(); d-- > static_cast<std::size_t>(degree);) {
            if (sgn(poly[d]) == 0) continue;
            const Rational lead = poly[d];
            const std::size_t base = d - static_cast<std::size_t>(degree);
            for (int i = 0; i < degree; ++i) {
                if (sgn(modulus[i]) != 0) poly[base + i] -= lead * modulus[i];
            }
            poly[d] = 0;
        }
        poly.resize(static_cast<std::size_t>(degree));
    }
};

std::shared_ptr<const CyclotomicField> field_of(int order) {
    if (order < 1) throw std::invalid_argument("cyclotomic order must be positive");
    static std::mutex mutex;
    static std::map<int, std::shared_ptr<const CyclotomicField>> cache;
    std::lock_guard lock(mutex);
    if (auto it = cache.find(order); it != cache.end()) return it->second;

    auto field = std::make_shared<CyclotomicField>();
    field->order = order;
    const IntPoly phi = cyclotomic_polynomial(order);
    field->degree = static_cast<int>(phi.size()) - 1;
    for (const auto& c : phi) field->modulus.emplace_back(c);
    field->powers.reserve(static_cast<std::size_t>(order));
    for (int k = 0; k < order; ++k) {
        std::vector<Rational> p(static_cast<std::size_t>(std::max(k + 1, field->degree)));
        p[static_cast<std::size_t>(k)] = 1;
        field->reduce(p);
        field->powers.push_back(std::move(p));
    }
    cache.emplace(order, field);
    return field;
}

}  // namespace detail

namespace {

using QPoly = std::vector<Rational>;

void trim(QPoly& p) {
    while (!p.empty() && sgn(p.back()) == 0) p.pop_back();
}

QPoly sub(const QPoly& a, const QPoly& b) {
    QPoly r(std::max(a.size(), b.size()));
    for (std::size_t i = 0; i < a.size(); ++i) r[i] += a[i];
    for (std::size_t i = 0; i < b.size(); ++i) r[i] -= b[i];
    trim(r);
    return r;
}

QPoly mul(const QPoly& a, const QPoly& b) {
    if (a.empty() || b.empty()) return {};
    QPoly r(a.size() + b.size() - 1);
    for (std::size_t i = 0; i < a.size(); ++i) {
        if (sgn(a[i]) == 0) continue;
        for (std::size_t j = 0; j < b.size(); ++j) r[i + j] += a[i] * b[j];
    }
    trim(r);
    return r;
}

// Quotient and remainder; b must be nonzero and trimmed.
std::pair<QPoly, QPoly> divmod(QPoly a, const QPoly& b) {
    trim(a);
    if (a.size() < b.size()) return {{}, a};
    QPoly q(a.size() - b.size() + 1);
    const Rational lead = b.back();
    for (std::size_t d = a.size(); d-- >= b.size();) {
        if (sgn(a[d]) == 0) continue;
        const Rational c = a[d] / lead;
        const std::size_t shift = d - (b.size() - 1);
        q[shift] = c;
        for (std::size_t i = 0; i < b.size(); ++i) a[shift + i] -= c * b[i];
    }
    trim(a);
    trim(q);
    return {q, a};
}

int lcm_order(int a, int b) { return std::lcm(a, b); }

}  // namespace

IntPoly cyclotomic_polynomial(int order) {
    if (order < 1) throw std::invalid_argument("cyclotomic order must be positive");
    // x^N - 1
    IntPoly num(static_cast<std::size_t>(order) + 1);
    num[0] = -1;
    num[static_cast<std::size_t>(order)] = 1;
    for (int d = 1; d < order; ++d) {
        if (order % d != 0) continue;
        const IntPoly den = cyclotomic_polynomial(d);
        // Exact division by a monic integer polynomial.
        const std::size_t dd = den.size() - 1;
        IntPoly q(num.size() - dd);
        for (std::size_t k = num.size(); k-- > dd;) {
            const Integer c = num[k];
            q[k - dd] = c;
            if (c == 0) continue;
            for (std::size_t i = 0; i <= dd; ++i) num[k - dd + i] -= c * den[i];
        }
        num = std::move(q);
    }
    return num;
}

int euler_phi(int order) { return static_cast<int>(cyclotomic_polynomial(order).size()) - 1; }

CyclotomicNumber::CyclotomicNumber() : CyclotomicNumber(1, Rational(0)) {}

CyclotomicNumber::CyclotomicNumber(int order, const Rational& value) : field_(detail::field_of(order)) {
    coeffs_.assign(static_cast<std::size_t>(field_->degree), Rational(0));
    coeffs_[0] = value;
    coeffs_[0].canonicalize();
}

CyclotomicNumber::CyclotomicNumber(std::shared_ptr<const detail::CyclotomicField> field, std::vector<Rational> coeffs)
    : field_(std::move(field)), coeffs_(std::move(coeffs)) {}

CyclotomicNumber CyclotomicNumber::from_poly(int order, std::vector<Rational> poly) {
    auto field = detail::field_of(order);
    for (auto& c : poly) c.canonicalize();
    if (poly.size() < static_cast<std::size_t>(field->degree)) poly.resize(static_cast<std::size_t>(field->degree));
    field->reduce(poly);
    return CyclotomicNumber(std::move(field), std::move(poly));
}

int CyclotomicNumber::order() const { return field_->order; }

bool CyclotomicNumber::is_zero() const {
    for (const auto& c : coeffs_)
        if (sgn(c) != 0) return false;
    return true;
}

bool CyclotomicNumber::is_one() const {
    auto r = as_rational();
    return r && *r == 1;
}

std::optional<Rational> CyclotomicNumber::as_rational() const {
    for (std::size_t i = 1; i < coeffs_.size(); ++i)
        if (sgn(coeffs_[i]) != 0) return std::nullopt;
    return coeffs_[0];
}

std::optional<int> CyclotomicNumber::root_of_unity_exponent() const {
    for (int k = 0; k < field_->order; ++k)
        if (coeffs_ == field_->powers[static_cast<std::size_t>(k)]) return k;
    return std::nullopt;
}

CyclotomicNumber CyclotomicNumber::inverse() const {
    if (is_zero()) throw std::domain_error("division by zero in cyclotomic field");
    QPoly r0 = field_->modulus;
    QPoly r1(coeffs_.begin(), coeffs_.end());
    trim(r1);
    QPoly s0;
    QPoly s1{Rational(1)};
    while (!r1.empty()) {
        auto [q, r] = divmod(r0, r1);
        r0 = std::move(r1);
        r1 = std::move(r);
        QPoly s = sub(s0, mul(q, s1));
        s0 = std::move(s1);
        s1 = std::move(s);
    }
    // Phi_N is irreducible, so the gcd r0 is a nonzero constant.
    if (r0.size() != 1) throw std::logic_error("cyclotomic modulus not irreducible");
    const Rational scale = 1 / r0[0];
    for (auto& c : s0) c *= scale;
    return from_poly(order(), std::move(s0));
}

CyclotomicNumber CyclotomicNumber::pow(long long exponent) const {
    CyclotomicNumber base = exponent < 0 ? inverse() : *this;
    unsigned long long e = exponent < 0 ? static_cast<unsigned long long>(-exponent)
                                        : static_cast<unsigned long long>(exponent);
    CyclotomicNumber result(order(), 1);
    while (e != 0) {
        if (e & 1U) result *= base;
        e >>= 1U;
        if (e != 0) base *= base;
    }
    return result;
}

CyclotomicNumber& CyclotomicNumber::operator+=(const CyclotomicNumber& rhs) {
    if (order() != rhs.order()) {
        const int n = lcm_order(order(), rhs.order());
        *this = embed(*this, n);
        return *this += embed(rhs, n);
    }
    for (std::size_t i = 0; i < coeffs_.size(); ++i) coeffs_[i] += rhs.coeffs_[i];
    return *this;
}

CyclotomicNumber& CyclotomicNumber::operator-=(const CyclotomicNumber& rhs) {
    if (order() != rhs.order()) {
        const int n = lcm_order(order(), rhs.order());
        *this = embed(*this, n);
        return *this -= embed(rhs, n);
    }
    for (std::size_t i = 0; i < coeffs_.size(); ++i) coeffs_[i] -= rhs.coeffs_[i];
    return *this;
}

CyclotomicNumber& CyclotomicNumber::operator*=(const CyclotomicNumber& rhs) {
    if (order() != rhs.order()) {
        const int n = lcm_order(order(), rhs.order());
        *this = embed(*this, n);
        return *this *= embed(rhs, n);
    }
    if (const auto r = rhs.as_rational()) return *this *= *r;
    const std::size_t deg = coeffs_.size();
    std::vector<Rational> prod(2 * deg - 1);
    for (std::size_t i = 0; i < deg; ++i) {
        if (sgn(coeffs_[i]) == 0) continue;
        for (std::size_t j = 0; j < deg; ++j) {
            if (sgn(rhs.coeffs_[j]) != 0) prod[i + j] += coeffs_[i] * rhs.coeffs_[j];
        }
    }
    field_->reduce(prod);
    coeffs_ = std::move(prod);
    return *this;
}

CyclotomicNumber& CyclotomicNumber::operator*=(const Rational& rhs) {
    for (auto& c : coeffs_) c *= rhs;
    return *this;
}

CyclotomicNumber& CyclotomicNumber::operator/=(const CyclotomicNumber& rhs) {
    if (const auto r = rhs.as_rational()) {
        if (sgn(*r) == 0) throw std::domain_error("division by zero in cyclotomic field");
        return *this *= Rational(1 / *r);
    }
    return *this *= rhs.inverse();
}

CyclotomicNumber CyclotomicNumber::operator-() const {
    CyclotomicNumber r = *this;
    for (auto& c : r.coeffs_) c = -c;
    return r;
}

bool operator==(const CyclotomicNumber& a, const CyclotomicNumber& b) {
    if (a.order() == b.order()) return a.coeffs_ == b.coeffs_;
    const int n = lcm_order(a.order(), b.order());
    return embed(a, n).coeffs_ == embed(b, n).coeffs_;
}

std::string CyclotomicNumber::to_string() const {
    std::ostringstream os;
    bool first = true;
    for (std::size_t k = 0; k < coeffs_.size(); ++k) {
        const Rational& c = coeffs_[k];
        if (sgn(c) == 0) continue;
        Rational mag = abs(c);
        if (first) {
            if (sgn(c) < 0) os << '-';
        } else {
            os << (sgn(c) < 0 ? " - " : " + ");
        }
        first = false;
        if (k == 0) {
            os << mag.get_str();
            continue;
        }
        if (mag != 1) os << mag.get_str() << '*';
        os << 'z';
        if (k > 1) os << '^' << k;
    }
    if (first) return "0";
    return os.str();
}

CyclotomicNumber root_power(int order, long long k) {
    auto field = detail::field_of(order);
    long long r = k % order;
    if (r < 0) r += order;
    auto coeffs = field->powers[static_cast<std::size_t>(r)];
    return CyclotomicNumber::from_poly(order, std::move(coeffs));
}

CyclotomicNumber embed(const CyclotomicNumber& a, int order) {
    const int from = a.order();
    if (order < 1 || order % from != 0)
        throw std::invalid_argument("embed: order " + std::to_string(from) + " does not divide " +
                                    std::to_string(order));
    if (from == order) return a;
    auto field = detail::field_of(order);
    const std::size_t step = static_cast<std::size_t>(order / from);
    std::vector<Rational> poly(std::max(a.coeffs_.size() * step, static_cast<std::size_t>(field->degree)));
    for (std::size_t i = 0; i < a.coeffs_.size(); ++i) poly[i * step] = a.coeffs_[i];
    field->reduce(poly);
    return CyclotomicNumber(std::move(field), std::move(poly));
}

CyclotomicNumber add(const CyclotomicNumber& a, const CyclotomicNumber& b) { return a + b; }
CyclotomicNumber mul(const CyclotomicNumber& a, const CyclotomicNumber& b) { return a * b; }
CyclotomicNumber neg(const CyclotomicNumber& a) { return -a; }
CyclotomicNumber inverse(const CyclotomicNumber& a) { return a.inverse(); }

}  // namespace charfactor
