#pragma once

#include <compare>
#include <memory>
#include <optional>
#include <span>
#include <string>
#include <vector>

#include "charfactor/rational.hpp"

namespace charfactor {

/// Dense integer polynomial, index = degree.
using IntPoly = std::vector<Integer>;

/// Phi_N, obtained by exact division of x^N - 1 by the Phi_d with d | N, d < N.
IntPoly cyclotomic_polynomial(int order);

/// Euler phi, i.e. deg Phi_N.
int euler_phi(int order);

namespace detail {
struct CyclotomicField;
std::shared_ptr<const CyclotomicField> field_of(int order);
}  // namespace detail

/// Element of Q(zeta_N), stored as the unique representative of degree < phi(N)
/// modulo Phi_N. Equal values have equal coefficient vectors.
///
/// Values of different orders may be mixed freely: both operands are embedded
/// into Q(zeta_lcm) first.
class CyclotomicNumber {
public:
    /// Zero in Q.
    CyclotomicNumber();
    /// Rational constant viewed inside Q(zeta_order).
    CyclotomicNumber(int order, const Rational& value);
    CyclotomicNumber(int order, long value) : CyclotomicNumber(order, Rational(value)) {}

    /// Reduces an arbitrary polynomial in zeta (ascending coefficients) modulo Phi_N.
    static CyclotomicNumber from_poly(int order, std::vector<Rational> poly);

    int order() const;
    std::span<const Rational> coeffs() const { return coeffs_; }

    bool is_zero() const;
    bool is_one() const;
    std::optional<Rational> as_rational() const;

    /// Returns k in [0, N) with *this == zeta_N^k, if such k exists.
    std::optional<int> root_of_unity_exponent() const;

    CyclotomicNumber inverse() const;
    CyclotomicNumber pow(long long exponent) const;

    CyclotomicNumber& operator+=(const CyclotomicNumber& rhs);
    CyclotomicNumber& operator-=(const CyclotomicNumber& rhs);
    CyclotomicNumber& operator*=(const CyclotomicNumber& rhs);
    CyclotomicNumber& operator/=(const CyclotomicNumber& rhs);
    CyclotomicNumber& operator*=(const Rational& rhs);

    friend CyclotomicNumber operator+(CyclotomicNumber a, const CyclotomicNumber& b) { return a += b; }
    friend CyclotomicNumber operator-(CyclotomicNumber a, const CyclotomicNumber& b) { return a -= b; }
    friend CyclotomicNumber operator*(CyclotomicNumber a, const CyclotomicNumber& b) { return a *= b; }
    friend CyclotomicNumber operator/(CyclotomicNumber a, const CyclotomicNumber& b) { return a /= b; }
    friend CyclotomicNumber operator*(CyclotomicNumber a, const Rational& b) { return a *= b; }
    CyclotomicNumber operator-() const;

    friend bool operator==(const CyclotomicNumber& a, const CyclotomicNumber& b);

    /// Polynomial in `z` (= zeta_N), ascending degree, e.g. "-1 + 2*z^2".
    std::string to_string() const;

private:
    CyclotomicNumber(std::shared_ptr<const detail::CyclotomicField> field, std::vector<Rational> coeffs);

    friend CyclotomicNumber embed(const CyclotomicNumber& a, int order);

    std::shared_ptr<const detail::CyclotomicField> field_;
    std::vector<Rational> coeffs_;
};

/// zeta_N^(k mod N).
CyclotomicNumber root_power(int order, long long k);

/// Image under zeta_d -> zeta_N^(N/d). Throws std::invalid_argument unless d | N.
CyclotomicNumber embed(const CyclotomicNumber& a, int order);

CyclotomicNumber add(const CyclotomicNumber& a, const CyclotomicNumber& b);
CyclotomicNumber mul(const CyclotomicNumber& a, const CyclotomicNumber& b);
CyclotomicNumber neg(const CyclotomicNumber& a);
CyclotomicNumber inverse(const CyclotomicNumber& a);

}  // namespace charfactor
