#pragma once

#include <map>
#include <span>
#include <string>
#include <vector>

#include "charfactor/cyclotomic.hpp"

namespace charfactor {

/// Exponent vector of t_1..t_m; entries may be negative.
struct Monomial {
    std::vector<int> exponents;

    int total_degree() const;
    friend bool operator==(const Monomial&, const Monomial&) = default;
};

/// Graded lexicographic: higher total degree first, ties broken by the larger
/// exponent vector in lexicographic order.
struct GradedLexOrder {
    bool operator()(const Monomial& a, const Monomial& b) const;
};

/// Sparse Laurent polynomial in nvars variables over a cyclotomic field.
///
/// Every stored coefficient is nonzero and lives in the same field Q(zeta_order);
/// mixing in a coefficient of another order lifts the whole polynomial to the lcm.
class LaurentPoly {
public:
    using TermMap = std::map<Monomial, CyclotomicNumber, GradedLexOrder>;

    explicit LaurentPoly(int nvars);

    static LaurentPoly constant(int nvars, const CyclotomicNumber& c);
    static LaurentPoly variable(int nvars, int index);  // t_{index+1}
    static LaurentPoly monomial(std::vector<int> exponents, const CyclotomicNumber& c);

    int nvars() const { return nvars_; }
    int order() const { return order_; }
    const TermMap& terms() const { return terms_; }
    std::size_t size() const { return terms_.size(); }
    bool is_zero() const { return terms_.empty(); }

    /// Coefficient of a monomial, zero if absent.
    CyclotomicNumber coefficient(const Monomial& m) const;

    void add_term(Monomial m, const CyclotomicNumber& c);

    /// All terms share one total degree (vacuously true for zero).
    bool is_homogeneous() const;

    LaurentPoly& operator+=(const LaurentPoly& rhs);
    LaurentPoly& operator-=(const LaurentPoly& rhs);
    LaurentPoly& operator*=(const LaurentPoly& rhs);
    LaurentPoly& operator*=(const CyclotomicNumber& c);

    friend LaurentPoly operator+(LaurentPoly a, const LaurentPoly& b) { return a += b; }
    friend LaurentPoly operator-(LaurentPoly a, const LaurentPoly& b) { return a -= b; }
    friend LaurentPoly operator*(const LaurentPoly& a, const LaurentPoly& b);
    friend LaurentPoly operator*(LaurentPoly a, const CyclotomicNumber& c) { return a *= c; }
    LaurentPoly operator-() const;

    LaurentPoly pow(unsigned exponent) const;

    friend bool operator==(const LaurentPoly& a, const LaurentPoly& b);

private:
    void lift_to(int order);
    void check_nvars(const LaurentPoly& other) const;

    int nvars_;
    int order_ = 1;
    TermMap terms_;
};

LaurentPoly lp_add(const LaurentPoly& p, const LaurentPoly& q);
LaurentPoly lp_mul(const LaurentPoly& p, const LaurentPoly& q);
LaurentPoly lp_neg(const LaurentPoly& p);
LaurentPoly lp_scale(const LaurentPoly& p, const CyclotomicNumber& c);

/// Substitution homomorphism t_s -> point[s].
/// Throws std::domain_error("pole at evaluation point") on 0^negative.
CyclotomicNumber lp_eval(const LaurentPoly& p, std::span<const CyclotomicNumber> point);

/// t_s -> t_s^n.
LaurentPoly lp_power_subst(const LaurentPoly& p, int n);

/// Specializes the mn-variable monomial x^exponent at x_{km+s} = omega_n^k t_s
/// (k = 0..n-1, s = 1..m) to a single-term polynomial in t_1..t_m.
LaurentPoly specialize_block(std::span<const int> exponent, int m, int n);

/// `coeff * t1^a1 ... tm^am` terms joined by " + ", coefficients as polynomials in z.
std::string to_string(const LaurentPoly& p);

}  // namespace charfactor
