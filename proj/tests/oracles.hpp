#pragma once

// Independent reference computations used only by the tests.

#include <cmath>
#include <complex>
#include <numeric>
#include <random>
#include <vector>

#include <doctest.h>

#include "charfactor/cyclotomic.hpp"
#include "charfactor/laurent_poly.hpp"
#include "charfactor/matrix.hpp"
#include "charfactor/perm.hpp"

namespace oracle {

using charfactor::CyclotomicNumber;
using charfactor::LaurentPoly;
using charfactor::Rational;

/// Complex embedding zeta_N -> exp(2 pi i / N).
inline std::complex<double> to_complex(const CyclotomicNumber& a) {
    const double pi = std::acos(-1.0);
    std::complex<double> z = 0;
    const auto c = a.coeffs();
    for (std::size_t k = 0; k < c.size(); ++k)
        z += c[k].get_d() * std::polar(1.0, 2 * pi * static_cast<double>(k) / a.order());
    return z;
}

inline CyclotomicNumber random_cyclotomic(std::mt19937_64& rng, int order, int range = 5) {
    std::uniform_int_distribution<int> num(-range, range);
    std::uniform_int_distribution<int> den(1, 3);
    const int deg = charfactor::euler_phi(order);
    std::vector<Rational> poly;
    for (int i = 0; i < deg; ++i) poly.push_back(charfactor::make_rational(num(rng), den(rng)));
    return CyclotomicNumber::from_poly(order, poly);
}

/// Sum over S_N of sign(tau) * specialize_block(act(tau, mu)), term by term.
inline LaurentPoly naive_numerator(const std::vector<int>& mu, int m, int n) {
    LaurentPoly sum(m);
    for (const auto& tau : charfactor::SymmetricGroup(m * n, 12)) {
        LaurentPoly term = charfactor::specialize_block(charfactor::act(tau, mu), m, n);
        sum += tau.sign() > 0 ? term : -term;
    }
    return sum;
}

/// Leibniz expansion of the determinant.
inline CyclotomicNumber leibniz_det(const charfactor::SquareMatrix& a) {
    CyclotomicNumber det;
    for (const auto& p : charfactor::SymmetricGroup(a.size(), 12)) {
        CyclotomicNumber term(1, p.sign());
        for (int i = 0; i < a.size(); ++i) term *= a(i, p(i));
        det += term;
    }
    return det;
}

/// Elementary symmetric e_2 as a sum of pairwise products.
inline CyclotomicNumber brute_e2(const std::vector<CyclotomicNumber>& x) {
    CyclotomicNumber s;
    for (std::size_t a = 0; a < x.size(); ++a)
        for (std::size_t b = a + 1; b < x.size(); ++b) s += x[a] * x[b];
    return s;
}

/// Parity from the inversion count of a sequence of distinct integers.
inline int inversion_sign(const std::vector<int>& v) {
    int inv = 0;
    for (std::size_t i = 0; i < v.size(); ++i)
        for (std::size_t j = i + 1; j < v.size(); ++j)
            if (v[i] > v[j]) ++inv;
    return inv % 2 ? -1 : 1;
}

}  // namespace oracle

namespace doctest {
template <>
struct StringMaker<charfactor::CyclotomicNumber> {
    static String convert(const charfactor::CyclotomicNumber& a) {
        return ("[Q(z" + std::to_string(a.order()) + ") " + a.to_string() + "]").c_str();
    }
};
template <>
struct StringMaker<charfactor::LaurentPoly> {
    static String convert(const charfactor::LaurentPoly& p) { return charfactor::to_string(p).c_str(); }
};
}  // namespace doctest

