#pragma once

#include <span>
#include <vector>

#include "charfactor/errors.hpp"
#include "charfactor/laurent_poly.hpp"
#include "charfactor/weight.hpp"

namespace charfactor {

/// Alternating sum over S_mn of sign(tau) x^(act(tau, mu)), specialized at
/// x = t.c_n. Coefficients in Q(zeta_n), polynomial in t_1..t_m.
LaurentPoly weyl_numerator_tc(const StrictVector& mu, int m, int n, int bound = kDefaultEnumerationBound);

/// GL(m) alternant sum_{sigma in S_m} sign(sigma) t^(act(sigma, nu)), with
/// t -> t^power applied afterwards.
LaurentPoly weyl_numerator_gl(const StrictVector& nu, int power = 1, int bound = kDefaultEnumerationBound);

/// (-1)^(mn(m-1)(n-1)/4) * prod_{i<j}(w^i - w^j)^m * prod_{i<j}(t_i^n - t_j^n)^n * (prod t_s)^(n(n-1)/2).
LaurentPoly denominator_closed_form(int m, int n);

/// prod_{a<b} (x_a - x_b) with x_{km+s} = w^k t_s.
LaurentPoly denominator_direct(int m, int n);

/// Coordinates (t, w t, ..., w^(n-1) t) of t.c_n, w = zeta_n.
std::vector<CyclotomicNumber> twisted_point(std::span<const CyclotomicNumber> t, int n);

/// (t_1^n, ..., t_m^n).
std::vector<CyclotomicNumber> power_point(std::span<const CyclotomicNumber> t, int n);

/// (1, z, ..., z^(N-1)) with z = zeta_N, or its complex conjugate.
std::vector<CyclotomicNumber> coxeter_point(int size, bool conjugate = false);

/// det(point_i^exponent_j).
CyclotomicNumber alternant(std::span<const int> exponents, std::span<const CyclotomicNumber> point);

/// Schur polynomial as a sum over semistandard tableaux, with the determinant
/// twist (prod x)^(lambda_N) for weights that are not partitions.
LaurentPoly schur_symbolic(const WeightVector& lambda);

enum class SchurMethod { Tableau, AlternantRatio };

/// Alternant ratio A_{lambda+rho} / A_rho. Throws NonRegularPoint when the
/// coordinates are not pairwise distinct and nonzero.
CyclotomicNumber schur_eval_alternant(const WeightVector& lambda, std::span<const CyclotomicNumber> point);

CyclotomicNumber schur_eval_tableau(const WeightVector& lambda, std::span<const CyclotomicNumber> point);

CyclotomicNumber schur_eval(const WeightVector& lambda, std::span<const CyclotomicNumber> point,
                            SchurMethod method = SchurMethod::AlternantRatio);

/// Theta_lambda(t.c_n) as a Laurent polynomial in t_1..t_m (tableau expansion
/// followed by block specialization).
LaurentPoly schur_at_twisted(const WeightVector& lambda, int m, int n);

/// Character value at the Coxeter point. Kostant's theorem confines it to
/// {0, 1, -1}; anything else throws InternalInconsistency.
CyclotomicNumber coxeter_value(const WeightVector& lambda, bool conjugate = false);

}  // namespace charfactor
