#pragma once

#include <cstdint>
#include <map>
#include <optional>
#include <span>
#include <string>
#include <vector>

#include "charfactor/character.hpp"
#include "charfactor/perm.hpp"
#include "charfactor/weight.hpp"

namespace charfactor {

/// Theta_lambda(t.c_n) = epsilon * prod_k Theta_{eta_k}(t^n), or a vanishing
/// certificate when lambda + rho is not residue-balanced.
struct FactorizationCertificate {
    int m = 0;
    int n = 0;
    WeightVector lambda;
    bool balanced = false;
    std::optional<StrictVector> mu;
    std::optional<int> w0_sign;
    std::vector<WeightVector> etas;
    std::optional<int> epsilon;

    friend bool operator==(const FactorizationCertificate&, const FactorizationCertificate&) = default;
};

/// `bound` limits the F enumeration used when the Coxeter values vanish.
FactorizationCertificate factorize(const WeightVector& lambda, int m, int n, int bound = kDefaultEnumerationBound);

enum class SignRoute { Coxeter, CosetConstants };

struct SignResult {
    int epsilon;
    SignRoute route;
};

const char* to_string(SignRoute route);

/// epsilon = Theta_lambda(coxeter_mn) / prod_k Theta_{eta_k}(coxeter_m).
///
/// Kostant allows both sides to vanish; in that case the coset-constant route
/// decides. A zero on exactly one side throws InternalInconsistency.
SignResult sign_via_coxeter(const WeightVector& lambda, std::span<const WeightVector> etas, int m, int n,
                            bool conjugate = false, int bound = kDefaultEnumerationBound);

/// epsilon = w0(lambda) E(mu_lambda) / (w0(rho) E(mu_rho)), E from numerator_constant.
int sign_via_coset_constants(const WeightVector& lambda, int m, int n, int bound = kDefaultEnumerationBound);

/// C_1: the root of unity relating the W(H)-block sum to prod_k Q_k (prod t)^(n(n-1)/2).
CyclotomicNumber block_constant(const StrictVector& mu, int m, int n);

/// C_eta(mu), read off the monomial ratio e^(eta mu)(t.c_n) / e^mu(t.c_n).
/// Throws InternalInconsistency if the two monomials differ in t.
CyclotomicNumber coset_constant(const Perm& eta, const StrictVector& mu, int m, int n);

/// E = C_1 * sum_{eta in F} sign(eta) C_eta(mu), the scalar with
/// A_mu(t.c_n) = E (prod t)^(n(n-1)/2) prod_k A_{L_k^1}(t^n).
CyclotomicNumber numerator_constant(const StrictVector& mu, int m, int n, int bound = kDefaultEnumerationBound);

/// Random integer points t in [2, 97]^m with pairwise distinct coordinates.
std::vector<std::vector<CyclotomicNumber>> sample_points(int m, int count, std::uint64_t seed);

struct NumericVerification {
    bool passed = false;
    int samples = 0;
    /// LHS / prod_k Theta_{eta_k}(t^n) at each sample; should equal epsilon.
    std::vector<CyclotomicNumber> observed_ratios;
};

inline constexpr std::uint64_t kDefaultSeed = 20240917;

/// Checks the factorization at random points, exactly.
NumericVerification verify_numeric(const FactorizationCertificate& cert, int samples,
                                   std::uint64_t seed = kDefaultSeed);

/// For an unbalanced lambda: Theta_lambda(t.c_n) == 0 at every sample.
bool verify_vanishing(const WeightVector& lambda, int m, int n, int samples, std::uint64_t seed = kDefaultSeed);

struct SymbolicVerification {
    bool passed = false;
    std::optional<CyclotomicNumber> constant;  // E
    bool sign_consistent = false;              // E agrees with epsilon, w0_sign and the closed-form denominator
};

/// Returns E with lhs == E * rhs, if one exists.
std::optional<CyclotomicNumber> extract_scalar_ratio(const LaurentPoly& lhs, const LaurentPoly& rhs);

/// (prod t)^(n(n-1)/2) * prod_k A_{eta_k + rho_m}(t^n).
LaurentPoly factored_numerator(std::span<const WeightVector> etas, int m, int n);

/// Numerator-level identity A_mu(t.c_n) = E * factored_numerator, over all of S_mn.
SymbolicVerification verify_symbolic(const FactorizationCertificate& cert, int bound = kDefaultEnumerationBound);

/// sum_{sigma in W(H)} sign(tau sigma) e^(tau sigma mu)(t.c_n).
LaurentPoly block_sum(const StrictVector& mu, int m, int n, const Perm& tau, int bound = kDefaultEnumerationBound);

struct CosetAuditOptions {
    /// Check only this many randomly chosen coset representatives.
    std::optional<std::size_t> max_cosets;
    /// Number of random sigma in W(H) per eta for the invariance check; 0 = all.
    std::size_t invariance_samples = 0;
    std::uint64_t seed = kDefaultSeed;
    int bound = kDefaultEnumerationBound;
};

struct CosetAuditReport {
    int m = 0;
    int n = 0;
    std::size_t tested_outside = 0;  // cosets outside F W(H) whose block sum vanished
    std::size_t tested_inside = 0;   // eta in F with constants extracted
    std::map<Perm, CyclotomicNumber> constants;
    bool invariance_checked = false;
    std::vector<std::string> failures;

    bool passed() const { return failures.empty(); }
};

/// Coset-level audit: block sums vanish off F W(H); for eta in F the constants
/// C_eta(mu) are n-th roots of unity, W(H)-invariant, and scale the identity
/// block sum by sign(eta) C_eta(mu).
CosetAuditReport coset_audit(const WeightVector& lambda, int m, int n, const CosetAuditOptions& options = {});

}  // namespace charfactor
