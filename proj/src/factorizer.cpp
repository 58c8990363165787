#include "charfactor/factorizer.hpp"

#include <algorithm>
#include <random>
#include <set>
#include <stdexcept>

namespace charfactor {

namespace {

void check_shape(const WeightVector& lambda, int m, int n) {
    if (m < 1 || n < 1) throw std::invalid_argument("m and n must be positive");
    if (lambda.size() != m * n)
        throw std::invalid_argument("lambda must have m*n = " + std::to_string(m * n) + " entries, got " +
                                    std::to_string(lambda.size()));
}

int as_unit_sign(const CyclotomicNumber& v, const char* what) {
    const auto r = v.as_rational();
    if (!r || (*r != 1 && *r != -1))
        throw InternalInconsistency(std::string(what) + " is " + v.to_string() + ", expected +1 or -1");
    return *r == 1 ? 1 : -1;
}

}  // namespace

const char* to_string(SignRoute route) { return route == SignRoute::Coxeter ? "coxeter" : "coset-constants"; }

FactorizationCertificate factorize(const WeightVector& lambda, int m, int n, int bound) {
    check_shape(lambda, m, n);
    FactorizationCertificate cert;
    cert.m = m;
    cert.n = n;
    cert.lambda = lambda;
    const StrictVector v = shift(lambda);
    cert.balanced = is_balanced(v, m, n);
    if (!cert.balanced) return cert;

    Normalization norm = normalize_to_mu(v, m, n);
    cert.etas = eta_weights(norm.mu, m, n);
    cert.w0_sign = norm.w0_sign;
    cert.mu = std::move(norm.mu);
    cert.epsilon = sign_via_coxeter(lambda, cert.etas, m, n, false, bound).epsilon;
    return cert;
}

SignResult sign_via_coxeter(const WeightVector& lambda, std::span<const WeightVector> etas, int m, int n,
                            bool conjugate, int bound) {
    check_shape(lambda, m, n);
    if (static_cast<int>(etas.size()) != n) throw std::invalid_argument("expected one eta per residue class");
    const CyclotomicNumber lhs = coxeter_value(lambda, conjugate);
    CyclotomicNumber rhs(m * n, 1);
    for (const auto& eta : etas) {
        if (eta.size() != m) throw std::invalid_argument("eta weights must have m entries");
        rhs *= embed(coxeter_value(eta, conjugate), m * n);
    }
    if (lhs.is_zero() && rhs.is_zero())
        return {sign_via_coset_constants(lambda, m, n, bound), SignRoute::CosetConstants};
    if (lhs.is_zero() || rhs.is_zero())
        throw InternalInconsistency("Coxeter values disagree on vanishing: lhs " + lhs.to_string() + ", rhs " +
                                    rhs.to_string());
    return {as_unit_sign(lhs / rhs, "Coxeter sign ratio"), SignRoute::Coxeter};
}

CyclotomicNumber block_constant(const StrictVector& mu, int m, int n) {
    long long twist = 0;
    for (int i = 0; i < mu.size(); ++i) twist += static_cast<long long>(i / m) * mu[i];
    return root_power(n, twist);
}

CyclotomicNumber coset_constant(const Perm& eta, const StrictVector& mu, int m, int n) {
    const LaurentPoly moved = specialize_block(act(eta, mu.entries()), m, n);
    const LaurentPoly base = specialize_block(mu.entries(), m, n);
    const auto& [mono_moved, c_moved] = *moved.terms().begin();
    const auto& [mono_base, c_base] = *base.terms().begin();
    if (!(mono_moved == mono_base))
        throw InternalInconsistency("permutation " + eta.to_string() + " changes the t-monomial; not in F");
    return c_moved / c_base;
}

CyclotomicNumber numerator_constant(const StrictVector& mu, int m, int n, int bound) {
    CyclotomicNumber sum(n, 0);
    for (const Perm& eta : enumerate_F(m, n, bound)) {
        CyclotomicNumber c = coset_constant(eta, mu, m, n);
        if (eta.sign() < 0) c = -c;
        sum += c;
    }
    return block_constant(mu, m, n) * sum;
}

int sign_via_coset_constants(const WeightVector& lambda, int m, int n, int bound) {
    check_shape(lambda, m, n);
    const Normalization target = normalize_to_mu(shift(lambda), m, n);
    const Normalization base = normalize_to_mu(rho(m * n), m, n);
    const CyclotomicNumber e_target = numerator_constant(target.mu, m, n, bound);
    const CyclotomicNumber e_base = numerator_constant(base.mu, m, n, bound);
    if (e_base.is_zero()) throw InternalInconsistency("numerator constant of rho vanishes");
    CyclotomicNumber ratio = e_target / e_base;
    if (target.w0_sign * base.w0_sign < 0) ratio = -ratio;
    return as_unit_sign(ratio, "coset-constant sign ratio");
}

std::vector<std::vector<CyclotomicNumber>> sample_points(int m, int count, std::uint64_t seed) {
    if (m < 1 || m > 96) throw std::invalid_argument("sample_points: need 1 <= m <= 96");
    std::mt19937_64 rng(seed);
    std::uniform_int_distribution<int> coord(2, 97);
    std::vector<std::vector<CyclotomicNumber>> points;
    for (int p = 0; p < count; ++p) {
        std::vector<int> t;
        for (int attempt = 0; static_cast<int>(t.size()) < m; ++attempt) {
            if (attempt > 10000) throw std::runtime_error("could not draw a regular sample point");
            const int x = coord(rng);
            if (std::find(t.begin(), t.end(), x) == t.end()) t.push_back(x);
        }
        std::vector<CyclotomicNumber> point;
        for (int x : t) point.emplace_back(1, Rational(x));
        points.push_back(std::move(point));
    }
    return points;
}

NumericVerification verify_numeric(const FactorizationCertificate& cert, int samples, std::uint64_t seed) {
    if (!cert.balanced || !cert.epsilon) throw std::invalid_argument("verify_numeric needs a balanced certificate");
    const int m = cert.m;
    const int n = cert.n;
    check_shape(cert.lambda, m, n);
    NumericVerification out;
    out.passed = true;
    for (const auto& t : sample_points(m, samples, seed)) {
        const CyclotomicNumber lhs = schur_eval(cert.lambda, twisted_point(t, n));
        const auto y = power_point(t, n);
        CyclotomicNumber prod(1, 1);
        for (const auto& eta : cert.etas) prod *= schur_eval(eta, y);
        if (!(lhs == prod * Rational(*cert.epsilon))) out.passed = false;
        out.observed_ratios.push_back(prod.is_zero() ? CyclotomicNumber(n, 0) : lhs / prod);
        ++out.samples;
    }
    return out;
}

bool verify_vanishing(const WeightVector& lambda, int m, int n, int samples, std::uint64_t seed) {
    check_shape(lambda, m, n);
    for (const auto& t : sample_points(m, samples, seed))
        if (!schur_eval(lambda, twisted_point(t, n)).is_zero()) return false;
    return true;
}

std::optional<CyclotomicNumber> extract_scalar_ratio(const LaurentPoly& lhs, const LaurentPoly& rhs) {
    if (rhs.is_zero()) return std::nullopt;
    const auto& [mono, c] = *rhs.terms().begin();
    CyclotomicNumber e = lhs.coefficient(mono) / c;
    if (!(lhs == rhs * e)) return std::nullopt;
    return e;
}

LaurentPoly factored_numerator(std::span<const WeightVector> etas, int m, int n) {
    LaurentPoly rhs = LaurentPoly::monomial(std::vector<int>(static_cast<std::size_t>(m), n * (n - 1) / 2),
                                            CyclotomicNumber(1, 1));
    for (const auto& eta : etas) rhs *= weyl_numerator_gl(shift(eta), n);
    return rhs;
}

SymbolicVerification verify_symbolic(const FactorizationCertificate& cert, int bound) {
    if (!cert.balanced || !cert.mu || !cert.epsilon || !cert.w0_sign)
        throw std::invalid_argument("verify_symbolic needs a balanced certificate");
    const int m = cert.m;
    const int n = cert.n;
    SymbolicVerification out;
    const LaurentPoly lhs = weyl_numerator_tc(*cert.mu, m, n, bound);
    const LaurentPoly rhs = factored_numerator(cert.etas, m, n);
    out.constant = extract_scalar_ratio(lhs, rhs);
    out.passed = out.constant.has_value();
    if (!out.passed) return out;

    // Theta = w0 * A_mu / A_rho and A_rho(t.c_n) = s V^m A_{rho_m}(t^n)^n (prod t)^(n(n-1)/2),
    // so E = epsilon * w0 * s * V^m.
    const long long sign_exp = (static_cast<long long>(m) * (m - 1) / 2) * (static_cast<long long>(n) * (n - 1) / 2);
    CyclotomicNumber expected(n, sign_exp % 2 == 0 ? 1 : -1);
    for (int i = 0; i < n; ++i)
        for (int j = i + 1; j < n; ++j) expected *= (root_power(n, i) - root_power(n, j)).pow(m);
    expected *= Rational(*cert.epsilon * *cert.w0_sign);
    out.sign_consistent = *out.constant == expected;
    return out;
}

LaurentPoly block_sum(const StrictVector& mu, int m, int n, const Perm& tau, int bound) {
    if (mu.size() != m * n || tau.size() != m * n) throw std::invalid_argument("block_sum: size mismatch");
    LaurentPoly sum(m);
    for (const Perm& sigma : enumerate_WH(m, n, bound)) {
        const Perm p = tau * sigma;
        LaurentPoly term = specialize_block(act(p, mu.entries()), m, n);
        if (p.sign() < 0) term = -term;
        sum += term;
    }
    return sum;
}

CosetAuditReport coset_audit(const WeightVector& lambda, int m, int n, const CosetAuditOptions& options) {
    check_shape(lambda, m, n);
    const int bound = options.bound;
    check_enumeration_bound(m * n, bound);
    const Normalization norm = normalize_to_mu(shift(lambda), m, n);
    const StrictVector& mu = norm.mu;
    const auto etas = eta_weights(mu, m, n);
    const BlockSubgroups blocks(m, n);

    CosetAuditReport report;
    report.m = m;
    report.n = n;
    std::mt19937_64 rng(options.seed);

    const LaurentPoly identity_sum = block_sum(mu, m, n, Perm::identity(m * n), bound);
    if (!(identity_sum == factored_numerator(etas, m, n) * block_constant(mu, m, n)))
        report.failures.push_back("identity block sum differs from C_1 * prod Q_k * (prod t)^(n(n-1)/2)");

    std::vector<Perm> reps = coset_reps_WH(m, n, bound);
    if (options.max_cosets && *options.max_cosets < reps.size()) {
        std::shuffle(reps.begin(), reps.end(), rng);
        reps.resize(*options.max_cosets);
        std::sort(reps.begin(), reps.end());
    }
    for (const Perm& tau : reps) {
        const LaurentPoly bs = block_sum(mu, m, n, tau, bound);
        if (!in_FWH(tau, blocks)) {
            if (bs.is_zero())
                ++report.tested_outside;
            else
                report.failures.push_back("block sum nonzero outside FW(H) at tau=" + tau.to_string());
            continue;
        }
        const auto ratio = extract_scalar_ratio(bs, identity_sum);
        if (!ratio || !ratio->pow(2LL * n).is_one())
            report.failures.push_back("block sum inside FW(H) is not a signed root-of-unity multiple at tau=" +
                                      tau.to_string());
    }

    std::vector<Perm> wh;
    for (const Perm& s : enumerate_WH(m, n, bound)) wh.push_back(s);

    for (const Perm& eta : enumerate_F(m, n, bound)) {
        const CyclotomicNumber c = coset_constant(eta, mu, m, n);
        if (!c.root_of_unity_exponent())
            report.failures.push_back("C_eta not a power of omega_n at eta=" + eta.to_string());
        report.constants.emplace(eta, c);
        ++report.tested_inside;

        CyclotomicNumber scale = c;
        if (eta.sign() < 0) scale = -scale;
        if (!(block_sum(mu, m, n, eta, bound) == identity_sum * scale))
            report.failures.push_back("block sum at eta=" + eta.to_string() +
                                      " is not sign(eta) C_eta times the identity block sum");

        auto check_invariance = [&](const Perm& sigma) {
            const StrictVector moved(act(sigma, mu.entries()));
            if (!(coset_constant(eta, moved, m, n) == c))
                report.failures.push_back("C_eta not invariant at eta=" + eta.to_string() +
                                          " sigma=" + sigma.to_string());
        };
        if (options.invariance_samples == 0) {
            for (const Perm& sigma : wh) check_invariance(sigma);
        } else {
            std::uniform_int_distribution<std::size_t> pick(0, wh.size() - 1);
            for (std::size_t i = 0; i < options.invariance_samples; ++i) check_invariance(wh[pick(rng)]);
        }
    }
    report.invariance_checked = true;

    const auto id_it = report.constants.find(Perm::identity(m * n));
    if (id_it == report.constants.end() || !id_it->second.is_one()) report.failures.push_back("C_id is not 1");
    return report;
}

}  // namespace charfactor
