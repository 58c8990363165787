#include "commands.hpp"

#include <algorithm>
#include <atomic>
#include <chrono>
#include <cstdlib>
#include <fstream>
#include <functional>
#include <iostream>
#include <sstream>
#include <thread>

#include <CLI11.hpp>
#include <json.hpp>

#include "charfactor/certificate_io.hpp"
#include "charfactor/character.hpp"
#include "charfactor/errors.hpp"
#include "charfactor/factorizer.hpp"

namespace charfactor::cli {

namespace {

using nlohmann::json;

struct Check {
    std::string name;
    bool passed = false;
    std::string detail;
};

bool all_passed(const std::vector<Check>& checks) {
    return std::all_of(checks.begin(), checks.end(), [](const Check& c) { return c.passed; });
}

void print_checks(std::ostream& out, const std::vector<Check>& checks) {
    for (const auto& c : checks) {
        out << "check " << c.name << ": " << (c.passed ? "pass" : "FAIL");
        if (!c.detail.empty()) out << " (" << c.detail << ")";
        out << "\n";
    }
    out << "result: " << (all_passed(checks) ? "pass" : "FAIL") << "\n";
}

json checks_json(const std::vector<Check>& checks) {
    json arr = json::array();
    for (const auto& c : checks) {
        json j{{"name", c.name}, {"passed", c.passed}};
        if (!c.detail.empty()) j["detail"] = c.detail;
        arr.push_back(std::move(j));
    }
    return arr;
}

Emit emit_or(const RunConfig& config, Emit fallback, std::initializer_list<Emit> allowed) {
    const Emit e = config.emit.value_or(fallback);
    if (std::find(allowed.begin(), allowed.end(), e) == allowed.end())
        throw std::invalid_argument("--emit value not supported by '" + config.command + "'");
    return e;
}

void require_shape(const RunConfig& config) {
    if (config.m < 1 || config.n < 1) throw std::invalid_argument("--m and --n must be positive integers");
}

WeightVector weight_from(const RunConfig& config) {
    require_shape(config);
    if (static_cast<int>(config.lambda.size()) != config.m * config.n)
        throw std::invalid_argument("lambda must have m*n = " + std::to_string(config.m * config.n) +
                                    " entries, got " + std::to_string(config.lambda.size()));
    return WeightVector(config.lambda);
}

std::string bracketed(std::span<const int> v) { return "[" + join_ints(v) + "]"; }

/// Maps exceptions to exit codes so that every command has the same outcome classes.
int guarded(std::ostream& err, const std::function<int()>& body) {
    try {
        return body();
    } catch (const BoundExceeded& e) {
        err << "error: instance too large for exact enumeration (" << e.what() << ")\n";
        return kBoundExceeded;
    } catch (const InternalInconsistency& e) {
        err << "error: internal inconsistency: " << e.what() << "\n";
        return kCheckFailed;
    } catch (const std::invalid_argument& e) {
        err << "error: " << e.what() << "\n";
        return kInputError;
    } catch (const std::exception& e) {
        err << "error: " << e.what() << "\n";
        return kCheckFailed;
    }
}

std::string factor_poly(const WeightVector& eta, int n) {
    return to_string(lp_power_subst(schur_symbolic(eta), n));
}

}  // namespace

int cmd_factor(const RunConfig& config, std::ostream& out, std::ostream& err) {
    return guarded(err, [&] {
        const Emit emit = emit_or(config, Emit::Json, {Emit::Json, Emit::Poly});
        const WeightVector lambda = weight_from(config);
        const auto cert = factorize(lambda, config.m, config.n, config.enumeration_bound);
        if (emit == Emit::Json) {
            out << certificate_to_json(cert).dump(2) << "\n";
        } else {
            out << "lambda: " << bracketed(lambda.entries()) << "\n";
            out << "theta(t.c_n): " << to_string(schur_at_twisted(lambda, config.m, config.n)) << "\n";
            if (cert.balanced) {
                out << "epsilon: " << *cert.epsilon << "\n";
                for (std::size_t k = 0; k < cert.etas.size(); ++k)
                    out << "factor " << k << " " << bracketed(cert.etas[k].entries()) << ": "
                        << factor_poly(cert.etas[k], config.n) << "\n";
            } else {
                out << "balanced: false (identically zero)\n";
            }
        }
        return cert.balanced ? kPass : kVanishing;
    });
}

int cmd_verify(const RunConfig& config, std::ostream& out, std::ostream& err) {
    return guarded(err, [&] {
        const Emit emit = emit_or(config, Emit::Poly, {Emit::Json, Emit::Poly});
        if (config.samples < 1) throw std::invalid_argument("--samples must be positive");
        std::vector<Check> checks;
        FactorizationCertificate cert;
        if (config.certificate) {
            std::ifstream in(*config.certificate);
            if (!in) throw std::invalid_argument("cannot open certificate file '" + *config.certificate + "'");
            json j;
            try {
                in >> j;
            } catch (const json::exception& e) {
                throw std::invalid_argument(std::string("certificate is not valid JSON: ") + e.what());
            }
            cert = certificate_from_json(j);
            const bool same = factorize(cert.lambda, cert.m, cert.n, config.enumeration_bound) == cert;
            checks.push_back({"certificate matches recomputation", same, ""});
        } else {
            cert = factorize(weight_from(config), config.m, config.n, config.enumeration_bound);
        }
        const int m = cert.m;
        const int n = cert.n;
        const std::string count = std::to_string(config.samples) + " samples";
        if (cert.balanced) {
            const auto num = verify_numeric(cert, config.samples, config.seed);
            checks.push_back({"numeric identity", num.passed, count});
            const auto sym = verify_symbolic(cert, config.enumeration_bound);
            checks.push_back({"symbolic identity", sym.passed, sym.constant ? "E = " + sym.constant->to_string() : ""});
            checks.push_back({"sign consistency", sym.sign_consistent, ""});
        } else {
            checks.push_back({"numeric vanishing", verify_vanishing(cert.lambda, m, n, config.samples, config.seed),
                              count});
            const bool zero = weyl_numerator_tc(shift(cert.lambda), m, n, config.enumeration_bound).is_zero();
            checks.push_back({"symbolic vanishing", zero, ""});
        }
        const bool ok = all_passed(checks);
        if (emit == Emit::Json) {
            out << json{{"certificate", certificate_to_json(cert)}, {"checks", checks_json(checks)}, {"passed", ok}}
                       .dump(2)
                << "\n";
        } else {
            out << "verify m=" << m << " n=" << n << " lambda=" << bracketed(cert.lambda.entries()) << "\n";
            print_checks(out, checks);
        }
        if (!ok) return kCheckFailed;
        return cert.balanced ? kPass : kVanishing;
    });
}

int cmd_denom_check(const RunConfig& config, std::ostream& out, std::ostream& err) {
    return guarded(err, [&] {
        const Emit emit = emit_or(config, Emit::Poly, {Emit::Json, Emit::Poly});
        require_shape(config);
        const LaurentPoly closed = denominator_closed_form(config.m, config.n);
        const LaurentPoly direct = denominator_direct(config.m, config.n);
        const std::vector<Check> checks{{"direct product equals closed form", closed == direct, ""}};
        if (emit == Emit::Json) {
            out << json{{"m", config.m},
                        {"n", config.n},
                        {"closed_form", to_string(closed)},
                        {"checks", checks_json(checks)},
                        {"passed", all_passed(checks)}}
                       .dump(2)
                << "\n";
        } else {
            out << "denominator m=" << config.m << " n=" << config.n << "\n";
            out << "closed form: " << to_string(closed) << "\n";
            print_checks(out, checks);
        }
        return all_passed(checks) ? kPass : kCheckFailed;
    });
}

int cmd_coset_audit(const RunConfig& config, std::ostream& out, std::ostream& err) {
    return guarded(err, [&] {
        const Emit emit = emit_or(config, Emit::Poly, {Emit::Json, Emit::Poly});
        const WeightVector lambda = weight_from(config);
        const int m = config.m;
        const int n = config.n;
        check_enumeration_bound(m * n, config.enumeration_bound);
        if (!is_balanced(shift(lambda), m, n)) {
            err << "lambda + rho is not residue-balanced; the character vanishes at t.c_n\n";
            return kVanishing;
        }
        CosetAuditOptions opts;
        opts.max_cosets = config.max_cosets;
        opts.seed = config.seed;
        opts.bound = config.enumeration_bound;
        const auto report = coset_audit(lambda, m, n, opts);
        if (emit == Emit::Json) {
            json constants = json::array();
            for (const auto& [eta, c] : report.constants)
                constants.push_back({{"eta", eta.to_string()}, {"constant", c.to_string()}});
            out << json{{"m", m},
                        {"n", n},
                        {"lambda", lambda.entries()},
                        {"tested_outside", report.tested_outside},
                        {"tested_inside", report.tested_inside},
                        {"invariance_checked", report.invariance_checked},
                        {"constants", constants},
                        {"failures", report.failures},
                        {"passed", report.passed()}}
                       .dump(2)
                << "\n";
        } else {
            out << "coset audit m=" << m << " n=" << n << " lambda=" << bracketed(lambda.entries()) << "\n";
            out << "vanishing cosets outside FW(H): " << report.tested_outside << "\n";
            out << "constants extracted for eta in F: " << report.tested_inside << "\n";
            out << "invariance under W(H) checked: " << (report.invariance_checked ? "yes" : "no") << "\n";
            out << "constants:\n";
            for (const auto& [eta, c] : report.constants) out << "  " << eta.to_string() << "  " << c.to_string() << "\n";
            for (const auto& f : report.failures) out << "failure: " << f << "\n";
            out << "result: " << (report.passed() ? "pass" : "FAIL") << "\n";
        }
        return report.passed() ? kPass : kCheckFailed;
    });
}

int cmd_coxeter(const RunConfig& config, std::ostream& out, std::ostream& err) {
    return guarded(err, [&] {
        const Emit emit = emit_or(config, Emit::Poly, {Emit::Json, Emit::Poly});
        if (config.lambda.empty()) throw std::invalid_argument("--lambda is required");
        const WeightVector lambda(config.lambda);
        const CyclotomicNumber v = coxeter_value(lambda, config.conjugate);
        if (emit == Emit::Json)
            out << json{{"lambda", lambda.entries()}, {"N", lambda.size()}, {"conjugate", config.conjugate},
                        {"value", v.to_string()}}
                       .dump(2)
                << "\n";
        else
            out << "coxeter value N=" << lambda.size() << " lambda=" << bracketed(lambda.entries()) << ": "
                << v.to_string() << "\n";
        return kPass;
    });
}

int cmd_bench(const RunConfig& config, std::ostream& out, std::ostream& err) {
    return guarded(err, [&] {
        emit_or(config, Emit::Csv, {Emit::Csv});
        if (config.points < 1 || config.repeats < 1) throw std::invalid_argument("--points and --repeats must be positive");
        const WeightVector lambda = weight_from(config);
        const int m = config.m;
        const int n = config.n;
        const auto cert = factorize(lambda, m, n, config.enumeration_bound);
        if (!cert.balanced) {
            err << "bench needs a residue-balanced weight; this one vanishes identically\n";
            return kVanishing;
        }
        std::vector<std::vector<CyclotomicNumber>> twisted;
        std::vector<std::vector<CyclotomicNumber>> powered;
        for (const auto& t : sample_points(m, config.points, config.seed)) {
            twisted.push_back(twisted_point(t, n));
            powered.push_back(power_point(t, n));
        }
        const Rational eps(*cert.epsilon);
        const std::function<CyclotomicNumber(std::size_t)> direct = [&](std::size_t p) {
            return schur_eval(lambda, twisted[p]);
        };
        const std::function<CyclotomicNumber(std::size_t)> factored = [&](std::size_t p) {
            CyclotomicNumber prod(1, eps);
            for (const auto& eta : cert.etas) prod *= schur_eval(eta, powered[p]);
            return prod;
        };

        struct Row {
            const char* method = "";
            double mean = 0;
            long long min = 0;
            std::vector<CyclotomicNumber> values;
        };
        auto time_method = [&](const char* name, const std::function<CyclotomicNumber(std::size_t)>& f) {
            Row row;
            row.method = name;
            long long total = 0;
            long long count = 0;
            row.min = std::numeric_limits<long long>::max();
            for (int r = 0; r < config.repeats; ++r) {
                for (std::size_t p = 0; p < twisted.size(); ++p) {
                    const auto start = std::chrono::steady_clock::now();
                    CyclotomicNumber v = f(p);
                    const auto ns = std::chrono::duration_cast<std::chrono::nanoseconds>(
                                        std::chrono::steady_clock::now() - start)
                                        .count();
                    total += ns;
                    ++count;
                    row.min = std::min<long long>(row.min, ns);
                    if (r == 0) row.values.push_back(std::move(v));
                }
            }
            row.mean = static_cast<double>(total) / static_cast<double>(count);
            return row;
        };
        const Row a = time_method("direct", direct);
        const Row b = time_method("factored", factored);
        std::size_t agree = 0;
        for (std::size_t p = 0; p < a.values.size(); ++p)
            if (a.values[p] == b.values[p]) ++agree;

        out << "m,n,lambda,method,wall_ns_mean,wall_ns_min,checks_passed\n";
        for (const Row* row : {&a, &b}) {
            std::ostringstream mean;
            mean.precision(1);
            mean << std::fixed << row->mean;
            out << m << "," << n << ",\"" << join_ints(lambda.entries()) << "\"," << row->method << "," << mean.str()
                << "," << row->min << "," << agree << "\n";
        }
        std::ostringstream speedup;
        speedup.precision(2);
        speedup << std::fixed << (b.mean > 0 ? a.mean / b.mean : 0.0);
        err << "speedup (direct / factored, mean): " << speedup.str() << "x; " << agree << "/" << a.values.size()
            << " points agree\n";
        return agree == a.values.size() ? kPass : kCheckFailed;
    });
}

int cmd_sweep(const RunConfig& config, std::ostream& out, std::ostream& err) {
    return guarded(err, [&] {
        const Emit emit = emit_or(config, Emit::Poly, {Emit::Json, Emit::Poly, Emit::Csv});
        require_shape(config);
        if (config.samples < 1) throw std::invalid_argument("--samples must be positive");
        const int m = config.m;
        const int n = config.n;
        const auto weights = dominant_weights_in_box(m * n, config.min_entry, config.max_entry);

        struct Result {
            bool balanced = false;
            std::optional<int> epsilon;
            std::string status;
        };
        std::vector<Result> results(weights.size());
        std::atomic<std::size_t> next{0};
        auto worker = [&] {
            for (std::size_t i = next++; i < weights.size(); i = next++) {
                Result& r = results[i];
                try {
                    const auto cert = factorize(weights[i], m, n, config.enumeration_bound);
                    r.balanced = cert.balanced;
                    r.epsilon = cert.epsilon;
                    if (cert.balanced)
                        r.status = verify_numeric(cert, config.samples, config.seed).passed ? "pass" : "fail";
                    else
                        r.status = verify_vanishing(weights[i], m, n, config.samples, config.seed) ? "vanishing" : "fail";
                } catch (const BoundExceeded&) {
                    r.status = "too-large";
                } catch (const std::exception&) {
                    r.status = "fail";
                }
            }
        };
        unsigned jobs = config.jobs ? config.jobs : std::max(1u, std::thread::hardware_concurrency());
        jobs = static_cast<unsigned>(std::min<std::size_t>(jobs, std::max<std::size_t>(1, weights.size())));
        std::vector<std::thread> pool;
        for (unsigned j = 1; j < jobs; ++j) pool.emplace_back(worker);
        worker();
        for (auto& t : pool) t.join();

        std::size_t passed = 0, vanishing = 0, failed = 0, too_large = 0;
        for (const auto& r : results) {
            if (r.status == "pass") ++passed;
            else if (r.status == "vanishing") ++vanishing;
            else if (r.status == "too-large") ++too_large;
            else ++failed;
        }
        auto eps_text = [](const Result& r) { return r.epsilon ? (*r.epsilon > 0 ? "+1" : "-1") : ""; };
        if (emit == Emit::Csv) {
            out << "m,n,lambda,balanced,epsilon,status\n";
            for (std::size_t i = 0; i < weights.size(); ++i)
                out << m << "," << n << ",\"" << join_ints(weights[i].entries()) << "\","
                    << (results[i].balanced ? "true" : "false") << "," << eps_text(results[i]) << ","
                    << results[i].status << "\n";
        } else if (emit == Emit::Json) {
            json rows = json::array();
            for (std::size_t i = 0; i < weights.size(); ++i)
                rows.push_back({{"lambda", weights[i].entries()},
                                {"balanced", results[i].balanced},
                                {"epsilon", results[i].epsilon ? json(*results[i].epsilon) : json()},
                                {"status", results[i].status}});
            out << json{{"m", m},
                        {"n", n},
                        {"min", config.min_entry},
                        {"max", config.max_entry},
                        {"results", rows},
                        {"summary",
                         {{"total", weights.size()},
                          {"passed", passed},
                          {"vanishing", vanishing},
                          {"failed", failed},
                          {"too_large", too_large}}}}
                       .dump(2)
                << "\n";
        } else {
            out << "sweep m=" << m << " n=" << n << " entries in [" << config.min_entry << "," << config.max_entry
                << "]: " << weights.size() << " weights\n";
            for (std::size_t i = 0; i < weights.size(); ++i) {
                out << bracketed(weights[i].entries()) << "  " << (results[i].balanced ? "balanced" : "unbalanced");
                if (results[i].epsilon) out << "  epsilon=" << eps_text(results[i]);
                out << "  " << results[i].status << "\n";
            }
            out << "summary: total " << weights.size() << ", passed " << passed << ", vanishing " << vanishing
                << ", failed " << failed;
            if (too_large) out << ", too large " << too_large;
            out << "\n";
        }
        if (failed) return kCheckFailed;
        return too_large ? kBoundExceeded : kPass;
    });
}

int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
    RunConfig config;
    config.seed = kDefaultSeed;
    if (const char* env = std::getenv("CHARFACTOR_BOUND")) {
        try {
            config.enumeration_bound = std::stoi(env);
        } catch (const std::exception&) {
            err << "error: CHARFACTOR_BOUND must be an integer\n";
            return kInputError;
        }
    }

    CLI::App app{"Factorization of GL(mn) characters at twisted elements t.c_n", "charfactor"};
    app.require_subcommand(1);
    std::string lambda_text;
    std::string emit_text;
    std::string output;

    auto add_common = [&](CLI::App* sub, bool shape, bool weight) {
        if (shape) {
            sub->add_option("--m", config.m, "block size m")->check(CLI::PositiveNumber);
            sub->add_option("--n", config.n, "number of blocks n")->check(CLI::PositiveNumber);
        }
        if (weight) sub->add_option("--lambda", lambda_text, "comma-separated dominant weight");
        sub->add_option("--samples", config.samples, "random sample points")->check(CLI::PositiveNumber);
        sub->add_option("--bound", config.enumeration_bound, "largest mn for exact enumeration")
            ->check(CLI::PositiveNumber);
        sub->add_option("--output", output, "write to this file instead of standard output");
        sub->add_option("--emit", emit_text, "output format")->check(CLI::IsMember({"json", "poly", "csv"}));
        sub->add_option("--seed", config.seed, "seed for sample points");
    };

    add_common(app.add_subcommand("factor", "print the factorization certificate"), true, true);
    auto* verify = app.add_subcommand("verify", "check the factorization numerically and symbolically");
    add_common(verify, true, true);
    verify->add_option("--certificate", config.certificate, "JSON certificate to re-verify");
    add_common(app.add_subcommand("denom-check", "compare the Weyl denominator with its closed form"), true, false);
    auto* audit = app.add_subcommand("coset-audit", "coset-level audit of the numerator");
    add_common(audit, true, true);
    audit->add_option("--max-cosets", config.max_cosets, "check only this many random cosets");
    auto* coxeter = app.add_subcommand("coxeter", "character value at the Coxeter element of GL(N)");
    add_common(coxeter, false, true);
    coxeter->add_flag("--conjugate", config.conjugate, "use the complex-conjugate Coxeter point");
    auto* bench = app.add_subcommand("bench", "time direct against factored evaluation (csv)");
    add_common(bench, true, true);
    bench->add_option("--points", config.points, "number of evaluation points")->check(CLI::PositiveNumber);
    bench->add_option("--repeats", config.repeats, "timing repetitions")->check(CLI::PositiveNumber);
    auto* sweep = app.add_subcommand("sweep", "factorize and verify every dominant weight in a box");
    add_common(sweep, true, false);
    sweep->add_option("--min", config.min_entry, "smallest entry");
    sweep->add_option("--max", config.max_entry, "largest entry");
    sweep->add_option("--jobs", config.jobs, "worker threads (0 = hardware concurrency)");

    std::vector<std::string> reversed(args.rbegin(), args.rend());
    try {
        app.parse(reversed);
    } catch (const CLI::CallForHelp&) {
        out << app.help();
        return kPass;
    } catch (const CLI::CallForAllHelp&) {
        out << app.help("", CLI::AppFormatMode::All);
        return kPass;
    } catch (const CLI::ParseError& e) {
        err << "error: " << e.what() << "\n";
        return kInputError;
    }

    config.command = app.get_subcommands().front()->get_name();
    if (config.enumeration_bound < 1) {
        err << "error: enumeration bound must be positive\n";
        return kInputError;
    }
    if (!emit_text.empty())
        config.emit = emit_text == "json" ? Emit::Json : emit_text == "csv" ? Emit::Csv : Emit::Poly;
    if (!lambda_text.empty()) {
        try {
            config.lambda = parse_int_list(lambda_text);
        } catch (const std::invalid_argument& e) {
            err << "error: " << e.what() << "\n";
            return kInputError;
        }
    } else if (config.command != "denom-check" && config.command != "sweep" && !config.certificate) {
        err << "error: --lambda is required\n";
        return kInputError;
    }

    std::ofstream file;
    std::ostream* sink = &out;
    if (!output.empty()) {
        file.open(output);
        if (!file) {
            err << "error: cannot write '" << output << "'\n";
            return kInputError;
        }
        sink = &file;
    }

    static const std::map<std::string, int (*)(const RunConfig&, std::ostream&, std::ostream&)> commands{
        {"factor", cmd_factor},           {"verify", cmd_verify},   {"denom-check", cmd_denom_check},
        {"coset-audit", cmd_coset_audit}, {"coxeter", cmd_coxeter}, {"bench", cmd_bench},
        {"sweep", cmd_sweep},
    };
    return commands.at(config.command)(config, *sink, err);
}

}  // namespace charfactor::cli
