#pragma once

/**
 * @file verify.hpp
 * @brief Deterministic verification suites over the catalog. Every suite returns rows;
 *        a row with failures carries family, order, expected and actual values.
 */

#include "families.hpp"

#include <chrono>
#include <functional>
#include <random>
#include <sstream>
#include <string>
#include <vector>

namespace qform {

struct Failure {
    std::string family;
    std::size_t n = 0;
    std::string expected;
    std::string actual;
    std::string detail;
};

struct VerifyRow {
    std::string suite;
    std::string family;
    std::string params;
    std::string check;
    std::string max_error = "0";
    std::size_t terms = 0;
    double seconds = 0;
    std::string note;
    std::vector<Failure> failures;

    bool ok() const { return failures.empty(); }
};

struct VerifyOptions {
    std::size_t n = 0;             // 0: suite default
    std::size_t samples = 0;       // 0: suite default
    unsigned precision = kDefaultPrecision;
    std::optional<std::uint64_t> seed;   // set: sample seeded random points instead of the curated ones
    double budget_seconds = 0;     // 0: unlimited
};

struct VerifyReport {
    std::vector<VerifyRow> rows;
    bool aborted = false;

    bool ok() const {
        if (aborted) return false;
        for (const auto& r : rows)
            if (!r.ok()) return false;
        return true;
    }
    std::size_t failure_count() const {
        std::size_t c = 0;
        for (const auto& r : rows) c += r.failures.size();
        return c;
    }
    void append(const VerifyReport& other) {
        rows.insert(rows.end(), other.rows.begin(), other.rows.end());
        aborted = aborted || other.aborted;
    }
};

inline const std::vector<std::string>& suite_names() {
    static const std::vector<std::string> s{"pearson", "class",    "decomposition", "moments",   "discrete",
                                            "integral", "q1limit", "identities",    "positivity", "qseries"};
    return s;
}

inline std::string params_text(const Params& p, const Rational& prim, bool sqrt_prim) {
    std::string out;
    for (const auto& [k, v] : p) out += k + "=" + to_string(v) + " ";
    out += (sqrt_prim ? "sqrtq=" : "q=") + to_string(prim);
    return out;
}

namespace detail {

using Clock = std::chrono::steady_clock;

/// Runs row bodies, timing each and honouring the budget.
class SuiteRunner {
public:
    SuiteRunner(std::string suite, const VerifyOptions& opts, VerifyReport& report)
        : suite_(std::move(suite)), opts_(opts), report_(report), start_(Clock::now()) {}

    bool out_of_budget() {
        if (opts_.budget_seconds <= 0) return false;
        const double used = std::chrono::duration<double>(Clock::now() - start_).count();
        if (used > opts_.budget_seconds) report_.aborted = true;
        return report_.aborted;
    }

    /// body fills the row; an escaping library error becomes a failure line.
    void row(const std::string& family, const std::string& params, const std::string& check,
             const std::function<void(VerifyRow&)>& body) {
        if (out_of_budget()) return;
        VerifyRow r;
        r.suite = suite_;
        r.family = family;
        r.params = params;
        r.check = check;
        const auto t0 = Clock::now();
        try {
            body(r);
        } catch (const Error& e) {
            r.failures.push_back({family, 0, "no error", e.what(), check});
        }
        r.seconds = std::chrono::duration<double>(Clock::now() - t0).count();
        report_.rows.push_back(std::move(r));
    }

private:
    std::string suite_;
    VerifyOptions opts_;
    VerifyReport& report_;
    Clock::time_point start_;
};

inline std::vector<const FamilyDef*> targets(const std::string& target, bool symmetric_only = false) {
    std::vector<const FamilyDef*> out;
    if (target == "all") {
        for (const auto& d : catalog())
            if (!symmetric_only || d.symmetric) out.push_back(&d);
        return out;
    }
    const FamilyDef& d = family_def(target);
    if (symmetric_only && !d.symmetric) throw ParameterOutOfRange(target + " is not a symmetric family");
    out.push_back(&d);
    return out;
}

inline std::uint64_t name_hash(const std::string& s) {
    std::uint64_t h = 1469598103934665603ull;
    for (unsigned char c : s) h = (h ^ c) * 1099511628211ull;
    return h;
}

/// First `count` curated samples, or seeded random ones.
inline std::vector<Instance> sample_points(const FamilyDef& d, std::size_t count, const VerifyOptions& opts) {
    std::vector<Instance> out;
    if (opts.seed) {
        std::mt19937_64 rng(*opts.seed ^ name_hash(d.name));
        for (std::size_t i = 0; i < count; ++i) out.push_back(random_instance(d.name, rng));
        return out;
    }
    for (std::size_t i = 0; i < count && i < d.samples.size(); ++i) out.push_back(d.samples[i]);
    return out;
}

inline void compare_exact(VerifyRow& r, const std::string& family, std::size_t n, const Rational& expected,
                          const Rational& actual, const std::string& what) {
    if (expected != actual) r.failures.push_back({family, n, to_string(expected), to_string(actual), what});
}

inline std::string sci(const BigFloat& x) { return to_string(x, 6); }

} // namespace detail

// ---------------------------------------------------------------------------
// Exact suites

/// moments_from_pearson equals the closed form, and the Pearson residual vanishes.
inline VerifyReport verify_pearson(const std::string& target, const VerifyOptions& opts) {
    VerifyReport rep;
    detail::SuiteRunner run("pearson", opts, rep);
    const std::size_t N = opts.n ? opts.n : 80;
    const std::size_t S = opts.samples ? opts.samples : 5;
    for (const FamilyDef* d : detail::targets(target)) {
        for (const Instance& in : detail::sample_points(*d, S, opts)) {
            run.row(d->name, params_text(in.params, in.primitive, d->sqrtq_primitive), "pearson moments",
                    [&](VerifyRow& r) {
                const FamilySpec s = instantiate(d->name, in);
                const RForm pm = moments_from_pearson(s.pearson, N);
                for (std::size_t n = 0; n <= N; ++n)
                    detail::compare_exact(r, d->name, n, s.moments.moment(n), pm.moment(n), "moments_from_pearson");
                const auto res = pearson_residual(s.pearson, s.moments, std::min<std::size_t>(N, 60));
                for (std::size_t n = 0; n < res.size(); ++n)
                    detail::compare_exact(r, d->name, n, 0, res[n], "pearson residual");
                r.terms = N + 1;
            });
        }
    }
    return rep;
}

/// Class-one certificate at the curated points, reduction at the excluded values.
inline VerifyReport verify_class(const std::string& target, const VerifyOptions& opts) {
    VerifyReport rep;
    detail::SuiteRunner run("class", opts, rep);
    const std::size_t S = opts.samples ? opts.samples : 5;
    for (const FamilyDef* d : detail::targets(target)) {
        const int expected_class = d->symmetric ? 1 : 0;
        for (const Instance& in : detail::sample_points(*d, S, opts)) {
            run.row(d->name, params_text(in.params, in.primitive, d->sqrtq_primitive), "class criterion",
                    [&](VerifyRow& r) {
                const FamilySpec s = instantiate(d->name, in);
                for (const auto& e : class_criterion(s.pearson, s.moments))
                    if (e.root.exact && *e.root.exact == 0 && d->symmetric && e.reducible)
                        r.failures.push_back({d->name, 0, "(A_0, B_0) != (0, 0)", "(0, 0)", "class criterion at c = 0"});
                const int cls = certified_class(s.pearson, s.moments);
                if (cls != expected_class)
                    r.failures.push_back({d->name, 0, std::to_string(expected_class), std::to_string(cls), "certified class"});
            });
        }
        if (!d->excluded_point) continue;
        for (const Rational& Q : {Rational(2), make_rational(1, 2), make_rational(2, 3)}) {
            const Params p = *d->excluded_point(Q);
            run.row(d->name, params_text(p, Q, true), "reduction at excluded value", [&](VerifyRow& r) {
                const FamilySpec s = instantiate(d->name, p, Q);
                const PearsonPair red = reduce_class(s.pearson, s.moments);
                if (red.class_estimate() != 0)
                    r.failures.push_back({d->name, 0, "0", std::to_string(red.class_estimate()), "class after reduction"});
                r.note = to_string(red);
            });
        }
    }
    if (target == "all" || target == "SV" || target == "Y_Brenke") {
        for (const Rational& Q : {Rational(2), make_rational(1, 2), make_rational(2, 3), make_rational(3, 2)}) {
            run.row("SV", "a=1/sqrtq, sqrtq=" + to_string(Q), "SV and h_{1/sqrtq} Y reduce to one class-zero pair",
                    [&](VerifyRow& r) {
                const FamilySpec sv = instantiate("SV", {{"a", 1 / Q}}, Q);
                const PearsonPair a = reduce_class(sv.pearson, sv.moments);
                const DerivedSpec hy = dilated_brenke_at_sqrtq(Q);
                const PearsonPair b = reduce_class(hy.pearson, hy.moments);
                if (a.class_estimate() != 0 || b.class_estimate() != 0)
                    r.failures.push_back({"SV", 0, "class 0", to_string(a) + " | " + to_string(b), "reduced class"});
                if (a.phi_dense() != b.phi_dense() || a.psi != b.psi)
                    r.failures.push_back({"SV", 0, to_string(a), to_string(b), "reduced pairs differ"});
                for (std::size_t n = 0; n <= 40; ++n)
                    detail::compare_exact(r, "SV", n, sv.moments.moment(n), hy.moments.moment(n), "moments");
                r.note = to_string(a);
            });
        }
    }
    return rep;
}

/// Quadratic decomposition replayed against the sigma-image families.
inline VerifyReport verify_decomposition(const std::string& target, const VerifyOptions& opts) {
    VerifyReport rep;
    detail::SuiteRunner run("decomposition", opts, rep);
    const std::size_t N = opts.n ? opts.n : 24;
    const std::size_t S = opts.samples ? opts.samples : 5;
    for (const FamilyDef* d : detail::targets(target, target == "all")) {
        if (!d->symmetric) throw ParameterOutOfRange(d->name + " is not a symmetric family");
        for (const Instance& in : detail::sample_points(*d, S, opts)) {
            run.row(d->name, params_text(in.params, in.primitive, true), "decompose/recompose", [&](VerifyRow& r) {
                const FamilySpec s = instantiate(d->name, in);
                const PRPair pr = decompose([&](std::size_t k) { return s.recurrence.gamma(k); }, N);
                const FamilySpec P = image_spec(s, false);
                const FamilySpec R = image_spec(s, true);
                const Rational dil = s.sigma->x_sigma.dilation;
                for (std::size_t n = 0; n <= N; ++n) {
                    detail::compare_exact(r, d->name, n, P.recurrence.beta(n), pr.beta_p[n], "beta^P");
                    detail::compare_exact(r, d->name, n + 1, P.recurrence.gamma(n + 1), pr.gamma_p[n], "gamma^P");
                    detail::compare_exact(r, d->name, n, dil * R.recurrence.beta(n), pr.beta_r[n], "beta^R");
                    detail::compare_exact(r, d->name, n + 1, dil * dil * R.recurrence.gamma(n + 1), pr.gamma_r[n],
                                          "gamma^R");
                }
                // Rebuild from the image tables, not from the decomposition output.
                PRPair table;
                for (std::size_t n = 0; n <= N; ++n) {
                    table.beta_p.push_back(P.recurrence.beta(n));
                    table.gamma_p.push_back(P.recurrence.gamma(n + 1));
                    table.beta_r.push_back(dil * R.recurrence.beta(n));
                    table.gamma_r.push_back(dil * dil * R.recurrence.gamma(n + 1));
                }
                const auto g = recompose(table, N);
                for (std::size_t k = 1; k <= g.size(); ++k)
                    detail::compare_exact(r, d->name, k, s.recurrence.gamma(k), g[k - 1], "recomposed gamma");
                for (std::size_t n = 0; n <= N; ++n) {
                    detail::compare_exact(r, d->name, 2 * n, P.moments.moment(n), s.moments.moment(2 * n), "sigma u moments");
                    detail::compare_exact(r, d->name, 2 * n + 1,
                                          s.sigma->x_sigma.prefactor * ipow(dil, static_cast<long>(n)) * R.moments.moment(n),
                                          s.moments.moment(2 * n + 2), "x sigma u moments");
                }
                r.terms = 2 * N + 3;
            });
        }
    }
    return rep;
}

/// Recurrence moments against the closed form, and exact orthogonality of the MOPS.
inline VerifyReport verify_moments(const std::string& target, const VerifyOptions& opts) {
    VerifyReport rep;
    detail::SuiteRunner run("moments", opts, rep);
    const std::size_t N = opts.n ? opts.n : 15;
    const std::size_t S = opts.samples ? opts.samples : 3;
    for (const FamilyDef* d : detail::targets(target)) {
        for (const Instance& in : detail::sample_points(*d, S, opts)) {
            run.row(d->name, params_text(in.params, in.primitive, d->sqrtq_primitive), "recurrence and orthogonality",
                    [&](VerifyRow& r) {
                const FamilySpec s = instantiate(d->name, in);
                const auto rm = moments_from_recurrence(s.recurrence, 2 * N);
                for (std::size_t n = 0; n <= 2 * N; ++n)
                    detail::compare_exact(r, d->name, n, s.moments.moment(n), rm[n], "moments from recurrence");
                const auto table = generate_mops(s.recurrence, N);
                for (const auto& v : check_orthogonality(s.moments, table, N))
                    r.failures.push_back({d->name, v.n,
                                          v.m == v.n ? to_string(table.squared_norms[v.n]) : "0", to_string(v.value),
                                          "<u, B_" + std::to_string(v.m) + " B_" + std::to_string(v.n) + ">"});
                r.terms = (N + 1) * (N + 2) / 2;
            });
        }
    }
    return rep;
}

// ---------------------------------------------------------------------------
// Numeric suites

namespace detail {

inline VerifyReport verify_representations(const std::string& target, const VerifyOptions& opts,
                                           Representation::Kind kind) {
    const bool discrete = kind == Representation::Kind::Discrete;
    VerifyReport rep;
    detail::SuiteRunner run(discrete ? "discrete" : "integral", opts, rep);
    const std::size_t N = opts.n ? opts.n : (discrete ? 20 : 12);
    const std::size_t per_region = opts.samples ? opts.samples : (discrete ? 3 : 2);
    const unsigned P = opts.precision;
    const BigFloat tol_digits = discrete ? BigFloat(P) - 15 : BigFloat(12);
    for (const FamilyDef* d : detail::targets(target)) {
        std::map<std::string, std::size_t> used;
        std::vector<Instance> points = d->samples;
        if (opts.seed) {
            // seeded runs add random points; those outside every region are skipped
            std::mt19937_64 rng(*opts.seed ^ name_hash(d->name));
            for (int i = 0; i < 20; ++i) points.push_back(random_instance(d->name, rng));
        }
        for (const Instance& in : points) {
            const FamilySpec s = instantiate(d->name, in);
            for (const Representation& rp : s.representations) {
                if (rp.kind != kind || !rp.applies || used[rp.region] >= per_region) continue;
                ++used[rp.region];
                run.row(d->name, params_text(in.params, in.primitive, d->sqrtq_primitive), rp.region, [&](VerifyRow& r) {
                    PrecisionGuard guard(P + 20);
                    const BigFloat tol = pow(BigFloat(10), -tol_digits);
                    const auto policy = TruncationPolicy::for_digits(P + 20);
                    if (!rp.known_defect.empty()) r.note = "known defect: " + rp.known_defect;
                    RepMoments m;
                    try {
                        m = representation_moments(rp, N, policy);
                    } catch (const Error& e) {
                        r.failures.push_back({d->name, 0, "moments", e.what(), rp.region});
                        r.max_error = "n/a";
                        return;
                    }
                    r.terms = m.terms;
                    BigFloat worst(0);
                    for (std::size_t n = 0; n <= N; ++n) {
                        const BigFloat e = to_bf(s.moments.moment(n));
                        const BigFloat err = abs(m.values[n] - e) / std::max(BigFloat(1), BigFloat(abs(e)));
                        worst = std::max(worst, err);
                        if (!(err <= tol)) r.failures.push_back({d->name, n, sci(e), sci(m.values[n]), rp.region});
                    }
                    if (!(m.max_imag <= tol))
                        r.failures.push_back({d->name, 0, "imaginary part 0", sci(m.max_imag), rp.region});
                    r.max_error = sci(worst);
                });
            }
        }
    }
    return rep;
}

} // namespace detail

inline VerifyReport verify_discrete(const std::string& target, const VerifyOptions& opts) {
    return detail::verify_representations(target, opts, Representation::Kind::Discrete);
}

inline VerifyReport verify_integral(const std::string& target, const VerifyOptions& opts) {
    return detail::verify_representations(target, opts, Representation::Kind::Integral);
}

inline VerifyReport verify_q1limit(const std::string& target, const VerifyOptions& opts) {
    VerifyReport rep;
    detail::SuiteRunner run("q1limit", opts, rep);
    std::vector<std::string> fams;
    if (target == "all") fams = q1_families();
    else {
        family_def(target);
        if (std::find(q1_families().begin(), q1_families().end(), target) == q1_families().end())
            throw NotFound(target + " has no stated q -> 1 limit");
        fams = {target};
    }
    const std::size_t N = opts.n ? opts.n : 10;
    for (const auto& f : fams) {
        const FamilyDef& d = family_def(f);
        run.row(f, params_text(d.samples.front().params, 1, d.sqrtq_primitive), "q = 1 +- 1e-6", [&](VerifyRow& r) {
            PrecisionGuard guard(opts.precision + 20);
            const BigFloat eps("1e-6");
            const Q1Report q1 = q1_limit_check(f, eps, N);
            r.max_error = detail::sci(q1.max_relative_deviation);
            r.terms = N;
            if (!(q1.max_relative_deviation < 100 * eps))
                r.failures.push_back({f, q1.worst_n, "< 1e-4", r.max_error, q1.worst_quantity});
        });
    }
    return rep;
}

// ---------------------------------------------------------------------------
// Randomized operational identities

namespace detail {

struct RandomForms {
    std::mt19937_64 rng;

    Rational small(int lim = 9, int den = 6) {
        std::uniform_int_distribution<int> a(-lim, lim), b(1, den);
        return make_rational(a(rng), b(rng));
    }
    Rational nonzero() {
        for (;;) {
            Rational r = small();
            if (r != 0) return r;
        }
    }
    Rational base() {
        for (;;) {
            Rational r = small(7, 4);
            if (r != 0 && r != 1 && r != -1) return r;
        }
    }
    RPoly poly(int max_deg = 4) {
        std::uniform_int_distribution<int> d(0, max_deg);
        std::vector<Rational> c(d(rng) + 1);
        for (auto& x : c) x = small();
        return RPoly(c);
    }
    RForm form(std::size_t count, bool symmetric = false) {
        std::vector<Rational> m(count);
        for (std::size_t n = 0; n < count; ++n) m[n] = symmetric && n % 2 ? Rational(0) : small();
        return RForm::from_moments(m, "u", symmetric);
    }
};

inline void forms_equal(VerifyRow& r, const RForm& lhs, const RForm& rhs, std::size_t N, const std::string& what) {
    for (std::size_t n = 0; n <= N; ++n) {
        const Rational a = lhs.moment(n), b = rhs.moment(n);
        if (a != b) {
            r.failures.push_back({"identity", n, to_string(a), to_string(b), what});
            return;
        }
    }
}

} // namespace detail

/// Hahn product rule, sigma rules, (x-c) identities and symmetric lifting on random instances.
inline VerifyReport verify_identities(const VerifyOptions& opts) {
    VerifyReport rep;
    detail::SuiteRunner run("identities", opts, rep);
    const std::size_t count = opts.samples ? opts.samples : 200;
    const std::size_t N = opts.n ? opts.n : 16;
    const std::uint64_t seed = opts.seed.value_or(20240601);
    auto identity = [&](const std::string& name, std::uint64_t salt,
                        const std::function<void(detail::RandomForms&, VerifyRow&)>& one) {
        run.row("identity", std::to_string(count) + " instances, seed " + std::to_string(seed), name, [&](VerifyRow& r) {
            detail::RandomForms g{std::mt19937_64(seed ^ salt)};
            for (std::size_t i = 0; i < count && r.ok(); ++i) one(g, r);
            r.terms = count;
        });
    };
    const std::size_t M = 2 * N + 16;
    identity("H_q(fu) = (h_{1/q} f) H_q u + q^{-1} (H_{1/q} f) u", 1, [&](detail::RandomForms& g, VerifyRow& r) {
        const Rational q = g.base();
        const RPoly f = g.poly();
        const RForm u = g.form(M);
        const RForm lhs = hq_form(mul_poly_form(f, u), q);
        const RForm rhs = combine(Rational(1), mul_poly_form(dilate(f, Rational(1 / q)), hq_form(u, q)), Rational(1 / q),
                                  mul_poly_form(hq_poly(f, Rational(1 / q)), u));
        detail::forms_equal(r, lhs, rhs, N, "product rule, q = " + to_string(q) + ", f = " + to_string(f));
    });
    identity("f sigma u = sigma(f(x^2) u)", 2, [&](detail::RandomForms& g, VerifyRow& r) {
        const RPoly f = g.poly();
        const RForm u = g.form(M + 2 * 8 + 8);
        detail::forms_equal(r, mul_poly_form(f, sigma_form(u)), sigma_form(mul_poly_form(sigma_poly(f), u)), N,
                            "sigma rule, f = " + to_string(f));
    });
    identity("sigma(H_sqrtq u) = (sqrtq + 1) H_q sigma(x u)", 3, [&](detail::RandomForms& g, VerifyRow& r) {
        const Rational Q = g.base();
        const RForm u = g.form(M + 8);
        const RForm lhs = sigma_form(hq_form(u, Q));
        const RForm rhs = combine(Rational(Q + 1), hq_form(sigma_form(mul_poly_form(RPoly::x(), u)), Rational(Q * Q)),
                                  Rational(0), u);
        detail::forms_equal(r, lhs, rhs, N, "sigma/Hahn commutation, sqrtq = " + to_string(Q));
    });
    identity("(x-c)((x-c)^{-1} u) = u", 4, [&](detail::RandomForms& g, VerifyRow& r) {
        const Rational c = g.small();
        const RForm u = g.form(M);
        detail::forms_equal(r, mul_poly_form(RPoly::linear(c), div_xc_form(u, c)), u, N, "c = " + to_string(c));
    });
    identity("(x-c)^{-1}((x-c) u) = u - (u)_0 delta_c", 5, [&](detail::RandomForms& g, VerifyRow& r) {
        const Rational c = g.small();
        const RForm u = g.form(M);
        const RForm rhs = combine(Rational(1), u, Rational(-u.moment(0)), dirac(c));
        detail::forms_equal(r, div_xc_form(mul_poly_form(RPoly::linear(c), u), c), rhs, N, "c = " + to_string(c));
    });
    identity("symmetric u: (u)_{2n} = (sigma u)_n, (u)_{2n+1} = 0", 6, [&](detail::RandomForms& g, VerifyRow& r) {
        const RForm u = g.form(M, true);
        const RForm su = sigma_form(u);
        detail::forms_equal(r, sym_moments_from_sigma(su), u, N, "lifted moments");
        for (std::size_t n = 0; n <= N / 2; ++n)
            detail::compare_exact(r, "identity", n, u.moment(2 * n), su.moment(n), "even moments");
    });
    identity("sigma u = sum rho_k delta_{tau_k} lifts to sum rho_k (delta_{sqrt tau_k} + delta_{-sqrt tau_k})/2", 7,
             [&](detail::RandomForms& g, VerifyRow& r) {
        std::uniform_int_distribution<int> len(1, 6);
        const int K = len(g.rng);
        std::vector<std::pair<Rational, Rational>> sig, lifted;
        Rational total = 0;
        for (int k = 0; k < K; ++k) {
            const Rational rho = g.nonzero();
            const Rational root = g.nonzero();
            total += rho;
            sig.push_back({rho, root * root});
            lifted.push_back({rho / 2, root});
            lifted.push_back({rho / 2, -root});
        }
        if (total == 0) return;
        for (auto& a : sig) a.first /= total;
        for (auto& a : lifted) a.first /= total;
        const RForm su = comb_form(sig), u = comb_form(lifted);
        detail::forms_equal(r, u, sym_moments_from_sigma(su), N, "lifted comb, " + std::to_string(K) + " atoms");
    });
    return rep;
}

// ---------------------------------------------------------------------------
// Positivity frontier

/// is_positive_definite against the stated regions on 100-point grids.
inline VerifyReport verify_positivity(const std::string& target, const VerifyOptions& opts) {
    VerifyReport rep;
    detail::SuiteRunner run("positivity", opts, rep);
    const std::size_t N = opts.n ? opts.n : 40;
    struct Grid {
        std::string family;
        std::vector<Instance> points;
    };
    std::vector<Grid> grids;
    auto steps = [](long from, long to, long den) {
        std::vector<Rational> v;
        for (long k = from; k <= to; ++k) v.push_back(make_rational(k, den));
        return v;
    };
    {
        Grid g{"H_mu_q", {}};
        for (const Rational& Q : {Rational(2), make_rational(1, 2)})
            for (const Rational& mu : steps(-25, 24, 8)) g.points.push_back({{{"mu", mu}}, Q});
        grids.push_back(g);
    }
    {
        Grid g{"SV", {}};
        for (const Rational& Q : {make_rational(1, 2), make_rational(2, 3), make_rational(3, 2), Rational(2)})
            for (const Rational& a : steps(-12, 12, 3)) g.points.push_back({{{"a", a}}, Q});
        grids.push_back(g);
    }
    {
        Grid g{"LittleQJacobi_sym", {}};
        for (const Rational& Q : {make_rational(1, 2), make_rational(2, 3), make_rational(3, 2), Rational(2)})
            for (const Rational& a : {make_rational(-1, 2), make_rational(1, 3), make_rational(5, 4), Rational(3),
                                      Rational(7)})
                for (const Rational& b : {Rational(-2), make_rational(1, 2), Rational(1), make_rational(5, 3), Rational(4)})
                    g.points.push_back({{{"a", a}, {"b", b}}, Q});
        grids.push_back(g);
    }
    {
        Grid g{"T_omega_q", {}};
        for (const Rational& Q : {make_rational(1, 2), make_rational(2, 3), make_rational(3, 2), Rational(2)})
            for (const Rational& om : steps(-12, 12, 4)) g.points.push_back({{{"omega", om}}, Q});
        grids.push_back(g);
    }
    for (const Grid& g : grids) {
        if (target != "all" && target != g.family) continue;
        run.row(g.family, std::to_string(g.points.size()) + " grid points", "positivity region", [&](VerifyRow& r) {
            std::size_t tested = 0, skipped = 0, positive = 0;
            std::string kind;
            for (const Instance& in : g.points) {
                FamilySpec s;
                try {
                    s = instantiate(g.family, in);
                } catch (const ConstraintViolation&) {
                    ++skipped;
                    continue;
                }
                ++tested;
                kind = s.positivity_iff ? "iff" : "sufficient";
                const bool pd = is_positive_definite(s.recurrence, N);
                const bool region = s.positivity_region();
                positive += pd;
                const bool bad = s.positivity_iff ? pd != region : (region && !pd);
                if (bad)
                    r.failures.push_back({g.family, N, region ? "positive definite" : "not positive definite",
                                          pd ? "positive definite" : "not positive definite",
                                          params_text(in.params, in.primitive, true)});
            }
            r.terms = tested;
            r.note = kind + "; " + std::to_string(positive) + " positive, " + std::to_string(skipped) +
                     " points excluded by constraints";
        });
    }
    if (rep.rows.empty() && target != "all") throw NotFound(target + " has no stated positivity region");
    return rep;
}

// ---------------------------------------------------------------------------
// q-series and quadrature cross-checks

inline VerifyReport verify_qseries(const VerifyOptions& opts) {
    VerifyReport rep;
    detail::SuiteRunner run("qseries", opts, rep);
    const unsigned P = opts.precision;
    const std::uint64_t seed = opts.seed.value_or(7);
    run.row("qbinomial", "20 random points, seed " + std::to_string(seed), "sum vs product", [&](VerifyRow& r) {
        PrecisionGuard guard(P + 20);
        const auto policy = TruncationPolicy::for_digits(P + 20);
        const BigFloat tol = pow(BigFloat(10), -static_cast<int>(P) + 10);
        std::mt19937_64 rng(seed);
        std::uniform_real_distribution<double> qd(0.05, 0.9), zd(-0.9, 0.9), ad(-3, 3);
        BigFloat worst(0);
        for (int i = 0; i < 20; ++i) {
            const BigFloat q(qd(rng)), z(zd(rng)), a(ad(rng));
            const BigFloat lhs = qbinomial_sum(a, z, q, policy), rhs = qbinomial_product(a, z, q, policy);
            const BigFloat err = abs(lhs - rhs) / std::max(BigFloat(1), BigFloat(abs(rhs)));
            worst = std::max(worst, err);
            if (!(err <= tol)) r.failures.push_back({"qbinomial", static_cast<std::size_t>(i), detail::sci(rhs), detail::sci(lhs), "q-binomial"});
        }
        r.terms = 20;
        r.max_error = detail::sci(worst);
    });
    const std::vector<std::array<Rational, 3>> mellin{{Rational(1), make_rational(1, 4), make_rational(1, 2)},
                                                      {make_rational(1, 2), Rational(0), make_rational(1, 2)},
                                                      {make_rational(3, 2), make_rational(1, 10), make_rational(2, 3)},
                                                      {Rational(2), make_rational(-1, 20), make_rational(1, 2)}};
    for (const auto& [x, a, q] : mellin) {
        run.row("q_mellin_integral", "x=" + to_string(x) + " a=" + to_string(a) + " q=" + to_string(q),
                "closed form vs quadrature", [&](VerifyRow& r) {
            PrecisionGuard guard(P + 20);
            const auto policy = TruncationPolicy::for_digits(P + 20);
            const BigFloat closed = q_mellin_integral(x, a, q, policy);
            const auto quad = q_mellin_quadrature(x, a, q, policy);
            const BigFloat err = abs(closed - quad.values[0]) / std::max(BigFloat(1), BigFloat(abs(closed)));
            r.max_error = detail::sci(err);
            r.terms = quad.nodes;
            if (!(err <= pow(BigFloat(10), -static_cast<int>(P) / 2)))
                r.failures.push_back({"q_mellin_integral", 0, detail::sci(closed), detail::sci(quad.values[0]), "quadrature"});
        });
    }
    // Lifting every classical comb: odd moments vanish, even ones reproduce the classical moments.
    for (const auto& d : catalog()) {
        if (d.symmetric) continue;
        for (const Instance& in : d.samples) {
            const FamilySpec s = instantiate(d.name, in);
            for (const Representation& rp : s.representations) {
                if (rp.kind != Representation::Kind::Discrete || !rp.applies || !rp.known_defect.empty()) continue;
                run.row(d.name, params_text(in.params, in.primitive, d.sqrtq_primitive), "lifted comb: " + rp.region,
                        [&](VerifyRow& r) {
                    PrecisionGuard guard(P + 20);
                    const auto policy = TruncationPolicy::for_digits(P + 20);
                    const BigFloat tol = pow(BigFloat(10), -static_cast<int>(P) + 10);
                    const auto parts = rp.build();
                    const std::size_t N = 10;
                    const auto base = comb_moments(parts.combs.front(), N, policy);
                    const auto lifted = comb_moments(sym_comb_from_sigma(parts.combs.front()), 2 * N, policy);
                    BigFloat worst(0);
                    for (std::size_t n = 0; n <= N; ++n) {
                        const BigFloat odd = n < N ? abs(lifted.moments[2 * n + 1]) : BigFloat(0);
                        const ComplexBF diff{lifted.moments[2 * n].re - base.moments[n].re,
                                             lifted.moments[2 * n].im - base.moments[n].im};
                        const BigFloat even = abs(diff) / std::max(BigFloat(1), abs(base.moments[n]));
                        worst = std::max({worst, odd, even});
                        if (!(odd <= tol)) r.failures.push_back({d.name, 2 * n + 1, "0", detail::sci(odd), "odd moment"});
                        if (!(even <= tol))
                            r.failures.push_back({d.name, 2 * n, detail::sci(base.moments[n].re),
                                                  detail::sci(lifted.moments[2 * n].re), "even moment"});
                    }
                    r.terms = lifted.terms;
                    r.max_error = detail::sci(worst);
                });
            }
        }
    }
    return rep;
}

/// Suite by name; `identities` and `qseries` ignore the target.
inline VerifyReport run_suite(const std::string& suite, const std::string& target, const VerifyOptions& opts) {
    if (suite == "pearson") return verify_pearson(target, opts);
    if (suite == "class") return verify_class(target, opts);
    if (suite == "decomposition") return verify_decomposition(target, opts);
    if (suite == "moments") return verify_moments(target, opts);
    if (suite == "discrete") return verify_discrete(target, opts);
    if (suite == "integral") return verify_integral(target, opts);
    if (suite == "q1limit") return verify_q1limit(target, opts);
    if (suite == "identities") return verify_identities(opts);
    if (suite == "positivity") return verify_positivity(target, opts);
    if (suite == "qseries") return verify_qseries(opts);
    throw NotFound("unknown suite " + suite);
}

} // namespace qform
