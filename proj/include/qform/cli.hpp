#pragma once

/**
 * @file cli.hpp
 * @brief The qform command line: list, show, moments, recurrence, polynomials, verify.
 *        run() is the whole program so tests can drive it with captured streams.
 */

#include "verify.hpp"

#include <CLI11.hpp>
#include <json.hpp>

#include <cstdlib>
#include <iomanip>
#include <ostream>
#include <sstream>

namespace qform {

// ---------------------------------------------------------------------------
// Tables and their CSV / JSON forms

struct Table {
    std::vector<std::string> columns;
    std::vector<std::vector<std::string>> rows;

    friend bool operator==(const Table&, const Table&) = default;
};

namespace detail {

inline std::string csv_field(const std::string& s) {
    if (s.find_first_of(",\"\n\r") == std::string::npos) return s;
    std::string out = "\"";
    for (char c : s) {
        if (c == '"') out += '"';
        out += c;
    }
    return out + "\"";
}

inline void csv_line(std::ostream& os, const std::vector<std::string>& cells) {
    for (std::size_t i = 0; i < cells.size(); ++i) os << (i ? "," : "") << csv_field(cells[i]);
    os << "\n";
}

} // namespace detail

inline std::string emit_csv(const Table& t) {
    std::ostringstream os;
    detail::csv_line(os, t.columns);
    for (const auto& r : t.rows) detail::csv_line(os, r);
    return os.str();
}

/// Inverse of emit_csv; the first record is the header.
inline Table parse_csv(const std::string& text) {
    std::vector<std::vector<std::string>> records;
    std::vector<std::string> cur;
    std::string field;
    bool quoted = false, any = false;
    for (std::size_t i = 0; i < text.size(); ++i) {
        const char c = text[i];
        if (quoted) {
            if (c == '"' && i + 1 < text.size() && text[i + 1] == '"') {
                field += '"';
                ++i;
            } else if (c == '"') {
                quoted = false;
            } else {
                field += c;
            }
            continue;
        }
        if (c == '"') {
            quoted = any = true;
        } else if (c == ',') {
            cur.push_back(std::move(field));
            field.clear();
            any = true;
        } else if (c == '\n' || c == '\r') {
            if (c == '\r' && i + 1 < text.size() && text[i + 1] == '\n') ++i;
            cur.push_back(std::move(field));
            field.clear();
            records.push_back(std::move(cur));
            cur.clear();
            any = false;
        } else {
            field += c;
            any = true;
        }
    }
    if (quoted) throw ParseError("unterminated quoted CSV field");
    if (any || !field.empty()) {
        cur.push_back(std::move(field));
        records.push_back(std::move(cur));
    }
    Table t;
    if (records.empty()) return t;
    t.columns = std::move(records.front());
    for (std::size_t i = 1; i < records.size(); ++i) {
        if (records[i].size() != t.columns.size())
            throw ParseError("CSV record " + std::to_string(i) + " has " + std::to_string(records[i].size()) +
                             " fields, header has " + std::to_string(t.columns.size()));
        t.rows.push_back(std::move(records[i]));
    }
    return t;
}

inline std::string emit_text(const Table& t) {
    std::vector<std::size_t> w(t.columns.size());
    for (std::size_t j = 0; j < w.size(); ++j) {
        w[j] = t.columns[j].size();
        for (const auto& r : t.rows) w[j] = std::max(w[j], r[j].size());
    }
    std::ostringstream os;
    auto line = [&](const std::vector<std::string>& cells) {
        for (std::size_t j = 0; j < cells.size(); ++j) {
            if (j + 1 == cells.size()) os << cells[j];
            else os << std::left << std::setw(static_cast<int>(w[j] + 2)) << cells[j];
        }
        os << "\n";
    };
    line(t.columns);
    for (const auto& r : t.rows) line(r);
    return os.str();
}

inline nlohmann::ordered_json table_json(const Table& t) {
    nlohmann::ordered_json j;
    j["columns"] = t.columns;
    j["rows"] = t.rows;
    return j;
}

// ---------------------------------------------------------------------------
// Family descriptions

inline nlohmann::ordered_json family_json(const FamilyDef& d) {
    nlohmann::ordered_json j;
    j["name"] = d.name;
    j["title"] = d.title;
    auto& p = j["params"] = nlohmann::ordered_json::array();
    for (const auto& pi : d.params) p.push_back(pi.name);
    j["q"] = nullptr;
    j["primitive"] = d.sqrtq_primitive ? "sqrtq" : "q";
    j["symmetric"] = d.symmetric;
    j["constraints"] = d.constraint_text;
    if (d.symmetric) j["class_one"] = d.class_one_text;
    j["provenance"] = d.provenance;
    return j;
}

inline nlohmann::ordered_json family_json(const FamilyDef& d, const FamilySpec& s) {
    nlohmann::ordered_json j = family_json(d);
    nlohmann::ordered_json p = nlohmann::ordered_json::object();
    for (const auto& [k, v] : s.params) p[k] = to_string(v);
    j["params"] = p;
    j["q"] = to_string(s.q);
    if (s.sqrtq) j["sqrtq"] = to_string(*s.sqrtq);
    j["pearson"] = {{"phi", to_string(s.pearson.phi_dense())}, {"psi", to_string(s.pearson.psi)}};
    j["class"] = certified_class(s.pearson, s.moments);
    if (s.sigma) j["sigma_image"] = sigma_image_text(s);
    auto& reps = j["representations"] = nlohmann::ordered_json::array();
    for (const auto& r : s.representations) {
        nlohmann::ordered_json e{{"kind", r.kind == Representation::Kind::Discrete ? "discrete" : "integral"},
                                 {"region", r.region},
                                 {"applies", r.applies}};
        if (!r.known_defect.empty()) e["known_defect"] = r.known_defect;
        reps.push_back(e);
    }
    if (s.positivity_region) {
        j["positivity"] = s.positivity_text;
        j["positive_definite_region"] = s.positivity_region();
    }
    return j;
}

inline std::string family_text(const FamilyDef& d, const FamilySpec* s) {
    std::ostringstream os;
    std::string anchors;
    for (const auto& a : d.provenance) anchors += (anchors.empty() ? "" : ", ") + a;
    os << d.name << ": " << d.title << "\n";
    os << "  provenance: " << anchors << "\n";
    os << "  parameters:";
    for (const auto& p : d.params) os << " " << p.name << (p.integer ? " (integer)" : "");
    os << (d.params.empty() ? " none" : "") << "; " << (d.sqrtq_primitive ? "sqrt(q)" : "q") << " rational\n";
    os << "  constraints:\n";
    if (d.constraint_text.empty()) os << "    none beyond q^k != 1 [" << anchors << "]\n";
    for (const auto& c : d.constraint_text) os << "    " << c << " [" << anchors << "]\n";
    if (d.symmetric) os << "  class one: " << d.class_one_text << " [" << anchors << "]\n";
    if (!s) return os.str();
    os << "  instance:";
    for (const auto& [k, v] : s->params) os << " " << k << "=" << to_string(v);
    os << " q=" << to_string(s->q);
    if (s->sqrtq) os << " sqrtq=" << to_string(*s->sqrtq);
    os << "\n  pearson: " << to_string(s->pearson) << "\n";
    std::istringstream cr(class_report(s->pearson, s->moments));
    for (std::string line; std::getline(cr, line);) os << "    " << line << "\n";
    if (s->sigma) os << "  sigma image: " << sigma_image_text(*s) << "\n";
    for (const auto& r : s->representations) {
        os << "  " << (r.kind == Representation::Kind::Discrete ? "discrete" : "integral") << " representation ["
           << r.region << "]: " << (r.applies ? "applies" : "outside region");
        if (!r.known_defect.empty()) os << "; known defect: " << r.known_defect;
        os << "\n";
    }
    if (s->positivity_region)
        os << "  positivity: " << s->positivity_text << "; here " << (s->positivity_region() ? "inside" : "outside")
           << "\n";
    return os.str();
}

// ---------------------------------------------------------------------------
// Verification reports

inline Table verify_table(const VerifyReport& rep) {
    Table t{{"suite", "family", "params", "check", "status", "max_error", "terms", "seconds", "failures", "note"}, {}};
    for (const auto& r : rep.rows) {
        std::ostringstream sec;
        sec << std::fixed << std::setprecision(4) << r.seconds;
        t.rows.push_back({r.suite, r.family, r.params, r.check, r.ok() ? "PASS" : "FAIL", r.max_error,
                          std::to_string(r.terms), sec.str(), std::to_string(r.failures.size()), r.note});
    }
    return t;
}

inline std::string failure_line(const Failure& f) {
    return "FAIL family=" + f.family + " n=" + std::to_string(f.n) + " expected=" + f.expected + " actual=" + f.actual +
           (f.detail.empty() ? "" : " (" + f.detail + ")");
}

inline nlohmann::ordered_json verify_json(const VerifyReport& rep) {
    nlohmann::ordered_json rows = nlohmann::ordered_json::array();
    for (const auto& r : rep.rows) {
        nlohmann::ordered_json fl = nlohmann::ordered_json::array();
        for (const auto& f : r.failures)
            fl.push_back({{"family", f.family}, {"n", f.n}, {"expected", f.expected}, {"actual", f.actual}, {"detail", f.detail}});
        rows.push_back({{"suite", r.suite},
                        {"family", r.family},
                        {"params", r.params},
                        {"check", r.check},
                        {"ok", r.ok()},
                        {"max_error", r.max_error},
                        {"terms", r.terms},
                        {"seconds", r.seconds},
                        {"note", r.note},
                        {"failures", fl}});
    }
    return {{"ok", rep.ok()}, {"aborted", rep.aborted}, {"failures", rep.failure_count()}, {"rows", rows}};
}

inline std::string verify_text(const VerifyReport& rep, std::size_t max_failures_per_row = 8) {
    std::ostringstream os;
    for (const auto& r : rep.rows) {
        os << (r.ok() ? "PASS " : "FAIL ") << r.suite << " " << r.family << " [" << r.params << "] " << r.check
           << "  max_error=" << r.max_error << " terms=" << r.terms << " time=" << std::fixed << std::setprecision(3)
           << r.seconds << "s";
        os.unsetf(std::ios::fixed);
        if (!r.note.empty()) os << "  " << r.note;
        os << "\n";
        for (std::size_t i = 0; i < r.failures.size() && i < max_failures_per_row; ++i)
            os << "  " << failure_line(r.failures[i]) << "\n";
        if (r.failures.size() > max_failures_per_row)
            os << "  ... " << r.failures.size() - max_failures_per_row << " more failures\n";
    }
    os << (rep.ok() ? "OK" : "FAILED") << ": " << rep.rows.size() << " checks, " << rep.failure_count() << " failures";
    if (rep.aborted) os << ", aborted: time budget exceeded";
    os << "\n";
    return os.str();
}

// ---------------------------------------------------------------------------
// Command line

struct CliOptions {
    std::string format = "text";
    unsigned precision = kDefaultPrecision;
    std::optional<std::uint64_t> seed;
    std::size_t samples = 0;
    double budget_seconds = 0;
    std::optional<std::size_t> n;
};

namespace detail {

/// Family selection shared by show, moments, recurrence and polynomials.
struct FamilyArgs {
    std::string family;
    std::map<std::string, std::string> named;   // --mu 1/2 and friends
    std::vector<std::string> pairs;             // --param mu=1/2, --params mu=1/2,b=3
    std::string q, sqrtq;

    void attach(CLI::App* sub, bool family_required) {
        auto* f = sub->add_option("family", family, "family identifier (see `list`)");
        if (family_required) f->required();
        std::set<std::string> names;
        for (const auto& d : catalog())
            for (const auto& p : d.params) names.insert(p.name);
        for (const auto& name : names) sub->add_option("--" + name, named[name], "parameter " + name);
        sub->add_option("--param,--params", pairs, "parameter bindings name=value, comma separated")->delimiter(',');
        sub->add_option("--q", q, "q as an exact rational");
        sub->add_option("--sqrtq", sqrtq, "sqrt(q) as an exact rational");
    }

    bool has_point() const {
        if (!q.empty() || !sqrtq.empty() || !pairs.empty()) return true;
        for (const auto& [k, v] : named)
            if (!v.empty()) return true;
        return false;
    }

    FamilySpec resolve(const FamilyDef& d) const {
        Params p;
        for (const auto& [k, v] : named)
            if (!v.empty()) p[k] = parse_rational(v);
        for (const auto& s : pairs) {
            const auto eq = s.find('=');
            if (eq == std::string::npos) throw ParseError("parameter binding '" + s + "' is not name=value");
            p[s.substr(0, eq)] = parse_rational(s.substr(eq + 1));
        }
        for (const auto& [k, v] : p) {
            bool known = false;
            for (const auto& pi : d.params) known = known || pi.name == k;
            if (!known) throw ParameterOutOfRange(d.name + " has no parameter " + k + " (" + d.anchor + ")");
        }
        for (const auto& pi : d.params)
            if (!p.count(pi.name)) throw ParameterOutOfRange(d.name + " needs --" + pi.name + " (" + d.anchor + ")");
        if (!q.empty() && !sqrtq.empty()) throw ParseError("give --q or --sqrtq, not both");
        if (q.empty() && sqrtq.empty()) throw ParseError(d.name + " needs --q or --sqrtq");
        Rational prim;
        if (d.sqrtq_primitive) {
            if (!sqrtq.empty()) prim = parse_rational(sqrtq);
            else if (auto r = exact_sqrt(parse_rational(q))) prim = *r;
            else throw ParameterOutOfRange(d.name + " is parameterized by sqrt(q); q = " + q + " has no rational square root");
        } else {
            prim = q.empty() ? Rational(parse_rational(sqrtq) * parse_rational(sqrtq)) : parse_rational(q);
        }
        return instantiate(d.name, p, prim);
    }
};

inline void emit(std::ostream& out, const std::string& format, const Table& t, nlohmann::ordered_json head) {
    if (format == "csv") {
        out << emit_csv(t);
    } else if (format == "json") {
        head.update(table_json(t));
        out << head.dump(2) << "\n";
    } else {
        out << emit_text(t);
    }
}

inline nlohmann::ordered_json instance_head(const FamilySpec& s) {
    nlohmann::ordered_json p = nlohmann::ordered_json::object();
    for (const auto& [k, v] : s.params) p[k] = to_string(v);
    return {{"family", s.name}, {"params", p}, {"q", to_string(s.q)}};
}

} // namespace detail

/// The program; returns the exit code (0 iff nothing failed, 1 on violations, 2 on usage errors).
inline int run(int argc, const char* const* argv, std::ostream& out, std::ostream& err) {
    CLI::App app{"Exact q-semiclassical orthogonal polynomial families: tables and verification", "qform"};
    app.require_subcommand(1);
    app.set_config("--config", "", "file of key = value lines using the flag names");
    CliOptions o;
    std::size_t n_flag = 0;
    app.add_option("--format", o.format, "text, csv or json")->check(CLI::IsMember({"text", "csv", "json"}));
    app.add_option("--precision", o.precision, "decimal digits for numeric checks")
        ->envname("QFORM_PRECISION");
    std::uint64_t seed = 0;
    auto* seed_opt = app.add_option("--seed", seed, "seed for sampled parameter points");
    app.add_option("--samples", o.samples, "parameter samples per family (0: suite default)");
    app.add_option("--budget-seconds", o.budget_seconds, "per-suite time budget; 0 disables");
    auto* n_opt = app.add_option("-n", n_flag, "order: rows to print, or highest order checked")
                      ->check(CLI::Range(std::size_t(1), kNMax));

    auto* list = app.add_subcommand("list", "list catalog families")->fallthrough();
    detail::FamilyArgs show_args, mom_args, rec_args, pol_args;
    auto* show = app.add_subcommand("show", "constraints, Pearson pair and provenance of a family")->fallthrough();
    show_args.attach(show, true);
    auto* moments = app.add_subcommand("moments", "exact moments (u)_0 .. (u)_{n-1}")->fallthrough();
    mom_args.attach(moments, true);
    auto* recurrence = app.add_subcommand("recurrence", "rows n, beta_n, gamma_{n+1}")->fallthrough();
    rec_args.attach(recurrence, true);
    auto* polys = app.add_subcommand("polynomials", "monic orthogonal polynomials B_0 .. B_{n-1}")->fallthrough();
    pol_args.attach(polys, true);
    auto* verify = app.add_subcommand("verify", "run verification suites")->fallthrough();
    std::string suite, target = "all";
    std::string suite_help = "all";
    for (const auto& s : suite_names()) suite_help += "|" + s;
    verify->add_option("suite", suite, suite_help)->required();
    verify->add_option("target", target, "family identifier or all");

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        std::ostringstream so, se;
        const int code = app.exit(e, so, se);
        out << so.str();
        err << se.str();
        return code == 0 ? 0 : 2;
    }
    // checked here rather than by a validator so QFORM_PRECISION gets the same check
    if (o.precision < 20 || o.precision > 2000) {
        err << "qform: --precision must lie in [20, 2000], got " << o.precision << "\n";
        return 2;
    }
    if (*seed_opt) o.seed = seed;
    if (*n_opt) o.n = n_flag;

    try {
        if (*list) {
            if (o.format == "json") {
                nlohmann::ordered_json j = nlohmann::ordered_json::array();
                for (const auto& d : catalog()) j.push_back(family_json(d));
                out << j.dump(2) << "\n";
                return 0;
            }
            Table t{{"name", "anchor", "symmetric", "params", "primitive", "title"}, {}};
            for (const auto& d : catalog()) {
                std::string ps;
                for (const auto& p : d.params) ps += (ps.empty() ? "" : " ") + p.name;
                t.rows.push_back({d.name, d.anchor, d.symmetric ? "yes" : "no", ps, d.sqrtq_primitive ? "sqrtq" : "q", d.title});
            }
            out << (o.format == "csv" ? emit_csv(t) : emit_text(t));
            return 0;
        }
        if (*show) {
            const FamilyDef& d = family_def(show_args.family);
            std::optional<FamilySpec> s;
            if (show_args.has_point()) s = show_args.resolve(d);
            if (o.format == "json") {
                out << (s ? family_json(d, *s) : family_json(d)).dump(2) << "\n";
            } else if (o.format == "csv") {
                Table t{{"name", "constraint", "provenance"}, {}};
                std::string anchors;
                for (const auto& a : d.provenance) anchors += (anchors.empty() ? "" : "; ") + a;
                for (const auto& c : d.constraint_text) t.rows.push_back({d.name, c, anchors});
                if (d.symmetric) t.rows.push_back({d.name, "class one: " + d.class_one_text, anchors});
                out << emit_csv(t);
            } else {
                out << family_text(d, s ? &*s : nullptr);
            }
            return 0;
        }
        const std::size_t rows = o.n.value_or(10);
        if (*moments) {
            const FamilySpec s = mom_args.resolve(family_def(mom_args.family));
            Table t{{"n", "moment"}, {}};
            for (std::size_t n = 0; n < rows; ++n) t.rows.push_back({std::to_string(n), to_string(s.moments.moment(n))});
            detail::emit(out, o.format, t, detail::instance_head(s));
            return 0;
        }
        if (*recurrence) {
            const FamilySpec s = rec_args.resolve(family_def(rec_args.family));
            Table t{{"n", "beta_n", "gamma_n+1"}, {}};
            for (std::size_t n = 0; n < rows; ++n)
                t.rows.push_back({std::to_string(n), to_string(s.recurrence.beta(n)), to_string(s.recurrence.gamma(n + 1))});
            detail::emit(out, o.format, t, detail::instance_head(s));
            return 0;
        }
        if (*polys) {
            const FamilySpec s = pol_args.resolve(family_def(pol_args.family));
            const auto table = generate_mops(s.recurrence, rows - 1);
            Table t{{"n", "polynomial", "squared_norm"}, {}};
            for (std::size_t n = 0; n < rows; ++n)
                t.rows.push_back({std::to_string(n), to_string(table.polynomials[n]), to_string(table.squared_norms[n])});
            detail::emit(out, o.format, t, detail::instance_head(s));
            return 0;
        }
        // verify
        VerifyOptions vo;
        vo.n = o.n.value_or(0);
        vo.samples = o.samples;
        vo.precision = o.precision;
        vo.seed = o.seed;
        vo.budget_seconds = o.budget_seconds;
        VerifyReport rep;
        if (suite == "all") {
            for (const auto& s : suite_names()) {
                // decomposition only applies to symmetric families
                if (s == "decomposition" && target != "all" && !family_def(target).symmetric) continue;
                if (s == "q1limit" && target != "all") {
                    const auto& q1 = q1_families();
                    if (std::find(q1.begin(), q1.end(), target) == q1.end()) continue;
                }
                if (s == "positivity" && target != "all") continue;
                rep.append(run_suite(s, target, vo));
            }
        } else {
            rep = run_suite(suite, target, vo);
        }
        if (o.format == "json") {
            out << verify_json(rep).dump(2) << "\n";
        } else if (o.format == "csv") {
            out << emit_csv(verify_table(rep));
            for (const auto& r : rep.rows)
                for (const auto& f : r.failures) err << failure_line(f) << "\n";
        } else {
            out << verify_text(rep);
        }
        return rep.ok() ? 0 : 1;
    } catch (const Error& e) {
        err << "qform: " << e.what() << "\n";
        return 2;
    }
}

} // namespace qform
