#pragma once

/**
 * @file series.hpp
 * @brief Dirac combs with numeric atoms and their truncated moment sums.
 */

#include "scalar.hpp"

#include <functional>
#include <memory>
#include <optional>
#include <string>
#include <vector>

namespace qform {

/// Stopping rule for infinite series.
struct TruncationPolicy {
    BigFloat epsilon_rel;
    std::size_t k_max = 20000;
    unsigned digits = kDefaultPrecision;

    /// eps = 10^-(P-10) at working precision P.
    static TruncationPolicy for_digits(unsigned digits) {
        TruncationPolicy p;
        p.digits = digits;
        p.epsilon_rel = pow(BigFloat(10), -static_cast<int>(digits) + 10);
        return p;
    }
};

/// One point mass.
struct NumAtom {
    ComplexBF mass;
    ComplexBF support;
};

/**
 * A possibly infinite comb, produced group by group. Atoms of one group are summed
 * before the stopping rule looks at them, so the +-sqrt(tau) pairs of a symmetric
 * lift never leave a spurious odd remainder.
 */
struct DiracComb {
    std::function<std::vector<NumAtom>(std::size_t)> group;
    std::optional<std::size_t> groups;   // finite length, if any
    std::string label;
};

inline DiracComb finite_comb(std::vector<NumAtom> atoms, std::string label = "comb") {
    auto shared = std::make_shared<std::vector<NumAtom>>(std::move(atoms));
    DiracComb c;
    c.groups = shared->size();
    c.group = [shared](std::size_t k) { return std::vector<NumAtom>{(*shared)[k]}; };
    c.label = std::move(label);
    return c;
}

/// Scales every mass by s.
inline DiracComb scale_comb(DiracComb c, const ComplexBF& s) {
    auto inner = c.group;
    c.group = [inner, s](std::size_t k) {
        auto g = inner(k);
        for (auto& a : g) a.mass *= s;
        return g;
    };
    return c;
}

/// Result of a truncated comb summation.
struct CombSum {
    std::vector<ComplexBF> moments;   // n = 0..N
    std::size_t terms = 0;            // groups consumed
};

/**
 * Sums mass * support^n for n = 0..N. Stops once two consecutive groups contribute
 * less than eps_rel times the running partial sum for every n.
 */
inline CombSum comb_moments(const DiracComb& comb, std::size_t N, const TruncationPolicy& policy) {
    CombSum out;
    out.moments.assign(N + 1, ComplexBF());
    std::vector<ComplexBF> term(N + 1);
    int quiet = 0;
    const std::size_t limit = comb.groups ? *comb.groups : policy.k_max;
    std::size_t consumed = 0;
    for (std::size_t k = 0; k < limit; ++k) {
        ++consumed;
        for (auto& t : term) t = ComplexBF();
        for (const auto& atom : comb.group(k)) {
            ComplexBF p = atom.mass;
            for (std::size_t n = 0; n <= N; ++n) {
                term[n] += p;
                p *= atom.support;
            }
        }
        bool small = true;
        for (std::size_t n = 0; n <= N; ++n) {
            out.moments[n] += term[n];
            const BigFloat t = abs(term[n]);
            if (t != 0 && t > policy.epsilon_rel * abs(out.moments[n])) small = false;
        }
        quiet = small ? quiet + 1 : 0;
        if (!comb.groups && quiet >= 2) break;
    }
    out.terms = consumed;
    if (!comb.groups && quiet < 2) throw NonConvergent(consumed, comb.label);
    return out;
}

} // namespace qform
