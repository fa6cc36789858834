#pragma once

// Reporting layer shared by the command-line tool: runs the exact counts, the
// optional brute-force cross-check and the bound evaluators over a range of m,
// then renders the result as text, JSON or CSV. JSON and CSV output is fully
// deterministic (no timing data, fixed key order); the text rendering adds the
// wall time.

#include <chrono>
#include <cstdio>
#include <limits>
#include <optional>
#include <string>
#include <vector>

#include "orbitcount/bounds.hpp"
#include "orbitcount/catalog.hpp"
#include "orbitcount/numeric.hpp"
#include "orbitcount/orbits.hpp"

#include <json.hpp>

namespace orbitcount {

enum class RunMode { Count, Bounds, Certify };

struct RunOptions {
    int m_lo = -1; // -1: from 0
    int m_hi = -1; // -1: up to the degree (subsets) or degree + 2 (multisets)
    ActionKind kind = ActionKind::Subsets;
    bool with_oracle = false;
    bool with_spheres = false;
    std::vector<long long> chain_radii; // ball radii for the filtration bound
    int threads = 1;
    std::size_t carrier_cap = 2'000'000;
    double slack_tolerance = 1e-9; // certify: negative slack beyond this fails
};

struct ReportRow {
    int m = 0;
    BigInt carrier;
    BigInt orbit_count;
    BigRat avg_stabilizer;
    BigRat delta;
    std::optional<BigInt> regular_orbits;          // brute force only
    std::optional<BigRat> regular_orbit_fraction;  // regular / orbits, exact
    std::optional<BigRat> regular_orbit_fraction_lb; // (1-delta)/(1+delta)
    std::optional<BigRat> regular_point_fraction_lb; // 1-delta
    std::optional<bool> oracle_match;
    std::vector<BoundEntry> bounds;
    std::vector<std::string> notes;
};

struct RunReport {
    std::string mode;
    std::string spec;
    std::string action;
    int degree = 0;
    BigInt order;
    std::optional<int> min_degree; // absent for the trivial group
    std::vector<ReportRow> rows;
    std::vector<std::string> violations;
    bool ok = true;
    double wall_seconds = 0.0;
};

namespace detail {

inline double ln_or_neg_inf(const BigRat& x) {
    return x == 0 ? -std::numeric_limits<double>::infinity() : ln_bigrat(x);
}

// Cumulative ball sizes of the support profile at the given radii, each link
// annotated with the minimal support strictly beyond its radius. Radii must be
// strictly increasing; radii whose ball already swallows the whole group are
// dropped, and the full group is appended as the final link.
inline std::vector<ChainLink> chain_from_profile(const FixedDegreePolynomial& profile,
                                                 const BigInt& order,
                                                 const std::vector<long long>& radii) {
    std::vector<ChainLink> chain;
    long long prev = -1;
    for (long long r : radii) {
        if (r < 0 || r <= prev)
            throw std::invalid_argument("chain radii must be strictly increasing and nonnegative");
        prev = r;
        BigInt ball = 0;
        for (int k = 0; k <= profile.degree && k <= r; ++k)
            ball += profile.counts[static_cast<std::size_t>(k)];
        if (ball >= order) break;
        int mu_beyond = 0;
        for (int k = static_cast<int>(r) + 1; k <= profile.degree; ++k)
            if (profile.counts[static_cast<std::size_t>(k)] > 0) {
                mu_beyond = k;
                break;
            }
        chain.push_back({ball, mu_beyond});
    }
    chain.push_back({order, 0});
    return chain;
}

// Worst-case margin of the per-element bound over the cycle-type classes:
// the class minimizing bound(support) - ln(fixed count), fixed count > 0.
inline std::optional<BoundEntry> worst_element_entry(const TypeHistogram& histogram, int m,
                                                     const BoundParams& params) {
    std::optional<BoundEntry> worst;
    for (const auto& [ct, count] : histogram) {
        const BigInt fix = fixed_point_count(ct, m, params.kind);
        if (fix <= 0) continue;
        const double value = element_fix_bound(support_size(ct), params);
        const double slack = value - ln_bigint(fix);
        if (!worst || slack < *worst->slack) worst = BoundEntry{"element_fix", value, slack};
    }
    return worst;
}

inline void append_bounds(ReportRow& row, const CatalogGroup& g, const RunOptions& options,
                          const std::optional<int>& min_degree,
                          const FixedDegreePolynomial& profile) {
    BoundParams params(g.degree, row.m, options.kind);

    const double ln_carrier = ln_bigint(row.carrier);
    const double carrier_lb = carrier_lower_bound(params);
    row.bounds.push_back({"carrier_entropy_lb", carrier_lb, ln_carrier - carrier_lb});

    if (auto worst = worst_element_entry(g.histogram, row.m, params)) row.bounds.push_back(*worst);

    const double ln_fix_total =
        ln_bigint(passive_pair_count(g.histogram, row.m, options.kind));
    const double by_profile = profile_fix_sum_bound(profile, params);
    row.bounds.push_back({"fix_sum_profile", by_profile, by_profile - ln_fix_total});
    const double by_uniform = uniform_fix_sum_bound(g.order, 0, params);
    row.bounds.push_back({"fix_sum_uniform", by_uniform, by_uniform - ln_fix_total});

    if (min_degree) {
        const double ln_delta = ln_or_neg_inf(row.delta);
        const double group_bound = delta_group_bound(g.order, *min_degree, params);
        row.bounds.push_back({"delta_group", group_bound, group_bound - ln_delta});
        if (!options.chain_radii.empty()) {
            const auto chain = chain_from_profile(profile, g.order, options.chain_radii);
            const double chain_bound = delta_chain_bound(g.order, chain, *min_degree, params);
            row.bounds.push_back({"delta_chain", chain_bound, chain_bound - ln_delta});
        }
        if (options.with_spheres) {
            const double sphere_bound = delta_sphere_bound(profile, params);
            row.bounds.push_back({"delta_spheres", sphere_bound, sphere_bound - ln_delta});
        }
        if (g.affine_params) {
            const auto [d, q] = *g.affine_params;
            const double exact_order =
                affine_delta_bound_with_order(d, q, row.m, options.kind, ln_bigint(g.order));
            row.bounds.push_back({"delta_affine", exact_order, exact_order - ln_delta});
        }
    }
}

} // namespace detail

inline RunReport run_report(const CatalogGroup& g, RunMode mode, const RunOptions& options) {
    const auto started = std::chrono::steady_clock::now();

    RunReport report;
    report.mode = mode == RunMode::Count ? "count" : mode == RunMode::Bounds ? "bounds" : "certify";
    report.spec = g.spec;
    report.action = to_string(options.kind);
    report.degree = g.degree;
    report.order = g.order;
    const int min_deg = minimal_degree_from_histogram(g.histogram);
    if (min_deg > 0) report.min_degree = min_deg;

    const bool want_bounds = mode != RunMode::Count;
    const bool want_oracle = options.with_oracle || mode == RunMode::Certify;
    const FixedDegreePolynomial profile = profile_from_histogram(g.histogram, g.degree);

    const int default_hi =
        options.kind == ActionKind::Subsets ? g.degree : g.degree + 2;
    const int m_lo = options.m_lo < 0 ? 0 : options.m_lo;
    const int m_hi = options.m_hi < 0 ? default_hi : options.m_hi;
    if (m_lo > m_hi) throw std::invalid_argument("empty m range");

    for (int m = m_lo; m <= m_hi; ++m) {
        ReportRow row;
        row.m = m;
        row.carrier = carrier_size(g.degree, m, options.kind);
        if (row.carrier == 0) {
            row.notes.push_back("empty carrier");
            report.rows.push_back(std::move(row));
            continue;
        }
        const OrbitSummary summary =
            orbit_count(g.histogram, g.order, g.degree, m, options.kind);
        row.orbit_count = summary.orbit_count;
        row.avg_stabilizer = summary.avg_stabilizer;
        row.delta = summary.delta;
        const RegularFractions fractions = regular_fraction_bounds(row.delta);
        row.regular_orbit_fraction_lb = fractions.orbit_fraction_lb;
        row.regular_point_fraction_lb = fractions.point_fraction_lb;

        if (want_oracle) {
            OracleOptions oracle_options;
            oracle_options.carrier_cap = options.carrier_cap;
            oracle_options.threads = options.threads;
            const OrbitSummary counted = brute_force_orbits(
                g.degree, g.generators, g.order, m, options.kind, oracle_options);
            row.regular_orbits = counted.regular_orbit_count;
            if (counted.orbit_count > 0 && counted.regular_orbit_count)
                row.regular_orbit_fraction =
                    BigRat(*counted.regular_orbit_count, counted.orbit_count);
            row.oracle_match = counted.orbit_count == summary.orbit_count &&
                               counted.avg_stabilizer == summary.avg_stabilizer;
            if (!*row.oracle_match)
                report.violations.push_back("m=" + std::to_string(m) +
                                            ": enumeration disagrees with the Burnside count");
        }

        if (want_bounds) {
            try {
                detail::append_bounds(row, g, options, report.min_degree, profile);
            } catch (const std::domain_error&) {
                row.notes.push_back("out of theorem range");
            }
        }
        report.rows.push_back(std::move(row));
    }

    if (mode == RunMode::Certify) {
        for (const auto& row : report.rows) {
            for (const auto& entry : row.bounds)
                if (entry.slack && *entry.slack < -options.slack_tolerance)
                    report.violations.push_back("m=" + std::to_string(row.m) + ": bound " +
                                                entry.name + " violated");
            if (row.regular_orbit_fraction && row.regular_orbit_fraction_lb &&
                *row.regular_orbit_fraction < *row.regular_orbit_fraction_lb)
                report.violations.push_back("m=" + std::to_string(row.m) +
                                            ": regular orbit fraction below its lower bound");
        }
    }
    report.ok = report.violations.empty();

    report.wall_seconds =
        std::chrono::duration<double>(std::chrono::steady_clock::now() - started).count();
    return report;
}

// --- rendering --------------------------------------------------------------

namespace detail {

inline std::string format_double(double x) {
    if (x == -std::numeric_limits<double>::infinity()) return "-inf";
    if (x == std::numeric_limits<double>::infinity()) return "inf";
    char buf[64];
    std::snprintf(buf, sizeof buf, "%.10g", x);
    return buf;
}

inline std::string rat_string(const BigRat& x) {
    const BigInt num = boost::multiprecision::numerator(x);
    const BigInt den = boost::multiprecision::denominator(x);
    if (den == 1) return num.str();
    return num.str() + "/" + den.str();
}

inline nlohmann::json json_double(double x) {
    if (!std::isfinite(x)) return nullptr;
    return x;
}

} // namespace detail

inline std::string to_json(const RunReport& report) {
    nlohmann::ordered_json j;
    j["tool"] = "orbitcount";
    j["mode"] = report.mode;
    j["group"] = {{"spec", report.spec},
                  {"degree", report.degree},
                  {"order", report.order.str()}};
    if (report.min_degree) j["group"]["min_degree"] = *report.min_degree;
    j["action"] = report.action;
    j["rows"] = nlohmann::ordered_json::array();
    for (const auto& row : report.rows) {
        nlohmann::ordered_json r;
        r["m"] = row.m;
        r["carrier"] = row.carrier.str();
        if (row.carrier > 0) {
            r["orbits"] = row.orbit_count.str();
            r["avg_stabilizer"] = detail::rat_string(row.avg_stabilizer);
            r["delta"] = detail::rat_string(row.delta);
            r["delta_ln"] = detail::json_double(detail::ln_or_neg_inf(row.delta));
            r["regular_orbit_fraction_lb"] = detail::rat_string(*row.regular_orbit_fraction_lb);
            r["regular_point_fraction_lb"] = detail::rat_string(*row.regular_point_fraction_lb);
        }
        if (row.regular_orbits) r["regular_orbits"] = row.regular_orbits->str();
        if (row.regular_orbit_fraction)
            r["regular_orbit_fraction"] = detail::rat_string(*row.regular_orbit_fraction);
        if (row.oracle_match) r["oracle_match"] = *row.oracle_match;
        if (!row.bounds.empty()) {
            r["bounds"] = nlohmann::ordered_json::array();
            for (const auto& entry : row.bounds) {
                nlohmann::ordered_json b;
                b["name"] = entry.name;
                b["ln"] = detail::json_double(entry.ln_value);
                if (entry.slack) b["slack"] = detail::json_double(*entry.slack);
                r["bounds"].push_back(std::move(b));
            }
        }
        if (!row.notes.empty()) r["notes"] = row.notes;
        j["rows"].push_back(std::move(r));
    }
    if (report.mode == "certify") {
        j["violations"] = report.violations;
        j["ok"] = report.ok;
    }
    return j.dump(2) + "\n";
}

inline std::string to_csv(const RunReport& report) {
    std::vector<std::string> bound_names;
    for (const auto& row : report.rows)
        for (const auto& entry : row.bounds)
            if (std::find(bound_names.begin(), bound_names.end(), entry.name) == bound_names.end())
                bound_names.push_back(entry.name);

    std::string out = "m,carrier,orbits,avg_stabilizer,delta,regular_orbits,oracle_match";
    for (const auto& name : bound_names) out += ",ln_" + name;
    out += "\n";
    for (const auto& row : report.rows) {
        out += std::to_string(row.m) + "," + row.carrier.str();
        if (row.carrier > 0)
            out += "," + row.orbit_count.str() + "," + detail::rat_string(row.avg_stabilizer) +
                   "," + detail::rat_string(row.delta);
        else
            out += ",,,";
        out += ",";
        if (row.regular_orbits) out += row.regular_orbits->str();
        out += ",";
        if (row.oracle_match) out += *row.oracle_match ? "yes" : "no";
        for (const auto& name : bound_names) {
            out += ",";
            for (const auto& entry : row.bounds)
                if (entry.name == name) {
                    out += detail::format_double(entry.ln_value);
                    break;
                }
        }
        out += "\n";
    }
    return out;
}

inline std::string to_text(const RunReport& report) {
    std::string out;
    out += report.mode + " " + report.spec + " on " + std::to_string(report.degree) +
           " points, action: " + report.action + ", order " + report.order.str();
    if (report.min_degree) out += ", minimal degree " + std::to_string(*report.min_degree);
    out += "\n";
    for (const auto& row : report.rows) {
        out += "  m=" + std::to_string(row.m) + " carrier=" + row.carrier.str();
        if (row.carrier > 0) {
            out += " orbits=" + row.orbit_count.str() +
                   " avg_stab=" + detail::rat_string(row.avg_stabilizer) +
                   " delta=" + detail::rat_string(row.delta);
        }
        if (row.regular_orbits) out += " regular=" + row.regular_orbits->str();
        if (row.oracle_match) out += std::string(" oracle=") + (*row.oracle_match ? "ok" : "MISMATCH");
        for (const auto& note : row.notes) out += " [" + note + "]";
        out += "\n";
        for (const auto& entry : row.bounds) {
            out += "      " + entry.name + ": ln " + detail::format_double(entry.ln_value);
            if (entry.slack) out += " (slack " + detail::format_double(*entry.slack) + ")";
            out += "\n";
        }
    }
    if (report.mode == "certify") {
        for (const auto& v : report.violations) out += "  VIOLATION: " + v + "\n";
        out += report.ok ? "  certification: ok\n" : "  certification: FAILED\n";
    }
    char buf[64];
    std::snprintf(buf, sizeof buf, "  wall time: %.3fs\n", report.wall_seconds);
    out += buf;
    return out;
}

} // namespace orbitcount
