// Command-line front end: exact orbit statistics (count), analytic bound
// evaluation (bounds) and self-certification against the brute-force
// enumerator (certify) for a catalog group acting on m-subsets or
// m-multisets.
//
// Exit codes: 0 success, 1 usage or argument error, 2 enumeration cap
// exceeded, 3 internal invariant or certification failure.

#include <CLI11.hpp>

#include "orbitcount/report.hpp"

#include <iostream>
#include <string>

namespace {

struct CliOptions {
    std::string spec;
    std::string m_range;
    std::string kind = "subsets";
    std::string format = "text";
    std::string chain;
    bool oracle = false;
    bool spheres = false;
    int threads = 1;
    std::size_t element_cap = orbitcount::kDefaultElementCap;
    std::size_t carrier_cap = 2'000'000;
};

std::pair<int, int> parse_m_range(const std::string& text) {
    if (text.empty()) return {-1, -1};
    const auto dots = text.find("..");
    try {
        if (dots == std::string::npos) {
            const int m = std::stoi(text);
            return {m, m};
        }
        return {std::stoi(text.substr(0, dots)), std::stoi(text.substr(dots + 2))};
    } catch (const std::exception&) {
        throw std::invalid_argument("bad m range '" + text + "', expected M or A..B");
    }
}

std::vector<long long> parse_chain(const std::string& text) {
    std::vector<long long> radii;
    std::size_t pos = 0;
    while (pos < text.size()) {
        const auto comma = text.find(',', pos);
        const std::string piece = text.substr(pos, comma == std::string::npos ? comma : comma - pos);
        try {
            radii.push_back(std::stoll(piece));
        } catch (const std::exception&) {
            throw std::invalid_argument("bad chain radius '" + piece + "'");
        }
        if (comma == std::string::npos) break;
        pos = comma + 1;
    }
    return radii;
}

void add_common_options(CLI::App* sub, CliOptions& opts) {
    sub->add_option("group", opts.spec,
                    "group spec: S:n, S:n^ell, A:n, C:n, D:n, GL:d,q, AGL:d,q, "
                    "gens:<cycles>;...")
        ->required();
    sub->add_option("--m", opts.m_range, "single m or inclusive range A..B (default: full range)");
    sub->add_option("--kind", opts.kind, "carrier kind")
        ->check(CLI::IsMember({"subsets", "multisets"}))
        ->envname("ORBITCOUNT_KIND");
    sub->add_option("--format", opts.format, "output format")
        ->check(CLI::IsMember({"text", "json", "csv"}))
        ->envname("ORBITCOUNT_FORMAT");
    sub->add_option("--threads", opts.threads, "worker threads for the enumerator")
        ->check(CLI::PositiveNumber)
        ->envname("ORBITCOUNT_THREADS");
    sub->add_option("--element-cap", opts.element_cap, "abort group generation beyond this size")
        ->envname("ORBITCOUNT_ELEMENT_CAP");
    sub->add_option("--carrier-cap", opts.carrier_cap, "abort enumeration beyond this carrier size")
        ->envname("ORBITCOUNT_CARRIER_CAP");
}

int run(const CliOptions& opts, orbitcount::RunMode mode) {
    const orbitcount::CatalogGroup group = orbitcount::resolve_group(opts.spec, opts.element_cap);

    orbitcount::RunOptions options;
    std::tie(options.m_lo, options.m_hi) = parse_m_range(opts.m_range);
    options.kind = opts.kind == "subsets" ? orbitcount::ActionKind::Subsets
                                          : orbitcount::ActionKind::Multisets;
    options.with_oracle = opts.oracle;
    options.with_spheres = opts.spheres;
    options.chain_radii = parse_chain(opts.chain);
    options.threads = opts.threads;
    options.carrier_cap = opts.carrier_cap;

    const orbitcount::RunReport report = orbitcount::run_report(group, mode, options);
    if (opts.format == "json")
        std::cout << orbitcount::to_json(report);
    else if (opts.format == "csv")
        std::cout << orbitcount::to_csv(report);
    else
        std::cout << orbitcount::to_text(report);
    return report.ok ? 0 : 3;
}

} // namespace

int main(int argc, char** argv) {
    CLI::App app{"exact orbit statistics and analytic bounds for group actions on subsets "
                 "and multisets"};
    app.require_subcommand(1);

    CliOptions opts;
    CLI::App* count = app.add_subcommand("count", "exact orbit counts and stabilizer averages");
    add_common_options(count, opts);
    count->add_flag("--oracle", opts.oracle, "cross-check against brute-force enumeration");

    CLI::App* bounds = app.add_subcommand("bounds", "analytic bounds next to the exact values");
    add_common_options(bounds, opts);
    bounds->add_option("--chain", opts.chain, "comma-separated ball radii for the chain bound");
    bounds->add_flag("--spheres", opts.spheres, "include the sphere-by-sphere bound");

    CLI::App* certify = app.add_subcommand(
        "certify", "verify counts against enumeration and every bound against its exact value");
    add_common_options(certify, opts);
    certify->add_option("--chain", opts.chain, "comma-separated ball radii for the chain bound");
    certify->add_flag("--spheres", opts.spheres, "include the sphere-by-sphere bound");

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        const int code = app.exit(e);
        return code == 0 ? 0 : 1;
    }

    try {
        const orbitcount::RunMode mode = count->parsed()    ? orbitcount::RunMode::Count
                                         : bounds->parsed() ? orbitcount::RunMode::Bounds
                                                            : orbitcount::RunMode::Certify;
        return run(opts, mode);
    } catch (const orbitcount::cap_exceeded& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 2;
    } catch (const orbitcount::invariant_violation& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 3;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 1;
    }
}
