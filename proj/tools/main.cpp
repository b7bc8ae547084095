// bmec: exact calculator for contact invariants of Brieskorn manifolds.
//
// Subcommands: mec, classify, orbits, phi, maslov, identities, scan.
// Exit codes: 0 success, 2 usage error, 3 mathematical refusal,
// 4 budget exceeded, 5 identity sweep failure.

#include <fstream>
#include <iostream>
#include <sstream>
#include <string>
#include <vector>

#include "CLI11.hpp"

#include "bmec/identities.hpp"
#include "bmec/report.hpp"

namespace {

using namespace bmec;

Exponents parse_exponents(const std::string& text) {
    if (text.empty() || text.back() == ',')
        throw std::invalid_argument("expected comma-separated exponents");
    Exponents out;
    std::stringstream stream(text);
    std::string token;
    while (std::getline(stream, token, ',')) {
        std::size_t used = 0;
        long long value = 0;
        try {
            value = std::stoll(token, &used);
        } catch (const std::exception&) {
            throw std::invalid_argument("not an integer: '" + token + "'");
        }
        if (used != token.size())
            throw std::invalid_argument("not an integer: '" + token + "'");
        if (value < 1)
            throw std::invalid_argument("exponents must be positive: '" + token + "'");
        out.push_back(value);
    }
    if (out.empty())
        throw std::invalid_argument("expected comma-separated exponents");
    return out;
}

std::vector<BigInt> parse_bigint_list(const std::string& text) {
    std::vector<BigInt> out;
    std::stringstream stream(text);
    std::string token;
    while (std::getline(stream, token, ',')) {
        try {
            out.emplace_back(token);
        } catch (const std::exception&) {
            throw std::invalid_argument("not an integer: '" + token + "'");
        }
    }
    return out;
}

OutputFormat format_from_name(const std::string& name) {
    const auto format = parse_format(name);
    if (!format)
        throw std::invalid_argument("unknown format: " + name);
    return *format;
}

void emit_report(const Report& report, OutputFormat format) {
    if (format == OutputFormat::json) {
        std::cout << report_json(report) << "\n";
    } else if (format == OutputFormat::csv) {
        std::cout << report_csv_header() << "\n" << report_csv_row(report) << "\n";
    } else {
        print_report_table(std::cout, report);
    }
}

std::string read_input_file(const std::string& path) {
    if (path == "-") {
        std::ostringstream buffer;
        buffer << std::cin.rdbuf();
        return buffer.str();
    }
    std::ifstream file(path);
    if (!file)
        throw std::invalid_argument("cannot open " + path);
    std::ostringstream buffer;
    buffer << file.rdbuf();
    return buffer.str();
}

} // namespace

int main(int argc, char** argv) {
    CLI::App app{"exact contact invariants of Brieskorn manifolds"};
    app.require_subcommand(1);
    app.fallthrough(); // lets --format appear after the subcommand

    std::string format_name = "table";
    app.add_option("--format", format_name, "output format: table, json or csv")
        ->envname("BMEC_FORMAT")
        ->check(CLI::IsMember({"table", "json", "csv"}));

    // mec
    auto* mec_cmd = app.add_subcommand(
        "mec", "mean Euler characteristic of equivariant symplectic homology");
    std::string mec_exponents;
    std::string mec_method = "all";
    std::int64_t oracle_cap = 10'000'000;
    std::string mec_from_json;
    mec_cmd->add_option("exponents", mec_exponents, "comma-separated exponents, e.g. 2,3,5,7");
    mec_cmd->add_option("--method", mec_method, "closed, oracle, engine or all")
        ->check(CLI::IsMember({"closed", "oracle", "engine", "all"}));
    mec_cmd->add_option("--oracle-cap", oracle_cap,
                        "largest principal period the brute-force oracle enumerates");
    mec_cmd->add_option("--from-json", mec_from_json,
                        "orbibundle data file ('-' for stdin); see README for the schema");

    // classify
    auto* classify_cmd =
        app.add_subcommand("classify", "displaceability obstruction verdict");
    std::string classify_exponents;
    classify_cmd->add_option("exponents", classify_exponents, "comma-separated exponents")
        ->required();

    // orbits
    auto* orbits_cmd = app.add_subcommand("orbits", "Reeb orbit-space strata");
    std::string orbits_exponents;
    orbits_cmd->add_option("exponents", orbits_exponents, "comma-separated exponents")
        ->required();

    // phi
    auto* phi_cmd =
        app.add_subcommand("phi", "stratum multiplicities: counting function vs product formula");
    std::string phi_exponents;
    std::string phi_ti, phi_tk, phi_larger;
    phi_cmd->add_option("exponents", phi_exponents, "comma-separated exponents");
    phi_cmd->add_option("--ti", phi_ti, "raw mode: stratum period T_i");
    phi_cmd->add_option("--tk", phi_tk, "raw mode: principal period T_k");
    phi_cmd->add_option("--larger", phi_larger, "raw mode: comma-separated larger periods");

    // maslov
    auto* maslov_cmd =
        app.add_subcommand("maslov", "principal Maslov index and index sign");
    std::string maslov_exponents;
    maslov_cmd->add_option("exponents", maslov_exponents, "comma-separated exponents")
        ->required();

    // identities
    auto* identities_cmd =
        app.add_subcommand("identities", "combinatorial identity sweeps");
    long long f_max = 200;
    Exponent tuple_max = 30;
    int identities_n = 3;
    identities_cmd->add_option("--f-max", f_max, "check f(n) = (-1)^(n+1) up to this n")
        ->check(CLI::PositiveNumber);
    identities_cmd->add_option("--tuple-max", tuple_max, "largest exponent in tuple sweeps")
        ->check(CLI::PositiveNumber);
    identities_cmd->add_option("--n", identities_n, "tuple sweeps use length n+1")
        ->check(CLI::Range(2, 16));

    // scan
    auto* scan_cmd = app.add_subcommand(
        "scan", "reports for every nondecreasing pairwise-coprime tuple");
    ScanOptions scan_options;
    scan_cmd->add_option("--n", scan_options.n, "tuple length minus one")->required();
    scan_cmd->add_option("--max", scan_options.max_value, "largest exponent")->required();
    scan_cmd->add_option("--min", scan_options.min_value, "smallest exponent (default 1)");
    scan_cmd->add_option("--limit", scan_options.limit,
                         "tuple budget; exceeding it truncates the scan (exit 4)");
    scan_cmd->add_option("--jobs", scan_options.jobs, "worker threads (default 1)");
    scan_cmd->add_flag("--all-orderings", scan_options.all_orderings,
                       "emit every permutation instead of nondecreasing representatives");

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        const int code = app.exit(e);
        return code == 0 ? kExitOk : kExitUsage;
    }

    try {
        const OutputFormat format = format_from_name(format_name);

        if (mec_cmd->parsed()) {
            if (!mec_from_json.empty()) {
                const MecInput input = parse_mec_input_json(read_input_file(mec_from_json));
                const Rational chi = mec_orbibundle(input);
                if (format == OutputFormat::json)
                    std::cout << "{\n  \"chi_m\": {\"num\": \"" << numerator(chi)
                              << "\", \"den\": \"" << denominator(chi) << "\"}\n}\n";
                else if (format == OutputFormat::csv)
                    std::cout << "chi_m\n" << to_fraction_string(chi) << "\n";
                else
                    std::cout << "chi_m : " << to_fraction_string(chi) << "\n";
                return kExitOk;
            }
            if (mec_exponents.empty())
                throw std::invalid_argument("mec needs exponents or --from-json");
            ReportOptions options;
            options.oracle_cap = oracle_cap;
            options.with_timing = true;
            if (mec_method == "all")
                options.methods = {"closed", "oracle", "engine"};
            else
                options.methods = {mec_method};
            emit_report(build_report(parse_exponents(mec_exponents), options), format);
            return kExitOk;
        }

        if (classify_cmd->parsed()) {
            ReportOptions options;
            options.with_verdict = true;
            options.with_timing = true;
            emit_report(build_report(parse_exponents(classify_exponents), options), format);
            return kExitOk;
        }

        if (orbits_cmd->parsed()) {
            print_orbits(std::cout, parse_exponents(orbits_exponents), format);
            return kExitOk;
        }

        if (phi_cmd->parsed()) {
            if (!phi_ti.empty() || !phi_tk.empty()) {
                if (phi_ti.empty() || phi_tk.empty())
                    throw std::invalid_argument("raw mode needs both --ti and --tk");
                const BigInt t_i(phi_ti);
                const BigInt t_k(phi_tk);
                const std::vector<BigInt> larger = parse_bigint_list(phi_larger);
                std::cout << phi_count(t_i, larger, t_k).str() << "\n";
                return kExitOk;
            }
            if (phi_exponents.empty())
                throw std::invalid_argument("phi needs exponents or --ti/--tk");
            print_phi_groups(std::cout, parse_exponents(phi_exponents), format);
            return kExitOk;
        }

        if (maslov_cmd->parsed()) {
            print_maslov(std::cout, parse_exponents(maslov_exponents), format);
            return kExitOk;
        }

        if (identities_cmd->parsed())
            return run_identities(f_max, tuple_max, identities_n, format, std::cout);

        if (scan_cmd->parsed()) {
            scan_options.format = format;
            return run_scan(scan_options, std::cout, std::cerr);
        }
    } catch (const BudgetExceeded& e) {
        std::cout << error_json("budget", e.what()) << "\n";
        return kExitBudget;
    } catch (const MathRefusal& e) {
        std::cout << error_json("refusal", e.what()) << "\n";
        return kExitRefusal;
    } catch (const std::invalid_argument& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kExitUsage;
    }
    return kExitOk;
}
