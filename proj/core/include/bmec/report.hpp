#pragma once

#include <iosfwd>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "bmec/brieskorn.hpp"
#include "bmec/identities.hpp"
#include "bmec/obstruction.hpp"

namespace bmec {

// Stable exit-code contract of the command line tool.
inline constexpr int kExitOk = 0;
inline constexpr int kExitUsage = 2;
inline constexpr int kExitRefusal = 3;
inline constexpr int kExitBudget = 4;
inline constexpr int kExitIdentityFailure = 5;

enum class OutputFormat { table, json, csv };
std::optional<OutputFormat> parse_format(std::string_view name);

struct MecRoute {
    std::string method;            // closed | oracle | engine
    std::optional<Rational> value;
    std::string skip_reason;       // nonempty iff the route was skipped
};

// Everything one exponent tuple reports: profile, exact invariants,
// per-route chi_m values, and the classifier verdict. Rationals are
// serialized as exact numerator/denominator pairs, never floats.
struct Report {
    Exponents exponents;
    BrieskornExponents profile;
    BrieskornInvariants invariants;
    std::vector<MecRoute> routes;
    std::optional<bool> agreement; // all computed routes identical
    std::optional<Verdict> verdict;
    bool include_orbit_spaces = false;
    std::optional<std::int64_t> timing_us;
};

struct ReportOptions {
    std::vector<std::string> methods; // any of closed, oracle, engine
    std::int64_t oracle_cap = 10'000'000;
    bool with_verdict = false;
    bool with_orbit_spaces = false;
    bool with_timing = false;
};

Report build_report(std::span<const Exponent> exponents, const ReportOptions& options);

std::string report_json(const Report& report);  // stable key order, 2-space indent
std::string report_csv_header();
std::string report_csv_row(const Report& report);
void print_report_table(std::ostream& out, const Report& report);

// Structured error object for mathematical refusals and budget overruns.
std::string error_json(const std::string& kind, const std::string& message);

// Grouped phi equivalence: strata sharing a period, their product-formula
// multiplicities, and the definition count for that period. The principal
// period is excluded from the counting function by its strict inequality
// and carries the convention total 1 instead.
struct PhiGroup {
    BigInt period;
    std::vector<std::vector<int>> supports;
    std::vector<BigInt> product_multiplicities;
    BigInt product_sum;
    std::optional<BigInt> definition_count; // absent for the principal period
    bool principal = false;
    bool match = false;
};

std::vector<PhiGroup> phi_equivalence_groups(std::span<const Exponent> exponents);

void print_orbits(std::ostream& out, std::span<const Exponent> exponents,
                  OutputFormat format);
void print_phi_groups(std::ostream& out, std::span<const Exponent> exponents,
                      OutputFormat format);
void print_maslov(std::ostream& out, std::span<const Exponent> exponents,
                  OutputFormat format);

struct ScanOptions {
    int n = 3;
    Exponent min_value = 1;
    Exponent max_value = 2;
    std::int64_t limit = 0; // 0 = unlimited; exceeding it truncates, exit 4
    int jobs = 1;
    bool all_orderings = false;
    OutputFormat format = OutputFormat::table;
};

// Enumerates nondecreasing pairwise-coprime tuples, one report per tuple,
// deterministic order and bytes for any worker count. Returns the exit code.
int run_scan(const ScanOptions& options, std::ostream& out, std::ostream& err);

// Identity sweeps behind the `identities` command. Returns the exit code
// (kExitIdentityFailure when a sweep finds a counterexample).
int run_identities(long long f_max, Exponent tuple_max, int n, OutputFormat format,
                   std::ostream& out);
int emit_identity_reports(const std::vector<IdentityReport>& reports, OutputFormat format,
                          std::ostream& out);

} // namespace bmec
