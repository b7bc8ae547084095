#include "doctest.h"

#include <sstream>

#include "json.hpp"

#include "bmec/report.hpp"

using namespace bmec;

TEST_CASE("build_report with all routes") {
    ReportOptions options;
    options.methods = {"closed", "oracle", "engine"};
    options.with_verdict = true;
    options.with_timing = true;
    const Report report = build_report(Exponents{2, 3, 5, 7}, options);

    REQUIRE_EQ(report.routes.size(), 3);
    for (const MecRoute& r : report.routes) {
        REQUIRE(r.value.has_value());
        CHECK_EQ(*r.value, make_rational(85, 74));
    }
    CHECK(report.agreement.value_or(false));
    REQUIRE(report.verdict.has_value());
    CHECK_EQ(report.verdict->label, VerdictLabel::obstructed_mec_mismatch);
    CHECK(report.timing_us.has_value());
}

TEST_CASE("oracle budget inside method=all is a skip, alone it is an error") {
    ReportOptions all;
    all.methods = {"closed", "oracle", "engine"};
    all.oracle_cap = 100;
    const Report report = build_report(Exponents{2, 3, 5, 7}, all);
    REQUIRE_EQ(report.routes.size(), 3);
    CHECK_FALSE(report.routes[1].value.has_value());
    CHECK_EQ(report.routes[1].skip_reason, "oracle too large");
    CHECK(report.agreement.value_or(false)); // over the computed routes

    ReportOptions only;
    only.methods = {"oracle"};
    only.oracle_cap = 100;
    CHECK_THROWS_AS(build_report(Exponents{2, 3, 5, 7}, only), BudgetExceeded);
}

TEST_CASE("non-coprime exponents refuse every chi_m route") {
    ReportOptions options;
    options.methods = {"closed"};
    CHECK_THROWS_WITH_AS(build_report(Exponents{2, 3, 4}, options),
                         "closed form proved only for pairwise coprime exponents",
                         MathRefusal);
    // without routes the report still carries profile and mu_P
    const Report report = build_report(Exponents{2, 3, 4}, ReportOptions{});
    CHECK_FALSE(report.profile.pairwise_coprime);
    CHECK_FALSE(report.invariants.mec.has_value());
}

TEST_CASE("report JSON round-trips byte for byte") {
    ReportOptions options;
    options.methods = {"closed", "oracle", "engine"};
    options.with_verdict = true;
    options.with_orbit_spaces = true;
    options.with_timing = true;
    const Report report = build_report(Exponents{2, 3, 5, 7}, options);
    const std::string once = report_json(report);
    const std::string twice = nlohmann::ordered_json::parse(once).dump(2);
    CHECK_EQ(once, twice);

    const auto parsed = nlohmann::ordered_json::parse(once);
    CHECK_EQ(parsed["invariants"]["chi_m"]["num"], "85");
    CHECK_EQ(parsed["invariants"]["chi_m"]["den"], "74");
    CHECK_EQ(parsed["invariants"]["mu_p_symmetric"], "74");
    CHECK_EQ(parsed["agreement"], true);
    CHECK_EQ(parsed["verdict"]["label"], "obstructed_mec_mismatch");
    CHECK_EQ(parsed["orbit_spaces"].size(), 11);
}

TEST_CASE("CSV row layout") {
    ReportOptions options;
    options.methods = {"closed", "oracle", "engine"};
    options.with_verdict = true;
    const Report report = build_report(Exponents{2, 3, 5, 7}, options);
    const std::string row = report_csv_row(report);
    CHECK_EQ(row,
             "2 3 5 7,3,5,true,false,true,74/1,247/210,positive,"
             "85/74,85/74,85/74,true,obstructed_mec_mismatch");
    const std::string header = report_csv_header();
    CHECK_EQ(std::count(header.begin(), header.end(), ','),
             std::count(row.begin(), row.end(), ','));
}

TEST_CASE("phi equivalence groups for a unit tuple") {
    const auto groups = phi_equivalence_groups(Exponents{1, 1, 2, 3});
    bool saw_period_two = false;
    for (const PhiGroup& g : groups) {
        CHECK(g.match);
        if (g.period == 2) {
            saw_period_two = true;
            CHECK_EQ(g.product_sum, 2);
            REQUIRE(g.definition_count.has_value());
            CHECK_EQ(*g.definition_count, 2);
        }
        if (g.principal)
            CHECK_EQ(g.product_sum, 1);
    }
    CHECK(saw_period_two);
}

TEST_CASE("scan output is deterministic and independent of worker count") {
    ScanOptions options;
    options.n = 3;
    options.max_value = 8;
    options.format = OutputFormat::csv;

    std::ostringstream out1, err1;
    options.jobs = 1;
    CHECK_EQ(run_scan(options, out1, err1), kExitOk);

    std::ostringstream out4, err4;
    options.jobs = 4;
    CHECK_EQ(run_scan(options, out4, err4), kExitOk);

    CHECK_EQ(out1.str(), out4.str());
    CHECK(out1.str().find("2 3 5 7") != std::string::npos);
}

TEST_CASE("scan in dimension 3 abstains but reports chi_m") {
    ScanOptions options;
    options.n = 2;
    options.max_value = 8;
    options.format = OutputFormat::csv;
    std::ostringstream out, err;
    CHECK_EQ(run_scan(options, out, err), kExitOk);
    std::istringstream lines(out.str());
    std::string line;
    std::getline(lines, line); // header
    std::size_t rows = 0;
    while (std::getline(lines, line)) {
        ++rows;
        CHECK(line.find("out_of_theorem_scope") != std::string::npos);
    }
    CHECK(rows > 0);
    CHECK(out.str().find("2 3 5,2,3,true,false,false,2/1,31/30,positive,-9/2") !=
          std::string::npos);
}

TEST_CASE("scan budget truncates with exit 4") {
    ScanOptions options;
    options.n = 3;
    options.max_value = 10;
    options.limit = 3;
    options.format = OutputFormat::table;
    std::ostringstream out, err;
    CHECK_EQ(run_scan(options, out, err), kExitBudget);
    CHECK(err.str().find("truncated") != std::string::npos);
}

TEST_CASE("scan --all-orderings emits permutations") {
    ScanOptions base;
    base.n = 2;
    base.min_value = 2;
    base.max_value = 5;
    base.format = OutputFormat::csv;
    std::ostringstream out, err;
    CHECK_EQ(run_scan(base, out, err), kExitOk);

    ScanOptions all = base;
    all.all_orderings = true;
    std::ostringstream out_all, err_all;
    CHECK_EQ(run_scan(all, out_all, err_all), kExitOk);

    // two base tuples, (2,3,5) and (3,4,5); all orderings yield 3! rows each
    const std::string text = out_all.str();
    CHECK(text.find("5 3 2") != std::string::npos);
    CHECK_EQ(std::count(text.begin(), text.end(), '\n'), 1 + 12);
}

TEST_CASE("identities driver exit codes") {
    std::ostringstream out;
    CHECK_EQ(run_identities(40, 10, 3, OutputFormat::table, out), kExitOk);
    CHECK(out.str().find("PASS") != std::string::npos);

    std::ostringstream csv;
    CHECK_EQ(run_identities(5, 6, 2, OutputFormat::csv, csv), kExitOk);
    CHECK(csv.str().find("alternating-binomial-f,\"1 <= n <= 5") != std::string::npos);

    // a found counterexample maps to the identity-failure exit code
    const std::vector<IdentityReport> failed{
        {"synthetic", "n <= 3", false, "(2,3,6)"}};
    std::ostringstream failed_out;
    CHECK_EQ(emit_identity_reports(failed, OutputFormat::table, failed_out),
             kExitIdentityFailure);
    CHECK(failed_out.str().find("FAIL") != std::string::npos);
    CHECK(failed_out.str().find("(2,3,6)") != std::string::npos);
}

TEST_CASE("format parsing and error objects") {
    CHECK_EQ(parse_format("json"), OutputFormat::json);
    CHECK_EQ(parse_format("table"), OutputFormat::table);
    CHECK_EQ(parse_format("csv"), OutputFormat::csv);
    CHECK_FALSE(parse_format("yaml").has_value());

    const auto err = nlohmann::ordered_json::parse(error_json("refusal", "why"));
    CHECK_EQ(err["error"]["kind"], "refusal");
    CHECK_EQ(err["error"]["message"], "why");
}
