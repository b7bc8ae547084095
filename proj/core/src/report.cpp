#include "bmec/report.hpp"

#include <algorithm>
#include <atomic>
#include <chrono>
#include <map>
#include <ostream>
#include <sstream>
#include <thread>

#include "json.hpp"

#include "bmec/identities.hpp"
#include "bmec/tuple_enum.hpp"

namespace bmec {

namespace {

using ordered_json = nlohmann::ordered_json;

ordered_json rational_json(const Rational& r) {
    return ordered_json{{"num", numerator(r).str()}, {"den", denominator(r).str()}};
}

std::string exponents_string(std::span<const Exponent> exponents, char sep) {
    std::ostringstream out;
    for (std::size_t i = 0; i < exponents.size(); ++i) {
        if (i)
            out << sep;
        out << exponents[i];
    }
    return out.str();
}

ordered_json orbit_space_json(const OrbitSpace& s) {
    ordered_json j;
    j["support"] = s.support;
    j["period"] = s.period.str();
    j["manifold_dim"] = s.manifold_dim;
    j["equivariant_euler"] = s.equivariant_euler;
    j["multiplicity"] = s.multiplicity.str();
    j["degree_parity"] = s.degree_parity;
    return j;
}

ordered_json verdict_json(const Verdict& v) {
    ordered_json j;
    j["label"] = label_name(v.label);
    ordered_json reasons = ordered_json::array();
    for (const Reason& r : v.reasons) {
        ordered_json rj;
        rj["rule"] = r.rule;
        rj["citation"] = r.citation;
        ordered_json values;
        for (const auto& [name, value] : r.values)
            values[name] = rational_json(value);
        rj["values"] = std::move(values);
        rj["notes"] = r.notes;
        reasons.push_back(std::move(rj));
    }
    j["reasons"] = std::move(reasons);
    return j;
}

const MecRoute* find_route(const Report& report, std::string_view method) {
    for (const MecRoute& r : report.routes)
        if (r.method == method)
            return &r;
    return nullptr;
}

std::string route_csv_value(const Report& report, std::string_view method) {
    const MecRoute* r = find_route(report, method);
    if (!r || !r->value)
        return "";
    return to_fraction_string(*r->value);
}

} // namespace

std::optional<OutputFormat> parse_format(std::string_view name) {
    if (name == "table")
        return OutputFormat::table;
    if (name == "json")
        return OutputFormat::json;
    if (name == "csv")
        return OutputFormat::csv;
    return std::nullopt;
}

Report build_report(std::span<const Exponent> exponents, const ReportOptions& options) {
    const auto start = std::chrono::steady_clock::now();

    Report report;
    report.exponents.assign(exponents.begin(), exponents.end());
    report.profile = validate(exponents);
    report.invariants = compute_invariants(report.profile);

    if (!options.methods.empty()) {
        if (!report.profile.pairwise_coprime)
            throw MathRefusal("closed form proved only for pairwise coprime exponents");
        const bool single = options.methods.size() == 1;
        for (const std::string& method : options.methods) {
            MecRoute route;
            route.method = method;
            if (method == "closed") {
                route.value = mec_closed_form(exponents);
            } else if (method == "oracle") {
                try {
                    route.value = mec_bruteforce(exponents, options.oracle_cap);
                } catch (const BudgetExceeded&) {
                    if (single)
                        throw; // the only requested route: surface the budget error
                    route.skip_reason = "oracle too large";
                }
            } else if (method == "engine") {
                route.value = mec_via_engine(exponents);
            } else {
                throw std::invalid_argument("unknown method: " + method);
            }
            report.routes.push_back(std::move(route));
        }
        bool agree = true;
        const Rational* first = nullptr;
        for (const MecRoute& r : report.routes) {
            if (!r.value)
                continue;
            if (!first)
                first = &*r.value;
            else if (*r.value != *first)
                agree = false;
        }
        report.agreement = (first != nullptr) && agree;
    }

    if (options.with_verdict)
        report.verdict = classify_displaceability(exponents);
    report.include_orbit_spaces = options.with_orbit_spaces;

    if (options.with_timing) {
        const auto elapsed = std::chrono::steady_clock::now() - start;
        report.timing_us =
            std::chrono::duration_cast<std::chrono::microseconds>(elapsed).count();
    }
    return report;
}

std::string report_json(const Report& report) {
    ordered_json j;
    j["input"] = ordered_json{{"exponents", report.exponents}};

    ordered_json profile;
    profile["n"] = report.profile.n;
    profile["dimension"] = report.profile.dimension;
    profile["pairwise_coprime"] = report.profile.pairwise_coprime;
    profile["has_unit_exponent"] = report.profile.has_unit_exponent;
    profile["integral_homology_sphere"] = report.profile.integral_homology_sphere;
    profile["homeomorphic_to_sphere"] = report.profile.homeomorphic_to_sphere;
    j["profile"] = std::move(profile);

    ordered_json inv;
    inv["mu_p"] = rational_json(report.invariants.mu_p);
    if (report.invariants.mu_p_symmetric)
        inv["mu_p_symmetric"] = report.invariants.mu_p_symmetric->str();
    inv["unit_fraction_sum"] = rational_json(report.invariants.unit_fraction_sum);
    if (report.invariants.index_sign)
        inv["index_sign"] = index_sign_name(*report.invariants.index_sign);
    else
        inv["index_sign"] = nullptr;
    if (report.invariants.mec)
        inv["chi_m"] = rational_json(*report.invariants.mec);
    j["invariants"] = std::move(inv);

    if (!report.routes.empty()) {
        ordered_json routes = ordered_json::array();
        for (const MecRoute& r : report.routes) {
            ordered_json rj;
            rj["method"] = r.method;
            if (r.value)
                rj["chi_m"] = rational_json(*r.value);
            else
                rj["skipped"] = r.skip_reason;
            routes.push_back(std::move(rj));
        }
        j["routes"] = std::move(routes);
        j["agreement"] = report.agreement.value_or(false);
    }

    if (report.verdict)
        j["verdict"] = verdict_json(*report.verdict);

    if (report.include_orbit_spaces) {
        ordered_json spaces = ordered_json::array();
        for (const OrbitSpace& s : report.invariants.orbit_spaces)
            spaces.push_back(orbit_space_json(s));
        j["orbit_spaces"] = std::move(spaces);
    }

    if (report.timing_us)
        j["timing_us"] = *report.timing_us;

    return j.dump(2);
}

std::string report_csv_header() {
    return "exponents,n,dimension,pairwise_coprime,has_unit_exponent,"
           "homeomorphic_to_sphere,mu_p,unit_fraction_sum,index_sign,"
           "chi_m_closed,chi_m_oracle,chi_m_engine,agreement,verdict";
}

std::string report_csv_row(const Report& report) {
    std::ostringstream out;
    out << exponents_string(report.exponents, ' ') << ',';
    out << report.profile.n << ',' << report.profile.dimension << ',';
    out << (report.profile.pairwise_coprime ? "true" : "false") << ',';
    out << (report.profile.has_unit_exponent ? "true" : "false") << ',';
    out << (report.profile.homeomorphic_to_sphere ? "true" : "false") << ',';
    out << to_fraction_string(report.invariants.mu_p) << ',';
    out << to_fraction_string(report.invariants.unit_fraction_sum) << ',';
    out << (report.invariants.index_sign ? index_sign_name(*report.invariants.index_sign)
                                         : "undefined")
        << ',';
    if (!report.routes.empty()) {
        out << route_csv_value(report, "closed") << ',';
        out << route_csv_value(report, "oracle") << ',';
        out << route_csv_value(report, "engine") << ',';
        out << (report.agreement.value_or(false) ? "true" : "false") << ',';
    } else {
        out << (report.invariants.mec ? to_fraction_string(*report.invariants.mec) : "")
            << ",,,,";
    }
    out << (report.verdict ? label_name(report.verdict->label) : "");
    return out.str();
}

void print_report_table(std::ostream& out, const Report& report) {
    const auto row = [&out](std::string label, const std::string& value) {
        label.resize(22, ' ');
        out << label << ": " << value << "\n";
    };
    row("exponents", exponents_string(report.exponents, ','));
    row("n / dimension",
        std::to_string(report.profile.n) + " / " + std::to_string(report.profile.dimension));
    row("pairwise coprime", report.profile.pairwise_coprime ? "yes" : "no");
    row("has unit exponent", report.profile.has_unit_exponent ? "yes" : "no");
    row("homology sphere", report.profile.integral_homology_sphere ? "yes" : "no");
    row("homeomorphic S^(2n-1)", report.profile.homeomorphic_to_sphere ? "yes" : "no");
    row("mu_P (lcm form)", to_fraction_string(report.invariants.mu_p));
    if (report.invariants.mu_p_symmetric)
        row("mu_P = 2(e_n-e_n+1)", report.invariants.mu_p_symmetric->str());
    row("sum 1/a_j", to_fraction_string(report.invariants.unit_fraction_sum));
    row("index sign", report.invariants.index_sign
                          ? index_sign_name(*report.invariants.index_sign)
                          : "undefined (mu_P = 0)");
    if (report.routes.empty() && report.invariants.mec)
        row("chi_m (closed form)", to_fraction_string(*report.invariants.mec));
    for (const MecRoute& r : report.routes) {
        row("chi_m (" + r.method + ")",
            r.value ? to_fraction_string(*r.value) : "skipped (" + r.skip_reason + ")");
    }
    if (report.agreement)
        row("route agreement", *report.agreement ? "yes" : "NO");
    if (report.verdict) {
        row("verdict", label_name(report.verdict->label));
        for (const Reason& r : report.verdict->reasons) {
            out << "  [" << r.rule << "]";
            for (const auto& [name, value] : r.values)
                out << " " << name << " = " << to_fraction_string(value);
            for (const std::string& note : r.notes)
                out << " | " << note;
            out << "\n";
        }
    }
    if (report.include_orbit_spaces) {
        row("orbit spaces", std::to_string(report.invariants.orbit_spaces.size()));
        const auto cell = [&out](std::string text, std::size_t width) {
            if (text.size() < width)
                text.resize(width, ' ');
            out << text;
        };
        out << "  ";
        cell("support", 20);
        cell("period", 13);
        cell("dim", 5);
        cell("chi^S1", 8);
        cell("multiplicity", 14);
        out << "parity\n";
        for (const OrbitSpace& s : report.invariants.orbit_spaces) {
            std::ostringstream sup;
            sup << "{";
            for (std::size_t i = 0; i < s.support.size(); ++i) {
                if (i)
                    sup << ",";
                sup << s.support[i];
            }
            sup << "}";
            out << "  ";
            cell(sup.str(), 20);
            cell(s.period.str(), 13);
            cell(std::to_string(s.manifold_dim), 5);
            cell(std::to_string(s.equivariant_euler), 8);
            cell(s.multiplicity.str(), 14);
            out << s.degree_parity << "\n";
        }
    }
    if (report.timing_us)
        row("elapsed", std::to_string(*report.timing_us) + " us");
}

std::string error_json(const std::string& kind, const std::string& message) {
    ordered_json j;
    j["error"] = ordered_json{{"kind", kind}, {"message", message}};
    return j.dump(2);
}

std::vector<PhiGroup> phi_equivalence_groups(std::span<const Exponent> exponents) {
    const std::vector<OrbitSpace> strata = enumerate_orbit_spaces(exponents);

    BigInt principal_period = 1;
    for (Exponent a : exponents)
        principal_period *= a;

    std::map<BigInt, PhiGroup> groups;
    for (const OrbitSpace& s : strata) {
        PhiGroup& g = groups[s.period];
        g.period = s.period;
        g.supports.push_back(s.support);
        g.product_multiplicities.push_back(s.multiplicity);
        g.product_sum += s.multiplicity;
    }

    std::vector<BigInt> periods;
    periods.reserve(groups.size());
    for (const auto& [period, group] : groups)
        periods.push_back(period);

    std::vector<PhiGroup> out;
    out.reserve(groups.size());
    for (auto& [period, group] : groups) {
        group.principal = (period == principal_period);
        if (group.principal) {
            // strict inequality excludes the principal period from the
            // count; the full orbit space appears once by convention
            group.match = (group.product_sum == 1);
        } else {
            std::vector<BigInt> larger;
            for (const BigInt& p : periods)
                if (p > period)
                    larger.push_back(p);
            group.definition_count = phi_count(period, larger, principal_period);
            group.match = (*group.definition_count == group.product_sum);
        }
        out.push_back(std::move(group));
    }
    return out;
}

void print_orbits(std::ostream& out, std::span<const Exponent> exponents,
                  OutputFormat format) {
    // refuses up front (non-coprime period lattices are unsupported)
    const std::vector<OrbitSpace> strata = enumerate_orbit_spaces(exponents);
    if (format == OutputFormat::json) {
        ordered_json j;
        j["input"] = ordered_json{{"exponents", Exponents(exponents.begin(), exponents.end())}};
        ordered_json spaces = ordered_json::array();
        for (const OrbitSpace& s : strata)
            spaces.push_back(orbit_space_json(s));
        j["orbit_spaces"] = std::move(spaces);
        out << j.dump(2) << "\n";
        return;
    }
    if (format == OutputFormat::csv) {
        out << "support,period,manifold_dim,equivariant_euler,multiplicity,degree_parity\n";
        for (const OrbitSpace& s : strata) {
            std::ostringstream sup;
            for (std::size_t i = 0; i < s.support.size(); ++i) {
                if (i)
                    sup << ' ';
                sup << s.support[i];
            }
            out << sup.str() << ',' << s.period.str() << ',' << s.manifold_dim << ','
                << s.equivariant_euler << ',' << s.multiplicity.str() << ','
                << s.degree_parity << "\n";
        }
        return;
    }
    ReportOptions options;
    options.with_orbit_spaces = true;
    print_report_table(out, build_report(exponents, options));
}

void print_phi_groups(std::ostream& out, std::span<const Exponent> exponents,
                      OutputFormat format) {
    const std::vector<PhiGroup> groups = phi_equivalence_groups(exponents);
    if (format == OutputFormat::json) {
        ordered_json j;
        j["input"] = ordered_json{{"exponents", Exponents(exponents.begin(), exponents.end())}};
        ordered_json list = ordered_json::array();
        for (const PhiGroup& g : groups) {
            ordered_json gj;
            gj["period"] = g.period.str();
            gj["supports"] = g.supports;
            ordered_json mults = ordered_json::array();
            for (const BigInt& m : g.product_multiplicities)
                mults.push_back(m.str());
            gj["product_multiplicities"] = std::move(mults);
            gj["product_sum"] = g.product_sum.str();
            if (g.definition_count)
                gj["definition_count"] = g.definition_count->str();
            gj["principal"] = g.principal;
            gj["match"] = g.match;
            list.push_back(std::move(gj));
        }
        j["phi"] = std::move(list);
        out << j.dump(2) << "\n";
        return;
    }
    if (format == OutputFormat::csv) {
        out << "period,supports,product_sum,definition_count,principal,match\n";
        for (const PhiGroup& g : groups) {
            std::ostringstream sup;
            for (std::size_t i = 0; i < g.supports.size(); ++i) {
                if (i)
                    sup << ' ';
                sup << '{';
                for (std::size_t k = 0; k < g.supports[i].size(); ++k) {
                    if (k)
                        sup << ' ';
                    sup << g.supports[i][k];
                }
                sup << '}';
            }
            out << g.period.str() << ',' << sup.str() << ',' << g.product_sum.str() << ','
                << (g.definition_count ? g.definition_count->str() : "") << ','
                << (g.principal ? "true" : "false") << ',' << (g.match ? "true" : "false")
                << "\n";
        }
        return;
    }
    const auto cell = [&out](std::string text, std::size_t width) {
        if (text.size() < width)
            text.resize(width, ' ');
        out << text;
    };
    cell("period", 14);
    cell("supports", 30);
    cell("product", 10);
    cell("definition", 15);
    out << "match\n";
    for (const PhiGroup& g : groups) {
        cell(g.period.str(), 14);
        std::ostringstream sup;
        for (std::size_t i = 0; i < g.supports.size(); ++i) {
            if (i)
                sup << ' ';
            sup << '{';
            for (std::size_t k = 0; k < g.supports[i].size(); ++k) {
                if (k)
                    sup << ',';
                sup << g.supports[i][k];
            }
            sup << '}';
        }
        cell(sup.str(), 30);
        cell(g.product_sum.str(), 10);
        cell(g.definition_count ? g.definition_count->str() : "- (principal)", 15);
        out << (g.match ? "yes" : "NO") << "\n";
    }
}

void print_maslov(std::ostream& out, std::span<const Exponent> exponents,
                  OutputFormat format) {
    validate(exponents); // at least three positive exponents
    const Rational mu = principal_maslov(exponents);
    const Rational sum = unit_fraction_sum(exponents);
    const bool coprime = pairwise_coprime(exponents);
    const BigInt symmetric = principal_maslov_symmetric(exponents);
    const bool zero = (mu == 0);

    if (format == OutputFormat::json) {
        ordered_json j;
        j["input"] = ordered_json{{"exponents", Exponents(exponents.begin(), exponents.end())}};
        j["mu_p"] = rational_json(mu);
        j["mu_p_symmetric"] = symmetric.str();
        j["symmetric_form_valid"] = coprime;
        j["unit_fraction_sum"] = rational_json(sum);
        j["mu_p_zero"] = zero;
        if (zero)
            j["index_sign"] = nullptr;
        else
            j["index_sign"] = index_sign_name(index_sign(exponents));
        out << j.dump(2) << "\n";
        return;
    }
    if (format == OutputFormat::csv) {
        out << "exponents,mu_p,mu_p_symmetric,symmetric_form_valid,unit_fraction_sum,"
               "index_sign\n";
        out << exponents_string(exponents, ' ') << ',' << to_fraction_string(mu) << ','
            << symmetric.str() << ',' << (coprime ? "true" : "false") << ','
            << to_fraction_string(sum) << ','
            << (zero ? "undefined" : index_sign_name(index_sign(exponents))) << "\n";
        return;
    }
    out << "exponents           : " << exponents_string(exponents, ',') << "\n";
    out << "mu_P (lcm form)     : " << to_fraction_string(mu) << "\n";
    out << "mu_P = 2(e_n-e_n+1) : " << symmetric.str()
        << (coprime ? "" : "  (differs: exponents not pairwise coprime)") << "\n";
    out << "sum 1/a_j           : " << to_fraction_string(sum) << "\n";
    out << "index sign          : "
        << (zero ? "undefined (mu_P = 0)" : index_sign_name(index_sign(exponents))) << "\n";
}

namespace {

struct ScanRow {
    std::string text;
    VerdictLabel label = VerdictLabel::indeterminate;
    bool half_hit = false;
};

ScanRow render_scan_row(std::span<const Exponent> exponents, OutputFormat format) {
    ReportOptions options;
    options.with_verdict = true;
    const Report report = build_report(exponents, options);

    ScanRow row;
    row.label = report.verdict->label;
    if (report.invariants.mec) {
        const Rational half = make_rational(1, 2);
        row.half_hit = (*report.invariants.mec == half || *report.invariants.mec == -half);
    }

    std::ostringstream out;
    if (format == OutputFormat::json) {
        out << nlohmann::ordered_json::parse(report_json(report)).dump();
    } else if (format == OutputFormat::csv) {
        out << report_csv_row(report);
    } else {
        std::string tuple = exponents_string(exponents, ',');
        out << tuple;
        for (std::size_t pad = tuple.size(); pad < 22; ++pad)
            out << ' ';
        std::string mu = to_fraction_string(report.invariants.mu_p);
        out << mu;
        for (std::size_t pad = mu.size(); pad < 16; ++pad)
            out << ' ';
        std::string chi =
            report.invariants.mec ? to_fraction_string(*report.invariants.mec) : "-";
        out << chi;
        for (std::size_t pad = chi.size(); pad < 16; ++pad)
            out << ' ';
        out << label_name(report.verdict->label);
    }
    row.text = out.str();
    return row;
}

} // namespace

int run_scan(const ScanOptions& options, std::ostream& out, std::ostream& err) {
    if (options.n < 2)
        throw std::invalid_argument("scan requires n >= 2");
    if (options.max_value < 2)
        throw std::invalid_argument("scan requires max >= 2");
    if (options.min_value < 1 || options.min_value > options.max_value)
        throw std::invalid_argument("scan requires 1 <= min <= max");
    if (options.jobs < 1)
        throw std::invalid_argument("scan requires jobs >= 1");

    std::vector<Exponents> tuples;
    bool truncated = false;
    for_each_coprime_tuple(options.n + 1, options.min_value, options.max_value, 0,
                           [&](std::span<const Exponent> tuple) {
                               if (options.limit > 0 &&
                                   static_cast<std::int64_t>(tuples.size()) >= options.limit) {
                                   truncated = true;
                                   return false;
                               }
                               tuples.emplace_back(tuple.begin(), tuple.end());
                               return true;
                           });

    if (options.all_orderings) {
        std::vector<Exponents> expanded;
        for (const Exponents& base : tuples) {
            Exponents perm = base;
            do {
                expanded.push_back(perm);
            } while (std::next_permutation(perm.begin(), perm.end()));
        }
        tuples = std::move(expanded);
    }

    std::vector<ScanRow> rows(tuples.size());
    const std::size_t want = std::max<std::size_t>(tuples.size(), 1);
    const int workers = static_cast<int>(
        std::min<std::size_t>(static_cast<std::size_t>(options.jobs), want));
    if (workers <= 1) {
        for (std::size_t i = 0; i < tuples.size(); ++i)
            rows[i] = render_scan_row(tuples[i], options.format);
    } else {
        std::atomic<std::size_t> next{0};
        std::vector<std::thread> pool;
        pool.reserve(static_cast<std::size_t>(workers));
        for (int w = 0; w < workers; ++w) {
            pool.emplace_back([&] {
                for (std::size_t i = next++; i < tuples.size(); i = next++)
                    rows[i] = render_scan_row(tuples[i], options.format);
            });
        }
        for (std::thread& t : pool)
            t.join();
    }

    if (options.format == OutputFormat::csv)
        out << report_csv_header() << "\n";
    else if (options.format == OutputFormat::table && !rows.empty())
        out << "exponents             mu_p            chi_m           verdict\n";
    for (const ScanRow& row : rows)
        out << row.text << "\n";

    std::map<VerdictLabel, std::size_t> label_counts;
    std::size_t half_hits = 0;
    for (const ScanRow& row : rows) {
        ++label_counts[row.label];
        half_hits += row.half_hit ? 1 : 0;
    }
    std::ostringstream summary;
    summary << "summary: tuples=" << rows.size();
    for (const auto& [label, count] : label_counts)
        summary << " " << label_name(label) << "=" << count;
    summary << " chi_m_half=" << half_hits;

    if (options.format == OutputFormat::json) {
        ordered_json j;
        j["summary"] = ordered_json{{"tuples", rows.size()}, {"chi_m_half", half_hits}};
        for (const auto& [label, count] : label_counts)
            j["summary"][label_name(label)] = count;
        out << j.dump() << "\n";
    } else if (options.format == OutputFormat::table) {
        out << summary.str() << "\n";
    } else {
        err << summary.str() << "\n"; // keep csv stdout machine-clean
    }

    if (truncated) {
        err << "warning: tuple budget (" << options.limit << ") exceeded, output truncated\n";
        return kExitBudget;
    }
    return kExitOk;
}

int run_identities(long long f_max, Exponent tuple_max, int n, OutputFormat format,
                   std::ostream& out) {
    return emit_identity_reports(run_identity_sweeps(f_max, tuple_max, n), format, out);
}

int emit_identity_reports(const std::vector<IdentityReport>& reports, OutputFormat format,
                          std::ostream& out) {
    bool all_passed = true;
    for (const IdentityReport& r : reports)
        all_passed = all_passed && r.passed;

    if (format == OutputFormat::json) {
        ordered_json j = ordered_json::array();
        for (const IdentityReport& r : reports) {
            ordered_json rj;
            rj["name"] = r.name;
            rj["range"] = r.range;
            rj["passed"] = r.passed;
            if (!r.passed)
                rj["counterexample"] = r.counterexample;
            j.push_back(std::move(rj));
        }
        out << j.dump(2) << "\n";
    } else if (format == OutputFormat::csv) {
        out << "name,range,passed,counterexample\n";
        for (const IdentityReport& r : reports)
            out << r.name << ",\"" << r.range << "\"," << (r.passed ? "true" : "false")
                << ",\"" << r.counterexample << "\"\n";
    } else {
        for (const IdentityReport& r : reports) {
            out << (r.passed ? "PASS" : "FAIL") << "  " << r.name << "  [" << r.range << "]";
            if (!r.passed)
                out << "  counterexample: " << r.counterexample;
            out << "\n";
        }
    }
    return all_passed ? kExitOk : kExitIdentityFailure;
}

} // namespace bmec
