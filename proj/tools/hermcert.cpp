// hermcert: certifies locally compact groups as non-Hermitian from growth
// data. Subcommands: growth, capacity, certify-discrete, certify-tree,
// certify-padic, scan-padic, check-properties.
//
// Exit status: 0 success, 1 error, 2 when --strict is set and the verdict is
// not CERTIFIED. Reports are byte-deterministic for a fixed command line.

#include <CLI11.hpp>

#include <algorithm>
#include <iostream>
#include <optional>
#include <sstream>
#include <string>

#include "hermcert/algebra.hpp"
#include "hermcert/ball.hpp"
#include "hermcert/capacity.hpp"
#include "hermcert/criteria.hpp"
#include "hermcert/groupspec.hpp"
#include "hermcert/growth.hpp"
#include "hermcert/padic.hpp"
#include "hermcert/properties.hpp"
#include "hermcert/report.hpp"
#include "hermcert/tree.hpp"

namespace hc = hermcert;

namespace {

struct CommonOptions {
    std::string group;
    std::string gens = "standard";
    int n_max = 12;
    int store_limit = 64;
    int lp_degree = 0;
    int witness_depth = 8;
    long memory_budget_mb = 2048;
    double tolerance = 0.15;
    bool strict = false;
    std::string format = "records";
};

hc::OutputFormat parse_format(const std::string& f) {
    if (f == "table") return hc::OutputFormat::Table;
    return hc::OutputFormat::Records;
}

void add_common(CLI::App* cmd, CommonOptions& o, bool with_group) {
    if (with_group) {
        cmd->add_option("--group", o.group,
                        "group spec: free:R | fpc:m1,m2,... | cayley:FILE | rws:FILE")
            ->required();
        cmd->add_option("--gens", o.gens,
                        "comma-separated generator words over a..z with ' for inverse, or "
                        "'standard'");
        cmd->add_option("--n-max", o.n_max, "enumeration depth (1..64)")->check(CLI::Range(1, 64));
        cmd->add_option("--store-limit", o.store_limit, "retention radius for element sets")
            ->check(CLI::Range(0, 64));
        cmd->add_option("--memory-budget", o.memory_budget_mb, "enumeration budget in MiB")
            ->check(CLI::Range(1L, 1L << 20));
        cmd->add_option("--witness-depth", o.witness_depth,
                        "depth for witness power masses (capacity lower data)")
            ->check(CLI::Range(1, 64));
        cmd->add_option("--lp-degree", o.lp_degree,
                        "max degree for the l1 polynomial minimization (0 = skip, <= 24)")
            ->check(CLI::Range(0, 24));
        cmd->add_option("--tolerance", o.tolerance, "advisory tolerance for agreement reports");
    }
    cmd->add_flag("--strict", o.strict, "exit 2 on any verdict other than CERTIFIED");
    cmd->add_option("--format", o.format, "output format: records | table")
        ->check(CLI::IsMember({"records", "table"}));
}

// Collected report lines: records plus comments, rendered either raw or as an
// aligned table.
struct Report {
    std::vector<std::pair<bool, hc::Record>> lines;  // bool flags per-radius rows

    void comment(const std::string& text) { comments.push_back(text); }
    void add(const hc::Record& r) { lines.push_back({false, r}); }
    void add_row(const hc::Record& r) { lines.push_back({true, r}); }

    void emit(std::ostream& os, hc::OutputFormat format) const {
        for (const auto& c : comments) hc::write_comment(os, c);
        if (format == hc::OutputFormat::Records) {
            for (const auto& [is_row, rec] : lines) hc::write_record(os, rec);
            return;
        }
        std::vector<std::string> header;
        std::vector<std::vector<std::string>> rows;
        for (const auto& [is_row, rec] : lines) {
            if (!is_row) continue;
            if (header.empty())
                for (const auto& [k, v] : rec) header.push_back(k);
            std::vector<std::string> row;
            for (const auto& [k, v] : rec) row.push_back(v);
            rows.push_back(std::move(row));
        }
        if (!header.empty()) hc::write_table(os, header, rows);
        for (const auto& [is_row, rec] : lines) {
            if (is_row) continue;
            for (const auto& [k, v] : rec) os << k << ": " << v << "\n";
        }
    }

    std::vector<std::string> comments;
};

std::string yes_no(bool b) { return b ? "yes" : "no"; }

std::string interval_lo(const hc::RationalInterval& v) { return hc::fraction_str(v.lo); }
std::string interval_hi(const hc::RationalInterval& v) { return hc::fraction_str(v.hi); }

hc::BallTable enumerate_for(const hc::GeneratingSet& set, const CommonOptions& o) {
    hc::BallOptions bo;
    bo.n_max = o.n_max;
    bo.store_limit = o.store_limit;
    bo.memory_budget_bytes = static_cast<std::size_t>(o.memory_budget_mb) << 20;
    return hc::enumerate_balls(set, bo);
}

void append_radius_rows(Report& rep, const hc::BallTable& table, const hc::GrowthEstimate& est,
                        const hc::CapacityBounds* caps) {
    for (int n = 1; n <= table.completed_radius(); ++n) {
        auto i = static_cast<std::size_t>(n);
        hc::Record row{
            {"n", std::to_string(n)},
            {"ball", std::to_string(table.ball_sizes()[i])},
            {"sphere", std::to_string(table.sphere_sizes()[i])},
            {"ball_root", hc::double_str(est.per_n_ball_roots[i])},
            {"sphere_root", hc::double_str(est.per_n_sphere_roots[i])},
            {"sphere_ratio", hc::double_str(est.per_n_sphere_ratios[i])},
        };
        if (caps) {
            auto it = std::find(caps->degrees.begin(), caps->degrees.end(), n);
            if (it != caps->degrees.end()) {
                auto d = static_cast<std::size_t>(it - caps->degrees.begin());
                row.push_back({"mass", hc::fraction_str(caps->lower_sphere_masses[d])});
                row.push_back({"mass_root_lo", interval_lo(caps->lower_sphere_roots[d])});
                row.push_back({"mass_root_hi", interval_hi(caps->lower_sphere_roots[d])});
            }
            auto ut = std::find(caps->upper_degrees.begin(), caps->upper_degrees.end(), n);
            if (ut != caps->upper_degrees.end()) {
                auto d = static_cast<std::size_t>(ut - caps->upper_degrees.begin());
                row.push_back({"lp_opt", hc::fraction_str(caps->upper_lp_values[d])});
                row.push_back({"lp_root_lo", interval_lo(caps->upper_lp_roots[d])});
                row.push_back({"lp_root_hi", interval_hi(caps->upper_lp_roots[d])});
            }
        }
        rep.add_row(row);
    }
}

struct GroupRun {
    hc::ParsedGroup group;
    hc::GeneratingSet set;
    hc::BallTable table;
    hc::GrowthEstimate estimate;
    std::optional<hc::GrowthEstimate> exact;
};

GroupRun run_group_pipeline(const CommonOptions& o) {
    GroupRun r;
    r.group = hc::parse_group_spec(o.group);
    r.set = hc::parse_generating_set(r.group, o.gens);
    r.table = enumerate_for(r.set, o);
    r.estimate = hc::growth_estimate(r.table);
    r.exact = hc::exact_growth(r.set);
    if (r.exact) hc::merge_exact(r.estimate, *r.exact);
    return r;
}

void append_group_header(Report& rep, const GroupRun& r, const std::string& command,
                         const CommonOptions& o) {
    rep.add({{"format", "hermcert." + command + ".v1"}});
    rep.add({{"command", command},
             {"group", r.group.spec},
             {"gens", o.gens},
             {"set_size", std::to_string(r.set.size())},
             {"symmetric", yes_no(r.set.symmetric)},
             {"contains_identity", yes_no(r.set.contains_identity)}});
    if (r.set.contains_identity)
        rep.comment("warning: generating set contains the identity; spheres are nested trivially "
                    "and growth statements assume e not in S");
    if (r.table.truncated())
        rep.comment("warning: memory budget reached; data complete only to radius " +
                    std::to_string(r.table.completed_radius()));
}

void append_growth_summary(Report& rep, const GroupRun& r, double tolerance) {
    hc::Record sum{
        {"fekete_upper", hc::double_str(r.estimate.fekete_upper)},
        {"last_sphere_ratio", hc::double_str(r.estimate.last_sphere_ratio)},
        {"omega_provenance", hc::provenance_name(r.estimate.provenance)},
    };
    if (r.estimate.exact_value) {
        sum.push_back({"omega_lo", interval_lo(*r.estimate.exact_value)});
        sum.push_back({"omega_hi", interval_hi(*r.estimate.exact_value)});
        sum.push_back({"omega_width", hc::fraction_str(r.estimate.exact_value->width())});
    }
    rep.add(sum);

    hc::SubmultiplicativityReport sub = hc::check_submultiplicative(r.table);
    rep.add({{"submultiplicative", sub.ok ? "ok" : "VIOLATED"},
             {"submult_pairs", std::to_string(sub.pairs_checked)}});
    if (!sub.ok) rep.comment("internal consistency error: " + sub.violation);

    hc::AgreementReport agr = hc::omega_sigma_agreement(r.table, tolerance);
    rep.add({{"agreement_ball_root", hc::double_str(agr.ball_root)},
             {"agreement_sphere_root", hc::double_str(agr.sphere_root)},
             {"agreement_diff", hc::double_str(agr.difference)},
             {"agreement_tol", hc::double_str(agr.tolerance)},
             {"agreement_within", yes_no(agr.within)}});

    if (r.set.size() >= 3 && r.estimate.exact_value) {
        hc::ThetaReport theta = hc::theta_index(*r.estimate.exact_value, r.set.size());
        hc::Record trec{{"theta_lo", interval_lo(theta.value)},
                        {"theta_hi", interval_hi(theta.value)}};
        if (theta.outside_unit_interval) trec.push_back({"theta_outside_unit", "yes"});
        rep.add(trec);
    }
    for (const auto& note : r.estimate.notes) rep.comment(note);
}

int emit_and_exit(const Report& rep, const CommonOptions& o, bool certified) {
    rep.emit(std::cout, parse_format(o.format));
    if (o.strict && !certified) return 2;
    return 0;
}

// ---------------------------------------------------------------------------

int cmd_growth(const CommonOptions& o) {
    GroupRun r = run_group_pipeline(o);
    Report rep;
    append_group_header(rep, r, "growth", o);
    append_radius_rows(rep, r.table, r.estimate, nullptr);
    append_growth_summary(rep, r, o.tolerance);
    return emit_and_exit(rep, o, true);
}

// Witness masses plus optional LP uppers and the spectral radius bound.
hc::CapacityBounds capacity_pipeline(const GroupRun& r, const hc::AlgebraElement& f,
                                     const CommonOptions& o) {
    int depth = std::min(o.witness_depth, r.table.completed_radius());
    hc::CapacityBounds caps = hc::sphere_mass_lower(f, r.table, depth);
    for (int n = 1; n <= o.lp_degree; ++n) {
        hc::LpUpperResult up = hc::capacity_upper_lp(f, n);
        caps.upper_degrees.push_back(n);
        caps.upper_lp_values.push_back(up.optimum);
        caps.upper_lp_roots.push_back(up.root);
    }
    caps.spectral_upper = hc::spectral_radius_upper(f, std::min(depth, 6));
    return caps;
}

int cmd_capacity(const CommonOptions& o) {
    GroupRun r = run_group_pipeline(o);
    Report rep;
    append_group_header(rep, r, "capacity", o);

    hc::AlgebraElement f = hc::witness_element(r.set);
    hc::CapacityBounds caps = capacity_pipeline(r, f, o);
    if (r.exact && r.exact->exact_value)
        hc::attach_growth_lower(caps, *r.exact->exact_value, r.exact->provenance, r.set.size());

    append_radius_rows(rep, r.table, r.estimate, &caps);
    append_growth_summary(rep, r, o.tolerance);
    hc::Record sum{{"witness_coefficient", hc::fraction_str(hc::Rational(1, r.set.size()))},
                   {"witness_l1", hc::fraction_str(f.l1_norm())},
                   {"spectral_upper_lo", interval_lo(*caps.spectral_upper)},
                   {"spectral_upper_hi", interval_hi(*caps.spectral_upper)}};
    if (caps.lower_limit) {
        sum.push_back({"capacity_lower_lo", interval_lo(caps.lower_limit->value)});
        sum.push_back({"capacity_lower_hi", interval_hi(caps.lower_limit->value)});
        sum.push_back(
            {"capacity_lower_provenance", hc::provenance_name(caps.lower_limit->provenance)});
    }
    rep.add(sum);
    return emit_and_exit(rep, o, true);
}

void append_verdict(Report& rep, const hc::CriterionVerdict& v, const std::string& prefix) {
    rep.add({{prefix + "criterion", v.criterion.substr(0, v.criterion.find(' '))},
             {prefix + "margin", hc::fraction_str(v.margin)},
             {prefix + "provenance", hc::provenance_name(v.provenance)},
             {prefix + "verdict", hc::verdict_name(v.verdict)}});
    for (const auto& n : v.notes) rep.comment(n);
}

int cmd_certify_discrete(const CommonOptions& o, bool burnside, const std::string& adian_rate,
                         const std::string& assert_omega) {
    Report rep;
    if (burnside) {
        hc::CriterionVerdict v = hc::burnside_check(hc::parse_fraction(adian_rate));
        rep.add({{"format", "hermcert.certificate.v1"}});
        rep.add({{"command", "certify-discrete"},
                 {"group", "burnside:2"},
                 {"set_size", "4"},
                 {"asserted_rate", adian_rate},
                 {"threshold", "2"}});
        rep.comment("free Burnside groups on two generators, odd exponent >= 665; the spherical "
                    "growth rate is an asserted published constant and no enumeration is run");
        append_verdict(rep, v, "");
        rep.add({{"verdict", hc::verdict_name(v.verdict)}});
        return emit_and_exit(rep, o, v.verdict == hc::Verdict::Certified);
    }

    GroupRun r = run_group_pipeline(o);
    append_group_header(rep, r, "certify-discrete", o);

    hc::AlgebraElement f = hc::witness_element(r.set);
    hc::CapacityBounds caps = capacity_pipeline(r, f, o);

    std::optional<hc::RationalInterval> omega;
    hc::GrowthProvenance prov = hc::GrowthProvenance::Empirical;
    if (!assert_omega.empty()) {
        omega = hc::RationalInterval::point(hc::parse_fraction(assert_omega));
        prov = hc::GrowthProvenance::UserAsserted;
    } else if (r.exact && r.exact->exact_value) {
        omega = r.exact->exact_value;
        prov = r.exact->provenance;
    }

    append_radius_rows(rep, r.table, r.estimate, &caps);
    append_growth_summary(rep, r, o.tolerance);
    rep.add({{"witness_coefficient", hc::fraction_str(hc::Rational(1, r.set.size()))},
             {"witness_l1", hc::fraction_str(f.l1_norm())},
             {"witness_selfadjoint", yes_no(hc::involution(f) == f)},
             {"spectral_upper_lo", interval_lo(*caps.spectral_upper)},
             {"spectral_upper_hi", interval_hi(*caps.spectral_upper)}});

    bool certified = false;
    if (!omega) {
        rep.comment("no rigorous growth value available for this backend; supply one with "
                    "--assert-omega to enable certification");
        rep.add({{"threshold", hc::fraction_str(hc::Rational(r.set.size(), 2))},
                 {"verdict", "INCONCLUSIVE"},
                 {"reason", "no-rigorous-growth-value"}});
    } else {
        hc::attach_growth_lower(caps, *omega, prov, r.set.size());
        hc::CriterionVerdict crit = hc::discrete_criterion(r.set.size(), *omega, prov);
        hc::CertificateResult frw = hc::frw_certificate(caps, *caps.spectral_upper);

        rep.add({{"omega_lower_lo", interval_lo(*omega)},
                 {"omega_lower_hi", interval_hi(*omega)},
                 {"threshold", hc::fraction_str(hc::Rational(r.set.size(), 2))}});
        append_verdict(rep, crit, "");
        rep.add({{"capacity_lower_lo", interval_lo(frw.capacity_lower)},
                 {"capacity_lower_hi", interval_hi(frw.capacity_lower)},
                 {"frw_margin", hc::fraction_str(frw.margin)},
                 {"frw_boundary_equality", yes_no(frw.boundary_equality)},
                 {"frw_verdict",
                  frw.verdict == hc::FrwVerdict::NotHermitian ? "NOT_HERMITIAN" : "INCONCLUSIVE"}});
        rep.comment("rule: " + frw.rule + "; a capacity lower bound exceeding half the spectral "
                                          "radius upper bound certifies non-real spectrum");
        rep.add({{"verdict", hc::verdict_name(crit.verdict)}});
        certified = crit.verdict == hc::Verdict::Certified;
    }
    return emit_and_exit(rep, o, certified);
}

int cmd_certify_tree(const CommonOptions& o, const std::string& tree_text) {
    hc::TreeSpec tree = hc::parse_tree_spec(tree_text);
    hc::TreeCriterionResult res = hc::tree_criterion(tree);
    Report rep;
    rep.add({{"format", "hermcert.certificate.v1"}});
    std::string degrees;
    for (std::size_t i = 0; i < tree.degrees.size(); ++i) {
        if (i) degrees += ",";
        degrees += std::to_string(tree.degrees[i]);
    }
    rep.add({{"command", "certify-tree"},
             {"degrees", degrees},
             {"k", std::to_string(tree.translation_length)}});
    rep.add({{"mu_KgK", res.mu_KgK.get_str()},
             {"growth_lower", res.growth_lower.get_str()},
             {"threshold", hc::fraction_str(hc::Rational(res.mu_KgK) / 2)},
             {"two_thirds_holds", yes_no(res.two_thirds_holds)},
             {"two_thirds_equality", yes_no(res.two_thirds_equality)},
             {"base_rotation", std::to_string(res.base_rotation)}});
    append_verdict(rep, res.verdict, "");
    rep.add({{"verdict", hc::verdict_name(res.verdict.verdict)}});
    return emit_and_exit(rep, o, res.verdict.verdict == hc::Verdict::Certified);
}

std::vector<long> parse_long_list(const std::string& text, const std::string& flag) {
    std::vector<long> out;
    std::string token;
    std::istringstream is(text);
    while (std::getline(is, token, ',')) {
        try {
            out.push_back(std::stol(token));
        } catch (const std::exception&) {
            throw CLI::ValidationError(flag, "'" + token + "' is not an integer");
        }
    }
    if (out.empty()) throw CLI::ValidationError(flag, "empty list");
    return out;
}

int cmd_certify_padic(const CommonOptions& o, int n, long p, const std::string& lambda_text,
                      bool sl) {
    Report rep;
    rep.add({{"format", "hermcert.certificate.v1"}});
    rep.add({{"command", "certify-padic"}, {"n", std::to_string(n)}, {"p", std::to_string(p)}});

    hc::GlCriterionResult res = hc::gl_criterion(n, p);
    rep.add({{"mu_KgK", res.mu_KgK.get_str()},
             {"omega_lower", res.omega_lower.get_str()},
             {"threshold", hc::fraction_str(hc::Rational(res.mu_KgK) / 2)},
             {"inequality_value", hc::fraction_str(res.inequality_value)},
             {"inequality_sign", res.inequality_value > 0   ? "+"
                                 : res.inequality_value < 0 ? "-"
                                                            : "0"}});
    append_verdict(rep, res.verdict, "");

    if (!lambda_text.empty()) {
        hc::Signature sig;
        sig.lambda = parse_long_list(lambda_text, "--lambda");
        hc::HeckeMeasure m = sl ? hc::sl_measure(n, p, sig) : hc::hecke_measure(n, p, sig);
        rep.add({{"lambda", lambda_text},
                 {"lambda_measure", m.value.get_str()},
                 {"lambda_group", sl ? "special-linear" : "general-linear"}});
        if (!m.note.empty()) rep.comment(m.note);
    }
    rep.add({{"verdict", hc::verdict_name(res.verdict.verdict)}});
    return emit_and_exit(rep, o, res.verdict.verdict == hc::Verdict::Certified);
}

std::pair<long, long> parse_range(const std::string& text, const std::string& flag) {
    auto dots = text.find("..");
    try {
        if (dots == std::string::npos) {
            long v = std::stol(text);
            return {v, v};
        }
        return {std::stol(text.substr(0, dots)), std::stol(text.substr(dots + 2))};
    } catch (const std::exception&) {
        throw CLI::ValidationError(flag, "expected an integer or a range A..B, got '" + text + "'");
    }
}

int cmd_scan_padic(const CommonOptions& o, const std::string& n_text, const std::string& p_text) {
    auto [n_min, n_max] = parse_range(n_text, "--n");
    auto [p_min, p_max] = parse_range(p_text, "--p");
    auto rows = hc::inequality_scan(static_cast<int>(n_min), static_cast<int>(n_max), p_min, p_max);
    Report rep;
    rep.add({{"format", "hermcert.scan.v1"}});
    rep.add({{"command", "scan-padic"}, {"n", n_text}, {"p", p_text}});
    bool all_positive = true;
    for (const auto& row : rows) {
        rep.add_row({{"n", std::to_string(row.n)},
                     {"p", std::to_string(row.p)},
                     {"value", hc::fraction_str(row.value)},
                     {"sign", row.sign > 0 ? "+" : row.sign < 0 ? "-" : "0"},
                     {"certified", yes_no(row.certified)}});
        all_positive = all_positive && row.sign > 0;
    }
    rep.add({{"rows", std::to_string(rows.size())}, {"all_positive", yes_no(all_positive)}});
    return emit_and_exit(rep, o, all_positive);
}

int cmd_check_properties(const CommonOptions& o, bool with_group) {
    Report rep;
    rep.add({{"format", "hermcert.properties.v1"}});
    std::vector<hc::PropertyResult> results;
    if (with_group) {
        GroupRun r = run_group_pipeline(o);
        auto table_results = hc::table_property_suite(r.table);
        results.insert(results.end(), table_results.begin(), table_results.end());
    }
    auto hecke = hc::hecke_property_suite();
    results.insert(results.end(), hecke.begin(), hecke.end());
    auto algebra = hc::algebra_property_suite();
    results.insert(results.end(), algebra.begin(), algebra.end());

    bool all_pass = true;
    for (const auto& res : results) {
        rep.add_row({{"check", res.name}, {"status", res.pass ? "PASS" : "FAIL"}});
        if (!res.pass) rep.comment(res.name + ": " + res.detail);
        all_pass = all_pass && res.pass;
    }
    rep.add({{"checks", std::to_string(results.size())}, {"all_pass", yes_no(all_pass)}});
    rep.emit(std::cout, parse_format(o.format));
    return all_pass ? 0 : 1;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"growth-based non-Hermitian group certification"};
    app.require_subcommand(1);

    CommonOptions growth_opts;
    CLI::App* growth = app.add_subcommand("growth", "enumerate balls and estimate growth rates");
    add_common(growth, growth_opts, true);

    CommonOptions capacity_opts;
    CLI::App* capacity =
        app.add_subcommand("capacity", "two-sided capacity estimates for the witness element");
    add_common(capacity, capacity_opts, true);

    CommonOptions cd_opts;
    bool burnside = false;
    std::string adian_rate = "29/10";
    std::string assert_omega;
    CLI::App* certify_discrete =
        app.add_subcommand("certify-discrete", "discrete growth criterion and capacity certificate");
    add_common(certify_discrete, cd_opts, true);
    certify_discrete->get_option("--group")->required(false);
    certify_discrete->add_flag("--burnside", burnside,
                               "conditional certificate for free Burnside groups B(2, n), odd "
                               "n >= 665, from the published spherical growth bound");
    certify_discrete->add_option("--adian-rate", adian_rate,
                                 "asserted spherical growth rate for --burnside");
    certify_discrete->add_option("--assert-omega", assert_omega,
                                 "assert a growth rate (fraction) with user-asserted provenance");

    CommonOptions tree_opts;
    std::string tree_text;
    CLI::App* certify_tree = app.add_subcommand("certify-tree", "tree automorphism-group criterion");
    add_common(certify_tree, tree_opts, false);
    certify_tree
        ->add_option("--degrees", tree_text,
                     "periodic degree sequence along the axis, e.g. '3,4' or 'degrees=3,4 k=2'")
        ->required();

    CommonOptions padic_opts;
    int padic_n = 2;
    long padic_p = 5;
    std::string lambda_text;
    bool sl = false;
    CLI::App* certify_padic =
        app.add_subcommand("certify-padic", "p-adic general/special linear group criterion");
    add_common(certify_padic, padic_opts, false);
    certify_padic->add_option("--n", padic_n, "matrix rank (>= 2)")
        ->required()
        ->check(CLI::Range(2, 64));
    certify_padic->add_option("--p", padic_p, "prime")->required();
    certify_padic->add_option("--lambda", lambda_text,
                              "optional signature (comma-separated integers) to evaluate");
    certify_padic->add_flag("--sl", sl, "treat --lambda as a special linear element (sum zero)");

    CommonOptions scan_opts;
    std::string scan_n = "2..10";
    std::string scan_p = "5..13";
    CLI::App* scan =
        app.add_subcommand("scan-padic", "exact sign table of the rank/prime criterion");
    add_common(scan, scan_opts, false);
    scan->add_option("--n", scan_n, "rank or range A..B");
    scan->add_option("--p", scan_p, "prime or range A..B");

    CommonOptions prop_opts;
    CLI::App* props =
        app.add_subcommand("check-properties",
                           "run the internal property suites (and table checks with --group)");
    add_common(props, prop_opts, true);
    props->get_option("--group")->required(false);

    try {
        app.parse(argc, argv);
        if (growth->parsed()) return cmd_growth(growth_opts);
        if (capacity->parsed()) return cmd_capacity(capacity_opts);
        if (certify_discrete->parsed()) {
            if (!burnside && cd_opts.group.empty())
                throw CLI::ValidationError("--group", "required unless --burnside is given");
            return cmd_certify_discrete(cd_opts, burnside, adian_rate, assert_omega);
        }
        if (certify_tree->parsed()) return cmd_certify_tree(tree_opts, tree_text);
        if (certify_padic->parsed())
            return cmd_certify_padic(padic_opts, padic_n, padic_p, lambda_text, sl);
        if (scan->parsed()) return cmd_scan_padic(scan_opts, scan_n, scan_p);
        if (props->parsed()) return cmd_check_properties(prop_opts, !prop_opts.group.empty());
    } catch (const CLI::ParseError& e) {
        return app.exit(e);
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 1;
    }
    return 0;
}
