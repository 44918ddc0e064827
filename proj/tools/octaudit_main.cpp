// octaudit: exact-arithmetic auditor for generalized octonion algebras
// O(alpha, beta, gamma) over the rationals and for the Fibonacci / Lucas
// octonion families built on top of them.
//
// Subcommands:
//   audit       run the identity / norm / polynomial / module audit suites
//   norm-table  tabulate closed-form vs direct norms of Fibonacci octonions
//   classify    split-vs-division verdict for an algebra
//   eval        evaluate an octonion expression (products group LEFT)
//   scan        sign scan of Fibonacci-octonion norms over a family range
//
// Exit codes: 0 all checks passed (findings allowed unless --strict-findings),
// 1 at least one failure (or findings under --strict-findings), 2 usage error.

#include <octaudit/octaudit.hpp>

#include <CLI11.hpp>

#include <cstdint>
#include <iostream>
#include <set>
#include <sstream>
#include <string>
#include <vector>

namespace {

using namespace octaudit;

std::vector<Rational> parse_rational_list(const std::string& csv) {
    std::vector<Rational> values;
    std::string item;
    std::istringstream in(csv);
    while (std::getline(in, item, ',')) {
        if (item.empty()) throw std::invalid_argument("empty entry in rational list: " + csv);
        values.push_back(parse_rational(item));
    }
    if (values.empty()) throw std::invalid_argument("empty rational list");
    return values;
}

std::string join_args(int argc, char** argv) {
    std::ostringstream out;
    for (int i = 0; i < argc; ++i) {
        if (i) out << ' ';
        out << argv[i];
    }
    return out.str();
}

struct OutputOptions {
    std::string json_path;
    std::string markdown_path;
    std::string command;
    std::uint64_t seed = 1;
    bool strict_findings = false;
    bool no_timestamp = false;
};

int finish_audit(const std::vector<AuditReport>& reports, const OutputOptions& opts) {
    long long failures = 0, findings = 0, passes = 0;
    for (const AuditReport& r : reports) {
        std::cout << "claim " << r.claim_id << ": " << to_string(r.status()) << " (checked "
                  << r.checked;
        if (!r.failures.empty()) std::cout << ", failures " << r.failures.size();
        if (!r.findings.empty()) std::cout << ", findings " << r.findings.size();
        std::cout << ")\n";
        for (const Failure& f : r.failures) {
            std::cout << "  FAILURE at " << f.inputs << ": lhs = " << f.lhs << ", rhs = " << f.rhs
                      << "\n";
        }
        for (const Finding& f : r.findings) {
            std::cout << "  finding at " << f.inputs << ": stated " << f.stated << ", computed "
                      << f.computed << "\n    " << f.note << "\n";
        }
        failures += static_cast<long long>(r.failures.size());
        findings += static_cast<long long>(r.findings.size());
        if (r.status() == AuditStatus::Pass) ++passes;
    }
    std::cout << "summary: " << reports.size() << " claims, " << passes << " pass, " << findings
              << " findings, " << failures << " failures\n";
    if (!opts.json_path.empty()) {
        ordered_json doc = reports_document(reports, opts.command, opts.seed, !opts.no_timestamp);
        write_text_file(opts.json_path, doc.dump(2) + "\n");
    }
    if (!opts.markdown_path.empty()) {
        write_text_file(opts.markdown_path,
                        to_markdown(reports, opts.command, opts.seed, !opts.no_timestamp));
    }
    if (failures > 0) return 1;
    if (findings > 0 && opts.strict_findings) return 1;
    return 0;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{
        "octaudit: exact-arithmetic audits of generalized octonion algebras and "
        "Fibonacci/Lucas octonion families"};
    app.require_subcommand(1);

    // ---- audit ----
    CLI::App* audit = app.add_subcommand("audit", "run audit suites");
    std::string scope = "all";
    audit->add_option("--scope", scope, "sequences | norms | prop34 | gfl | all")
        ->check(CLI::IsMember({"sequences", "norms", "prop34", "gfl", "all"}));
    long long n_max = 300;
    audit->add_option("--n-max", n_max, "upper index bound for range audits");
    std::string a_list = "-4,-2,-3/2,0,1,7/3";
    audit->add_option("--a", a_list, "comma-separated family parameters a");
    long long big_n = 12;
    audit->add_option("--N", big_n, "generator index bound for the module audit");
    int trials = 50;
    audit->add_option("--trials", trials, "sample count for the module audit");
    std::string audit_alpha = "1", audit_beta = "1", audit_gamma = "1";
    audit->add_option("--alpha", audit_alpha,
                      "algebra parameter alpha (rational) for the module audit");
    audit->add_option("--beta", audit_beta,
                      "algebra parameter beta (rational) for the module audit");
    audit->add_option("--gamma", audit_gamma,
                      "algebra parameter gamma (rational) for the module audit");
    OutputOptions audit_out;
    audit->add_option("--json", audit_out.json_path, "write the JSON report here");
    audit->add_option("--markdown", audit_out.markdown_path, "write the Markdown report here");
    audit->add_option("--seed", audit_out.seed, "seed for the pseudorandom audits");
    audit->add_flag("--strict-findings", audit_out.strict_findings,
                    "exit 1 when findings are present");
    audit->add_flag("--no-timestamp", audit_out.no_timestamp,
                    "omit the timestamp from reports (byte-identical reruns)");
    bool extend_negative = false;
    audit->add_flag("--extend-negative-indices", extend_negative,
                    "also audit the product decomposition on the extension region n <= m");

    // ---- norm-table ----
    CLI::App* norm_table = app.add_subcommand(
        "norm-table", "CSV of closed-form vs direct Fibonacci-octonion norms");
    std::string table_a_list = "-4,-2,-3/2,0,1,7/3";
    norm_table->add_option("--a", table_a_list, "comma-separated family parameters a");
    long long table_n_lo = 0, table_n_max = 10;
    norm_table->add_option("--n-lo", table_n_lo, "first index");
    norm_table->add_option("--n-max", table_n_max, "last index");
    std::string csv_path;
    norm_table->add_option("--csv", csv_path, "write the CSV here (stdout when omitted)");

    // ---- classify ----
    CLI::App* classify_cmd = app.add_subcommand("classify", "split or division verdict");
    std::string cl_alpha, cl_beta, cl_gamma;
    classify_cmd->add_option("-a,--alpha", cl_alpha, "algebra parameter alpha (rational)")
        ->required();
    classify_cmd->add_option("-b,--beta", cl_beta, "algebra parameter beta (rational)")
        ->required();
    classify_cmd->add_option("-g,--gamma", cl_gamma, "algebra parameter gamma (rational)")
        ->required();

    // ---- eval ----
    CLI::App* eval_cmd = app.add_subcommand("eval", "evaluate an octonion expression");
    std::string expression;
    eval_cmd->add_option("expression", expression, "expression over rationals and e1..e7")
        ->required();
    std::string ev_alpha = "1", ev_beta = "1", ev_gamma = "1";
    eval_cmd->add_option("-a,--alpha", ev_alpha, "algebra parameter alpha (rational)");
    eval_cmd->add_option("-b,--beta", ev_beta, "algebra parameter beta (rational)");
    eval_cmd->add_option("-g,--gamma", ev_gamma, "algebra parameter gamma (rational)");

    // ---- scan ----
    CLI::App* scan_cmd = app.add_subcommand("scan", "sign scan of n(F_n) over a family range");
    std::string scan_a_list = "-4,-2,-3/2,0,1,7/3";
    scan_cmd->add_option("--a", scan_a_list, "comma-separated family parameters a");
    long long scan_n_lo = 0, scan_n_max = 100;
    scan_cmd->add_option("--n-lo", scan_n_lo, "first index");
    scan_cmd->add_option("--n-max", scan_n_max, "last index");

    try {
        app.parse(argc, argv);
    } catch (const CLI::CallForHelp& e) {
        return app.exit(e);
    } catch (const CLI::CallForVersion& e) {
        return app.exit(e);
    } catch (const CLI::ParseError& e) {
        app.exit(e);
        return 2;
    }

    try {
        if (audit->parsed()) {
            audit_out.command = join_args(argc, argv);
            std::set<std::string> scopes;
            if (scope == "all") {
                scopes = {"sequences", "norms", "prop34", "gfl"};
            } else {
                scopes = {scope};
            }
            std::vector<AuditReport> reports;

            if (scopes.count("sequences")) {
                for (IdentityId id : kAllIdentityIds) {
                    reports.push_back(audit_sequence_identity(id, 0, n_max));
                }
            }
            if (scopes.count("norms")) {
                std::vector<Rational> raw = parse_rational_list(a_list);
                std::vector<FamilyParameter> samples;
                for (const Rational& a : raw) samples.emplace_back(a);
                reports.push_back(audit_norm_formula(0, n_max, samples));
                for (const StatedFamilyExample& example : stated_family_examples()) {
                    bool requested = false;
                    for (const Rational& a : raw) {
                        if (a == example.a) requested = true;
                    }
                    if (requested) reports.push_back(audit_family_example(example, 0, n_max));
                }
                reports.push_back(audit_family_split(samples));
            }
            if (scopes.count("prop34")) {
                std::vector<Rational> raw = parse_rational_list(a_list);
                reports.push_back(audit_prop34_polynomials(raw));
                std::vector<FamilyParameter> sign_samples;
                for (const char* text : {"-2", "-5/2", "-3", "-4", "-10"}) {
                    sign_samples.emplace_back(parse_rational(text));
                }
                reports.push_back(audit_sign_stability(sign_samples, 0, std::min(n_max, 100LL)));
            }
            if (scopes.count("gfl")) {
                reports.push_back(audit_zero_characterization(20, 3));
                reports.push_back(audit_linear_decomposition(200, audit_out.seed));
                reports.push_back(audit_product_decomposition(30, extend_negative));
                AlgebraParams algebra(parse_rational(audit_alpha), parse_rational(audit_beta),
                                      parse_rational(audit_gamma));
                reports.push_back(audit_theorem41(big_n, trials, algebra, audit_out.seed));
            }
            return finish_audit(reports, audit_out);
        }

        if (norm_table->parsed()) {
            if (table_n_lo < 0 || table_n_lo > table_n_max) {
                throw std::invalid_argument("norm-table: bad index range");
            }
            std::vector<FamilyParameter> samples;
            for (const Rational& a : parse_rational_list(table_a_list)) samples.emplace_back(a);
            std::vector<NormTableRow> rows;
            for (long long n = table_n_lo; n <= table_n_max; ++n) {
                for (const FamilyParameter& fam : samples) {
                    Rational closed = norm_closed_form(n, fam);
                    Rational direct = norm_direct(n, fam);
                    rows.push_back({n, fam.a, closed, direct, closed == direct});
                }
            }
            std::string csv = to_csv(rows);
            if (csv_path.empty()) {
                std::cout << csv;
            } else {
                write_text_file(csv_path, csv);
            }
            return 0;
        }

        if (classify_cmd->parsed()) {
            AlgebraParams algebra(parse_rational(cl_alpha), parse_rational(cl_beta),
                                  parse_rational(cl_gamma));
            AlgebraClass verdict = classify(algebra);
            std::cout << to_string(verdict) << "\n";
            Rational one(1);
            bool pm_one = (abs(algebra.alpha) == one && abs(algebra.beta) == one &&
                           abs(algebra.gamma) == one);
            if (verdict == AlgebraClass::Split && pm_one) {
                if (auto witness = find_isotropic(algebra, 1)) {
                    std::cout << "isotropic witness: " << to_string(*witness) << " (norm 0)\n";
                }
            }
            return 0;
        }

        if (eval_cmd->parsed()) {
            AlgebraParams algebra(parse_rational(ev_alpha), parse_rational(ev_beta),
                                  parse_rational(ev_gamma));
            expr::NodePtr tree = expr::parse(expression);
            Octonion result = expr::evaluate(tree, algebra);
            std::cout << "expression: " << expr::print(tree)
                      << "  (products group left-to-right; the algebra is non-associative)\n";
            std::cout << "algebra: alpha=" << to_string(algebra.alpha)
                      << " beta=" << to_string(algebra.beta)
                      << " gamma=" << to_string(algebra.gamma) << "\n";
            std::cout << "result: " << to_string(result) << "\n";
            std::cout << "coefficients:";
            for (const Rational& c : result.c) std::cout << " " << to_string(c);
            std::cout << "\n";
            return 0;
        }

        if (scan_cmd->parsed()) {
            if (scan_n_lo < 0 || scan_n_lo > scan_n_max) {
                throw std::invalid_argument("scan: bad index range");
            }
            for (const Rational& a : parse_rational_list(scan_a_list)) {
                FamilyParameter fam(a);
                SignReport report = invertibility_scan(fam, scan_n_lo, scan_n_max);
                std::cout << "a=" << to_string(a) << " n in [" << scan_n_lo << ", " << scan_n_max
                          << "]: " << report.positives << " positive, " << report.negatives
                          << " negative, " << report.zeros << " zero";
                if (report.first_positive) {
                    std::cout << "; first positive at n=" << *report.first_positive;
                }
                if (report.first_negative) {
                    std::cout << "; first negative at n=" << *report.first_negative;
                }
                if (report.first_zero) std::cout << "; first zero at n=" << *report.first_zero;
                std::cout << "; all invertible over range: "
                          << (report.all_invertible() ? "yes" : "no") << "\n";
            }
            return 0;
        }
    } catch (const expr::parse_error& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 2;
    } catch (const std::invalid_argument& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 2;
    } catch (const std::domain_error& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 2;
    } catch (const std::exception& e) {
        std::cerr << "internal error: " << e.what() << "\n";
        return 1;
    }
    return 2;
}
