#include <algorithm>
#include <cstdlib>
#include <iostream>
#include <map>
#include <sstream>
#include <string>
#include <tuple>
#include <vector>

#include <CLI11.hpp>
#include <json.hpp>

#include "hgmono/certify.hpp"
#include "hgmono/cyclo.hpp"
#include "hgmono/hgcore.hpp"
#include "hgmono/witt.hpp"

namespace {

using namespace hgmono;
using nlohmann::json;

std::string fixture_dir() {
    if (const char* env = std::getenv("HGMONO_FIXTURES")) return env;
    return "data";
}

const char* attribution(int table_id) {
    switch (table_id) {
        case 1: return "thin";
        case 2: return "venkataramana";
        case 3: return "singh";
        case 4: return "this-paper";
        case 5: return "finite";
        default: return "unknown";
    }
}

json params_json(const Params& p) {
    json out = json::array();
    for (const Rat& v : p) out.push_back(format_rat(v));
    return out;
}

int cmd_enumerate(bool raw, bool by_table, const std::string& format,
                  const std::string& census_path) {
    if (raw) {
        for (const ParamPair& pair : enumerate_raw_pairs()) {
            if (format == "json-lines") {
                json rec{{"alpha", params_json(pair.alpha)}, {"beta", params_json(pair.beta)}};
                std::cout << rec.dump() << "\n";
            } else {
                std::cout << format_params(pair.alpha) << "\t" << format_params(pair.beta)
                          << "\n";
            }
        }
        return 0;
    }
    std::vector<CensusEntry> entries = enumerate_pairs();
    try {
        reconcile_with_fixture(entries, load_census_fixture(census_path));
    } catch (const std::exception& e) {
        std::cerr << e.what() << "\n";
        return 2;
    }
    if (by_table) {
        std::sort(entries.begin(), entries.end(), [](const CensusEntry& a, const CensusEntry& b) {
            return std::tie(a.table_id, a.row_no) < std::tie(b.table_id, b.row_no);
        });
    }
    std::map<std::string, int> counts;
    int last_table = 0;
    for (const CensusEntry& e : entries) {
        Classification cls = classify(e.params);
        cls.q_rank = q_rank(invariant_form(build_pair(e.params)).Q);
        counts[kind_name(cls.kind)]++;
        if (by_table && format != "json-lines" && e.table_id != last_table) {
            std::cout << "# table " << e.table_id << " (" << attribution(e.table_id) << ")\n";
            last_table = e.table_id;
        }
        if (format == "json-lines") {
            json rec{{"alpha", params_json(e.params.alpha)},
                     {"beta", params_json(e.params.beta)},
                     {"tau_fixed", e.tau_fixed},
                     {"monomial_pair", e.monomial_pair},
                     {"class", kind_name(cls.kind)},
                     {"q_rank", cls.q_rank},
                     {"table_id", e.table_id},
                     {"row_no", e.row_no},
                     {"attribution", attribution(e.table_id)}};
            std::cout << rec.dump() << "\n";
        } else {
            std::cout << format_params(e.params.alpha) << "\t" << format_params(e.params.beta)
                      << "\t" << (e.tau_fixed ? "tau-fixed" : "-") << "\t"
                      << (e.monomial_pair ? "monomial" : "-") << "\t" << kind_name(cls.kind)
                      << "\t" << cls.q_rank << "\t" << e.table_id << "\t" << e.row_no << "\t"
                      << attribution(e.table_id) << "\n";
        }
    }
    std::cout << "# finite=" << counts["finite"] << " sig41=" << counts["sig41"]
              << " sig32=" << counts["sig32"] << "\n";
    return entries.size() == 77 ? 0 : 2;
}

int cmd_classify(const std::string& alpha_s, const std::string& beta_s) {
    auto parse_list = [](const std::string& s) {
        std::istringstream is(s);
        std::vector<Rat> out;
        std::string tok;
        while (is >> tok) out.push_back(parse_rat(tok));
        return out;
    };
    try {
        ParamPair params = make_param_pair(parse_list(alpha_s), parse_list(beta_s));
        HGPair pair = build_pair(params);
        InvariantForm form = invariant_form(pair);
        Classification cls = classify(params);
        std::cout << "alpha: " << format_params(params.alpha) << "\n";
        std::cout << "beta:  " << format_params(params.beta) << "\n";
        std::cout << "f(x) = " << pair.f.str() << "\n";
        std::cout << "g(x) = " << pair.g.str() << "\n";
        std::cout << "A =\n" << format_mat(pair.A, "  ");
        std::cout << "B =\n" << format_mat(pair.B, "  ");
        std::cout << "Q (primitive) =\n" << format_mat(form.Q.mat(), "  ");
        std::cout << "signature: (" << form.signature.p << "," << form.signature.q << ")\n";
        std::cout << "bh_delta: " << bh_delta(params).str() << "\n";
        std::cout << "interlaces: " << (interlaces(params) ? "yes" : "no") << "\n";
        if (cls.kind == GroupKind::Finite) {
            std::cout << "class: finite (roots interlace)\n";
        } else {
            std::cout << "class: " << kind_name(cls.kind) << "\n";
            std::cout << "q_rank: " << q_rank(form.Q) << "\n";
        }
        return 0;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 2;
    }
}

int cmd_verify(bool all, const std::string& case_id, const std::string& cert_path) {
    std::vector<Certificate> certs;
    try {
        certs = load_certificates(cert_path);
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 2;
    }
    if (!all) {
        auto it = std::find_if(certs.begin(), certs.end(),
                               [&](const Certificate& c) { return c.id == case_id; });
        if (it == certs.end()) {
            std::cerr << "error: unknown case " << case_id << "\n";
            return 2;
        }
        certs = {*it};
    }
    VerificationSummary summary = verify_all(certs);
    for (const VerificationReport& rep : summary.reports) {
        std::cout << rep.id << "\t" << (rep.passed ? "pass" : "FAIL") << "\tq-rank "
                  << rep.witt_rank;
        if (rep.lattice_index) std::cout << "\tlattice index " << rep.lattice_index->str();
        if (!rep.root_x.empty())
            std::cout << "\troot x-values (" << format_rat(rep.root_x[0]) << ", "
                      << format_rat(rep.root_x[1]) << ")";
        std::cout << "\n";
        for (const StepResult& s : rep.steps)
            if (!s.passed && s.applicable)
                std::cout << "  " << s.step << ": " << s.detail << "\n";
        std::cout << "  note: " << rep.assumption << "\n";
    }
    std::cout << "# " << std::count_if(summary.reports.begin(), summary.reports.end(),
                                       [](const VerificationReport& r) { return r.passed; })
              << "/" << summary.reports.size() << " pass\n";
    return summary.passed ? 0 : 1;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"degree-five orthogonal hypergeometric monodromy census and certificates"};
    app.require_subcommand(1);

    auto* enumerate = app.add_subcommand("enumerate", "list the census (77 orbits)");
    bool raw = false, by_table = false;
    std::string format = "tsv";
    enumerate->add_flag("--raw", raw, "147 coprime pairs before the scalar-shift quotient");
    enumerate->add_flag("--by-table", by_table, "group rows as in the published tables");
    enumerate->add_option("--format", format, "tsv or json-lines")
        ->check(CLI::IsMember({"tsv", "json-lines"}));

    auto* classify_cmd = app.add_subcommand("classify", "classify one parameter pair");
    std::string alpha_s, beta_s;
    classify_cmd->add_option("--alpha", alpha_s, "five rationals")->required();
    classify_cmd->add_option("--beta", beta_s, "five rationals")->required();

    auto* verify = app.add_subcommand("verify", "verify arithmeticity certificates");
    bool all = false;
    std::string case_id, cert_path;
    verify->add_flag("--all", all, "verify every certificate");
    verify->add_option("--case", case_id, "verify a single case by id");
    verify->add_option("--cert", cert_path, "certificate file path");

    CLI11_PARSE(app, argc, argv);

    try {
        if (enumerate->parsed())
            return cmd_enumerate(raw, by_table, format, fixture_dir() + "/census.txt");
        if (classify_cmd->parsed()) return cmd_classify(alpha_s, beta_s);
        if (verify->parsed()) {
            if (!all && case_id.empty()) {
                std::cerr << "error: need --all or --case ID\n";
                return 2;
            }
            if (cert_path.empty()) cert_path = fixture_dir() + "/certificates.txt";
            return cmd_verify(all, case_id, cert_path);
        }
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 2;
    }
    return 2;
}
