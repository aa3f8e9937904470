// acceptance gate: one pass/fail line per criterion, nonzero exit on failure

#include <chrono>
#include <cstdio>
#include <functional>
#include <random>
#include <string>

#include "hgmono/certify.hpp"
#include "oracles.hpp"

using namespace hgmono;
using Clock = std::chrono::steady_clock;

namespace {

int failures = 0;

double run_criterion(const char* label, double budget_seconds,
                     const std::function<bool(std::string&)>& body) {
    std::string detail;
    auto start = Clock::now();
    bool ok = false;
    try {
        ok = body(detail);
    } catch (const std::exception& e) {
        detail = e.what();
    }
    double secs = std::chrono::duration<double>(Clock::now() - start).count();
    if (budget_seconds > 0 && secs > budget_seconds) {
        ok = false;
        detail = "exceeded " + std::to_string(budget_seconds) + "s budget";
    }
    if (!ok) ++failures;
    std::printf("[%s] %s (%.2fs)%s%s\n", ok ? "PASS" : "FAIL", label, secs,
                detail.empty() ? "" : " - ", detail.c_str());
    return secs;
}

bool expect(bool cond, const std::string& msg, std::string& detail) {
    if (!cond && detail.empty()) detail = msg;
    return cond;
}

// random word expressions for the parser / evaluator suites
WordPtr random_word(std::mt19937_64& rng, int depth) {
    std::uniform_int_distribution<int> kind(0, depth > 0 ? 3 : 0);
    std::uniform_int_distribution<int> name(0, 1);
    std::uniform_int_distribution<int> arity(2, 3);
    std::uniform_int_distribution<long long> expo(-3, 3);
    auto w = std::make_shared<WordExpr>();
    switch (kind(rng)) {
        case 0:
            w->kind = WordExpr::Kind::Name;
            w->name = name(rng) ? "a" : "b";
            break;
        case 1: {
            w->kind = WordExpr::Kind::Product;
            int n = arity(rng);
            for (int i = 0; i < n; ++i) w->parts.push_back(random_word(rng, depth - 1));
            break;
        }
        case 2:
            w->kind = WordExpr::Kind::Power;
            w->base = random_word(rng, depth - 1);
            w->exponent = expo(rng);
            break;
        default:
            w->kind = WordExpr::Kind::Commutator;
            w->parts.push_back(random_word(rng, depth - 1));
            w->parts.push_back(random_word(rng, depth - 1));
            break;
    }
    return w;
}

bool words_equal(const WordExpr& a, const WordExpr& b) {
    if (a.kind != b.kind || a.name != b.name || a.exponent != b.exponent ||
        a.parts.size() != b.parts.size())
        return false;
    if (a.base && !words_equal(*a.base, *b.base)) return false;
    for (std::size_t i = 0; i < a.parts.size(); ++i)
        if (!words_equal(*a.parts[i], *b.parts[i])) return false;
    return true;
}

}  // namespace

int main() {
    std::vector<CensusEntry> census;

    run_criterion("1. census enumeration: 147 coprime pairs, 7 tau-fixed, 77 orbits", 1.0,
                  [&](std::string& d) {
                      auto raw = enumerate_raw_pairs();
                      int fixed = 0;
                      for (const ParamPair& p : raw)
                          if (tau_involution(p) == p) ++fixed;
                      census = enumerate_pairs();
                      return expect(raw.size() == 147, "raw pair count", d) &&
                             expect(fixed == 7, "tau-fixed count", d) &&
                             expect(census.size() == 77, "orbit count", d);
                  });

    run_criterion("2. enumeration reconciles with the published census modulo tau", 0,
                  [&](std::string& d) {
                      auto fixture = load_census_fixture(oracles::fixture_path("census.txt"));
                      reconcile_with_fixture(census, fixture);
                      int matched = 0;
                      for (const CensusEntry& e : census)
                          if (e.table_id != 0) ++matched;
                      return expect(fixture.size() == 77, "fixture row count", d) &&
                             expect(matched == 77, "every orbit matched to a table row", d);
                  });

    run_criterion("3. classification partition 4 finite / 17 sig(4,1) / 56 sig(3,2)", 0,
                  [&](std::string& d) {
                      int finite = 0, sig41 = 0, sig32 = 0;
                      bool iff = true;
                      for (const CensusEntry& e : census) {
                          Classification c = classify(e.params);
                          iff = iff && ((c.kind == GroupKind::Finite) == interlaces(e.params));
                          if (c.kind == GroupKind::Finite) ++finite;
                          else if (c.kind == GroupKind::Orthogonal41) ++sig41;
                          else ++sig32;
                      }
                      return expect(finite == 4 && sig41 == 17 && sig32 == 56,
                                    "partition counts", d) &&
                             expect(iff, "finite iff interlacing", d);
                  });

    run_criterion("4. all 77 invariant forms are preserved and match the defect", 0,
                  [&](std::string& d) {
                      for (const CensusEntry& e : census) {
                          HGPair pair = build_pair(e.params);
                          InvariantForm f = invariant_form(pair);
                          const Mat& q = f.Q.mat();
                          if (!expect(pair.A.transpose() * q * pair.A == q &&
                                          pair.B.transpose() * q * pair.B == q,
                                      "invariance fails for " + format_params(e.params.alpha), d))
                              return false;
                          Int defect = f.signature.p - f.signature.q;
                          if (defect < 0) defect = -defect;
                          if (!expect(defect == bh_delta(e.params),
                                      "|p - q| != delta for " + format_params(e.params.alpha), d))
                              return false;
                      }
                      return true;
                  });

    run_criterion("5. worked example reproduces the published form", 0, [&](std::string& d) {
        ParamPair p = make_param_pair(
            {Rat(0), Rat(0), Rat(0), Rat(1, 3), Rat(2, 3)},
            {Rat(1, 2), Rat(1, 4), Rat(1, 4), Rat(3, 4), Rat(3, 4)});
        InvariantForm f = invariant_form(build_pair(p));
        int qrow[5] = {5, -5, -3, 11, 5};
        int grow[5] = {-2, 3, -2, -1, -2};
        for (std::size_t j = 0; j < 5; ++j) {
            if (!expect(f.Q(0, j) == qrow[j], "standard-basis form first row", d)) return false;
            if (!expect(f.gram(0, j) == grow[j], "Toeplitz gram first row", d)) return false;
        }
        return true;
    });

    std::vector<Certificate> certs;
    run_criterion("6. all 23 arithmeticity certificates verify end to end", 10.0,
                  [&](std::string& d) {
                      certs = load_certificates(oracles::fixture_path("certificates.txt"));
                      if (!expect(certs.size() == 23, "certificate count", d)) return false;
                      VerificationSummary summary = verify_all(certs);
                      for (const VerificationReport& r : summary.reports)
                          if (!r.passed) return expect(false, r.id + " failed", d);
                      auto by_id = [&](const std::string& id) -> const VerificationReport& {
                          for (const auto& r : summary.reports)
                              if (r.id == id) return r;
                          throw InvariantViolation("missing report " + id);
                      };
                      const auto& bs1 = by_id("BS1");
                      if (!expect(bs1.lattice_index && *bs1.lattice_index == 32,
                                  "BS1 lattice index", d))
                          return false;
                      const auto& bs16 = by_id("BS16");
                      if (!expect(bs16.root_x == std::vector<Rat>{84, -24},
                                  "BS16 root parameters", d))
                          return false;
                      const auto& bs22 = by_id("BS22");
                      if (!expect(bs22.root_x == std::vector<Rat>{-3840, 7372800},
                                  "BS22 root parameters", d))
                          return false;
                      // corner entries of the second-highest root elements
                      for (const auto& [id, corner] :
                           std::vector<std::pair<std::string, Rat>>{
                               {"BS16", Rat(588) * 576},
                               {"BS22", Rat(4, 5) * Rat(7372800) * 7372800}}) {
                          for (const Certificate& c : certs) {
                              if (c.id != id) continue;
                              HGPair pair = build_pair(c.params);
                              Mat Xi = c.X.inverse();
                              Env env = run_program(c.program, Xi * pair.A * c.X,
                                                    Xi * pair.B * c.X);
                              const Mat& u = env.at(c.unipotent_names[1]);
                              if (!expect(u(0, 4) == corner, id + " corner entry", d))
                                  return false;
                          }
                      }
                      return true;
                  });

    run_criterion("7. Q-rank is 1 exactly for the three rank-one cases", 0,
                  [&](std::string& d) {
                      for (const Certificate& c : certs) {
                          int rank = q_rank(invariant_form(build_pair(c.params)).Q);
                          bool rank1 = c.id == "BS9" || c.id == "BS14" || c.id == "BS21";
                          if (!expect(rank == (rank1 ? 1 : 2), c.id + " q-rank", d)) return false;
                      }
                      return true;
                  });

    run_criterion("8. property-based cross checks", 60.0, [&](std::string& d) {
        std::mt19937_64 rng(987654321);

        // parser round trip on 500 random expressions
        for (int t = 0; t < 500; ++t) {
            WordPtr w = random_word(rng, 3);
            if (!expect(words_equal(*w, *parse_word(print_word(*w))), "parser round trip", d))
                return false;
        }

        // evaluation is a homomorphism; commutators match their definition
        Env env{{"a", oracles::random_invertible(rng)}, {"b", oracles::random_invertible(rng)}};
        for (int t = 0; t < 500; ++t) {
            WordPtr u = random_word(rng, 2);
            WordPtr v = random_word(rng, 2);
            Mat mu = eval_word(*u, env), mv = eval_word(*v, env);
            std::string pu = "(" + print_word(*u) + ")", pv = "(" + print_word(*v) + ")";
            if (!expect(eval_word(*parse_word(pu + " " + pv), env) == mu * mv,
                        "product homomorphism", d))
                return false;
            if (!expect(eval_word(*parse_word(pu + "^-1"), env) == mu.inverse(),
                        "inverse power", d))
                return false;
            if (!expect(eval_word(*parse_word("[" + pu + ", " + pv + "]"), env) ==
                            mu * mv * mu.inverse() * mv.inverse(),
                        "commutator definition", d))
                return false;
        }

        // flag coordinates are additive and faithful on certified unipotents
        for (const Certificate& c : certs) {
            if (c.mode == CertMode::Rank2Roots) continue;
            HGPair pair = build_pair(c.params);
            SymMat Q = invariant_form(pair).Q;
            WittBasis basis = witt_basis_from(Q, c.X);
            Mat Xi = c.X.inverse();
            Env cenv = run_program(c.program, Xi * pair.A * c.X, Xi * pair.B * c.X);
            std::vector<Mat> us;
            std::vector<FlagCoords> cs;
            for (const std::string& name : c.unipotent_names) {
                auto fc = flag_membership(cenv.at(name), basis);
                if (!expect(fc.has_value(), c.id + ": " + name + " not in the flag group", d))
                    return false;
                us.push_back(cenv.at(name));
                cs.push_back(*fc);
            }
            for (std::size_t i = 0; i < us.size(); ++i)
                for (std::size_t j = 0; j < us.size(); ++j) {
                    auto fc = flag_membership(us[i] * us[j], basis);
                    bool add = fc && fc->s == cs[i].s + cs[j].s && fc->x == cs[i].x + cs[j].x &&
                               fc->y == cs[i].y + cs[j].y;
                    if (!expect(add, c.id + ": flag coordinates not additive", d)) return false;
                    if (i != j) {
                        bool distinct = !(cs[i] == cs[j]);
                        if (!expect(distinct, c.id + ": coordinates not faithful", d))
                            return false;
                    }
                }
        }

        // local solvability criterion against exhaustive search
        std::uniform_int_distribution<int> coeff(-9, 9);
        int checked = 0;
        while (checked < 200) {
            int d1 = coeff(rng), d2 = coeff(rng), d3 = coeff(rng);
            if (d1 == 0 || d2 == 0 || d3 == 0) continue;
            if (!expect(ternary_isotropic(d1, d2, d3) ==
                            oracles::ternary_brute_force(d1, d2, d3),
                        "ternary solvability mismatch", d))
                return false;
            ++checked;
        }

        // congruence-diagonalization signature against Sturm counting
        for (int t = 0; t < 100; ++t) {
            SymMat s = oracles::random_symmetric(rng);
            if (!expect(exact_signature(s) == oracles::sturm_signature(s),
                        "signature mismatch", d))
                return false;
        }
        return true;
    });

    if (failures) {
        std::printf("%d criterion(s) failed\n", failures);
        return 1;
    }
    std::printf("all acceptance criteria passed\n");
    return 0;
}
