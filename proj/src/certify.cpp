#include "hgmono/certify.hpp"

#include <algorithm>
#include <cctype>
#include <fstream>
#include <sstream>

namespace hgmono {

namespace {

struct Reader {
    std::ifstream in;
    std::string line;
    int lineno = 0;
    bool pushed = false;

    explicit Reader(const std::string& path) : in(path) {
        if (!in) throw ParseError("cannot open certificate file: " + path);
    }

    bool next() {
        if (pushed) {
            pushed = false;
            return true;
        }
        while (std::getline(in, line)) {
            ++lineno;
            auto hash = line.find('#');
            if (hash != std::string::npos) line.erase(hash);
            auto end = line.find_last_not_of(" \t\r");
            line = end == std::string::npos ? "" : line.substr(0, end + 1);
            auto start = line.find_first_not_of(" \t");
            line = start == std::string::npos ? "" : line.substr(start);
            if (!line.empty()) return true;
        }
        return false;
    }

    void push_back() { pushed = true; }

    [[noreturn]] void fail(const std::string& msg) const {
        throw ParseError("certificate file line " + std::to_string(lineno) + ": " + msg);
    }
};

std::vector<Rat> split_rats(const std::string& s, Reader& r) {
    std::istringstream is(s);
    std::vector<Rat> out;
    std::string tok;
    while (is >> tok) {
        try {
            out.push_back(parse_rat(tok));
        } catch (const ParseError& e) {
            r.fail(e.what());
        }
    }
    return out;
}

Mat read_matrix(Reader& r) {
    Mat m;
    for (std::size_t i = 0; i < N; ++i) {
        if (!r.next()) r.fail("unexpected end of file inside a matrix block");
        std::vector<Rat> row = split_rats(r.line, r);
        if (row.size() != N) r.fail("matrix row must have 5 entries");
        for (std::size_t j = 0; j < N; ++j) m(i, j) = row[j];
    }
    return m;
}

CertMode parse_mode(const std::string& s, Reader& r) {
    if (s == "rank2-flag") return CertMode::Rank2Flag;
    if (s == "rank2-roots") return CertMode::Rank2Roots;
    if (s == "rank1-flag") return CertMode::Rank1Flag;
    r.fail("unknown mode: " + s);
}

void finish_certificate(Certificate& c) {
    if (c.id.empty()) throw SchemaError("certificate without id");
    std::size_t want = c.mode == CertMode::Rank2Roots ? 2 : 3;
    if (c.unipotent_names.size() != want)
        throw SchemaError(c.id + ": expected " + std::to_string(want) +
                          " unipotent names, got " + std::to_string(c.unipotent_names.size()));
    std::map<std::string, bool> bound{{"a", true}, {"b", true}};
    for (const auto& [name, expr] : c.program.bindings) {
        if (bound.count(name)) throw SchemaError(c.id + ": duplicate binding " + name);
        bound[name] = true;
    }
    for (const std::string& name : c.unipotent_names)
        if (!bound.count(name)) throw SchemaError(c.id + ": unipotent " + name + " unbound");
    for (const auto& [name, m] : c.expected) {
        (void)m;
        if (!bound.count(name)) throw SchemaError(c.id + ": expected matrix for unbound " + name);
    }
}

bool proportional(const SymMat& a, const SymMat& b) {
    // equal up to one nonzero rational scalar
    Rat ratio = 0;
    for (std::size_t i = 0; i < N; ++i)
        for (std::size_t j = 0; j < N; ++j) {
            bool za = a(i, j) == 0, zb = b(i, j) == 0;
            if (za != zb) return false;
            if (za) continue;
            Rat r = a(i, j) / b(i, j);
            if (ratio == 0) ratio = r;
            else if (r != ratio) return false;
        }
    return ratio != 0;
}

StepResult& add_step(VerificationReport& rep, const char* name) {
    rep.steps.push_back(StepResult{name, true, false, ""});
    return rep.steps.back();
}

}  // namespace

const char* mode_name(CertMode m) {
    switch (m) {
        case CertMode::Rank2Flag: return "rank2-flag";
        case CertMode::Rank2Roots: return "rank2-roots";
        case CertMode::Rank1Flag: return "rank1-flag";
    }
    return "?";
}

std::vector<Certificate> load_certificates(const std::string& path) {
    Reader r(path);
    std::vector<Certificate> out;
    Certificate cur;
    bool open = false;
    enum class Section { Header, Words, Unipotents, Expected } section = Section::Header;
    while (r.next()) {
        const std::string& ln = r.line;
        if (ln == "[case]") {
            if (open) {
                finish_certificate(cur);
                out.push_back(cur);
            }
            cur = Certificate{};
            open = true;
            section = Section::Header;
            continue;
        }
        if (!open) r.fail("content before the first [case]");
        if (ln == "[words]") {
            section = Section::Words;
            continue;
        }
        if (ln == "[unipotents]") {
            section = Section::Unipotents;
            continue;
        }
        if (ln == "[expected]") {
            section = Section::Expected;
            continue;
        }
        auto trim = [](std::string& s) {
            auto b = s.find_first_not_of(" \t");
            auto e = s.find_last_not_of(" \t");
            s = b == std::string::npos ? "" : s.substr(b, e - b + 1);
        };
        if (section == Section::Unipotents) {
            std::istringstream is(ln);
            std::string name;
            while (std::getline(is, name, ',')) {
                trim(name);
                if (!name.empty()) cur.unipotent_names.push_back(name);
            }
            continue;
        }
        auto eq = ln.find('=');
        if (eq == std::string::npos) r.fail("expected 'key = value'");
        std::string key = ln.substr(0, eq);
        std::string val = ln.substr(eq + 1);
        trim(key);
        trim(val);
        switch (section) {
            case Section::Header: {
                if (key == "id") cur.id = val;
                else if (key == "alpha" || key == "beta") {
                    std::vector<Rat> vals = split_rats(val, r);
                    if (vals.size() != 5) r.fail(key + " must have 5 entries");
                    Params p;
                    std::copy(vals.begin(), vals.end(), p.begin());
                    std::sort(p.begin(), p.end());
                    (key == "alpha" ? cur.params.alpha : cur.params.beta) = p;
                } else if (key == "mode") cur.mode = parse_mode(val, r);
                else if (key == "tau_fixed") cur.tau_fixed = (val == "true");
                else if (key == "X" && val.empty()) cur.X = read_matrix(r);
                else if (key == "Q" && val.empty()) {
                    try {
                        cur.published_Q = SymMat(read_matrix(r));
                    } catch (const InvariantViolation& e) {
                        r.fail(e.what());
                    }
                } else r.fail("unknown header key: " + key);
                break;
            }
            case Section::Words: {
                try {
                    cur.program.bindings.emplace_back(key, parse_word(val));
                } catch (const WordSyntaxError& e) {
                    r.fail(std::string("in word ") + key + ": " + e.what());
                }
                break;
            }
            case Section::Unipotents:
                break;  // handled above
            case Section::Expected: {
                if (!val.empty()) r.fail("expected matrix blocks use 'name =' alone");
                cur.expected[key] = read_matrix(r);
                break;
            }
        }
    }
    if (open) {
        finish_certificate(cur);
        out.push_back(cur);
    }
    return out;
}

VerificationReport verify_certificate(const Certificate& cert) {
    VerificationReport rep;
    rep.id = cert.id;
    rep.assumption =
        "assumes Zariski density of the monodromy group (classification of Zariski "
        "closures, not re-verified here)";
    SymMat Q;
    bool ok = true;

    // S1: rebuild A, B, Q from the parameters; invariance is asserted inside
    HGPair pair;
    {
        StepResult& s = add_step(rep, "S1");
        try {
            pair = build_pair(cert.params);
            InvariantForm form = invariant_form(pair);
            Q = form.Q;
            s.passed = true;
            if (cert.published_Q && !proportional(Q, *cert.published_Q)) {
                s.passed = false;
                s.detail = "recomputed Q is not proportional to the published form";
            }
        } catch (const std::exception& e) {
            s.detail = e.what();
        }
        ok = ok && s.passed;
    }

    // S2: X invertible and G = X^t Q X has the mode's shape
    WittBasis basis;
    {
        StepResult& s = add_step(rep, "S2");
        if (!ok) {
            s.detail = "skipped: S1 failed";
        } else {
            try {
                basis = witt_basis_from(Q, cert.X);
                bool want_rank2 = cert.mode != CertMode::Rank1Flag;
                if ((basis.kind == WittKind::Rank2) == want_rank2) {
                    s.passed = true;
                    rep.witt_rank = basis.kind == WittKind::Rank2 ? 2 : 1;
                } else {
                    s.detail = "Witt shape disagrees with the certificate mode";
                }
            } catch (const std::exception& e) {
                s.detail = e.what();
            }
        }
        ok = ok && s.passed;
    }

    // S3: conjugate generators and run the word program
    Env env;
    {
        StepResult& s = add_step(rep, "S3");
        if (!ok) {
            s.detail = "skipped: earlier step failed";
        } else {
            try {
                Mat Xi = cert.X.inverse();
                env = run_program(cert.program, Xi * pair.A * cert.X, Xi * pair.B * cert.X);
                s.passed = true;
            } catch (const std::exception& e) {
                s.detail = e.what();
            }
        }
        ok = ok && s.passed;
    }

    // S4: exact comparison against every published matrix
    {
        StepResult& s = add_step(rep, "S4");
        if (!ok) {
            s.detail = "skipped: earlier step failed";
        } else {
            s.passed = true;
            for (const auto& [name, want] : cert.expected) {
                if (!(env.at(name) == want)) {
                    s.passed = false;
                    s.detail = "mismatch for " + name;
                    break;
                }
            }
        }
        ok = ok && s.passed;
    }

    // S5: unipotency of the finals
    {
        StepResult& s = add_step(rep, "S5");
        if (!ok) {
            s.detail = "skipped: earlier step failed";
        } else {
            s.passed = true;
            for (const std::string& name : cert.unipotent_names)
                if (!is_unipotent(env.at(name))) {
                    s.passed = false;
                    s.detail = name + " is not unipotent";
                    break;
                }
        }
        ok = ok && s.passed;
    }

    // S6: membership in the unipotent radical or the two root groups
    std::vector<FlagCoords> coords;
    {
        StepResult& s = add_step(rep, "S6");
        if (!ok) {
            s.detail = "skipped: earlier step failed";
        } else if (cert.mode == CertMode::Rank2Roots) {
            NotMember why;
            auto x1 = root_group_membership(env.at(cert.unipotent_names[0]), basis,
                                            RootKind::Highest, &why);
            std::optional<Rat> x2;
            if (x1)
                x2 = root_group_membership(env.at(cert.unipotent_names[1]), basis,
                                           RootKind::SecondHighest, &why);
            if (x1 && x2) {
                s.passed = true;
                rep.root_x = {*x1, *x2};
            } else {
                s.detail = why.reason;
            }
        } else {
            s.passed = true;
            for (const std::string& name : cert.unipotent_names) {
                NotMember why;
                auto c = flag_membership(env.at(name), basis, &why);
                if (!c) {
                    s.passed = false;
                    s.detail = name + ": " + why.reason;
                    break;
                }
                coords.push_back(*c);
            }
        }
        ok = ok && s.passed;
    }

    // S7: integrality (elements of U(Z))
    {
        StepResult& s = add_step(rep, "S7");
        if (!ok) {
            s.detail = "skipped: earlier step failed";
        } else {
            s.passed = true;
            for (const std::string& name : cert.unipotent_names)
                if (!env.at(name).is_integral()) {
                    s.passed = false;
                    s.detail = name + " has non-integer entries";
                    break;
                }
        }
        ok = ok && s.passed;
    }

    // S8: finite-index lattice inside U(Z), flag modes only
    {
        StepResult& s = add_step(rep, "S8");
        if (cert.mode == CertMode::Rank2Roots) {
            s.applicable = false;
            s.passed = true;
            s.detail = "not applicable in root-group mode";
        } else if (!ok) {
            s.detail = "skipped: earlier step failed";
        } else {
            std::array<std::array<Int, 3>, 3> rows;
            for (std::size_t i = 0; i < 3; ++i) {
                rows[i][0] = rat_num(coords[i].s);
                rows[i][1] = rat_num(coords[i].x);
                rows[i][2] = rat_num(coords[i].y);
            }
            Int idx = lattice_index(rows);
            if (idx != 0) {
                s.passed = true;
                rep.lattice_index = idx;
            } else {
                s.detail = "coordinate vectors are linearly dependent";
            }
        }
        ok = ok && s.passed;
    }

    rep.passed = ok;
    return rep;
}

VerificationSummary verify_all(const std::vector<Certificate>& certs) {
    VerificationSummary summary;
    for (const Certificate& c : certs) summary.reports.push_back(verify_certificate(c));
    std::sort(summary.reports.begin(), summary.reports.end(),
              [](const VerificationReport& a, const VerificationReport& b) {
                  // numeric-aware: BS2 before BS10
                  auto key = [](const std::string& s) {
                      std::size_t i = 0;
                      while (i < s.size() && !std::isdigit(static_cast<unsigned char>(s[i]))) ++i;
                      return std::make_tuple(s.substr(0, i),
                                             i < s.size() ? std::stol(s.substr(i)) : 0L);
                  };
                  return key(a.id) < key(b.id);
              });
    for (const VerificationReport& r : summary.reports) summary.passed = summary.passed && r.passed;
    return summary;
}

}  // namespace hgmono
