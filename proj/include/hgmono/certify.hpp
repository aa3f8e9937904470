#ifndef HGMONO_CERTIFY_HPP
#define HGMONO_CERTIFY_HPP

#include <map>
#include <optional>
#include <string>
#include <vector>

#include "hgmono/cyclo.hpp"
#include "hgmono/hgcore.hpp"
#include "hgmono/witt.hpp"
#include "hgmono/wordlang.hpp"

namespace hgmono {

enum class CertMode { Rank2Flag, Rank2Roots, Rank1Flag };

struct Certificate {
    std::string id;
    ParamPair params;
    Mat X;  // the published change-of-basis matrix
    CertMode mode = CertMode::Rank2Flag;
    bool tau_fixed = false;
    WordProgram program;
    std::vector<std::string> unipotent_names;  // 3 for flag modes, 2 for roots
    std::map<std::string, Mat> expected;       // published matrices, exact
    std::optional<SymMat> published_Q;         // compared up to one scalar
};

struct StepResult {
    std::string step;  // "S1".."S8"
    bool applicable = true;
    bool passed = false;
    std::string detail;
};

struct VerificationReport {
    std::string id;
    std::vector<StepResult> steps;
    bool passed = false;
    std::optional<Int> lattice_index;            // flag modes
    std::vector<Rat> root_x;                     // Rank2Roots: highest, second highest
    int witt_rank = 0;                           // 2 or 1 from the basis shape
    std::string assumption;                      // recorded, not verified
};

struct VerificationSummary {
    std::vector<VerificationReport> reports;  // ordered by id
    bool passed = true;
};

const char* mode_name(CertMode m);

std::vector<Certificate> load_certificates(const std::string& path);

VerificationReport verify_certificate(const Certificate& cert);

VerificationSummary verify_all(const std::vector<Certificate>& certs);

}  // namespace hgmono

#endif
