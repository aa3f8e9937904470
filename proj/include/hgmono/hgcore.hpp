#ifndef HGMONO_HGCORE_HPP
#define HGMONO_HGCORE_HPP

#include "hgmono/cyclo.hpp"
#include "hgmono/mat.hpp"
#include "hgmono/poly.hpp"

namespace hgmono {

struct HGPair {
    ParamPair params;
    IntPoly f, g;
    Mat A, B;  // companion matrices
    Mat C;     // A^-1 B, an involution
    Vec v;     // (C - I) e5
};

struct InvariantForm {
    SymMat Q;      // primitive integral, sign-normalized so p >= q
    Signature signature;
    SymMat gram;   // in the {v, B v, ..., B^4 v} basis
};

enum class GroupKind { Finite, Orthogonal41, Orthogonal32 };

struct Classification {
    GroupKind kind = GroupKind::Finite;
    Signature signature;
    int real_rank = 0;  // min(p, q)
    int q_rank = -1;    // filled by module witt; -1 until computed
};

// subdiagonal ones, last column = negated coefficients (constant term first)
Mat companion(const IntPoly& p);

// builds A, B, C, v and checks C^2 = I, Cv = -v, basis independence
HGPair build_pair(const ParamPair& params);

// gram[i][j] = e5-coefficient of B^{|i-j|} v; standard-basis form via the
// {v, B^i v} change of basis, scaled primitive integral with p >= q
InvariantForm invariant_form(const HGPair& pair);

// optional alternate route used as a test oracle: A-power basis
InvariantForm invariant_form_via_A(const HGPair& pair);

Classification classify(const ParamPair& params);

const char* kind_name(GroupKind k);

}  // namespace hgmono

#endif
