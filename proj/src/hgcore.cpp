#include "hgmono/hgcore.hpp"

#include <boost/multiprecision/cpp_int.hpp>

namespace hgmono {

namespace {

// M^-T gram M^-1 scaled by the unique rational making it primitive integral
// with p >= q, where M has the power-basis vectors as columns
InvariantForm assemble(const Mat& P, const Vec& v) {
    std::array<Vec, 5> pw;
    pw[0] = v;
    for (std::size_t i = 1; i < 5; ++i) pw[i] = P * pw[i - 1];
    Mat gram_m;
    for (std::size_t i = 0; i < 5; ++i)
        for (std::size_t j = 0; j < 5; ++j)
            gram_m(i, j) = pw[static_cast<std::size_t>(i > j ? i - j : j - i)][4];
    Mat M;
    for (std::size_t i = 0; i < 5; ++i)
        for (std::size_t j = 0; j < 5; ++j) M(i, j) = pw[j][i];
    Mat Mi = M.inverse();
    Mat Q = Mi.transpose() * gram_m * Mi;
    if (Q.det() == 0) throw DegenerateForm("invariant form is degenerate");
    Int den = 1;
    for (std::size_t i = 0; i < 5; ++i)
        for (std::size_t j = 0; j < 5; ++j)
            den = boost::multiprecision::lcm(den, rat_den(Q(i, j)));
    Q = Q * Rat(den);
    Int g = 0;
    for (std::size_t i = 0; i < 5; ++i)
        for (std::size_t j = 0; j < 5; ++j)
            g = boost::multiprecision::gcd(g, rat_num(Q(i, j)));
    Q = Q * Rat(Int(1), g);
    InvariantForm form{SymMat(Q), exact_signature(SymMat(Q)), SymMat(gram_m)};
    if (form.signature.p < form.signature.q) {
        form.Q = SymMat(-Q);
        std::swap(form.signature.p, form.signature.q);
    }
    return form;
}

void check_invariance(const InvariantForm& form, const HGPair& pair) {
    const Mat& Q = form.Q.mat();
    if (!(pair.A.transpose() * Q * pair.A == Q))
        throw InvariantViolation("A does not preserve Q");
    if (!(pair.B.transpose() * Q * pair.B == Q))
        throw InvariantViolation("B does not preserve Q");
}

}  // namespace

Mat companion(const IntPoly& p) {
    if (p.degree() != 5 || !p.monic())
        throw InvariantViolation("companion expects a monic degree-5 polynomial");
    Mat m;
    for (std::size_t i = 1; i < 5; ++i) m(i, i - 1) = 1;
    for (std::size_t i = 0; i < 5; ++i) m(i, 4) = Rat(-p.coeff(i));
    return m;
}

HGPair build_pair(const ParamPair& params) {
    HGPair pair;
    pair.params = params;
    pair.f = params_to_polynomial({params.alpha.begin(), params.alpha.end()});
    pair.g = params_to_polynomial({params.beta.begin(), params.beta.end()});
    if (pair.f.eval_at_zero() != -1) throw InvariantViolation("f(0) != -1");
    if (pair.g.eval_at_zero() != 1) throw InvariantViolation("g(0) != 1");
    pair.A = companion(pair.f);
    pair.B = companion(pair.g);
    pair.C = pair.A.inverse() * pair.B;
    if (!(pair.C * pair.C).is_identity()) throw InvariantViolation("C^2 != I");
    Vec e5{Rat(0), Rat(0), Rat(0), Rat(0), Rat(1)};
    pair.v = (pair.C - Mat::identity()) * e5;
    Vec cv = pair.C * pair.v;
    for (std::size_t i = 0; i < 5; ++i)
        if (cv[i] != -pair.v[i]) throw InvariantViolation("Cv != -v");
    Mat M;
    Vec w = pair.v;
    for (std::size_t j = 0; j < 5; ++j) {
        for (std::size_t i = 0; i < 5; ++i) M(i, j) = w[i];
        w = pair.B * w;
    }
    if (M.det() == 0) throw InvariantViolation("{v, B^i v} is not a basis");
    return pair;
}

InvariantForm invariant_form(const HGPair& pair) {
    InvariantForm form = assemble(pair.B, pair.v);
    check_invariance(form, pair);
    return form;
}

InvariantForm invariant_form_via_A(const HGPair& pair) {
    InvariantForm form = assemble(pair.A, pair.v);
    check_invariance(form, pair);
    return form;
}

Classification classify(const ParamPair& params) {
    HGPair pair = build_pair(params);
    InvariantForm form = invariant_form(pair);
    Classification cls;
    cls.signature = form.signature;
    if (form.signature.rank != 5) throw DegenerateForm("census form must be nondegenerate");
    if (form.signature.q == 0) cls.kind = GroupKind::Finite;
    else if (form.signature.q == 1) cls.kind = GroupKind::Orthogonal41;
    else cls.kind = GroupKind::Orthogonal32;
    cls.real_rank = std::min(form.signature.p, form.signature.q);
    Int delta = bh_delta(params);
    if (delta != form.signature.p - form.signature.q)
        throw InconsistentSignature("signature delta disagrees with exact signature");
    if ((cls.kind == GroupKind::Finite) != interlaces(params))
        throw InconsistentSignature("finiteness disagrees with interlacing");
    return cls;
}

const char* kind_name(GroupKind k) {
    switch (k) {
        case GroupKind::Finite: return "finite";
        case GroupKind::Orthogonal41: return "sig41";
        case GroupKind::Orthogonal32: return "sig32";
    }
    return "?";
}

}  // namespace hgmono
