#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "hgmono/hgcore.hpp"
#include "oracles.hpp"

using namespace hgmono;

namespace {

ParamPair case1_params() {
    return make_param_pair(
        {Rat(0), Rat(0), Rat(0), Rat(1, 3), Rat(2, 3)},
        {Rat(1, 2), Rat(1, 4), Rat(1, 4), Rat(3, 4), Rat(3, 4)});
}

}  // namespace

TEST_CASE("companion matrices") {
    Mat a = companion(IntPoly({-1, 2, -1, 1, -2, 1}));
    std::array<int, 5> col_a{1, -2, 1, -1, 2};
    for (std::size_t i = 0; i < 5; ++i) {
        CHECK(a(i, 4) == col_a[i]);
        for (std::size_t j = 0; j < 4; ++j) CHECK(a(i, j) == (i == j + 1 ? 1 : 0));
    }

    Mat b = companion(IntPoly({1, 1, 2, 2, 1, 1}));
    std::array<int, 5> col_b{-1, -1, -2, -2, -1};
    for (std::size_t i = 0; i < 5; ++i) CHECK(b(i, 4) == col_b[i]);

    Mat cyc = companion(IntPoly({-1, 0, 0, 0, 0, 1}));
    CHECK(cyc(0, 4) == 1);
    for (std::size_t i = 1; i < 5; ++i) CHECK(cyc(i, 4) == 0);
    CHECK(cyc.pow(5) == Mat::identity());
}

TEST_CASE("build_pair") {
    HGPair pair = build_pair(case1_params());
    std::array<int, 5> v{-3, -1, -3, 1, -2};
    for (std::size_t i = 0; i < 5; ++i) CHECK(pair.v[i] == v[i]);
    Vec bv = pair.B * pair.v;
    std::array<int, 5> bv_want{2, -1, 3, 1, 3};
    for (std::size_t i = 0; i < 5; ++i) CHECK(bv[i] == bv_want[i]);
    CHECK((pair.C * pair.C).is_identity());
}

TEST_CASE("invariant form of the first certified case") {
    InvariantForm form = invariant_form(build_pair(case1_params()));
    std::array<int, 5> gram_row{-2, 3, -2, -1, -2};
    for (std::size_t j = 0; j < 5; ++j) CHECK(form.gram(0, j) == gram_row[j]);
    std::array<int, 5> q_row{5, -5, -3, 11, 5};
    for (std::size_t j = 0; j < 5; ++j) CHECK(form.Q(0, j) == q_row[j]);
    CHECK(form.signature == Signature{3, 2, 5});
}

TEST_CASE("classification spot checks") {
    CHECK(classify(case1_params()).kind == GroupKind::Orthogonal32);
    ParamPair t1r1 = make_param_pair(
        {Rat(0), Rat(0), Rat(0), Rat(1, 3), Rat(2, 3)},
        {Rat(1, 2), Rat(1, 8), Rat(3, 8), Rat(5, 8), Rat(7, 8)});
    CHECK(classify(t1r1).kind == GroupKind::Orthogonal41);
    ParamPair finite3 = make_param_pair(
        {Rat(0), Rat(1, 5), Rat(2, 5), Rat(3, 5), Rat(4, 5)},
        {Rat(1, 2), Rat(1, 10), Rat(3, 10), Rat(7, 10), Rat(9, 10)});
    Classification cls = classify(finite3);
    CHECK(cls.kind == GroupKind::Finite);
    CHECK(cls.real_rank == 0);
}

TEST_CASE("whole-census invariants") {
    int finite = 0, sig41 = 0, sig32 = 0;
    for (const CensusEntry& e : enumerate_pairs()) {
        HGPair pair = build_pair(e.params);
        InvariantForm form = invariant_form(pair);
        const Mat& q = form.Q.mat();
        CHECK(pair.A.transpose() * q * pair.A == q);
        CHECK(pair.B.transpose() * q * pair.B == q);
        CHECK(q.is_integral());
        CHECK(form.signature.p >= form.signature.q);
        CHECK(bh_delta(e.params) == form.signature.p - form.signature.q);
        // gram is Toeplitz
        for (std::size_t i = 0; i + 1 < 5; ++i)
            for (std::size_t j = 0; j + 1 < 5; ++j)
                CHECK(form.gram(i, j) == form.gram(i + 1, j + 1));
        // A-power basis route is an independent oracle for the same form
        CHECK(invariant_form_via_A(pair).Q == form.Q);
        Classification cls = classify(e.params);
        CHECK((cls.kind == GroupKind::Finite) == interlaces(e.params));
        if (cls.kind == GroupKind::Finite) ++finite;
        else if (cls.kind == GroupKind::Orthogonal41) ++sig41;
        else ++sig32;
    }
    CHECK(finite == 4);
    CHECK(sig41 == 17);
    CHECK(sig32 == 56);
}
