#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "hgmono/cyclo.hpp"
#include "hgmono/hgcore.hpp"
#include "hgmono/mat.hpp"
#include "oracles.hpp"

using namespace hgmono;

namespace {

ParamPair case1_params() {
    return make_param_pair(
        {Rat(0), Rat(0), Rat(0), Rat(1, 3), Rat(2, 3)},
        {Rat(1, 2), Rat(1, 4), Rat(1, 4), Rat(3, 4), Rat(3, 4)});
}

SymMat toeplitz(const std::array<int, 5>& row) {
    SymMat s;
    for (std::size_t i = 0; i < 5; ++i)
        for (std::size_t j = i; j < 5; ++j) s.set(i, j, row[j - i]);
    return s;
}

}  // namespace

TEST_CASE("matrix product basics") {
    Mat id = Mat::identity();
    CHECK(id * id == id);

    HGPair pair = build_pair(case1_params());
    CHECK(pair.A * pair.A.inverse() == id);

    // C = A^-1 B is the identity except its last column
    Mat c = pair.C;
    std::array<int, 5> last{-3, -1, -3, 1, -1};
    for (std::size_t i = 0; i < 5; ++i) {
        CHECK(c(i, 4) == last[i]);
        for (std::size_t j = 0; j < 4; ++j) CHECK(c(i, j) == (i == j ? 1 : 0));
    }
}

TEST_CASE("matrix inverse") {
    CHECK(Mat::identity().inverse() == Mat::identity());

    Mat d;
    for (std::size_t i = 0; i < 5; ++i) d(i, i) = 2;
    Mat di = d.inverse();
    for (std::size_t i = 0; i < 5; ++i) CHECK(di(i, i) == Rat(1, 2));

    CHECK_THROWS_AS(Mat::zero().inverse(), SingularMatrix);
}

TEST_CASE("inverse of the published change-of-basis against the power basis") {
    HGPair pair = build_pair(case1_params());
    Mat m;
    Vec w = pair.v;
    for (std::size_t j = 0; j < 5; ++j) {
        for (std::size_t i = 0; i < 5; ++i) m(i, j) = w[i];
        w = pair.B * w;
    }
    CHECK(m.inverse() * m == Mat::identity());
}

TEST_CASE("is_unipotent") {
    CHECK(is_unipotent(Mat::identity()));

    Mat q3 = Mat::identity();
    q3(0, 1) = 2;
    q3(3, 4) = -2;
    CHECK(is_unipotent(q3));

    HGPair pair = build_pair(case1_params());
    CHECK_FALSE(is_unipotent(pair.C));  // C^2 = I with C != I forces eigenvalue -1
}

TEST_CASE("exact_signature on fixed forms") {
    SymMat id5;
    for (std::size_t i = 0; i < 5; ++i) id5.set(i, i, 1);
    CHECK(exact_signature(id5) == Signature{5, 0, 5});

    SymMat anti;
    for (std::size_t i = 0; i < 5; ++i) anti.set(i, 4 - i, 1);
    CHECK(exact_signature(anti) == Signature{3, 2, 5});

    CHECK(exact_signature(toeplitz({5, -5, -3, 11, 5})) == Signature{3, 2, 5});
}

TEST_CASE("lattice_index") {
    CHECK(lattice_index({{{1, 0, 0}, {0, 1, 0}, {0, 0, 1}}}) == 1);
    CHECK(lattice_index({{{0, 0, -4}, {0, -4, 0}, {2, 0, 0}}}) == 32);
    CHECK(lattice_index({{{1, 2, 3}, {2, 4, 6}, {0, 0, 1}}}) == 0);
}

TEST_CASE("product and inverse algebra on random matrices") {
    std::mt19937_64 rng(20240817);
    for (int t = 0; t < 25; ++t) {
        Mat a = oracles::random_invertible(rng);
        Mat b = oracles::random_invertible(rng);
        Mat c = oracles::random_invertible(rng);
        CHECK((a * b) * c == a * (b * c));
        CHECK((a * b).inverse() == b.inverse() * a.inverse());
    }
}

TEST_CASE("signature scaling invariance") {
    std::mt19937_64 rng(7);
    for (int t = 0; t < 25; ++t) {
        SymMat s = oracles::random_symmetric(rng);
        Signature sig = exact_signature(s);
        CHECK(exact_signature(s * Rat(3, 7)) == sig);
        Signature neg = exact_signature(s * Rat(-2));
        CHECK(neg.p == sig.q);
        CHECK(neg.q == sig.p);
    }
}

TEST_CASE("signature agrees with the Sturm-count oracle") {
    std::mt19937_64 rng(123456);
    int checked = 0;
    while (checked < 100) {
        SymMat s = oracles::random_symmetric(rng);
        CHECK(exact_signature(s) == oracles::sturm_signature(s));
        ++checked;
    }
    // a few forms with deliberate rank deficiency and repeated eigenvalues
    SymMat low;
    low.set(0, 0, 4);
    low.set(1, 1, 4);
    CHECK(exact_signature(low) == oracles::sturm_signature(low));
    SymMat hyp;
    hyp.set(0, 1, 1);
    hyp.set(2, 3, 1);
    CHECK(exact_signature(hyp) == oracles::sturm_signature(hyp));
}

TEST_CASE("unipotency is conjugation invariant") {
    std::mt19937_64 rng(99);
    Mat u = Mat::identity();
    u(0, 2) = 3;
    u(1, 4) = -7;
    for (int t = 0; t < 20; ++t) {
        Mat p = oracles::random_invertible(rng);
        CHECK(is_unipotent(p.inverse() * u * p));
        Mat m = oracles::random_int_matrix(rng);
        CHECK(is_unipotent(m) == is_unipotent(p.inverse() * m * p));
    }
}
