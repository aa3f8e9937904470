#ifndef HGMONO_CYCLO_HPP
#define HGMONO_CYCLO_HPP

#include <array>
#include <string>
#include <vector>

#include "hgmono/poly.hpp"
#include "hgmono/rat.hpp"

namespace hgmono {

using Params = std::array<Rat, 5>;  // sorted, entries in [0,1)

struct ParamPair {
    Params alpha;  // sum integral (f(0) = -1)
    Params beta;   // sum - 1/2 integral (g(0) = 1)
    auto operator<=>(const ParamPair&) const = default;
};

struct CensusEntry {
    ParamPair params;
    bool tau_fixed = false;
    bool monomial_pair = false;  // diagnostic: both f, g polynomials in x^5
    int table_id = 0;            // fixture lookup, 0 until reconciled
    int row_no = 0;
};

// n-th cyclotomic polynomial by exact division of x^n - 1
IntPoly cyclotomic(int n);

// product of (X - e^{2 pi i v}) assembled from cyclotomic factors
IntPoly params_to_polynomial(const std::vector<Rat>& vals);

// inverse direction by greedy cyclotomic factorization
std::vector<Rat> polynomial_to_params(const IntPoly& p);

// validates Galois closure, disjointness and the f(0) = -1 / g(0) = 1 sums
ParamPair make_param_pair(const std::vector<Rat>& alpha, const std::vector<Rat>& beta);

// scalar shift by 1/2 composed with the role swap; an involution
ParamPair tau_involution(const ParamPair& pair);

// strict alternation of alpha and beta values on [0,1)
bool interlaces(const ParamPair& pair);

// |sum_j (-1)^{j + m_j}| with m_j = #{k : beta_k < alpha_j}
Int bh_delta(const ParamPair& pair);

// all coprime (f,g) pairs before the scalar-shift quotient, sorted
std::vector<ParamPair> enumerate_raw_pairs();

// one canonical representative per tau-orbit (lex-least flat (alpha,beta)), sorted
std::vector<CensusEntry> enumerate_pairs();

struct CensusFixtureRow {
    int table_id = 0;
    int row_no = 0;
    ParamPair params;
};

std::vector<CensusFixtureRow> load_census_fixture(const std::string& path);

// matches each fixture row to an orbit representative modulo tau and fills
// table_id / row_no; throws InvariantViolation with a diff on mismatch
void reconcile_with_fixture(std::vector<CensusEntry>& entries,
                            const std::vector<CensusFixtureRow>& fixture);

std::string format_params(const Params& p);

}  // namespace hgmono

#endif
