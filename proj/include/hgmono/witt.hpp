#ifndef HGMONO_WITT_HPP
#define HGMONO_WITT_HPP

#include <array>
#include <optional>
#include <string>
#include <vector>

#include "hgmono/mat.hpp"

namespace hgmono {

enum class WittKind { Rank2, Rank1 };

struct WittBasis {
    Mat X;          // columns eps1, eps2, eps3, eps2*, eps1*
    WittKind kind = WittKind::Rank2;
    SymMat G;       // X^t Q X
    Rat lambda1, lambda2, lambda3;  // Rank2: G(1,5), G(2,4), G(3,3)
};

struct FlagCoords {
    Rat s, x, y;  // entries u(1,2), u(1,3), u(1,4) in the eps-basis
    bool operator==(const FlagCoords&) const = default;
};

enum class RootKind { Highest, SecondHighest };

// primitive integer vector w with w^t Q w = 0, by iterative-deepening
// search over sup-norm balls (bounds 1, 2, 4, ...), lexicographic order
std::array<Int, 5> find_isotropic(const SymMat& Q);

// Legendre's criterion for d1 x^2 + d2 y^2 + d3 z^2 isotropic over Q
bool ternary_isotropic(const Rat& d1, const Rat& d2, const Rat& d3);

// 0 definite, 1 isotropic lines only, 2 totally isotropic plane
int q_rank(const SymMat& Q);

// builds a basis exhibiting the Q-rank: anti-diagonal-with-center (Rank2)
// or hyperbolic corners plus anisotropic middle block (Rank1)
WittBasis witt_basis(const SymMat& Q);

// constructs a WittBasis record around a given X (certificate verification);
// throws InvariantViolation when X^t Q X has neither expected shape
WittBasis witt_basis_from(const SymMat& Q, const Mat& X);

struct NotMember {
    std::string reason;
};

// member iff u - I is supported on the flag positions and u^t G u = G
std::optional<FlagCoords> flag_membership(const Mat& u, const WittBasis& basis,
                                          NotMember* why = nullptr);

// returns the root-group parameter x, or nullopt with the violated relation
std::optional<Rat> root_group_membership(const Mat& u, const WittBasis& basis,
                                         RootKind which, NotMember* why = nullptr);

// exposed for tests: factorization-backed squarefree part of a nonzero rational
Int squarefree_part(const Rat& r);
std::vector<std::pair<Int, int>> factorize(Int n);

}  // namespace hgmono

#endif
