#ifndef HGMONO_MAT_HPP
#define HGMONO_MAT_HPP

#include <array>
#include <cstddef>
#include <string>

#include "hgmono/rat.hpp"

namespace hgmono {

inline constexpr std::size_t N = 5;

using Vec = std::array<Rat, N>;

class Mat {
  public:
    Mat() = default;

    Rat& operator()(std::size_t i, std::size_t j) { return e_[i][j]; }
    const Rat& operator()(std::size_t i, std::size_t j) const { return e_[i][j]; }

    static Mat identity();
    static Mat zero();

    Mat operator*(const Mat& rhs) const;
    Mat operator+(const Mat& rhs) const;
    Mat operator-(const Mat& rhs) const;
    Mat operator-() const;
    Mat operator*(const Rat& c) const;
    Vec operator*(const Vec& v) const;
    bool operator==(const Mat& rhs) const = default;

    Mat transpose() const;
    Mat inverse() const;  // throws SingularMatrix
    Mat pow(long long k) const;
    Rat det() const;
    bool is_zero() const;
    bool is_identity() const;
    bool is_integral() const;

  private:
    std::array<std::array<Rat, N>, N> e_{};
};

// symmetric 5x5 matrix; construction validates symmetry
class SymMat {
  public:
    SymMat() : m_(Mat::zero()) {}
    explicit SymMat(const Mat& m);  // throws InvariantViolation if not symmetric

    const Rat& operator()(std::size_t i, std::size_t j) const { return m_(i, j); }
    void set(std::size_t i, std::size_t j, const Rat& v);
    const Mat& mat() const { return m_; }

    SymMat operator*(const Rat& c) const { return SymMat(m_ * c); }
    bool operator==(const SymMat& rhs) const = default;

  private:
    Mat m_;
};

struct Signature {
    int p = 0;      // positive eigenvalues
    int q = 0;      // negative eigenvalues
    int rank = 0;   // p + q
    bool operator==(const Signature&) const = default;
};

bool is_unipotent(const Mat& m);

// congruence diagonalization over Q; exact, no numerics
Signature exact_signature(const SymMat& s);

// |det| of the 3x3 integer matrix with the given rows
Int lattice_index(const std::array<std::array<Int, 3>, 3>& rows);

std::string format_mat(const Mat& m, const std::string& indent = "");

}  // namespace hgmono

#endif
