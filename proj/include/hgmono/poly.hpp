#ifndef HGMONO_POLY_HPP
#define HGMONO_POLY_HPP

#include <string>
#include <vector>

#include "hgmono/rat.hpp"

namespace hgmono {

// integer polynomial, coefficients constant term first
class IntPoly {
  public:
    IntPoly() : c_{0} {}
    explicit IntPoly(std::vector<Int> coeffs);
    static IntPoly one() { return IntPoly({Int(1)}); }
    static IntPoly x_power_minus_one(int n);  // x^n - 1

    int degree() const { return static_cast<int>(c_.size()) - 1; }
    const Int& coeff(std::size_t i) const { return c_[i]; }
    const std::vector<Int>& coeffs() const { return c_; }
    bool monic() const { return c_.back() == 1; }

    IntPoly operator*(const IntPoly& rhs) const;
    bool operator==(const IntPoly&) const = default;

    // exact division; throws InvariantViolation if not divisible over Z
    IntPoly divide_exact(const IntPoly& divisor) const;
    bool divisible_by(const IntPoly& divisor) const;

    Int eval_at_zero() const { return c_[0]; }
    std::string str() const;  // human-readable, x as variable

  private:
    std::vector<Int> c_;  // normalized: no trailing zeros (except the zero poly)
};

// true iff gcd(f, g) = 1 over Q
bool coprime(const IntPoly& f, const IntPoly& g);

}  // namespace hgmono

#endif
