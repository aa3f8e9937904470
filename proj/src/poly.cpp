#include "hgmono/poly.hpp"

#include <sstream>

namespace hgmono {

IntPoly::IntPoly(std::vector<Int> coeffs) : c_(std::move(coeffs)) {
    while (c_.size() > 1 && c_.back() == 0) c_.pop_back();
    if (c_.empty()) c_.push_back(0);
}

IntPoly IntPoly::x_power_minus_one(int n) {
    std::vector<Int> c(static_cast<std::size_t>(n) + 1, Int(0));
    c[0] = -1;
    c[static_cast<std::size_t>(n)] = 1;
    return IntPoly(std::move(c));
}

IntPoly IntPoly::operator*(const IntPoly& rhs) const {
    std::vector<Int> out(c_.size() + rhs.c_.size() - 1, Int(0));
    for (std::size_t i = 0; i < c_.size(); ++i) {
        if (c_[i] == 0) continue;
        for (std::size_t j = 0; j < rhs.c_.size(); ++j)
            out[i + j] += c_[i] * rhs.c_[j];
    }
    return IntPoly(std::move(out));
}

IntPoly IntPoly::divide_exact(const IntPoly& divisor) const {
    if (!divisor.monic()) throw InvariantViolation("divisor must be monic");
    int dq = degree() - divisor.degree();
    if (dq < 0) throw InvariantViolation("degree too small for exact division");
    std::vector<Int> rem = c_;
    std::vector<Int> quot(static_cast<std::size_t>(dq) + 1, Int(0));
    for (int k = dq; k >= 0; --k) {
        Int lead = rem[static_cast<std::size_t>(k + divisor.degree())];
        quot[static_cast<std::size_t>(k)] = lead;
        if (lead == 0) continue;
        for (int j = 0; j <= divisor.degree(); ++j)
            rem[static_cast<std::size_t>(k + j)] -= lead * divisor.coeff(static_cast<std::size_t>(j));
    }
    for (const Int& r : rem)
        if (r != 0) throw InvariantViolation("division is not exact");
    return IntPoly(std::move(quot));
}

bool IntPoly::divisible_by(const IntPoly& divisor) const {
    if (!divisor.monic() || degree() < divisor.degree()) return false;
    std::vector<Int> rem = c_;
    for (int k = degree() - divisor.degree(); k >= 0; --k) {
        Int lead = rem[static_cast<std::size_t>(k + divisor.degree())];
        if (lead == 0) continue;
        for (int j = 0; j <= divisor.degree(); ++j)
            rem[static_cast<std::size_t>(k + j)] -= lead * divisor.coeff(static_cast<std::size_t>(j));
    }
    for (const Int& r : rem)
        if (r != 0) return false;
    return true;
}

std::string IntPoly::str() const {
    std::ostringstream os;
    bool first = true;
    for (int i = degree(); i >= 0; --i) {
        const Int& a = c_[static_cast<std::size_t>(i)];
        if (a == 0 && degree() > 0) continue;
        Int mag = a < 0 ? Int(-a) : a;
        if (first) {
            if (a < 0) os << "-";
            first = false;
        } else {
            os << (a < 0 ? " - " : " + ");
        }
        if (i == 0 || mag != 1) os << mag.str();
        if (i > 0) {
            os << "x";
            if (i > 1) os << "^" << i;
        }
    }
    return os.str();
}

bool coprime(const IntPoly& f, const IntPoly& g) {
    // Euclid over Q on rational coefficient vectors
    std::vector<Rat> a(f.coeffs().begin(), f.coeffs().end());
    std::vector<Rat> b(g.coeffs().begin(), g.coeffs().end());
    auto deg = [](const std::vector<Rat>& p) {
        for (std::size_t i = p.size(); i-- > 0;)
            if (p[i] != 0) return static_cast<int>(i);
        return -1;
    };
    while (true) {
        int db = deg(b);
        if (db < 0) return deg(a) <= 0;
        if (db == 0) return true;
        int da = deg(a);
        while (da >= db) {
            Rat q = a[static_cast<std::size_t>(da)] / b[static_cast<std::size_t>(db)];
            for (int j = 0; j <= db; ++j)
                a[static_cast<std::size_t>(da - db + j)] -= q * b[static_cast<std::size_t>(j)];
            da = deg(a);
        }
        std::swap(a, b);
    }
}

}  // namespace hgmono
