#include "hgmono/mat.hpp"

#include <sstream>

namespace hgmono {

Mat Mat::identity() {
    Mat m;
    for (std::size_t i = 0; i < N; ++i) m.e_[i][i] = 1;
    return m;
}

Mat Mat::zero() { return Mat(); }

Mat Mat::operator*(const Mat& rhs) const {
    Mat out;
    for (std::size_t i = 0; i < N; ++i)
        for (std::size_t k = 0; k < N; ++k) {
            if (e_[i][k] == 0) continue;
            for (std::size_t j = 0; j < N; ++j)
                out.e_[i][j] += e_[i][k] * rhs.e_[k][j];
        }
    return out;
}

Mat Mat::operator+(const Mat& rhs) const {
    Mat out;
    for (std::size_t i = 0; i < N; ++i)
        for (std::size_t j = 0; j < N; ++j) out.e_[i][j] = e_[i][j] + rhs.e_[i][j];
    return out;
}

Mat Mat::operator-(const Mat& rhs) const {
    Mat out;
    for (std::size_t i = 0; i < N; ++i)
        for (std::size_t j = 0; j < N; ++j) out.e_[i][j] = e_[i][j] - rhs.e_[i][j];
    return out;
}

Mat Mat::operator-() const {
    Mat out;
    for (std::size_t i = 0; i < N; ++i)
        for (std::size_t j = 0; j < N; ++j) out.e_[i][j] = -e_[i][j];
    return out;
}

Mat Mat::operator*(const Rat& c) const {
    Mat out;
    for (std::size_t i = 0; i < N; ++i)
        for (std::size_t j = 0; j < N; ++j) out.e_[i][j] = e_[i][j] * c;
    return out;
}

Vec Mat::operator*(const Vec& v) const {
    Vec out{};
    for (std::size_t i = 0; i < N; ++i)
        for (std::size_t j = 0; j < N; ++j) out[i] += e_[i][j] * v[j];
    return out;
}

Mat Mat::transpose() const {
    Mat out;
    for (std::size_t i = 0; i < N; ++i)
        for (std::size_t j = 0; j < N; ++j) out.e_[j][i] = e_[i][j];
    return out;
}

Mat Mat::inverse() const {
    // Gauss-Jordan with partial (first nonzero) pivoting
    Mat a = *this;
    Mat inv = identity();
    for (std::size_t col = 0; col < N; ++col) {
        std::size_t piv = col;
        while (piv < N && a.e_[piv][col] == 0) ++piv;
        if (piv == N) throw SingularMatrix("matrix is singular");
        if (piv != col) {
            std::swap(a.e_[piv], a.e_[col]);
            std::swap(inv.e_[piv], inv.e_[col]);
        }
        Rat d = a.e_[col][col];
        for (std::size_t j = 0; j < N; ++j) {
            a.e_[col][j] /= d;
            inv.e_[col][j] /= d;
        }
        for (std::size_t i = 0; i < N; ++i) {
            if (i == col || a.e_[i][col] == 0) continue;
            Rat f = a.e_[i][col];
            for (std::size_t j = 0; j < N; ++j) {
                a.e_[i][j] -= f * a.e_[col][j];
                inv.e_[i][j] -= f * inv.e_[col][j];
            }
        }
    }
    return inv;
}

Mat Mat::pow(long long k) const {
    Mat base = k < 0 ? inverse() : *this;
    unsigned long long n = k < 0 ? static_cast<unsigned long long>(-(k + 1)) + 1
                                 : static_cast<unsigned long long>(k);
    Mat out = identity();
    while (n > 0) {
        if (n & 1) out = out * base;
        base = base * base;
        n >>= 1;
    }
    return out;
}

Rat Mat::det() const {
    Mat a = *this;
    Rat d = 1;
    for (std::size_t col = 0; col < N; ++col) {
        std::size_t piv = col;
        while (piv < N && a.e_[piv][col] == 0) ++piv;
        if (piv == N) return 0;
        if (piv != col) {
            std::swap(a.e_[piv], a.e_[col]);
            d = -d;
        }
        d *= a.e_[col][col];
        for (std::size_t i = col + 1; i < N; ++i) {
            if (a.e_[i][col] == 0) continue;
            Rat f = a.e_[i][col] / a.e_[col][col];
            for (std::size_t j = col; j < N; ++j) a.e_[i][j] -= f * a.e_[col][j];
        }
    }
    return d;
}

bool Mat::is_zero() const {
    for (std::size_t i = 0; i < N; ++i)
        for (std::size_t j = 0; j < N; ++j)
            if (e_[i][j] != 0) return false;
    return true;
}

bool Mat::is_identity() const { return *this == identity(); }

bool Mat::is_integral() const {
    for (std::size_t i = 0; i < N; ++i)
        for (std::size_t j = 0; j < N; ++j)
            if (rat_den(e_[i][j]) != 1) return false;
    return true;
}

SymMat::SymMat(const Mat& m) : m_(m) {
    for (std::size_t i = 0; i < N; ++i)
        for (std::size_t j = i + 1; j < N; ++j)
            if (m_(i, j) != m_(j, i)) throw InvariantViolation("matrix is not symmetric");
}

void SymMat::set(std::size_t i, std::size_t j, const Rat& v) {
    m_(i, j) = v;
    m_(j, i) = v;
}

bool is_unipotent(const Mat& m) {
    Mat d = m - Mat::identity();
    return (d * d * d * d * d).is_zero();
}

Signature exact_signature(const SymMat& s) {
    Mat a = s.mat();
    Signature sig;
    for (std::size_t k = 0; k < N; ++k) {
        if (a(k, k) == 0) {
            // bring a nonzero entry onto the pivot: prefer a later diagonal,
            // otherwise couple with a row that meets column k
            std::size_t j = k + 1;
            while (j < N && a(j, j) == 0) ++j;
            if (j < N) {
                for (std::size_t t = 0; t < N; ++t) std::swap(a(k, t), a(j, t));
                for (std::size_t t = 0; t < N; ++t) std::swap(a(t, k), a(t, j));
            } else {
                j = k + 1;
                while (j < N && a(k, j) == 0) ++j;
                if (j == N) continue;  // zero row: rank drops
                for (std::size_t t = 0; t < N; ++t) a(k, t) += a(j, t);
                for (std::size_t t = 0; t < N; ++t) a(t, k) += a(t, j);
            }
        }
        Rat piv = a(k, k);
        for (std::size_t i = k + 1; i < N; ++i) {
            if (a(i, k) == 0) continue;
            Rat f = a(i, k) / piv;
            for (std::size_t t = 0; t < N; ++t) a(i, t) -= f * a(k, t);
            for (std::size_t t = 0; t < N; ++t) a(t, i) -= f * a(t, k);
        }
        if (piv > 0) ++sig.p;
        else ++sig.q;
    }
    sig.rank = sig.p + sig.q;
    return sig;
}

Int lattice_index(const std::array<std::array<Int, 3>, 3>& r) {
    Int d = r[0][0] * (r[1][1] * r[2][2] - r[1][2] * r[2][1])
          - r[0][1] * (r[1][0] * r[2][2] - r[1][2] * r[2][0])
          + r[0][2] * (r[1][0] * r[2][1] - r[1][1] * r[2][0]);
    return d < 0 ? Int(-d) : d;
}

std::string format_mat(const Mat& m, const std::string& indent) {
    std::ostringstream os;
    for (std::size_t i = 0; i < N; ++i) {
        os << indent;
        for (std::size_t j = 0; j < N; ++j) {
            if (j) os << ' ';
            os << format_rat(m(i, j));
        }
        os << '\n';
    }
    return os.str();
}

}  // namespace hgmono
