#include "hgmono/witt.hpp"

#include <algorithm>
#include <boost/multiprecision/cpp_int.hpp>

namespace hgmono {

namespace mp = boost::multiprecision;

namespace {

bool miller_rabin(const Int& n) {
    if (n < 2) return false;
    for (int p : {2, 3, 5, 7, 11, 13, 17, 19, 23, 29, 31, 37}) {
        if (n == p) return true;
        if (n % p == 0) return false;
    }
    Int d = n - 1;
    int r = 0;
    while (d % 2 == 0) {
        d /= 2;
        ++r;
    }
    for (int a : {2, 3, 5, 7, 11, 13, 17, 19, 23, 29, 31, 37}) {
        Int x = mp::powm(Int(a), d, n);
        if (x == 1 || x == n - 1) continue;
        bool witness = true;
        for (int i = 1; i < r; ++i) {
            x = x * x % n;
            if (x == n - 1) {
                witness = false;
                break;
            }
        }
        if (witness) return false;
    }
    return true;
}

Int pollard_rho(const Int& n) {
    if (n % 2 == 0) return 2;
    for (Int c = 1;; ++c) {
        auto step = [&](const Int& x) { return (x * x + c) % n; };
        Int x = 2, y = 2, d = 1;
        while (d == 1) {
            x = step(x);
            y = step(step(y));
            d = mp::gcd(x > y ? x - y : y - x, n);
        }
        if (d != n) return d;
    }
}

void factor_into(Int n, std::vector<std::pair<Int, int>>& out) {
    if (n == 1) return;
    if (miller_rabin(n)) {
        out.emplace_back(n, 1);
        return;
    }
    Int d = pollard_rho(n);
    factor_into(d, out);
    factor_into(n / d, out);
}

int legendre(Int a, const Int& p) {
    a %= p;
    if (a < 0) a += p;
    if (a == 0) return 0;
    Int e = mp::powm(a, (p - 1) / 2, p);
    return e == 1 ? 1 : -1;
}

// search over sup-norm balls in n dimensions; returns first hit in
// lexicographic order at the successful bound
std::vector<Int> find_isotropic_n(const std::vector<std::vector<Rat>>& Q, std::size_t n) {
    for (Int bound = 1;; bound *= 2) {
        std::vector<Int> w(n, -bound);
        while (true) {
            bool zero = std::all_of(w.begin(), w.end(), [](const Int& x) { return x == 0; });
            if (!zero) {
                Rat val = 0;
                for (std::size_t i = 0; i < n; ++i) {
                    if (w[i] == 0) continue;
                    for (std::size_t j = 0; j < n; ++j)
                        val += Rat(w[i] * w[j]) * Q[i][j];
                }
                if (val == 0) {
                    Int g = 0;
                    for (const Int& x : w) g = mp::gcd(g, x);
                    for (Int& x : w) x /= g;
                    for (const Int& x : w) {
                        if (x == 0) continue;
                        if (x < 0)
                            for (Int& y : w) y = -y;
                        break;
                    }
                    return w;
                }
            }
            std::size_t k = n;
            while (k > 0 && w[k - 1] == bound) w[--k] = -bound;
            if (k == 0) break;
            ++w[k - 1];
        }
    }
}

struct Diagonalized {
    std::vector<Rat> diag;
    std::vector<std::vector<Rat>> basis;  // columns of the congruence transform
};

// symmetric congruence diagonalization, tracking the basis columns
Diagonalized diagonalize(std::vector<std::vector<Rat>> S) {
    std::size_t n = S.size();
    std::vector<std::vector<Rat>> T(n, std::vector<Rat>(n, Rat(0)));
    for (std::size_t i = 0; i < n; ++i) T[i][i] = 1;
    auto swap_cols = [&](std::size_t i, std::size_t j) {
        for (std::size_t t = 0; t < n; ++t) std::swap(S[i][t], S[j][t]);
        for (std::size_t t = 0; t < n; ++t) std::swap(S[t][i], S[t][j]);
        for (std::size_t t = 0; t < n; ++t) std::swap(T[t][i], T[t][j]);
    };
    for (std::size_t k = 0; k < n; ++k) {
        if (S[k][k] == 0) {
            std::size_t j = k + 1;
            while (j < n && S[j][j] == 0) ++j;
            if (j < n) {
                swap_cols(k, j);
            } else {
                j = k + 1;
                while (j < n && S[k][j] == 0) ++j;
                if (j == n) continue;
                for (std::size_t t = 0; t < n; ++t) S[k][t] += S[j][t];
                for (std::size_t t = 0; t < n; ++t) S[t][k] += S[t][j];
                for (std::size_t t = 0; t < n; ++t) T[t][k] += T[t][j];
            }
        }
        Rat piv = S[k][k];
        for (std::size_t i = k + 1; i < n; ++i) {
            if (S[i][k] == 0) continue;
            Rat f = S[i][k] / piv;
            for (std::size_t t = 0; t < n; ++t) S[i][t] -= f * S[k][t];
            for (std::size_t t = 0; t < n; ++t) S[t][i] -= f * S[t][k];
            for (std::size_t t = 0; t < n; ++t) T[t][i] -= f * T[t][k];
        }
    }
    Diagonalized out;
    for (std::size_t k = 0; k < n; ++k) out.diag.push_back(S[k][k]);
    out.basis = std::move(T);
    return out;
}

Rat bilinear(const SymMat& Q, const Vec& u, const Vec& w) {
    Rat out = 0;
    for (std::size_t i = 0; i < N; ++i) {
        if (u[i] == 0) continue;
        for (std::size_t j = 0; j < N; ++j) out += u[i] * Q(i, j) * w[j];
    }
    return out;
}

// basis of {x : B(w_r, x) = 0 for all rows}, rows given as ambient vectors
std::vector<Vec> orthogonal_complement(const SymMat& Q, const std::vector<Vec>& rows) {
    // kernel of the (rows x 5) matrix with entries B(row_r, e_j)
    std::size_t m = rows.size();
    std::vector<std::vector<Rat>> a(m, std::vector<Rat>(N, Rat(0)));
    for (std::size_t r = 0; r < m; ++r)
        for (std::size_t j = 0; j < N; ++j)
            for (std::size_t i = 0; i < N; ++i) a[r][j] += rows[r][i] * Q(i, j);
    std::vector<std::size_t> pivots;
    std::size_t rank = 0;
    for (std::size_t col = 0; col < N && rank < m; ++col) {
        std::size_t piv = rank;
        while (piv < m && a[piv][col] == 0) ++piv;
        if (piv == m) continue;
        std::swap(a[piv], a[rank]);
        Rat d = a[rank][col];
        for (std::size_t j = 0; j < N; ++j) a[rank][j] /= d;
        for (std::size_t i = 0; i < m; ++i) {
            if (i == rank || a[i][col] == 0) continue;
            Rat f = a[i][col];
            for (std::size_t j = 0; j < N; ++j) a[i][j] -= f * a[rank][j];
        }
        pivots.push_back(col);
        ++rank;
    }
    std::vector<Vec> kernel;
    for (std::size_t col = 0; col < N; ++col) {
        if (std::find(pivots.begin(), pivots.end(), col) != pivots.end()) continue;
        Vec v{};
        v[col] = 1;
        for (std::size_t r = 0; r < rank; ++r) v[pivots[r]] = -a[r][col];
        kernel.push_back(v);
    }
    return kernel;
}

Vec to_vec(const std::vector<Int>& w) {
    Vec v{};
    for (std::size_t i = 0; i < w.size() && i < N; ++i) v[i] = Rat(w[i]);
    return v;
}

// hyperbolic partner: isotropic u' with B(w, u') = B(w, u), built from u
Vec hyperbolic_partner(const SymMat& Q, const Vec& w, const Vec& u) {
    Rat c = bilinear(Q, u, u) / (2 * bilinear(Q, w, u));
    Vec out;
    for (std::size_t i = 0; i < N; ++i) out[i] = u[i] - c * w[i];
    return out;
}

struct Rank1Shape {
    bool ok = false;
    std::vector<std::vector<Rat>> middle;  // 3x3 block
};

bool rank2_shape(const SymMat& G) {
    for (std::size_t i = 0; i < N; ++i)
        for (std::size_t j = 0; j < N; ++j) {
            bool anti = (i + j == 4);
            if (anti != (G(i, j) != 0)) return false;
        }
    return true;
}

Rank1Shape rank1_shape(const SymMat& G) {
    Rank1Shape s;
    for (std::size_t i = 0; i < N; ++i)
        for (std::size_t j = 0; j < N; ++j) {
            if (i >= 1 && i <= 3 && j >= 1 && j <= 3) continue;
            bool corner = (i == 0 && j == 4) || (i == 4 && j == 0);
            if (corner != (G(i, j) != 0)) return s;
        }
    s.middle.assign(3, std::vector<Rat>(3));
    for (std::size_t i = 0; i < 3; ++i)
        for (std::size_t j = 0; j < 3; ++j) s.middle[i][j] = G(i + 1, j + 1);
    s.ok = true;
    return s;
}

bool middle_anisotropic(const std::vector<std::vector<Rat>>& middle) {
    Diagonalized d = diagonalize(middle);
    return !ternary_isotropic(d.diag[0], d.diag[1], d.diag[2]);
}

WittBasis finish(const SymMat& Q, const Mat& X, WittKind kind) {
    WittBasis basis;
    basis.X = X;
    basis.kind = kind;
    basis.G = SymMat(X.transpose() * Q.mat() * X);
    if (kind == WittKind::Rank2) {
        basis.lambda1 = basis.G(0, 4);
        basis.lambda2 = basis.G(1, 3);
        basis.lambda3 = basis.G(2, 2);
    }
    return basis;
}

}  // namespace

std::vector<std::pair<Int, int>> factorize(Int n) {
    if (n <= 0) throw ZeroCoefficient("factorize expects a positive integer");
    std::vector<std::pair<Int, int>> flat;
    for (int p = 2; p < 10000 && Int(p) * p <= n; ++p)
        while (n % p == 0) {
            flat.emplace_back(p, 1);
            n /= p;
        }
    factor_into(n, flat);
    std::sort(flat.begin(), flat.end());
    std::vector<std::pair<Int, int>> out;
    for (const auto& [p, e] : flat) {
        if (!out.empty() && out.back().first == p) out.back().second += e;
        else out.emplace_back(p, e);
    }
    return out;
}

Int squarefree_part(const Rat& r) {
    if (r == 0) throw ZeroCoefficient("squarefree part of zero");
    Int n = rat_num(r) * rat_den(r);  // same square class as r
    int sign = n < 0 ? -1 : 1;
    if (n < 0) n = -n;
    Int out = sign;
    for (const auto& [p, e] : factorize(n))
        if (e % 2) out *= p;
    return out;
}

bool ternary_isotropic(const Rat& d1, const Rat& d2, const Rat& d3) {
    if (d1 == 0 || d2 == 0 || d3 == 0)
        throw ZeroCoefficient("ternary form has a zero coefficient");
    Int a = squarefree_part(d1), b = squarefree_part(d2), c = squarefree_part(d3);
    // make a, b, c pairwise coprime, preserving solvability
    bool changed = true;
    while (changed) {
        changed = false;
        auto reduce = [&](Int& u, Int& v, Int& w) {
            Int g = mp::gcd(u < 0 ? Int(-u) : u, v < 0 ? Int(-v) : v);
            if (g > 1) {
                u /= g;
                v /= g;
                w = squarefree_part(Rat(w * g));
                changed = true;
            }
        };
        reduce(a, b, c);
        reduce(a, c, b);
        reduce(b, c, a);
    }
    if ((a > 0) == (b > 0) && (b > 0) == (c > 0)) return false;  // definite
    auto residue_ok = [](const Int& t, const Int& mod) {
        Int m = mod < 0 ? Int(-mod) : mod;
        for (const auto& [p, e] : factorize(m)) {
            (void)e;
            if (p == 2) continue;
            if (legendre(t, p) == -1) return false;
        }
        return true;
    };
    return residue_ok(-b * c, a) && residue_ok(-a * c, b) && residue_ok(-a * b, c);
}

std::array<Int, 5> find_isotropic(const SymMat& Q) {
    Signature sig = exact_signature(Q);
    if (sig.p == sig.rank || sig.q == sig.rank)
        throw DefiniteForm("definite form has no isotropic vector");
    std::vector<std::vector<Rat>> q(N, std::vector<Rat>(N));
    for (std::size_t i = 0; i < N; ++i)
        for (std::size_t j = 0; j < N; ++j) q[i][j] = Q(i, j);
    std::vector<Int> w = find_isotropic_n(q, N);
    std::array<Int, 5> out;
    std::copy(w.begin(), w.end(), out.begin());
    return out;
}

int q_rank(const SymMat& Q) {
    Signature sig = exact_signature(Q);
    if (sig.rank != 5) throw DegenerateForm("q_rank expects a nondegenerate form");
    if (sig.p == 5 || sig.q == 5) return 0;
    return witt_basis(Q).kind == WittKind::Rank2 ? 2 : 1;
}

WittBasis witt_basis(const SymMat& Q) {
    Signature sig = exact_signature(Q);
    if (sig.rank != 5 || sig.p == 5 || sig.q == 5)
        throw DegenerateForm("witt_basis expects a nondegenerate indefinite form");
    std::array<Int, 5> w1 = find_isotropic(Q);
    Vec eps1 = to_vec({w1.begin(), w1.end()});
    // partner with nonzero pairing, from the standard basis
    Vec u{};
    for (std::size_t j = 0; j < N; ++j) {
        Vec ej{};
        ej[j] = 1;
        if (bilinear(Q, eps1, ej) != 0) {
            u = ej;
            break;
        }
    }
    Vec eps1s = hyperbolic_partner(Q, eps1, u);
    std::vector<Vec> compl3 = orthogonal_complement(Q, {eps1, eps1s});
    if (compl3.size() != 3) throw InvariantViolation("complement is not 3-dimensional");
    // restricted 3x3 form
    std::vector<std::vector<Rat>> S(3, std::vector<Rat>(3));
    for (std::size_t i = 0; i < 3; ++i)
        for (std::size_t j = 0; j < 3; ++j) S[i][j] = bilinear(Q, compl3[i], compl3[j]);
    Diagonalized d = diagonalize(S);
    auto ambient = [&](const std::vector<Rat>& coords) {
        Vec v{};
        for (std::size_t i = 0; i < 3; ++i)
            for (std::size_t t = 0; t < N; ++t) v[t] += coords[i] * compl3[i][t];
        return v;
    };
    Mat X;
    auto set_col = [&](std::size_t j, const Vec& v) {
        for (std::size_t i = 0; i < N; ++i) X(i, j) = v[i];
    };
    set_col(0, eps1);
    set_col(4, eps1s);
    if (ternary_isotropic(d.diag[0], d.diag[1], d.diag[2])) {
        std::vector<Int> w2c = find_isotropic_n(S, 3);
        std::vector<Rat> w2r(w2c.begin(), w2c.end());
        Vec eps2 = ambient(w2r);
        Vec u2{};
        for (std::size_t j = 0; j < 3; ++j) {
            std::vector<Rat> ej(3, Rat(0));
            ej[j] = 1;
            Vec cand = ambient(ej);
            if (bilinear(Q, eps2, cand) != 0) {
                u2 = cand;
                break;
            }
        }
        Vec eps2s = hyperbolic_partner(Q, eps2, u2);
        std::vector<Vec> line = orthogonal_complement(Q, {eps1, eps1s, eps2, eps2s});
        if (line.size() != 1) throw InvariantViolation("anisotropic line not found");
        set_col(1, eps2);
        set_col(2, line[0]);
        set_col(3, eps2s);
        return finish(Q, X, WittKind::Rank2);
    }
    // Rank1: diagonalized anisotropic complement in the middle
    for (std::size_t j = 0; j < 3; ++j) {
        std::vector<Rat> col(3);
        for (std::size_t i = 0; i < 3; ++i) col[i] = d.basis[i][j];
        set_col(j + 1, ambient(col));
    }
    return finish(Q, X, WittKind::Rank1);
}

WittBasis witt_basis_from(const SymMat& Q, const Mat& X) {
    if (X.det() == 0) throw InvariantViolation("change of basis is singular");
    SymMat G(X.transpose() * Q.mat() * X);
    if (rank2_shape(G)) return finish(Q, X, WittKind::Rank2);
    Rank1Shape s = rank1_shape(G);
    if (s.ok && middle_anisotropic(s.middle)) return finish(Q, X, WittKind::Rank1);
    throw InvariantViolation("X^t Q X has neither Witt shape");
}

std::optional<FlagCoords> flag_membership(const Mat& u, const WittBasis& basis,
                                          NotMember* why) {
    auto fail = [&](const std::string& reason) -> std::optional<FlagCoords> {
        if (why) why->reason = reason;
        return std::nullopt;
    };
    for (std::size_t i = 0; i < N; ++i)
        if (u(i, i) != 1) return fail("diagonal entry != 1");
    for (std::size_t i = 0; i < N; ++i)
        for (std::size_t j = 0; j < N; ++j) {
            if (i == j || u(i, j) == 0) continue;
            bool allowed = (i == 0) || (j == 4 && i < 4);
            if (!allowed)
                return fail("support outside the unipotent radical at (" +
                            std::to_string(i + 1) + "," + std::to_string(j + 1) + ")");
        }
    if (!(u.transpose() * basis.G.mat() * u == basis.G.mat()))
        return fail("u does not preserve G");
    return FlagCoords{u(0, 1), u(0, 2), u(0, 3)};
}

std::optional<Rat> root_group_membership(const Mat& u, const WittBasis& basis,
                                         RootKind which, NotMember* why) {
    auto fail = [&](const std::string& reason) -> std::optional<Rat> {
        if (why) why->reason = reason;
        return std::nullopt;
    };
    if (basis.kind != WittKind::Rank2) return fail("basis is not Q-rank two");
    Mat d = u - Mat::identity();
    if (which == RootKind::Highest) {
        for (std::size_t i = 0; i < N; ++i)
            for (std::size_t j = 0; j < N; ++j) {
                if ((i == 0 && j == 3) || (i == 1 && j == 4)) continue;
                if (d(i, j) != 0) return fail("support outside the highest root group");
            }
        Rat x = d(0, 3);
        if (x == 0) return fail("trivial highest-root parameter");
        if (d(1, 4) != -(basis.lambda1 / basis.lambda2) * x)
            return fail("highest-root lambda relation fails");
        return x;
    }
    for (std::size_t i = 0; i < N; ++i)
        for (std::size_t j = 0; j < N; ++j) {
            if ((i == 0 && j == 2) || (i == 2 && j == 4) || (i == 0 && j == 4)) continue;
            if (d(i, j) != 0) return fail("support outside the second-highest root group");
        }
    Rat x = d(0, 2);
    if (x == 0) return fail("trivial second-highest-root parameter");
    if (d(2, 4) != -(basis.lambda1 / basis.lambda3) * x)
        return fail("second-highest-root lambda relation fails");
    if (d(0, 4) != -(basis.lambda1 / (2 * basis.lambda3)) * x * x)
        return fail("second-highest-root corner relation fails");
    return x;
}

}  // namespace hgmono
