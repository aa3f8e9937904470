#include "hgmono/cyclo.hpp"

#include <algorithm>
#include <fstream>
#include <map>
#include <numeric>
#include <sstream>

namespace hgmono {

namespace {

int euler_phi(int n) {
    int result = n;
    for (int p = 2; p * p <= n; ++p) {
        if (n % p) continue;
        while (n % p == 0) n /= p;
        result -= result / p;
    }
    if (n > 1) result -= result / n;
    return result;
}

// Phi indices usable in a degree-5 product: phi(n) <= 4
const std::vector<int> kCensusPhiIndices = {1, 2, 3, 4, 5, 6, 8, 10, 12};

std::vector<Rat> orbit(int n) {
    std::vector<Rat> out;
    for (int k = 0; k < n; ++k)
        if (std::gcd(k == 0 ? n : k, n) == 1) out.emplace_back(Int(k), Int(n));
    std::sort(out.begin(), out.end());
    return out;
}

Params to_params(std::vector<Rat> v) {
    if (v.size() != 5) throw NotGaloisClosed("expected 5 parameters");
    std::sort(v.begin(), v.end());
    Params p;
    std::copy(v.begin(), v.end(), p.begin());
    return p;
}

// multisets of Phi indices with total degree 5, as sorted index lists
std::vector<std::vector<int>> degree5_products() {
    std::vector<std::vector<int>> out;
    std::vector<int> cur;
    auto rec = [&](auto&& self, std::size_t start, int remaining) -> void {
        if (remaining == 0) {
            out.push_back(cur);
            return;
        }
        for (std::size_t i = start; i < kCensusPhiIndices.size(); ++i) {
            int n = kCensusPhiIndices[i];
            int d = euler_phi(n);
            if (d > remaining) continue;
            cur.push_back(n);
            self(self, i, remaining - d);
            cur.pop_back();
        }
    };
    rec(rec, 0, 5);
    return out;
}

Params product_params(const std::vector<int>& ns) {
    std::vector<Rat> vals;
    for (int n : ns)
        for (const Rat& r : orbit(n)) vals.push_back(r);
    return to_params(std::move(vals));
}

bool sum_integral(const Params& p, const Rat& offset) {
    Rat s = -offset;
    for (const Rat& v : p) s += v;
    return rat_den(s) == 1;
}

}  // namespace

IntPoly cyclotomic(int n) {
    if (n < 1) throw InvariantViolation("cyclotomic index must be positive");
    IntPoly p = IntPoly::x_power_minus_one(n);
    for (int d = 1; d < n; ++d)
        if (n % d == 0) p = p.divide_exact(cyclotomic(d));
    return p;
}

IntPoly params_to_polynomial(const std::vector<Rat>& vals) {
    std::map<Rat, int> mult;
    for (const Rat& v : vals) {
        if (v < 0 || v >= 1) throw NotGaloisClosed("parameter outside [0,1)");
        ++mult[v];
    }
    IntPoly p = IntPoly::one();
    while (!mult.empty()) {
        Rat least = mult.begin()->first;
        int n = static_cast<int>(rat_den(least));
        for (const Rat& r : orbit(n)) {
            auto it = mult.find(r);
            if (it == mult.end())
                throw NotGaloisClosed("incomplete orbit for denominator " + std::to_string(n));
            if (--it->second == 0) mult.erase(it);
        }
        p = p * cyclotomic(n);
    }
    return p;
}

std::vector<Rat> polynomial_to_params(const IntPoly& p) {
    if (p.degree() != 5 || !p.monic())
        throw NotCyclotomicProduct("expected a monic degree-5 polynomial");
    IntPoly rem = p;
    std::vector<Rat> out;
    for (int n : kCensusPhiIndices) {
        IntPoly phi = cyclotomic(n);
        while (rem.degree() >= phi.degree() && rem.divisible_by(phi)) {
            rem = rem.divide_exact(phi);
            for (const Rat& r : orbit(n)) out.push_back(r);
        }
    }
    if (rem != IntPoly::one())
        throw NotCyclotomicProduct("non-cyclotomic factor remains: " + rem.str());
    std::sort(out.begin(), out.end());
    return out;
}

ParamPair make_param_pair(const std::vector<Rat>& alpha, const std::vector<Rat>& beta) {
    ParamPair pair{to_params(alpha), to_params(beta)};
    IntPoly f = params_to_polynomial(alpha);  // validates Galois closure
    IntPoly g = params_to_polynomial(beta);
    if (!sum_integral(pair.alpha, Rat(0)))
        throw NotGaloisClosed("alpha does not satisfy f(0) = -1");
    if (!sum_integral(pair.beta, Rat(1, 2)))
        throw NotGaloisClosed("beta does not satisfy g(0) = 1");
    if (!coprime(f, g)) throw NotGaloisClosed("alpha and beta share a root");
    return pair;
}

ParamPair tau_involution(const ParamPair& pair) {
    auto shift = [](const Params& p) {
        std::vector<Rat> out;
        for (const Rat& v : p) {
            Rat s = v + Rat(1, 2);
            if (s >= 1) s -= 1;
            out.push_back(s);
        }
        return out;
    };
    return ParamPair{to_params(shift(pair.beta)), to_params(shift(pair.alpha))};
}

bool interlaces(const ParamPair& pair) {
    std::vector<std::pair<Rat, int>> merged;
    for (const Rat& a : pair.alpha) merged.emplace_back(a, 0);
    for (const Rat& b : pair.beta) merged.emplace_back(b, 1);
    std::sort(merged.begin(), merged.end());
    for (std::size_t i = 1; i < merged.size(); ++i) {
        if (merged[i].second == merged[i - 1].second) return false;
        if (merged[i].first == merged[i - 1].first) return false;
    }
    return true;
}

Int bh_delta(const ParamPair& pair) {
    Int total = 0;
    for (std::size_t j = 0; j < 5; ++j) {
        int m = 0;
        for (const Rat& b : pair.beta)
            if (b < pair.alpha[j]) ++m;
        total += ((static_cast<int>(j) + 1 + m) % 2 == 0) ? 1 : -1;
    }
    return total < 0 ? Int(-total) : total;
}

std::vector<ParamPair> enumerate_raw_pairs() {
    std::vector<std::pair<Params, IntPoly>> fs, gs;
    for (const auto& ns : degree5_products()) {
        int phi1_mult = static_cast<int>(std::count(ns.begin(), ns.end(), 1));
        Params p = product_params(ns);
        std::vector<Rat> vals(p.begin(), p.end());
        IntPoly poly = params_to_polynomial(vals);
        if (phi1_mult % 2 == 1) fs.emplace_back(p, poly);
        else gs.emplace_back(p, poly);
    }
    std::vector<ParamPair> out;
    for (const auto& [al, f] : fs)
        for (const auto& [be, g] : gs)
            if (coprime(f, g)) out.push_back(ParamPair{al, be});
    std::sort(out.begin(), out.end());
    return out;
}

std::vector<CensusEntry> enumerate_pairs() {
    std::vector<CensusEntry> out;
    for (const ParamPair& pair : enumerate_raw_pairs()) {
        ParamPair image = tau_involution(pair);
        if (image < pair) continue;  // keep the lex-least representative
        CensusEntry e;
        e.params = pair;
        e.tau_fixed = (image == pair);
        auto in_x5 = [](const Params& p) {
            // polynomial in x^5: root multiset invariant under shift by 1/5
            std::vector<Rat> shifted;
            for (const Rat& v : p) {
                Rat s = v + Rat(1, 5);
                if (s >= 1) s -= 1;
                shifted.push_back(s);
            }
            std::sort(shifted.begin(), shifted.end());
            return std::equal(shifted.begin(), shifted.end(), p.begin());
        };
        e.monomial_pair = in_x5(pair.alpha) && in_x5(pair.beta);
        out.push_back(e);
    }
    std::sort(out.begin(), out.end(), [](const CensusEntry& a, const CensusEntry& b) {
        return a.params < b.params;
    });
    return out;
}

std::vector<CensusFixtureRow> load_census_fixture(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw ParseError("cannot open census fixture: " + path);
    std::vector<CensusFixtureRow> rows;
    std::string line;
    int lineno = 0;
    while (std::getline(in, line)) {
        ++lineno;
        auto hash = line.find('#');
        if (hash != std::string::npos) line.erase(hash);
        std::istringstream is(line);
        std::vector<std::string> toks;
        std::string tok;
        while (is >> tok) toks.push_back(tok);
        if (toks.empty()) continue;
        if (toks.size() != 13 || toks[7] != "|")
            throw ParseError("census fixture line " + std::to_string(lineno) + " malformed");
        CensusFixtureRow row;
        row.table_id = std::stoi(toks[0]);
        row.row_no = std::stoi(toks[1]);
        std::vector<Rat> al, be;
        for (int i = 0; i < 5; ++i) al.push_back(parse_rat(toks[static_cast<std::size_t>(2 + i)]));
        for (int i = 0; i < 5; ++i) be.push_back(parse_rat(toks[static_cast<std::size_t>(8 + i)]));
        row.params = make_param_pair(al, be);
        rows.push_back(row);
    }
    return rows;
}

void reconcile_with_fixture(std::vector<CensusEntry>& entries,
                            const std::vector<CensusFixtureRow>& fixture) {
    std::map<ParamPair, std::size_t> index;
    for (std::size_t i = 0; i < entries.size(); ++i)
        index[entries[i].params] = i;
    std::vector<bool> hit(entries.size(), false);
    std::ostringstream diff;
    for (const CensusFixtureRow& row : fixture) {
        ParamPair rep = std::min(row.params, tau_involution(row.params));
        auto it = index.find(rep);
        if (it == index.end()) {
            diff << "fixture " << row.table_id << "/" << row.row_no
                 << " has no enumerated orbit\n";
            continue;
        }
        if (hit[it->second]) {
            diff << "fixture " << row.table_id << "/" << row.row_no
                 << " duplicates an orbit\n";
            continue;
        }
        hit[it->second] = true;
        entries[it->second].table_id = row.table_id;
        entries[it->second].row_no = row.row_no;
    }
    for (std::size_t i = 0; i < entries.size(); ++i)
        if (!hit[i])
            diff << "orbit (" << format_params(entries[i].params.alpha) << " ; "
                 << format_params(entries[i].params.beta) << ") not covered by fixture\n";
    std::string d = diff.str();
    if (!d.empty()) throw InvariantViolation("census fixture mismatch:\n" + d);
}

std::string format_params(const Params& p) {
    std::string out;
    for (std::size_t i = 0; i < p.size(); ++i) {
        if (i) out += ' ';
        out += format_rat(p[i]);
    }
    return out;
}

}  // namespace hgmono
