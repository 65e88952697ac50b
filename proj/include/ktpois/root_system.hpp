/**
 * @file root_system.hpp
 * @brief Root systems of the finite simple types, with exact Killing data.
 *
 * Roots are stored as integer coordinate vectors in the simple-root basis,
 * positives first (sorted by height, then lexicographically), negatives in
 * matching order.  The inner product ⟪.,.⟫ on h* is the one induced by the
 * adjoint-trace Killing form, kept as exact rationals; the integer-valued
 * (.,.) with d_i symmetrizers is kept alongside for string/length bookkeeping.
 */
#pragma once

#include <algorithm>
#include <cctype>
#include <map>
#include <numeric>
#include <set>
#include <stdexcept>
#include <string>
#include <vector>

#include "ktpois/rational.hpp"

namespace ktpois {

struct UnknownType : std::runtime_error {
    explicit UnknownType(const std::string& what) : std::runtime_error(what) {}
};
struct BadSubset : std::runtime_error {
    explicit BadSubset(const std::string& what) : std::runtime_error(what) {}
};

class RootSystem {
public:
    char family = 'A';
    int rank = 0;

    /// Cartan matrix a[i][j] = 2(a_i,a_j)/(a_i,a_i).
    std::vector<std::vector<int>> cartan;
    /// Symmetrizers: d[i]*a[i][j] == d[j]*a[j][i], minimal positive integers.
    std::vector<long long> d;

    /// Root coordinates in the simple-root basis; ids 0..n_pos-1 are the
    /// positive roots by (height, lex); id + n_pos is the negative.
    std::vector<std::vector<int>> roots;
    int n_pos = 0;

    int num_roots() const { return static_cast<int>(roots.size()); }
    bool is_positive(int id) const { return id < n_pos; }
    int negative_of(int id) const { return id < n_pos ? id + n_pos : id - n_pos; }
    int simple_root_id(int i) const { return simple_ids_[i]; }
    const std::vector<int>& simple_ids() const { return simple_ids_; }

    int height(int id) const {
        int h = 0;
        for (int c : roots[id]) h += c;
        return h;
    }

    int root_id(const std::vector<int>& coords) const {
        auto it = index_.find(coords);
        return it == index_.end() ? -1 : it->second;
    }

    /// Integer pairing <beta, a_i^v> = 2(beta,a_i)/(a_i,a_i).
    long long coroot_pairing(int root, int i) const {
        long long v = 0;
        for (int j = 0; j < rank; ++j) v += static_cast<long long>(roots[root][j]) * cartan[i][j];
        return v;
    }

    /// (beta,beta) in the integer normalization fixed by the d_i.
    long long norm2(int id) const { return norm2_[id]; }

    /// Simple reflection s_i as a permutation value on root ids.
    int reflect_simple(int i, int id) const {
        std::vector<int> c = roots[id];
        c[i] -= static_cast<int>(coroot_pairing(id, i));
        int out = root_id(c);
        if (out < 0) throw std::logic_error("reflection left the root system");
        return out;
    }

    /// Reflection s_alpha for an arbitrary root alpha, acting on root ids.
    int reflect(int alpha, int id) const {
        // s_a(b) = b - <b, a^v> a with <b,a^v> = 2(b,a)/(a,a).
        long long num = 0;
        for (int i = 0; i < rank; ++i)
            for (int j = 0; j < rank; ++j)
                num += static_cast<long long>(roots[id][i]) * roots[alpha][j] * d[i] * cartan[i][j];
        long long pairing2 = 2 * num;  // 2(b,a)
        long long aa = norm2_[alpha];
        if (pairing2 % aa != 0) throw std::logic_error("non-integral reflection pairing");
        long long k = pairing2 / aa;
        std::vector<int> c = roots[id];
        for (int j = 0; j < rank; ++j) c[j] -= static_cast<int>(k) * roots[alpha][j];
        int out = root_id(c);
        if (out < 0) throw std::logic_error("reflection left the root system");
        return out;
    }

    /// Largest p >= 0 with beta - p*alpha still a root (alpha-string through beta).
    int string_down(int alpha, int beta) const {
        int p = 0;
        std::vector<int> c = roots[beta];
        while (true) {
            for (int j = 0; j < rank; ++j) c[j] -= roots[alpha][j];
            if (root_id(c) < 0) break;
            ++p;
        }
        return p;
    }
    int string_up(int alpha, int beta) const { return string_down(negative_of(alpha), beta); }

    int sum_id(int a, int b) const {
        std::vector<int> c(rank);
        for (int j = 0; j < rank; ++j) c[j] = roots[a][j] + roots[b][j];
        return root_id(c);
    }

    /// ⟪a_i, a_j⟫ for simple roots (Killing normalization), exact.
    const std::vector<std::vector<Rational>>& killing_simple() const { return killing_simple_; }

    /// ⟪alpha, beta⟫ for arbitrary roots by bilinearity.
    Rational killing_ip(int a, int b) const {
        Rational v(0);
        for (int i = 0; i < rank; ++i) {
            if (!roots[a][i]) continue;
            for (int j = 0; j < rank; ++j) {
                if (!roots[b][j]) continue;
                v += Rational(roots[a][i]) * Rational(roots[b][j]) * killing_simple_[i][j];
            }
        }
        return v;
    }

    /// Killing Gram matrix B(a_i^v, a_j^v) on the coroot basis of h, exact.
    const std::vector<std::vector<Rational>>& killing_coroot_gram() const { return gram_; }

    /// t_alpha (Killing-dual of alpha in h) in coroot coordinates, exact.
    std::vector<Rational> t_vector(int id) const {
        std::vector<Rational> t(rank, Rational(0));
        for (int i = 0; i < rank; ++i) {
            if (!roots[id][i]) continue;
            for (int j = 0; j < rank; ++j) t[j] += Rational(roots[id][i]) * t_simple_[i][j];
        }
        return t;
    }

    /// Fundamental coweight ȟ_i in coroot coordinates: a_j(ȟ_i) = delta_ij.
    const std::vector<Rational>& coweight(int i) const { return coweights_[i]; }

    /// alpha(h) for h given in coroot coordinates: a(sum c_j a_j^v) = sum c_j <a, a_j^v>.
    template <typename Scalar>
    Scalar eval_root(int id, const std::vector<Scalar>& h_coords) const {
        Scalar v{};
        for (int j = 0; j < rank; ++j) {
            long long p = coroot_pairing(id, j);
            if (p) v += h_coords[j] * Scalar(p);
        }
        return v;
    }

    /// Display name "a1".."ar" for simple roots; "E[c1,...]" style for others.
    std::string root_name(int id) const {
        for (int i = 0; i < rank; ++i)
            if (simple_ids_[i] == id) return "a" + std::to_string(i + 1);
        std::string s = "[";
        for (int j = 0; j < rank; ++j) {
            if (j) s += ",";
            s += std::to_string(roots[id][j]);
        }
        return s + "]";
    }

    friend RootSystem build_root_system(char family, int rank);

private:
    std::vector<int> simple_ids_;
    std::map<std::vector<int>, int> index_;
    std::vector<long long> norm2_;
    std::vector<std::vector<Rational>> killing_simple_;   // ⟪a_i,a_j⟫
    std::vector<std::vector<Rational>> gram_;             // B on coroot basis
    std::vector<std::vector<Rational>> t_simple_;         // t_{a_i} coords
    std::vector<std::vector<Rational>> coweights_;
};

namespace detail {

inline std::vector<std::vector<int>> cartan_matrix(char family, int n) {
    auto chain = [&](int len) {
        std::vector<std::vector<int>> a(len, std::vector<int>(len, 0));
        for (int i = 0; i < len; ++i) a[i][i] = 2;
        for (int i = 0; i + 1 < len; ++i) { a[i][i + 1] = -1; a[i + 1][i] = -1; }
        return a;
    };
    switch (family) {
        case 'A': {
            if (n < 1) throw UnknownType("A requires rank >= 1");
            return chain(n);
        }
        case 'B': {
            if (n < 2) throw UnknownType("B requires rank >= 2");
            auto a = chain(n);
            a[n - 2][n - 1] = -1;
            a[n - 1][n - 2] = -2;  // a_n short
            return a;
        }
        case 'C': {
            if (n < 2) throw UnknownType("C requires rank >= 2");
            auto a = chain(n);
            a[n - 2][n - 1] = -2;  // a_n long
            a[n - 1][n - 2] = -1;
            return a;
        }
        case 'D': {
            if (n < 4) throw UnknownType("D requires rank >= 4");
            auto a = chain(n - 1);
            a.resize(n);
            for (auto& row : a) row.resize(n, 0);
            a[n - 1][n - 1] = 2;
            a[n - 2][n - 1] = 0; a[n - 1][n - 2] = 0;
            a[n - 3][n - 1] = -1; a[n - 1][n - 3] = -1;
            return a;
        }
        case 'E': {
            if (n < 6 || n > 8) throw UnknownType("E requires rank 6..8");
            // Bourbaki: chain 1-3-4-5-...-n, node 2 attached to node 4.
            std::vector<std::vector<int>> a(n, std::vector<int>(n, 0));
            for (int i = 0; i < n; ++i) a[i][i] = 2;
            auto bond = [&](int i, int j) { a[i - 1][j - 1] = -1; a[j - 1][i - 1] = -1; };
            bond(1, 3); bond(3, 4); bond(2, 4);
            for (int k = 4; k < n; ++k) bond(k, k + 1);
            return a;
        }
        case 'F': {
            if (n != 4) throw UnknownType("F requires rank 4");
            auto a = chain(4);
            a[1][2] = -1; a[2][1] = -2;  // a3, a4 short
            return a;
        }
        case 'G': {
            if (n != 2) throw UnknownType("G requires rank 2");
            return {{2, -3}, {-1, 2}};  // a1 short, a2 long
        }
        default:
            throw UnknownType(std::string("unknown family '") + family + "'");
    }
}

}  // namespace detail

inline RootSystem build_root_system(char family, int rank) {
    family = static_cast<char>(std::toupper(static_cast<unsigned char>(family)));
    if (rank < 1 || rank > 8) throw UnknownType("rank must be between 1 and 8");
    RootSystem rs;
    rs.family = family;
    rs.rank = rank;
    rs.cartan = detail::cartan_matrix(family, rank);

    // Symmetrizers d_i: propagate along bonds, then clear denominators.
    {
        std::vector<Rational> dr(rank, Rational(0));
        dr[0] = Rational(1);
        for (bool changed = true; changed;) {
            changed = false;
            for (int i = 0; i < rank; ++i)
                for (int j = 0; j < rank; ++j) {
                    if (i == j || rs.cartan[i][j] == 0) continue;
                    if (!dr[i].is_zero() && dr[j].is_zero()) {
                        dr[j] = dr[i] * Rational(rs.cartan[i][j]) / Rational(rs.cartan[j][i]);
                        changed = true;
                    }
                }
        }
        long long lcm_den = 1;
        for (auto& v : dr) lcm_den = std::lcm(lcm_den, v.den());
        rs.d.resize(rank);
        for (int i = 0; i < rank; ++i) rs.d[i] = (dr[i] * Rational(lcm_den)).num();
        long long g = 0;
        for (auto v : rs.d) g = std::gcd(g, v);
        for (auto& v : rs.d) v /= g;
    }

    // Generate all roots: close the simple roots under simple reflections.
    std::set<std::vector<int>> seen;
    std::vector<std::vector<int>> queue;
    for (int i = 0; i < rank; ++i) {
        std::vector<int> e(rank, 0);
        e[i] = 1;
        seen.insert(e);
        queue.push_back(e);
    }
    auto pair_with = [&](const std::vector<int>& c, int i) {
        long long v = 0;
        for (int j = 0; j < rank; ++j) v += static_cast<long long>(c[j]) * rs.cartan[i][j];
        return v;
    };
    while (!queue.empty()) {
        std::vector<int> c = queue.back();
        queue.pop_back();
        for (int i = 0; i < rank; ++i) {
            std::vector<int> r = c;
            r[i] -= static_cast<int>(pair_with(c, i));
            if (seen.insert(r).second) queue.push_back(r);
        }
    }

    std::vector<std::vector<int>> pos;
    for (const auto& c : seen) {
        bool has_pos = false, has_neg = false;
        for (int v : c) { has_pos |= v > 0; has_neg |= v < 0; }
        if (has_pos && has_neg) throw std::logic_error("mixed-sign root generated");
        if (has_pos) pos.push_back(c);
    }
    std::sort(pos.begin(), pos.end(), [](const auto& a, const auto& b) {
        int ha = 0, hb = 0;
        for (int v : a) ha += v;
        for (int v : b) hb += v;
        if (ha != hb) return ha < hb;
        return a < b;
    });
    rs.n_pos = static_cast<int>(pos.size());
    rs.roots = pos;
    for (const auto& c : pos) {
        std::vector<int> neg(c.size());
        for (std::size_t j = 0; j < c.size(); ++j) neg[j] = -c[j];
        rs.roots.push_back(neg);
    }
    for (int id = 0; id < rs.num_roots(); ++id) rs.index_[rs.roots[id]] = id;
    rs.simple_ids_.resize(rank);
    for (int i = 0; i < rank; ++i) {
        std::vector<int> e(rank, 0);
        e[i] = 1;
        rs.simple_ids_[i] = rs.index_.at(e);
    }

    rs.norm2_.resize(rs.num_roots());
    for (int id = 0; id < rs.num_roots(); ++id) {
        long long v = 0;
        for (int i = 0; i < rank; ++i)
            for (int j = 0; j < rank; ++j)
                v += static_cast<long long>(rs.roots[id][i]) * rs.roots[id][j] * rs.d[i] *
                     rs.cartan[i][j];
        rs.norm2_[id] = v;  // equals 2(b,b)/2 * ... : d_i a_ij = (a_i,a_j) up to the global scale
    }

    // Killing form restricted to h via root sums: B(h,h') = sum_b b(h) b(h').
    rs.gram_.assign(rank, std::vector<Rational>(rank, Rational(0)));
    for (int b = 0; b < rs.num_roots(); ++b)
        for (int i = 0; i < rank; ++i) {
            long long bi = rs.coroot_pairing(b, i);
            if (!bi) continue;
            for (int j = 0; j < rank; ++j)
                rs.gram_[i][j] += Rational(bi * rs.coroot_pairing(b, j));
        }

    // t_{a_i}: B(t, a_j^v) = a_i(a_j^v) for all j.
    rs.t_simple_.resize(rank);
    for (int i = 0; i < rank; ++i) {
        std::vector<Rational> rhs(rank);
        for (int j = 0; j < rank; ++j) rhs[j] = Rational(rs.cartan[j][i]);
        rs.t_simple_[i] = solve_rational(rs.gram_, rhs);
    }

    // ⟪a_i, a_j⟫ = a_j(t_{a_i}).
    rs.killing_simple_.assign(rank, std::vector<Rational>(rank, Rational(0)));
    for (int i = 0; i < rank; ++i)
        for (int j = 0; j < rank; ++j) {
            Rational v(0);
            for (int k = 0; k < rank; ++k)
                v += rs.t_simple_[i][k] * Rational(rs.cartan[k][j]);
            rs.killing_simple_[i][j] = v;
        }

    // Fundamental coweights: a_j(h) = delta_ij, h in coroot coordinates.
    rs.coweights_.resize(rank);
    for (int i = 0; i < rank; ++i) {
        std::vector<std::vector<Rational>> m(rank, std::vector<Rational>(rank));
        for (int r = 0; r < rank; ++r)
            for (int c = 0; c < rank; ++c) m[r][c] = Rational(rs.cartan[c][r]);
        std::vector<Rational> rhs(rank, Rational(0));
        rhs[i] = Rational(1);
        rs.coweights_[i] = solve_rational(m, rhs);
    }
    return rs;
}

/// Parse "A2", "g2", ... (case-insensitive).
inline RootSystem build_root_system(const std::string& designator) {
    if (designator.size() < 2) throw UnknownType("bad algebra designator: " + designator);
    char fam = designator[0];
    int rank = 0;
    try {
        rank = std::stoi(designator.substr(1));
    } catch (...) {
        throw UnknownType("bad algebra designator: " + designator);
    }
    return build_root_system(fam, rank);
}

/// [X] = set of roots in the linear span of the simple subset X.
inline std::set<int> root_span_subset(const RootSystem& rs, const std::set<int>& X) {
    for (int id : X) {
        bool ok = false;
        for (int i = 0; i < rs.rank; ++i) ok |= rs.simple_root_id(i) == id;
        if (!ok) throw BadSubset("X must consist of simple roots");
    }
    std::vector<bool> in_x(rs.rank, false);
    for (int i = 0; i < rs.rank; ++i)
        if (X.count(rs.simple_root_id(i))) in_x[i] = true;
    std::set<int> out;
    for (int id = 0; id < rs.num_roots(); ++id) {
        bool ok = true;
        for (int j = 0; j < rs.rank; ++j)
            if (rs.roots[id][j] != 0 && !in_x[j]) { ok = false; break; }
        if (ok) out.insert(id);
    }
    return out;
}

}  // namespace ktpois
