#pragma once

/** @file
 * Simply-laced root systems A_l (2 <= l <= 8) and D_l (4 <= l <= 8) with
 * Chevalley structure constants.
 *
 * Roots are enumerated by index pair (i, j), i < j: A_l gives e_i - e_j, D_l gives
 * e_i - e_j then e_i + e_j.  Positive roots come first, then their negatives in
 * the same order.  Constants follow the matrix Chevalley basis e_{e_i-e_j} = E_ij
 * of sl_{l+1}, resp. F_{x,y} = E_{x,y} - E_{-y,-x} of so_{2l} on signed indices.
 */

#include <cstdlib>
#include <map>
#include <memory>
#include <mutex>
#include <optional>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "stlab/error.hpp"

namespace stlab {

enum class RootType { A, D };
using RootIndex = int;

class RootSystem;
using SystemPtr = std::shared_ptr<const RootSystem>;

struct RootSum {
    enum class Kind { root, none, opposite };
    Kind kind = Kind::none;
    RootIndex index = -1;
};

class RootSystem {
public:
    static SystemPtr build(RootType type, int rank);

    /// "A3", "D4".
    static SystemPtr parse(std::string_view name) {
        if (name.size() < 2 || (name[0] != 'A' && name[0] != 'D'))
            throw PreconditionFailed("unknown root system " + std::string(name));
        int rank = std::atoi(std::string(name.substr(1)).c_str());
        return build(name[0] == 'A' ? RootType::A : RootType::D, rank);
    }

    RootType type() const { return type_; }
    int rank() const { return rank_; }
    std::string name() const { return (type_ == RootType::A ? "A" : "D") + std::to_string(rank_); }
    std::size_t size() const { return roots_.size(); }
    std::size_t num_positive() const { return roots_.size() / 2; }
    int ambient_dim() const { return type_ == RootType::A ? rank_ + 1 : rank_; }

    const std::vector<int>& coords(RootIndex i) const { return roots_.at(check(i)); }

    std::optional<RootIndex> find(const std::vector<int>& v) const {
        auto it = index_.find(v);
        if (it == index_.end()) return std::nullopt;
        return it->second;
    }

    RootIndex index_of(const std::vector<int>& v) const {
        auto r = find(v);
        if (!r) throw PreconditionFailed("vector is not a root of " + name());
        return *r;
    }

    RootIndex negative(RootIndex i) const { return neg_.at(check(i)); }
    bool is_positive(RootIndex i) const { return static_cast<std::size_t>(check(i)) < num_positive(); }

    RootSum sum(RootIndex a, RootIndex b) const {
        int s = sum_[check(a) * size() + check(b)];
        if (s >= 0) return {RootSum::Kind::root, s};
        return {s == -2 ? RootSum::Kind::opposite : RootSum::Kind::none, -1};
    }

    /// N_ab with [e_a, e_b] = N_ab e_{a+b}; requires a + b to be a root.
    int N(RootIndex a, RootIndex b) const {
        int n = n_[check(a) * size() + check(b)];
        if (n == 0) throw PreconditionFailed(root_str(a) + " + " + root_str(b) + " is not a root");
        return n;
    }

    int inner(RootIndex a, RootIndex b) const {
        const auto& x = coords(a);
        const auto& y = coords(b);
        int s = 0;
        for (std::size_t k = 0; k < x.size(); ++k) s += x[k] * y[k];
        return s;
    }

    const std::vector<RootIndex>& simple_roots() const { return simple_; }

    /// Coefficients of a root in the simple roots.
    const std::vector<int>& simple_coords(RootIndex i) const { return simple_coords_.at(check(i)); }

    /// First (gamma, delta) in enumeration order with gamma + delta = beta, both != +-beta.
    std::pair<RootIndex, RootIndex> commutator_decomposition(RootIndex beta) const {
        check(beta);
        RootIndex nb = negative(beta);
        for (RootIndex g = 0; g < static_cast<RootIndex>(size()); ++g) {
            if (g == beta || g == nb) continue;
            std::vector<int> d = coords(beta);
            for (std::size_t k = 0; k < d.size(); ++k) d[k] -= roots_[g][k];
            auto di = find(d);
            if (di && *di != beta && *di != nb) return {g, *di};
        }
        throw PreconditionFailed("no commutator decomposition of " + root_str(beta));
    }

    /// Signed 1-based index pair (x, y) with e_root = E_xy (type A) or F_xy (type D).
    std::pair<int, int> matrix_pair(RootIndex i) const { return pairs_.at(check(i)); }

    std::string root_str(RootIndex i) const {
        const auto& v = coords(i);
        std::string out;
        for (int pass = 0; pass < 2; ++pass)
            for (std::size_t k = 0; k < v.size(); ++k) {
                if (pass == 0 ? v[k] <= 0 : v[k] >= 0) continue;
                out += v[k] > 0 ? (out.empty() ? "" : "+") : "-";
                out += "e" + std::to_string(k + 1);
            }
        return out;
    }

    /// Parses "e1-e2", "-e1-e3", "e2+e4".
    RootIndex parse_root(std::string_view s) const {
        std::vector<int> v(ambient_dim(), 0);
        std::size_t pos = 0;
        while (pos < s.size()) {
            int sign = 1;
            if (s[pos] == '+' || s[pos] == '-') {
                sign = s[pos] == '-' ? -1 : 1;
                ++pos;
            }
            if (pos >= s.size() || s[pos] != 'e') throw ParseError("malformed root " + std::string(s));
            ++pos;
            std::size_t start = pos;
            while (pos < s.size() && s[pos] >= '0' && s[pos] <= '9') ++pos;
            if (start == pos) throw ParseError("malformed root " + std::string(s));
            int k = std::atoi(std::string(s.substr(start, pos - start)).c_str());
            if (k < 1 || k > ambient_dim()) throw ParseError("index out of range in root " + std::string(s));
            v[k - 1] += sign;
        }
        return index_of(v);
    }

private:
    RootSystem(RootType type, int rank);

    RootIndex check(RootIndex i) const {
        if (i < 0 || static_cast<std::size_t>(i) >= roots_.size())
            throw PreconditionFailed("root index " + std::to_string(i) + " out of range for " + name());
        return i;
    }

    std::vector<int> weight(int signed_index) const {
        std::vector<int> w(ambient_dim(), 0);
        w[std::abs(signed_index) - 1] = signed_index > 0 ? 1 : -1;
        return w;
    }

    /// Resolve coefficient * F_{x,y} (resp. E_{x,y}) into +-e_gamma.
    int resolve(int coeff, int x, int y, RootIndex gamma) const {
        auto p = pairs_[gamma];
        if (p.first == x && p.second == y) return coeff;
        if (type_ == RootType::D && p.first == -y && p.second == -x) return -coeff;
        throw Error("internal: structure constant resolution failed");
    }

    int bracket_constant(RootIndex ai, RootIndex bi, RootIndex gamma) const {
        auto [a, b] = pairs_[ai];
        auto [c, d] = pairs_[bi];
        if (type_ == RootType::A) {
            if (b == c) return resolve(1, a, d, gamma);
            if (d == a) return resolve(-1, c, b, gamma);
            throw Error("internal: no bracket term");
        }
        if (b == c) return resolve(1, a, d, gamma);
        if (a == d) return resolve(-1, c, b, gamma);
        if (b == -d) return resolve(-1, a, -c, gamma);
        if (a == -c) return resolve(1, -d, b, gamma);
        throw Error("internal: no bracket term");
    }

    RootType type_;
    int rank_;
    std::vector<std::vector<int>> roots_;
    std::vector<std::pair<int, int>> pairs_;
    std::map<std::vector<int>, RootIndex> index_;
    std::vector<RootIndex> neg_;
    std::vector<int> sum_;
    std::vector<int> n_;
    std::vector<RootIndex> simple_;
    std::vector<std::vector<int>> simple_coords_;
};

inline RootSystem::RootSystem(RootType type, int rank) : type_(type), rank_(rank) {
    const int n = ambient_dim();
    std::vector<std::pair<int, int>> pos;
    for (int i = 1; i <= n; ++i)
        for (int j = i + 1; j <= n; ++j) {
            pos.emplace_back(i, j);
            if (type == RootType::D) pos.emplace_back(i, -j);
        }
    for (auto p : pos) pairs_.push_back(p);
    // negatives are the swapped pairs; -e_i-e_j = F_{-j,i}
    for (auto [x, y] : pos) pairs_.emplace_back(y, x);
    for (auto [x, y] : pairs_) {
        std::vector<int> v = weight(x);
        auto wy = weight(y);
        for (int k = 0; k < n; ++k) v[k] -= wy[k];
        index_[v] = static_cast<RootIndex>(roots_.size());
        roots_.push_back(v);
    }
    const std::size_t m = roots_.size();
    neg_.resize(m);
    for (std::size_t i = 0; i < m; ++i) {
        std::vector<int> v = roots_[i];
        for (auto& x : v) x = -x;
        neg_[i] = index_.at(v);
    }
    sum_.assign(m * m, -1);
    n_.assign(m * m, 0);
    for (std::size_t i = 0; i < m; ++i)
        for (std::size_t j = 0; j < m; ++j) {
            if (neg_[i] == static_cast<RootIndex>(j)) {
                sum_[i * m + j] = -2;
                continue;
            }
            std::vector<int> v = roots_[i];
            for (int k = 0; k < n; ++k) v[k] += roots_[j][k];
            auto it = index_.find(v);
            if (it == index_.end()) continue;
            sum_[i * m + j] = it->second;
            n_[i * m + j] = bracket_constant(static_cast<RootIndex>(i), static_cast<RootIndex>(j), it->second);
        }
    for (int i = 1; i < rank; ++i) {
        std::vector<int> v(n, 0);
        v[i - 1] = 1;
        v[i] = -1;
        simple_.push_back(index_.at(v));
    }
    {
        std::vector<int> v(n, 0);
        if (type == RootType::A) {
            v[rank - 1] = 1;
            v[rank] = -1;
        } else {
            v[rank - 2] = 1;
            v[rank - 1] = 1;
        }
        simple_.push_back(index_.at(v));
    }
    // simple-root coordinates, positive roots by increasing height
    simple_coords_.assign(m, {});
    for (std::size_t s = 0; s < simple_.size(); ++s) {
        simple_coords_[simple_[s]].assign(rank, 0);
        simple_coords_[simple_[s]][s] = 1;
    }
    bool progress = true;
    while (progress) {
        progress = false;
        for (std::size_t i = 0; i < num_positive(); ++i) {
            if (!simple_coords_[i].empty()) continue;
            for (std::size_t s = 0; s < simple_.size(); ++s) {
                int rest = sum_[i * m + neg_[simple_[s]]];
                if (rest >= 0 && static_cast<std::size_t>(rest) < num_positive() && !simple_coords_[rest].empty()) {
                    simple_coords_[i] = simple_coords_[rest];
                    simple_coords_[i][s] += 1;
                    progress = true;
                    break;
                }
            }
        }
    }
    for (std::size_t i = 0; i < num_positive(); ++i) {
        if (simple_coords_[i].empty()) throw Error("internal: simple coordinates incomplete");
        auto c = simple_coords_[i];
        for (auto& x : c) x = -x;
        simple_coords_[neg_[i]] = c;
    }
}

inline SystemPtr RootSystem::build(RootType type, int rank) {
    if (type == RootType::A && (rank < 2 || rank > 8)) throw PreconditionFailed("A_l supported for 2 <= l <= 8");
    if (type == RootType::D && (rank < 4 || rank > 8)) throw PreconditionFailed("D_l supported for 4 <= l <= 8");
    static std::mutex mu;
    static std::map<std::pair<int, int>, SystemPtr> cache;
    std::lock_guard<std::mutex> lock(mu);
    auto key = std::make_pair(static_cast<int>(type), rank);
    auto it = cache.find(key);
    if (it != cache.end()) return it->second;
    SystemPtr p(new RootSystem(type, rank));
    cache.emplace(key, p);
    return p;
}

inline bool same_system(const RootSystem& a, const RootSystem& b) { return a.type() == b.type() && a.rank() == b.rank(); }

struct ConstantRow {
    RootIndex alpha, beta, sum;
    int N;
};

/// (a, b, a + b, N_ab) for every ordered pair whose sum is a root.
inline std::vector<ConstantRow> constants_table(const RootSystem& S) {
    std::vector<ConstantRow> out;
    const auto n = static_cast<RootIndex>(S.size());
    for (RootIndex a = 0; a < n; ++a)
        for (RootIndex b = 0; b < n; ++b) {
            RootSum s = S.sum(a, b);
            if (s.kind == RootSum::Kind::root) out.push_back({a, b, s.index, S.N(a, b)});
        }
    return out;
}

}  // namespace stlab
