#pragma once

/** @file
 * Matrix evaluation St(Phi, R) -> G(R) through the adjoint representation, the
 * defining representation of SL_{l+1} (type A) and the vector representation of
 * SO_{2l} (type D).  x_a(t) acts as I + t e_a + t^2 e_a^(2) where e_a^(2) is the
 * divided square, integral in all three cases.
 */

#include <algorithm>
#include <map>
#include <memory>
#include <optional>
#include <random>
#include <sstream>
#include <span>
#include <string>
#include <unordered_map>
#include <vector>

#include "stlab/random.hpp"
#include "stlab/scalar.hpp"
#include "stlab/word.hpp"

namespace stlab {

enum class RepKind { adjoint, defining, vector };

inline std::string rep_name(RepKind k) {
    switch (k) {
        case RepKind::adjoint:
            return "adjoint";
        case RepKind::defining:
            return "defining";
        case RepKind::vector:
            return "vector";
    }
    return "?";
}

struct RepEntry {
    int row;
    int val;
};

class Representation;
using RepPtr = std::shared_ptr<const Representation>;

class Representation {
public:
    static RepPtr make(RepKind kind, const SystemPtr& sys) {
        if (kind == RepKind::defining && sys->type() != RootType::A)
            throw Unsupported("the defining representation is only provided for type A");
        if (kind == RepKind::vector && sys->type() != RootType::D)
            throw Unsupported("the vector representation is only provided for type D");
        return RepPtr(new Representation(kind, sys));
    }
    static RepPtr adjoint(const SystemPtr& sys) { return make(RepKind::adjoint, sys); }

    /// The defining (type A) or vector (type D) representation.
    static RepPtr natural(const SystemPtr& sys) {
        return make(sys->type() == RootType::A ? RepKind::defining : RepKind::vector, sys);
    }

    static RepKind parse_kind(const std::string& s) {
        if (s == "adjoint") return RepKind::adjoint;
        if (s == "defining") return RepKind::defining;
        if (s == "vector") return RepKind::vector;
        throw ParseError("unknown representation " + s);
    }

    RepKind kind() const { return kind_; }
    const SystemPtr& system() const { return sys_; }
    int dim() const { return dim_; }
    std::string name() const { return rep_name(kind_) + "(" + sys_->name() + ")"; }

    /// Column j of e_a, resp. of its divided square.
    std::span<const RepEntry> e_col(RootIndex a, int j) const { return mats_[a].e.col(j); }
    std::span<const RepEntry> e2_col(RootIndex a, int j) const { return mats_[a].e2.col(j); }
    /// Columns on which e_a or e_a^(2) is nonzero.
    const std::vector<int>& support(RootIndex a) const { return mats_[a].support; }

    /// Dense integer matrix of e_a (divided = false) or e_a^(2).
    std::vector<std::vector<long>> root_matrix(RootIndex a, bool divided = false) const {
        std::vector<std::vector<long>> m(dim_, std::vector<long>(dim_, 0));
        const auto& cols = divided ? mats_[a].e2 : mats_[a].e;
        for (int j = 0; j < dim_; ++j)
            for (const auto& en : cols.col(j)) m[en.row][j] += en.val;
        return m;
    }

private:
    /// Sparse columns, stored contiguously.
    struct Columns {
        std::vector<int> start;
        std::vector<RepEntry> entries;

        explicit Columns(const std::vector<std::vector<RepEntry>>& cols = {}) {
            start.push_back(0);
            for (const auto& c : cols) {
                entries.insert(entries.end(), c.begin(), c.end());
                start.push_back(static_cast<int>(entries.size()));
            }
        }
        std::span<const RepEntry> col(int j) const {
            return {entries.data() + start[j], static_cast<std::size_t>(start[j + 1] - start[j])};
        }
    };

    struct RootMats {
        Columns e, e2;
        std::vector<int> support;
    };

    Representation(RepKind kind, SystemPtr sys) : kind_(kind), sys_(std::move(sys)) {
        const RootSystem& S = *sys_;
        const int nroots = static_cast<int>(S.size());
        const int l = S.rank();
        dim_ = kind_ == RepKind::adjoint ? nroots + l : (kind_ == RepKind::defining ? l + 1 : 2 * l);
        mats_.resize(nroots);
        auto vec_index = [l](int s) { return s > 0 ? s - 1 : l - s - 1; };
        for (RootIndex a = 0; a < nroots; ++a) {
            std::vector<std::vector<RepEntry>> e(dim_), e2(dim_);
            if (kind_ == RepKind::adjoint) {
                RootIndex na = S.negative(a);
                for (RootIndex b = 0; b < nroots; ++b) {
                    if (b == na) {
                        const auto& c = S.simple_coords(a);
                        for (int i = 0; i < l; ++i)
                            if (c[i]) e[b].push_back({nroots + i, c[i]});
                        e2[b].push_back({a, -1});
                        continue;
                    }
                    RootSum s = S.sum(a, b);
                    if (s.kind == RootSum::Kind::root) e[b].push_back({s.index, S.N(a, b)});
                }
                for (int i = 0; i < l; ++i) {
                    int ip = S.inner(a, S.simple_roots()[i]);
                    if (ip) e[nroots + i].push_back({a, -ip});
                }
            } else {
                auto [x, y] = S.matrix_pair(a);
                if (kind_ == RepKind::defining) {
                    e[y - 1].push_back({x - 1, 1});
                } else {
                    e[vec_index(y)].push_back({vec_index(x), 1});
                    e[vec_index(-x)].push_back({vec_index(-y), -1});
                }
            }
            RootMats& m = mats_[a];
            m.e = Columns(e);
            m.e2 = Columns(e2);
            for (int j = 0; j < dim_; ++j)
                if (!e[j].empty() || !e2[j].empty()) m.support.push_back(j);
        }
    }

    RepKind kind_;
    SystemPtr sys_;
    int dim_ = 0;
    std::vector<RootMats> mats_;
};

// ---------------------------------------------------------------------------
// Matrices

template <class T>
struct Matrix {
    int n = 0;
    std::vector<T> a;  // row-major

    T& operator()(int i, int j) { return a[static_cast<std::size_t>(i) * n + j]; }
    const T& operator()(int i, int j) const { return a[static_cast<std::size_t>(i) * n + j]; }

    static Matrix identity(int n, const T& zero, const T& one) {
        Matrix m{n, std::vector<T>(static_cast<std::size_t>(n) * n, zero)};
        for (int i = 0; i < n; ++i) m(i, i) = one;
        return m;
    }

    bool operator==(const Matrix& o) const { return n == o.n && a == o.a; }
    bool operator!=(const Matrix& o) const { return !(*this == o); }
};

template <class T>
Matrix<T> operator*(const Matrix<T>& x, const Matrix<T>& y) {
    Matrix<T> r{x.n, std::vector<T>(x.a.size(), x.a.empty() ? T{} : x.a[0] * 0L)};
    for (int i = 0; i < x.n; ++i)
        for (int k = 0; k < x.n; ++k) {
            if (is_zero(x(i, k))) continue;
            for (int j = 0; j < x.n; ++j) r(i, j) = r(i, j) + x(i, k) * y(k, j);
        }
    return r;
}

using GroupMatrix = Matrix<Elem>;

inline bool is_identity(const GroupMatrix& m) {
    for (int i = 0; i < m.n; ++i)
        for (int j = 0; j < m.n; ++j) {
            const Elem& v = m(i, j);
            if (i == j ? !v.is_one() : !v.is_zero()) return false;
        }
    return true;
}

inline std::string matrix_str(const GroupMatrix& m) {
    std::ostringstream os;
    for (int i = 0; i < m.n; ++i) {
        os << "[";
        for (int j = 0; j < m.n; ++j) os << (j ? ", " : "") << m(i, j).str();
        os << "]\n";
    }
    return os.str();
}

/// M <- M * x_a(t).
template <class T>
void right_multiply(Matrix<T>& m, const Representation& rep, RootIndex root, const T& t) {
    const T t2 = t * t;
    Matrix<T> old = m;
    for (int c : rep.support(root)) {
        for (const auto& en : rep.e_col(root, c)) {
            T f = t * static_cast<long>(en.val);
            for (int i = 0; i < m.n; ++i)
                if (!is_zero(old(i, en.row))) m(i, c) = m(i, c) + old(i, en.row) * f;
        }
        for (const auto& en : rep.e2_col(root, c)) {
            T f = t2 * static_cast<long>(en.val);
            for (int i = 0; i < m.n; ++i)
                if (!is_zero(old(i, en.row))) m(i, c) = m(i, c) + old(i, en.row) * f;
        }
    }
}

/// The image of w in G(R).
inline GroupMatrix evaluate(const SteinbergWord& w, const Representation& rep) {
    if (!same_system(*w.system(), *rep.system())) throw PreconditionFailed("word and representation differ in type");
    const Ring& R = w.ring();
    GroupMatrix m = GroupMatrix::identity(rep.dim(), R.zero(), R.one());
    for (const auto& l : w.letters()) right_multiply(m, rep, l.root, l.sign < 0 ? -l.arg : l.arg);
    return m;
}

inline GroupMatrix evaluate(const SteinbergWord& w, RepKind kind) {
    return evaluate(w, *Representation::make(kind, w.system()));
}

// ---------------------------------------------------------------------------
// Sparse comparison.  Both products fix every basis vector outside the union of
// the supports of the letters involved, so comparing their columns on that union
// decides equality of the matrices.

template <class T>
struct TLetter {
    RootIndex root;
    T arg;
};

template <class T>
class SparseComparer {
public:
    SparseComparer(const Representation& rep, T zero, T one)
        : rep_(rep), zero_(std::move(zero)), one_(std::move(one)) {
        for (auto* v : {&v1_, &v2_}) {
            v->val.assign(rep.dim(), zero_);
            v->mark.assign(rep.dim(), 0);
        }
        smark_.assign(rep.dim(), 0);
    }

    /// Whether the products of the two letter lists have equal images.
    bool equal(const std::vector<TLetter<T>>& x, const std::vector<TLetter<T>>& y) {
        cols_.clear();
        for (const auto* lst : {&x, &y})
            for (const auto& l : *lst)
                for (int j : rep_.support(l.root))
                    if (!smark_[j]) {
                        smark_[j] = 1;
                        cols_.push_back(j);
                    }
        for (int j : cols_) smark_[j] = 0;
        for (int j : cols_) {
            image(x, j, v1_);
            image(y, j, v2_);
            bool same = true;
            for (int i : v1_.nz)
                if (v1_.val[i] != (v2_.mark[i] ? v2_.val[i] : zero_)) same = false;
            for (int i : v2_.nz)
                if (!v1_.mark[i] && !is_zero(v2_.val[i])) same = false;
            clear(v1_);
            clear(v2_);
            if (!same) return false;
        }
        return true;
    }

    bool is_identity(const std::vector<TLetter<T>>& x) { return equal(x, {}); }

private:
    struct SVec {
        std::vector<T> val;
        std::vector<char> mark;
        std::vector<int> nz;
    };

    void clear(SVec& v) {
        for (int i : v.nz) {
            v.mark[i] = 0;
            v.val[i] = zero_;
        }
        v.nz.clear();
    }

    void add(SVec& v, int i, const T& d) {
        if (!v.mark[i]) {
            v.mark[i] = 1;
            v.nz.push_back(i);
            v.val[i] = d;
        } else {
            v.val[i] = v.val[i] + d;
        }
    }

    void image(const std::vector<TLetter<T>>& w, int j, SVec& v) {
        add(v, j, one_);
        for (auto it = w.rbegin(); it != w.rend(); ++it) {
            const RootIndex r = it->root;
            const T& s = it->arg;
            std::optional<T> t2;
            delta_.clear();
            for (int c : v.nz) {
                const auto col = rep_.e_col(r, c);
                const auto col2 = rep_.e2_col(r, c);
                if (col.empty() && col2.empty()) continue;
                const T& x = v.val[c];
                if (is_zero(x)) continue;
                const bool unit = is_one(x);
                if (!col.empty()) {
                    T p = unit ? s : x * s;
                    for (const auto& en : col) delta_.push_back({en.row, en.val == 1 ? p : p * static_cast<long>(en.val)});
                }
                if (!col2.empty()) {
                    if (!t2) t2 = T(s * s);
                    T p = unit ? *t2 : x * *t2;
                    for (const auto& en : col2) delta_.push_back({en.row, en.val == 1 ? p : p * static_cast<long>(en.val)});
                }
            }
            for (const auto& d : delta_) add(v, d.first, d.second);
        }
    }

    const Representation& rep_;
    T zero_, one_;
    SVec v1_, v2_;
    std::vector<char> smark_;
    std::vector<int> cols_;
    std::vector<std::pair<int, T>> delta_;
};

inline std::vector<TLetter<Elem>> elem_letters(const SteinbergWord& w) {
    std::vector<TLetter<Elem>> out;
    for (const auto& l : w.letters()) out.push_back({l.root, l.sign < 0 ? -l.arg : l.arg});
    return out;
}

/// Whether two words have equal images under rep.
inline bool rep_equal(const SteinbergWord& x, const SteinbergWord& y, const Representation& rep) {
    x.check_compatible(y);
    if (auto fr = FastRing::from(x.ring())) {
        try {
            return with_degree(*fr, [&](auto deg) {
                constexpr int D = decltype(deg)::value;
                auto conv = [&](const SteinbergWord& w) {
                    std::vector<TLetter<Fast<D>>> out;
                    for (const auto& l : w.letters())
                        out.push_back({l.root, fr->template to_fast<D>(l.sign < 0 ? -l.arg : l.arg)});
                    return out;
                };
                SparseComparer<Fast<D>> cmp(rep, fr->template zero<D>(), fr->template one<D>());
                return cmp.equal(conv(x), conv(y));
            });
        } catch (const std::overflow_error&) {
        }
    }
    SparseComparer<Elem> cmp(rep, x.ring().zero(), x.ring().one());
    return cmp.equal(elem_letters(x), elem_letters(y));
}

inline bool rep_equal(const SteinbergWord& x, const SteinbergWord& y, RepKind kind) {
    return rep_equal(x, y, *Representation::make(kind, x.system()));
}

/// Whether w lies in the kernel of the chosen representation.
inline bool k2_membership(const SteinbergWord& w, const Representation& rep) {
    return rep_equal(w, empty_word(w.system(), w.ring()), rep);
}

inline bool k2_membership(const SteinbergWord& w, RepKind kind = RepKind::adjoint) {
    return k2_membership(w, *Representation::make(kind, w.system()));
}

/// Whether the image of a relative word in St(Phi, R/I) maps to the identity.
inline bool certify_relative(const RelativeWord& rw, RepKind kind = RepKind::adjoint) {
    return k2_membership(change_ring(rw.word, rw.ideal.quotient_ring()), kind);
}

// ---------------------------------------------------------------------------
// Relation sweeps

struct RelationReport {
    std::string representation;
    std::string ring;
    long samples = 0;
    long r1 = 0, r2 = 0, r3 = 0;
    long failures = 0;
    std::vector<std::string> failure_notes;

    bool ok() const { return failures == 0; }
    long checks() const { return r1 + r2 + r3; }
};

namespace detail {

/// memo_key(s, t) >= 0 identifies argument pairs whose check can be reused within one root pair.
template <class T, class Draw, class Show, class Key>
void relation_sweep(const Representation& rep, const T& zero, const T& one, long samples, Draw draw, Show show,
                    Key memo_key, RelationReport& rep_out) {
    const RootSystem& S = *rep.system();
    std::unordered_map<long, bool> memo;
    SparseComparer<T> cmp(rep, zero, one);
    const int n = static_cast<int>(S.size());
    for (RootIndex a = 0; a < n; ++a)
        for (RootIndex b = 0; b < n; ++b) {
            RootSum s = S.sum(a, b);
            if (s.kind == RootSum::Kind::opposite) continue;
            int N = s.kind == RootSum::Kind::root ? S.N(a, b) : 0;
            memo.clear();
            for (long k = 0; k < samples; ++k) {
                T x = draw(), y = draw();
                auto key = memo_key(x, y);
                // [x_a(s), x_b(t)] = z  is checked as  x_a(s) x_b(t) = z x_b(t) x_a(s)
                auto run = [&] {
                    if (a == b) return cmp.equal({{a, x}, {a, y}}, {{a, x + y}});
                    if (s.kind == RootSum::Kind::none) return cmp.equal({{a, x}, {b, y}}, {{b, y}, {a, x}});
                    return cmp.equal({{a, x}, {b, y}}, {{s.index, x * y * static_cast<long>(N)}, {b, y}, {a, x}});
                };
                bool ok;
                if (key >= 0) {
                    auto it = memo.find(key);
                    ok = it != memo.end() ? it->second : (memo[key] = run());
                } else {
                    ok = run();
                }
                ++(a == b ? rep_out.r1 : s.kind == RootSum::Kind::none ? rep_out.r2 : rep_out.r3);
                if (!ok) {
                    ++rep_out.failures;
                    if (rep_out.failure_notes.size() < 10)
                        rep_out.failure_notes.push_back(S.root_str(a) + ", " + S.root_str(b) + " at (" + show(x) +
                                                        ", " + show(y) + ")");
                }
            }
        }
}

}  // namespace detail

/**
 * Checks x_a(s)x_a(t) = x_a(s+t), [x_a(s), x_b(t)] = 1 and
 * [x_a(s), x_b(t)] = x_{a+b}(N_ab st) as matrix identities for every ordered
 * pair of roots and `samples` random argument pairs.
 */
inline RelationReport verify_relations(const Representation& rep, const Ring& R, long samples, std::uint64_t seed = 1) {
    RelationReport out;
    out.representation = rep.name();
    out.ring = R.str();
    out.samples = samples;
    Rng64 g(seed);
    if (auto fr = FastRing::from(R)) {
        try {
            const FastRing& F = *fr;
            with_degree(F, [&](auto deg) {
                constexpr int D = decltype(deg)::value;
                detail::relation_sweep<Fast<D>>(
                    rep, F.zero<D>(), F.one<D>(), samples, [&] { return F.random<D>(g); },
                    [&](const Fast<D>& x) { return F.to_elem(x).str(); },
                    [&](const Fast<D>& x, const Fast<D>& y) {
                        if (D != 1 || F.modulus() == 0 || F.modulus() > 64) return -1L;
                        return static_cast<long>(x.c[0] * F.modulus() + y.c[0]);
                    },
                    out);
            });
            return out;
        } catch (const std::overflow_error&) {
            out = RelationReport{};
            out.representation = rep.name();
            out.ring = R.str();
            out.samples = samples;
            g.seed(seed);
        }
    }
    detail::relation_sweep<Elem>(
        rep, R.zero(), R.one(), samples, [&] { return random_element(R, g); }, [](const Elem& x) { return x.str(); },
        [](const Elem&, const Elem&) { return -1L; }, out);
    return out;
}

/// [e_a, e_b] = N_ab e_{a+b} (and = 0 when a + b is not a root or zero) in rep.
inline long bracket_violations(const Representation& rep) {
    const RootSystem& S = *rep.system();
    const int n = rep.dim();
    // sparse product X Y as a map (row, col) -> value
    auto product = [&](RootIndex x, RootIndex y, long sign, std::map<std::pair<int, int>, long>& acc) {
        for (int j : rep.support(y))
            for (const auto& ey : rep.e_col(y, j))
                for (const auto& ex : rep.e_col(x, ey.row)) acc[{ex.row, j}] += sign * ex.val * ey.val;
    };
    long bad = 0;
    for (RootIndex a = 0; a < static_cast<RootIndex>(S.size()); ++a)
        for (RootIndex b = 0; b < static_cast<RootIndex>(S.size()); ++b) {
            RootSum s = S.sum(a, b);
            if (s.kind == RootSum::Kind::opposite) continue;
            std::map<std::pair<int, int>, long> c;
            product(a, b, 1, c);
            product(b, a, -1, c);
            if (s.kind == RootSum::Kind::root)
                for (int j = 0; j < n; ++j)
                    for (const auto& en : rep.e_col(s.index, j)) c[{en.row, j}] -= S.N(a, b) * en.val;
            for (const auto& kv : c)
                if (kv.second != 0) {
                    ++bad;
                    break;
                }
        }
    return bad;
}

/**
 * Necessary condition for y_a(s, rt) = y_a(sr, t) modulo the relative Steinberg
 * group of AB: equal images in G(R/AB).  Checked in the adjoint representation
 * and, for type A, in the defining one.
 */
inline bool check_congruence_lemma(const SystemPtr& sys, RootIndex root, const Elem& s, const Elem& t, const Elem& r,
                                   const Ideal& A, const Ideal& B) {
    if (!A.contains(s)) throw PreconditionFailed(s.str() + " is not in the first ideal");
    if (!B.contains(t)) throw PreconditionFailed(t.str() + " is not in the second ideal");
    Ring Q;
    try {
        Q = Ideal{A.generator * B.generator}.quotient_ring();
    } catch (const Error& e) {
        throw Unsupported(std::string("quotient by the product ideal is not effective: ") + e.what());
    }
    SteinbergWord lhs = change_ring(y_element(sys, root, s, r * t), Q);
    SteinbergWord rhs = change_ring(y_element(sys, root, s * r, t), Q);
    if (!rep_equal(lhs, rhs, RepKind::adjoint)) return false;
    if (sys->type() == RootType::A && !rep_equal(lhs, rhs, RepKind::defining)) return false;
    return true;
}

}  // namespace stlab
