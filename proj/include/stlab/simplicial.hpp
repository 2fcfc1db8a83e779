#pragma once

/** @file
 * The simplicial ring R[Delta^n] = R[t_1..t_n] (t_0 = 1 - sum t_i) for n <= 3,
 * its faces and degeneracies, and the low-degree Moore complex generators.
 */

#include <string>
#include <vector>

#include "stlab/hom.hpp"
#include "stlab/word.hpp"

namespace stlab {

constexpr int max_simplicial_level = 3;

/// R[Delta^n]; level 0 is R itself.
inline Ring simplicial_level(const Ring& R, int n) {
    if (n < 0 || n > max_simplicial_level)
        throw PreconditionFailed("simplicial level must lie in [0, " + std::to_string(max_simplicial_level) + "]");
    if (n == 0) return R;
    std::vector<std::string> vars;
    for (int i = 1; i <= n; ++i) vars.push_back("t" + std::to_string(i));
    return polynomial_ring(R, vars);
}

namespace detail {

/// t_j in R[Delta^n] for 0 <= j <= n.
inline Elem simplex_coord(const Ring& R, int n, int j) {
    Ring L = simplicial_level(R, n);
    if (j > 0) return L.gen(static_cast<std::size_t>(j - 1));
    Elem s = L.one();
    for (int i = 1; i <= n; ++i) s = s - L.gen(static_cast<std::size_t>(i - 1));
    return s;
}

inline RingHom simplex_map(const Ring& R, int from, int to, const std::vector<Elem>& images, const std::string& name) {
    Ring src = simplicial_level(R, from), dst = simplicial_level(R, to);
    if (from == 0) {
        RingHom inc = RingHom::canonical(src, dst);
        return RingHom(src, dst, [inc](const Elem& x) { return inc(x); }, name);
    }
    RingHom ev = RingHom::evaluation(src, dst, images);
    return RingHom(src, dst, [ev](const Elem& x) { return ev(x); }, name);
}

}  // namespace detail

/// d_i : R[Delta^n] -> R[Delta^{n-1}].
inline RingHom face(const Ring& R, int i, int n) {
    if (n < 1 || n > max_simplicial_level || i < 0 || i > n)
        throw PreconditionFailed("face d_" + std::to_string(i) + " undefined on level " + std::to_string(n));
    std::vector<Elem> images;
    for (int j = 1; j <= n; ++j) {
        if (j < i)
            images.push_back(detail::simplex_coord(R, n - 1, j));
        else if (j == i)
            images.push_back(simplicial_level(R, n - 1).zero());
        else
            images.push_back(detail::simplex_coord(R, n - 1, j - 1));
    }
    return detail::simplex_map(R, n, n - 1, images, "d" + std::to_string(i) + "@" + std::to_string(n));
}

/// s_i : R[Delta^n] -> R[Delta^{n+1}].
inline RingHom degeneracy(const Ring& R, int i, int n) {
    if (n < 0 || n + 1 > max_simplicial_level || i < 0 || i > n)
        throw PreconditionFailed("degeneracy s_" + std::to_string(i) + " undefined on level " + std::to_string(n));
    std::vector<Elem> images;
    for (int j = 1; j <= n; ++j) {
        if (j < i)
            images.push_back(detail::simplex_coord(R, n + 1, j));
        else if (j == i)
            images.push_back(detail::simplex_coord(R, n + 1, j) + detail::simplex_coord(R, n + 1, j + 1));
        else
            images.push_back(detail::simplex_coord(R, n + 1, j + 1));
    }
    return detail::simplex_map(R, n, n + 1, images, "s" + std::to_string(i) + "@" + std::to_string(n));
}

struct IdentityReport {
    long checked = 0;
    long failed = 0;
    std::vector<std::string> failures;
    bool ok() const { return failed == 0; }
};

/**
 * Checks d_i d_j = d_{j-1} d_i (i < j), s_i s_j = s_{j+1} s_i (i <= j),
 * d_i s_j = s_{j-1} d_i (i < j), d_j s_j = d_{j+1} s_j = id and
 * d_i s_j = s_j d_{i-1} (i > j+1) on the generators of every level involved,
 * for all composites staying within levels <= n_max.
 */
inline IdentityReport simplicial_identity_check(const Ring& R, int n_max) {
    if (n_max < 2 || n_max > max_simplicial_level)
        throw PreconditionFailed("n_max must lie in [2, " + std::to_string(max_simplicial_level) + "]");
    IdentityReport rep;
    auto same = [&](const RingHom& x, const RingHom& y, int level, const std::string& what) {
        ++rep.checked;
        Ring L = simplicial_level(R, level);
        bool ok = true;
        for (std::size_t k = 0; k < static_cast<std::size_t>(level); ++k)
            if (x(L.gen(k)) != y(L.gen(k))) ok = false;
        if (!ok) {
            ++rep.failed;
            rep.failures.push_back(what + " on level " + std::to_string(level));
        }
    };
    auto s = [](int i) { return std::to_string(i); };
    for (int n = 2; n <= n_max; ++n)
        for (int j = 1; j <= n; ++j)
            for (int i = 0; i < j; ++i)
                same(compose(face(R, i, n - 1), face(R, j, n)), compose(face(R, j - 1, n - 1), face(R, i, n)), n,
                     "d" + s(i) + "d" + s(j) + " = d" + s(j - 1) + "d" + s(i));
    for (int n = 0; n + 2 <= n_max; ++n)
        for (int j = 0; j <= n; ++j)
            for (int i = 0; i <= j; ++i)
                same(compose(degeneracy(R, i, n + 1), degeneracy(R, j, n)),
                     compose(degeneracy(R, j + 1, n + 1), degeneracy(R, i, n)), n,
                     "s" + s(i) + "s" + s(j) + " = s" + s(j + 1) + "s" + s(i));
    for (int n = 0; n + 1 <= n_max; ++n)
        for (int j = 0; j <= n; ++j)
            for (int i = 0; i <= n + 1; ++i) {
                RingHom lhs = compose(face(R, i, n + 1), degeneracy(R, j, n));
                std::string what = "d" + s(i) + "s" + s(j);
                if (i == j || i == j + 1) {
                    same(lhs, RingHom::identity(simplicial_level(R, n)), n, what + " = id");
                } else if (i < j) {
                    same(lhs, compose(degeneracy(R, j - 1, n - 1), face(R, i, n)), n,
                         what + " = s" + s(j - 1) + "d" + s(i));
                } else {
                    same(lhs, compose(degeneracy(R, j, n - 1), face(R, i - 1, n)), n,
                         what + " = s" + s(j) + "d" + s(i - 1));
                }
            }
    return rep;
}

// ---------------------------------------------------------------------------
// Moore complex generators

/// g(t_1) x_a(t_1(t_1 - 1) f(t_1)) g(t_1)^-1 over R[Delta^1].
struct MooreGenerator1 {
    RootIndex root = 0;
    Elem f;              // in R[Delta^1]
    SteinbergWord g;     // over R[Delta^1]
    SteinbergWord word;  // the conjugated generator
};

/// g(t_2) x_a(t_1 t_2 f(t_2)) g(t_2)^-1 over R[Delta^2].
struct MooreGenerator2 {
    RootIndex root = 0;
    Elem f;  // in R[Delta^2], a polynomial in t_2
    SteinbergWord g;
    SteinbergWord word;
};

inline MooreGenerator1 moore_generator1(const SystemPtr& sys, RootIndex root, const Elem& f, const SteinbergWord& g) {
    const Ring& L = f.ring();
    if (L.kind() != RingKind::polynomial || L.vars() != std::vector<std::string>{"t1"})
        throw PreconditionFailed("f must lie in R[Delta^1]");
    if (g.ring() != L) throw RingMismatch("g must be a word over " + L.str());
    Elem t = L.gen(0);
    MooreGenerator1 m{root, f, g, {}};
    m.word = conjugate(g, gen(sys, root, t * (t - 1) * f));
    return m;
}

/// Recognizes g x_a(t_1(t_1 - 1) f) g^-1 in a normalized word over R[Delta^1].
inline MooreGenerator1 recognize_moore1(const SteinbergWord& w) {
    const Ring& L = w.ring();
    if (L.kind() != RingKind::polynomial || L.vars() != std::vector<std::string>{"t1"})
        throw PreconditionFailed("word must lie over R[Delta^1]");
    const auto& ls = w.letters();
    if (ls.size() % 2 == 0) throw PreconditionFailed("word is not a conjugated Moore generator");
    const std::size_t m = ls.size() / 2;
    for (std::size_t k = 0; k < m; ++k) {
        const Letter& a = ls[m - 1 - k];
        const Letter& b = ls[m + 1 + k];
        if (a.root != b.root || a.arg != -b.arg) throw PreconditionFailed("word is not a conjugate g x g^-1");
    }
    Elem t = L.gen(0);
    auto f = try_divide(ls[m].arg, t * (t - 1));
    if (!f) throw PreconditionFailed("middle argument is not divisible by t1(t1 - 1)");
    std::vector<Letter> g(ls.begin(), ls.begin() + static_cast<long>(m));
    return moore_generator1(w.system(), ls[m].root, *f, SteinbergWord::from_letters(w.system(), L, g));
}

/// The level-2 lift whose d_0 is the given generator and whose d_1, d_2 vanish.
inline MooreGenerator2 moore_lift(const MooreGenerator1& m1) {
    const Ring& L1 = m1.f.ring();
    const Ring& R = L1.base();
    Ring L2 = simplicial_level(R, 2);
    RingHom to_t2 = RingHom::evaluation(L1, L2, {L2.gen(1)});
    MooreGenerator2 m{m1.root, to_t2(m1.f), substitute(m1.g, to_t2), {}};
    m.word = conjugate(m.g, gen(m1.g.system(), m1.root, -(L2.gen(0) * L2.gen(1) * m.f)));
    return m;
}

inline MooreGenerator2 moore_lift(const SteinbergWord& w) { return moore_lift(recognize_moore1(w)); }

/// x_a(r t_1), whose faces are d_1 = 1 and d_0 = x_a(r).
inline SteinbergWord pi0_connectivity_witness(const SystemPtr& sys, RootIndex root, const Elem& r) {
    Ring L = simplicial_level(r.ring(), 1);
    return gen(sys, root, coerce(r, L) * L.gen(0));
}

// ---------------------------------------------------------------------------
// R[t_1]/(t_1^2 - t_1) = R x R

inline Ring crt_ring(const Ring& R) {
    Ring P = simplicial_level(R, 1);
    Elem t = P.gen(0);
    return quotient(P, t * t - t);
}

/// p -> (p(0), p(1)); accepts R[t_1] or R[t_1]/(t_1^2 - t_1).
inline Elem crt_to_product(const Elem& p) {
    Elem rep = p.ring().kind() == RingKind::quotient ? p.rep() : p;
    const Ring& P = rep.ring();
    const Ring& R = P.base();
    Elem at0 = RingHom::evaluation(P, R, {R.zero()})(rep);
    Elem at1 = RingHom::evaluation(P, R, {R.one()})(rep);
    return pair_elem(product(R, R), at0, at1);
}

/// (a, b) -> a + (b - a) t_1 in R[t_1]/(t_1^2 - t_1).
inline Elem crt_from_product(const Elem& ab) {
    const Ring& RR = ab.ring();
    if (RR.kind() != RingKind::product || RR.left() != RR.right()) throw PreconditionFailed("expected an element of R x R");
    Ring Q = crt_ring(RR.left());
    const Ring& P = Q.base();
    Elem a = coerce(ab.first(), P), b = coerce(ab.second(), P);
    return coerce(a + (b - a) * P.gen(0), Q);
}

}  // namespace stlab
