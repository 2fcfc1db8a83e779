#pragma once

/** @file
 * Patching along an excision datum B -> A, h in B: the truncated pro-rng h^k B,
 * conjugation homomorphisms c_g : St(Phi, h^n B) -> St(Phi, B) for g over B_h,
 * the orbit set of pairs (u, v) with its star action, and the operators T_a(c/h^s).
 *
 * Equalities of pairs are decided on mu(u, v) = u v in G(A_h).
 */

#include <cstdlib>
#include <optional>
#include <string>
#include <vector>

#include "stlab/constructions.hpp"
#include "stlab/representation.hpp"
#include "stlab/word.hpp"

namespace stlab {

/// Truncation depth, overridable through STEINBERG_LAB_DEPTH.
inline long pro_depth() {
    if (const char* e = std::getenv("STEINBERG_LAB_DEPTH")) {
        long d = std::atol(e);
        if (d > 0) return d;
    }
    return 16;
}

/// The system h^k R (0 <= k <= depth) with inclusions h^{k+1}R -> h^k R.
class TruncatedProRng {
public:
    TruncatedProRng(Ring base, Elem h, long depth = pro_depth()) : base_(std::move(base)), h_(std::move(h)), depth_(depth) {
        if (h_.ring() != base_) throw RingMismatch("h must lie in the base ring");
        if (h_.is_zero()) throw PreconditionFailed("h must be nonzero");
    }

    const Ring& base() const { return base_; }
    const Elem& h() const { return h_; }
    long depth() const { return depth_; }

    Elem generator(long k) const {
        check_level(k);
        return h_.pow(static_cast<unsigned long>(k));
    }

    bool contains(const Elem& x, long k) const {
        check_level(k);
        return try_divide(x, generator(k)).has_value();
    }

    /// Largest k <= depth with x in h^k R.
    long level_of(const Elem& x) const {
        long k = 0;
        while (k < depth_ && contains(x, k + 1)) ++k;
        return k;
    }

    /// The structure map h^{k+1}R -> h^k R.
    Elem structure_map(const Elem& x, long k) const {
        if (!contains(x, k + 1)) throw PreconditionFailed(x.str() + " is not in level " + std::to_string(k + 1));
        return x;
    }

private:
    void check_level(long k) const {
        if (k < 0 || k > depth_)
            throw PreconditionFailed("level " + std::to_string(k) + " outside the truncation depth " +
                                     std::to_string(depth_));
    }

    Ring base_;
    Elem h_;
    long depth_;
};

/// x in A_h written as c / h^s with c in A.
inline std::pair<Elem, long> split_Ah(const PatchDatum& d, const Elem& x) {
    if (x.ring() != d.Ah()) throw RingMismatch("expected an element of " + d.Ah().str());
    long e = x.exponent();
    Elem num = coerce(x.numerator(), d.A());
    if (d.kind() == PatchDatum::Kind::identity) return {num, e};
    return {divide(num, d.iota(d.a()).pow(static_cast<unsigned long>(e))), e};
}

namespace detail {

/// x_root(b h^K) with the exponent kept symbolic.
struct Tracked {
    RootIndex root;
    Elem b;
    long K;
};

/// x_root(a / h^s).
struct GLetter {
    RootIndex root;
    Elem a;
    long s;
};

inline void append_inverse(std::vector<Tracked>& out, const std::vector<Tracked>& x) {
    for (auto it = x.rbegin(); it != x.rend(); ++it) out.push_back({it->root, -it->b, it->K});
}

/**
 * g x g^-1 for g = x_beta(a/h^s) and x = x_gamma(b h^K), as letters of exponent >= T.
 * Needs K >= T + s, and K >= 2(T + s) when gamma = -beta.
 */
inline void conj_letter(const RootSystem& S, const GLetter& g, const Tracked& x, long T, std::vector<Tracked>& out) {
    RootSum sum = S.sum(g.root, x.root);
    if (x.root == g.root || sum.kind == RootSum::Kind::none) {
        out.push_back(x);
        return;
    }
    if (sum.kind == RootSum::Kind::root) {
        if (x.K - g.s < T) throw InsufficientExponent("exponent too small for conjugation");
        out.push_back({sum.index, g.a * x.b * static_cast<long>(S.N(g.root, x.root)), x.K - g.s});
        out.push_back(x);
        return;
    }
    // x_{-beta}(c) = [x_p(N b h^K1), x_q(h^K2)] with p + q = -beta
    auto [p, q] = S.commutator_decomposition(x.root);
    const long N = S.N(p, q);
    const long K2 = T + g.s, K1 = x.K - K2;
    if (K1 < T + g.s) throw InsufficientExponent("exponent too small for conjugation on the opposite root");
    std::vector<Tracked> X, Y;
    conj_letter(S, g, {p, x.b * N, K1}, T, X);
    conj_letter(S, g, {q, x.b.ring().one(), K2}, T, Y);
    out.insert(out.end(), X.begin(), X.end());
    out.insert(out.end(), Y.begin(), Y.end());
    append_inverse(out, X);
    append_inverse(out, Y);
}

}  // namespace detail

/**
 * c_g for g over B_h.  Letter i of g = x_1 ... x_m, x_i = x_b(a/h^s), maps
 * exponent 2(T + s) to exponent T; the bound n(g) composes these maps along
 * c_g = c_{x_1} o ... o c_{x_m}.  Works on words over B and, through B -> A, over A.
 */
class ConjHom {
public:
    ConjHom(const PatchDatum& d, SteinbergWord g, long slack = 0) : d_(d), g_(std::move(g)), slack_(slack) {
        if (g_.ring() != d_.Bh()) throw RingMismatch("conjugating word must lie over " + d_.Bh().str());
        if (slack_ < 0) throw PreconditionFailed("negative slack");
        T_.push_back(0);
        for (const auto& l : g_.letters()) {
            auto [a, s] = d_.split_Bh(l.arg);
            letters_.push_back({l.root, a, s});
            T_.push_back(2 * (T_.back() + s));
        }
    }

    const SteinbergWord& g() const { return g_; }
    const PatchDatum& datum() const { return d_; }
    /// Exponent required of the arguments, slack included.
    long bound() const { return T_.back() + slack_; }
    long slack() const { return slack_; }

    /// c_g(w) for w over B or A with every argument in h^bound.
    SteinbergWord apply(const SteinbergWord& w) const {
        const Ring& R = w.ring();
        if (R != d_.B() && R != d_.A()) throw RingMismatch("c_g applies to words over B or A");
        const RootSystem& S = *w.system();
        const Elem h = coerce(d_.h(), R);
        std::vector<Elem> hp{R.one()};
        auto hpow = [&](long k) -> const Elem& {
            while (static_cast<long>(hp.size()) <= k) hp.push_back(hp.back() * h);
            return hp[static_cast<std::size_t>(k)];
        };
        std::vector<detail::GLetter> gl;
        for (const auto& l : letters_) gl.push_back({l.root, coerce(l.a, R), l.s});
        const long m = static_cast<long>(gl.size());
        std::vector<detail::Tracked> cur;
        for (const auto& l : w.letters()) {
            auto b = try_divide(l.arg, hpow(bound()));
            if (!b) throw InsufficientExponent(l.arg.str() + " is not divisible by h^" + std::to_string(bound()));
            cur.push_back({l.root, *b * hpow(slack_), T_.back()});
        }
        for (long i = m - 1; i >= 0; --i) {
            std::vector<detail::Tracked> next;
            const long need = T_[static_cast<std::size_t>(i) + 1];
            for (auto x : cur) {
                if (x.K > need) {
                    x.b = x.b * hpow(x.K - need);
                    x.K = need;
                }
                detail::conj_letter(S, gl[static_cast<std::size_t>(i)], x, T_[static_cast<std::size_t>(i)], next);
            }
            cur = std::move(next);
        }
        std::vector<Letter> out;
        out.reserve(cur.size());
        for (const auto& x : cur) out.push_back({x.root, x.b * hpow(x.K), 1});
        return SteinbergWord::from_letters(w.system(), R, out);
    }

private:
    struct Stored {
        RootIndex root;
        Elem a;
        long s;
    };
    PatchDatum d_;
    SteinbergWord g_;
    long slack_;
    std::vector<Stored> letters_;
    std::vector<long> T_;  // T_[i]: exponent produced by letter i; T_[m] = n(g)
};

/// c_{x_beta(a/h^s)}(x_gamma(b h^k)) as a word over B.
inline SteinbergWord conj_on_generator(const PatchDatum& d, const SystemPtr& sys, RootIndex beta, const Elem& a, long s,
                                       RootIndex gamma, const Elem& b, long k) {
    if (a.ring() != d.B() || b.ring() != d.B()) throw RingMismatch("a and b must lie in B");
    if (s < 0 || k < 0) throw PreconditionFailed("negative exponent");
    const bool opposite = sys->negative(beta) == gamma;
    if (k < (opposite ? 2 * s : s))
        throw InsufficientExponent("k = " + std::to_string(k) + " below the required " +
                                   std::to_string(opposite ? 2 * s : s));
    std::vector<detail::Tracked> out;
    detail::conj_letter(*sys, {beta, a, s}, {gamma, b, k}, 0, out);
    const Elem h = d.h();
    std::vector<Letter> ls;
    for (const auto& x : out) ls.push_back({x.root, x.b * h.pow(static_cast<unsigned long>(x.K)), 1});
    return SteinbergWord::from_letters(sys, d.B(), ls);
}

/// c_g(w) together with the bound it required.
struct ConjResult {
    SteinbergWord word;
    long bound;
};

inline ConjResult conj_word(const PatchDatum& d, const SteinbergWord& g, const SteinbergWord& w, long slack = 0) {
    ConjHom c(d, g, slack);
    return {c.apply(w), c.bound()};
}

// ---------------------------------------------------------------------------
// Orbit pairs

struct PatchPair {
    SteinbergWord u;  // over B_h
    SteinbergWord v;  // over A
};

inline PatchPair unit_pair(const PatchDatum& d, const SystemPtr& sys) { return {empty_word(sys, d.Bh()), empty_word(sys, d.A())}; }

/// u v as a word over A_h.
inline SteinbergWord mu_word(const PatchDatum& d, const PatchPair& p) {
    return change_ring(p.u, d.Ah()) * change_ring(p.v, d.Ah());
}

/// Equality of images in G(A_h) (adjoint), computed over Q when A_h embeds there.
inline bool image_equal(const SteinbergWord& x, const SteinbergWord& y) {
    x.check_compatible(y);
    const Ring Q = rationals();
    if (x.ring() != Q && has_coercion(x.ring(), Q)) {
        auto conv = [&](const SteinbergWord& w) {
            std::vector<TLetter<BigRat>> out;
            for (const auto& l : w.letters()) out.push_back({l.root, coerce(l.sign < 0 ? -l.arg : l.arg, Q).rat_value()});
            return out;
        };
        auto rep = Representation::adjoint(x.system());
        SparseComparer<BigRat> cmp(*rep, BigRat(0), BigRat(1));
        return cmp.equal(conv(x), conv(y));
    }
    return rep_equal(x, y, RepKind::adjoint);
}

/// g * (u, v) = (u lambda_h(g)^-1, iota(g) v) for g over B.
inline PatchPair star_reduce(const PatchDatum& d, const PatchPair& p, const SteinbergWord& g) {
    if (g.ring() != d.B()) throw RingMismatch("star action needs a word over B");
    return {p.u * change_ring(g, d.Bh()).inverse(), change_ring(g, d.A()) * p.v};
}

struct TOptions {
    std::optional<long> k;      // exponent in c = a h^k + b; defaults to the least admissible
    std::optional<Elem> shift;  // replaces (a, b) by (a + d, b - d h^k), d in B
    long slack = 0;
};

/// T_alpha(c/h^s) (u, v) = (x_alpha(b/h^s) u, c_{u^-1}(x_alpha(a h^{k-s})) v) with c = a h^k + b.
inline PatchPair T_alpha(const PatchDatum& d, RootIndex alpha, const Elem& c, long s, const PatchPair& p,
                         const TOptions& opt = {}) {
    if (c.ring() != d.A()) throw RingMismatch("T_alpha expects c in A = " + d.A().str());
    if (s < 0) throw PreconditionFailed("negative exponent");
    const SystemPtr& sys = p.u.system();
    ConjHom ch(d, p.u.inverse(), opt.slack);
    const long kmin = ch.bound() + s;
    const long k = opt.k.value_or(kmin);
    if (k < kmin) throw InsufficientExponent("k = " + std::to_string(k) + " below n + s = " + std::to_string(kmin));
    auto [a, b] = d.decompose(c, k);
    if (opt.shift) {
        if (opt.shift->ring() != d.B()) throw RingMismatch("shift must lie in B");
        a = a + d.iota(*opt.shift);
        b = b - *opt.shift * d.h_power(k, d.B());
    }
    Elem bh = divide(d.lambda_B(b), d.h_power(s, d.Bh()));
    SteinbergWord u = gen(sys, alpha, bh) * p.u;
    SteinbergWord x = gen(sys, alpha, a * d.h_power(k - s, d.A()));
    SteinbergWord v = ch.apply(x) * p.v;
    return {u, v};
}

/// Iterated T-operators realizing the left action of a word over A_h.
inline PatchPair act(const PatchDatum& d, const SteinbergWord& g, const PatchPair& p, long slack = 0) {
    if (g.ring() != d.Ah()) throw RingMismatch("acting word must lie over " + d.Ah().str());
    PatchPair q = p;
    const auto& ls = g.letters();
    for (auto it = ls.rbegin(); it != ls.rend(); ++it) {
        auto [c, s] = split_Ah(d, it->arg);
        TOptions o;
        o.slack = slack;
        q = T_alpha(d, it->root, c, s, q, o);
    }
    return q;
}

// ---------------------------------------------------------------------------
// Verification sweeps

struct TReport {
    long samples = 0;
    long r1 = 0, r2 = 0, r3 = 0;
    long independence = 0, equivariance = 0, additional = 0, star = 0;
    long failures = 0;
    std::vector<std::string> notes;
    bool ok() const { return failures == 0; }
};

namespace detail {

inline void tally(TReport& r, bool ok, const std::string& what) {
    if (ok) return;
    ++r.failures;
    if (r.notes.size() < 10) r.notes.push_back(what);
}

inline PatchPair random_pair(const PatchDatum& d, const SystemPtr& sys, Rng64& g) {
    RandomSpec spec;
    spec.int_range = 4;
    spec.max_exp = 1;
    return {random_word(sys, d.Bh(), 1, g, spec), random_word(sys, d.A(), 2, g, spec)};
}

inline Elem random_A(const PatchDatum& d, Rng64& g) {
    RandomSpec spec;
    spec.int_range = 5;
    spec.max_exp = 2;
    return random_element(d.A(), g, spec);
}

/// c / h^s as an element of A_h.
inline Elem over_h(const PatchDatum& d, const Elem& c, long s) {
    return divide(d.iota_h(c), d.h_power(s, d.Ah()));
}

}  // namespace detail

/**
 * For random pairs p, roots and arguments: the relations of the Steinberg group
 * for the operators T, independence of (k, decomposition), equivariance of mu,
 * the patterns T_a(b/h^s)(u, v) = (x_a(b/h^s) u, v) for b in B and
 * v (1, 1) = (1, v) on mu-images, and invariance of mu under the star action.
 */
inline TReport verify_T_relations(const PatchDatum& d, const SystemPtr& sys, long samples, std::uint64_t seed = 1) {
    TReport rep;
    rep.samples = samples;
    Rng64 g(seed);
    const RootSystem& S = *sys;
    const auto nroots = static_cast<long>(S.size());
    auto root = [&] { return static_cast<RootIndex>(uniform_long(g, 0, nroots - 1)); };
    auto pick = [&](RootSum::Kind kind) {
        for (;;) {
            RootIndex a = root(), b = root();
            if (a != b && S.sum(a, b).kind == kind) return std::make_pair(a, b);
        }
    };
    for (long i = 0; i < samples; ++i) {
        PatchPair p = detail::random_pair(d, sys, g);
        const SteinbergWord mp = mu_word(d, p);
        RootIndex a = root();
        Elem c = detail::random_A(d, g), c2 = detail::random_A(d, g);
        long s = uniform_long(g, 0, 1), s2 = uniform_long(g, 0, 1);

        // R1
        {
            PatchPair lhs = T_alpha(d, a, c2, s, T_alpha(d, a, c, s, p));
            PatchPair rhs = T_alpha(d, a, c + c2, s, p);
            detail::tally(rep, image_equal(mu_word(d, lhs), mu_word(d, rhs)), "R1 on " + S.root_str(a));
            ++rep.r1;
        }
        // R2
        {
            auto [x, y] = pick(RootSum::Kind::none);
            PatchPair q = T_alpha(d, y, -c2, s2, T_alpha(d, x, -c, s, T_alpha(d, y, c2, s2, T_alpha(d, x, c, s, p))));
            detail::tally(rep, image_equal(mu_word(d, q), mp), "R2 on " + S.root_str(x) + ", " + S.root_str(y));
            ++rep.r2;
        }
        // R3: [T_x(c/h^s), T_y(c2/h^s2)] = T_{x+y}(N c c2 / h^{s+s2})
        {
            auto [x, y] = pick(RootSum::Kind::root);
            RootIndex z = S.sum(x, y).index;
            // the operator applied first acts innermost: T_x T_y T_x^-1 T_y^-1 p
            PatchPair lhs =
                T_alpha(d, x, c, s, T_alpha(d, y, c2, s2, T_alpha(d, x, -c, s, T_alpha(d, y, -c2, s2, p))));
            PatchPair rhs = T_alpha(d, z, c * c2 * static_cast<long>(S.N(x, y)), s + s2, p);
            detail::tally(rep, image_equal(mu_word(d, lhs), mu_word(d, rhs)),
                          "R3 on " + S.root_str(x) + ", " + S.root_str(y));
            ++rep.r3;
        }
        // independence of k and of the decomposition
        {
            PatchPair base = T_alpha(d, a, c, s, p);
            ConjHom ch(d, p.u.inverse());
            TOptions o1;
            o1.k = ch.bound() + s + 2;
            TOptions o2;
            o2.shift = d.B().from_int(uniform_long(g, -5, 5));
            TOptions o3 = o1;
            o3.shift = o2.shift;
            bool ok = true;
            for (const auto& o : {o1, o2, o3})
                ok = ok && image_equal(mu_word(d, T_alpha(d, a, c, s, p, o)), mu_word(d, base));
            detail::tally(rep, ok, "independence on " + S.root_str(a));
            ++rep.independence;
        }
        // equivariance
        {
            PatchPair q = T_alpha(d, a, c, s, p);
            SteinbergWord expect = gen(sys, a, detail::over_h(d, c, s)) * mp;
            detail::tally(rep, image_equal(mu_word(d, q), expect), "equivariance on " + S.root_str(a));
            ++rep.equivariance;
        }
        // additional patterns
        {
            Elem b = random_element(d.B(), g);
            PatchPair q = T_alpha(d, a, d.iota(b), s, p);
            SteinbergWord u = gen(sys, a, divide(d.lambda_B(b), d.h_power(s, d.Bh()))) * p.u;
            bool ok = q.u == u && q.v == p.v;
            RandomSpec spec;
            spec.int_range = 4;
            SteinbergWord v = random_word(sys, d.A(), 3, g, spec);
            PatchPair r = act(d, change_ring(v, d.Ah()), unit_pair(d, sys));
            ok = ok && image_equal(mu_word(d, r), change_ring(v, d.Ah()));
            detail::tally(rep, ok, "additional patterns on " + S.root_str(a));
            ++rep.additional;
        }
        // star invariance
        {
            SteinbergWord w = random_word(sys, d.B(), 3, g);
            detail::tally(rep, image_equal(mu_word(d, star_reduce(d, p, w)), mp), "star invariance");
            ++rep.star;
        }
    }
    return rep;
}

// ---------------------------------------------------------------------------
// Glueing

struct GlueResult {
    SteinbergWord y;       // over B
    PatchPair orbit;       // g (1, 1)
    std::string method;    // "lift" or "reduce-then-lift"
    bool orbit_ok = false;   // mu(g (1, 1)) = g
    bool iota_ok = false;    // iota(y) = x
    bool lambda_ok = false;  // lambda_h(y) = g
};

/**
 * Preimage y over B of x over A, given a certificate g over A_h with
 * lambda_h(x) = g in G(A_h).  The orbit g (1, 1) is computed and checked; y is
 * produced from x by lifting its arguments to B, after sound rewriting if needed.
 */
inline GlueResult glueing_demo(const PatchDatum& d, const SteinbergWord& x, const std::optional<SteinbergWord>& certificate) {
    if (x.ring() != d.A()) throw RingMismatch("target word must lie over A = " + d.A().str());
    if (!certificate) throw CertificateMissing("no certificate word over A_h supplied");
    const SteinbergWord& g = *certificate;
    if (g.ring() != d.Ah()) throw RingMismatch("certificate must lie over A_h = " + d.Ah().str());
    if (!image_equal(change_ring(x, d.Ah()), g)) throw CertificateMissing("certificate does not match lambda_h(x)");
    GlueResult out;
    out.orbit = act(d, g, unit_pair(d, x.system()));
    out.orbit_ok = image_equal(mu_word(d, out.orbit), g);
    auto lift = [&](const SteinbergWord& w) -> std::optional<SteinbergWord> {
        std::vector<Letter> ls;
        for (const auto& l : w.letters()) {
            auto b = d.lift_to_B(l.arg);
            if (!b) return std::nullopt;
            ls.push_back({l.root, *b, 1});
        }
        return SteinbergWord::from_letters(w.system(), d.B(), ls);
    };
    auto y = lift(x);
    out.method = "lift";
    if (!y) {
        y = lift(commutator_reduce(x));
        out.method = "reduce-then-lift";
    }
    if (!y) throw Unsupported("no constructive preimage found for " + x.str());
    out.y = *y;
    out.iota_ok = image_equal(change_ring(out.y, d.A()), x);
    out.lambda_ok = image_equal(change_ring(out.y, d.Ah()), g);
    return out;
}

}  // namespace stlab
