#pragma once

#include <optional>
#include <string>
#include <utility>

#include "stlab/hom.hpp"
#include "stlab/ring.hpp"

namespace stlab {

/// The element (x, g - g(0)) of R x tR_a[t]; requires x = g(0) in R_a.
inline Elem milnor_square_pullback(const Ring& milnor, const Elem& x, const Elem& g) {
    if (milnor.kind() != RingKind::milnor) throw PreconditionFailed("expected a Milnor ring");
    if (x.ring() != milnor.base() || g.ring() != milnor.series())
        throw RingMismatch("pullback arguments must lie in R and R_a[t]");
    auto c = coefficients(g);
    Elem g0 = c.empty() ? milnor.localized().zero() : c[0];
    if (coerce(x, milnor.localized()) != g0)
        throw PreconditionFailed("incompatible pair: " + x.str() + " differs from g(0) = " + g0.str());
    return pair_elem(milnor, x, g - coerce(g0, milnor.series()));
}

/// The two legs R x tR_a[t] -> R and -> R_a[t] of the square.
inline std::pair<Elem, Elem> milnor_square_projections(const Elem& m) {
    const Ring& M = m.ring();
    if (M.kind() != RingKind::milnor) throw PreconditionFailed("expected an element of a Milnor ring");
    Elem x = m.first();
    return {x, coerce(coerce(x, M.localized()), M.series()) + m.second()};
}

/// An element r/a^s of R_a split as (principal, integral) with principal = r*y*(b/a)^s, integral = r*x.
struct BezoutParts {
    Elem principal;  // in b^s R_a
    Elem integral;   // in R
    Elem x, y;       // x a^s + y b^s = 1
};

inline BezoutParts bezout_decompose(const Elem& r_over_as, const Elem& b, long s) {
    const Ring& ra = r_over_as.ring();
    if (ra.kind() != RingKind::localization) throw PreconditionFailed("input must lie in a localization R_a");
    const Ring& R = ra.base();
    if (b.ring() != R) throw RingMismatch("b must lie in the base ring");
    if (s < 0) throw PreconditionFailed("negative exponent");
    const Elem& a = ra.multiplier();
    if (r_over_as.exponent() > s) throw PreconditionFailed("input is not of the form r/a^s for the given s");
    Elem r = r_over_as.numerator() * a.pow(static_cast<unsigned long>(s - r_over_as.exponent()));
    Elem as = a.pow(static_cast<unsigned long>(s));
    Elem bs = b.pow(static_cast<unsigned long>(s));
    Bezout e = bezout(as, bs);
    if (!e.g.is_one()) throw PreconditionFailed(a.str() + " and " + b.str() + " are not coprime");
    BezoutParts out;
    out.x = e.x;
    out.y = e.y;
    out.integral = r * e.x;
    out.principal = divide(coerce(r * e.y * bs, ra), coerce(as, ra));
    return out;
}

/// g in R[u] (u = 1/t) with f = t^n g, for f monic of degree n in R[t].
struct ReciprocalWitness {
    Elem g;
    unsigned n = 0;
};

inline ReciprocalWitness reciprocal_localization_witness(const Elem& f) {
    const Ring& P = f.ring();
    if (P.kind() != RingKind::polynomial || P.nvars() != 1) throw PreconditionFailed("expected a univariate polynomial");
    auto c = coefficients(f);
    if (c.empty() || !c.back().is_one()) throw PreconditionFailed("polynomial " + f.str() + " is not monic");
    std::string name = P.vars()[0] + "inv";
    while (P.variable(name)) name += "_";
    Ring Q = polynomial_ring(P.base(), {name});
    const std::size_t n = c.size() - 1;
    std::vector<Elem> rev(c.rbegin(), c.rend());
    return {from_coefficients(Q, rev), static_cast<unsigned>(n)};
}

/// Image of a polynomial in 1/t inside R[t][1/t].
inline Elem laurent_image(const Elem& g_in_inverse_var, const Ring& laurent) {
    if (laurent.kind() != RingKind::localization || laurent.base().kind() != RingKind::polynomial)
        throw PreconditionFailed("expected R[t][1/t]");
    Elem tinv = inverse(coerce(laurent.multiplier(), laurent));
    return RingHom::evaluation(g_in_inverse_var.ring(), laurent, {tinv})(g_in_inverse_var);
}

/**
 * Excision datum B -> A with h in B and B/h = A/h: the Zariski instance
 * B = R, A = R[1/a], h = b (a, b coprime), or the identity instance B = A = R.
 */
class PatchDatum {
public:
    enum class Kind { zariski, identity };

    static PatchDatum zariski(const Ring& R, const Elem& a, const Elem& b) {
        if (a.ring() != R || b.ring() != R) throw RingMismatch("a and b must lie in R");
        Bezout e = bezout(a, b);
        if (!e.g.is_one()) throw PreconditionFailed(a.str() + " and " + b.str() + " are not coprime");
        PatchDatum d;
        d.kind_ = Kind::zariski;
        d.B_ = R;
        d.a_ = a;
        d.h_ = b;
        d.A_ = localization(R, a);
        d.Bh_ = localization(R, b);
        d.Ah_ = localization(R, a * b);
        return d;
    }

    static PatchDatum identity(const Ring& R, const Elem& h) {
        if (h.ring() != R) throw RingMismatch("h must lie in R");
        PatchDatum d;
        d.kind_ = Kind::identity;
        d.B_ = d.A_ = R;
        d.h_ = h;
        d.a_ = R.one();
        d.Bh_ = d.Ah_ = localization(R, h);
        return d;
    }

    Kind kind() const { return kind_; }
    const Ring& B() const { return B_; }
    const Ring& A() const { return A_; }
    const Ring& Bh() const { return Bh_; }
    const Ring& Ah() const { return Ah_; }
    const Elem& h() const { return h_; }
    const Elem& a() const { return a_; }

    Elem iota(const Elem& x) const { return coerce(x, A_); }
    Elem lambda_B(const Elem& x) const { return coerce(x, Bh_); }
    Elem lambda_A(const Elem& x) const { return coerce(x, Ah_); }
    Elem iota_h(const Elem& x) const { return coerce(x, Ah_); }

    /// h^k inside B (side 0) or A (side 1).
    Elem h_power(long k, const Ring& side) const { return coerce(h_, side).pow(static_cast<unsigned long>(k)); }

    /// c = a h^k + b with a in A and b in B.
    std::pair<Elem, Elem> decompose(const Elem& c, long k) const {
        if (c.ring() != A_) throw RingMismatch("decompose expects an element of A = " + A_.str());
        if (k < 0) throw PreconditionFailed("negative exponent");
        if (kind_ == Kind::identity) return {A_.zero(), c};
        long s = c.exponent();
        const Elem& r = c.numerator();
        if (s == 0) return {A_.zero(), r};
        Bezout e = bezout(a_.pow(static_cast<unsigned long>(s)), h_.pow(static_cast<unsigned long>(k)));
        if (!e.g.is_one()) throw PreconditionFailed("no Bezout identity for the decomposition");
        Elem b = r * e.x;
        Elem a = divide(iota(r * e.y), iota(a_).pow(static_cast<unsigned long>(s)));
        return {a, b};
    }

    /// Preimage of x in A under B -> A, if any.
    std::optional<Elem> lift_to_B(const Elem& x) const {
        if (x.ring() != A_) throw RingMismatch("lift_to_B expects an element of A");
        if (kind_ == Kind::identity) return x;
        if (x.exponent() != 0) return std::nullopt;
        return x.numerator();
    }

    /// x in B_h written as num / h^s with num in B.
    std::pair<Elem, long> split_Bh(const Elem& x) const {
        if (x.ring() != Bh_) throw RingMismatch("split_Bh expects an element of B_h");
        return {x.numerator(), x.exponent()};
    }

    std::string str() const {
        if (kind_ == Kind::identity) return "identity(" + B_.str() + ", h=" + h_.str() + ")";
        return "zariski(" + B_.str() + ", a=" + a_.str() + ", h=" + h_.str() + ")";
    }

private:
    PatchDatum() = default;
    Kind kind_ = Kind::identity;
    Ring B_, A_, Bh_, Ah_;
    Elem h_, a_;
};

/// decompose_modulo_power: c = a h^k + b.
inline std::pair<Elem, Elem> decompose_modulo_power(const PatchDatum& d, const Elem& c, long k) {
    return d.decompose(c, k);
}

}  // namespace stlab
