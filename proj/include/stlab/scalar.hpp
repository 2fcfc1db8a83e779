#pragma once

/** @file
 * Fixed-width scalars for Z/n, F_p, Z and small monic quotients (Z or Z/n)[t]/(f),
 * deg f <= 4.  Over Z every operation is overflow checked.
 */

#include <array>
#include <cstdint>
#include <optional>
#include <random>
#include <stdexcept>

#include "stlab/ring.hpp"

namespace stlab {

class FastRing;

/// An element with D coefficients; D is the degree of the ring over its scalars.
template <int D>
struct Fast {
    const FastRing* ctx = nullptr;
    std::array<std::int64_t, D> c{};
};

class FastRing {
public:
    /// Representation of r if it fits, otherwise nullopt.
    static std::optional<FastRing> from(const Ring& r) {
        FastRing f;
        f.ring_ = r;
        auto small = [](const BigInt& n) { return n.fits_slong_p() && n < BigInt(1L << 31); };
        switch (r.kind()) {
            case RingKind::integers:
                return f;
            case RingKind::prime_field:
                if (!small(r.int_modulus())) return std::nullopt;
                f.n_ = r.int_modulus().get_si();
                return f;
            case RingKind::quotient: {
                const Ring& b = r.base();
                if (b.kind() == RingKind::integers) {
                    if (!small(r.int_modulus())) return std::nullopt;
                    f.n_ = r.int_modulus().get_si();
                    return f;
                }
                if (b.kind() != RingKind::polynomial || b.nvars() != 1) return std::nullopt;
                auto coeff = FastRing::from(b.base());
                if (!coeff || coeff->deg_ != 1) return std::nullopt;
                auto m = coefficients(r.modulus());
                if (m.size() < 2 || m.size() > 5) return std::nullopt;
                f.n_ = coeff->n_;
                f.deg_ = static_cast<int>(m.size()) - 1;
                for (int i = 0; i < f.deg_; ++i) {
                    std::int64_t ci = coeff->scalar(m[i]);
                    f.red_[i] = f.n_ ? f.mod(-ci) : -ci;
                }
                return f;
            }
            default:
                return std::nullopt;
        }
    }

    const Ring& ring() const { return ring_; }
    int deg() const { return deg_; }
    std::int64_t modulus() const { return n_; }

    template <int D>
    Fast<D> zero() const {
        return Fast<D>{this, {}};
    }

    template <int D>
    Fast<D> one() const {
        Fast<D> x{this, {}};
        x.c[0] = n_ == 1 ? 0 : 1;
        return x;
    }

    template <int D>
    Fast<D> to_fast(const Elem& e) const {
        Fast<D> x{this, {}};
        if (ring_.kind() == RingKind::quotient && ring_.base().kind() == RingKind::polynomial) {
            auto cs = coefficients(e.rep());
            for (std::size_t i = 0; i < cs.size(); ++i) x.c[i] = scalar(cs[i]);
            return x;
        }
        x.c[0] = scalar(e);
        return x;
    }

    std::int64_t scalar(const Elem& e) const {
        std::int64_t v = narrow(e.ring().kind() == RingKind::quotient ? e.rep().int_value() : e.int_value());
        return n_ ? mod(v) : v;
    }

    template <int D>
    Elem to_elem(const Fast<D>& x) const {
        if (ring_.kind() == RingKind::quotient && ring_.base().kind() == RingKind::polynomial) {
            const Ring& P = ring_.base();
            std::vector<Elem> cs;
            for (int i = 0; i < D; ++i) cs.push_back(P.base().from_int(x.c[i]));
            return coerce(from_coefficients(P, cs), ring_);
        }
        return ring_.from_int(x.c[0]);
    }

    template <int D, class Gen>
    Fast<D> random(Gen& g, long int_range = 9) const {
        Fast<D> x{this, {}};
        for (auto& v : x.c)
            v = n_ ? std::uniform_int_distribution<std::int64_t>(0, n_ - 1)(g)
                   : std::uniform_int_distribution<std::int64_t>(-int_range, int_range)(g);
        return x;
    }

    std::int64_t mod(std::int64_t v) const {
        v %= n_;
        return v < 0 ? v + n_ : v;
    }

    std::int64_t add(std::int64_t a, std::int64_t b) const {
        if (n_) {
            std::int64_t s = a + b;
            return s >= n_ ? s - n_ : s;
        }
        std::int64_t s;
        if (__builtin_add_overflow(a, b, &s)) throw std::overflow_error("integer overflow in fast scalar");
        return s;
    }

    std::int64_t mul(std::int64_t a, std::int64_t b) const {
        if (n_) return (a * b) % n_;  // operands below 2^31
        std::int64_t p;
        if (__builtin_mul_overflow(a, b, &p)) throw std::overflow_error("integer overflow in fast scalar");
        return p;
    }

    std::int64_t neg(std::int64_t a) const {
        if (n_) return a == 0 ? 0 : n_ - a;
        if (a == INT64_MIN) throw std::overflow_error("integer overflow in fast scalar");
        return -a;
    }

    std::int64_t scale(std::int64_t a, long k) const {
        if (k == 1) return a;
        if (k == -1) return neg(a);
        return mul(a, n_ ? mod(k) : k);
    }

    const std::array<std::int64_t, 4>& reduction() const { return red_; }

private:
    std::int64_t narrow(const BigInt& v) const {
        if (!v.fits_slong_p()) throw std::overflow_error("value does not fit a fast scalar");
        return n_ ? mod(v.get_si()) : v.get_si();
    }

    Ring ring_;
    std::int64_t n_ = 0;
    int deg_ = 1;
    std::array<std::int64_t, 4> red_{};
};

/// Calls f(std::integral_constant<int, D>{}) with D = F.deg().
template <class F>
decltype(auto) with_degree(const FastRing& R, F&& f) {
    switch (R.deg()) {
        case 1:
            return f(std::integral_constant<int, 1>{});
        case 2:
            return f(std::integral_constant<int, 2>{});
        case 3:
            return f(std::integral_constant<int, 3>{});
        default:
            return f(std::integral_constant<int, 4>{});
    }
}

template <int D>
Fast<D> operator+(const Fast<D>& a, const Fast<D>& b) {
    Fast<D> r{a.ctx, {}};
    for (int i = 0; i < D; ++i) r.c[i] = a.ctx->add(a.c[i], b.c[i]);
    return r;
}

template <int D>
Fast<D> operator-(const Fast<D>& a) {
    Fast<D> r{a.ctx, {}};
    for (int i = 0; i < D; ++i) r.c[i] = a.ctx->neg(a.c[i]);
    return r;
}

template <int D>
Fast<D> operator-(const Fast<D>& a, const Fast<D>& b) {
    return a + (-b);
}

template <int D>
Fast<D> operator*(const Fast<D>& a, long k) {
    Fast<D> r{a.ctx, {}};
    for (int i = 0; i < D; ++i) r.c[i] = a.ctx->scale(a.c[i], k);
    return r;
}

template <int D>
Fast<D> operator*(const Fast<D>& a, const Fast<D>& b) {
    const FastRing& R = *a.ctx;
    if constexpr (D == 1) {
        return Fast<D>{a.ctx, {R.mul(a.c[0], b.c[0])}};
    } else {
        std::array<std::int64_t, 2 * D - 1> p{};
        for (int i = 0; i < D; ++i) {
            if (a.c[i] == 0) continue;
            for (int j = 0; j < D; ++j)
                if (b.c[j] != 0) p[i + j] = R.add(p[i + j], R.mul(a.c[i], b.c[j]));
        }
        const auto& red = R.reduction();
        for (int k = 2 * D - 2; k >= D; --k) {
            if (p[k] == 0) continue;
            for (int i = 0; i < D; ++i)
                if (red[i] != 0) p[k - D + i] = R.add(p[k - D + i], R.mul(p[k], red[i]));
        }
        Fast<D> r{a.ctx, {}};
        for (int i = 0; i < D; ++i) r.c[i] = p[i];
        return r;
    }
}

template <int D>
bool operator==(const Fast<D>& a, const Fast<D>& b) {
    return a.c == b.c;
}

template <int D>
bool operator!=(const Fast<D>& a, const Fast<D>& b) {
    return !(a == b);
}

template <int D>
bool is_one(const Fast<D>& a) {
    if (a.c[0] != 1) return false;
    for (int i = 1; i < D; ++i)
        if (a.c[i]) return false;
    return true;
}

template <int D>
bool is_zero(const Fast<D>& a) {
    for (auto v : a.c)
        if (v) return false;
    return true;
}

inline bool is_zero(const Elem& a) { return a.is_zero(); }
inline bool is_one(const Elem& a) { return a.is_one(); }
inline bool is_zero(const BigRat& a) { return sgn(a) == 0; }
inline bool is_one(const BigRat& a) { return a == 1; }

}  // namespace stlab
