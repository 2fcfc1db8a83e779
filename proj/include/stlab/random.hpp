#pragma once

#include <cstdint>
#include <random>

#include "stlab/ring.hpp"

namespace stlab {

using Rng64 = std::mt19937_64;

struct RandomSpec {
    long int_range = 9;       // integers drawn from [-int_range, int_range]
    unsigned max_terms = 3;   // polynomial terms
    unsigned max_degree = 2;  // per-variable degree
    long max_exp = 2;         // localization denominators m^k
};

inline long uniform_long(Rng64& g, long lo, long hi) { return std::uniform_int_distribution<long>(lo, hi)(g); }

inline BigInt uniform_below(Rng64& g, const BigInt& n) {
    if (n.fits_slong_p()) return BigInt(uniform_long(g, 0, n.get_si() - 1));
    BigInt x = 0;
    const std::size_t words = mpz_sizeinbase(n.get_mpz_t(), 2) / 64 + 2;
    for (std::size_t i = 0; i < words; ++i) x = (x << 64) + BigInt(std::to_string(g()));
    return mod_floor(x, n);
}

inline Elem random_element(const Ring& r, Rng64& g, const RandomSpec& spec = {}) {
    switch (r.kind()) {
        case RingKind::integers:
            return r.from_int(uniform_long(g, -spec.int_range, spec.int_range));
        case RingKind::prime_field:
            return r.from_int(uniform_below(g, r.int_modulus()));
        case RingKind::rationals: {
            long den = uniform_long(g, 1, spec.int_range);
            return r.from_rat(BigRat(uniform_long(g, -spec.int_range, spec.int_range), den));
        }
        case RingKind::polynomial: {
            Elem acc = r.zero();
            unsigned n = static_cast<unsigned>(uniform_long(g, 0, spec.max_terms));
            for (unsigned i = 0; i < n; ++i) {
                Elem t = coerce(random_element(r.base(), g, spec), r);
                for (std::size_t v = 0; v < r.nvars(); ++v) {
                    unsigned e = static_cast<unsigned>(uniform_long(g, 0, spec.max_degree));
                    if (e) t = t * r.gen(v).pow(e);
                }
                acc = acc + t;
            }
            return acc;
        }
        case RingKind::localization: {
            Elem num = coerce(random_element(r.base(), g, spec), r);
            long k = uniform_long(g, 0, spec.max_exp);
            return divide(num, coerce(r.multiplier(), r).pow(static_cast<unsigned long>(k)));
        }
        case RingKind::quotient:
            if (r.base().kind() == RingKind::integers && r.int_modulus() != 0)
                return r.from_int(uniform_below(g, r.int_modulus()));
            return coerce(random_element(r.base(), g, spec), r);
        case RingKind::product:
            return pair_elem(r, random_element(r.left(), g, spec), random_element(r.right(), g, spec));
        case RingKind::milnor: {
            Elem x = random_element(r.base(), g, spec);
            Elem f = random_element(r.series(), g, spec);
            auto c = coefficients(f);
            if (!c.empty()) f = f - coerce(c[0], r.series());
            return pair_elem(r, x, f);
        }
    }
    throw Error("unreachable");
}

inline Elem random_nonzero(const Ring& r, Rng64& g, const RandomSpec& spec = {}) {
    for (int i = 0; i < 1000; ++i) {
        Elem x = random_element(r, g, spec);
        if (!x.is_zero()) return x;
    }
    return r.one();
}

/// A random unit; falls back to +-1 when units are hard to find.
inline Elem random_unit(const Ring& r, Rng64& g, const RandomSpec& spec = {}) {
    if (r.kind() == RingKind::integers) return r.from_int(uniform_long(g, 0, 1) ? 1 : -1);
    if (r.kind() == RingKind::localization && r.base().kind() == RingKind::integers) {
        Elem m = coerce(r.multiplier(), r);
        Elem u = m.pow(static_cast<unsigned long>(uniform_long(g, 0, spec.max_exp)));
        if (uniform_long(g, 0, 1)) u = inverse(u);
        return uniform_long(g, 0, 1) ? u : -u;
    }
    for (int i = 0; i < 200; ++i) {
        Elem x = random_element(r, g, spec);
        if (!x.is_zero() && is_unit(x)) return x;
    }
    return uniform_long(g, 0, 1) ? r.one() : -r.one();
}

}  // namespace stlab
