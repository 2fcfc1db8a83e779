#pragma once

#include <gmpxx.h>

#include <string>
#include <utility>
#include <vector>

namespace stlab {

using BigInt = mpz_class;
using BigRat = mpq_class;

inline bool is_probable_prime(const BigInt& n) {
    return n > 1 && mpz_probab_prime_p(n.get_mpz_t(), 30) > 0;
}

/// Representative of a mod n in [0, |n|).
inline BigInt mod_floor(const BigInt& a, const BigInt& n) {
    BigInt r;
    mpz_mod(r.get_mpz_t(), a.get_mpz_t(), n.get_mpz_t());
    return r;
}

struct IntBezout {
    BigInt g, x, y;
};

/// g = a*x + b*y with g = gcd(a, b) >= 0.
inline IntBezout int_bezout(const BigInt& a, const BigInt& b) {
    IntBezout r;
    mpz_gcdext(r.g.get_mpz_t(), r.x.get_mpz_t(), r.y.get_mpz_t(), a.get_mpz_t(), b.get_mpz_t());
    return r;
}

inline BigInt int_gcd(const BigInt& a, const BigInt& b) {
    BigInt g;
    mpz_gcd(g.get_mpz_t(), a.get_mpz_t(), b.get_mpz_t());
    return g;
}

inline BigInt ipow(const BigInt& base, unsigned long e) {
    BigInt r;
    mpz_pow_ui(r.get_mpz_t(), base.get_mpz_t(), e);
    return r;
}

inline bool int_divides(const BigInt& d, const BigInt& n) {
    if (d == 0) return n == 0;
    return mpz_divisible_p(n.get_mpz_t(), d.get_mpz_t()) != 0;
}

/// Exponent of p in n (n != 0, p > 1).
inline long int_valuation(BigInt n, const BigInt& p) {
    long v = 0;
    if (n == 0) return 0;
    while (mpz_divisible_p(n.get_mpz_t(), p.get_mpz_t())) {
        mpz_divexact(n.get_mpz_t(), n.get_mpz_t(), p.get_mpz_t());
        ++v;
    }
    return v;
}

/// Trial division of |n| up to `limit`; an unfactored cofactor > 1 is reported last with exponent 1.
inline std::vector<std::pair<BigInt, long>> trial_factor(BigInt n, unsigned long limit = 100000) {
    std::vector<std::pair<BigInt, long>> out;
    if (n < 0) n = -n;
    for (unsigned long p = 2; p <= limit && n > 1; p = (p == 2 ? 3 : p + 2)) {
        if (BigInt(p) * p > n) break;
        long e = 0;
        while (mpz_divisible_ui_p(n.get_mpz_t(), p)) {
            mpz_divexact_ui(n.get_mpz_t(), n.get_mpz_t(), p);
            ++e;
        }
        if (e) out.emplace_back(BigInt(p), e);
    }
    if (n > 1) out.emplace_back(n, 1);
    return out;
}

inline std::string to_string(const BigInt& n) { return n.get_str(); }

inline std::string to_string(const BigRat& q) { return q.get_str(); }

}  // namespace stlab
