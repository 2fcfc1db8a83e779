#pragma once

/** @file
 * Formal sums of Milnor symbols {a, b} over a field, a sound simplifier for Q, and
 * tame symbols at odd primes as the equality oracle.
 */

#include <algorithm>
#include <map>
#include <string>
#include <utility>
#include <vector>

#include "stlab/bigint.hpp"
#include "stlab/ring.hpp"
#include "stlab/word.hpp"

namespace stlab {

struct MilnorTerm {
    Elem a, b;
    long mult = 1;
};

class MilnorSymbolSum {
public:
    MilnorSymbolSum() = default;
    explicit MilnorSymbolSum(Ring field) : field_(std::move(field)) {}

    static MilnorSymbolSum symbol(const Elem& a, const Elem& b, long mult = 1) {
        MilnorSymbolSum s(a.ring());
        s.add(a, b, mult);
        return s;
    }

    const Ring& field() const { return field_; }
    const std::vector<MilnorTerm>& terms() const { return terms_; }
    bool empty() const { return terms_.empty(); }

    void add(const Elem& a, const Elem& b, long mult = 1) {
        if (a.ring() != field_ || b.ring() != field_) throw RingMismatch("symbol entries must lie in " + field_.str());
        if (a.is_zero() || b.is_zero()) throw PreconditionFailed("symbol entries must be nonzero");
        if (mult) terms_.push_back({a, b, mult});
    }

    MilnorSymbolSum operator+(const MilnorSymbolSum& o) const {
        if (o.field_ != field_) throw RingMismatch("symbol sums over different fields");
        MilnorSymbolSum s = *this;
        s.terms_.insert(s.terms_.end(), o.terms_.begin(), o.terms_.end());
        return s;
    }

    MilnorSymbolSum operator-() const {
        MilnorSymbolSum s = *this;
        for (auto& t : s.terms_) t.mult = -t.mult;
        return s;
    }

    MilnorSymbolSum operator-(const MilnorSymbolSum& o) const { return *this + (-o); }

    std::string str() const {
        if (terms_.empty()) return "0";
        std::string out;
        for (std::size_t i = 0; i < terms_.size(); ++i) {
            long m = terms_[i].mult;
            if (i) out += m < 0 ? " - " : " + ";
            else if (m < 0) out += "-";
            if (std::abs(m) != 1) out += std::to_string(std::abs(m)) + "*";
            out += "{" + terms_[i].a.str() + ", " + terms_[i].b.str() + "}";
        }
        return out;
    }

private:
    Ring field_;
    std::vector<MilnorTerm> terms_;
};

namespace detail {

/// x = sign * prod atoms^e, atoms positive integers (primes below the trial bound).
inline std::vector<std::pair<BigInt, long>> rational_atoms(const BigRat& x) {
    std::vector<std::pair<BigInt, long>> out;
    if (sgn(x) < 0) out.emplace_back(BigInt(-1), 1);
    for (auto& [p, e] : trial_factor(x.get_num())) out.emplace_back(p, e);
    for (auto& [p, e] : trial_factor(x.get_den())) out.emplace_back(p, -e);
    return out;
}

inline bool trivial_symbol(const Elem& a, const Elem& b) {
    return a.is_one() || b.is_one() || (a + b).is_one() || (a + b).is_zero();
}

}  // namespace detail

/**
 * Sound simplification.  Every field: drop {1, x}, {x, 1}, {u, 1-u}, {u, -u} and
 * merge equal terms.  Over Q additionally: expand bilinearly into -1 and prime
 * atoms, order atoms using {x, y} = -{y, x}, rewrite {p, p} = {p, -1} and reduce
 * terms involving -1 modulo 2.
 */
inline MilnorSymbolSum symbol_normalize(const MilnorSymbolSum& s) {
    const Ring& F = s.field();
    std::map<std::pair<std::string, std::string>, std::pair<MilnorTerm, long>> merged;
    std::vector<std::pair<std::string, std::string>> order;
    auto put = [&](const Elem& a, const Elem& b, long m) {
        auto key = std::make_pair(a.str(), b.str());
        auto it = merged.find(key);
        if (it == merged.end()) {
            merged.emplace(key, std::make_pair(MilnorTerm{a, b, 0}, m));
            order.push_back(key);
        } else {
            it->second.second += m;
        }
    };
    if (F.kind() != RingKind::rationals) {
        for (const auto& t : s.terms())
            if (!detail::trivial_symbol(t.a, t.b)) put(t.a, t.b, t.mult);
    } else {
        std::map<std::pair<BigInt, BigInt>, long> acc;
        for (const auto& t : s.terms()) {
            if (detail::trivial_symbol(t.a, t.b)) continue;
            for (const auto& [x, ex] : detail::rational_atoms(t.a.rat_value()))
                for (const auto& [y, ey] : detail::rational_atoms(t.b.rat_value())) {
                    long m = t.mult * ex * ey;
                    BigInt p = x, q = y;
                    if (p > q) {
                        std::swap(p, q);
                        m = -m;
                    }
                    if (p == q && p != -1) p = -1;
                    acc[{p, q}] += m;
                }
        }
        for (auto& [k, m] : acc) {
            long mm = k.first == -1 ? ((m % 2) + 2) % 2 : m;
            if (mm) put(F.from_int(k.first), F.from_int(k.second), mm);
        }
    }
    MilnorSymbolSum out(F);
    for (const auto& key : order) {
        const auto& [t, m] = merged.at(key);
        if (m) out.add(t.a, t.b, m);
    }
    return out;
}

/// The tame symbol at an odd prime p as a residue in [1, p-1].
inline BigInt tame_symbol(const MilnorSymbolSum& s, const BigInt& p) {
    if (s.field().kind() != RingKind::rationals) throw PreconditionFailed("tame symbols are computed over Q only");
    if (p < 3 || !is_probable_prime(p)) throw PreconditionFailed("tame symbol needs an odd prime, got " + p.get_str());
    BigInt acc = 1;
    auto split = [&](const BigRat& x, long& v) {
        BigInt num = x.get_num(), den = x.get_den();
        long vn = int_valuation(num, p), vd = int_valuation(den, p);
        v = vn - vd;
        BigInt pn = ipow(p, static_cast<unsigned long>(vn)), pd = ipow(p, static_cast<unsigned long>(vd));
        num /= pn;
        den /= pd;
        BigInt inv;
        mpz_invert(inv.get_mpz_t(), den.get_mpz_t(), p.get_mpz_t());
        return mod_floor(num * inv, p);
    };
    auto power = [&](BigInt base, long e) {
        if (e < 0) {
            mpz_invert(base.get_mpz_t(), base.get_mpz_t(), p.get_mpz_t());
            e = -e;
        }
        BigInt r;
        mpz_powm_ui(r.get_mpz_t(), base.get_mpz_t(), static_cast<unsigned long>(e), p.get_mpz_t());
        return r;
    };
    for (const auto& t : s.terms()) {
        long va = 0, vb = 0;
        BigInt a0 = split(t.a.rat_value(), va), b0 = split(t.b.rat_value(), vb);
        BigInt v = mod_floor(power(a0, vb) * power(b0, -va), p);
        if ((va * vb) % 2 != 0) v = mod_floor(-v, p);
        acc = mod_floor(acc * power(v, t.mult), p);
    }
    return acc;
}

inline BigInt tame_symbol(const MilnorSymbolSum& s, long p) { return tame_symbol(s, BigInt(p)); }

/// Odd primes at which some entry of s has nonzero valuation.
inline std::vector<BigInt> relevant_primes(const MilnorSymbolSum& s) {
    std::vector<BigInt> out;
    for (const auto& t : s.terms())
        for (const Elem* e : {&t.a, &t.b})
            for (const auto& [q, ex] : detail::rational_atoms(e->rat_value()))
                if (q > 2 && std::find(out.begin(), out.end(), q) == out.end()) out.push_back(q);
    std::sort(out.begin(), out.end());
    return out;
}

/// The symbol sum recorded on a product of symbol words {u, v}_root over a field.
inline MilnorSymbolSum steinberg_to_milnor(const SteinbergWord& w, RootIndex root) {
    if (!w.ring().is_field()) throw PreconditionFailed(w.ring().str() + " is not a field");
    const auto& h = w.symbol_history();
    if (!h) throw NotSymbolProduct("word was not built from symbol words");
    MilnorSymbolSum s(w.ring());
    for (const auto& t : *h) {
        if (t.root != root)
            throw NotSymbolProduct("symbol on root " + w.system()->root_str(t.root) + ", expected " +
                                   w.system()->root_str(root));
        s.add(t.u, t.v, t.mult);
    }
    return s;
}

}  // namespace stlab
