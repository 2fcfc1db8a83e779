#pragma once

/** @file
 * Words in St(Phi, R).  Letters x_a(t) are kept reduced modulo x_a(s)x_a(t) = x_a(s+t):
 * zero arguments vanish, adjacent letters on one root merge, inverses fold into
 * negated arguments.  Under these rules alone the normal form is unique.
 */

#include <optional>
#include <sstream>
#include <string>
#include <utility>
#include <vector>

#include "stlab/hom.hpp"
#include "stlab/random.hpp"
#include "stlab/ring.hpp"
#include "stlab/root_system.hpp"

namespace stlab {

struct Letter {
    RootIndex root = 0;
    Elem arg;
    int sign = 1;  // -1 marks the formal inverse x_a(t)^-1
};

/// One summand mult * {u, v} recorded by the symbol constructor.
struct SymbolTerm {
    RootIndex root = 0;
    Elem u, v;
    long mult = 1;
};

using SymbolHistory = std::optional<std::vector<SymbolTerm>>;

class SteinbergWord {
public:
    SteinbergWord() = default;
    SteinbergWord(SystemPtr sys, Ring ring) : sys_(std::move(sys)), ring_(std::move(ring)), history_(std::vector<SymbolTerm>{}) {}

    /// Normalizes the given letters; signs are folded into the arguments.
    static SteinbergWord from_letters(SystemPtr sys, Ring ring, const std::vector<Letter>& letters) {
        SteinbergWord w(std::move(sys), std::move(ring));
        for (const auto& l : letters) w.push(l);
        w.history_ = w.letters_.empty() ? SymbolHistory(std::vector<SymbolTerm>{}) : std::nullopt;
        return w;
    }

    const SystemPtr& system() const { return sys_; }
    const Ring& ring() const { return ring_; }
    const std::vector<Letter>& letters() const { return letters_; }
    std::size_t size() const { return letters_.size(); }
    bool empty() const { return letters_.empty(); }
    const SymbolHistory& symbol_history() const { return history_; }
    void set_symbol_history(SymbolHistory h) { history_ = std::move(h); }

    SteinbergWord inverse() const {
        SteinbergWord w(sys_, ring_);
        for (auto it = letters_.rbegin(); it != letters_.rend(); ++it) w.push({it->root, -it->arg, 1});
        if (history_) {
            std::vector<SymbolTerm> h = *history_;
            for (auto& t : h) t.mult = -t.mult;
            w.history_ = std::move(h);
        } else {
            w.history_ = std::nullopt;
        }
        return w;
    }

    SteinbergWord operator*(const SteinbergWord& other) const {
        check_compatible(other);
        SteinbergWord w = *this;
        for (const auto& l : other.letters_) w.push(l);
        if (history_ && other.history_) {
            w.history_->insert(w.history_->end(), other.history_->begin(), other.history_->end());
        } else {
            w.history_ = w.letters_.empty() ? SymbolHistory(std::vector<SymbolTerm>{}) : std::nullopt;
        }
        return w;
    }

    SteinbergWord& operator*=(const SteinbergWord& other) { return *this = *this * other; }

    /// Syntactic equality of normal forms.
    bool operator==(const SteinbergWord& o) const {
        if (!same_system(*sys_, *o.sys_) || ring_ != o.ring_ || letters_.size() != o.letters_.size()) return false;
        for (std::size_t i = 0; i < letters_.size(); ++i)
            if (letters_[i].root != o.letters_[i].root || letters_[i].arg != o.letters_[i].arg) return false;
        return true;
    }
    bool operator!=(const SteinbergWord& o) const { return !(*this == o); }

    std::string str() const {
        if (letters_.empty()) return "1";
        std::string out;
        for (std::size_t i = 0; i < letters_.size(); ++i) {
            if (i) out += " ";
            out += "x[" + sys_->root_str(letters_[i].root) + "](" + letters_[i].arg.str() + ")";
        }
        return out;
    }

    void check_compatible(const SteinbergWord& o) const {
        if (!same_system(*sys_, *o.sys_)) throw PreconditionFailed("words over different root systems");
        if (ring_ != o.ring_) throw RingMismatch("words over " + ring_.str() + " and " + o.ring_.str());
    }

private:
    void push(const Letter& l) {
        if (l.arg.ring() != ring_)
            throw RingMismatch("argument " + l.arg.str() + " lies in " + l.arg.ring().str() + ", not " + ring_.str());
        Elem a = l.sign < 0 ? -l.arg : l.arg;
        if (a.is_zero()) return;
        if (!letters_.empty() && letters_.back().root == l.root) {
            Elem s = letters_.back().arg + a;
            if (s.is_zero())
                letters_.pop_back();
            else
                letters_.back().arg = s;
            return;
        }
        letters_.push_back({l.root, a, 1});
    }

    SystemPtr sys_;
    Ring ring_;
    std::vector<Letter> letters_;
    SymbolHistory history_;
};

inline SteinbergWord gen(const SystemPtr& sys, RootIndex root, const Elem& xi) {
    sys->coords(root);
    return SteinbergWord::from_letters(sys, xi.ring(), {{root, xi, 1}});
}

inline SteinbergWord empty_word(const SystemPtr& sys, const Ring& ring) { return SteinbergWord(sys, ring); }

/// [x, y] = x y x^-1 y^-1.
inline SteinbergWord commutator(const SteinbergWord& x, const SteinbergWord& y) {
    return x * y * x.inverse() * y.inverse();
}

/// g x g^-1.
inline SteinbergWord conjugate(const SteinbergWord& g, const SteinbergWord& x) { return g * x * g.inverse(); }

/**
 * Moves letters towards enumeration order using
 *   x_b(s) x_a(t) = x_a(t) x_b(s)                       (a + b not a root, b != -a)
 *   x_b(s) x_a(t) = x_a(t) x_b(s) x_{a+b}(-N_ab t s)     (a + b a root)
 * Opposite roots never pass each other.  Stops after max_steps rewrites; the
 * result equals the input in St(Phi, R) in every case.
 */
inline SteinbergWord commutator_reduce(const SteinbergWord& w, std::size_t max_steps = 20000) {
    const RootSystem& sys = *w.system();
    std::vector<Letter> cur = w.letters();
    std::size_t steps = 0;
    for (;;) {
        bool changed = false;
        for (std::size_t i = 0; i + 1 < cur.size() && steps < max_steps; ++i) {
            RootIndex b = cur[i].root, a = cur[i + 1].root;
            if (a >= b) continue;
            RootSum s = sys.sum(a, b);
            if (s.kind == RootSum::Kind::opposite) continue;
            Letter lb = cur[i], la = cur[i + 1];
            std::vector<Letter> repl{la, lb};
            if (s.kind == RootSum::Kind::root)
                repl.push_back({s.index, la.arg * lb.arg * static_cast<long>(-sys.N(a, b)), 1});
            std::vector<Letter> next(cur.begin(), cur.begin() + static_cast<long>(i));
            next.insert(next.end(), repl.begin(), repl.end());
            next.insert(next.end(), cur.begin() + static_cast<long>(i) + 2, cur.end());
            cur = SteinbergWord::from_letters(w.system(), w.ring(), next).letters();
            ++steps;
            changed = true;
            break;
        }
        if (!changed || steps >= max_steps) break;
    }
    return SteinbergWord::from_letters(w.system(), w.ring(), cur);
}

inline Elem require_unit(const Elem& u) {
    auto inv = try_divide(u.ring().one(), u);
    if (!inv) throw NonUnit(u.str() + " is not a unit of " + u.ring().str());
    return *inv;
}

/// w_a(u) = x_a(u) x_{-a}(-u^-1) x_a(u).
inline SteinbergWord weyl(const SystemPtr& sys, RootIndex root, const Elem& u) {
    Elem ui = require_unit(u);
    return SteinbergWord::from_letters(sys, u.ring(), {{root, u, 1}, {sys->negative(root), -ui, 1}, {root, u, 1}});
}

/// h_a(u) = w_a(u) w_a(-1).
inline SteinbergWord torus(const SystemPtr& sys, RootIndex root, const Elem& u) {
    return weyl(sys, root, u) * weyl(sys, root, -u.ring().one());
}

/// {u, v}_a = h_a(uv) h_a(u)^-1 h_a(v)^-1.
inline SteinbergWord symbol(const SystemPtr& sys, RootIndex root, const Elem& u, const Elem& v) {
    if (u.ring() != v.ring()) throw RingMismatch("symbol entries lie in different rings");
    require_unit(u);
    require_unit(v);
    SteinbergWord w = torus(sys, root, u * v) * torus(sys, root, u).inverse() * torus(sys, root, v).inverse();
    w.set_symbol_history(std::vector<SymbolTerm>{{root, u, v, 1}});
    return w;
}

/// y_a(s, t) = [x_a(s), x_{-a}(t)].
inline SteinbergWord y_element(const SystemPtr& sys, RootIndex root, const Elem& s, const Elem& t) {
    return commutator(gen(sys, root, s), gen(sys, sys->negative(root), t));
}

/// Letterwise image under a ring homomorphism.
inline SteinbergWord substitute(const SteinbergWord& w, const RingHom& phi) {
    if (phi.source() != w.ring())
        throw RingMismatch("homomorphism " + phi.name() + " does not start at " + w.ring().str());
    std::vector<Letter> out;
    out.reserve(w.size());
    for (const auto& l : w.letters()) out.push_back({l.root, phi(l.arg), 1});
    SteinbergWord r = SteinbergWord::from_letters(w.system(), phi.target(), out);
    if (w.symbol_history()) {
        std::vector<SymbolTerm> h;
        for (const auto& t : *w.symbol_history()) h.push_back({t.root, phi(t.u), phi(t.v), t.mult});
        r.set_symbol_history(std::move(h));
    }
    return r;
}

/// Image under the canonical map to target.
inline SteinbergWord change_ring(const SteinbergWord& w, const Ring& target) {
    return substitute(w, RingHom::canonical(w.ring(), target));
}

/// A word with up to max_len letters on uniformly chosen roots.
inline SteinbergWord random_word(const SystemPtr& sys, const Ring& R, std::size_t max_len, Rng64& g,
                                 const RandomSpec& spec = {}) {
    std::vector<Letter> ls;
    const long len = uniform_long(g, 0, static_cast<long>(max_len));
    for (long i = 0; i < len; ++i)
        ls.push_back({static_cast<RootIndex>(uniform_long(g, 0, static_cast<long>(sys->size()) - 1)),
                      random_element(R, g, spec), 1});
    return SteinbergWord::from_letters(sys, R, ls);
}

/// The principal ideal fR of a ring whose quotient R/fR is effective.
struct Ideal {
    Elem generator;
    const Ring& ring() const { return generator.ring(); }
    Ring quotient_ring() const { return quotient(generator.ring(), generator); }
    bool contains(const Elem& x) const { return try_divide(x, generator).has_value(); }
};

/// A word whose image in St(Phi, R/I) is meant to be trivial.
struct RelativeWord {
    SteinbergWord word;
    Ideal ideal;
};

inline std::ostream& operator<<(std::ostream& os, const SteinbergWord& w) { return os << w.str(); }

}  // namespace stlab
