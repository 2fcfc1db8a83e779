#pragma once

/** @file
 * Exact commutative rings as a closed tagged union, with immutable elements.
 *
 * Supported constructions: integers, prime fields, rationals, polynomial rings,
 * localizations R[1/m], quotients (of Z, or of a univariate polynomial ring by a
 * polynomial with unit leading coefficient), products and the Milnor ring
 * R x tR_a[t].  Rings are interned, so equal rings usually share a node.
 */

#include <algorithm>
#include <cctype>
#include <cstddef>
#include <map>
#include <memory>
#include <mutex>
#include <optional>
#include <ostream>
#include <string>
#include <string_view>
#include <utility>
#include <variant>
#include <vector>

#include "stlab/bigint.hpp"
#include "stlab/error.hpp"

namespace stlab {

enum class RingKind { integers, prime_field, rationals, polynomial, localization, quotient, product, milnor };

class Ring;
class Elem;
struct Term;
using Monomial = std::vector<unsigned>;

namespace detail {
struct RingNode;
struct Value;
struct Access;
}  // namespace detail

class Ring {
public:
    Ring() = default;

    bool valid() const noexcept { return node_ != nullptr; }
    RingKind kind() const;

    /// p for a prime field, n for a quotient of Z; zero otherwise.
    const BigInt& int_modulus() const;
    const Ring& base() const;
    const Ring& left() const;
    const Ring& right() const;
    const std::vector<std::string>& vars() const;
    std::size_t nvars() const { return vars().size(); }
    const Elem& multiplier() const;
    const Elem& modulus() const;
    /// Milnor ring R x tR_a[t]: the rings R_a and R_a[t].
    const Ring& localized() const;
    const Ring& series() const;

    Elem zero() const;
    Elem one() const;
    Elem from_int(const BigInt& n) const;
    Elem from_int(long n) const;
    Elem from_rat(const BigRat& q) const;
    Elem gen(std::size_t i) const;
    /// Polynomial variable `name` anywhere in the tower, mapped into this ring.
    std::optional<Elem> variable(std::string_view name) const;

    bool is_field() const;
    bool is_domain() const;
    const std::string& str() const;

    friend bool operator==(const Ring& a, const Ring& b);
    friend bool operator!=(const Ring& a, const Ring& b) { return !(a == b); }

private:
    friend struct detail::Access;
    explicit Ring(std::shared_ptr<const detail::RingNode> n) : node_(std::move(n)) {}
    const detail::RingNode& node() const;
    std::shared_ptr<const detail::RingNode> node_;
};

class Elem {
public:
    Elem() = default;

    bool valid() const noexcept { return value_ != nullptr; }
    const Ring& ring() const noexcept { return ring_; }
    bool is_zero() const;
    bool is_one() const;

    const BigInt& int_value() const;
    const BigRat& rat_value() const;
    const std::vector<Term>& terms() const;
    const Elem& numerator() const;
    long exponent() const;
    const Elem& rep() const;
    const Elem& first() const;
    const Elem& second() const;

    std::string str() const;

    Elem operator-() const;
    Elem pow(unsigned long e) const;
    Elem& operator+=(const Elem& o);
    Elem& operator-=(const Elem& o);
    Elem& operator*=(const Elem& o);

    friend Elem operator+(const Elem& a, const Elem& b);
    friend Elem operator-(const Elem& a, const Elem& b);
    friend Elem operator*(const Elem& a, const Elem& b);
    friend bool operator==(const Elem& a, const Elem& b);
    friend bool operator!=(const Elem& a, const Elem& b) { return !(a == b); }

private:
    friend struct detail::Access;
    Elem(Ring r, std::shared_ptr<const detail::Value> v) : ring_(std::move(r)), value_(std::move(v)) {}
    Ring ring_;
    std::shared_ptr<const detail::Value> value_;
};

struct Term {
    Monomial mono;
    Elem coeff;
};

inline Elem operator+(const Elem& a, long b) { return a + a.ring().from_int(b); }
inline Elem operator-(const Elem& a, long b) { return a - a.ring().from_int(b); }
inline Elem operator*(long a, const Elem& b) { return b.ring().from_int(a) * b; }
inline Elem operator*(const Elem& a, long b) { return a * a.ring().from_int(b); }

namespace detail {

struct PolyValue {
    std::vector<Term> terms;  // nonzero coefficients, strictly decreasing monomials
};

struct WrapValue {
    Elem inner;
    long exp = 0;
};

struct PairValue {
    Elem first;
    Elem second;
};

struct Value {
    std::variant<BigInt, BigRat, PolyValue, WrapValue, PairValue> data;
};

struct RingNode {
    RingKind kind = RingKind::integers;
    BigInt n;
    Ring base, left, right;
    std::vector<std::string> vars;
    Elem aux;
    std::vector<Elem> monic;
    Ring loc, series;
    std::string name;
    bool field = false;
    bool domain = false;
};

struct Access {
    static Elem make(const Ring& r, Value v) { return Elem(r, std::make_shared<const Value>(std::move(v))); }
    static const Value& value(const Elem& e) {
        if (!e.value_) throw Error("use of an uninitialized ring element");
        return *e.value_;
    }
    static const Value* value_ptr(const Elem& e) { return e.value_.get(); }
    static const RingNode& node(const Ring& r) {
        if (!r.node_) throw Error("use of an uninitialized ring");
        return *r.node_;
    }
    static const RingNode* node_ptr(const Ring& r) { return r.node_.get(); }
    static Ring wrap(std::shared_ptr<const RingNode> n) { return Ring(std::move(n)); }
};

inline const BigInt& as_int(const Elem& e) { return std::get<BigInt>(Access::value(e).data); }
inline const BigRat& as_rat(const Elem& e) { return std::get<BigRat>(Access::value(e).data); }
inline const PolyValue& as_poly(const Elem& e) { return std::get<PolyValue>(Access::value(e).data); }
inline const WrapValue& as_wrap(const Elem& e) { return std::get<WrapValue>(Access::value(e).data); }
inline const PairValue& as_pair(const Elem& e) { return std::get<PairValue>(Access::value(e).data); }

inline unsigned mono_degree(const Monomial& m) {
    unsigned d = 0;
    for (unsigned x : m) d += x;
    return d;
}

/// Total degree first, then lexicographic with the first variable largest.
inline bool mono_greater(const Monomial& a, const Monomial& b) {
    unsigned da = mono_degree(a), db = mono_degree(b);
    if (da != db) return da > db;
    return a > b;
}

struct MonoGreater {
    bool operator()(const Monomial& a, const Monomial& b) const { return mono_greater(a, b); }
};

inline Elem make_int(const Ring& r, BigInt v);
inline Elem make_poly(const Ring& r, std::vector<Term> terms);
inline Elem make_poly_map(const Ring& r, std::map<Monomial, Elem, MonoGreater>& acc);
inline Elem make_loc(const Ring& r, Elem num, long k);
inline Elem make_quot(const Ring& r, Elem inner);
inline Elem make_pair(const Ring& r, Elem a, Elem b);
inline bool value_equal(const Elem& a, const Elem& b);
inline void require_same(const Elem& a, const Elem& b, const char* op);
inline std::vector<Elem> dense_coeffs(const Elem& f);
inline Elem from_dense(const Ring& poly_ring, const std::vector<Elem>& c);

inline std::mutex& registry_mutex() {
    static std::mutex m;
    return m;
}

inline std::map<std::string, std::vector<std::shared_ptr<const RingNode>>>& registry() {
    static std::map<std::string, std::vector<std::shared_ptr<const RingNode>>> r;
    return r;
}

inline bool deep_equal(const RingNode& x, const RingNode& y);

inline Ring intern(RingNode node) {
    std::lock_guard<std::mutex> lock(registry_mutex());
    auto& bucket = registry()[node.name];
    for (const auto& cand : bucket)
        if (deep_equal(*cand, node)) return Access::wrap(cand);
    auto p = std::make_shared<const RingNode>(std::move(node));
    bucket.push_back(p);
    return Access::wrap(p);
}

}  // namespace detail

// ---------------------------------------------------------------------------
// Ring factories

inline Ring integers() {
    static const Ring z = [] {
        detail::RingNode n;
        n.kind = RingKind::integers;
        n.name = "Z";
        n.domain = true;
        return detail::intern(std::move(n));
    }();
    return z;
}

inline Ring rationals() {
    static const Ring q = [] {
        detail::RingNode n;
        n.kind = RingKind::rationals;
        n.name = "Q";
        n.domain = n.field = true;
        return detail::intern(std::move(n));
    }();
    return q;
}

inline Ring prime_field(const BigInt& p) {
    if (!is_probable_prime(p)) throw PreconditionFailed("prime field modulus " + p.get_str() + " is not prime");
    detail::RingNode n;
    n.kind = RingKind::prime_field;
    n.n = p;
    n.name = "Fp:" + p.get_str();
    n.domain = n.field = true;
    return detail::intern(std::move(n));
}

inline Ring polynomial_ring(const Ring& base, std::vector<std::string> vars) {
    if (vars.empty()) throw PreconditionFailed("polynomial ring needs at least one variable");
    for (std::size_t i = 0; i < vars.size(); ++i) {
        if (vars[i].empty()) throw PreconditionFailed("empty variable name");
        for (std::size_t j = 0; j < i; ++j)
            if (vars[i] == vars[j]) throw PreconditionFailed("repeated variable " + vars[i]);
        if (base.variable(vars[i])) throw PreconditionFailed("variable " + vars[i] + " already used in the base ring");
    }
    detail::RingNode n;
    n.kind = RingKind::polynomial;
    n.base = base;
    n.name = base.str() + "[";
    for (std::size_t i = 0; i < vars.size(); ++i) n.name += (i ? "," : "") + vars[i];
    n.name += "]";
    n.vars = std::move(vars);
    n.domain = base.is_domain();
    return detail::intern(std::move(n));
}

inline Ring localization(const Ring& base, const Elem& multiplier);
inline Ring quotient(const Ring& base, const Elem& modulus);
inline Ring product(const Ring& left, const Ring& right);
inline Ring milnor_ring(const Ring& base, const Elem& a);

// ---------------------------------------------------------------------------
// Free functions on elements

inline std::optional<Elem> try_divide(const Elem& a, const Elem& b);
inline Elem divide(const Elem& a, const Elem& b);
inline Elem inverse(const Elem& a);
inline bool is_unit(const Elem& a);
inline Elem coerce(const Elem& x, const Ring& target);
/// Element (a, b) of a product or Milnor ring.
inline Elem pair_elem(const Ring& r, const Elem& a, const Elem& b);
inline bool has_coercion(const Ring& source, const Ring& target);

// ---------------------------------------------------------------------------
// Ring members

inline const detail::RingNode& Ring::node() const { return detail::Access::node(*this); }
inline RingKind Ring::kind() const { return node().kind; }
inline const BigInt& Ring::int_modulus() const { return node().n; }

inline const Ring& Ring::base() const {
    const auto& n = node();
    if (!n.base.valid()) throw Error("ring " + n.name + " has no base ring");
    return n.base;
}

inline const Ring& Ring::left() const {
    if (kind() != RingKind::product) throw Error("not a product ring");
    return node().left;
}

inline const Ring& Ring::right() const {
    if (kind() != RingKind::product) throw Error("not a product ring");
    return node().right;
}

inline const std::vector<std::string>& Ring::vars() const {
    static const std::vector<std::string> none;
    return kind() == RingKind::polynomial ? node().vars : none;
}

inline const Elem& Ring::multiplier() const {
    if (kind() != RingKind::localization && kind() != RingKind::milnor) throw Error("ring has no multiplier");
    return node().aux;
}

inline const Elem& Ring::modulus() const {
    if (kind() != RingKind::quotient) throw Error("ring has no modulus");
    return node().aux;
}

inline const Ring& Ring::localized() const {
    if (kind() != RingKind::milnor) throw Error("not a Milnor ring");
    return node().loc;
}

inline const Ring& Ring::series() const {
    if (kind() != RingKind::milnor) throw Error("not a Milnor ring");
    return node().series;
}

inline bool Ring::is_field() const { return node().field; }
inline bool Ring::is_domain() const { return node().domain; }
inline const std::string& Ring::str() const { return node().name; }

inline bool operator==(const Ring& a, const Ring& b) {
    if (a.node_ == b.node_) return true;
    if (!a.node_ || !b.node_) return false;
    return detail::deep_equal(*a.node_, *b.node_);
}

inline Elem Ring::zero() const { return from_int(0L); }
inline Elem Ring::one() const { return from_int(1L); }
inline Elem Ring::from_int(long n) const { return from_int(BigInt(n)); }

inline Elem Ring::from_int(const BigInt& v) const {
    using detail::Access;
    switch (kind()) {
        case RingKind::integers:
        case RingKind::prime_field:
            return detail::make_int(*this, v);
        case RingKind::rationals:
            return Access::make(*this, detail::Value{BigRat(v)});
        case RingKind::polynomial: {
            Elem c = base().from_int(v);
            if (c.is_zero()) return detail::make_poly(*this, {});
            return detail::make_poly(*this, {Term{Monomial(nvars(), 0), c}});
        }
        case RingKind::localization:
            return detail::make_loc(*this, base().from_int(v), 0);
        case RingKind::quotient:
            return detail::make_quot(*this, base().from_int(v));
        case RingKind::product:
            return detail::make_pair(*this, left().from_int(v), right().from_int(v));
        case RingKind::milnor:
            return detail::make_pair(*this, base().from_int(v), series().zero());
    }
    throw Error("unreachable");
}

inline Elem Ring::from_rat(const BigRat& q_in) const {
    BigRat q = q_in;
    q.canonicalize();
    if (kind() == RingKind::rationals) return detail::Access::make(*this, detail::Value{q});
    Elem num = from_int(q.get_num());
    if (q.get_den() == 1) return num;
    return divide(num, from_int(q.get_den()));
}

inline Elem Ring::gen(std::size_t i) const {
    if (kind() != RingKind::polynomial || i >= nvars()) throw Error("no generator " + std::to_string(i) + " in " + str());
    Monomial m(nvars(), 0);
    m[i] = 1;
    return detail::make_poly(*this, {Term{m, base().one()}});
}

inline std::optional<Elem> Ring::variable(std::string_view name) const {
    switch (kind()) {
        case RingKind::polynomial: {
            for (std::size_t i = 0; i < nvars(); ++i)
                if (vars()[i] == name) return gen(i);
            auto v = base().variable(name);
            if (v) return detail::make_poly(*this, {Term{Monomial(nvars(), 0), *v}});
            return std::nullopt;
        }
        case RingKind::localization:
        case RingKind::quotient: {
            auto v = base().variable(name);
            if (v) return coerce(*v, *this);
            return std::nullopt;
        }
        case RingKind::milnor: {
            if (auto v = base().variable(name)) return coerce(*v, *this);
            if (auto f = series().variable(name)) {
                auto c = detail::dense_coeffs(*f);
                if (!c.empty() && !c[0].is_zero()) return std::nullopt;
                return detail::make_pair(*this, base().zero(), *f);
            }
            return std::nullopt;
        }
        default:
            return std::nullopt;
    }
}

// ---------------------------------------------------------------------------
// Elem members

inline bool Elem::is_zero() const {
    const auto& v = detail::Access::value(*this);
    switch (ring_.kind()) {
        case RingKind::integers:
        case RingKind::prime_field:
            return std::get<BigInt>(v.data) == 0;
        case RingKind::rationals:
            return std::get<BigRat>(v.data) == 0;
        case RingKind::polynomial:
            return std::get<detail::PolyValue>(v.data).terms.empty();
        case RingKind::localization:
        case RingKind::quotient:
            return std::get<detail::WrapValue>(v.data).inner.is_zero();
        case RingKind::product:
        case RingKind::milnor: {
            const auto& p = std::get<detail::PairValue>(v.data);
            return p.first.is_zero() && p.second.is_zero();
        }
    }
    return false;
}

inline bool Elem::is_one() const { return *this == ring_.one(); }

inline const BigInt& Elem::int_value() const {
    if (ring_.kind() != RingKind::integers && ring_.kind() != RingKind::prime_field)
        throw Error("int_value on element of " + ring_.str());
    return detail::as_int(*this);
}

inline const BigRat& Elem::rat_value() const {
    if (ring_.kind() != RingKind::rationals) throw Error("rat_value on element of " + ring_.str());
    return detail::as_rat(*this);
}

inline const std::vector<Term>& Elem::terms() const {
    if (ring_.kind() != RingKind::polynomial) throw Error("terms on element of " + ring_.str());
    return detail::as_poly(*this).terms;
}

inline const Elem& Elem::numerator() const {
    if (ring_.kind() != RingKind::localization) throw Error("numerator on element of " + ring_.str());
    return detail::as_wrap(*this).inner;
}

inline long Elem::exponent() const {
    if (ring_.kind() != RingKind::localization) throw Error("exponent on element of " + ring_.str());
    return detail::as_wrap(*this).exp;
}

inline const Elem& Elem::rep() const {
    if (ring_.kind() != RingKind::quotient) throw Error("rep on element of " + ring_.str());
    return detail::as_wrap(*this).inner;
}

inline const Elem& Elem::first() const {
    if (ring_.kind() != RingKind::product && ring_.kind() != RingKind::milnor)
        throw Error("first on element of " + ring_.str());
    return detail::as_pair(*this).first;
}

inline const Elem& Elem::second() const {
    if (ring_.kind() != RingKind::product && ring_.kind() != RingKind::milnor)
        throw Error("second on element of " + ring_.str());
    return detail::as_pair(*this).second;
}

inline Elem& Elem::operator+=(const Elem& o) { return *this = *this + o; }
inline Elem& Elem::operator-=(const Elem& o) { return *this = *this - o; }
inline Elem& Elem::operator*=(const Elem& o) { return *this = *this * o; }

inline Elem Elem::pow(unsigned long e) const {
    Elem result = ring_.one();
    Elem b = *this;
    while (e) {
        if (e & 1) result = result * b;
        e >>= 1;
        if (e) b = b * b;
    }
    return result;
}

namespace detail {

inline void require_same(const Elem& a, const Elem& b, const char* op) {
    if (!a.valid() || !b.valid()) throw Error(std::string("uninitialized operand in ") + op);
    if (a.ring() != b.ring())
        throw RingMismatch(std::string("mismatched rings in ") + op + ": " + a.ring().str() + " vs " + b.ring().str());
}

inline Elem make_int(const Ring& r, BigInt v) {
    if (r.kind() == RingKind::prime_field) v = mod_floor(v, r.int_modulus());
    return Access::make(r, Value{std::move(v)});
}

inline Elem make_poly(const Ring& r, std::vector<Term> terms) {
    return Access::make(r, Value{PolyValue{std::move(terms)}});
}

inline Elem make_poly_map(const Ring& r, std::map<Monomial, Elem, MonoGreater>& acc) {
    std::vector<Term> terms;
    terms.reserve(acc.size());
    for (auto& [m, c] : acc)
        if (!c.is_zero()) terms.push_back(Term{m, c});
    return make_poly(r, std::move(terms));
}

inline std::size_t size_bound(const Elem& x) {
    switch (x.ring().kind()) {
        case RingKind::integers:
            return mpz_sizeinbase(as_int(x).get_mpz_t(), 2) + 1;
        case RingKind::polynomial: {
            std::size_t d = 0, c = 0;
            for (const auto& t : as_poly(x).terms) {
                d = std::max<std::size_t>(d, mono_degree(t.mono));
                c = std::max(c, size_bound(t.coeff));
            }
            return d + c + 1;
        }
        case RingKind::localization:
            return size_bound(as_wrap(x).inner) + 1;
        default:
            return 2;
    }
}

inline std::optional<Elem> base_exact_quotient(const Elem& num, const Elem& m) {
    if (num.ring().kind() == RingKind::integers) {
        const BigInt& d = as_int(m);
        if (d == 0 || !int_divides(d, as_int(num))) return std::nullopt;
        BigInt q;
        mpz_divexact(q.get_mpz_t(), as_int(num).get_mpz_t(), d.get_mpz_t());
        return make_int(num.ring(), q);
    }
    return try_divide(num, m);
}

inline Elem make_loc(const Ring& r, Elem num, long k) {
    if (k < 0) {
        num = num * r.multiplier().pow(static_cast<unsigned long>(-k));
        k = 0;
    }
    if (num.is_zero()) return Access::make(r, Value{WrapValue{num, 0}});
    const Elem& m = r.multiplier();
    while (k > 0) {
        auto q = base_exact_quotient(num, m);
        if (!q) break;
        num = *q;
        --k;
    }
    return Access::make(r, Value{WrapValue{std::move(num), k}});
}

inline Elem make_quot(const Ring& r, Elem inner) {
    const auto& node = Access::node(r);
    if (node.base.kind() == RingKind::integers) {
        if (node.n == 0) return Access::make(r, Value{WrapValue{std::move(inner), 0}});
        return Access::make(r, Value{WrapValue{make_int(node.base, mod_floor(as_int(inner), node.n)), 0}});
    }
    std::vector<Elem> c = dense_coeffs(inner);
    const auto& f = node.monic;
    const std::size_t d = f.size() - 1;
    for (std::size_t i = c.size(); i-- > d;) {
        if (c[i].is_zero()) continue;
        Elem lead = c[i];
        for (std::size_t j = 0; j < d; ++j)
            if (!f[j].is_zero()) c[i - d + j] = c[i - d + j] - lead * f[j];
        c[i] = node.base.base().zero();
    }
    if (c.size() > d) c.resize(d);
    return Access::make(r, Value{WrapValue{from_dense(node.base, c), 0}});
}

inline Elem make_pair(const Ring& r, Elem a, Elem b) {
    if (r.kind() == RingKind::milnor) {
        auto c = dense_coeffs(b);
        if (!c.empty() && !c[0].is_zero())
            throw PreconditionFailed("Milnor ring element needs a series part without constant term");
    }
    return Access::make(r, Value{PairValue{std::move(a), std::move(b)}});
}

/// Coefficients of a univariate polynomial, index = exponent.
inline std::vector<Elem> dense_coeffs(const Elem& f) {
    const Ring& r = f.ring();
    if (r.kind() != RingKind::polynomial || r.nvars() != 1) throw Error("expected a univariate polynomial");
    const auto& terms = as_poly(f).terms;
    std::vector<Elem> c;
    if (terms.empty()) return c;
    c.assign(terms.front().mono[0] + 1, r.base().zero());
    for (const auto& t : terms) c[t.mono[0]] = t.coeff;
    return c;
}

inline Elem from_dense(const Ring& poly_ring, const std::vector<Elem>& c) {
    std::vector<Term> terms;
    for (std::size_t i = c.size(); i-- > 0;)
        if (!c[i].is_zero()) terms.push_back(Term{Monomial{static_cast<unsigned>(i)}, c[i]});
    return make_poly(poly_ring, std::move(terms));
}

inline bool value_equal(const Elem& a, const Elem& b) {
    const Value* va = Access::value_ptr(a);
    const Value* vb = Access::value_ptr(b);
    if (va == vb) return true;
    switch (a.ring().kind()) {
        case RingKind::integers:
        case RingKind::prime_field:
            return std::get<BigInt>(va->data) == std::get<BigInt>(vb->data);
        case RingKind::rationals:
            return std::get<BigRat>(va->data) == std::get<BigRat>(vb->data);
        case RingKind::polynomial: {
            const auto& x = std::get<PolyValue>(va->data).terms;
            const auto& y = std::get<PolyValue>(vb->data).terms;
            if (x.size() != y.size()) return false;
            for (std::size_t i = 0; i < x.size(); ++i)
                if (x[i].mono != y[i].mono || !value_equal(x[i].coeff, y[i].coeff)) return false;
            return true;
        }
        case RingKind::localization: {
            const auto& x = std::get<WrapValue>(va->data);
            const auto& y = std::get<WrapValue>(vb->data);
            if (x.exp == y.exp) return value_equal(x.inner, y.inner);
            // Non-minimal exponents: compare by cross-multiplication.
            const Elem& m = a.ring().multiplier();
            if (x.exp < y.exp) return value_equal(x.inner * m.pow(y.exp - x.exp), y.inner);
            return value_equal(x.inner, y.inner * m.pow(x.exp - y.exp));
        }
        case RingKind::quotient:
            return value_equal(std::get<WrapValue>(va->data).inner, std::get<WrapValue>(vb->data).inner);
        case RingKind::product:
        case RingKind::milnor: {
            const auto& x = std::get<PairValue>(va->data);
            const auto& y = std::get<PairValue>(vb->data);
            return value_equal(x.first, y.first) && value_equal(x.second, y.second);
        }
    }
    return false;
}

inline bool deep_equal(const RingNode& x, const RingNode& y) {
    if (&x == &y) return true;
    if (x.kind != y.kind || x.name != y.name) return false;
    switch (x.kind) {
        case RingKind::integers:
        case RingKind::rationals:
            return true;
        case RingKind::prime_field:
            return x.n == y.n;
        case RingKind::polynomial:
            return x.vars == y.vars && x.base == y.base;
        case RingKind::localization:
        case RingKind::milnor:
        case RingKind::quotient:
            return x.base == y.base && value_equal(x.aux, y.aux);
        case RingKind::product:
            return x.left == y.left && x.right == y.right;
    }
    return false;
}

inline std::vector<Term> poly_add(const std::vector<Term>& x, const std::vector<Term>& y, bool subtract) {
    std::vector<Term> out;
    out.reserve(x.size() + y.size());
    std::size_t i = 0, j = 0;
    while (i < x.size() || j < y.size()) {
        if (j == y.size() || (i < x.size() && mono_greater(x[i].mono, y[j].mono))) {
            out.push_back(x[i++]);
        } else if (i == x.size() || mono_greater(y[j].mono, x[i].mono)) {
            out.push_back(Term{y[j].mono, subtract ? -y[j].coeff : y[j].coeff});
            ++j;
        } else {
            Elem c = subtract ? x[i].coeff - y[j].coeff : x[i].coeff + y[j].coeff;
            if (!c.is_zero()) out.push_back(Term{x[i].mono, c});
            ++i;
            ++j;
        }
    }
    return out;
}

inline Elem add_impl(const Elem& a, const Elem& b, bool subtract) {
    const Ring& r = a.ring();
    switch (r.kind()) {
        case RingKind::integers:
        case RingKind::prime_field:
            return make_int(r, subtract ? BigInt(as_int(a) - as_int(b)) : BigInt(as_int(a) + as_int(b)));
        case RingKind::rationals:
            return Access::make(r, Value{subtract ? BigRat(as_rat(a) - as_rat(b)) : BigRat(as_rat(a) + as_rat(b))});
        case RingKind::polynomial:
            return make_poly(r, poly_add(as_poly(a).terms, as_poly(b).terms, subtract));
        case RingKind::localization: {
            const auto& x = as_wrap(a);
            const auto& y = as_wrap(b);
            const Elem& m = r.multiplier();
            long k = std::max(x.exp, y.exp);
            Elem xn = x.exp < k ? x.inner * m.pow(k - x.exp) : x.inner;
            Elem yn = y.exp < k ? y.inner * m.pow(k - y.exp) : y.inner;
            return make_loc(r, subtract ? xn - yn : xn + yn, k);
        }
        case RingKind::quotient: {
            const auto& x = as_wrap(a).inner;
            const auto& y = as_wrap(b).inner;
            return make_quot(r, subtract ? x - y : x + y);
        }
        case RingKind::product:
        case RingKind::milnor: {
            const auto& x = as_pair(a);
            const auto& y = as_pair(b);
            if (subtract) return make_pair(r, x.first - y.first, x.second - y.second);
            return make_pair(r, x.first + y.first, x.second + y.second);
        }
    }
    throw Error("unreachable");
}

inline Elem mul_impl(const Elem& a, const Elem& b) {
    const Ring& r = a.ring();
    switch (r.kind()) {
        case RingKind::integers:
        case RingKind::prime_field:
            return make_int(r, as_int(a) * as_int(b));
        case RingKind::rationals:
            return Access::make(r, Value{BigRat(as_rat(a) * as_rat(b))});
        case RingKind::polynomial: {
            const auto& x = as_poly(a).terms;
            const auto& y = as_poly(b).terms;
            if (x.empty() || y.empty()) return make_poly(r, {});
            std::map<Monomial, Elem, MonoGreater> acc;
            const std::size_t nv = r.nvars();
            Monomial m(nv);
            for (const auto& s : x)
                for (const auto& t : y) {
                    for (std::size_t i = 0; i < nv; ++i) m[i] = s.mono[i] + t.mono[i];
                    Elem c = s.coeff * t.coeff;
                    auto it = acc.find(m);
                    if (it == acc.end())
                        acc.emplace(m, std::move(c));
                    else
                        it->second = it->second + c;
                }
            return make_poly_map(r, acc);
        }
        case RingKind::localization: {
            const auto& x = as_wrap(a);
            const auto& y = as_wrap(b);
            return make_loc(r, x.inner * y.inner, x.exp + y.exp);
        }
        case RingKind::quotient:
            return make_quot(r, as_wrap(a).inner * as_wrap(b).inner);
        case RingKind::product: {
            const auto& x = as_pair(a);
            const auto& y = as_pair(b);
            return make_pair(r, x.first * y.first, x.second * y.second);
        }
        case RingKind::milnor: {
            // (x, f)(y, g) = (xy, l(x)g + l(y)f + fg)
            const auto& x = as_pair(a);
            const auto& y = as_pair(b);
            const Ring& s = r.series();
            Elem lx = coerce(x.first, s);
            Elem ly = coerce(y.first, s);
            return make_pair(r, x.first * y.first, lx * y.second + ly * x.second + x.second * y.second);
        }
    }
    throw Error("unreachable");
}

inline Elem neg_impl(const Elem& a) {
    const Ring& r = a.ring();
    switch (r.kind()) {
        case RingKind::integers:
        case RingKind::prime_field:
            return make_int(r, -as_int(a));
        case RingKind::rationals:
            return Access::make(r, Value{BigRat(-as_rat(a))});
        case RingKind::polynomial: {
            std::vector<Term> t = as_poly(a).terms;
            for (auto& x : t) x.coeff = -x.coeff;
            return make_poly(r, std::move(t));
        }
        case RingKind::localization:
            return Access::make(r, Value{WrapValue{-as_wrap(a).inner, as_wrap(a).exp}});
        case RingKind::quotient:
            return make_quot(r, -as_wrap(a).inner);
        case RingKind::product:
        case RingKind::milnor:
            return Access::make(r, Value{PairValue{-as_pair(a).first, -as_pair(a).second}});
    }
    throw Error("unreachable");
}

}  // namespace detail

inline Elem operator+(const Elem& a, const Elem& b) {
    detail::require_same(a, b, "addition");
    return detail::add_impl(a, b, false);
}

inline Elem operator-(const Elem& a, const Elem& b) {
    detail::require_same(a, b, "subtraction");
    return detail::add_impl(a, b, true);
}

inline Elem operator*(const Elem& a, const Elem& b) {
    detail::require_same(a, b, "multiplication");
    return detail::mul_impl(a, b);
}

inline Elem Elem::operator-() const { return detail::neg_impl(*this); }

inline bool operator==(const Elem& a, const Elem& b) {
    if (!a.valid() || !b.valid()) return a.valid() == b.valid();
    return a.ring() == b.ring() && detail::value_equal(a, b);
}

// ---------------------------------------------------------------------------
// Remaining factories (need arithmetic)

inline Ring localization(const Ring& base, const Elem& multiplier) {
    if (multiplier.ring() != base) throw RingMismatch("localization multiplier must lie in the base ring");
    if (multiplier.is_zero()) throw PreconditionFailed("cannot localize at zero");
    if (!base.is_domain()) throw Unsupported("localization is supported over domains only");
    detail::RingNode n;
    n.kind = RingKind::localization;
    n.base = base;
    n.aux = multiplier;
    n.name = base.str() + "[1/" + multiplier.str() + "]";
    n.domain = true;
    n.field = base.is_field();
    return detail::intern(std::move(n));
}

inline Ring quotient(const Ring& base, const Elem& modulus) {
    if (modulus.ring() != base) throw RingMismatch("quotient modulus must lie in the base ring");
    detail::RingNode n;
    n.kind = RingKind::quotient;
    n.base = base;
    if (base.kind() == RingKind::integers) {
        n.n = abs(modulus.int_value());
        n.aux = base.from_int(n.n);
        n.domain = n.n == 0 || is_probable_prime(n.n);
        n.field = is_probable_prime(n.n);
        n.name = "Z/(" + n.n.get_str() + ")";
        return detail::intern(std::move(n));
    }
    if (base.kind() != RingKind::polynomial || base.nvars() != 1)
        throw Unsupported("quotients are supported for Z and univariate polynomial rings");
    auto c = detail::dense_coeffs(modulus);
    if (c.size() < 2) throw Unsupported("quotient by a constant polynomial");
    auto inv = try_divide(base.base().one(), c.back());
    if (!inv) throw Unsupported("quotient modulus needs a unit leading coefficient");
    for (auto& x : c) x = x * *inv;
    n.aux = detail::from_dense(base, c);
    n.monic = std::move(c);
    n.name = base.str() + "/(" + n.aux.str() + ")";
    return detail::intern(std::move(n));
}

inline Ring product(const Ring& left, const Ring& right) {
    detail::RingNode n;
    n.kind = RingKind::product;
    n.left = left;
    n.right = right;
    n.name = "Prod(" + left.str() + "," + right.str() + ")";
    return detail::intern(std::move(n));
}

inline Ring milnor_ring(const Ring& base, const Elem& a) {
    if (a.ring() != base) throw RingMismatch("Milnor multiplier must lie in the base ring");
    detail::RingNode n;
    n.kind = RingKind::milnor;
    n.base = base;
    n.aux = a;
    n.loc = localization(base, a);
    std::string t = "t";
    while (n.loc.variable(t)) t += "'";
    n.series = polynomial_ring(n.loc, {t});
    n.name = "Milnor(" + base.str() + "," + a.str() + ")";
    n.domain = base.is_domain();
    return detail::intern(std::move(n));
}

// ---------------------------------------------------------------------------
// Division

namespace detail {

/// Multivariate exact division over a coefficient ring with exact division.
inline std::optional<Elem> poly_try_divide(const Elem& a, const Elem& b) {
    const Ring& r = a.ring();
    const auto& bt = as_poly(b).terms;
    if (bt.empty()) return std::nullopt;
    const Term& lb = bt.front();
    std::map<Monomial, Elem, MonoGreater> q;
    Elem rem = a;
    const std::size_t nv = r.nvars();
    while (!rem.is_zero()) {
        const Term& lr = as_poly(rem).terms.front();
        Monomial m(nv);
        for (std::size_t i = 0; i < nv; ++i) {
            if (lr.mono[i] < lb.mono[i]) return std::nullopt;
            m[i] = lr.mono[i] - lb.mono[i];
        }
        auto c = try_divide(lr.coeff, lb.coeff);
        if (!c) return std::nullopt;
        Elem t = make_poly(r, {Term{m, *c}});
        q.emplace(m, *c);
        Elem next = rem - t * b;
        if (!next.is_zero() && !mono_greater(as_poly(rem).terms.front().mono, as_poly(next).terms.front().mono))
            return std::nullopt;  // zero divisors in the coefficients
        rem = next;
    }
    return make_poly_map(r, q);
}

struct UniDivMod {
    std::vector<Elem> q, r;
};

/// Division with remainder of dense univariate polynomials; divisor leading coefficient must be a unit.
inline UniDivMod uni_divmod(std::vector<Elem> a, const std::vector<Elem>& b, const Ring& coeff) {
    while (!b.empty() && b.back().is_zero()) throw Error("divisor not trimmed");
    if (b.empty()) throw NonUnit("division by the zero polynomial");
    Elem inv = inverse(b.back());
    const std::size_t db = b.size() - 1;
    UniDivMod out;
    while (!a.empty() && a.back().is_zero()) a.pop_back();
    if (a.size() <= db) {
        out.r = a;
        return out;
    }
    out.q.assign(a.size() - db, coeff.zero());
    for (std::size_t i = a.size(); i-- > db;) {
        if (a[i].is_zero()) continue;
        Elem c = a[i] * inv;
        out.q[i - db] = c;
        for (std::size_t j = 0; j <= db; ++j) a[i - db + j] = a[i - db + j] - c * b[j];
    }
    a.resize(db);
    while (!a.empty() && a.back().is_zero()) a.pop_back();
    out.r = a;
    return out;
}

inline void trim(std::vector<Elem>& c) {
    while (!c.empty() && c.back().is_zero()) c.pop_back();
}

inline std::vector<Elem> uni_mul(const std::vector<Elem>& a, const std::vector<Elem>& b, const Ring& coeff) {
    if (a.empty() || b.empty()) return {};
    std::vector<Elem> c(a.size() + b.size() - 1, coeff.zero());
    for (std::size_t i = 0; i < a.size(); ++i)
        for (std::size_t j = 0; j < b.size(); ++j) c[i + j] = c[i + j] + a[i] * b[j];
    trim(c);
    return c;
}

inline std::vector<Elem> uni_sub(std::vector<Elem> a, const std::vector<Elem>& b, const Ring& coeff) {
    if (a.size() < b.size()) a.resize(b.size(), coeff.zero());
    for (std::size_t i = 0; i < b.size(); ++i) a[i] = a[i] - b[i];
    trim(a);
    return a;
}

/// Inverse of x in R[t]/(f) for f monic; nullopt when not found.
inline std::optional<Elem> quotient_poly_inverse(const Elem& x) {
    const Ring& q = x.ring();
    const auto& node = Access::node(q);
    const Ring& pr = node.base;
    const Ring& coeff = pr.base();
    std::vector<Elem> a = dense_coeffs(as_wrap(x).inner);
    trim(a);
    if (a.empty()) return std::nullopt;
    std::vector<Elem> f = node.monic;
    if (coeff.is_field()) {
        // extended Euclid: s*a + t*f = g
        std::vector<Elem> r0 = f, r1 = a;
        std::vector<Elem> s0, s1{coeff.one()};
        while (!r1.empty()) {
            auto dm = uni_divmod(r0, r1, coeff);
            std::vector<Elem> s2 = uni_sub(s0, uni_mul(dm.q, s1, coeff), coeff);
            r0 = std::move(r1);
            r1 = std::move(dm.r);
            s0 = std::move(s1);
            s1 = std::move(s2);
        }
        if (r0.size() != 1) return std::nullopt;
        Elem c = inverse(r0[0]);
        for (auto& e : s0) e = e * c;
        return make_quot(q, from_dense(pr, s0));
    }
    // f = t^d: invert the constant term and sum the geometric series.
    bool monomial = true;
    for (std::size_t i = 0; i + 1 < f.size(); ++i)
        if (!f[i].is_zero()) monomial = false;
    if (!monomial) return std::nullopt;
    auto c0inv = try_divide(coeff.one(), a[0]);
    if (!c0inv) return std::nullopt;
    Elem u = make_quot(q, from_dense(pr, {*c0inv}));
    Elem n = x * u - q.one();  // nilpotent
    Elem sum = q.one(), power = q.one();
    for (std::size_t i = 1; i < f.size(); ++i) {
        power = power * (-n);
        sum = sum + power;
    }
    return sum * u;
}

}  // namespace detail

inline std::optional<Elem> try_divide(const Elem& a, const Elem& b) {
    detail::require_same(a, b, "division");
    using namespace detail;
    const Ring& r = a.ring();
    if (b.is_zero()) return std::nullopt;
    switch (r.kind()) {
        case RingKind::integers: {
            if (!int_divides(as_int(b), as_int(a))) return std::nullopt;
            BigInt q;
            mpz_divexact(q.get_mpz_t(), as_int(a).get_mpz_t(), as_int(b).get_mpz_t());
            return make_int(r, q);
        }
        case RingKind::prime_field: {
            BigInt inv;
            mpz_invert(inv.get_mpz_t(), as_int(b).get_mpz_t(), r.int_modulus().get_mpz_t());
            return make_int(r, as_int(a) * inv);
        }
        case RingKind::rationals:
            return Access::make(r, Value{BigRat(as_rat(a) / as_rat(b))});
        case RingKind::polynomial:
            return poly_try_divide(a, b);
        case RingKind::localization: {
            const auto& x = as_wrap(a);
            const auto& y = as_wrap(b);
            const Elem& m = r.multiplier();
            Elem num = x.inner * m.pow(static_cast<unsigned long>(y.exp));
            const std::size_t bound = size_bound(y.inner) + 1;
            for (std::size_t j = 0; j <= bound; ++j) {
                if (auto q = base_exact_quotient(num, y.inner)) return make_loc(r, *q, x.exp + static_cast<long>(j));
                num = num * m;
            }
            return std::nullopt;
        }
        case RingKind::quotient: {
            const auto& node = Access::node(r);
            if (node.base.kind() == RingKind::integers) {
                if (node.n == 0) {
                    auto q = try_divide(as_wrap(a).inner, as_wrap(b).inner);
                    if (!q) return std::nullopt;
                    return make_quot(r, *q);
                }
                const BigInt& n = node.n;
                BigInt g = int_gcd(as_int(as_wrap(b).inner), n);
                if (!int_divides(g, as_int(as_wrap(a).inner))) return std::nullopt;
                BigInt nb = as_int(as_wrap(b).inner) / g, na = as_int(as_wrap(a).inner) / g, ng = n / g;
                BigInt inv;
                if (ng == 1) return r.zero();
                mpz_invert(inv.get_mpz_t(), nb.get_mpz_t(), ng.get_mpz_t());
                return make_quot(r, make_int(node.base, mod_floor(na * inv, ng)));
            }
            auto inv = quotient_poly_inverse(b);
            if (!inv) return std::nullopt;
            return a * *inv;
        }
        case RingKind::product: {
            auto x = try_divide(a.first(), b.first());
            auto y = try_divide(a.second(), b.second());
            if (!x || !y) return std::nullopt;
            return make_pair(r, *x, *y);
        }
        case RingKind::milnor: {
            if (!b.second().is_zero()) return std::nullopt;
            auto x = try_divide(a.first(), b.first());
            if (!x) return std::nullopt;
            Elem lb = coerce(b.first(), r.series());
            auto f = try_divide(a.second(), lb);
            if (!f) return std::nullopt;
            return make_pair(r, *x, *f);
        }
    }
    return std::nullopt;
}

inline Elem divide(const Elem& a, const Elem& b) {
    auto q = try_divide(a, b);
    if (!q) throw NonUnit("cannot divide " + a.str() + " by " + b.str() + " in " + a.ring().str());
    return *q;
}

inline Elem inverse(const Elem& a) {
    auto q = try_divide(a.ring().one(), a);
    if (!q) throw NonUnit(a.str() + " is not a unit in " + a.ring().str());
    return *q;
}

inline bool is_unit(const Elem& a) { return try_divide(a.ring().one(), a).has_value(); }

// ---------------------------------------------------------------------------
// Canonical maps

inline Elem coerce(const Elem& x, const Ring& target) {
    using namespace detail;
    const Ring& src = x.ring();
    if (src == target) return x;
    if (src.kind() == RingKind::integers) return target.from_int(x.int_value());
    if (src.kind() == RingKind::rationals) return target.from_rat(x.rat_value());
    switch (target.kind()) {
        case RingKind::polynomial: {
            if (src.kind() == RingKind::polynomial) {
                std::vector<int> pos(src.nvars(), -1);
                bool all = true;
                for (std::size_t i = 0; i < src.nvars(); ++i) {
                    for (std::size_t j = 0; j < target.nvars(); ++j)
                        if (src.vars()[i] == target.vars()[j]) pos[i] = static_cast<int>(j);
                    if (pos[i] < 0) all = false;
                }
                if (all) {
                    std::map<Monomial, Elem, MonoGreater> acc;
                    for (const auto& t : as_poly(x).terms) {
                        Monomial m(target.nvars(), 0);
                        for (std::size_t i = 0; i < src.nvars(); ++i) m[pos[i]] = t.mono[i];
                        acc.emplace(m, coerce(t.coeff, target.base()));
                    }
                    return make_poly_map(target, acc);
                }
                // Variables of the source live deeper in the target's coefficients.
                Elem acc = target.zero();
                for (const auto& t : as_poly(x).terms) {
                    Elem term = coerce(t.coeff, target);
                    for (std::size_t i = 0; i < src.nvars(); ++i) {
                        if (!t.mono[i]) continue;
                        auto v = target.variable(src.vars()[i]);
                        if (!v) throw Unsupported("no canonical map from " + src.str() + " to " + target.str());
                        term = term * v->pow(t.mono[i]);
                    }
                    acc = acc + term;
                }
                return acc;
            }
            Elem c = coerce(x, target.base());
            if (c.is_zero()) return target.zero();
            return make_poly(target, {Term{Monomial(target.nvars(), 0), c}});
        }
        case RingKind::localization: {
            if (src.kind() == RingKind::localization) {
                Elem num = coerce(x.numerator(), target);
                if (x.exponent() == 0) return num;
                Elem m = coerce(src.multiplier(), target);
                return divide(num, m.pow(static_cast<unsigned long>(x.exponent())));
            }
            if (src.kind() == RingKind::quotient || src.kind() == RingKind::product || src.kind() == RingKind::milnor)
                break;
            return make_loc(target, coerce(x, target.base()), 0);
        }
        case RingKind::rationals:
            if (src.kind() == RingKind::localization) {
                Elem num = coerce(x.numerator(), target);
                Elem m = coerce(src.multiplier(), target);
                return divide(num, m.pow(static_cast<unsigned long>(x.exponent())));
            }
            break;
        case RingKind::prime_field:
            if (src.kind() == RingKind::quotient && src.base().kind() == RingKind::integers &&
                src.int_modulus() != 0 && int_divides(target.int_modulus(), src.int_modulus()))
                return target.from_int(x.rep().int_value());
            if (src.kind() == RingKind::localization) {
                Elem num = coerce(x.numerator(), target);
                Elem m = coerce(src.multiplier(), target);
                return divide(num, m.pow(static_cast<unsigned long>(x.exponent())));
            }
            break;
        case RingKind::quotient:
            if (src.kind() == RingKind::quotient) {
                if (src.base() == target.base() && target.base().kind() == RingKind::integers &&
                    int_divides(target.int_modulus(), src.int_modulus()))
                    return make_quot(target, x.rep());
                if (src.base() == target.base()) {
                    // R[t]/(f) -> R[t]/(g) needs g | f
                    auto q = try_divide(src.modulus(), target.modulus());
                    if (q) return make_quot(target, x.rep());
                }
                break;
            }
            return make_quot(target, coerce(x, target.base()));
        case RingKind::product:
            return make_pair(target, coerce(x, target.left()), coerce(x, target.right()));
        case RingKind::milnor:
            return make_pair(target, coerce(x, target.base()), target.series().zero());
        default:
            break;
    }
    throw Unsupported("no canonical map from " + src.str() + " to " + target.str());
}

inline Elem pair_elem(const Ring& r, const Elem& a, const Elem& b) {
    if (r.kind() == RingKind::product) {
        if (a.ring() != r.left() || b.ring() != r.right()) throw RingMismatch("pair components in the wrong rings");
    } else if (r.kind() == RingKind::milnor) {
        if (a.ring() != r.base() || b.ring() != r.series()) throw RingMismatch("pair components in the wrong rings");
    } else {
        throw Error("pair_elem needs a product or Milnor ring");
    }
    return detail::make_pair(r, a, b);
}

inline bool has_coercion(const Ring& source, const Ring& target) {
    try {
        coerce(source.one(), target);
        return true;
    } catch (const Error&) {
        return false;
    }
}

// ---------------------------------------------------------------------------
// Printing

namespace detail {

inline bool atomic_text(const std::string& s) {
    std::size_t i = (!s.empty() && s[0] == '-') ? 1 : 0;
    if (i == s.size()) return false;
    for (; i < s.size(); ++i)
        if (!std::isdigit(static_cast<unsigned char>(s[i]))) return false;
    return true;
}

inline bool simple_text(const std::string& s) {
    for (std::size_t i = 1; i < s.size(); ++i)
        if (s[i] == ' ' || s[i] == '+' || s[i] == '-' || s[i] == '/' || s[i] == ',') return false;
    return !s.empty();
}

inline std::string mono_str(const Ring& r, const Monomial& m) {
    std::string out;
    for (std::size_t i = 0; i < m.size(); ++i) {
        if (!m[i]) continue;
        if (!out.empty()) out += "*";
        out += r.vars()[i];
        if (m[i] > 1) out += "^" + std::to_string(m[i]);
    }
    return out;
}

}  // namespace detail

inline std::string Elem::str() const {
    using namespace detail;
    if (!valid()) return "<invalid>";
    switch (ring_.kind()) {
        case RingKind::integers:
        case RingKind::prime_field:
            return as_int(*this).get_str();
        case RingKind::rationals:
            return as_rat(*this).get_str();
        case RingKind::polynomial: {
            const auto& t = as_poly(*this).terms;
            if (t.empty()) return "0";
            std::string out;
            for (std::size_t i = 0; i < t.size(); ++i) {
                std::string ms = mono_str(ring_, t[i].mono);
                std::string cs = t[i].coeff.str();
                std::string s;
                if (ms.empty())
                    s = atomic_text(cs) || simple_text(cs) ? cs : "(" + cs + ")";
                else if (cs == "1")
                    s = ms;
                else if (cs == "-1")
                    s = "-" + ms;
                else if (atomic_text(cs))
                    s = cs + "*" + ms;
                else
                    s = "(" + cs + ")*" + ms;
                if (i == 0)
                    out = s;
                else if (s[0] == '-')
                    out += " - " + s.substr(1);
                else
                    out += " + " + s;
            }
            return out;
        }
        case RingKind::localization: {
            const auto& w = as_wrap(*this);
            std::string ns = w.inner.str();
            if (w.exp == 0) return ns;
            const Elem& m = ring_.multiplier();
            if (m.ring().kind() == RingKind::integers)
                return ns + "/" + ipow(as_int(m), static_cast<unsigned long>(w.exp)).get_str();
            std::string out = atomic_text(ns) ? ns : "(" + ns + ")";
            std::string msr = m.str();
            out += "/" + (atomic_text(msr) || simple_text(msr) ? msr : "(" + msr + ")");
            if (w.exp > 1) out += "^" + std::to_string(w.exp);
            return out;
        }
        case RingKind::quotient:
            return as_wrap(*this).inner.str();
        case RingKind::product:
        case RingKind::milnor:
            return "(" + as_pair(*this).first.str() + ", " + as_pair(*this).second.str() + ")";
    }
    return "?";
}

// ---------------------------------------------------------------------------
// Univariate helpers and Bezout identities

struct Bezout {
    Elem g, x, y;  // a*x + b*y = g
};

/// Extended gcd over Z or a univariate polynomial ring over a field (g monic / nonnegative).
inline Bezout bezout(const Elem& a, const Elem& b) {
    detail::require_same(a, b, "bezout");
    const Ring& r = a.ring();
    if (r.kind() == RingKind::integers) {
        auto e = int_bezout(a.int_value(), b.int_value());
        return {r.from_int(e.g), r.from_int(e.x), r.from_int(e.y)};
    }
    if (r.kind() == RingKind::polynomial && r.nvars() == 1 && r.base().is_field()) {
        using namespace detail;
        const Ring& k = r.base();
        std::vector<Elem> r0 = dense_coeffs(a), r1 = dense_coeffs(b);
        trim(r0);
        trim(r1);
        std::vector<Elem> s0{k.one()}, s1, t0, t1{k.one()};
        while (!r1.empty()) {
            auto dm = uni_divmod(r0, r1, k);
            auto s2 = uni_sub(s0, uni_mul(dm.q, s1, k), k);
            auto t2 = uni_sub(t0, uni_mul(dm.q, t1, k), k);
            r0 = std::move(r1);
            r1 = std::move(dm.r);
            s0 = std::move(s1);
            s1 = std::move(s2);
            t0 = std::move(t1);
            t1 = std::move(t2);
        }
        if (!r0.empty()) {
            Elem c = inverse(r0.back());
            for (auto& e : r0) e = e * c;
            for (auto& e : s0) e = e * c;
            for (auto& e : t0) e = e * c;
        }
        trim(s0);
        trim(t0);
        return {from_dense(r, r0), from_dense(r, s0), from_dense(r, t0)};
    }
    if (r.is_field()) {
        if (!a.is_zero()) return {r.one(), inverse(a), r.zero()};
        if (!b.is_zero()) return {r.one(), r.zero(), inverse(b)};
        return {r.zero(), r.zero(), r.zero()};
    }
    throw Unsupported("no effective Bezout identity in " + r.str());
}

inline std::vector<Elem> coefficients(const Elem& f) {
    auto c = detail::dense_coeffs(f);
    detail::trim(c);
    return c;
}

inline Elem from_coefficients(const Ring& poly_ring, const std::vector<Elem>& c) {
    return detail::from_dense(poly_ring, c);
}

/// Degree of a univariate polynomial (-1 for zero).
inline long degree(const Elem& f) { return static_cast<long>(coefficients(f).size()) - 1; }

/// Total degree of a polynomial (-1 for zero).
inline long total_degree(const Elem& f) {
    const auto& t = f.terms();
    return t.empty() ? -1 : static_cast<long>(detail::mono_degree(t.front().mono));
}

inline std::ostream& operator<<(std::ostream& os, const Elem& x) { return os << x.str(); }
inline std::ostream& operator<<(std::ostream& os, const Ring& r) { return os << r.str(); }

}  // namespace stlab
