#pragma once

#include <json.hpp>

#include "stlab/parse.hpp"
#include "stlab/ring.hpp"

namespace stlab {

using json = nlohmann::json;

json payload_to_json(const Elem& x);
Elem payload_from_json(const Ring& r, const json& j);

inline json ring_to_json(const Ring& r) {
    switch (r.kind()) {
        case RingKind::integers:
            return {{"kind", "integers"}};
        case RingKind::rationals:
            return {{"kind", "rationals"}};
        case RingKind::prime_field:
            return {{"kind", "prime_field"}, {"p", r.int_modulus().get_str()}};
        case RingKind::polynomial:
            return {{"kind", "polynomial"}, {"base", ring_to_json(r.base())}, {"vars", r.vars()}};
        case RingKind::localization:
            return {{"kind", "localization"}, {"base", ring_to_json(r.base())}, {"multiplier", payload_to_json(r.multiplier())}};
        case RingKind::quotient:
            return {{"kind", "quotient"}, {"base", ring_to_json(r.base())}, {"modulus", payload_to_json(r.modulus())}};
        case RingKind::product:
            return {{"kind", "product"}, {"left", ring_to_json(r.left())}, {"right", ring_to_json(r.right())}};
        case RingKind::milnor:
            return {{"kind", "milnor"}, {"base", ring_to_json(r.base())}, {"multiplier", payload_to_json(r.multiplier())}};
    }
    throw Error("unreachable");
}

/// Accepts a descriptor object or a ring description string.
inline Ring ring_from_json(const json& j) {
    if (j.is_string()) return parse_ring(j.get<std::string>());
    if (!j.is_object() || !j.contains("kind")) throw ParseError("ring descriptor needs a \"kind\"");
    const std::string kind = j.at("kind").get<std::string>();
    auto num = [](const json& v) { return v.is_string() ? BigInt(v.get<std::string>()) : BigInt(v.get<long>()); };
    if (kind == "integers") return integers();
    if (kind == "rationals") return rationals();
    if (kind == "prime_field") return prime_field(num(j.at("p")));
    if (kind == "polynomial") return polynomial_ring(ring_from_json(j.at("base")), j.at("vars").get<std::vector<std::string>>());
    if (kind == "localization") {
        Ring b = ring_from_json(j.at("base"));
        return localization(b, payload_from_json(b, j.at("multiplier")));
    }
    if (kind == "quotient") {
        Ring b = ring_from_json(j.at("base"));
        return quotient(b, payload_from_json(b, j.at("modulus")));
    }
    if (kind == "product") return product(ring_from_json(j.at("left")), ring_from_json(j.at("right")));
    if (kind == "milnor") {
        Ring b = ring_from_json(j.at("base"));
        return milnor_ring(b, payload_from_json(b, j.at("multiplier")));
    }
    throw ParseError("unknown ring kind " + kind);
}

inline json payload_to_json(const Elem& x) {
    const Ring& r = x.ring();
    switch (r.kind()) {
        case RingKind::integers:
        case RingKind::prime_field:
            return x.int_value().get_str();
        case RingKind::rationals:
            return x.rat_value().get_str();
        case RingKind::polynomial: {
            json arr = json::array();
            for (const auto& t : x.terms()) arr.push_back(json::array({t.mono, payload_to_json(t.coeff)}));
            return arr;
        }
        case RingKind::localization:
            return {{"num", payload_to_json(x.numerator())}, {"exp", x.exponent()}};
        case RingKind::quotient:
            return payload_to_json(x.rep());
        case RingKind::product:
        case RingKind::milnor:
            return json::array({payload_to_json(x.first()), payload_to_json(x.second())});
    }
    throw Error("unreachable");
}

/// Accepts a normal-form payload tree, a JSON number, or an expression string.
inline Elem payload_from_json(const Ring& r, const json& j) {
    if (j.is_number_integer()) return r.from_int(BigInt(j.get<long>()));
    switch (r.kind()) {
        case RingKind::integers:
        case RingKind::prime_field:
        case RingKind::rationals:
            if (j.is_string()) return parse_elem(r, j.get<std::string>());
            break;
        case RingKind::polynomial:
            if (j.is_string()) return parse_elem(r, j.get<std::string>());
            if (j.is_array()) {
                Elem acc = r.zero();
                for (const auto& t : j) {
                    auto mono = t.at(0).get<Monomial>();
                    if (mono.size() != r.nvars()) throw ParseError("monomial of wrong length");
                    Elem term = coerce(payload_from_json(r.base(), t.at(1)), r);
                    for (std::size_t i = 0; i < mono.size(); ++i)
                        if (mono[i]) term = term * r.gen(i).pow(mono[i]);
                    acc = acc + term;
                }
                return acc;
            }
            break;
        case RingKind::localization:
            if (j.is_string()) return parse_elem(r, j.get<std::string>());
            if (j.is_object()) {
                Elem n = coerce(payload_from_json(r.base(), j.at("num")), r);
                long k = j.at("exp").get<long>();
                return divide(n, coerce(r.multiplier(), r).pow(static_cast<unsigned long>(k)));
            }
            break;
        case RingKind::quotient:
            if (j.is_string()) return parse_elem(r, j.get<std::string>());
            return coerce(payload_from_json(r.base(), j), r);
        case RingKind::product:
        case RingKind::milnor:
            if (j.is_string()) return parse_elem(r, j.get<std::string>());
            if (j.is_array() && j.size() == 2) {
                const Ring& a = r.kind() == RingKind::product ? r.left() : r.base();
                const Ring& b = r.kind() == RingKind::product ? r.right() : r.series();
                return pair_elem(r, payload_from_json(a, j.at(0)), payload_from_json(b, j.at(1)));
            }
            break;
    }
    throw ParseError("malformed payload for " + r.str() + ": " + j.dump());
}

inline json elem_to_json(const Elem& x) { return {{"ring", ring_to_json(x.ring())}, {"payload", payload_to_json(x)}}; }

inline Elem elem_from_json(const json& j) {
    Ring r = ring_from_json(j.at("ring"));
    return payload_from_json(r, j.at("payload"));
}

}  // namespace stlab
