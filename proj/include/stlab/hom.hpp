#pragma once

#include <functional>
#include <string>
#include <utility>
#include <vector>

#include "stlab/ring.hpp"

namespace stlab {

/// A ring homomorphism given by an explicit rule.
class RingHom {
public:
    using Fn = std::function<Elem(const Elem&)>;

    RingHom(Ring source, Ring target, Fn fn, std::string name)
        : source_(std::move(source)), target_(std::move(target)), fn_(std::move(fn)), name_(std::move(name)) {}

    const Ring& source() const { return source_; }
    const Ring& target() const { return target_; }
    const std::string& name() const { return name_; }

    Elem operator()(const Elem& x) const {
        if (x.ring() != source_)
            throw RingMismatch("homomorphism " + name_ + " expects " + source_.str() + ", got " + x.ring().str());
        return fn_(x);
    }

    static RingHom identity(const Ring& r) {
        return RingHom(r, r, [](const Elem& x) { return x; }, "id");
    }

    /// Structure map (inclusion, localization, reduction).
    static RingHom canonical(const Ring& source, const Ring& target) {
        if (!has_coercion(source, target))
            throw Unsupported("no canonical map from " + source.str() + " to " + target.str());
        return RingHom(source, target, [target](const Elem& x) { return coerce(x, target); },
                       "canonical " + source.str() + " -> " + target.str());
    }

    /// Evaluation of a polynomial ring (or a quotient of one, on representatives) at given images.
    static RingHom evaluation(const Ring& source, const Ring& target, std::vector<Elem> images) {
        const Ring& poly = source.kind() == RingKind::quotient ? source.base() : source;
        if (poly.kind() != RingKind::polynomial) throw Unsupported("evaluation needs a polynomial ring");
        if (images.size() != poly.nvars()) throw PreconditionFailed("evaluation needs one image per variable");
        for (auto& im : images)
            if (im.ring() != target) im = coerce(im, target);
        std::string name = "eval(";
        for (std::size_t i = 0; i < images.size(); ++i)
            name += (i ? ", " : "") + poly.vars()[i] + "->" + images[i].str();
        name += ")";
        bool quot = source.kind() == RingKind::quotient;
        return RingHom(
            source, target,
            [images = std::move(images), target, quot](const Elem& x) {
                const Elem& p = quot ? x.rep() : x;
                Elem acc = target.zero();
                for (const auto& t : p.terms()) {
                    Elem v = coerce(t.coeff, target);
                    for (std::size_t i = 0; i < t.mono.size(); ++i)
                        if (t.mono[i]) v = v * images[i].pow(t.mono[i]);
                    acc = acc + v;
                }
                return acc;
            },
            name);
    }

    static RingHom projection(const Ring& prod, int which) {
        if (prod.kind() != RingKind::product) throw Unsupported("projection needs a product ring");
        if (which != 0 && which != 1) throw PreconditionFailed("projection index must be 0 or 1");
        Ring t = which == 0 ? prod.left() : prod.right();
        return RingHom(prod, t, [which](const Elem& x) { return which == 0 ? x.first() : x.second(); },
                       which == 0 ? "pr1" : "pr2");
    }

    /// Milnor ring R x tR_a[t] -> R_a[t], (x, f) -> l(x) + f.
    static RingHom milnor_l(const Ring& m) {
        if (m.kind() != RingKind::milnor) throw Unsupported("milnor_l needs a Milnor ring");
        Ring s = m.series();
        return RingHom(m, s, [s](const Elem& x) { return coerce(x.first(), s) + x.second(); }, "l");
    }

    /// Milnor ring R x tR_a[t] -> R, (x, f) -> x.
    static RingHom milnor_e(const Ring& m) {
        if (m.kind() != RingKind::milnor) throw Unsupported("milnor_e needs a Milnor ring");
        return RingHom(m, m.base(), [](const Elem& x) { return x.first(); }, "e");
    }

private:
    Ring source_, target_;
    Fn fn_;
    std::string name_;
};

/// second o first
inline RingHom compose(const RingHom& second, const RingHom& first) {
    if (first.target() != second.source())
        throw RingMismatch("cannot compose " + second.name() + " after " + first.name());
    return RingHom(first.source(), second.target(), [second, first](const Elem& x) { return second(first(x)); },
                   second.name() + " o " + first.name());
}

}  // namespace stlab
