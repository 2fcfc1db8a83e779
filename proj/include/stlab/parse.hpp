#pragma once

#include <cctype>
#include <string>
#include <string_view>

#include "stlab/ring.hpp"

namespace stlab {

namespace detail {

class ExprParser {
public:
    explicit ExprParser(std::string_view text) : s_(text) {}

    Elem parse_all(const Ring& r) {
        Elem e = expr(r);
        skip();
        if (pos_ != s_.size()) fail("unexpected trailing input");
        return e;
    }

private:
    std::string_view s_;
    std::size_t pos_ = 0;

    [[noreturn]] void fail(const std::string& msg) const {
        throw ParseError(msg + " at offset " + std::to_string(pos_) + " in \"" + std::string(s_) + "\"");
    }

    void skip() {
        while (pos_ < s_.size() && std::isspace(static_cast<unsigned char>(s_[pos_]))) ++pos_;
    }

    bool eat(char c) {
        skip();
        if (pos_ < s_.size() && s_[pos_] == c) {
            ++pos_;
            return true;
        }
        return false;
    }

    char peek() {
        skip();
        return pos_ < s_.size() ? s_[pos_] : '\0';
    }

    Elem expr(const Ring& r) {
        Elem acc = term(r);
        for (;;) {
            if (eat('+'))
                acc = acc + term(r);
            else if (eat('-'))
                acc = acc - term(r);
            else
                return acc;
        }
    }

    Elem term(const Ring& r) {
        Elem acc = unary(r);
        for (;;) {
            if (eat('*'))
                acc = acc * unary(r);
            else if (eat('/'))
                acc = divide(acc, unary(r));
            else
                return acc;
        }
    }

    Elem unary(const Ring& r) {
        if (eat('-')) return -unary(r);
        if (eat('+')) return unary(r);
        return power(r);
    }

    Elem power(const Ring& r) {
        Elem b = atom(r);
        if (!eat('^')) return b;
        bool neg = eat('-');
        skip();
        std::size_t start = pos_;
        while (pos_ < s_.size() && std::isdigit(static_cast<unsigned char>(s_[pos_]))) ++pos_;
        if (start == pos_) fail("expected an exponent");
        unsigned long e = std::stoul(std::string(s_.substr(start, pos_ - start)));
        Elem p = b.pow(e);
        return neg ? inverse(p) : p;
    }

    Elem atom(const Ring& r) {
        skip();
        if (pos_ >= s_.size()) fail("unexpected end of input");
        char c = s_[pos_];
        if (std::isdigit(static_cast<unsigned char>(c))) {
            std::size_t start = pos_;
            while (pos_ < s_.size() && std::isdigit(static_cast<unsigned char>(s_[pos_]))) ++pos_;
            return r.from_int(BigInt(std::string(s_.substr(start, pos_ - start))));
        }
        if (std::isalpha(static_cast<unsigned char>(c)) || c == '_') {
            std::size_t start = pos_;
            while (pos_ < s_.size() && (std::isalnum(static_cast<unsigned char>(s_[pos_])) || s_[pos_] == '_' ||
                                        s_[pos_] == '\''))
                ++pos_;
            std::string name(s_.substr(start, pos_ - start));
            auto v = r.variable(name);
            if (!v) fail("unknown variable " + name + " in " + r.str());
            return *v;
        }
        if (c == '(') {
            ++pos_;
            if (r.kind() == RingKind::product || r.kind() == RingKind::milnor) {
                std::size_t save = pos_;
                if (top_level_comma()) {
                    pos_ = save;
                    const Ring& lr = r.kind() == RingKind::product ? r.left() : r.base();
                    const Ring& rr = r.kind() == RingKind::product ? r.right() : r.series();
                    Elem a = expr(lr);
                    if (!eat(',')) fail("expected ','");
                    Elem b = expr(rr);
                    if (!eat(')')) fail("expected ')'");
                    return pair_elem(r, a, b);
                }
                pos_ = save;
            }
            Elem e = expr(r);
            if (!eat(')')) fail("expected ')'");
            return e;
        }
        fail(std::string("unexpected character '") + c + "'");
    }

    /// Whether the parenthesized group starting at pos_ contains a comma at depth zero.
    bool top_level_comma() const {
        int depth = 0;
        for (std::size_t i = pos_; i < s_.size(); ++i) {
            char c = s_[i];
            if (c == '(' || c == '[') ++depth;
            if (c == ')' || c == ']') {
                if (depth == 0) return false;
                --depth;
            }
            if (c == ',' && depth == 0) return true;
        }
        return false;
    }
};

inline std::size_t matching_close(std::string_view s, std::size_t open) {
    int depth = 0;
    for (std::size_t i = open; i < s.size(); ++i) {
        if (s[i] == '(' || s[i] == '[') ++depth;
        if (s[i] == ')' || s[i] == ']') {
            if (--depth == 0) return i;
        }
    }
    throw ParseError("unbalanced brackets in \"" + std::string(s) + "\"");
}

inline std::string trim_copy(std::string_view s) {
    std::size_t a = 0, b = s.size();
    while (a < b && std::isspace(static_cast<unsigned char>(s[a]))) ++a;
    while (b > a && std::isspace(static_cast<unsigned char>(s[b - 1]))) --b;
    return std::string(s.substr(a, b - a));
}

/// Split at depth-zero commas.
inline std::vector<std::string> split_top(std::string_view s) {
    std::vector<std::string> out;
    int depth = 0;
    std::size_t start = 0;
    for (std::size_t i = 0; i < s.size(); ++i) {
        if (s[i] == '(' || s[i] == '[') ++depth;
        if (s[i] == ')' || s[i] == ']') --depth;
        if (s[i] == ',' && depth == 0) {
            out.push_back(trim_copy(s.substr(start, i - start)));
            start = i + 1;
        }
    }
    out.push_back(trim_copy(s.substr(start)));
    return out;
}

}  // namespace detail

/// Parse an arithmetic expression ("3/2 + t^2*s", "(1, 0)") as an element of r.
inline Elem parse_elem(const Ring& r, std::string_view text) { return detail::ExprParser(text).parse_all(r); }

/**
 * Parse a ring description: Z, Q, Fp:7, Zmod:6, Z/(6), R[t1,t2], R[1/m], R/(f),
 * Prod(R,S), Milnor(R,a).  Ring::str() produces this syntax.
 */
inline Ring parse_ring(std::string_view text) {
    using namespace detail;
    std::string s = trim_copy(text);
    if (s.empty()) throw ParseError("empty ring description");
    Ring r;
    std::size_t pos = 0;
    auto starts = [&](std::string_view p) { return s.compare(pos, p.size(), p) == 0; };
    auto read_int = [&]() {
        std::size_t start = pos;
        while (pos < s.size() && std::isdigit(static_cast<unsigned char>(s[pos]))) ++pos;
        if (start == pos) throw ParseError("expected an integer in ring description \"" + s + "\"");
        return BigInt(s.substr(start, pos - start));
    };
    if (starts("Prod(") || starts("Milnor(")) {
        bool prod = starts("Prod(");
        std::size_t open = s.find('(', pos);
        std::size_t close = matching_close(s, open);
        auto parts = split_top(std::string_view(s).substr(open + 1, close - open - 1));
        if (parts.size() != 2) throw ParseError("expected two arguments in \"" + s + "\"");
        Ring a = parse_ring(parts[0]);
        r = prod ? product(a, parse_ring(parts[1])) : milnor_ring(a, parse_elem(a, parts[1]));
        pos = close + 1;
    } else if (starts("Zmod:")) {
        pos += 5;
        r = quotient(integers(), integers().from_int(read_int()));
    } else if (starts("Fp:")) {
        pos += 3;
        r = prime_field(read_int());
    } else if (starts("GF(")) {
        pos += 3;
        r = prime_field(read_int());
        if (pos >= s.size() || s[pos] != ')') throw ParseError("expected ')' in \"" + s + "\"");
        ++pos;
    } else if (starts("ZZ") || starts("QQ")) {
        r = s[pos] == 'Z' ? integers() : rationals();
        pos += 2;
    } else if (starts("Z") || starts("Q")) {
        r = s[pos] == 'Z' ? integers() : rationals();
        pos += 1;
    } else if (starts("(")) {
        std::size_t close = matching_close(s, pos);
        r = parse_ring(std::string_view(s).substr(pos + 1, close - pos - 1));
        pos = close + 1;
    } else {
        throw ParseError("unknown ring \"" + s + "\"");
    }
    while (pos < s.size()) {
        if (std::isspace(static_cast<unsigned char>(s[pos]))) {
            ++pos;
            continue;
        }
        if (s[pos] == '[') {
            std::size_t close = matching_close(s, pos);
            std::string inner = trim_copy(std::string_view(s).substr(pos + 1, close - pos - 1));
            if (inner.rfind("1/", 0) == 0) {
                r = localization(r, parse_elem(r, inner.substr(2)));
            } else {
                r = polynomial_ring(r, split_top(inner));
            }
            pos = close + 1;
        } else if (s[pos] == '/' && pos + 1 < s.size() && s[pos + 1] == '(') {
            std::size_t close = matching_close(s, pos + 1);
            r = quotient(r, parse_elem(r, std::string_view(s).substr(pos + 2, close - pos - 2)));
            pos = close + 1;
        } else {
            throw ParseError("unexpected text in ring description \"" + s + "\"");
        }
    }
    return r;
}

}  // namespace stlab
