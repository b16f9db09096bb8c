#pragma once

#include <cctype>
#include <map>
#include <sstream>
#include <string>

#include "polynomial.hpp"

namespace frobstar {

// Recursive-descent parser for the polynomial text syntax: terms joined by
// + or -, '*'-separated powers `var^k`, optional decimal coefficients,
// parenthesized subexpressions, whitespace ignored.  Identifiers resolve to
// ring variables first, then to entries of `defs` (named polynomials).
class PolyParser {
public:
    PolyParser(std::string text, RingPtr ring,
               const std::map<std::string, Polynomial>* defs = nullptr,
               int line = 1)
        : text_(std::move(text)), ring_(std::move(ring)), defs_(defs), line_(line) {}

    Polynomial parse() {
        Polynomial r = parse_sum();
        skip_ws();
        if (pos_ != text_.size()) fail("unexpected trailing input");
        return r;
    }

    // Parses one sum and stops at the first token it cannot consume.
    Polynomial parse_sum() {
        skip_ws();
        bool neg = false;
        if (peek() == '-') { neg = true; ++pos_; }
        else if (peek() == '+') { ++pos_; }
        Polynomial r = parse_product();
        if (neg) r = -r;
        for (;;) {
            skip_ws();
            char c = peek();
            if (c == '+') { ++pos_; r = r + parse_product(); }
            else if (c == '-') { ++pos_; r = r - parse_product(); }
            else break;
        }
        return r;
    }

    size_t position() const { return pos_; }

private:
    Polynomial parse_product() {
        Polynomial r = parse_power();
        for (;;) {
            skip_ws();
            if (peek() == '*') { ++pos_; r = r * parse_power(); }
            else break;
        }
        return r;
    }

    Polynomial parse_power() {
        Polynomial base = parse_atom();
        skip_ws();
        if (peek() == '^') {
            ++pos_;
            long long e = parse_uint();
            return base.pow(e);
        }
        return base;
    }

    Polynomial parse_atom() {
        skip_ws();
        char c = peek();
        if (c == '(') {
            ++pos_;
            Polynomial r = parse_sum();
            skip_ws();
            if (peek() != ')') fail("expected ')'");
            ++pos_;
            return r;
        }
        if (c == '-') { ++pos_; return -parse_atom(); }
        if (std::isdigit(static_cast<unsigned char>(c)))
            return Polynomial::constant(ring_, parse_uint());
        if (std::isalpha(static_cast<unsigned char>(c)) || c == '_') {
            std::string name = parse_ident();
            int idx = ring_->var_index(name);
            if (idx >= 0) return Polynomial::variable(ring_, idx);
            if (defs_) {
                auto it = defs_->find(name);
                if (it != defs_->end()) return it->second;
            }
            fail("unknown variable '" + name + "'");
        }
        fail("expected a polynomial term");
        return Polynomial();  // unreachable
    }

    long long parse_uint() {
        skip_ws();
        if (!std::isdigit(static_cast<unsigned char>(peek()))) fail("expected an integer");
        long long v = 0;
        while (pos_ < text_.size() && std::isdigit(static_cast<unsigned char>(text_[pos_]))) {
            v = v * 10 + (text_[pos_] - '0');
            if (v > 1000000000LL) fail("integer literal too large");
            ++pos_;
        }
        return v;
    }

    std::string parse_ident() {
        size_t start = pos_;
        while (pos_ < text_.size() &&
               (std::isalnum(static_cast<unsigned char>(text_[pos_])) || text_[pos_] == '_'))
            ++pos_;
        return text_.substr(start, pos_ - start);
    }

    void skip_ws() {
        while (pos_ < text_.size() &&
               std::isspace(static_cast<unsigned char>(text_[pos_])) && text_[pos_] != '\n')
            ++pos_;
    }

    char peek() const { return pos_ < text_.size() ? text_[pos_] : '\0'; }

    [[noreturn]] void fail(const std::string& msg) const {
        throw parse_error(msg, line_, static_cast<int>(pos_) + 1);
    }

    std::string text_;
    RingPtr ring_;
    const std::map<std::string, Polynomial>* defs_;
    int line_;
    size_t pos_ = 0;
};

inline Polynomial parse_polynomial(const std::string& text, const RingPtr& ring,
                                   const std::map<std::string, Polynomial>* defs = nullptr,
                                   int line = 1) {
    return PolyParser(text, ring, defs, line).parse();
}

inline std::string format_polynomial(const Polynomial& f) {
    if (f.is_zero()) return "0";
    const Ring& R = *f.ring();
    std::ostringstream out;
    bool first = true;
    for (const auto& [e, c] : f.terms()) {
        if (!first) out << "+";
        first = false;
        bool any_var = total_degree(e) > 0;
        bool wrote = false;
        if (c != 1 || !any_var) {
            out << c;
            wrote = true;
        }
        for (size_t i = 0; i < e.size(); ++i) {
            if (e[i] == 0) continue;
            if (wrote) out << "*";
            out << R.vars[i];
            if (e[i] > 1) out << "^" << e[i];
            wrote = true;
        }
    }
    return out.str();
}

}  // namespace frobstar
