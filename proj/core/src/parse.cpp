#include "freepairs/parse.hpp"

#include <cctype>

namespace freepairs {

namespace {

constexpr long kMaxExponent = 512;

/**
 * Recursive-descent parser over any exact value type supporting the field
 * operations; Leaf turns integers and identifiers into values.
 */
template <typename T, typename Leaf>
class Parser {
public:
    Parser(const std::string& text, Leaf leaf) : s_(text), leaf_(std::move(leaf)) {}

    T run() {
        T v = expr();
        skip_ws();
        if (pos_ != s_.size()) err("trailing input");
        return v;
    }

private:
    [[noreturn]] void err(const std::string& what) {
        fail(errc::parse_error, what + " at position " + std::to_string(pos_) + " in \"" + s_ + "\"");
    }

    void skip_ws() {
        while (pos_ < s_.size() && std::isspace(static_cast<unsigned char>(s_[pos_]))) ++pos_;
    }

    bool eat(char c) {
        skip_ws();
        if (pos_ < s_.size() && s_[pos_] == c) {
            ++pos_;
            return true;
        }
        return false;
    }

    char peek() {
        skip_ws();
        return pos_ < s_.size() ? s_[pos_] : '\0';
    }

    T expr() {
        T v = term();
        for (;;) {
            if (eat('+')) v = v + term();
            else if (eat('-')) v = v - term();
            else return v;
        }
    }

    T term() {
        T v = factor();
        for (;;) {
            if (eat('*')) v = v * factor();
            else if (eat('/')) v = v / factor();
            else return v;
        }
    }

    T factor() {
        if (eat('-')) return -factor();
        if (eat('+')) return factor();
        T v = atom();
        if (eat('^')) {
            long e = exponent();
            v = v.pow(e);
        }
        return v;
    }

    long exponent() {
        skip_ws();
        bool neg = eat('-');
        skip_ws();
        if (pos_ >= s_.size() || !std::isdigit(static_cast<unsigned char>(s_[pos_]))) err("expected exponent");
        long e = 0;
        while (pos_ < s_.size() && std::isdigit(static_cast<unsigned char>(s_[pos_]))) {
            e = e * 10 + (s_[pos_] - '0');
            if (e > kMaxExponent)
                fail(errc::degree_overflow, "exponent exceeds " + std::to_string(kMaxExponent));
            ++pos_;
        }
        return neg ? -e : e;
    }

    T atom() {
        char c = peek();
        if (c == '(') {
            ++pos_;
            T v = expr();
            if (!eat(')')) err("expected ')'");
            return v;
        }
        if (std::isdigit(static_cast<unsigned char>(c))) {
            Int n = 0;
            while (pos_ < s_.size() && std::isdigit(static_cast<unsigned char>(s_[pos_]))) {
                n = n * 10 + (s_[pos_] - '0');
                ++pos_;
            }
            return leaf_.integer(n);
        }
        if (std::isalpha(static_cast<unsigned char>(c)) || c == '_') {
            std::string name;
            while (pos_ < s_.size() &&
                   (std::isalnum(static_cast<unsigned char>(s_[pos_])) || s_[pos_] == '_')) {
                name += s_[pos_];
                ++pos_;
            }
            return leaf_.ident(name);
        }
        err("unexpected character");
    }

    const std::string& s_;
    size_t pos_ = 0;
    Leaf leaf_;
};

struct RatLeaf {
    BaseField f;
    RatFunc integer(const Int& n) const { return RatFunc::constant(f, Rat(n)); }
    RatFunc ident(const std::string& name) const { return RatFunc::variable(f, name); }
};

struct ExtLeaf {
    ExtDescPtr d;
    ExtElem integer(const Int& n) const {
        return ExtElem::constant(d, RatFunc::constant(d->field(), Rat(n)));
    }
    ExtElem ident(const std::string& name) const {
        if (name == d->gen()) return ExtElem::generator(d);
        return ExtElem::constant(d, RatFunc::variable(d->field(), name));
    }
};

} // namespace

RatFunc parse_ratfunc(const BaseField& f, const std::string& text) {
    return Parser<RatFunc, RatLeaf>(text, RatLeaf{f}).run();
}

ExtElem parse_ext(const ExtDescPtr& d, const std::string& text) {
    return Parser<ExtElem, ExtLeaf>(text, ExtLeaf{d}).run();
}

} // namespace freepairs
