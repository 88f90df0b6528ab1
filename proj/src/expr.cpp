#include "contactgeo/expr.hpp"

#include "contactgeo/errors.hpp"

#include <cctype>
#include <string>

namespace contactgeo {

namespace {

class Parser {
public:
    Parser(std::string_view text, const VarsPtr& vars) : text_(text), vars_(vars) {}

    RationalFunction parse() {
        RationalFunction r = expression();
        skip_space();
        if (pos_ != text_.size()) fail("unexpected trailing input");
        return r;
    }

private:
    std::string_view text_;
    const VarsPtr& vars_;
    size_t pos_ = 0;

    [[noreturn]] void fail(const std::string& msg) const {
        throw ParseError(msg + " at position " + std::to_string(pos_) + " in '" +
                         std::string(text_) + "'");
    }

    void skip_space() {
        while (pos_ < text_.size() && std::isspace(static_cast<unsigned char>(text_[pos_]))) ++pos_;
    }

    bool eat(char c) {
        skip_space();
        if (pos_ < text_.size() && text_[pos_] == c) {
            ++pos_;
            return true;
        }
        return false;
    }

    char peek() {
        skip_space();
        return pos_ < text_.size() ? text_[pos_] : '\0';
    }

    // expression := term (('+' | '-') term)*
    RationalFunction expression() {
        RationalFunction r = term();
        while (true) {
            if (eat('+'))
                r = r + term();
            else if (eat('-'))
                r = r - term();
            else
                return r;
        }
    }

    // term := factor (('*' | '/') factor)*
    RationalFunction term() {
        RationalFunction r = factor();
        while (true) {
            if (eat('*')) {
                r = r * factor();
            } else if (eat('/')) {
                RationalFunction d = factor();
                if (d.is_zero()) throw DivisionByZero("division by zero in expression");
                r = r / d;
            } else {
                return r;
            }
        }
    }

    // factor := ('-' | '+')* power
    RationalFunction factor() {
        if (eat('-')) return -factor();
        if (eat('+')) return factor();
        return power();
    }

    // power := atom ('^' exponent)?
    RationalFunction power() {
        RationalFunction base = atom();
        if (eat('^')) {
            skip_space();
            size_t start = pos_;
            while (pos_ < text_.size() && std::isdigit(static_cast<unsigned char>(text_[pos_])))
                ++pos_;
            if (pos_ == start) fail("expected a non-negative integer exponent");
            unsigned long exp = 0;
            for (size_t i = start; i < pos_; ++i) {
                exp = exp * 10 + static_cast<unsigned long>(text_[i] - '0');
                if (exp > 1000000) fail("exponent too large");
            }
            return base.pow(static_cast<long>(exp));
        }
        return base;
    }

    RationalFunction atom() {
        skip_space();
        if (pos_ >= text_.size()) fail("unexpected end of expression");
        char c = text_[pos_];
        if (c == '(') {
            ++pos_;
            RationalFunction r = expression();
            if (!eat(')')) fail("expected ')'");
            return r;
        }
        if (std::isdigit(static_cast<unsigned char>(c))) return integer_literal();
        if (std::isalpha(static_cast<unsigned char>(c)) || c == '_') return identifier();
        fail(std::string("unexpected character '") + c + "'");
    }

    RationalFunction integer_literal() {
        size_t start = pos_;
        while (pos_ < text_.size() && std::isdigit(static_cast<unsigned char>(text_[pos_]))) ++pos_;
        if (pos_ < text_.size() && text_[pos_] == '.')
            fail("floating point literals are not part of the grammar");
        BigInt v = BigInt::from_decimal(text_.substr(start, pos_ - start));
        return RationalFunction::constant(vars_, Rational(std::move(v), BigInt(1)));
    }

    RationalFunction identifier() {
        size_t start = pos_;
        while (pos_ < text_.size() &&
               (std::isalnum(static_cast<unsigned char>(text_[pos_])) || text_[pos_] == '_'))
            ++pos_;
        std::string name(text_.substr(start, pos_ - start));
        skip_space();
        if (pos_ < text_.size() && text_[pos_] == '(')
            fail("function calls are not part of the grammar");
        for (size_t i = 0; i < vars_->size(); ++i) {
            if ((*vars_)[i] == name) return RationalFunction::variable(vars_, i);
        }
        throw UnknownVariable(name);
    }
};

} // namespace

RationalFunction parse_expression(std::string_view text, const VarsPtr& vars) {
    return Parser(text, vars).parse();
}

} // namespace contactgeo
