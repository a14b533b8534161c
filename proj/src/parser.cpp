#include "crf/parser.hpp"

#include <algorithm>
#include <cctype>

namespace crf {

namespace {

class ExpressionParser {
  public:
    ExpressionParser(const std::string& text, const VariableList& variables)
        : text_(text), variables_(variables) {}

    RationalFunction parse() {
        RationalFunction result = expr();
        skip_space();
        if (pos_ != text_.size()) fail("unexpected '" + std::string(1, text_[pos_]) + "'");
        return result;
    }

  private:
    [[noreturn]] void fail(const std::string& message) const { throw ParseError(message, pos_); }

    void skip_space() {
        while (pos_ < text_.size() && std::isspace(static_cast<unsigned char>(text_[pos_]))) ++pos_;
    }

    bool accept(char c) {
        skip_space();
        if (pos_ < text_.size() && text_[pos_] == c) {
            ++pos_;
            return true;
        }
        return false;
    }

    RationalFunction constant(const Rational& c) const { return Polynomial::constant(c, variables_); }

    RationalFunction expr() {
        RationalFunction lhs = term();
        while (true) {
            if (accept('+'))
                lhs = lhs + term();
            else if (accept('-'))
                lhs = lhs - term();
            else
                return lhs;
        }
    }

    RationalFunction term() {
        RationalFunction lhs = unary();
        while (true) {
            if (accept('*')) {
                lhs = lhs * unary();
            } else if (accept('/')) {
                std::size_t at = pos_;
                RationalFunction rhs = unary();
                if (rhs.is_zero()) throw ParseError("division by zero", at);
                lhs = lhs / rhs;
            } else {
                return lhs;
            }
        }
    }

    RationalFunction unary() {
        if (accept('-')) return -unary();
        if (accept('+')) return unary();
        return power();
    }

    RationalFunction power() {
        RationalFunction base = primary();
        if (!accept('^')) return base;
        skip_space();
        if (pos_ >= text_.size() || !std::isdigit(static_cast<unsigned char>(text_[pos_])))
            fail("expected a non-negative integer exponent");
        mpz_class e = integer_literal();
        if (e > 4096) fail("exponent too large");
        return base.pow(static_cast<unsigned>(e.get_ui()));
    }

    mpz_class integer_literal() {
        std::size_t start = pos_;
        while (pos_ < text_.size() && std::isdigit(static_cast<unsigned char>(text_[pos_]))) ++pos_;
        return mpz_class(text_.substr(start, pos_ - start), 10);
    }

    RationalFunction primary() {
        skip_space();
        if (pos_ >= text_.size()) fail("unexpected end of input");
        char c = text_[pos_];
        if (c == '(') {
            ++pos_;
            RationalFunction inner = expr();
            if (!accept(')')) fail("expected ')'");
            return inner;
        }
        if (std::isdigit(static_cast<unsigned char>(c))) return constant(Rational(integer_literal()));
        if (std::isalpha(static_cast<unsigned char>(c)) || c == '_') {
            std::size_t start = pos_;
            while (pos_ < text_.size() &&
                   (std::isalnum(static_cast<unsigned char>(text_[pos_])) || text_[pos_] == '_'))
                ++pos_;
            std::string name = text_.substr(start, pos_ - start);
            if (std::find(variables_.begin(), variables_.end(), name) == variables_.end())
                throw ParseError("undeclared variable '" + name + "'", start);
            return Polynomial::variable(name, variables_);
        }
        fail("unexpected '" + std::string(1, c) + "'");
    }

    const std::string& text_;
    const VariableList& variables_;
    std::size_t pos_ = 0;
};

std::string trim(const std::string& s) {
    auto begin = s.find_first_not_of(" \t\r\n");
    if (begin == std::string::npos) return "";
    auto end = s.find_last_not_of(" \t\r\n");
    return s.substr(begin, end - begin + 1);
}

} // namespace

RationalFunction parse_expression(const std::string& text, const VariableList& variables) {
    for (unsigned char c : text)
        if (c >= 0x80) throw ParseError("non-ASCII input", 0);
    return ExpressionParser(text, variables).parse();
}

Polynomial parse_polynomial(const std::string& text, const VariableList& variables) {
    RationalFunction f = parse_expression(text, variables);
    if (!f.is_polynomial())
        throw MathError(ErrorCode::InvalidArgument, "expected a polynomial, got " + f.to_string());
    return f.num();
}

std::vector<std::string> split_top_level(const std::string& text, char sep) {
    std::vector<std::string> out;
    int depth = 0;
    std::string current;
    for (char c : text) {
        if (c == '(') ++depth;
        if (c == ')') --depth;
        if (c == sep && depth == 0) {
            out.push_back(trim(current));
            current.clear();
        } else {
            current += c;
        }
    }
    out.push_back(trim(current));
    return out;
}

Curve parse_curve(const std::string& text, const std::string& parameter) {
    std::string body = trim(text);
    if (body.size() < 2 || body.front() != '(' || body.back() != ')')
        throw ParseError("curve must be written as (expr, ..., expr)", 0);
    std::vector<RationalFunction> components;
    for (const auto& part : split_top_level(body.substr(1, body.size() - 2), ','))
        components.push_back(parse_expression(part, {parameter}));
    return Curve(std::move(components), parameter);
}

std::vector<Rational> parse_point(const std::string& text) {
    std::vector<Rational> out;
    if (trim(text).empty()) return out;
    for (const auto& part : split_top_level(text, ',')) out.push_back(Rational::from_string(part));
    return out;
}

VariableList parse_variable_list(const std::string& text) {
    VariableList out;
    for (const auto& part : split_top_level(text, ',')) {
        if (part.empty()) throw MathError(ErrorCode::InvalidArgument, "empty variable name in '" + text + "'");
        out.push_back(part);
    }
    return Polynomial(out).variables();
}

} // namespace crf
