#pragma once

#include <cctype>
#include <cstdint>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "multiseq/polynomial.hpp"

namespace multiseq {

namespace detail {

struct PolyToken {
    enum class Kind { integer, ident, plus, minus, star, caret, lparen, rparen, end };
    Kind kind;
    std::string text;
    int line;
    int column;
};

class PolyLexer {
public:
    PolyLexer(const std::string& text, int line0, int col0)
        : text_(text), line_(line0), col_(col0) {}

    PolyToken next() {
        skip_space();
        const int line = line_, col = col_;
        if (pos_ >= text_.size()) return {PolyToken::Kind::end, "", line, col};
        char c = text_[pos_];
        if (c >= '0' && c <= '9') {
            std::string lit;
            while (pos_ < text_.size() && text_[pos_] >= '0' && text_[pos_] <= '9') {
                lit += text_[pos_];
                advance();
            }
            return {PolyToken::Kind::integer, lit, line, col};
        }
        if ((c >= 'a' && c <= 'z') || (c >= 'A' && c <= 'Z') || c == '_') {
            std::string name;
            while (pos_ < text_.size() &&
                   (std::isalnum(static_cast<unsigned char>(text_[pos_])) || text_[pos_] == '_')) {
                name += text_[pos_];
                advance();
            }
            return {PolyToken::Kind::ident, name, line, col};
        }
        advance();
        switch (c) {
            case '+': return {PolyToken::Kind::plus, "+", line, col};
            case '-': return {PolyToken::Kind::minus, "-", line, col};
            case '*': return {PolyToken::Kind::star, "*", line, col};
            case '^': return {PolyToken::Kind::caret, "^", line, col};
            case '(': return {PolyToken::Kind::lparen, "(", line, col};
            case ')': return {PolyToken::Kind::rparen, ")", line, col};
            default:
                throw parse_error(std::string("unexpected character '") + c + "' at " +
                                      std::to_string(line) + ":" + std::to_string(col),
                                  line, col);
        }
    }

private:
    void advance() {
        if (text_[pos_] == '\n') {
            ++line_;
            col_ = 1;
        } else {
            ++col_;
        }
        ++pos_;
    }
    void skip_space() {
        while (pos_ < text_.size() && (text_[pos_] == ' ' || text_[pos_] == '\t' ||
                                       text_[pos_] == '\r' || text_[pos_] == '\n'))
            advance();
    }
    const std::string& text_;
    std::size_t pos_ = 0;
    int line_;
    int col_;
};

[[noreturn]] inline void fail_at(const std::string& msg, const PolyToken& tok) {
    throw parse_error(msg + " at " + std::to_string(tok.line) + ":" + std::to_string(tok.column),
                      tok.line, tok.column);
}

}  // namespace detail

/// Recursive-descent parser for the polynomial grammar: integer literals,
/// declared variable names, + - * ^ ( ); juxtaposition is not multiplication
/// (an explicit * is required); exponents are nonnegative integer literals.
/// Errors carry 1-based line:column positions (offset by the origin).
template <coefficient_field C>
class PolynomialParser {
public:
    PolynomialParser(const std::string& text, RingPtr ring, int line0 = 1, int col0 = 1)
        : lexer_(text, line0, col0), ring_(std::move(ring)) {
        current_ = lexer_.next();
    }

    Polynomial<C> parse() {
        Polynomial<C> f = expression();
        if (current_.kind != detail::PolyToken::Kind::end)
            detail::fail_at("unexpected token '" + current_.text + "'", current_);
        return f;
    }

private:
    using Kind = detail::PolyToken::Kind;

    void consume() { current_ = lexer_.next(); }

    Polynomial<C> expression() {
        bool negate = false;
        if (current_.kind == Kind::minus) {
            negate = true;
            consume();
        } else if (current_.kind == Kind::plus) {
            consume();
        }
        Polynomial<C> acc = term();
        if (negate) acc = -acc;
        while (current_.kind == Kind::plus || current_.kind == Kind::minus) {
            bool minus = current_.kind == Kind::minus;
            consume();
            Polynomial<C> t = term();
            acc = minus ? acc - t : acc + t;
        }
        return acc;
    }

    Polynomial<C> term() {
        Polynomial<C> acc = factor();
        while (current_.kind == Kind::star) {
            consume();
            acc = acc * factor();
        }
        return acc;
    }

    Polynomial<C> factor() {
        Polynomial<C> base = atom();
        if (current_.kind == Kind::caret) {
            auto caret = current_;
            consume();
            if (current_.kind != Kind::integer) {
                if (current_.kind == Kind::ident || current_.kind == Kind::lparen ||
                    current_.kind == Kind::minus)
                    detail::fail_at("nonconstant exponent", current_);
                detail::fail_at("expected integer exponent after '^'", caret);
            }
            unsigned long e = 0;
            for (char c : current_.text) {
                e = e * 10 + static_cast<unsigned long>(c - '0');
                if (e > 60000) detail::fail_at("exponent too large", current_);
            }
            consume();
            Polynomial<C> pow = Polynomial<C>::from_int(ring_, 1);
            for (unsigned long k = 0; k < e; ++k) pow = pow * base;
            return pow;
        }
        return base;
    }

    Polynomial<C> atom() {
        switch (current_.kind) {
            case Kind::integer: {
                mpz_class z(current_.text, 10);
                consume();
                return Polynomial<C>::constant(ring_, C::from_integer(z, ring_->field()));
            }
            case Kind::ident: {
                int idx = ring_->variable_index(current_.text);
                if (idx < 0) detail::fail_at("unknown variable " + current_.text, current_);
                consume();
                return Polynomial<C>::variable(ring_, idx);
            }
            case Kind::lparen: {
                consume();
                Polynomial<C> inner = expression();
                if (current_.kind != Kind::rparen) detail::fail_at("expected ')'", current_);
                consume();
                return inner;
            }
            case Kind::end:
                detail::fail_at("unexpected end of input", current_);
            default:
                detail::fail_at("unexpected token '" + current_.text + "'", current_);
        }
    }

    detail::PolyLexer lexer_;
    detail::PolyToken current_;
    RingPtr ring_;
};

template <coefficient_field C>
Polynomial<C> parse_polynomial(const std::string& text, const RingPtr& ring, int line0 = 1,
                               int col0 = 1) {
    return PolynomialParser<C>(text, ring, line0, col0).parse();
}

/// One self-contained problem per file: the field, the ambient variables, an
/// optional quotient ideal, labeled ideals as polynomial strings, the task,
/// and options. The tool is a pure function from this value to a report.
struct TaskSpec {
    std::string name;
    std::vector<std::string> args;
};

struct ProblemOptions {
    std::uint64_t seed = 0;
    int seeds = 3;
    char route = 'B';
    int max_n = 6;
    int grid_start = 6;
    int grid_cap = 24;
    int grid_stride = 0;
    std::optional<bool> oracle;  // unset: per-task default
    bool equidimensional = false;
    bool join = false;
};

/// A polynomial string with its position in the source file, so that
/// parse errors point at the file, not the substring.
struct SourcedText {
    std::string text;
    int line = 1;
    int column = 1;

    bool operator==(const SourcedText&) const = default;
};

struct ProblemFile {
    unsigned long characteristic = kDefaultPrime;
    std::vector<std::string> variables;
    std::vector<SourcedText> quotient;
    std::vector<std::pair<std::string, std::vector<SourcedText>>> ideals;
    TaskSpec task;
    ProblemOptions options;

    const std::vector<SourcedText>* find_ideal(const std::string& label) const {
        for (const auto& [name, gens] : ideals)
            if (name == label) return &gens;
        return nullptr;
    }
};

/// Parse a problem file (UTF-8 text format, or JSON when the first
/// non-space byte is '{').
ProblemFile parse_problem_file(const std::string& text);

/// Canonical text rendering; parse(print(f)) == f for any parsed f.
std::string print_problem_file(const ProblemFile& file);

}  // namespace multiseq
