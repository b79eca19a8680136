#include "parse.hpp"

#include <cctype>

namespace hensel {

namespace {

struct Token {
    enum Kind { Int, Ident, Plus, Minus, Star, Caret, LParen, RParen, Comma, End } kind;
    std::string text;
    int line;
    int col;
};

class Lexer {
public:
    Lexer(const std::string& text, int line_offset) : text_(text), line_(1 + line_offset) {}

    Token next() {
        skip_ws();
        int line = line_, col = col_;
        if (pos_ >= text_.size()) return {Token::End, "", line, col};
        char c = text_[pos_];
        if (std::isdigit(static_cast<unsigned char>(c))) {
            size_t start = pos_;
            while (pos_ < text_.size() && std::isdigit(static_cast<unsigned char>(text_[pos_]))) advance();
            return {Token::Int, text_.substr(start, pos_ - start), line, col};
        }
        if (std::isalpha(static_cast<unsigned char>(c)) || c == '_') {
            size_t start = pos_;
            while (pos_ < text_.size() &&
                   (std::isalnum(static_cast<unsigned char>(text_[pos_])) || text_[pos_] == '_'))
                advance();
            return {Token::Ident, text_.substr(start, pos_ - start), line, col};
        }
        advance();
        switch (c) {
            case '+': return {Token::Plus, "+", line, col};
            case '-': return {Token::Minus, "-", line, col};
            case '*': return {Token::Star, "*", line, col};
            case '^': return {Token::Caret, "^", line, col};
            case '(': return {Token::LParen, "(", line, col};
            case ')': return {Token::RParen, ")", line, col};
            case ',': return {Token::Comma, ",", line, col};
        }
        fail(line, col, std::string("unexpected character '") + c + "'");
    }

    [[noreturn]] static void fail(int line, int col, const std::string& msg) {
        raise(errc::parse_error, "line " + std::to_string(line) + ", col " + std::to_string(col) + ": " + msg);
    }

private:
    void skip_ws() {
        while (pos_ < text_.size() && (text_[pos_] == ' ' || text_[pos_] == '\t' || text_[pos_] == '\n' ||
                                       text_[pos_] == '\r'))
            advance();
    }
    void advance() {
        if (text_[pos_] == '\n') {
            ++line_;
            col_ = 1;
        } else {
            ++col_;
        }
        ++pos_;
    }

    const std::string& text_;
    size_t pos_ = 0;
    int line_;
    int col_ = 1;
};

class PolyParser {
public:
    PolyParser(const std::string& text, RingPtr ring, VarsPtr vars, int line_offset)
        : lexer_(text, line_offset), ring_(std::move(ring)), vars_(std::move(vars)) {
        cur_ = lexer_.next();
    }

    MultiPoly parse_expression() {
        MultiPoly acc = parse_term_signed();
        while (cur_.kind == Token::Plus || cur_.kind == Token::Minus) {
            bool neg = cur_.kind == Token::Minus;
            eat();
            MultiPoly t = parse_term();
            acc = neg ? acc - t : acc + t;
        }
        return acc;
    }

    void expect_end() {
        if (cur_.kind != Token::End) Lexer::fail(cur_.line, cur_.col, "unexpected '" + cur_.text + "'");
    }

    // comma-separated expressions until end of input
    std::vector<MultiPoly> parse_list() {
        std::vector<MultiPoly> out;
        out.push_back(parse_expression());
        while (cur_.kind == Token::Comma) {
            eat();
            out.push_back(parse_expression());
        }
        expect_end();
        return out;
    }

private:
    MultiPoly parse_term_signed() {
        if (cur_.kind == Token::Minus) {
            eat();
            return -parse_term();
        }
        return parse_term();
    }

    MultiPoly parse_term() {
        MultiPoly acc = parse_factor();
        while (cur_.kind == Token::Star) {
            eat();
            acc = acc * parse_factor();
        }
        return acc;
    }

    MultiPoly parse_factor() {
        MultiPoly base = parse_atom();
        if (cur_.kind == Token::Caret) {
            eat();
            if (cur_.kind != Token::Int) Lexer::fail(cur_.line, cur_.col, "exponent must be a nonnegative integer");
            long exp = cur_.text.size() > 2 ? 65 : std::stol(cur_.text);
            if (exp > 64) Lexer::fail(cur_.line, cur_.col, "exponent too large (max 64)");
            eat();
            MultiPoly acc = MultiPoly::constant(ring_, vars_, Scalar(ring_, 1));
            for (long i = 0; i < exp; ++i) acc = acc * base;
            return acc;
        }
        return base;
    }

    MultiPoly parse_atom() {
        if (cur_.kind == Token::Int) {
            BigInt v(cur_.text);
            eat();
            return MultiPoly::constant(ring_, vars_, Scalar(ring_, v));
        }
        if (cur_.kind == Token::Ident) {
            std::string name = cur_.text;
            for (size_t i = 0; i < vars_->size(); ++i)
                if ((*vars_)[i] == name) {
                    eat();
                    return MultiPoly::variable(ring_, vars_, int(i));
                }
            if (name == "t" && ring_->backend() == Backend::TruncatedSeries) {
                eat();
                return MultiPoly::constant(ring_, vars_, Scalar(ring_, std::vector<int64_t>{0, 1}));
            }
            Lexer::fail(cur_.line, cur_.col, "undefined variable '" + name + "'");
        }
        if (cur_.kind == Token::LParen) {
            eat();
            MultiPoly inner = parse_expression();
            if (cur_.kind != Token::RParen) Lexer::fail(cur_.line, cur_.col, "expected ')'");
            eat();
            return inner;
        }
        Lexer::fail(cur_.line, cur_.col,
                    cur_.kind == Token::End ? "unexpected end of expression" : "unexpected '" + cur_.text + "'");
    }

    void eat() { cur_ = lexer_.next(); }

    Lexer lexer_;
    RingPtr ring_;
    VarsPtr vars_;
    Token cur_;
};

VarsPtr no_vars() {
    static VarsPtr empty = std::make_shared<std::vector<std::string>>();
    return empty;
}

} // namespace

MultiPoly parse_poly(const std::string& text, const RingPtr& ring, const VarsPtr& vars, int line_offset) {
    PolyParser parser(text, ring, vars, line_offset);
    MultiPoly p = parser.parse_expression();
    parser.expect_end();
    return p;
}

Scalar parse_scalar(const std::string& text, const RingPtr& ring, int line_offset) {
    return parse_poly(text, ring, no_vars(), line_offset).constant_term();
}

std::vector<Scalar> parse_scalar_vector(const std::string& text, const RingPtr& ring, int line_offset) {
    PolyParser parser(text, ring, no_vars(), line_offset);
    std::vector<Scalar> out;
    for (const auto& p : parser.parse_list()) out.push_back(p.constant_term());
    return out;
}

std::vector<Elem> parse_element_vector(const std::string& text, const RingPtr& ring) {
    std::vector<Elem> out;
    for (const auto& s : parse_scalar_vector(text, ring)) out.push_back(Elem::from_scalar(s));
    return out;
}

} // namespace hensel
