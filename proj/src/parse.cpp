#include "reduct/parse.hpp"

#include <cctype>
#include <optional>

namespace reduct {

namespace {

constexpr long kMaxExponent = 1000000;

enum class Tok { number, variable, plus, minus, star, caret, slash, lparen, rparen, end };

struct Token {
    Tok kind;
    std::string text;
    SourceSpan span;
};

struct Lexer {
    std::string_view src;
    std::size_t pos = 0;
    std::size_t base = 0;  // offset of src within the enclosing document

    std::optional<ParseError> err;

    Token next() {
        while (pos < src.size() && (src[pos] == ' ' || src[pos] == '\t' || src[pos] == '\r')) ++pos;
        std::size_t start = pos;
        auto span = [&](std::size_t e) { return SourceSpan{base + start, base + e}; };
        if (pos >= src.size()) return {Tok::end, "", span(pos)};
        char c = src[pos];
        if (std::isdigit(static_cast<unsigned char>(c))) {
            while (pos < src.size() && std::isdigit(static_cast<unsigned char>(src[pos]))) ++pos;
            return {Tok::number, std::string(src.substr(start, pos - start)), span(pos)};
        }
        if (c >= 'a' && c <= 'z') {
            ++pos;
            while (pos < src.size() &&
                   ((src[pos] >= 'a' && src[pos] <= 'z') || std::isdigit(static_cast<unsigned char>(src[pos]))))
                ++pos;
            return {Tok::variable, std::string(src.substr(start, pos - start)), span(pos)};
        }
        ++pos;
        switch (c) {
            case '+': return {Tok::plus, "+", span(pos)};
            case '-': return {Tok::minus, "-", span(pos)};
            case '*': return {Tok::star, "*", span(pos)};
            case '^': return {Tok::caret, "^", span(pos)};
            case '/': return {Tok::slash, "/", span(pos)};
            case '(': return {Tok::lparen, "(", span(pos)};
            case ')': return {Tok::rparen, ")", span(pos)};
            default:
                err = ParseError{std::string("illegal character '") + c + "'", span(pos), ParseErrorKind::lex};
                return {Tok::end, "", span(pos)};
        }
    }
};

class Parser {
  public:
    Parser(std::string_view text, std::size_t base) : lex_{text, 0, base, {}} { advance(); }

    std::variant<MPoly, ParseError> run() {
        MPoly p = expr();
        if (!error_ && cur_.kind != Tok::end) fail("unexpected token after expression", cur_.span);
        if (error_) return *error_;
        return p;
    }

  private:
    void advance() {
        cur_ = lex_.next();
        if (lex_.err && !error_) error_ = lex_.err;
    }

    void fail(const std::string& msg, SourceSpan span, ParseErrorKind kind = ParseErrorKind::syntax) {
        if (!error_) error_ = ParseError{msg, span, kind};
    }

    MPoly expr() {
        MPoly acc = term();
        while (!error_ && (cur_.kind == Tok::plus || cur_.kind == Tok::minus)) {
            bool minus = cur_.kind == Tok::minus;
            advance();
            MPoly rhs = term();
            if (minus)
                acc -= rhs;
            else
                acc += rhs;
        }
        return acc;
    }

    MPoly term() {
        MPoly acc = factor();
        while (!error_ && cur_.kind == Tok::star) {
            advance();
            acc *= factor();
        }
        return acc;
    }

    MPoly factor() {
        if (error_) return MPoly();
        if (cur_.kind == Tok::minus) {
            advance();
            return -factor();
        }
        MPoly base = atom();
        if (!error_ && cur_.kind == Tok::caret) {
            advance();
            if (cur_.kind != Tok::number) {
                fail("exponent must be a nonnegative integer literal", cur_.span);
                return MPoly();
            }
            Int e(cur_.text);
            if (e > kMaxExponent) {
                fail("exponent exceeds the 10^6 guard", cur_.span, ParseErrorKind::overflow);
                return MPoly();
            }
            advance();
            return base.pow(e.convert_to<unsigned long>());
        }
        return base;
    }

    MPoly atom() {
        if (error_) return MPoly();
        switch (cur_.kind) {
            case Tok::number: {
                Int num(cur_.text);
                SourceSpan sp = cur_.span;
                advance();
                if (cur_.kind == Tok::slash) {
                    advance();
                    if (cur_.kind != Tok::number) {
                        fail("expected integer denominator", cur_.span);
                        return MPoly();
                    }
                    Int den(cur_.text);
                    if (den == 0) {
                        fail("zero denominator in literal", cur_.span);
                        return MPoly();
                    }
                    advance();
                    return MPoly(Rat(num, den));
                }
                (void)sp;
                return MPoly(Rat(num));
            }
            case Tok::variable: {
                MPoly v = MPoly::var(cur_.text);
                advance();
                return v;
            }
            case Tok::lparen: {
                advance();
                MPoly inner = expr();
                if (!error_ && cur_.kind != Tok::rparen) {
                    fail("expected ')'", cur_.span);
                    return MPoly();
                }
                advance();
                return inner;
            }
            default:
                fail("expected a variable, literal, or '('", cur_.span);
                return MPoly();
        }
    }

    Lexer lex_;
    Token cur_;
    std::optional<ParseError> error_;
};

}  // namespace

std::variant<MPoly, ParseError> parse_poly(std::string_view text) { return Parser(text, 0).run(); }

std::variant<std::vector<MPoly>, ParseError> parse_collection(std::string_view text) {
    std::vector<MPoly> out;
    std::size_t pos = 0;
    int line_no = 0;
    while (pos <= text.size()) {
        std::size_t eol = text.find('\n', pos);
        std::size_t len = (eol == std::string_view::npos ? text.size() : eol) - pos;
        std::string_view line = text.substr(pos, len);
        ++line_no;

        std::size_t hash = line.find('#');
        if (hash != std::string_view::npos) line = line.substr(0, hash);
        bool blank = true;
        for (char c : line)
            if (c != ' ' && c != '\t' && c != '\r') blank = false;
        if (!blank) {
            auto r = Parser(line, pos).run();
            if (auto* err = std::get_if<ParseError>(&r)) {
                err->message = "line " + std::to_string(line_no) + ": " + err->message;
                return *err;
            }
            out.push_back(std::get<MPoly>(std::move(r)));
        }
        if (eol == std::string_view::npos) break;
        pos = eol + 1;
    }
    return out;
}

std::string render(const MPoly& p) { return p.str(); }

}  // namespace reduct
