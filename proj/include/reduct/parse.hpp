#pragma once

#include "reduct/mpoly.hpp"

#include <string>
#include <string_view>
#include <variant>
#include <vector>

namespace reduct {

struct SourceSpan {
    std::size_t start = 0;
    std::size_t end = 0;
};

enum class ParseErrorKind { lex, syntax, overflow };

struct ParseError {
    std::string message;
    SourceSpan span;
    ParseErrorKind kind = ParseErrorKind::syntax;
};

// Grammar, loosest to tightest: sums of terms, terms are factors joined by
// an explicit '*', '^' takes a bare nonnegative integer exponent. Variables
// are [a-z][a-z0-9]*, literals are integers or integer fractions "a/b".
// Juxtaposition is not multiplication; exponents above 10^6 are rejected.
std::variant<MPoly, ParseError> parse_poly(std::string_view text);

// One polynomial per non-empty line; '#' starts a comment. Order preserved,
// duplicates kept. The first failing line is reported with its line number.
std::variant<std::vector<MPoly>, ParseError> parse_collection(std::string_view text);

// Canonical text form; parse_poly(render(p)) == p.
std::string render(const MPoly& p);

}  // namespace reduct
