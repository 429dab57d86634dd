#pragma once

/**
 * @file ringspec.hpp
 * @brief Text syntax for ring constructions and element literals.
 *
 * Grammar (whitespace-insensitive):
 *
 *     expr    := term (('x' | '×') term)*
 *     term    := primary postfix*
 *     primary := 'Z' int
 *              | 'M' int '(' expr ')'
 *              | 'T' int '(' expr ')' ['^upper' | '^lower']
 *              | 'corner' '(' expr ',' int ')'
 *              | '(' expr ')'
 *     postfix := '[' group ']'            group ring
 *              | '[' 'x' ']' '/' 'x' '^' int   R[x]/(x^k)
 *              | '/' '(' [int (',' int)*] ')'  quotient by the generated ideal
 *     group   := 'C' int | '@' path
 *
 * Indices in corner(...) and quotients are raw element indices of the inner
 * ring. A '@' group names a Cayley-table file: the group order m, then m rows
 * of m entries, '#' comments allowed.
 *
 * Element literals: an integer is a raw index in any ring; '(a,b,...)' gives
 * components of a product, group ring or truncated polynomial ring;
 * '[[a,b],[c,d]]' is a matrix; '{a}' is the coset of a in a quotient; '<a>'
 * is the inner element a of a corner ring. Components nest.
 */

#include <cstddef>
#include <string>
#include <string_view>
#include <vector>

#include "ringlab/expr.hpp"
#include "ringlab/ring.hpp"

namespace ringlab {

enum class TokenKind { Identifier, Integer, Symbol, End };

struct Token {
    TokenKind kind = TokenKind::End;
    std::string text;
    std::size_t begin = 0;
    std::size_t end = 0;
};

/// Splits text into tokens. Letters form single-letter identifiers except for
/// the words corner, upper and lower. Throws ParseError on a stray character.
std::vector<Token> tokenize(std::string_view text);

class ParseError : public std::runtime_error {
public:
    ParseError(std::size_t position, std::vector<std::string> expected, std::string found,
               std::string message);

    std::size_t position() const { return position_; }
    const std::vector<std::string>& expected() const { return expected_; }
    const std::string& found() const { return found_; }

private:
    std::size_t position_;
    std::vector<std::string> expected_;
    std::string found_;
};

/// Integers above this are rejected by the parser.
inline constexpr std::uint64_t kMaxLiteral = 1'000'000'000;
inline constexpr std::size_t kMaxNesting = 200;

RingExpr parse_ring(std::string_view text);
std::string print_expr(const RingExpr& expr);

/// Builds the ring, checking corner and quotient arguments and the size cap.
/// Errors are RingError with the failing sub-expression in the message.
FiniteRing elaborate(const RingExpr& expr, std::size_t size_cap = kDefaultSizeCap);
FiniteRing elaborate(std::string_view text, std::size_t size_cap = kDefaultSizeCap);

GroupSpec parse_cayley_table(std::string_view text, GroupRef source);
GroupSpec load_cayley_file(const std::string& path);

Elem parse_element(const FiniteRing& ring, std::string_view text);

} // namespace ringlab
