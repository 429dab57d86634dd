#include "ringlab/ringspec.hpp"

#include <sstream>

namespace ringlab {

namespace {

class Parser {
public:
    explicit Parser(std::string_view text) : tokens_(tokenize(text)) {}

    RingExpr parse()
    {
        auto e = expr();
        if (peek().kind != TokenKind::End)
            fail({"'x'", "end of input"});
        return e;
    }

private:
    const Token& peek() const { return tokens_[pos_]; }
    const Token& advance() { return tokens_[pos_++]; }

    bool at(std::string_view text) const
    {
        const auto& t = peek();
        return t.kind != TokenKind::End && t.kind != TokenKind::Integer && t.text == text;
    }

    bool at_product() const
    {
        const auto& t = peek();
        return (t.kind == TokenKind::Identifier && t.text == "x") ||
               (t.kind == TokenKind::Symbol && t.text == "\xC3\x97");
    }

    static std::string describe(const Token& t)
    {
        return t.kind == TokenKind::End ? "end of input" : "'" + t.text + "'";
    }

    [[noreturn]] void fail(std::vector<std::string> expected) const
    {
        const auto& t = peek();
        std::ostringstream msg;
        msg << "expected ";
        for (std::size_t i = 0; i < expected.size(); ++i)
            msg << (i ? (i + 1 == expected.size() ? " or " : ", ") : "") << expected[i];
        msg << ", found " << describe(t);
        throw ParseError(t.begin, std::move(expected), describe(t), msg.str());
    }

    void expect(std::string_view text)
    {
        if (!at(text))
            fail({"'" + std::string(text) + "'"});
        advance();
    }

    std::uint64_t integer(bool positive)
    {
        const auto& t = peek();
        if (t.kind != TokenKind::Integer)
            fail({positive ? "positive integer" : "integer"});
        std::uint64_t v = 0;
        for (char c : t.text) {
            v = v * 10 + static_cast<std::uint64_t>(c - '0');
            if (v > kMaxLiteral)
                throw ParseError(t.begin, {"integer <= " + std::to_string(kMaxLiteral)}, describe(t),
                                 "integer " + t.text + " is too large");
        }
        if (positive && v == 0)
            throw ParseError(t.begin, {"positive integer"}, describe(t), "expected positive integer, found 0");
        advance();
        return v;
    }

    struct DepthGuard {
        Parser& p;
        explicit DepthGuard(Parser& parser) : p(parser)
        {
            if (++p.depth_ > kMaxNesting)
                throw ParseError(p.peek().begin, {}, describe(p.peek()), "expression nested too deeply");
        }
        ~DepthGuard() { --p.depth_; }
    };

    RingExpr expr()
    {
        DepthGuard guard(*this);
        auto first = term();
        if (!at_product())
            return first;
        std::vector<RingExpr> factors;
        factors.push_back(std::move(first));
        while (at_product()) {
            advance();
            factors.push_back(term());
        }
        return RingExpr::product(std::move(factors));
    }

    RingExpr term()
    {
        auto e = primary();
        for (;;) {
            if (at("[")) {
                advance();
                e = bracket_postfix(std::move(e));
            } else if (at("/")) {
                advance();
                expect("(");
                std::vector<std::uint64_t> gens;
                if (!at(")")) {
                    gens.push_back(integer(false));
                    while (at(",")) {
                        advance();
                        gens.push_back(integer(false));
                    }
                }
                expect(")");
                e = RingExpr::quotient(std::move(e), std::move(gens));
            } else {
                return e;
            }
        }
    }

    RingExpr bracket_postfix(RingExpr inner)
    {
        const auto& t = peek();
        if (t.kind == TokenKind::Identifier && t.text == "x") {
            advance();
            expect("]");
            expect("/");
            expect("x");
            expect("^");
            auto k = integer(true);
            return RingExpr::trunc_poly(std::move(inner), k);
        }
        if (t.kind == TokenKind::Identifier && t.text == "C") {
            advance();
            GroupRef g;
            g.kind = GroupRef::Kind::Cyclic;
            g.order = integer(true);
            expect("]");
            return RingExpr::group_ring(std::move(inner), std::move(g));
        }
        if (t.kind == TokenKind::Identifier && t.text.size() > 1 && t.text.front() == '@') {
            GroupRef g;
            g.kind = GroupRef::Kind::File;
            g.path = t.text.substr(1);
            advance();
            expect("]");
            return RingExpr::group_ring(std::move(inner), std::move(g));
        }
        fail({"'C'", "'@path'", "'x'"});
    }

    RingExpr primary()
    {
        const auto& t = peek();
        if (at("(")) {
            DepthGuard guard(*this);
            advance();
            auto e = expr();
            expect(")");
            return e;
        }
        if (t.kind == TokenKind::Identifier) {
            if (t.text == "Z") {
                advance();
                return RingExpr::zmod(integer(true));
            }
            if (t.text == "M" || t.text == "T") {
                bool tri = t.text == "T";
                advance();
                auto n = integer(true);
                expect("(");
                auto inner = expr();
                expect(")");
                if (!tri)
                    return RingExpr::matrix(n, std::move(inner));
                auto shape = TriShape::Lower;
                if (at("^")) {
                    advance();
                    if (at("upper"))
                        shape = TriShape::Upper;
                    else if (!at("lower"))
                        fail({"'upper'", "'lower'"});
                    advance();
                }
                return RingExpr::triangular(n, std::move(inner), shape);
            }
            if (t.text == "corner") {
                advance();
                expect("(");
                auto inner = expr();
                expect(",");
                auto idx = integer(false);
                expect(")");
                return RingExpr::corner(std::move(inner), idx);
            }
        }
        fail({"'Z'", "'M'", "'T'", "'corner'", "'('"});
    }

    std::vector<Token> tokens_;
    std::size_t pos_ = 0;
    std::size_t depth_ = 0;
};

std::string print_postfix_operand(const RingExpr& e)
{
    auto s = print_expr(e);
    return e.kind == ExprKind::Product ? "(" + s + ")" : s;
}

} // namespace

RingExpr parse_ring(std::string_view text)
{
    return Parser(text).parse();
}

std::string print_expr(const RingExpr& e)
{
    std::ostringstream os;
    switch (e.kind) {
    case ExprKind::ZMod:
        os << 'Z' << e.n;
        break;
    case ExprKind::Product:
        for (std::size_t i = 0; i < e.children.size(); ++i) {
            if (i)
                os << " x ";
            os << print_postfix_operand(e.children[i]);
        }
        break;
    case ExprKind::Matrix:
        os << 'M' << e.n << '(' << print_expr(e.inner()) << ')';
        break;
    case ExprKind::Triangular:
        os << 'T' << e.n << '(' << print_expr(e.inner()) << ')';
        if (e.shape == TriShape::Upper)
            os << "^upper";
        break;
    case ExprKind::GroupRing:
        os << print_postfix_operand(e.inner()) << '[';
        if (e.group.kind == GroupRef::Kind::Cyclic)
            os << 'C' << e.group.order;
        else
            os << '@' << e.group.path;
        os << ']';
        break;
    case ExprKind::TruncPoly:
        os << print_postfix_operand(e.inner()) << "[x]/x^" << e.n;
        break;
    case ExprKind::Corner:
        os << "corner(" << print_expr(e.inner()) << "," << e.index << ')';
        break;
    case ExprKind::Quotient:
        os << print_postfix_operand(e.inner()) << "/(";
        for (std::size_t i = 0; i < e.generators.size(); ++i)
            os << (i ? "," : "") << e.generators[i];
        os << ')';
        break;
    }
    return os.str();
}

} // namespace ringlab
