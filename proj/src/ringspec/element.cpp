#include "ringlab/ringspec.hpp"

#include <memory>

namespace ringlab {

namespace {

struct Literal {
    enum class Kind { Integer, Tuple, Matrix, Coset, Corner };
    Kind kind = Kind::Integer;
    std::uint64_t value = 0;
    std::size_t position = 0;
    std::vector<Literal> items; // tuple/matrix entries; matrix rows are tuples
};

class LiteralParser {
public:
    explicit LiteralParser(std::string_view text) : text_(text) {}

    Literal parse()
    {
        auto lit = literal(0);
        skip_space();
        if (pos_ != text_.size())
            fail("end of input");
        return lit;
    }

private:
    void skip_space()
    {
        while (pos_ < text_.size() && (text_[pos_] == ' ' || text_[pos_] == '\t'))
            ++pos_;
    }

    [[noreturn]] void fail(const std::string& expected) const
    {
        std::string found = pos_ < text_.size() ? "'" + std::string(1, text_[pos_]) + "'" : "end of input";
        throw ParseError(pos_, {expected}, found, "element literal: expected " + expected + ", found " + found);
    }

    bool eat(char c)
    {
        skip_space();
        if (pos_ < text_.size() && text_[pos_] == c) {
            ++pos_;
            return true;
        }
        return false;
    }

    std::vector<Literal> items(char close, std::size_t depth)
    {
        std::vector<Literal> out;
        if (eat(close))
            return out;
        do {
            out.push_back(literal(depth + 1));
        } while (eat(','));
        if (!eat(close))
            fail(std::string("',' or '") + close + "'");
        return out;
    }

    Literal literal(std::size_t depth)
    {
        if (depth > kMaxNesting)
            fail("shallower nesting");
        skip_space();
        Literal lit;
        lit.position = pos_;
        if (eat('(')) {
            lit.kind = Literal::Kind::Tuple;
            lit.items = items(')', depth);
        } else if (eat('[')) {
            lit.kind = Literal::Kind::Matrix;
            lit.items = items(']', depth);
        } else if (eat('{')) {
            lit.kind = Literal::Kind::Coset;
            lit.items.push_back(literal(depth + 1));
            if (!eat('}'))
                fail("'}'");
        } else if (eat('<')) {
            lit.kind = Literal::Kind::Corner;
            lit.items.push_back(literal(depth + 1));
            if (!eat('>'))
                fail("'>'");
        } else if (pos_ < text_.size() && text_[pos_] >= '0' && text_[pos_] <= '9') {
            while (pos_ < text_.size() && text_[pos_] >= '0' && text_[pos_] <= '9') {
                lit.value = lit.value * 10 + static_cast<std::uint64_t>(text_[pos_] - '0');
                if (lit.value > kMaxLiteral)
                    throw ParseError(lit.position, {"smaller integer"}, "integer", "element literal: integer too large");
                ++pos_;
            }
        } else {
            fail("integer, '(', '[', '{' or '<'");
        }
        return lit;
    }

    std::string_view text_;
    std::size_t pos_ = 0;
};

[[noreturn]] void mismatch(const FiniteRing& ring, const Literal& lit, const std::string& why)
{
    throw RingError("element literal at " + std::to_string(lit.position) + " does not fit " +
                    print_expr(ring.construction()) + ": " + why);
}

Elem resolve(const FiniteRing& ring, const Literal& lit)
{
    using K = Literal::Kind;
    switch (lit.kind) {
    case K::Integer:
        return ring.checked(lit.value);
    case K::Tuple: {
        auto k = ring.kind();
        if (k != ExprKind::Product && k != ExprKind::GroupRing && k != ExprKind::TruncPoly)
            mismatch(ring, lit, "tuples are for products, group rings and truncated polynomial rings");
        auto slots = ring.slots();
        if (lit.items.size() != slots.size())
            mismatch(ring, lit, "expected " + std::to_string(slots.size()) + " components");
        std::vector<Elem> parts;
        for (std::size_t i = 0; i < slots.size(); ++i)
            parts.push_back(resolve(slots[i], lit.items[i]));
        return ring.pack(parts);
    }
    case K::Matrix: {
        if (ring.kind() != ExprKind::Matrix && ring.kind() != ExprKind::Triangular)
            mismatch(ring, lit, "matrix literals are for matrix and triangular rings");
        auto n = ring.dimension();
        if (lit.items.size() != n)
            mismatch(ring, lit, "expected " + std::to_string(n) + " rows");
        std::vector<Elem> grid;
        for (const auto& row : lit.items) {
            if (row.kind != K::Matrix || row.items.size() != n)
                mismatch(ring, row, "each row must be [..] with " + std::to_string(n) + " entries");
            for (const auto& entry : row.items)
                grid.push_back(resolve(ring.inner(), entry));
        }
        if (ring.kind() == ExprKind::Matrix)
            return ring.pack(grid);
        std::vector<Elem> parts;
        auto pos = ring.triangular_positions();
        for (const auto& [i, j] : pos)
            parts.push_back(grid[i * n + j]);
        for (std::size_t i = 0; i < n; ++i)
            for (std::size_t j = 0; j < n; ++j) {
                bool on_shape = ring.shape() == TriShape::Lower ? i >= j : i <= j;
                if (!on_shape && grid[i * n + j] != ring.inner().zero())
                    mismatch(ring, lit, "entry (" + std::to_string(i) + "," + std::to_string(j) +
                                            ") must be zero in a triangular ring");
            }
        return ring.pack(parts);
    }
    case K::Coset:
        if (ring.kind() != ExprKind::Quotient)
            mismatch(ring, lit, "coset literals {..} are for quotient rings");
        return ring.project(resolve(ring.inner(), lit.items.front()));
    case K::Corner: {
        if (ring.kind() != ExprKind::Corner)
            mismatch(ring, lit, "<..> literals are for corner rings");
        auto x = resolve(ring.inner(), lit.items.front());
        auto c = ring.from_inner(x);
        if (!c)
            mismatch(ring, lit, ring.inner().label(x) + " is not in the corner");
        return *c;
    }
    }
    mismatch(ring, lit, "unknown literal");
}

} // namespace

Elem parse_element(const FiniteRing& ring, std::string_view text)
{
    return resolve(ring, LiteralParser(text).parse());
}

} // namespace ringlab
