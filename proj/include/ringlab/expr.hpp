#pragma once

// Construction tree for finite rings. Every FiniteRing carries the RingExpr
// that built it; the text DSL in ringspec.hpp parses to and prints from it.

#include <cstdint>
#include <string>
#include <vector>

namespace ringlab {

enum class ExprKind {
    ZMod,
    Product,
    Matrix,
    Triangular,
    GroupRing,
    TruncPoly,
    Corner,
    Quotient,
};

enum class TriShape { Lower, Upper };

/// Where a group ring's group came from: the built-in cyclic family or a
/// Cayley-table file.
struct GroupRef {
    enum class Kind { Cyclic, File };
    Kind kind = Kind::Cyclic;
    std::uint64_t order = 0; // Cyclic only
    std::string path;        // File only

    friend bool operator==(const GroupRef&, const GroupRef&) = default;
};

struct RingExpr {
    ExprKind kind = ExprKind::ZMod;
    std::uint64_t n = 0; // modulus (ZMod), size (Matrix, Triangular), length k (TruncPoly)
    TriShape shape = TriShape::Lower;
    GroupRef group;
    std::uint64_t index = 0;               // Corner: idempotent, as an inner-ring index
    std::vector<std::uint64_t> generators; // Quotient: inner-ring indices
    std::vector<RingExpr> children;

    static RingExpr zmod(std::uint64_t n);
    static RingExpr product(std::vector<RingExpr> factors);
    static RingExpr matrix(std::uint64_t n, RingExpr inner);
    static RingExpr triangular(std::uint64_t n, RingExpr inner, TriShape shape);
    static RingExpr group_ring(RingExpr inner, GroupRef group);
    static RingExpr trunc_poly(RingExpr inner, std::uint64_t k);
    static RingExpr corner(RingExpr inner, std::uint64_t e);
    static RingExpr quotient(RingExpr inner, std::vector<std::uint64_t> generators);

    const RingExpr& inner() const { return children.front(); }
};

bool operator==(const RingExpr& a, const RingExpr& b);

} // namespace ringlab
