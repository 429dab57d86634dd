#include "ringlab/expr.hpp"

#include <utility>

namespace ringlab {

RingExpr RingExpr::zmod(std::uint64_t n)
{
    RingExpr e;
    e.kind = ExprKind::ZMod;
    e.n = n;
    return e;
}

RingExpr RingExpr::product(std::vector<RingExpr> factors)
{
    RingExpr e;
    e.kind = ExprKind::Product;
    e.children = std::move(factors);
    return e;
}

RingExpr RingExpr::matrix(std::uint64_t n, RingExpr inner)
{
    RingExpr e;
    e.kind = ExprKind::Matrix;
    e.n = n;
    e.children.push_back(std::move(inner));
    return e;
}

RingExpr RingExpr::triangular(std::uint64_t n, RingExpr inner, TriShape shape)
{
    RingExpr e;
    e.kind = ExprKind::Triangular;
    e.n = n;
    e.shape = shape;
    e.children.push_back(std::move(inner));
    return e;
}

RingExpr RingExpr::group_ring(RingExpr inner, GroupRef group)
{
    RingExpr e;
    e.kind = ExprKind::GroupRing;
    e.group = std::move(group);
    e.children.push_back(std::move(inner));
    return e;
}

RingExpr RingExpr::trunc_poly(RingExpr inner, std::uint64_t k)
{
    RingExpr e;
    e.kind = ExprKind::TruncPoly;
    e.n = k;
    e.children.push_back(std::move(inner));
    return e;
}

RingExpr RingExpr::corner(RingExpr inner, std::uint64_t idem)
{
    RingExpr e;
    e.kind = ExprKind::Corner;
    e.index = idem;
    e.children.push_back(std::move(inner));
    return e;
}

RingExpr RingExpr::quotient(RingExpr inner, std::vector<std::uint64_t> generators)
{
    RingExpr e;
    e.kind = ExprKind::Quotient;
    e.generators = std::move(generators);
    e.children.push_back(std::move(inner));
    return e;
}

// Only the fields meaningful for each kind take part in equality.
bool operator==(const RingExpr& a, const RingExpr& b)
{
    if (a.kind != b.kind || a.children != b.children)
        return false;
    switch (a.kind) {
    case ExprKind::ZMod:
    case ExprKind::Matrix:
    case ExprKind::TruncPoly:
        return a.n == b.n;
    case ExprKind::Triangular:
        return a.n == b.n && a.shape == b.shape;
    case ExprKind::GroupRing:
        return a.group == b.group;
    case ExprKind::Corner:
        return a.index == b.index;
    case ExprKind::Quotient:
        return a.generators == b.generators;
    case ExprKind::Product:
        return true;
    }
    return false;
}

} // namespace ringlab
