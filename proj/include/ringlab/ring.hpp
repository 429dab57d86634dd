#pragma once

/**
 * @file ring.hpp
 * @brief Finite rings with identity, built compositionally.
 *
 * Elements of a ring of order n are the dense indices 0..n-1. Composite
 * constructions (products, matrix rings, group rings, truncated polynomial
 * rings) encode an element as a mixed-radix number over its slots, first
 * slot most significant. So in Z2 x Z3 the pair (a, b) has index 3a + b, and
 * a 2x2 matrix [[a, b], [c, d]] over Z_m has index ((a m + b) m + c) m + d.
 *
 * Arithmetic is computed structurally from the inner rings. Rings of order
 * at most kTableThreshold also get full add/mul tables, built once in the
 * constructor. A FiniteRing is immutable and cheap to copy (shared state).
 */

#include <cstddef>
#include <cstdint>
#include <memory>
#include <optional>
#include <span>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

#include "ringlab/expr.hpp"

namespace ringlab {

using Elem = std::uint32_t;

inline constexpr std::size_t kDefaultSizeCap = 20000;
inline constexpr std::size_t kTableThreshold = 4096;

class RingError : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

/// A construction whose order would exceed the configured cap.
class SizeCapError : public RingError {
public:
    SizeCapError(std::string what_ring, std::uint64_t required, std::size_t cap);

    /// Saturates at UINT64_MAX.
    std::uint64_t required() const { return required_; }
    std::size_t cap() const { return cap_; }

private:
    std::uint64_t required_;
    std::size_t cap_;
};

/// A finite group given by its Cayley table.
class GroupSpec {
public:
    /// Validates closure, associativity, a two-sided identity and inverses.
    GroupSpec(std::vector<std::vector<std::size_t>> table, GroupRef source);

    static GroupSpec cyclic(std::size_t m);

    std::size_t order() const { return table_.size(); }
    std::size_t identity() const { return identity_; }
    std::size_t op(std::size_t a, std::size_t b) const { return table_[a][b]; }
    std::size_t inverse(std::size_t a) const { return inverses_[a]; }
    const GroupRef& source() const { return source_; }
    const std::vector<std::vector<std::size_t>>& table() const { return table_; }

private:
    std::vector<std::vector<std::size_t>> table_;
    std::size_t identity_ = 0;
    std::vector<std::size_t> inverses_;
    GroupRef source_;
};

/// A two-sided ideal: its full element set (sorted) and the generators it
/// was closed from.
struct Ideal {
    std::vector<Elem> elements;
    std::vector<Elem> generators;

    bool contains(Elem x) const;
    std::size_t size() const { return elements.size(); }
};

namespace detail {
struct RingData;
}

class FiniteRing {
public:
    std::size_t order() const;
    Elem zero() const;
    Elem one() const;

    Elem add(Elem a, Elem b) const;
    Elem mul(Elem a, Elem b) const;
    Elem neg(Elem a) const;
    Elem sub(Elem a, Elem b) const { return add(a, neg(b)); }
    /// k * 1, for any integer k.
    Elem from_int(std::int64_t k) const;

    /// Construction-aware display: residues, tuples, matrices, <corner>, {coset}.
    std::string label(Elem a) const;
    const RingExpr& construction() const;
    ExprKind kind() const;
    bool has_tables() const;

    /// Throws RingError when a is not a valid index.
    Elem checked(std::uint64_t a) const;

    // Mixed-radix codec. Empty slots for ZMod, Corner and Quotient.
    std::span<const FiniteRing> slots() const;
    std::vector<Elem> unpack(Elem a) const;
    Elem pack(std::span<const Elem> parts) const;

    // Matrix, Triangular, GroupRing, TruncPoly, Corner, Quotient.
    const FiniteRing& inner() const;
    // Matrix and Triangular: n. TruncPoly: k. ZMod: modulus.
    std::size_t dimension() const;
    TriShape shape() const;
    /// Triangular only: the (row, col) of each slot, in slot order.
    std::span<const std::pair<std::size_t, std::size_t>> triangular_positions() const;
    const GroupSpec& group() const;

    // Corner: elements are the inner elements e x e, ascending.
    Elem to_inner(Elem a) const;
    std::optional<Elem> from_inner(Elem inner_elem) const;
    Elem corner_idempotent() const;

    // Quotient: cosets, each represented by its least member.
    Elem representative(Elem coset) const;
    Elem project(Elem inner_elem) const;
    const Ideal& ideal() const;

    explicit FiniteRing(std::shared_ptr<const detail::RingData> data);

private:
    std::shared_ptr<const detail::RingData> data_;
};

FiniteRing make_zmod(std::uint64_t n, std::size_t size_cap = kDefaultSizeCap);
FiniteRing make_product(std::span<const FiniteRing> factors, std::size_t size_cap = kDefaultSizeCap);
FiniteRing make_matrix_ring(const FiniteRing& inner, std::size_t n, std::size_t size_cap = kDefaultSizeCap);
FiniteRing make_triangular_ring(const FiniteRing& inner, std::size_t n, TriShape shape,
                                std::size_t size_cap = kDefaultSizeCap);
FiniteRing make_group_ring(const FiniteRing& inner, const GroupSpec& group,
                           std::size_t size_cap = kDefaultSizeCap);
FiniteRing make_trunc_poly(const FiniteRing& inner, std::size_t k, std::size_t size_cap = kDefaultSizeCap);

/// eRe for a central idempotent e. Rejects a non-central e, naming an x with ex != xe.
FiniteRing make_corner(const FiniteRing& inner, Elem e);
/// eRe for any idempotent e (used for local-idempotent tests).
FiniteRing make_idempotent_corner(const FiniteRing& inner, Elem e);

Ideal ideal_closure(const FiniteRing& ring, std::span<const Elem> generators);
/// Rejects a set that is not a two-sided ideal.
FiniteRing make_quotient(const FiniteRing& inner, const Ideal& ideal);

} // namespace ringlab
