#pragma once

// Polynomials over a finite ring with exact (untruncated) arithmetic. R[x]
// is infinite, so this is deliberately not a FiniteRing: values carry a
// degree bound only to keep searches finite.

#include <cstdint>
#include <optional>
#include <span>
#include <string>
#include <vector>

#include "ringlab/ring.hpp"

namespace ringlab {

inline constexpr int kMaxPolyDegree = 64;

/// Thrown when a bounded search would exceed its node budget.
class BudgetExceeded : public RingError {
public:
    using RingError::RingError;
};

class BoundedPolynomial {
public:
    /// Coefficients a_0..a_d; trailing zeros are trimmed.
    BoundedPolynomial(FiniteRing base, std::vector<Elem> coefficients);
    static BoundedPolynomial zero(FiniteRing base) { return {std::move(base), {}}; }
    /// x - c
    static BoundedPolynomial x_minus(FiniteRing base, Elem c);

    const FiniteRing& base() const { return base_; }
    std::span<const Elem> coefficients() const { return coeffs_; }
    /// Coefficient of x^i, zero beyond the degree.
    Elem coeff(std::size_t i) const;
    /// -1 for the zero polynomial.
    int degree() const { return static_cast<int>(coeffs_.size()) - 1; }
    bool is_zero() const { return coeffs_.empty(); }
    std::string to_string() const;

    friend bool operator==(const BoundedPolynomial& a, const BoundedPolynomial& b)
    {
        return a.coeffs_ == b.coeffs_;
    }

private:
    FiniteRing base_;
    std::vector<Elem> coeffs_;
};

BoundedPolynomial poly_add(const BoundedPolynomial& f, const BoundedPolynomial& g);
BoundedPolynomial poly_sub(const BoundedPolynomial& f, const BoundedPolynomial& g);
BoundedPolynomial poly_mul(const BoundedPolynomial& f, const BoundedPolynomial& g);

struct PolySearchOptions {
    /// Search nodes allowed before BudgetExceeded is thrown. 0 = unlimited.
    std::uint64_t node_budget = 0;
};

struct PolySearchStats {
    std::uint64_t nodes = 0;
};

/**
 * Looks for g with deg g <= degree_cap and f g f = f exactly.
 *
 * The search is complete within the cap: the coefficient equations of
 * f g f = f are solved one unknown coefficient at a time, from whichever end
 * of g has fewer candidates, and a branch is cut as soon as an equation whose
 * unknowns are all fixed fails. Coefficient values that agree on every
 * product a_i b a_l are tried once, by their least member. An empty result
 * only means no g exists up to the cap; it says nothing about higher degrees.
 */
std::optional<BoundedPolynomial> poly_regular_witness_search(const BoundedPolynomial& f, int degree_cap,
                                                             const PolySearchOptions& options = {},
                                                             PolySearchStats* stats = nullptr);

} // namespace ringlab
