#pragma once

/**
 * @file classify.hpp
 * @brief Element and ring classification by exhaustive search.
 *
 * Every predicate comes with a certificate that re-verifies by direct
 * arithmetic. Searches scan candidates in ascending index order and return
 * the first hit, so witnesses are deterministic.
 *
 * The free functions scan from scratch on each call. RingFacts precomputes
 * idempotents, inverses and inner inverses once, and answers the same
 * queries with identical witnesses; the theorem verifiers use it.
 */

#include <cstddef>
#include <optional>
#include <span>
#include <string>
#include <utility>
#include <vector>

#include "ringlab/ring.hpp"

namespace ringlab {

/// x y x = x
struct RegularWitness {
    Elem y = 0;
    friend bool operator==(const RegularWitness&, const RegularWitness&) = default;
};

/// x = u + e, u a unit, e idempotent
struct CleanWitness {
    Elem u = 0;
    Elem e = 0;
    friend bool operator==(const CleanWitness&, const CleanWitness&) = default;
};

/// x = r + e, r y r = r, e idempotent
struct RCleanWitness {
    Elem r = 0;
    Elem e = 0;
    Elem y = 0;
    friend bool operator==(const RCleanWitness&, const RCleanWitness&) = default;
};

// Certificate checks, by arithmetic only.
bool certifies_regular(const FiniteRing& ring, Elem x, const RegularWitness& w);
bool certifies_clean(const FiniteRing& ring, Elem x, const CleanWitness& w);
bool certifies_r_clean(const FiniteRing& ring, Elem x, const RCleanWitness& w);

// ---------------------------------------------------------------------------
// Element predicates

/// Two-sided inverse of x, if any.
std::optional<Elem> is_unit(const FiniteRing& ring, Elem x);
bool is_idempotent(const FiniteRing& ring, Elem x);
/// Least k >= 1 with x^k = 0. Powers are tried up to the ring order.
std::optional<std::size_t> is_nilpotent(const FiniteRing& ring, Elem x);
std::optional<RegularWitness> regular_witness(const FiniteRing& ring, Elem x);
/// Least unit u with x u x = x.
std::optional<Elem> unit_regular_witness(const FiniteRing& ring, Elem x);
std::optional<CleanWitness> clean_witness(const FiniteRing& ring, Elem x);
std::optional<RCleanWitness> r_clean_witness(const FiniteRing& ring, Elem x);
/// Least idempotent e with e in xR and 1 - e in (1 - x)R.
std::optional<Elem> exchange_witness(const FiniteRing& ring, Elem x);
bool is_central(const FiniteRing& ring, Elem x);

// ---------------------------------------------------------------------------
// Ring-level sets and properties

std::vector<Elem> idempotents(const FiniteRing& ring);
std::vector<Elem> units(const FiniteRing& ring);
std::vector<Elem> central_idempotents(const FiniteRing& ring);
/// Central idempotents that are nonzero and minimal among central idempotents.
/// They are pairwise orthogonal and sum to 1.
std::vector<Elem> primitive_central_idempotents(const FiniteRing& ring);

/// { x : 1 - a x is a unit for every a }. For a finite ring this is J(R).
std::vector<Elem> jacobson_radical(const FiniteRing& ring);

/// Non-units coincide with J(R). Throws RingError on the zero ring.
bool is_local(const FiniteRing& ring);

struct DirectFiniteness {
    bool holds = true;
    std::optional<std::pair<Elem, Elem>> counterexample; // a b = 1, b a != 1
};
DirectFiniteness is_directly_finite(const FiniteRing& ring);

bool is_commutative(const FiniteRing& ring);

/// Nonzero idempotents e (central or not) whose corner eRe is a local ring.
std::vector<Elem> local_idempotents(const FiniteRing& ring);
/// Pairwise orthogonal local idempotents summing to 1, found by backtracking
/// over local idempotents in ascending order.
std::optional<std::vector<Elem>> complete_orthogonal_local_set(const FiniteRing& ring);

// ---------------------------------------------------------------------------
// Cached facts

class RingFacts {
public:
    explicit RingFacts(FiniteRing ring);

    const FiniteRing& ring() const { return ring_; }
    std::span<const Elem> idempotents() const { return idempotents_; }
    std::optional<Elem> inverse(Elem x) const { return inverse_[x]; }
    std::optional<RegularWitness> regular_witness(Elem x) const;
    std::optional<CleanWitness> clean_witness(Elem x) const;
    std::optional<RCleanWitness> r_clean_witness(Elem x) const;
    bool is_regular(Elem x) const { return regular_y_[x].has_value(); }

private:
    FiniteRing ring_;
    std::vector<Elem> idempotents_;
    std::vector<std::optional<Elem>> inverse_;
    std::vector<std::optional<Elem>> regular_y_;
};

// ---------------------------------------------------------------------------
// Aggregates

struct ElementClass {
    Elem element = 0;
    bool unit = false;
    bool idempotent = false;
    bool nilpotent = false;
    bool regular = false;
    bool unit_regular = false;
    bool central = false;
    bool clean = false;
    bool r_clean = false;
    bool exchange = false;

    std::optional<Elem> inverse;
    std::optional<std::size_t> nilpotency_index;
    std::optional<RegularWitness> regular_witness;
    std::optional<Elem> unit_regular_witness;
    std::optional<CleanWitness> clean_witness;
    std::optional<RCleanWitness> r_clean_witness;
    std::optional<Elem> exchange_witness;
};

ElementClass classify_element(const FiniteRing& ring, Elem x);

struct RingProfile {
    std::size_t order = 0;
    bool clean = true;
    bool r_clean = true;
    bool regular = true;
    bool exchange = true;
    bool local = false;
    bool directly_finite = true;
    bool semiperfect = true;
    bool commutative = true;

    // First failing element (ascending) for each universally quantified flag.
    std::optional<Elem> not_clean;
    std::optional<Elem> not_r_clean;
    std::optional<Elem> not_regular;
    std::optional<Elem> not_exchange;
    std::optional<std::pair<Elem, Elem>> not_directly_finite;
    std::optional<std::pair<Elem, Elem>> not_commutative;

    std::vector<Elem> idempotents;
    std::vector<Elem> units;
    std::vector<Elem> central_idempotents;
    std::vector<Elem> jacobson_radical;
    std::vector<std::string> notes;
};

RingProfile ring_profile(const FiniteRing& ring);

} // namespace ringlab
