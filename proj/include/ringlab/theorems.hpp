#pragma once

/**
 * @file theorems.hpp
 * @brief Constructive verifiers for statements about r-clean rings.
 *
 * An element is r-clean when it is a regular element plus an idempotent.
 * Each verifier checks the statement's hypotheses, carries out the
 * construction that proves it (pushing witnesses through a homomorphism,
 * assembling them blockwise, transforming them algebraically), re-verifies
 * every produced witness by arithmetic, and compares the constructively
 * certified elements against a definitional brute-force scan.
 *
 * A failed hypothesis yields Verdict::NotApplicable and is not an error. A
 * Counterexample verdict means a constructed witness failed to verify or the
 * two routes disagreed.
 */

#include <cstdint>
#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "ringlab/classify.hpp"
#include "ringlab/polynomial.hpp"
#include "ringlab/ring.hpp"

namespace ringlab {

/// A verifier was handed input outside its scope (zero ring, non-commutative
/// ring, wrong construction). Reported as not-applicable by the dispatcher.
class NotApplicableError : public RingError {
public:
    using RingError::RingError;
};

enum class CheckStatus { Pass, Fail, NotApplicable };
enum class Verdict { Verified, NotApplicable, Counterexample, Skipped };

std::string_view to_string(CheckStatus s);
std::string_view to_string(Verdict v);

struct HypothesisCheck {
    std::string name;
    CheckStatus status = CheckStatus::Pass;
    std::string detail;

    friend bool operator==(const HypothesisCheck&, const HypothesisCheck&) = default;
};

struct WitnessStats {
    std::uint64_t elements_checked = 0;
    std::uint64_t witnesses_produced = 0;
    /// Elements certified by the statement's construction.
    std::uint64_t constructive_certified = 0;
    /// Elements certified by direct search.
    std::uint64_t brute_force_certified = 0;
    /// Elements on which the two routes disagree.
    std::uint64_t discrepancies = 0;

    friend bool operator==(const WitnessStats&, const WitnessStats&) = default;
};

struct VerifyReport {
    std::string theorem;
    std::string ring;
    std::vector<HypothesisCheck> hypotheses;
    Verdict verdict = Verdict::Verified;
    std::optional<std::string> counterexample;
    WitnessStats stats;
    std::vector<std::string> notes;

    bool verified() const { return verdict == Verdict::Verified; }

    friend bool operator==(const VerifyReport&, const VerifyReport&) = default;
};

enum class OrthogonalReading {
    /// Distinct idempotents, both outside {0, 1}, must be orthogonal.
    ExcludeTrivial,
    /// Every pair of distinct idempotents must be orthogonal.
    AllPairs,
};

struct VerifyOptions {
    std::size_t size_cap = kDefaultSizeCap;
    int deg_f = 2;
    int deg_g = 4;
    OrthogonalReading orthogonal = OrthogonalReading::ExcludeTrivial;
    /// Search nodes per polynomial verifier run.
    std::uint64_t poly_budget = 4'000'000'000ULL;
};

/// t^2 = 1 and r y r = r; certifies t + r.
struct SqrtWitness {
    Elem t = 0;
    Elem r = 0;
    Elem y = 0;
    friend bool operator==(const SqrtWitness&, const SqrtWitness&) = default;
};

// ---------------------------------------------------------------------------
// Witness transforms

/// (r, e, y) for x becomes (-r, 1 - e, -y) for 1 - x. Throws RingError if w
/// does not certify x.
RCleanWitness transfer_one_minus_x(const FiniteRing& ring, Elem x, const RCleanWitness& w);

/// Writes x = t + r with t^2 = 1 and r regular, from an r-clean witness
/// (r0, e, y0) of (x + 1)/2: t = 2e - 1, r = 2 r0, inner inverse y0 / 2.
/// Uses the least-index witness of (x + 1)/2 unless one is supplied.
/// Throws NotApplicableError when 2 is not a unit.
std::optional<SqrtWitness> sqrt_decompose(const FiniteRing& ring, Elem x,
                                          std::optional<RCleanWitness> half_witness = std::nullopt);

/// Inverse direction: from 2x - 1 = t + r, returns the r-clean witness
/// ((t + 1)/2 as the idempotent, r/2 as the regular part, 2y) of x.
RCleanWitness rclean_from_sqrt(const FiniteRing& ring, Elem x, const SqrtWitness& w);

bool certifies_sqrt(const FiniteRing& ring, Elem x, const SqrtWitness& w);

// ---------------------------------------------------------------------------
// Verifiers

VerifyReport verify_one_minus_x(const FiniteRing& ring);
VerifyReport verify_jacobson_rclean(const FiniteRing& ring);
VerifyReport verify_factor(const FiniteRing& ring, std::span<const Elem> generators,
                           const VerifyOptions& options = {});
VerifyReport verify_product(std::span<const FiniteRing> factors, const VerifyOptions& options = {});
/// Throws RingError when e is not a central idempotent.
VerifyReport assemble_pierce(const FiniteRing& ring, Elem e);
VerifyReport verify_orthogonal_set(const FiniteRing& ring, std::span<const Elem> idempotents);
VerifyReport verify_matrix_ring(const FiniteRing& inner, std::size_t n, const VerifyOptions& options = {});
/// Accepts a 2x2 triangular ring, or a two-factor product read as a formal
/// triangular ring with zero bimodule.
VerifyReport project_triangular(const FiniteRing& triangular);
VerifyReport verify_triangular_n(const FiniteRing& inner, std::size_t n, TriShape shape,
                                 const VerifyOptions& options = {});
VerifyReport verify_sqrt_characterization(const FiniteRing& ring);
VerifyReport verify_clean_from_rclean(const FiniteRing& ring);
VerifyReport verify_local_corollary(const FiniteRing& ring);
VerifyReport verify_orthogonal_idempotent_clean(const FiniteRing& ring, OrthogonalReading reading);
VerifyReport verify_poly_lemma(const FiniteRing& ring, int deg_f, int deg_g, const VerifyOptions& options = {});
VerifyReport verify_x_not_rclean(const FiniteRing& ring, int deg_g, const VerifyOptions& options = {});
VerifyReport group_ring_c2_iso(const FiniteRing& ring, const VerifyOptions& options = {});
VerifyReport verify_semiperfect_group_ring(const FiniteRing& ring, const GroupSpec& group,
                                           const VerifyOptions& options = {});

// ---------------------------------------------------------------------------
// Dispatch by theorem id

enum class TheoremId {
    OneMinusX,
    JacobsonRClean,
    Factor,
    Product,
    Pierce,
    OrthogonalSet,
    MatrixRing,
    TriangularProjection,
    TriangularN,
    SqrtCharacterization,
    CleanFromRClean,
    LocalCorollary,
    OrthogonalIdempotentClean,
    PolyLemma,
    XNotRClean,
    GroupRingC2,
    SemiperfectGroupRing,
};

std::span<const TheoremId> all_theorems();
std::string_view theorem_name(TheoremId id);
std::optional<TheoremId> theorem_from_name(std::string_view name);

/**
 * Runs one statement against a ring, choosing its parameters from the ring:
 * all principal ideals for the factor statement, all central idempotents for
 * Pierce assembly, the primitive central idempotents for the orthogonal-set
 * statement, and the ring's own construction (product, matrix, triangular,
 * group ring) where the statement is about one. NotApplicableError becomes a
 * NotApplicable report; other errors propagate.
 */
VerifyReport run_theorem(TheoremId id, const FiniteRing& ring, const VerifyOptions& options = {});

/// Merges per-parameter reports into one, summing statistics.
VerifyReport merge_reports(std::string theorem, std::string ring, std::span<const VerifyReport> parts);

} // namespace ringlab
