#include "common.hpp"

#include <set>

namespace ringlab {

namespace {

// Largest ring the dispatcher builds on its own initiative (T2(R), R[C2], M2(R)).
inline constexpr std::uint64_t kDerivedOrderLimit = kTableThreshold;

std::uint64_t power(std::uint64_t base, unsigned k)
{
    std::uint64_t out = 1;
    for (unsigned i = 0; i < k; ++i) {
        if (out > kDerivedOrderLimit)
            return kDerivedOrderLimit + 1;
        out *= base;
    }
    return out;
}

VerifyReport not_applicable(TheoremId id, const FiniteRing& ring, std::string why)
{
    detail::ReportBuilder rep(theorem_name(id), ring);
    rep.hypothesis("applicable", CheckStatus::NotApplicable, std::move(why));
    return rep.finish();
}

std::string too_large(const std::string& what, std::uint64_t order)
{
    return what + " would have order " + (order > kDerivedOrderLimit ? "above " : "") +
           std::to_string(std::min(order, kDerivedOrderLimit)) + ", over the derived-ring limit " +
           std::to_string(kDerivedOrderLimit);
}

VerifyReport with_note(VerifyReport r, std::string note)
{
    r.notes.insert(r.notes.begin(), std::move(note));
    return r;
}

VerifyReport dispatch(TheoremId id, const FiniteRing& ring, const VerifyOptions& opt)
{
    auto name = detail::ring_name(ring);
    auto merged = [&](const std::vector<VerifyReport>& parts) {
        return merge_reports(std::string(theorem_name(id)), name, parts);
    };
    const auto kind = ring.kind();
    const auto order = static_cast<std::uint64_t>(ring.order());

    switch (id) {
    case TheoremId::OneMinusX:
        return verify_one_minus_x(ring);
    case TheoremId::JacobsonRClean:
        return verify_jacobson_rclean(ring);
    case TheoremId::SqrtCharacterization:
        return verify_sqrt_characterization(ring);
    case TheoremId::CleanFromRClean:
        return verify_clean_from_rclean(ring);
    case TheoremId::LocalCorollary:
        return verify_local_corollary(ring);
    case TheoremId::OrthogonalIdempotentClean:
        return verify_orthogonal_idempotent_clean(ring, opt.orthogonal);
    case TheoremId::PolyLemma:
        return verify_poly_lemma(ring, opt.deg_f, opt.deg_g, opt);
    case TheoremId::XNotRClean:
        return verify_x_not_rclean(ring, opt.deg_g, opt);

    case TheoremId::Factor: {
        std::set<std::vector<Elem>> seen;
        std::vector<VerifyReport> parts;
        for (Elem g = 0; g < ring.order(); ++g) {
            Elem gens[] = {g};
            auto ideal = ideal_closure(ring, gens);
            if (seen.insert(ideal.elements).second)
                parts.push_back(verify_factor(ring, gens, opt));
        }
        return with_note(merged(parts), std::to_string(parts.size()) + " distinct principal ideals");
    }
    case TheoremId::Product:
        if (kind == ExprKind::Product)
            return verify_product(ring.slots(), opt);
        return with_note(verify_product(std::span(&ring, 1), opt), "single factor");
    case TheoremId::Pierce: {
        std::vector<VerifyReport> parts;
        for (auto e : central_idempotents(ring))
            parts.push_back(assemble_pierce(ring, e));
        return merged(parts);
    }
    case TheoremId::OrthogonalSet: {
        auto es = primitive_central_idempotents(ring);
        return verify_orthogonal_set(ring, es);
    }
    case TheoremId::MatrixRing: {
        if (kind == ExprKind::Matrix)
            return verify_matrix_ring(ring.inner(), ring.dimension(), opt);
        std::vector<VerifyReport> parts{verify_matrix_ring(ring, 1, opt)};
        if (power(order, 4) <= kDerivedOrderLimit)
            parts.push_back(verify_matrix_ring(ring, 2, opt));
        return merged(parts);
    }
    case TheoremId::TriangularProjection: {
        if ((kind == ExprKind::Triangular && ring.dimension() == 2) ||
            (kind == ExprKind::Product && ring.slots().size() == 2))
            return project_triangular(ring);
        if (power(order, 3) > kDerivedOrderLimit)
            throw NotApplicableError("not a 2x2 triangular ring; " + too_large("T2(R)", power(order, 3)));
        return with_note(project_triangular(make_triangular_ring(ring, 2, TriShape::Lower, opt.size_cap)),
                         "applied to T2(R)");
    }
    case TheoremId::TriangularN: {
        if (kind == ExprKind::Triangular) {
            if (ring.dimension() < 2)
                throw NotApplicableError("needs n >= 2");
            return verify_triangular_n(ring.inner(), ring.dimension(), ring.shape(), opt);
        }
        if (power(order, 3) > kDerivedOrderLimit)
            throw NotApplicableError("not a triangular ring; " + too_large("T2(R)", power(order, 3)));
        std::vector<VerifyReport> parts{verify_triangular_n(ring, 2, TriShape::Lower, opt),
                                        verify_triangular_n(ring, 2, TriShape::Upper, opt)};
        return with_note(merged(parts), "applied to T2(R) in both shapes");
    }
    case TheoremId::GroupRingC2: {
        if (kind == ExprKind::GroupRing && ring.group().order() == 2)
            return with_note(group_ring_c2_iso(ring.inner(), opt), "applied to the coefficient ring");
        if (power(order, 2) > kDerivedOrderLimit)
            throw NotApplicableError("not a C2 group ring; " + too_large("R[C2]", power(order, 2)));
        return with_note(group_ring_c2_iso(ring, opt), "applied to R[C2]");
    }
    case TheoremId::SemiperfectGroupRing: {
        if (kind == ExprKind::GroupRing)
            return with_note(verify_semiperfect_group_ring(ring.inner(), ring.group(), opt),
                             "applied to the coefficient ring and group");
        if (!is_commutative(ring))
            throw NotApplicableError("the statement assumes a commutative ring");
        if (power(order, 2) > kDerivedOrderLimit)
            throw NotApplicableError("not a group ring; " + too_large("R[C2]", power(order, 2)));
        return with_note(verify_semiperfect_group_ring(ring, GroupSpec::cyclic(2), opt), "applied to R[C2]");
    }
    }
    throw RingError("unknown theorem");
}

} // namespace

VerifyReport run_theorem(TheoremId id, const FiniteRing& ring, const VerifyOptions& options)
{
    VerifyReport r;
    try {
        r = dispatch(id, ring, options);
    } catch (const NotApplicableError& e) {
        r = not_applicable(id, ring, e.what());
    }
    r.theorem = std::string(theorem_name(id));
    r.ring = detail::ring_name(ring);
    return r;
}

} // namespace ringlab
