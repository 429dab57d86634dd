#include "common.hpp"

#include <algorithm>
#include <array>

namespace ringlab {

std::string_view to_string(CheckStatus s)
{
    switch (s) {
    case CheckStatus::Pass:
        return "pass";
    case CheckStatus::Fail:
        return "fail";
    case CheckStatus::NotApplicable:
        return "not-applicable";
    }
    return "?";
}

std::string_view to_string(Verdict v)
{
    switch (v) {
    case Verdict::Verified:
        return "verified";
    case Verdict::NotApplicable:
        return "not-applicable";
    case Verdict::Counterexample:
        return "counterexample";
    case Verdict::Skipped:
        return "skipped";
    }
    return "?";
}

namespace {

struct NamedTheorem {
    TheoremId id;
    std::string_view name;
};

constexpr std::array kTheorems = {
    NamedTheorem{TheoremId::OneMinusX, "one-minus-x"},
    NamedTheorem{TheoremId::JacobsonRClean, "jacobson-rclean"},
    NamedTheorem{TheoremId::Factor, "factor"},
    NamedTheorem{TheoremId::Product, "product"},
    NamedTheorem{TheoremId::Pierce, "pierce"},
    NamedTheorem{TheoremId::OrthogonalSet, "orthogonal-set"},
    NamedTheorem{TheoremId::MatrixRing, "matrix-ring"},
    NamedTheorem{TheoremId::TriangularProjection, "triangular-projection"},
    NamedTheorem{TheoremId::TriangularN, "triangular-n"},
    NamedTheorem{TheoremId::SqrtCharacterization, "sqrt-characterization"},
    NamedTheorem{TheoremId::CleanFromRClean, "clean-from-rclean"},
    NamedTheorem{TheoremId::LocalCorollary, "local-corollary"},
    NamedTheorem{TheoremId::OrthogonalIdempotentClean, "orthogonal-idempotent-clean"},
    NamedTheorem{TheoremId::PolyLemma, "poly-lemma"},
    NamedTheorem{TheoremId::XNotRClean, "x-not-rclean"},
    NamedTheorem{TheoremId::GroupRingC2, "group-ring-c2"},
    NamedTheorem{TheoremId::SemiperfectGroupRing, "semiperfect-group-ring"},
};

constexpr auto kIds = [] {
    std::array<TheoremId, kTheorems.size()> ids{};
    for (std::size_t i = 0; i < kTheorems.size(); ++i)
        ids[i] = kTheorems[i].id;
    return ids;
}();

} // namespace

std::span<const TheoremId> all_theorems() { return kIds; }

std::string_view theorem_name(TheoremId id)
{
    for (const auto& t : kTheorems)
        if (t.id == id)
            return t.name;
    return "?";
}

std::optional<TheoremId> theorem_from_name(std::string_view name)
{
    for (const auto& t : kTheorems)
        if (t.name == name)
            return t.id;
    return std::nullopt;
}

VerifyReport merge_reports(std::string theorem, std::string ring, std::span<const VerifyReport> parts)
{
    VerifyReport out;
    out.theorem = std::move(theorem);
    out.ring = std::move(ring);
    bool any_verified = false;
    bool any_counter = false;
    for (const auto& p : parts) {
        for (const auto& h : p.hypotheses)
            if (std::find(out.hypotheses.begin(), out.hypotheses.end(), h) == out.hypotheses.end())
                out.hypotheses.push_back(h);
        if (p.counterexample && !out.counterexample)
            out.counterexample = p.counterexample;
        out.stats.elements_checked += p.stats.elements_checked;
        out.stats.witnesses_produced += p.stats.witnesses_produced;
        out.stats.constructive_certified += p.stats.constructive_certified;
        out.stats.brute_force_certified += p.stats.brute_force_certified;
        out.stats.discrepancies += p.stats.discrepancies;
        for (const auto& n : p.notes)
            out.notes.push_back(n);
        any_verified |= p.verdict == Verdict::Verified;
        any_counter |= p.verdict == Verdict::Counterexample;
    }
    if (any_counter)
        out.verdict = Verdict::Counterexample;
    else if (any_verified)
        out.verdict = Verdict::Verified;
    else
        out.verdict = parts.empty() ? Verdict::NotApplicable : parts.front().verdict;
    return out;
}

namespace detail {

ReportBuilder::ReportBuilder(std::string_view theorem, std::string ring)
{
    report_.theorem = std::string(theorem);
    report_.ring = std::move(ring);
}

bool ReportBuilder::require(std::string name, bool ok, std::string detail)
{
    hypothesis(std::move(name), ok ? CheckStatus::Pass : CheckStatus::Fail, std::move(detail));
    return ok;
}

void ReportBuilder::hypothesis(std::string name, CheckStatus status, std::string detail)
{
    report_.hypotheses.push_back({std::move(name), status, std::move(detail)});
}

void ReportBuilder::counterexample(std::string what)
{
    if (!report_.counterexample)
        report_.counterexample = std::move(what);
    failed_ = true;
}

void ReportBuilder::compare(const FiniteRing& ring, const Mask& constructive, const Mask& brute,
                            std::string_view what)
{
    for (std::size_t x = 0; x < constructive.size(); ++x) {
        auto c = constructive[x] != 0;
        auto b = brute[x] != 0;
        report_.stats.constructive_certified += c;
        report_.stats.brute_force_certified += b;
        if (c != b) {
            ++report_.stats.discrepancies;
            counterexample(std::string(what) + ": routes disagree on " + ring.label(static_cast<Elem>(x)) +
                           " (constructive " + (c ? "yes" : "no") + ", search " + (b ? "yes" : "no") + ")");
        }
    }
}

VerifyReport ReportBuilder::finish()
{
    if (failed_)
        report_.verdict = Verdict::Counterexample;
    else if (std::any_of(report_.hypotheses.begin(), report_.hypotheses.end(),
                         [](const HypothesisCheck& h) { return h.status != CheckStatus::Pass; }))
        report_.verdict = Verdict::NotApplicable;
    else
        report_.verdict = Verdict::Verified;
    return std::move(report_);
}

} // namespace detail
} // namespace ringlab
