#include "common.hpp"

#include <algorithm>

namespace ringlab {

using detail::Mask;
using detail::ReportBuilder;

namespace {

std::optional<Elem> half(const FiniteRing& ring) { return is_unit(ring, ring.from_int(2)); }

std::string describe(const FiniteRing& ring, const RCleanWitness& w)
{
    return "(r=" + ring.label(w.r) + ", e=" + ring.label(w.e) + ", y=" + ring.label(w.y) + ")";
}

Mask r_clean_mask(const RingFacts& facts)
{
    const auto& ring = facts.ring();
    Mask m(ring.order());
    for (Elem x = 0; x < ring.order(); ++x)
        m[x] = facts.r_clean_witness(x).has_value();
    return m;
}

bool only_trivial_idempotents(const RingFacts& facts)
{
    const auto& ring = facts.ring();
    for (auto e : facts.idempotents())
        if (e != ring.zero() && e != ring.one())
            return false;
    return true;
}

} // namespace

RCleanWitness transfer_one_minus_x(const FiniteRing& ring, Elem x, const RCleanWitness& w)
{
    if (!certifies_r_clean(ring, x, w))
        throw RingError("witness " + describe(ring, w) + " does not certify " + ring.label(x));
    return {ring.neg(w.r), ring.sub(ring.one(), w.e), ring.neg(w.y)};
}

VerifyReport verify_one_minus_x(const FiniteRing& ring)
{
    ReportBuilder rep(theorem_name(TheoremId::OneMinusX), ring);
    RingFacts facts(ring);
    auto brute = r_clean_mask(facts);
    Mask built(ring.order());
    for (Elem x = 0; x < ring.order(); ++x) {
        ++rep.stats().elements_checked;
        auto w = facts.r_clean_witness(x);
        auto y = ring.sub(ring.one(), x);
        if (!w)
            continue;
        auto t = transfer_one_minus_x(ring, x, *w);
        ++rep.stats().witnesses_produced;
        if (!certifies_r_clean(ring, y, t)) {
            rep.counterexample("transferred witness " + describe(ring, t) + " fails for " + ring.label(y));
            continue;
        }
        built[y] = 1;
        auto back = transfer_one_minus_x(ring, y, t);
        if (!certifies_r_clean(ring, x, back))
            rep.counterexample("double transfer fails to certify " + ring.label(x));
    }
    rep.compare(ring, built, brute, "1 - x");
    return rep.finish();
}

VerifyReport verify_jacobson_rclean(const FiniteRing& ring)
{
    ReportBuilder rep(theorem_name(TheoremId::JacobsonRClean), ring);
    RingFacts facts(ring);
    auto jac = jacobson_radical(ring);
    Mask built(ring.order());
    Mask brute(ring.order());
    for (auto x : jac) {
        ++rep.stats().elements_checked;
        brute[x] = facts.r_clean_witness(x).has_value();
        auto u = ring.sub(ring.one(), x);
        auto inv = facts.inverse(u);
        if (!inv) {
            rep.counterexample("1 - " + ring.label(x) + " is not a unit");
            continue;
        }
        // A unit u is r-clean as u + 0 with inner inverse u^-1.
        RCleanWitness wu{u, ring.zero(), *inv};
        auto w = transfer_one_minus_x(ring, u, wu);
        ++rep.stats().witnesses_produced;
        if (certifies_r_clean(ring, x, w))
            built[x] = 1;
        else
            rep.counterexample("transferred witness " + describe(ring, w) + " fails for " + ring.label(x));
    }
    rep.compare(ring, built, brute, "J(R)");
    rep.note("J(R) has " + std::to_string(jac.size()) + " elements");
    return rep.finish();
}

bool certifies_sqrt(const FiniteRing& ring, Elem x, const SqrtWitness& w)
{
    return ring.mul(w.t, w.t) == ring.one() && ring.mul(ring.mul(w.r, w.y), w.r) == w.r &&
           ring.add(w.t, w.r) == x;
}

std::optional<SqrtWitness> sqrt_decompose(const FiniteRing& ring, Elem x, std::optional<RCleanWitness> half_witness)
{
    auto h = half(ring);
    if (!h)
        throw NotApplicableError("2 is not a unit in " + detail::ring_name(ring));
    auto z = ring.mul(*h, ring.add(x, ring.one()));
    if (half_witness) {
        if (!certifies_r_clean(ring, z, *half_witness))
            throw RingError("witness " + describe(ring, *half_witness) + " does not certify " + ring.label(z));
    } else {
        half_witness = r_clean_witness(ring, z);
        if (!half_witness)
            return std::nullopt;
    }
    auto two = ring.from_int(2);
    const auto& w = *half_witness;
    return SqrtWitness{ring.sub(ring.mul(two, w.e), ring.one()), ring.mul(two, w.r), ring.mul(*h, w.y)};
}

RCleanWitness rclean_from_sqrt(const FiniteRing& ring, Elem x, const SqrtWitness& w)
{
    auto h = half(ring);
    if (!h)
        throw NotApplicableError("2 is not a unit in " + detail::ring_name(ring));
    auto two = ring.from_int(2);
    auto target = ring.sub(ring.mul(two, x), ring.one());
    if (!certifies_sqrt(ring, target, w))
        throw RingError("square-root witness does not certify 2x - 1 for x = " + ring.label(x));
    return {ring.mul(*h, w.r), ring.mul(*h, ring.add(w.t, ring.one())), ring.mul(two, w.y)};
}

VerifyReport verify_sqrt_characterization(const FiniteRing& ring)
{
    ReportBuilder rep(theorem_name(TheoremId::SqrtCharacterization), ring);
    if (!rep.require("2 is a unit", half(ring).has_value()))
        return rep.finish();
    RingFacts facts(ring);
    auto h = *half(ring);
    auto two = ring.from_int(2);

    std::vector<Elem> roots;
    for (Elem t = 0; t < ring.order(); ++t)
        if (ring.mul(t, t) == ring.one())
            roots.push_back(t);

    auto rclean = r_clean_mask(facts);
    Mask sqrt_brute(ring.order());
    Mask sqrt_built(ring.order());
    Mask rclean_built(ring.order());
    for (Elem x = 0; x < ring.order(); ++x) {
        ++rep.stats().elements_checked;
        for (auto t : roots)
            if (facts.is_regular(ring.sub(x, t))) {
                sqrt_brute[x] = 1;
                break;
            }

        auto z = ring.mul(h, ring.add(x, ring.one()));
        if (auto w = facts.r_clean_witness(z)) {
            auto s = sqrt_decompose(ring, x, *w);
            ++rep.stats().witnesses_produced;
            if (s && certifies_sqrt(ring, x, *s))
                sqrt_built[x] = 1;
            else
                rep.counterexample("forward transform fails for " + ring.label(x));
        }

        auto target = ring.sub(ring.mul(two, x), ring.one());
        for (auto t : roots) {
            auto r = ring.sub(target, t);
            if (auto y = facts.regular_witness(r)) {
                auto w = rclean_from_sqrt(ring, x, {t, r, y->y});
                ++rep.stats().witnesses_produced;
                if (certifies_r_clean(ring, x, w))
                    rclean_built[x] = 1;
                else
                    rep.counterexample("inverse transform fails for " + ring.label(x));
                break;
            }
        }
    }
    rep.compare(ring, sqrt_built, sqrt_brute, "regular + square root of 1");
    rep.compare(ring, rclean_built, rclean, "r-clean from square root");
    rep.note(std::to_string(roots.size()) + " square roots of 1");
    return rep.finish();
}

VerifyReport verify_clean_from_rclean(const FiniteRing& ring)
{
    if (ring.order() <= 1)
        throw NotApplicableError("the statement assumes R != 0");
    ReportBuilder rep(theorem_name(TheoremId::CleanFromRClean), ring);
    RingFacts facts(ring);
    auto df = is_directly_finite(ring);
    std::string df_detail;
    if (df.counterexample)
        df_detail = ring.label(df.counterexample->first) + " * " + ring.label(df.counterexample->second) +
                    " = 1 but not conversely";
    bool ok = rep.require("directly finite", df.holds, df_detail);
    ok &= rep.require("0 and 1 are the only idempotents", only_trivial_idempotents(facts),
                      std::to_string(facts.idempotents().size()) + " idempotents");
    auto rclean = r_clean_mask(facts);
    bool all = std::all_of(rclean.begin(), rclean.end(), [](char c) { return c != 0; });
    ok &= rep.require("r-clean", all);
    if (!ok)
        return rep.finish();

    Mask built(ring.order());
    Mask brute(ring.order());
    std::size_t zero_branch = 0;
    for (Elem x = 0; x < ring.order(); ++x) {
        ++rep.stats().elements_checked;
        brute[x] = facts.clean_witness(x).has_value();
        auto w = *facts.r_clean_witness(x);
        CleanWitness cw;
        if (w.r == ring.zero()) {
            // x = e = (2e - 1) + (1 - e)
            ++zero_branch;
            cw = {ring.sub(ring.mul(ring.from_int(2), w.e), ring.one()), ring.sub(ring.one(), w.e)};
        } else {
            auto ry = ring.mul(w.r, w.y);
            auto yr = ring.mul(w.y, w.r);
            if (ry != ring.one()) {
                rep.counterexample("r y = " + ring.label(ry) + " != 1 for x = " + ring.label(x));
                continue;
            }
            if (yr != ring.one()) {
                rep.counterexample("r y = 1 but y r = " + ring.label(yr) + " for x = " + ring.label(x));
                continue;
            }
            cw = {w.r, w.e};
        }
        ++rep.stats().witnesses_produced;
        if (certifies_clean(ring, x, cw))
            built[x] = 1;
        else
            rep.counterexample("constructed clean witness fails for " + ring.label(x));
    }
    rep.compare(ring, built, brute, "clean");
    rep.note(std::to_string(zero_branch) + " elements took the r = 0 branch");
    return rep.finish();
}

VerifyReport verify_local_corollary(const FiniteRing& ring)
{
    if (ring.order() <= 1)
        throw NotApplicableError("the statement assumes R != 0");
    ReportBuilder rep(theorem_name(TheoremId::LocalCorollary), ring);
    RingFacts facts(ring);
    if (!rep.require("directly finite", is_directly_finite(ring).holds))
        return rep.finish();
    rep.stats().elements_checked = ring.order();
    auto rclean = r_clean_mask(facts);
    bool all_rclean = std::all_of(rclean.begin(), rclean.end(), [](char c) { return c != 0; });
    bool all_clean = true;
    for (Elem x = 0; x < ring.order(); ++x)
        all_clean &= facts.clean_witness(x).has_value();
    bool trivial = only_trivial_idempotents(facts);
    bool local = is_local(ring);
    bool rhs = all_rclean && trivial;
    rep.note(std::string("local: ") + (local ? "yes" : "no") + "; r-clean: " + (all_rclean ? "yes" : "no") +
             "; only trivial idempotents: " + (trivial ? "yes" : "no"));
    if (local != rhs)
        rep.counterexample(std::string("local is ") + (local ? "true" : "false") + " but r-clean with trivial idempotents is " +
                           (rhs ? "true" : "false"));
    if (local != (all_clean && trivial))
        rep.counterexample("local differs from clean with trivial idempotents");
    return rep.finish();
}

VerifyReport verify_orthogonal_idempotent_clean(const FiniteRing& ring, OrthogonalReading reading)
{
    if (!is_commutative(ring))
        throw NotApplicableError("the statement assumes a commutative ring");
    ReportBuilder rep(theorem_name(TheoremId::OrthogonalIdempotentClean), ring);
    RingFacts facts(ring);
    auto rclean = r_clean_mask(facts);
    bool ok = rep.require("r-clean", std::all_of(rclean.begin(), rclean.end(), [](char c) { return c != 0; }));

    auto ids = facts.idempotents();
    std::optional<std::pair<Elem, Elem>> bad;
    std::size_t pairs = 0;
    for (std::size_t i = 0; i < ids.size() && !bad; ++i)
        for (std::size_t j = i + 1; j < ids.size() && !bad; ++j) {
            auto a = ids[i], b = ids[j];
            if (reading == OrthogonalReading::ExcludeTrivial &&
                (a == ring.zero() || a == ring.one() || b == ring.zero() || b == ring.one()))
                continue;
            ++pairs;
            if (ring.mul(a, b) != ring.zero())
                bad = std::pair{a, b};
        }
    std::string reading_name = reading == OrthogonalReading::ExcludeTrivial ? "exclude-trivial" : "all-pairs";
    ok &= rep.require("idempotents pairwise orthogonal (" + reading_name + ")", !bad,
                      bad ? ring.label(bad->first) + " * " + ring.label(bad->second) + " != 0"
                          : std::to_string(pairs) + " pairs checked");
    if (!ok)
        return rep.finish();

    Mask built(ring.order());
    Mask brute(ring.order());
    std::size_t merged = 0;
    for (Elem x = 0; x < ring.order(); ++x) {
        ++rep.stats().elements_checked;
        brute[x] = facts.clean_witness(x).has_value();
        if (!brute[x])
            rep.counterexample(ring.label(x) + " is not clean");
        // x = r + e2; in a commutative ring r = u + e1 with f = r y, u = r + f - 1, e1 = 1 - f.
        auto w = *facts.r_clean_witness(x);
        auto f = ring.mul(w.r, w.y);
        auto u = ring.sub(ring.add(w.r, f), ring.one());
        auto e1 = ring.sub(ring.one(), f);
        if (!facts.inverse(u)) {
            rep.counterexample("r + ry - 1 is not a unit for x = " + ring.label(x));
            continue;
        }
        if (ring.mul(e1, w.e) != ring.zero())
            continue;
        CleanWitness cw{u, ring.add(e1, w.e)};
        ++rep.stats().witnesses_produced;
        if (is_idempotent(ring, cw.e) && certifies_clean(ring, x, cw)) {
            built[x] = 1;
            ++merged;
        } else {
            rep.counterexample("merged witness fails for " + ring.label(x));
        }
    }
    // The merge covers only part of R, so compare it as a subset of the search.
    for (Elem x = 0; x < ring.order(); ++x) {
        rep.stats().constructive_certified += built[x];
        rep.stats().brute_force_certified += brute[x];
        if (built[x] && !brute[x]) {
            ++rep.stats().discrepancies;
            rep.counterexample("merge certifies " + ring.label(x) + " but search finds it not clean");
        }
    }
    rep.note("e1 + e2 merge built for " + std::to_string(merged) + " of " + std::to_string(ring.order()) +
             " elements; the rest have e1 e2 != 0 and are certified clean by direct search");
    return rep.finish();
}

} // namespace ringlab
