#include "common.hpp"

namespace ringlab {

using detail::Mask;
using detail::ReportBuilder;

namespace {

struct Corner {
    Elem e;
    FiniteRing ring;
    RingFacts facts;
};

std::vector<Corner> corners_of(const FiniteRing& ring, std::span<const Elem> es)
{
    std::vector<Corner> out;
    for (auto e : es) {
        auto c = make_corner(ring, e);
        out.push_back({e, c, RingFacts(c)});
    }
    return out;
}

bool residue_vanishes(const FiniteRing& ring, std::span<const Corner> cs, std::optional<Elem>& bad)
{
    for (Elem x = 0; x < ring.order(); ++x) {
        Elem sum = ring.zero();
        for (const auto& c : cs)
            sum = ring.add(sum, ring.mul(ring.mul(c.e, x), c.e));
        if (sum != x) {
            bad = x;
            return false;
        }
    }
    return true;
}

bool all_r_clean(const RingFacts& facts, std::optional<Elem>& bad)
{
    for (Elem x = 0; x < facts.ring().order(); ++x)
        if (!facts.r_clean_witness(x)) {
            bad = x;
            return false;
        }
    return true;
}

// Blockwise assembly: witnesses of e_i x e_i in each corner, summed in R.
Mask assemble(const FiniteRing& ring, std::span<const Corner> cs, ReportBuilder& rep)
{
    Mask built(ring.order());
    for (Elem x = 0; x < ring.order(); ++x) {
        ++rep.stats().elements_checked;
        RCleanWitness w{ring.zero(), ring.zero(), ring.zero()};
        bool have = true;
        for (const auto& c : cs) {
            auto part = c.ring.from_inner(ring.mul(ring.mul(c.e, x), c.e));
            auto cw = part ? c.facts.r_clean_witness(*part) : std::nullopt;
            if (!cw) {
                have = false;
                break;
            }
            w.r = ring.add(w.r, c.ring.to_inner(cw->r));
            w.e = ring.add(w.e, c.ring.to_inner(cw->e));
            w.y = ring.add(w.y, c.ring.to_inner(cw->y));
        }
        if (!have)
            continue;
        ++rep.stats().witnesses_produced;
        if (certifies_r_clean(ring, x, w))
            built[x] = 1;
        else
            rep.counterexample("assembled witness fails for " + ring.label(x));
    }
    return built;
}

Mask brute_mask(const RingFacts& facts)
{
    Mask m(facts.ring().order());
    for (Elem x = 0; x < m.size(); ++x)
        m[x] = facts.r_clean_witness(x).has_value();
    return m;
}

} // namespace

VerifyReport assemble_pierce(const FiniteRing& ring, Elem e)
{
    ring.checked(e);
    if (!is_idempotent(ring, e) || !is_central(ring, e))
        throw RingError(ring.label(e) + " is not a central idempotent of " + detail::ring_name(ring));
    ReportBuilder rep(theorem_name(TheoremId::Pierce), ring);
    Elem es[] = {e, ring.sub(ring.one(), e)};
    auto cs = corners_of(ring, es);

    std::optional<Elem> bad;
    bool ok = rep.require("mixed Pierce components vanish", residue_vanishes(ring, cs, bad),
                          bad ? "residue at " + ring.label(*bad) : "");
    for (const auto& c : cs) {
        std::optional<Elem> miss;
        ok &= rep.require("corner at " + ring.label(c.e) + " is r-clean", all_r_clean(c.facts, miss),
                          miss ? c.ring.label(*miss) + " is not r-clean" : "");
    }
    if (!ok)
        return rep.finish();
    RingFacts facts(ring);
    rep.compare(ring, assemble(ring, cs, rep), brute_mask(facts), "assembled");
    rep.note("e = " + ring.label(e) + ": corners of order " + std::to_string(cs[0].ring.order()) + " and " +
             std::to_string(cs[1].ring.order()));
    return rep.finish();
}

VerifyReport verify_orthogonal_set(const FiniteRing& ring, std::span<const Elem> idempotents)
{
    ReportBuilder rep(theorem_name(TheoremId::OrthogonalSet), ring);
    bool ok = true;
    Elem sum = ring.zero();
    for (auto e : idempotents) {
        ring.checked(e);
        ok &= rep.require(ring.label(e) + " is a central idempotent", is_idempotent(ring, e) && is_central(ring, e));
        sum = ring.add(sum, e);
    }
    for (std::size_t i = 0; i < idempotents.size(); ++i)
        for (std::size_t j = i + 1; j < idempotents.size(); ++j) {
            auto a = idempotents[i], b = idempotents[j];
            ok &= rep.require(ring.label(a) + " * " + ring.label(b) + " = 0",
                              ring.mul(a, b) == ring.zero() && ring.mul(b, a) == ring.zero());
        }
    ok &= rep.require("idempotents sum to 1", sum == ring.one(), "sum is " + ring.label(sum));
    if (!ok)
        return rep.finish();

    auto cs = corners_of(ring, idempotents);
    std::optional<Elem> bad;
    if (!rep.require("mixed Pierce components vanish", residue_vanishes(ring, cs, bad),
                     bad ? "residue at " + ring.label(*bad) : ""))
        return rep.finish();

    RingFacts facts(ring);
    auto brute = brute_mask(facts);

    // R to corners: x -> e x e is a surjective homomorphism onto e R e.
    for (const auto& c : cs) {
        Mask pushed(c.ring.order());
        for (Elem a = 0; a < c.ring.order(); ++a) {
            auto w = facts.r_clean_witness(c.ring.to_inner(a));
            if (!w)
                continue;
            auto push = [&](Elem v) { return *c.ring.from_inner(ring.mul(ring.mul(c.e, v), c.e)); };
            RCleanWitness cw{push(w->r), push(w->e), push(w->y)};
            ++rep.stats().witnesses_produced;
            if (certifies_r_clean(c.ring, a, cw))
                pushed[a] = 1;
            else
                rep.counterexample("pushed witness fails in corner at " + ring.label(c.e));
        }
        rep.compare(c.ring, pushed, brute_mask(c.facts), "corner at " + ring.label(c.e));
    }

    // Corners to R by iterated assembly.
    rep.compare(ring, assemble(ring, cs, rep), brute, "assembled");
    return rep.finish();
}

} // namespace ringlab
