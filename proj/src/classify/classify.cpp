#include "ringlab/classify.hpp"

#include <algorithm>
#include <functional>

namespace ringlab {

bool certifies_regular(const FiniteRing& R, Elem x, const RegularWitness& w)
{
    return R.mul(R.mul(x, w.y), x) == x;
}

bool certifies_clean(const FiniteRing& R, Elem x, const CleanWitness& w)
{
    return R.add(w.u, w.e) == x && R.mul(w.e, w.e) == w.e && is_unit(R, w.u).has_value();
}

bool certifies_r_clean(const FiniteRing& R, Elem x, const RCleanWitness& w)
{
    return R.add(w.r, w.e) == x && R.mul(w.e, w.e) == w.e && R.mul(R.mul(w.r, w.y), w.r) == w.r;
}

std::optional<Elem> is_unit(const FiniteRing& R, Elem x)
{
    // A right inverse found by scan is accepted only once it is also a left inverse.
    for (Elem y = 0; y < R.order(); ++y)
        if (R.mul(x, y) == R.one() && R.mul(y, x) == R.one())
            return y;
    return std::nullopt;
}

bool is_idempotent(const FiniteRing& R, Elem x) { return R.mul(x, x) == x; }

std::optional<std::size_t> is_nilpotent(const FiniteRing& R, Elem x)
{
    Elem p = x;
    for (std::size_t k = 1; k <= R.order(); ++k) {
        if (p == R.zero())
            return k;
        p = R.mul(p, x);
    }
    return std::nullopt;
}

std::optional<RegularWitness> regular_witness(const FiniteRing& R, Elem x)
{
    for (Elem y = 0; y < R.order(); ++y)
        if (R.mul(R.mul(x, y), x) == x)
            return RegularWitness{y};
    return std::nullopt;
}

std::optional<Elem> unit_regular_witness(const FiniteRing& R, Elem x)
{
    for (Elem u = 0; u < R.order(); ++u)
        if (R.mul(R.mul(x, u), x) == x && is_unit(R, u))
            return u;
    return std::nullopt;
}

std::optional<CleanWitness> clean_witness(const FiniteRing& R, Elem x)
{
    for (Elem e = 0; e < R.order(); ++e) {
        if (!is_idempotent(R, e))
            continue;
        auto u = R.sub(x, e);
        if (is_unit(R, u))
            return CleanWitness{u, e};
    }
    return std::nullopt;
}

std::optional<RCleanWitness> r_clean_witness(const FiniteRing& R, Elem x)
{
    for (Elem e = 0; e < R.order(); ++e) {
        if (!is_idempotent(R, e))
            continue;
        auto r = R.sub(x, e);
        if (auto w = regular_witness(R, r))
            return RCleanWitness{r, e, w->y};
    }
    return std::nullopt;
}

namespace {

std::vector<char> right_multiples(const FiniteRing& R, Elem x)
{
    std::vector<char> in(R.order(), 0);
    for (Elem r = 0; r < R.order(); ++r)
        in[R.mul(x, r)] = 1;
    return in;
}

} // namespace

std::optional<Elem> exchange_witness(const FiniteRing& R, Elem x)
{
    auto xR = right_multiples(R, x);
    auto yR = right_multiples(R, R.sub(R.one(), x));
    for (Elem e = 0; e < R.order(); ++e)
        if (is_idempotent(R, e) && xR[e] && yR[R.sub(R.one(), e)])
            return e;
    return std::nullopt;
}

bool is_central(const FiniteRing& R, Elem x)
{
    for (Elem y = 0; y < R.order(); ++y)
        if (R.mul(x, y) != R.mul(y, x))
            return false;
    return true;
}

std::vector<Elem> idempotents(const FiniteRing& R)
{
    std::vector<Elem> out;
    for (Elem e = 0; e < R.order(); ++e)
        if (is_idempotent(R, e))
            out.push_back(e);
    return out;
}

namespace {

std::vector<std::optional<Elem>> inverse_table(const FiniteRing& R)
{
    std::vector<std::optional<Elem>> inv(R.order());
    for (Elem x = 0; x < R.order(); ++x) {
        if (inv[x])
            continue;
        if (auto y = is_unit(R, x)) {
            inv[x] = *y;
            inv[*y] = x;
        }
    }
    return inv;
}

} // namespace

std::vector<Elem> units(const FiniteRing& R)
{
    auto inv = inverse_table(R);
    std::vector<Elem> out;
    for (Elem x = 0; x < R.order(); ++x)
        if (inv[x])
            out.push_back(x);
    return out;
}

std::vector<Elem> central_idempotents(const FiniteRing& R)
{
    std::vector<Elem> out;
    for (auto e : idempotents(R))
        if (is_central(R, e))
            out.push_back(e);
    return out;
}

std::vector<Elem> primitive_central_idempotents(const FiniteRing& R)
{
    auto cs = central_idempotents(R);
    std::vector<Elem> out;
    for (auto e : cs) {
        if (e == R.zero())
            continue;
        bool minimal = std::none_of(cs.begin(), cs.end(), [&](Elem f) {
            return f != R.zero() && f != e && R.mul(f, e) == f;
        });
        if (minimal)
            out.push_back(e);
    }
    return out;
}

std::vector<Elem> jacobson_radical(const FiniteRing& R)
{
    auto inv = inverse_table(R);
    std::vector<Elem> out;
    for (Elem x = 0; x < R.order(); ++x) {
        bool in = true;
        for (Elem a = 0; a < R.order() && in; ++a)
            in = inv[R.sub(R.one(), R.mul(a, x))].has_value();
        if (in)
            out.push_back(x);
    }
    return out;
}

bool is_local(const FiniteRing& R)
{
    if (R.order() <= 1)
        throw RingError("is_local: the zero ring is not local (R != 0 is required)");
    auto inv = inverse_table(R);
    auto J = jacobson_radical(R);
    std::vector<Elem> non_units;
    for (Elem x = 0; x < R.order(); ++x)
        if (!inv[x])
            non_units.push_back(x);
    return non_units == J;
}

DirectFiniteness is_directly_finite(const FiniteRing& R)
{
    for (Elem a = 0; a < R.order(); ++a)
        for (Elem b = 0; b < R.order(); ++b)
            if (R.mul(a, b) == R.one() && R.mul(b, a) != R.one())
                return {false, std::make_pair(a, b)};
    return {};
}

bool is_commutative(const FiniteRing& R)
{
    for (Elem a = 0; a < R.order(); ++a)
        for (Elem b = a + 1; b < R.order(); ++b)
            if (R.mul(a, b) != R.mul(b, a))
                return false;
    return true;
}

std::vector<Elem> local_idempotents(const FiniteRing& R)
{
    std::vector<Elem> out;
    for (auto e : idempotents(R)) {
        if (e == R.zero())
            continue;
        if (is_local(make_idempotent_corner(R, e)))
            out.push_back(e);
    }
    return out;
}

std::optional<std::vector<Elem>> complete_orthogonal_local_set(const FiniteRing& R)
{
    if (R.order() <= 1)
        return std::nullopt;
    auto cands = local_idempotents(R);
    std::vector<Elem> chosen;
    std::function<bool(std::size_t, Elem)> extend = [&](std::size_t from, Elem sum) {
        if (sum == R.one())
            return true;
        for (std::size_t i = from; i < cands.size(); ++i) {
            auto c = cands[i];
            bool orth = std::all_of(chosen.begin(), chosen.end(), [&](Elem f) {
                return R.mul(c, f) == R.zero() && R.mul(f, c) == R.zero();
            });
            if (!orth)
                continue;
            chosen.push_back(c);
            if (extend(i + 1, R.add(sum, c)))
                return true;
            chosen.pop_back();
        }
        return false;
    };
    if (extend(0, R.zero()))
        return chosen;
    return std::nullopt;
}

// ---------------------------------------------------------------------------
// RingFacts

RingFacts::RingFacts(FiniteRing ring) : ring_(std::move(ring))
{
    const auto& R = ring_;
    idempotents_ = ringlab::idempotents(R);
    inverse_ = inverse_table(R);
    regular_y_.resize(R.order());
    for (Elem x = 0; x < R.order(); ++x)
        if (auto w = ringlab::regular_witness(R, x))
            regular_y_[x] = w->y;
}

std::optional<RegularWitness> RingFacts::regular_witness(Elem x) const
{
    if (!regular_y_[x])
        return std::nullopt;
    return RegularWitness{*regular_y_[x]};
}

std::optional<CleanWitness> RingFacts::clean_witness(Elem x) const
{
    for (auto e : idempotents_) {
        auto u = ring_.sub(x, e);
        if (inverse_[u])
            return CleanWitness{u, e};
    }
    return std::nullopt;
}

std::optional<RCleanWitness> RingFacts::r_clean_witness(Elem x) const
{
    for (auto e : idempotents_) {
        auto r = ring_.sub(x, e);
        if (regular_y_[r])
            return RCleanWitness{r, e, *regular_y_[r]};
    }
    return std::nullopt;
}

// ---------------------------------------------------------------------------
// Aggregates

ElementClass classify_element(const FiniteRing& R, Elem x)
{
    R.checked(x);
    ElementClass c;
    c.element = x;
    c.inverse = is_unit(R, x);
    c.unit = c.inverse.has_value();
    c.idempotent = is_idempotent(R, x);
    c.nilpotency_index = is_nilpotent(R, x);
    c.nilpotent = c.nilpotency_index.has_value();
    c.regular_witness = regular_witness(R, x);
    c.regular = c.regular_witness.has_value();
    c.unit_regular_witness = unit_regular_witness(R, x);
    c.unit_regular = c.unit_regular_witness.has_value();
    c.central = is_central(R, x);
    c.clean_witness = clean_witness(R, x);
    c.clean = c.clean_witness.has_value();
    c.r_clean_witness = r_clean_witness(R, x);
    c.r_clean = c.r_clean_witness.has_value();
    c.exchange_witness = exchange_witness(R, x);
    c.exchange = c.exchange_witness.has_value();
    return c;
}

RingProfile ring_profile(const FiniteRing& R)
{
    RingFacts facts(R);
    RingProfile p;
    p.order = R.order();
    p.idempotents.assign(facts.idempotents().begin(), facts.idempotents().end());
    for (Elem x = 0; x < R.order(); ++x) {
        if (facts.inverse(x))
            p.units.push_back(x);
        if (!p.not_clean && !facts.clean_witness(x))
            p.not_clean = x;
        if (!p.not_r_clean && !facts.r_clean_witness(x))
            p.not_r_clean = x;
        if (!p.not_regular && !facts.is_regular(x))
            p.not_regular = x;
        if (!p.not_exchange && !exchange_witness(R, x))
            p.not_exchange = x;
    }
    p.clean = !p.not_clean;
    p.r_clean = !p.not_r_clean;
    p.regular = !p.not_regular;
    p.exchange = !p.not_exchange;
    for (auto e : p.idempotents)
        if (is_central(R, e))
            p.central_idempotents.push_back(e);
    p.jacobson_radical = jacobson_radical(R);

    auto df = is_directly_finite(R);
    p.directly_finite = df.holds;
    p.not_directly_finite = df.counterexample;

    for (Elem a = 0; a < R.order() && !p.not_commutative; ++a)
        for (Elem b = a + 1; b < R.order(); ++b)
            if (R.mul(a, b) != R.mul(b, a)) {
                p.not_commutative = std::make_pair(a, b);
                break;
            }
    p.commutative = !p.not_commutative;

    if (R.order() <= 1) {
        p.local = false;
        p.notes.push_back("R = 0: most theorems not applicable (the zero ring is not local)");
    } else {
        p.local = is_local(R);
    }
    // A finite ring has no infinite orthogonal family of idempotents, so
    // semiperfect reduces to clean.
    p.semiperfect = p.clean;
    p.notes.push_back("semiperfect = clean: a finite ring has no infinite orthogonal family of idempotents");
    return p;
}

} // namespace ringlab
