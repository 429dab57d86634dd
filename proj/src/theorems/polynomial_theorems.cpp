#include "common.hpp"

#include <algorithm>

namespace ringlab {

using detail::ReportBuilder;

namespace {

inline constexpr std::uint64_t kMaxEnumeratedPolys = 4'000'000;

std::uint64_t count_polys(std::size_t order, int degree)
{
    std::uint64_t n = 1;
    for (int i = 0; i <= degree; ++i) {
        if (n > kMaxEnumeratedPolys / std::max<std::size_t>(order, 1))
            return kMaxEnumeratedPolys + 1;
        n *= order;
    }
    return n;
}

// Odometer over coefficient vectors, a_0 fastest.
bool next_coeffs(std::vector<Elem>& c, std::size_t order)
{
    for (auto& a : c) {
        if (++a < order)
            return true;
        a = 0;
    }
    return false;
}

void check_degree(int d, const char* what)
{
    if (d < 0 || d > kMaxPolyDegree)
        throw RingError(std::string(what) + " must be in 0.." + std::to_string(kMaxPolyDegree));
}

class Budget {
public:
    explicit Budget(std::uint64_t total) : left_(total) {}

    std::optional<BoundedPolynomial> search(const BoundedPolynomial& f, int cap)
    {
        PolySearchStats stats;
        PolySearchOptions opts{left_};
        auto g = poly_regular_witness_search(f, cap, opts, &stats);
        left_ = stats.nodes >= left_ ? 1 : left_ - stats.nodes;
        used_ += stats.nodes;
        return g;
    }
    std::uint64_t used() const { return used_; }

private:
    std::uint64_t left_;
    std::uint64_t used_ = 0;
};

} // namespace

VerifyReport verify_poly_lemma(const FiniteRing& ring, int deg_f, int deg_g, const VerifyOptions& options)
{
    check_degree(deg_f, "d_f");
    check_degree(deg_g, "d_g");
    if (!is_commutative(ring))
        throw NotApplicableError("the statement assumes a commutative ring");
    ReportBuilder rep(theorem_name(TheoremId::PolyLemma), ring);
    auto total = count_polys(ring.order(), deg_f);
    if (total > kMaxEnumeratedPolys)
        throw BudgetExceeded("poly-lemma: more than " + std::to_string(kMaxEnumeratedPolys) +
                             " polynomials of degree <= " + std::to_string(deg_f));

    RingFacts facts(ring);
    std::vector<char> nilpotent(ring.order());
    for (Elem a = 0; a < ring.order(); ++a)
        nilpotent[a] = is_nilpotent(ring, a).has_value();

    Budget budget(options.poly_budget);
    std::uint64_t regular = 0, nonconstant = 0;
    std::vector<Elem> c(static_cast<std::size_t>(deg_f) + 1, 0);
    do {
        BoundedPolynomial f(ring, c);
        ++rep.stats().elements_checked;
        bool conclusion = facts.is_regular(f.coeff(0));
        for (int i = 1; i <= f.degree(); ++i)
            conclusion &= nilpotent[f.coeff(static_cast<std::size_t>(i))] != 0;
        rep.stats().brute_force_certified += conclusion;

        auto g = budget.search(f, deg_g);
        if (!g)
            continue;
        ++rep.stats().witnesses_produced;
        if (!(poly_mul(poly_mul(f, *g), f) == f)) {
            rep.counterexample("search returned g = " + g->to_string() + " with f g f != f for f = " + f.to_string());
            continue;
        }
        ++regular;
        ++rep.stats().constructive_certified;
        nonconstant += f.degree() >= 1;
        if (!conclusion) {
            ++rep.stats().discrepancies;
            rep.counterexample("f = " + f.to_string() + " is regular (g = " + g->to_string() +
                               ") but its coefficients break the conclusion");
        }
    } while (next_coeffs(c, ring.order()));

    rep.note("bounded evidence: g searched up to degree " + std::to_string(deg_g));
    rep.note(std::to_string(regular) + " of " + std::to_string(total) + " polynomials of degree <= " +
             std::to_string(deg_f) + " found regular, " + std::to_string(nonconstant) + " nonconstant");
    rep.note(std::to_string(budget.used()) + " search nodes");
    return rep.finish();
}

VerifyReport verify_x_not_rclean(const FiniteRing& ring, int deg_g, const VerifyOptions& options)
{
    check_degree(deg_g, "d_g");
    if (!is_commutative(ring))
        throw NotApplicableError("the statement assumes a commutative ring");
    if (ring.order() <= 1)
        throw NotApplicableError("zero ring: 1 = 0 is nilpotent");
    ReportBuilder rep(theorem_name(TheoremId::XNotRClean), ring);
    Budget budget(options.poly_budget);

    auto ids = idempotents(ring);
    for (auto e : ids) {
        ++rep.stats().elements_checked;
        auto f = BoundedPolynomial::x_minus(ring, e);
        if (auto g = budget.search(f, deg_g)) {
            ++rep.stats().witnesses_produced;
            rep.counterexample(f.to_string() + " is regular with g = " + g->to_string());
        }
    }
    rep.note("bounded evidence: no g of degree <= " + std::to_string(deg_g) + " makes x - e regular, for all " +
             std::to_string(ids.size()) + " idempotents e");

    if (auto k = is_nilpotent(ring, ring.one()))
        rep.counterexample("1 is nilpotent of index " + std::to_string(*k));
    else
        rep.note("complete: 1 is not nilpotent");

    // Idempotents of R[x] are constant; checked on degree <= 2.
    auto n = count_polys(ring.order(), 2);
    if (n <= kMaxEnumeratedPolys) {
        std::vector<Elem> c(3, 0);
        do {
            BoundedPolynomial p(ring, c);
            if (p.degree() >= 1 && poly_mul(p, p) == p)
                rep.counterexample("nonconstant idempotent " + p.to_string());
        } while (next_coeffs(c, ring.order()));
        rep.note("idempotents of R[x] of degree <= 2 are constant");
    }
    return rep.finish();
}

} // namespace ringlab
