#include "ringlab/polynomial.hpp"

#include <algorithm>
#include <sstream>

namespace ringlab {

BoundedPolynomial::BoundedPolynomial(FiniteRing base, std::vector<Elem> coefficients)
    : base_(std::move(base)), coeffs_(std::move(coefficients))
{
    for (auto c : coeffs_)
        base_.checked(c);
    while (!coeffs_.empty() && coeffs_.back() == base_.zero())
        coeffs_.pop_back();
    if (degree() > kMaxPolyDegree)
        throw RingError("polynomial degree " + std::to_string(degree()) + " exceeds cap " +
                        std::to_string(kMaxPolyDegree));
}

BoundedPolynomial BoundedPolynomial::x_minus(FiniteRing base, Elem c)
{
    auto minus_c = base.neg(base.checked(c));
    auto one = base.one();
    return {std::move(base), {minus_c, one}};
}

Elem BoundedPolynomial::coeff(std::size_t i) const
{
    return i < coeffs_.size() ? coeffs_[i] : base_.zero();
}

std::string BoundedPolynomial::to_string() const
{
    if (is_zero())
        return "0";
    std::ostringstream os;
    bool first = true;
    for (std::size_t i = 0; i < coeffs_.size(); ++i) {
        if (coeffs_[i] == base_.zero())
            continue;
        if (!first)
            os << " + ";
        first = false;
        bool unit_coeff = coeffs_[i] == base_.one() && i > 0;
        if (!unit_coeff)
            os << base_.label(coeffs_[i]);
        if (i >= 1)
            os << 'x';
        if (i >= 2)
            os << '^' << i;
    }
    return os.str();
}

BoundedPolynomial poly_add(const BoundedPolynomial& f, const BoundedPolynomial& g)
{
    const auto& R = f.base();
    auto n = std::max(f.coefficients().size(), g.coefficients().size());
    std::vector<Elem> c(n);
    for (std::size_t i = 0; i < n; ++i)
        c[i] = R.add(f.coeff(i), g.coeff(i));
    return {R, std::move(c)};
}

BoundedPolynomial poly_sub(const BoundedPolynomial& f, const BoundedPolynomial& g)
{
    const auto& R = f.base();
    auto n = std::max(f.coefficients().size(), g.coefficients().size());
    std::vector<Elem> c(n);
    for (std::size_t i = 0; i < n; ++i)
        c[i] = R.sub(f.coeff(i), g.coeff(i));
    return {R, std::move(c)};
}

BoundedPolynomial poly_mul(const BoundedPolynomial& f, const BoundedPolynomial& g)
{
    const auto& R = f.base();
    if (f.is_zero() || g.is_zero())
        return BoundedPolynomial::zero(R);
    auto fa = f.coefficients();
    auto ga = g.coefficients();
    std::vector<Elem> c(fa.size() + ga.size() - 1, R.zero());
    for (std::size_t i = 0; i < fa.size(); ++i)
        for (std::size_t j = 0; j < ga.size(); ++j)
            c[i + j] = R.add(c[i + j], R.mul(fa[i], ga[j]));
    return {R, std::move(c)};
}

namespace {

class InnerInverseSearch {
public:
    InnerInverseSearch(const BoundedPolynomial& f, int cap, const PolySearchOptions& opts,
                       PolySearchStats& stats)
        : R_(f.base()), a_(f.coefficients().begin(), f.coefficients().end()),
          n_(static_cast<std::size_t>(f.degree())), d_(static_cast<std::size_t>(cap)), opts_(opts),
          stats_(stats), b_(d_ + 1, R_.zero())
    {
        ascending_ = kernel_size(a_.front()) <= kernel_size(a_.back());
        build_candidates();
    }

    std::optional<std::vector<Elem>> run()
    {
        if (assign(0))
            return b_;
        return std::nullopt;
    }

private:
    std::size_t kernel_size(Elem a) const
    {
        std::size_t k = 0;
        for (Elem b = 0; b < R_.order(); ++b)
            if (R_.mul(R_.mul(a, b), a) == R_.zero())
                ++k;
        return k;
    }

    // A coefficient b of g enters every equation only through the products
    // a_i b a_l, so values agreeing on all of them are interchangeable. Keep
    // the least value of each class.
    void build_candidates()
    {
        const auto w = (n_ + 1) * (n_ + 1);
        std::vector<Elem> sig(static_cast<std::size_t>(R_.order()) * w);
        for (Elem b = 0; b < R_.order(); ++b)
            for (std::size_t i = 0; i <= n_; ++i) {
                auto ab = R_.mul(a_[i], b);
                for (std::size_t l = 0; l <= n_; ++l)
                    sig[b * w + i * (n_ + 1) + l] = R_.mul(ab, a_[l]);
            }
        std::vector<Elem> order(R_.order());
        for (Elem b = 0; b < R_.order(); ++b)
            order[b] = b;
        auto key = [&](Elem b) { return sig.begin() + static_cast<std::ptrdiff_t>(b * w); };
        std::stable_sort(order.begin(), order.end(), [&](Elem x, Elem y) {
            return std::lexicographical_compare(key(x), key(x) + static_cast<std::ptrdiff_t>(w), key(y),
                                                key(y) + static_cast<std::ptrdiff_t>(w));
        });
        for (std::size_t i = 0; i < order.size(); ++i)
            if (i == 0 || !std::equal(key(order[i]), key(order[i]) + static_cast<std::ptrdiff_t>(w), key(order[i - 1])))
                candidates_.push_back(order[i]);
        std::sort(candidates_.begin(), candidates_.end());
    }

    // Coefficient j of f g f against coefficient j of f.
    bool equation_holds(std::size_t j) const
    {
        Elem acc = R_.zero();
        for (std::size_t i = 0; i <= n_ && i <= j; ++i)
            for (std::size_t l = 0; l <= n_ && i + l <= j; ++l) {
                auto k = j - i - l;
                if (k > d_)
                    continue;
                acc = R_.add(acc, R_.mul(R_.mul(a_[i], b_[k]), a_[l]));
            }
        Elem target = j <= n_ ? a_[j] : R_.zero();
        return acc == target;
    }

    // Equations whose unknowns became fully assigned with the step-th assignment.
    bool newly_complete_hold(std::size_t step) const
    {
        const auto top = 2 * n_ + d_;
        if (ascending_) {
            auto m = step; // assigned b_0..b_m
            if (m < d_)
                return equation_holds(m);
            for (std::size_t j = d_; j <= top; ++j)
                if (!equation_holds(j))
                    return false;
            return true;
        }
        auto m = d_ - step; // assigned b_m..b_d
        if (m > 0)
            return equation_holds(2 * n_ + m);
        for (std::size_t j = 0; j <= 2 * n_; ++j)
            if (!equation_holds(j))
                return false;
        return true;
    }

    bool assign(std::size_t step)
    {
        if (step > d_)
            return true;
        auto k = ascending_ ? step : d_ - step;
        for (auto c : candidates_) {
            if (++stats_.nodes > opts_.node_budget && opts_.node_budget)
                throw BudgetExceeded("polynomial search exceeded node budget of " +
                                     std::to_string(opts_.node_budget));
            b_[k] = c;
            if (newly_complete_hold(step) && assign(step + 1))
                return true;
        }
        b_[k] = R_.zero();
        return false;
    }

    const FiniteRing& R_;
    std::vector<Elem> a_;
    std::size_t n_;
    std::size_t d_;
    const PolySearchOptions& opts_;
    PolySearchStats& stats_;
    std::vector<Elem> b_;
    std::vector<Elem> candidates_;
    bool ascending_ = true;
};

} // namespace

std::optional<BoundedPolynomial> poly_regular_witness_search(const BoundedPolynomial& f, int degree_cap,
                                                             const PolySearchOptions& options,
                                                             PolySearchStats* stats)
{
    if (degree_cap < 0)
        throw RingError("polynomial search degree cap must be non-negative");
    if (degree_cap > kMaxPolyDegree)
        throw RingError("polynomial search degree cap exceeds " + std::to_string(kMaxPolyDegree));
    if (f.is_zero())
        return BoundedPolynomial::zero(f.base());
    PolySearchStats local;
    InnerInverseSearch search(f, degree_cap, options, stats ? *stats : local);
    auto b = search.run();
    if (!b)
        return std::nullopt;
    return BoundedPolynomial(f.base(), std::move(*b));
}

} // namespace ringlab
