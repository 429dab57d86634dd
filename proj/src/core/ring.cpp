#include "ringlab/ring.hpp"

#include <algorithm>
#include <limits>
#include <numeric>
#include <sstream>

namespace ringlab {

namespace detail {

struct RingData {
    RingExpr expr;
    std::size_t order = 0;
    Elem zero = 0;
    Elem one = 0;

    std::uint64_t modulus = 0; // ZMod

    // Mixed-radix codec, first slot most significant.
    std::vector<FiniteRing> slots;
    std::vector<std::size_t> weights;

    std::vector<FiniteRing> children; // inner ring for unary constructions
    std::size_t dim = 0;
    TriShape shape = TriShape::Lower;
    std::vector<std::pair<std::size_t, std::size_t>> tri_pos;
    std::vector<std::int64_t> tri_slot; // (row * n + col) -> slot, or -1
    std::optional<GroupSpec> group;

    // Corner.
    Elem corner_e = 0;
    std::vector<Elem> corner_elems;
    std::vector<std::int64_t> corner_of; // inner -> corner index, or -1

    // Quotient.
    Ideal ideal;
    std::vector<Elem> reps;
    std::vector<Elem> coset_of;

    std::vector<std::uint16_t> add_tab;
    std::vector<std::uint16_t> mul_tab;
    std::vector<Elem> neg_tab;

    const FiniteRing& inner() const { return children.front(); }

    std::vector<Elem> unpack(Elem a) const
    {
        std::vector<Elem> parts(slots.size());
        for (std::size_t i = slots.size(); i-- > 0;) {
            auto r = slots[i].order();
            parts[i] = static_cast<Elem>(a % r);
            a = static_cast<Elem>(a / r);
        }
        return parts;
    }

    Elem pack(std::span<const Elem> parts) const
    {
        std::size_t a = 0;
        for (std::size_t i = 0; i < slots.size(); ++i)
            a += parts[i] * weights[i];
        return static_cast<Elem>(a);
    }

    Elem s_add(Elem a, Elem b) const
    {
        switch (expr.kind) {
        case ExprKind::ZMod:
            return static_cast<Elem>((std::uint64_t{a} + b) % modulus);
        case ExprKind::Corner:
            return static_cast<Elem>(corner_of[inner().add(corner_elems[a], corner_elems[b])]);
        case ExprKind::Quotient:
            return coset_of[inner().add(reps[a], reps[b])];
        default: {
            auto pa = unpack(a);
            auto pb = unpack(b);
            for (std::size_t i = 0; i < slots.size(); ++i)
                pa[i] = slots[i].add(pa[i], pb[i]);
            return pack(pa);
        }
        }
    }

    Elem s_neg(Elem a) const
    {
        switch (expr.kind) {
        case ExprKind::ZMod:
            return static_cast<Elem>((modulus - a) % modulus);
        case ExprKind::Corner:
            return static_cast<Elem>(corner_of[inner().neg(corner_elems[a])]);
        case ExprKind::Quotient:
            return coset_of[inner().neg(reps[a])];
        default: {
            auto pa = unpack(a);
            for (std::size_t i = 0; i < slots.size(); ++i)
                pa[i] = slots[i].neg(pa[i]);
            return pack(pa);
        }
        }
    }

    Elem s_mul(Elem a, Elem b) const
    {
        switch (expr.kind) {
        case ExprKind::ZMod:
            return static_cast<Elem>((std::uint64_t{a} * b) % modulus);
        case ExprKind::Corner:
            return static_cast<Elem>(corner_of[inner().mul(corner_elems[a], corner_elems[b])]);
        case ExprKind::Quotient:
            return coset_of[inner().mul(reps[a], reps[b])];
        case ExprKind::Product: {
            auto pa = unpack(a);
            auto pb = unpack(b);
            for (std::size_t i = 0; i < slots.size(); ++i)
                pa[i] = slots[i].mul(pa[i], pb[i]);
            return pack(pa);
        }
        case ExprKind::Matrix:
        case ExprKind::Triangular:
            return matrix_mul(a, b);
        case ExprKind::GroupRing: {
            const auto& R = inner();
            auto pa = unpack(a);
            auto pb = unpack(b);
            std::vector<Elem> out(slots.size(), R.zero());
            for (std::size_t g = 0; g < pa.size(); ++g) {
                if (pa[g] == R.zero())
                    continue;
                for (std::size_t h = 0; h < pb.size(); ++h) {
                    auto gh = group->op(g, h);
                    out[gh] = R.add(out[gh], R.mul(pa[g], pb[h]));
                }
            }
            return pack(out);
        }
        case ExprKind::TruncPoly: {
            const auto& R = inner();
            auto pa = unpack(a);
            auto pb = unpack(b);
            std::vector<Elem> out(slots.size(), R.zero());
            for (std::size_t i = 0; i < pa.size(); ++i)
                for (std::size_t j = 0; i + j < pb.size(); ++j)
                    out[i + j] = R.add(out[i + j], R.mul(pa[i], pb[j]));
            return pack(out);
        }
        }
        return 0;
    }

    // Full n x n entry grid, with zeros outside a triangular shape.
    std::vector<Elem> to_grid(Elem a) const
    {
        auto parts = unpack(a);
        if (expr.kind == ExprKind::Matrix)
            return parts;
        std::vector<Elem> grid(dim * dim, inner().zero());
        for (std::size_t s = 0; s < parts.size(); ++s)
            grid[tri_pos[s].first * dim + tri_pos[s].second] = parts[s];
        return grid;
    }

    Elem from_grid(const std::vector<Elem>& grid) const
    {
        if (expr.kind == ExprKind::Matrix)
            return pack(grid);
        std::vector<Elem> parts(tri_pos.size());
        for (std::size_t s = 0; s < parts.size(); ++s)
            parts[s] = grid[tri_pos[s].first * dim + tri_pos[s].second];
        return pack(parts);
    }

    Elem matrix_mul(Elem a, Elem b) const
    {
        const auto& R = inner();
        auto A = to_grid(a);
        auto B = to_grid(b);
        std::vector<Elem> C(dim * dim, R.zero());
        for (std::size_t i = 0; i < dim; ++i)
            for (std::size_t k = 0; k < dim; ++k) {
                auto aik = A[i * dim + k];
                if (aik == R.zero())
                    continue;
                for (std::size_t j = 0; j < dim; ++j)
                    C[i * dim + j] = R.add(C[i * dim + j], R.mul(aik, B[k * dim + j]));
            }
        return from_grid(C);
    }

    void set_codec(std::vector<FiniteRing> s)
    {
        slots = std::move(s);
        weights.assign(slots.size(), 1);
        std::size_t w = 1;
        for (std::size_t i = slots.size(); i-- > 0;) {
            weights[i] = w;
            w *= slots[i].order();
        }
        order = w;
    }

    void build_tables()
    {
        neg_tab.resize(order);
        for (Elem a = 0; a < order; ++a)
            neg_tab[a] = s_neg(a);
        if (order > kTableThreshold)
            return;
        add_tab.resize(order * order);
        mul_tab.resize(order * order);
        for (Elem a = 0; a < order; ++a)
            for (Elem b = 0; b < order; ++b) {
                add_tab[a * order + b] = static_cast<std::uint16_t>(s_add(a, b));
                mul_tab[a * order + b] = static_cast<std::uint16_t>(s_mul(a, b));
            }
    }
};

} // namespace detail

namespace {

using detail::RingData;

std::uint64_t sat_mul(std::uint64_t a, std::uint64_t b)
{
    if (a != 0 && b > std::numeric_limits<std::uint64_t>::max() / a)
        return std::numeric_limits<std::uint64_t>::max();
    return a * b;
}

std::uint64_t sat_pow(std::uint64_t base, std::uint64_t exp)
{
    if (base <= 1)
        return exp == 0 ? 1 : base;
    std::uint64_t r = 1;
    for (std::uint64_t i = 0; i < exp; ++i) {
        r = sat_mul(r, base);
        if (r == std::numeric_limits<std::uint64_t>::max())
            break;
    }
    return r;
}

void check_cap(const char* what, std::uint64_t required, std::size_t cap)
{
    if (required > cap)
        throw SizeCapError(what, required, cap);
}

FiniteRing finish(std::shared_ptr<RingData> d)
{
    d->build_tables();
    return FiniteRing(std::move(d));
}

// Composite constructions: slots are set, identity is given as slot values.
FiniteRing finish_composite(std::shared_ptr<RingData> d, const std::vector<Elem>& one_parts)
{
    std::vector<Elem> zeros(d->slots.size());
    for (std::size_t i = 0; i < zeros.size(); ++i)
        zeros[i] = d->slots[i].zero();
    d->zero = d->pack(zeros);
    d->one = d->pack(one_parts);
    return finish(std::move(d));
}

void join_labels(std::ostringstream& os, const std::vector<std::string>& parts)
{
    for (std::size_t i = 0; i < parts.size(); ++i) {
        if (i)
            os << ',';
        os << parts[i];
    }
}

} // namespace

SizeCapError::SizeCapError(std::string what_ring, std::uint64_t required, std::size_t cap)
    : RingError(what_ring + ": order " +
                (required == std::numeric_limits<std::uint64_t>::max() ? std::string("> 2^64")
                                                                       : std::to_string(required)) +
                " exceeds size cap " + std::to_string(cap)),
      required_(required), cap_(cap)
{
}

// ---------------------------------------------------------------------------
// GroupSpec

GroupSpec::GroupSpec(std::vector<std::vector<std::size_t>> table, GroupRef source)
    : table_(std::move(table)), source_(std::move(source))
{
    const auto m = table_.size();
    if (m == 0)
        throw RingError("group table is empty");
    for (const auto& row : table_) {
        if (row.size() != m)
            throw RingError("group table is not square");
        for (auto v : row)
            if (v >= m)
                throw RingError("group table entry " + std::to_string(v) + " out of range");
    }
    bool found = false;
    for (std::size_t e = 0; e < m && !found; ++e) {
        bool ok = true;
        for (std::size_t a = 0; a < m && ok; ++a)
            ok = table_[e][a] == a && table_[a][e] == a;
        if (ok) {
            identity_ = e;
            found = true;
        }
    }
    if (!found)
        throw RingError("group table has no identity");
    for (std::size_t a = 0; a < m; ++a)
        for (std::size_t b = 0; b < m; ++b)
            for (std::size_t c = 0; c < m; ++c)
                if (table_[table_[a][b]][c] != table_[a][table_[b][c]])
                    throw RingError("group table is not associative at (" + std::to_string(a) + "," +
                                    std::to_string(b) + "," + std::to_string(c) + ")");
    inverses_.assign(m, m);
    for (std::size_t a = 0; a < m; ++a) {
        for (std::size_t b = 0; b < m; ++b)
            if (table_[a][b] == identity_ && table_[b][a] == identity_) {
                inverses_[a] = b;
                break;
            }
        if (inverses_[a] == m)
            throw RingError("group element " + std::to_string(a) + " has no inverse");
    }
}

GroupSpec GroupSpec::cyclic(std::size_t m)
{
    if (m == 0)
        throw RingError("cyclic group order must be positive");
    std::vector<std::vector<std::size_t>> t(m, std::vector<std::size_t>(m));
    for (std::size_t a = 0; a < m; ++a)
        for (std::size_t b = 0; b < m; ++b)
            t[a][b] = (a + b) % m;
    GroupRef src;
    src.kind = GroupRef::Kind::Cyclic;
    src.order = m;
    return GroupSpec(std::move(t), std::move(src));
}

bool Ideal::contains(Elem x) const
{
    return std::binary_search(elements.begin(), elements.end(), x);
}

// ---------------------------------------------------------------------------
// FiniteRing accessors

FiniteRing::FiniteRing(std::shared_ptr<const detail::RingData> data) : data_(std::move(data)) {}

std::size_t FiniteRing::order() const { return data_->order; }
Elem FiniteRing::zero() const { return data_->zero; }
Elem FiniteRing::one() const { return data_->one; }

Elem FiniteRing::add(Elem a, Elem b) const
{
    const auto& d = *data_;
    if (!d.add_tab.empty())
        return d.add_tab[a * d.order + b];
    return d.s_add(a, b);
}

Elem FiniteRing::mul(Elem a, Elem b) const
{
    const auto& d = *data_;
    if (!d.mul_tab.empty())
        return d.mul_tab[a * d.order + b];
    return d.s_mul(a, b);
}

Elem FiniteRing::neg(Elem a) const { return data_->neg_tab[a]; }

Elem FiniteRing::from_int(std::int64_t k) const
{
    // Double-and-add on |k|, negated afterwards.
    auto mag = k < 0 ? static_cast<std::uint64_t>(-(k + 1)) + 1 : static_cast<std::uint64_t>(k);
    Elem acc = zero();
    Elem base = one();
    while (mag) {
        if (mag & 1)
            acc = add(acc, base);
        base = add(base, base);
        mag >>= 1;
    }
    return k < 0 ? neg(acc) : acc;
}

std::string FiniteRing::label(Elem a) const
{
    const auto& d = *data_;
    std::ostringstream os;
    switch (d.expr.kind) {
    case ExprKind::ZMod:
        os << a;
        break;
    case ExprKind::Product:
    case ExprKind::GroupRing:
    case ExprKind::TruncPoly: {
        auto parts = d.unpack(a);
        std::vector<std::string> labels;
        for (std::size_t i = 0; i < parts.size(); ++i)
            labels.push_back(d.slots[i].label(parts[i]));
        os << '(';
        join_labels(os, labels);
        os << ')';
        break;
    }
    case ExprKind::Matrix:
    case ExprKind::Triangular: {
        auto grid = d.to_grid(a);
        os << '[';
        for (std::size_t i = 0; i < d.dim; ++i) {
            if (i)
                os << ',';
            std::vector<std::string> labels;
            for (std::size_t j = 0; j < d.dim; ++j)
                labels.push_back(d.inner().label(grid[i * d.dim + j]));
            os << '[';
            join_labels(os, labels);
            os << ']';
        }
        os << ']';
        break;
    }
    case ExprKind::Corner:
        os << '<' << d.inner().label(d.corner_elems[a]) << '>';
        break;
    case ExprKind::Quotient:
        os << '{' << d.inner().label(d.reps[a]) << '}';
        break;
    }
    return os.str();
}

const RingExpr& FiniteRing::construction() const { return data_->expr; }
ExprKind FiniteRing::kind() const { return data_->expr.kind; }
bool FiniteRing::has_tables() const { return !data_->mul_tab.empty(); }

Elem FiniteRing::checked(std::uint64_t a) const
{
    if (a >= order())
        throw RingError("element index " + std::to_string(a) + " out of range for ring of order " +
                        std::to_string(order()));
    return static_cast<Elem>(a);
}

std::span<const FiniteRing> FiniteRing::slots() const { return data_->slots; }
std::vector<Elem> FiniteRing::unpack(Elem a) const { return data_->unpack(a); }

Elem FiniteRing::pack(std::span<const Elem> parts) const
{
    if (parts.size() != data_->slots.size())
        throw RingError("wrong number of components: expected " + std::to_string(data_->slots.size()) +
                        ", got " + std::to_string(parts.size()));
    for (std::size_t i = 0; i < parts.size(); ++i)
        data_->slots[i].checked(parts[i]);
    return data_->pack(parts);
}

const FiniteRing& FiniteRing::inner() const
{
    if (data_->children.empty())
        throw RingError("ring has no inner ring");
    return data_->children.front();
}

std::size_t FiniteRing::dimension() const
{
    return data_->expr.kind == ExprKind::ZMod ? static_cast<std::size_t>(data_->modulus) : data_->dim;
}

TriShape FiniteRing::shape() const { return data_->shape; }

std::span<const std::pair<std::size_t, std::size_t>> FiniteRing::triangular_positions() const
{
    return data_->tri_pos;
}

const GroupSpec& FiniteRing::group() const
{
    if (!data_->group)
        throw RingError("ring is not a group ring");
    return *data_->group;
}

Elem FiniteRing::to_inner(Elem a) const { return data_->corner_elems.at(a); }

std::optional<Elem> FiniteRing::from_inner(Elem inner_elem) const
{
    const auto& m = data_->corner_of;
    if (inner_elem >= m.size() || m[inner_elem] < 0)
        return std::nullopt;
    return static_cast<Elem>(m[inner_elem]);
}

Elem FiniteRing::corner_idempotent() const { return data_->corner_e; }
Elem FiniteRing::representative(Elem coset) const { return data_->reps.at(coset); }
Elem FiniteRing::project(Elem inner_elem) const { return data_->coset_of.at(inner_elem); }
const Ideal& FiniteRing::ideal() const { return data_->ideal; }

// ---------------------------------------------------------------------------
// Constructions

FiniteRing make_zmod(std::uint64_t n, std::size_t size_cap)
{
    if (n == 0)
        throw RingError("Z0 is not a finite ring: modulus must be positive");
    check_cap("ZMod", n, size_cap);
    auto d = std::make_shared<RingData>();
    d->expr = RingExpr::zmod(n);
    d->modulus = n;
    d->order = static_cast<std::size_t>(n);
    d->zero = 0;
    d->one = static_cast<Elem>(1 % n);
    return finish(std::move(d));
}

FiniteRing make_product(std::span<const FiniteRing> factors, std::size_t size_cap)
{
    if (factors.empty())
        throw RingError("product of an empty list of rings");
    std::uint64_t required = 1;
    for (const auto& f : factors)
        required = sat_mul(required, f.order());
    check_cap("product", required, size_cap);

    auto d = std::make_shared<RingData>();
    std::vector<RingExpr> exprs;
    std::vector<Elem> ones;
    for (const auto& f : factors) {
        exprs.push_back(f.construction());
        ones.push_back(f.one());
    }
    d->expr = RingExpr::product(std::move(exprs));
    d->set_codec({factors.begin(), factors.end()});
    return finish_composite(std::move(d), ones);
}

FiniteRing make_matrix_ring(const FiniteRing& inner, std::size_t n, std::size_t size_cap)
{
    if (n == 0)
        throw RingError("matrix size must be positive");
    check_cap("matrix ring entries", sat_mul(n, n), size_cap);
    check_cap("matrix ring", sat_pow(inner.order(), sat_mul(n, n)), size_cap);
    auto d = std::make_shared<RingData>();
    d->expr = RingExpr::matrix(n, inner.construction());
    d->children = {inner};
    d->dim = n;
    d->set_codec(std::vector<FiniteRing>(n * n, inner));
    std::vector<Elem> ones(n * n, inner.zero());
    for (std::size_t i = 0; i < n; ++i)
        ones[i * n + i] = inner.one();
    return finish_composite(std::move(d), ones);
}

FiniteRing make_triangular_ring(const FiniteRing& inner, std::size_t n, TriShape shape, std::size_t size_cap)
{
    if (n == 0)
        throw RingError("triangular matrix size must be positive");
    check_cap("triangular ring entries", sat_mul(n, n + 1) / 2, size_cap);
    check_cap("triangular ring", sat_pow(inner.order(), sat_mul(n, n + 1) / 2), size_cap);
    auto d = std::make_shared<RingData>();
    d->expr = RingExpr::triangular(n, inner.construction(), shape);
    d->children = {inner};
    d->dim = n;
    d->shape = shape;
    d->tri_slot.assign(n * n, -1);
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = 0; j < n; ++j)
            if (shape == TriShape::Lower ? i >= j : i <= j) {
                d->tri_slot[i * n + j] = static_cast<std::int64_t>(d->tri_pos.size());
                d->tri_pos.emplace_back(i, j);
            }
    d->set_codec(std::vector<FiniteRing>(d->tri_pos.size(), inner));
    std::vector<Elem> ones(d->tri_pos.size(), inner.zero());
    for (std::size_t i = 0; i < n; ++i)
        ones[static_cast<std::size_t>(d->tri_slot[i * n + i])] = inner.one();
    return finish_composite(std::move(d), ones);
}

FiniteRing make_group_ring(const FiniteRing& inner, const GroupSpec& group, std::size_t size_cap)
{
    check_cap("group ring coefficients", group.order(), size_cap);
    check_cap("group ring", sat_pow(inner.order(), group.order()), size_cap);
    auto d = std::make_shared<RingData>();
    d->expr = RingExpr::group_ring(inner.construction(), group.source());
    d->children = {inner};
    d->group = group;
    d->dim = group.order();
    d->set_codec(std::vector<FiniteRing>(group.order(), inner));
    std::vector<Elem> ones(group.order(), inner.zero());
    ones[group.identity()] = inner.one();
    return finish_composite(std::move(d), ones);
}

FiniteRing make_trunc_poly(const FiniteRing& inner, std::size_t k, std::size_t size_cap)
{
    if (k == 0)
        throw RingError("truncation length must be positive");
    check_cap("truncated polynomial coefficients", k, size_cap);
    check_cap("truncated polynomial ring", sat_pow(inner.order(), k), size_cap);
    auto d = std::make_shared<RingData>();
    d->expr = RingExpr::trunc_poly(inner.construction(), k);
    d->children = {inner};
    d->dim = k;
    d->set_codec(std::vector<FiniteRing>(k, inner));
    std::vector<Elem> ones(k, inner.zero());
    ones[0] = inner.one();
    return finish_composite(std::move(d), ones);
}

namespace {

FiniteRing build_corner(const FiniteRing& inner, Elem e)
{
    auto d = std::make_shared<RingData>();
    d->expr = RingExpr::corner(inner.construction(), e);
    d->children = {inner};
    d->corner_e = e;
    std::vector<char> present(inner.order(), 0);
    for (Elem x = 0; x < inner.order(); ++x)
        present[inner.mul(inner.mul(e, x), e)] = 1;
    d->corner_of.assign(inner.order(), -1);
    for (Elem x = 0; x < inner.order(); ++x)
        if (present[x]) {
            d->corner_of[x] = static_cast<std::int64_t>(d->corner_elems.size());
            d->corner_elems.push_back(x);
        }
    d->order = d->corner_elems.size();
    d->zero = static_cast<Elem>(d->corner_of[inner.zero()]);
    d->one = static_cast<Elem>(d->corner_of[e]);
    return finish(std::move(d));
}

void require_idempotent(const FiniteRing& inner, Elem e)
{
    inner.checked(e);
    if (inner.mul(e, e) != e)
        throw RingError("corner: " + inner.label(e) + " is not idempotent");
}

} // namespace

FiniteRing make_corner(const FiniteRing& inner, Elem e)
{
    require_idempotent(inner, e);
    for (Elem x = 0; x < inner.order(); ++x)
        if (inner.mul(e, x) != inner.mul(x, e))
            throw RingError("corner: " + inner.label(e) + " is not central (fails to commute with " +
                            inner.label(x) + ")");
    return build_corner(inner, e);
}

FiniteRing make_idempotent_corner(const FiniteRing& inner, Elem e)
{
    require_idempotent(inner, e);
    return build_corner(inner, e);
}

Ideal ideal_closure(const FiniteRing& ring, std::span<const Elem> generators)
{
    const auto n = ring.order();
    std::vector<char> in(n, 0);
    std::vector<Elem> members;
    std::vector<Elem> queue;
    auto push = [&](Elem x) {
        if (!in[x]) {
            in[x] = 1;
            members.push_back(x);
            queue.push_back(x);
        }
    };
    push(ring.zero());
    for (auto g : generators)
        push(ring.checked(g));
    // Each new member is combined with every existing member and every ring
    // element; sums with later members are covered when those are processed.
    for (std::size_t qi = 0; qi < queue.size(); ++qi) {
        Elem a = queue[qi];
        push(ring.neg(a));
        for (Elem r = 0; r < n; ++r) {
            push(ring.mul(r, a));
            push(ring.mul(a, r));
        }
        for (std::size_t j = 0; j <= qi; ++j)
            push(ring.add(a, queue[j]));
    }
    Ideal I;
    I.elements = std::move(members);
    std::sort(I.elements.begin(), I.elements.end());
    I.generators.assign(generators.begin(), generators.end());
    return I;
}

FiniteRing make_quotient(const FiniteRing& inner, const Ideal& ideal)
{
    const auto n = inner.order();
    std::vector<char> in(n, 0);
    for (auto x : ideal.elements)
        in[inner.checked(x)] = 1;
    if (!in[inner.zero()])
        throw RingError("quotient: ideal does not contain zero");
    for (auto a : ideal.elements) {
        for (auto b : ideal.elements)
            if (!in[inner.add(a, b)])
                throw RingError("quotient: ideal not closed under addition");
        for (Elem r = 0; r < n; ++r)
            if (!in[inner.mul(r, a)] || !in[inner.mul(a, r)])
                throw RingError("quotient: ideal not closed under multiplication by " + inner.label(r));
    }

    auto d = std::make_shared<RingData>();
    std::vector<std::uint64_t> gens(ideal.generators.begin(), ideal.generators.end());
    d->expr = RingExpr::quotient(inner.construction(), std::move(gens));
    d->children = {inner};
    d->ideal = ideal;
    std::sort(d->ideal.elements.begin(), d->ideal.elements.end());
    d->ideal.elements.erase(std::unique(d->ideal.elements.begin(), d->ideal.elements.end()),
                            d->ideal.elements.end());
    constexpr Elem kUnset = std::numeric_limits<Elem>::max();
    d->coset_of.assign(n, kUnset);
    // Ascending scan: the first unassigned element is the least of its coset.
    for (Elem x = 0; x < n; ++x) {
        if (d->coset_of[x] != kUnset)
            continue;
        auto idx = static_cast<Elem>(d->reps.size());
        d->reps.push_back(x);
        for (auto i : d->ideal.elements)
            d->coset_of[inner.add(x, i)] = idx;
    }
    d->order = d->reps.size();
    d->zero = d->coset_of[inner.zero()];
    d->one = d->coset_of[inner.one()];
    return finish(std::move(d));
}

} // namespace ringlab
