#include "ringlab/ringspec.hpp"

#include <fstream>
#include <sstream>

namespace ringlab {

namespace {

inline constexpr std::size_t kMaxGroupOrder = 256;

// Prefix construction errors raised at this node with the node's own text.
template <typename Build>
FiniteRing at_node(const RingExpr& e, Build&& build)
{
    try {
        return build();
    } catch (const SizeCapError& err) {
        throw SizeCapError(print_expr(e), err.required(), err.cap());
    } catch (const ParseError&) {
        throw;
    } catch (const RingError& err) {
        throw RingError(print_expr(e) + ": " + err.what());
    }
}

GroupSpec resolve_group(const GroupRef& ref, std::size_t size_cap)
{
    if (ref.kind == GroupRef::Kind::File)
        return load_cayley_file(ref.path);
    if (ref.order > kMaxGroupOrder || ref.order > size_cap)
        throw RingError("group order " + std::to_string(ref.order) + " exceeds limit " +
                        std::to_string(kMaxGroupOrder));
    return GroupSpec::cyclic(static_cast<std::size_t>(ref.order));
}

} // namespace

FiniteRing elaborate(const RingExpr& e, std::size_t cap)
{
    switch (e.kind) {
    case ExprKind::ZMod:
        return at_node(e, [&] { return make_zmod(e.n, cap); });
    case ExprKind::Product: {
        std::vector<FiniteRing> factors;
        for (const auto& c : e.children)
            factors.push_back(elaborate(c, cap));
        return at_node(e, [&] { return make_product(factors, cap); });
    }
    case ExprKind::Matrix: {
        auto inner = elaborate(e.inner(), cap);
        return at_node(e, [&] { return make_matrix_ring(inner, e.n, cap); });
    }
    case ExprKind::Triangular: {
        auto inner = elaborate(e.inner(), cap);
        return at_node(e, [&] { return make_triangular_ring(inner, e.n, e.shape, cap); });
    }
    case ExprKind::GroupRing: {
        auto inner = elaborate(e.inner(), cap);
        return at_node(e, [&] { return make_group_ring(inner, resolve_group(e.group, cap), cap); });
    }
    case ExprKind::TruncPoly: {
        auto inner = elaborate(e.inner(), cap);
        return at_node(e, [&] { return make_trunc_poly(inner, e.n, cap); });
    }
    case ExprKind::Corner: {
        auto inner = elaborate(e.inner(), cap);
        return at_node(e, [&] { return make_corner(inner, inner.checked(e.index)); });
    }
    case ExprKind::Quotient: {
        auto inner = elaborate(e.inner(), cap);
        return at_node(e, [&] {
            std::vector<Elem> gens;
            for (auto g : e.generators)
                gens.push_back(inner.checked(g));
            return make_quotient(inner, ideal_closure(inner, gens));
        });
    }
    }
    throw RingError("unknown construction");
}

FiniteRing elaborate(std::string_view text, std::size_t size_cap)
{
    return elaborate(parse_ring(text), size_cap);
}

GroupSpec parse_cayley_table(std::string_view text, GroupRef source)
{
    std::vector<std::uint64_t> nums;
    std::istringstream in{std::string(text)};
    std::string line;
    while (std::getline(in, line)) {
        if (auto hash = line.find('#'); hash != std::string::npos)
            line.resize(hash);
        std::istringstream ls(line);
        std::string word;
        while (ls >> word) {
            std::uint64_t v = 0;
            for (char c : word) {
                if (c < '0' || c > '9')
                    throw RingError("Cayley table: bad entry '" + word + "'");
                v = v * 10 + static_cast<std::uint64_t>(c - '0');
                if (v > kMaxLiteral)
                    throw RingError("Cayley table: entry '" + word + "' too large");
            }
            nums.push_back(v);
        }
    }
    if (nums.empty())
        throw RingError("Cayley table: missing group order");
    auto m = nums.front();
    if (m == 0 || m > kMaxGroupOrder)
        throw RingError("Cayley table: group order must be in 1.." + std::to_string(kMaxGroupOrder));
    if (nums.size() != 1 + m * m)
        throw RingError("Cayley table: expected " + std::to_string(m * m) + " entries, got " +
                        std::to_string(nums.size() - 1));
    std::vector<std::vector<std::size_t>> table(m, std::vector<std::size_t>(m));
    for (std::size_t a = 0; a < m; ++a)
        for (std::size_t b = 0; b < m; ++b)
            table[a][b] = static_cast<std::size_t>(nums[1 + a * m + b]);
    return GroupSpec(std::move(table), std::move(source));
}

GroupSpec load_cayley_file(const std::string& path)
{
    std::ifstream f(path);
    if (!f)
        throw RingError("cannot open Cayley table file '" + path + "'");
    std::stringstream buf;
    buf << f.rdbuf();
    GroupRef ref;
    ref.kind = GroupRef::Kind::File;
    ref.path = path;
    return parse_cayley_table(buf.str(), std::move(ref));
}

} // namespace ringlab
