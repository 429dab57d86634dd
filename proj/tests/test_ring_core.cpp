#include <gtest/gtest.h>

#include <numeric>
#include <random>

#include "support/oracles.hpp"
#include "ringlab/ring.hpp"
#include "ringlab/ringspec.hpp"

using namespace ringlab;

namespace {

Elem mat(const FiniteRing& m, std::vector<Elem> entries) { return m.pack(entries); }

void expect_ring_axioms(const FiniteRing& R)
{
    const auto n = R.order();
    auto check = [&](Elem a, Elem b, Elem c) {
        ASSERT_EQ(R.add(R.add(a, b), c), R.add(a, R.add(b, c)));
        ASSERT_EQ(R.add(a, b), R.add(b, a));
        ASSERT_EQ(R.add(a, R.zero()), a);
        ASSERT_EQ(R.add(a, R.neg(a)), R.zero());
        ASSERT_EQ(R.mul(R.mul(a, b), c), R.mul(a, R.mul(b, c)));
        ASSERT_EQ(R.mul(a, R.add(b, c)), R.add(R.mul(a, b), R.mul(a, c)));
        ASSERT_EQ(R.mul(R.add(a, b), c), R.add(R.mul(a, c), R.mul(b, c)));
        ASSERT_EQ(R.mul(R.one(), a), a);
        ASSERT_EQ(R.mul(a, R.one()), a);
    };
    if (n <= 64) {
        for (Elem a = 0; a < n; ++a)
            for (Elem b = 0; b < n; ++b)
                for (Elem c = 0; c < n; ++c)
                    check(a, b, c);
    } else {
        std::mt19937 rng(7);
        std::uniform_int_distribution<Elem> pick(0, static_cast<Elem>(n - 1));
        for (int i = 0; i < 20000; ++i)
            check(pick(rng), pick(rng), pick(rng));
    }
    if (n > 1) {
        EXPECT_NE(R.one(), R.zero());
    }
}

} // namespace

TEST(ZMod, ArithmeticMatchesIntegers)
{
    auto z4 = make_zmod(4);
    EXPECT_EQ(z4.mul(2, 2), 0u);
    EXPECT_EQ(z4.add(3, 2), 1u);
    auto z6 = make_zmod(6);
    EXPECT_EQ(z6.mul(3, 4), 0u);
    for (Elem a = 0; a < 6; ++a)
        for (Elem b = 0; b < 6; ++b) {
            EXPECT_EQ(z6.add(a, b), (a + b) % 6);
            EXPECT_EQ(z6.mul(a, b), (a * b) % 6);
        }
    EXPECT_EQ(z6.from_int(-1), 5u);
}

TEST(ZMod, ZeroRing)
{
    auto z1 = make_zmod(1);
    EXPECT_EQ(z1.order(), 1u);
    EXPECT_EQ(z1.zero(), z1.one());
}

TEST(ZMod, RejectsZeroModulus) { EXPECT_THROW(make_zmod(0), RingError); }

TEST(Product, OrderAndIdentity)
{
    FiniteRing f[] = {make_zmod(2), make_zmod(3)};
    auto p = make_product(f);
    EXPECT_EQ(p.order(), 6u);
    EXPECT_EQ(p.unpack(p.one()), (std::vector<Elem>{1, 1}));
    EXPECT_EQ(p.one(), 3u * 1 + 1);
    FiniteRing g[] = {make_zmod(4), make_zmod(6)};
    EXPECT_EQ(make_product(g).order(), 24u);
    EXPECT_THROW(make_product(std::span<const FiniteRing>{}), RingError);
}

TEST(Product, SingleFactorHasIdenticalTables)
{
    auto z5 = make_zmod(5);
    FiniteRing f[] = {z5};
    auto p = make_product(f);
    for (Elem a = 0; a < 5; ++a)
        for (Elem b = 0; b < 5; ++b) {
            EXPECT_EQ(p.add(a, b), z5.add(a, b));
            EXPECT_EQ(p.mul(a, b), z5.mul(a, b));
        }
}

TEST(Product, ComponentwiseAgreement)
{
    FiniteRing f[] = {make_zmod(4), make_zmod(3)};
    auto p = make_product(f);
    for (Elem a = 0; a < p.order(); ++a)
        for (Elem b = 0; b < p.order(); ++b) {
            auto x = p.unpack(a), y = p.unpack(b);
            auto s = p.unpack(p.add(a, b)), m = p.unpack(p.mul(a, b));
            for (int i = 0; i < 2; ++i) {
                EXPECT_EQ(s[i], f[i].add(x[i], y[i]));
                EXPECT_EQ(m[i], f[i].mul(x[i], y[i]));
            }
        }
}

TEST(Matrix, OrderIdentityAndUnits)
{
    auto z2 = make_zmod(2);
    auto m = make_matrix_ring(z2, 2);
    EXPECT_EQ(m.order(), 16u);
    EXPECT_EQ(m.one(), mat(m, {1, 0, 0, 1}));
    auto e11 = mat(m, {1, 0, 0, 0});
    auto e12 = mat(m, {0, 1, 0, 0});
    EXPECT_EQ(m.mul(e11, e12), e12);
    EXPECT_EQ(m.mul(e12, e11), m.zero());
    EXPECT_EQ(m.label(e12), "[[0,1],[0,0]]");
}

TEST(Matrix, MultiplicationMatchesHandComputation)
{
    auto z4 = make_zmod(4);
    auto m = make_matrix_ring(z4, 2);
    for (Elem a = 0; a < m.order(); a += 7)
        for (Elem b = 0; b < m.order(); b += 5) {
            auto x = m.unpack(a), y = m.unpack(b), p = m.unpack(m.mul(a, b));
            for (int i = 0; i < 2; ++i)
                for (int j = 0; j < 2; ++j)
                    EXPECT_EQ(p[i * 2 + j], (x[i * 2] * y[j] + x[i * 2 + 1] * y[2 + j]) % 4);
        }
}

TEST(Matrix, SizeCapRefusal)
{
    auto z4 = make_zmod(4);
    try {
        make_matrix_ring(z4, 3);
        FAIL() << "expected refusal";
    } catch (const SizeCapError& e) {
        EXPECT_EQ(e.required(), 262144u);
        EXPECT_EQ(e.cap(), kDefaultSizeCap);
    }
}

TEST(Triangular, OrderClosureAndIdempotent)
{
    auto z2 = make_zmod(2);
    auto t = make_triangular_ring(z2, 2, TriShape::Lower);
    EXPECT_EQ(t.order(), 8u);
    auto e = parse_element(t, "[[1,0],[1,0]]");
    EXPECT_EQ(t.mul(e, e), e);
    auto up = make_triangular_ring(z2, 2, TriShape::Upper);
    EXPECT_THROW(parse_element(up, "[[1,0],[1,0]]"), RingError);
    EXPECT_EQ(make_triangular_ring(z2, 3, TriShape::Lower).order(), 64u);
}

TEST(GroupRing, C2Arithmetic)
{
    auto z9 = make_zmod(9);
    auto rg = make_group_ring(z9, GroupSpec::cyclic(2));
    EXPECT_EQ(rg.order(), 81u);
    Elem one_plus_g = rg.pack(std::vector<Elem>{1, 1});
    Elem one_minus_g = rg.pack(std::vector<Elem>{1, 8});
    EXPECT_EQ(rg.mul(one_plus_g, one_minus_g), rg.zero());
    for (Elem z = 0; z < rg.order(); ++z)
        EXPECT_EQ(rg.mul(rg.one(), z), z);
}

TEST(GroupRing, RejectsBadCayleyTable)
{
    GroupRef ref;
    EXPECT_THROW(GroupSpec({{0, 1}, {1, 1}}, ref), RingError);
    EXPECT_THROW(GroupSpec({{0, 1}, {1}}, ref), RingError);
    EXPECT_THROW(GroupSpec({}, ref), RingError);
}

TEST(TruncPoly, Arithmetic)
{
    auto z4 = make_zmod(4);
    auto r = make_trunc_poly(z4, 2);
    EXPECT_EQ(r.order(), 16u);
    auto x = r.pack(std::vector<Elem>{0, 1});
    EXPECT_EQ(r.mul(x, x), r.zero());
    auto a = r.pack(std::vector<Elem>{1, 1});
    auto b = r.pack(std::vector<Elem>{1, 3});
    EXPECT_EQ(r.mul(a, b), r.one());
}

TEST(Corner, Examples)
{
    auto z6 = make_zmod(6);
    auto c3 = make_corner(z6, 3);
    EXPECT_EQ(c3.order(), 2u);
    EXPECT_EQ(c3.to_inner(c3.one()), 3u);
    EXPECT_EQ(c3.to_inner(1), 3u);
    auto c4 = make_corner(z6, 4);
    EXPECT_EQ(c4.order(), 3u);
    EXPECT_EQ(c4.to_inner(c4.one()), 4u);
    std::vector<Elem> members;
    for (Elem a = 0; a < c4.order(); ++a)
        members.push_back(c4.to_inner(a));
    EXPECT_EQ(members, (std::vector<Elem>{0, 2, 4}));
    auto full = make_corner(z6, 1);
    EXPECT_EQ(full.order(), 6u);
}

TEST(Corner, RejectsNonIdempotentAndNonCentral)
{
    EXPECT_THROW(make_corner(make_zmod(6), 2), RingError);
    auto t = make_triangular_ring(make_zmod(2), 2, TriShape::Lower);
    auto e11 = parse_element(t, "[[1,0],[0,0]]");
    try {
        make_corner(t, e11);
        FAIL();
    } catch (const RingError& e) {
        EXPECT_NE(std::string(e.what()).find("not central"), std::string::npos);
    }
}

TEST(Corner, ArithmeticAgreesWithInner)
{
    auto z12 = make_zmod(12);
    auto c = make_corner(z12, 9);
    for (Elem a = 0; a < c.order(); ++a)
        for (Elem b = 0; b < c.order(); ++b) {
            EXPECT_EQ(c.to_inner(c.add(a, b)), z12.add(c.to_inner(a), c.to_inner(b)));
            EXPECT_EQ(c.to_inner(c.mul(a, b)), z12.mul(c.to_inner(a), c.to_inner(b)));
        }
}

TEST(Ideal, Closure)
{
    auto z8 = make_zmod(8);
    Elem g[] = {4};
    EXPECT_EQ(ideal_closure(z8, g).elements, (std::vector<Elem>{0, 4}));
    EXPECT_EQ(ideal_closure(z8, {}).elements, (std::vector<Elem>{0}));
    Elem one[] = {1};
    EXPECT_EQ(ideal_closure(z8, one).size(), 8u);
}

TEST(Ideal, ClosureIsIdempotentAndTwoSided)
{
    auto m = make_matrix_ring(make_zmod(4), 2);
    for (Elem g = 0; g < m.order(); g += 17) {
        Elem gens[] = {g};
        auto i = ideal_closure(m, gens);
        auto again = ideal_closure(m, i.elements);
        EXPECT_EQ(again.elements, i.elements);
        for (auto a : i.elements)
            for (Elem r = 0; r < m.order(); r += 3) {
                EXPECT_TRUE(i.contains(m.mul(r, a)));
                EXPECT_TRUE(i.contains(m.mul(a, r)));
            }
    }
}

TEST(Quotient, Examples)
{
    auto z8 = make_zmod(8);
    Elem g[] = {4};
    auto q = make_quotient(z8, ideal_closure(z8, g));
    EXPECT_EQ(q.order(), 4u);
    auto z4 = make_zmod(4);
    // Cosets are listed by least representative 0,1,2,3, so tables match Z4.
    for (Elem a = 0; a < 4; ++a)
        for (Elem b = 0; b < 4; ++b) {
            EXPECT_EQ(q.add(a, b), z4.add(a, b));
            EXPECT_EQ(q.mul(a, b), z4.mul(a, b));
        }
    auto trivial = make_quotient(z8, ideal_closure(z8, {}));
    EXPECT_EQ(trivial.order(), 8u);
    Elem one[] = {1};
    EXPECT_EQ(make_quotient(z8, ideal_closure(z8, one)).order(), 1u);
}

TEST(Quotient, ProjectionIsSurjectiveHomomorphism)
{
    auto m = make_matrix_ring(make_zmod(4), 2);
    Elem g[] = {m.from_int(2)};
    auto q = make_quotient(m, ideal_closure(m, g));
    EXPECT_EQ(q.order(), 16u);
    std::vector<char> hit(q.order());
    for (Elem x = 0; x < m.order(); ++x)
        hit[q.project(x)] = 1;
    EXPECT_TRUE(std::all_of(hit.begin(), hit.end(), [](char c) { return c; }));
    EXPECT_EQ(q.project(m.one()), q.one());
    for (Elem x = 0; x < m.order(); x += 3)
        for (Elem y = 0; y < m.order(); y += 5) {
            EXPECT_EQ(q.project(m.add(x, y)), q.add(q.project(x), q.project(y)));
            EXPECT_EQ(q.project(m.mul(x, y)), q.mul(q.project(x), q.project(y)));
        }
}

TEST(Quotient, RejectsNonIdeal)
{
    auto z8 = make_zmod(8);
    Ideal bad{{0, 3}, {3}};
    EXPECT_THROW(make_quotient(z8, bad), RingError);
}

TEST(Axioms, HoldOnEveryConstruction)
{
    for (const char* spec : {"Z1", "Z2", "Z6", "Z4 x Z6", "M2(Z2)", "M2(Z3)", "T2(Z3)", "T3(Z2)^upper", "Z9[C2]",
                             "Z2[C3]", "Z4[x]/x^2", "Z2[x]/x^3", "Z8/(4)", "corner(Z12,9)", "M2(Z4)", "(Z2 x Z3)[C2]",
                             "M2(Z2)/(1)"}) {
        SCOPED_TRACE(spec);
        expect_ring_axioms(elaborate(spec));
    }
}

TEST(Tables, StructuralAndTabulatedArithmeticAgree)
{
    // M2(Z9) is above the table threshold, M2(Z3) below it.
    auto big = elaborate("M2(Z9)");
    auto small = elaborate("M2(Z3)");
    EXPECT_FALSE(big.has_tables());
    EXPECT_TRUE(small.has_tables());
    for (Elem a = 0; a < small.order(); ++a)
        for (Elem b = 0; b < small.order(); ++b) {
            auto x = small.unpack(a), y = small.unpack(b);
            auto bx = big.pack(x), by = big.pack(y);
            auto p = big.unpack(big.mul(bx, by));
            auto q = small.unpack(small.mul(a, b));
            for (int i = 0; i < 4; ++i)
                EXPECT_EQ(p[i] % 3, q[i]);
        }
}
