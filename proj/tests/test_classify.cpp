#include <gtest/gtest.h>

#include "support/oracles.hpp"
#include "ringlab/classify.hpp"
#include "ringlab/ringspec.hpp"

using namespace ringlab;

namespace {

FiniteRing R(const char* spec) { return elaborate(spec); }

std::vector<std::string> corpus()
{
    return {"Z2", "Z3", "Z4", "Z5", "Z6", "Z7", "Z8", "Z9", "Z10", "Z11", "Z12", "Z4 x Z6", "Z2 x Z2 x Z3",
            "M2(Z2)", "M2(Z3)", "T2(Z2)", "T2(Z3)", "T3(Z2)", "Z9[C2]", "Z3[C2]", "Z6[C2]", "Z4[x]/x^2",
            "Z8/(4)", "corner(Z6,3)", "corner(Z12,4)"};
}

} // namespace

TEST(Unit, Examples)
{
    auto z4 = R("Z4");
    EXPECT_EQ(is_unit(z4, 3), std::optional<Elem>(3));
    EXPECT_EQ(is_unit(z4, 1), std::optional<Elem>(1));
    EXPECT_FALSE(is_unit(z4, 2));
}

TEST(Idempotent, Examples)
{
    EXPECT_TRUE(is_idempotent(R("Z6"), 3));
    EXPECT_TRUE(is_idempotent(R("Z6"), 0));
    EXPECT_TRUE(is_idempotent(R("Z6"), 1));
    EXPECT_FALSE(is_idempotent(R("Z4"), 2));
}

TEST(Nilpotent, Examples)
{
    EXPECT_EQ(is_nilpotent(R("Z4"), 2), std::optional<std::size_t>(2));
    EXPECT_EQ(is_nilpotent(R("Z4"), 0), std::optional<std::size_t>(1));
    EXPECT_FALSE(is_nilpotent(R("Z6"), 2));
}

TEST(Regular, Examples)
{
    EXPECT_FALSE(regular_witness(R("Z4"), 2));
    EXPECT_EQ(regular_witness(R("Z6"), 2)->y, 2u);
    auto z6 = R("Z6");
    // Idempotent 3: least y with 3y3 = 3 is 1.
    EXPECT_EQ(regular_witness(z6, 3)->y, 1u);
}

TEST(UnitRegular, Examples)
{
    EXPECT_EQ(unit_regular_witness(R("Z6"), 3), std::optional<Elem>(1));
    EXPECT_EQ(unit_regular_witness(R("Z6"), 0), std::optional<Elem>(1));
    EXPECT_FALSE(unit_regular_witness(R("Z4"), 2));
}

TEST(Clean, Examples)
{
    auto z4 = R("Z4");
    EXPECT_EQ(clean_witness(z4, 2), (CleanWitness{1, 1}));
    EXPECT_EQ(clean_witness(z4, 1), (CleanWitness{1, 0}));
    auto m = R("M2(Z2)");
    auto w = clean_witness(m, m.zero());
    ASSERT_TRUE(w);
    EXPECT_TRUE(certifies_clean(m, m.zero(), *w));
}

TEST(RClean, Examples)
{
    auto z4 = R("Z4");
    EXPECT_EQ(r_clean_witness(z4, 2), (RCleanWitness{1, 1, 1}));
    EXPECT_EQ(r_clean_witness(z4, 3), (RCleanWitness{3, 0, 3}));
    auto z6 = R("Z6");
    EXPECT_EQ(r_clean_witness(z6, 2)->e, 0u);
}

TEST(Exchange, Examples)
{
    auto z4 = R("Z4");
    EXPECT_EQ(exchange_witness(z4, 2), std::optional<Elem>(0));
    EXPECT_EQ(exchange_witness(z4, 1), std::optional<Elem>(1));
    EXPECT_EQ(exchange_witness(z4, 0), std::optional<Elem>(0));
}

TEST(Central, Examples)
{
    auto m = R("M2(Z2)");
    EXPECT_EQ(central_idempotents(m), (std::vector<Elem>{m.zero(), m.one()}));
    auto t = R("T2(Z2)");
    auto e11 = parse_element(t, "[[1,0],[0,0]]");
    EXPECT_TRUE(is_idempotent(t, e11));
    EXPECT_FALSE(is_central(t, e11));
    auto z12 = R("Z12");
    EXPECT_EQ(central_idempotents(z12), idempotents(z12));
}

TEST(Radical, Examples)
{
    EXPECT_EQ(jacobson_radical(R("Z4")), (std::vector<Elem>{0, 2}));
    EXPECT_EQ(jacobson_radical(R("Z6")), (std::vector<Elem>{0}));
    EXPECT_EQ(jacobson_radical(R("M2(Z2)")), (std::vector<Elem>{0}));
    EXPECT_EQ(jacobson_radical(R("Z8")), (std::vector<Elem>{0, 2, 4, 6}));
}

TEST(Radical, IsANilIdeal)
{
    for (const auto& s : corpus()) {
        SCOPED_TRACE(s);
        auto r = elaborate(s);
        auto j = jacobson_radical(r);
        std::vector<char> in(r.order());
        for (auto x : j)
            in[x] = 1;
        for (auto a : j) {
            EXPECT_TRUE(oracle::nilpotent(r, a));
            for (auto b : j)
                EXPECT_TRUE(in[r.add(a, b)]);
            for (Elem x = 0; x < r.order(); ++x) {
                EXPECT_TRUE(in[r.mul(a, x)]);
                EXPECT_TRUE(in[r.mul(x, a)]);
            }
        }
    }
}

TEST(Local, Examples)
{
    EXPECT_TRUE(is_local(R("Z4")));
    EXPECT_FALSE(is_local(R("Z6")));
    EXPECT_TRUE(is_local(R("Z9")));
    EXPECT_THROW(is_local(R("Z1")), RingError);
}

TEST(DirectlyFinite, EveryCorpusRing)
{
    for (const auto& s : corpus())
        EXPECT_TRUE(is_directly_finite(elaborate(s)).holds) << s;
}

TEST(LocalIdempotents, CompleteSets)
{
    EXPECT_EQ(complete_orthogonal_local_set(R("Z6")), (std::vector<Elem>{3, 4}));
    EXPECT_EQ(complete_orthogonal_local_set(R("Z12")), (std::vector<Elem>{4, 9}));
    EXPECT_EQ(complete_orthogonal_local_set(R("Z9")), (std::vector<Elem>{1}));
}

TEST(Profile, Examples)
{
    auto p = ring_profile(R("Z4"));
    EXPECT_TRUE(p.clean);
    EXPECT_TRUE(p.r_clean);
    EXPECT_FALSE(p.regular);
    EXPECT_EQ(p.not_regular, std::optional<Elem>(2));
    EXPECT_TRUE(p.local);
    auto m = ring_profile(R("M2(Z2)"));
    EXPECT_TRUE(m.regular);
    EXPECT_TRUE(m.clean);
    EXPECT_FALSE(m.commutative);
    EXPECT_TRUE(ring_profile(R("Z6")).regular);
}

TEST(Witnesses, SoundAndAgreeWithOracles)
{
    for (const auto& s : corpus()) {
        SCOPED_TRACE(s);
        auto r = elaborate(s);
        RingFacts facts(r);
        auto rclean = oracle::r_clean_mask(r);
        for (Elem x = 0; x < r.order(); ++x) {
            auto rw = r_clean_witness(r, x);
            EXPECT_EQ(rw.has_value(), rclean[x] != 0);
            EXPECT_EQ(rw, facts.r_clean_witness(x));
            if (rw) {
                EXPECT_TRUE(certifies_r_clean(r, x, *rw));
            }
            auto cw = clean_witness(r, x);
            EXPECT_EQ(cw.has_value(), oracle::clean(r, x));
            EXPECT_EQ(cw, facts.clean_witness(x));
            if (cw) {
                EXPECT_TRUE(certifies_clean(r, x, *cw));
            }
            auto reg = regular_witness(r, x);
            EXPECT_EQ(reg.has_value(), oracle::regular(r, x));
            EXPECT_EQ(reg, facts.regular_witness(x));
            EXPECT_EQ(is_unit(r, x).has_value(), oracle::unit(r, x));
            EXPECT_EQ(is_unit(r, x), facts.inverse(x));
        }
    }
}

TEST(Implications, HoldOnEveryElement)
{
    for (const auto& s : corpus()) {
        SCOPED_TRACE(s);
        auto r = elaborate(s);
        for (Elem x = 0; x < r.order(); ++x) {
            auto c = classify_element(r, x);
            if (c.unit) {
                EXPECT_TRUE(c.clean);
                EXPECT_TRUE(c.regular);
            }
            if (c.idempotent) {
                EXPECT_TRUE(c.regular && c.r_clean);
            }
            if (c.regular) {
                EXPECT_TRUE(c.r_clean);
            }
            if (c.clean) {
                EXPECT_TRUE(c.r_clean);
                EXPECT_TRUE(c.exchange);
            }
            if (c.unit_regular) {
                EXPECT_TRUE(c.regular);
            }
        }
    }
}

TEST(Implications, CleanIffExchangeWithCentralIdempotents)
{
    for (const auto& s : corpus()) {
        auto r = elaborate(s);
        if (!is_commutative(r))
            continue;
        auto p = ring_profile(r);
        EXPECT_EQ(p.clean, p.exchange) << s;
    }
}

TEST(Determinism, RepeatedCallsAgree)
{
    auto r = R("M2(Z3)");
    for (Elem x = 0; x < r.order(); x += 5)
        EXPECT_EQ(r_clean_witness(r, x), r_clean_witness(r, x));
}
