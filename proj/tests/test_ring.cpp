#include "hs/algebra.hpp"
#include "hs/error.hpp"

#include <gtest/gtest.h>

#include <random>

using namespace hs;

namespace {

AlgebraPtr f2_dual() { return Algebra::make(BaseRing::integers_mod(2), {"x"}, std::vector<std::string>{"x^2"}); }

Elem random_elem(const AlgebraPtr& A, std::mt19937_64& rng, int deg) {
    Terms t;
    std::uniform_int_distribution<int> c(-3, 3);
    for (int d = 0; d <= deg; ++d)
        for (const auto& m : exponents_of_degree(A->nvars(), d))
            if (rng() % 2)
                poly::add_term(t, m, c(rng), A->base());
    return Elem(A, t);
}

} // namespace

TEST(BaseRing, ArithmeticModN) {
    auto k = BaseRing::integers_mod(6);
    EXPECT_FALSE(k.is_field());
    EXPECT_EQ(k.normalize(-1), 5);
    EXPECT_FALSE(k.is_unit(2));
    EXPECT_TRUE(k.is_unit(5));
    EXPECT_THROW(k.inverse(3), DomainError);
    auto f7 = BaseRing::integers_mod(7);
    EXPECT_TRUE(f7.is_field());
    EXPECT_EQ(f7.mul(f7.inverse(3), 3), 1);
    EXPECT_EQ(f7.name(), "F7");
    EXPECT_THROW(BaseRing::integers().inverse(2), DomainError);
}

TEST(Algebra, NormalFormExamples) {
    auto A = f2_dual();
    EXPECT_TRUE(Elem::parse(A, "x^2").is_zero());
    EXPECT_EQ(Elem::parse(A, "x^3+x").to_string(), "x");
    auto Q = Algebra::polynomial(BaseRing::rationals(), {"x"});
    EXPECT_EQ(Elem::parse(Q, "x+1").to_string(), "x + 1");
}

TEST(Algebra, PresentationValidation) {
    auto cusp = Algebra::make(BaseRing::rationals(), {"x", "y"}, std::vector<std::string>{"y^2-x^3"});
    EXPECT_TRUE(cusp->report().already_confluent);
    EXPECT_EQ(cusp->report().method, "buchberger");
    EXPECT_NO_THROW(f2_dual());
    EXPECT_THROW(Algebra::make(BaseRing::integers(), {"x"}, std::vector<std::string>{"2*x"}), DomainError);
}

TEST(Algebra, BuchbergerCompletes) {
    // (x^2 - y, x*y - 1): completion adds y^2 - x.
    auto A = Algebra::make(BaseRing::rationals(), {"x", "y"}, std::vector<std::string>{"x^2-y", "x*y-1"});
    EXPECT_FALSE(A->report().already_confluent);
    EXPECT_TRUE(Elem::parse(A, "y^2-x").is_zero());
    EXPECT_TRUE(A->is_finite_dim());
    EXPECT_EQ(A->monomial_basis().size(), 3u);
}

TEST(Algebra, NormalFormIsHomomorphismSection) {
    auto A = Algebra::make(BaseRing::integers_mod(3), {"x", "y"}, std::vector<std::string>{"x^3", "y^2-x"});
    std::mt19937_64 rng(7);
    for (int trial = 0; trial < 30; ++trial) {
        Elem a = random_elem(A, rng, 4), b = random_elem(A, rng, 4);
        Terms raw = poly::mul(a.terms(), b.terms(), A->base());
        EXPECT_EQ(Elem(A, raw), a * b);
        EXPECT_EQ(A->normal_form((a * b).terms()), (a * b).terms());
        for (const auto& f : A->relations())
            EXPECT_TRUE(Elem(A, f).is_zero());
    }
}

TEST(Algebra, MonomialBasisDimension) {
    // k[x,y]/(x^2, y^3) has dimension 6.
    auto A = Algebra::make(BaseRing::integers_mod(5), {"x", "y"}, std::vector<std::string>{"x^2", "y^3"});
    ASSERT_TRUE(A->is_finite_dim());
    EXPECT_EQ(A->monomial_basis().size(), 6u);
    // Coordinates round-trip, so the basis is independent and spanning.
    std::mt19937_64 rng(3);
    for (int trial = 0; trial < 10; ++trial) {
        Elem a = random_elem(A, rng, 5);
        EXPECT_EQ(Elem::from_coordinates(A, a.coordinates()), a);
    }
}

TEST(Derivation, Examples) {
    auto Q = Algebra::polynomial(BaseRing::rationals(), {"x"});
    EXPECT_EQ(Derivation::partial(Q, 0).apply(Elem::parse(Q, "x^3")).to_string(), "3*x^2");
    auto F2 = Algebra::polynomial(BaseRing::integers_mod(2), {"x"});
    EXPECT_TRUE(Derivation::partial(F2, 0).apply(Elem::parse(F2, "x^2")).is_zero());
    auto F3 = Algebra::polynomial(BaseRing::integers_mod(3), {"x", "y"});
    auto d = Derivation::make(F3, {Elem::parse(F3, "y"), Elem::parse(F3, "x")});
    EXPECT_EQ(d.apply(Elem::parse(F3, "x*y")), Elem::parse(F3, "x^2+y^2"));
}

TEST(Derivation, CompatibilityWithRelations) {
    auto A = f2_dual();
    // d/dx(x^2) = 2x = 0 over F2, so the derivative is compatible.
    EXPECT_NO_THROW(Derivation::partial(A, 0));
    auto B = Algebra::make(BaseRing::integers_mod(3), {"x"}, std::vector<std::string>{"x^2"});
    EXPECT_THROW(Derivation::partial(B, 0), DomainError);
    EXPECT_NO_THROW(Derivation::make(B, {Elem::parse(B, "x")}));
}
