#include "hs/algebra.hpp"
#include "hs/series.hpp"

#include <gtest/gtest.h>

#include <random>

using namespace hs;

namespace {

using ES = Series<Elem>;

ES from_text(const AlgebraPtr& A, const Shape& sh, std::vector<std::pair<MultiIndex, std::string>> c) {
    ES r(sh, Elem(A));
    for (auto& [a, t] : c)
        r.set(a, Elem::parse(A, t));
    return r;
}

ES one(const AlgebraPtr& A, const Shape& sh) { return ES::constant(sh, Elem::constant(A, 1), Elem(A)); }

ES random_series(const AlgebraPtr& A, const Shape& sh, std::mt19937_64& rng, bool unit) {
    ES r(sh, Elem(A));
    std::uniform_int_distribution<int> c(-2, 2);
    for (const auto& a : sh->elements()) {
        Terms t;
        for (int d = 0; d <= 2; ++d)
            for (const auto& m : exponents_of_degree(A->nvars(), d))
                poly::add_term(t, m, c(rng), A->base());
        r.set(a, Elem(A, t));
    }
    if (unit)
        r.set(MultiIndex(sh->arity()), Elem::constant(A, 1));
    return r;
}

} // namespace

TEST(Series, ProductExamples) {
    auto Q = Algebra::polynomial(BaseRing::rationals(), {"x"});
    auto sh = shape_tm(1, 1);
    auto a = from_text(Q, sh, {{{0}, "1"}, {{1}, "x"}});
    auto b = from_text(Q, sh, {{{0}, "1"}, {{1}, "-x"}});
    EXPECT_EQ(a * b, one(Q, sh));
    EXPECT_EQ(a * one(Q, sh), a);

    auto F2 = Algebra::polynomial(BaseRing::integers_mod(2), {});
    auto sh2 = shape_tm(1, 2);
    auto c = from_text(F2, sh2, {{{0}, "1"}, {{1}, "1"}});
    EXPECT_EQ(c * c, from_text(F2, sh2, {{{0}, "1"}, {{2}, "1"}}));
}

TEST(Series, InverseExamples) {
    auto Q = Algebra::polynomial(BaseRing::rationals(), {});
    auto sh = shape_tm(1, 2);
    auto r = from_text(Q, sh, {{{0}, "1"}, {{1}, "1"}});
    EXPECT_EQ(invert(r, Elem::constant(Q, 1)), from_text(Q, sh, {{{0}, "1"}, {{1}, "-1"}, {{2}, "1"}}));
    auto F2 = Algebra::polynomial(BaseRing::integers_mod(2), {});
    auto r2 = from_text(F2, sh, {{{0}, "1"}, {{1}, "1"}});
    EXPECT_EQ(invert(r2, Elem::constant(F2, 1)), from_text(F2, sh, {{{0}, "1"}, {{1}, "1"}, {{2}, "1"}}));
    EXPECT_EQ(invert(one(Q, sh), Elem::constant(Q, 1)), one(Q, sh));
}

TEST(Series, TruncationExamples) {
    auto Q = Algebra::polynomial(BaseRing::rationals(), {});
    auto r = from_text(Q, shape_tm(1, 2), {{{0}, "1"}, {{1}, "1"}, {{2}, "1"}});
    EXPECT_EQ(truncate(r, shape_tm(1, 1)), from_text(Q, shape_tm(1, 1), {{{0}, "1"}, {{1}, "1"}}));
    EXPECT_EQ(truncate(r, shape_tm(1, 0)), one(Q, shape_tm(1, 0)));
    EXPECT_THROW(truncate(r, shape_tm(1, 3)), DomainError);
}

TEST(Series, ExternalProduct) {
    auto Q = Algebra::polynomial(BaseRing::rationals(), {});
    auto sh = shape_tm(1, 1);
    auto u = from_text(Q, sh, {{{0}, "1"}, {{1}, "1"}});
    auto e = boxtimes(u, u);
    EXPECT_EQ(*e.shape(), CoIdeal::nbeta({1, 1}));
    for (const auto& a : e.shape()->elements())
        EXPECT_EQ(e[a], Elem::constant(Q, 1));
    auto o = one(Q, sh);
    EXPECT_EQ(boxtimes(o, o), one(Q, e.shape()));
}

TEST(Series, GroupLawsRandom) {
    auto A = Algebra::make(BaseRing::integers_mod(3), {"x"}, std::vector<std::string>{"x^3"});
    auto sh = make_shape(CoIdeal::nbeta({2, 1}));
    auto small = make_shape(CoIdeal::tm(2, 1));
    Elem unit = Elem::constant(A, 1);
    std::mt19937_64 rng(11);
    for (int trial = 0; trial < 10; ++trial) {
        auto r = random_series(A, sh, rng, true), q = random_series(A, sh, rng, true), w = random_series(A, sh, rng, true);
        EXPECT_EQ((r * q) * w, r * (q * w));
        auto ri = invert(r, unit);
        EXPECT_EQ(r * ri, one(A, sh));
        EXPECT_EQ(ri * r, one(A, sh));
        EXPECT_EQ(truncate(r * q, small), truncate(r, small) * truncate(q, small));
        // (r [x] 1)(1 [x] q) = r [x] q
        auto o = one(A, sh);
        EXPECT_EQ(boxtimes(r, o) * boxtimes(o, q), boxtimes(r, q));
    }
}

TEST(Series, OrderProperties) {
    auto A = Algebra::polynomial(BaseRing::integers_mod(5), {"x"});
    auto sh = shape_tm(2, 3);
    std::mt19937_64 rng(5);
    for (int trial = 0; trial < 20; ++trial) {
        auto r = random_series(A, sh, rng, false), q = random_series(A, sh, rng, false);
        // Kill low-order coefficients to get varied orders.
        for (const auto& a : sh->elements())
            if (a.degree() < int(rng() % 3))
                r.set(a, Elem(A));
        auto ord = [](const ES& s) { return s.order().value_or(1000); };
        EXPECT_GE(ord(r + q), std::min(ord(r), ord(q)));
        EXPECT_GE(ord(r * q), std::min(1000, ord(r) + ord(q)));
        if (ord(q) > ord(r))
            EXPECT_EQ(ord(r + q), ord(r));
    }
    EXPECT_FALSE(ES(sh, Elem(A)).order().has_value());
}
