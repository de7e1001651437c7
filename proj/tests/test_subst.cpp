#include "hs/subst.hpp"

#include <gtest/gtest.h>

#include <random>

using namespace hs;

namespace {

ElemSeries random_series(const AlgebraPtr& A, const Shape& sh, std::mt19937_64& rng, int min_order) {
    ElemSeries r(sh, Elem(A));
    std::uniform_int_distribution<int> c(-2, 2);
    for (const auto& a : sh->elements()) {
        if (a.degree() < min_order)
            continue;
        Terms t;
        for (int d = 0; d <= 1; ++d)
            for (const auto& m : exponents_of_degree(A->nvars(), d))
                poly::add_term(t, m, c(rng), A->base());
        r.set(a, Elem(A, t));
    }
    return r;
}

SubstMap random_map(const AlgebraPtr& A, const Shape& src, const Shape& tgt, std::mt19937_64& rng, bool constant) {
    AlgebraPtr K = A;
    for (;;) {
        std::vector<ElemSeries> ims;
        for (int i = 0; i < src->arity(); ++i) {
            ElemSeries r(tgt, Elem(A));
            for (const auto& e : tgt->elements())
                if (e.degree() >= 1 && rng() % 2) {
                    Rat c = int(rng() % 5) - 2;
                    Elem v = Elem::constant(A, c);
                    if (!constant && A->nvars() > 0 && rng() % 2)
                        v = v * Elem::variable(A, 0);
                    r.set(e, v);
                }
            ims.push_back(r);
        }
        try {
            return SubstMap::make(A, src, tgt, ims);
        } catch (const IllDefined&) {
        }
    }
}

} // namespace

TEST(SubstMap, Validation) {
    auto Q = Algebra::polynomial(BaseRing::rationals(), {"x"});
    EXPECT_NO_THROW(SubstMap::parse(Q, shape_tm(1, 2), shape_tm(1, 2), {"t"}));
    try {
        SubstMap::parse(Q, shape_tm(1, 1), shape_tm(1, 2), {"t"});
        FAIL() << "expected IllDefined";
    } catch (const IllDefined& e) {
        EXPECT_EQ(e.generator(), MultiIndex{2});
    }
    auto D = Algebra::make(BaseRing::integers_mod(2), {"x"}, std::vector<std::string>{"x^2"});
    EXPECT_NO_THROW(SubstMap::parse(D, shape_tm(1, 1), shape_tm(1, 2), {"x*t"}));
    EXPECT_THROW(SubstMap::parse(Q, shape_tm(1, 2), shape_tm(1, 2), {"1+t"}), DomainError);
}

TEST(SubstMap, CoefficientTable) {
    auto Q = Algebra::polynomial(BaseRing::rationals(), {});
    auto phi = SubstMap::parse(Q, shape_tm(1, 2), shape_tm(2, 2), {"t1+t2"});
    EXPECT_EQ(phi.coeff({1, 1}, {2}), Elem::constant(Q, 2));
    auto F2 = Algebra::polynomial(BaseRing::integers_mod(2), {});
    auto phi2 = SubstMap::parse(F2, shape_tm(1, 2), shape_tm(2, 2), {"t1+t2"});
    EXPECT_TRUE(phi2.coeff({1, 1}, {2}).is_zero());
    auto tau = SubstMap::truncation(Q, shape_tm(2, 3), shape_tm(2, 2));
    for (const auto& a : tau.source()->elements())
        for (const auto& b : tau.target()->elements())
            EXPECT_EQ(tau.coeff(b, a), Elem::constant(Q, a == b ? 1 : 0));
}

TEST(SubstMap, ComposeAndTrivial) {
    auto Q = Algebra::polynomial(BaseRing::rationals(), {"x"});
    auto psi = SubstMap::parse(Q, shape_tm(1, 2), shape_tm(1, 2), {"x*t+t^2"});
    auto triv = SubstMap::trivial(Q, shape_tm(1, 2), shape_tm(1, 2));
    EXPECT_EQ(compose(psi, triv).images(), triv.images());
    auto a = SubstMap::combinatorial(Q, shape_tm(1, 2), shape_tm(1, 2), {0});
    EXPECT_TRUE(compose(a, a).is_combinatorial());
    EXPECT_TRUE(a.is_combinatorial());
    EXPECT_FALSE(psi.is_constant_coeff());
}

TEST(SubstMap, InitialPart) {
    auto Q = Algebra::polynomial(BaseRing::rationals(), {"x"});
    auto phi = SubstMap::parse(Q, shape_tm(1, 3), shape_tm(1, 3), {"t+t^2"});
    EXPECT_EQ(init(phi).image_strings(), std::vector<std::string>{"t"});
    auto psi = SubstMap::parse(Q, shape_tm(1, 1), shape_tm(1, 3), {"t^2"});
    EXPECT_EQ(init(psi).image_strings(), std::vector<std::string>{"0"});
}

TEST(SubstMap, ActionExamples) {
    auto Q = Algebra::polynomial(BaseRing::rationals(), {"x"});
    auto sh = shape_tm(1, 3);
    auto r = parse_series(Q, sh, "x + 2*t - x*t^2 + t^3", "t");
    auto triv = SubstMap::trivial(Q, sh, sh);
    EXPECT_EQ(act_left(triv, r), ElemSeries::constant(sh, Elem::parse(Q, "x"), Elem(Q)));
    EXPECT_EQ(act_right(r, triv), ElemSeries::constant(sh, Elem::parse(Q, "x"), Elem(Q)));
    auto scale = SubstMap::parse(Q, sh, sh, {"(x+1)*t"});
    EXPECT_EQ(act_left(scale, r), parse_series(Q, sh, "x + 2*(x+1)*t - x*(x+1)^2*t^2 + (x+1)^3*t^3", "t"));
}

TEST(SubstMap, RandomFunctoriality) {
    auto A = Algebra::make(BaseRing::integers_mod(3), {"x"}, std::vector<std::string>{"x^3"});
    std::mt19937_64 rng(17);
    auto d1 = shape_tm(1, 3), d2 = make_shape(CoIdeal::nbeta({2, 1})), d3 = shape_tm(2, 2);
    for (int trial = 0; trial < 8; ++trial) {
        auto phi = random_map(A, d1, d2, rng, false);
        auto psi = random_map(A, d2, d3, rng, false);
        auto r = random_series(A, d1, rng, 0);
        auto q = random_series(A, d1, rng, 0);
        auto both = compose(psi, phi);
        EXPECT_EQ(act_left(psi, act_left(phi, r)), act_left(both, r));
        EXPECT_EQ(act_right(act_right(r, phi), psi), act_right(r, both));
        // Left phi-linearity and multiplicativity (commutative coefficients).
        EXPECT_EQ(act_left(phi, r * q), act_left(phi, r) * act_left(phi, q));
        auto one = one_series(A, d1);
        EXPECT_EQ(act_left(phi, one), one_series(A, d2));
        // init has smaller support on every monomial.
        auto in = init(phi);
        for (const auto& a : d1->elements())
            for (const auto& e : in.power(a).support())
                EXPECT_FALSE(phi.power(a)[e].is_zero());
    }
}

TEST(SubstMap, TensorCoefficientLaw) {
    auto Q = Algebra::polynomial(BaseRing::rationals(), {"x"});
    auto phi = SubstMap::parse(Q, shape_tm(1, 2), shape_tm(1, 4), {"t^2"});
    auto psi = SubstMap::parse(Q, shape_tm(1, 2), shape_tm(1, 2), {"x*t"});
    auto tp = tensor(phi, psi);
    for (const auto& ab : tp.source()->elements())
        for (const auto& ef : tp.target()->elements()) {
            MultiIndex a = ab.slice(0, 1), b = ab.slice(1, 1), e = ef.slice(0, 1), f = ef.slice(1, 1);
            EXPECT_EQ(tp.coeff(ef, ab), phi.coeff(e, a) * psi.coeff(f, b));
        }
    auto triv = tensor(SubstMap::trivial(Q, shape_tm(1, 1), shape_tm(1, 1)), SubstMap::trivial(Q, shape_tm(1, 1), shape_tm(1, 1)));
    for (const auto& im : triv.images())
        EXPECT_TRUE(im.is_zero());
    // (phi (x) Id) . (r [x] r') = (phi . r) [x] r'
    auto id = SubstMap::identity(Q, shape_tm(1, 2));
    auto r = parse_series(Q, shape_tm(1, 2), "1 + x*t + 3*t^2", "t");
    auto r2 = parse_series(Q, shape_tm(1, 2), "x - t^2", "t");
    EXPECT_EQ(act_left(tensor(phi, id), boxtimes(r, r2)), boxtimes(act_left(phi, r), r2));
}
