#include "hs/hsder.hpp"

#include <gtest/gtest.h>

#include <random>

using namespace hs;

namespace {

AlgebraPtr qx() { return Algebra::polynomial(BaseRing::rationals(), {"x"}); }
AlgebraPtr f2x() { return Algebra::polynomial(BaseRing::integers_mod(2), {"x"}); }

// Phi(x_j) = x_j + random terms of positive order, retried until the relations are preserved.
HSDerivation random_hs(const AlgebraPtr& A, const Shape& sh, std::mt19937_64& rng) {
    for (int attempt = 0; attempt < 200; ++attempt) {
        std::vector<ElemSeries> ims;
        for (std::size_t j = 0; j < A->nvars(); ++j) {
            ElemSeries r = ElemSeries::constant(sh, Elem::variable(A, j), Elem(A));
            for (const auto& a : sh->elements()) {
                if (a.is_zero() || rng() % 3 == 0)
                    continue;
                Terms t;
                for (int d = 0; d <= 1; ++d)
                    for (const auto& m : exponents_of_degree(A->nvars(), d))
                        poly::add_term(t, m, int(rng() % 5) - 2, A->base());
                Elem c(A, t);
                if (!A->is_polynomial())
                    c = c * Elem::variable(A, j);
                r.set(a, c);
            }
            ims.push_back(r);
        }
        try {
            return HSDerivation::make(A, sh, ims);
        } catch (const DomainError&) {
        }
    }
    throw std::runtime_error("no random HS-derivation found");
}

SubstMap random_subst(const AlgebraPtr& A, const Shape& src, const Shape& tgt, std::mt19937_64& rng, bool constant) {
    for (;;) {
        std::vector<ElemSeries> ims;
        for (int i = 0; i < src->arity(); ++i) {
            ElemSeries r(tgt, Elem(A));
            for (const auto& e : tgt->elements())
                if (e.degree() >= 1 && rng() % 2) {
                    Elem v = Elem::constant(A, int(rng() % 5) - 2);
                    if (!constant && rng() % 2)
                        v = v * Elem::variable(A, 0) + Elem::constant(A, 1);
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

TEST(HSDerivation, HasseCoefficients) {
    auto Q = qx();
    auto H = HSDerivation::parse(Q, shape_tm(1, 5), {"x+s"});
    Elem x5 = Elem::parse(Q, "x^5");
    for (int i = 0; i <= 5; ++i)
        EXPECT_EQ(H.coeff_apply({i}, x5), Elem::monomial(Q, {5 - i}, Rat(binomial(5, i))));
    auto I = HSDerivation::identity(Q, shape_tm(1, 5));
    EXPECT_EQ(I.coeff_apply({0}, x5), x5);
    EXPECT_TRUE(I.coeff_apply({3}, x5).is_zero());
    auto F3 = Algebra::polynomial(BaseRing::integers_mod(3), {"x"});
    auto H3 = HSDerivation::parse(F3, shape_tm(1, 3), {"x+s"});
    EXPECT_TRUE(H3.coeff_apply({2}, Elem::parse(F3, "x^3")).is_zero());
    EXPECT_THROW(H.coeff_apply({6}, x5), DomainError);
}

TEST(HSDerivation, RejectsBrokenRelations) {
    auto A = Algebra::make(BaseRing::integers_mod(3), {"x"}, std::vector<std::string>{"x^2"});
    EXPECT_THROW(HSDerivation::parse(A, shape_tm(1, 1), {"x+s"}), DomainError);
    EXPECT_NO_THROW(HSDerivation::parse(A, shape_tm(1, 2), {"x+x*s"}));
    EXPECT_THROW(HSDerivation::parse(qx(), shape_tm(1, 1), {"1+s"}), DomainError);
}

TEST(HSDerivation, GroupExamples) {
    auto Q = qx();
    auto sh = shape_tm(1, 4);
    auto H = HSDerivation::parse(Q, sh, {"x+s"});
    auto I = HSDerivation::identity(Q, sh);
    EXPECT_EQ(compose(H, I), H);
    EXPECT_EQ(compose(I, H), H);
    EXPECT_EQ(invert(H).image_strings(), std::vector<std::string>{"x - s"});
    EXPECT_EQ(invert(I), I);
    auto H2 = HSDerivation::parse(f2x(), sh, {"x+s"});
    EXPECT_TRUE(compose(H2, H2).is_identity());
    EXPECT_EQ(invert(H2), H2);
    auto E = HSDerivation::parse(Q, sh, {"x+x^2*s+s^3"});
    EXPECT_EQ(compose(H, E).images()[0][MultiIndex{1}], Elem::parse(Q, "1+x^2"));
}

TEST(HSDerivation, Ell) {
    auto Q = qx();
    auto sh = shape_tm(1, 4);
    EXPECT_FALSE(HSDerivation::identity(Q, sh).ell().has_value());
    auto H = HSDerivation::parse(Q, sh, {"x+s"});
    EXPECT_EQ(H.ell(), 1);
    auto phi = SubstMap::parse(Q, sh, sh, {"t^2"});
    EXPECT_EQ(subst_act(phi, H).ell(), 2);
    auto G = HSDerivation::parse(Q, shape_tm(2, 3), {"x+s2^2+s1^3"});
    EXPECT_EQ(G.ell(), 2);
    EXPECT_EQ(G.ell_alpha({3, 0}), 3);
    EXPECT_FALSE(G.ell_alpha({1, 1}).has_value());
}

TEST(HSDerivation, ScalarAction) {
    auto Q = qx();
    auto sh = shape_tm(1, 3);
    auto H = HSDerivation::parse(Q, sh, {"x+s"});
    EXPECT_TRUE(scalar_act({Elem(Q)}, H).is_identity());
    EXPECT_EQ(scalar_act({Elem::constant(Q, 1)}, H), H);
    Elem a = Elem::parse(Q, "x+2");
    EXPECT_EQ(scalar_act({a}, H).image_strings(), std::vector<std::string>{"x + (x + 2)*s"});
    auto phi = SubstMap::parse(Q, sh, sh, {"(x+2)*t"});
    EXPECT_EQ(subst_act(phi, H), scalar_act({a}, H));
    std::mt19937_64 rng(2);
    auto D = random_hs(Q, shape_tm(2, 2), rng);
    std::vector<Elem> u{Elem::parse(Q, "x"), Elem::parse(Q, "1-x")}, v{Elem::parse(Q, "3"), Elem::parse(Q, "x^2")};
    EXPECT_EQ(scalar_act(u, scalar_act(v, D)), scalar_act({u[0] * v[0], u[1] * v[1]}, D));
}

TEST(HSDerivation, SubstitutionAction) {
    auto Q = qx();
    auto H = HSDerivation::parse(Q, shape_tm(1, 2), {"x+s"});
    EXPECT_TRUE(subst_act(SubstMap::trivial(Q, shape_tm(1, 2), shape_tm(1, 2)), H).is_identity());
    auto phi = SubstMap::parse(Q, shape_tm(1, 2), shape_tm(2, 2), {"t1+t2"});
    auto E = subst_act(phi, H);
    // E_(1,1) = 2 H_2 = d^2/dx^2.
    EXPECT_EQ(E.coeff_apply({1, 1}, Elem::parse(Q, "x^3")), Elem::parse(Q, "6*x"));
}

TEST(HSDerivation, ExternalProduct) {
    auto Q = qx();
    auto H = HSDerivation::parse(Q, shape_tm(1, 2), {"x+s"});
    auto HH = external(H, H);
    EXPECT_EQ(HH.coeff_apply({1, 1}, Elem::parse(Q, "x^4")), Elem::parse(Q, "12*x^2"));
    EXPECT_EQ(HH.coeff_apply({0, 0}, Elem::parse(Q, "x^4")), Elem::parse(Q, "x^4"));
    auto I = HSDerivation::identity(Q, shape_tm(1, 1));
    auto HI = external(H, I);
    auto iota = SubstMap::combinatorial(Q, shape_tm(1, 2), HI.shape(), {0});
    EXPECT_EQ(HI, subst_act(iota, H));
}

TEST(HSDerivation, TwistExamples) {
    auto Q = qx();
    auto sh = shape_tm(1, 2);
    auto H = HSDerivation::parse(Q, sh, {"x+s"});
    auto c = SubstMap::parse(Q, sh, sh, {"3*t+t^2"});
    EXPECT_EQ(phi_twist(c, H).images(), c.images());
    auto phi = SubstMap::parse(Q, sh, sh, {"x*t"});
    EXPECT_EQ(phi_twist(phi, HSDerivation::identity(Q, sh)).images(), phi.images());
    auto tw = phi_twist(phi, H);
    // Defining identity (phi . H)~ o phi^H = phi o H~, checked on independent series.
    auto e = subst_act(phi, H);
    for (const char* text : {"x", "x^2 + s", "1 + x*s + x^3*s^2", "s^2"}) {
        auto r = parse_series(Q, sh, text, "s");
        EXPECT_EQ(e.tilde(act_left(tw, r)), phi.apply(H.tilde(r)));
    }
}

TEST(HSDerivation, RandomGroupAndTwistLaws) {
    std::vector<AlgebraPtr> algebras = {
        Algebra::polynomial(BaseRing::integers_mod(3), {"x", "y"}),
        Algebra::make(BaseRing::integers_mod(2), {"x"}, std::vector<std::string>{"x^4"}),
        Algebra::make(BaseRing::rationals(), {"x"}, std::vector<std::string>{"x^3"}),
    };
    std::vector<Shape> shapes = {shape_tm(1, 3), make_shape(CoIdeal::nbeta({1, 2})), shape_tm(2, 2)};
    std::mt19937_64 rng(23);
    for (const auto& A : algebras)
        for (const auto& sh : shapes) {
            auto D = random_hs(A, sh, rng), E = random_hs(A, sh, rng), F = random_hs(A, sh, rng);
            auto I = HSDerivation::identity(A, sh);
            EXPECT_EQ(compose(compose(D, E), F), compose(D, compose(E, F)));
            EXPECT_EQ(compose(D, invert(D)), I);
            EXPECT_EQ(compose(invert(D), D), I);
            // Degree-one additivity.
            for (int i = 0; i < sh->arity(); ++i) {
                MultiIndex u = MultiIndex::unit(sh->arity(), i);
                for (std::size_t j = 0; j < A->nvars(); ++j)
                    EXPECT_EQ(compose(D, E).images()[j][u], D.images()[j][u] + E.images()[j][u]);
            }
            // ell laws.
            auto ell = [](const HSDerivation& h) { return h.ell().value_or(1000); };
            EXPECT_GE(ell(compose(D, E)), std::min(ell(D), ell(E)));
            EXPECT_EQ(ell(invert(D)), ell(D));
            EXPECT_GE(ell(commutator(D, E)), std::min(1000, ell(D) + ell(E)));

            Shape tgt = shape_tm(2, 2);
            auto phi = random_subst(A, sh, tgt, rng, false);
            auto tw = phi_twist(phi, D);
            EXPECT_EQ(subst_act(phi, compose(D, E)), compose(subst_act(phi, D), subst_act(tw, E)));
            EXPECT_EQ(phi_twist(tw, E).images(), phi_twist(phi, compose(D, E)).images());
            EXPECT_EQ(invert(subst_act(phi, D)), subst_act(tw, invert(D)));
            auto cst = random_subst(A, sh, tgt, rng, true);
            EXPECT_EQ(phi_twist(cst, D).images(), cst.images());
            // (phi o psi)^D = phi^(psi . D) o psi^D.
            auto psi = random_subst(A, sh, sh, rng, false);
            auto phi2 = random_subst(A, sh, tgt, rng, false);
            EXPECT_EQ(phi_twist(compose(phi2, psi), D).images(),
                      compose(phi_twist(phi2, subst_act(psi, D)), phi_twist(psi, D)).images());
            // Truncation equivariance.
            Shape small = shape_tm(2, 1);
            auto tau = SubstMap::truncation(A, tgt, small);
            auto phi_small = compose(tau, phi);
            EXPECT_EQ(truncate(subst_act(phi, D), small), subst_act(phi_small, D));
        }
}
