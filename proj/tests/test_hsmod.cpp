#include "hs/hsmod.hpp"
#include "hs/random.hpp"

#include <gtest/gtest.h>

using namespace hs;

namespace {

StructureSamples samples_for(const AlgebraPtr& A, const Shape& sh, Rng& rng, int n, bool constant_maps) {
    StructureSamples s;
    for (int i = 0; i < n; ++i) {
        s.pairs.emplace_back(random_hs(A, sh, rng), random_hs(A, sh, rng));
        Shape tgt = shape_tm(2, sh->height());
        s.substitutions.emplace_back(random_subst(A, sh, tgt, rng, constant_maps), random_hs(A, sh, rng));
    }
    return s;
}

} // namespace

TEST(HSModule, TautologicalAndZero) {
    Rng rng(1);
    for (const auto& A : {Algebra::polynomial(BaseRing::rationals(), {"x"}),
                          Algebra::make(BaseRing::integers_mod(2), {"x"}, std::vector<std::string>{"x^3"})}) {
        auto s = samples_for(A, shape_tm(1, 3), rng, 4, false);
        auto rep = check_structure(tautological_structure(A), s);
        EXPECT_TRUE(rep.holds()) << rep.homomorphism.counterexample << rep.leibniz.counterexample
                                 << rep.substitution.counterexample;
        EXPECT_EQ(rep.substitution.tested, 4);
        EXPECT_TRUE(check_structure(zero_module(A), s).holds());
    }
}

TEST(HSModule, RightStructureFromAdjoint) {
    auto Q = Algebra::polynomial(BaseRing::rationals(), {"x"});
    auto D = HSDerivation::parse(Q, shape_tm(1, 2), {"x + x*s"});
    auto psi = right_tautological_structure(Q);
    auto g = psi.images(D)[0][0];
    // transpose(x d) = -(x d + 1) sends 1 to -1.
    EXPECT_EQ(g[MultiIndex{1}], Elem::constant(Q, -1));
    Rng rng(5);
    auto rep = check_structure(psi, samples_for(Q, shape_tm(1, 2), rng, 4, false));
    EXPECT_TRUE(rep.holds()) << rep.homomorphism.counterexample << rep.leibniz.counterexample
                             << rep.substitution.counterexample;
    // Psi(D)_a agrees with the transposed operator on test elements.
    auto ops = operator_series(D);
    auto ev = evaluate(psi, D);
    for (const char* f : {"1", "x", "x^3+2*x"}) {
        Elem e = Elem::parse(Q, f);
        auto got = ev.apply(constant_vector(D.shape(), {e}));
        for (const auto& a : D.shape()->elements())
            EXPECT_EQ(got[0][a], transpose(ops[a]).apply(e));
    }
}

TEST(HSModule, LieExamples) {
    auto Q = Algebra::polynomial(BaseRing::rationals(), {"x"});
    auto lie = lie_structure(Q);
    auto H = HSDerivation::parse(Q, shape_tm(1, 3), {"x+s"});
    EXPECT_EQ(lie.images(H)[0][0], one_series(Q, H.shape()));
    auto D = HSDerivation::parse(Q, shape_tm(1, 2), {"x + x^2*s"});
    EXPECT_EQ(lie.images(D)[0][0][MultiIndex{1}], Elem::parse(Q, "2*x"));
    EXPECT_EQ(lie.images(HSDerivation::identity(Q, H.shape()))[0][0], one_series(Q, H.shape()));

    // A non-constant substitution breaks (iii): phi(s) = x t.
    auto phi = SubstMap::parse(Q, H.shape(), shape_tm(1, 3), {"x*t"});
    StructureSamples s;
    s.substitutions.emplace_back(phi, H);
    CheckOptions opts;
    EXPECT_EQ(check_structure(lie, s, opts).substitution.skipped, 1);
    opts.all_substitutions = true;
    auto rep = check_structure(lie, s, opts);
    EXPECT_FALSE(rep.substitution.ok());
    EXPECT_FALSE(rep.substitution.counterexample.empty());
}

TEST(HSModule, LieAndAdjointRandom) {
    Rng rng(17);
    for (const auto& A : {Algebra::polynomial(BaseRing::rationals(), {"x"}),
                          Algebra::polynomial(BaseRing::integers_mod(3), {"x", "y"})}) {
        Shape sh = shape_tm(1, 2);
        auto s = samples_for(A, sh, rng, 3, true);
        for (const auto& psi : {lie_structure(A), adjoint_structure(A)}) {
            auto rep = check_structure(psi, s);
            EXPECT_TRUE(rep.holds()) << psi.name << rep.homomorphism.counterexample << rep.leibniz.counterexample
                                     << rep.substitution.counterexample;
            EXPECT_EQ(rep.substitution.tested, 3);
        }
        for (int i = 0; i < 3; ++i) {
            auto D = random_hs(A, sh, rng);
            std::string why;
            EXPECT_TRUE(lie_matches_classical(D, 3, &why)) << why;
            EXPECT_TRUE(adjoint_matches_classical(D, 3, &why)) << why;
            EXPECT_TRUE(lie_matches_definition(D, 3, &why)) << why;
            EXPECT_TRUE(adjoint_matches_definition(D, 2, &why)) << why;
        }
    }
}

TEST(HSModule, AdjointExamples) {
    auto Q = Algebra::polynomial(BaseRing::rationals(), {"x"});
    auto H = HSDerivation::parse(Q, shape_tm(1, 2), {"x+s"});
    auto ev = evaluate(adjoint_structure(Q), H);
    // Ad(H)_1(d) = 0, Ad(H)_1(x d) = d.
    EXPECT_TRUE(ev.apply(constant_vector(H.shape(), {Elem::constant(Q, 1)}))[0][MultiIndex{1}].is_zero());
    EXPECT_EQ(ev.apply(constant_vector(H.shape(), {Elem::parse(Q, "x")}))[0][MultiIndex{1}], Elem::constant(Q, 1));
}

TEST(HSModule, Constructions) {
    auto F3 = Algebra::polynomial(BaseRing::integers_mod(3), {"x", "y"});
    auto Q = Algebra::polynomial(BaseRing::rationals(), {"x"});
    Rng rng(3);
    auto taut = tautological_structure(Q);
    auto H = HSDerivation::parse(Q, shape_tm(1, 3), {"x+s"});
    // A (x) A and Hom(A, A) reproduce the tautological structure.
    EXPECT_EQ(tensor_structure(taut, taut).images(H), taut.images(H));
    EXPECT_EQ(hom_structure(taut, taut).images(H), taut.images(H));

    auto sQ = samples_for(Q, shape_tm(1, 2), rng, 3, true);
    auto right = right_tautological_structure(Q);
    for (const auto& psi : {hom_structure(taut, right), tensor_structure(right, lie_structure(Q)),
                            hom_structure(right, right), tensor_structure(lie_structure(Q), adjoint_structure(Q))}) {
        auto rep = check_structure(psi, sQ);
        EXPECT_TRUE(rep.holds()) << psi.name << ": " << rep.homomorphism.counterexample << rep.leibniz.counterexample
                                 << rep.substitution.counterexample;
    }
    EXPECT_THROW(tensor_structure(right, right), DomainError);
    EXPECT_THROW(hom_structure(right, taut), DomainError);

    auto s3 = samples_for(F3, shape_tm(1, 2), rng, 2, true);
    auto lie = lie_structure(F3), ad = adjoint_structure(F3);
    for (const auto& psi : {tensor_structure(lie, ad), hom_structure(lie, ad), wedge_structure(lie, 2),
                            sym_structure(ad, 2)}) {
        auto rep = check_structure(psi, s3, {2, false});
        EXPECT_TRUE(rep.holds()) << psi.name << ": " << rep.homomorphism.counterexample << rep.leibniz.counterexample
                                 << rep.substitution.counterexample;
    }
    EXPECT_EQ(wedge_structure(lie, 2).rank, 1);
    EXPECT_EQ(sym_structure(lie, 2).rank, 3);
    // wedge^2 of Omega on k[x,y] is multiplication by the Jacobian of Phi_D at degree one.
    auto D = HSDerivation::parse(F3, shape_tm(1, 1), {"x + x*y*s", "y + y*s"});
    auto w = wedge_structure(lie, 2).images(D)[0][0];
    EXPECT_EQ(w[MultiIndex{1}], Elem::parse(F3, "y+1"));
}
