#include "hs/json_io.hpp"
#include "hs/random.hpp"

#include <gtest/gtest.h>

using namespace hs;

namespace {

std::vector<AlgebraPtr> sample_algebras() {
    return {Algebra::polynomial(BaseRing::rationals(), {"x"}), Algebra::polynomial(BaseRing::integers_mod(2), {"x"}),
            Algebra::polynomial(BaseRing::integers_mod(3), {"x", "y"}),
            Algebra::make(BaseRing::integers_mod(2), {"x"}, std::vector<std::string>{"x^3"})};
}

std::vector<Shape> sample_shapes() {
    return {shape_tm(1, 3), shape_tm(2, 2), shape_nbeta({1, 2}),
            make_shape(CoIdeal::from_elements(2, {{0, 0}, {1, 0}, {0, 1}, {0, 2}}))};
}

} // namespace

TEST(JsonIo, BaseRingNames) {
    EXPECT_EQ(base_from_name("Q"), BaseRing::rationals());
    EXPECT_EQ(base_from_name("Z"), BaseRing::integers());
    EXPECT_EQ(base_from_name("F5"), BaseRing::integers_mod(5));
    EXPECT_EQ(base_from_name("Z/4"), BaseRing::integers_mod(4));
    EXPECT_THROW(base_from_name("R"), ParseError);
    for (const auto& k : {BaseRing::rationals(), BaseRing::integers(), BaseRing::integers_mod(7), BaseRing::integers_mod(6)})
        EXPECT_EQ(base_from_json(base_to_json(k)), k);
}

TEST(JsonIo, RingShorthandAndRoundTrip) {
    auto A = ring_from_arg("F2[x,y]");
    EXPECT_EQ(A->nvars(), 2u);
    EXPECT_EQ(A->base(), BaseRing::integers_mod(2));
    for (const auto& B : sample_algebras())
        EXPECT_EQ(*ring_from_json(ring_to_json(B)), *B);
}

TEST(JsonIo, ShapesRoundTrip) {
    for (const auto& sh : sample_shapes())
        EXPECT_EQ(*shape_from_json(shape_to_json(sh)), *sh);
    Json explicit_shape = Json::parse(R"({"kind":"explicit","elements":[[0],[1],[2]]})");
    EXPECT_EQ(*shape_from_json(explicit_shape), *shape_tm(1, 2));
}

TEST(JsonIo, UnknownFieldsRejected) {
    EXPECT_THROW(shape_from_json(Json::parse(R"({"kind":"tm","p":1,"m":2,"extra":0})")), ParseError);
    EXPECT_THROW(ring_from_json(Json::parse(R"({"base":{"kind":"Q"},"vars":["x"],"colour":1})")), ParseError);
    auto A = ring_from_arg("Q[x]");
    EXPECT_THROW(hs_from_json(Json::parse(R"({"shape":{"kind":"tm","p":1,"m":1},"phi":{"z":"s"}})"), A), ParseError);
}

TEST(JsonIo, SeriesStringCoefficients) {
    auto A = ring_from_arg("Q[x]");
    ElemSeries r = series_from_json(A, Json::parse(R"({"shape":{"kind":"tm","p":1,"m":2},"coeffs":"1 + x*s"})"));
    EXPECT_EQ(r[MultiIndex{0}], Elem::constant(A, 1));
    EXPECT_EQ(r[MultiIndex{1}], Elem::parse(A, "x"));
    EXPECT_TRUE(r[MultiIndex{2}].is_zero());
}

TEST(JsonIo, RandomObjectsRoundTrip) {
    Rng rng(11);
    for (const auto& A : sample_algebras()) {
        for (const auto& sh : sample_shapes()) {
            for (int trial = 0; trial < 5; ++trial) {
                HSDerivation d = random_hs(A, sh, rng);
                Json j = hs_to_json(d);
                EXPECT_EQ(hs_from_json(j), d);
                EXPECT_EQ(hs_to_json(hs_from_json(j)).dump(), j.dump());

                ElemSeries r = d.apply(Elem::parse(A, "x"));
                EXPECT_EQ(series_from_json(A, series_to_json(r)), r);

                SubstMap phi = random_subst(A, sh, shape_tm(2, 2), rng, trial % 2 == 0);
                Json pj = subst_to_json(phi);
                EXPECT_EQ(subst_to_json(subst_from_json(A, pj)).dump(), pj.dump());
            }
            // Every generator maps to x; this preserves x^3 in F2[x]/(x^3).
            Derivation delta = Derivation::make(A, std::vector<Elem>(A->nvars(), Elem::parse(A, "x")));
            EXPECT_EQ(derivation_from_json(A, derivation_to_json(delta)), delta);
        }
    }
}
