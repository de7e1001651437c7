#include "hs/dpexp.hpp"

#include <gtest/gtest.h>

#include <random>

using namespace hs;

namespace {

auto elem_scale(const AlgebraPtr& A) {
    return [A](const Rat& c, const Elem& e) { return e.scaled(c); };
}

auto dp_scale(const AlgebraPtr& A) {
    return [A](const Rat& c, const DPElement& e) { return e.scaled(Elem::constant(A, c)); };
}

auto gr_scale(const AlgebraPtr& A) {
    return [A](const Rat& c, const GrElem& e) { return e.scaled(Elem::constant(A, c)); };
}

ElemSeries univariate(const AlgebraPtr& A, int m, const std::vector<std::string>& coeffs) {
    ElemSeries r = zero_series(A, shape_tm(1, m));
    for (std::size_t i = 0; i < coeffs.size(); ++i)
        r.set(MultiIndex{int(i)}, Elem::parse(A, coeffs[i]));
    return r;
}

} // namespace

TEST(DividedPowers, SmallProducts) {
    auto Z = Algebra::polynomial(BaseRing::integers(), {});
    Elem one = Elem::constant(Z, 1);
    auto g = [&](int i) { return DPElement::gamma(Z, 8, MultiIndex{i}, one); };
    EXPECT_EQ(g(1) * g(1), DPElement::gamma(Z, 8, MultiIndex{2}, Elem::constant(Z, 2)));
    EXPECT_EQ(g(2) * g(3), DPElement::gamma(Z, 8, MultiIndex{5}, Elem::constant(Z, 10)));
    EXPECT_EQ(g(0) * g(4), g(4));
    EXPECT_THROW(g(5) * g(4), DomainError);
    EXPECT_THROW(DPElement::gamma(Z, 3, MultiIndex{4}, one), DomainError);
}

TEST(DividedPowers, TableMatchesFactorialQuotients) {
    // In Q[x]: (x^i/i!)(x^j/j!) = C(i+j,i) x^{i+j}/(i+j)!.
    auto table = gamma_table(1, 8);
    auto fact = [](int n) {
        Int f = 1;
        for (int i = 2; i <= n; ++i)
            f *= i;
        return f;
    };
    EXPECT_EQ(table.size(), 28u);
    for (const auto& e : table) {
        int i = e.left[0], j = e.right[0];
        Rat ratio = Rat(fact(i + j)) / (Rat(fact(i)) * Rat(fact(j)));
        ratio.canonicalize();
        EXPECT_EQ(ratio.get_den(), 1);
        EXPECT_EQ(Rat(e.coefficient), ratio) << i << "," << j;
    }
}

TEST(DividedPowers, TwoGeneratorTable) {
    for (const auto& e : gamma_table(2, 4)) {
        Int expect = binomial(e.result[0], e.left[0]) * binomial(e.result[1], e.left[1]);
        EXPECT_EQ(e.coefficient, expect);
    }
}

TEST(ExponentialSeries, Examples) {
    auto Q = Algebra::polynomial(BaseRing::rationals(), {"x"});
    Elem one = Elem::constant(Q, 1);
    auto r = univariate(Q, 2, {"1", "1", "1"});
    auto c = exp_check(r, one, Q->base(), elem_scale(Q));
    EXPECT_FALSE(c.binomial);
    EXPECT_FALSE(c.functional);

    auto e = univariate(Q, 4, {"1", "x", "1/2*x^2", "1/6*x^3", "1/24*x^4"});
    auto ok = exp_check(e, one, Q->base(), elem_scale(Q));
    EXPECT_TRUE(ok.binomial);
    EXPECT_TRUE(ok.functional);

    auto bad_const = univariate(Q, 2, {"2", "x", "0"});
    EXPECT_FALSE(exp_check(bad_const, one, Q->base(), elem_scale(Q)).holds());

    // Over F2, 1 + t^2 + t^3 satisfies neither route; 1 + t + t^2 + t^3 with r_2 = 0 is not exp either.
    auto F2 = Algebra::polynomial(BaseRing::integers_mod(2), {"x"});
    Elem one2 = Elem::constant(F2, 1);
    auto f = univariate(F2, 3, {"1", "x", "0", "0"});
    auto fc = exp_check(f, one2, F2->base(), elem_scale(F2));
    EXPECT_EQ(fc.binomial, fc.functional);
    EXPECT_FALSE(fc.holds()); // r_1^2 = x^2 != 2 r_2 = 0
    auto g = univariate(F2, 3, {"1", "0", "x", "0"});
    auto gc = exp_check(g, one2, F2->base(), elem_scale(F2));
    EXPECT_TRUE(gc.holds());
}

TEST(ExponentialSeries, RoutesAgreeOnRandomSeries) {
    std::mt19937 rng(7);
    for (int k : {2, 3}) {
        auto A = Algebra::polynomial(BaseRing::integers_mod(k), {"x"});
        Elem one = Elem::constant(A, 1);
        std::uniform_int_distribution<int> pick(0, k - 1);
        int agree = 0, exps = 0;
        for (int trial = 0; trial < 200; ++trial) {
            ElemSeries r = zero_series(A, shape_tm(1, 3));
            r.set(MultiIndex{0}, one);
            for (int i = 1; i <= 3; ++i)
                r.set(MultiIndex{i}, Elem::constant(A, pick(rng)) + Elem::variable(A, 0).scaled(Rat(pick(rng))));
            auto c = exp_check(r, one, A->base(), elem_scale(A));
            agree += c.binomial == c.functional;
            exps += c.holds();
        }
        EXPECT_EQ(agree, 200);
        EXPECT_GT(exps, 0);
    }
}

TEST(ExponentialSeries, GammaMapIsExponential) {
    auto A = Algebra::polynomial(BaseRing::integers(), {"x", "y"});
    std::vector<Elem> v{Elem::parse(A, "x"), Elem::parse(A, "y+1")};
    auto r = gamma_map(v, 4);
    auto one = DPElement::one(A, 2, 4);
    auto c = exp_check(r, one, A->base(), dp_scale(A));
    EXPECT_TRUE(c.binomial);
    EXPECT_TRUE(c.functional);
    EXPECT_EQ(r[MultiIndex{0}], one);
    EXPECT_EQ(r[MultiIndex{1}].component(1), r[MultiIndex{1}]);

    // gamma(v + w) = gamma(v) gamma(w) and a . gamma(v) = gamma(a v).
    std::vector<Elem> w{Elem::parse(A, "y"), Elem::parse(A, "-x")};
    std::vector<Elem> vw{v[0] + w[0], v[1] + w[1]};
    EXPECT_EQ(gamma_map(vw, 4), r * gamma_map(w, 4));
    Elem a = Elem::parse(A, "x+2");
    auto scaled = exp_scale(one.scaled(a), r, one);
    EXPECT_EQ(scaled, gamma_map({a * v[0], a * v[1]}, 4));
    EXPECT_TRUE(exp_check(r * gamma_map(w, 4), one, A->base(), dp_scale(A)).holds());
}

TEST(ExponentialSeries, ChiExamples) {
    auto F2 = Algebra::polynomial(BaseRing::integers_mod(2), {"x"});
    auto chi = vartheta_eval(Derivation::partial(F2, 0), 3).chi;
    for (int i = 0; i <= 3; ++i)
        EXPECT_EQ(chi[MultiIndex{i}], GrElem::gamma(F2, MultiIndex{i}, Elem::constant(F2, 1)));
    EXPECT_TRUE(exp_check(chi, GrElem::one(F2), F2->base(), gr_scale(F2)).holds());

    auto Q = Algebra::polynomial(BaseRing::rationals(), {"x"});
    Derivation xd = Derivation::make(Q, {Elem::parse(Q, "x")});
    auto chiq = vartheta_eval(xd, 2).chi;
    EXPECT_EQ(chiq[MultiIndex{0}], GrElem::one(Q));
    EXPECT_EQ(chiq[MultiIndex{1}], GrElem::gamma(Q, MultiIndex{1}, Elem::parse(Q, "x")));
    EXPECT_EQ(chiq[MultiIndex{2}], GrElem::gamma(Q, MultiIndex{2}, Elem::parse(Q, "x^2")));
    EXPECT_TRUE(exp_check(chiq, GrElem::one(Q), Q->base(), gr_scale(Q)).holds());

    auto quotient = Algebra::make(BaseRing::integers_mod(2), {"x"}, std::vector<std::string>{"x^2"});
    EXPECT_THROW(vartheta_eval(Derivation::make(quotient, {Elem::constant(quotient, 1)}), 2), DomainError);
}

TEST(ExponentialSeries, ChiIgnoresHigherPerturbation) {
    // Composing an integral with E, E_1 = 0, gives another integral with the same chi.
    auto F3 = Algebra::polynomial(BaseRing::integers_mod(3), {"x", "y"});
    Derivation delta = Derivation::make(F3, {Elem::parse(F3, "y"), Elem::parse(F3, "x^2")});
    auto base = vartheta_eval(delta, 4);
    const HSDerivation& D = *base.integration.integral;
    std::mt19937 rng(11);
    std::uniform_int_distribution<int> pick(0, 2);
    for (int trial = 0; trial < 5; ++trial) {
        std::vector<std::string> imgs;
        for (const char* var : {"x", "y"}) {
            std::string img = var;
            for (int i = 2; i <= 4; ++i)
                img += " + " + std::to_string(pick(rng)) + "*x*y^" + std::to_string(pick(rng)) + "*s^" + std::to_string(i);
            imgs.push_back(img);
        }
        auto E = HSDerivation::parse(F3, shape_tm(1, 4), imgs);
        auto DE = compose(D, E);
        EXPECT_EQ(DE.component_derivation(MultiIndex{1}), delta);
        EXPECT_EQ(chi_of(DE), base.chi);
    }
}
