#pragma once

#include "hs/dop.hpp"
#include "hs/intder.hpp"

#include <map>
#include <string>
#include <vector>

namespace hs {

struct ExpCheck {
    bool binomial = true;   // C(i+j,i) r_{i+j} = r_i r_j
    bool functional = true; // r(t+t') = r(t) r(t')
    std::string failure;
    bool holds() const { return binomial && functional; }
};

// Membership of a univariate series r over t_m in EXP_m(B). `scale(c, b)` multiplies b in B by the
// scalar c in k; both characterisations are evaluated and reported separately.
template <class C, class Scale>
ExpCheck exp_check(const Series<C>& r, const C& one, const BaseRing& k, Scale scale) {
    ExpCheck out;
    const Shape& sh = r.shape();
    if (sh->arity() != 1 || *sh != CoIdeal::tm(1, sh->height()))
        throw DomainError("exponential-type series live over univariate shapes t_m");
    int m = sh->height();
    if (!(r[MultiIndex{0}] == one)) {
        out.binomial = out.functional = false;
        out.failure = "constant coefficient is not 1";
        return out;
    }
    for (int i = 1; i <= m && out.binomial; ++i)
        for (int j = i; i + j <= m; ++j) {
            C lhs = scale(Rat(binomial(i + j, i)), r[MultiIndex{i + j}]);
            if (!(lhs == r[MultiIndex{i}] * r[MultiIndex{j}])) {
                out.binomial = false;
                out.failure = "binomial identity fails at (" + std::to_string(i) + "," + std::to_string(j) + ")";
                break;
            }
        }
    // Constant-coefficient maps over k itself, acting on B-valued series through `scale`.
    AlgebraPtr K = Algebra::polynomial(k, {});
    Shape two = shape_tm(2, m);
    auto iota1 = SubstMap::combinatorial(K, sh, two, {0});
    auto iota2 = SubstMap::combinatorial(K, sh, two, {1});
    auto sum = SubstMap::parse(K, sh, two, {"t1+t2"});
    auto act = [&](const SubstMap& phi) {
        return act_left(phi, r, [&](const Elem& c, const C& b) { return scale(*c.constant_value(), b); });
    };
    if (!(act(sum) == act(iota1) * act(iota2))) {
        out.functional = false;
        if (out.failure.empty())
            out.failure = "r(t+t') differs from r(t) r(t')";
    }
    return out;
}

// b . r = sum_i b^i r_i t^i.
template <class C>
Series<C> exp_scale(const C& b, const Series<C>& r, const C& one) {
    Series<C> out(r.shape(), r.zero());
    C power = one;
    for (int i = 0; i <= r.shape()->height(); ++i) {
        out.set(MultiIndex{i}, power * r[MultiIndex{i}]);
        power = power * b;
    }
    return out;
}

// Element of Gamma_{A,m}(A^rank) in the basis gamma_b, |b| <= m.
class DPElement {
public:
    using Terms = std::map<MultiIndex, Elem>;

    DPElement() = default;
    DPElement(AlgebraPtr A, int rank, int trunc) : alg_(std::move(A)), rank_(rank), trunc_(trunc) {}
    static DPElement one(const AlgebraPtr& A, int rank, int trunc);
    static DPElement gamma(const AlgebraPtr& A, int trunc, const MultiIndex& b, const Elem& c);

    const AlgebraPtr& algebra() const { return alg_; }
    int rank() const { return rank_; }
    int truncation() const { return trunc_; }
    const Terms& terms() const { return t_; }
    bool is_zero() const { return t_.empty(); }
    Elem coefficient(const MultiIndex& b) const;
    // Part of degree d.
    DPElement component(int d) const;

    DPElement operator+(const DPElement& o) const;
    DPElement operator-(const DPElement& o) const;
    DPElement operator-() const;
    // Errors when a product lands above the truncation degree.
    DPElement operator*(const DPElement& o) const;
    DPElement scaled(const Elem& a) const;

    std::string to_string() const;
    friend bool operator==(const DPElement& a, const DPElement& b) { return a.t_ == b.t_; }
    friend bool operator!=(const DPElement& a, const DPElement& b) { return !(a == b); }

private:
    void add(const MultiIndex& b, const Elem& c);
    AlgebraPtr alg_;
    int rank_ = 0;
    int trunc_ = 0;
    Terms t_;
};

using DPSeries = Series<DPElement>;

// gamma(x) = sum_i gamma_i(x) t^i for x = sum_j x_j e_j in A^rank.
DPSeries gamma_map(const std::vector<Elem>& x, int m);

struct GammaProduct {
    MultiIndex left, right, result;
    Int coefficient;
};
// gamma_b gamma_b' = coefficient * gamma_{b+b'} over Z for |b|,|b'| >= 1 and |b+b'| <= max_degree.
std::vector<GammaProduct> gamma_table(int rank, int max_degree);

// chi_m(delta) = sum_i sigma_i(D_i) t^i for an m-integral D of delta (polynomial A).
struct ChiResult {
    IntegralResult integration;
    GrSeries chi;
};
ChiResult vartheta_eval(const Derivation& delta, int m, const IntegrateOptions& opts = {});
// The same series for a given integral.
GrSeries chi_of(const HSDerivation& d);

} // namespace hs
