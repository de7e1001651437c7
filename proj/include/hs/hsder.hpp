#pragma once

#include "hs/subst.hpp"

#include <optional>
#include <string>
#include <vector>

namespace hs {

// f evaluated at x_j -> at[j] inside A[[s]]_shape.
ElemSeries evaluate(const AlgebraPtr& A, const Terms& f, const std::vector<ElemSeries>& at);

// A point of HS^p_k(A; shape), stored as the algebra map Phi_D on the generators:
// Phi_D(x_j) = sum_a D_a(x_j) s^a.
class HSDerivation {
public:
    static HSDerivation make(AlgebraPtr A, Shape shape, std::vector<ElemSeries> images);
    // Images written in the algebra variables and s1..sp (or s when p = 1), one per generator.
    static HSDerivation parse(AlgebraPtr A, Shape shape, const std::vector<std::string>& images);
    static HSDerivation identity(AlgebraPtr A, Shape shape);

    const AlgebraPtr& algebra() const { return alg_; }
    const Shape& shape() const { return shape_; }
    const std::vector<ElemSeries>& images() const { return images_; }

    ElemSeries apply(const Elem& a) const;
    ElemSeries apply_terms(const Terms& f) const;
    // D_a(x) for a in the shape.
    Elem coeff_apply(const MultiIndex& a, const Elem& x) const;
    // Coefficientwise extension to A[[s]]: sum_e x_e s^e -> sum_e Phi_D(x_e) s^e.
    ElemSeries tilde(const ElemSeries& r) const;
    // D_a as a derivation when D_b = 0 for 0 < b < a; in particular D_{e_i}.
    Derivation component_derivation(const MultiIndex& a) const;

    // ord(D - Id); nullopt encodes infinity (D = Id).
    std::optional<int> ell() const;
    std::optional<int> ell_alpha(const MultiIndex& a) const;

    bool is_identity() const;
    std::vector<std::string> image_strings() const;

    friend bool operator==(const HSDerivation& a, const HSDerivation& b) {
        return same_shape(a.shape_, b.shape_) && a.images_ == b.images_;
    }
    friend bool operator!=(const HSDerivation& a, const HSDerivation& b) { return !(a == b); }

private:
    HSDerivation() = default;
    AlgebraPtr alg_;
    Shape shape_;
    std::vector<ElemSeries> images_;
};

HSDerivation compose(const HSDerivation& d, const HSDerivation& e);
HSDerivation invert(const HSDerivation& d);
HSDerivation commutator(const HSDerivation& d, const HSDerivation& e);
HSDerivation truncate(const HSDerivation& d, const Shape& smaller);
// (a . D)_b = a^b D_b.
HSDerivation scalar_act(const std::vector<Elem>& a, const HSDerivation& d);
HSDerivation subst_act(const SubstMap& phi, const HSDerivation& d);
// The unique phi^D with (phi . D)~ o phi^D = phi o D~.
SubstMap phi_twist(const SubstMap& phi, const HSDerivation& d);
// (D [x] E)_(a,b) = D_a o E_b.
HSDerivation external(const HSDerivation& d, const HSDerivation& e);

struct DElementReport {
    bool holds = true;
    bool exact = true;       // false when the test set was cut at a degree cap
    int degree_cap = 0;      // cap used for polynomial algebras
    std::string failure;     // first violated instance, if any
};

// Elements b on which an operator identity is tested: the basis for finite-dimensional A,
// otherwise standard monomials up to the cap.
std::vector<Elem> operator_test_set(const AlgebraPtr& A, int degree_cap, bool* exact);

// Checks r_a(x_j * b) = sum_{c+e=a} D_c(x_j) r_e(b) for all a, generators x_j and test elements b.
// The set of multipliers satisfying the identity is a subalgebra, so generators suffice.
template <class C, class Apply>
DElementReport is_D_element(const Series<C>& r, const HSDerivation& d, Apply apply, int degree_cap) {
    if (!same_shape(r.shape(), d.shape()))
        throw DomainError("series shape differs from the HS-derivation shape");
    const AlgebraPtr& A = d.algebra();
    DElementReport rep;
    rep.degree_cap = degree_cap;
    std::vector<Elem> test = operator_test_set(A, degree_cap, &rep.exact);
    for (const auto& a : r.shape()->elements())
        for (std::size_t j = 0; j < A->nvars(); ++j) {
            Elem xj = Elem::variable(A, j);
            for (const auto& b : test) {
                Elem lhs = apply(r[a], xj * b);
                Elem rhs(A);
                for (const auto& [c, dc] : d.images()[j].coeffs())
                    if (c.leq(a))
                        rhs += dc * apply(r[a - c], b);
                if (lhs != rhs) {
                    rep.holds = false;
                    rep.failure = "index " + a.to_string() + ", generator " + A->vars()[j] + ", element " + b.to_string();
                    return rep;
                }
            }
        }
    return rep;
}

} // namespace hs
