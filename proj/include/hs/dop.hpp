#pragma once

#include "hs/hsder.hpp"
#include "hs/linalg.hpp"

#include <functional>
#include <map>
#include <string>
#include <string_view>

namespace hs {

// Differential operator of A over k. For polynomial A it is stored in the divided-power basis
// sum_b c_b d^[b] with c_b in A; for finite-dimensional A as a matrix on the monomial basis
// (column j holds the coordinates of the image of basis element j).
class DiffOp {
public:
    enum class Kind { DividedPower, Matrix };
    using DPTerms = std::map<MultiIndex, Elem>;

    DiffOp() = default;
    static DiffOp zero(const AlgebraPtr& A);
    static DiffOp identity(const AlgebraPtr& A);
    static DiffOp multiplication(const Elem& a);
    // d^[b]; polynomial A only.
    static DiffOp divided(const AlgebraPtr& A, const MultiIndex& b);
    static DiffOp from_dp_terms(const AlgebraPtr& A, DPTerms terms);
    static DiffOp from_matrix(const AlgebraPtr& A, Mat m);
    // A k-linear map given by its values. Finite-dimensional A: exact matrix. Polynomial A:
    // interpolated in the divided-power basis assuming order <= order_bound, with a residual check.
    static DiffOp from_function(const AlgebraPtr& A, const std::function<Elem(const Elem&)>& f, int order_bound);
    // Text such as `x^2*d[2] + d[1]`; `*` is composition.
    static DiffOp parse(const AlgebraPtr& A, std::string_view text);

    Kind kind() const { return kind_; }
    const AlgebraPtr& algebra() const { return alg_; }
    const DPTerms& dp_terms() const { return dp_; }
    const Mat& matrix() const { return mat_; }

    Elem apply(const Elem& a) const;
    bool is_zero() const;
    // Order in the differential filtration; -1 for the zero operator.
    int order() const;

    DiffOp operator+(const DiffOp& o) const;
    DiffOp operator-(const DiffOp& o) const;
    DiffOp operator-() const;
    // Composition: (P * Q)(a) = P(Q(a)).
    DiffOp operator*(const DiffOp& o) const;
    DiffOp scaled(const Rat& c) const;

    std::string to_string() const;

    friend bool operator==(const DiffOp& a, const DiffOp& b);
    friend bool operator!=(const DiffOp& a, const DiffOp& b) { return !(a == b); }

private:
    void require_same(const DiffOp& o) const;
    AlgebraPtr alg_;
    Kind kind_ = Kind::DividedPower;
    DPTerms dp_;
    Mat mat_;
};

DiffOp commutator(const DiffOp& p, const DiffOp& q);
// Formal adjoint on polynomial A: (c d^[b])^t = (-1)^|b| d^[b] o c.
DiffOp transpose(const DiffOp& p);
// Coefficient interpolation for an operator on polynomial A of order <= n.
DiffOp to_dp_basis(const AlgebraPtr& A, const std::function<Elem(const Elem&)>& f, int n);

inline DiffOp lmul(const Elem& a, const DiffOp& p) { return DiffOp::multiplication(a) * p; }
inline DiffOp rmul(const DiffOp& p, const Elem& a) { return p * DiffOp::multiplication(a); }

using OpSeries = Series<DiffOp>;

OpSeries one_op_series(const AlgebraPtr& A, const Shape& shape);
// The series sum_a D_a s^a of operators.
OpSeries operator_series(const HSDerivation& d);
DElementReport is_D_element(const OpSeries& r, const HSDerivation& d, int degree_cap);
// Unit series of operators applied to an element series: <r, e>.
ElemSeries pair(const OpSeries& r, const ElemSeries& e);

// Homogeneous-or-mixed element sum_b c_b gamma_b(xi) of gr D_{A/k} for polynomial A,
// where xi_i is the symbol of d_i and gamma_b multiply by gamma_b gamma_b' = C(b+b',b) gamma_{b+b'}.
class GrElem {
public:
    using Terms = std::map<MultiIndex, Elem>;

    GrElem() = default;
    explicit GrElem(AlgebraPtr A) : alg_(std::move(A)) {}
    GrElem(AlgebraPtr A, Terms t);
    static GrElem one(const AlgebraPtr& A);
    static GrElem gamma(const AlgebraPtr& A, const MultiIndex& b, const Elem& c);

    const AlgebraPtr& algebra() const { return alg_; }
    const Terms& terms() const { return t_; }
    bool is_zero() const { return t_.empty(); }
    Elem coefficient(const MultiIndex& b) const;

    GrElem operator+(const GrElem& o) const;
    GrElem operator-(const GrElem& o) const;
    GrElem operator-() const;
    GrElem operator*(const GrElem& o) const;
    GrElem scaled(const Elem& a) const;

    std::string to_string() const;
    friend bool operator==(const GrElem& a, const GrElem& b) { return a.t_ == b.t_; }
    friend bool operator!=(const GrElem& a, const GrElem& b) { return !(a == b); }

private:
    AlgebraPtr alg_;
    Terms t_;
};

inline GrElem lmul(const Elem& a, const GrElem& g) { return g.scaled(a); }
inline GrElem rmul(const GrElem& g, const Elem& a) { return g.scaled(a); }

using GrSeries = Series<GrElem>;

// Class of P in gr_d; requires order(P) <= d.
GrElem symbol(const DiffOp& p, int d);
// sum_a sigma_|a|(r_a) s^a for r with order(r_a) <= |a|.
GrSeries total_symbol(const OpSeries& r);

} // namespace hs
