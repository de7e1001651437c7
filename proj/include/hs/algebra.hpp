#pragma once

#include "hs/base_ring.hpp"
#include "hs/multi_index.hpp"

#include <map>
#include <memory>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

namespace hs {

inline constexpr int kDefaultDegreeCap = 12;

// Sparse polynomial: exponent vector -> nonzero coefficient, leading term first.
using Terms = std::map<MultiIndex, Rat, GrevlexGreater>;

// Prod_i C(a_i, b_i), computed over Z.
Int multi_binomial(const MultiIndex& a, const MultiIndex& b);

namespace poly {
void add_term(Terms& t, const MultiIndex& m, const Rat& c, const BaseRing& k);
Terms add(const Terms& a, const Terms& b, const BaseRing& k);
Terms sub(const Terms& a, const Terms& b, const BaseRing& k);
Terms mul(const Terms& a, const Terms& b, const BaseRing& k);
Terms scale(const Terms& a, const Rat& c, const BaseRing& k);
Terms partial(const Terms& a, std::size_t i, const BaseRing& k);
// Divided-power derivative: x^a -> C(a,b) x^(a-b).
Terms divided_partial(const Terms& a, const MultiIndex& b, const BaseRing& k);
int degree(const Terms& a);
std::string format(const Terms& a, const std::vector<std::string>& vars);
Terms parse(std::string_view text, const std::vector<std::string>& vars, const BaseRing& k);
} // namespace poly

struct ConfluenceReport {
    std::string method; // "free", "buchberger" or "triangular-monic"
    bool already_confluent = true;
    std::vector<std::string> system;
};

class Algebra;
using AlgebraPtr = std::shared_ptr<const Algebra>;

// k[x_1..x_n]/I with grevlex normal forms.
class Algebra : public std::enable_shared_from_this<Algebra> {
public:
    static AlgebraPtr make(const BaseRing& k, std::vector<std::string> vars,
                           const std::vector<Terms>& relations, int degree_cap = kDefaultDegreeCap);
    static AlgebraPtr make(const BaseRing& k, std::vector<std::string> vars,
                           const std::vector<std::string>& relations, int degree_cap = kDefaultDegreeCap);
    static AlgebraPtr polynomial(const BaseRing& k, std::vector<std::string> vars);

    const BaseRing& base() const { return base_; }
    std::size_t nvars() const { return vars_.size(); }
    const std::vector<std::string>& vars() const { return vars_; }
    std::optional<std::size_t> var_index(std::string_view name) const;
    const std::vector<Terms>& relations() const { return relations_; }
    const std::vector<Terms>& groebner_basis() const { return gb_; }
    const ConfluenceReport& report() const { return report_; }
    int degree_cap() const { return degree_cap_; }

    bool is_polynomial() const { return relations_.empty(); }
    bool is_finite_dim() const { return finite_dim_; }
    // Standard monomials (not divisible by any leading monomial); finite-dimensional case only.
    const std::vector<MultiIndex>& monomial_basis() const;
    std::optional<std::size_t> basis_index(const MultiIndex& m) const;
    // Standard monomials of total degree at most d.
    std::vector<MultiIndex> standard_monomials(int d) const;
    bool is_standard(const MultiIndex& m) const;

    Terms normal_form(Terms a) const;
    std::string describe() const;

    friend bool operator==(const Algebra& a, const Algebra& b) {
        return a.base_ == b.base_ && a.vars_ == b.vars_ && a.gb_ == b.gb_;
    }

private:
    Algebra(const BaseRing& k, std::vector<std::string> vars, int cap) : base_(k), vars_(std::move(vars)), degree_cap_(cap) {}
    void complete();

    BaseRing base_;
    std::vector<std::string> vars_;
    std::vector<Terms> relations_;
    std::vector<Terms> gb_;
    ConfluenceReport report_;
    int degree_cap_;
    bool finite_dim_ = false;
    std::vector<MultiIndex> basis_;
    std::map<MultiIndex, std::size_t> basis_pos_;
};

bool same_algebra(const AlgebraPtr& a, const AlgebraPtr& b);

// Element of an Algebra, always in normal form.
class Elem {
public:
    Elem() = default;
    explicit Elem(AlgebraPtr A) : alg_(std::move(A)) {}
    Elem(AlgebraPtr A, Terms t);

    static Elem constant(AlgebraPtr A, const Rat& c);
    static Elem variable(AlgebraPtr A, std::size_t i);
    static Elem monomial(AlgebraPtr A, const MultiIndex& m, const Rat& c = 1);
    static Elem parse(AlgebraPtr A, std::string_view text);
    static Elem from_coordinates(AlgebraPtr A, const std::vector<Rat>& coords);

    const AlgebraPtr& algebra() const { return alg_; }
    const Terms& terms() const { return t_; }
    bool is_zero() const { return t_.empty(); }
    int degree() const { return poly::degree(t_); }
    Rat coefficient(const MultiIndex& m) const;
    // Constant value when the element lies in k.
    std::optional<Rat> constant_value() const;
    // Coordinates on the standard monomial basis (finite-dimensional algebras).
    std::vector<Rat> coordinates() const;

    Elem operator+(const Elem& o) const;
    Elem operator-(const Elem& o) const;
    Elem operator*(const Elem& o) const;
    Elem operator-() const;
    Elem& operator+=(const Elem& o) { return *this = *this + o; }
    Elem& operator-=(const Elem& o) { return *this = *this - o; }
    Elem& operator*=(const Elem& o) { return *this = *this * o; }
    Elem scaled(const Rat& c) const;
    Elem pow(unsigned e) const;
    // Derivatives of the normal-form representative; callers guarantee well-definedness.
    Elem partial(std::size_t i) const;
    Elem divided_partial(const MultiIndex& b) const;

    std::string to_string() const;

    friend bool operator==(const Elem& a, const Elem& b) { return a.t_ == b.t_; }
    friend bool operator!=(const Elem& a, const Elem& b) { return !(a == b); }

private:
    AlgebraPtr alg_;
    Terms t_;
};

// k-derivation of A, stored by its values on the generators.
class Derivation {
public:
    static Derivation make(AlgebraPtr A, std::vector<Elem> images);
    static Derivation partial(AlgebraPtr A, std::size_t i);
    static Derivation zero(AlgebraPtr A);

    const AlgebraPtr& algebra() const { return alg_; }
    const std::vector<Elem>& images() const { return images_; }
    Elem apply(const Elem& a) const;
    // sum_j (d f / d x_j) delta(x_j) for an arbitrary representative f.
    Elem apply_terms(const Terms& f) const;
    Derivation scaled(const Elem& a) const;
    Derivation operator+(const Derivation& o) const;
    bool is_zero() const;

    friend bool operator==(const Derivation& a, const Derivation& b) { return a.images_ == b.images_; }

private:
    AlgebraPtr alg_;
    std::vector<Elem> images_;
};

} // namespace hs
