#pragma once

#include "hs/series_text.hpp"

#include <string>
#include <vector>

namespace hs {

class IllDefined : public DomainError {
public:
    IllDefined(const MultiIndex& generator, const std::string& what)
        : DomainError(what), generator_(generator) {}
    const MultiIndex& generator() const { return generator_; }

private:
    MultiIndex generator_;
};

// A-linear ring map A[[s]]_source -> A[[t]]_target given by the images of s_1..s_p.
// The images of all monomials s^a, a in the source shape, are computed once on construction.
class SubstMap {
public:
    static SubstMap make(AlgebraPtr A, Shape source, Shape target, std::vector<ElemSeries> images);
    // Images written in the target variables t1..tq (or t when q = 1).
    static SubstMap parse(AlgebraPtr A, Shape source, Shape target, const std::vector<std::string>& images);
    static SubstMap trivial(AlgebraPtr A, Shape source, Shape target);
    static SubstMap identity(AlgebraPtr A, Shape shape);
    // s_i -> s_i from a shape onto a smaller one.
    static SubstMap truncation(AlgebraPtr A, Shape from, Shape to);
    // s_i -> t_{targets[i]}, or 0 when targets[i] < 0.
    static SubstMap combinatorial(AlgebraPtr A, Shape source, Shape target, const std::vector<int>& targets);

    const AlgebraPtr& algebra() const { return alg_; }
    const Shape& source() const { return source_; }
    const Shape& target() const { return target_; }
    const std::vector<ElemSeries>& images() const { return images_; }
    // Image of s^a for a in the source shape.
    const ElemSeries& power(const MultiIndex& a) const;
    // Coefficient of t^e in the image of s^a.
    Elem coeff(const MultiIndex& e, const MultiIndex& a) const;
    // Minimal order of the images (a large sentinel when all images vanish).
    int order() const;

    ElemSeries apply(const ElemSeries& r) const;

    bool is_constant_coeff() const;
    bool is_combinatorial() const;

    std::vector<std::string> image_strings(std::string_view prefix = "t") const;

private:
    SubstMap() = default;
    void build_powers();

    AlgebraPtr alg_;
    Shape source_, target_;
    std::vector<ElemSeries> images_;
    std::vector<ElemSeries> powers_; // indexed like source_->elements()
};

// psi after phi.
SubstMap compose(const SubstMap& psi, const SubstMap& phi);
// Acts as phi on the first block of variables and psi on the second.
SubstMap tensor(const SubstMap& phi, const SubstMap& psi);
// Degree-one homogeneous parts of the images.
SubstMap init(const SubstMap& phi);

inline Elem lmul(const Elem& a, const Elem& c) { return a * c; }
inline Elem rmul(const Elem& c, const Elem& a) { return c * a; }

// (phi . r)_e = sum_a C_e(phi,a) r_a, with scalars multiplied on the left by `mul(a, r_a)`.
template <class C, class Mul>
Series<C> act_left(const SubstMap& phi, const Series<C>& r, Mul mul) {
    if (!same_shape(r.shape(), phi.source()))
        throw DomainError("series shape differs from the substitution source");
    Series<C> out(phi.target(), r.zero());
    for (const auto& [a, ra] : r.coeffs())
        for (const auto& [e, c] : phi.power(a).coeffs())
            out.add_to(e, mul(c, ra));
    return out;
}

template <class C, class Mul>
Series<C> act_right(const Series<C>& r, const SubstMap& phi, Mul mul) {
    if (!same_shape(r.shape(), phi.source()))
        throw DomainError("series shape differs from the substitution source");
    Series<C> out(phi.target(), r.zero());
    for (const auto& [a, ra] : r.coeffs())
        for (const auto& [e, c] : phi.power(a).coeffs())
            out.add_to(e, mul(ra, c));
    return out;
}

template <class C>
Series<C> act_left(const SubstMap& phi, const Series<C>& r) {
    return act_left(phi, r, [](const Elem& a, const C& c) { return lmul(a, c); });
}

template <class C>
Series<C> act_right(const Series<C>& r, const SubstMap& phi) {
    return act_right(r, phi, [](const C& c, const Elem& a) { return rmul(c, a); });
}

} // namespace hs
