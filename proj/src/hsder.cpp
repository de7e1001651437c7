#include "hs/hsder.hpp"

namespace hs {

namespace {

void require_compatible(const HSDerivation& d, const HSDerivation& e) {
    if (!same_algebra(d.algebra(), e.algebra()) || !same_shape(d.shape(), e.shape()))
        throw DomainError("HS-derivations live over different algebras or shapes");
}

} // namespace

HSDerivation HSDerivation::make(AlgebraPtr A, Shape shape, std::vector<ElemSeries> images) {
    if (images.size() != A->nvars())
        throw DomainError("HS-derivation needs one image per generator");
    MultiIndex zero(shape->arity());
    for (std::size_t j = 0; j < images.size(); ++j) {
        if (!same_shape(images[j].shape(), shape))
            throw DomainError("HS-derivation image has the wrong shape");
        if (images[j][zero] != Elem::variable(A, j))
            throw DomainError("constant term of the image of " + A->vars()[j] + " must be " + A->vars()[j]);
    }
    HSDerivation d;
    d.alg_ = std::move(A);
    d.shape_ = std::move(shape);
    d.images_ = std::move(images);
    for (const auto& f : d.alg_->relations()) {
        ElemSeries v = d.apply_terms(f);
        if (!v.is_zero())
            throw DomainError("HS-derivation does not preserve the relation " +
                              poly::format(f, d.alg_->vars()) + ": image " + format_series(v, "s"));
    }
    return d;
}

HSDerivation HSDerivation::parse(AlgebraPtr A, Shape shape, const std::vector<std::string>& images) {
    std::vector<ElemSeries> ims;
    for (const auto& t : images)
        ims.push_back(parse_series(A, shape, t, "s"));
    return make(std::move(A), std::move(shape), std::move(ims));
}

HSDerivation HSDerivation::identity(AlgebraPtr A, Shape shape) {
    std::vector<ElemSeries> ims;
    for (std::size_t j = 0; j < A->nvars(); ++j)
        ims.push_back(ElemSeries::constant(shape, Elem::variable(A, j), Elem(A)));
    return make(std::move(A), std::move(shape), std::move(ims));
}

ElemSeries evaluate(const AlgebraPtr& A, const Terms& f, const std::vector<ElemSeries>& at) {
    if (at.size() != A->nvars())
        throw DomainError("evaluation needs one series per generator");
    const Shape& shape = at.front().shape();
    // Powers of the arguments are cached per call.
    std::vector<std::vector<ElemSeries>> pw(at.size());
    auto power = [&](std::size_t j, int e) -> const ElemSeries& {
        auto& v = pw[j];
        if (v.empty())
            v.push_back(one_series(A, shape));
        while (int(v.size()) <= e)
            v.push_back(v.back() * at[j]);
        return v[e];
    };
    ElemSeries out = zero_series(A, shape);
    for (const auto& [m, c] : f) {
        ElemSeries t = ElemSeries::constant(shape, Elem::constant(A, c), Elem(A));
        for (std::size_t j = 0; j < m.size(); ++j)
            if (m[j] > 0)
                t = t * power(j, m[j]);
        out = out + t;
    }
    return out;
}

ElemSeries HSDerivation::apply_terms(const Terms& f) const {
    if (images_.empty()) {
        ElemSeries out = zero_series(alg_, shape_);
        for (const auto& [m, c] : f)
            out.add_to(MultiIndex(shape_->arity()), Elem::constant(alg_, c));
        return out;
    }
    return evaluate(alg_, f, images_);
}

ElemSeries HSDerivation::apply(const Elem& a) const { return apply_terms(a.terms()); }

Elem HSDerivation::coeff_apply(const MultiIndex& a, const Elem& x) const {
    if (!shape_->contains(a))
        throw DomainError("index " + a.to_string() + " outside the HS-derivation shape");
    return apply(x)[a];
}

ElemSeries HSDerivation::tilde(const ElemSeries& r) const {
    if (!same_shape(r.shape(), shape_))
        throw DomainError("series shape differs from the HS-derivation shape");
    ElemSeries out = zero_series(alg_, shape_);
    for (const auto& [e, x] : r.coeffs()) {
        ElemSeries image = apply(x);
        for (const auto& [f, y] : image.coeffs()) {
            MultiIndex g = e + f;
            if (shape_->contains(g))
                out.add_to(g, y);
        }
    }
    return out;
}

Derivation HSDerivation::component_derivation(const MultiIndex& a) const {
    std::vector<Elem> ims;
    for (const auto& im : images_)
        ims.push_back(im[a]);
    return Derivation::make(alg_, std::move(ims));
}

std::optional<int> HSDerivation::ell() const {
    std::optional<int> best;
    for (std::size_t j = 0; j < images_.size(); ++j) {
        ElemSeries diff = images_[j];
        diff.set(MultiIndex(shape_->arity()), Elem(alg_));
        if (auto o = diff.order())
            best = best ? std::min(*best, *o) : *o;
    }
    return best;
}

std::optional<int> HSDerivation::ell_alpha(const MultiIndex& a) const {
    if (!shape_->contains(a))
        throw DomainError("index " + a.to_string() + " outside the HS-derivation shape");
    return truncate(*this, shape_nbeta(a)).ell();
}

bool HSDerivation::is_identity() const { return !ell().has_value(); }

std::vector<std::string> HSDerivation::image_strings() const {
    std::vector<std::string> out;
    for (const auto& im : images_)
        out.push_back(format_series(im, "s"));
    return out;
}

HSDerivation compose(const HSDerivation& d, const HSDerivation& e) {
    require_compatible(d, e);
    std::vector<ElemSeries> ims;
    for (const auto& im : e.images())
        ims.push_back(d.tilde(im));
    return HSDerivation::make(d.algebra(), d.shape(), std::move(ims));
}

HSDerivation invert(const HSDerivation& d) {
    const AlgebraPtr& A = d.algebra();
    int rounds = d.shape()->height() + 1;
    std::vector<ElemSeries> ims;
    for (std::size_t j = 0; j < A->nvars(); ++j) {
        ElemSeries x = ElemSeries::constant(d.shape(), Elem::variable(A, j), Elem(A));
        // Fixed point of z -> x - (D~(z) - z); each round fixes one more degree.
        ElemSeries z = x;
        for (int i = 0; i < rounds; ++i)
            z = x - (d.tilde(z) - z);
        if (d.tilde(z) != x)
            throw InvariantViolation("inverse HS-derivation failed its defining identity");
        ims.push_back(z);
    }
    return HSDerivation::make(A, d.shape(), std::move(ims));
}

HSDerivation commutator(const HSDerivation& d, const HSDerivation& e) {
    return compose(compose(d, e), compose(invert(d), invert(e)));
}

HSDerivation truncate(const HSDerivation& d, const Shape& smaller) {
    std::vector<ElemSeries> ims;
    for (const auto& im : d.images())
        ims.push_back(truncate(im, smaller));
    return HSDerivation::make(d.algebra(), smaller, std::move(ims));
}

HSDerivation scalar_act(const std::vector<Elem>& a, const HSDerivation& d) {
    if (a.size() != std::size_t(d.shape()->arity()))
        throw DomainError("scalar action needs one element per series variable");
    std::vector<ElemSeries> ims;
    for (const auto& im : d.images()) {
        ElemSeries r = zero_series(d.algebra(), d.shape());
        for (const auto& [b, c] : im.coeffs()) {
            Elem f = c;
            for (std::size_t i = 0; i < a.size(); ++i)
                f = f * a[i].pow(unsigned(b[i]));
            r.set(b, f);
        }
        ims.push_back(r);
    }
    return HSDerivation::make(d.algebra(), d.shape(), std::move(ims));
}

HSDerivation subst_act(const SubstMap& phi, const HSDerivation& d) {
    if (!same_algebra(phi.algebra(), d.algebra()) || !same_shape(phi.source(), d.shape()))
        throw DomainError("substitution source does not match the HS-derivation");
    std::vector<ElemSeries> ims;
    for (const auto& im : d.images())
        ims.push_back(phi.apply(im));
    return HSDerivation::make(d.algebra(), phi.target(), std::move(ims));
}

SubstMap phi_twist(const SubstMap& phi, const HSDerivation& d) {
    // D~ fixes s_i, so applying the defining identity to s_i gives phi^D(s_i) = (phi . D)*~(phi(s_i)).
    HSDerivation e = subst_act(phi, d);
    HSDerivation einv = invert(e);
    std::vector<ElemSeries> ims;
    for (const auto& im : phi.images())
        ims.push_back(einv.tilde(im));
    SubstMap twist = SubstMap::make(phi.algebra(), phi.source(), phi.target(), ims);
    for (std::size_t i = 0; i < ims.size(); ++i)
        if (e.tilde(ims[i]) != phi.images()[i])
            throw InvariantViolation("twisted substitution map failed its defining identity");
    return twist;
}

HSDerivation external(const HSDerivation& d, const HSDerivation& e) {
    if (!same_algebra(d.algebra(), e.algebra()))
        throw DomainError("HS-derivations live over different algebras");
    const AlgebraPtr& A = d.algebra();
    Shape prod = make_shape(CoIdeal::product(*d.shape(), *e.shape()));
    int p = d.shape()->arity(), q = e.shape()->arity();
    std::vector<int> left(p), right(q);
    for (int i = 0; i < p; ++i)
        left[i] = i;
    for (int i = 0; i < q; ++i)
        right[i] = p + i;
    auto iota = SubstMap::combinatorial(A, d.shape(), prod, left);
    auto kappa = SubstMap::combinatorial(A, e.shape(), prod, right);
    return compose(subst_act(iota, d), subst_act(kappa, e));
}

std::vector<Elem> operator_test_set(const AlgebraPtr& A, int degree_cap, bool* exact) {
    std::vector<Elem> out;
    if (A->is_finite_dim()) {
        for (const auto& m : A->monomial_basis())
            out.push_back(Elem::monomial(A, m));
        if (exact)
            *exact = true;
        return out;
    }
    for (const auto& m : A->standard_monomials(degree_cap))
        out.push_back(Elem::monomial(A, m));
    if (exact)
        *exact = false;
    return out;
}

} // namespace hs
