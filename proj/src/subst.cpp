#include "hs/subst.hpp"

#include <climits>

namespace hs {

namespace {

constexpr int kNoOrder = INT_MAX;

ElemSeries variable_series(const AlgebraPtr& A, const Shape& shape, std::size_t i) {
    return ElemSeries::monomial(shape, MultiIndex::unit(shape->arity(), i), Elem::constant(A, 1), Elem(A));
}

} // namespace

SubstMap SubstMap::make(AlgebraPtr A, Shape source, Shape target, std::vector<ElemSeries> images) {
    if (images.size() != std::size_t(source->arity()))
        throw DomainError("substitution needs one image per source variable");
    MultiIndex zero(target->arity());
    for (const auto& im : images) {
        if (!same_shape(im.shape(), target))
            throw DomainError("substitution image has the wrong shape");
        if (!im[zero].is_zero())
            throw DomainError("substitution image must have order at least 1");
    }
    SubstMap m;
    m.alg_ = std::move(A);
    m.source_ = std::move(source);
    m.target_ = std::move(target);
    m.images_ = std::move(images);
    m.build_powers();

    // The map must kill the ideal of monomials outside the source shape. Every image has order
    // >= 1, so ord(phi(s^g)) >= |g|; generators with |g| > height(target) vanish automatically.
    int h = m.target_->height();
    int p = m.source_->arity();
    for (const auto& g : m.source_->complement_min_gens()) {
        if (g.degree() > h)
            continue;
        std::size_t i = 0;
        while (g[i] == 0)
            ++i;
        ElemSeries prod = m.power(g - MultiIndex::unit(p, i)) * m.images_[i];
        if (!prod.is_zero())
            throw IllDefined(g, "substitution is ill-defined: image of s^" + g.to_string() + " is " +
                                    format_series(prod, "t") + ", not 0");
    }
    return m;
}

void SubstMap::build_powers() {
    const auto& elems = source_->elements();
    int p = source_->arity();
    powers_.clear();
    powers_.reserve(elems.size());
    for (const auto& a : elems) {
        if (a.is_zero()) {
            powers_.push_back(one_series(alg_, target_));
            continue;
        }
        std::size_t i = 0;
        while (a[i] == 0)
            ++i;
        powers_.push_back(power(a - MultiIndex::unit(p, i)) * images_[i]);
    }
}

SubstMap SubstMap::parse(AlgebraPtr A, Shape source, Shape target, const std::vector<std::string>& images) {
    std::vector<ElemSeries> ims;
    for (const auto& text : images)
        ims.push_back(parse_series(A, target, text, "t"));
    return make(std::move(A), std::move(source), std::move(target), std::move(ims));
}

SubstMap SubstMap::trivial(AlgebraPtr A, Shape source, Shape target) {
    std::vector<ElemSeries> ims(source->arity(), zero_series(A, target));
    return make(std::move(A), std::move(source), std::move(target), std::move(ims));
}

SubstMap SubstMap::identity(AlgebraPtr A, Shape shape) { return truncation(std::move(A), shape, shape); }

SubstMap SubstMap::truncation(AlgebraPtr A, Shape from, Shape to) {
    if (from->arity() != to->arity() || !to->subset_of(*from))
        throw DomainError("truncation target is not contained in the source shape");
    std::vector<int> t(from->arity());
    for (std::size_t i = 0; i < t.size(); ++i)
        t[i] = int(i);
    return combinatorial(std::move(A), std::move(from), std::move(to), t);
}

SubstMap SubstMap::combinatorial(AlgebraPtr A, Shape source, Shape target, const std::vector<int>& targets) {
    std::vector<ElemSeries> ims;
    for (int j : targets) {
        if (j >= target->arity())
            throw DomainError("combinatorial substitution names a missing target variable");
        ims.push_back(j < 0 ? zero_series(A, target) : variable_series(A, target, std::size_t(j)));
    }
    return make(std::move(A), std::move(source), std::move(target), std::move(ims));
}

const ElemSeries& SubstMap::power(const MultiIndex& a) const {
    auto idx = source_->index_of(a);
    if (!idx)
        throw DomainError("monomial s^" + a.to_string() + " is outside the source shape");
    return powers_[*idx];
}

Elem SubstMap::coeff(const MultiIndex& e, const MultiIndex& a) const { return power(a)[e]; }

int SubstMap::order() const {
    int best = kNoOrder;
    for (const auto& im : images_)
        if (auto o = im.order())
            best = std::min(best, *o);
    return best;
}

ElemSeries SubstMap::apply(const ElemSeries& r) const { return act_left(*this, r); }

bool SubstMap::is_constant_coeff() const {
    for (const auto& im : images_)
        for (const auto& kv : im.coeffs())
            if (!kv.second.constant_value())
                return false;
    return true;
}

bool SubstMap::is_combinatorial() const {
    for (const auto& im : images_) {
        if (im.coeffs().size() != 1)
            return false;
        const auto& [e, c] = *im.coeffs().begin();
        if (e.degree() != 1 || c != Elem::constant(alg_, 1))
            return false;
    }
    return true;
}

std::vector<std::string> SubstMap::image_strings(std::string_view prefix) const {
    std::vector<std::string> out;
    for (const auto& im : images_)
        out.push_back(format_series(im, prefix));
    return out;
}

SubstMap compose(const SubstMap& psi, const SubstMap& phi) {
    if (!same_shape(phi.target(), psi.source()))
        throw DomainError("cannot compose: target and source shapes differ");
    std::vector<ElemSeries> ims;
    for (const auto& im : phi.images())
        ims.push_back(psi.apply(im));
    return SubstMap::make(phi.algebra(), phi.source(), psi.target(), std::move(ims));
}

SubstMap tensor(const SubstMap& phi, const SubstMap& psi) {
    const AlgebraPtr& A = phi.algebra();
    Shape source = make_shape(CoIdeal::product(*phi.source(), *psi.source()));
    ElemSeries one_left = one_series(A, phi.target()), one_right = one_series(A, psi.target());
    std::vector<ElemSeries> ims;
    for (const auto& im : phi.images())
        ims.push_back(boxtimes(im, one_right));
    for (const auto& im : psi.images())
        ims.push_back(boxtimes(one_left, im));
    Shape target = ims.empty() ? make_shape(CoIdeal::product(*phi.target(), *psi.target())) : ims.front().shape();
    return SubstMap::make(A, source, target, std::move(ims));
}

SubstMap init(const SubstMap& phi) {
    std::vector<ElemSeries> ims;
    for (const auto& im : phi.images()) {
        ElemSeries lin = zero_series(phi.algebra(), phi.target());
        for (const auto& [e, c] : im.coeffs())
            if (e.degree() == 1)
                lin.set(e, c);
        ims.push_back(lin);
    }
    try {
        return SubstMap::make(phi.algebra(), phi.source(), phi.target(), std::move(ims));
    } catch (const IllDefined& e) {
        throw InvariantViolation(std::string("initial part of a substitution map is ill-defined: ") + e.what());
    }
}

} // namespace hs
