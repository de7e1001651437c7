#include "hs/random.hpp"

namespace hs {

Elem random_elem(const AlgebraPtr& A, Rng& rng, int max_degree) {
    Terms t;
    for (int d = 0; d <= max_degree; ++d)
        for (const auto& m : exponents_of_degree(A->nvars(), d))
            if (rng() % 2)
                poly::add_term(t, m, int(rng() % 5) - 2, A->base());
    return Elem(A, t);
}

HSDerivation random_hs(const AlgebraPtr& A, const Shape& shape, Rng& rng, int coeff_degree) {
    for (int attempt = 0; attempt < 500; ++attempt) {
        std::vector<ElemSeries> ims;
        for (std::size_t j = 0; j < A->nvars(); ++j) {
            ElemSeries r = ElemSeries::constant(shape, Elem::variable(A, j), Elem(A));
            for (const auto& a : shape->elements()) {
                if (a.is_zero() || rng() % 3 == 0)
                    continue;
                Elem c = random_elem(A, rng, coeff_degree);
                if (!A->is_polynomial())
                    c = c * Elem::variable(A, j);
                r.set(a, c);
            }
            ims.push_back(r);
        }
        try {
            return HSDerivation::make(A, shape, ims);
        } catch (const DomainError&) {
        }
    }
    throw InvariantViolation("no random HS-derivation found for " + A->describe());
}

SubstMap random_subst(const AlgebraPtr& A, const Shape& source, const Shape& target, Rng& rng, bool constant) {
    for (int attempt = 0; attempt < 500; ++attempt) {
        std::vector<ElemSeries> ims;
        for (int i = 0; i < source->arity(); ++i) {
            ElemSeries r(target, Elem(A));
            for (const auto& e : target->elements())
                if (e.degree() >= 1 && rng() % 2) {
                    Elem v = Elem::constant(A, int(rng() % 5) - 2);
                    if (!constant && A->nvars() > 0 && rng() % 2)
                        v = v * Elem::variable(A, rng() % A->nvars()) + Elem::constant(A, 1);
                    r.set(e, v);
                }
            ims.push_back(r);
        }
        try {
            return SubstMap::make(A, source, target, ims);
        } catch (const IllDefined&) {
        }
    }
    throw InvariantViolation("no random substitution map found");
}

} // namespace hs
