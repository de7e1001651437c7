#include "hs/intder.hpp"

#include <cmath>
#include <functional>
#include <map>

namespace hs {

namespace {

// Images of d over t_{n-1} re-embedded into t_n, with s^n coefficients u.
std::vector<ElemSeries> extended_images(const HSDerivation& d, const Shape& next, const std::vector<Elem>& u) {
    int n = next->height();
    std::vector<ElemSeries> out;
    for (std::size_t j = 0; j < d.images().size(); ++j) {
        ElemSeries r(next, Elem(d.algebra()));
        for (const auto& [a, c] : d.images()[j].coeffs())
            r.set(a, c);
        if (!u.empty())
            r.set(MultiIndex{n}, u[j]);
        out.push_back(r);
    }
    return out;
}

std::vector<MultiIndex> unknown_monomials(const AlgebraPtr& A, int cap, bool* truncated) {
    if (A->is_finite_dim()) {
        *truncated = false;
        return A->monomial_basis();
    }
    *truncated = true;
    return A->standard_monomials(cap);
}

// Rows of sum_j (df/dx_j) u_j (+ constant) for every relation f, in coordinates.
void build_rows(const AlgebraPtr& A, const std::vector<MultiIndex>& basis, const std::vector<Elem>& constants,
                StageSystem& sys) {
    std::size_t nv = A->nvars(), nb = basis.size();
    for (std::size_t r = 0; r < A->relations().size(); ++r) {
        const Terms& f = A->relations()[r];
        std::vector<Elem> cols;
        for (std::size_t j = 0; j < nv; ++j) {
            Elem df(A, poly::partial(f, j, A->base()));
            for (const auto& m : basis)
                cols.push_back(df * Elem::monomial(A, m));
        }
        const Elem& c = constants[r];
        std::map<MultiIndex, std::size_t, GrevlexGreater> rows;
        auto note = [&](const Elem& e) {
            for (const auto& kv : e.terms())
                rows.emplace(kv.first, 0);
        };
        for (const auto& e : cols)
            note(e);
        note(c);
        std::string rel = poly::format(f, A->vars());
        for (auto& [mono, idx] : rows) {
            Vec row(nv * nb, Rat(0));
            for (std::size_t k = 0; k < cols.size(); ++k)
                row[k] = cols[k].coefficient(mono);
            sys.matrix.push_back(row);
            sys.rhs.push_back(A->base().neg(c.coefficient(mono)));
            sys.row_labels.push_back("coefficient of " + poly::format(Terms{{mono, Rat(1)}}, A->vars()) + " in " + rel);
        }
    }
}

std::vector<Elem> split(const AlgebraPtr& A, const std::vector<MultiIndex>& basis, const Vec& v) {
    std::vector<Elem> out;
    std::size_t nb = basis.size();
    for (std::size_t j = 0; j < A->nvars(); ++j) {
        Terms t;
        for (std::size_t k = 0; k < nb; ++k)
            poly::add_term(t, basis[k], v[j * nb + k], A->base());
        out.emplace_back(A, t);
    }
    return out;
}

Rat factorial_inverse_or_zero(const BaseRing& k, int n) {
    Int f = 1;
    for (int i = 2; i <= n; ++i)
        f *= i;
    Rat q(f);
    return k.is_unit(q) ? k.inverse(q) : Rat(0);
}

} // namespace

std::string to_string(IntegralResult::Status s) {
    switch (s) {
    case IntegralResult::Status::Integrable:
        return "Integrable";
    case IntegralResult::Status::NotIntegrable:
        return "NotIntegrable";
    default:
        return "Inconclusive";
    }
}

StageSystem stage_system(const HSDerivation& d, int degree_cap) {
    if (d.shape()->arity() != 1 || *d.shape() != CoIdeal::tm(1, d.shape()->height()))
        throw DomainError("integrability works over univariate shapes t_m");
    const AlgebraPtr& A = d.algebra();
    StageSystem sys;
    sys.stage = d.shape()->height() + 1;
    Shape next = shape_tm(1, sys.stage);
    std::vector<ElemSeries> ext = extended_images(d, next, {});
    std::vector<Elem> constants;
    for (const auto& f : A->relations())
        constants.push_back(evaluate(A, f, ext)[MultiIndex{sys.stage}]);
    sys.unknown_basis = unknown_monomials(A, degree_cap, &sys.truncated);
    build_rows(A, sys.unknown_basis, constants, sys);
    return sys;
}

StageSolution extend_step(const HSDerivation& d, const IntegrateOptions& opts) {
    const AlgebraPtr& A = d.algebra();
    StageSolution sol;
    if (A->is_polynomial()) {
        // No constraints: pick D_n(x_j) = delta^n(x_j)/n! when n! is a unit, else 0. Over Q this
        // reproduces delta^i/i!, over F_p the stages beyond p-1 stay zero.
        int n = d.shape()->height() + 1;
        Derivation delta = d.component_derivation({1});
        Rat inv = factorial_inverse_or_zero(A->base(), n);
        for (std::size_t j = 0; j < A->nvars(); ++j) {
            Elem v = Elem::variable(A, j);
            if (inv != 0)
                for (int i = 0; i < n; ++i)
                    v = delta.apply(v);
            sol.particular.push_back(inv == 0 ? Elem(A) : v.scaled(inv));
        }
        sol.solvable = true;
        return sol;
    }
    StageSystem sys = stage_system(d, opts.degree_cap);
    sol.truncated = sys.truncated;
    std::size_t ncols = A->nvars() * sys.unknown_basis.size();
    AffineSolution aff = solve_affine(A->base(), sys.matrix, sys.rhs, ncols);
    if (!aff.solvable) {
        sol.obstruction = Obstruction{std::move(sys), aff.certificate};
        return sol;
    }
    sol.solvable = true;
    sol.particular = split(A, sys.unknown_basis, aff.particular);
    for (const auto& k : aff.kernel)
        sol.kernel.push_back(split(A, sys.unknown_basis, k));
    return sol;
}

HSDerivation first_stage(const Derivation& delta) {
    const AlgebraPtr& A = delta.algebra();
    Shape sh = shape_tm(1, 1);
    std::vector<ElemSeries> ims;
    for (std::size_t j = 0; j < A->nvars(); ++j) {
        ElemSeries r = ElemSeries::constant(sh, Elem::variable(A, j), Elem(A));
        r.set({1}, delta.images()[j]);
        ims.push_back(r);
    }
    return HSDerivation::make(A, sh, ims);
}

IntegralResult integrate(const Derivation& delta, int m, const IntegrateOptions& opts) {
    if (m < 1)
        throw DomainError("integration length must be at least 1");
    const AlgebraPtr& A = delta.algebra();
    const BaseRing& k = A->base();
    IntegralResult res;
    HSDerivation start = first_stage(delta);
    bool exhaustive = k.is_finite();
    bool made_choice = false, truncated = false, budget_hit = false;
    int deepest = 0;
    std::vector<Rat> scalars = exhaustive ? k.elements() : std::vector<Rat>{};

    std::function<std::optional<HSDerivation>(const HSDerivation&)> dfs = [&](const HSDerivation& d) -> std::optional<HSDerivation> {
        int n = d.shape()->height() + 1;
        if (n > m)
            return d;
        if (++res.nodes > opts.node_budget) {
            budget_hit = true;
            return std::nullopt;
        }
        StageSolution sol = extend_step(d, opts);
        truncated = truncated || sol.truncated;
        if (!sol.solvable) {
            if (n > deepest) {
                deepest = n;
                res.obstruction = sol.obstruction;
            }
            res.log.push_back("stage " + std::to_string(n) + ": empty fiber");
            return std::nullopt;
        }
        Shape next = shape_tm(1, n);
        auto attempt = [&](const std::vector<Elem>& u) -> std::optional<HSDerivation> {
            HSDerivation e = HSDerivation::make(A, next, extended_images(d, next, u));
            return dfs(e);
        };
        if (!exhaustive || sol.kernel.empty()) {
            if (!sol.kernel.empty())
                made_choice = true;
            return attempt(sol.particular);
        }
        res.log.push_back("stage " + std::to_string(n) + ": kernel of dimension " + std::to_string(sol.kernel.size()));
        // Enumerate the coset particular + span(kernel) by mixed-radix counting.
        std::vector<std::size_t> digits(sol.kernel.size(), 0);
        for (;;) {
            std::vector<Elem> u = sol.particular;
            for (std::size_t i = 0; i < digits.size(); ++i)
                if (scalars[digits[i]] != 0)
                    for (std::size_t j = 0; j < u.size(); ++j)
                        u[j] += sol.kernel[i][j].scaled(scalars[digits[i]]);
            if (auto r = attempt(u))
                return r;
            if (budget_hit)
                return std::nullopt;
            std::size_t i = 0;
            while (i < digits.size() && ++digits[i] == scalars.size())
                digits[i++] = 0;
            if (i == digits.size())
                return std::nullopt;
        }
    };

    if (auto d = dfs(start)) {
        res.status = IntegralResult::Status::Integrable;
        res.integral = *d;
        return res;
    }
    res.stage = deepest;
    if (budget_hit) {
        res.status = IntegralResult::Status::Inconclusive;
        res.detail = "node budget of " + std::to_string(opts.node_budget) + " exhausted";
    } else if (truncated) {
        res.status = IntegralResult::Status::Inconclusive;
        res.detail = "unknowns were restricted to degree <= " + std::to_string(opts.degree_cap);
    } else if (!exhaustive && made_choice) {
        res.status = IntegralResult::Status::Inconclusive;
        res.detail = "dead end after a non-unique choice over an infinite field; only one branch was followed";
    } else {
        res.status = IntegralResult::Status::NotIntegrable;
        res.detail = "every branch has an empty fiber by stage " + std::to_string(deepest);
    }
    return res;
}

std::vector<Derivation> derivation_basis(const AlgebraPtr& A, int degree_cap) {
    std::vector<Derivation> out;
    if (A->is_polynomial()) {
        for (std::size_t j = 0; j < A->nvars(); ++j)
            out.push_back(Derivation::partial(A, j));
        return out;
    }
    StageSystem sys;
    sys.unknown_basis = unknown_monomials(A, degree_cap, &sys.truncated);
    std::vector<Elem> zeros(A->relations().size(), Elem(A));
    build_rows(A, sys.unknown_basis, zeros, sys);
    std::size_t ncols = A->nvars() * sys.unknown_basis.size();
    Vec rhs(sys.matrix.size(), Rat(0));
    AffineSolution aff = solve_affine(A->base(), sys.matrix, rhs, ncols);
    for (const auto& v : aff.kernel)
        out.push_back(Derivation::make(A, split(A, sys.unknown_basis, v)));
    return out;
}

IderReport ider_dimension(const AlgebraPtr& A, int max_m, const IntegrateOptions& opts) {
    IderReport rep;
    rep.dimensions.assign(std::size_t(std::max(max_m, 0)), 0);
    if (A->is_polynomial()) {
        rep.over_algebra = true;
        rep.notes.push_back("polynomial algebra: ranks over A of the integrable part of the basis d/dx_j");
        for (const auto& delta : derivation_basis(A, opts.degree_cap)) {
            IntegralResult r = integrate(delta, max_m, opts);
            int reach = r.status == IntegralResult::Status::Integrable ? max_m : r.stage - 1;
            for (int m = 1; m <= reach; ++m)
                ++rep.dimensions[m - 1];
        }
        return rep;
    }
    const BaseRing& k = A->base();
    if (!A->is_finite_dim() || !k.is_finite() || !k.is_field())
        throw DomainError("Ider dimensions need a finite-dimensional algebra over a finite field");
    std::vector<Derivation> basis = derivation_basis(A, opts.degree_cap);
    std::vector<Rat> scalars = k.elements();
    std::vector<long> counts(rep.dimensions.size(), 0);
    std::vector<std::size_t> digits(basis.size(), 0);
    for (;;) {
        Derivation delta = Derivation::zero(A);
        for (std::size_t i = 0; i < basis.size(); ++i)
            if (scalars[digits[i]] != 0)
                delta = delta + basis[i].scaled(Elem::constant(A, scalars[digits[i]]));
        IntegralResult r = integrate(delta, max_m, opts);
        if (r.status == IntegralResult::Status::Inconclusive)
            throw DomainError("integrability undecided for a derivation: " + r.detail);
        int reach = r.status == IntegralResult::Status::Integrable ? max_m : r.stage - 1;
        for (int m = 1; m <= reach; ++m)
            ++counts[m - 1];
        std::size_t i = 0;
        while (i < digits.size() && ++digits[i] == scalars.size())
            digits[i++] = 0;
        if (i == digits.size())
            break;
    }
    long q = long(scalars.size());
    for (std::size_t m = 0; m < counts.size(); ++m) {
        int d = 0;
        long c = counts[m];
        while (c > 1 && c % q == 0) {
            c /= q;
            ++d;
        }
        if (c != 1)
            throw InvariantViolation("integrable derivations do not form a subspace");
        rep.dimensions[m] = d;
    }
    rep.notes.push_back("k-dimensions over " + k.name() + " by exhaustive enumeration of Der");
    return rep;
}

} // namespace hs
