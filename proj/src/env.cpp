#include "hs/env.hpp"

#include "hs/random.hpp"

namespace hs {

std::string to_string(EnvTag t) {
    switch (t) {
    case EnvTag::R0Const: return "R0-const";
    case EnvTag::R0Add: return "R0-add";
    case EnvTag::R0Mul: return "R0-mul";
    case EnvTag::Ri: return "Ri";
    case EnvTag::Rii: return "Rii";
    case EnvTag::Riii: return "Riii";
    case EnvTag::Riv: return "Riv";
    case EnvTag::Rv: return "Rv";
    }
    return "?";
}

std::vector<EnvTag> all_env_tags() {
    return {EnvTag::R0Const, EnvTag::R0Add, EnvTag::R0Mul, EnvTag::Ri, EnvTag::Rii, EnvTag::Riii, EnvTag::Riv, EnvTag::Rv};
}

namespace {

std::string images(const std::optional<HSDerivation>& d) {
    if (!d)
        return "-";
    std::string out = "[";
    auto ims = d->image_strings();
    for (std::size_t i = 0; i < ims.size(); ++i)
        out += (i ? ", " : "") + ims[i];
    return out + "]";
}

const HSDerivation& need(const std::optional<HSDerivation>& d, const char* what) {
    if (!d)
        throw DomainError(std::string("relation instance lacks ") + what);
    return *d;
}

} // namespace

std::string EnvRelationInstance::describe() const {
    std::string out = to_string(tag);
    switch (tag) {
    case EnvTag::R0Const: out += " c=" + c.get_str(); break;
    case EnvTag::R0Add:
    case EnvTag::R0Mul: out += " a=" + a.to_string() + " a'=" + a2.to_string(); break;
    case EnvTag::Ri: out += " p=" + std::to_string(p); break;
    case EnvTag::Rii: out += " alpha=" + alpha.to_string(); break;
    case EnvTag::Riii: out += " D=" + images(d) + " E=" + images(e) + " alpha=" + alpha.to_string(); break;
    case EnvTag::Riv: out += " D=" + images(d) + " a=" + a.to_string() + " alpha=" + alpha.to_string(); break;
    case EnvTag::Rv: out += " D=" + images(d) + " beta=" + beta.to_string(); break;
    }
    return out;
}

DiffOp env_relation_image(const EnvRelationInstance& inst) {
    const AlgebraPtr& A = inst.algebra;
    auto S = [](const Elem& a) { return DiffOp::multiplication(a); };
    switch (inst.tag) {
    case EnvTag::R0Const:
        return S(Elem::constant(A, inst.c)) - DiffOp::identity(A).scaled(inst.c);
    case EnvTag::R0Add:
        return S(inst.a + inst.a2) - S(inst.a) - S(inst.a2);
    case EnvTag::R0Mul:
        return S(inst.a * inst.a2) - S(inst.a) * S(inst.a2);
    case EnvTag::Ri: {
        Shape zero = shape_tm(inst.p, 0);
        auto ops = operator_series(HSDerivation::identity(A, zero));
        return ops[MultiIndex(std::size_t(inst.p))] - DiffOp::identity(A);
    }
    case EnvTag::Rii: {
        if (inst.alpha.is_zero() || !inst.shape->contains(inst.alpha))
            throw DomainError("relation (ii) needs a nonzero index of the shape");
        return operator_series(HSDerivation::identity(A, inst.shape))[inst.alpha];
    }
    case EnvTag::Riii: {
        const HSDerivation& d = need(inst.d, "D");
        const HSDerivation& e = need(inst.e, "E");
        OpSeries od = operator_series(d), oe = operator_series(e);
        DiffOp out = operator_series(compose(d, e))[inst.alpha];
        for (const auto& b : d.shape()->elements())
            if (b.leq(inst.alpha))
                out = out - od[b] * oe[inst.alpha - b];
        return out;
    }
    case EnvTag::Riv: {
        const HSDerivation& d = need(inst.d, "D");
        OpSeries od = operator_series(d);
        DiffOp out = od[inst.alpha] * S(inst.a);
        for (const auto& b : d.shape()->elements())
            if (b.leq(inst.alpha))
                out = out - S(d.coeff_apply(b, inst.a)) * od[inst.alpha - b];
        return out;
    }
    case EnvTag::Rv: {
        const HSDerivation& d = need(inst.d, "D");
        if (!inst.phi)
            throw DomainError("relation (v) needs a substitution map");
        const SubstMap& phi = *inst.phi;
        OpSeries od = operator_series(d);
        DiffOp out = operator_series(subst_act(phi, d))[inst.beta];
        for (const auto& a : d.shape()->elements())
            if (a.degree() <= inst.beta.degree())
                out = out - S(phi.coeff(inst.beta, a)) * od[a];
        return out;
    }
    }
    throw DomainError("unknown relation tag");
}

bool verify_env_relation(const EnvRelationInstance& inst) { return env_relation_image(inst).is_zero(); }

int t_degree(const HSDerivation& d, const MultiIndex& alpha) {
    auto ell = d.ell_alpha(alpha);
    if (!ell)
        return 0;
    return alpha.degree() / *ell;
}

std::string DegreeReport::describe() const {
    return "order " + std::to_string(order) + " <= " + std::to_string(bound) + (order_ok ? "" : " (violated)") +
           ", facts " + (fact_a ? "a" : "-") + (fact_b ? "b" : "-") + (fact_c ? "c" : "-") + ", commutator order " +
           std::to_string(commutator_order) + " <= " + std::to_string(commutator_bound) +
           (commutator_ok ? "" : " (violated)");
}

DegreeReport degree_audit(const HSDerivation& d, const HSDerivation& e, const MultiIndex& alpha, const MultiIndex& beta) {
    if (!d.algebra()->is_polynomial())
        throw DomainError("degree audit needs a polynomial algebra");
    DegreeReport rep;
    OpSeries od = operator_series(d), oe = operator_series(e);
    const AlgebraPtr& A = d.algebra();
    DiffOp da = od[alpha];
    rep.order = da.order();
    rep.bound = t_degree(d, alpha);
    rep.order_ok = rep.order <= rep.bound;

    HSDerivation trunc = truncate(d, shape_nbeta(alpha));
    rep.fact_a = operator_series(trunc)[alpha] == da && t_degree(trunc, alpha) == rep.bound;
    rep.fact_b = od[MultiIndex(alpha.size())] == DiffOp::identity(A);
    auto ell = d.ell_alpha(alpha);
    if (!alpha.is_zero() && (!ell || alpha.degree() < *ell))
        rep.fact_c = da.is_zero() && trunc.is_identity();

    DiffOp comm = commutator(da, oe[beta]);
    rep.commutator_order = comm.order();
    rep.commutator_bound = rep.bound + t_degree(e, beta) - 1;
    rep.commutator_ok = comm.is_zero() || rep.commutator_order <= rep.commutator_bound;
    return rep;
}

FloorReport floor_lemma_check(int max_ell, int max_value) {
    FloorReport rep;
    for (int l1 = 1; l1 <= max_ell; ++l1)
        for (int l2 = 1; l2 <= max_ell; ++l2)
            for (int a1 = l1; a1 <= max_value; ++a1)
                for (int b1 = l2; b1 <= max_value; ++b1)
                    for (int a2 = 0; a2 <= max_value; ++a2)
                        for (int b2 = 0; b2 <= max_value; ++b2) {
                            ++rep.checked;
                            int lhs = (a1 + b1) / (l1 + l2) + a2 / l1 + b2 / l2;
                            int rhs = (a1 + a2) / l1 + (b1 + b2) / l2;
                            if (lhs >= rhs && rep.violations++ == 0)
                                rep.first_violation = "l=(" + std::to_string(l1) + "," + std::to_string(l2) + ") a'=" +
                                                      std::to_string(a1) + " b'=" + std::to_string(b1) + " a''=" +
                                                      std::to_string(a2) + " b''=" + std::to_string(b2);
                        }
    return rep;
}

ChiExpReport chi_exp_check(const Derivation& delta, int m, int perturbations, unsigned long seed) {
    const AlgebraPtr& A = delta.algebra();
    ChiExpReport rep;
    ChiResult base = vartheta_eval(delta, m);
    auto scale = [&A](const Rat& c, const GrElem& g) { return g.scaled(Elem::constant(A, c)); };
    ExpCheck ec = exp_check(base.chi, GrElem::one(A), A->base(), scale);
    rep.exp_ok = ec.holds();
    if (!rep.exp_ok)
        rep.detail = ec.failure;
    Rng rng(seed);
    Shape sh = shape_tm(1, m);
    for (int k = 0; k < perturbations && m >= 2; ++k) {
        std::vector<ElemSeries> ims;
        for (std::size_t j = 0; j < A->nvars(); ++j) {
            ElemSeries r = ElemSeries::constant(sh, Elem::variable(A, j), Elem(A));
            for (int i = 2; i <= m; ++i)
                r.set(MultiIndex{i}, random_elem(A, rng, 2));
            ims.push_back(r);
        }
        HSDerivation E = HSDerivation::make(A, sh, ims);
        HSDerivation other = compose(*base.integration.integral, E);
        ++rep.perturbations;
        if (chi_of(other) != base.chi) {
            rep.invariant_ok = false;
            if (rep.detail.empty())
                rep.detail = "chi changes under the perturbation [" + [&] {
                    std::string s;
                    for (const auto& x : E.image_strings())
                        s += (s.empty() ? "" : ", ") + x;
                    return s;
                }() + "]";
        }
    }
    return rep;
}

namespace {

// E_b for the external product of integrals of d/dx_i, truncated to |b| <= max_degree.
OpSeries hasse_operators(const AlgebraPtr& A, int max_degree, const IntegrateOptions& opts) {
    if (!A->is_polynomial())
        throw DomainError("the surjectivity probe needs a polynomial algebra");
    std::optional<HSDerivation> prod;
    for (std::size_t i = 0; i < A->nvars(); ++i) {
        IntegralResult r = integrate(Derivation::partial(A, i), max_degree, opts);
        if (r.status != IntegralResult::Status::Integrable)
            throw DomainError("d/d" + A->vars()[i] + " is not " + std::to_string(max_degree) + "-integrable: " + r.detail);
        prod = prod ? external(*prod, *r.integral) : *r.integral;
    }
    return operator_series(truncate(*prod, shape_tm(int(A->nvars()), max_degree)));
}

} // namespace

ProbeReport vartheta_surjectivity_probe(const AlgebraPtr& A, int max_degree, const IntegrateOptions& opts) {
    ProbeReport rep;
    rep.max_degree = max_degree;
    if (A->nvars() == 0)
        return rep;
    OpSeries ops = hasse_operators(A, max_degree, opts);
    Elem one = Elem::constant(A, 1);
    for (const auto& b : ops.shape()->elements()) {
        ++rep.total;
        if (symbol(ops[b], b.degree()) == GrElem::gamma(A, b, one))
            ++rep.covered;
        else
            rep.missed.push_back(b);
    }
    return rep;
}

GrTableReport gamma_gr_table_check(const AlgebraPtr& A, int max_degree, const IntegrateOptions& opts) {
    GrTableReport rep;
    if (A->nvars() == 0)
        return rep;
    OpSeries ops = hasse_operators(A, max_degree, opts);
    Elem one = Elem::constant(A, 1);
    for (const auto& b : ops.shape()->elements())
        for (const auto& e : ops.shape()->elements()) {
            if (b.is_zero() || e.is_zero() || b.degree() + e.degree() > max_degree)
                continue;
            ++rep.entries;
            DPElement prod = DPElement::gamma(A, max_degree, b, one) * DPElement::gamma(A, max_degree, e, one);
            GrElem expect(A);
            for (const auto& [g, c] : prod.terms())
                expect = expect + GrElem::gamma(A, g, c);
            GrElem got = symbol(ops[b] * ops[e], b.degree() + e.degree());
            if (got != expect && rep.mismatches++ == 0)
                rep.first_mismatch = b.to_string() + " * " + e.to_string() + ": " + got.to_string() + " vs " + expect.to_string();
        }
    return rep;
}

} // namespace hs
