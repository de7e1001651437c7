#include "hs/hsmod.hpp"

#include <algorithm>

namespace hs {

namespace {

SeriesMatrix zero_matrix(const AlgebraPtr& A, const Shape& sh, int rows, int cols) {
    return SeriesMatrix(std::size_t(rows), std::vector<ElemSeries>(std::size_t(cols), zero_series(A, sh)));
}

ElemSeries partial_series(const ElemSeries& r, std::size_t i) {
    ElemSeries out(r.shape(), r.zero());
    for (const auto& [a, c] : r.coeffs())
        out.set(a, c.partial(i));
    return out;
}

void require_polynomial(const AlgebraPtr& A, const char* what) {
    if (!A->is_polynomial())
        throw DomainError(std::string(what) + " is supported for polynomial algebras only");
}

std::string join(const std::vector<std::string>& parts, const char* sep) {
    std::string out;
    for (std::size_t i = 0; i < parts.size(); ++i)
        out += (i ? sep : "") + parts[i];
    return out;
}

std::string vec_string(const std::vector<Elem>& v) {
    std::string out = "(";
    for (std::size_t i = 0; i < v.size(); ++i)
        out += (i ? ", " : "") + v[i].to_string();
    return out + ")";
}

// Structure evaluated at D or at D* according to `at_inverse`.
EvaluatedStructure evaluate_at(const HSStructure& psi, const HSDerivation& d, bool at_inverse) {
    return evaluate(psi, at_inverse ? invert(d) : d);
}

Strength weaker(Strength a, Strength b) { return a == Strength::Pre || b == Strength::Pre ? Strength::Pre : Strength::Full; }

// Tuples of `degree` indices below `rank`, nondecreasing (sym) or increasing (wedge), in lex order.
std::vector<std::vector<int>> index_tuples(int rank, int degree, bool strict) {
    std::vector<std::vector<int>> out;
    std::vector<int> cur;
    std::function<void(int)> rec = [&](int start) {
        if (int(cur.size()) == degree) {
            out.push_back(cur);
            return;
        }
        for (int i = start; i < rank; ++i) {
            cur.push_back(i);
            rec(strict ? i + 1 : i);
            cur.pop_back();
        }
    };
    rec(0);
    return out;
}

HSStructure power_structure(const HSStructure& e, int degree, bool wedge) {
    if (e.flavor != Flavor::Left)
        throw DomainError("symmetric and exterior powers need a left structure");
    if (degree < 0)
        throw DomainError("negative power");
    auto tuples = index_tuples(e.rank, degree, wedge);
    std::map<std::vector<int>, int> pos;
    for (std::size_t i = 0; i < tuples.size(); ++i)
        pos[tuples[i]] = int(i);
    HSStructure out;
    out.name = (wedge ? "wedge" : "sym") + std::to_string(degree) + "(" + e.name + ")";
    out.algebra = e.algebra;
    out.rank = int(tuples.size());
    out.flavor = Flavor::Left;
    out.strength = e.strength;
    out.images = [e, tuples, pos, wedge](const HSDerivation& d) {
        SeriesMatrix g = e.images(d);
        const AlgebraPtr& A = d.algebra();
        SeriesMatrix m = zero_matrix(A, d.shape(), int(tuples.size()), int(tuples.size()));
        for (std::size_t col = 0; col < tuples.size(); ++col) {
            std::map<std::vector<int>, ElemSeries> acc{{{}, one_series(A, d.shape())}};
            for (int factor : tuples[col]) {
                std::map<std::vector<int>, ElemSeries> next;
                for (const auto& [tup, c] : acc)
                    for (int i = 0; i < e.rank; ++i) {
                        const ElemSeries& gi = g[std::size_t(i)][std::size_t(factor)];
                        if (gi.coeffs().empty())
                            continue;
                        if (wedge && std::find(tup.begin(), tup.end(), i) != tup.end())
                            continue;
                        std::vector<int> t2 = tup;
                        auto at = std::upper_bound(t2.begin(), t2.end(), i);
                        long larger = t2.end() - at;
                        t2.insert(at, i);
                        ElemSeries term = c * gi;
                        if (wedge && larger % 2)
                            term = -term;
                        auto it = next.find(t2);
                        if (it == next.end())
                            next.emplace(t2, term);
                        else
                            it->second = it->second + term;
                    }
                acc = std::move(next);
            }
            for (const auto& [tup, c] : acc)
                m[std::size_t(pos.at(tup))][col] = c;
        }
        return m;
    };
    return out;
}

} // namespace

std::string to_string(Flavor f) { return f == Flavor::Left ? "left" : "right"; }
std::string to_string(Strength s) { return s == Strength::Pre ? "pre" : "full"; }

VecSeries EvaluatedStructure::apply(const VecSeries& w) const {
    VecSeries out;
    std::vector<ElemSeries> tw;
    tw.reserve(w.size());
    for (const auto& c : w)
        tw.push_back(twist.tilde(c));
    for (const auto& row : images) {
        ElemSeries acc = zero_series(twist.algebra(), twist.shape());
        for (std::size_t j = 0; j < row.size(); ++j)
            if (!tw[j].coeffs().empty() && !row[j].coeffs().empty())
                acc = acc + row[j] * tw[j];
        out.push_back(acc);
    }
    return out;
}

EvaluatedStructure evaluate(const HSStructure& psi, const HSDerivation& d) {
    if (!same_algebra(psi.algebra, d.algebra()))
        throw DomainError("structure and HS-derivation live over different algebras");
    EvaluatedStructure ev{psi.images(d), psi.flavor == Flavor::Left ? d : invert(d)};
    if (int(ev.images.size()) != psi.rank)
        throw InvariantViolation("structure " + psi.name + " produced a matrix of the wrong size");
    for (int i = 0; i < psi.rank; ++i) {
        for (int j = 0; j < psi.rank; ++j)
            if (ev.images[i][j][MultiIndex(std::size_t(d.shape()->arity()))] !=
                (i == j ? Elem::constant(d.algebra(), 1) : Elem(d.algebra())))
                throw InvariantViolation("structure " + psi.name + " has constant coefficient different from the identity");
    }
    return ev;
}

VecSeries constant_vector(const Shape& shape, const std::vector<Elem>& v) {
    VecSeries out;
    for (const auto& x : v)
        out.push_back(ElemSeries::constant(shape, x, Elem(x.algebra())));
    return out;
}

HSStructure tautological_structure(const AlgebraPtr& A) {
    return {"tautological", A, 1, Flavor::Left, Strength::Full, [A](const HSDerivation& d) {
                return SeriesMatrix{{one_series(A, d.shape())}};
            }};
}

HSStructure right_tautological_structure(const AlgebraPtr& A) {
    require_polynomial(A, "the formal-adjoint right structure");
    return {"right-tautological", A, 1, Flavor::Right, Strength::Full, [A](const HSDerivation& d) {
                OpSeries ops = operator_series(d);
                ElemSeries g = zero_series(A, d.shape());
                Elem one = Elem::constant(A, 1);
                for (const auto& [a, op] : ops.coeffs())
                    g.set(a, transpose(op).apply(one));
                return SeriesMatrix{{g}};
            }};
}

HSStructure zero_module(const AlgebraPtr& A) {
    return {"zero", A, 0, Flavor::Left, Strength::Full, [](const HSDerivation&) { return SeriesMatrix{}; }};
}

HSStructure lie_structure(const AlgebraPtr& A) {
    require_polynomial(A, "the Lie structure on differentials");
    int n = int(A->nvars());
    return {"lie", A, n, Flavor::Left, Strength::Pre, [A, n](const HSDerivation& d) {
                SeriesMatrix g = zero_matrix(A, d.shape(), n, n);
                for (int j = 0; j < n; ++j)
                    for (int i = 0; i < n; ++i)
                        g[i][j] = partial_series(d.images()[j], std::size_t(i));
                return g;
            }};
}

HSStructure adjoint_structure(const AlgebraPtr& A) {
    require_polynomial(A, "the adjoint structure on derivations");
    int n = int(A->nvars());
    return {"adjoint", A, n, Flavor::Left, Strength::Pre, [A, n](const HSDerivation& d) {
                HSDerivation dstar = invert(d);
                SeriesMatrix g = zero_matrix(A, d.shape(), n, n);
                // Coefficient of d/dx_i in D (d/dx_j) D* is D~(d/dx_j Phi_{D*}(x_i)).
                for (int i = 0; i < n; ++i)
                    for (int j = 0; j < n; ++j)
                        g[i][j] = d.tilde(partial_series(dstar.images()[i], std::size_t(j)));
                return g;
            }};
}

HSStructure tensor_structure(const HSStructure& e, const HSStructure& f) {
    if (!same_algebra(e.algebra, f.algebra))
        throw DomainError("tensor factors live over different algebras");
    if (e.flavor == Flavor::Right && f.flavor == Flavor::Right)
        throw DomainError("tensor product of two right structures is not defined");
    HSStructure out;
    out.name = e.name + "(x)" + f.name;
    out.algebra = e.algebra;
    out.rank = e.rank * f.rank;
    out.flavor = e.flavor == Flavor::Left && f.flavor == Flavor::Left ? Flavor::Left : Flavor::Right;
    out.strength = weaker(e.strength, f.strength);
    Flavor result = out.flavor;
    out.images = [e, f, result](const HSDerivation& d) {
        // Left (x) left at D; for a right result the left factor is taken at D*.
        bool e_inv = result == Flavor::Right && e.flavor == Flavor::Left;
        bool f_inv = result == Flavor::Right && f.flavor == Flavor::Left;
        SeriesMatrix ge = (e_inv ? e.images(invert(d)) : e.images(d));
        SeriesMatrix gf = (f_inv ? f.images(invert(d)) : f.images(d));
        SeriesMatrix g = zero_matrix(d.algebra(), d.shape(), e.rank * f.rank, e.rank * f.rank);
        for (int i = 0; i < e.rank; ++i)
            for (int k = 0; k < e.rank; ++k)
                for (int j = 0; j < f.rank; ++j)
                    for (int l = 0; l < f.rank; ++l)
                        g[i * f.rank + j][k * f.rank + l] = ge[i][k] * gf[j][l];
        return g;
    };
    return out;
}

HSStructure hom_structure(const HSStructure& e, const HSStructure& f) {
    if (!same_algebra(e.algebra, f.algebra))
        throw DomainError("Hom arguments live over different algebras");
    if (e.flavor == Flavor::Right && f.flavor == Flavor::Left)
        throw DomainError("Hom from a right to a left structure is not defined");
    HSStructure out;
    out.name = "Hom(" + e.name + "," + f.name + ")";
    out.algebra = e.algebra;
    out.rank = e.rank * f.rank;
    out.flavor = e.flavor == f.flavor ? Flavor::Left : Flavor::Right;
    out.strength = weaker(e.strength, f.strength);
    out.images = [e, f](const HSDerivation& d) {
        // h -> Y o h o X with (Y, X) = (F(D), E(D*)), (F(D*), E(D)) or (F(D), E(D)).
        bool y_inv = e.flavor == Flavor::Right && f.flavor == Flavor::Right;
        bool x_inv = e.flavor == Flavor::Left && f.flavor == Flavor::Left;
        EvaluatedStructure y = evaluate_at(f, d, y_inv);
        EvaluatedStructure x = evaluate_at(e, d, x_inv);
        int re = e.rank, rf = f.rank;
        SeriesMatrix g = zero_matrix(d.algebra(), d.shape(), re * rf, re * rf);
        for (int a = 0; a < rf; ++a)
            for (int b = 0; b < re; ++b)
                for (int k = 0; k < re; ++k) {
                    ElemSeries c = y.twist.tilde(x.images[b][k]);
                    for (int row = 0; row < rf; ++row)
                        g[row * re + k][a * re + b] = y.images[row][a] * c;
                }
        return g;
    };
    return out;
}

HSStructure sym_structure(const HSStructure& e, int degree) { return power_structure(e, degree, false); }
HSStructure wedge_structure(const HSStructure& e, int degree) { return power_structure(e, degree, true); }

AxiomReport check_structure(const HSStructure& psi, const StructureSamples& samples, const CheckOptions& opts) {
    AxiomReport rep;
    const AlgebraPtr& A = psi.algebra;
    std::vector<Elem> test = operator_test_set(A, opts.degree_cap, &rep.exact);
    auto vectors = [&](const Shape& sh) {
        std::vector<VecSeries> out;
        for (const auto& b : test)
            for (int k = 0; k < psi.rank; ++k) {
                std::vector<Elem> v(std::size_t(psi.rank), Elem(A));
                v[std::size_t(k)] = b;
                out.push_back(constant_vector(sh, v));
            }
        return out;
    };
    auto vstr = [](const VecSeries& v) {
        std::vector<Elem> c;
        for (const auto& s : v)
            c.push_back(s[MultiIndex(std::size_t(s.shape()->arity()))]);
        return vec_string(c);
    };
    auto fail = [](AxiomResult& r, std::string what) {
        if (r.counterexample.empty())
            r.counterexample = std::move(what);
    };
    auto leibniz = [&](const HSDerivation& d, const EvaluatedStructure& ev) {
        bool ok = true;
        for (const auto& v : vectors(d.shape()))
            for (std::size_t j = 0; j < A->nvars() && ok; ++j) {
                const ElemSeries& xj = d.images()[j]; // D~(x_j)
                VecSeries lhs, rhs;
                if (psi.flavor == Flavor::Left) {
                    VecSeries xv;
                    for (const auto& c : v)
                        xv.push_back(c * ElemSeries::constant(d.shape(), Elem::variable(A, j), Elem(A)));
                    lhs = ev.apply(xv);
                    for (const auto& c : ev.apply(v))
                        rhs.push_back(xj * c);
                } else {
                    for (const auto& c : ev.apply(v))
                        lhs.push_back(ElemSeries::constant(d.shape(), Elem::variable(A, j), Elem(A)) * c);
                    VecSeries xv;
                    for (const auto& c : v)
                        xv.push_back(xj * c);
                    rhs = ev.apply(xv);
                }
                if (lhs != rhs) {
                    ok = false;
                    fail(rep.leibniz, "D = [" + join(d.image_strings(), ", ") + "], generator " + A->vars()[j] +
                                          ", vector " + vstr(v));
                }
            }
        ++rep.leibniz.tested;
        rep.leibniz.passed += ok;
    };

    for (const auto& [d, e] : samples.pairs) {
        EvaluatedStructure ed = evaluate(psi, d), ee = evaluate(psi, e), ede = evaluate(psi, compose(d, e));
        bool ok = true;
        for (const auto& v : vectors(d.shape())) {
            VecSeries lhs = ede.apply(v);
            VecSeries rhs = psi.flavor == Flavor::Left ? ed.apply(ee.apply(v)) : ee.apply(ed.apply(v));
            if (lhs != rhs) {
                ok = false;
                fail(rep.homomorphism, "D = [" + join(d.image_strings(), ", ") + "], E = [" + join(e.image_strings(), ", ") +
                                           "], vector " + vstr(v));
                break;
            }
        }
        ++rep.homomorphism.tested;
        rep.homomorphism.passed += ok;
        leibniz(d, ed);
        leibniz(e, ee);
    }

    for (const auto& [phi, d] : samples.substitutions) {
        if (psi.strength == Strength::Pre && !opts.all_substitutions && !phi.is_constant_coeff()) {
            ++rep.substitution.skipped;
            continue;
        }
        EvaluatedStructure ed = evaluate(psi, d), ephi = evaluate(psi, subst_act(phi, d));
        bool ok = true;
        for (const auto& v : vectors(d.shape())) {
            VecSeries vt;
            for (const auto& c : v)
                vt.push_back(ElemSeries::constant(phi.target(), c[MultiIndex(std::size_t(d.shape()->arity()))], Elem(A)));
            VecSeries lhs = ephi.apply(vt);
            VecSeries rhs;
            if (psi.flavor == Flavor::Left) {
                for (const auto& c : ed.apply(v))
                    rhs.push_back(act_left(phi, c));
            } else {
                rhs.assign(std::size_t(psi.rank), zero_series(A, phi.target()));
                std::vector<Elem> v0;
                for (const auto& c : v)
                    v0.push_back(c[MultiIndex(std::size_t(d.shape()->arity()))]);
                for (const auto& a : d.shape()->elements())
                    for (const auto& [e, c] : phi.power(a).coeffs()) {
                        std::vector<Elem> cv;
                        for (const auto& x : v0)
                            cv.push_back(c * x);
                        VecSeries img = ed.apply(constant_vector(d.shape(), cv));
                        for (int i = 0; i < psi.rank; ++i)
                            rhs[std::size_t(i)].add_to(e, img[std::size_t(i)][a]);
                    }
            }
            if (lhs != rhs) {
                ok = false;
                fail(rep.substitution, "phi = [" + join(phi.image_strings(), ", ") + "], D = [" +
                                           join(d.image_strings(), ", ") + "], vector " + vstr(v));
                break;
            }
        }
        ++rep.substitution.tested;
        rep.substitution.passed += ok;
    }
    return rep;
}

namespace {

std::vector<MultiIndex> unit_indices(const Shape& sh) {
    std::vector<MultiIndex> out;
    for (int i = 0; i < sh->arity(); ++i) {
        MultiIndex u = MultiIndex::unit(std::size_t(sh->arity()), std::size_t(i));
        if (sh->contains(u))
            out.push_back(u);
    }
    return out;
}

bool report(std::string* failure, std::string what) {
    if (failure)
        *failure = std::move(what);
    return false;
}

} // namespace

bool lie_matches_classical(const HSDerivation& d, int degree_cap, std::string* failure) {
    const AlgebraPtr& A = d.algebra();
    auto ev = evaluate(lie_structure(A), d);
    bool exact;
    auto test = operator_test_set(A, degree_cap, &exact);
    std::size_t n = A->nvars();
    for (const auto& u : unit_indices(d.shape())) {
        Derivation delta = d.component_derivation(u);
        for (const auto& f : test)
            for (std::size_t j = 0; j < n; ++j) {
                std::vector<Elem> v(n, Elem(A));
                v[j] = f;
                VecSeries got = ev.apply(constant_vector(d.shape(), v));
                // L(f dx_j) = delta(f) dx_j + f d(delta(x_j)).
                for (std::size_t i = 0; i < n; ++i) {
                    Elem expect = f * delta.apply(Elem::variable(A, j)).partial(i);
                    if (i == j)
                        expect += delta.apply(f);
                    if (got[i][u] != expect)
                        return report(failure, "index " + u.to_string() + ", form " + f.to_string() + " d" + A->vars()[j]);
                }
            }
    }
    return true;
}

bool adjoint_matches_classical(const HSDerivation& d, int degree_cap, std::string* failure) {
    const AlgebraPtr& A = d.algebra();
    auto ev = evaluate(adjoint_structure(A), d);
    bool exact;
    auto test = operator_test_set(A, degree_cap, &exact);
    std::size_t n = A->nvars();
    for (const auto& u : unit_indices(d.shape())) {
        Derivation delta = d.component_derivation(u);
        for (const auto& g : test)
            for (std::size_t j = 0; j < n; ++j) {
                std::vector<Elem> v(n, Elem(A));
                v[j] = g;
                VecSeries got = ev.apply(constant_vector(d.shape(), v));
                // [delta, g d_j](x_i) = delta(g) [i = j] - g d_j(delta(x_i)).
                for (std::size_t i = 0; i < n; ++i) {
                    Elem expect = -(g * delta.apply(Elem::variable(A, i)).partial(j));
                    if (i == j)
                        expect += delta.apply(g);
                    if (got[i][u] != expect)
                        return report(failure, "index " + u.to_string() + ", field " + g.to_string() + " d/d" + A->vars()[j]);
                }
            }
    }
    return true;
}

bool lie_matches_definition(const HSDerivation& d, int degree_cap, std::string* failure) {
    const AlgebraPtr& A = d.algebra();
    auto ev = evaluate(lie_structure(A), d);
    bool exact;
    std::size_t n = A->nvars();
    for (const auto& f : operator_test_set(A, degree_cap, &exact)) {
        std::vector<Elem> df;
        for (std::size_t i = 0; i < n; ++i)
            df.push_back(f.partial(i));
        VecSeries got = ev.apply(constant_vector(d.shape(), df));
        ElemSeries phi_f = d.apply(f);
        for (std::size_t i = 0; i < n; ++i)
            if (got[i] != partial_series(phi_f, i))
                return report(failure, "element " + f.to_string());
    }
    return true;
}

bool adjoint_matches_definition(const HSDerivation& d, int degree_cap, std::string* failure) {
    const AlgebraPtr& A = d.algebra();
    auto ev = evaluate(adjoint_structure(A), d);
    bool exact;
    std::size_t n = A->nvars();
    OpSeries ops = operator_series(d), inv = operator_series(invert(d));
    std::vector<DiffOp> partials;
    for (std::size_t i = 0; i < n; ++i)
        partials.push_back(DiffOp::divided(A, MultiIndex::unit(n, i)));
    for (const auto& g : operator_test_set(A, degree_cap, &exact))
        for (std::size_t j = 0; j < n; ++j) {
            DiffOp field = DiffOp::multiplication(g) * partials[j];
            OpSeries conj = ops * OpSeries::constant(d.shape(), field, DiffOp::zero(A)) * inv;
            std::vector<Elem> v(n, Elem(A));
            v[j] = g;
            VecSeries got = ev.apply(constant_vector(d.shape(), v));
            for (const auto& a : d.shape()->elements()) {
                DiffOp expect = DiffOp::zero(A);
                for (std::size_t i = 0; i < n; ++i)
                    expect = expect + DiffOp::multiplication(got[i][a]) * partials[i];
                if (conj[a] != expect)
                    return report(failure, "index " + a.to_string() + ", field " + g.to_string() + " d/d" + A->vars()[j]);
            }
        }
    return true;
}

} // namespace hs
