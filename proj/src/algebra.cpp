#include "hs/algebra.hpp"

#include "hs/error.hpp"
#include "hs/parse.hpp"

#include <algorithm>
#include <deque>
#include <set>

namespace hs {

Int multi_binomial(const MultiIndex& a, const MultiIndex& b) {
    Int r = 1;
    for (std::size_t i = 0; i < a.size(); ++i) {
        if (b[i] > a[i])
            return 0;
        r *= binomial(a[i], b[i]);
    }
    return r;
}

namespace poly {

void add_term(Terms& t, const MultiIndex& m, const Rat& c, const BaseRing& k) {
    auto it = t.find(m);
    if (it == t.end()) {
        Rat v = k.normalize(c);
        if (v != 0)
            t.emplace(m, std::move(v));
        return;
    }
    it->second = k.add(it->second, c);
    if (it->second == 0)
        t.erase(it);
}

Terms add(const Terms& a, const Terms& b, const BaseRing& k) {
    Terms r = a;
    for (const auto& [m, c] : b)
        add_term(r, m, c, k);
    return r;
}

Terms sub(const Terms& a, const Terms& b, const BaseRing& k) {
    Terms r = a;
    for (const auto& [m, c] : b)
        add_term(r, m, -c, k);
    return r;
}

Terms mul(const Terms& a, const Terms& b, const BaseRing& k) {
    Terms r;
    for (const auto& [ma, ca] : a)
        for (const auto& [mb, cb] : b)
            add_term(r, ma + mb, ca * cb, k);
    return r;
}

Terms scale(const Terms& a, const Rat& c, const BaseRing& k) {
    Terms r;
    for (const auto& [m, v] : a)
        add_term(r, m, v * c, k);
    return r;
}

Terms partial(const Terms& a, std::size_t i, const BaseRing& k) {
    Terms r;
    for (const auto& [m, c] : a) {
        if (m[i] == 0)
            continue;
        MultiIndex d = m;
        d[i] -= 1;
        add_term(r, d, c * m[i], k);
    }
    return r;
}

Terms divided_partial(const Terms& a, const MultiIndex& b, const BaseRing& k) {
    Terms r;
    for (const auto& [m, c] : a) {
        if (!b.leq(m))
            continue;
        add_term(r, m - b, c * Rat(multi_binomial(m, b)), k);
    }
    return r;
}

int degree(const Terms& a) {
    return a.empty() ? -1 : a.begin()->first.degree();
}

std::string format(const Terms& a, const std::vector<std::string>& vars) {
    if (a.empty())
        return "0";
    std::string out;
    bool first = true;
    for (const auto& [m, c] : a) {
        Rat v = c;
        bool neg = v < 0;
        if (neg)
            v = -v;
        if (first)
            out += neg ? "-" : "";
        else
            out += neg ? " - " : " + ";
        first = false;
        std::string mono;
        for (std::size_t i = 0; i < m.size(); ++i) {
            if (m[i] == 0)
                continue;
            if (!mono.empty())
                mono += "*";
            mono += vars[i];
            if (m[i] > 1)
                mono += "^" + std::to_string(m[i]);
        }
        if (mono.empty())
            out += to_string(v);
        else if (v == 1)
            out += mono;
        else
            out += to_string(v) + "*" + mono;
    }
    return out;
}

namespace {
struct TermsContext {
    using Value = Terms;
    const std::vector<std::string>& vars;
    const BaseRing& k;

    Value number(const Int& n) {
        Terms t;
        add_term(t, MultiIndex(vars.size()), Rat(n), k);
        return t;
    }
    Value atom(const std::string& name, const std::vector<int>* bracket) {
        if (bracket)
            throw ParseError("unexpected indexed symbol '" + name + "'");
        for (std::size_t i = 0; i < vars.size(); ++i)
            if (vars[i] == name) {
                Terms t;
                add_term(t, MultiIndex::unit(vars.size(), i), 1, k);
                return t;
            }
        throw ParseError("unknown variable '" + name + "'");
    }
    Value add(const Value& a, const Value& b) { return poly::add(a, b, k); }
    Value sub(const Value& a, const Value& b) { return poly::sub(a, b, k); }
    Value mul(const Value& a, const Value& b) { return poly::mul(a, b, k); }
    Value neg(const Value& a) { return poly::scale(a, -1, k); }
    Value pow(const Value& a, unsigned e) {
        Value r = number(1);
        for (unsigned i = 0; i < e; ++i)
            r = poly::mul(r, a, k);
        return r;
    }
    Value div(const Value& a, const Int& d) { return poly::scale(a, k.inverse(Rat(d)), k); }
};
} // namespace

Terms parse(std::string_view text, const std::vector<std::string>& vars, const BaseRing& k) {
    TermsContext ctx{vars, k};
    return read_expression(text, ctx);
}

} // namespace poly

namespace {

bool divides(const MultiIndex& a, const MultiIndex& b) { return a.leq(b); }

MultiIndex lcm(const MultiIndex& a, const MultiIndex& b) {
    MultiIndex r(a.size());
    for (std::size_t i = 0; i < a.size(); ++i)
        r[i] = std::max(a[i], b[i]);
    return r;
}

bool coprime(const MultiIndex& a, const MultiIndex& b) {
    for (std::size_t i = 0; i < a.size(); ++i)
        if (a[i] > 0 && b[i] > 0)
            return false;
    return true;
}

Terms make_monic(const Terms& f, const BaseRing& k) {
    return poly::scale(f, k.inverse(f.begin()->second), k);
}

// Full reduction of p by a list of monic polynomials.
Terms reduce(Terms p, const std::vector<Terms>& G, const BaseRing& k) {
    Terms rem;
    while (!p.empty()) {
        auto it = p.begin();
        MultiIndex m = it->first;
        Rat c = it->second;
        const Terms* hit = nullptr;
        for (const auto& g : G)
            if (divides(g.begin()->first, m)) {
                hit = &g;
                break;
            }
        if (!hit) {
            rem.emplace(m, c);
            p.erase(it);
            continue;
        }
        MultiIndex q = m - hit->begin()->first;
        for (const auto& [gm, gc] : *hit)
            poly::add_term(p, gm + q, -c * gc, k);
    }
    return rem;
}

} // namespace

AlgebraPtr Algebra::make(const BaseRing& k, std::vector<std::string> vars, const std::vector<Terms>& relations,
                         int degree_cap) {
    std::set<std::string> seen;
    for (const auto& v : vars) {
        if (v.empty() || !seen.insert(v).second)
            throw ParseError("variable names must be distinct and non-empty");
        if (v.size() >= 2 && (v[0] == 's' || v[0] == 't') &&
            std::all_of(v.begin() + 1, v.end(), [](char c) { return std::isdigit(static_cast<unsigned char>(c)); }))
            throw ParseError("variable name '" + v + "' is reserved for series variables");
        if (v == "d")
            throw ParseError("variable name 'd' is reserved for operators");
    }
    auto A = std::shared_ptr<Algebra>(new Algebra(k, std::move(vars), degree_cap));
    for (const auto& r : relations) {
        Terms t;
        for (const auto& [m, c] : r) {
            if (m.size() != A->vars_.size())
                throw DomainError("relation exponent length does not match variables");
            poly::add_term(t, m, c, k);
        }
        if (!t.empty())
            A->relations_.push_back(std::move(t));
    }
    A->complete();
    return A;
}

AlgebraPtr Algebra::make(const BaseRing& k, std::vector<std::string> vars, const std::vector<std::string>& relations,
                         int degree_cap) {
    std::vector<Terms> rels;
    for (const auto& r : relations)
        rels.push_back(poly::parse(r, vars, k));
    return make(k, std::move(vars), rels, degree_cap);
}

AlgebraPtr Algebra::polynomial(const BaseRing& k, std::vector<std::string> vars) {
    return make(k, std::move(vars), std::vector<Terms>{});
}

std::optional<std::size_t> Algebra::var_index(std::string_view name) const {
    for (std::size_t i = 0; i < vars_.size(); ++i)
        if (vars_[i] == name)
            return i;
    return std::nullopt;
}

void Algebra::complete() {
    const BaseRing& k = base_;
    if (relations_.empty()) {
        report_.method = "free";
    } else if (k.is_field()) {
        report_.method = "buchberger";
        std::vector<Terms> G;
        for (const auto& r : relations_) {
            if (poly::degree(r) > degree_cap_)
                throw NonConfluent("relation degree exceeds cap " + std::to_string(degree_cap_));
            G.push_back(make_monic(r, k));
        }
        std::deque<std::pair<std::size_t, std::size_t>> pairs;
        for (std::size_t j = 0; j < G.size(); ++j)
            for (std::size_t i = 0; i < j; ++i)
                pairs.emplace_back(i, j);
        // Inputs that already reduce each other are not confluent as given.
        for (std::size_t i = 0; i < G.size(); ++i)
            for (std::size_t j = 0; j < G.size(); ++j)
                if (i != j && divides(G[j].begin()->first, G[i].begin()->first))
                    report_.already_confluent = false;
        while (!pairs.empty()) {
            auto [i, j] = pairs.front();
            pairs.pop_front();
            const MultiIndex& li = G[i].begin()->first;
            const MultiIndex& lj = G[j].begin()->first;
            if (coprime(li, lj))
                continue;
            MultiIndex l = lcm(li, lj);
            if (l.degree() > degree_cap_)
                throw NonConfluent("critical pair of degree " + std::to_string(l.degree()) + " exceeds cap " +
                                   std::to_string(degree_cap_));
            Terms s;
            for (const auto& [m, c] : G[i])
                poly::add_term(s, m + (l - li), c, k);
            for (const auto& [m, c] : G[j])
                poly::add_term(s, m + (l - lj), -c, k);
            Terms r = reduce(std::move(s), G, k);
            if (r.empty())
                continue;
            report_.already_confluent = false;
            if (poly::degree(r) > degree_cap_)
                throw NonConfluent("completion produced degree " + std::to_string(poly::degree(r)) +
                                   " beyond cap " + std::to_string(degree_cap_));
            G.push_back(make_monic(r, k));
            for (std::size_t a = 0; a + 1 < G.size(); ++a)
                pairs.emplace_back(a, G.size() - 1);
        }
        // Minimal, then reduced basis.
        std::vector<Terms> minimal;
        for (std::size_t i = 0; i < G.size(); ++i) {
            bool redundant = false;
            for (std::size_t j = 0; j < G.size() && !redundant; ++j) {
                if (i == j)
                    continue;
                const auto& li = G[i].begin()->first;
                const auto& lj = G[j].begin()->first;
                if (divides(lj, li) && (lj != li || j < i))
                    redundant = true;
            }
            if (!redundant)
                minimal.push_back(G[i]);
        }
        for (std::size_t i = 0; i < minimal.size(); ++i) {
            std::vector<Terms> others;
            for (std::size_t j = 0; j < minimal.size(); ++j)
                if (j != i)
                    others.push_back(minimal[j]);
            Terms head;
            head.emplace(minimal[i].begin()->first, minimal[i].begin()->second);
            Terms tail = minimal[i];
            tail.erase(tail.begin());
            gb_.push_back(poly::add(head, reduce(tail, others, k), k));
        }
        std::sort(gb_.begin(), gb_.end(), [](const Terms& a, const Terms& b) {
            return GrevlexGreater{}(b.begin()->first, a.begin()->first);
        });
    } else {
        report_.method = "triangular-monic";
        std::set<std::size_t> used;
        for (const auto& r : relations_) {
            const MultiIndex& lm = r.begin()->first;
            std::size_t nz = 0, var = 0;
            for (std::size_t i = 0; i < lm.size(); ++i)
                if (lm[i] > 0) {
                    ++nz;
                    var = i;
                }
            if (nz != 1)
                throw DomainError("relation " + poly::format(r, vars_) +
                                  " is not monic in a single leading variable; only triangular-monic systems are "
                                  "supported over " + k.name());
            if (!k.is_unit(r.begin()->second))
                throw DomainError("relation " + poly::format(r, vars_) + " has non-unit leading coefficient over " +
                                  k.name());
            if (!used.insert(var).second)
                throw DomainError("two relations share leading variable " + vars_[var] +
                                  "; not triangular-monic over " + k.name());
            gb_.push_back(make_monic(r, k));
        }
    }
    for (const auto& g : gb_)
        report_.system.push_back(poly::format(g, vars_));

    // Finite dimension: every variable has a pure-power leading monomial.
    if (gb_.size() == 1 && gb_[0].begin()->first.is_zero()) {
        finite_dim_ = true; // zero ring
    } else if (!gb_.empty()) {
        std::vector<bool> bounded(vars_.size(), false);
        for (const auto& g : gb_) {
            const MultiIndex& lm = g.begin()->first;
            std::size_t nz = 0, var = 0;
            for (std::size_t i = 0; i < lm.size(); ++i)
                if (lm[i] > 0) {
                    ++nz;
                    var = i;
                }
            if (nz == 1)
                bounded[var] = true;
        }
        finite_dim_ = std::all_of(bounded.begin(), bounded.end(), [](bool b) { return b; });
    } else {
        finite_dim_ = vars_.empty();
    }
    if (finite_dim_) {
        std::set<MultiIndex> seen;
        std::deque<MultiIndex> todo;
        MultiIndex zero(vars_.size());
        if (is_standard(zero)) {
            todo.push_back(zero);
            seen.insert(zero);
        }
        while (!todo.empty()) {
            MultiIndex m = todo.front();
            todo.pop_front();
            basis_.push_back(m);
            for (std::size_t i = 0; i < vars_.size(); ++i) {
                MultiIndex n = m + MultiIndex::unit(vars_.size(), i);
                if (is_standard(n) && seen.insert(n).second)
                    todo.push_back(n);
            }
        }
        std::sort(basis_.begin(), basis_.end());
        for (std::size_t i = 0; i < basis_.size(); ++i)
            basis_pos_[basis_[i]] = i;
    }
}

bool Algebra::is_standard(const MultiIndex& m) const {
    for (const auto& g : gb_)
        if (divides(g.begin()->first, m))
            return false;
    return true;
}

const std::vector<MultiIndex>& Algebra::monomial_basis() const {
    if (!finite_dim_)
        throw DomainError("algebra " + describe() + " is not finite-dimensional");
    return basis_;
}

std::optional<std::size_t> Algebra::basis_index(const MultiIndex& m) const {
    auto it = basis_pos_.find(m);
    if (it == basis_pos_.end())
        return std::nullopt;
    return it->second;
}

std::vector<MultiIndex> Algebra::standard_monomials(int d) const {
    std::vector<MultiIndex> out;
    for (int e = 0; e <= d; ++e)
        for (auto& m : exponents_of_degree(vars_.size(), e))
            if (is_standard(m))
                out.push_back(m);
    return out;
}

Terms Algebra::normal_form(Terms a) const {
    if (gb_.empty())
        return a;
    return reduce(std::move(a), gb_, base_);
}

std::string Algebra::describe() const {
    std::string s = base_.name() + "[";
    for (std::size_t i = 0; i < vars_.size(); ++i)
        s += (i ? "," : "") + vars_[i];
    s += "]";
    if (!relations_.empty()) {
        s += "/(";
        for (std::size_t i = 0; i < relations_.size(); ++i)
            s += (i ? ", " : "") + poly::format(relations_[i], vars_);
        s += ")";
    }
    return s;
}

bool same_algebra(const AlgebraPtr& a, const AlgebraPtr& b) {
    return a == b || (a && b && *a == *b);
}

// ---- Elem ----

Elem::Elem(AlgebraPtr A, Terms t) : alg_(std::move(A)) {
    t_ = alg_->normal_form(std::move(t));
}

Elem Elem::constant(AlgebraPtr A, const Rat& c) {
    Terms t;
    poly::add_term(t, MultiIndex(A->nvars()), c, A->base());
    return Elem(std::move(A), std::move(t));
}

Elem Elem::variable(AlgebraPtr A, std::size_t i) {
    return monomial(A, MultiIndex::unit(A->nvars(), i));
}

Elem Elem::monomial(AlgebraPtr A, const MultiIndex& m, const Rat& c) {
    Terms t;
    poly::add_term(t, m, c, A->base());
    return Elem(std::move(A), std::move(t));
}

Elem Elem::parse(AlgebraPtr A, std::string_view text) {
    Terms t = poly::parse(text, A->vars(), A->base());
    return Elem(std::move(A), std::move(t));
}

Elem Elem::from_coordinates(AlgebraPtr A, const std::vector<Rat>& coords) {
    const auto& basis = A->monomial_basis();
    if (coords.size() != basis.size())
        throw DomainError("coordinate vector has wrong length");
    Terms t;
    for (std::size_t i = 0; i < coords.size(); ++i)
        poly::add_term(t, basis[i], coords[i], A->base());
    return Elem(std::move(A), std::move(t));
}

Rat Elem::coefficient(const MultiIndex& m) const {
    auto it = t_.find(m);
    return it == t_.end() ? Rat(0) : it->second;
}

std::optional<Rat> Elem::constant_value() const {
    if (t_.empty())
        return Rat(0);
    if (t_.size() == 1 && t_.begin()->first.is_zero())
        return t_.begin()->second;
    return std::nullopt;
}

std::vector<Rat> Elem::coordinates() const {
    const auto& basis = alg_->monomial_basis();
    std::vector<Rat> c(basis.size());
    for (const auto& [m, v] : t_)
        c[*alg_->basis_index(m)] = v;
    return c;
}

Elem Elem::operator+(const Elem& o) const {
    Elem r(alg_ ? alg_ : o.alg_);
    r.t_ = poly::add(t_, o.t_, r.alg_->base());
    return r;
}

Elem Elem::operator-(const Elem& o) const {
    Elem r(alg_ ? alg_ : o.alg_);
    r.t_ = poly::sub(t_, o.t_, r.alg_->base());
    return r;
}

Elem Elem::operator*(const Elem& o) const {
    if (t_.empty() || o.t_.empty())
        return Elem(alg_ ? alg_ : o.alg_);
    return Elem(alg_, poly::mul(t_, o.t_, alg_->base()));
}

Elem Elem::operator-() const {
    Elem r(alg_);
    r.t_ = poly::scale(t_, -1, alg_->base());
    return r;
}

Elem Elem::scaled(const Rat& c) const {
    Elem r(alg_);
    r.t_ = poly::scale(t_, c, alg_->base());
    return r;
}

Elem Elem::pow(unsigned e) const {
    Elem r = constant(alg_, 1);
    Elem b = *this;
    while (e) {
        if (e & 1)
            r = r * b;
        e >>= 1;
        if (e)
            b = b * b;
    }
    return r;
}

Elem Elem::partial(std::size_t i) const {
    return Elem(alg_, poly::partial(t_, i, alg_->base()));
}

Elem Elem::divided_partial(const MultiIndex& b) const {
    return Elem(alg_, poly::divided_partial(t_, b, alg_->base()));
}

std::string Elem::to_string() const {
    return alg_ ? poly::format(t_, alg_->vars()) : "0";
}

// ---- Derivation ----

Derivation Derivation::make(AlgebraPtr A, std::vector<Elem> images) {
    if (images.size() != A->nvars())
        throw DomainError("derivation needs one image per generator");
    Derivation d;
    d.alg_ = A;
    d.images_ = std::move(images);
    for (const auto& f : A->relations()) {
        Elem v = d.apply_terms(f);
        if (!v.is_zero())
            throw DomainError("derivation does not preserve the relation " + poly::format(f, A->vars()) +
                              " (image " + v.to_string() + ")");
    }
    return d;
}

Derivation Derivation::partial(AlgebraPtr A, std::size_t i) {
    std::vector<Elem> im;
    for (std::size_t j = 0; j < A->nvars(); ++j)
        im.push_back(Elem::constant(A, i == j ? 1 : 0));
    return make(A, std::move(im));
}

Derivation Derivation::zero(AlgebraPtr A) {
    return make(A, std::vector<Elem>(A->nvars(), Elem(A)));
}

Elem Derivation::apply_terms(const Terms& f) const {
    Elem r(alg_);
    for (std::size_t j = 0; j < alg_->nvars(); ++j) {
        if (images_[j].is_zero())
            continue;
        r += Elem(alg_, poly::partial(f, j, alg_->base())) * images_[j];
    }
    return r;
}

Elem Derivation::apply(const Elem& a) const { return apply_terms(a.terms()); }

Derivation Derivation::scaled(const Elem& a) const {
    Derivation d = *this;
    for (auto& v : d.images_)
        v = a * v;
    return d;
}

Derivation Derivation::operator+(const Derivation& o) const {
    Derivation d = *this;
    for (std::size_t j = 0; j < images_.size(); ++j)
        d.images_[j] += o.images_[j];
    return d;
}

bool Derivation::is_zero() const {
    return std::all_of(images_.begin(), images_.end(), [](const Elem& e) { return e.is_zero(); });
}

} // namespace hs
