#include "hs/dop.hpp"

#include "hs/parse.hpp"

#include <set>

namespace hs {

namespace {

DiffOp::Kind kind_for(const AlgebraPtr& A) {
    if (A->is_polynomial())
        return DiffOp::Kind::DividedPower;
    if (A->is_finite_dim())
        return DiffOp::Kind::Matrix;
    throw DomainError("differential operators are only represented for polynomial or finite-dimensional algebras; " +
                      A->describe() + " is neither");
}

std::string bracket_text(const std::string& head, const MultiIndex& b) {
    std::string s = head + "[";
    for (std::size_t i = 0; i < b.size(); ++i)
        s += (i ? "," : "") + std::to_string(b[i]);
    return s + "]";
}

// "c*head[b]" style term list, highest index first.
std::string format_terms(const std::map<MultiIndex, Elem>& t, const std::string& head) {
    if (t.empty())
        return "0";
    std::string out;
    for (auto it = t.rbegin(); it != t.rend(); ++it) {
        const auto& [b, c] = *it;
        std::string coef = c.to_string(), piece;
        if (b.is_zero())
            piece = coef;
        else if (coef == "1")
            piece = bracket_text(head, b);
        else if (coef == "-1")
            piece = "-" + bracket_text(head, b);
        else if (c.terms().size() == 1)
            piece = coef + "*" + bracket_text(head, b);
        else
            piece = "(" + coef + ")*" + bracket_text(head, b);
        if (out.empty())
            out = piece;
        else if (piece[0] == '-')
            out += " - " + piece.substr(1);
        else
            out += " + " + piece;
    }
    return out;
}

void add_into(std::map<MultiIndex, Elem>& t, const MultiIndex& b, const Elem& c) {
    if (c.is_zero())
        return;
    auto it = t.find(b);
    if (it == t.end()) {
        t.emplace(b, c);
        return;
    }
    it->second += c;
    if (it->second.is_zero())
        t.erase(it);
}

Vec flatten(const Mat& m) {
    Vec v;
    for (const auto& row : m)
        v.insert(v.end(), row.begin(), row.end());
    return v;
}

Mat unflatten(const Vec& v, std::size_t n) {
    Mat m(n, Vec(n));
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = 0; j < n; ++j)
            m[i][j] = v[i * n + j];
    return m;
}

struct OpContext {
    using Value = DiffOp;
    const AlgebraPtr& A;

    Value number(const Int& n) { return DiffOp::identity(A).scaled(Rat(n)); }
    Value atom(const std::string& name, const std::vector<int>* bracket) {
        if (name == "d") {
            MultiIndex b(A->nvars());
            if (!bracket) {
                if (A->nvars() != 1)
                    throw ParseError("bare 'd' needs a univariate algebra; write d[...]");
                b[0] = 1;
            } else {
                if (bracket->size() != A->nvars())
                    throw ParseError("d[...] needs one entry per variable");
                for (std::size_t i = 0; i < bracket->size(); ++i)
                    b[i] = (*bracket)[i];
            }
            return DiffOp::divided(A, b);
        }
        if (bracket)
            throw ParseError("unexpected indexed symbol '" + name + "'");
        if (auto i = A->var_index(name))
            return DiffOp::multiplication(Elem::variable(A, *i));
        throw ParseError("unknown variable '" + name + "'");
    }
    Value add(const Value& a, const Value& b) { return a + b; }
    Value sub(const Value& a, const Value& b) { return a - b; }
    Value mul(const Value& a, const Value& b) { return a * b; }
    Value neg(const Value& a) { return -a; }
    Value pow(const Value& a, unsigned e) {
        Value r = DiffOp::identity(A);
        for (unsigned i = 0; i < e; ++i)
            r = r * a;
        return r;
    }
    Value div(const Value& a, const Int& d) { return a.scaled(A->base().inverse(Rat(d))); }
};

} // namespace

DiffOp DiffOp::zero(const AlgebraPtr& A) {
    DiffOp p;
    p.alg_ = A;
    p.kind_ = kind_for(A);
    if (p.kind_ == Kind::Matrix) {
        std::size_t n = A->monomial_basis().size();
        p.mat_.assign(n, Vec(n, Rat(0)));
    }
    return p;
}

DiffOp DiffOp::identity(const AlgebraPtr& A) { return multiplication(Elem::constant(A, 1)); }

DiffOp DiffOp::multiplication(const Elem& a) {
    const AlgebraPtr& A = a.algebra();
    DiffOp p = zero(A);
    if (p.kind_ == Kind::DividedPower) {
        if (!a.is_zero())
            p.dp_.emplace(MultiIndex(A->nvars()), a);
        return p;
    }
    const auto& basis = A->monomial_basis();
    for (std::size_t j = 0; j < basis.size(); ++j) {
        Vec col = (a * Elem::monomial(A, basis[j])).coordinates();
        for (std::size_t i = 0; i < basis.size(); ++i)
            p.mat_[i][j] = col[i];
    }
    return p;
}

DiffOp DiffOp::divided(const AlgebraPtr& A, const MultiIndex& b) {
    if (kind_for(A) != Kind::DividedPower)
        throw DomainError("divided-power basis operators need a polynomial algebra");
    DPTerms t;
    t.emplace(b, Elem::constant(A, 1));
    return from_dp_terms(A, std::move(t));
}

DiffOp DiffOp::from_dp_terms(const AlgebraPtr& A, DPTerms terms) {
    DiffOp p = zero(A);
    if (p.kind_ != Kind::DividedPower)
        throw DomainError("divided-power basis operators need a polynomial algebra");
    for (auto& [b, c] : terms)
        if (!c.is_zero())
            p.dp_.emplace(b, c);
    return p;
}

DiffOp DiffOp::from_matrix(const AlgebraPtr& A, Mat m) {
    DiffOp p = zero(A);
    if (p.kind_ != Kind::Matrix || m.size() != p.mat_.size())
        throw DomainError("matrix does not match the algebra basis");
    for (auto& row : m)
        for (auto& x : row)
            x = A->base().normalize(x);
    p.mat_ = std::move(m);
    return p;
}

DiffOp DiffOp::from_function(const AlgebraPtr& A, const std::function<Elem(const Elem&)>& f, int order_bound) {
    if (kind_for(A) == Kind::DividedPower)
        return to_dp_basis(A, f, order_bound);
    const auto& basis = A->monomial_basis();
    Mat m(basis.size(), Vec(basis.size()));
    for (std::size_t j = 0; j < basis.size(); ++j) {
        Vec col = f(Elem::monomial(A, basis[j])).coordinates();
        for (std::size_t i = 0; i < basis.size(); ++i)
            m[i][j] = col[i];
    }
    return from_matrix(A, std::move(m));
}

DiffOp DiffOp::parse(const AlgebraPtr& A, std::string_view text) {
    OpContext ctx{A};
    return read_expression(text, ctx);
}

void DiffOp::require_same(const DiffOp& o) const {
    if (!same_algebra(alg_, o.alg_))
        throw DomainError("operators act on different algebras");
}

Elem DiffOp::apply(const Elem& a) const {
    if (kind_ == Kind::DividedPower) {
        Elem out(alg_);
        for (const auto& [b, c] : dp_)
            out += c * a.divided_partial(b);
        return out;
    }
    return Elem::from_coordinates(alg_, mat_vec(alg_->base(), mat_, a.coordinates()));
}

bool DiffOp::is_zero() const {
    if (kind_ == Kind::DividedPower)
        return dp_.empty();
    for (const auto& row : mat_)
        if (!hs::is_zero(row))
            return false;
    return true;
}

int DiffOp::order() const {
    if (is_zero())
        return -1;
    if (kind_ == Kind::DividedPower) {
        int o = 0;
        for (const auto& kv : dp_)
            o = std::max(o, kv.first.degree());
        return o;
    }
    // Order <= n iff every (n+1)-fold commutator with multiplications by generators vanishes.
    std::size_t dim = mat_.size();
    std::vector<DiffOp> gens;
    for (std::size_t j = 0; j < alg_->nvars(); ++j)
        gens.push_back(multiplication(Elem::variable(alg_, j)));
    int cap = int(dim) + 1;
    const BaseRing& k = alg_->base();
    std::vector<Mat> level{mat_};
    for (int n = 0; n <= cap; ++n) {
        std::vector<Mat> next;
        if (k.is_field()) {
            SpanBasis span(k, dim * dim);
            for (const auto& q : level)
                for (const auto& g : gens) {
                    Mat c = commutator(from_matrix(alg_, q), g).mat_;
                    if (span.add(flatten(c)))
                        next.push_back(c);
                }
        } else {
            std::set<Vec> seen;
            for (const auto& q : level)
                for (const auto& g : gens) {
                    Vec c = flatten(commutator(from_matrix(alg_, q), g).mat_);
                    if (!hs::is_zero(c) && seen.insert(c).second)
                        next.push_back(unflatten(c, dim));
                }
        }
        if (next.empty())
            return n;
        level = std::move(next);
    }
    throw OrderExceeded("operator is not differential within order " + std::to_string(cap));
}

DiffOp DiffOp::operator+(const DiffOp& o) const {
    require_same(o);
    DiffOp r = *this;
    if (kind_ == Kind::DividedPower) {
        for (const auto& [b, c] : o.dp_)
            add_into(r.dp_, b, c);
        return r;
    }
    for (std::size_t i = 0; i < mat_.size(); ++i)
        for (std::size_t j = 0; j < mat_.size(); ++j)
            r.mat_[i][j] = alg_->base().add(mat_[i][j], o.mat_[i][j]);
    return r;
}

DiffOp DiffOp::operator-() const { return scaled(-1); }

DiffOp DiffOp::operator-(const DiffOp& o) const { return *this + (-o); }

DiffOp DiffOp::scaled(const Rat& c) const {
    DiffOp r = zero(alg_);
    if (kind_ == Kind::DividedPower) {
        for (const auto& [b, e] : dp_)
            add_into(r.dp_, b, e.scaled(c));
        return r;
    }
    for (std::size_t i = 0; i < mat_.size(); ++i)
        for (std::size_t j = 0; j < mat_.size(); ++j)
            r.mat_[i][j] = alg_->base().mul(mat_[i][j], c);
    return r;
}

DiffOp DiffOp::operator*(const DiffOp& o) const {
    require_same(o);
    if (kind_ == Kind::Matrix) {
        DiffOp r = zero(alg_);
        r.mat_ = mat_mul(alg_->base(), mat_, o.mat_);
        return r;
    }
    // (c d^[b]) o (c' d^[e]) = sum_{f <= b} c d^[f](c') C(b-f+e, e) d^[b-f+e].
    DiffOp r = zero(alg_);
    for (const auto& [b, c] : dp_) {
        CoIdeal below = CoIdeal::nbeta(b);
        for (const auto& [e, c2] : o.dp_)
            for (const auto& f : below.elements()) {
                Elem df = c2.divided_partial(f);
                if (df.is_zero())
                    continue;
                MultiIndex g = b - f + e;
                Rat bin(multi_binomial(g, e));
                add_into(r.dp_, g, (c * df).scaled(bin));
            }
    }
    return r;
}

std::string DiffOp::to_string() const {
    if (kind_ == Kind::DividedPower)
        return format_terms(dp_, "d");
    std::string s = "[";
    for (std::size_t i = 0; i < mat_.size(); ++i) {
        s += i ? ",[" : "[";
        for (std::size_t j = 0; j < mat_.size(); ++j)
            s += (j ? "," : "") + hs::to_string(mat_[i][j]);
        s += "]";
    }
    return s + "]";
}

bool operator==(const DiffOp& a, const DiffOp& b) {
    return a.kind_ == b.kind_ && a.dp_ == b.dp_ && a.mat_ == b.mat_;
}

DiffOp commutator(const DiffOp& p, const DiffOp& q) { return p * q - q * p; }

DiffOp transpose(const DiffOp& p) {
    if (p.kind() != DiffOp::Kind::DividedPower)
        throw DomainError("formal adjoint needs a polynomial algebra");
    const AlgebraPtr& A = p.algebra();
    DiffOp r = DiffOp::zero(A);
    for (const auto& [b, c] : p.dp_terms()) {
        DiffOp t = DiffOp::divided(A, b) * DiffOp::multiplication(c);
        r = r + (b.degree() % 2 ? -t : t);
    }
    return r;
}

DiffOp to_dp_basis(const AlgebraPtr& A, const std::function<Elem(const Elem&)>& f, int n) {
    if (!A->is_polynomial())
        throw DomainError("divided-power interpolation needs a polynomial algebra");
    std::size_t nv = A->nvars();
    DiffOp::DPTerms c;
    auto predicted = [&](const MultiIndex& a) {
        Elem v(A);
        for (const auto& [b, cb] : c)
            if (b.leq(a))
                v += cb * Elem::monomial(A, a - b, Rat(multi_binomial(a, b)));
        return v;
    };
    for (int d = 0; d <= n; ++d)
        for (const auto& b : exponents_of_degree(nv, d)) {
            Elem cb = f(Elem::monomial(A, b)) - predicted(b);
            if (!cb.is_zero())
                c.emplace(b, cb);
        }
    for (const auto& a : exponents_of_degree(nv, n + 1))
        if (f(Elem::monomial(A, a)) != predicted(a))
            throw OrderExceeded("operator has order above " + std::to_string(n) + ": residual at x^" + a.to_string());
    return DiffOp::from_dp_terms(A, std::move(c));
}

OpSeries one_op_series(const AlgebraPtr& A, const Shape& shape) {
    return OpSeries::constant(shape, DiffOp::identity(A), DiffOp::zero(A));
}

OpSeries operator_series(const HSDerivation& d) {
    const AlgebraPtr& A = d.algebra();
    const Shape& sh = d.shape();
    OpSeries out(sh, DiffOp::zero(A));
    if (A->is_polynomial()) {
        // Taylor expansion: Phi_D(f) = f(x + h) = sum_b d^[b](f) h^b with h = Phi_D(x) - x,
        // so D_a = sum_b [s^a](h^b) d^[b]; only |b| <= |a| contributes since ord(h) >= 1.
        std::size_t nv = A->nvars();
        std::vector<ElemSeries> h;
        for (std::size_t j = 0; j < nv; ++j)
            h.push_back(d.images()[j] - ElemSeries::constant(sh, Elem::variable(A, j), Elem(A)));
        std::map<MultiIndex, DiffOp::DPTerms> coeffs;
        std::map<MultiIndex, ElemSeries> hp;
        for (int deg = 0; deg <= sh->height(); ++deg)
            for (const auto& b : exponents_of_degree(nv, deg)) {
                ElemSeries hb = one_series(A, sh);
                if (deg > 0) {
                    std::size_t i = 0;
                    while (b[i] == 0)
                        ++i;
                    hb = hp.at(b - MultiIndex::unit(nv, i)) * h[i];
                }
                for (const auto& [a, c] : hb.coeffs())
                    coeffs[a].emplace(b, c);
                hp.emplace(b, std::move(hb));
            }
        for (auto& [a, t] : coeffs)
            out.set(a, DiffOp::from_dp_terms(A, std::move(t)));
        return out;
    }
    if (!A->is_finite_dim())
        throw DomainError("operator series need a polynomial or finite-dimensional algebra");
    const auto& basis = A->monomial_basis();
    std::size_t n = basis.size();
    std::vector<ElemSeries> cols;
    for (const auto& m : basis)
        cols.push_back(d.apply(Elem::monomial(A, m)));
    for (const auto& a : sh->elements()) {
        Mat m(n, Vec(n, Rat(0)));
        for (std::size_t j = 0; j < n; ++j) {
            Vec c = cols[j][a].coordinates();
            for (std::size_t i = 0; i < n; ++i)
                m[i][j] = c[i];
        }
        out.set(a, DiffOp::from_matrix(A, std::move(m)));
    }
    return out;
}

DElementReport is_D_element(const OpSeries& r, const HSDerivation& d, int degree_cap) {
    return is_D_element(r, d, [](const DiffOp& p, const Elem& a) { return p.apply(a); }, degree_cap);
}

ElemSeries pair(const OpSeries& r, const ElemSeries& e) {
    return pair(r, e, [](const DiffOp& p, const Elem& a) { return p.apply(a); });
}

GrElem::GrElem(AlgebraPtr A, Terms t) : alg_(std::move(A)) {
    for (auto& [b, c] : t)
        if (!c.is_zero())
            t_.emplace(b, c);
}

GrElem GrElem::one(const AlgebraPtr& A) { return gamma(A, MultiIndex(A->nvars()), Elem::constant(A, 1)); }

GrElem GrElem::gamma(const AlgebraPtr& A, const MultiIndex& b, const Elem& c) {
    Terms t;
    t.emplace(b, c);
    return GrElem(A, std::move(t));
}

Elem GrElem::coefficient(const MultiIndex& b) const {
    auto it = t_.find(b);
    return it == t_.end() ? Elem(alg_) : it->second;
}

GrElem GrElem::operator+(const GrElem& o) const {
    GrElem r = *this;
    if (!r.alg_)
        r.alg_ = o.alg_;
    for (const auto& [b, c] : o.t_)
        add_into(r.t_, b, c);
    return r;
}

GrElem GrElem::operator-() const {
    GrElem r(alg_);
    for (const auto& [b, c] : t_)
        r.t_.emplace(b, -c);
    return r;
}

GrElem GrElem::operator-(const GrElem& o) const { return *this + (-o); }

GrElem GrElem::operator*(const GrElem& o) const {
    GrElem r(alg_ ? alg_ : o.alg_);
    for (const auto& [b, c] : t_)
        for (const auto& [e, c2] : o.t_)
            add_into(r.t_, b + e, (c * c2).scaled(Rat(multi_binomial(b + e, b))));
    return r;
}

GrElem GrElem::scaled(const Elem& a) const {
    GrElem r(alg_);
    for (const auto& [b, c] : t_)
        add_into(r.t_, b, a * c);
    return r;
}

std::string GrElem::to_string() const { return format_terms(t_, "gamma"); }

GrElem symbol(const DiffOp& p, int d) {
    if (p.kind() != DiffOp::Kind::DividedPower)
        throw DomainError("symbols are computed in the divided-power basis of a polynomial algebra");
    if (p.order() > d)
        throw DomainError("operator of order " + std::to_string(p.order()) + " has no symbol in degree " +
                          std::to_string(d));
    GrElem::Terms t;
    for (const auto& [b, c] : p.dp_terms())
        if (b.degree() == d)
            t.emplace(b, c);
    return GrElem(p.algebra(), std::move(t));
}

GrSeries total_symbol(const OpSeries& r) {
    const AlgebraPtr& A = r.zero().algebra();
    GrSeries out(r.shape(), GrElem(A));
    for (const auto& [a, p] : r.coeffs()) {
        if (p.order() > a.degree())
            throw DomainError("series is not filtered: coefficient at " + a.to_string() + " has order " +
                              std::to_string(p.order()));
        out.set(a, symbol(p, a.degree()));
    }
    return out;
}

} // namespace hs
