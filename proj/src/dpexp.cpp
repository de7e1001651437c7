#include "hs/dpexp.hpp"

namespace hs {

DPElement DPElement::one(const AlgebraPtr& A, int rank, int trunc) {
    return gamma(A, trunc, MultiIndex(std::size_t(rank)), Elem::constant(A, 1));
}

DPElement DPElement::gamma(const AlgebraPtr& A, int trunc, const MultiIndex& b, const Elem& c) {
    if (b.degree() > trunc)
        throw DomainError("divided power of degree " + std::to_string(b.degree()) + " exceeds the truncation " +
                          std::to_string(trunc));
    DPElement e(A, int(b.size()), trunc);
    e.add(b, c);
    return e;
}

Elem DPElement::coefficient(const MultiIndex& b) const {
    auto it = t_.find(b);
    return it == t_.end() ? Elem(alg_) : it->second;
}

DPElement DPElement::component(int d) const {
    DPElement e(alg_, rank_, trunc_);
    for (const auto& [b, c] : t_)
        if (b.degree() == d)
            e.t_.emplace(b, c);
    return e;
}

void DPElement::add(const MultiIndex& b, const Elem& c) {
    if (c.is_zero())
        return;
    auto it = t_.find(b);
    if (it == t_.end()) {
        t_.emplace(b, c);
        return;
    }
    it->second += c;
    if (it->second.is_zero())
        t_.erase(it);
}

DPElement DPElement::operator+(const DPElement& o) const {
    DPElement r = alg_ ? *this : DPElement(o.alg_, o.rank_, o.trunc_);
    if (!alg_)
        r.t_ = t_;
    for (const auto& [b, c] : o.t_)
        r.add(b, c);
    return r;
}

DPElement DPElement::operator-() const {
    DPElement r(alg_, rank_, trunc_);
    for (const auto& [b, c] : t_)
        r.t_.emplace(b, -c);
    return r;
}

DPElement DPElement::operator-(const DPElement& o) const { return *this + (-o); }

DPElement DPElement::operator*(const DPElement& o) const {
    DPElement r(alg_ ? alg_ : o.alg_, alg_ ? rank_ : o.rank_, alg_ ? trunc_ : o.trunc_);
    for (const auto& [b, c] : t_)
        for (const auto& [e, c2] : o.t_) {
            MultiIndex g = b + e;
            Elem v = (c * c2).scaled(Rat(multi_binomial(g, b)));
            if (v.is_zero())
                continue;
            if (g.degree() > r.trunc_)
                throw DomainError("product has degree " + std::to_string(g.degree()) + " beyond the truncation " +
                                  std::to_string(r.trunc_));
            r.add(g, v);
        }
    return r;
}

DPElement DPElement::scaled(const Elem& a) const {
    DPElement r(alg_, rank_, trunc_);
    for (const auto& [b, c] : t_)
        r.add(b, a * c);
    return r;
}

std::string DPElement::to_string() const {
    if (t_.empty())
        return "0";
    std::string out;
    for (auto it = t_.rbegin(); it != t_.rend(); ++it) {
        const auto& [b, c] = *it;
        std::string g = "gamma[";
        for (std::size_t i = 0; i < b.size(); ++i)
            g += (i ? "," : "") + std::to_string(b[i]);
        g += "]";
        std::string coef = c.to_string();
        std::string piece = b.is_zero() ? coef : coef == "1" ? g : c.terms().size() == 1 ? coef + "*" + g : "(" + coef + ")*" + g;
        if (out.empty())
            out = piece;
        else if (piece[0] == '-')
            out += " - " + piece.substr(1);
        else
            out += " + " + piece;
    }
    return out;
}

DPSeries gamma_map(const std::vector<Elem>& x, int m) {
    if (x.empty())
        throw DomainError("gamma map needs a module of positive rank");
    const AlgebraPtr& A = x.front().algebra();
    int rank = int(x.size());
    Shape sh = shape_tm(1, m);
    DPSeries out(sh, DPElement(A, rank, m));
    for (int i = 0; i <= m; ++i) {
        DPElement gi(A, rank, m);
        // gamma_i(sum_j x_j e_j) = sum_{|b|=i} prod_j x_j^{b_j} gamma_b.
        for (const auto& b : exponents_of_degree(std::size_t(rank), i)) {
            Elem c = Elem::constant(A, 1);
            for (int j = 0; j < rank; ++j)
                c = c * x[j].pow(unsigned(b[j]));
            gi = gi + DPElement::gamma(A, m, b, c);
        }
        out.set(MultiIndex{i}, gi);
    }
    return out;
}

std::vector<GammaProduct> gamma_table(int rank, int max_degree) {
    std::vector<GammaProduct> out;
    for (int d1 = 1; d1 < max_degree; ++d1)
        for (const auto& b : exponents_of_degree(std::size_t(rank), d1))
            for (int d2 = 1; d1 + d2 <= max_degree; ++d2)
                for (const auto& e : exponents_of_degree(std::size_t(rank), d2))
                    out.push_back({b, e, b + e, multi_binomial(b + e, b)});
    return out;
}

GrSeries chi_of(const HSDerivation& d) {
    if (d.shape()->arity() != 1)
        throw DomainError("chi needs a univariate HS-derivation");
    return total_symbol(operator_series(d));
}

ChiResult vartheta_eval(const Derivation& delta, int m, const IntegrateOptions& opts) {
    if (!delta.algebra()->is_polynomial())
        throw DomainError("symbols of integrals are computed for polynomial algebras");
    ChiResult out{integrate(delta, m, opts), GrSeries()};
    if (out.integration.status != IntegralResult::Status::Integrable)
        throw DomainError("derivation is not " + std::to_string(m) + "-integrable: " + out.integration.detail);
    out.chi = chi_of(*out.integration.integral);
    return out;
}

} // namespace hs
