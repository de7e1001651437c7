#include "hs/series_text.hpp"

#include "hs/parse.hpp"

namespace hs {

ElemSeries zero_series(const AlgebraPtr& A, const Shape& shape) { return ElemSeries(shape, Elem(A)); }

ElemSeries one_series(const AlgebraPtr& A, const Shape& shape) {
    return ElemSeries::constant(shape, Elem::constant(A, 1), Elem(A));
}

std::string series_var(std::string_view prefix, std::size_t i) { return std::string(prefix) + std::to_string(i + 1); }

namespace {

struct SeriesContext {
    using Value = ElemSeries;
    const AlgebraPtr& A;
    const Shape& shape;
    std::string_view prefix;

    Value constant(const Elem& e) { return ElemSeries::constant(shape, e, Elem(A)); }
    Value number(const Int& n) { return constant(Elem::constant(A, Rat(n))); }
    Value atom(const std::string& name, const std::vector<int>* bracket) {
        if (bracket)
            throw ParseError("unexpected indexed symbol '" + name + "'");
        if (auto i = A->var_index(name))
            return constant(Elem::variable(A, *i));
        int p = shape->arity();
        for (int i = 0; i < p; ++i)
            if (name == series_var(prefix, i) || (p == 1 && name == prefix))
                return ElemSeries::monomial(shape, MultiIndex::unit(p, i), Elem::constant(A, 1), Elem(A));
        throw ParseError("unknown variable '" + name + "'");
    }
    Value add(const Value& a, const Value& b) { return a + b; }
    Value sub(const Value& a, const Value& b) { return a - b; }
    Value mul(const Value& a, const Value& b) { return a * b; }
    Value neg(const Value& a) { return -a; }
    Value pow(const Value& a, unsigned e) {
        Value r = number(1);
        for (unsigned i = 0; i < e; ++i)
            r = r * a;
        return r;
    }
    Value div(const Value& a, const Int& d) {
        Rat inv = A->base().inverse(Rat(d));
        return map_coeffs(a, [&](const Elem& c) { return c.scaled(inv); }, Elem(A));
    }
};

std::string monomial_text(const MultiIndex& a, std::string_view prefix) {
    std::string s;
    for (std::size_t i = 0; i < a.size(); ++i) {
        if (a[i] == 0)
            continue;
        if (!s.empty())
            s += "*";
        s += a.size() == 1 ? std::string(prefix) : series_var(prefix, i);
        if (a[i] > 1)
            s += "^" + std::to_string(a[i]);
    }
    return s;
}

} // namespace

ElemSeries parse_series(const AlgebraPtr& A, const Shape& shape, std::string_view text, std::string_view prefix) {
    SeriesContext ctx{A, shape, prefix};
    return read_expression(text, ctx);
}

std::string format_series(const ElemSeries& r, std::string_view prefix) {
    if (r.is_zero())
        return "0";
    std::string out;
    for (const auto& [a, c] : r.coeffs()) {
        std::string coef = c.to_string();
        std::string piece;
        if (a.is_zero())
            piece = coef;
        else if (coef == "1")
            piece = monomial_text(a, prefix);
        else if (coef == "-1")
            piece = "-" + monomial_text(a, prefix);
        else if (c.terms().size() == 1)
            piece = coef + "*" + monomial_text(a, prefix);
        else
            piece = "(" + coef + ")*" + monomial_text(a, prefix);
        if (out.empty())
            out = piece;
        else if (piece[0] == '-')
            out += " - " + piece.substr(1);
        else
            out += " + " + piece;
    }
    return out;
}

} // namespace hs
