#pragma once

#include "hs/coideal.hpp"
#include "hs/error.hpp"

#include <map>
#include <optional>
#include <vector>

namespace hs {

// Truncated series sum_{a in shape} c_a s^a. Coefficients are stored sparsely; a missing
// key is the zero coefficient. C needs is_zero(), ==, +, - and, for products, *.
template <class C>
class Series {
public:
    using Map = std::map<MultiIndex, C>;

    Series() = default;
    Series(Shape shape, C zero) : shape_(std::move(shape)), zero_(std::move(zero)) {}

    static Series constant(Shape shape, const C& c, C zero) {
        Series s(std::move(shape), std::move(zero));
        s.set(MultiIndex(s.shape_->arity()), c);
        return s;
    }
    static Series monomial(Shape shape, const MultiIndex& a, const C& c, C zero) {
        Series s(std::move(shape), std::move(zero));
        if (s.shape_->contains(a))
            s.set(a, c);
        return s;
    }

    const Shape& shape() const { return shape_; }
    int arity() const { return shape_->arity(); }
    const C& zero() const { return zero_; }
    const Map& coeffs() const { return c_; }

    const C& operator[](const MultiIndex& a) const {
        auto it = c_.find(a);
        return it == c_.end() ? zero_ : it->second;
    }
    void set(const MultiIndex& a, C v) {
        if (!shape_->contains(a))
            throw DomainError("index " + a.to_string() + " outside the series shape");
        if (v.is_zero())
            c_.erase(a);
        else
            c_[a] = std::move(v);
    }
    void add_to(const MultiIndex& a, const C& v) {
        if (v.is_zero())
            return;
        auto it = c_.find(a);
        if (it == c_.end()) {
            set(a, v);
            return;
        }
        it->second = it->second + v;
        if (it->second.is_zero())
            c_.erase(it);
    }

    bool is_zero() const { return c_.empty(); }
    // Minimal |a| over the support; nullopt encodes the infinite order of 0.
    std::optional<int> order() const {
        if (c_.empty())
            return std::nullopt;
        return c_.begin()->first.degree();
    }
    std::vector<MultiIndex> support() const {
        std::vector<MultiIndex> s;
        for (const auto& kv : c_)
            s.push_back(kv.first);
        return s;
    }

    friend bool operator==(const Series& a, const Series& b) {
        return same_shape(a.shape_, b.shape_) && a.c_ == b.c_;
    }
    friend bool operator!=(const Series& a, const Series& b) { return !(a == b); }

private:
    Shape shape_;
    C zero_;
    Map c_;
};

template <class C>
void require_same_shape(const Series<C>& a, const Series<C>& b) {
    if (!same_shape(a.shape(), b.shape()))
        throw DomainError("series shapes differ");
}

template <class C>
Series<C> operator+(const Series<C>& a, const Series<C>& b) {
    require_same_shape(a, b);
    Series<C> r = a;
    for (const auto& [k, v] : b.coeffs())
        r.add_to(k, v);
    return r;
}

template <class C>
Series<C> operator-(const Series<C>& a) {
    Series<C> r(a.shape(), a.zero());
    for (const auto& [k, v] : a.coeffs())
        r.set(k, -v);
    return r;
}

template <class C>
Series<C> operator-(const Series<C>& a, const Series<C>& b) {
    return a + (-b);
}

// Cauchy product restricted to the shape; for operators r_b * r'_c means r_b after r'_c.
template <class C>
Series<C> operator*(const Series<C>& a, const Series<C>& b) {
    require_same_shape(a, b);
    const CoIdeal& sh = *a.shape();
    Series<C> r(a.shape(), a.zero());
    for (const auto& [i, x] : a.coeffs())
        for (const auto& [j, y] : b.coeffs()) {
            MultiIndex k = i + j;
            if (sh.contains(k))
                r.add_to(k, x * y);
        }
    return r;
}

template <class C, class F>
auto map_coeffs(const Series<C>& a, F f, decltype(f(a.zero())) zero) {
    Series<decltype(f(a.zero()))> r(a.shape(), std::move(zero));
    for (const auto& [k, v] : a.coeffs())
        r.set(k, f(v));
    return r;
}

// Inverse of a unit series whose constant coefficient equals one.
template <class C>
Series<C> invert(const Series<C>& r, const C& one) {
    MultiIndex z(r.arity());
    if (!(r[z] == one))
        throw DomainError("series is not a unit with constant term 1");
    Series<C> inv(r.shape(), r.zero());
    inv.set(z, one);
    for (const auto& a : r.shape()->elements()) {
        if (a.is_zero())
            continue;
        C acc = r.zero();
        bool any = false;
        for (const auto& [b, rb] : r.coeffs()) {
            if (b.is_zero() || !b.leq(a))
                continue;
            const C& q = inv[a - b];
            if (q.is_zero())
                continue;
            acc = acc + rb * q;
            any = true;
        }
        if (any)
            inv.set(a, -acc);
    }
    return inv;
}

// Restriction of coefficients to a smaller shape.
template <class C>
Series<C> truncate(const Series<C>& r, const Shape& smaller) {
    if (!smaller->subset_of(*r.shape()))
        throw DomainError("truncation target is not contained in the series shape");
    Series<C> out(smaller, r.zero());
    for (const auto& [k, v] : r.coeffs())
        if (smaller->contains(k))
            out.set(k, v);
    return out;
}

// External product over the product shape: (r [x] q)_(a,b) = r_a q_b.
template <class C>
Series<C> boxtimes(const Series<C>& r, const Series<C>& q) {
    Shape sh = make_shape(CoIdeal::product(*r.shape(), *q.shape()));
    Series<C> out(sh, r.zero());
    for (const auto& [a, x] : r.coeffs())
        for (const auto& [b, y] : q.coeffs())
            out.add_to(a.concat(b), x * y);
    return out;
}

// Pairing of an operator series with an element series: (<r,e>)_a = sum_{b+c=a} r_b(e_c).
template <class Op, class E, class Apply>
Series<E> pair(const Series<Op>& r, const Series<E>& e, Apply apply) {
    if (!same_shape(r.shape(), e.shape()))
        throw DomainError("series shapes differ");
    const CoIdeal& sh = *r.shape();
    Series<E> out(e.shape(), e.zero());
    for (const auto& [b, op] : r.coeffs())
        for (const auto& [c, x] : e.coeffs()) {
            MultiIndex a = b + c;
            if (sh.contains(a))
                out.add_to(a, apply(op, x));
        }
    return out;
}

} // namespace hs
