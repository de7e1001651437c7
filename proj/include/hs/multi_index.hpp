#pragma once

#include <cstddef>
#include <initializer_list>
#include <string>
#include <vector>

namespace hs {

// Element of N^p. Used both for series indices and for monomial exponents.
class MultiIndex {
public:
    MultiIndex() = default;
    explicit MultiIndex(std::size_t n) : e_(n, 0) {}
    MultiIndex(std::initializer_list<int> l) : e_(l) {}
    explicit MultiIndex(std::vector<int> v) : e_(std::move(v)) {}

    static MultiIndex unit(std::size_t n, std::size_t i) {
        MultiIndex m(n);
        m.e_[i] = 1;
        return m;
    }

    std::size_t size() const { return e_.size(); }
    int operator[](std::size_t i) const { return e_[i]; }
    int& operator[](std::size_t i) { return e_[i]; }
    const std::vector<int>& entries() const { return e_; }

    int degree() const {
        int d = 0;
        for (int x : e_)
            d += x;
        return d;
    }
    bool is_zero() const {
        for (int x : e_)
            if (x != 0)
                return false;
        return true;
    }
    // Componentwise order.
    bool leq(const MultiIndex& o) const {
        for (std::size_t i = 0; i < e_.size(); ++i)
            if (e_[i] > o.e_[i])
                return false;
        return true;
    }

    MultiIndex operator+(const MultiIndex& o) const {
        MultiIndex r(*this);
        for (std::size_t i = 0; i < e_.size(); ++i)
            r.e_[i] += o.e_[i];
        return r;
    }
    MultiIndex operator-(const MultiIndex& o) const {
        MultiIndex r(*this);
        for (std::size_t i = 0; i < e_.size(); ++i)
            r.e_[i] -= o.e_[i];
        return r;
    }
    MultiIndex concat(const MultiIndex& o) const {
        MultiIndex r(*this);
        r.e_.insert(r.e_.end(), o.e_.begin(), o.e_.end());
        return r;
    }
    MultiIndex slice(std::size_t from, std::size_t len) const {
        return MultiIndex(std::vector<int>(e_.begin() + from, e_.begin() + from + len));
    }

    std::string to_string() const {
        std::string s = "(";
        for (std::size_t i = 0; i < e_.size(); ++i) {
            if (i)
                s += ",";
            s += std::to_string(e_[i]);
        }
        return s + ")";
    }

    friend bool operator==(const MultiIndex& a, const MultiIndex& b) { return a.e_ == b.e_; }
    friend bool operator!=(const MultiIndex& a, const MultiIndex& b) { return a.e_ != b.e_; }

    // Total degree first, then lexicographically descending: (1,0) comes before (0,1).
    friend bool operator<(const MultiIndex& a, const MultiIndex& b) {
        int da = a.degree(), db = b.degree();
        if (da != db)
            return da < db;
        return a.e_ > b.e_;
    }

private:
    std::vector<int> e_;
};

// Graded reverse lexicographic order, largest first.
struct GrevlexGreater {
    bool operator()(const MultiIndex& a, const MultiIndex& b) const {
        int da = a.degree(), db = b.degree();
        if (da != db)
            return da > db;
        for (std::size_t i = a.size(); i-- > 0;)
            if (a[i] != b[i])
                return a[i] < b[i];
        return false;
    }
};

// All exponent vectors of length n and total degree exactly d, lexicographically descending.
inline std::vector<MultiIndex> exponents_of_degree(std::size_t n, int d) {
    std::vector<MultiIndex> out;
    if (n == 0) {
        if (d == 0)
            out.emplace_back();
        return out;
    }
    MultiIndex cur(n);
    auto rec = [&](auto&& self, std::size_t i, int left) -> void {
        if (i + 1 == n) {
            cur[i] = left;
            out.push_back(cur);
            return;
        }
        for (int v = left; v >= 0; --v) {
            cur[i] = v;
            self(self, i + 1, left - v);
        }
    };
    rec(rec, 0, d);
    return out;
}

} // namespace hs
