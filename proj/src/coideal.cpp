#include "hs/coideal.hpp"

#include "hs/error.hpp"

#include <algorithm>

namespace hs {

CoIdeal CoIdeal::nbeta(const MultiIndex& beta) {
    std::size_t p = beta.size();
    std::vector<MultiIndex> out;
    MultiIndex cur(p);
    auto rec = [&](auto&& self, std::size_t i) -> void {
        if (i == p) {
            out.push_back(cur);
            return;
        }
        for (int v = 0; v <= beta[i]; ++v) {
            cur[i] = v;
            self(self, i + 1);
        }
    };
    rec(rec, 0);
    std::sort(out.begin(), out.end());
    return CoIdeal(static_cast<int>(p), std::move(out));
}

CoIdeal CoIdeal::tm(int p, int m) {
    if (p < 0 || m < 0)
        throw DomainError("t_m needs non-negative arity and degree");
    std::vector<MultiIndex> out;
    for (int d = 0; d <= m; ++d)
        for (auto& a : exponents_of_degree(p, d))
            out.push_back(a);
    if (p == 0)
        out.assign(1, MultiIndex());
    return CoIdeal(p, std::move(out));
}

CoIdeal CoIdeal::product(const CoIdeal& a, const CoIdeal& b) {
    std::vector<MultiIndex> out;
    for (const auto& x : a.elems_)
        for (const auto& y : b.elems_)
            out.push_back(x.concat(y));
    std::sort(out.begin(), out.end());
    return CoIdeal(a.p_ + b.p_, std::move(out));
}

CoIdeal CoIdeal::from_elements(int p, std::vector<MultiIndex> elems) {
    for (const auto& e : elems) {
        if (static_cast<int>(e.size()) != p)
            throw DomainError("co-ideal element " + e.to_string() + " has wrong arity");
        for (int x : e.entries())
            if (x < 0)
                throw DomainError("co-ideal element " + e.to_string() + " has a negative entry");
    }
    std::sort(elems.begin(), elems.end());
    elems.erase(std::unique(elems.begin(), elems.end()), elems.end());
    if (elems.empty())
        throw DomainError("co-ideal must be non-empty");
    CoIdeal c(p, std::move(elems));
    for (const auto& e : c.elems_)
        for (int i = 0; i < p; ++i)
            if (e[i] > 0) {
                MultiIndex d = e;
                d[i] -= 1;
                if (!c.contains(d))
                    throw DomainError("set is not downward closed: " + e.to_string() + " present but " +
                                      d.to_string() + " missing");
            }
    return c;
}

bool CoIdeal::contains(const MultiIndex& a) const {
    if (static_cast<int>(a.size()) != p_)
        return false;
    return std::binary_search(elems_.begin(), elems_.end(), a);
}

std::optional<std::size_t> CoIdeal::index_of(const MultiIndex& a) const {
    auto it = std::lower_bound(elems_.begin(), elems_.end(), a);
    if (it == elems_.end() || *it != a)
        return std::nullopt;
    return static_cast<std::size_t>(it - elems_.begin());
}

int CoIdeal::height() const { return elems_.back().degree(); }

std::vector<MultiIndex> CoIdeal::maximal_elements() const {
    std::vector<MultiIndex> out;
    for (const auto& e : elems_) {
        bool maximal = true;
        for (int i = 0; i < p_ && maximal; ++i)
            if (contains(e + MultiIndex::unit(p_, i)))
                maximal = false;
        if (maximal)
            out.push_back(e);
    }
    return out;
}

std::vector<MultiIndex> CoIdeal::complement_min_gens() const {
    std::vector<MultiIndex> out;
    for (const auto& e : elems_)
        for (int i = 0; i < p_; ++i) {
            MultiIndex c = e + MultiIndex::unit(p_, i);
            if (contains(c))
                continue;
            bool minimal = true;
            for (int j = 0; j < p_ && minimal; ++j)
                if (c[j] > 0 && !contains(c - MultiIndex::unit(p_, j)))
                    minimal = false;
            if (minimal)
                out.push_back(c);
        }
    std::sort(out.begin(), out.end());
    out.erase(std::unique(out.begin(), out.end()), out.end());
    return out;
}

CoIdeal CoIdeal::intersect(const CoIdeal& o) const {
    if (p_ != o.p_)
        throw DomainError("co-ideal arity mismatch");
    std::vector<MultiIndex> out;
    for (const auto& e : elems_)
        if (o.contains(e))
            out.push_back(e);
    return CoIdeal(p_, std::move(out));
}

bool CoIdeal::subset_of(const CoIdeal& o) const {
    if (p_ != o.p_)
        return false;
    return std::all_of(elems_.begin(), elems_.end(), [&](const MultiIndex& e) { return o.contains(e); });
}

} // namespace hs
