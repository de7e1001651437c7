#pragma once

#include "hs/multi_index.hpp"

#include <memory>
#include <optional>
#include <vector>

namespace hs {

// Finite non-empty downward-closed subset of N^p.
class CoIdeal {
public:
    static CoIdeal nbeta(const MultiIndex& beta);
    static CoIdeal tm(int p, int m);
    static CoIdeal product(const CoIdeal& a, const CoIdeal& b);
    // Checks non-emptiness and downward closure.
    static CoIdeal from_elements(int p, std::vector<MultiIndex> elems);

    int arity() const { return p_; }
    std::size_t size() const { return elems_.size(); }
    // Sorted by total degree, then lexicographically descending.
    const std::vector<MultiIndex>& elements() const { return elems_; }
    bool contains(const MultiIndex& a) const;
    std::optional<std::size_t> index_of(const MultiIndex& a) const;
    int height() const;

    std::vector<MultiIndex> maximal_elements() const;
    // Minimal elements of the monomial ideal N^p minus this set.
    std::vector<MultiIndex> complement_min_gens() const;
    CoIdeal intersect(const CoIdeal& o) const;
    bool subset_of(const CoIdeal& o) const;

    friend bool operator==(const CoIdeal& a, const CoIdeal& b) { return a.p_ == b.p_ && a.elems_ == b.elems_; }
    friend bool operator!=(const CoIdeal& a, const CoIdeal& b) { return !(a == b); }

private:
    CoIdeal(int p, std::vector<MultiIndex> e) : p_(p), elems_(std::move(e)) {}
    int p_;
    std::vector<MultiIndex> elems_;
};

using Shape = std::shared_ptr<const CoIdeal>;

inline Shape make_shape(CoIdeal c) { return std::make_shared<const CoIdeal>(std::move(c)); }
inline Shape shape_tm(int p, int m) { return make_shape(CoIdeal::tm(p, m)); }
inline Shape shape_nbeta(const MultiIndex& b) { return make_shape(CoIdeal::nbeta(b)); }
inline bool same_shape(const Shape& a, const Shape& b) { return a == b || *a == *b; }

} // namespace hs
