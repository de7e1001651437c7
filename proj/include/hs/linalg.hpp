#pragma once

#include "hs/base_ring.hpp"

#include <optional>
#include <vector>

namespace hs {

using Vec = std::vector<Rat>;
using Mat = std::vector<Vec>; // row-major

// Solution set of M u = b over a field: particular solution plus kernel basis, or a
// certificate y with y M = 0 and y b != 0 proving inconsistency.
struct AffineSolution {
    bool solvable = false;
    Vec particular;
    std::vector<Vec> kernel;
    Vec certificate;
};

AffineSolution solve_affine(const BaseRing& k, const Mat& m, const Vec& b, std::size_t ncols);
std::size_t rank(const BaseRing& k, Mat m);
Mat mat_mul(const BaseRing& k, const Mat& a, const Mat& b);
Vec mat_vec(const BaseRing& k, const Mat& a, const Vec& v);
Mat identity_matrix(const BaseRing& k, std::size_t n);
bool is_zero(const Vec& v);

// Incrementally maintained row-echelon basis of a subspace of k^n (field k).
class SpanBasis {
public:
    SpanBasis(const BaseRing& k, std::size_t n) : k_(k), n_(n) {}
    // Returns true when v was independent of the current span.
    bool add(Vec v);
    bool contains(Vec v) const;
    std::size_t dimension() const { return rows_.size(); }
    const std::vector<Vec>& rows() const { return rows_; }

private:
    Vec reduce(Vec v) const;
    BaseRing k_;
    std::size_t n_;
    std::vector<Vec> rows_;
    std::vector<std::size_t> pivots_;
};

} // namespace hs
