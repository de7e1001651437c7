#include "hs/linalg.hpp"

#include "hs/error.hpp"

namespace hs {

bool is_zero(const Vec& v) {
    for (const auto& x : v)
        if (x != 0)
            return false;
    return true;
}

AffineSolution solve_affine(const BaseRing& k, const Mat& m, const Vec& b, std::size_t ncols) {
    if (!k.is_field())
        throw DomainError("linear solving needs a field base ring, got " + k.name());
    std::size_t nrows = m.size();
    // Augmented system [M | b | I] so that row operations record the certificate.
    std::size_t width = ncols + 1 + nrows;
    Mat r(nrows, Vec(width, Rat(0)));
    for (std::size_t i = 0; i < nrows; ++i) {
        for (std::size_t j = 0; j < ncols; ++j)
            r[i][j] = k.normalize(m[i][j]);
        r[i][ncols] = k.normalize(b[i]);
        r[i][ncols + 1 + i] = 1;
    }
    std::vector<std::size_t> pivot_cols;
    std::size_t row = 0;
    for (std::size_t col = 0; col < ncols && row < nrows; ++col) {
        std::size_t piv = row;
        while (piv < nrows && r[piv][col] == 0)
            ++piv;
        if (piv == nrows)
            continue;
        std::swap(r[piv], r[row]);
        Rat inv = k.inverse(r[row][col]);
        for (auto& x : r[row])
            x = k.mul(x, inv);
        for (std::size_t i = 0; i < nrows; ++i) {
            if (i == row || r[i][col] == 0)
                continue;
            Rat f = r[i][col];
            for (std::size_t j = 0; j < width; ++j)
                if (r[row][j] != 0)
                    r[i][j] = k.sub(r[i][j], k.mul(f, r[row][j]));
        }
        pivot_cols.push_back(col);
        ++row;
    }
    AffineSolution sol;
    for (std::size_t i = row; i < nrows; ++i)
        if (r[i][ncols] != 0) {
            sol.certificate.assign(r[i].begin() + std::ptrdiff_t(ncols + 1), r[i].end());
            return sol;
        }
    sol.solvable = true;
    sol.particular.assign(ncols, Rat(0));
    for (std::size_t i = 0; i < pivot_cols.size(); ++i)
        sol.particular[pivot_cols[i]] = r[i][ncols];
    std::vector<bool> is_pivot(ncols, false);
    for (auto c : pivot_cols)
        is_pivot[c] = true;
    for (std::size_t f = 0; f < ncols; ++f) {
        if (is_pivot[f])
            continue;
        Vec v(ncols, Rat(0));
        v[f] = 1;
        for (std::size_t i = 0; i < pivot_cols.size(); ++i)
            v[pivot_cols[i]] = k.neg(r[i][f]);
        sol.kernel.push_back(v);
    }
    return sol;
}

std::size_t rank(const BaseRing& k, Mat m) {
    std::size_t ncols = m.empty() ? 0 : m[0].size();
    SpanBasis s(k, ncols);
    for (auto& row : m)
        s.add(row);
    return s.dimension();
}

Mat mat_mul(const BaseRing& k, const Mat& a, const Mat& b) {
    std::size_t n = a.size(), inner = b.size(), w = b.empty() ? 0 : b[0].size();
    Mat out(n, Vec(w, Rat(0)));
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t l = 0; l < inner; ++l) {
            if (a[i][l] == 0)
                continue;
            for (std::size_t j = 0; j < w; ++j)
                if (b[l][j] != 0)
                    out[i][j] += a[i][l] * b[l][j];
        }
    for (auto& row : out)
        for (auto& x : row)
            x = k.normalize(x);
    return out;
}

Vec mat_vec(const BaseRing& k, const Mat& a, const Vec& v) {
    Vec out(a.size(), Rat(0));
    for (std::size_t i = 0; i < a.size(); ++i) {
        Rat acc = 0;
        for (std::size_t j = 0; j < v.size(); ++j)
            acc += a[i][j] * v[j];
        out[i] = k.normalize(acc);
    }
    return out;
}

Mat identity_matrix(const BaseRing& k, std::size_t n) {
    Mat m(n, Vec(n, Rat(0)));
    for (std::size_t i = 0; i < n; ++i)
        m[i][i] = k.normalize(1);
    return m;
}

Vec SpanBasis::reduce(Vec v) const {
    for (std::size_t i = 0; i < rows_.size(); ++i) {
        Rat f = v[pivots_[i]];
        if (f == 0)
            continue;
        for (std::size_t j = 0; j < n_; ++j)
            if (rows_[i][j] != 0)
                v[j] = k_.sub(v[j], k_.mul(f, rows_[i][j]));
    }
    return v;
}

bool SpanBasis::add(Vec v) {
    if (!k_.is_field())
        throw DomainError("span computations need a field base ring, got " + k_.name());
    for (auto& x : v)
        x = k_.normalize(x);
    v = reduce(std::move(v));
    std::size_t p = 0;
    while (p < n_ && v[p] == 0)
        ++p;
    if (p == n_)
        return false;
    Rat inv = k_.inverse(v[p]);
    for (auto& x : v)
        x = k_.mul(x, inv);
    // Keep the basis fully reduced so that reduce() is a single pass.
    for (auto& row : rows_) {
        Rat f = row[p];
        if (f == 0)
            continue;
        for (std::size_t j = 0; j < n_; ++j)
            if (v[j] != 0)
                row[j] = k_.sub(row[j], k_.mul(f, v[j]));
    }
    rows_.push_back(std::move(v));
    pivots_.push_back(p);
    return true;
}

bool SpanBasis::contains(Vec v) const {
    for (auto& x : v)
        x = k_.normalize(x);
    return is_zero(reduce(std::move(v)));
}

} // namespace hs
