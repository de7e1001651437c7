#pragma once

#include "hs/algebra.hpp"
#include "hs/series.hpp"

#include <string>
#include <string_view>

namespace hs {

using ElemSeries = Series<Elem>;

ElemSeries zero_series(const AlgebraPtr& A, const Shape& shape);
ElemSeries one_series(const AlgebraPtr& A, const Shape& shape);

// Name of the i-th series variable: `t1`, `t2`, ...; a lone variable may also be written `t`.
std::string series_var(std::string_view prefix, std::size_t i);

// Reads an expression in the algebra variables and the series variables, truncated to the shape.
ElemSeries parse_series(const AlgebraPtr& A, const Shape& shape, std::string_view text, std::string_view prefix);
std::string format_series(const ElemSeries& r, std::string_view prefix);

} // namespace hs
