/// @file syzygy_oracle.hpp
/// @brief Graded dimensions of syzygy modules by linear algebra in each degree.
#pragma once

#include <cstdint>
#include <optional>
#include <utility>
#include <vector>

#include "adehk/field.hpp"
#include "adehk/groebner.hpp"
#include "adehk/poly.hpp"

namespace adehk {

/// dim Syz_m for m = 0..m_max, computed as sum_i dim R_{m-d_i} - rank of the
/// evaluation map into R_m, where R = k[vars] or k[vars]/(F).
/// Coefficients live in `field`; generators may involve i.
/// Throws std::invalid_argument on a non-homogeneous generator.
std::vector<std::int64_t> syzygy_graded_dimensions(const FieldFq& field, const std::optional<GaussPoly>& F,
                                                   const std::vector<GaussPoly>& gens, const WeightedOrder& order,
                                                   long m_max);

std::vector<std::int64_t> syzygy_graded_dimensions(const std::optional<PolyFp>& F, const std::vector<PolyFp>& gens,
                                                   const WeightedOrder& order, long m_max);

/// dim R_m for m = 0..m_max.
std::vector<std::int64_t> ring_graded_dimensions(const std::optional<GaussPoly>& F, const WeightedOrder& order,
                                                 long m_max);

/// Generator degrees (m <= n) of the free rank-two syzygy module of three
/// homogeneous polynomials in two variables. Throws InconsistencyError when the
/// quotient is infinite or the fitted numerator is not t^m + t^n.
std::pair<long, long> split_degrees_rank2(const std::vector<PolyFp>& gens, const WeightedOrder& order);

}  // namespace adehk
