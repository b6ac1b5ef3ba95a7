#pragma once

#include "knotopt/curve.hpp"

#include <span>
#include <vector>

namespace knotopt {

// Per-segment kernels.  Each segment is independent, so the OpenMP versions
// write into disjoint slots and any reduction happens afterwards in index
// order; results are bitwise identical to the serial reference.

/// Signed gap (integral minus trapezoid) of each segment [p_i, p_{i+1}].
std::vector<double> segment_gaps_serial(const Curve& curve, std::span<const double> points);
std::vector<double> segment_gaps_parallel(const Curve& curve, std::span<const double> points);

/// Segment count at which segment_gaps() switches to the OpenMP kernel.
inline constexpr std::size_t kParallelSegmentThreshold = 256;

/// Dispatches to the parallel kernel for long knot vectors.
std::vector<double> segment_gaps_auto(const Curve& curve, std::span<const double> points);

/// Fixed left-to-right sums, shared by both paths.
double ordered_sum(std::span<const double> values);
double ordered_sum_of_squares(std::span<const double> values);

bool openmp_enabled() noexcept;
int openmp_max_threads() noexcept;

}  // namespace knotopt
