#pragma once

#include <span>
#include <vector>

namespace knotopt {

/// Half-open index range [begin, end) sharing one projected value.
struct PooledBlock {
    std::size_t begin = 0;
    std::size_t end = 0;
    double value = 0.0;
};

struct ConeProjection {
    std::vector<double> output;       // lies in M^n = {0 <= y_1 <= ... <= y_n}
    std::vector<PooledBlock> blocks;  // cover 0..n in order
};

/// Euclidean projection onto the monotone nonnegative cone.
///
/// Pool-adjacent-violators (nondecreasing, unit weights, single left-to-right
/// stack pass) followed by clamping negative block means to zero.  O(n).
/// Throws std::invalid_argument on non-finite input.
ConeProjection project_with_blocks(std::span<const double> v);

std::vector<double> project(std::span<const double> v);

/// Exact membership test (no tolerance).
bool in_monotone_cone(std::span<const double> y) noexcept;

}  // namespace knotopt
