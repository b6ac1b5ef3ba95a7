#include "knotopt/parallel.hpp"

#include <exception>
#include <mutex>

#ifdef _OPENMP
#include <omp.h>
#endif

namespace knotopt {

namespace {

double gap_of(const Curve& curve, double lo, double hi)
{
    if (!(lo < hi)) return 0.0;
    const double trapezoid = 0.5 * (hi - lo) * (curve.eval(lo) + curve.eval(hi));
    return integrate(curve, lo, hi) - trapezoid;
}

}  // namespace

std::vector<double> segment_gaps_serial(const Curve& curve, std::span<const double> points)
{
    if (points.size() < 2) return {};
    std::vector<double> gaps(points.size() - 1);
    for (std::size_t i = 0; i + 1 < points.size(); ++i) gaps[i] = gap_of(curve, points[i], points[i + 1]);
    return gaps;
}

std::vector<double> segment_gaps_parallel(const Curve& curve, std::span<const double> points)
{
    if (points.size() < 2) return {};
    const auto count = static_cast<long>(points.size() - 1);
    std::vector<double> gaps(static_cast<std::size_t>(count));
    std::exception_ptr failure;
    std::mutex failure_mutex;
#pragma omp parallel for schedule(static)
    for (long i = 0; i < count; ++i) {
        try {
            gaps[i] = gap_of(curve, points[i], points[i + 1]);
        } catch (...) {
            std::lock_guard lock(failure_mutex);
            if (!failure) failure = std::current_exception();
        }
    }
    if (failure) std::rethrow_exception(failure);
    return gaps;
}

std::vector<double> segment_gaps_auto(const Curve& curve, std::span<const double> points)
{
    if (points.size() > kParallelSegmentThreshold) return segment_gaps_parallel(curve, points);
    return segment_gaps_serial(curve, points);
}

double ordered_sum(std::span<const double> values)
{
    double total = 0.0;
    for (double v : values) total += v;
    return total;
}

double ordered_sum_of_squares(std::span<const double> values)
{
    double total = 0.0;
    for (double v : values) total += v * v;
    return total;
}

bool openmp_enabled() noexcept
{
#ifdef _OPENMP
    return true;
#else
    return false;
#endif
}

int openmp_max_threads() noexcept
{
#ifdef _OPENMP
    return omp_get_max_threads();
#else
    return 1;
#endif
}

}  // namespace knotopt
