#include "knotopt/cone_projection.hpp"

#include <cmath>
#include <stdexcept>

namespace knotopt {

namespace {

struct Pool {
    std::size_t begin;
    std::size_t end;
    double sum;
    double mean() const { return sum / static_cast<double>(end - begin); }
};

}  // namespace

ConeProjection project_with_blocks(std::span<const double> v)
{
    for (double x : v)
        if (!std::isfinite(x)) throw std::invalid_argument("project: non-finite input");

    std::vector<Pool> stack;
    stack.reserve(v.size());
    for (std::size_t i = 0; i < v.size(); ++i) {
        stack.push_back({i, i + 1, v[i]});
        // Merge only strict violations: equal neighbours stay separate, so an
        // input already in the cone comes back bit-for-bit.
        while (stack.size() > 1 && stack[stack.size() - 2].mean() > stack.back().mean()) {
            Pool top = stack.back();
            stack.pop_back();
            stack.back().end = top.end;
            stack.back().sum += top.sum;
        }
    }

    ConeProjection out;
    out.output.resize(v.size());
    for (const Pool& p : stack) {
        const double value = std::max(0.0, p.mean());
        if (value == 0.0 && !out.blocks.empty() && out.blocks.back().value == 0.0)
            out.blocks.back().end = p.end;
        else
            out.blocks.push_back({p.begin, p.end, value});
    }
    for (const PooledBlock& blk : out.blocks)
        for (std::size_t i = blk.begin; i < blk.end; ++i) out.output[i] = blk.value;
    return out;
}

std::vector<double> project(std::span<const double> v) { return project_with_blocks(v).output; }

bool in_monotone_cone(std::span<const double> y) noexcept
{
    double prev = 0.0;
    for (double x : y) {
        if (!(x >= prev)) return false;
        prev = x;
    }
    return true;
}

}  // namespace knotopt
