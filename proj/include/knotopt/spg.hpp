#pragma once

#include "knotopt/curve.hpp"
#include "knotopt/objective.hpp"
#include "knotopt/pl_approx.hpp"
#include "knotopt/quadrature.hpp"

#include <cstdint>
#include <functional>
#include <optional>
#include <random>
#include <span>
#include <string_view>
#include <vector>

namespace knotopt {

/// BB1 is the classic s's / s'z step; PaperLiteral uses z'z / s's.
enum class BbRule { BB1, PaperLiteral };
enum class Backtrack { SeededRandom, Halving };
enum class Termination { MaxIter, NoImprovement, Stationary };

std::string_view to_string(BbRule rule);
std::string_view to_string(Backtrack mode);
std::string_view to_string(Termination reason);

struct SpgConfig {
    double alpha_min = 1e-10;
    double alpha_max = 1e10;
    int history = 10;               // nonmonotone window: last history + 1 values
    double nu = 1e-4;               // sufficient decrease
    double epsilon = 1e-8;          // stop when ||d_k|| <= epsilon
    double improvement_tol = 1e-12; // relative change of Phi between accepted steps
    int improvement_window = 5;     // consecutive steps below improvement_tol
    int max_iter = 1000;
    std::uint64_t seed = 42;
    BbRule bb_rule = BbRule::BB1;
    Backtrack backtrack = Backtrack::SeededRandom;

    /// Throws std::invalid_argument on out-of-range settings.
    void validate() const;
};

struct SolveReport {
    KnotVector final_knots;
    double final_error = 0.0;    // error_concave or error_general, per kind
    double initial_error = 0.0;
    int iterations = 0;          // accepted steps
    Termination termination = Termination::MaxIter;
    std::vector<double> objective_trace;  // Phi at y_0 and after every accepted step
    std::vector<double> d_norm_trace;     // ||d_k|| for every computed direction
};

/// Details of one accepted step, for callers that audit the line search.
struct SpgStep {
    int iteration = 0;
    double alpha = 0.0;
    double trial_value = 0.0;   // Phi(y_k + alpha d_k)
    double bound = 0.0;         // f_b, max of the recent history
    double directional = 0.0;   // grad Phi(y_k)' d_k
    std::span<const double> y;  // accepted iterate
};
using StepObserver = std::function<void(const SpgStep&)>;

/// Shrinks a rejected step: U(0, alpha) from the generator, or alpha / 2.
/// The uniform draw uses the top 53 bits of one 64-bit output so a seed
/// reproduces the same sequence on every platform.
double backtrack_step(double alpha, Backtrack mode, std::mt19937_64& rng);

/// Thrown when the objective cannot be evaluated along the iteration.
class SolveError : public NumericError {
public:
    SolveError(const std::string& what, int iteration, std::vector<double> y)
        : NumericError(what, 0.0), iteration_(iteration), y_(std::move(y)) {}
    int iteration() const noexcept { return iteration_; }
    const std::vector<double>& y() const noexcept { return y_; }

private:
    int iteration_;
    std::vector<double> y_;
};

/// Spectral projected gradient on Phi(y) over the monotone nonnegative cone.
///
/// Starts from `init` (default: n equally spaced knots), runs nonmonotone
/// Armijo backtracking with Barzilai-Borwein step lengths and stops on the
/// first of: max_iter, a relative change of Phi at most improvement_tol on
/// improvement_window consecutive accepted steps, or ||d_k|| <= epsilon.
/// The best point visited is returned, so final_error never exceeds
/// initial_error.
///
/// Knots pushed very close to b sit where dx/dy = (b - a)/(1 + y)^2 is tiny;
/// the y-gradient there vanishes and such knots do not come back.
SolveReport solve(const Curve& curve, double a, double b, ObjectiveKind kind, int n,
                  const SpgConfig& config = {}, const std::optional<KnotVector>& init = {},
                  const StepObserver& observer = {});

/// Error in the measure that matches the objective kind.
double measure_error(const Curve& curve, const KnotVector& knots, ObjectiveKind kind);

}  // namespace knotopt
