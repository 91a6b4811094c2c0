#pragma once

#include <utility>
#include <vector>

#include "evosor/rng.hpp"

namespace evosor {

/// Uniform adaptation keeps the perturbation scale constant across the run;
/// time-variant adaptation shrinks it toward zero as the generation budget is
/// spent, so the relaxation factors settle instead of jittering forever.
enum class AdaptationMode { uniform, time_variant };

struct AdaptationParams {
    double omega_lower = 0.0;
    double omega_upper = 2.0;
    double e_x = 0.1;    // perturbation scale for the worse member of a pair
    double e_y = 0.01;   // drift scale for the better member of a pair
    double gamma = 40.0; // decay exponent of the time-variant factor
    int max_generations = 2000;
    AdaptationMode mode = AdaptationMode::time_variant;
    double clamp_epsilon = 1e-6;  // adapted factors are held this far inside the bounds

    /// Throws std::invalid_argument when the bounds/scales are unusable.
    void validate() const;
};

/// Per-slot relaxation factors; slot i of the pool always drives slot i of
/// the population.
struct OmegaPool {
    std::vector<double> omegas;

    int size() const { return static_cast<int>(omegas.size()); }
};

/// Evenly spaced factors centered in N equal subdivisions of the bounds:
/// step d = (upper - lower) / N, first value lower + d/2.
/// N must be even and >= 2 (selection keeps exactly half the population).
OmegaPool init_omegas(const AdaptationParams& params, int population_size);

/// (1 - t/T)^gamma in time-variant mode, exactly 1 in uniform mode.
/// This factor is the only difference between the two modes.
double time_variant_factor(int t, const AdaptationParams& params);

/// Deterministic core of the pair update, with the two standard-normal
/// samples supplied by the caller. With x the worse member and y the better:
///   worse:  w_x' = (0.5 + E_x g_worse T) (w_x + w_y)      (pulled to the midpoint)
///   better: w_y' = w_y + E_y |g_better| T (bound - w_y)    (nudged away from w_x,
///           toward the upper bound if w_y > w_x, toward the lower if w_y < w_x,
///           unchanged if the factors are equal)
/// where T is the time-variant factor at generation t. Both results are
/// clamped to [lower + eps, upper - eps]. Returns (new w_x, new w_y) in the
/// argument order, regardless of which member was worse.
std::pair<double, double> adapt_pair_with_draws(double omega_x, double omega_y, bool x_is_worse,
                                                double g_worse, double g_better, int t,
                                                const AdaptationParams& params);

/// The stochastic pair update. Equal errors mean no adaptation and no draws;
/// otherwise exactly two gaussians are consumed, the worse member's first.
std::pair<double, double> adapt_pair(double omega_x, double omega_y, double err_x, double err_y,
                                     int t, const AdaptationParams& params, Rng& rng);

}  // namespace evosor
