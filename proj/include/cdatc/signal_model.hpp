#pragma once

#include <span>
#include <vector>

#include "cdatc/rng.hpp"

namespace cdatc {

// Per-node observation statistics: regressor component variance and
// measurement-noise variance.
class NodeSignalProfile {
public:
    NodeSignalProfile(double noise_variance, double signal_power);

    double noise_variance() const { return noise_variance_; }
    double signal_power() const { return signal_power_; }

private:
    double noise_variance_;
    double signal_power_;
};

// i.i.d. zero-mean Gaussian regressor with per-component variance equal to
// the profile's signal power.
std::vector<double> sample_regressor(const NodeSignalProfile& profile,
                                     int taps, rng::NormalStream& stream);

// Same draw without reallocating.
void sample_regressor_into(const NodeSignalProfile& profile,
                           std::span<double> out, rng::NormalStream& stream);

// d = u^T w_o + v with v ~ N(0, noise_variance).
double observe(std::span<const double> w_o, std::span<const double> u,
               const NodeSignalProfile& profile, rng::NormalStream& stream);

// Noise variances for the default 7-node scenario, 1-based node order:
// {1,2,3} -> 1e-4, 4 -> 0.01, {5,6,7} -> 0.5.
std::vector<double> default_noise_profile();

// Ground-truth parameter vector: i.i.d. N(0, 1/taps) components, so the
// expected squared norm is 1 regardless of tap count.
std::vector<double> draw_ground_truth(int taps, rng::NormalStream& stream);

} // namespace cdatc
