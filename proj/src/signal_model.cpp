#include "cdatc/signal_model.hpp"

#include <cmath>
#include <string>

#include "cdatc/errors.hpp"
#include "cdatc/vecmath.hpp"

namespace cdatc {

NodeSignalProfile::NodeSignalProfile(double noise_variance, double signal_power)
    : noise_variance_(noise_variance), signal_power_(signal_power) {
    if (!(noise_variance >= 0.0)) {
        fail(ErrorCode::validation_error,
             "noise_variance must be >= 0, got " + std::to_string(noise_variance));
    }
    if (!(signal_power > 0.0)) {
        fail(ErrorCode::validation_error,
             "signal_power must be > 0, got " + std::to_string(signal_power));
    }
}

void sample_regressor_into(const NodeSignalProfile& profile,
                           std::span<double> out, rng::NormalStream& stream) {
    const double scale = std::sqrt(profile.signal_power());
    for (double& x : out) x = scale * stream.next();
}

std::vector<double> sample_regressor(const NodeSignalProfile& profile,
                                     int taps, rng::NormalStream& stream) {
    std::vector<double> u(static_cast<std::size_t>(taps));
    sample_regressor_into(profile, u, stream);
    return u;
}

double observe(std::span<const double> w_o, std::span<const double> u,
               const NodeSignalProfile& profile, rng::NormalStream& stream) {
    if (w_o.size() != u.size()) {
        fail(ErrorCode::dimension_mismatch,
             "regressor length " + std::to_string(u.size()) +
                 " does not match parameter length " + std::to_string(w_o.size()));
    }
    // The noise draw happens unconditionally so stream consumption per step
    // stays fixed even for zero-variance nodes.
    const double v = std::sqrt(profile.noise_variance()) * stream.next();
    return vec::dot(u, w_o) + v;
}

std::vector<double> default_noise_profile() {
    return {1e-4, 1e-4, 1e-4, 0.01, 0.5, 0.5, 0.5};
}

std::vector<double> draw_ground_truth(int taps, rng::NormalStream& stream) {
    const double scale = 1.0 / std::sqrt(static_cast<double>(taps));
    std::vector<double> w(static_cast<std::size_t>(taps));
    for (double& x : w) x = scale * stream.next();
    return w;
}

} // namespace cdatc
