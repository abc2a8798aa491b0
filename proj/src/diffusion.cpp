#include "cdatc/diffusion.hpp"

#include <algorithm>
#include <cmath>
#include <numeric>
#include <string>

#include "cdatc/errors.hpp"
#include "cdatc/vecmath.hpp"

namespace cdatc {

namespace {

constexpr double kSimplexTol = 1e-12;
constexpr double kPredErrFloor = 1e-12;

void check_dimensions(const NodeEstimator& est, std::span<const double> u) {
    if (u.size() != est.psi.size()) {
        fail(ErrorCode::dimension_mismatch,
             "regressor length " + std::to_string(u.size()) +
                 " does not match estimator length " +
                 std::to_string(est.psi.size()));
    }
}

} // namespace

NodeEstimator NodeEstimator::make(const Topology& topology, int k, int taps,
                                  double mu, double delta) {
    NodeEstimator est;
    est.self = k;
    est.hood = topology.neighbors(k, true);
    est.self_slot = static_cast<std::size_t>(
        std::lower_bound(est.hood.begin(), est.hood.end(), k) - est.hood.begin());
    est.psi.assign(static_cast<std::size_t>(taps), 0.0);
    est.w.assign(static_cast<std::size_t>(taps), 0.0);
    est.mu = mu;
    est.delta = delta;
    const std::size_t n = est.hood.size();
    est.weights.assign(n, 1.0 / static_cast<double>(n));
    est.inbox.resize(n);
    for (std::size_t i = 0; i < n; ++i) {
        if (i == est.self_slot) continue;
        est.inbox[i].w.assign(static_cast<std::size_t>(taps), 0.0);
        est.inbox[i].has_estimate = true; // cold start: all-zero estimates
    }
    est.pred_err.assign(n, 1.0);
    return est;
}

double nlms_adapt(NodeEstimator& est, std::span<const double> u, double d) {
    check_dimensions(est, u);
    const double xi = d - vec::dot(est.psi, u);
    const double step = est.mu / (est.delta + vec::sq_norm(u));
    vec::axpy(step * xi, u, est.psi);
    return xi;
}

void combine(NodeEstimator& est) {
    if (simplex_violation(est.weights) > kSimplexTol) {
        fail(ErrorCode::weight_constraint_violated,
             "combination weights are off the simplex at node " +
                 std::to_string(est.self));
    }
    for (std::size_t i = 0; i < est.hood.size(); ++i) {
        if (i == est.self_slot) continue;
        if (!est.inbox[i].has_estimate) {
            fail(ErrorCode::missing_neighbor_estimate,
                 "node " + std::to_string(est.self) +
                     " has no estimate from neighbor " +
                     std::to_string(est.hood[i]));
        }
    }
    // Deviation form: w = psi + sum_l c_l (w_l - psi). When every combined
    // vector equals psi the result is psi exactly.
    est.w = est.psi;
    for (std::size_t i = 0; i < est.hood.size(); ++i) {
        if (i == est.self_slot) continue;
        const double c = est.weights[i];
        if (c == 0.0) continue;
        const auto& wl = est.inbox[i].w;
        for (std::size_t j = 0; j < est.w.size(); ++j) {
            est.w[j] += c * (wl[j] - est.psi[j]);
        }
    }
}

void update_combiners(NodeEstimator& est, const Topology& topology,
                      CombinerRule rule, double xi, std::span<const double> u,
                      double d) {
    const std::size_t n = est.hood.size();
    switch (rule) {
    case CombinerRule::uniform: {
        est.weights.assign(n, 1.0 / static_cast<double>(n));
        break;
    }
    case CombinerRule::metropolis: {
        const int deg_k = topology.cardinality(est.self);
        double off_sum = 0.0;
        for (std::size_t i = 0; i < n; ++i) {
            if (i == est.self_slot) continue;
            const int deg_l = topology.cardinality(est.hood[i]);
            est.weights[i] = 1.0 / static_cast<double>(std::max(deg_k, deg_l));
            off_sum += est.weights[i];
        }
        est.weights[est.self_slot] = 1.0 - off_sum;
        break;
    }
    case CombinerRule::adaptive_ls: {
        check_dimensions(est, u);
        // One-step-ahead squared prediction errors; the self estimate is
        // scored by the a-priori error of the pre-update psi.
        for (std::size_t i = 0; i < n; ++i) {
            const double pred =
                (i == est.self_slot) ? xi : d - vec::dot(est.inbox[i].w, u);
            est.pred_err[i] = 0.9 * est.pred_err[i] + 0.1 * pred * pred;
        }
        std::vector<double> raw(n);
        for (std::size_t i = 0; i < n; ++i) {
            raw[i] = 1.0 / std::max(est.pred_err[i], kPredErrFloor);
        }
        const double total = std::accumulate(raw.begin(), raw.end(), 0.0);
        for (double& r : raw) r /= total;
        est.weights = project_simplex(raw);
        break;
    }
    }
}

std::vector<double> project_simplex(std::span<const double> raw) {
    for (double v : raw) {
        if (!std::isfinite(v)) {
            fail(ErrorCode::non_finite_input,
                 "simplex projection requires finite weights");
        }
    }
    // Sort-based projection: find the largest k with v_(k) > theta_k,
    // theta_k = (sum of top-k - 1)/k, then shift and clamp.
    std::vector<double> sorted(raw.begin(), raw.end());
    std::sort(sorted.begin(), sorted.end(), std::greater<>());
    double cum = 0.0;
    double theta = 0.0;
    for (std::size_t i = 0; i < sorted.size(); ++i) {
        cum += sorted[i];
        const double t = (cum - 1.0) / static_cast<double>(i + 1);
        if (sorted[i] - t > 0.0) theta = t;
    }
    std::vector<double> out(raw.size());
    for (std::size_t i = 0; i < raw.size(); ++i) {
        out[i] = std::max(raw[i] - theta, 0.0);
    }
    return out;
}

double simplex_violation(std::span<const double> weights) {
    double sum = 0.0;
    double worst_neg = 0.0;
    for (double w : weights) {
        sum += w;
        worst_neg = std::min(worst_neg, w);
    }
    return std::max(std::abs(sum - 1.0), -worst_neg);
}

} // namespace cdatc
