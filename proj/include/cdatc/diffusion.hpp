#pragma once

#include <span>
#include <vector>

#include "cdatc/topology.hpp"

namespace cdatc {

enum class CombinerRule {
    uniform,     // c_lk = 1/|N_k|
    metropolis,  // c_lk = 1/max(|N_k|,|N_l|), remainder on the self weight
    adaptive_ls, // inverse smoothed one-step-ahead squared prediction error
};

// Last message received from one neighbor: combined estimate plus the
// piggybacked smoothed error. Entries go stale while a neighbor censors or
// stalls; combine simply keeps using them.
struct NeighborSlot {
    std::vector<double> w;
    double smoothed_error = 0.0;
    bool has_estimate = false;
    bool fresh = false; // delivered this step
};

// One node's decoupled ATC state: a locally adapted estimate psi and the
// fused estimate w, plus combination weights over the self-inclusive
// neighborhood in ascending node order.
struct NodeEstimator {
    int self = 0;
    std::vector<int> hood;            // ascending, includes self
    std::size_t self_slot = 0;        // index of self within hood
    std::vector<double> psi;
    std::vector<double> w;
    double mu = 0.1;
    double delta = 1e-5;
    std::vector<double> weights;      // parallel to hood
    std::vector<NeighborSlot> inbox;  // parallel to hood; self slot unused
    std::vector<double> pred_err;     // adaptive-ls smoothed errors, per slot

    // Zero estimates, uniform weights, inbox pre-filled with zero vectors.
    static NodeEstimator make(const Topology& topology, int k, int taps,
                              double mu, double delta);
};

// NLMS adaptation of psi; returns the a-priori error xi = d - psi^T u
// computed with the pre-update psi.
double nlms_adapt(NodeEstimator& est, std::span<const double> u, double d);

// w <- c_kk*psi + sum_l c_lk * inbox[l].w, evaluated in deviation form
// around psi so that identical inputs reproduce exactly.
void combine(NodeEstimator& est);

// Refresh combination weights under the configured rule. xi is the a-priori
// error returned by nlms_adapt for the current (u, d) pair; the adaptive
// rule scores the self estimate with it. Output always satisfies the
// simplex constraints (projection repairs numerical drift).
void update_combiners(NodeEstimator& est, const Topology& topology,
                      CombinerRule rule, double xi, std::span<const double> u,
                      double d);

// Euclidean projection onto the probability simplex.
std::vector<double> project_simplex(std::span<const double> raw);

// Max simplex violation: max(|sum-1|, -min(w), largest negative). Used by
// invariant checks and tests.
double simplex_violation(std::span<const double> weights);

} // namespace cdatc
