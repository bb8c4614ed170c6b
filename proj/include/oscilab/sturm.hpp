#pragma once

#include "oscilab/polynomial.hpp"

namespace oscilab {

/// Number of distinct real roots of p in (lo, hi], from the sign-variation
/// difference of the Sturm chain p, p', -rem(...), ... at the endpoints.
///
/// If p vanishes at an endpoint the endpoint is shrunk inward by
/// 1e-12 * (hi - lo) (repeatedly, doubling, within a small budget) before
/// counting; a root exactly at hi is therefore not counted.
/// The chain is carried in extended precision with per-step normalization
/// and relative coefficient trimming.
///
/// Throws std::invalid_argument for the zero polynomial or a degenerate
/// interval, std::runtime_error if an endpoint sign cannot be resolved
/// within the perturbation budget.
int sturm_count(const Polynomial& p, double lo, double hi);

}  // namespace oscilab
