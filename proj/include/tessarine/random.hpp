#pragma once

#include <cstdint>
#include <random>

#include "tessarine/dcmatrix.hpp"

namespace tess {

using Rng = std::mt19937_64;

/// SplitMix64 finalizer; derives independent per-trial seeds from a base seed.
std::uint64_t mix_seed(std::uint64_t base, std::uint64_t stream);

/// Entries with i.i.d. standard normal real and imaginary parts.
CMatrix gaussian_matrix(Eigen::Index rows, Eigen::Index cols, Rng& rng);
CVector gaussian_vector(Eigen::Index n, Rng& rng);

/// Gaussian draws rejected until cond_2 <= max_condition, then scaled so that
/// sigma_max * sigma_min = 1.
CMatrix random_invertible(Eigen::Index n, Rng& rng, double max_condition = 50.0);

}  // namespace tess
