#pragma once

// Randomized probes of the two open questions around the Jordan SVD: whether
// existence is equivalent to AB ~ BA, and whether J is unique.

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "tessarine/decompositions.hpp"

namespace tess::explore {

enum class Profile {
  Dense,           // Gaussian A, B
  Invertible,      // well-conditioned invertible A, B
  Ranks,           // rank(A), rank(B) drawn independently, factor products
  RankCondition,   // A = X [F 0; 0 0] Y^-1, B = Y [H 0; 0 0] X^-1
  Jordan,          // A = X J Z^-1, B = Z J X^-1 so AB ~ BA ~ J^2, J drawn at random
  Counterexample,  // diag(0, 1), [[0, 1], [0, 0]] (+) invertible, then mixed
  Nilpotent,       // Hermitian [A, A] with A ~ J containing nilpotent blocks
};

std::string_view to_string(Profile profile);
/// Throws BadProfile for unknown names.
Profile parse_profile(std::string_view name);
const std::vector<Profile>& all_profiles();

/// Throws BadProfile when n is not in [1, max_n].
DCMatrix generate_pair(Profile profile, Eigen::Index n, Rng& rng, Eigen::Index max_n = 6);

/// Random Jordan structure of total size n; `nilpotent` forces at least one
/// zero block of size >= 2 when n >= 2.
std::vector<linalg::JordanBlock> random_blocks(Eigen::Index n, Rng& rng, bool nilpotent);

struct TrialRecord {
  std::uint64_t seed = 0;
  Eigen::Index n = 0;
  Profile profile = Profile::Dense;
  /// Empty when the similarity test hit ClusterAmbiguity.
  std::optional<bool> similar_ab_ba;
  ExistenceReport report;
  std::vector<linalg::JordanBlock> j_blocks;
  double residual = 0.0;
  bool consistent = true;
  /// Why the record is inconsistent, or empty.
  std::string inconsistency;
  /// Exists with AB !~ BA, or NotExists with AB ~ BA.
  bool finding = false;

  JsvdStatus status() const { return report.jsvd_status; }
};

/// Everything but `profile`, `n` and `seed` is recomputed from them.
TrialRecord run_trial(Profile profile, Eigen::Index n, std::uint64_t seed,
                      const DecompositionOptions& options = {});

struct ScanConfig {
  std::size_t trials = 100;
  std::vector<Profile> profiles{Profile::Dense, Profile::Ranks};
  /// Fixed dimension when nonzero; otherwise drawn uniformly from [1, max_n].
  Eigen::Index n = 0;
  Eigen::Index max_n = 5;
  std::uint64_t seed = 0;
  unsigned threads = 1;
  DecompositionOptions options;
};

struct ScanSummary {
  std::size_t trials = 0;
  /// cells[similar][status]: similar = 0 (not similar) or 1; status indexes
  /// Exists, NotExists, Unknown.
  std::size_t cells[2][3] = {};
  /// Trials whose similarity could not be decided.
  std::size_t similarity_unknown = 0;
  std::size_t inconsistent = 0;
  std::vector<std::size_t> findings;
};

struct ScanResult {
  std::vector<TrialRecord> records;
  ScanSummary summary;
};

/// Trial i uses profile profiles[i % size] and seed mix_seed(seed, i); the
/// result does not depend on the thread count.
ScanResult conjecture_scan(const ScanConfig& config);

struct UniquenessWitness {
  std::uint64_t seed = 0;
  std::vector<linalg::JordanBlock> blocks;
};

struct UniquenessResult {
  bool stable = true;
  std::vector<linalg::JordanBlock> reference;
  /// Repetitions whose J differs from the reference.
  std::vector<UniquenessWitness> witnesses;
  /// Repetitions that raised, with the error text.
  std::vector<std::pair<std::uint64_t, std::string>> failures;
};

/// Repeats the Jordan SVD of W1 m W2* for random unitary W1, W2 (the identity
/// on the first repetition) and fresh extension seeds, comparing the block
/// multisets of J.
UniquenessResult uniqueness_scan(const DCMatrix& m, int repetitions, Rng& rng,
                                 const DecompositionOptions& options = {});

}  // namespace tess::explore
