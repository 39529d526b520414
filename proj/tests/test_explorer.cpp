#include "support.hpp"
#include "tessarine/error.hpp"
#include "tessarine/explorer.hpp"

namespace tess::explore {
namespace {

using test::mat;
using test::near;

TEST(Profiles, NamesRoundTrip) {
  for (auto p : all_profiles()) EXPECT_EQ(parse_profile(to_string(p)), p);
  EXPECT_THROW(parse_profile("spiral"), Error);
}

TEST(Generate, RejectsBadDimension) {
  Rng rng(1);
  EXPECT_THROW(generate_pair(Profile::Dense, 0, rng), Error);
  EXPECT_THROW(generate_pair(Profile::Dense, 7, rng), Error);
}

TEST(Generate, FullRankProfileIsInvertible) {
  Rng rng(2);
  for (int n = 1; n <= 6; ++n) {
    const auto m = generate_pair(Profile::Invertible, n, rng);
    const auto r = rank_profile(m);
    EXPECT_EQ(r.rank_a, n);
    EXPECT_EQ(r.rank_b, n);
  }
}

TEST(Generate, RankConditionHolds) {
  Rng rng(3);
  for (int t = 0; t < 60; ++t) {
    EXPECT_TRUE(pinv_exists(generate_pair(Profile::RankCondition, 1 + t % 6, rng)));
  }
}

TEST(Generate, CounterexampleStructure) {
  Rng rng(4);
  for (int n = 2; n <= 5; ++n) {
    const auto m = generate_pair(Profile::Counterexample, n, rng);
    const auto r = rank_profile(m);
    EXPECT_EQ(r.rank_ab, n - 2);
    EXPECT_EQ(r.rank_ba, n - 1);
    EXPECT_FALSE(jsvd_necessary(m)[2]);
  }
}

TEST(Generate, NilpotentProfileIsHermitianWithNilpotentBlock) {
  Rng rng(5);
  const auto m = generate_pair(Profile::Nilpotent, 4, rng);
  EXPECT_TRUE(is_hermitian(m, 0.0));
  EXPECT_TRUE(linalg::has_nontrivial_nilpotent(linalg::jordan_decomposition(m.a()).blocks));
}

TEST(Generate, BitReproducible) {
  for (auto p : all_profiles()) {
    Rng r1(99), r2(99);
    const auto x = generate_pair(p, 4, r1);
    const auto y = generate_pair(p, 4, r2);
    EXPECT_TRUE(near(x, y, 0)) << to_string(p);
  }
}

TEST(Trial, NilpotentHermitianIsConsistentCell) {
  // The 2x2 nilpotent [J, J] as generated for n = 2 always has structure J.
  for (std::uint64_t seed = 0; seed < 10; ++seed) {
    const auto rec = run_trial(Profile::Nilpotent, 2, seed);
    EXPECT_TRUE(rec.consistent) << rec.inconsistency;
    EXPECT_EQ(rec.status(), JsvdStatus::Exists);
    ASSERT_TRUE(rec.similar_ab_ba.has_value());
    EXPECT_TRUE(*rec.similar_ab_ba);
    EXPECT_FALSE(rec.finding);
  }
}

TEST(Trial, CounterexampleIsNotSimilar) {
  for (std::uint64_t seed = 0; seed < 10; ++seed) {
    const auto rec = run_trial(Profile::Counterexample, 2 + seed % 4, seed);
    EXPECT_EQ(rec.status(), JsvdStatus::NotExists);
    ASSERT_TRUE(rec.similar_ab_ba.has_value());
    EXPECT_FALSE(*rec.similar_ab_ba);
    EXPECT_FALSE(rec.finding);
  }
}

TEST(Trial, IdempotentScalarIsFlagged) {
  // [1, 0]: AB = BA = 0 are similar, yet rank(A) != rank(B) rules out a
  // Jordan SVD. The scan must surface this, not hide it.
  const auto rec = run_trial(Profile::Counterexample, 1, 0);
  EXPECT_EQ(rec.status(), JsvdStatus::NotExists);
  EXPECT_TRUE(rec.finding);
  EXPECT_TRUE(rec.consistent);
}

TEST(Trial, Deterministic) {
  for (auto p : all_profiles()) {
    const auto a = run_trial(p, 4, 1234);
    const auto b = run_trial(p, 4, 1234);
    EXPECT_EQ(a.similar_ab_ba, b.similar_ab_ba);
    EXPECT_EQ(a.status(), b.status());
    EXPECT_EQ(a.residual, b.residual);
    EXPECT_EQ(a.j_blocks, b.j_blocks);
  }
}

TEST(Scan, InvertibleAllExistAndSimilar) {
  ScanConfig c;
  c.trials = 1000;
  c.profiles = {Profile::Invertible};
  c.seed = 5;
  const auto r = conjecture_scan(c);
  EXPECT_EQ(r.summary.cells[1][0], 1000u);
  EXPECT_EQ(r.summary.inconsistent, 0u);
  EXPECT_TRUE(r.summary.findings.empty());
}

TEST(Scan, ThreadCountDoesNotChangeRecords) {
  ScanConfig c;
  c.trials = 200;
  c.profiles = all_profiles();
  c.seed = 11;
  const auto serial = conjecture_scan(c);
  c.threads = 4;
  const auto threaded = conjecture_scan(c);
  ASSERT_EQ(serial.records.size(), threaded.records.size());
  for (std::size_t i = 0; i < serial.records.size(); ++i) {
    EXPECT_EQ(serial.records[i].seed, threaded.records[i].seed);
    EXPECT_EQ(serial.records[i].status(), threaded.records[i].status());
    EXPECT_EQ(serial.records[i].residual, threaded.records[i].residual);
  }
  EXPECT_EQ(serial.summary.findings, threaded.summary.findings);
}

TEST(Scan, EveryRecordReplaysFromItsSeed) {
  ScanConfig c;
  c.trials = 50;
  c.profiles = all_profiles();
  c.seed = 21;
  const auto r = conjecture_scan(c);
  for (const auto& rec : r.records) {
    const auto again = run_trial(rec.profile, rec.n, rec.seed);
    EXPECT_EQ(again.status(), rec.status());
    EXPECT_EQ(again.residual, rec.residual);
  }
}

TEST(Uniqueness, InvertibleIsStable) {
  Rng rng(31);
  const DCMatrix m(random_invertible(3, rng), random_invertible(3, rng));
  const auto u = uniqueness_scan(m, 8, rng);
  EXPECT_TRUE(u.stable);
  EXPECT_TRUE(u.failures.empty());
  EXPECT_TRUE(u.witnesses.empty());
}

TEST(Uniqueness, HermitianMatchesJordanStructure) {
  Rng rng(32);
  const std::vector<linalg::JordanBlock> blocks{{1.0, 2}, {2.0, 1}};
  const CMatrix p = random_invertible(3, rng);
  const CMatrix a = p * linalg::jordan_matrix(blocks) * p.inverse();
  const auto u = uniqueness_scan(DCMatrix(a, a), 8, rng);
  EXPECT_TRUE(u.stable);
  EXPECT_TRUE(u.failures.empty());
  EXPECT_TRUE(linalg::same_blocks(u.reference, blocks, 1e-5));
}

TEST(Uniqueness, SingularRankConditionCorpus) {
  Rng rng(33);
  for (int t = 0; t < 10; ++t) {
    const DCMatrix m = generate_pair(Profile::RankCondition, 2 + t % 4, rng);
    const auto u = uniqueness_scan(m, 4, rng);
    // DistinctJ would be a finding, not a bug; it must come with witnesses.
    EXPECT_EQ(u.stable, u.witnesses.empty());
    if (!u.stable) RecordProperty("distinct_j_trial", t);
    EXPECT_TRUE(u.failures.empty());
  }
}

}  // namespace
}  // namespace tess::explore
