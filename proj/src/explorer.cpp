#include "tessarine/explorer.hpp"

#include <atomic>
#include <thread>

#include "tessarine/error.hpp"

namespace tess::explore {

using Eigen::Index;
using linalg::JordanBlock;

namespace {

struct ProfileName {
  Profile profile;
  std::string_view name;
};

constexpr ProfileName kNames[] = {
    {Profile::Dense, "dense"},
    {Profile::Invertible, "invertible"},
    {Profile::Ranks, "ranks"},
    {Profile::RankCondition, "rank-condition"},
    {Profile::Jordan, "jordan"},
    {Profile::Counterexample, "counterexample"},
    {Profile::Nilpotent, "nilpotent"},
};

// Eigenvalues for prescribed structures sit on a grid with gaps >= 0.5 so
// the clustering contract holds after mixing with cond <= 50 bases.
const cplx kEigenvalues[] = {{0, 0}, {1, 0}, {-1, 0}, {2, 0}, {0, 1}, {-1, 1}, {0.5, -1.5}};

Index uniform(Rng& rng, Index lo, Index hi) {
  return std::uniform_int_distribution<Index>(lo, hi)(rng);
}

CMatrix low_rank(Index n, Index r, Rng& rng) {
  if (r == 0) return CMatrix::Zero(n, n);
  return gaussian_matrix(n, r, rng) * gaussian_matrix(r, n, rng) / std::sqrt(double(r));
}

CMatrix padded(const CMatrix& top, Index n) {
  CMatrix out = CMatrix::Zero(n, n);
  out.topLeftCorner(top.rows(), top.cols()) = top;
  return out;
}

CMatrix block_diag(const CMatrix& x, const CMatrix& y) {
  CMatrix out = CMatrix::Zero(x.rows() + y.rows(), x.cols() + y.cols());
  out.topLeftCorner(x.rows(), x.cols()) = x;
  out.bottomRightCorner(y.rows(), y.cols()) = y;
  return out;
}

// A = X F Z^-1, B = Z G X^-1: AB = X FG X^-1 and BA = Z GF Z^-1.
DCMatrix mixed(const CMatrix& f, const CMatrix& g, Rng& rng) {
  const Index n = f.rows();
  const CMatrix x = random_invertible(n, rng);
  const CMatrix z = random_invertible(n, rng);
  const CMatrix x_inv = x.inverse();
  const CMatrix z_inv = z.inverse();
  return DCMatrix(x * f * z_inv, z * g * x_inv);
}

}  // namespace

std::string_view to_string(Profile profile) {
  for (const auto& entry : kNames) {
    if (entry.profile == profile) return entry.name;
  }
  return "?";
}

Profile parse_profile(std::string_view name) {
  for (const auto& entry : kNames) {
    if (entry.name == name) return entry.profile;
  }
  throw Error(ErrorKind::BadProfile, "unknown profile '" + std::string(name) + "'");
}

const std::vector<Profile>& all_profiles() {
  static const std::vector<Profile> all = [] {
    std::vector<Profile> out;
    for (const auto& entry : kNames) out.push_back(entry.profile);
    return out;
  }();
  return all;
}

std::vector<JordanBlock> random_blocks(Index n, Rng& rng, bool nilpotent) {
  std::vector<JordanBlock> blocks;
  Index left = n;
  if (nilpotent && n >= 2) {
    const int size = static_cast<int>(uniform(rng, 2, std::min<Index>(3, n)));
    blocks.push_back({0.0, size});
    left -= size;
  }
  constexpr Index pool = sizeof(kEigenvalues) / sizeof(kEigenvalues[0]);
  while (left > 0) {
    const int size = static_cast<int>(uniform(rng, 1, std::min<Index>(3, left)));
    blocks.push_back({kEigenvalues[uniform(rng, 0, pool - 1)], size});
    left -= size;
  }
  return blocks;
}

DCMatrix generate_pair(Profile profile, Index n, Rng& rng, Index max_n) {
  if (n < 1 || n > max_n) {
    throw Error(ErrorKind::BadProfile, "dimension " + std::to_string(n) + " outside [1, " +
                                           std::to_string(max_n) + "]");
  }
  switch (profile) {
    case Profile::Dense:
      return DCMatrix(gaussian_matrix(n, n, rng), gaussian_matrix(n, n, rng));
    case Profile::Invertible:
      return DCMatrix(random_invertible(n, rng), random_invertible(n, rng));
    case Profile::Ranks: {
      const Index ra = uniform(rng, 0, n);
      const Index rb = uniform(rng, 0, n);
      return DCMatrix(low_rank(n, ra, rng), low_rank(n, rb, rng));
    }
    case Profile::RankCondition: {
      const Index r = uniform(rng, 0, n);
      const CMatrix f = padded(random_invertible(r, rng), n);
      const CMatrix h = padded(random_invertible(r, rng), n);
      const CMatrix x = random_invertible(n, rng);
      const CMatrix y = random_invertible(n, rng);
      const CMatrix x_inv = x.inverse();
      const CMatrix y_inv = y.inverse();
      return DCMatrix(x * f * y_inv, y * h * x_inv);
    }
    case Profile::Jordan: {
      const CMatrix j = linalg::jordan_matrix(random_blocks(n, rng, false));
      return mixed(j, j, rng);
    }
    case Profile::Counterexample: {
      if (n == 1) return DCMatrix(CMatrix::Ones(1, 1), CMatrix::Zero(1, 1));
      CMatrix f = CMatrix::Zero(2, 2);
      f(1, 1) = 1.0;
      CMatrix g = CMatrix::Zero(2, 2);
      g(0, 1) = 1.0;
      const CMatrix k = random_invertible(n - 2, rng);
      return mixed(block_diag(f, k), block_diag(g, CMatrix::Identity(n - 2, n - 2)), rng);
    }
    case Profile::Nilpotent: {
      const CMatrix j = linalg::jordan_matrix(random_blocks(n, rng, true));
      const CMatrix x = random_invertible(n, rng);
      const CMatrix a = x * j * x.inverse();
      return DCMatrix(a, a);
    }
  }
  throw Error(ErrorKind::BadProfile, "unhandled profile");
}

TrialRecord run_trial(Profile profile, Index n, std::uint64_t seed,
                      const DecompositionOptions& options) {
  TrialRecord rec;
  rec.seed = seed;
  rec.n = n;
  rec.profile = profile;

  Rng rng(seed);
  const DCMatrix m = generate_pair(profile, n, rng, std::max<Index>(n, 6));
  try {
    auto jordan = options.jordan;
    jordan.noise_floor = std::max(jordan.noise_floor, product_noise_floor(m));
    rec.similar_ab_ba = linalg::similar(m.a() * m.b(), m.b() * m.a(), 1e-6, jordan);
  } catch (const Error&) {
    rec.similar_ab_ba.reset();
  }
  rec.report = existence_report(m, rng, options);

  auto fail = [&](std::string why) {
    rec.consistent = false;
    if (rec.inconsistency.empty()) rec.inconsistency = std::move(why);
  };
  const auto& r = rec.report;
  if (r.pinv_exists != r.ranks.pinv_exists()) fail("pinv verdict disagrees with ranks");
  if (r.jsvd_status == JsvdStatus::NotExists) {
    if (r.jsvd_necessary[0] && r.jsvd_necessary[1] && r.jsvd_necessary[2]) {
      fail("NotExists without a failing necessary condition");
    }
    if (r.pinv_exists) fail("NotExists although the pseudoinverse exists");
  }
  if (r.jsvd_status == JsvdStatus::Exists) {
    if (!r.factors) {
      fail("Exists without factors");
    } else {
      const auto& f = *r.factors;
      rec.j_blocks = f.blocks;
      rec.residual = reconstruction_residual(m, f.u, f.s, f.v);
      if (!(rec.residual <= options.recon_tol)) fail("reconstruction residual above tolerance");
      if (!is_unitary(f.u, 1e-6) || !is_unitary(f.v, 1e-6)) fail("factor is not unitary");
      if (!is_hermitian(f.s, 0.0)) fail("S is not Hermitian");
      for (const auto& blk : f.blocks) {
        if (!in_halfplane(blk.eigenvalue)) fail("eigenvalue of J outside the half-plane");
      }
    }
  }
  if (rec.similar_ab_ba) {
    rec.finding = (r.jsvd_status == JsvdStatus::Exists && !*rec.similar_ab_ba) ||
                  (r.jsvd_status == JsvdStatus::NotExists && *rec.similar_ab_ba);
  }
  return rec;
}

ScanResult conjecture_scan(const ScanConfig& config) {
  if (config.profiles.empty()) throw Error(ErrorKind::BadProfile, "no profiles");
  if (config.n < 0 || config.max_n < 1) throw Error(ErrorKind::BadProfile, "bad dimension");

  ScanResult out;
  out.records.resize(config.trials);
  std::atomic<std::size_t> next{0};
  auto work = [&] {
    for (std::size_t i = next++; i < config.trials; i = next++) {
      const std::uint64_t seed = mix_seed(config.seed, i);
      const Index n = config.n > 0 ? config.n
                                   : 1 + static_cast<Index>(mix_seed(seed, 1) % config.max_n);
      const Profile profile = config.profiles[i % config.profiles.size()];
      out.records[i] = run_trial(profile, n, seed, config.options);
    }
  };
  const unsigned threads = std::max(1u, config.threads);
  if (threads == 1) {
    work();
  } else {
    std::vector<std::jthread> pool;
    for (unsigned t = 0; t < threads; ++t) pool.emplace_back(work);
  }

  auto& s = out.summary;
  s.trials = config.trials;
  for (std::size_t i = 0; i < out.records.size(); ++i) {
    const auto& rec = out.records[i];
    if (!rec.consistent) ++s.inconsistent;
    if (!rec.similar_ab_ba) {
      ++s.similarity_unknown;
    } else {
      ++s.cells[*rec.similar_ab_ba ? 1 : 0][static_cast<int>(rec.status())];
    }
    if (rec.finding) s.findings.push_back(i);
  }
  return out;
}

UniquenessResult uniqueness_scan(const DCMatrix& m, int repetitions, Rng& rng,
                                 const DecompositionOptions& options) {
  UniquenessResult out;
  const double tol = 1e-6 * std::max(1.0, m.norm_inf());
  // Unitary similarity keeps a Hermitian input Hermitian, so it stays on
  // the route that does not need the rank condition.
  const bool hermitian = is_hermitian(m, options.rank_tol * std::max(1.0, m.norm_inf()));
  bool have_reference = false;
  for (int rep = 0; rep < repetitions; ++rep) {
    const std::uint64_t seed = rng();
    Rng local(seed);
    try {
      DCMatrix target = m;
      if (rep > 0) {
        const CMatrix x = random_invertible(m.size(), local);
        const CMatrix y = hermitian ? x : random_invertible(m.size(), local);
        target = DCMatrix(x, x.inverse()) * m * star(DCMatrix(y, y.inverse()));
      }
      const auto svd = jordan_svd(target, local, options);
      if (!have_reference) {
        out.reference = svd.blocks;
        have_reference = true;
      } else if (!linalg::same_blocks(out.reference, svd.blocks, tol)) {
        out.stable = false;
        out.witnesses.push_back({seed, svd.blocks});
      }
    } catch (const Error& e) {
      out.failures.emplace_back(seed, e.what());
    }
  }
  return out;
}

}  // namespace tess::explore
