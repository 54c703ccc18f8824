#pragma once

// Few-relators model: relators are uniform random letter sequences of a fixed
// length over A^{±1}. Sampling, Monte Carlo estimation of the probability that
// the relation matrix has full rank, and an exact oracle for small parameters.

#include "metab/presentation.hpp"

#include <cstdint>
#include <random>
#include <vector>

namespace metab {

using TrialRng = std::mt19937_64;

/// Seed of the stream for one trial. Keyed only by (master_seed, ell, trial),
/// so results do not depend on how trials are scheduled.
std::uint64_t trial_seed(std::uint64_t master_seed, std::uint64_t ell, std::uint64_t trial);

/// `ell` letters drawn uniformly and independently from the 2n letters.
template <typename Rng>
std::vector<Letter> sample_letters(std::size_t n, std::size_t ell, Rng& rng) {
  std::uniform_int_distribution<std::size_t> pick(0, 2 * n - 1);
  std::vector<Letter> out;
  out.reserve(ell);
  for (std::size_t i = 0; i < ell; ++i) {
    const std::size_t x = pick(rng);
    out.push_back({Generator{x / 2}, x % 2 == 0 ? 1 : -1});
  }
  return out;
}

/// A uniform letter sequence of length ell, freely reduced afterwards (which
/// leaves the exponent vector unchanged).
template <typename Rng>
GroupWord sample_word(std::size_t n, std::size_t ell, Rng& rng) {
  return free_reduce(n, sample_letters(n, ell, rng));
}

/// m independent words of raw length ell over generators a1..an.
template <typename Rng>
Presentation sample_presentation(std::size_t n, std::size_t m, std::size_t ell, Rng& rng) {
  std::vector<GroupWord> rel;
  rel.reserve(m);
  for (std::size_t i = 0; i < m; ++i) rel.push_back(sample_word(n, ell, rng));
  return Presentation(default_generator_names(n), std::move(rel));
}

struct ExperimentConfig {
  std::size_t n = 2;
  std::size_t m = 2;
  std::vector<std::size_t> lengths;
  std::size_t trials = 1000;
  std::uint64_t master_seed = 1;
  double confidence = 0.99;
};

struct LengthEstimate {
  std::size_t ell = 0;
  std::size_t trials = 0;
  std::size_t successes = 0;
  double p_hat = 0;
  double ci_low = 0;
  double ci_high = 0;
};

struct ExperimentResult {
  ExperimentConfig config;
  std::vector<LengthEstimate> rows;
};

struct Interval {
  double low = 0;
  double high = 1;
};

/// Wilson score interval for `successes` out of `trials` at two-sided
/// `confidence`.
Interval wilson_interval(std::size_t successes, std::size_t trials, double confidence);

/// True iff the sampled presentation's relation matrix has full rank. Uses
/// 64-bit arithmetic when the Hadamard bound allows it and BigInt otherwise.
bool sampled_full_rank(const Presentation& p);

/// Throws std::invalid_argument on an invalid config. `threads` == 0 means
/// hardware concurrency; the result is identical for every thread count.
ExperimentResult estimate_full_rank_probability(const ExperimentConfig& cfg,
                                                unsigned threads = 1);

struct ExactGuards {
  std::size_t max_n = 3;
  std::size_t max_m = 3;
  std::size_t max_ell = 10;
};

/// Exact distribution of the exponent vector of a uniform length-ell word:
/// maps each reachable vector to its number of letter sequences.
std::vector<std::pair<std::vector<std::int64_t>, std::uint64_t>> exponent_walk_distribution(
    std::size_t n, std::size_t ell);

/// P(rank M = min(n, m)) for m independent uniform words of length ell, as an
/// exact rational. Throws LimitError outside the guards.
BigRational exact_full_rank_probability(std::size_t n, std::size_t m, std::size_t ell,
                                        const ExactGuards& guards = {});

}  // namespace metab
