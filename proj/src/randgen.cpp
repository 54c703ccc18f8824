#include "metab/randgen.hpp"

#include "metab/errors.hpp"

#include <boost/math/distributions/normal.hpp>

#include <algorithm>
#include <cmath>
#include <map>
#include <stdexcept>
#include <thread>

namespace metab {

namespace {

std::uint64_t splitmix64(std::uint64_t z) {
  z += 0x9e3779b97f4a7c15ULL;
  z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ULL;
  z = (z ^ (z >> 27)) * 0x94d049bb133111ebULL;
  return z ^ (z >> 31);
}

std::int64_t checked_mul(std::int64_t a, std::int64_t b) {
  std::int64_t out = 0;
  if (__builtin_mul_overflow(a, b, &out)) throw LimitError("exact oracle: 64-bit overflow");
  return out;
}

std::int64_t checked_sub(std::int64_t a, std::int64_t b) {
  std::int64_t out = 0;
  if (__builtin_sub_overflow(a, b, &out)) throw LimitError("exact oracle: 64-bit overflow");
  return out;
}

// A rational subspace of Q^n, stored as the rows of its reduced echelon basis
// scaled to primitive integer vectors with positive leading entry. Equal
// subspaces have equal keys.
using SpanKey = std::vector<std::int64_t>;

void make_primitive(std::vector<std::int64_t>& row) {
  std::int64_t g = 0;
  for (auto x : row) g = std::gcd(g, x < 0 ? -x : x);
  if (g == 0) return;
  auto lead = std::find_if(row.begin(), row.end(), [](auto x) { return x != 0; });
  if (*lead < 0) g = -g;
  for (auto& x : row) x /= g;
}

SpanKey extend_span(const SpanKey& key, const std::vector<std::int64_t>& v, std::size_t n) {
  std::vector<std::vector<std::int64_t>> rows;
  for (std::size_t i = 0; i < key.size(); i += n) rows.emplace_back(key.begin() + i, key.begin() + i + n);
  rows.push_back(v);
  std::size_t r = 0;
  for (std::size_t c = 0; c < n && r < rows.size(); ++c) {
    std::size_t pivot = r;
    while (pivot < rows.size() && rows[pivot][c] == 0) ++pivot;
    if (pivot == rows.size()) continue;
    std::swap(rows[pivot], rows[r]);
    for (std::size_t i = 0; i < rows.size(); ++i) {
      if (i == r || rows[i][c] == 0) continue;
      const std::int64_t a = rows[r][c];
      const std::int64_t b = rows[i][c];
      for (std::size_t j = 0; j < n; ++j) {
        rows[i][j] = checked_sub(checked_mul(a, rows[i][j]), checked_mul(b, rows[r][j]));
      }
      make_primitive(rows[i]);
    }
    ++r;
  }
  SpanKey out;
  for (std::size_t i = 0; i < r; ++i) {
    make_primitive(rows[i]);
    out.insert(out.end(), rows[i].begin(), rows[i].end());
  }
  return out;
}

// v lies in the span of the echelon basis `key` iff eliminating along the
// basis pivots leaves nothing.
bool in_span(const SpanKey& key, std::vector<std::int64_t> v, std::size_t n) {
  for (std::size_t i = 0; i < key.size(); i += n) {
    std::size_t p = 0;
    while (key[i + p] == 0) ++p;
    if (v[p] == 0) continue;
    const std::int64_t a = key[i + p];
    const std::int64_t b = v[p];
    for (std::size_t j = 0; j < n; ++j) {
      v[j] = checked_sub(checked_mul(a, v[j]), checked_mul(b, key[i + j]));
    }
    make_primitive(v);
  }
  return std::all_of(v.begin(), v.end(), [](auto x) { return x == 0; });
}

// Rank test on exponent rows whose raw word lengths are `lengths`. Bareiss
// entries are minors of size <= k, each bounded by the product of the k
// largest row norms, and the elimination multiplies two of them; 64-bit
// arithmetic is used when that fits.
bool full_rank_rows(const Matrix<std::int64_t>& rows, std::vector<double> lengths) {
  const auto k = std::min(rows.rows(), rows.cols());
  if (k == 0) return true;
  for (auto& x : lengths) x = std::log2(std::max(1.0, x));
  std::sort(lengths.rbegin(), lengths.rend());
  double bits = 0;
  for (Index i = 0; i < k; ++i) bits += lengths[static_cast<std::size_t>(i)];
  if (2.0 * bits < 61.0) return rank(rows) == k;
  return rank(rows.cast<BigInt>().eval()) == k;
}

}  // namespace

std::uint64_t trial_seed(std::uint64_t master_seed, std::uint64_t ell, std::uint64_t trial) {
  std::uint64_t x = splitmix64(master_seed);
  x = splitmix64(x ^ ell);
  return splitmix64(x ^ trial);
}

Interval wilson_interval(std::size_t successes, std::size_t trials, double confidence) {
  if (trials == 0) return {0.0, 1.0};
  const boost::math::normal standard;
  const double z = boost::math::quantile(standard, 1.0 - (1.0 - confidence) / 2.0);
  const double nt = static_cast<double>(trials);
  const double p = static_cast<double>(successes) / nt;
  const double z2 = z * z;
  const double denom = 1.0 + z2 / nt;
  const double center = (p + z2 / (2.0 * nt)) / denom;
  const double half = z / denom * std::sqrt(p * (1.0 - p) / nt + z2 / (4.0 * nt * nt));
  // Exact endpoints at p = 0 or 1; rounding must not push p outside.
  Interval ci{std::max(0.0, center - half), std::min(1.0, center + half)};
  if (successes == trials) ci.high = 1.0;
  if (successes == 0) ci.low = 0.0;
  ci.low = std::min(ci.low, p);
  ci.high = std::max(ci.high, p);
  return ci;
}

bool sampled_full_rank(const Presentation& p) {
  std::vector<double> lengths;
  for (const auto& r : p.relators()) lengths.push_back(static_cast<double>(r.length()));
  return full_rank_rows(relation_matrix<std::int64_t>(p), std::move(lengths));
}

ExperimentResult estimate_full_rank_probability(const ExperimentConfig& cfg, unsigned threads) {
  if (cfg.n < 1 || cfg.m < 1 || cfg.trials < 1) {
    throw std::invalid_argument("experiment needs n >= 1, m >= 1, trials >= 1");
  }
  if (cfg.lengths.empty()) throw std::invalid_argument("experiment needs at least one length");
  for (auto ell : cfg.lengths) {
    if (ell < 1) throw std::invalid_argument("lengths must be >= 1");
  }
  if (!(cfg.confidence > 0.0 && cfg.confidence < 1.0)) {
    throw std::invalid_argument("confidence must lie in (0, 1)");
  }
  if (threads == 0) threads = std::max(1u, std::thread::hardware_concurrency());

  ExperimentResult result{cfg, {}};
  std::vector<unsigned char> outcome(cfg.trials);
  const auto m_rows = static_cast<Index>(cfg.m);
  const auto n_cols = static_cast<Index>(cfg.n);
  for (std::size_t ell : cfg.lengths) {
    const std::vector<double> lengths(cfg.m, static_cast<double>(ell));
    auto run = [&](std::size_t begin, std::size_t end) {
      for (std::size_t t = begin; t < end; ++t) {
        // Same draws as sample_presentation; free reduction and generator
        // names do not affect the exponent rows, so they are skipped.
        TrialRng rng(trial_seed(cfg.master_seed, ell, t));
        Matrix<std::int64_t> rows = Matrix<std::int64_t>::Zero(m_rows, n_cols);
        std::uniform_int_distribution<std::size_t> pick(0, 2 * cfg.n - 1);
        for (Index i = 0; i < m_rows; ++i) {
          for (std::size_t step = 0; step < ell; ++step) {
            const std::size_t x = pick(rng);
            rows(i, static_cast<Index>(x / 2)) += x % 2 == 0 ? 1 : -1;
          }
        }
        outcome[t] = full_rank_rows(rows, lengths) ? 1 : 0;
      }
    };
    const std::size_t workers = std::min<std::size_t>(threads, cfg.trials);
    if (workers <= 1) {
      run(0, cfg.trials);
    } else {
      std::vector<std::thread> pool;
      const std::size_t chunk = (cfg.trials + workers - 1) / workers;
      for (std::size_t w = 0; w < workers; ++w) {
        const std::size_t b = w * chunk;
        const std::size_t e = std::min(cfg.trials, b + chunk);
        if (b < e) pool.emplace_back(run, b, e);
      }
      for (auto& th : pool) th.join();
    }

    LengthEstimate row;
    row.ell = ell;
    row.trials = cfg.trials;
    for (auto o : outcome) row.successes += o;
    row.p_hat = static_cast<double>(row.successes) / static_cast<double>(row.trials);
    const Interval ci = wilson_interval(row.successes, row.trials, cfg.confidence);
    row.ci_low = ci.low;
    row.ci_high = ci.high;
    result.rows.push_back(row);
  }
  return result;
}

std::vector<std::pair<std::vector<std::int64_t>, std::uint64_t>> exponent_walk_distribution(
    std::size_t n, std::size_t ell) {
  // Counts on the cube [-ell, ell]^n, flattened with coordinate 0 slowest.
  const std::size_t side = 2 * ell + 1;
  std::size_t cells = 1;
  for (std::size_t i = 0; i < n; ++i) {
    if (cells > (std::size_t{1} << 26) / side) throw LimitError("exponent walk: lattice too large");
    cells *= side;
  }
  std::vector<std::size_t> stride(n);
  for (std::size_t i = n; i-- > 0;) stride[i] = i + 1 == n ? 1 : stride[i + 1] * side;

  std::size_t origin = 0;
  for (std::size_t i = 0; i < n; ++i) origin += ell * stride[i];
  std::vector<std::uint64_t> cur(cells, 0);
  cur[origin] = 1;
  for (std::size_t step = 0; step < ell; ++step) {
    std::vector<std::uint64_t> next(cells, 0);
    for (std::size_t c = 0; c < cells; ++c) {
      if (cur[c] == 0) continue;
      for (std::size_t g = 0; g < n; ++g) {
        const std::size_t coord = (c / stride[g]) % side;
        // Never leaves the cube: after `step` moves every |coordinate| <= step.
        if (coord + 1 < side && __builtin_add_overflow(next[c + stride[g]], cur[c], &next[c + stride[g]])) {
          throw LimitError("exponent walk: count overflow");
        }
        if (coord > 0 && __builtin_add_overflow(next[c - stride[g]], cur[c], &next[c - stride[g]])) {
          throw LimitError("exponent walk: count overflow");
        }
      }
    }
    cur = std::move(next);
  }

  std::vector<std::pair<std::vector<std::int64_t>, std::uint64_t>> out;
  for (std::size_t c = 0; c < cells; ++c) {
    if (cur[c] == 0) continue;
    std::vector<std::int64_t> v(n);
    for (std::size_t i = 0; i < n; ++i) {
      v[i] = static_cast<std::int64_t>((c / stride[i]) % side) - static_cast<std::int64_t>(ell);
    }
    out.emplace_back(std::move(v), cur[c]);
  }
  return out;
}

BigRational exact_full_rank_probability(std::size_t n, std::size_t m, std::size_t ell,
                                        const ExactGuards& guards) {
  if (n < 1 || m < 1) throw std::invalid_argument("exact probability needs n >= 1 and m >= 1");
  if (n > guards.max_n || m > guards.max_m || ell > guards.max_ell) {
    throw LimitError("exact probability guard exceeded: (n, m, ell) = (" + std::to_string(n) +
                     ", " + std::to_string(m) + ", " + std::to_string(ell) + "), limits (" +
                     std::to_string(guards.max_n) + ", " + std::to_string(guards.max_m) + ", " +
                     std::to_string(guards.max_ell) + ")");
  }
  const auto support = exponent_walk_distribution(n, ell);
  BigInt total = 0;
  for (const auto& [v, c] : support) total += c;

  // Distribution over the span of the first j relator vectors. Every tuple of
  // vectors is accounted for: full rank depends on the tuple only through the
  // span of its prefix plus the last vector.
  std::map<SpanKey, BigInt> states{{SpanKey{}, BigInt(1)}};
  for (std::size_t j = 0; j + 1 < m; ++j) {
    std::map<SpanKey, BigInt> next;
    for (const auto& [key, w] : states) {
      for (const auto& [v, c] : support) next[extend_span(key, v, n)] += w * c;
    }
    states = std::move(next);
  }

  const std::size_t target = std::min(n, m);
  BigInt good = 0;
  for (const auto& [key, w] : states) {
    const std::size_t dim = key.size() / n;
    if (dim == target) {
      good += w * total;
    } else if (dim + 1 == target) {
      BigInt outside = 0;
      for (const auto& [v, c] : support) {
        if (!in_span(key, v, n)) outside += c;
      }
      good += w * outside;
    }
  }
  BigInt all = 1;
  for (std::size_t j = 0; j < m; ++j) all *= total;
  return BigRational(good, all);
}

}  // namespace metab
