// Copyright 2026 The dpco Authors.
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#pragma once

#include <algorithm>
#include <cmath>
#include <cstddef>
#include <cstdint>
#include <limits>
#include <stdexcept>
#include <vector>

#include "dpco/instances.hpp"
#include "dpco/matching.hpp"
#include "dpco/rng.hpp"

namespace dpco {

/// Privacy budget (epsilon, delta); delta = 0 denotes pure epsilon-DP.
struct PrivacyBudget {
  double epsilon = 0.0;
  double delta = 0.0;

  PrivacyBudget() = default;
  PrivacyBudget(double eps, double del = 0.0) : epsilon(eps), delta(del) {
    detail::require(std::isfinite(eps) && eps > 0.0,
                    "privacy budget: epsilon must be positive");
    detail::require(del >= 0.0 && del < 1.0,
                    "privacy budget: delta must be in [0, 1)");
  }
};

/// One candidate outcome with its query score q(A, r).
struct ScoredCandidate {
  std::int64_t outcome = 0;
  double score = 0.0;
};

/// Selects a candidate with probability proportional to
/// exp(epsilon * score). Scores are shifted by their maximum before
/// exponentiating so epsilon * score cannot overflow. With a score
/// sensitivity of `sensitivity` between adjacent inputs, the selection
/// is 2 * epsilon * sensitivity differentially private.
///
/// `sensitivity` is the caller-asserted bound; it is recorded for the
/// privacy accounting of callers and is not used in the sampling
/// itself. epsilon = 0 yields the uniform distribution.
inline std::size_t exp_mechanism_index(const std::vector<double>& scores,
                                       double epsilon, RngStream& rng) {
  if (scores.empty()) {
    throw std::invalid_argument("exp_mechanism: no candidates");
  }
  if (!std::isfinite(epsilon) || epsilon < 0.0) {
    throw std::invalid_argument("exp_mechanism: epsilon must be >= 0");
  }
  double max_scaled = -std::numeric_limits<double>::infinity();
  for (double s : scores) {
    if (!std::isfinite(s)) {
      throw std::invalid_argument("exp_mechanism: scores must be finite");
    }
    max_scaled = std::max(max_scaled, epsilon * s);
  }
  std::vector<double> weights(scores.size());
  double total = 0.0;
  for (std::size_t i = 0; i < scores.size(); ++i) {
    weights[i] = std::exp(epsilon * scores[i] - max_scaled);
    total += weights[i];
  }
  double u = rng.next_double() * total;
  double acc = 0.0;
  for (std::size_t i = 0; i + 1 < weights.size(); ++i) {
    acc += weights[i];
    if (u < acc) return i;
  }
  return weights.size() - 1;
}

inline std::int64_t exp_mechanism(const std::vector<ScoredCandidate>& candidates,
                                  double epsilon, double sensitivity,
                                  RngStream& rng) {
  detail::require(std::isfinite(sensitivity) && sensitivity > 0.0,
                  "exp_mechanism: sensitivity must be positive");
  std::vector<double> scores;
  scores.reserve(candidates.size());
  for (const auto& c : candidates) scores.push_back(c.score);
  return candidates[exp_mechanism_index(scores, epsilon, rng)].outcome;
}

/// Exact selection probabilities of the exponential mechanism; shares
/// the max-subtraction arithmetic with the sampler so the audit module
/// reproduces it bit for bit.
inline std::vector<double> exp_mechanism_probabilities(
    const std::vector<double>& scores, double epsilon) {
  detail::require(!scores.empty(), "exp_mechanism: no candidates");
  double max_scaled = -std::numeric_limits<double>::infinity();
  for (double s : scores) {
    detail::require(std::isfinite(s), "exp_mechanism: scores must be finite");
    max_scaled = std::max(max_scaled, epsilon * s);
  }
  std::vector<double> probs(scores.size());
  double total = 0.0;
  for (std::size_t i = 0; i < scores.size(); ++i) {
    probs[i] = std::exp(epsilon * scores[i] - max_scaled);
    total += probs[i];
  }
  for (double& p : probs) p /= total;
  return probs;
}

/// Tail bound for the exponential mechanism over a discrete range:
/// Pr[score < max - ln(|R| / |R_opt|) / eps - t / eps] <= exp(-t).
/// Returns exp(-t); test suites compare empirical violation frequencies
/// against it.
inline double exp_mechanism_tail_bound(std::size_t num_candidates,
                                       std::size_t num_optimal,
                                       double /*epsilon*/, double t) {
  detail::require(num_optimal >= 1, "tail bound: need at least one optimum");
  detail::require(num_optimal <= num_candidates,
                  "tail bound: more optima than candidates");
  detail::require(t >= 0.0, "tail bound: t must be nonnegative");
  return std::exp(-t);
}

/// The suboptimality threshold the tail bound refers to:
/// max_score - ln(|R|/|R_opt|)/eps - t/eps.
inline double exp_mechanism_tail_threshold(std::size_t num_candidates,
                                           std::size_t num_optimal,
                                           double epsilon, double t,
                                           double max_score) {
  detail::require(num_optimal >= 1 && num_optimal <= num_candidates,
                  "tail threshold: bad candidate counts");
  detail::require(epsilon > 0.0, "tail threshold: epsilon must be positive");
  return max_score -
         std::log(static_cast<double>(num_candidates) /
                  static_cast<double>(num_optimal)) /
             epsilon -
         t / epsilon;
}

/// Draw from the symmetric Laplace distribution with density
/// (1/2b) exp(-|x|/b).
inline double laplace_noise(double scale, RngStream& rng) {
  detail::require(std::isfinite(scale) && scale > 0.0,
                  "laplace_noise: scale must be positive");
  // Inverse CDF on u uniform in (-1/2, 1/2].
  double u = 0.5 - rng.next_double();
  double sign = u < 0.0 ? -1.0 : 1.0;
  return -scale * sign * std::log(1.0 - 2.0 * std::abs(u));
}

/// Private estimate of the vertex cover size: twice the size of a
/// maximum matching (a 2-approximation of OPT with edge sensitivity 2)
/// plus Laplace(2/epsilon) noise.
inline double private_vc_size_estimate(const Graph& graph, double epsilon,
                                       RngStream& rng) {
  detail::require(std::isfinite(epsilon) && epsilon > 0.0,
                  "private_vc_size_estimate: epsilon must be positive");
  std::size_t matching = BlossomMatcher::maximum_matching_size(
      static_cast<std::size_t>(graph.n()), graph.edges());
  return 2.0 * static_cast<double>(matching) +
         laplace_noise(2.0 / epsilon, rng);
}

}  // namespace dpco
