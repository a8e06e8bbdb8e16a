#pragma once

// Core election model: scoring vectors, weighted ballots, exact tallies and
// winner sets. Candidates are always the integers 1..m.

#include <algorithm>
#include <cstddef>
#include <optional>
#include <span>
#include <string>
#include <vector>

#include "scoremanip/errors.hpp"

namespace scoremanip {

using Candidate = int;

/// A positional scoring vector (alpha_1, ..., alpha_m). Entries are expected
/// to be nonincreasing; validate_alpha() reports when they are not.
struct ScoringVector {
  std::vector<BigInt> entries;

  std::size_t m() const noexcept { return entries.size(); }

  /// 1-based access: entry(1) is the score of a first place.
  const BigInt& entry(std::size_t position) const { return entries.at(position - 1); }

  bool operator==(const ScoringVector&) const = default;
};

inline ScoringVector make_vector(std::initializer_list<long long> values) {
  ScoringVector v;
  v.entries.reserve(values.size());
  for (long long x : values) v.entries.emplace_back(x);
  return v;
}

/// A strict total order, most preferred first.
struct PreferenceOrder {
  std::vector<Candidate> ranking;

  std::size_t size() const noexcept { return ranking.size(); }
  Candidate at_position(std::size_t position) const { return ranking.at(position - 1); }

  /// 1-based position of c, or 0 when absent.
  std::size_t position_of(Candidate c) const {
    auto it = std::find(ranking.begin(), ranking.end(), c);
    return it == ranking.end() ? 0 : static_cast<std::size_t>(it - ranking.begin()) + 1;
  }

  /// True when `x` is ranked strictly above `y`.
  bool prefers(Candidate x, Candidate y) const { return position_of(x) < position_of(y); }

  bool operator==(const PreferenceOrder&) const = default;
};

struct WeightedVote {
  BigInt weight;
  PreferenceOrder order;

  bool operator==(const WeightedVote&) const = default;
};

/// Fixed ballots S, coalition weights T and the distinguished candidate p.
struct ManipulationInstance {
  ScoringVector alpha;
  std::vector<WeightedVote> s_voters;
  std::vector<BigInt> t_weights;
  Candidate p = 1;

  std::size_t m() const noexcept { return alpha.m(); }

  bool operator==(const ManipulationInstance&) const = default;
};

class ScoreTable {
 public:
  ScoreTable() = default;
  explicit ScoreTable(std::vector<BigInt> scores) : scores_(std::move(scores)) {}

  static ScoreTable zeros(std::size_t m) { return ScoreTable(std::vector<BigInt>(m)); }

  std::size_t m() const noexcept { return scores_.size(); }
  const BigInt& operator()(Candidate c) const { return scores_.at(static_cast<std::size_t>(c) - 1); }
  BigInt& operator()(Candidate c) { return scores_.at(static_cast<std::size_t>(c) - 1); }
  const std::vector<BigInt>& values() const noexcept { return scores_; }

  bool operator==(const ScoreTable&) const = default;

 private:
  std::vector<BigInt> scores_;
};

// ---------------------------------------------------------------------------
// Validation

struct ValidationIssue {
  enum class Field { Alpha, P, SVoter, TWeight };

  ErrorKind kind;
  Field field;
  std::size_t index = 0;  // 0-based voter / weight index where relevant
  std::string message;
};

struct ValidationResult {
  std::vector<ValidationIssue> issues;

  bool ok() const noexcept { return issues.empty(); }
};

namespace detail {

/// Checks that `order` is a permutation of 1..m, appending at most one issue.
inline void check_order(const PreferenceOrder& order, std::size_t m, ValidationIssue::Field field,
                        std::size_t index, std::vector<ValidationIssue>& out) {
  std::vector<bool> seen(m + 1, false);
  for (Candidate c : order.ranking) {
    if (c < 1 || static_cast<std::size_t>(c) > m) {
      out.push_back({ErrorKind::CandidateOutOfRange, field, index,
                     "candidate " + std::to_string(c) + " not in 1.." + std::to_string(m)});
      return;
    }
    if (seen[static_cast<std::size_t>(c)]) {
      out.push_back({ErrorKind::NonPermutationOrder, field, index,
                     "candidate " + std::to_string(c) + " repeated"});
      return;
    }
    seen[static_cast<std::size_t>(c)] = true;
  }
  if (order.size() != m) {
    out.push_back({ErrorKind::NonPermutationOrder, field, index,
                   "order lists " + std::to_string(order.size()) + " candidates, expected " +
                       std::to_string(m)});
  }
}

}  // namespace detail

inline std::vector<ValidationIssue> validate_alpha(const ScoringVector& alpha) {
  std::vector<ValidationIssue> issues;
  if (alpha.entries.empty()) {
    issues.push_back({ErrorKind::EmptyScoringVector, ValidationIssue::Field::Alpha, 0,
                      "scoring vector has no entries"});
  }
  for (std::size_t i = 1; i < alpha.m(); ++i) {
    if (alpha.entries[i - 1] < alpha.entries[i]) {
      issues.push_back({ErrorKind::NonMonotoneAlpha, ValidationIssue::Field::Alpha, i,
                        "alpha_" + std::to_string(i) + " < alpha_" + std::to_string(i + 1)});
    }
  }
  return issues;
}

/// Reports every invariant violation of the instance; an empty result means
/// the instance is well formed.
inline ValidationResult validate_instance(const ManipulationInstance& inst) {
  ValidationResult result;
  result.issues = validate_alpha(inst.alpha);
  const std::size_t m = inst.m();
  if (inst.p < 1 || static_cast<std::size_t>(inst.p) > m) {
    result.issues.push_back({ErrorKind::CandidateOutOfRange, ValidationIssue::Field::P, 0,
                             "p = " + std::to_string(inst.p) + " not in 1.." + std::to_string(m)});
  }
  for (std::size_t i = 0; i < inst.s_voters.size(); ++i) {
    const auto& v = inst.s_voters[i];
    if (v.weight < 1) {
      result.issues.push_back({ErrorKind::NonPositiveWeight, ValidationIssue::Field::SVoter, i,
                               "weight " + v.weight.str() + " is not positive"});
    }
    detail::check_order(v.order, m, ValidationIssue::Field::SVoter, i, result.issues);
  }
  for (std::size_t i = 0; i < inst.t_weights.size(); ++i) {
    if (inst.t_weights[i] < 1) {
      result.issues.push_back({ErrorKind::NonPositiveWeight, ValidationIssue::Field::TWeight, i,
                               "weight " + inst.t_weights[i].str() + " is not positive"});
    }
  }
  return result;
}

/// Throws the first violation as an Error.
inline void require_valid(const ManipulationInstance& inst) {
  auto result = validate_instance(inst);
  if (!result.ok()) throw Error(result.issues.front().kind, result.issues.front().message);
}

inline void require_valid_order(const PreferenceOrder& order, std::size_t m) {
  std::vector<ValidationIssue> issues;
  detail::check_order(order, m, ValidationIssue::Field::SVoter, 0, issues);
  if (!issues.empty()) throw Error(issues.front().kind, issues.front().message);
}

// ---------------------------------------------------------------------------
// Tally and winners

/// Adds weight * alpha_{pos(c)} to every candidate c.
inline void accumulate(ScoreTable& table, const BigInt& weight, const PreferenceOrder& order,
                       const ScoringVector& alpha) {
  if (order.size() != alpha.m()) {
    throw Error(ErrorKind::DimensionMismatch, "order of length " + std::to_string(order.size()) +
                                                  " against m = " + std::to_string(alpha.m()));
  }
  for (std::size_t pos = 0; pos < order.size(); ++pos) {
    Candidate c = order.ranking[pos];
    if (c < 1 || static_cast<std::size_t>(c) > alpha.m()) {
      throw Error(ErrorKind::CandidateOutOfRange, "candidate " + std::to_string(c));
    }
    table(c) += weight * alpha.entries[pos];
  }
}

inline ScoreTable tally(std::span<const WeightedVote> votes, const ScoringVector& alpha) {
  ScoreTable table = ScoreTable::zeros(alpha.m());
  for (const auto& v : votes) accumulate(table, v.weight, v.order, alpha);
  return table;
}

/// Every candidate with the maximum score, ascending.
inline std::vector<Candidate> winners(const ScoreTable& t) {
  std::vector<Candidate> out;
  if (t.m() == 0) return out;
  const BigInt& best = *std::max_element(t.values().begin(), t.values().end());
  for (std::size_t i = 0; i < t.m(); ++i) {
    if (t.values()[i] == best) out.push_back(static_cast<Candidate>(i + 1));
  }
  return out;
}

inline std::optional<Candidate> unique_winner(const ScoreTable& t) {
  auto w = winners(t);
  if (w.size() == 1) return w.front();
  return std::nullopt;
}

enum class Target { Winner, UniqueWinner };

/// True when p is a winner (or the sole winner) of the table.
inline bool achieves(const ScoreTable& t, Candidate p, Target target) {
  const BigInt& sp = t(p);
  for (std::size_t i = 0; i < t.m(); ++i) {
    if (static_cast<Candidate>(i + 1) == p) continue;
    const BigInt& other = t.values()[i];
    if (other > sp || (target == Target::UniqueWinner && other == sp)) return false;
  }
  return true;
}

/// Scores of S together with T voting `t_votes` (one order per T weight).
inline ScoreTable tally_with(const ManipulationInstance& inst, std::span<const PreferenceOrder> t_votes) {
  if (t_votes.size() != inst.t_weights.size()) {
    throw Error(ErrorKind::DimensionMismatch, std::to_string(t_votes.size()) + " T votes for " +
                                                  std::to_string(inst.t_weights.size()) + " T weights");
  }
  ScoreTable table = tally(inst.s_voters, inst.alpha);
  for (std::size_t i = 0; i < t_votes.size(); ++i) accumulate(table, inst.t_weights[i], t_votes[i], inst.alpha);
  return table;
}

/// p first, then every other candidate in ascending index order.
inline PreferenceOrder canonical_p_first(Candidate p, std::size_t m) {
  PreferenceOrder order;
  order.ranking.reserve(m);
  order.ranking.push_back(p);
  for (std::size_t c = 1; c <= m; ++c) {
    if (static_cast<Candidate>(c) != p) order.ranking.push_back(static_cast<Candidate>(c));
  }
  return order;
}

}  // namespace scoremanip
