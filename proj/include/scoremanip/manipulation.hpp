#pragma once

// Coalition manipulation: the polynomial-time deciders for the two easy
// classes, an exact exhaustive solver, and a dispatcher that routes by class.

#include <algorithm>
#include <cstdint>
#include <optional>
#include <vector>

#include "scoremanip/dichotomy.hpp"
#include "scoremanip/election.hpp"

namespace scoremanip {

inline constexpr std::uint64_t kDefaultNodeCap = 10'000'000;

enum class SolverMode { AllEqual, PluralityLike, BruteForce };

inline std::string_view to_string(SolverMode mode) {
  switch (mode) {
    case SolverMode::AllEqual: return "all-equal";
    case SolverMode::PluralityLike: return "plurality-like";
    case SolverMode::BruteForce: return "brute-force";
  }
  return "?";
}

struct ManipulationAnswer {
  bool yes = false;
  std::optional<std::vector<PreferenceOrder>> witness;  // one order per T weight, iff yes
  SolverMode mode = SolverMode::BruteForce;
  std::uint64_t nodes = 0;  // ballot assignments evaluated, brute force only
};

/// Moves p to the top of every order, keeping the others in their relative
/// order. Never lowers p's score nor raises anyone else's.
inline std::vector<PreferenceOrder> normalize_p_first(std::vector<PreferenceOrder> votes, Candidate p) {
  for (auto& v : votes) {
    auto it = std::find(v.ranking.begin(), v.ranking.end(), p);
    if (it != v.ranking.end()) std::rotate(v.ranking.begin(), it, it + 1);
  }
  return votes;
}

namespace detail {

inline void require_class(const ManipulationInstance& inst, ClassTag expected) {
  require_valid(inst);
  auto cls = classify(inst.alpha);
  if (cls.tag != expected) {
    throw Error(ErrorKind::WrongClass, "expected " + std::string(to_string(expected)) + ", vector is " +
                                           std::string(to_string(cls.tag)));
  }
}

inline std::vector<PreferenceOrder> canonical_witness(const ManipulationInstance& inst) {
  return std::vector<PreferenceOrder>(inst.t_weights.size(), canonical_p_first(inst.p, inst.m()));
}

inline BigInt factorial(std::size_t n) {
  BigInt f = 1;
  for (std::size_t i = 2; i <= n; ++i) f *= i;
  return f;
}

}  // namespace detail

inline ManipulationAnswer solve_all_equal(const ManipulationInstance& inst, Target target) {
  detail::require_class(inst, ClassTag::AllEqual);
  ManipulationAnswer ans;
  ans.mode = SolverMode::AllEqual;
  ans.yes = target == Target::Winner || inst.m() == 1;
  if (ans.yes) ans.witness = detail::canonical_witness(inst);
  return ans;
}

/// Every T voter ranks p first; p can win under some casting iff it wins
/// under this one.
inline ManipulationAnswer solve_plurality_like(const ManipulationInstance& inst, Target target) {
  detail::require_class(inst, ClassTag::PluralityLike);
  ManipulationAnswer ans;
  ans.mode = SolverMode::PluralityLike;
  auto votes = detail::canonical_witness(inst);
  ans.yes = achieves(tally_with(inst, votes), inst.p, target);
  if (ans.yes) ans.witness = std::move(votes);
  return ans;
}

/// Exhaustive search over p-first ballots for every T voter. Voter 1 is the
/// most significant digit; each voter walks the orders of the other
/// candidates lexicographically. The first satisfying assignment is returned.
/// `node_cap` bounds the number of (partial or complete) assignments whose
/// tally is evaluated; subtrees where a rival already beats p are skipped.
inline ManipulationAnswer brute_force(const ManipulationInstance& inst, Target target,
                                      std::uint64_t node_cap = kDefaultNodeCap) {
  require_valid(inst);
  const std::size_t m = inst.m();
  const std::size_t n = inst.t_weights.size();
  const Candidate p = inst.p;

  // Shifting to a nonnegative vector keeps winners intact and makes partial
  // tallies monotone, which licenses the pruning below.
  const ScoringVector alpha = normalize_last_zero(inst.alpha);

  std::vector<Candidate> rest;
  for (std::size_t c = 1; c <= m; ++c)
    if (static_cast<Candidate>(c) != p) rest.push_back(static_cast<Candidate>(c));

  // products[i][j] = w_i * alpha_{j+1}
  std::vector<std::vector<BigInt>> products(n, std::vector<BigInt>(m));
  BigInt p_final = tally(inst.s_voters, alpha)(p);
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = 0; j < m; ++j) products[i][j] = inst.t_weights[i] * alpha.entries[j];
    p_final += products[i][0];
  }

  auto beaten = [&](const ScoreTable& t) {
    for (Candidate c : rest) {
      if (t(c) > p_final || (target == Target::UniqueWinner && t(c) == p_final)) return true;
    }
    return false;
  };

  ManipulationAnswer ans;
  ans.mode = SolverMode::BruteForce;

  std::vector<ScoreTable> level(n + 1);
  level[0] = tally(inst.s_voters, alpha);
  level[0](p) = p_final;
  std::vector<std::vector<Candidate>> choice(n, rest);

  // Iterative odometer: depth d holds the current permutation of `rest` for
  // voter d; next_permutation advances it.
  std::size_t depth = 0;
  std::vector<bool> fresh(n, true);
  if (beaten(level[0])) return ans;  // even with no T contributions someone beats p
  if (n == 0) {
    ans.nodes = 1;
    ans.yes = true;
    ans.witness = std::vector<PreferenceOrder>{};
    return ans;
  }
  while (true) {
    bool advanced;
    if (fresh[depth]) {
      std::sort(choice[depth].begin(), choice[depth].end());
      fresh[depth] = false;
      advanced = true;
    } else {
      advanced = std::next_permutation(choice[depth].begin(), choice[depth].end());
    }
    if (!advanced) {
      fresh[depth] = true;
      if (depth == 0) break;
      --depth;
      continue;
    }
    if (ans.nodes == node_cap) {
      BigInt bound = 1;
      BigInt per_voter = detail::factorial(m - 1);
      for (std::size_t i = 0; i < n; ++i) bound *= per_voter;
      throw CapExhaustedError(node_cap, bound);
    }
    ++ans.nodes;
    ScoreTable& t = level[depth + 1];
    t = level[depth];
    for (std::size_t j = 0; j < rest.size(); ++j) t(choice[depth][j]) += products[depth][j + 1];
    if (beaten(t)) continue;
    if (depth + 1 < n) {
      ++depth;
      continue;
    }
    if (achieves(t, p, target)) {
      ans.yes = true;
      std::vector<PreferenceOrder> witness(n);
      for (std::size_t i = 0; i < n; ++i) {
        witness[i].ranking.push_back(p);
        witness[i].ranking.insert(witness[i].ranking.end(), choice[i].begin(), choice[i].end());
      }
      ans.witness = std::move(witness);
      return ans;
    }
  }
  return ans;
}

/// Routes by the dichotomy class of the instance's vector.
inline ManipulationAnswer solve(const ManipulationInstance& inst, Target target,
                                std::uint64_t node_cap = kDefaultNodeCap) {
  require_valid(inst);
  switch (classify(inst.alpha).tag) {
    case ClassTag::AllEqual: return solve_all_equal(inst, target);
    case ClassTag::PluralityLike: return solve_plurality_like(inst, target);
    case ClassTag::Hard: return brute_force(inst, target, node_cap);
  }
  return {};
}

/// Generates the family's vector for m candidates, then solves.
inline ManipulationAnswer solve(const ScoringFamily& family, std::size_t m, ManipulationInstance inst,
                                Target target, std::uint64_t node_cap = kDefaultNodeCap) {
  inst.alpha = family_vector(family, m);
  return solve(inst, target, node_cap);
}

}  // namespace scoremanip
