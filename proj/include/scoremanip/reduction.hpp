#pragma once

// PARTITION to weighted coalition manipulation for every hard scoring vector:
// gadget construction, witness translation in both directions, a subset-sum
// oracle and an end-to-end checker.

#include <cstddef>
#include <optional>
#include <set>
#include <vector>

#include "scoremanip/dichotomy.hpp"
#include "scoremanip/election.hpp"
#include "scoremanip/manipulation.hpp"

namespace scoremanip {

struct PartitionInstance {
  std::vector<BigInt> ks;

  BigInt total() const {
    BigInt sum = 0;
    for (const auto& k : ks) sum += k;
    return sum;
  }

  /// K, when the total is even.
  std::optional<BigInt> half() const {
    BigInt sum = total();
    if (sum % 2 != 0) return std::nullopt;
    return sum / 2;
  }

  bool operator==(const PartitionInstance&) const = default;
};

inline void require_valid(const PartitionInstance& part) {
  if (part.ks.empty()) throw Error(ErrorKind::InvalidParameters, "partition needs at least one integer");
  for (const auto& k : part.ks) {
    if (k < 1) throw Error(ErrorKind::InvalidParameters, "partition integer " + k.str() + " is not positive");
  }
}

/// 1-based index subset of the partition integers.
using IndexSet = std::set<std::size_t>;

inline BigInt subset_sum(const PartitionInstance& part, const IndexSet& indices) {
  BigInt sum = 0;
  for (std::size_t i : indices) {
    if (i < 1 || i > part.ks.size()) throw Error(ErrorKind::IndexOutOfRange, "index " + std::to_string(i));
    sum += part.ks[i - 1];
  }
  return sum;
}

/// Candidate roles: p = 1, a = 2, b = 3, c_1..c_ell, then d_1..d_r.
struct RoleMap {
  int ell = 0;
  int r = 0;

  std::size_t m() const noexcept { return static_cast<std::size_t>(ell + r + 3); }
  static constexpr Candidate p() noexcept { return 1; }
  static constexpr Candidate a() noexcept { return 2; }
  static constexpr Candidate b() noexcept { return 3; }
  Candidate c(int i) const noexcept { return 3 + i; }
  Candidate d(int i) const noexcept { return 3 + ell + i; }

  std::vector<Candidate> ds() const {
    std::vector<Candidate> out;
    for (int i = 1; i <= r; ++i) out.push_back(d(i));
    return out;
  }
  std::vector<Candidate> cs() const {
    std::vector<Candidate> out;
    for (int i = 1; i <= ell; ++i) out.push_back(c(i));
    return out;
  }

  bool operator==(const RoleMap&) const = default;
};

enum class ReductionCase { EllNotOne, EllIsOne };

inline std::string_view to_string(ReductionCase c) {
  return c == ReductionCase::EllIsOne ? "ELL_EQ_1" : "ELL_NE_1";
}

struct ReductionArtifact {
  ManipulationInstance instance;  // S = S1 followed by S2
  std::size_t s1_count = 0;
  RoleMap roles;
  ReductionCase case_tag = ReductionCase::EllNotOne;
  BigInt K;
  BigInt s;       // S2 ballot weight, 0 when r = 0
  BigInt t_unit;  // T weight i is t_unit * k_i
  PartitionInstance source;

  int ell() const noexcept { return roles.ell; }
  int r() const noexcept { return roles.r; }
  std::span<const WeightedVote> s1() const { return {instance.s_voters.data(), s1_count}; }
  std::span<const WeightedVote> s2() const {
    return {instance.s_voters.data() + s1_count, instance.s_voters.size() - s1_count};
  }
};

namespace detail {

inline void append(std::vector<Candidate>& dst, const std::vector<Candidate>& src) {
  dst.insert(dst.end(), src.begin(), src.end());
}

/// Checks that (ell, r) are the hardness parameters of a normalized vector.
inline void require_gadget_params(const ScoringVector& alpha_norm, int ell, int r) {
  auto cls = classify(alpha_norm);
  if (cls.tag != ClassTag::Hard || cls.hard->normalized != alpha_norm || cls.hard->ell != ell ||
      cls.hard->r != r) {
    throw Error(ErrorKind::InvalidParameters, "(ell, r) = (" + std::to_string(ell) + ", " + std::to_string(r) +
                                                  ") do not match a normalized hard vector");
  }
}

/// [x_0 > ... > x_{k-1}] cyclically shifted t positions to the right.
inline std::vector<Candidate> rotated(const std::vector<Candidate>& xs, std::size_t t) {
  std::vector<Candidate> out(xs.size());
  for (std::size_t j = 0; j < xs.size(); ++j) out[j] = xs[(t + j) % xs.size()];
  return out;
}

}  // namespace detail

/// Padding gadget: (ell+3)*r ballots of weight s that tie p, a, b and the
/// c's while keeping every d at least s below them. Empty when r = 0.
inline std::vector<WeightedVote> build_s2(const ScoringVector& alpha_norm, int ell, int r, const BigInt& s) {
  detail::require_gadget_params(alpha_norm, ell, r);
  std::vector<WeightedVote> out;
  if (r == 0) return out;
  if (s < 1) throw Error(ErrorKind::InvalidParameters, "s must be >= 1 when r > 0");
  RoleMap roles{ell, r};
  std::vector<Candidate> head{RoleMap::a(), RoleMap::b(), RoleMap::p()};
  detail::append(head, roles.cs());
  const auto tail = roles.ds();
  for (std::size_t i = 0; i < head.size(); ++i) {
    for (std::size_t j = 0; j < tail.size(); ++j) {
      WeightedVote v{s, {detail::rotated(head, i)}};
      detail::append(v.order.ranking, detail::rotated(tail, j));
      out.push_back(std::move(v));
    }
  }
  return out;
}

/// Core gadget over p, a, b and the c's. Uses the two-ballot-plus-cycle
/// construction when ell != 1 and the eight-ballot one when ell == 1.
inline std::vector<WeightedVote> build_s1(const ScoringVector& alpha_norm, int ell, int r, const BigInt& K) {
  detail::require_gadget_params(alpha_norm, ell, r);
  if (K < 1) throw Error(ErrorKind::InvalidParameters, "K must be >= 1");
  RoleMap roles{ell, r};
  const BigInt& a1 = alpha_norm.entry(1);
  const BigInt& ar2 = alpha_norm.entry(static_cast<std::size_t>(r) + 2);
  const auto ds = roles.ds();
  const Candidate p = RoleMap::p(), a = RoleMap::a(), b = RoleMap::b();

  auto ballot = [&](const BigInt& w, Candidate top, std::vector<Candidate> after_ds) {
    WeightedVote v{w, {{top}}};
    detail::append(v.order.ranking, ds);
    detail::append(v.order.ranking, after_ds);
    return v;
  };

  std::vector<WeightedVote> out;
  if (ell != 1) {
    const BigInt heavy = 2 * K * (2 * a1 - ar2) - 1;
    auto tail = roles.cs();
    std::vector<Candidate> after_a{b, p}, after_b{a, p};
    detail::append(after_a, tail);
    detail::append(after_b, tail);
    out.push_back(ballot(heavy, a, after_a));
    out.push_back(ballot(heavy, b, after_b));
    const BigInt light = 4 * a1 * K - 1;
    for (int i = 1; i <= ell; ++i) {
      const Candidate next = roles.c(1 + (i % ell));
      std::vector<Candidate> after{next, a, b, p};
      for (int j = 1; j <= ell; ++j) {
        if (roles.c(j) != roles.c(i) && roles.c(j) != next) after.push_back(roles.c(j));
      }
      out.push_back(ballot(light, roles.c(i), after));
    }
  } else {
    const Candidate c1 = roles.c(1);
    const BigInt heavy = 3 * K * (2 * a1 - ar2) - 1;
    out.push_back(ballot(heavy, a, {b, p, c1}));
    out.push_back(ballot(heavy, b, {a, p, c1}));
    const BigInt light = 3 * a1 * K - 1;
    out.push_back(ballot(light, c1, {a, b, p}));
    out.push_back(ballot(light, a, {c1, b, p}));
    out.push_back(ballot(light, c1, {b, a, p}));
    out.push_back(ballot(light, b, {c1, a, p}));
    out.push_back(ballot(light, c1, {p, a, b}));
    out.push_back(ballot(light, p, {c1, a, b}));
  }
  for (const auto& v : out) {
    if (v.weight < 1) throw Error(ErrorKind::InvalidParameters, "gadget weight " + v.weight.str() + " < 1");
  }
  return out;
}

/// Builds the manipulation instance whose answer equals the partition answer.
inline ReductionArtifact reduce(const ScoringVector& alpha, const PartitionInstance& part) {
  require_valid(part);
  const HardnessParams hp = hardness_params(alpha);
  auto K = part.half();
  if (!K) throw Error(ErrorKind::OddSum, "partition integers sum to odd " + part.total().str());

  ReductionArtifact art;
  art.roles = {hp.ell, hp.r};
  art.case_tag = hp.ell == 1 ? ReductionCase::EllIsOne : ReductionCase::EllNotOne;
  art.K = *K;
  art.source = part;

  const ScoringVector& alpha_norm = hp.normalized;
  auto s1 = build_s1(alpha_norm, hp.ell, hp.r, art.K);
  art.s1_count = s1.size();
  art.s = 0;
  if (hp.r > 0) {
    const BigInt d1_score = tally(s1, alpha_norm)(art.roles.d(1));
    art.s = art.case_tag == ReductionCase::EllNotOne ? d1_score + 1 : d1_score;
  }
  auto s2 = build_s2(alpha_norm, hp.ell, hp.r, art.s);

  const BigInt pair = alpha_norm.entry(1) + alpha_norm.entry(static_cast<std::size_t>(hp.r) + 2);
  art.t_unit = (art.case_tag == ReductionCase::EllNotOne ? 2 : 3) * pair;

  art.instance.alpha = alpha_norm;
  art.instance.p = RoleMap::p();
  art.instance.s_voters = std::move(s1);
  art.instance.s_voters.insert(art.instance.s_voters.end(), s2.begin(), s2.end());
  for (const auto& k : part.ks) art.instance.t_weights.push_back(art.t_unit * k);
  return art;
}

/// T ballots for a subset I: voters in I put a above b, the rest b above a.
inline std::vector<PreferenceOrder> forward_witness(const ReductionArtifact& art, const IndexSet& indices) {
  const std::size_t n = art.source.ks.size();
  for (std::size_t i : indices) {
    if (i < 1 || i > n) throw Error(ErrorKind::IndexOutOfRange, "index " + std::to_string(i) + " not in 1.." +
                                                                    std::to_string(n));
  }
  std::vector<PreferenceOrder> votes;
  for (std::size_t i = 1; i <= n; ++i) {
    PreferenceOrder o{{RoleMap::p()}};
    detail::append(o.ranking, art.roles.ds());
    if (indices.contains(i)) {
      o.ranking.push_back(RoleMap::a());
      o.ranking.push_back(RoleMap::b());
    } else {
      o.ranking.push_back(RoleMap::b());
      o.ranking.push_back(RoleMap::a());
    }
    detail::append(o.ranking, art.roles.cs());
    votes.push_back(std::move(o));
  }
  return votes;
}

/// Recovers a subset from T ballots under which p wins: after moving p to
/// the top, the voters ranking a above b.
inline IndexSet extract_witness(const ReductionArtifact& art, const std::vector<PreferenceOrder>& t_votes) {
  for (const auto& o : t_votes) require_valid_order(o, art.instance.m());
  if (!achieves(tally_with(art.instance, t_votes), art.instance.p, Target::Winner)) {
    throw Error(ErrorKind::NotAWinner, "p does not win with the supplied T ballots");
  }
  auto normalized = normalize_p_first(t_votes, art.instance.p);
  IndexSet out;
  for (std::size_t i = 0; i < normalized.size(); ++i) {
    if (normalized[i].prefers(RoleMap::a(), RoleMap::b())) out.insert(i + 1);
  }
  return out;
}

/// Subset-sum decision with reconstruction. Suffix reachability sets over
/// sums <= K; the reconstruction takes index i whenever the remainder is
/// still reachable, which yields the lexicographically smallest subset.
inline std::optional<IndexSet> solve_partition(const PartitionInstance& part) {
  require_valid(part);
  auto K = part.half();
  if (!K) return std::nullopt;
  const std::size_t n = part.ks.size();
  std::vector<std::set<BigInt>> reach(n + 1);
  reach[n].insert(0);
  for (std::size_t i = n; i-- > 0;) {
    reach[i] = reach[i + 1];
    for (const auto& x : reach[i + 1]) {
      BigInt y = x + part.ks[i];
      if (y <= *K) reach[i].insert(std::move(y));
    }
  }
  if (!reach[0].contains(*K)) return std::nullopt;
  IndexSet chosen;
  BigInt remaining = *K;
  for (std::size_t i = 0; i < n; ++i) {
    if (remaining >= part.ks[i] && reach[i + 1].contains(remaining - part.ks[i])) {
      chosen.insert(i + 1);
      remaining -= part.ks[i];
    }
  }
  return chosen;
}

struct VerificationReport {
  std::optional<IndexSet> partition;  // oracle subset, if any
  bool mp_yes = false;
  bool ump_yes = false;
  std::optional<std::vector<PreferenceOrder>> mp_witness;
  std::uint64_t nodes = 0;

  bool forward_checked = false;
  bool forward_unique = false;  // forward ballots make p the sole winner
  std::optional<IndexSet> extracted;
  std::optional<BigInt> extracted_sum;
  bool mp_witness_ties = false;  // p only ties under the MP witness

  bool pass = false;

  bool partition_yes() const noexcept { return partition.has_value(); }
};

/// Runs both oracles on one (alpha, partition) pair and checks that their
/// answers and witnesses agree in both directions.
inline VerificationReport verify_reduction(const ScoringVector& alpha, const PartitionInstance& part,
                                           std::uint64_t node_cap = kDefaultNodeCap) {
  const ReductionArtifact art = reduce(alpha, part);
  VerificationReport rep;
  rep.partition = solve_partition(part);

  auto mp = brute_force(art.instance, Target::Winner, node_cap);
  auto ump = brute_force(art.instance, Target::UniqueWinner, node_cap);
  rep.mp_yes = mp.yes;
  rep.ump_yes = ump.yes;
  rep.mp_witness = mp.witness;
  rep.nodes = mp.nodes + ump.nodes;

  bool ok = rep.mp_yes == rep.partition_yes() && rep.ump_yes == rep.partition_yes();

  if (rep.partition) {
    rep.forward_checked = true;
    auto votes = forward_witness(art, *rep.partition);
    rep.forward_unique = achieves(tally_with(art.instance, votes), art.instance.p, Target::UniqueWinner);
    ok = ok && rep.forward_unique;
  }
  if (mp.yes) {
    rep.mp_witness_ties = !achieves(tally_with(art.instance, *mp.witness), art.instance.p, Target::UniqueWinner);
    rep.extracted = extract_witness(art, *mp.witness);
    rep.extracted_sum = subset_sum(part, *rep.extracted);
    ok = ok && *rep.extracted_sum == art.K;
  }
  if (ump.yes) {
    auto from_unique = extract_witness(art, *ump.witness);
    ok = ok && subset_sum(part, from_unique) == art.K;
  }
  rep.pass = ok;
  return rep;
}

}  // namespace scoremanip
