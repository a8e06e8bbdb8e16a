#pragma once

// Shift/scale normal form, the three-way complexity classifier for scoring
// vectors, and the built-in families of vectors indexed by m.

#include <map>
#include <optional>
#include <string>
#include <variant>

#include "scoremanip/election.hpp"

namespace scoremanip {

inline ScoringVector shift(const ScoringVector& alpha, const BigInt& k) {
  ScoringVector out = alpha;
  for (auto& x : out.entries) x += k;
  return out;
}

inline ScoringVector scale(const ScoringVector& alpha, const BigInt& k) {
  if (k <= 0) throw Error(ErrorKind::NonPositiveScale, "scale factor " + k.str() + " must be >= 1");
  ScoringVector out = alpha;
  for (auto& x : out.entries) x *= k;
  return out;
}

inline ScoringVector normalize_last_zero(const ScoringVector& alpha) {
  if (alpha.entries.empty()) throw Error(ErrorKind::EmptyScoringVector, "cannot normalize empty vector");
  return shift(alpha, -alpha.entries.back());
}

enum class ClassTag { AllEqual, PluralityLike, Hard };

inline std::string_view to_string(ClassTag tag) {
  switch (tag) {
    case ClassTag::AllEqual: return "AllEqual";
    case ClassTag::PluralityLike: return "PluralityLike";
    case ClassTag::Hard: return "Hard";
  }
  return "?";
}

/// Gadget parameters of a hard vector. On the normalized vector the zeros
/// are exactly the last ell+1 positions and m = ell + r + 3.
struct HardnessParams {
  ScoringVector normalized;
  int ell = 0;
  int r = 0;

  bool operator==(const HardnessParams&) const = default;
};

struct DichotomyClass {
  ClassTag tag = ClassTag::AllEqual;
  std::optional<HardnessParams> hard;

  bool operator==(const DichotomyClass&) const = default;
};

namespace detail {

inline void require_scoring_vector(const ScoringVector& alpha) {
  auto issues = validate_alpha(alpha);
  if (!issues.empty()) throw Error(issues.front().kind, issues.front().message);
}

inline HardnessParams compute_params(const ScoringVector& alpha) {
  HardnessParams hp;
  hp.normalized = normalize_last_zero(alpha);
  const auto m = static_cast<int>(hp.normalized.m());
  int zeros = 0;
  for (const auto& x : hp.normalized.entries) zeros += (x == 0) ? 1 : 0;
  hp.ell = zeros - 1;
  hp.r = m - hp.ell - 3;
  return hp;
}

}  // namespace detail

inline DichotomyClass classify(const ScoringVector& alpha) {
  detail::require_scoring_vector(alpha);
  const auto& e = alpha.entries;
  bool tail_constant = true;
  for (std::size_t i = 2; i < e.size(); ++i) tail_constant = tail_constant && e[i] == e[1];
  if (!tail_constant) return {ClassTag::Hard, detail::compute_params(alpha)};
  if (e.size() == 1 || e[0] == e[1]) return {ClassTag::AllEqual, std::nullopt};
  return {ClassTag::PluralityLike, std::nullopt};
}

inline HardnessParams hardness_params(const ScoringVector& alpha) {
  auto cls = classify(alpha);
  if (cls.tag != ClassTag::Hard) {
    throw Error(ErrorKind::NotHard, "vector is " + std::string(to_string(cls.tag)));
  }
  return *cls.hard;
}

// ---------------------------------------------------------------------------
// Families

struct ScoringFamily {
  enum class Kind { Plurality, Borda, Veto, KApproval, HalfApproval, Constant, Explicit };

  Kind kind = Kind::Plurality;
  int k = 0;                                  // KApproval
  BigInt c = 0;                               // Constant
  std::map<std::size_t, ScoringVector> table;  // Explicit

  static ScoringFamily plurality() { return {Kind::Plurality}; }
  static ScoringFamily borda() { return {Kind::Borda}; }
  static ScoringFamily veto() { return {Kind::Veto}; }
  static ScoringFamily k_approval(int k) {
    if (k < 1) throw Error(ErrorKind::InvalidParameters, "k-approval needs k >= 1");
    return {Kind::KApproval, k};
  }
  static ScoringFamily half_approval() { return {Kind::HalfApproval}; }
  static ScoringFamily constant(BigInt c) { return {Kind::Constant, 0, std::move(c)}; }
  static ScoringFamily explicit_table(std::map<std::size_t, ScoringVector> table) {
    for (const auto& [m, v] : table) {
      if (v.m() != m) throw Error(ErrorKind::DimensionMismatch, "table entry for m = " + std::to_string(m));
      detail::require_scoring_vector(v);
    }
    return {Kind::Explicit, 0, 0, std::move(table)};
  }
};

/// Name in the CLI grammar: plurality, borda, veto, k-approval:k,
/// half-approval, constant:c. Explicit tables have no name.
inline std::string family_name(const ScoringFamily& f) {
  switch (f.kind) {
    case ScoringFamily::Kind::Plurality: return "plurality";
    case ScoringFamily::Kind::Borda: return "borda";
    case ScoringFamily::Kind::Veto: return "veto";
    case ScoringFamily::Kind::KApproval: return "k-approval:" + std::to_string(f.k);
    case ScoringFamily::Kind::HalfApproval: return "half-approval";
    case ScoringFamily::Kind::Constant: return "constant:" + f.c.str();
    case ScoringFamily::Kind::Explicit: return "explicit";
  }
  return "?";
}

inline ScoringVector family_vector(const ScoringFamily& f, std::size_t m) {
  if (m < 1) throw Error(ErrorKind::UnsupportedM, "m must be >= 1");
  ScoringVector v;
  v.entries.assign(m, 0);
  auto ones = [&](std::size_t count) {
    for (std::size_t i = 0; i < count; ++i) v.entries[i] = 1;
  };
  switch (f.kind) {
    case ScoringFamily::Kind::Plurality:
      ones(1);
      break;
    case ScoringFamily::Kind::Borda:
      for (std::size_t i = 0; i < m; ++i) v.entries[i] = m - i;
      break;
    case ScoringFamily::Kind::Veto:
      ones(m - 1);
      break;
    case ScoringFamily::Kind::KApproval:
      if (static_cast<std::size_t>(f.k) > m) {
        throw Error(ErrorKind::UnsupportedM,
                    "k-approval with k = " + std::to_string(f.k) + " needs m >= k, got " + std::to_string(m));
      }
      ones(static_cast<std::size_t>(f.k));
      break;
    case ScoringFamily::Kind::HalfApproval:
      ones(m / 2);
      break;
    case ScoringFamily::Kind::Constant:
      v.entries.assign(m, f.c);
      break;
    case ScoringFamily::Kind::Explicit: {
      auto it = f.table.find(m);
      if (it == f.table.end()) throw Error(ErrorKind::UnsupportedM, "no vector for m = " + std::to_string(m));
      return it->second;
    }
  }
  return v;
}

/// Family-level verdict. When `hard_from` is set, the family is hard for
/// every m >= hard_from and easy (or undefined) below it.
struct FamilyClassification {
  std::optional<std::size_t> hard_from;

  bool always_easy() const noexcept { return !hard_from.has_value(); }
  bool hard_at(std::size_t m) const noexcept { return hard_from && m >= *hard_from; }

  bool operator==(const FamilyClassification&) const = default;
};

inline FamilyClassification classify_family(const ScoringFamily& f) {
  switch (f.kind) {
    case ScoringFamily::Kind::Plurality:
    case ScoringFamily::Kind::Constant:
      return {};
    case ScoringFamily::Kind::Borda:
    case ScoringFamily::Kind::Veto:
      return {3};
    case ScoringFamily::Kind::KApproval:
      // tail is (k-1) ones then (m-k) zeros
      if (f.k == 1) return {};
      return {static_cast<std::size_t>(f.k) + 1};
    case ScoringFamily::Kind::HalfApproval:
      return {4};
    case ScoringFamily::Kind::Explicit:
      throw Error(ErrorKind::ExplicitFamilyUnsupported,
                  "explicit tables are classified per m; use classify(family_vector(f, m))");
  }
  return {};
}

}  // namespace scoremanip
