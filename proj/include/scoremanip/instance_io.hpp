#pragma once

// Line-oriented text formats.
//
// Instance file:
//   alpha <a_1> ... <a_m>      | family <name> <m>
//   p <candidate>
//   s <weight> <c_1> ... <c_m>   (zero or more)
//   t <weight>                   (zero or more)
// Witness file:
//   t-vote <index> <c_1> ... <c_m>   (one per T voter, index 1..|T|)
// '#' starts a comment. Reduction artifacts are instance files with extra
// "#@ key value" comment lines carrying the bookkeeping.

#include <map>
#include <optional>
#include <sstream>
#include <string>
#include <string_view>
#include <vector>

#include "scoremanip/dichotomy.hpp"
#include "scoremanip/election.hpp"
#include "scoremanip/reduction.hpp"

namespace scoremanip {

class ParseError : public Error {
 public:
  ParseError(std::size_t line, ErrorKind kind, const std::string& message)
      : Error(kind, "line " + std::to_string(line) + ": " + message), line_(line) {}

  /// 1-based line number; 0 when the problem is not tied to a line.
  std::size_t line() const noexcept { return line_; }

 private:
  std::size_t line_;
};

inline std::optional<BigInt> parse_bigint(std::string_view text) {
  std::size_t start = (!text.empty() && (text[0] == '-' || text[0] == '+')) ? 1 : 0;
  if (start == text.size()) return std::nullopt;
  for (std::size_t i = start; i < text.size(); ++i) {
    if (text[i] < '0' || text[i] > '9') return std::nullopt;
  }
  BigInt value(std::string(text.substr(start)));
  return text[0] == '-' ? BigInt(-value) : value;
}

/// Splits on whitespace.
inline std::vector<std::string> tokenize(std::string_view line) {
  std::vector<std::string> out;
  std::istringstream in{std::string(line)};
  for (std::string tok; in >> tok;) out.push_back(tok);
  return out;
}

inline std::string strip_comment(std::string_view line) {
  auto hash = line.find('#');
  return std::string(hash == std::string_view::npos ? line : line.substr(0, hash));
}

/// Parses a family name from the CLI grammar.
inline ScoringFamily parse_family(std::string_view name) {
  if (name == "plurality") return ScoringFamily::plurality();
  if (name == "borda") return ScoringFamily::borda();
  if (name == "veto") return ScoringFamily::veto();
  if (name == "half-approval") return ScoringFamily::half_approval();
  auto with_arg = [&](std::string_view prefix) -> std::optional<BigInt> {
    if (!name.starts_with(prefix)) return std::nullopt;
    auto v = parse_bigint(name.substr(prefix.size()));
    if (!v) throw Error(ErrorKind::Parse, "bad argument in family '" + std::string(name) + "'");
    return v;
  };
  if (auto k = with_arg("k-approval:")) {
    if (*k < 1 || *k > 1'000'000) throw Error(ErrorKind::InvalidParameters, "k-approval needs 1 <= k");
    return ScoringFamily::k_approval(k->convert_to<int>());
  }
  if (auto c = with_arg("constant:")) return ScoringFamily::constant(*c);
  throw Error(ErrorKind::Parse, "unknown family '" + std::string(name) + "'");
}

namespace detail {

inline BigInt parse_number(const std::string& tok, std::size_t line) {
  auto v = parse_bigint(tok);
  if (!v) throw ParseError(line, ErrorKind::Parse, "expected an integer, got '" + tok + "'");
  return *v;
}

inline Candidate parse_candidate(const std::string& tok, std::size_t line) {
  BigInt v = parse_number(tok, line);
  if (v < -1'000'000'000 || v > 1'000'000'000) {
    throw ParseError(line, ErrorKind::CandidateOutOfRange, "candidate " + tok + " out of range");
  }
  return v.convert_to<int>();
}

inline PreferenceOrder parse_order(const std::vector<std::string>& toks, std::size_t from, std::size_t line) {
  PreferenceOrder o;
  for (std::size_t i = from; i < toks.size(); ++i) o.ranking.push_back(parse_candidate(toks[i], line));
  return o;
}

inline void write_order(std::ostream& out, const PreferenceOrder& o) {
  for (Candidate c : o.ranking) out << ' ' << c;
}

}  // namespace detail

inline ManipulationInstance parse_instance(std::string_view text) {
  ManipulationInstance inst;
  std::size_t alpha_line = 0, p_line = 0;
  std::vector<std::size_t> s_lines, t_lines;
  std::istringstream in{std::string(text)};
  std::size_t lineno = 0;
  for (std::string raw; std::getline(in, raw);) {
    ++lineno;
    auto toks = tokenize(strip_comment(raw));
    if (toks.empty()) continue;
    const std::string& head = toks[0];
    if (head == "alpha" || head == "family") {
      if (alpha_line != 0) {
        throw ParseError(lineno, ErrorKind::Parse, "second alpha/family directive (first on line " +
                                                       std::to_string(alpha_line) + ")");
      }
      alpha_line = lineno;
      if (head == "alpha") {
        if (toks.size() < 2) throw ParseError(lineno, ErrorKind::EmptyScoringVector, "alpha needs entries");
        for (std::size_t i = 1; i < toks.size(); ++i) inst.alpha.entries.push_back(detail::parse_number(toks[i], lineno));
      } else {
        if (toks.size() != 3) throw ParseError(lineno, ErrorKind::Parse, "usage: family <name> <m>");
        BigInt m = detail::parse_number(toks[2], lineno);
        if (m < 1 || m > 1'000'000) throw ParseError(lineno, ErrorKind::UnsupportedM, "m = " + toks[2]);
        try {
          inst.alpha = family_vector(parse_family(toks[1]), m.convert_to<std::size_t>());
        } catch (const ParseError&) {
          throw;
        } catch (const Error& e) {
          throw ParseError(lineno, e.kind(), e.what());
        }
      }
    } else if (head == "p") {
      if (p_line != 0) throw ParseError(lineno, ErrorKind::Parse, "second p directive");
      if (toks.size() != 2) throw ParseError(lineno, ErrorKind::Parse, "usage: p <candidate>");
      p_line = lineno;
      inst.p = detail::parse_candidate(toks[1], lineno);
    } else if (head == "s") {
      if (toks.size() < 3) throw ParseError(lineno, ErrorKind::Parse, "usage: s <weight> <c1> ... <cm>");
      inst.s_voters.push_back({detail::parse_number(toks[1], lineno), detail::parse_order(toks, 2, lineno)});
      s_lines.push_back(lineno);
    } else if (head == "t") {
      if (toks.size() != 2) throw ParseError(lineno, ErrorKind::Parse, "usage: t <weight>");
      inst.t_weights.push_back(detail::parse_number(toks[1], lineno));
      t_lines.push_back(lineno);
    } else {
      throw ParseError(lineno, ErrorKind::Parse, "unknown directive '" + head + "'");
    }
  }
  if (alpha_line == 0) throw ParseError(0, ErrorKind::Parse, "missing alpha or family directive");
  if (p_line == 0) throw ParseError(0, ErrorKind::Parse, "missing p directive");

  auto result = validate_instance(inst);
  if (!result.ok()) {
    const auto& issue = result.issues.front();
    std::size_t line = 0;
    switch (issue.field) {
      case ValidationIssue::Field::Alpha: line = alpha_line; break;
      case ValidationIssue::Field::P: line = p_line; break;
      case ValidationIssue::Field::SVoter: line = s_lines.at(issue.index); break;
      case ValidationIssue::Field::TWeight: line = t_lines.at(issue.index); break;
    }
    throw ParseError(line, issue.kind, issue.message);
  }
  return inst;
}

/// Canonical form: alpha, p, s-lines, t-lines.
inline std::string serialize_instance(const ManipulationInstance& inst) {
  std::ostringstream out;
  out << "alpha";
  for (const auto& a : inst.alpha.entries) out << ' ' << a;
  out << "\np " << inst.p << '\n';
  for (const auto& v : inst.s_voters) {
    out << "s " << v.weight;
    detail::write_order(out, v.order);
    out << '\n';
  }
  for (const auto& w : inst.t_weights) out << "t " << w << '\n';
  return out.str();
}

/// Parses T ballots for an instance with `t_count` T voters over m candidates.
inline std::vector<PreferenceOrder> parse_witness(std::string_view text, std::size_t t_count, std::size_t m) {
  std::vector<std::optional<PreferenceOrder>> slots(t_count);
  std::istringstream in{std::string(text)};
  std::size_t lineno = 0;
  for (std::string raw; std::getline(in, raw);) {
    ++lineno;
    auto toks = tokenize(strip_comment(raw));
    if (toks.empty()) continue;
    if (toks[0] != "t-vote" || toks.size() < 3) {
      throw ParseError(lineno, ErrorKind::Parse, "expected: t-vote <index> <c1> ... <cm>");
    }
    BigInt idx = detail::parse_number(toks[1], lineno);
    if (idx < 1 || idx > t_count) {
      throw ParseError(lineno, ErrorKind::IndexOutOfRange,
                       "T index " + toks[1] + " not in 1.." + std::to_string(t_count));
    }
    auto& slot = slots[idx.convert_to<std::size_t>() - 1];
    if (slot) throw ParseError(lineno, ErrorKind::Parse, "duplicate t-vote for index " + toks[1]);
    PreferenceOrder o = detail::parse_order(toks, 2, lineno);
    try {
      require_valid_order(o, m);
    } catch (const Error& e) {
      throw ParseError(lineno, e.kind(), e.what());
    }
    slot = std::move(o);
  }
  std::vector<PreferenceOrder> out;
  for (std::size_t i = 0; i < t_count; ++i) {
    if (!slots[i]) throw ParseError(0, ErrorKind::Parse, "missing t-vote for index " + std::to_string(i + 1));
    out.push_back(std::move(*slots[i]));
  }
  return out;
}

inline std::string serialize_witness(const std::vector<PreferenceOrder>& votes) {
  std::ostringstream out;
  for (std::size_t i = 0; i < votes.size(); ++i) {
    out << "t-vote " << (i + 1);
    detail::write_order(out, votes[i]);
    out << '\n';
  }
  return out.str();
}

// ---------------------------------------------------------------------------
// Reduction artifacts

inline std::string join_numbers(const std::vector<BigInt>& xs) {
  std::ostringstream out;
  for (std::size_t i = 0; i < xs.size(); ++i) out << (i ? " " : "") << xs[i];
  return out.str();
}

/// Instance file plus "#@" metadata. `source_alpha` is the vector the
/// reduction was asked for (before normalization).
inline std::string serialize_artifact(const ReductionArtifact& art, const ScoringVector& source_alpha) {
  std::ostringstream out;
  out << "#@ source-alpha " << join_numbers(source_alpha.entries) << '\n';
  out << "#@ partition " << join_numbers(art.source.ks) << '\n';
  out << "#@ case " << to_string(art.case_tag) << '\n';
  out << "#@ ell " << art.ell() << '\n';
  out << "#@ r " << art.r() << '\n';
  out << "#@ K " << art.K << '\n';
  out << "#@ s " << art.s << '\n';
  out << "#@ t-unit " << art.t_unit << '\n';
  out << "#@ s1-count " << art.s1_count << '\n';
  out << "#@ roles p=1 a=2 b=3";
  for (int i = 1; i <= art.ell(); ++i) out << " c" << i << '=' << art.roles.c(i);
  for (int i = 1; i <= art.r(); ++i) out << " d" << i << '=' << art.roles.d(i);
  out << '\n';
  out << serialize_instance(art.instance);
  return out.str();
}

inline std::map<std::string, std::string> parse_artifact_metadata(std::string_view text) {
  std::map<std::string, std::string> meta;
  std::istringstream in{std::string(text)};
  for (std::string raw; std::getline(in, raw);) {
    if (!raw.starts_with("#@")) continue;
    auto toks = tokenize(std::string_view(raw).substr(2));
    if (toks.empty()) continue;
    std::string value;
    for (std::size_t i = 1; i < toks.size(); ++i) value += (i > 1 ? " " : "") + toks[i];
    meta[toks[0]] = value;
  }
  return meta;
}

inline std::vector<BigInt> parse_number_list(std::string_view text) {
  std::vector<BigInt> out;
  for (const auto& tok : tokenize(text)) {
    auto v = parse_bigint(tok);
    if (!v) throw Error(ErrorKind::Parse, "expected an integer, got '" + tok + "'");
    out.push_back(*v);
  }
  return out;
}

/// Rebuilds the artifact from its metadata and checks that the embedded
/// instance matches the regenerated one.
inline ReductionArtifact parse_artifact(std::string_view text) {
  auto meta = parse_artifact_metadata(text);
  if (!meta.contains("source-alpha") || !meta.contains("partition")) {
    throw Error(ErrorKind::Parse, "artifact lacks '#@ source-alpha' or '#@ partition' metadata");
  }
  ScoringVector alpha{parse_number_list(meta["source-alpha"])};
  PartitionInstance part{parse_number_list(meta["partition"])};
  ReductionArtifact art = reduce(alpha, part);
  if (parse_instance(text) != art.instance) {
    throw Error(ErrorKind::Parse, "artifact instance does not match its metadata");
  }
  return art;
}

}  // namespace scoremanip
