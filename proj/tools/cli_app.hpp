#pragma once

// Command dispatcher behind the `scoremanip` tool. Exit codes:
//   0 yes / pass / success, 1 no / fail, 2 usage or parse error, 3 cap exhausted.

#include <fstream>
#include <iostream>
#include <iterator>
#include <sstream>
#include <string>
#include <vector>

#include <CLI11.hpp>

#include "scoremanip/scoremanip.hpp"

namespace scoremanip::cli {

enum ExitCode : int { kYes = 0, kNo = 1, kUsage = 2, kCap = 3 };

namespace detail {

inline std::string read_source(const std::string& path, std::istream& in) {
  if (path == "-") return {std::istreambuf_iterator<char>(in), std::istreambuf_iterator<char>()};
  std::ifstream file(path);
  if (!file) throw Error(ErrorKind::Parse, "cannot open '" + path + "'");
  return {std::istreambuf_iterator<char>(file), std::istreambuf_iterator<char>()};
}

inline void write_target(const std::string& path, const std::string& text, std::ostream& out) {
  if (path.empty() || path == "-") {
    out << text;
    return;
  }
  std::ofstream file(path);
  if (!file) throw Error(ErrorKind::Parse, "cannot write '" + path + "'");
  file << text;
}

inline std::string join(const std::vector<Candidate>& xs) {
  std::string s;
  for (std::size_t i = 0; i < xs.size(); ++i) s += (i ? " " : "") + std::to_string(xs[i]);
  return s;
}

inline std::string join(const IndexSet& xs) {
  std::string s;
  for (std::size_t i : xs) s += (s.empty() ? "" : " ") + std::to_string(i);
  return s;
}

inline void print_scores(std::ostream& out, const ScoreTable& t) {
  out << "scores:";
  for (std::size_t c = 1; c <= t.m(); ++c) out << ' ' << c << '=' << t(static_cast<Candidate>(c));
  out << '\n';
  out << "winners: " << join(winners(t)) << '\n';
  auto u = unique_winner(t);
  out << "unique winner: " << (u ? std::to_string(*u) : std::string("none")) << '\n';
}

inline void print_class(std::ostream& out, const DichotomyClass& cls) {
  out << to_string(cls.tag);
  if (cls.hard) {
    out << " ℓ=" << cls.hard->ell << " r=" << cls.hard->r << '\n';
    out << "normalized: " << join_numbers(cls.hard->normalized.entries);
  }
  out << '\n';
}

}  // namespace detail

/// Runs one invocation; `args` excludes the program name.
inline int run_command(const std::vector<std::string>& args, std::ostream& out, std::ostream& err,
                       std::istream& in = std::cin) {
  CLI::App app{"Weighted coalition manipulation for positional scoring rules"};
  app.require_subcommand(1);

  std::string alpha_text, family_text, instance_path, witness_path, partition_text, out_path, artifact_path;
  std::size_t m = 0;
  std::uint64_t cap = kDefaultNodeCap;
  bool unique = false;

  auto* classify_cmd = app.add_subcommand("classify", "Classify a scoring vector or family");
  classify_cmd->add_option("--alpha", alpha_text, "Scoring vector, e.g. \"3 2 1\"");
  classify_cmd->add_option("--family", family_text, "Family name (plurality, borda, veto, k-approval:k, ...)");
  classify_cmd->add_option("--m", m, "Candidate count for --family");
  classify_cmd->add_option("--instance", instance_path, "Instance file ('-' for stdin)");

  auto* evaluate_cmd = app.add_subcommand("evaluate", "Score S plus concrete T ballots");
  evaluate_cmd->add_option("--instance", instance_path)->required();
  evaluate_cmd->add_option("--witness", witness_path, "Witness file with one t-vote per T voter")->required();

  auto* manipulate_cmd = app.add_subcommand("manipulate", "Decide whether T can make p win");
  manipulate_cmd->add_option("--instance", instance_path)->required();
  manipulate_cmd->add_flag("--unique", unique, "Require p to be the sole winner");
  manipulate_cmd->add_option("--cap", cap, "Node cap for exhaustive search");
  manipulate_cmd->add_option("--witness-out", out_path, "Write the witness here instead of stdout");

  auto* reduce_cmd = app.add_subcommand("reduce", "Build the manipulation instance for a PARTITION input");
  reduce_cmd->add_option("--alpha", alpha_text)->required();
  reduce_cmd->add_option("--partition", partition_text)->required();
  reduce_cmd->add_option("--out", out_path, "Artifact file (default stdout)");

  auto* extract_cmd = app.add_subcommand("extract-witness", "Read a subset off winning T ballots");
  extract_cmd->add_option("--artifact", artifact_path)->required();
  extract_cmd->add_option("--witness", witness_path)->required();

  auto* verify_cmd = app.add_subcommand("verify", "Check the reduction on one PARTITION input");
  verify_cmd->add_option("--alpha", alpha_text)->required();
  verify_cmd->add_option("--partition", partition_text)->required();
  verify_cmd->add_option("--cap", cap);

  auto* family_cmd = app.add_subcommand("family", "Print a family's vector");
  family_cmd->add_option("--name", family_text)->required();
  family_cmd->add_option("--m", m)->required();

  try {
    std::vector<std::string> reversed(args.rbegin(), args.rend());
    app.parse(std::move(reversed));
  } catch (const CLI::CallForHelp&) {
    out << app.help();
    return kYes;
  } catch (const CLI::ParseError& e) {
    err << "usage error: " << e.what() << '\n';
    return kUsage;
  }

  try {
    if (*classify_cmd) {
      int sources = !alpha_text.empty() + !family_text.empty() + !instance_path.empty();
      if (sources != 1) {
        err << "usage error: classify needs exactly one of --alpha, --family, --instance\n";
        return kUsage;
      }
      if (!family_text.empty() && m == 0) {
        auto f = parse_family(family_text);
        auto fc = classify_family(f);
        out << family_name(f) << ": ";
        if (fc.always_easy()) out << "P for all m\n";
        else out << "NP-hard iff m >= " << *fc.hard_from << '\n';
        return kYes;
      }
      ScoringVector alpha;
      if (!alpha_text.empty()) alpha.entries = parse_number_list(alpha_text);
      else if (!family_text.empty()) alpha = family_vector(parse_family(family_text), m);
      else alpha = parse_instance(detail::read_source(instance_path, in)).alpha;
      detail::print_class(out, classify(alpha));
      return kYes;
    }
    if (*evaluate_cmd) {
      auto inst = parse_instance(detail::read_source(instance_path, in));
      auto votes = parse_witness(detail::read_source(witness_path, in), inst.t_weights.size(), inst.m());
      detail::print_scores(out, tally_with(inst, votes));
      return kYes;
    }
    if (*manipulate_cmd) {
      auto inst = parse_instance(detail::read_source(instance_path, in));
      auto ans = solve(inst, unique ? Target::UniqueWinner : Target::Winner, cap);
      out << "decision: " << (ans.yes ? "YES" : "NO") << '\n';
      out << "solver: " << to_string(ans.mode) << '\n';
      if (ans.yes) {
        auto text = serialize_witness(*ans.witness);
        if (out_path.empty()) out << text;
        else detail::write_target(out_path, text, out);
      }
      return ans.yes ? kYes : kNo;
    }
    if (*reduce_cmd) {
      ScoringVector alpha{parse_number_list(alpha_text)};
      PartitionInstance part{parse_number_list(partition_text)};
      auto art = reduce(alpha, part);
      detail::write_target(out_path, serialize_artifact(art, alpha), out);
      return kYes;
    }
    if (*extract_cmd) {
      auto art = parse_artifact(detail::read_source(artifact_path, in));
      auto votes = parse_witness(detail::read_source(witness_path, in), art.instance.t_weights.size(),
                                 art.instance.m());
      IndexSet subset;
      try {
        subset = extract_witness(art, votes);
      } catch (const Error& e) {
        if (e.kind() != ErrorKind::NotAWinner) throw;
        out << "p is not a winner under these ballots\n";
        return kNo;
      }
      BigInt sum = subset_sum(art.source, subset);
      out << "subset: " << detail::join(subset) << '\n';
      out << "sum: " << sum << " (K = " << art.K << ")\n";
      return sum == art.K ? kYes : kNo;
    }
    if (*verify_cmd) {
      ScoringVector alpha{parse_number_list(alpha_text)};
      PartitionInstance part{parse_number_list(partition_text)};
      auto rep = verify_reduction(alpha, part, cap);
      out << "partition: " << (rep.partition ? "YES {" + detail::join(*rep.partition) + "}" : std::string("NO"))
          << '\n';
      out << "manipulation (winner): " << (rep.mp_yes ? "YES" : "NO") << '\n';
      out << "manipulation (unique winner): " << (rep.ump_yes ? "YES" : "NO") << '\n';
      if (rep.forward_checked) {
        out << "forward witness: " << (rep.forward_unique ? "p unique winner" : "p NOT unique winner") << '\n';
      }
      if (rep.extracted) {
        out << "extracted subset: {" << detail::join(*rep.extracted) << "} sum " << *rep.extracted_sum << '\n';
        if (rep.mp_witness_ties) out << "note: p only ties under the winner witness\n";
      }
      out << "nodes: " << rep.nodes << '\n';
      bool agree = rep.mp_yes == rep.partition_yes() && rep.ump_yes == rep.partition_yes();
      if (agree) out << "both " << (rep.partition_yes() ? "YES" : "NO");
      else out << "MISMATCH";
      out << " — " << (rep.pass ? "pass" : "fail") << '\n';
      return rep.pass ? kYes : kNo;
    }
    if (*family_cmd) {
      out << join_numbers(family_vector(parse_family(family_text), m).entries) << '\n';
      return kYes;
    }
  } catch (const CapExhaustedError& e) {
    err << e.what() << '\n';
    return kCap;
  } catch (const Error& e) {
    err << e.what() << '\n';
    return kUsage;
  }
  return kUsage;
}

}  // namespace scoremanip::cli
