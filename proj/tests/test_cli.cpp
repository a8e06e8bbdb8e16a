#include <filesystem>
#include <fstream>
#include <sstream>

#include <catch2/catch_amalgamated.hpp>

#include "cli_app.hpp"

using scoremanip::cli::run_command;

namespace {

const std::string kGolden = GOLDEN_DIR;

struct Result {
  int code;
  std::string out;
  std::string err;
};

Result run(std::vector<std::string> args, const std::string& stdin_text = "") {
  std::ostringstream out, err;
  std::istringstream in(stdin_text);
  int code = run_command(args, out, err, in);
  return {code, out.str(), err.str()};
}

std::string golden(const std::string& name) { return kGolden + "/" + name; }

std::filesystem::path temp_file(const std::string& name) {
  return std::filesystem::temp_directory_path() / ("scoremanip_test_" + name);
}

}  // namespace

TEST_CASE("classify prints class and parameters") {
  auto r = run({"classify", "--alpha", "1 1 0"});
  CHECK(r.code == 0);
  CHECK(r.out.starts_with("Hard ℓ=0 r=0\n"));

  r = run({"classify", "--alpha", "5 2 2 2"});
  CHECK(r.out == "PluralityLike\n");
  r = run({"classify", "--family", "borda", "--m", "2"});
  CHECK(r.out == "PluralityLike\n");
  r = run({"classify", "--instance", golden("all_equal.inst")});
  CHECK(r.out == "AllEqual\n");
}

TEST_CASE("classify on a whole family") {
  CHECK(run({"classify", "--family", "veto"}).out == "veto: NP-hard iff m >= 3\n");
  CHECK(run({"classify", "--family", "plurality"}).out == "plurality: P for all m\n");
  CHECK(run({"classify", "--family", "half-approval"}).out == "half-approval: NP-hard iff m >= 4\n");
}

TEST_CASE("family prints the vector") {
  auto r = run({"family", "--name", "borda", "--m", "4"});
  CHECK(r.code == 0);
  CHECK(r.out == "4 3 2 1\n");
  CHECK(run({"family", "--name", "k-approval:5", "--m", "4"}).code == 2);
}

TEST_CASE("evaluate scores S plus the supplied T ballots") {
  auto r = run({"evaluate", "--instance", golden("veto_reduction.inst"), "--witness", golden("veto_witness.txt")});
  CHECK(r.code == 0);
  CHECK(r.out == "scores: 1=8 2=6 3=6\nwinners: 1\nunique winner: 1\n");

  r = run({"evaluate", "--instance", golden("veto_reduction.inst"), "--witness", "-"}, "t-vote 1 1 2 3\n");
  CHECK(r.code == 2);  // T voter 2 has no ballot
}

TEST_CASE("manipulate exit codes") {
  auto yes = run({"manipulate", "--instance", golden("veto_reduction.inst")});
  CHECK(yes.code == 0);
  CHECK(yes.out == "decision: YES\nsolver: brute-force\nt-vote 1 1 2 3\nt-vote 2 1 3 2\n");

  CHECK(run({"manipulate", "--instance", golden("veto_partition_no.inst")}).code == 1);
  CHECK(run({"manipulate", "--unique", "--instance", golden("all_equal.inst")}).code == 1);
  CHECK(run({"manipulate", "--instance", golden("all_equal.inst")}).code == 0);
  CHECK(run({"manipulate", "--instance", golden("plurality_tie.inst")}).code == 0);
  CHECK(run({"manipulate", "--unique", "--instance", golden("plurality_tie.inst")}).code == 1);
  CHECK(run({"manipulate", "--cap", "1", "--instance", golden("veto_partition_no.inst")}).code == 3);
  CHECK(run({"manipulate", "--instance", golden("bad/non_monotone.inst")}).code == 2);
  CHECK(run({"manipulate", "--instance", golden("does_not_exist.inst")}).code == 2);
}

TEST_CASE("manipulate can write the witness to a file") {
  auto path = temp_file("witness.txt");
  auto r = run({"manipulate", "--instance", golden("plurality_yes.inst"), "--witness-out", path.string()});
  CHECK(r.code == 0);
  std::ifstream in(path);
  std::string text((std::istreambuf_iterator<char>(in)), std::istreambuf_iterator<char>());
  CHECK(text == "t-vote 1 1 2\nt-vote 2 1 2\n");
  std::filesystem::remove(path);
}

TEST_CASE("reduce, then extract a subset from winning ballots") {
  auto path = temp_file("artifact.inst");
  auto r = run({"reduce", "--alpha", "1 1 0", "--partition", "1 1", "--out", path.string()});
  REQUIRE(r.code == 0);

  auto ok = run({"extract-witness", "--artifact", path.string(), "--witness", golden("veto_witness.txt")});
  CHECK(ok.code == 0);
  CHECK(ok.out == "subset: 1\nsum: 1 (K = 1)\n");

  auto hoisted = run({"extract-witness", "--artifact", path.string(), "--witness", golden("veto_witness_hoist.txt")});
  CHECK(hoisted.code == 0);
  CHECK(hoisted.out == "subset: 1\nsum: 1 (K = 1)\n");

  auto lose = run({"extract-witness", "--artifact", path.string(), "--witness", golden("veto_witness_losing.txt")});
  CHECK(lose.code == 1);
  std::filesystem::remove(path);
}

TEST_CASE("reduce output is the canonical instance with metadata") {
  auto r = run({"reduce", "--alpha", "1 1 0", "--partition", "1 1"});
  REQUIRE(r.code == 0);
  std::ifstream in(golden("veto_reduction.inst"));
  std::string expected((std::istreambuf_iterator<char>(in)), std::istreambuf_iterator<char>());
  CHECK(r.out.ends_with(expected));
  CHECK(r.out.find("#@ case ELL_NE_1\n") != std::string::npos);

  CHECK(run({"reduce", "--alpha", "1 0 0", "--partition", "1 1"}).code == 2);
  CHECK(run({"reduce", "--alpha", "1 1 0", "--partition", "1 2"}).code == 2);
}

TEST_CASE("verify reports agreement") {
  auto no = run({"verify", "--alpha", "1 1 0", "--partition", "1 1 4"});
  CHECK(no.code == 0);
  CHECK(no.out.ends_with("both NO — pass\n"));

  auto yes = run({"verify", "--alpha", "1 1 0", "--partition", "1 1"});
  CHECK(yes.code == 0);
  CHECK(yes.out.ends_with("both YES — pass\n"));

  CHECK(run({"verify", "--alpha", "1 1 0", "--partition", "1 1 4", "--cap", "1"}).code == 3);
}

TEST_CASE("usage errors exit with 2") {
  CHECK(run({}).code == 2);
  CHECK(run({"frobnicate"}).code == 2);
  CHECK(run({"classify"}).code == 2);
  CHECK(run({"classify", "--alpha", "1 0", "--family", "veto"}).code == 2);
  CHECK(run({"manipulate"}).code == 2);
  CHECK(run({"classify", "--alpha", "0 1"}).code == 2);
}
