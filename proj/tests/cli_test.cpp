#include <sys/wait.h>

#include <array>
#include <cstdio>
#include <fstream>
#include <sstream>
#include <string>

#include "doctest.h"

namespace {

struct RunResult {
  int exit_code;
  std::string out;
};

RunResult run_cli(const std::string& args, const std::string& env = "") {
  std::string cmd = (env.empty() ? "" : "env " + env + " ") + std::string(KFP_CLI_BIN) + " " +
                    args + " 2>&1";
  std::array<char, 4096> buf;
  std::string out;
  FILE* pipe = popen(cmd.c_str(), "r");
  REQUIRE(pipe != nullptr);
  while (fgets(buf.data(), buf.size(), pipe)) out += buf.data();
  int status = pclose(pipe);
  return RunResult{WEXITSTATUS(status), out};
}

std::string data_file(const std::string& name) {
  return std::string(KFP_TEST_DATA_DIR) + "/" + name;
}

std::string read_golden(const std::string& name) {
  std::ifstream in(std::string(KFP_GOLDEN_DIR) + "/" + name);
  REQUIRE(in.good());
  std::stringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

}  // namespace

TEST_CASE("validate exit codes") {
  RunResult ok = run_cli("validate seq:3");
  CHECK(ok.exit_code == 0);
  CHECK(ok.out.find("normal: true") != std::string::npos);
  CHECK(ok.out.find("monotone: true") != std::string::npos);

  RunResult frozen = run_cli("validate seq:2");
  CHECK(frozen.exit_code == 0);
  CHECK(frozen.out == read_golden("validate_seq2.txt"));

  RunResult rigged = run_cli("validate " + data_file("rigged_nontransitive.json"));
  CHECK(rigged.exit_code == 1);
  CHECK(rigged.out.find("transitivity: FAIL") != std::string::npos);
  CHECK(rigged.out.find("witness") != std::string::npos);

  RunResult malformed = run_cli("validate " + data_file("malformed.json"));
  CHECK(malformed.exit_code == 2);

  RunResult revid = run_cli("validate " + data_file("reversed_identity.json"));
  CHECK(revid.exit_code == 0);
  CHECK(revid.out.find("normal: false") != std::string::npos);
  CHECK(revid.out.find("monotone: false") != std::string::npos);
  CHECK(revid.out.find("unary: true") != std::string::npos);
}

TEST_CASE("term subcommands") {
  RunResult eq = run_cli("term cmp -d seq:2 \"(empty:)\" \"(empty:)\"");
  CHECK(eq.exit_code == 0);
  CHECK(eq.out == "EQ\n");

  RunResult lt = run_cli("term cmp -d seq:2 \"(empty:)\" \"(s0:(empty:))\"");
  CHECK(lt.out == "LT\n");

  RunResult inc = run_cli("term cmp -d prime:prod:1 \"(star:)\" \"(plus:)\"");
  CHECK(inc.out == "INC\n");

  RunResult bad = run_cli("term cmp -d seq:2 \"(nosuch:)\" \"(empty:)\"");
  CHECK(bad.exit_code == 2);

  RunResult en = run_cli("term enum -d seq:2 --height 1");
  CHECK(en.exit_code == 0);
  CHECK(en.out == read_golden("term_enum_seq2_h1.txt"));

  RunResult en3 = run_cli("term enum -d seq:3 --height 2");
  CHECK(en3.out == read_golden("term_enum_seq3_h2.txt"));
}

TEST_CASE("tree subcommands") {
  CHECK(run_cli("tree cmp \"0*()\" \"0*()\"").out == "EQ\n");
  RunResult gt = run_cli("tree cmp \"0*(0*() 0*())\" \"0*()\"");
  CHECK(gt.out == "GT\n");
  RunResult withOracle = run_cli("tree cmp --oracle \"0*(0*() 0*())\" \"0*()\"");
  CHECK(withOracle.out == "GT\n");
  RunResult outside = run_cli("tree cmp -m 1 -n 2 \"0*(0*() 0*())\" \"0*()\"");
  CHECK(outside.exit_code == 1);
}

TEST_CASE("map subcommands") {
  RunResult t2f = run_cli("map tree-to-fix -n 3 \"0*()\"");
  CHECK(t2f.exit_code == 0);
  CHECK(t2f.out == "(empty:)\n");

  RunResult checked = run_cli("map tree-to-fix -n 3 \"0*()\" --check \"0*(0*())\"");
  CHECK(checked.exit_code == 0);
  CHECK(checked.out.find("image<=: true source<=: true") != std::string::npos);

  RunResult delabel_bad = run_cli("map delabel -m 3 -n 3 \"0*()\"");
  CHECK(delabel_bad.exit_code == 1);
  CHECK(delabel_bad.out.find("m < n required") != std::string::npos);

  RunResult prime = run_cli("map to-prime -d seq:2 \"(empty:)\"");
  CHECK(prime.exit_code == 0);
  CHECK(prime.out.find("star") != std::string::npos);
  CHECK(prime.out.find("plus") != std::string::npos);

  RunResult wz = run_cli("map wz-iso -d chain:2 to-seq \"(z1:(z0:(one:)))\"");
  CHECK(wz.exit_code == 0);
  CHECK(wz.out == "[1 0]\n");
  RunResult wz_back = run_cli("map wz-iso -d chain:2 to-term \"[1 0]\"");
  CHECK(wz_back.out == "(z1:(z0:(one:)))\n");

  RunResult pe = run_cli("map prod-embed -d prod:2 chain:2 \"x01_c2@{0,1}\"");
  CHECK(pe.exit_code == 0);
  CHECK(pe.out == "(x:0 x:1 tr:x01_c2)\n");
}

TEST_CASE("falsify subcommands") {
  RunResult none = run_cli("falsify bad --host chain:5 --length 2");
  CHECK(none.exit_code == 0);
  CHECK(none.out.find("none") == 0);

  RunResult found = run_cli("falsify bad --host antichain:4 --length 4");
  CHECK(found.out.find("bad sequence: 0 1 2 3") == 0);

  RunResult evb = run_cli("falsify bad -d prod:2 --host antichain:2 --length 2");
  CHECK(evb.out.find("bad sequence:") == 0);

  RunResult anti = run_cli("falsify antichain -d prod:2 --token x01_a2 -L 4");
  CHECK(anti.exit_code == 0);
  CHECK(anti.out.find("antichain:") == 0);

  RunResult ladder = run_cli("falsify ladder -d " + data_file("reversed_identity.json") + " -K 5");
  CHECK(ladder.exit_code == 0);
  CHECK(ladder.out.find("bad sequence:") == 0);

  RunResult ladder_mono = run_cli("falsify ladder -d seq:2 -K 5");
  CHECK(ladder_mono.exit_code == 1);

  RunResult descent = run_cli("falsify descent --level 2 --from \"[1]\" --steps 4");
  CHECK(descent.exit_code == 0);
  CHECK(descent.out.find("# length 4") != std::string::npos);
}

TEST_CASE("suite runs tiny profile and reports mutations") {
  RunResult tiny = run_cli("suite --profile tiny");
  CHECK(tiny.exit_code == 0);
  CHECK(tiny.out.find("FAIL") == std::string::npos);

  RunResult mutated = run_cli("suite --profile tiny --selftest-mutation");
  CHECK(mutated.exit_code == 1);
  CHECK(mutated.out.find("FAIL  dilator-semantics-agreement") != std::string::npos);
}

TEST_CASE("deterministic output") {
  std::string a = run_cli("term enum -d seq:3 --height 2").out;
  std::string b = run_cli("term enum -d seq:3 --height 2").out;
  CHECK(a == b);
}

TEST_CASE("resource cap flag and environment variable") {
  // eval_order over a 7-element host exceeds the default cap of 6
  RunResult over = run_cli("falsify bad -d seq:2 --host chain:7 --length 2");
  CHECK(over.exit_code == 2);
  CHECK(over.out.find("resource error") != std::string::npos);

  RunResult raised = run_cli("--bound 8 falsify bad -d seq:2 --host chain:7 --length 2");
  CHECK(raised.exit_code == 0);

  RunResult via_env = run_cli("falsify bad -d seq:2 --host chain:7 --length 2", "KFP_SIZE_CAP=8");
  CHECK(via_env.exit_code == 0);
}
