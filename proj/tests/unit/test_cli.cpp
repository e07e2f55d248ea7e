#include <catch_amalgamated.hpp>

#include <cstdlib>
#include <sstream>

#include "cli.hpp"
#include "golden_cases.hpp"

using namespace wordprob;

namespace {
  struct Result {
    int         code;
    std::string out;
    std::string err;
  };

  Result run(std::vector<std::string> const& args) {
    std::ostringstream out, err;
    int                code = cli::run(args, out, err);
    return {code, out.str(), err.str()};
  }
}  // namespace

TEST_CASE("exit codes", "[cli]") {
  CHECK(run({"seq", "--kind", "tm", "--n", "4"}).code == cli::ok);
  CHECK(run({}).code == cli::failure);
  CHECK(run({"frobnicate"}).code == cli::failure);
  CHECK(run({"seq", "--kind", "fib", "--n", "4"}).code == cli::failure);
  CHECK(run({"equiv", "--sys", "/nonexistent", "--from", "a", "--to", "a"}).code
        == cli::failure);
  CHECK(run({"dehn-solve", "--preset", "torus", "aab"}).code == cli::undecided);
  CHECK(run({"dehn-solve", "--preset", "torus", "axb"}).code == cli::failure);
  CHECK(run({"equiv", "--preset", "ceijtin", "--from", "aaa", "--to", "eaaa", "--budget", "50"})
            .code
        == cli::undecided);
  CHECK(run({"equiv", "--preset", "ceijtin", "--from", "aaa", "--to", "b", "--budget", "0"}).code
        == cli::failure);
  CHECK(run({"cayley", "--preset", "torus", "--max-cosets", "100"}).code == cli::undecided);
  CHECK(run({"tm-run", "--preset", "loop_right", "--max-steps", "10"}).code == cli::undecided);
  CHECK(run({"dehn-solve", "--preset", "ceijtin", "a"}).code == cli::failure);
  CHECK(run({"--help"}).code == cli::ok);
}

TEST_CASE("output formats", "[cli]") {
  auto human = run({"seq", "--kind", "tm", "--n", "32"});
  CHECK(human.out == "word: 01101001100101101001011001101001\n");
  auto lines = run({"seq", "--kind", "tm", "--n", "32", "--format", "lines"});
  CHECK(lines.out == "word 01101001100101101001011001101001\n");
  CHECK(run({"--format", "lines", "seq", "--kind", "tm", "--n", "32"}).out == lines.out);
}

TEST_CASE("catalog output parses back", "[cli]") {
  auto out = run({"catalog", "dihedral5"});
  CHECK(out.code == cli::ok);
  CHECK(out.out == "gens: s t\nrel: sssss\nrel: tt\nrel: tsts\n");
  CHECK(run({"catalog", "surface", "--genus", "3"}).out.find("rel: abABcdCDefEF\n")
        != std::string::npos);
  CHECK(run({"catalog", "nope"}).code == cli::failure);
}

TEST_CASE("golden suite", "[cli][golden]") {
  bool update = std::getenv("WORDPROB_UPDATE_GOLDEN") != nullptr;
  auto cases  = testing::golden_cases(WORDPROB_GOLDEN_DIR);
  REQUIRE(cases.size() >= 10);
  for (auto const& c : cases) {
    INFO(c.name);
    auto r      = run(c.args);
    auto record = testing::golden_record(r.code, r.out);
    if (update) {
      std::ofstream(c.expected, std::ios::binary) << record;
      continue;
    }
    REQUIRE(std::filesystem::exists(c.expected));
    CHECK(record == testing::slurp(c.expected));
  }
}
