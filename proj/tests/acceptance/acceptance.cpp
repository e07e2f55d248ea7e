// Acceptance checks, one line per criterion. Usage:
//   acceptance <path-to-wordprob-cli> <golden-dir>

#include <sys/wait.h>

#include <chrono>
#include <cstdio>
#include <functional>
#include <iostream>
#include <sstream>
#include <string>

#include "golden_cases.hpp"
#include "test_support.hpp"
#include "wordprob/cayley.hpp"
#include "wordprob/dehn.hpp"
#include "wordprob/presentations.hpp"
#include "wordprob/reductions.hpp"
#include "wordprob/rewriting.hpp"
#include "wordprob/sequences.hpp"
#include "wordprob/terms.hpp"

using namespace wordprob;
using Clock = std::chrono::steady_clock;

namespace {

  // Thrown by require() with the reason a criterion failed.
  struct Failed {
    std::string why;
  };

  void require(bool ok, std::string const& why) {
    if (!ok) {
      throw Failed{why};
    }
  }

  struct Criterion {
    int                                number;
    std::string                        title;
    double                             limit_ms;  // 0 for no time limit
    std::function<std::string()>       body;      // returns a short detail
  };

  ////////////////////////////////////////////////////////////////////////
  // 1-2 sequences
  ////////////////////////////////////////////////////////////////////////

  std::string thue_morse_exact() {
    auto w = to_digits(thue_morse_prefix(32));
    require(w == "01101001100101101001011001101001", "got " + w);
    return w;
  }

  std::string power_freeness() {
    require(is_power_free(thue_morse_prefix(4096), 3).power_free,
            "Thue-Morse prefix of length 4096 contains a cube");
    require(is_power_free(square_free_ternary_prefix(4096), 2).power_free,
            "ternary prefix of length 4096 contains a square");
    return "tm cube-free, sf3 square-free at n = 4096";
  }

  ////////////////////////////////////////////////////////////////////////
  // 3 small cancellation
  ////////////////////////////////////////////////////////////////////////

  std::string small_cancellation() {
    std::ostringstream detail;
    for (int g = 2; g <= 4; ++g) {
      auto s = symmetrize(catalog::surface(g));
      auto r = max_piece_ratio(s);
      require(r == Ratio(1, 4 * g), "surface(" + std::to_string(g) + ") gave " + r.to_string());
      require(r == testing::brute_force_piece_ratio(s.words),
              "oracle disagrees at genus " + std::to_string(g));
      require(satisfies_small_cancellation(catalog::surface(g), Ratio(1, 6)),
              "C'(1/6) fails at genus " + std::to_string(g));
      detail << "g" << g << "=" << r.to_string() << ' ';
    }
    auto s = symmetrize(catalog::torus());
    auto r = max_piece_ratio(s);
    require(r == Ratio(1, 4), "torus gave " + r.to_string());
    require(r == testing::brute_force_piece_ratio(s.words), "oracle disagrees on the torus");
    require(!satisfies_small_cancellation(catalog::torus(), Ratio(1, 6)),
            "torus satisfies C'(1/6)");
    detail << "torus=" << r.to_string();
    return detail.str();
  }

  ////////////////////////////////////////////////////////////////////////
  // 4 Dehn's algorithm
  ////////////////////////////////////////////////////////////////////////

  std::string dehn_algorithm() {
    auto const   p   = catalog::surface(2);
    auto const   sym = symmetrize(p);
    std::mt19937 rng(1911);

    for (int i = 0; i < 500; ++i) {
      GroupWord w;
      for (std::size_t k = 0, n = 1 + rng() % 3; k < n; ++k) {
        auto u   = testing::random_word(rng, 4, rng() % 6);
        auto rel = p.relators()[0];
        if (rng() % 2) {
          rel = invert(rel);
        }
        w = w * u * rel * invert(u);
      }
      auto r = dehn_solve(w, sym, true);
      require(r.verdict == DehnVerdict::Trivial,
              "relator product not trivial: " + to_string(w, p.names()));
      require(replay_dehn_trace(r.start, sym, r.trace).empty(), "trace does not replay");
    }

    std::size_t certified = 0;
    for (int i = 0; i < 500;) {
      auto w = testing::random_reduced_word(rng, 4, 1 + rng() % 8);
      auto e = exponent_vector(w, 4);
      if (std::all_of(e.begin(), e.end(), [](auto x) { return x == 0; })) {
        continue;
      }
      ++i;
      auto r = dehn_solve(w, sym, true);
      require(replay_dehn_trace(r.start, sym, r.trace) == r.final_word,
              "trace does not replay for " + to_string(w, p.names()));
      bool ok = r.verdict == DehnVerdict::NonTrivialCertified
                || (r.verdict == DehnVerdict::Trivial && r.final_word.empty());
      require(ok, "unexpected verdict for " + to_string(w, p.names()));
      certified += r.verdict == DehnVerdict::NonTrivialCertified;
    }
    return "500 trivial, " + std::to_string(certified) + "/500 certified nontrivial";
  }

  ////////////////////////////////////////////////////////////////////////
  // 5 coset enumeration
  ////////////////////////////////////////////////////////////////////////

  std::string coset_enumeration() {
    auto table = todd_coxeter(catalog::dihedral5(), 64);
    require(table.complete(), "enumeration did not complete");
    require(table.size() == 10, "got " + std::to_string(table.size()) + " cosets");
    auto g = to_cayley_graph(table);

    for (std::uint32_t gen : {0u, 1u}) {
      std::vector<std::size_t> cycles;
      std::vector<bool>        seen(10);
      for (std::size_t v = 0; v < 10; ++v) {
        std::size_t len = 0;
        for (std::size_t u = v; !seen[u]; u = g.follow(u, GenLetter{gen, 1})) {
          seen[u] = true;
          ++len;
        }
        if (len) {
          cycles.push_back(len);
        }
      }
      auto expect = gen == 0 ? std::vector<std::size_t>{5, 5} : std::vector<std::size_t>(5, 2);
      require(cycles == expect, gen == 0 ? "s does not form two 5-cycles"
                                         : "t is not a perfect matching");
    }

    auto        words = testing::all_words(2, 4);
    std::size_t pairs = 0;
    for (auto const& u : words) {
      for (auto const& v : words) {
        bool graph  = word_problem_finite(u * invert(v), g);
        bool oracle = testing::dihedral_eval(u) == testing::dihedral_eval(v);
        require(graph == oracle, "disagreement on " + to_string(u, table.names) + " vs "
                                     + to_string(v, table.names));
        ++pairs;
      }
    }
    return "10 cosets, " + std::to_string(pairs) + " word pairs agree";
  }

  ////////////////////////////////////////////////////////////////////////
  // 6 Ceijtin
  ////////////////////////////////////////////////////////////////////////

  std::string ceijtin_system() {
    auto sys = to_rewrite_system(catalog::ceijtin());
    for (auto [a, b] : {std::pair{"caaa", "aaa"}, std::pair{"ac", "ca"}}) {
      auto r = search_equivalence(parse_word(a, sys), parse_word(b, sys), sys, 10);
      require(r.status == SearchStatus::Proven, std::string(a) + " ~ " + b + " not proven");
      require(r.trace->steps.size() == 1, std::string(a) + " ~ " + b + " not in one step");
      require(replays_exactly(*r.trace, sys), "trace does not replay");
    }

    // Budget semantics: no proof without a replayable trace, and the budget
    // bounds the work.
    std::mt19937 rng(1968);
    for (int i = 0; i < 100; ++i) {
      auto a = testing::random_positive_word(rng, 5, 1 + rng() % 5);
      auto b = testing::random_positive_word(rng, 5, 1 + rng() % 5);
      auto r = search_equivalence(a, b, sys, 100);
      auto s = search_equivalence(b, a, sys, 100);
      require(r.status == s.status, "search is not symmetric");
      require(r.trace.has_value() == (r.status == SearchStatus::Proven), "trace mismatch");
      if (r.trace) {
        require(replays_exactly(*r.trace, sys), "random trace does not replay");
      }
      if (r.status == SearchStatus::BudgetExhausted) {
        require(r.stats.expanded >= 100, "budget exhausted early");
      }
    }
    return "caaa~aaa and ac~ca in 1 step; 100 random budgeted searches consistent";
  }

  ////////////////////////////////////////////////////////////////////////
  // 7 TM reduction
  ////////////////////////////////////////////////////////////////////////

  TuringMachine random_machine(std::mt19937& rng) {
    std::map<TuringMachine::Key, Transition> delta;
    for (std::size_t q = 0; q < 3; ++q) {
      for (TapeSymbol a = 0; a < 2; ++a) {
        if (rng() % 4 == 0) {
          continue;
        }
        delta[{q, a}] = Transition{rng() % 3, static_cast<TapeSymbol>(rng() % 2),
                                   rng() % 2 ? Move::Left : Move::Right};
      }
    }
    return TuringMachine({'_', '1'}, 3, delta);
  }

  void check_machine(TuringMachine const& m, Word const& input, std::string const& label) {
    constexpr std::size_t k = 50;
    for (std::size_t j : {std::size_t{0}, std::size_t{1}, std::size_t{10}, k}) {
      require(verify_simulation(m, input, j), label + ": simulation diverges");
    }
    auto enc   = encode(m);
    auto start = enc.word_of_config(initial_configuration(input));
    auto run   = tm_run(m, input, k);
    if (run.halted) {
      auto r = search_equivalence(start, enc.halt_word, enc.system, 200000);
      require(r.status == SearchStatus::Proven, label + ": halt word not reached");
      require(r.trace->steps.size() == run.steps + cleanup_length(run.final),
              label + ": derivation length " + std::to_string(r.trace->steps.size()));
      require(replays_exactly(*r.trace, enc.system), label + ": trace does not replay");
    } else {
      auto r = search_equivalence(start, enc.halt_word, enc.system, k);
      require(r.status != SearchStatus::Proven, label + ": halted in the encoding only");
    }
  }

  std::string tm_reduction() {
    std::size_t halting = 0;
    for (auto const& name : machines::names()) {
      for (auto const& input : {Word{}, Word{1, 1}}) {
        check_machine(machines::lookup(name), input, name);
      }
    }
    std::mt19937 rng(1936);
    for (int i = 0; i < 100; ++i) {
      auto m     = random_machine(rng);
      auto input = testing::random_positive_word(rng, 2, rng() % 5);
      check_machine(m, input, "random machine " + std::to_string(i));
      halting += tm_run(m, input, 50).halted;
    }
    return std::to_string(machines::names().size()) + " catalog + 100 random machines ("
           + std::to_string(halting) + " halting)";
  }

  ////////////////////////////////////////////////////////////////////////
  // 8 tree rewriting
  ////////////////////////////////////////////////////////////////////////

  std::string tree_rewriting() {
    std::vector<TreeRule> assoc = {parse_tree_rule("((?x ?y) ?z) => (?x (?y ?z))")};
    auto r = search_tree_equivalence(parse_term("((A B) C)"), parse_term("(A (B C))"), assoc, 10);
    require(r.status == SearchStatus::Proven, "associativity instance not proven");
    require(r.trace->steps.size() == 1, "not a one-step proof");
    require(replay(*r.trace, assoc) == parse_term("(A (B C))"), "trace does not replay");

    std::mt19937 rng(1914);
    std::size_t  proven = 0;
    for (int i = 0; i < 200; ++i) {
      std::vector<Rule> rules;
      for (std::size_t j = 0, n = 1 + rng() % 3; j < n; ++j) {
        std::size_t len = 1 + rng() % 2;
        auto        lhs = testing::random_positive_word(rng, 3, len);
        auto        rhs = testing::random_positive_word(rng, 3, len);
        if (lhs != rhs) {
          rules.push_back({lhs, rhs});
        }
      }
      if (rules.empty()) {
        rules.push_back({{0, 1}, {1, 0}});
      }
      auto sys = thue_closure(RewriteSystem({'a', 'b', 'c'}, rules, SystemKind::SemiThue));
      auto a   = testing::random_positive_word(rng, 3, 1 + rng() % 4);
      auto b   = testing::random_positive_word(rng, 3, 1 + rng() % 4);
      auto str = search_equivalence(a, b, sys, 300);
      auto tr  = search_tree_equivalence(word_to_comb(a, sys.names()),
                                         word_to_comb(b, sys.names()), comb_rules(sys), 300);
      require(str.status == tr.status, "instance " + std::to_string(i) + ": "
                                           + std::string(to_string(str.status)) + " vs "
                                           + std::string(to_string(tr.status)));
      if (str.trace) {
        require(str.trace->steps.size() == tr.trace->steps.size(),
                "instance " + std::to_string(i) + ": derivation lengths differ");
        ++proven;
      }
    }
    return "(A+B)+C ~ A+(B+C) in 1 step; 200 comb instances agree ("
           + std::to_string(proven) + " proven)";
  }

  ////////////////////////////////////////////////////////////////////////
  // 9 determinism
  ////////////////////////////////////////////////////////////////////////

  std::string shell_quote(std::string const& s) {
    std::string out = "'";
    for (char c : s) {
      out += c == '\'' ? std::string("'\\''") : std::string(1, c);
    }
    return out + "'";
  }

  std::string run_cli(std::string const& exe, std::vector<std::string> const& args) {
    std::string cmd = shell_quote(exe);
    for (auto const& a : args) {
      cmd += ' ' + shell_quote(a);
    }
    cmd += " 2>/dev/null";
    FILE* pipe = popen(cmd.c_str(), "r");
    require(pipe != nullptr, "cannot start " + exe);
    std::string out;
    char        buf[4096];
    for (std::size_t n; (n = fread(buf, 1, sizeof buf, pipe)) > 0;) {
      out.append(buf, n);
    }
    int status = pclose(pipe);
    int code   = WIFEXITED(status) ? WEXITSTATUS(status) : -1;
    return testing::golden_record(code, out);
  }

  std::string determinism(std::string const& exe, std::string const& golden_dir) {
    auto cases = testing::golden_cases(golden_dir);
    require(!cases.empty(), "no golden cases in " + golden_dir);
    for (auto const& c : cases) {
      auto first  = run_cli(exe, c.args);
      auto second = run_cli(exe, c.args);
      require(first == second, c.name + ": runs differ");
      require(first == testing::slurp(c.expected), c.name + ": differs from the golden output");
    }
    return std::to_string(cases.size()) + " golden invocations, byte-identical twice";
  }

}  // namespace

int main(int argc, char** argv) {
  if (argc != 3) {
    std::cerr << "usage: acceptance <wordprob-cli> <golden-dir>\n";
    return 1;
  }
  std::string exe = argv[1], golden = argv[2];

  std::vector<Criterion> criteria = {
      {1, "Thue-Morse exactness", 1, thue_morse_exact},
      {2, "cube- and square-freeness", 10000, power_freeness},
      {3, "small cancellation of surface groups", 0, small_cancellation},
      {4, "Dehn's algorithm on genus 2", 5000, dehn_algorithm},
      {5, "coset enumeration of D5", 0, coset_enumeration},
      {6, "Ceijtin system", 0, ceijtin_system},
      {7, "TM reduction", 30000, tm_reduction},
      {8, "tree rewriting", 0, tree_rewriting},
      {9, "CLI determinism", 0, [&] { return determinism(exe, golden); }},
  };

  int failures = 0;
  for (auto const& c : criteria) {
    std::string detail;
    bool        ok    = true;
    auto        begin = Clock::now();
    try {
      detail = c.body();
    } catch (Failed const& f) {
      ok     = false;
      detail = f.why;
    } catch (std::exception const& e) {
      ok     = false;
      detail = std::string("exception: ") + e.what();
    }
    double ms = std::chrono::duration<double, std::milli>(Clock::now() - begin).count();
    if (ok && c.limit_ms > 0 && ms > c.limit_ms) {
      ok     = false;
      detail = "took " + std::to_string(ms) + " ms, limit " + std::to_string(c.limit_ms);
    }
    failures += !ok;
    std::printf("%s C%d %s (%.1f ms): %s\n", ok ? "PASS" : "FAIL", c.number, c.title.c_str(), ms,
                detail.c_str());
  }
  std::printf("%d/%zu criteria passed\n", static_cast<int>(criteria.size()) - failures,
              criteria.size());
  return failures == 0 ? 0 : 1;
}
