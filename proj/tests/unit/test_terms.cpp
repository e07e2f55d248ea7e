#include <catch_amalgamated.hpp>

#include "test_support.hpp"
#include "wordprob/errors.hpp"
#include "wordprob/terms.hpp"

using namespace wordprob;

namespace {
  Term t(std::string_view s) {
    return parse_term(s);
  }

  TreeRule const assoc = parse_tree_rule("((?x ?y) ?z) => (?x (?y ?z))");

  // Random length-preserving Thue system: its classes are finite.
  RewriteSystem random_swap_system(std::mt19937& rng) {
    std::vector<Rule> rules;
    for (std::size_t i = 0, n = 1 + rng() % 3; i < n; ++i) {
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
    return thue_closure(RewriteSystem({'a', 'b', 'c'}, rules, SystemKind::SemiThue));
  }
}  // namespace

TEST_CASE("term construction and text format", "[terms]") {
  auto x = t("((A B) C)");
  CHECK(x.is_node());
  CHECK(x.size() == 5);
  CHECK(x.depth() == 2);
  CHECK(to_string(x) == "((A B) C)");
  CHECK(x.left().right().symbol() == "B");
  CHECK(t("A") == Term::constant("A"));
  CHECK(t("?x").is_variable());
  CHECK(t("A:num").type() == std::optional<std::string>("num"));
  CHECK(to_string(t("(?x:num  B)")) == "(?x:num B)");
  CHECK(x == t(" ( (A B)   C ) "));
  CHECK(x.hash() == t("((A B) C)").hash());
  CHECK_FALSE(x == t("(A (B C))"));
  CHECK(t("A") < t("(A B)"));
  CHECK_THROWS_AS(t("(A B"), ParseError);
  CHECK_THROWS_AS(t("(A B C)"), ParseError);
  CHECK_THROWS_AS(t(""), ParseError);
  CHECK_THROWS_AS(t("A)"), ParseError);
  CHECK_THROWS_AS(x.symbol(), std::logic_error);
  CHECK_THROWS_AS(t("A").left(), std::logic_error);
}

TEST_CASE("match_subst", "[terms]") {
  auto any = match_subst(t("?x"), t("((A B) C)"));
  REQUIRE(any);
  CHECK(any->at("x") == t("((A B) C)"));

  CHECK_FALSE(match_subst(t("(?x ?x)"), t("(A B)")));
  CHECK(match_subst(t("(?x ?x)"), t("((A B) (A B))")));

  auto s = match_subst(t("((?x ?y) ?z)"), t("((A B) C)"));
  REQUIRE(s);
  CHECK(s->at("x") == t("A"));
  CHECK(s->at("y") == t("B"));
  CHECK(s->at("z") == t("C"));

  CHECK_FALSE(match_subst(t("((?x ?y) ?z)"), t("(A (B C))")));
  CHECK(match_subst(t("?n:num"), t("A:num")));
  CHECK_FALSE(match_subst(t("?n:num"), t("A")));
  CHECK_FALSE(match_subst(t("?n:num"), t("(A:num B:num)")));
  CHECK_FALSE(match_subst(t("A:num"), t("A")));
  CHECK(match_subst(t("A"), t("A")));
}

TEST_CASE("substitute inverts match", "[terms][property]") {
  std::vector<std::string> patterns = {"((?x ?y) ?z)", "(?x (?y ?x))", "?x", "(A ?x)"};
  std::vector<std::string> subjects = {"((A B) C)",       "(A (B A))",        "(((A B) C) D)",
                                       "(A ((B C) (D E)))", "((A A) (A A))", "B"};
  for (auto const& p : patterns) {
    for (auto const& s : subjects) {
      if (auto m = match_subst(t(p), t(s))) {
        CHECK(substitute(t(p), *m) == t(s));
      }
    }
  }
}

TEST_CASE("paths and apply_tree_rule", "[terms]") {
  auto x = t("(((A B) C) D)");
  CHECK(subterm_at(x, {Direction::Left}) == t("((A B) C)"));
  CHECK(replace_at(x, {Direction::Right}, t("E")) == t("(((A B) C) E)"));
  CHECK_THROWS_AS(subterm_at(x, {Direction::Right, Direction::Left}), std::invalid_argument);
  CHECK(to_string(Path{}) == ".");
  CHECK(to_string(Path{Direction::Left, Direction::Right}) == "LR");

  CHECK(apply_tree_rule(t("((A B) C)"), assoc, {}) == t("(A (B C))"));
  CHECK(apply_tree_rule(x, assoc, {Direction::Left}) == t("((A (B C)) D)"));
  CHECK_THROWS_AS(apply_tree_rule(t("(A (B C))"), assoc, {}), std::invalid_argument);

  TreeRule identity(t("?x"), t("?x"));
  CHECK(apply_tree_rule(x, identity, {Direction::Left, Direction::Left}) == x);

  CHECK_THROWS_AS(TreeRule(t("?x"), t("(?x ?y)")), std::invalid_argument);
  CHECK_FALSE(TreeRule(t("(?x ?y)"), t("?x")).reversible());
  CHECK(assoc.reversible());
}

TEST_CASE("search_tree_equivalence", "[terms][search]") {
  auto r = search_tree_equivalence(t("((A B) C)"), t("(A (B C))"), {assoc}, 10);
  REQUIRE(r.status == SearchStatus::Proven);
  REQUIRE(r.trace);
  CHECK(r.trace->steps.size() == 1);
  CHECK(r.trace->steps[0] == TreeStep{0, RuleDirection::Forward, {}});
  CHECK(replay(*r.trace, {assoc}) == t("(A (B C))"));

  auto back = search_tree_equivalence(t("(A (B C))"), t("((A B) C)"), {assoc}, 10);
  REQUIRE(back.status == SearchStatus::Proven);
  CHECK(back.trace->steps[0].direction == RuleDirection::Backward);

  r = search_tree_equivalence(t("((A B) C)"), t("((A B) C)"), {assoc}, 1);
  REQUIRE(r.status == SearchStatus::Proven);
  CHECK(r.trace->steps.empty());

  CHECK(search_tree_equivalence(t("A"), t("B"), {assoc}, 10).status
        == SearchStatus::RefutedExhausted);

  // Five leaves: 14 bracketings, all connected by associativity.
  auto five = search_tree_equivalence(t("((((A B) C) D) E)"), t("(A (B (C (D E))))"), {assoc},
                                      100);
  REQUIRE(five.status == SearchStatus::Proven);
  CHECK(five.trace->steps.size() == 3);
  CHECK(replay(*five.trace, {assoc}) == t("(A (B (C (D E))))"));

  CHECK(search_tree_equivalence(t("((A B) C)"), t("((A C) B)"), {assoc}, 100).status
        == SearchStatus::RefutedExhausted);
  CHECK_THROWS_AS(search_tree_equivalence(t("A"), t("A"), {TreeRule(t("(?x ?y)"), t("?x"))}, 10),
                  std::invalid_argument);
  CHECK_THROWS_AS(search_tree_equivalence(t("A"), t("A"), {assoc}, 0), std::invalid_argument);
}

TEST_CASE("associativity preserves the leaf sequence", "[terms][property]") {
  std::mt19937 rng(2024);
  auto         term = t("(((A B) (C D)) ((E F) G))");
  auto         leaves = leaf_constants(term);
  for (int i = 0; i < 300; ++i) {
    auto next = tree_successors(term, {assoc});
    REQUIRE_FALSE(next.empty());
    auto const& pick = next[rng() % next.size()];
    Term        redo = pick.step.direction == RuleDirection::Forward
                           ? apply_tree_rule(term, assoc, pick.step.path)
                           : apply_tree_rule(term, TreeRule(assoc.rhs(), assoc.lhs()),
                                             pick.step.path);
    CHECK(redo == pick.term);
    term = pick.term;
    CHECK(leaf_constants(term) == leaves);
    CHECK(term.size() == 13);
  }
}

TEST_CASE("comb embedding", "[terms]") {
  std::vector<char> names = {'a', 'b'};
  CHECK(to_string(word_to_comb({0, 1}, names)) == "(a (b nil))");
  CHECK(word_to_comb({}, names) == t("nil"));

  auto sys   = thue_closure(RewriteSystem({'a', 'b', 'c'}, {Rule{{0, 1}, {2}}},
                                        SystemKind::SemiThue));
  auto rules = comb_rules(sys);
  REQUIRE(rules.size() == 2);
  CHECK(to_string(rules[0]) == "(a (b ?rest)) => (c ?rest)");
}

TEST_CASE("comb search agrees with string search", "[terms][property]") {
  std::mt19937 rng(1234);
  for (int trial = 0; trial < 200; ++trial) {
    auto sys  = random_swap_system(rng);
    auto a    = testing::random_positive_word(rng, 3, 1 + rng() % 4);
    auto b    = testing::random_positive_word(rng, 3, 1 + rng() % 4);
    auto str  = search_equivalence(a, b, sys, 5000);
    auto tree = search_tree_equivalence(word_to_comb(a, sys.names()),
                                        word_to_comb(b, sys.names()), comb_rules(sys), 5000);
    INFO("trial " << trial);
    CHECK(str.status == tree.status);
    if (str.trace && tree.trace) {
      CHECK(str.trace->steps.size() == tree.trace->steps.size());
    }
  }
}
