#pragma once

#include <map>
#include <memory>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "wordprob/rewriting.hpp"
#include "wordprob/search.hpp"

namespace wordprob {

  /// Finite binary rooted tree. Leaves are constants or pattern variables,
  /// either of which may carry a type tag. Immutable; copies share structure.
  class Term {
   public:
    static Term constant(std::string symbol, std::optional<std::string> type = {});
    static Term variable(std::string name, std::optional<std::string> type = {});
    static Term node(Term left, Term right);

    bool is_node() const noexcept;
    bool is_leaf() const noexcept { return !is_node(); }
    bool is_variable() const noexcept;

    // Leaf accessors; throw std::logic_error on a node.
    std::string const&                symbol() const;
    std::optional<std::string> const& type() const;
    // Node accessors; throw std::logic_error on a leaf.
    Term const& left() const;
    Term const& right() const;

    std::size_t size() const noexcept;  // number of vertices
    std::size_t depth() const noexcept;
    std::size_t hash() const noexcept;

    friend bool operator==(Term const& a, Term const& b);
    // Structural total order: leaves before nodes, nodes lexicographic.
    friend bool operator<(Term const& a, Term const& b);

   private:
    struct Impl;
    explicit Term(std::shared_ptr<Impl const> impl) : _impl(std::move(impl)) {}
    std::shared_ptr<Impl const> _impl;
  };

  struct TermHash {
    std::size_t operator()(Term const& t) const noexcept { return t.hash(); }
  };

  enum class Direction { Left, Right };
  using Path = std::vector<Direction>;

  using Substitution = std::map<std::string, Term>;

  /// Throws std::invalid_argument if rhs uses a variable absent from lhs.
  class TreeRule {
   public:
    TreeRule(Term lhs, Term rhs);
    Term const& lhs() const noexcept { return _lhs; }
    Term const& rhs() const noexcept { return _rhs; }
    // Usable right-to-left: both sides have the same variables.
    bool reversible() const noexcept { return _reversible; }

   private:
    Term _lhs;
    Term _rhs;
    bool _reversible;
  };

  /// The substitution s with s(pattern) == subject, if any. A variable binds
  /// consistently across repeated occurrences; a typed variable binds only
  /// to a leaf constant with the same tag; a typed constant requires the
  /// subject leaf to carry that tag.
  std::optional<Substitution> match_subst(Term const& pattern, Term const& subject);

  Term substitute(Term const& t, Substitution const& s);

  // Throw std::invalid_argument when the path leaves the tree.
  Term const& subterm_at(Term const& t, Path const& path);
  Term        replace_at(Term const& t, Path const& path, Term const& replacement);

  /// Rewrites the subterm at path with rule.lhs -> rule.rhs. Throws
  /// std::invalid_argument on an invalid path or when lhs does not match.
  Term apply_tree_rule(Term const& t, TreeRule const& rule, Path const& path);

  enum class RuleDirection { Forward, Backward };

  struct TreeStep {
    std::size_t   rule = 0;
    RuleDirection direction = RuleDirection::Forward;
    Path          path;
    friend bool operator==(TreeStep const&, TreeStep const&) = default;
  };

  struct TreeTrace {
    Term                  start;
    std::vector<TreeStep> steps;
    Term                  end;
  };

  struct TreeSearchOutcome {
    SearchStatus             status = SearchStatus::BudgetExhausted;
    std::optional<TreeTrace> trace;
    SearchStats              stats;
  };

  struct TreeSuccessor {
    Term     term;
    TreeStep step;
  };

  /// All one-step rewrites, both directions. Subterms are visited in preorder
  /// (root, left, right); at each one, rules in order, forward then backward.
  /// Duplicate results keep their first witness.
  std::vector<TreeSuccessor> tree_successors(Term const& t, std::vector<TreeRule> const& rules);

  /// Bidirectional search of the symmetric closure of `rules`. Throws
  /// std::invalid_argument if budget is 0 or some rule is not reversible.
  TreeSearchOutcome search_tree_equivalence(Term const&                  a,
                                            Term const&                  b,
                                            std::vector<TreeRule> const& rules,
                                            std::size_t                  budget);

  // Throws std::invalid_argument on a step that does not apply.
  Term replay(TreeTrace const& trace, std::vector<TreeRule> const& rules);

  // Leaf constants, left to right.
  std::vector<std::string> leaf_constants(Term const& t);

  ////////////////////////////////////////////////////////////////////////
  // Strings as right combs: a1 a2 ... an becomes (a1 (a2 ... (an nil))).
  ////////////////////////////////////////////////////////////////////////

  Term                  word_to_comb(Word const& w, std::vector<char> const& names);
  // g -> h becomes (g1 ... (gk ?rest)) => (h1 ... (hm ?rest)).
  std::vector<TreeRule> comb_rules(RewriteSystem const& sys);

  ////////////////////////////////////////////////////////////////////////
  // Text format: "((A B) C)". Leaves are identifiers [A-Za-z0-9_$]+, "?x"
  // marks a variable, and ":tag" after a leaf attaches a type. Rules are
  // written "lhs => rhs"; rule files hold one rule per line.
  ////////////////////////////////////////////////////////////////////////

  Term                  parse_term(std::string_view text);
  TreeRule              parse_tree_rule(std::string_view text);
  std::vector<TreeRule> parse_tree_rules(std::string_view text);
  std::string           to_string(Term const& t);
  std::string           to_string(TreeRule const& r);
  std::string           to_string(Path const& p);  // "LR", or "." for root

}  // namespace wordprob
