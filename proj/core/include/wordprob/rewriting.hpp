#pragma once

#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "wordprob/presentations.hpp"
#include "wordprob/search.hpp"

namespace wordprob {

  // Positive word; each code unit is an alphabet ordinal.
  using Word = std::u32string;

  struct Rule {
    Word lhs;
    Word rhs;
    friend bool operator==(Rule const&, Rule const&) = default;
  };

  enum class SystemKind { SemiThue, Thue };

  /// Ordered productions (lhs -> rhs) over a finite alphabet of single
  /// character names. A Thue system is closed under swapping sides.
  class RewriteSystem {
   public:
    RewriteSystem() = default;
    // Throws std::invalid_argument on an empty lhs, a letter outside the
    // alphabet, or a Thue system that is not closed under swap.
    RewriteSystem(std::vector<char> names, std::vector<Rule> rules, SystemKind kind);

    std::size_t              alphabet_size() const noexcept { return _names.size(); }
    std::vector<char> const& names() const noexcept { return _names; }
    std::vector<Rule> const& rules() const noexcept { return _rules; }
    SystemKind               kind() const noexcept { return _kind; }

    // For Thue systems: index of the rule (rhs -> lhs).
    std::size_t inverse_rule(std::size_t i) const { return _inverse.at(i); }

    friend bool operator==(RewriteSystem const& a, RewriteSystem const& b) {
      return a._names == b._names && a._rules == b._rules && a._kind == b._kind;
    }

   private:
    std::vector<char>        _names;
    std::vector<Rule>        _rules;
    SystemKind               _kind = SystemKind::SemiThue;
    std::vector<std::size_t> _inverse;
  };

  // Thue system of the presentation: g -> h for each equation, then the
  // reversed rules (see thue_closure). Throws std::invalid_argument if an
  // equation has an empty side.
  RewriteSystem to_rewrite_system(SemigroupPresentation const& p);

  /// Input rules in order, then each missing swap (h, g) in order.
  RewriteSystem thue_closure(RewriteSystem const& sys);

  /// x.lhs.y -> x.rhs.y with |x| = pos. Throws std::out_of_range for a bad
  /// rule index and std::invalid_argument if lhs does not occur at pos.
  Word apply_rule(Word const& w, RewriteSystem const& sys, std::size_t rule, std::size_t pos);

  struct Successor {
    Word        word;
    std::size_t rule;
    std::size_t pos;
    friend bool operator==(Successor const&, Successor const&) = default;
  };

  /// Every one-step rewrite of w. Positions are scanned left to right and,
  /// at each position, rules in index order; a result word reached more than
  /// once keeps its first witness.
  std::vector<Successor> successors(Word const& w, RewriteSystem const& sys);

  struct RewriteStep {
    std::size_t rule = 0;
    std::size_t pos  = 0;
    friend bool operator==(RewriteStep const&, RewriteStep const&) = default;
  };

  struct DerivationTrace {
    Word                     start;
    std::vector<RewriteStep> steps;
    Word                     end;
  };

  // Re-applies every step from trace.start; throws std::invalid_argument
  // when a step does not match. Returns the resulting word.
  Word replay(DerivationTrace const& trace, RewriteSystem const& sys);
  bool replays_exactly(DerivationTrace const& trace, RewriteSystem const& sys);

  struct SearchOutcome {
    SearchStatus                   status = SearchStatus::BudgetExhausted;
    std::optional<DerivationTrace> trace;  // set iff Proven
    SearchStats                    stats;
  };

  /// Thue systems: bidirectional BFS over the equivalence class.
  /// Semi-Thue systems: forward reachability from w1.
  /// `budget` bounds the number of expanded states (must be >= 1).
  SearchOutcome search_equivalence(Word const&          w1,
                                   Word const&          w2,
                                   RewriteSystem const& sys,
                                   std::size_t          budget);

  ////////////////////////////////////////////////////////////////////////
  // Text format
  //
  //   alpha: a b c d e
  //   kind: thue            (or semithue, the default)
  //   rule: ac -> ca
  //   eq: ce = eca          (shorthand; implies kind thue unless stated)
  //
  // Letters are single printable characters; "" is the empty word. A Thue
  // system is closed under swap after parsing.
  ////////////////////////////////////////////////////////////////////////

  RewriteSystem parse_rewrite_system(std::string_view text);
  std::string   to_string(RewriteSystem const& sys);

  Word        parse_word(std::string_view token, RewriteSystem const& sys);
  std::string render(Word const& w, RewriteSystem const& sys);

  // One line per step: "step <rule#> @<pos> => <word>".
  std::string format_trace(DerivationTrace const& trace, RewriteSystem const& sys);

}  // namespace wordprob
