#pragma once

#include <optional>
#include <string_view>
#include <vector>

#include "wordprob/presentations.hpp"
#include "wordprob/words.hpp"

namespace wordprob {

  enum class DehnVerdict { Trivial, NonTrivialCertified, Inconclusive };

  std::string_view to_string(DehnVerdict v);

  /// One length-reducing replacement: the subword of length `length` at
  /// `position` equals the prefix of symmetrized word `relator`, and is
  /// replaced by the inverse of that relator's remaining suffix.
  struct DehnStep {
    std::size_t relator  = 0;
    std::size_t position = 0;
    std::size_t length   = 0;

    friend bool operator==(DehnStep const&, DehnStep const&) = default;
  };

  struct DehnOutcome {
    DehnVerdict           verdict = DehnVerdict::Inconclusive;
    GroupWord             start;  // free reduction of the input
    std::vector<DehnStep> trace;
    GroupWord             final_word;
  };

  /// Applies one step to a freely reduced word, or returns nothing when no
  /// subword covers strictly more than half of a symmetrized relator.
  ///
  /// Selection is deterministic: the leftmost position with any majority
  /// match wins; there, the longest match; then the lowest relator index.
  /// The result is freely reduced and strictly shorter than w.
  std::optional<std::pair<GroupWord, DehnStep>>
  dehn_step(GroupWord const& w, SymmetrizedRelators const& s);

  /// Runs dehn_step to a fixed point. The verdict is NonTrivialCertified only
  /// when the presentation satisfies C'(1/6) (or has no relators).
  DehnOutcome dehn_solve(GroupWord const& w, GroupPresentation const& p);
  DehnOutcome dehn_solve(GroupWord const&           w,
                         SymmetrizedRelators const& s,
                         bool                       small_cancellation);

  // Re-applies each recorded step from free_reduce(input), verifying every
  // match. Throws std::invalid_argument if a step does not apply.
  GroupWord replay_dehn_trace(GroupWord const&             input,
                              SymmetrizedRelators const&   s,
                              std::vector<DehnStep> const& trace);

}  // namespace wordprob
