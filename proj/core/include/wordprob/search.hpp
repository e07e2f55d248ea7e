#pragma once

#include <cstddef>
#include <string_view>

namespace wordprob {

  enum class SearchStatus {
    Proven,            // a replayable derivation was found
    RefutedExhausted,  // a whole reachability set was enumerated, no meeting
    BudgetExhausted    // ran out of expansions first
  };

  std::string_view to_string(SearchStatus s);

  struct SearchStats {
    std::size_t expanded      = 0;  // states whose successors were generated
    std::size_t frontier_peak = 0;  // largest combined frontier
    std::size_t depth         = 0;  // BFS levels completed (both sides)
  };

}  // namespace wordprob
