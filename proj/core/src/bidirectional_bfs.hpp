#pragma once

// Level-synchronous breadth-first search shared by the string and tree
// equivalence searches.
//
// In bidirectional mode both start states are expanded with the same
// successor function (the step relation is symmetric) and the side with the
// smaller frontier is grown one full level at a time. The two starts are
// assigned to sides by `Less`, so search(a, b) and search(b, a) perform
// identical work and report the same status; the returned path is oriented
// from `from` to `to` regardless.
//
// In forward mode only `from` is expanded and `to` is a plain target.

#include <algorithm>
#include <functional>
#include <unordered_map>
#include <utility>
#include <vector>

#include "wordprob/search.hpp"

namespace wordprob::detail {

  template <typename Step>
  struct BfsResult {
    SearchStatus      status = SearchStatus::BudgetExhausted;
    std::vector<Step> steps;  // from `from` to `to` when Proven
    SearchStats       stats;
  };

  template <typename State,
            typename Step,
            typename Hash,
            typename Less,
            typename Successors,  // State -> vector<pair<State, Step>>
            typename Reverse>     // Step (x -> y) -> Step (y -> x)
  BfsResult<Step> bfs_search(State const& from,
                             State const& to,
                             std::size_t  budget,
                             bool         bidirectional,
                             Successors&& successors,
                             Reverse&&    reverse) {
    BfsResult<Step> result;
    if (from == to) {
      result.status = SearchStatus::Proven;
      return result;
    }

    struct Node {
      State       state;
      std::size_t parent;  // index into nodes; npos for the root
      Step        step;    // parent -> this
    };
    constexpr std::size_t npos = static_cast<std::size_t>(-1);

    bool swapped = bidirectional && Less{}(to, from);
    State const& start0 = swapped ? to : from;
    State const& start1 = swapped ? from : to;

    std::vector<Node>                                  nodes[2];
    std::unordered_map<State, std::size_t, Hash>       seen[2];
    std::vector<std::size_t>                           frontier[2];
    std::size_t                                        depth[2] = {0, 0};

    nodes[0].push_back({start0, npos, Step{}});
    nodes[1].push_back({start1, npos, Step{}});
    seen[0].emplace(start0, 0);
    seen[1].emplace(start1, 0);
    frontier[0].push_back(0);
    frontier[1].push_back(0);

    // Steps from a side's root down to node i.
    auto path_to = [&](int side, std::size_t i) {
      std::vector<Step> out;
      for (; nodes[side][i].parent != npos; i = nodes[side][i].parent) {
        out.push_back(nodes[side][i].step);
      }
      std::reverse(out.begin(), out.end());
      return out;
    };

    auto finish = [&](int side, std::size_t mine, std::size_t theirs) {
      // start_side -> meet, then meet -> start_other by reversing the other
      // side's root path.
      std::vector<Step> forward = path_to(side, mine);
      std::vector<Step> back    = path_to(1 - side, theirs);
      std::reverse(back.begin(), back.end());
      for (auto& s : back) {
        s = reverse(s);
      }
      forward.insert(forward.end(), back.begin(), back.end());
      // forward now runs start_side -> start_other.
      bool from_is_side = (side == 0) != swapped;
      if (!from_is_side) {
        std::reverse(forward.begin(), forward.end());
        for (auto& s : forward) {
          s = reverse(s);
        }
      }
      result.status = SearchStatus::Proven;
      result.steps  = std::move(forward);
    };

    auto& stats = result.stats;
    stats.frontier_peak = bidirectional ? 2 : 1;
    while (true) {
      if (frontier[0].empty() || (bidirectional && frontier[1].empty())) {
        result.status = SearchStatus::RefutedExhausted;
        return result;
      }
      int side = (bidirectional && frontier[1].size() < frontier[0].size()) ? 1
                                                                            : 0;
      int                      other = 1 - side;
      std::vector<std::size_t> next;
      for (std::size_t id : frontier[side]) {
        if (stats.expanded >= budget) {
          result.status = SearchStatus::BudgetExhausted;
          return result;
        }
        ++stats.expanded;
        State current = nodes[side][id].state;
        for (auto& [succ, step] : successors(current)) {
          if (seen[side].count(succ) != 0) {
            continue;
          }
          std::size_t fresh = nodes[side].size();
          nodes[side].push_back({succ, id, step});
          seen[side].emplace(succ, fresh);
          if (auto it = seen[other].find(succ); it != seen[other].end()) {
            stats.depth = depth[0] + depth[1] + 1;
            finish(side, fresh, it->second);
            return result;
          }
          next.push_back(fresh);
        }
      }
      frontier[side] = std::move(next);
      ++depth[side];
      stats.depth = depth[0] + depth[1];
      stats.frontier_peak
          = std::max(stats.frontier_peak,
                     frontier[0].size() + (bidirectional ? frontier[1].size() : 0));
    }
  }

}  // namespace wordprob::detail
