#include "wordprob/dehn.hpp"

#include <algorithm>

#include "wordprob/trace.hpp"

namespace wordprob {

  std::string_view to_string(DehnVerdict v) {
    switch (v) {
      case DehnVerdict::Trivial:
        return "trivial";
      case DehnVerdict::NonTrivialCertified:
        return "nontrivial-certified";
      case DehnVerdict::Inconclusive:
        return "inconclusive";
    }
    return "?";
  }

  namespace {
    GroupWord replacement_for(GroupWord const& relator, std::size_t matched) {
      return invert(relator.subword(matched, relator.size() - matched));
    }
  }  // namespace

  std::optional<std::pair<GroupWord, DehnStep>>
  dehn_step(GroupWord const& w, SymmetrizedRelators const& s) {
    auto const& letters = w.letters();
    for (std::size_t pos = 0; pos < letters.size(); ++pos) {
      std::optional<DehnStep> best;
      for (std::size_t j = 0; j < s.words.size(); ++j) {
        auto const& r = s.words[j].letters();
        if (r.front() != letters[pos]) {
          continue;
        }
        auto n = std::min(r.size(), letters.size() - pos);
        auto m = static_cast<std::size_t>(
            std::mismatch(r.begin(), r.begin() + n, letters.begin() + pos).first
            - r.begin());
        if (2 * m > r.size() && (!best || m > best->length)) {
          best = DehnStep{j, pos, m};
        }
      }
      if (best) {
        auto const& r   = s.words[best->relator];
        GroupWord   out = free_reduce(GroupWord(splice_checked(
            letters, pos, r.subword(0, best->length).letters(),
            replacement_for(r, best->length).letters())));
        return std::make_pair(std::move(out), *best);
      }
    }
    return std::nullopt;
  }

  DehnOutcome dehn_solve(GroupWord const&           w,
                         SymmetrizedRelators const& s,
                         bool                       small_cancellation) {
    DehnOutcome out;
    out.start      = free_reduce(w);
    out.final_word = out.start;
    while (!out.final_word.empty()) {
      auto next = dehn_step(out.final_word, s);
      if (!next) {
        break;
      }
      out.final_word = std::move(next->first);
      out.trace.push_back(next->second);
    }
    if (out.final_word.empty()) {
      out.verdict = DehnVerdict::Trivial;
    } else if (small_cancellation) {
      out.verdict = DehnVerdict::NonTrivialCertified;
    } else {
      out.verdict = DehnVerdict::Inconclusive;
    }
    return out;
  }

  DehnOutcome dehn_solve(GroupWord const& w, GroupPresentation const& p) {
    auto s  = symmetrize(p);
    bool c6 = s.empty() || max_piece_ratio(s) < Ratio(1, 6);
    return dehn_solve(w, s, c6);
  }

  GroupWord replay_dehn_trace(GroupWord const&             input,
                              SymmetrizedRelators const&   s,
                              std::vector<DehnStep> const& trace) {
    GroupWord w = free_reduce(input);
    for (auto const& step : trace) {
      if (step.relator >= s.words.size()) {
        throw std::invalid_argument("replay: relator index out of range");
      }
      auto const& r = s.words[step.relator];
      if (step.length > r.size() || 2 * step.length <= r.size()) {
        throw std::invalid_argument("replay: step does not cover more than "
                                    "half of its relator");
      }
      w = free_reduce(GroupWord(
          splice_checked(w.letters(), step.position,
                         r.subword(0, step.length).letters(),
                         replacement_for(r, step.length).letters())));
    }
    return w;
  }

}  // namespace wordprob
