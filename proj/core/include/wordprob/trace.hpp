#pragma once

#include <algorithm>
#include <cstddef>
#include <stdexcept>

namespace wordprob {

  // Replaces [pos, pos + expected.size()) of `word` by `replacement` after
  // checking that the span really holds `expected`. Works for any pair of
  // random-access sequences with insert/erase (std::u32string,
  // std::vector). This is the single primitive both the Dehn replayer and
  // the string-rewriting replayer are built on.
  template <typename Seq>
  Seq splice_checked(Seq const&  word,
                     std::size_t pos,
                     Seq const&  expected,
                     Seq const&  replacement) {
    if (pos > word.size() || expected.size() > word.size() - pos
        || !std::equal(expected.begin(), expected.end(), word.begin() + pos)) {
      throw std::invalid_argument("replay: pattern does not occur at the "
                                  "recorded position");
    }
    Seq out;
    out.reserve(word.size() - expected.size() + replacement.size());
    out.insert(out.end(), word.begin(), word.begin() + pos);
    out.insert(out.end(), replacement.begin(), replacement.end());
    out.insert(out.end(), word.begin() + pos + expected.size(), word.end());
    return out;
  }

}  // namespace wordprob
