#include "wordprob/words.hpp"

#include <algorithm>
#include <cctype>
#include <stdexcept>

#include "wordprob/errors.hpp"

namespace wordprob {

  GroupWord GroupWord::subword(std::size_t pos, std::size_t len) const {
    if (pos > _letters.size() || len > _letters.size() - pos) {
      throw std::out_of_range("subword range exceeds word length");
    }
    return GroupWord(std::vector<GenLetter>(
        _letters.begin() + pos, _letters.begin() + pos + len));
  }

  GroupWord& GroupWord::operator*=(GroupWord const& rhs) {
    _letters.insert(_letters.end(), rhs._letters.begin(), rhs._letters.end());
    return *this;
  }

  GroupWord free_reduce(GroupWord const& w) {
    std::vector<GenLetter> stack;
    stack.reserve(w.size());
    for (GenLetter x : w) {
      if (!stack.empty() && stack.back().cancels(x)) {
        stack.pop_back();
      } else {
        stack.push_back(x);
      }
    }
    return GroupWord(std::move(stack));
  }

  bool is_freely_reduced(GroupWord const& w) {
    auto const& v = w.letters();
    return std::adjacent_find(v.begin(), v.end(), [](auto x, auto y) {
             return x.cancels(y);
           })
           == v.end();
  }

  GroupWord invert(GroupWord const& w) {
    std::vector<GenLetter> out;
    out.reserve(w.size());
    for (auto it = w.letters().rbegin(); it != w.letters().rend(); ++it) {
      out.push_back(it->inverse());
    }
    return GroupWord(std::move(out));
  }

  CyclicReduction cyclic_reduce(GroupWord const& w) {
    GroupWord reduced = free_reduce(w);
    if (reduced.empty()) {
      return {GroupWord{}, free_reduce(w.subword(0, w.size() / 2))};
    }
    std::size_t n = reduced.size();
    std::size_t k = 0;
    // A freely reduced nonempty word cannot peel down to nothing, so 2k < n.
    while (2 * k + 1 < n && reduced[k].cancels(reduced[n - 1 - k])) {
      ++k;
    }
    return {reduced.subword(k, n - 2 * k), reduced.subword(0, k)};
  }

  bool is_cyclically_reduced(GroupWord const& w) {
    return is_freely_reduced(w)
           && (w.size() < 2 || !w[0].cancels(w[w.size() - 1]));
  }

  GroupWord rotate(GroupWord const& w, std::size_t k) {
    if (w.empty()) {
      return w;
    }
    k %= w.size();
    std::vector<GenLetter> out(w.begin() + k, w.end());
    out.insert(out.end(), w.begin(), w.begin() + k);
    return GroupWord(std::move(out));
  }

  std::vector<std::int64_t> exponent_vector(GroupWord const& w,
                                            std::size_t      n_gens) {
    std::vector<std::int64_t> out(n_gens, 0);
    for (GenLetter x : w) {
      if (x.index >= n_gens) {
        throw std::out_of_range("generator index " + std::to_string(x.index)
                                + " out of range for "
                                + std::to_string(n_gens) + " generators");
      }
      out[x.index] += x.sign;
    }
    return out;
  }

  GroupWord commutator(GroupWord const& a, GroupWord const& b) {
    return a * b * invert(a) * invert(b);
  }

  GroupWord power(GroupWord const& w, int exponent) {
    GroupWord base = exponent < 0 ? invert(w) : w;
    GroupWord out;
    for (int i = 0; i < std::abs(exponent); ++i) {
      out *= base;
    }
    return out;
  }

  GeneratorNames GeneratorNames::standard(std::size_t n) {
    if (n > 26) {
      throw std::invalid_argument("at most 26 generators have letter names");
    }
    std::vector<char> names;
    for (std::size_t i = 0; i < n; ++i) {
      names.push_back(static_cast<char>('a' + i));
    }
    return GeneratorNames(std::move(names));
  }

  GeneratorNames::GeneratorNames(std::vector<char> names)
      : _names(std::move(names)) {
    for (std::size_t i = 0; i < _names.size(); ++i) {
      char c = _names[i];
      if (c < 'a' || c > 'z') {
        throw ParseError(std::string("generator name '") + c
                         + "' is not a lowercase letter");
      }
      if (std::find(_names.begin(), _names.begin() + i, c)
          != _names.begin() + i) {
        throw ParseError(std::string("duplicate generator name '") + c + "'");
      }
    }
  }

  GroupWord parse_word(std::string_view text, GeneratorNames const& names) {
    GroupWord w;
    if (text == "1") {
      return w;
    }
    for (char c : text) {
      char lower = static_cast<char>(
          std::tolower(static_cast<unsigned char>(c)));
      auto const& v  = names.names();
      auto        it = std::find(v.begin(), v.end(), lower);
      if (it == v.end() || !std::isalpha(static_cast<unsigned char>(c))) {
        throw ParseError(std::string("unknown letter '") + c + "' in word \""
                         + std::string(text) + "\"");
      }
      w.push_back({static_cast<std::uint32_t>(it - v.begin()),
                   c == lower ? 1 : -1});
    }
    return w;
  }

  std::string to_string(GroupWord const& w, GeneratorNames const& names) {
    if (w.empty()) {
      return "1";
    }
    std::string out;
    out.reserve(w.size());
    for (GenLetter x : w) {
      char c = names.name(x.index);
      out.push_back(x.sign > 0 ? c
                               : static_cast<char>(std::toupper(
                                   static_cast<unsigned char>(c))));
    }
    return out;
  }

}  // namespace wordprob
