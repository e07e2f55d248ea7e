#pragma once

#include <cstdint>
#include <initializer_list>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

namespace wordprob {

  /// A generator or its inverse: generator ordinal plus sign (+1 or -1).
  struct GenLetter {
    std::uint32_t index = 0;
    int           sign  = 1;

    constexpr GenLetter inverse() const noexcept { return {index, -sign}; }
    constexpr bool cancels(GenLetter other) const noexcept {
      return index == other.index && sign == -other.sign;
    }
    friend constexpr bool operator==(GenLetter, GenLetter) = default;
    friend constexpr auto operator<=>(GenLetter, GenLetter) = default;
  };

  /// Word over generators and their inverses. No reduction is performed on
  /// construction; use free_reduce for that.
  class GroupWord {
   public:
    GroupWord() = default;
    explicit GroupWord(std::vector<GenLetter> letters)
        : _letters(std::move(letters)) {}
    GroupWord(std::initializer_list<GenLetter> letters) : _letters(letters) {}

    std::vector<GenLetter> const& letters() const noexcept { return _letters; }
    std::size_t size() const noexcept { return _letters.size(); }
    bool        empty() const noexcept { return _letters.empty(); }
    GenLetter   operator[](std::size_t i) const { return _letters[i]; }

    auto begin() const noexcept { return _letters.begin(); }
    auto end() const noexcept { return _letters.end(); }

    void push_back(GenLetter x) { _letters.push_back(x); }

    // Contiguous letters [pos, pos + len).
    GroupWord subword(std::size_t pos, std::size_t len) const;

    GroupWord& operator*=(GroupWord const& rhs);
    friend GroupWord operator*(GroupWord lhs, GroupWord const& rhs) {
      return lhs *= rhs;
    }
    friend bool operator==(GroupWord const&, GroupWord const&) = default;
    friend auto operator<=>(GroupWord const& a, GroupWord const& b) {
      return a._letters <=> b._letters;
    }

   private:
    std::vector<GenLetter> _letters;
  };

  GroupWord free_reduce(GroupWord const& w);
  bool      is_freely_reduced(GroupWord const& w);

  // Reverses the letters and flips every sign.
  GroupWord invert(GroupWord const& w);

  // Result of cyclic_reduce: w is freely equal to conjugator * core *
  // invert(conjugator), and core is cyclically reduced.
  struct CyclicReduction {
    GroupWord core;
    GroupWord conjugator;
  };

  /// Strips matching first/last inverse pairs from the free reduction of w.
  /// If w freely reduces to the empty word the core is empty and the
  /// conjugator is the free reduction of the first floor(|w|/2) letters of
  /// w, so that a perfect tower u * invert(u) yields u.
  CyclicReduction cyclic_reduce(GroupWord const& w);
  bool            is_cyclically_reduced(GroupWord const& w);

  // Cyclic shift: letters [k, n) followed by [0, k).
  GroupWord rotate(GroupWord const& w, std::size_t k);

  // Signed letter count per generator. Throws std::out_of_range if a letter
  // index is not below n_gens.
  std::vector<std::int64_t> exponent_vector(GroupWord const& w,
                                            std::size_t      n_gens);

  // a * b * invert(a) * invert(b), unreduced.
  GroupWord commutator(GroupWord const& a, GroupWord const& b);
  GroupWord power(GroupWord const& w, int exponent);

  ////////////////////////////////////////////////////////////////////////
  // Text format
  //
  // Each generator has a single lowercase letter name; the uppercase letter
  // denotes its inverse. The empty word is written "1".
  ////////////////////////////////////////////////////////////////////////

  class GeneratorNames {
   public:
    // Names a, b, c, ... for n generators (n <= 26).
    static GeneratorNames standard(std::size_t n);

    // One distinct lowercase letter per generator. Throws ParseError.
    explicit GeneratorNames(std::vector<char> names);
    GeneratorNames() = default;

    std::size_t              size() const noexcept { return _names.size(); }
    char                     name(std::size_t i) const { return _names.at(i); }
    std::vector<char> const& names() const noexcept { return _names; }

    friend bool operator==(GeneratorNames const&, GeneratorNames const&)
        = default;

   private:
    std::vector<char> _names;
  };

  // Throws ParseError on letters not in names.
  GroupWord   parse_word(std::string_view text, GeneratorNames const& names);
  std::string to_string(GroupWord const& w, GeneratorNames const& names);

}  // namespace wordprob
