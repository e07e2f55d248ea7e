#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <string_view>
#include <utility>
#include <variant>
#include <vector>

#include "wordprob/words.hpp"

namespace wordprob {

  /// Exact non-negative fraction, always stored in lowest terms.
  class Ratio {
   public:
    Ratio() = default;
    Ratio(std::int64_t num, std::int64_t den);

    std::int64_t num() const noexcept { return _num; }
    std::int64_t den() const noexcept { return _den; }
    double       value() const noexcept {
      return static_cast<double>(_num) / static_cast<double>(_den);
    }
    std::string to_string() const;

    friend bool operator==(Ratio const&, Ratio const&) = default;
    friend std::strong_ordering operator<=>(Ratio const& a, Ratio const& b) {
      return a._num * b._den <=> b._num * a._den;
    }

   private:
    std::int64_t _num = 0;
    std::int64_t _den = 1;
  };

  /// <generators | relators>. Relators are stored freely and cyclically
  /// reduced; relators that reduce to the empty word are dropped.
  class GroupPresentation {
   public:
    GroupPresentation() = default;
    // Throws std::out_of_range if a relator uses an index >= names.size().
    GroupPresentation(GeneratorNames names, std::vector<GroupWord> relators);

    std::size_t                   n_gens() const noexcept { return _names.size(); }
    GeneratorNames const&         names() const noexcept { return _names; }
    std::vector<GroupWord> const& relators() const noexcept { return _relators; }

    friend bool operator==(GroupPresentation const&, GroupPresentation const&)
        = default;

   private:
    GeneratorNames         _names;
    std::vector<GroupWord> _relators;
  };

  /// Closure of a relator set under cyclic shifts and inversion. Words appear
  /// in a fixed order: for each relator in turn, its shifts 0..n-1, then the
  /// shifts of its inverse, skipping anything already present.
  struct SymmetrizedRelators {
    std::vector<GroupWord>   words;
    std::vector<std::size_t> source;  // relator each word was derived from

    std::size_t size() const noexcept { return words.size(); }
    bool        empty() const noexcept { return words.empty(); }
  };

  SymmetrizedRelators symmetrize(GroupPresentation const& p);

  /// Largest |piece| / |shorter host| over pairs of distinct symmetrized
  /// words, where a piece is their longest common prefix. C'(lambda) holds
  /// iff the result is < lambda. Throws std::invalid_argument on empty input.
  Ratio max_piece_ratio(SymmetrizedRelators const& s);

  bool satisfies_small_cancellation(GroupPresentation const& p, Ratio lambda);

  /// Finitely presented semigroup: alphabet plus equations g = h between
  /// positive words. Letters are alphabet ordinals.
  class SemigroupPresentation {
   public:
    using Word     = std::u32string;
    using Equation = std::pair<Word, Word>;

    SemigroupPresentation() = default;
    // Names are single printable characters. Throws std::out_of_range if an
    // equation uses a letter outside the alphabet.
    SemigroupPresentation(std::vector<char> names, std::vector<Equation> eqs);

    std::size_t                  alphabet_size() const noexcept { return _names.size(); }
    std::vector<char> const&     names() const noexcept { return _names; }
    std::vector<Equation> const& equations() const noexcept { return _equations; }

    // Indices of equations with identical sides.
    std::vector<std::size_t> trivial_equations() const;

    friend bool operator==(SemigroupPresentation const&,
                           SemigroupPresentation const&)
        = default;

   private:
    std::vector<char>     _names;
    std::vector<Equation> _equations;
  };

  ////////////////////////////////////////////////////////////////////////
  // Catalog
  ////////////////////////////////////////////////////////////////////////

  namespace catalog {
    // <a1,b1,...,ag,bg | prod [ai,bi]>, generators named a, b, c, d, ...
    GroupPresentation surface(int genus);
    GroupPresentation torus();
    // <s,t | s^5, t^2, tsts>
    GroupPresentation dihedral5();
    // <x1..xn | [xi,xj] for i < j>
    GroupPresentation free_abelian(int rank);
    // <x,y | x^2 y^-3>
    GroupPresentation trefoil();
    // <a,b,c,d | a^-e b a^e (c^-e d c^e)^-1 for e in exponents>
    GroupPresentation higman_truncated(std::vector<int> const& exponents);
    // Five letters a..e, nine equations; w = aaa is the distinguished word.
    SemigroupPresentation ceijtin();

    struct Params {
      int              genus     = 2;
      int              rank      = 2;
      std::vector<int> exponents = {1};
    };

    using Entry = std::variant<GroupPresentation, SemigroupPresentation>;

    std::vector<std::string> const& names();
    // Throws std::invalid_argument on unknown names or invalid params.
    Entry lookup(std::string_view name, Params const& params = {});
  }  // namespace catalog

  ////////////////////////////////////////////////////////////////////////
  // Text format
  //
  //   gens: a b c d
  //   rel: abABcdCD          (group)
  //   eq: ac = ca            (semigroup)
  //
  // Blank lines and lines starting with '#' are ignored.
  ////////////////////////////////////////////////////////////////////////

  GroupPresentation     parse_group_presentation(std::string_view text);
  SemigroupPresentation parse_semigroup_presentation(std::string_view text);
  // Dispatches on the presence of rel: or eq: lines.
  catalog::Entry parse_presentation(std::string_view text);

  std::string to_string(GroupPresentation const& p);
  std::string to_string(SemigroupPresentation const& p);

  // Semigroup words print as their letter names; the empty word is "".
  std::string render_word(std::u32string const& w, std::vector<char> const& names);
  // Throws ParseError on unknown letters. "" parses to the empty word.
  std::u32string parse_positive_word(std::string_view       token,
                                     std::vector<char> const& names);

}  // namespace wordprob
