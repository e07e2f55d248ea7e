#include "wordprob/presentations.hpp"

#include <algorithm>
#include <numeric>
#include <set>
#include <sstream>
#include <stdexcept>

#include "text_util.hpp"
#include "wordprob/errors.hpp"

namespace wordprob {

  Ratio::Ratio(std::int64_t num, std::int64_t den) {
    if (den <= 0 || num < 0) {
      throw std::invalid_argument("ratio must be non-negative with positive "
                                  "denominator");
    }
    auto g = std::gcd(num, den);
    _num   = num / g;
    _den   = den / g;
  }

  std::string Ratio::to_string() const {
    return std::to_string(_num) + "/" + std::to_string(_den);
  }

  GroupPresentation::GroupPresentation(GeneratorNames         names,
                                       std::vector<GroupWord> relators)
      : _names(std::move(names)) {
    for (auto const& r : relators) {
      exponent_vector(r, _names.size());  // index check
      auto core = cyclic_reduce(r).core;
      if (!core.empty()) {
        _relators.push_back(std::move(core));
      }
    }
  }

  SymmetrizedRelators symmetrize(GroupPresentation const& p) {
    SymmetrizedRelators out;
    std::set<GroupWord> seen;
    auto const&         rels = p.relators();
    for (std::size_t i = 0; i < rels.size(); ++i) {
      for (GroupWord const& base : {rels[i], invert(rels[i])}) {
        for (std::size_t k = 0; k < base.size(); ++k) {
          GroupWord shifted = rotate(base, k);
          if (seen.insert(shifted).second) {
            out.words.push_back(std::move(shifted));
            out.source.push_back(i);
          }
        }
      }
    }
    return out;
  }

  Ratio max_piece_ratio(SymmetrizedRelators const& s) {
    if (s.empty()) {
      throw std::invalid_argument("max_piece_ratio: empty symmetrized set");
    }
    Ratio best(0, 1);
    auto const& words = s.words;
    for (std::size_t i = 0; i < words.size(); ++i) {
      for (std::size_t j = i + 1; j < words.size(); ++j) {
        auto const& u = words[i].letters();
        auto const& v = words[j].letters();
        auto        n = std::min(u.size(), v.size());
        auto        piece
            = std::mismatch(u.begin(), u.begin() + n, v.begin()).first
              - u.begin();
        if (piece > 0) {
          best = std::max(best, Ratio(piece, static_cast<std::int64_t>(n)));
        }
      }
    }
    return best;
  }

  bool satisfies_small_cancellation(GroupPresentation const& p, Ratio lambda) {
    auto s = symmetrize(p);
    return s.empty() || max_piece_ratio(s) < lambda;
  }

  SemigroupPresentation::SemigroupPresentation(std::vector<char>     names,
                                               std::vector<Equation> eqs)
      : _names(std::move(names)), _equations(std::move(eqs)) {
    for (auto const& [g, h] : _equations) {
      for (auto const* w : {&g, &h}) {
        for (char32_t x : *w) {
          if (x >= _names.size()) {
            throw std::out_of_range("equation letter outside the alphabet");
          }
        }
      }
    }
  }

  std::vector<std::size_t> SemigroupPresentation::trivial_equations() const {
    std::vector<std::size_t> out;
    for (std::size_t i = 0; i < _equations.size(); ++i) {
      if (_equations[i].first == _equations[i].second) {
        out.push_back(i);
      }
    }
    return out;
  }

  ////////////////////////////////////////////////////////////////////////
  // Catalog
  ////////////////////////////////////////////////////////////////////////

  namespace catalog {
    namespace {
      GroupWord gen(std::uint32_t i, int exponent = 1) {
        return power(GroupWord{{i, 1}}, exponent);
      }
    }  // namespace

    GroupPresentation surface(int genus) {
      if (genus < 1 || genus > 13) {
        throw std::invalid_argument("surface genus must be in [1, 13]");
      }
      GroupWord rel;
      for (std::uint32_t i = 0; i < static_cast<std::uint32_t>(genus); ++i) {
        rel *= commutator(gen(2 * i), gen(2 * i + 1));
      }
      return GroupPresentation(GeneratorNames::standard(2 * genus), {rel});
    }

    GroupPresentation torus() {
      return surface(1);
    }

    GroupPresentation dihedral5() {
      GeneratorNames names({'s', 't'});
      return GroupPresentation(
          names, {gen(0, 5), gen(1, 2), gen(1) * gen(0) * gen(1) * gen(0)});
    }

    GroupPresentation free_abelian(int rank) {
      if (rank < 1 || rank > 26) {
        throw std::invalid_argument("free abelian rank must be in [1, 26]");
      }
      std::vector<GroupWord> rels;
      for (std::uint32_t i = 0; i < static_cast<std::uint32_t>(rank); ++i) {
        for (std::uint32_t j = i + 1; j < static_cast<std::uint32_t>(rank);
             ++j) {
          rels.push_back(commutator(gen(i), gen(j)));
        }
      }
      return GroupPresentation(GeneratorNames::standard(rank), rels);
    }

    GroupPresentation trefoil() {
      return GroupPresentation(GeneratorNames({'x', 'y'}),
                               {gen(0, 2) * gen(1, -3)});
    }

    GroupPresentation higman_truncated(std::vector<int> const& exponents) {
      std::vector<GroupWord> rels;
      for (int e : exponents) {
        if (e < 0) {
          throw std::invalid_argument("Higman exponents must be natural "
                                      "numbers");
        }
        GroupWord lhs = gen(0, -e) * gen(1) * gen(0, e);
        GroupWord rhs = gen(2, -e) * gen(3) * gen(2, e);
        rels.push_back(lhs * invert(rhs));
      }
      return GroupPresentation(GeneratorNames::standard(4), rels);
    }

    SemigroupPresentation ceijtin() {
      std::vector<char> names = {'a', 'b', 'c', 'd', 'e'};
      std::vector<SemigroupPresentation::Equation> eqs;
      for (auto [g, h] : std::initializer_list<std::pair<char const*, char const*>>{
               {"ac", "ca"},
               {"ad", "da"},
               {"bc", "cb"},
               {"bd", "db"},
               {"ce", "eca"},
               {"de", "edb"},
               {"cdca", "cdcae"},
               {"caaa", "aaa"},
               {"daaa", "aaa"}}) {
        eqs.emplace_back(parse_positive_word(g, names),
                         parse_positive_word(h, names));
      }
      return SemigroupPresentation(names, std::move(eqs));
    }

    std::vector<std::string> const& names() {
      static std::vector<std::string> const all = {"surface",
                                                   "torus",
                                                   "dihedral5",
                                                   "free_abelian",
                                                   "trefoil",
                                                   "higman_truncated",
                                                   "ceijtin"};
      return all;
    }

    Entry lookup(std::string_view name, Params const& params) {
      if (name == "surface") {
        return surface(params.genus);
      } else if (name == "torus") {
        return torus();
      } else if (name == "dihedral5") {
        return dihedral5();
      } else if (name == "free_abelian") {
        return free_abelian(params.rank);
      } else if (name == "trefoil") {
        return trefoil();
      } else if (name == "higman_truncated") {
        return higman_truncated(params.exponents);
      } else if (name == "ceijtin") {
        return ceijtin();
      }
      throw std::invalid_argument("unknown catalog entry \"" + std::string(name)
                                  + "\"");
    }
  }  // namespace catalog

  ////////////////////////////////////////////////////////////////////////
  // Text format
  ////////////////////////////////////////////////////////////////////////

  std::string render_word(std::u32string const& w, std::vector<char> const& names) {
    if (w.empty()) {
      return "\"\"";
    }
    std::string out;
    for (char32_t x : w) {
      out.push_back(names.at(x));
    }
    return out;
  }

  std::u32string parse_positive_word(std::string_view       token,
                                     std::vector<char> const& names) {
    std::u32string out;
    if (token == "\"\"") {
      return out;
    }
    for (char c : token) {
      auto it = std::find(names.begin(), names.end(), c);
      if (it == names.end()) {
        throw ParseError(std::string("unknown letter '") + c + "' in word \""
                         + std::string(token) + "\"");
      }
      out.push_back(static_cast<char32_t>(it - names.begin()));
    }
    return out;
  }

  namespace {
    std::vector<char> parse_names(detail::KeyedLine const& line) {
      std::vector<char> names;
      for (auto const& tok : detail::split_ws(line.value)) {
        if (tok.size() != 1 || tok == "\"") {
          throw ParseError(line.number, "alphabet entries must be single "
                                        "characters, got \"" + tok + "\"");
        }
        if (std::find(names.begin(), names.end(), tok[0]) != names.end()) {
          throw ParseError(line.number, "duplicate letter '" + tok + "'");
        }
        names.push_back(tok[0]);
      }
      return names;
    }

    bool has_key(std::vector<detail::KeyedLine> const& lines,
                 std::string_view                      key) {
      return std::any_of(lines.begin(), lines.end(),
                         [&](auto const& l) { return l.key == key; });
    }
  }  // namespace

  GroupPresentation parse_group_presentation(std::string_view text) {
    std::optional<GeneratorNames> names;
    std::vector<GroupWord>        rels;
    for (auto const& line : detail::keyed_lines(text)) {
      if (line.key == "gens") {
        if (names) {
          throw ParseError(line.number, "duplicate gens line");
        }
        try {
          names = GeneratorNames(parse_names(line));
        } catch (ParseError const& e) {
          throw ParseError(line.number, e.what());
        }
      } else if (line.key == "rel") {
        if (!names) {
          throw ParseError(line.number, "rel before gens");
        }
        try {
          rels.push_back(parse_word(line.value, *names));
        } catch (ParseError const& e) {
          throw ParseError(line.number, e.what());
        }
      } else {
        throw ParseError(line.number, "unexpected line \"" + line.value + "\"");
      }
    }
    if (!names) {
      throw ParseError("missing gens line");
    }
    return GroupPresentation(*names, std::move(rels));
  }

  SemigroupPresentation parse_semigroup_presentation(std::string_view text) {
    std::optional<std::vector<char>>             names;
    std::vector<SemigroupPresentation::Equation> eqs;
    for (auto const& line : detail::keyed_lines(text)) {
      if (line.key == "gens" || line.key == "alpha") {
        if (names) {
          throw ParseError(line.number, "duplicate alphabet line");
        }
        names = parse_names(line);
      } else if (line.key == "eq") {
        if (!names) {
          throw ParseError(line.number, "eq before gens");
        }
        auto toks = detail::split_ws(line.value);
        if (toks.size() != 3 || toks[1] != "=") {
          throw ParseError(line.number, "expected 'eq: <word> = <word>'");
        }
        try {
          eqs.emplace_back(parse_positive_word(toks[0], *names),
                           parse_positive_word(toks[2], *names));
        } catch (ParseError const& e) {
          throw ParseError(line.number, e.what());
        }
      } else {
        throw ParseError(line.number, "unexpected line \"" + line.value + "\"");
      }
    }
    if (!names || names->empty()) {
      throw ParseError("missing or empty gens line");
    }
    return SemigroupPresentation(*names, std::move(eqs));
  }

  catalog::Entry parse_presentation(std::string_view text) {
    auto lines = detail::keyed_lines(text);
    if (has_key(lines, "eq")) {
      return parse_semigroup_presentation(text);
    }
    return parse_group_presentation(text);
  }

  std::string to_string(GroupPresentation const& p) {
    std::ostringstream out;
    out << "gens:";
    for (char c : p.names().names()) {
      out << ' ' << c;
    }
    out << '\n';
    for (auto const& r : p.relators()) {
      out << "rel: " << to_string(r, p.names()) << '\n';
    }
    return out.str();
  }

  std::string to_string(SemigroupPresentation const& p) {
    std::ostringstream out;
    out << "gens:";
    for (char c : p.names()) {
      out << ' ' << c;
    }
    out << '\n';
    for (auto const& [g, h] : p.equations()) {
      out << "eq: " << render_word(g, p.names()) << " = "
          << render_word(h, p.names()) << '\n';
    }
    return out.str();
  }

}  // namespace wordprob
