#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "wordprob/presentations.hpp"
#include "wordprob/words.hpp"

namespace wordprob {

  // Generator index and sign packed into a column: 2 * index (+1 for inverse).
  constexpr std::size_t column_of(GenLetter x) noexcept {
    return 2 * static_cast<std::size_t>(x.index) + (x.sign < 0 ? 1 : 0);
  }

  enum class EnumerationStatus { Complete, BudgetExceeded };

  /// Action of the generators on the cosets of the trivial subgroup.
  /// rows[c][column_of(x)] is the coset c.x, or -1 while undefined. Coset 0
  /// is the identity coset.
  struct CosetTable {
    static constexpr std::int64_t undefined = -1;

    std::size_t                            n_gens = 0;
    GeneratorNames                         names;
    std::vector<std::vector<std::int64_t>> rows;
    EnumerationStatus                      status = EnumerationStatus::BudgetExceeded;
    std::size_t                            cosets_defined = 0;  // total, incl. merged ones

    std::size_t  size() const noexcept { return rows.size(); }
    bool         complete() const noexcept { return status == EnumerationStatus::Complete; }
    std::int64_t target(std::size_t coset, GenLetter x) const {
      return rows.at(coset).at(column_of(x));
    }
  };

  /// Coset enumeration with relator scanning and immediate coincidence
  /// processing. At most max_cosets cosets are alive at any time; when that
  /// is reached, a lookahead pass (scanning without defining) is tried
  /// before giving up with BudgetExceeded. Cosets are numbered in order of
  /// definition and renumbered densely, preserving order, at the end.
  CosetTable todd_coxeter(GroupPresentation const& p, std::size_t max_cosets);

  struct CayleyEdge {
    std::size_t from;
    GenLetter   label;
    std::size_t to;
    friend bool operator==(CayleyEdge const&, CayleyEdge const&) = default;
  };

  /// Vertices are group elements (vertex 0 is the identity); every vertex has
  /// exactly one outgoing edge per generator and per inverse.
  class CayleyGraph {
   public:
    // Throws std::invalid_argument if the table is not complete.
    explicit CayleyGraph(CosetTable const& table);

    std::size_t           n_vertices() const noexcept { return _targets.size(); }
    std::size_t           n_gens() const noexcept { return _names.size(); }
    std::size_t           identity() const noexcept { return 0; }
    GeneratorNames const& names() const noexcept { return _names; }

    std::size_t             follow(std::size_t v, GenLetter x) const;
    std::size_t             follow(std::size_t v, GroupWord const& w) const;
    std::vector<CayleyEdge> edges() const;
    // Distinct neighbours of v in increasing order.
    std::vector<std::size_t> neighbours(std::size_t v) const;

   private:
    GeneratorNames                        _names;
    std::vector<std::vector<std::size_t>> _targets;
  };

  CayleyGraph to_cayley_graph(CosetTable const& table);

  /// Whether w traces a closed path from the identity. Throws
  /// std::out_of_range on a letter the graph has no generator for.
  bool word_problem_finite(GroupWord const& w, CayleyGraph const& g);

  /// Breadth-first distance in the underlying undirected graph. Throws
  /// std::domain_error if v is unreachable from u.
  std::size_t geodesic_distance(CayleyGraph const& g, std::size_t u, std::size_t v);

  // All-pairs distances; throws std::domain_error if g is disconnected.
  std::vector<std::vector<std::size_t>> distance_matrix(CayleyGraph const& g);

  /// Lexicographically least shortest vertex path from u to v.
  std::vector<std::size_t> least_geodesic(CayleyGraph const&                           g,
                                          std::vector<std::vector<std::size_t>> const& dist,
                                          std::size_t                                  u,
                                          std::size_t                                  v);

  /// Maximum, over all vertex triples, of the thinness defect of the
  /// triangle built from least_geodesic sides: the largest distance from a
  /// vertex on one side to the union of the other two.
  std::size_t estimate_delta(CayleyGraph const& g);

  /// Graphviz digraph. Generators acting as involutions on an edge pair are
  /// drawn once without an arrow head; other edges follow the generators.
  std::string to_dot(CayleyGraph const& g);
  // One "vertex <id>" line per vertex then "edge <from> <letter> <to>" per
  // generator edge (inverse edges are implied).
  std::string to_lines(CayleyGraph const& g);

}  // namespace wordprob
