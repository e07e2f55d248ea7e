#include "wordprob/cayley.hpp"

#include <algorithm>
#include <deque>
#include <limits>
#include <sstream>
#include <stdexcept>

namespace wordprob {

  namespace {

    using Coset = std::int64_t;

    class Enumerator {
     public:
      Enumerator(GroupPresentation const& p, std::size_t max_cosets)
          : _cols(2 * p.n_gens()), _max(max_cosets), _total_cap(64 * max_cosets + 1024) {
        for (auto const& r : p.relators()) {
          std::vector<std::size_t> cols;
          for (GenLetter x : r) {
            cols.push_back(column_of(x));
          }
          _relators.push_back(std::move(cols));
        }
        new_coset();
      }

      // Returns false when the live-coset budget is exhausted.
      bool run() {
        // A second pass is needed only if coincidences reopened a row that
        // had already been processed.
        while (true) {
          bool defined = false;
          for (Coset c = 0; c < static_cast<Coset>(_table.size()); ++c) {
            for (std::size_t r = 0; r < _relators.size() && alive(c); ++r) {
              while (alive(c) && !scan(c, _relators[r], true)) {
                if (!lookahead()) {
                  return false;
                }
              }
            }
            for (std::size_t x = 0; x < _cols && alive(c); ++x) {
              while (alive(c) && _table[c][x] == CosetTable::undefined) {
                if (define(c, x)) {
                  defined = true;
                } else if (!lookahead()) {
                  return false;
                }
              }
            }
          }
          if (all_rows_closed()) {
            return true;
          }
          if (!defined) {
            throw std::logic_error("coset enumeration stalled");
          }
        }
      }

      CosetTable result(bool complete) const {
        std::vector<Coset> renumber(_table.size(), CosetTable::undefined);
        Coset              next = 0;
        for (std::size_t c = 0; c < _table.size(); ++c) {
          if (_parent[c] == static_cast<Coset>(c)) {
            renumber[c] = next++;
          }
        }
        CosetTable out;
        out.n_gens         = _cols / 2;
        out.status         = complete ? EnumerationStatus::Complete
                                      : EnumerationStatus::BudgetExceeded;
        out.cosets_defined = _table.size();
        for (std::size_t c = 0; c < _table.size(); ++c) {
          if (renumber[c] == CosetTable::undefined) {
            continue;
          }
          std::vector<std::int64_t> row(_cols, CosetTable::undefined);
          for (std::size_t x = 0; x < _cols; ++x) {
            Coset t = _table[c][x];
            if (t != CosetTable::undefined) {
              row[x] = renumber[rep(t)];
            }
          }
          out.rows.push_back(std::move(row));
        }
        return out;
      }

     private:
      bool alive(Coset c) const { return _parent[c] == c; }

      Coset rep(Coset c) const {
        while (_parent[c] != c) {
          c = _parent[c];
        }
        return c;
      }

      Coset rep_compress(Coset c) {
        Coset root = rep(c);
        while (_parent[c] != root) {
          Coset up   = _parent[c];
          _parent[c] = root;
          c          = up;
        }
        return root;
      }

      Coset new_coset() {
        Coset id = static_cast<Coset>(_table.size());
        _table.emplace_back(_cols, CosetTable::undefined);
        _parent.push_back(id);
        ++_live;
        return id;
      }

      bool define(Coset c, std::size_t x) {
        if (_live >= _max || _table.size() >= _total_cap) {
          return false;
        }
        Coset d        = new_coset();
        _table[c][x]     = d;
        _table[d][x ^ 1] = c;
        return true;
      }

      // Scans relator w from c in both directions. Returns false only if a
      // definition was needed and the budget did not allow it. With
      // `fill == false` it never defines and always returns true.
      bool scan(Coset c, std::vector<std::size_t> const& w, bool fill) {
        Coset          f = c, b = c;
        std::ptrdiff_t i = 0, j = static_cast<std::ptrdiff_t>(w.size()) - 1;
        while (true) {
          while (i <= j && _table[f][w[i]] != CosetTable::undefined) {
            f = _table[f][w[i++]];
          }
          if (i > j) {
            if (f != b) {
              coincidence(f, b);
            }
            return true;
          }
          while (j >= i && _table[b][w[j] ^ 1] != CosetTable::undefined) {
            b = _table[b][w[j--] ^ 1];
          }
          if (j < i) {
            coincidence(f, b);
            return true;
          }
          if (i == j) {
            _table[f][w[i]]     = b;
            _table[b][w[i] ^ 1] = f;
            return true;
          }
          if (!fill) {
            return true;
          }
          if (!define(f, w[i])) {
            return false;
          }
        }
      }

      // Scans every relator at every live coset without defining. Returns
      // true if it freed at least one coset.
      bool lookahead() {
        std::size_t before = _live;
        for (Coset c = 0; c < static_cast<Coset>(_table.size()); ++c) {
          for (auto const& r : _relators) {
            if (!alive(c)) {
              break;
            }
            scan(c, r, false);
          }
        }
        return _live < before;
      }

      void merge(Coset a, Coset b) {
        Coset u = rep_compress(a);
        Coset v = rep_compress(b);
        if (u == v) {
          return;
        }
        Coset keep = std::min(u, v), kill = std::max(u, v);
        _parent[kill] = keep;
        --_live;
        _queue.push_back(kill);
      }

      void coincidence(Coset a, Coset b) {
        merge(a, b);
        while (!_queue.empty()) {
          Coset gamma = _queue.front();
          _queue.pop_front();
          for (std::size_t x = 0; x < _cols; ++x) {
            Coset delta = _table[gamma][x];
            if (delta == CosetTable::undefined) {
              continue;
            }
            _table[delta][x ^ 1] = CosetTable::undefined;
            Coset mu = rep_compress(gamma);
            Coset nu = rep_compress(delta);
            if (_table[mu][x] != CosetTable::undefined) {
              merge(nu, _table[mu][x]);
            } else if (_table[nu][x ^ 1] != CosetTable::undefined) {
              merge(mu, _table[nu][x ^ 1]);
            } else {
              _table[mu][x]     = nu;
              _table[nu][x ^ 1] = mu;
            }
          }
        }
      }

      bool all_rows_closed() const {
        for (std::size_t c = 0; c < _table.size(); ++c) {
          if (!alive(static_cast<Coset>(c))) {
            continue;
          }
          for (std::size_t x = 0; x < _cols; ++x) {
            Coset t = _table[c][x];
            if (t == CosetTable::undefined || !alive(t)
                || _table[t][x ^ 1] != static_cast<Coset>(c)) {
              return false;
            }
          }
        }
        return true;
      }

      std::size_t                           _cols;
      std::size_t                           _max;
      // Guards against lookahead freeing one coset per round forever.
      std::size_t _total_cap;
      std::vector<std::vector<std::size_t>> _relators;
      std::vector<std::vector<Coset>>       _table;
      std::vector<Coset>                    _parent;
      std::deque<Coset>                     _queue;
      std::size_t                           _live = 0;
    };

  }  // namespace

  CosetTable todd_coxeter(GroupPresentation const& p, std::size_t max_cosets) {
    if (max_cosets < 1) {
      throw std::invalid_argument("max_cosets must be at least 1");
    }
    Enumerator e(p, max_cosets);
    bool       done = e.run();
    CosetTable out  = e.result(done);
    out.names       = p.names();
    return out;
  }

  ////////////////////////////////////////////////////////////////////////
  // Cayley graph
  ////////////////////////////////////////////////////////////////////////

  CayleyGraph::CayleyGraph(CosetTable const& table) : _names(table.names) {
    if (!table.complete()) {
      throw std::invalid_argument("Cayley graph needs a complete coset table");
    }
    for (auto const& row : table.rows) {
      std::vector<std::size_t> targets;
      for (auto t : row) {
        if (t < 0 || static_cast<std::size_t>(t) >= table.rows.size()) {
          throw std::invalid_argument("coset table has an undefined entry");
        }
        targets.push_back(static_cast<std::size_t>(t));
      }
      _targets.push_back(std::move(targets));
    }
    if (_names.size() != table.n_gens) {
      _names = GeneratorNames::standard(table.n_gens);
    }
  }

  std::size_t CayleyGraph::follow(std::size_t v, GenLetter x) const {
    if (x.index >= n_gens()) {
      throw std::out_of_range("generator index out of range for this graph");
    }
    return _targets.at(v)[column_of(x)];
  }

  std::size_t CayleyGraph::follow(std::size_t v, GroupWord const& w) const {
    for (GenLetter x : w) {
      v = follow(v, x);
    }
    return v;
  }

  std::vector<CayleyEdge> CayleyGraph::edges() const {
    std::vector<CayleyEdge> out;
    for (std::size_t v = 0; v < n_vertices(); ++v) {
      for (std::uint32_t g = 0; g < n_gens(); ++g) {
        for (int sign : {1, -1}) {
          GenLetter x{g, sign};
          out.push_back({v, x, follow(v, x)});
        }
      }
    }
    return out;
  }

  std::vector<std::size_t> CayleyGraph::neighbours(std::size_t v) const {
    std::vector<std::size_t> out = _targets.at(v);
    std::sort(out.begin(), out.end());
    out.erase(std::unique(out.begin(), out.end()), out.end());
    return out;
  }

  CayleyGraph to_cayley_graph(CosetTable const& table) {
    return CayleyGraph(table);
  }

  bool word_problem_finite(GroupWord const& w, CayleyGraph const& g) {
    return g.follow(g.identity(), w) == g.identity();
  }

  namespace {
    constexpr std::size_t unreachable = std::numeric_limits<std::size_t>::max();

    std::vector<std::size_t> bfs_from(CayleyGraph const& g, std::size_t u) {
      std::vector<std::size_t> dist(g.n_vertices(), unreachable);
      std::deque<std::size_t>  queue{u};
      dist.at(u) = 0;
      while (!queue.empty()) {
        std::size_t v = queue.front();
        queue.pop_front();
        for (std::size_t w : g.neighbours(v)) {
          if (dist[w] == unreachable) {
            dist[w] = dist[v] + 1;
            queue.push_back(w);
          }
        }
      }
      return dist;
    }
  }  // namespace

  std::size_t geodesic_distance(CayleyGraph const& g, std::size_t u, std::size_t v) {
    if (v >= g.n_vertices()) {
      throw std::out_of_range("vertex out of range");
    }
    auto d = bfs_from(g, u).at(v);
    if (d == unreachable) {
      throw std::domain_error("vertices are in different components");
    }
    return d;
  }

  std::vector<std::vector<std::size_t>> distance_matrix(CayleyGraph const& g) {
    std::vector<std::vector<std::size_t>> out;
    for (std::size_t u = 0; u < g.n_vertices(); ++u) {
      out.push_back(bfs_from(g, u));
      if (std::find(out.back().begin(), out.back().end(), unreachable)
          != out.back().end()) {
        throw std::domain_error("graph is disconnected");
      }
    }
    return out;
  }

  std::vector<std::size_t> least_geodesic(CayleyGraph const&                           g,
                                          std::vector<std::vector<std::size_t>> const& dist,
                                          std::size_t                                  u,
                                          std::size_t                                  v) {
    std::vector<std::size_t> path{u};
    while (u != v) {
      for (std::size_t w : g.neighbours(u)) {  // increasing order
        if (dist[w][v] + 1 == dist[u][v]) {
          u = w;
          break;
        }
      }
      path.push_back(u);
    }
    return path;
  }

  std::size_t estimate_delta(CayleyGraph const& g) {
    auto        dist = distance_matrix(g);
    std::size_t n    = g.n_vertices();
    std::vector<std::vector<std::vector<std::size_t>>> geo(n);
    for (std::size_t u = 0; u < n; ++u) {
      for (std::size_t v = 0; v < n; ++v) {
        geo[u].push_back(least_geodesic(g, dist, u, v));
      }
    }
    auto defect = [&](std::vector<std::size_t> const& side,
                      std::vector<std::size_t> const& other1,
                      std::vector<std::size_t> const& other2) {
      std::size_t worst = 0;
      for (std::size_t p : side) {
        std::size_t best = unreachable;
        for (auto const* o : {&other1, &other2}) {
          for (std::size_t q : *o) {
            best = std::min(best, dist[p][q]);
          }
        }
        worst = std::max(worst, best);
      }
      return worst;
    };
    std::size_t delta = 0;
    for (std::size_t x = 0; x < n; ++x) {
      for (std::size_t y = 0; y < n; ++y) {
        for (std::size_t z = 0; z < n; ++z) {
          auto const& xy = geo[x][y];
          auto const& yz = geo[y][z];
          auto const& zx = geo[z][x];
          delta = std::max({delta, defect(xy, yz, zx), defect(yz, zx, xy),
                            defect(zx, xy, yz)});
        }
      }
    }
    return delta;
  }

  std::string to_dot(CayleyGraph const& g) {
    std::ostringstream out;
    out << "digraph cayley {\n";
    for (std::size_t v = 0; v < g.n_vertices(); ++v) {
      out << "  " << v << (v == g.identity() ? " [shape=doublecircle];\n" : ";\n");
    }
    for (std::size_t v = 0; v < g.n_vertices(); ++v) {
      for (std::uint32_t s = 0; s < g.n_gens(); ++s) {
        GenLetter   x{s, 1};
        std::size_t w         = g.follow(v, x);
        bool        involutes = g.follow(w, x) == v;
        if (involutes && w < v) {
          continue;
        }
        out << "  " << v << " -> " << w << " [label=\"" << g.names().name(s) << "\""
            << (involutes ? ", dir=none" : "") << "];\n";
      }
    }
    out << "}\n";
    return out.str();
  }

  std::string to_lines(CayleyGraph const& g) {
    std::ostringstream out;
    for (std::size_t v = 0; v < g.n_vertices(); ++v) {
      out << "vertex " << v << '\n';
    }
    for (auto const& e : g.edges()) {
      if (e.label.sign > 0) {
        out << "edge " << e.from << ' ' << g.names().name(e.label.index) << ' '
            << e.to << '\n';
      }
    }
    return out.str();
  }

}  // namespace wordprob
