#include "wordprob/rewriting.hpp"

#include <algorithm>
#include <map>
#include <sstream>
#include <stdexcept>
#include <unordered_set>

#include "bidirectional_bfs.hpp"
#include "text_util.hpp"
#include "wordprob/errors.hpp"
#include "wordprob/trace.hpp"

namespace wordprob {

  std::string_view to_string(SearchStatus s) {
    switch (s) {
      case SearchStatus::Proven:
        return "proven";
      case SearchStatus::RefutedExhausted:
        return "refuted-exhausted";
      case SearchStatus::BudgetExhausted:
        return "budget-exhausted";
    }
    return "?";
  }

  RewriteSystem::RewriteSystem(std::vector<char> names,
                               std::vector<Rule> rules,
                               SystemKind        kind)
      : _names(std::move(names)), _rules(std::move(rules)), _kind(kind) {
    for (auto const& r : _rules) {
      if (r.lhs.empty()) {
        throw std::invalid_argument("rewrite rule with empty left-hand side");
      }
      for (auto const* w : {&r.lhs, &r.rhs}) {
        if (std::any_of(w->begin(), w->end(),
                        [&](char32_t x) { return x >= _names.size(); })) {
          throw std::invalid_argument("rule letter outside the alphabet");
        }
      }
    }
    if (_kind == SystemKind::Thue) {
      std::map<std::pair<Word, Word>, std::size_t> index;
      for (std::size_t i = 0; i < _rules.size(); ++i) {
        index.emplace(std::make_pair(_rules[i].lhs, _rules[i].rhs), i);
      }
      for (auto const& r : _rules) {
        auto it = index.find({r.rhs, r.lhs});
        if (it == index.end()) {
          throw std::invalid_argument("Thue system is not closed under "
                                      "swapping rule sides");
        }
        _inverse.push_back(it->second);
      }
    }
  }

  RewriteSystem to_rewrite_system(SemigroupPresentation const& p) {
    std::vector<Rule> rules;
    for (auto const& [g, h] : p.equations()) {
      rules.push_back({g, h});
    }
    return thue_closure(RewriteSystem(p.names(), std::move(rules), SystemKind::SemiThue));
  }

  RewriteSystem thue_closure(RewriteSystem const& sys) {
    std::vector<Rule> rules;
    auto              add = [&](Rule r) {
      if (std::find(rules.begin(), rules.end(), r) == rules.end()) {
        rules.push_back(std::move(r));
      }
    };
    for (auto const& r : sys.rules()) {
      add(r);
    }
    for (auto const& r : sys.rules()) {
      add({r.rhs, r.lhs});
    }
    return RewriteSystem(sys.names(), std::move(rules), SystemKind::Thue);
  }

  Word apply_rule(Word const&          w,
                  RewriteSystem const& sys,
                  std::size_t          rule,
                  std::size_t          pos) {
    if (rule >= sys.rules().size()) {
      throw std::out_of_range("rule index " + std::to_string(rule)
                              + " out of range");
    }
    auto const& r = sys.rules()[rule];
    return splice_checked(w, pos, r.lhs, r.rhs);
  }

  std::vector<Successor> successors(Word const& w, RewriteSystem const& sys) {
    std::vector<Successor>   out;
    std::unordered_set<Word> seen;
    auto const&              rules = sys.rules();
    for (std::size_t pos = 0; pos < w.size(); ++pos) {
      for (std::size_t i = 0; i < rules.size(); ++i) {
        auto const& lhs = rules[i].lhs;
        if (w.compare(pos, lhs.size(), lhs) != 0) {
          continue;
        }
        Word next = w.substr(0, pos) + rules[i].rhs + w.substr(pos + lhs.size());
        if (seen.insert(next).second) {
          out.push_back({std::move(next), i, pos});
        }
      }
    }
    return out;
  }

  Word replay(DerivationTrace const& trace, RewriteSystem const& sys) {
    Word w = trace.start;
    for (auto const& step : trace.steps) {
      if (step.rule >= sys.rules().size()) {
        throw std::invalid_argument("replay: rule index out of range");
      }
      auto const& r = sys.rules()[step.rule];
      w             = splice_checked(w, step.pos, r.lhs, r.rhs);
    }
    return w;
  }

  bool replays_exactly(DerivationTrace const& trace, RewriteSystem const& sys) {
    try {
      return replay(trace, sys) == trace.end;
    } catch (std::invalid_argument const&) {
      return false;
    }
  }

  SearchOutcome search_equivalence(Word const&          w1,
                                   Word const&          w2,
                                   RewriteSystem const& sys,
                                   std::size_t          budget) {
    if (budget < 1) {
      throw std::invalid_argument("search budget must be at least 1");
    }
    bool thue = sys.kind() == SystemKind::Thue;
    auto succ = [&](Word const& w) {
      std::vector<std::pair<Word, RewriteStep>> out;
      for (auto& s : successors(w, sys)) {
        out.emplace_back(std::move(s.word), RewriteStep{s.rule, s.pos});
      }
      return out;
    };
    auto reverse = [&](RewriteStep s) {
      return RewriteStep{sys.inverse_rule(s.rule), s.pos};
    };
    auto r = detail::bfs_search<Word, RewriteStep, std::hash<Word>,
                                std::less<Word>>(w1, w2, budget, thue, succ,
                                                 reverse);
    SearchOutcome out;
    out.status = r.status;
    out.stats  = r.stats;
    if (r.status == SearchStatus::Proven) {
      out.trace = DerivationTrace{w1, std::move(r.steps), w2};
    }
    return out;
  }

  ////////////////////////////////////////////////////////////////////////
  // Text format
  ////////////////////////////////////////////////////////////////////////

  Word parse_word(std::string_view token, RewriteSystem const& sys) {
    return parse_positive_word(token, sys.names());
  }

  std::string render(Word const& w, RewriteSystem const& sys) {
    return render_word(w, sys.names());
  }

  RewriteSystem parse_rewrite_system(std::string_view text) {
    std::optional<std::vector<char>> names;
    std::optional<SystemKind>        kind;
    bool                             saw_eq = false;
    std::vector<Rule>                rules;
    for (auto const& line : detail::keyed_lines(text)) {
      if (line.key == "alpha" || line.key == "gens") {
        if (names) {
          throw ParseError(line.number, "duplicate alphabet line");
        }
        names.emplace();
        for (auto const& tok : detail::split_ws(line.value)) {
          if (tok.size() != 1 || tok == "\"") {
            throw ParseError(line.number, "letters must be single characters, "
                                          "got \"" + tok + "\"");
          }
          if (std::find(names->begin(), names->end(), tok[0]) != names->end()) {
            throw ParseError(line.number, "duplicate letter '" + tok + "'");
          }
          names->push_back(tok[0]);
        }
      } else if (line.key == "kind") {
        if (line.value == "thue") {
          kind = SystemKind::Thue;
        } else if (line.value == "semithue") {
          kind = SystemKind::SemiThue;
        } else {
          throw ParseError(line.number, "kind must be thue or semithue");
        }
      } else if (line.key == "rule" || line.key == "eq") {
        if (!names) {
          throw ParseError(line.number, line.key + " before alphabet");
        }
        auto        toks = detail::split_ws(line.value);
        char const* sep  = line.key == "rule" ? "->" : "=";
        if (toks.size() != 3 || toks[1] != sep) {
          throw ParseError(line.number, "expected '" + line.key + ": <word> "
                                            + sep + " <word>'");
        }
        try {
          Rule r{parse_positive_word(toks[0], *names),
                 parse_positive_word(toks[2], *names)};
          if (r.lhs.empty()) {
            throw ParseError("empty left-hand side");
          }
          rules.push_back(std::move(r));
        } catch (ParseError const& e) {
          throw ParseError(line.number, e.what());
        }
        saw_eq = saw_eq || line.key == "eq";
      } else {
        throw ParseError(line.number, "unexpected line \"" + line.value + "\"");
      }
    }
    if (!names || names->empty()) {
      throw ParseError("missing or empty alphabet line");
    }
    SystemKind k = kind.value_or(saw_eq ? SystemKind::Thue : SystemKind::SemiThue);
    RewriteSystem sys(*names, std::move(rules), SystemKind::SemiThue);
    if (k == SystemKind::Thue) {
      try {
        return thue_closure(sys);
      } catch (std::invalid_argument const& e) {
        throw ParseError(e.what());
      }
    }
    return sys;
  }

  std::string to_string(RewriteSystem const& sys) {
    std::ostringstream out;
    out << "alpha:";
    for (char c : sys.names()) {
      out << ' ' << c;
    }
    out << "\nkind: " << (sys.kind() == SystemKind::Thue ? "thue" : "semithue")
        << '\n';
    for (auto const& r : sys.rules()) {
      out << "rule: " << render(r.lhs, sys) << " -> " << render(r.rhs, sys)
          << '\n';
    }
    return out.str();
  }

  std::string format_trace(DerivationTrace const& trace,
                           RewriteSystem const&   sys) {
    std::ostringstream out;
    Word               w = trace.start;
    for (auto const& step : trace.steps) {
      w = apply_rule(w, sys, step.rule, step.pos);
      out << "step " << step.rule << " @" << step.pos << " => " << render(w, sys)
          << '\n';
    }
    return out.str();
  }

}  // namespace wordprob
