#include "wordprob/terms.hpp"

#include <cctype>
#include <functional>
#include <set>
#include <sstream>
#include <stdexcept>
#include <tuple>
#include <unordered_set>

#include "bidirectional_bfs.hpp"
#include "text_util.hpp"
#include "wordprob/errors.hpp"

namespace wordprob {

  struct Term::Impl {
    bool                       node     = false;
    bool                       variable = false;
    std::string                symbol;
    std::optional<std::string> type;
    std::optional<Term>        left;
    std::optional<Term>        right;
    std::size_t                size  = 1;
    std::size_t                depth = 0;
    std::size_t                hash  = 0;
  };

  namespace {
    std::size_t mix(std::size_t seed, std::size_t v) {
      return seed ^ (v + 0x9e3779b97f4a7c15ULL + (seed << 6) + (seed >> 2));
    }
  }  // namespace

  Term Term::constant(std::string symbol, std::optional<std::string> type) {
    auto impl    = std::make_shared<Impl>();
    impl->symbol = std::move(symbol);
    impl->type   = std::move(type);
    impl->hash   = mix(std::hash<std::string>{}(impl->symbol),
                     impl->type ? std::hash<std::string>{}(*impl->type) : 1);
    return Term(std::move(impl));
  }

  Term Term::variable(std::string name, std::optional<std::string> type) {
    auto impl      = std::make_shared<Impl>();
    impl->variable = true;
    impl->symbol   = std::move(name);
    impl->type     = std::move(type);
    impl->hash     = mix(mix(std::hash<std::string>{}(impl->symbol), 7),
                     impl->type ? std::hash<std::string>{}(*impl->type) : 1);
    return Term(std::move(impl));
  }

  Term Term::node(Term left, Term right) {
    auto impl   = std::make_shared<Impl>();
    impl->node  = true;
    impl->size  = 1 + left.size() + right.size();
    impl->depth = 1 + std::max(left.depth(), right.depth());
    impl->hash  = mix(mix(0x51ed27, left.hash()), right.hash());
    impl->left  = std::move(left);
    impl->right = std::move(right);
    return Term(std::move(impl));
  }

  bool Term::is_node() const noexcept {
    return _impl->node;
  }
  bool Term::is_variable() const noexcept {
    return _impl->variable;
  }
  std::size_t Term::size() const noexcept {
    return _impl->size;
  }
  std::size_t Term::depth() const noexcept {
    return _impl->depth;
  }
  std::size_t Term::hash() const noexcept {
    return _impl->hash;
  }

  std::string const& Term::symbol() const {
    if (is_node()) {
      throw std::logic_error("symbol() on an internal node");
    }
    return _impl->symbol;
  }

  std::optional<std::string> const& Term::type() const {
    if (is_node()) {
      throw std::logic_error("type() on an internal node");
    }
    return _impl->type;
  }

  Term const& Term::left() const {
    if (!is_node()) {
      throw std::logic_error("left() on a leaf");
    }
    return *_impl->left;
  }

  Term const& Term::right() const {
    if (!is_node()) {
      throw std::logic_error("right() on a leaf");
    }
    return *_impl->right;
  }

  bool operator==(Term const& a, Term const& b) {
    if (a._impl == b._impl) {
      return true;
    }
    if (a.hash() != b.hash() || a.size() != b.size() || a.is_node() != b.is_node()) {
      return false;
    }
    if (a.is_node()) {
      return a.left() == b.left() && a.right() == b.right();
    }
    return a.is_variable() == b.is_variable() && a.symbol() == b.symbol()
           && a.type() == b.type();
  }

  bool operator<(Term const& a, Term const& b) {
    if (a.is_node() != b.is_node()) {
      return !a.is_node();
    }
    if (a.is_node()) {
      if (a.left() == b.left()) {
        return a.right() < b.right();
      }
      return a.left() < b.left();
    }
    return std::tie(a._impl->variable, a._impl->symbol, a._impl->type)
           < std::tie(b._impl->variable, b._impl->symbol, b._impl->type);
  }

  namespace {
    void collect_variables(Term const& t, std::set<std::string>& out) {
      if (t.is_node()) {
        collect_variables(t.left(), out);
        collect_variables(t.right(), out);
      } else if (t.is_variable()) {
        out.insert(t.symbol());
      }
    }

    std::set<std::string> variables(Term const& t) {
      std::set<std::string> out;
      collect_variables(t, out);
      return out;
    }

    bool match_into(Term const& pattern, Term const& subject, Substitution& s) {
      if (pattern.is_variable()) {
        if (pattern.type()
            && (subject.is_node() || subject.is_variable()
                || subject.type() != pattern.type())) {
          return false;
        }
        auto [it, fresh] = s.emplace(pattern.symbol(), subject);
        return fresh || it->second == subject;
      }
      if (pattern.is_node()) {
        return subject.is_node() && match_into(pattern.left(), subject.left(), s)
               && match_into(pattern.right(), subject.right(), s);
      }
      return subject.is_leaf() && !subject.is_variable()
             && pattern.symbol() == subject.symbol()
             && (!pattern.type() || pattern.type() == subject.type());
    }
  }  // namespace

  TreeRule::TreeRule(Term lhs, Term rhs) : _lhs(std::move(lhs)), _rhs(std::move(rhs)) {
    auto lv = variables(_lhs);
    auto rv = variables(_rhs);
    if (!std::includes(lv.begin(), lv.end(), rv.begin(), rv.end())) {
      throw std::invalid_argument("tree rule: right-hand side uses a variable "
                                  "absent from the left-hand side");
    }
    _reversible = lv == rv;
  }

  std::optional<Substitution> match_subst(Term const& pattern, Term const& subject) {
    Substitution s;
    if (match_into(pattern, subject, s)) {
      return s;
    }
    return std::nullopt;
  }

  Term substitute(Term const& t, Substitution const& s) {
    if (t.is_node()) {
      return Term::node(substitute(t.left(), s), substitute(t.right(), s));
    }
    if (t.is_variable()) {
      if (auto it = s.find(t.symbol()); it != s.end()) {
        return it->second;
      }
    }
    return t;
  }

  Term const& subterm_at(Term const& t, Path const& path) {
    Term const* cur = &t;
    for (Direction d : path) {
      if (!cur->is_node()) {
        throw std::invalid_argument("path " + to_string(path)
                                    + " leaves the tree");
      }
      cur = d == Direction::Left ? &cur->left() : &cur->right();
    }
    return *cur;
  }

  namespace {
    Term replace_from(Term const& t,
                      Path const& path,
                      std::size_t i,
                      Term const& replacement) {
      if (i == path.size()) {
        return replacement;
      }
      if (!t.is_node()) {
        throw std::invalid_argument("path " + to_string(path)
                                    + " leaves the tree");
      }
      if (path[i] == Direction::Left) {
        return Term::node(replace_from(t.left(), path, i + 1, replacement),
                          t.right());
      }
      return Term::node(t.left(),
                        replace_from(t.right(), path, i + 1, replacement));
    }

    std::optional<Term> rewrite_here(Term const& sub, Term const& from, Term const& to) {
      if (auto s = match_subst(from, sub)) {
        return substitute(to, *s);
      }
      return std::nullopt;
    }
  }  // namespace

  Term replace_at(Term const& t, Path const& path, Term const& replacement) {
    return replace_from(t, path, 0, replacement);
  }

  Term apply_tree_rule(Term const& t, TreeRule const& rule, Path const& path) {
    auto out = rewrite_here(subterm_at(t, path), rule.lhs(), rule.rhs());
    if (!out) {
      throw std::invalid_argument("tree rule does not match at " + to_string(path));
    }
    return replace_at(t, path, *out);
  }

  std::vector<TreeSuccessor> tree_successors(Term const&                  t,
                                             std::vector<TreeRule> const& rules) {
    std::vector<TreeSuccessor>               out;
    std::unordered_set<Term, TermHash>       seen;
    Path                                     path;
    std::function<void(Term const&)> visit = [&](Term const& sub) {
      for (std::size_t i = 0; i < rules.size(); ++i) {
        for (auto dir : {RuleDirection::Forward, RuleDirection::Backward}) {
          if (dir == RuleDirection::Backward && !rules[i].reversible()) {
            continue;
          }
          auto const& from = dir == RuleDirection::Forward ? rules[i].lhs() : rules[i].rhs();
          auto const& to   = dir == RuleDirection::Forward ? rules[i].rhs() : rules[i].lhs();
          if (auto r = rewrite_here(sub, from, to)) {
            Term next = replace_at(t, path, *r);
            if (seen.insert(next).second) {
              out.push_back({std::move(next), TreeStep{i, dir, path}});
            }
          }
        }
      }
      if (sub.is_node()) {
        path.push_back(Direction::Left);
        visit(sub.left());
        path.back() = Direction::Right;
        visit(sub.right());
        path.pop_back();
      }
    };
    visit(t);
    return out;
  }

  TreeSearchOutcome search_tree_equivalence(Term const&                  a,
                                            Term const&                  b,
                                            std::vector<TreeRule> const& rules,
                                            std::size_t                  budget) {
    if (budget < 1) {
      throw std::invalid_argument("search budget must be at least 1");
    }
    for (auto const& r : rules) {
      if (!r.reversible()) {
        throw std::invalid_argument("tree equivalence needs reversible rules; "
                                    + to_string(r) + " is not");
      }
    }
    auto succ = [&](Term const& t) {
      std::vector<std::pair<Term, TreeStep>> out;
      for (auto& s : tree_successors(t, rules)) {
        out.emplace_back(std::move(s.term), std::move(s.step));
      }
      return out;
    };
    auto reverse = [](TreeStep s) {
      s.direction = s.direction == RuleDirection::Forward ? RuleDirection::Backward
                                                          : RuleDirection::Forward;
      return s;
    };
    auto r = detail::bfs_search<Term, TreeStep, TermHash, std::less<Term>>(
        a, b, budget, true, succ, reverse);
    TreeSearchOutcome out;
    out.status = r.status;
    out.stats  = r.stats;
    if (r.status == SearchStatus::Proven) {
      out.trace = TreeTrace{a, std::move(r.steps), b};
    }
    return out;
  }

  Term replay(TreeTrace const& trace, std::vector<TreeRule> const& rules) {
    Term t = trace.start;
    for (auto const& step : trace.steps) {
      if (step.rule >= rules.size()) {
        throw std::invalid_argument("replay: rule index out of range");
      }
      auto const& rule = rules[step.rule];
      if (step.direction == RuleDirection::Forward) {
        t = apply_tree_rule(t, rule, step.path);
      } else {
        t = apply_tree_rule(t, TreeRule(rule.rhs(), rule.lhs()), step.path);
      }
    }
    return t;
  }

  std::vector<std::string> leaf_constants(Term const& t) {
    std::vector<std::string>         out;
    std::function<void(Term const&)> walk = [&](Term const& s) {
      if (s.is_node()) {
        walk(s.left());
        walk(s.right());
      } else if (!s.is_variable()) {
        out.push_back(s.symbol());
      }
    };
    walk(t);
    return out;
  }

  ////////////////////////////////////////////////////////////////////////
  // Combs
  ////////////////////////////////////////////////////////////////////////

  namespace {
    Term comb(Word const& w, std::vector<char> const& names, Term tail) {
      for (auto it = w.rbegin(); it != w.rend(); ++it) {
        tail = Term::node(Term::constant(std::string(1, names.at(*it))), tail);
      }
      return tail;
    }
  }  // namespace

  Term word_to_comb(Word const& w, std::vector<char> const& names) {
    return comb(w, names, Term::constant("nil"));
  }

  std::vector<TreeRule> comb_rules(RewriteSystem const& sys) {
    std::vector<TreeRule> out;
    Term                  rest = Term::variable("rest");
    for (auto const& r : sys.rules()) {
      out.emplace_back(comb(r.lhs, sys.names(), rest), comb(r.rhs, sys.names(), rest));
    }
    return out;
  }

  ////////////////////////////////////////////////////////////////////////
  // Text format
  ////////////////////////////////////////////////////////////////////////

  namespace {
    class TermParser {
     public:
      explicit TermParser(std::string_view text) : _text(text) {}

      Term parse_all() {
        Term t = parse();
        skip_ws();
        if (_pos != _text.size()) {
          fail("trailing input");
        }
        return t;
      }

     private:
      [[noreturn]] void fail(std::string const& what) const {
        throw ParseError("term \"" + std::string(_text) + "\" at offset "
                         + std::to_string(_pos) + ": " + what);
      }

      void skip_ws() {
        while (_pos < _text.size()
               && std::isspace(static_cast<unsigned char>(_text[_pos]))) {
          ++_pos;
        }
      }

      static bool ident_char(char c) {
        return std::isalnum(static_cast<unsigned char>(c)) || c == '_' || c == '$';
      }

      std::string ident() {
        std::size_t b = _pos;
        while (_pos < _text.size() && ident_char(_text[_pos])) {
          ++_pos;
        }
        if (b == _pos) {
          fail("expected an identifier");
        }
        return std::string(_text.substr(b, _pos - b));
      }

      Term parse() {
        skip_ws();
        if (_pos == _text.size()) {
          fail("unexpected end of input");
        }
        if (_text[_pos] == '(') {
          ++_pos;
          Term l = parse();
          Term r = parse();
          skip_ws();
          if (_pos == _text.size() || _text[_pos] != ')') {
            fail("expected ')'");
          }
          ++_pos;
          return Term::node(std::move(l), std::move(r));
        }
        bool var = _text[_pos] == '?';
        if (var) {
          ++_pos;
        }
        std::string                name = ident();
        std::optional<std::string> type;
        if (_pos < _text.size() && _text[_pos] == ':') {
          ++_pos;
          type = ident();
        }
        return var ? Term::variable(std::move(name), std::move(type))
                   : Term::constant(std::move(name), std::move(type));
      }

      std::string_view _text;
      std::size_t      _pos = 0;
    };
  }  // namespace

  Term parse_term(std::string_view text) {
    return TermParser(text).parse_all();
  }

  TreeRule parse_tree_rule(std::string_view text) {
    auto arrow = text.find("=>");
    if (arrow == std::string_view::npos) {
      throw ParseError("tree rule \"" + std::string(text) + "\" lacks '=>'");
    }
    try {
      return TreeRule(parse_term(text.substr(0, arrow)),
                      parse_term(text.substr(arrow + 2)));
    } catch (std::invalid_argument const& e) {
      throw ParseError(e.what());
    }
  }

  std::vector<TreeRule> parse_tree_rules(std::string_view text) {
    std::vector<TreeRule> out;
    std::size_t           number = 0;
    while (!text.empty()) {
      auto             nl   = text.find('\n');
      std::string_view line = detail::trim(text.substr(0, nl));
      text = nl == std::string_view::npos ? std::string_view{} : text.substr(nl + 1);
      ++number;
      if (line.empty() || line.front() == '#') {
        continue;
      }
      if (line.substr(0, 5) == "rule:") {
        line = line.substr(5);
      }
      try {
        out.push_back(parse_tree_rule(line));
      } catch (ParseError const& e) {
        throw ParseError(number, e.what());
      }
    }
    return out;
  }

  std::string to_string(Term const& t) {
    if (t.is_node()) {
      return "(" + to_string(t.left()) + " " + to_string(t.right()) + ")";
    }
    std::string out = t.is_variable() ? "?" + t.symbol() : t.symbol();
    if (t.type()) {
      out += ":" + *t.type();
    }
    return out;
  }

  std::string to_string(TreeRule const& r) {
    return to_string(r.lhs()) + " => " + to_string(r.rhs());
  }

  std::string to_string(Path const& p) {
    if (p.empty()) {
      return ".";
    }
    std::string out;
    for (Direction d : p) {
      out.push_back(d == Direction::Left ? 'L' : 'R');
    }
    return out;
  }

}  // namespace wordprob
