#include "wordprob/reductions.hpp"

#include <algorithm>
#include <sstream>
#include <stdexcept>

#include "text_util.hpp"
#include "wordprob/errors.hpp"

namespace wordprob {

  namespace {
    constexpr char blank_char = '_';
    constexpr char left_char  = '<';
    constexpr char right_char = '>';
    constexpr char halt_char  = '!';

    bool reserved(char c) {
      return c == left_char || c == right_char || c == halt_char || c == '"'
             || c <= ' ' || c > '~';
    }
  }  // namespace

  TuringMachine::TuringMachine(std::vector<char>         tape_symbols,
                               std::size_t               n_states,
                               std::map<Key, Transition> transitions)
      : _symbols(std::move(tape_symbols)),
        _n_states(n_states),
        _delta(std::move(transitions)) {
    if (_symbols.empty() || _symbols[0] != blank_char) {
      throw std::invalid_argument("tape alphabet must start with the blank '_'");
    }
    for (std::size_t i = 0; i < _symbols.size(); ++i) {
      if (reserved(_symbols[i])) {
        throw std::invalid_argument(std::string("tape symbol '") + _symbols[i]
                                    + "' is reserved");
      }
      if (std::find(_symbols.begin(), _symbols.begin() + i, _symbols[i])
          != _symbols.begin() + i) {
        throw std::invalid_argument("duplicate tape symbol");
      }
    }
    if (_n_states == 0) {
      throw std::invalid_argument("machine needs at least one state");
    }
    for (auto const& [key, t] : _delta) {
      if (key.first >= _n_states || t.next_state >= _n_states
          || key.second >= _symbols.size() || t.write >= _symbols.size()) {
        throw std::invalid_argument("transition refers to an unknown state or "
                                    "symbol");
      }
    }
  }

  std::optional<Transition> TuringMachine::transition(std::size_t state,
                                                      TapeSymbol  s) const {
    if (auto it = _delta.find({state, s}); it != _delta.end()) {
      return it->second;
    }
    return std::nullopt;
  }

  Configuration initial_configuration(Word const& input) {
    Configuration c;
    if (!input.empty()) {
      c.head  = input[0];
      c.right = input.substr(1);
    }
    return c;
  }

  Configuration step(TuringMachine const& m, Configuration const& c) {
    auto t = m.transition(c.state, c.head);
    if (!t) {
      throw std::logic_error("step: machine has halted");
    }
    Configuration out = c;
    out.state         = t->next_state;
    if (t->move == Move::Right) {
      out.left.push_back(t->write);
      if (out.right.empty()) {
        out.head = 0;
      } else {
        out.head = out.right.front();
        out.right.erase(0, 1);
      }
    } else {
      out.right.insert(out.right.begin(), static_cast<char32_t>(t->write));
      if (out.left.empty()) {
        out.head = 0;
      } else {
        out.head = out.left.back();
        out.left.pop_back();
      }
    }
    return out;
  }

  RunResult tm_run(TuringMachine const& m, Word const& input, std::size_t max_steps) {
    RunResult r;
    r.final = initial_configuration(input);
    while (true) {
      if (!m.transition(r.final.state, r.final.head)) {
        r.halted = true;
        return r;
      }
      if (r.steps == max_steps) {
        return r;
      }
      r.final = step(m, r.final);
      ++r.steps;
    }
  }

  ////////////////////////////////////////////////////////////////////////
  // Encoding
  ////////////////////////////////////////////////////////////////////////

  Word TmEncoding::word_of_config(Configuration const& c) const {
    Word w;
    w.reserve(c.tape_length() + 3);
    w.push_back(static_cast<char32_t>(left_marker));
    w += c.left;
    w.push_back(static_cast<char32_t>(state_offset + c.state));
    w.push_back(c.head);
    w += c.right;
    w.push_back(static_cast<char32_t>(right_marker));
    return w;
  }

  TmEncoding encode(TuringMachine const& m) {
    auto const& tape = m.tape_symbols();
    std::size_t t    = tape.size();

    std::vector<char> names = tape;
    std::string const pool
        = "ABCDEFGHIJKLMNOPQRSTUVWXYZ0123456789abcdefghijklmnopqrstuvwxyz";
    for (char c : pool) {
      if (names.size() == t + m.n_states()) {
        break;
      }
      if (std::find(tape.begin(), tape.end(), c) == tape.end()) {
        names.push_back(c);
      }
    }
    if (names.size() != t + m.n_states()) {
      throw std::invalid_argument("too many states to name with single letters");
    }
    names.push_back(left_char);
    names.push_back(right_char);
    names.push_back(halt_char);

    TmEncoding enc;
    enc.state_offset = t;
    enc.left_marker  = t + m.n_states();
    enc.right_marker = enc.left_marker + 1;
    enc.halt_marker  = enc.left_marker + 2;

    auto        L   = static_cast<char32_t>(enc.left_marker);
    auto        R   = static_cast<char32_t>(enc.right_marker);
    auto        H   = static_cast<char32_t>(enc.halt_marker);
    auto        q   = [&](std::size_t s) { return static_cast<char32_t>(t + s); };
    char32_t    bl  = 0;
    std::vector<Rule> rules;

    for (auto const& [key, tr] : m.transitions()) {
      auto [state, a] = key;
      char32_t from = q(state), to = q(tr.next_state), b = tr.write;
      if (tr.move == Move::Right) {
        for (char32_t c = 0; c < t; ++c) {
          rules.push_back({{from, a, c}, {b, to, c}});
        }
        rules.push_back({{from, a, R}, {b, to, bl, R}});
      } else {
        for (char32_t c = 0; c < t; ++c) {
          rules.push_back({{c, from, a}, {to, c, b}});
        }
        rules.push_back({{L, from, a}, {L, to, bl, b}});
      }
    }
    enc.transition_rules = rules.size();

    for (std::size_t state = 0; state < m.n_states(); ++state) {
      for (char32_t a = 0; a < t; ++a) {
        if (!m.transition(state, a)) {
          rules.push_back({{q(state), a}, {H, a}});
        }
      }
    }
    for (char32_t c = 0; c < t; ++c) {
      rules.push_back({{c, H}, {H}});
      rules.push_back({{H, c}, {H}});
    }
    rules.push_back({{L, H, R}, {H}});

    enc.system    = RewriteSystem(std::move(names), std::move(rules), SystemKind::SemiThue);
    enc.halt_word = Word{H};
    return enc;
  }

  bool verify_simulation(TuringMachine const& m, Word const& input, std::size_t k) {
    TmEncoding    enc    = encode(m);
    Configuration config = initial_configuration(input);
    Word          word   = enc.word_of_config(config);
    for (std::size_t i = 0; i < k; ++i) {
      if (!m.transition(config.state, config.head)) {
        return true;
      }
      config    = step(m, config);
      auto next = successors(word, enc.system);
      if (next.size() != 1 || next.front().rule >= enc.transition_rules) {
        return false;
      }
      word = next.front().word;
      if (word != enc.word_of_config(config)) {
        return false;
      }
    }
    return true;
  }

  ////////////////////////////////////////////////////////////////////////
  // Text format
  ////////////////////////////////////////////////////////////////////////

  namespace {
    std::size_t parse_state(std::string const& tok, std::size_t line) {
      if (tok.size() < 2 || tok[0] != 'q'
          || !std::all_of(tok.begin() + 1, tok.end(),
                          [](char c) { return c >= '0' && c <= '9'; })) {
        throw ParseError(line, "expected a state like q0, got \"" + tok + "\"");
      }
      return std::stoul(tok.substr(1));
    }
  }  // namespace

  TuringMachine parse_machine(std::string_view text) {
    std::optional<std::size_t> n_states;
    std::vector<char>          symbols = {blank_char};
    auto                       symbol_index = [&](std::string const& tok, std::size_t line,
                                bool may_add) -> TapeSymbol {
      if (tok.size() != 1 || reserved(tok[0])) {
        throw ParseError(line, "bad tape symbol \"" + tok + "\"");
      }
      auto it = std::find(symbols.begin(), symbols.end(), tok[0]);
      if (it == symbols.end()) {
        if (!may_add) {
          throw ParseError(line, "symbol \"" + tok + "\" is not on the tape line");
        }
        symbols.push_back(tok[0]);
        return static_cast<TapeSymbol>(symbols.size() - 1);
      }
      return static_cast<TapeSymbol>(it - symbols.begin());
    };
    bool                                     fixed_tape = false;
    std::map<TuringMachine::Key, Transition> delta;
    for (auto const& line : detail::keyed_lines(text)) {
      if (line.key == "states") {
        try {
          n_states = std::stoul(line.value);
        } catch (std::exception const&) {
          throw ParseError(line.number, "states must be a number");
        }
      } else if (line.key == "tape") {
        if (fixed_tape || !delta.empty()) {
          throw ParseError(line.number, "tape line must come before transitions");
        }
        for (auto const& tok : detail::split_ws(line.value)) {
          symbol_index(tok, line.number, true);
        }
        fixed_tape = true;
      } else if (line.key == "trans") {
        auto toks = detail::split_ws(line.value);
        if (toks.size() != 6 || toks[2] != "->" || (toks[5] != "L" && toks[5] != "R")) {
          throw ParseError(line.number, "expected 'trans: q<i> <sym> -> q<j> <sym> L|R'");
        }
        TuringMachine::Key key{parse_state(toks[0], line.number),
                               symbol_index(toks[1], line.number, !fixed_tape)};
        Transition         tr{parse_state(toks[3], line.number),
                      symbol_index(toks[4], line.number, !fixed_tape),
                      toks[5] == "L" ? Move::Left : Move::Right};
        if (!delta.emplace(key, tr).second) {
          throw ParseError(line.number, "duplicate transition (machine must be "
                                        "deterministic)");
        }
      } else {
        throw ParseError(line.number, "unexpected line \"" + line.value + "\"");
      }
    }
    if (!n_states) {
      throw ParseError("missing states line");
    }
    try {
      return TuringMachine(symbols, *n_states, std::move(delta));
    } catch (std::invalid_argument const& e) {
      throw ParseError(e.what());
    }
  }

  std::string to_string(TuringMachine const& m) {
    std::ostringstream out;
    out << "states: " << m.n_states() << "\ntape:";
    for (char c : m.tape_symbols()) {
      out << ' ' << c;
    }
    out << '\n';
    for (auto const& [key, t] : m.transitions()) {
      out << "trans: q" << key.first << ' ' << m.tape_symbols()[key.second] << " -> q"
          << t.next_state << ' ' << m.tape_symbols()[t.write] << ' '
          << (t.move == Move::Left ? 'L' : 'R') << '\n';
    }
    return out.str();
  }

  Word parse_tape(std::string_view text, TuringMachine const& m) {
    Word        out;
    auto const& s = m.tape_symbols();
    for (char c : text) {
      auto it = std::find(s.begin(), s.end(), c);
      if (it == s.end()) {
        throw ParseError(std::string("symbol '") + c + "' is not in the tape alphabet");
      }
      out.push_back(static_cast<char32_t>(it - s.begin()));
    }
    return out;
  }

  std::string render_tape(Word const& w, TuringMachine const& m) {
    std::string out;
    for (char32_t x : w) {
      out.push_back(m.tape_symbols().at(x));
    }
    return out;
  }

  std::string to_string(Configuration const& c, TuringMachine const& m) {
    return render_tape(c.left, m) + "[q" + std::to_string(c.state) + ":"
           + m.tape_symbols().at(c.head) + "]" + render_tape(c.right, m);
  }

  namespace machines {
    namespace {
      constexpr TapeSymbol B   = 0;
      constexpr TapeSymbol One = 1;

      TuringMachine unary(std::size_t n_states, std::map<TuringMachine::Key, Transition> d) {
        return TuringMachine({blank_char, '1'}, n_states, std::move(d));
      }
    }  // namespace

    TuringMachine halt_now() {
      return unary(1, {});
    }

    TuringMachine loop_right() {
      return unary(1, {{{0, B}, {0, B, Move::Right}}});
    }

    TuringMachine unary_append() {
      return unary(2, {{{0, One}, {1, One, Move::Left}}, {{1, B}, {1, One, Move::Right}}});
    }

    TuringMachine right_walker() {
      return unary(2, {{{0, One}, {0, One, Move::Right}}, {{0, B}, {1, One, Move::Right}}});
    }

    TuringMachine bouncer() {
      return unary(2, {{{0, B}, {1, B, Move::Right}}, {{1, B}, {0, B, Move::Left}}});
    }

    TuringMachine busy_beaver2() {
      return unary(3,
                   {{{0, B}, {1, One, Move::Right}},
                    {{0, One}, {1, One, Move::Left}},
                    {{1, B}, {0, One, Move::Left}},
                    {{1, One}, {2, One, Move::Right}}});
    }

    std::vector<std::string> const& names() {
      static std::vector<std::string> const all
          = {"halt_now", "loop_right", "unary_append", "right_walker", "bouncer",
             "busy_beaver2"};
      return all;
    }

    TuringMachine lookup(std::string_view name) {
      if (name == "halt_now") {
        return halt_now();
      } else if (name == "loop_right") {
        return loop_right();
      } else if (name == "unary_append") {
        return unary_append();
      } else if (name == "right_walker") {
        return right_walker();
      } else if (name == "bouncer") {
        return bouncer();
      } else if (name == "busy_beaver2") {
        return busy_beaver2();
      }
      throw std::invalid_argument("unknown machine \"" + std::string(name) + "\"");
    }
  }  // namespace machines

}  // namespace wordprob
