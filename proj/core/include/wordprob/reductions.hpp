#pragma once

#include <map>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "wordprob/rewriting.hpp"

namespace wordprob {

  enum class Move { Left, Right };

  using TapeSymbol = std::uint32_t;  // index into the tape alphabet; 0 is blank

  struct Transition {
    std::size_t next_state = 0;
    TapeSymbol  write      = 0;
    Move        move       = Move::Right;
    friend bool operator==(Transition const&, Transition const&) = default;
  };

  /// Deterministic single-tape machine. Tape symbols are single characters
  /// with the blank '_' at index 0; the start state is 0 and the machine
  /// halts exactly when no transition is defined for (state, symbol).
  class TuringMachine {
   public:
    using Key = std::pair<std::size_t, TapeSymbol>;

    // Throws std::invalid_argument on out-of-range states or symbols, a
    // missing blank, or symbols reserved by the encoding ('<', '>', '!').
    TuringMachine(std::vector<char> tape_symbols,
                  std::size_t       n_states,
                  std::map<Key, Transition> transitions);

    std::vector<char> const&         tape_symbols() const noexcept { return _symbols; }
    std::size_t                      n_states() const noexcept { return _n_states; }
    std::map<Key, Transition> const& transitions() const noexcept { return _delta; }
    std::optional<Transition>        transition(std::size_t state, TapeSymbol s) const;

   private:
    std::vector<char>         _symbols;
    std::size_t               _n_states;
    std::map<Key, Transition> _delta;
  };

  /// Visited tape region around the head. Cells beyond both ends are blank;
  /// the region grows by one blank whenever the head leaves it.
  struct Configuration {
    Word        left;   // cells left of the head, leftmost first
    std::size_t state = 0;
    TapeSymbol  head  = 0;
    Word        right;  // cells right of the head

    std::size_t tape_length() const noexcept { return left.size() + 1 + right.size(); }
    friend bool operator==(Configuration const&, Configuration const&) = default;
  };

  // Head on the first input cell (a blank for empty input), state 0.
  Configuration initial_configuration(Word const& input);
  // Throws std::logic_error if the machine halts in c.
  Configuration step(TuringMachine const& m, Configuration const& c);

  struct RunResult {
    bool          halted = false;
    std::size_t   steps  = 0;
    Configuration final;
  };

  RunResult tm_run(TuringMachine const& m, Word const& input, std::size_t max_steps);

  /// Semi-Thue system G_T simulating a machine on configuration words
  ///   <  left  q  head  right  >
  /// Letters: tape symbols, then one letter per state, then '<', '>', '!'.
  ///
  /// Each defined transition yields |tape| + 1 rules, one per neighbouring
  /// tape symbol plus one for the adjacent endmarker (which also inserts the
  /// fresh blank), so one machine step is exactly one rewrite. A halting
  /// pair (q, a) yields "q a -> ! a"; then "c ! -> !" and "! c -> !" erase
  /// tape symbols and "< ! > -> !" reaches the halt word "!". Cleanup from a
  /// halting configuration therefore takes exactly tape_length + 2 steps.
  struct TmEncoding {
    RewriteSystem system;
    Word          halt_word;
    std::size_t   state_offset = 0;  // letter of state q is state_offset + q
    std::size_t   left_marker  = 0;
    std::size_t   right_marker = 0;
    std::size_t   halt_marker  = 0;
    std::size_t   transition_rules = 0;  // leading rules that simulate steps

    Word word_of_config(Configuration const& c) const;
  };

  TmEncoding encode(TuringMachine const& m);

  inline std::size_t cleanup_length(Configuration const& halted) {
    return halted.tape_length() + 2;
  }

  /// Runs m for up to k steps while rewriting the configuration word with
  /// the generic rewriting engine, requiring a unique successor that equals
  /// the encoding of the next configuration at every step. Stops early (true)
  /// if the machine halts.
  bool verify_simulation(TuringMachine const& m, Word const& input, std::size_t k);

  ////////////////////////////////////////////////////////////////////////
  // Text format
  //
  //   states: 2
  //   tape: _ 1            (optional; '_' is always the blank)
  //   trans: q0 1 -> q1 1 L
  ////////////////////////////////////////////////////////////////////////

  TuringMachine parse_machine(std::string_view text);
  std::string   to_string(TuringMachine const& m);

  Word        parse_tape(std::string_view text, TuringMachine const& m);
  std::string render_tape(Word const& w, TuringMachine const& m);
  std::string to_string(Configuration const& c, TuringMachine const& m);

  namespace machines {
    TuringMachine halt_now();      // no transitions
    TuringMachine loop_right();    // (q0,_) -> (q0,_,R) forever
    TuringMachine unary_append();  // prepends a 1 in two steps, then halts
    TuringMachine right_walker();  // walks right over 1s, writes a 1, halts
    TuringMachine bouncer();       // oscillates between two cells forever
    TuringMachine busy_beaver2();  // 2-state busy beaver plus a halt state

    std::vector<std::string> const& names();
    // Throws std::invalid_argument on unknown names.
    TuringMachine lookup(std::string_view name);
  }  // namespace machines

}  // namespace wordprob
