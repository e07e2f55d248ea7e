#pragma once

#include <optional>
#include <string>
#include <vector>

#include "wordprob/rewriting.hpp"

namespace wordprob {

  /// Letter-to-word substitution on the alphabet {0, ..., n-1}.
  struct Morphism {
    std::size_t       alphabet_size = 0;
    std::vector<Word> images;  // images[a] is the image of letter a
  };

  Morphism thue_morse_morphism();     // 0 -> 01, 1 -> 10
  Morphism ternary_square_free_morphism();  // 0 -> 012, 1 -> 02, 2 -> 1

  /// First n letters of the fixed point starting with 0. Throws
  /// std::invalid_argument unless the image of 0 starts with 0 and has
  /// length >= 2, and every image letter is in the alphabet.
  Word fixed_point_prefix(Morphism const& m, std::size_t n);

  Word thue_morse_prefix(std::size_t n);
  // Letter k is the parity of the number of ones in the binary expansion of k.
  Word thue_morse_parity_prefix(std::size_t n);
  Word square_free_ternary_prefix(std::size_t n);

  struct PowerWitness {
    std::size_t position = 0;
    std::size_t block    = 0;  // length of the repeated block
    friend bool operator==(PowerWitness const&, PowerWitness const&) = default;
  };

  struct PowerFreeResult {
    bool                        power_free = true;
    std::optional<PowerWitness> witness;
  };

  /// Exhaustive scan for a block repeated k times in a row. The witness is the
  /// shortest such block, leftmost among the shortest. Throws
  /// std::invalid_argument if k < 2.
  PowerFreeResult is_power_free(Word const& w, std::size_t k);

  // Letters as decimal digits ("0110..."); letters >= 10 are rejected.
  std::string to_digits(Word const& w);
  Word        from_digits(std::string const& s);

}  // namespace wordprob
