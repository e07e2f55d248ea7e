#include "wordprob/sequences.hpp"

#include <bit>
#include <stdexcept>

namespace wordprob {

  Morphism thue_morse_morphism() {
    return {2, {Word{0, 1}, Word{1, 0}}};
  }

  Morphism ternary_square_free_morphism() {
    return {3, {Word{0, 1, 2}, Word{0, 2}, Word{1}}};
  }

  Word fixed_point_prefix(Morphism const& m, std::size_t n) {
    if (m.images.size() != m.alphabet_size || m.alphabet_size == 0) {
      throw std::invalid_argument("morphism needs one image per letter");
    }
    for (auto const& img : m.images) {
      for (char32_t x : img) {
        if (x >= m.alphabet_size) {
          throw std::invalid_argument("morphism image leaves the alphabet");
        }
      }
    }
    auto const& first = m.images[0];
    if (first.size() < 2 || first[0] != 0) {
      throw std::invalid_argument("morphism is not prolongable at 0");
    }
    // The fixed point is the image of itself, so it can be produced by
    // reading it back while writing: out = image(out[0]) image(out[1]) ...
    Word out = first;
    for (std::size_t read = 1; out.size() < n; ++read) {
      out += m.images[out[read]];
    }
    out.resize(n);
    return out;
  }

  Word thue_morse_prefix(std::size_t n) {
    return fixed_point_prefix(thue_morse_morphism(), n);
  }

  Word thue_morse_parity_prefix(std::size_t n) {
    Word out(n, 0);
    for (std::size_t k = 0; k < n; ++k) {
      out[k] = static_cast<char32_t>(std::popcount(k) & 1);
    }
    return out;
  }

  Word square_free_ternary_prefix(std::size_t n) {
    return fixed_point_prefix(ternary_square_free_morphism(), n);
  }

  PowerFreeResult is_power_free(Word const& w, std::size_t k) {
    if (k < 2) {
      throw std::invalid_argument("power must be at least 2");
    }
    std::size_t n = w.size();
    // A k-th power of block length l starting at i is exactly a run of
    // (k - 1) * l consecutive positions j with w[j] == w[j + l].
    for (std::size_t block = 1; block * k <= n; ++block) {
      std::size_t need = (k - 1) * block;
      std::size_t run  = 0;
      for (std::size_t j = 0; j + block < n; ++j) {
        run = w[j] == w[j + block] ? run + 1 : 0;
        if (run == need) {
          return {false, PowerWitness{j + 1 - need, block}};
        }
      }
    }
    return {true, std::nullopt};
  }

  std::string to_digits(Word const& w) {
    std::string out;
    out.reserve(w.size());
    for (char32_t x : w) {
      if (x >= 10) {
        throw std::invalid_argument("letter does not fit a single digit");
      }
      out.push_back(static_cast<char>('0' + x));
    }
    return out;
  }

  Word from_digits(std::string const& s) {
    Word out;
    for (char c : s) {
      if (c < '0' || c > '9') {
        throw std::invalid_argument("expected decimal digits");
      }
      out.push_back(static_cast<char32_t>(c - '0'));
    }
    return out;
  }

}  // namespace wordprob
