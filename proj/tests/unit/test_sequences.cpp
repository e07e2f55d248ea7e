#include <catch_amalgamated.hpp>

#include "test_support.hpp"
#include "wordprob/sequences.hpp"

using namespace wordprob;

namespace {
  // Literal definition: some i, l with w[i + j] == w[i + j + l] for all
  // j < (k - 1) l. Cubic, but only used on short words.
  bool has_power_naive(Word const& w, std::size_t k) {
    for (std::size_t l = 1; l * k <= w.size(); ++l) {
      for (std::size_t i = 0; i + l * k <= w.size(); ++i) {
        bool all = true;
        for (std::size_t j = 0; j < (k - 1) * l && all; ++j) {
          all = w[i + j] == w[i + j + l];
        }
        if (all) {
          return true;
        }
      }
    }
    return false;
  }
}  // namespace

TEST_CASE("Thue-Morse prefixes", "[sequences]") {
  CHECK(to_digits(thue_morse_prefix(32)) == "01101001100101101001011001101001");
  CHECK(to_digits(thue_morse_prefix(1)) == "0");
  CHECK(thue_morse_prefix(0).empty());
  CHECK(thue_morse_prefix(1 << 14) == thue_morse_parity_prefix(1 << 14));
  auto big = thue_morse_prefix(1000);
  for (std::size_t n : {1u, 7u, 64u, 513u, 999u}) {
    CHECK(thue_morse_prefix(n) == big.substr(0, n));
  }
}

TEST_CASE("square-free ternary prefixes", "[sequences]") {
  CHECK(square_free_ternary_prefix(0).empty());
  CHECK(to_digits(square_free_ternary_prefix(12)) == "012021012102");
  auto big = square_free_ternary_prefix(4096);
  CHECK(big.size() == 4096);
  CHECK(square_free_ternary_prefix(100) == big.substr(0, 100));
  CHECK(is_power_free(big, 2).power_free);
}

TEST_CASE("fixed_point_prefix", "[sequences]") {
  CHECK(to_digits(fixed_point_prefix(thue_morse_morphism(), 6)) == "011010");
  CHECK(fixed_point_prefix(thue_morse_morphism(), 0).empty());
  CHECK(fixed_point_prefix(ternary_square_free_morphism(), 0).empty());
  CHECK(to_digits(fixed_point_prefix(ternary_square_free_morphism(), 3)) == "012");
  CHECK_THROWS_AS(fixed_point_prefix(Morphism{2, {Word{1, 0}, Word{0}}}, 4),
                  std::invalid_argument);
  CHECK_THROWS_AS(fixed_point_prefix(Morphism{2, {Word{0, 2}, Word{0}}}, 4),
                  std::invalid_argument);
  CHECK_THROWS_AS(fixed_point_prefix(Morphism{2, {Word{0, 1}}}, 4), std::invalid_argument);
}

TEST_CASE("is_power_free", "[sequences]") {
  auto r = is_power_free(from_digits("00"), 2);
  CHECK_FALSE(r.power_free);
  CHECK(r.witness == PowerWitness{0, 1});
  CHECK(is_power_free(from_digits("010"), 2).power_free);
  CHECK(is_power_free(Word{}, 2).power_free);

  r = is_power_free(from_digits("0120121"), 2);
  CHECK_FALSE(r.power_free);
  CHECK(r.witness == PowerWitness{0, 3});

  r = is_power_free(from_digits("100100100"), 3);
  CHECK_FALSE(r.power_free);
  CHECK(r.witness == PowerWitness{0, 3});
  CHECK(is_power_free(from_digits("10010010"), 3).power_free);

  CHECK(is_power_free(thue_morse_prefix(256), 3).power_free);
  CHECK(is_power_free(thue_morse_prefix(1 << 12), 3).power_free);
  // Thue-Morse contains squares (and overlaps), just no cubes.
  CHECK_FALSE(is_power_free(thue_morse_prefix(32), 2).power_free);
  CHECK_THROWS_AS(is_power_free(from_digits("0"), 1), std::invalid_argument);
}

TEST_CASE("no binary word of length 4 is square-free", "[sequences]") {
  for (unsigned bits = 0; bits < 16; ++bits) {
    Word w;
    for (int i = 0; i < 4; ++i) {
      w.push_back((bits >> i) & 1);
    }
    CHECK_FALSE(is_power_free(w, 2).power_free);
  }
}

TEST_CASE("checker agrees with the literal definition", "[sequences][property]") {
  std::mt19937 rng(17);
  for (int trial = 0; trial < 3000; ++trial) {
    std::size_t alphabet = 2 + rng() % 2;
    auto        w        = testing::random_positive_word(rng, alphabet, rng() % 20);
    std::size_t k        = 2 + rng() % 2;
    auto        r        = is_power_free(w, k);
    CHECK(r.power_free == !has_power_naive(w, k));
    if (r.witness) {
      auto [i, l] = *r.witness;
      REQUIRE(i + k * l <= w.size());
      for (std::size_t j = 0; j < (k - 1) * l; ++j) {
        CHECK(w[i + j] == w[i + j + l]);
      }
    }
  }
}

TEST_CASE("digit conversion", "[sequences]") {
  CHECK(from_digits("0120") == Word{0, 1, 2, 0});
  CHECK(to_digits(Word{}).empty());
  CHECK_THROWS(from_digits("01x"));
  CHECK_THROWS(to_digits(Word{10}));
}
