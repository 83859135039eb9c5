#pragma once

// Words over {0, ..., d-1}, Lyndon enumeration, d-adic itineraries and
// factor complexity.

#include <cstddef>
#include <cstdint>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "flowers/exact.hpp"

namespace flowers {

class Word {
 public:
  using Symbol = std::uint8_t;

  /// Throws ValidationError if `symbols` is empty or has a symbol >= alphabet.
  Word(std::vector<Symbol> symbols, int alphabet);

  /// Digit string such as "0011".
  static Word parse(std::string_view digits, int alphabet = 2);

  std::size_t size() const { return symbols_.size(); }
  int alphabet() const { return alphabet_; }
  Symbol operator[](std::size_t i) const { return symbols_[i]; }
  std::span<const Symbol> symbols() const { return symbols_; }
  auto begin() const { return symbols_.begin(); }
  auto end() const { return symbols_.end(); }

  std::string str() const;

  /// The word read as a base-d integer, most significant symbol first.
  Integer as_integer() const;

  /// Cyclic shift left by k.
  Word rotated(std::size_t k) const;
  /// Length of the shortest u with this word = u^k.
  std::size_t primitive_period() const;
  bool is_primitive() const { return primitive_period() == size(); }
  /// Lexicographically least rotation.
  Word least_rotation() const;
  bool is_lyndon() const;

  friend bool operator==(const Word& a, const Word& b) {
    return a.alphabet_ == b.alphabet_ && a.symbols_ == b.symbols_;
  }
  /// Lexicographic order (then shorter first on common prefix).
  friend bool operator<(const Word& a, const Word& b) { return a.symbols_ < b.symbols_; }

 private:
  std::vector<Symbol> symbols_;
  int alphabet_ = 2;
};

/// Orders by (length, lexicographic).
bool shortlex_less(const Word& a, const Word& b);

/// Union of the periodic orbits generated by finitely many cyclic words.
class SymbolicOrbitSet {
 public:
  /// Each word is reduced to its primitive root and rotated to its least
  /// rotation; duplicates are dropped.
  SymbolicOrbitSet(std::vector<Word> words, int alphabet);
  SymbolicOrbitSet(std::initializer_list<std::string_view> words, int alphabet = 2);

  const std::vector<Word>& generators() const { return generators_; }
  int alphabet() const { return alphabet_; }

 private:
  std::vector<Word> generators_;
  int alphabet_;
};

/// All Lyndon words of length 1..max_len over d symbols, sorted by
/// (length, lexicographic). Uses the Fredricksen-Kessler-Maiorana sweep.
std::vector<Word> enumerate_lyndon(int d, int max_len);

/// Number of Lyndon words of length exactly n over d symbols (necklace
/// formula with the Moebius function).
Integer lyndon_count(int d, int n);

/// First n symbols of the itinerary of x under E_d w.r.t. [j/d, (j+1)/d).
Word coding(const CirclePoint& x, int d, int n);

/// Number of distinct length-n factors of the bi-infinite repetitions of
/// the generators.
std::size_t word_complexity(const SymbolicOrbitSet& set, int n);

/// Number of distinct length-n factors occurring inside the given finite
/// words (no wraparound).
std::size_t factor_complexity(std::span<const Word> words, int n);

/// True iff word_complexity(set, n) <= n + 1 for all 1 <= n <= n_max.
bool is_sturmian_complexity(const SymbolicOrbitSet& set, int n_max);

}  // namespace flowers
