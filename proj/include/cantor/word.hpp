#pragma once

#include <cstddef>
#include <cstdint>
#include <string>
#include <string_view>

namespace cantor {

// Finite binary word sigma. The empty word denotes the whole space,
// i.e. the cylinder [sigma] with no constraint.
class Word {
 public:
  Word() = default;
  explicit Word(std::string_view bits);

  // Word of the given length whose bits spell `index` in binary,
  // most significant bit first. This is the lexicographic rank
  // (0 < 1) among words of that length.
  static Word from_index(std::uint64_t index, int length);

  int length() const { return static_cast<int>(bits_.size()); }
  bool empty() const { return bits_.empty(); }
  int bit(int i) const { return bits_[static_cast<size_t>(i)] == '1' ? 1 : 0; }
  const std::string& str() const { return bits_; }

  std::uint64_t index() const;  // inverse of from_index; length <= 63
  Word appended(int bit) const;
  Word prefix(int k) const;

  int ones() const;
  bool all_zeros() const;
  bool all_ones() const;
  bool is_constant() const { return all_zeros() || all_ones(); }
  // Number of positions i with bit(i) != bit(i+1).
  int alternations() const;

  bool operator==(const Word&) const = default;
  auto operator<=>(const Word&) const = default;

 private:
  std::string bits_;  // characters '0'/'1'
};

// Parses either plain bits ("10110") or run-length form ("1^5 0^15").
// Whitespace between runs is optional. Empty string gives the empty word.
Word parse_word(std::string_view text);

}  // namespace cantor
