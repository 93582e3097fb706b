#include "cantor/word.hpp"

#include <algorithm>
#include <cctype>
#include <stdexcept>

namespace cantor {

Word::Word(std::string_view bits) : bits_(bits) {
  for (char c : bits_)
    if (c != '0' && c != '1')
      throw std::invalid_argument("word: invalid bit character");
}

Word Word::from_index(std::uint64_t index, int length) {
  if (length < 0 || length > 63) throw std::invalid_argument("word: bad length");
  if (length < 64 && index >> length)
    throw std::invalid_argument("word: index out of range");
  std::string s(static_cast<size_t>(length), '0');
  for (int i = 0; i < length; ++i)
    if ((index >> (length - 1 - i)) & 1) s[static_cast<size_t>(i)] = '1';
  Word w;
  w.bits_ = std::move(s);
  return w;
}

std::uint64_t Word::index() const {
  if (length() > 63) throw std::invalid_argument("word: too long for index");
  std::uint64_t v = 0;
  for (char c : bits_) v = (v << 1) | (c == '1' ? 1u : 0u);
  return v;
}

Word Word::appended(int bit) const {
  Word w = *this;
  w.bits_.push_back(bit ? '1' : '0');
  return w;
}

Word Word::prefix(int k) const {
  if (k < 0 || k > length()) throw std::invalid_argument("word: bad prefix length");
  Word w;
  w.bits_ = bits_.substr(0, static_cast<size_t>(k));
  return w;
}

int Word::ones() const {
  return static_cast<int>(std::count(bits_.begin(), bits_.end(), '1'));
}

bool Word::all_zeros() const {
  return bits_.find('1') == std::string::npos;
}

bool Word::all_ones() const {
  return bits_.find('0') == std::string::npos;
}

int Word::alternations() const {
  int n = 0;
  for (size_t i = 1; i < bits_.size(); ++i)
    if (bits_[i] != bits_[i - 1]) ++n;
  return n;
}

Word parse_word(std::string_view text) {
  std::string bits;
  size_t i = 0;
  while (i < text.size()) {
    char c = text[i];
    if (std::isspace(static_cast<unsigned char>(c))) {
      ++i;
      continue;
    }
    if (c != '0' && c != '1')
      throw std::invalid_argument("word: invalid character in input");
    ++i;
    if (i < text.size() && text[i] == '^') {
      ++i;
      size_t start = i;
      while (i < text.size() && std::isdigit(static_cast<unsigned char>(text[i]))) ++i;
      if (i == start) throw std::invalid_argument("word: missing run length after '^'");
      unsigned long run = std::stoul(std::string(text.substr(start, i - start)));
      bits.append(run, c);
    } else {
      bits.push_back(c);
    }
  }
  return Word(bits);
}

}  // namespace cantor
