#pragma once

#include <string>
#include <string_view>
#include <vector>

#include "cantor/rational.hpp"
#include "cantor/word.hpp"

namespace cantor {

// A purely periodic element of Cantor space: bit(i) is read from a
// primitive period word at offset rotation. Construction canonicalizes,
// so two representations of the same sequence compare equal.
class PeriodicPoint {
 public:
  // period must be nonempty; rotation may be any integer index into it.
  PeriodicPoint(const Word& period, int rotation);

  static PeriodicPoint zeros() { return PeriodicPoint(Word("0"), 0); }
  static PeriodicPoint ones() { return PeriodicPoint(Word("1"), 0); }

  int bit(std::uint64_t i) const;
  Word prefix(int k) const;
  bool in_cylinder(const Word& sigma) const;

  const Word& period() const { return period_; }
  int rotation() const { return rotation_; }
  int period_length() const { return period_.length(); }
  // Fraction of ones in one period; this is the limit of bit densities.
  Rational ones_density() const;

  PeriodicPoint shifted(std::uint64_t by = 1) const;

  std::string str() const;  // "(bits)*@rotation"

  bool operator==(const PeriodicPoint&) const = default;
  auto operator<=>(const PeriodicPoint&) const = default;

 private:
  Word period_;   // primitive
  int rotation_;  // reduced modulo period length
};

// The length(w) points shift^j(w*) for j = 0..length(w)-1, canonicalized.
// Entries repeat exactly when w is not primitive.
std::vector<PeriodicPoint> cyclic_shifts(const Word& w);

// Parses "(w)*@r" where w may use run-length form; "@r" defaults to 0.
PeriodicPoint parse_periodic_point(std::string_view text);

}  // namespace cantor
