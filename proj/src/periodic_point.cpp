#include "cantor/periodic_point.hpp"

#include <stdexcept>

namespace cantor {

namespace {

// Length of the shortest word u with w = u^m. Checks each divisor.
int primitive_root_length(const std::string& w) {
  int n = static_cast<int>(w.size());
  for (int p = 1; p < n; ++p) {
    if (n % p != 0) continue;
    bool ok = true;
    for (int i = p; i < n && ok; ++i)
      if (w[static_cast<size_t>(i)] != w[static_cast<size_t>(i - p)]) ok = false;
    if (ok) return p;
  }
  return n;
}

}  // namespace

PeriodicPoint::PeriodicPoint(const Word& period, int rotation) {
  if (period.empty()) throw std::invalid_argument("periodic point: empty period");
  int root = primitive_root_length(period.str());
  period_ = period.prefix(root);
  rotation_ = ((rotation % root) + root) % root;
}

int PeriodicPoint::bit(std::uint64_t i) const {
  auto n = static_cast<std::uint64_t>(period_.length());
  return period_.bit(static_cast<int>((static_cast<std::uint64_t>(rotation_) + i) % n));
}

Word PeriodicPoint::prefix(int k) const {
  if (k < 0) throw std::invalid_argument("periodic point: negative prefix length");
  std::string s(static_cast<size_t>(k), '0');
  for (int i = 0; i < k; ++i)
    if (bit(static_cast<std::uint64_t>(i))) s[static_cast<size_t>(i)] = '1';
  return Word(s);
}

bool PeriodicPoint::in_cylinder(const Word& sigma) const {
  for (int i = 0; i < sigma.length(); ++i)
    if (bit(static_cast<std::uint64_t>(i)) != sigma.bit(i)) return false;
  return true;
}

Rational PeriodicPoint::ones_density() const {
  return make_rational(period_.ones(), period_.length());
}

PeriodicPoint PeriodicPoint::shifted(std::uint64_t by) const {
  auto n = static_cast<std::uint64_t>(period_.length());
  return PeriodicPoint(period_,
                       static_cast<int>((static_cast<std::uint64_t>(rotation_) + by) % n));
}

std::string PeriodicPoint::str() const {
  return "(" + period_.str() + ")*@" + std::to_string(rotation_);
}

std::vector<PeriodicPoint> cyclic_shifts(const Word& w) {
  if (w.empty()) throw std::invalid_argument("cyclic_shifts: empty word");
  std::vector<PeriodicPoint> points;
  points.reserve(static_cast<size_t>(w.length()));
  for (int j = 0; j < w.length(); ++j) points.emplace_back(w, j);
  return points;
}

PeriodicPoint parse_periodic_point(std::string_view text) {
  size_t open = text.find('(');
  size_t close = text.rfind(')');
  if (open == std::string_view::npos || close == std::string_view::npos || close < open)
    throw std::invalid_argument("periodic point: expected \"(w)*@r\"");
  Word period = parse_word(text.substr(open + 1, close - open - 1));
  std::string_view rest = text.substr(close + 1);
  if (rest.empty() || rest[0] != '*')
    throw std::invalid_argument("periodic point: missing '*'");
  rest = rest.substr(1);
  int rotation = 0;
  if (!rest.empty()) {
    if (rest[0] != '@') throw std::invalid_argument("periodic point: expected '@r'");
    rotation = std::stoi(std::string(rest.substr(1)));
  }
  return PeriodicPoint(period, rotation);
}

}  // namespace cantor
