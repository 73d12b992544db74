#include "fanolie/octonion.hpp"

#include <iomanip>
#include <map>
#include <sstream>
#include <tuple>

namespace fanolie {

MultiplicationTable multiplication_table(const CompositionFactor& eps) {
  MultiplicationTable t{};
  for (int a = 0; a < 8; ++a) {
    t[0][a] = {1, a};
    t[a][0] = {1, a};
  }
  for (Point p : all_points())
    for (Point q : all_points()) {
      if (p == q) {
        t[p.label()][q.label()] = {-1, 0};
      } else {
        Point r = *add(p, q);
        t[p.label()][q.label()] = {eps(p, q), r.label()};
      }
    }
  return t;
}

std::string basis_label(const SignedBasis& b) {
  std::string s = b.sign < 0 ? "-" : "";
  return s + (b.index == 0 ? "1" : "e_P" + std::to_string(b.index));
}

std::string format_table(const MultiplicationTable& t) {
  std::ostringstream os;
  auto cell = [&](const std::string& s) { os << std::setw(7) << s; };
  cell(".");
  for (int b = 0; b < 8; ++b) cell(basis_label({1, b}));
  os << "\n";
  for (int a = 0; a < 8; ++a) {
    cell(basis_label({1, a}));
    for (int b = 0; b < 8; ++b) cell(basis_label(t[a][b]));
    os << "\n";
  }
  return os.str();
}

bool symbolic_norm_multiplicativity(const MultiplicationTable& t) {
  // Monomial x_a x_a' y_b y_b' keyed with a <= a', b <= b'.
  using Key = std::tuple<int, int, int, int>;
  std::map<Key, long> poly;
  auto key = [](int a, int a2, int b, int b2) {
    return Key{std::min(a, a2), std::max(a, a2), std::min(b, b2), std::max(b, b2)};
  };
  std::array<std::vector<std::tuple<int, int, int>>, 8> terms;  // (a, b, sign) contributing to coordinate k
  for (int a = 0; a < 8; ++a)
    for (int b = 0; b < 8; ++b) terms[t[a][b].index].emplace_back(a, b, t[a][b].sign);
  for (const auto& coord : terms)
    for (auto [a, b, s] : coord)
      for (auto [a2, b2, s2] : coord) poly[key(a, a2, b, b2)] += s * s2;
  for (int a = 0; a < 8; ++a)
    for (int b = 0; b < 8; ++b) poly[key(a, a, b, b)] -= 1;
  for (const auto& [k, c] : poly)
    if (c != 0) return false;
  return true;
}

}  // namespace fanolie
