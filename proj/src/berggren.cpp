#include "esc/berggren.hpp"

#include <algorithm>
#include <array>
#include <deque>
#include <stdexcept>

namespace esc::berggren {

namespace {

using Matrix = std::array<std::array<int, 3>, 3>;

constexpr std::array<Matrix, 3> kForward{{
    {{{1, -2, 2}, {2, -1, 2}, {2, -2, 3}}},
    {{{1, 2, 2}, {2, 1, 2}, {2, 2, 3}}},
    {{{-1, 2, 2}, {-2, 1, 2}, {-2, 2, 3}}},
}};

// Inverses of the matrices above (each has determinant +-1).
constexpr std::array<Matrix, 3> kInverse{{
    {{{1, 2, -2}, {-2, -1, 2}, {-2, -2, 3}}},
    {{{1, 2, -2}, {2, 1, -2}, {-2, -2, 3}}},
    {{{-1, -2, 2}, {2, 1, -2}, {-2, -2, 3}}},
}};

std::array<Int, 3> multiply(const Matrix& m, const std::array<Int, 3>& v) {
  std::array<Int, 3> out{};
  for (std::size_t r = 0; r < 3; ++r) {
    for (std::size_t c = 0; c < 3; ++c) out[r] += Int(m[r][c]) * v[c];
  }
  return out;
}

}  // namespace

std::string to_string(Branch b) {
  switch (b) {
    case Branch::M1: return "M1";
    case Branch::M2: return "M2";
    case Branch::M3: return "M3";
  }
  return "?";
}

std::string to_string(const std::vector<Branch>& path) {
  if (path.empty()) return "root";
  std::string out;
  for (Branch b : path) {
    if (!out.empty()) out += '.';
    out += to_string(b);
  }
  return out;
}

TreeTriple root() { return {}; }

TreeTriple child(const TreeTriple& t, Branch branch) {
  const auto v = multiply(kForward[static_cast<std::size_t>(branch)], {to_signed(t.a), to_signed(t.b), to_signed(t.c)});
  TreeTriple out{to_unsigned(v[0]), to_unsigned(v[1]), to_unsigned(v[2]), t.path};
  out.path.push_back(branch);
  return out;
}

std::vector<TreeTriple> children(const TreeTriple& t) {
  return {child(t, Branch::M1), child(t, Branch::M2), child(t, Branch::M3)};
}

std::vector<TreeTriple> enumerate_tree(std::size_t max_depth, std::optional<Nat> max_hypotenuse) {
  std::vector<TreeTriple> out;
  std::deque<TreeTriple> queue{root()};
  while (!queue.empty()) {
    TreeTriple t = std::move(queue.front());
    queue.pop_front();
    // Hypotenuses grow strictly down the tree, so a pruned node prunes its subtree.
    if (max_hypotenuse && t.c > *max_hypotenuse) continue;
    if (t.depth() < max_depth) {
      for (auto& c : children(t)) queue.push_back(std::move(c));
    }
    out.push_back(std::move(t));
  }
  return out;
}

bool is_primitive(Nat a, Nat b, Nat c) {
  if (a * a + b * b != c * c) throw std::invalid_argument("is_primitive: not a Pythagorean triple");
  return gcd(a, b) == 1;
}

std::optional<std::vector<Branch>> find_path(Nat a, Nat b, Nat c) {
  if (a.is_zero() || b.is_zero() || a * a + b * b != c * c || gcd(a, b) != 1) return std::nullopt;
  if (a.is_even()) std::swap(a, b);
  std::array<Int, 3> v{to_signed(a), to_signed(b), to_signed(c)};
  std::vector<Branch> reversed;
  while (!(v[0] == 3 && v[1] == 4 && v[2] == 5)) {
    bool stepped = false;
    for (std::size_t i = 0; i < 3; ++i) {
      const auto parent = multiply(kInverse[i], v);
      if (!parent[0].is_negative() && !parent[0].is_zero() && !parent[1].is_negative() && !parent[1].is_zero()) {
        reversed.push_back(static_cast<Branch>(i));
        v = parent;
        stepped = true;
        break;
      }
    }
    if (!stepped) return std::nullopt;
  }
  std::reverse(reversed.begin(), reversed.end());
  return reversed;
}

}  // namespace esc::berggren
