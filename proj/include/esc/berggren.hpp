#pragma once

// The ternary tree of primitive Pythagorean triples rooted at (3, 4, 5).
// Children come from left-multiplying the column vector (a, b, c) by
//
//   M1 = [ 1 -2  2 ]   M2 = [ 1  2  2 ]   M3 = [ -1  2  2 ]
//        [ 2 -1  2 ]        [ 2  1  2 ]        [ -2  1  2 ]
//        [ 2 -2  3 ]        [ 2  2  3 ]        [ -2  2  3 ]
//
// Every node keeps the odd leg first, as the root does.

#include <optional>
#include <string>
#include <vector>

#include "esc/integer.hpp"

namespace esc::berggren {

enum class Branch { M1, M2, M3 };

std::string to_string(Branch b);
std::string to_string(const std::vector<Branch>& path);

struct TreeTriple {
  Nat a = 3;
  Nat b = 4;
  Nat c = 5;
  std::vector<Branch> path;

  std::size_t depth() const { return path.size(); }
};

TreeTriple root();

TreeTriple child(const TreeTriple& t, Branch branch);
/// Children in M1, M2, M3 order.
std::vector<TreeTriple> children(const TreeTriple& t);

/// Breadth-first: all nodes with depth <= max_depth and c <= max_hypotenuse,
/// ordered by depth and then by path.
std::vector<TreeTriple> enumerate_tree(std::size_t max_depth, std::optional<Nat> max_hypotenuse = std::nullopt);

/// gcd(a, b) == 1. Throws std::invalid_argument if a^2 + b^2 != c^2.
bool is_primitive(Nat a, Nat b, Nat c);

/// Path from the root to the node holding {a, b} (either leg order), or
/// nullopt if the input is not a primitive Pythagorean triple.
std::optional<std::vector<Branch>> find_path(Nat a, Nat b, Nat c);

}  // namespace esc::berggren
