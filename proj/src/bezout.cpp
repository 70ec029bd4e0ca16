#include "esc/bezout.hpp"

#include <algorithm>
#include <stdexcept>
#include <thread>

namespace esc::bezout {

std::string_view to_string(Family f) { return f == Family::TypeI ? "typeI" : "typeII"; }

SolutionKind solution_kind(Family f) { return f == Family::TypeI ? SolutionKind::TypeI : SolutionKind::TypeII; }

namespace {

void require_index(Nat k, const char* what) {
  if (k.is_zero()) throw std::invalid_argument(std::string(what) + ": index must be >= 1");
}

Nat type1_b1(Nat p) { return Nat(4) * ceil_div(p, 4) - p; }

}  // namespace

BezoutPair type1_family(Nat p, Nat k) {
  require_index(k, "type1_family");
  if (p.is_even()) throw std::invalid_argument("type1_family: p must be odd");
  const Nat b1 = type1_b1(p);
  const Nat c1 = (b1 * p + 1) / 4;
  const Nat b = Nat(4) * (k - 1) + b1;
  const Nat c = p * (k - 1) + c1;
  return {k, b, c, Family::TypeI, gcd(b, c) == 1};
}

BezoutPair type2_family(Nat p, Nat k) {
  require_index(k, "type2_family");
  const Nat b = Nat(4) * k - 1;
  const Nat c = p * k;
  return {k, b, c, Family::TypeII, gcd(b, c) == 1};
}

bool family_identity_check(const BezoutPair& pair, Nat p) {
  const Int lhs = Int(4) * to_signed(pair.c) - to_signed(p) * to_signed(pair.b);
  const Nat g = gcd(pair.c, pair.b);
  const Nat rhs = pair.kind == Family::TypeI ? g : p * g;
  return lhs == to_signed(rhs);
}

Int discriminant(Family kind, Nat p, Nat m, Nat k) {
  if (m.is_zero() || k.is_zero()) throw std::invalid_argument("discriminant: m and k must be >= 1");
  const Int sm = to_signed(m);
  const Int sk = to_signed(k);
  const Int sp = to_signed(p);
  if (kind == Family::TypeI) {
    const Int t = Int(4) * sk - (Int(4) - Int(4) * to_signed(ceil_div(p, 4)) + sp);
    return sm * sm * t * t - sp * sm * t - sm;
  }
  const Int t = Int(4) * sk - 1;
  return sm * sm * t * t - Int(4) * sp * sm * sk;
}

Result<RootPair> roots_if_square(Nat m, const BezoutPair& pair) {
  const Nat sum = m * pair.b;
  const Int d = to_signed(sum * sum) - Int(4) * to_signed(m * pair.c);
  if (!is_perfect_square(d)) return Failure::NotSquare;
  const Nat root = isqrt(to_unsigned(d));
  if (!((sum - root) % 2).is_zero()) return Failure::Parity;
  const Nat x = (sum - root) / 2;
  if (x.is_zero()) return Failure::NonPositive;
  return RootPair{x, (sum + root) / 2};
}

Nat pair_sum_bound(Nat p) {
  const Nat x_lo = p / 4 + 1;
  return Nat(3) * p / 4 + Nat(2) * p * x_lo / (Nat(4) * x_lo - p);
}

namespace {

// One (k, m) column of the grid; appends in increasing m.
void scan_column(Nat p, Family kind, Nat k, Nat m_max, Nat sum_bound, SearchReport& out) {
  BezoutPair pair;
  try {
    pair = kind == Family::TypeI ? type1_family(p, k) : type2_family(p, k);
  } catch (const OverflowError&) {
    ++out.overflow_cells;
    return;
  }
  if (!pair.coprime) return;
  const Nat m_hi = std::min(m_max, sum_bound / pair.b);
  // Below 4c/b^2 the discriminant is negative.
  for (Nat m = std::max(Nat(1), ceil_div(Nat(4) * pair.c, pair.b * pair.b)); m <= m_hi; m += 1) {
    try {
      const auto roots = roots_if_square(m, pair);
      if (!roots || !(roots->x < roots->y)) continue;
      const auto z = recover_z(p, roots->x, roots->y);
      if (!z) continue;
      const EscSolution s{p, roots->x, roots->y, *z};
      if (classify(s) != solution_kind(kind)) continue;
      const Nat sum = m * pair.b;
      const Int d = to_signed(sum * sum) - Int(4) * to_signed(m * pair.c);
      out.certificates.push_back({p, m, k, kind, d, s.x, s.y, s.z, false});
    } catch (const OverflowError&) {
      ++out.overflow_cells;
    }
  }
}

SearchReport merge(std::vector<SearchReport>& parts) {
  SearchReport out;
  for (auto& part : parts) {
    out.overflow_cells += part.overflow_cells;
    out.certificates.insert(out.certificates.end(), part.certificates.begin(), part.certificates.end());
  }
  return out;
}

}  // namespace

SearchReport search_solutions(Nat p, Family kind, Nat m_max, Nat k_max, unsigned workers) {
  if (p == 2 || !is_prime(p)) throw std::invalid_argument("search_solutions: " + to_string(p) + " is not an odd prime");
  if (m_max.is_zero() || k_max.is_zero()) throw std::invalid_argument("search_solutions: bounds must be >= 1");
  const Nat sum_bound = pair_sum_bound(p);
  // b_k >= 4k - 3, so larger k cannot fit under the pair-sum bound.
  const Nat k_hi = std::min(k_max, (sum_bound + 3) / 4 + 1);
  const auto k_count = k_hi.to<std::uint64_t>();
  workers = static_cast<unsigned>(std::clamp<std::uint64_t>(workers, 1, std::max<std::uint64_t>(k_count, 1)));

  std::vector<SearchReport> parts(workers);
  const auto run_block = [&](unsigned w) {
    const std::uint64_t lo = k_count * w / workers + 1;
    const std::uint64_t hi = k_count * (w + 1) / workers;
    for (std::uint64_t k = lo; k <= hi; ++k) scan_column(p, kind, k, m_max, sum_bound, parts[w]);
  };
  if (workers == 1) {
    run_block(0);
  } else {
    std::vector<std::jthread> pool;
    for (unsigned w = 0; w < workers; ++w) pool.emplace_back(run_block, w);
  }
  return merge(parts);
}

Result<ReducedWitness> reduced_type2_check(Nat p, Nat m, Nat k) {
  if (m.is_zero() || k.is_zero()) throw std::invalid_argument("reduced_type2_check: m and k must be >= 1");
  const Nat ceil_quarter = ceil_div(p, 4);
  if (k - 1 > ceil_quarter) throw std::invalid_argument("reduced_type2_check: k - 1 exceeds ceil(p/4)");
  const Nat b = Nat(4) * (k - 1) + (Nat(4) * ceil_quarter - p);
  const Int d = to_signed(m * m * b * b) - to_signed(m * b) - to_signed(m * p);
  if (!is_perfect_square(d)) return Failure::NotSquare;
  const Nat root = isqrt(to_unsigned(d));
  const Nat sum = m * b;
  if (!((sum - root) % 2).is_zero()) return Failure::Parity;
  const Nat y_star = (sum - root) / 2;
  const Nat z_star = (sum + root) / 2;
  if (y_star.is_zero()) return Failure::NonPositive;
  if (!(y_star < z_star)) return Failure::Ordering;
  const Nat x = y_star * z_star / gcd(y_star * z_star, y_star + z_star);
  const EscSolution s{p, x, p * y_star, p * z_star};
  if (!(s.x < s.y && s.y < s.z)) return Failure::Ordering;
  if (!verify_identity(s)) return Failure::IdentityFails;
  return ReducedWitness{y_star, z_star, d, s};
}

SearchReport search_reduced(Nat p, Nat m_max, Nat k_max) {
  if (p == 2 || !is_prime(p)) throw std::invalid_argument("search_reduced: " + to_string(p) + " is not an odd prime");
  if (m_max.is_zero() || k_max.is_zero()) throw std::invalid_argument("search_reduced: bounds must be >= 1");
  SearchReport out;
  const Nat k_hi = std::min(k_max, ceil_div(p, 4) + 1);
  for (Nat k = 1; k <= k_hi; k += 1) {
    for (Nat m = 1; m <= m_max; m += 1) {
      try {
        const auto w = reduced_type2_check(p, m, k);
        if (!w) continue;
        const auto& s = w->solution;
        out.certificates.push_back({p, m, k, Family::TypeII, w->discriminant, s.x, s.y, s.z, true});
      } catch (const OverflowError&) {
        ++out.overflow_cells;
      }
    }
  }
  return out;
}

}  // namespace esc::bezout
