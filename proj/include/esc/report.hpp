#pragma once

// Command implementations behind the esc tool, kept out of main() so the
// tests can drive them directly. Every command produces a Table; rendering
// is a separate step so text, CSV and JSON-lines share one code path.

#include <optional>
#include <string>
#include <vector>

#include "esc/bezout.hpp"
#include "esc/core.hpp"
#include "esc/triples.hpp"

namespace esc::report {

enum class Format { Text, Csv, Json };

struct Cell {
  std::string text;
  bool numeric = true;
};

struct Table {
  std::vector<std::string> columns;
  std::vector<std::vector<Cell>> rows;
};

/// Text: right-aligned columns under a header. Csv: header plus rows, no
/// quoting. Json: one object per row, numeric cells unquoted.
std::string render(const Table& table, Format format);

// verify

struct VerifyReport {
  EscSolution solution;
  SolutionKind kind = SolutionKind::Invalid;
  // Present when the pair is strictly increasing.
  std::optional<ConditionCheck> eq5;
  std::optional<ConditionCheck> eq6;
  std::optional<ConditionCheck> eq7;
};

VerifyReport verify(const EscSolution& s);
Table to_table(const VerifyReport& r);

// enumerate

Table enumerate_table(Nat p);

// tables

struct TableRow {
  EscSolution solution;
  PythTriple triple;
};

struct TablesResult {
  std::vector<TableRow> rows;
  std::vector<std::string> warnings;
};

/// Rows (p, x, y, z, A, B, C) for every non-trivial solution of every odd
/// prime p <= p_max, with (A, B, C) = forward(kind, solution).
TablesResult appendix_rows(TripleKind kind, Nat p_max);
Table to_table(const TablesResult& r);

// search

Table to_table(const bezout::SearchReport& r);

// berggren

Table berggren_table(std::size_t max_depth, std::optional<Nat> max_hypotenuse);

// range

struct RangeEntry {
  Nat p;
  std::optional<EscSolution> witness;
  SolutionKind witness_kind = SolutionKind::Invalid;
  bool has_trivial = false;
  bool overflow = false;
};

struct RangeReport {
  std::vector<RangeEntry> entries;

  std::size_t primes_checked() const { return entries.size(); }
  std::size_t witnessed() const;
  std::size_t with_trivial() const;
  /// Primes with no non-trivial solution found.
  std::vector<Nat> unwitnessed() const;
  /// Primes with no solution of any kind.
  std::vector<Nat> unsolved() const;
};

/// Smallest non-trivial solution for every prime in [lo, hi]. Primes are
/// split into contiguous blocks, one per worker, and merged in prime order,
/// so the report does not depend on the worker count.
RangeReport range_scan(Nat lo, Nat hi, unsigned workers);
Table to_table(const RangeReport& r);
std::string range_summary(const RangeReport& r);

}  // namespace esc::report
