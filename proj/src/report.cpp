#include "esc/report.hpp"

#include <algorithm>
#include <sstream>
#include <thread>

#include "esc/berggren.hpp"

namespace esc::report {

namespace {

Cell num(Nat n) { return {to_string(n), true}; }
Cell num(Int n) { return {to_string(n), true}; }
Cell num(std::size_t n) { return {std::to_string(n), true}; }
Cell str(std::string_view s) { return {std::string(s), false}; }

std::string json_escape(const std::string& s) {
  std::string out;
  for (char ch : s) {
    if (ch == '"' || ch == '\\') out += '\\';
    out += ch;
  }
  return out;
}

}  // namespace

std::string render(const Table& table, Format format) {
  std::ostringstream os;
  switch (format) {
    case Format::Text: {
      std::vector<std::size_t> width(table.columns.size());
      for (std::size_t i = 0; i < table.columns.size(); ++i) width[i] = table.columns[i].size();
      for (const auto& row : table.rows) {
        for (std::size_t i = 0; i < row.size(); ++i) width[i] = std::max(width[i], row[i].text.size());
      }
      const auto line = [&](const auto& cells, auto text_of) {
        for (std::size_t i = 0; i < cells.size(); ++i) {
          if (i != 0) os << "  ";
          const std::string& t = text_of(cells[i]);
          os << std::string(width[i] - t.size(), ' ') << t;
        }
        os << '\n';
      };
      line(table.columns, [](const std::string& s) -> const std::string& { return s; });
      for (const auto& row : table.rows) line(row, [](const Cell& c) -> const std::string& { return c.text; });
      break;
    }
    case Format::Csv: {
      for (std::size_t i = 0; i < table.columns.size(); ++i) os << (i ? "," : "") << table.columns[i];
      os << '\n';
      for (const auto& row : table.rows) {
        for (std::size_t i = 0; i < row.size(); ++i) os << (i ? "," : "") << row[i].text;
        os << '\n';
      }
      break;
    }
    case Format::Json: {
      for (const auto& row : table.rows) {
        os << '{';
        for (std::size_t i = 0; i < row.size(); ++i) {
          os << (i ? "," : "") << '"' << json_escape(table.columns[i]) << "\":";
          if (row[i].numeric) {
            os << row[i].text;
          } else {
            os << '"' << json_escape(row[i].text) << '"';
          }
        }
        os << "}\n";
      }
      break;
    }
  }
  return os.str();
}

VerifyReport verify(const EscSolution& s) {
  VerifyReport r{s, classify(s), {}, {}, {}};
  const Nat gcd_py = gcd(s.p, s.y);
  if (!s.x.is_zero() && s.x < s.y) r.eq5 = check_eq5(s.p, s.x, s.y);
  if (!s.x.is_zero() && s.x < s.z && (gcd_py == 1 || gcd_py == s.p)) r.eq6 = check_eq6(s.p, s.x, s.z, gcd_py);
  if (!s.y.is_zero() && s.y < s.z) r.eq7 = check_eq7(s.p, s.y, s.z);
  return r;
}

Table to_table(const VerifyReport& r) {
  const auto cond = [](const std::optional<ConditionCheck>& c) {
    return str(!c ? "n/a" : c->holds ? "holds" : "fails");
  };
  const auto& s = r.solution;
  return {{"p", "x", "y", "z", "kind", "eq5", "eq6", "eq7"},
          {{num(s.p), num(s.x), num(s.y), num(s.z), str(to_string(r.kind)), cond(r.eq5), cond(r.eq6), cond(r.eq7)}}};
}

Table enumerate_table(Nat p) {
  Table t{{"p", "x", "y", "z", "kind"}, {}};
  for (const auto& s : enumerate_nontrivial(p)) {
    t.rows.push_back({num(s.p), num(s.x), num(s.y), num(s.z), str(to_string(classify(s)))});
  }
  return t;
}

TablesResult appendix_rows(TripleKind kind, Nat p_max) {
  TablesResult out;
  for (Nat p = 3; p <= p_max; p += 2) {
    if (!is_prime(p)) continue;
    try {
      for (const auto& s : enumerate_nontrivial(p)) out.rows.push_back({s, forward(kind, s)});
    } catch (const OverflowError& e) {
      out.warnings.push_back("p=" + to_string(p) + " skipped: " + e.what());
    }
  }
  return out;
}

Table to_table(const TablesResult& r) {
  Table t{{"p", "x", "y", "z", "A", "B", "C"}, {}};
  for (const auto& row : r.rows) {
    const auto& s = row.solution;
    t.rows.push_back({num(s.p), num(s.x), num(s.y), num(s.z), num(row.triple.A), num(row.triple.B), num(row.triple.C)});
  }
  return t;
}

Table to_table(const bezout::SearchReport& r) {
  Table t{{"p", "x", "y", "z", "kind", "m", "k", "D"}, {}};
  for (const auto& c : r.certificates) {
    t.rows.push_back({num(c.p), num(c.x), num(c.y), num(c.z), str(bezout::to_string(c.kind)), num(c.m), num(c.k),
                      num(c.discriminant)});
  }
  return t;
}

Table berggren_table(std::size_t max_depth, std::optional<Nat> max_hypotenuse) {
  Table t{{"a", "b", "c", "depth", "path"}, {}};
  for (const auto& node : berggren::enumerate_tree(max_depth, max_hypotenuse)) {
    t.rows.push_back({num(node.a), num(node.b), num(node.c), num(node.depth()), str(berggren::to_string(node.path))});
  }
  return t;
}

std::size_t RangeReport::witnessed() const {
  return static_cast<std::size_t>(std::count_if(entries.begin(), entries.end(), [](const auto& e) { return e.witness.has_value(); }));
}

std::size_t RangeReport::with_trivial() const {
  return static_cast<std::size_t>(std::count_if(entries.begin(), entries.end(), [](const auto& e) { return e.has_trivial; }));
}

std::vector<Nat> RangeReport::unwitnessed() const {
  std::vector<Nat> out;
  for (const auto& e : entries) {
    if (!e.witness) out.push_back(e.p);
  }
  return out;
}

std::vector<Nat> RangeReport::unsolved() const {
  std::vector<Nat> out;
  for (const auto& e : entries) {
    if (!e.witness && !e.has_trivial) out.push_back(e.p);
  }
  return out;
}

namespace {

RangeEntry scan_prime(Nat p) {
  RangeEntry e;
  e.p = p;
  e.has_trivial = !trivial_solutions(p).empty();
  if (p == 2) return e;  // 4/2 has no solution with x < y < z
  try {
    e.witness = smallest_nontrivial(p);
    if (e.witness) e.witness_kind = classify(*e.witness);
  } catch (const OverflowError&) {
    e.overflow = true;
  }
  return e;
}

}  // namespace

RangeReport range_scan(Nat lo, Nat hi, unsigned workers) {
  if (lo > hi) throw std::invalid_argument("range: lower bound exceeds upper bound");
  std::vector<Nat> primes;
  for (Nat n = lo; n <= hi; n += 1) {
    if (is_prime(n)) primes.push_back(n);
  }
  RangeReport report;
  report.entries.resize(primes.size());
  workers = std::max(1u, std::min<unsigned>(workers, static_cast<unsigned>(std::max<std::size_t>(primes.size(), 1))));
  const auto run_block = [&](unsigned w) {
    const std::size_t begin = primes.size() * w / workers;
    const std::size_t end = primes.size() * (w + 1) / workers;
    for (std::size_t i = begin; i < end; ++i) report.entries[i] = scan_prime(primes[i]);
  };
  if (workers == 1) {
    run_block(0);
  } else {
    std::vector<std::jthread> pool;
    for (unsigned w = 0; w < workers; ++w) pool.emplace_back(run_block, w);
  }
  return report;
}

Table to_table(const RangeReport& r) {
  Table t{{"p", "x", "y", "z", "kind"}, {}};
  for (const auto& e : r.entries) {
    if (!e.witness) continue;
    const auto& s = *e.witness;
    t.rows.push_back({num(s.p), num(s.x), num(s.y), num(s.z), str(to_string(e.witness_kind))});
  }
  return t;
}

std::string range_summary(const RangeReport& r) {
  std::ostringstream os;
  os << "primes checked: " << r.primes_checked() << '\n';
  os << "non-trivial witnesses: " << r.witnessed() << '\n';
  os << "primes with trivial solutions: " << r.with_trivial() << '\n';
  const auto list = [&](const char* label, const std::vector<Nat>& ps) {
    os << label << ": ";
    if (ps.empty()) os << "none";
    for (std::size_t i = 0; i < ps.size(); ++i) os << (i ? " " : "") << ps[i];
    os << '\n';
  };
  list("without non-trivial witness", r.unwitnessed());
  list("without any solution", r.unsolved());
  std::vector<Nat> overflowed;
  for (const auto& e : r.entries) {
    if (e.overflow) overflowed.push_back(e.p);
  }
  if (!overflowed.empty()) list("overflowed", overflowed);
  return os.str();
}

}  // namespace esc::report
