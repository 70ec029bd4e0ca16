// esc: command-line front end for the Erdos-Straus toolkit.
//
// Exit codes: 0 success / valid, 1 invalid / nothing found, 2 usage error,
// 3 arithmetic overflow.

#include <iostream>
#include <optional>
#include <string>
#include <vector>

#include "CLI11.hpp"
#include "esc/berggren.hpp"
#include "esc/bezout.hpp"
#include "esc/core.hpp"
#include "esc/report.hpp"
#include "esc/triples.hpp"

namespace {

constexpr int kExitOk = 0;
constexpr int kExitNotFound = 1;
constexpr int kExitUsage = 2;
constexpr int kExitOverflow = 3;

struct UsageError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

esc::Nat parse_arg(const std::string& text, const char* name) {
  try {
    return esc::parse_nat(text);
  } catch (const std::exception&) {
    throw UsageError(std::string(name) + " must be a non-negative integer, got '" + text + "'");
  }
}

esc::Nat parse_positive(const std::string& text, const char* name) {
  const esc::Nat v = parse_arg(text, name);
  if (v.is_zero()) throw UsageError(std::string(name) + " must be positive");
  return v;
}

esc::Nat parse_odd_prime(const std::string& text) {
  const esc::Nat p = parse_arg(text, "p");
  if (p == 2 || !esc::is_prime(p)) throw UsageError("p = " + text + " is not an odd prime");
  return p;
}

esc::TripleKind parse_triple_kind(const std::string& text) {
  if (text == "first") return esc::TripleKind::First;
  if (text == "second") return esc::TripleKind::Second;
  if (text == "third") return esc::TripleKind::Third;
  throw UsageError("kind must be first, second or third, got '" + text + "'");
}

esc::bezout::Family parse_family(const std::string& text) {
  if (text == "typeI") return esc::bezout::Family::TypeI;
  if (text == "typeII") return esc::bezout::Family::TypeII;
  throw UsageError("kind must be typeI or typeII, got '" + text + "'");
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Erdos-Straus decompositions 4/p = 1/x + 1/y + 1/z, their Pythagorean triples and Bezout families"};
  app.require_subcommand(1);
  app.fallthrough();

  bool csv = false;
  bool json = false;
  bool quiet = false;
  app.add_flag("--csv", csv, "CSV output with a header row");
  app.add_flag("--json", json, "JSON-lines output");
  app.add_flag("--quiet", quiet, "suppress warnings and per-prime rows of range");

  std::vector<std::string> verify_args;
  auto* verify = app.add_subcommand("verify", "classify a candidate (p, x, y, z) and evaluate the necessary conditions");
  verify->add_option("values", verify_args, "p x y z")->expected(4)->required();

  std::string enum_p;
  auto* enumerate = app.add_subcommand("enumerate", "all solutions with x < y < z for an odd prime");
  enumerate->add_option("p", enum_p)->required();

  std::string tables_kind;
  std::string tables_pmax;
  auto* tables = app.add_subcommand("tables", "rows p x y z A B C for every odd prime up to p_max");
  tables->add_option("kind", tables_kind, "first | second | third")->required();
  tables->add_option("p_max", tables_pmax)->required();

  std::string search_p;
  std::string search_kind;
  std::string search_mmax;
  std::string search_kmax;
  bool reduced = false;
  unsigned search_workers = 1;
  auto* search = app.add_subcommand("search", "scan the (m, k) grid of a Bezout family");
  search->add_option("p", search_p)->required();
  search->add_option("kind", search_kind, "typeI | typeII")->required();
  search->add_option("m_max", search_mmax)->required();
  search->add_option("k_max", search_kmax)->required();
  search->add_flag("--reduced", reduced, "type II only: use the reduced (y/p, z/p) scan");
  search->add_option("--workers", search_workers, "worker threads")->check(CLI::PositiveNumber);

  std::size_t depth = 3;
  std::string max_c;
  std::vector<std::string> path_of;
  auto* berggren = app.add_subcommand("berggren", "enumerate the primitive-triple tree or locate a triple in it");
  berggren->add_option("--depth", depth, "maximum depth");
  berggren->add_option("--max-c", max_c, "maximum hypotenuse");
  berggren->add_option("--path", path_of, "a b c: print the path to this triple")->expected(3);

  std::string range_lo;
  std::string range_hi;
  unsigned range_workers = 1;
  auto* range = app.add_subcommand("range", "smallest non-trivial solution for every prime in [lo, hi]");
  range->add_option("lo", range_lo)->required();
  range->add_option("hi", range_hi)->required();
  range->add_option("--workers", range_workers, "worker threads")->check(CLI::PositiveNumber);

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? kExitOk : kExitUsage;
  }
  if (csv && json) {
    std::cerr << "error: --csv and --json are exclusive\n";
    return kExitUsage;
  }
  const auto format = csv ? esc::report::Format::Csv : json ? esc::report::Format::Json : esc::report::Format::Text;
  const auto emit = [&](const esc::report::Table& t) { std::cout << esc::report::render(t, format); };

  try {
    if (*verify) {
      const esc::EscSolution s{parse_positive(verify_args[0], "p"), parse_positive(verify_args[1], "x"),
                               parse_positive(verify_args[2], "y"), parse_positive(verify_args[3], "z")};
      const auto r = esc::report::verify(s);
      emit(esc::report::to_table(r));
      return r.kind == esc::SolutionKind::Invalid ? kExitNotFound : kExitOk;
    }

    if (*enumerate) {
      const auto t = esc::report::enumerate_table(parse_odd_prime(enum_p));
      emit(t);
      return t.rows.empty() ? kExitNotFound : kExitOk;
    }

    if (*tables) {
      const auto kind = parse_triple_kind(tables_kind);
      const esc::Nat p_max = parse_arg(tables_pmax, "p_max");
      if (p_max < 3) throw UsageError("p_max must be at least 3");
      const auto result = esc::report::appendix_rows(kind, p_max);
      if (!quiet) {
        for (const auto& w : result.warnings) std::cerr << "warning: " << w << '\n';
      }
      emit(esc::report::to_table(result));
      return kExitOk;
    }

    if (*search) {
      const esc::Nat p = parse_odd_prime(search_p);
      const auto family = parse_family(search_kind);
      const esc::Nat m_max = parse_positive(search_mmax, "m_max");
      const esc::Nat k_max = parse_positive(search_kmax, "k_max");
      if (reduced && family != esc::bezout::Family::TypeII) throw UsageError("--reduced applies to typeII only");
      const auto report = reduced ? esc::bezout::search_reduced(p, m_max, k_max)
                                  : esc::bezout::search_solutions(p, family, m_max, k_max, search_workers);
      // Certificates are re-verified before they are printed.
      for (const auto& c : report.certificates) {
        if (!esc::verify_identity(c.solution())) {
          std::cerr << "internal error: certificate failed verification\n";
          return kExitNotFound;
        }
      }
      if (!quiet && report.overflow_cells != 0) {
        std::cerr << "warning: " << report.overflow_cells << " grid cells skipped on overflow\n";
      }
      emit(esc::report::to_table(report));
      return report.certificates.empty() ? kExitNotFound : kExitOk;
    }

    if (*berggren) {
      if (!path_of.empty()) {
        const auto path = esc::berggren::find_path(parse_arg(path_of[0], "a"), parse_arg(path_of[1], "b"),
                                                   parse_arg(path_of[2], "c"));
        if (!path) {
          std::cerr << "not a primitive Pythagorean triple\n";
          return kExitNotFound;
        }
        std::cout << esc::berggren::to_string(*path) << '\n';
        return kExitOk;
      }
      std::optional<esc::Nat> bound;
      if (!max_c.empty()) bound = parse_arg(max_c, "max-c");
      emit(esc::report::berggren_table(depth, bound));
      return kExitOk;
    }

    if (*range) {
      const esc::Nat lo = parse_arg(range_lo, "lo");
      const esc::Nat hi = parse_arg(range_hi, "hi");
      if (lo > hi) throw UsageError("lo must not exceed hi");
      const auto report = esc::report::range_scan(lo, hi, range_workers);
      const std::string summary = esc::report::range_summary(report);
      if (format == esc::report::Format::Text) {
        if (!quiet) emit(esc::report::to_table(report));
        std::cout << summary;
      } else {
        if (!quiet) emit(esc::report::to_table(report));
        std::cerr << summary;
      }
      for (const auto& p : report.unwitnessed()) {
        if (p != 2) return kExitNotFound;
      }
      return kExitOk;
    }
  } catch (const UsageError& e) {
    std::cerr << "error: " << e.what() << '\n';
    return kExitUsage;
  } catch (const std::invalid_argument& e) {
    std::cerr << "error: " << e.what() << '\n';
    return kExitUsage;
  } catch (const esc::OverflowError& e) {
    std::cerr << "overflow: " << e.what() << '\n';
    return kExitOverflow;
  }
  return kExitUsage;
}
