#pragma once

#include "parahoric/alcove.hpp"
#include "parahoric/cohomology.hpp"
#include "parahoric/slmodel.hpp"

#include <iosfwd>
#include <optional>
#include <string>
#include <vector>

namespace parahoric::cli {

enum ExitCode : int { kOk = 0, kInternal = 1, kUsage = 2, kCap = 3 };

struct ActionSpec {
  enum class Kind { Trivial, Diagram, Sl, Su };
  Kind kind = Kind::Trivial;
  std::vector<int> permutation;  // Diagram, 1-based
  InvolutionKind involution = InvolutionKind::J;
  SuCase su_case = SuCase::OddA;
  std::string text = "trivial";
};

/// "trivial", "diagram:3,2,1", "sl:J", "sl:J-prime", "sl:case-B", "su:odd-A", "su:odd-B", "su:even-m", "su:even-0".
ActionSpec parse_action(const std::string& text);

struct GroupSpec {
  CartanType type;
  unsigned order = 1;
  ActionSpec action;
  RationalVector point;  // base point as simple-root values; empty means the origin
  long characteristic = 0;
};

/// "1/3,1/3" -> rationals. Throws InvalidInput.
RationalVector parse_rational_list(const std::string& text);

struct TypesReport {
  RootDatum datum;
  GammaAction action;
  FiniteAbelianGroup h1;
  std::vector<QZVector> classes;
  std::optional<std::vector<LocalType>> types;  // nullopt when no lift provider exists for the action
  std::vector<std::vector<QZVector>> cocycles;  // one table per type
  AlcovePoint base;
  std::string involution;
  std::string reduction;
  std::string note;
};

/// Shared by `types`, `twist` and `global`.
TypesReport compute_types(const GroupSpec& spec, std::size_t cap);

/// Runs the command line (without the program name). Output goes to `out`, diagnostics to `err`.
int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace parahoric::cli
