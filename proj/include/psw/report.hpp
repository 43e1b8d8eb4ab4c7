#ifndef PSW_REPORT_HPP
#define PSW_REPORT_HPP

#include <cstdint>
#include <iosfwd>
#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

#include "psw/dualities.hpp"

namespace psw {

struct UsageError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

enum class Format { json, csv, table };
Format format_from_string(const std::string& s);

struct IntRange {
  int lo = 0;
  int hi = 0;
};
// "A..B" or a single integer.
IntRange parse_range(const std::string& s);

struct RunConfig {
  int n = 0;
  int r = 0;
  std::vector<std::string> checks{"all"};
  Format format = Format::json;
  std::optional<std::string> out;
  std::size_t max_ambient = 256;
  std::uint64_t seed = 0;
  bool timing = false;
};

// Check names in report order.
const std::vector<std::string>& check_names();
// Expands "all", drops duplicates, sorts into report order. Throws UsageError.
std::vector<std::string> expand_checks(const std::vector<std::string>& names);

// (n+1)^r, saturating.
std::size_t ambient_dim(int n, int r);
bool within_guard(int n, int r, std::size_t max_ambient);

CheckResult run_check(Workbench& wb, const std::string& name);
std::vector<CheckResult> run_checks(int n, int r, const std::vector<std::string>& names,
                                    std::uint64_t seed);
// 0 when nothing failed, 1 otherwise. Report-only outcomes never fail.
int exit_status(const std::vector<CheckResult>& results);

struct DimsRow {
  int n = 0;
  int r = 0;
  std::size_t psi = 0;
  std::size_t dnr = 0;
  std::vector<std::size_t> dnr_l;
  std::size_t dnr_V = 0;
  std::size_t end_full = 0;
  std::size_t end_levi = 0;
  std::size_t end_parabolic = 0;
  std::size_t end_unipotent = 0;
  std::size_t invariants = 0;
};
DimsRow compute_dims(int n, int r);

struct SweepCell {
  int n = 0;
  int r = 0;
  bool skipped = false;
  std::vector<CheckResult> results;
  // Only for n < r: "⊊" or "=" comparing span Psi with D(n,r)^V.
  std::optional<std::string> strictness;
  std::size_t psi_dim = 0;
  std::size_t dnr_V_dim = 0;
};
std::vector<SweepCell> run_sweep(IntRange ns, IntRange rs, const std::vector<std::string>& names,
                                 std::size_t max_ambient, std::uint64_t seed);
int exit_status(const std::vector<SweepCell>& cells);

std::string render_results(const std::vector<CheckResult>& results, Format f, bool timing);
std::string render_dims(const std::vector<DimsRow>& rows, Format f);
std::string render_sweep(const std::vector<SweepCell>& cells, Format f, bool timing);

// Full command line front end. Returns the process exit code.
int run_cli(int argc, const char* const* argv, std::ostream& out, std::ostream& err);

}  // namespace psw

#endif  // PSW_REPORT_HPP
