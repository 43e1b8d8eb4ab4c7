// Acceptance run: one PASS/FAIL line per criterion, exit status 1 if any fail.
#include <algorithm>
#include <cmath>
#include <cstdio>
#include <memory>
#include <map>
#include <sstream>
#include <string>
#include <vector>

#include "psw/report.hpp"

using namespace psw;

namespace {

struct Cell {
  int n, r;
};

const std::vector<Cell> kGrid = {{1, 1}, {1, 2}, {1, 3}, {2, 1}, {2, 2}, {2, 3},
                                 {3, 1}, {3, 2}, {3, 3}, {2, 4}};

std::map<std::pair<int, int>, std::unique_ptr<Workbench>> benches;

Workbench& bench(const Cell& c) {
  auto& slot = benches[{c.n, c.r}];
  if (!slot) slot = std::make_unique<Workbench>(SpaceDescriptor(c.n, c.r), 0);
  return *slot;
}

int failures = 0;

void line(int k, bool ok, const std::string& text) {
  std::printf("%s criterion %d: %s\n", ok ? "PASS" : "FAIL", k, text.c_str());
  std::fflush(stdout);
  if (!ok) ++failures;
}

std::string cell_name(const Cell& c) { return "(" + std::to_string(c.n) + "," + std::to_string(c.r) + ")"; }

// Runs one check on every cell; ok iff every result passes within the budget.
struct Sweep {
  bool ok = true;
  std::vector<std::string> notes;
  double worst_ms = 0;
  std::vector<CheckResult> results;
};

Sweep sweep(const std::string& check, bool (*select)(const Cell&), double budget_ms,
            bool require_pass = true) {
  Sweep s;
  for (const auto& c : kGrid) {
    if (!select(c) || !within_guard(c.n, c.r, 256)) continue;
    CheckResult res = run_check(bench(c), check);
    s.worst_ms = std::max(s.worst_ms, res.elapsed_ms);
    bool good = res.status == Status::pass || (!require_pass && res.status == Status::report_only);
    if (!good) {
      s.ok = false;
      s.notes.push_back(cell_name(c) + " " + to_string(res.status) + ": " + res.detail);
    }
    if (res.elapsed_ms > budget_ms) {
      s.ok = false;
      s.notes.push_back(cell_name(c) + " over budget: " + std::to_string(res.elapsed_ms) + " ms");
    }
    s.results.push_back(std::move(res));
  }
  return s;
}

std::string summary(const Sweep& s, const std::string& extra = {}) {
  std::ostringstream os;
  os << s.results.size() << " cells, slowest " << std::llround(s.worst_ms) << " ms";
  if (!extra.empty()) os << "; " << extra;
  for (const auto& n : s.notes) os << "; " << n;
  return os.str();
}

const CheckResult* find(const Sweep& s, int n, int r) {
  for (const auto& x : s.results)
    if (x.n == n && x.r == r) return &x;
  return nullptr;
}

bool any(const Cell&) { return true; }
bool n_ge_r(const Cell& c) { return c.n >= c.r; }

}  // namespace

int main() {
  {
    auto s = sweep("ddha-relations", any, 30e3);
    std::size_t instances = 0;
    for (const auto& r : s.results) instances += r.lhs_dim;
    line(1, s.ok && s.results.size() == kGrid.size(),
         "relation families hold exactly under Xi; " + summary(s, std::to_string(instances) + " instances"));
  }
  {
    auto s = sweep("classical", any, 120e3);
    const CheckResult* c22 = find(s, 2, 2);
    bool ok = s.ok && c22 && c22->lhs_dim == 2;
    line(2, ok, "End_GL(Vbar) = span Psi(S_r); " + summary(s, "dim at (2,2) = " + std::to_string(c22 ? c22->lhs_dim : 0)));
  }
  {
    auto s = sweep("levi", any, 300e3);
    bool ok = s.ok;
    for (const auto& r : s.results)
      if (r.n >= r.r && r.lhs_dim != expected_dnr_dim(r.r)) ok = false;
    const CheckResult* a = find(s, 2, 2);
    const CheckResult* b = find(s, 3, 3);
    ok = ok && a && a->lhs_dim == 7 && b && b->lhs_dim == 34;
    line(3, ok, "End_{GL_n x G_m} = D(n,r) and its double centralizer; " +
                    summary(s, "dim D(2,2) = " + std::to_string(a ? a->lhs_dim : 0) +
                                   ", dim D(3,3) = " + std::to_string(b ? b->lhs_dim : 0)));
  }
  {
    auto s = sweep("parabolic", any, 300e3);
    line(4, s.ok, "End_P = D(n,r) cut by the unipotent centralizer, n < r included; " + summary(s));
  }
  {
    auto s = sweep("main-theorem", n_ge_r, 300e3);
    std::string dims;
    bool ok = s.ok;
    for (const auto& r : s.results) {
      if (r.lhs_dim != factorial(r.r)) ok = false;
      dims += (dims.empty() ? "" : " ") + std::to_string(r.lhs_dim);
    }
    for (Cell c : {Cell{1, 1}, Cell{2, 1}, Cell{2, 2}, Cell{3, 2}, Cell{3, 3}})
      if (!find(s, c.n, c.r)) ok = false;
    line(5, ok, "D(n,r)^V = End_P = span Psi(S_r) with dim r!; " + summary(s, "dims " + dims));
  }
  {
    auto s = sweep("structure-lemma", n_ge_r, 300e3);
    line(6, s.ok, "D(n,r)_l and D(n,r) split over the sectors D_[I]; " + summary(s));
  }
  {
    auto s = sweep("key-lemma", n_ge_r, 300e3);
    line(7, s.ok, "annihilation of V-bar_{r minus J} for every nonempty J, formal = sampled; " + summary(s));
  }
  {
    auto s = sweep("invariants", n_ge_r, 300e3);
    bool ok = s.ok;
    for (const auto& r : s.results)
      if (r.lhs_dim != factorial(r.r)) ok = false;
    line(8, ok, "mixed invariants = span C_sigma, dim r!, T onto End_P; " + summary(s));
  }
  {
    bool ok = true;
    std::string text;
    for (Cell c : {Cell{1, 2}, Cell{1, 3}, Cell{2, 3}}) {
      Workbench& wb = bench(c);
      const Subspace& ps = wb.psi();
      const Subspace& dv = wb.dnr_V();
      bool incl = dv.contains(ps);
      ok = ok && incl && wb.verify_main_theorem().status != Status::fail;
      text += " " + cell_name(c) + " psi=" + std::to_string(ps.dim()) + " D^V=" + std::to_string(dv.dim()) +
              (incl ? (dv.dim() > ps.dim() ? " strict" : " equal") : " NOT CONTAINED");
    }
    line(9, ok, "inclusion span Psi(S_r) in D(n,r)^V for n < r, strictness reported:" + text);
  }
  {
    const char* args[] = {"psw", "sweep", "--n-range", "1..3", "--r-range", "1..3", "--seed", "11"};
    std::ostringstream a, b, err;
    int ca = run_cli(8, args, a, err);
    int cb = run_cli(8, args, b, err);
    const char* v[] = {"psw", "verify", "--n", "2", "--r", "2", "--seed", "3"};
    std::ostringstream c, d;
    run_cli(8, v, c, err);
    run_cli(8, v, d, err);
    bool ok = ca == 0 && cb == 0 && !a.str().empty() && a.str() == b.str() && c.str() == d.str();
    line(10, ok, "identical config and seed give byte-identical JSON (" + std::to_string(a.str().size()) +
                     " bytes sweep, " + std::to_string(c.str().size()) + " bytes verify)");
  }
  return failures == 0 ? 0 : 1;
}
