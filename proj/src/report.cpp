#include "psw/report.hpp"

#include <algorithm>
#include <fstream>
#include <iomanip>
#include <ostream>
#include <sstream>

#include <CLI11.hpp>
#include <json.hpp>

#include "psw/ddha.hpp"

namespace psw {

using ojson = nlohmann::ordered_json;

Format format_from_string(const std::string& s) {
  if (s == "json") return Format::json;
  if (s == "csv") return Format::csv;
  if (s == "table") return Format::table;
  throw UsageError("unknown format '" + s + "' (json|csv|table)");
}

IntRange parse_range(const std::string& s) {
  auto to_int = [&](const std::string& t) {
    std::size_t used = 0;
    int v = 0;
    try {
      v = std::stoi(t, &used);
    } catch (const std::exception&) {
      used = 0;
    }
    if (t.empty() || used != t.size()) throw UsageError("bad range '" + s + "'");
    return v;
  };
  auto dots = s.find("..");
  IntRange r;
  if (dots == std::string::npos) {
    r.lo = r.hi = to_int(s);
  } else {
    r.lo = to_int(s.substr(0, dots));
    r.hi = to_int(s.substr(dots + 2));
  }
  if (r.lo < 1 || r.hi < r.lo) throw UsageError("bad range '" + s + "'");
  return r;
}

const std::vector<std::string>& check_names() {
  static const std::vector<std::string> names{
      "ddha-relations", "classical",       "levi",      "parabolic",
      "main-theorem",   "structure-lemma", "key-lemma", "invariants"};
  return names;
}

std::vector<std::string> expand_checks(const std::vector<std::string>& names) {
  const auto& known = check_names();
  std::vector<bool> on(known.size(), false);
  for (const auto& raw : names) {
    std::stringstream ss(raw);
    std::string name;
    while (std::getline(ss, name, ',')) {
      if (name.empty()) continue;
      if (name == "all") {
        std::fill(on.begin(), on.end(), true);
        continue;
      }
      auto it = std::find(known.begin(), known.end(), name);
      if (it == known.end()) throw UsageError("unknown check '" + name + "'");
      on[std::size_t(it - known.begin())] = true;
    }
  }
  std::vector<std::string> out;
  for (std::size_t i = 0; i < known.size(); ++i)
    if (on[i]) out.push_back(known[i]);
  if (out.empty()) throw UsageError("no checks selected");
  return out;
}

std::size_t ambient_dim(int n, int r) {
  std::size_t d = 1;
  const std::size_t cap = std::size_t(1) << 40;
  for (int i = 0; i < r; ++i) {
    d *= std::size_t(n + 1);
    if (d > cap) return cap;
  }
  return d;
}

bool within_guard(int n, int r, std::size_t max_ambient) {
  return ambient_dim(n, r) <= max_ambient;
}

CheckResult run_check(Workbench& wb, const std::string& name) {
  if (name == "ddha-relations") return wb.verify_ddha_relations();
  if (name == "classical") return wb.verify_classical_sw();
  if (name == "levi") return wb.verify_levi_sw();
  if (name == "parabolic") return wb.verify_parabolic_sw();
  if (name == "main-theorem") return wb.verify_main_theorem();
  if (name == "structure-lemma") return wb.verify_structure_lemma();
  if (name == "key-lemma") return wb.verify_key_lemma_all();
  if (name == "invariants") return wb.verify_invariants();
  throw UsageError("unknown check '" + name + "'");
}

std::vector<CheckResult> run_checks(int n, int r, const std::vector<std::string>& names,
                                    std::uint64_t seed) {
  Workbench wb(SpaceDescriptor(n, r), seed);
  std::vector<CheckResult> out;
  for (const auto& name : expand_checks(names)) out.push_back(run_check(wb, name));
  return out;
}

int exit_status(const std::vector<CheckResult>& results) {
  for (const auto& r : results)
    if (r.status == Status::fail) return 1;
  return 0;
}

DimsRow compute_dims(int n, int r) {
  Workbench wb(SpaceDescriptor(n, r));
  DimsRow row;
  row.n = n;
  row.r = r;
  row.psi = wb.psi().dim();
  row.dnr = wb.dnr().dim();
  for (int l = 0; l <= r; ++l) row.dnr_l.push_back(wb.dnr_l(l).dim());
  row.dnr_V = wb.dnr_V().dim();
  row.end_full = wb.centralizer(GroupKind::full).dim();
  row.end_levi = wb.centralizer(GroupKind::levi).dim();
  row.end_parabolic = wb.centralizer(GroupKind::parabolic).dim();
  row.end_unipotent = wb.centralizer(GroupKind::unipotent).dim();
  row.invariants = wb.invariants().dim();
  return row;
}

std::vector<SweepCell> run_sweep(IntRange ns, IntRange rs, const std::vector<std::string>& names,
                                 std::size_t max_ambient, std::uint64_t seed) {
  const auto checks = expand_checks(names);
  std::vector<SweepCell> cells;
  for (int n = ns.lo; n <= ns.hi; ++n)
    for (int r = rs.lo; r <= rs.hi; ++r) {
      SweepCell cell;
      cell.n = n;
      cell.r = r;
      if (!within_guard(n, r, max_ambient)) {
        cell.skipped = true;
        cells.push_back(std::move(cell));
        continue;
      }
      Workbench wb(SpaceDescriptor(n, r), seed);
      for (const auto& name : checks) cell.results.push_back(run_check(wb, name));
      if (n < r) {
        cell.psi_dim = wb.psi().dim();
        cell.dnr_V_dim = wb.dnr_V().dim();
        cell.strictness = cell.dnr_V_dim > cell.psi_dim ? "⊊" : "=";
      }
      cells.push_back(std::move(cell));
    }
  return cells;
}

int exit_status(const std::vector<SweepCell>& cells) {
  for (const auto& c : cells)
    if (exit_status(c.results) != 0) return 1;
  return 0;
}

namespace {

ojson to_json(const CheckResult& r, bool timing) {
  ojson j;
  j["check"] = r.check;
  j["n"] = r.n;
  j["r"] = r.r;
  j["status"] = to_string(r.status);
  j["lhs_dim"] = r.lhs_dim;
  j["rhs_dim"] = r.rhs_dim;
  j["detail"] = r.detail;
  if (timing)
    j["elapsed_ms"] = std::round(r.elapsed_ms * 1000.0) / 1000.0;
  else
    j["elapsed_ms"] = nullptr;
  if (r.witness) j["witness"] = *r.witness;
  return j;
}

std::string csv_field(const std::string& s) {
  if (s.find_first_of(",\"\n") == std::string::npos) return s;
  std::string q = "\"";
  for (char c : s) {
    if (c == '"') q += '"';
    q += c;
  }
  return q + "\"";
}

std::string elapsed_text(const CheckResult& r, bool timing) {
  if (!timing) return "";
  std::ostringstream os;
  os << std::fixed << std::setprecision(3) << r.elapsed_ms;
  return os.str();
}

const char* kResultHeader = "check,n,r,status,lhs_dim,rhs_dim,detail,elapsed_ms,witness";

std::string csv_row(const CheckResult& r, bool timing) {
  std::ostringstream os;
  os << csv_field(r.check) << ',' << r.n << ',' << r.r << ',' << to_string(r.status) << ','
     << r.lhs_dim << ',' << r.rhs_dim << ',' << csv_field(r.detail) << ','
     << elapsed_text(r, timing) << ',' << csv_field(r.witness.value_or(""));
  return os.str();
}

// Left-aligned text table.
std::string render_table(const std::vector<std::string>& header,
                         const std::vector<std::vector<std::string>>& rows) {
  auto width = [](const std::string& s) {
    std::size_t w = 0;
    for (unsigned char c : s)
      if ((c & 0xC0) != 0x80) ++w;
    return w;
  };
  std::vector<std::size_t> w(header.size());
  for (std::size_t i = 0; i < header.size(); ++i) w[i] = width(header[i]);
  for (const auto& row : rows)
    for (std::size_t i = 0; i < row.size(); ++i) w[i] = std::max(w[i], width(row[i]));
  std::ostringstream os;
  auto line = [&](const std::vector<std::string>& cells) {
    for (std::size_t i = 0; i < cells.size(); ++i) {
      os << cells[i];
      if (i + 1 < cells.size()) os << std::string(w[i] - width(cells[i]) + 2, ' ');
    }
    os << '\n';
  };
  line(header);
  std::vector<std::string> rule;
  for (auto x : w) rule.push_back(std::string(x, '-'));
  line(rule);
  for (const auto& row : rows) line(row);
  return os.str();
}

std::vector<std::string> table_row(const CheckResult& r, bool timing) {
  return {r.check,
          std::to_string(r.n),
          std::to_string(r.r),
          to_string(r.status),
          std::to_string(r.lhs_dim),
          std::to_string(r.rhs_dim),
          timing ? elapsed_text(r, true) : "-",
          r.detail + (r.witness ? " [witness: " + *r.witness + "]" : "")};
}

const std::vector<std::string> kTableHeader{"check", "n", "r", "status", "lhs", "rhs", "ms",
                                            "detail"};

std::string join_dims(const std::vector<std::size_t>& v, const char* sep) {
  std::string s;
  for (std::size_t i = 0; i < v.size(); ++i) {
    if (i) s += sep;
    s += std::to_string(v[i]);
  }
  return s;
}

std::string cell_summary(const SweepCell& c) {
  if (c.skipped) return "skipped";
  std::size_t pass = 0, fail = 0, rep = 0;
  for (const auto& r : c.results) {
    if (r.status == Status::pass) ++pass;
    if (r.status == Status::fail) ++fail;
    if (r.status == Status::report_only) ++rep;
  }
  std::string s = fail ? "FAIL(" + std::to_string(fail) + ")" : "pass";
  if (rep) s += "+" + std::to_string(rep) + "r";
  if (c.strictness) s += " " + *c.strictness;
  return s;
}

}  // namespace

std::string render_results(const std::vector<CheckResult>& results, Format f, bool timing) {
  if (f == Format::json) {
    ojson arr = ojson::array();
    for (const auto& r : results) arr.push_back(to_json(r, timing));
    return arr.dump(2) + "\n";
  }
  if (f == Format::csv) {
    std::string s = std::string(kResultHeader) + "\n";
    for (const auto& r : results) s += csv_row(r, timing) + "\n";
    return s;
  }
  std::vector<std::vector<std::string>> rows;
  for (const auto& r : results) rows.push_back(table_row(r, timing));
  return render_table(kTableHeader, rows);
}

std::string render_dims(const std::vector<DimsRow>& rows, Format f) {
  if (f == Format::json) {
    ojson arr = ojson::array();
    for (const auto& d : rows) {
      ojson j;
      j["n"] = d.n;
      j["r"] = d.r;
      j["psi_span"] = d.psi;
      j["dnr"] = d.dnr;
      j["dnr_l"] = d.dnr_l;
      j["dnr_V"] = d.dnr_V;
      j["end_full"] = d.end_full;
      j["end_levi"] = d.end_levi;
      j["end_parabolic"] = d.end_parabolic;
      j["end_unipotent"] = d.end_unipotent;
      j["invariants"] = d.invariants;
      arr.push_back(j);
    }
    return arr.dump(2) + "\n";
  }
  const std::vector<std::string> header{"n",        "r",        "psi_span",      "dnr",
                                        "dnr_l",    "dnr_V",    "end_full",      "end_levi",
                                        "end_parabolic", "end_unipotent", "invariants"};
  std::vector<std::vector<std::string>> body;
  for (const auto& d : rows)
    body.push_back({std::to_string(d.n), std::to_string(d.r), std::to_string(d.psi),
                    std::to_string(d.dnr), join_dims(d.dnr_l, f == Format::csv ? ";" : " "),
                    std::to_string(d.dnr_V), std::to_string(d.end_full),
                    std::to_string(d.end_levi), std::to_string(d.end_parabolic),
                    std::to_string(d.end_unipotent), std::to_string(d.invariants)});
  if (f == Format::table) return render_table(header, body);
  std::string s;
  for (std::size_t i = 0; i < header.size(); ++i) s += (i ? "," : "") + header[i];
  s += "\n";
  for (const auto& row : body) {
    for (std::size_t i = 0; i < row.size(); ++i) s += (i ? "," : "") + row[i];
    s += "\n";
  }
  return s;
}

std::string render_sweep(const std::vector<SweepCell>& cells, Format f, bool timing) {
  if (f == Format::json) {
    ojson arr = ojson::array();
    for (const auto& c : cells) {
      ojson j;
      j["n"] = c.n;
      j["r"] = c.r;
      j["status"] = c.skipped ? "skipped" : (exit_status(c.results) ? "fail" : "pass");
      if (c.strictness) {
        j["psi_dim"] = c.psi_dim;
        j["dnr_V_dim"] = c.dnr_V_dim;
        j["strictness"] = *c.strictness;
      } else {
        j["strictness"] = nullptr;
      }
      ojson res = ojson::array();
      for (const auto& r : c.results) res.push_back(to_json(r, timing));
      j["results"] = res;
      arr.push_back(j);
    }
    return arr.dump(2) + "\n";
  }
  if (f == Format::csv) {
    std::string s = std::string(kResultHeader) + ",strictness\n";
    for (const auto& c : cells) {
      const std::string strict = c.strictness.value_or("");
      if (c.skipped) {
        s += "," + std::to_string(c.n) + "," + std::to_string(c.r) + ",skipped,,,,,," + strict +
             "\n";
        continue;
      }
      for (const auto& r : c.results) s += csv_row(r, timing) + "," + strict + "\n";
    }
    return s;
  }
  // Summary matrix, rows n and columns r, then the n < r strictness report.
  std::vector<int> ns, rs;
  for (const auto& c : cells) {
    if (std::find(ns.begin(), ns.end(), c.n) == ns.end()) ns.push_back(c.n);
    if (std::find(rs.begin(), rs.end(), c.r) == rs.end()) rs.push_back(c.r);
  }
  std::vector<std::string> header{"n\\r"};
  for (int r : rs) header.push_back("r=" + std::to_string(r));
  std::vector<std::vector<std::string>> body;
  for (int n : ns) {
    std::vector<std::string> row{"n=" + std::to_string(n)};
    for (int r : rs) {
      std::string text = "-";
      for (const auto& c : cells)
        if (c.n == n && c.r == r) text = cell_summary(c);
      row.push_back(text);
    }
    body.push_back(row);
  }
  std::string s = render_table(header, body);
  std::vector<std::vector<std::string>> strict_rows;
  for (const auto& c : cells)
    if (c.strictness)
      strict_rows.push_back({std::to_string(c.n), std::to_string(c.r), std::to_string(c.psi_dim),
                             std::to_string(c.dnr_V_dim), *c.strictness});
  if (!strict_rows.empty())
    s += "\n" + render_table({"n", "r", "psi_span", "dnr_V", "strictness"}, strict_rows);
  std::vector<std::vector<std::string>> failures;
  for (const auto& c : cells)
    for (const auto& r : c.results)
      if (r.status == Status::fail) failures.push_back(table_row(r, timing));
  if (!failures.empty()) s += "\n" + render_table(kTableHeader, failures);
  return s;
}

int run_cli(int argc, const char* const* argv, std::ostream& out, std::ostream& err) {
  CLI::App app{"psw: exact checks of Schur-Weyl type dualities on tensor space"};
  app.require_subcommand(1);

  int n = 0, r = 0;
  std::string n_range, r_range, format = "json", out_path;
  std::vector<std::string> checks;
  std::size_t max_ambient = 256;
  std::uint64_t seed = 0;
  bool timing = false;

  auto common = [&](CLI::App* sub) {
    sub->add_option("--format", format, "json|csv|table");
    sub->add_option("--out", out_path, "write the report to PATH");
    sub->add_option("--max-ambient", max_ambient, "largest allowed (n+1)^r")
        ->check(CLI::PositiveNumber);
  };
  auto* dims = app.add_subcommand("dims", "tabulate subspace dimensions");
  dims->add_option("--n", n);
  dims->add_option("--r", r);
  dims->add_option("--n-range", n_range);
  dims->add_option("--r-range", r_range);
  common(dims);

  auto* verify = app.add_subcommand("verify", "run checks for one (n, r)");
  verify->add_option("--n", n)->required();
  verify->add_option("--r", r)->required();
  verify->add_option("--checks", checks)->delimiter(',');
  verify->add_option("--seed", seed);
  verify->add_flag("--timing", timing, "fill elapsed_ms");
  common(verify);

  auto* sweep = app.add_subcommand("sweep", "run checks over an (n, r) grid");
  sweep->add_option("--n", n);
  sweep->add_option("--r", r);
  sweep->add_option("--n-range", n_range);
  sweep->add_option("--r-range", r_range);
  sweep->add_option("--checks", checks)->delimiter(',');
  sweep->add_option("--seed", seed);
  sweep->add_flag("--timing", timing, "fill elapsed_ms");
  common(sweep);

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp&) {
    out << app.help();
    return 0;
  } catch (const CLI::CallForAllHelp&) {
    out << app.help("", CLI::AppFormatMode::All);
    return 0;
  } catch (const CLI::ParseError& e) {
    err << "error: " << e.what() << "\n";
    return 2;
  }

  try {
    const Format fmt = format_from_string(format);
    if (checks.empty()) checks = {"all"};
    auto grid = [&](const CLI::App* sub) {
      IntRange ns{n, n}, rs{r, r};
      if (!n_range.empty()) ns = parse_range(n_range);
      else if (sub->count("--n") == 0) throw UsageError("--n or --n-range is required");
      if (!r_range.empty()) rs = parse_range(r_range);
      else if (sub->count("--r") == 0) throw UsageError("--r or --r-range is required");
      if (ns.lo < 1 || rs.lo < 1) throw UsageError("n and r must be positive");
      return std::pair{ns, rs};
    };
    auto refuse = [&](int nn, int rr) {
      err << "error: (n+1)^r = " << ambient_dim(nn, rr) << " exceeds --max-ambient "
          << max_ambient << " at n=" << nn << ", r=" << rr << "\n";
      return 2;
    };

    std::string text;
    int code = 0;
    if (*verify) {
      if (n < 1 || r < 1) throw UsageError("n and r must be positive");
      const auto names = expand_checks(checks);
      if (!within_guard(n, r, max_ambient)) return refuse(n, r);
      auto results = run_checks(n, r, names, seed);
      text = render_results(results, fmt, timing);
      code = exit_status(results);
    } else if (*dims) {
      auto [ns, rs] = grid(dims);
      for (int a = ns.lo; a <= ns.hi; ++a)
        for (int b = rs.lo; b <= rs.hi; ++b)
          if (!within_guard(a, b, max_ambient)) return refuse(a, b);
      std::vector<DimsRow> rows;
      for (int a = ns.lo; a <= ns.hi; ++a)
        for (int b = rs.lo; b <= rs.hi; ++b) rows.push_back(compute_dims(a, b));
      text = render_dims(rows, fmt);
    } else {
      auto [ns, rs] = grid(sweep);
      auto cells = run_sweep(ns, rs, checks, max_ambient, seed);
      text = render_sweep(cells, fmt, timing);
      code = exit_status(cells);
    }

    if (!out_path.empty()) {
      std::ofstream f(out_path, std::ios::binary);
      if (!f) throw UsageError("cannot open '" + out_path + "' for writing");
      f << text;
    } else {
      out << text;
    }
    return code;
  } catch (const UsageError& e) {
    err << "error: " << e.what() << "\n";
    return 2;
  } catch (const std::invalid_argument& e) {
    err << "error: " << e.what() << "\n";
    return 2;
  }
}

}  // namespace psw
