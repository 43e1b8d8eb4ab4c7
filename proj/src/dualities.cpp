#include "psw/dualities.hpp"

#include <algorithm>
#include <chrono>
#include <random>
#include <sstream>
#include <stdexcept>

#include "psw/ddha.hpp"
#include "psw/operator_algebra.hpp"

namespace psw {

std::string to_string(Status s) {
  switch (s) {
    case Status::pass: return "pass";
    case Status::fail: return "fail";
    case Status::report_only: return "report-only";
  }
  return "?";
}

std::size_t factorial(int k) {
  std::size_t f = 1;
  for (int i = 2; i <= k; ++i) f *= std::size_t(i);
  return f;
}

std::size_t binomial(int n, int k) {
  if (k < 0 || k > n) return 0;
  std::size_t b = 1;
  for (int i = 1; i <= k; ++i) b = b * std::size_t(n - k + i) / std::size_t(i);
  return b;
}

std::size_t expected_dnr_dim(int r) {
  std::size_t total = 0;
  for (int l = 0; l <= r; ++l) total += binomial(r, l) * binomial(r, l) * factorial(l);
  return total;
}

namespace {

std::vector<OperatorMatrix> lie_images(const SpaceDescriptor& space, GroupKind which) {
  std::vector<OperatorMatrix> out;
  for (const auto& x : lie_generators(space, which).matrices)
    out.push_back(lie_derivation(space, x));
  return out;
}

std::string vector_to_string(const RationalVec& v, std::size_t d) {
  std::ostringstream os;
  os << "{";
  std::size_t shown = 0;
  for (const auto& e : v.entries) {
    if (shown++ == 8) {
      os << ", ...";
      break;
    }
    if (shown > 1) os << ", ";
    if (d)
      os << "(" << e.index / d << "," << e.index % d << "):" << e.value.get_str();
    else
      os << e.index << ":" << e.value.get_str();
  }
  os << "}";
  return os.str();
}

// Describes one basis vector that separates two unequal subspaces.
std::string separating_vector(const Subspace& a, const Subspace& b, const std::string& an,
                              const std::string& bn, std::size_t d) {
  for (const auto& v : a.basis())
    if (!b.contains(v)) return "in " + an + " not " + bn + ": " + vector_to_string(v, d);
  for (const auto& v : b.basis())
    if (!a.contains(v)) return "in " + bn + " not " + an + ": " + vector_to_string(v, d);
  return "";
}

class Stopwatch {
 public:
  Stopwatch() : start_(std::chrono::steady_clock::now()) {}
  double ms() const {
    return std::chrono::duration<double, std::milli>(std::chrono::steady_clock::now() - start_)
        .count();
  }

 private:
  std::chrono::steady_clock::time_point start_;
};

CheckResult make_result(const std::string& name, const SpaceDescriptor& space) {
  CheckResult r;
  r.check = name;
  r.n = space.n;
  r.r = space.r;
  return r;
}

void fail_with(CheckResult& res, const std::string& why, std::string witness = {}) {
  res.status = Status::fail;
  if (!res.detail.empty()) res.detail += "; ";
  res.detail += "FAILED: " + why;
  if (!res.witness && !witness.empty()) res.witness = std::move(witness);
}

void note(CheckResult& res, const std::string& s) {
  if (!res.detail.empty()) res.detail += "; ";
  res.detail += s;
}

std::string dims(std::size_t a, std::size_t b) {
  return "(" + std::to_string(a) + "," + std::to_string(b) + ")";
}

}  // namespace

Subspace centralizer_of_group(const SpaceDescriptor& space, GroupKind which) {
  return commutant(lie_images(space, which), space.dim());
}

Subspace centralizer_of_group_elements(const SpaceDescriptor& space, GroupKind which) {
  std::vector<OperatorMatrix> ops;
  for (const auto& g : group_generators(space, which)) ops.push_back(phi_matrix(space, g));
  return commutant(ops, space.dim());
}

Subspace psi_span(const SpaceDescriptor& space) {
  std::vector<OperatorMatrix> ops;
  for (const auto& p : all_permutations(space.r)) ops.push_back(psi_matrix(space, p));
  return operator_span(ops, space.dim());
}

// ---------------------------------------------------------------------------
// A_w^J

AwJVector build_AwJ(const SpaceDescriptor& space, Sector J,
                    const std::optional<std::vector<Scalar>>& w) {
  if (J == 0) throw std::invalid_argument("build_AwJ: J must be nonempty");
  if (J & ~full_sector(space.r)) throw std::invalid_argument("build_AwJ: J outside {1..r}");
  if (space.n < space.r) throw std::invalid_argument("build_AwJ: requires n >= r");
  const int N = space.letters();
  AwJVector out{space, J, !w.has_value(), {}};

  if (w) {
    if (int(w->size()) != space.n) throw std::invalid_argument("build_AwJ: |w| != n");
    std::vector<std::vector<Scalar>> a, b;
    for (int k = 1; k <= space.r; ++k) {
      std::vector<Scalar> ak(static_cast<std::size_t>(N)), bk(static_cast<std::size_t>(N));
      if (J & (Sector(1) << (k - 1))) {
        for (int i = 0; i < space.n; ++i) ak[std::size_t(i)] = (*w)[std::size_t(i)];
        ak[std::size_t(space.n)] = 1;
        bk[std::size_t(space.n)] = 1;
      } else {
        ak[std::size_t(k - 1)] = 1;
        bk[std::size_t(k - 1)] = 1;
      }
      a.push_back(std::move(ak));
      b.push_back(std::move(bk));
    }
    RationalVec diff = axpby(Scalar(1), pure_tensor(space, a).coeffs, Scalar(-1),
                             pure_tensor(space, b).coeffs);
    out.components.emplace(AwJVector::Monomial(std::size_t(space.n), 0), std::move(diff));
    return out;
  }

  // Each basis tensor of the expansion carries exactly one monomial: the
  // product of t_c over J-slots holding letter c <= n.
  std::map<AwJVector::Monomial, std::vector<std::pair<Index, Scalar>>> parts;
  for (std::size_t idx = 0; idx < space.dim(); ++idx) {
    MultiIndex m = multi_index_at(space, idx);
    bool ok = true;
    AwJVector::Monomial mono(std::size_t(space.n), 0);
    int degree = 0;
    for (int k = 1; k <= space.r && ok; ++k) {
      if (J & (Sector(1) << (k - 1))) {
        if (m[k] <= space.n) {
          ++mono[std::size_t(m[k] - 1)];
          ++degree;
        }
      } else if (m[k] != k) {
        ok = false;
      }
    }
    if (!ok || degree == 0) continue;  // degree 0 cancels against b
    parts[mono].emplace_back(Index(idx), Scalar(1));
  }
  for (auto& [mono, terms] : parts) out.components.emplace(mono, make_sparse(std::move(terms)));
  return out;
}

Tensor AwJVector::evaluate(const std::vector<Scalar>& w) const {
  if (int(w.size()) != space.n) throw std::invalid_argument("AwJVector::evaluate: |w| != n");
  RationalVec acc;
  for (const auto& [mono, vec] : components) {
    Scalar c = 1;
    for (std::size_t i = 0; i < mono.size(); ++i)
      for (int e = 0; e < mono[i]; ++e) c *= w[i];
    if (formal || !is_zero(c)) acc = axpby(Scalar(1), acc, formal ? c : Scalar(1), vec);
  }
  return Tensor{space, acc};
}

// ---------------------------------------------------------------------------
// Mixed tensors

OperatorMatrix mixed_action(const SpaceDescriptor& space, const DenseMatrix& x) {
  const std::size_t d = space.dim();
  OperatorMatrix l = lie_derivation(space, x);
  OperatorMatrix id = SparseMatrix::identity(d);
  return kron(l, id) - kron(id, l.transpose());
}

std::vector<OperatorMatrix> mixed_action_generators(const SpaceDescriptor& space,
                                                    GroupKind which) {
  std::vector<OperatorMatrix> out;
  for (const auto& x : lie_generators(space, which).matrices)
    out.push_back(mixed_action(space, x));
  return out;
}

MixedTensor build_C_sigma(const SpaceDescriptor& space, const Permutation& sigma) {
  if (sigma.degree() != space.r) throw std::invalid_argument("build_C_sigma: degree != r");
  const std::size_t d = space.dim();
  std::vector<std::pair<Index, Scalar>> terms;
  terms.reserve(d);
  for (std::size_t j = 0; j < d; ++j) {
    std::size_t i = index_of(space, sigma.act(multi_index_at(space, j)));
    terms.emplace_back(Index(i * d + j), Scalar(1));
  }
  return MixedTensor{space, make_sparse(std::move(terms))};
}

OperatorMatrix T_map(const MixedTensor& m) {
  const std::size_t d = m.space.dim();
  return SparseMatrix::unflatten(m.coeffs, d, d);
}

MixedTensor T_inverse(const SpaceDescriptor& space, const OperatorMatrix& op) {
  if (op.rows() != space.dim() || op.cols() != space.dim())
    throw std::invalid_argument("T_inverse: operator size mismatch");
  return MixedTensor{space, op.flatten()};
}

Subspace mixed_invariants(const SpaceDescriptor& space, GroupKind which) {
  const std::size_t d2 = space.operator_dim();
  std::vector<IntegerVec> eqs;
  for (const auto& g : mixed_action_generators(space, which))
    for (const auto& row : g.row_data())
      if (!row.empty()) eqs.push_back(to_primitive(row));
  return solve_homogeneous(d2, std::move(eqs));
}

// ---------------------------------------------------------------------------
// Workbench

Workbench::Workbench(SpaceDescriptor space, std::uint64_t seed)
    : space_(space), seed_(seed) {}

const Subspace& Workbench::psi() {
  if (!psi_) psi_ = psw::psi_span(space_);
  return *psi_;
}

const Subspace& Workbench::dnr() {
  if (!dnr_) dnr_ = build_Dnr(space_);
  return *dnr_;
}

const Subspace& Workbench::dnr_l(int l) {
  auto it = dnr_l_.find(l);
  if (it == dnr_l_.end()) it = dnr_l_.emplace(l, build_Dnr_l(space_, l)).first;
  return it->second;
}

const Subspace& Workbench::centralizer(GroupKind which) {
  auto it = cent_.find(which);
  if (it == cent_.end()) it = cent_.emplace(which, centralizer_of_group(space_, which)).first;
  return it->second;
}

const Subspace& Workbench::centralizer_elements(GroupKind which) {
  auto it = cent_elem_.find(which);
  if (it == cent_elem_.end())
    it = cent_elem_.emplace(which, centralizer_of_group_elements(space_, which)).first;
  return it->second;
}

const Subspace& Workbench::dnr_V() {
  if (!dv_) dv_ = subspace_intersect(dnr(), centralizer(GroupKind::unipotent));
  return *dv_;
}

const Subspace& Workbench::invariants() {
  if (!inv_) inv_ = mixed_invariants(space_, GroupKind::parabolic);
  return *inv_;
}

CheckResult Workbench::verify_ddha_relations() {
  Stopwatch sw;
  CheckResult res = make_result("ddha-relations", space_);
  RelationReport rep = check_ddha_relations(space_);
  std::size_t failed = 0;
  for (const auto& f : rep.families) {
    failed += f.failures;
    note(res, f.family + ":" + std::to_string(f.instances - f.failures) + "/" +
                  std::to_string(f.instances));
    if (!f.passed() && !res.witness) res.witness = f.family + " " + f.witness;
  }
  res.lhs_dim = rep.total_instances();
  res.rhs_dim = rep.total_instances() - failed;
  res.status = rep.all_passed() ? Status::pass : Status::fail;
  if (!rep.all_passed()) note(res, "FAILED: relation instances violated");
  res.elapsed_ms = sw.ms();
  return res;
}

CheckResult Workbench::verify_classical_sw() {
  Stopwatch sw;
  CheckResult res = make_result("classical", space_);
  const std::size_t d = space_.dim();
  res.status = Status::pass;
  const Subspace& full = centralizer(GroupKind::full);
  const Subspace& ps = psi();
  res.lhs_dim = full.dim();
  res.rhs_dim = ps.dim();
  note(res, "End_GL(Vbar) vs span Psi " + dims(full.dim(), ps.dim()));
  if (!(full == ps))
    fail_with(res, "End_GL(Vbar) != span Psi(S_r)", separating_vector(full, ps, "End", "Psi", d));

  std::vector<OperatorMatrix> transpositions;
  for (int i = 1; i < space_.r; ++i)
    transpositions.push_back(psi_matrix(space_, Permutation::transposition(space_.r, i, i + 1)));
  Subspace end_sr = commutant(transpositions, d);
  std::vector<OperatorMatrix> lie;
  for (const auto& x : lie_generators(space_, GroupKind::full).matrices)
    lie.push_back(lie_derivation(space_, x));
  Subspace phi_alg = algebra_closure(lie, d);
  note(res, "End_S_r vs algebra Phi(GL) " + dims(end_sr.dim(), phi_alg.dim()));
  if (!(end_sr == phi_alg))
    fail_with(res, "End_S_r != algebra generated by Phi(GL)",
              separating_vector(end_sr, phi_alg, "End_S_r", "Phi-algebra", d));

  if (!(centralizer_elements(GroupKind::full) == full))
    fail_with(res, "Lie and group-element centralizers of GL(Vbar) differ");
  else
    note(res, "group-element centralizer agrees");
  res.elapsed_ms = sw.ms();
  return res;
}

CheckResult Workbench::verify_levi_sw() {
  Stopwatch sw;
  CheckResult res = make_result("levi", space_);
  const std::size_t d = space_.dim();
  res.status = Status::pass;
  const Subspace& cent = centralizer(GroupKind::levi);
  const Subspace& D = dnr();
  res.lhs_dim = cent.dim();
  res.rhs_dim = D.dim();
  note(res, "End_{GL_n x G_m} vs D(n,r) " + dims(cent.dim(), D.dim()));
  if (!(cent == D))
    fail_with(res, "End_{GL_n x G_m} != D(n,r)", separating_vector(cent, D, "End", "D(n,r)", d));
  if (space_.n >= space_.r) {
    std::size_t want = expected_dnr_dim(space_.r);
    if (D.dim() != want)
      fail_with(res, "dim D(n,r) = " + std::to_string(D.dim()) + ", expected " +
                         std::to_string(want));
    else
      note(res, "dim matches sum_l C(r,l)^2 l! = " + std::to_string(want));
  }

  Subspace comm_D = commutant(operator_basis(D, d), d);
  std::vector<OperatorMatrix> lie;
  for (const auto& x : lie_generators(space_, GroupKind::levi).matrices)
    lie.push_back(lie_derivation(space_, x));
  Subspace levi_alg = algebra_closure(lie, d);
  note(res, "End_D vs algebra Phi(Levi) " + dims(comm_D.dim(), levi_alg.dim()));
  if (!(comm_D == levi_alg))
    fail_with(res, "End_D(n,r) != algebra generated by the Levi image",
              separating_vector(comm_D, levi_alg, "End_D", "Levi-algebra", d));

  if (!(centralizer_elements(GroupKind::levi) == cent))
    fail_with(res, "Lie and group-element centralizers of the Levi subgroup differ");
  else
    note(res, "group-element centralizer agrees");
  res.elapsed_ms = sw.ms();
  return res;
}

CheckResult Workbench::verify_parabolic_sw() {
  Stopwatch sw;
  CheckResult res = make_result("parabolic", space_);
  res.status = Status::pass;
  const Subspace& dv = dnr_V();
  const Subspace& cent = centralizer(GroupKind::parabolic);
  res.lhs_dim = cent.dim();
  res.rhs_dim = dv.dim();
  note(res, "End_P vs D(n,r)^V " + dims(cent.dim(), dv.dim()));
  if (!(cent == dv))
    fail_with(res, "End_P != D(n,r)^V",
              separating_vector(cent, dv, "End_P", "D^V", space_.dim()));
  if (!(centralizer_elements(GroupKind::parabolic) == cent))
    fail_with(res, "Lie and group-element centralizers of P differ");
  else
    note(res, "group-element centralizer agrees");
  if (!(centralizer_elements(GroupKind::unipotent) == centralizer(GroupKind::unipotent)))
    fail_with(res, "Lie and group-element centralizers of the unipotent radical differ");
  res.elapsed_ms = sw.ms();
  return res;
}

CheckResult Workbench::verify_main_theorem() {
  Stopwatch sw;
  CheckResult res = make_result("main-theorem", space_);
  const std::size_t d = space_.dim();
  const Subspace& ps = psi();
  const Subspace& dv = dnr_V();
  const Subspace& cent = centralizer(GroupKind::parabolic);
  res.lhs_dim = dv.dim();
  res.rhs_dim = ps.dim();
  note(res, "D(n,r)^V vs span Psi " + dims(dv.dim(), ps.dim()));
  if (space_.n >= space_.r) {
    res.status = Status::pass;
    if (!(dv == ps))
      fail_with(res, "D(n,r)^V != span Psi(S_r)", separating_vector(dv, ps, "D^V", "Psi", d));
    if (!(cent == ps))
      fail_with(res, "End_P != span Psi(S_r)", separating_vector(cent, ps, "End_P", "Psi", d));
    if (ps.dim() != factorial(space_.r))
      fail_with(res, "dim span Psi = " + std::to_string(ps.dim()) + " != r!");
    if (res.status == Status::pass) note(res, "dim = r! = " + std::to_string(ps.dim()));
  } else {
    res.status = Status::report_only;
    note(res, "n < r: report only");
    if (!dv.contains(ps)) {
      fail_with(res, "span Psi(S_r) not contained in D(n,r)^V",
                separating_vector(ps, dv, "Psi", "D^V", d));
    } else {
      note(res, std::string("inclusion holds, ") + (dv.dim() > ps.dim() ? "strict" : "equal"));
    }
  }
  res.elapsed_ms = sw.ms();
  return res;
}

CheckResult Workbench::verify_structure_lemma() {
  Stopwatch sw;
  CheckResult res = make_result("structure-lemma", space_);
  const SpaceDescriptor& sp = space_;
  const std::size_t d = sp.dim(), d2 = sp.operator_dim();
  const bool asserted = sp.n >= sp.r;
  res.status = Status::pass;

  // D(n,r) = (+)_l D(n,r)_l holds for every n.
  Subspace sum_l(d2);
  std::size_t dim_sum_l = 0;
  for (int l = 0; l <= sp.r; ++l) {
    sum_l = subspace_sum(sum_l, dnr_l(l));
    dim_sum_l += dnr_l(l).dim();
  }
  res.lhs_dim = dnr().dim();
  res.rhs_dim = dim_sum_l;
  if (!(sum_l == dnr()) || dim_sum_l != sum_l.dim())
    fail_with(res, "D(n,r) != direct sum of D(n,r)_l",
              separating_vector(dnr(), sum_l, "D", "sum_l", d));
  else
    note(res, "D(n,r) = (+)_l D(n,r)_l, dim " + std::to_string(dim_sum_l));

  // Bracket decompositions: asserted for n >= r, reported otherwise.
  bool bracket_ok = true;
  std::string bracket_witness;
  Subspace sum_I(d2);
  std::size_t dim_sum_I = 0;
  for (int l = 0; l <= sp.r; ++l) {
    Subspace layer(d2);
    std::size_t layer_dims = 0;
    for (Sector I : subsets_of_size(sp.r, l)) {
      Subspace b = build_D_bracket_I(sp, I);
      layer = subspace_sum(layer, b);
      layer_dims += b.dim();
    }
    sum_I = subspace_sum(sum_I, layer);
    dim_sum_I += layer_dims;
    const Subspace& Dl = dnr_l(l);
    if (!(layer == Dl) || layer.dim() != layer_dims) {
      bracket_ok = false;
      if (bracket_witness.empty())
        bracket_witness = "l=" + std::to_string(l) + " " +
                          separating_vector(Dl, layer, "D_l", "(+)D_[I]", d);
    }
    if (asserted) {
      std::size_t want = binomial(sp.r, l) * binomial(sp.r, l) * factorial(l);
      if (Dl.dim() != want)
        fail_with(res, "dim D(n,r)_" + std::to_string(l) + " = " + std::to_string(Dl.dim()) +
                           ", expected " + std::to_string(want));
      if (!(explicit_Dnr_l(sp, l) == Dl))
        fail_with(res, "closure and E_JI x_sigma^I basis differ at l=" + std::to_string(l));
    }
  }
  if (!(sum_I == dnr()) || dim_sum_I != sum_I.dim()) {
    bracket_ok = false;
    if (bracket_witness.empty())
      bracket_witness = separating_vector(dnr(), sum_I, "D", "(+)_I D_[I]", d);
  }
  if (asserted) {
    if (!bracket_ok)
      fail_with(res, "bracket decomposition failed", bracket_witness);
    else
      note(res, "D(n,r)_l = (+)_{#I=l} D_[I] for all l; D(n,r) = (+)_I D_[I]");
  } else {
    res.status = Status::report_only;
    note(res, std::string("n < r: bracket decomposition ") + (bracket_ok ? "holds" : "fails"));
  }

  // Independence of the choice of eps_{J,I} and the factorisation
  // (Psi(tau))^[I] = E_{tau(I),I} x_sigma^I, on seeded random samples.
  std::mt19937_64 rng(seed_);
  const auto perms = all_permutations(sp.r);
  const Sector all = full_sector(sp.r);
  std::size_t samples = 0;
  for (int trial = 0; trial < 8; ++trial) {
    Sector I = Sector(rng() % (std::uint64_t(all) + 1));
    const Permutation& tau = perms[rng() % perms.size()];
    Sector J = image_of_sector(tau, I);
    // eps o pi with pi fixing I pointwise is another admissible choice.
    const Permutation& rnd = perms[rng() % perms.size()];
    std::vector<int> images(static_cast<std::size_t>(sp.r));
    std::vector<int> comp_from, comp_to;
    for (int k = 1; k <= sp.r; ++k) {
      if (I & (Sector(1) << (k - 1)))
        images[std::size_t(k - 1)] = k;
      else
        comp_from.push_back(k);
    }
    comp_to = comp_from;
    std::stable_sort(comp_to.begin(), comp_to.end(),
                     [&](int a, int b) { return rnd(a) < rnd(b); });
    for (std::size_t t = 0; t < comp_from.size(); ++t)
      images[std::size_t(comp_from[t] - 1)] = comp_to[t];
    Permutation alt = epsilon_JI(sp.r, I, J) * Permutation::from_images(images);
    if (!(sigma_bracket_I(sp, alt, I) == E_JI(sp, J, I)))
      fail_with(res, "E_{J,I} depends on the choice of eps",
                "I=" + sector_to_string(I) + " alt=" + alt.to_string());
    if (!(sigma_bracket_I(sp, tau, I) == E_JI(sp, J, I) * x_sigma_I(sp, I, bracket_factor(tau, I))))
      fail_with(res, "factorisation of Psi(tau)^[I] failed",
                "I=" + sector_to_string(I) + " tau=" + tau.to_string());
    ++samples;
  }
  note(res, std::to_string(samples) + " eps-independence/factorisation samples");
  res.elapsed_ms = sw.ms();
  return res;
}

CheckResult Workbench::verify_key_lemma(Sector J) {
  Stopwatch sw;
  const SpaceDescriptor& sp = space_;
  if (J == 0 || (J & ~full_sector(sp.r)))
    throw std::invalid_argument("verify_key_lemma: J must be a nonempty subset of {1..r}");
  if (sp.n < sp.r) throw std::invalid_argument("verify_key_lemma: requires n >= r");
  CheckResult res = make_result("key-lemma", sp);
  const std::size_t d = sp.dim();
  const std::vector<OperatorMatrix> basis = operator_basis(psi(), d);
  const std::size_t k = basis.size();

  // delta = sum_s c_s B_s; each vector u gives conditions delta(u) = 0.
  auto solve = [&](const std::vector<RationalVec>& vectors) {
    std::vector<IntegerVec> eqs;
    for (const auto& u : vectors) {
      std::vector<std::vector<std::pair<Index, Scalar>>> by_coord(d);
      for (std::size_t s = 0; s < k; ++s)
        for (const auto& e : basis[s].apply(u).entries)
          by_coord[e.index].emplace_back(Index(s), e.value);
      for (auto& terms : by_coord)
        if (!terms.empty()) {
          RationalVec row = make_sparse(std::move(terms));
          if (!row.empty()) eqs.push_back(to_primitive(row));
        }
    }
    return solve_homogeneous(k, std::move(eqs));
  };

  std::vector<RationalVec> formal_parts;
  for (const auto& [mono, vec] : build_AwJ(sp, J, std::nullopt).components)
    formal_parts.push_back(vec);
  Subspace formal = solve(formal_parts);

  std::vector<RationalVec> sampled_parts;
  for (int i = 0; i < sp.n; ++i)
    for (int j = i; j < sp.n; ++j) {
      std::vector<Scalar> w(static_cast<std::size_t>(sp.n));
      w[std::size_t(i)] += 1;
      if (j != i) w[std::size_t(j)] += 1;
      sampled_parts.push_back(build_AwJ(sp, J, w).components.begin()->second);
    }
  Subspace sampled = solve(sampled_parts);

  res.lhs_dim = formal.dim();
  res.rhs_dim = sampled.dim();
  res.status = Status::pass;
  note(res, "J=" + sector_to_string(J) + " solutions formal/sampled " +
                dims(formal.dim(), sampled.dim()));
  if (!(formal == sampled)) fail_with(res, "formal and sampled solution spaces differ");

  const OperatorMatrix proj = sector_projection_I(sp, full_sector(sp.r) & ~J);
  for (const auto& sol : formal.basis()) {
    OperatorMatrix delta = SparseMatrix::zero(d, d);
    for (const auto& e : sol.entries) delta = delta + e.value * basis[e.index];
    OperatorMatrix restricted = delta * proj;
    if (!restricted.is_zero()) {
      fail_with(res, "solution does not annihilate V_{r\\J}",
                "coefficients " + vector_to_string(sol, 0) + ", entry " +
                    restricted.first_nonzero());
      break;
    }
  }
  if (res.status == Status::pass) note(res, "all solutions annihilate V_{r\\J}");
  res.elapsed_ms = sw.ms();
  return res;
}

CheckResult Workbench::verify_key_lemma_all() {
  Stopwatch sw;
  CheckResult res = make_result("key-lemma", space_);
  if (space_.n < space_.r) {
    res.status = Status::report_only;
    note(res, "n < r: precondition n >= r not met, not run");
    res.elapsed_ms = sw.ms();
    return res;
  }
  res.status = Status::pass;
  std::size_t cases = 0;
  for (Sector J = 1; J <= full_sector(space_.r); ++J) {
    CheckResult one = verify_key_lemma(J);
    res.lhs_dim += one.lhs_dim;
    res.rhs_dim += one.rhs_dim;
    ++cases;
    if (one.status == Status::fail) fail_with(res, one.detail, one.witness.value_or(""));
  }
  note(res, std::to_string(cases) + " nonempty J checked");
  res.elapsed_ms = sw.ms();
  return res;
}

CheckResult Workbench::verify_invariants() {
  Stopwatch sw;
  CheckResult res = make_result("invariants", space_);
  const SpaceDescriptor& sp = space_;
  const std::size_t d = sp.dim(), d2 = sp.operator_dim();
  const bool asserted = sp.n >= sp.r;
  res.status = asserted ? Status::pass : Status::report_only;
  const Subspace& inv = invariants();

  std::vector<RationalVec> cs;
  for (const auto& p : all_permutations(sp.r)) cs.push_back(build_C_sigma(sp, p).coeffs);
  Subspace c_span = Subspace::span(d2, cs);
  res.lhs_dim = inv.dim();
  res.rhs_dim = c_span.dim();
  note(res, "invariants vs span C_sigma " + dims(inv.dim(), c_span.dim()));

  if (!inv.contains(c_span))
    fail_with(res, "some C_sigma is not invariant", separating_vector(c_span, inv, "C", "inv", d));

  if (asserted) {
    if (!(inv == c_span))
      fail_with(res, "invariant space != span C_sigma",
                separating_vector(inv, c_span, "inv", "C", d));
    if (inv.dim() != factorial(sp.r)) fail_with(res, "invariant dimension != r!");
  } else {
    note(res, std::string("n < r: span C_sigma ") +
                  (inv.dim() > c_span.dim() ? "strictly smaller" : "equal"));
  }

  // T carries invariants onto the parabolic centralizer.
  std::vector<RationalVec> images;
  for (const auto& v : inv.basis()) images.push_back(T_map(MixedTensor{sp, v}).flatten());
  Subspace t_image = Subspace::span(d2, images);
  if (!(t_image == centralizer(GroupKind::parabolic)) || t_image.dim() != inv.dim())
    fail_with(res, "T(invariants) != End_P",
              separating_vector(t_image, centralizer(GroupKind::parabolic), "T(inv)", "End_P", d));
  else
    note(res, "T maps invariants onto End_P");

  // Equivariance T(X.m) = [lie(X), T(m)] on seeded random mixed tensors.
  std::mt19937_64 rng(seed_ ^ 0x9e3779b97f4a7c15ULL);
  for (const auto& x : lie_generators(sp, GroupKind::parabolic).matrices) {
    std::vector<std::pair<Index, Scalar>> terms;
    for (int t = 0; t < 6; ++t)
      terms.emplace_back(Index(rng() % d2), Scalar(long(rng() % 7) - 3));
    MixedTensor m{sp, make_sparse(std::move(terms))};
    MixedTensor xm{sp, mixed_action(sp, x).apply(m.coeffs)};
    if (!(T_map(xm) == commutator(lie_derivation(sp, x), T_map(m)))) {
      fail_with(res, "T is not equivariant");
      break;
    }
  }
  res.elapsed_ms = sw.ms();
  return res;
}

bool Workbench::consistency_triangle() {
  const bool main_pass = verify_main_theorem().status == Status::pass;
  const bool para_pass = verify_parabolic_sw().status == Status::pass;
  const bool dv_is_psi = dnr_V() == psi();
  if (space_.n < space_.r) return true;  // main theorem is report-only there
  return main_pass == (para_pass && dv_is_psi);
}

CheckResult verify_classical_sw(const SpaceDescriptor& space) {
  return Workbench(space).verify_classical_sw();
}
CheckResult verify_levi_sw(const SpaceDescriptor& space) {
  return Workbench(space).verify_levi_sw();
}
CheckResult verify_parabolic_sw(const SpaceDescriptor& space) {
  return Workbench(space).verify_parabolic_sw();
}
CheckResult verify_main_theorem(const SpaceDescriptor& space) {
  return Workbench(space).verify_main_theorem();
}
CheckResult verify_key_lemma(const SpaceDescriptor& space, Sector J) {
  return Workbench(space).verify_key_lemma(J);
}
CheckResult verify_invariants(const SpaceDescriptor& space) {
  return Workbench(space).verify_invariants();
}

}  // namespace psw
