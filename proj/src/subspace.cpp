#include "psw/subspace.hpp"

#include <algorithm>
#include <numeric>
#include <stdexcept>

#include "psw/echelon.hpp"

namespace psw {

Subspace Subspace::full(std::size_t ambient_dim) {
  Subspace s(ambient_dim);
  s.basis_.reserve(ambient_dim);
  for (std::size_t i = 0; i < ambient_dim; ++i) {
    RationalVec e;
    e.push(Index(i), Scalar(1));
    s.basis_.push_back(std::move(e));
  }
  return s;
}

Subspace Subspace::span(std::size_t ambient_dim,
                        const std::vector<RationalVec>& vectors) {
  Echelon ech(ambient_dim);
  for (const auto& v : vectors)
    if (!v.empty()) ech.insert(to_primitive(v));
  return from_rref(ambient_dim, ech.rref_rows());
}

Subspace Subspace::from_rref(std::size_t ambient_dim,
                             std::vector<RationalVec> rows) {
  Subspace s(ambient_dim);
  s.basis_ = std::move(rows);
  return s;
}

bool Subspace::contains(const RationalVec& v) const {
  // For an RREF basis, v is in the span iff v = sum_c v[c] * row_c over
  // pivot columns c.
  RationalVec residual = v;
  for (const auto& row : basis_) {
    const Scalar* c = residual.find(row.lead());
    if (!c) continue;
    Scalar coef = *c;
    residual = axpby(Scalar(1), residual, Scalar(-coef), row);
  }
  return residual.empty();
}

bool Subspace::contains(const Subspace& other) const {
  if (other.ambient_ != ambient_)
    throw std::invalid_argument("Subspace: mismatched ambient dimension");
  for (const auto& v : other.basis_)
    if (!contains(v)) return false;
  return true;
}

std::vector<Scalar> Subspace::coordinates(const RationalVec& v) const {
  std::vector<Scalar> out(basis_.size());
  for (std::size_t k = 0; k < basis_.size(); ++k) {
    const Scalar* c = v.find(basis_[k].lead());
    if (c) out[k] = *c;
  }
  return out;
}

bool Subspace::is_canonical() const {
  for (std::size_t k = 0; k < basis_.size(); ++k) {
    const auto& row = basis_[k];
    if (row.empty() || row.lead_value() != 1) return false;
    if (row.entries.back().index >= ambient_) return false;
    if (k > 0 && basis_[k - 1].lead() >= row.lead()) return false;
    for (std::size_t j = 0; j < basis_.size(); ++j)
      if (j != k && basis_[j].find(row.lead())) return false;
  }
  return true;
}

SparseMatrix rref(const SparseMatrix& m) {
  Echelon ech(m.cols());
  for (const auto& row : m.row_data())
    if (!row.empty()) ech.insert(to_primitive(row));
  return SparseMatrix::from_rows(m.cols(), ech.rref_rows());
}

std::size_t rank(const SparseMatrix& m) {
  Echelon ech(m.cols());
  for (const auto& row : m.row_data())
    if (!row.empty()) ech.insert(to_primitive(row));
  return ech.rank();
}

Subspace nullspace(const SparseMatrix& m) {
  std::vector<IntegerVec> eqs;
  eqs.reserve(m.rows());
  for (const auto& row : m.row_data())
    if (!row.empty()) eqs.push_back(to_primitive(row));
  return solve_homogeneous(m.cols(), std::move(eqs));
}

namespace {

struct UnionFind {
  std::vector<Index> parent;
  explicit UnionFind(std::size_t n) : parent(n) {
    std::iota(parent.begin(), parent.end(), Index(0));
  }
  Index find(Index x) {
    while (parent[x] != x) {
      parent[x] = parent[parent[x]];
      x = parent[x];
    }
    return x;
  }
  void unite(Index a, Index b) {
    a = find(a);
    b = find(b);
    if (a != b) parent[std::max(a, b)] = std::min(a, b);
  }
};

// Nullspace of one connected block. vars are the block's global unknowns
// in increasing order. Elimination runs on reversed local columns so that
// each nullspace vector has its free column as leading entry.
void solve_block(const std::vector<Index>& vars,
                 const std::vector<const IntegerVec*>& eqs,
                 std::vector<Index>& local_of,
                 std::vector<RationalVec>& out) {
  const std::size_t k = vars.size();
  for (std::size_t p = 0; p < k; ++p) local_of[vars[p]] = Index(k - 1 - p);

  Echelon ech(k);
  for (const IntegerVec* e : eqs) {
    IntegerVec loc;
    loc.entries.reserve(e->nnz());
    for (auto it = e->entries.rbegin(); it != e->entries.rend(); ++it)
      loc.push(local_of[it->index], it->value);
    ech.insert(std::move(loc));
  }
  std::vector<RationalVec> rows = ech.rref_rows();

  std::vector<std::vector<std::pair<Index, Scalar>>> contrib(k);
  for (const auto& row : rows)
    for (std::size_t j = 1; j < row.nnz(); ++j)
      contrib[row.entries[j].index].emplace_back(row.lead(),
                                                 -row.entries[j].value);

  for (std::size_t f = 0; f < k; ++f) {
    if (ech.has_pivot(Index(f))) continue;
    std::vector<std::pair<Index, Scalar>> pairs;
    pairs.emplace_back(vars[k - 1 - f], Scalar(1));
    for (auto& [col, val] : contrib[f]) pairs.emplace_back(vars[k - 1 - col], val);
    std::sort(pairs.begin(), pairs.end(),
              [](const auto& a, const auto& b) { return a.first < b.first; });
    RationalVec v;
    v.entries.reserve(pairs.size());
    for (auto& [i, s] : pairs) v.push(i, std::move(s));
    out.push_back(std::move(v));
  }
}

}  // namespace

Subspace solve_homogeneous(std::size_t num_vars,
                           std::vector<IntegerVec> equations) {
  const std::size_t ne = equations.size();

  // Variables forced to zero by equations with a single live unknown.
  std::vector<std::uint32_t> live(ne);
  std::vector<std::size_t> start(num_vars + 1, 0);
  for (std::size_t e = 0; e < ne; ++e) {
    live[e] = std::uint32_t(equations[e].nnz());
    for (const auto& t : equations[e].entries) {
      if (t.index >= num_vars)
        throw std::out_of_range("solve_homogeneous: unknown out of range");
      ++start[t.index + 1];
    }
  }
  std::partial_sum(start.begin(), start.end(), start.begin());
  std::vector<std::uint32_t> var_eqs(start.back());
  {
    std::vector<std::size_t> fill(start.begin(), start.end() - 1);
    for (std::size_t e = 0; e < ne; ++e)
      for (const auto& t : equations[e].entries)
        var_eqs[fill[t.index]++] = std::uint32_t(e);
  }
  std::vector<char> zero(num_vars, 0);
  std::vector<std::size_t> queue;
  for (std::size_t e = 0; e < ne; ++e)
    if (live[e] == 1) queue.push_back(e);
  while (!queue.empty()) {
    std::size_t e = queue.back();
    queue.pop_back();
    if (live[e] != 1) continue;
    Index var = 0;
    for (const auto& t : equations[e].entries)
      if (!zero[t.index]) {
        var = t.index;
        break;
      }
    zero[var] = 1;
    for (std::size_t p = start[var]; p < start[var + 1]; ++p) {
      std::uint32_t e2 = var_eqs[p];
      if (--live[e2] == 1) queue.push_back(e2);
    }
  }

  // Drop forced zeros; connect unknowns sharing an equation.
  UnionFind uf(num_vars);
  std::vector<char> involved(num_vars, 0);
  std::vector<IntegerVec> reduced;
  for (std::size_t e = 0; e < ne; ++e) {
    if (live[e] < 2) continue;
    IntegerVec r;
    r.entries.reserve(live[e]);
    for (auto& t : equations[e].entries)
      if (!zero[t.index]) r.push(t.index, std::move(t.value));
    for (const auto& t : r.entries) {
      involved[t.index] = 1;
      uf.unite(r.lead(), t.index);
    }
    reduced.push_back(std::move(r));
  }
  equations.clear();

  std::vector<std::vector<Index>> block_vars(num_vars);
  std::vector<std::vector<const IntegerVec*>> block_eqs(num_vars);
  for (Index v = 0; v < num_vars; ++v)
    if (involved[v]) block_vars[uf.find(v)].push_back(v);
  for (const auto& r : reduced) block_eqs[uf.find(r.lead())].push_back(&r);

  std::vector<RationalVec> out;
  std::vector<Index> local_of(num_vars);
  for (Index v = 0; v < num_vars; ++v) {
    if (!zero[v] && !involved[v]) {
      RationalVec e;
      e.push(v, Scalar(1));
      out.push_back(std::move(e));
    } else if (involved[v] && uf.find(v) == v) {
      solve_block(block_vars[v], block_eqs[v], local_of, out);
    }
  }
  std::sort(out.begin(), out.end(), [](const RationalVec& a, const RationalVec& b) {
    return a.lead() < b.lead();
  });
  return Subspace::from_rref(num_vars, std::move(out));
}

namespace {

void require_same_ambient(const Subspace& a, const Subspace& b) {
  if (a.ambient_dim() != b.ambient_dim())
    throw std::invalid_argument("Subspace: mismatched ambient dimension");
}

}  // namespace

bool subspace_equal(const Subspace& a, const Subspace& b) {
  require_same_ambient(a, b);
  return a == b;
}

bool subspace_contains(const Subspace& outer, const Subspace& inner) {
  require_same_ambient(outer, inner);
  return outer.contains(inner);
}

Subspace subspace_intersect(const Subspace& a, const Subspace& b) {
  require_same_ambient(a, b);
  const std::size_t ka = a.dim(), kb = b.dim();
  if (ka == 0 || kb == 0) return Subspace(a.ambient_dim());

  // Solve sum_i alpha_i a_i - sum_j beta_j b_j = 0 coordinatewise.
  std::vector<std::vector<std::pair<Index, Scalar>>> by_coord(a.ambient_dim());
  for (std::size_t i = 0; i < ka; ++i)
    for (const auto& e : a.basis()[i].entries)
      by_coord[e.index].emplace_back(Index(i), e.value);
  for (std::size_t j = 0; j < kb; ++j)
    for (const auto& e : b.basis()[j].entries)
      by_coord[e.index].emplace_back(Index(ka + j), -e.value);

  std::vector<IntegerVec> eqs;
  for (auto& terms : by_coord)
    if (!terms.empty()) eqs.push_back(to_primitive(make_sparse(std::move(terms))));
  Subspace sol = solve_homogeneous(ka + kb, std::move(eqs));

  std::vector<RationalVec> vecs;
  for (const auto& s : sol.basis()) {
    RationalVec v;
    for (const auto& e : s.entries) {
      if (e.index >= ka) break;
      v = axpby(Scalar(1), v, e.value, a.basis()[e.index]);
    }
    vecs.push_back(std::move(v));
  }
  return Subspace::span(a.ambient_dim(), vecs);
}

Subspace subspace_sum(const Subspace& a, const Subspace& b) {
  require_same_ambient(a, b);
  std::vector<RationalVec> all = a.basis();
  all.insert(all.end(), b.basis().begin(), b.basis().end());
  return Subspace::span(a.ambient_dim(), all);
}

}  // namespace psw
