#include "psw/operator_algebra.hpp"

#include <deque>
#include <sstream>
#include <stdexcept>

#include "psw/echelon.hpp"

namespace psw {

std::vector<IntegerVec> commutation_equations(const OperatorMatrix& a) {
  if (!a.square())
    throw std::invalid_argument("commutation_equations: operator not square");
  const std::size_t d = a.rows();
  const SparseMatrix at = a.transpose();
  std::vector<IntegerVec> eqs;
  std::vector<std::pair<Index, Scalar>> terms;
  for (std::size_t p = 0; p < d; ++p) {
    for (std::size_t q = 0; q < d; ++q) {
      // (XA - AX)_{pq} = sum_k X_{pk} A_{kq} - sum_k A_{pk} X_{kq}
      terms.clear();
      for (const auto& e : at.row(q).entries)
        terms.emplace_back(Index(p * d + e.index), e.value);
      for (const auto& e : a.row(p).entries)
        terms.emplace_back(Index(e.index * d + q), -e.value);
      if (terms.empty()) continue;
      RationalVec row = make_sparse(terms);
      if (!row.empty()) eqs.push_back(to_primitive(row));
    }
  }
  return eqs;
}

namespace {

void check_square(const std::vector<OperatorMatrix>& ops, std::size_t d,
                  const char* who) {
  for (const auto& op : ops)
    if (op.rows() != d || op.cols() != d) {
      std::ostringstream os;
      os << who << ": expected " << d << "x" << d << " operator, got "
         << op.rows() << "x" << op.cols();
      throw std::invalid_argument(os.str());
    }
}

// Breadth-first span of products. Every new independent element is left
// multiplied by each generator; the residual modulo the current span is
// used as the representative, which spans the same new direction.
Subspace closure(const std::vector<OperatorMatrix>& gens,
                 const std::vector<OperatorMatrix>& start, std::size_t d) {
  const std::size_t ambient = d * d;
  Echelon ech(ambient);
  std::deque<OperatorMatrix> queue;
  auto push = [&](const OperatorMatrix& m) {
    IntegerVec r = ech.insert(to_primitive(m.flatten()));
    if (r.empty()) return;
    if (ech.rank() > ambient)
      throw std::logic_error("algebra_closure: basis exceeds ambient dimension");
    queue.push_back(SparseMatrix::unflatten(to_rational(r), d, d));
  };
  for (const auto& m : start) push(m);
  while (!queue.empty()) {
    OperatorMatrix m = std::move(queue.front());
    queue.pop_front();
    for (const auto& g : gens) push(g * m);
  }
  return Subspace::from_rref(ambient, ech.rref_rows());
}

}  // namespace

Subspace commutant(const std::vector<OperatorMatrix>& generators,
                   std::size_t d) {
  check_square(generators, d, "commutant");
  std::vector<IntegerVec> eqs;
  for (const auto& g : generators) {
    auto part = commutation_equations(g);
    for (auto& e : part) eqs.push_back(std::move(e));
  }
  return solve_homogeneous(d * d, std::move(eqs));
}

Subspace algebra_closure(const std::vector<OperatorMatrix>& seed,
                         std::size_t d) {
  check_square(seed, d, "algebra_closure");
  std::vector<OperatorMatrix> start{SparseMatrix::identity(d)};
  start.insert(start.end(), seed.begin(), seed.end());
  return closure(seed, start, d);
}

Subspace span_closure(const std::vector<OperatorMatrix>& seed, std::size_t d) {
  check_square(seed, d, "span_closure");
  return closure(seed, seed, d);
}

std::vector<OperatorMatrix> operator_basis(const Subspace& s, std::size_t d) {
  if (s.ambient_dim() != d * d)
    throw std::invalid_argument("operator_basis: ambient is not d*d");
  std::vector<OperatorMatrix> out;
  out.reserve(s.dim());
  for (const auto& v : s.basis()) out.push_back(SparseMatrix::unflatten(v, d, d));
  return out;
}

Subspace operator_span(const std::vector<OperatorMatrix>& ops, std::size_t d) {
  check_square(ops, d, "operator_span");
  std::vector<RationalVec> vecs;
  vecs.reserve(ops.size());
  for (const auto& op : ops) vecs.push_back(op.flatten());
  return Subspace::span(d * d, vecs);
}

}  // namespace psw
