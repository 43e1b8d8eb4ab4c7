#include "psw/echelon.hpp"

#include <algorithm>
#include <numeric>
#include <stdexcept>

namespace psw {

Echelon::Echelon(std::size_t dim) : dim_(dim), pivot_row_(dim, -1) {}

IntegerVec Echelon::reduce(IntegerVec v) const {
  make_primitive(v);
  Integer g, a, b;
  while (!v.empty()) {
    if (v.lead() >= dim_) throw std::out_of_range("Echelon: index out of range");
    std::int32_t r = pivot_row_[v.lead()];
    if (r < 0) break;
    const IntegerVec& p = rows_[std::size_t(r)];
    mpz_gcd(g.get_mpz_t(), p.lead_value().get_mpz_t(), v.lead_value().get_mpz_t());
    a = p.lead_value() / g;
    b = -(v.lead_value() / g);
    v = axpby(a, v, b, p);
    make_primitive(v);
  }
  return v;
}

IntegerVec Echelon::insert(IntegerVec v) {
  v = reduce(std::move(v));
  if (v.empty()) return v;
  if (v.entries.back().index >= dim_)
    throw std::out_of_range("Echelon: index out of range");
  pivot_row_[v.lead()] = std::int32_t(rows_.size());
  rows_.push_back(v);
  return v;
}

std::vector<RationalVec> Echelon::rref_rows() const {
  std::vector<std::size_t> order(rows_.size());
  std::iota(order.begin(), order.end(), 0);
  std::sort(order.begin(), order.end(), [&](std::size_t x, std::size_t y) {
    return rows_[x].lead() > rows_[y].lead();
  });

  // Reduced rows, indexed like rows_.
  std::vector<IntegerVec> reduced(rows_.size());
  std::vector<Index> cols;
  Integer g, a, b;
  for (std::size_t idx : order) {
    IntegerVec row = rows_[idx];
    cols.clear();
    for (std::size_t k = 1; k < row.nnz(); ++k)
      if (pivot_row_[row.entries[k].index] >= 0)
        cols.push_back(row.entries[k].index);
    for (Index c : cols) {
      const Integer* rc = row.find(c);
      if (!rc) continue;
      const IntegerVec& q = reduced[std::size_t(pivot_row_[c])];
      mpz_gcd(g.get_mpz_t(), q.lead_value().get_mpz_t(), rc->get_mpz_t());
      a = q.lead_value() / g;
      b = -(*rc / g);
      row = axpby(a, row, b, q);
      make_primitive(row);
    }
    reduced[idx] = std::move(row);
  }

  std::vector<RationalVec> out;
  out.reserve(rows_.size());
  for (auto it = order.rbegin(); it != order.rend(); ++it) {
    const IntegerVec& row = reduced[*it];
    RationalVec q;
    q.entries.reserve(row.nnz());
    const Integer& lead = row.lead_value();
    for (const auto& e : row.entries) {
      Scalar s(e.value, lead);
      s.canonicalize();
      q.push(e.index, std::move(s));
    }
    out.push_back(std::move(q));
  }
  return out;
}

}  // namespace psw
