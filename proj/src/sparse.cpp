#include "psw/sparse.hpp"

#include <algorithm>
#include <sstream>
#include <stdexcept>

namespace psw {

RationalVec make_sparse(std::vector<std::pair<Index, Scalar>> pairs) {
  std::sort(pairs.begin(), pairs.end(),
            [](const auto& a, const auto& b) { return a.first < b.first; });
  RationalVec out;
  out.entries.reserve(pairs.size());
  for (std::size_t k = 0; k < pairs.size();) {
    Index i = pairs[k].first;
    Scalar sum = 0;
    for (; k < pairs.size() && pairs[k].first == i; ++k) sum += pairs[k].second;
    if (!is_zero(sum)) out.push(i, std::move(sum));
  }
  return out;
}

namespace {

template <typename T>
SparseVec<T> merge_combine(const T& a, const SparseVec<T>& x, const T& b,
                           const SparseVec<T>& y) {
  SparseVec<T> out;
  out.entries.reserve(x.nnz() + y.nnz());
  std::size_t i = 0, j = 0;
  T tmp;
  while (i < x.nnz() || j < y.nnz()) {
    if (j == y.nnz() ||
        (i < x.nnz() && x.entries[i].index < y.entries[j].index)) {
      tmp = a * x.entries[i].value;
      if (!is_zero(tmp)) out.push(x.entries[i].index, tmp);
      ++i;
    } else if (i == x.nnz() || y.entries[j].index < x.entries[i].index) {
      tmp = b * y.entries[j].value;
      if (!is_zero(tmp)) out.push(y.entries[j].index, tmp);
      ++j;
    } else {
      tmp = a * x.entries[i].value + b * y.entries[j].value;
      if (!is_zero(tmp)) out.push(x.entries[i].index, tmp);
      ++i;
      ++j;
    }
  }
  return out;
}

}  // namespace

RationalVec axpby(const Scalar& a, const RationalVec& x, const Scalar& b,
                  const RationalVec& y) {
  return merge_combine(a, x, b, y);
}

IntegerVec axpby(const Integer& a, const IntegerVec& x, const Integer& b,
                 const IntegerVec& y) {
  return merge_combine(a, x, b, y);
}

void make_primitive(IntegerVec& v) {
  if (v.empty()) return;
  Integer g = 0;
  for (const auto& e : v.entries) {
    mpz_gcd(g.get_mpz_t(), g.get_mpz_t(), e.value.get_mpz_t());
    if (g == 1) break;
  }
  if (sgn(v.lead_value()) < 0) g = -g;
  if (g != 1)
    for (auto& e : v.entries)
      mpz_divexact(e.value.get_mpz_t(), e.value.get_mpz_t(), g.get_mpz_t());
}

IntegerVec to_primitive(const RationalVec& v) {
  IntegerVec out;
  if (v.empty()) return out;
  Integer l = 1;
  for (const auto& e : v.entries)
    mpz_lcm(l.get_mpz_t(), l.get_mpz_t(), e.value.get_den_mpz_t());
  out.entries.reserve(v.nnz());
  for (const auto& e : v.entries) {
    Integer q = l / e.value.get_den();
    out.push(e.index, q * e.value.get_num());
  }
  make_primitive(out);
  return out;
}

RationalVec to_rational(const IntegerVec& v) {
  RationalVec out;
  out.entries.reserve(v.nnz());
  for (const auto& e : v.entries) out.push(e.index, Scalar(e.value));
  return out;
}

SparseMatrix::SparseMatrix(std::size_t rows, std::size_t cols)
    : cols_(cols), row_data_(rows) {}

SparseMatrix SparseMatrix::identity(std::size_t d) {
  SparseMatrix m(d, d);
  for (std::size_t i = 0; i < d; ++i) m.row_data_[i].push(Index(i), Scalar(1));
  return m;
}

SparseMatrix SparseMatrix::from_dense(
    std::initializer_list<std::initializer_list<long>> rows) {
  std::size_t cols = rows.size() ? rows.begin()->size() : 0;
  SparseMatrix m(rows.size(), cols);
  std::size_t i = 0;
  for (const auto& r : rows) {
    if (r.size() != cols) throw std::invalid_argument("ragged dense literal");
    Index j = 0;
    for (long v : r) {
      if (v != 0) m.row_data_[i].push(j, Scalar(v));
      ++j;
    }
    ++i;
  }
  return m;
}

SparseMatrix SparseMatrix::from_rows(std::size_t cols,
                                     std::vector<RationalVec> rows) {
  SparseMatrix m(rows.size(), cols);
  for (std::size_t i = 0; i < rows.size(); ++i) m.set_row(i, std::move(rows[i]));
  return m;
}

std::size_t SparseMatrix::nnz() const {
  std::size_t n = 0;
  for (const auto& r : row_data_) n += r.nnz();
  return n;
}

Scalar SparseMatrix::at(std::size_t i, std::size_t j) const {
  const Scalar* p = row_data_.at(i).find(Index(j));
  return p ? *p : Scalar(0);
}

void SparseMatrix::set_row(std::size_t i, RationalVec v) {
  if (!v.empty() && v.entries.back().index >= cols_)
    throw std::out_of_range("SparseMatrix::set_row: column out of range");
  row_data_.at(i) = std::move(v);
}

SparseMatrix SparseMatrix::transpose() const {
  SparseMatrix t(cols_, rows());
  for (std::size_t i = 0; i < rows(); ++i)
    for (const auto& e : row_data_[i].entries)
      t.row_data_[e.index].push(Index(i), e.value);
  return t;
}

RationalVec SparseMatrix::flatten() const {
  RationalVec v;
  v.entries.reserve(nnz());
  for (std::size_t i = 0; i < rows(); ++i)
    for (const auto& e : row_data_[i].entries)
      v.push(Index(i * cols_ + e.index), e.value);
  return v;
}

SparseMatrix SparseMatrix::unflatten(const RationalVec& v, std::size_t rows,
                                     std::size_t cols) {
  SparseMatrix m(rows, cols);
  for (const auto& e : v.entries) {
    std::size_t i = e.index / cols;
    if (i >= rows) throw std::out_of_range("unflatten: index out of range");
    m.row_data_[i].push(Index(e.index % cols), e.value);
  }
  return m;
}

bool operator==(const SparseMatrix& a, const SparseMatrix& b) {
  return a.cols_ == b.cols_ && a.row_data_ == b.row_data_;
}

SparseMatrix operator*(const SparseMatrix& a, const SparseMatrix& b) {
  if (a.cols() != b.rows())
    throw std::invalid_argument("SparseMatrix product: dimension mismatch");
  SparseMatrix c(a.rows(), b.cols());
  std::vector<Scalar> acc(b.cols());
  std::vector<char> used(b.cols(), 0);
  std::vector<Index> touched;
  for (std::size_t i = 0; i < a.rows(); ++i) {
    touched.clear();
    for (const auto& ea : a.row_data_[i].entries) {
      for (const auto& eb : b.row_data_[ea.index].entries) {
        if (!used[eb.index]) {
          used[eb.index] = 1;
          touched.push_back(eb.index);
          acc[eb.index] = ea.value * eb.value;
        } else {
          acc[eb.index] += ea.value * eb.value;
        }
      }
    }
    std::sort(touched.begin(), touched.end());
    RationalVec& out = c.row_data_[i];
    for (Index j : touched) {
      if (!is_zero(acc[j])) out.push(j, acc[j]);
      used[j] = 0;
    }
  }
  return c;
}

SparseMatrix operator+(const SparseMatrix& a, const SparseMatrix& b) {
  if (a.rows() != b.rows() || a.cols() != b.cols())
    throw std::invalid_argument("SparseMatrix sum: dimension mismatch");
  SparseMatrix c(a.rows(), a.cols());
  for (std::size_t i = 0; i < a.rows(); ++i)
    c.row_data_[i] = axpby(Scalar(1), a.row_data_[i], Scalar(1), b.row_data_[i]);
  return c;
}

SparseMatrix operator-(const SparseMatrix& a, const SparseMatrix& b) {
  if (a.rows() != b.rows() || a.cols() != b.cols())
    throw std::invalid_argument("SparseMatrix difference: dimension mismatch");
  SparseMatrix c(a.rows(), a.cols());
  for (std::size_t i = 0; i < a.rows(); ++i)
    c.row_data_[i] = axpby(Scalar(1), a.row_data_[i], Scalar(-1), b.row_data_[i]);
  return c;
}

SparseMatrix operator*(const Scalar& s, const SparseMatrix& a) {
  SparseMatrix c(a.rows(), a.cols());
  if (is_zero(s)) return c;
  for (std::size_t i = 0; i < a.rows(); ++i)
    for (const auto& e : a.row_data_[i].entries)
      c.row_data_[i].push(e.index, s * e.value);
  return c;
}

RationalVec SparseMatrix::apply(const RationalVec& x) const {
  RationalVec y;
  for (std::size_t i = 0; i < rows(); ++i) {
    Scalar sum = 0;
    const auto& r = row_data_[i].entries;
    std::size_t p = 0, q = 0;
    while (p < r.size() && q < x.nnz()) {
      if (r[p].index < x.entries[q].index)
        ++p;
      else if (x.entries[q].index < r[p].index)
        ++q;
      else
        sum += r[p++].value * x.entries[q++].value;
    }
    if (!psw::is_zero(sum)) y.push(Index(i), sum);
  }
  return y;
}

std::string SparseMatrix::first_nonzero() const {
  for (std::size_t i = 0; i < rows(); ++i)
    if (!row_data_[i].empty()) {
      std::ostringstream os;
      os << "(" << i << "," << row_data_[i].lead() << ")="
         << row_data_[i].lead_value().get_str();
      return os.str();
    }
  return "";
}

SparseMatrix kron(const SparseMatrix& a, const SparseMatrix& b) {
  SparseMatrix c(a.rows() * b.rows(), a.cols() * b.cols());
  for (std::size_t i = 0; i < a.rows(); ++i)
    for (std::size_t k = 0; k < b.rows(); ++k) {
      RationalVec row;
      for (const auto& ea : a.row(i).entries)
        for (const auto& eb : b.row(k).entries)
          row.push(Index(ea.index * b.cols() + eb.index), ea.value * eb.value);
      c.set_row(i * b.rows() + k, std::move(row));
    }
  return c;
}

SparseMatrix commutator(const SparseMatrix& a, const SparseMatrix& b) {
  return a * b - b * a;
}

}  // namespace psw
