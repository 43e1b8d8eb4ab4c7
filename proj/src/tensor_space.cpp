#include "psw/tensor_space.hpp"

#include <algorithm>
#include <bit>
#include <numeric>
#include <sstream>
#include <stdexcept>

namespace psw {

SpaceDescriptor::SpaceDescriptor(int n_, int r_) : n(n_), r(r_) {
  if (n < 1 || r < 1)
    throw std::invalid_argument("SpaceDescriptor: need n >= 1 and r >= 1");
  if (r > 31) throw std::invalid_argument("SpaceDescriptor: r too large");
}

std::size_t SpaceDescriptor::dim() const {
  std::size_t d = 1;
  for (int k = 0; k < r; ++k) d *= std::size_t(n + 1);
  return d;
}

Sector make_sector(const std::vector<int>& positions) {
  Sector s = 0;
  for (int p : positions) {
    if (p < 1 || p > 31) throw std::invalid_argument("make_sector: bad position");
    s |= Sector(1) << (p - 1);
  }
  return s;
}

std::vector<int> sector_positions(Sector s) {
  std::vector<int> out;
  for (int k = 0; k < 32; ++k)
    if (s & (Sector(1) << k)) out.push_back(k + 1);
  return out;
}

int sector_size(Sector s) { return std::popcount(s); }

Sector full_sector(int r) { return r >= 32 ? ~Sector(0) : (Sector(1) << r) - 1; }

std::string sector_to_string(Sector s) {
  std::ostringstream os;
  os << "{";
  bool first = true;
  for (int p : sector_positions(s)) {
    os << (first ? "" : ",") << p;
    first = false;
  }
  os << "}";
  return os.str();
}

std::vector<Sector> subsets_of_size(int r, int l) {
  std::vector<Sector> out;
  for (Sector s = 0; s <= full_sector(r); ++s)
    if (sector_size(s) == l) out.push_back(s);
  return out;
}

Sector MultiIndex::sector(int n) const {
  Sector s = 0;
  for (std::size_t k = 0; k < entries.size(); ++k)
    if (entries[k] <= n) s |= Sector(1) << k;
  return s;
}

std::size_t index_of(const SpaceDescriptor& space, const MultiIndex& i) {
  if (i.degree() != space.r) throw std::invalid_argument("index_of: degree mismatch");
  std::size_t idx = 0;
  for (int v : i.entries) {
    if (v < 1 || v > space.letters())
      throw std::invalid_argument("index_of: letter out of range");
    idx = idx * std::size_t(space.letters()) + std::size_t(v - 1);
  }
  return idx;
}

MultiIndex multi_index_at(const SpaceDescriptor& space, std::size_t idx) {
  MultiIndex m;
  m.entries.assign(std::size_t(space.r), 1);
  const std::size_t base = std::size_t(space.letters());
  for (int k = space.r - 1; k >= 0; --k) {
    m.entries[std::size_t(k)] = int(idx % base) + 1;
    idx /= base;
  }
  return m;
}

Permutation::Permutation(int degree) : images_(std::size_t(degree)) {
  std::iota(images_.begin(), images_.end(), 1);
}

Permutation Permutation::from_images(std::vector<int> images) {
  std::vector<char> seen(images.size() + 1, 0);
  for (int v : images) {
    if (v < 1 || v > int(images.size()) || seen[std::size_t(v)])
      throw std::invalid_argument("Permutation: images are not a bijection");
    seen[std::size_t(v)] = 1;
  }
  Permutation p;
  p.images_ = std::move(images);
  return p;
}

Permutation Permutation::transposition(int degree, int a, int b) {
  Permutation p(degree);
  if (a < 1 || b < 1 || a > degree || b > degree)
    throw std::invalid_argument("transposition: point out of range");
  std::swap(p.images_[std::size_t(a - 1)], p.images_[std::size_t(b - 1)]);
  return p;
}

Permutation Permutation::cycle(int degree, const std::vector<int>& points) {
  Permutation p(degree);
  for (std::size_t k = 0; k < points.size(); ++k) {
    int from = points[k], to = points[(k + 1) % points.size()];
    if (from < 1 || from > degree || to < 1 || to > degree)
      throw std::invalid_argument("cycle: point out of range");
    p.images_[std::size_t(from - 1)] = to;
  }
  return from_images(p.images_);
}

Permutation Permutation::inverse() const {
  Permutation p(degree());
  for (int k = 1; k <= degree(); ++k) p.images_[std::size_t((*this)(k) - 1)] = k;
  return p;
}

bool Permutation::is_identity() const {
  for (int k = 1; k <= degree(); ++k)
    if ((*this)(k) != k) return false;
  return true;
}

Permutation operator*(const Permutation& a, const Permutation& b) {
  if (a.degree() != b.degree())
    throw std::invalid_argument("Permutation product: degree mismatch");
  Permutation c(a.degree());
  for (int k = 1; k <= a.degree(); ++k) c.images_[std::size_t(k - 1)] = a(b(k));
  return c;
}

MultiIndex Permutation::act(const MultiIndex& i) const {
  if (i.degree() != degree())
    throw std::invalid_argument("Permutation::act: degree mismatch");
  MultiIndex out = i;
  // slot k of the input moves to slot sigma(k)
  for (int k = 1; k <= degree(); ++k)
    out.entries[std::size_t((*this)(k) - 1)] = i[k];
  return out;
}

std::string Permutation::to_string() const {
  std::ostringstream os;
  os << "[";
  for (int k = 1; k <= degree(); ++k) os << (k > 1 ? " " : "") << (*this)(k);
  os << "]";
  return os.str();
}

std::vector<Permutation> all_permutations(int degree) {
  std::vector<int> imgs(static_cast<std::size_t>(degree));
  std::iota(imgs.begin(), imgs.end(), 1);
  std::vector<Permutation> out;
  do {
    out.push_back(Permutation::from_images(imgs));
  } while (std::next_permutation(imgs.begin(), imgs.end()));
  return out;
}

Tensor Tensor::basis_vector(const SpaceDescriptor& space, const MultiIndex& i) {
  Tensor t{space, {}};
  t.coeffs.push(Index(index_of(space, i)), Scalar(1));
  return t;
}

Scalar Tensor::coefficient(const MultiIndex& i) const {
  const Scalar* p = coeffs.find(Index(index_of(space, i)));
  return p ? *p : Scalar(0);
}

Tensor pure_tensor(const SpaceDescriptor& space,
                   const std::vector<std::vector<Scalar>>& factors) {
  if (int(factors.size()) != space.r)
    throw std::invalid_argument("pure_tensor: need r factors");
  for (const auto& f : factors)
    if (int(f.size()) != space.letters())
      throw std::invalid_argument("pure_tensor: factor has wrong length");
  // Expand slot by slot; coordinates stay in lexicographic order.
  std::vector<std::pair<std::size_t, Scalar>> cur{{0, Scalar(1)}};
  for (const auto& f : factors) {
    std::vector<std::pair<std::size_t, Scalar>> next;
    for (const auto& [idx, c] : cur)
      for (std::size_t a = 0; a < f.size(); ++a)
        if (!is_zero(f[a])) next.emplace_back(idx * f.size() + a, c * f[a]);
    cur = std::move(next);
  }
  Tensor t{space, {}};
  for (auto& [idx, c] : cur) t.coeffs.push(Index(idx), std::move(c));
  return t;
}

std::vector<MultiIndex> basis_enumerate(const SpaceDescriptor& space) {
  std::vector<MultiIndex> out;
  out.reserve(space.dim());
  for (std::size_t k = 0; k < space.dim(); ++k) out.push_back(multi_index_at(space, k));
  return out;
}

std::vector<MultiIndex> sector_basis(const SpaceDescriptor& space, Sector sector) {
  if (sector & ~full_sector(space.r))
    throw std::invalid_argument("sector_basis: sector not inside {1..r}");
  std::vector<MultiIndex> out;
  for (std::size_t k = 0; k < space.dim(); ++k) {
    MultiIndex m = multi_index_at(space, k);
    if (m.sector(space.n) == sector) out.push_back(std::move(m));
  }
  return out;
}

OperatorMatrix psi_matrix(const SpaceDescriptor& space, const Permutation& sigma) {
  if (sigma.degree() != space.r)
    throw std::invalid_argument("psi_matrix: permutation degree != r");
  const std::size_t d = space.dim();
  std::vector<RationalVec> rows(d);
  for (std::size_t j = 0; j < d; ++j) {
    std::size_t i = index_of(space, sigma.act(multi_index_at(space, j)));
    rows[i].push(Index(j), Scalar(1));
  }
  return SparseMatrix::from_rows(d, std::move(rows));
}

OperatorMatrix phi_matrix(const SpaceDescriptor& space, const DenseMatrix& g) {
  if (g.rows() != std::size_t(space.letters()) || g.cols() != g.rows())
    throw std::invalid_argument("phi_matrix: expected (n+1)x(n+1) matrix");
  if (!g.invertible()) throw std::domain_error("phi_matrix: singular matrix");
  SparseMatrix base = g.to_sparse();
  SparseMatrix out = base;
  for (int k = 1; k < space.r; ++k) out = kron(out, base);
  return out;
}

OperatorMatrix lie_derivation(const SpaceDescriptor& space, const DenseMatrix& x) {
  if (x.rows() != std::size_t(space.letters()) || x.cols() != x.rows())
    throw std::invalid_argument("lie_derivation: expected (n+1)x(n+1) matrix");
  const std::size_t d = space.dim();
  std::vector<std::vector<std::pair<Index, Scalar>>> rows(d);
  for (std::size_t j = 0; j < d; ++j) {
    MultiIndex col = multi_index_at(space, j);
    for (int k = 1; k <= space.r; ++k) {
      MultiIndex img = col;
      for (int a = 1; a <= space.letters(); ++a) {
        const Scalar& v = x(std::size_t(a - 1), std::size_t(col[k] - 1));
        if (is_zero(v)) continue;
        img.entries[std::size_t(k - 1)] = a;
        rows[index_of(space, img)].emplace_back(Index(j), v);
      }
    }
  }
  SparseMatrix m(d, d);
  for (std::size_t i = 0; i < d; ++i) m.set_row(i, make_sparse(std::move(rows[i])));
  return m;
}

OperatorMatrix sector_projection(const SpaceDescriptor& space, int l) {
  if (l < 0 || l > space.r)
    throw std::invalid_argument("sector_projection: l out of range");
  const std::size_t d = space.dim();
  SparseMatrix m(d, d);
  for (std::size_t i = 0; i < d; ++i)
    if (sector_size(multi_index_at(space, i).sector(space.n)) == l) {
      RationalVec row;
      row.push(Index(i), Scalar(1));
      m.set_row(i, std::move(row));
    }
  return m;
}

OperatorMatrix sector_projection_I(const SpaceDescriptor& space, Sector sector) {
  if (sector & ~full_sector(space.r))
    throw std::invalid_argument("sector_projection_I: sector not inside {1..r}");
  const std::size_t d = space.dim();
  SparseMatrix m(d, d);
  for (std::size_t i = 0; i < d; ++i)
    if (multi_index_at(space, i).sector(space.n) == sector) {
      RationalVec row;
      row.push(Index(i), Scalar(1));
      m.set_row(i, std::move(row));
    }
  return m;
}

}  // namespace psw
