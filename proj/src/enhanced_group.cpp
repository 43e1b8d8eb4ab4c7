#include "psw/enhanced_group.hpp"

#include <sstream>
#include <stdexcept>

namespace psw {

ParabolicElement::ParabolicElement(DenseMatrix g, std::vector<Scalar> v, Scalar c)
    : g_(std::move(g)), v_(std::move(v)), c_(std::move(c)) {
  if (g_.rows() != v_.size() || g_.cols() != v_.size() || v_.empty())
    throw std::invalid_argument("ParabolicElement: g must be n x n with |v| = n >= 1");
  if (is_zero(c_)) throw std::invalid_argument("ParabolicElement: c must be nonzero");
  if (!g_.invertible()) throw std::invalid_argument("ParabolicElement: g singular");
}

ParabolicElement ParabolicElement::identity(int n) {
  return {DenseMatrix::identity(std::size_t(n)), std::vector<Scalar>(std::size_t(n)), 1};
}

ParabolicElement ParabolicElement::translation(std::vector<Scalar> w) {
  const std::size_t n = w.size();
  return {DenseMatrix::identity(n), std::move(w), 1};
}

ParabolicElement ParabolicElement::levi(DenseMatrix g, Scalar c) {
  const std::size_t n = g.rows();
  return {std::move(g), std::vector<Scalar>(n), std::move(c)};
}

ParabolicElement ParabolicElement::torus(int n, Scalar c) {
  return {DenseMatrix::identity(std::size_t(n)), std::vector<Scalar>(std::size_t(n)),
          std::move(c)};
}

ParabolicElement ParabolicElement::from_matrix(const DenseMatrix& m) {
  if (m.rows() != m.cols() || m.rows() < 2)
    throw std::invalid_argument("from_matrix: expected (n+1)x(n+1), n >= 1");
  const std::size_t n = m.rows() - 1;
  for (std::size_t j = 0; j < n; ++j)
    if (!is_zero(m(n, j)))
      throw std::invalid_argument("from_matrix: not block upper triangular");
  DenseMatrix g(n, n);
  std::vector<Scalar> v(n);
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = 0; j < n; ++j) g(i, j) = m(i, j);
    v[i] = m(i, n);
  }
  return {std::move(g), std::move(v), m(n, n)};
}

DenseMatrix ParabolicElement::to_matrix() const {
  const std::size_t n = v_.size();
  DenseMatrix m(n + 1, n + 1);
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = 0; j < n; ++j) m(i, j) = g_(i, j);
    m(i, n) = v_[i];
  }
  m(n, n) = c_;
  return m;
}

ParabolicElement enhanced_mul(const ParabolicElement& a, const ParabolicElement& b) {
  if (a.n() != b.n()) throw std::invalid_argument("enhanced_mul: rank mismatch");
  return ParabolicElement::from_matrix(a.to_matrix() * b.to_matrix());
}

Tensor act_enhanced(const ParabolicElement& a, const Tensor& u) {
  if (u.space.r != 1 || u.space.n != a.n())
    throw std::invalid_argument("act_enhanced: expected a vector of V-bar");
  return Tensor{u.space, a.to_matrix().to_sparse().apply(u.coeffs)};
}

std::vector<ParabolicElement> group_generators_parabolic(const SpaceDescriptor& space) {
  const std::size_t n = std::size_t(space.n);
  std::vector<ParabolicElement> out;
  for (std::size_t i = 0; i < n; ++i) {
    std::vector<Scalar> w(n);
    w[i] = 1;
    out.push_back(ParabolicElement::translation(std::move(w)));
  }
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j) {
      if (i == j) continue;
      DenseMatrix g = DenseMatrix::identity(n);
      g(i, j) = 1;
      out.push_back(ParabolicElement::levi(std::move(g)));
    }
  DenseMatrix diag = DenseMatrix::identity(n);
  diag(0, 0) = 2;
  out.push_back(ParabolicElement::levi(std::move(diag)));
  out.push_back(ParabolicElement::torus(space.n, 2));
  return out;
}

std::string to_string(GroupKind kind) {
  switch (kind) {
    case GroupKind::full: return "full";
    case GroupKind::levi: return "levi";
    case GroupKind::parabolic: return "parabolic";
    case GroupKind::unipotent: return "unipotent";
  }
  return "?";
}

GroupKind group_kind_from_string(const std::string& s) {
  if (s == "full") return GroupKind::full;
  if (s == "levi") return GroupKind::levi;
  if (s == "parabolic") return GroupKind::parabolic;
  if (s == "unipotent") return GroupKind::unipotent;
  throw std::invalid_argument("unknown group kind: " + s);
}

std::vector<DenseMatrix> group_generators(const SpaceDescriptor& space, GroupKind kind) {
  std::vector<DenseMatrix> out;
  const std::size_t N = std::size_t(space.letters());
  if (kind == GroupKind::full) {
    for (std::size_t a = 0; a < N; ++a)
      for (std::size_t b = 0; b < N; ++b) {
        if (a == b) continue;
        DenseMatrix g = DenseMatrix::identity(N);
        g(a, b) = 1;
        out.push_back(std::move(g));
      }
    DenseMatrix diag = DenseMatrix::identity(N);
    diag(0, 0) = 2;
    out.push_back(std::move(diag));
    return out;
  }
  for (const auto& p : group_generators_parabolic(space)) {
    const bool is_translation = p.g() == DenseMatrix::identity(p.g().rows()) && p.c() == 1;
    if (kind == GroupKind::unipotent && !is_translation) continue;
    if (kind == GroupKind::levi && is_translation) continue;
    out.push_back(p.to_matrix());
  }
  return out;
}

LieGeneratorSet lie_generators(const SpaceDescriptor& space, GroupKind kind) {
  LieGeneratorSet set;
  const std::size_t n = std::size_t(space.n), N = n + 1;
  auto add = [&](std::size_t a, std::size_t b) {
    std::ostringstream os;
    os << "E" << a + 1 << "," << b + 1;
    set.labels.push_back(os.str());
    set.matrices.push_back(DenseMatrix::unit(N, a, b));
  };
  if (kind == GroupKind::full) {
    for (std::size_t a = 0; a < N; ++a)
      for (std::size_t b = 0; b < N; ++b) add(a, b);
    return set;
  }
  if (kind == GroupKind::levi || kind == GroupKind::parabolic) {
    for (std::size_t i = 0; i < n; ++i)
      for (std::size_t j = 0; j < n; ++j) add(i, j);
    add(n, n);
  }
  if (kind == GroupKind::unipotent || kind == GroupKind::parabolic)
    for (std::size_t i = 0; i < n; ++i) add(i, n);
  return set;
}

}  // namespace psw
