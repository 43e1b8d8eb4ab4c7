#ifndef PSW_ENHANCED_GROUP_HPP
#define PSW_ENHANCED_GROUP_HPP

#include <string>
#include <vector>

#include "psw/dense.hpp"
#include "psw/tensor_space.hpp"

namespace psw {

// Element (g, v, c) of GL_n |x V |x G_m, realised in GL_{n+1} as the block
// matrix [[g, v], [0, c]]. The subset c = 1 is the enhanced group
// GL_n |x V with (g1, v1)(g2, v2) = (g1 g2, g1 v2 + v1); g = 1, c = 1 gives
// the translations e^v.
class ParabolicElement {
 public:
  // Throws std::invalid_argument on shape mismatch or non-invertible data.
  ParabolicElement(DenseMatrix g, std::vector<Scalar> v, Scalar c);

  static ParabolicElement identity(int n);
  static ParabolicElement translation(std::vector<Scalar> w);  // e^w
  static ParabolicElement levi(DenseMatrix g, Scalar c = 1);
  static ParabolicElement torus(int n, Scalar c);
  // Reads (g, v, c) back from a block upper-triangular matrix.
  static ParabolicElement from_matrix(const DenseMatrix& m);

  int n() const { return int(v_.size()); }
  const DenseMatrix& g() const { return g_; }
  const std::vector<Scalar>& v() const { return v_; }
  const Scalar& c() const { return c_; }

  DenseMatrix to_matrix() const;

  friend bool operator==(const ParabolicElement&, const ParabolicElement&) = default;

 private:
  DenseMatrix g_;
  std::vector<Scalar> v_;
  Scalar c_;
};

// Product computed through the matrix realisation.
ParabolicElement enhanced_mul(const ParabolicElement& a, const ParabolicElement& b);

// Action on V-bar (r = 1): (g, v, c)(u + a.eta) = g u + a v + a c eta.
Tensor act_enhanced(const ParabolicElement& a, const Tensor& u);

// e^{eta_i} (i = 1..n), id + E_ij (i != j <= n), diag(2,1,..,1) on V and
// the torus element c = 2.
std::vector<ParabolicElement> group_generators_parabolic(const SpaceDescriptor& space);

enum class GroupKind { full, levi, parabolic, unipotent };

std::string to_string(GroupKind kind);
GroupKind group_kind_from_string(const std::string& s);

// Finite Zariski-dense generating sets as (n+1)x(n+1) matrices. The full
// group uses id + E_ab (a != b) and diag(2,1,..,1).
std::vector<DenseMatrix> group_generators(const SpaceDescriptor& space, GroupKind kind);

struct LieGeneratorSet {
  std::vector<std::string> labels;
  std::vector<DenseMatrix> matrices;

  std::size_t size() const { return matrices.size(); }
};

// levi: E_ij (i,j <= n) and E_{n+1,n+1}; unipotent: E_{i,n+1};
// parabolic: levi and unipotent; full: every E_ab.
LieGeneratorSet lie_generators(const SpaceDescriptor& space, GroupKind kind);

}  // namespace psw

#endif  // PSW_ENHANCED_GROUP_HPP
