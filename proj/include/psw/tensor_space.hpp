#ifndef PSW_TENSOR_SPACE_HPP
#define PSW_TENSOR_SPACE_HPP

#include <cstddef>
#include <cstdint>
#include <string>
#include <vector>

#include "psw/dense.hpp"
#include "psw/sparse.hpp"

namespace psw {

// V-bar = V (+) C.eta with dim V = n; the tensor power has degree r.
// Basis letters are 1..n for V and n+1 for eta.
struct SpaceDescriptor {
  int n = 1;
  int r = 1;

  SpaceDescriptor() = default;
  SpaceDescriptor(int n_, int r_);  // throws std::invalid_argument unless n,r >= 1

  int letters() const { return n + 1; }
  std::size_t dim() const;  // (n+1)^r
  std::size_t operator_dim() const { return dim() * dim(); }

  friend bool operator==(const SpaceDescriptor&, const SpaceDescriptor&) = default;
};

// Subset of {1..r} as a bitmask; bit k-1 stands for position k.
using Sector = std::uint32_t;

Sector make_sector(const std::vector<int>& positions);  // 1-based positions
std::vector<int> sector_positions(Sector s);            // increasing, 1-based
int sector_size(Sector s);
Sector full_sector(int r);
std::string sector_to_string(Sector s);
std::vector<Sector> subsets_of_size(int r, int l);  // increasing mask order

// A point of {1..n+1}^r.
struct MultiIndex {
  std::vector<int> entries;  // 1-based letters

  int degree() const { return int(entries.size()); }
  int operator[](int k) const { return entries[std::size_t(k - 1)]; }  // 1-based slot
  // Positions carrying a V-letter (<= n).
  Sector sector(int n) const;

  friend bool operator==(const MultiIndex&, const MultiIndex&) = default;
  friend auto operator<=>(const MultiIndex&, const MultiIndex&) = default;
};

// Lexicographic rank and its inverse; this order fixes every matrix coordinate.
std::size_t index_of(const SpaceDescriptor& space, const MultiIndex& i);
MultiIndex multi_index_at(const SpaceDescriptor& space, std::size_t idx);

// Bijection of {1..r}.
class Permutation {
 public:
  Permutation() = default;
  explicit Permutation(int degree);  // identity
  // One-line notation, 1-based images: {2,3,1} is 1->2, 2->3, 3->1.
  static Permutation from_images(std::vector<int> images);
  static Permutation transposition(int degree, int a, int b);
  static Permutation cycle(int degree, const std::vector<int>& points);

  int degree() const { return int(images_.size()); }
  int operator()(int k) const { return images_[std::size_t(k - 1)]; }
  const std::vector<int>& images() const { return images_; }

  Permutation inverse() const;
  bool is_identity() const;
  // (a*b)(k) = a(b(k))
  friend Permutation operator*(const Permutation& a, const Permutation& b);
  friend bool operator==(const Permutation&, const Permutation&) = default;
  friend auto operator<=>(const Permutation&, const Permutation&) = default;

  // Place action: (sigma.i)_k = i_{sigma^{-1}(k)}.
  MultiIndex act(const MultiIndex& i) const;

  std::string to_string() const;

 private:
  std::vector<int> images_;
};

// All r! permutations in lexicographic order of their image lists.
std::vector<Permutation> all_permutations(int degree);

// Sparse element of the tensor power, coordinates in the lexicographic basis.
struct Tensor {
  SpaceDescriptor space;
  RationalVec coeffs;

  static Tensor basis_vector(const SpaceDescriptor& space, const MultiIndex& i);
  Scalar coefficient(const MultiIndex& i) const;
  friend bool operator==(const Tensor&, const Tensor&) = default;
};

// Pure tensor u_1 (x) ... (x) u_r of dense vectors in V-bar.
Tensor pure_tensor(const SpaceDescriptor& space,
                   const std::vector<std::vector<Scalar>>& factors);

std::vector<MultiIndex> basis_enumerate(const SpaceDescriptor& space);
std::vector<MultiIndex> sector_basis(const SpaceDescriptor& space, Sector sector);

// eta_i -> eta_{sigma.i}
OperatorMatrix psi_matrix(const SpaceDescriptor& space, const Permutation& sigma);
// r-fold Kronecker power of an invertible (n+1)x(n+1) matrix.
OperatorMatrix phi_matrix(const SpaceDescriptor& space, const DenseMatrix& g);
// sum over slots of 1 (x) .. (x) X (x) .. (x) 1
OperatorMatrix lie_derivation(const SpaceDescriptor& space, const DenseMatrix& x);
// Projection onto the span of basis tensors with exactly l V-letters.
OperatorMatrix sector_projection(const SpaceDescriptor& space, int l);
// Projection onto V-bar_I.
OperatorMatrix sector_projection_I(const SpaceDescriptor& space, Sector sector);

}  // namespace psw

#endif  // PSW_TENSOR_SPACE_HPP
