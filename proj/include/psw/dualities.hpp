#ifndef PSW_DUALITIES_HPP
#define PSW_DUALITIES_HPP

#include <cstdint>
#include <map>
#include <memory>
#include <optional>
#include <string>
#include <vector>

#include "psw/enhanced_group.hpp"
#include "psw/subspace.hpp"
#include "psw/tensor_space.hpp"

namespace psw {

enum class Status { pass, fail, report_only };
std::string to_string(Status s);

struct CheckResult {
  std::string check;
  int n = 0;
  int r = 0;
  Status status = Status::fail;
  std::size_t lhs_dim = 0;
  std::size_t rhs_dim = 0;
  std::string detail;
  double elapsed_ms = 0;
  std::optional<std::string> witness;
};

// Commutant of the Lie-derivation images of the group's Lie generators.
Subspace centralizer_of_group(const SpaceDescriptor& space, GroupKind which);
// Commutant of phi_matrix images of the finite dense generating set.
Subspace centralizer_of_group_elements(const SpaceDescriptor& space, GroupKind which);

// Span of the r! permutation operators.
Subspace psi_span(const SpaceDescriptor& space);

// A_w^J = a_1 (x) ... (x) a_r - b_1 (x) ... (x) b_r with a_i = w + eta,
// b_i = eta on J and a_i = b_i = eta_i off J. In formal mode
// w = sum t_i eta_i and the tensor is split by monomials in t_1..t_n.
struct AwJVector {
  using Monomial = std::vector<int>;  // exponents of t_1..t_n

  SpaceDescriptor space;
  Sector J = 0;
  bool formal = false;
  std::map<Monomial, RationalVec> components;  // concrete: one entry, zero monomial

  Tensor evaluate(const std::vector<Scalar>& w) const;
};

// w == nullopt selects formal mode. Throws std::invalid_argument on
// J empty or n < r.
AwJVector build_AwJ(const SpaceDescriptor& space, Sector J,
                    const std::optional<std::vector<Scalar>>& w);

// Mixed tensors in V-bar^(x)r (x) V-bar^*(x)r; coordinate (i, j) is i*d + j.
struct MixedTensor {
  SpaceDescriptor space;
  RationalVec coeffs;
  friend bool operator==(const MixedTensor&, const MixedTensor&) = default;
};

// X.(u (x) f) = Xu (x) f - u (x) (f o X), as d^2 x d^2 matrices.
std::vector<OperatorMatrix> mixed_action_generators(const SpaceDescriptor& space,
                                                    GroupKind which);
OperatorMatrix mixed_action(const SpaceDescriptor& space, const DenseMatrix& x);
MixedTensor build_C_sigma(const SpaceDescriptor& space, const Permutation& sigma);
// u (x) f -> (x -> f(x) u)
OperatorMatrix T_map(const MixedTensor& m);
MixedTensor T_inverse(const SpaceDescriptor& space, const OperatorMatrix& op);

// Joint kernel of the mixed action of the group's Lie generators.
Subspace mixed_invariants(const SpaceDescriptor& space, GroupKind which);

// Caches the shared subspaces of one (n, r) so that several checks reuse
// them. Results are identical to the free functions.
class Workbench {
 public:
  explicit Workbench(SpaceDescriptor space, std::uint64_t seed = 0);

  const SpaceDescriptor& space() const { return space_; }

  const Subspace& psi();
  const Subspace& dnr();
  const Subspace& dnr_l(int l);
  const Subspace& centralizer(GroupKind which);
  const Subspace& centralizer_elements(GroupKind which);
  const Subspace& dnr_V();  // D(n,r) cut by the unipotent centralizer
  const Subspace& invariants();

  CheckResult verify_ddha_relations();
  CheckResult verify_classical_sw();
  CheckResult verify_levi_sw();
  CheckResult verify_parabolic_sw();
  CheckResult verify_main_theorem();
  CheckResult verify_structure_lemma();
  CheckResult verify_key_lemma(Sector J);
  CheckResult verify_key_lemma_all();  // every nonempty J
  CheckResult verify_invariants();

  // main-theorem status == pass  <=>  parabolic passes and D^V == psi span.
  bool consistency_triangle();

 private:
  SpaceDescriptor space_;
  std::uint64_t seed_;
  std::optional<Subspace> psi_, dnr_, dv_, inv_;
  std::map<int, Subspace> dnr_l_;
  std::map<GroupKind, Subspace> cent_, cent_elem_;
};

CheckResult verify_classical_sw(const SpaceDescriptor& space);
CheckResult verify_levi_sw(const SpaceDescriptor& space);
CheckResult verify_parabolic_sw(const SpaceDescriptor& space);
CheckResult verify_main_theorem(const SpaceDescriptor& space);
CheckResult verify_key_lemma(const SpaceDescriptor& space, Sector J);
CheckResult verify_invariants(const SpaceDescriptor& space);

// sum_l C(r,l)^2 l!
std::size_t expected_dnr_dim(int r);
std::size_t factorial(int k);
std::size_t binomial(int n, int k);

}  // namespace psw

#endif  // PSW_DUALITIES_HPP
