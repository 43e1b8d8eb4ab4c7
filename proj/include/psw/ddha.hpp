#ifndef PSW_DDHA_HPP
#define PSW_DDHA_HPP

#include <cstddef>
#include <string>
#include <utility>
#include <vector>

#include "psw/subspace.hpp"
#include "psw/tensor_space.hpp"

namespace psw {

// Generators of the degenerate double Hecke algebra: s_i (1 <= i <= r-1)
// and x_sigma^(l) (0 <= l <= r, sigma in S_l).
struct DDHAGenerator {
  enum class Kind { s, x };
  Kind kind = Kind::s;
  int i = 0;
  int l = 0;
  Permutation sigma;

  static DDHAGenerator s(int i);
  static DDHAGenerator x(int l, Permutation sigma);
  std::string label() const;
};

std::vector<DDHAGenerator> ddha_generators(int r);

// Lift of sigma in S_{#I} to S_r acting on the positions of I:
// i_t -> i_{sigma(t)}, identity off I.
Permutation lift_to_positions(const Permutation& sigma, Sector I);

// Permutes the I-slots of V-bar_I by sigma; zero on every other sector.
OperatorMatrix x_sigma_I(const SpaceDescriptor& space, Sector I, const Permutation& sigma);

// Order-preserving permutation with I -> J and complement -> complement.
Permutation epsilon_JI(int r, Sector I, Sector J);

// Psi(sigma) restricted to V-bar_I, zero on the other sectors.
OperatorMatrix sigma_bracket_I(const SpaceDescriptor& space, const Permutation& sigma,
                               Sector I);

// (Psi(eps_{J,I}))^{[I]}, maps V-bar_I onto V-bar_J.
OperatorMatrix E_JI(const SpaceDescriptor& space, Sector J, Sector I);

// The representation Xi on generators.
OperatorMatrix xi_generator(const SpaceDescriptor& space, const DDHAGenerator& g);

struct RelationFamilyResult {
  RelationFamilyResult(std::string name, std::string what)
      : family(std::move(name)), description(std::move(what)) {}

  std::string family;       // involution, braid, x-product, s-x-inside, s-x-outside, x-orthogonal
  std::string description;
  std::size_t instances = 0;
  std::size_t failures = 0;
  std::string witness;      // first failing instance, if any

  bool passed() const { return failures == 0; }
};

struct RelationReport {
  std::vector<RelationFamilyResult> families;

  bool all_passed() const;
  std::size_t total_instances() const;
};

// Instantiates every defining relation for all admissible indices and
// checks the Xi-images as exact matrix identities.
RelationReport check_ddha_relations(const SpaceDescriptor& space);

// D(n,r) = Xi(H_r): algebra closure of all generator images.
Subspace build_Dnr(const SpaceDescriptor& space);

// D(n,r)_l: product closure of the cut permutation operators P_l Psi(tau) P_l
// and the Xi(x_sigma^(l)).
Subspace build_Dnr_l(const SpaceDescriptor& space, int l);

// Span of {E_{J,I} x_sigma^I : #I = #J = l, sigma in S_l}; a basis when n >= r.
Subspace explicit_Dnr_l(const SpaceDescriptor& space, int l);

// D_[I] = span of sigma^{[I]} over sigma in S_r.
Subspace build_D_bracket_I(const SpaceDescriptor& space, Sector I);

// sigma in S_{#I} with (Psi(tau))^{[I]} = E_{tau(I),I} x_sigma^I.
Permutation bracket_factor(const Permutation& tau, Sector I);

Sector image_of_sector(const Permutation& tau, Sector I);

}  // namespace psw

#endif  // PSW_DDHA_HPP
