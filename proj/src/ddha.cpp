#include "psw/ddha.hpp"

#include <map>
#include <sstream>
#include <stdexcept>

#include "psw/operator_algebra.hpp"

namespace psw {

DDHAGenerator DDHAGenerator::s(int i) {
  DDHAGenerator g;
  g.kind = Kind::s;
  g.i = i;
  return g;
}

DDHAGenerator DDHAGenerator::x(int l, Permutation sigma) {
  if (sigma.degree() != l)
    throw std::invalid_argument("DDHAGenerator::x: sigma must lie in S_l");
  DDHAGenerator g;
  g.kind = Kind::x;
  g.l = l;
  g.sigma = std::move(sigma);
  return g;
}

std::string DDHAGenerator::label() const {
  std::ostringstream os;
  if (kind == Kind::s)
    os << "s" << i;
  else
    os << "x" << sigma.to_string() << "^(" << l << ")";
  return os.str();
}

std::vector<DDHAGenerator> ddha_generators(int r) {
  std::vector<DDHAGenerator> out;
  for (int i = 1; i < r; ++i) out.push_back(DDHAGenerator::s(i));
  for (int l = 0; l <= r; ++l)
    for (auto& p : all_permutations(l)) out.push_back(DDHAGenerator::x(l, p));
  return out;
}

Permutation lift_to_positions(const Permutation& sigma, Sector I) {
  const std::vector<int> pos = sector_positions(I);
  if (int(pos.size()) != sigma.degree())
    throw std::invalid_argument("lift_to_positions: sigma is not in S_{#I}");
  int r = pos.empty() ? 0 : pos.back();
  return Permutation::from_images([&] {
    std::vector<int> images(std::size_t(std::max(r, 0)));
    for (int k = 1; k <= r; ++k) images[std::size_t(k - 1)] = k;
    for (std::size_t t = 0; t < pos.size(); ++t)
      images[std::size_t(pos[t] - 1)] = pos[std::size_t(sigma(int(t) + 1) - 1)];
    return images;
  }());
}

namespace {

Permutation pad(const Permutation& p, int r) {
  std::vector<int> images = p.images();
  for (int k = p.degree() + 1; k <= r; ++k) images.push_back(k);
  return Permutation::from_images(std::move(images));
}

}  // namespace

OperatorMatrix x_sigma_I(const SpaceDescriptor& space, Sector I, const Permutation& sigma) {
  if (I & ~full_sector(space.r))
    throw std::invalid_argument("x_sigma_I: I is not a subset of {1..r}");
  if (sigma.degree() != sector_size(I))
    throw std::invalid_argument("x_sigma_I: sigma is not a permutation of {1..#I}");
  Permutation lifted = pad(lift_to_positions(sigma, I), space.r);
  return psi_matrix(space, lifted) * sector_projection_I(space, I);
}

Permutation epsilon_JI(int r, Sector I, Sector J) {
  if (sector_size(I) != sector_size(J))
    throw std::invalid_argument("epsilon_JI: #I != #J");
  const Sector all = full_sector(r);
  if ((I | J) & ~all) throw std::invalid_argument("epsilon_JI: subset outside {1..r}");
  std::vector<int> images(static_cast<std::size_t>(r));
  auto match = [&](Sector from, Sector to) {
    auto a = sector_positions(from), b = sector_positions(to);
    for (std::size_t t = 0; t < a.size(); ++t) images[std::size_t(a[t] - 1)] = b[t];
  };
  match(I, J);
  match(all & ~I, all & ~J);
  return Permutation::from_images(std::move(images));
}

OperatorMatrix sigma_bracket_I(const SpaceDescriptor& space, const Permutation& sigma,
                               Sector I) {
  return psi_matrix(space, sigma) * sector_projection_I(space, I);
}

OperatorMatrix E_JI(const SpaceDescriptor& space, Sector J, Sector I) {
  return sigma_bracket_I(space, epsilon_JI(space.r, I, J), I);
}

OperatorMatrix xi_generator(const SpaceDescriptor& space, const DDHAGenerator& g) {
  if (g.kind == DDHAGenerator::Kind::s) {
    if (g.i < 1 || g.i >= space.r)
      throw std::invalid_argument("xi_generator: s_i needs 1 <= i <= r-1");
    return psi_matrix(space, Permutation::transposition(space.r, g.i, g.i + 1));
  }
  if (g.l < 0 || g.l > space.r)
    throw std::invalid_argument("xi_generator: l out of range");
  return x_sigma_I(space, full_sector(g.l), g.sigma);
}

bool RelationReport::all_passed() const {
  for (const auto& f : families)
    if (!f.passed()) return false;
  return true;
}

std::size_t RelationReport::total_instances() const {
  std::size_t t = 0;
  for (const auto& f : families) t += f.instances;
  return t;
}

RelationReport check_ddha_relations(const SpaceDescriptor& space) {
  const int r = space.r;
  const std::size_t d = space.dim();
  const OperatorMatrix id = SparseMatrix::identity(d);
  const OperatorMatrix zero = SparseMatrix::zero(d, d);

  std::vector<OperatorMatrix> s(static_cast<std::size_t>(r));  // s[i] for 1 <= i < r
  for (int i = 1; i < r; ++i) s[std::size_t(i)] = xi_generator(space, DDHAGenerator::s(i));
  std::vector<std::vector<Permutation>> perms(std::size_t(r + 1));
  std::vector<std::map<Permutation, OperatorMatrix>> x(std::size_t(r + 1));
  for (int l = 0; l <= r; ++l) {
    perms[std::size_t(l)] = all_permutations(l);
    for (const auto& p : perms[std::size_t(l)])
      x[std::size_t(l)].emplace(p, xi_generator(space, DDHAGenerator::x(l, p)));
  }
  auto X = [&](int l, const Permutation& p) -> const OperatorMatrix& {
    return x[std::size_t(l)].at(p);
  };

  RelationReport report;
  auto check = [](RelationFamilyResult& fam, const OperatorMatrix& lhs,
                  const OperatorMatrix& rhs, const std::string& what) {
    ++fam.instances;
    if (lhs == rhs) return;
    if (fam.failures++ == 0)
      fam.witness = what + ": lhs-rhs has entry " + (lhs - rhs).first_nonzero();
  };

  RelationFamilyResult f7{"involution", "s_i^2 = 1; s_i s_j = s_j s_i for |i-j| > 1"};
  for (int i = 1; i < r; ++i) {
    check(f7, s[std::size_t(i)] * s[std::size_t(i)], id, "s" + std::to_string(i) + "^2");
    for (int j = 1; j < r; ++j)
      if (std::abs(i - j) > 1)
        check(f7, s[std::size_t(i)] * s[std::size_t(j)], s[std::size_t(j)] * s[std::size_t(i)],
              "s" + std::to_string(i) + " s" + std::to_string(j));
  }
  report.families.push_back(std::move(f7));

  RelationFamilyResult f8{"braid", "s_i s_j s_i = s_j s_i s_j for |i-j| = 1"};
  for (int i = 1; i < r; ++i)
    for (int j = 1; j < r; ++j)
      if (std::abs(i - j) == 1) {
        const auto& a = s[std::size_t(i)];
        const auto& b = s[std::size_t(j)];
        check(f8, a * b * a, b * a * b, "braid " + std::to_string(i) + "," + std::to_string(j));
      }
  report.families.push_back(std::move(f8));

  RelationFamilyResult f9{"x-product", "x_sigma x_mu = x_{sigma mu} in S_l"};
  for (int l = 0; l <= r; ++l)
    for (const auto& a : perms[std::size_t(l)])
      for (const auto& b : perms[std::size_t(l)])
        check(f9, X(l, a) * X(l, b), X(l, a * b),
              "l=" + std::to_string(l) + " " + a.to_string() + b.to_string());
  report.families.push_back(std::move(f9));

  RelationFamilyResult f10{"s-x-inside", "s_i x_sigma = x_{s_i sigma}, x_sigma s_i = x_{sigma s_i}, i < l"};
  for (int l = 0; l <= r; ++l)
    for (int i = 1; i < l; ++i) {
      Permutation t = Permutation::transposition(l, i, i + 1);
      for (const auto& p : perms[std::size_t(l)]) {
        std::string tag = "l=" + std::to_string(l) + " i=" + std::to_string(i) + " " + p.to_string();
        check(f10, s[std::size_t(i)] * X(l, p), X(l, t * p), tag + " left");
        check(f10, X(l, p) * s[std::size_t(i)], X(l, p * t), tag + " right");
      }
    }
  report.families.push_back(std::move(f10));

  RelationFamilyResult f11{"s-x-outside", "s_i x_sigma = x_sigma = x_sigma s_i, i > l"};
  for (int l = 0; l <= r; ++l)
    for (int i = l + 1; i < r; ++i)
      for (const auto& p : perms[std::size_t(l)]) {
        std::string tag = "l=" + std::to_string(l) + " i=" + std::to_string(i) + " " + p.to_string();
        check(f11, s[std::size_t(i)] * X(l, p), X(l, p), tag + " left");
        check(f11, X(l, p) * s[std::size_t(i)], X(l, p), tag + " right");
      }
  report.families.push_back(std::move(f11));

  RelationFamilyResult f12{"x-orthogonal", "x_delta^(l) x_gamma^(k) = 0 for l != k"};
  for (int l = 0; l <= r; ++l)
    for (int k = 0; k <= r; ++k) {
      if (l == k) continue;
      for (const auto& a : perms[std::size_t(l)])
        for (const auto& b : perms[std::size_t(k)])
          check(f12, X(l, a) * X(k, b), zero,
                "l=" + std::to_string(l) + " k=" + std::to_string(k) + " " + a.to_string() +
                    b.to_string());
    }
  report.families.push_back(std::move(f12));
  return report;
}

Subspace build_Dnr(const SpaceDescriptor& space) {
  std::vector<OperatorMatrix> gens;
  for (const auto& g : ddha_generators(space.r)) gens.push_back(xi_generator(space, g));
  return algebra_closure(gens, space.dim());
}

Subspace build_Dnr_l(const SpaceDescriptor& space, int l) {
  if (l < 0 || l > space.r) throw std::invalid_argument("build_Dnr_l: l out of range");
  const OperatorMatrix proj = sector_projection(space, l);
  std::vector<OperatorMatrix> seed;
  for (const auto& tau : all_permutations(space.r))
    seed.push_back(proj * psi_matrix(space, tau) * proj);
  for (const auto& p : all_permutations(l))
    seed.push_back(xi_generator(space, DDHAGenerator::x(l, p)));
  return span_closure(seed, space.dim());
}

Subspace explicit_Dnr_l(const SpaceDescriptor& space, int l) {
  if (l < 0 || l > space.r) throw std::invalid_argument("explicit_Dnr_l: l out of range");
  std::vector<OperatorMatrix> ops;
  const auto subsets = subsets_of_size(space.r, l);
  for (Sector I : subsets)
    for (const auto& sigma : all_permutations(l)) {
      OperatorMatrix x = x_sigma_I(space, I, sigma);
      for (Sector J : subsets) ops.push_back(E_JI(space, J, I) * x);
    }
  return operator_span(ops, space.dim());
}

Subspace build_D_bracket_I(const SpaceDescriptor& space, Sector I) {
  std::vector<OperatorMatrix> ops;
  for (const auto& sigma : all_permutations(space.r))
    ops.push_back(sigma_bracket_I(space, sigma, I));
  return operator_span(ops, space.dim());
}

Sector image_of_sector(const Permutation& tau, Sector I) {
  Sector out = 0;
  for (int p : sector_positions(I)) out |= Sector(1) << (tau(p) - 1);
  return out;
}

Permutation bracket_factor(const Permutation& tau, Sector I) {
  const auto src = sector_positions(I);
  const auto dst = sector_positions(image_of_sector(tau, I));
  std::vector<int> images(src.size());
  for (std::size_t t = 0; t < src.size(); ++t) {
    int target = tau(src[t]);
    for (std::size_t m = 0; m < dst.size(); ++m)
      if (dst[m] == target) images[t] = int(m) + 1;
  }
  return Permutation::from_images(std::move(images));
}

}  // namespace psw
