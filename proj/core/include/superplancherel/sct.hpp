#pragma once

#include <complex>
#include <cstdint>
#include <string>
#include <vector>

#include "superplancherel/set_partition.hpp"

namespace spl {

using Complex = std::complex<double>;

/// A function constant on superclasses, stored as one value per superclass.
using ClassFunction = std::vector<Complex>;

inline constexpr double kSctTolerance = 1e-9;
inline constexpr int kMaxGroupOrder = 256;
inline constexpr int kExhaustiveAssociativityOrder = 64;

/// A finite group given by its multiplication table on element indices
/// 0..order-1.
class FiniteGroup {
 public:
  /// Checks the group axioms; associativity exhaustively up to order 64 and
  /// on a fixed pseudo-random sample of triples above. Throws InvalidTheory.
  FiniteGroup(std::vector<std::vector<int>> mul, int identity);

  static FiniteGroup cyclic(int n);
  /// (Z/p)^k, elements indexed in base p.
  static FiniteGroup elementary_abelian(int p, int k);

  int order() const noexcept { return static_cast<int>(mul_.size()); }
  int identity() const noexcept { return identity_; }
  int multiply(int a, int b) const { return mul_[a][b]; }
  int inverse(int a) const { return inverse_[a]; }
  const std::vector<std::vector<int>>& table() const noexcept { return mul_; }

 private:
  std::vector<std::vector<int>> mul_;
  int identity_;
  std::vector<int> inverse_;
};

/// Outcome of checking the supercharacter theory axioms that are testable
/// from a character table alone.
struct TheoryReport {
  std::vector<std::string> failures;
  double max_offdiagonal = 0.0;  // largest |<chi_a, chi_b>|, a != b

  bool ok() const { return failures.empty(); }
};

/// Checks: superclasses partition the group, #superclasses == #characters,
/// {identity} is a superclass, rows pairwise orthogonal and each row's
/// self-product positive (relative tolerance kSctTolerance).
TheoryReport check_theory(const FiniteGroup& group, const std::vector<std::vector<int>>& superclasses,
                          const std::vector<ClassFunction>& characters);

/// A validated supercharacter theory: superclasses plus one character value
/// per superclass for each supercharacter.
class SuperTheory {
 public:
  /// Throws InvalidTheory listing every failed check.
  SuperTheory(FiniteGroup group, std::vector<std::vector<int>> superclasses, std::vector<ClassFunction> characters);

  const FiniteGroup& group() const noexcept { return group_; }
  const std::vector<std::vector<int>>& superclasses() const noexcept { return superclasses_; }
  const std::vector<ClassFunction>& characters() const noexcept { return characters_; }

  int class_count() const noexcept { return static_cast<int>(superclasses_.size()); }
  double class_size(int k) const { return static_cast<double>(superclasses_[k].size()); }
  int class_of(int element) const { return class_of_[element]; }
  int identity_class() const { return class_of_[group_.identity()]; }

  /// chi(1), read from the identity's superclass.
  Complex degree(int chi) const { return characters_[chi][identity_class()]; }

 private:
  FiniteGroup group_;
  std::vector<std::vector<int>> superclasses_;
  std::vector<ClassFunction> characters_;
  std::vector<int> class_of_;
};

/// (1/|G|) sum over superclasses K of |K| phi(K) conj(psi(K)).
Complex frobenius(const ClassFunction& phi, const ClassFunction& psi, const SuperTheory& t);

/// c(chi) = chi(1) / <chi, chi>. Throws InvalidTheory on a zero self-product.
double c_of(const ClassFunction& chi, const SuperTheory& t);

/// SPl(chi) = chi(1)^2 / (|G| <chi, chi>), one entry per supercharacter.
std::vector<double> superplancherel_measure(const SuperTheory& t);

struct OrthogonalityReport {
  double max_deviation = 0.0;
  double tolerance = 0.0;
  bool pass = false;
};

/// Column relation sum_chi (c(chi)/chi(1)) chi(K1) conj(chi(K2)) =
/// (|G|/|K1|) [K1 == K2]; passes when the deviation is <= 1e-9 |G|.
OrthogonalityReport second_orthogonality(const SuperTheory& t);

/// The same relation on an unvalidated table, with c(chi)/chi(1) = 1/<chi, chi>.
OrthogonalityReport second_orthogonality(const FiniteGroup& group, const std::vector<std::vector<int>>& superclasses,
                                         const std::vector<ClassFunction>& characters);

/// A subgroup H of G with theories on both, where H's superclasses map into
/// single superclasses of G.
class SubgroupEmbedding {
 public:
  /// Checks that `injection` (H element -> G element) is an injective
  /// homomorphism and that the theories are consistent. Throws InvalidTheory.
  SubgroupEmbedding(SuperTheory sub, SuperTheory group, std::vector<int> injection);

  const SuperTheory& sub() const noexcept { return sub_; }
  const SuperTheory& group() const noexcept { return group_; }
  const std::vector<int>& injection() const noexcept { return injection_; }

  /// G-superclass containing the image of H-superclass h.
  int image_class(int h) const { return image_class_[h]; }

 private:
  SuperTheory sub_;
  SuperTheory group_;
  std::vector<int> injection_;
  std::vector<int> image_class_;
};

/// Restriction of a G-superclass function to H, per H-superclass.
ClassFunction restrict_to(const SubgroupEmbedding& e, const ClassFunction& psi);

/// SInd(phi)(K) = |G| / (|H| |K|) * sum of phi over the elements of H in K.
ClassFunction superinduce(const SubgroupEmbedding& e, const ClassFunction& phi);

struct ReciprocityReport {
  Complex lhs;  // <SInd phi, psi>_G
  Complex rhs;  // <phi, Res psi>_H
  double deviation = 0.0;
  bool pass = false;
};

ReciprocityReport reciprocity_check(const SubgroupEmbedding& e, const ClassFunction& phi, const ClassFunction& psi);

/// rho(gamma, chi) = (|H|/|G|) (chi(1)/gamma(1)) <SInd gamma, chi> / <chi, chi>;
/// rows indexed by supercharacters of H, columns by those of G.
std::vector<std::vector<double>> transition(const SubgroupEmbedding& e);

struct TransitionReport {
  std::vector<std::vector<double>> matrix;
  double max_row_sum_deviation = 0.0;   // |sum_chi rho(gamma, chi) - 1|
  double max_pushforward_deviation = 0.0;  // |sum_gamma rho SPl_H - SPl_G|
  bool pass = false;
};

TransitionReport check_transition(const SubgroupEmbedding& e);

// Built-in theories.

/// Irreducible theory of Z/n: singleton superclasses, chi_m(k) = exp(2 pi i m k / n).
SuperTheory cyclic_irreducible_theory(int n);

/// The theory with superclasses {1}, G \ {1} and characters 1, rho_G - 1.
SuperTheory coarse_theory(const FiniteGroup& group);

/// A unitriangular group U_n(F_q) with the set-partition supercharacter
/// theory. Superclasses are unions, over nonzero labels, of the two-sided
/// orbits of u - 1; character values come from character_value().
struct UnitriangularTheory {
  int n = 0;
  std::int64_t q = 0;
  std::vector<SetPartition> labels;  // row/column order of the table
  SuperTheory theory;
};

/// Needs q prime when n >= 3, and q^{n(n-1)/2} <= kMaxGroupOrder.
UnitriangularTheory unitriangular_theory(int n, std::int64_t q);

/// Z/m inside Z/n (m divides n) via k -> k n/m.
std::vector<int> cyclic_inclusion(int m, int n);

/// U_{n-1}(F_q) inside U_n(F_q) as the upper-left corner.
SubgroupEmbedding unitriangular_corner_embedding(const UnitriangularTheory& small, const UnitriangularTheory& large);

SubgroupEmbedding identity_embedding(const SuperTheory& t);

}  // namespace spl
