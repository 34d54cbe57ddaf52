#pragma once

#include <optional>
#include <vector>

#include "wreathkit/report.hpp"

namespace wreathkit {

/// An algebra in the ground category: multiplication A⊗A→A and unit I→A.
struct AlgebraDatum {
  SpaceRef carrier;
  Morphism mult;  // A⊗A -> A
  Morphism unit;  // I -> A

  FieldSpec field() const { return mult.field(); }
  Morphism id() const { return identity(mult.field(), carrier); }
};

/// A coalgebra: comultiplication C→C⊗C and counit C→I.
struct CoalgebraDatum {
  SpaceRef carrier;
  Morphism comult;  // C -> C⊗C
  Morphism counit;  // C -> I
};

CheckReport check_algebra(const AlgebraDatum& a);
bool is_algebra(const AlgebraDatum& a);
CheckReport check_coalgebra(const CoalgebraDatum& c);
bool is_coalgebra(const CoalgebraDatum& c);

bool is_right_module(const AlgebraDatum& a, const std::vector<SpaceRef>& carrier,
                     const Morphism& act /* M⊗A -> M */);
bool is_left_module(const AlgebraDatum& a, const std::vector<SpaceRef>& carrier,
                    const Morphism& act /* A⊗M -> M */);

/// A bimodule over (A, B); the carrier may itself be a tensor product.
struct BimoduleDatum {
  std::vector<SpaceRef> carrier;
  Morphism left;   // A⊗M -> M
  Morphism right;  // M⊗B -> M
  AlgebraDatum over_left;
  AlgebraDatum over_right;
};

CheckReport check_bimodule(const BimoduleDatum& b);

/// A computed coequalizer M⊗_A N: projection, a section picked from the
/// non-pivot coordinates of the deterministic rref of the relation space,
/// and the quotient dimension.
struct QuotientSpace {
  std::vector<SpaceRef> ambient;
  SpaceRef qspace;
  Morphism proj;     // ambient -> Q
  Morphism section;  // Q -> ambient
  std::int64_t qdim = 0;

  /// proj∘flat∘section: the map induced on quotients by a flat map.
  Morphism induce_from_flat(const Morphism& flat) const;
};

/// Quotient of the ambient tensor product by the column span of `relations`.
QuotientSpace quotient_by_relations(const std::vector<SpaceRef>& ambient, const Mat& relations);

/// Checks that proj_cod ∘ flat kills ker(proj_dom), i.e. the flat map
/// descends to the quotients.
bool descends(const QuotientSpace& dom, const Morphism& flat, const QuotientSpace& cod);
bool descends_to(const QuotientSpace& dom, const Morphism& flat_into_q /* ambient -> Q' */);

/// The coequalizer M⊗_A N of ν_M⊗Id and Id⊗μ_N.
QuotientSpace tensor_over(const AlgebraDatum& a, const std::vector<SpaceRef>& m,
                          const Morphism& nu_m /* M⊗A -> M */, const std::vector<SpaceRef>& n,
                          const Morphism& mu_n /* A⊗N -> N */);

/// Spec-level wrapper: both arguments bimodules over matching middle algebra.
QuotientSpace tensor_over_A(const BimoduleDatum& m, const BimoduleDatum& n);

/// The canonical isomorphism together with its precomputed inverse.
struct CanonicalIso {
  QuotientSpace q;
  Morphism map;  // Q -> target
  Morphism inv;  // target -> Q
};

/// Υ_M : M⊗_A A → M with Υ∘proj = ν_M; inverse proj∘(Id⊗η) per eq:invcanisom1.
/// Throws NotInvertible when the module datum is broken.
CanonicalIso upsilon(const AlgebraDatum& a, const std::vector<SpaceRef>& m, const Morphism& nu_m);

/// Υ′_Y : A⊗_A Y → Y with Υ′∘proj = μ_Y; inverse proj∘(η⊗Id).
CanonicalIso upsilon_prime(const AlgebraDatum& a, const std::vector<SpaceRef>& y,
                           const Morphism& mu_y);

/// Υ_{M,X} : M⊗_A(A⊗X) → M⊗X with Υ∘proj = ν_M⊗Id_X; inverse
/// proj∘(Id_M⊗η⊗Id_X) per eq:rel1.
CanonicalIso upsilon_mx(const AlgebraDatum& a, const std::vector<SpaceRef>& m,
                        const Morphism& nu_m, const std::vector<SpaceRef>& x);

/// θ′ : (M⊗X)⊗_A Y → M⊗(X⊗_A Y), the unique map with θ′∘q = (Id_M⊗q).
/// Over a field it must be invertible; NotInvertible signals inconsistent
/// inputs.
struct ThetaPrime {
  QuotientSpace q_mx_y;  // (M⊗X)⊗_A Y
  QuotientSpace q_x_y;   // X⊗_A Y
  Morphism map;          // (M⊗X)⊗_A Y -> M⊗(X⊗_A Y)
  Morphism inv;
};

ThetaPrime theta_prime(const AlgebraDatum& a, const std::vector<SpaceRef>& m,
                       const std::vector<SpaceRef>& x, const Morphism& nu_x /* X⊗A -> X */,
                       const std::vector<SpaceRef>& y, const Morphism& mu_y /* A⊗Y -> Y */);

/// One factor of an iterated ⊗_A power.
struct QuotientFactor {
  std::vector<SpaceRef> carrier;
  std::optional<Morphism> left;   // A⊗F -> F (absent for the first factor)
  std::optional<Morphism> right;  // F⊗A -> F (absent for the last factor)
};

/// Single global quotient of the full tensor product by the sum of all
/// adjacent relation subspaces.
QuotientSpace iterated_quotient(const AlgebraDatum& a, const std::vector<QuotientFactor>& factors);

}  // namespace wreathkit
