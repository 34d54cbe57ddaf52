#pragma once

#include "wreathkit/bimodule.hpp"

namespace wreathkit {

/// Object (X, ψ) of EM(C)(A): ψ : X⊗A → A⊗X subject to eq:ta.
struct EMObject {
  AlgebraDatum a;
  SpaceRef x;
  Morphism psi;  // X⊗A -> A⊗X

  Morphism id_x() const { return identity(psi.field(), x); }
};

/// Verdicts ta1, ta2 (the two identities of eq:ta).
CheckReport check_em_object(const AlgebraDatum& a, const SpaceRef& x, const Morphism& psi);
inline CheckReport check_em_object(const EMObject& o) { return check_em_object(o.a, o.x, o.psi); }

/// Constructs and validates eagerly; throws InvalidInput when eq:ta fails.
EMObject make_em_object(const AlgebraDatum& a, const SpaceRef& x, const Morphism& psi);

/// The unit object (I, Id_A).
EMObject em_unit_object(const AlgebraDatum& a);

/// Morphism ρ : (X, ψ) → (Y, φ) of EM(C)(A): ρ : X → A⊗Y subject to
/// eq:2cellpc.
struct EMMorphism {
  EMObject source, target;
  Morphism rho;  // X -> A⊗Y
};

CheckReport em_morphism_valid(const EMMorphism& r);

/// Identity morphism of (X, ψ), namely η_A⊗Id_X.
EMMorphism em_id(const EMObject& o);

/// Vertical composition ρ′∘ρ = (m_A⊗Id)(Id_A⊗ρ′)ρ per eq:compte.
EMMorphism em_compose(const EMMorphism& r2, const EMMorphism& r1);

/// (X,ψ)⊗(Y,φ) = (X⊗Y, (ψ⊗Id_Y)(Id_X⊗φ)) per eq:mstrtamb.
EMObject em_tensor_objects(const EMObject& o1, const EMObject& o2);

/// ρ⊗ρ′ := ρ′⊘ρ per eq:tensorprodmorph.
EMMorphism em_tensor_morphisms(const EMMorphism& r1, const EMMorphism& r2);

/// Morphism ρ : X → Y of Mnd(C)(A) between (X,ψ) and (Y,φ):
/// φ(ρ⊗Id_A) = (Id_A⊗ρ)ψ.
struct MndMorphism {
  EMObject source, target;
  Morphism rho;  // X -> Y
};

CheckReport mnd_morphism_valid(const MndMorphism& r);

/// The functor F : Mnd(C)(A) → EM(C)(A); F(ρ) = η_A⊗ρ.
EMMorphism mnd_to_em(const MndMorphism& r);

}  // namespace wreathkit
