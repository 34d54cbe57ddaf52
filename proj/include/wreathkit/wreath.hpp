#pragma once

#include <optional>

#include "wreathkit/em.hpp"

namespace wreathkit {

/// Wreath datum (A, X, ψ, ζ, σ) in the ground category.
struct WreathDatum {
  AlgebraDatum a;
  SpaceRef x;
  Morphism psi;    // X⊗A -> A⊗X
  Morphism zeta;   // X⊗X -> A⊗X
  Morphism sigma;  // I -> A⊗X
};

/// Cowreath datum (A, X, ψ, δ, f).
struct CowreathDatum {
  AlgebraDatum a;
  SpaceRef x;
  Morphism psi;    // X⊗A -> A⊗X
  Morphism delta;  // X -> A⊗X⊗X
  Morphism f;      // X -> A
};

/// Flat route: the seven wreath identities, reported in the order
/// ta1, ta2, righAlinmult, Multass, unitAbilin, unit1, unit2 with ids
/// wr1a, wr1b, wr3, wr4, wr2, wr6, wr5 (the eq:wr* names of Prop. 5.1).
/// Every call cross-checks the verdicts against the DSL equation file route.
CheckReport check_wreath(const WreathDatum& d);
/// EM route: (X, ψ, ζ, σ) as an algebra in EM(C)(A), same ids/order.
CheckReport check_wreath_em(const WreathDatum& d);

/// Dual: ids wr1a, wr1b, cwr2, cwr4, cwr3, cwr6, cwr5.
CheckReport check_cowreath(const CowreathDatum& d);
CheckReport check_cowreath_em(const CowreathDatum& d);

/// Prop. fact(co)ring: entwining of an algebra or coalgebra structure on X
/// with A. On pass the induced (co)wreath datum is emitted.
struct EntwiningCheck {
  CheckReport report;
  std::optional<WreathDatum> wreath;      // algebra case
  std::optional<CowreathDatum> cowreath;  // coalgebra case
};

EntwiningCheck check_entwining_algebra(const AlgebraDatum& a, const AlgebraDatum& x_alg,
                                       const Morphism& psi);
EntwiningCheck check_entwining_coalgebra(const AlgebraDatum& a, const CoalgebraDatum& x_coalg,
                                         const Morphism& psi);

/// Algebra laws on an arbitrary tensor-product carrier.
bool is_algebra_on(const std::vector<SpaceRef>& carrier, const Morphism& mult,
                   const Morphism& unit);
CheckReport check_algebra_on(const std::vector<SpaceRef>& carrier, const Morphism& mult,
                             const Morphism& unit);

/// The wreath product A#X: multiplication eq:multwpr, unit σ.
struct RingOnAX {
  WreathDatum base;
  std::vector<SpaceRef> carrier;  // [A, X]
  Morphism product;               // (A⊗X)⊗(A⊗X) -> A⊗X
  Morphism unit;                  // = σ
};

RingOnAX wreath_product(const WreathDatum& d);
/// eq:multwpr as a bare morphism, no validity requirement.
Morphism multwpr(const WreathDatum& d);

/// eq:psideltwreath recovery of (ψ, ζ) from a unital associative algebra on
/// A⊗X with unit σ, plus the eq:psideltwreathcond verdict.
struct RecoverResult {
  Morphism psi;
  Morphism zeta;
  bool verdict = false;  // both eq:psideltwreathcond identities hold
  CheckReport report;
  std::optional<WreathDatum> datum;  // present iff verdict
};

RecoverResult recover_wreath_data(const AlgebraDatum& a, const SpaceRef& x,
                                  const Morphism& product, const Morphism& sigma);

/// Quotient-level A-ring verdicts on C⊗_A C (no validity precondition), with
/// ids paired to the flat axioms: q_rightlin↔wr3, q_assoc/q3_assoc↔wr4,
/// q_eta_rightlin↔wr2, q_unit_r↔wr6, q_unit_l↔wr5.
CheckReport ring_quotient_report(const WreathDatum& d);
/// Spec operation: requires a valid wreath; verifies the A-ring of
/// Prop. 3.18(i) at quotient level and the flat/quotient concordance.
CheckReport ring_from_wreath(const WreathDatum& d);

/// The A-coring on A⊗X from a cowreath: Δ_C into the computed quotient.
struct CoringOnAX {
  CowreathDatum base;
  std::vector<SpaceRef> carrier;  // [A, X]
  QuotientSpace q;                // C⊗_A C
  Morphism delta_q;               // C -> Q
  Morphism delta_flat;            // canonical flat lift C -> C⊗C
  Morphism counit;                // C -> A
  CheckReport report;             // quotient-level axioms
};

CheckReport coring_quotient_report(const CowreathDatum& d);
CoringOnAX coring_from_cowreath(const CowreathDatum& d);

/// Quotient-level A-ring axioms for a given product on A⊗X (the A-actions are
/// μ = m_A⊗Id and ν via ψ).
CheckReport check_ring_on_ax(const AlgebraDatum& a, const SpaceRef& x, const Morphism& psi,
                             const Morphism& product, const Morphism& sigma);
/// Quotient-level A-coring axioms for a given flat comultiplication lift and
/// counit on A⊗X.
CheckReport check_coring_on_ax(const AlgebraDatum& a, const SpaceRef& x, const Morphism& psi,
                               const Morphism& delta_flat, const Morphism& counit);

/// Right module over the A-ring: right A-action plus X-action, eq:rmr1-rmr3.
struct WreathModule {
  std::vector<SpaceRef> carrier;
  Morphism nu_a;  // M⊗A -> M
  Morphism nu_x;  // M⊗X -> M
};

CheckReport check_wreath_module(const WreathDatum& d, const WreathModule& m);

bool is_module_over(const RingOnAX& ring, const std::vector<SpaceRef>& carrier,
                    const Morphism& nu /* M⊗(A⊗X) -> M */);

/// Thm. 5.4 forward map: ν_M := ν^X∘(ν^A⊗Id_X).
Morphism wreath_module_to_product_module(const WreathDatum& d, const WreathModule& m);
/// Thm. 5.4 backward map: ν^A := ν_M(Id⊗(m_A⊗Id_X)(Id⊗σ)), ν^X := ν_M(Id⊗η_A⊗Id_X).
WreathModule product_module_to_wreath_module(const WreathDatum& d,
                                             const std::vector<SpaceRef>& carrier,
                                             const Morphism& nu);

/// Right generalized entwined module over a cowreath: eq:rAlin, eq:c1, eq:c2.
struct EntwinedModule {
  std::vector<SpaceRef> carrier;
  Morphism nu_a;   // M⊗A -> M
  Morphism rho_x;  // M -> M⊗X
};

/// Flat verdicts plus the quotient-level comodule route over the coring; the
/// two routes are computed independently and compared per axiom.
CheckReport check_entwined_module(const CowreathDatum& d, const EntwinedModule& m);

CheckReport check_entwined_morphism(const CowreathDatum& d, const EntwinedModule& src,
                                    const EntwinedModule& tgt, const Morphism& theta);

/// Seeded generators of valid data: a flip entwining over k[Z/n] transported
/// by a random change of basis on A and X. Validity is exact by construction.
WreathDatum random_valid_wreath(Rng& rng, const FieldSpec& f, int n_a, int n_x);
CowreathDatum random_valid_cowreath(Rng& rng, const FieldSpec& f, int n_a, int n_x);

/// Group algebra k[Z/n] with its usual bialgebra structure maps.
AlgebraDatum group_algebra(const FieldSpec& f, const std::string& name, int n);
CoalgebraDatum group_like_coalgebra(const FieldSpec& f, const std::string& name, int n);

}  // namespace wreathkit
