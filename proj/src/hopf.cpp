#include "wreathkit/hopf.hpp"

#include "wreathkit/errors.hpp"

namespace wreathkit {

namespace {

/// Component-wise multiplication on A1⊗...⊗Ak, given per-leg multiplications;
/// a map (A1⊗..⊗Ak)⊗(A1⊗..⊗Ak) -> A1⊗..⊗Ak.
Morphism componentwise_mult(FieldSpec f, const std::vector<Morphism>& mults) {
  const auto k = mults.size();
  std::vector<SpaceRef> legs;
  for (const auto& m : mults) legs.push_back(m.cod()[0]);
  std::vector<SpaceRef> source;
  source.insert(source.end(), legs.begin(), legs.end());
  source.insert(source.end(), legs.begin(), legs.end());
  std::vector<std::size_t> order;
  for (std::size_t i = 0; i < k; ++i) {
    order.push_back(i);
    order.push_back(k + i);
  }
  Morphism perm = leg_permutation(f, source, order);
  Morphism prod = mults[0];
  for (std::size_t i = 1; i < k; ++i) prod = kron(prod, mults[i]);
  return compose(prod, perm);
}

/// (Δ⊗Id)Δ, the three-fold comultiplication.
Morphism comult2(FieldSpec f, const SpaceRef& h, const Morphism& comult) {
  return compose(kron(comult, identity(f, h)), comult);
}

std::vector<SpaceRef> action_legs(const Morphism& act) {
  // act : H⊗U -> U; U may span several legs
  return std::vector<SpaceRef>(act.dom().begin() + 1, act.dom().end());
}

/// Interleaving permutation for k actions: (h_1..h_k, U_1..U_k) -> (h_1 U_1 .. h_k U_k).
Morphism interleave_perm(FieldSpec f, const SpaceRef& h, const std::vector<Morphism>& acts) {
  const auto k = acts.size();
  std::vector<SpaceRef> source(k, h);
  std::vector<std::vector<SpaceRef>> legs;
  for (const auto& a : acts) {
    legs.push_back(action_legs(a));
    source.insert(source.end(), legs.back().begin(), legs.back().end());
  }
  std::vector<std::size_t> order;
  std::size_t base = k;
  for (std::size_t i = 0; i < k; ++i) {
    order.push_back(i);
    for (std::size_t j = 0; j < legs[i].size(); ++j) order.push_back(base + j);
    base += legs[i].size();
  }
  return leg_permutation(f, source, order);
}

/// Diagonal left H-action on a tensor product of modules:
/// h⊗u_1⊗..⊗u_k -> h_1·u_1 ⊗ .. ⊗ h_k·u_k.
Morphism diagonal_action(FieldSpec f, const SpaceRef& h, const Morphism& comult,
                         const std::vector<Morphism>& acts) {
  const auto k = acts.size();
  if (k == 0) throw Error("diagonal_action: no legs");
  Morphism split = identity(f, h);  // H -> H^{⊗k}
  for (std::size_t i = 1; i < k; ++i)
    split = compose(kron(comult, identity(f, std::vector<SpaceRef>(i - 1, h))), split);
  std::vector<SpaceRef> legs;
  for (const auto& a : acts) {
    auto l = action_legs(a);
    legs.insert(legs.end(), l.begin(), l.end());
  }
  Morphism perm = interleave_perm(f, h, acts);
  Morphism prod = acts[0];
  for (std::size_t i = 1; i < k; ++i) prod = kron(prod, acts[i]);
  return compose3(prod, perm, kron(split, identity(f, legs)));
}

/// ε-induced trivial action H⊗U -> U.
Morphism trivial_action(FieldSpec f, const Morphism& eps, const SpaceRef& u) {
  return kron(eps, identity(f, u));
}

/// Diagonal action by the components of an element t ∈ H^{⊗k}:
/// u_1⊗..⊗u_k -> Σ t¹·u_1 ⊗ .. ⊗ t^k·u_k.
Morphism component_action(FieldSpec f, const Morphism& element /* I -> H^{⊗k} */,
                          const std::vector<Morphism>& acts) {
  const auto k = acts.size();
  const SpaceRef h = element.cod()[0];
  std::vector<SpaceRef> legs;
  for (const auto& a : acts) {
    auto l = action_legs(a);
    legs.insert(legs.end(), l.begin(), l.end());
  }
  Morphism perm = interleave_perm(f, h, acts);
  Morphism prod = acts[0];
  for (std::size_t i = 1; i < k; ++i) prod = kron(prod, acts[i]);
  return compose3(prod, perm, kron(element, identity(f, legs)));
}

}  // namespace

CheckReport check_quasi_bialgebra(const QuasiBialgebra& q) {
  const FieldSpec f = q.h.field();
  const SpaceRef& H = q.h.carrier;
  const Morphism id_h = q.h.id();
  const Morphism fl = flip(f, H, H);

  CheckReport rep;
  rep.kind = "quasi-bialgebra";
  rep.structure = H.name;

  rep.items.push_back(boolean_item("algebra", "algebra axioms", is_algebra(q.h)));

  Morphism m2 = componentwise_mult(f, {q.h.mult, q.h.mult});
  rep.items.push_back(check_item("delta_mult", "Δ multiplicative",
                                 compose(q.delta, q.h.mult),
                                 compose(m2, kron(q.delta, q.delta))));
  rep.items.push_back(check_item("delta_unit", "Δ(1)=1⊗1", compose(q.delta, q.h.unit),
                                 kron(q.h.unit, q.h.unit)));
  rep.items.push_back(check_item("eps_mult", "ε multiplicative", compose(q.eps, q.h.mult),
                                 kron(q.eps, q.eps)));
  rep.items.push_back(check_item("eps_unit", "ε(1)=1", compose(q.eps, q.h.unit),
                                 identity(f, std::vector<SpaceRef>{})));
  rep.items.push_back(check_item("counit_l", "counit", compose(kron(q.eps, id_h), q.delta),
                                 id_h));
  rep.items.push_back(check_item("counit_r", "counit", compose(kron(id_h, q.eps), q.delta),
                                 id_h));

  Morphism m3 = componentwise_mult(f, {q.h.mult, q.h.mult, q.h.mult});
  Morphism d2l = compose(kron(q.delta, id_h), q.delta);   // (Δ⊗id)Δ
  Morphism d2r = compose(kron(id_h, q.delta), q.delta);   // (id⊗Δ)Δ
  rep.items.push_back(check_item("quasi_coassoc", "Φ·(Δ⊗id)Δ = (id⊗Δ)Δ·Φ",
                                 compose(m3, kron(q.phi, d2l)),
                                 compose(m3, kron(d2r, q.phi))));

  Morphism m4 = componentwise_mult(f, {q.h.mult, q.h.mult, q.h.mult, q.h.mult});
  auto mul4 = [&](const Morphism& x, const Morphism& y) { return compose(m4, kron(x, y)); };
  Morphism c_l = mul4(mul4(kron(q.h.unit, q.phi),
                           compose(kron3(id_h, q.delta, id_h), q.phi)),
                      kron(q.phi, q.h.unit));
  Morphism c_r = mul4(compose(kron3(id_h, id_h, q.delta), q.phi),
                      compose(kron3(q.delta, id_h, id_h), q.phi));
  rep.items.push_back(check_item("cocycle", "3-cocycle condition on Φ", c_l, c_r));

  rep.items.push_back(check_item("normal", "(id⊗ε⊗id)Φ = 1⊗1",
                                 compose(kron3(id_h, q.eps, id_h), q.phi),
                                 kron(q.h.unit, q.h.unit)));

  Morphism one3 = kron3(q.h.unit, q.h.unit, q.h.unit);
  rep.items.push_back(check_item("invertible", "Φ·Φ⁻¹ = 1⊗1⊗1",
                                 compose(m3, kron(q.phi, q.phi_inv)), one3));
  rep.items.push_back(check_item("invertible2", "Φ⁻¹·Φ = 1⊗1⊗1",
                                 compose(m3, kron(q.phi_inv, q.phi)), one3));
  return rep;
}

CheckReport check_comodule_algebra(const QuasiBialgebra& q, const ComoduleAlgebra& ca) {
  const FieldSpec f = q.h.field();
  const SpaceRef& H = q.h.carrier;
  const Morphism id_h = q.h.id();
  const Morphism id_a = ca.afr.id();

  CheckReport rep;
  rep.kind = "comodule-algebra";
  rep.structure = ca.afr.carrier.name;

  rep.items.push_back(boolean_item("algebra", "algebra axioms", is_algebra(ca.afr)));

  Morphism m_ah = componentwise_mult(f, {ca.afr.mult, q.h.mult});
  rep.items.push_back(check_item("rho_mult", "ρ algebra map", compose(ca.rho, ca.afr.mult),
                                 compose(m_ah, kron(ca.rho, ca.rho))));
  rep.items.push_back(check_item("rho_unit", "ρ(1)=1⊗1", compose(ca.rho, ca.afr.unit),
                                 kron(ca.afr.unit, q.h.unit)));
  rep.items.push_back(
      check_item("rho_counit", "(id⊗ε)ρ = id", compose(kron(id_a, q.eps), ca.rho), id_a));

  Morphism m_ahh = componentwise_mult(f, {ca.afr.mult, q.h.mult, q.h.mult});
  Morphism lhs = compose(m_ahh, kron(ca.phi_rho, compose(kron(ca.rho, id_h), ca.rho)));
  Morphism rhs = compose(m_ahh, kron(compose(kron(id_a, q.delta), ca.rho), ca.phi_rho));
  rep.items.push_back(check_item("quasi_coassoc", "Φ_ρ·(ρ⊗id)ρ = (id⊗Δ)ρ·Φ_ρ", lhs, rhs));

  Morphism m_ahhh = componentwise_mult(f, {ca.afr.mult, q.h.mult, q.h.mult, q.h.mult});
  auto mul4 = [&](const Morphism& x, const Morphism& y) { return compose(m_ahhh, kron(x, y)); };
  Morphism c_l = mul4(mul4(kron(ca.afr.unit, q.phi),
                           compose(kron3(id_a, q.delta, id_h), ca.phi_rho)),
                      kron(ca.phi_rho, q.h.unit));
  Morphism c_r = mul4(compose(kron3(id_a, id_h, q.delta), ca.phi_rho),
                      compose(kron3(ca.rho, id_h, id_h), ca.phi_rho));
  rep.items.push_back(check_item("cocycle", "3-cocycle condition on Φ_ρ", c_l, c_r));

  rep.items.push_back(check_item("normal_mid", "(id⊗ε⊗id)Φ_ρ = 1⊗1",
                                 compose(kron3(id_a, q.eps, id_h), ca.phi_rho),
                                 kron(ca.afr.unit, q.h.unit)));
  rep.items.push_back(check_item("normal_last", "(id⊗id⊗ε)Φ_ρ = 1⊗1",
                                 compose(kron3(id_a, id_h, q.eps), ca.phi_rho),
                                 kron(ca.afr.unit, q.h.unit)));

  Morphism one = kron3(ca.afr.unit, q.h.unit, q.h.unit);
  rep.items.push_back(check_item("invertible", "Φ_ρ·Φ_ρ⁻¹ = 1",
                                 compose(m_ahh, kron(ca.phi_rho, ca.phi_rho_inv)), one));
  rep.items.push_back(check_item("invertible2", "Φ_ρ⁻¹·Φ_ρ = 1",
                                 compose(m_ahh, kron(ca.phi_rho_inv, ca.phi_rho)), one));
  return rep;
}

namespace {

/// Φ-conjugation associator on 𝒜⊗𝒜⊗𝒜: u⊗v⊗w -> Σ X¹·u·x¹ ⊗ X²·v·x² ⊗ X³·w·x³.
Morphism phi_conj_assoc(const QuasiBialgebra& q, const SpaceRef& a, const Morphism& lact,
                        const Morphism& ract) {
  const FieldSpec f = q.h.field();
  const SpaceRef& H = q.h.carrier;
  // both-sided action H⊗𝒜⊗H -> 𝒜
  Morphism bact = compose(ract, kron(lact, identity(f, H)));
  std::vector<SpaceRef> source{H, H, H, a, a, a, H, H, H};
  std::vector<std::size_t> order{0, 3, 6, 1, 4, 7, 2, 5, 8};
  Morphism perm = leg_permutation(f, source, order);
  Morphism acts = kron3(bact, bact, bact);
  return compose3(acts, perm,
                  kron3(q.phi, identity(f, {a, a, a}), q.phi_inv));
}

}  // namespace

CheckReport check_bimodule_algebra(const QuasiBialgebra& q, const BimoduleAlgebra& ba) {
  const FieldSpec f = q.h.field();
  const SpaceRef& H = q.h.carrier;
  const SpaceRef& A = ba.carrier;
  const Morphism id_h = q.h.id();
  const Morphism id_a = identity(f, A);

  CheckReport rep;
  rep.kind = "bimodule-algebra";
  rep.structure = A.name;

  rep.items.push_back(
      boolean_item("left_module", "module axioms", is_left_module(q.h, {A}, ba.lact)));
  rep.items.push_back(
      boolean_item("right_module", "module axioms", is_right_module(q.h, {A}, ba.ract)));
  rep.items.push_back(check_item("commute", "bimodule compatibility",
                                 compose(ba.lact, kron(id_h, ba.ract)),
                                 compose(ba.ract, kron(ba.lact, id_h))));

  // h·(uv) = (h1·u)(h2·v)
  Morphism perm_l = leg_permutation(f, {H, H, A, A}, {0, 2, 1, 3});
  rep.items.push_back(check_item(
      "mult_left_linear", "h·(uv)=(h1·u)(h2·v)", compose(ba.lact, kron(id_h, ba.mult)),
      compose4(ba.mult, kron(ba.lact, ba.lact), perm_l, kron3(q.delta, id_a, id_a))));
  // (uv)·h = (u·h1)(v·h2)
  Morphism perm_r = leg_permutation(f, {A, A, H, H}, {0, 2, 1, 3});
  rep.items.push_back(check_item(
      "mult_right_linear", "(uv)·h=(u·h1)(v·h2)", compose(ba.ract, kron(ba.mult, id_h)),
      compose4(ba.mult, kron(ba.ract, ba.ract), perm_r, kron3(id_a, id_a, q.delta))));

  rep.items.push_back(check_item("unit_left_linear", "h·1 = ε(h)1",
                                 compose(ba.lact, kron(id_h, ba.unit)),
                                 compose(ba.unit, q.eps)));
  rep.items.push_back(check_item("unit_right_linear", "1·h = ε(h)1",
                                 compose(ba.ract, kron(ba.unit, id_h)),
                                 compose(ba.unit, q.eps)));

  rep.items.push_back(check_item("unital", "unit laws",
                                 compose(ba.mult, kron(ba.unit, id_a)), id_a));
  rep.items.push_back(check_item("unital_r", "unit laws",
                                 compose(ba.mult, kron(id_a, ba.unit)), id_a));

  Morphism assoc = phi_conj_assoc(q, A, ba.lact, ba.ract);
  rep.items.push_back(check_item("phi_assoc", "(uv)w = (X¹ux¹)((X²vx²)(X³wx³))",
                                 compose(ba.mult, kron(ba.mult, id_a)),
                                 compose3(ba.mult, kron(id_a, ba.mult), assoc)));
  return rep;
}

CheckReport check_bimodule_coalgebra(const QuasiBialgebra& q, const BimoduleCoalgebra& bc) {
  const FieldSpec f = q.h.field();
  const SpaceRef& H = q.h.carrier;
  const SpaceRef& C = bc.carrier;
  const Morphism id_h = q.h.id();
  const Morphism id_c = identity(f, C);

  CheckReport rep;
  rep.kind = "bimodule-coalgebra";
  rep.structure = C.name;

  rep.items.push_back(
      boolean_item("left_module", "module axioms", is_left_module(q.h, {C}, bc.lact)));
  rep.items.push_back(
      boolean_item("right_module", "module axioms", is_right_module(q.h, {C}, bc.ract)));
  rep.items.push_back(check_item("commute", "bimodule compatibility",
                                 compose(bc.lact, kron(id_h, bc.ract)),
                                 compose(bc.ract, kron(bc.lact, id_h))));

  Morphism perm_l = leg_permutation(f, {H, H, C, C}, {0, 2, 1, 3});
  rep.items.push_back(check_item(
      "comult_left_linear", "Δ(h·c)=h1·c1⊗h2·c2", compose(bc.comult, bc.lact),
      compose3(kron(bc.lact, bc.lact), perm_l, kron(q.delta, bc.comult))));
  Morphism perm_r = leg_permutation(f, {C, C, H, H}, {0, 2, 1, 3});
  rep.items.push_back(check_item(
      "comult_right_linear", "Δ(c·h)=c1·h1⊗c2·h2", compose(bc.comult, bc.ract),
      compose3(kron(bc.ract, bc.ract), perm_r, kron(bc.comult, q.delta))));
  rep.items.push_back(check_item("counit_left_linear", "ε(h·c)=ε(h)ε(c)",
                                 compose(bc.counit, bc.lact), kron(q.eps, bc.counit)));
  rep.items.push_back(check_item("counit_right_linear", "ε(c·h)=ε(c)ε(h)",
                                 compose(bc.counit, bc.ract), kron(bc.counit, q.eps)));

  rep.items.push_back(check_item("counit_l", "counit law",
                                 compose(kron(bc.counit, id_c), bc.comult), id_c));
  rep.items.push_back(check_item("counit_r", "counit law",
                                 compose(kron(id_c, bc.counit), bc.comult), id_c));

  Morphism assoc = phi_conj_assoc(q, C, bc.lact, bc.ract);
  rep.items.push_back(check_item("phi_coassoc", "a∘(Δ⊗id)Δ = (id⊗Δ)Δ",
                                 compose3(assoc, kron(bc.comult, id_c), bc.comult),
                                 compose(kron(id_c, bc.comult), bc.comult)));
  return rep;
}

QuasiWreath quasi_smash_wreath(const QuasiBialgebra& q, const ComoduleAlgebra& ca,
                               const BimoduleAlgebra& ba) {
  const FieldSpec f = q.h.field();
  const SpaceRef& H = q.h.carrier;
  const SpaceRef& Af = ca.afr.carrier;  // 𝔄, the wreath's algebra A
  const SpaceRef& X = ba.carrier;       // 𝒜, the wreath's object X
  const Morphism id_h = q.h.id();
  const Morphism id_af = ca.afr.id();
  const Morphism id_x = identity(f, X);

  {
    CheckReport pre_q = check_quasi_bialgebra(q);
    CheckReport pre_ca = check_comodule_algebra(q, ca);
    CheckReport pre_ba = check_bimodule_algebra(q, ba);
    if (!pre_q.all_pass()) throw InvalidInput("quasi-bialgebra H fails its axioms");
    if (!pre_ca.all_pass()) throw InvalidInput("comodule algebra fails its axioms");
    if (!pre_ba.all_pass()) throw InvalidInput("bimodule algebra fails its axioms");
  }

  WreathDatum d;
  d.a = ca.afr;
  d.x = X;
  // ψ(φ⊗𝔞) = 𝔞_0 ⊗ φ·𝔞_1
  d.psi = compose3(kron(id_af, ba.ract), leg_permutation(f, {X, Af, H}, {1, 0, 2}),
                   kron(id_x, ca.rho));
  // ζ(φ⊗φ′) = x̃¹ ⊗ (φ·x̃²)(φ′·x̃³)
  d.zeta = compose3(kron(id_af, compose(ba.mult, kron(ba.ract, ba.ract))),
                    leg_permutation(f, {Af, H, H, X, X}, {0, 3, 1, 4, 2}),
                    kron(ca.phi_rho_inv, identity(f, {X, X})));
  d.sigma = kron(ca.afr.unit, ba.unit);

  CheckReport rep;
  rep.kind = "quasi-wreath";
  rep.structure = "(" + Af.name + "," + X.name + ")";

  // well-formedness: the data are morphisms of ₕM (𝔄 carries the trivial
  // action, 𝒜 its left action)
  Morphism act_x = ba.lact;
  Morphism act_af = trivial_action(f, q.eps, Af);
  Morphism act_xa = diagonal_action(f, H, q.delta, {act_x, act_af});
  Morphism act_ax = diagonal_action(f, H, q.delta, {act_af, act_x});
  Morphism act_xx = diagonal_action(f, H, q.delta, {act_x, act_x});
  rep.items.push_back(check_item("hlin_psi", "ψ left H-linear", compose(d.psi, act_xa),
                                 compose(act_ax, kron(id_h, d.psi))));
  rep.items.push_back(check_item("hlin_zeta", "ζ left H-linear", compose(d.zeta, act_xx),
                                 compose(act_ax, kron(id_h, d.zeta))));
  rep.items.push_back(check_item("hlin_sigma", "σ left H-linear",
                                 compose(act_ax, kron(id_h, d.sigma)),
                                 compose(d.sigma, q.eps)));

  const Morphism& m = d.a.mult;
  const Morphism& u = d.a.unit;
  const Morphism id_a = id_af;
  const Morphism mx = kron(m, id_x);

  rep.items.push_back(check_item(
      "wr1a", "eq:ta.1 (unpacked)", compose(d.psi, kron(id_x, m)),
      compose3(mx, kron(id_a, d.psi), kron(d.psi, id_a))));
  rep.items.push_back(
      check_item("wr1b", "eq:ta.2 (unpacked)", compose(d.psi, kron(id_x, u)), kron(u, id_x)));
  rep.items.push_back(check_item(
      "wr3", "eq:apdf1.1 (unpacked)",
      compose3(mx, kron(id_a, d.psi), kron(d.zeta, id_a)),
      compose4(mx, kron(id_a, d.zeta), kron(d.psi, id_x), kron(id_x, d.psi))));

  // eq:apdf1.2 with the ₕM reassociator: the right-hand route re-brackets
  // X⊗X⊗X, costing a diagonal Φ⁻¹-action.
  Morphism lam_inv = component_action(f, q.phi_inv, {ba.lact, ba.lact, ba.lact});
  rep.items.push_back(check_item(
      "wr4", "eq:apdf1.2 (unpacked, Φ⁻¹ inserted)",
      compose4(mx, kron(id_a, d.zeta), kron(d.psi, id_x), kron(id_x, d.zeta)),
      compose(compose3(mx, kron(id_a, d.zeta), kron(d.zeta, id_x)), lam_inv)));

  rep.items.push_back(check_item(
      "wr2", "eq:apdf2.1 (unpacked)", compose(mx, kron(id_a, d.sigma)),
      compose3(mx, kron(id_a, d.psi), kron(d.sigma, id_a))));
  rep.items.push_back(check_item(
      "wr6", "eq:apdf2.2 (unpacked)",
      compose4(mx, kron(id_a, d.zeta), kron(d.psi, id_x), kron(id_x, d.sigma)),
      kron(u, id_x)));
  rep.items.push_back(check_item(
      "wr5", "eq:apdf2.3 (unpacked)",
      compose3(mx, kron(id_a, d.zeta), kron(d.sigma, id_x)), kron(u, id_x)));

  // the wreath product is the generalized quasi-smash product, entry-wise
  Morphism mw = multwpr(d);
  Morphism closed;
  {
    // 𝔞⊗φ⊗𝔞′⊗φ′ -> 𝔞𝔞′_0x̃¹ ⊗ (φ·𝔞′_1x̃²)(φ′·x̃³)
    Morphism s1 = kron4(id_a, id_x, ca.rho, id_x);
    Morphism s2 = kron(kron4(id_a, id_x, id_af, id_h), kron(id_x, ca.phi_rho_inv));
    Morphism perm = leg_permutation(f, {Af, X, Af, H, X, Af, H, H},
                                    {0, 2, 5, 1, 3, 6, 4, 7});
    Morphism m3a = compose(m, kron(m, id_a));
    Morphism ract2 = compose(ba.ract, kron(ba.ract, id_h));
    Morphism s3 = kron3(m3a, ract2, ba.ract);
    Morphism s4 = kron(id_a, ba.mult);
    closed = compose(s4, compose3(s3, perm, compose(s2, s1)));
  }
  rep.items.push_back(check_item("product_formula", "𝔄#̄𝒜 multiplication", mw, closed));

  // algebra in ₕM: associativity up to the diagonal Φ-action, unit σ
  Morphism act_c = diagonal_action(f, H, q.delta, {act_af, act_x});
  Morphism assoc_c;
  {
    std::vector<SpaceRef> source{H, H, H, Af, X, Af, X, Af, X};
    std::vector<std::size_t> order{0, 3, 4, 1, 5, 6, 2, 7, 8};
    Morphism perm = leg_permutation(f, source, order);
    assoc_c = compose3(kron3(act_c, act_c, act_c), perm,
                       kron(q.phi, identity(f, {Af, X, Af, X, Af, X})));
  }
  Morphism id_c = identity(f, {Af, X});
  rep.items.push_back(check_item("product_phi_assoc", "associative in ₕM",
                                 compose(mw, kron(mw, id_c)),
                                 compose3(mw, kron(id_c, mw), assoc_c)));
  rep.items.push_back(check_item("product_unit_l", "unit σ",
                                 compose(mw, kron(d.sigma, id_c)), id_c));
  rep.items.push_back(check_item("product_unit_r", "unit σ",
                                 compose(mw, kron(id_c, d.sigma)), id_c));

  return QuasiWreath{std::move(d), std::move(rep)};
}

QuasiCowreath quasi_cowreath(const QuasiBialgebra& q, const ComoduleAlgebra& ca,
                             const BimoduleCoalgebra& bc) {
  const FieldSpec f = q.h.field();
  const SpaceRef& H = q.h.carrier;
  const SpaceRef& Af = ca.afr.carrier;
  const SpaceRef& C = bc.carrier;
  const Morphism id_h = q.h.id();
  const Morphism id_af = ca.afr.id();
  const Morphism id_c = identity(f, C);

  {
    CheckReport pre_q = check_quasi_bialgebra(q);
    CheckReport pre_ca = check_comodule_algebra(q, ca);
    CheckReport pre_bc = check_bimodule_coalgebra(q, bc);
    if (!pre_q.all_pass()) throw InvalidInput("quasi-bialgebra H fails its axioms");
    if (!pre_ca.all_pass()) throw InvalidInput("comodule algebra fails its axioms");
    if (!pre_bc.all_pass()) throw InvalidInput("bimodule coalgebra fails its axioms");
  }

  CowreathDatum d;
  d.a = ca.afr;
  d.x = C;
  d.psi = compose3(kron(id_af, bc.ract), leg_permutation(f, {C, Af, H}, {1, 0, 2}),
                   kron(id_c, ca.rho));
  // δ(c) = X̃¹ ⊗ c1·X̃² ⊗ c2·X̃³
  d.delta = compose3(kron3(id_af, bc.ract, bc.ract),
                     leg_permutation(f, {Af, H, H, C, C}, {0, 3, 1, 4, 2}),
                     kron(ca.phi_rho, bc.comult));
  d.f = compose(ca.afr.unit, bc.counit);

  CheckReport rep;
  rep.kind = "quasi-cowreath";
  rep.structure = "(" + Af.name + "," + C.name + ")";

  Morphism act_c = bc.lact;
  Morphism act_af = trivial_action(f, q.eps, Af);
  Morphism act_ca = diagonal_action(f, H, q.delta, {act_c, act_af});
  Morphism act_ac = diagonal_action(f, H, q.delta, {act_af, act_c});
  Morphism act_acc = diagonal_action(f, H, q.delta, {act_af, act_c, act_c});
  rep.items.push_back(check_item("hlin_psi", "ψ left H-linear", compose(d.psi, act_ca),
                                 compose(act_ac, kron(id_h, d.psi))));
  rep.items.push_back(check_item("hlin_delta", "δ left H-linear", compose(d.delta, act_c),
                                 compose(act_acc, kron(id_h, d.delta))));
  rep.items.push_back(check_item("hlin_f", "f left H-linear", compose(d.f, act_c),
                                 compose(act_af, kron(id_h, d.f))));

  const Morphism& m = d.a.mult;
  const Morphism& u = d.a.unit;
  const Morphism id_a = id_af;
  const Morphism id_x = id_c;
  const Morphism mx = kron(m, id_x);
  const Morphism mxx = kron3(m, id_x, id_x);
  const Morphism id_xx = identity(f, {C, C});
  const Morphism id_xxx = identity(f, {C, C, C});

  rep.items.push_back(check_item(
      "wr1a", "eq:ta.1 (unpacked)", compose(d.psi, kron(id_x, m)),
      compose3(mx, kron(id_a, d.psi), kron(d.psi, id_a))));
  rep.items.push_back(
      check_item("wr1b", "eq:ta.2 (unpacked)", compose(d.psi, kron(id_x, u)), kron(u, id_x)));
  rep.items.push_back(check_item(
      "cwr2", "eq:pdf1.1 / eq:rightAlinspecquasi", compose3(mxx, kron(id_a, d.delta), d.psi),
      compose4(mxx, kron3(id_a, d.psi, id_x), kron3(id_a, id_x, d.psi),
               kron(d.delta, id_a))));

  // eq:pdf1.2 with the ₕM reassociator acting on the three output C-legs.
  Morphism lam = component_action(f, q.phi, {bc.lact, bc.lact, bc.lact});
  Morphism lhs_coass = compose4(kron(m, id_xxx), kron3(id_a, d.psi, id_xx),
                                kron3(id_a, id_x, d.delta), d.delta);
  Morphism rhs_coass = compose3(kron(m, id_xxx), kron3(id_a, d.delta, id_x), d.delta);
  rep.items.push_back(check_item("cwr4", "eq:pdf1.2 (unpacked, Φ inserted)", lhs_coass,
                                 compose(kron(id_a, lam), rhs_coass)));

  rep.items.push_back(check_item("cwr3", "eq:pdf2.1 (unpacked)",
                                 compose3(m, kron(id_a, d.f), d.psi),
                                 compose(m, kron(d.f, id_a))));
  rep.items.push_back(check_item(
      "cwr6", "eq:pdf2.2 (unpacked)", compose3(mx, kron3(id_a, d.f, id_x), d.delta),
      kron(u, id_x)));
  rep.items.push_back(check_item(
      "cwr5", "eq:pdf2.3 (unpacked)",
      compose4(mx, kron(id_a, d.psi), kron3(id_a, id_x, d.f), d.delta), kron(u, id_x)));

  return QuasiCowreath{std::move(d), std::move(rep)};
}

CheckReport check_quasi_hopf_bimodule(const QuasiBialgebra& q, const ComoduleAlgebra& ca,
                                      const BimoduleCoalgebra& bc, const QuasiHopfBimodule& m) {
  const FieldSpec f = q.h.field();
  const SpaceRef& H = q.h.carrier;
  const SpaceRef& C = bc.carrier;
  const Morphism id_h = q.h.id();
  const Morphism id_m = identity(f, m.carrier);
  const Morphism id_c = identity(f, C);

  CheckReport rep;
  rep.kind = "quasi-hopf-bimodule";
  rep.structure = spaces_str(m.carrier);

  rep.items.push_back(
      boolean_item("h_module", "left H-module", is_left_module(q.h, m.carrier, m.lact_h)));
  rep.items.push_back(
      boolean_item("a_module", "right 𝔄-module", is_right_module(ca.afr, m.carrier, m.ract_a)));
  rep.items.push_back(check_item("bimodule", "h·(m·𝔞) = (h·m)·𝔞",
                                 compose(m.lact_h, kron(id_h, m.ract_a)),
                                 compose(m.ract_a, kron(m.lact_h, ca.afr.id()))));

  // ρ(h·m) = h1·m0 ⊗ h2·m1
  Morphism act_mc = diagonal_action(f, H, q.delta, {m.lact_h, bc.lact});
  rep.items.push_back(check_item("rho_hlinear", "ρ left H-linear",
                                 compose(m.rho_c, m.lact_h),
                                 compose(act_mc, kron(id_h, m.rho_c))));

  // ρ(m·𝔞) = m0·𝔞_0 ⊗ m1·𝔞_1
  Morphism perm;
  {
    std::vector<SpaceRef> src = m.carrier;
    src.push_back(C);
    src.push_back(ca.afr.carrier);
    src.push_back(H);
    std::vector<std::size_t> order;
    for (std::size_t i = 0; i < m.carrier.size(); ++i) order.push_back(i);
    order.push_back(m.carrier.size() + 1);  // 𝔄 leg
    order.push_back(m.carrier.size());      // C leg
    order.push_back(m.carrier.size() + 2);  // H leg
    perm = leg_permutation(f, src, order);
  }
  Morphism rhs_ra = compose3(kron(m.ract_a, bc.ract), perm, kron(m.rho_c, ca.rho));
  rep.items.push_back(check_item("rAlin", "eq:rAlin (unpacked)",
                                 compose(m.rho_c, m.ract_a), rhs_ra));

  // X¹·m00 ⊗ X²·m01 ⊗ X³·m1 = m0·X̃¹ ⊗ m1_1·X̃² ⊗ m1_2·X̃³
  Morphism lam = component_action(f, q.phi, {m.lact_h, bc.lact, bc.lact});
  Morphism lhs_c1 = compose3(lam, kron(m.rho_c, id_c), m.rho_c);
  Morphism rhs_c1;
  {
    std::vector<SpaceRef> src = m.carrier;
    src.push_back(C);
    src.push_back(ca.afr.carrier);
    src.push_back(H);
    src.push_back(H);
    // m0, m1 -> m0, [X̃ legs], Δ(m1): arrange (m0, X̃¹) (m1_1, X̃²) (m1_2, X̃³)
    // built as: (ract_a ⊗ ract_C ⊗ ract_C) ∘ perm ∘ (ρ ⊗ Φ_ρ) then Δ_C
    std::vector<SpaceRef> s2 = m.carrier;
    s2.push_back(C);
    s2.push_back(C);
    s2.push_back(ca.afr.carrier);
    s2.push_back(H);
    s2.push_back(H);
    std::vector<std::size_t> order;
    const std::size_t n = m.carrier.size();
    for (std::size_t i = 0; i < n; ++i) order.push_back(i);
    order.push_back(n + 2);  // 𝔄
    order.push_back(n);      // C1
    order.push_back(n + 3);  // H
    order.push_back(n + 1);  // C2
    order.push_back(n + 4);  // H
    Morphism perm2 = leg_permutation(f, s2, order);
    rhs_c1 = compose3(kron3(m.ract_a, bc.ract, bc.ract), perm2,
                      compose(kron3(id_m, bc.comult, identity(f, ca.phi_rho.cod())),
                              kron(m.rho_c, ca.phi_rho)));
  }
  rep.items.push_back(check_item("c1", "eq:c1 (unpacked, Φ inserted)", lhs_c1, rhs_c1));

  rep.items.push_back(check_item(
      "c2", "eq:c2 (unpacked)",
      compose3(m.ract_a, kron(id_m, compose(ca.afr.unit, bc.counit)), m.rho_c), id_m));
  return rep;
}

CheckReport check_dual_quasi_bialgebra(const DualQuasiData& d) {
  const FieldSpec f = d.a.field();
  const SpaceRef& H = d.h.carrier;
  const Morphism id_h = identity(f, H);
  const Morphism& cm = d.h.comult;
  const Morphism& ce = d.h.counit;

  CheckReport rep;
  rep.kind = "dual-quasi-bialgebra";
  rep.structure = H.name;

  rep.items.push_back(boolean_item("coalgebra", "coalgebra axioms",
                                   check_coalgebra(d.h).all_pass()));
  rep.items.push_back(check_item("unit_l", "unital", compose(d.mult, kron(d.unit, id_h)),
                                 id_h));
  rep.items.push_back(check_item("unit_r", "unital", compose(d.mult, kron(id_h, d.unit)),
                                 id_h));
  rep.items.push_back(check_item("delta_unit", "Δ(1)=1⊗1", compose(cm, d.unit),
                                 kron(d.unit, d.unit)));
  rep.items.push_back(check_item("eps_unit", "ε(1)=1", compose(ce, d.unit),
                                 identity(f, std::vector<SpaceRef>{})));

  Morphism perm22 = leg_permutation(f, {H, H, H, H}, {0, 2, 1, 3});
  rep.items.push_back(check_item("delta_mult", "Δ multiplicative", compose(cm, d.mult),
                                 compose3(kron(d.mult, d.mult), perm22, kron(cm, cm))));
  rep.items.push_back(check_item("eps_mult", "ε multiplicative", compose(ce, d.mult),
                                 kron(ce, ce)));

  // quasi-associativity: h1(h′1 h″1)·φ(h2,h′2,h″2) = φ(h1,h′1,h″1)·(h2h′2)h″2
  Morphism d3 = compose(leg_permutation(f, {H, H, H, H, H, H}, {0, 2, 4, 1, 3, 5}),
                        kron3(cm, cm, cm));
  rep.items.push_back(check_item(
      "quasi_assoc", "associativity up to φ",
      compose(kron(compose(d.mult, kron(id_h, d.mult)), d.phi), d3),
      compose(kron(d.phi, compose(d.mult, kron(d.mult, id_h))), d3)));

  // dual 3-cocycle
  Morphism cm2 = comult2(f, H, cm);
  Morphism lhs, rhs;
  {
    // legs after split: a1,a2 | b1,b2,b3 | c1,c2,c3 | d1,d2
    Morphism split = kron4(cm, cm2, cm2, cm);
    std::vector<SpaceRef> legs(10, H);
    Morphism perm = leg_permutation(f, legs, {2, 5, 8, 0, 3, 6, 9, 1, 4, 7});
    Morphism phi_mid = compose(d.phi, kron3(id_h, d.mult, id_h));
    lhs = compose3(kron3(d.phi, phi_mid, d.phi), perm, split);
  }
  {
    Morphism split = kron4(cm, cm, cm, cm);
    std::vector<SpaceRef> legs(8, H);
    Morphism perm = leg_permutation(f, legs, {0, 2, 4, 6, 1, 3, 5, 7});
    Morphism phi_l = compose(d.phi, kron3(id_h, id_h, d.mult));
    Morphism phi_r = compose(d.phi, kron3(d.mult, id_h, id_h));
    rhs = compose3(kron(phi_l, phi_r), perm, split);
  }
  rep.items.push_back(check_item("cocycle", "dual 3-cocycle condition", lhs, rhs));

  rep.items.push_back(check_item("normal", "φ(h,1,h′)=ε(h)ε(h′)",
                                 compose(d.phi, kron3(id_h, d.unit, id_h)), kron(ce, ce)));

  Morphism d3conv = compose(leg_permutation(f, {H, H, H, H, H, H}, {0, 2, 4, 1, 3, 5}),
                            kron3(cm, cm, cm));
  Morphism eps3 = kron3(ce, ce, ce);
  rep.items.push_back(check_item("invertible", "φ*φ⁻¹ = ε⊗ε⊗ε",
                                 compose(kron(d.phi, d.phi_inv), d3conv), eps3));
  rep.items.push_back(check_item("invertible2", "φ⁻¹*φ = ε⊗ε⊗ε",
                                 compose(kron(d.phi_inv, d.phi), d3conv), eps3));
  return rep;
}

QuasiWreath dual_quasi_crossed(const DualQuasiData& d) {
  const FieldSpec f = d.a.field();
  const SpaceRef& H = d.h.carrier;
  const SpaceRef& A = d.a.carrier;
  const Morphism id_h = identity(f, H);
  const Morphism id_a = d.a.id();
  const Morphism& cm = d.h.comult;

  {
    CheckReport pre = check_dual_quasi_bialgebra(d);
    if (!pre.all_pass()) throw InvalidInput("dual quasi-bialgebra fails its axioms");
    if (!is_algebra(d.a)) throw InvalidInput("A fails the algebra axioms");
  }

  WreathDatum w;
  w.a = d.a;
  w.x = H;
  w.psi = compose3(kron(d.act, id_h), leg_permutation(f, {H, H, A}, {0, 2, 1}),
                   kron(cm, id_a));
  w.zeta = compose3(kron(d.tau, d.mult), leg_permutation(f, {H, H, H, H}, {0, 2, 1, 3}),
                    kron(cm, cm));
  w.sigma = kron(d.a.unit, d.unit);

  CheckReport rep;
  rep.kind = "dual-quasi-crossed";
  rep.structure = "(" + A.name + "," + H.name + ")";

  // colinearity in M^H (right coactions: Δ on H, trivial on A)
  auto coact_h = cm;
  Morphism coact_a = kron(id_a, d.unit);
  auto tensor_coact = [&](const Morphism& ru, const Morphism& rv) {
    // U⊗V -> U⊗V⊗H via (u0 ⊗ v0 ⊗ u1 v1)
    std::vector<SpaceRef> src;
    src.insert(src.end(), ru.cod().begin(), ru.cod().end());
    src.insert(src.end(), rv.cod().begin(), rv.cod().end());
    const std::size_t nu = ru.cod().size();
    const std::size_t nv = rv.cod().size();
    std::vector<std::size_t> order;
    for (std::size_t i = 0; i + 1 < nu; ++i) order.push_back(i);
    for (std::size_t i = 0; i + 1 < nv; ++i) order.push_back(nu + i);
    order.push_back(nu - 1);
    order.push_back(nu + nv - 1);
    Morphism perm = leg_permutation(f, src, order);
    std::vector<SpaceRef> rest(perm.cod().begin(), perm.cod().end() - 2);
    return compose3(kron(identity(f, rest), d.mult), perm, kron(ru, rv));
  };
  auto colinear = [&](const Morphism& g, const Morphism& rho_dom, const Morphism& rho_cod) {
    return check_item("", "", compose(rho_cod, g),
                      compose(kron(g, id_h), rho_dom));
  };
  Morphism rho_ha = tensor_coact(coact_h, coact_a);
  Morphism rho_ah = tensor_coact(coact_a, coact_h);
  Morphism rho_hh = tensor_coact(coact_h, coact_h);
  {
    CheckItem c1 = colinear(w.psi, rho_ha, rho_ah);
    c1.id = "colin_psi";
    c1.tag = "ψ right H-colinear";
    rep.items.push_back(c1);
    CheckItem c2 = colinear(w.zeta, rho_hh, rho_ah);
    c2.id = "colin_zeta";
    c2.tag = "ζ right H-colinear";
    rep.items.push_back(c2);
    CheckItem c3 = check_item("colin_sigma", "σ right H-colinear",
                              compose(rho_ah, w.sigma), kron(w.sigma, d.unit));
    rep.items.push_back(c3);
  }

  // measuring
  Morphism perm_meas = leg_permutation(f, {H, H, A, A}, {0, 2, 1, 3});
  rep.items.push_back(check_item(
      "meas_mult", "h·(aa′)=(h1·a)(h2·a′)", compose(d.act, kron(id_h, d.a.mult)),
      compose4(d.a.mult, kron(d.act, d.act), perm_meas, kron3(cm, id_a, id_a))));
  rep.items.push_back(check_item("meas_unit", "h·1=ε(h)1",
                                 compose(d.act, kron(id_h, d.a.unit)),
                                 compose(d.a.unit, d.h.counit)));
  rep.items.push_back(check_item("meas_one", "1·a=a", compose(d.act, kron(d.unit, id_a)),
                                 id_a));

  // twisted module condition
  Morphism split2 = kron3(cm, cm, id_a);
  Morphism tw_l = compose3(
      d.a.mult,
      kron(compose(d.act, kron(id_h, d.act)), d.tau),
      compose(leg_permutation(f, {H, H, H, H, A}, {0, 2, 4, 1, 3}), split2));
  Morphism tw_r = compose3(
      d.a.mult, kron(d.tau, compose(d.act, kron(d.mult, id_a))),
      compose(leg_permutation(f, {H, H, H, H, A}, {0, 2, 1, 3, 4}), split2));
  rep.items.push_back(check_item("twisted", "twisted module condition", tw_l, tw_r));

  // cocycle condition (with φ⁻¹)
  Morphism cm2 = comult2(f, H, cm);
  Morphism co_l = compose3(
      d.a.mult,
      kron(compose(d.act, kron(id_h, d.tau)), compose(d.tau, kron(id_h, d.mult))),
      compose(leg_permutation(f, {H, H, H, H, H, H}, {0, 2, 4, 1, 3, 5}),
              kron3(cm, cm, cm)));
  Morphism co_r = compose3(
      d.a.mult,
      kron(d.tau, kron(compose(d.tau, kron(d.mult, id_h)), d.phi_inv)),
      compose(leg_permutation(f, {H, H, H, H, H, H, H, H}, {0, 3, 1, 4, 6, 2, 5, 7}),
              kron3(cm2, cm2, cm)));
  rep.items.push_back(check_item("cocycle", "cocycle condition (φ⁻¹)", co_l, co_r));

  // normality
  rep.items.push_back(check_item("normal_l", "τ(1⊗h)=ε(h)1",
                                 compose(d.tau, kron(d.unit, id_h)),
                                 compose(d.a.unit, d.h.counit)));
  rep.items.push_back(check_item("normal_r", "τ(h⊗1)=ε(h)1",
                                 compose(d.tau, kron(id_h, d.unit)),
                                 compose(d.a.unit, d.h.counit)));

  // product equals the crossed product A#̄_τH entry-wise
  Morphism mw = multwpr(w);
  Morphism closed;
  {
    Morphism split = kron4(id_a, cm2, id_a, cm);
    Morphism perm = leg_permutation(f, {A, H, H, H, A, H, H}, {0, 1, 4, 2, 5, 3, 6});
    Morphism first = compose(d.a.mult, kron(d.a.mult, id_a));
    closed = compose4(kron(first, id_h), kron4(id_a, d.act, d.tau, d.mult), perm, split);
  }
  rep.items.push_back(check_item("product_formula", "A#̄_τH multiplication", mw, closed));

  // the crossed product is a right H-comodule algebra via a#̄h -> a#̄h1⊗h2
  Morphism rho_c = kron(id_a, cm);
  Morphism rho_cc = tensor_coact(rho_c, rho_c);
  rep.items.push_back(check_item("product_colinear", "multiplication H-colinear",
                                 compose(rho_c, mw), compose(kron(mw, id_h), rho_cc)));

  return QuasiWreath{std::move(w), std::move(rep)};
}

QuasiBialgebra quasi_group_algebra(const FieldSpec& f, int n, bool nontrivial_phi) {
  QuasiBialgebra q;
  q.h = group_algebra(f, "H", n);
  CoalgebraDatum co = group_like_coalgebra(f, "H", n);
  q.delta = co.comult;
  q.eps = co.counit;
  const SpaceRef& H = q.h.carrier;

  if (!nontrivial_phi) {
    q.phi = kron3(q.h.unit, q.h.unit, q.h.unit);
    q.phi_inv = q.phi;
    return q;
  }
  if (n != 2)
    throw FieldIncompatible("nontrivial reassociator only built in for k[Z/2]");
  if (f.characteristic() == 2)
    throw FieldIncompatible("nontrivial Φ needs p = (1-g)/2; 2 is not invertible over " +
                            f.str());
  // Φ = 1⊗1⊗1 - 2 p⊗p⊗p with p = (1-g)/2; Φ² = 1, so Φ⁻¹ = Φ.
  Scalar half = Scalar::from_ratio(f, 1, 2);
  Mat p_el(f, 2, 1);
  p_el.at(0, 0) = half;
  p_el.at(1, 0) = -half;
  Morphism p({}, {H}, std::move(p_el));
  Morphism ppp = kron3(p, p, p);
  Morphism one3 = kron3(q.h.unit, q.h.unit, q.h.unit);
  q.phi = one3 - ppp.scaled(Scalar::from_int(f, 2));
  q.phi_inv = q.phi;
  return q;
}

ComoduleAlgebra regular_comodule_algebra(const QuasiBialgebra& q) {
  ComoduleAlgebra ca;
  ca.afr = q.h;
  ca.afr.carrier.name = "Af";
  const SpaceRef& Af = ca.afr.carrier;
  const SpaceRef& H = q.h.carrier;
  ca.afr.mult = q.h.mult.relabeled({Af, Af}, {Af});
  ca.afr.unit = q.h.unit.relabeled({}, {Af});
  ca.rho = q.delta.relabeled({Af}, {Af, H});
  ca.phi_rho = q.phi.relabeled({}, {Af, H, H});
  ca.phi_rho_inv = q.phi_inv.relabeled({}, {Af, H, H});
  return ca;
}

namespace {

/// The order-2 algebra automorphism of k[Z/2] sending g to -g, as a matrix.
Morphism sign_automorphism(const FieldSpec& f, const SpaceRef& s) {
  Mat m(f, 2, 2);
  m.at(0, 0) = Scalar::one(f);
  m.at(1, 1) = -Scalar::one(f);
  return Morphism({s}, {s}, std::move(m));
}

/// Action of k[Z/n] through a designated order-dividing automorphism power:
/// basis g^i acts as aut^i.
Morphism automorphism_action(const FieldSpec& f, const SpaceRef& h, const Morphism& aut,
                             const SpaceRef& carrier) {
  const int n = static_cast<int>(h.dim);
  Mat act(f, static_cast<std::size_t>(carrier.dim),
          static_cast<std::size_t>(h.dim * carrier.dim));
  Morphism power = identity(f, carrier);
  for (int i = 0; i < n; ++i) {
    for (std::int64_t r = 0; r < carrier.dim; ++r)
      for (std::int64_t c = 0; c < carrier.dim; ++c)
        act.at(static_cast<std::size_t>(r), static_cast<std::size_t>(i * carrier.dim + c)) =
            power.mat().at(static_cast<std::size_t>(r), static_cast<std::size_t>(c));
    power = compose(aut, power);
  }
  return Morphism({h, carrier}, {carrier}, std::move(act));
}

}  // namespace

BimoduleAlgebra sign_bimodule_algebra(const QuasiBialgebra& q) {
  const FieldSpec f = q.h.field();
  if (q.h.carrier.dim != 2) throw FieldIncompatible("sign bimodule algebra needs H = k[Z/2]");
  if (f.characteristic() == 2)
    throw FieldIncompatible("sign action is trivial over characteristic 2");
  AlgebraDatum base = group_algebra(f, "Cal", 2);
  BimoduleAlgebra ba;
  ba.carrier = base.carrier;
  ba.mult = base.mult;
  ba.unit = base.unit;
  Morphism aut = sign_automorphism(f, ba.carrier);
  Morphism lact = automorphism_action(f, q.h.carrier, aut, ba.carrier);
  ba.lact = lact;
  ba.ract = compose(lact, flip(f, ba.carrier, q.h.carrier));
  return ba;
}

BimoduleAlgebra right_module_algebra_kzn(const QuasiBialgebra& q, bool sign_action) {
  const FieldSpec f = q.h.field();
  AlgebraDatum base = group_algebra(f, "B", 2);
  BimoduleAlgebra ba;
  ba.carrier = base.carrier;
  ba.mult = base.mult;
  ba.unit = base.unit;
  // trivial left action via ε, right action by the sign automorphism (or ε)
  ba.lact = kron(q.eps, identity(f, ba.carrier));
  if (sign_action) {
    if (q.h.carrier.dim != 2 || f.characteristic() == 2)
      throw FieldIncompatible("sign action needs k[Z/2] and char != 2");
    Morphism aut = sign_automorphism(f, ba.carrier);
    ba.ract = compose(automorphism_action(f, q.h.carrier, aut, ba.carrier),
                      flip(f, ba.carrier, q.h.carrier));
  } else {
    ba.ract = kron(identity(f, ba.carrier), q.eps);
  }
  return ba;
}

BimoduleCoalgebra regular_bimodule_coalgebra(const QuasiBialgebra& q) {
  const FieldSpec f = q.h.field();
  const int n = static_cast<int>(q.h.carrier.dim);
  CoalgebraDatum co = group_like_coalgebra(f, "C", n);
  BimoduleCoalgebra bc;
  bc.carrier = co.carrier;
  bc.comult = co.comult;
  bc.counit = co.counit;
  AlgebraDatum alg = group_algebra(f, "C", n);
  bc.lact = alg.mult.relabeled({q.h.carrier, bc.carrier}, {bc.carrier});
  bc.ract = alg.mult.relabeled({bc.carrier, q.h.carrier}, {bc.carrier});
  return bc;
}

DualQuasiData dual_quasi_kz2(const FieldSpec& f, bool nontrivial_phi) {
  if (nontrivial_phi && f.characteristic() == 2)
    throw FieldIncompatible("nontrivial dual reassociator needs -1 != 1; use char != 2");
  DualQuasiData d;
  d.h = group_like_coalgebra(f, "H", 2);
  AlgebraDatum halg = group_algebra(f, "H", 2);
  d.mult = halg.mult;
  d.unit = halg.unit;

  const SpaceRef& H = d.h.carrier;
  Mat phi(f, 1, 8);
  for (int a = 0; a < 2; ++a)
    for (int b = 0; b < 2; ++b)
      for (int c = 0; c < 2; ++c) {
        bool neg = nontrivial_phi && a == 1 && b == 1 && c == 1;
        phi.at(0, static_cast<std::size_t>(a * 4 + b * 2 + c)) =
            neg ? -Scalar::one(f) : Scalar::one(f);
      }
  d.phi = Morphism({H, H, H}, {}, phi);
  d.phi_inv = d.phi;  // values are ±1

  d.a = group_algebra(f, "A", 2);
  if (nontrivial_phi) {
    Morphism aut = sign_automorphism(f, d.a.carrier);
    d.act = automorphism_action(f, H, aut, d.a.carrier);
    // τ(g^i ⊗ g^j) = g^{ij}
    Mat tau(f, 2, 4);
    tau.at(0, 0) = Scalar::one(f);
    tau.at(0, 1) = Scalar::one(f);
    tau.at(0, 2) = Scalar::one(f);
    tau.at(1, 3) = Scalar::one(f);
    d.tau = Morphism({H, H}, {d.a.carrier}, std::move(tau));
  } else {
    d.act = kron(d.h.counit, d.a.id());
    d.tau = compose(d.a.unit, kron(d.h.counit, d.h.counit));
  }
  return d;
}

}  // namespace wreathkit
