#include "wreathkit/catalog.hpp"

#include <nlohmann/json.hpp>

#include "wreathkit/checks.hpp"
#include "wreathkit/errors.hpp"

namespace wreathkit {

using nlohmann::json;

namespace {

void require(bool ok, const std::string& what) {
  if (!ok) throw Error("catalog self-check failed: " + what);
}

json algebra_ref(const std::string& carrier, const std::string& mult,
                 const std::string& unit) {
  return json{{"carrier", carrier}, {"mult", mult}, {"unit", unit}};
}

StructureBundle trivial_wreath_bundle(const FieldSpec& f) {
  AlgebraDatum a = group_algebra(f, "A", 2);
  SpaceRef x{"X", 1};
  WreathDatum d;
  d.a = a;
  d.x = x;
  d.psi = a.id().relabeled({x, a.carrier}, {a.carrier, x});
  d.zeta = a.unit.relabeled({x, x}, {a.carrier, x});
  d.sigma = a.unit.relabeled({}, {a.carrier, x});
  require(check_wreath(d).all_pass(), "trivial wreath");
  return bundle_of_wreath(d);
}

StructureBundle flip_wreath_bundle(const FieldSpec& f, int n) {
  AlgebraDatum a = group_algebra(f, "A", n);
  AlgebraDatum xalg = group_algebra(f, "X", n);
  Morphism psi = flip(f, xalg.carrier, a.carrier);
  EntwiningCheck ent = check_entwining_algebra(a, xalg, psi);
  require(ent.wreath.has_value(), "flip entwining kz" + std::to_string(n));
  require(check_wreath(*ent.wreath).all_pass(), "flip wreath kz" + std::to_string(n));
  return bundle_of_wreath(*ent.wreath);
}

StructureBundle flip_cowreath_bundle(const FieldSpec& f, int n) {
  AlgebraDatum a = group_algebra(f, "A", n);
  CoalgebraDatum xco = group_like_coalgebra(f, "X", n);
  Morphism psi = flip(f, xco.carrier, a.carrier);
  EntwiningCheck ent = check_entwining_coalgebra(a, xco, psi);
  require(ent.cowreath.has_value(), "flip entwining (coalgebra) kz" + std::to_string(n));
  require(check_cowreath(*ent.cowreath).all_pass(), "flip cowreath kz" + std::to_string(n));
  return bundle_of_cowreath(*ent.cowreath);
}

StructureBundle entwining_flip_bundle(const FieldSpec& f, int n) {
  AlgebraDatum a = group_algebra(f, "A", n);
  AlgebraDatum xalg = group_algebra(f, "X", n);
  Morphism psi = flip(f, xalg.carrier, a.carrier);
  require(check_entwining_algebra(a, xalg, psi).report.all_pass(), "flip entwining");
  StructureBundle b;
  b.field = f;
  SpaceRef A = a.carrier, X = xalg.carrier;
  b.add_morphism("m", a.mult);
  b.add_morphism("u", a.unit);
  b.add_morphism("mx", xalg.mult);
  b.add_morphism("ux", xalg.unit);
  b.add_morphism("psi", psi);
  b.structures["entwining"] = json{
      {"algebra", algebra_ref("A", "m", "u")},
      {"x_algebra", algebra_ref("X", "mx", "ux")},
      {"psi", "psi"}};
  return b;
}

void add_quasi_structures(StructureBundle& b, const QuasiBialgebra& q,
                          const ComoduleAlgebra& ca) {
  b.add_morphism("m", q.h.mult);
  b.add_morphism("u", q.h.unit);
  b.add_morphism("delta", q.delta);
  b.add_morphism("eps", q.eps);
  b.add_morphism("phi", q.phi);
  b.add_morphism("phi_inv", q.phi_inv);
  b.structures["quasi_bialgebra"] = json{
      {"algebra", algebra_ref(q.h.carrier.name, "m", "u")},
      {"delta", "delta"},
      {"eps", "eps"},
      {"phi", "phi"},
      {"phi_inv", "phi_inv"}};
  b.add_morphism("m_af", ca.afr.mult);
  b.add_morphism("u_af", ca.afr.unit);
  b.add_morphism("rho", ca.rho);
  b.add_morphism("phi_rho", ca.phi_rho);
  b.add_morphism("phi_rho_inv", ca.phi_rho_inv);
  b.structures["comodule_algebra"] = json{
      {"algebra", algebra_ref(ca.afr.carrier.name, "m_af", "u_af")},
      {"rho", "rho"},
      {"phi_rho", "phi_rho"},
      {"phi_rho_inv", "phi_rho_inv"}};
}

StructureBundle quasi_bundle(const FieldSpec& f, int n, bool nontrivial) {
  QuasiBialgebra q = quasi_group_algebra(f, n, nontrivial);
  require(check_quasi_bialgebra(q).all_pass(), "quasi k[Z/n] axioms");
  ComoduleAlgebra ca = regular_comodule_algebra(q);
  require(check_comodule_algebra(q, ca).all_pass(), "regular comodule algebra");

  StructureBundle b;
  b.field = f;
  add_quasi_structures(b, q, ca);

  if (nontrivial) {
    BimoduleAlgebra ba = sign_bimodule_algebra(q);
    require(check_bimodule_algebra(q, ba).all_pass(), "sign bimodule algebra");
    QuasiWreath qw = quasi_smash_wreath(q, ca, ba);
    require(qw.report.all_pass(), "quasi smash wreath identities");
    b.add_morphism("lact_cal", ba.lact);
    b.add_morphism("ract_cal", ba.ract);
    b.add_morphism("m_cal", ba.mult);
    b.add_morphism("u_cal", ba.unit);
    b.structures["bimodule_algebra"] = json{{"carrier", ba.carrier.name},
                                            {"lact", "lact_cal"},
                                            {"ract", "ract_cal"},
                                            {"mult", "m_cal"},
                                            {"unit", "u_cal"}};
    b.add_morphism("qw_psi", qw.datum.psi);
    b.add_morphism("qw_zeta", qw.datum.zeta);
    b.add_morphism("qw_sigma", qw.datum.sigma);
    b.structures["quasi_wreath"] = json{
        {"algebra", algebra_ref(ca.afr.carrier.name, "m_af", "u_af")},
        {"X", ba.carrier.name},
        {"psi", "qw_psi"},
        {"zeta", "qw_zeta"},
        {"sigma", "qw_sigma"}};
    BimoduleCoalgebra bc = regular_bimodule_coalgebra(q);
    require(check_bimodule_coalgebra(q, bc).all_pass(), "regular bimodule coalgebra");
    QuasiCowreath qc = quasi_cowreath(q, ca, bc);
    require(qc.report.all_pass(), "quasi cowreath identities");
    b.add_morphism("lact_c", bc.lact);
    b.add_morphism("ract_c", bc.ract);
    b.add_morphism("delta_c", bc.comult);
    b.add_morphism("eps_c", bc.counit);
    b.structures["bimodule_coalgebra"] = json{{"carrier", bc.carrier.name},
                                              {"lact", "lact_c"},
                                              {"ract", "ract_c"},
                                              {"comult", "delta_c"},
                                              {"counit", "eps_c"}};
    b.add_morphism("qc_psi", qc.datum.psi);
    b.add_morphism("qc_delta", qc.datum.delta);
    b.add_morphism("qc_f", qc.datum.f);
    b.structures["quasi_cowreath"] = json{
        {"algebra", algebra_ref(ca.afr.carrier.name, "m_af", "u_af")},
        {"X", bc.carrier.name},
        {"psi", "qc_psi"},
        {"delta", "qc_delta"},
        {"f", "qc_f"}};
  } else if (n == 2) {
    // a strict wreath: the right generalized smash product with a right
    // module algebra (trivial left action)
    bool sign = f.characteristic() != 2;
    BimoduleAlgebra ba = right_module_algebra_kzn(q, sign);
    require(check_bimodule_algebra(q, ba).all_pass(), "right module algebra");
    QuasiWreath qw = quasi_smash_wreath(q, ca, ba);
    require(qw.report.all_pass(), "generalized smash wreath identities");
    require(check_wreath(qw.datum).all_pass(), "strict wreath reduction");
    b.add_morphism("psi", qw.datum.psi);
    b.add_morphism("zeta", qw.datum.zeta);
    b.add_morphism("sigma", qw.datum.sigma);
    b.structures["wreath"] = json{
        {"algebra", algebra_ref(ca.afr.carrier.name, "m_af", "u_af")},
        {"X", ba.carrier.name},
        {"psi", "psi"},
        {"zeta", "zeta"},
        {"sigma", "sigma"}};
    b.add_morphism("lact_b", ba.lact);
    b.add_morphism("ract_b", ba.ract);
    b.add_morphism("m_b", ba.mult);
    b.add_morphism("u_b", ba.unit);
    b.structures["bimodule_algebra"] = json{{"carrier", ba.carrier.name},
                                            {"lact", "lact_b"},
                                            {"ract", "ract_b"},
                                            {"mult", "m_b"},
                                            {"unit", "u_b"}};
  }
  return b;
}

StructureBundle dual_quasi_bundle(const FieldSpec& f, bool nontrivial) {
  DualQuasiData d = dual_quasi_kz2(f, nontrivial);
  require(check_dual_quasi_bialgebra(d).all_pass(), "dual quasi axioms");
  QuasiWreath qw = dual_quasi_crossed(d);
  require(qw.report.all_pass(), "dual quasi crossed system");

  StructureBundle b;
  b.field = f;
  b.add_morphism("delta", d.h.comult);
  b.add_morphism("eps", d.h.counit);
  b.add_morphism("m", d.mult);
  b.add_morphism("u", d.unit);
  b.add_morphism("phi", d.phi);
  b.add_morphism("phi_inv", d.phi_inv);
  b.add_morphism("m_a", d.a.mult);
  b.add_morphism("u_a", d.a.unit);
  b.add_morphism("act", d.act);
  b.add_morphism("tau", d.tau);
  b.structures["dual_quasi"] = json{
      {"coalgebra", {{"carrier", "H"}, {"comult", "delta"}, {"counit", "eps"}}},
      {"mult", "m"},
      {"unit", "u"},
      {"phi", "phi"},
      {"phi_inv", "phi_inv"},
      {"A", algebra_ref("A", "m_a", "u_a")},
      {"act", "act"},
      {"tau", "tau"}};
  b.add_morphism("cw_psi", qw.datum.psi);
  b.add_morphism("cw_zeta", qw.datum.zeta);
  b.add_morphism("cw_sigma", qw.datum.sigma);
  b.structures["crossed_wreath"] = json{
      {"algebra", algebra_ref("A", "m_a", "u_a")},
      {"X", "H"},
      {"psi", "cw_psi"},
      {"zeta", "cw_zeta"},
      {"sigma", "cw_sigma"}};
  if (!nontrivial) {
    // with trivial φ and τ the crossed data is a wreath in the strict sense
    WreathDatum w = qw.datum;
    require(check_wreath(w).all_pass(), "trivial crossed product is a strict wreath");
    b.structures["wreath"] = b.structures["crossed_wreath"];
  }
  return b;
}

/// The right-handed L-R smash product on k[Z/2]⊗k[Z/2]: associative and
/// unital but not a wreath product (the recovery conditions fail).
StructureBundle lr_smash_bundle(const FieldSpec& f) {
  if (f.characteristic() == 2)
    throw FieldIncompatible("the L-R smash fixture needs the sign action; use char != 2");
  AlgebraDatum a = group_algebra(f, "A", 2);  // 𝔸 = k[Z/2], bicomodule algebra
  AlgebraDatum cal = group_algebra(f, "X", 2);
  const SpaceRef& A = a.carrier;
  const SpaceRef& X = cal.carrier;
  // (u ♮ φ)(u' ♮ φ') = u u' ♮ σ^{|u'|}(φ) σ^{|u|}(φ') with σ(g) = -g
  Mat prod(f, 4, 16);
  auto sgn = [&](int act, int idx) {
    return (act == 1 && idx == 1) ? -Scalar::one(f) : Scalar::one(f);
  };
  for (int i = 0; i < 2; ++i)
    for (int k = 0; k < 2; ++k)
      for (int j = 0; j < 2; ++j)
        for (int l = 0; l < 2; ++l) {
          int row = ((i + j) % 2) * 2 + (k + l) % 2;
          int col = ((i * 2 + k) * 2 + j) * 2 + l;
          prod.at(static_cast<std::size_t>(row), static_cast<std::size_t>(col)) =
              sgn(j, k) * sgn(i, l);
        }
  Morphism product({A, X, A, X}, {A, X}, std::move(prod));
  Morphism sigma = kron(a.unit, cal.unit);
  require(is_algebra_on({A, X}, product, sigma), "L-R smash product is associative unital");
  RecoverResult rr = recover_wreath_data(a, {X.name, X.dim}, product, sigma);
  require(!rr.verdict, "L-R smash must fail eq:psideltwreathcond");

  StructureBundle b;
  b.field = f;
  b.add_morphism("m", a.mult);
  b.add_morphism("u", a.unit);
  b.add_morphism("psi", flip(f, X, A));  // the Tambara entwining of the carrier
  b.add_morphism("product", product);
  b.add_morphism("sigma", sigma);
  b.structures["ring_on_ax"] = json{
      {"algebra", algebra_ref("A", "m", "u")},
      {"X", "X"},
      {"psi", "psi"},
      {"product", "product"},
      {"sigma", "sigma"}};
  return b;
}

StructureBundle weak_bundle(const FieldSpec& f, int n) {
  WeakBialgebra w = pair_groupoid_weak_bialgebra(f, n);
  require(check_weak_bialgebra(w).all_pass(), "pair groupoid weak bialgebra");
  StructureBundle b;
  b.field = f;
  b.add_morphism("m", w.h.mult);
  b.add_morphism("u", w.h.unit);
  b.add_morphism("delta", w.delta);
  b.add_morphism("eps", w.eps);
  b.structures["weak"] = json{
      {"algebra", algebra_ref("H", "m", "u")}, {"delta", "delta"}, {"eps", "eps"}};
  return b;
}

StructureBundle bgd_from_weak_bundle(const FieldSpec& f) {
  WeakBialgebra w = pair_groupoid_weak_bialgebra(f, 2);
  LeftBialgebroid bg = weak_to_bialgebroid(w);
  require(check_left_bialgebroid(bg).all_pass(), "bialgebroid from weak M2");
  StructureBundle b;
  b.field = f;
  b.add_morphism("m_l", bg.l.mult);
  b.add_morphism("u_l", bg.l.unit);
  b.add_morphism("m", bg.h.mult);
  b.add_morphism("u", bg.h.unit);
  b.add_morphism("s", bg.s);
  b.add_morphism("t", bg.t);
  b.add_morphism("delta", bg.delta_flat);
  b.add_morphism("eps", bg.eps);
  b.structures["bialgebroid"] = json{
      {"side", "left"},
      {"base", algebra_ref("L", "m_l", "u_l")},
      {"total", algebra_ref("H", "m", "u")},
      {"s", "s"},
      {"t", "t"},
      {"delta", "delta"},
      {"eps", "eps"}};
  return b;
}

RightBialgebroid trivial_right_bialgebroid(const AlgebraDatum& h, const Morphism& delta,
                                           const Morphism& eps_to_unit) {
  const FieldSpec f = h.field();
  SpaceRef R{"R", 1};
  Mat one(f, 1, 1);
  one.at(0, 0) = Scalar::one(f);
  AlgebraDatum r{R, Morphism({R, R}, {R}, one), Morphism({}, {R}, one)};
  RightBialgebroid b;
  b.r = r;
  b.h = h;
  b.s = h.unit.relabeled({R}, {h.carrier});
  b.t = b.s;
  b.delta_flat = delta;
  b.eps = eps_to_unit.relabeled({h.carrier}, {R});
  return b;
}

StructureBundle dk_bundle_kz2(const FieldSpec& f) {
  AlgebraDatum h = group_algebra(f, "H", 2);
  CoalgebraDatum hc = group_like_coalgebra(f, "H", 2);
  RightBialgebroid hb = trivial_right_bialgebroid(h, hc.comult, hc.counit);
  require(check_right_bialgebroid(hb).all_pass(), "k[Z/2] as a right bialgebroid over k");

  DoiKoppinenDatum d;
  d.hb = hb;
  AlgebraDatum a = group_algebra(f, "Aa", 2);
  d.a = a;
  d.i_a = a.unit.relabeled({hb.r.carrier}, {a.carrier});
  d.rho_flat = hc.comult.relabeled({a.carrier}, {a.carrier, h.carrier});
  SpaceRef c{"C", 2};
  d.c = c;
  d.delta_c = hc.comult.relabeled({c}, {c, c});
  d.eps_c = hc.counit.relabeled({c}, {hb.r.carrier});
  d.act_c = h.mult.relabeled({c, h.carrier}, {c});

  DKCowreath cw = dk_cowreath(d);
  require(cw.report.all_pass(), "classical Doi-Koppinen cowreath over R = k");

  StructureBundle b;
  b.field = f;
  b.add_morphism("m_r", hb.r.mult);
  b.add_morphism("u_r", hb.r.unit);
  b.add_morphism("m_h", h.mult);
  b.add_morphism("u_h", h.unit);
  b.add_morphism("s", hb.s);
  b.add_morphism("t", hb.t);
  b.add_morphism("delta_h", hb.delta_flat);
  b.add_morphism("eps_h", hb.eps);
  b.add_morphism("m_a", a.mult);
  b.add_morphism("u_a", a.unit);
  b.add_morphism("i_a", d.i_a);
  b.add_morphism("rho", d.rho_flat);
  b.add_morphism("delta_c", d.delta_c);
  b.add_morphism("eps_c", d.eps_c);
  b.add_morphism("act_c", d.act_c);
  b.structures["dk"] = json{
      {"bialgebroid",
       {{"side", "right"},
        {"base", algebra_ref("R", "m_r", "u_r")},
        {"total", algebra_ref("H", "m_h", "u_h")},
        {"s", "s"},
        {"t", "t"},
        {"delta", "delta_h"},
        {"eps", "eps_h"}}},
      {"A", algebra_ref("Aa", "m_a", "u_a")},
      {"i_a", "i_a"},
      {"rho", "rho"},
      {"C", "C"},
      {"delta_c", "delta_c"},
      {"eps_c", "eps_c"},
      {"act_c", "act_c"}};
  return b;
}

StructureBundle dk_weak_bundle(const FieldSpec& f) {
  WeakBialgebra w = pair_groupoid_weak_bialgebra(f, 2);
  RightBialgebroid hb = weak_to_right_bialgebroid(w);
  require(check_right_bialgebroid(hb).all_pass(), "right bialgebroid from weak M2");

  DoiKoppinenDatum d;
  d.hb = hb;
  d.a = hb.h;
  d.a.carrier.name = "Aa";
  d.a.mult = hb.h.mult.relabeled({d.a.carrier, d.a.carrier}, {d.a.carrier});
  d.a.unit = hb.h.unit.relabeled({}, {d.a.carrier});
  d.i_a = hb.s.relabeled({hb.r.carrier}, {d.a.carrier});
  d.rho_flat = hb.delta_flat.relabeled({d.a.carrier}, {d.a.carrier, hb.h.carrier});
  SpaceRef c{"C", hb.h.carrier.dim};
  d.c = c;
  d.delta_c = hb.delta_flat.relabeled({c}, {c, c});
  d.eps_c = hb.eps.relabeled({c}, {hb.r.carrier});
  d.act_c = hb.h.mult.relabeled({c, hb.h.carrier}, {c});

  DKCowreath cw = dk_cowreath(d);
  require(cw.report.all_pass(), "weak Doi-Koppinen cowreath over M2");

  StructureBundle b;
  b.field = f;
  b.add_morphism("m_r", hb.r.mult);
  b.add_morphism("u_r", hb.r.unit);
  b.add_morphism("m_h", hb.h.mult);
  b.add_morphism("u_h", hb.h.unit);
  b.add_morphism("s", hb.s);
  b.add_morphism("t", hb.t);
  b.add_morphism("delta_h", hb.delta_flat);
  b.add_morphism("eps_h", hb.eps);
  b.add_morphism("m_a", d.a.mult);
  b.add_morphism("u_a", d.a.unit);
  b.add_morphism("i_a", d.i_a);
  b.add_morphism("rho", d.rho_flat);
  b.add_morphism("delta_c", d.delta_c);
  b.add_morphism("eps_c", d.eps_c);
  b.add_morphism("act_c", d.act_c);
  b.structures["dk"] = json{
      {"bialgebroid",
       {{"side", "right"},
        {"base", algebra_ref("R", "m_r", "u_r")},
        {"total", algebra_ref("H", "m_h", "u_h")},
        {"s", "s"},
        {"t", "t"},
        {"delta", "delta_h"},
        {"eps", "eps_h"}}},
      {"A", algebra_ref("Aa", "m_a", "u_a")},
      {"i_a", "i_a"},
      {"rho", "rho"},
      {"C", "C"},
      {"delta_c", "delta_c"},
      {"eps_c", "eps_c"},
      {"act_c", "act_c"}};
  return b;
}

StructureBundle rand_wreath_bundle(const FieldSpec& f, std::uint64_t seed) {
  Rng rng(seed);
  int n_a = 2 + static_cast<int>(rng.below(2));
  int n_x = 2 + static_cast<int>(rng.below(2));
  WreathDatum d = random_valid_wreath(rng, f, n_a, n_x);
  require(check_wreath(d).all_pass(), "random valid wreath");
  return bundle_of_wreath(d);
}

StructureBundle rand_cowreath_bundle(const FieldSpec& f, std::uint64_t seed) {
  Rng rng(seed);
  int n_a = 2 + static_cast<int>(rng.below(2));
  int n_x = 2 + static_cast<int>(rng.below(2));
  CowreathDatum d = random_valid_cowreath(rng, f, n_a, n_x);
  require(check_cowreath(d).all_pass(), "random valid cowreath");
  return bundle_of_cowreath(d);
}

}  // namespace

std::vector<std::string> example_names() {
  return {"wreath-trivial",      "wreath-flip-kz2",     "wreath-flip-kz3",
          "wreath-flip-kz4",     "cowreath-flip-kz2",   "cowreath-flip-kz3",
          "cowreath-flip-kz4",   "entwining-flip-kz2",  "quasi-kz2",
          "quasi-kz2-trivial",   "quasi-kz2-nontrivial", "quasi-kz3",
          "quasi-kz4",           "dq-kz2",              "dq-kz2-nontrivial",
          "lr-smash-kz2",        "weak-m2",             "groupoid-pair-2",
          "bgd-from-weak",       "dk-kz2",              "dk-weak-m2",
          "rand-wreath",         "rand-cowreath"};
}

StructureBundle make_example(const std::string& name, const FieldSpec& f, std::uint64_t seed) {
  if (name == "wreath-trivial") return trivial_wreath_bundle(f);
  if (name == "wreath-flip-kz2") return flip_wreath_bundle(f, 2);
  if (name == "wreath-flip-kz3") return flip_wreath_bundle(f, 3);
  if (name == "wreath-flip-kz4") return flip_wreath_bundle(f, 4);
  if (name == "cowreath-flip-kz2") return flip_cowreath_bundle(f, 2);
  if (name == "cowreath-flip-kz3") return flip_cowreath_bundle(f, 3);
  if (name == "cowreath-flip-kz4") return flip_cowreath_bundle(f, 4);
  if (name == "entwining-flip-kz2") return entwining_flip_bundle(f, 2);
  if (name == "quasi-kz2" || name == "quasi-kz2-trivial") return quasi_bundle(f, 2, false);
  if (name == "quasi-kz2-nontrivial") return quasi_bundle(f, 2, true);
  if (name == "quasi-kz3") return quasi_bundle(f, 3, false);
  if (name == "quasi-kz4") return quasi_bundle(f, 4, false);
  if (name == "dq-kz2") return dual_quasi_bundle(f, false);
  if (name == "dq-kz2-nontrivial") return dual_quasi_bundle(f, true);
  if (name == "lr-smash-kz2") return lr_smash_bundle(f);
  if (name == "weak-m2" || name == "groupoid-pair-2") return weak_bundle(f, 2);
  if (name == "bgd-from-weak") return bgd_from_weak_bundle(f);
  if (name == "dk-kz2") return dk_bundle_kz2(f);
  if (name == "dk-weak-m2") return dk_weak_bundle(f);
  if (name == "rand-wreath") return rand_wreath_bundle(f, seed);
  if (name == "rand-cowreath") return rand_cowreath_bundle(f, seed);
  throw UnknownExample(name);
}

}  // namespace wreathkit
