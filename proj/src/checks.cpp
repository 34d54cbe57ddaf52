#include "wreathkit/checks.hpp"

#include <chrono>

#include <nlohmann/json.hpp>

#include "wreathkit/dsl.hpp"
#include "wreathkit/errors.hpp"

namespace wreathkit {

using nlohmann::json;

namespace {

const json& structure_ref(const StructureBundle& b, const std::string& role) {
  auto it = b.structures.find(role);
  if (it == b.structures.end()) throw BundleError("bundle has no '" + role + "' structure");
  return it->second;
}

std::string str_at(const json& j, const char* key) {
  if (!j.contains(key)) throw BundleError(std::string("structure missing field '") + key + "'");
  return j.at(key).get<std::string>();
}

}  // namespace

AlgebraDatum algebra_from_bundle(const StructureBundle& b, const json& ref) {
  AlgebraDatum a;
  a.carrier = b.space(str_at(ref, "carrier"));
  a.mult = b.morphism(str_at(ref, "mult"));
  a.unit = b.morphism(str_at(ref, "unit"));
  if (dims_of(a.mult.dom()) != dims_of({a.carrier, a.carrier}) ||
      dims_of(a.mult.cod()) != dims_of({a.carrier}))
    throw BundleError("algebra mult has wrong shape: " + a.mult.sig_str());
  if (!a.unit.dom().empty() || dims_of(a.unit.cod()) != dims_of({a.carrier}))
    throw BundleError("algebra unit has wrong shape: " + a.unit.sig_str());
  return a;
}

WreathDatum wreath_from_bundle(const StructureBundle& b) {
  const json& ref = structure_ref(b, "wreath");
  WreathDatum d;
  d.a = algebra_from_bundle(b, ref.at("algebra"));
  d.x = b.space(str_at(ref, "X"));
  d.psi = b.morphism(str_at(ref, "psi"));
  d.zeta = b.morphism(str_at(ref, "zeta"));
  d.sigma = b.morphism(str_at(ref, "sigma"));
  return d;
}

CowreathDatum cowreath_from_bundle(const StructureBundle& b) {
  const json& ref = structure_ref(b, "cowreath");
  CowreathDatum d;
  d.a = algebra_from_bundle(b, ref.at("algebra"));
  d.x = b.space(str_at(ref, "X"));
  d.psi = b.morphism(str_at(ref, "psi"));
  d.delta = b.morphism(str_at(ref, "delta"));
  d.f = b.morphism(str_at(ref, "f"));
  return d;
}

WeakBialgebra weak_from_bundle(const StructureBundle& b) {
  const json& ref = structure_ref(b, "weak");
  WeakBialgebra w;
  w.h = algebra_from_bundle(b, ref.at("algebra"));
  w.delta = b.morphism(str_at(ref, "delta"));
  w.eps = b.morphism(str_at(ref, "eps"));
  return w;
}

LeftBialgebroid left_bialgebroid_from_bundle(const StructureBundle& b, const json& ref) {
  LeftBialgebroid bg;
  bg.l = algebra_from_bundle(b, ref.at("base"));
  bg.h = algebra_from_bundle(b, ref.at("total"));
  bg.s = b.morphism(str_at(ref, "s"));
  bg.t = b.morphism(str_at(ref, "t"));
  bg.delta_flat = b.morphism(str_at(ref, "delta"));
  bg.eps = b.morphism(str_at(ref, "eps"));
  return bg;
}

RightBialgebroid right_bialgebroid_from_bundle(const StructureBundle& b, const json& ref) {
  RightBialgebroid bg;
  bg.r = algebra_from_bundle(b, ref.at("base"));
  bg.h = algebra_from_bundle(b, ref.at("total"));
  bg.s = b.morphism(str_at(ref, "s"));
  bg.t = b.morphism(str_at(ref, "t"));
  bg.delta_flat = b.morphism(str_at(ref, "delta"));
  bg.eps = b.morphism(str_at(ref, "eps"));
  return bg;
}

DoiKoppinenDatum dk_from_bundle(const StructureBundle& b) {
  const json& ref = structure_ref(b, "dk");
  DoiKoppinenDatum d;
  d.hb = right_bialgebroid_from_bundle(b, ref.at("bialgebroid"));
  d.a = algebra_from_bundle(b, ref.at("A"));
  d.i_a = b.morphism(str_at(ref, "i_a"));
  d.rho_flat = b.morphism(str_at(ref, "rho"));
  d.c = b.space(str_at(ref, "C"));
  d.delta_c = b.morphism(str_at(ref, "delta_c"));
  d.eps_c = b.morphism(str_at(ref, "eps_c"));
  d.act_c = b.morphism(str_at(ref, "act_c"));
  return d;
}

QuasiBialgebra quasi_from_bundle(const StructureBundle& b) {
  const json& ref = structure_ref(b, "quasi_bialgebra");
  QuasiBialgebra q;
  q.h = algebra_from_bundle(b, ref.at("algebra"));
  q.delta = b.morphism(str_at(ref, "delta"));
  q.eps = b.morphism(str_at(ref, "eps"));
  q.phi = b.morphism(str_at(ref, "phi"));
  q.phi_inv = b.morphism(str_at(ref, "phi_inv"));
  return q;
}

CheckReport run_check(const std::string& kind, const StructureBundle& b) {
  auto t0 = std::chrono::steady_clock::now();
  CheckReport rep;
  if (kind == "algebra") {
    rep = check_algebra(algebra_from_bundle(b, structure_ref(b, "algebra")));
  } else if (kind == "coalgebra") {
    const json& ref = structure_ref(b, "coalgebra");
    CoalgebraDatum c{b.space(str_at(ref, "carrier")), b.morphism(str_at(ref, "comult")),
                     b.morphism(str_at(ref, "counit"))};
    rep = check_coalgebra(c);
  } else if (kind == "em-object") {
    const json& ref = structure_ref(b, "em_object");
    rep = check_em_object(algebra_from_bundle(b, ref.at("algebra")),
                          b.space(str_at(ref, "X")), b.morphism(str_at(ref, "psi")));
  } else if (kind == "entwining") {
    const json& ref = structure_ref(b, "entwining");
    AlgebraDatum a = algebra_from_bundle(b, ref.at("algebra"));
    Morphism psi = b.morphism(str_at(ref, "psi"));
    if (ref.contains("x_algebra")) {
      rep = check_entwining_algebra(a, algebra_from_bundle(b, ref.at("x_algebra")), psi).report;
    } else if (ref.contains("x_coalgebra")) {
      const json& xc = ref.at("x_coalgebra");
      CoalgebraDatum c{b.space(str_at(xc, "carrier")), b.morphism(str_at(xc, "comult")),
                       b.morphism(str_at(xc, "counit"))};
      rep = check_entwining_coalgebra(a, c, psi).report;
    } else {
      throw BundleError("entwining structure needs x_algebra or x_coalgebra");
    }
  } else if (kind == "wreath") {
    rep = check_wreath(wreath_from_bundle(b));
  } else if (kind == "cowreath") {
    rep = check_cowreath(cowreath_from_bundle(b));
  } else if (kind == "weak") {
    rep = check_weak_bialgebra(weak_from_bundle(b));
  } else if (kind == "bialgebroid") {
    const json& ref = structure_ref(b, "bialgebroid");
    std::string side = ref.value("side", "left");
    if (side == "left")
      rep = check_left_bialgebroid(left_bialgebroid_from_bundle(b, ref));
    else if (side == "right")
      rep = check_right_bialgebroid(right_bialgebroid_from_bundle(b, ref));
    else
      throw BundleError("bialgebroid side must be left or right");
  } else if (kind == "measuring") {
    const json& ref = structure_ref(b, "measuring");
    LeftBialgebroid bg = left_bialgebroid_from_bundle(b, ref.at("bialgebroid"));
    Measuring m{algebra_from_bundle(b, ref.at("B")), b.morphism(str_at(ref, "i")),
                b.morphism(str_at(ref, "act"))};
    rep = check_measuring(bg, m);
  } else if (kind == "dk") {
    DoiKoppinenDatum d = dk_from_bundle(b);
    CheckReport hb = check_right_bialgebroid(d.hb);
    CheckReport ca = check_dk_comodule_algebra(d);
    CheckReport mc = check_dk_module_coalgebra(d);
    rep.kind = "dk";
    rep.structure = "(" + d.a.carrier.name + "," + d.c.name + ")";
    rep.items.push_back(boolean_item("bialgebroid", "right bialgebroid", hb.all_pass()));
    rep.items.push_back(boolean_item("comodule_algebra", "A axioms", ca.all_pass()));
    rep.items.push_back(boolean_item("module_coalgebra", "C axioms", mc.all_pass()));
    if (rep.all_pass()) {
      DKCowreath cw = dk_cowreath(d);
      for (const auto& it : cw.report.items) rep.items.push_back(it);
    }
  } else if (kind == "ring") {
    const json& ref = structure_ref(b, "ring_on_ax");
    rep = check_ring_on_ax(algebra_from_bundle(b, ref.at("algebra")),
                           b.space(str_at(ref, "X")), b.morphism(str_at(ref, "psi")),
                           b.morphism(str_at(ref, "product")),
                           b.morphism(str_at(ref, "sigma")));
  } else if (kind == "coring") {
    const json& ref = structure_ref(b, "coring_on_ax");
    rep = check_coring_on_ax(algebra_from_bundle(b, ref.at("algebra")),
                             b.space(str_at(ref, "X")), b.morphism(str_at(ref, "psi")),
                             b.morphism(str_at(ref, "delta_flat")),
                             b.morphism(str_at(ref, "counit")));
  } else {
    throw BundleError("unknown check kind: " + kind);
  }
  rep.wall_ms =
      std::chrono::duration<double, std::milli>(std::chrono::steady_clock::now() - t0).count();
  return rep;
}

StructureBundle bundle_of_wreath(const WreathDatum& d) {
  StructureBundle b;
  b.field = d.a.field();
  SpaceRef A{"A", d.a.carrier.dim}, X{"X", d.x.dim};
  b.add_morphism("m", d.a.mult.relabeled({A, A}, {A}));
  b.add_morphism("u", d.a.unit.relabeled({}, {A}));
  b.add_morphism("psi", d.psi.relabeled({X, A}, {A, X}));
  b.add_morphism("zeta", d.zeta.relabeled({X, X}, {A, X}));
  b.add_morphism("sigma", d.sigma.relabeled({}, {A, X}));
  b.structures["wreath"] = json{
      {"algebra", {{"carrier", "A"}, {"mult", "m"}, {"unit", "u"}}},
      {"X", "X"},
      {"psi", "psi"},
      {"zeta", "zeta"},
      {"sigma", "sigma"}};
  return b;
}

StructureBundle bundle_of_cowreath(const CowreathDatum& d) {
  StructureBundle b;
  b.field = d.a.field();
  SpaceRef A{"A", d.a.carrier.dim}, X{"X", d.x.dim};
  b.add_morphism("m", d.a.mult.relabeled({A, A}, {A}));
  b.add_morphism("u", d.a.unit.relabeled({}, {A}));
  b.add_morphism("psi", d.psi.relabeled({X, A}, {A, X}));
  b.add_morphism("delta", d.delta.relabeled({X}, {A, X, X}));
  b.add_morphism("f", d.f.relabeled({X}, {A}));
  b.structures["cowreath"] = json{
      {"algebra", {{"carrier", "A"}, {"mult", "m"}, {"unit", "u"}}},
      {"X", "X"},
      {"psi", "psi"},
      {"delta", "delta"},
      {"f", "f"}};
  return b;
}

BuildResult run_build(const std::string& what, const StructureBundle& b) {
  BuildResult out;
  if (what == "wreath-product") {
    WreathDatum d = wreath_from_bundle(b);
    RingOnAX ring = wreath_product(d);
    StructureBundle ob;
    ob.field = b.field;
    SpaceRef A{"A", d.a.carrier.dim}, X{"X", d.x.dim};
    ob.add_morphism("m", d.a.mult.relabeled({A, A}, {A}));
    ob.add_morphism("u", d.a.unit.relabeled({}, {A}));
    ob.add_morphism("psi", d.psi.relabeled({X, A}, {A, X}));
    ob.add_morphism("product", ring.product.relabeled({A, X, A, X}, {A, X}));
    ob.add_morphism("sigma", ring.unit.relabeled({}, {A, X}));
    ob.structures["ring_on_ax"] = json{
        {"algebra", {{"carrier", "A"}, {"mult", "m"}, {"unit", "u"}}},
        {"X", "X"},
        {"psi", "psi"},
        {"product", "product"},
        {"sigma", "sigma"}};
    out.bundle = std::move(ob);
  } else if (what == "ring") {
    WreathDatum d = wreath_from_bundle(b);
    CheckReport rq = ring_from_wreath(d);
    RingOnAX ring = wreath_product(d);
    StructureBundle ob;
    ob.field = b.field;
    SpaceRef A{"A", d.a.carrier.dim}, X{"X", d.x.dim};
    ob.add_morphism("m", d.a.mult.relabeled({A, A}, {A}));
    ob.add_morphism("u", d.a.unit.relabeled({}, {A}));
    ob.add_morphism("psi", d.psi.relabeled({X, A}, {A, X}));
    ob.add_morphism("product", ring.product.relabeled({A, X, A, X}, {A, X}));
    ob.add_morphism("sigma", ring.unit.relabeled({}, {A, X}));
    ob.structures["ring_on_ax"] = json{
        {"algebra", {{"carrier", "A"}, {"mult", "m"}, {"unit", "u"}}},
        {"X", "X"},
        {"psi", "psi"},
        {"product", "product"},
        {"sigma", "sigma"}};
    out.bundle = std::move(ob);
    out.verdict = rq.all_pass() ? "" : "quotient-level ring axioms FAIL";
  } else if (what == "coring") {
    CowreathDatum d = cowreath_from_bundle(b);
    CoringOnAX coring = coring_from_cowreath(d);
    StructureBundle ob;
    ob.field = b.field;
    SpaceRef A{"A", d.a.carrier.dim}, X{"X", d.x.dim};
    ob.add_morphism("m", d.a.mult.relabeled({A, A}, {A}));
    ob.add_morphism("u", d.a.unit.relabeled({}, {A}));
    ob.add_morphism("psi", d.psi.relabeled({X, A}, {A, X}));
    ob.add_morphism("delta_flat",
                    coring.delta_flat.relabeled({A, X}, {A, X, A, X}));
    ob.add_morphism("counit", coring.counit.relabeled({A, X}, {A}));
    ob.structures["coring_on_ax"] = json{
        {"algebra", {{"carrier", "A"}, {"mult", "m"}, {"unit", "u"}}},
        {"X", "X"},
        {"psi", "psi"},
        {"delta_flat", "delta_flat"},
        {"counit", "counit"}};
    out.bundle = std::move(ob);
  } else if (what == "recover") {
    const json& ref = structure_ref(b, "ring_on_ax");
    AlgebraDatum a = algebra_from_bundle(b, ref.at("algebra"));
    SpaceRef x = b.space(str_at(ref, "X"));
    RecoverResult rr = recover_wreath_data(a, x, b.morphism(str_at(ref, "product")),
                                           b.morphism(str_at(ref, "sigma")));
    out.verdict = rr.verdict ? "recover verdict: true" : "recover verdict: false";
    if (rr.datum) {
      out.bundle = bundle_of_wreath(*rr.datum);
    } else {
      StructureBundle ob;
      ob.field = b.field;
      SpaceRef A{"A", a.carrier.dim}, X{"X", x.dim};
      ob.add_morphism("psi_rec", rr.psi.relabeled({X, A}, {A, X}));
      ob.add_morphism("zeta_rec", rr.zeta.relabeled({X, X}, {A, X}));
      out.bundle = std::move(ob);
    }
  } else {
    throw BundleError("unknown build target: " + what);
  }
  return out;
}

}  // namespace wreathkit
