#include "wreathkit/bimodule.hpp"

#include <chrono>

#include "wreathkit/dsl.hpp"
#include "wreathkit/errors.hpp"

namespace wreathkit {

namespace {

std::vector<SpaceRef> cat(const std::vector<SpaceRef>& a, const std::vector<SpaceRef>& b) {
  std::vector<SpaceRef> r = a;
  r.insert(r.end(), b.begin(), b.end());
  return r;
}

StructureBundle algebra_bundle(const AlgebraDatum& a) {
  StructureBundle b;
  b.field = a.field();
  b.add_morphism("m", a.mult);
  b.add_morphism("u", a.unit);
  return b;
}

}  // namespace

CheckReport check_algebra(const AlgebraDatum& a) {
  StructureBundle b = algebra_bundle(a);
  // "A" is the generator-facing name in the equation file.
  if (a.carrier.name != "A") {
    b.spaces.clear();
    Morphism m = a.mult, u = a.unit;
    SpaceRef A{"A", a.carrier.dim};
    b.morphisms.clear();
    b.add_morphism("m", m.relabeled({A, A}, {A}));
    b.add_morphism("u", u.relabeled({}, {A}));
  }
  CheckReport rep = dsl::check_equations(dsl::builtin_equations("algebra"), b);
  rep.kind = "algebra";
  rep.structure = a.carrier.name;
  return rep;
}

bool is_algebra(const AlgebraDatum& a) {
  const Morphism id_a = a.id();
  return mor_equal(compose(a.mult, kron(a.mult, id_a)), compose(a.mult, kron(id_a, a.mult))) &&
         mor_equal(compose(a.mult, kron(a.unit, id_a)), id_a) &&
         mor_equal(compose(a.mult, kron(id_a, a.unit)), id_a);
}

CheckReport check_coalgebra(const CoalgebraDatum& c) {
  StructureBundle b;
  b.field = c.comult.field();
  SpaceRef C{"C", c.carrier.dim};
  Morphism cm = c.comult, ce = c.counit;
  b.add_morphism("cm", cm.relabeled({C}, {C, C}));
  b.add_morphism("ce", ce.relabeled({C}, {}));
  CheckReport rep = dsl::check_equations(dsl::builtin_equations("coalgebra"), b);
  rep.kind = "coalgebra";
  rep.structure = c.carrier.name;
  return rep;
}

bool is_coalgebra(const CoalgebraDatum& c) { return check_coalgebra(c).all_pass(); }

bool is_right_module(const AlgebraDatum& a, const std::vector<SpaceRef>& carrier,
                     const Morphism& act) {
  const Morphism id_m = identity(a.field(), carrier);
  const Morphism id_a = a.id();
  return mor_equal(compose(act, kron(id_m, a.unit)), id_m) &&
         mor_equal(compose(act, kron(act, id_a)), compose(act, kron(id_m, a.mult)));
}

bool is_left_module(const AlgebraDatum& a, const std::vector<SpaceRef>& carrier,
                    const Morphism& act) {
  const Morphism id_m = identity(a.field(), carrier);
  const Morphism id_a = a.id();
  return mor_equal(compose(act, kron(a.unit, id_m)), id_m) &&
         mor_equal(compose(act, kron(id_a, act)), compose(act, kron(a.mult, id_m)));
}

CheckReport check_bimodule(const BimoduleDatum& b) {
  CheckReport rep;
  rep.kind = "bimodule";
  rep.structure = spaces_str(b.carrier);
  rep.items.push_back(
      boolean_item("left_module", "module axioms", is_left_module(b.over_left, b.carrier, b.left)));
  rep.items.push_back(boolean_item("right_module", "module axioms",
                                   is_right_module(b.over_right, b.carrier, b.right)));
  const Morphism id_a = b.over_left.id();
  const Morphism id_b = b.over_right.id();
  rep.items.push_back(check_item("commute", "bimodule compatibility",
                                 compose(b.left, kron(id_a, b.right)),
                                 compose(b.right, kron(b.left, id_b))));
  return rep;
}

Morphism QuotientSpace::induce_from_flat(const Morphism& flat) const {
  return compose(proj, flat);
}

QuotientSpace quotient_by_relations(const std::vector<SpaceRef>& ambient, const Mat& relations) {
  const FieldSpec f = relations.field();
  const auto d = static_cast<std::size_t>(total_dim(ambient));
  if (relations.rows() != d) throw ShapeMismatch("relations live in the wrong ambient space");

  RrefResult rr = rref(relations.transpose());
  std::vector<bool> is_pivot(d, false);
  for (std::size_t p : rr.pivots) is_pivot[p] = true;
  std::vector<std::size_t> free_coords;
  for (std::size_t c = 0; c < d; ++c)
    if (!is_pivot[c]) free_coords.push_back(c);

  QuotientSpace q;
  q.ambient = ambient;
  q.qdim = static_cast<std::int64_t>(free_coords.size());
  q.qspace = SpaceRef{"Q(" + spaces_str(ambient) + ")", q.qdim};

  Mat proj(f, free_coords.size(), d);
  for (std::size_t k = 0; k < free_coords.size(); ++k) proj.at(k, free_coords[k]) = Scalar::one(f);
  for (std::size_t i = 0; i < rr.rank; ++i) {
    // e_{pivot_i} reduces to -row_i restricted to the free coordinates
    for (std::size_t k = 0; k < free_coords.size(); ++k)
      proj.at(k, rr.pivots[i]) = -rr.r.at(i, free_coords[k]);
  }
  Mat sec(f, d, free_coords.size());
  for (std::size_t k = 0; k < free_coords.size(); ++k) sec.at(free_coords[k], k) = Scalar::one(f);

  q.proj = Morphism(ambient, {q.qspace}, std::move(proj));
  q.section = Morphism({q.qspace}, ambient, std::move(sec));
  return q;
}

bool descends(const QuotientSpace& dom, const Morphism& flat, const QuotientSpace& cod) {
  return descends_to(dom, compose(cod.proj, flat));
}

bool descends_to(const QuotientSpace& dom, const Morphism& flat_into_q) {
  Morphism through = compose(flat_into_q, compose(dom.section, dom.proj));
  return mor_equal(flat_into_q, through);
}

QuotientSpace tensor_over(const AlgebraDatum& a, const std::vector<SpaceRef>& m,
                          const Morphism& nu_m, const std::vector<SpaceRef>& n,
                          const Morphism& mu_n) {
  const FieldSpec f = a.field();
  Morphism rel = kron(nu_m, identity(f, n)) - kron(identity(f, m), mu_n);
  return quotient_by_relations(cat(m, n), rel.mat());
}

QuotientSpace tensor_over_A(const BimoduleDatum& m, const BimoduleDatum& n) {
  if (dims_of({m.over_right.carrier}) != dims_of({n.over_left.carrier}))
    throw ShapeMismatch("middle algebras differ");
  return tensor_over(m.over_right, m.carrier, m.right, n.carrier, n.left);
}

namespace {

void require_identity(const Morphism& m, const char* what) {
  if (dims_of(m.dom()) != dims_of(m.cod()) ||
      !mor_equal(m, identity(m.field(), m.dom())))
    throw NotInvertible(what);
}

}  // namespace

CanonicalIso upsilon(const AlgebraDatum& a, const std::vector<SpaceRef>& m, const Morphism& nu_m) {
  CanonicalIso iso;
  iso.q = tensor_over(a, m, nu_m, {a.carrier}, a.mult);
  iso.map = compose(nu_m, iso.q.section);
  if (!mor_equal(compose(iso.map, iso.q.proj), nu_m))
    throw NotInvertible("Upsilon does not satisfy Upsilon∘q = nu (broken module datum)");
  iso.inv = compose(iso.q.proj, kron(identity(a.field(), m), a.unit));
  require_identity(compose(iso.map, iso.inv), "Upsilon∘Upsilon⁻¹ != id");
  require_identity(compose(iso.inv, iso.map), "Upsilon⁻¹∘Upsilon != id");
  return iso;
}

CanonicalIso upsilon_prime(const AlgebraDatum& a, const std::vector<SpaceRef>& y,
                           const Morphism& mu_y) {
  CanonicalIso iso;
  iso.q = tensor_over(a, {a.carrier}, a.mult, y, mu_y);
  iso.map = compose(mu_y, iso.q.section);
  if (!mor_equal(compose(iso.map, iso.q.proj), mu_y))
    throw NotInvertible("Upsilon' does not satisfy Upsilon'∘q = mu (broken module datum)");
  iso.inv = compose(iso.q.proj, kron(a.unit, identity(a.field(), y)));
  require_identity(compose(iso.map, iso.inv), "Upsilon'∘Upsilon'⁻¹ != id");
  require_identity(compose(iso.inv, iso.map), "Upsilon'⁻¹∘Upsilon' != id");
  return iso;
}

CanonicalIso upsilon_mx(const AlgebraDatum& a, const std::vector<SpaceRef>& m,
                        const Morphism& nu_m, const std::vector<SpaceRef>& x) {
  const FieldSpec f = a.field();
  CanonicalIso iso;
  std::vector<SpaceRef> ax = cat({a.carrier}, x);
  iso.q = tensor_over(a, m, nu_m, ax, kron(a.mult, identity(f, x)));
  iso.map = compose(kron(nu_m, identity(f, x)), iso.q.section);
  if (!mor_equal(compose(iso.map, iso.q.proj), kron(nu_m, identity(f, x))))
    throw NotInvertible("Upsilon_{M,X} does not satisfy its defining equation");
  iso.inv = compose(iso.q.proj, kron3(identity(f, m), a.unit, identity(f, x)));
  require_identity(compose(iso.map, iso.inv), "Upsilon_{M,X}∘inv != id");
  require_identity(compose(iso.inv, iso.map), "inv∘Upsilon_{M,X} != id");
  return iso;
}

ThetaPrime theta_prime(const AlgebraDatum& a, const std::vector<SpaceRef>& m,
                       const std::vector<SpaceRef>& x, const Morphism& nu_x,
                       const std::vector<SpaceRef>& y, const Morphism& mu_y) {
  const FieldSpec f = a.field();
  ThetaPrime th;
  th.q_x_y = tensor_over(a, x, nu_x, y, mu_y);
  th.q_mx_y = tensor_over(a, cat(m, x), kron(identity(f, m), nu_x), y, mu_y);
  const Morphism id_m = identity(f, m);
  th.map = compose(kron(id_m, th.q_x_y.proj), th.q_mx_y.section);
  if (!mor_equal(compose(th.map, th.q_mx_y.proj), kron(id_m, th.q_x_y.proj)))
    throw NotInvertible("theta' does not satisfy theta'∘q = Id⊗q");
  th.inv = compose(th.q_mx_y.proj, kron(id_m, th.q_x_y.section));
  require_identity(compose(th.map, th.inv), "theta'∘theta'⁻¹ != id");
  require_identity(compose(th.inv, th.map), "theta'⁻¹∘theta' != id");
  return th;
}

QuotientSpace iterated_quotient(const AlgebraDatum& a, const std::vector<QuotientFactor>& factors) {
  if (factors.empty()) throw Error("iterated_quotient: no factors");
  const FieldSpec f = a.field();
  std::vector<SpaceRef> ambient;
  for (const auto& fac : factors) ambient = cat(ambient, fac.carrier);
  const auto d = static_cast<std::size_t>(total_dim(ambient));

  std::vector<Mat> blocks;
  std::size_t total_cols = 0;
  for (std::size_t i = 0; i + 1 < factors.size(); ++i) {
    if (!factors[i].right || !factors[i + 1].left)
      throw Error("iterated_quotient: adjacent actions missing between factors " +
                  std::to_string(i) + " and " + std::to_string(i + 1));
    std::vector<SpaceRef> pre, post;
    for (std::size_t k = 0; k < i; ++k) pre = cat(pre, factors[k].carrier);
    for (std::size_t k = i + 2; k < factors.size(); ++k) post = cat(post, factors[k].carrier);
    Morphism mid = kron(*factors[i].right, identity(f, factors[i + 1].carrier)) -
                   kron(identity(f, factors[i].carrier), *factors[i + 1].left);
    Morphism rel = kron3(identity(f, pre), mid, identity(f, post));
    blocks.push_back(rel.mat());
    total_cols += blocks.back().cols();
  }
  Mat all(f, d, total_cols);
  std::size_t col0 = 0;
  for (const auto& b : blocks) {
    for (std::size_t i = 0; i < b.rows(); ++i)
      for (std::size_t j = 0; j < b.cols(); ++j) all.at(i, col0 + j) = b.at(i, j);
    col0 += b.cols();
  }
  return quotient_by_relations(ambient, all);
}

}  // namespace wreathkit
