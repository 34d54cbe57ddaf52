#include "wreathkit/em.hpp"

#include "wreathkit/errors.hpp"

namespace wreathkit {

CheckReport check_em_object(const AlgebraDatum& a, const SpaceRef& x, const Morphism& psi) {
  const FieldSpec f = a.field();
  if (dims_of(psi.dom()) != dims_of({x, a.carrier}) ||
      dims_of(psi.cod()) != dims_of({a.carrier, x}))
    throw ShapeMismatch("psi must map X⊗A -> A⊗X, got " + psi.sig_str());
  const Morphism id_a = a.id();
  const Morphism id_x = identity(f, x);
  CheckReport rep;
  rep.kind = "em-object";
  rep.structure = x.name;
  rep.items.push_back(check_item(
      "ta1", "eq:ta", compose(psi, kron(id_x, a.mult)),
      compose3(kron(a.mult, id_x), kron(id_a, psi), kron(psi, id_a))));
  rep.items.push_back(check_item("ta2", "eq:ta", compose(psi, kron(id_x, a.unit)),
                                 kron(a.unit, id_x)));
  return rep;
}

EMObject make_em_object(const AlgebraDatum& a, const SpaceRef& x, const Morphism& psi) {
  CheckReport rep = check_em_object(a, x, psi);
  if (!rep.all_pass()) throw InvalidInput("(X, psi) fails eq:ta");
  return EMObject{a, x, psi};
}

EMObject em_unit_object(const AlgebraDatum& a) {
  return EMObject{a, unit_space(), a.id().relabeled({unit_space(), a.carrier},
                                                    {a.carrier, unit_space()})};
}

CheckReport em_morphism_valid(const EMMorphism& r) {
  const AlgebraDatum& a = r.source.a;
  const FieldSpec f = a.field();
  const Morphism id_a = a.id();
  if (dims_of(r.rho.dom()) != dims_of({r.source.x}) ||
      dims_of(r.rho.cod()) != dims_of({a.carrier, r.target.x}))
    throw ShapeMismatch("rho must map X -> A⊗Y, got " + r.rho.sig_str());
  const Morphism id_y = r.target.id_x();
  Morphism lhs = compose3(kron(a.mult, id_y), kron(id_a, r.rho), r.source.psi);
  Morphism rhs = compose3(kron(a.mult, id_y), kron(id_a, r.target.psi), kron(r.rho, id_a));
  CheckReport rep;
  rep.kind = "em-morphism";
  rep.structure = r.source.x.name + "->" + r.target.x.name;
  rep.items.push_back(check_item("2cell", "eq:2cellpc", lhs, rhs));
  return rep;
}

EMMorphism em_id(const EMObject& o) {
  return EMMorphism{o, o, kron(o.a.unit, o.id_x())};
}

EMMorphism em_compose(const EMMorphism& r2, const EMMorphism& r1) {
  if (dims_of({r1.target.x}) != dims_of({r2.source.x}) ||
      !mor_equal(r1.target.psi, r2.source.psi))
    throw SignatureMismatch("em_compose: target(r1) != source(r2)");
  const AlgebraDatum& a = r1.source.a;
  Morphism rho = compose3(kron(a.mult, r2.target.id_x()), kron(a.id(), r2.rho), r1.rho);
  return EMMorphism{r1.source, r2.target, std::move(rho)};
}

EMObject em_tensor_objects(const EMObject& o1, const EMObject& o2) {
  const FieldSpec f = o1.a.field();
  SpaceRef xy{o1.x.name + "*" + o2.x.name, o1.x.dim * o2.x.dim};
  Morphism psi = compose(kron(o1.psi, o2.id_x()), kron(o1.id_x(), o2.psi));
  psi = psi.relabeled({xy, o1.a.carrier}, {o1.a.carrier, xy});
  return EMObject{o1.a, xy, std::move(psi)};
}

EMMorphism em_tensor_morphisms(const EMMorphism& r1, const EMMorphism& r2) {
  // r1 : (X,ψ) -> (X′,ψ′), r2 : (Y,φ) -> (Y′,φ′); the crossing in the middle
  // is the entwining of r1's target.
  const AlgebraDatum& a = r1.source.a;
  const FieldSpec f = a.field();
  const Morphism id_a = a.id();
  const Morphism id_x1 = r1.target.id_x();
  const Morphism id_y1 = r2.target.id_x();
  Morphism rho = compose3(kron3(a.mult, id_x1, id_y1), kron3(id_a, r1.target.psi, id_y1),
                          kron(r1.rho, r2.rho));
  EMObject src = em_tensor_objects(r1.source, r2.source);
  EMObject tgt = em_tensor_objects(r1.target, r2.target);
  rho = rho.relabeled({src.x}, {a.carrier, tgt.x});
  return EMMorphism{std::move(src), std::move(tgt), std::move(rho)};
}

CheckReport mnd_morphism_valid(const MndMorphism& r) {
  const AlgebraDatum& a = r.source.a;
  if (dims_of(r.rho.dom()) != dims_of({r.source.x}) ||
      dims_of(r.rho.cod()) != dims_of({r.target.x}))
    throw ShapeMismatch("rho must map X -> Y, got " + r.rho.sig_str());
  Morphism lhs = compose(r.target.psi, kron(r.rho, a.id()));
  Morphism rhs = compose(kron(a.id(), r.rho), r.source.psi);
  CheckReport rep;
  rep.kind = "mnd-morphism";
  rep.structure = r.source.x.name + "->" + r.target.x.name;
  rep.items.push_back(check_item("transfer", "Mnd(C)(A) 2-cell", lhs, rhs));
  return rep;
}

EMMorphism mnd_to_em(const MndMorphism& r) {
  return EMMorphism{r.source, r.target, kron(r.source.a.unit, r.rho)};
}

}  // namespace wreathkit
