#pragma once

#include <memory>
#include <string>
#include <utility>
#include <vector>

#include "wreathkit/bundle.hpp"
#include "wreathkit/report.hpp"

namespace wreathkit::dsl {

/// Morphism expression: generators, identities, composition `g . f` (apply f
/// first) and tensor `f * g`.
struct ExprNode;
using Expr = std::shared_ptr<const ExprNode>;

struct ExprNode {
  enum class Kind { Gen, Id, Compose, Tensor };
  Kind kind;
  std::string name;                 // Gen
  std::vector<std::string> spaces;  // Id
  Expr lhs, rhs;                    // Compose, Tensor
};

Expr make_gen(std::string name);
Expr make_id(std::vector<std::string> spaces);
Expr make_compose(Expr g, Expr f);
Expr make_tensor(Expr f, Expr g);

bool expr_equal(const Expr& a, const Expr& b);

/// Grammar: expr := term ('.' term)* ; term := factor ('*' factor)* ;
/// factor := IDENT | 'id(' spacelist ')' | '(' expr ')'. Whitespace-insensitive.
Expr parse(const std::string& src);

/// Prints an expression that reparses to an equal tree.
std::string to_string(const Expr& e);

struct Signature {
  std::vector<SpaceRef> dom, cod;
};

/// Infers the signature of `e` against `bundle`; throws UnboundGenerator or
/// SignatureMismatch.
Signature typecheck(const Expr& e, const StructureBundle& bundle);

struct Step {
  enum class Op { LoadGen, LoadId, Kron, Compose };
  Op op;
  std::string gen;                  // LoadGen
  std::vector<std::string> spaces;  // LoadId
  std::vector<std::int64_t> gen_dom_dims, gen_cod_dims;  // LoadGen signature
};

/// Compiled evaluation schedule. Composition chains are right-associated;
/// evaluation equals the naive recursive evaluation of the source tree.
struct ContractionPlan {
  std::vector<Step> steps;
  Signature signature;
};

ContractionPlan compile(const Expr& e, const StructureBundle& bundle);

Morphism evaluate(const ContractionPlan& plan, const StructureBundle& bundle);

/// Parse + typecheck + compile + evaluate in one go.
Morphism eval_expr(const std::string& src, const StructureBundle& bundle);

struct EquationSet {
  std::string name;
  std::string paper_tag;
  /// Equation ids parallel to pairs; empty ids fall back to name#index.
  std::vector<std::string> ids;
  std::vector<std::pair<std::string, std::string>> pairs;  // (lhs, rhs) sources
};

EquationSet equation_set_from_json(const std::string& json_text);
std::string equation_set_to_json(const EquationSet& eqs);

/// Evaluates every pair against the bundle; a pair passes iff the residual
/// lhs - rhs is the zero matrix.
CheckReport check_equations(const EquationSet& eqs, const StructureBundle& bundle);

/// Equation files bundled with the library (embedded copies of
/// data/equations/*.json), addressable by set name.
const EquationSet& builtin_equations(const std::string& name);

}  // namespace wreathkit::dsl
