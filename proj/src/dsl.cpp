#include "wreathkit/dsl.hpp"

#include <cctype>
#include <chrono>
#include <map>

#include <nlohmann/json.hpp>

#include "wreathkit/errors.hpp"

namespace wreathkit::dsl {

Expr make_gen(std::string name) {
  auto n = std::make_shared<ExprNode>();
  n->kind = ExprNode::Kind::Gen;
  n->name = std::move(name);
  return n;
}

Expr make_id(std::vector<std::string> spaces) {
  auto n = std::make_shared<ExprNode>();
  n->kind = ExprNode::Kind::Id;
  n->spaces = std::move(spaces);
  return n;
}

Expr make_compose(Expr g, Expr f) {
  auto n = std::make_shared<ExprNode>();
  n->kind = ExprNode::Kind::Compose;
  n->lhs = std::move(g);
  n->rhs = std::move(f);
  return n;
}

Expr make_tensor(Expr f, Expr g) {
  auto n = std::make_shared<ExprNode>();
  n->kind = ExprNode::Kind::Tensor;
  n->lhs = std::move(f);
  n->rhs = std::move(g);
  return n;
}

bool expr_equal(const Expr& a, const Expr& b) {
  if (a->kind != b->kind) return false;
  switch (a->kind) {
    case ExprNode::Kind::Gen:
      return a->name == b->name;
    case ExprNode::Kind::Id:
      return a->spaces == b->spaces;
    default:
      return expr_equal(a->lhs, b->lhs) && expr_equal(a->rhs, b->rhs);
  }
}

namespace {

class Parser {
 public:
  explicit Parser(const std::string& src) : s_(src) {}

  Expr run() {
    Expr e = expr();
    skip_ws();
    if (pos_ != s_.size()) throw ParseError("trailing input", pos_);
    return e;
  }

 private:
  Expr expr() {
    Expr e = term();
    for (;;) {
      skip_ws();
      if (!eat('.')) break;
      e = make_compose(e, term());
    }
    return e;
  }

  Expr term() {
    Expr e = factor();
    for (;;) {
      skip_ws();
      if (!eat('*')) break;
      e = make_tensor(e, factor());
    }
    return e;
  }

  Expr factor() {
    skip_ws();
    if (pos_ >= s_.size()) throw ParseError("expected factor", pos_);
    if (eat('(')) {
      Expr e = expr();
      skip_ws();
      if (!eat(')')) throw ParseError("expected ')'", pos_);
      return e;
    }
    std::string name = ident();
    if (name == "id") {
      skip_ws();
      if (!eat('(')) throw ParseError("expected '(' after id", pos_);
      std::vector<std::string> spaces;
      skip_ws();
      if (!eat(')')) {
        for (;;) {
          spaces.push_back(ident());
          skip_ws();
          if (eat(',')) continue;
          if (eat(')')) break;
          throw ParseError("expected ',' or ')'", pos_);
        }
      }
      return make_id(std::move(spaces));
    }
    return make_gen(std::move(name));
  }

  std::string ident() {
    skip_ws();
    std::size_t start = pos_;
    while (pos_ < s_.size() &&
           (std::isalnum(static_cast<unsigned char>(s_[pos_])) || s_[pos_] == '_'))
      ++pos_;
    if (pos_ == start) throw ParseError("expected identifier", pos_);
    if (std::isdigit(static_cast<unsigned char>(s_[start])))
      throw ParseError("identifier may not start with a digit", start);
    return s_.substr(start, pos_ - start);
  }

  void skip_ws() {
    while (pos_ < s_.size() && std::isspace(static_cast<unsigned char>(s_[pos_]))) ++pos_;
  }

  bool eat(char c) {
    skip_ws();
    if (pos_ < s_.size() && s_[pos_] == c) {
      ++pos_;
      return true;
    }
    return false;
  }

  const std::string& s_;
  std::size_t pos_ = 0;
};

// Precedence levels for printing: compose = 0 (loosest), tensor = 1, atom = 2.
void print(const Expr& e, int parent_level, bool right_child, std::string& out) {
  switch (e->kind) {
    case ExprNode::Kind::Gen:
      out += e->name;
      return;
    case ExprNode::Kind::Id: {
      out += "id(";
      for (std::size_t i = 0; i < e->spaces.size(); ++i) {
        if (i) out += ",";
        out += e->spaces[i];
      }
      out += ")";
      return;
    }
    case ExprNode::Kind::Compose: {
      // Left-assoc: a right Compose child or any operand under tensor needs parens.
      bool need = parent_level > 0 || right_child;
      if (need) out += "(";
      print(e->lhs, 0, false, out);
      out += " . ";
      print(e->rhs, 0, true, out);
      if (need) out += ")";
      return;
    }
    case ExprNode::Kind::Tensor: {
      bool need = parent_level > 1 || (parent_level == 1 && right_child);
      if (need) out += "(";
      print(e->lhs, 1, false, out);
      out += " * ";
      print(e->rhs, 1, true, out);
      if (need) out += ")";
      return;
    }
  }
}

std::vector<SpaceRef> resolve_spaces(const std::vector<std::string>& names,
                                     const StructureBundle& bundle) {
  std::vector<SpaceRef> out;
  out.reserve(names.size());
  for (const auto& n : names) {
    if (n == "I" && !bundle.has_space("I")) {
      out.push_back(unit_space());
      continue;
    }
    out.push_back(bundle.space(n));
  }
  return out;
}

std::string dims_str(const std::vector<SpaceRef>& s) {
  std::string r = "[";
  for (std::size_t i = 0; i < s.size(); ++i) {
    if (i) r += ",";
    r += std::to_string(s[i].dim);
  }
  return r + "]";
}

// Right-associate compose chains; tensor structure is left untouched.
Expr right_assoc(const Expr& e) {
  switch (e->kind) {
    case ExprNode::Kind::Gen:
    case ExprNode::Kind::Id:
      return e;
    case ExprNode::Kind::Tensor:
      return make_tensor(right_assoc(e->lhs), right_assoc(e->rhs));
    case ExprNode::Kind::Compose: {
      Expr l = right_assoc(e->lhs);
      Expr r = right_assoc(e->rhs);
      if (l->kind == ExprNode::Kind::Compose)
        return right_assoc(make_compose(l->lhs, make_compose(l->rhs, r)));
      return make_compose(l, r);
    }
  }
  return e;
}

void emit(const Expr& e, const StructureBundle& bundle, ContractionPlan& plan) {
  switch (e->kind) {
    case ExprNode::Kind::Gen: {
      const Morphism& m = bundle.morphism(e->name);
      Step st;
      st.op = Step::Op::LoadGen;
      st.gen = e->name;
      st.gen_dom_dims = dims_of(m.dom());
      st.gen_cod_dims = dims_of(m.cod());
      plan.steps.push_back(std::move(st));
      return;
    }
    case ExprNode::Kind::Id: {
      Step st;
      st.op = Step::Op::LoadId;
      st.spaces = e->spaces;
      plan.steps.push_back(std::move(st));
      return;
    }
    case ExprNode::Kind::Tensor: {
      emit(e->lhs, bundle, plan);
      emit(e->rhs, bundle, plan);
      plan.steps.push_back(Step{Step::Op::Kron, "", {}, {}, {}});
      return;
    }
    case ExprNode::Kind::Compose: {
      emit(e->lhs, bundle, plan);
      emit(e->rhs, bundle, plan);
      plan.steps.push_back(Step{Step::Op::Compose, "", {}, {}, {}});
      return;
    }
  }
}

}  // namespace

Expr parse(const std::string& src) { return Parser(src).run(); }

std::string to_string(const Expr& e) {
  std::string out;
  print(e, 0, false, out);
  return out;
}

Signature typecheck(const Expr& e, const StructureBundle& bundle) {
  switch (e->kind) {
    case ExprNode::Kind::Gen: {
      const Morphism& m = bundle.morphism(e->name);
      return Signature{m.dom(), m.cod()};
    }
    case ExprNode::Kind::Id: {
      auto spaces = resolve_spaces(e->spaces, bundle);
      return Signature{spaces, spaces};
    }
    case ExprNode::Kind::Tensor: {
      Signature l = typecheck(e->lhs, bundle);
      Signature r = typecheck(e->rhs, bundle);
      Signature out;
      out.dom = l.dom;
      out.dom.insert(out.dom.end(), r.dom.begin(), r.dom.end());
      out.cod = l.cod;
      out.cod.insert(out.cod.end(), r.cod.begin(), r.cod.end());
      return out;
    }
    case ExprNode::Kind::Compose: {
      Signature g = typecheck(e->lhs, bundle);
      Signature f = typecheck(e->rhs, bundle);
      if (dims_of(f.cod) != dims_of(g.dom))
        throw SignatureMismatch("compose: inner signatures " + dims_str(f.cod) + " vs " +
                                dims_str(g.dom));
      return Signature{f.dom, g.cod};
    }
  }
  throw Error("unreachable");
}

ContractionPlan compile(const Expr& e, const StructureBundle& bundle) {
  ContractionPlan plan;
  plan.signature = typecheck(e, bundle);
  emit(right_assoc(e), bundle, plan);
  return plan;
}

Morphism evaluate(const ContractionPlan& plan, const StructureBundle& bundle) {
  std::vector<Morphism> stack;
  for (const auto& st : plan.steps) {
    switch (st.op) {
      case Step::Op::LoadGen: {
        const Morphism& m = bundle.morphism(st.gen);
        if (dims_of(m.dom()) != st.gen_dom_dims || dims_of(m.cod()) != st.gen_cod_dims)
          throw SignatureMismatch("generator '" + st.gen +
                                  "' does not match the plan's recorded signature");
        stack.push_back(m);
        break;
      }
      case Step::Op::LoadId:
        stack.push_back(identity(bundle.field, resolve_spaces(st.spaces, bundle)));
        break;
      case Step::Op::Kron: {
        Morphism g = std::move(stack.back());
        stack.pop_back();
        Morphism f = std::move(stack.back());
        stack.pop_back();
        stack.push_back(kron(f, g));
        break;
      }
      case Step::Op::Compose: {
        Morphism f = std::move(stack.back());
        stack.pop_back();
        Morphism g = std::move(stack.back());
        stack.pop_back();
        stack.push_back(compose(g, f));
        break;
      }
    }
  }
  if (stack.size() != 1) throw Error("malformed plan");
  return stack.back();
}

Morphism eval_expr(const std::string& src, const StructureBundle& bundle) {
  Expr e = parse(src);
  return evaluate(compile(e, bundle), bundle);
}

EquationSet equation_set_from_json(const std::string& json_text) {
  nlohmann::json j = nlohmann::json::parse(json_text);
  EquationSet eqs;
  eqs.name = j.at("name").get<std::string>();
  eqs.paper_tag = j.value("paper_tag", "");
  for (const auto& p : j.at("pairs")) {
    eqs.ids.push_back(p.value("id", ""));
    eqs.pairs.emplace_back(p.at("lhs").get<std::string>(), p.at("rhs").get<std::string>());
  }
  return eqs;
}

std::string equation_set_to_json(const EquationSet& eqs) {
  nlohmann::json j;
  j["name"] = eqs.name;
  j["paper_tag"] = eqs.paper_tag;
  j["pairs"] = nlohmann::json::array();
  for (std::size_t i = 0; i < eqs.pairs.size(); ++i) {
    nlohmann::json p;
    if (!eqs.ids[i].empty()) p["id"] = eqs.ids[i];
    p["lhs"] = eqs.pairs[i].first;
    p["rhs"] = eqs.pairs[i].second;
    j["pairs"].push_back(p);
  }
  return j.dump(2);
}

CheckReport check_equations(const EquationSet& eqs, const StructureBundle& bundle) {
  auto t0 = std::chrono::steady_clock::now();
  CheckReport rep;
  rep.structure = eqs.name;
  rep.kind = "equations";
  for (std::size_t i = 0; i < eqs.pairs.size(); ++i) {
    Morphism lhs = eval_expr(eqs.pairs[i].first, bundle);
    Morphism rhs = eval_expr(eqs.pairs[i].second, bundle);
    if (dims_of(lhs.dom()) != dims_of(rhs.dom()) || dims_of(lhs.cod()) != dims_of(rhs.cod()))
      throw SignatureMismatch("equation " + eqs.name + "#" + std::to_string(i) +
                              ": sides have different signatures");
    std::string id = eqs.ids[i].empty() ? eqs.name + "#" + std::to_string(i) : eqs.ids[i];
    rep.items.push_back(check_item(id, eqs.paper_tag, lhs, rhs));
  }
  rep.wall_ms =
      std::chrono::duration<double, std::milli>(std::chrono::steady_clock::now() - t0).count();
  return rep;
}

}  // namespace wreathkit::dsl
