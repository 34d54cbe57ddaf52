#include <map>
#include <string>

#include "wreathkit/dsl.hpp"
#include "wreathkit/errors.hpp"

namespace wreathkit::dsl {

namespace detail {
const std::map<std::string, std::string>& embedded_equation_sources();
}

const EquationSet& builtin_equations(const std::string& name) {
  static std::map<std::string, EquationSet> cache;
  auto it = cache.find(name);
  if (it != cache.end()) return it->second;
  const auto& sources = detail::embedded_equation_sources();
  auto src = sources.find(name);
  if (src == sources.end()) throw Error("no builtin equation set named '" + name + "'");
  auto [ins, ok] = cache.emplace(name, equation_set_from_json(src->second));
  return ins->second;
}

}  // namespace wreathkit::dsl
