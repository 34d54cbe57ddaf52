#include "wreathkit/report.hpp"

namespace wreathkit {

std::vector<std::int64_t> unflatten_index(std::int64_t flat, const std::vector<SpaceRef>& spaces) {
  std::vector<std::int64_t> idx(spaces.size(), 0);
  for (std::size_t k = spaces.size(); k-- > 0;) {
    idx[k] = flat % spaces[k].dim;
    flat /= spaces[k].dim;
  }
  return idx;
}

CheckItem check_item(const std::string& id, const std::string& tag, const Morphism& lhs,
                     const Morphism& rhs) {
  CheckItem it;
  it.id = id;
  it.tag = tag;
  Morphism res = lhs - rhs;
  it.pass = res.is_zero();
  if (!it.pass) {
    auto nz = res.mat().first_nonzero();
    it.violation_cod = unflatten_index(static_cast<std::int64_t>(nz->first), res.cod());
    it.violation_dom = unflatten_index(static_cast<std::int64_t>(nz->second), res.dom());
    it.residual = std::move(res);
  }
  return it;
}

CheckItem boolean_item(const std::string& id, const std::string& tag, bool pass) {
  CheckItem it;
  it.id = id;
  it.tag = tag;
  it.pass = pass;
  return it;
}

}  // namespace wreathkit
