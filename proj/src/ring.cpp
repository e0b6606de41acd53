#include "germs/ring.hpp"

#include <algorithm>
#include <set>

#include "germs/error.hpp"

namespace germs {

Ring::Ring(std::vector<std::string> variables, Field field, MonomialOrder order)
    : vars_(std::move(variables)), field_(field), order_(order) {
  std::set<std::string> seen;
  for (const auto& v : vars_) {
    if (v.empty()) throw Error("empty variable name");
    if (!seen.insert(v).second) throw Error("duplicate variable name '" + v + "'");
  }
  if (order_.elimination_block > vars_.size()) throw Error("elimination block larger than ring");
}

std::optional<std::size_t> Ring::index_of(const std::string& name) const {
  auto it = std::find(vars_.begin(), vars_.end(), name);
  if (it == vars_.end()) return std::nullopt;
  return static_cast<std::size_t>(it - vars_.begin());
}

std::string Ring::describe() const {
  std::string s = field_.name() + "[";
  for (std::size_t i = 0; i < vars_.size(); ++i) s += (i ? "," : "") + vars_[i];
  return s + "] " + order_.name();
}

RingPtr make_ring(std::vector<std::string> variables, Field field, MonomialOrder order) {
  return std::make_shared<const Ring>(std::move(variables), field, order);
}

bool same_ring(const RingPtr& a, const RingPtr& b) { return a == b || (a && b && *a == *b); }

void require_same_ring(const RingPtr& a, const RingPtr& b) {
  if (!same_ring(a, b))
    throw RingMismatch("ring mismatch: " + (a ? a->describe() : "null") + " vs " +
                       (b ? b->describe() : "null"));
}

}  // namespace germs
