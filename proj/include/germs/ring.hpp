#pragma once

#include <memory>
#include <optional>
#include <string>
#include <vector>

#include "germs/monomial.hpp"
#include "germs/scalar.hpp"

namespace germs {

/// Polynomial ring descriptor: variable names, coefficient field and the
/// monomial order every polynomial over this ring is sorted by.
class Ring {
 public:
  Ring(std::vector<std::string> variables, Field field, MonomialOrder order = {});

  const std::vector<std::string>& variables() const { return vars_; }
  std::size_t nvars() const { return vars_.size(); }
  Field field() const { return field_; }
  const MonomialOrder& order() const { return order_; }

  std::optional<std::size_t> index_of(const std::string& name) const;

  std::string describe() const;

  friend bool operator==(const Ring&, const Ring&) = default;

 private:
  std::vector<std::string> vars_;
  Field field_;
  MonomialOrder order_;
};

using RingPtr = std::shared_ptr<const Ring>;

RingPtr make_ring(std::vector<std::string> variables, Field field = Field::rationals(),
                  MonomialOrder order = {});

bool same_ring(const RingPtr& a, const RingPtr& b);

/// Throws RingMismatch unless the two descriptors agree.
void require_same_ring(const RingPtr& a, const RingPtr& b);

}  // namespace germs
