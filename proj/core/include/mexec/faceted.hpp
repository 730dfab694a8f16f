#pragma once

#include <memory>
#include <vector>

#include "mexec/labeled_set.hpp"

namespace mexec {

// A faceted value: a decision tree over labels. A branch <g ? f0 : f1>
// presents f0 to observers that g flows to and f1 to everyone else.
class Faceted {
public:
  /* implicit */ Faceted(Value leaf) : leaf_(leaf) {}
  static Faceted branch(Label guard, Faceted secret, Faceted open);

  bool is_leaf() const { return branch_ == nullptr; }
  Value leaf() const { return leaf_; }
  const Label& guard() const;
  const Faceted& secret_side() const;
  const Faceted& open_side() const;

private:
  struct Branch;

  Value leaf_ = 0;
  std::shared_ptr<const Branch> branch_;
};

struct Faceted::Branch {
  Label guard;
  Faceted secret;
  Faceted open;
};

inline const Label& Faceted::guard() const { return branch_->guard; }
inline const Faceted& Faceted::secret_side() const { return branch_->secret; }
inline const Faceted& Faceted::open_side() const { return branch_->open; }

// f @ at: the view of f from level `at`.
Value facet_select(const Lattice& l, const Faceted& f, const Label& at);

// The guard labels occurring anywhere in a list of faceted values.
std::vector<Label> facet_labels(const std::vector<Faceted>& fs);

}  // namespace mexec
