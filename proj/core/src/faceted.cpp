#include "mexec/faceted.hpp"

#include <algorithm>

namespace mexec {

Faceted Faceted::branch(Label guard, Faceted secret, Faceted open) {
  Faceted f(0);
  f.branch_ = std::make_shared<const Branch>(
      Branch{std::move(guard), std::move(secret), std::move(open)});
  return f;
}

Value facet_select(const Lattice& l, const Faceted& f, const Label& at) {
  const Faceted* node = &f;
  while (!node->is_leaf()) {
    node = l.leq(node->guard(), at) ? &node->secret_side() : &node->open_side();
  }
  return node->leaf();
}

namespace {

void collect(const Faceted& f, std::vector<Label>& out) {
  if (f.is_leaf()) return;
  out.push_back(f.guard());
  collect(f.secret_side(), out);
  collect(f.open_side(), out);
}

}  // namespace

std::vector<Label> facet_labels(const std::vector<Faceted>& fs) {
  std::vector<Label> out;
  for (const auto& f : fs) collect(f, out);
  std::sort(out.begin(), out.end());
  out.erase(std::unique(out.begin(), out.end()), out.end());
  return out;
}

}  // namespace mexec
