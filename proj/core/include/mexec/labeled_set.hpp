#pragma once

#include <cstdint>
#include <random>
#include <string>
#include <vector>

#include "mexec/lattice.hpp"

namespace mexec {

// Values are opaque to every operation here: only equality and the total
// order are used (for deduplicated, deterministic storage).
using Value = std::int64_t;

// A finite set of labeled values, stored deduplicated and ordered by
// (canonical label order, value).
class LabeledSet {
public:
  struct Entry {
    Value value;
    Label label;

    friend bool operator==(const Entry& a, const Entry& b) {
      return a.value == b.value && a.label == b.label;
    }
    friend std::strong_ordering operator<=>(const Entry& a, const Entry& b) {
      if (auto c = a.label <=> b.label; c != 0) return c;
      return a.value <=> b.value;
    }
  };

  LabeledSet() = default;
  explicit LabeledSet(std::vector<Entry> entries);

  void insert(Value value, Label label);
  void unite(const LabeledSet& other);

  std::size_t size() const { return entries_.size(); }
  bool empty() const { return entries_.empty(); }
  auto begin() const { return entries_.begin(); }
  auto end() const { return entries_.end(); }
  const std::vector<Entry>& entries() const { return entries_; }

  friend bool operator==(const LabeledSet& a, const LabeledSet& b) = default;

private:
  std::vector<Entry> entries_;
};

// x down ell: the elements whose labels flow to ell.
LabeledSet project(const Lattice& l, const LabeledSet& x, const Label& at);

// x and y look the same to an observer at `at`.
bool equivalent_at(const Lattice& l, const LabeledSet& x, const LabeledSet& y, const Label& at);

// The distinct labels of x, in canonical order.
std::vector<Label> labels_of(const LabeledSet& x);

// x at L: elements whose labels are members of the given set.
LabeledSet select(const LabeledSet& x, std::span<const Label> labels);

// Returns a set that agrees with x at `at` but may differ arbitrarily in
// elements whose labels do not flow to `at`; replacement labels are drawn
// from `pool`. Test-input generator for the noninterference checker.
LabeledSet perturb_above(const Lattice& l, const LabeledSet& x, const Label& at,
                         std::span<const Label> pool, std::mt19937_64& rng);

std::string render(const Lattice& l, const LabeledSet& x);
// Parses "{v^{label}, ...}" with labels in the lattice's own syntax.
LabeledSet parse_labeled_set(const Lattice& l, std::string_view text);

}  // namespace mexec
