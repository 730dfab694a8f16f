#pragma once

#include <cstdint>
#include <memory>
#include <string>

#include "mexec/lattice.hpp"

namespace mexec {

// Concrete constructions. Instances are immutable and shared freely.

class TwoPointLattice final : public Lattice {
public:
  TwoPointLattice();
  Family family() const override { return Family::TwoPoint; }
  const std::string& descriptor() const override { return descriptor_; }
  Label bot() const override;
  Label join(const Label& a, const Label& b) const override;
  bool leq(const Label& a, const Label& b) const override;
  bool has_top() const override { return true; }
  Label top() const override;
  bool has_meet() const override { return true; }
  Label meet(const Label& a, const Label& b) const override;
  bool contains(const Label& l) const override;
  std::string render(const Label& l) const override;
  Label parse_label(std::string_view text) const override;
  std::optional<std::vector<Label>> enumerate(std::size_t limit) const override;

private:
  std::string descriptor_{"two-point"};
};

class NatChainLattice final : public Lattice {
public:
  NatChainLattice();
  Family family() const override { return Family::NatChain; }
  const std::string& descriptor() const override { return descriptor_; }
  Label bot() const override;
  Label join(const Label& a, const Label& b) const override;
  bool leq(const Label& a, const Label& b) const override;
  bool has_meet() const override { return true; }
  Label meet(const Label& a, const Label& b) const override;
  bool contains(const Label& l) const override;
  std::string render(const Label& l) const override;
  Label parse_label(std::string_view text) const override;
  std::optional<std::vector<Label>> enumerate(std::size_t limit) const override;

private:
  std::string descriptor_{"nat"};
};

// Bottom, top, and pairwise-incomparable atoms.
class DiscreteLattice final : public Lattice {
public:
  explicit DiscreteLattice(AtomSet atoms);
  Family family() const override { return Family::Discrete; }
  const std::string& descriptor() const override { return descriptor_; }
  Label bot() const override;
  Label join(const Label& a, const Label& b) const override;
  bool leq(const Label& a, const Label& b) const override;
  bool has_top() const override { return true; }
  Label top() const override;
  bool contains(const Label& l) const override;
  std::string render(const Label& l) const override;
  Label parse_label(std::string_view text) const override;
  std::optional<std::vector<Label>> enumerate(std::size_t limit) const override;

  const AtomSet& atoms() const { return atoms_; }
  Label atom(const Atom& a) const;

private:
  AtomSet atoms_;
  std::string descriptor_;
};

class PowersetLattice final : public Lattice {
public:
  explicit PowersetLattice(AtomSet atoms);
  Family family() const override { return Family::Powerset; }
  const std::string& descriptor() const override { return descriptor_; }
  Label bot() const override;
  Label join(const Label& a, const Label& b) const override;
  bool leq(const Label& a, const Label& b) const override;
  bool has_top() const override { return true; }
  Label top() const override;
  bool has_meet() const override { return true; }
  Label meet(const Label& a, const Label& b) const override;
  bool contains(const Label& l) const override;
  std::string render(const Label& l) const override;
  Label parse_label(std::string_view text) const override;
  std::optional<std::vector<Label>> enumerate(std::size_t limit) const override;

  const AtomSet& atoms() const { return atoms_; }

private:
  AtomSet atoms_;
  std::string descriptor_;
};

// Subsets of size <= k plus a distinguished top.
class TruncatedPowersetLattice final : public Lattice {
public:
  TruncatedPowersetLattice(std::size_t k, AtomSet atoms);
  Family family() const override { return Family::TruncatedPowerset; }
  const std::string& descriptor() const override { return descriptor_; }
  Label bot() const override;
  Label join(const Label& a, const Label& b) const override;
  bool leq(const Label& a, const Label& b) const override;
  bool has_top() const override { return true; }
  Label top() const override;
  bool has_meet() const override { return true; }
  Label meet(const Label& a, const Label& b) const override;
  bool contains(const Label& l) const override;
  std::string render(const Label& l) const override;
  Label parse_label(std::string_view text) const override;
  std::optional<std::vector<Label>> enumerate(std::size_t limit) const override;

  std::size_t truncation() const { return k_; }
  const AtomSet& atoms() const { return atoms_; }

private:
  std::size_t k_;
  AtomSet atoms_;
  std::string descriptor_;
};

class ProductLattice final : public Lattice {
public:
  ProductLattice(LatticePtr left, LatticePtr right);
  Family family() const override { return Family::Product; }
  const std::string& descriptor() const override { return descriptor_; }
  Label bot() const override;
  Label join(const Label& a, const Label& b) const override;
  bool leq(const Label& a, const Label& b) const override;
  bool has_top() const override;
  Label top() const override;
  bool has_meet() const override;
  Label meet(const Label& a, const Label& b) const override;
  bool contains(const Label& l) const override;
  std::string render(const Label& l) const override;
  Label parse_label(std::string_view text) const override;
  std::optional<std::vector<Label>> enumerate(std::size_t limit) const override;

  const LatticePtr& left() const { return left_; }
  const LatticePtr& right() const { return right_; }

private:
  LatticePtr left_, right_;
  std::string descriptor_;
};

// right stacked above left.
class VSumLattice final : public Lattice {
public:
  VSumLattice(LatticePtr low, LatticePtr high);
  Family family() const override { return Family::VSum; }
  const std::string& descriptor() const override { return descriptor_; }
  Label bot() const override;
  Label join(const Label& a, const Label& b) const override;
  bool leq(const Label& a, const Label& b) const override;
  bool has_top() const override;
  Label top() const override;
  bool contains(const Label& l) const override;
  std::string render(const Label& l) const override;
  Label parse_label(std::string_view text) const override;
  std::optional<std::vector<Label>> enumerate(std::size_t limit) const override;

  const LatticePtr& low() const { return low_; }
  const LatticePtr& high() const { return high_; }

private:
  LatticePtr low_, high_;
  std::string descriptor_;
};

// left and right side by side, glued between a fresh bottom and top.
class HSumLattice final : public Lattice {
public:
  HSumLattice(LatticePtr left, LatticePtr right);
  Family family() const override { return Family::HSum; }
  const std::string& descriptor() const override { return descriptor_; }
  Label bot() const override;
  Label join(const Label& a, const Label& b) const override;
  bool leq(const Label& a, const Label& b) const override;
  bool has_top() const override { return true; }
  Label top() const override;
  bool contains(const Label& l) const override;
  std::string render(const Label& l) const override;
  Label parse_label(std::string_view text) const override;
  std::optional<std::vector<Label>> enumerate(std::size_t limit) const override;

  const LatticePtr& left() const { return left_; }
  const LatticePtr& right() const { return right_; }

private:
  LatticePtr left_, right_;
  std::string descriptor_;
};

// Finite antichains of base labels ordered by "every element is covered
// by some element of the other side". The quotient by mutual domination
// is realized by the antichain-of-maximal-elements normal form.
class ExponentialLattice final : public Lattice {
public:
  explicit ExponentialLattice(LatticePtr base);
  Family family() const override { return Family::Exponential; }
  const std::string& descriptor() const override { return descriptor_; }
  Label bot() const override;
  Label join(const Label& a, const Label& b) const override;
  bool leq(const Label& a, const Label& b) const override;
  bool has_top() const override;
  Label top() const override;
  bool contains(const Label& l) const override;
  std::string render(const Label& l) const override;
  Label parse_label(std::string_view text) const override;
  std::optional<std::vector<Label>> enumerate(std::size_t limit) const override;

  const LatticePtr& base() const { return base_; }
  Label make(std::vector<Label> elements) const;  // normalizes

private:
  LatticePtr base_, descriptor_holder_;
  std::string descriptor_;
};

// Pairs of reduced monotone CNF formulas over a finite principal set.
// leq(<c,i>, <c',i'>) iff c' => c and i => i'; join conjoins
// confidentiality and disjoins integrity.
class DcLabelLattice final : public Lattice {
public:
  explicit DcLabelLattice(AtomSet principals);
  Family family() const override { return Family::DcLabels; }
  const std::string& descriptor() const override { return descriptor_; }
  Label bot() const override;
  Label join(const Label& a, const Label& b) const override;
  bool leq(const Label& a, const Label& b) const override;
  bool has_top() const override { return true; }
  Label top() const override;
  bool contains(const Label& l) const override;
  std::string render(const Label& l) const override;
  Label parse_label(std::string_view text) const override;
  std::optional<std::vector<Label>> enumerate(std::size_t limit) const override;

  const AtomSet& principals() const { return principals_; }
  // All reduced monotone CNFs over the principals (antichains of
  // non-empty clauses), including "true". Feasible up to 5 principals.
  const std::vector<Cnf>& all_formulas() const;

private:
  AtomSet principals_;
  Cnf all_singletons_;  // the strongest formula over the carrier
  std::string descriptor_;
  mutable std::vector<Cnf> formulas_;  // lazy cache
};

LatticePtr make_two_point();
LatticePtr make_nat_chain();
LatticePtr make_discrete(AtomSet atoms);
LatticePtr make_powerset(AtomSet atoms);
LatticePtr make_truncated_powerset(std::size_t k, AtomSet atoms);
LatticePtr make_product(LatticePtr left, LatticePtr right);
LatticePtr make_vsum(LatticePtr low, LatticePtr high);
LatticePtr make_hsum(LatticePtr left, LatticePtr right);
LatticePtr make_exponential(LatticePtr base);
LatticePtr make_dc_labels(AtomSet principals);

// p1..pn
AtomSet default_principals(std::size_t n);

// Builds a lattice from a textual descriptor:
//   two-point | nat | discrete:<n> | powerset:<n> | trunc:<k>:<n>
//   | product(<d>,<d>) | vsum(<d>,<d>) | hsum(<d>,<d>) | exp(<d>) | dc:<n>
// where <n> is a principal count (principals named p1..pn) or an explicit
// {a,b,...} atom list.
LatticePtr parse_lattice(std::string_view descriptor);

}  // namespace mexec
