#pragma once

#include <cstdint>
#include <functional>
#include <memory>
#include <optional>
#include <span>
#include <string>
#include <vector>

#include "mexec/label.hpp"

namespace mexec {

enum class Family {
  TwoPoint,
  NatChain,
  Discrete,
  Powerset,
  TruncatedPowerset,
  Product,
  VSum,
  HSum,
  Exponential,
  DcLabels,
};

// A join semilattice with bottom, an optional top and an optional meet.
// Labels and lattices are immutable values; every operation is pure.
class Lattice {
public:
  virtual ~Lattice() = default;

  virtual Family family() const = 0;
  // Textual descriptor, e.g. "powerset:3" or "product(two-point,nat)".
  virtual const std::string& descriptor() const = 0;

  virtual Label bot() const = 0;
  virtual Label join(const Label& a, const Label& b) const = 0;
  virtual bool leq(const Label& a, const Label& b) const = 0;

  virtual bool has_top() const { return false; }
  virtual Label top() const;  // DomainError unless has_top()
  virtual bool has_meet() const { return false; }
  virtual Label meet(const Label& a, const Label& b) const;  // DomainError unless has_meet()

  // Carrier membership check for domain errors.
  virtual bool contains(const Label& l) const = 0;

  virtual std::string render(const Label& l) const = 0;
  virtual Label parse_label(std::string_view text) const = 0;

  // All carrier labels in canonical order when the carrier has at most
  // `limit` elements; nullopt for infinite or oversized carriers.
  virtual std::optional<std::vector<Label>> enumerate(std::size_t limit) const = 0;
};

using LatticePtr = std::shared_ptr<const Lattice>;

// True iff both arguments are the same lattice construction.
bool same_lattice(const Lattice& a, const Lattice& b);

// Least upper bound of a finite label set; bot for the empty set.
// Throws DomainError if some label is outside the carrier.
Label join_all(const Lattice& l, std::span<const Label> labels);

// Greatest lower bound of a finite label set; top for the empty set.
// Requires meet and top.
Label meet_all(const Lattice& l, std::span<const Label> labels);

struct LawCheck {
  std::string law;
  bool passed = true;
  std::string counterexample;  // empty when passed
};

struct LawReport {
  std::vector<LawCheck> checks;
  bool exhaustive = false;  // true when every tuple from the sample was tried

  bool all_passed() const;
  const LawCheck* find(std::string_view law) const;
  std::string summary() const;
};

// Checks the semilattice axioms on a label sample: associativity,
// commutativity, idempotence, bot identity, order/join coherence,
// antisymmetry, and the top/meet laws when present. Exhaustive over the
// sample when |sample|^3 stays within `triple_budget`, otherwise the
// remaining triples are drawn at random.
LawReport check_lattice_laws(const Lattice& l, std::span<const Label> sample,
                             std::size_t triple_budget = 80'000'000,
                             std::uint64_t seed = 1);

struct HomReport {
  LawReport laws;        // bot preservation, join preservation
  bool injective = true; // on the sample
  std::string injectivity_counterexample;

  bool homomorphism() const { return laws.all_passed(); }
};

// Checks h(bot)=bot and h(a v b) = h(a) v h(b) on sampled pairs, and
// reports whether h is injective on the sample (an embedding).
HomReport check_homomorphism(const std::function<Label(const Label&)>& h,
                             const Lattice& from, const Lattice& to,
                             std::span<const Label> sample,
                             std::size_t pair_budget = 4'000'000,
                             std::uint64_t seed = 1);

}  // namespace mexec
