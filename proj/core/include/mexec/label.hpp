#pragma once

#include <compare>
#include <cstdint>
#include <memory>
#include <string>
#include <variant>
#include <vector>

namespace mexec {

using Atom = std::string;
// Sorted, duplicate-free set of atom names.
using AtomSet = std::vector<Atom>;

// Monotone CNF: a set of clauses, each clause a non-empty set of atoms.
// Reduced form: clauses sorted, no duplicates, no clause a superset of
// another. Equal formulas have identical reduced forms.
using Clause = AtomSet;
using Cnf = std::vector<Clause>;

AtomSet make_atom_set(std::vector<Atom> atoms);
bool is_sorted_unique(const AtomSet& s);
bool atom_subset(const AtomSet& a, const AtomSet& b);
AtomSet atom_union(const AtomSet& a, const AtomSet& b);
AtomSet atom_intersection(const AtomSet& a, const AtomSet& b);

Cnf reduce_cnf(Cnf f);
bool is_reduced_cnf(const Cnf& f);
// F => G iff every clause of G has some clause of F as a subset.
bool cnf_implies(const Cnf& f, const Cnf& g);
// Conjunction: union of clause sets, reduced.
Cnf cnf_and(const Cnf& f, const Cnf& g);
// Disjunction: pairwise clause unions, reduced. x v true = true.
Cnf cnf_or(const Cnf& f, const Cnf& g);

// A label value. One representation shared by every lattice construction;
// which shapes are legal is the lattice's business (`Lattice::contains`).
//
//   Nat    - natural number (chains; the two-point lattice uses 0/1)
//   Atoms  - finite atom set (powerset family, discrete atoms)
//   Mark   - adjoined element: 0 = extra bottom, 1 = extra top
//   Side   - tagged injection into a sum lattice
//   Pair   - product lattice element
//   Anti   - antichain of labels (exponential lattice)
//   Dc     - pair of reduced monotone CNFs (confidentiality, integrity)
//
// Labels are immutable values with a total "canonical" order used for
// deterministic set storage: kind index first, then payload (atoms by
// name, sets as sorted lists, pairs lexicographic, sum tag before
// payload).
class Label {
public:
  enum class Kind : std::uint8_t { Nat, Atoms, Mark, Side, Pair, Anti, Dc };

  struct SideBody;
  struct PairBody;
  struct DcBody;

  static Label nat(std::uint64_t n);
  static Label atoms(AtomSet s);
  static Label mark(std::uint8_t which);  // 0 = bottom mark, 1 = top mark
  static Label side(std::uint8_t index, Label payload);
  static Label pair(Label first, Label second);
  static Label antichain(std::vector<Label> elements);  // stored sorted
  static Label dc(Cnf confidentiality, Cnf integrity);

  Kind kind() const { return kind_; }
  bool is(Kind k) const { return kind_ == k; }

  std::uint64_t nat_value() const;
  const AtomSet& atom_set() const;
  std::uint8_t mark_value() const;
  std::uint8_t side_index() const;
  const Label& side_payload() const;
  const Label& first() const;
  const Label& second() const;
  const std::vector<Label>& elements() const;
  const Cnf& confidentiality() const;
  const Cnf& integrity() const;

  friend std::strong_ordering operator<=>(const Label& a, const Label& b);
  friend bool operator==(const Label& a, const Label& b);

  // Construction-agnostic rendering, used for diagnostics; prefer
  // Lattice::render for user-facing output.
  std::string debug_string() const;

private:
  using Rep = std::variant<std::uint64_t,                  // Nat
                           AtomSet,                         // Atoms
                           std::uint8_t,                    // Mark
                           std::shared_ptr<const SideBody>, // Side
                           std::shared_ptr<const PairBody>, // Pair
                           std::vector<Label>,              // Anti
                           std::shared_ptr<const DcBody>>;  // Dc

  Label(Kind k, Rep rep) : kind_(k), rep_(std::move(rep)) {}

  Kind kind_;
  Rep rep_;
};

struct Label::SideBody {
  std::uint8_t index;
  Label payload;
};

struct Label::PairBody {
  Label first;
  Label second;
};

struct Label::DcBody {
  Cnf confidentiality;
  Cnf integrity;
};

std::string render_atom_set(const AtomSet& s);
std::string render_cnf(const Cnf& f);

}  // namespace mexec
