#pragma once

#include <random>

#include "mexec/closure.hpp"
#include "mexec/galois.hpp"
#include "mexec/program.hpp"

namespace mexec {

// Multi-execution enforcement: runs p once per level in the closure of
// the input's labels, on the projection at that level, and keeps the
// outputs whose labels see exactly that view. Exactly |C(labels(x))|
// runs of p; up-set membership is decided by the O(|S|) predicate, never
// by materializing the up-set. A failing run aborts the enforcement with
// the offending level attached.
LabeledSet mef(const Lattice& l, const Program& p, const LabeledSet& x,
               std::size_t closure_limit = 20);

// The Galois-connected variant: levels come from
// C_{F -| G}(labels(x)) = G*(C(F*(labels(x)))), computed in the target
// lattice, so the run count scales with the target's closure sizes.
LabeledSet mef_galois(const GaloisConnection& gc, const Program& p, const LabeledSet& x,
                      std::size_t closure_limit = 20);

// Random labeled sets over a fixed label pool, plus (level, input)
// scenarios for the checkers below.
class InputGenerator {
public:
  InputGenerator(LatticePtr lattice, std::vector<Label> pool, std::size_t max_elements = 5,
                 Value min_value = 0, Value max_value = 9);

  const Lattice& lattice() const { return *lattice_; }
  const std::vector<Label>& pool() const { return pool_; }

  Label random_label(std::mt19937_64& rng) const;
  LabeledSet random_set(std::mt19937_64& rng) const;
  std::pair<Label, LabeledSet> random_scenario(std::mt19937_64& rng) const;

private:
  LatticePtr lattice_;
  std::vector<Label> pool_;
  std::size_t max_elements_;
  Value min_value_, max_value_;
};

struct NiViolation {
  Label level;
  LabeledSet x, y;
  LabeledSet out_x, out_y;
};

struct NiReport {
  std::size_t trials = 0;
  std::vector<NiViolation> violations;
  bool clean() const { return violations.empty(); }
};

using Subject = std::function<LabeledSet(const LabeledSet&)>;

// Noninterference as a testable property: for generated (level, x) and a
// perturbation y of x above the level, the outputs must stay equivalent
// at the level. Violations are reported with full witnesses.
NiReport check_noninterference(const Lattice& l, const Subject& subject,
                               const InputGenerator& gen, std::size_t trials,
                               std::uint64_t seed);

struct TransparencyMismatch {
  LabeledSet x;
  LabeledSet got, want;
};

struct TransparencyReport {
  std::size_t trials = 0;
  std::vector<TransparencyMismatch> mismatches;
  bool clean() const { return mismatches.empty(); }
};

// Without a connection: asserts mef(p, x) = p(x) on generated inputs (p
// must be noninterfering for this to be expected). With a connection and
// fixpoints_only: compares only at output labels j with G(F(j)) = j, the
// levels the connection can represent; with fixpoints_only = false the
// whole outputs are compared (expected to fail for lossy connections).
TransparencyReport check_transparency(const Lattice& l, const Program& p,
                                      const InputGenerator& gen, std::size_t trials,
                                      std::uint64_t seed,
                                      const GaloisConnection* gc = nullptr,
                                      bool fixpoints_only = true);

// The same comparison over a fixed input list (used for universes).
TransparencyReport check_transparency_on(const Lattice& l, const Program& p,
                                         std::span<const LabeledSet> inputs,
                                         const GaloisConnection* gc = nullptr,
                                         bool fixpoints_only = true);

}  // namespace mexec
