#pragma once

#include <optional>
#include <vector>

#include "mexec/faceted.hpp"
#include "mexec/program.hpp"

namespace mexec {

// The example-program corpus. Each factory captures its lattice (and
// parameters) and returns a fresh instrumented program.

// Two-point only: the count of L-visible inputs at L and of all inputs at
// H. Noninterfering.
ProgramPtr make_secure(LatticePtr two_point);

// Two-point only: the total input count, published at L. Interfering.
ProgramPtr make_insecure(LatticePtr two_point);

// Sum of all inputs, labeled with the join of all input labels.
// Interfering: the output label reveals which labels were present.
ProgramPtr make_bad_sum(LatticePtr lattice);

// Sum of the inputs whose labels lie in `levels`, always labeled with the
// join of `levels`. Noninterfering; the output label never depends on x.
ProgramPtr make_good_sum(LatticePtr lattice, std::vector<Label> levels);

// All pairwise maxima, each at the join of the two labels (self-pairs
// included). Noninterfering.
ProgramPtr make_pairwise(LatticePtr lattice);

// pairwise restricted to elements with atom-set labels of size <= 1;
// every output label has size <= 2. Noninterfering.
ProgramPtr make_pairwise_1(LatticePtr lattice);

struct ProgramSpec {
  std::string name;
  bool noninterfering = false;
  bool needs_two_point = false;     // secure/insecure are two-point programs
  bool needs_atom_labels = false;   // pairwise_1 wants powerset-family labels
};

const std::vector<ProgramSpec>& program_corpus();

// Builds a program from its CLI name: secure | insecure | badSum
// | goodSum:<labels> | pairwise | pairwise1. A bare "goodSum" uses
// `default_good_sum_levels` when provided.
ProgramPtr make_program(const std::string& name, LatticePtr lattice,
                        std::optional<std::vector<Label>> default_good_sum_levels = std::nullopt);

// Faceted list sums: the leaky variants and the pre-labeled safe one.
Faceted bad_list_sum_1(const Lattice& l, const std::vector<Faceted>& inputs);
Faceted bad_list_sum_2(const Lattice& l, const std::vector<Faceted>& inputs);
Faceted good_list_sum(const Lattice& l, const Label& at, const std::vector<Faceted>& inputs);

}  // namespace mexec
