#pragma once

#include <functional>
#include <span>
#include <string>
#include <vector>

#include "mexec/lattice.hpp"

namespace mexec {

// The closure set C(S) = { join of S' | S' subset of S }: every view a
// multi-execution has to run. Computed by incremental join accumulation,
// C(S + l) = C(S) u { c v l | c in C(S) }, which needs |S| * 2^|S| joins.
// Refuses sets larger than `limit`.
std::vector<Label> closure_bruteforce(const Lattice& l, std::span<const Label> labels,
                                      std::size_t limit = 20);

// l in C(S) iff the join of S's down-set at l equals l. O(|S|) lattice
// operations; no closure set is materialized.
bool in_closure(const Lattice& l, const Label& candidate, std::span<const Label> labels);

// A finite superset of C(S), used to enumerate closures without paying
// for the brute force. `exact` generators promise to return C(S) itself.
struct CandidateGenerator {
  std::string name;
  std::string bound_note;
  bool exact = false;
  std::function<std::vector<Label>(const Lattice&, std::span<const Label>)> generate;
};

// The generator matching the lattice construction: discrete uses
// S u {bot,top}, truncated powersets use the small subsets of S's
// support, products multiply component closures, everything else falls
// back to the brute-force closure.
CandidateGenerator default_candidate_generator(const Lattice& l);

// Filters the generator's candidates through in_closure; emits exactly
// C(S) in canonical order. With `validate`, cross-checks the result
// against the brute-force oracle and reports an unsound generator by the
// first missing label.
std::vector<Label> enumerate_closure(const Lattice& l, std::span<const Label> labels,
                                     const CandidateGenerator& gen, bool validate = false);

// enumerate_closure with the lattice's default generator.
std::vector<Label> compute_closure(const Lattice& l, std::span<const Label> labels,
                                   std::size_t bruteforce_limit = 20);

// candidate in (at up C(S)): does `candidate` see exactly `at`'s view?
// Computed as at <= candidate and every label of S below candidate being
// below at; O(|S|) lattice operations. `at` must lie in C(S), which is
// verified when `validate` is set.
bool upset_contains(const Lattice& l, const Label& candidate, const Label& at,
                    std::span<const Label> labels, bool validate = false);

struct ClosureProfileRow {
  std::size_t n = 0;
  std::size_t closure_size = 0;      // max |C(S)| over S in the pool, |S| <= n
  std::vector<Label> witness;        // an S attaining it
};

struct ClosureProfile {
  std::string lattice;
  std::vector<ClosureProfileRow> rows;
};

struct ProfileLimits {
  std::size_t max_pool = 20;
  std::size_t max_n = 6;
};

// Exact worst-case closure sizes over subsets of a finite label pool.
// Lower bounds for the lattice-wide closure-size function; exact when the
// pool covers the carrier.
ClosureProfile closure_size_profile(const Lattice& l, std::size_t n_max,
                                    std::span<const Label> pool,
                                    ProfileLimits limits = {});

std::string to_csv(const Lattice& l, const ClosureProfile& profile);

// Witness families whose closures realize the known growth rates.
//   powerset-singletons    {{p1},...,{pn}}           |C| = 2^n
//   discrete-atoms         n discrete atoms          |C| = n+2 (n >= 2)
//   natchain2-L            the L-shape in Nat x Nat  |C| = floor(n/2)^2
//   exponential-singletons singleton antichains      |C| = 2^n
struct OmegaFamily {
  LatticePtr lattice;
  std::vector<Label> labels;
};

OmegaFamily omega_family(std::string_view kind, std::size_t n);

}  // namespace mexec
