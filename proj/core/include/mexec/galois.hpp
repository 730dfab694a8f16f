#pragma once

#include <functional>
#include <optional>
#include <span>
#include <string>
#include <vector>

#include "mexec/lattice.hpp"
#include "mexec/program.hpp"

namespace mexec {

// A Galois connection F -| G between two lattices:
//   F(l) <=' j  iff  l <= G(j)
// F is the lower adjoint (re-labeling), G the upper adjoint
// (back-labeling). G o F is always a closure operator.
class GaloisConnection {
public:
  using Map = std::function<Label(const Label&)>;

  GaloisConnection(std::string name, LatticePtr source, LatticePtr target, Map forward,
                   Map backward);

  const std::string& name() const { return name_; }
  const Lattice& source() const { return *source_; }
  const Lattice& target() const { return *target_; }
  const LatticePtr& source_ptr() const { return source_; }
  const LatticePtr& target_ptr() const { return target_; }

  Label forward(const Label& l) const { return forward_(l); }   // F
  Label backward(const Label& j) const { return backward_(j); } // G
  Label round_trip(const Label& l) const { return backward_(forward_(l)); }  // G o F

private:
  std::string name_;
  LatticePtr source_, target_;
  Map forward_, backward_;
};

// F(j) = bot if j <= at else top; G(bot) = at, G(top) = lattice top.
// Requires a source with top.
GaloisConnection specify_unspecify(LatticePtr source, Label at);

// Powerset(atoms) -> TruncatedPowerset(k, atoms): truncation forward,
// inclusion back with the truncated top mapped to the full atom set.
GaloisConnection truncate_embed(AtomSet atoms, std::size_t k);

// F = G = id on one lattice.
GaloisConnection identity_connection(LatticePtr lattice);

// (F' o F) -| (G o G'); the targets and sources must agree.
GaloisConnection compose_galois(const GaloisConnection& first, const GaloisConnection& second);

// DcLabels(atoms) -> Product(Powerset, Powerset): the adjoint pair built
// from per-principal confidentiality registrations and single-handed
// integrity vouchers. See dc_truncation_chain.
GaloisConnection dc_collect(AtomSet atoms);

// Powerset x Powerset -> Powerset: union forward, diagonal back.
GaloisConnection unite_pair(AtomSet atoms);

// The three-step chain DcLabels -> P(A) x P(A) -> P(A) -> P_k(A), built
// with compose_galois. Forward gathers the principals the label pins
// down (singleton confidentiality clauses and principals present in
// every integrity clause) and truncates; sets wider than k collapse to
// top, which maps back to the DC top.
GaloisConnection dc_truncation_chain(AtomSet atoms, std::size_t k);

struct GaloisLawReport {
  LawReport laws;
  bool all_passed() const { return laws.all_passed(); }
};

// Adjunction on source x target pairs, monotonicity of both maps,
// F o G o F = F, G o F o G = G, and the closure-operator laws for G o F.
// Exhaustive within the pair budget, sampled beyond it.
GaloisLawReport check_galois_laws(const GaloisConnection& gc,
                                  std::span<const Label> source_sample,
                                  std::span<const Label> target_sample,
                                  std::size_t pair_budget = 4'000'000,
                                  std::uint64_t seed = 1);

// An extensive, monotone, idempotent self-map of a lattice.
struct ClosureOperator {
  std::string name;
  LatticePtr lattice;
  std::function<Label(const Label&)> apply;
};

LawReport check_closure_operator_laws(const ClosureOperator& k, std::span<const Label> sample,
                                      std::size_t pair_budget = 4'000'000);

// k -| id between the lattice and its quotient by k: the target carrier
// is the fixpoints of k, ordered as in the source, with join(a,b) =
// k(a v b) and bot = k(bot). With `validate`, the closure-operator laws
// are checked on `validation_sample` first.
GaloisConnection closure_to_galois(const ClosureOperator& k, bool validate = false,
                                   std::span<const Label> validation_sample = {});

// The coarsest closure operator transparent for p, approximated over a
// finite input universe: k_p(l) = meet of the output labels above l that
// p produces on the universe, with the empty meet giving top. Requires
// meet and top.
ClosureOperator kp_oracle(const Program& p, std::span<const LabeledSet> universe,
                          LatticePtr lattice);

// C_{F -| G}(S) = G*(C(F*(S))): the levels a Galois-connected
// multi-execution runs, computed in the target lattice.
std::vector<Label> closure_fg(const GaloisConnection& gc, std::span<const Label> labels,
                              std::size_t bruteforce_limit = 20);

// candidate in (at up C_{F -| G}(L)) for `at` in C_{F -| G}(L), decided
// with O(|L|) lattice operations from the round-trip images of L.
bool upset_contains_fg(const GaloisConnection& gc, const Label& candidate, const Label& at,
                       std::span<const Label> labels);

struct CanonicityRow {
  std::vector<Label> label_set;
  std::size_t galois_closure_size = 0;  // |C_{F -| G}(L)|
  std::size_t kp_image_size = 0;        // |k_p^*(C(L))|
  bool holds() const { return galois_closure_size >= kp_image_size; }
};

struct CanonicityReport {
  std::vector<CanonicityRow> rows;
  bool all_hold() const;
};

// Every transparent connection runs at least as many executions as the
// one induced by k_p: |C_{F -| G}(L)| >= |k_p^*(C(L))| for each sampled L.
CanonicityReport canonicity_check(const GaloisConnection& gc, const ClosureOperator& kp,
                                  std::span<const std::vector<Label>> label_sets);

// Descriptor grammar: specify:<label> | trunc:<k> | dc-chain:<k>
// | identity | compose(<g>,<g>) | kp:<program>. The kp form needs a
// hook that builds the operator for a named program.
using KpHook = std::function<ClosureOperator(const std::string& program_name)>;
GaloisConnection parse_galois(std::string_view descriptor, LatticePtr source,
                              const KpHook& kp_hook = {});

}  // namespace mexec
