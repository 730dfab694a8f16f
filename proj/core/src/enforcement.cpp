#include "mexec/enforcement.hpp"

#include <algorithm>

#include "mexec/errors.hpp"

namespace mexec {

LabeledSet mef(const Lattice& l, const Program& p, const LabeledSet& x,
               std::size_t closure_limit) {
  std::vector<Label> labels = labels_of(x);
  std::vector<Label> closure = compute_closure(l, labels, closure_limit);

  LabeledSet out;
  for (const Label& level : closure) {
    LabeledSet view;
    try {
      view = p.run(project(l, x, level));
    } catch (const std::exception& e) {
      throw Error("program '" + p.name() + "' failed at level " + l.render(level) + ": " +
                  e.what());
    }
    for (const auto& entry : view) {
      if (upset_contains(l, entry.label, level, labels)) {
        out.insert(entry.value, entry.label);
      }
    }
  }
  return out;
}

LabeledSet mef_galois(const GaloisConnection& gc, const Program& p, const LabeledSet& x,
                      std::size_t closure_limit) {
  const Lattice& l = gc.source();
  for (const Label& label : labels_of(x)) {
    if (!l.contains(label)) {
      throw DomainError("input label " + label.debug_string() + " is outside " + l.descriptor());
    }
  }
  std::vector<Label> labels = labels_of(x);
  std::vector<Label> levels = closure_fg(gc, labels, closure_limit);

  LabeledSet out;
  for (const Label& level : levels) {
    LabeledSet view;
    try {
      view = p.run(project(l, x, level));
    } catch (const std::exception& e) {
      throw Error("program '" + p.name() + "' failed at level " + l.render(level) + ": " +
                  e.what());
    }
    for (const auto& entry : view) {
      if (upset_contains_fg(gc, entry.label, level, labels)) {
        out.insert(entry.value, entry.label);
      }
    }
  }
  return out;
}

InputGenerator::InputGenerator(LatticePtr lattice, std::vector<Label> pool,
                               std::size_t max_elements, Value min_value, Value max_value)
    : lattice_(std::move(lattice)),
      pool_(std::move(pool)),
      max_elements_(max_elements),
      min_value_(min_value),
      max_value_(max_value) {
  if (pool_.empty()) throw DomainError("input generator needs a non-empty label pool");
  for (const Label& l : pool_) {
    if (!lattice_->contains(l)) {
      throw DomainError("pool label " + l.debug_string() + " is outside " +
                        lattice_->descriptor());
    }
  }
}

Label InputGenerator::random_label(std::mt19937_64& rng) const {
  std::uniform_int_distribution<std::size_t> pick(0, pool_.size() - 1);
  return pool_[pick(rng)];
}

LabeledSet InputGenerator::random_set(std::mt19937_64& rng) const {
  std::uniform_int_distribution<std::size_t> count(0, max_elements_);
  std::uniform_int_distribution<Value> value(min_value_, max_value_);
  LabeledSet out;
  for (std::size_t i = count(rng); i > 0; --i) {
    out.insert(value(rng), random_label(rng));
  }
  return out;
}

std::pair<Label, LabeledSet> InputGenerator::random_scenario(std::mt19937_64& rng) const {
  return {random_label(rng), random_set(rng)};
}

NiReport check_noninterference(const Lattice& l, const Subject& subject,
                               const InputGenerator& gen, std::size_t trials,
                               std::uint64_t seed) {
  NiReport report;
  report.trials = trials;
  std::mt19937_64 rng(seed);
  for (std::size_t i = 0; i < trials; ++i) {
    auto [level, x] = gen.random_scenario(rng);
    LabeledSet y = perturb_above(l, x, level, gen.pool(), rng);
    LabeledSet out_x = subject(x);
    LabeledSet out_y = subject(y);
    if (!equivalent_at(l, out_x, out_y, level)) {
      report.violations.push_back(NiViolation{level, x, y, out_x, out_y});
    }
  }
  return report;
}

namespace {

LabeledSet at_fixpoint_labels(const Lattice& l, const GaloisConnection& gc,
                              const LabeledSet& s) {
  std::vector<Label> fixed;
  for (const Label& label : labels_of(s)) {
    if (gc.round_trip(label) == label) fixed.push_back(label);
  }
  (void)l;
  return select(s, fixed);
}

void compare_one(const Lattice& l, const Program& p, const LabeledSet& x,
                 const GaloisConnection* gc, bool fixpoints_only,
                 TransparencyReport& report) {
  LabeledSet want = p.run(x);
  LabeledSet got = gc ? mef_galois(*gc, p, x) : mef(l, p, x);
  if (gc && fixpoints_only) {
    // G o F fixpoints are exactly the labels the connection represents;
    // they are decidable pointwise, so the comparison never enumerates
    // (G o F)*(L).
    got = at_fixpoint_labels(l, *gc, got);
    want = at_fixpoint_labels(l, *gc, want);
  }
  if (!(got == want)) {
    report.mismatches.push_back(TransparencyMismatch{x, got, want});
  }
}

}  // namespace

TransparencyReport check_transparency(const Lattice& l, const Program& p,
                                      const InputGenerator& gen, std::size_t trials,
                                      std::uint64_t seed, const GaloisConnection* gc,
                                      bool fixpoints_only) {
  TransparencyReport report;
  report.trials = trials;
  std::mt19937_64 rng(seed);
  for (std::size_t i = 0; i < trials; ++i) {
    compare_one(l, p, gen.random_set(rng), gc, fixpoints_only, report);
  }
  return report;
}

TransparencyReport check_transparency_on(const Lattice& l, const Program& p,
                                         std::span<const LabeledSet> inputs,
                                         const GaloisConnection* gc, bool fixpoints_only) {
  TransparencyReport report;
  report.trials = inputs.size();
  for (const LabeledSet& x : inputs) {
    compare_one(l, p, x, gc, fixpoints_only, report);
  }
  return report;
}

}  // namespace mexec
