#include "mexec/galois.hpp"

#include <algorithm>
#include <map>
#include <random>

#include "mexec/closure.hpp"
#include "mexec/errors.hpp"
#include "mexec/families.hpp"

namespace mexec {

GaloisConnection::GaloisConnection(std::string name, LatticePtr source, LatticePtr target,
                                   Map forward, Map backward)
    : name_(std::move(name)),
      source_(std::move(source)),
      target_(std::move(target)),
      forward_(std::move(forward)),
      backward_(std::move(backward)) {}

GaloisConnection specify_unspecify(LatticePtr source, Label at) {
  if (!source->has_top()) {
    throw DomainError("specify needs a source lattice with top; " + source->descriptor() +
                      " has none");
  }
  if (!source->contains(at)) {
    throw DomainError("specify label " + at.debug_string() + " is outside " +
                      source->descriptor());
  }
  LatticePtr target = make_two_point();
  auto forward = [src = source, tgt = target, at](const Label& j) {
    return src->leq(j, at) ? tgt->bot() : tgt->top();
  };
  auto backward = [src = source, tgt = target, at](const Label& j) {
    return j == tgt->top() ? src->top() : at;
  };
  std::string name = "specify:" + source->render(at);
  return GaloisConnection(std::move(name), std::move(source), std::move(target),
                          std::move(forward), std::move(backward));
}

GaloisConnection truncate_embed(AtomSet atoms, std::size_t k) {
  LatticePtr source = make_powerset(atoms);
  LatticePtr target = make_truncated_powerset(k, std::move(atoms));
  auto forward = [k, tgt = target](const Label& l) {
    return l.atom_set().size() <= k ? l : tgt->top();
  };
  auto backward = [src = source, tgt = target](const Label& j) {
    // Over a finite atom set the full set is the true upper adjoint of top.
    return j == tgt->top() ? src->top() : j;
  };
  return GaloisConnection("trunc:" + std::to_string(k), std::move(source), std::move(target),
                          std::move(forward), std::move(backward));
}

GaloisConnection identity_connection(LatticePtr lattice) {
  auto id = [](const Label& l) { return l; };
  return GaloisConnection("identity", lattice, lattice, id, id);
}

GaloisConnection compose_galois(const GaloisConnection& first, const GaloisConnection& second) {
  if (!same_lattice(first.target(), second.source())) {
    throw DomainError("cannot compose " + first.name() + " (target " +
                      first.target().descriptor() + ") with " + second.name() + " (source " +
                      second.source().descriptor() + ")");
  }
  auto forward = [f1 = first, f2 = second](const Label& l) { return f2.forward(f1.forward(l)); };
  auto backward = [f1 = first, f2 = second](const Label& j) {
    return f1.backward(f2.backward(j));
  };
  return GaloisConnection("compose(" + first.name() + "," + second.name() + ")",
                          first.source_ptr(), second.target_ptr(), std::move(forward),
                          std::move(backward));
}

namespace {

// Principals whose confidentiality is individually registered: the
// singleton clauses of the reduced formula. Monotone and join-preserving
// (singletons survive reduction and conjunction unions clause sets).
AtomSet registered_principals(const Cnf& conf) {
  AtomSet out;
  for (const auto& clause : conf) {
    if (clause.size() == 1) out.push_back(clause.front());
  }
  return make_atom_set(std::move(out));
}

// Principals present in every voucher option: the intersection of the
// clauses. The empty formula (true) pins every principal; the integrity
// bottom (the all-singletons conjunction) pins none.
AtomSet vouching_principals(const Cnf& integ, const AtomSet& principals, const Cnf& bottom) {
  if (integ == bottom) return {};
  if (integ.empty()) return principals;
  AtomSet acc = integ.front();
  for (std::size_t i = 1; i < integ.size(); ++i) acc = atom_intersection(acc, integ[i]);
  return acc;
}

}  // namespace

GaloisConnection dc_collect(AtomSet atoms) {
  auto dc = std::make_shared<DcLabelLattice>(atoms);
  LatticePtr powerset = make_powerset(atoms);
  LatticePtr target = make_product(powerset, powerset);

  Cnf bottom_integrity;
  for (const auto& p : atoms) bottom_integrity.push_back({p});

  auto forward = [dc, bottom_integrity](const Label& l) {
    return Label::pair(Label::atoms(registered_principals(l.confidentiality())),
                       Label::atoms(vouching_principals(l.integrity(), dc->principals(),
                                                        bottom_integrity)));
  };

  // Upper adjoint, componentwise: the greatest formula whose registered
  // (resp. vouching) principals stay inside the given set.
  auto conf_max = [atoms](const AtomSet& s) {
    Cnf out;
    for (const auto& a : s) out.push_back({a});
    AtomSet rest;
    std::set_difference(atoms.begin(), atoms.end(), s.begin(), s.end(),
                        std::back_inserter(rest));
    for (std::size_t i = 0; i < rest.size(); ++i) {
      for (std::size_t j = i + 1; j < rest.size(); ++j) {
        out.push_back(make_atom_set({rest[i], rest[j]}));
      }
    }
    return reduce_cnf(std::move(out));
  };
  auto integ_cache = std::make_shared<std::map<AtomSet, Cnf>>();
  auto integ_max = [dc, bottom_integrity, integ_cache](const AtomSet& t) {
    if (auto it = integ_cache->find(t); it != integ_cache->end()) return it->second;
    Cnf acc = bottom_integrity;  // the least formula always qualifies
    for (const Cnf& candidate : dc->all_formulas()) {
      if (atom_subset(vouching_principals(candidate, dc->principals(), bottom_integrity), t)) {
        acc = cnf_or(acc, candidate);
      }
    }
    (*integ_cache)[t] = acc;
    return acc;
  };
  auto backward = [conf_max, integ_max](const Label& j) {
    return Label::dc(conf_max(j.first().atom_set()), integ_max(j.second().atom_set()));
  };

  return GaloisConnection("dc-collect", dc, std::move(target), std::move(forward),
                          std::move(backward));
}

GaloisConnection unite_pair(AtomSet atoms) {
  LatticePtr powerset = make_powerset(std::move(atoms));
  LatticePtr source = make_product(powerset, powerset);
  auto forward = [](const Label& l) {
    return Label::atoms(atom_union(l.first().atom_set(), l.second().atom_set()));
  };
  auto backward = [](const Label& j) { return Label::pair(j, j); };
  return GaloisConnection("unite", std::move(source), powerset, std::move(forward),
                          std::move(backward));
}

GaloisConnection dc_truncation_chain(AtomSet atoms, std::size_t k) {
  GaloisConnection chain = compose_galois(compose_galois(dc_collect(atoms), unite_pair(atoms)),
                                          truncate_embed(atoms, k));
  return GaloisConnection("dc-chain:" + std::to_string(k), chain.source_ptr(),
                          chain.target_ptr(), [chain](const Label& l) { return chain.forward(l); },
                          [chain](const Label& j) { return chain.backward(j); });
}

namespace {

using PairFn = std::function<void(const Label&, const Label&)>;

// Runs `body` on every pair when |a| * |b| fits the budget, otherwise on
// randomly drawn pairs.
bool for_pairs(std::span<const Label> a, std::span<const Label> b, std::size_t budget,
               std::uint64_t seed, const PairFn& body) {
  if (a.empty() || b.empty()) return true;
  if (a.size() * b.size() <= budget) {
    for (const Label& x : a)
      for (const Label& y : b) body(x, y);
    return true;
  }
  std::mt19937_64 rng(seed);
  std::uniform_int_distribution<std::size_t> pa(0, a.size() - 1);
  std::uniform_int_distribution<std::size_t> pb(0, b.size() - 1);
  for (std::size_t i = 0; i < budget / 4; ++i) body(a[pa(rng)], b[pb(rng)]);
  return false;
}

}  // namespace

GaloisLawReport check_galois_laws(const GaloisConnection& gc,
                                  std::span<const Label> source_sample,
                                  std::span<const Label> target_sample,
                                  std::size_t pair_budget, std::uint64_t seed) {
  GaloisLawReport report;
  report.laws.checks.reserve(10);  // add() hands out references into the vector
  const Lattice& src = gc.source();
  const Lattice& tgt = gc.target();
  auto add = [&report](std::string law) -> LawCheck& {
    report.laws.checks.push_back(LawCheck{std::move(law), true, ""});
    return report.laws.checks.back();
  };
  bool exhaustive = true;

  {
    auto& c = add("F maps into the target carrier");
    for (const Label& l : source_sample) {
      if (!tgt.contains(gc.forward(l))) {
        c.passed = false;
        c.counterexample = src.render(l) + " -> " + gc.forward(l).debug_string();
        break;
      }
    }
  }
  {
    auto& c = add("G maps into the source carrier");
    for (const Label& j : target_sample) {
      if (!src.contains(gc.backward(j))) {
        c.passed = false;
        c.counterexample = tgt.render(j) + " -> " + gc.backward(j).debug_string();
        break;
      }
    }
  }
  {
    auto& c = add("adjunction F(l) <= j iff l <= G(j)");
    exhaustive &= for_pairs(source_sample, target_sample, pair_budget, seed,
                            [&](const Label& l, const Label& j) {
                              if (!c.passed) return;
                              if (tgt.leq(gc.forward(l), j) != src.leq(l, gc.backward(j))) {
                                c.passed = false;
                                c.counterexample = src.render(l) + " vs " + tgt.render(j);
                              }
                            });
  }
  {
    auto& c = add("F monotone");
    exhaustive &= for_pairs(source_sample, source_sample, pair_budget, seed + 1,
                            [&](const Label& a, const Label& b) {
                              if (!c.passed) return;
                              if (src.leq(a, b) && !tgt.leq(gc.forward(a), gc.forward(b))) {
                                c.passed = false;
                                c.counterexample = src.render(a) + " <= " + src.render(b);
                              }
                            });
  }
  {
    auto& c = add("G monotone");
    exhaustive &= for_pairs(target_sample, target_sample, pair_budget, seed + 2,
                            [&](const Label& a, const Label& b) {
                              if (!c.passed) return;
                              if (tgt.leq(a, b) && !src.leq(gc.backward(a), gc.backward(b))) {
                                c.passed = false;
                                c.counterexample = tgt.render(a) + " <= " + tgt.render(b);
                              }
                            });
  }
  {
    auto& c = add("F o G o F = F");
    for (const Label& l : source_sample) {
      Label f = gc.forward(l);
      if (!(gc.forward(gc.backward(f)) == f)) {
        c.passed = false;
        c.counterexample = src.render(l);
        break;
      }
    }
  }
  {
    auto& c = add("G o F o G = G");
    for (const Label& j : target_sample) {
      Label g = gc.backward(j);
      if (!(gc.backward(gc.forward(g)) == g)) {
        c.passed = false;
        c.counterexample = tgt.render(j);
        break;
      }
    }
  }
  {
    auto& ext = add("G o F extensive");
    auto& idem = add("G o F idempotent");
    for (const Label& l : source_sample) {
      Label k = gc.round_trip(l);
      if (ext.passed && !src.leq(l, k)) {
        ext.passed = false;
        ext.counterexample = src.render(l);
      }
      if (idem.passed && !(gc.round_trip(k) == k)) {
        idem.passed = false;
        idem.counterexample = src.render(l);
      }
    }
  }
  {
    auto& c = add("G o F monotone");
    exhaustive &= for_pairs(source_sample, source_sample, pair_budget, seed + 3,
                            [&](const Label& a, const Label& b) {
                              if (!c.passed) return;
                              if (src.leq(a, b) && !src.leq(gc.round_trip(a), gc.round_trip(b))) {
                                c.passed = false;
                                c.counterexample = src.render(a) + " <= " + src.render(b);
                              }
                            });
  }
  report.laws.exhaustive = exhaustive;
  return report;
}

LawReport check_closure_operator_laws(const ClosureOperator& k, std::span<const Label> sample,
                                      std::size_t pair_budget) {
  LawReport report;
  report.checks.reserve(4);  // add() hands out references into the vector
  const Lattice& l = *k.lattice;
  auto add = [&report](std::string law) -> LawCheck& {
    report.checks.push_back(LawCheck{std::move(law), true, ""});
    return report.checks.back();
  };
  {
    auto& ext = add("extensive");
    auto& idem = add("idempotent");
    for (const Label& x : sample) {
      Label kx = k.apply(x);
      if (ext.passed && !l.leq(x, kx)) {
        ext.passed = false;
        ext.counterexample = l.render(x);
      }
      if (idem.passed && !(k.apply(kx) == kx)) {
        idem.passed = false;
        idem.counterexample = l.render(x);
      }
    }
  }
  {
    auto& mono = add("monotone");
    report.exhaustive = for_pairs(sample, sample, pair_budget, 7,
                                  [&](const Label& a, const Label& b) {
                                    if (!mono.passed) return;
                                    if (l.leq(a, b) && !l.leq(k.apply(a), k.apply(b))) {
                                      mono.passed = false;
                                      mono.counterexample = l.render(a) + " <= " + l.render(b);
                                    }
                                  });
  }
  return report;
}

namespace {

// The quotient of a lattice by a closure operator: fixpoints as
// representatives, order inherited, join(a,b) = k(a v b).
class QuotientLattice final : public Lattice {
public:
  QuotientLattice(ClosureOperator k)
      : k_(std::move(k)), descriptor_("quotient(" + k_.lattice->descriptor() + "," + k_.name + ")") {}

  Family family() const override { return k_.lattice->family(); }
  const std::string& descriptor() const override { return descriptor_; }
  Label bot() const override { return k_.apply(k_.lattice->bot()); }
  Label join(const Label& a, const Label& b) const override {
    return k_.apply(k_.lattice->join(a, b));
  }
  bool leq(const Label& a, const Label& b) const override { return k_.lattice->leq(a, b); }
  bool has_top() const override { return k_.lattice->has_top(); }
  Label top() const override { return k_.apply(k_.lattice->top()); }
  bool contains(const Label& l) const override {
    return k_.lattice->contains(l) && k_.apply(l) == l;
  }
  std::string render(const Label& l) const override { return k_.lattice->render(l); }
  Label parse_label(std::string_view text) const override {
    Label l = k_.lattice->parse_label(text);
    if (!(k_.apply(l) == l)) {
      throw ParseError("label " + k_.lattice->render(l) + " is not a fixpoint of " + k_.name);
    }
    return l;
  }
  std::optional<std::vector<Label>> enumerate(std::size_t limit) const override {
    auto all = k_.lattice->enumerate(limit * 8);
    if (!all) return std::nullopt;
    std::vector<Label> out;
    for (const Label& l : *all) {
      if (k_.apply(l) == l) {
        out.push_back(l);
        if (out.size() > limit) return std::nullopt;
      }
    }
    return out;
  }

private:
  ClosureOperator k_;
  std::string descriptor_;
};

}  // namespace

GaloisConnection closure_to_galois(const ClosureOperator& k, bool validate,
                                   std::span<const Label> validation_sample) {
  if (validate) {
    LawReport laws = check_closure_operator_laws(k, validation_sample);
    if (!laws.all_passed()) {
      throw DomainError("closure_to_galois: '" + k.name +
                        "' violates the closure-operator laws:\n" + laws.summary());
    }
  }
  LatticePtr quotient = std::make_shared<QuotientLattice>(k);
  auto forward = [apply = k.apply](const Label& l) { return apply(l); };
  auto backward = [](const Label& j) { return j; };
  return GaloisConnection("closure:" + k.name, k.lattice, std::move(quotient),
                          std::move(forward), std::move(backward));
}

ClosureOperator kp_oracle(const Program& p, std::span<const LabeledSet> universe,
                          LatticePtr lattice) {
  if (!lattice->has_meet() || !lattice->has_top()) {
    throw DomainError("kp needs a lattice with meet and top; " + lattice->descriptor() +
                      " lacks one");
  }
  std::vector<Label> witnessed;
  for (const LabeledSet& x : universe) {
    for (const Label& l : labels_of(p.run(x))) witnessed.push_back(l);
  }
  std::sort(witnessed.begin(), witnessed.end());
  witnessed.erase(std::unique(witnessed.begin(), witnessed.end()), witnessed.end());

  auto apply = [l = lattice, witnessed = std::move(witnessed)](const Label& x) {
    Label acc = l->top();  // the empty meet
    for (const Label& w : witnessed) {
      if (l->leq(x, w)) acc = l->meet(acc, w);
    }
    return acc;
  };
  return ClosureOperator{"kp:" + p.name(), std::move(lattice), std::move(apply)};
}

std::vector<Label> closure_fg(const GaloisConnection& gc, std::span<const Label> labels,
                              std::size_t bruteforce_limit) {
  std::vector<Label> imaged;
  imaged.reserve(labels.size());
  for (const Label& l : labels) imaged.push_back(gc.forward(l));
  std::sort(imaged.begin(), imaged.end());
  imaged.erase(std::unique(imaged.begin(), imaged.end()), imaged.end());

  std::vector<Label> out;
  for (const Label& c : compute_closure(gc.target(), imaged, bruteforce_limit)) {
    out.push_back(gc.backward(c));
  }
  std::sort(out.begin(), out.end());
  out.erase(std::unique(out.begin(), out.end()), out.end());
  return out;
}

bool upset_contains_fg(const GaloisConnection& gc, const Label& candidate, const Label& at,
                       std::span<const Label> labels) {
  // `at` ranges over C_{F -| G}(L), whose members are G o F fixpoints, so
  // the membership predicate only needs the round-trip images of L.
  const Lattice& src = gc.source();
  if (!src.leq(at, candidate)) return false;
  for (const Label& x : labels) {
    Label g = gc.round_trip(x);
    if (src.leq(g, candidate) && !src.leq(g, at)) return false;
  }
  return true;
}

bool CanonicityReport::all_hold() const {
  return std::all_of(rows.begin(), rows.end(), [](const CanonicityRow& r) { return r.holds(); });
}

CanonicityReport canonicity_check(const GaloisConnection& gc, const ClosureOperator& kp,
                                  std::span<const std::vector<Label>> label_sets) {
  CanonicityReport report;
  for (const auto& labels : label_sets) {
    CanonicityRow row;
    row.label_set = labels;
    row.galois_closure_size = closure_fg(gc, labels).size();
    std::vector<Label> image;
    for (const Label& c : closure_bruteforce(gc.source(), labels)) {
      image.push_back(kp.apply(c));
    }
    std::sort(image.begin(), image.end());
    image.erase(std::unique(image.begin(), image.end()), image.end());
    row.kp_image_size = image.size();
    report.rows.push_back(std::move(row));
  }
  return report;
}

GaloisConnection parse_galois(std::string_view descriptor, LatticePtr source,
                              const KpHook& kp_hook) {
  auto trim = [](std::string_view s) {
    while (!s.empty() && s.front() == ' ') s.remove_prefix(1);
    while (!s.empty() && s.back() == ' ') s.remove_suffix(1);
    return s;
  };
  std::string_view s = trim(descriptor);

  if (s == "identity") return identity_connection(std::move(source));
  if (s.starts_with("specify:")) {
    Label at = source->parse_label(s.substr(8));
    return specify_unspecify(std::move(source), std::move(at));
  }
  if (s.starts_with("trunc:")) {
    auto* pow = dynamic_cast<const PowersetLattice*>(source.get());
    if (!pow) {
      throw DomainError("trunc:<k> needs a powerset source, got " + source->descriptor());
    }
    std::size_t k = std::stoul(std::string(s.substr(6)));
    return truncate_embed(pow->atoms(), k);
  }
  if (s.starts_with("dc-chain:")) {
    auto* dc = dynamic_cast<const DcLabelLattice*>(source.get());
    if (!dc) {
      throw DomainError("dc-chain:<k> needs a dc source, got " + source->descriptor());
    }
    std::size_t k = std::stoul(std::string(s.substr(9)));
    return dc_truncation_chain(dc->principals(), k);
  }
  if (s.starts_with("kp:")) {
    if (!kp_hook) throw DomainError("kp:<program> is not available in this context");
    return closure_to_galois(kp_hook(std::string(s.substr(3))));
  }
  if (s.starts_with("compose")) {
    std::string_view rest = s.substr(7);
    rest = trim(rest);
    if (rest.size() < 2 || rest.front() != '(' || rest.back() != ')') {
      throw ParseError("compose needs parenthesized arguments");
    }
    rest = rest.substr(1, rest.size() - 2);
    // Split at the top-level comma.
    int depth = 0;
    for (std::size_t i = 0; i < rest.size(); ++i) {
      char c = rest[i];
      if (c == '(' || c == '{' || c == '[' || c == '<') ++depth;
      if (c == ')' || c == '}' || c == ']' || c == '>') --depth;
      if (c == ',' && depth == 0) {
        GaloisConnection first = parse_galois(rest.substr(0, i), source, kp_hook);
        GaloisConnection second =
            parse_galois(rest.substr(i + 1), first.target_ptr(), kp_hook);
        return compose_galois(first, second);
      }
    }
    throw ParseError("compose needs two arguments");
  }
  throw ParseError("unknown galois descriptor '" + std::string(descriptor) +
                   "'; expected specify:<label> | trunc:<k> | dc-chain:<k> | identity | "
                   "compose(<g>,<g>) | kp:<program>");
}

}  // namespace mexec
