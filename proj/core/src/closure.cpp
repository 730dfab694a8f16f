#include "mexec/closure.hpp"

#include <algorithm>
#include <sstream>

#include "mexec/errors.hpp"
#include "mexec/families.hpp"

namespace mexec {

namespace {

std::vector<Label> sorted_unique(std::vector<Label> labels) {
  std::sort(labels.begin(), labels.end());
  labels.erase(std::unique(labels.begin(), labels.end()), labels.end());
  return labels;
}

}  // namespace

std::vector<Label> closure_bruteforce(const Lattice& l, std::span<const Label> labels,
                                      std::size_t limit) {
  std::vector<Label> distinct = sorted_unique({labels.begin(), labels.end()});
  if (distinct.size() > limit) {
    throw LimitError("closure_bruteforce over " + std::to_string(distinct.size()) +
                         " labels refused: the limit is " + std::to_string(limit) +
                         " (2^n joins)",
                     limit);
  }
  std::vector<Label> closure{l.bot()};
  for (const Label& x : distinct) {
    std::vector<Label> extended = closure;
    for (const Label& c : closure) extended.push_back(l.join(c, x));
    closure = sorted_unique(std::move(extended));
  }
  return closure;
}

bool in_closure(const Lattice& l, const Label& candidate, std::span<const Label> labels) {
  Label acc = l.bot();
  for (const Label& x : labels) {
    if (l.leq(x, candidate)) acc = l.join(acc, x);
  }
  return acc == candidate;
}

namespace {

std::vector<Label> support_atoms(std::span<const Label> labels) {
  AtomSet support;
  for (const Label& x : labels) {
    if (x.is(Label::Kind::Atoms)) support = atom_union(support, x.atom_set());
  }
  std::vector<Label> out;
  for (const auto& a : support) out.push_back(Label::atoms({a}));
  return out;
}

}  // namespace

CandidateGenerator default_candidate_generator(const Lattice& l) {
  if (dynamic_cast<const DiscreteLattice*>(&l)) {
    return CandidateGenerator{
        "discrete", "|S| + 2", false,
        [](const Lattice& lat, std::span<const Label> s) {
          std::vector<Label> out(s.begin(), s.end());
          out.push_back(lat.bot());
          out.push_back(lat.top());
          return sorted_unique(std::move(out));
        }};
  }
  if (dynamic_cast<const TruncatedPowersetLattice*>(&l)) {
    return CandidateGenerator{
        "truncated-powerset", "sum_{i<=k} |S|^i + 2", false,
        [](const Lattice& lat, std::span<const Label> s) {
          const auto& trunc = dynamic_cast<const TruncatedPowersetLattice&>(lat);
          // Unions of at most k support atoms, plus bot and top.
          std::vector<Label> singles = support_atoms(s);
          std::vector<Label> out{lat.bot(), lat.top()};
          std::vector<AtomSet> frontier{AtomSet{}};
          for (std::size_t size = 1; size <= trunc.truncation(); ++size) {
            std::vector<AtomSet> next;
            for (const auto& base : frontier) {
              for (const Label& single : singles) {
                const Atom& a = single.atom_set().front();
                if (!base.empty() && a <= base.back()) continue;
                AtomSet bigger = base;
                bigger.push_back(a);
                out.push_back(Label::atoms(bigger));
                next.push_back(std::move(bigger));
              }
            }
            frontier = std::move(next);
          }
          return sorted_unique(std::move(out));
        }};
  }
  if (dynamic_cast<const ProductLattice*>(&l)) {
    return CandidateGenerator{
        "product", "|C(S0)| * |C(S1)|", false,
        [](const Lattice& lat, std::span<const Label> s) {
          const auto& prod = dynamic_cast<const ProductLattice&>(lat);
          std::vector<Label> lefts, rights;
          for (const Label& x : s) {
            lefts.push_back(x.first());
            rights.push_back(x.second());
          }
          std::vector<Label> cl = compute_closure(*prod.left(), lefts);
          std::vector<Label> cr = compute_closure(*prod.right(), rights);
          std::vector<Label> out;
          out.reserve(cl.size() * cr.size());
          for (const Label& a : cl)
            for (const Label& b : cr) out.push_back(Label::pair(a, b));
          return out;
        }};
  }
  return CandidateGenerator{
      "bruteforce", "2^|S|", true,
      [](const Lattice& lat, std::span<const Label> s) { return closure_bruteforce(lat, s); }};
}

std::vector<Label> enumerate_closure(const Lattice& l, std::span<const Label> labels,
                                     const CandidateGenerator& gen, bool validate) {
  std::vector<Label> result;
  if (gen.exact && !validate) {
    result = gen.generate(l, labels);
  } else {
    for (const Label& candidate : gen.generate(l, labels)) {
      if (in_closure(l, candidate, labels)) result.push_back(candidate);
    }
    result = sorted_unique(std::move(result));
  }
  if (validate) {
    std::vector<Label> oracle = closure_bruteforce(l, labels);
    for (const Label& expected : oracle) {
      if (!std::binary_search(result.begin(), result.end(), expected)) {
        throw InternalError("unsound candidate generator '" + gen.name + "': misses label " +
                            l.render(expected));
      }
    }
  }
  return result;
}

std::vector<Label> compute_closure(const Lattice& l, std::span<const Label> labels,
                                   std::size_t bruteforce_limit) {
  CandidateGenerator gen = default_candidate_generator(l);
  if (gen.exact) {
    return closure_bruteforce(l, labels, bruteforce_limit);
  }
  return enumerate_closure(l, labels, gen);
}

bool upset_contains(const Lattice& l, const Label& candidate, const Label& at,
                    std::span<const Label> labels, bool validate) {
  if (validate && !in_closure(l, at, labels)) {
    throw InternalError("upset_contains precondition violated: " + l.render(at) +
                        " is not in the closure of the label set");
  }
  if (!l.leq(at, candidate)) return false;
  for (const Label& x : labels) {
    if (l.leq(x, candidate) && !l.leq(x, at)) return false;
  }
  return true;
}

ClosureProfile closure_size_profile(const Lattice& l, std::size_t n_max,
                                    std::span<const Label> pool, ProfileLimits limits) {
  std::vector<Label> distinct = sorted_unique({pool.begin(), pool.end()});
  if (distinct.size() > limits.max_pool || n_max > limits.max_n) {
    throw LimitError("closure_size_profile refused: pool " + std::to_string(distinct.size()) +
                         " (max " + std::to_string(limits.max_pool) + "), n_max " +
                         std::to_string(n_max) + " (max " + std::to_string(limits.max_n) + ")",
                     limits.max_pool);
  }
  for (const Label& x : distinct) {
    if (!l.contains(x)) {
      throw DomainError("pool label " + x.debug_string() + " is outside the carrier of " +
                        l.descriptor());
    }
  }

  ClosureProfile profile;
  profile.lattice = l.descriptor();
  profile.rows.resize(n_max + 1);
  for (std::size_t n = 0; n <= n_max; ++n) profile.rows[n].n = n;
  profile.rows[0].closure_size = 1;  // C(empty) = {bot}

  // Depth-first search over subsets, extending the closure incrementally:
  // C(S + x) = C(S) u { c v x | c in C(S) }.
  std::vector<Label> chosen;
  auto visit = [&](auto&& self, std::size_t from, const std::vector<Label>& closure) -> void {
    std::size_t depth = chosen.size();
    if (closure.size() > profile.rows[depth].closure_size) {
      profile.rows[depth].closure_size = closure.size();
      profile.rows[depth].witness = chosen;
    }
    if (depth == n_max) return;
    for (std::size_t i = from; i < distinct.size(); ++i) {
      std::vector<Label> extended = closure;
      for (const Label& c : closure) extended.push_back(l.join(c, distinct[i]));
      extended = sorted_unique(std::move(extended));
      chosen.push_back(distinct[i]);
      self(self, i + 1, extended);
      chosen.pop_back();
    }
  };
  visit(visit, 0, std::vector<Label>{l.bot()});

  // A smaller witness always remains admissible at larger n.
  for (std::size_t n = 1; n <= n_max; ++n) {
    if (profile.rows[n].closure_size < profile.rows[n - 1].closure_size) {
      profile.rows[n].closure_size = profile.rows[n - 1].closure_size;
      profile.rows[n].witness = profile.rows[n - 1].witness;
    }
  }
  return profile;
}

std::string to_csv(const Lattice& l, const ClosureProfile& profile) {
  std::ostringstream out;
  out << "n,cs,witness\n";
  for (const auto& row : profile.rows) {
    out << row.n << ',' << row.closure_size << ",\"";
    for (std::size_t i = 0; i < row.witness.size(); ++i) {
      if (i) out << ' ';
      out << l.render(row.witness[i]);
    }
    out << "\"\n";
  }
  return out.str();
}

OmegaFamily omega_family(std::string_view kind, std::size_t n) {
  if (kind == "powerset-singletons") {
    AtomSet atoms = default_principals(n);
    auto lattice = make_powerset(atoms);
    std::vector<Label> labels;
    for (const auto& a : atoms) labels.push_back(Label::atoms({a}));
    return OmegaFamily{lattice, std::move(labels)};
  }
  if (kind == "discrete-atoms") {
    AtomSet atoms = default_principals(n);
    auto lattice = make_discrete(atoms);
    std::vector<Label> labels;
    for (const auto& a : atoms) labels.push_back(Label::atoms({a}));
    return OmegaFamily{lattice, std::move(labels)};
  }
  if (kind == "natchain2-L") {
    auto lattice = make_product(make_nat_chain(), make_nat_chain());
    std::vector<Label> labels;
    for (std::size_t i = 0; i < n / 2; ++i) {
      labels.push_back(Label::pair(Label::nat(i), Label::nat(0)));
      labels.push_back(Label::pair(Label::nat(0), Label::nat(i)));
    }
    std::sort(labels.begin(), labels.end());
    labels.erase(std::unique(labels.begin(), labels.end()), labels.end());
    return OmegaFamily{lattice, std::move(labels)};
  }
  if (kind == "exponential-singletons") {
    AtomSet atoms = default_principals(n);
    auto lattice = make_exponential(make_discrete(atoms));
    std::vector<Label> labels;
    for (const auto& a : atoms) labels.push_back(Label::antichain({Label::atoms({a})}));
    return OmegaFamily{lattice, std::move(labels)};
  }
  throw DomainError("unknown omega family '" + std::string(kind) +
                    "'; expected powerset-singletons, discrete-atoms, natchain2-L or "
                    "exponential-singletons");
}

}  // namespace mexec
