#include "mexec/lattice.hpp"

#include <algorithm>
#include <random>
#include <sstream>

#include "mexec/errors.hpp"

namespace mexec {

Label Lattice::top() const {
  throw DomainError("lattice " + descriptor() + " has no top");
}

Label Lattice::meet(const Label&, const Label&) const {
  throw DomainError("lattice " + descriptor() + " has no meet");
}

bool same_lattice(const Lattice& a, const Lattice& b) {
  return &a == &b || a.descriptor() == b.descriptor();
}

Label join_all(const Lattice& l, std::span<const Label> labels) {
  Label acc = l.bot();
  for (const Label& x : labels) {
    if (!l.contains(x)) {
      throw DomainError("label " + x.debug_string() + " is outside the carrier of " +
                        l.descriptor());
    }
    acc = l.join(acc, x);
  }
  return acc;
}

Label meet_all(const Lattice& l, std::span<const Label> labels) {
  if (!l.has_meet() || !l.has_top()) {
    throw DomainError("big meet needs a lattice with meet and top; " + l.descriptor() +
                      " lacks one");
  }
  Label acc = l.top();
  for (const Label& x : labels) {
    if (!l.contains(x)) {
      throw DomainError("label " + x.debug_string() + " is outside the carrier of " +
                        l.descriptor());
    }
    acc = l.meet(acc, x);
  }
  return acc;
}

bool LawReport::all_passed() const {
  return std::all_of(checks.begin(), checks.end(),
                     [](const LawCheck& c) { return c.passed; });
}

const LawCheck* LawReport::find(std::string_view law) const {
  for (const auto& c : checks) {
    if (c.law == law) return &c;
  }
  return nullptr;
}

std::string LawReport::summary() const {
  std::ostringstream out;
  for (const auto& c : checks) {
    out << (c.passed ? "pass " : "FAIL ") << c.law;
    if (!c.passed) out << "  [" << c.counterexample << "]";
    out << '\n';
  }
  return out.str();
}

namespace {

// Precomputed join/leq tables make exhaustive triple checks cheap.
struct Tables {
  std::vector<Label> labels;
  std::vector<std::size_t> join;  // n*n indices into labels
  std::vector<char> leq;          // n*n

  std::size_t n() const { return labels.size(); }
  std::size_t j(std::size_t a, std::size_t b) const { return join[a * n() + b]; }
  bool le(std::size_t a, std::size_t b) const { return leq[a * n() + b] != 0; }
};

Tables build_tables(const Lattice& l, std::span<const Label> sample) {
  Tables t;
  t.labels.assign(sample.begin(), sample.end());
  std::sort(t.labels.begin(), t.labels.end());
  t.labels.erase(std::unique(t.labels.begin(), t.labels.end()), t.labels.end());
  const std::size_t n = t.labels.size();
  t.join.resize(n * n);
  t.leq.resize(n * n);
  for (std::size_t a = 0; a < n; ++a) {
    for (std::size_t b = 0; b < n; ++b) {
      Label j = l.join(t.labels[a], t.labels[b]);
      auto it = std::lower_bound(t.labels.begin(), t.labels.end(), j);
      // Joins may leave the sample; record an out-of-sample sentinel.
      t.join[a * n + b] =
          (it != t.labels.end() && *it == j) ? std::size_t(it - t.labels.begin()) : n;
      t.leq[a * n + b] = l.leq(t.labels[a], t.labels[b]) ? 1 : 0;
    }
  }
  return t;
}

std::string pair_note(const Lattice& l, const Label& a, const Label& b) {
  return l.render(a) + ", " + l.render(b);
}

}  // namespace

LawReport check_lattice_laws(const Lattice& l, std::span<const Label> sample,
                             std::size_t triple_budget, std::uint64_t seed) {
  LawReport report;
  report.checks.reserve(10);  // add() hands out references into the vector
  Tables t = build_tables(l, sample);
  const std::size_t n = t.n();
  auto add = [&report](std::string law) -> LawCheck& {
    report.checks.push_back(LawCheck{std::move(law), true, ""});
    return report.checks.back();
  };

  // Identity, idempotence, top.
  {
    auto& idem = add("join idempotent");
    auto& ident = add("bot is join identity");
    Label bot = l.bot();
    for (std::size_t a = 0; a < n && (idem.passed || ident.passed); ++a) {
      const Label& x = t.labels[a];
      if (idem.passed && !(l.join(x, x) == x)) {
        idem.passed = false;
        idem.counterexample = l.render(x);
      }
      if (ident.passed && !(l.join(bot, x) == x)) {
        ident.passed = false;
        ident.counterexample = l.render(x);
      }
    }
    if (l.has_top()) {
      auto& topc = add("top dominates");
      Label top = l.top();
      for (std::size_t a = 0; a < n; ++a) {
        if (!l.leq(t.labels[a], top)) {
          topc.passed = false;
          topc.counterexample = l.render(t.labels[a]);
          break;
        }
      }
    }
  }

  // Pairwise laws.
  {
    auto& comm = add("join commutative");
    auto& coh = add("order/join coherence");
    auto& antisym = add("antisymmetry");
    for (std::size_t a = 0; a < n; ++a) {
      for (std::size_t b = 0; b < n; ++b) {
        Label jab = l.join(t.labels[a], t.labels[b]);
        if (comm.passed && !(jab == l.join(t.labels[b], t.labels[a]))) {
          comm.passed = false;
          comm.counterexample = pair_note(l, t.labels[a], t.labels[b]);
        }
        if (coh.passed && (t.le(a, b) != (jab == t.labels[b]))) {
          coh.passed = false;
          coh.counterexample = pair_note(l, t.labels[a], t.labels[b]);
        }
        if (antisym.passed && a != b && t.le(a, b) && t.le(b, a)) {
          antisym.passed = false;
          antisym.counterexample = pair_note(l, t.labels[a], t.labels[b]);
        }
      }
    }
  }

  // Associativity over triples, exhaustive within budget.
  {
    auto& assoc = add("join associative");
    bool exhaustive = n == 0 || n * n * n <= triple_budget;
    auto try_triple = [&](std::size_t a, std::size_t b, std::size_t c) {
      // Use tables when the intermediate joins stay in-sample, otherwise
      // recompute directly.
      Label left = l.join(l.join(t.labels[a], t.labels[b]), t.labels[c]);
      Label right = l.join(t.labels[a], l.join(t.labels[b], t.labels[c]));
      if (!(left == right)) {
        assoc.passed = false;
        assoc.counterexample = pair_note(l, t.labels[a], t.labels[b]) + ", " +
                               l.render(t.labels[c]);
      }
    };
    if (exhaustive) {
      for (std::size_t a = 0; a < n && assoc.passed; ++a)
        for (std::size_t b = 0; b < n && assoc.passed; ++b)
          for (std::size_t c = 0; c < n && assoc.passed; ++c) {
            // Fast path via tables when both intermediates are in-sample.
            std::size_t ab = t.j(a, b), bc = t.j(b, c);
            if (ab < n && bc < n) {
              if (t.j(ab, c) != t.j(a, bc) || t.j(ab, c) == n) try_triple(a, b, c);
            } else {
              try_triple(a, b, c);
            }
          }
    } else {
      std::mt19937_64 rng(seed);
      std::uniform_int_distribution<std::size_t> pick(0, n - 1);
      for (std::size_t i = 0; i < triple_budget / 64 && assoc.passed; ++i) {
        try_triple(pick(rng), pick(rng), pick(rng));
      }
    }
    report.exhaustive = exhaustive;
  }

  // join is the least upper bound (needs coherence; checked directly here
  // so a failure pinpoints the law).
  {
    auto& lub = add("join is least upper bound");
    bool exhaustive = n == 0 || n * n * n <= triple_budget;
    auto check_pair = [&](std::size_t a, std::size_t b) {
      std::size_t ab = t.j(a, b);
      if (ab == n) return;  // join escapes sample; ub checked below anyway
      if (!t.le(a, ab) || !t.le(b, ab)) {
        lub.passed = false;
        lub.counterexample = pair_note(l, t.labels[a], t.labels[b]) + " (not an upper bound)";
        return;
      }
      for (std::size_t c = 0; c < n; ++c) {
        if (t.le(a, c) && t.le(b, c) && !t.le(ab, c)) {
          lub.passed = false;
          lub.counterexample = pair_note(l, t.labels[a], t.labels[b]) + " vs " +
                               l.render(t.labels[c]);
          return;
        }
      }
    };
    if (exhaustive) {
      for (std::size_t a = 0; a < n && lub.passed; ++a)
        for (std::size_t b = a; b < n && lub.passed; ++b) check_pair(a, b);
    } else {
      std::mt19937_64 rng(seed + 1);
      std::uniform_int_distribution<std::size_t> pick(0, n - 1);
      for (std::size_t i = 0; i < 50'000 && lub.passed; ++i) check_pair(pick(rng), pick(rng));
    }
  }

  if (l.has_meet()) {
    auto& glb = add("meet is greatest lower bound");
    for (std::size_t a = 0; a < n && glb.passed; ++a) {
      for (std::size_t b = a; b < n && glb.passed; ++b) {
        Label m = l.meet(t.labels[a], t.labels[b]);
        if (!l.leq(m, t.labels[a]) || !l.leq(m, t.labels[b])) {
          glb.passed = false;
          glb.counterexample = pair_note(l, t.labels[a], t.labels[b]) + " (not a lower bound)";
          break;
        }
        for (std::size_t c = 0; c < n; ++c) {
          if (t.le(c, a) && t.le(c, b) && !l.leq(t.labels[c], m)) {
            glb.passed = false;
            glb.counterexample = pair_note(l, t.labels[a], t.labels[b]) + " vs " +
                                 l.render(t.labels[c]);
            break;
          }
        }
      }
    }
  }

  return report;
}

HomReport check_homomorphism(const std::function<Label(const Label&)>& h,
                             const Lattice& from, const Lattice& to,
                             std::span<const Label> sample, std::size_t pair_budget,
                             std::uint64_t seed) {
  HomReport report;
  std::vector<Label> labels(sample.begin(), sample.end());
  std::sort(labels.begin(), labels.end());
  labels.erase(std::unique(labels.begin(), labels.end()), labels.end());
  const std::size_t n = labels.size();

  {
    LawCheck c{"h(bot) = bot", true, ""};
    if (!(h(from.bot()) == to.bot())) {
      c.passed = false;
      c.counterexample = "h(" + from.render(from.bot()) + ") = " + to.render(h(from.bot()));
    }
    report.laws.checks.push_back(std::move(c));
  }

  {
    LawCheck c{"h(a v b) = h(a) v h(b)", true, ""};
    std::vector<Label> image(n, to.bot());
    for (std::size_t i = 0; i < n; ++i) image[i] = h(labels[i]);
    auto check_pair = [&](std::size_t a, std::size_t b) {
      if (!(h(from.join(labels[a], labels[b])) == to.join(image[a], image[b]))) {
        c.passed = false;
        c.counterexample = pair_note(from, labels[a], labels[b]);
      }
    };
    report.laws.exhaustive = n == 0 || n * n <= pair_budget;
    if (report.laws.exhaustive) {
      for (std::size_t a = 0; a < n && c.passed; ++a)
        for (std::size_t b = a; b < n && c.passed; ++b) check_pair(a, b);
    } else {
      std::mt19937_64 rng(seed);
      std::uniform_int_distribution<std::size_t> pick(0, n - 1);
      for (std::size_t i = 0; i < 100'000 && c.passed; ++i) check_pair(pick(rng), pick(rng));
    }
    report.laws.checks.push_back(std::move(c));

    for (std::size_t a = 0; a < n && report.injective; ++a) {
      for (std::size_t b = a + 1; b < n; ++b) {
        if (image[a] == image[b]) {
          report.injective = false;
          report.injectivity_counterexample = pair_note(from, labels[a], labels[b]);
          break;
        }
      }
    }
  }

  return report;
}

}  // namespace mexec
