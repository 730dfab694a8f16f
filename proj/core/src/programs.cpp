#include "mexec/programs.hpp"

#include <algorithm>

#include "mexec/errors.hpp"

namespace mexec {

ProgramPtr make_secure(LatticePtr two_point) {
  return std::make_shared<Program>("secure", [l = std::move(two_point)](const LabeledSet& x) {
    LabeledSet out;
    out.insert(Value(project(*l, x, l->bot()).size()), l->bot());
    out.insert(Value(project(*l, x, l->top()).size()), l->top());
    return out;
  });
}

ProgramPtr make_insecure(LatticePtr two_point) {
  return std::make_shared<Program>("insecure", [l = std::move(two_point)](const LabeledSet& x) {
    LabeledSet out;
    out.insert(Value(x.size()), l->bot());
    return out;
  });
}

ProgramPtr make_bad_sum(LatticePtr lattice) {
  return std::make_shared<Program>("badSum", [l = std::move(lattice)](const LabeledSet& x) {
    Value sum = 0;
    for (const auto& e : x) sum += e.value;
    std::vector<Label> labels = labels_of(x);
    LabeledSet out;
    out.insert(sum, join_all(*l, labels));
    return out;
  });
}

ProgramPtr make_good_sum(LatticePtr lattice, std::vector<Label> levels) {
  Label at = join_all(*lattice, levels);
  return std::make_shared<Program>(
      "goodSum", [levels = std::move(levels), at = std::move(at)](const LabeledSet& x) {
        Value sum = 0;
        for (const auto& e : x) {
          if (std::find(levels.begin(), levels.end(), e.label) != levels.end()) sum += e.value;
        }
        LabeledSet out;
        out.insert(sum, at);
        return out;
      });
}

ProgramPtr make_pairwise(LatticePtr lattice) {
  return std::make_shared<Program>("pairwise", [l = std::move(lattice)](const LabeledSet& x) {
    LabeledSet out;
    for (const auto& a : x) {
      for (const auto& b : x) {
        out.insert(std::max(a.value, b.value), l->join(a.label, b.label));
      }
    }
    return out;
  });
}

namespace {

bool small_atom_label(const Label& l) {
  return l.is(Label::Kind::Atoms) && l.atom_set().size() <= 1;
}

}  // namespace

ProgramPtr make_pairwise_1(LatticePtr lattice) {
  return std::make_shared<Program>("pairwise1", [l = std::move(lattice)](const LabeledSet& x) {
    LabeledSet out;
    for (const auto& a : x) {
      if (!small_atom_label(a.label)) continue;
      for (const auto& b : x) {
        if (!small_atom_label(b.label)) continue;
        out.insert(std::max(a.value, b.value), l->join(a.label, b.label));
      }
    }
    return out;
  });
}

const std::vector<ProgramSpec>& program_corpus() {
  static const std::vector<ProgramSpec> corpus = {
      {"secure", true, true, false},
      {"insecure", false, true, false},
      {"badSum", false, false, false},
      {"goodSum", true, false, false},
      {"pairwise", true, false, false},
      {"pairwise1", true, false, true},
  };
  return corpus;
}

ProgramPtr make_program(const std::string& name, LatticePtr lattice,
                        std::optional<std::vector<Label>> default_good_sum_levels) {
  if (name == "secure") {
    if (lattice->family() != Family::TwoPoint) {
      throw DomainError("program 'secure' needs the two-point lattice");
    }
    return make_secure(std::move(lattice));
  }
  if (name == "insecure") {
    if (lattice->family() != Family::TwoPoint) {
      throw DomainError("program 'insecure' needs the two-point lattice");
    }
    return make_insecure(std::move(lattice));
  }
  if (name == "badSum") return make_bad_sum(std::move(lattice));
  if (name == "pairwise") return make_pairwise(std::move(lattice));
  if (name == "pairwise1") return make_pairwise_1(std::move(lattice));
  if (name == "goodSum") {
    if (!default_good_sum_levels) {
      throw DomainError("goodSum needs a label set: goodSum:{l1,l2,...}");
    }
    return make_good_sum(std::move(lattice), std::move(*default_good_sum_levels));
  }
  if (name.starts_with("goodSum:")) {
    std::string_view rest(name);
    rest.remove_prefix(8);
    std::vector<Label> levels;
    // The parameter is a brace list of labels in the lattice's syntax.
    std::string_view body = rest;
    if (body.size() < 2 || body.front() != '{' || body.back() != '}') {
      throw ParseError("goodSum labels must look like {l1,l2,...}");
    }
    body = body.substr(1, body.size() - 2);
    if (!body.empty()) {
      int depth = 0;
      std::size_t start = 0;
      for (std::size_t i = 0; i <= body.size(); ++i) {
        if (i == body.size() || (body[i] == ',' && depth == 0)) {
          levels.push_back(lattice->parse_label(body.substr(start, i - start)));
          start = i + 1;
        } else {
          char c = body[i];
          if (c == '{' || c == '(' || c == '[' || c == '<') ++depth;
          if (c == '}' || c == ')' || c == ']' || c == '>') --depth;
        }
      }
    }
    return make_good_sum(std::move(lattice), std::move(levels));
  }
  throw ParseError("unknown program '" + name +
                   "'; expected secure|insecure|badSum|goodSum:<labels>|pairwise|pairwise1");
}

Faceted bad_list_sum_1(const Lattice& l, const std::vector<Faceted>& inputs) {
  Value sum = 0;
  for (const auto& f : inputs) sum += facet_select(l, f, l.top());
  return Faceted(sum);  // the most secret view, leaked as a bare value
}

Faceted bad_list_sum_2(const Lattice& l, const std::vector<Faceted>& inputs) {
  Value sum = 0;
  for (const auto& f : inputs) sum += facet_select(l, f, l.top());
  std::vector<Label> guards = facet_labels(inputs);
  return Faceted::branch(join_all(l, guards), Faceted(sum), Faceted(0));
}

Faceted good_list_sum(const Lattice& l, const Label& at, const std::vector<Faceted>& inputs) {
  Value sum = 0;
  for (const auto& f : inputs) sum += facet_select(l, f, at);
  return Faceted::branch(at, Faceted(sum), Faceted(0));
}

}  // namespace mexec
