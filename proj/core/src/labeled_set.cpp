#include "mexec/labeled_set.hpp"

#include <algorithm>
#include <cctype>
#include <charconv>
#include <sstream>

#include "mexec/errors.hpp"

namespace mexec {

LabeledSet::LabeledSet(std::vector<Entry> entries) : entries_(std::move(entries)) {
  std::sort(entries_.begin(), entries_.end());
  entries_.erase(std::unique(entries_.begin(), entries_.end()), entries_.end());
}

void LabeledSet::insert(Value value, Label label) {
  Entry e{value, std::move(label)};
  auto it = std::lower_bound(entries_.begin(), entries_.end(), e);
  if (it == entries_.end() || !(*it == e)) entries_.insert(it, std::move(e));
}

void LabeledSet::unite(const LabeledSet& other) {
  if (other.empty()) return;
  std::vector<Entry> merged;
  merged.reserve(entries_.size() + other.entries_.size());
  std::merge(entries_.begin(), entries_.end(), other.entries_.begin(), other.entries_.end(),
             std::back_inserter(merged));
  merged.erase(std::unique(merged.begin(), merged.end()), merged.end());
  entries_ = std::move(merged);
}

LabeledSet project(const Lattice& l, const LabeledSet& x, const Label& at) {
  std::vector<LabeledSet::Entry> kept;
  for (const auto& e : x) {
    if (l.leq(e.label, at)) kept.push_back(e);
  }
  return LabeledSet(std::move(kept));
}

bool equivalent_at(const Lattice& l, const LabeledSet& x, const LabeledSet& y, const Label& at) {
  return project(l, x, at) == project(l, y, at);
}

std::vector<Label> labels_of(const LabeledSet& x) {
  std::vector<Label> out;
  for (const auto& e : x) {
    if (out.empty() || !(out.back() == e.label)) out.push_back(e.label);
  }
  // Entries are sorted by label first, so adjacent dedup suffices.
  return out;
}

LabeledSet select(const LabeledSet& x, std::span<const Label> labels) {
  std::vector<LabeledSet::Entry> kept;
  for (const auto& e : x) {
    for (const auto& l : labels) {
      if (e.label == l) {
        kept.push_back(e);
        break;
      }
    }
  }
  return LabeledSet(std::move(kept));
}

LabeledSet perturb_above(const Lattice& l, const LabeledSet& x, const Label& at,
                         std::span<const Label> pool, std::mt19937_64& rng) {
  std::vector<Label> unseen;  // pool labels that do not flow to `at`
  for (const auto& p : pool) {
    if (!l.leq(p, at)) unseen.push_back(p);
  }

  LabeledSet out = project(l, x, at);
  if (unseen.empty()) {
    // Nothing lies outside the observer's view; x is returned unchanged.
    return x;
  }

  std::uniform_int_distribution<int> coin(0, 3);
  std::uniform_int_distribution<std::size_t> pick(0, unseen.size() - 1);
  std::uniform_int_distribution<Value> fresh(0, 99);
  for (const auto& e : x) {
    if (l.leq(e.label, at)) continue;
    switch (coin(rng)) {
      case 0:  // drop
        break;
      case 1:  // keep
        out.insert(e.value, e.label);
        break;
      case 2:  // relabel within the hidden region
        out.insert(e.value, unseen[pick(rng)]);
        break;
      default:  // replace the value
        out.insert(fresh(rng), e.label);
        break;
    }
  }
  std::uniform_int_distribution<int> extra(0, 2);
  for (int i = extra(rng); i > 0; --i) {
    out.insert(fresh(rng), unseen[pick(rng)]);
  }
  return out;
}

std::string render(const Lattice& l, const LabeledSet& x) {
  std::ostringstream out;
  out << '{';
  bool first = true;
  for (const auto& e : x) {
    if (!first) out << ", ";
    first = false;
    out << e.value << '^' << l.render(e.label);
  }
  out << '}';
  return out.str();
}

namespace {

std::string_view trim(std::string_view s) {
  while (!s.empty() && std::isspace(static_cast<unsigned char>(s.front()))) s.remove_prefix(1);
  while (!s.empty() && std::isspace(static_cast<unsigned char>(s.back()))) s.remove_suffix(1);
  return s;
}

}  // namespace

LabeledSet parse_labeled_set(const Lattice& l, std::string_view text) {
  std::string_view s = trim(text);
  if (s.size() < 2 || s.front() != '{' || s.back() != '}') {
    throw ParseError("labeled set must look like {v^{label}, ...}, got '" + std::string(text) +
                     "'");
  }
  s = trim(s.substr(1, s.size() - 2));
  LabeledSet out;
  if (s.empty()) return out;

  // Split on top-level commas.
  int depth = 0;
  std::size_t start = 0;
  std::vector<std::string_view> parts;
  for (std::size_t i = 0; i < s.size(); ++i) {
    char c = s[i];
    if (c == '{' || c == '(' || c == '[' || c == '<') ++depth;
    if (c == '}' || c == ')' || c == ']' || c == '>') --depth;
    if (c == ',' && depth == 0) {
      parts.push_back(s.substr(start, i - start));
      start = i + 1;
    }
  }
  parts.push_back(s.substr(start));

  for (auto part : parts) {
    part = trim(part);
    auto caret = part.find('^');
    if (caret == std::string_view::npos) {
      throw ParseError("labeled element must look like v^{label}, got '" + std::string(part) +
                       "'");
    }
    std::string_view value_text = trim(part.substr(0, caret));
    Value value = 0;
    auto [ptr, ec] = std::from_chars(value_text.data(), value_text.data() + value_text.size(),
                                     value);
    if (ec != std::errc() || ptr != value_text.data() + value_text.size()) {
      throw ParseError("bad value '" + std::string(value_text) + "'");
    }
    out.insert(value, l.parse_label(part.substr(caret + 1)));
  }
  return out;
}

}  // namespace mexec
