#include "mexec/label.hpp"

#include <algorithm>
#include <sstream>

#include "mexec/errors.hpp"

namespace mexec {

AtomSet make_atom_set(std::vector<Atom> atoms) {
  std::sort(atoms.begin(), atoms.end());
  atoms.erase(std::unique(atoms.begin(), atoms.end()), atoms.end());
  return atoms;
}

bool is_sorted_unique(const AtomSet& s) {
  return std::adjacent_find(s.begin(), s.end(),
                            [](const Atom& a, const Atom& b) { return a >= b; }) == s.end();
}

bool atom_subset(const AtomSet& a, const AtomSet& b) {
  return std::includes(b.begin(), b.end(), a.begin(), a.end());
}

AtomSet atom_union(const AtomSet& a, const AtomSet& b) {
  AtomSet out;
  out.reserve(a.size() + b.size());
  std::set_union(a.begin(), a.end(), b.begin(), b.end(), std::back_inserter(out));
  return out;
}

AtomSet atom_intersection(const AtomSet& a, const AtomSet& b) {
  AtomSet out;
  std::set_intersection(a.begin(), a.end(), b.begin(), b.end(), std::back_inserter(out));
  return out;
}

Cnf reduce_cnf(Cnf f) {
  for (auto& clause : f) {
    clause = make_atom_set(std::move(clause));
  }
  std::sort(f.begin(), f.end());
  f.erase(std::unique(f.begin(), f.end()), f.end());
  // Drop any clause that is a strict superset of another.
  Cnf out;
  for (const auto& clause : f) {
    bool dominated = false;
    for (const auto& other : f) {
      if (other != clause && atom_subset(other, clause)) {
        dominated = true;
        break;
      }
    }
    if (!dominated) out.push_back(clause);
  }
  return out;
}

bool is_reduced_cnf(const Cnf& f) {
  for (const auto& clause : f) {
    if (clause.empty() || !is_sorted_unique(clause)) return false;
  }
  if (std::adjacent_find(f.begin(), f.end(),
                         [](const Clause& a, const Clause& b) { return a >= b; }) != f.end()) {
    return false;
  }
  for (const auto& a : f) {
    for (const auto& b : f) {
      if (&a != &b && atom_subset(a, b)) return false;
    }
  }
  return true;
}

bool cnf_implies(const Cnf& f, const Cnf& g) {
  for (const auto& gc : g) {
    bool witnessed = false;
    for (const auto& fc : f) {
      if (atom_subset(fc, gc)) {
        witnessed = true;
        break;
      }
    }
    if (!witnessed) return false;
  }
  return true;
}

Cnf cnf_and(const Cnf& f, const Cnf& g) {
  Cnf all = f;
  all.insert(all.end(), g.begin(), g.end());
  return reduce_cnf(std::move(all));
}

Cnf cnf_or(const Cnf& f, const Cnf& g) {
  // Either side true (no clauses) makes the disjunction true.
  if (f.empty() || g.empty()) return {};
  Cnf all;
  all.reserve(f.size() * g.size());
  for (const auto& fc : f) {
    for (const auto& gc : g) {
      all.push_back(atom_union(fc, gc));
    }
  }
  return reduce_cnf(std::move(all));
}

Label Label::nat(std::uint64_t n) { return Label(Kind::Nat, Rep(n)); }

Label Label::atoms(AtomSet s) {
  if (!is_sorted_unique(s)) s = make_atom_set(std::move(s));
  return Label(Kind::Atoms, Rep(std::move(s)));
}

Label Label::mark(std::uint8_t which) { return Label(Kind::Mark, Rep(which)); }

Label Label::side(std::uint8_t index, Label payload) {
  return Label(Kind::Side,
               Rep(std::make_shared<const SideBody>(SideBody{index, std::move(payload)})));
}

Label Label::pair(Label first, Label second) {
  return Label(Kind::Pair,
               Rep(std::make_shared<const PairBody>(PairBody{std::move(first), std::move(second)})));
}

Label Label::antichain(std::vector<Label> elements) {
  std::sort(elements.begin(), elements.end());
  elements.erase(std::unique(elements.begin(), elements.end()), elements.end());
  return Label(Kind::Anti, Rep(std::move(elements)));
}

Label Label::dc(Cnf confidentiality, Cnf integrity) {
  return Label(Kind::Dc, Rep(std::make_shared<const DcBody>(DcBody{
                             reduce_cnf(std::move(confidentiality)),
                             reduce_cnf(std::move(integrity))})));
}

namespace {

[[noreturn]] void wrong_kind(const char* want) {
  throw InternalError(std::string("label accessor used on wrong kind: expected ") + want);
}

}  // namespace

std::uint64_t Label::nat_value() const {
  if (kind_ != Kind::Nat) wrong_kind("Nat");
  return std::get<std::uint64_t>(rep_);
}

const AtomSet& Label::atom_set() const {
  if (kind_ != Kind::Atoms) wrong_kind("Atoms");
  return std::get<AtomSet>(rep_);
}

std::uint8_t Label::mark_value() const {
  if (kind_ != Kind::Mark) wrong_kind("Mark");
  return std::get<std::uint8_t>(rep_);
}

std::uint8_t Label::side_index() const {
  if (kind_ != Kind::Side) wrong_kind("Side");
  return std::get<std::shared_ptr<const SideBody>>(rep_)->index;
}

const Label& Label::side_payload() const {
  if (kind_ != Kind::Side) wrong_kind("Side");
  return std::get<std::shared_ptr<const SideBody>>(rep_)->payload;
}

const Label& Label::first() const {
  if (kind_ != Kind::Pair) wrong_kind("Pair");
  return std::get<std::shared_ptr<const PairBody>>(rep_)->first;
}

const Label& Label::second() const {
  if (kind_ != Kind::Pair) wrong_kind("Pair");
  return std::get<std::shared_ptr<const PairBody>>(rep_)->second;
}

const std::vector<Label>& Label::elements() const {
  if (kind_ != Kind::Anti) wrong_kind("Anti");
  return std::get<std::vector<Label>>(rep_);
}

const Cnf& Label::confidentiality() const {
  if (kind_ != Kind::Dc) wrong_kind("Dc");
  return std::get<std::shared_ptr<const DcBody>>(rep_)->confidentiality;
}

const Cnf& Label::integrity() const {
  if (kind_ != Kind::Dc) wrong_kind("Dc");
  return std::get<std::shared_ptr<const DcBody>>(rep_)->integrity;
}

namespace {

std::strong_ordering cmp_vec(const std::vector<Label>& a, const std::vector<Label>& b);

std::strong_ordering cmp(const Label& a, const Label& b) {
  if (auto c = a.kind() <=> b.kind(); c != 0) return c;
  switch (a.kind()) {
    case Label::Kind::Nat:
      return a.nat_value() <=> b.nat_value();
    case Label::Kind::Atoms:
      return a.atom_set() <=> b.atom_set();
    case Label::Kind::Mark:
      return a.mark_value() <=> b.mark_value();
    case Label::Kind::Side:
      if (auto c = a.side_index() <=> b.side_index(); c != 0) return c;
      return cmp(a.side_payload(), b.side_payload());
    case Label::Kind::Pair:
      if (auto c = cmp(a.first(), b.first()); c != 0) return c;
      return cmp(a.second(), b.second());
    case Label::Kind::Anti:
      return cmp_vec(a.elements(), b.elements());
    case Label::Kind::Dc:
      if (auto c = a.confidentiality() <=> b.confidentiality(); c != 0) return c;
      return a.integrity() <=> b.integrity();
  }
  return std::strong_ordering::equal;
}

std::strong_ordering cmp_vec(const std::vector<Label>& a, const std::vector<Label>& b) {
  std::size_t n = std::min(a.size(), b.size());
  for (std::size_t i = 0; i < n; ++i) {
    if (auto c = cmp(a[i], b[i]); c != 0) return c;
  }
  return a.size() <=> b.size();
}

}  // namespace

std::strong_ordering operator<=>(const Label& a, const Label& b) { return cmp(a, b); }

bool operator==(const Label& a, const Label& b) { return cmp(a, b) == 0; }

std::string render_atom_set(const AtomSet& s) {
  std::ostringstream out;
  out << '{';
  for (std::size_t i = 0; i < s.size(); ++i) {
    if (i) out << ',';
    out << s[i];
  }
  out << '}';
  return out.str();
}

std::string render_cnf(const Cnf& f) {
  if (f.empty()) return "true";
  std::ostringstream out;
  for (std::size_t i = 0; i < f.size(); ++i) {
    if (i) out << " & ";
    const Clause& clause = f[i];
    bool parens = clause.size() > 1 && f.size() > 1;
    if (parens) out << '(';
    for (std::size_t j = 0; j < clause.size(); ++j) {
      if (j) out << '|';
      out << clause[j];
    }
    if (parens) out << ')';
  }
  return out.str();
}

std::string Label::debug_string() const {
  std::ostringstream out;
  switch (kind_) {
    case Kind::Nat:
      out << nat_value();
      break;
    case Kind::Atoms:
      out << render_atom_set(atom_set());
      break;
    case Kind::Mark:
      out << (mark_value() == 0 ? "bot" : "top");
      break;
    case Kind::Side:
      out << int(side_index()) << ':' << side_payload().debug_string();
      break;
    case Kind::Pair:
      out << '(' << first().debug_string() << ',' << second().debug_string() << ')';
      break;
    case Kind::Anti: {
      out << '[';
      const auto& es = elements();
      for (std::size_t i = 0; i < es.size(); ++i) {
        if (i) out << ',';
        out << es[i].debug_string();
      }
      out << ']';
      break;
    }
    case Kind::Dc:
      out << '<' << render_cnf(confidentiality()) << " % " << render_cnf(integrity()) << '>';
      break;
  }
  return out.str();
}

}  // namespace mexec
