#include "mexec/families.hpp"

#include <algorithm>
#include <cctype>
#include <charconv>
#include <sstream>

#include "mexec/errors.hpp"

namespace mexec {

namespace {

std::string_view trim(std::string_view s) {
  while (!s.empty() && std::isspace(static_cast<unsigned char>(s.front()))) s.remove_prefix(1);
  while (!s.empty() && std::isspace(static_cast<unsigned char>(s.back()))) s.remove_suffix(1);
  return s;
}

// Splits on `sep` at bracket depth zero. Brackets: () {} [] <>.
std::vector<std::string_view> split_top_level(std::string_view s, char sep) {
  std::vector<std::string_view> parts;
  int depth = 0;
  std::size_t start = 0;
  for (std::size_t i = 0; i < s.size(); ++i) {
    char c = s[i];
    if (c == '(' || c == '{' || c == '[' || c == '<') ++depth;
    if (c == ')' || c == '}' || c == ']' || c == '>') --depth;
    if (c == sep && depth == 0) {
      parts.push_back(trim(s.substr(start, i - start)));
      start = i + 1;
    }
  }
  parts.push_back(trim(s.substr(start)));
  return parts;
}

bool strip_brackets(std::string_view& s, char open, char close) {
  s = trim(s);
  if (s.size() >= 2 && s.front() == open && s.back() == close) {
    // Only strip when the brackets actually match each other.
    int depth = 0;
    for (std::size_t i = 0; i + 1 < s.size(); ++i) {
      if (s[i] == open) ++depth;
      if (s[i] == close) --depth;
      if (depth == 0) return false;
    }
    s = trim(s.substr(1, s.size() - 2));
    return true;
  }
  return false;
}

std::uint64_t parse_number(std::string_view s, const char* what) {
  s = trim(s);
  std::uint64_t value = 0;
  auto [ptr, ec] = std::from_chars(s.data(), s.data() + s.size(), value);
  if (ec != std::errc() || ptr != s.data() + s.size()) {
    throw ParseError(std::string("expected a number for ") + what + ", got '" +
                     std::string(s) + "'");
  }
  return value;
}

bool valid_atom_name(std::string_view s) {
  if (s.empty()) return false;
  for (char c : s) {
    if (!(std::isalnum(static_cast<unsigned char>(c)) || c == '_' || c == '-')) return false;
  }
  return true;
}

AtomSet parse_atom_list(std::string_view s) {
  s = trim(s);
  if (!strip_brackets(s, '{', '}')) {
    throw ParseError("expected '{...}' atom list, got '" + std::string(s) + "'");
  }
  AtomSet out;
  if (s.empty()) return out;
  for (auto part : split_top_level(s, ',')) {
    if (!valid_atom_name(part)) {
      throw ParseError("bad atom name '" + std::string(part) + "'");
    }
    out.emplace_back(part);
  }
  return make_atom_set(std::move(out));
}

// Descriptor argument: either a count (principals p1..pn) or an explicit list.
AtomSet parse_atom_arg(std::string_view s) {
  s = trim(s);
  if (!s.empty() && s.front() == '{') return parse_atom_list(s);
  return default_principals(parse_number(s, "principal count"));
}

std::string atoms_descriptor_suffix(const AtomSet& atoms) {
  // Render p1..pn as the count; anything else explicitly.
  AtomSet defaults = default_principals(atoms.size());
  if (atoms == defaults) return std::to_string(atoms.size());
  return render_atom_set(atoms);
}

AtomSet parse_set_label(std::string_view s, const AtomSet& carrier, const char* lattice) {
  s = trim(s);
  AtomSet set;
  if (!s.empty() && s.front() == '{') {
    set = parse_atom_list(s);
  } else if (valid_atom_name(s)) {
    set.emplace_back(s);  // bare name means a singleton
  } else {
    throw ParseError(std::string("bad ") + lattice + " label '" + std::string(s) + "'");
  }
  for (const auto& a : set) {
    if (!std::binary_search(carrier.begin(), carrier.end(), a)) {
      throw ParseError("atom '" + a + "' is not a principal of this lattice");
    }
  }
  return set;
}

}  // namespace

AtomSet default_principals(std::size_t n) {
  AtomSet out;
  out.reserve(n);
  for (std::size_t i = 1; i <= n; ++i) out.push_back("p" + std::to_string(i));
  return make_atom_set(std::move(out));
}

// ---------------------------------------------------------------- TwoPoint

TwoPointLattice::TwoPointLattice() = default;

Label TwoPointLattice::bot() const { return Label::nat(0); }
Label TwoPointLattice::top() const { return Label::nat(1); }

Label TwoPointLattice::join(const Label& a, const Label& b) const {
  return Label::nat(std::max(a.nat_value(), b.nat_value()));
}

bool TwoPointLattice::leq(const Label& a, const Label& b) const {
  return a.nat_value() <= b.nat_value();
}

Label TwoPointLattice::meet(const Label& a, const Label& b) const {
  return Label::nat(std::min(a.nat_value(), b.nat_value()));
}

bool TwoPointLattice::contains(const Label& l) const {
  return l.is(Label::Kind::Nat) && l.nat_value() <= 1;
}

std::string TwoPointLattice::render(const Label& l) const {
  return l.nat_value() == 0 ? "L" : "H";
}

Label TwoPointLattice::parse_label(std::string_view text) const {
  text = trim(text);
  if (text == "L" || text == "bot") return bot();
  if (text == "H" || text == "top") return top();
  throw ParseError("two-point label must be L or H, got '" + std::string(text) + "'");
}

std::optional<std::vector<Label>> TwoPointLattice::enumerate(std::size_t limit) const {
  if (limit < 2) return std::nullopt;
  return std::vector<Label>{bot(), top()};
}

// ---------------------------------------------------------------- NatChain

NatChainLattice::NatChainLattice() = default;

Label NatChainLattice::bot() const { return Label::nat(0); }

Label NatChainLattice::join(const Label& a, const Label& b) const {
  return Label::nat(std::max(a.nat_value(), b.nat_value()));
}

bool NatChainLattice::leq(const Label& a, const Label& b) const {
  return a.nat_value() <= b.nat_value();
}

Label NatChainLattice::meet(const Label& a, const Label& b) const {
  return Label::nat(std::min(a.nat_value(), b.nat_value()));
}

bool NatChainLattice::contains(const Label& l) const { return l.is(Label::Kind::Nat); }

std::string NatChainLattice::render(const Label& l) const {
  return std::to_string(l.nat_value());
}

Label NatChainLattice::parse_label(std::string_view text) const {
  return Label::nat(parse_number(text, "nat label"));
}

std::optional<std::vector<Label>> NatChainLattice::enumerate(std::size_t) const {
  return std::nullopt;
}

// ---------------------------------------------------------------- Discrete

DiscreteLattice::DiscreteLattice(AtomSet atoms)
    : atoms_(std::move(atoms)), descriptor_("discrete:" + atoms_descriptor_suffix(atoms_)) {}

Label DiscreteLattice::bot() const { return Label::mark(0); }
Label DiscreteLattice::top() const { return Label::mark(1); }

Label DiscreteLattice::atom(const Atom& a) const { return Label::atoms({a}); }

Label DiscreteLattice::join(const Label& a, const Label& b) const {
  if (a == bot()) return b;
  if (b == bot()) return a;
  if (a == top() || b == top()) return top();
  return a == b ? a : top();
}

bool DiscreteLattice::leq(const Label& a, const Label& b) const {
  if (a == bot() || b == top()) return true;
  return a == b;
}

bool DiscreteLattice::contains(const Label& l) const {
  if (l.is(Label::Kind::Mark)) return l.mark_value() <= 1;
  return l.is(Label::Kind::Atoms) && l.atom_set().size() == 1 &&
         std::binary_search(atoms_.begin(), atoms_.end(), l.atom_set().front());
}

std::string DiscreteLattice::render(const Label& l) const {
  if (l == bot()) return "bot";
  if (l == top()) return "top";
  return l.atom_set().front();
}

Label DiscreteLattice::parse_label(std::string_view text) const {
  text = trim(text);
  if (text == "bot") return bot();
  if (text == "top") return top();
  std::string name(text);
  if (!std::binary_search(atoms_.begin(), atoms_.end(), name)) {
    throw ParseError("'" + name + "' is not an atom of " + descriptor_);
  }
  return Label::atoms({std::move(name)});
}

std::optional<std::vector<Label>> DiscreteLattice::enumerate(std::size_t limit) const {
  if (atoms_.size() + 2 > limit) return std::nullopt;
  std::vector<Label> out;
  for (const auto& a : atoms_) out.push_back(Label::atoms({a}));
  out.push_back(bot());
  out.push_back(top());
  std::sort(out.begin(), out.end());
  return out;
}

// ---------------------------------------------------------------- Powerset

PowersetLattice::PowersetLattice(AtomSet atoms)
    : atoms_(std::move(atoms)), descriptor_("powerset:" + atoms_descriptor_suffix(atoms_)) {}

Label PowersetLattice::bot() const { return Label::atoms({}); }
Label PowersetLattice::top() const { return Label::atoms(atoms_); }

Label PowersetLattice::join(const Label& a, const Label& b) const {
  return Label::atoms(atom_union(a.atom_set(), b.atom_set()));
}

bool PowersetLattice::leq(const Label& a, const Label& b) const {
  return atom_subset(a.atom_set(), b.atom_set());
}

Label PowersetLattice::meet(const Label& a, const Label& b) const {
  return Label::atoms(atom_intersection(a.atom_set(), b.atom_set()));
}

bool PowersetLattice::contains(const Label& l) const {
  return l.is(Label::Kind::Atoms) && atom_subset(l.atom_set(), atoms_);
}

std::string PowersetLattice::render(const Label& l) const {
  return render_atom_set(l.atom_set());
}

Label PowersetLattice::parse_label(std::string_view text) const {
  return Label::atoms(parse_set_label(text, atoms_, "powerset"));
}

std::optional<std::vector<Label>> PowersetLattice::enumerate(std::size_t limit) const {
  if (atoms_.size() > 20 || (std::size_t(1) << atoms_.size()) > limit) return std::nullopt;
  std::vector<Label> out;
  const std::size_t n = atoms_.size();
  for (std::size_t mask = 0; mask < (std::size_t(1) << n); ++mask) {
    AtomSet s;
    for (std::size_t i = 0; i < n; ++i) {
      if (mask & (std::size_t(1) << i)) s.push_back(atoms_[i]);
    }
    out.push_back(Label::atoms(std::move(s)));
  }
  std::sort(out.begin(), out.end());
  return out;
}

// ------------------------------------------------------- TruncatedPowerset

TruncatedPowersetLattice::TruncatedPowersetLattice(std::size_t k, AtomSet atoms)
    : k_(k),
      atoms_(std::move(atoms)),
      descriptor_("trunc:" + std::to_string(k) + ":" + atoms_descriptor_suffix(atoms_)) {}

Label TruncatedPowersetLattice::bot() const { return Label::atoms({}); }
Label TruncatedPowersetLattice::top() const { return Label::mark(1); }

Label TruncatedPowersetLattice::join(const Label& a, const Label& b) const {
  if (a == top() || b == top()) return top();
  AtomSet u = atom_union(a.atom_set(), b.atom_set());
  if (u.size() > k_) return top();
  return Label::atoms(std::move(u));
}

bool TruncatedPowersetLattice::leq(const Label& a, const Label& b) const {
  if (b == top()) return true;
  if (a == top()) return false;
  return atom_subset(a.atom_set(), b.atom_set());
}

Label TruncatedPowersetLattice::meet(const Label& a, const Label& b) const {
  if (a == top()) return b;
  if (b == top()) return a;
  return Label::atoms(atom_intersection(a.atom_set(), b.atom_set()));
}

bool TruncatedPowersetLattice::contains(const Label& l) const {
  if (l == top()) return true;
  return l.is(Label::Kind::Atoms) && l.atom_set().size() <= k_ &&
         atom_subset(l.atom_set(), atoms_);
}

std::string TruncatedPowersetLattice::render(const Label& l) const {
  if (l == top()) return "top";
  return render_atom_set(l.atom_set());
}

Label TruncatedPowersetLattice::parse_label(std::string_view text) const {
  text = trim(text);
  if (text == "top") return top();
  AtomSet s = parse_set_label(text, atoms_, "truncated-powerset");
  if (s.size() > k_) {
    throw ParseError("set larger than the truncation bound " + std::to_string(k_) +
                     "; write 'top' for the greatest element");
  }
  return Label::atoms(std::move(s));
}

std::optional<std::vector<Label>> TruncatedPowersetLattice::enumerate(std::size_t limit) const {
  std::vector<Label> out{top()};
  // Subsets of size <= k, built by extending shorter prefixes.
  std::vector<AtomSet> frontier{AtomSet{}};
  out.push_back(bot());
  for (std::size_t size = 1; size <= k_; ++size) {
    std::vector<AtomSet> next;
    for (const auto& s : frontier) {
      auto from = s.empty() ? atoms_.begin()
                            : std::upper_bound(atoms_.begin(), atoms_.end(), s.back());
      for (auto it = from; it != atoms_.end(); ++it) {
        AtomSet bigger = s;
        bigger.push_back(*it);
        out.push_back(Label::atoms(bigger));
        if (out.size() > limit) return std::nullopt;
        next.push_back(std::move(bigger));
      }
    }
    frontier = std::move(next);
  }
  std::sort(out.begin(), out.end());
  return out;
}

// ---------------------------------------------------------------- Product

ProductLattice::ProductLattice(LatticePtr left, LatticePtr right)
    : left_(std::move(left)),
      right_(std::move(right)),
      descriptor_("product(" + left_->descriptor() + "," + right_->descriptor() + ")") {}

Label ProductLattice::bot() const { return Label::pair(left_->bot(), right_->bot()); }

bool ProductLattice::has_top() const { return left_->has_top() && right_->has_top(); }

Label ProductLattice::top() const {
  if (!has_top()) return Lattice::top();
  return Label::pair(left_->top(), right_->top());
}

bool ProductLattice::has_meet() const { return left_->has_meet() && right_->has_meet(); }

Label ProductLattice::meet(const Label& a, const Label& b) const {
  if (!has_meet()) return Lattice::meet(a, b);
  return Label::pair(left_->meet(a.first(), b.first()), right_->meet(a.second(), b.second()));
}

Label ProductLattice::join(const Label& a, const Label& b) const {
  return Label::pair(left_->join(a.first(), b.first()), right_->join(a.second(), b.second()));
}

bool ProductLattice::leq(const Label& a, const Label& b) const {
  return left_->leq(a.first(), b.first()) && right_->leq(a.second(), b.second());
}

bool ProductLattice::contains(const Label& l) const {
  return l.is(Label::Kind::Pair) && left_->contains(l.first()) && right_->contains(l.second());
}

std::string ProductLattice::render(const Label& l) const {
  return "(" + left_->render(l.first()) + "," + right_->render(l.second()) + ")";
}

Label ProductLattice::parse_label(std::string_view text) const {
  std::string_view s = trim(text);
  if (!strip_brackets(s, '(', ')')) {
    throw ParseError("product label must look like (x,y), got '" + std::string(text) + "'");
  }
  auto parts = split_top_level(s, ',');
  if (parts.size() != 2) {
    throw ParseError("product label must have two components, got '" + std::string(text) + "'");
  }
  return Label::pair(left_->parse_label(parts[0]), right_->parse_label(parts[1]));
}

std::optional<std::vector<Label>> ProductLattice::enumerate(std::size_t limit) const {
  auto ls = left_->enumerate(limit);
  if (!ls) return std::nullopt;
  auto rs = right_->enumerate(limit);
  if (!rs) return std::nullopt;
  if (ls->size() * rs->size() > limit) return std::nullopt;
  std::vector<Label> out;
  out.reserve(ls->size() * rs->size());
  for (const auto& a : *ls)
    for (const auto& b : *rs) out.push_back(Label::pair(a, b));
  std::sort(out.begin(), out.end());
  return out;
}

// ------------------------------------------------------------------- VSum

VSumLattice::VSumLattice(LatticePtr low, LatticePtr high)
    : low_(std::move(low)),
      high_(std::move(high)),
      descriptor_("vsum(" + low_->descriptor() + "," + high_->descriptor() + ")") {}

Label VSumLattice::bot() const { return Label::side(0, low_->bot()); }

bool VSumLattice::has_top() const { return high_->has_top(); }

Label VSumLattice::top() const {
  if (!has_top()) return Lattice::top();
  return Label::side(1, high_->top());
}

Label VSumLattice::join(const Label& a, const Label& b) const {
  if (a.side_index() == b.side_index()) {
    const Lattice& side = a.side_index() == 0 ? *low_ : *high_;
    return Label::side(a.side_index(), side.join(a.side_payload(), b.side_payload()));
  }
  // Everything in the low side is below everything in the high side.
  return a.side_index() == 1 ? a : b;
}

bool VSumLattice::leq(const Label& a, const Label& b) const {
  if (a.side_index() == 0 && b.side_index() == 1) return true;
  if (a.side_index() != b.side_index()) return false;
  const Lattice& side = a.side_index() == 0 ? *low_ : *high_;
  return side.leq(a.side_payload(), b.side_payload());
}

bool VSumLattice::contains(const Label& l) const {
  if (!l.is(Label::Kind::Side) || l.side_index() > 1) return false;
  return (l.side_index() == 0 ? *low_ : *high_).contains(l.side_payload());
}

std::string VSumLattice::render(const Label& l) const {
  const Lattice& side = l.side_index() == 0 ? *low_ : *high_;
  return std::to_string(int(l.side_index())) + ":" + side.render(l.side_payload());
}

Label VSumLattice::parse_label(std::string_view text) const {
  std::string_view s = trim(text);
  if (s.size() >= 2 && (s[0] == '0' || s[0] == '1') && s[1] == ':') {
    std::uint8_t index = s[0] == '0' ? 0 : 1;
    const Lattice& side = index == 0 ? *low_ : *high_;
    return Label::side(index, side.parse_label(s.substr(2)));
  }
  throw ParseError("sum label must look like 0:<x> or 1:<x>, got '" + std::string(text) + "'");
}

std::optional<std::vector<Label>> VSumLattice::enumerate(std::size_t limit) const {
  auto ls = low_->enumerate(limit);
  if (!ls) return std::nullopt;
  auto hs = high_->enumerate(limit);
  if (!hs) return std::nullopt;
  if (ls->size() + hs->size() > limit) return std::nullopt;
  std::vector<Label> out;
  for (const auto& a : *ls) out.push_back(Label::side(0, a));
  for (const auto& b : *hs) out.push_back(Label::side(1, b));
  std::sort(out.begin(), out.end());
  return out;
}

// ------------------------------------------------------------------- HSum

HSumLattice::HSumLattice(LatticePtr left, LatticePtr right)
    : left_(std::move(left)),
      right_(std::move(right)),
      descriptor_("hsum(" + left_->descriptor() + "," + right_->descriptor() + ")") {}

Label HSumLattice::bot() const { return Label::mark(0); }
Label HSumLattice::top() const { return Label::mark(1); }

Label HSumLattice::join(const Label& a, const Label& b) const {
  if (a == bot()) return b;
  if (b == bot()) return a;
  if (a == top() || b == top()) return top();
  if (a.side_index() != b.side_index()) return top();
  const Lattice& side = a.side_index() == 0 ? *left_ : *right_;
  return Label::side(a.side_index(), side.join(a.side_payload(), b.side_payload()));
}

bool HSumLattice::leq(const Label& a, const Label& b) const {
  if (a == bot() || b == top()) return true;
  if (b == bot() || a == top()) return a == b;
  if (a.side_index() != b.side_index()) return false;
  const Lattice& side = a.side_index() == 0 ? *left_ : *right_;
  return side.leq(a.side_payload(), b.side_payload());
}

bool HSumLattice::contains(const Label& l) const {
  if (l.is(Label::Kind::Mark)) return l.mark_value() <= 1;
  if (!l.is(Label::Kind::Side) || l.side_index() > 1) return false;
  return (l.side_index() == 0 ? *left_ : *right_).contains(l.side_payload());
}

std::string HSumLattice::render(const Label& l) const {
  if (l == bot()) return "bot";
  if (l == top()) return "top";
  const Lattice& side = l.side_index() == 0 ? *left_ : *right_;
  return std::to_string(int(l.side_index())) + ":" + side.render(l.side_payload());
}

Label HSumLattice::parse_label(std::string_view text) const {
  std::string_view s = trim(text);
  if (s == "bot") return bot();
  if (s == "top") return top();
  if (s.size() >= 2 && (s[0] == '0' || s[0] == '1') && s[1] == ':') {
    std::uint8_t index = s[0] == '0' ? 0 : 1;
    const Lattice& side = index == 0 ? *left_ : *right_;
    return Label::side(index, side.parse_label(s.substr(2)));
  }
  throw ParseError("hsum label must be bot, top, 0:<x> or 1:<x>, got '" + std::string(text) +
                   "'");
}

std::optional<std::vector<Label>> HSumLattice::enumerate(std::size_t limit) const {
  auto ls = left_->enumerate(limit);
  if (!ls) return std::nullopt;
  auto rs = right_->enumerate(limit);
  if (!rs) return std::nullopt;
  if (ls->size() + rs->size() + 2 > limit) return std::nullopt;
  std::vector<Label> out{bot(), top()};
  for (const auto& a : *ls) out.push_back(Label::side(0, a));
  for (const auto& b : *rs) out.push_back(Label::side(1, b));
  std::sort(out.begin(), out.end());
  return out;
}

// ------------------------------------------------------------ Exponential

ExponentialLattice::ExponentialLattice(LatticePtr base)
    : base_(std::move(base)), descriptor_("exp(" + base_->descriptor() + ")") {}

Label ExponentialLattice::make(std::vector<Label> elements) const {
  // Keep the maximal elements only: x is dropped when some other element
  // dominates it.
  std::sort(elements.begin(), elements.end());
  elements.erase(std::unique(elements.begin(), elements.end()), elements.end());
  std::vector<Label> maximal;
  for (const auto& x : elements) {
    bool dominated = false;
    for (const auto& y : elements) {
      if (!(x == y) && base_->leq(x, y)) {
        dominated = true;
        break;
      }
    }
    if (!dominated) maximal.push_back(x);
  }
  return Label::antichain(std::move(maximal));
}

Label ExponentialLattice::bot() const { return Label::antichain({}); }

bool ExponentialLattice::has_top() const { return base_->has_top(); }

Label ExponentialLattice::top() const {
  if (!has_top()) return Lattice::top();
  return Label::antichain({base_->top()});
}

Label ExponentialLattice::join(const Label& a, const Label& b) const {
  std::vector<Label> all = a.elements();
  const auto& bs = b.elements();
  all.insert(all.end(), bs.begin(), bs.end());
  return make(std::move(all));
}

bool ExponentialLattice::leq(const Label& a, const Label& b) const {
  for (const auto& x : a.elements()) {
    bool covered = false;
    for (const auto& y : b.elements()) {
      if (base_->leq(x, y)) {
        covered = true;
        break;
      }
    }
    if (!covered) return false;
  }
  return true;
}

bool ExponentialLattice::contains(const Label& l) const {
  if (!l.is(Label::Kind::Anti)) return false;
  const auto& es = l.elements();
  for (std::size_t i = 0; i < es.size(); ++i) {
    if (!base_->contains(es[i])) return false;
    if (i + 1 < es.size() && !(es[i] < es[i + 1])) return false;
    for (std::size_t j = 0; j < es.size(); ++j) {
      if (i != j && base_->leq(es[i], es[j])) return false;
    }
  }
  return true;
}

std::string ExponentialLattice::render(const Label& l) const {
  std::ostringstream out;
  out << '[';
  const auto& es = l.elements();
  for (std::size_t i = 0; i < es.size(); ++i) {
    if (i) out << ',';
    out << base_->render(es[i]);
  }
  out << ']';
  return out.str();
}

Label ExponentialLattice::parse_label(std::string_view text) const {
  std::string_view s = trim(text);
  if (!strip_brackets(s, '[', ']')) {
    throw ParseError("exponential label must look like [x,y], got '" + std::string(text) + "'");
  }
  std::vector<Label> elements;
  if (!s.empty()) {
    for (auto part : split_top_level(s, ',')) {
      elements.push_back(base_->parse_label(part));
    }
  }
  return make(std::move(elements));
}

std::optional<std::vector<Label>> ExponentialLattice::enumerate(std::size_t limit) const {
  auto carrier = base_->enumerate(16);
  if (!carrier) return std::nullopt;
  const std::size_t n = carrier->size();
  std::vector<Label> out;
  for (std::size_t mask = 0; mask < (std::size_t(1) << n); ++mask) {
    std::vector<Label> subset;
    for (std::size_t i = 0; i < n; ++i) {
      if (mask & (std::size_t(1) << i)) subset.push_back((*carrier)[i]);
    }
    Label candidate = Label::antichain(subset);
    if (contains(candidate)) {
      out.push_back(std::move(candidate));
      if (out.size() > limit) return std::nullopt;
    }
  }
  std::sort(out.begin(), out.end());
  return out;
}

// --------------------------------------------------------------- DcLabels

DcLabelLattice::DcLabelLattice(AtomSet principals)
    : principals_(std::move(principals)),
      descriptor_("dc:" + atoms_descriptor_suffix(principals_)) {
  for (const auto& p : principals_) all_singletons_.push_back({p});
}

Label DcLabelLattice::bot() const {
  // Public data everybody vouches for: <true, p1 & ... & pn>.
  return Label::dc({}, all_singletons_);
}

Label DcLabelLattice::top() const {
  // Everybody's secret, vouched by nobody: <p1 & ... & pn, true>.
  return Label::dc(all_singletons_, {});
}

Label DcLabelLattice::join(const Label& a, const Label& b) const {
  return Label::dc(cnf_and(a.confidentiality(), b.confidentiality()),
                   cnf_or(a.integrity(), b.integrity()));
}

bool DcLabelLattice::leq(const Label& a, const Label& b) const {
  return cnf_implies(b.confidentiality(), a.confidentiality()) &&
         cnf_implies(a.integrity(), b.integrity());
}

bool DcLabelLattice::contains(const Label& l) const {
  if (!l.is(Label::Kind::Dc)) return false;
  for (const Cnf* f : {&l.confidentiality(), &l.integrity()}) {
    if (!is_reduced_cnf(*f)) return false;
    for (const auto& clause : *f) {
      if (!atom_subset(clause, principals_)) return false;
    }
  }
  return true;
}

std::string DcLabelLattice::render(const Label& l) const {
  return "<" + render_cnf(l.confidentiality()) + " % " + render_cnf(l.integrity()) + ">";
}

namespace {

Cnf parse_cnf(std::string_view text, const AtomSet& principals) {
  std::string_view s = trim(text);
  if (s == "true") return {};
  Cnf out;
  for (auto part : split_top_level(s, '&')) {
    std::string_view clause_text = part;
    strip_brackets(clause_text, '(', ')');
    Clause clause;
    for (auto atom : split_top_level(clause_text, '|')) {
      if (!valid_atom_name(atom)) {
        throw ParseError("bad principal name '" + std::string(atom) + "'");
      }
      Atom a(atom);
      if (!std::binary_search(principals.begin(), principals.end(), a)) {
        throw ParseError("'" + a + "' is not a principal of this lattice");
      }
      clause.push_back(std::move(a));
    }
    if (clause.empty()) throw ParseError("empty clause in '" + std::string(text) + "'");
    out.push_back(make_atom_set(std::move(clause)));
  }
  return reduce_cnf(std::move(out));
}

}  // namespace

Label DcLabelLattice::parse_label(std::string_view text) const {
  std::string_view s = trim(text);
  if (!strip_brackets(s, '<', '>')) {
    throw ParseError("dc label must look like <conf % integ>, got '" + std::string(text) + "'");
  }
  auto parts = split_top_level(s, '%');
  if (parts.size() != 2) {
    throw ParseError("dc label must have '%'-separated components, got '" + std::string(text) +
                     "'");
  }
  return Label::dc(parse_cnf(parts[0], principals_), parse_cnf(parts[1], principals_));
}

const std::vector<Cnf>& DcLabelLattice::all_formulas() const {
  if (!formulas_.empty()) return formulas_;
  if (principals_.size() > 5) {
    throw LimitError("enumerating monotone CNFs over " + std::to_string(principals_.size()) +
                         " principals is infeasible; 5 is the maximum",
                     5);
  }
  // All non-empty clauses, then all antichains of them, found by a
  // prefix search that only extends with incomparable clauses.
  std::vector<Clause> clauses;
  const std::size_t n = principals_.size();
  for (std::size_t mask = 1; mask < (std::size_t(1) << n); ++mask) {
    Clause c;
    for (std::size_t i = 0; i < n; ++i) {
      if (mask & (std::size_t(1) << i)) c.push_back(principals_[i]);
    }
    clauses.push_back(std::move(c));
  }
  std::sort(clauses.begin(), clauses.end());
  std::vector<Cnf> result;
  Cnf current;
  auto extend = [&](auto&& self, std::size_t from) -> void {
    result.push_back(reduce_cnf(current));
    for (std::size_t i = from; i < clauses.size(); ++i) {
      bool comparable = false;
      for (const auto& chosen : current) {
        if (atom_subset(chosen, clauses[i]) || atom_subset(clauses[i], chosen)) {
          comparable = true;
          break;
        }
      }
      if (comparable) continue;
      current.push_back(clauses[i]);
      self(self, i + 1);
      current.pop_back();
    }
  };
  extend(extend, 0);
  std::sort(result.begin(), result.end());
  result.erase(std::unique(result.begin(), result.end()), result.end());
  formulas_ = std::move(result);
  return formulas_;
}

std::optional<std::vector<Label>> DcLabelLattice::enumerate(std::size_t limit) const {
  if (principals_.size() > 4) return std::nullopt;
  const auto& fs = all_formulas();
  if (fs.size() * fs.size() > limit) return std::nullopt;
  std::vector<Label> out;
  out.reserve(fs.size() * fs.size());
  for (const auto& c : fs)
    for (const auto& i : fs) out.push_back(Label::dc(c, i));
  std::sort(out.begin(), out.end());
  return out;
}

// ---------------------------------------------------------------- factory

LatticePtr make_two_point() { return std::make_shared<TwoPointLattice>(); }
LatticePtr make_nat_chain() { return std::make_shared<NatChainLattice>(); }
LatticePtr make_discrete(AtomSet atoms) {
  return std::make_shared<DiscreteLattice>(std::move(atoms));
}
LatticePtr make_powerset(AtomSet atoms) {
  return std::make_shared<PowersetLattice>(std::move(atoms));
}
LatticePtr make_truncated_powerset(std::size_t k, AtomSet atoms) {
  return std::make_shared<TruncatedPowersetLattice>(k, std::move(atoms));
}
LatticePtr make_product(LatticePtr left, LatticePtr right) {
  return std::make_shared<ProductLattice>(std::move(left), std::move(right));
}
LatticePtr make_vsum(LatticePtr low, LatticePtr high) {
  return std::make_shared<VSumLattice>(std::move(low), std::move(high));
}
LatticePtr make_hsum(LatticePtr left, LatticePtr right) {
  return std::make_shared<HSumLattice>(std::move(left), std::move(right));
}
LatticePtr make_exponential(LatticePtr base) {
  return std::make_shared<ExponentialLattice>(std::move(base));
}
LatticePtr make_dc_labels(AtomSet principals) {
  return std::make_shared<DcLabelLattice>(std::move(principals));
}

LatticePtr parse_lattice(std::string_view descriptor) {
  std::string_view s = trim(descriptor);
  if (s == "two-point") return make_two_point();
  if (s == "nat") return make_nat_chain();

  auto binary = [&](std::string_view head) -> std::optional<std::pair<LatticePtr, LatticePtr>> {
    if (!s.starts_with(head)) return std::nullopt;
    std::string_view rest = s.substr(head.size());
    if (!strip_brackets(rest, '(', ')')) {
      throw ParseError(std::string(head) + " needs parenthesized arguments");
    }
    auto parts = split_top_level(rest, ',');
    if (parts.size() != 2) {
      throw ParseError(std::string(head) + " needs exactly two lattice arguments");
    }
    return std::make_pair(parse_lattice(parts[0]), parse_lattice(parts[1]));
  };

  if (auto args = binary("product")) return make_product(args->first, args->second);
  if (auto args = binary("vsum")) return make_vsum(args->first, args->second);
  if (auto args = binary("hsum")) return make_hsum(args->first, args->second);
  if (s.starts_with("exp")) {
    std::string_view rest = s.substr(3);
    if (!strip_brackets(rest, '(', ')')) throw ParseError("exp needs a parenthesized argument");
    return make_exponential(parse_lattice(rest));
  }
  if (s.starts_with("discrete:")) return make_discrete(parse_atom_arg(s.substr(9)));
  if (s.starts_with("powerset:")) return make_powerset(parse_atom_arg(s.substr(9)));
  if (s.starts_with("dc:")) return make_dc_labels(parse_atom_arg(s.substr(3)));
  if (s.starts_with("trunc:")) {
    auto parts = split_top_level(s.substr(6), ':');
    if (parts.size() != 2) throw ParseError("trunc descriptor must be trunc:<k>:<n>");
    return make_truncated_powerset(parse_number(parts[0], "truncation bound"),
                                   parse_atom_arg(parts[1]));
  }
  throw ParseError("unknown lattice descriptor '" + std::string(descriptor) + "'");
}

}  // namespace mexec
