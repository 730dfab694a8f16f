#include <doctest.h>

#include <random>

#include "mexec/faceted.hpp"
#include "mexec/families.hpp"
#include "mexec/labeled_set.hpp"

using namespace mexec;

namespace {

const AtomSet kPrincipals = {"Alice", "Bob", "Charlie"};

Label one(const char* name) { return Label::atoms({name}); }

LabeledSet set(const Lattice& l, const char* text) { return parse_labeled_set(l, text); }

}  // namespace

TEST_CASE("projection keeps exactly the visible elements") {
  auto pow = make_powerset(kPrincipals);
  LabeledSet x = set(*pow, "{1^{Alice}, 2^{Charlie}}");

  CHECK(project(*pow, x, one("Alice")) == set(*pow, "{1^{Alice}}"));
  CHECK(project(*pow, x, pow->top()) == x);
  CHECK(project(*pow, set(*pow, "{1^{Alice}}"), pow->bot()) == LabeledSet{});
}

TEST_CASE("equivalence compares projections") {
  auto pow = make_powerset(kPrincipals);
  CHECK(equivalent_at(*pow, LabeledSet{}, set(*pow, "{1^{Alice}}"), pow->bot()));
  LabeledSet x = set(*pow, "{1^{Alice}, 2^{Bob}}");
  CHECK(equivalent_at(*pow, x, x, one("Alice")));
  CHECK(!equivalent_at(*pow, set(*pow, "{0^{}}"), set(*pow, "{1^{Alice}}"), pow->bot()));
}

TEST_CASE("labels_of deduplicates") {
  auto pow = make_powerset(kPrincipals);
  auto labels = labels_of(set(*pow, "{1^{Alice}, 2^{Charlie}}"));
  CHECK(labels == std::vector<Label>{one("Alice"), one("Charlie")});
  CHECK(labels_of(LabeledSet{}).empty());
  CHECK(labels_of(set(*pow, "{1^{Alice}, 2^{Alice}}")) == std::vector<Label>{one("Alice")});
}

TEST_CASE("selection filters by label membership") {
  auto pow = make_powerset(kPrincipals);
  LabeledSet x = set(*pow, "{0^{}, 1^{Alice}}");
  std::vector<Label> just_alice{one("Alice")};
  CHECK(select(x, just_alice) == set(*pow, "{1^{Alice}}"));
  CHECK(select(x, labels_of(x)) == x);
  CHECK(select(x, {}) == LabeledSet{});
}

TEST_CASE("projection is idempotent and monotone") {
  auto pow = make_powerset(kPrincipals);
  auto labels = *pow->enumerate(16);
  std::mt19937_64 rng(11);
  std::uniform_int_distribution<std::size_t> pick(0, labels.size() - 1);
  std::uniform_int_distribution<Value> value(0, 9);
  for (int trial = 0; trial < 200; ++trial) {
    LabeledSet x;
    for (int i = 0; i < 5; ++i) x.insert(value(rng), labels[pick(rng)]);
    const Label& a = labels[pick(rng)];
    const Label& b = labels[pick(rng)];
    LabeledSet once = project(*pow, x, a);
    CHECK(project(*pow, once, a) == once);
    if (pow->leq(a, b)) {
      LabeledSet wider = project(*pow, x, b);
      for (const auto& e : once) {
        CHECK(std::find(wider.begin(), wider.end(), e) != wider.end());
      }
    }
  }
}

TEST_CASE("perturbation never changes the observer's view") {
  auto pow = make_powerset(kPrincipals);
  auto labels = *pow->enumerate(16);
  std::mt19937_64 rng(12);
  std::uniform_int_distribution<std::size_t> pick(0, labels.size() - 1);
  std::uniform_int_distribution<Value> value(0, 9);
  for (int trial = 0; trial < 500; ++trial) {
    LabeledSet x;
    for (int i = 0; i < 4; ++i) x.insert(value(rng), labels[pick(rng)]);
    Label level = labels[pick(rng)];
    LabeledSet y = perturb_above(*pow, x, level, labels, rng);
    CHECK(equivalent_at(*pow, x, y, level));
  }
}

TEST_CASE("perturbation at top returns the input unchanged") {
  auto pow = make_powerset(kPrincipals);
  auto labels = *pow->enumerate(16);
  LabeledSet x = set(*pow, "{1^{Alice}, 2^{Bob,Charlie}}");
  std::mt19937_64 rng(13);
  CHECK(perturb_above(*pow, x, pow->top(), labels, rng) == x);
}

TEST_CASE("facet selection walks guards") {
  auto two = make_two_point();
  Label h = two->top(), l = two->bot();

  CHECK(facet_select(*two, Faceted(7), h) == 7);
  Faceted f = Faceted::branch(h, Faceted(1), Faceted(0));
  CHECK(facet_select(*two, f, l) == 0);
  CHECK(facet_select(*two, f, h) == 1);

  // A branch at its own guard shows the private side.
  Faceted nested = Faceted::branch(l, f, Faceted(9));
  CHECK(facet_select(*two, nested, l) == 0);
}

TEST_CASE("labeled sets render and parse canonically") {
  auto pow = make_powerset(kPrincipals);
  LabeledSet x = set(*pow, "{2^{Charlie}, 1^{Alice}, 1^{Alice}}");
  CHECK(x.size() == 2);
  CHECK(render(*pow, x) == "{1^{Alice}, 2^{Charlie}}");
  CHECK(parse_labeled_set(*pow, render(*pow, x)) == x);
  CHECK(render(*pow, LabeledSet{}) == "{}");
}

TEST_CASE("set union is a true set union") {
  auto pow = make_powerset(kPrincipals);
  LabeledSet a = set(*pow, "{1^{Alice}}");
  LabeledSet b = set(*pow, "{1^{Alice}, 2^{Bob}}");
  a.unite(b);
  CHECK(a == b);
}
