#include <doctest.h>

#include "mexec/errors.hpp"
#include "mexec/families.hpp"
#include "mexec/programs.hpp"

using namespace mexec;

namespace {

const AtomSet kPrincipals = {"Alice", "Bob", "Charlie"};

LabeledSet set(const Lattice& l, const char* text) { return parse_labeled_set(l, text); }

}  // namespace

TEST_CASE("secure counts visible inputs per level") {
  auto two = make_two_point();
  auto p = make_secure(two);
  CHECK(p->run({}) == set(*two, "{0^L, 0^H}"));
  CHECK(p->run(set(*two, "{1^L}")) == set(*two, "{1^L, 1^H}"));
  CHECK(p->run(set(*two, "{1^L, 2^H}")) == set(*two, "{1^L, 2^H}"));
}

TEST_CASE("insecure publishes the total count") {
  auto two = make_two_point();
  auto p = make_insecure(two);
  CHECK(p->run({}) == set(*two, "{0^L}"));
  CHECK(p->run(set(*two, "{1^H}")) == set(*two, "{1^L}"));
  CHECK(p->run(set(*two, "{1^L, 2^H}")) == set(*two, "{2^L}"));
}

TEST_CASE("badSum labels the total with the join of the input labels") {
  auto pow = make_powerset(kPrincipals);
  auto p = make_bad_sum(pow);
  CHECK(p->run({}) == set(*pow, "{0^{}}"));
  CHECK(p->run(set(*pow, "{1^{Alice}}")) == set(*pow, "{1^{Alice}}"));
  CHECK(p->run(set(*pow, "{1^{Alice}, 2^{Bob}}")) == set(*pow, "{3^{Alice,Bob}}"));
}

TEST_CASE("goodSum fixes its output label up front") {
  auto pow = make_powerset(kPrincipals);
  auto p = make_good_sum(pow, {Label::atoms({"Alice"}), Label::atoms({"Bob"})});
  CHECK(p->run(set(*pow, "{1^{Alice}, 2^{Charlie}}")) == set(*pow, "{1^{Alice,Bob}}"));

  auto empty = make_good_sum(pow, {});
  CHECK(empty->run(set(*pow, "{7^{Alice}}")) == set(*pow, "{0^{}}"));

  auto single = make_good_sum(pow, {Label::atoms({"Alice"})});
  CHECK(single->run(set(*pow, "{5^{Alice}, 7^{Alice}}")) == set(*pow, "{12^{Alice}}"));

  // The output label is an input-independent constant.
  LabeledSet a = p->run({});
  LabeledSet b = p->run(set(*pow, "{3^{Charlie}}"));
  CHECK(labels_of(a) == labels_of(b));
  CHECK(labels_of(a) == std::vector<Label>{Label::atoms({"Alice", "Bob"})});
}

TEST_CASE("pairwise emits every pairwise maximum, self-pairs included") {
  auto pow = make_powerset(kPrincipals);
  auto p = make_pairwise(pow);
  CHECK(p->run(set(*pow, "{1^{Alice}, 2^{Bob}}")) ==
        set(*pow, "{1^{Alice}, 2^{Bob}, 2^{Alice,Bob}}"));
  CHECK(p->run({}) == LabeledSet{});

  LabeledSet out = p->run(set(*pow, "{0^{Alice,Bob}, 1^{Charlie}}"));
  LabeledSet::Entry wide{1, Label::atoms({"Alice", "Bob", "Charlie"})};
  CHECK(std::find(out.begin(), out.end(), wide) != out.end());
}

TEST_CASE("pairwise1 ignores labels wider than a singleton") {
  auto pow = make_powerset(kPrincipals);
  auto p = make_pairwise_1(pow);
  CHECK(p->run(set(*pow, "{1^{Alice}, 2^{Bob}}")) ==
        set(*pow, "{1^{Alice}, 2^{Bob}, 2^{Alice,Bob}}"));
  CHECK(p->run(set(*pow, "{0^{Alice,Bob}, 1^{Charlie}}")) == set(*pow, "{1^{Charlie}}"));
  CHECK(p->run({}) == LabeledSet{});

  // Output labels never exceed two atoms.
  LabeledSet out = p->run(set(*pow, "{1^{Alice}, 2^{Bob}, 3^{Charlie}, 4^{}}"));
  for (const Label& l : labels_of(out)) CHECK(l.atom_set().size() <= 2);
}

TEST_CASE("the run counter counts invocations exactly") {
  auto pow = make_powerset(kPrincipals);
  auto p = make_bad_sum(pow);
  CHECK(p->runs() == 0);
  p->run({});
  p->run({});
  CHECK(p->runs() == 2);
  p->reset_runs();
  CHECK(p->runs() == 0);
}

TEST_CASE("programs are reachable by CLI name") {
  auto pow = make_powerset(kPrincipals);
  CHECK(make_program("badSum", pow)->name() == "badSum");
  CHECK(make_program("pairwise", pow)->name() == "pairwise");
  CHECK(make_program("pairwise1", pow)->name() == "pairwise1");
  auto good = make_program("goodSum:{{Alice},{Bob}}", pow);
  CHECK(good->run(set(*pow, "{1^{Alice}, 2^{Charlie}}")) == set(*pow, "{1^{Alice,Bob}}"));

  auto two = make_two_point();
  CHECK(make_program("secure", two)->name() == "secure");
  CHECK_THROWS_AS(make_program("secure", pow), DomainError);
  CHECK_THROWS_AS(make_program("nonsense", pow), ParseError);
  CHECK_THROWS_AS(make_program("goodSum", pow), DomainError);  // needs labels
}

TEST_CASE("faceted list sums match their displays") {
  auto two = make_two_point();
  Label h = two->top();
  Faceted secret = Faceted::branch(h, Faceted(1), Faceted(0));

  SUBCASE("goodListSum guards the sum with its level") {
    Faceted out = good_list_sum(*two, h, {secret, Faceted(2)});
    CHECK(facet_select(*two, out, h) == 3);
    CHECK(facet_select(*two, out, two->bot()) == 0);
    Faceted none = good_list_sum(*two, h, {});
    CHECK(facet_select(*two, none, h) == 0);
  }
  SUBCASE("badListSum1 leaks the secret view in the clear") {
    Faceted out = bad_list_sum_1(*two, {secret});
    CHECK(out.is_leaf());
    CHECK(out.leaf() == 1);
  }
  SUBCASE("badListSum2 guards with the join of the input guards") {
    Faceted out = bad_list_sum_2(*two, {secret});
    REQUIRE(!out.is_leaf());
    CHECK(out.guard() == h);
    CHECK(facet_select(*two, out, h) == 1);
    CHECK(facet_select(*two, out, two->bot()) == 0);
  }
}

TEST_CASE("the corpus records the declared security status") {
  const auto& corpus = program_corpus();
  CHECK(corpus.size() == 6);
  auto find = [&](std::string_view name) {
    for (const auto& spec : corpus) {
      if (spec.name == name) return spec;
    }
    FAIL("missing program ", name);
    return corpus.front();
  };
  CHECK(find("secure").noninterfering);
  CHECK(!find("insecure").noninterfering);
  CHECK(!find("badSum").noninterfering);
  CHECK(find("goodSum").noninterfering);
  CHECK(find("pairwise").noninterfering);
  CHECK(find("pairwise1").noninterfering);
}
