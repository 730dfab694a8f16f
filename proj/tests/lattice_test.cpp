#include <doctest.h>

#include "mexec/errors.hpp"
#include "mexec/families.hpp"
#include "oracles.hpp"

using namespace mexec;

namespace {

Label atoms(std::initializer_list<const char*> names) {
  AtomSet s;
  for (const char* n : names) s.emplace_back(n);
  return Label::atoms(make_atom_set(std::move(s)));
}

std::vector<Label> carrier(const Lattice& l, std::size_t limit = 512) {
  auto e = l.enumerate(limit);
  REQUIRE(e.has_value());
  return *e;
}

}  // namespace

TEST_CASE("join_all over the basic examples") {
  auto two = make_two_point();
  std::vector<Label> both{two->bot(), two->top()};
  CHECK(join_all(*two, both) == two->top());

  auto pow = make_powerset({"Alice", "Bob", "Charlie"});
  std::vector<Label> ac{atoms({"Alice"}), atoms({"Charlie"})};
  CHECK(join_all(*pow, ac) == atoms({"Alice", "Charlie"}));

  CHECK(join_all(*pow, {}) == pow->bot());
}

TEST_CASE("join_all rejects labels outside the carrier") {
  auto pow = make_powerset({"Alice", "Bob"});
  std::vector<Label> bad{atoms({"Mallory"})};
  CHECK_THROWS_AS(join_all(*pow, bad), DomainError);
}

TEST_CASE("every small shipped lattice passes the laws exhaustively") {
  std::vector<LatticePtr> instances = {
      make_two_point(),
      make_discrete(default_principals(4)),
      make_powerset(default_principals(4)),
      make_powerset(default_principals(6)),  // 64 labels, the documented cap
      make_truncated_powerset(2, default_principals(4)),
      make_product(make_two_point(), make_two_point()),
      make_product(make_powerset(default_principals(2)), make_discrete(default_principals(2))),
      make_vsum(make_two_point(), make_discrete(default_principals(3))),
      make_hsum(make_two_point(), make_powerset(default_principals(2))),
      make_exponential(make_two_point()),
      make_exponential(make_discrete(default_principals(2))),
      make_dc_labels(default_principals(2)),
  };
  for (const auto& l : instances) {
    CAPTURE(l->descriptor());
    auto labels = carrier(*l);
    CHECK(labels.size() <= 64);
    LawReport report = check_lattice_laws(*l, labels);
    CHECK(report.exhaustive);
    INFO(report.summary());
    CHECK(report.all_passed());
  }
}

TEST_CASE("nat chain laws on a sampled prefix") {
  auto nat = make_nat_chain();
  std::vector<Label> pool;
  for (std::uint64_t i = 0; i <= 12; ++i) pool.push_back(Label::nat(i));
  LawReport report = check_lattice_laws(*nat, pool);
  INFO(report.summary());
  CHECK(report.all_passed());
}

TEST_CASE("dc labels over three principals: full laws via tables") {
  auto dc = make_dc_labels(default_principals(3));
  auto labels = carrier(*dc, 512);
  CHECK(labels.size() == 361);  // 19 reduced formulas squared
  LawReport report = check_lattice_laws(*dc, labels);
  CHECK(report.exhaustive);
  INFO(report.summary());
  CHECK(report.all_passed());
}

TEST_CASE("a seeded join fault is caught by the coherence law") {
  auto inner = make_powerset(default_principals(3));
  testing::BrokenJoinLattice broken(inner, "p2");
  auto labels = carrier(*inner);
  LawReport report = check_lattice_laws(broken, labels);
  CHECK(!report.all_passed());
  const LawCheck* coherence = report.find("order/join coherence");
  REQUIRE(coherence != nullptr);
  CHECK(!coherence->passed);
  CHECK(!coherence->counterexample.empty());
}

TEST_CASE("truncation is a non-injective homomorphism") {
  auto pow = make_powerset(default_principals(4));
  auto trunc = make_truncated_powerset(2, default_principals(4));
  auto h = [&](const Label& l) {
    return l.atom_set().size() <= 2 ? l : trunc->top();
  };
  HomReport report = check_homomorphism(h, *pow, *trunc, carrier(*pow));
  INFO(report.laws.summary());
  CHECK(report.homomorphism());
  CHECK(!report.injective);
}

TEST_CASE("the identity is an injective homomorphism") {
  auto pow = make_powerset(default_principals(3));
  HomReport report =
      check_homomorphism([](const Label& l) { return l; }, *pow, *pow, carrier(*pow));
  CHECK(report.homomorphism());
  CHECK(report.injective);
}

TEST_CASE("unspecify is not a homomorphism: it moves bot") {
  auto two = make_two_point();
  auto pow = make_powerset({"A", "B"});
  auto h = [&](const Label& l) {
    return l == two->top() ? pow->top() : atoms({"A", "B"});
  };
  HomReport report = check_homomorphism(h, *two, *pow, carrier(*two));
  CHECK(!report.homomorphism());
  const LawCheck* bot = report.laws.find("h(bot) = bot");
  REQUIRE(bot != nullptr);
  CHECK(!bot->passed);
}

TEST_CASE("product joins distribute over components") {
  auto prod = make_product(make_powerset(default_principals(2)), make_nat_chain());
  std::vector<Label> labels;
  for (std::uint64_t i = 0; i < 3; ++i) {
    labels.push_back(Label::pair(atoms({"p1"}), Label::nat(i)));
    labels.push_back(Label::pair(atoms({"p2"}), Label::nat(2 - i)));
  }
  Label joined = join_all(*prod, labels);
  std::vector<Label> lefts, rights;
  for (const auto& l : labels) {
    lefts.push_back(l.first());
    rights.push_back(l.second());
  }
  auto pow = make_powerset(default_principals(2));
  auto nat = make_nat_chain();
  CHECK(joined == Label::pair(join_all(*pow, lefts), join_all(*nat, rights)));
}

TEST_CASE("exponential labels are stored as canonical antichains") {
  auto base = make_discrete(default_principals(3));
  auto exp = std::make_shared<ExponentialLattice>(base);
  // p1 is dominated by top, so it is not kept.
  Label a = exp->make({base->top(), Label::atoms({"p1"})});
  CHECK(a == Label::antichain({base->top()}));

  // Mutually dominating labels have identical representations.
  auto labels = carrier(*exp, 256);
  for (const auto& x : labels) {
    for (const auto& y : labels) {
      if (exp->leq(x, y) && exp->leq(y, x)) CHECK(x == y);
    }
  }
}

TEST_CASE("exponential bottom is the empty antichain, below the singleton bottom") {
  auto base = make_two_point();
  auto exp = make_exponential(base);
  Label empty = exp->bot();
  Label just_bot = Label::antichain({base->bot()});
  CHECK(exp->leq(empty, just_bot));
  CHECK(!exp->leq(just_bot, empty));
}

TEST_CASE("dc join conjoins confidentiality and disjoins integrity") {
  auto dc = make_dc_labels({"A", "B", "C"});
  Label x = dc->parse_label("<A % A>");
  Label y = dc->parse_label("<B % B>");
  Label joined = dc->join(x, y);
  CHECK(joined == dc->parse_label("<A & B % A|B>"));

  // Reduction drops dominated clauses.
  Label z = dc->parse_label("<A & (A|B) % true>");
  CHECK(z == dc->parse_label("<A % true>"));
}

TEST_CASE("dc implication follows the clause-subset rule") {
  Cnf a = {{"A"}};
  Cnf a_or_b = {{"A", "B"}};
  CHECK(cnf_implies(a, a_or_b));
  CHECK(!cnf_implies(a_or_b, a));
  CHECK(cnf_implies(a, {}));           // anything implies true
  CHECK(!cnf_implies({}, a));          // true implies nothing nontrivial
}

TEST_CASE("meet is the greatest lower bound where provided") {
  for (const auto& l : {make_powerset(default_principals(3)),
                        make_truncated_powerset(2, default_principals(3)),
                        LatticePtr(make_two_point()),
                        make_product(make_two_point(), make_powerset(default_principals(2)))}) {
    CAPTURE(l->descriptor());
    REQUIRE(l->has_meet());
    LawReport report = check_lattice_laws(*l, carrier(*l));
    const LawCheck* glb = report.find("meet is greatest lower bound");
    REQUIRE(glb != nullptr);
    CHECK(glb->passed);
  }
}

TEST_CASE("big meet of the empty set is top") {
  auto pow = make_powerset(default_principals(3));
  CHECK(meet_all(*pow, {}) == pow->top());
  auto nat = make_nat_chain();
  CHECK_THROWS_AS(meet_all(*nat, {}), DomainError);  // no top
}

TEST_CASE("canonical order is a strict total order on mixed labels") {
  auto pow = make_powerset(default_principals(2));
  std::vector<Label> labels = carrier(*pow);
  labels.push_back(Label::nat(0));
  labels.push_back(Label::mark(1));
  labels.push_back(Label::pair(Label::nat(1), Label::nat(2)));
  for (const auto& a : labels) {
    for (const auto& b : labels) {
      bool lt = a < b, gt = b < a, eq = a == b;
      CHECK((int(lt) + int(gt) + int(eq)) == 1);
    }
  }
}

TEST_CASE("descriptor round trips") {
  for (const char* d : {"two-point", "nat", "discrete:3", "powerset:4", "trunc:2:4",
                        "product(two-point,nat)", "vsum(two-point,discrete:2)",
                        "hsum(nat,two-point)", "exp(discrete:2)", "dc:3",
                        "product(powerset:2,product(nat,two-point))"}) {
    auto l = parse_lattice(d);
    CHECK(l->descriptor() == d);
    auto again = parse_lattice(l->descriptor());
    CHECK(same_lattice(*l, *again));
  }
  CHECK_THROWS_AS(parse_lattice("octagon:3"), ParseError);
}

TEST_CASE("label parsing round trips through render") {
  for (const char* d : {"two-point", "discrete:3", "powerset:3", "trunc:2:4",
                        "product(two-point,powerset:2)", "vsum(two-point,discrete:2)",
                        "hsum(nat,two-point)", "exp(discrete:2)", "dc:2"}) {
    auto l = parse_lattice(d);
    auto labels = l->enumerate(128);
    if (!labels) continue;
    for (const auto& x : *labels) {
      CAPTURE(l->descriptor());
      CAPTURE(l->render(x));
      CHECK(l->parse_label(l->render(x)) == x);
    }
  }
}
