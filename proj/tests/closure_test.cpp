#include <doctest.h>

#include <random>

#include "mexec/errors.hpp"
#include "mexec/families.hpp"
#include "oracles.hpp"

using namespace mexec;

namespace {

Label one(const char* name) { return Label::atoms({name}); }

std::vector<Label> set_of(std::initializer_list<Label> ls) { return {ls}; }

// Random subsets of an enumerated carrier, for cross-checks.
struct PoolSampler {
  std::vector<Label> pool;
  std::mt19937_64 rng;

  std::vector<Label> draw(std::size_t max_size) {
    std::uniform_int_distribution<std::size_t> count(0, max_size);
    std::uniform_int_distribution<std::size_t> pick(0, pool.size() - 1);
    std::vector<Label> out;
    for (std::size_t i = count(rng); i > 0; --i) out.push_back(pool[pick(rng)]);
    std::sort(out.begin(), out.end());
    out.erase(std::unique(out.begin(), out.end()), out.end());
    return out;
  }
};

}  // namespace

TEST_CASE("closure of the worked powerset example") {
  auto pow = make_powerset({"Alice", "Bob", "Charlie"});
  auto c = closure_bruteforce(*pow, set_of({one("Alice"), one("Charlie")}));
  std::vector<Label> expected = {pow->bot(), one("Alice"),
                                 Label::atoms({"Alice", "Charlie"}), one("Charlie")};
  std::sort(expected.begin(), expected.end());
  CHECK(c == expected);
}

TEST_CASE("closure of three discrete atoms is bot, the atoms, top") {
  auto d = make_discrete({"Alice", "Bob", "Charlie"});
  auto c = closure_bruteforce(*d, set_of({one("Alice"), one("Bob"), one("Charlie")}));
  CHECK(c.size() == 5);
  std::vector<Label> expected = {d->bot(), d->top(), one("Alice"), one("Bob"), one("Charlie")};
  std::sort(expected.begin(), expected.end());
  CHECK(c == expected);
}

TEST_CASE("closure of the empty set is the bottom alone") {
  for (const auto& l : {make_two_point(), make_nat_chain(), make_dc_labels({"A", "B"})}) {
    auto c = closure_bruteforce(*l, {});
    CHECK(c == std::vector<Label>{l->bot()});
  }
}

TEST_CASE("closure refuses oversized inputs with the limit in the message") {
  auto nat = make_nat_chain();
  std::vector<Label> s;
  for (std::uint64_t i = 0; i < 25; ++i) s.push_back(Label::nat(i));
  CHECK_THROWS_WITH_AS(closure_bruteforce(*nat, s), doctest::Contains("20"), LimitError);
}

TEST_CASE("membership by the down-set join matches the closure") {
  auto pow = make_powerset({"A", "B", "C"});
  std::vector<Label> s = set_of({one("A"), one("C")});
  CHECK(in_closure(*pow, Label::atoms({"A", "C"}), s));
  CHECK(!in_closure(*pow, one("B"), s));
  CHECK(in_closure(*pow, pow->bot(), s));
  CHECK(in_closure(*pow, pow->bot(), {}));
}

TEST_CASE("enumerate_closure with the shipped generators") {
  SUBCASE("discrete candidates are S plus the bounds") {
    auto d = make_discrete(default_principals(4));
    std::vector<Label> s = set_of({one("p1"), one("p2")});
    auto c = enumerate_closure(*d, s, default_candidate_generator(*d), true);
    std::vector<Label> expected = {d->bot(), d->top(), one("p1"), one("p2")};
    std::sort(expected.begin(), expected.end());
    CHECK(c == expected);
  }
  SUBCASE("product candidates multiply component closures") {
    auto prod = make_product(make_nat_chain(), make_nat_chain());
    std::vector<Label> s = set_of({Label::pair(Label::nat(0), Label::nat(1)),
                                   Label::pair(Label::nat(1), Label::nat(0))});
    auto c = enumerate_closure(*prod, s, default_candidate_generator(*prod), true);
    CHECK(c.size() == 4);
    CHECK(c == testing::closure_naive(*prod, s));
  }
  SUBCASE("truncated powerset candidates are the small support subsets") {
    auto t = make_truncated_powerset(2, default_principals(6));
    PoolSampler sampler{*t->enumerate(64), std::mt19937_64(21)};
    for (int i = 0; i < 100; ++i) {
      auto s = sampler.draw(6);
      auto c = enumerate_closure(*t, s, default_candidate_generator(*t), true);
      CHECK(c == testing::closure_naive(*t, s));
    }
  }
}

TEST_CASE("an unsound generator is reported with the missing label") {
  auto pow = make_powerset({"A", "B"});
  CandidateGenerator hollow{"hollow", "forgets joins", false,
                            [](const Lattice&, std::span<const Label> s) {
                              return std::vector<Label>(s.begin(), s.end());
                            }};
  std::vector<Label> s = set_of({one("A"), one("B")});
  CHECK_THROWS_AS(enumerate_closure(*pow, s, hollow, true), InternalError);
}

TEST_CASE("oracle agreement across every family") {
  std::vector<LatticePtr> lattices = {
      make_two_point(),
      make_discrete(default_principals(5)),
      make_powerset(default_principals(4)),
      make_truncated_powerset(2, default_principals(5)),
      make_product(make_two_point(), make_powerset(default_principals(2))),
      make_vsum(make_discrete(default_principals(2)), make_two_point()),
      make_hsum(make_two_point(), make_discrete(default_principals(2))),
      make_exponential(make_discrete(default_principals(2))),
      make_dc_labels(default_principals(2)),
  };
  // Nat chains have no finite carrier; use an explicit pool.
  std::vector<Label> nat_pool;
  for (std::uint64_t i = 0; i <= 10; ++i) nat_pool.push_back(Label::nat(i));

  auto check_lattice = [](const Lattice& l, std::vector<Label> pool, std::uint64_t seed) {
    PoolSampler sampler{std::move(pool), std::mt19937_64(seed)};
    CandidateGenerator gen = default_candidate_generator(l);
    for (int trial = 0; trial < 60; ++trial) {
      std::vector<Label> s = sampler.draw(8);
      std::vector<Label> oracle = testing::closure_naive(l, s);
      CHECK(closure_bruteforce(l, s) == oracle);
      CHECK(enumerate_closure(l, s, gen) == oracle);
      CHECK(oracle.size() <= (std::size_t(1) << s.size()));
      for (const Label& candidate : sampler.pool) {
        bool in_oracle = std::binary_search(oracle.begin(), oracle.end(), candidate);
        CHECK(in_closure(l, candidate, s) == in_oracle);
      }
      // Up-set membership against the definitional scan, for every level
      // of the closure and every pool label.
      for (const Label& level : oracle) {
        for (const Label& candidate : sampler.pool) {
          CHECK(upset_contains(l, candidate, level, s) ==
                testing::upset_definitional(l, candidate, level, oracle));
        }
      }
    }
  };

  std::uint64_t seed = 40;
  for (const auto& l : lattices) {
    CAPTURE(l->descriptor());
    check_lattice(*l, *l->enumerate(512), seed++);
  }
  check_lattice(*make_nat_chain(), nat_pool, seed);
}

TEST_CASE("the worked up-set example from the three-principal lattice") {
  auto pow = make_powerset({"Alice", "Bob", "Charlie"});
  std::vector<Label> s = set_of({one("Alice"), one("Charlie")});
  CHECK(upset_contains(*pow, Label::atoms({"Alice", "Bob"}), one("Alice"), s));
  CHECK(upset_contains(*pow, one("Alice"), one("Alice"), s, true));
  CHECK(!upset_contains(*pow, Label::atoms({"Alice", "Charlie"}), one("Alice"), s));
}

TEST_CASE("up-set validation rejects levels outside the closure") {
  auto pow = make_powerset({"Alice", "Bob"});
  std::vector<Label> s = set_of({one("Alice")});
  CHECK_THROWS_AS(upset_contains(*pow, pow->top(), one("Bob"), s, true), InternalError);
}

TEST_CASE("closure-size profile reproduces the known tables") {
  SUBCASE("naturals: n+1") {
    auto nat = make_nat_chain();
    std::vector<Label> pool;
    for (std::uint64_t i = 0; i <= 8; ++i) pool.push_back(Label::nat(i));
    ClosureProfile p = closure_size_profile(*nat, 4, pool);
    for (std::size_t n = 0; n <= 4; ++n) CHECK(p.rows[n].closure_size == n + 1);
    CHECK(p.rows[4].witness.size() == 4);
  }
  SUBCASE("discrete atoms: n+2 once two atoms meet") {
    auto d = make_discrete(default_principals(6));
    auto pool = *d->enumerate(16);
    ClosureProfile p = closure_size_profile(*d, 3, pool);
    CHECK(p.rows[3].closure_size == 5);
  }
  SUBCASE("powerset: 2^n") {
    auto pow = make_powerset(default_principals(4));
    auto pool = *pow->enumerate(16);
    ClosureProfile p = closure_size_profile(*pow, 4, pool);
    for (std::size_t n = 0; n <= 4; ++n) {
      CHECK(p.rows[n].closure_size == (std::size_t(1) << n));
    }
  }
}

TEST_CASE("profile rows never decrease and witnesses attain them") {
  auto t = make_truncated_powerset(2, default_principals(4));
  auto pool = *t->enumerate(16);
  ClosureProfile p = closure_size_profile(*t, 4, pool);
  for (std::size_t n = 1; n < p.rows.size(); ++n) {
    CHECK(p.rows[n].closure_size >= p.rows[n - 1].closure_size);
    CHECK(p.rows[n].witness.size() <= n);
    CHECK(testing::closure_naive(*t, p.rows[n].witness).size() == p.rows[n].closure_size);
  }
}

TEST_CASE("profile refuses oversized pools") {
  auto nat = make_nat_chain();
  std::vector<Label> pool;
  for (std::uint64_t i = 0; i < 30; ++i) pool.push_back(Label::nat(i));
  CHECK_THROWS_AS(closure_size_profile(*nat, 4, pool), LimitError);
  std::vector<Label> small(pool.begin(), pool.begin() + 5);
  CHECK_THROWS_AS(closure_size_profile(*nat, 9, small), LimitError);
}

TEST_CASE("profile CSV shape") {
  auto nat = make_nat_chain();
  std::vector<Label> pool;
  for (std::uint64_t i = 0; i <= 4; ++i) pool.push_back(Label::nat(i));
  std::string csv = to_csv(*nat, closure_size_profile(*nat, 2, pool));
  CHECK(csv.starts_with("n,cs,witness\n0,1,\"\"\n1,2,"));
}

TEST_CASE("omega families attain their closure growth") {
  SUBCASE("powerset singletons double") {
    for (std::size_t n : {0, 1, 3, 5}) {
      OmegaFamily f = omega_family("powerset-singletons", n);
      CHECK(f.labels.size() == n);
      CHECK(testing::closure_naive(*f.lattice, f.labels).size() == (std::size_t(1) << n));
    }
  }
  SUBCASE("discrete atoms add two") {
    for (std::size_t n : {2, 4, 6}) {
      OmegaFamily f = omega_family("discrete-atoms", n);
      CHECK(testing::closure_naive(*f.lattice, f.labels).size() == n + 2);
    }
  }
  SUBCASE("the L-shape fills its square") {
    OmegaFamily f = omega_family("natchain2-L", 10);
    CHECK(f.labels.size() <= 10);
    CHECK(testing::closure_naive(*f.lattice, f.labels).size() == 25);
  }
  SUBCASE("exponential singleton antichains double") {
    for (std::size_t n : {1, 4}) {
      OmegaFamily f = omega_family("exponential-singletons", n);
      CHECK(f.labels.size() == n);
      CHECK(testing::closure_naive(*f.lattice, f.labels).size() == (std::size_t(1) << n));
    }
  }
  CHECK_THROWS_AS(omega_family("mystery", 3), DomainError);
}

TEST_CASE("truncated singleton closures sit inside the binomial window") {
  const std::size_t k = 2;
  for (std::size_t n : {1, 3, 5, 8, 12}) {
    auto t = make_truncated_powerset(k, default_principals(n));
    std::vector<Label> singles;
    for (const auto& a : default_principals(n)) singles.push_back(one(a.c_str()));
    std::size_t count = compute_closure(*t, singles).size();
    // lower: n^k / k^k; upper: 1 + sum_{i<=k} n^i
    std::size_t lower = (n * n) / (k * k);
    std::size_t upper = 1 + 1 + n + n * n;
    CHECK(count >= lower);
    CHECK(count <= upper);
  }
}
