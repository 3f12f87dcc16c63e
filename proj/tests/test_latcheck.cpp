#include <catch_amalgamated.hpp>

#include <random>
#include <sstream>

#include "varlat/error.hpp"
#include "varlat/latcheck.hpp"
#include "varlat/text.hpp"

using namespace varlat;
using Elem = FiniteLattice::Elem;

namespace {

  // Operation tables written out by hand. N5: 0 < a < b < 1 with c beside
  // the chain; M3: three atoms p, q, r. Element order 0, a, b, c, 1 and
  // 0, p, q, r, 1.
  struct HandLattice {
    std::vector<std::vector<Elem>> join, meet;
  };

  HandLattice const n5{{{0, 1, 2, 3, 4},
                        {1, 1, 2, 4, 4},
                        {2, 2, 2, 4, 4},
                        {3, 4, 4, 3, 4},
                        {4, 4, 4, 4, 4}},
                       {{0, 0, 0, 0, 0},
                        {0, 1, 1, 0, 1},
                        {0, 1, 2, 0, 2},
                        {0, 0, 0, 3, 3},
                        {0, 1, 2, 3, 4}}};

  HandLattice const m3{{{0, 1, 2, 3, 4},
                        {1, 1, 4, 4, 4},
                        {2, 4, 2, 4, 4},
                        {3, 4, 4, 3, 4},
                        {4, 4, 4, 4, 4}},
                       {{0, 0, 0, 0, 0},
                        {0, 1, 0, 0, 1},
                        {0, 0, 2, 0, 2},
                        {0, 0, 0, 3, 3},
                        {0, 1, 2, 3, 4}}};

  FiniteLattice from_hand(HandLattice const& h) {
    std::size_t const         n = h.join.size();
    std::vector<std::uint8_t> leq(n * n);
    for (std::size_t a = 0; a < n; ++a) {
      for (std::size_t b = 0; b < n; ++b) {
        leq[a * n + b] = h.join[a][b] == b;
      }
    }
    return FiniteLattice::build(n, std::move(leq));
  }

  // Direct reading of the definitions on the hand tables.
  bool hand_property(HandLattice const& h, Elem x, ElementKind k) {
    auto J = [&](Elem a, Elem b) { return h.join[a][b]; };
    auto M = [&](Elem a, Elem b) { return h.meet[a][b]; };
    auto le = [&](Elem a, Elem b) { return J(a, b) == b; };
    Elem const n = static_cast<Elem>(h.join.size());
    for (Elem y = 0; y < n; ++y) {
      for (Elem z = 0; z < n; ++z) {
        bool ok = true;
        switch (k) {
          case ElementKind::distributive: ok = J(x, M(y, z)) == M(J(x, y), J(x, z)); break;
          case ElementKind::codistributive: ok = M(x, J(y, z)) == J(M(x, y), M(x, z)); break;
          case ElementKind::standard: ok = M(J(x, y), z) == J(M(x, z), M(y, z)); break;
          case ElementKind::costandard: ok = J(M(x, y), z) == M(J(x, z), J(y, z)); break;
          case ElementKind::modular: ok = !le(y, z) || M(J(x, y), z) == J(M(x, z), y); break;
          case ElementKind::upper_modular: ok = !le(y, x) || M(x, J(y, z)) == J(y, M(x, z)); break;
          case ElementKind::lower_modular: ok = !le(x, y) || J(x, M(y, z)) == M(y, J(x, z)); break;
          case ElementKind::neutral:
            ok = J(J(M(x, y), M(y, z)), M(z, x)) == M(M(J(x, y), J(y, z)), J(z, x));
            break;
        }
        if (!ok) {
          return false;
        }
      }
    }
    return true;
  }

  FiniteLattice bowtie_free_square() {
    return product(chain(2), chain(2));
  }

  bool same_lattice(FiniteLattice const& a, FiniteLattice const& b) {
    return a.size() == b.size() && a.order() == b.order();
  }

}  // namespace

TEST_CASE("build") {
  CHECK(chain(2).size() == 2);
  CHECK_NOTHROW(from_hand(n5));
  // Bowtie: two minimal and two maximal elements, each lower below each upper.
  std::vector<std::uint8_t> bow{1, 0, 1, 1, 0, 1, 1, 1, 0, 0, 1, 0, 0, 0, 0, 1};
  CHECK_THROWS_AS(FiniteLattice::build(4, bow), NotALattice);
  try {
    FiniteLattice::build(4, bow);
  } catch (NotALattice const& e) {
    auto const [a, b] = e.witness();
    CHECK(a != b);
  }
  CHECK_THROWS_AS(FiniteLattice::build(2, {1, 1, 1, 1}), std::invalid_argument);
  CHECK_THROWS_AS(FiniteLattice::build(2, {0, 0, 0, 1}), std::invalid_argument);
  CHECK_THROWS_AS(FiniteLattice::build(3, {1, 1, 0, 0, 1, 1, 0, 0, 1}), std::invalid_argument);
  auto const sq = bowtie_free_square();
  CHECK(sq.size() == 4);
  CHECK(sq.bottom() == 0);
  CHECK(sq.top() == 3);
  CHECK(sq.join(1, 2) == 3);
  CHECK(sq.meet(1, 2) == 0);
}

TEST_CASE("N5 and M3 match the hand tables") {
  for (auto const* h : {&n5, &m3}) {
    auto const l = from_hand(*h);
    for (Elem a = 0; a < 5; ++a) {
      for (Elem b = 0; b < 5; ++b) {
        REQUIRE(l.join(a, b) == h->join[a][b]);
        REQUIRE(l.meet(a, b) == h->meet[a][b]);
      }
    }
    for (Elem x = 0; x < 5; ++x) {
      for (auto k : all_element_kinds()) {
        INFO(to_string(k) << " at " << x);
        REQUIRE(has_property(l, x, k) == hand_property(*h, x, k));
        REQUIRE(find_witness(l, x, k).has_value() == !has_property(l, x, k));
      }
    }
  }
  auto const l5 = from_hand(n5);
  auto const l3 = from_hand(m3);
  CHECK_FALSE(is_distributive(l5));
  CHECK_FALSE(is_distributive(l3));
  for (Elem x : {1u, 2u, 3u}) {
    CHECK_FALSE(has_property(l5, x, ElementKind::neutral));
    CHECK_FALSE(has_property(l3, x, ElementKind::neutral));
    CHECK_FALSE(has_property(l3, x, ElementKind::distributive));
    CHECK(has_property(l3, x, ElementKind::modular));
  }
  // The atom p of M3: p v (q ^ r) = p but (p v q) ^ (p v r) = 1.
  auto const w = find_witness(l3, 1, ElementKind::distributive);
  REQUIRE(w);
  CHECK(l3.join(1, l3.meet(w->first, w->second))
        != l3.meet(l3.join(1, w->first), l3.join(1, w->second)));
}

TEST_CASE("chains and bounds") {
  for (std::size_t n = 1; n <= 6; ++n) {
    auto const c = chain(n);
    CHECK(is_distributive(c));
    for (Elem x = 0; x < n; ++x) {
      for (auto k : all_element_kinds()) {
        CHECK(has_property(c, x, k));
        CHECK_FALSE(find_witness(c, x, k).has_value());
      }
    }
  }
  for (auto const& l : all_lattices(5)) {
    CHECK(has_property(l, l.bottom(), ElementKind::neutral));
    CHECK(has_property(l, l.top(), ElementKind::neutral));
  }
}

TEST_CASE("lattice enumeration covers each isomorphism type") {
  std::size_t const expected[] = {0, 1, 1, 1, 2, 5, 15};
  for (std::size_t n = 1; n <= 6; ++n) {
    std::vector<FiniteLattice> types;
    for (auto const& l : all_lattices(n)) {
      bool seen = false;
      for (auto const& t : types) {
        seen = seen || find_isomorphism(l, t).has_value();
      }
      if (!seen) {
        types.push_back(l);
      }
    }
    CHECK(types.size() == expected[n]);
  }
}

namespace {

  void check_implications(FiniteLattice const& l) {
    auto has = [&](Elem x, ElementKind k) { return has_property(l, x, k); };
    for (Elem x = 0; x < l.size(); ++x) {
      using K = ElementKind;
      if (has(x, K::neutral)) {
        REQUIRE(has(x, K::standard));
        REQUIRE(has(x, K::costandard));
      }
      if (has(x, K::standard)) {
        REQUIRE(has(x, K::modular));
        REQUIRE(has(x, K::distributive));
      }
      if (has(x, K::costandard)) {
        REQUIRE(has(x, K::modular));
        REQUIRE(has(x, K::codistributive));
      }
      if (has(x, K::distributive)) {
        REQUIRE(has(x, K::lower_modular));
      }
      if (has(x, K::codistributive)) {
        REQUIRE(has(x, K::upper_modular));
      }
      REQUIRE(has(x, K::neutral) == neutral_by_median(l, x));
    }
  }

}  // namespace

TEST_CASE("implications between kinds on all small lattices") {
  for (std::size_t n = 1; n <= 6; ++n) {
    for (auto const& l : all_lattices(n)) {
      check_implications(l);
    }
  }
}

TEST_CASE("implications between kinds on random lattices") {
  std::mt19937_64 rng(41);
  for (int trial = 0; trial < 150; ++trial) {
    std::size_t const n = std::uniform_int_distribution<std::size_t>(1, 8)(rng);
    check_implications(random_lattice(n, rng));
  }
}

TEST_CASE("duality") {
  using K = ElementKind;
  std::pair<K, K> const pairs[] = {{K::codistributive, K::distributive},
                                   {K::costandard, K::standard},
                                   {K::upper_modular, K::lower_modular},
                                   {K::neutral, K::neutral},
                                   {K::modular, K::modular}};
  for (std::size_t n = 1; n <= 6; ++n) {
    for (auto const& l : all_lattices(n)) {
      auto const d = dual(l);
      REQUIRE(same_lattice(dual(d), l));
      for (Elem x = 0; x < l.size(); ++x) {
        for (auto [co, plain] : pairs) {
          REQUIRE(has_property(l, x, co) == has_property(d, x, plain));
        }
      }
    }
  }
}

TEST_CASE("parallel and serial witnesses agree") {
  std::mt19937_64 rng(42);
  for (int trial = 0; trial < 100; ++trial) {
    auto const l = random_lattice(std::uniform_int_distribution<std::size_t>(3, 8)(rng), rng);
    for (Elem x = 0; x < l.size(); ++x) {
      for (auto k : all_element_kinds()) {
        REQUIRE(find_witness(l, x, k) == serial::find_witness(l, x, k));
      }
    }
  }
}

TEST_CASE("random lattices are deterministic in the seed") {
  std::mt19937_64 a(5), b(5);
  for (int i = 0; i < 20; ++i) {
    REQUIRE(same_lattice(random_lattice(7, a), random_lattice(7, b)));
  }
}

TEST_CASE("products are componentwise") {
  CHECK(find_isomorphism(product(chain(2), chain(2)), from_hand(m3)) == std::nullopt);
  std::vector<FiniteLattice> small;
  for (std::size_t n = 1; n <= 4; ++n) {
    for (auto& l : all_lattices(n)) {
      small.push_back(l);
    }
  }
  small.push_back(from_hand(n5));
  for (auto const& a : small) {
    for (auto const& b : {chain(2), chain(3), from_hand(n5)}) {
      if (a.size() * b.size() > 16) {
        continue;
      }
      auto const p = product(a, b);
      for (Elem x = 0; x < p.size(); ++x) {
        for (auto k : all_element_kinds()) {
          bool const expected = has_property(a, x / static_cast<Elem>(b.size()), k)
                                && has_property(b, x % static_cast<Elem>(b.size()), k);
          REQUIRE(has_property(p, x, k) == expected);
        }
      }
    }
  }
}

TEST_CASE("isomorphisms") {
  auto const sq = product(chain(2), chain(2));
  auto const iso = find_isomorphism(sq, dual(sq));
  REQUIRE(iso);
  for (Elem a = 0; a < 4; ++a) {
    for (Elem b = 0; b < 4; ++b) {
      CHECK(sq.leq(a, b) == dual(sq).leq((*iso)[a], (*iso)[b]));
    }
  }
  CHECK_FALSE(find_isomorphism(from_hand(n5), from_hand(m3)));
  CHECK_FALSE(find_isomorphism(chain(3), chain(4)));
}

TEST_CASE("generated sublattices of varieties") {
  auto const one = generate_sublattice({trivial_variety()}, 10);
  CHECK(one.lattice.size() == 1);

  auto const sq = generate_sublattice({parse_variety("G(2)"), parse_variety("G(3)")}, 10);
  CHECK(sq.lattice.size() == 4);
  CHECK(find_isomorphism(sq.lattice, product(chain(2), chain(2))));
  CHECK(sq.lattice.label(sq.lattice.top()) == "G(6) + C(0) + T");
  CHECK(sq.lattice.label(sq.lattice.bottom()) == "G(1) + C(0) + T");

  auto const g = generate_sublattice(
      {semilattices(), parse_variety("C(2)"), parse_variety("K_3")}, 64);
  CHECK(g.lattice.label(g.lattice.bottom()) == "G(1) + C(0) + T");
  CHECK(is_distributive(g.lattice));
  for (Elem x = 0; x < g.lattice.size(); ++x) {
    if (classify(g.elements[x]).upper_modular) {
      CHECK(has_property(g.lattice, x, ElementKind::upper_modular));
    }
  }

  CHECK_THROWS_AS(generate_sublattice({parse_variety("G(2)"), parse_variety("G(3)")}, 3),
                  CapExceeded);
  CHECK_THROWS_AS(generate_sublattice({parse_variety("G(2) + I")}, 10), NonCanonical);
}

TEST_CASE("the catalog truncation is distributive") {
  std::vector<VarietyDesc> seeds;
  for (auto const& e : catalog_elements(7)) {
    seeds.push_back(VarietyDesc::composite(1, 0, e));
  }
  auto const g = generate_sublattice(seeds, 512);
  CHECK(g.lattice.size() == seeds.size());
  CHECK(is_distributive(g.lattice));
}

TEST_CASE("text formats") {
  auto const         l = from_hand(n5);
  std::istringstream in("# N5\n" + write_order(l));
  CHECK(same_lattice(read_order(in), l));
  std::istringstream bad("2\n1 1\n");
  CHECK_THROWS_AS(read_order(bad), SyntaxError);
  std::istringstream bad2("2\n1 2\n0 1\n");
  CHECK_THROWS_AS(read_order(bad2), SyntaxError);

  auto const dot = to_dot(chain(3), "c3");
  CHECK(dot.find("digraph c3 {") == 0);
  CHECK(dot.find("n0 -> n1;") != std::string::npos);
  CHECK(dot.find("n1 -> n2;") != std::string::npos);
  CHECK(dot.find("n0 -> n2;") == std::string::npos);

  CHECK(parse_element_kind("upper-modular") == ElementKind::upper_modular);
  CHECK_FALSE(parse_element_kind("upper_modular"));
  for (auto k : all_element_kinds()) {
    CHECK(parse_element_kind(to_string(k)) == k);
  }
}
