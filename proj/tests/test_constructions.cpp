#include <doctest.h>

#include "balg/canonical.hpp"
#include "balg/constructions.hpp"
#include "balg/laws.hpp"
#include "fixtures.hpp"

using namespace balg;
using namespace balg::test;

TEST_CASE("groupoid of the 2-chain algebra is the Boolean meet groupoid") {
  LeftResiduatedGroupoid g = groupoid_of_basic(lukasiewicz_basic(2));
  CHECK(g.mult == table_from({{0, 0}, {0, 1}}));
  CHECK(g.res == table_from({{1, 0}, {1, 1}}));
}

TEST_CASE("groupoid of the 3-chain: truncated operations in index form") {
  LeftResiduatedGroupoid g = groupoid_of_basic(lukasiewicz_basic(3));
  for (int x = 0; x < 3; ++x)
    for (int y = 0; y < 3; ++y) {
      CHECK(g.mult(x, y) == std::max(0, x + y - 2));
      CHECK(g.res(x, y) == std::min(2, x - y + 2));
    }
}

TEST_CASE("groupoid of the MO2 algebra multiplies by (x v perp(y)) ^ y") {
  LeftResiduatedGroupoid g = groupoid_of_basic(mo2_basic());
  BoundedLattice l = lattice_of(mo2_poset());
  const auto perp = mo2_perp();
  for (int x = 0; x < 6; ++x)
    for (int y = 0; y < 6; ++y)
      CHECK(g.mult(x, y) == l.meet(l.join(x, perp[y]), y));
}

TEST_CASE("the candidate tables of a div+jk groupoid reconstruct the algebra") {
  for (const auto& a : {lukasiewicz_basic(3), lukasiewicz_basic(4), mo2_basic()}) {
    BasicTables t = basic_of_groupoid(groupoid_of_basic(a));
    CHECK(t.oplus == a.oplus);
    CHECK(t.neg == a.neg);
  }
}

TEST_CASE("2-chain meet groupoid reconstructs the 2-element algebra") {
  Table mult = table_from({{0, 0}, {0, 1}});
  Table res = table_from({{1, 0}, {1, 1}});
  auto g = validate_lrpg(chain_poset(2), mult, res);
  REQUIRE(g.ok());
  BasicTables t = basic_of_groupoid(g.value());
  CHECK(t.oplus == lukasiewicz_basic(2).oplus);
  CHECK(t.neg == lukasiewicz_basic(2).neg);
}

TEST_CASE("filter involutions on MO2 give the orthomodular addition") {
  auto a = basic_from_filter_involutions(mo2_filter_family());
  REQUIRE(a.ok());
  CHECK(a.value().oplus == mo2_basic().oplus);
  CHECK(a.value().neg == mo2_basic().neg);
}

TEST_CASE("filter route rejects an ideal family") {
  auto d = dualize_involution_family(mo2_filter_family());
  REQUIRE(d.ok());
  auto a = basic_from_filter_involutions(d.value());
  REQUIRE_FALSE(a.ok());
  CHECK(a.error().code == "KindMismatch");
}

TEST_CASE("2-chain involutions give the 2-element algebra, both routes") {
  SectionInvolutionFamily f;
  f.lattice = lattice_of(chain_poset(2));
  f.kind = SectionKind::Filters;
  f.maps = {{1, 0}, {-1, 1}};
  auto a = basic_from_filter_involutions(f);
  REQUIRE(a.ok());
  CHECK(a.value().oplus == lukasiewicz_basic(2).oplus);

  auto dual = dualize_involution_family(f);
  REQUIRE(dual.ok());
  auto b = basic_from_ideal_involutions(dual.value());
  REQUIRE(b.ok());
  CHECK(b.value().oplus == a.value().oplus);
}

TEST_CASE("order-reversal involutions on the 4-chain give the 4-element MV chain") {
  SectionInvolutionFamily f;
  f.lattice = lattice_of(chain_poset(4));
  f.kind = SectionKind::Filters;
  f.maps.assign(4, std::vector<int>(4, -1));
  for (int a = 0; a < 4; ++a)
    for (int x = a; x < 4; ++x) f.maps[a][x] = 3 - x + a;
  auto a = basic_from_filter_involutions(f);
  REQUIRE(a.ok());
  CHECK(a.value().oplus == lukasiewicz_basic(4).oplus);
  CHECK(a.value().neg == lukasiewicz_basic(4).neg);
}

TEST_CASE("ideal involutions delta_a(x) = a-x on the 3-chain give the 3-element MV chain") {
  SectionInvolutionFamily f;
  f.lattice = lattice_of(chain_poset(3));
  f.kind = SectionKind::Ideals;
  f.maps.assign(3, std::vector<int>(3, -1));
  for (int a = 0; a < 3; ++a)
    for (int x = 0; x <= a; ++x) f.maps[a][x] = a - x;
  auto a = basic_from_ideal_involutions(f);
  REQUIRE(a.ok());
  CHECK(a.value().oplus == lukasiewicz_basic(3).oplus);
}

TEST_CASE("filter and ideal routes agree through dualization") {
  for (const auto& f : {mo2_filter_family()}) {
    auto via_filters = basic_from_filter_involutions(f);
    auto dual = dualize_involution_family(f);
    REQUIRE(dual.ok());
    auto via_ideals = basic_from_ideal_involutions(dual.value());
    REQUIRE(via_filters.ok());
    REQUIRE(via_ideals.ok());
    CHECK(via_filters.value().oplus == via_ideals.value().oplus);
    CHECK(via_filters.value().neg == via_ideals.value().neg);
  }
}

TEST_CASE("orthomodular lattices become basic algebras") {
  auto o = make_ortholattice(lattice_of(mo2_poset()), mo2_perp());
  REQUIRE(o.ok());
  auto a = basic_from_oml(o.value());
  REQUIRE(a.ok());
  CHECK(a.value().oplus == mo2_basic().oplus);

  // the quasi-equation x <= y => y + x = y at every comparable pair
  BoundedLattice l = basic_induced_order(a.value());
  int comparable = 0;
  for (int x = 0; x < 6; ++x)
    for (int y = 0; y < 6; ++y)
      if (l.poset.le(x, y)) {
        ++comparable;
        CHECK(a.value().oplus(y, x) == y);
      }
  CHECK(comparable == 15);
}

TEST_CASE("on a Boolean algebra the constructed addition is the join") {
  auto o = make_ortholattice(lattice_of(diamond_poset()), {3, 2, 1, 0});
  REQUIRE(o.ok());
  auto a = basic_from_oml(o.value());
  REQUIRE(a.ok());
  CHECK(a.value().oplus == lattice_of(diamond_poset()).join);
}

TEST_CASE("the benzene ring is rejected as not orthomodular") {
  auto o = make_ortholattice(lattice_of(o6_poset()), o6_perp());
  REQUIRE(o.ok());
  CHECK_FALSE(o.value().orthomodular);
  auto a = basic_from_oml(o.value());
  REQUIRE_FALSE(a.ok());
  CHECK(a.error().code == "NotOrthomodular");
}

TEST_CASE("conversion to contrapositional form and back is the identity") {
  for (const auto& g : {groupoid_of_basic(lukasiewicz_basic(3)),
                        groupoid_of_basic(mo2_basic()), example1_lrpg(),
                        kite_dneg_lrpg()}) {
    auto c = cpg_from_lrpg(g);
    REQUIRE(c.ok());
    LeftResiduatedGroupoid back = lrpg_from_cpg(c.value());
    CHECK(back.mult == g.mult);
    CHECK(back.res == g.res);
  }
}

TEST_CASE("conversion of the Lukasiewicz groupoid matches the fixture cpg") {
  auto c = cpg_from_lrpg(groupoid_of_basic(lukasiewicz_basic(3)));
  REQUIRE(c.ok());
  CHECK(c.value().imp == l3_cpg().imp);
  CHECK(c.value().mult == l3_cpg().mult);
}

TEST_CASE("the Heyting 3-chain is rejected for double negation") {
  auto c = cpg_from_lrpg(heyting3_lrpg());
  REQUIRE_FALSE(c.ok());
  CHECK(c.error().code == "DoubleNegationFails");
  CHECK(c.error().witness == std::vector<int>{1});
}

TEST_CASE("cpg round trip starting from a contrapositional groupoid") {
  RoundtripReport rep = roundtrip_check(l3_cpg());
  CHECK(rep.kind == RoundtripReport::Kind::Contrapositional);
  CHECK(rep.ok());
}

TEST_CASE("round trip reports for basic algebras") {
  for (const auto& a : {lukasiewicz_basic(2), lukasiewicz_basic(3), lukasiewicz_basic(4),
                        boolean4_basic(), mo2_basic()}) {
    RoundtripReport rep = roundtrip_check(a);
    CHECK(rep.div_jk_hypotheses);
    CHECK(rep.dneg_w_hypotheses);
    CHECK(rep.roundtrip_identity);
    CHECK(rep.ok());
  }
}

TEST_CASE("round trip report for a div+jk groupoid") {
  RoundtripReport rep = roundtrip_check(groupoid_of_basic(lukasiewicz_basic(3)));
  CHECK(rep.div_jk_hypotheses);
  CHECK(rep.dneg_w_hypotheses);
  CHECK(rep.basic_candidate_valid);
  CHECK(rep.roundtrip_identity);
  CHECK(rep.order_coincides);
}

TEST_CASE("the bundled groupoid fails both theorems' hypotheses") {
  RoundtripReport rep = roundtrip_check(example1_lrpg());
  CHECK_FALSE(rep.div_jk_hypotheses);
  CHECK_FALSE(rep.dneg_w_hypotheses);
  REQUIRE(rep.div_jk_failure.has_value());
  CHECK(rep.div_jk_failure->detail.find("jk") != std::string::npos);
  CHECK_FALSE(rep.ok());
}

TEST_CASE("G(A) always satisfies div, jk, dneg and w") {
  for (const auto& a : {lukasiewicz_basic(4), mo2_basic(), boolean4_basic()}) {
    ModelOps ops = ops_for(groupoid_of_basic(a));
    for (const char* name : {"div", "jk", "dneg", "w"}) {
      auto v = check_formula(catalog_law(name).value(), ops);
      REQUIRE(v.ok());
      INFO(name);
      CHECK(v.value().holds);
    }
  }
}
