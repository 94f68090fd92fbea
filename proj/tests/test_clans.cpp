#include <doctest.h>

#include <algorithm>

#include "cjs/clans.hpp"
#include "cjs/decider.hpp"
#include "cjs/examples.hpp"
#include "schema_oracle.hpp"

using namespace cjs;

namespace {

Mask mask_of(const FiniteJoinStructure& s, const std::vector<std::string>& names) {
    Mask m = 0;
    for (const auto& n : names) m |= Mask{1} << s.index_of(n);
    return m;
}

FiniteJoinStructure two_element(bool top_self_contact) {
    StructureDescription d;
    d.elements = {"0", "1"};
    d.zero = "0";
    d.one = "1";
    d.join = {{"0", "1", "1"}};
    if (top_self_contact) d.contact = {{"1", "1"}};
    return FiniteJoinStructure::validate(d);
}

}  // namespace

TEST_CASE("presentations of the top of powerset {1,2}") {
    const FiniteJoinStructure s = powerset_cjs({"1", "2"});
    const auto pres = presentations(s, s.one());
    CHECK(pres.size() == 5);
    for (const auto& p : pres) {
        CHECK(s.join_all(p.summands) == s.one());
        for (int e : p.summands) CHECK(e != s.zero());
    }
}

TEST_CASE("presentations of zero") {
    const FiniteJoinStructure s = powerset_cjs({"1", "2"});
    const auto pres = presentations(s, s.zero());
    REQUIRE(pres.size() == 1);
    CHECK(pres[0].summands == std::vector<int>{s.zero()});
}

TEST_CASE("presentations of the top of a chain contain the top") {
    StructureDescription d;
    d.elements = {"0", "c", "1"};
    d.zero = "0";
    d.one = "1";
    d.join = {{"0", "c", "c"}, {"0", "1", "1"}, {"c", "1", "1"}};
    const FiniteJoinStructure s = FiniteJoinStructure::validate(d);
    const auto pres = presentations(s, s.one());
    CHECK(pres.size() == 2);  // {1} and {c,1}
    for (const auto& p : pres)
        CHECK(std::find(p.summands.begin(), p.summands.end(), s.one()) != p.summands.end());
}

TEST_CASE("solve_choice_system picks compatible summands") {
    const FiniteJoinStructure s = powerset_cjs({"1", "2"});
    const int p1 = s.index_of("{1}");
    SUBCASE("single forced pick") {
        Presentation p{p1, {p1}};
        const auto choice = solve_choice_system(s, {{p}});
        REQUIRE(choice.has_value());
        CHECK(*choice == std::vector<int>{p1});
    }
    SUBCASE("full system of x={1}, y={1,2} stays inside sets containing 1") {
        std::vector<std::vector<Presentation>> groups;
        for (int e : {s.index_of("{1}"), s.index_of("{1,2}")}) {
            std::vector<Presentation> group;
            for (int ub = 0; ub < s.size(); ++ub)
                if (s.leq(e, ub))
                    for (const auto& p : presentations(s, ub)) group.push_back(p);
            groups.push_back(std::move(group));
        }
        const auto choice = solve_choice_system(s, groups);
        REQUIRE(choice.has_value());
        for (int picked : *choice)
            CHECK((picked == s.index_of("{1}") || picked == s.index_of("{1,2}")));
    }
    SUBCASE("not-below constraint can be unsatisfiable") {
        Presentation p{p1, {p1}};
        CHECK(!solve_choice_system(s, {{p}}, ChoiceConstraint::not_below(s.one())).has_value());
    }
}

TEST_CASE("schema checks") {
    SUBCASE("fixture passes both") {
        const FiniteJoinStructure s = fixture_pr2nn();
        CHECK(check_schema_A1(s).pass);
        CHECK(check_schema_A(s).pass);
    }
    SUBCASE("empty contact fails (15) with witness (1, 0)") {
        const FiniteJoinStructure s = two_element(false);
        const SchemaResult r = check_schema_A(s);
        REQUIRE(!r.pass);
        CHECK(s.name(r.a) == "1");
        CHECK(s.name(r.b) == "0");
        CHECK(check_schema_A1(s).pass);  // no contact pairs to check
    }
    SUBCASE("precondition (9)-(10) is enforced") {
        StructureDescription d;
        d.elements = {"0", "1"};
        d.zero = "0";
        d.one = "1";
        d.join = {{"0", "1", "1"}};
        d.contact = {{"0", "1"}};
        const FiniteJoinStructure s = FiniteJoinStructure::validate(d);
        CHECK_THROWS_AS(check_schema_A1(s), std::invalid_argument);
        CHECK_THROWS_AS(check_schema_A(s), std::invalid_argument);
    }
}

TEST_CASE("classify_subset on powerset {1,2}") {
    const FiniteJoinStructure s = powerset_cjs({"1", "2"});
    SUBCASE("{0, {2}} is a prime ideal") {
        const SubsetKinds k = classify_subset(s, mask_of(s, {"{}", "{2}"}));
        CHECK(k.ideal);
        CHECK(k.prime_ideal);
        CHECK(!k.dual_ideal);
        CHECK(!k.clan);
    }
    SUBCASE("P1 is a clan and an abstract point") {
        const SubsetKinds k = classify_subset(s, mask_of(s, {"{1}", "{1,2}"}));
        CHECK(k.clan);
        CHECK(k.abstract_point);
        CHECK(k.dual_ideal);
        CHECK(!k.ideal);
    }
    SUBCASE("all nonzero elements form none of the kinds") {
        const SubsetKinds k = classify_subset(s, mask_of(s, {"{1}", "{2}", "{1,2}"}));
        CHECK(!k.ideal);
        CHECK(!k.dual_ideal);
        CHECK(!k.prime_ideal);
        CHECK(!k.clan);
        CHECK(!k.abstract_point);
    }
}

TEST_CASE("clan and point enumeration") {
    SUBCASE("two-element structure with 1C1 has exactly the clan {1}") {
        const FiniteJoinStructure s = two_element(true);
        const auto clans = enumerate_clans(s);
        REQUIRE(clans.size() == 1);
        CHECK(clans[0] == (Mask{1} << s.one()));
        CHECK(enumerate_abstract_points(s) == clans);
    }
    SUBCASE("powerset clans are exactly the P_x") {
        for (int n : {1, 2, 3}) {
            std::vector<std::string> points;
            for (int i = 1; i <= n; ++i) points.push_back(std::to_string(i));
            const FiniteJoinStructure s = powerset_cjs(points);
            const auto clans = enumerate_clans(s);
            CHECK(static_cast<int>(clans.size()) == n);
            for (Mask c : clans) {
                // each clan is P_x: the sets containing one fixed point
                bool matched = false;
                for (int i = 0; i < n && !matched; ++i) {
                    Mask px = 0;
                    for (int e = 0; e < s.size(); ++e)
                        if (s.name(e).find(points[i]) != std::string::npos)
                            px |= Mask{1} << e;
                    matched = c == px;
                }
                CHECK(matched);
            }
        }
    }
    SUBCASE("every abstract point is a clan when (10),(12),(13) hold") {
        for (const auto& s : enumerate_structures({4, StructureKind::Raw})) {
            const AxiomReport r = check_contact_axioms(s);
            if (!(r.symmetry.pass && r.monotonicity.pass && r.reflexivity.pass)) continue;
            for (Mask p : enumerate_abstract_points(s)) CHECK(is_clan(s, p));
        }
    }
}

TEST_CASE("find_clan goals") {
    const FiniteJoinStructure s = powerset_cjs({"1", "2"});
    const int p1 = s.index_of("{1}");
    const int p2 = s.index_of("{2}");
    SUBCASE("contains a contact pair") {
        const auto c = find_clan_containing(s, p1, s.one());
        REQUIRE(c.has_value());
        CHECK((*c >> p1 & 1));
        CHECK((*c >> s.one() & 1));
        CHECK(is_clan(s, *c));
    }
    SUBCASE("separates t from u") {
        const auto c = find_clan_separating(s, p1, p2);
        REQUIRE(c.has_value());
        CHECK((*c >> p1 & 1));
        CHECK(!(*c >> p2 & 1));
    }
    SUBCASE("unsatisfiable goals yield nullopt") {
        CHECK(!find_clan_containing(s, p1, p2).has_value());  // not in contact
        CHECK(!find_clan_separating(s, s.one(), s.one()).has_value());  // 1 <= 1
    }
    SUBCASE("contains succeeds for every contact pair of every small CJS") {
        for (const auto& t : enumerate_structures({4, StructureKind::Cjs}))
            for (int a = 0; a < t.size(); ++a)
                for (int b = 0; b < t.size(); ++b) {
                    if (!t.contact(a, b)) continue;
                    const auto c = find_clan_containing(t, a, b);
                    REQUIRE(c.has_value());
                    CHECK((*c >> a & 1));
                    CHECK((*c >> b & 1));
                }
    }
}

TEST_CASE("separating_prime_ideal") {
    const FiniteJoinStructure s = powerset_cjs({"1", "2"});
    const Mask i0 = Mask{1} << s.zero();
    const Mask f1 = s.upset(s.index_of("{1}"));
    SUBCASE("basic separation") {
        const auto p = separating_prime_ideal(s, i0, f1);
        REQUIRE(p.has_value());
        CHECK(*p == mask_of(s, {"{}", "{2}"}));
        CHECK(is_prime_ideal(s, *p));
    }
    SUBCASE("overlapping ideal and dual ideal are rejected") {
        CHECK_THROWS_AS(separating_prime_ideal(s, s.downset(s.one()), f1),
                        std::invalid_argument);
    }
}

TEST_CASE("point_inside_clan and clan_decomposition") {
    SUBCASE("P1 contains its own point") {
        const FiniteJoinStructure s = powerset_cjs({"1", "2"});
        const Mask p1 = mask_of(s, {"{1}", "{1,2}"});
        const auto u = point_inside_clan(s, p1, s.index_of("{1}"));
        REQUIRE(u.has_value());
        CHECK(*u == p1);
        const auto sigma = clan_decomposition(s, p1);
        REQUIRE(sigma.has_value());
        Mask covered = 0;
        for (Mask m : *sigma) covered |= m;
        CHECK(covered == p1);
    }
    SUBCASE("decomposition of P1 in powerset {1,2,3} has cross contact") {
        const FiniteJoinStructure s = powerset_cjs({"1", "2", "3"});
        const auto clans = enumerate_clans(s);
        for (Mask clan : clans) {
            const auto sigma = clan_decomposition(s, clan);
            REQUIRE(sigma.has_value());
            for (Mask u : *sigma)
                for (Mask v : *sigma)
                    for (int a : mask_elements(u))
                        for (int b : mask_elements(v)) CHECK(s.contact(a, b));
        }
    }
    SUBCASE("the non-DCJS fixture exercises the failure path") {
        const FiniteJoinStructure s = fixture_pr2nn();
        bool some_failure = false;
        for (Mask clan : enumerate_clans(s))
            if (!clan_decomposition(s, clan).has_value()) some_failure = true;
        // the fixture is not a DCJS, so at least one clan resists
        CHECK(some_failure);
    }
}

TEST_CASE("schema checks agree with the literal oracle and the clan view at size <= 3") {
    for (const auto& s : enumerate_structures({3, StructureKind::Raw})) {
        const AxiomReport r = check_contact_axioms(s);
        if (!(r.no_contact_with_zero.pass && r.symmetry.pass)) continue;

        const bool a1 = check_schema_A1(s).pass;
        const bool a = check_schema_A(s).pass;
        CHECK(a1 == oracle::schema_A1_holds(s));
        CHECK(a == oracle::schema_A_holds(s));

        const auto clans = enumerate_clans(s);
        bool pairs_covered = true;
        for (int x = 0; x < s.size(); ++x)
            for (int y = 0; y < s.size(); ++y) {
                if (!s.contact(x, y)) continue;
                bool in_common = false;
                for (Mask c : clans)
                    if ((c >> x & 1) && (c >> y & 1)) in_common = true;
                pairs_covered = pairs_covered && in_common;
            }
        CHECK(a1 == pairs_covered);

        bool separated = true;
        for (int t = 0; t < s.size(); ++t)
            for (int u = 0; u < s.size(); ++u) {
                if (s.leq(t, u)) continue;
                bool found = false;
                for (Mask c : clans)
                    if ((c >> t & 1) && (c & s.downset(u)) == 0) found = true;
                separated = separated && found;
            }
        CHECK(a == separated);
    }
}
