#include <doctest.h>

#include "cjs/examples.hpp"
#include "cjs/structure.hpp"

using namespace cjs;

TEST_CASE("family_cjs requires union closure and the bounds") {
    SUBCASE("missing the full set") {
        CHECK_THROWS_AS(family_cjs({"1", "2"}, {0b00, 0b01}), StructureError);
    }
    SUBCASE("missing the empty set") {
        CHECK_THROWS_AS(family_cjs({"1", "2"}, {0b01, 0b11}), StructureError);
    }
    SUBCASE("union escapes the family") {
        CHECK_THROWS_AS(family_cjs({"1", "2"}, {0b00, 0b01, 0b10}), StructureError);
    }
}

TEST_CASE("every family_cjs output passes the CJS check") {
    const std::vector<std::vector<Mask>> families = {
        {0b00, 0b01, 0b11},
        {0b000, 0b001, 0b110, 0b111},
        {0b0000, 0b1111, 0b0101, 0b1010, 0b0011, 0b0111, 0b1011},
    };
    const std::vector<std::vector<std::string>> points = {
        {"1", "2"}, {"1", "2", "3"}, {"1", "2", "3", "4"}};
    for (size_t i = 0; i < families.size(); ++i)
        CHECK(classify(family_cjs(points[i], families[i])).is_cjs);
}

TEST_CASE("the fixture equals family_cjs over the listed family") {
    const FiniteJoinStructure direct = family_cjs(
        {"1", "2", "3", "4"}, {0b0000, 0b1111, 0b0101, 0b1010, 0b0011, 0b0111, 0b1011});
    CHECK(fixture_pr2nn().same_tables(direct));
}

TEST_CASE("relational_structure") {
    const std::vector<std::string> w = {"1", "2"};
    const std::vector<Mask> powerset = {0b00, 0b01, 0b10, 0b11};
    SUBCASE("identity relation gives overlap contact") {
        std::vector<std::pair<int, int>> id = {{0, 0}, {1, 1}};
        const FiniteJoinStructure s = relational_structure(w, id, powerset);
        CHECK(s.same_tables(powerset_cjs(w)));
        CHECK(classify(s).is_dcjs);
    }
    SUBCASE("total relation relates every nonzero pair") {
        std::vector<std::pair<int, int>> total = {{0, 0}, {0, 1}, {1, 0}, {1, 1}};
        const FiniteJoinStructure s = relational_structure(w, total, powerset);
        for (int a = 0; a < s.size(); ++a)
            for (int b = 0; b < s.size(); ++b)
                CHECK(s.contact(a, b) == (a != s.zero() && b != s.zero()));
    }
    SUBCASE("non-reflexive relation is rejected") {
        CHECK_THROWS_AS(relational_structure(w, {{0, 0}}, powerset), StructureError);
    }
    SUBCASE("non-symmetric relation is rejected") {
        CHECK_THROWS_AS(relational_structure(w, {{0, 0}, {1, 1}, {0, 1}}, powerset),
                        StructureError);
    }
    SUBCASE("satisfies (1)-(13); DCJS check tracks (ad)") {
        std::vector<std::pair<int, int>> id4 = {{0, 0}, {1, 1}, {2, 2}, {3, 3}};
        const FiniteJoinStructure s = relational_structure(
            {"1", "2", "3", "4"}, id4,
            {0b0000, 0b1111, 0b0101, 0b1010, 0b0011, 0b0111, 0b1011});
        CHECK(check_contact_axioms(s).all_pass());
        const Classification c = classify(s);
        CHECK(c.is_cjs);
        CHECK(c.is_dcjs == check_ad(s).pass);
        CHECK(!c.is_dcjs);  // the fixture family fails (ad)
    }
}

TEST_CASE("finite topology validation and operators") {
    SUBCASE("rejects families not closed under intersection") {
        CHECK_THROWS_AS(FiniteTopology::validate({"1", "2", "3"}, {0b000, 0b011, 0b110, 0b111}),
                        StructureError);
    }
    SUBCASE("rejects a family without the full set") {
        CHECK_THROWS_AS(FiniteTopology::validate({"1", "2"}, {0b00, 0b01}), StructureError);
    }
    SUBCASE("interior and closure on the Sierpinski-style space") {
        const FiniteTopology t = FiniteTopology::validate({"1", "2"}, {0b00, 0b01, 0b11});
        CHECK(t.interior(0b10) == 0b00);
        CHECK(t.interior(0b11) == 0b11);
        CHECK(t.closure(0b01) == 0b11);
        CHECK(t.closure(0b10) == 0b10);
    }
}

TEST_CASE("regular closed carriers") {
    SUBCASE("discrete topology has the full powerset") {
        std::vector<Mask> opens;
        for (Mask m = 0; m < 16; ++m) opens.push_back(m);
        const FiniteTopology t = FiniteTopology::validate({"1", "2", "3", "4"}, opens);
        const ContactAlgebraStructure rc = finite_topology_rc(t);
        CHECK(rc.structure.size() == 16);
        CHECK(rc.structure.same_tables(powerset_cjs({"1", "2", "3", "4"})));
    }
    SUBCASE("Sierpinski-style topology collapses to two regions") {
        const FiniteTopology t = FiniteTopology::validate({"1", "2"}, {0b00, 0b01, 0b11});
        CHECK(finite_topology_rc(t).structure.size() == 2);
    }
    SUBCASE("indiscrete topology keeps only the bounds") {
        const FiniteTopology t = FiniteTopology::validate({"1", "2", "3"}, {0b000, 0b111});
        CHECK(finite_topology_rc(t).structure.size() == 2);
    }
}

TEST_CASE("check_contact_algebra certifies RC algebras") {
    const FiniteTopology t =
        FiniteTopology::validate({"1", "2", "3"}, {0b000, 0b001, 0b010, 0b011, 0b111});
    const ContactAlgebraStructure rc = finite_topology_rc(t);
    const ContactAlgebraReport r = check_contact_algebra(rc);
    CHECK(r.boolean_laws);
    CHECK(r.contact_axioms);
    CHECK(r.reduct_is_dcjs);
    CHECK(r.all_pass());
    for (const auto& clause : r.clauses) CHECK(clause.pass);
}

TEST_CASE("check_contact_algebra reports broken laws with witnesses") {
    std::vector<Mask> opens;
    for (Mask m = 0; m < 4; ++m) opens.push_back(m);
    ContactAlgebraStructure rc =
        finite_topology_rc(FiniteTopology::validate({"1", "2"}, opens));
    rc.complement[rc.structure.one()] = rc.structure.one();  // now 1 * 1* = 1, not 0
    const ContactAlgebraReport r = check_contact_algebra(rc);
    CHECK(!r.boolean_laws);
    bool witnessed = false;
    for (const auto& clause : r.clauses)
        if (!clause.pass) witnessed = true;
    CHECK(witnessed);
}

TEST_CASE("powerset_cjs is a DCJS for small W") {
    for (int n : {1, 2, 3, 4}) {
        std::vector<std::string> points;
        for (int i = 1; i <= n; ++i) points.push_back(std::to_string(i));
        CHECK(classify(powerset_cjs(points)).is_dcjs);
    }
}
