#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"
#include "linhg/construct.hpp"
#include "linhg/cycles.hpp"
#include "oracles.hpp"

#include <sstream>

using namespace linhg;

TEST_CASE("berge C2 is a linearity violation") {
    auto h = load_triple_system("4 2\n0 1 2\n0 1 3\n");
    auto r = find_berge_cycle(h, 2);
    REQUIRE(r.status == SearchStatus::found);
    CHECK(verify_witness(h, *r.witness));
    CHECK(r.witness->vertices == std::vector<int>{0, 1});

    auto lin = load_triple_system("5 2\n0 1 2\n2 3 4\n");
    CHECK(find_berge_cycle(lin, 2).status == SearchStatus::absent);
}

TEST_CASE("linear triangle") {
    auto h = load_triple_system("6 3\n0 1 2\n2 3 4\n0 4 5\n");
    auto b = find_berge_cycle(h, 3);
    REQUIRE(b.status == SearchStatus::found);
    CHECK(verify_witness(h, *b.witness));
    auto l = find_linear_cycle(h, 3);
    REQUIRE(l.status == SearchStatus::found);
    CHECK(verify_witness(h, *l.witness));
}

TEST_CASE("c5free construction has no berge C5") {
    for (int s : {2, 3, 4}) {
        auto h = construct_c5free(s);
        CHECK(find_berge_cycle(h, 5).status == SearchStatus::absent);
    }
}

TEST_CASE("length preconditions") {
    auto h = load_triple_system("3 1\n0 1 2\n");
    CHECK_THROWS(find_berge_cycle(h, 1));
    CHECK_THROWS(find_linear_cycle(h, 2));
}

TEST_CASE("witness verification rejects corrupted certificates") {
    auto h = load_triple_system("6 3\n0 1 2\n2 3 4\n0 4 5\n");
    auto good = *find_linear_cycle(h, 3).witness;
    CHECK(verify_witness(h, good));

    auto repeated = good;
    repeated.vertices[1] = repeated.vertices[0];
    CHECK_FALSE(verify_witness(h, repeated));

    auto wrong_edge = good;
    std::swap(wrong_edge.edge_indices[0], wrong_edge.edge_indices[1]);
    CHECK_FALSE(verify_witness(h, wrong_edge));

    auto out_of_range = good;
    out_of_range.edge_indices[0] = 99;
    CHECK_THROWS(verify_witness(h, out_of_range));
}

TEST_CASE("linear witness disjointness is enforced") {
    // Berge C5 exists here but no linear C5: h1 and h3 share vertex 0
    auto h = load_triple_system("11 5\n0 1 2\n2 3 4\n0 4 5\n0 6 7\n1 7 8\n");
    for (int k = 4; k <= 5; ++k) {
        auto l = find_linear_cycle(h, k);
        if (l.status == SearchStatus::found) CHECK(verify_witness(h, *l.witness));
        CHECK((l.status == SearchStatus::found) == oracles::has_linear_cycle(h, k));
    }
}

TEST_CASE("family spec parsing") {
    auto f = FamilySpec::parse("berge:2,3,5");
    CHECK(f.entries.size() == 3);
    CHECK(f.to_string() == "berge:2,3,5");

    auto g = FamilySpec::parse("linear:3,5;berge:2");
    CHECK(g.to_string() == "berge:2;linear:3,5");

    CHECK(FamilySpec::parse("C5") == FamilySpec::berge_up_to(5));
    CHECK(FamilySpec::berge_up_to(5).to_string() == "berge:3,5");
    CHECK(FamilySpec::berge_up_to(6).to_string() == "berge:2,4,6");
    CHECK(FamilySpec::parse("Clin7") == FamilySpec::linear_up_to(7));
    CHECK(FamilySpec::linear_up_to(7).to_string() == "linear:3,5,7");
    CHECK(FamilySpec::linear_up_to(6).to_string() == "linear:4,6");
    CHECK(FamilySpec::parse("none").entries.empty());
    CHECK(FamilySpec::parse("none").to_string() == "none");

    CHECK_THROWS(FamilySpec::parse("berge:1"));
    CHECK_THROWS(FamilySpec::parse("linear:2"));
    CHECK_THROWS(FamilySpec::parse("weird:3"));
}

TEST_CASE("is_family_free") {
    auto h = construct_c5free(2);
    CHECK(is_family_free(h, FamilySpec::parse("berge:2,3,5")).free);

    auto r = is_family_free(h, FamilySpec::parse("berge:4"));
    CHECK_FALSE(r.free);
    REQUIRE(r.witness.has_value());
    CHECK(verify_witness(h, std::get<BergeCycleWitness>(*r.witness)));

    CHECK(is_family_free(TripleSystem{0, {}}, FamilySpec::parse("berge:2,3,4,5;linear:3,4,5")).free);
}

TEST_CASE("girth") {
    CHECK(girth(gen_complete_bipartite(2, 2)) == 4);
    CHECK(girth(gen_projective_incidence(2)) == 6);
    CHECK_FALSE(girth(gen_complete_bipartite(1, 1)).has_value());
    CHECK(girth(3, {{0, 1}, {1, 2}, {0, 2}}) == 3);
    CHECK_FALSE(girth(4, {{0, 1}, {1, 2}, {2, 3}}).has_value());
}

TEST_CASE("witness serialization round trip") {
    auto h = load_triple_system("6 3\n0 1 2\n2 3 4\n0 4 5\n");
    auto w = *find_linear_cycle(h, 3).witness;
    auto text = serialize_witness(w);
    CHECK(text.rfind("cycle linear 3\n", 0) == 0);
    auto back = parse_witness(text);
    auto& lw = std::get<LinearCycleWitness>(back);
    CHECK(lw.vertices == w.vertices);
    CHECK(lw.edge_indices == w.edge_indices);

    auto bw = *find_berge_cycle(h, 3).witness;
    auto btext = serialize_witness(bw);
    CHECK(std::get<BergeCycleWitness>(parse_witness(btext)).vertices == bw.vertices);

    CHECK_THROWS(parse_witness(std::string("garbage\n")));
}

TEST_CASE("serial and parallel detection agree") {
    auto systems = {
        construct_c5free(2),
        load_triple_system("6 3\n0 1 2\n2 3 4\n0 4 5\n"),
        load_triple_system("9 4\n0 1 2\n0 3 4\n0 5 6\n1 3 5\n"),
    };
    for (const auto& h : systems)
        for (int k = 2; k <= 6; ++k) {
            auto pb = find_berge_cycle(h, k);
            auto sb = serial::find_berge_cycle(h, k);
            CHECK(pb.status == sb.status);
            if (pb.witness) {
                CHECK(pb.witness->vertices == sb.witness->vertices);
                CHECK(pb.witness->edge_indices == sb.witness->edge_indices);
            }
            if (k >= 3) {
                auto pl = find_linear_cycle(h, k);
                auto sl = serial::find_linear_cycle(h, k);
                CHECK(pl.status == sl.status);
                if (pl.witness) CHECK(pl.witness->vertices == sl.witness->vertices);
            }
        }
}

TEST_CASE("budget exhaustion is reported, never a wrong absent") {
    auto h = construct_c5free(3);
    SearchOptions tiny;
    tiny.budget = 1;
    auto r = find_berge_cycle(h, 5, tiny);
    CHECK(r.status == SearchStatus::budget_exceeded);
}

TEST_CASE("through-edge detection") {
    auto h = load_triple_system("8 4\n0 1 2\n2 3 4\n0 4 5\n5 6 7\n");
    // triangle uses edges 0,1,2; edge 3 hangs off it
    CHECK(find_berge_cycle_through(h, 3, 0).status == SearchStatus::found);
    CHECK(find_berge_cycle_through(h, 3, 3).status == SearchStatus::absent);
    CHECK(find_linear_cycle_through(h, 3, 1).status == SearchStatus::found);
    CHECK(find_linear_cycle_through(h, 3, 3).status == SearchStatus::absent);
}

TEST_CASE("witnesses survive edge addition") {
    auto h = load_triple_system("6 3\n0 1 2\n2 3 4\n0 4 5\n");
    auto w = *find_berge_cycle(h, 3).witness;
    auto grown = h;
    grown.n = 9;
    grown.edges.push_back({6, 7, 8});
    CHECK(verify_witness(grown, w));
}

TEST_CASE("detector matches brute force on assorted small systems") {
    auto systems = {
        load_triple_system("6 4\n0 1 2\n0 3 4\n1 3 5\n2 4 5\n"),
        load_triple_system("7 5\n0 1 2\n0 3 4\n0 5 6\n1 3 5\n2 4 6\n"),
        load_triple_system("6 2\n0 1 2\n3 4 5\n"),
    };
    for (const auto& h : systems)
        for (int k = 2; k <= 5; ++k) {
            CHECK((find_berge_cycle(h, k).status == SearchStatus::found) ==
                  oracles::has_berge_cycle(h, k));
            if (k >= 3)
                CHECK((find_linear_cycle(h, k).status == SearchStatus::found) ==
                      oracles::has_linear_cycle(h, k));
        }
}

TEST_CASE("berge C3 iff linear C3 in linear systems") {
    for (const auto& h : oracles::all_linear_systems(5)) {
        bool b = find_berge_cycle(h, 3).status == SearchStatus::found;
        bool l = find_linear_cycle(h, 3).status == SearchStatus::found;
        CHECK(b == l);
    }
}
