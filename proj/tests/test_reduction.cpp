#include <catch2/catch_amalgamated.hpp>

#include "sparsat/generators.hpp"
#include "sparsat/oracle.hpp"
#include "sparsat/reduction.hpp"

using namespace sparsat;

namespace {

LiteralInstance lits(int n, std::initializer_list<LiteralClause> cls) {
    LiteralInstance li;
    li.n = n;
    li.clauses = cls;
    li.canonicalize();
    return li;
}

// Checks that every merged pair is equal in every solution of the literal
// instance.
bool merges_sound(const LiteralInstance& li, const EquivRel& eq) {
    for (std::uint32_t sol : enumerate_literal_solutions(li))
        for (int i = 1; i <= li.n; ++i) {
            int r = eq.find(i);
            if (r != i && (((sol >> (i - 1)) & 1u) != ((sol >> (r - 1)) & 1u)))
                return false;
        }
    return true;
}

} // namespace

TEST_CASE("literal instances parse and serialize") {
    LiteralInstance li = parse_literal_instance("p oitg 3 2\n1 -2 3\n-1 -2 -3\n");
    REQUIRE(li.n == 3);
    REQUIRE(li.clauses.size() == 2);
    REQUIRE(parse_literal_instance(serialize(li)) == li);

    REQUIRE_THROWS_AS(parse_literal_instance("p oit 3 0\n"), ParseError);
    REQUIRE_THROWS_AS(parse_literal_instance("p oitg 3 1\n1 2 4\n"), ParseError);
    REQUIRE_THROWS_AS(parse_literal_instance("p oitg 3 1\n1 -1 2\n"), ParseError);
    REQUIRE_THROWS_AS(parse_literal_instance("p oitg 3 1\n1 0 2\n"), ParseError);
    REQUIRE_THROWS_AS(parse_literal_instance("p oitg 3 2\n1 2 3\n"), ParseError);
}

TEST_CASE("to_monotone shadows negated literals") {
    LiteralInstance li = lits(3, {LiteralClause(1, -2, 3)});
    Instance y = to_monotone(li);
    REQUIRE(y.n == 6);
    REQUIRE(y.clauses == std::vector<Clause>{Clause(1, 3, 5)});

    // All-positive input leaves the shadow variables isolated.
    LiteralInstance pos = lits(4, {LiteralClause(1, 2, 3), LiteralClause(2, 3, 4)});
    Instance ypos = to_monotone(pos);
    for (int v = 5; v <= 8; ++v) REQUIRE(neighbours(ypos, v).empty());
}

TEST_CASE("solutions extend to the shadow instance by y = not x") {
    for (std::uint64_t seed = 0; seed < 10; ++seed) {
        LiteralInstance li = gen_random_nonmonotone(7, 6, 40 + seed);
        Instance y = to_monotone(li);
        for (std::uint32_t sol : enumerate_literal_solutions(li)) {
            std::uint32_t ext = sol;
            for (int i = 1; i <= li.n; ++i)
                if (!((sol >> (i - 1)) & 1u)) ext |= 1u << (li.n + i - 1);
            bool found = false;
            for (std::uint32_t ysol : enumerate_solutions(y, 14))
                found = found || ysol == ext;
            REQUIRE(found);
        }
    }
}

TEST_CASE("self-loop in the conflict graph certifies unsatisfiability") {
    // (x1,x2,x3) and (not x1,x2,x3): shadow twins x1 ~ y1.
    LiteralInstance li = lits(3, {LiteralClause(1, 2, 3), LiteralClause(-1, 2, 3)});
    REQUIRE(enumerate_literal_solutions(li).empty());
    NonmonotoneResult r = sparsify_nonmonotone(li);
    REQUIRE(r.status == NonmonotoneStatus::UnsatDetected);
    REQUIRE(r.eq.num_classes() == 3); // identity relation
}

TEST_CASE("odd conflict cycle certifies unsatisfiability") {
    // Forces x1 = !x2, x2 = !x3, x3 = !x1.
    LiteralInstance li = lits(9, {LiteralClause(1, 4, 5), LiteralClause(-2, 4, 5),
                                  LiteralClause(2, 6, 7), LiteralClause(-3, 6, 7),
                                  LiteralClause(3, 8, 9), LiteralClause(-1, 8, 9)});
    REQUIRE(enumerate_literal_solutions(li).empty());
    NonmonotoneResult r = sparsify_nonmonotone(li);
    REQUIRE(r.status == NonmonotoneStatus::UnsatDetected);
}

TEST_CASE("opposite bipartition sides are never merged") {
    // x1 = !x2 in every solution; the classes land in one component on
    // opposite sides, so they stay distinct.
    LiteralInstance li = lits(6, {LiteralClause(1, 3, 4), LiteralClause(-2, 3, 4),
                                  LiteralClause(2, 5, 6), LiteralClause(-1, 5, 6)});
    REQUIRE_FALSE(enumerate_literal_solutions(li).empty());
    NonmonotoneResult r = sparsify_nonmonotone(li);
    REQUIRE(r.status == NonmonotoneStatus::Ok);
    REQUIRE_FALSE(r.eq.same(1, 2));
    REQUIRE(merges_sound(li, r.eq));
}

TEST_CASE("shared shadow class merges x variables") {
    // y1 and y2 are twins, so x1 and x2 share a component and a side.
    LiteralInstance li = lits(4, {LiteralClause(-1, 3, 4), LiteralClause(-2, 3, 4)});
    NonmonotoneResult r = sparsify_nonmonotone(li);
    REQUIRE(r.status == NonmonotoneStatus::Ok);
    REQUIRE(r.eq.same(1, 2));
    REQUIRE(merges_sound(li, r.eq));
    REQUIRE_FALSE(clause_bound_check(li, r.eq, r.eq_y).has_value());
}

TEST_CASE("monotone input reduces to monotone sparsification") {
    for (std::uint64_t seed = 0; seed < 10; ++seed) {
        Instance inst = gen_random(8, 7, 600 + seed);
        LiteralInstance li;
        li.n = inst.n;
        for (const Clause& c : inst.clauses)
            li.clauses.push_back(LiteralClause(c.v[0], c.v[1], c.v[2]));
        NonmonotoneResult r = sparsify_nonmonotone(li);
        REQUIRE(r.status == NonmonotoneStatus::Ok);
        SparsifyResult mono = sparsify(inst);
        for (int a = 1; a <= inst.n; ++a)
            for (int b = a + 1; b <= inst.n; ++b)
                REQUIRE(r.eq.same(a, b) == mono.eq.same(a, b));
    }
}

TEST_CASE("quotient_literals maps through representatives") {
    LiteralInstance li = lits(4, {LiteralClause(1, -3, 2), LiteralClause(1, -4, 2)});
    EquivRel eq(4);
    eq.unite(3, 4);
    LiteralInstance q = quotient_literals(li, eq);
    REQUIRE(q.n == 3);
    REQUIRE(q.clauses == std::vector<LiteralClause>{LiteralClause(1, 2, -3)});

    EquivRel wrong(3);
    REQUIRE_THROWS_AS(quotient_literals(li, wrong), std::invalid_argument);
}

TEST_CASE("clause bound holds on a seeded corpus") {
    for (std::uint64_t seed = 0; seed < 25; ++seed) {
        LiteralInstance li = gen_random_nonmonotone(6 + int(seed % 5),
                                                    2 + int(seed % 9), 300 + seed);
        NonmonotoneResult r = sparsify_nonmonotone(li);
        if (r.status == NonmonotoneStatus::UnsatDetected) {
            REQUIRE(enumerate_literal_solutions(li).empty());
            continue;
        }
        REQUIRE(merges_sound(li, r.eq));
        REQUIRE_FALSE(clause_bound_check(li, r.eq, r.eq_y).has_value());
    }

    LiteralInstance empty;
    empty.n = 0;
    NonmonotoneResult r = sparsify_nonmonotone(empty);
    REQUIRE_FALSE(clause_bound_check(empty, r.eq, r.eq_y).has_value());
}
