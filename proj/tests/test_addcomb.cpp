#include <catch2/catch_amalgamated.hpp>

#include <random>
#include <unordered_set>

#include "sparsat/addcomb.hpp"
#include "sparsat/generators.hpp"

using namespace sparsat;

namespace {

std::vector<BitVec> vecs(std::initializer_list<const char*> vs) {
    std::vector<BitVec> out;
    for (const char* v : vs) out.push_back(BitVec::parse(v));
    return out;
}

// Direct E_k: enumerate all ordered k-tuples.
unsigned long long e_k_direct(const std::vector<BitVec>& A, int k) {
    if (A.empty()) return 0;
    unsigned long long count = 0;
    std::vector<std::size_t> idx(std::size_t(k), 0);
    for (;;) {
        BitVec s(A.front().width());
        for (std::size_t i : idx) s ^= A[i];
        if (s.none()) ++count;
        int pos = k - 1;
        while (pos >= 0 && ++idx[std::size_t(pos)] == A.size()) {
            idx[std::size_t(pos)] = 0;
            --pos;
        }
        if (pos < 0) break;
    }
    return count;
}

// The linear lower-bound family: N_i = {0, v_i} over distinct vectors
// including zero first.
VectorFamily zero_vi_family(int d) {
    VectorFamily f;
    f.d = std::size_t(d);
    for (std::uint32_t s = 0; s < (1u << d); ++s) {
        BitVec v = BitVec(std::size_t(d));
        for (int j = 0; j < d; ++j)
            if (s & (1u << j)) v.set(std::size_t(j), true);
        f.V.push_back(v);
        f.N.push_back(s == 0 ? std::vector<int>{1} : std::vector<int>{1, int(s) + 1});
    }
    // N_1 = {0} = {0, v_1} since v_1 = 0.
    return f;
}

} // namespace

TEST_CASE("condition (i) accepts N_i = {0, v_i} and subset families") {
    for (int d = 1; d <= 5; ++d) {
        REQUIRE(check_condition_i(zero_vi_family(d)).empty());
        REQUIRE(check_condition_i(gen_subset_family(d)).empty());
    }
}

TEST_CASE("condition (i) flags N_i = {v_i} with v_i nonzero") {
    VectorFamily f;
    f.d = 2;
    f.V = vecs({"10", "01"});
    f.N = {{1}, {2}};
    REQUIRE(check_condition_i(f) == std::vector<int>{1, 2});
}

TEST_CASE("condition (ii) on subset families and hand-built violations") {
    for (int d = 1; d <= 6; ++d)
        REQUIRE(check_condition_ii(gen_subset_family(d)).empty());

    // v_1 in N_2 + N_2 via {0, v_1} subset of N_2 (v_2 is the zero vector).
    VectorFamily f;
    f.d = 2;
    f.V = vecs({"10", "00"});
    f.N = {{}, {1, 2}};
    REQUIRE(check_condition_ii(f) ==
            std::vector<std::pair<int, int>>{{1, 2}});

    // Empty neighbourhoods: span is {0}, violated only by a zero vector.
    VectorFamily g;
    g.d = 2;
    g.V = vecs({"10", "01"});
    g.N = {{}, {}};
    REQUIRE(check_condition_ii(g).empty());
    VectorFamily h;
    h.d = 2;
    h.V = vecs({"00", "01"});
    h.N = {{}, {}};
    REQUIRE(check_condition_ii(h) ==
            std::vector<std::pair<int, int>>{{1, 2}});
}

TEST_CASE("energy counts on known sets") {
    std::vector<BitVec> f22 = vecs({"00", "10", "01", "11"});
    REQUIRE(e_k(f22, 3) == 16);
    REQUIRE(e_k(f22, 4) == 64);
    // {0, a}: (0,0,0), (0,a,a), (a,0,a), (a,a,0).
    REQUIRE(e_k(vecs({"000", "110"}), 3) == 4);
    REQUIRE_THROWS_AS(e_k(f22, 1), std::invalid_argument);
    REQUIRE(e_k({}, 3) == 0);
}

TEST_CASE("e_k matches direct enumeration on random sets") {
    std::mt19937_64 rng(11);
    for (int iter = 0; iter < 40; ++iter) {
        std::size_t d = 1 + rng() % 6;
        std::unordered_set<BitVec, BitVecHash> set;
        std::size_t want = 1 + rng() % std::min<std::size_t>(12, std::size_t(1) << d);
        while (set.size() < want) {
            BitVec v(d);
            for (std::size_t j = 0; j < d; ++j)
                if (rng() & 1u) v.set(j, true);
            set.insert(v);
        }
        std::vector<BitVec> A(set.begin(), set.end());
        REQUIRE(e_k(A, 2) == e_k_direct(A, 2));
        REQUIRE(e_k(A, 3) == e_k_direct(A, 3));
        REQUIRE(e_k(A, 4) == e_k_direct(A, 4));
        REQUIRE(e_k(A, 5) == e_k_direct(A, 5));
    }
}

TEST_CASE("sumset and doubling") {
    std::vector<BitVec> sub = vecs({"00", "10", "01", "11"});
    std::vector<BitVec> s = sumset(sub);
    REQUIRE(s.size() == 4);
    REQUIRE(doubling(sub) == Ratio{1, 1});

    std::vector<BitVec> tri = vecs({"100", "010", "001"});
    std::vector<BitVec> st = sumset(tri);
    std::unordered_set<BitVec, BitVecHash> expect{
        BitVec::parse("000"), BitVec::parse("110"), BitVec::parse("101"),
        BitVec::parse("011")};
    REQUIRE(st.size() == 4);
    for (const BitVec& v : st) REQUIRE(expect.count(v) == 1);
    REQUIRE(doubling(tri) == Ratio{4, 3});

    REQUIRE_THROWS_AS(sumset({}), std::invalid_argument);

    // |A| <= |A+A| <= |A|^2.
    std::mt19937_64 rng(5);
    for (int iter = 0; iter < 30; ++iter) {
        std::unordered_set<BitVec, BitVecHash> set;
        std::size_t want = 1 + rng() % 10;
        while (set.size() < want) {
            BitVec v(5);
            for (std::size_t j = 0; j < 5; ++j)
                if (rng() & 1u) v.set(j, true);
            set.insert(v);
        }
        std::vector<BitVec> A(set.begin(), set.end());
        std::size_t ss = sumset(A).size();
        REQUIRE(A.size() <= ss);
        REQUIRE(ss <= A.size() * A.size());
    }
}

TEST_CASE("total_size") {
    REQUIRE(total_size(gen_subset_family(2)) == 9);
    REQUIRE(total_size(zero_vi_family(3)) == 2 * 8 - 1);
    VectorFamily empty;
    empty.d = 3;
    empty.V = vecs({"100"});
    empty.N = {{}};
    REQUIRE(total_size(empty) == 0);
}

TEST_CASE("family extraction from instances") {
    Instance single = parse_instance("p oit 3 1\n1 2 3\n");
    VectorFamily f = family_from_instance(single);
    REQUIRE(f.size() == 3);
    REQUIRE(check_condition_i(f).empty());
    REQUIRE(check_condition_ii(f).empty());

    Instance x = sparsify(gen_xor(3)).out;
    VectorFamily fx = family_from_instance(x);
    REQUIRE(check_condition_i(fx).empty());
    REQUIRE(check_condition_ii(fx).empty());
    // Sum over ordered neighbour pairs.
    std::size_t pairs = 0;
    Instance w = complement(x);
    for (int v = 1; v <= w.n; ++v) pairs += neighbours(w, v).size();
    REQUIRE(total_size(fx) <= pairs);

    Instance empty;
    empty.n = 3;
    VectorFamily fe = family_from_instance(empty);
    REQUIRE(fe.size() == 3);
    for (const auto& ni : fe.N) REQUIRE(ni.empty());

    Instance twins = parse_instance("p oit 4 2\n1 2 3\n1 2 4\n");
    REQUIRE_THROWS_AS(family_from_instance(twins), std::invalid_argument);
}

TEST_CASE("energy inequalities on extracted and generated families") {
    std::vector<VectorFamily> fams;
    for (int d = 1; d <= 6; ++d) fams.push_back(gen_subset_family(d));
    for (int iter = 0; iter < 20; ++iter) {
        int m = 1 + iter % 8;
        for (;;) {
            try {
                Instance inst =
                    gen_planted(5 + iter % 7, m, 900 + std::uint64_t(iter));
                fams.push_back(family_from_instance(sparsify(inst).out));
                break;
            } catch (const std::invalid_argument&) {
                m /= 2; // planted assignment admits too few clauses
            }
        }
    }
    for (const VectorFamily& f : fams) {
        if (f.V.empty()) continue;
        unsigned long long e3 = e_k(f.V, 3);
        unsigned long long e4 = e_k(f.V, 4);
        REQUIRE(e3 >= total_size(f));
        REQUIRE(e4 * f.size() >= e3 * e3);
    }
}

TEST_CASE("family serialization round-trips") {
    VectorFamily f = gen_subset_family(3);
    VectorFamily back = parse_family(serialize_family(f));
    REQUIRE(back.d == f.d);
    REQUIRE(back.V == f.V);
    REQUIRE(back.N == f.N);

    REQUIRE_THROWS_AS(parse_family(""), ParseError);
    REQUIRE_THROWS_AS(parse_family("f 1 2\n"), ParseError);
    REQUIRE_THROWS_AS(parse_family("f 1 2\n0 : 5\n"), ParseError);
}
