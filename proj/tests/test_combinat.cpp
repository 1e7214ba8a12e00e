#include "combinat/partition.hpp"
#include "combinat/types.hpp"

#include <doctest.h>

#include <random>
#include <set>

using namespace charstack;

TEST_CASE("partitions_of") {
    CHECK(partitions_of(0) == std::vector<Partition>{Partition{}});
    std::vector<Partition> p3{Partition{{3}}, Partition{{2, 1}}, Partition{{1, 1, 1}}};
    CHECK(partitions_of(3) == p3);
    CHECK(partitions_of(5).size() == 7);
    // no duplicates
    auto p8 = partitions_of(8);
    CHECK(std::set<Partition>(p8.begin(), p8.end()).size() == p8.size());
}

TEST_CASE("conjugate") {
    CHECK(Partition{{3}}.conjugate() == Partition{{1, 1, 1}});
    CHECK(Partition{{2, 1}}.conjugate() == Partition{{2, 1}});
    for (int n = 1; n <= 6; ++n)
        CHECK(Partition(std::vector<int>(n, 1)).conjugate() == Partition{{n}});

    std::mt19937 rng(5);
    for (int iter = 0; iter < 1000; ++iter) {
        std::uniform_int_distribution<int> dn(0, 20);
        int n = dn(rng);
        auto all = partitions_of(n);
        std::uniform_int_distribution<size_t> di(0, all.size() - 1);
        const Partition& p = all[di(rng)];
        CHECK(p.conjugate().conjugate() == p);
        CHECK(p.conjugate().size() == p.size());
    }
}

TEST_CASE("dominance order") {
    CHECK(dominance_leq(Partition{{1, 1, 1}}, Partition{{3}}));
    CHECK(dominance_leq(Partition{{2, 2}}, Partition{{3, 1}}));
    CHECK(!dominance_leq(Partition{{3, 1}}, Partition{{2, 2}}));
    CHECK_THROWS(dominance_leq(Partition{{2}}, Partition{{3}}));

    for (int n = 1; n <= 8; ++n) {
        auto all = partitions_of(n);
        for (const auto& a : all) {
            CHECK(dominance_leq(a, a));
            for (const auto& b : all) {
                if (dominance_leq(a, b) && dominance_leq(b, a)) CHECK(a == b);
                for (const auto& c : all)
                    if (dominance_leq(a, b) && dominance_leq(b, c)) CHECK(dominance_leq(a, c));
            }
        }
    }
}

TEST_CASE("arm and leg cells") {
    auto c1 = arm_leg_cells(Partition{{1}});
    REQUIRE(c1.size() == 1);
    CHECK((c1[0].arm == 0 && c1[0].leg == 0));

    auto c2 = arm_leg_cells(Partition{{2}});
    REQUIRE(c2.size() == 2);
    CHECK((c2[0].arm == 1 && c2[0].leg == 0));
    CHECK((c2[1].arm == 0 && c2[1].leg == 0));

    auto c21 = arm_leg_cells(Partition{{2, 1}});
    std::multiset<std::pair<int, int>> got;
    for (auto c : c21) got.insert({c.arm, c.leg});
    CHECK(got == std::multiset<std::pair<int, int>>{{0, 0}, {0, 0}, {1, 1}});
}

TEST_CASE("types: psi, divide, dual, size") {
    TypeT t({{1, Partition{{1}}, 2}});
    CHECK(t.size() == 2);
    CHECK(t.is_split());
    CHECK(t.psi(2) == TypeT({{2, Partition{{1}}, 2}}));
    CHECK(t.psi(1) == t);
    CHECK(TypeT({{2, Partition{{1, 1}}, 1}}).psi(3) == TypeT({{6, Partition{{1, 1}}, 1}}));

    CHECK(t.divide(2) == TypeT({{1, Partition{{1}}, 1}}));
    CHECK(t.divide(1) == t);
    TypeT big({{1, Partition{{2}}, 4}, {1, Partition{{1, 1}}, 2}});
    CHECK(big.divide(2) == TypeT({{1, Partition{{2}}, 2}, {1, Partition{{1, 1}}, 1}}));
    CHECK_THROWS_AS(t.divide(3), std::domain_error);

    CHECK(TypeT({{1, Partition{{1, 1}}, 1}}).dual() == TypeT({{1, Partition{{2}}, 1}}));
    CHECK(TypeT({{1, Partition{{1}}, 2}}).dual() == TypeT({{1, Partition{{1}}, 2}}));
    CHECK(TypeT({{2, Partition{{1}}, 1}}).dual() == TypeT({{2, Partition{{1}}, 1}}));

    // psi_b(psi_a(w)) = psi_{ab}(w)
    std::mt19937 rng(23);
    std::uniform_int_distribution<int> dd(1, 3);
    for (int iter = 0; iter < 100; ++iter) {
        int a = dd(rng), b = dd(rng);
        TypeT w({{dd(rng), Partition{{dd(rng)}}, dd(rng)}});
        CHECK(w.psi(a).psi(b) == w.psi(a * b));
    }
}

TEST_CASE("type text round-trip") {
    TypeT t({{1, Partition{{2, 1}}, 3}, {2, Partition{{1}}, 1}});
    CHECK(t.to_string() == "{(1,[2,1])^3, (2,[1])}");
    CHECK(TypeT::parse(t.to_string()) == t);
    CHECK(TypeT::parse("{(1,[1])^2}") == TypeT({{1, Partition{{1}}, 2}}));
    CHECK_THROWS(TypeT::parse("{(1,[1]"));
    CHECK_THROWS(TypeT::parse("{(0,[1])}"));
}

TEST_CASE("multitype: r_sign and omega_r") {
    TypeT ss({{1, Partition{{1}}, 2}});
    MultiType three({ss, ss, ss});
    CHECK(r_sign(three) == 12);

    TypeT n1({{1, Partition{{1}}, 1}});
    for (int k = 1; k <= 4; ++k)
        CHECK(r_sign(MultiType(std::vector<TypeT>(k, n1))) == 2 * k);

    CHECK(r_sign(MultiType({TypeT({{2, Partition{{1}}, 1}})})) == 3);

    // omega_r
    MultiType pair({ss, ss});
    MultiType out = omega_r(pair, {2, 2});
    CHECK(out == MultiType({TypeT({{2, Partition{{1}}, 1}}), TypeT({{2, Partition{{1}}, 1}})}));
    CHECK(omega_r(pair, {1, 1}) == pair);

    TypeT n4({{1, Partition{{2}}, 2}});
    CHECK(omega_r(MultiType({n4}), {2}) == MultiType({TypeT({{2, Partition{{2}}, 1}})}));

    // sizes preserved
    std::mt19937 rng(9);
    std::uniform_int_distribution<int> dm(1, 3);
    for (int iter = 0; iter < 50; ++iter) {
        int m = 2 * dm(rng);
        TypeT w({{1, Partition{{dm(rng)}}, m}});
        MultiType mt({w, w});
        for (int r : {1, 2}) {
            MultiType o = omega_r(mt, {r, r});
            CHECK(o.n() == mt.n());
        }
    }
}
