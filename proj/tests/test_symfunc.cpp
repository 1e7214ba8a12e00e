#include "symfunc/kernel.hpp"
#include "symfunc/macdonald.hpp"
#include "symfunc/symfunc.hpp"

#include "macdonald_oracle.hpp"

#include <doctest.h>

#include <filesystem>
#include <fstream>
#include <random>

using namespace charstack;

namespace {
const std::vector<std::string> QT{"q", "t"};
const std::vector<std::string> ZW{"z", "w"};

RatFunc qv() { return RatFunc::variable(QT, "q"); }
RatFunc tv() { return RatFunc::variable(QT, "t"); }

SymFunc schur(const Partition& p, std::vector<std::string> cv = QT) {
    return SymFunc::unit(p.size(), Basis::schur, p, cv);
}
SymFunc psum(const Partition& p, std::vector<std::string> cv = QT) {
    return SymFunc::unit(p.size(), Basis::powersum, p, cv);
}
} // namespace

TEST_CASE("convert: examples and Murnaghan-Nakayama oracle") {
    // s_(2) -> (p_11 + p_2)/2
    SymFunc s2 = schur(Partition{{2}}).convert(Basis::powersum);
    CHECK(s2.coeff(Partition{{1, 1}}) == RatFunc::constant(QT, Rat(1, 2)));
    CHECK(s2.coeff(Partition{{2}}) == RatFunc::constant(QT, Rat(1, 2)));
    // s_(11) -> (p_11 - p_2)/2
    SymFunc s11 = schur(Partition{{1, 1}}).convert(Basis::powersum);
    CHECK(s11.coeff(Partition{{1, 1}}) == RatFunc::constant(QT, Rat(1, 2)));
    CHECK(s11.coeff(Partition{{2}}) == RatFunc::constant(QT, Rat(-1, 2)));
    // p_(1) -> s_(1)
    SymFunc p1 = psum(Partition{{1}}).convert(Basis::schur);
    CHECK(p1.coeff(Partition{{1}}) == RatFunc::one(QT));

    // oracle: coefficient of p_mu in s_lambda equals chi^lambda(mu)/z_mu
    for (int n = 1; n <= 5; ++n)
        for (const Partition& lam : partitions_of(n)) {
            SymFunc s = schur(lam).convert(Basis::powersum);
            for (const Partition& mu : partitions_of(n)) {
                Rat expect = Rat(murnaghan_nakayama(lam, mu)) / z_lambda(mu);
                CHECK(s.coeff(mu) == RatFunc::constant(QT, expect));
            }
        }

    // convert round-trips exactly
    std::mt19937 rng(2);
    for (int iter = 0; iter < 20; ++iter) {
        std::uniform_int_distribution<int> dn(1, 6), dc(-4, 4);
        int n = dn(rng);
        auto parts = partitions_of(n);
        SymFunc f(n, Basis::schur, QT);
        for (const auto& p : parts) f.set_coeff(p, RatFunc::constant(QT, Rat(dc(rng))));
        for (Basis b : {Basis::powersum, Basis::monomial}) {
            CHECK(f.convert(b).convert(Basis::schur) == f);
        }
    }
}

TEST_CASE("hall inner product") {
    for (int n = 1; n <= 4; ++n)
        for (const Partition& a : partitions_of(n))
            for (const Partition& b : partitions_of(n)) {
                RatFunc v = hall_inner(schur(a), schur(b));
                CHECK(v == (a == b ? RatFunc::one(QT) : RatFunc::zero(QT)));
            }
    CHECK(hall_inner(psum(Partition{{2}}), psum(Partition{{2}})) == RatFunc::constant(QT, 2));
    CHECK(hall_inner(psum(Partition{{1, 1}}), psum(Partition{{1, 1}})) ==
          RatFunc::constant(QT, 2));

    // independence of the basis in which the arguments are handed over
    SymFunc f = schur(Partition{{2, 1}}) * RatFunc::constant(QT, 3) + schur(Partition{{3}});
    SymFunc g = schur(Partition{{2, 1}}) + schur(Partition{{1, 1, 1}}) * RatFunc::constant(QT, 5);
    RatFunc direct = hall_inner(f, g);
    CHECK(hall_inner(f.convert(Basis::powersum), g.convert(Basis::monomial)) == direct);
    CHECK(hall_inner(f.convert(Basis::monomial), g.convert(Basis::powersum)) == direct);
}

TEST_CASE("plethysm by power maps") {
    SymFunc p1 = psum(Partition{{1}});
    CHECK(p1.plethysm_power(2) == psum(Partition{{2}}));
    SymFunc s21 = schur(Partition{{2, 1}});
    CHECK(s21.plethysm_power(1) == s21);
    // psi_2(s_(1)) = s_(2) - s_(11)
    SymFunc ps = schur(Partition{{1}}).plethysm_power(2).convert(Basis::schur);
    CHECK(ps.coeff(Partition{{2}}) == RatFunc::one(QT));
    CHECK(ps.coeff(Partition{{1, 1}}) == -RatFunc::one(QT));
}

TEST_CASE("schur_of_type") {
    // {(2,[1])} -> p_2
    SymFunc f = schur_of_type(TypeT({{2, Partition{{1}}, 1}}), Basis::powersum, QT);
    CHECK(f == psum(Partition{{2}}));
    // {(1,[1])} -> s_(1)
    CHECK(schur_of_type(TypeT({{1, Partition{{1}}, 1}}), Basis::schur, QT) ==
          schur(Partition{{1}}));
    // {(1,[1])^2} -> s_(2) + s_(11)
    SymFunc g = schur_of_type(TypeT({{1, Partition{{1}}, 2}}), Basis::schur, QT);
    CHECK(g.coeff(Partition{{2}}) == RatFunc::one(QT));
    CHECK(g.coeff(Partition{{1, 1}}) == RatFunc::one(QT));
}

TEST_CASE("modified Macdonald: golden values") {
    set_macdonald_cache_dir("");
    const auto& h1 = modified_macdonald(Partition{{1}});
    CHECK(h1.schur_coeffs.size() == 1);
    CHECK(h1.schur_coeffs.at(Partition{{1}}) == RatFunc::one(QT));

    const auto& h2 = modified_macdonald(Partition{{2}});
    CHECK(h2.schur_coeffs.at(Partition{{2}}) == RatFunc::one(QT));
    CHECK(h2.schur_coeffs.at(Partition{{1, 1}}) == qv());

    const auto& h11 = modified_macdonald(Partition{{1, 1}});
    CHECK(h11.schur_coeffs.at(Partition{{2}}) == RatFunc::one(QT));
    CHECK(h11.schur_coeffs.at(Partition{{1, 1}}) == tv());

    const auto& h21 = modified_macdonald(Partition{{2, 1}});
    CHECK(h21.schur_coeffs.at(Partition{{3}}) == RatFunc::one(QT));
    CHECK(h21.schur_coeffs.at(Partition{{2, 1}}) == qv() + tv());
    CHECK(h21.schur_coeffs.at(Partition{{1, 1, 1}}) == qv() * tv());
}

TEST_CASE("modified Macdonald: two independent routes agree through degree 4") {
    set_macdonald_cache_dir("");
    for (int n = 1; n <= 4; ++n) {
        auto oracle_all = oracle::macdonald_htilde_oracle_all(n);
        for (const Partition& lam : partitions_of(n)) {
            const auto& primary = modified_macdonald(lam);
            const auto& oracle_p = oracle_all.at(lam); // power-sum basis
            SymFunc primary_schur(n, Basis::schur, QT);
            for (const auto& [mu, c] : primary.schur_coeffs) primary_schur.set_coeff(mu, c);
            SymFunc primary_p = primary_schur.convert(Basis::powersum);
            for (const Partition& mu : partitions_of(n)) {
                auto it = oracle_p.find(mu);
                RatFunc expect = it == oracle_p.end() ? RatFunc::zero(QT) : it->second;
                CHECK(primary_p.coeff(mu) == expect);
            }
        }
    }
}

TEST_CASE("Macdonald positivity sanity for degree 5") {
    set_macdonald_cache_dir("");
    for (const Partition& lam : partitions_of(5)) {
        const auto& e = modified_macdonald(lam);
        CHECK(e.schur_coeffs.at(Partition{{5}}) == RatFunc::one(QT));
        for (const auto& [mu, c] : e.schur_coeffs) {
            CHECK(c.is_poly());
            for (const auto& [exp, coef] : c.num().terms()) {
                CHECK(is_integer(coef));
                CHECK(coef > 0);
            }
        }
    }
}

TEST_CASE("Macdonald disk cache round-trip") {
    std::string dir = "mac_cache_test_dir";
    std::filesystem::remove_all(dir);
    set_macdonald_cache_dir(dir);
    macdonald_clear_memory_cache();
    const auto first = modified_macdonald(Partition{{3, 1}});
    auto path_count = std::distance(std::filesystem::directory_iterator(dir),
                                    std::filesystem::directory_iterator{});
    CHECK(path_count >= 1);
    macdonald_clear_memory_cache(); // next call must reload from disk
    const auto& again = modified_macdonald(Partition{{3, 1}});
    CHECK(again.schur_coeffs == first.schur_coeffs);

    // a corrupted file is detected and recomputed
    auto path = std::filesystem::directory_iterator(dir)->path();
    {
        std::ofstream out(path);
        out << "charstack-macdonald v1 hash=0\ngarbage\n";
    }
    macdonald_clear_memory_cache();
    const auto& fixed = modified_macdonald(Partition{{3, 1}});
    CHECK(fixed.schur_coeffs == first.schur_coeffs);

    set_macdonald_cache_dir("");
    macdonald_clear_memory_cache();
    std::filesystem::remove_all(dir);
}

TEST_CASE("hook function") {
    // lambda = (1): 1/((z^2-1)(1-w^2))
    RatFunc h1 = hook_function(Partition{{1}});
    MultiPoly z2 = MultiPoly::variable(ZW, "z", 2), w2 = MultiPoly::variable(ZW, "w", 2);
    MultiPoly one = MultiPoly::constant(ZW, 1);
    CHECK(h1 == RatFunc(one, (z2 - one) * (one - w2)));
    // lambda = (2)
    MultiPoly z4 = MultiPoly::variable(ZW, "z", 4);
    CHECK(hook_function(Partition{{2}}) ==
          RatFunc(one, (z4 - one) * (z2 - w2) * (z2 - one) * (one - w2)));
    // lambda = (1,1)
    MultiPoly w4 = MultiPoly::variable(ZW, "w", 4);
    CHECK(hook_function(Partition{{1, 1}}) ==
          RatFunc(one, (z2 - w2) * (one - w4) * (z2 - one) * (one - w2)));
}

TEST_CASE("kernel: n = 1 collapses to 1") {
    set_macdonald_cache_dir("");
    TypeT unit({{1, Partition{{1}}, 1}});
    for (int k = 1; k <= 4; ++k) {
        MultiType w(std::vector<TypeT>(static_cast<size_t>(k), unit));
        CHECK(hlv_kernel(w) == RatFunc::one(ZW));
    }
}

TEST_CASE("kernel: invariant under permuting components") {
    set_macdonald_cache_dir("");
    std::vector<TypeT> pool{
        TypeT({{1, Partition{{1}}, 2}}),
        TypeT({{2, Partition{{1}}, 1}}),
        TypeT({{1, Partition{{2}}, 1}}),
        TypeT({{1, Partition{{1, 1}}, 1}}),
    };
    std::mt19937 rng(17);
    for (int iter = 0; iter < 4; ++iter) {
        std::uniform_int_distribution<size_t> dp(0, pool.size() - 1);
        std::vector<TypeT> comps{pool[dp(rng)], pool[dp(rng)], pool[dp(rng)]};
        MultiType a(comps);
        std::shuffle(comps.begin(), comps.end(), rng);
        MultiType b(comps);
        CHECK(hlv_kernel(a) == hlv_kernel(b));
    }
    // n = 3 spot check
    TypeT t3a({{1, Partition{{2, 1}}, 1}});
    TypeT t3b({{3, Partition{{1}}, 1}});
    MultiType a({t3a, t3b});
    MultiType b({t3b, t3a});
    CHECK(hlv_kernel(a) == hlv_kernel(b));
}

TEST_CASE("substitute_and_clear") {
    std::vector<std::string> U{"u"};
    LaurentPoly u = LaurentPoly::variable(U, "u");
    LaurentPoly uinv = LaurentPoly::variable(U, "u", -1);
    std::map<std::string, LaurentPoly> subst{{"z", u}, {"w", uinv}};

    // identity on something already Laurent
    RatFunc f = RatFunc::variable(ZW, "z", 2) - RatFunc::variable(ZW, "w", 2);
    LaurentPoly cleared = substitute_and_clear(f, subst, U);
    CHECK(cleared == u.pow(2) - uinv.pow(2));

    CHECK(substitute_and_clear(RatFunc::one(ZW), subst, U) == LaurentPoly::constant(U, 1));

    // pole: denominator z*w - 1 maps to zero
    MultiPoly zw = MultiPoly::variable(ZW, "z") * MultiPoly::variable(ZW, "w");
    RatFunc bad(MultiPoly::constant(ZW, 1), zw - MultiPoly::constant(ZW, 1));
    CHECK_THROWS_AS(substitute_and_clear(bad, subst, U), std::domain_error);

    // non-clearing denominator
    RatFunc frac(MultiPoly::constant(ZW, 1),
                 MultiPoly::variable(ZW, "z") + MultiPoly::constant(ZW, 1));
    CHECK_THROWS_WITH_AS(substitute_and_clear(frac, subst, U),
                         "denominator does not clear", std::domain_error);
}
