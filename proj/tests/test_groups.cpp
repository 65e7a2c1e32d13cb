#include <doctest.h>

#include <algorithm>
#include <random>
#include <thread>

#include "gamma_euler/errors.hpp"
#include "gamma_euler/formulas.hpp"
#include "gamma_euler/homs.hpp"
#include "gamma_euler/oracle.hpp"
#include "test_support.hpp"

using namespace gamma_euler;
using test_support::gamma_corpus;
using test_support::klein_four;
using test_support::z_mod;

TEST_CASE("presentation validation") {
    CHECK_THROWS_AS(GammaGroup::presented({0, {}}), std::invalid_argument);
    CHECK_THROWS_AS(GammaGroup::presented({2, {{0}}}), std::invalid_argument);
    CHECK_THROWS_AS(GammaGroup::presented({2, {{3}}}), std::invalid_argument);
    CHECK_THROWS_AS(GammaGroup::z_pow(0), std::invalid_argument);
    CHECK_THROWS_AS(GammaGroup::free_group(-1), std::invalid_argument);
    CHECK_NOTHROW(GammaGroup::presented({2, {{1, -2, 1}}}));
}

TEST_CASE("gamma canonicalization") {
    CHECK(GammaGroup::free_group(1).canonical() == GammaGroup::z_pow(1));
    CHECK(GammaGroup::free_group(2).canonical() == GammaGroup::free_group(2));
    CHECK(GammaGroup::presented({3, {}}).canonical() ==
          GammaGroup::free_group(3));
    CHECK(GammaGroup::presented({1, {}}).canonical() == GammaGroup::z_pow(1));

    // Commutator relators in assorted shapes: rotated, inverted.
    CHECK(GammaGroup::presented({2, {{1, 2, -1, -2}}}).canonical() ==
          GammaGroup::z_pow(2));
    CHECK(GammaGroup::presented({2, {{-1, -2, 1, 2}}}).canonical() ==
          GammaGroup::z_pow(2));
    CHECK(GammaGroup::presented({2, {{2, 1, -2, -1}}}).canonical() ==
          GammaGroup::z_pow(2));
    CHECK(GammaGroup::presented(
              {3, {{1, 2, -1, -2}, {1, 3, -1, -3}, {3, 2, -3, -2}}})
              .canonical() == GammaGroup::z_pow(3));

    // Not all pairs covered, duplicated pair, or a non-commutator: unchanged.
    const GammaGroup partial =
        GammaGroup::presented({3, {{1, 2, -1, -2}, {1, 3, -1, -3}}});
    CHECK(partial.canonical() == partial);
    const GammaGroup dup =
        GammaGroup::presented({2, {{1, 2, -1, -2}, {2, 1, -2, -1}}});
    CHECK(dup.canonical() == dup);
    const GammaGroup torsion = z_mod(4);
    CHECK(torsion.canonical() == torsion);

    CHECK(GammaGroup::z_pow(2).structural_key() ==
          GammaGroup::presented({2, {{1, 2, -1, -2}}}).structural_key());
}

TEST_CASE("finite group constructors and verification") {
    const FiniteGroup c1 = FiniteGroup::cyclic(1);
    CHECK(c1.order() == 1);
    CHECK(c1.identity() == 0);

    const FiniteGroup d3 = FiniteGroup::dihedral(3);
    CHECK(d3.order() == 6);
    // r s = element m+1; (rs)^2 = e; s^2 = e; r^3 = e.
    CHECK(d3.mul(1, 3) == 4);
    CHECK(d3.mul(4, 4) == 0);
    CHECK(d3.mul(3, 3) == 0);
    CHECK(d3.mul(1, d3.mul(1, 1)) == 0);
    CHECK(d3.inverse(1) == 2);
    CHECK(d3.inverse(4) == 4);
    CHECK(d3.center() == std::vector<int>{0});

    const FiniteGroup d4 = FiniteGroup::dihedral(4);
    CHECK(d4.center() == std::vector<int>{0, 2});
    CHECK(FiniteGroup::dihedral(2).center().size() == 4);  // abelian

    // from_table round-trips a known group and verifies axioms.
    std::vector<std::vector<int>> klein = {
        {0, 1, 2, 3}, {1, 0, 3, 2}, {2, 3, 0, 1}, {3, 2, 1, 0}};
    const FiniteGroup k4 = FiniteGroup::from_table(klein, "V4");
    CHECK(k4.identity() == 0);
    CHECK(k4.inverse(3) == 3);

    // A relabeled Z/2 with the identity at index 1 is still accepted.
    CHECK(FiniteGroup::from_table({{1, 0}, {0, 1}}, "swapped").identity() == 1);
    std::vector<std::vector<int>> no_identity = {{0, 0}, {0, 0}};
    CHECK_THROWS_AS(FiniteGroup::from_table(no_identity), std::invalid_argument);
    std::vector<std::vector<int>> not_assoc = {
        {0, 1, 2}, {1, 0, 0}, {2, 0, 1}};
    CHECK_THROWS_AS(FiniteGroup::from_table(not_assoc), std::invalid_argument);
    std::vector<std::vector<int>> out_of_range = {{0, 1}, {1, 7}};
    CHECK_THROWS_AS(FiniteGroup::from_table(out_of_range),
                    std::invalid_argument);
}

TEST_CASE("hom enumeration") {
    CHECK(enumerate_homs(GammaGroup::free_group(1), FiniteGroup::cyclic(4))
              .size() == 4);
    CHECK(enumerate_homs(GammaGroup::presented({1, {{1, 1}}}),
                         FiniteGroup::dihedral(3))
              .size() == 4);
    CHECK(enumerate_homs(GammaGroup::z_pow(2), FiniteGroup::dihedral(3))
              .size() == 18);

    // Canonical order is lexicographic on image tuples.
    auto homs = enumerate_homs(GammaGroup::z_pow(2), FiniteGroup::dihedral(3));
    CHECK(std::is_sorted(homs.begin(), homs.end()));
    CHECK(homs.front() == std::vector<int>{0, 0});

    // Budget is measured in candidate tuples |H|^gens.
    HomBudget tiny{.max_candidates = 17};
    CHECK_THROWS_AS(
        enumerate_homs(GammaGroup::z_pow(2), FiniteGroup::cyclic(5), tiny),
        BudgetExceeded);
    CHECK_NOTHROW(
        enumerate_homs(GammaGroup::z_pow(2), FiniteGroup::cyclic(4), tiny));
}

TEST_CASE("conjugation orbit counting") {
    const FiniteGroup d3 = FiniteGroup::dihedral(3);
    CHECK(conjugation_orbit_count(
              d3, enumerate_homs(GammaGroup::z_pow(1), d3)) == 3);
    CHECK(conjugation_orbit_count(
              FiniteGroup::cyclic(4),
              enumerate_homs(GammaGroup::z_pow(1), FiniteGroup::cyclic(4))) ==
          4);
    CHECK(conjugation_orbit_count(
              d3, enumerate_homs(GammaGroup::z_pow(2), d3)) == 8);

    // A list that is not conjugation-closed is rejected.
    CHECK_THROWS_AS(conjugation_orbit_count(d3, {{1}}), std::invalid_argument);
    CHECK_THROWS_AS(conjugation_orbit_count(d3, {{9}}), std::invalid_argument);
}

TEST_CASE("burnside equals union-find across the corpus") {
    for (const auto& [name, gamma] : gamma_corpus()) {
        for (int m = 1; m <= 5; ++m) {
            const FiniteGroup d = FiniteGroup::dihedral(m);
            auto homs = enumerate_homs(gamma, d);
            CAPTURE(name);
            CAPTURE(m);
            CHECK(conjugation_orbit_count(d, homs) ==
                  burnside_orbit_count(d, homs));
        }
        for (int m : {2, 3, 6}) {
            const FiniteGroup c = FiniteGroup::cyclic(m);
            auto homs = enumerate_homs(gamma, c);
            CHECK(EulerValue(homs.size()) == burnside_orbit_count(c, homs));
        }
    }
}

TEST_CASE("abelianization") {
    const Abelianization free2 = abelianize(GammaGroup::free_group(2));
    CHECK(free2.rank == 2);
    CHECK(free2.torsion.empty());

    const Abelianization z2 = abelianize(GammaGroup::z_pow(2));
    CHECK(z2.rank == 2);
    CHECK(z2.torsion.empty());

    const Abelianization mod4 = abelianize(z_mod(4));
    CHECK(mod4.rank == 0);
    CHECK(mod4.torsion == std::vector<EulerValue>{4});

    const Abelianization k4 = abelianize(klein_four());
    CHECK(k4.rank == 0);
    CHECK(k4.torsion == std::vector<EulerValue>{2, 2});

    // S3 abelianizes to Z/2.
    const Abelianization s3 = abelianize(test_support::sym3());
    CHECK(s3.rank == 0);
    CHECK(s3.torsion == std::vector<EulerValue>{2});

    // <a, b | a^2 b^-3>: rank 1, no torsion (SNF of (2 -3)).
    const Abelianization trefoil =
        abelianize(GammaGroup::presented({2, {{1, 1, -2, -2, -2}}}));
    CHECK(trefoil.rank == 1);
    CHECK(trefoil.torsion.empty());
}

TEST_CASE("smith normal form") {
    using M = std::vector<std::vector<EulerValue>>;
    CHECK(smith_normal_diagonal(M{{2, 4}, {4, 8}}) ==
          std::vector<EulerValue>{2, 0});
    CHECK(smith_normal_diagonal(M{{2, 0}, {0, 3}}) ==
          std::vector<EulerValue>{1, 6});
    CHECK(smith_normal_diagonal(M{{6, 0}, {0, 10}}) ==
          std::vector<EulerValue>{2, 30});
    CHECK(smith_normal_diagonal(M{}).empty());
    // Divisibility chain holds on a dense example.
    auto d = smith_normal_diagonal(M{{2, 3, 5}, {7, 11, 13}, {17, 19, 23}});
    REQUIRE(d.size() == 3);
    for (size_t i = 0; i + 1 < d.size(); ++i)
        if (d[i] != 0 && d[i + 1] != 0) CHECK(d[i + 1] % d[i] == 0);
}

TEST_CASE("abelianization is invariant under relator shuffling and inversion") {
    std::mt19937 rng(20260815);
    for (int trial = 0; trial < 200; ++trial) {
        Presentation p = test_support::random_presentation(rng);
        const Abelianization base = abelianize(GammaGroup::presented(p));

        Presentation mutated = p;
        std::shuffle(mutated.relators.begin(), mutated.relators.end(), rng);
        std::bernoulli_distribution flip(0.5);
        for (auto& rel : mutated.relators)
            if (flip(rng)) {  // replace w by w^-1
                std::reverse(rel.begin(), rel.end());
                for (int& idx : rel) idx = -idx;
            }
        CHECK(abelianize(GammaGroup::presented(mutated)) == base);
    }
}

TEST_CASE("chi of Hom into the circle") {
    CHECK(chi_hom_to_circle(GammaGroup::z_pow(3)) == 0);
    CHECK(chi_hom_to_circle(GammaGroup::free_group(2)) == 0);
    CHECK(chi_hom_to_circle(z_mod(4)) == 4);
    CHECK(chi_hom_to_circle(klein_four()) == 4);
    CHECK(chi_hom_to_circle(test_support::sym3()) == 2);
}

TEST_CASE("chi_orbit_hom dispatch") {
    CHECK(chi_orbit_hom(GammaGroup::z_pow(1), IsotropyClass::cyclic(5)) == 5);
    CHECK(chi_orbit_hom(GammaGroup::z_pow(2), IsotropyClass::full_o2()) == 8);
    CHECK(chi_orbit_hom(GammaGroup::free_group(2),
                        IsotropyClass::dihedral(3)) == 11);
    CHECK(chi_orbit_hom(GammaGroup::free_group(2), IsotropyClass::full_o2()) ==
          5);
    CHECK(chi_orbit_hom(z_mod(4), IsotropyClass::circle_so2()) == 4);

    for (const auto& [name, gamma] : gamma_corpus()) {
        CAPTURE(name);
        CHECK(chi_orbit_hom(gamma, IsotropyClass::trivial()) == 1);
        CHECK(chi_orbit_hom(gamma, IsotropyClass::cyclic(1)) == 1);
        // D_2 is Z/2: identical values through both dispatch arms.
        CHECK(chi_orbit_hom(gamma, IsotropyClass::dihedral(1)) ==
              chi_orbit_hom(gamma, IsotropyClass::cyclic(2)));
    }

    // Free(1) is normalized to Z everywhere, including the O(2) closed form.
    CHECK(chi_orbit_hom(GammaGroup::free_group(1), IsotropyClass::full_o2()) ==
          chi_orbit_hom(GammaGroup::z_pow(1), IsotropyClass::full_o2()));
    // A commutator presentation of Z^2 rides the closed-form path too.
    CHECK(chi_orbit_hom(GammaGroup::presented({2, {{1, 2, -1, -2}}}),
                        IsotropyClass::full_o2()) == 8);

    CHECK_THROWS_AS(chi_orbit_hom(z_mod(3), IsotropyClass::full_o2()),
                    UnsupportedGamma);

    // FiniteTable: orbit count through an explicit table.
    CHECK(chi_orbit_hom(GammaGroup::z_pow(1),
                        IsotropyClass::finite_table(FiniteGroup::dihedral(3))) ==
          3);

    // UserSupplied: lookups go through the structural key.
    const IsotropyClass user = IsotropyClass::user_supplied(
        "O2", {{z_mod(3).structural_key(), EulerValue(42)}});
    CHECK(chi_orbit_hom(z_mod(3), user) == 42);
    CHECK_THROWS_AS(chi_orbit_hom(z_mod(5), user), UnsupportedGamma);

    // EvalOptions table unlocks FullO2 for presented gammas.
    std::map<std::string, EulerValue> table{
        {z_mod(3).structural_key(), EulerValue(7)}};
    EvalOptions opts;
    opts.o2_hom_values = &table;
    CHECK(chi_orbit_hom(z_mod(3), IsotropyClass::full_o2(), opts) == 7);
}

TEST_CASE("hom counts into cyclic groups scale as m^l") {
    for (int ell = 1; ell <= 3; ++ell)
        for (int m = 1; m <= 6; ++m)
            CHECK(chi_orbit_hom(GammaGroup::z_pow(ell),
                                IsotropyClass::cyclic(m)) ==
                  pow_ev(m, static_cast<unsigned>(ell)));
}

TEST_CASE("zpow homs are the commuting free homs") {
    for (int m : {3, 4, 5}) {
        const FiniteGroup d = FiniteGroup::dihedral(m);
        auto free_homs = enumerate_homs(GammaGroup::free_group(2), d);
        std::vector<std::vector<int>> commuting;
        for (const auto& t : free_homs)
            if (d.mul(t[0], t[1]) == d.mul(t[1], t[0])) commuting.push_back(t);
        CHECK(enumerate_homs(GammaGroup::z_pow(2), d) == commuting);
    }
}

TEST_CASE("budget env override") {
    HomBudget def = HomBudget::from_env();
    CHECK(def.max_candidates == 100'000'000);  // test env has no override
}

TEST_CASE("concurrent evaluation returns consistent values") {
    const GammaGroup gamma = GammaGroup::z_pow(2);
    std::vector<EulerValue> results(8);
    std::vector<std::thread> threads;
    for (int i = 0; i < 8; ++i)
        threads.emplace_back([&results, &gamma, i] {
            results[i] =
                chi_orbit_hom(gamma, IsotropyClass::dihedral(1 + i % 4));
        });
    for (auto& t : threads) t.join();
    for (int i = 0; i < 8; ++i)
        CHECK(results[i] ==
              chi_orbit_hom(gamma, IsotropyClass::dihedral(1 + i % 4)));
}
