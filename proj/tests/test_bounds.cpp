#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include <cmath>
#include <complex>
#include <numeric>

#include "pvlab/bounds.hpp"
#include "pvlab/util.hpp"

using namespace pvlab;
using Cx = std::complex<double>;

namespace {

std::shared_ptr<const UnitGroupBasis> basis_for(uint64_t q) {
    return std::make_shared<const UnitGroupBasis>(unit_group_basis(factorize(q)));
}

DirichletCharacter find_legendre(uint64_t p) {
    std::vector<int> sym(p, -1);
    sym[0] = 0;
    for (uint64_t x = 1; x < p; ++x) sym[mul_mod(x, x, p)] = 1;
    auto basis = basis_for(p);
    for (const auto& chi : enumerate_characters(basis)) {
        bool ok = true;
        for (uint64_t n = 0; n < p && ok; ++n) {
            UnityValue v = chi.eval(static_cast<int64_t>(n));
            ok = (sym[n] == 0) ? v.zero
                               : (v == (sym[n] == 1 ? UnityValue::one() : UnityValue::make(1, 2)));
        }
        if (ok) return chi;
    }
    FAIL("legendre character not found");
    throw Error("unreachable");
}

// oracle: O((NU)^2) pair enumeration
uint64_t energy_brute(uint64_t q, int64_t M, uint64_t N, uint64_t U) {
    std::vector<uint64_t> prods;
    for (uint64_t j = 1; j <= N; ++j) {
        uint64_t n = floor_mod(M + static_cast<int64_t>(j), q);
        for (uint64_t u = 1; u <= U; ++u) prods.push_back(mul_mod(n, u, q));
    }
    uint64_t cnt = 0;
    for (uint64_t a : prods) {
        for (uint64_t b : prods) cnt += (a == b);
    }
    return cnt;
}

} // namespace

TEST_CASE("congruence energy hand cases") {
    // diagonal only: products 1..10 are distinct below q
    EnergyCount diag = congruence_energy(101, 0, 10, 1);
    CHECK(diag.count == 10);

    // frozen from the calibration run (products <= 50 < q: congruence is
    // integer equality, count = sum of multiplicities squared)
    CHECK(congruence_energy(1009, 0, 10, 5).count == 106);

    EnergyCount tiny = congruence_energy(11, 0, 2, 2);
    CHECK(tiny.count == energy_brute(11, 0, 2, 2));
    CHECK(tiny.count == 6);

    CHECK_THROWS_AS(congruence_energy(11, 0, 3, 2), HypothesisViolated); // 2NU = 12 >= 11
    CHECK_THROWS_AS(congruence_energy(101, 0, 0, 5), Error);
}

TEST_CASE("congruence energy properties") {
    SplitMix64 rng(314);
    for (int i = 0; i < 50; ++i) {
        uint64_t q = next_prime(300 + rng.below(5000));
        uint64_t U = 1 + rng.below(12);
        uint64_t N = 1 + rng.below(120 / U + 1);
        if (2 * N * U >= q) continue;
        int64_t M = static_cast<int64_t>(rng.below(3 * q)) - static_cast<int64_t>(q);
        EnergyCount e = congruence_energy(q, M, N, U);
        CHECK(e.count == energy_brute(q, M, N, U));
        CHECK(e.count >= N * U); // diagonal pairs
        CHECK(e.normalized ==
              doctest::Approx(static_cast<double>(e.count) /
                              (static_cast<double>(N * U) * std::log(static_cast<double>(q))))
                  .epsilon(1e-12));
    }
}

TEST_CASE("burgess complete sum") {
    // V = 1: the rational value is 1 wherever defined, so the inner sum
    // counts lambda with lambda + 1 invertible
    for (uint64_t p : {13ULL, 101ULL, 199ULL}) {
        auto chi = character_from_label(basis_for(p), 1);
        BurgessEnergy e = burgess_complete_sum(chi, 1, 2);
        CHECK(e.value == doctest::Approx(static_cast<double>(p - 1)).epsilon(1e-9));
        CHECK(e.normalized ==
              doctest::Approx(e.value / std::sqrt(static_cast<double>(p))).epsilon(1e-12));
    }
    {
        // composite modulus: V = 1 counts lambda with gcd(lambda+1, q) = 1
        auto chi = character_from_label(basis_for(45), 1);
        BurgessEnergy e = burgess_complete_sum(chi, 1, 2);
        CHECK(e.value == doctest::Approx(static_cast<double>(euler_phi(factorize(45)))).epsilon(1e-9));
    }

    // independent re-evaluation: single character value of the modular
    // rational (num * inv(den)), zero when either part is non-invertible
    {
        DirichletCharacter chi = find_legendre(101);
        const uint64_t q = 101, V = 2, r = 2;
        double expect = 0.0;
        for (uint64_t v1 = 1; v1 <= V; ++v1)
        for (uint64_t v2 = 1; v2 <= V; ++v2)
        for (uint64_t v3 = 1; v3 <= V; ++v3)
        for (uint64_t v4 = 1; v4 <= V; ++v4) {
            Cx inner{0, 0};
            for (uint64_t lam = 1; lam <= q; ++lam) {
                uint64_t num = mul_mod((lam + v1) % q, (lam + v2) % q, q);
                uint64_t den = mul_mod((lam + v3) % q, (lam + v4) % q, q);
                if (std::gcd(num, q) != 1 || std::gcd(den, q) != 1) continue;
                uint64_t val = mul_mod(num, inv_mod(static_cast<int64_t>(den), q), q);
                inner += unity_eval(chi.eval(static_cast<int64_t>(val)));
            }
            expect += std::abs(inner);
        }
        BurgessEnergy e = burgess_complete_sum(chi, V, r);
        CHECK(e.value == doctest::Approx(expect).epsilon(1e-9));
        CHECK(e.value >= 0.0);
        CHECK(e.normalized ==
              doctest::Approx(e.value / (std::sqrt(101.0) * 16.0)).epsilon(1e-12));
    }

    auto chi211 = character_from_label(basis_for(211), 1);
    CHECK_THROWS_AS(burgess_complete_sum(chi211, 2, 2), TooLarge);       // q > 200
    auto chi101 = character_from_label(basis_for(101), 1);
    CHECK_THROWS_AS(burgess_complete_sum(chi101, 5, 2), TooLarge);       // V > 4
    CHECK_THROWS_AS(burgess_complete_sum(chi101, 2, 3), TooLarge);       // r != 2
}

TEST_CASE("long sum ratio") {
    {
        // epsilon pushing the exponent negative: empty interval, value 0
        RatioRecord rec = long_sum_ratio(find_legendre(7), 0.9);
        CHECK(rec.value == 0.0);
        CHECK(rec.quantity == RatioQuantity::long_sum);
    }
    {
        DirichletCharacter chi = find_legendre(1009);
        RatioRecord rec = long_sum_ratio(chi, 0.05);
        // oracle: exhaustive M scan with independently computed interval sums
        uint64_t N = floor_pow(1009, 1.0 - 0.25 - 0.05);
        PrefixWalk w = prefix_walk(chi);
        double brute = 0.0;
        for (uint64_t m = 0; m < 1009; ++m) {
            brute = std::max(brute, partial_sum(w, static_cast<int64_t>(m), N).abs);
        }
        CHECK(rec.value == doctest::Approx(brute / std::sqrt(1009.0)).epsilon(1e-12));
        CHECK(rec.value <= max_interval_sum(chi).abs / std::sqrt(1009.0) + 1e-12);
        bool has_n = false;
        for (const auto& [k, v] : rec.params) {
            if (k == "N") {
                has_n = true;
                CHECK(v == doctest::Approx(static_cast<double>(N)));
            }
        }
        CHECK(has_n);
    }
    // imprimitive characters are rejected
    auto basis15 = basis_for(15);
    for (const auto& chi : enumerate_characters(basis15)) {
        if (is_primitive(chi)) continue;
        CHECK_THROWS_AS(long_sum_ratio(chi, 0.05), NotPrimitive);
        break;
    }
}

TEST_CASE("theorem ratio") {
    DirichletCharacter leg7 = find_legendre(7);
    RatioRecord rec = theorem_check(leg7);
    // cubefree c = 1/4, max |S| = 2: ratio = 2 / ((1/pi^2) sqrt(7) ln 7)
    double expected = 2.0 / ((1.0 / (kPi * kPi)) * std::sqrt(7.0) * std::log(7.0));
    CHECK(rec.value == doctest::Approx(expected).epsilon(1e-12));
    CHECK(rec.value == doctest::Approx(3.834).epsilon(1e-3)); // the o(1) dominates here
    CHECK(rec.value > 0.0);
    CHECK(rec.quantity == RatioQuantity::theorem);

    for (const auto& chi : enumerate_characters(basis_for(15))) {
        if (is_primitive(chi)) continue;
        CHECK_THROWS_AS(theorem_check(chi), NotPrimitive);
        break;
    }
}

TEST_CASE("twisted ratios") {
    DirichletCharacter leg7 = find_legendre(7);
    RatioRecord rec = twisted_ratio(leg7, 0.5, 6);
    CHECK(rec.value ==
          doctest::Approx(std::abs(twisted_sum(leg7, 0.5, 6)) * std::log(7.0) / 6.0)
              .epsilon(1e-12));
    CHECK(rec.quantity == RatioQuantity::twisted);

    auto chi = character_from_label(basis_for(13), 1);
    DirichletCharacter psi = find_legendre(3);
    RatioRecord brec = burgess_twisted_ratio(chi, psi, 2, 0, 12);
    double denom = 3.0 * std::pow(12.0, 0.5) * std::pow(13.0, 3.0 / 16.0);
    CHECK(brec.value ==
          doctest::Approx(std::abs(psi_twisted_sum(chi, psi, 0, 12)) / denom).epsilon(1e-12));
    CHECK(brec.quantity == RatioQuantity::burgess_twisted);
    CHECK_THROWS_AS(burgess_twisted_ratio(chi, psi, 1, 0, 12), Error);
}
