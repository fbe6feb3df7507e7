#include "pvlab/bounds.hpp"

#include <algorithm>
#include <cmath>

namespace pvlab {

EnergyCount congruence_energy(uint64_t q, int64_t M, uint64_t N, uint64_t U) {
    if (q < 3) throw Error("congruence_energy: q must be >= 3");
    if (N == 0 || U == 0) throw Error("congruence_energy: N and U must be positive");
    if (static_cast<__uint128_t>(2) * N * U >= q)
        throw HypothesisViolated("congruence_energy: need 2NU < q");
    if (N * U > 100'000'000ULL) throw TooLarge("congruence_energy: NU too large");

    std::vector<uint64_t> products;
    products.reserve(N * U);
    uint64_t n0 = floor_mod(M, q);
    for (uint64_t j = 0; j < N; ++j) {
        n0 = (n0 + 1 == q) ? 0 : n0 + 1;
        for (uint64_t u = 1; u <= U; ++u) {
            products.push_back(mul_mod(n0, u, q));
        }
    }
    std::sort(products.begin(), products.end());
    uint64_t count = 0;
    for (size_t i = 0; i < products.size();) {
        size_t j = i;
        while (j < products.size() && products[j] == products[i]) ++j;
        uint64_t mult = j - i;
        count += mult * mult;
        i = j;
    }
    EnergyCount out{q, M, N, U, count, 0.0};
    out.normalized = static_cast<double>(count) /
                     (static_cast<double>(N) * static_cast<double>(U) * std::log(static_cast<double>(q)));
    return out;
}

BurgessEnergy burgess_complete_sum(const DirichletCharacter& chi, uint64_t V, uint64_t r) {
    const uint64_t q = chi.q();
    if (r != 2 || V < 1 || V > 4 || q > 200)
        throw TooLarge("burgess_complete_sum: desk scale is r = 2, V <= 4, q <= 200");

    CharacterTable tab = character_table(chi);
    const uint64_t tuple_len = 2 * r;
    std::vector<uint64_t> v(tuple_len, 1);
    PairwiseAccumulator<double> total;
    while (true) {
        PairwiseAccumulator<std::complex<double>> inner;
        for (uint64_t lam = 1; lam <= q; ++lam) {
            std::complex<double> term{1.0, 0.0};
            bool unit = true;
            for (uint64_t i = 0; i < tuple_len && unit; ++i) {
                uint64_t arg = (lam + v[i]) % q;
                if (!tab.is_unit(arg)) { unit = false; break; }
                std::complex<double> cv = tab.value(arg);
                term *= (i < r) ? cv : std::conj(cv);
            }
            if (unit) inner.add(term);
        }
        total.add(std::abs(inner.total()));
        // odometer over [1, V]^{2r}
        uint64_t i = 0;
        for (; i < tuple_len; ++i) {
            if (++v[i] <= V) break;
            v[i] = 1;
        }
        if (i == tuple_len) break;
    }
    BurgessEnergy out;
    out.value = total.total();
    double scale = std::sqrt(static_cast<double>(q));
    for (uint64_t i = 0; i < tuple_len; ++i) scale *= static_cast<double>(V);
    out.normalized = out.value / scale;
    return out;
}

const char* to_string(RatioQuantity q) {
    switch (q) {
        case RatioQuantity::long_sum: return "long_sum";
        case RatioQuantity::theorem: return "theorem";
        case RatioQuantity::twisted: return "twisted";
        case RatioQuantity::burgess_twisted: return "burgess_twisted";
    }
    return "?";
}

RatioRecord long_sum_ratio(const DirichletCharacter& chi, double epsilon) {
    if (!is_primitive(chi)) throw NotPrimitive("long_sum_ratio: chi must be primitive");
    const uint64_t q = chi.q();
    double c = pv_theorem_constant(chi.basis().modulus.cubefree);
    uint64_t N = floor_pow(q, 1.0 - c - epsilon);
    if (N >= q) N = q - 1;
    RatioRecord rec{q, chi.label(), RatioQuantity::long_sum, 0.0, {}};
    rec.params = {{"N", static_cast<double>(N)}, {"epsilon", epsilon}, {"c", c}};
    if (N == 0) return rec;
    PrefixWalk w = prefix_walk(chi);
    rec.value = max_windowed_abs(w, N) / std::sqrt(static_cast<double>(q));
    return rec;
}

RatioRecord theorem_check(const DirichletCharacter& chi) {
    if (!is_primitive(chi)) throw NotPrimitive("theorem_check: chi must be primitive");
    const uint64_t q = chi.q();
    if (q < 3) throw Error("theorem_check: q must be >= 3");
    double c = pv_theorem_constant(chi.basis().modulus.cubefree);
    IntervalSumRecord rec = max_interval_sum(chi);
    double dq = static_cast<double>(q);
    double denom = 4.0 * c / (kPi * kPi) * std::sqrt(dq) * std::log(dq);
    RatioRecord out{q, chi.label(), RatioQuantity::theorem, rec.abs / denom, {}};
    out.params = {{"c", c},
                  {"M", static_cast<double>(rec.M)},
                  {"N", static_cast<double>(rec.N)}};
    return out;
}

RatioRecord twisted_ratio(const DirichletCharacter& chi, double alpha, uint64_t N) {
    const uint64_t q = chi.q();
    if (q < 3) throw Error("twisted_ratio: q must be >= 3");
    if (N == 0 || N > q) throw Error("twisted_ratio: need 1 <= N <= q");
    double v = std::abs(twisted_sum(chi, alpha, N));
    RatioRecord out{q, chi.label(), RatioQuantity::twisted,
                    v * std::log(static_cast<double>(q)) / static_cast<double>(N), {}};
    out.params = {{"alpha", alpha}, {"N", static_cast<double>(N)}};
    return out;
}

RatioRecord burgess_twisted_ratio(const DirichletCharacter& chi, const DirichletCharacter& psi,
                                  uint64_t r, int64_t M, uint64_t N) {
    if (r < 2) throw Error("burgess_twisted_ratio: r must be >= 2");
    if (N == 0) throw Error("burgess_twisted_ratio: N must be positive");
    const uint64_t q = chi.q();
    const uint64_t k = psi.q();
    double v = std::abs(psi_twisted_sum(chi, psi, M, N));
    double dr = static_cast<double>(r);
    double denom = static_cast<double>(k) *
                   std::pow(static_cast<double>(N), 1.0 - 1.0 / dr) *
                   std::pow(static_cast<double>(q), (dr + 1.0) / (4.0 * dr * dr));
    RatioRecord out{q, chi.label(), RatioQuantity::burgess_twisted, v / denom, {}};
    out.params = {{"k", static_cast<double>(k)},
                  {"r", static_cast<double>(r)},
                  {"M", static_cast<double>(M)},
                  {"N", static_cast<double>(N)}};
    return out;
}

} // namespace pvlab
