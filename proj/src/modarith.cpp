#include "pvlab/modarith.hpp"

#include <algorithm>
#include <numeric>

namespace pvlab {

FactoredModulus factorize(uint64_t n) {
    if (n == 0) throw Error("factorize: n must be positive");
    if (n >= (1ULL << 32)) throw TooLarge("factorize: moduli are capped at 2^32");
    FactoredModulus out;
    out.q = n;
    uint64_t rest = n;
    for (uint64_t d = 2; d * d <= rest; d += (d == 2) ? 1 : 2) {
        if (rest % d) continue;
        uint32_t e = 0;
        while (rest % d == 0) { rest /= d; ++e; }
        out.factors.emplace_back(d, e);
    }
    if (rest > 1) out.factors.emplace_back(rest, 1);
    out.cubefree = std::all_of(out.factors.begin(), out.factors.end(),
                               [](const auto& f) { return f.second <= 2; });
    return out;
}

uint64_t pow_mod(int64_t b, uint64_t e, uint64_t m) {
    uint64_t base = floor_mod(b, m);
    uint64_t r = 1 % m;
    while (e) {
        if (e & 1) r = mul_mod(r, base, m);
        base = mul_mod(base, base, m);
        e >>= 1;
    }
    return r;
}

uint64_t inv_mod(int64_t a, uint64_t m) {
    int64_t r0 = static_cast<int64_t>(m), r1 = static_cast<int64_t>(floor_mod(a, m));
    int64_t t0 = 0, t1 = 1;
    while (r1 != 0) {
        int64_t qt = r0 / r1;
        r0 -= qt * r1; std::swap(r0, r1);
        t0 -= qt * t1; std::swap(t0, t1);
    }
    if (r0 != 1) throw NotInvertible("inv_mod: gcd(a, m) > 1");
    return floor_mod(t0, m);
}

UnityValue UnityValue::make(int64_t num, uint64_t den) {
    UnityValue u;
    u.zero = false;
    u.num = floor_mod(num, den);
    u.den = den;
    uint64_t g = std::gcd(u.num, u.den);
    if (g > 1) { u.num /= g; u.den /= g; }
    if (u.num == 0) u.den = 1;
    return u;
}

UnityValue UnityValue::operator*(const UnityValue& o) const {
    if (zero || o.zero) return zero_value();
    // e(a/b) * e(c/d) = e((a*d + c*b) / (b*d)); lcm keeps the integers small
    uint64_t l = std::lcm(den, o.den);
    uint64_t sum = (num * (l / den) + o.num * (l / o.den)) % l;
    return make(static_cast<int64_t>(sum), l);
}

std::complex<double> unity_eval(const UnityValue& u) {
    if (u.zero) return {0.0, 0.0};
    return unit_root(static_cast<int64_t>(u.num), u.den);
}

uint64_t euler_phi(const FactoredModulus& m) {
    uint64_t phi = 1;
    for (auto [p, e] : m.factors) {
        uint64_t pe = 1;
        for (uint32_t i = 1; i < e; ++i) pe *= p;
        phi *= pe * (p - 1);
    }
    return phi;
}

namespace {

uint64_t phi_prime_power(uint64_t p, uint32_t e) {
    uint64_t pe = 1;
    for (uint32_t i = 1; i < e; ++i) pe *= p;
    return pe * (p - 1);
}

std::vector<uint64_t> prime_divisors(uint64_t n) {
    std::vector<uint64_t> ps;
    for (uint64_t d = 2; d * d <= n; d += (d == 2) ? 1 : 2) {
        if (n % d) continue;
        ps.push_back(d);
        while (n % d == 0) n /= d;
    }
    if (n > 1) ps.push_back(n);
    return ps;
}

// Smallest primitive root mod p^k (p odd prime), by increasing search.
uint64_t smallest_primitive_root(uint64_t pp, uint64_t order) {
    auto ps = prime_divisors(order);
    for (uint64_t g = 2; g < pp; ++g) {
        if (std::gcd(g, pp) != 1) continue;
        bool ok = true;
        for (uint64_t p : ps) {
            if (pow_mod(static_cast<int64_t>(g), order / p, pp) == 1) { ok = false; break; }
        }
        if (ok) return g;
    }
    throw Error("smallest_primitive_root: none found");
}

// x = a mod m, x = b mod n with gcd(m, n) = 1.
uint64_t crt(uint64_t a, uint64_t m, uint64_t b, uint64_t n) {
    uint64_t mn = m * n;
    uint64_t x = mul_mod(mul_mod(a % m, n % mn, mn), inv_mod(static_cast<int64_t>(n % m), m), mn);
    uint64_t y = mul_mod(mul_mod(b % n, m % mn, mn), inv_mod(static_cast<int64_t>(m % n), n), mn);
    return (x + y) % mn;
}

} // namespace

UnitGroupBasis unit_group_basis(const FactoredModulus& m) {
    if (m.q >= (1ULL << 32)) throw TooLarge("unit_group_basis: q must be < 2^32");
    UnitGroupBasis basis;
    basis.modulus = m;
    basis.phi = euler_phi(m);
    const uint64_t q = m.q;

    for (auto [p, e] : m.factors) {
        UnitGroupBasis::Component comp;
        comp.prime = p;
        comp.exponent = e;
        comp.pp = 1;
        for (uint32_t i = 0; i < e; ++i) comp.pp *= p;
        comp.gen_offset = static_cast<uint32_t>(basis.generators.size());

        std::vector<std::pair<uint64_t, uint64_t>> local; // (residue mod pp, order)
        if (p == 2) {
            if (e == 2) {
                local.emplace_back(3, 2); // -1 mod 4
            } else if (e >= 3) {
                local.emplace_back(comp.pp - 1, 2);          // -1
                local.emplace_back(5, comp.pp / 4);          // order 2^{k-2}
            }
            // e == 1: trivial group, no generators
        } else {
            uint64_t order = phi_prime_power(p, e);
            local.emplace_back(smallest_primitive_root(comp.pp, order), order);
        }
        comp.gen_count = static_cast<uint32_t>(local.size());

        // dlog table over residues mod pp by walking generator powers
        comp.dlog.assign(static_cast<size_t>(comp.pp) * std::max<uint32_t>(comp.gen_count, 1),
                         UnitGroupBasis::kNonUnit);
        if (comp.gen_count == 1) {
            uint64_t g = local[0].first, acc = 1;
            for (uint64_t i = 0; i < local[0].second; ++i) {
                comp.dlog[acc] = static_cast<uint32_t>(i);
                acc = mul_mod(acc, g, comp.pp);
            }
        } else if (comp.gen_count == 2) {
            // residues split as (-1)^a * 5^b mod 2^k
            uint64_t ord5 = local[1].second;
            for (uint32_t a = 0; a < 2; ++a) {
                uint64_t acc = (a == 0) ? 1 : comp.pp - 1;
                for (uint64_t b = 0; b < ord5; ++b) {
                    comp.dlog[acc * 2] = a;
                    comp.dlog[acc * 2 + 1] = static_cast<uint32_t>(b);
                    acc = mul_mod(acc, 5, comp.pp);
                }
            }
        } else if (comp.pp == 2) {
            comp.dlog.assign(2, UnitGroupBasis::kNonUnit);
            comp.dlog[1] = 0; // residue 1 is the whole group; no exponents
        }

        for (auto [res, order] : local) {
            uint64_t lifted = (q == comp.pp) ? res : crt(res, comp.pp, 1, q / comp.pp);
            basis.generators.push_back({lifted, order});
            basis.group_exponent = std::lcm(basis.group_exponent, order);
        }
        basis.components.push_back(std::move(comp));
    }
    return basis;
}

bool UnitGroupBasis::dlog_vector(uint64_t n_mod_q, uint32_t* out) const {
    for (const Component& c : components) {
        uint64_t r = n_mod_q % c.pp;
        if (c.gen_count == 0) {
            if (c.pp == 2 && (r % 2) == 0) return false;
            continue;
        }
        const uint32_t* row = &c.dlog[static_cast<size_t>(r) * c.gen_count];
        if (row[0] == kNonUnit) return false;
        for (uint32_t j = 0; j < c.gen_count; ++j) out[c.gen_offset + j] = row[j];
    }
    return true;
}

uint64_t UnitGroupBasis::reconstruct(const std::vector<uint32_t>& exps) const {
    uint64_t r = 1 % std::max<uint64_t>(q(), 1);
    for (size_t i = 0; i < generators.size(); ++i) {
        r = mul_mod(r, pow_mod(static_cast<int64_t>(generators[i].residue), exps[i], q()), q());
    }
    return r;
}

} // namespace pvlab
