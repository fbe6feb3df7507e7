#pragma once

/* Dirichlet characters mod q as exponent vectors against a UnitGroupBasis.
 * Values are exact roots of unity (UnityValue); dense complex tables are
 * available for the O(q) summation loops.  Labels are the mixed-radix
 * encoding of the exponent vector (generator orders as radices, first
 * generator fastest), so the principal character is always label 0 and
 * enumeration order is label order. */

#include <complex>
#include <cstdint>
#include <memory>
#include <vector>

#include "pvlab/modarith.hpp"

namespace pvlab {

class DirichletCharacter {
public:
    DirichletCharacter(std::shared_ptr<const UnitGroupBasis> basis,
                       std::vector<uint32_t> exponents);

    uint64_t q() const { return basis_->q(); }
    uint64_t label() const { return label_; }
    const std::vector<uint32_t>& exponents() const { return exponents_; }
    const UnitGroupBasis& basis() const { return *basis_; }
    std::shared_ptr<const UnitGroupBasis> basis_ptr() const { return basis_; }

    bool is_principal() const;

    // chi(n): zero exactly when gcd(n, q) > 1, else e(num/den) reduced.
    UnityValue eval(int64_t n) const;

    // Numerator of chi(n) against the fixed denominator common_denominator();
    // false for non-units.  This is the fast exact path used by tables and
    // by the exhaustive multiplicativity tests.
    bool eval_num(int64_t n, uint64_t& num_out) const;
    uint64_t common_denominator() const { return denom_; }

    DirichletCharacter conjugate() const;

    bool operator==(const DirichletCharacter& o) const {
        return q() == o.q() && exponents_ == o.exponents_;
    }

private:
    std::shared_ptr<const UnitGroupBasis> basis_;
    std::vector<uint32_t> exponents_;
    uint64_t label_;
    uint64_t denom_;             // lcm of generator orders
    std::vector<uint64_t> weights_; // exponents_[i] * (denom_ / order_i) mod denom_
};

// All phi(q) characters in label order.
std::vector<DirichletCharacter> enumerate_characters(std::shared_ptr<const UnitGroupBasis> basis);
std::vector<DirichletCharacter> enumerate_characters(const FactoredModulus& m);

// Decode a label; throws Error when label >= phi(q).
DirichletCharacter character_from_label(std::shared_ptr<const UnitGroupBasis> basis, uint64_t label);

// Smallest d | q such that chi is induced by a character mod d (computed
// per prime-power component; the tests cross-check against the brute-force
// definition).
uint64_t conductor(const DirichletCharacter& chi);

inline bool is_primitive(const DirichletCharacter& chi) { return conductor(chi) == chi.q(); }

struct CharacterAttributes {
    int parity;     // chi(-1), +1 or -1
    uint64_t order; // order of chi in the dual group
};
CharacterAttributes attributes(const DirichletCharacter& chi);

// ---------------------------------------------------------------------------
// Dense evaluation table: chi(n) = roots[num[n]] with num[n] the exact
// numerator against `denom`, or kNonUnit.  One build is O(q); lookups feed
// the Gauss-sum and prefix-walk loops.  The root table e(k/denom) depends
// only on the basis, so sweeps share one copy across all chi mod q.
// ---------------------------------------------------------------------------
using UnityRoots = std::shared_ptr<const std::vector<std::complex<double>>>;

UnityRoots unity_roots(uint64_t denom);

struct CharacterTable {
    static constexpr uint32_t kNonUnit = UnitGroupBasis::kNonUnit;

    uint64_t q = 1;
    uint64_t denom = 1;
    std::vector<uint32_t> num; // size q, indexed by n mod q
    UnityRoots roots;          // e(k/denom), k = 0..denom-1

    bool is_unit(uint64_t n) const { return num[n % q] != kNonUnit; }
    std::complex<double> value(uint64_t n) const {
        uint32_t k = num[n % q];
        return k == kNonUnit ? std::complex<double>{0.0, 0.0} : (*roots)[k];
    }
};

CharacterTable character_table(const DirichletCharacter& chi);
CharacterTable character_table(const DirichletCharacter& chi, UnityRoots shared_roots);

} // namespace pvlab
