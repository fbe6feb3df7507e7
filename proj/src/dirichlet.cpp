#include "pvlab/dirichlet.hpp"

#include <algorithm>
#include <numeric>

namespace pvlab {

namespace {

uint64_t mixed_radix_label(const UnitGroupBasis& basis, const std::vector<uint32_t>& exps) {
    uint64_t label = 0, radix = 1;
    for (size_t i = 0; i < exps.size(); ++i) {
        label += exps[i] * radix;
        radix *= basis.generators[i].order;
    }
    return label;
}

} // namespace

DirichletCharacter::DirichletCharacter(std::shared_ptr<const UnitGroupBasis> basis,
                                       std::vector<uint32_t> exponents)
    : basis_(std::move(basis)), exponents_(std::move(exponents)) {
    if (exponents_.size() != basis_->generators.size())
        throw Error("DirichletCharacter: exponent vector length mismatch");
    for (size_t i = 0; i < exponents_.size(); ++i) {
        if (exponents_[i] >= basis_->generators[i].order)
            throw Error("DirichletCharacter: exponent out of range");
    }
    label_ = mixed_radix_label(*basis_, exponents_);
    denom_ = basis_->group_exponent;
    weights_.resize(exponents_.size());
    for (size_t i = 0; i < exponents_.size(); ++i) {
        weights_[i] = (exponents_[i] * (denom_ / basis_->generators[i].order)) % denom_;
    }
}

bool DirichletCharacter::is_principal() const {
    return std::all_of(exponents_.begin(), exponents_.end(), [](uint32_t e) { return e == 0; });
}

bool DirichletCharacter::eval_num(int64_t n, uint64_t& num_out) const {
    uint64_t r = floor_mod(n, q());
    thread_local std::vector<uint32_t> dl;
    dl.resize(exponents_.size());
    if (!basis_->dlog_vector(r, dl.data())) return false;
    uint64_t acc = 0;
    for (size_t i = 0; i < weights_.size(); ++i) {
        acc = (acc + weights_[i] * dl[i]) % denom_;
    }
    num_out = acc;
    return true;
}

UnityValue DirichletCharacter::eval(int64_t n) const {
    uint64_t num;
    if (!eval_num(n, num)) return UnityValue::zero_value();
    return UnityValue::make(static_cast<int64_t>(num), denom_);
}

DirichletCharacter DirichletCharacter::conjugate() const {
    std::vector<uint32_t> exps(exponents_.size());
    for (size_t i = 0; i < exponents_.size(); ++i) {
        uint64_t d = basis_->generators[i].order;
        exps[i] = static_cast<uint32_t>((d - exponents_[i]) % d);
    }
    return DirichletCharacter(basis_, std::move(exps));
}

std::vector<DirichletCharacter> enumerate_characters(std::shared_ptr<const UnitGroupBasis> basis) {
    std::vector<DirichletCharacter> out;
    out.reserve(basis->phi);
    std::vector<uint32_t> exps(basis->generators.size(), 0);
    while (true) {
        out.emplace_back(basis, exps);
        // mixed-radix increment, first generator fastest => label order
        size_t i = 0;
        for (; i < exps.size(); ++i) {
            if (++exps[i] < basis->generators[i].order) break;
            exps[i] = 0;
        }
        if (i == exps.size()) break;
    }
    return out;
}

std::vector<DirichletCharacter> enumerate_characters(const FactoredModulus& m) {
    return enumerate_characters(std::make_shared<const UnitGroupBasis>(unit_group_basis(m)));
}

DirichletCharacter character_from_label(std::shared_ptr<const UnitGroupBasis> basis, uint64_t label) {
    if (label >= basis->phi) throw Error("character_from_label: label out of range");
    std::vector<uint32_t> exps(basis->generators.size());
    uint64_t rest = label;
    for (size_t i = 0; i < exps.size(); ++i) {
        uint64_t d = basis->generators[i].order;
        exps[i] = static_cast<uint32_t>(rest % d);
        rest /= d;
    }
    return DirichletCharacter(std::move(basis), std::move(exps));
}

uint64_t conductor(const DirichletCharacter& chi) {
    const UnitGroupBasis& basis = chi.basis();
    uint64_t cond = 1;
    for (const auto& comp : basis.components) {
        if (comp.gen_count == 0) continue; // trivial 2-component
        if (comp.prime != 2) {
            // cyclic of order phi(p^k); component character order o = p^a * b
            // with b | p-1 needs exactly a+1 powers of p
            uint64_t d = basis.generators[comp.gen_offset].order;
            uint64_t e = chi.exponents()[comp.gen_offset];
            if (e == 0) continue;
            uint64_t o = d / std::gcd(d, e);
            uint64_t pk = comp.prime;
            while (o % comp.prime == 0) { o /= comp.prime; pk *= comp.prime; }
            cond *= pk;
        } else if (comp.gen_count == 1) {
            // modulus 4
            if (chi.exponents()[comp.gen_offset] != 0) cond *= 4;
        } else {
            // modulus 2^k, k >= 3: exponents (a on -1, b on 5)
            uint64_t a = chi.exponents()[comp.gen_offset];
            uint64_t b = chi.exponents()[comp.gen_offset + 1];
            uint64_t d5 = basis.generators[comp.gen_offset + 1].order;
            if (b != 0) {
                cond *= 4 * (d5 / std::gcd(d5, b)); // 4 * order of the 5-part
            } else if (a != 0) {
                cond *= 4;
            }
        }
    }
    return cond;
}

CharacterAttributes attributes(const DirichletCharacter& chi) {
    CharacterAttributes at{};
    const uint64_t q = chi.q();
    if (q <= 2) {
        at.parity = 1;
    } else {
        UnityValue v = chi.eval(static_cast<int64_t>(q) - 1);
        at.parity = (v == UnityValue::one()) ? 1 : -1;
    }
    uint64_t order = 1;
    for (size_t i = 0; i < chi.exponents().size(); ++i) {
        uint64_t d = chi.basis().generators[i].order;
        order = std::lcm(order, d / std::gcd(d, static_cast<uint64_t>(chi.exponents()[i])));
    }
    at.order = order;
    return at;
}

UnityRoots unity_roots(uint64_t denom) {
    auto roots = std::make_shared<std::vector<std::complex<double>>>(denom);
    for (uint64_t k = 0; k < denom; ++k) {
        (*roots)[k] = unit_root(static_cast<int64_t>(k), denom);
    }
    return roots;
}

CharacterTable character_table(const DirichletCharacter& chi, UnityRoots shared_roots) {
    CharacterTable t;
    t.q = chi.q();
    t.denom = chi.common_denominator();
    if (!shared_roots || shared_roots->size() != t.denom)
        throw Error("character_table: root table size mismatch");
    t.roots = std::move(shared_roots);
    t.num.assign(t.q, CharacterTable::kNonUnit);
    for (uint64_t n = 0; n < t.q; ++n) {
        uint64_t num;
        if (chi.eval_num(static_cast<int64_t>(n), num)) t.num[n] = static_cast<uint32_t>(num);
    }
    return t;
}

CharacterTable character_table(const DirichletCharacter& chi) {
    return character_table(chi, unity_roots(chi.common_denominator()));
}

} // namespace pvlab
