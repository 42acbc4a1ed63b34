#pragma once

#include <cstdint>
#include <vector>

namespace levigon {

/// Exact arithmetic in GF(p^e) with q = p^e <= 2^16.
///
/// Elements are integers 0..q-1 encoding polynomial coefficients in base p
/// (the constant term is the least significant digit). The reduction modulus
/// is the lexicographically smallest monic irreducible of degree e,
/// coefficients compared low-degree-first, so two constructions of the same
/// field are identical and every downstream labeling is reproducible.
class Field {
public:
    static Field make(int p, int e);

    int p() const { return p_; }
    int e() const { return e_; }
    uint32_t q() const { return q_; }
    /// Monic modulus, length e+1, low-degree-first.
    const std::vector<int>& modulus() const { return mod_; }

    uint32_t add(uint32_t a, uint32_t b) const;
    uint32_t neg(uint32_t a) const;
    uint32_t sub(uint32_t a, uint32_t b) const { return add(a, neg(b)); }
    uint32_t mul(uint32_t a, uint32_t b) const;
    uint32_t inv(uint32_t a) const;  // throws std::domain_error on a == 0
    uint32_t pow(uint32_t a, uint64_t n) const;

private:
    Field() = default;
    uint32_t add_raw(uint32_t a, uint32_t b) const;
    uint32_t mul_raw(uint32_t a, uint32_t b) const;
    void check_elem(uint32_t a) const;

    int p_ = 0;
    int e_ = 0;
    uint32_t q_ = 0;
    std::vector<int> mod_;
    bool tabled_ = false;
    std::vector<uint16_t> add_tab_, mul_tab_, neg_tab_, inv_tab_;
};

bool is_prime_u32(uint32_t x);

/// Factor n as p^e with p prime, or return false (used to coordinatize
/// planes requested by order instead of by (p, e)).
bool prime_power(uint32_t n, int& p, int& e);

}  // namespace levigon
