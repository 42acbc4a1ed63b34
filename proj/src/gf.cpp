#include "levigon/gf.hpp"

#include <array>
#include <stdexcept>
#include <string>

namespace levigon {

bool is_prime_u32(uint32_t x) {
    if (x < 2) return false;
    for (uint32_t d = 2; d * d <= x; ++d)
        if (x % d == 0) return false;
    return true;
}

bool prime_power(uint32_t n, int& p, int& e) {
    if (n < 2) return false;
    for (uint32_t d = 2; d * d <= n; ++d) {
        if (n % d == 0) {
            uint32_t m = n;
            int k = 0;
            while (m % d == 0) {
                m /= d;
                ++k;
            }
            if (m != 1) return false;
            p = static_cast<int>(d);
            e = k;
            return true;
        }
    }
    p = static_cast<int>(n);  // n itself prime
    e = 1;
    return true;
}

namespace {

// polynomial remainder, coefficients low-degree-first, den monic
std::vector<int> poly_rem(std::vector<int> num, const std::vector<int>& den, int p) {
    const int dd = static_cast<int>(den.size()) - 1;
    while (!num.empty() && num.back() == 0) num.pop_back();
    while (static_cast<int>(num.size()) - 1 >= dd) {
        const int shift = static_cast<int>(num.size()) - 1 - dd;
        const int lead = num.back();
        for (int i = 0; i <= dd; ++i) {
            int& c = num[shift + i];
            c = ((c - lead * den[i]) % p + p) % p;
        }
        while (!num.empty() && num.back() == 0) num.pop_back();
    }
    return num;
}

bool is_irreducible(const std::vector<int>& poly, int p) {
    const int e = static_cast<int>(poly.size()) - 1;
    for (int d = 1; d <= e / 2; ++d) {
        // all monic candidates of degree d, low-degree-first lex order
        uint64_t total = 1;
        for (int i = 0; i < d; ++i) total *= static_cast<uint64_t>(p);
        for (uint64_t idx = 0; idx < total; ++idx) {
            std::vector<int> den(d + 1, 0);
            uint64_t v = idx;
            for (int i = 0; i < d; ++i) {
                den[i] = static_cast<int>(v % p);
                v /= p;
            }
            den[d] = 1;
            if (poly_rem(poly, den, p).empty()) return false;
        }
    }
    return true;
}

std::vector<int> lex_min_modulus(int p, int e) {
    uint64_t total = 1;
    for (int i = 0; i < e; ++i) total *= static_cast<uint64_t>(p);
    for (uint64_t idx = 0; idx < total; ++idx) {
        std::vector<int> cand(e + 1, 0);
        uint64_t v = idx;
        for (int i = 0; i < e; ++i) {
            cand[i] = static_cast<int>(v % p);
            v /= p;
        }
        cand[e] = 1;
        if (is_irreducible(cand, p)) return cand;
    }
    throw std::logic_error("no irreducible modulus found");  // unreachable
}

}  // namespace

Field Field::make(int p, int e) {
    if (p < 2 || !is_prime_u32(static_cast<uint32_t>(p)))
        throw std::invalid_argument("field characteristic p=" + std::to_string(p) + " is not prime");
    if (e < 1) throw std::invalid_argument("field extension degree must be >= 1");
    // overflow-safe p^e computation against the 2^16 cap
    uint64_t q = 1;
    for (int i = 0; i < e; ++i) {
        q *= static_cast<uint64_t>(p);
        if (q > (1u << 16))
            throw std::invalid_argument("field order p^e exceeds 2^16");
    }
    Field f;
    f.p_ = p;
    f.e_ = e;
    f.q_ = static_cast<uint32_t>(q);
    f.mod_ = lex_min_modulus(p, e);

    if (f.q_ <= 256) {
        f.tabled_ = true;
        const uint32_t n = f.q_;
        f.add_tab_.resize(static_cast<size_t>(n) * n);
        f.mul_tab_.resize(static_cast<size_t>(n) * n);
        f.neg_tab_.resize(n);
        f.inv_tab_.assign(n, 0);
        for (uint32_t a = 0; a < n; ++a)
            for (uint32_t b = 0; b < n; ++b) {
                f.add_tab_[a * n + b] = static_cast<uint16_t>(f.add_raw(a, b));
                f.mul_tab_[a * n + b] = static_cast<uint16_t>(f.mul_raw(a, b));
            }
        for (uint32_t a = 0; a < n; ++a) {
            for (uint32_t b = 0; b < n; ++b) {
                if (f.add_tab_[a * n + b] == 0) f.neg_tab_[a] = static_cast<uint16_t>(b);
                if (a != 0 && f.mul_tab_[a * n + b] == 1) f.inv_tab_[a] = static_cast<uint16_t>(b);
            }
        }
    }
    return f;
}

void Field::check_elem(uint32_t a) const {
    if (a >= q_) throw std::invalid_argument("element out of range for GF(" + std::to_string(q_) + ")");
}

uint32_t Field::add_raw(uint32_t a, uint32_t b) const {
    uint32_t out = 0, mult = 1;
    for (int i = 0; i < e_; ++i) {
        const uint32_t da = a % p_, db = b % p_;
        a /= p_;
        b /= p_;
        out += ((da + db) % p_) * mult;
        mult *= p_;
    }
    return out;
}

uint32_t Field::mul_raw(uint32_t a, uint32_t b) const {
    // schoolbook convolution then reduction by the modulus
    std::array<int, 64> conv{};
    std::array<int, 32> da{}, db{};
    for (int i = 0; i < e_; ++i) {
        da[i] = static_cast<int>(a % p_);
        a /= p_;
        db[i] = static_cast<int>(b % p_);
        b /= p_;
    }
    for (int i = 0; i < e_; ++i) {
        if (da[i] == 0) continue;
        for (int j = 0; j < e_; ++j) conv[i + j] = (conv[i + j] + da[i] * db[j]) % p_;
    }
    for (int i = 2 * e_ - 2; i >= e_; --i) {
        const int c = conv[i];
        if (c == 0) continue;
        conv[i] = 0;
        for (int j = 0; j < e_; ++j) {
            int& t = conv[i - e_ + j];
            t = ((t - c * mod_[j]) % p_ + p_) % p_;
        }
    }
    uint32_t out = 0;
    for (int i = e_ - 1; i >= 0; --i) out = out * p_ + static_cast<uint32_t>(conv[i]);
    return out;
}

uint32_t Field::add(uint32_t a, uint32_t b) const {
    check_elem(a);
    check_elem(b);
    if (tabled_) return add_tab_[a * q_ + b];
    return add_raw(a, b);
}

uint32_t Field::neg(uint32_t a) const {
    check_elem(a);
    if (tabled_) return neg_tab_[a];
    uint32_t out = 0, mult = 1, v = a;
    for (int i = 0; i < e_; ++i) {
        out += ((p_ - v % p_) % p_) * mult;
        v /= p_;
        mult *= p_;
    }
    return out;
}

uint32_t Field::mul(uint32_t a, uint32_t b) const {
    check_elem(a);
    check_elem(b);
    if (tabled_) return mul_tab_[a * q_ + b];
    return mul_raw(a, b);
}

uint32_t Field::pow(uint32_t a, uint64_t n) const {
    check_elem(a);
    uint32_t r = 1;
    while (n) {
        if (n & 1) r = mul(r, a);
        a = mul(a, a);
        n >>= 1;
    }
    return r;
}

uint32_t Field::inv(uint32_t a) const {
    check_elem(a);
    if (a == 0) throw std::domain_error("inverse of zero");
    if (tabled_) return inv_tab_[a];
    return pow(a, q_ - 2);
}

}  // namespace levigon
