#include "levigon/poly.hpp"

#include <fstream>
#include <sstream>
#include <stdexcept>

#include <json.hpp>

namespace levigon {

BigInt falling_factorial(const BigInt& x, int k) {
    if (k < 0) throw std::invalid_argument("falling factorial needs k >= 0");
    BigInt r = 1;
    for (int i = 0; i < k; ++i) r *= x - i;
    return r;
}

BigRat falling_factorial_rat(const BigRat& x, int k) {
    if (k < 0) throw std::invalid_argument("falling factorial needs k >= 0");
    BigRat r = 1;
    for (int i = 0; i < k; ++i) r *= x - i;
    return r;
}

BigInt binomial(const BigInt& n, int k) {
    if (k < 0) return 0;
    BigInt num = falling_factorial(n, k);
    BigInt den = 1;
    for (int i = 2; i <= k; ++i) den *= i;
    return num / den;
}

std::string rat_str(const BigRat& r) {
    const BigInt num = boost::multiprecision::numerator(r);
    const BigInt den = boost::multiprecision::denominator(r);
    if (den == 1) return num.str();
    return num.str() + "/" + den.str();
}

int RationalPolynomial::degree() const {
    for (int i = static_cast<int>(c.size()) - 1; i >= 0; --i)
        if (c[i] != 0) return i;
    return 0;
}

BigRat RationalPolynomial::eval(const BigInt& x) const {
    BigRat acc = 0;
    for (int i = static_cast<int>(c.size()) - 1; i >= 0; --i) acc = acc * BigRat(x) + c[i];
    return acc;
}

BigRat RationalPolynomial::coeff(int i) const {
    if (i < 0 || i >= static_cast<int>(c.size())) return 0;
    return c[i];
}

SampleSet read_counts_csv(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw std::invalid_argument("cannot open counts file: " + path);
    std::string line;
    if (!std::getline(in, line)) throw std::invalid_argument("empty counts file");
    if (!line.empty() && line.back() == '\r') line.pop_back();
    if (line != "n,count") throw std::invalid_argument("counts file must start with header 'n,count'");
    SampleSet out;
    size_t lineno = 1;
    while (std::getline(in, line)) {
        ++lineno;
        if (!line.empty() && line.back() == '\r') line.pop_back();
        if (line.empty()) continue;
        const auto comma = line.find(',');
        if (comma == std::string::npos)
            throw std::invalid_argument("counts file line " + std::to_string(lineno) + ": missing comma");
        try {
            Sample s;
            s.n = std::stoi(line.substr(0, comma));
            s.count = BigInt(line.substr(comma + 1));
            out.push_back(std::move(s));
        } catch (const std::exception&) {
            throw std::invalid_argument("counts file line " + std::to_string(lineno) + ": bad row");
        }
    }
    for (size_t i = 0; i + 1 < out.size(); ++i)
        if (out[i].n >= out[i + 1].n)
            throw std::invalid_argument("counts file: n values must be strictly increasing");
    return out;
}

RationalPolynomial fit_exact(const SampleSet& samples, int degree) {
    if (degree < 0) throw std::invalid_argument("degree must be >= 0");
    if (static_cast<int>(samples.size()) != degree + 1)
        throw std::invalid_argument("interpolation of degree " + std::to_string(degree) + " needs exactly " +
                                    std::to_string(degree + 1) + " samples, got " +
                                    std::to_string(samples.size()));
    for (size_t i = 0; i < samples.size(); ++i)
        for (size_t j = i + 1; j < samples.size(); ++j)
            if (samples[i].n == samples[j].n)
                throw std::invalid_argument("duplicate sample point n=" + std::to_string(samples[i].n));

    RationalPolynomial out;
    out.c.assign(degree + 1, BigRat(0));
    std::vector<BigRat> basis;  // numerator polynomial of one Lagrange term
    for (size_t i = 0; i < samples.size(); ++i) {
        basis.assign(1, BigRat(1));
        BigRat denom = 1;
        for (size_t j = 0; j < samples.size(); ++j) {
            if (j == i) continue;
            // multiply basis by (x - n_j)
            basis.push_back(0);
            for (size_t t = basis.size() - 1; t > 0; --t)
                basis[t] = basis[t - 1] - BigRat(samples[j].n) * basis[t];
            basis[0] = -BigRat(samples[j].n) * basis[0];
            denom *= BigRat(samples[i].n) - BigRat(samples[j].n);
        }
        const BigRat scale = BigRat(samples[i].count) / denom;
        for (size_t t = 0; t < basis.size(); ++t) out.c[t] += basis[t] * scale;
    }

    for (const auto& s : samples)
        if (out.eval(BigInt(s.n)) != BigRat(s.count))
            throw std::logic_error("interpolation failed to reproduce its own samples");
    return out;
}

std::vector<BigRat> table1_row(int k) {
    auto r = [](long long num, long long den) { return BigRat(BigInt(num), BigInt(den)); };
    switch (k) {
        case 3: return {r(1, 6), r(1, 3), r(1, 3), r(1, 6)};
        case 4: return {r(1, 8), r(0, 1), r(-1, 8), r(-1, 8)};
        case 5: return {r(1, 10), r(0, 1), r(0, 1), r(-1, 10)};
        case 6: return {r(1, 12), r(0, 1), r(-1, 2), r(0, 1)};
        case 7: return {r(1, 14), r(0, 1), r(-1, 1), r(3, 2)};
        case 8: return {r(1, 16), r(0, 1), r(-3, 2), r(3, 1)};
        case 9: return {r(1, 18), r(0, 1), r(-2, 1), r(9, 2)};
        case 10: return {r(1, 20), r(0, 1), r(-5, 2), r(6, 1)};
        default: throw std::invalid_argument("coefficient table covers k = 3..10");
    }
}

Table1Report table1_check(const RationalPolynomial& poly, int k) {
    if (k < 3) throw std::invalid_argument("table check needs k >= 3");
    Table1Report rep;
    rep.k = k;
    std::vector<BigRat> expected;
    if (k <= 10) {
        expected = table1_row(k);
    } else {
        rep.generic_only = true;
        expected = {BigRat(1, BigInt(2 * k)), BigRat(0)};
    }
    for (size_t i = 0; i < expected.size(); ++i) {
        const BigRat actual = poly.coeff(2 * k - static_cast<int>(i));
        rep.expected.push_back(rat_str(expected[i]));
        rep.actual.push_back(rat_str(actual));
        if (actual != expected[i]) rep.mismatch_positions.push_back(static_cast<int>(i) + 1);
    }
    rep.ok = rep.mismatch_positions.empty();
    return rep;
}

BigRat theorem3_lower(int n, int k) {
    if (!(n >= k && k >= 4))
        throw std::invalid_argument("lower bound requires n >= k >= 4");
    const BigInt N = BigInt(n) * n + n + 1;
    const BigRat inv2k(BigInt(1), BigInt(2 * k));
    BigRat bound = inv2k * BigRat(falling_factorial(N, k));
    bound -= BigRat(BigInt(n - 1), BigInt(2)) * BigRat(falling_factorial(N, k - 1));
    bound -= BigRat(BigInt((k - 1) * (k - 2)), BigInt(2 * k)) * BigRat(falling_factorial(N, k - 1));
    BigInt tail = N * falling_factorial(BigInt(n + 1), k);
    for (int j = 2; j <= k - 2; ++j) {
        BigInt term = boost::multiprecision::pow(BigInt(j), k - j);
        term *= falling_factorial(BigInt(k), j);
        term *= binomial(N, j);
        term *= boost::multiprecision::pow(BigInt(n - 1), k - j);
        tail += term;
    }
    bound -= inv2k * BigRat(tail);
    return bound;
}

BigRat theorem4_upper(int n, int k, const BigInt& c_prev) {
    if (!(n >= k && k >= 4))
        throw std::invalid_argument("upper bound requires n >= k >= 4");
    const BigInt N = BigInt(n) * n + n + 1;
    BigRat bound = BigRat(BigInt(1), BigInt(2 * k)) * BigRat(falling_factorial(N, k));
    bound -= BigRat(BigInt(n - k + 2) * (k - 1) * c_prev);
    return bound;
}

BigRat theorem5_cap(long long v, int k) {
    if (v % 2 != 0) throw std::invalid_argument("cap applies to even vertex counts");
    if (v < 2 * k) throw std::invalid_argument("cap needs v >= 2k");
    return BigRat(falling_factorial(BigInt(v / 2), k), BigInt(2 * k));
}

ConjectureReport conjecture_residuals(int k, const SampleSet& samples) {
    if (k < 6) throw std::invalid_argument("residual analysis is stated for k >= 6");
    if (samples.empty()) throw std::invalid_argument("residual analysis needs at least one sample");
    ConjectureReport rep;
    rep.k = k;
    for (const auto& s : samples) {
        const BigInt n(s.n);
        BigRat predicted = BigRat(boost::multiprecision::pow(n, 2 * k), BigInt(2 * k));
        predicted -= BigRat(BigInt(k - 5), BigInt(2)) * BigRat(boost::multiprecision::pow(n, 2 * k - 2));
        predicted += BigRat(BigInt(3) * (k - 6), BigInt(2)) * BigRat(boost::multiprecision::pow(n, 2 * k - 3));
        const BigRat residual = BigRat(s.count) - predicted;
        rep.ratios.push_back({s.n, residual / BigRat(boost::multiprecision::pow(n, 2 * k - 4))});
    }
    rep.abs_nonincreasing = true;
    for (size_t i = 0; i + 1 < rep.ratios.size(); ++i)
        if (abs(rep.ratios[i].ratio) < abs(rep.ratios[i + 1].ratio)) rep.abs_nonincreasing = false;
    return rep;
}

std::string conjecture_report_json(const ConjectureReport& r) {
    nlohmann::json j;
    j["k"] = r.k;
    j["abs_nonincreasing"] = r.abs_nonincreasing;
    nlohmann::json arr = nlohmann::json::array();
    for (const auto& x : r.ratios) arr.push_back({{"n", x.n}, {"ratio", rat_str(x.ratio)}});
    j["residual_ratios"] = arr;
    return j.dump();
}

}  // namespace levigon
