#pragma once

#include <string>
#include <vector>

#include "levigon/bigint.hpp"

namespace levigon {

/// x(x-1)...(x-k+1); x_(0) = 1.
BigInt falling_factorial(const BigInt& x, int k);
BigRat falling_factorial_rat(const BigRat& x, int k);
BigInt binomial(const BigInt& n, int k);

/// "p/q" (or "p" when the denominator is 1).
std::string rat_str(const BigRat& r);

/// Polynomial with exact rational coefficients, c[i] multiplying x^i.
struct RationalPolynomial {
    std::vector<BigRat> c;
    int degree() const;
    BigRat eval(const BigInt& x) const;
    /// Coefficient of x^i (0 beyond the stored degree).
    BigRat coeff(int i) const;
};

struct Sample {
    int n = 0;
    BigInt count;
};
using SampleSet = std::vector<Sample>;

/// `n,count` header then decimal rows.
SampleSet read_counts_csv(const std::string& path);

/// Unique interpolating polynomial of degree <= d through exactly d+1
/// samples (Lagrange form, exact rationals); throws on duplicate n or a
/// wrong sample count, and re-checks itself at every node.
RationalPolynomial fit_exact(const SampleSet& samples, int degree);

struct Table1Report {
    int k = 0;
    bool generic_only = false;               // k outside 3..10
    std::vector<std::string> expected;       // leading coefficients, high power first
    std::vector<std::string> actual;
    std::vector<int> mismatch_positions;     // 1-based position in the row
    bool ok = false;
};

/// Compare the four leading coefficients of a degree-2k fit against the
/// known row for k in 3..10; outside that range only a_{2k} = 1/2k and
/// a_{2k-1} = 0 are checked.
Table1Report table1_check(const RationalPolynomial& poly, int k);

/// The four known leading coefficients (a_{2k} .. a_{2k-3}) for k in 3..10.
std::vector<BigRat> table1_row(int k);

/// Explicit-tail lower bound for the 2k-cycle count at order n >= k >= 4:
/// (1/2k)N_(k) - (1/2)(n-1)N_(k-1) - ((k-1)(k-2)/2k)N_(k-1)
///   - (1/2k)[N(n+1)_(k) + sum_{j=2}^{k-2} j^(k-j) k_(j) C(N,j) (n-1)^(k-j)].
BigRat theorem3_lower(int n, int k);

/// (1/2k)N_(k) - (n-k+2)(k-1)c_prev where c_prev is the exact count of
/// (2k-2)-cycles; n >= k >= 4.
BigRat theorem4_upper(int n, int k, const BigInt& c_prev);

/// (1/2k)(v/2)_(k) for even v >= 2k.
BigRat theorem5_cap(long long v, int k);

struct ConjectureRatio {
    int n = 0;
    BigRat ratio;  // residual divided by n^(2k-4)
};

struct ConjectureReport {
    int k = 0;
    std::vector<ConjectureRatio> ratios;
    bool abs_nonincreasing = false;  // |ratio| weakly decreasing in n
};

/// Residuals of counts against n^2k/2k - ((k-5)/2)n^(2k-2) + (3(k-6)/2)n^(2k-3),
/// each reported exactly as a multiple of n^(2k-4). Informational only.
ConjectureReport conjecture_residuals(int k, const SampleSet& samples);

std::string conjecture_report_json(const ConjectureReport& r);

}  // namespace levigon
