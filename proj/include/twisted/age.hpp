#ifndef TWISTED_AGE_HPP
#define TWISTED_AGE_HPP

#include <map>

#include "twisted/rational.hpp"
#include "twisted/sector.hpp"

namespace twisted {

// How the per-marked-point term of the age formula is evaluated.
//
// Corrected: (N - lambda(i))/N per marked point, where lambda is the
// inverse of i mod N. This is the convention under which twin ages sum
// to the codimension for every N and the marked hyperelliptic sector
// has age (g-2+n)/2.
//
// Printed: (1/N) sum_k k*sigma(k,i), which vanishes at N=2 and breaks
// the twin identity on marked sectors. Kept so the discrepancy stays
// reproducible; see the verify command.
enum class MarkConvention { Corrected, Printed };

// 0 if k*i + gcd(i,N) == 0 mod N, else 1.
inline int sigma_indicator(long k, long i, long N) {
    if (k < 1 || k >= N || i < 1 || i >= N)
        throw std::invalid_argument("sigma_indicator: index out of range");
    return (k * i + gcd_l(i, N)) % N == 0 ? 0 : 1;
}

// Per-branch-point age coefficient:
// T_i = (1/N) sum_{k=1}^{N-1} k * ({ki/N} + sigma(k,i)).
inline Rational point_weight(long i, long N) {
    if (i < 1 || i >= N)
        throw std::invalid_argument("point_weight: index out of range");
    Rational sum(0);
    for (long k = 1; k < N; ++k) {
        Rational term = frac_part(rat(k * i, N)) + Rational(sigma_indicator(k, i, N));
        sum += Rational(k) * term;
    }
    return sum / Rational(N);
}

// Per-marked-point age coefficient; requires gcd(i,N)=1.
inline Rational mark_weight(long i, long N,
                            MarkConvention conv = MarkConvention::Corrected) {
    if (i < 1 || i >= N || gcd_l(i, N) != 1)
        throw std::invalid_argument("mark_weight: index not coprime to order");
    long lambda = mod_inverse(Int(i), Int(N)).get_si();
    if (conv == MarkConvention::Corrected)
        return rat(N - lambda, N);
    // literal reading: (1/N) sum_k k*sigma(k,i) with sigma=0 only at k=N-lambda
    return rat(N * (N - 1) / 2 - (N - lambda), N);
}

// Age split into the base term, the marked-point term, and one term per
// proper divisor sigma of N grouping the i with gcd(i,N)=sigma.
struct AgeBreakdown {
    Rational base;
    Rational mark;
    std::map<long, Rational> per_sigma;
    Rational total;
};

inline AgeBreakdown age_breakdown(const SectorDatum& y,
                                  MarkConvention conv = MarkConvention::Corrected) {
    require_valid(y);
    const long N = y.order;
    AgeBreakdown b;
    b.base = rat((3 * y.g_prime - 3) * (N - 1), 2);
    b.mark = Rational(0);
    for (long s = 1; s < N; ++s)
        if (N % s == 0) b.per_sigma[s] = Rational(0);
    for (long i = 1; i < N; ++i) {
        long sigma = gcd_l(i, N);
        if (sigma == 1 && y.a_at(i) > 0)
            b.mark += Rational(y.a_at(i)) * mark_weight(i, N, conv);
        if (y.d_at(i) > 0)
            b.per_sigma[sigma] += Rational(y.d_at(i)) * point_weight(i, N);
    }
    b.total = b.base + b.mark;
    for (const auto& [sigma, v] : b.per_sigma) b.total += v;
    return b;
}

// Degree-shifting number of the sector.
inline Rational age(const SectorDatum& y,
                    MarkConvention conv = MarkConvention::Corrected) {
    return age_breakdown(y, conv).total;
}

}  // namespace twisted

#endif
