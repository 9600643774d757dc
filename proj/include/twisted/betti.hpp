#ifndef TWISTED_BETTI_HPP
#define TWISTED_BETTI_HPP

#include <optional>
#include <string>
#include <vector>

#include "twisted/rational.hpp"

namespace twisted {

// Dimension of degree k of the free graded ring on generators kappa_i
// (degree 2i, i >= 1) and psi_1..psi_n (degree 2 each): the coefficient
// of t^k in prod_{i>=1} (1-t^{2i})^{-1} * (1-t^2)^{-n}.
inline Int stable_betti(long n, long k) {
    if (n < 0 || k < 0) throw std::invalid_argument("stable_betti: negative input");
    if (k % 2 != 0) return 0;
    long m = k / 2;
    // series in x = t^2, truncated at degree m
    std::vector<Int> c(static_cast<size_t>(m + 1), 0);
    c[0] = 1;
    for (long i = 1; i <= m; ++i)  // kappa_i factor
        for (long j = i; j <= m; ++j)
            c[static_cast<size_t>(j)] += c[static_cast<size_t>(j - i)];
    for (long p = 0; p < n; ++p)  // one psi factor each
        for (long j = 1; j <= m; ++j)
            c[static_cast<size_t>(j)] += c[static_cast<size_t>(j - 1)];
    return c[static_cast<size_t>(m)];
}

struct BettiTable {
    long n = 0;
    long max_degree = 0;
    std::vector<Int> dims;  // dims[k] = dim H^k of the stable ring
};

inline BettiTable betti_table(long n, long max_degree) {
    BettiTable t;
    t.n = n;
    t.max_degree = max_degree;
    for (long k = 0; k <= max_degree; ++k) t.dims.push_back(stable_betti(n, k));
    return t;
}

// 3k+2 <= 2g: degree k is in the stable range for ordinary cohomology.
inline bool harer_iso_range(long g, long k) { return 3 * k + 2 <= 2 * g; }

// k < g-2+n or n > 2g+2: orbifold cohomology agrees with ordinary
// cohomology in degree k.
inline bool orbifold_equals_ordinary(long g, long n, long k) {
    if (2 * g - 2 + n <= 0)
        throw std::invalid_argument("orbifold_equals_ordinary: unstable (g,n)");
    return k < g - 2 + n || n > 2 * g + 2;
}

// k <= min(g-3+n, (2g-2)/3): stability range for orbifold cohomology.
inline bool corollary_range(long g, long n, long k) {
    if (2 * g - 2 + n <= 0)
        throw std::invalid_argument("corollary_range: unstable (g,n)");
    return Rational(k) <= Rational(g - 3 + n) && Rational(k) <= rat(2 * g - 2, 3);
}

// Tri-state orbifold Betti number: a value only when both range
// predicates hold; "unknown" is never conflated with zero.
struct OrbifoldBetti {
    enum class Status { Known, EqualToOrdinaryValueUnavailable, Unavailable };
    Status status = Status::Unavailable;
    std::optional<Int> value;

    std::string reason() const {
        switch (status) {
            case Status::Known: return "";
            case Status::EqualToOrdinaryValueUnavailable:
                return "equal-to-ordinary, value unavailable";
            case Status::Unavailable: return "unavailable";
        }
        return "";
    }
};

inline OrbifoldBetti orbifold_stable_betti(long g, long n, long k) {
    OrbifoldBetti r;
    if (!orbifold_equals_ordinary(g, n, k)) {
        r.status = OrbifoldBetti::Status::Unavailable;
    } else if (!harer_iso_range(g, k)) {
        r.status = OrbifoldBetti::Status::EqualToOrdinaryValueUnavailable;
    } else {
        r.status = OrbifoldBetti::Status::Known;
        r.value = stable_betti(n, k);
    }
    return r;
}

}  // namespace twisted

#endif
