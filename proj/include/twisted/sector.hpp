#ifndef TWISTED_SECTOR_HPP
#define TWISTED_SECTOR_HPP

#include <algorithm>
#include <numeric>
#include <optional>
#include <string>
#include <vector>

#include "twisted/rational.hpp"

namespace twisted {

// Combinatorial datum of a twisted sector: a connected cyclic cover of
// order N of a genus g' curve with total space of genus g, branch
// multiplicities d_i and marked-point counts a_i for i = 1..N-1.
//
// d and a are dense length-(N-1) vectors; d[i-1] is the multiplicity at
// index i (1-based in the formulas, shifted once here and nowhere else).
struct SectorDatum {
    long g = 0;
    long n = 0;
    long g_prime = 0;
    long order = 2;
    std::vector<long> d;
    std::vector<long> a;

    bool operator==(const SectorDatum&) const = default;

    long d_at(long i) const { return d[static_cast<size_t>(i - 1)]; }
    long a_at(long i) const { return a[static_cast<size_t>(i - 1)]; }

    long sum_d() const { return std::accumulate(d.begin(), d.end(), 0L); }
    long sum_a() const { return std::accumulate(a.begin(), a.end(), 0L); }
};

enum class SectorError {
    Shape,      // wrong vector lengths or negative entries
    Stability,  // 2g-2+n <= 0
    RiemannHurwitz,
    Fan,        // sum i*d_i not divisible by N
    Marks,      // marked-point constraints violated
    Connectivity,
};

inline const char* to_string(SectorError e) {
    switch (e) {
        case SectorError::Shape: return "E_SHAPE";
        case SectorError::Stability: return "E_STABILITY";
        case SectorError::RiemannHurwitz: return "E_RH";
        case SectorError::Fan: return "E_FAN";
        case SectorError::Marks: return "E_MARKS";
        case SectorError::Connectivity: return "E_CONNECT";
    }
    return "E_UNKNOWN";
}

struct ValidationReport {
    std::vector<SectorError> violations;

    bool ok() const { return violations.empty(); }

    std::string message() const {
        std::string out;
        for (auto v : violations) {
            if (!out.empty()) out += ", ";
            out += to_string(v);
        }
        return out.empty() ? "ok" : out;
    }
};

inline long gcd_l(long a, long b) { return std::gcd(a, b); }

// Checks all admissibility conditions and reports every violated one.
inline ValidationReport validate(const SectorDatum& y) {
    ValidationReport rep;
    const long N = y.order;
    if (N < 2 || y.g < 0 || y.n < 0 || y.g_prime < 0 ||
        y.d.size() != static_cast<size_t>(N - 1) ||
        y.a.size() != static_cast<size_t>(N - 1)) {
        rep.violations.push_back(SectorError::Shape);
        return rep;
    }
    for (long i = 1; i < N; ++i)
        if (y.d_at(i) < 0 || y.a_at(i) < 0) {
            rep.violations.push_back(SectorError::Shape);
            return rep;
        }

    if (2 * y.g - 2 + y.n <= 0)
        rep.violations.push_back(SectorError::Stability);

    long rh = N * (2 * y.g_prime - 2);
    long fan = 0;
    for (long i = 1; i < N; ++i) {
        rh += (N - gcd_l(i, N)) * y.d_at(i);
        fan += i * y.d_at(i);
    }
    if (rh != 2 * y.g - 2)
        rep.violations.push_back(SectorError::RiemannHurwitz);
    if (fan % N != 0)
        rep.violations.push_back(SectorError::Fan);

    bool marks_ok = (y.sum_a() == y.n);
    for (long i = 1; i < N; ++i) {
        if (y.a_at(i) > y.d_at(i)) marks_ok = false;
        if (y.a_at(i) != 0 && gcd_l(i, N) != 1) marks_ok = false;
    }
    if (!marks_ok)
        rep.violations.push_back(SectorError::Marks);

    if (y.n == 0 && y.g_prime == 0) {
        long g = N;
        for (long i = 1; i < N; ++i)
            if (y.d_at(i) != 0) g = gcd_l(g, i);
        if (g != 1)
            rep.violations.push_back(SectorError::Connectivity);
    }
    return rep;
}

inline bool is_valid(const SectorDatum& y) { return validate(y).ok(); }

inline void require_valid(const SectorDatum& y) {
    auto rep = validate(y);
    if (!rep.ok())
        throw std::invalid_argument("invalid sector datum: " + rep.message());
}

// Solves the Riemann-Hurwitz relation for the total genus; nullopt when
// the right-hand side is odd or the genus would be negative.
inline std::optional<long> total_genus(long g_prime, long N,
                                       const std::vector<long>& d) {
    if (N < 2 || g_prime < 0 || d.size() != static_cast<size_t>(N - 1))
        throw std::invalid_argument("total_genus: bad shape");
    long rhs = N * (2 * g_prime - 2);
    for (long i = 1; i < N; ++i) {
        if (d[static_cast<size_t>(i - 1)] < 0)
            throw std::invalid_argument("total_genus: negative multiplicity");
        rhs += (N - gcd_l(i, N)) * d[static_cast<size_t>(i - 1)];
    }
    if ((rhs + 2) % 2 != 0) return std::nullopt;
    long g = (rhs + 2) / 2;
    if (g < 0) return std::nullopt;
    return g;
}

// 3g - 3g' - sum d_i + n.
inline long codimension(const SectorDatum& y) {
    require_valid(y);
    return 3 * y.g - 3 * y.g_prime - y.sum_d() + y.n;
}

// 3g' - 3 + sum d_i.
inline long sector_dimension(const SectorDatum& y) {
    require_valid(y);
    return 3 * y.g_prime - 3 + y.sum_d();
}

// The datum of the inverse group element: d and a reversed (i -> N-i).
inline SectorDatum twin(const SectorDatum& y) {
    require_valid(y);
    SectorDatum t = y;
    std::reverse(t.d.begin(), t.d.end());
    std::reverse(t.a.begin(), t.a.end());
    return t;
}

// (g'=0, N=2, d_1=2g+2, a_1=n): the hyperelliptic sector with all
// markings in Weierstrass points.
inline bool is_hyperelliptic(const SectorDatum& y) {
    require_valid(y);
    return y.g_prime == 0 && y.order == 2 && y.d_at(1) == 2 * y.g + 2 &&
           y.a_at(1) == y.n;
}

// Number of actual twisted sectors represented by this datum, i.e. the
// marked-point permutations: binom(n; a_1, ..., a_{N-1}).
inline Int multiplicity(const SectorDatum& y) {
    require_valid(y);
    return multinomial(y.n, y.a);
}

}  // namespace twisted

#endif
