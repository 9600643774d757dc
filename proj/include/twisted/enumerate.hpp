#ifndef TWISTED_ENUMERATE_HPP
#define TWISTED_ENUMERATE_HPP

#include <functional>
#include <map>
#include <optional>
#include <tuple>
#include <vector>

#include "twisted/age.hpp"
#include "twisted/sector.hpp"

namespace twisted {

struct SectorRecord {
    SectorDatum datum;
    Rational age;
    long codim = 0;
    long dim = 0;
    Int multiplicity = 1;
    bool hyperelliptic = false;
    size_t twin_index = 0;  // position of the twin within the same result
};

struct EnumerationResult {
    long g = 0;
    long n = 0;
    std::vector<SectorRecord> records;
    std::map<long, long> count_by_gprime;
    std::map<long, long> count_by_sum_d;
    std::map<long, long> count_by_order;

    long total() const { return static_cast<long>(records.size()); }
};

// Loop bound for the order of a cyclic automorphism of a genus-g curve
// (Wiman's bound for g >= 2). sanity_sweep defends it empirically.
inline long order_bound(long g) {
    if (g < 0) throw std::invalid_argument("order_bound: negative genus");
    return g >= 2 ? 4 * g + 2 : 6;
}

namespace detail {

inline std::tuple<long, long, const std::vector<long>&, const std::vector<long>&>
canonical_key(const SectorDatum& y) {
    return {y.order, y.g_prime, y.d, y.a};
}

// All d-vectors of length N-1 with sum (N-gcd(i,N))*d_i = budget and
// sum i*d_i = 0 mod N.
inline void solve_branch_vectors(long N, long budget,
                                 const std::function<void(const std::vector<long>&)>& emit) {
    std::vector<long> d(static_cast<size_t>(N - 1), 0);
    std::function<void(long, long, long)> rec = [&](long i, long left, long fan) {
        if (i == N) {
            if (left == 0 && fan % N == 0) emit(d);
            return;
        }
        long w = N - gcd_l(i, N);
        for (long v = 0; v * w <= left; ++v) {
            d[static_cast<size_t>(i - 1)] = v;
            rec(i + 1, left - v * w, fan + i * v);
        }
        d[static_cast<size_t>(i - 1)] = 0;
    };
    rec(1, budget, 0);
}

// All a-vectors over the coprime indices with sum a_i = n, a_i <= d_i.
inline void solve_mark_vectors(long N, long n, const std::vector<long>& d,
                               const std::function<void(const std::vector<long>&)>& emit) {
    std::vector<long> coprime;
    for (long i = 1; i < N; ++i)
        if (gcd_l(i, N) == 1) coprime.push_back(i);
    std::vector<long> a(static_cast<size_t>(N - 1), 0);
    std::function<void(size_t, long)> rec = [&](size_t j, long left) {
        if (j == coprime.size()) {
            if (left == 0) emit(a);
            return;
        }
        long i = coprime[j];
        long cap = std::min(left, d[static_cast<size_t>(i - 1)]);
        for (long v = 0; v <= cap; ++v) {
            a[static_cast<size_t>(i - 1)] = v;
            rec(j + 1, left - v);
        }
        a[static_cast<size_t>(i - 1)] = 0;
    };
    rec(0, n);
}

inline bool connectivity_ok(const SectorDatum& y) {
    if (y.n != 0 || y.g_prime != 0) return true;
    long g = y.order;
    for (long i = 1; i < y.order; ++i)
        if (y.d_at(i) != 0) g = gcd_l(g, i);
    return g == 1;
}

// Core solver: every valid datum with the given (g,n) and order N.
inline void sectors_of_order(long g, long n, long N,
                             const std::function<void(const SectorDatum&)>& emit) {
    for (long gp = 0; N * (2 * gp - 2) <= 2 * g - 2; ++gp) {
        long budget = 2 * g - 2 - N * (2 * gp - 2);
        solve_branch_vectors(N, budget, [&](const std::vector<long>& d) {
            SectorDatum y{g, n, gp, N, d, std::vector<long>(static_cast<size_t>(N - 1), 0)};
            if (!connectivity_ok(y)) return;
            solve_mark_vectors(N, n, d, [&](const std::vector<long>& a) {
                y.a = a;
                emit(y);
            });
        });
    }
}

}  // namespace detail

// Complete duplicate-free enumeration of the (g,n)-admissible data, in
// canonical order (N, g', d lex, a lex). The untwisted sector is not
// included.
inline EnumerationResult enumerate_sectors(long g, long n,
                                           MarkConvention conv = MarkConvention::Corrected,
                                           std::optional<long> max_order = std::nullopt) {
    if (2 * g - 2 + n <= 0)
        throw std::invalid_argument("enumerate_sectors: E_STABILITY (2g-2+n <= 0)");
    EnumerationResult res;
    res.g = g;
    res.n = n;
    std::vector<SectorDatum> data;
    long bound = max_order.value_or(order_bound(g));
    for (long N = 2; N <= bound; ++N)
        detail::sectors_of_order(g, n, N, [&](const SectorDatum& y) { data.push_back(y); });
    std::sort(data.begin(), data.end(), [](const SectorDatum& x, const SectorDatum& y) {
        return detail::canonical_key(x) < detail::canonical_key(y);
    });

    std::map<std::tuple<long, long, std::vector<long>, std::vector<long>>, size_t> index;
    for (size_t k = 0; k < data.size(); ++k)
        index[{data[k].order, data[k].g_prime, data[k].d, data[k].a}] = k;

    for (const auto& y : data) {
        SectorRecord r;
        r.datum = y;
        r.age = age(y, conv);
        r.codim = codimension(y);
        r.dim = sector_dimension(y);
        r.multiplicity = multiplicity(y);
        r.hyperelliptic = is_hyperelliptic(y);
        SectorDatum t = twin(y);
        r.twin_index = index.at({t.order, t.g_prime, t.d, t.a});
        res.records.push_back(std::move(r));
        res.count_by_gprime[y.g_prime]++;
        res.count_by_sum_d[y.sum_d()]++;
        res.count_by_order[y.order]++;
    }
    return res;
}

// Scans the orders in (order_bound(g), factor*order_bound(g)] and
// returns a counterexample datum if any admissible one exists there.
inline std::optional<SectorDatum> sanity_sweep(long g, long factor) {
    if (g < 1 || factor < 2)
        throw std::invalid_argument("sanity_sweep: need g >= 1, factor >= 2");
    long lo = order_bound(g);
    std::optional<SectorDatum> found;
    for (long N = lo + 1; N <= factor * lo && !found; ++N) {
        detail::sectors_of_order(g, 0, N, [&](const SectorDatum& y) {
            if (found) return;
            // a datum exists for some n iff the n=0 version is valid
            // (needs g >= 2 for stability) or a coprime branch point
            // can be marked
            if (g >= 2 && is_valid(y)) {
                found = y;
                return;
            }
            for (long i = 1; i < N; ++i)
                if (gcd_l(i, N) == 1 && y.d_at(i) > 0) {
                    SectorDatum m = y;
                    m.n = 1;
                    m.a[static_cast<size_t>(i - 1)] = 1;
                    if (is_valid(m)) found = m;
                    return;
                }
        });
    }
    return found;
}

enum class CountFilter { None, GPrimeZero, GPrimeZeroSumD3 };

// Counts of admissible data per genus: entry g is the count for (g,0)
// when g >= 2 and for (1,1) when g = 1, since (1,0) is unstable.
inline std::vector<long> count_table(long g_max, CountFilter filter = CountFilter::None) {
    if (g_max < 1) throw std::invalid_argument("count_table: g_max must be >= 1");
    std::vector<long> out;
    for (long g = 1; g <= g_max; ++g) {
        auto res = enumerate_sectors(g, g == 1 ? 1 : 0);
        long count = 0;
        for (const auto& r : res.records) {
            if (filter == CountFilter::GPrimeZero && r.datum.g_prime != 0) continue;
            if (filter == CountFilter::GPrimeZeroSumD3 &&
                (r.datum.g_prime != 0 || r.datum.sum_d() != 3))
                continue;
            ++count;
        }
        out.push_back(count);
    }
    return out;
}

}  // namespace twisted

#endif
