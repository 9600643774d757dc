#ifndef TWISTED_THEOREMS_HPP
#define TWISTED_THEOREMS_HPP

#include <array>
#include <sstream>
#include <string>

#include "twisted/enumerate.hpp"

namespace twisted {

struct CheckResult {
    std::string name;
    bool pass = true;
    std::string witness;  // concrete counterexample or note
};

struct VerificationReport {
    std::string scope;
    std::vector<CheckResult> checks;

    bool passed() const {
        for (const auto& c : checks)
            if (!c.pass) return false;
        return true;
    }
};

namespace detail {

inline std::string datum_str(const SectorDatum& y) {
    std::ostringstream os;
    os << "(g'=" << y.g_prime << ",N=" << y.order << ";d=[";
    for (size_t i = 0; i < y.d.size(); ++i) os << (i ? "," : "") << y.d[i];
    os << "],a=[";
    for (size_t i = 0; i < y.a.size(); ++i) os << (i ? "," : "") << y.a[i];
    os << "])";
    return os.str();
}

inline std::string scope_str(long g, long n) {
    return "(g,n)=(" + std::to_string(g) + "," + std::to_string(n) + ")";
}

}  // namespace detail

// a(Y) + a(Y') = codim(Y) for every datum at (g,n).
inline VerificationReport verify_twin_identity(long g, long n,
                                               MarkConvention conv = MarkConvention::Corrected) {
    VerificationReport rep;
    rep.scope = detail::scope_str(g, n);
    auto res = enumerate_sectors(g, n, conv);
    CheckResult c{"twin_identity", true, ""};
    for (const auto& r : res.records) {
        Rational sum = r.age + res.records[r.twin_index].age;
        if (sum != Rational(r.codim)) {
            c.pass = false;
            c.witness = detail::datum_str(r.datum) + ": age sum " + sum.str() +
                        " != codim " + std::to_string(r.codim);
            break;
        }
    }
    if (res.records.empty()) c.witness = "empty enumeration";
    rep.checks.push_back(c);
    return rep;
}

// min over all data of 2*age equals g-2+n, attained uniquely at the
// hyperelliptic datum; vacuous pass on an empty enumeration.
inline VerificationReport verify_min_age(long g, long n,
                                         MarkConvention conv = MarkConvention::Corrected) {
    VerificationReport rep;
    rep.scope = detail::scope_str(g, n);
    auto res = enumerate_sectors(g, n, conv);
    CheckResult c{"min_age", true, ""};
    if (res.records.empty()) {
        c.witness = "empty enumeration";
        rep.checks.push_back(c);
        return rep;
    }
    Rational bound = rat(g - 2 + n, 2);
    const SectorRecord* argmin = nullptr;
    long hits = 0;
    for (const auto& r : res.records) {
        if (r.age < bound) {
            c.pass = false;
            c.witness = detail::datum_str(r.datum) + ": age " + r.age.str() +
                        " below (g-2+n)/2 = " + bound.str();
            break;
        }
        if (r.age == bound) {
            ++hits;
            argmin = &r;
        }
    }
    if (c.pass) {
        if (hits != 1 || !argmin->hyperelliptic) {
            c.pass = false;
            c.witness = "minimum attained " + std::to_string(hits) +
                        " times" + (argmin ? ", at " + detail::datum_str(argmin->datum) : "");
        } else {
            c.witness = "minimum " + bound.str() + " at " + detail::datum_str(argmin->datum);
        }
    }
    rep.checks.push_back(c);
    return rep;
}

// codim(Y) >= g-2+n with unique equality at the hyperelliptic datum,
// plus the per-datum inequality (N/2) sum d_i <= 2g-2-N(2g'-2).
inline VerificationReport verify_codim_bound(long g, long n) {
    VerificationReport rep;
    rep.scope = detail::scope_str(g, n);
    auto res = enumerate_sectors(g, n);
    CheckResult bound{"codim_bound", true, ""};
    CheckResult half{"half_degree_bound", true, ""};
    long equalities = 0;
    for (const auto& r : res.records) {
        if (r.codim < g - 2 + n) {
            bound.pass = false;
            bound.witness = detail::datum_str(r.datum) + ": codim " + std::to_string(r.codim);
            break;
        }
        if (r.codim == g - 2 + n) {
            ++equalities;
            if (!r.hyperelliptic) {
                bound.pass = false;
                bound.witness = "non-hyperelliptic equality at " + detail::datum_str(r.datum);
                break;
            }
        }
        const auto& y = r.datum;
        if (Rational(y.order * y.sum_d(), 2) >
            Rational(2 * g - 2 - y.order * (2 * y.g_prime - 2))) {
            half.pass = false;
            half.witness = detail::datum_str(y);
        }
    }
    if (bound.pass && !res.records.empty() && equalities != 1) {
        bound.pass = false;
        bound.witness = "equality attained " + std::to_string(equalities) + " times";
    }
    if (res.records.empty()) bound.witness = "empty enumeration";
    rep.checks.push_back(bound);
    rep.checks.push_back(half);
    return rep;
}

namespace detail {

// Sum over the indices with gcd(i,N)=1 of the marked-point term.
inline Rational mark_part(const SectorDatum& y, MarkConvention conv) {
    Rational m(0);
    for (long i = 1; i < y.order; ++i)
        if (gcd_l(i, y.order) == 1 && y.a_at(i) > 0)
            m += Rational(y.a_at(i)) * mark_weight(i, y.order, conv);
    return m;
}

inline Rational sigma_part(const SectorDatum& y, long sigma) {
    Rational v(0);
    for (long i = 1; i < y.order; ++i)
        if (gcd_l(i, y.order) == sigma && y.d_at(i) > 0)
            v += Rational(y.d_at(i)) * point_weight(i, y.order);
    return v;
}

}  // namespace detail

// Bounds on the twin differences of the mark term and of each per-sigma
// term of the age.
inline VerificationReport lemma_bounds(const SectorDatum& y,
                                       MarkConvention conv = MarkConvention::Corrected) {
    require_valid(y);
    VerificationReport rep;
    rep.scope = detail::datum_str(y);
    const long N = y.order;
    SectorDatum t = twin(y);

    CheckResult mark{"mark_bound", true, ""};
    long coprime_marks = 0;
    for (long i = 1; i < N; ++i)
        if (gcd_l(i, N) == 1) coprime_marks += y.a_at(i);
    Rational mdiff = (detail::mark_part(y, conv) - detail::mark_part(t, conv)).abs();
    if (mdiff > rat(N - 2, N) * Rational(coprime_marks)) {
        mark.pass = false;
        mark.witness = "mark difference " + mdiff.str();
    }
    rep.checks.push_back(mark);

    for (long sigma = 1; sigma < N; ++sigma) {
        if (N % sigma != 0) continue;
        long dsum = 0;
        for (long i = 1; i < N; ++i)
            if (gcd_l(i, N) == sigma) dsum += y.d_at(i);
        Rational diff = (detail::sigma_part(y, sigma) - detail::sigma_part(t, sigma)).abs();
        Rational cap = rat((N - 2 * sigma) * (N / sigma + 5), 6 * N) * Rational(dsum);
        CheckResult c{"sigma_bound_" + std::to_string(sigma), true, ""};
        if (diff > cap) {
            c.pass = false;
            c.witness = "difference " + diff.str() + " > " + cap.str();
        }
        rep.checks.push_back(c);
    }
    return rep;
}

// |sum_k k*({ik/N} - {(N-i)k/N})|, requires gcd(i,N) = sigma.
inline Rational g_sigma(long N, long sigma, long i) {
    if (i < 1 || i >= N || gcd_l(i, N) != sigma)
        throw std::invalid_argument("g_sigma: gcd(i,N) != sigma");
    Rational sum(0);
    for (long k = 1; k < N; ++k)
        sum += Rational(k) * (frac_part(rat(i * k, N)) - frac_part(rat((N - i) * k, N)));
    return sum.abs();
}

// (1/6)(N/sigma - 1)(N - 2 sigma): the maximum of g_sigma over the i
// with gcd(i,N)=sigma, attained at i = sigma and i = N - sigma.
inline Rational g_sigma_closed(long N, long sigma) {
    if (sigma < 1 || sigma >= N || N % sigma != 0)
        throw std::invalid_argument("g_sigma_closed: sigma must properly divide N");
    return rat((N / sigma - 1) * (N - 2 * sigma), 6);
}

// f_N(sigma) = ((6 - 1/sigma)N^2 - (6 sigma + 9)N + 10 sigma) / (6N);
// sigma may be rational, 1 <= sigma <= N/2.
inline Rational f_value(long N, const Rational& sigma) {
    if (N < 2 || sigma < Rational(1) || sigma > rat(N, 2))
        throw std::invalid_argument("f_value: sigma out of [1, N/2]");
    Rational N2(N * N);
    return ((Rational(6) - Rational(1) / sigma) * N2 -
            (Rational(6) * sigma + Rational(9)) * Rational(N) + Rational(10) * sigma) /
           Rational(6 * N);
}

// Strict check of
// (6 - sum 1/s_i) N^2 - (3 + 6 sum s_i) N + 10 sum s_i > 6n(N-2).
inline bool triple_inequality(long N, long n, const std::array<Rational, 3>& sigmas) {
    if (n < 0 || n > 3) throw std::invalid_argument("triple_inequality: n out of [0,3]");
    Rational inv_sum(0), sum(0);
    for (const auto& s : sigmas) {
        if (s < Rational(1) || s > rat(N, 2))
            throw std::invalid_argument("triple_inequality: sigma out of [1, N/2]");
        inv_sum += Rational(1) / s;
        sum += s;
    }
    Rational lhs = (Rational(6) - inv_sum) * Rational(N * N) -
                   (Rational(3) + Rational(6) * sum) * Rational(N) + Rational(10) * sum;
    return lhs > Rational(6 * n * (N - 2));
}

// Records sorted by increasing age, ties broken by canonical order.
inline std::vector<SectorRecord> rank_by_age(long g, long n, long top,
                                             MarkConvention conv = MarkConvention::Corrected) {
    auto res = enumerate_sectors(g, n, conv);
    std::stable_sort(res.records.begin(), res.records.end(),
                     [](const SectorRecord& x, const SectorRecord& y) { return x.age < y.age; });
    if (top >= 0 && static_cast<size_t>(top) < res.records.size())
        res.records.resize(static_cast<size_t>(top));
    return res.records;
}

}  // namespace twisted

#endif
