// Acceptance suite: one pass/fail line per criterion, nonzero exit if
// any criterion fails.

#include <array>
#include <functional>
#include <iostream>
#include <string>
#include <vector>

#include "twisted/betti.hpp"
#include "twisted/theorems.hpp"

using namespace twisted;

namespace {

int failures = 0;
int criterion_no = 0;

void criterion(const std::string& name, const std::function<bool()>& body) {
    ++criterion_no;
    bool ok = false;
    std::string note;
    try {
        ok = body();
    } catch (const std::exception& e) {
        note = std::string(" (exception: ") + e.what() + ")";
    }
    if (!ok) ++failures;
    std::cout << (ok ? "[PASS]" : "[FAIL]") << " criterion " << criterion_no << ": " << name
              << note << "\n"
              << std::flush;
}

const std::vector<long> kCounts = {7,   17,  47,  72,  76,   203, 196, 225, 415,
                                   537, 427, 1040, 811, 779, 1750, 1860, 1371};
const std::vector<long> kCountsG0 = {7,   16,  43,  65,  64,  193, 163, 207, 372,
                                     485, 359, 983, 657, 866, 1592, 1636, 1115};
const std::vector<long> kCountsG0D3 = {6,   12,  32,  38,  42,  108, 76,  100, 184,
                                       190, 150, 352, 162, 286, 544, 382, 196};

// independent monomial-enumeration oracle for the stable ring dimensions
long monomial_count(long n, long k) {
    if (k % 2 != 0) return 0;
    long m = k / 2, count = 0;
    std::function<void(long, long)> kappas = [&](long i, long left) {
        if (i > left) {
            std::function<void(long, long)> psis = [&](long j, long rest) {
                if (j == n) {
                    if (rest == 0) ++count;
                    return;
                }
                for (long e = 0; e <= rest; ++e) psis(j + 1, rest - e);
            };
            psis(0, left);
            return;
        }
        for (long e = 0; e * i <= left; ++e) kappas(i + 1, left - e * i);
    };
    kappas(1, m);
    return count;
}

}  // namespace

int main() {
    criterion("count tables for genus 1..17 (all / g'=0 / g'=0 & sum d = 3)", [] {
        bool ok = true;
        auto compare = [&ok](const char* label, const std::vector<long>& got,
                             const std::vector<long>& want) {
            for (size_t i = 0; i < want.size(); ++i)
                if (got[i] != want[i]) {
                    std::cout << "  " << label << " differs at genus " << (i + 1)
                              << ": computed " << got[i] << ", reference " << want[i] << "\n";
                    ok = false;
                }
        };
        compare("all sectors", count_table(17), kCounts);
        compare("g'=0", count_table(17, CountFilter::GPrimeZero), kCountsG0);
        auto d3 = count_table(17, CountFilter::GPrimeZeroSumD3);
        compare("g'=0 & sum d = 3", d3, kCountsG0D3);
        long sum = 0;
        for (long c : d3) sum += c;
        if (sum != 2860) {
            std::cout << "  g'=0 & sum d = 3 total is " << sum << ", reference 2860\n";
            ok = false;
        }
        // a g'=0 count can never exceed the unfiltered count; flag
        // reference rows that violate this
        for (size_t i = 0; i < kCounts.size(); ++i)
            if (kCountsG0[i] > kCounts[i])
                std::cout << "  note: reference tables are self-inconsistent at genus "
                          << (i + 1) << " (g'=0 " << kCountsG0[i] << " > total "
                          << kCounts[i] << "); computed tables are consistent\n";
        return ok;
    });

    criterion("twin identity: age(Y) + age(Y') = codim, g<=17 n=0 and g<=8 n<=2g+2", [] {
        for (long g = 2; g <= 17; ++g)
            if (!verify_twin_identity(g, 0).passed()) return false;
        for (long g = 1; g <= 8; ++g)
            for (long n = (g == 1 ? 1 : 0); n <= 2 * g + 2; ++n)
                if (!verify_twin_identity(g, n).passed()) return false;
        return true;
    });

    criterion("minimum age (g-2+n)/2 unique at hyperelliptic, g<=10 n<=min(2g+2,8)", [] {
        for (long g = 1; g <= 10; ++g)
            for (long n = 0; n <= std::min(2 * g + 2, 8L); ++n) {
                if (2 * g - 2 + n <= 0) continue;
                if (!verify_min_age(g, n).passed()) return false;
            }
        return true;
    });

    criterion("codimension >= g-2+n, unique equality at hyperelliptic, same sweep", [] {
        for (long g = 1; g <= 10; ++g)
            for (long n = 0; n <= std::min(2 * g + 2, 8L); ++n) {
                if (2 * g - 2 + n <= 0) continue;
                if (!verify_codim_bound(g, n).passed()) return false;
            }
        return true;
    });

    criterion("hyperelliptic age closed form (g-2+n)/2, g<=20 n<=2g+2", [] {
        for (long g = 1; g <= 20; ++g)
            for (long n = 0; n <= 2 * g + 2; ++n) {
                if (2 * g - 2 + n <= 0) continue;
                SectorDatum y{g, n, 0, 2, {2 * g + 2}, {n}};
                if (age(y) != rat(g - 2 + n, 2)) return false;
            }
        return true;
    });

    criterion("lemma bounds over the twin-identity sweep", [] {
        auto sweep = [](long g, long n) {
            for (const auto& r : enumerate_sectors(g, n).records)
                if (!lemma_bounds(r.datum).passed()) return false;
            return true;
        };
        for (long g = 2; g <= 17; ++g)
            if (!sweep(g, 0)) return false;
        for (long g = 1; g <= 8; ++g)
            for (long n = (g == 1 ? 1 : 0); n <= 2 * g + 2; ++n)
                if (!sweep(g, n)) return false;
        return true;
    });

    criterion("auxiliary closed forms: g_sigma max (N<=40) and f_N(N/2) (N<=100)", [] {
        for (long N = 2; N <= 40; ++N)
            for (long sigma = 1; sigma < N; ++sigma) {
                if (N % sigma != 0) continue;
                Rational best(0);
                for (long i = 1; i < N; ++i) {
                    if (gcd_l(i, N) != sigma) continue;
                    Rational v = g_sigma(N, sigma, i);
                    if (v > best) best = v;
                }
                if (best != g_sigma_closed(N, sigma)) return false;
            }
        for (long N = 2; N <= 100; ++N)
            if (f_value(N, rat(N, 2)) != rat(N - 2, 2)) return false;
        return true;
    });

    criterion("proof thresholds: (1,1,1) n=3 at N=11/12..100; fourth triple at N=36/37", [] {
        std::array<Rational, 3> ones{Rational(1), Rational(1), Rational(1)};
        if (triple_inequality(11, 3, ones)) return false;
        for (long N = 12; N <= 100; ++N)
            if (!triple_inequality(N, 3, ones)) return false;
        if (triple_inequality(36, 0, {rat(36, 7), rat(36, 3), rat(36, 2)})) return false;
        return triple_inequality(37, 0, {rat(37, 7), rat(37, 3), rat(37, 2)});
    });

    criterion("enumeration empty iff n > 2g+2, g<=6 n<=2g+4", [] {
        for (long g = 1; g <= 6; ++g)
            for (long n = 0; n <= 2 * g + 4; ++n) {
                if (2 * g - 2 + n <= 0) continue;
                bool empty = enumerate_sectors(g, n).records.empty();
                if (empty != (n > 2 * g + 2)) return false;
            }
        return true;
    });

    criterion("stable Betti numbers match the monomial oracle, n<=5 k<=20", [] {
        for (long n = 0; n <= 5; ++n)
            for (long k = 0; k <= 20; ++k)
                if (stable_betti(n, k) != monomial_count(n, k)) return false;
        return stable_betti(0, 0) == 1 && stable_betti(0, 4) == 2 && stable_betti(3, 4) == 11;
    });

    criterion("no admissible datum between order_bound(g) and twice it, g<=6", [] {
        for (long g = 1; g <= 6; ++g)
            if (sanity_sweep(g, 2).has_value()) return false;
        return true;
    });

    criterion("printed mark convention breaks the twin identity at (2,1)", [] {
        if (verify_twin_identity(2, 1, MarkConvention::Printed).passed()) return false;
        // the failure is at the marked hyperelliptic datum
        SectorDatum hyp{2, 1, 0, 2, {6}, {1}};
        Rational sum = age(hyp, MarkConvention::Printed) +
                       age(twin(hyp), MarkConvention::Printed);
        return sum != Rational(codimension(hyp));
    });

    std::cout << (failures == 0 ? "ALL CRITERIA PASSED" : std::to_string(failures) + " CRITERIA FAILED")
              << "\n";
    return failures == 0 ? 0 : 1;
}
