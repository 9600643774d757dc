#ifndef TWISTED_RATIONAL_HPP
#define TWISTED_RATIONAL_HPP

#include <gmpxx.h>

#include <stdexcept>
#include <string>
#include <vector>

namespace twisted {

// Arbitrary-precision integer. No fixed-width arithmetic anywhere in the
// library: count tables and ages must be bit-exact.
using Int = mpz_class;

// Reduced fraction with positive denominator; zero is 0/1.
class Rational {
public:
    Rational() : value_(0) {}
    Rational(long num) : value_(num) {}
    Rational(const Int& num) : value_(num) {}

    Rational(const Int& num, const Int& den) {
        if (den == 0)
            throw std::invalid_argument("Rational: zero denominator");
        value_ = mpq_class(num, den);
        value_.canonicalize();
    }
    Rational(long num, long den) : Rational(Int(num), Int(den)) {}

    const Int num() const { return value_.get_num(); }
    const Int den() const { return value_.get_den(); }

    Rational operator-() const { return Rational(mpq_class(-value_)); }
    Rational& operator+=(const Rational& o) { value_ += o.value_; return *this; }
    Rational& operator-=(const Rational& o) { value_ -= o.value_; return *this; }
    Rational& operator*=(const Rational& o) { value_ *= o.value_; return *this; }
    Rational& operator/=(const Rational& o) {
        if (o.value_ == 0)
            throw std::invalid_argument("Rational: division by zero");
        value_ /= o.value_;
        return *this;
    }

    friend Rational operator+(Rational a, const Rational& b) { return a += b; }
    friend Rational operator-(Rational a, const Rational& b) { return a -= b; }
    friend Rational operator*(Rational a, const Rational& b) { return a *= b; }
    friend Rational operator/(Rational a, const Rational& b) { return a /= b; }

    friend bool operator==(const Rational& a, const Rational& b) { return a.value_ == b.value_; }
    friend bool operator!=(const Rational& a, const Rational& b) { return a.value_ != b.value_; }
    friend bool operator<(const Rational& a, const Rational& b) { return a.value_ < b.value_; }
    friend bool operator<=(const Rational& a, const Rational& b) { return a.value_ <= b.value_; }
    friend bool operator>(const Rational& a, const Rational& b) { return a.value_ > b.value_; }
    friend bool operator>=(const Rational& a, const Rational& b) { return a.value_ >= b.value_; }

    Rational abs() const { return Rational(mpq_class(::abs(value_))); }

    Int floor() const {
        Int q;
        mpz_fdiv_q(q.get_mpz_t(), value_.get_num().get_mpz_t(), value_.get_den().get_mpz_t());
        return q;
    }

    bool is_integer() const { return value_.get_den() == 1; }

    // "p/q", omitting "/1" for integers.
    std::string str() const {
        if (is_integer()) return value_.get_num().get_str();
        return value_.get_str();
    }

    // Accepts "p/q" or a bare integer "k".
    static Rational parse(const std::string& s) {
        auto slash = s.find('/');
        if (slash == std::string::npos) return Rational(Int(s));
        return Rational(Int(s.substr(0, slash)), Int(s.substr(slash + 1)));
    }

private:
    explicit Rational(const mpq_class& v) : value_(v) {}
    mpq_class value_;
};

inline Rational rat(const Int& num, const Int& den) { return Rational(num, den); }
inline Rational rat(long num, long den) { return Rational(num, den); }

// {x} = x - floor(x), defined on nonnegative rationals only.
inline Rational frac_part(const Rational& x) {
    if (x < Rational(0))
        throw std::invalid_argument("frac_part: negative input");
    return x - Rational(x.floor());
}

// Multiplicative inverse of s modulo N, normalized to [1, N-1].
inline Int mod_inverse(const Int& s, const Int& N) {
    if (N < 2)
        throw std::invalid_argument("mod_inverse: modulus must be >= 2");
    Int r;
    if (mpz_invert(r.get_mpz_t(), s.get_mpz_t(), N.get_mpz_t()) == 0)
        throw std::invalid_argument("mod_inverse: argument not coprime to modulus");
    return r;
}

// n! / prod(parts_i!), requires sum(parts) = n.
inline Int multinomial(long n, const std::vector<long>& parts) {
    long sum = 0;
    for (long p : parts) {
        if (p < 0) throw std::invalid_argument("multinomial: negative part");
        sum += p;
    }
    if (sum != n)
        throw std::invalid_argument("multinomial: parts do not sum to n");
    Int result = 1;
    unsigned long used = 0;
    for (long p : parts) {
        used += static_cast<unsigned long>(p);
        Int binom;
        mpz_bin_uiui(binom.get_mpz_t(), used, static_cast<unsigned long>(p));
        result *= binom;
    }
    return result;
}

inline Int gcd(const Int& a, const Int& b) {
    Int g;
    mpz_gcd(g.get_mpz_t(), a.get_mpz_t(), b.get_mpz_t());
    return g;
}

}  // namespace twisted

#endif
