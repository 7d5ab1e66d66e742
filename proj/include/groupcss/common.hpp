#pragma once

#include <cstdint>
#include <cstdlib>
#include <numeric>
#include <stdexcept>
#include <string>

namespace groupcss {

struct Error : std::runtime_error {
    using std::runtime_error::runtime_error;
};

// Malformed input: bad group table, discontinuous face walk, arity mismatch, ...
struct ValidationError : Error {
    using Error::Error;
};

// An enumeration would exceed a configured cap.  Never silently truncated.
struct BudgetError : Error {
    using Error::Error;
};

// A verifier found a counterexample; what() carries the witness.
struct VerificationError : Error {
    using Error::Error;
};

// Budgets and the global seed.  All randomness in the library flows from
// RunConfig::seed, all enumerations are capped by one of these budgets.
struct RunConfig {
    long long config_budget = 20'000'000;   // |G|^n configurations
    long long hom_budget = 100'000'000;     // |G|^generators assignments
    long long op_budget = 100'000'000;      // enumerated X-type operators
    long long law_budget = 10'000'000;      // word evaluations in law search
    std::uint64_t seed = 0;
    int order_cap = 10080;                  // largest allowed group order

    static RunConfig from_env();            // honors GROUPCSS_BUDGET
};

// splitmix64: 64-bit seeded generator, splittable by construction
struct SplitMix64 {
    std::uint64_t state;
    explicit SplitMix64(std::uint64_t seed) : state(seed) {}
    std::uint64_t next() {
        std::uint64_t z = (state += 0x9e3779b97f4a7c15ull);
        z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ull;
        z = (z ^ (z >> 27)) * 0x94d049bb133111ebull;
        return z ^ (z >> 31);
    }
    // unbiased via rejection
    std::uint64_t below(std::uint64_t bound) {
        std::uint64_t threshold = -bound % bound;
        for (;;) {
            std::uint64_t r = next();
            if (r >= threshold) return r % bound;
        }
    }
    SplitMix64 split() { return SplitMix64(next() ^ 0x5851f42d4c957f2dull); }
};

// Exact rational with i64 numerator/denominator; amplitudes here have small
// denominators (products of |G| and orbit sizes) so i64 with __int128
// intermediates is plenty.
struct Rational {
    long long num = 0;
    long long den = 1;

    Rational() = default;
    Rational(long long n) : num(n), den(1) {}
    Rational(long long n, long long d) : num(n), den(d) { normalize(); }

    void normalize() {
        if (den == 0) throw Error("rational with zero denominator");
        if (den < 0) { num = -num; den = -den; }
        long long g = std::gcd(num < 0 ? -num : num, den);
        if (g > 1) { num /= g; den /= g; }
        if (num == 0) den = 1;
    }
    friend Rational operator+(const Rational& a, const Rational& b) {
        __int128 n = (__int128)a.num * b.den + (__int128)b.num * a.den;
        __int128 d = (__int128)a.den * b.den;
        return make_checked(n, d);
    }
    friend Rational operator*(const Rational& a, const Rational& b) {
        return make_checked((__int128)a.num * b.num, (__int128)a.den * b.den);
    }
    friend bool operator==(const Rational& a, const Rational& b) {
        return a.num == b.num && a.den == b.den;
    }
    friend bool operator!=(const Rational& a, const Rational& b) { return !(a == b); }
    friend bool operator<(const Rational& a, const Rational& b) {
        return (__int128)a.num * b.den < (__int128)b.num * a.den;
    }
    bool is_zero() const { return num == 0; }
    double to_double() const { return (double)num / (double)den; }
    std::string str() const {
        return den == 1 ? std::to_string(num) : std::to_string(num) + "/" + std::to_string(den);
    }

private:
    static Rational make_checked(__int128 n, __int128 d) {
        Rational r;
        __int128 g = gcd128(n < 0 ? -n : n, d < 0 ? -d : d);
        if (g > 1) { n /= g; d /= g; }
        if (d < 0) { n = -n; d = -d; }
        if (n > INT64_MAX || n < INT64_MIN || d > INT64_MAX)
            throw Error("rational overflow");
        r.num = (long long)n;
        r.den = (long long)d;
        if (r.num == 0) r.den = 1;
        return r;
    }
    static __int128 gcd128(__int128 a, __int128 b) {
        while (b) { __int128 t = a % b; a = b; b = t; }
        return a == 0 ? 1 : a;
    }
};

// checked integer power; returns false if base^exp > limit
bool pow_within(long long base, int exp, long long limit, long long* out = nullptr);

}  // namespace groupcss
