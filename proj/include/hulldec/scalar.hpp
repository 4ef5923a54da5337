#pragma once

#include <gmpxx.h>

#include <cmath>
#include <cstdio>
#include <string>

namespace hulldec {

// Exact arithmetic scalar. mpq_class keeps values canonical through
// arithmetic; construction from a double is the exact binary value.
using Rational = mpq_class;

template <class S>
struct ScalarTraits;

template <>
struct ScalarTraits<double> {
    static constexpr bool exact = false;
    static double default_eps() { return 1e-9; }
    static double abs(double v) { return std::fabs(v); }
    static double to_double(double v) { return v; }
    static double from_rational(const Rational& q) { return q.get_d(); }
    static bool finite(double v) { return std::isfinite(v); }
    static std::string str(double v) {
        char buf[32];
        std::snprintf(buf, sizeof buf, "%.17g", v);
        return buf;
    }
};

template <>
struct ScalarTraits<Rational> {
    static constexpr bool exact = true;
    static Rational default_eps() { return Rational(0); }
    static Rational abs(const Rational& v) { return v < 0 ? Rational(-v) : v; }
    static double to_double(const Rational& v) { return v.get_d(); }
    static Rational from_rational(const Rational& q) { return q; }
    static bool finite(const Rational&) { return true; }
    static std::string str(const Rational& v) { return v.get_str(); }
};

// Comparison context shared by all operations: eps-slack inequalities in
// float mode, exact comparisons (eps pinned to 0) in rational mode.
template <class S>
struct ScalarMode {
    S eps = ScalarTraits<S>::default_eps();

    bool le(const S& a, const S& b, int slack = 1) const {
        S bound = b + S(slack) * eps;
        return a <= bound;
    }
    bool ge(const S& a, const S& b, int slack = 1) const { return le(b, a, slack); }
    bool eq(const S& a, const S& b, int slack = 1) const {
        S diff = ScalarTraits<S>::abs(S(a - b));
        S bound = S(slack) * eps;
        return diff <= bound;
    }
    bool is_zero(const S& a, int slack = 1) const { return eq(a, S(0), slack); }
};

template <class S>
S factorial(int m) {
    S f(1);
    for (int i = 2; i <= m; ++i) f *= S(i);
    return f;
}

}  // namespace hulldec
