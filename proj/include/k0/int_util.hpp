#pragma once

#include <cmath>
#include <cstdint>
#include <numeric>
#include <utility>
#include <stdexcept>
#include <string>
#include <vector>

namespace k0 {

using i64 = long long;
using i128 = __int128;

// Least nonnegative residue.
inline i64 mod_pos(i64 x, i64 m) {
    i64 r = x % m;
    return r < 0 ? r + m : r;
}

inline i64 mulmod(i64 a, i64 b, i64 m) {
    return static_cast<i64>(static_cast<i128>(a) * b % m);
}

inline i64 isqrt(i64 n) {
    if (n < 0) throw std::domain_error("isqrt of negative");
    if (n < 2) return n;
    i64 r = static_cast<i64>(std::sqrt(static_cast<double>(n)));
    while (r > 0 && r * r > n) --r;
    while ((r + 1) * (r + 1) <= n) ++r;
    return r;
}

inline bool is_prime(i64 n) {
    if (n < 2) return false;
    for (i64 d = 2; d * d <= n; ++d)
        if (n % d == 0) return false;
    return true;
}

// n = p1^e1 * ... sorted by prime.
inline std::vector<std::pair<i64, int>> factorize(i64 n) {
    if (n < 1) throw std::domain_error("factorize expects n >= 1");
    std::vector<std::pair<i64, int>> out;
    for (i64 p = 2; p * p <= n; ++p) {
        if (n % p) continue;
        int e = 0;
        while (n % p == 0) { n /= p; ++e; }
        out.push_back({p, e});
    }
    if (n > 1) out.push_back({n, 1});
    return out;
}

inline i64 ipow(i64 b, int e) {
    i64 r = 1;
    while (e-- > 0) r *= b;
    return r;
}

inline i64 binomial(i64 n, i64 k) {
    if (k < 0 || k > n) return 0;
    if (k > n - k) k = n - k;
    i64 r = 1;
    for (i64 i = 1; i <= k; ++i) r = r * (n - k + i) / i;
    return r;
}

// Extended gcd: returns g = gcd(a,b) and x,y with a*x + b*y = g.
inline i64 ext_gcd(i64 a, i64 b, i64& x, i64& y) {
    if (b == 0) {
        x = a >= 0 ? 1 : -1;
        y = 0;
        return a >= 0 ? a : -a;
    }
    i64 x1, y1;
    i64 g = ext_gcd(b, a % b, x1, y1);
    x = y1;
    y = x1 - (a / b) * y1;
    return g;
}

inline i64 inv_mod(i64 a, i64 m) {
    i64 x, y;
    i64 g = ext_gcd(mod_pos(a, m), m, x, y);
    if (g != 1) throw std::domain_error("element not invertible");
    return mod_pos(x, m);
}

// Exact rational with i64 numerator/denominator, always normalized
// (den > 0, gcd(num, den) = 1).
struct Rational {
    i64 num = 0;
    i64 den = 1;

    Rational() = default;
    Rational(i64 n) : num(n), den(1) {}
    Rational(i64 n, i64 d) : num(n), den(d) { normalize(); }

    void normalize() {
        if (den == 0) throw std::domain_error("zero denominator");
        if (den < 0) { num = -num; den = -den; }
        i64 g = std::gcd(num < 0 ? -num : num, den);
        if (g > 1) { num /= g; den /= g; }
    }

    bool is_integer() const { return den == 1; }
    bool is_zero() const { return num == 0; }

    friend Rational operator+(Rational a, Rational b) {
        return Rational(a.num * b.den + b.num * a.den, a.den * b.den);
    }
    friend Rational operator-(Rational a, Rational b) {
        return Rational(a.num * b.den - b.num * a.den, a.den * b.den);
    }
    friend Rational operator*(Rational a, Rational b) {
        return Rational(a.num * b.num, a.den * b.den);
    }
    friend Rational operator/(Rational a, Rational b) {
        if (b.num == 0) throw std::domain_error("division by zero");
        return Rational(a.num * b.den, a.den * b.num);
    }
    Rational operator-() const { Rational r; r.num = -num; r.den = den; return r; }
    friend bool operator==(const Rational& a, const Rational& b) {
        return a.num == b.num && a.den == b.den;
    }
    friend bool operator!=(const Rational& a, const Rational& b) { return !(a == b); }

    std::string str() const {
        if (den == 1) return std::to_string(num);
        return std::to_string(num) + "/" + std::to_string(den);
    }
};

}  // namespace k0
