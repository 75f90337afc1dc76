#pragma once

#include <gmpxx.h>

#include <stdexcept>
#include <string>
#include <vector>

namespace advangle {

using Integer = mpz_class;
using Rational = mpq_class;

// Dense coefficient vectors, index i holds the coefficient of x^i.
// Invariant: no trailing zero coefficients; the zero polynomial is empty.
using Zpoly = std::vector<Integer>;
using Qpoly = std::vector<Rational>;

// mpq_class(n, d) does not canonicalize on its own.
inline Rational frac(long num, long den = 1) {
    Rational q(num, den);
    q.canonicalize();
    return q;
}

template <class T>
void poly_trim(std::vector<T>& p) {
    while (!p.empty() && p.back() == 0) p.pop_back();
}

template <class T>
long poly_degree(const std::vector<T>& p) {
    return static_cast<long>(p.size()) - 1;  // zero polynomial -> -1
}

template <class T>
std::vector<T> poly_mul(const std::vector<T>& a, const std::vector<T>& b) {
    if (a.empty() || b.empty()) return {};
    std::vector<T> r(a.size() + b.size() - 1);
    for (std::size_t i = 0; i < a.size(); ++i) {
        if (a[i] == 0) continue;
        for (std::size_t j = 0; j < b.size(); ++j) {
            if (b[j] == 0) continue;
            r[i + j] += a[i] * b[j];
        }
    }
    poly_trim(r);
    return r;
}

inline Zpoly x_pow_minus_one(long n) {
    Zpoly p(n + 1);
    p[0] = -1;
    p[n] = 1;
    return p;
}

// Exact division by a monic divisor over Z; throws if the division leaves a remainder.
inline Zpoly poly_div_exact(Zpoly num, const Zpoly& den) {
    if (den.empty() || den.back() != 1)
        throw std::invalid_argument("poly_div_exact: divisor must be monic");
    const long dd = poly_degree(den);
    long dn = poly_degree(num);
    if (dn < dd) throw std::invalid_argument("poly_div_exact: inexact division");
    Zpoly quot(dn - dd + 1);
    for (long k = dn - dd; k >= 0; --k) {
        Integer c = num[k + dd];
        if (c == 0) continue;
        quot[k] = c;
        for (long i = 0; i <= dd; ++i) num[k + i] -= c * den[i];
    }
    poly_trim(num);
    if (!num.empty()) throw std::invalid_argument("poly_div_exact: inexact division");
    return quot;
}

// In-place remainder of p modulo a monic integer polynomial.
inline void poly_reduce_mod(Qpoly& p, const Zpoly& modulus) {
    const long dm = poly_degree(modulus);
    poly_trim(p);
    while (poly_degree(p) >= dm) {
        const long k = poly_degree(p) - dm;
        Rational c = p.back();
        for (long i = 0; i < dm; ++i) p[k + i] -= c * modulus[i];
        p.pop_back();
        poly_trim(p);
    }
}

inline std::pair<Qpoly, Qpoly> poly_divmod(Qpoly num, const Qpoly& den) {
    if (den.empty()) throw std::invalid_argument("poly_divmod: division by zero polynomial");
    const long dd = poly_degree(den);
    const Rational lead = den.back();
    long dn = poly_degree(num);
    if (dn < dd) return {{}, std::move(num)};
    Qpoly quot(dn - dd + 1);
    for (long k = dn - dd; k >= 0; --k) {
        if (num[k + dd] == 0) continue;
        Rational c = num[k + dd] / lead;
        quot[k] = c;
        for (long i = 0; i <= dd; ++i) num[k + i] -= c * den[i];
    }
    poly_trim(num);
    poly_trim(quot);
    return {std::move(quot), std::move(num)};
}

// Extended Euclid: returns u with u*f = 1 (mod modulus). Requires gcd(f, modulus)
// constant, which holds for any nonzero element of Q[x]/(Phi_n).
inline Qpoly poly_inverse_mod(const Qpoly& f, const Zpoly& modulus) {
    Qpoly r0(modulus.begin(), modulus.end());
    Qpoly r1 = f;
    poly_trim(r1);
    if (r1.empty()) throw std::domain_error("poly_inverse_mod: inverse of zero");
    Qpoly s0;             // coefficient of f in r0
    Qpoly s1 = {frac(1)}; // coefficient of f in r1
    while (!r1.empty()) {
        auto [q, r] = poly_divmod(std::move(r0), r1);
        Qpoly s2 = s0;
        Qpoly qs = poly_mul(q, s1);
        s2.resize(std::max(s2.size(), qs.size()));
        for (std::size_t i = 0; i < qs.size(); ++i) s2[i] -= qs[i];
        poly_trim(s2);
        r0 = std::move(r1);
        r1 = std::move(r);
        s0 = std::move(s1);
        s1 = std::move(s2);
    }
    if (poly_degree(r0) != 0)
        throw std::domain_error("poly_inverse_mod: element shares a factor with the modulus");
    Qpoly u = std::move(s0);
    for (auto& ci : u) ci /= r0[0];
    poly_reduce_mod(u, modulus);
    return u;
}

inline std::string poly_to_string(const Qpoly& p, const char* var = "x") {
    if (p.empty()) return "0";
    std::string out;
    for (long i = poly_degree(p); i >= 0; --i) {
        const Rational& c = p[i];
        if (c == 0) continue;
        const bool first = out.empty();
        const bool neg = c < 0;
        Rational mag = neg ? Rational(-c) : c;
        if (first)
            out += neg ? "-" : "";
        else
            out += neg ? " - " : " + ";
        const bool unit = (mag == 1) && i > 0;
        if (!unit) out += mag.get_str();
        if (i > 0) {
            if (!unit) out += "*";
            out += var;
            if (i > 1) out += "^" + std::to_string(i);
        }
    }
    return out;
}

}  // namespace advangle
