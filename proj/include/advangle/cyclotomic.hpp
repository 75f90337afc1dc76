#pragma once

#include <map>
#include <optional>
#include <span>
#include <utility>
#include <vector>

#include "advangle/polynomial.hpp"

namespace advangle {

long totient(long n);
std::vector<long> divisors(long n);  // ascending

// The field Q(zeta_n) with zeta_n = e^{2*pi*i/n}. Contexts are interned and
// immutable; CycloContext::get is safe to call from concurrent workers.
class CycloContext {
  public:
    long conductor() const { return n_; }
    long degree() const { return degree_; }           // phi(n)
    const Zpoly& phi_poly() const { return phi_; }    // cyclotomic polynomial Phi_n

    static const CycloContext& get(long n);

    CycloContext(const CycloContext&) = delete;
    CycloContext& operator=(const CycloContext&) = delete;

  private:
    explicit CycloContext(long n);

    long n_;
    long degree_;
    Zpoly phi_;
};

inline const CycloContext& cyclo_context(long n) { return CycloContext::get(n); }

// Element of Q(zeta_n) in the power basis 1, zeta, ..., zeta^{phi(n)-1},
// stored canonically reduced modulo Phi_n. Immutable value type.
class CycloElement {
  public:
    CycloElement(const CycloContext& ctx, std::vector<Rational> coeffs);

    static CycloElement zero(const CycloContext& ctx);
    static CycloElement from_rational(const CycloContext& ctx, const Rational& q);
    static CycloElement zeta_power(const CycloContext& ctx, long k);

    long conductor() const { return ctx_->conductor(); }
    const CycloContext& context() const { return *ctx_; }
    const std::vector<Rational>& coeffs() const { return coeffs_; }
    bool is_zero() const;

    CycloElement operator-() const;
    friend CycloElement operator+(const CycloElement& a, const CycloElement& b);
    friend CycloElement operator-(const CycloElement& a, const CycloElement& b);
    friend CycloElement operator*(const CycloElement& a, const CycloElement& b);
    friend CycloElement operator*(const Rational& s, const CycloElement& a);
    friend bool operator==(const CycloElement& a, const CycloElement& b) {
        return a.ctx_ == b.ctx_ && a.coeffs_ == b.coeffs_;
    }

  private:
    const CycloContext* ctx_;
    std::vector<Rational> coeffs_;  // size phi(n)
};

// Formal sum of powers of zeta_n, used to assemble products of roots of unity
// without reducing intermediates. One reduction happens in to_element.
class PowerSum {
  public:
    explicit PowerSum(long n) : n_(n) {}

    long conductor() const { return n_; }
    void add(long exponent, const Rational& coeff);

    PowerSum& operator+=(const PowerSum& other);
    PowerSum& operator-=(const PowerSum& other);
    friend PowerSum operator+(PowerSum a, const PowerSum& b) { return a += b; }
    friend PowerSum operator-(PowerSum a, const PowerSum& b) { return a -= b; }
    friend PowerSum operator*(const PowerSum& a, const PowerSum& b);

    CycloElement to_element(const CycloContext& ctx) const;

  private:
    long n_;
    std::map<long, Rational> terms_;  // exponent in [0, n) -> coefficient
};

CycloElement inverse(const CycloElement& x);

// 1 / (1 - zeta_n^b) for b != 0 (mod n), via the geometric-sum identity
// (1 - w) * sum_{t=0}^{d-1} (t+1) w^t = -d for a primitive d-th root w.
CycloElement inv_one_minus_zeta_pow(const CycloContext& ctx, long b);

// Field automorphism zeta -> zeta^k; requires gcd(k, n) = 1.
CycloElement galois_map(const CycloElement& x, long k);

bool is_real(const CycloElement& x);

// The rational value of x when x lies in Q, i.e. all non-constant power-basis
// coefficients vanish; empty otherwise.
std::optional<Rational> rational_value(const CycloElement& x);

// Membership of x in the subfield Q(zeta_m) for m | n, decided by Galois
// stability: x is fixed by every zeta -> zeta^k with k = 1 (mod m), gcd(k,n)=1.
bool in_subfield(const CycloElement& x, long m);

// Monic minimal polynomial of x over Q. Kernel search over the coordinate
// vectors of 1, x, x^2, ... using fraction-free (Bareiss) elimination; the
// degree always divides phi(n), so only divisors are tried.
Qpoly minimal_polynomial(const CycloElement& x);

// Value-preserving embedding Q(zeta_n) -> Q(zeta_n') for n | n', via
// zeta_n = zeta_{n'}^{n'/n}.
CycloElement lift(const CycloElement& x, long new_conductor);

}  // namespace advangle
