#include "advangle/cyclotomic.hpp"

#include <algorithm>
#include <cstdlib>
#include <memory>
#include <mutex>
#include <numeric>
#include <stdexcept>

namespace advangle {

long totient(long n) {
    if (n < 1) throw std::invalid_argument("totient: n must be positive");
    long result = n;
    long m = n;
    for (long p = 2; p * p <= m; ++p) {
        if (m % p) continue;
        result -= result / p;
        while (m % p == 0) m /= p;
    }
    if (m > 1) result -= result / m;
    return result;
}

std::vector<long> divisors(long n) {
    std::vector<long> small, large;
    for (long d = 1; d * d <= n; ++d) {
        if (n % d) continue;
        small.push_back(d);
        if (d != n / d) large.push_back(n / d);
    }
    small.insert(small.end(), large.rbegin(), large.rend());
    return small;
}

CycloContext::CycloContext(long n) : n_(n), degree_(totient(n)) {
    // Phi_n = (x^n - 1) / prod_{d | n, d < n} Phi_d; each division is exact
    // because the Phi_d are distinct irreducible factors of x^n - 1.
    Zpoly p = x_pow_minus_one(n);
    for (long d : divisors(n)) {
        if (d == n) continue;
        p = poly_div_exact(std::move(p), CycloContext::get(d).phi_poly());
    }
    if (poly_degree(p) != degree_)
        throw std::logic_error("CycloContext: Phi_n degree does not match phi(n)");
    phi_ = std::move(p);
}

const CycloContext& CycloContext::get(long n) {
    if (n < 1) throw std::invalid_argument("cyclo_context: conductor must be positive");
    static std::mutex mu;
    static std::map<long, std::unique_ptr<const CycloContext>> cache;
    {
        std::lock_guard lock(mu);
        auto it = cache.find(n);
        if (it != cache.end()) return *it->second;
    }
    // Construct outside the lock (construction recurses into get for the
    // divisors of n); emplace is idempotent under concurrent insertion.
    std::unique_ptr<const CycloContext> fresh(new CycloContext(n));
    std::lock_guard lock(mu);
    auto [it, inserted] = cache.emplace(n, std::move(fresh));
    return *it->second;
}

namespace {

std::vector<Rational> canonical_coeffs(Qpoly p, const CycloContext& ctx) {
    poly_reduce_mod(p, ctx.phi_poly());
    p.resize(ctx.degree());
    return p;
}

long mod_n(long k, long n) {
    long r = k % n;
    return r < 0 ? r + n : r;
}

}  // namespace

CycloElement::CycloElement(const CycloContext& ctx, std::vector<Rational> coeffs)
    : ctx_(&ctx), coeffs_(std::move(coeffs)) {
    if (static_cast<long>(coeffs_.size()) != ctx.degree())
        throw std::invalid_argument("CycloElement: coefficient count must equal phi(n)");
}

CycloElement CycloElement::zero(const CycloContext& ctx) {
    return CycloElement(ctx, std::vector<Rational>(ctx.degree()));
}

CycloElement CycloElement::from_rational(const CycloContext& ctx, const Rational& q) {
    std::vector<Rational> c(ctx.degree());
    c[0] = q;
    return CycloElement(ctx, std::move(c));
}

CycloElement CycloElement::zeta_power(const CycloContext& ctx, long k) {
    PowerSum ps(ctx.conductor());
    ps.add(k, frac(1));
    return ps.to_element(ctx);
}

bool CycloElement::is_zero() const {
    return std::all_of(coeffs_.begin(), coeffs_.end(), [](const Rational& c) { return c == 0; });
}

CycloElement CycloElement::operator-() const {
    std::vector<Rational> c = coeffs_;
    for (auto& ci : c) ci = -ci;
    return CycloElement(*ctx_, std::move(c));
}

namespace {

void require_same_conductor(const CycloElement& a, const CycloElement& b) {
    if (a.conductor() != b.conductor())
        throw std::invalid_argument("cyclotomic arithmetic: conductor mismatch, lift explicitly");
}

}  // namespace

CycloElement operator+(const CycloElement& a, const CycloElement& b) {
    require_same_conductor(a, b);
    std::vector<Rational> c = a.coeffs();
    for (std::size_t i = 0; i < c.size(); ++i) c[i] += b.coeffs()[i];
    return CycloElement(a.context(), std::move(c));
}

CycloElement operator-(const CycloElement& a, const CycloElement& b) {
    require_same_conductor(a, b);
    std::vector<Rational> c = a.coeffs();
    for (std::size_t i = 0; i < c.size(); ++i) c[i] -= b.coeffs()[i];
    return CycloElement(a.context(), std::move(c));
}

CycloElement operator*(const CycloElement& a, const CycloElement& b) {
    require_same_conductor(a, b);
    Qpoly pa = a.coeffs();
    Qpoly pb = b.coeffs();
    poly_trim(pa);
    poly_trim(pb);
    return CycloElement(a.context(), canonical_coeffs(poly_mul(pa, pb), a.context()));
}

CycloElement operator*(const Rational& s, const CycloElement& a) {
    std::vector<Rational> c = a.coeffs();
    for (auto& ci : c) ci *= s;
    return CycloElement(a.context(), std::move(c));
}

void PowerSum::add(long exponent, const Rational& coeff) {
    long e = mod_n(exponent, n_);
    auto [it, inserted] = terms_.emplace(e, coeff);
    if (!inserted) {
        it->second += coeff;
        if (it->second == 0) terms_.erase(it);
    }
}

PowerSum& PowerSum::operator+=(const PowerSum& other) {
    if (n_ != other.n_) throw std::invalid_argument("PowerSum: conductor mismatch");
    for (const auto& [e, c] : other.terms_) add(e, c);
    return *this;
}

PowerSum& PowerSum::operator-=(const PowerSum& other) {
    if (n_ != other.n_) throw std::invalid_argument("PowerSum: conductor mismatch");
    for (const auto& [e, c] : other.terms_) add(e, Rational(-c));
    return *this;
}

PowerSum operator*(const PowerSum& a, const PowerSum& b) {
    if (a.n_ != b.n_) throw std::invalid_argument("PowerSum: conductor mismatch");
    PowerSum r(a.n_);
    for (const auto& [ea, ca] : a.terms_)
        for (const auto& [eb, cb] : b.terms_) r.add(ea + eb, ca * cb);
    return r;
}

CycloElement PowerSum::to_element(const CycloContext& ctx) const {
    if (ctx.conductor() != n_) throw std::invalid_argument("PowerSum: conductor mismatch");
    Qpoly p(n_);
    for (const auto& [e, c] : terms_) p[e] += c;
    return CycloElement(ctx, canonical_coeffs(std::move(p), ctx));
}

CycloElement inverse(const CycloElement& x) {
    if (x.is_zero()) throw std::domain_error("inverse: division by zero");
    const auto& coeffs = x.coeffs();
    // Constants invert directly.
    if (std::all_of(coeffs.begin() + 1, coeffs.end(), [](const Rational& c) { return c == 0; }))
        return CycloElement::from_rational(x.context(), Rational(1) / coeffs[0]);
    Qpoly f = coeffs;
    poly_trim(f);
    Qpoly u = poly_inverse_mod(f, x.context().phi_poly());
    u.resize(x.context().degree());
    return CycloElement(x.context(), std::move(u));
}

CycloElement inv_one_minus_zeta_pow(const CycloContext& ctx, long b) {
    const long n = ctx.conductor();
    const long bn = mod_n(b, n);
    if (bn == 0) throw std::domain_error("inv_one_minus_zeta_pow: 1 - zeta^0 is zero");
    const long d = n / std::gcd(n, bn);  // order of zeta^b
    PowerSum ps(n);
    long e = 0;
    for (long t = 0; t < d; ++t) {
        ps.add(e, frac(-(t + 1), d));
        e = (e + bn) % n;
    }
    return ps.to_element(ctx);
}

CycloElement galois_map(const CycloElement& x, long k) {
    const long n = x.conductor();
    const long kn = mod_n(k, n);
    if (std::gcd(kn, n) != 1)
        throw std::invalid_argument("galois_map: k must be coprime to the conductor");
    PowerSum ps(n);
    const auto& coeffs = x.coeffs();
    for (long i = 0; i < static_cast<long>(coeffs.size()); ++i) {
        if (coeffs[i] == 0) continue;
        ps.add(i * kn % n, coeffs[i]);
    }
    return ps.to_element(x.context());
}

bool is_real(const CycloElement& x) {
    const long n = x.conductor();
    if (n <= 2) return true;
    return galois_map(x, n - 1) == x;
}

std::optional<Rational> rational_value(const CycloElement& x) {
    const auto& c = x.coeffs();
    for (std::size_t i = 1; i < c.size(); ++i)
        if (c[i] != 0) return std::nullopt;
    return c[0];
}

bool in_subfield(const CycloElement& x, long m) {
    const long n = x.conductor();
    if (m < 1 || n % m != 0)
        throw std::invalid_argument("in_subfield: m must be a positive divisor of the conductor");
    // Gal(Q_n / Q_m) = { zeta -> zeta^k : k = 1 (mod m), gcd(k, n) = 1 }.
    for (long k = 1 + m; k < n; k += m) {
        if (std::gcd(k, n) != 1) continue;
        if (!(galois_map(x, k) == x)) return false;
    }
    return true;
}

namespace {

// Integer row-echelon elimination in the Bareiss scheme: all divisions by the
// previous pivot are exact, so entries stay at minor-sized bounds. Rows carry
// an identity-augmented block recording the combination of original rows.
struct DependencyRow {
    std::vector<Integer> combo;  // coefficients over the original rows
};

std::optional<DependencyRow> bareiss_dependency(std::vector<std::vector<Integer>> m, long cols) {
    const long rows = static_cast<long>(m.size());
    for (auto& row : m) row.resize(cols + rows);
    for (long r = 0; r < rows; ++r) m[r][cols + r] = 1;

    Integer prev = 1;
    for (long r = 0; r < rows; ++r) {
        long pc = -1;
        for (long c = 0; c < cols; ++c) {
            if (m[r][c] != 0) {
                pc = c;
                break;
            }
        }
        if (pc < 0) {
            DependencyRow dep;
            dep.combo.assign(m[r].begin() + cols, m[r].end());
            return dep;
        }
        const Integer pivot = m[r][pc];
        for (long j = r + 1; j < rows; ++j) {
            const Integer factor = m[j][pc];
            for (long c = 0; c < cols + rows; ++c) {
                Integer v = pivot * m[j][c] - factor * m[r][c];
                mpz_divexact(v.get_mpz_t(), v.get_mpz_t(), prev.get_mpz_t());
                m[j][c] = std::move(v);
            }
        }
        prev = pivot;
    }
    return std::nullopt;
}

// Scale a rational coordinate vector to integers; returns the scaling factor.
Integer scale_to_integers(const std::vector<Rational>& v, std::vector<Integer>& out) {
    Integer l = 1;
    for (const auto& q : v) mpz_lcm(l.get_mpz_t(), l.get_mpz_t(), q.get_den().get_mpz_t());
    out.clear();
    out.reserve(v.size());
    for (const auto& q : v) {
        Rational s = q * l;
        out.push_back(s.get_num());  // denominator is 1 after scaling
    }
    return l;
}

}  // namespace

Qpoly minimal_polynomial(const CycloElement& x) {
    const CycloContext& ctx = x.context();
    const long phi = ctx.degree();

    std::vector<CycloElement> powers = {CycloElement::from_rational(ctx, frac(1))};
    std::vector<std::vector<Integer>> rows;
    std::vector<Integer> scales;
    auto ensure_rows = [&](long count) {
        while (static_cast<long>(rows.size()) < count) {
            if (rows.size() == powers.size()) powers.push_back(powers.back() * x);
            std::vector<Integer> row;
            scales.push_back(scale_to_integers(powers[rows.size()].coeffs(), row));
            rows.push_back(std::move(row));
        }
    };

    for (long d : divisors(phi)) {
        ensure_rows(d + 1);
        auto dep = bareiss_dependency({rows.begin(), rows.begin() + d + 1}, phi);
        if (!dep) continue;
        // First dependency among 1, x, ..., x^d: the relation involves x^d
        // with a nonzero coefficient, since every smaller degree was free.
        Qpoly p(d + 1);
        for (long e = 0; e <= d; ++e) p[e] = Rational(dep->combo[e]) * scales[e];
        poly_trim(p);
        const Rational lead = p.back();
        for (auto& c : p) c /= lead;
        return p;
    }
    throw std::logic_error("minimal_polynomial: no relation found up to degree phi(n)");
}

CycloElement lift(const CycloElement& x, long new_conductor) {
    const long n = x.conductor();
    if (new_conductor % n != 0)
        throw std::invalid_argument("lift: target conductor must be a multiple of the source");
    const CycloContext& target = cyclo_context(new_conductor);
    const long stride = new_conductor / n;
    PowerSum ps(new_conductor);
    const auto& coeffs = x.coeffs();
    for (long i = 0; i < static_cast<long>(coeffs.size()); ++i) {
        if (coeffs[i] == 0) continue;
        ps.add(i * stride, coeffs[i]);
    }
    return ps.to_element(target);
}

}  // namespace advangle
