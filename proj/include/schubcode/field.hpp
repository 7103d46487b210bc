#pragma once

// Exact arithmetic in small finite fields GF(p^e), plus the exact counting
// functions (ordinary and Gaussian binomials) used throughout the library.
//
// Field elements are plain integer indices in [0, q).  For a prime field the
// index is the residue itself; for an extension field it encodes the
// polynomial-basis coefficients, index = sum c_i * p^i with c_i in [0, p).

#include <cstdint>
#include <stdexcept>
#include <string>
#include <vector>

#include <boost/multiprecision/cpp_int.hpp>

namespace schubcode {

using Big = boost::multiprecision::cpp_int;
using Fe = std::uint32_t;  // field element index

inline bool is_prime(std::uint32_t n) {
    if (n < 2) return false;
    for (std::uint32_t d = 2; d * d <= n; ++d)
        if (n % d == 0) return false;
    return true;
}

/// Arithmetic in GF(q).  Supports every prime q and q in {4, 8, 9} via fixed
/// irreducible moduli (x^2+x+1, x^3+x+1, x^2+1).  Extension-field products and
/// inverses are table driven; tables are built once at construction and the
/// object is immutable afterwards, so it can be shared freely across threads.
class Field {
public:
    explicit Field(std::uint32_t q) : q_(q) {
        if (is_prime(q)) {
            p_ = q;
            e_ = 1;
        } else if (q == 4) {
            p_ = 2; e_ = 2; modulus_ = {1, 1, 1};
        } else if (q == 8) {
            p_ = 2; e_ = 3; modulus_ = {1, 1, 0, 1};
        } else if (q == 9) {
            p_ = 3; e_ = 2; modulus_ = {1, 0, 1};
        } else {
            throw std::invalid_argument("unsupported field size q=" + std::to_string(q) +
                                        " (primes and 4, 8, 9 are supported)");
        }
        if (e_ > 1) build_tables();
    }

    std::uint32_t p() const { return p_; }
    std::uint32_t e() const { return e_; }
    std::uint32_t q() const { return q_; }

    /// Modulus polynomial coefficients c0..ce (monic); empty for prime fields.
    const std::vector<std::uint32_t>& modulus() const { return modulus_; }

    Fe add(Fe a, Fe b) const {
        if (e_ == 1) return (a + b) % p_;
        return add_[a * q_ + b];
    }

    Fe neg(Fe a) const {
        if (e_ == 1) return a == 0 ? 0 : p_ - a;
        return neg_[a];
    }

    Fe sub(Fe a, Fe b) const { return add(a, neg(b)); }

    Fe mul(Fe a, Fe b) const {
        if (e_ == 1) return (a * b) % p_;
        return mul_[a * q_ + b];
    }

    Fe inv(Fe a) const {
        if (a == 0)
            throw std::domain_error("division by zero in GF(" + std::to_string(q_) + ")");
        if (e_ == 1) return pow(a, p_ - 2);
        return inv_[a];
    }

    Fe div(Fe a, Fe b) const { return mul(a, inv(b)); }

    /// a^n for any integer n (negative n inverts first; requires a != 0 then).
    Fe pow(Fe a, long long n) const {
        if (n < 0) { a = inv(a); n = -n; }
        Fe r = 1, base = a;
        while (n > 0) {
            if (n & 1) r = mul(r, base);
            base = mul(base, base);
            n >>= 1;
        }
        return r;
    }

private:
    void build_tables() {
        add_.assign(q_ * q_, 0);
        mul_.assign(q_ * q_, 0);
        neg_.assign(q_, 0);
        inv_.assign(q_, 0);
        for (Fe a = 0; a < q_; ++a) {
            for (Fe b = 0; b < q_; ++b) {
                add_[a * q_ + b] = poly_add(a, b);
                mul_[a * q_ + b] = poly_mul(a, b);
            }
        }
        for (Fe a = 0; a < q_; ++a) {
            for (Fe b = 0; b < q_; ++b) {
                if (add_[a * q_ + b] == 0) neg_[a] = b;
                if (a != 0 && mul_[a * q_ + b] == 1) inv_[a] = b;
            }
        }
    }

    std::vector<std::uint32_t> digits(Fe a) const {
        std::vector<std::uint32_t> d(e_, 0);
        for (std::uint32_t i = 0; i < e_; ++i) { d[i] = a % p_; a /= p_; }
        return d;
    }

    Fe from_digits(const std::vector<std::uint32_t>& d) const {
        Fe v = 0;
        for (std::uint32_t i = e_; i-- > 0;) v = v * p_ + d[i];
        return v;
    }

    Fe poly_add(Fe a, Fe b) const {
        auto da = digits(a), db = digits(b);
        for (std::uint32_t i = 0; i < e_; ++i) da[i] = (da[i] + db[i]) % p_;
        return from_digits(da);
    }

    Fe poly_mul(Fe a, Fe b) const {
        auto da = digits(a), db = digits(b);
        std::vector<std::uint32_t> prod(2 * e_ - 1, 0);
        for (std::uint32_t i = 0; i < e_; ++i)
            for (std::uint32_t j = 0; j < e_; ++j)
                prod[i + j] = (prod[i + j] + da[i] * db[j]) % p_;
        // reduce by the monic modulus, highest degree first
        for (std::uint32_t d = 2 * e_ - 2; d >= e_; --d) {
            std::uint32_t c = prod[d];
            if (c == 0) continue;
            prod[d] = 0;
            for (std::uint32_t j = 0; j < e_; ++j) {
                std::uint32_t t = (c * modulus_[j]) % p_;
                prod[d - e_ + j] = (prod[d - e_ + j] + p_ - t) % p_;
            }
        }
        prod.resize(e_);
        return from_digits(prod);
    }

    std::uint32_t p_ = 0, e_ = 0, q_ = 0;
    std::vector<std::uint32_t> modulus_;
    std::vector<Fe> add_, mul_, neg_, inv_;
};

inline Big big_pow(const Big& base, long long exp) {
    Big r = 1, b = base;
    while (exp > 0) {
        if (exp & 1) r *= b;
        b *= b;
        exp >>= 1;
    }
    return r;
}

/// Ordinary binomial coefficient; zero for r < 0 or r > n.
inline Big binomial(long long n, long long r) {
    if (r < 0 || r > n) return 0;
    if (r > n - r) r = n - r;
    Big num = 1;
    for (long long i = 0; i < r; ++i) {
        num *= (n - i);
        num /= (i + 1);  // exact: product of j consecutive integers is divisible by j!
    }
    return num;
}

/// Gaussian binomial [m k]_q: the number of k-dimensional subspaces of GF(q)^m.
inline Big gaussian_binomial(int m, int k, std::uint32_t q) {
    if (k < 0 || k > m || m < 0 || q < 2)
        throw std::invalid_argument("invalid Gaussian binomial arguments");
    Big num = 1, den = 1;
    for (int i = 0; i < k; ++i) {
        num *= big_pow(q, m - i) - 1;
        den *= big_pow(q, i + 1) - 1;
    }
    return num / den;  // exact
}

}  // namespace schubcode
