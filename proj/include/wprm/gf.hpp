#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "wprm/error.hpp"

namespace wprm {

/// A field element, identified by its integer encoding in [0, q).
/// The encoding of the element with polynomial coefficients c[0..k-1]
/// (little-endian over F_p) is sum c[i] * p^i; 0 encodes 0 and 1 encodes 1.
using fe = int;

namespace detail {

inline bool is_prime(int p) {
    if (p < 2) return false;
    for (int f = 2; f * f <= p; ++f)
        if (p % f == 0) return false;
    return true;
}

} // namespace detail

/// Exact arithmetic in F_q, q = p^k, with a deterministic canonical model:
/// F_q = F_p[x]/(m) where m is the primitive monic degree-k polynomial of
/// smallest base-p coefficient encoding.  For k >= 2 the class of x is then
/// a generator of F_q^*.  All operations are table-driven; the tables are
/// built once at construction (q is capped, 64 by default).
class field {
public:
    static constexpr int default_cap = 64;

    field(int p, int k, int cap = default_cap) : p_(p), k_(k) {
        if (!detail::is_prime(p)) fail(errc::not_prime, "field: p = " + std::to_string(p) + " is not prime");
        if (k < 1) fail(errc::bad_argument, "field: k must be >= 1");
        long long q = 1;
        for (int i = 0; i < k; ++i) {
            q *= p;
            if (q > cap) fail(errc::too_large, "field: p^k exceeds cap " + std::to_string(cap));
        }
        q_ = static_cast<int>(q);
        modulus_ = find_canonical_modulus();
        build_tables();
    }

    int p() const { return p_; }
    int k() const { return k_; }
    int q() const { return q_; }

    /// Monic modulus coefficients, little-endian, size k+1.  For k = 1 the
    /// modulus is x itself (arithmetic is plain mod p).
    const std::vector<int>& modulus() const { return modulus_; }

    fe add(fe a, fe b) const { return add_[a * q_ + b]; }
    fe sub(fe a, fe b) const { return add_[a * q_ + neg_[b]]; }
    fe mul(fe a, fe b) const { return mul_[a * q_ + b]; }
    fe neg(fe a) const { return neg_[a]; }

    fe inv(fe a) const {
        if (a == 0) fail(errc::division_by_zero, "field: inverse of zero");
        return inv_[a];
    }

    /// a^n with the convention 0^0 = 1.
    fe pow(fe a, long long n) const {
        if (n < 0) fail(errc::bad_argument, "field: negative exponent");
        if (n == 0) return 1;
        if (a == 0) return 0;
        n %= q_ - 1;
        if (n == 0) return 1;
        fe r = 1, base = a;
        while (n > 0) {
            if (n & 1) r = mul(r, base);
            base = mul(base, base);
            n >>= 1;
        }
        return r;
    }

    /// A fixed generator of F_q^*: the class of x for k >= 2, the smallest
    /// generator of F_p^* (by encoding) for k = 1.
    fe primitive_element() const { return primitive_; }

    /// All q elements in encoding order: 0, 1, 2, ..., q-1.
    std::vector<fe> elements() const {
        std::vector<fe> out(q_);
        for (int i = 0; i < q_; ++i) out[i] = i;
        return out;
    }

    /// Polynomial coefficients of an element, little-endian, size k.
    std::vector<int> coeffs(fe a) const {
        std::vector<int> c(k_);
        for (int i = 0; i < k_; ++i) { c[i] = a % p_; a /= p_; }
        return c;
    }

    /// "p^k:modulus-encoding" (the base-p encoding of the modulus coefficients).
    std::string spec_string() const {
        long long enc = 0, pw = 1;
        for (int i = 0; i <= k_; ++i) { enc += static_cast<long long>(modulus_[i]) * pw; pw *= p_; }
        return std::to_string(p_) + "^" + std::to_string(k_) + ":" + std::to_string(enc);
    }

    bool operator==(const field& o) const { return p_ == o.p_ && k_ == o.k_ && modulus_ == o.modulus_; }

private:
    using poly = std::vector<int>; // little-endian, length k_, coefficients in [0,p)

    poly poly_mul_mod(const poly& a, const poly& b, const poly& mod) const {
        std::vector<int> prod(2 * k_ - 1, 0);
        for (int i = 0; i < k_; ++i)
            for (int j = 0; j < k_; ++j) prod[i + j] = (prod[i + j] + a[i] * b[j]) % p_;
        // reduce by the monic modulus
        for (int i = 2 * k_ - 2; i >= k_; --i) {
            int c = prod[i];
            if (c == 0) continue;
            prod[i] = 0;
            for (int j = 0; j < k_; ++j) prod[i - k_ + j] = ((prod[i - k_ + j] - c * mod[j]) % p_ + p_) % p_;
        }
        prod.resize(k_);
        return prod;
    }

    static bool is_one(const poly& a) {
        if (a[0] != 1) return false;
        for (size_t i = 1; i < a.size(); ++i)
            if (a[i] != 0) return false;
        return true;
    }

    // Multiplicative order of the class of x modulo the candidate.  If x has
    // order exactly q-1 the quotient ring has q-1 units, which forces the
    // candidate to be irreducible, hence primitive.
    bool x_has_full_order(const poly& mod) const {
        poly x(k_, 0);
        x[1 % k_] = 1; // k_ >= 2 here
        poly acc = x;
        for (int ord = 1; ord < q_ - 1; ++ord) {
            if (is_one(acc)) return false;
            acc = poly_mul_mod(acc, x, mod);
        }
        return is_one(acc);
    }

    std::vector<int> find_canonical_modulus() const {
        if (k_ == 1) return {0, 1}; // modulus x; unused by prime-field arithmetic
        for (int low = 0; low < q_; ++low) {
            poly mod(k_ + 1);
            int v = low;
            for (int i = 0; i < k_; ++i) { mod[i] = v % p_; v /= p_; }
            mod[k_] = 1;
            poly lower(mod.begin(), mod.end() - 1);
            if (x_has_full_order(lower)) return mod;
        }
        fail(errc::bad_argument, "field: no primitive polynomial found"); // unreachable
    }

    void build_tables() {
        add_.resize(q_ * q_);
        mul_.resize(q_ * q_);
        neg_.resize(q_);
        inv_.assign(q_, 0);
        if (k_ == 1) {
            for (int a = 0; a < q_; ++a) {
                neg_[a] = (p_ - a) % p_;
                for (int b = 0; b < q_; ++b) {
                    add_[a * q_ + b] = (a + b) % p_;
                    mul_[a * q_ + b] = (a * b) % p_;
                }
            }
        } else {
            poly lower(modulus_.begin(), modulus_.end() - 1);
            auto decode = [&](int e) {
                poly c(k_);
                for (int i = 0; i < k_; ++i) { c[i] = e % p_; e /= p_; }
                return c;
            };
            auto encode = [&](const poly& c) {
                int e = 0, pw = 1;
                for (int i = 0; i < k_; ++i) { e += c[i] * pw; pw *= p_; }
                return e;
            };
            for (int a = 0; a < q_; ++a) {
                poly ca = decode(a), na(k_);
                for (int i = 0; i < k_; ++i) na[i] = (p_ - ca[i]) % p_;
                neg_[a] = encode(na);
                for (int b = 0; b < q_; ++b) {
                    poly cb = decode(b), s(k_);
                    for (int i = 0; i < k_; ++i) s[i] = (ca[i] + cb[i]) % p_;
                    add_[a * q_ + b] = encode(s);
                    mul_[a * q_ + b] = encode(poly_mul_mod(ca, cb, lower));
                }
            }
        }
        for (int a = 1; a < q_; ++a)
            for (int b = 1; b < q_; ++b)
                if (mul_[a * q_ + b] == 1) { inv_[a] = b; break; }

        if (k_ >= 2) {
            primitive_ = p_; // encoding of the class of x
        } else {
            for (int g = 1; g < q_; ++g) {
                int ord = 1;
                fe acc = g;
                while (acc != 1) { acc = mul(acc, g); ++ord; }
                if (ord == q_ - 1) { primitive_ = g; break; }
            }
        }
    }

    int p_, k_, q_;
    std::vector<int> modulus_;
    std::vector<fe> add_, mul_, neg_, inv_;
    fe primitive_ = 1;
};

} // namespace wprm
