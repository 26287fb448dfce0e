#pragma once
// Exact arithmetic in GF(p^r) on a polynomial basis, and the quadratic
// extension GF(q^2) = GF(q)(sqrt(sigma)) with conjugation, norm and
// imaginary part.
//
// Conventions every downstream module relies on:
//   * an element is its index in [0, q): the coefficient vector of its
//     polynomial-basis representation read as a base-p integer, coefficient
//     of t^i in the p^i place, so 0 <-> 0 and 1 <-> 1;
//   * the modulus is the lexicographically smallest monic irreducible of
//     degree r over GF(p), comparing non-leading coefficient vectors
//     (c0, c1, ..., c_{r-1}) low degree first;
//   * multiplication runs on exp/log tables keyed to the smallest-index
//     primitive element, built once at construction.

#include <cstdint>
#include <stdexcept>
#include <string>
#include <vector>

namespace fqg {

struct FieldElem {
    uint32_t idx = 0;
    friend constexpr bool operator==(FieldElem a, FieldElem b) { return a.idx == b.idx; }
    friend constexpr bool operator!=(FieldElem a, FieldElem b) { return a.idx != b.idx; }
    friend constexpr bool operator<(FieldElem a, FieldElem b) { return a.idx < b.idx; }
};

inline constexpr uint64_t kDefaultFieldCeiling = 1ull << 20;

inline bool is_prime_u64(uint64_t n) {
    if (n < 2) return false;
    for (uint64_t d = 2; d * d <= n; d++)
        if (n % d == 0) return false;
    return true;
}

namespace detail {

// dense coefficient vectors over GF(p), low degree first
using Poly = std::vector<uint32_t>;

inline int poly_deg(const Poly& f) {
    for (int i = static_cast<int>(f.size()) - 1; i >= 0; i--)
        if (f[i] != 0) return i;
    return -1;
}

// f mod g in place; g monic
inline void poly_mod(Poly& f, const Poly& g, uint32_t p) {
    int dg = poly_deg(g);
    for (int i = poly_deg(f); i >= dg; i--) {
        uint32_t c = f[i];
        if (c == 0) continue;
        for (int j = 0; j <= dg; j++) {
            uint64_t t = static_cast<uint64_t>(c) * g[j] % p;
            uint32_t& fi = f[i - dg + j];
            fi = static_cast<uint32_t>((fi + p - t) % p);
        }
    }
}

inline Poly poly_mul_mod(const Poly& a, const Poly& b, const Poly& g, uint32_t p) {
    Poly prod(a.size() + b.size(), 0);
    for (size_t i = 0; i < a.size(); i++) {
        if (a[i] == 0) continue;
        for (size_t j = 0; j < b.size(); j++)
            prod[i + j] = static_cast<uint32_t>((prod[i + j] + static_cast<uint64_t>(a[i]) * b[j]) % p);
    }
    poly_mod(prod, g, p);
    prod.resize(g.size() - 1);
    return prod;
}

// reducible iff some monic poly of degree 1..deg(f)/2 divides f
inline bool poly_irreducible(const Poly& f, uint32_t p) {
    int df = poly_deg(f);
    if (df < 1) return false;
    for (int s = 1; 2 * s <= df; s++) {
        uint64_t count = 1;
        for (int i = 0; i < s; i++) count *= p;
        for (uint64_t m = 0; m < count; m++) {
            Poly g(s + 1, 0);
            uint64_t mm = m;
            for (int i = 0; i < s; i++) { g[i] = static_cast<uint32_t>(mm % p); mm /= p; }
            g[s] = 1;
            Poly rem = f;
            poly_mod(rem, g, p);
            if (poly_deg(rem) < 0) return false;
        }
    }
    return true;
}

inline std::vector<uint64_t> prime_factors(uint64_t n) {
    std::vector<uint64_t> fs;
    for (uint64_t d = 2; d * d <= n; d++)
        if (n % d == 0) {
            fs.push_back(d);
            while (n % d == 0) n /= d;
        }
    if (n > 1) fs.push_back(n);
    return fs;
}

} // namespace detail

class FieldCtx {
public:
    static FieldCtx make(uint32_t p, uint32_t r, uint64_t ceiling = kDefaultFieldCeiling) {
        if (!is_prime_u64(p)) throw std::invalid_argument("make_field: p = " + std::to_string(p) + " is not prime");
        if (r < 1) throw std::invalid_argument("make_field: extension degree must be >= 1");
        uint64_t q = 1;
        for (uint32_t i = 0; i < r; i++) {
            q *= p;
            if (q > ceiling) throw std::invalid_argument("make_field: p^r exceeds ceiling " + std::to_string(ceiling));
        }
        return FieldCtx(p, r, static_cast<uint32_t>(q));
    }

    uint32_t p() const { return p_; }
    uint32_t r() const { return r_; }
    uint32_t q() const { return q_; }
    // monic modulus, r+1 coefficients low degree first (for r = 1 this is t)
    const std::vector<uint32_t>& modulus() const { return modulus_; }

    FieldElem zero() const { return {0}; }
    FieldElem one() const { return {1}; }
    FieldElem from_index(uint32_t i) const {
        if (i >= q_) throw std::invalid_argument("element index out of range");
        return {i};
    }
    // constants embed with index = value mod p
    FieldElem from_int(uint64_t v) const { return {static_cast<uint32_t>(v % p_)}; }

    std::vector<uint32_t> coeffs(FieldElem a) const {
        std::vector<uint32_t> c(r_);
        uint32_t v = a.idx;
        for (uint32_t i = 0; i < r_; i++) { c[i] = v % p_; v /= p_; }
        return c;
    }

    FieldElem add(FieldElem a, FieldElem b) const {
        if (p_ == 2) return {a.idx ^ b.idx};
        if (r_ == 1) { uint32_t s = a.idx + b.idx; return {s >= p_ ? s - p_ : s}; }
        uint32_t res = 0, pw = 1, x = a.idx, y = b.idx;
        for (uint32_t i = 0; i < r_; i++) {
            uint32_t s = x % p_ + y % p_;
            if (s >= p_) s -= p_;
            res += s * pw;
            pw *= p_;
            x /= p_; y /= p_;
        }
        return {res};
    }

    FieldElem neg(FieldElem a) const {
        if (p_ == 2) return a;
        if (r_ == 1) return {a.idx == 0 ? 0 : p_ - a.idx};
        uint32_t res = 0, pw = 1, x = a.idx;
        for (uint32_t i = 0; i < r_; i++) {
            uint32_t d = x % p_;
            res += (d == 0 ? 0 : p_ - d) * pw;
            pw *= p_;
            x /= p_;
        }
        return {res};
    }

    FieldElem sub(FieldElem a, FieldElem b) const { return add(a, neg(b)); }

    FieldElem mul(FieldElem a, FieldElem b) const {
        if (a.idx == 0 || b.idx == 0) return {0};
        uint32_t s = log_[a.idx] + log_[b.idx];
        if (s >= q_ - 1) s -= q_ - 1;
        return {exp_[s]};
    }

    FieldElem inv(FieldElem a) const {
        if (a.idx == 0) throw std::domain_error("inversion of zero");
        uint32_t l = log_[a.idx];
        return {exp_[l == 0 ? 0 : q_ - 1 - l]};
    }

    FieldElem pow(FieldElem a, int64_t e) const {
        if (a.idx == 0) {
            if (e > 0) return {0};
            if (e == 0) return {1};
            throw std::domain_error("negative power of zero");
        }
        int64_t m = q_ - 1;
        int64_t em = e % m;
        if (em < 0) em += m;
        uint64_t l = static_cast<uint64_t>(log_[a.idx]) * static_cast<uint64_t>(em) % static_cast<uint64_t>(m);
        return {exp_[l]};
    }

    // true iff exists t with t^2 = a; every element is a square when q is
    // even, and 0 = 0^2 by convention
    bool is_square(FieldElem a) const {
        if (a.idx == 0 || q_ % 2 == 0) return true;
        return pow(a, (q_ - 1) / 2) == one();
    }

    // the smaller-index square root (pre: is_square(a))
    FieldElem sqrt(FieldElem a) const {
        if (a.idx == 0) return {0};
        if (q_ % 2 == 0) return pow(a, q_ / 2);
        uint32_t l = log_[a.idx];
        if (l % 2 != 0) throw std::domain_error("sqrt of a non-square");
        FieldElem root = {exp_[l / 2]};
        FieldElem other = neg(root);
        return other < root ? other : root;
    }

    // smallest-index element of multiplicative order q-1
    FieldElem primitive_element() const { return {generator_}; }

    uint64_t mult_order(FieldElem a) const {
        if (a.idx == 0) throw std::domain_error("order of zero");
        uint64_t ord = q_ - 1;
        for (uint64_t f : detail::prime_factors(q_ - 1))
            while (ord % f == 0 && pow(a, static_cast<int64_t>(ord / f)) == one()) ord /= f;
        return ord == 0 ? 1 : ord;
    }

    // absolute trace down to GF(p), returned as a residue in [0, p)
    uint32_t trace(FieldElem a) const {
        FieldElem s = a, x = a;
        for (uint32_t i = 1; i < r_; i++) {
            x = pow(x, p_);
            s = add(s, x);
        }
        if (s.idx >= p_) throw std::logic_error("trace left the prime subfield");
        return s.idx;
    }

private:
    FieldCtx(uint32_t p, uint32_t r, uint32_t q) : p_(p), r_(r), q_(q) {
        find_modulus();
        build_tables();
    }

    void find_modulus() {
        if (r_ == 1) { modulus_ = {0, 1}; return; }
        // lexicographic scan over (c0, ..., c_{r-1}), c0 most significant
        uint64_t count = 1;
        for (uint32_t i = 0; i < r_; i++) count *= p_;
        for (uint64_t m = 0; m < count; m++) {
            detail::Poly f(r_ + 1, 0);
            uint64_t mm = m;
            for (uint32_t i = 0; i < r_; i++) {
                f[r_ - 1 - i] = static_cast<uint32_t>(mm % p_);
                mm /= p_;
            }
            f[r_] = 1;
            if (detail::poly_irreducible(f, p_)) { modulus_ = f; return; }
        }
        throw std::logic_error("no irreducible modulus found");
    }

    uint32_t poly_to_index(const detail::Poly& f) const {
        uint32_t v = 0, pw = 1;
        for (uint32_t i = 0; i < r_; i++) { v += f[i] * pw; pw *= p_; }
        return v;
    }

    detail::Poly index_to_poly(uint32_t v) const {
        detail::Poly f(r_);
        for (uint32_t i = 0; i < r_; i++) { f[i] = v % p_; v /= p_; }
        return f;
    }

    uint32_t raw_mul(uint32_t a, uint32_t b) const {
        return poly_to_index(detail::poly_mul_mod(index_to_poly(a), index_to_poly(b), modulus_, p_));
    }

    uint32_t raw_pow(uint32_t a, uint64_t e) const {
        uint32_t res = 1, base = a;
        while (e) {
            if (e & 1) res = raw_mul(res, base);
            base = raw_mul(base, base);
            e >>= 1;
        }
        return res;
    }

    void build_tables() {
        auto factors = detail::prime_factors(q_ - 1);
        generator_ = 1;
        if (q_ > 2) {
            for (uint32_t g = 2; g < q_; g++) {
                bool ok = true;
                for (uint64_t f : factors)
                    if (raw_pow(g, (q_ - 1) / f) == 1) { ok = false; break; }
                if (ok) { generator_ = g; break; }
            }
        }
        exp_.resize(q_ - 1);
        log_.assign(q_, 0);
        uint32_t x = 1;
        for (uint32_t i = 0; i < q_ - 1; i++) {
            exp_[i] = x;
            log_[x] = i;
            x = raw_mul(x, generator_);
        }
        if (x != 1) throw std::logic_error("generator order mismatch");
    }

    uint32_t p_, r_, q_;
    uint32_t generator_ = 1;
    std::vector<uint32_t> modulus_;
    std::vector<uint32_t> exp_, log_;
};

// q = p^r decomposition for CLI-style parameters given as a prime power
inline std::pair<uint32_t, uint32_t> parse_prime_power(uint64_t q) {
    if (q < 2) throw std::invalid_argument("q must be a prime power >= 2");
    for (uint64_t p = 2; p * p <= q; p++) {
        if (q % p) continue;
        uint32_t r = 0;
        uint64_t v = q;
        while (v % p == 0) { v /= p; r++; }
        if (v != 1) throw std::invalid_argument(std::to_string(q) + " is not a prime power");
        return {static_cast<uint32_t>(p), r};
    }
    return {static_cast<uint32_t>(q), 1}; // q prime
}

// ---------------------------------------------------------------------------
// quadratic extension GF(q)(sqrt(sigma)), elements x + y*sqrt(sigma)

struct ExtElem {
    FieldElem re, im;
    friend bool operator==(const ExtElem& a, const ExtElem& b) { return a.re == b.re && a.im == b.im; }
};

class ExtCtx {
public:
    static ExtCtx make(const FieldCtx& base, FieldElem sigma) {
        if (base.q() % 2 == 0) throw std::invalid_argument("ext_field: base field must have odd q");
        if (sigma.idx == 0 || base.is_square(sigma))
            throw std::invalid_argument("ext_field: sigma must be a non-square");
        return ExtCtx(base, sigma);
    }

    const FieldCtx& base() const { return base_; }
    FieldElem sigma() const { return sigma_; }

    ExtElem from(FieldElem re, FieldElem im) const { return {re, im}; }
    ExtElem zero() const { return {{0}, {0}}; }
    ExtElem one() const { return {{1}, {0}}; }
    bool is_zero(const ExtElem& z) const { return z.re.idx == 0 && z.im.idx == 0; }

    ExtElem add(const ExtElem& a, const ExtElem& b) const { return {base_.add(a.re, b.re), base_.add(a.im, b.im)}; }
    ExtElem sub(const ExtElem& a, const ExtElem& b) const { return {base_.sub(a.re, b.re), base_.sub(a.im, b.im)}; }
    ExtElem neg(const ExtElem& a) const { return {base_.neg(a.re), base_.neg(a.im)}; }

    ExtElem mul(const ExtElem& a, const ExtElem& b) const {
        // (x1 + y1 s)(x2 + y2 s) = x1 x2 + sigma y1 y2 + (x1 y2 + x2 y1) s
        FieldElem re = base_.add(base_.mul(a.re, b.re), base_.mul(sigma_, base_.mul(a.im, b.im)));
        FieldElem im = base_.add(base_.mul(a.re, b.im), base_.mul(a.im, b.re));
        return {re, im};
    }

    ExtElem conj(const ExtElem& z) const { return {z.re, base_.neg(z.im)}; }

    // N(z) = z * conj(z) = x^2 - sigma y^2, always in the base field
    FieldElem norm(const ExtElem& z) const {
        return base_.sub(base_.mul(z.re, z.re), base_.mul(sigma_, base_.mul(z.im, z.im)));
    }

    ExtElem inv(const ExtElem& z) const {
        if (is_zero(z)) throw std::domain_error("inversion of zero");
        FieldElem ninv = base_.inv(norm(z));
        ExtElem c = conj(z);
        return {base_.mul(c.re, ninv), base_.mul(c.im, ninv)};
    }

    ExtElem pow(const ExtElem& z, uint64_t e) const {
        ExtElem res = one(), b = z;
        while (e) {
            if (e & 1) res = mul(res, b);
            b = mul(b, b);
            e >>= 1;
        }
        return res;
    }

private:
    ExtCtx(const FieldCtx& base, FieldElem sigma) : base_(base), sigma_(sigma) {}

    FieldCtx base_;
    FieldElem sigma_;
};

} // namespace fqg
