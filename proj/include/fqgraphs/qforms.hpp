#pragma once
// The classified non-degenerate quadratic forms on GF(q)^n, their associated
// bilinear forms and Gram matrices, and sphere-size counting by exhaustive
// enumeration.
//
// Catalog (odd q):
//   plus_even   Q+_{2m}(x)  = 2 x1 x2 + ... + 2 x_{2m-1} x_{2m}
//   minus_even  Q-_{2m}(x)  = 2 x1 x2 + ... + 2 x_{2m-3} x_{2m-2} + x_{2m-1}^2 - alpha x_{2m}^2
//   odd_std     Q_{2m+1}(x) = 2 x1 x2 + ... + 2 x_{2m-1} x_{2m} + x_{2m+1}^2
//   odd_prime   Q'_{2m+1}(x)= 2 x1 x2 + ... + 2 x_{2m-1} x_{2m} + alpha x_{2m+1}^2
// with alpha the smallest-index non-square. Even q:
//   even_char_plus     x1 x2 + ... + x_{2m-1} x_{2m}
//   even_char_minus    x1 x2 + ... + x_{2m-3} x_{2m-2} + x_{2m-1}^2 + x_{2m-1} x_{2m} + beta x_{2m}^2
//   even_char_odd_dim  x1 x2 + ... + x_{2m-1} x_{2m} + x_{2m+1}^2
// with beta the smallest-index element making t^2 + t + beta irreducible.
// The cross term in even_char_minus is required for the form to be
// anisotropic on its last plane; without it x_{2m-1}^2 + beta x_{2m}^2 is a
// perfect square of a linear form in characteristic 2.

#include <cstdint>
#include <span>
#include <stdexcept>
#include <string>
#include <vector>

#include "fqgraphs/ffield.hpp"

namespace fqg {

enum class FormKind {
    plus_even,
    minus_even,
    odd_std,
    odd_prime,
    even_char_plus,
    even_char_minus,
    even_char_odd_dim,
};

inline const char* form_kind_name(FormKind k) {
    switch (k) {
        case FormKind::plus_even: return "plus_even";
        case FormKind::minus_even: return "minus_even";
        case FormKind::odd_std: return "odd_std";
        case FormKind::odd_prime: return "odd_prime";
        case FormKind::even_char_plus: return "even_char_plus";
        case FormKind::even_char_minus: return "even_char_minus";
        case FormKind::even_char_odd_dim: return "even_char_odd_dim";
    }
    return "?";
}

inline FormKind form_kind_from_name(const std::string& s) {
    for (FormKind k : {FormKind::plus_even, FormKind::minus_even, FormKind::odd_std, FormKind::odd_prime,
                       FormKind::even_char_plus, FormKind::even_char_minus, FormKind::even_char_odd_dim})
        if (s == form_kind_name(k)) return k;
    throw std::invalid_argument("unknown form kind: " + s);
}

struct GramMatrix {
    uint32_t dim = 0;
    std::vector<FieldElem> entries; // row-major, symmetric

    FieldElem at(uint32_t i, uint32_t j) const { return entries[i * dim + j]; }

    uint32_t rank(const FieldCtx& f) const {
        std::vector<FieldElem> m = entries;
        uint32_t rk = 0;
        for (uint32_t col = 0; col < dim && rk < dim; col++) {
            uint32_t piv = dim;
            for (uint32_t row = rk; row < dim; row++)
                if (m[row * dim + col].idx != 0) { piv = row; break; }
            if (piv == dim) continue;
            for (uint32_t j = 0; j < dim; j++) std::swap(m[piv * dim + j], m[rk * dim + j]);
            FieldElem pinv = f.inv(m[rk * dim + col]);
            for (uint32_t row = 0; row < dim; row++) {
                if (row == rk || m[row * dim + col].idx == 0) continue;
                FieldElem factor = f.mul(m[row * dim + col], pinv);
                for (uint32_t j = 0; j < dim; j++)
                    m[row * dim + j] = f.sub(m[row * dim + j], f.mul(factor, m[rk * dim + j]));
            }
            rk++;
        }
        return rk;
    }
};

class QuadraticForm {
public:
    static QuadraticForm make(const FieldCtx& f, FormKind kind, uint32_t dim) {
        bool odd_q = f.q() % 2 == 1;
        bool even_dim = dim % 2 == 0;
        switch (kind) {
            case FormKind::plus_even:
            case FormKind::minus_even:
                if (!odd_q) throw std::invalid_argument("make_form: kind requires odd q");
                if (!even_dim || dim < 2) throw std::invalid_argument("make_form: kind requires even dim >= 2");
                break;
            case FormKind::odd_std:
            case FormKind::odd_prime:
                if (!odd_q) throw std::invalid_argument("make_form: kind requires odd q");
                if (even_dim || dim < 3) throw std::invalid_argument("make_form: kind requires odd dim >= 3");
                break;
            case FormKind::even_char_plus:
            case FormKind::even_char_minus:
                if (odd_q) throw std::invalid_argument("make_form: kind requires even q");
                if (!even_dim || dim < 2) throw std::invalid_argument("make_form: kind requires even dim >= 2");
                break;
            case FormKind::even_char_odd_dim:
                if (odd_q) throw std::invalid_argument("make_form: kind requires even q");
                if (even_dim || dim < 3) throw std::invalid_argument("make_form: kind requires odd dim >= 3");
                break;
        }
        FieldElem param{0};
        if (kind == FormKind::minus_even || kind == FormKind::odd_prime) {
            param = smallest_nonsquare(f);
        } else if (kind == FormKind::even_char_minus) {
            param = smallest_irreducible_beta(f);
        }
        return QuadraticForm(f, kind, dim, param);
    }

    const FieldCtx& ctx() const { return ctx_; }
    FormKind kind() const { return kind_; }
    uint32_t dim() const { return dim_; }
    FieldElem param() const { return param_; }

    FieldElem eval(std::span<const FieldElem> x) const {
        if (x.size() != dim_) throw std::invalid_argument("eval_form: dimension mismatch");
        const FieldCtx& f = ctx_;
        FieldElem acc{0};
        uint32_t pairs = hyperbolic_pairs();
        for (uint32_t j = 0; j < pairs; j++) {
            FieldElem t = f.mul(x[2 * j], x[2 * j + 1]);
            acc = f.add(acc, two_.idx ? f.mul(two_, t) : t);
        }
        switch (kind_) {
            case FormKind::plus_even:
            case FormKind::even_char_plus:
                break;
            case FormKind::minus_even: {
                FieldElem u = x[dim_ - 2], v = x[dim_ - 1];
                acc = f.add(acc, f.sub(f.mul(u, u), f.mul(param_, f.mul(v, v))));
                break;
            }
            case FormKind::odd_std:
            case FormKind::even_char_odd_dim: {
                FieldElem u = x[dim_ - 1];
                acc = f.add(acc, f.mul(u, u));
                break;
            }
            case FormKind::odd_prime: {
                FieldElem u = x[dim_ - 1];
                acc = f.add(acc, f.mul(param_, f.mul(u, u)));
                break;
            }
            case FormKind::even_char_minus: {
                FieldElem u = x[dim_ - 2], v = x[dim_ - 1];
                FieldElem s = f.add(f.mul(u, u), f.mul(u, v));
                acc = f.add(acc, f.add(s, f.mul(param_, f.mul(v, v))));
                break;
            }
        }
        return acc;
    }

    // <x,y>_Q = Q(x+y) - Q(x) - Q(y), by the defining expression
    FieldElem bilinear(std::span<const FieldElem> x, std::span<const FieldElem> y) const {
        if (x.size() != dim_ || y.size() != dim_) throw std::invalid_argument("bilinear: dimension mismatch");
        std::vector<FieldElem> s(dim_);
        for (uint32_t i = 0; i < dim_; i++) s[i] = ctx_.add(x[i], y[i]);
        return ctx_.sub(ctx_.sub(eval(s), eval(x)), eval(y));
    }

    // S with x S x^t = Q(x): S_ii = Q(e_i), S_ij = <e_i,e_j>/2 off-diagonal
    GramMatrix gram() const {
        if (ctx_.q() % 2 == 0) throw std::invalid_argument("gram_matrix: requires odd q");
        const FieldCtx& f = ctx_;
        FieldElem half = f.inv(f.from_int(2));
        GramMatrix g;
        g.dim = dim_;
        g.entries.assign(static_cast<size_t>(dim_) * dim_, FieldElem{0});
        std::vector<FieldElem> ei(dim_, FieldElem{0}), ej(dim_, FieldElem{0});
        for (uint32_t i = 0; i < dim_; i++) {
            ei.assign(dim_, FieldElem{0});
            ei[i] = f.one();
            g.entries[i * dim_ + i] = eval(ei);
            for (uint32_t j = i + 1; j < dim_; j++) {
                ej.assign(dim_, FieldElem{0});
                ej[j] = f.one();
                FieldElem b = f.mul(bilinear(ei, ej), half);
                g.entries[i * dim_ + j] = b;
                g.entries[j * dim_ + i] = b;
            }
        }
        return g;
    }

    std::string name() const {
        std::string s = form_kind_name(kind_);
        s += "[n=" + std::to_string(dim_);
        if (kind_ == FormKind::minus_even || kind_ == FormKind::odd_prime)
            s += ",alpha=" + std::to_string(param_.idx);
        if (kind_ == FormKind::even_char_minus) s += ",beta=" + std::to_string(param_.idx);
        s += "]";
        return s;
    }

private:
    QuadraticForm(const FieldCtx& f, FormKind kind, uint32_t dim, FieldElem param)
        : ctx_(f), kind_(kind), dim_(dim), param_(param) {
        two_ = (f.q() % 2 == 1) ? f.from_int(2) : FieldElem{0};
    }

    uint32_t hyperbolic_pairs() const {
        switch (kind_) {
            case FormKind::plus_even:
            case FormKind::even_char_plus: return dim_ / 2;
            case FormKind::minus_even:
            case FormKind::even_char_minus: return dim_ / 2 - 1;
            case FormKind::odd_std:
            case FormKind::odd_prime:
            case FormKind::even_char_odd_dim: return (dim_ - 1) / 2;
        }
        return 0;
    }

    static FieldElem smallest_nonsquare(const FieldCtx& f) {
        for (uint32_t i = 2; i < f.q(); i++)
            if (!f.is_square({i})) return {i};
        throw std::logic_error("no non-square found");
    }

    static FieldElem smallest_irreducible_beta(const FieldCtx& f) {
        // t^2 + t + beta irreducible over GF(q) iff beta avoids {u^2 + u}
        std::vector<bool> image(f.q(), false);
        for (uint32_t u = 0; u < f.q(); u++) {
            FieldElem e{u};
            image[f.add(f.mul(e, e), e).idx] = true;
        }
        for (uint32_t b = 0; b < f.q(); b++)
            if (!image[b]) return {b};
        throw std::logic_error("no valid beta found");
    }

    FieldCtx ctx_;
    FormKind kind_;
    uint32_t dim_;
    FieldElem param_;
    FieldElem two_; // 2 for odd q, unused marker 0 for even q
};

inline bool is_nondegenerate(const QuadraticForm& q) {
    if (q.ctx().q() % 2 == 0) throw std::invalid_argument("is_nondegenerate: requires odd q");
    return q.gram().rank(q.ctx()) == q.dim();
}

// ---------------------------------------------------------------------------
// vector index coding: coordinate i occupies the q^i place

inline uint64_t space_size(uint32_t q, uint32_t dim) {
    uint64_t n = 1;
    for (uint32_t i = 0; i < dim; i++) n *= q;
    return n;
}

inline void decode_vindex(uint64_t v, uint32_t q, uint32_t dim, FieldElem* out) {
    for (uint32_t i = 0; i < dim; i++) { out[i] = {static_cast<uint32_t>(v % q)}; v /= q; }
}

inline uint64_t encode_vindex(std::span<const FieldElem> x, uint32_t q) {
    uint64_t v = 0, pw = 1;
    for (size_t i = 0; i < x.size(); i++) { v += static_cast<uint64_t>(x[i].idx) * pw; pw *= q; }
    return v;
}

inline constexpr uint64_t kSphereCeiling = 1ull << 24;

// |{x : Q(x) = a}| for every a, by one exhaustive pass
inline std::vector<uint64_t> sphere_counts(const QuadraticForm& form, uint64_t ceiling = kSphereCeiling) {
    uint64_t n = space_size(form.ctx().q(), form.dim());
    if (n > ceiling) throw std::invalid_argument("sphere_counts: instance too large");
    std::vector<uint64_t> counts(form.ctx().q(), 0);
    std::vector<FieldElem> x(form.dim());
    for (uint64_t v = 0; v < n; v++) {
        decode_vindex(v, form.ctx().q(), form.dim(), x.data());
        counts[form.eval(x).idx]++;
    }
    return counts;
}

inline uint64_t sphere_size(const QuadraticForm& form, FieldElem a, uint64_t ceiling = kSphereCeiling) {
    return sphere_counts(form, ceiling)[a.idx];
}

// all vectors bucketed by their Q-value; bucket[a] holds vector indices
inline std::vector<std::vector<uint32_t>> value_buckets(const QuadraticForm& form, uint64_t ceiling) {
    uint64_t n = space_size(form.ctx().q(), form.dim());
    if (n > ceiling) throw std::invalid_argument("value_buckets: instance too large");
    std::vector<std::vector<uint32_t>> buckets(form.ctx().q());
    std::vector<FieldElem> x(form.dim());
    for (uint64_t v = 0; v < n; v++) {
        decode_vindex(v, form.ctx().q(), form.dim(), x.data());
        buckets[form.eval(x).idx].push_back(static_cast<uint32_t>(v));
    }
    return buckets;
}

// closed-form sphere sizes predicted for a != 0; odd-dimension odd-q forms
// carry both signs because the sign depends on a (recorded empirically, not
// asserted). Returned empty when no prediction is made.
inline std::vector<uint64_t> sphere_predictions(const QuadraticForm& form) {
    uint32_t q = form.ctx().q(), dim = form.dim();
    uint64_t qm1 = 1; // q^{m-1} where m = dim/2, or q^m for odd dim
    switch (form.kind()) {
        case FormKind::plus_even:
        case FormKind::even_char_plus: {
            for (uint32_t i = 0; i + 1 < dim / 2; i++) qm1 *= q;
            uint64_t q2m1 = 1;
            for (uint32_t i = 0; i + 1 < dim; i++) q2m1 *= q;
            return {q2m1 - qm1};
        }
        case FormKind::minus_even:
        case FormKind::even_char_minus: {
            for (uint32_t i = 0; i + 1 < dim / 2; i++) qm1 *= q;
            uint64_t q2m1 = 1;
            for (uint32_t i = 0; i + 1 < dim; i++) q2m1 *= q;
            return {q2m1 + qm1};
        }
        case FormKind::odd_std:
        case FormKind::odd_prime: {
            uint64_t qm = 1;
            for (uint32_t i = 0; i < (dim - 1) / 2; i++) qm *= q;
            uint64_t q2m = qm * qm;
            return {q2m - qm, q2m + qm};
        }
        case FormKind::even_char_odd_dim: {
            uint64_t q2m = 1;
            for (uint32_t i = 0; i + 1 < dim; i++) q2m *= q;
            return {q2m};
        }
    }
    return {};
}

} // namespace fqg
