#pragma once
// Constructions of every graph family: Euclidean graphs E_q(n,Q,a) on the
// full vector space, upper-half-plane graphs V_q(sigma,a), the six
// orthogonal families on non-isotropic projective points, and the two
// binary code graphs.
//
// Orthogonal edge semantics are existential over representatives: an edge
// is present iff SOME scalings of the two representatives satisfy the
// stated condition. This is the only convention that is independent of the
// chosen representatives, and the post-build degree audit validates it
// against the stated valencies.

#include <algorithm>
#include <cmath>
#include <cstdint>
#include <set>
#include <stdexcept>
#include <string>
#include <vector>

#include "fqgraphs/ffield.hpp"
#include "fqgraphs/graph.hpp"
#include "fqgraphs/qforms.hpp"

namespace fqg {

// ---------------------------------------------------------------------------
// Euclidean graphs: Cayley graphs of (F_q^d, +) with connection set
// {s != 0 : Q(s) = a}

inline Graph build_euclidean(const QuadraticForm& form, FieldElem a,
                             uint64_t ceiling = kDefaultVertexCeiling) {
    const FieldCtx& f = form.ctx();
    uint32_t q = f.q(), dim = form.dim();
    uint64_t n64 = space_size(q, dim);
    if (n64 > ceiling)
        throw std::invalid_argument("build_euclidean: q^dim = " + std::to_string(n64) + " exceeds ceiling");
    uint32_t n = static_cast<uint32_t>(n64);

    // connection set and its digit matrix
    std::vector<uint32_t> conn;
    std::vector<FieldElem> x(dim);
    for (uint32_t v = 1; v < n; v++) {
        decode_vindex(v, q, dim, x.data());
        if (form.eval(x) == a) conn.push_back(v);
    }
    std::vector<uint16_t> sdig(conn.size() * dim);
    for (size_t k = 0; k < conn.size(); k++) {
        uint32_t v = conn[k];
        for (uint32_t i = 0; i < dim; i++) { sdig[k * dim + i] = static_cast<uint16_t>(v % q); v /= q; }
    }
    std::vector<uint64_t> powq(dim);
    powq[0] = 1;
    for (uint32_t i = 1; i < dim; i++) powq[i] = powq[i - 1] * q;
    // coordinate addition is field addition (base-p digitwise), not mod q
    std::vector<uint16_t> addtab(static_cast<size_t>(q) * q);
    for (uint32_t a2 = 0; a2 < q; a2++)
        for (uint32_t b2 = 0; b2 < q; b2++)
            addtab[static_cast<size_t>(a2) * q + b2] = static_cast<uint16_t>(f.add({a2}, {b2}).idx);

    std::vector<std::vector<uint32_t>> labels(n);
    for (uint32_t v = 0; v < n; v++) {
        labels[v].resize(dim);
        uint32_t t = v;
        for (uint32_t i = 0; i < dim; i++) { labels[v][i] = t % q; t /= q; }
    }

    FamilyInfo info;
    info.family = Family::euclidean;
    info.q = q;
    info.dim = dim;
    info.tag = "euclidean(q=" + std::to_string(q) + ",d=" + std::to_string(dim) + ",kind=" +
               form_kind_name(form.kind()) + ",a=" + std::to_string(a.idx) + ")";
    Graph g(n, LabelKind::field_vector, std::move(labels), std::move(info));

    std::vector<uint16_t> vdig(dim, 0);
    for (uint32_t v = 0; v < n; v++) {
        for (size_t k = 0; k < conn.size(); k++) {
            uint64_t u = 0;
            const uint16_t* sd = &sdig[k * dim];
            for (uint32_t i = 0; i < dim; i++) u += addtab[static_cast<size_t>(vdig[i]) * q + sd[i]] * powq[i];
            g.set_arc(v, static_cast<uint32_t>(u)); // loop-free: s != 0, and S = -S mirrors the arc
        }
        // odometer step
        for (uint32_t i = 0; i < dim; i++) {
            if (++vdig[i] < q) break;
            vdig[i] = 0;
        }
    }

    FamilyInfo& fi = g.family();
    fi.regular = g.is_regular(&fi.valency);
    if (a.idx != 0) {
        fi.expected_valencies = sphere_predictions(form);
        fi.valency_ok = fi.regular && std::find(fi.expected_valencies.begin(), fi.expected_valencies.end(),
                                                fi.valency) != fi.expected_valencies.end();
    }
    if (q % 2 == 1) fi.lambda_bound = 2.0 * std::pow(static_cast<double>(q), (dim - 1) / 2.0);
    return g;
}

// ---------------------------------------------------------------------------
// finite upper half plane H_q = {x + y sqrt(sigma) : y != 0} with the
// distance d(z,w) = N(z-w) / (Im z Im w); V_q(sigma,a) joins points at
// distance a

struct HalfPlane {
    ExtCtx ext;
    // point index (y-1)*q + x  <->  z = x + y sqrt(sigma), y in [1, q)
    uint32_t num_points() const { return ext.base().q() * (ext.base().q() - 1); }
    ExtElem point(uint32_t idx) const {
        uint32_t q = ext.base().q();
        return ext.from({idx % q}, {idx / q + 1});
    }
    uint32_t index_of(const ExtElem& z) const {
        if (z.im.idx == 0) throw std::invalid_argument("not a half-plane point (Im = 0)");
        return (z.im.idx - 1) * ext.base().q() + z.re.idx;
    }
    FieldElem distance(const ExtElem& z, const ExtElem& w) const {
        const FieldCtx& f = ext.base();
        return f.mul(ext.norm(ext.sub(z, w)), f.inv(f.mul(z.im, w.im)));
    }
};

inline Graph build_halfplane(const ExtCtx& ext, FieldElem a,
                             uint64_t ceiling = kDefaultVertexCeiling) {
    const FieldCtx& f = ext.base();
    uint32_t q = f.q();
    uint64_t n64 = static_cast<uint64_t>(q) * (q - 1);
    if (n64 > ceiling) throw std::invalid_argument("build_halfplane: q(q-1) exceeds ceiling");
    uint32_t n = static_cast<uint32_t>(n64);
    HalfPlane hp{ext};

    std::vector<std::vector<uint32_t>> labels(n);
    for (uint32_t v = 0; v < n; v++) {
        ExtElem z = hp.point(v);
        labels[v] = {z.re.idx, z.im.idx};
    }

    FieldElem four_sigma = f.mul(f.from_int(4), ext.sigma());
    FamilyInfo info;
    info.family = Family::halfplane;
    info.q = q;
    info.dim = 2;
    info.tag = "halfplane(q=" + std::to_string(q) + ",sigma=" + std::to_string(ext.sigma().idx) +
               ",a=" + std::to_string(a.idx) + ")";
    Graph g(n, LabelKind::halfplane_point, std::move(labels), std::move(info));

    std::vector<FieldElem> inv_im(q);
    for (uint32_t y = 1; y < q; y++) inv_im[y] = f.inv({y});
    for (uint32_t i = 0; i < n; i++) {
        ExtElem zi = hp.point(i);
        for (uint32_t j = i + 1; j < n; j++) {
            ExtElem zj = hp.point(j);
            FieldElem d = f.mul(ext.norm(ext.sub(zi, zj)), f.mul(inv_im[zi.im.idx], inv_im[zj.im.idx]));
            if (d == a) g.add_edge(i, j);
        }
    }

    FamilyInfo& fi = g.family();
    fi.regular = g.is_regular(&fi.valency);
    if (a.idx == 0) {
        fi.expected_valencies = {0};
        fi.note = "a = 0: empty graph (distance 0 only at z = w)";
    } else if (a == four_sigma) {
        fi.expected_valencies = {1};
        fi.note = "a = 4*sigma: perfect matching of (q^2-q)/2 edges";
    } else {
        fi.expected_valencies = {static_cast<uint64_t>(q) + 1};
        fi.lambda_bound = 2.0 * std::sqrt(static_cast<double>(q));
    }
    fi.valency_ok = fi.regular && std::find(fi.expected_valencies.begin(), fi.expected_valencies.end(),
                                            fi.valency) != fi.expected_valencies.end();
    return g;
}

// canonical sigma for V_q families: the primitive element (a generator is
// never a square)
inline ExtCtx halfplane_ext(const FieldCtx& f) { return ExtCtx::make(f, f.primitive_element()); }

// ---------------------------------------------------------------------------
// non-isotropic projective points, split by the quadratic character of the
// form value (representative-independent since Q(tx) = t^2 Q(x))

struct ProjPointClasses {
    std::vector<uint32_t> square_reps;    // canonical reps, first non-zero coord = 1
    std::vector<uint32_t> nonsquare_reps;
    std::string note; // which stated cardinality each character class matched
};

inline ProjPointClasses nonisotropic_points(const QuadraticForm& form, uint64_t scan_ceiling = kSphereCeiling) {
    const FieldCtx& f = form.ctx();
    if (f.q() % 2 == 0) throw std::invalid_argument("nonisotropic_points: requires odd q");
    uint32_t q = f.q(), dim = form.dim();
    uint64_t n = space_size(q, dim);
    if (n > scan_ceiling) throw std::invalid_argument("nonisotropic_points: space too large");

    ProjPointClasses cls;
    std::vector<FieldElem> x(dim);
    for (uint64_t v = 1; v < n; v++) {
        // canonical rep: first non-zero coordinate (lowest index) equals 1
        decode_vindex(v, q, dim, x.data());
        uint32_t first = 0;
        while (x[first].idx == 0) first++;
        if (x[first].idx != 1) continue;
        FieldElem val = form.eval(x);
        if (val.idx == 0) continue;
        if (f.is_square(val)) cls.square_reps.push_back(static_cast<uint32_t>(v));
        else cls.nonsquare_reps.push_back(static_cast<uint32_t>(v));
    }

    // stated cardinalities; a mismatch is a convention bug, not a warning
    uint64_t nsq = cls.square_reps.size(), nns = cls.nonsquare_reps.size();
    auto fail = [&](const std::string& expect) {
        throw std::runtime_error("nonisotropic_points: class sizes {" + std::to_string(nsq) + "," +
                                 std::to_string(nns) + "} do not match " + expect + " for " + form.name());
    };
    if (dim % 2 == 1) {
        uint64_t qm = 1;
        for (uint32_t i = 0; i < (dim - 1) / 2; i++) qm *= q;
        uint64_t lo = (qm * qm - qm) / 2, hi = (qm * qm + qm) / 2;
        if (nsq == lo && nns == hi)
            cls.note = "square class = (q^2m - q^m)/2, nonsquare class = (q^2m + q^m)/2";
        else if (nsq == hi && nns == lo)
            cls.note = "square class = (q^2m + q^m)/2, nonsquare class = (q^2m - q^m)/2";
        else
            fail("{(q^2m - q^m)/2, (q^2m + q^m)/2}");
    } else {
        uint64_t qm1 = 1;
        for (uint32_t i = 0; i + 1 < dim / 2; i++) qm1 *= q;
        uint64_t q2m1 = qm1 * qm1 * q;
        uint64_t each = (form.kind() == FormKind::plus_even || form.kind() == FormKind::even_char_plus)
                            ? (q2m1 - qm1) / 2
                            : (q2m1 + qm1) / 2;
        if (nsq != each || nns != each) fail("equal classes of size " + std::to_string(each));
        cls.note = "both classes of size " + std::to_string(each);
    }
    return cls;
}

// ---------------------------------------------------------------------------
// orthogonal non-Euclidean families

enum class OrthFamily { odd_theta, odd_omega, even_plus, even_minus };

inline const char* orth_family_name(OrthFamily f) {
    switch (f) {
        case OrthFamily::odd_theta: return "odd_theta";
        case OrthFamily::odd_omega: return "odd_omega";
        case OrthFamily::even_plus: return "even_plus";
        case OrthFamily::even_minus: return "even_minus";
    }
    return "?";
}

inline Graph build_orthogonal(OrthFamily fam, const QuadraticForm& form, uint32_t i,
                              uint64_t ceiling = kDefaultVertexCeiling) {
    const FieldCtx& f = form.ctx();
    uint32_t q = f.q(), dim = form.dim();
    if (q % 2 == 0) throw std::invalid_argument("build_orthogonal: requires odd q");
    if (i < 1 || i > (q + 1) / 2) throw std::invalid_argument("build_orthogonal: class index out of range");
    bool odd_fam = fam == OrthFamily::odd_theta || fam == OrthFamily::odd_omega;
    if (odd_fam && form.kind() != FormKind::odd_std)
        throw std::invalid_argument("build_orthogonal: odd families need the odd_std form");
    if (fam == OrthFamily::even_plus && form.kind() != FormKind::plus_even)
        throw std::invalid_argument("build_orthogonal: even_plus needs the plus_even form");
    if (fam == OrthFamily::even_minus && form.kind() != FormKind::minus_even)
        throw std::invalid_argument("build_orthogonal: even_minus needs the minus_even form");

    ProjPointClasses cls = nonisotropic_points(form);
    FieldElem nu = f.primitive_element();
    // odd_theta normalizes x S x^t = Q(x') to nu (a non-square), so it lives
    // on the non-square-value class; the other families normalize Q(x') = 1
    // and live on the square-value class
    FieldElem target0 = (fam == OrthFamily::odd_theta) ? nu : f.one();
    const std::vector<uint32_t>& reps = f.is_square(target0) ? cls.square_reps : cls.nonsquare_reps;
    if (reps.empty()) throw std::invalid_argument("build_orthogonal: empty vertex class");
    if (reps.size() > ceiling) throw std::invalid_argument("build_orthogonal: class exceeds ceiling");
    uint32_t n = static_cast<uint32_t>(reps.size());

    // scale representatives so Q(X) = target0; both square roots of the
    // ratio are admissible, the sign loop below covers the other one
    std::vector<std::vector<FieldElem>> X(n, std::vector<FieldElem>(dim));
    std::vector<FieldElem> tmp(dim);
    for (uint32_t v = 0; v < n; v++) {
        decode_vindex(reps[v], q, dim, tmp.data());
        FieldElem val = form.eval(tmp);
        FieldElem t0 = f.sqrt(f.mul(target0, f.inv(val)));
        for (uint32_t c = 0; c < dim; c++) X[v][c] = f.mul(t0, tmp[c]);
    }

    std::vector<std::vector<uint32_t>> labels(n);
    for (uint32_t v = 0; v < n; v++) {
        labels[v].resize(dim);
        uint32_t t = reps[v];
        for (uint32_t c = 0; c < dim; c++) { labels[v][c] = t % q; t /= q; }
    }

    uint32_t m = dim / 2; // dim = 2m or 2m+1
    FamilyInfo info;
    switch (fam) {
        case OrthFamily::odd_theta: info.family = Family::orth_odd_theta; break;
        case OrthFamily::odd_omega: info.family = Family::orth_odd_omega; break;
        case OrthFamily::even_plus: info.family = Family::orth_even_plus; break;
        case OrthFamily::even_minus: info.family = Family::orth_even_minus; break;
    }
    info.q = q;
    info.dim = dim;
    info.tag = std::string(orth_family_name(fam)) + "(q=" + std::to_string(q) + ",m=" + std::to_string(m) +
               ",i=" + std::to_string(i) + ")";
    info.note = cls.note;
    Graph g(n, LabelKind::projective_point, std::move(labels), std::move(info));

    // Each condition pins the pair's 2x2 Gram matrix. When that target
    // matrix is singular the pairs it selects span a degenerate plane
    // ("tangent" pairs): y' = +-x' plus an isotropic vector of the perp, so
    // the class valency is the perp's isotropic count, not the stated set,
    // and it is empty when the perp is anisotropic.
    FieldElem two = f.from_int(2);
    bool last = (i == (q + 1) / 2);
    if (fam == OrthFamily::odd_theta) {
        // 2x2 Gram condition: diag (nu, mu_i), off-diagonal 1 (or 0 at the
        // last index); the module's S satisfies x S x^t = Q(x)
        FieldElem mu = last ? nu : (i == 1 ? f.pow(nu, -1) : f.pow(nu, 2 * static_cast<int64_t>(i) - 3));
        FieldElem off_target = last ? f.zero() : f.one();
        FieldElem scale_i = last ? f.one() : (i == 1 ? f.pow(nu, -1) : f.pow(nu, static_cast<int64_t>(i) - 2));
        FieldElem half = f.inv(two);
        for (uint32_t u = 0; u < n; u++) {
            for (uint32_t v = u + 1; v < n; v++) {
                FieldElem b = f.mul(half, form.bilinear(X[u], X[v])); // X_u S X_v^t
                FieldElem b0 = f.mul(scale_i, b);                     // X_u S (scale_i X_v)^t
                if (b0 == off_target || f.neg(b0) == off_target) g.add_edge(u, v);
            }
        }
        g.family().degenerate_target = f.sub(f.mul(nu, mu), f.mul(off_target, off_target)) == f.zero();
    } else if (fam == OrthFamily::odd_omega) {
        // Q(x' + y') target with Q normalized to 1 on the class
        FieldElem target = last ? two
                                : (i == 1 ? f.zero()
                                          : f.add(two, f.mul(two, f.pow(nu, -(static_cast<int64_t>(i) - 1)))));
        std::vector<FieldElem> sum(dim), diff(dim);
        for (uint32_t u = 0; u < n; u++) {
            for (uint32_t v = u + 1; v < n; v++) {
                for (uint32_t c = 0; c < dim; c++) {
                    sum[c] = f.add(X[u][c], X[v][c]);
                    diff[c] = f.sub(X[u][c], X[v][c]);
                }
                if (form.eval(sum) == target || form.eval(diff) == target) g.add_edge(u, v);
            }
        }
        // <x',y'> = target - 2; singular iff <x',y'>^2 = 4 Q(x') Q(y') = 4
        FieldElem fb = f.sub(target, two);
        g.family().degenerate_target = f.mul(fb, fb) == f.from_int(4);
    } else {
        // <x',y'> target with Q normalized to 1 on the class
        FieldElem target = last ? f.zero() : f.mul(f.inv(two), f.pow(nu, static_cast<int64_t>(i)));
        for (uint32_t u = 0; u < n; u++) {
            for (uint32_t v = u + 1; v < n; v++) {
                FieldElem b = form.bilinear(X[u], X[v]);
                if (b == target || f.neg(b) == target) g.add_edge(u, v);
            }
        }
        g.family().degenerate_target = f.mul(target, target) == f.from_int(4);
    }

    FamilyInfo& fi = g.family();
    fi.regular = g.is_regular(&fi.valency);
    uint64_t qpow = 1; // q^{m-1}
    for (uint32_t j = 0; j + 1 < m; j++) qpow *= q;
    uint64_t base = odd_fam ? qpow * qpow * q /* q^{2m-1} */ : qpow * qpow /* q^{2m-2} */;
    if (last) fi.expected_valencies = {(base - qpow) / 2, (base + qpow) / 2};
    else fi.expected_valencies = {base - qpow, base + qpow};
    fi.valency_ok = fi.regular && std::find(fi.expected_valencies.begin(), fi.expected_valencies.end(),
                                            fi.valency) != fi.expected_valencies.end();
    if (fi.degenerate_target) {
        // tangent pairs: valency = nonzero isotropic vectors in the perp of
        // a class point (dimension dim-1), either sign of its type
        if (odd_fam) {
            uint64_t qm = qpow * q; // q^m
            fi.degenerate_valencies = {base + (qm - qpow) - 1, base - (qm - qpow) - 1};
        } else {
            fi.degenerate_valencies = {base - 1}; // q^{2m-2} - 1
        }
        fi.degenerate_consistent =
            fi.regular && std::find(fi.degenerate_valencies.begin(), fi.degenerate_valencies.end(),
                                    fi.valency) != fi.degenerate_valencies.end();
        if (!fi.valency_ok)
            fi.note += (fi.note.empty() ? "" : "; ") +
                       std::string("degenerate 2x2 target: observed valency ") + std::to_string(fi.valency) +
                       " matches the perp isotropic count, not the stated set";
    }
    fi.lambda_bound = odd_fam ? 2.0 * std::pow(static_cast<double>(q), m - 0.5)
                              : 2.0 * std::pow(static_cast<double>(q), static_cast<double>(m) - 1.0);
    return g;
}

// ---------------------------------------------------------------------------
// dual-BCH code graph G_k: Cayley graph on 2k-bit vectors with connection
// set {(z, z^3) : z in GF(2^k)*}; low k bits hold z, high k bits hold z^3

inline Graph build_code_graph(uint32_t k, uint64_t ceiling = kDefaultVertexCeiling) {
    if (k < 2) throw std::invalid_argument("build_code_graph: k >= 2 required");
    uint64_t n64 = 1ull << (2 * k);
    if (n64 > ceiling) throw std::invalid_argument("build_code_graph: 2^(2k) exceeds ceiling");
    uint32_t n = static_cast<uint32_t>(n64);
    FieldCtx f = FieldCtx::make(2, k);

    std::vector<uint32_t> conn;
    for (uint32_t z = 1; z < (1u << k); z++)
        conn.push_back(z | (f.pow({z}, 3).idx << k));

    std::vector<std::vector<uint32_t>> labels(n);
    for (uint32_t v = 0; v < n; v++) {
        labels[v].resize(2 * k);
        for (uint32_t b = 0; b < 2 * k; b++) labels[v][b] = (v >> b) & 1;
    }

    FamilyInfo info;
    info.family = Family::bch;
    info.q = 1u << k;
    info.dim = 2 * k;
    info.tag = "bch(k=" + std::to_string(k) + ")";
    Graph g(n, LabelKind::bit_vector, std::move(labels), std::move(info));

    for (uint32_t v = 0; v < n; v++)
        for (uint32_t s : conn) g.set_arc(v, v ^ s);

    FamilyInfo& fi = g.family();
    fi.regular = g.is_regular(&fi.valency);
    fi.expected_valencies = {(1ull << k) - 1};
    fi.valency_ok = fi.regular && fi.valency == (1u << k) - 1;
    return g;
}

// ---------------------------------------------------------------------------
// 3k-bit triangle-free graph: connection set {(w0,w0^3,w0^5) + (w1,w1^3,w1^5)}
// where W0/W1 split GF(2^k)* by the leftmost bit of alpha^7. "Leftmost bit"
// is the coefficient of the highest-degree basis monomial, i.e. bit k-1 of
// the element index under the canonical modulus.

inline Graph build_alon_graph(uint32_t k, uint64_t ceiling = kDefaultVertexCeiling) {
    if (k < 2) throw std::invalid_argument("build_alon_graph: k >= 2 required");
    if (k % 3 == 0) throw std::invalid_argument("build_alon_graph: k divisible by 3");
    uint64_t n64 = 1ull << (3 * k);
    if (n64 > ceiling) throw std::invalid_argument("build_alon_graph: 2^(3k) exceeds ceiling");
    uint32_t n = static_cast<uint32_t>(n64);
    FieldCtx f = FieldCtx::make(2, k);

    std::vector<uint32_t> w0, w1;
    for (uint32_t z = 1; z < (1u << k); z++) {
        uint32_t a7 = f.pow({z}, 7).idx;
        if ((a7 >> (k - 1)) & 1) w1.push_back(z);
        else w0.push_back(z);
    }
    if (w0.size() != (1u << (k - 1)) - 1 || w1.size() != (1u << (k - 1)))
        throw std::runtime_error("build_alon_graph: W0/W1 split sizes do not match 2^(k-1)-1 / 2^(k-1)");

    auto triple = [&](uint32_t z) -> uint64_t {
        return static_cast<uint64_t>(z) | (static_cast<uint64_t>(f.pow({z}, 3).idx) << k) |
               (static_cast<uint64_t>(f.pow({z}, 5).idx) << (2 * k));
    };
    std::set<uint64_t> conn_set;
    for (uint32_t a : w0)
        for (uint32_t b : w1) conn_set.insert(triple(a) ^ triple(b));
    if (conn_set.count(0)) throw std::logic_error("build_alon_graph: zero in connection set");

    std::vector<std::vector<uint32_t>> labels(n);
    for (uint32_t v = 0; v < n; v++) {
        labels[v].resize(3 * k);
        for (uint32_t b = 0; b < 3 * k; b++) labels[v][b] = (v >> b) & 1;
    }

    FamilyInfo info;
    info.family = Family::alon;
    info.q = 1u << k;
    info.dim = 3 * k;
    info.tag = "alon(k=" + std::to_string(k) + ")";
    info.note = "|W0| = " + std::to_string(w0.size()) + ", |W1| = " + std::to_string(w1.size());
    Graph g(n, LabelKind::bit_vector, std::move(labels), std::move(info));

    for (uint32_t v = 0; v < n; v++)
        for (uint64_t s : conn_set) g.set_arc(v, v ^ static_cast<uint32_t>(s));

    FamilyInfo& fi = g.family();
    fi.regular = g.is_regular(&fi.valency);
    uint64_t half = 1ull << (k - 1);
    fi.expected_valencies = {half * (half - 1)};
    fi.valency_ok = fi.regular && fi.valency == half * (half - 1);
    return g;
}

} // namespace fqg
