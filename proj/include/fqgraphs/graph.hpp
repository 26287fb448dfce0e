#pragma once
// The universal graph object every certifier consumes: immutable after
// build, vertex-labeled, bitset adjacency rows. Builders fill it and run
// their audits; everything downstream treats it as read-only.

#include <bit>
#include <cstdint>
#include <optional>
#include <span>
#include <stdexcept>
#include <string>
#include <vector>

namespace fqg {

inline constexpr uint64_t kDefaultVertexCeiling = 1ull << 16;

enum class LabelKind { field_vector, halfplane_point, projective_point, bit_vector, plain };

enum class Family {
    euclidean,
    halfplane,
    orth_odd_theta,
    orth_odd_omega,
    orth_even_plus,
    orth_even_minus,
    bch,
    alon,
    custom,
};

inline const char* family_name(Family f) {
    switch (f) {
        case Family::euclidean: return "euclidean";
        case Family::halfplane: return "halfplane";
        case Family::orth_odd_theta: return "odd_theta";
        case Family::orth_odd_omega: return "odd_omega";
        case Family::orth_even_plus: return "even_plus";
        case Family::orth_even_minus: return "even_minus";
        case Family::bch: return "bch";
        case Family::alon: return "alon";
        case Family::custom: return "custom";
    }
    return "?";
}

struct FamilyInfo {
    Family family = Family::custom;
    std::string tag = "custom";
    uint32_t q = 0;
    uint32_t dim = 0;

    bool regular = false;
    uint32_t valency = 0;
    // audit against the stated valency set; empty set means nothing asserted
    std::vector<uint64_t> expected_valencies;
    bool valency_ok = true;
    // set when the defining condition forces the pair span to be degenerate
    // (its 2x2 Gram target is singular); such classes carry the isotropic
    // count of the perp instead of the stated valencies, possibly zero
    bool degenerate_target = false;
    std::vector<uint64_t> degenerate_valencies;
    bool degenerate_consistent = true;
    std::optional<double> lambda_bound;
    std::string note;
};

class Graph {
public:
    Graph() = default;

    Graph(uint32_t n, LabelKind kind, std::vector<std::vector<uint32_t>> labels, FamilyInfo info)
        : n_(n),
          row_words_((n + 63) / 64),
          bits_(static_cast<size_t>(n) * ((n + 63) / 64), 0),
          label_kind_(kind),
          labels_(std::move(labels)),
          info_(std::move(info)) {
        if (!labels_.empty() && labels_.size() != n_)
            throw std::invalid_argument("graph: label count != vertex count");
    }

    uint32_t num_vertices() const { return n_; }
    LabelKind label_kind() const { return label_kind_; }
    const std::vector<std::vector<uint32_t>>& labels() const { return labels_; }
    const FamilyInfo& family() const { return info_; }
    FamilyInfo& family() { return info_; }
    size_t row_words() const { return row_words_; }

    std::span<const uint64_t> row(uint32_t u) const {
        return {bits_.data() + static_cast<size_t>(u) * row_words_, row_words_};
    }

    bool adjacent(uint32_t u, uint32_t v) const {
        return (bits_[static_cast<size_t>(u) * row_words_ + v / 64] >> (v % 64)) & 1;
    }

    // builder-phase only; loops rejected, both directions set
    void add_edge(uint32_t u, uint32_t v) {
        if (u == v) throw std::invalid_argument("graph: self-loop");
        if (u >= n_ || v >= n_) throw std::invalid_argument("graph: vertex out of range");
        bits_[static_cast<size_t>(u) * row_words_ + v / 64] |= 1ull << (v % 64);
        bits_[static_cast<size_t>(v) * row_words_ + u / 64] |= 1ull << (u % 64);
    }

    // one direction only; for Cayley builders whose connection set satisfies
    // S = -S, so the mirror arc is set by the mirrored iteration
    void set_arc(uint32_t u, uint32_t v) {
        bits_[static_cast<size_t>(u) * row_words_ + v / 64] |= 1ull << (v % 64);
    }

    // test hook for negative controls: flips a single arc, breaking symmetry
    // (or adding a loop when u == v) so audits must catch it
    void corrupt_flip(uint32_t u, uint32_t v) {
        bits_[static_cast<size_t>(u) * row_words_ + v / 64] ^= 1ull << (v % 64);
    }

    uint32_t degree(uint32_t u) const {
        uint32_t d = 0;
        auto r = row(u);
        for (uint64_t w : r) d += static_cast<uint32_t>(std::popcount(w));
        return d;
    }

    uint64_t num_edges() const {
        uint64_t total = 0;
        for (uint32_t u = 0; u < n_; u++) total += degree(u);
        return total / 2;
    }

    bool is_regular(uint32_t* valency_out = nullptr) const {
        if (n_ == 0) return true;
        uint32_t d0 = degree(0);
        for (uint32_t u = 1; u < n_; u++)
            if (degree(u) != d0) return false;
        if (valency_out) *valency_out = d0;
        return true;
    }

    bool symmetric_loop_free() const {
        for (uint32_t u = 0; u < n_; u++) {
            if (adjacent(u, u)) return false;
            for (uint32_t v = u + 1; v < n_; v++)
                if (adjacent(u, v) != adjacent(v, u)) return false;
        }
        return true;
    }

    bool connected() const {
        if (n_ == 0) return true;
        std::vector<uint64_t> seen(row_words_, 0), frontier(row_words_, 0);
        seen[0] = frontier[0] = 1;
        uint32_t count = 1;
        bool grew = true;
        while (grew) {
            grew = false;
            std::vector<uint64_t> next(row_words_, 0);
            for (uint32_t u = 0; u < n_; u++) {
                if (!((frontier[u / 64] >> (u % 64)) & 1)) continue;
                auto r = row(u);
                for (size_t w = 0; w < row_words_; w++) next[w] |= r[w];
            }
            for (size_t w = 0; w < row_words_; w++) {
                uint64_t fresh = next[w] & ~seen[w];
                if (fresh) {
                    grew = true;
                    seen[w] |= fresh;
                    count += static_cast<uint32_t>(std::popcount(fresh));
                }
                frontier[w] = fresh;
            }
        }
        return count == n_;
    }

    // edges as sorted (u,v) pairs with u < v
    std::vector<std::pair<uint32_t, uint32_t>> edge_list() const {
        std::vector<std::pair<uint32_t, uint32_t>> edges;
        for (uint32_t u = 0; u < n_; u++) {
            auto r = row(u);
            for (size_t w = 0; w < row_words_; w++) {
                uint64_t word = r[w];
                while (word) {
                    uint32_t v = static_cast<uint32_t>(w * 64 + std::countr_zero(word));
                    word &= word - 1;
                    if (v > u) edges.emplace_back(u, v);
                }
            }
        }
        return edges;
    }

private:
    uint32_t n_ = 0;
    size_t row_words_ = 0;
    std::vector<uint64_t> bits_;
    LabelKind label_kind_ = LabelKind::plain;
    std::vector<std::vector<uint32_t>> labels_;
    FamilyInfo info_;
};

// word mask helpers shared by the audit and search code
inline std::vector<uint64_t> make_mask(uint32_t n) { return std::vector<uint64_t>((n + 63) / 64, 0); }

inline void mask_set(std::vector<uint64_t>& m, uint32_t v) { m[v / 64] |= 1ull << (v % 64); }
inline bool mask_test(const std::vector<uint64_t>& m, uint32_t v) { return (m[v / 64] >> (v % 64)) & 1; }

inline uint64_t mask_count(const std::vector<uint64_t>& m) {
    uint64_t c = 0;
    for (uint64_t w : m) c += std::popcount(w);
    return c;
}

inline uint64_t intersect_count(std::span<const uint64_t> a, std::span<const uint64_t> b) {
    uint64_t c = 0;
    for (size_t i = 0; i < a.size(); i++) c += std::popcount(a[i] & b[i]);
    return c;
}

} // namespace fqg
