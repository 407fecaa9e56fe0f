#include "lensbound/tight.hpp"

#include <algorithm>
#include <limits>
#include <stdexcept>

namespace lensbound {

namespace {

std::vector<long long> block_sizes(const LensSpace& lens) {
    NegCF cf = neg_cf(lens.p, lens.q);
    std::vector<long long> blocks;
    blocks.reserve(cf.coeffs.size());
    for (long long a : cf.coeffs) blocks.push_back(-a - 2);
    return blocks;
}

std::string signs_from_counts(const std::vector<long long>& blocks,
                              const std::vector<long long>& plus_counts) {
    std::string signs;
    for (std::size_t i = 0; i < blocks.size(); ++i) {
        signs.append(static_cast<std::size_t>(plus_counts[i]), '+');
        signs.append(static_cast<std::size_t>(blocks[i] - plus_counts[i]), '-');
    }
    return signs;
}

// Block id of each interior edge (edges of empty blocks do not exist).
std::vector<std::size_t> edge_block_ids(const std::vector<long long>& blocks) {
    std::vector<std::size_t> ids;
    for (std::size_t b = 0; b < blocks.size(); ++b)
        for (long long k = 0; k < blocks[b]; ++k) ids.push_back(b);
    return ids;
}

MixedVertex mixed_vertex_at(const TightStructure& t, std::size_t position) {
    MixedVertex v;
    v.position = position;
    v.prev = t.path.vertices[position - 1];
    v.torus = t.path.vertices[position];
    v.next = t.path.vertices[position + 1];
    return v;
}

void check_structure(const TightStructure& t) {
    std::size_t edges = t.path.edge_count();
    if (edges < 2 || t.signs.size() != edges - 2)
        throw std::invalid_argument("sign list does not match interior edge count");
    long long total = 0;
    for (long long b : t.blocks) total += b;
    if (total != static_cast<long long>(t.signs.size()))
        throw std::invalid_argument("block sizes do not match sign list");
}

}  // namespace

std::vector<TightStructure> enumerate_tight(const LensSpace& lens) {
    if (lens.p < 2) throw std::invalid_argument("enumerate_tight requires p >= 2");
    FareyPath path = minimal_path(lens);
    std::vector<long long> blocks = block_sizes(lens);

    std::vector<TightStructure> out;
    std::vector<long long> counts(blocks.size(), 0);
    while (true) {
        out.push_back(TightStructure{lens, path, blocks, signs_from_counts(blocks, counts)});
        // next tuple in lexicographic order, last block fastest
        std::size_t i = blocks.size();
        while (i > 0) {
            --i;
            if (counts[i] < blocks[i]) {
                ++counts[i];
                std::fill(counts.begin() + static_cast<std::ptrdiff_t>(i) + 1, counts.end(), 0);
                break;
            }
            if (i == 0) return out;
        }
        if (blocks.empty()) return out;
    }
}

unsigned long long count_tight_formula(const LensSpace& lens) {
    if (lens.p < 2) throw std::invalid_argument("count_tight_formula requires p >= 2");
    NegCF cf = neg_cf(lens.p, lens.q);
    unsigned long long product = 1;
    for (long long a : cf.coeffs) {
        unsigned long long factor = static_cast<unsigned long long>(-a - 1);
        unsigned __int128 wide = static_cast<unsigned __int128>(product) * factor;
        if (wide > std::numeric_limits<unsigned long long>::max())
            throw std::overflow_error("tight structure count exceeds 64 bits");
        product = static_cast<unsigned long long>(wide);
    }
    return product;
}

bool is_universally_tight(const TightStructure& t) {
    check_structure(t);
    return t.signs.find('+') == std::string::npos || t.signs.find('-') == std::string::npos;
}

std::size_t universally_tight_count(const LensSpace& lens, bool oriented) {
    if (lens.p < 2) throw std::invalid_argument("universally_tight_count requires p >= 2");
    if (!oriented) return 1;
    long long interior = 0;
    for (long long b : block_sizes(lens)) interior += b;
    return interior >= 1 ? 2 : 1;
}

std::vector<MixedVertex> mixed_vertices(const TightStructure& t) {
    check_structure(t);
    std::vector<MixedVertex> out;
    // Interior edge i (i = 1 .. edges-2) joins vertices i and i+1 and
    // carries signs[i-1]; vertex j is mixed when edges j-1 and j are both
    // interior and differ in sign.
    for (std::size_t j = 2; j + 2 < t.path.vertices.size(); ++j) {
        if (t.signs[j - 2] != t.signs[j - 1]) out.push_back(mixed_vertex_at(t, j));
    }
    return out;
}

std::vector<MixedVertex> mixed_vertices_any_ordering(const TightStructure& t) {
    check_structure(t);
    std::vector<std::size_t> ids = edge_block_ids(t.blocks);
    // Per-block plus counts of this structure.
    std::vector<long long> plus(t.blocks.size(), 0);
    for (std::size_t i = 0; i < t.signs.size(); ++i)
        if (t.signs[i] == '+') ++plus[ids[i]];

    std::vector<MixedVertex> out;
    for (std::size_t j = 2; j + 2 < t.path.vertices.size(); ++j) {
        std::size_t b1 = ids[j - 2];
        std::size_t b2 = ids[j - 1];
        bool realizable;
        if (b1 == b2) {
            realizable = plus[b1] > 0 && plus[b1] < t.blocks[b1];
        } else {
            bool plus_then_minus = plus[b1] > 0 && plus[b2] < t.blocks[b2];
            bool minus_then_plus = plus[b1] < t.blocks[b1] && plus[b2] > 0;
            realizable = plus_then_minus || minus_then_plus;
        }
        if (realizable) out.push_back(mixed_vertex_at(t, j));
    }
    return out;
}

std::vector<Slope> menke_candidates_at(const TightStructure& t, const MixedVertex& v) {
    check_structure(t);
    if (v.position < 2 || v.position + 2 >= t.path.vertices.size() ||
        !(mixed_vertex_at(t, v.position) == v))
        throw std::invalid_argument("vertex does not match an interior vertex of the path");
    return neighbors_in_arc(v.torus, v.next, v.prev);
}

std::vector<Slope> menke_candidates(const TightStructure& t, const MixedVertex& v) {
    std::vector<MixedVertex> mixed = mixed_vertices(t);
    if (std::find(mixed.begin(), mixed.end(), v) == mixed.end())
        throw std::invalid_argument("vertex is not a mixed vertex of the structure");
    return menke_candidates_at(t, v);
}

NoSphereReport verify_no_sphere_factor(const LensSpace& lens) {
    if (lens.p < 2) throw std::invalid_argument("verify_no_sphere_factor requires p >= 2");
    const Slope zero = Slope::zero();
    const Slope surgery(-lens.p, lens.q);

    NoSphereReport report;
    for (const TightStructure& t : enumerate_tight(lens)) {
        if (is_universally_tight(t)) continue;
        ++report.structures;
        for (const MixedVertex& v : mixed_vertices(t)) {
            ++report.mixed_vertices;
            std::vector<Slope> candidates = menke_candidates(t, v);
            if (candidates.empty()) ++report.empty_candidate_lists;
            for (const Slope& c : candidates) {
                ++report.candidates;
                if (c == zero || c == surgery) {
                    report.ok = false;
                    report.violations.push_back(NoSphereWitness{lens, t.signs, v.torus, c});
                }
            }
        }
    }
    return report;
}

TightStructure tight_structure_from_signs(const LensSpace& lens, const std::string& signs) {
    if (lens.p < 2) throw std::invalid_argument("tight structures require p >= 2");
    for (char c : signs)
        if (c != '+' && c != '-')
            throw std::invalid_argument("sign string may contain only '+' and '-'");
    FareyPath path = minimal_path(lens);
    std::vector<long long> blocks = block_sizes(lens);
    std::size_t interior = path.edge_count() - 2;
    if (signs.size() != interior)
        throw std::invalid_argument("expected " + std::to_string(interior) +
                                    " interior signs, got " + std::to_string(signs.size()));

    // Canonicalize: within each block only the plus count matters.
    std::vector<std::size_t> ids = edge_block_ids(blocks);
    std::vector<long long> plus(blocks.size(), 0);
    for (std::size_t i = 0; i < signs.size(); ++i)
        if (signs[i] == '+') ++plus[ids[i]];
    return TightStructure{lens, std::move(path), blocks, signs_from_counts(blocks, plus)};
}

}  // namespace lensbound
