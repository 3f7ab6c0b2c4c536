// Copyright 2026 The clusterqec Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//      http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#include "clusterqec/uniformity.h"

#include <algorithm>
#include <atomic>
#include <bit>
#include <chrono>
#include <limits>

#include "clusterqec/errors.h"
#include "clusterqec/gf2.h"
#include "clusterqec/parallel.h"

namespace clusterqec {
namespace {

constexpr size_t kNoWeight = std::numeric_limits<size_t>::max();
constexpr unsigned kChunkLog2 = 20;
constexpr uint64_t kAbortPollMask = (uint64_t{1} << 12) - 1;

using Clock = std::chrono::steady_clock;

double seconds_since(Clock::time_point start) {
    return std::chrono::duration<double>(Clock::now() - start).count();
}

uint64_t gray(uint64_t i) { return i ^ (i >> 1); }

// Generator i lands on bit q-1-i, so integer order on keys is lexicographic
// order on (c_0, ..., c_{q-1}).
uint64_t lex_key(uint64_t mask, size_t q) {
    uint64_t key = 0;
    while (mask) {
        int i = std::countr_zero(mask);
        key |= uint64_t{1} << (q - 1 - static_cast<size_t>(i));
        mask &= mask - 1;
    }
    return key;
}

// Generators as contiguous word arrays: row i occupies [i * words, (i+1) * words).
struct PackedGenerators {
    size_t words = 0;
    std::vector<uint64_t> x;
    std::vector<uint64_t> z;

    explicit PackedGenerators(const std::vector<PauliString>& gens) {
        words = gens.empty() ? 0 : gens.front().x_bits().num_words();
        x.reserve(gens.size() * words);
        z.reserve(gens.size() * words);
        for (const auto& g : gens) {
            x.insert(x.end(), g.x_bits().words().begin(), g.x_bits().words().end());
            z.insert(z.end(), g.z_bits().words().begin(), g.z_bits().words().end());
        }
    }

    void apply(size_t gen, uint64_t* ax, uint64_t* az) const {
        const uint64_t* gx = &x[gen * words];
        const uint64_t* gz = &z[gen * words];
        for (size_t k = 0; k < words; k++) {
            ax[k] ^= gx[k];
            az[k] ^= gz[k];
        }
    }
};

// Support of (ax, az); stops counting once the total exceeds `cutoff`.
size_t support_with_cutoff(const uint64_t* ax, const uint64_t* az, size_t words, size_t cutoff) {
    size_t w = 0;
    for (size_t k = 0; k < words; k++) {
        w += static_cast<size_t>(std::popcount(ax[k] | az[k]));
        if (w > cutoff) {
            break;
        }
    }
    return w;
}

struct Candidate {
    bool found = false;
    size_t weight = kNoWeight;
    uint64_t mask = 0;
    uint64_t key = 0;
    uint64_t index = 0;

    bool improved_by(size_t w, uint64_t k) const { return !found || w < weight || (w == weight && k < key); }
};

struct ChunkResult {
    Candidate best;
    Candidate hit;
};

struct ScanSpec {
    const PackedGenerators* gens;
    size_t q;
    std::vector<uint64_t> offset_x;
    std::vector<uint64_t> offset_z;
    bool skip_identity;
    std::optional<size_t> target;
};

ChunkResult scan_chunk(const ScanSpec& scan, uint64_t begin, uint64_t end, uint64_t chunk_id,
                       std::atomic<uint64_t>& lowest_hit_chunk) {
    const PackedGenerators& gens = *scan.gens;
    const size_t words = gens.words;
    std::vector<uint64_t> ax = scan.offset_x;
    std::vector<uint64_t> az = scan.offset_z;
    for (uint64_t m = gray(begin); m; m &= m - 1) {
        gens.apply(static_cast<size_t>(std::countr_zero(m)), ax.data(), az.data());
    }

    ChunkResult result;
    for (uint64_t i = begin; i < end; i++) {
        if (!(scan.skip_identity && i == 0)) {
            size_t w = support_with_cutoff(ax.data(), az.data(), words, result.best.weight);
            if (w <= result.best.weight) {
                uint64_t mask = gray(i);
                uint64_t key = lex_key(mask, scan.q);
                if (result.best.improved_by(w, key)) {
                    result.best = Candidate{true, w, mask, key, i};
                }
            }
            if (scan.target && w <= *scan.target) {
                result.hit = result.best;
                uint64_t prev = lowest_hit_chunk.load();
                while (chunk_id < prev && !lowest_hit_chunk.compare_exchange_weak(prev, chunk_id)) {
                }
                return result;
            }
        }
        if (i + 1 < end) {
            gens.apply(static_cast<size_t>(std::countr_zero(i + 1)), ax.data(), az.data());
        }
        if (scan.target && (i & kAbortPollMask) == 0 && lowest_hit_chunk.load() < chunk_id) {
            return result;
        }
    }
    return result;
}

// Scans offset * element(gray(i)) for all i in [0, 2^q). Returns the winning
// candidate and the number of elements counted toward elements_scanned.
std::pair<Candidate, uint64_t> run_scan(const ScanSpec& scan, unsigned threads, bool* exhaustive) {
    const uint64_t total = uint64_t{1} << scan.q;
    const uint64_t chunk = scan.q > kChunkLog2 ? (uint64_t{1} << kChunkLog2) : total;
    const uint64_t num_chunks = total / chunk;

    std::vector<ChunkResult> results(num_chunks);
    std::atomic<uint64_t> lowest_hit_chunk{std::numeric_limits<uint64_t>::max()};
    parallel_for(num_chunks, threads, [&](size_t c) {
        if (scan.target && lowest_hit_chunk.load() < c) {
            return;
        }
        results[c] = scan_chunk(scan, c * chunk, (c + 1) * chunk, c, lowest_hit_chunk);
    });

    const uint64_t identity_adjust = scan.skip_identity ? 0 : 1;
    if (scan.target) {
        uint64_t c = lowest_hit_chunk.load();
        if (c < num_chunks) {
            *exhaustive = false;
            const Candidate& hit = results[c].hit;
            return {hit, hit.index + identity_adjust};
        }
    }
    *exhaustive = true;
    Candidate best;
    for (const auto& r : results) {
        if (r.best.found && best.improved_by(r.best.weight, r.best.key)) {
            best = r.best;
        }
    }
    return {best, total - (scan.skip_identity ? 1 : 0)};
}

void check_scan_cap(size_t q, unsigned max_log2) {
    unsigned cap = std::min(max_log2, 62u);
    if (q > cap) {
        throw ResourceLimit("group has 2^" + std::to_string(q) + " elements; brute-force cap is 2^" +
                            std::to_string(cap));
    }
}

// Lexicographic order on coefficient vectors for ascending index lists: at the
// first differing position the list holding the smaller index is larger.
bool set_less(const std::vector<size_t>& a, const std::vector<size_t>& b) {
    size_t n = std::min(a.size(), b.size());
    for (size_t i = 0; i < n; i++) {
        if (a[i] != b[i]) {
            return a[i] > b[i];
        }
    }
    return a.size() < b.size();
}

// Whether some strict extension of `prefix` (by indices above its maximum) can be
// lexicographically smaller than `best`.
bool extension_can_beat(const std::vector<size_t>& prefix, const std::vector<size_t>& best) {
    size_t n = std::min(prefix.size(), best.size());
    for (size_t i = 0; i < n; i++) {
        if (prefix[i] != best[i]) {
            return prefix[i] > best[i];
        }
    }
    return prefix.size() < best.size();
}

struct WindowBest {
    size_t weight = kNoWeight;
    std::vector<size_t> set;
};

class WindowSearch {
   public:
    WindowSearch(const PackedGenerators& gens, const std::vector<std::vector<uint64_t>>& later_adjacent,
                 bool size_bound, uint64_t cap, std::atomic<uint64_t>& total_nodes)
        : gens_(gens),
          adj_(later_adjacent),
          size_bound_(size_bound),
          cap_(cap),
          total_nodes_(total_nodes),
          words_(gens.words),
          cand_words_(later_adjacent.empty() ? 0 : later_adjacent.front().size()) {}

    WindowBest run(size_t anchor, WindowBest seed) {
        best_ = std::move(seed);
        const size_t n = adj_.size();
        acc_x_.assign((n + 1) * words_, 0);
        acc_z_.assign((n + 1) * words_, 0);
        cand_.assign((n + 1) * cand_words_, 0);
        set_.clear();
        set_.push_back(anchor);
        gens_.apply(anchor, acc_x_.data(), acc_z_.data());
        std::copy(adj_[anchor].begin(), adj_[anchor].end(), cand_.begin());
        visit(0);
        flush_nodes();
        return best_;
    }

    uint64_t nodes() const { return nodes_; }

   private:
    void flush_nodes() {
        total_nodes_.fetch_add(pending_);
        pending_ = 0;
    }

    bool children_pruned() const {
        if (!size_bound_) {
            return false;
        }
        size_t child_size = set_.size() + 1;
        if (child_size > best_.weight) {
            return true;
        }
        return child_size == best_.weight && !extension_can_beat(set_, best_.set);
    }

    void visit(size_t depth) {
        nodes_++;
        if (++pending_ == 1024) {
            flush_nodes();
            if (total_nodes_.load() > cap_) {
                throw ResourceLimit("windowed search exceeded " + std::to_string(cap_) + " subsets");
            }
        }
        const uint64_t* ax = &acc_x_[depth * words_];
        const uint64_t* az = &acc_z_[depth * words_];
        size_t w = support_with_cutoff(ax, az, words_, best_.weight);
        if (w < best_.weight || (w == best_.weight && set_less(set_, best_.set))) {
            best_.weight = w;
            best_.set = set_;
        }
        const uint64_t* cand = &cand_[depth * cand_words_];
        for (size_t k = 0; k < cand_words_; k++) {
            uint64_t word = cand[k];
            while (word) {
                if (children_pruned()) {
                    return;
                }
                size_t c = k * 64 + static_cast<size_t>(std::countr_zero(word));
                word &= word - 1;
                uint64_t* nx = &acc_x_[(depth + 1) * words_];
                uint64_t* nz = &acc_z_[(depth + 1) * words_];
                std::copy(ax, ax + words_, nx);
                std::copy(az, az + words_, nz);
                gens_.apply(c, nx, nz);
                uint64_t* next_cand = &cand_[(depth + 1) * cand_words_];
                const auto& ac = adj_[c];
                for (size_t j = 0; j < cand_words_; j++) {
                    next_cand[j] = cand[j] & ac[j];
                }
                set_.push_back(c);
                visit(depth + 1);
                set_.pop_back();
            }
        }
    }

    const PackedGenerators& gens_;
    const std::vector<std::vector<uint64_t>>& adj_;
    bool size_bound_;
    uint64_t cap_;
    std::atomic<uint64_t>& total_nodes_;
    size_t words_;
    size_t cand_words_;

    WindowBest best_;
    std::vector<size_t> set_;
    std::vector<uint64_t> acc_x_;
    std::vector<uint64_t> acc_z_;
    std::vector<uint64_t> cand_;
    uint64_t nodes_ = 0;
    uint64_t pending_ = 0;
};

BitVector coefficients_from_set(size_t q, const std::vector<size_t>& set) {
    BitVector c(q);
    for (size_t i : set) {
        c.set(i, true);
    }
    return c;
}

}  // namespace

std::string method_name(SearchMethod m) {
    switch (m) {
        case SearchMethod::kBrute:
            return "brute";
        case SearchMethod::kWindowed:
            return "windowed";
        case SearchMethod::kSubsetSweep:
            return "subset-sweep";
    }
    return "unknown";
}

WeightReport min_weight_bruteforce(const StabilizerGroup& group, const SearchOptions& options) {
    const auto start = Clock::now();
    const size_t q = group.num_generators();
    if (q == 0) {
        throw InvalidInput("group has no nonidentity elements");
    }
    check_scan_cap(q, options.max_log2);

    PackedGenerators packed(group.generators());
    ScanSpec scan{&packed, q, std::vector<uint64_t>(packed.words, 0), std::vector<uint64_t>(packed.words, 0), true,
                  options.stop_at_or_below};
    WeightReport report;
    auto [best, scanned] = run_scan(scan, options.threads, &report.exhaustive);
    report.min_support = best.weight;
    report.witness = group.element(best.mask);
    report.coefficients = BitVector::from_uint64(q, best.mask);
    report.method = SearchMethod::kBrute;
    report.elements_scanned = scanned;
    report.wall_seconds = seconds_since(start);
    return report;
}

WeightReport coset_min_weight(const StabilizerGroup& group, const PauliString& logical, const SearchOptions& options,
                              CosetPolicy policy) {
    const auto start = Clock::now();
    if (logical.num_qubits() != group.num_qubits()) {
        throw DimensionError("logical operator has " + std::to_string(logical.num_qubits()) +
                             " qubits; group has " + std::to_string(group.num_qubits()));
    }
    const auto& gens = group.generators();
    for (size_t i = 0; i < gens.size() && policy == CosetPolicy::kRequireCommuting; i++) {
        if (!commutes(logical, gens[i])) {
            throw InvalidInput("operator " + logical.to_string() + " anticommutes with generator " +
                               std::to_string(i));
        }
    }
    const size_t q = group.num_generators();

    WeightReport report;
    report.method = SearchMethod::kBrute;
    if (auto combo = group.decompose(logical)) {
        report.min_support = 0;
        report.coefficients = *combo;
        report.witness = logical * group.element(*combo);
        report.elements_scanned = 0;
        report.wall_seconds = seconds_since(start);
        return report;
    }
    check_scan_cap(q, options.max_log2);

    PackedGenerators packed(gens);
    std::vector<uint64_t> ox(logical.x_bits().words().begin(), logical.x_bits().words().end());
    std::vector<uint64_t> oz(logical.z_bits().words().begin(), logical.z_bits().words().end());
    ScanSpec scan{&packed, q, std::move(ox), std::move(oz), false, options.stop_at_or_below};
    auto [best, scanned] = run_scan(scan, options.threads, &report.exhaustive);
    report.min_support = best.weight;
    report.witness = logical * group.element(best.mask);
    report.coefficients = BitVector::from_uint64(q, best.mask);
    report.elements_scanned = scanned;
    report.wall_seconds = seconds_since(start);
    return report;
}

bool is_cluster_group(const StabilizerGroup& group, const Lattice& lattice) {
    if (group.num_qubits() != lattice.num_vertices()) {
        return false;
    }
    return group.generators() == cluster_generators(lattice);
}

WeightReport min_weight_windowed(const StabilizerGroup& group, const Lattice& lattice, size_t radius,
                                 const SearchOptions& options) {
    const auto start = Clock::now();
    const size_t n = lattice.num_vertices();
    if (group.num_qubits() != n || group.num_generators() != n) {
        throw InvalidInput("windowed search needs one generator per lattice vertex (" + std::to_string(n) +
                           " vertices, " + std::to_string(group.num_generators()) + " generators on " +
                           std::to_string(group.num_qubits()) + " qubits)");
    }
    const auto& gens = group.generators();
    PackedGenerators packed(gens);

    bool x_centered = true;
    for (size_t i = 0; i < n && x_centered; i++) {
        const BitVector& x = gens[i].x_bits();
        x_centered = x.popcount() == 1 && x.get(i);
    }

    const size_t cand_words = (n + 63) / 64;
    std::vector<std::vector<uint64_t>> later_adjacent(n, std::vector<uint64_t>(cand_words, 0));
    for (size_t v = 0; v < n; v++) {
        for (size_t w = v + 1; w < n; w++) {
            if (lattice.hamming_distance(v, w) <= radius) {
                later_adjacent[v][w / 64] |= uint64_t{1} << (w % 64);
            }
        }
    }

    WindowBest seed;
    for (size_t v = 0; v < n; v++) {
        size_t w = gens[v].weight();
        std::vector<size_t> s{v};
        if (w < seed.weight || (w == seed.weight && set_less(s, seed.set))) {
            seed.weight = w;
            seed.set = std::move(s);
        }
    }

    std::vector<WindowBest> per_anchor(n);
    std::vector<uint64_t> per_anchor_nodes(n, 0);
    std::atomic<uint64_t> total_nodes{0};
    parallel_for(n, options.threads, [&](size_t anchor) {
        WindowSearch search(packed, later_adjacent, x_centered, options.max_window_subsets, total_nodes);
        per_anchor[anchor] = search.run(anchor, seed);
        per_anchor_nodes[anchor] = search.nodes();
    });

    WindowBest best = seed;
    uint64_t nodes = 0;
    for (size_t v = 0; v < n; v++) {
        const WindowBest& b = per_anchor[v];
        if (b.weight < best.weight || (b.weight == best.weight && set_less(b.set, best.set))) {
            best = b;
        }
        nodes += per_anchor_nodes[v];
    }

    WeightReport report;
    report.min_support = best.weight;
    report.coefficients = coefficients_from_set(n, best.set);
    report.witness = group.element(report.coefficients);
    report.method = SearchMethod::kWindowed;
    report.elements_scanned = nodes;
    report.exhaustive = true;
    report.heuristic =
        !(radius >= 4 && lattice.all_periodic() && lattice.min_length() >= 8 && is_cluster_group(group, lattice));
    report.wall_seconds = seconds_since(start);
    return report;
}

UniformityVerdict is_m_uniform(const StabilizerGroup& group, size_t m, const SearchOptions& options) {
    if (!group.is_state()) {
        throw InvalidInput("m-uniformity needs a stabilizer state (q == n); got q=" +
                           std::to_string(group.num_generators()) + ", n=" + std::to_string(group.num_qubits()));
    }
    SearchOptions opts = options;
    opts.stop_at_or_below = m;
    UniformityVerdict verdict;
    verdict.report = min_weight_bruteforce(group, opts);
    verdict.uniform = verdict.report.min_support > m;
    return verdict;
}

SubsetSweepResult subset_sweep_check(const StabilizerGroup& group, size_t m, uint64_t max_subsets) {
    const size_t n = group.num_qubits();
    if (m > n) {
        throw InvalidInput("subset size " + std::to_string(m) + " exceeds qubit count " + std::to_string(n));
    }
    uint64_t count = 1;
    for (size_t i = 0; i < m; i++) {
        count = count * (n - i) / (i + 1);
        if (count > max_subsets) {
            throw ResourceLimit("C(" + std::to_string(n) + ", " + std::to_string(m) + ") subsets exceed the cap of " +
                                std::to_string(max_subsets));
        }
    }

    std::vector<BitVector> rows;
    for (const auto& g : group.generators()) {
        rows.push_back(symplectic_bits(g));
    }
    const size_t q = rows.size();

    SubsetSweepResult result;
    std::vector<size_t> combo(m);
    for (size_t i = 0; i < m; i++) {
        combo[i] = i;
    }
    while (true) {
        std::vector<BitVector> outside = rows;
        for (auto& r : outside) {
            for (size_t a : combo) {
                r.set(a, false);
                r.set(n + a, false);
            }
        }
        result.subsets_checked++;
        if (gf2::rank(std::move(outside)) < q) {
            result.passed = false;
            result.first_failure = QubitSubset(combo, n);
            return result;
        }
        size_t i = m;
        while (i > 0 && combo[i - 1] == n - m + i - 1) {
            i--;
        }
        if (i == 0) {
            break;
        }
        combo[i - 1]++;
        for (size_t j = i; j < m; j++) {
            combo[j] = combo[j - 1] + 1;
        }
    }
    return result;
}

}  // namespace clusterqec
