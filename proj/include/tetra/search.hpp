#pragma once

// Exhaustive searches over GL(3, F2): base solutions of the direct-sum
// tetrahedron relation, six-tuples with two alternative fourth/third factors,
// and modified pairs (R4, Q4) that swap sides of the relation.

#include <algorithm>
#include <array>
#include <bitset>
#include <cstdint>
#include <functional>
#include <map>
#include <optional>
#include <set>
#include <span>
#include <stdexcept>
#include <utility>
#include <vector>

#include "tetra/gf2.hpp"
#include "tetra/parallel.hpp"

namespace tetra {

struct SolutionRecord {
  Mat3 r1, r2, r3, r4;

  friend constexpr bool operator==(const SolutionRecord&, const SolutionRecord&) = default;
  friend constexpr auto operator<=>(const SolutionRecord&, const SolutionRecord&) = default;
};

struct SixTuple {
  Mat3 r1, r2, r3, r4, s3, s4;

  friend constexpr bool operator==(const SixTuple&, const SixTuple&) = default;
  friend constexpr auto operator<=>(const SixTuple&, const SixTuple&) = default;
};

// Unordered pair {r4, q4} stored with r4 < q4.
struct ModifiedPair {
  Mat3 r1, r2, r3, r4, q4;

  friend constexpr bool operator==(const ModifiedPair&, const ModifiedPair&) = default;
  friend constexpr auto operator<=>(const ModifiedPair&, const ModifiedPair&) = default;
};

// Immutable set of base solutions, kept in canonical (lexicographic) order and
// indexed by the (r1, r2) prefix.
class SolutionStore {
 public:
  struct Group {
    Mat3 r1, r2;
    std::span<const SolutionRecord> records;
  };

  SolutionStore() = default;

  explicit SolutionStore(std::vector<SolutionRecord> records) : records_(std::move(records)) {
    std::sort(records_.begin(), records_.end());
    records_.erase(std::unique(records_.begin(), records_.end()), records_.end());
    build_index();
  }

  const std::vector<SolutionRecord>& records() const { return records_; }
  std::size_t size() const { return records_.size(); }
  bool empty() const { return records_.empty(); }

  bool contains(const SolutionRecord& rec) const {
    return std::binary_search(records_.begin(), records_.end(), rec);
  }

  std::span<const SolutionRecord> group(Mat3 r1, Mat3 r2) const {
    auto it = index_.find({r1, r2});
    if (it == index_.end()) return {};
    return std::span<const SolutionRecord>(records_).subspan(it->second.first, it->second.second);
  }

  std::vector<Group> groups() const {
    std::vector<Group> out;
    out.reserve(index_.size());
    for (const auto& [key, range] : index_)
      out.push_back({key.first, key.second,
                     std::span<const SolutionRecord>(records_).subspan(range.first, range.second)});
    return out;
  }

  friend bool operator==(const SolutionStore& a, const SolutionStore& b) { return a.records_ == b.records_; }

 private:
  void build_index() {
    index_.clear();
    for (std::size_t i = 0; i < records_.size();) {
      std::size_t j = i;
      while (j < records_.size() && records_[j].r1 == records_[i].r1 && records_[j].r2 == records_[i].r2) ++j;
      index_.emplace(std::pair{records_[i].r1, records_[i].r2}, std::pair{i, j - i});
      i = j;
    }
  }

  std::vector<SolutionRecord> records_;
  std::map<std::pair<Mat3, Mat3>, std::pair<std::size_t, std::size_t>> index_;
};

struct SearchOptions {
  unsigned threads = 0;  // 0 = hardware concurrency
  bool restrict_invertible = true;
  // Required to run the 512^4 unrestricted base search.
  bool allow_unrestricted = false;
};

namespace detail {

// Embeddings of every candidate in every canonical slot, plus their
// right-multiplication tables.
struct EmbedCache {
  std::vector<Mat3> mats;
  std::array<std::vector<Mat6>, 4> embeds;
  std::array<std::vector<RightMul>, 4> tables;

  explicit EmbedCache(std::vector<Mat3> candidates) : mats(std::move(candidates)) {
    for (std::size_t s = 0; s < 4; ++s) {
      embeds[s].reserve(mats.size());
      tables[s].reserve(mats.size());
      for (Mat3 m : mats) {
        embeds[s].push_back(embed(m, kCanonicalSlots[s]));
        tables[s].emplace_back(embeds[s].back());
      }
    }
  }
};

inline std::vector<Mat3> candidates(bool restrict_invertible) {
  return restrict_invertible ? enumerate_gl3() : enumerate_all3();
}

}  // namespace detail

// All ordered quadruples satisfying the direct-sum relation.  For each triple
// A = E1 E2 E3 and B = E3 E2 E1 are formed once, and each candidate r4 is
// tested as A E4 == E4 B.  Partitioned over r1.
inline SolutionStore search_base(const SearchOptions& opts = {}) {
  if (!opts.restrict_invertible && !opts.allow_unrestricted)
    throw std::invalid_argument("unrestricted base search over 512^4 quadruples requires an explicit override");

  const detail::EmbedCache cache(detail::candidates(opts.restrict_invertible));
  const std::size_t n = cache.mats.size();

  auto records = run_partitions<SolutionRecord>(n, opts.threads, [&](std::size_t i1) {
    std::vector<SolutionRecord> out;
    const Mat6 e1 = cache.embeds[0][i1];
    const RightMul& t1 = cache.tables[0][i1];
    for (std::size_t i2 = 0; i2 < n; ++i2) {
      const Mat6 e12 = cache.tables[1][i2].apply(e1);
      for (std::size_t i3 = 0; i3 < n; ++i3) {
        const Mat6 a = cache.tables[2][i3].apply(e12);
        const Mat6 b = t1.apply(cache.tables[1][i2].apply(cache.embeds[2][i3]));
        const RightMul tb(b);
        for (std::size_t i4 = 0; i4 < n; ++i4) {
          if (cache.tables[3][i4].apply(a) == tb.apply(cache.embeds[3][i4]))
            out.push_back({cache.mats[i1], cache.mats[i2], cache.mats[i3], cache.mats[i4]});
        }
      }
    }
    return out;
  });
  return SolutionStore(std::move(records));
}

struct SixTupleCounts {
  std::uint64_t raw = 0;
  // Quotient by the interchanges r3 <-> s3 and r4 <-> s4 (orbits of size 4).
  std::uint64_t deduplicated = 0;
  std::uint64_t nontrivial_raw = 0;
  std::uint64_t nontrivial_deduplicated = 0;

  friend bool operator==(const SixTupleCounts&, const SixTupleCounts&) = default;
};

// At least one of r3, s3, r4, s4 is genuinely three-dimensional.
constexpr bool filter_nontrivial(const SixTuple& t) {
  return is_genuinely_3d(t.r3) || is_genuinely_3d(t.s3) || is_genuinely_3d(t.r4) || is_genuinely_3d(t.s4);
}

using SixTupleSink = std::function<void(const SixTuple&)>;

// Counts (and optionally streams, in lexicographic (r1, r2, r3, r4, s3, s4)
// order) every raw ordered six-tuple: all four of (r3,r4), (r3,s4), (s3,r4),
// (s3,s4) solve the base relation with (r1, r2), s3 != r3 and s4 != r4.
inline SixTupleCounts search_sixtuples(const SolutionStore& store, const SixTupleSink& sink = {}) {
  constexpr std::size_t kMax = Mat3::kCount;
  using Row = std::bitset<kMax>;

  SixTupleCounts counts;
  for (const auto& g : store.groups()) {
    // Neighbourhoods r3 -> {r4}, keyed by packing so bit order is canonical.
    std::map<std::uint16_t, Row> nbr;
    for (const auto& rec : g.records) nbr[rec.r3.bits()].set(rec.r4.bits());

    for (const auto& [r3b, n3] : nbr) {
      for (std::size_t r4b = n3._Find_first(); r4b < kMax; r4b = n3._Find_next(r4b)) {
        for (const auto& [s3b, ns3] : nbr) {
          if (s3b == r3b || !ns3.test(r4b)) continue;
          const Row common = n3 & ns3;
          for (std::size_t s4b = common._Find_first(); s4b < kMax; s4b = common._Find_next(s4b)) {
            if (s4b == r4b) continue;
            const SixTuple t{g.r1, g.r2, Mat3(r3b), Mat3(static_cast<std::uint16_t>(r4b)), Mat3(s3b),
                             Mat3(static_cast<std::uint16_t>(s4b))};
            const bool canonical = r3b < s3b && r4b < s4b;
            const bool nontrivial = filter_nontrivial(t);
            ++counts.raw;
            counts.deduplicated += canonical;
            counts.nontrivial_raw += nontrivial;
            counts.nontrivial_deduplicated += canonical && nontrivial;
            if (sink) sink(t);
          }
        }
      }
    }
  }
  return counts;
}

namespace detail {

struct TripleProducts {
  Mat6 a;     // E1 E2 E3
  Mat6 b;     // E3 E2 E1
  Mat6 binv;  // B^-1 = E1^-1 E2^-1 E3^-1
};

inline TripleProducts triple_products(Mat3 r1, Mat3 r2, Mat3 r3) {
  const Mat6 e1 = embed(r1, kSlot123), e2 = embed(r2, kSlot145), e3 = embed(r3, kSlot246);
  const Mat6 i1 = embed(invert3(r1), kSlot123), i2 = embed(invert3(r2), kSlot145),
             i3 = embed(invert3(r3), kSlot246);
  return {e1 * e2 * e3, e3 * e2 * e1, i1 * i2 * i3};
}

// Core of the modified-pair search for one triple against a candidate cache.
inline std::vector<ModifiedPair> modified_pairs_for(Mat3 r1, Mat3 r2, Mat3 r3, const EmbedCache& cache,
                                                    bool restrict_invertible) {
  const TripleProducts tp = triple_products(r1, r2, r3);
  const RightMul tbinv(tp.binv);
  const RightMul tb(tp.b);
  std::set<std::pair<Mat3, Mat3>> found;
  for (std::size_t i4 = 0; i4 < cache.mats.size(); ++i4) {
    const Mat3 r4 = cache.mats[i4];
    // Solve A E4 = Q B for the only possible Q.
    const Mat6 q6 = tbinv.apply(cache.tables[3][i4].apply(tp.a));
    const auto q4 = extract_core(q6, kSlot356);
    if (!q4 || *q4 == r4) continue;
    if (restrict_invertible && !q4->invertible()) continue;
    // Swapped relation: A Q = E4 B.
    if (RightMul(q6).apply(tp.a) != tb.apply(cache.embeds[3][i4])) continue;
    found.insert(std::minmax(r4, *q4));
  }
  std::vector<ModifiedPair> out;
  out.reserve(found.size());
  for (const auto& [lo, hi] : found) out.push_back({r1, r2, r3, lo, hi});
  return out;
}

}  // namespace detail

// All unordered pairs {r4, q4}, r4 != q4, for which both
//   E1 E2 E3 R4 = Q4 E3 E2 E1  and  E1 E2 E3 Q4 = R4 E3 E2 E1
// hold (slot embeddings implied).  r1, r2, r3 must be invertible.
inline std::vector<ModifiedPair> search_modified_pairs(Mat3 r1, Mat3 r2, Mat3 r3, bool restrict_invertible = true) {
  const detail::EmbedCache cache(detail::candidates(restrict_invertible));
  return detail::modified_pairs_for(r1, r2, r3, cache, restrict_invertible);
}

struct TripleRange {
  std::size_t begin = 0;
  std::size_t end = 168 * 168 * 168;
};

inline constexpr std::size_t kGlTripleCount = 168 * 168 * 168;

struct TripleResult {
  Mat3 r1, r2, r3;
  std::vector<ModifiedPair> pairs;
};

// Maps a linear index in [0, 168^3) to the GL triple (r1, r2, r3), r3 fastest.
inline std::array<Mat3, 3> gl_triple(std::size_t index) {
  const auto& gl = enumerate_gl3();
  if (index >= kGlTripleCount) throw std::out_of_range("triple index out of range");
  return {gl[index / (168 * 168)], gl[(index / 168) % 168], gl[index % 168]};
}

// Scans GL triples in [range.begin, range.end) and returns those with at
// least one modified pair, in index order.
inline std::vector<TripleResult> search_all_modified(TripleRange range = {}, unsigned threads = 0,
                                                     bool restrict_invertible = true) {
  range.end = std::min(range.end, kGlTripleCount);
  if (range.begin >= range.end) return {};
  const detail::EmbedCache cache(detail::candidates(restrict_invertible));
  constexpr std::size_t kChunk = 168;
  const std::size_t chunks = (range.end - range.begin + kChunk - 1) / kChunk;
  return run_partitions<TripleResult>(chunks, threads, [&](std::size_t c) {
    std::vector<TripleResult> out;
    const std::size_t lo = range.begin + c * kChunk;
    const std::size_t hi = std::min(range.end, lo + kChunk);
    for (std::size_t idx = lo; idx < hi; ++idx) {
      const auto [r1, r2, r3] = gl_triple(idx);
      auto pairs = detail::modified_pairs_for(r1, r2, r3, cache, restrict_invertible);
      if (!pairs.empty()) out.push_back({r1, r2, r3, std::move(pairs)});
    }
    return out;
  });
}

// Number of triples per pair count.
inline std::map<std::size_t, std::size_t> pair_count_histogram(const std::vector<TripleResult>& results) {
  std::map<std::size_t, std::size_t> h;
  for (const auto& r : results) ++h[r.pairs.size()];
  return h;
}

}  // namespace tetra
