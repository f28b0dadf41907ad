#pragma once

// Verification batteries for the worked examples: every direct-sum relation
// the example is claimed to satisfy, the corresponding quantum relations, the
// parametric/summed operators, vertex counts and entry ranges.

#include <algorithm>
#include <cstddef>
#include <ostream>
#include <string>
#include <vector>

#include "tetra/fixtures.hpp"
#include "tetra/gf2.hpp"
#include "tetra/quantum.hpp"
#include "tetra/search.hpp"

namespace tetra {

struct Check {
  std::string name;
  bool passed = false;
  std::string detail;
};

struct VerificationReport {
  int example = 0;
  std::vector<Check> checks;
  // Only for six-tuple examples.
  std::size_t vertices3 = 0;
  std::size_t vertices4 = 0;

  bool passed() const {
    return std::all_of(checks.begin(), checks.end(), [](const Check& c) { return c.passed; });
  }

  void add(std::string name, bool ok, std::string detail = {}) {
    checks.push_back({std::move(name), ok, std::move(detail)});
  }
};

inline VerificationReport verify_sixtuple_example(const fixtures::SixTupleExample& ex) {
  const SixTuple& t = ex.tuple;
  VerificationReport rep;
  rep.example = ex.number;

  rep.add("direct-sum (R3,R4)", check_ds_tetra(t.r1, t.r2, t.r3, t.r4));
  rep.add("direct-sum (R3,S4)", check_ds_tetra(t.r1, t.r2, t.r3, t.s4));
  rep.add("direct-sum (S3,R4)", check_ds_tetra(t.r1, t.r2, t.s3, t.r4));
  rep.add("direct-sum (S3,S4)", check_ds_tetra(t.r1, t.r2, t.s3, t.s4));
  rep.add("S3 != R3", t.s3 != t.r3);
  rep.add("S4 != R4", t.s4 != t.r4);

  const PermOp8 q1 = quantize(t.r1), q2 = quantize(t.r2);
  const PermOp8 qr3 = quantize(t.r3), qs3 = quantize(t.s3), qr4 = quantize(t.r4), qs4 = quantize(t.s4);
  rep.add("quantum (R3,R4)", check_quantum_pure(q1, q2, qr3, qr4, qr4));
  rep.add("quantum (R3,S4)", check_quantum_pure(q1, q2, qr3, qs4, qs4));
  rep.add("quantum (S3,R4)", check_quantum_pure(q1, q2, qs3, qr4, qr4));
  rep.add("quantum (S3,S4)", check_quantum_pure(q1, q2, qs3, qs4, qs4));

  const WeightedOp8 w3{{Param::alpha, qr3}, {Param::beta, qs3}};
  const WeightedOp8 w4{{Param::lambda, qr4}, {Param::mu, qs4}};
  rep.add("quantum R3 with lambda R4 + mu S4", check_quantum_weighted(q1, q2, WeightedOp8::single(qr3), w4));
  rep.add("weighted symbolic", weighted_identity_symbolic(q1, q2, w3, w4));
  rep.add("weighted at (1,2,3,5)", weighted_identity_at(q1, q2, w3, w4, kCrossCheckPoint));

  rep.vertices3 = vertex_count(w3);
  rep.vertices4 = vertex_count(w4);
  rep.add("vertex count slot3", rep.vertices3 == ex.vertices3,
          std::to_string(rep.vertices3) + " (expected " + std::to_string(ex.vertices3) + ")");
  rep.add("vertex count slot4", rep.vertices4 == ex.vertices4,
          std::to_string(rep.vertices4) + " (expected " + std::to_string(ex.vertices4) + ")");

  const bool nonneg = DenseMatrix<8>::from(w3, kCrossCheckPoint).nonnegative() &&
                      DenseMatrix<8>::from(w4, kCrossCheckPoint).nonnegative();
  rep.add("nonnegative entries", nonneg);
  rep.add("genuinely 3D", filter_nontrivial(t));
  return rep;
}

// Sum of the T operators of all listed pairs, pair k weighted by the k-th
// prime, so that a combination of several T's is exercised.
inline WeightedOp8 combined_t(const fixtures::ModifiedExample& ex) {
  static constexpr std::int64_t kWeights[] = {1, 2, 3, 5, 7, 11, 13};
  WeightedOp8 w;
  for (std::size_t k = 0; k < ex.pairs.size(); ++k) {
    const Rational c(kWeights[k % std::size(kWeights)]);
    w.terms.push_back({c, quantize(ex.pairs[k].first)});
    w.terms.push_back({c, quantize(ex.pairs[k].second)});
  }
  return w;
}

// run_search also runs the exhaustive pair search for the triple and compares
// it against the listed pairs.
inline VerificationReport verify_modified_example(const fixtures::ModifiedExample& ex, bool run_search = true) {
  VerificationReport rep;
  rep.example = ex.number;
  const PermOp8 q1 = quantize(ex.r1), q2 = quantize(ex.r2), q3 = quantize(ex.r3);

  for (std::size_t k = 0; k < ex.pairs.size(); ++k) {
    const auto [r4, q4] = ex.pairs[k];
    const std::string tag = " pair " + std::to_string(k + 1);
    rep.add("R4 != Q4" + tag, r4 != q4);
    rep.add("modified direct-sum R4|Q4" + tag, check_ds_relation(ex.r1, ex.r2, ex.r3, r4, q4));
    rep.add("modified direct-sum Q4|R4" + tag, check_ds_relation(ex.r1, ex.r2, ex.r3, q4, r4));
    const PermOp8 qr4 = quantize(r4), qq4 = quantize(q4);
    rep.add("modified quantum R4|Q4" + tag, check_quantum_pure(q1, q2, q3, qr4, qq4));
    rep.add("modified quantum Q4|R4" + tag, check_quantum_pure(q1, q2, q3, qq4, qr4));

    const auto entries = sum_entries(r4, q4);
    const bool in_range = std::all_of(entries.begin(), entries.end(), [](int e) { return e >= 0 && e <= 2; });
    rep.add("T entries in {0,1,2}" + tag, in_range);
    const WeightedOp8 t{{Rational(1), qr4}, {Rational(1), qq4}};
    rep.add("quantum with T" + tag, check_quantum_weighted(q1, q2, WeightedOp8::single(q3), t));
  }
  if (ex.pairs.size() > 1)
    rep.add("quantum with combination of T's",
            check_quantum_weighted(q1, q2, WeightedOp8::single(q3), combined_t(ex)));

  if (run_search) {
    const auto found = search_modified_pairs(ex.r1, ex.r2, ex.r3);
    bool all_listed = true;
    for (auto [r4, q4] : ex.pairs) {
      const auto [lo, hi] = std::minmax(r4, q4);
      const ModifiedPair want{ex.r1, ex.r2, ex.r3, lo, hi};
      all_listed = all_listed && std::find(found.begin(), found.end(), want) != found.end();
    }
    rep.add("search recovers listed pairs", all_listed);
    rep.add("search finds exactly the listed pairs", found.size() == ex.pairs.size(),
            std::to_string(found.size()) + " found, " + std::to_string(ex.pairs.size()) + " listed");
  }
  return rep;
}

inline VerificationReport verify_example(int number, bool run_search = true) {
  if (number >= 1 && number <= 4) return verify_sixtuple_example(fixtures::sixtuple_example(number));
  if (number >= 5 && number <= 8) return verify_modified_example(fixtures::modified_example(number), run_search);
  throw std::out_of_range("example number must be in 1..8");
}

inline void print_report(std::ostream& os, const VerificationReport& rep) {
  std::size_t width = 0;
  for (const auto& c : rep.checks) width = std::max(width, c.name.size());
  for (const auto& c : rep.checks) {
    os << (c.passed ? "PASS  " : "FAIL  ") << c.name << std::string(width - c.name.size(), ' ');
    if (!c.detail.empty()) os << "  " << c.detail;
    os << '\n';
  }
  if (rep.example <= 4) os << "vertex counts: slot3: " << rep.vertices3 << ", slot4: " << rep.vertices4 << '\n';
  os << "example " << rep.example << ": " << (rep.passed() ? "all checks pass" : "FAILED") << '\n';
}

}  // namespace tetra
