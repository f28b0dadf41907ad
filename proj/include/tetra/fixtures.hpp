#pragma once

// The eight published worked examples, transcribed entry for entry.

#include <array>
#include <cstddef>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

#include "tetra/gf2.hpp"
#include "tetra/search.hpp"

namespace tetra::fixtures {

// Six-tuple (R1, R2, R3, R4, S3, S4) with the stated generic vertex counts of
// alpha R3 + beta S3 and lambda R4 + mu S4.
struct SixTupleExample {
  int number;
  SixTuple tuple;
  std::size_t vertices3;
  std::size_t vertices4;
};

// Triple (R1, R2, R3) with the listed (R4, Q4) pairs in printed orientation.
struct ModifiedExample {
  int number;
  Mat3 r1, r2, r3;
  std::vector<std::pair<Mat3, Mat3>> pairs;
};

namespace detail {
inline Mat3 m(const char* text) { return Mat3::parse(text); }
}  // namespace detail

inline const std::array<SixTupleExample, 4>& sixtuple_examples() {
  using detail::m;
  static const std::array<SixTupleExample, 4> examples{{
      // Example 1
      {1,
       {m("100/010/011"), m("100/011/001"), m("011/001/110"), m("101/010/011"), m("100/010/001"),
        m("111/010/011")},
       14,
       12},
      // Example 2
      {2,
       {m("101/011/001"), m("100/010/011"), m("110/111/100"), m("100/011/101"), m("001/111/100"),
        m("100/111/101")},
       12,
       12},
      // Example 3
      {3,
       {m("100/011/001"), m("100/010/101"), m("011/111/110"), m("100/010/101"), m("100/111/110"),
        m("100/110/101")},
       12,
       12},
      // Example 4
      {4,
       {m("100/010/101"), m("100/010/101"), m("010/100/001"), m("010/011/111"), m("110/010/001"),
        m("011/101/111")},
       14,
       14},
  }};
  return examples;
}

inline const std::array<ModifiedExample, 4>& modified_examples() {
  using detail::m;
  static const std::array<ModifiedExample, 4> examples{{
      // Example 5: one T
      {5, m("101/100/111"), m("100/011/001"), m("100/010/111"), {{m("100/010/101"), m("100/010/111")}}},
      // Example 6: two T's
      {6,
       m("100/010/101"),
       m("101/111/001"),
       m("101/110/001"),
       {{m("100/010/001"), m("110/010/001")}, {m("101/010/001"), m("111/010/001")}}},
      // Example 7: two T's
      {7,
       m("100/010/101"),
       m("101/010/001"),
       m("100/010/101"),
       {{m("100/010/001"), m("110/010/001")}, {m("110/010/011"), m("100/010/011")}}},
      // Example 8: four T's
      {8,
       m("100/010/101"),
       m("101/010/001"),
       m("010/100/001"),
       {{m("100/010/001"), m("110/010/001")},
        {m("110/010/011"), m("100/010/011")},
        {m("101/010/001"), m("111/010/001")},
        {m("101/010/011"), m("111/010/011")}}},
  }};
  return examples;
}

inline const SixTupleExample& sixtuple_example(int number) {
  for (const auto& e : sixtuple_examples())
    if (e.number == number) return e;
  throw std::out_of_range("no six-tuple example " + std::to_string(number));
}

inline const ModifiedExample& modified_example(int number) {
  for (const auto& e : modified_examples())
    if (e.number == number) return e;
  throw std::out_of_range("no modified-pair example " + std::to_string(number));
}

}  // namespace tetra::fixtures
