#pragma once

// Exact 3x3 and 6x6 matrix algebra over the two-element field.
//
// Conventions:
//  * Vectors are rows and matrices act from the right, so x * (a * b) ==
//    (x * a) * b and products read left-to-right in application order.
//  * Mat3 packs entry (p, q) (0-based) at bit 8 - (3p + q).  The integer order
//    of the packing is therefore the lexicographic order of the row-major
//    entry string, which is also the order of the "rrr/rrr/rrr" text form.
//  * Mat6 packs row p in bits [6p, 6p + 6), column q at bit q of that row.

#include <algorithm>
#include <array>
#include <bit>
#include <compare>
#include <cstdint>
#include <optional>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

namespace tetra {

class ParseError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

class NotInvertible : public std::domain_error {
 public:
  using std::domain_error::domain_error;
};

class Mat3 {
 public:
  static constexpr std::uint16_t kMask = 0x1ff;
  static constexpr int kCount = 512;

  constexpr Mat3() = default;
  constexpr explicit Mat3(std::uint16_t bits) : bits_(bits & kMask) {}

  // Row-major initializer; nonzero entries are 1.
  constexpr static Mat3 from_rows(const std::array<std::array<int, 3>, 3>& rows) {
    Mat3 m;
    for (int p = 0; p < 3; ++p)
      for (int q = 0; q < 3; ++q) m.set(p, q, rows[p][q] != 0);
    return m;
  }

  constexpr static Mat3 identity() { return Mat3(0b100'010'001); }

  constexpr std::uint16_t bits() const { return bits_; }

  constexpr bool at(int p, int q) const { return (bits_ >> shift(p, q)) & 1u; }

  constexpr void set(int p, int q, bool v) {
    const auto b = static_cast<std::uint16_t>(1u << shift(p, q));
    bits_ = v ? static_cast<std::uint16_t>(bits_ | b) : static_cast<std::uint16_t>(bits_ & ~b);
  }

  // Row p as a 3-bit mask with column q at bit q.
  constexpr unsigned row_mask(int p) const {
    unsigned r = 0;
    for (int q = 0; q < 3; ++q) r |= static_cast<unsigned>(at(p, q)) << q;
    return r;
  }

  constexpr Mat3 transposed() const {
    Mat3 t;
    for (int p = 0; p < 3; ++p)
      for (int q = 0; q < 3; ++q) t.set(q, p, at(p, q));
    return t;
  }

  constexpr bool det() const {
    // Over F2 the permanent equals the determinant.
    bool d = false;
    constexpr int perms[6][3] = {{0, 1, 2}, {0, 2, 1}, {1, 0, 2}, {1, 2, 0}, {2, 0, 1}, {2, 1, 0}};
    for (const auto& s : perms) d ^= at(0, s[0]) && at(1, s[1]) && at(2, s[2]);
    return d;
  }

  constexpr bool invertible() const { return det(); }

  std::string to_string() const {
    std::string s;
    s.reserve(11);
    for (int p = 0; p < 3; ++p) {
      if (p) s.push_back('/');
      for (int q = 0; q < 3; ++q) s.push_back(at(p, q) ? '1' : '0');
    }
    return s;
  }

  // Parses the "rrr/rrr/rrr" text form; anything else is rejected.
  static Mat3 parse(std::string_view text) {
    if (text.size() != 11 || text[3] != '/' || text[7] != '/')
      throw ParseError("malformed matrix '" + std::string(text) + "': expected rrr/rrr/rrr");
    Mat3 m;
    for (int p = 0; p < 3; ++p) {
      for (int q = 0; q < 3; ++q) {
        const char c = text[static_cast<std::size_t>(4 * p + q)];
        if (c != '0' && c != '1')
          throw ParseError("malformed matrix '" + std::string(text) + "': entries must be 0 or 1");
        m.set(p, q, c == '1');
      }
    }
    return m;
  }

  friend constexpr bool operator==(Mat3, Mat3) = default;
  friend constexpr auto operator<=>(Mat3 a, Mat3 b) { return a.bits_ <=> b.bits_; }

 private:
  static constexpr int shift(int p, int q) { return 8 - (3 * p + q); }

  std::uint16_t bits_ = 0;
};

constexpr Mat3 operator*(Mat3 a, Mat3 b) {
  Mat3 c;
  for (int p = 0; p < 3; ++p)
    for (int q = 0; q < 3; ++q) {
      bool v = false;
      for (int k = 0; k < 3; ++k) v ^= a.at(p, k) && b.at(k, q);
      c.set(p, q, v);
    }
  return c;
}

constexpr Mat3 mul3(Mat3 a, Mat3 b) { return a * b; }

// Gauss-Jordan elimination over F2.
constexpr std::optional<Mat3> try_invert3(Mat3 a) {
  std::array<unsigned, 3> lhs{}, rhs{};
  for (int p = 0; p < 3; ++p) {
    lhs[p] = a.row_mask(p);
    rhs[p] = 1u << p;
  }
  for (int col = 0; col < 3; ++col) {
    int pivot = -1;
    for (int p = col; p < 3; ++p)
      if ((lhs[p] >> col) & 1u) {
        pivot = p;
        break;
      }
    if (pivot < 0) return std::nullopt;
    std::swap(lhs[col], lhs[pivot]);
    std::swap(rhs[col], rhs[pivot]);
    for (int p = 0; p < 3; ++p)
      if (p != col && ((lhs[p] >> col) & 1u)) {
        lhs[p] ^= lhs[col];
        rhs[p] ^= rhs[col];
      }
  }
  Mat3 inv;
  for (int p = 0; p < 3; ++p)
    for (int q = 0; q < 3; ++q) inv.set(p, q, (rhs[p] >> q) & 1u);
  return inv;
}

inline Mat3 invert3(Mat3 a) {
  if (auto inv = try_invert3(a)) return *inv;
  throw NotInvertible("matrix " + a.to_string() + " is singular over F2");
}

// All invertible 3x3 matrices in ascending packing order.
inline const std::vector<Mat3>& enumerate_gl3() {
  static const std::vector<Mat3> group = [] {
    std::vector<Mat3> g;
    g.reserve(168);
    for (int b = 0; b < Mat3::kCount; ++b) {
      const Mat3 m(static_cast<std::uint16_t>(b));
      if (m.invertible()) g.push_back(m);
    }
    return g;
  }();
  return group;
}

// All 512 matrices in ascending packing order.
inline std::vector<Mat3> enumerate_all3() {
  std::vector<Mat3> all;
  all.reserve(Mat3::kCount);
  for (int b = 0; b < Mat3::kCount; ++b) all.emplace_back(static_cast<std::uint16_t>(b));
  return all;
}

class Mat6 {
 public:
  static constexpr std::uint64_t kMask = (std::uint64_t{1} << 36) - 1;

  constexpr Mat6() = default;
  constexpr explicit Mat6(std::uint64_t bits) : bits_(bits & kMask) {}

  static constexpr Mat6 identity() {
    Mat6 m;
    for (int p = 0; p < 6; ++p) m.set(p, p, true);
    return m;
  }

  constexpr std::uint64_t bits() const { return bits_; }
  constexpr unsigned row(int p) const { return static_cast<unsigned>((bits_ >> (6 * p)) & 0x3f); }
  constexpr void set_row(int p, unsigned r) {
    bits_ = (bits_ & ~(std::uint64_t{0x3f} << (6 * p))) | (std::uint64_t{r & 0x3fu} << (6 * p));
  }
  constexpr bool at(int p, int q) const { return (row(p) >> q) & 1u; }
  constexpr void set(int p, int q, bool v) {
    const unsigned r = row(p);
    set_row(p, v ? (r | (1u << q)) : (r & ~(1u << q)));
  }

  constexpr Mat6 transposed() const {
    Mat6 t;
    for (int p = 0; p < 6; ++p)
      for (int q = 0; q < 6; ++q) t.set(q, p, at(p, q));
    return t;
  }

  friend constexpr bool operator==(Mat6, Mat6) = default;

 private:
  std::uint64_t bits_ = 0;
};

// Right-multiplication table for a fixed 6x6 matrix b: entry m holds the XOR
// of the rows of b selected by the 6-bit mask m, so (a * b).row(p) ==
// combos[a.row(p)].
class RightMul {
 public:
  constexpr RightMul() = default;
  constexpr explicit RightMul(Mat6 b) {
    combos_[0] = 0;
    for (unsigned m = 1; m < 64; ++m)
      combos_[m] = static_cast<std::uint8_t>(combos_[m & (m - 1)] ^ b.row(std::countr_zero(m)));
  }

  constexpr Mat6 apply(Mat6 a) const {
    std::uint64_t out = 0;
    for (int p = 0; p < 6; ++p) out |= std::uint64_t{combos_[a.row(p)]} << (6 * p);
    return Mat6(out);
  }

 private:
  std::array<std::uint8_t, 64> combos_{};
};

constexpr Mat6 operator*(Mat6 a, Mat6 b) { return RightMul(b).apply(a); }

// Ordered triple of 1-based row/column labels, strictly increasing in 1..6.
class Slot {
 public:
  constexpr Slot(int i, int j, int k) : idx_{i, j, k} {
    if (!(1 <= i && i < j && j < k && k <= 6))
      throw std::invalid_argument("slot labels must satisfy 1 <= i < j < k <= 6");
  }

  constexpr int operator[](int n) const { return idx_[static_cast<std::size_t>(n)]; }
  constexpr const std::array<int, 3>& labels() const { return idx_; }

  std::string to_string() const {
    return std::to_string(idx_[0]) + std::to_string(idx_[1]) + std::to_string(idx_[2]);
  }

  friend constexpr bool operator==(const Slot&, const Slot&) = default;

 private:
  std::array<int, 3> idx_;
};

inline constexpr Slot kSlot123{1, 2, 3};
inline constexpr Slot kSlot145{1, 4, 5};
inline constexpr Slot kSlot246{2, 4, 6};
inline constexpr Slot kSlot356{3, 5, 6};
inline constexpr std::array<Slot, 4> kCanonicalSlots{kSlot123, kSlot145, kSlot246, kSlot356};

// Direct sum of r on rows/columns {i, j, k} with the identity elsewhere.
constexpr Mat6 embed(Mat3 r, const Slot& slot) {
  Mat6 m = Mat6::identity();
  for (int p = 0; p < 3; ++p) m.set(slot[p] - 1, slot[p] - 1, false);
  for (int p = 0; p < 3; ++p)
    for (int q = 0; q < 3; ++q) m.set(slot[p] - 1, slot[q] - 1, r.at(p, q));
  return m;
}

// Inverse of embed: the 3x3 core if m has exact embedding shape for slot.
constexpr std::optional<Mat3> extract_core(Mat6 m, const Slot& slot) {
  unsigned inside = 0;
  for (int p = 0; p < 3; ++p) inside |= 1u << (slot[p] - 1);
  for (int p = 0; p < 6; ++p) {
    if ((inside >> p) & 1u) {
      if (m.row(p) & ~inside & 0x3fu) return std::nullopt;
    } else if (m.row(p) != (1u << p)) {
      return std::nullopt;
    }
  }
  Mat3 core;
  for (int p = 0; p < 3; ++p)
    for (int q = 0; q < 3; ++q) core.set(p, q, m.at(slot[p] - 1, slot[q] - 1));
  return core;
}

// Left and right sides of the direct-sum relation with separate fourth
// factors: R1_123 R2_145 R3_246 L_356 versus R_356 R3_246 R2_145 R1_123.
constexpr bool check_ds_relation(Mat3 r1, Mat3 r2, Mat3 r3, Mat3 r4_left, Mat3 r4_right) {
  const Mat6 e1 = embed(r1, kSlot123), e2 = embed(r2, kSlot145), e3 = embed(r3, kSlot246);
  const Mat6 lhs = e1 * e2 * e3 * embed(r4_left, kSlot356);
  const Mat6 rhs = embed(r4_right, kSlot356) * e3 * e2 * e1;
  return lhs == rhs;
}

constexpr bool check_ds_tetra(Mat3 r1, Mat3 r2, Mat3 r3, Mat3 r4) {
  return check_ds_relation(r1, r2, r3, r4, r4);
}

// False iff some proper nonempty subset S of {0,1,2} has m[p][q] == 0 for all
// p in S and q outside S, i.e. m is block triangular after a simultaneous
// row/column permutation.
constexpr bool is_genuinely_3d(Mat3 m) {
  for (unsigned s = 1; s < 7; ++s) {
    bool closed = true;
    for (int p = 0; p < 3 && closed; ++p) {
      if (!((s >> p) & 1u)) continue;
      if (m.row_mask(p) & ~s & 0x7u) closed = false;
    }
    if (closed) return false;
  }
  return true;
}

}  // namespace tetra
