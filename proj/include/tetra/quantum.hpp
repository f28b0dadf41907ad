#pragma once

// Permutation-type quantization.  A matrix R over F2 becomes the linear
// operator on span(F2^3) sending each basis row-vector x to x R.  Basis states
// are encoded with coordinate 1 most significant (x -> 4 x1 + 2 x2 + x3, and
// the 6-bit analogue for the six-fold tensor space).  Operator matrices are
// indexed [input, output], so products read left-to-right in application
// order, the same as the direct-sum products.

#include <algorithm>
#include <array>
#include <cstddef>
#include <cstdint>
#include <map>
#include <optional>
#include <set>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

#include "tetra/gf2.hpp"
#include "tetra/rational.hpp"

namespace tetra {

template <std::size_t N>
concept StateDim = (N == 8 || N == 64);

// Number of F2 coordinates behind an N-state basis.
template <std::size_t N>
  requires StateDim<N>
inline constexpr int kCoords = N == 8 ? 3 : 6;

// Coordinate i (1-based) of the state index.
template <std::size_t N>
  requires StateDim<N>
constexpr bool state_coord(std::size_t state, int i) {
  return (state >> (kCoords<N> - i)) & 1u;
}

template <std::size_t N>
  requires StateDim<N>
constexpr std::size_t encode_state(const std::array<bool, kCoords<N>>& coords) {
  std::size_t s = 0;
  for (bool c : coords) s = (s << 1) | static_cast<std::size_t>(c);
  return s;
}

template <std::size_t N>
  requires StateDim<N>
constexpr std::array<bool, kCoords<N>> decode_state(std::size_t state) {
  std::array<bool, kCoords<N>> coords{};
  for (int i = 1; i <= kCoords<N>; ++i) coords[static_cast<std::size_t>(i - 1)] = state_coord<N>(state, i);
  return coords;
}

// Permutation of N basis states; map[x] is the image of state x.
template <std::size_t N>
  requires StateDim<N>
class PermOp {
 public:
  using Map = std::array<std::uint8_t, N>;

  constexpr PermOp() {
    for (std::size_t x = 0; x < N; ++x) map_[x] = static_cast<std::uint8_t>(x);
  }

  constexpr explicit PermOp(const Map& map) : map_(map) {
    std::array<bool, N> hit{};
    for (auto y : map_) {
      if (y >= N || hit[y]) throw std::invalid_argument("permutation map is not a bijection");
      hit[y] = true;
    }
  }

  static constexpr PermOp identity() { return PermOp(); }

  constexpr std::size_t operator()(std::size_t x) const { return map_[x]; }
  constexpr const Map& map() const { return map_; }
  static constexpr std::size_t dim() { return N; }

  // Matrix entry [x, y].
  constexpr int entry(std::size_t x, std::size_t y) const { return map_[x] == y ? 1 : 0; }

  constexpr PermOp inverse() const {
    Map inv{};
    for (std::size_t x = 0; x < N; ++x) inv[map_[x]] = static_cast<std::uint8_t>(x);
    return PermOp(inv, Unchecked{});
  }

  constexpr bool is_identity() const { return *this == PermOp(); }

  // Decimal image indices, comma-separated.
  std::string to_string() const {
    std::string s;
    for (std::size_t x = 0; x < N; ++x) {
      if (x) s.push_back(',');
      s += std::to_string(map_[x]);
    }
    return s;
  }

  friend constexpr bool operator==(const PermOp&, const PermOp&) = default;
  friend constexpr auto operator<=>(const PermOp&, const PermOp&) = default;

  struct Unchecked {};
  constexpr PermOp(const Map& map, Unchecked) : map_(map) {}

 private:
  Map map_{};
};

using PermOp8 = PermOp<8>;
using PermOp64 = PermOp<64>;

// Apply a first, then b: result(x) = b(a(x)).
template <std::size_t N>
constexpr PermOp<N> compose(const PermOp<N>& a, const PermOp<N>& b) {
  typename PermOp<N>::Map m{};
  for (std::size_t x = 0; x < N; ++x) m[x] = static_cast<std::uint8_t>(b(a(x)));
  return PermOp<N>(m, typename PermOp<N>::Unchecked{});
}

template <std::size_t N, typename... Rest>
constexpr PermOp<N> compose(const PermOp<N>& a, const PermOp<N>& b, const Rest&... rest) {
  return compose(compose(a, b), rest...);
}

// x -> x r on F2^3.  Only invertible matrices are quantized.
inline PermOp8 quantize(Mat3 r) {
  if (!r.invertible()) throw NotInvertible("cannot quantize singular matrix " + r.to_string());
  PermOp8::Map m{};
  for (std::size_t x = 0; x < 8; ++x) {
    const auto xc = decode_state<8>(x);
    std::array<bool, 3> y{};
    for (int q = 0; q < 3; ++q)
      for (int p = 0; p < 3; ++p) y[q] ^= xc[p] && r.at(p, q);
    m[x] = static_cast<std::uint8_t>(encode_state<8>(y));
  }
  return PermOp8(m);
}

// x -> x m on F2^6.
inline PermOp64 quantize6(Mat6 mat) {
  PermOp64::Map m{};
  for (std::size_t x = 0; x < 64; ++x) {
    const auto xc = decode_state<64>(x);
    std::array<bool, 6> y{};
    for (int q = 0; q < 6; ++q)
      for (int p = 0; p < 6; ++p) y[q] ^= xc[p] && mat.at(p, q);
    m[x] = static_cast<std::uint8_t>(encode_state<64>(y));
  }
  try {
    return PermOp64(m);
  } catch (const std::invalid_argument&) {
    throw NotInvertible("cannot quantize singular 6x6 matrix");
  }
}

// p acting on tensor factors (i, j, k) of the six-fold space, identity on
// the other three.
inline PermOp64 lift(const PermOp8& p, const Slot& slot) {
  PermOp64::Map m{};
  for (std::size_t s = 0; s < 64; ++s) {
    std::size_t sub = 0;
    for (int n = 0; n < 3; ++n) sub = (sub << 1) | static_cast<std::size_t>(state_coord<64>(s, slot[n]));
    const std::size_t img = p(sub);
    std::size_t out = s;
    for (int n = 0; n < 3; ++n) {
      const std::size_t bit = std::size_t{1} << (6 - slot[n]);
      const bool v = (img >> (2 - n)) & 1u;
      out = v ? (out | bit) : (out & ~bit);
    }
    m[s] = static_cast<std::uint8_t>(out);
  }
  return PermOp64(m, PermOp64::Unchecked{});
}

// Q1_123 Q2_145 Q3_246 L_356 == R_356 Q3_246 Q2_145 Q1_123 as permutations of
// the 64 states.  left4 == right4 is the plain quantum relation; distinct
// operators give the modified relations.
inline bool check_quantum_pure(const PermOp8& q1, const PermOp8& q2, const PermOp8& q3, const PermOp8& left4,
                               const PermOp8& right4) {
  const PermOp64 l1 = lift(q1, kSlot123), l2 = lift(q2, kSlot145), l3 = lift(q3, kSlot246);
  return compose(l1, l2, l3, lift(left4, kSlot356)) == compose(lift(right4, kSlot356), l3, l2, l1);
}

enum class Param { alpha, beta, lambda, mu };

inline std::string param_name(Param p) {
  switch (p) {
    case Param::alpha: return "alpha";
    case Param::beta: return "beta";
    case Param::lambda: return "lambda";
    case Param::mu: return "mu";
  }
  return "?";
}

// scale * symbol, or a plain rational when symbol is empty.
struct Coefficient {
  Rational scale{1};
  std::optional<Param> symbol;

  Coefficient(Rational value) : scale(value) {}  // NOLINT(google-explicit-constructor)
  Coefficient(std::int64_t value) : scale(value) {}  // NOLINT(google-explicit-constructor)
  Coefficient(Param p) : symbol(p) {}  // NOLINT(google-explicit-constructor)
  Coefficient(Rational value, Param p) : scale(value), symbol(p) {}

  std::string to_string() const {
    if (!symbol) return scale.to_string();
    if (scale == Rational(1)) return param_name(*symbol);
    return scale.to_string() + "*" + param_name(*symbol);
  }

  friend bool operator==(const Coefficient&, const Coefficient&) = default;
};

// Numeric values for the formal parameters.
struct ParamValues {
  Rational alpha{1}, beta{1}, lambda{1}, mu{1};

  Rational operator[](Param p) const {
    switch (p) {
      case Param::alpha: return alpha;
      case Param::beta: return beta;
      case Param::lambda: return lambda;
      case Param::mu: return mu;
    }
    return Rational(0);
  }
};

inline Rational evaluate(const Coefficient& c, const ParamValues& values) {
  return c.symbol ? c.scale * values[*c.symbol] : c.scale;
}

// Linear combination of permutation operators with exact or formal
// coefficients.  Entry [x, y] is the sum of coefficients of the terms whose
// permutation maps x to y.
template <std::size_t N>
  requires StateDim<N>
struct WeightedOp {
  struct Term {
    Coefficient coeff;
    PermOp<N> op;
  };
  std::vector<Term> terms;

  WeightedOp() = default;
  WeightedOp(std::initializer_list<Term> ts) : terms(ts) {}

  static WeightedOp single(const PermOp<N>& op) { return WeightedOp{{Coefficient(1), op}}; }

  std::string to_string() const {
    std::string s;
    for (std::size_t i = 0; i < terms.size(); ++i) {
      if (i) s += " + ";
      s += terms[i].coeff.to_string() + "*[" + terms[i].op.to_string() + "]";
    }
    return s;
  }
};

using WeightedOp8 = WeightedOp<8>;
using WeightedOp64 = WeightedOp<64>;

inline WeightedOp64 lift(const WeightedOp8& w, const Slot& slot) {
  WeightedOp64 out;
  out.terms.reserve(w.terms.size());
  for (const auto& t : w.terms) out.terms.push_back({t.coeff, lift(t.op, slot)});
  return out;
}

// Dense N x N matrix with exact rational entries.
template <std::size_t N>
class DenseMatrix {
 public:
  DenseMatrix() : data_(N * N) {}

  static DenseMatrix from(const PermOp<N>& p, Rational scale = Rational(1)) {
    DenseMatrix m;
    for (std::size_t x = 0; x < N; ++x) m(x, p(x)) = scale;
    return m;
  }

  static DenseMatrix from(const WeightedOp<N>& w, const ParamValues& values) {
    DenseMatrix m;
    for (const auto& t : w.terms) {
      const Rational c = evaluate(t.coeff, values);
      for (std::size_t x = 0; x < N; ++x) m(x, t.op(x)) += c;
    }
    return m;
  }

  Rational& operator()(std::size_t r, std::size_t c) { return data_[r * N + c]; }
  Rational operator()(std::size_t r, std::size_t c) const { return data_[r * N + c]; }

  friend DenseMatrix operator*(const DenseMatrix& a, const DenseMatrix& b) {
    DenseMatrix c;
    for (std::size_t i = 0; i < N; ++i)
      for (std::size_t k = 0; k < N; ++k) {
        const Rational aik = a(i, k);
        if (aik.is_zero()) continue;
        for (std::size_t j = 0; j < N; ++j)
          if (!b(k, j).is_zero()) c(i, j) += aik * b(k, j);
      }
    return c;
  }

  bool nonnegative() const {
    return std::all_of(data_.begin(), data_.end(), [](Rational v) { return v >= Rational(0); });
  }

  const std::vector<Rational>& entries() const { return data_; }

  friend bool operator==(const DenseMatrix&, const DenseMatrix&) = default;

 private:
  std::vector<Rational> data_;
};

namespace detail {

// Formal monomial of a product of two coefficients: sorted pair of symbols
// (absent symbols sort first as -1).
using Monomial = std::pair<int, int>;

inline Monomial monomial(const Coefficient& a, const Coefficient& b) {
  const int x = a.symbol ? static_cast<int>(*a.symbol) : -1;
  const int y = b.symbol ? static_cast<int>(*b.symbol) : -1;
  return std::minmax(x, y);
}

}  // namespace detail

// Symbolic check of
//   Q1_123 Q2_145 W3_246 W4_356 == W4_356 W3_246 Q2_145 Q1_123
// with entries that are polynomials in the formal parameters.  The
// difference is bilinear in the coefficients of W3 and W4; it is expanded
// term by term, grouped by formal monomial, and every group's numeric matrix
// must vanish.  With distinct symbols on every term this is the conjunction
// of the pure checks; with numeric coefficients (e.g. R + Q) cross-term
// cancellation is taken into account.
inline bool weighted_identity_symbolic(const PermOp8& q1, const PermOp8& q2, const WeightedOp8& w3,
                                       const WeightedOp8& w4) {
  const PermOp64 l1 = lift(q1, kSlot123), l2 = lift(q2, kSlot145);
  const PermOp64 head = compose(l1, l2);
  const PermOp64 tail = compose(l2, l1);
  const WeightedOp64 w3l = lift(w3, kSlot246), w4l = lift(w4, kSlot356);

  std::map<detail::Monomial, std::map<std::pair<std::size_t, std::size_t>, Rational>> diff;
  for (const auto& t3 : w3l.terms) {
    for (const auto& t4 : w4l.terms) {
      const Rational scale = t3.coeff.scale * t4.coeff.scale;
      auto& group = diff[detail::monomial(t3.coeff, t4.coeff)];
      const PermOp64 lhs = compose(head, t3.op, t4.op);
      const PermOp64 rhs = compose(t4.op, t3.op, tail);
      for (std::size_t x = 0; x < 64; ++x) {
        group[{x, lhs(x)}] += scale;
        group[{x, rhs(x)}] -= scale;
      }
    }
  }
  for (const auto& [mono, group] : diff)
    for (const auto& [pos, value] : group)
      if (!value.is_zero()) return false;
  return true;
}

// Both sides as dense 64 x 64 matrices at a numeric parameter point.
inline bool weighted_identity_at(const PermOp8& q1, const PermOp8& q2, const WeightedOp8& w3, const WeightedOp8& w4,
                                 const ParamValues& values) {
  using Dense = DenseMatrix<64>;
  const Dense d1 = Dense::from(lift(q1, kSlot123));
  const Dense d2 = Dense::from(lift(q2, kSlot145));
  const Dense d3 = Dense::from(lift(w3, kSlot246), values);
  const Dense d4 = Dense::from(lift(w4, kSlot356), values);
  return d1 * d2 * d3 * d4 == d4 * d3 * d2 * d1;
}

// Distinct primes, so accidental cancellations between terms are excluded.
inline constexpr ParamValues kCrossCheckPoint{Rational(1), Rational(2), Rational(3), Rational(5)};

inline bool check_quantum_weighted(const PermOp8& q1, const PermOp8& q2, const WeightedOp8& w3,
                                   const WeightedOp8& w4) {
  return weighted_identity_symbolic(q1, q2, w3, w4) && weighted_identity_at(q1, q2, w3, w4, kCrossCheckPoint);
}

// Nonzero entries for generic coefficients: positions hit by at least one
// term's permutation.
template <std::size_t N>
std::size_t vertex_count(const WeightedOp<N>& w) {
  std::set<std::pair<std::size_t, std::size_t>> hit;
  for (const auto& t : w.terms)
    for (std::size_t x = 0; x < N; ++x) hit.insert({x, t.op(x)});
  return hit.size();
}

// Row-major 8 x 8 entries of quantize(r4) + quantize(q4).
inline std::array<int, 64> sum_entries(Mat3 r4, Mat3 q4) {
  const PermOp8 a = quantize(r4), b = quantize(q4);
  std::array<int, 64> out{};
  for (std::size_t x = 0; x < 8; ++x) {
    out[x * 8 + a(x)] += 1;
    out[x * 8 + b(x)] += 1;
  }
  return out;
}

// Multiset of entries as value -> multiplicity.
inline std::map<int, std::size_t> entry_histogram(const std::array<int, 64>& entries) {
  std::map<int, std::size_t> h;
  for (int e : entries) ++h[e];
  return h;
}

}  // namespace tetra
