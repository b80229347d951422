#pragma once

#include <array>
#include <compare>
#include <cstdint>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

namespace e6kit {

constexpr int kLineCount = 27;
constexpr int kRootCount = 72;

// Element of I^{1,6}: coordinates in the basis f0, f1, ..., f6.
struct LatticeVector {
  std::array<std::int64_t, 7> x{};

  LatticeVector() = default;
  constexpr LatticeVector(std::int64_t x0, std::int64_t x1, std::int64_t x2, std::int64_t x3, std::int64_t x4,
                          std::int64_t x5, std::int64_t x6)
      : x{x0, x1, x2, x3, x4, x5, x6} {}

  std::int64_t operator[](int i) const { return x[i]; }
  std::int64_t& operator[](int i) { return x[i]; }

  LatticeVector operator+(const LatticeVector& o) const;
  LatticeVector operator-(const LatticeVector& o) const;
  LatticeVector operator-() const;
  LatticeVector operator*(std::int64_t c) const;
  LatticeVector& operator+=(const LatticeVector& o);

  auto operator<=>(const LatticeVector&) const = default;

  std::string str() const;  // "(x0,x1,...,x6)"
};

// (u,v) = u0 v0 - sum u_i v_i
std::int64_t pairing(const LatticeVector& u, const LatticeVector& v);

LatticeVector basis_vector(int i);
LatticeVector canonical_class();  // k = (-3,1,1,1,1,1,1)

struct Root {
  LatticeVector vec;

  // Label in alpha notation: "a12", "a135", "max", with "-" for negatives.
  std::string label() const;
  // Position in the canonical 72-root order.
  int index() const;
  Root operator-() const { return Root{-vec}; }
  bool operator==(const Root& o) const { return vec == o.vec; }
};

struct Line {
  enum class Kind { A, B, C };
  LatticeVector vec;
  Kind kind;
  int i;  // 1-based
  int j;  // only for c_ij
  int index;

  std::string label() const;  // "a1", "b3", "c25"
};

bool is_root(const LatticeVector& v);
bool is_line(const LatticeVector& v);

// Throws std::invalid_argument if v is not a root.
Root make_root(const LatticeVector& v);

Root alpha(int i, int j);
Root alpha(int i, int j, int k);
Root alpha_max();

// Canonical order: a12, -a12, a13, -a13, ..., a56, -a56, a123, -a123, ...,
// a456, -a456, max, -max.
const std::vector<Root>& enumerate_roots();

// Canonical order a1..a6, b1..b6, c12, c13, ..., c56.
const std::vector<Line>& enumerate_lines();

const Line& line(int index);
// -1 if v is not one of the 27 lines.
int line_index(const LatticeVector& v);
// Parses "a3", "b6", "c25" or "c52".
int line_index(std::string_view label);
std::string line_label(int index);

// Simple roots r0..r6: r1 = a123, r2 = a12, r3 = a23, r4 = a34, r5 = a45,
// r6 = a56, r0 = -max (the extended node).
const std::array<Root, 7>& simple_roots();

// The six lines with (r,l) = 1, each paired with l + r, ordered by the index
// of the first line.
std::vector<std::pair<int, int>> double_six(const LatticeVector& r);

// Coordinates of an E6 vector in the simple-root basis r1..r6.
std::array<std::int64_t, 6> simple_coordinates(const LatticeVector& v);

// Root literal: "a:i,j", "b:i,j,k", "max", optional leading "-", or a raw
// 7-tuple "(x0,...,x6)" that must be a root.
Root parse_root(std::string_view token);

// Whitespace-separated root tokens, '#' comments allowed. Errors
// carry line and column.
std::vector<Root> parse_root_list(std::string_view text);

}  // namespace e6kit
