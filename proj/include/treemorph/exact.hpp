#pragma once

#include <cstdint>
#include <vector>

#include "treemorph/drawing.hpp"

namespace treemorph {

// Arbitrary-precision signed integer, enough for exact segment predicates on
// double inputs (a handful of additions and three multiplications deep).
struct BigInt {
  int sign = 0;                // -1, 0, +1
  std::vector<uint32_t> mag;   // little-endian limbs, no leading zeros

  static BigInt zero() { return BigInt{}; }
  static BigInt from_int64(long long v);
  // v * 2^shift, which must be an integer (shift chosen from the exponents).
  static BigInt from_scaled_double(double v, int shift);

  bool is_zero() const { return sign == 0; }
  BigInt negated() const;
};

BigInt operator+(const BigInt& a, const BigInt& b);
BigInt operator-(const BigInt& a, const BigInt& b);
BigInt operator*(const BigInt& a, const BigInt& b);
// -1, 0, +1 comparison of a with b.
int compare(const BigInt& a, const BigInt& b);

struct BigVec3 {
  BigInt x, y, z;
};

BigVec3 sub(const BigVec3& a, const BigVec3& b);
BigVec3 cross(const BigVec3& a, const BigVec3& b);
BigInt dot(const BigVec3& a, const BigVec3& b);

// Converts a set of points to exact integer coordinates on a common power-of-
// two grid.
std::vector<BigVec3> to_exact_grid(std::span<const Vec3> points);

// True iff the open segments (a1,b1) and (a2,b2) intersect, decided exactly.
bool open_segments_intersect_exact(const Vec3& a1, const Vec3& b1, const Vec3& a2, const Vec3& b2);

// Exact (tolerance-free) static crossing check: reports true when the drawing
// is crossing-free under the open-segment convention and all vertex positions
// are pairwise distinct. Intended for small instances (n <= 32).
bool verify_drawing_exact(const Drawing3D& d);

}  // namespace treemorph
