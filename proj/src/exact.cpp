#include "treemorph/exact.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>

namespace treemorph {

namespace {

void trim(std::vector<uint32_t>& v) {
  while (!v.empty() && v.back() == 0) v.pop_back();
}

int compare_mag(const std::vector<uint32_t>& a, const std::vector<uint32_t>& b) {
  if (a.size() != b.size()) return a.size() < b.size() ? -1 : 1;
  for (size_t i = a.size(); i-- > 0;)
    if (a[i] != b[i]) return a[i] < b[i] ? -1 : 1;
  return 0;
}

std::vector<uint32_t> add_mag(const std::vector<uint32_t>& a, const std::vector<uint32_t>& b) {
  std::vector<uint32_t> r(std::max(a.size(), b.size()) + 1, 0);
  uint64_t carry = 0;
  for (size_t i = 0; i < r.size(); ++i) {
    uint64_t s = carry;
    if (i < a.size()) s += a[i];
    if (i < b.size()) s += b[i];
    r[i] = static_cast<uint32_t>(s);
    carry = s >> 32;
  }
  trim(r);
  return r;
}

// a - b, requires a >= b.
std::vector<uint32_t> sub_mag(const std::vector<uint32_t>& a, const std::vector<uint32_t>& b) {
  std::vector<uint32_t> r(a.size(), 0);
  int64_t borrow = 0;
  for (size_t i = 0; i < a.size(); ++i) {
    int64_t s = static_cast<int64_t>(a[i]) - borrow - (i < b.size() ? b[i] : 0);
    if (s < 0) {
      s += (1LL << 32);
      borrow = 1;
    } else {
      borrow = 0;
    }
    r[i] = static_cast<uint32_t>(s);
  }
  trim(r);
  return r;
}

std::vector<uint32_t> mul_mag(const std::vector<uint32_t>& a, const std::vector<uint32_t>& b) {
  if (a.empty() || b.empty()) return {};
  std::vector<uint32_t> r(a.size() + b.size(), 0);
  for (size_t i = 0; i < a.size(); ++i) {
    uint64_t carry = 0;
    for (size_t j = 0; j < b.size(); ++j) {
      uint64_t cur = r[i + j] + static_cast<uint64_t>(a[i]) * b[j] + carry;
      r[i + j] = static_cast<uint32_t>(cur);
      carry = cur >> 32;
    }
    size_t k = i + b.size();
    while (carry) {
      uint64_t cur = r[k] + carry;
      r[k] = static_cast<uint32_t>(cur);
      carry = cur >> 32;
      ++k;
    }
  }
  trim(r);
  return r;
}

std::vector<uint32_t> shl_mag(std::vector<uint32_t> v, int bits) {
  if (v.empty() || bits == 0) return v;
  int limbs = bits / 32, rem = bits % 32;
  if (rem != 0) {
    uint32_t carry = 0;
    for (size_t i = 0; i < v.size(); ++i) {
      uint64_t cur = (static_cast<uint64_t>(v[i]) << rem) | carry;
      v[i] = static_cast<uint32_t>(cur);
      carry = static_cast<uint32_t>(cur >> 32);
    }
    if (carry) v.push_back(carry);
  }
  v.insert(v.begin(), limbs, 0);
  return v;
}

}  // namespace

BigInt BigInt::from_int64(long long v) {
  BigInt r;
  if (v == 0) return r;
  r.sign = v > 0 ? 1 : -1;
  unsigned long long m = v > 0 ? static_cast<unsigned long long>(v)
                               : ~static_cast<unsigned long long>(v) + 1ULL;
  while (m) {
    r.mag.push_back(static_cast<uint32_t>(m));
    m >>= 32;
  }
  return r;
}

BigInt BigInt::from_scaled_double(double v, int shift) {
  if (v == 0.0) return BigInt{};
  if (!std::isfinite(v)) throw std::invalid_argument("BigInt: non-finite input");
  int e;
  double f = std::frexp(v, &e);            // v = f * 2^e, |f| in [0.5, 1)
  long long m = std::llround(f * 9007199254740992.0);  // f * 2^53, exact
  int exp2 = e - 53 + shift;
  if (exp2 < 0) throw std::invalid_argument("BigInt: shift too small for exact scaling");
  BigInt r = from_int64(m);
  r.mag = shl_mag(std::move(r.mag), exp2);
  return r;
}

BigInt BigInt::negated() const {
  BigInt r = *this;
  r.sign = -r.sign;
  return r;
}

BigInt operator+(const BigInt& a, const BigInt& b) {
  if (a.sign == 0) return b;
  if (b.sign == 0) return a;
  BigInt r;
  if (a.sign == b.sign) {
    r.sign = a.sign;
    r.mag = add_mag(a.mag, b.mag);
  } else {
    int c = compare_mag(a.mag, b.mag);
    if (c == 0) return BigInt{};
    if (c > 0) {
      r.sign = a.sign;
      r.mag = sub_mag(a.mag, b.mag);
    } else {
      r.sign = b.sign;
      r.mag = sub_mag(b.mag, a.mag);
    }
  }
  return r;
}

BigInt operator-(const BigInt& a, const BigInt& b) { return a + b.negated(); }

BigInt operator*(const BigInt& a, const BigInt& b) {
  BigInt r;
  if (a.sign == 0 || b.sign == 0) return r;
  r.sign = a.sign * b.sign;
  r.mag = mul_mag(a.mag, b.mag);
  return r;
}

int compare(const BigInt& a, const BigInt& b) {
  if (a.sign != b.sign) return a.sign < b.sign ? -1 : 1;
  if (a.sign == 0) return 0;
  int c = compare_mag(a.mag, b.mag);
  return a.sign > 0 ? c : -c;
}

BigVec3 sub(const BigVec3& a, const BigVec3& b) { return {a.x - b.x, a.y - b.y, a.z - b.z}; }

BigVec3 cross(const BigVec3& a, const BigVec3& b) {
  return {a.y * b.z - a.z * b.y, a.z * b.x - a.x * b.z, a.x * b.y - a.y * b.x};
}

BigInt dot(const BigVec3& a, const BigVec3& b) { return a.x * b.x + a.y * b.y + a.z * b.z; }

std::vector<BigVec3> to_exact_grid(std::span<const Vec3> points) {
  int min_e = 0;
  bool any = false;
  auto consider = [&](double v) {
    if (v == 0.0) return;
    int e;
    std::frexp(v, &e);
    int unit = e - 53;
    if (!any || unit < min_e) min_e = unit;
    any = true;
  };
  for (const Vec3& p : points) {
    consider(p.x);
    consider(p.y);
    consider(p.z);
  }
  int shift = any ? -min_e : 0;
  std::vector<BigVec3> out;
  out.reserve(points.size());
  for (const Vec3& p : points)
    out.push_back({BigInt::from_scaled_double(p.x, shift), BigInt::from_scaled_double(p.y, shift),
                   BigInt::from_scaled_double(p.z, shift)});
  return out;
}

namespace {

const BigInt kZero{};

bool big_equal_zero(const BigInt& v) { return v.is_zero(); }

bool open_intersect_grid(const BigVec3& p1, const BigVec3& q1, const BigVec3& p2,
                         const BigVec3& q2) {
  BigVec3 d1 = sub(q1, p1);
  BigVec3 d2 = sub(q2, p2);
  BigVec3 r = sub(p2, p1);
  BigVec3 n = cross(d1, d2);
  BigInt triple = dot(r, n);
  if (!big_equal_zero(triple)) return false;  // skew

  if (!big_equal_zero(n.x) || !big_equal_zero(n.y) || !big_equal_zero(n.z)) {
    // Coplanar, non-parallel: p1 + (s_num/den) d1 = p2 + (t_num/den) d2.
    BigInt den = dot(n, n);
    BigInt s_num = dot(cross(r, d2), n);
    BigInt t_num = dot(cross(r, d1), n);
    return compare(s_num, kZero) > 0 && compare(s_num, den) < 0 && compare(t_num, kZero) > 0 &&
           compare(t_num, den) < 0;
  }

  // Parallel; collinear iff r x d1 == 0.
  BigVec3 c = cross(r, d1);
  if (!big_equal_zero(c.x) || !big_equal_zero(c.y) || !big_equal_zero(c.z)) return false;
  BigInt len2 = dot(d1, d1);
  if (big_equal_zero(len2)) return false;
  BigInt t0 = dot(r, d1);
  BigInt t1 = t0 + dot(d2, d1);
  BigInt lo = compare(t0, t1) <= 0 ? t0 : t1;
  BigInt hi = compare(t0, t1) <= 0 ? t1 : t0;
  if (compare(lo, kZero) < 0) lo = kZero;
  if (compare(hi, len2) > 0) hi = len2;
  return compare(lo, hi) < 0;
}

}  // namespace

bool open_segments_intersect_exact(const Vec3& a1, const Vec3& b1, const Vec3& a2,
                                   const Vec3& b2) {
  Vec3 pts[4] = {a1, b1, a2, b2};
  auto g = to_exact_grid(std::span<const Vec3>(pts, 4));
  return open_intersect_grid(g[0], g[1], g[2], g[3]);
}

bool verify_drawing_exact(const Drawing3D& d) {
  const RootedTree& tree = *d.tree;
  int n = d.n();
  auto grid = to_exact_grid(d.position);

  for (int i = 0; i < n; ++i)
    for (int j = i + 1; j < n; ++j)
      if (big_equal_zero(grid[i].x - grid[j].x) && big_equal_zero(grid[i].y - grid[j].y) &&
          big_equal_zero(grid[i].z - grid[j].z))
        return false;  // coincident vertices

  auto edges = tree.edges();
  int m = static_cast<int>(edges.size());
  for (int i = 0; i < m; ++i) {
    for (int j = i + 1; j < m; ++j) {
      auto [c1, p1] = edges[i];
      auto [c2, p2] = edges[j];
      int shared = -1, w1 = -1, w2 = -1;
      if (c1 == c2 || c1 == p2) shared = c1;
      else if (p1 == c2 || p1 == p2) shared = p1;
      if (shared == -1) {
        if (open_intersect_grid(grid[c1], grid[p1], grid[c2], grid[p2])) return false;
      } else {
        w1 = c1 == shared ? p1 : c1;
        w2 = c2 == shared ? p2 : c2;
        // Adjacent edges cross only when the arms overlap collinearly beyond
        // the shared endpoint.
        BigVec3 u1 = sub(grid[w1], grid[shared]);
        BigVec3 u2 = sub(grid[w2], grid[shared]);
        BigVec3 c = cross(u1, u2);
        if (big_equal_zero(c.x) && big_equal_zero(c.y) && big_equal_zero(c.z) &&
            compare(dot(u1, u2), kZero) > 0)
          return false;
      }
    }
  }
  return true;
}

}  // namespace treemorph
