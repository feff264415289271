#include <algorithm>
#include <array>

#include "cgacol/kernels.hpp"

#if defined(__x86_64__) && (defined(__GNUC__) || defined(__clang__))
#include <immintrin.h>

#define CGACOL_AVX2 __attribute__((target("avx2")))

namespace cgacol::kernels::avx2 {

namespace {

constexpr std::size_t kLanes = 4;

struct V3 {
  __m256d x, y, z;
};

// Pointers to one block of four segments.
struct Block {
  const double *sx, *sy, *sz, *ex, *ey, *ez;
};

CGACOL_AVX2 inline V3 broadcast(const EuclideanPoint& p) {
  return {_mm256_set1_pd(p.x), _mm256_set1_pd(p.y), _mm256_set1_pd(p.z)};
}

CGACOL_AVX2 inline V3 sub(const V3& a, const V3& b) {
  return {_mm256_sub_pd(a.x, b.x), _mm256_sub_pd(a.y, b.y), _mm256_sub_pd(a.z, b.z)};
}

// base + t * dir, rounded the same way as the scalar expression.
CGACOL_AVX2 inline V3 along_dir(const V3& base, __m256d t, const V3& dir) {
  return {_mm256_add_pd(base.x, _mm256_mul_pd(t, dir.x)),
          _mm256_add_pd(base.y, _mm256_mul_pd(t, dir.y)),
          _mm256_add_pd(base.z, _mm256_mul_pd(t, dir.z))};
}

CGACOL_AVX2 inline __m256d dot(const V3& a, const V3& b) {
  const __m256d xy = _mm256_add_pd(_mm256_mul_pd(a.x, b.x), _mm256_mul_pd(a.y, b.y));
  return _mm256_add_pd(xy, _mm256_mul_pd(a.z, b.z));
}

// mask ? b : a
CGACOL_AVX2 inline V3 select(const V3& a, const V3& b, __m256d mask) {
  return {_mm256_blendv_pd(a.x, b.x, mask), _mm256_blendv_pd(a.y, b.y, mask),
          _mm256_blendv_pd(a.z, b.z, mask)};
}

CGACOL_AVX2 inline __m256d abs_pd(__m256d v) {
  return _mm256_andnot_pd(_mm256_set1_pd(-0.0), v);
}

// Clamped projection of p onto [sc, ec]; same branch order as center_dist_fb.
CGACOL_AVX2 inline __m256d point_segment(const V3& p, const V3& sc, const V3& ec, const V3& dir,
                                         __m256d len2, __m256d degenerate) {
  const __m256d zero = _mm256_setzero_pd();
  const __m256d along = dot(sub(p, sc), dir);
  const __m256d t = _mm256_div_pd(along, len2);
  const __m256d at_start = _mm256_or_pd(degenerate, _mm256_cmp_pd(along, zero, _CMP_LE_OQ));
  const __m256d at_end = _mm256_cmp_pd(len2, along, _CMP_LE_OQ);
  V3 q = along_dir(sc, t, dir);
  q = select(q, ec, at_end);
  q = select(q, sc, at_start);
  const V3 diff = sub(p, q);
  return dot(diff, diff);
}

CGACOL_AVX2 inline V3 load(const double* x, const double* y, const double* z) {
  return {_mm256_loadu_pd(x), _mm256_loadu_pd(y), _mm256_loadu_pd(z)};
}

CGACOL_AVX2 __m256d point_block(const V3& p, const Block& b) {
  const V3 sc = load(b.sx, b.sy, b.sz);
  const V3 ec = load(b.ex, b.ey, b.ez);
  const V3 dir = sub(ec, sc);
  const __m256d len2 = dot(dir, dir);
  const __m256d degenerate =
      _mm256_cmp_pd(len2, _mm256_set1_pd(kDegenerateLength2), _CMP_LT_OQ);
  return point_segment(p, sc, ec, dir, len2, degenerate);
}

struct Fixed {
  V3 sa, ea, u;
  __m256d aa;
  __m256d degenerate;
};

CGACOL_AVX2 __m256d segment_block(const Fixed& A, const Block& blk) {
  const V3 sb = load(blk.sx, blk.sy, blk.sz);
  const V3 eb = load(blk.ex, blk.ey, blk.ez);
  const V3 v = sub(eb, sb);
  const V3 w = sub(A.sa, sb);
  const __m256d zero = _mm256_setzero_pd();
  const __m256d one = _mm256_set1_pd(1.0);

  const __m256d cc = dot(v, v);
  const __m256d deg_b = _mm256_cmp_pd(cc, _mm256_set1_pd(kDegenerateLength2), _CMP_LT_OQ);
  const __m256d bb = _mm256_sub_pd(zero, dot(A.u, v));
  const __m256d dd = dot(A.u, w);
  const __m256d ee = _mm256_sub_pd(zero, dot(v, w));

  // Interior stationary point.
  const __m256d ac = _mm256_mul_pd(A.aa, cc);
  const __m256d det = _mm256_sub_pd(ac, _mm256_mul_pd(bb, bb));
  const __m256d parallel = _mm256_cmp_pd(
      abs_pd(det), _mm256_mul_pd(_mm256_set1_pd(1e-10), _mm256_max_pd(ac, one)), _CMP_LE_OQ);
  const __m256d inv = _mm256_div_pd(one, det);
  const __m256d s1k =
      _mm256_mul_pd(_mm256_sub_pd(_mm256_mul_pd(bb, ee), _mm256_mul_pd(cc, dd)), inv);
  const __m256d s2k =
      _mm256_mul_pd(_mm256_sub_pd(_mm256_mul_pd(bb, dd), _mm256_mul_pd(A.aa, ee)), inv);
  __m256d inside = _mm256_and_pd(_mm256_cmp_pd(s1k, zero, _CMP_GE_OQ),
                                 _mm256_cmp_pd(s1k, one, _CMP_LE_OQ));
  inside = _mm256_and_pd(inside, _mm256_cmp_pd(s2k, zero, _CMP_GE_OQ));
  inside = _mm256_and_pd(inside, _mm256_cmp_pd(s2k, one, _CMP_LE_OQ));
  inside = _mm256_andnot_pd(parallel, inside);
  const V3 q1 = along_dir(A.sa, s1k, A.u);
  const V3 q2 = along_dir(sb, s2k, v);
  const V3 gap = sub(q1, q2);
  const __m256d interior = dot(gap, gap);

  // Edge restrictions s1 = 0, s1 = 1, s2 = 0, s2 = 1.
  const __m256d n1 = point_segment(A.sa, sb, eb, v, cc, deg_b);
  const __m256d n2 = point_segment(A.ea, sb, eb, v, cc, deg_b);
  const __m256d n3 = point_segment(sb, A.sa, A.ea, A.u, A.aa, A.degenerate);
  const __m256d n4 = point_segment(eb, A.sa, A.ea, A.u, A.aa, A.degenerate);
  const __m256d edges = _mm256_min_pd(_mm256_min_pd(n1, n2), _mm256_min_pd(n3, n4));

  __m256d result = _mm256_blendv_pd(edges, interior, inside);
  result = _mm256_blendv_pd(result, n3, deg_b);
  result = _mm256_blendv_pd(result, n1, A.degenerate);
  return result;
}

// Runs `body(block)` over full blocks and a zero-padded tail.
template <typename Body>
CGACOL_AVX2 void for_each_block(const SegmentBatch& segs, std::span<double> out, Body body) {
  const std::size_t n = segs.size();
  std::size_t i = 0;
  for (; i + kLanes <= n; i += kLanes) {
    const Block blk{segs.sx.data() + i, segs.sy.data() + i, segs.sz.data() + i,
                    segs.ex.data() + i, segs.ey.data() + i, segs.ez.data() + i};
    _mm256_storeu_pd(out.data() + i, body(blk));
  }
  if (i == n) return;

  std::array<std::array<double, kLanes>, 6> pad{};
  const std::array<const std::vector<double>*, 6> cols{&segs.sx, &segs.sy, &segs.sz,
                                                       &segs.ex, &segs.ey, &segs.ez};
  const std::size_t rest = n - i;
  for (std::size_t c = 0; c < cols.size(); ++c) {
    std::copy_n(cols[c]->data() + i, rest, pad[c].data());
  }
  const Block blk{pad[0].data(), pad[1].data(), pad[2].data(),
                  pad[3].data(), pad[4].data(), pad[5].data()};
  alignas(32) std::array<double, kLanes> tmp{};
  _mm256_store_pd(tmp.data(), body(blk));
  std::copy_n(tmp.data(), rest, out.data() + i);
}

}  // namespace

CGACOL_AVX2 void point_segment_dist2(const EuclideanPoint& p, const SegmentBatch& segs,
                                     std::span<double> out) {
  const V3 pv = broadcast(p);
  for_each_block(segs, out, [&](const Block& blk) CGACOL_AVX2 { return point_block(pv, blk); });
}

CGACOL_AVX2 void segment_segment_dist2(const Segment& seg, const SegmentBatch& segs,
                                       std::span<double> out) {
  Fixed A;
  A.sa = broadcast(seg.start);
  A.ea = broadcast(seg.end);
  A.u = sub(A.ea, A.sa);
  A.aa = dot(A.u, A.u);
  A.degenerate = _mm256_cmp_pd(A.aa, _mm256_set1_pd(kDegenerateLength2), _CMP_LT_OQ);
  for_each_block(segs, out,
                 [&](const Block& blk) CGACOL_AVX2 { return segment_block(A, blk); });
}

}  // namespace cgacol::kernels::avx2

#else

namespace cgacol::kernels::avx2 {

void point_segment_dist2(const EuclideanPoint& p, const SegmentBatch& segs,
                         std::span<double> out) {
  scalar::point_segment_dist2(p, segs, out);
}

void segment_segment_dist2(const Segment& seg, const SegmentBatch& segs, std::span<double> out) {
  scalar::segment_segment_dist2(seg, segs, out);
}

}  // namespace cgacol::kernels::avx2

#endif
