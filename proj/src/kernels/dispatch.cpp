#include <atomic>
#include <cassert>

#include "cgacol/kernels.hpp"

namespace cgacol::kernels {

namespace {
std::atomic<bool> g_force_scalar{false};
}  // namespace

void SegmentBatch::reserve(std::size_t n) {
  for (auto* v : {&sx, &sy, &sz, &ex, &ey, &ez}) v->reserve(n);
}

void SegmentBatch::push_back(const Segment& s) {
  sx.push_back(s.start.x);
  sy.push_back(s.start.y);
  sz.push_back(s.start.z);
  ex.push_back(s.end.x);
  ey.push_back(s.end.y);
  ez.push_back(s.end.z);
}

Segment SegmentBatch::at(std::size_t i) const {
  return Segment{{sx[i], sy[i], sz[i]}, {ex[i], ey[i], ez[i]}};
}

std::string_view isa_name(Isa isa) {
  switch (isa) {
    case Isa::Scalar:
      return "scalar";
    case Isa::Avx2:
      return "avx2";
  }
  return "unknown";
}

bool avx2_supported() {
#if defined(__x86_64__) && (defined(__GNUC__) || defined(__clang__))
  static const bool supported = __builtin_cpu_supports("avx2");
  return supported;
#else
  return false;
#endif
}

void set_force_scalar(bool force) { g_force_scalar.store(force, std::memory_order_relaxed); }

Isa active_isa() {
  if (g_force_scalar.load(std::memory_order_relaxed)) return Isa::Scalar;
  return avx2_supported() ? Isa::Avx2 : Isa::Scalar;
}

void point_segment_dist2(const EuclideanPoint& p, const SegmentBatch& segs,
                         std::span<double> out) {
  assert(out.size() >= segs.size());
  if (active_isa() == Isa::Avx2) {
    avx2::point_segment_dist2(p, segs, out);
  } else {
    scalar::point_segment_dist2(p, segs, out);
  }
}

void segment_segment_dist2(const Segment& seg, const SegmentBatch& segs, std::span<double> out) {
  assert(out.size() >= segs.size());
  if (active_isa() == Isa::Avx2) {
    avx2::segment_segment_dist2(seg, segs, out);
  } else {
    scalar::segment_segment_dist2(seg, segs, out);
  }
}

}  // namespace cgacol::kernels
