#pragma once

// Batched center-distance kernels over structure-of-arrays segment batches.
//
// `scalar::` is the reference: a loop over center_dist_fb / center_dist_fc.
// `avx2::` evaluates four pairs per step with a branch-free candidate
// formulation (interior stationary point, else the four clamped edge
// projections). The dispatching entry points pick AVX2 when the CPU reports
// it at runtime, unless scalar execution is forced.

#include <cstddef>
#include <span>
#include <string_view>
#include <vector>

#include "cgacol/point.hpp"
#include "cgacol/primitives.hpp"

namespace cgacol::kernels {

/// Segments stored coordinate-by-coordinate. A ball center is stored as a
/// segment with coincident endpoints.
struct SegmentBatch {
  std::vector<double> sx, sy, sz;
  std::vector<double> ex, ey, ez;

  std::size_t size() const { return sx.size(); }
  void reserve(std::size_t n);
  void push_back(const Segment& s);
  void push_back(const EuclideanPoint& p) { push_back(Segment{p, p}); }
  Segment at(std::size_t i) const;
};

enum class Isa { Scalar, Avx2 };

std::string_view isa_name(Isa isa);

/// True when the running CPU supports the AVX2 kernels.
bool avx2_supported();

/// Force the dispatcher onto the scalar path (for testing and benchmarks).
void set_force_scalar(bool force);

/// ISA the dispatcher currently selects.
Isa active_isa();

namespace scalar {
void point_segment_dist2(const EuclideanPoint& p, const SegmentBatch& segs,
                         std::span<double> out);
void segment_segment_dist2(const Segment& seg, const SegmentBatch& segs, std::span<double> out);
}  // namespace scalar

namespace avx2 {
// Precondition: avx2_supported().
void point_segment_dist2(const EuclideanPoint& p, const SegmentBatch& segs,
                         std::span<double> out);
void segment_segment_dist2(const Segment& seg, const SegmentBatch& segs, std::span<double> out);
}  // namespace avx2

/// out[i] = squared center distance from p to segs[i]. out.size() >= segs.size().
void point_segment_dist2(const EuclideanPoint& p, const SegmentBatch& segs,
                         std::span<double> out);

/// out[i] = squared center distance between seg and segs[i].
void segment_segment_dist2(const Segment& seg, const SegmentBatch& segs, std::span<double> out);

}  // namespace cgacol::kernels
