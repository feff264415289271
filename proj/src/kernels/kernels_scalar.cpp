#include "cgacol/distance.hpp"
#include "cgacol/kernels.hpp"

namespace cgacol::kernels::scalar {

void point_segment_dist2(const EuclideanPoint& p, const SegmentBatch& segs,
                         std::span<double> out) {
  for (std::size_t i = 0; i < segs.size(); ++i) {
    out[i] = center_dist_fb(p, segs.at(i)).squared_distance.value;
  }
}

void segment_segment_dist2(const Segment& seg, const SegmentBatch& segs, std::span<double> out) {
  for (std::size_t i = 0; i < segs.size(); ++i) {
    out[i] = center_dist_fc(seg, segs.at(i)).squared_distance.value;
  }
}

}  // namespace cgacol::kernels::scalar
