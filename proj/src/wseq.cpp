#include <wtensor/wseq.hpp>

namespace wtensor {

WSeq<RingPoly> seq_ones(size_t n) { return WSeq<RingPoly>::constant(n, RingPoly(1)); }

WSeq<RingPoly> seq_zeros(size_t n) { return WSeq<RingPoly>::constant(n, RingPoly(0)); }

WSeq<RingPoly> seq_unit(size_t n) {
  std::vector<RingPoly> e(n);
  if (n > 0) e[0] = RingPoly(1);
  return WSeq<RingPoly>(std::move(e));
}

WSeq<RingPoly> seq_squares(size_t n) {
  std::vector<RingPoly> e(n);
  for (size_t i = 0; i < n; ++i) e[i] = RingPoly(static_cast<long>(i * i));
  return WSeq<RingPoly>(std::move(e));
}

WSeq<RingPoly> seq_iota(size_t n) {
  std::vector<RingPoly> e(n);
  for (size_t i = 0; i < n; ++i) e[i] = RingPoly(static_cast<long>(i));
  return WSeq<RingPoly>(std::move(e));
}

}  // namespace wtensor
