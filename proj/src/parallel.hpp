#pragma once

// Internal helper: split an inclusive base range into contiguous chunks, one
// per worker, sized within one of each other.  Chunk order preserves base
// order, which is what makes scan/verify output independent of job count.

#include <vector>

#include "simulprime/numkernel.hpp"

namespace simulprime::detail {

struct Chunk {
  Natural lo;
  Natural hi;  // inclusive
};

inline std::vector<Chunk> partition_range(const Natural& lo, const Natural& hi,
                                          unsigned jobs) {
  std::vector<Chunk> chunks;
  if (hi < lo) {
    return chunks;
  }
  const Natural count = hi - lo + 1;
  Natural workers = jobs == 0 ? 1 : jobs;
  if (count < workers) {
    workers = count;
  }
  const Natural size = count / workers;
  const Natural rem = count % workers;
  Natural cursor = lo;
  for (Natural i = 0; i < workers; ++i) {
    const Natural extent = size + (i < rem ? 1 : 0);
    chunks.push_back(Chunk{cursor, cursor + extent - 1});
    cursor += extent;
  }
  return chunks;
}

}  // namespace simulprime::detail
