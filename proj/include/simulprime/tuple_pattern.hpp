#pragma once

// Offset patterns describing which numbers around a base p are claimed prime,
// e.g. [0,2] for twin pairs or [0,2,6,8] for quadruplets.

#include <string>
#include <vector>

#include "simulprime/numkernel.hpp"

namespace simulprime {

class TuplePattern {
 public:
  // Empty pattern only as a placeholder; every real pattern comes from the
  // validating constructor or parse().
  TuplePattern() = default;

  // Offsets must be nonempty, strictly increasing, and start at or below 0 so
  // the base is one of the tuple members.
  explicit TuplePattern(std::vector<Int> offsets);

  // Accepts comma-separated integers, e.g. "0,2,6,8" or "-2,0,4".
  static TuplePattern parse(const std::string& text);

  const std::vector<Int>& offsets() const { return offsets_; }
  std::size_t size() const { return offsets_.size(); }
  bool empty() const { return offsets_.empty(); }

  // base + offset for each offset.  Values may fall below 2 for tiny bases;
  // use targets_valid_at to gate.
  std::vector<Int> targets_at(const Natural& base) const;
  bool targets_valid_at(const Natural& base) const;

  std::string to_string() const;

  friend bool operator==(const TuplePattern& a, const TuplePattern& b) {
    return a.offsets_ == b.offsets_;
  }

 private:
  std::vector<Int> offsets_;
};

}  // namespace simulprime
