#include "simulprime/tuple_pattern.hpp"

#include <sstream>

namespace simulprime {

TuplePattern::TuplePattern(std::vector<Int> offsets)
    : offsets_(std::move(offsets)) {
  if (offsets_.empty()) {
    throw DomainError("pattern needs at least one offset");
  }
  for (std::size_t i = 1; i < offsets_.size(); ++i) {
    if (offsets_[i - 1] >= offsets_[i]) {
      throw DomainError("pattern offsets must be strictly increasing");
    }
  }
  if (sgn(offsets_.front()) > 0) {
    throw DomainError("pattern must contain an offset <= 0");
  }
}

TuplePattern TuplePattern::parse(const std::string& text) {
  std::vector<Int> offsets;
  std::stringstream in(text);
  std::string piece;
  while (std::getline(in, piece, ',')) {
    // trim whitespace so "0, 2, 6, 8" parses too
    const auto first = piece.find_first_not_of(" \t");
    const auto last = piece.find_last_not_of(" \t");
    if (first == std::string::npos) {
      throw DomainError("pattern has an empty offset in '" + text + "'");
    }
    piece = piece.substr(first, last - first + 1);
    Int value;
    if (value.set_str(piece, 10) != 0) {
      throw DomainError("pattern offset '" + piece + "' is not an integer");
    }
    offsets.push_back(std::move(value));
  }
  return TuplePattern(std::move(offsets));
}

std::vector<Int> TuplePattern::targets_at(const Natural& base) const {
  std::vector<Int> out;
  out.reserve(offsets_.size());
  for (const Int& off : offsets_) {
    out.push_back(base + off);
  }
  return out;
}

bool TuplePattern::targets_valid_at(const Natural& base) const {
  // smallest target is the first offset
  return !offsets_.empty() && base + offsets_.front() >= 2;
}

std::string TuplePattern::to_string() const {
  std::string out;
  for (std::size_t i = 0; i < offsets_.size(); ++i) {
    if (i != 0) {
      out += ',';
    }
    out += offsets_[i].get_str();
  }
  return out;
}

}  // namespace simulprime
