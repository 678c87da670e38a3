#pragma once

#include <cstdint>
#include <iosfwd>
#include <string>
#include <vector>

#include "dynsubmax/elements.hpp"

namespace dynsubmax {

struct StreamEvent {
  enum class Op { Insert, Delete };
  Op op = Op::Insert;
  ElementId id = 0;

  friend bool operator==(const StreamEvent&, const StreamEvent&) = default;
};

// Text format: one event per line, "+ <id>" or "- <id>"; blank lines and
// lines starting with '#' are ignored; CRLF line endings are accepted.
// Validates that every delete targets an alive element and every insert a
// dead one; errors carry the 1-based line number.
std::vector<StreamEvent> parse_stream(std::istream& in);
std::vector<StreamEvent> parse_stream_file(const std::string& path);

void write_stream(std::ostream& out, const std::vector<StreamEvent>& events);

enum class StreamKind { InsertOnly, SlidingWindow, RandomMix };

struct StreamSpec {
  StreamKind kind = StreamKind::InsertOnly;
  int n = 0;           // ground-set size (ids drawn from it)
  int ops = 0;         // number of events to emit
  int window = 0;      // sliding window width
  double p_delete = 0.0;  // random mix delete probability, in [0, 1)
  std::uint64_t seed = 0;
};

// Reproducible event list, alive/dead-valid by construction.
//  - insert_only: ids 1..ops (requires ops <= n)
//  - sliding_window(w): inserts ids 1, 2, ...; once w are alive, alternates
//    deleting the oldest with the next insert
//  - random_mix(p): each step deletes a uniform alive id with probability p,
//    otherwise inserts a uniform dead id from [1, n]
std::vector<StreamEvent> generate_stream(const StreamSpec& spec);

// Spec strings like "random_mix:n=100,ops=500,p=0.3,seed=7",
// "sliding_window:n=50,ops=200,w=8,seed=1", "insert_only:n=5,ops=5".
StreamSpec parse_stream_spec(const std::string& text);

}  // namespace dynsubmax
