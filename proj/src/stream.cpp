#include "dynsubmax/stream.hpp"

#include <fstream>
#include <istream>
#include <ostream>
#include <set>
#include <sstream>
#include <stdexcept>

#include "dynsubmax/rng.hpp"

namespace dynsubmax {
namespace {

[[noreturn]] void parse_fail(std::size_t line_no, const std::string& what) {
  throw std::invalid_argument("stream line " + std::to_string(line_no) + ": " + what);
}

}  // namespace

std::vector<StreamEvent> parse_stream(std::istream& in) {
  std::vector<StreamEvent> events;
  std::set<ElementId> alive;
  std::string line;
  std::size_t line_no = 0;
  while (std::getline(in, line)) {
    ++line_no;
    if (!line.empty() && line.back() == '\r') line.pop_back();
    std::size_t start = line.find_first_not_of(" \t");
    if (start == std::string::npos || line[start] == '#') continue;
    const char op = line[start];
    if (op != '+' && op != '-') parse_fail(line_no, "expected '+' or '-'");
    std::istringstream rest(line.substr(start + 1));
    long long id = -1;
    rest >> id;
    std::string trailing;
    if (!rest || (rest >> trailing && !trailing.empty() && trailing[0] != '#')) {
      parse_fail(line_no, "malformed event, want '+ <id>' or '- <id>'");
    }
    if (id < 0) parse_fail(line_no, "element ids must be nonnegative");
    const auto eid = static_cast<ElementId>(id);
    if (op == '+') {
      if (!alive.insert(eid).second) {
        parse_fail(line_no, "insert of element " + std::to_string(eid) +
                                ", which is already alive");
      }
      events.push_back({StreamEvent::Op::Insert, eid});
    } else {
      if (alive.erase(eid) == 0) {
        parse_fail(line_no,
                   "delete of element " + std::to_string(eid) + ", which is not alive");
      }
      events.push_back({StreamEvent::Op::Delete, eid});
    }
  }
  return events;
}

std::vector<StreamEvent> parse_stream_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw std::runtime_error("cannot open stream file " + path);
  return parse_stream(in);
}

void write_stream(std::ostream& out, const std::vector<StreamEvent>& events) {
  for (const auto& e : events) {
    out << (e.op == StreamEvent::Op::Insert ? '+' : '-') << ' ' << e.id << '\n';
  }
}

std::vector<StreamEvent> generate_stream(const StreamSpec& spec) {
  if (spec.n <= 0 || spec.ops < 0) {
    throw std::invalid_argument("stream spec: n must be positive, ops nonnegative");
  }
  std::vector<StreamEvent> events;
  events.reserve(static_cast<std::size_t>(spec.ops));
  Rng rng(spec.seed);
  switch (spec.kind) {
    case StreamKind::InsertOnly: {
      if (spec.ops > spec.n) {
        throw std::invalid_argument("insert_only: ops exceeds the ground-set size");
      }
      for (int t = 1; t <= spec.ops; ++t) {
        events.push_back({StreamEvent::Op::Insert, t});
      }
      break;
    }
    case StreamKind::SlidingWindow: {
      if (spec.window <= 0) {
        throw std::invalid_argument("sliding_window: window must be positive");
      }
      int next_id = 1;
      int oldest = 1;
      int alive = 0;
      for (int t = 0; t < spec.ops; ++t) {
        if (alive == spec.window) {
          events.push_back({StreamEvent::Op::Delete, oldest++});
          --alive;
        } else {
          events.push_back({StreamEvent::Op::Insert, next_id++});
          ++alive;
        }
      }
      break;
    }
    case StreamKind::RandomMix: {
      if (!(spec.p_delete >= 0.0 && spec.p_delete < 1.0)) {
        throw std::invalid_argument("random_mix: p_delete must lie in [0, 1)");
      }
      RandomSet alive;
      RandomSet dead;
      for (int id = 1; id <= spec.n; ++id) dead.insert(id);
      for (int t = 0; t < spec.ops; ++t) {
        const double coin =
            static_cast<double>(uniform_below(rng, 1u << 30)) / (1u << 30);
        const bool want_delete = coin < spec.p_delete;
        if ((want_delete && !alive.empty()) || dead.empty()) {
          const ElementId id = alive.sample(rng);
          alive.erase(id);
          dead.insert(id);
          events.push_back({StreamEvent::Op::Delete, id});
        } else {
          const ElementId id = dead.sample(rng);
          dead.erase(id);
          alive.insert(id);
          events.push_back({StreamEvent::Op::Insert, id});
        }
      }
      break;
    }
  }
  return events;
}

StreamSpec parse_stream_spec(const std::string& text) {
  const std::size_t colon = text.find(':');
  const std::string kind = text.substr(0, colon);
  StreamSpec spec;
  if (kind == "insert_only") {
    spec.kind = StreamKind::InsertOnly;
  } else if (kind == "sliding_window") {
    spec.kind = StreamKind::SlidingWindow;
  } else if (kind == "random_mix") {
    spec.kind = StreamKind::RandomMix;
  } else {
    throw std::invalid_argument("stream spec: unknown kind '" + kind + "'");
  }
  if (colon == std::string::npos) return spec;
  std::istringstream params(text.substr(colon + 1));
  std::string item;
  while (std::getline(params, item, ',')) {
    const std::size_t eq = item.find('=');
    if (eq == std::string::npos) {
      throw std::invalid_argument("stream spec: expected key=value, got '" + item + "'");
    }
    const std::string key = item.substr(0, eq);
    const std::string value = item.substr(eq + 1);
    if (key == "n") {
      spec.n = std::stoi(value);
    } else if (key == "ops") {
      spec.ops = std::stoi(value);
    } else if (key == "w") {
      spec.window = std::stoi(value);
    } else if (key == "p") {
      spec.p_delete = std::stod(value);
    } else if (key == "seed") {
      spec.seed = std::stoull(value);
    } else {
      throw std::invalid_argument("stream spec: unknown key '" + key + "'");
    }
  }
  return spec;
}

}  // namespace dynsubmax
