#include "bcgroup/trace.hpp"

#include <istream>
#include <limits>
#include <random>
#include <sstream>

namespace bcgroup {

namespace {

std::string where(const SwitchEvent& e) {
  return "event (epoch " + std::to_string(e.epoch) + ", seq " + std::to_string(e.seq) + ")";
}

void check_ranges(const GroupParams& params, const SwitchEvent& e, const std::string& context = {}) {
  if (e.node >= params.node_count()) {
    fail(ErrorKind::InvariantViolation, context + where(e) + ": node " + std::to_string(e.node) + " >= n");
  }
  if (e.from_pool >= params.pool_count() || e.to_pool >= params.pool_count()) {
    fail(ErrorKind::InvariantViolation, context + where(e) + ": pool index >= r");
  }
}

bool before(const SwitchEvent& a, const SwitchEvent& b) {
  return a.epoch < b.epoch || (a.epoch == b.epoch && a.seq < b.seq);
}

Permutation transposition(std::size_t size, Index i, Index j) {
  std::vector<Index> m(size);
  for (std::size_t k = 0; k < size; ++k) m[k] = static_cast<Index>(k);
  std::swap(m[i], m[j]);
  return Permutation(std::move(m));
}

Index small_uint(const Json& j, const char* key) {
  const auto v = require_uint(j, key);
  if (v > std::numeric_limits<Index>::max()) {
    fail(ErrorKind::MalformedInput, std::string("field \"") + key + "\" too large");
  }
  return static_cast<Index>(v);
}

SwitchEvent event_from_json(const Json& j) {
  SwitchEvent e;
  e.epoch = require_uint(j, "epoch");
  e.seq = require_uint(j, "seq");
  e.node = small_uint(j, "node");
  e.from_pool = small_uint(j, "from");
  e.to_pool = small_uint(j, "to");
  return e;
}

Json event_to_json(const SwitchEvent& e) {
  Json out;
  out["epoch"] = e.epoch;
  out["seq"] = e.seq;
  out["node"] = e.node;
  out["from"] = e.from_pool;
  out["to"] = e.to_pool;
  return out;
}

/// Parses one line; any error becomes MalformedLine tagged with the line number.
template <typename F>
auto on_line(std::size_t line_no, F&& parse) {
  try {
    return parse();
  } catch (const Json::exception& e) {
    fail(ErrorKind::MalformedLine, "line " + std::to_string(line_no) + ": " + e.what());
  } catch (const GroupError& e) {
    fail(ErrorKind::MalformedLine, "line " + std::to_string(line_no) + ": " + e.what());
  }
}

}  // namespace

void validate_trace(const Trace& trace) {
  if (!(trace.initial.params() == trace.params)) {
    fail(ErrorKind::InvariantViolation, "initial configuration has different (n, r)");
  }
  std::vector<Index> state = trace.initial.assignment();
  for (std::size_t k = 0; k < trace.events.size(); ++k) {
    const auto& e = trace.events[k];
    const std::string context = "line " + std::to_string(k + 2) + ": ";
    check_ranges(trace.params, e, context);
    if (k > 0 && !before(trace.events[k - 1], e)) {
      fail(ErrorKind::InvariantViolation, context + where(e) + ": (epoch, seq) not strictly increasing");
    }
    if (state[e.node] != e.from_pool) {
      fail(ErrorKind::SourceMismatch, context + where(e) + ": node " + std::to_string(e.node) +
                                          " is in pool " + std::to_string(state[e.node]) + ", not " +
                                          std::to_string(e.from_pool));
    }
    state[e.node] = e.to_pool;
  }
}

Trace parse_trace(std::istream& in) {
  std::string line;
  std::size_t line_no = 1;
  if (!std::getline(in, line)) fail(ErrorKind::MalformedLine, "line 1: missing header");
  auto [params, initial] = on_line(line_no, [&] {
    const auto header = Json::parse(line);
    const auto p = params_from_json(header);
    if (!header.contains("initial")) fail(ErrorKind::MalformedInput, "missing field \"initial\"");
    Json cfg;
    cfg["n"] = p.node_count();
    cfg["r"] = p.pool_count();
    cfg["pools"] = header["initial"];
    return std::pair{p, configuration_from_json(cfg)};
  });

  Trace trace{params, initial, {}};
  while (std::getline(in, line)) {
    ++line_no;
    trace.events.push_back(on_line(line_no, [&] { return event_from_json(Json::parse(line)); }));
  }
  validate_trace(trace);
  return trace;
}

Trace parse_trace(std::string_view text) {
  std::istringstream in{std::string(text)};
  return parse_trace(in);
}

std::string serialize_trace(const Trace& trace) {
  Json header;
  header["n"] = trace.params.node_count();
  header["r"] = trace.params.pool_count();
  header["initial"] = trace.initial.assignment();
  std::string out = header.dump() + "\n";
  for (const auto& e : trace.events) out += event_to_json(e).dump() + "\n";
  return out;
}

std::uint64_t epoch_count(const Trace& trace) {
  return trace.events.empty() ? 1 : trace.events.back().epoch + 1;
}

PoolUpdate fold_epoch(const GroupParams& params, std::span<const SwitchEvent> events) {
  std::vector<PoolPermutation> perms(params.node_count(), Permutation::identity(params.pool_count()));
  for (std::size_t k = 0; k < events.size(); ++k) {
    const auto& e = events[k];
    check_ranges(params, e);
    if (k > 0 && (e.epoch != events[0].epoch || e.seq <= events[k - 1].seq)) {
      fail(ErrorKind::InvariantViolation, where(e) + ": epoch events must share one epoch, sorted by seq");
    }
    if (e.from_pool != e.to_pool) {
      perms[e.node] = perms[e.node].then(transposition(params.pool_count(), e.from_pool, e.to_pool));
    }
  }
  return PoolUpdate(params, std::move(perms));
}

std::vector<PoolUpdate> fold_trace(const Trace& trace, std::uint64_t epochs) {
  if (epochs == 0) epochs = epoch_count(trace);
  std::vector<PoolUpdate> out;
  out.reserve(epochs);
  const std::span<const SwitchEvent> events(trace.events);
  std::size_t begin = 0;
  for (std::uint64_t t = 0; t < epochs; ++t) {
    std::size_t end = begin;
    while (end < events.size() && events[end].epoch == t) ++end;
    out.push_back(fold_epoch(trace.params, events.subspan(begin, end - begin)));
    begin = end;
  }
  if (begin != events.size()) {
    fail(ErrorKind::InvariantViolation, "trace has events beyond epoch " + std::to_string(epochs - 1));
  }
  return out;
}

std::vector<Configuration> evolve(const Trace& trace, std::uint64_t epochs) {
  std::vector<Configuration> out;
  Configuration current = trace.initial;
  for (const auto& u : fold_trace(trace, epochs)) {
    current = apply(u, current);
    out.push_back(current);
  }
  return out;
}

std::vector<Snapshot> cumulative_snapshots(const std::vector<PoolUpdate>& updates) {
  std::vector<Snapshot> out;
  out.reserve(updates.size());
  for (std::size_t t = 0; t < updates.size(); ++t) {
    auto acc = t == 0 ? updates[0] : compose(out.back().cumulative, updates[t]);
    out.push_back({std::move(acc), t});
  }
  return out;
}

std::vector<std::uint64_t> detect_identity_closure(const std::vector<PoolUpdate>& updates) {
  std::vector<std::uint64_t> out;
  for (const auto& s : cumulative_snapshots(updates)) {
    if (is_identity(s.cumulative)) out.push_back(s.cumulative_epoch);
  }
  return out;
}

Trace generate_random_trace(const GroupParams& params, std::uint64_t epochs, double churn,
                            std::uint64_t seed) {
  if (!(churn >= 0.0 && churn <= 1.0)) fail(ErrorKind::InvalidArgument, "churn must be in [0, 1]");
  std::mt19937_64 rng(seed);
  std::uniform_int_distribution<Index> any_pool(0, params.pool_count() - 1);
  std::vector<Index> state(params.node_count());
  for (auto& v : state) v = any_pool(rng);
  Trace trace{params, Configuration(params, state), {}};
  if (params.pool_count() < 2) return trace;

  std::bernoulli_distribution switches(churn);
  std::uniform_int_distribution<Index> other_pool(0, params.pool_count() - 2);
  for (std::uint64_t t = 0; t < epochs; ++t) {
    std::uint64_t seq = 0;
    for (Index node = 0; node < params.node_count(); ++node) {
      if (!switches(rng)) continue;
      Index to = other_pool(rng);
      if (to >= state[node]) ++to;
      trace.events.push_back({t, seq++, node, state[node], to});
      state[node] = to;
    }
  }
  return trace;
}

Trace inverse_trace(const Trace& trace) {
  const auto finals = evolve(trace);
  Trace out{trace.params, finals.back(), {}};
  const std::uint64_t last = epoch_count(trace) - 1;
  std::uint64_t seq = 0;
  for (auto it = trace.events.rbegin(); it != trace.events.rend(); ++it) {
    const std::uint64_t epoch = last - it->epoch;
    if (!out.events.empty() && out.events.back().epoch != epoch) seq = 0;
    out.events.push_back({epoch, seq++, it->node, it->to_pool, it->from_pool});
  }
  return out;
}

Trace concatenate(const Trace& first, const Trace& second) {
  if (!(first.params == second.params)) fail(ErrorKind::ParamsMismatch, "concatenate");
  if (!(evolve(first).back() == second.initial)) {
    fail(ErrorKind::SourceMismatch, "second trace does not start where the first ends");
  }
  Trace out = first;
  const std::uint64_t shift = epoch_count(first);
  for (auto e : second.events) {
    e.epoch += shift;
    out.events.push_back(e);
  }
  return out;
}

Json to_json(const Snapshot& s) {
  Json out = to_json(s.cumulative);
  out["cumulative_epoch"] = s.cumulative_epoch;
  return out;
}

Snapshot snapshot_from_json(const Json& j) {
  return {pool_update_from_json(j), require_uint(j, "cumulative_epoch")};
}

std::string serialize_snapshots(const std::vector<Snapshot>& snapshots) {
  std::string out;
  for (const auto& s : snapshots) out += to_json(s).dump() + "\n";
  return out;
}

}  // namespace bcgroup
