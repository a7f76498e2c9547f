#pragma once

// Pool-churn traces: node-switch events grouped into epochs, folded into
// group elements and replayed against configurations.
//
// File format (JSON lines, UTF-8, newline-terminated):
//   {"n":2,"r":2,"initial":[0,0]}
//   {"epoch":0,"seq":0,"node":0,"from":0,"to":1}
// Snapshot lines: {"n":..,"r":..,"perms":[[..],..],"cumulative_epoch":t}

#include <cstdint>
#include <iosfwd>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "bcgroup/core.hpp"
#include "bcgroup/json_io.hpp"

namespace bcgroup {

struct SwitchEvent {
  std::uint64_t epoch = 0;
  std::uint64_t seq = 0;
  Index node = 0;
  Index from_pool = 0;
  Index to_pool = 0;

  bool operator==(const SwitchEvent&) const = default;
};

struct Trace {
  GroupParams params;
  Configuration initial;
  std::vector<SwitchEvent> events;

  bool operator==(const Trace&) const = default;
};

/// Cumulative product of the epoch updates 0..cumulative_epoch.
struct Snapshot {
  PoolUpdate cumulative;
  std::uint64_t cumulative_epoch;

  bool operator==(const Snapshot&) const = default;
};

/// Throws MalformedLine (with the 1-based line number), InvariantViolation
/// or SourceMismatch.
Trace parse_trace(std::istream& in);
Trace parse_trace(std::string_view text);
std::string serialize_trace(const Trace& trace);

/// Checks ranges, (epoch, seq) ordering and source consistency.
void validate_trace(const Trace& trace);

/// Epochs 0..last event epoch; an empty trace still has epoch 0.
std::uint64_t epoch_count(const Trace& trace);

/// A switch i->j with i != j becomes the transposition (i j) on that node's
/// pools; several switches of one node compose in seq order. Nodes without
/// events keep the identity. Throws InvariantViolation.
PoolUpdate fold_epoch(const GroupParams& params, std::span<const SwitchEvent> events);
/// One update per epoch, 0..epochs-1 (epochs = 0 means epoch_count(trace)).
std::vector<PoolUpdate> fold_trace(const Trace& trace, std::uint64_t epochs = 0);
/// Configuration after each epoch.
std::vector<Configuration> evolve(const Trace& trace, std::uint64_t epochs = 0);
/// Running products update_0 * ... * update_t, one per epoch.
std::vector<Snapshot> cumulative_snapshots(const std::vector<PoolUpdate>& updates);
/// Epochs t where update_0 * ... * update_t is the identity. Throws ParamsMismatch.
std::vector<std::uint64_t> detect_identity_closure(const std::vector<PoolUpdate>& updates);

/// Each epoch every node switches with probability `churn` to a uniformly
/// chosen other pool. The initial configuration is drawn from the same seed.
Trace generate_random_trace(const GroupParams& params, std::uint64_t epochs, double churn,
                            std::uint64_t seed);

/// Reversed events with from/to swapped, starting from the final configuration.
Trace inverse_trace(const Trace& trace);
/// `first` followed by `second`, whose epochs are shifted past `first`.
/// `second` must start where `first` ends (SourceMismatch otherwise).
Trace concatenate(const Trace& first, const Trace& second);

Json to_json(const Snapshot& s);
Snapshot snapshot_from_json(const Json& j);
std::string serialize_snapshots(const std::vector<Snapshot>& snapshots);

}  // namespace bcgroup
