#pragma once

#include <cstdint>
#include <map>
#include <optional>
#include <random>
#include <string>
#include <string_view>
#include <variant>
#include <vector>

#include "tangtoys/sensing.hpp"

// BLE-like layer over toys on a 2D plane: presence advertisements, paired
// data frames, range-gated lossy delivery, a log-distance RSSI model and
// TTL-pruned neighbor tables. No obstacles, no fading: a circular disc with
// an inclusive boundary.

namespace tangtoys::radio {

using TimeMs = std::int64_t;

struct Position {
    double x = 0.0;  // meters
    double y = 0.0;
    bool operator==(const Position&) const = default;
};

struct RadioConfig {
    double range_m = 50.0;
    TimeMs adv_interval_ms = 1000;
    double loss_prob = 0.0;  // [0,1)
    TimeMs neighbor_ttl_ms = 5000;
    std::uint64_t rng_seed = 0;
    bool operator==(const RadioConfig&) const = default;
};

void validate(const RadioConfig& cfg);

struct Advertisement {
    std::string sender_id;
    std::uint64_t seq = 0;  // strictly increasing per sender
    TimeMs t_ms = 0;
    std::optional<sensing::AffectState> affect;
    bool operator==(const Advertisement&) const = default;
};

struct DataFrame {
    std::string sender_id;
    std::string receiver_id;
    TimeMs t_ms = 0;
    sensing::InteractionSummary payload;
    bool operator==(const DataFrame&) const = default;
};

using Packet = std::variant<Advertisement, DataFrame>;

const std::string& packet_sender(const Packet& p);

struct NeighborEntry {
    std::string neighbor_id;
    TimeMs last_seen_ms = 0;
    double rssi_dbm = 0.0;
    bool operator==(const NeighborEntry&) const = default;
};

using NeighborTable = std::vector<NeighborEntry>;  // kept sorted by id

struct Delivery {
    std::string receiver_id;
    double rssi_dbm = 0.0;
    bool operator==(const Delivery&) const = default;
};

double distance(const Position& a, const Position& b);

// Euclidean distance <= range_m, boundary inclusive.
bool in_range(const Position& a, const Position& b, double range_m);

// rssi = -40 - 20*log10(max(distance, 0.1)); deterministic across platforms.
double rssi_model(double distance_m);

// Advertisements reach every other registered device in range, each
// independently dropped with probability loss_prob; data frames reach only
// the named receiver, range and loss permitting. Loss draws are taken in
// ascending receiver-id order, one per in-range candidate, so a fixed seed
// fixes the outcome. Throws ValidationError for an unregistered sender.
std::vector<Delivery> deliver(const Packet& packet,
                              const std::map<std::string, Position>& positions,
                              const RadioConfig& cfg, std::mt19937_64& rng);

// Insert or refresh the sender's entry.
NeighborTable update_neighbors(NeighborTable table, const Advertisement& adv, double rssi_dbm,
                               TimeMs now_ms);

// Drop entries with now - last_seen > ttl (boundary keeps).
NeighborTable prune_neighbors(NeighborTable table, TimeMs now_ms, TimeMs ttl_ms);

// Wire encodings used in traces and tooling:
//   ADV,sender,seq,t_ms[,affect]
//   DAT,sender,receiver,t_ms,motion,touch,affect
std::string encode(const Advertisement& adv);
std::string encode(const DataFrame& frame);
std::string encode(const Packet& packet);
Packet decode_packet(std::string_view line);  // throws ParseError

}  // namespace tangtoys::radio
