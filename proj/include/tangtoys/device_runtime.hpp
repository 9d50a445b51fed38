#pragma once

#include <cstdint>
#include <deque>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "tangtoys/core_model.hpp"
#include "tangtoys/feedback.hpp"
#include "tangtoys/interaction_log.hpp"
#include "tangtoys/radio_sim.hpp"
#include "tangtoys/sensing.hpp"

// The per-toy state machine: on every tick a device ingests what the radio
// delivered, classifies any completed sensor windows, services its paired
// link and advertises its presence — all while logging every event.
//
// tick() is a pure state transition (same state + inputs => same outputs),
// which is what makes golden-trace testing of whole simulations possible.

namespace tangtoys::runtime {

using TimeMs = std::int64_t;

// After this many classified windows without a transmission the current
// summary is re-sent to the pair even if unchanged.
inline constexpr int kKeepaliveWindows = 10;

struct SensorBundle {
    sensing::MotionWindow motion;
    sensing::TouchWindow touch;
    std::optional<sensing::VitalsSample> vitals;
};

struct DeviceState {
    core::DeviceProfile profile;
    radio::Position position;
    std::optional<std::string> pair_id;
    radio::NeighborTable neighbor_table;
    std::optional<sensing::InteractionSummary> last_summary;
    std::uint64_t adv_seq = 0;
    std::deque<SensorBundle> pending_windows;
    TimeMs clock_ms = 0;
    int windows_since_tx = 0;
    std::optional<double> baseline_hr_bpm;  // required before vitals are ingested
};

DeviceState make_device(core::ToyKind kind, std::string device_id, radio::Position position);

struct Received {
    radio::Packet packet;
    double rssi_dbm = 0.0;
};

struct TickOutput {
    std::vector<radio::Packet> outgoing;
    std::vector<feedback::FeedbackCommand> commands;
    std::vector<eventlog::LogRecord> log_records;
};

// One tick. In order: ingest the inbox (advertisements refresh the neighbor
// table and may trigger presence feedback; data frames from the pair trigger
// partner feedback), classify pending sensor windows (transmitting to the
// pair on class change or keepalive), then advertise if now is a multiple of
// the advertising interval. Every ingested event, classification,
// transmission and feedback lands in the log.
//
// Throws ValidationError on a non-monotonic clock and InvariantError on an
// inbox item from the device itself or addressed elsewhere.
std::pair<DeviceState, TickOutput> tick(DeviceState state, TimeMs now_ms,
                                        const std::vector<Received>& inbox,
                                        const feedback::FeedbackPolicy& policy,
                                        const radio::RadioConfig& cfg,
                                        const sensing::ClassifierThresholds& th);

// Queues a window bundle for classification on the next tick, after checking
// every supplied channel against the device profile (CapabilityError).
DeviceState ingest_sensor_window(DeviceState state, sensing::MotionWindow motion,
                                 sensing::TouchWindow touch,
                                 std::optional<sensing::VitalsSample> vitals);

// Symmetric pairing; each device has at most one partner (ValidationError on
// re-pairing).
std::pair<DeviceState, DeviceState> pair_devices(DeviceState a, DeviceState b);

}  // namespace tangtoys::runtime
