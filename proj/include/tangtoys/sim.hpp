#pragma once

#include <cstdint>
#include <map>
#include <optional>
#include <string>
#include <string_view>
#include <variant>
#include <vector>

#include "tangtoys/config.hpp"
#include "tangtoys/core_model.hpp"
#include "tangtoys/device_runtime.hpp"
#include "tangtoys/feedback.hpp"
#include "tangtoys/interaction_log.hpp"
#include "tangtoys/radio_sim.hpp"
#include "tangtoys/sensing.hpp"

// Scenario language, the deterministic discrete-event loop, and trace
// analysis. Scenarios are line oriented:
//
//   device <id> <kind> <x> <y>
//   pair <id> <id>
//   at <t_ms> move <id> <x> <y>
//   at <t_ms> touch <id> <peak_intensity> <rise_ms> <hold_ms>
//   at <t_ms> shake <id> <amplitude_mps2> <freq_hz> <duration_ms>
//   at <t_ms> vitals <id> <hr_bpm>
//   end <t_ms>
//
// `#` begins a comment. Simulated time advances in 100 ms ticks; devices
// tick in ascending id order and the medium routes outboxes into the next
// tick's inboxes (one-tick store-and-forward). Given the same scenario,
// seed and configuration, the produced trace is byte-identical.

namespace tangtoys::sim {

using TimeMs = std::int64_t;

inline constexpr TimeMs kTickMs = 100;

struct DeviceDecl {
    std::string id;
    core::ToyKind kind = core::ToyKind::Ball;
    radio::Position position;
};

struct PairDecl {
    std::string a;
    std::string b;
};

struct MoveEvent {
    TimeMs t_ms = 0;
    std::string id;
    radio::Position to;
};

struct TouchEvent {
    TimeMs t_ms = 0;
    std::string id;
    double peak_intensity = 0.0;
    TimeMs rise_ms = 0;
    TimeMs hold_ms = 0;
};

struct ShakeEvent {
    TimeMs t_ms = 0;
    std::string id;
    double amplitude_mps2 = 0.0;
    double freq_hz = 1.0;
    TimeMs duration_ms = 0;
};

struct VitalsEvent {
    TimeMs t_ms = 0;
    std::string id;
    double hr_bpm = 0.0;
};

using ScenarioEvent = std::variant<MoveEvent, TouchEvent, ShakeEvent, VitalsEvent>;

struct Scenario {
    std::vector<DeviceDecl> devices;
    std::vector<PairDecl> pairs;
    std::vector<ScenarioEvent> events;
    TimeMs end_ms = 0;
    config::KeyValues overrides;  // merged config, filled by the CLI
};

// Throws ParseError with the offending line number.
Scenario parse_scenario(std::string_view text);

struct SimParams {
    radio::RadioConfig radio;
    sensing::ClassifierThresholds thresholds;
    feedback::FeedbackPolicy policy = feedback::FeedbackPolicy::defaults();
    double baseline_hr_bpm = 80.0;
    TimeMs window_ms = 2000;      // sensor windows span at most this long
    double imu_rate_hz = 50.0;    // must divide 1000 ms evenly
    double touch_rate_hz = 20.0;  // must divide 1000 ms evenly
};

// Applies recognized keys (radio.*, thresholds.*, sensing.*, feedback.*,
// partner.*, presence.*) over the defaults; unknown keys are a ConfigError.
SimParams params_from_config(const config::KeyValues& kv);

// One line of a trace: LogRecords plus medium delivery lines, which use the
// pseudo-source MED and kind Deliver.
struct TraceLine {
    TimeMs t_ms = 0;
    std::string source;
    std::string kind;
    std::map<std::string, std::string> payload;
    bool operator==(const TraceLine&) const = default;
};

inline constexpr std::string_view kMedSource = "MED";
inline constexpr std::string_view kMedKind = "Deliver";

struct Trace {
    std::vector<TraceLine> lines;  // sorted by (t_ms, source, kind), stable

    std::string serialize() const;
    static Trace parse(std::string_view text);

    // Everything except MED lines, as typed log records.
    std::vector<eventlog::LogRecord> device_records() const;
    bool operator==(const Trace&) const = default;
};

struct DeviceStats {
    std::uint64_t tx_adv = 0;
    std::uint64_t tx_data = 0;
    std::uint64_t rx_adv = 0;
    std::uint64_t rx_data = 0;
    std::map<std::string, std::uint64_t> feedback_by_cause;
    std::vector<std::pair<TimeMs, sensing::AffectState>> affect_timeline;
    std::vector<std::pair<TimeMs, int>> neighbor_timeline;
    bool operator==(const DeviceStats&) const = default;
};

struct Stats {
    std::map<std::string, DeviceStats> devices;
    bool operator==(const Stats&) const = default;
};

struct RunResult {
    Trace trace;
    Stats stats;  // tallied during the run, for cross-checking against analyze()
};

RunResult run(const Scenario& scenario, const SimParams& params);

// Recomputes Stats from trace records alone.
Stats analyze(const Trace& trace);

// Replays every SensorWindow record in the trace through the sensing
// pipeline and compares against the logged Classification records.
struct ReplayReport {
    std::size_t windows = 0;
    std::size_t classifications = 0;
    std::vector<std::string> mismatches;
    bool ok() const { return mismatches.empty(); }
};

ReplayReport verify_replay(const Trace& trace, const sensing::ClassifierThresholds& th);

}  // namespace tangtoys::sim
