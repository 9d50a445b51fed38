#pragma once

#include <cstdint>
#include <map>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "tangtoys/sensing.hpp"

// Append-only, replayable record of everything a device does — the simulated
// micro SD card. Plain text, one record per line for diffability:
//
//   tangtoys-log,v1
//   t_ms,device_id,kind,k1=v1;k2=v2;...
//
// Keys are sorted; `,` `;` `=` are reserved separators and forbidden inside
// keys and values.

namespace tangtoys::eventlog {

using TimeMs = std::int64_t;

inline constexpr std::string_view kLogHeader = "tangtoys-log,v1";

enum class RecordKind {
    SensorWindow,
    Classification,
    TxAdv,
    TxData,
    RxAdv,
    RxData,
    Feedback,
    NeighborChange,
};

std::string_view to_string(RecordKind k);
std::optional<RecordKind> record_kind_from(std::string_view name);

struct LogRecord {
    TimeMs t_ms = 0;
    std::string device_id;
    RecordKind kind = RecordKind::SensorWindow;
    std::map<std::string, std::string> payload;
    bool operator==(const LogRecord&) const = default;
};

// One serialized line, without trailing newline. Throws ValidationError if a
// key or value contains a reserved character.
std::string serialize_record(const LogRecord& record);

// Inverse of serialize_record; line_no is used for error reporting.
LogRecord parse_record(std::string_view line, int line_no = 1);

// Appends after checking payload characters and per-device time ordering
// (t_ms may not regress for the record's device).
void append(std::vector<LogRecord>& log, LogRecord record);

// Header plus one line per record, each newline-terminated.
std::string serialize_log_file(const std::vector<LogRecord>& records);

// Inverse of serialize_log_file. The first line must be the header; repeated
// header lines further down are skipped so that valid log files can be
// concatenated. Throws ParseError naming line and column.
std::vector<LogRecord> parse_log_file(std::string_view text);

// Re-runs the sensing pipeline over the SensorWindow records and returns the
// resulting summaries in record order. Throws ReplayGapError when a
// Classification record has no SensorWindow record to replay it from.
std::vector<sensing::InteractionSummary> replay_classifications(
    const std::vector<LogRecord>& records, const sensing::ClassifierThresholds& th);

// Payload codec for SensorWindow records (shared with the simulator):
// samples serialize with ':' between numbers and '|' between samples.
std::map<std::string, std::string> encode_sensor_window(
    const sensing::MotionWindow& motion, const sensing::TouchWindow& touch,
    const std::optional<sensing::VitalsSample>& vitals, std::optional<double> baseline_hr_bpm);

struct DecodedSensorWindow {
    sensing::MotionWindow motion;
    sensing::TouchWindow touch;
    std::optional<sensing::VitalsSample> vitals;
    std::optional<double> baseline_hr_bpm;
};

DecodedSensorWindow decode_sensor_window(const std::map<std::string, std::string>& payload);

}  // namespace tangtoys::eventlog
