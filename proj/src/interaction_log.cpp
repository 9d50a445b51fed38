#include "tangtoys/interaction_log.hpp"

#include <algorithm>
#include <deque>

#include "tangtoys/errors.hpp"
#include "tangtoys/strutil.hpp"

namespace tangtoys::eventlog {

std::string_view to_string(RecordKind k) {
    switch (k) {
        case RecordKind::SensorWindow: return "SensorWindow";
        case RecordKind::Classification: return "Classification";
        case RecordKind::TxAdv: return "TxAdv";
        case RecordKind::TxData: return "TxData";
        case RecordKind::RxAdv: return "RxAdv";
        case RecordKind::RxData: return "RxData";
        case RecordKind::Feedback: return "Feedback";
        case RecordKind::NeighborChange: return "NeighborChange";
    }
    return "?";
}

std::optional<RecordKind> record_kind_from(std::string_view name) {
    for (RecordKind k :
         {RecordKind::SensorWindow, RecordKind::Classification, RecordKind::TxAdv,
          RecordKind::TxData, RecordKind::RxAdv, RecordKind::RxData, RecordKind::Feedback,
          RecordKind::NeighborChange}) {
        if (name == to_string(k)) return k;
    }
    return std::nullopt;
}

namespace {

constexpr std::string_view kReserved = ",;=";

void check_clean(std::string_view text, const char* what) {
    if (text.find_first_of(kReserved) != std::string_view::npos ||
        text.find('\n') != std::string_view::npos) {
        throw ValidationError(std::string("log record ") + what +
                              " contains a reserved character (',' ';' '=' or newline): " +
                              std::string(text));
    }
}

}  // namespace

std::string serialize_record(const LogRecord& record) {
    check_clean(record.device_id, "device_id");
    std::string line = std::to_string(record.t_ms) + ',' + record.device_id + ',';
    line += to_string(record.kind);
    line += ',';
    bool first = true;
    for (const auto& [key, value] : record.payload) {
        if (key.empty()) throw ValidationError("log record payload has an empty key");
        check_clean(key, "payload key");
        check_clean(value, "payload value");
        if (!first) line += ';';
        line += key;
        line += '=';
        line += value;
        first = false;
    }
    return line;
}

LogRecord parse_record(std::string_view line, int line_no) {
    const auto fields = strutil::split(line, ',');
    if (fields.size() != 4) {
        // Column of the first missing comma: past the end of what is there.
        throw ParseError(line_no, static_cast<int>(line.size()) + 1,
                         "expected 4 comma-separated fields, got " +
                             std::to_string(fields.size()));
    }

    LogRecord record;
    std::size_t col = 1;
    auto t = strutil::parse_int(fields[0]);
    if (!t) throw ParseError(line_no, static_cast<int>(col), "bad t_ms field");
    record.t_ms = *t;
    col += fields[0].size() + 1;

    if (fields[1].empty()) throw ParseError(line_no, static_cast<int>(col), "empty device_id");
    record.device_id = std::string(fields[1]);
    col += fields[1].size() + 1;

    auto kind = record_kind_from(fields[2]);
    if (!kind) {
        throw ParseError(line_no, static_cast<int>(col),
                         "unknown record kind: " + std::string(fields[2]));
    }
    record.kind = *kind;
    col += fields[2].size() + 1;

    if (!fields[3].empty()) {
        for (std::string_view pair : strutil::split(fields[3], ';')) {
            const std::size_t eq = pair.find('=');
            if (eq == std::string_view::npos || eq == 0) {
                throw ParseError(line_no, static_cast<int>(col), "malformed key=value pair");
            }
            record.payload.emplace(std::string(pair.substr(0, eq)),
                                   std::string(pair.substr(eq + 1)));
            col += pair.size() + 1;
        }
    }
    return record;
}

void append(std::vector<LogRecord>& log, LogRecord record) {
    serialize_record(record);  // reject reserved characters at append time
    for (auto it = log.rbegin(); it != log.rend(); ++it) {
        if (it->device_id == record.device_id) {
            if (record.t_ms < it->t_ms) {
                throw ValidationError("log append: time regression for device " +
                                      record.device_id + " (" + std::to_string(record.t_ms) +
                                      " after " + std::to_string(it->t_ms) + ")");
            }
            break;
        }
    }
    log.push_back(std::move(record));
}

std::string serialize_log_file(const std::vector<LogRecord>& records) {
    std::string out(kLogHeader);
    out += '\n';
    for (const LogRecord& r : records) {
        out += serialize_record(r);
        out += '\n';
    }
    return out;
}

std::vector<LogRecord> parse_log_file(std::string_view text) {
    std::vector<LogRecord> records;
    auto lines = strutil::split(text, '\n');
    // A trailing newline produces one final empty piece; drop it.
    if (!lines.empty() && lines.back().empty()) lines.pop_back();
    if (lines.empty() || lines[0] != kLogHeader) {
        throw ParseError(1, 1, "missing log header '" + std::string(kLogHeader) + "'");
    }
    for (std::size_t i = 1; i < lines.size(); ++i) {
        if (lines[i] == kLogHeader) continue;  // concatenated log files
        records.push_back(parse_record(lines[i], static_cast<int>(i + 1)));
    }
    return records;
}

// --- sensor window payload codec --------------------------------------------

namespace {

std::string fmt(double v) { return strutil::format_double(v); }

double need_double(std::string_view text, const char* what) {
    auto v = strutil::parse_double(text);
    if (!v) throw ValidationError(std::string("sensor window payload: bad number in ") + what);
    return *v;
}

TimeMs need_time(std::string_view text, const char* what) {
    auto v = strutil::parse_int(text);
    if (!v) throw ValidationError(std::string("sensor window payload: bad time in ") + what);
    return *v;
}

}  // namespace

std::map<std::string, std::string> encode_sensor_window(
    const sensing::MotionWindow& motion, const sensing::TouchWindow& touch,
    const std::optional<sensing::VitalsSample>& vitals, std::optional<double> baseline_hr_bpm) {
    std::map<std::string, std::string> payload;

    std::string m;
    for (const auto& s : motion.samples) {
        if (!m.empty()) m += '|';
        m += std::to_string(s.t_ms);
        for (double v : {s.accel.x, s.accel.y, s.accel.z, s.gyro.x, s.gyro.y, s.gyro.z,
                         s.mag.x, s.mag.y, s.mag.z}) {
            m += ':';
            m += fmt(v);
        }
    }
    payload["motion"] = std::move(m);
    payload["motion_rate"] = fmt(motion.nominal_rate_hz);

    std::string t;
    for (const auto& s : touch.samples) {
        if (!t.empty()) t += '|';
        t += std::to_string(s.t_ms);
        t += ':';
        t += fmt(s.intensity);
    }
    payload["touch"] = std::move(t);

    if (vitals) {
        std::string v = std::to_string(vitals->t_ms) + ':' + fmt(vitals->heart_rate_bpm);
        if (vitals->eda_microsiemens) {
            v += ':';
            v += fmt(*vitals->eda_microsiemens);
        }
        payload["vitals"] = std::move(v);
        if (baseline_hr_bpm) payload["baseline"] = fmt(*baseline_hr_bpm);
    }
    return payload;
}

DecodedSensorWindow decode_sensor_window(const std::map<std::string, std::string>& payload) {
    DecodedSensorWindow out;

    auto mi = payload.find("motion");
    if (mi == payload.end()) {
        throw ReplayGapError("sensor window payload: missing motion samples");
    }
    if (!mi->second.empty()) {
        for (std::string_view sample : strutil::split(mi->second, '|')) {
            const auto parts = strutil::split(sample, ':');
            if (parts.size() != 10) {
                throw ValidationError("sensor window payload: motion sample needs 10 numbers");
            }
            sensing::MotionSample s;
            s.t_ms = need_time(parts[0], "motion");
            s.accel = {need_double(parts[1], "motion"), need_double(parts[2], "motion"),
                       need_double(parts[3], "motion")};
            s.gyro = {need_double(parts[4], "motion"), need_double(parts[5], "motion"),
                      need_double(parts[6], "motion")};
            s.mag = {need_double(parts[7], "motion"), need_double(parts[8], "motion"),
                     need_double(parts[9], "motion")};
            out.motion.samples.push_back(s);
        }
    }
    if (auto it = payload.find("motion_rate"); it != payload.end()) {
        out.motion.nominal_rate_hz = need_double(it->second, "motion_rate");
    }

    if (auto it = payload.find("touch"); it != payload.end() && !it->second.empty()) {
        for (std::string_view sample : strutil::split(it->second, '|')) {
            const auto parts = strutil::split(sample, ':');
            if (parts.size() != 2) {
                throw ValidationError("sensor window payload: touch sample needs 2 numbers");
            }
            out.touch.samples.push_back(
                {need_time(parts[0], "touch"), need_double(parts[1], "touch")});
        }
    }

    if (auto it = payload.find("vitals"); it != payload.end() && !it->second.empty()) {
        const auto parts = strutil::split(it->second, ':');
        if (parts.size() != 2 && parts.size() != 3) {
            throw ValidationError("sensor window payload: vitals needs 2 or 3 numbers");
        }
        sensing::VitalsSample v;
        v.t_ms = need_time(parts[0], "vitals");
        v.heart_rate_bpm = need_double(parts[1], "vitals");
        if (parts.size() == 3) v.eda_microsiemens = need_double(parts[2], "vitals");
        out.vitals = v;
    }
    if (auto it = payload.find("baseline"); it != payload.end()) {
        out.baseline_hr_bpm = need_double(it->second, "baseline");
    }
    return out;
}

std::vector<sensing::InteractionSummary> replay_classifications(
    const std::vector<LogRecord>& records, const sensing::ClassifierThresholds& th) {
    std::vector<sensing::InteractionSummary> replayed;
    // Windows awaiting their Classification record, per device, in order.
    std::map<std::string, std::deque<std::size_t>> pending;

    for (const LogRecord& record : records) {
        if (record.kind == RecordKind::SensorWindow) {
            const DecodedSensorWindow w = decode_sensor_window(record.payload);
            const auto features = sensing::extract_motion_features(w.motion);
            const auto motion = sensing::classify_motion(features, th);
            const auto touch = sensing::classify_touch(w.touch, th);
            const auto affect =
                sensing::estimate_affect(motion, touch, w.vitals, w.baseline_hr_bpm, th);
            replayed.push_back(
                sensing::summarize(record.device_id, record.t_ms, motion, touch, affect));
            pending[record.device_id].push_back(replayed.size() - 1);
        } else if (record.kind == RecordKind::Classification) {
            auto& queue = pending[record.device_id];
            if (queue.empty()) {
                throw ReplayGapError(
                    "replay: Classification at t=" + std::to_string(record.t_ms) +
                    " for device " + record.device_id + " has no SensorWindow record");
            }
            queue.pop_front();
        }
    }
    return replayed;
}

}  // namespace tangtoys::eventlog
