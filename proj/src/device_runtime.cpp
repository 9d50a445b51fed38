#include "tangtoys/device_runtime.hpp"

#include <algorithm>

#include "tangtoys/errors.hpp"
#include "tangtoys/strutil.hpp"

namespace tangtoys::runtime {

namespace {

using eventlog::LogRecord;
using eventlog::RecordKind;

void log_event(TickOutput& out, const DeviceState& state, TimeMs now, RecordKind kind,
               std::map<std::string, std::string> payload) {
    eventlog::append(out.log_records,
                     {now, state.profile.device_id, kind, std::move(payload)});
}

std::string led_value(const feedback::LedColor& led) {
    return std::to_string(led.r) + ':' + std::to_string(led.g) + ':' + std::to_string(led.b);
}

void emit_feedback(TickOutput& out, const DeviceState& state, TimeMs now,
                   const std::optional<feedback::FeedbackCommand>& command) {
    if (!command) return;
    const core::FeedbackCheck check = core::validate_feedback(state.profile, *command);
    if (check.fit == core::FeedbackFit::Reject) return;  // unactuatable on this toy

    const feedback::FeedbackCommand& cmd = check.command;
    out.commands.push_back(cmd);
    log_event(out, state, now, RecordKind::Feedback,
              {{"amplitude", strutil::format_double(cmd.haptic.amplitude)},
               {"cause", std::string(feedback::to_string(cmd.cause))},
               {"gap_ms", std::to_string(cmd.haptic.gap_ms)},
               {"led", led_value(cmd.led)},
               {"pattern", std::string(feedback::to_string(cmd.haptic.id))},
               {"pulse_ms", std::to_string(cmd.haptic.pulse_ms)},
               {"repetitions", std::to_string(cmd.haptic.repetitions)}});
}

std::vector<std::string> neighbor_ids(const radio::NeighborTable& table) {
    std::vector<std::string> ids;
    ids.reserve(table.size());
    for (const auto& e : table) ids.push_back(e.neighbor_id);
    return ids;
}

}  // namespace

DeviceState make_device(core::ToyKind kind, std::string device_id, radio::Position position) {
    DeviceState state;
    state.profile = core::make_profile(kind, std::move(device_id));
    state.position = position;
    return state;
}

std::pair<DeviceState, TickOutput> tick(DeviceState state, TimeMs now_ms,
                                        const std::vector<Received>& inbox,
                                        const feedback::FeedbackPolicy& policy,
                                        const radio::RadioConfig& cfg,
                                        const sensing::ClassifierThresholds& th) {
    if (now_ms < state.clock_ms) {
        throw ValidationError("tick: clock moved backwards for device " +
                              state.profile.device_id);
    }
    radio::validate(cfg);
    sensing::validate(th);

    TickOutput out;
    const std::string& me = state.profile.device_id;

    const auto prev_ids = neighbor_ids(state.neighbor_table);
    const int prev_count = static_cast<int>(prev_ids.size());
    state.neighbor_table =
        radio::prune_neighbors(std::move(state.neighbor_table), now_ms, cfg.neighbor_ttl_ms);

    // 1. Ingest the inbox in delivery order.
    for (const Received& rx : inbox) {
        if (radio::packet_sender(rx.packet) == me) {
            throw InvariantError("tick: inbox contains a packet from this device itself");
        }
        if (const auto* adv = std::get_if<radio::Advertisement>(&rx.packet)) {
            state.neighbor_table = radio::update_neighbors(std::move(state.neighbor_table),
                                                           *adv, rx.rssi_dbm, now_ms);
            std::map<std::string, std::string> payload{
                {"from", adv->sender_id},
                {"rssi", strutil::format_fixed2(rx.rssi_dbm)},
                {"seq", std::to_string(adv->seq)}};
            if (adv->affect) payload["affect"] = std::string(sensing::to_string(*adv->affect));
            log_event(out, state, now_ms, RecordKind::RxAdv, std::move(payload));
        } else {
            const auto& frame = std::get<radio::DataFrame>(rx.packet);
            if (frame.receiver_id != me) {
                throw InvariantError("tick: inbox contains a frame addressed to " +
                                     frame.receiver_id);
            }
            log_event(out, state, now_ms, RecordKind::RxData,
                      {{"affect", std::string(sensing::to_string(frame.payload.affect))},
                       {"from", frame.sender_id},
                       {"motion", std::string(sensing::to_string(frame.payload.motion))},
                       {"rssi", strutil::format_fixed2(rx.rssi_dbm)},
                       {"touch", std::string(sensing::to_string(frame.payload.touch))}});
            if (state.pair_id && frame.sender_id == *state.pair_id) {
                emit_feedback(out, state, now_ms,
                              feedback::map_partner_feedback(frame.payload, policy, now_ms));
            }
        }
    }

    // 2. Presence: one evaluation per tick, after prune and ingest.
    const auto new_ids = neighbor_ids(state.neighbor_table);
    const int new_count = static_cast<int>(new_ids.size());
    if (new_ids != prev_ids) {
        log_event(out, state, now_ms, RecordKind::NeighborChange,
                  {{"count", std::to_string(new_count)}});
    }
    emit_feedback(out, state, now_ms,
                  feedback::map_presence_feedback(new_count, prev_count, policy, now_ms));

    // 3. Classify completed sensor windows, oldest first.
    while (!state.pending_windows.empty()) {
        SensorBundle bundle = std::move(state.pending_windows.front());
        state.pending_windows.pop_front();

        log_event(out, state, now_ms, RecordKind::SensorWindow,
                  eventlog::encode_sensor_window(bundle.motion, bundle.touch, bundle.vitals,
                                                 state.baseline_hr_bpm));

        const auto features = sensing::extract_motion_features(bundle.motion);
        const auto motion = sensing::classify_motion(features, th);
        const auto touch = sensing::classify_touch(bundle.touch, th);
        const auto affect =
            sensing::estimate_affect(motion, touch, bundle.vitals, state.baseline_hr_bpm, th);
        const auto summary = sensing::summarize(me, now_ms, motion, touch, affect);

        log_event(out, state, now_ms, RecordKind::Classification,
                  {{"affect", std::string(sensing::to_string(affect))},
                   {"motion", std::string(sensing::to_string(motion))},
                   {"touch", std::string(sensing::to_string(touch))}});

        const bool changed = !state.last_summary || !state.last_summary->same_classes(summary);
        state.last_summary = summary;
        ++state.windows_since_tx;

        // Edge-triggered transmission plus a keepalive; the medium, not the
        // device, decides whether the frame actually arrives.
        if (state.pair_id && (changed || state.windows_since_tx >= kKeepaliveWindows)) {
            radio::DataFrame frame{me, *state.pair_id, now_ms, summary};
            out.outgoing.emplace_back(std::move(frame));
            state.windows_since_tx = 0;
            log_event(out, state, now_ms, RecordKind::TxData,
                      {{"affect", std::string(sensing::to_string(affect))},
                       {"motion", std::string(sensing::to_string(motion))},
                       {"to", *state.pair_id},
                       {"touch", std::string(sensing::to_string(touch))}});
        }
    }

    // 4. Advertise on every multiple of the advertising interval.
    if (now_ms % cfg.adv_interval_ms == 0) {
        ++state.adv_seq;
        radio::Advertisement adv{me, state.adv_seq, now_ms, std::nullopt};
        if (state.last_summary) adv.affect = state.last_summary->affect;
        std::map<std::string, std::string> payload{{"seq", std::to_string(state.adv_seq)}};
        if (adv.affect) payload["affect"] = std::string(sensing::to_string(*adv.affect));
        out.outgoing.emplace_back(std::move(adv));
        log_event(out, state, now_ms, RecordKind::TxAdv, std::move(payload));
    }

    state.clock_ms = now_ms;
    return {std::move(state), std::move(out)};
}

DeviceState ingest_sensor_window(DeviceState state, sensing::MotionWindow motion,
                                 sensing::TouchWindow touch,
                                 std::optional<sensing::VitalsSample> vitals) {
    auto reject = [&](core::SensorKind channel) {
        const auto violation = core::validate_event(state.profile, channel);
        if (violation) {
            throw CapabilityError("ingest_sensor_window: " + violation->describe() +
                                  " (device " + state.profile.device_id + ")");
        }
    };

    sensing::validate(motion);
    if (motion.samples.size() < 2) {
        throw ValidationError("ingest_sensor_window: motion window needs at least 2 samples");
    }
    reject(core::SensorKind::Imu9Dof);

    sensing::validate(touch);
    if (!touch.samples.empty()) reject(core::SensorKind::CapacitiveTouch);

    if (vitals) {
        sensing::validate(*vitals);
        reject(core::SensorKind::HeartRate);
        if (vitals->eda_microsiemens) reject(core::SensorKind::Eda);
    }

    state.pending_windows.push_back({std::move(motion), std::move(touch), std::move(vitals)});
    return state;
}

std::pair<DeviceState, DeviceState> pair_devices(DeviceState a, DeviceState b) {
    if (a.profile.device_id == b.profile.device_id) {
        throw ValidationError("pair_devices: cannot pair a device with itself");
    }
    if (a.pair_id || b.pair_id) {
        throw ValidationError("pair_devices: " +
                              (a.pair_id ? a.profile.device_id : b.profile.device_id) +
                              " is already paired");
    }
    a.pair_id = b.profile.device_id;
    b.pair_id = a.profile.device_id;
    return {std::move(a), std::move(b)};
}

}  // namespace tangtoys::runtime
