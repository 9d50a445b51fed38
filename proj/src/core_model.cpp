#include "tangtoys/core_model.hpp"

#include "tangtoys/errors.hpp"

namespace tangtoys::core {

std::string_view to_string(ToyKind k) {
    switch (k) {
        case ToyKind::Ball: return "Ball";
        case ToyKind::Cube: return "Cube";
        case ToyKind::TeddyVisual: return "TeddyVisual";
        case ToyKind::Torus: return "Torus";
        case ToyKind::TeddyHaptic: return "TeddyHaptic";
    }
    return "?";
}

std::string_view to_string(SensorKind k) {
    switch (k) {
        case SensorKind::Imu9Dof: return "Imu9Dof";
        case SensorKind::CapacitiveTouch: return "CapacitiveTouch";
        case SensorKind::HeartRate: return "HeartRate";
        case SensorKind::Eda: return "Eda";
    }
    return "?";
}

std::string_view to_string(ActuatorKind k) {
    switch (k) {
        case ActuatorKind::MultiColorLed: return "MultiColorLed";
        case ActuatorKind::Haptic: return "Haptic";
    }
    return "?";
}

std::optional<ToyKind> toy_kind_from(std::string_view name) {
    for (ToyKind k : kAllToyKinds) {
        if (name == to_string(k)) return k;
    }
    return std::nullopt;
}

DeviceProfile make_profile(ToyKind kind, std::string device_id) {
    if (device_id.empty()) throw ValidationError("make_profile: device_id must be non-empty");

    DeviceProfile p;
    p.kind = kind;
    p.device_id = std::move(device_id);
    p.sensors = {SensorKind::Imu9Dof, SensorKind::CapacitiveTouch};
    switch (kind) {
        case ToyKind::Ball:
        case ToyKind::TeddyVisual:
            p.actuators = {ActuatorKind::MultiColorLed};
            break;
        case ToyKind::Cube:
        case ToyKind::Torus:
            p.sensors.insert(SensorKind::HeartRate);
            p.sensors.insert(SensorKind::Eda);
            p.actuators = {ActuatorKind::Haptic};
            break;
        case ToyKind::TeddyHaptic:
            p.actuators = {ActuatorKind::Haptic, ActuatorKind::MultiColorLed};
            break;
    }
    return p;
}

std::string CapabilityViolation::describe() const {
    return std::string(to_string(kind)) + " has no " + std::string(to_string(channel)) +
           " sensor";
}

std::optional<CapabilityViolation> validate_event(const DeviceProfile& profile,
                                                  SensorKind channel) {
    if (profile.has_sensor(channel)) return std::nullopt;
    return CapabilityViolation{profile.kind, channel};
}

FeedbackCheck validate_feedback(const DeviceProfile& profile,
                                feedback::FeedbackCommand command) {
    const bool was_empty = command.is_empty();
    bool stripped = false;

    if (!command.haptic.is_none() && !profile.has_actuator(ActuatorKind::Haptic)) {
        command.haptic = feedback::HapticPattern::none();
        stripped = true;
    }
    if (!command.led.is_off() && !profile.has_actuator(ActuatorKind::MultiColorLed)) {
        command.led = feedback::LedColor::off();
        stripped = true;
    }

    if (!was_empty && command.is_empty()) {
        return {FeedbackFit::Reject, std::move(command)};
    }
    return {stripped ? FeedbackFit::Stripped : FeedbackFit::Accept, std::move(command)};
}

}  // namespace tangtoys::core
