#pragma once

#include <optional>
#include <set>
#include <string>
#include <string_view>

#include "tangtoys/feedback.hpp"

// The five toy embodiments and their fixed sensor/actuator capability sets,
// plus validation of sensor events and feedback commands against them.

namespace tangtoys::core {

enum class ToyKind { Ball, Cube, TeddyVisual, Torus, TeddyHaptic };
enum class SensorKind { Imu9Dof, CapacitiveTouch, HeartRate, Eda };
enum class ActuatorKind { MultiColorLed, Haptic };

inline constexpr ToyKind kAllToyKinds[] = {ToyKind::Ball, ToyKind::Cube, ToyKind::TeddyVisual,
                                           ToyKind::Torus, ToyKind::TeddyHaptic};

std::string_view to_string(ToyKind k);
std::string_view to_string(SensorKind k);
std::string_view to_string(ActuatorKind k);
std::optional<ToyKind> toy_kind_from(std::string_view name);

struct DeviceProfile {
    ToyKind kind = ToyKind::Ball;
    std::set<SensorKind> sensors;
    std::set<ActuatorKind> actuators;
    std::string device_id;

    bool has_sensor(SensorKind s) const { return sensors.count(s) != 0; }
    bool has_actuator(ActuatorKind a) const { return actuators.count(a) != 0; }
    bool operator==(const DeviceProfile&) const = default;
};

// Capability sets are fixed per kind:
//   Ball        sensors {Imu9Dof, CapacitiveTouch},                 actuators {MultiColorLed}
//   Cube        sensors {Imu9Dof, CapacitiveTouch, HeartRate, Eda}, actuators {Haptic}
//   TeddyVisual sensors {Imu9Dof, CapacitiveTouch},                 actuators {MultiColorLed}
//   Torus       sensors {Imu9Dof, CapacitiveTouch, HeartRate, Eda}, actuators {Haptic}
//   TeddyHaptic sensors {Imu9Dof, CapacitiveTouch},                 actuators {Haptic, MultiColorLed}
// Throws ValidationError on an empty device_id.
DeviceProfile make_profile(ToyKind kind, std::string device_id);

struct CapabilityViolation {
    ToyKind kind;
    SensorKind channel;
    std::string describe() const;
};

// nullopt = accepted; otherwise the rejection names the offending channel.
std::optional<CapabilityViolation> validate_event(const DeviceProfile& profile,
                                                  SensorKind channel);

enum class FeedbackFit {
    Accept,   // command unchanged
    Stripped, // one side removed, remainder still actuatable
    Reject    // nothing of the command can be actuated here
};

struct FeedbackCheck {
    FeedbackFit fit = FeedbackFit::Accept;
    feedback::FeedbackCommand command;  // post-strip; meaningless on Reject
};

// Strips the haptic part when the profile has no haptic actuator and the LED
// part when it has no LED; rejects only when a non-empty command loses both.
FeedbackCheck validate_feedback(const DeviceProfile& profile, feedback::FeedbackCommand command);

}  // namespace tangtoys::core
