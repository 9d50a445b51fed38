#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

// Windowed sensor data -> features -> interaction classes -> affect estimate.
// Everything here is a pure function over immutable inputs; the thresholds
// are configuration, not constants, and the affect rule table is a
// deliberately simple stand-in for a learned model.

namespace tangtoys::sensing {

using TimeMs = std::int64_t;

struct Vec3 {
    double x = 0.0;
    double y = 0.0;
    double z = 0.0;
    bool operator==(const Vec3&) const = default;
};

struct MotionSample {
    TimeMs t_ms = 0;
    Vec3 accel;  // m/s^2
    Vec3 gyro;   // rad/s
    Vec3 mag;    // uT, carried for logging, unused by features
    bool operator==(const MotionSample&) const = default;
};

struct MotionWindow {
    std::vector<MotionSample> samples;
    double nominal_rate_hz = 50.0;
    bool operator==(const MotionWindow&) const = default;
};

struct TouchSample {
    TimeMs t_ms = 0;
    double intensity = 0.0;  // normalized capacitive delta in [0,1]
    bool operator==(const TouchSample&) const = default;
};

struct TouchWindow {
    std::vector<TouchSample> samples;
    bool operator==(const TouchWindow&) const = default;
};

struct VitalsSample {
    TimeMs t_ms = 0;
    double heart_rate_bpm = 0.0;                  // valid range (20, 250)
    std::optional<double> eda_microsiemens;       // carried, never classified
    bool operator==(const VitalsSample&) const = default;
};

struct MotionFeatures {
    double mean_mag = 0.0;       // mean of accel magnitudes, m/s^2
    double std_mag = 0.0;        // population std of accel magnitudes
    double peak_mag = 0.0;       // max accel magnitude
    double mean_gyro_mag = 0.0;  // mean of gyro magnitudes, rad/s
    bool operator==(const MotionFeatures&) const = default;
};

enum class MotionClass { Calm, Active, Aggressive };
enum class TouchClass { NoTouch, Gentle, Harsh };
enum class AffectState { Negative, Neutral, Positive };

std::string_view to_string(MotionClass c);
std::string_view to_string(TouchClass c);
std::string_view to_string(AffectState a);
std::optional<MotionClass> motion_class_from(std::string_view name);
std::optional<TouchClass> touch_class_from(std::string_view name);
std::optional<AffectState> affect_from(std::string_view name);

struct ClassifierThresholds {
    double calm_max_std = 1.0;         // m/s^2
    double aggressive_min_std = 8.0;   // m/s^2
    double harsh_min_intensity = 0.8;
    double harsh_min_slope = 4.0;      // intensity units per second
    double gentle_min_intensity = 0.05;
    double hr_elevated_ratio = 1.2;
    bool operator==(const ClassifierThresholds&) const = default;
};

struct InteractionSummary {
    std::string device_id;
    TimeMs t_ms = 0;
    MotionClass motion = MotionClass::Calm;
    TouchClass touch = TouchClass::NoTouch;
    AffectState affect = AffectState::Neutral;
    bool operator==(const InteractionSummary&) const = default;
    bool same_classes(const InteractionSummary& o) const {
        return motion == o.motion && touch == o.touch && affect == o.affect;
    }
};

// Throws ValidationError on violated invariants.
void validate(const MotionWindow& w);
void validate(const TouchWindow& w);
void validate(const VitalsSample& v);
void validate(const ClassifierThresholds& th);

// Magnitudes are Euclidean norms, std is population (divide by N).
// Throws ValidationError for windows shorter than 2 samples.
MotionFeatures extract_motion_features(const MotionWindow& window);

MotionClass classify_motion(const MotionFeatures& features, const ClassifierThresholds& th);

// Empty window classifies NoTouch (not an error).
TouchClass classify_touch(const TouchWindow& window, const ClassifierThresholds& th);

// Rule table: Aggressive or Harsh -> Negative; else Calm and Gentle ->
// Positive; else Neutral; a Neutral verdict is lifted to Negative when the
// heart rate exceeds hr_elevated_ratio * baseline. Vitals without a baseline
// is a ConfigError.
AffectState estimate_affect(MotionClass motion, TouchClass touch,
                            const std::optional<VitalsSample>& vitals,
                            std::optional<double> baseline_hr_bpm,
                            const ClassifierThresholds& th);

InteractionSummary summarize(std::string device_id, TimeMs t_ms, MotionClass motion,
                             TouchClass touch, AffectState affect);

}  // namespace tangtoys::sensing
