#include "tangtoys/sensing.hpp"

#include <cmath>
#include <vector>

#include "tangtoys/errors.hpp"
#include "tangtoys/kernels.hpp"

namespace tangtoys::sensing {

std::string_view to_string(MotionClass c) {
    switch (c) {
        case MotionClass::Calm: return "Calm";
        case MotionClass::Active: return "Active";
        case MotionClass::Aggressive: return "Aggressive";
    }
    return "?";
}

std::string_view to_string(TouchClass c) {
    switch (c) {
        case TouchClass::NoTouch: return "NoTouch";
        case TouchClass::Gentle: return "Gentle";
        case TouchClass::Harsh: return "Harsh";
    }
    return "?";
}

std::string_view to_string(AffectState a) {
    switch (a) {
        case AffectState::Negative: return "Negative";
        case AffectState::Neutral: return "Neutral";
        case AffectState::Positive: return "Positive";
    }
    return "?";
}

std::optional<MotionClass> motion_class_from(std::string_view name) {
    if (name == "Calm") return MotionClass::Calm;
    if (name == "Active") return MotionClass::Active;
    if (name == "Aggressive") return MotionClass::Aggressive;
    return std::nullopt;
}

std::optional<TouchClass> touch_class_from(std::string_view name) {
    if (name == "NoTouch") return TouchClass::NoTouch;
    if (name == "Gentle") return TouchClass::Gentle;
    if (name == "Harsh") return TouchClass::Harsh;
    return std::nullopt;
}

std::optional<AffectState> affect_from(std::string_view name) {
    if (name == "Negative") return AffectState::Negative;
    if (name == "Neutral") return AffectState::Neutral;
    if (name == "Positive") return AffectState::Positive;
    return std::nullopt;
}

namespace {

bool finite(const Vec3& v) {
    return std::isfinite(v.x) && std::isfinite(v.y) && std::isfinite(v.z);
}

}  // namespace

void validate(const MotionWindow& w) {
    TimeMs prev = 0;
    bool first = true;
    for (const MotionSample& s : w.samples) {
        if (!finite(s.accel) || !finite(s.gyro) || !finite(s.mag)) {
            throw ValidationError("motion window: non-finite sample component");
        }
        if (!first && s.t_ms <= prev) {
            throw ValidationError("motion window: timestamps must be strictly increasing");
        }
        prev = s.t_ms;
        first = false;
    }
    if (!(w.nominal_rate_hz > 0.0) || !std::isfinite(w.nominal_rate_hz)) {
        throw ValidationError("motion window: nominal rate must be positive");
    }
}

void validate(const TouchWindow& w) {
    TimeMs prev = 0;
    bool first = true;
    for (const TouchSample& s : w.samples) {
        if (!std::isfinite(s.intensity) || s.intensity < 0.0 || s.intensity > 1.0) {
            throw ValidationError("touch window: intensity outside [0,1]");
        }
        if (!first && s.t_ms <= prev) {
            throw ValidationError("touch window: timestamps must be strictly increasing");
        }
        prev = s.t_ms;
        first = false;
    }
}

void validate(const VitalsSample& v) {
    if (!std::isfinite(v.heart_rate_bpm) || v.heart_rate_bpm <= 20.0 ||
        v.heart_rate_bpm >= 250.0) {
        throw ValidationError("vitals: heart rate outside (20, 250) bpm, rejected as sensor fault");
    }
    if (v.eda_microsiemens && (!std::isfinite(*v.eda_microsiemens) || *v.eda_microsiemens < 0.0)) {
        throw ValidationError("vitals: EDA must be non-negative");
    }
}

void validate(const ClassifierThresholds& th) {
    if (!(th.calm_max_std > 0.0) || !(th.calm_max_std < th.aggressive_min_std)) {
        throw ValidationError("thresholds: require 0 < calm_max_std < aggressive_min_std");
    }
    if (!(th.gentle_min_intensity > 0.0) ||
        !(th.gentle_min_intensity < th.harsh_min_intensity) ||
        !(th.harsh_min_intensity <= 1.0)) {
        throw ValidationError(
            "thresholds: require 0 < gentle_min_intensity < harsh_min_intensity <= 1");
    }
    if (!(th.harsh_min_slope > 0.0) || !(th.hr_elevated_ratio > 0.0)) {
        throw ValidationError("thresholds: slopes and ratios must be positive");
    }
}

MotionFeatures extract_motion_features(const MotionWindow& window) {
    validate(window);
    const std::size_t n = window.samples.size();
    if (n < 2) {
        throw ValidationError("motion window: need at least 2 samples for feature extraction");
    }

    std::vector<double> ax(n), ay(n), az(n), gx(n), gy(n), gz(n);
    for (std::size_t i = 0; i < n; ++i) {
        const MotionSample& s = window.samples[i];
        ax[i] = s.accel.x;
        ay[i] = s.accel.y;
        az[i] = s.accel.z;
        gx[i] = s.gyro.x;
        gy[i] = s.gyro.y;
        gz[i] = s.gyro.z;
    }

    std::vector<double> norms(n);
    kernels::vector_norms(ax, ay, az, norms);
    const kernels::Moments accel = kernels::moments(norms);

    kernels::vector_norms(gx, gy, gz, norms);
    const double gyro_mean = kernels::mean(norms);

    return {accel.mean, accel.std_pop, accel.max, gyro_mean};
}

MotionClass classify_motion(const MotionFeatures& features, const ClassifierThresholds& th) {
    validate(th);
    if (features.std_mag < th.calm_max_std) return MotionClass::Calm;
    if (features.std_mag >= th.aggressive_min_std) return MotionClass::Aggressive;
    return MotionClass::Active;
}

TouchClass classify_touch(const TouchWindow& window, const ClassifierThresholds& th) {
    validate(th);
    validate(window);
    if (window.samples.empty()) return TouchClass::NoTouch;

    double max_intensity = 0.0;
    double max_slope = 0.0;
    for (std::size_t i = 0; i < window.samples.size(); ++i) {
        max_intensity = std::max(max_intensity, window.samples[i].intensity);
        if (i > 0) {
            const double di = window.samples[i].intensity - window.samples[i - 1].intensity;
            const double dt_s =
                static_cast<double>(window.samples[i].t_ms - window.samples[i - 1].t_ms) / 1000.0;
            max_slope = std::max(max_slope, di / dt_s);
        }
    }

    if (max_intensity < th.gentle_min_intensity) return TouchClass::NoTouch;
    if (max_intensity >= th.harsh_min_intensity && max_slope >= th.harsh_min_slope) {
        return TouchClass::Harsh;
    }
    return TouchClass::Gentle;
}

AffectState estimate_affect(MotionClass motion, TouchClass touch,
                            const std::optional<VitalsSample>& vitals,
                            std::optional<double> baseline_hr_bpm,
                            const ClassifierThresholds& th) {
    validate(th);
    if (vitals && !baseline_hr_bpm) {
        throw ConfigError("estimate_affect: vitals supplied without a baseline heart rate");
    }
    if (vitals) validate(*vitals);

    if (motion == MotionClass::Aggressive || touch == TouchClass::Harsh) {
        return AffectState::Negative;
    }
    if (motion == MotionClass::Calm && touch == TouchClass::Gentle) {
        return AffectState::Positive;
    }
    if (vitals && vitals->heart_rate_bpm > th.hr_elevated_ratio * *baseline_hr_bpm) {
        return AffectState::Negative;
    }
    return AffectState::Neutral;
}

InteractionSummary summarize(std::string device_id, TimeMs t_ms, MotionClass motion,
                             TouchClass touch, AffectState affect) {
    return {std::move(device_id), t_ms, motion, touch, affect};
}

}  // namespace tangtoys::sensing
