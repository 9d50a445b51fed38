#include "tangtoys/feedback.hpp"

#include <cmath>

#include "tangtoys/errors.hpp"
#include "tangtoys/strutil.hpp"

namespace tangtoys::feedback {

std::string_view to_string(HapticPatternId id) {
    switch (id) {
        case HapticPatternId::None: return "None";
        case HapticPatternId::SoftShort: return "SoftShort";
        case HapticPatternId::Subtle: return "Subtle";
        case HapticPatternId::Pronounced: return "Pronounced";
        case HapticPatternId::ProlongedSharp: return "ProlongedSharp";
    }
    return "?";
}

std::optional<HapticPatternId> pattern_from(std::string_view name) {
    if (name == "None") return HapticPatternId::None;
    if (name == "SoftShort") return HapticPatternId::SoftShort;
    if (name == "Subtle") return HapticPatternId::Subtle;
    if (name == "Pronounced") return HapticPatternId::Pronounced;
    if (name == "ProlongedSharp") return HapticPatternId::ProlongedSharp;
    return std::nullopt;
}

std::string_view to_string(FeedbackCause c) {
    switch (c) {
        case FeedbackCause::PartnerInteraction: return "PartnerInteraction";
        case FeedbackCause::Presence: return "Presence";
    }
    return "?";
}

std::optional<FeedbackCause> cause_from(std::string_view name) {
    if (name == "PartnerInteraction") return FeedbackCause::PartnerInteraction;
    if (name == "Presence") return FeedbackCause::Presence;
    return std::nullopt;
}

void validate(const HapticPattern& p) {
    if ((p.id == HapticPatternId::None) != (p.repetitions == 0)) {
        throw ConfigError("haptic pattern: None and repetitions == 0 imply each other");
    }
    if (!std::isfinite(p.amplitude) || p.amplitude < 0.0 || p.amplitude > 1.0) {
        throw ConfigError("haptic pattern: amplitude outside [0,1]");
    }
    if (p.pulse_ms <= 0) throw ConfigError("haptic pattern: pulse_ms must be > 0");
    if (p.gap_ms < 0) throw ConfigError("haptic pattern: gap_ms must be >= 0");
    if (p.repetitions < 0) throw ConfigError("haptic pattern: repetitions must be >= 0");
}

void validate(const LedColor& c) {
    for (int v : {c.r, c.g, c.b}) {
        if (v < 0 || v > 255) throw ConfigError("led color: channels must be 0-255");
    }
}

FeedbackPolicy FeedbackPolicy::defaults() {
    FeedbackPolicy p;
    p.partner_alert = {{HapticPatternId::ProlongedSharp, 1.0, 500, 100, 3}, {255, 0, 0}};
    p.partner_comfort = {{HapticPatternId::SoftShort, 0.3, 150, 0, 1}, {0, 128, 0}};
    p.presence_one = {{HapticPatternId::Subtle, 0.3, 150, 0, 1}, {0, 0, 255}};
    p.presence_many = {{HapticPatternId::Pronounced, 0.8, 300, 100, 3}, {0, 255, 0}};
    return p;
}

void validate(const FeedbackPolicy& policy) {
    for (const PolicyEntry* e : {&policy.partner_alert, &policy.partner_comfort,
                                 &policy.presence_one, &policy.presence_many}) {
        validate(e->haptic);
        validate(e->led);
    }
    if (policy.partner_alert.haptic.id != HapticPatternId::ProlongedSharp ||
        !(policy.partner_alert.led == LedColor{255, 0, 0})) {
        throw ConfigError(
            "policy: the aggressive/harsh partner entry must stay ProlongedSharp with a red LED");
    }
    if (policy.presence_one.haptic.amplitude > policy.presence_many.haptic.amplitude) {
        throw ConfigError("policy: presence amplitude must be non-decreasing in neighbor count");
    }
    if (policy.led_hold_ms < 0) throw ConfigError("policy: led_hold_ms must be >= 0");
}

int presence_band(int neighbor_count) {
    if (neighbor_count <= 0) return 0;
    return neighbor_count == 1 ? 1 : 2;
}

namespace {

std::optional<FeedbackCommand> make_command(const PolicyEntry& entry, FeedbackCause cause,
                                            TimeMs now_ms, TimeMs led_hold_ms) {
    if (entry.is_silent()) return std::nullopt;
    return FeedbackCommand{entry.haptic, entry.led, cause, now_ms, led_hold_ms};
}

}  // namespace

std::optional<FeedbackCommand> map_partner_feedback(const sensing::InteractionSummary& summary,
                                                    const FeedbackPolicy& policy, TimeMs now_ms) {
    if (summary.motion == sensing::MotionClass::Aggressive ||
        summary.touch == sensing::TouchClass::Harsh) {
        return make_command(policy.partner_alert, FeedbackCause::PartnerInteraction, now_ms,
                            policy.led_hold_ms);
    }
    if (summary.motion == sensing::MotionClass::Calm &&
        summary.touch == sensing::TouchClass::Gentle) {
        return make_command(policy.partner_comfort, FeedbackCause::PartnerInteraction, now_ms,
                            policy.led_hold_ms);
    }
    return std::nullopt;
}

std::optional<FeedbackCommand> map_presence_feedback(int neighbor_count, int previous_count,
                                                     const FeedbackPolicy& policy,
                                                     TimeMs now_ms) {
    if (neighbor_count < 0 || previous_count < 0) {
        throw ValidationError("presence feedback: counts must be >= 0");
    }
    const int band = presence_band(neighbor_count);
    if (band == presence_band(previous_count)) return std::nullopt;
    if (band == 0) return std::nullopt;
    const PolicyEntry& entry = band == 1 ? policy.presence_one : policy.presence_many;
    return make_command(entry, FeedbackCause::Presence, now_ms, policy.led_hold_ms);
}

std::vector<Pulse> render_pattern(const HapticPattern& p) {
    validate(p);
    std::vector<Pulse> timeline;
    timeline.reserve(static_cast<std::size_t>(p.repetitions));
    TimeMs start = 0;
    for (int k = 0; k < p.repetitions; ++k) {
        timeline.push_back({start, p.pulse_ms, p.amplitude});
        start += p.pulse_ms + p.gap_ms;
    }
    return timeline;
}

// --- policy config ----------------------------------------------------------

namespace {

const char* entry_prefix(int i) {
    switch (i) {
        case 0: return "partner.aggressive";
        case 1: return "partner.calm";
        case 2: return "presence.one";
        default: return "presence.many";
    }
}

PolicyEntry* entry_by_index(FeedbackPolicy& p, int i) {
    switch (i) {
        case 0: return &p.partner_alert;
        case 1: return &p.partner_comfort;
        case 2: return &p.presence_one;
        default: return &p.presence_many;
    }
}

const PolicyEntry* entry_by_index(const FeedbackPolicy& p, int i) {
    return entry_by_index(const_cast<FeedbackPolicy&>(p), i);
}

double need_double(const std::string& key, const std::string& value) {
    auto v = strutil::parse_double(value);
    if (!v) throw ConfigError("config key " + key + ": not a number: " + value);
    return *v;
}

std::int64_t need_int(const std::string& key, const std::string& value) {
    auto v = strutil::parse_int(value);
    if (!v) throw ConfigError("config key " + key + ": not an integer: " + value);
    return *v;
}

}  // namespace

std::map<std::string, std::string> policy_to_config(const FeedbackPolicy& policy) {
    std::map<std::string, std::string> kv;
    for (int i = 0; i < 4; ++i) {
        const std::string prefix = entry_prefix(i);
        const PolicyEntry& e = *entry_by_index(policy, i);
        kv[prefix + ".haptic.pattern"] = std::string(to_string(e.haptic.id));
        kv[prefix + ".haptic.amplitude"] = strutil::format_double(e.haptic.amplitude);
        kv[prefix + ".haptic.pulse_ms"] = std::to_string(e.haptic.pulse_ms);
        kv[prefix + ".haptic.gap_ms"] = std::to_string(e.haptic.gap_ms);
        kv[prefix + ".haptic.repetitions"] = std::to_string(e.haptic.repetitions);
        kv[prefix + ".led.r"] = std::to_string(e.led.r);
        kv[prefix + ".led.g"] = std::to_string(e.led.g);
        kv[prefix + ".led.b"] = std::to_string(e.led.b);
    }
    kv["feedback.led_hold_ms"] = std::to_string(policy.led_hold_ms);
    return kv;
}

bool is_policy_key(std::string_view key) {
    if (key == "feedback.led_hold_ms") return true;
    for (int i = 0; i < 4; ++i) {
        const std::string prefix = entry_prefix(i);
        for (const char* suffix :
             {".haptic.pattern", ".haptic.amplitude", ".haptic.pulse_ms", ".haptic.gap_ms",
              ".haptic.repetitions", ".led.r", ".led.g", ".led.b"}) {
            if (key == prefix + suffix) return true;
        }
    }
    return false;
}

FeedbackPolicy policy_from_config(const std::map<std::string, std::string>& kv) {
    FeedbackPolicy policy = FeedbackPolicy::defaults();
    for (int i = 0; i < 4; ++i) {
        const std::string prefix = entry_prefix(i);
        PolicyEntry& e = *entry_by_index(policy, i);
        if (auto it = kv.find(prefix + ".haptic.pattern"); it != kv.end()) {
            auto id = pattern_from(it->second);
            if (!id) throw ConfigError("config key " + it->first + ": unknown pattern " + it->second);
            e.haptic.id = *id;
        }
        if (auto it = kv.find(prefix + ".haptic.amplitude"); it != kv.end()) {
            e.haptic.amplitude = need_double(it->first, it->second);
        }
        if (auto it = kv.find(prefix + ".haptic.pulse_ms"); it != kv.end()) {
            e.haptic.pulse_ms = need_int(it->first, it->second);
        }
        if (auto it = kv.find(prefix + ".haptic.gap_ms"); it != kv.end()) {
            e.haptic.gap_ms = need_int(it->first, it->second);
        }
        if (auto it = kv.find(prefix + ".haptic.repetitions"); it != kv.end()) {
            e.haptic.repetitions = static_cast<int>(need_int(it->first, it->second));
        }
        if (auto it = kv.find(prefix + ".led.r"); it != kv.end()) {
            e.led.r = static_cast<int>(need_int(it->first, it->second));
        }
        if (auto it = kv.find(prefix + ".led.g"); it != kv.end()) {
            e.led.g = static_cast<int>(need_int(it->first, it->second));
        }
        if (auto it = kv.find(prefix + ".led.b"); it != kv.end()) {
            e.led.b = static_cast<int>(need_int(it->first, it->second));
        }
    }
    if (auto it = kv.find("feedback.led_hold_ms"); it != kv.end()) {
        policy.led_hold_ms = need_int(it->first, it->second);
    }
    validate(policy);
    return policy;
}

}  // namespace tangtoys::feedback
