#pragma once

#include <cstdint>
#include <map>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "tangtoys/sensing.hpp"

// Maps partner interaction summaries and neighbor-count changes to haptic
// patterns and LED colors, and renders haptic patterns to pulse timelines.

namespace tangtoys::feedback {

using TimeMs = std::int64_t;

enum class HapticPatternId { None, SoftShort, Subtle, Pronounced, ProlongedSharp };

std::string_view to_string(HapticPatternId id);
std::optional<HapticPatternId> pattern_from(std::string_view name);

struct HapticPattern {
    HapticPatternId id = HapticPatternId::None;
    double amplitude = 0.0;  // [0,1]
    TimeMs pulse_ms = 1;     // > 0
    TimeMs gap_ms = 0;       // >= 0
    int repetitions = 0;     // None <=> repetitions == 0

    static HapticPattern none() { return {}; }
    bool is_none() const { return id == HapticPatternId::None; }
    bool operator==(const HapticPattern&) const = default;
};

void validate(const HapticPattern& p);

struct LedColor {
    int r = 0;
    int g = 0;
    int b = 0;

    static LedColor off() { return {}; }
    bool is_off() const { return r == 0 && g == 0 && b == 0; }
    bool operator==(const LedColor&) const = default;
};

void validate(const LedColor& c);

enum class FeedbackCause { PartnerInteraction, Presence };

std::string_view to_string(FeedbackCause c);
std::optional<FeedbackCause> cause_from(std::string_view name);

struct FeedbackCommand {
    HapticPattern haptic;
    LedColor led;
    FeedbackCause cause = FeedbackCause::PartnerInteraction;
    TimeMs t_ms = 0;            // issue time
    TimeMs led_hold_ms = 2000;  // LED returns to off after this long

    // A command with no haptic pattern and the LED off carries nothing and
    // is suppressed before it is ever emitted.
    bool is_empty() const { return haptic.is_none() && led.is_off(); }
    bool operator==(const FeedbackCommand&) const = default;
};

// One palette entry; haptic None + LED off means "stay silent".
struct PolicyEntry {
    HapticPattern haptic;
    LedColor led;
    bool is_silent() const { return haptic.is_none() && led.is_off(); }
    bool operator==(const PolicyEntry&) const = default;
};

struct FeedbackPolicy {
    PolicyEntry partner_alert;    // partner motion Aggressive OR touch Harsh
    PolicyEntry partner_comfort;  // partner motion Calm AND touch Gentle
    PolicyEntry presence_one;     // neighbor count band == 1
    PolicyEntry presence_many;    // neighbor count band >= 2
    TimeMs led_hold_ms = 2000;

    static FeedbackPolicy defaults();
    bool operator==(const FeedbackPolicy&) const = default;
};

// Enforces the policy invariants: the alert entry must be ProlongedSharp
// with a pure red LED, and presence amplitude may not decrease with the
// neighbor count. Throws ConfigError.
void validate(const FeedbackPolicy& policy);

// Neighbor counts collapse to bands 0, 1, >=2.
int presence_band(int neighbor_count);

std::optional<FeedbackCommand> map_partner_feedback(const sensing::InteractionSummary& summary,
                                                    const FeedbackPolicy& policy,
                                                    TimeMs now_ms = 0);

// Emits only when the band changes; the target band selects the entry
// (band 0 is silent, so departures to zero produce nothing).
std::optional<FeedbackCommand> map_presence_feedback(int neighbor_count, int previous_count,
                                                     const FeedbackPolicy& policy,
                                                     TimeMs now_ms = 0);

struct Pulse {
    TimeMs start_ms = 0;
    TimeMs duration_ms = 0;
    double amplitude = 0.0;
    bool operator==(const Pulse&) const = default;
};

// repetitions pulses of pulse_ms separated by gap_ms, starting at 0.
// Total span = reps*pulse + (reps-1)*gap for reps >= 1.
std::vector<Pulse> render_pattern(const HapticPattern& p);

// Flat key-value serialization of a policy (e.g.
// "partner.aggressive.haptic.amplitude=1.0"); loading applies overrides on
// top of the defaults and validates the result.
std::map<std::string, std::string> policy_to_config(const FeedbackPolicy& policy);
FeedbackPolicy policy_from_config(const std::map<std::string, std::string>& kv);

// Keys recognized by policy_from_config.
bool is_policy_key(std::string_view key);

}  // namespace tangtoys::feedback
