#include "tangtoys/radio_sim.hpp"

#include <algorithm>
#include <cmath>

#include "tangtoys/errors.hpp"
#include "tangtoys/kernels.hpp"
#include "tangtoys/strutil.hpp"

namespace tangtoys::radio {

void validate(const RadioConfig& cfg) {
    if (!(cfg.range_m > 0.0) || !std::isfinite(cfg.range_m)) {
        throw ValidationError("radio config: range_m must be positive");
    }
    if (cfg.adv_interval_ms <= 0) {
        throw ValidationError("radio config: adv_interval_ms must be positive");
    }
    if (!(cfg.loss_prob >= 0.0) || !(cfg.loss_prob < 1.0)) {
        throw ValidationError("radio config: loss_prob must be in [0,1)");
    }
    if (cfg.neighbor_ttl_ms <= 0) {
        throw ValidationError("radio config: neighbor_ttl_ms must be positive");
    }
}

const std::string& packet_sender(const Packet& p) {
    return std::visit([](const auto& x) -> const std::string& { return x.sender_id; }, p);
}

double distance(const Position& a, const Position& b) {
    const double dx = a.x - b.x;
    const double dy = a.y - b.y;
    return std::sqrt(dx * dx + dy * dy);
}

bool in_range(const Position& a, const Position& b, double range_m) {
    return distance(a, b) <= range_m;
}

double rssi_model(double distance_m) {
    if (distance_m < 0.0 || !std::isfinite(distance_m)) {
        throw ValidationError("rssi_model: distance must be non-negative");
    }
    const double d = std::max(distance_m, 0.1);
    return -40.0 - 20.0 * kernels::det_log10(d);
}

namespace {

// Uniform in [0,1) from the top 53 bits; the obvious route through
// std::uniform_real_distribution is not portable across standard libraries.
double next_uniform(std::mt19937_64& rng) {
    return static_cast<double>(rng() >> 11) * 0x1.0p-53;
}

}  // namespace

std::vector<Delivery> deliver(const Packet& packet,
                              const std::map<std::string, Position>& positions,
                              const RadioConfig& cfg, std::mt19937_64& rng) {
    validate(cfg);
    const std::string& sender = packet_sender(packet);
    auto sender_it = positions.find(sender);
    if (sender_it == positions.end()) {
        throw ValidationError("deliver: sender not registered: " + sender);
    }
    const Position& from = sender_it->second;

    std::vector<Delivery> out;
    auto try_deliver = [&](const std::string& receiver_id, const Position& to) {
        const double d = distance(from, to);
        if (d > cfg.range_m) return;
        if (next_uniform(rng) < cfg.loss_prob) return;
        out.push_back({receiver_id, rssi_model(d)});
    };

    if (std::holds_alternative<Advertisement>(packet)) {
        // std::map iterates in ascending id order, which fixes the draw order.
        for (const auto& [id, pos] : positions) {
            if (id == sender) continue;
            try_deliver(id, pos);
        }
    } else {
        const DataFrame& frame = std::get<DataFrame>(packet);
        auto it = positions.find(frame.receiver_id);
        if (it != positions.end()) try_deliver(it->first, it->second);
    }
    return out;
}

NeighborTable update_neighbors(NeighborTable table, const Advertisement& adv, double rssi_dbm,
                               TimeMs now_ms) {
    auto it = std::lower_bound(table.begin(), table.end(), adv.sender_id,
                               [](const NeighborEntry& e, const std::string& id) {
                                   return e.neighbor_id < id;
                               });
    if (it != table.end() && it->neighbor_id == adv.sender_id) {
        it->last_seen_ms = now_ms;
        it->rssi_dbm = rssi_dbm;
    } else {
        table.insert(it, {adv.sender_id, now_ms, rssi_dbm});
    }
    return table;
}

NeighborTable prune_neighbors(NeighborTable table, TimeMs now_ms, TimeMs ttl_ms) {
    std::erase_if(table, [&](const NeighborEntry& e) {
        return now_ms - e.last_seen_ms > ttl_ms;
    });
    return table;
}

std::string encode(const Advertisement& adv) {
    std::string line = "ADV," + adv.sender_id + ',' + std::to_string(adv.seq) + ',' +
                       std::to_string(adv.t_ms);
    if (adv.affect) {
        line += ',';
        line += sensing::to_string(*adv.affect);
    }
    return line;
}

std::string encode(const DataFrame& frame) {
    std::string line = "DAT," + frame.sender_id + ',' + frame.receiver_id + ',' +
                       std::to_string(frame.t_ms) + ',';
    line += sensing::to_string(frame.payload.motion);
    line += ',';
    line += sensing::to_string(frame.payload.touch);
    line += ',';
    line += sensing::to_string(frame.payload.affect);
    return line;
}

std::string encode(const Packet& packet) {
    return std::visit([](const auto& p) { return encode(p); }, packet);
}

Packet decode_packet(std::string_view line) {
    const auto fields = strutil::split(line, ',');
    if (fields.empty()) throw ParseError(1, "empty packet line");

    if (fields[0] == "ADV") {
        if (fields.size() != 4 && fields.size() != 5) {
            throw ParseError(1, "ADV packet needs 4 or 5 fields");
        }
        Advertisement adv;
        adv.sender_id = std::string(fields[1]);
        if (adv.sender_id.empty()) throw ParseError(1, "ADV packet: empty sender");
        auto seq = strutil::parse_uint(fields[2]);
        auto t = strutil::parse_int(fields[3]);
        if (!seq || !t) throw ParseError(1, "ADV packet: bad seq or t_ms");
        adv.seq = *seq;
        adv.t_ms = *t;
        if (fields.size() == 5) {
            auto affect = sensing::affect_from(fields[4]);
            if (!affect) throw ParseError(1, "ADV packet: unknown affect");
            adv.affect = *affect;
        }
        return adv;
    }

    if (fields[0] == "DAT") {
        if (fields.size() != 7) throw ParseError(1, "DAT packet needs 7 fields");
        DataFrame frame;
        frame.sender_id = std::string(fields[1]);
        frame.receiver_id = std::string(fields[2]);
        if (frame.sender_id.empty() || frame.receiver_id.empty()) {
            throw ParseError(1, "DAT packet: empty sender or receiver");
        }
        auto t = strutil::parse_int(fields[3]);
        auto motion = sensing::motion_class_from(fields[4]);
        auto touch = sensing::touch_class_from(fields[5]);
        auto affect = sensing::affect_from(fields[6]);
        if (!t || !motion || !touch || !affect) {
            throw ParseError(1, "DAT packet: bad time or class field");
        }
        frame.t_ms = *t;
        frame.payload = {frame.sender_id, *t, *motion, *touch, *affect};
        return frame;
    }

    throw ParseError(1, "unknown packet tag: " + std::string(fields[0]));
}

}  // namespace tangtoys::radio
