#pragma once

#include <hurwitz/elsv.hpp>
#include <hurwitz/engines.hpp>
#include <hurwitz/rational.hpp>
#include <hurwitz/report.hpp>

#include <json.hpp>

#include <fstream>
#include <istream>
#include <map>
#include <optional>
#include <ostream>
#include <string>
#include <tuple>
#include <vector>

namespace hurwitz {

// Line-delimited records. Every rational is a string "num/den" (or "num"
// when the denominator is 1); field order is fixed so output is
// byte-reproducible.

using Json = nlohmann::ordered_json;

inline constexpr int kCacheSchemaVersion = 1;
inline constexpr const char* kCacheSchemaName = "hurwitz-cache";

inline Json hodge_record(const HodgeKey& key, const Rational& value) {
    Json j;
    j["g"] = key.genus;
    j["n"] = key.points;
    j["b"] = key.psi;
    j["j"] = key.lambda_index;
    j["value"] = to_string(value);
    return j;
}

/// One JSON object per line, in table key order.
inline void write_hodge_records(std::ostream& out, const HodgeTable& table) {
    for (const auto& [key, value] : table.values()) out << hodge_record(key, value).dump() << '\n';
}

/// Tab-separated: g, n, b (comma separated), j, value.
inline void write_hodge_flat(std::ostream& out, const HodgeTable& table) {
    for (const auto& [key, value] : table.values()) {
        out << key.genus << '\t' << key.points << '\t';
        for (std::size_t i = 0; i < key.psi.size(); ++i) out << (i ? "," : "") << key.psi[i];
        out << '\t' << key.lambda_index << '\t' << to_string(value) << '\n';
    }
}

inline HodgeTable read_hodge_records(std::istream& in) {
    HodgeTable table;
    std::string line;
    while (std::getline(in, line)) {
        if (line.empty()) continue;
        Json j = Json::parse(line);
        table.set(HodgeKey(j.at("g").get<int>(), j.at("n").get<int>(), j.at("b").get<std::vector<int>>(),
                           j.at("j").get<int>()),
                  parse_rational(j.at("value").get<std::string>()));
    }
    return table;
}

inline Json check_record(const CheckRecord& c) {
    Json j;
    j["suite"] = c.suite;
    j["key"] = c.key;
    j["expected"] = c.expected;
    j["actual"] = c.actual;
    j["status"] = c.pass ? "pass" : "fail";
    return j;
}

inline void write_report(std::ostream& out, const Report& report) {
    for (const auto& c : report.checks) out << check_record(c).dump() << '\n';
}

// ---------------------------------------------------------------------------
// Result cache.

class CacheVersionMismatch : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

/// kind is "hurwitz", "hodge" or "degll". Hurwitz and degll records carry
/// (g, profile); hodge records carry (g, n, b, j).
struct CacheRecord {
    std::string kind;
    int genus = 0;
    std::vector<int> profile;
    int points = 0;
    std::vector<int> psi;
    int lambda_index = 0;
    Rational value;
    std::string engine;
    int version = kCacheSchemaVersion;

    static CacheRecord hurwitz(int g, const Partition& mu, const Rational& v, Engine e) {
        CacheRecord r;
        r.kind = "hurwitz";
        r.genus = g;
        r.profile = mu.parts();
        r.value = v;
        r.engine = std::string(engine_name(e));
        return r;
    }
    static CacheRecord degll(int g, const Partition& mu, const Rational& v) {
        CacheRecord r;
        r.kind = "degll";
        r.genus = g;
        r.profile = mu.parts();
        r.value = v;
        r.engine = "frobenius";
        return r;
    }
    static CacheRecord hodge(const HodgeKey& key, const Rational& v) {
        CacheRecord r;
        r.kind = "hodge";
        r.genus = key.genus;
        r.points = key.points;
        r.psi = key.psi;
        r.lambda_index = key.lambda_index;
        r.value = v;
        r.engine = "elsv-extract";
        return r;
    }

    /// Identity of the computed quantity, excluding the value.
    std::string key() const {
        Json j;
        j["kind"] = kind;
        j["g"] = genus;
        if (kind == "hodge") {
            j["n"] = points;
            j["b"] = psi;
            j["j"] = lambda_index;
        } else {
            j["profile"] = profile;
        }
        j["engine"] = engine;
        return j.dump();
    }

    Json to_json() const {
        Json j;
        j["kind"] = kind;
        j["g"] = genus;
        if (kind == "hodge") {
            j["n"] = points;
            j["b"] = psi;
            j["j"] = lambda_index;
        } else {
            j["profile"] = profile;
        }
        j["value"] = to_string(value);
        j["engine"] = engine;
        j["version"] = version;
        return j;
    }

    static CacheRecord from_json(const Json& j) {
        CacheRecord r;
        r.kind = j.at("kind").get<std::string>();
        if (r.kind != "hurwitz" && r.kind != "hodge" && r.kind != "degll") {
            throw InvalidInput("unknown cache record kind '" + r.kind + "'");
        }
        r.genus = j.at("g").get<int>();
        if (r.kind == "hodge") {
            r.points = j.at("n").get<int>();
            r.psi = j.at("b").get<std::vector<int>>();
            r.lambda_index = j.at("j").get<int>();
        } else {
            r.profile = Partition(j.at("profile").get<std::vector<int>>()).parts();
        }
        r.value = parse_rational(j.at("value").get<std::string>());
        r.engine = j.at("engine").get<std::string>();
        r.version = j.at("version").get<int>();
        if (r.version != kCacheSchemaVersion) {
            throw CacheVersionMismatch("cache record has schema version " + std::to_string(r.version) +
                                       ", expected " + std::to_string(kCacheSchemaVersion));
        }
        return r;
    }
};

inline Json cache_header() {
    Json j;
    j["schema"] = kCacheSchemaName;
    j["version"] = kCacheSchemaVersion;
    return j;
}

/// Append-only cache file: a header line, then one CacheRecord per line.
/// An empty or missing file is initialized with the header on first write.
class ResultCache {
public:
    ResultCache() = default;
    explicit ResultCache(std::string path) : path_(std::move(path)) { load(); }

    bool enabled() const noexcept { return !path_.empty(); }

    std::optional<Rational> find(const CacheRecord& probe) const {
        auto it = records_.find(probe.key());
        if (it == records_.end()) return std::nullopt;
        return it->second.value;
    }

    /// Appends unless an identical key is already present. A stored value
    /// that differs from the new one is a consistency failure.
    void put(const CacheRecord& record) {
        if (!enabled()) return;
        const std::string key = record.key();
        if (auto it = records_.find(key); it != records_.end()) {
            if (it->second.value != record.value) {
                throw ConsistencyFailure("cache holds " + to_string(it->second.value) + " but recomputed " +
                                         to_string(record.value) + " for " + key);
            }
            return;
        }
        std::ofstream out(path_, std::ios::app);
        if (!out) throw std::runtime_error("cannot append to cache file " + path_);
        if (!has_header_) {
            out << cache_header().dump() << '\n';
            has_header_ = true;
        }
        out << record.to_json().dump() << '\n';
        records_.emplace(key, record);
        order_.push_back(key);
    }

    /// Records in file order.
    std::vector<CacheRecord> records() const {
        std::vector<CacheRecord> out;
        for (const auto& k : order_) out.push_back(records_.at(k));
        return out;
    }

private:
    void load() {
        std::ifstream in(path_);
        if (!in) return;
        std::string line;
        bool first = true;
        while (std::getline(in, line)) {
            if (line.empty()) continue;
            Json j = Json::parse(line);
            if (first) {
                first = false;
                if (!j.contains("schema") || j.at("schema") != kCacheSchemaName) {
                    throw CacheVersionMismatch("cache file " + path_ + " has no schema header");
                }
                if (j.at("version").get<int>() != kCacheSchemaVersion) {
                    throw CacheVersionMismatch("cache file " + path_ + " has schema version " +
                                               std::to_string(j.at("version").get<int>()) + ", expected " +
                                               std::to_string(kCacheSchemaVersion));
                }
                has_header_ = true;
                continue;
            }
            CacheRecord r = CacheRecord::from_json(j);
            std::string key = r.key();
            if (records_.emplace(key, r).second) order_.push_back(key);
        }
    }

    std::string path_;
    bool has_header_ = false;
    std::map<std::string, CacheRecord> records_;
    std::vector<std::string> order_;
};

}  // namespace hurwitz
