// Copyright 2026 The blockge Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//     http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#include "blockge/synth.hpp"

#include "blockge/error.hpp"
#include "parallel.hpp"

#include <json.hpp>

#include <cmath>
#include <cstdio>
#include <random>

namespace blockge::synth {

namespace fs = std::filesystem;
using ojson = nlohmann::ordered_json;

std::uint64_t splitmix64(std::uint64_t x) noexcept {
    x += 0x9E3779B97F4A7C15ull;
    x = (x ^ (x >> 30)) * 0xBF58476D1CE4E5B9ull;
    x = (x ^ (x >> 27)) * 0x94D049BB133111EBull;
    return x ^ (x >> 31);
}

std::string Config::segment_id(std::size_t index) const {
    if(!segments[index].id.empty())
        return segments[index].id;
    char buf[32];
    std::snprintf(buf, sizeof buf, "seg%02zu", index);
    return buf;
}

void Config::validate() const {
    auto fail = [](const std::string& msg, const std::string& where = {}) {
        throw Error(ErrorCode::InvalidArgument, msg, where);
    };
    if(height == 0 || width == 0)
        fail("frame size must be >= 1");
    if(normal_blob == 0 || normal_blob > height || normal_blob > width)
        fail("normal blob does not fit the frame");
    if(!std::isfinite(normal_intensity) || normal_intensity < 0.0)
        fail("normal intensity must be finite and >= 0");
    if(!std::isfinite(noise) || noise < 0.0)
        fail("noise amplitude must be finite and >= 0");
    if(max_retries == 0)
        fail("max_retries must be >= 1");
    std::vector<std::string> ids;
    for(std::size_t s = 0; s < segments.size(); ++s) {
        const auto& seg = segments[s];
        const std::string where = "segment " + segment_id(s);
        for(const auto& id : ids)
            if(id == segment_id(s))
                throw Error(ErrorCode::DuplicateSegmentId, "duplicate segment id", where);
        ids.push_back(segment_id(s));
        for(const auto& a : seg.anomalies) {
            if(a.start >= a.end || a.end > seg.length)
                fail("anomaly window [" + std::to_string(a.start) + ", " + std::to_string(a.end) +
                         ") lies outside the segment",
                     where);
            if(a.size == 0 || a.size > height || a.size > width)
                fail("anomaly blob does not fit the frame", where);
            if(!std::isfinite(a.intensity) || a.intensity < 0.0)
                fail("anomaly intensity must be finite and >= 0", where);
            if(!(a.intensity > normal_intensity))
                fail("anomaly intensity must exceed the normal intensity", where);
        }
    }
}

// ---------------------------------------------------------------------------
// Config (de)serialization
// ---------------------------------------------------------------------------

namespace {

template <class T>
T get_or(const ojson& obj, const char* key, T fallback, const std::string& pointer) {
    if(!obj.contains(key))
        return fallback;
    try {
        return obj.at(key).get<T>();
    } catch(const nlohmann::json::exception& e) {
        throw Error(ErrorCode::ParseError, e.what(), "field " + pointer + "/" + key);
    }
}

std::size_t get_count(const ojson& obj, const char* key, std::size_t fallback, const std::string& pointer) {
    if(!obj.contains(key))
        return fallback;
    const auto& v = obj.at(key);
    if(!v.is_number_integer() || v.get<std::int64_t>() < 0)
        throw Error(ErrorCode::ParseError, "expected a non-negative integer", "field " + pointer + "/" + key);
    return v.get<std::size_t>();
}

} // namespace

Config parse_config(const std::string& json_text) {
    ojson root;
    try {
        root = ojson::parse(json_text);
    } catch(const nlohmann::json::parse_error& e) {
        throw Error(ErrorCode::ParseError, e.what(), "byte " + std::to_string(e.byte));
    }
    if(!root.is_object())
        throw Error(ErrorCode::ParseError, "synth config must be a JSON object", "field /");
    Config c;
    c.name = get_or<std::string>(root, "name", c.name, "");
    if(root.contains("frame")) {
        const auto& f = root.at("frame");
        if(!f.is_array() || f.size() != 2)
            throw Error(ErrorCode::ParseError, "expected [height, width]", "field /frame");
        c.height = get_count(ojson::object({{"v", f[0]}}), "v", 0, "/frame/0");
        c.width = get_count(ojson::object({{"v", f[1]}}), "v", 0, "/frame/1");
    }
    c.normal_blob = get_count(root, "normal_blob", c.normal_blob, "");
    c.normal_intensity = get_or<double>(root, "normal_intensity", c.normal_intensity, "");
    c.noise = get_or<double>(root, "noise", c.noise, "");
    if(root.contains("seed")) {
        const auto& s = root.at("seed");
        if(!s.is_number_unsigned() && !(s.is_number_integer() && s.get<std::int64_t>() >= 0))
            throw Error(ErrorCode::ParseError, "expected a non-negative integer", "field /seed");
        c.seed = s.get<std::uint64_t>();
    }
    c.max_retries = get_count(root, "max_retries", c.max_retries, "");
    if(!root.contains("segments") || !root.at("segments").is_array())
        throw Error(ErrorCode::ParseError, "expected an array", "field /segments");
    const auto& segs = root.at("segments");
    for(std::size_t i = 0; i < segs.size(); ++i) {
        const std::string p = "/segments/" + std::to_string(i);
        const auto& js = segs[i];
        SegmentConfig s;
        s.id = get_or<std::string>(js, "id", "", p);
        s.length = get_count(js, "length", 0, p);
        s.target_count = get_count(js, "target_count", 0, p);
        s.split = get_or<std::string>(js, "split", "", p);
        if(js.contains("anomalies")) {
            const auto& an = js.at("anomalies");
            if(!an.is_array())
                throw Error(ErrorCode::ParseError, "expected an array", "field " + p + "/anomalies");
            for(std::size_t k = 0; k < an.size(); ++k) {
                const std::string ap = p + "/anomalies/" + std::to_string(k);
                AnomalyWindow a;
                a.start = get_count(an[k], "start", 0, ap);
                a.end = get_count(an[k], "end", 0, ap);
                a.size = get_count(an[k], "size", a.size, ap);
                a.intensity = get_or<double>(an[k], "intensity", a.intensity, ap);
                s.anomalies.push_back(a);
            }
        }
        c.segments.push_back(std::move(s));
    }
    c.validate();
    return c;
}

Config load_config(const fs::path& path) {
    try {
        return parse_config(read_text_file(path));
    } catch(const Error& e) {
        if(e.code() == ErrorCode::MissingFile || e.code() == ErrorCode::IoError)
            throw;
        throw Error(e.code(), e.message(), path.string() + (e.where().empty() ? "" : " " + e.where()));
    }
}

std::string config_to_string(const Config& c) {
    ojson root;
    root["name"] = c.name;
    root["frame"] = {c.height, c.width};
    root["normal_blob"] = c.normal_blob;
    root["normal_intensity"] = c.normal_intensity;
    root["noise"] = c.noise;
    root["seed"] = c.seed;
    root["max_retries"] = c.max_retries;
    ojson segs = ojson::array();
    for(const auto& s : c.segments) {
        ojson js;
        if(!s.id.empty())
            js["id"] = s.id;
        js["length"] = s.length;
        js["target_count"] = s.target_count;
        if(!s.split.empty())
            js["split"] = s.split;
        ojson an = ojson::array();
        for(const auto& a : s.anomalies)
            an.push_back({{"start", a.start}, {"end", a.end}, {"size", a.size}, {"intensity", a.intensity}});
        js["anomalies"] = std::move(an);
        segs.push_back(std::move(js));
    }
    root["segments"] = std::move(segs);
    return root.dump(2) + "\n";
}

// ---------------------------------------------------------------------------
// Generation
// ---------------------------------------------------------------------------

namespace {

class Stream {
public:
    explicit Stream(std::uint64_t seed) : engine_(seed) {}

    std::uint64_t index(std::uint64_t n) {
        // largest multiple of n representable in 64 bits
        const std::uint64_t limit = n == 0 ? 0 : std::uint64_t(0) - (std::uint64_t(0) - n) % n;
        for(;;) {
            const std::uint64_t x = engine_();
            if(limit == 0 || x < limit)
                return x % n;
        }
    }

    double unit() { return static_cast<double>(engine_() >> 11) * 0x1p-53; }

private:
    std::mt19937_64 engine_;
};

struct Rect {
    std::size_t r, c, side;
    bool overlaps(const Rect& o) const noexcept {
        return r < o.r + o.side && o.r < r + side && c < o.c + o.side && o.c < c + side;
    }
};

Rect place(Stream& rng, std::vector<Rect>& taken, std::size_t side, const Config& cfg, std::size_t retries,
           const std::string& where) {
    for(std::size_t attempt = 0; attempt < retries; ++attempt) {
        const std::size_t r = rng.index(cfg.height - side + 1);
        const std::size_t c = rng.index(cfg.width - side + 1);
        const Rect cand{r, c, side};
        bool clear = true;
        for(const auto& t : taken)
            if(cand.overlaps(t)) {
                clear = false;
                break;
            }
        if(clear) {
            taken.push_back(cand);
            return cand;
        }
    }
    throw Error(ErrorCode::PlacementFailure,
                "could not place a " + std::to_string(side) + "x" + std::to_string(side) + " blob without overlap after " +
                    std::to_string(retries) + " attempts",
                where);
}

void fill(std::vector<double>& canvas, std::size_t width, const Rect& rect, double intensity) {
    for(std::size_t i = rect.r; i < rect.r + rect.side; ++i)
        for(std::size_t j = rect.c; j < rect.c + rect.side; ++j)
            canvas[i * width + j] += intensity;
}

} // namespace

Dataset generate(const Config& cfg) {
    cfg.validate();
    Dataset ds;
    ds.config = cfg;
    std::vector<std::pair<std::string, std::size_t>> ids;
    for(std::size_t s = 0; s < cfg.segments.size(); ++s)
        ids.emplace_back(cfg.segment_id(s), cfg.segments[s].length);
    ds.layout = make_layout(ids);

    std::vector<std::uint8_t> labels;
    for(const auto& seg : cfg.segments) {
        ds.target_counts.push_back(static_cast<double>(seg.target_count));
        for(std::size_t t = 0; t < seg.length; ++t) {
            bool abnormal = false;
            for(const auto& a : seg.anomalies)
                abnormal = abnormal || (t >= a.start && t < a.end);
            labels.push_back(abnormal ? 1 : 0);
        }
    }
    ds.labels = LabelSeries(ds.layout, std::move(labels));
    ds.maps.resize(ds.labels.size());

    const std::size_t pixels = cfg.height * cfg.width;
    detail::parallel_for(cfg.segments.size(), 0, [&](std::size_t s) {
        const auto& seg = cfg.segments[s];
        Stream rng(splitmix64(cfg.seed + s + 1));
        std::vector<double> canvas(pixels);
        std::vector<Rect> taken;
        for(std::size_t t = 0; t < seg.length; ++t) {
            const std::string where = "segment " + ds.layout[s].id + " frame " + std::to_string(t);
            if(cfg.noise > 0.0)
                for(auto& v : canvas)
                    v = cfg.noise * rng.unit();
            else
                std::fill(canvas.begin(), canvas.end(), 0.0);
            taken.clear();
            for(const auto& a : seg.anomalies)
                if(t >= a.start && t < a.end)
                    fill(canvas, cfg.width, place(rng, taken, a.size, cfg, cfg.max_retries, where), a.intensity);
            for(std::size_t k = 0; k < seg.target_count; ++k)
                fill(canvas, cfg.width, place(rng, taken, cfg.normal_blob, cfg, cfg.max_retries, where),
                     cfg.normal_intensity);
            std::vector<float> values(pixels);
            for(std::size_t i = 0; i < pixels; ++i)
                values[i] = static_cast<float>(canvas[i]);
            ds.maps[ds.layout[s].start + t] = GEMap(cfg.height, cfg.width, std::move(values));
        }
    });
    return ds;
}

DatasetManifest write_dataset(const Dataset& ds, const fs::path& dir) {
    DatasetManifest m;
    m.name = ds.config.name;
    m.modalities = {"ge"};
    m.provenance = Provenance{kAlgorithm, ds.config.seed};
    m.base_dir = dir;
    for(std::size_t s = 0; s < ds.layout.size(); ++s) {
        const auto& seg = ds.layout[s];
        SegmentEntry entry;
        entry.id = seg.id;
        entry.split = ds.config.segments[s].split;
        entry.target_count = ds.target_counts[s];
        for(std::size_t t = 0; t < seg.length; ++t) {
            char name[32];
            std::snprintf(name, sizeof name, "%06zu.gem", t);
            const std::string rel = "ge/" + seg.id + "/" + name;
            write_gemap(dir / rel, ds.maps[seg.start + t]);
            FrameEntry f;
            f.label = ds.labels.values()[seg.start + t];
            f.sources.push_back(FrameSource{rel, {}, {}});
            entry.frames.push_back(std::move(f));
        }
        m.segments.push_back(std::move(entry));
    }
    save_manifest(m, dir / "manifest.json");
    return m;
}

} // namespace blockge::synth
