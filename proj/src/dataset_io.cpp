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

#include "blockge/dataset_io.hpp"

#include "blockge/error.hpp"

#include <json.hpp>

#include <algorithm>
#include <array>
#include <bit>
#include <cctype>
#include <charconv>
#include <cmath>
#include <cstring>
#include <fstream>
#include <set>
#include <sstream>

namespace blockge {

namespace fs = std::filesystem;
using ojson = nlohmann::ordered_json;

// ---------------------------------------------------------------------------
// Files
// ---------------------------------------------------------------------------

std::string read_text_file(const fs::path& path) {
    std::ifstream in(path, std::ios::binary);
    if(!in)
        throw Error(fs::exists(path) ? ErrorCode::IoError : ErrorCode::MissingFile, "cannot open file",
                    path.string());
    std::ostringstream ss;
    ss << in.rdbuf();
    return ss.str();
}

void ensure_directory(const fs::path& dir) {
    if(dir.empty())
        return;
    std::error_code ec;
    fs::create_directories(dir, ec);
    if(ec)
        throw Error(ErrorCode::IoError, "cannot create directory: " + ec.message(), dir.string());
}

void write_text_file(const fs::path& path, const std::string& text) {
    ensure_directory(path.parent_path());
    std::ofstream out(path, std::ios::binary | std::ios::trunc);
    if(!out)
        throw Error(ErrorCode::IoError, "cannot open file for writing", path.string());
    out.write(text.data(), static_cast<std::streamsize>(text.size()));
    if(!out)
        throw Error(ErrorCode::IoError, "write failed", path.string());
}

std::string format_double(double v) {
    std::array<char, 64> buf{};
    auto [end, ec] = std::to_chars(buf.data(), buf.data() + buf.size(), v);
    if(ec != std::errc())
        throw Error(ErrorCode::InvalidArgument, "cannot format number");
    return std::string(buf.data(), end);
}

namespace {

// ---------------------------------------------------------------------------
// Little-endian helpers
// ---------------------------------------------------------------------------

void put_u32le(std::string& out, std::uint32_t v) {
    for(int i = 0; i < 4; ++i)
        out.push_back(static_cast<char>((v >> (8 * i)) & 0xFFu));
}

std::uint32_t get_u32le(const unsigned char* p) {
    return static_cast<std::uint32_t>(p[0]) | (static_cast<std::uint32_t>(p[1]) << 8) |
           (static_cast<std::uint32_t>(p[2]) << 16) | (static_cast<std::uint32_t>(p[3]) << 24);
}

constexpr char kGemMagic[4] = {'G', 'E', 'M', '1'};
constexpr std::size_t kGemHeader = 12;

GEMap decode_gem1(const std::string& bytes, const std::string& where) {
    if(bytes.size() < kGemHeader)
        throw Error(ErrorCode::TruncatedFile, "GEM1 header is incomplete", where);
    const auto* p = reinterpret_cast<const unsigned char*>(bytes.data());
    const std::uint32_t h = get_u32le(p + 4);
    const std::uint32_t w = get_u32le(p + 8);
    if(h == 0 || w == 0)
        throw Error(ErrorCode::ParseError, "GEM1 dimensions must be >= 1", where);
    const std::uint64_t n = static_cast<std::uint64_t>(h) * w;
    if(bytes.size() - kGemHeader < n * 4)
        throw Error(ErrorCode::TruncatedFile,
                    "expected " + std::to_string(n * 4) + " payload bytes, got " +
                        std::to_string(bytes.size() - kGemHeader),
                    where);
    std::vector<float> values(n);
    for(std::uint64_t i = 0; i < n; ++i) {
        const std::uint32_t bits = get_u32le(p + kGemHeader + 4 * i);
        const float v = std::bit_cast<float>(bits);
        if(!std::isfinite(v))
            throw Error(ErrorCode::NonFiniteValue, "non-finite value at index " + std::to_string(i), where);
        if(v < 0.0f)
            throw Error(ErrorCode::NegativeValue, "negative value at index " + std::to_string(i), where);
        values[i] = v;
    }
    return GEMap(h, w, std::move(values));
}

// ---------------------------------------------------------------------------
// Portable any-map (binary P5 / P6)
// ---------------------------------------------------------------------------

struct PnmImage {
    std::size_t width = 0;
    std::size_t height = 0;
    std::size_t channels = 0;
    unsigned max_sample = 0;
    std::vector<std::uint16_t> samples;
};

PnmImage decode_pnm(const std::string& bytes, const std::string& where) {
    if(bytes.size() < 2 || bytes[0] != 'P' || (bytes[1] != '5' && bytes[1] != '6'))
        throw Error(ErrorCode::BadMagic, "expected GEM1, P5 or P6 magic", where);
    PnmImage img;
    img.channels = bytes[1] == '5' ? 1 : 3;
    std::size_t pos = 2;
    auto next_number = [&]() -> unsigned long {
        for(;;) {
            if(pos >= bytes.size())
                throw Error(ErrorCode::TruncatedFile, "header ends early", where);
            const char c = bytes[pos];
            if(c == '#') {
                while(pos < bytes.size() && bytes[pos] != '\n')
                    ++pos;
            } else if(std::isspace(static_cast<unsigned char>(c))) {
                ++pos;
            } else {
                break;
            }
        }
        unsigned long v = 0;
        const auto [end, ec] = std::from_chars(bytes.data() + pos, bytes.data() + bytes.size(), v);
        if(ec != std::errc())
            throw Error(ErrorCode::ParseError, "bad header number at byte " + std::to_string(pos), where);
        pos = static_cast<std::size_t>(end - bytes.data());
        return v;
    };
    img.width = next_number();
    img.height = next_number();
    const unsigned long maxval = next_number();
    if(img.width == 0 || img.height == 0 || maxval == 0 || maxval > 65535)
        throw Error(ErrorCode::ParseError, "invalid dimensions or max sample value", where);
    img.max_sample = static_cast<unsigned>(maxval);
    if(pos >= bytes.size() || !std::isspace(static_cast<unsigned char>(bytes[pos])))
        throw Error(ErrorCode::TruncatedFile, "missing raster after header", where);
    ++pos;  // single whitespace before the raster
    const std::size_t bytes_per = img.max_sample > 255 ? 2 : 1;
    const std::size_t n = img.width * img.height * img.channels;
    if(bytes.size() - pos < n * bytes_per)
        throw Error(ErrorCode::TruncatedFile,
                    "expected " + std::to_string(n * bytes_per) + " raster bytes, got " +
                        std::to_string(bytes.size() - pos),
                    where);
    img.samples.resize(n);
    const auto* p = reinterpret_cast<const unsigned char*>(bytes.data() + pos);
    for(std::size_t i = 0; i < n; ++i) {
        img.samples[i] = bytes_per == 2 ? static_cast<std::uint16_t>((p[2 * i] << 8) | p[2 * i + 1]) : p[i];
        if(img.samples[i] > img.max_sample)
            throw Error(ErrorCode::ParseError, "sample exceeds max value at index " + std::to_string(i), where);
    }
    return img;
}

std::vector<float> scale_samples(const PnmImage& img) {
    std::vector<float> out(img.samples.size());
    const double inv = 1.0 / static_cast<double>(img.max_sample);
    for(std::size_t i = 0; i < out.size(); ++i)
        out[i] = static_cast<float>(static_cast<double>(img.samples[i]) * inv);
    return out;
}

void write_pnm(const fs::path& path, char kind, std::size_t width, std::size_t height, unsigned max_sample,
               const std::vector<std::uint16_t>& samples) {
    std::string out = std::string("P") + kind + "\n" + std::to_string(width) + " " + std::to_string(height) + "\n" +
                      std::to_string(max_sample) + "\n";
    out.reserve(out.size() + samples.size() * 2);
    for(auto s : samples) {
        if(max_sample > 255)
            out.push_back(static_cast<char>(s >> 8));
        out.push_back(static_cast<char>(s & 0xFF));
    }
    write_text_file(path, out);
}

} // namespace

void write_gemap(const fs::path& path, const GEMap& map) {
    if(map.empty())
        throw Error(ErrorCode::InvalidArgument, "cannot write an empty GE map", path.string());
    std::string out(kGemMagic, 4);
    out.reserve(kGemHeader + 4 * map.size());
    put_u32le(out, static_cast<std::uint32_t>(map.height()));
    put_u32le(out, static_cast<std::uint32_t>(map.width()));
    for(float v : map.values())
        put_u32le(out, std::bit_cast<std::uint32_t>(v));
    write_text_file(path, out);
}

GEMap read_gemap(const fs::path& path) {
    const std::string bytes = read_text_file(path);
    if(bytes.size() >= 4 && std::memcmp(bytes.data(), kGemMagic, 4) == 0)
        return decode_gem1(bytes, path.string());
    if(bytes.size() >= 2 && bytes[0] == 'P' && bytes[1] == '6')
        throw Error(ErrorCode::BadMagic, "GE maps must be single-channel (P5), not P6", path.string());
    const PnmImage img = decode_pnm(bytes, path.string());
    return GEMap(img.height, img.width, scale_samples(img));
}

FrameImage read_frame(const fs::path& path) {
    const std::string bytes = read_text_file(path);
    const PnmImage img = decode_pnm(bytes, path.string());
    return FrameImage(img.height, img.width, img.channels, scale_samples(img));
}

void write_frame(const fs::path& path, const FrameImage& frame, std::uint16_t max_sample) {
    if(frame.channels() != 1 && frame.channels() != 3)
        throw Error(ErrorCode::InvalidArgument, "only 1- or 3-channel frames can be written", path.string());
    if(max_sample == 0)
        throw Error(ErrorCode::InvalidArgument, "max sample must be >= 1", path.string());
    std::vector<std::uint16_t> samples(frame.values().size());
    for(std::size_t i = 0; i < samples.size(); ++i) {
        const double v = std::clamp(static_cast<double>(frame.values()[i]), 0.0, 1.0);
        samples[i] = static_cast<std::uint16_t>(std::lround(v * max_sample));
    }
    write_pnm(path, frame.channels() == 1 ? '5' : '6', frame.width(), frame.height(), max_sample, samples);
}

void export_gemap_pgm(const fs::path& path, const GEMap& map) {
    const auto v = map.values();
    const float peak = v.empty() ? 0.0f : *std::max_element(v.begin(), v.end());
    std::vector<std::uint16_t> samples(v.size(), 0);
    if(peak > 0.0f)
        for(std::size_t i = 0; i < v.size(); ++i)
            samples[i] = static_cast<std::uint16_t>(std::lround(255.0 * v[i] / peak));
    write_pnm(path, '5', map.width(), map.height(), 255, samples);
}

// ---------------------------------------------------------------------------
// Manifest
// ---------------------------------------------------------------------------

std::vector<Segment> DatasetManifest::layout() const {
    std::vector<std::pair<std::string, std::size_t>> ids;
    for(const auto& s : segments)
        ids.emplace_back(s.id, s.frames.size());
    return make_layout(ids);
}

LabelSeries DatasetManifest::labels() const {
    std::vector<std::uint8_t> labels;
    for(const auto& s : segments)
        for(const auto& f : s.frames)
            labels.push_back(f.label);
    return LabelSeries(layout(), std::move(labels));
}

bool DatasetManifest::operator==(const DatasetManifest& o) const {
    return name == o.name && modalities == o.modalities && settings == o.settings && provenance == o.provenance &&
           segments == o.segments;
}

namespace {

[[noreturn]] void field_error(ErrorCode code, const std::string& pointer, const std::string& message) {
    throw Error(code, message, "field " + pointer);
}

const ojson& require(const ojson& obj, const std::string& key, const std::string& pointer) {
    if(!obj.is_object() || !obj.contains(key))
        field_error(ErrorCode::ParseError, pointer + "/" + key, "missing required field");
    return obj.at(key);
}

std::string require_string(const ojson& v, const std::string& pointer) {
    if(!v.is_string())
        field_error(ErrorCode::ParseError, pointer, "expected a string");
    return v.get<std::string>();
}

std::int64_t require_int(const ojson& v, const std::string& pointer) {
    if(!v.is_number_integer())
        field_error(ErrorCode::ParseError, pointer, "expected an integer");
    return v.get<std::int64_t>();
}

std::size_t require_positive(const ojson& v, const std::string& pointer) {
    const auto x = require_int(v, pointer);
    if(x < 1)
        field_error(ErrorCode::ParseError, pointer, "expected an integer >= 1");
    return static_cast<std::size_t>(x);
}

void check_exists(const DatasetManifest& m, const std::string& rel, const std::string& pointer) {
    const fs::path p = m.resolve(rel);
    if(!fs::is_regular_file(p))
        throw Error(ErrorCode::MissingFile, "referenced file does not exist: " + p.string(), "field " + pointer);
}

FrameSource parse_source(const ojson& v, const std::string& pointer) {
    FrameSource src;
    if(v.is_string()) {
        src.ge = v.get<std::string>();
        if(src.ge.empty())
            field_error(ErrorCode::ParseError, pointer, "empty path");
    } else if(v.is_object()) {
        src.pred = require_string(require(v, "pred", pointer), pointer + "/pred");
        src.gt = require_string(require(v, "gt", pointer), pointer + "/gt");
        if(src.pred.empty() || src.gt.empty())
            field_error(ErrorCode::ParseError, pointer, "empty path");
    } else {
        field_error(ErrorCode::ParseError, pointer, "expected a GE map path or {\"pred\", \"gt\"} pair");
    }
    return src;
}

std::string line_of(const std::string& text, std::size_t byte) {
    const std::size_t end = std::min(byte, text.size());
    const auto line = 1 + std::count(text.begin(), text.begin() + static_cast<std::ptrdiff_t>(end), '\n');
    return "line " + std::to_string(line);
}

} // namespace

DatasetManifest parse_manifest(const std::string& text, const fs::path& base_dir, bool check_files) {
    ojson root;
    try {
        root = ojson::parse(text);
    } catch(const nlohmann::json::parse_error& e) {
        throw Error(ErrorCode::ParseError, e.what(), line_of(text, e.byte));
    }
    if(!root.is_object())
        field_error(ErrorCode::ParseError, "/", "manifest must be a JSON object");

    DatasetManifest m;
    m.base_dir = base_dir;
    const auto version = require_int(require(root, "schema_version", ""), "/schema_version");
    if(version != DatasetManifest::kSchemaVersion)
        field_error(ErrorCode::ParseError, "/schema_version", "unsupported schema version " + std::to_string(version));
    m.name = require_string(require(root, "name", ""), "/name");

    if(root.contains("modalities")) {
        const auto& mods = root.at("modalities");
        if(!mods.is_array() || mods.empty())
            field_error(ErrorCode::ParseError, "/modalities", "expected a non-empty array");
        m.modalities.clear();
        std::set<std::string> seen;
        for(std::size_t i = 0; i < mods.size(); ++i) {
            auto name = require_string(mods[i], "/modalities/" + std::to_string(i));
            if(!seen.insert(name).second)
                field_error(ErrorCode::ParseError, "/modalities/" + std::to_string(i), "duplicate modality");
            m.modalities.push_back(std::move(name));
        }
    }

    if(root.contains("settings")) {
        const auto& s = root.at("settings");
        if(s.contains("exponent")) {
            const auto p = require_int(s.at("exponent"), "/settings/exponent");
            if(p != 1 && p != 2)
                field_error(ErrorCode::ParseError, "/settings/exponent", "exponent must be 1 or 2");
            m.settings.exponent = static_cast<int>(p);
        }
        if(s.contains("block")) {
            const auto& b = s.at("block");
            if(!b.is_array() || b.size() != 2)
                field_error(ErrorCode::ParseError, "/settings/block", "expected [height, width]");
            m.settings.block = {require_positive(b[0], "/settings/block/0"), require_positive(b[1], "/settings/block/1")};
        }
    }

    if(root.contains("generator")) {
        const auto& g = root.at("generator");
        Provenance p;
        p.algorithm = require_string(require(g, "algorithm", "/generator"), "/generator/algorithm");
        const auto& seed = require(g, "seed", "/generator");
        if(!seed.is_number_unsigned() && !(seed.is_number_integer() && seed.get<std::int64_t>() >= 0))
            field_error(ErrorCode::ParseError, "/generator/seed", "expected a non-negative integer");
        p.seed = seed.get<std::uint64_t>();
        m.provenance = p;
    }

    const auto& segs = require(root, "segments", "");
    if(!segs.is_array())
        field_error(ErrorCode::ParseError, "/segments", "expected an array");
    std::set<std::string> ids;
    for(std::size_t si = 0; si < segs.size(); ++si) {
        const std::string sp = "/segments/" + std::to_string(si);
        const auto& js = segs[si];
        SegmentEntry seg;
        seg.id = require_string(require(js, "id", sp), sp + "/id");
        if(seg.id.empty() || std::any_of(seg.id.begin(), seg.id.end(), [](char c) { return std::isspace(static_cast<unsigned char>(c)); }))
            field_error(ErrorCode::ParseError, sp + "/id", "segment id must be non-empty without whitespace");
        if(!ids.insert(seg.id).second)
            field_error(ErrorCode::DuplicateSegmentId, sp + "/id", "duplicate segment id '" + seg.id + "'");
        if(js.contains("split"))
            seg.split = require_string(js.at("split"), sp + "/split");
        if(js.contains("target_count")) {
            const auto& tc = js.at("target_count");
            if(!tc.is_number() || !std::isfinite(tc.get<double>()) || tc.get<double>() < 0.0)
                field_error(ErrorCode::ParseError, sp + "/target_count", "expected a non-negative number");
            seg.target_count = tc.get<double>();
        }
        const auto& frames = require(js, "frames", sp);
        if(!frames.is_array())
            field_error(ErrorCode::ParseError, sp + "/frames", "expected an array");
        for(std::size_t fi = 0; fi < frames.size(); ++fi) {
            const std::string fp = sp + "/frames/" + std::to_string(fi);
            const auto& jf = frames[fi];
            FrameEntry frame;
            const auto label = require_int(require(jf, "label", fp), fp + "/label");
            if(label != 0 && label != 1)
                field_error(ErrorCode::LabelOutOfRange, fp + "/label", "label must be 0 or 1, got " + std::to_string(label));
            frame.label = static_cast<std::uint8_t>(label);
            const auto& sources = require(jf, "sources", fp);
            if(!sources.is_array() || sources.size() != m.modalities.size())
                field_error(ErrorCode::ParseError, fp + "/sources",
                            "expected one source per modality (" + std::to_string(m.modalities.size()) + ")");
            for(std::size_t k = 0; k < sources.size(); ++k)
                frame.sources.push_back(parse_source(sources[k], fp + "/sources/" + std::to_string(k)));
            seg.frames.push_back(std::move(frame));
        }
        m.segments.push_back(std::move(seg));
    }

    if(check_files) {
        for(std::size_t si = 0; si < m.segments.size(); ++si) {
            for(std::size_t fi = 0; fi < m.segments[si].frames.size(); ++fi) {
                const auto& f = m.segments[si].frames[fi];
                for(std::size_t k = 0; k < f.sources.size(); ++k) {
                    const std::string p = "/segments/" + std::to_string(si) + "/frames/" + std::to_string(fi) +
                                          "/sources/" + std::to_string(k);
                    if(f.sources[k].is_pair()) {
                        check_exists(m, f.sources[k].pred, p + "/pred");
                        check_exists(m, f.sources[k].gt, p + "/gt");
                    } else {
                        check_exists(m, f.sources[k].ge, p);
                    }
                }
            }
        }
    }
    return m;
}

DatasetManifest load_manifest(const fs::path& path) {
    const std::string text = read_text_file(path);
    try {
        return parse_manifest(text, path.parent_path());
    } catch(const Error& e) {
        if(e.code() == ErrorCode::MissingFile)
            throw;
        throw Error(e.code(), e.message(), path.string() + (e.where().empty() ? "" : " " + e.where()));
    }
}

std::string manifest_to_string(const DatasetManifest& m) {
    ojson root;
    root["schema_version"] = DatasetManifest::kSchemaVersion;
    root["name"] = m.name;
    root["modalities"] = m.modalities;
    root["settings"] = {{"exponent", m.settings.exponent}, {"block", {m.settings.block.h, m.settings.block.w}}};
    if(m.provenance)
        root["generator"] = {{"algorithm", m.provenance->algorithm}, {"seed", m.provenance->seed}};
    ojson segs = ojson::array();
    for(const auto& s : m.segments) {
        ojson js;
        js["id"] = s.id;
        if(!s.split.empty())
            js["split"] = s.split;
        if(s.target_count)
            js["target_count"] = *s.target_count;
        ojson frames = ojson::array();
        for(const auto& f : s.frames) {
            ojson sources = ojson::array();
            for(const auto& src : f.sources) {
                if(src.is_pair())
                    sources.push_back({{"pred", src.pred}, {"gt", src.gt}});
                else
                    sources.push_back(src.ge);
            }
            frames.push_back({{"label", f.label}, {"sources", std::move(sources)}});
        }
        js["frames"] = std::move(frames);
        segs.push_back(std::move(js));
    }
    root["segments"] = std::move(segs);
    return root.dump(2) + "\n";
}

void save_manifest(const DatasetManifest& manifest, const fs::path& path) {
    write_text_file(path, manifest_to_string(manifest));
}

// ---------------------------------------------------------------------------
// Score tables
// ---------------------------------------------------------------------------

namespace {
constexpr std::string_view kScoreMagic = "# blockge-scores 1";
}

const std::vector<double>* ScoreTable::column(const std::string& name) const {
    const auto it = std::find(column_names.begin(), column_names.end(), name);
    return it == column_names.end() ? nullptr : &columns[static_cast<std::size_t>(it - column_names.begin())];
}

ScoreSeries ScoreTable::series(const std::string& name) const {
    const auto* c = column(name);
    if(!c)
        throw Error(ErrorCode::ParseError, "score table has no column '" + name + "'");
    return ScoreSeries(layout, *c);
}

std::string score_table_to_string(const ScoreTable& t) {
    validate_layout(t.layout, t.labels.size());
    std::string out(kScoreMagic);
    out += "\n";
    for(const auto& [k, v] : t.config)
        out += "# config " + k + "=" + v + "\n";
    for(const auto& f : t.flags)
        out += "# flag " + f + "\n";
    out += "segment\tframe\tlabel";
    for(const auto& name : t.column_names)
        out += "\t" + name;
    out += "\n";
    for(const auto& seg : t.layout) {
        for(std::size_t i = 0; i < seg.length; ++i) {
            const std::size_t row = seg.start + i;
            out += seg.id + "\t" + std::to_string(i) + "\t" + std::to_string(t.labels[row]);
            for(const auto& col : t.columns)
                out += "\t" + format_double(col[row]);
            out += "\n";
        }
    }
    return out;
}

ScoreTable parse_score_table(const std::string& text) {
    ScoreTable t;
    std::istringstream in(text);
    std::string line;
    std::size_t lineno = 0;
    auto where = [&] { return "line " + std::to_string(lineno); };
    if(!std::getline(in, line) || line != kScoreMagic)
        throw Error(ErrorCode::BadMagic, "not a blockge score table", "line 1");
    ++lineno;
    bool have_header = false;
    std::vector<std::pair<std::string, std::size_t>> segs;
    while(std::getline(in, line)) {
        ++lineno;
        if(line.empty())
            continue;
        if(line.rfind("# config ", 0) == 0) {
            const std::string kv = line.substr(9);
            const auto eq = kv.find('=');
            if(eq == std::string::npos)
                throw Error(ErrorCode::ParseError, "config line without '='", where());
            t.config.emplace_back(kv.substr(0, eq), kv.substr(eq + 1));
            continue;
        }
        if(line.rfind("# flag ", 0) == 0) {
            t.flags.push_back(line.substr(7));
            continue;
        }
        if(line[0] == '#')
            continue;
        std::vector<std::string> cells;
        std::size_t start = 0;
        for(;;) {
            const auto tab = line.find('\t', start);
            cells.push_back(line.substr(start, tab - start));
            if(tab == std::string::npos)
                break;
            start = tab + 1;
        }
        if(!have_header) {
            if(cells.size() < 3 || cells[0] != "segment" || cells[1] != "frame" || cells[2] != "label")
                throw Error(ErrorCode::ParseError, "expected header 'segment frame label ...'", where());
            t.column_names.assign(cells.begin() + 3, cells.end());
            t.columns.resize(t.column_names.size());
            have_header = true;
            continue;
        }
        if(cells.size() != 3 + t.column_names.size())
            throw Error(ErrorCode::ParseError, "wrong number of columns", where());
        if(segs.empty() || segs.back().first != cells[0])
            segs.emplace_back(cells[0], 0);
        std::size_t frame = 0;
        {
            const auto [p, ec] = std::from_chars(cells[1].data(), cells[1].data() + cells[1].size(), frame);
            if(ec != std::errc() || p != cells[1].data() + cells[1].size() || frame != segs.back().second)
                throw Error(ErrorCode::ParseError, "frame index out of order", where());
        }
        if(cells[2] != "0" && cells[2] != "1")
            throw Error(ErrorCode::LabelOutOfRange, "label must be 0 or 1", where());
        t.labels.push_back(static_cast<std::uint8_t>(cells[2][0] - '0'));
        for(std::size_t c = 0; c < t.column_names.size(); ++c) {
            const std::string& cell = cells[3 + c];
            double v = 0.0;
            const auto [p, ec] = std::from_chars(cell.data(), cell.data() + cell.size(), v);
            if(ec != std::errc() || p != cell.data() + cell.size() || !std::isfinite(v))
                throw Error(ErrorCode::ParseError, "bad number '" + cell + "' in column " + t.column_names[c], where());
            t.columns[c].push_back(v);
        }
        ++segs.back().second;
    }
    if(!have_header)
        throw Error(ErrorCode::ParseError, "missing column header", where());
    t.layout = make_layout(segs);
    validate_layout(t.layout, t.labels.size());
    return t;
}

void write_score_table(const fs::path& path, const ScoreTable& table) {
    write_text_file(path, score_table_to_string(table));
}

ScoreTable read_score_table(const fs::path& path) {
    try {
        return parse_score_table(read_text_file(path));
    } catch(const Error& e) {
        if(e.code() == ErrorCode::MissingFile || e.code() == ErrorCode::IoError)
            throw;
        throw Error(e.code(), e.message(), path.string() + (e.where().empty() ? "" : " " + e.where()));
    }
}

} // namespace blockge
