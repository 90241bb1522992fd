// Copyright 2026 The risvlc Authors
// SPDX-License-Identifier: Apache-2.0

#include "risvlc/config.hpp"

#include <fstream>
#include <functional>
#include <set>
#include <sstream>

namespace risvlc {

using nlohmann::json;

namespace {

std::string join(const std::string& parent, const std::string& key) { return parent.empty() ? key : parent + "." + key; }

/// Walks one JSON object, pulling typed fields and remembering which keys were
/// consumed so leftovers can be reported.
class ObjectReader {
public:
    ObjectReader(const json& node, std::string path) : node_(node), path_(std::move(path)) {
        if (!node_.is_object()) throw ConfigError(path_, "expected an object");
    }

    ObjectReader(const ObjectReader&) = delete;
    ObjectReader& operator=(const ObjectReader&) = delete;

    /// Rejects any key that no accessor asked for.
    void finish() const {
        for (const auto& [key, value] : node_.items()) {
            if (!seen_.count(key)) throw ConfigError(join(path_, key), "unrecognized field '" + key + "'");
        }
    }

    const json* find(const std::string& key) {
        seen_.insert(key);
        const auto it = node_.find(key);
        return it == node_.end() ? nullptr : &*it;
    }

    std::string path(const std::string& key) const { return join(path_, key); }

    void number(const std::string& key, double& out, const std::function<bool(double)>& ok = {},
                const char* rule = nullptr) {
        if (const json* v = find(key)) {
            if (!v->is_number()) throw ConfigError(path(key), "expected a number");
            out = v->get<double>();
        }
        if (ok && !ok(out)) throw ConfigError(path(key), rule ? rule : "value out of range");
    }

    void optional_number(const std::string& key, std::optional<double>& out, const std::function<bool(double)>& ok = {},
                         const char* rule = nullptr) {
        if (const json* v = find(key)) {
            if (v->is_null()) {
                out.reset();
            } else if (v->is_number()) {
                out = v->get<double>();
            } else {
                throw ConfigError(path(key), "expected a number or null");
            }
        }
        if (out && ok && !ok(*out)) throw ConfigError(path(key), rule ? rule : "value out of range");
    }

    void integer(const std::string& key, int& out, const std::function<bool(int)>& ok = {}, const char* rule = nullptr) {
        if (const json* v = find(key)) {
            if (!v->is_number_integer()) throw ConfigError(path(key), "expected an integer");
            out = v->get<int>();
        }
        if (ok && !ok(out)) throw ConfigError(path(key), rule ? rule : "value out of range");
    }

    void boolean(const std::string& key, bool& out) {
        if (const json* v = find(key)) {
            if (!v->is_boolean()) throw ConfigError(path(key), "expected true or false");
            out = v->get<bool>();
        }
    }

    template <typename Fn>
    void object(const std::string& key, Fn&& fn) {
        if (const json* v = find(key)) {
            ObjectReader sub(*v, path(key));
            fn(sub);
            sub.finish();
        }
    }

private:
    const json& node_;
    std::string path_;
    std::set<std::string> seen_;
};

auto positive = [](double v) { return v > 0.0; };
auto non_negative = [](double v) { return v >= 0.0; };

SchemeId parse_scheme(const json& v, const std::string& path) {
    if (!v.is_string()) throw ConfigError(path, "expected a scheme name");
    const auto id = scheme_from_name(v.get<std::string>());
    if (!id)
        throw ConfigError(path, "unknown scheme '" + v.get<std::string>() + "' (centralized, distributed, adt, ris)");
    return *id;
}

std::string_view rate_model_name(RateModel m) { return m == RateModel::Shannon ? "shannon" : "lower_bound"; }

}  // namespace

Scenario scenario_from_json(const json& doc) {
    Scenario s;
    {
        ObjectReader root(doc, "");
        root.object("room", [&](ObjectReader& r) {
            r.number("length_m", s.room.length_m, positive, "must be > 0");
            r.number("width_m", s.room.width_m, positive, "must be > 0");
            r.number("height_m", s.room.height_m, positive, "must be > 0");
        });
        root.object("grid", [&](ObjectReader& r) {
            auto at_least_one = [](int v) { return v >= 1; };
            r.integer("nx", s.grid.nx, at_least_one, "must be >= 1");
            r.integer("ny", s.grid.ny, at_least_one, "must be >= 1");
            r.number("plane_height_m", s.grid.plane_height_m, non_negative, "must be >= 0");
        });
        if (const json* v = root.find("schemes")) {
            if (!v->is_array()) throw ConfigError("schemes", "expected an array of scheme names");
            s.schemes.clear();
            for (std::size_t k = 0; k < v->size(); ++k)
                s.schemes.push_back(parse_scheme((*v)[k], "schemes[" + std::to_string(k) + "]"));
        }
        if (const json* v = root.find("baseline")) {
            if (v->is_null())
                s.baseline.reset();
            else
                s.baseline = parse_scheme(*v, "baseline");
        }
        root.number("total_power_w", s.total_power_w, positive, "must be > 0");
        root.number("semi_angle_deg", s.semi_angle_deg, [](double v) { return v > 0.0 && v < 90.0; },
                    "must lie in (0, 90)");
        root.integer("array_count", s.array_count, [](int v) { return v >= 1; }, "must be >= 1");
        root.object("adt", [&](ObjectReader& r) {
            r.number("tau_deg", s.tau_deg, [](double v) { return v > 0.0 && v < 90.0; }, "must lie in (0, 90)");
        });
        root.object("ris", [&](ObjectReader& r) {
            LcRisConfig& c = s.ris;
            r.number("n_air", c.n_air, [](double v) { return v >= 1.0; }, "must be >= 1");
            r.number("n_lc", c.n_lc, [&](double v) { return v >= c.n_air; }, "must be >= n_air");
            r.number("thickness_m", c.thickness_m, positive, "must be > 0");
            r.number("gamma_per_m", c.gamma_per_m, non_negative, "must be >= 0");
            r.number("drive_voltage_v", c.drive_voltage_v);
            r.number("threshold_voltage_v", c.threshold_voltage_v, positive, "must be > 0");
            r.number("wedge_angle_rad", c.wedge_angle_rad, [](double v) { return std::abs(v) <= deg2rad(15.0); },
                     "must stay within 15 degrees");
            r.number("steering_azimuth_deg", c.steering_azimuth_deg);
        });
        root.object("concentrator", [&](ObjectReader& r) {
            ConcentratorConfig& c = s.optics.concentrator;
            r.number("refr_index_f", c.refr_index_f, [](double v) { return v >= 1.0; }, "must be >= 1");
            r.optional_number("accept_semi_angle_deg", c.accept_semi_angle_deg,
                              [](double v) { return v > 0.0 && v <= 90.0; }, "must lie in (0, 90]");
            r.boolean("literal_paper_concentrator", c.literal_paper_concentrator);
        });
        root.object("receiver", [&](ObjectReader& r) {
            ReceiverModel& rx = s.optics.receiver;
            r.number("area_m2", rx.area_m2, positive, "must be > 0");
            r.number("fov_semi_angle_deg", rx.fov_semi_angle_deg, [](double v) { return v > 0.0 && v <= 90.0; },
                     "must lie in (0, 90]");
            r.number("responsivity_a_per_w", rx.responsivity_a_per_w, positive, "must be > 0");
            r.number("noise_psd_a2_per_hz", rx.noise_psd_a2_per_hz, positive, "must be > 0");
            r.number("bandwidth_hz", rx.bandwidth_hz, positive, "must be > 0");
            r.number("filter_gain", rx.filter_gain, positive, "must be > 0");
            r.optional_number("concentrator_index", rx.concentrator_index, [](double v) { return v >= 1.0; },
                              "must be >= 1");
        });
        root.object("photometry", [&](ObjectReader& r) {
            Photometry& ph = s.optics.photometry;
            r.number("wavelength_nm", ph.wavelength_nm, positive, "must be > 0");
            r.number("luminosity_v", ph.luminosity_v, [](double v) { return v > 0.0 && v <= 1.0; },
                     "must lie in (0, 1]");
            r.optional_number("delta_w_per_lm", ph.delta_override_w_per_lm, positive, "must be > 0");
        });
        if (const json* v = root.find("rate_model")) {
            if (*v == "shannon")
                s.optics.rate_model = RateModel::Shannon;
            else if (*v == "lower_bound")
                s.optics.rate_model = RateModel::LowerBound;
            else
                throw ConfigError("rate_model", "expected \"shannon\" or \"lower_bound\"");
        }
        root.object("zones", [&](ObjectReader& r) {
            ZoneSpec& z = s.zones;
            r.number("task_side_m", z.task_side_m, non_negative, "must be >= 0");
            r.number("surround_band_m", z.surround_band_m, non_negative, "must be >= 0");
            r.number("task_lux", z.task_lux, non_negative, "must be >= 0");
            r.number("surround_lux", z.surround_lux, non_negative, "must be >= 0");
            r.number("background_lux", z.background_lux, non_negative, "must be >= 0");
            r.number("area_threshold_lux", z.area_threshold_lux, non_negative, "must be >= 0");
        });
        root.object("output", [&](ObjectReader& r) { r.boolean("heatmaps", s.output.heatmaps); });
        root.finish();
    }
    if (!(s.grid.plane_height_m < s.room.height_m))
        throw ConfigError("grid.plane_height_m", "must be below the room height");
    validate(s);
    return s;
}

json scenario_to_json(const Scenario& s) {
    json schemes = json::array();
    for (SchemeId id : s.schemes) schemes.push_back(std::string(scheme_name(id)));
    const auto& c = s.ris;
    const auto& conc = s.optics.concentrator;
    const auto& rx = s.optics.receiver;
    const auto& ph = s.optics.photometry;
    const auto& z = s.zones;
    auto opt = [](const std::optional<double>& v) { return v ? json(*v) : json(nullptr); };
    return json{
        {"room", {{"length_m", s.room.length_m}, {"width_m", s.room.width_m}, {"height_m", s.room.height_m}}},
        {"grid", {{"nx", s.grid.nx}, {"ny", s.grid.ny}, {"plane_height_m", s.grid.plane_height_m}}},
        {"schemes", schemes},
        {"baseline", s.baseline ? json(std::string(scheme_name(*s.baseline))) : json(nullptr)},
        {"total_power_w", s.total_power_w},
        {"semi_angle_deg", s.semi_angle_deg},
        {"array_count", s.array_count},
        {"adt", {{"tau_deg", s.tau_deg}}},
        {"ris",
         {{"n_air", c.n_air},
          {"n_lc", c.n_lc},
          {"thickness_m", c.thickness_m},
          {"gamma_per_m", c.gamma_per_m},
          {"drive_voltage_v", c.drive_voltage_v},
          {"threshold_voltage_v", c.threshold_voltage_v},
          {"wedge_angle_rad", c.wedge_angle_rad},
          {"steering_azimuth_deg", c.steering_azimuth_deg}}},
        {"concentrator",
         {{"refr_index_f", conc.refr_index_f},
          {"accept_semi_angle_deg", opt(conc.accept_semi_angle_deg)},
          {"literal_paper_concentrator", conc.literal_paper_concentrator}}},
        {"receiver",
         {{"area_m2", rx.area_m2},
          {"fov_semi_angle_deg", rx.fov_semi_angle_deg},
          {"responsivity_a_per_w", rx.responsivity_a_per_w},
          {"noise_psd_a2_per_hz", rx.noise_psd_a2_per_hz},
          {"bandwidth_hz", rx.bandwidth_hz},
          {"filter_gain", rx.filter_gain},
          {"concentrator_index", opt(rx.concentrator_index)}}},
        {"photometry",
         {{"wavelength_nm", ph.wavelength_nm},
          {"luminosity_v", ph.luminosity_v},
          {"delta_w_per_lm", opt(ph.delta_override_w_per_lm)}}},
        {"rate_model", std::string(rate_model_name(s.optics.rate_model))},
        {"zones",
         {{"task_side_m", z.task_side_m},
          {"surround_band_m", z.surround_band_m},
          {"task_lux", z.task_lux},
          {"surround_lux", z.surround_lux},
          {"background_lux", z.background_lux},
          {"area_threshold_lux", z.area_threshold_lux}}},
        {"output", {{"heatmaps", s.output.heatmaps}}},
    };
}

Scenario parse_config(const std::filesystem::path& path) {
    if (path.empty()) throw IoError("config path is empty");
    std::ifstream in(path, std::ios::binary);
    if (!in) throw IoError("cannot open config file: " + path.string());
    std::stringstream buf;
    buf << in.rdbuf();
    if (in.bad()) throw IoError("failed reading config file: " + path.string());
    json doc;
    try {
        doc = json::parse(buf.str());
    } catch (const json::parse_error& e) {
        throw ConfigError("", std::string("malformed JSON: ") + e.what());
    }
    return scenario_from_json(doc);
}

}  // namespace risvlc
