#include "cylpack/json_io.hpp"

#include <cmath>
#include <fstream>
#include <sstream>

#include <json.hpp>

namespace cylpack {

using json = nlohmann::ordered_json;

std::string packing_to_json(const Packing& p) {
    json j;
    j["version"] = 1;
    j["capped"] = p.capped;
    j["t"] = p.t;
    j["R"] = p.R;
    if (p.mixed) j["mixed"] = true;
    if (p.restricted_to) j["restricted_to"] = *p.restricted_to;
    json cyls = json::array();
    for (const auto& a : p.axes) {
        json c;
        c["p0"] = {a.p0.x, a.p0.y, a.p0.z};
        c["p1"] = {a.p1.x, a.p1.y, a.p1.z};
        cyls.push_back(std::move(c));
    }
    j["cylinders"] = std::move(cyls);
    return j.dump(2) + "\n";
}

namespace {

Vec3 parse_vec3(const json& j, const char* what) {
    if (!j.is_array() || j.size() != 3 || !j[0].is_number() || !j[1].is_number() ||
        !j[2].is_number())
        throw FormatError(std::string("packing json: ") + what + " must be [x,y,z]");
    return {j[0].get<double>(), j[1].get<double>(), j[2].get<double>()};
}

} // namespace

Packing packing_from_json(const std::string& text) {
    json j;
    try {
        j = json::parse(text);
    } catch (const std::exception& e) {
        throw FormatError(std::string("packing json: parse error: ") + e.what());
    }
    if (!j.is_object()) throw FormatError("packing json: root must be an object");
    if (!j.contains("version") || !j["version"].is_number_integer() || j["version"] != 1)
        throw FormatError("packing json: unsupported or missing version");
    for (const char* key : {"capped", "t", "R", "cylinders"})
        if (!j.contains(key)) throw FormatError(std::string("packing json: missing ") + key);

    Packing p;
    p.capped = j["capped"].get<bool>();
    p.t = j["t"].get<double>();
    p.R = j["R"].get<double>();
    p.mixed = j.value("mixed", false);
    if (j.contains("restricted_to")) p.restricted_to = j["restricted_to"].get<double>();
    if (!(p.t >= 0.0) || !(p.R > 0.0)) throw FormatError("packing json: invalid t or R");

    for (const auto& c : j["cylinders"]) {
        if (!c.is_object() || !c.contains("p0") || !c.contains("p1"))
            throw FormatError("packing json: cylinder entries need p0 and p1");
        const Segment axis{parse_vec3(c["p0"], "p0"), parse_vec3(c["p1"], "p1")};
        if (!finite(axis.p0) || !finite(axis.p1))
            throw FormatError("packing json: non-finite coordinate");
        if (!p.mixed && std::fabs(axis.length() - p.t) > 1e-9)
            throw FormatError("packing json: axis length differs from t (set mixed for "
                              "non-congruent packings)");
        p.axes.push_back(axis);
    }
    return p;
}

void write_packing_file(const Packing& p, const std::string& path) {
    std::ofstream out(path);
    if (!out) throw FormatError("cannot open for writing: " + path);
    out << packing_to_json(p);
}

Packing read_packing_file(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw FormatError("cannot open: " + path);
    std::stringstream ss;
    ss << in.rdbuf();
    return packing_from_json(ss.str());
}

std::string slice_to_json(const DirichletSlice& s, const SliceReport& rep) {
    json j;
    j["owner"] = s.owner;
    j["frame"] = {
        {"origin", {s.frame.origin.x, s.frame.origin.y, s.frame.origin.z}},
        {"normal", {s.frame.normal.x, s.frame.normal.y, s.frame.normal.z}},
        {"u", {s.frame.u.x, s.frame.u.y, s.frame.u.z}},
        {"v", {s.frame.v.x, s.frame.v.y, s.frame.v.z}},
    };
    j["area"] = rep.area;
    j["qualified"] = rep.qualified;
    j["has_end_near"] = rep.end_near;
    if (rep.truncation_valid) {
        j["area_dstar"] = rep.area_dstar;
        j["area_dstarstar"] = rep.area_dstarstar;
    }
    json samples = json::array();
    for (const auto& [th, r] : s.radius_samples) samples.push_back({th, r});
    j["samples"] = std::move(samples);
    json events = json::array();
    for (const auto& ev : s.boundary_events) {
        json e;
        e["theta"] = ev.theta;
        e["kind"] = event_kind_name(ev.kind);
        e["radius"] = ev.radius;
        if (ev.axis_a >= 0) e["axis_a"] = ev.axis_a;
        if (ev.axis_b >= 0) e["axis_b"] = ev.axis_b;
        events.push_back(std::move(e));
    }
    j["events"] = std::move(events);
    return j.dump(2) + "\n";
}

namespace {

void svg_circle(std::ostringstream& out, double cx, double cy, double r, const char* style) {
    out << "  <circle cx=\"" << cx << "\" cy=\"" << cy << "\" r=\"" << r << "\" " << style
        << "/>\n";
}

} // namespace

std::string slice_to_svg(const DirichletSlice& s, bool reproducible) {
    constexpr double view = 512.0;
    constexpr double px_per_unit = 100.0;
    const double c = view / 2.0;
    auto px = [&](double u, double v) {
        return std::pair<double, double>{c + px_per_unit * u, c - px_per_unit * v};
    };

    std::ostringstream out;
    out.precision(6);
    out << "<svg xmlns=\"http://www.w3.org/2000/svg\" width=\"512\" height=\"512\" "
           "viewBox=\"0 0 512 512\">\n";
    if (!reproducible)
        out << "  <!-- dirichlet slice, owner axis " << s.owner << " -->\n";
    out << "  <rect width=\"512\" height=\"512\" fill=\"white\"/>\n";

    svg_circle(out, c, c, px_per_unit * 1.0,
               "fill=\"none\" stroke=\"#888888\" stroke-width=\"1\"");
    svg_circle(out, c, c, px_per_unit * (2.0 / std::sqrt(3.0)),
               "fill=\"none\" stroke=\"#bbbbbb\" stroke-width=\"1\" stroke-dasharray=\"4 3\"");

    out << "  <polygon points=\"";
    for (const auto& [th, r] : s.radius_samples) {
        const auto [X, Y] = px(r * std::cos(th), r * std::sin(th));
        out << X << "," << Y << " ";
    }
    out << "\" fill=\"none\" stroke=\"#1f4e9c\" stroke-width=\"1.5\"/>\n";

    for (const auto& ev : s.boundary_events) {
        const char* color = nullptr;
        switch (ev.kind) {
            case EventKind::type1: color = "#d62728"; break;
            case EventKind::type2: color = "#2ca02c"; break;
            case EventKind::type3: color = "#9467bd"; break;
            default: break;
        }
        if (!color) continue;
        const auto [X, Y] = px(ev.radius * std::cos(ev.theta), ev.radius * std::sin(ev.theta));
        out << "  <circle cx=\"" << X << "\" cy=\"" << Y << "\" r=\"4\" fill=\"" << color
            << "\"/>\n";
    }
    out << "</svg>\n";
    return out.str();
}

std::string csv_escape(const std::string& field) {
    const bool needs = field.find_first_of(",\"\r\n") != std::string::npos;
    if (!needs) return field;
    std::string out = "\"";
    for (char ch : field) {
        if (ch == '"') out += '"';
        out += ch;
    }
    out += '"';
    return out;
}

} // namespace cylpack
