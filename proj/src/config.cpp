#include "fingertrace/config.hpp"

#include <cmath>
#include <cstdlib>
#include <fstream>
#include <sstream>

namespace fingertrace {

double RunConfig::slope_threshold_for(WristSide wrist_side, int width, int height) const {
    const bool rows = wrist_side == WristSide::Top || wrist_side == WristSide::Bottom;
    return slope_factor * (rows ? width : height);
}

double RunConfig::min_separation_for(int width, int height) const {
    const double diag = std::hypot(width, height);
    return min_separation * diag / 800.0;  // 800 = diagonal of 640x480
}

void RunConfig::validate() const {
    if (band.h_lo < 0 || band.h_lo >= 360 || band.h_hi < 0 || band.h_hi >= 360)
        throw Error("config: hue bounds must be in [0,360)");
    if (band.s_lo > band.s_hi || band.s_lo < 0 || band.s_hi > 1)
        throw Error("config: saturation bounds must satisfy 0 <= s_lo <= s_hi <= 1");
    if (band.v_lo > band.v_hi || band.v_lo < 0 || band.v_hi > 1)
        throw Error("config: value bounds must satisfy 0 <= v_lo <= v_hi <= 1");
    if (smooth_kernel < 1 || smooth_kernel % 2 == 0) throw Error("config: smooth_kernel must be odd");
    if (!(smooth_cutoff > 0 && smooth_cutoff < 1)) throw Error("config: smooth_cutoff must be in (0,1)");
    if (connectivity != Connectivity::Four && connectivity != Connectivity::Eight)
        throw Error("config: connectivity must be 4 or 8");
    if (!(slope_factor > 0)) throw Error("config: slope_factor must be > 0");
    if (tip_threshold < 1 || tip_threshold > 255) throw Error("config: tip_threshold must be in 1..255");
    if (min_cluster < 1) throw Error("config: min_cluster must be >= 1");
    if (min_separation < 0) throw Error("config: min_separation must be >= 0");
    if (max_tips < 0) throw Error("config: max_tips must be >= 0");
}

namespace {

std::string trim(const std::string& s) {
    const auto a = s.find_first_not_of(" \t\r");
    if (a == std::string::npos) return "";
    const auto b = s.find_last_not_of(" \t\r");
    return s.substr(a, b - a + 1);
}

double to_double(const std::string& key, const std::string& value) {
    try {
        std::size_t used = 0;
        const double v = std::stod(value, &used);
        if (used != value.size()) throw std::invalid_argument(value);
        return v;
    } catch (const std::exception&) {
        throw Error("config: bad numeric value for " + key + ": '" + value + "'");
    }
}

int to_int(const std::string& key, const std::string& value) {
    const double v = to_double(key, value);
    if (v != std::floor(v)) throw Error("config: " + key + " must be an integer");
    return static_cast<int>(v);
}

void parse_marker(const std::string& value, std::array<std::uint8_t, 3>& out) {
    std::stringstream ss(value);
    std::string part;
    int i = 0;
    while (std::getline(ss, part, ',')) {
        if (i == 3) throw Error("config: marker_color needs exactly r,g,b");
        const int v = to_int("marker_color", trim(part));
        if (v < 0 || v > 255) throw Error("config: marker_color channel out of range");
        out[i++] = static_cast<std::uint8_t>(v);
    }
    if (i != 3) throw Error("config: marker_color needs exactly r,g,b");
}

}  // namespace

RunConfig parse_config(const std::string& text) {
    RunConfig cfg;
    std::istringstream in(text);
    std::string line;
    int lineno = 0;
    while (std::getline(in, line)) {
        ++lineno;
        const auto hash = line.find('#');
        if (hash != std::string::npos) line = line.substr(0, hash);
        line = trim(line);
        if (line.empty()) continue;
        const auto eq = line.find('=');
        if (eq == std::string::npos)
            throw Error("config line " + std::to_string(lineno) + ": expected key = value");
        const std::string key = trim(line.substr(0, eq));
        const std::string value = trim(line.substr(eq + 1));

        if (key == "h_lo") cfg.band.h_lo = to_double(key, value);
        else if (key == "h_hi") cfg.band.h_hi = to_double(key, value);
        else if (key == "s_lo") cfg.band.s_lo = to_double(key, value);
        else if (key == "s_hi") cfg.band.s_hi = to_double(key, value);
        else if (key == "v_lo") cfg.band.v_lo = to_double(key, value);
        else if (key == "v_hi") cfg.band.v_hi = to_double(key, value);
        else if (key == "smooth_kernel") cfg.smooth_kernel = to_int(key, value);
        else if (key == "smooth_cutoff") cfg.smooth_cutoff = to_double(key, value);
        else if (key == "connectivity") cfg.connectivity = static_cast<Connectivity>(to_int(key, value));
        else if (key == "slope_factor") cfg.slope_factor = to_double(key, value);
        else if (key == "tip_threshold") cfg.tip_threshold = to_int(key, value);
        else if (key == "min_cluster") cfg.min_cluster = to_int(key, value);
        else if (key == "min_separation") cfg.min_separation = to_double(key, value);
        else if (key == "max_tips") cfg.max_tips = to_int(key, value);
        else if (key == "marker_color") parse_marker(value, cfg.marker_color);
        else throw Error("config line " + std::to_string(lineno) + ": unknown key '" + key + "'");
    }
    cfg.validate();
    return cfg;
}

RunConfig load_config(const std::string& path) {
    std::string chosen = path;
    if (chosen.empty()) {
        if (const char* env = std::getenv("FINGERTRACE_CONFIG")) chosen = env;
    }
    if (chosen.empty()) return RunConfig{};
    std::ifstream in(chosen);
    if (!in) throw Error("cannot open config file " + chosen);
    std::stringstream ss;
    ss << in.rdbuf();
    return parse_config(ss.str());
}

std::string config_to_string(const RunConfig& c) {
    std::ostringstream out;
    out << "h_lo = " << c.band.h_lo << "\n"
        << "h_hi = " << c.band.h_hi << "\n"
        << "s_lo = " << c.band.s_lo << "\n"
        << "s_hi = " << c.band.s_hi << "\n"
        << "v_lo = " << c.band.v_lo << "\n"
        << "v_hi = " << c.band.v_hi << "\n"
        << "smooth_kernel = " << c.smooth_kernel << "\n"
        << "smooth_cutoff = " << c.smooth_cutoff << "\n"
        << "connectivity = " << static_cast<int>(c.connectivity) << "\n"
        << "slope_factor = " << c.slope_factor << "\n"
        << "tip_threshold = " << c.tip_threshold << "\n"
        << "min_cluster = " << c.min_cluster << "\n"
        << "min_separation = " << c.min_separation << "\n"
        << "max_tips = " << c.max_tips << "\n"
        << "marker_color = " << int(c.marker_color[0]) << "," << int(c.marker_color[1]) << ","
        << int(c.marker_color[2]) << "\n";
    return out.str();
}

}  // namespace fingertrace
