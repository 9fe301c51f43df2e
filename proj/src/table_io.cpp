#include "frdt/table_io.hpp"

#include <algorithm>
#include <array>
#include <cmath>
#include <cstdio>
#include <fstream>
#include <istream>
#include <map>
#include <sstream>
#include <vector>

#include "frdt/errors.hpp"

namespace frdt {

namespace {

constexpr const char* kHeaderU = "x,t,re_u,im_u,abs_u";
constexpr const char* kHeaderV = ",re_v,im_v,abs_v";

void append_number(std::string& out, double v) {
    std::array<char, 40> buf{};
    std::snprintf(buf.data(), buf.size(), "%.17g", v);
    out += buf.data();
}

void require_rows(const SolutionTable& table, const char* op) {
    if (table.rows.empty()) {
        throw UsageError(std::string(op) + ": table is empty");
    }
}

void write_file(const std::filesystem::path& path, const std::string& content) {
    std::ofstream out(path, std::ios::binary | std::ios::trunc);
    if (!out) {
        throw IoError("cannot open " + path.string() + " for writing");
    }
    out << content;
    out.flush();
    if (!out) {
        throw IoError("write to " + path.string() + " failed");
    }
}

std::vector<std::string> split(const std::string& line, char sep) {
    std::vector<std::string> parts;
    std::string cur;
    std::istringstream ss(line);
    while (std::getline(ss, cur, sep)) parts.push_back(cur);
    return parts;
}

}  // namespace

std::string format_csv(const SolutionTable& table) {
    std::string out = kHeaderU;
    if (table.coupled) out += kHeaderV;
    out += '\n';
    for (const auto& r : table.rows) {
        std::array<double, 8> vals{r.x, r.t, r.re_u, r.im_u, r.abs_u, r.re_v, r.im_v, r.abs_v};
        const std::size_t n = table.coupled ? 8 : 5;
        for (std::size_t i = 0; i < n; ++i) {
            if (i) out += ',';
            append_number(out, vals[i]);
        }
        out += '\n';
    }
    return out;
}

SolutionTable parse_csv(std::istream& in) {
    std::string line;
    if (!std::getline(in, line)) {
        throw UsageError("parse_csv: missing header");
    }
    SolutionTable table;
    if (line == std::string(kHeaderU) + kHeaderV) {
        table.coupled = true;
    } else if (line != kHeaderU) {
        throw UsageError("parse_csv: unexpected header '" + line + "'");
    }
    const std::size_t width = table.coupled ? 8 : 5;
    while (std::getline(in, line)) {
        if (line.empty()) continue;
        const auto cells = split(line, ',');
        if (cells.size() != width) {
            throw UsageError("parse_csv: row has " + std::to_string(cells.size()) + " cells");
        }
        std::array<double, 8> v{};
        for (std::size_t i = 0; i < width; ++i) v[i] = std::stod(cells[i]);
        table.rows.push_back({v[0], v[1], v[2], v[3], v[4], v[5], v[6], v[7]});
    }
    return table;
}

nlohmann::json table_to_json(const SolutionTable& table, const nlohmann::json& meta) {
    nlohmann::json rows = nlohmann::json::array();
    for (const auto& r : table.rows) {
        nlohmann::json row = {{"x", r.x}, {"t", r.t}, {"re_u", r.re_u}, {"im_u", r.im_u},
                              {"abs_u", r.abs_u}};
        if (table.coupled) {
            row["re_v"] = r.re_v;
            row["im_v"] = r.im_v;
            row["abs_v"] = r.abs_v;
        }
        rows.push_back(std::move(row));
    }
    return {{"meta", meta}, {"rows", std::move(rows)}};
}

std::string format_svg(const SolutionTable& table, const std::string& title) {
    require_rows(table, "format_svg");

    struct Panel {
        const char* label;
        double SolutionRow::*field;
    };
    std::vector<Panel> panels{{"Re u", &SolutionRow::re_u}, {"Im u", &SolutionRow::im_u}};
    if (table.coupled) {
        panels.push_back({"Re v", &SolutionRow::re_v});
        panels.push_back({"Im v", &SolutionRow::im_v});
    }

    // Group rows by t, keeping x order.
    std::map<double, std::vector<const SolutionRow*>> slices;
    double x_lo = table.rows.front().x, x_hi = x_lo;
    for (const auto& r : table.rows) {
        slices[r.t].push_back(&r);
        x_lo = std::min(x_lo, r.x);
        x_hi = std::max(x_hi, r.x);
    }
    if (x_hi == x_lo) x_hi = x_lo + 1.0;

    constexpr double kWidth = 720.0, kPanelH = 220.0, kMargin = 50.0, kTop = 30.0;
    const double height = kTop + panels.size() * (kPanelH + kMargin);
    const double plot_w = kWidth - 2 * kMargin;

    std::string out;
    char buf[256];
    std::snprintf(buf, sizeof buf,
                  "<svg xmlns=\"http://www.w3.org/2000/svg\" width=\"%.0f\" height=\"%.0f\" "
                  "viewBox=\"0 0 %.0f %.0f\">\n",
                  kWidth, height, kWidth, height);
    out += buf;
    out += "<rect width=\"100%\" height=\"100%\" fill=\"white\"/>\n";
    if (!title.empty()) {
        std::snprintf(buf, sizeof buf,
                      "<text x=\"%.0f\" y=\"20\" font-family=\"sans-serif\" font-size=\"14\" "
                      "text-anchor=\"middle\">",
                      kWidth / 2);
        out += buf;
        out += title;
        out += "</text>\n";
    }

    const std::size_t n_slices = slices.size();
    for (std::size_t p = 0; p < panels.size(); ++p) {
        const auto& panel = panels[p];
        double y_lo = table.rows.front().*panel.field, y_hi = y_lo;
        for (const auto& r : table.rows) {
            y_lo = std::min(y_lo, r.*panel.field);
            y_hi = std::max(y_hi, r.*panel.field);
        }
        if (y_hi - y_lo < 1e-300) {
            y_lo -= 0.5;
            y_hi += 0.5;
        }
        const double top = kTop + p * (kPanelH + kMargin) + 10.0;
        std::snprintf(buf, sizeof buf,
                      "<g><rect x=\"%.1f\" y=\"%.1f\" width=\"%.1f\" height=\"%.1f\" fill=\"none\" "
                      "stroke=\"#444\"/>\n",
                      kMargin, top, plot_w, kPanelH);
        out += buf;
        std::snprintf(buf, sizeof buf,
                      "<text x=\"%.1f\" y=\"%.1f\" font-family=\"sans-serif\" font-size=\"12\">%s"
                      "  [%.6g, %.6g]  x in [%.6g, %.6g]</text>\n",
                      kMargin, top - 3.0, panel.label, y_lo, y_hi, x_lo, x_hi);
        out += buf;

        std::size_t s = 0;
        for (const auto& [t, rows] : slices) {
            // Blue (earliest t) to red (latest t).
            const double f = n_slices > 1 ? static_cast<double>(s) / (n_slices - 1) : 0.0;
            const int red = static_cast<int>(std::lround(255 * f));
            const int blue = 255 - red;
            out += "<polyline fill=\"none\" stroke-width=\"1\" stroke=\"";
            std::snprintf(buf, sizeof buf, "rgb(%d,0,%d)\" points=\"", red, blue);
            out += buf;
            for (std::size_t i = 0; i < rows.size(); ++i) {
                const double px = kMargin + (rows[i]->x - x_lo) / (x_hi - x_lo) * plot_w;
                const double py = top + kPanelH - (rows[i]->*panel.field - y_lo) / (y_hi - y_lo) * kPanelH;
                std::snprintf(buf, sizeof buf, "%s%.2f,%.2f", i ? " " : "", px, py);
                out += buf;
            }
            std::snprintf(buf, sizeof buf, "\"><title>t=%.6g</title></polyline>\n", t);
            out += buf;
            ++s;
        }
        out += "</g>\n";
    }
    out += "</svg>\n";
    return out;
}

void emit_csv(const SolutionTable& table, const std::filesystem::path& path) {
    require_rows(table, "emit_csv");
    write_file(path, format_csv(table));
}

void emit_json(const SolutionTable& table, const nlohmann::json& meta,
               const std::filesystem::path& path) {
    require_rows(table, "emit_json");
    write_file(path, table_to_json(table, meta).dump(2) + "\n");
}

void emit_svg(const SolutionTable& table, const std::filesystem::path& path,
              const std::string& title) {
    write_file(path, format_svg(table, title));
}

}  // namespace frdt
