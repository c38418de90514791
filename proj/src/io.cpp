#include "durrmeyer/io.hpp"

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <cstdlib>
#include <fstream>
#include <sstream>

namespace durrmeyer::io {

std::string format_double(double v) {
    char buf[40];
    std::snprintf(buf, sizeof buf, "%.17g", v);
    return buf;
}

void write_csv(const std::string& path, const std::vector<std::string>& header,
               const std::vector<std::vector<double>>& columns) {
    if (header.size() != columns.size())
        throw io_error("csv header width does not match column count");
    const std::size_t rows = columns.empty() ? 0 : columns.front().size();
    for (const auto& col : columns)
        if (col.size() != rows) throw io_error("csv columns have unequal lengths");

    std::ofstream out(path);
    if (!out) throw io_error("cannot open " + path + " for writing");
    for (std::size_t c = 0; c < header.size(); ++c)
        out << (c ? "," : "") << header[c];
    out << '\n';
    for (std::size_t r = 0; r < rows; ++r) {
        for (std::size_t c = 0; c < columns.size(); ++c)
            out << (c ? "," : "") << format_double(columns[c][r]);
        out << '\n';
    }
    if (!out) throw io_error("write failed for " + path);
}

namespace {

std::vector<std::string> split_line(const std::string& line) {
    std::vector<std::string> out;
    std::string cell;
    std::stringstream ss(line);
    while (std::getline(ss, cell, ',')) out.push_back(cell);
    if (!line.empty() && line.back() == ',') out.emplace_back();
    return out;
}

}

std::vector<std::vector<double>> read_csv(const std::string& path,
                                          std::vector<std::string>* header) {
    std::ifstream in(path);
    if (!in) throw io_error("cannot open " + path);
    std::string line;
    if (!std::getline(in, line)) throw io_error(path + " is empty");
    if (!line.empty() && line.back() == '\r') line.pop_back();
    const auto head = split_line(line);
    if (header) *header = head;

    std::vector<std::vector<double>> cols(head.size());
    std::size_t lineno = 1;
    while (std::getline(in, line)) {
        ++lineno;
        if (!line.empty() && line.back() == '\r') line.pop_back();
        if (line.empty()) continue;
        const auto cells = split_line(line);
        if (cells.size() != head.size())
            throw io_error(path + ":" + std::to_string(lineno) + ": ragged row");
        for (std::size_t c = 0; c < cells.size(); ++c) {
            char* end = nullptr;
            const double v = std::strtod(cells[c].c_str(), &end);
            if (end == cells[c].c_str())
                throw io_error(path + ":" + std::to_string(lineno) + ": bad number '" +
                               cells[c] + "'");
            cols[c].push_back(v);
        }
    }
    return cols;
}

namespace {

constexpr int kWidth = 720;
constexpr int kHeight = 480;
constexpr double kLeft = 72.0, kRight = 24.0, kTop = 44.0, kBottom = 52.0;

const char* const kPalette[] = {"#1f77b4", "#d62728", "#2ca02c",
                                "#9467bd", "#ff7f0e", "#8c564b"};
constexpr std::size_t kPaletteSize = sizeof kPalette / sizeof kPalette[0];

std::string escape_xml(const std::string& s) {
    std::string out;
    out.reserve(s.size());
    for (char ch : s) {
        switch (ch) {
            case '&': out += "&amp;"; break;
            case '<': out += "&lt;"; break;
            case '>': out += "&gt;"; break;
            default: out += ch;
        }
    }
    return out;
}

std::string short_num(double v) {
    char buf[32];
    std::snprintf(buf, sizeof buf, "%.4g", v);
    return buf;
}

std::string pixel(double v) {
    char buf[32];
    std::snprintf(buf, sizeof buf, "%.2f", v);
    return buf;
}

}

void write_svg(const std::string& path, const std::string& title,
               const std::vector<series>& plots) {
    if (plots.empty()) throw io_error("svg needs at least one series");
    double xmin = 0.0, xmax = 0.0, ymin = 0.0, ymax = 0.0;
    bool first = true;
    for (const auto& s : plots) {
        if (s.points.empty()) throw io_error("svg series '" + s.label + "' is empty");
        for (const auto& [x, y] : s.points) {
            if (!std::isfinite(x) || !std::isfinite(y))
                throw io_error("svg series '" + s.label + "' has a non-finite point");
            if (first) {
                xmin = xmax = x;
                ymin = ymax = y;
                first = false;
            } else {
                xmin = std::min(xmin, x);
                xmax = std::max(xmax, x);
                ymin = std::min(ymin, y);
                ymax = std::max(ymax, y);
            }
        }
    }
    if (xmax - xmin < 1e-300) xmax = xmin + 1.0;
    const double ypad = (ymax - ymin < 1e-300) ? 1.0 : 0.05 * (ymax - ymin);
    ymin -= ypad;
    ymax += ypad;

    const double pw = kWidth - kLeft - kRight;
    const double ph = kHeight - kTop - kBottom;
    const auto px = [&](double x) { return kLeft + (x - xmin) / (xmax - xmin) * pw; };
    const auto py = [&](double y) { return kTop + (ymax - y) / (ymax - ymin) * ph; };

    std::ofstream out(path);
    if (!out) throw io_error("cannot open " + path + " for writing");
    out << "<?xml version=\"1.0\" encoding=\"UTF-8\"?>\n"
        << "<svg xmlns=\"http://www.w3.org/2000/svg\" width=\"" << kWidth
        << "\" height=\"" << kHeight << "\" viewBox=\"0 0 " << kWidth << ' '
        << kHeight << "\">\n"
        << "<rect width=\"" << kWidth << "\" height=\"" << kHeight
        << "\" fill=\"white\"/>\n"
        << "<text x=\"" << kWidth / 2 << "\" y=\"24\" text-anchor=\"middle\" "
        << "font-family=\"sans-serif\" font-size=\"15\">" << escape_xml(title)
        << "</text>\n"
        << "<rect x=\"" << pixel(kLeft) << "\" y=\"" << pixel(kTop) << "\" width=\""
        << pixel(pw) << "\" height=\"" << pixel(ph)
        << "\" fill=\"none\" stroke=\"#444444\"/>\n";

    constexpr int kTicks = 5;
    for (int i = 0; i < kTicks; ++i) {
        const double tx = xmin + (xmax - xmin) * i / (kTicks - 1);
        const double ty = ymin + (ymax - ymin) * i / (kTicks - 1);
        out << "<line x1=\"" << pixel(px(tx)) << "\" y1=\"" << pixel(kTop + ph)
            << "\" x2=\"" << pixel(px(tx)) << "\" y2=\"" << pixel(kTop + ph + 5)
            << "\" stroke=\"#444444\"/>\n"
            << "<text x=\"" << pixel(px(tx)) << "\" y=\"" << pixel(kTop + ph + 18)
            << "\" text-anchor=\"middle\" font-family=\"sans-serif\" font-size=\"11\">"
            << short_num(tx) << "</text>\n"
            << "<line x1=\"" << pixel(kLeft - 5) << "\" y1=\"" << pixel(py(ty))
            << "\" x2=\"" << pixel(kLeft) << "\" y2=\"" << pixel(py(ty))
            << "\" stroke=\"#444444\"/>\n"
            << "<text x=\"" << pixel(kLeft - 8) << "\" y=\"" << pixel(py(ty) + 4)
            << "\" text-anchor=\"end\" font-family=\"sans-serif\" font-size=\"11\">"
            << short_num(ty) << "</text>\n";
    }

    for (std::size_t s = 0; s < plots.size(); ++s) {
        out << "<polyline fill=\"none\" stroke=\"" << kPalette[s % kPaletteSize]
            << "\" stroke-width=\"1.5\" points=\"";
        for (std::size_t i = 0; i < plots[s].points.size(); ++i) {
            if (i) out << ' ';
            out << pixel(px(plots[s].points[i].first)) << ','
                << pixel(py(plots[s].points[i].second));
        }
        out << "\"/>\n";
    }

    for (std::size_t s = 0; s < plots.size(); ++s) {
        const double ly = kTop + 14.0 + 16.0 * static_cast<double>(s);
        out << "<line x1=\"" << pixel(kLeft + pw - 150) << "\" y1=\"" << pixel(ly)
            << "\" x2=\"" << pixel(kLeft + pw - 126) << "\" y2=\"" << pixel(ly)
            << "\" stroke=\"" << kPalette[s % kPaletteSize]
            << "\" stroke-width=\"1.5\"/>\n"
            << "<text x=\"" << pixel(kLeft + pw - 120) << "\" y=\"" << pixel(ly + 4)
            << "\" font-family=\"sans-serif\" font-size=\"11\">"
            << escape_xml(plots[s].label) << "</text>\n";
    }
    out << "</svg>\n";
    if (!out) throw io_error("write failed for " + path);
}

}
