#include "gje/artifacts.hpp"

#include <cmath>
#include <cstdio>
#include <fstream>
#include <stdexcept>

#include "json.hpp"

namespace gje {

namespace {

constexpr double kPi = 3.14159265358979323846;

std::ofstream open_out(const std::string& path) {
    std::ofstream out(path, std::ios::binary);
    if (!out) throw std::runtime_error("cannot write " + path);
    return out;
}

std::string num(double v) {
    char buf[40];
    std::snprintf(buf, sizeof(buf), "%.10g", v);
    return buf;
}

std::string cell_color(int index) {
    double hue = std::fmod(index * 0.618033988749895, 1.0) * 6.0;
    int sector = (int)hue;
    double frac = hue - sector;
    const double v = 0.93, s = 0.45;
    double p = v * (1 - s), q = v * (1 - s * frac), t = v * (1 - s * (1 - frac));
    double r, g, b;
    switch (sector % 6) {
        case 0: r = v, g = t, b = p; break;
        case 1: r = q, g = v, b = p; break;
        case 2: r = p, g = v, b = t; break;
        case 3: r = p, g = q, b = v; break;
        case 4: r = t, g = p, b = v; break;
        default: r = v, g = p, b = q; break;
    }
    char buf[8];
    std::snprintf(buf, sizeof(buf), "#%02x%02x%02x", (int)std::lround(r * 255),
                  (int)std::lround(g * 255), (int)std::lround(b * 255));
    return buf;
}

void emit_arc(std::string& d, const ArcEdge& e) {
    // split full turns so the endpoints of each arc command stay distinct
    if (std::abs(e.sweep) > 1.5 * kPi) {
        Vec2 mid = e.point(0.5);
        ArcEdge first = ArcEdge::arc(e.p0, mid, e.center, e.radius, e.sweep / 2, e.owner);
        ArcEdge second = ArcEdge::arc(mid, e.p1, e.center, e.radius, e.sweep / 2, e.owner);
        emit_arc(d, first);
        emit_arc(d, second);
        return;
    }
    int large = std::abs(e.sweep) > kPi ? 1 : 0;
    int flag = e.sweep > 0 ? 1 : 0;
    d += " A " + num(e.radius) + " " + num(e.radius) + " 0 " + std::to_string(large) + " " +
         std::to_string(flag) + " " + num(e.p1.x) + " " + num(e.p1.y);
}

}  // namespace

void render_svg(const Diagram& diagram, const std::vector<Site>& sites, const Rect& rect,
                const std::string& path) {
    double w = rect.width(), h = rect.height();
    double dim = std::max(w, h);
    std::ofstream out = open_out(path);
    out << "<svg xmlns=\"http://www.w3.org/2000/svg\" version=\"1.1\" viewBox=\"0 0 " << num(w)
        << " " << num(h) << "\" width=\"800\" height=\"" << num(800.0 * h / w) << "\">\n";
    out << "<g transform=\"matrix(1 0 0 -1 " << num(-rect.lo.x) << " " << num(rect.hi.y)
        << ")\" stroke=\"#000000\" stroke-width=\"" << num(0.0035 * dim) << "\">\n";

    for (size_t i = 0; i < diagram.cells.size(); ++i) {
        const ArcPolygon& cell = diagram.cells[i];
        if (cell.empty()) continue;
        std::string d;
        for (const auto& loop : cell.loops) {
            if (loop.empty()) continue;
            d += (d.empty() ? "M " : " M ") + num(loop[0].p0.x) + " " + num(loop[0].p0.y);
            for (const ArcEdge& e : loop) {
                if (e.is_arc)
                    emit_arc(d, e);
                else
                    d += " L " + num(e.p1.x) + " " + num(e.p1.y);
            }
            d += " Z";
        }
        out << "<path d=\"" << d << "\" fill=\"" << cell_color((int)i)
            << "\" fill-rule=\"evenodd\"/>\n";
    }

    for (const Site& s : sites)
        out << "<circle cx=\"" << num(s.position.x) << "\" cy=\"" << num(s.position.y)
            << "\" r=\"" << num(0.006 * dim) << "\" fill=\"#000000\" stroke=\"none\"/>\n";

    out << "</g>\n</svg>\n";
    if (!out) throw std::runtime_error("cannot write " + path);
}

void write_residual_csv(const SolveResult& result, const std::string& path) {
    std::ofstream out = open_out(path);
    out << "iter,res_l2,res_l1,tau\n";
    char buf[128];
    for (int k = 1; k <= result.iterations; ++k) {
        std::snprintf(buf, sizeof(buf), "%d,%.17g,%.17g,%.17g\n", k, result.res_history[k],
                      result.res_l1_history[k], result.tau_history[k - 1]);
        out << buf;
    }
    if (!out) throw std::runtime_error("cannot write " + path);
}

void export_surface(const GeneratingFunctionSpec& gen, const std::vector<Site>& sites,
                    const std::vector<double>& raw, const Rect& rect, int resolution,
                    const std::string& path) {
    if (resolution < 2) throw std::invalid_argument("export_surface: resolution must be >= 2");
    std::ofstream out = open_out(path);
    char buf[160];
    for (int b = 0; b < resolution; ++b) {
        double y = rect.lo.y + rect.height() * b / (resolution - 1);
        for (int a = 0; a < resolution; ++a) {
            Vec2 x{rect.lo.x + rect.width() * a / (resolution - 1), y};
            double u = g_eval(gen, x, sites[0].position, raw[0]);
            for (size_t j = 1; j < sites.size(); ++j)
                u = std::max(u, g_eval(gen, x, sites[j].position, raw[j]));
            std::snprintf(buf, sizeof(buf), "v %.12g %.12g %.12g\n", x.x, x.y, u);
            out << buf;
        }
    }
    for (int b = 0; b + 1 < resolution; ++b) {
        for (int a = 0; a + 1 < resolution; ++a) {
            int v00 = b * resolution + a + 1;
            int v10 = v00 + 1;
            int v01 = v00 + resolution;
            int v11 = v01 + 1;
            std::snprintf(buf, sizeof(buf), "f %d %d %d\nf %d %d %d\n", v00, v10, v11, v00, v11,
                          v01);
            out << buf;
        }
    }
    if (!out) throw std::runtime_error("cannot write " + path);
}

void write_report(const Problem& p, const SolveResult& result, const std::string& path) {
    nlohmann::ordered_json j;
    j["status"] = to_string(result.status);
    j["iterations"] = result.iterations;
    j["res_l2"] = result.residual_l2;
    j["res_l1"] = result.residual_l1;
    j["wall_ms"] = result.wall_ms;
    j["fallback_used"] = result.fallback_used;
    j["tau_history"] = result.tau_history;
    j["res_history"] = result.res_history;
    j["res_l1_history"] = result.res_l1_history;
    std::vector<double> psi(result.psi.data(), result.psi.data() + result.psi.size());
    j["psi"] = psi;
    j["psi_raw"] = to_raw(p.gen, result.psi);

    std::ofstream out = open_out(path);
    out << j.dump(2) << "\n";
    if (!out) throw std::runtime_error("cannot write " + path);
}

}  // namespace gje
