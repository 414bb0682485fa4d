#include "mcflab/curve_io.hpp"

#include <charconv>
#include <fstream>
#include <sstream>

#include <json.hpp>

#include "mcflab/errors.hpp"

namespace mcf {

std::string format_double(double x) {
    char buf[64];
    const auto res = std::to_chars(buf, buf + sizeof(buf), x);
    return std::string(buf, res.ptr);
}

CurveRecord CurveRecord::from_run(const SolitonRun& run) {
    CurveRecord rec;
    const size_t n = run.states.size();
    rec.s = run.s;
    rec.u.reserve(n);
    rec.v.reserve(n);
    rec.w.reserve(n);
    rec.z.reserve(n);
    for (const auto& st : run.states) {
        rec.u.push_back(st.u);
        rec.v.push_back(st.v);
        rec.w.push_back(st.w);
        rec.z.push_back(st.z);
    }
    return rec;
}

CurveRecord CurveRecord::from_curve(const Curve& c, const SurfaceMetric* metric) {
    CurveRecord rec;
    const auto s = arclength_table(c, metric);
    rec.s.assign(s.begin(), s.begin() + c.pts.size());
    for (const Vec2& p : c.pts) {
        rec.u.push_back(p.x());
        rec.v.push_back(p.y());
    }
    if (c.pts.size() >= 5) {
        for (const auto& st : curve_states(c, metric)) {
            rec.w.push_back(st.vel.x());
            rec.z.push_back(st.vel.y());
        }
    } else {
        rec.w.assign(c.pts.size(), 0.0);
        rec.z.assign(c.pts.size(), 0.0);
    }
    return rec;
}

Curve CurveRecord::to_curve(bool closed) const {
    Curve c;
    c.closed = closed;
    c.param = CurveParam::Arclength;
    for (size_t i = 0; i < u.size(); ++i) c.pts.emplace_back(u[i], v[i]);
    return c;
}

namespace {

void write_csv(const CurveRecord& rec, const std::vector<double>* residual,
               const std::string& path) {
    std::ofstream out(path);
    if (!out) throw IOError("cannot open " + path + " for writing");
    out << (residual ? "s,u,v,w,z,residual\n" : "s,u,v,w,z\n");
    for (size_t i = 0; i < rec.size(); ++i) {
        out << format_double(rec.s[i]) << ',' << format_double(rec.u[i]) << ','
            << format_double(rec.v[i]) << ',' << format_double(rec.w[i]) << ','
            << format_double(rec.z[i]);
        if (residual) out << ',' << format_double((*residual)[i]);
        out << '\n';
    }
    if (!out) throw IOError("write failed for " + path);
}

} // namespace

void export_curve(const CurveRecord& rec, const std::string& path,
                  CurveFormat format) {
    if (format == CurveFormat::CSV) {
        write_csv(rec, nullptr, path);
        return;
    }
    nlohmann::json j;
    j["s"] = rec.s;
    j["u"] = rec.u;
    j["v"] = rec.v;
    j["w"] = rec.w;
    j["z"] = rec.z;
    std::ofstream out(path);
    if (!out) throw IOError("cannot open " + path + " for writing");
    out << j.dump(2) << '\n';
    if (!out) throw IOError("write failed for " + path);
}

void export_curve_with_residual(const CurveRecord& rec,
                                const std::vector<double>& residual,
                                const std::string& path) {
    if (residual.size() != rec.size())
        throw IOError("residual column length mismatch");
    write_csv(rec, &residual, path);
}

namespace {

double parse_double(const std::string& tok, const std::string& path) {
    double x = 0;
    const auto res = std::from_chars(tok.data(), tok.data() + tok.size(), x);
    if (res.ec != std::errc() || res.ptr != tok.data() + tok.size())
        throw IOError("bad numeric field '" + tok + "' in " + path);
    return x;
}

} // namespace

CurveRecord import_curve(const std::string& path, CurveFormat format) {
    std::ifstream in(path);
    if (!in) throw IOError("cannot open " + path);
    CurveRecord rec;

    if (format == CurveFormat::JSON) {
        nlohmann::json j;
        try {
            in >> j;
        } catch (const std::exception& e) {
            throw IOError(std::string("bad JSON curve: ") + e.what());
        }
        rec.s = j.at("s").get<std::vector<double>>();
        rec.u = j.at("u").get<std::vector<double>>();
        rec.v = j.at("v").get<std::vector<double>>();
        rec.w = j.at("w").get<std::vector<double>>();
        rec.z = j.at("z").get<std::vector<double>>();
        return rec;
    }

    std::string line;
    if (!std::getline(in, line)) throw IOError("empty CSV " + path);
    if (line != "s,u,v,w,z" && line != "s,u,v,w,z,residual")
        throw IOError("unexpected CSV header in " + path);
    while (std::getline(in, line)) {
        if (line.empty()) continue;
        std::stringstream ss(line);
        std::string tok;
        std::vector<double> row;
        while (std::getline(ss, tok, ',')) row.push_back(parse_double(tok, path));
        if (row.size() < 5) throw IOError("short CSV row in " + path);
        rec.s.push_back(row[0]);
        rec.u.push_back(row[1]);
        rec.v.push_back(row[2]);
        rec.w.push_back(row[3]);
        rec.z.push_back(row[4]);
    }
    return rec;
}

} // namespace mcf
