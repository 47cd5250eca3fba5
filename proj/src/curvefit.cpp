#include "arx/curvefit.hpp"

#include <algorithm>
#include <array>
#include <cctype>
#include <cmath>
#include <istream>
#include <limits>

namespace arx {

namespace {

void check_samples(const std::vector<Sample1D>& samples, std::size_t min_count,
                   const char* what) {
    if (samples.size() < min_count)
        throw std::invalid_argument(std::string(what) + " fit needs at least " +
                                    std::to_string(min_count) + " samples");
    for (std::size_t i = 1; i < samples.size(); ++i)
        if (!(samples[i].s > samples[i - 1].s))
            throw std::invalid_argument("sample s values must be strictly increasing");
}

// exact least squares for v = c0 + c1 s + c2 s^2, solved with s shifted
// to its mean for conditioning
std::array<double, 3> parabola_ls(const std::vector<Sample1D>& samples) {
    double mean = 0.0;
    for (const auto& p : samples) mean += p.s;
    mean /= double(samples.size());

    double m[3][4] = {};
    for (const auto& p : samples) {
        const double t = p.s - mean;
        const double row[3] = {1.0, t, t * t};
        for (int i = 0; i < 3; ++i) {
            for (int j = 0; j < 3; ++j) m[i][j] += row[i] * row[j];
            m[i][3] += row[i] * p.v;
        }
    }
    for (int col = 0; col < 3; ++col) {
        int piv = col;
        for (int r = col + 1; r < 3; ++r)
            if (std::fabs(m[r][col]) > std::fabs(m[piv][col])) piv = r;
        for (int j = 0; j < 4; ++j) std::swap(m[piv][j], m[col][j]);
        if (std::fabs(m[col][col]) < 1e-300)
            throw std::invalid_argument("degenerate sample geometry for a parabola fit");
        for (int r = 0; r < 3; ++r) {
            if (r == col) continue;
            const double k = m[r][col] / m[col][col];
            for (int j = col; j < 4; ++j) m[r][j] -= k * m[col][j];
        }
    }
    const double b0 = m[0][3] / m[0][0];
    const double b1 = m[1][3] / m[1][1];
    const double b2 = m[2][3] / m[2][2];
    return {b0 - b1 * mean + b2 * mean * mean, b1 - 2.0 * b2 * mean, b2};
}

FittedCurve fit_parabola(const std::vector<Sample1D>& samples) {
    FittedCurve out;
    out.family = CurveFamily::parabola;
    const auto c = parabola_ls(samples);
    out.c0 = c[0];
    out.c1 = c[1];
    out.c2 = c[2];
    out.s_min = samples.front().s;
    out.s_max = samples.back().s;
    out.rms_residual = rms_against(out, samples);
    return out;
}

bool solve3(double m[3][4], double step[3]) {
    for (int col = 0; col < 3; ++col) {
        int piv = col;
        for (int r = col + 1; r < 3; ++r)
            if (std::fabs(m[r][col]) > std::fabs(m[piv][col])) piv = r;
        for (int j = 0; j < 4; ++j) std::swap(m[piv][j], m[col][j]);
        if (std::fabs(m[col][col]) < 1e-300) return false;
        for (int r = 0; r < 3; ++r) {
            if (r == col) continue;
            const double k = m[r][col] / m[col][col];
            for (int j = col; j < 4; ++j) m[r][j] -= k * m[col][j];
        }
    }
    for (int i = 0; i < 3; ++i) step[i] = m[i][3] / m[i][i];
    return true;
}

FittedCurve fit_circle(const std::vector<Sample1D>& samples) {
    const auto seed = parabola_ls(samples);
    FittedCurve out;
    out.family = CurveFamily::circle;
    out.s_min = samples.front().s;
    out.s_max = samples.back().s;
    const double span = out.s_max - out.s_min;

    if (std::fabs(seed[2]) * span * span * 0.25 < 1e-12) {
        // collinear to numerical precision; the R -> infinity limit
        out.parabola_equivalent = true;
        out.c0 = seed[0];
        out.c1 = seed[1];
        out.c2 = seed[2];
        out.R = std::numeric_limits<double>::infinity();
        out.rms_residual = rms_against(out, samples);
        return out;
    }

    double R = 1.0 / (2.0 * std::fabs(seed[2]));
    const double sv = -seed[1] / (2.0 * seed[2]);
    const double vv = seed[0] + sv * (seed[1] + seed[2] * sv);
    const int branch = seed[2] < 0.0 ? 1 : -1;
    double s0 = sv;
    double v0 = vv - branch * R;

    auto sse_geom = [&](double cs, double cv, double cr) {
        double sse = 0.0;
        for (const auto& p : samples) {
            const double r = std::hypot(p.s - cs, p.v - cv) - cr;
            sse += r * r;
        }
        return sse;
    };

    double sse = sse_geom(s0, v0, R);
    bool converged = false;
    for (int it = 0; it < 100 && !converged; ++it) {
        double m[3][4] = {};
        for (const auto& p : samples) {
            const double dx = p.s - s0, dy = p.v - v0;
            const double d = std::hypot(dx, dy);
            if (d < 1e-300) continue;
            const double J[3] = {-dx / d, -dy / d, -1.0};
            const double r = d - R;
            for (int i = 0; i < 3; ++i) {
                for (int j = 0; j < 3; ++j) m[i][j] += J[i] * J[j];
                m[i][3] += -J[i] * r;
            }
        }
        double step[3];
        if (!solve3(m, step)) break;
        double lambda = 1.0;
        double ns0 = s0, nv0 = v0, nR = R, nsse = sse;
        for (int halving = 0; halving < 30; ++halving) {
            const double ts0 = s0 + lambda * step[0];
            const double tv0 = v0 + lambda * step[1];
            const double tR = R + lambda * step[2];
            const double t = tR > 0.0 ? sse_geom(ts0, tv0, tR)
                                      : std::numeric_limits<double>::infinity();
            if (t <= sse) {
                ns0 = ts0; nv0 = tv0; nR = tR; nsse = t;
                break;
            }
            lambda *= 0.5;
        }
        const double scale = std::max({std::fabs(s0), std::fabs(v0), std::fabs(R), 1.0});
        const double moved = std::max({std::fabs(ns0 - s0), std::fabs(nv0 - v0),
                                       std::fabs(nR - R)});
        s0 = ns0; v0 = nv0; R = nR; sse = nsse;
        if (moved < 1e-12 * scale) converged = true;
    }

    out.s0 = s0;
    out.v0 = v0;
    out.R = R;
    double mean_v = 0.0;
    for (const auto& p : samples) mean_v += p.v;
    out.branch = mean_v / double(samples.size()) >= v0 ? 1 : -1;
    out.rms_residual = rms_against(out, samples);
    if (!converged) throw FitError("circle fit did not converge within 100 iterations", out);
    return out;
}

FittedCurve fit_catenary(const std::vector<Sample1D>& samples) {
    const auto seed = parabola_ls(samples);
    const double span = samples.back().s - samples.front().s;
    if (std::fabs(seed[2]) * span * span * 0.25 < 1e-12) {
        FittedCurve flat;
        flat.family = CurveFamily::parabola;
        flat.c0 = seed[0];
        flat.c1 = seed[1];
        flat.c2 = seed[2];
        flat.s_min = samples.front().s;
        flat.s_max = samples.back().s;
        flat.rms_residual = rms_against(flat, samples);
        throw FitError("samples are collinear; the catenary scale is unbounded", flat);
    }

    FittedCurve out;
    out.family = CurveFamily::catenary;
    out.s_min = samples.front().s;
    out.s_max = samples.back().s;
    const int sign = seed[2] > 0.0 ? 1 : -1;
    double a0 = 1.0 / (2.0 * std::fabs(seed[2]));
    double s0 = -seed[1] / (2.0 * seed[2]);
    double v0 = seed[0] + s0 * (seed[1] + seed[2] * s0) - sign * a0;

    auto model = [&](double a, double sc, double vc, double s) {
        return vc + sign * a * std::cosh((s - sc) / a);
    };
    auto sse_of = [&](double a, double sc, double vc) {
        double sse = 0.0;
        for (const auto& p : samples) {
            const double r = p.v - model(a, sc, vc, p.s);
            sse += r * r;
        }
        return sse;
    };

    double sse = sse_of(a0, s0, v0);
    bool converged = false;
    for (int it = 0; it < 100 && !converged; ++it) {
        double m[3][4] = {};
        for (const auto& p : samples) {
            const double u = (p.s - s0) / a0;
            const double ch = std::cosh(u), sh = std::sinh(u);
            const double J[3] = {sign * (ch - u * sh), -sign * sh, 1.0};
            const double r = p.v - (v0 + sign * a0 * ch);
            for (int i = 0; i < 3; ++i) {
                for (int j = 0; j < 3; ++j) m[i][j] += J[i] * J[j];
                m[i][3] += J[i] * r;
            }
        }
        double step[3];
        if (!solve3(m, step)) break;
        double lambda = 1.0;
        double na = a0, ns = s0, nv = v0, nsse = sse;
        for (int halving = 0; halving < 30; ++halving) {
            const double ta = a0 + lambda * step[0];
            const double ts = s0 + lambda * step[1];
            const double tv = v0 + lambda * step[2];
            const double t = ta > 0.0 ? sse_of(ta, ts, tv)
                                      : std::numeric_limits<double>::infinity();
            if (t <= sse) {
                na = ta; ns = ts; nv = tv; nsse = t;
                break;
            }
            lambda *= 0.5;
        }
        const double scale = std::max({std::fabs(a0), std::fabs(s0), std::fabs(v0), 1.0});
        const double moved = std::max({std::fabs(na - a0), std::fabs(ns - s0),
                                       std::fabs(nv - v0)});
        a0 = na; s0 = ns; v0 = nv; sse = nsse;
        if (moved < 1e-12 * scale) converged = true;
    }

    out.a0 = a0;
    out.s0 = s0;
    out.v0 = v0;
    out.branch = sign;
    out.rms_residual = rms_against(out, samples);
    if (!converged) throw FitError("catenary fit did not converge within 100 iterations", out);
    return out;
}

}  // namespace

double FittedCurve::eval(double s) const {
    switch (family) {
        case CurveFamily::parabola:
            return c0 + (c1 + c2 * s) * s;
        case CurveFamily::circle: {
            if (parabola_equivalent) return c0 + (c1 + c2 * s) * s;
            const double dx = s - s0;
            const double arg = std::max(R * R - dx * dx, 0.0);
            return v0 + double(branch) * std::sqrt(arg);
        }
        case CurveFamily::catenary:
            return v0 + double(branch) * a0 * std::cosh((s - s0) / a0);
    }
    return 0.0;
}

FittedCurve fit_curve(CurveFamily family, const std::vector<Sample1D>& samples) {
    switch (family) {
        case CurveFamily::parabola:
            check_samples(samples, 3, "parabola");
            return fit_parabola(samples);
        case CurveFamily::circle:
            check_samples(samples, 3, "circle");
            return fit_circle(samples);
        case CurveFamily::catenary:
            check_samples(samples, 4, "catenary");
            return fit_catenary(samples);
    }
    throw std::invalid_argument("unknown curve family");
}

double sagitta(const FittedCurve& curve) {
    const double lo = curve.s_min, hi = curve.s_max;
    if (!(hi > lo)) throw std::invalid_argument("curve domain is degenerate");
    const double L = hi - lo;
    if (curve.family == CurveFamily::parabola || curve.parabola_equivalent)
        return std::fabs(curve.c2) * L * L * 0.25;

    const double vlo = curve.eval(lo), vhi = curve.eval(hi);
    auto dev = [&](double s) {
        return std::fabs(curve.eval(s) - (vlo + (vhi - vlo) * (s - lo) / L));
    };
    const int n = 2048;
    int best = 0;
    double best_dev = 0.0;
    for (int i = 0; i <= n; ++i) {
        const double d = dev(lo + L * i / n);
        if (d > best_dev) {
            best_dev = d;
            best = i;
        }
    }
    double gl = std::max(lo, lo + L * (best - 1) / n);
    double gr = std::min(hi, lo + L * (best + 1) / n);
    const double inv_phi = (std::sqrt(5.0) - 1.0) * 0.5;
    double x1 = gr - inv_phi * (gr - gl), x2 = gl + inv_phi * (gr - gl);
    double f1 = dev(x1), f2 = dev(x2);
    for (int it = 0; it < 160; ++it) {
        if (f1 < f2) {
            gl = x1; x1 = x2; f1 = f2;
            x2 = gl + inv_phi * (gr - gl);
            f2 = dev(x2);
        } else {
            gr = x2; x2 = x1; f2 = f1;
            x1 = gr - inv_phi * (gr - gl);
            f1 = dev(x1);
        }
    }
    return std::max({best_dev, f1, f2});
}

double rms_against(const FittedCurve& curve, const std::vector<Sample1D>& samples) {
    if (samples.empty()) throw std::invalid_argument("no samples");
    double sse = 0.0;
    for (const auto& p : samples) {
        const double r = p.v - curve.eval(p.s);
        sse += r * r;
    }
    return std::sqrt(sse / double(samples.size()));
}

std::vector<Sample1D> read_samples_csv(std::istream& in) {
    auto strip = [](std::string s) {
        std::string out;
        for (char ch : s)
            if (!std::isspace(static_cast<unsigned char>(ch))) out += ch;
        return out;
    };
    std::string line;
    if (!std::getline(in, line)) throw std::runtime_error("empty sample file");
    if (strip(line) != "s,v")
        throw std::runtime_error("sample file must start with the header \"s,v\"");
    std::vector<Sample1D> out;
    std::size_t lineno = 1;
    while (std::getline(in, line)) {
        ++lineno;
        const std::string t = strip(line);
        if (t.empty()) continue;
        const auto comma = t.find(',');
        if (comma == std::string::npos)
            throw std::runtime_error("line " + std::to_string(lineno) + ": expected s,v");
        std::size_t used1 = 0, used2 = 0;
        Sample1D p;
        const std::string left = t.substr(0, comma), right = t.substr(comma + 1);
        try {
            p.s = std::stod(left, &used1);
            p.v = std::stod(right, &used2);
        } catch (const std::exception&) {
            used1 = used2 = 0;
        }
        if (used1 != left.size() || used2 != right.size())
            throw std::runtime_error("line " + std::to_string(lineno) + ": malformed number");
        out.push_back(p);
    }
    return out;
}

const char* family_name(CurveFamily f) {
    switch (f) {
        case CurveFamily::parabola: return "parabola";
        case CurveFamily::circle: return "circle";
        case CurveFamily::catenary: return "catenary";
    }
    return "?";
}

CurveFamily family_from_name(const std::string& name) {
    if (name == "parabola") return CurveFamily::parabola;
    if (name == "circle") return CurveFamily::circle;
    if (name == "catenary") return CurveFamily::catenary;
    throw std::invalid_argument("unknown curve family: " + name);
}

}  // namespace arx
