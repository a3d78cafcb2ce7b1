#pragma once

// JSON descriptors for closed-form atoms, so spectral and plane data can be
// exchanged without sampling.  Grids travel as CSV (see PlaneGrid).

#include <json.hpp>

#include "sl2/plane_function.hpp"

namespace sl2 {

struct AtomSpec {
    std::string kind;  // "homogeneous" | "logpolar-bump" | "plane-gaussian"
    Side side = Side::upper;
    cxd mu{0.0, 0.0};
    int j = 0;
    double u0 = 0.0, theta0 = 0.0, wu = 1.0, kappa = 0.0;
    Vec2 center{1.0, 0.0};
    double width = 1.0;
    cxd amplitude{1.0, 0.0};

    nlohmann::json to_json() const {
        nlohmann::json out{{"kind", kind}, {"side", side_name(side)}};
        if (kind == "homogeneous") {
            out["mu"] = {mu.real(), mu.imag()};
            out["j"] = j;
        } else if (kind == "logpolar-bump") {
            out["u0"] = u0;
            out["theta0"] = theta0;
            out["wu"] = wu;
            out["kappa"] = kappa;
            out["j"] = j;
            out["amplitude"] = {amplitude.real(), amplitude.imag()};
        } else if (kind == "plane-gaussian") {
            out["center"] = {center.x, center.y};
            out["width"] = width;
            out["amplitude"] = {amplitude.real(), amplitude.imag()};
        }
        return out;
    }

    static AtomSpec from_json(const nlohmann::json& in) {
        AtomSpec s;
        s.kind = in.at("kind").get<std::string>();
        s.side = in.at("side").get<std::string>() == "upper" ? Side::upper : Side::lower;
        auto get_cxd = [&](const char* key, cxd fallback) {
            if (!in.contains(key)) return fallback;
            const auto& a = in.at(key);
            return cxd(a.at(0).get<double>(), a.at(1).get<double>());
        };
        if (s.kind == "homogeneous") {
            s.mu = get_cxd("mu", {0.0, 0.0});
            s.j = in.at("j").get<int>();
        } else if (s.kind == "logpolar-bump") {
            s.u0 = in.at("u0").get<double>();
            s.theta0 = in.at("theta0").get<double>();
            s.wu = in.at("wu").get<double>();
            s.kappa = in.at("kappa").get<double>();
            s.j = in.value("j", 0);
            s.amplitude = get_cxd("amplitude", {1.0, 0.0});
        } else if (s.kind == "plane-gaussian") {
            const auto& c = in.at("center");
            s.center = {c.at(0).get<double>(), c.at(1).get<double>()};
            s.width = in.at("width").get<double>();
            s.amplitude = get_cxd("amplitude", {1.0, 0.0});
        } else {
            throw std::invalid_argument("AtomSpec: unknown kind '" + s.kind + "'");
        }
        return s;
    }

    PlaneFunction build() const {
        if (kind == "homogeneous") return PlaneFunction::homogeneous_atom(side, mu, j);
        if (kind == "logpolar-bump")
            return PlaneFunction::logpolar_bump(side, u0, theta0, wu, kappa, j, amplitude);
        if (kind == "plane-gaussian")
            return PlaneFunction::plane_gaussian(side, center, width, amplitude);
        throw std::invalid_argument("AtomSpec: unknown kind '" + kind + "'");
    }
};

}  // namespace sl2
