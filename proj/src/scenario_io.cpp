#include "swarmsearch/scenario_io.hpp"

#include <nlohmann/json.hpp>

#include <fstream>
#include <stdexcept>

namespace swarmsearch {

namespace {

using nlohmann::json;

Vec2 vec2_from(const json& j) {
    if (!j.is_array() || j.size() != 2) throw std::invalid_argument("scenario: expected [x, y]");
    return {j[0].get<double>(), j[1].get<double>()};
}

json vec2_to(const Vec2& v) { return json::array({v.x, v.y}); }

}  // namespace

Scenario scenario_from_json(const std::string& text) {
    json j;
    try {
        j = json::parse(text);
    } catch (const json::parse_error& e) {
        throw std::invalid_argument(std::string("scenario: ") + e.what());
    }
    Scenario sc;
    try {
        const json& arena = j.at("arena");
        sc.arena.width = arena.at("width").get<double>();
        sc.arena.height = arena.at("height").get<double>();
        if (j.contains("r_v")) sc.r_v = j.at("r_v").get<double>();
        sc.pheromone_radius = j.contains("pheromone_radius")
                                  ? j.at("pheromone_radius").get<double>()
                                  : 2.0 * sc.r_v;
        for (const json& o : j.value("obstacles", json::array())) {
            const std::string type = o.at("type").get<std::string>();
            if (type == "circle") {
                sc.arena.obstacles.push_back(
                    Circle{vec2_from(o.at("center")), o.at("radius").get<double>()});
            } else if (type == "rect") {
                sc.arena.obstacles.push_back(Rect{vec2_from(o.at("min")), vec2_from(o.at("max"))});
            } else {
                throw std::invalid_argument("scenario: unknown obstacle type '" + type + "'");
            }
        }
        for (const json& t : j.value("targets", json::array()))
            sc.targets.push_back(vec2_from(t.at("position")));
    } catch (const json::exception& e) {
        throw std::invalid_argument(std::string("scenario: ") + e.what());
    }
    sc.validate();
    return sc;
}

std::string scenario_to_json(const Scenario& scenario) {
    json j;
    j["arena"] = {{"width", scenario.arena.width}, {"height", scenario.arena.height}};
    j["r_v"] = scenario.r_v;
    j["pheromone_radius"] = scenario.pheromone_radius;
    json obstacles = json::array();
    for (const Obstacle& obs : scenario.arena.obstacles) {
        if (const auto* c = std::get_if<Circle>(&obs)) {
            obstacles.push_back(
                {{"type", "circle"}, {"center", vec2_to(c->center)}, {"radius", c->radius}});
        } else {
            const auto& r = std::get<Rect>(obs);
            obstacles.push_back({{"type", "rect"}, {"min", vec2_to(r.min)}, {"max", vec2_to(r.max)}});
        }
    }
    j["obstacles"] = obstacles;
    json targets = json::array();
    for (const Vec2& t : scenario.targets) targets.push_back({{"position", vec2_to(t)}});
    j["targets"] = targets;
    return j.dump(2);
}

Scenario load_scenario(const std::filesystem::path& path) {
    std::ifstream in(path);
    if (!in) throw std::runtime_error("cannot open scenario file: " + path.string());
    std::string text((std::istreambuf_iterator<char>(in)), std::istreambuf_iterator<char>());
    return scenario_from_json(text);
}

void save_scenario(const Scenario& scenario, const std::filesystem::path& path) {
    std::ofstream out(path);
    if (!out) throw std::runtime_error("cannot write scenario file: " + path.string());
    out << scenario_to_json(scenario) << '\n';
}

}  // namespace swarmsearch
