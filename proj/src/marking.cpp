#include "flattorus/marking.hpp"

#include <fstream>
#include <numeric>
#include <sstream>
#include <stdexcept>

namespace flattorus {

bool is_horizon_rational(const PlanarVector& diff, std::uint64_t horizon) {
    return diff.x.den() <= BigInt(horizon) && diff.y.den() <= BigInt(horizon);
}

std::vector<std::vector<std::size_t>> decompose_classes(const std::vector<TorusPoint>& points,
                                                        std::uint64_t horizon) {
    std::size_t n = points.size();
    std::vector<std::size_t> parent(n);
    std::iota(parent.begin(), parent.end(), 0);
    auto find = [&](std::size_t i) {
        while (parent[i] != i) i = parent[i] = parent[parent[i]];
        return i;
    };
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = i + 1; j < n; ++j)
            if (is_horizon_rational(points[j].coords - points[i].coords, horizon))
                parent[find(i)] = find(j);
    std::vector<std::vector<std::size_t>> classes(n);
    for (std::size_t i = 0; i < n; ++i) classes[find(i)].push_back(i);
    std::vector<std::vector<std::size_t>> out;
    for (auto& c : classes)
        if (!c.empty()) out.push_back(std::move(c));
    return out;
}

Marking::Marking(std::vector<TorusPoint> pts, std::uint64_t horizon_value)
    : points(std::move(pts)), horizon(horizon_value) {
    if (points.empty()) throw std::invalid_argument("Marking: no points");
    if (horizon == 0) throw std::invalid_argument("Marking: horizon must be positive");
    for (std::size_t i = 0; i < points.size(); ++i)
        for (std::size_t j = i + 1; j < points.size(); ++j)
            if (points[i] == points[j])
                throw std::invalid_argument("Marking: coincident marked points");
    classes = decompose_classes(points, horizon);
}

Marking Marking::from_string(const std::string& text, std::uint64_t horizon_value) {
    std::istringstream in(text);
    std::string line;
    std::vector<TorusPoint> pts;
    int lineno = 0;
    while (std::getline(in, line)) {
        ++lineno;
        auto hash = line.find('#');
        if (hash != std::string::npos) line.erase(hash);
        std::istringstream ls(line);
        std::string a, b, extra;
        if (!(ls >> a)) continue;  // blank
        if (!(ls >> b)) throw MarkingParseError(lineno, "expected two coordinates");
        if (ls >> extra) throw MarkingParseError(lineno, "trailing junk after coordinates");
        try {
            pts.push_back(wrap_to_torus(PlanarVector(Rational::parse(a), Rational::parse(b))));
        } catch (const std::invalid_argument& e) {
            throw MarkingParseError(lineno, e.what());
        }
    }
    if (pts.empty()) throw MarkingParseError(lineno, "no markings");
    return Marking(std::move(pts), horizon_value);
}

Marking Marking::from_file(const std::string& path, std::uint64_t horizon_value) {
    std::ifstream in(path);
    if (!in) throw std::runtime_error("cannot open markings file: " + path);
    std::ostringstream buf;
    buf << in.rdbuf();
    return from_string(buf.str(), horizon_value);
}

}  // namespace flattorus
