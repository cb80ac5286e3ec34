#pragma once

#include <json.hpp>

#include "lattice/basis.hpp"
#include "lattice/right_diagram.hpp"
#include "lattice/span_basis.hpp"

namespace lattice {

using Json = nlohmann::json;

inline Json to_json(const Cell& c) { return Json::array({c.row, c.col}); }

inline Json to_json(const Partition& mu) { return Json(mu.parts()); }

inline Json cells_json(const std::vector<Cell>& cells) {
    Json arr = Json::array();
    for (const Cell& c : cells) arr.push_back(to_json(c));
    return arr;
}

inline Json to_json(const LatticeDiagram& L) {
    return Json{{"cells", cells_json(L.cells())}};
}

inline Json hilbert_json(const std::map<Bidegree, std::size_t>& h) {
    Json arr = Json::array();
    for (const auto& [bd, dim] : h)
        arr.push_back(Json{{"bidegree", Json::array({bd.x, bd.y})}, {"dim", dim}});
    return arr;
}

inline Json to_json(const RightDiagram& F) {
    return Json{{"mu", to_json(F.mu)},
                {"anchor", to_json(F.anchor)},
                {"circled", cells_json(F.circled)}};
}

}  // namespace lattice
