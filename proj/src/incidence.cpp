#include "clgeo/incidence.hpp"

#include <map>
#include <mutex>

namespace clgeo {

IncidenceMatrix build_incidence(const Geometry& g, int k) {
    const auto& points = SubspaceTable::get(g, 0);
    const auto& spaces = SubspaceTable::get(g, k);
    IncidenceMatrix m{g, k, points.size(), spaces.size(), {}};
    m.bits.assign(static_cast<std::size_t>(m.rows) * m.cols, 0);
    for (int r = 0; r < m.rows; ++r)
        for (int c = 0; c < m.cols; ++c)
            if (incident(g, points.at(r), spaces.at(c)))
                m.bits[static_cast<std::size_t>(r) * m.cols + c] = 1;
    return m;
}

ExactMatrix IncidenceMatrix::to_exact() const {
    ExactMatrix e(rows, cols);
    for (int r = 0; r < rows; ++r)
        for (int c = 0; c < cols; ++c)
            if (entry(r, c)) e.at(r, c) = 1;
    return e;
}

IncidenceSpace::IncidenceSpace(const Geometry& g, int k) : m_(build_incidence(g, k)) {
    ExactMatrix e = m_.to_exact();
    echelon_ = e.echelon();
    kernel_ = e.kernel_basis();
}

bool IncidenceSpace::chi_in_row_space(const std::vector<int>& members) const {
    for (const auto& w : kernel_) {
        Rational dot = 0;
        for (int id : members) dot += w[id];
        if (!dot.is_zero()) return false;
    }
    return true;
}

const IncidenceSpace& IncidenceSpace::get(const Geometry& g, int k) {
    static std::mutex mtx;
    static std::map<std::tuple<Kind, int, int, int, int>, IncidenceSpace> cache;
    std::lock_guard<std::mutex> lock(mtx);
    auto key = std::make_tuple(g.kind, g.n, g.F->p(), g.F->e(), k);
    auto it = cache.find(key);
    if (it == cache.end()) it = cache.emplace(key, IncidenceSpace(g, k)).first;
    return it->second;
}

}  // namespace clgeo
