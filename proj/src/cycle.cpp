#include "rpc/cycle.hpp"

#include <algorithm>
#include <set>
#include <sstream>
#include <stdexcept>

namespace rpc {

ColoredCycle ColoredCycle::new_checked(const ColoredGraph& g, std::vector<int> vs) {
    const int l = static_cast<int>(vs.size());
    if (l < 3) throw std::invalid_argument("cycle: needs at least 3 vertices");
    std::vector<int> position(g.vertex_count(), -1);
    for (int i = 0; i < l; ++i) {
        const int v = vs[i];
        if (v < 0 || v >= g.vertex_count()) throw std::invalid_argument("cycle: vertex out of range");
        if (position[v] != -1) throw std::invalid_argument("cycle: repeated vertex");
        position[v] = i;
    }
    ColoredCycle c;
    c.edge_colors_.resize(l);
    for (int i = 0; i < l; ++i) {
        const int u = vs[i];
        const int v = vs[(i + 1) % l];
        if (!g.has_edge(u, v)) {
            std::ostringstream os;
            os << "cycle: missing edge {" << u << "," << v << "}";
            throw std::invalid_argument(os.str());
        }
        c.edge_colors_[i] = g.edge_color(u, v);
    }
    c.vertices_ = std::move(vs);
    c.position_ = std::move(position);
    c.color_set_ = c.edge_colors_;
    std::sort(c.color_set_.begin(), c.color_set_.end());
    c.color_set_.erase(std::unique(c.color_set_.begin(), c.color_set_.end()), c.color_set_.end());
    return c;
}

bool ColoredCycle::has_color(int c) const {
    return std::binary_search(color_set_.begin(), color_set_.end(), c);
}

int ColoredCycle::position_of(int v) const {
    if (v < 0 || v >= static_cast<int>(position_.size())) return -1;
    return position_[v];
}

std::vector<int> ColoredCycle::arc(int i, int j, Direction dir) const {
    const int l = length();
    if (i < 0 || i >= l || j < 0 || j >= l) throw std::invalid_argument("arc: position out of range");
    std::vector<int> out;
    int p = i;
    out.push_back(vertices_[p]);
    while (p != j) {
        p = dir == Direction::Forward ? (p + 1) % l : (p + l - 1) % l;
        out.push_back(vertices_[p]);
    }
    return out;
}

ColoredCycle ColoredCycle::rotated_to_front(int v) const {
    const int p = position_of(v);
    if (p < 0) throw std::invalid_argument("rotated_to_front: vertex not on cycle");
    const int l = length();
    ColoredCycle c;
    c.vertices_.resize(l);
    c.edge_colors_.resize(l);
    for (int t = 0; t < l; ++t) {
        c.vertices_[t] = vertices_[(p + t) % l];
        c.edge_colors_[t] = edge_colors_[(p + t) % l];
    }
    c.color_set_ = color_set_;
    c.position_.assign(position_.size(), -1);
    for (int t = 0; t < l; ++t) c.position_[c.vertices_[t]] = t;
    return c;
}

ColoredCycle ColoredCycle::reversed_keeping_front() const {
    const int l = length();
    ColoredCycle c;
    c.vertices_.resize(l);
    c.edge_colors_.resize(l);
    c.vertices_[0] = vertices_[0];
    for (int t = 1; t < l; ++t) c.vertices_[t] = vertices_[l - t];
    // Edge t of the reversal is {vertices_[l-t], vertices_[l-t-1]} of the
    // original, i.e. original edge l-1-t.
    for (int t = 0; t < l; ++t) c.edge_colors_[t] = edge_colors_[l - 1 - t];
    c.color_set_ = color_set_;
    c.position_.assign(position_.size(), -1);
    for (int t = 0; t < l; ++t) c.position_[c.vertices_[t]] = t;
    return c;
}

EdgeClass classify_edge(const ColoredGraph& g, const ColoredCycle& cyc, int u, int v) {
    return cyc.has_color(g.edge_color(u, v)) ? EdgeClass::CColor : EdgeClass::Fresh;
}

std::vector<std::pair<int, int>> fresh_edges_between(const ColoredGraph& g, const ColoredCycle& cyc,
                                                     const std::vector<int>& a,
                                                     const std::vector<int>& b) {
    std::set<int> sa(a.begin(), a.end());
    for (int v : b) {
        if (sa.count(v)) throw std::invalid_argument("fresh_edges_between: vertex sets overlap");
    }
    std::vector<std::pair<int, int>> out;
    for (int u : a) {
        for (int v : b) {
            if (!g.has_edge(u, v)) continue;
            if (classify_edge(g, cyc, u, v) == EdgeClass::Fresh) out.emplace_back(u, v);
        }
    }
    std::sort(out.begin(), out.end());
    return out;
}

bool verify_rainbow_cycle(const ColoredGraph& g, const std::vector<int>& vs, int expected_length,
                          const std::vector<int>& must_contain, std::string* why) {
    auto fail = [&](const std::string& msg) {
        if (why) *why = msg;
        return false;
    };
    const int l = static_cast<int>(vs.size());
    if (l != expected_length) {
        std::ostringstream os;
        os << "length " << l << " != expected " << expected_length;
        return fail(os.str());
    }
    if (l < 3) return fail("fewer than 3 vertices");
    std::set<int> seen;
    for (int v : vs) {
        if (v < 0 || v >= g.vertex_count()) return fail("vertex out of range");
        if (!seen.insert(v).second) return fail("repeated vertex");
    }
    std::set<int> colors;
    for (int i = 0; i < l; ++i) {
        const int u = vs[i];
        const int v = vs[(i + 1) % l];
        if (!g.has_edge(u, v)) {
            std::ostringstream os;
            os << "missing edge {" << u << "," << v << "}";
            return fail(os.str());
        }
        if (!colors.insert(g.edge_color(u, v)).second) return fail("repeated edge color");
    }
    for (int v : must_contain) {
        if (!seen.count(v)) {
            std::ostringstream os;
            os << "required vertex " << v << " absent";
            return fail(os.str());
        }
    }
    return true;
}

}  // namespace rpc
