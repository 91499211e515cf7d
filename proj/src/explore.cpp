#include "rcinf/explore.hpp"

#include <unordered_map>

namespace rcinf {

namespace {

// Cells of a triangle in visiting order, each with the cell that bounds it from below (or none).
struct Walk {
    std::vector<std::pair<int, int>> cells;
    std::vector<std::ptrdiff_t> below;
};

template <class Triangle, class Exponents>
void fill(int n, int bound, const Walk& w, Exponents (*validate)(const Triangle&),
          const std::function<void(const Exponents&)>& visit)
{
    if (bound < 0) return;
    Triangle t(n);
    std::function<void(std::size_t)> step = [&](std::size_t c) {
        if (c == w.cells.size()) {
            visit(validate(t));
            return;
        }
        const auto [i, j] = w.cells[c];
        int lo = 0;
        if (w.below[c] >= 0) {
            const auto [pi, pj] = w.cells[static_cast<std::size_t>(w.below[c])];
            lo = t.at(pi, pj);
        }
        for (int v = lo; v <= bound; ++v) {
            t.set(i, j, v);
            step(c + 1);
        }
    };
    step(0);
}

} // namespace

void for_each_forward(int n, int bound, const std::function<void(const ForwardExponents&)>& visit)
{
    Walk w;
    for (int j = 1; j <= n; ++j) {
        for (int i = 1; i <= n - j + 1; ++i) {
            w.below.push_back(i > 1 ? static_cast<std::ptrdiff_t>(w.cells.size()) - 1 : -1);
            w.cells.push_back({i, j});
        }
    }
    fill<ForwardTriangle, ForwardExponents>(n, bound, w, &validate_forward, visit);
}

void for_each_reverse(int n, int bound, const std::function<void(const ReverseExponents&)>& visit)
{
    Walk w;
    for (int j = 1; j <= n; ++j) {
        for (int i = n; i >= j; --i) {
            w.below.push_back(i < n ? static_cast<std::ptrdiff_t>(w.cells.size()) - 1 : -1);
            w.cells.push_back({i, j});
        }
    }
    fill<ReverseTriangle, ReverseExponents>(n, bound, w, &validate_reverse, visit);
}

CrystalGraph explore(int n, int depth)
{
    CrystalGraph g;
    std::unordered_map<std::string, std::size_t> seen;
    g.nodes.push_back(empty_rc(n));
    g.distance.push_back(0);
    seen.emplace(to_string(g.nodes.front()), 0);
    for (std::size_t head = 0; head < g.nodes.size(); ++head) {
        if (g.distance[head] >= depth) continue;
        for (int i = 1; i <= n; ++i) {
            RiggedConfiguration next = apply_f(g.nodes[head], i);
            auto [it, fresh] = seen.emplace(to_string(next), g.nodes.size());
            if (fresh) {
                g.nodes.push_back(std::move(next));
                g.distance.push_back(g.distance[head] + 1);
            }
            g.edges.push_back({head, it->second, i});
        }
    }
    return g;
}

} // namespace rcinf
