#include "swarmsim/connectivity.hpp"

#include <algorithm>
#include <numeric>
#include <stdexcept>
#include <unordered_map>

namespace swarmsim {

namespace {

class UnionFind {
public:
    explicit UnionFind(std::size_t n) : parent_(n), rank_(n, 0) {
        std::iota(parent_.begin(), parent_.end(), std::size_t{0});
    }

    std::size_t find(std::size_t x) {
        while (parent_[x] != x) {
            parent_[x] = parent_[parent_[x]];  // path halving
            x = parent_[x];
        }
        return x;
    }

    void unite(std::size_t a, std::size_t b) {
        a = find(a);
        b = find(b);
        if (a == b) return;
        if (rank_[a] < rank_[b]) std::swap(a, b);
        parent_[b] = a;
        if (rank_[a] == rank_[b]) ++rank_[a];
    }

private:
    std::vector<std::size_t> parent_;
    std::vector<std::size_t> rank_;
};

}  // namespace

CommGraph build_graph(const std::vector<AgentState>& agents, double comm_range,
                      double ground_direct_range) {
    CommGraph g;
    const double comm_sq = comm_range * comm_range;
    const double direct_sq = ground_direct_range * ground_direct_range;
    for (const auto& a : agents) {
        (a.kind == AgentKind::Ground ? g.ground_nodes : g.air_nodes).push_back(a.id);
    }
    for (std::size_t i = 0; i < agents.size(); ++i) {
        for (std::size_t j = i + 1; j < agents.size(); ++j) {
            const auto& a = agents[i];
            const auto& b = agents[j];
            const bool both_ground =
                a.kind == AgentKind::Ground && b.kind == AgentKind::Ground;
            const double range_sq = both_ground ? direct_sq : comm_sq;
            if (both_ground && ground_direct_range <= 0.0) continue;
            if (distance_sq(a.position, b.position) <= range_sq) {
                g.edges.emplace_back(a.id, b.id);
            }
        }
    }
    return g;
}

int largest_ground_component(const CommGraph& g) {
    if (g.ground_nodes.empty()) return 0;

    std::unordered_map<int, std::size_t> index;
    index.reserve(g.ground_nodes.size() + g.air_nodes.size());
    for (int id : g.ground_nodes) index.emplace(id, index.size());
    for (int id : g.air_nodes) index.emplace(id, index.size());

    UnionFind uf(index.size());
    for (const auto& [u, v] : g.edges) uf.unite(index.at(u), index.at(v));

    std::vector<int> ground_per_root(index.size(), 0);
    int largest = 0;
    for (int id : g.ground_nodes) {
        const int count = ++ground_per_root[uf.find(index.at(id))];
        largest = std::max(largest, count);
    }
    return largest;
}

double connectivity_fraction(const std::vector<int>& sizes, int ground_count) {
    if (sizes.empty()) throw std::invalid_argument("connectivity_fraction: empty series");
    if (ground_count <= 0) throw std::invalid_argument("connectivity_fraction: ground_count must be positive");
    double sum = 0.0;
    for (int s : sizes) sum += static_cast<double>(s) / static_cast<double>(ground_count);
    return sum / static_cast<double>(sizes.size());
}

}  // namespace swarmsim
