#include "ortho_greedy/ordering.hpp"

#include <algorithm>
#include <map>
#include <numeric>

#include "ortho_greedy/errors.hpp"

namespace ortho_greedy {

namespace {

class DisjointSets {
public:
    explicit DisjointSets(int n) : parent_(n) { std::iota(parent_.begin(), parent_.end(), 0); }

    void reset(int v) { parent_[v] = v; }
    int find(int v) {
        while (parent_[v] != v) v = parent_[v] = parent_[parent_[v]];
        return v;
    }
    bool unite(int a, int b) {
        a = find(a);
        b = find(b);
        if (a == b) return false;
        parent_[b] = a;
        return true;
    }

private:
    std::vector<int> parent_;
};

// Returns true when `order` is good; fills `violation` otherwise.
bool windows_good(const Digraph& d, const std::vector<NodeId>& order,
                  const std::vector<int>& position, WindowViolation* violation) {
    const int m = static_cast<int>(order.size());
    DisjointSets sets(d.node_count());
    for (int i = 0; i < m; ++i) {
        for (int j = i; j < m; ++j) sets.reset(order[j]);
        int components = 0;
        for (int j = i; j < m; ++j) {
            ++components;
            for (ArcId a : d.in_arcs(order[j])) {
                const NodeId t = d.arc(a).tail;
                if (position[t] >= i && sets.unite(t, order[j])) --components;
            }
            if (j == i || components == 1) continue;
            bool bad = components > 2;
            if (!bad) {
                int changes = 0;
                for (int k = i + 1; k <= j; ++k)
                    if (sets.find(order[k]) != sets.find(order[k - 1])) ++changes;
                bad = changes > 1;
            }
            if (bad) {
                if (violation) {
                    std::map<int, std::vector<NodeId>> groups;
                    for (int k = i; k <= j; ++k) groups[sets.find(order[k])].push_back(order[k]);
                    violation->first = i;
                    violation->last = j;
                    violation->components.clear();
                    for (auto& [root, nodes] : groups) violation->components.push_back(nodes);
                    std::sort(violation->components.begin(), violation->components.end());
                }
                return false;
            }
        }
    }
    return true;
}

}  // namespace

StOrdering check_good(const Digraph& d, std::vector<NodeId> order) {
    const int m = d.node_count();
    if (static_cast<int>(order.size()) != m)
        throw PreconditionError("ordering length differs from node count");
    std::vector<int> position(m, kNone);
    for (int i = 0; i < m; ++i) {
        if (order[i] < 0 || order[i] >= m || position[order[i]] != kNone)
            throw PreconditionError("ordering is not a permutation of the nodes");
        position[order[i]] = i;
    }
    for (const Arc& a : d.arcs())
        if (position[a.tail] >= position[a.head])
            throw InvalidOrderingError("ordering is not topological: arc " +
                                       std::to_string(a.tail) + "->" + std::to_string(a.head));
    StOrdering result;
    WindowViolation violation;
    if (!windows_good(d, order, position, &violation)) result.violation = std::move(violation);
    result.sequence = std::move(order);
    return result;
}

SpRecognition recognize_series_parallel(const Digraph& d) {
    const auto sources = d.sources();
    const auto sinks = d.sinks();
    if (sources.size() != 1 || sinks.size() != 1)
        throw PreconditionError("series-parallel recognition needs a single source and sink");
    const NodeId s = sources.front();
    const NodeId t = sinks.front();

    struct Live {
        NodeId tail, head;
        int tree;
        bool alive;
    };
    SpDecomposition raw;
    std::vector<Live> live;
    for (ArcId a = 0; a < d.arc_count(); ++a) {
        raw.nodes.push_back({SpNode::Kind::Leaf, d.arc(a).tail, d.arc(a).head, a, {}});
        live.push_back({d.arc(a).tail, d.arc(a).head, a, true});
    }

    bool changed = true;
    while (changed) {
        changed = false;
        std::map<std::pair<NodeId, NodeId>, std::vector<int>> bundles;
        for (int i = 0; i < static_cast<int>(live.size()); ++i)
            if (live[i].alive) bundles[{live[i].tail, live[i].head}].push_back(i);
        for (auto& [ends, ids] : bundles) {
            if (ids.size() < 2) continue;
            SpNode node{SpNode::Kind::Parallel, ends.first, ends.second, kNone, {}};
            for (int i : ids) {
                node.children.push_back(live[i].tree);
                live[i].alive = false;
            }
            raw.nodes.push_back(node);
            live.push_back({ends.first, ends.second, static_cast<int>(raw.nodes.size()) - 1, true});
            changed = true;
        }

        std::vector<std::vector<int>> in(d.node_count()), out(d.node_count());
        for (int i = 0; i < static_cast<int>(live.size()); ++i) {
            if (!live[i].alive) continue;
            out[live[i].tail].push_back(i);
            in[live[i].head].push_back(i);
        }
        for (NodeId x = 0; x < d.node_count(); ++x) {
            if (x == s || x == t || in[x].size() != 1 || out[x].size() != 1) continue;
            const int a = in[x].front();
            const int b = out[x].front();
            if (!live[a].alive || !live[b].alive) continue;
            raw.nodes.push_back(
                {SpNode::Kind::Series, live[a].tail, live[b].head, kNone, {live[a].tree, live[b].tree}});
            live[a].alive = live[b].alive = false;
            live.push_back({live[a].tail, live[b].head, static_cast<int>(raw.nodes.size()) - 1, true});
            changed = true;
            break;  // adjacency lists are stale after a contraction
        }
    }

    std::vector<int> remaining;
    for (int i = 0; i < static_cast<int>(live.size()); ++i)
        if (live[i].alive) remaining.push_back(i);
    if (remaining.size() != 1 || live[remaining.front()].tail != s ||
        live[remaining.front()].head != t) {
        NotSeriesParallel witness;
        for (int i : remaining) {
            witness.remaining_nodes.push_back(live[i].tail);
            witness.remaining_nodes.push_back(live[i].head);
        }
        std::sort(witness.remaining_nodes.begin(), witness.remaining_nodes.end());
        witness.remaining_nodes.erase(
            std::unique(witness.remaining_nodes.begin(), witness.remaining_nodes.end()),
            witness.remaining_nodes.end());
        witness.remaining_arcs = static_cast<int>(remaining.size());
        return witness;
    }

    // Flatten same-kind nesting into maximal compositions.
    SpDecomposition flat;
    std::function<int(int)> copy = [&](int id) -> int {
        const SpNode& node = raw.nodes[id];
        SpNode out{node.kind, node.source, node.sink, node.arc, {}};
        std::function<void(int)> gather = [&](int child) {
            if (raw.nodes[child].kind == node.kind && node.kind != SpNode::Kind::Leaf) {
                for (int grandchild : raw.nodes[child].children) gather(grandchild);
            } else {
                out.children.push_back(copy(child));
            }
        };
        for (int child : node.children) gather(child);
        flat.nodes.push_back(std::move(out));
        return static_cast<int>(flat.nodes.size()) - 1;
    };
    flat.root = copy(live[remaining.front()].tree);
    return flat;
}

ExpandedSp expand(const SpDecomposition& decomposition) {
    ExpandedSp out;
    std::function<void(int)> walk = [&](int id) {
        const SpNode& node = decomposition.nodes[id];
        out.nodes.push_back(node.source);
        out.nodes.push_back(node.sink);
        if (node.kind == SpNode::Kind::Leaf) out.arcs.push_back(node.arc);
        for (int child : node.children) walk(child);
    };
    walk(decomposition.root);
    std::sort(out.nodes.begin(), out.nodes.end());
    out.nodes.erase(std::unique(out.nodes.begin(), out.nodes.end()), out.nodes.end());
    std::sort(out.arcs.begin(), out.arcs.end());
    return out;
}

std::variant<StOrdering, Infeasible> construct_good_sp(const Digraph& d,
                                                       const SpDecomposition& decomposition) {
    std::optional<Infeasible> failure;

    std::function<std::vector<NodeId>(int)> build = [&](int id) -> std::vector<NodeId> {
        const SpNode& node = decomposition.nodes[id];
        switch (node.kind) {
            case SpNode::Kind::Leaf:
                return {node.source, node.sink};
            case SpNode::Kind::Series: {
                std::vector<NodeId> order;
                for (int child : node.children) {
                    auto part = build(child);
                    if (failure) return {};
                    order.insert(order.end(), part.begin() + (order.empty() ? 0 : 1), part.end());
                }
                return order;
            }
            case SpNode::Kind::Parallel: {
                std::vector<int> components;
                for (int child : node.children)
                    if (decomposition.nodes[child].kind != SpNode::Kind::Leaf)
                        components.push_back(child);
                if (components.size() > 2) {
                    failure = Infeasible{id, "parallel composition joins " +
                                                 std::to_string(components.size()) +
                                                 " components that are not single edges"};
                    return {};
                }
                if (components.empty()) return {node.source, node.sink};
                auto first = build(components[0]);
                if (failure || components.size() == 1) return first;
                auto second = build(components[1]);
                if (failure) return {};

                auto core_sinks = [&](const std::vector<NodeId>& order) {
                    int count = 0;
                    for (std::size_t i = 1; i + 1 < order.size(); ++i) {
                        const auto& out = d.out_arcs(order[i]);
                        if (std::all_of(out.begin(), out.end(),
                                        [&](ArcId a) { return d.arc(a).head == node.sink; }))
                            ++count;
                    }
                    return count;
                };
                auto core_sources = [&](const std::vector<NodeId>& order) {
                    int count = 0;
                    for (std::size_t i = 1; i + 1 < order.size(); ++i) {
                        const auto& in = d.in_arcs(order[i]);
                        if (std::all_of(in.begin(), in.end(),
                                        [&](ArcId a) { return d.arc(a).tail == node.source; }))
                            ++count;
                    }
                    return count;
                };
                const std::vector<NodeId>* lead = nullptr;
                const std::vector<NodeId>* trail = nullptr;
                if (core_sinks(first) == 1 && core_sources(second) == 1) {
                    lead = &first;
                    trail = &second;
                } else if (core_sinks(second) == 1 && core_sources(first) == 1) {
                    lead = &second;
                    trail = &first;
                } else {
                    failure = Infeasible{id,
                                         "neither component core has a single sink while the "
                                         "other has a single source"};
                    return {};
                }
                std::vector<NodeId> order{node.source};
                order.insert(order.end(), lead->begin() + 1, lead->end() - 1);
                order.insert(order.end(), trail->begin() + 1, trail->end() - 1);
                order.push_back(node.sink);
                return order;
            }
        }
        return {};
    };

    auto order = build(decomposition.root);
    if (failure) return *failure;
    auto result = check_good(d, std::move(order));
    if (!result.is_good())
        throw InternalError("series-parallel construction produced an ordering that is not good");
    return result;
}

void for_each_topological_order(const Digraph& d,
                                const std::function<bool(const std::vector<NodeId>&)>& visit) {
    const int m = d.node_count();
    std::vector<int> indegree(m);
    for (NodeId n = 0; n < m; ++n) indegree[n] = static_cast<int>(d.in_arcs(n).size());
    std::vector<NodeId> order;
    std::vector<char> used(m, 0);
    bool stop = false;
    std::function<void()> extend = [&]() {
        if (stop) return;
        if (static_cast<int>(order.size()) == m) {
            if (!visit(order)) stop = true;
            return;
        }
        for (NodeId n = 0; n < m && !stop; ++n) {
            if (used[n] || indegree[n] != 0) continue;
            used[n] = 1;
            order.push_back(n);
            for (ArcId a : d.out_arcs(n)) --indegree[d.arc(a).head];
            extend();
            for (ArcId a : d.out_arcs(n)) ++indegree[d.arc(a).head];
            order.pop_back();
            used[n] = 0;
        }
    };
    extend();
}

std::vector<std::vector<NodeId>> enumerate_good_orderings(const Digraph& d) {
    std::vector<std::vector<NodeId>> good;
    for_each_topological_order(d, [&](const std::vector<NodeId>& order) {
        if (windows_good(d, order, positions_of(order), nullptr)) good.push_back(order);
        return true;
    });
    return good;
}

std::optional<std::vector<NodeId>> find_good_ordering_exhaustive(const Digraph& d) {
    std::optional<std::vector<NodeId>> found;
    for_each_topological_order(d, [&](const std::vector<NodeId>& order) {
        if (!windows_good(d, order, positions_of(order), nullptr)) return true;
        found = order;
        return false;
    });
    return found;
}

}  // namespace ortho_greedy
