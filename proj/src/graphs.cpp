#include "farkas/graphs.hpp"

#include <algorithm>
#include <deque>
#include <map>
#include <set>

#include "farkas/classifier.hpp"

namespace farkas {

Graph::Graph(std::vector<std::string> labels,
             const std::vector<std::pair<std::string, std::string>>& edges)
    : labels_(std::move(labels)) {
    std::map<std::string, std::size_t> index;
    for (std::size_t i = 0; i < labels_.size(); ++i) {
        if (!index.emplace(labels_[i], i).second)
            throw Error(ErrorKind::InvalidArgument, "duplicate vertex label '" + labels_[i] + "'");
    }
    std::vector<Edge> es;
    for (const auto& [a, b] : edges) {
        const auto ia = index.find(a);
        const auto ib = index.find(b);
        if (ia == index.end() || ib == index.end())
            throw Error(ErrorKind::InvalidArgument, "edge endpoint is not a declared vertex");
        es.emplace_back(ia->second, ib->second);
    }
    build(std::move(es));
}

Graph::Graph(std::size_t vertex_count, const std::vector<Edge>& edges) {
    for (std::size_t i = 0; i < vertex_count; ++i) labels_.push_back(std::to_string(i));
    for (const auto& [a, b] : edges)
        if (a >= vertex_count || b >= vertex_count)
            throw Error(ErrorKind::InvalidArgument, "edge endpoint is not a declared vertex");
    build(edges);
}

void Graph::build(std::vector<Edge> edges) {
    for (auto& [a, b] : edges) {
        if (a == b) throw Error(ErrorKind::InvalidArgument, "self-loop on vertex '" + labels_[a] + "'");
        if (a > b) std::swap(a, b);
    }
    std::sort(edges.begin(), edges.end());
    if (std::adjacent_find(edges.begin(), edges.end()) != edges.end())
        throw Error(ErrorKind::InvalidArgument, "duplicate edge");
    edges_ = std::move(edges);
    adjacency_.assign(labels_.size(), {});
    for (const auto& [a, b] : edges_) {
        adjacency_[a].push_back(b);
        adjacency_[b].push_back(a);
    }
    for (auto& nb : adjacency_) std::sort(nb.begin(), nb.end());
}

bool Graph::adjacent(std::size_t a, std::size_t b) const {
    const auto& nb = adjacency_.at(a);
    return std::binary_search(nb.begin(), nb.end(), b);
}

std::optional<std::size_t> Graph::edge_index(std::size_t a, std::size_t b) const {
    const Edge e = a < b ? Edge{a, b} : Edge{b, a};
    const auto it = std::lower_bound(edges_.begin(), edges_.end(), e);
    if (it == edges_.end() || *it != e) return std::nullopt;
    return static_cast<std::size_t>(it - edges_.begin());
}

bool Graph::connected() const {
    if (labels_.empty()) return false;
    std::vector<char> seen(labels_.size(), 0);
    std::vector<std::size_t> stack{0};
    seen[0] = 1;
    std::size_t count = 1;
    while (!stack.empty()) {
        const auto v = stack.back();
        stack.pop_back();
        for (auto u : adjacency_[v]) {
            if (seen[u]) continue;
            seen[u] = 1;
            ++count;
            stack.push_back(u);
        }
    }
    return count == labels_.size();
}

namespace {

void require_connected(const Graph& g) {
    if (!g.connected()) throw Error(ErrorKind::Disconnected, "graph is not connected");
}

bool disjoint(const OddCycle& a, const OddCycle& b) {
    for (auto x : a.vertices)
        if (std::find(b.vertices.begin(), b.vertices.end(), x) != b.vertices.end()) return false;
    return true;
}

bool joined_by_edge(const Graph& g, const OddCycle& a, const OddCycle& b) {
    for (auto x : a.vertices)
        for (auto y : b.vertices)
            if (g.adjacent(x, y)) return true;
    return false;
}

void extend_cycles(const Graph& g, std::vector<std::size_t>& path, std::vector<char>& on_path,
                   std::vector<OddCycle>& out) {
    const std::size_t start = path.front();
    const std::size_t last = path.back();
    for (auto next : g.neighbors(last)) {
        if (next == start && path.size() >= 3 && path.size() % 2 == 1 && path[1] < last) {
            out.push_back(OddCycle{path});
            continue;
        }
        if (next <= start || on_path[next]) continue;
        on_path[next] = 1;
        path.push_back(next);
        extend_cycles(g, path, on_path, out);
        path.pop_back();
        on_path[next] = 0;
    }
}

}  // namespace

VectorFamily edge_vectors(const Graph& g) {
    if (g.edge_count() == 0) throw Error(ErrorKind::InvalidArgument, "graph has no edges");
    require_connected(g);
    std::vector<IntVector> vs;
    vs.reserve(g.edge_count());
    for (const auto& [a, b] : g.edges()) {
        IntVector v(g.vertex_count(), Integer(0));
        v[a] = 1;
        v[b] = 1;
        vs.push_back(std::move(v));
    }
    return VectorFamily(std::move(vs));
}

std::vector<OddCycle> enumerate_odd_cycles(const Graph& g, const Limits& limits) {
    if (g.vertex_count() > limits.graph_max_vertices)
        throw Error(ErrorKind::LimitExceeded,
                    "odd-cycle enumeration limited to " + std::to_string(limits.graph_max_vertices) +
                        " vertices");
    std::vector<OddCycle> out;
    std::vector<char> on_path(g.vertex_count(), 0);
    for (std::size_t s = 0; s < g.vertex_count(); ++s) {
        std::vector<std::size_t> path{s};
        on_path[s] = 1;
        extend_cycles(g, path, on_path, out);
        on_path[s] = 0;
    }
    std::sort(out.begin(), out.end());
    return out;
}

GraphVerdict is_almost_farkas_graph(const Graph& g, const Limits& limits) {
    require_connected(g);
    const auto cycles = enumerate_odd_cycles(g, limits);
    GraphVerdict verdict;
    verdict.almost_farkas = true;
    for (std::size_t i = 0; i < cycles.size(); ++i) {
        for (std::size_t j = i + 1; j < cycles.size(); ++j) {
            if (!disjoint(cycles[i], cycles[j])) continue;
            std::vector<char> covered(g.vertex_count(), 0);
            for (auto v : cycles[i].vertices) covered[v] = 1;
            for (auto v : cycles[j].vertices) covered[v] = 1;
            const auto gap = std::find(covered.begin(), covered.end(), 0);
            if (gap == covered.end()) continue;
            verdict.almost_farkas = false;
            verdict.witness = CyclePairWitness{cycles[i], cycles[j],
                                               static_cast<std::size_t>(gap - covered.begin()),
                                               "disjoint odd cycles do not cover every vertex"};
            return verdict;
        }
    }
    return verdict;
}

GraphVerdict is_weakly_farkas_graph(const Graph& g, const Limits& limits) {
    require_connected(g);
    const auto cycles = enumerate_odd_cycles(g, limits);
    GraphVerdict verdict;
    verdict.weakly_farkas = true;
    for (std::size_t i = 0; i < cycles.size(); ++i) {
        for (std::size_t j = i + 1; j < cycles.size(); ++j) {
            if (!disjoint(cycles[i], cycles[j]) || joined_by_edge(g, cycles[i], cycles[j])) continue;
            verdict.weakly_farkas = false;
            verdict.witness = CyclePairWitness{cycles[i], cycles[j], std::nullopt,
                                               "disjoint odd cycles with no edge between them"};
            return verdict;
        }
    }
    return verdict;
}

namespace {

void check_cycle(const Graph& g, const std::vector<std::size_t>& c, const char* name) {
    if (c.size() < 3 || c.size() % 2 == 0)
        throw Error(ErrorKind::InvalidArgument, std::string(name) + " must be an odd cycle of length >= 3");
    std::set<std::size_t> distinct(c.begin(), c.end());
    if (distinct.size() != c.size())
        throw Error(ErrorKind::InvalidArgument, std::string(name) + " repeats a vertex");
    for (std::size_t i = 0; i < c.size(); ++i)
        if (c[i] >= g.vertex_count() || c[(i + 1) % c.size()] >= g.vertex_count() ||
            !g.adjacent(c[i], c[(i + 1) % c.size()]))
            throw Error(ErrorKind::InvalidArgument, std::string(name) + " uses a missing edge");
}

}  // namespace

ProofFixture proof_fixture(const Graph& g, const OddCycleGap& gap) {
    const auto& U = gap.first_cycle;
    const auto& V = gap.second_cycle;
    const auto& P = gap.path;
    check_cycle(g, U, "first cycle");
    check_cycle(g, V, "second cycle");
    for (auto u : U)
        if (std::find(V.begin(), V.end(), u) != V.end())
            throw Error(ErrorKind::InvalidArgument, "cycles share a vertex");
    if (P.size() < 3)
        throw Error(ErrorKind::InvalidArgument, "connecting path must have length >= 2");
    if (P.front() != U.front() || P.back() != V.front())
        throw Error(ErrorKind::InvalidArgument, "path must run from the first vertex of each cycle");
    std::set<std::size_t> interior(P.begin() + 1, P.end() - 1);
    if (interior.size() != P.size() - 2)
        throw Error(ErrorKind::InvalidArgument, "path repeats a vertex");
    for (auto w : interior)
        if (std::find(U.begin(), U.end(), w) != U.end() || std::find(V.begin(), V.end(), w) != V.end())
            throw Error(ErrorKind::InvalidArgument, "path interior meets a cycle");
    for (std::size_t j = 0; j + 1 < P.size(); ++j)
        if (P[j] >= g.vertex_count() || P[j + 1] >= g.vertex_count() || !g.adjacent(P[j], P[j + 1]))
            throw Error(ErrorKind::InvalidArgument, "path uses a missing edge");

    const std::size_t E = g.edge_count();
    ProofFixture fx;
    fx.pattern.assign(E, 0);
    fx.x.assign(E, Rational(0));
    std::vector<char> assigned(E, 0);

    auto set = [&](std::size_t a, std::size_t b, int pattern, const Rational& x) {
        const auto e = *g.edge_index(a, b);
        if (assigned[e]) return;
        assigned[e] = 1;
        fx.pattern[e] = pattern;
        fx.x[e] = x;
    };
    const Rational half(1, 2);

    // Path edges P[j]P[j+1] alternate +1, −1, +1, ... starting at u_1 w_1.
    // The orientation of the second cycle follows the sign of the last edge,
    // so v_1 balances for either parity of the interior length.
    for (std::size_t j = 0; j + 1 < P.size(); ++j) {
        const int pattern = j == 0 ? 1 : (j % 2 == 1 ? -1 : 0);
        set(P[j], P[j + 1], pattern, Rational(j % 2 == 0 ? 1 : -1));
    }
    const int sigma = (P.size() - 2) % 2 == 0 ? 1 : -1;

    auto assign_cycle = [&](const std::vector<std::size_t>& c, int orientation) {
        const std::size_t len = c.size();
        // c[i-1] is u_i in 1-based numbering.
        for (std::size_t i = 1; i < len; ++i) {
            const Rational x = (i % 2 == 1 ? -half : half) * orientation;
            set(c[i - 1], c[i], x < 0 ? -1 : 0, x);
        }
        const Rational closing = -half * orientation;
        set(c[len - 1], c[0], closing < 0 ? -1 : 0, closing);
    };
    assign_cycle(U, 1);
    assign_cycle(V, sigma);

    // Remaining edges at even-numbered first-cycle vertices get −1.
    for (std::size_t i = 2; i <= U.size(); i += 2) {
        const std::size_t ui = U[i - 1];
        const std::size_t next = U[i % U.size()];
        for (auto x : g.neighbors(ui))
            if (x != next) set(ui, x, -1, Rational(0));
    }

    const auto family = edge_vectors(g);
    const auto sum = family.combine(std::span<const Rational>(fx.x));
    for (const auto& s : sum)
        if (s != 0) throw Error(ErrorKind::Internal, "fixture point does not sum to zero");
    if (!pattern_box(fx.pattern).contains(std::span<const Rational>(fx.x)))
        throw Error(ErrorKind::Internal, "fixture point leaves the pattern box");
    SignPattern::from_values(fx.pattern);
    return fx;
}

std::optional<OddCycleGap> find_odd_cycle_gap(const Graph& g, const Limits& limits) {
    require_connected(g);
    const auto cycles = enumerate_odd_cycles(g, limits);
    const std::size_t nv = g.vertex_count();
    std::optional<OddCycleGap> best;
    std::size_t best_cost = 0;

    for (std::size_t i = 0; i < cycles.size(); ++i) {
        for (std::size_t j = i + 1; j < cycles.size(); ++j) {
            const auto& C1 = cycles[i];
            const auto& C2 = cycles[j];
            if (!disjoint(C1, C2) || joined_by_edge(g, C1, C2)) continue;
            std::vector<int> role(nv, 0);
            for (auto v : C1.vertices) role[v] = 1;
            for (auto v : C2.vertices) role[v] = 2;

            // BFS from C1 through vertices off both cycles until C2 is reached.
            std::vector<std::size_t> parent(nv, nv);
            std::vector<char> seen(nv, 0);
            std::deque<std::size_t> queue;
            for (auto v : C1.vertices) {
                seen[v] = 1;
                queue.push_back(v);
            }
            std::optional<std::size_t> hit;
            while (!queue.empty() && !hit) {
                const auto v = queue.front();
                queue.pop_front();
                for (auto u : g.neighbors(v)) {
                    if (seen[u]) continue;
                    if (role[u] == 2) {
                        if (role[v] == 0) {
                            parent[u] = v;
                            hit = u;
                            break;
                        }
                        continue;
                    }
                    if (role[u] == 1) continue;
                    seen[u] = 1;
                    parent[u] = v;
                    queue.push_back(u);
                }
            }
            if (!hit) continue;
            std::vector<std::size_t> path{*hit};
            while (role[path.back()] != 1) path.push_back(parent[path.back()]);
            std::reverse(path.begin(), path.end());

            const std::size_t cost = C1.vertices.size() + C2.vertices.size() + path.size() - 2;
            if (best && cost >= best_cost) continue;

            auto rotate_to = [](std::vector<std::size_t> c, std::size_t head) {
                std::rotate(c.begin(), std::find(c.begin(), c.end(), head), c.end());
                return c;
            };
            best = OddCycleGap{rotate_to(C1.vertices, path.front()),
                               rotate_to(C2.vertices, path.back()), path};
            best_cost = cost;
        }
    }
    return best;
}

CrossValidation cross_validate_report(const Graph& g, const Limits& limits) {
    CrossValidation cv;
    cv.graph_almost = *is_almost_farkas_graph(g, limits).almost_farkas;
    cv.graph_weak = *is_weakly_farkas_graph(g, limits).weakly_farkas;
    const auto family = edge_vectors(g);
    cv.vector_afr = is_afr(family, limits).is_afr;
    cv.vector_wfr = is_wfr(family, limits).is_wfr;
    cv.agrees = cv.graph_almost == cv.vector_afr && cv.graph_weak == cv.vector_wfr;
    return cv;
}

bool cross_validate(const Graph& g, const Limits& limits) { return cross_validate_report(g, limits).agrees; }

}  // namespace farkas
