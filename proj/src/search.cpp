#include "ssc/search.hpp"

#include <algorithm>
#include <atomic>
#include <limits>
#include <numeric>
#include <set>

#ifdef _OPENMP
#include <omp.h>
#endif

namespace ssc {

const char* outcome_name(Outcome o) {
    switch (o) {
        case Outcome::colorable: return "colorable";
        case Outcome::not_colorable_size: return "not colorable (size)";
        case Outcome::not_colorable: return "not colorable";
        case Outcome::inconclusive: return "inconclusive";
    }
    return "?";
}

std::vector<Vertex> search_order(const Graph& g) {
    const auto deg = g.degrees();
    std::vector<Vertex> order(g.num_vertices());
    std::iota(order.begin(), order.end(), Vertex{0});
    std::stable_sort(order.begin(), order.end(),
                     [&](Vertex a, Vertex b) { return deg[a] > deg[b]; });
    return order;
}

namespace {

std::uint64_t saturating_add(std::uint64_t a, std::uint64_t b, bool& saturated) {
    if (a > std::numeric_limits<std::uint64_t>::max() - b) {
        saturated = true;
        return std::numeric_limits<std::uint64_t>::max();
    }
    return a + b;
}

std::uint64_t saturating_factorial(std::size_t m, bool& saturated) {
    std::uint64_t f = 1;
    for (std::size_t i = 2; i <= m; ++i) {
        if (f > std::numeric_limits<std::uint64_t>::max() / i) {
            saturated = true;
            return std::numeric_limits<std::uint64_t>::max();
        }
        f *= i;
    }
    return f;
}

struct BackEdge {
    Vertex neighbor;
    std::size_t rank;
};

// Static data shared by all workers of one solve call.
struct Plan {
    const Graph& g;
    Dimension n;
    std::vector<Vertex> order;
    std::size_t active = 0;  // vertices in order with degree > 0
    std::vector<std::vector<BackEdge>> back;
    std::uint64_t isolated_ways = 1;
    bool isolated_saturated = false;

    Plan(const Graph& graph, Dimension dim) : g(graph), n(dim), order(search_order(graph)) {
        const auto deg = g.degrees();
        std::vector<std::size_t> position(g.num_vertices());
        for (std::size_t i = 0; i < order.size(); ++i) position[order[i]] = i;
        while (active < order.size() && deg[order[active]] > 0) ++active;
        back.resize(active);
        for (std::size_t k = 0; k < g.num_edges(); ++k) {
            const auto [u, v] = g.edges()[k];
            if (position[u] > position[v])
                back[position[u]].push_back({v, k});
            else
                back[position[v]].push_back({u, k});
        }
        isolated_ways = saturating_factorial(order.size() - active, isolated_saturated);
    }
};

struct Shared {
    std::optional<std::uint64_t> node_limit;
    std::atomic<std::uint64_t> nodes{0};
    std::atomic<bool> limit_hit{false};
    // Lowest root label that has produced a coloring (find-first only).
    std::atomic<std::uint32_t> best_root{std::numeric_limits<std::uint32_t>::max()};
};

class Searcher {
public:
    Searcher(const Plan& plan, Shared& shared, bool find_all)
        : plan_(plan), shared_(shared), find_all_(find_all),
          vertex_label_(plan.g.num_vertices(), 0), edge_label_(plan.g.num_edges(), 0),
          used_(static_cast<std::size_t>(plan.n.universe()) + 1, 0) {}

    // Explores the subtree where the first vertex in order carries `label`.
    void run_root(std::uint32_t label) {
        root_ = label;
        (void)try_label(0, label);
    }

    std::uint64_t count() const noexcept { return count_; }
    bool saturated() const noexcept { return saturated_; }
    const std::optional<Coloring>& first() const noexcept { return first_; }

private:
    enum class Step { next, stop };

    Step place(std::size_t pos) {
        if (pos == plan_.active) return leaf();
        for (std::uint32_t label = 1; label <= plan_.n.universe(); ++label) {
            if (used_[label]) continue;
            if (try_label(pos, label) == Step::stop) return Step::stop;
        }
        return Step::next;
    }

    Step try_label(std::size_t pos, std::uint32_t label) {
        const std::uint64_t seen = shared_.nodes.fetch_add(1, std::memory_order_relaxed) + 1;
        if (shared_.node_limit && seen > *shared_.node_limit) {
            shared_.limit_hit.store(true, std::memory_order_relaxed);
            return Step::stop;
        }
        if (!find_all_ && shared_.best_root.load(std::memory_order_relaxed) < root_)
            return Step::stop;

        const Vertex w = plan_.order[pos];
        const auto& back = plan_.back[pos];
        vertex_label_[w] = label;
        used_[label] = 1;
        std::size_t derived = 0;
        bool ok = true;
        for (const auto& [neighbor, rank] : back) {
            const std::uint32_t e = label ^ vertex_label_[neighbor];
            if (e == 0 || used_[e]) {
                ok = false;
                break;
            }
            edge_label_[rank] = e;
            used_[e] = 1;
            ++derived;
        }
        Step step = ok ? place(pos + 1) : Step::next;
        for (std::size_t i = 0; i < derived; ++i) used_[edge_label_[back[i].rank]] = 0;
        used_[label] = 0;
        vertex_label_[w] = 0;
        return step;
    }

    Step leaf() {
        if (!first_) first_ = certificate();
        if (!find_all_) {
            std::uint32_t best = shared_.best_root.load(std::memory_order_relaxed);
            while (root_ < best && !shared_.best_root.compare_exchange_weak(best, root_)) {
            }
            return Step::stop;
        }
        count_ = saturating_add(count_, plan_.isolated_ways, saturated_);
        saturated_ = saturated_ || plan_.isolated_saturated;
        return Step::next;
    }

    Coloring certificate() const {
        std::vector<std::uint32_t> labels(vertex_label_);
        std::uint32_t next = 1;
        for (std::size_t pos = plan_.active; pos < plan_.order.size(); ++pos) {
            while (used_[next]) ++next;
            labels[plan_.order[pos]] = next++;
        }
        Coloring c{plan_.n, {}, {}};
        for (std::uint32_t bits : labels) c.vertex_labels.emplace_back(bits, plan_.n);
        for (std::uint32_t bits : edge_label_) c.edge_labels.emplace_back(bits, plan_.n);
        return c;
    }

    const Plan& plan_;
    Shared& shared_;
    bool find_all_;
    std::uint32_t root_ = 0;
    std::vector<std::uint32_t> vertex_label_;
    std::vector<std::uint32_t> edge_label_;
    std::vector<std::uint8_t> used_;
    std::optional<Coloring> first_;
    std::uint64_t count_ = 0;
    bool saturated_ = false;
};

// All vertices isolated: every bijection onto the labels works.
SearchResult solve_edgeless(const Graph& g, Dimension n, const SearchConfig& cfg) {
    SearchResult r;
    r.outcome = Outcome::colorable;
    Coloring c{n, {}, {}};
    for (std::uint32_t v = 0; v < g.num_vertices(); ++v) c.vertex_labels.emplace_back(v + 1, n);
    r.coloring = std::move(c);
    if (cfg.find_all)
        r.count = saturating_factorial(g.num_vertices() - (cfg.use_symmetry ? 1 : 0),
                                       r.count_saturated);
    return r;
}

}  // namespace

SearchResult solve(const Graph& g, const SearchConfig& cfg) {
    const auto dim = Dimension::for_universe(g.num_elements());
    if (!dim) {
        SearchResult r;
        r.outcome = Outcome::not_colorable_size;
        return r;
    }
    const Dimension n = *dim;
    const Plan plan(g, n);
    if (plan.active == 0) return solve_edgeless(g, n, cfg);

    const std::uint32_t roots = cfg.use_symmetry ? 1 : n.universe();
    Shared shared;
    shared.node_limit = cfg.node_limit;

    std::vector<std::optional<Coloring>> first(roots);
    std::vector<std::uint64_t> counts(roots, 0);
    std::vector<char> saturated(roots, 0);

    auto work = [&](std::uint32_t index) {
        Searcher s(plan, shared, cfg.find_all);
        s.run_root(index + 1);
        first[index] = s.first();
        counts[index] = s.count();
        saturated[index] = s.saturated();
    };

    if (cfg.threads <= 1) {
        for (std::uint32_t i = 0; i < roots; ++i) {
            if (!cfg.find_all && shared.best_root.load() <= roots) break;
            if (shared.limit_hit.load()) break;
            work(i);
        }
    } else {
#pragma omp parallel for schedule(dynamic, 1) num_threads(cfg.threads)
        for (std::int64_t i = 0; i < static_cast<std::int64_t>(roots); ++i) {
            const auto index = static_cast<std::uint32_t>(i);
            if (!cfg.find_all && shared.best_root.load() <= index) continue;
            work(index);
        }
    }

    SearchResult r;
    r.nodes = shared.nodes.load();
    for (std::uint32_t i = 0; i < roots; ++i) {
        if (!r.coloring && first[i]) r.coloring = std::move(first[i]);
        r.count = saturating_add(r.count, counts[i], r.count_saturated);
        r.count_saturated = r.count_saturated || saturated[i];
    }
    const bool limit_hit = shared.limit_hit.load();
    if (r.coloring && !(cfg.find_all && limit_hit))
        r.outcome = Outcome::colorable;
    else if (limit_hit)
        r.outcome = Outcome::inconclusive;
    else
        r.outcome = Outcome::not_colorable;
    if (r.outcome == Outcome::inconclusive) r.coloring.reset();
    return r;
}

namespace {

class Enumerator {
public:
    Enumerator(const Graph& g, Dimension n) : g_(g), n_(n), labels_(g.num_vertices(), 0) {}

    std::optional<Coloring> run() {
        if (extend(0)) return found_;
        return std::nullopt;
    }

private:
    bool extend(std::size_t v) {
        if (v == g_.num_vertices()) return check();
        for (std::uint32_t label = 1; label <= n_.universe(); ++label) {
            if (std::find(labels_.begin(), labels_.begin() + static_cast<std::ptrdiff_t>(v),
                          label) != labels_.begin() + static_cast<std::ptrdiff_t>(v))
                continue;
            labels_[v] = label;
            if (extend(v + 1)) return true;
        }
        return false;
    }

    // Materializes every label and compares against the full set of
    // nonzero vectors.
    bool check() {
        std::multiset<std::uint32_t> all(labels_.begin(), labels_.end());
        std::vector<std::uint32_t> edge_labels;
        for (auto [u, v] : g_.edges()) {
            edge_labels.push_back(labels_[u] ^ labels_[v]);
            all.insert(edge_labels.back());
        }
        std::multiset<std::uint32_t> want;
        for (std::uint32_t x = 1; x <= n_.universe(); ++x) want.insert(x);
        if (all != want) return false;
        Coloring c{n_, {}, {}};
        for (auto bits : labels_) c.vertex_labels.emplace_back(bits, n_);
        for (auto bits : edge_labels) c.edge_labels.emplace_back(bits, n_);
        found_ = std::move(c);
        return true;
    }

    const Graph& g_;
    Dimension n_;
    std::vector<std::uint32_t> labels_;
    std::optional<Coloring> found_;
};

}  // namespace

std::optional<Coloring> exhaustive_oracle(const Graph& g) {
    if (g.num_elements() > 7) throw Unsupported("exhaustive_oracle handles |V|+|E| <= 7");
    const auto n = Dimension::for_universe(g.num_elements());
    if (!n) return std::nullopt;
    return Enumerator(g, *n).run();
}

bool is_connected(const Graph& g) {
    if (g.num_vertices() == 0) return true;
    std::vector<Vertex> parent(g.num_vertices());
    std::iota(parent.begin(), parent.end(), Vertex{0});
    auto find = [&](Vertex x) {
        while (parent[x] != x) x = parent[x] = parent[parent[x]];
        return x;
    };
    std::size_t components = g.num_vertices();
    for (auto [u, v] : g.edges()) {
        const Vertex a = find(u), b = find(v);
        if (a != b) {
            parent[a] = b;
            --components;
        }
    }
    return components == 1;
}

std::vector<Graph> enumerate_colorable(Dimension n, bool connected_only, int threads) {
    if (n.value() > 4) throw Unsupported("enumerate_colorable handles n <= 4");
    const std::size_t total = n.universe();
    std::vector<Graph> candidates;
    for (std::size_t a = 1; a <= total; ++a) {
        const std::size_t b = total - a;
        if (b > a * (a - 1) / 2) continue;
        for (auto& g : nonisomorphic_graphs(a, b))
            if (!connected_only || is_connected(g)) candidates.push_back(std::move(g));
    }

    std::vector<char> keep(candidates.size(), 0);
    SearchConfig cfg;
    cfg.use_symmetry = true;
#pragma omp parallel for schedule(dynamic, 1) num_threads(std::max(threads, 1))
    for (std::int64_t i = 0; i < static_cast<std::int64_t>(candidates.size()); ++i)
        keep[static_cast<std::size_t>(i)] = solve(candidates[static_cast<std::size_t>(i)], cfg).colorable();

    std::vector<Graph> out;
    for (std::size_t i = 0; i < candidates.size(); ++i)
        if (keep[i]) out.push_back(std::move(candidates[i]));
    std::sort(out.begin(), out.end());
    return out;
}

}  // namespace ssc
