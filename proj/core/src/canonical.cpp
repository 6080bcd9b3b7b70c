#include "blg/canonical.hpp"

#include <algorithm>
#include <functional>
#include <map>
#include <numeric>
#include <stdexcept>

namespace blg {

namespace {

// One pass of colour refinement until the partition is stable.
void refine(const Graph& g, std::vector<int>& color) {
    const int n = g.n();
    std::vector<std::vector<int>> nbr(n);
    for (int v = 0; v < n; ++v) nbr[v] = g.neighbors(v);
    int classes = 0;
    for (;;) {
        std::vector<std::pair<std::vector<int>, int>> sig(n);
        for (int v = 0; v < n; ++v) {
            std::vector<int> s;
            s.push_back(color[v]);
            for (int u : nbr[v]) s.push_back(color[u]);
            std::sort(s.begin() + 1, s.end());
            sig[v] = {std::move(s), v};
        }
        auto sorted = sig;
        std::sort(sorted.begin(), sorted.end());
        int next = -1;
        const std::vector<int>* prev = nullptr;
        std::vector<int> newcolor(n);
        for (auto& [s, v] : sorted) {
            if (!prev || *prev != s) {
                ++next;
                prev = &s;
            }
            newcolor[v] = next;
        }
        if (next + 1 == classes) break;
        classes = next + 1;
        color = std::move(newcolor);
        if (classes == n) break;
    }
}

std::string certificate_of(const Graph& g, const std::vector<int>& base_color,
                           const std::vector<int>& labeling) {
    const int n = g.n();
    std::vector<int> inv(n);
    for (int v = 0; v < n; ++v) inv[labeling[v]] = v;
    std::string cert(1, static_cast<char>(n));
    for (int p = 0; p < n; ++p) {
        int c = base_color[inv[p]];
        for (int s = 24; s >= 0; s -= 8) cert.push_back(static_cast<char>((c >> s) & 0xff));
    }
    uint8_t acc = 0;
    int bits = 0;
    for (int p = 0; p < n; ++p)
        for (int q = p; q < n; ++q) {
            acc = static_cast<uint8_t>((acc << 1) | (g.has_edge(inv[p], inv[q]) ? 1 : 0));
            if (++bits == 8) {
                cert.push_back(static_cast<char>(acc));
                acc = 0;
                bits = 0;
            }
        }
    if (bits) cert.push_back(static_cast<char>(acc << (8 - bits)));
    return cert;
}

struct Search {
    const Graph& g;
    const std::vector<int>& base_color;
    std::string best;
    std::vector<std::vector<int>> best_labelings;

    void run(std::vector<int> color) {
        refine(g, color);
        const int n = g.n();
        // find the smallest non-singleton class with the lowest colour
        std::vector<int> count(n + 1, 0);
        for (int c : color) ++count[c];
        int target = -1;
        int target_size = n + 1;
        for (int c = 0; c <= n; ++c)
            if (count[c] > 1 && count[c] < target_size) {
                target = c;
                target_size = count[c];
            }
        if (target < 0) {
            std::vector<int> labeling(n);
            for (int v = 0; v < n; ++v) labeling[v] = color[v];
            std::string cert = certificate_of(g, base_color, labeling);
            if (best.empty() || cert < best) {
                best = cert;
                best_labelings.clear();
                best_labelings.push_back(labeling);
            } else if (cert == best) {
                best_labelings.push_back(labeling);
            }
            return;
        }
        for (int v = 0; v < n; ++v) {
            if (color[v] != target) continue;
            std::vector<int> child = color;
            for (int u = 0; u < n; ++u)
                if (child[u] >= target && u != v) ++child[u];
            run(std::move(child));
        }
    }
};

std::vector<int> normalized_base_color(const Graph& g, const std::vector<int>& colors) {
    const int n = g.n();
    std::vector<std::pair<int, int>> init(n);
    for (int v = 0; v < n; ++v) {
        int provided = colors.empty() ? 0 : colors[v];
        init[v] = {provided, g.has_loop(v) ? 1 : 0};
    }
    std::vector<std::pair<std::pair<int, int>, int>> keyed(n);
    for (int v = 0; v < n; ++v) keyed[v] = {init[v], v};
    std::sort(keyed.begin(), keyed.end());
    std::vector<int> base(n);
    int next = -1;
    const std::pair<int, int>* prev = nullptr;
    for (auto& [k, v] : keyed) {
        if (!prev || *prev != k) {
            ++next;
            prev = &k;
        }
        base[v] = next;
    }
    return base;
}

Search run_search(const Graph& g, const std::vector<int>& colors) {
    if (!colors.empty() && static_cast<int>(colors.size()) != g.n())
        throw std::invalid_argument("canonical_form: colour vector size mismatch");
    std::vector<int> base = normalized_base_color(g, colors);
    Search s{g, base, {}, {}};
    if (g.n() == 0) {
        s.best = std::string(1, '\0');
        s.best_labelings.push_back({});
        return s;
    }
    s.run(base);
    return s;
}

}  // namespace

CanonicalForm canonical_form(const Graph& g, const std::vector<int>& colors) {
    Search s = run_search(g, colors);
    return {s.best_labelings.front(), s.best};
}

std::vector<std::vector<int>> automorphisms(const Graph& g, const std::vector<int>& colors) {
    Search s = run_search(g, colors);
    const int n = g.n();
    const auto& l0 = s.best_labelings.front();
    std::vector<int> l0inv(n);
    for (int v = 0; v < n; ++v) l0inv[l0[v]] = v;
    std::vector<std::vector<int>> auts;
    for (const auto& l : s.best_labelings) {
        std::vector<int> perm(n);
        for (int v = 0; v < n; ++v) perm[v] = l0inv[l[v]];
        auts.push_back(perm);
    }
    std::sort(auts.begin(), auts.end());
    auts.erase(std::unique(auts.begin(), auts.end()), auts.end());
    return auts;
}

std::vector<std::vector<int>> vertex_orbits(const Graph& g, const std::vector<int>& colors) {
    auto auts = automorphisms(g, colors);
    const int n = g.n();
    std::vector<int> parent(n);
    std::iota(parent.begin(), parent.end(), 0);
    std::function<int(int)> find = [&](int x) {
        while (parent[x] != x) x = parent[x] = parent[parent[x]];
        return x;
    };
    for (const auto& p : auts)
        for (int v = 0; v < n; ++v) parent[find(v)] = find(p[v]);
    std::map<int, std::vector<int>> groups;
    for (int v = 0; v < n; ++v) groups[find(v)].push_back(v);
    std::vector<std::vector<int>> orbits;
    for (auto& [r, vs] : groups) orbits.push_back(vs);
    return orbits;
}

bool is_isomorphic(const Graph& a, const Graph& b) {
    if (a.n() != b.n()) return false;
    return canonical_form(a).certificate == canonical_form(b).certificate;
}

}  // namespace blg
