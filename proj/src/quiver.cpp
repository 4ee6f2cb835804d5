#include "monocat/quiver.hpp"

#include "monocat/error.hpp"

#include <algorithm>
#include <map>
#include <set>

namespace monocat {

std::string Path::name(const Quiver& q) const {
    if (arrows.empty()) return "e" + q.vertex_name(source);
    std::string s;
    for (auto it = arrows.rbegin(); it != arrows.rend(); ++it) s += q.arrow(*it).name;
    return s;
}

Quiver::Quiver(std::vector<std::string> vertices, std::vector<Arrow> arrows)
    : vertices_(std::move(vertices)), arrows_(std::move(arrows)) {
    std::set<std::string> seen(vertices_.begin(), vertices_.end());
    if (seen.size() != vertices_.size()) throw InputError("duplicate vertex name");
    std::set<std::string> names;
    for (const auto& a : arrows_) {
        if (a.source >= vertices_.size() || a.target >= vertices_.size()) throw InputError("arrow endpoint out of range");
        if (!names.insert(a.name).second) throw InputError("duplicate arrow name '" + a.name + "'");
    }
    // Kahn's algorithm, smallest index first for a deterministic order.
    std::vector<int> indeg(vertices_.size(), 0);
    for (const auto& a : arrows_) ++indeg[a.target];
    std::set<std::size_t> ready;
    for (std::size_t v = 0; v < vertices_.size(); ++v)
        if (indeg[v] == 0) ready.insert(v);
    while (!ready.empty()) {
        const auto v = *ready.begin();
        ready.erase(ready.begin());
        topo_.push_back(v);
        for (const auto& a : arrows_)
            if (a.source == v && --indeg[a.target] == 0) ready.insert(a.target);
    }
    if (topo_.size() != vertices_.size()) throw InputError("quiver has an oriented cycle");

    std::vector<Path> layer;
    for (std::size_t v = 0; v < vertices_.size(); ++v) layer.push_back({v, v, {}});
    while (!layer.empty()) {
        paths_.insert(paths_.end(), layer.begin(), layer.end());
        std::vector<Path> next;
        for (const auto& p : layer)
            for (std::size_t a = 0; a < arrows_.size(); ++a)
                if (arrows_[a].source == p.target) {
                    Path q = p;
                    q.arrows.push_back(a);
                    q.target = arrows_[a].target;
                    next.push_back(std::move(q));
                }
        auto key = [&](const Path& p) {
            std::vector<std::string> k;
            for (auto a : p.arrows) k.push_back(arrows_[a].name);
            return k;
        };
        std::stable_sort(next.begin(), next.end(), [&](const Path& x, const Path& y) { return key(x) < key(y); });
        layer = std::move(next);
    }
}

Quiver Quiver::builtin(const std::string& name) {
    auto numbered = [](std::size_t k) {
        std::vector<std::string> v;
        for (std::size_t i = 1; i <= k; ++i) v.push_back(std::to_string(i));
        return v;
    };
    auto parse_int = [&](const std::string& s) {
        try {
            std::size_t used = 0;
            int k = std::stoi(s, &used);
            if (used != s.size()) throw InputError("");
            return k;
        } catch (...) {
            throw InputError("bad builtin quiver name '" + name + "'");
        }
    };
    if (name.rfind("An-linear:", 0) == 0) {
        const int k = parse_int(name.substr(10));
        if (k < 1) throw InputError("An-linear needs k >= 1");
        std::vector<Arrow> arrows;
        for (int i = 1; i < k; ++i) arrows.push_back({"a" + std::to_string(i), static_cast<std::size_t>(i - 1), static_cast<std::size_t>(i)});
        return Quiver(numbered(static_cast<std::size_t>(k)), arrows);
    }
    if (name.rfind("An:", 0) == 0) {
        const std::string pat = name.substr(3);
        std::vector<Arrow> arrows;
        for (std::size_t i = 0; i < pat.size(); ++i) {
            if (pat[i] == 'R')
                arrows.push_back({"a" + std::to_string(i + 1), i, i + 1});
            else if (pat[i] == 'L')
                arrows.push_back({"a" + std::to_string(i + 1), i + 1, i});
            else
                throw InputError("An pattern must consist of R and L");
        }
        return Quiver(numbered(pat.size() + 1), arrows);
    }
    if (name == "kronecker") return Quiver({"1", "2"}, {{"a", 0, 1}, {"b", 0, 1}});
    if (name == "A4-zigzag") return Quiver(numbered(4), {{"a1", 0, 1}, {"a2", 2, 1}, {"a3", 2, 3}});
    if (name.size() >= 2 && (name[0] == 'D' || name[0] == 'E' || name[0] == 'A')) {
        const int k = parse_int(name.substr(1));
        return standard_quiver({name[0], k});
    }
    throw InputError("unknown builtin quiver '" + name + "'");
}

std::optional<std::size_t> Quiver::find_vertex(const std::string& name) const {
    for (std::size_t i = 0; i < vertices_.size(); ++i)
        if (vertices_[i] == name) return i;
    return std::nullopt;
}

std::optional<std::size_t> Quiver::find_arrow(const std::string& name) const {
    for (std::size_t i = 0; i < arrows_.size(); ++i)
        if (arrows_[i].name == name) return i;
    return std::nullopt;
}

std::vector<std::size_t> Quiver::in_arrows(std::size_t v) const {
    std::vector<std::size_t> out;
    for (std::size_t a = 0; a < arrows_.size(); ++a)
        if (arrows_[a].target == v) out.push_back(a);
    return out;
}

std::vector<std::size_t> Quiver::out_arrows(std::size_t v) const {
    std::vector<std::size_t> out;
    for (std::size_t a = 0; a < arrows_.size(); ++a)
        if (arrows_[a].source == v) out.push_back(a);
    return out;
}

std::vector<std::size_t> Quiver::paths_ending_at(std::size_t v) const {
    std::vector<std::size_t> out;
    for (std::size_t i = 0; i < paths_.size(); ++i)
        if (paths_[i].target == v) out.push_back(i);
    return out;
}

std::optional<std::size_t> Quiver::extend(std::size_t path, std::size_t alpha) const {
    const auto& p = paths_[path];
    if (arrows_[alpha].source != p.target) return std::nullopt;
    auto arrows = p.arrows;
    arrows.push_back(alpha);
    for (std::size_t i = 0; i < paths_.size(); ++i)
        if (paths_[i].source == p.source && paths_[i].arrows == arrows) return i;
    return std::nullopt;
}

bool Quiver::same_as(const Quiver& other) const {
    if (vertices_ != other.vertices_ || arrows_.size() != other.arrows_.size()) return false;
    for (std::size_t a = 0; a < arrows_.size(); ++a) {
        const auto& x = arrows_[a];
        const auto& y = other.arrows_[a];
        if (x.name != y.name || x.source != y.source || x.target != y.target) return false;
    }
    return true;
}

bool Quiver::connected() const {
    if (vertices_.empty()) return true;
    std::vector<bool> seen(vertices_.size(), false);
    std::vector<std::size_t> stack{0};
    seen[0] = true;
    while (!stack.empty()) {
        const auto v = stack.back();
        stack.pop_back();
        for (const auto& a : arrows_) {
            std::size_t w = vertices_.size();
            if (a.source == v) w = a.target;
            if (a.target == v) w = a.source;
            if (w < vertices_.size() && !seen[w]) {
                seen[w] = true;
                stack.push_back(w);
            }
        }
    }
    return std::all_of(seen.begin(), seen.end(), [](bool b) { return b; });
}

std::string DynkinType::to_string() const {
    if (!valid()) return "none";
    return std::string(1, family) + std::to_string(rank);
}

DynkinType dynkin_type(const Quiver& q) {
    if (!q.connected()) throw InputError("dynkin_type needs a connected quiver");
    const std::size_t n = q.vertex_count();
    std::set<std::pair<std::size_t, std::size_t>> edges;
    for (const auto& a : q.arrows()) {
        if (a.source == a.target) return {};
        auto e = std::minmax(a.source, a.target);
        if (!edges.insert(e).second) return {};  // multiple edge
    }
    if (edges.size() + 1 != n) return {};  // connected with a cycle
    std::vector<std::vector<std::size_t>> adj(n);
    for (auto [x, y] : edges) {
        adj[x].push_back(y);
        adj[y].push_back(x);
    }
    std::vector<std::size_t> branch;
    for (std::size_t v = 0; v < n; ++v) {
        if (adj[v].size() > 3) return {};
        if (adj[v].size() == 3) branch.push_back(v);
    }
    if (branch.empty()) return {'A', static_cast<int>(n)};
    if (branch.size() > 1) return {};
    const auto c = branch[0];
    std::vector<int> arms;
    for (auto start : adj[c]) {
        int len = 1;
        std::size_t prev = c, cur = start;
        while (adj[cur].size() == 2) {
            const auto next = adj[cur][0] == prev ? adj[cur][1] : adj[cur][0];
            prev = cur;
            cur = next;
            ++len;
        }
        arms.push_back(len);
    }
    std::sort(arms.begin(), arms.end());
    const int k = static_cast<int>(n);
    if (arms[0] == 1 && arms[1] == 1) return {'D', k};
    if (arms[0] == 1 && arms[1] == 2 && arms[2] >= 2 && arms[2] <= 4) return {'E', k};
    return {};
}

int positive_root_count(DynkinType t) {
    const int k = t.rank;
    switch (t.family) {
        case 'A':
            if (k >= 1) return k * (k + 1) / 2;
            break;
        case 'D':
            if (k >= 4) return k * (k - 1);
            break;
        case 'E':
            if (k == 6) return 36;
            if (k == 7) return 63;
            if (k == 8) return 120;
            break;
        default:
            break;
    }
    throw InputError("not a Dynkin type: " + t.to_string());
}

Quiver standard_quiver(DynkinType t) {
    const int k = t.rank;
    std::vector<std::string> v;
    for (int i = 1; i <= k; ++i) v.push_back(std::to_string(i));
    std::vector<Arrow> arrows;
    auto arrow = [&](int s, int e) {
        arrows.push_back({"a" + std::to_string(arrows.size() + 1), static_cast<std::size_t>(s - 1), static_cast<std::size_t>(e - 1)});
    };
    switch (t.family) {
        case 'A':
            if (k < 1) break;
            for (int i = 1; i < k; ++i) arrow(i, i + 1);
            return Quiver(v, arrows);
        case 'D':
            if (k < 4) break;
            for (int i = 1; i < k - 2; ++i) arrow(i, i + 1);
            arrow(k - 2, k - 1);
            arrow(k - 2, k);
            return Quiver(v, arrows);
        case 'E':
            if (k < 6 || k > 8) break;
            for (int i = 1; i < k - 1; ++i) arrow(i, i + 1);
            arrow(3, k);
            return Quiver(v, arrows);
        default:
            break;
    }
    throw InputError("not a Dynkin type: " + t.to_string());
}

std::vector<std::vector<int>> positive_roots(const Quiver& q) {
    if (!dynkin_type(q).valid()) throw InputError("positive_roots needs a Dynkin quiver");
    const std::size_t n = q.vertex_count();
    // (x, e_i) for the symmetric Tits form.
    auto pair_with = [&](const std::vector<int>& x, std::size_t i) {
        int s = 2 * x[i];
        for (const auto& a : q.arrows()) {
            if (a.source == i) s -= x[a.target];
            if (a.target == i) s -= x[a.source];
        }
        return s;
    };
    std::set<std::vector<int>> roots;
    std::vector<std::vector<int>> frontier;
    for (std::size_t i = 0; i < n; ++i) {
        std::vector<int> e(n, 0);
        e[i] = 1;
        roots.insert(e);
        frontier.push_back(e);
    }
    while (!frontier.empty()) {
        std::vector<std::vector<int>> next;
        for (const auto& x : frontier)
            for (std::size_t i = 0; i < n; ++i) {
                auto y = x;
                y[i] -= pair_with(x, i);
                if (std::any_of(y.begin(), y.end(), [](int c) { return c < 0; })) continue;
                if (std::all_of(y.begin(), y.end(), [](int c) { return c == 0; })) continue;
                if (roots.insert(y).second) next.push_back(y);
            }
        frontier = std::move(next);
    }
    std::vector<std::vector<int>> out(roots.begin(), roots.end());
    auto height = [](const std::vector<int>& x) {
        int h = 0;
        for (int c : x) h += c;
        return h;
    };
    std::stable_sort(out.begin(), out.end(), [&](const auto& x, const auto& y) {
        if (height(x) != height(y)) return height(x) < height(y);
        return x < y;
    });
    return out;
}

std::vector<std::vector<int>> positive_roots(DynkinType t) { return positive_roots(standard_quiver(t)); }

}  // namespace monocat
