#pragma once

// Finite acyclic quivers: paths, Dynkin recognition and positive roots.

#include <memory>
#include <optional>
#include <string>
#include <vector>

namespace monocat {

struct Arrow {
    std::string name;
    std::size_t source = 0, target = 0;
};

class Quiver;

/// A path; arrows are listed in the order they are traversed.
struct Path {
    std::size_t source = 0, target = 0;
    std::vector<std::size_t> arrows;
    std::size_t length() const { return arrows.size(); }
    std::string name(const Quiver& q) const;
};

class Quiver {
public:
    /// Throws InputError on unknown endpoints, duplicate names or cycles.
    Quiver(std::vector<std::string> vertices, std::vector<Arrow> arrows);
    /// "An-linear:k", "An:<R|L pattern>", "Dk", "E6".."E8", "kronecker", "A4-zigzag".
    static Quiver builtin(const std::string& name);

    std::size_t vertex_count() const { return vertices_.size(); }
    const std::string& vertex_name(std::size_t v) const { return vertices_[v]; }
    const std::vector<std::string>& vertices() const { return vertices_; }
    std::optional<std::size_t> find_vertex(const std::string& name) const;
    const std::vector<Arrow>& arrows() const { return arrows_; }
    const Arrow& arrow(std::size_t a) const { return arrows_[a]; }
    std::optional<std::size_t> find_arrow(const std::string& name) const;

    const std::vector<std::size_t>& topological_order() const { return topo_; }
    /// Arrows ending at v, in arrow order.
    std::vector<std::size_t> in_arrows(std::size_t v) const;
    std::vector<std::size_t> out_arrows(std::size_t v) const;

    /// All paths, trivial ones included, ordered by length and then by the
    /// sequence of arrow names.
    const std::vector<Path>& paths() const { return paths_; }
    /// Indices into paths() of the paths ending at v (same order).
    std::vector<std::size_t> paths_ending_at(std::size_t v) const;
    /// Index of the path alpha.p, or nullopt if alpha does not start at t(p).
    std::optional<std::size_t> extend(std::size_t path, std::size_t alpha) const;

    bool same_as(const Quiver& other) const;
    bool connected() const;

private:
    std::vector<std::string> vertices_;
    std::vector<Arrow> arrows_;
    std::vector<std::size_t> topo_;
    std::vector<Path> paths_;
};

using QuiverPtr = std::shared_ptr<const Quiver>;

struct DynkinType {
    char family = 0;  // 'A', 'D', 'E', or 0 for none
    int rank = 0;
    bool valid() const { return family != 0; }
    std::string to_string() const;
    friend bool operator==(const DynkinType&, const DynkinType&) = default;
};

/// Orientation-independent; throws InputError for a disconnected quiver.
DynkinType dynkin_type(const Quiver& q);
/// Throws InputError when t is not a Dynkin type.
int positive_root_count(DynkinType t);
/// Positive roots of the underlying graph by closure under simple
/// reflections, as dimension vectors indexed by the vertices of q, ordered by
/// height and then lexicographically. Throws InputError when q is not Dynkin.
std::vector<std::vector<int>> positive_roots(const Quiver& q);
/// Roots for the standard quiver of the type.
std::vector<std::vector<int>> positive_roots(DynkinType t);
Quiver standard_quiver(DynkinType t);

}  // namespace monocat
