#include "monocat/json_io.hpp"

#include "monocat/error.hpp"

#include <fstream>
#include <memory>
#include <sstream>

namespace monocat::io {

namespace {

std::vector<std::string> split(const std::string& s, char sep) {
    std::vector<std::string> out;
    std::stringstream ss(s);
    std::string item;
    while (std::getline(ss, item, sep)) out.push_back(item);
    return out;
}

int to_int(const std::string& s, const std::string& what) {
    try {
        std::size_t used = 0;
        const int v = std::stoi(s, &used);
        if (used != s.size()) throw std::invalid_argument(s);
        return v;
    } catch (const std::exception&) {
        throw InputError("expected an integer for " + what + ", got '" + s + "'");
    }
}

const Json& field(const Json& j, const char* key) {
    if (!j.is_object() || !j.contains(key)) throw InputError(std::string("missing JSON field '") + key + "'");
    return j.at(key);
}

template <typename T>
T get(const Json& j, const char* what) {
    try {
        return j.get<T>();
    } catch (const Json::exception&) {
        throw InputError(std::string("malformed JSON value for ") + what);
    }
}

}  // namespace

Json to_json(const SerialBase& b) {
    switch (b.kind()) {
    case BaseKind::chain:
        return {{"kind", "chain"},
                {"arith", b.coeff_ring()->arith() == Arith::integer ? "int" : "poly"},
                {"p", b.p()},
                {"n", b.max_length()}};
    case BaseKind::rad2nak: return {{"kind", "rad2nak"}, {"m", b.components()}, {"p", b.p()}};
    case BaseKind::stable: return {{"kind", "stable"}, {"of", to_json(*b.parent())}};
    }
    return {};
}

BasePtr base_from_json(const Json& j) {
    if (j.is_string()) return parse_base(j.get<std::string>());
    const auto kind = get<std::string>(field(j, "kind"), "base kind");
    if (kind == "chain") {
        const auto arith = get<std::string>(field(j, "arith"), "arith");
        if (arith != "int" && arith != "poly") throw InputError("arith must be \"int\" or \"poly\"");
        return SerialBase::chain(arith == "int" ? Arith::integer : Arith::polynomial, get<std::uint32_t>(field(j, "p"), "p"),
                                 get<int>(field(j, "n"), "n"));
    }
    if (kind == "rad2nak") return SerialBase::rad2nak(get<int>(field(j, "m"), "m"), get<std::uint32_t>(field(j, "p"), "p"));
    if (kind == "stable") return SerialBase::stable_of(base_from_json(field(j, "of")));
    throw InputError("unknown base kind '" + kind + "'");
}

BasePtr parse_base(const std::string& spec) {
    if (spec.rfind("stable:", 0) == 0) return SerialBase::stable_of(parse_base(spec.substr(7)));
    const auto parts = split(spec, ':');
    if (parts.size() == 4 && parts[0] == "chain") {
        if (parts[1] != "int" && parts[1] != "poly") throw InputError("chain arith must be int or poly in '" + spec + "'");
        const int p = to_int(parts[2], "p");
        if (p < 2) throw InputError("p must be a prime in '" + spec + "'");
        return SerialBase::chain(parts[1] == "int" ? Arith::integer : Arith::polynomial, static_cast<std::uint32_t>(p),
                                 to_int(parts[3], "n"));
    }
    if (parts.size() == 3 && parts[0] == "rad2nak") {
        const int p = to_int(parts[2], "p");
        if (p < 2) throw InputError("p must be a prime in '" + spec + "'");
        return SerialBase::rad2nak(to_int(parts[1], "m"), static_cast<std::uint32_t>(p));
    }
    throw InputError("cannot parse base '" + spec + "' (expected chain:int|poly:p:n, rad2nak:m:p or stable:<base>)");
}

Json to_json(const Quiver& q) {
    Json arrows = Json::array();
    for (const auto& a : q.arrows())
        arrows.push_back({{"name", a.name}, {"from", q.vertex_name(a.source)}, {"to", q.vertex_name(a.target)}});
    return {{"vertices", q.vertices()}, {"arrows", arrows}};
}

QuiverPtr quiver_from_json(const Json& j) {
    if (j.is_string()) return std::make_shared<const Quiver>(Quiver::builtin(j.get<std::string>()));
    const auto vertices = get<std::vector<std::string>>(field(j, "vertices"), "vertices");
    std::vector<Arrow> arrows;
    const auto& ja = field(j, "arrows");
    if (!ja.is_array()) throw InputError("quiver arrows must be an array");
    auto index = [&](const std::string& v) {
        for (std::size_t i = 0; i < vertices.size(); ++i)
            if (vertices[i] == v) return i;
        throw InputError("arrow endpoint '" + v + "' is not a vertex");
    };
    for (const auto& a : ja)
        arrows.push_back({get<std::string>(field(a, "name"), "arrow name"), index(get<std::string>(field(a, "from"), "from")),
                          index(get<std::string>(field(a, "to"), "to"))});
    return std::make_shared<const Quiver>(vertices, arrows);
}

QuiverPtr parse_quiver(const std::string& spec) {
    try {
        return std::make_shared<const Quiver>(Quiver::builtin(spec));
    } catch (const InputError&) {
        std::ifstream probe(spec);
        if (!probe) throw;
    }
    return quiver_from_json(read_file(spec));
}

Json to_json(const SerialModule& m) { return {{"parts", m.names()}}; }

std::vector<std::size_t> parts_from_json(const BasePtr& base, const Json& j) {
    std::vector<std::size_t> out;
    for (const auto& name : get<std::vector<std::string>>(field(j, "parts"), "module parts")) {
        auto l = base->find_label(name);
        if (!l) throw InputError("unknown label '" + name + "' for base " + base->name());
        out.push_back(*l);
    }
    return out;
}

SerialModule module_from_json(const BasePtr& base, const Json& j) { return SerialModule(base, parts_from_json(base, j)); }

Json to_json(const SerialMorphism& f) {
    const auto& ring = *f.base()->coeff_ring();
    Json rows = Json::array();
    for (std::size_t i = 0; i < f.target().size(); ++i) {
        Json row = Json::array();
        for (std::size_t j = 0; j < f.source().size(); ++j) row.push_back({{"coeff", ring.digits(f.at(i, j))}});
        rows.push_back(row);
    }
    return {{"entries", rows}};
}

SerialMorphism morphism_from_json(const BasePtr& base, const std::vector<std::size_t>& source_parts,
                                  const std::vector<std::size_t>& target_parts, const Json& j) {
    RingMatrix m(base->coeff_ring(), target_parts.size(), source_parts.size());
    const auto& rows = j.is_object() && j.contains("entries") ? j.at("entries") : Json::array();
    if (!rows.is_array()) throw InputError("morphism entries must be an array of rows");
    if (rows.size() > target_parts.size()) throw InputError("morphism has more rows than target parts");
    for (std::size_t i = 0; i < rows.size(); ++i) {
        if (!rows[i].is_array()) throw InputError("morphism row must be an array");
        if (rows[i].size() > source_parts.size()) throw InputError("morphism row longer than the source part list");
        for (std::size_t k = 0; k < rows[i].size(); ++k) {
            const auto& e = rows[i][k];
            if (e.is_null() || (e.is_object() && !e.contains("coeff"))) continue;
            m.at(i, k) = base->coeff_ring()->from_digits(get<std::vector<int>>(field(e, "coeff"), "coeff digits"));
        }
    }
    return SerialMorphism::from_unsorted(base, source_parts, target_parts, m);
}

Json to_json(const Representation& r) {
    const auto& q = *r.quiver();
    Json modules = Json::object(), maps = Json::object();
    for (std::size_t v = 0; v < q.vertex_count(); ++v) modules[q.vertex_name(v)] = to_json(r.module(v));
    for (std::size_t a = 0; a < q.arrows().size(); ++a) maps[q.arrow(a).name] = to_json(r.map(a));
    return {{"base", to_json(*r.base())}, {"quiver", to_json(q)}, {"modules", modules}, {"maps", maps}};
}

Representation representation_from_json(const Json& j) {
    const auto base = base_from_json(field(j, "base"));
    const auto q = quiver_from_json(field(j, "quiver"));
    const Json empty = Json::object();
    const auto& jm = j.contains("modules") ? j.at("modules") : empty;
    const auto& jf = j.contains("maps") ? j.at("maps") : empty;
    if (!jm.is_object() || !jf.is_object()) throw InputError("modules and maps must be JSON objects");
    for (const auto& [key, value] : jm.items())
        if (!q->find_vertex(key)) throw InputError("module given for unknown vertex '" + key + "'");
    for (const auto& [key, value] : jf.items())
        if (!q->find_arrow(key)) throw InputError("map given for unknown arrow '" + key + "'");

    std::vector<std::vector<std::size_t>> parts(q->vertex_count());
    for (std::size_t v = 0; v < q->vertex_count(); ++v)
        if (jm.contains(q->vertex_name(v))) parts[v] = parts_from_json(base, jm.at(q->vertex_name(v)));
    std::vector<SerialModule> modules;
    for (const auto& p : parts) modules.emplace_back(base, p);
    std::vector<SerialMorphism> maps;
    for (std::size_t a = 0; a < q->arrows().size(); ++a) {
        const auto& arrow = q->arrow(a);
        const Json none = Json::object();
        const auto& e = jf.contains(arrow.name) ? jf.at(arrow.name) : none;
        maps.push_back(morphism_from_json(base, parts[arrow.source], parts[arrow.target], e));
    }
    return Representation(base, q, std::move(modules), std::move(maps));
}

Json to_json(const RepMorphism& f) {
    const auto& q = *f.source().quiver();
    Json comps = Json::object();
    for (std::size_t v = 0; v < q.vertex_count(); ++v) comps[q.vertex_name(v)] = to_json(f.component(v));
    return {{"components", comps}};
}

Json to_json(const EnumerationReport& r) {
    Json classes = Json::array();
    for (const auto& c : r.classes)
        classes.push_back({{"representation", to_json(c.rep)},
                           {"certificate", c.certificate},
                           {"injective", c.injective},
                           {"length_vector", c.rep.length_vector()}});
    return {{"base", to_json(*r.base)},
            {"quiver", to_json(*r.quiver)},
            {"caps", r.caps},
            {"classes", classes},
            {"counts", {{"injective", r.injective_count}, {"non_injective", r.non_injective_count}}}};
}

Json read_file(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw InputError("cannot open '" + path + "'");
    try {
        return Json::parse(in);
    } catch (const Json::exception& e) {
        throw InputError("malformed JSON in '" + path + "': " + e.what());
    }
}

std::string dump(const Json& j) { return j.dump(2) + "\n"; }

}  // namespace monocat::io
