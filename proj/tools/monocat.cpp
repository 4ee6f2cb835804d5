// monocat command-line front end.
//
// Exit status: 0 success or true verdict, 1 false verdict, 2 input error,
// 3 budget exhausted.

#include "monocat/acceptance.hpp"
#include "monocat/decompose.hpp"
#include "monocat/error.hpp"
#include "monocat/json_io.hpp"
#include "monocat/kronecker.hpp"
#include "monocat/mimo.hpp"

#include <CLI11.hpp>

#include <fstream>
#include <iostream>
#include <sstream>

using namespace monocat;
using io::Json;

namespace {

constexpr int exit_false = 1;
constexpr int exit_input = 2;
constexpr int exit_budget = 3;

struct Args {
    std::string input, output, base, quiver, caps, suite = "all", format = "json";
    std::uint64_t seed = 1;
    std::uint64_t budget = default_budget();
    bool mono_only = false;
    std::string method = "auto";
    std::string kind = "P";
    int index = 1;
    std::string param = "1:0";
};

std::vector<int> parse_caps(const std::string& s) {
    std::vector<int> out;
    std::stringstream ss(s);
    std::string item;
    while (std::getline(ss, item, ',')) {
        try {
            std::size_t used = 0;
            const int v = std::stoi(item, &used);
            if (used != item.size() || v < 0) throw std::invalid_argument(item);
            out.push_back(v);
        } catch (const std::exception&) {
            throw InputError("--caps expects non-negative integers a,b,c; got '" + s + "'");
        }
    }
    return out;
}

KroneckerParam parse_param(const std::string& s) {
    const auto colon = s.find(':');
    if (colon == std::string::npos) throw InputError("--param expects a:b, got '" + s + "'");
    try {
        return {static_cast<std::uint32_t>(std::stoul(s.substr(0, colon))),
                static_cast<std::uint32_t>(std::stoul(s.substr(colon + 1)))};
    } catch (const std::exception&) {
        throw InputError("--param expects a:b, got '" + s + "'");
    }
}

Representation load(const Args& a) {
    if (a.input.empty()) throw InputError("--input is required");
    return io::representation_from_json(io::read_file(a.input));
}

bool is_rep(const Json& j) { return j.is_object() && j.contains("modules") && j.contains("maps") && j.contains("base"); }

std::string parts_text(const Json& m) {
    std::string s;
    for (const auto& p : m.at("parts")) s += (s.empty() ? "" : " + ") + p.get<std::string>();
    return s.empty() ? "0" : s;
}

// Text view of a JSON result: representations collapse to their vertex
// modules and nonzero arrow entries, everything else is printed as a tree.
void render(std::ostream& out, const Json& j, int indent) {
    const std::string pad(static_cast<std::size_t>(indent), ' ');
    if (is_rep(j)) {
        for (const auto& [v, m] : j.at("modules").items()) out << pad << "vertex " << v << ": " << parts_text(m) << "\n";
        for (const auto& [a, f] : j.at("maps").items()) out << pad << "arrow " << a << ": " << f.at("entries").dump() << "\n";
        return;
    }
    if (j.is_object()) {
        for (const auto& [k, v] : j.items()) {
            if (v.is_primitive() || (!is_rep(v) && v.dump().size() <= 72)) {
                out << pad << k << ": " << (v.is_string() ? v.get<std::string>() : v.dump()) << "\n";
            } else {
                out << pad << k << ":\n";
                render(out, v, indent + 2);
            }
        }
    } else if (j.is_array()) {
        for (std::size_t i = 0; i < j.size(); ++i) {
            out << pad << "- [" << i << "]\n";
            render(out, j[i], indent + 2);
        }
    } else {
        out << pad << (j.is_string() ? j.get<std::string>() : j.dump()) << "\n";
    }
}

void emit(const Args& a, const Json& j, const std::string& text = {}) {
    std::string body;
    if (a.format == "text") {
        if (!text.empty()) {
            body = text;
        } else {
            std::ostringstream ss;
            render(ss, j, 0);
            body = ss.str();
        }
    } else {
        body = io::dump(j);
    }
    if (a.output.empty()) {
        std::cout << body;
        return;
    }
    std::ofstream f(a.output);
    if (!f) throw InputError("cannot write '" + a.output + "'");
    f << body;
}

Json module_map(const Representation& r, const std::vector<SerialModule>& mods) {
    Json out = Json::object();
    for (std::size_t v = 0; v < mods.size(); ++v) out[r.quiver()->vertex_name(v)] = io::to_json(mods[v]);
    return out;
}

int cmd_validate(const Args& a) {
    const auto r = load(a);
    emit(a, {{"valid", true},
             {"mono", is_mono(r)},
             {"length_vector", r.length_vector()},
             {"partition_vector", r.partition_vector()},
             {"base", r.base()->name()}});
    return 0;
}

int cmd_mono_check(const Args& a) {
    const auto r = load(a);
    const auto k = l1_kopf(r);
    Json failures = Json::array();
    for (std::size_t v = 0; v < k.size(); ++v)
        if (!k[v].module.empty())
            failures.push_back({{"vertex", r.quiver()->vertex_name(v)}, {"kernel", io::to_json(k[v].module)}});
    emit(a, {{"mono", failures.empty()}, {"failures", failures}});
    return failures.empty() ? 0 : exit_false;
}

int cmd_mimo(const Args& a) {
    const auto m = mimo(load(a));
    emit(a, {{"representation", io::to_json(m.rep)}, {"projection", io::to_json(m.projection)}});
    return 0;
}

int cmd_fshriek(const Args& a) {
    const auto r = load(a);
    emit(a, io::to_json(f_shriek(r.base(), r.quiver(), r.modules())));
    return 0;
}

int cmd_kopf(const Args& a) {
    const auto r = load(a);
    std::vector<SerialModule> top, l1;
    for (const auto& k : kopf(r)) top.push_back(k.module);
    for (const auto& k : l1_kopf(r)) l1.push_back(k.module);
    emit(a, {{"kopf", module_map(r, top)}, {"l1_kopf", module_map(r, l1)}});
    return 0;
}

int cmd_decompose(const Args& a) {
    const auto r = load(a);
    DecomposeOptions opt;
    opt.seed = a.seed;
    Json pieces = Json::array();
    for (const auto& p : decompose(r, opt))
        pieces.push_back({{"representation", io::to_json(p.rep)},
                          {"multiplicity", p.multiplicity},
                          {"injective", r.base()->abelian() && injective_rep_recognize(p.rep).has_value()}});
    emit(a, {{"pieces", pieces}});
    return 0;
}

int cmd_stable_reduce(const Args& a) {
    emit(a, io::to_json(stable_reduce(load(a))));
    return 0;
}

int cmd_transfer(const Args& a) {
    if (a.base.empty()) throw InputError("transfer needs --base for the target ring");
    emit(a, io::to_json(transfer(load(a), io::parse_base(a.base))));
    return 0;
}

int cmd_enumerate(const Args& a) {
    if (a.base.empty() || a.quiver.empty()) throw InputError("enumerate needs --base and --quiver");
    const auto base = io::parse_base(a.base);
    const auto q = io::parse_quiver(a.quiver);
    std::string method = a.method;
    if (method == "auto") method = a.caps.empty() ? "rad2" : "bounded";
    EnumerationReport report;
    if (method == "rad2") {
        report = enumerate_mono_rad2(q, base);
    } else if (method == "bounded") {
        if (a.caps.empty()) throw InputError("bounded enumeration needs --caps");
        EnumerateOptions opt;
        opt.mono_only = a.mono_only;
        opt.budget = a.budget;
        opt.seed = a.seed;
        report = enumerate_bounded(q, base, parse_caps(a.caps), opt);
    } else {
        throw InputError("unknown --method '" + a.method + "' (auto, rad2, bounded)");
    }
    std::ostringstream text;
    text << report.classes.size() << " classes (" << report.injective_count << " injective, "
         << report.non_injective_count << " non-injective)\n";
    for (const auto& c : report.classes) {
        text << (c.injective ? "  injective     " : "  non-injective ");
        for (std::size_t v = 0; v < c.rep.modules().size(); ++v)
            text << (v ? " | " : "") << (c.rep.module(v).empty() ? "0" : c.rep.module(v).to_string());
        text << "\n";
    }
    emit(a, io::to_json(report), text.str());
    return 0;
}

int cmd_kronecker(const Args& a) {
    const auto base = io::parse_base(a.base.empty() ? "chain:poly:2:2" : a.base);
    const auto r = kronecker_family(base, parse_kronecker_kind(a.kind), a.index, parse_param(a.param));
    emit(a, io::to_json(r));
    return 0;
}

int cmd_verify_suite(const Args& a) {
    acceptance::Options opt;
    opt.seed = a.seed;
    opt.budget = a.budget;
    if (!a.base.empty()) opt.base = io::parse_base(a.base);
    if (!a.quiver.empty()) opt.quiver = io::parse_quiver(a.quiver);
    std::vector<const acceptance::Criterion*> chosen;
    if (a.suite == "all") {
        for (const auto& c : acceptance::criteria()) chosen.push_back(&c);
    } else {
        std::stringstream ss(a.suite);
        std::string name;
        while (std::getline(ss, name, ',')) {
            const auto* c = acceptance::find(name);
            if (!c) throw InputError("unknown suite '" + name + "'");
            chosen.push_back(c);
        }
    }
    Json results = Json::array();
    std::string text;
    bool all_pass = true, budget = false;
    for (const auto* c : chosen) {
        const auto r = acceptance::run(*c, opt);
        all_pass = all_pass && r.pass;
        budget = budget || r.budget_exceeded;
        results.push_back({{"name", r.name},
                           {"pass", r.pass},
                           {"seconds", r.seconds},
                           {"limit_seconds", r.limit_seconds},
                           {"detail", r.detail}});
        text += acceptance::format(r) + "\n";
    }
    emit(a, {{"results", results}, {"pass", all_pass}}, text);
    if (budget) return exit_budget;
    return all_pass ? 0 : exit_false;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"Monomorphism categories of quiver representations over serial rings"};
    app.require_subcommand(1);
    Args a;

    auto io_opts = [&](CLI::App* s) {
        s->add_option("-i,--input", a.input, "representation file (JSON)");
        s->add_option("-o,--output", a.output, "write the result here instead of stdout");
        s->add_option("--format", a.format, "json or text")->check(CLI::IsMember({"json", "text"}));
        s->add_option("--seed", a.seed, "seed for sampled checks");
        s->add_option("--budget", a.budget, "candidate budget for enumeration (default MONOCAT_BUDGET)");
    };
    auto ring_opts = [&](CLI::App* s) {
        s->add_option("--base", a.base, "chain:int|poly:p:n, rad2nak:m:p or stable:<base>");
        s->add_option("--quiver", a.quiver, "builtin quiver name or quiver JSON file");
    };

    struct Sub {
        const char* name;
        const char* help;
        int (*run)(const Args&);
        bool ring;
    };
    const Sub subs[] = {
        {"validate", "load and check a representation file", cmd_validate, false},
        {"mono-check", "exit 1 unless every in-map is a monomorphism", cmd_mono_check, false},
        {"mimo", "minimal mono approximation with its projection", cmd_mimo, false},
        {"fshriek", "f_! of the vertex modules of the input", cmd_fshriek, false},
        {"kopf", "cokernels and kernels of the in-maps", cmd_kopf, false},
        {"decompose", "Krull-Schmidt decomposition", cmd_decompose, false},
        {"stable-reduce", "image in the stable category", cmd_stable_reduce, false},
        {"transfer", "transfer to the chain ring given by --base", cmd_transfer, true},
        {"enumerate", "indecomposables (rad2 classification or bounded search)", cmd_enumerate, true},
        {"kronecker", "explicit Kronecker family member", cmd_kronecker, true},
        {"verify-suite", "run acceptance criteria by name", cmd_verify_suite, true},
    };
    int (*chosen)(const Args&) = nullptr;
    for (const auto& s : subs) {
        auto* sub = app.add_subcommand(s.name, s.help);
        io_opts(sub);
        if (s.ring) ring_opts(sub);
        sub->callback([&chosen, run = s.run] { chosen = run; });
        if (std::string(s.name) == "enumerate") {
            sub->add_option("--caps", a.caps, "per-vertex length caps a,b,c");
            sub->add_flag("--mono", a.mono_only, "only mono representations (bounded search)");
            sub->add_option("--method", a.method, "auto, rad2 or bounded");
        }
        if (std::string(s.name) == "kronecker") {
            sub->add_option("--kind", a.kind, "P, I or R");
            sub->add_option("--n", a.index, "index n");
            sub->add_option("--param", a.param, "point a:b of P^1 for R");
        }
        if (std::string(s.name) == "verify-suite")
            sub->add_option("--suite", a.suite, "criterion name, comma list, or all");
    }

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        const int code = app.exit(e);
        return code == 0 ? 0 : exit_input;
    }
    try {
        return chosen(a);
    } catch (const BudgetExceeded& e) {
        std::cerr << "budget exceeded: " << e.what() << "\n";
        return exit_budget;
    } catch (const InputError& e) {
        std::cerr << "input error: " << e.what() << "\n";
        return exit_input;
    } catch (const UnsupportedError& e) {
        std::cerr << "unsupported: " << e.what() << "\n";
        return exit_input;
    } catch (const Json::exception& e) {
        std::cerr << "input error: " << e.what() << "\n";
        return exit_input;
    }
}
