#include "immersion/dot.hpp"

#include <map>
#include <stdexcept>

namespace imm {

namespace {

const char* kPalette[] = {"#e6194b", "#3cb44b", "#0082c8", "#f58231", "#911eb4", "#46a5aa",
                          "#f032e6", "#808000", "#1b5e20", "#aa6e28", "#000080", "#e6194b"};
constexpr int kPaletteSize = 12;

}  // namespace

std::string export_dot(const Graph& g, const ImmersionCertificate* cert) {
    std::map<Edge, int> edge_pair;   // edge -> index of the pair using it
    std::map<int, int> terminal_pos;
    if (cert) {
        auto res = verify(g, *cert);
        if (!res.ok) throw std::invalid_argument("export_dot: invalid certificate: " + res.message);
        int pair_index = 0;
        for (const auto& [key, walk] : cert->trails) {
            (void)key;
            for (std::size_t s = 0; s + 1 < walk.size(); ++s)
                edge_pair[{std::min(walk[s], walk[s + 1]), std::max(walk[s], walk[s + 1])}] =
                    pair_index;
            ++pair_index;
        }
        for (std::size_t i = 0; i < cert->terminals.size(); ++i)
            terminal_pos[cert->terminals[i]] = static_cast<int>(i);
    }

    std::string out = "graph immersion {\n  node [shape=circle fontsize=10];\n";
    for (int v = 0; v < g.order(); ++v) {
        out += "  v" + std::to_string(v) + " [label=\"" + g.label(v) + "\"";
        auto it = terminal_pos.find(v);
        if (it != terminal_pos.end())
            out += " shape=doublecircle style=filled fillcolor=\"#f2f2f2\" xlabel=\"t" +
                   std::to_string(it->second) + "\"";
        out += "];\n";
    }
    for (const auto& [u, v] : g.edges()) {
        out += "  v" + std::to_string(u) + " -- v" + std::to_string(v);
        auto it = edge_pair.find({u, v});
        if (it != edge_pair.end())
            out += " [color=\"" + std::string(kPalette[it->second % kPaletteSize]) +
                   "\" penwidth=2.0]";
        else if (cert)
            out += " [color=\"#cccccc\"]";
        out += ";\n";
    }
    out += "}\n";
    return out;
}

}  // namespace imm
