#include "vtsep/io.hpp"

#include <algorithm>
#include <fstream>
#include <set>
#include <sstream>

namespace vtsep {

namespace {

std::string next_content_line(std::istream& in) {
    std::string line;
    while (std::getline(in, line)) {
        size_t pos = line.find_first_not_of(" \t\r");
        if (pos == std::string::npos) continue;
        if (line[pos] == '#') continue;
        return line;
    }
    throw std::invalid_argument("unexpected end of input");
}

[[noreturn]] void bad(const std::string& what) { throw std::invalid_argument("parse error: " + what); }

}  // namespace

Graph read_graph(std::istream& in) {
    std::istringstream header(next_content_line(in));
    std::string tag, mode;
    long long n = -1, m = -1;
    if (!(header >> tag >> n >> m >> mode) || tag != "graph") bad("expected 'graph <n> <m> <mode>'");
    if (n < 0 || m < 0) bad("negative counts");
    bool directed;
    if (mode == "undirected")
        directed = false;
    else if (mode == "directed")
        directed = true;
    else
        bad("mode must be 'undirected' or 'directed'");
    std::vector<std::pair<int, int>> edges;
    edges.reserve(m);
    for (long long i = 0; i < m; ++i) {
        std::istringstream row(next_content_line(in));
        int u, v;
        if (!(row >> u >> v)) bad("expected edge line 'u v'");
        edges.emplace_back(u, v);
    }
    return directed ? Graph::directed(static_cast<int>(n), edges)
                    : Graph::undirected(static_cast<int>(n), edges);
}

void write_graph(std::ostream& out, const Graph& g) {
    out << "graph " << g.vertex_count() << " " << g.edge_count() << " "
        << (g.is_directed() ? "directed" : "undirected") << "\n";
    for (auto [u, v] : g.edge_list()) out << u << " " << v << "\n";
}

VertexSet read_vertex_set(std::istream& in, int universe) {
    std::string line;
    std::getline(in, line);
    std::istringstream row(line);
    std::vector<int> ids;
    int v;
    while (row >> v) ids.push_back(v);
    std::vector<int> sorted = ids;
    std::sort(sorted.begin(), sorted.end());
    if (std::adjacent_find(sorted.begin(), sorted.end()) != sorted.end()) bad("duplicate vertex id in set");
    return VertexSet(std::move(sorted), universe);
}

void write_vertex_set(std::ostream& out, const VertexSet& s) {
    bool first = true;
    for (int v : s) {
        if (!first) out << " ";
        out << v;
        first = false;
    }
    out << "\n";
}

std::vector<Permutation> read_permutations(std::istream& in, int n) {
    std::vector<Permutation> out;
    std::string line;
    while (std::getline(in, line)) {
        std::istringstream row(line);
        std::vector<int> img;
        int v;
        while (row >> v) img.push_back(v);
        if (img.empty()) continue;
        if (static_cast<int>(img.size()) != n) bad("permutation line has wrong length");
        out.emplace_back(std::move(img));
    }
    return out;
}

void write_permutations(std::ostream& out, const std::vector<Permutation>& perms) {
    for (const auto& p : perms) {
        for (int i = 0; i < p.size(); ++i) out << (i ? " " : "") << p.image[i];
        out << "\n";
    }
}

PeriodicPresentation read_periodic(std::istream& in) {
    std::istringstream header(next_content_line(in));
    std::string tag;
    int c, m, j;
    if (!(header >> tag >> c >> m >> j) || tag != "periodic") bad("expected 'periodic <c> <m> <j>'");
    std::vector<std::pair<int, int>> edges;
    for (int i = 0; i < m; ++i) {
        std::istringstream row(next_content_line(in));
        int u, v;
        if (!(row >> u >> v)) bad("expected cell edge 'u v'");
        edges.emplace_back(u, v);
    }
    std::vector<Jump> jumps;
    for (int i = 0; i < j; ++i) {
        std::istringstream row(next_content_line(in));
        Jump jp;
        if (!(row >> jp.u >> jp.v >> jp.k)) bad("expected jump 'u v k'");
        jumps.push_back(jp);
    }
    return make_periodic(c, edges, jumps);
}

void write_periodic(std::ostream& out, const PeriodicPresentation& p) {
    out << "periodic " << p.cell.vertex_count() << " " << p.cell.edge_count() << " " << p.jumps.size()
        << "\n";
    for (auto [u, v] : p.cell.edge_list()) out << u << " " << v << "\n";
    for (const auto& j : p.jumps) out << j.u << " " << j.v << " " << j.k << "\n";
}

VoltageMap read_voltage(std::istream& in, const Graph& base) {
    std::istringstream header(next_content_line(in));
    std::string tag;
    long long m;
    if (!(header >> tag >> m) || tag != "voltage") bad("expected 'voltage <m>'");
    if (m != base.edge_count()) bad("voltage line count must match base edge count");
    VoltageMap mu(base);
    std::set<std::pair<int, int>> assigned;
    for (long long i = 0; i < m; ++i) {
        std::istringstream row(next_content_line(in));
        int u, v, k;
        if (!(row >> u >> v >> k)) bad("expected voltage line 'u v k'");
        auto key = std::make_pair(std::min(u, v), std::max(u, v));
        if (!assigned.insert(key).second) bad("edge assigned twice");
        mu.set(u, v, k);
    }
    return mu;
}

void write_voltage(std::ostream& out, const VoltageMap& mu) {
    auto edges = mu.base().edge_list();
    out << "voltage " << edges.size() << "\n";
    for (auto [u, v] : edges) out << u << " " << v << " " << mu(u, v) << "\n";
}

TreeDecomposition read_tree_decomposition(std::istream& in, int graph_vertices) {
    std::istringstream header(next_content_line(in));
    std::string tag;
    int b, n;
    if (!(header >> tag >> b >> n) || tag != "td") bad("expected 'td <b> <n>'");
    if (n != graph_vertices) bad("decomposition is for a graph of different order");
    if (b < 1) bad("decomposition needs at least one bag");
    TreeDecomposition td;
    td.bags.assign(b, VertexSet::empty_set(graph_vertices));
    std::vector<char> have(b, 0);
    for (int i = 0; i < b; ++i) {
        std::istringstream row(next_content_line(in));
        std::string kind;
        int idx;
        if (!(row >> kind >> idx) || kind != "bag") bad("expected 'bag <i> v...'");
        if (idx < 0 || idx >= b || have[idx]) bad("bad or repeated bag index");
        have[idx] = 1;
        std::vector<int> ids;
        int v;
        while (row >> v) ids.push_back(v);
        td.bags[idx] = VertexSet::from_unsorted(std::move(ids), graph_vertices);
    }
    std::vector<std::pair<int, int>> edges;
    for (int i = 0; i + 1 < b; ++i) {
        std::istringstream row(next_content_line(in));
        std::string kind;
        int x, y;
        if (!(row >> kind >> x >> y) || kind != "tedge") bad("expected 'tedge i j'");
        edges.emplace_back(x, y);
    }
    td.tree = Graph::undirected(b, edges);
    return td;
}

void write_tree_decomposition(std::ostream& out, const TreeDecomposition& td) {
    int b = td.tree.vertex_count();
    int n = td.bags.empty() ? 0 : td.bags[0].universe();
    out << "td " << b << " " << n << "\n";
    for (int i = 0; i < b; ++i) {
        out << "bag " << i;
        for (int v : td.bags[i]) out << " " << v;
        out << "\n";
    }
    for (auto [x, y] : td.tree.edge_list()) out << "tedge " << x << " " << y << "\n";
}

namespace {

std::ifstream open_or_throw(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw std::invalid_argument("cannot open '" + path + "'");
    return in;
}

}  // namespace

Graph load_graph(const std::string& path) {
    auto in = open_or_throw(path);
    return read_graph(in);
}

VertexSet load_vertex_set(const std::string& path, int universe) {
    auto in = open_or_throw(path);
    return read_vertex_set(in, universe);
}

std::vector<Permutation> load_permutations(const std::string& path, int n) {
    auto in = open_or_throw(path);
    return read_permutations(in, n);
}

PeriodicPresentation load_periodic(const std::string& path) {
    auto in = open_or_throw(path);
    return read_periodic(in);
}

VoltageMap load_voltage(const std::string& path, const Graph& base) {
    auto in = open_or_throw(path);
    return read_voltage(in, base);
}

TreeDecomposition load_tree_decomposition(const std::string& path, int graph_vertices) {
    auto in = open_or_throw(path);
    return read_tree_decomposition(in, graph_vertices);
}

}  // namespace vtsep
