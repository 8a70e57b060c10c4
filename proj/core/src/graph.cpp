#include "degseq/graph.hpp"

#include <algorithm>
#include <charconv>
#include <optional>

#include "degseq/error.hpp"

namespace degseq {

Graph::Graph(std::size_t n) : adjacency_(n) {}

void Graph::add_edge(Vertex a, Vertex b) {
    if (a >= vertex_count() || b >= vertex_count()) {
        throw Error(ErrorCode::vertex_out_of_range,
                    "edge (" + std::to_string(a) + ", " + std::to_string(b) + ") with n = " +
                        std::to_string(vertex_count()));
    }
    if (a == b) throw Error(ErrorCode::self_pair, "loop at vertex " + std::to_string(a));
    const Edge e = make_edge(a, b);
    if (!index_.insert(key(e)).second) {
        throw Error(ErrorCode::duplicate_edge,
                    "(" + std::to_string(e.u) + ", " + std::to_string(e.v) + ")");
    }
    edges_.push_back(e);
    adjacency_[a].push_back(b);
    adjacency_[b].push_back(a);
}

bool Graph::has_edge(Vertex a, Vertex b) const noexcept {
    return index_.contains(key(make_edge(a, b)));
}

std::vector<Degree> Graph::degree_vector() const {
    std::vector<Degree> out(vertex_count());
    for (std::size_t v = 0; v < out.size(); ++v) out[v] = static_cast<Degree>(adjacency_[v].size());
    return out;
}

void Graph::unlink(Vertex a, Vertex b) {
    auto& list = adjacency_[a];
    auto it = std::find(list.begin(), list.end(), b);
    *it = list.back();
    list.pop_back();
}

void Graph::replace_edge(std::size_t index, Edge e) {
    e = make_edge(e.u, e.v);
    const Edge old = edges_[index];
    index_.erase(key(old));
    unlink(old.u, old.v);
    unlink(old.v, old.u);
    edges_[index] = e;
    index_.insert(key(e));
    adjacency_[e.u].push_back(e.v);
    adjacency_[e.v].push_back(e.u);
}

bool Graph::consistent() const {
    if (index_.size() != edges_.size()) return false;
    std::size_t endpoint_total = 0;
    for (const auto& list : adjacency_) endpoint_total += list.size();
    if (endpoint_total != 2 * edges_.size()) return false;
    for (const Edge& e : edges_) {
        if (e.u >= e.v || e.v >= vertex_count()) return false;
        if (!index_.contains(key(e))) return false;
        const auto& list = adjacency_[e.u];
        if (std::count(list.begin(), list.end(), e.v) != 1) return false;
    }
    return true;
}

bool Graph::same_edges(const Graph& other) const {
    if (vertex_count() != other.vertex_count() || edge_count() != other.edge_count()) return false;
    return std::all_of(edges_.begin(), edges_.end(),
                       [&](const Edge& e) { return other.has_edge(e.u, e.v); });
}

namespace {

std::optional<std::uint64_t> parse_uint(std::string_view token) {
    std::uint64_t value = 0;
    const auto [ptr, ec] = std::from_chars(token.data(), token.data() + token.size(), value);
    if (ec != std::errc() || ptr != token.data() + token.size()) return std::nullopt;
    return value;
}

std::vector<std::string_view> split_ws(std::string_view line) {
    std::vector<std::string_view> out;
    std::size_t i = 0;
    while (i < line.size()) {
        while (i < line.size() && (line[i] == ' ' || line[i] == '\t' || line[i] == '\r')) ++i;
        std::size_t j = i;
        while (j < line.size() && line[j] != ' ' && line[j] != '\t' && line[j] != '\r') ++j;
        if (j > i) out.push_back(line.substr(i, j - i));
        i = j;
    }
    return out;
}

} // namespace

Graph parse_edges(std::string_view text) {
    std::optional<std::uint64_t> declared_n;
    std::vector<Edge> pairs;
    std::uint64_t max_id_plus_one = 0;
    std::size_t line_no = 0;

    while (!text.empty()) {
        ++line_no;
        const std::size_t nl = text.find('\n');
        std::string_view line = text.substr(0, nl);
        text = nl == std::string_view::npos ? std::string_view{} : text.substr(nl + 1);

        if (const std::size_t hash = line.find('#'); hash != std::string_view::npos) {
            const auto comment = split_ws(line.substr(hash + 1));
            if (comment.size() == 2 && comment[0] == "n") declared_n = parse_uint(comment[1]);
            line = line.substr(0, hash);
        }
        const auto tokens = split_ws(line);
        if (tokens.empty()) continue;
        const auto a = tokens.size() == 2 ? parse_uint(tokens[0]) : std::nullopt;
        const auto b = tokens.size() == 2 ? parse_uint(tokens[1]) : std::nullopt;
        if (!a || !b || *a > 0xFFFFFFFEull || *b > 0xFFFFFFFEull) {
            throw Error(ErrorCode::malformed_token,
                        "line " + std::to_string(line_no) + " is not a `u v` vertex pair");
        }
        pairs.push_back(Edge{static_cast<Vertex>(*a), static_cast<Vertex>(*b)});
        max_id_plus_one = std::max({max_id_plus_one, *a + 1, *b + 1});
    }

    const std::uint64_t n = declared_n.value_or(max_id_plus_one);
    if (n < max_id_plus_one) {
        throw Error(ErrorCode::vertex_out_of_range,
                    "declared n = " + std::to_string(n) + " but ids reach " +
                        std::to_string(max_id_plus_one - 1));
    }
    Graph g(static_cast<std::size_t>(n));
    for (const Edge& e : pairs) g.add_edge(e.u, e.v);
    return g;
}

std::string format_edges(const Graph& g) {
    std::string out = "# n " + std::to_string(g.vertex_count()) + "\n";
    out.reserve(out.size() + g.edge_count() * 12);
    char buf[16];
    for (const Edge& e : g.edges()) {
        auto [p1, ec1] = std::to_chars(buf, buf + sizeof buf, e.u);
        out.append(buf, p1);
        out.push_back(' ');
        auto [p2, ec2] = std::to_chars(buf, buf + sizeof buf, e.v);
        out.append(buf, p2);
        out.push_back('\n');
    }
    return out;
}

} // namespace degseq
