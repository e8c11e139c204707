#include "dartcover/graph_io.hpp"

#include "dartcover/errors.hpp"

#include <algorithm>
#include <charconv>
#include <fstream>
#include <map>
#include <sstream>
#include <tuple>
#include <vector>

namespace dartcover {

namespace {

std::vector<std::string_view> split_ws(std::string_view line)
{
    std::vector<std::string_view> out;
    std::size_t i = 0;
    while (i < line.size()) {
        while (i < line.size() && (line[i] == ' ' || line[i] == '\t' || line[i] == '\r'))
            ++i;
        std::size_t j = i;
        while (j < line.size() && line[j] != ' ' && line[j] != '\t' && line[j] != '\r')
            ++j;
        if (j > i)
            out.push_back(line.substr(i, j - i));
        i = j;
    }
    return out;
}

Color parse_color(std::string_view s, int line)
{
    Color c = 0;
    auto [ptr, ec] = std::from_chars(s.data(), s.data() + s.size(), c);
    if (ec != std::errc() || ptr != s.data() + s.size() || c < 0)
        throw ParseError(line, "bad colour '" + std::string(s) + "'");
    return c;
}

Color parse_single_color(std::string_view token, int line)
{
    constexpr std::string_view prefix = "color=";
    if (!token.starts_with(prefix))
        throw ParseError(line, "expected color=<n>, got '" + std::string(token) + "'");
    return parse_color(token.substr(prefix.size()), line);
}

std::pair<Color, Color> parse_color_pair(std::string_view token, int line)
{
    constexpr std::string_view prefix = "colors=";
    if (!token.starts_with(prefix))
        throw ParseError(line, "expected colors=<i>,<j>, got '" + std::string(token) + "'");
    auto body = token.substr(prefix.size());
    auto comma = body.find(',');
    if (comma == std::string_view::npos)
        throw ParseError(line, "expected colors=<i>,<j>, got '" + std::string(token) + "'");
    return {parse_color(body.substr(0, comma), line), parse_color(body.substr(comma + 1), line)};
}

}  // namespace

Graph parse_graph(std::string_view text)
{
    GraphBuilder builder;
    std::map<std::string, VertexId, std::less<>> ids;

    auto lookup = [&](std::string_view name, int line) {
        auto it = ids.find(name);
        if (it == ids.end())
            throw ParseError(line, "undeclared vertex '" + std::string(name) + "'");
        return it->second;
    };

    int line_no = 0;
    std::size_t pos = 0;
    while (pos <= text.size()) {
        auto end = text.find('\n', pos);
        if (end == std::string_view::npos)
            end = text.size();
        std::string_view line = text.substr(pos, end - pos);
        pos = end + 1;
        ++line_no;

        if (auto hash = line.find('#'); hash != std::string_view::npos)
            line = line.substr(0, hash);
        auto tok = split_ws(line);
        if (tok.empty())
            continue;

        const auto& kw = tok[0];
        if (kw == "vertex") {
            if (tok.size() < 2 || tok.size() > 3)
                throw ParseError(line_no, "usage: vertex <id> [color=<n>]");
            Color c = tok.size() == 3 ? parse_single_color(tok[2], line_no) : 0;
            std::string name(tok[1]);
            if (ids.contains(name))
                throw ParseError(line_no, "duplicate vertex '" + name + "'");
            ids.emplace(name, builder.add_vertex(c, name));
        }
        else if (kw == "edge") {
            if (tok.size() < 3 || tok.size() > 4)
                throw ParseError(line_no, "usage: edge <u> <v> [colors=<i>,<j>]");
            auto [ci, cj] = tok.size() == 4 ? parse_color_pair(tok[3], line_no) : std::pair<Color, Color>{0, 0};
            builder.add_edge(lookup(tok[1], line_no), lookup(tok[2], line_no), ci, cj);
        }
        else if (kw == "loop") {
            if (tok.size() < 2 || tok.size() > 3)
                throw ParseError(line_no, "usage: loop <u> [colors=<i>,<j>]");
            auto [ci, cj] = tok.size() == 3 ? parse_color_pair(tok[2], line_no) : std::pair<Color, Color>{0, 0};
            builder.add_loop(lookup(tok[1], line_no), ci, cj);
        }
        else if (kw == "semi") {
            if (tok.size() < 2 || tok.size() > 3)
                throw ParseError(line_no, "usage: semi <u> [color=<n>]");
            Color c = tok.size() == 3 ? parse_single_color(tok[2], line_no) : 0;
            builder.add_semi(lookup(tok[1], line_no), c);
        }
        else {
            throw ParseError(line_no, "unknown keyword '" + std::string(kw) + "'");
        }
    }
    return builder.build();
}

Graph read_graph_file(const std::string& path)
{
    std::ifstream in(path);
    if (!in)
        throw Error("io", "cannot open '" + path + "'");
    std::stringstream buffer;
    buffer << in.rdbuf();
    return parse_graph(buffer.str());
}

std::string serialize_graph(const Graph& g)
{
    require_valid(g);
    std::ostringstream out;
    for (VertexId v = 0; v < g.num_vertices(); ++v) {
        out << "vertex " << g.vertex_name(v);
        if (g.vertex_color(v) != 0)
            out << " color=" << g.vertex_color(v);
        out << '\n';
    }

    // (kind rank, u, v, colour at u, colour at v)
    using Key = std::tuple<int, VertexId, VertexId, Color, Color>;
    std::vector<Key> links;
    for (LinkId l = 0; l < g.num_links(); ++l) {
        auto ds = g.link_darts(l);
        switch (g.link_kind(l)) {
        case LinkKind::Edge: {
            Dart a = ds[0], b = ds[1];
            if (g.vertex_of(a) > g.vertex_of(b))
                std::swap(a, b);
            links.emplace_back(0, g.vertex_of(a), g.vertex_of(b), g.dart_color(a), g.dart_color(b));
            break;
        }
        case LinkKind::Loop: {
            Color ca = g.dart_color(ds[0]), cb = g.dart_color(ds[1]);
            links.emplace_back(1, g.vertex_of(ds[0]), g.vertex_of(ds[0]), std::min(ca, cb), std::max(ca, cb));
            break;
        }
        case LinkKind::SemiEdge:
            links.emplace_back(2, g.vertex_of(ds[0]), g.vertex_of(ds[0]), g.dart_color(ds[0]), 0);
            break;
        }
    }
    std::sort(links.begin(), links.end());
    for (const auto& [kind, u, v, cu, cv] : links) {
        if (kind == 0) {
            out << "edge " << g.vertex_name(u) << ' ' << g.vertex_name(v);
            if (cu != 0 || cv != 0)
                out << " colors=" << cu << ',' << cv;
        }
        else if (kind == 1) {
            out << "loop " << g.vertex_name(u);
            if (cu != 0 || cv != 0)
                out << " colors=" << cu << ',' << cv;
        }
        else {
            out << "semi " << g.vertex_name(u);
            if (cu != 0)
                out << " color=" << cu;
        }
        out << '\n';
    }
    return out.str();
}

void write_graph_file(const std::string& path, const Graph& g)
{
    std::ofstream out(path);
    if (!out)
        throw Error("io", "cannot write '" + path + "'");
    out << serialize_graph(g);
}

}  // namespace dartcover
