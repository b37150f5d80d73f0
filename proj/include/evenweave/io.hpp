#ifndef EVENWEAVE_IO_HPP
#define EVENWEAVE_IO_HPP

#include <cctype>
#include <charconv>
#include <optional>
#include <sstream>
#include <string>
#include <string_view>
#include <utility>
#include <variant>
#include <vector>

#include <json.hpp>

#include "evenweave/cycle.hpp"
#include "evenweave/error.hpp"
#include "evenweave/labeled.hpp"
#include "evenweave/system.hpp"

namespace evenweave
{

inline constexpr std::string_view format_version = "evenweave/1";

/// Parse failure; line and column are 1-based (0 when unknown).
struct ParseError : Error
{
    ParseError(std::size_t line_, std::size_t column_, std::string token_, const std::string& message)
        : Error("line " + std::to_string(line_) + ", column " + std::to_string(column_) + ": " + message + " near '"
                + token_ + "'"),
          line(line_), column(column_), token(std::move(token_))
    {
    }

    std::size_t line;
    std::size_t column;
    std::string token;
};

struct SystemDocument
{
    HostGraph host;
    int t = 0;
    std::optional<Provenance> provenance;
    std::optional<std::vector<Vertex>> anchors;
    std::vector<Cycle> cycles;

    CycleSystem system() const { return {cycles, host}; }
    bool operator==(const SystemDocument&) const = default;
};

inline SystemDocument to_document(const LabeledSystem& s)
{
    SystemDocument d;
    d.host = s.system.host;
    d.t = static_cast<int>(s.cycle_length() / 2);
    d.provenance = s.provenance;
    d.anchors = s.anchors;
    d.cycles = s.system.cycles;
    return d;
}

namespace detail
{

inline std::optional<int> parse_int(std::string_view s)
{
    if (s.empty() || !std::isdigit(static_cast<unsigned char>(s.front())))
        return std::nullopt;
    int v = 0;
    auto [ptr, ec] = std::from_chars(s.data(), s.data() + s.size(), v);
    if (ec != std::errc{} || ptr != s.data() + s.size())
        return std::nullopt;
    return v;
}

} // namespace detail

/// Inverse of to_string(Vertex); nullopt on anything outside the grammar.
inline std::optional<Vertex> parse_vertex(std::string_view tok)
{
    if (tok == "inf")
        return Vertex::infty();
    if (tok == "inf'")
        return Vertex::infty_prime();
    if (tok.starts_with("x^")) {
        auto body = tok.substr(2);
        int e = 0;
        if (body.ends_with("*l")) {
            body.remove_suffix(2);
            e = 1;
        }
        if (auto j = detail::parse_int(body))
            return Vertex::dihedral(*j, e);
        return std::nullopt;
    }
    if (const auto at = tok.find('@'); at != std::string_view::npos) {
        const auto z = detail::parse_int(tok.substr(0, at));
        const auto side = tok.substr(at + 1);
        if (z && (side == "0" || side == "1"))
            return Vertex::bi(*z, side == "1");
        return std::nullopt;
    }
    if (auto n = detail::parse_int(tok))
        return Vertex::residue(*n);
    return std::nullopt;
}

namespace detail
{

inline std::string join_vertices(const auto& vs)
{
    std::string out;
    bool first = true;
    for (const auto& v : vs) {
        if (!first)
            out += ',';
        first = false;
        out += to_string(v);
    }
    return out;
}

} // namespace detail

// ---------------------------------------------------------------------------
// text

inline std::string render_text(const SystemDocument& d)
{
    std::ostringstream o;
    o << format_version << '\n';
    if (const auto* k = std::get_if<CompleteMinusFactor>(&d.host)) {
        o << "host complete-minus-factor " << k->vertices.size() << '\n';
        o << "t " << d.t << '\n';
        o << "provenance " << (d.provenance ? d.provenance->tag() : "-") << '\n';
        o << "vertices " << detail::join_vertices(k->vertices) << '\n';
        o << "factor ";
        if (!k->factor) {
            o << '-';
        } else {
            for (std::size_t i = 0; i < k->factor->size(); ++i)
                o << (i ? ";" : "") << to_string((*k->factor)[i].u) << '~' << to_string((*k->factor)[i].v);
        }
        o << '\n';
    } else {
        const auto& b = std::get<CompleteBipartite>(d.host);
        o << "host complete-bipartite " << b.part_x.size() << ' ' << b.part_y.size() << '\n';
        o << "t " << d.t << '\n';
        o << "provenance " << (d.provenance ? d.provenance->tag() : "-") << '\n';
        o << "part-x " << detail::join_vertices(b.part_x) << '\n';
        o << "part-y " << detail::join_vertices(b.part_y) << '\n';
    }
    o << "anchors " << (d.anchors ? detail::join_vertices(*d.anchors) : "-") << '\n';
    o << "cycles " << d.cycles.size() << '\n';
    for (const auto& c : d.cycles)
        o << detail::join_vertices(c.vertices()) << '\n';
    return o.str();
}

namespace detail
{

class TextParser
{
public:
    explicit TextParser(std::string_view text)
    {
        std::size_t pos = 0;
        while (pos < text.size()) {
            auto nl = text.find('\n', pos);
            if (nl == std::string_view::npos)
                nl = text.size();
            auto line = text.substr(pos, nl - pos);
            if (!line.empty() && line.back() == '\r')
                line.remove_suffix(1);
            lines_.push_back(line);
            pos = nl + 1;
        }
    }

    SystemDocument parse()
    {
        SystemDocument d;
        expect_exact(format_version);
        const auto host = keyword("host");
        const auto host_words = split(host.text, ' ');
        if (host_words.empty())
            error(host, 0, "", "missing host kind");
        const bool bipartite = host_words[0].text == "complete-bipartite";
        if (!bipartite && host_words[0].text != "complete-minus-factor")
            error(host, host_words[0].col, host_words[0].text, "unknown host kind");
        std::vector<int> sizes;
        for (std::size_t i = 1; i < host_words.size(); ++i) {
            auto n = parse_int(host_words[i].text);
            if (!n)
                error(host, host_words[i].col, host_words[i].text, "expected a vertex count");
            sizes.push_back(*n);
        }
        if (sizes.size() != (bipartite ? 2u : 1u))
            error(host, 0, host.text, bipartite ? "expected two part sizes" : "expected one vertex count");

        const auto tline = keyword("t");
        auto t = parse_int(tline.text);
        if (!t)
            error(tline, 0, std::string(tline.text), "expected an integer");
        d.t = *t;

        const auto prov = keyword("provenance");
        if (prov.text != "-") {
            try {
                d.provenance = Provenance::parse(prov.text);
            } catch (const InvalidArgument& e) {
                error(prov, 0, std::string(prov.text), e.what());
            }
        }

        if (bipartite) {
            CompleteBipartite b;
            b.part_x = vertex_list(keyword("part-x"), static_cast<std::size_t>(sizes[0]));
            b.part_y = vertex_list(keyword("part-y"), static_cast<std::size_t>(sizes[1]));
            d.host = std::move(b);
        } else {
            CompleteMinusFactor k;
            k.vertices = vertex_list(keyword("vertices"), static_cast<std::size_t>(sizes[0]));
            const auto fac = keyword("factor");
            if (fac.text != "-") {
                std::vector<Edge> edges;
                for (const auto& item : split(fac.text, ';')) {
                    const auto tilde = item.text.find('~');
                    if (tilde == std::string_view::npos)
                        error(fac, item.col, item.text, "expected an edge u~v");
                    const auto u = parse_vertex(item.text.substr(0, tilde));
                    const auto v = parse_vertex(item.text.substr(tilde + 1));
                    if (!u || !v)
                        error(fac, item.col, item.text, "malformed vertex in edge");
                    edges.push_back(Edge::make(*u, *v));
                }
                k.factor = std::move(edges);
            }
            d.host = std::move(k);
        }

        const auto anchors = keyword("anchors");
        if (anchors.text != "-")
            d.anchors = vertex_list(anchors, std::nullopt);

        const auto count_line = keyword("cycles");
        const auto count = parse_int(count_line.text);
        if (!count)
            error(count_line, 0, std::string(count_line.text), "expected a cycle count");
        for (int i = 0; i < *count; ++i) {
            if (cur_ >= lines_.size())
                throw ParseError(cur_ + 1, 1, "", "expected " + std::to_string(*count) + " cycles, found "
                                                      + std::to_string(i));
            const Field f{lines_[cur_], cur_ + 1, 1};
            ++cur_;
            auto vs = vertex_list(f, std::nullopt);
            try {
                d.cycles.emplace_back(std::move(vs));
            } catch (const InvalidArgument& e) {
                error(f, 0, std::string(f.text), e.what());
            }
        }
        while (cur_ < lines_.size()) {
            if (!lines_[cur_].empty())
                throw ParseError(cur_ + 1, 1, std::string(lines_[cur_]), "unexpected content after the last cycle");
            ++cur_;
        }
        return d;
    }

private:
    struct Field
    {
        std::string_view text;
        std::size_t line;
        std::size_t col;  // column of text[0]
    };

    struct Piece
    {
        std::string_view text;
        std::size_t col;  // offset in the field
    };

    [[noreturn]] static void error(const Field& f, std::size_t offset, std::string_view token, const std::string& msg)
    {
        throw ParseError(f.line, f.col + offset, std::string(token), msg);
    }

    static std::vector<Piece> split(std::string_view s, char sep)
    {
        std::vector<Piece> out;
        std::size_t pos = 0;
        while (true) {
            const auto next = s.find(sep, pos);
            out.push_back({s.substr(pos, next == std::string_view::npos ? std::string_view::npos : next - pos), pos});
            if (next == std::string_view::npos)
                break;
            pos = next + 1;
        }
        return out;
    }

    void expect_exact(std::string_view want)
    {
        if (cur_ >= lines_.size() || lines_[cur_] != want)
            throw ParseError(cur_ + 1, 1, cur_ < lines_.size() ? std::string(lines_[cur_]) : "",
                             "expected format line '" + std::string(want) + "'");
        ++cur_;
    }

    Field keyword(std::string_view key)
    {
        if (cur_ >= lines_.size())
            throw ParseError(cur_ + 1, 1, "", "expected '" + std::string(key) + "' line");
        const auto line = lines_[cur_];
        if (!line.starts_with(key) || line.size() <= key.size() || line[key.size()] != ' ')
            throw ParseError(cur_ + 1, 1, std::string(line.substr(0, line.find(' '))),
                             "expected '" + std::string(key) + "' line");
        ++cur_;
        return {line.substr(key.size() + 1), cur_, key.size() + 2};
    }

    static std::vector<Vertex> vertex_list(const Field& f, std::optional<std::size_t> expected)
    {
        std::vector<Vertex> out;
        if (f.text.empty())
            error(f, 0, "", "empty vertex list");
        for (const auto& p : split(f.text, ',')) {
            auto v = parse_vertex(p.text);
            if (!v)
                error(f, p.col, p.text, "malformed vertex");
            out.push_back(*v);
        }
        if (expected && out.size() != *expected)
            error(f, 0, std::string(f.text.substr(0, 20)),
                  "expected " + std::to_string(*expected) + " vertices, found " + std::to_string(out.size()));
        return out;
    }

    std::vector<std::string_view> lines_;
    std::size_t cur_ = 0;
};

} // namespace detail

inline SystemDocument parse_text(std::string_view text) { return detail::TextParser(text).parse(); }

// ---------------------------------------------------------------------------
// JSON

inline nlohmann::ordered_json to_json(const SystemDocument& d)
{
    using nlohmann::ordered_json;
    auto list = [](const auto& vs) {
        ordered_json a = ordered_json::array();
        for (const auto& v : vs)
            a.push_back(to_string(v));
        return a;
    };
    ordered_json j;
    j["format"] = std::string(format_version);
    ordered_json host;
    if (const auto* k = std::get_if<CompleteMinusFactor>(&d.host)) {
        host["kind"] = "complete-minus-factor";
        host["vertices"] = list(k->vertices);
        if (k->factor) {
            ordered_json f = ordered_json::array();
            for (const auto& e : *k->factor)
                f.push_back({to_string(e.u), to_string(e.v)});
            host["factor"] = std::move(f);
        } else {
            host["factor"] = nullptr;
        }
    } else {
        const auto& b = std::get<CompleteBipartite>(d.host);
        host["kind"] = "complete-bipartite";
        host["part_x"] = list(b.part_x);
        host["part_y"] = list(b.part_y);
    }
    j["host"] = std::move(host);
    j["t"] = d.t;
    j["provenance"] = d.provenance ? ordered_json(d.provenance->tag()) : ordered_json(nullptr);
    j["anchors"] = d.anchors ? list(*d.anchors) : ordered_json(nullptr);
    ordered_json cycles = ordered_json::array();
    for (const auto& c : d.cycles)
        cycles.push_back(list(c.vertices()));
    j["cycles"] = std::move(cycles);
    return j;
}

inline std::string render_json(const SystemDocument& d) { return to_json(d).dump(2) + "\n"; }

inline SystemDocument parse_json(std::string_view text)
{
    using nlohmann::json;
    json j;
    try {
        j = json::parse(text);
    } catch (const json::parse_error& e) {
        // translate the byte offset into line and column
        std::size_t line = 1;
        std::size_t col = 1;
        for (std::size_t i = 0; i + 1 < e.byte && i < text.size(); ++i) {
            if (text[i] == '\n') {
                ++line;
                col = 1;
            } else {
                ++col;
            }
        }
        const std::size_t at = e.byte > 0 ? std::min(e.byte - 1, text.size()) : 0;
        throw ParseError(line, col, std::string(text.substr(at, 10)), "malformed JSON");
    }

    auto fail = [](const std::string& where, const std::string& token, const std::string& msg) -> ParseError {
        return ParseError(0, 0, token, where + ": " + msg);
    };
    auto vertex = [&](const json& v, const std::string& where) {
        if (!v.is_string())
            throw fail(where, v.dump(), "expected a vertex string");
        auto p = parse_vertex(v.get<std::string>());
        if (!p)
            throw fail(where, v.get<std::string>(), "malformed vertex");
        return *p;
    };
    auto list = [&](const json& a, const std::string& where) {
        if (!a.is_array())
            throw fail(where, a.dump(), "expected an array");
        std::vector<Vertex> out;
        for (const auto& v : a)
            out.push_back(vertex(v, where));
        return out;
    };

    try {
        if (!j.is_object() || j.value("format", "") != format_version)
            throw fail("format", j.is_object() ? j.value("format", "") : j.dump(), "unsupported format");
        SystemDocument d;
        const auto& host = j.at("host");
        const auto kind = host.at("kind").get<std::string>();
        if (kind == "complete-minus-factor") {
            CompleteMinusFactor k;
            k.vertices = list(host.at("vertices"), "host.vertices");
            if (host.contains("factor") && !host.at("factor").is_null()) {
                std::vector<Edge> edges;
                for (const auto& e : host.at("factor")) {
                    if (!e.is_array() || e.size() != 2)
                        throw fail("host.factor", e.dump(), "expected a pair");
                    edges.push_back(Edge::make(vertex(e[0], "host.factor"), vertex(e[1], "host.factor")));
                }
                k.factor = std::move(edges);
            }
            d.host = std::move(k);
        } else if (kind == "complete-bipartite") {
            d.host = CompleteBipartite{list(host.at("part_x"), "host.part_x"), list(host.at("part_y"), "host.part_y")};
        } else {
            throw fail("host.kind", kind, "unknown host kind");
        }
        d.t = j.at("t").get<int>();
        if (j.contains("provenance") && !j.at("provenance").is_null()) {
            const auto tag = j.at("provenance").get<std::string>();
            try {
                d.provenance = Provenance::parse(tag);
            } catch (const InvalidArgument& e) {
                throw fail("provenance", tag, e.what());
            }
        }
        if (j.contains("anchors") && !j.at("anchors").is_null())
            d.anchors = list(j.at("anchors"), "anchors");
        std::size_t i = 0;
        for (const auto& c : j.at("cycles")) {
            const auto where = "cycles[" + std::to_string(i++) + "]";
            try {
                d.cycles.emplace_back(list(c, where));
            } catch (const InvalidArgument& e) {
                throw fail(where, c.dump(), e.what());
            }
        }
        return d;
    } catch (const json::exception& e) {
        throw ParseError(0, 0, "", std::string("bad document structure: ") + e.what());
    }
}

enum class DocumentFormat { text, json };

inline std::string render(const SystemDocument& d, DocumentFormat f)
{
    return f == DocumentFormat::json ? render_json(d) : render_text(d);
}

/// Sniffs the format: JSON documents start with '{'.
inline SystemDocument parse_document(std::string_view text)
{
    const auto first = text.find_first_not_of(" \t\r\n");
    if (first != std::string_view::npos && text[first] == '{')
        return parse_json(text);
    return parse_text(text);
}

} // namespace evenweave

#endif
