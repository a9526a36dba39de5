// Restricted DOT reader: one undirected graph, node and edge statements
// (including chains), attribute lists, and graph-level attributes. Subgraphs,
// ports and HTML labels are rejected.

#include <cctype>
#include <charconv>
#include <cmath>
#include <map>
#include <set>
#include <string>
#include <vector>

#include <fmt/format.h>

#include "parsers.hpp"

namespace hyperlay::detail {

namespace {

enum class Tok { id, punct, edge_op, end };

struct Token {
  Tok kind = Tok::end;
  std::string text;
  std::size_t line = 0;
};

class Lexer {
 public:
  explicit Lexer(std::string_view src) : src_(src) {}

  Token next() {
    skip_space_and_comments();
    Token t;
    t.line = line_;
    if (pos_ >= src_.size()) return t;
    const char c = src_[pos_];
    if (c == '"') {
      t.kind = Tok::id;
      t.text = quoted();
      // "a" + "b" concatenation
      for (;;) {
        const std::size_t save = pos_, save_line = line_;
        skip_space_and_comments();
        if (pos_ < src_.size() && src_[pos_] == '+') {
          ++pos_;
          skip_space_and_comments();
          if (pos_ < src_.size() && src_[pos_] == '"') {
            t.text += quoted();
            continue;
          }
          throw ParseError(line_, "expected a string after '+'");
        }
        pos_ = save;
        line_ = save_line;
        break;
      }
      return t;
    }
    if (c == '-' && pos_ + 1 < src_.size() && (src_[pos_ + 1] == '-' || src_[pos_ + 1] == '>')) {
      if (src_[pos_ + 1] == '>') throw ParseError(line_, "directed edges are not supported");
      pos_ += 2;
      t.kind = Tok::edge_op;
      t.text = "--";
      return t;
    }
    if (std::string_view("{}[]=;,:").find(c) != std::string_view::npos) {
      ++pos_;
      t.kind = Tok::punct;
      t.text = std::string(1, c);
      return t;
    }
    if (c == '<') throw ParseError(line_, "HTML labels are not supported");
    if (is_id_char(c)) {
      const std::size_t start = pos_;
      while (pos_ < src_.size() && is_id_char(src_[pos_])) {
        // stop before an edge operator glued to the identifier
        if (src_[pos_] == '-' && pos_ + 1 < src_.size() && (src_[pos_ + 1] == '-' || src_[pos_ + 1] == '>') && pos_ > start) break;
        ++pos_;
      }
      t.kind = Tok::id;
      t.text = std::string(src_.substr(start, pos_ - start));
      return t;
    }
    throw ParseError(line_, fmt::format("unexpected character '{}'", c));
  }

 private:
  static bool is_id_char(char c) {
    return std::isalnum(static_cast<unsigned char>(c)) || c == '_' || c == '.' || c == '-' ||
           static_cast<unsigned char>(c) >= 0x80;
  }

  void skip_space_and_comments() {
    while (pos_ < src_.size()) {
      const char c = src_[pos_];
      if (c == '\n') {
        ++line_;
        ++pos_;
      } else if (std::isspace(static_cast<unsigned char>(c))) {
        ++pos_;
      } else if (c == '#' && at_line_start()) {
        while (pos_ < src_.size() && src_[pos_] != '\n') ++pos_;
      } else if (src_.substr(pos_, 2) == "//") {
        while (pos_ < src_.size() && src_[pos_] != '\n') ++pos_;
      } else if (src_.substr(pos_, 2) == "/*") {
        const std::size_t start_line = line_;
        pos_ += 2;
        while (pos_ < src_.size() && src_.substr(pos_, 2) != "*/") {
          if (src_[pos_] == '\n') ++line_;
          ++pos_;
        }
        if (pos_ >= src_.size()) throw ParseError(start_line, "unterminated comment");
        pos_ += 2;
      } else {
        break;
      }
    }
  }

  bool at_line_start() const {
    for (std::size_t i = pos_; i > 0; --i) {
      const char c = src_[i - 1];
      if (c == '\n') return true;
      if (!std::isspace(static_cast<unsigned char>(c))) return false;
    }
    return true;
  }

  std::string quoted() {
    const std::size_t start_line = line_;
    ++pos_;
    std::string out;
    while (pos_ < src_.size() && src_[pos_] != '"') {
      char c = src_[pos_++];
      if (c == '\\' && pos_ < src_.size()) {
        const char n = src_[pos_++];
        if (n == '\n') {  // line continuation
          ++line_;
          continue;
        }
        if (n != '"') out.push_back('\\');
        c = n;
      }
      if (c == '\n') ++line_;
      out.push_back(c);
    }
    if (pos_ >= src_.size()) throw ParseError(start_line, "unterminated string");
    ++pos_;
    return out;
  }

  std::string_view src_;
  std::size_t pos_ = 0;
  std::size_t line_ = 1;
};

using Attrs = std::vector<std::pair<std::string, std::string>>;

bool parse_double(std::string_view s, double& out) {
  while (!s.empty() && std::isspace(static_cast<unsigned char>(s.front()))) s.remove_prefix(1);
  while (!s.empty() && std::isspace(static_cast<unsigned char>(s.back()))) s.remove_suffix(1);
  const auto [ptr, ec] = std::from_chars(s.data(), s.data() + s.size(), out);
  return ec == std::errc{} && ptr == s.data() + s.size() && std::isfinite(out);
}

// "x,y" with an optional trailing '!' (pinned) as written by graphviz.
bool parse_point(std::string_view s, EuclideanPoint& p) {
  if (!s.empty() && s.back() == '!') s.remove_suffix(1);
  const auto comma = s.find(',');
  if (comma == std::string_view::npos) return false;
  std::string_view rest = s.substr(comma + 1);
  // graphviz allows a third (z) component; keep x and y only.
  if (const auto c2 = rest.find(','); c2 != std::string_view::npos) rest = rest.substr(0, c2);
  return parse_double(s.substr(0, comma), p.x) && parse_double(rest, p.y);
}

// cluster:color:x1,y1 x2,y2 ...;cluster:color:...
std::vector<GraphPolygon> parse_polygons(std::string_view s, std::size_t line) {
  std::vector<GraphPolygon> out;
  while (!s.empty()) {
    const auto semi = s.find(';');
    std::string_view item = s.substr(0, semi);
    s = semi == std::string_view::npos ? std::string_view{} : s.substr(semi + 1);
    while (!item.empty() && std::isspace(static_cast<unsigned char>(item.front()))) item.remove_prefix(1);
    if (item.empty()) continue;
    const auto c1 = item.find(':');
    const auto c2 = c1 == std::string_view::npos ? c1 : item.find(':', c1 + 1);
    if (c2 == std::string_view::npos) throw ParseError(line, "polygon must be 'cluster:color:x,y x,y ...'");
    GraphPolygon poly;
    const std::string_view cluster = item.substr(0, c1);
    const auto [ptr, ec] = std::from_chars(cluster.data(), cluster.data() + cluster.size(), poly.cluster);
    if (ec != std::errc{} || ptr != cluster.data() + cluster.size()) throw ParseError(line, "bad polygon cluster id");
    poly.color = std::string(item.substr(c1 + 1, c2 - c1 - 1));
    std::string_view pts = item.substr(c2 + 1);
    while (!pts.empty()) {
      while (!pts.empty() && std::isspace(static_cast<unsigned char>(pts.front()))) pts.remove_prefix(1);
      if (pts.empty()) break;
      std::size_t end = 0;
      while (end < pts.size() && !std::isspace(static_cast<unsigned char>(pts[end]))) ++end;
      EuclideanPoint p;
      if (!parse_point(pts.substr(0, end), p)) throw ParseError(line, "bad polygon vertex");
      poly.vertices.push_back(p);
      pts.remove_prefix(end);
    }
    if (poly.vertices.size() < 3) throw ParseError(line, "polygon needs at least 3 vertices");
    out.push_back(std::move(poly));
  }
  return out;
}

class DotParser {
 public:
  explicit DotParser(std::string_view text) : lex_(text) { advance(); }

  ParsedGraph run() {
    if (is_keyword("strict")) advance();
    if (is_keyword("digraph")) throw ParseError(cur_.line, "directed graphs are not supported");
    if (!is_keyword("graph")) throw ParseError(cur_.line, "expected 'graph'");
    advance();
    if (cur_.kind == Tok::id) advance();
    expect("{");
    while (!is_punct("}")) {
      if (cur_.kind == Tok::end) throw ParseError(cur_.line, "unexpected end of input, missing '}'");
      statement();
      if (is_punct(";") || is_punct(",")) advance();
    }
    advance();
    if (cur_.kind != Tok::end) throw ParseError(cur_.line, "trailing content after graph body");
    return finish();
  }

 private:
  struct NodeDraft {
    std::string name;
    std::string label;
    std::optional<int> cluster;
    std::optional<EuclideanPoint> position;
  };

  void advance() { cur_ = lex_.next(); }
  bool is_punct(std::string_view p) const { return cur_.kind == Tok::punct && cur_.text == p; }
  bool is_keyword(std::string_view k) const {
    if (cur_.kind != Tok::id || cur_.text.size() != k.size()) return false;
    for (std::size_t i = 0; i < k.size(); ++i)
      if (std::tolower(static_cast<unsigned char>(cur_.text[i])) != k[i]) return false;
    return true;
  }
  void expect(std::string_view p) {
    if (!is_punct(p)) throw ParseError(cur_.line, fmt::format("expected '{}'", p));
    advance();
  }

  void statement() {
    if (is_keyword("subgraph") || is_punct("{")) throw ParseError(cur_.line, "subgraphs are not supported");
    if (is_keyword("graph")) {
      const std::size_t line = cur_.line;
      advance();
      for (auto& [k, v] : attr_list()) graph_attribute(k, v, line);
      return;
    }
    if (is_keyword("node") || is_keyword("edge")) {
      advance();
      attr_list();  // defaults are not applied
      return;
    }
    if (cur_.kind != Tok::id) throw ParseError(cur_.line, fmt::format("unexpected '{}'", cur_.text));

    const std::size_t line = cur_.line;
    std::string first = cur_.text;
    advance();
    if (is_punct("=")) {
      advance();
      if (cur_.kind != Tok::id) throw ParseError(cur_.line, "expected a value after '='");
      graph_attribute(first, cur_.text, line);
      advance();
      return;
    }
    if (is_punct(":")) throw ParseError(cur_.line, "node ports are not supported");

    std::vector<std::string> chain{std::move(first)};
    while (cur_.kind == Tok::edge_op) {
      advance();
      if (is_keyword("subgraph") || is_punct("{")) throw ParseError(cur_.line, "subgraphs are not supported");
      if (cur_.kind != Tok::id) throw ParseError(cur_.line, "expected a node after '--'");
      chain.push_back(cur_.text);
      advance();
      if (is_punct(":")) throw ParseError(cur_.line, "node ports are not supported");
    }
    const Attrs attrs = is_punct("[") ? attr_list() : Attrs{};

    if (chain.size() == 1) {
      NodeId id = intern(chain[0]);
      for (const auto& [k, v] : attrs) node_attribute(nodes_[id], k, v, line);
      return;
    }

    double weight = 1.0;
    for (const auto& [k, v] : attrs) {
      if (k == "weight") {
        if (!parse_double(v, weight) || !(weight > 0.0)) throw ParseError(line, fmt::format("bad edge weight '{}'", v));
      } else {
        warn("edge", k);
      }
    }
    for (std::size_t i = 0; i + 1 < chain.size(); ++i) {
      const NodeId a = intern(chain[i]);
      const NodeId b = intern(chain[i + 1]);
      if (a == b) throw ParseError(line, fmt::format("self-loop at node '{}'", chain[i]));
      const auto key = std::minmax(a, b);
      if (!edge_keys_.insert(key).second) {
        warnings_.push_back(fmt::format("line {}: duplicate edge {} -- {} ignored", line, chain[i], chain[i + 1]));
        continue;
      }
      edges_.push_back({a, b, weight});
    }
  }

  Attrs attr_list() {
    Attrs out;
    if (!is_punct("[")) throw ParseError(cur_.line, "expected '['");
    while (is_punct("[")) {
      advance();
      while (!is_punct("]")) {
        if (cur_.kind != Tok::id) throw ParseError(cur_.line, "expected an attribute name");
        std::string key = cur_.text;
        advance();
        std::string value = "true";
        if (is_punct("=")) {
          advance();
          if (cur_.kind != Tok::id) throw ParseError(cur_.line, fmt::format("expected a value for '{}'", key));
          value = cur_.text;
          advance();
        }
        out.emplace_back(std::move(key), std::move(value));
        if (is_punct(",") || is_punct(";")) advance();
      }
      advance();
    }
    return out;
  }

  void graph_attribute(const std::string& key, const std::string& value, std::size_t line) {
    if (key == "polygons") {
      auto polys = parse_polygons(value, line);
      polygons_.insert(polygons_.end(), polys.begin(), polys.end());
    } else {
      warn("graph", key);
    }
  }

  void node_attribute(NodeDraft& node, const std::string& key, const std::string& value, std::size_t line) {
    if (key == "label") {
      node.label = value;
    } else if (key == "pos") {
      EuclideanPoint p;
      if (!parse_point(value, p)) throw ParseError(line, fmt::format("bad position '{}'", value));
      node.position = p;
    } else if (key == "cluster") {
      int c = 0;
      const auto [ptr, ec] = std::from_chars(value.data(), value.data() + value.size(), c);
      if (ec != std::errc{} || ptr != value.data() + value.size()) throw ParseError(line, fmt::format("bad cluster id '{}'", value));
      node.cluster = c;
    } else {
      warn("node", key);
    }
  }

  void warn(std::string_view scope, const std::string& key) {
    if (warned_.insert(fmt::format("{}:{}", scope, key)).second)
      warnings_.push_back(fmt::format("ignoring unknown {} attribute '{}'", scope, key));
  }

  NodeId intern(const std::string& name) {
    auto [it, inserted] = ids_.try_emplace(name, static_cast<NodeId>(nodes_.size()));
    if (inserted) nodes_.push_back({name, name, std::nullopt, std::nullopt});
    return it->second;
  }

  ParsedGraph finish() {
    if (nodes_.empty()) throw ParseError(0, "graph has no nodes");
    std::vector<Node> nodes;
    nodes.reserve(nodes_.size());
    bool any_pos = false, all_pos = true;
    for (std::size_t i = 0; i < nodes_.size(); ++i) {
      any_pos = any_pos || nodes_[i].position.has_value();
      all_pos = all_pos && nodes_[i].position.has_value();
      nodes.push_back({static_cast<NodeId>(i), nodes_[i].label, nodes_[i].cluster, nodes_[i].position});
    }
    if (any_pos && !all_pos) warnings_.push_back("some nodes have no 'pos'; positions ignored");
    if (!all_pos)
      for (auto& n : nodes) n.position.reset();

    ParsedGraph out{Graph(std::move(nodes), std::move(edges_), std::move(polygons_)), std::move(warnings_)};
    out.graph.require_connected();
    return out;
  }

  Lexer lex_;
  Token cur_;
  std::vector<NodeDraft> nodes_;
  std::map<std::string, NodeId> ids_;
  std::vector<Edge> edges_;
  std::set<std::pair<NodeId, NodeId>> edge_keys_;
  std::vector<GraphPolygon> polygons_;
  std::vector<std::string> warnings_;
  std::set<std::string> warned_;
};

}  // namespace

ParsedGraph parse_dot(std::string_view text) { return DotParser(text).run(); }

}  // namespace hyperlay::detail
