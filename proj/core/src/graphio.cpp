#include "dualgraph/graphio.hpp"

#include <algorithm>
#include <cctype>
#include <fstream>
#include <map>
#include <sstream>

#include <nlohmann/json.hpp>

#include "dualgraph/errors.hpp"

namespace dualgraph {

namespace {

using nlohmann::json;

struct Token {
  std::string text;
  int line;
  int column;
};

[[noreturn]] void fail_at(int line, int column, const std::string& message) {
  throw InputError("line " + std::to_string(line) + ", column " + std::to_string(column) + ": " +
                   message);
}

bool valid_name(std::string_view s) {
  if (s.empty()) return false;
  for (char c : s)
    if (!(std::isalnum(static_cast<unsigned char>(c)) || c == '_' || c == '.' || c == '+' ||
          c == '-'))
      return false;
  return true;
}

Coeff parse_integer(const Token& t, const std::string& value) {
  std::size_t pos = 0;
  Coeff result = 0;
  try {
    result = std::stoll(value, &pos);
  } catch (const std::exception&) {
    fail_at(t.line, t.column, "expected an integer, got '" + value + "'");
  }
  if (pos != value.size()) fail_at(t.line, t.column, "trailing characters in integer '" + value + "'");
  return result;
}

// Statements are token runs separated by newlines or ';'. '#' starts a comment.
std::vector<std::vector<Token>> tokenize(std::string_view text) {
  std::vector<std::vector<Token>> statements;
  std::vector<Token> current;
  int line = 1, column = 1;
  std::string word;
  int word_line = 1, word_column = 1;
  bool in_comment = false;

  auto flush_word = [&] {
    if (!word.empty()) {
      current.push_back({word, word_line, word_column});
      word.clear();
    }
  };
  auto flush_statement = [&] {
    flush_word();
    if (!current.empty()) statements.push_back(std::move(current));
    current.clear();
  };

  for (char c : text) {
    if (c == '\n') {
      flush_statement();
      in_comment = false;
      ++line;
      column = 1;
      continue;
    }
    if (in_comment) {
      ++column;
      continue;
    }
    if (c == '#') {
      flush_statement();
      in_comment = true;
    } else if (c == ';') {
      flush_statement();
    } else if (std::isspace(static_cast<unsigned char>(c))) {
      flush_word();
    } else {
      if (word.empty()) {
        word_line = line;
        word_column = column;
      }
      word.push_back(c);
    }
    ++column;
  }
  flush_statement();
  return statements;
}

WeightedDualGraph parse_text(std::string_view text, const ParseOptions& options) {
  const auto statements = tokenize(text);
  if (statements.empty()) fail_at(1, 1, "syntax error: empty graph description");

  std::vector<VertexData> vertices;
  std::vector<std::string> names;
  std::map<std::string, int> index;
  std::vector<EdgeData> edges;

  auto key_value = [&](const Token& t) -> std::pair<std::string, std::string> {
    const auto eq = t.text.find('=');
    if (eq == std::string::npos || eq == 0 || eq + 1 == t.text.size())
      fail_at(t.line, t.column, "expected key=value, got '" + t.text + "'");
    return {t.text.substr(0, eq), t.text.substr(eq + 1)};
  };

  for (const auto& stmt : statements) {
    const Token& head = stmt[0];
    if (head.text == "vertex") {
      if (stmt.size() < 2) fail_at(head.line, head.column, "vertex needs a name");
      const Token& name = stmt[1];
      if (!valid_name(name.text))
        fail_at(name.line, name.column, "invalid vertex name '" + name.text + "'");
      if (index.count(name.text))
        fail_at(name.line, name.column, "duplicate vertex '" + name.text + "'");
      VertexData v;
      bool have_weight = false;
      bool have_genus = false, have_conductor = false;
      for (std::size_t i = 2; i < stmt.size(); ++i) {
        auto [key, value] = key_value(stmt[i]);
        if (key == "weight") {
          if (have_weight) fail_at(stmt[i].line, stmt[i].column, "weight given twice");
          v.weight = parse_integer(stmt[i], value);
          have_weight = true;
        } else if (key == "genus") {
          if (have_genus) fail_at(stmt[i].line, stmt[i].column, "genus given twice");
          v.genus = parse_integer(stmt[i], value);
          have_genus = true;
        } else if (key == "conductor") {
          if (have_conductor) fail_at(stmt[i].line, stmt[i].column, "conductor given twice");
          v.conductor = parse_integer(stmt[i], value);
          have_conductor = true;
        } else {
          fail_at(stmt[i].line, stmt[i].column, "unknown key '" + key + "'");
        }
      }
      if (!have_weight) fail_at(head.line, head.column, "vertex '" + name.text + "' needs weight=");
      index[name.text] = static_cast<int>(vertices.size());
      vertices.push_back(v);
      names.push_back(name.text);
    } else if (head.text == "edge") {
      if (stmt.size() < 3) fail_at(head.line, head.column, "edge needs two vertex names");
      EdgeData e;
      for (int k = 0; k < 2; ++k) {
        const Token& t = stmt[1 + k];
        auto it = index.find(t.text);
        if (it == index.end()) fail_at(t.line, t.column, "unknown vertex '" + t.text + "'");
        (k == 0 ? e.a : e.b) = it->second;
      }
      for (std::size_t i = 3; i < stmt.size(); ++i) {
        auto [key, value] = key_value(stmt[i]);
        if (key == "mult")
          e.multiplicity = parse_integer(stmt[i], value);
        else
          fail_at(stmt[i].line, stmt[i].column, "unknown key '" + key + "'");
      }
      edges.push_back(e);
    } else {
      fail_at(head.line, head.column, "expected 'vertex' or 'edge', got '" + head.text + "'");
    }
  }

  return WeightedDualGraph(std::move(vertices), std::move(edges), std::move(names),
                           {.require_negative_definite = options.require_negative_definite});
}

[[noreturn]] void fail_json(const std::string& message) {
  throw InputError("json graph: " + message);
}

void require_keys(const json& object, std::initializer_list<const char*> allowed,
                  const std::string& where) {
  for (const auto& [key, value] : object.items()) {
    if (std::find_if(allowed.begin(), allowed.end(),
                     [&](const char* k) { return key == k; }) == allowed.end())
      fail_json("unknown key '" + key + "' in " + where);
  }
}

Coeff integer_field(const json& object, const char* key, const std::string& where,
                    std::optional<Coeff> fallback = std::nullopt) {
  if (!object.contains(key)) {
    if (fallback) return *fallback;
    fail_json("missing key '" + std::string(key) + "' in " + where);
  }
  const json& v = object.at(key);
  if (!v.is_number_integer()) fail_json("key '" + std::string(key) + "' in " + where +
                                        " must be an integer");
  return v.get<Coeff>();
}

WeightedDualGraph parse_json_graph(std::string_view text, const ParseOptions& options) {
  json doc;
  try {
    doc = json::parse(text);
  } catch (const json::parse_error& e) {
    throw InputError("json graph: " + std::string(e.what()));
  }
  if (!doc.is_object()) fail_json("top level must be an object");
  require_keys(doc, {"vertices", "edges"}, "the top-level object");
  if (!doc.contains("vertices") || !doc["vertices"].is_array())
    fail_json("'vertices' must be an array");

  std::vector<VertexData> vertices;
  std::vector<std::string> names;
  std::map<std::string, int> index;
  for (const json& v : doc["vertices"]) {
    if (!v.is_object()) fail_json("each vertex must be an object");
    require_keys(v, {"name", "weight", "genus", "conductor"}, "a vertex object");
    if (!v.contains("name") || !v["name"].is_string()) fail_json("vertex needs a string 'name'");
    const std::string name = v["name"].get<std::string>();
    if (!valid_name(name)) fail_json("invalid vertex name '" + name + "'");
    if (index.count(name)) fail_json("duplicate vertex '" + name + "'");
    VertexData data;
    data.weight = integer_field(v, "weight", "vertex '" + name + "'");
    data.genus = integer_field(v, "genus", "vertex '" + name + "'", 0);
    data.conductor = integer_field(v, "conductor", "vertex '" + name + "'", 0);
    index[name] = static_cast<int>(vertices.size());
    vertices.push_back(data);
    names.push_back(name);
  }

  std::vector<EdgeData> edges;
  if (doc.contains("edges")) {
    if (!doc["edges"].is_array()) fail_json("'edges' must be an array");
    for (const json& e : doc["edges"]) {
      if (!e.is_object()) fail_json("each edge must be an object");
      require_keys(e, {"from", "to", "mult"}, "an edge object");
      EdgeData data;
      for (const char* key : {"from", "to"}) {
        if (!e.contains(key) || !e.at(key).is_string())
          fail_json(std::string("edge needs a string '") + key + "'");
        const std::string name = e.at(key).get<std::string>();
        auto it = index.find(name);
        if (it == index.end()) fail_json("unknown vertex '" + name + "' in an edge");
        (std::string(key) == "from" ? data.a : data.b) = it->second;
      }
      data.multiplicity = integer_field(e, "mult", "an edge object", 1);
      edges.push_back(data);
    }
  }

  return WeightedDualGraph(std::move(vertices), std::move(edges), std::move(names),
                           {.require_negative_definite = options.require_negative_definite});
}

}  // namespace

WeightedDualGraph parse_graph(std::string_view text, ParseOptions options) {
  for (char c : text) {
    if (std::isspace(static_cast<unsigned char>(c))) continue;
    if (c == '{') return parse_json_graph(text, options);
    break;
  }
  return parse_text(text, options);
}

WeightedDualGraph parse_graph_file(const std::string& path, ParseOptions options) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw InputError("cannot open '" + path + "'");
  std::ostringstream buffer;
  buffer << in.rdbuf();
  return parse_graph(buffer.str(), options);
}

std::string serialize_text(const WeightedDualGraph& g) {
  std::ostringstream os;
  for (int i = 0; i < g.size(); ++i) {
    if (!valid_name(g.name(i))) throw InputError("vertex name '" + g.name(i) + "' is not writable");
    os << "vertex " << g.name(i) << " weight=" << g.weight(i);
    if (g.vertex(i).genus != 0) os << " genus=" << g.vertex(i).genus;
    if (g.vertex(i).conductor != 0) os << " conductor=" << g.vertex(i).conductor;
    os << "\n";
  }
  for (const EdgeData& e : g.edges()) {
    os << "edge " << g.name(e.a) << " " << g.name(e.b);
    if (e.multiplicity != 1) os << " mult=" << e.multiplicity;
    os << "\n";
  }
  return os.str();
}

std::string serialize_json(const WeightedDualGraph& g) {
  json doc;
  doc["vertices"] = json::array();
  for (int i = 0; i < g.size(); ++i)
    doc["vertices"].push_back({{"name", g.name(i)},
                               {"weight", g.weight(i)},
                               {"genus", g.vertex(i).genus},
                               {"conductor", g.vertex(i).conductor}});
  doc["edges"] = json::array();
  for (const EdgeData& e : g.edges())
    doc["edges"].push_back(
        {{"from", g.name(e.a)}, {"to", g.name(e.b)}, {"mult", e.multiplicity}});
  return doc.dump(2) + "\n";
}

std::string to_dot(const WeightedDualGraph& g) {
  std::ostringstream os;
  os << "graph dual {\n";
  os << "  node [shape=circle];\n";
  for (int i = 0; i < g.size(); ++i) {
    os << "  \"" << g.name(i) << "\" [label=\"" << g.name(i) << "\\n" << g.weight(i);
    if (g.vertex(i).genus != 0) os << " g=" << g.vertex(i).genus;
    if (g.vertex(i).conductor != 0) os << " d=" << g.vertex(i).conductor;
    os << "\"];\n";
  }
  for (const EdgeData& e : g.edges()) {
    os << "  \"" << g.name(e.a) << "\" -- \"" << g.name(e.b) << "\"";
    if (e.multiplicity != 1) os << " [label=\"" << e.multiplicity << "\"]";
    os << ";\n";
  }
  os << "}\n";
  return os.str();
}

}  // namespace dualgraph
