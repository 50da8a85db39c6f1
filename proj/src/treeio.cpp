#include "ted/treeio.hpp"

#include <json.hpp>

#include <stdexcept>
#include <utility>
#include <vector>

namespace ted {

namespace {

using nlohmann::json;

bool bare_label_char(char c) {
  return (c >= 'A' && c <= 'Z') || (c >= 'a' && c <= 'z') || (c >= '0' && c <= '9') || c == '_' ||
         c == '.' || c == '-';
}

[[noreturn]] void fail_at(const std::string& reason, size_t pos) {
  throw std::invalid_argument(reason + " at position " + std::to_string(pos + 1));
}

struct Cursor {
  std::string_view text;
  size_t pos = 0;

  void skip_ws() {
    while (pos < text.size() && (text[pos] == ' ' || text[pos] == '\t' || text[pos] == '\n' ||
                                 text[pos] == '\r'))
      ++pos;
  }
  bool done() const { return pos >= text.size(); }
  char peek() const { return text[pos]; }

  std::string read_label() {
    if (done()) fail_at("bad label", pos);
    if (peek() == '"') {
      const size_t open = pos++;
      std::string out;
      while (true) {
        if (done()) fail_at("unterminated quote", open);
        const char c = text[pos++];
        if (c == '"') break;
        if (c == '\\') {
          if (done()) fail_at("unterminated quote", open);
          out.push_back(text[pos++]);
        } else {
          out.push_back(c);
        }
      }
      if (out.empty()) fail_at("bad label", open);
      return out;
    }
    const size_t start = pos;
    while (!done() && bare_label_char(peek())) ++pos;
    if (pos == start) fail_at("bad label", start);
    return std::string(text.substr(start, pos - start));
  }
};

}  // namespace

Tree parse_bracket(std::string_view text) {
  Cursor cur{text};
  cur.skip_ws();
  if (cur.done()) throw std::invalid_argument("empty input");

  std::vector<TreeNode> nodes;
  // Stack of unfinished nodes paired with the position of their '('.
  std::vector<std::pair<int, size_t>> open;
  nodes.push_back(TreeNode{cur.read_label(), {}});
  int last = 0;
  while (true) {
    cur.skip_ws();
    if (cur.done()) break;
    const char c = cur.peek();
    if (c == '(') {
      open.emplace_back(last, cur.pos);
      ++cur.pos;
      cur.skip_ws();
      nodes.push_back(TreeNode{cur.read_label(), {}});
      last = static_cast<int>(nodes.size()) - 1;
      nodes[open.back().first].children.push_back(last);
    } else if (c == ',') {
      if (open.empty()) fail_at("trailing garbage", cur.pos);
      ++cur.pos;
      cur.skip_ws();
      nodes.push_back(TreeNode{cur.read_label(), {}});
      last = static_cast<int>(nodes.size()) - 1;
      nodes[open.back().first].children.push_back(last);
    } else if (c == ')') {
      if (open.empty()) fail_at("unbalanced ')'", cur.pos);
      last = open.back().first;
      open.pop_back();
      ++cur.pos;
    } else {
      fail_at("trailing garbage", cur.pos);
    }
  }
  if (!open.empty()) fail_at("unbalanced '('", open.back().second);
  return Tree(std::move(nodes), 0);
}

std::string emit_bracket(const Tree& t) {
  if (t.empty()) throw std::invalid_argument("empty tree has no bracket form");
  std::string out;
  const auto put_label = [&out](const std::string& label) {
    bool bare = !label.empty();
    for (char c : label) bare = bare && bare_label_char(c);
    if (bare) {
      out += label;
      return;
    }
    out.push_back('"');
    for (char c : label) {
      if (c == '"' || c == '\\') out.push_back('\\');
      out.push_back(c);
    }
    out.push_back('"');
  };
  // (node, next child position); emits '(' on first descent and ')' on exit.
  std::vector<std::pair<int, size_t>> stack{{t.root(), 0}};
  put_label(t.label(t.root()));
  while (!stack.empty()) {
    auto& [v, pos] = stack.back();
    const auto& ch = t.children(v);
    if (pos < ch.size()) {
      out.push_back(pos == 0 ? '(' : ',');
      const int c = ch[pos++];
      put_label(t.label(c));
      stack.emplace_back(c, 0);
    } else {
      if (!ch.empty()) out.push_back(')');
      stack.pop_back();
    }
  }
  return out;
}

namespace {

Tree dot_bracket_impl(std::string_view structure, const std::string_view* sequence) {
  if (sequence && sequence->size() != structure.size())
    throw std::invalid_argument("sequence length mismatch");
  std::vector<TreeNode> nodes{TreeNode{"root", {}}};
  std::vector<std::pair<int, size_t>> stack{{0, 0}};  // (node id, opening position)
  for (size_t i = 0; i < structure.size(); ++i) {
    const char c = structure[i];
    if (c == '(') {
      nodes.push_back(TreeNode{"pair", {}});
      const int id = static_cast<int>(nodes.size()) - 1;
      nodes[stack.back().first].children.push_back(id);
      stack.emplace_back(id, i);
    } else if (c == ')') {
      if (stack.size() == 1) fail_at("unbalanced ')'", i);
      const auto [id, open_pos] = stack.back();
      stack.pop_back();
      if (sequence)
        nodes[id].label =
            std::string(1, (*sequence)[open_pos]) + "-" + std::string(1, (*sequence)[i]);
    } else if (c == '.') {
      nodes.push_back(TreeNode{sequence ? std::string(1, (*sequence)[i]) : std::string("base"), {}});
      nodes[stack.back().first].children.push_back(static_cast<int>(nodes.size()) - 1);
    } else {
      fail_at("bad structure character", i);
    }
  }
  if (stack.size() > 1) fail_at("unbalanced '('", stack.back().second);
  return Tree(std::move(nodes), 0);
}

}  // namespace

Tree parse_dot_bracket(std::string_view structure) { return dot_bracket_impl(structure, nullptr); }

Tree parse_dot_bracket(std::string_view structure, std::string_view sequence) {
  return dot_bracket_impl(structure, &sequence);
}

namespace {

long long cost_entry(const json& j, const char* context) {
  if (!j.is_number_integer())
    throw std::invalid_argument(std::string("cost table: ") + context + " must be an integer");
  return j.get<long long>();
}

}  // namespace

CostTable load_cost_table(const std::string& json_text) {
  json doc;
  try {
    doc = json::parse(json_text);
  } catch (const json::exception& e) {
    throw std::invalid_argument(std::string("cost table parse error: ") + e.what());
  }
  if (!doc.is_object()) throw std::invalid_argument("cost table must be a JSON object");
  CostTable table;
  if (doc.contains("del_default")) table.del_default = cost_entry(doc["del_default"], "del_default");
  if (doc.contains("rel_default_eq"))
    table.rel_default_eq = cost_entry(doc["rel_default_eq"], "rel_default_eq");
  if (doc.contains("rel_default_neq"))
    table.rel_default_neq = cost_entry(doc["rel_default_neq"], "rel_default_neq");
  if (doc.contains("del")) {
    if (!doc["del"].is_object()) throw std::invalid_argument("cost table: del must be an object");
    for (const auto& [label, value] : doc["del"].items())
      table.del_overrides[label] = cost_entry(value, "del entry");
  }
  if (doc.contains("rel")) {
    if (!doc["rel"].is_object()) throw std::invalid_argument("cost table: rel must be an object");
    for (const auto& [key, value] : doc["rel"].items()) {
      const auto sep = key.find('|');
      if (sep == std::string::npos)
        throw std::invalid_argument("cost table: rel key must look like \"from|to\"");
      table.rel_overrides[{key.substr(0, sep), key.substr(sep + 1)}] =
          cost_entry(value, "rel entry");
    }
  }
  return table;
}

Tree parse_tree_json(const std::string& json_text) {
  json doc;
  try {
    doc = json::parse(json_text);
  } catch (const json::exception& e) {
    throw std::invalid_argument(std::string("tree parse error: ") + e.what());
  }
  std::vector<TreeNode> nodes;
  // (document node, id assigned to it); children are expanded iteratively.
  std::vector<std::pair<const json*, int>> stack;
  const auto enter = [&](const json& j) {
    if (!j.is_object() || !j.contains("label") || !j["label"].is_string())
      throw std::invalid_argument("tree node must be an object with a string label");
    nodes.push_back(TreeNode{j["label"].get<std::string>(), {}});
    stack.emplace_back(&j, static_cast<int>(nodes.size()) - 1);
  };
  enter(doc);
  size_t next = 0;
  while (next < stack.size()) {
    const auto [j, id] = stack[next++];
    if (!j->contains("children")) continue;
    const json& ch = (*j)["children"];
    if (!ch.is_array()) throw std::invalid_argument("children must be an array");
    for (const json& c : ch) {
      enter(c);
      nodes[id].children.push_back(stack.back().second);
    }
  }
  return Tree(std::move(nodes), 0);
}

Tree parse_tree_auto(const std::string& text) {
  for (char c : text) {
    if (c == ' ' || c == '\t' || c == '\n' || c == '\r') continue;
    if (c == '{') return parse_tree_json(text);
    break;
  }
  return parse_bracket(text);
}

}  // namespace ted
