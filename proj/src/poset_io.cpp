#include "tors/poset_io.hpp"

#include <fstream>
#include <sstream>

#include <json.hpp>

#include "tors/error.hpp"

namespace tors {

using nlohmann::json;

std::string to_json(const Poset& p) {
  json j;
  j["elements"] = json::array();
  for (const auto& e : p.elements()) j["elements"].push_back({{"id", e.id}, {"label", e.label}});
  j["covers"] = json::array();
  for (auto [a, b] : p.covers()) j["covers"].push_back({p.id(a), p.id(b)});
  return j.dump(2) + "\n";
}

Poset poset_from_json(const std::string& text, const Caps& caps) {
  json j;
  try {
    j = json::parse(text);
  } catch (const json::exception& e) {
    fail(ErrorCode::ParseError, std::string("poset json: ") + e.what());
  }
  try {
    std::vector<Element> els;
    for (const auto& e : j.at("elements")) {
      Element el{e.at("id").get<std::string>(), ""};
      el.label = e.contains("label") ? e.at("label").get<std::string>() : el.id;
      els.push_back(std::move(el));
    }
    std::vector<std::pair<std::string, std::string>> pairs;
    if (j.contains("covers"))
      for (const auto& c : j.at("covers")) {
        if (!c.is_array() || c.size() != 2) fail(ErrorCode::ParseError, "poset json: a cover must be a pair");
        // [bigger, smaller] means smaller <= bigger
        pairs.emplace_back(c[1].get<std::string>(), c[0].get<std::string>());
      }
    return Poset::from_relations(std::move(els), pairs, caps);
  } catch (const json::exception& e) {
    fail(ErrorCode::ParseError, std::string("poset json: ") + e.what());
  }
}

std::string read_text_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) fail(ErrorCode::ParseError, "cannot open '" + path + "'");
  std::ostringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

Poset read_poset_file(const std::string& path, const Caps& caps) { return poset_from_json(read_text_file(path), caps); }

namespace {

std::string dot_quote(const std::string& s) {
  std::string out = "\"";
  for (char c : s) {
    if (c == '"' || c == '\\') out += '\\';
    out += c;
  }
  return out + "\"";
}

}  // namespace

std::string to_dot(const Poset& p, const std::string& name) {
  std::ostringstream os;
  os << "digraph " << dot_quote(name) << " {\n";
  for (std::size_t i = 0; i < p.size(); ++i)
    os << "  n" << i << " [label=" << dot_quote(p.label(i)) << "];\n";
  for (auto [a, b] : p.covers()) os << "  n" << a << " -> n" << b << ";\n";
  os << "}\n";
  return os.str();
}

std::string summary(const Poset& p) {
  std::ostringstream os;
  os << "elements " << p.size() << "\n";
  os << "covers " << p.covers().size() << "\n";
  auto t = p.top();
  auto b = p.bottom();
  os << "top " << (t ? p.label(*t) : std::string("-")) << "\n";
  os << "bottom " << (b ? p.label(*b) : std::string("-")) << "\n";
  return os.str();
}

std::string render(const Poset& p, OutputFormat format, const std::string& name) {
  switch (format) {
    case OutputFormat::Json: return to_json(p);
    case OutputFormat::Dot: return to_dot(p, name);
    case OutputFormat::Summary: return summary(p);
  }
  return summary(p);
}

}  // namespace tors
