#include "artinsigma_cli/report_text.hpp"

#include <sstream>
#include <vector>

#include <artinsigma/errors.hpp>

namespace artinsigma::cli {

namespace {

bool inline_value(const Json& v) {
  if (!v.is_structured() || v.empty()) return true;
  if (!v.is_array()) return false;
  for (const auto& x : v)
    if (x.is_structured()) return false;
  return true;
}

bool plain_key(const std::string& k) {
  if (k.empty() || k[0] == '-') return false;
  for (char c : k) {
    bool ok = (c >= 'a' && c <= 'z') || (c >= 'A' && c <= 'Z') || (c >= '0' && c <= '9') || c == '_' ||
              c == '-' || c == '.';
    if (!ok) return false;
  }
  return true;
}

void render(const Json& v, int indent, std::ostringstream& out);

void render_entry(const std::string& head, const Json& v, int indent, std::ostringstream& out) {
  out << std::string(static_cast<std::size_t>(indent), ' ') << head;
  if (inline_value(v)) {
    out << ' ' << v.dump() << '\n';
  } else {
    out << '\n';
    render(v, indent + 2, out);
  }
}

void render(const Json& v, int indent, std::ostringstream& out) {
  if (v.is_object()) {
    for (auto it = v.begin(); it != v.end(); ++it) {
      std::string key = plain_key(it.key()) ? it.key() : Json(it.key()).dump();
      render_entry(key + ":", it.value(), indent, out);
    }
  } else {
    for (const auto& x : v) render_entry("-", x, indent, out);
  }
}

struct Line {
  int indent;
  std::string text;
  std::size_t number;
};

class Parser {
 public:
  explicit Parser(std::vector<Line> lines) : lines_(std::move(lines)) {}

  Json parse_document() {
    Json doc = Json::object();
    if (!lines_.empty()) doc = parse_block(lines_.front().indent);
    if (pos_ != lines_.size()) fail("unexpected indentation");
    return doc;
  }

 private:
  [[noreturn]] void fail(const std::string& what) const {
    std::size_t n = pos_ < lines_.size() ? lines_[pos_].number : lines_.size();
    throw InputError("report text line " + std::to_string(n) + ": " + what);
  }

  Json parse_scalar(const std::string& text) const {
    try {
      return Json::parse(text);
    } catch (const nlohmann::json::parse_error&) {
      fail("invalid inline value");
    }
  }

  // Value after a header: inline text, or the nested block that follows.
  Json parse_value(const std::string& rest, int indent) {
    ++pos_;
    if (!rest.empty()) return parse_scalar(rest);
    if (pos_ >= lines_.size() || lines_[pos_].indent <= indent) fail("missing nested block");
    return parse_block(lines_[pos_].indent);
  }

  Json parse_block(int indent) {
    const bool array = lines_[pos_].text.rfind("-", 0) == 0;
    Json out = array ? Json::array() : Json::object();
    while (pos_ < lines_.size() && lines_[pos_].indent == indent) {
      const std::string& t = lines_[pos_].text;
      if (array) {
        if (t != "-" && t.rfind("- ", 0) != 0) fail("expected array element");
        out.push_back(parse_value(t.size() > 2 ? t.substr(2) : "", indent));
        continue;
      }
      std::string key;
      std::size_t colon;
      if (!t.empty() && t[0] == '"') {
        std::size_t end = 1;
        while (end < t.size() && t[end] != '"') end += t[end] == '\\' ? 2 : 1;
        if (end >= t.size()) fail("unterminated key");
        key = parse_scalar(t.substr(0, end + 1)).get<std::string>();
        colon = end + 1;
      } else {
        colon = t.find(':');
        if (colon == std::string::npos) fail("expected 'key:'");
        key = t.substr(0, colon);
      }
      if (colon >= t.size() || t[colon] != ':') fail("expected ':' after key");
      std::string rest = colon + 1 < t.size() ? t.substr(colon + 1) : "";
      if (!rest.empty() && rest[0] == ' ') rest.erase(0, 1);
      out[key] = parse_value(rest, indent);
    }
    if (pos_ < lines_.size() && lines_[pos_].indent > indent) fail("unexpected indentation");
    return out;
  }

  std::vector<Line> lines_;
  std::size_t pos_ = 0;
};

}  // namespace

std::string render_text(const Json& doc) {
  if (!doc.is_object()) throw InputError("render_text expects an object");
  std::ostringstream out;
  render(doc, 0, out);
  return out.str();
}

Json parse_text(std::string_view text) {
  std::vector<Line> lines;
  std::size_t number = 0;
  std::size_t start = 0;
  while (start <= text.size()) {
    std::size_t end = text.find('\n', start);
    if (end == std::string_view::npos) end = text.size();
    std::string_view raw = text.substr(start, end - start);
    ++number;
    std::size_t indent = raw.find_first_not_of(' ');
    if (indent != std::string_view::npos) {
      lines.push_back({static_cast<int>(indent), std::string(raw.substr(indent)), number});
    }
    start = end + 1;
  }
  return Parser(std::move(lines)).parse_document();
}

}  // namespace artinsigma::cli
