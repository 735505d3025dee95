#include "torsionlab/spec_format.hpp"

#include <cctype>
#include <charconv>
#include <map>
#include <vector>

#include "torsionlab/error.hpp"

namespace torsionlab {

namespace {

struct Token {
  std::string text;
  std::size_t column = 0;  // 1-based
};

std::vector<Token> tokenize(std::string_view line) {
  std::vector<Token> out;
  std::size_t i = 0;
  while (i < line.size()) {
    const char c = line[i];
    if (c == '#') break;
    if (std::isspace(static_cast<unsigned char>(c))) {
      ++i;
      continue;
    }
    if (c == ':') {
      out.push_back({":", i + 1});
      ++i;
      continue;
    }
    if (c == '-' && i + 1 < line.size() && line[i + 1] == '>') {
      out.push_back({"->", i + 1});
      i += 2;
      continue;
    }
    const std::size_t start = i;
    while (i < line.size() && !std::isspace(static_cast<unsigned char>(line[i])) && line[i] != ':' &&
           line[i] != '#' && !(line[i] == '-' && i + 1 < line.size() && line[i + 1] == '>')) {
      ++i;
    }
    out.push_back({std::string(line.substr(start, i - start)), start + 1});
  }
  return out;
}

class Parser {
 public:
  AlgebraSpec run(std::string_view text) {
    std::size_t line_no = 0;
    std::size_t pos = 0;
    while (pos <= text.size()) {
      std::size_t end = text.find('\n', pos);
      if (end == std::string_view::npos) end = text.size();
      std::string_view line = text.substr(pos, end - pos);
      if (!line.empty() && line.back() == '\r') line.remove_suffix(1);
      ++line_no;
      line_ = line_no;
      statement(tokenize(line), line.size());
      pos = end + 1;
    }
    if (spec_.presentation.vertices.empty()) {
      throw ParseError(ErrorCode::SyntaxError, 1, 1, "no vertices declared");
    }
    if (!field_seen_) spec_.presentation.field = Field::prime(2);
    return spec_;
  }

 private:
  [[noreturn]] void fail(ErrorCode code, std::size_t column, const std::string& msg) const {
    throw ParseError(code, line_, column, msg);
  }

  std::size_t number(const Token& t, const char* what) const {
    std::size_t value = 0;
    auto [p, ec] = std::from_chars(t.text.data(), t.text.data() + t.text.size(), value);
    if (ec != std::errc{} || p != t.text.data() + t.text.size()) {
      fail(ErrorCode::SyntaxError, t.column, std::string("expected ") + what + ", got '" + t.text + "'");
    }
    return value;
  }

  void expect_name(const Token& t) const {
    if (t.text == ":" || t.text == "->") {
      fail(ErrorCode::SyntaxError, t.column, "expected a name, got '" + t.text + "'");
    }
  }

  void statement(const std::vector<Token>& tok, std::size_t line_length) {
    if (tok.empty()) return;
    const std::string& kw = tok[0].text;
    auto missing = [&](const char* what) {
      fail(ErrorCode::SyntaxError, line_length + 1, std::string("expected ") + what);
    };
    if (kw == "field") {
      if (tok.size() < 2) missing("a characteristic");
      if (tok.size() > 2) fail(ErrorCode::SyntaxError, tok[2].column, "unexpected token");
      if (field_seen_) fail(ErrorCode::SyntaxError, tok[0].column, "field declared twice");
      const std::size_t p = number(tok[1], "a characteristic");
      if (p != 0 && !is_prime(static_cast<std::int64_t>(p))) {
        fail(ErrorCode::NonPrimeCharacteristic, tok[1].column, tok[1].text + " is not prime");
      }
      try {
        spec_.presentation.field = Field::with_characteristic(static_cast<std::int64_t>(p));
      } catch (const Error& e) {
        fail(e.code(), tok[1].column, e.what());
      }
      field_seen_ = true;
    } else if (kw == "vertex") {
      if (tok.size() < 2) missing("a vertex name");
      for (std::size_t i = 1; i < tok.size(); ++i) {
        expect_name(tok[i]);
        if (vertices_.count(tok[i].text)) {
          fail(ErrorCode::DuplicateName, tok[i].column, "vertex '" + tok[i].text + "' declared twice");
        }
        vertices_[tok[i].text] = spec_.presentation.vertices.size();
        spec_.presentation.vertices.push_back(tok[i].text);
      }
    } else if (kw == "arrow") {
      // arrow NAME : SRC -> TGT
      if (tok.size() < 6) missing("'arrow NAME: SOURCE -> TARGET'");
      expect_name(tok[1]);
      if (tok[2].text != ":") fail(ErrorCode::SyntaxError, tok[2].column, "expected ':'");
      expect_name(tok[3]);
      if (tok[4].text != "->") fail(ErrorCode::SyntaxError, tok[4].column, "expected '->'");
      expect_name(tok[5]);
      if (tok.size() > 6) fail(ErrorCode::SyntaxError, tok[6].column, "unexpected token");
      if (arrows_.count(tok[1].text)) {
        fail(ErrorCode::DuplicateName, tok[1].column, "arrow '" + tok[1].text + "' declared twice");
      }
      const std::size_t s = vertex(tok[3]);
      const std::size_t t = vertex(tok[5]);
      arrows_[tok[1].text] = spec_.presentation.arrows.size();
      spec_.presentation.arrows.push_back({tok[1].text, s, t});
    } else if (kw == "relation") {
      if (tok.size() < 3) missing("a path of at least two arrows");
      std::vector<std::size_t> path;
      for (std::size_t i = 1; i < tok.size(); ++i) {
        expect_name(tok[i]);
        auto it = arrows_.find(tok[i].text);
        if (it == arrows_.end()) {
          fail(ErrorCode::UnknownArrow, tok[i].column, "unknown arrow '" + tok[i].text + "'");
        }
        if (!path.empty()) {
          const Arrow& prev = spec_.presentation.arrows[path.back()];
          if (prev.target != spec_.presentation.arrows[it->second].source) {
            fail(ErrorCode::NonComposablePath, tok[i].column,
                 "arrow '" + tok[i].text + "' does not start where '" + prev.name + "' ends");
          }
        }
        path.push_back(it->second);
      }
      spec_.presentation.relations.push_back(std::move(path));
    } else if (kw == "bound") {
      if (tok.size() < 3) missing("'bound nodes N' or 'bound dim N'");
      if (tok.size() > 3) fail(ErrorCode::SyntaxError, tok[3].column, "unexpected token");
      const std::size_t value = number(tok[2], "a positive integer");
      if (value == 0) fail(ErrorCode::SyntaxError, tok[2].column, "bound must be positive");
      if (tok[1].text == "nodes") {
        spec_.node_bound = value;
      } else if (tok[1].text == "dim") {
        spec_.dim_bound = value;
      } else {
        fail(ErrorCode::SyntaxError, tok[1].column, "unknown bound '" + tok[1].text + "'");
      }
    } else {
      fail(ErrorCode::SyntaxError, tok[0].column, "unknown keyword '" + kw + "'");
    }
  }

  std::size_t vertex(const Token& t) const {
    auto it = vertices_.find(t.text);
    if (it == vertices_.end()) fail(ErrorCode::UnknownVertex, t.column, "unknown vertex '" + t.text + "'");
    return it->second;
  }

  AlgebraSpec spec_;
  std::map<std::string, std::size_t> vertices_;
  std::map<std::string, std::size_t> arrows_;
  std::size_t line_ = 0;
  bool field_seen_ = false;
};

}  // namespace

AlgebraSpec parse_algebra_spec(std::string_view text) { return Parser{}.run(text); }

std::string serialize(const BoundQuiverPresentation& p) {
  std::string out = "field " + std::to_string(p.field.characteristic()) + "\n";
  out += "vertex";
  for (const auto& v : p.vertices) out += " " + v;
  out += "\n";
  for (const auto& a : p.arrows) {
    out += "arrow " + a.name + ": " + p.vertices[a.source] + " -> " + p.vertices[a.target] + "\n";
  }
  for (const auto& r : p.relations) {
    out += "relation";
    for (std::size_t a : r) out += " " + p.arrows[a].name;
    out += "\n";
  }
  return out;
}

std::string serialize(const AlgebraSpec& spec) {
  std::string out = serialize(spec.presentation);
  if (spec.node_bound) out += "bound nodes " + std::to_string(*spec.node_bound) + "\n";
  if (spec.dim_bound) out += "bound dim " + std::to_string(*spec.dim_bound) + "\n";
  return out;
}

}  // namespace torsionlab
