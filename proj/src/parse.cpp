#include "quotsing/parse.hpp"

#include <yaml-cpp/yaml.h>

#include <cctype>
#include <charconv>
#include <filesystem>
#include <limits>
#include <fstream>
#include <sstream>

#include "quotsing/error.hpp"

namespace quotsing {

namespace {

class Cursor {
 public:
  explicit Cursor(std::string_view text) : text_(text) {}

  void skip_space() {
    while (pos_ < text_.size() && std::isspace(static_cast<unsigned char>(text_[pos_]))) ++pos_;
  }
  bool done() {
    skip_space();
    return pos_ >= text_.size();
  }
  bool accept(char c) {
    skip_space();
    if (pos_ < text_.size() && text_[pos_] == c) {
      ++pos_;
      return true;
    }
    return false;
  }
  void expect(char c) {
    if (!accept(c)) fail(std::string("expected '") + c + "'");
  }
  std::int64_t integer() {
    skip_space();
    std::int64_t value = 0;
    const char* begin = text_.data() + pos_;
    const char* end = text_.data() + text_.size();
    if (begin != end && *begin == '+') ++begin;
    const auto [ptr, ec] = std::from_chars(begin, end, value);
    if (ec != std::errc{}) fail("expected an integer");
    pos_ = static_cast<std::size_t>(ptr - text_.data());
    return value;
  }
  [[noreturn]] void fail(const std::string& what) const {
    throw Error(ErrorCode::Syntax,
                "column " + std::to_string(pos_ + 1) + ": " + what + " in \"" + std::string(text_) + "\"");
  }

 private:
  std::string_view text_;
  std::size_t pos_ = 0;
};

std::string_view trim(std::string_view text) {
  while (!text.empty() && std::isspace(static_cast<unsigned char>(text.front()))) text.remove_prefix(1);
  while (!text.empty() && std::isspace(static_cast<unsigned char>(text.back()))) text.remove_suffix(1);
  return text;
}

std::string where(const YAML::Node& node) {
  const auto mark = node.Mark();
  if (mark.is_null()) return "document";
  return "line " + std::to_string(mark.line + 1) + ", column " + std::to_string(mark.column + 1);
}

std::int64_t as_integer(const YAML::Node& node, const std::string& field) {
  if (!node.IsScalar()) {
    throw Error(ErrorCode::Syntax, where(node) + ": field '" + field + "' must be an integer");
  }
  try {
    return node.as<std::int64_t>();
  } catch (const YAML::Exception&) {
    throw Error(ErrorCode::Syntax, where(node) + ": field '" + field + "' must be an integer, got '" +
                                       node.Scalar() + "'");
  }
}

// {n:3} is a single plain scalar in YAML flow style; give every ':' inside
// brackets a following space. The schema has no string values to corrupt.
std::string space_flow_colons(std::string_view text) {
  std::string out;
  out.reserve(text.size() + 16);
  int depth = 0;
  for (std::size_t i = 0; i < text.size(); ++i) {
    const char c = text[i];
    if (c == '{' || c == '[') ++depth;
    if (c == '}' || c == ']') --depth;
    out.push_back(c);
    if (c == ':' && depth > 0 && i + 1 < text.size() &&
        !std::isspace(static_cast<unsigned char>(text[i + 1]))) {
      out.push_back(' ');
    }
  }
  return out;
}

}  // namespace

DiagonalAction parse_shorthand(std::string_view text) {
  Cursor in(text);
  std::vector<Generator> generators;
  std::size_t n = 0;
  do {
    Generator g;
    if (in.integer() != 1) in.fail("shorthand must read 1/r(a1,...,an)");
    in.expect('/');
    g.order = in.integer();
    in.expect('(');
    do {
      g.exponents.push_back(in.integer());
    } while (in.accept(','));
    in.expect(')');
    if (!generators.empty() && g.exponents.size() != n) {
      in.fail("generators have different numbers of exponents");
    }
    n = g.exponents.size();
    generators.push_back(std::move(g));
  } while (in.accept('+'));
  if (!in.done()) in.fail("unexpected trailing input");
  return validate(static_cast<int>(n), std::move(generators));
}

DiagonalAction parse_document(std::string_view text) {
  YAML::Node root;
  try {
    root = YAML::Load(space_flow_colons(text));
  } catch (const YAML::ParserException& e) {
    throw Error(ErrorCode::Syntax, "line " + std::to_string(e.mark.line + 1) + ", column " +
                                       std::to_string(e.mark.column + 1) + ": " + e.msg);
  }
  if (!root.IsMap()) throw Error(ErrorCode::Syntax, where(root) + ": expected a mapping with n and generators");

  for (const auto& kv : root) {
    const auto key = kv.first.as<std::string>();
    if (key != "n" && key != "generators") {
      throw Error(ErrorCode::Syntax, where(kv.first) + ": unknown field '" + key + "'");
    }
  }
  if (!root["n"]) throw Error(ErrorCode::Syntax, where(root) + ": missing field 'n'");
  if (!root["generators"]) throw Error(ErrorCode::Syntax, where(root) + ": missing field 'generators'");

  const auto n = as_integer(root["n"], "n");
  const auto list = root["generators"];
  if (!list.IsSequence()) throw Error(ErrorCode::Syntax, where(list) + ": 'generators' must be a list");

  std::vector<Generator> generators;
  for (const auto& item : list) {
    if (!item.IsMap() || !item["order"] || !item["exponents"]) {
      throw Error(ErrorCode::Syntax, where(item) + ": generator needs 'order' and 'exponents'");
    }
    for (const auto& kv : item) {
      const auto key = kv.first.as<std::string>();
      if (key != "order" && key != "exponents") {
        throw Error(ErrorCode::Syntax, where(kv.first) + ": unknown generator field '" + key + "'");
      }
    }
    Generator g;
    g.order = as_integer(item["order"], "order");
    const auto exps = item["exponents"];
    if (!exps.IsSequence()) throw Error(ErrorCode::Syntax, where(exps) + ": 'exponents' must be a list");
    for (const auto& e : exps) g.exponents.push_back(as_integer(e, "exponents"));
    generators.push_back(std::move(g));
  }
  if (n > std::numeric_limits<int>::max()) throw Error(ErrorCode::Validation, "n is too large");
  return validate(static_cast<int>(n), std::move(generators));
}

DiagonalAction parse_action(std::string_view text) {
  const auto body = trim(text);
  if (body.starts_with("1/")) return parse_shorthand(body);
  return parse_document(body);
}

DiagonalAction load_action(const std::string& arg) {
  std::error_code ec;
  if (std::filesystem::is_regular_file(arg, ec)) {
    std::ifstream in(arg);
    std::ostringstream buffer;
    buffer << in.rdbuf();
    return parse_document(buffer.str());
  }
  return parse_action(arg);
}

Character parse_character(std::string_view text, const DiagonalAction& action) {
  const auto body = trim(text);
  if (body == "det" || body == "delta") return det_character(action);
  Cursor in(body);
  const bool bracketed = in.accept('(');
  std::vector<std::int64_t> evals;
  do {
    evals.push_back(in.integer());
  } while (in.accept(','));
  if (bracketed) in.expect(')');
  if (!in.done()) in.fail("unexpected trailing input");
  if (evals.size() != action.generator_count()) {
    throw Error(ErrorCode::DimensionMismatch,
                "character needs " + std::to_string(action.generator_count()) + " values, got " +
                    std::to_string(evals.size()));
  }
  return Character(std::move(evals), action.orders());
}

}  // namespace quotsing
