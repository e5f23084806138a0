#include <algorithm>
#include <cctype>
#include <charconv>
#include <fstream>
#include <sstream>

#include "haarcay/error.hpp"
#include "haarcay/haar.hpp"

namespace haarcay {

namespace {

class GroupParser {
public:
  explicit GroupParser(std::string_view text) : s_(text) {}

  FiniteGroup parse_all() {
    FiniteGroup g = parse();
    if (pos_ != s_.size()) error("unexpected trailing text");
    return g;
  }

private:
  FiniteGroup parse() {
    if (eat("cyclic:")) return build_cyclic(positive());
    if (eat("dihedral:")) return build_dihedral(positive());
    if (eat("gendih:")) return build_generalized_dihedral(parse());
    if (eat("quaternion")) return build_quaternion();
    if (eat("product:")) {
      FiniteGroup a = parse();
      expect(',');
      FiniteGroup b = parse();
      return build_direct_product(a, b);
    }
    if (eat("metacyclic:")) {
      long long v[4];
      for (int k = 0; k < 4; ++k) {
        if (k) expect(',');
        v[k] = integer();
      }
      return build_metacyclic(v[0], v[1], v[2], v[3]);
    }
    if (eat("table:")) {
      const std::string path(s_.substr(pos_));
      pos_ = s_.size();
      std::ifstream in(path);
      if (!in) fail(ErrorCode::io_error, "cannot open group table '" + path + "'");
      std::stringstream buf;
      buf << in.rdbuf();
      return read_table_group(buf.str());
    }
    error("unknown group family");
  }

  bool eat(std::string_view word) {
    if (s_.substr(pos_, word.size()) != word) return false;
    pos_ += word.size();
    return true;
  }

  void expect(char c) {
    if (pos_ >= s_.size() || s_[pos_] != c) error(std::string("expected '") + c + "'");
    ++pos_;
  }

  long long integer() {
    long long v = 0;
    auto first = s_.data() + pos_, last = s_.data() + s_.size();
    auto [ptr, ec] = std::from_chars(first, last, v);
    if (ec != std::errc() || ptr == first) error("expected an integer");
    pos_ += static_cast<std::size_t>(ptr - first);
    return v;
  }

  std::size_t positive() {
    const long long v = integer();
    if (v < 0) error("expected a non-negative integer");
    return static_cast<std::size_t>(v);
  }

  [[noreturn]] void error(const std::string &what) const {
    fail(ErrorCode::parse_error, "group '" + std::string(s_) + "' at offset " +
                                     std::to_string(pos_) + ": " + what);
  }

  std::string_view s_;
  std::size_t pos_ = 0;
};

std::string_view trim(std::string_view s) {
  while (!s.empty() && std::isspace(static_cast<unsigned char>(s.front()))) s.remove_prefix(1);
  while (!s.empty() && std::isspace(static_cast<unsigned char>(s.back()))) s.remove_suffix(1);
  return s;
}

} // namespace

FiniteGroup parse_group(std::string_view dsl) { return GroupParser(trim(dsl)).parse_all(); }

std::vector<Elem> parse_subset(const FiniteGroup &g, std::string_view text) {
  std::vector<Elem> out;
  text = trim(text);
  if (text.empty()) return out;
  int depth = 0;
  std::size_t start = 0;
  for (std::size_t i = 0; i <= text.size(); ++i) {
    if (i < text.size() && text[i] == '(') ++depth;
    if (i < text.size() && text[i] == ')') --depth;
    if (i == text.size() || (text[i] == ',' && depth == 0)) {
      auto item = trim(text.substr(start, i - start));
      auto e = g.parse_element(item);
      if (!e) fail(ErrorCode::parse_error, "unknown element '" + std::string(item) + "'");
      out.push_back(*e);
      start = i + 1;
    }
  }
  std::sort(out.begin(), out.end());
  out.erase(std::unique(out.begin(), out.end()), out.end());
  return out;
}

HaarSpec parse_haar_spec(std::string_view text) {
  const auto bar = text.rfind('|');
  if (bar == std::string_view::npos)
    fail(ErrorCode::parse_error, "expected '<group>|<elements>'");
  FiniteGroup g = parse_group(text.substr(0, bar));
  auto s = parse_subset(g, text.substr(bar + 1));
  return HaarSpec(std::move(g), std::move(s));
}

std::string format_subset(const FiniteGroup &g, std::span<const Elem> s) {
  std::string out;
  for (std::size_t i = 0; i < s.size(); ++i) {
    if (i) out += ',';
    out += g.name(s[i]);
  }
  return out;
}

} // namespace haarcay
