#include "defdom/io.hpp"

#include <charconv>
#include <fstream>
#include <sstream>
#include <vector>

#include "defdom/error.hpp"

namespace defdom {
namespace {

struct Token {
  std::string_view text;
  std::size_t offset;
};

class Tokens {
 public:
  explicit Tokens(std::string_view text) : text_(text) {}

  bool at_end() {
    skip();
    return pos_ >= text_.size();
  }

  Token next(const char* expected) {
    skip();
    if (pos_ >= text_.size()) throw ParseError(pos_, std::string("expected ") + expected + ", got end of input");
    const std::size_t start = pos_;
    while (pos_ < text_.size() && !space(text_[pos_]) && text_[pos_] != '#') ++pos_;
    return {text_.substr(start, pos_ - start), start};
  }

  void keyword(const char* word) {
    const Token t = next(word);
    if (t.text != word) throw ParseError(t.offset, std::string("expected '") + word + "', got '" + std::string(t.text) + "'");
  }

  std::int64_t integer(const char* what, Token* where = nullptr) {
    const Token t = next(what);
    if (where) *where = t;
    return to_integer(t, what);
  }

  static std::int64_t to_integer(Token t, const char* what) {
    std::int64_t v = 0;
    const char* end = t.text.data() + t.text.size();
    auto [p, ec] = std::from_chars(t.text.data(), end, v);
    if (ec != std::errc() || p != end) {
      throw ParseError(t.offset, std::string("expected ") + what + ", got '" + std::string(t.text) + "'");
    }
    return v;
  }

  std::size_t offset() const { return pos_; }

 private:
  static bool space(char c) { return c == ' ' || c == '\t' || c == '\n' || c == '\r'; }

  void skip() {
    while (pos_ < text_.size()) {
      if (space(text_[pos_])) {
        ++pos_;
      } else if (text_[pos_] == '#') {
        while (pos_ < text_.size() && text_[pos_] != '\n') ++pos_;
      } else {
        break;
      }
    }
  }

  std::string_view text_;
  std::size_t pos_ = 0;
};

constexpr std::int64_t kMaxVertices = 50'000'000;

int count(Tokens& in, const char* what, std::int64_t lo) {
  Token t;
  const std::int64_t v = in.integer(what, &t);
  if (v < lo || v > kMaxVertices) {
    throw ParseError(t.offset, std::string(what) + " out of range: " + std::to_string(v));
  }
  return static_cast<int>(v);
}

Rational rational(Token t) {
  const auto slash = t.text.find('/');
  const std::int64_t num = Tokens::to_integer({t.text.substr(0, slash), t.offset}, "endpoint numerator");
  if (slash == std::string_view::npos) return Rational(num);
  const std::int64_t den =
      Tokens::to_integer({t.text.substr(slash + 1), t.offset + slash + 1}, "endpoint denominator");
  if (den <= 0) throw ParseError(t.offset + slash + 1, "denominator must be positive");
  return Rational(num, den);
}

Instance parse_pig(Tokens& in) {
  const int n = count(in, "vertex count", 1);
  in.keyword("maxn");
  std::vector<Vertex> max_nbr(n);
  for (int j = 1; j <= n; ++j) {
    Token t;
    const std::int64_t m = in.integer("maxn value", &t);
    if (m < j || m > n) {
      throw ParseError(t.offset, "maxn of vertex " + std::to_string(j) + " must lie in [" +
                                     std::to_string(j) + ".." + std::to_string(n) + "], got " +
                                     std::to_string(m));
    }
    if (j > 1 && m < max_nbr[j - 2]) {
      throw ParseError(t.offset, "maxn decreases at vertex " + std::to_string(j));
    }
    max_nbr[j - 1] = static_cast<Vertex>(m);
  }
  Instance inst;
  inst.format = InstanceFormat::pig;
  inst.graph = from_neighbor_ranges(max_nbr);
  return inst;
}

Instance parse_intervals(Tokens& in) {
  const int n = count(in, "interval count", 1);
  IntervalList list;
  std::vector<std::size_t> starts;
  for (int i = 0; i < n; ++i) {
    const Token lt = in.next("left endpoint");
    starts.push_back(lt.offset);
    const Rational left = rational(lt);
    const Rational right = rational(in.next("right endpoint"));
    if (right < left) throw ParseError(lt.offset, "interval " + std::to_string(i + 1) + " has right < left");
    list.push_back({left, right});
  }
  Instance inst;
  inst.format = InstanceFormat::intervals;
  try {
    inst.graph = from_intervals(list);
  } catch (const ProperViolation& e) {
    throw ParseError(starts[e.outer() - 1], e.what());
  }
  inst.intervals = std::move(list);
  return inst;
}

Instance parse_bubbles(Tokens& in) {
  const int columns = count(in, "column count", 1);
  CompactBubbleStructure cb;
  std::int64_t total = 0;
  for (int j = 1; j <= columns; ++j) {
    in.keyword("col");
    Token t;
    if (in.integer("column index", &t) != j) {
      throw ParseError(t.offset, "expected column " + std::to_string(j));
    }
    const int cells = count(in, "bubble count", 1);
    auto& column = cb.columns.emplace_back();
    for (int c = 0; c < cells; ++c) {
      Token rt;
      const std::int64_t row = in.integer("row", &rt);
      if (row < 1 || row > kMaxVertices) throw ParseError(rt.offset, "row must be positive");
      if (!column.empty() && row <= column.back().row) {
        throw ParseError(rt.offset, "rows must increase within column " + std::to_string(j));
      }
      const int size = count(in, "bubble size", 1);
      total += size;
      if (total > kMaxVertices) throw ParseError(in.offset(), "too many vertices");
      column.push_back({static_cast<int>(row), size});
    }
  }
  Instance inst;
  inst.format = InstanceFormat::bubbles;
  inst.graph = pig_from_bubbles(cb);
  inst.bubbles = std::move(cb);
  return inst;
}

}  // namespace

Instance parse_instance(std::string_view text) {
  Tokens in(text);
  const Token head = in.next("format keyword");
  Instance inst;
  if (head.text == "pig") {
    inst = parse_pig(in);
  } else if (head.text == "intervals") {
    inst = parse_intervals(in);
  } else if (head.text == "bubbles") {
    inst = parse_bubbles(in);
  } else {
    throw ParseError(head.offset, "unknown format '" + std::string(head.text) + "'");
  }
  if (!in.at_end()) throw ParseError(in.offset(), "trailing input");
  return inst;
}

std::string write_pig(const ProperIntervalGraph& g) {
  std::ostringstream out;
  out << "pig " << g.n() << "\nmaxn";
  for (Vertex m : g.max_nbrs()) out << ' ' << m;
  out << '\n';
  return out.str();
}

std::string write_intervals(const IntervalList& intervals) {
  std::ostringstream out;
  out << "intervals " << intervals.size() << '\n';
  for (const auto& iv : intervals) out << iv.left << ' ' << iv.right << '\n';
  return out.str();
}

std::string write_bubbles(const CompactBubbleStructure& cb) {
  std::ostringstream out;
  out << "bubbles " << cb.columns.size() << '\n';
  for (std::size_t j = 0; j < cb.columns.size(); ++j) {
    out << "col " << j + 1 << ' ' << cb.columns[j].size() << '\n';
    for (const auto& cell : cb.columns[j]) out << cell.row << ' ' << cell.size << '\n';
  }
  return out.str();
}

std::string read_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw Error("cannot open '" + path + "'");
  std::ostringstream buf;
  buf << in.rdbuf();
  return buf.str();
}

}  // namespace defdom
