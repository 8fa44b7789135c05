#include "algstat/ci.hpp"

#include <algorithm>
#include <cctype>
#include <charconv>
#include <functional>

#include "algstat/error.hpp"

namespace algstat {

namespace {

void normalize(VertexSet& s) {
  std::sort(s.begin(), s.end());
  s.erase(std::unique(s.begin(), s.end()), s.end());
}

std::string set_to_string(const VertexSet& s, bool bare_singleton) {
  if (bare_singleton && s.size() == 1) return std::to_string(s.front());
  std::string out = "{";
  for (std::size_t k = 0; k < s.size(); ++k) {
    if (k) out += ", ";
    out += std::to_string(s[k]);
  }
  return out + "}";
}

class StmtParser {
 public:
  explicit StmtParser(std::string_view text) : text_(text) {}

  CIStmt parse() {
    expect('[');
    VertexSet a = set();
    skip();
    if (text_.compare(pos_, 4, "_||_") == 0) pos_ += 4;
    else fail("expected '_||_'");
    VertexSet b = set();
    VertexSet c;
    skip();
    if (pos_ < text_.size() && text_[pos_] == '|') {
      ++pos_;
      c = set();
    }
    expect(']');
    skip();
    if (pos_ != text_.size()) fail("trailing characters");
    return CIStmt(std::move(a), std::move(b), std::move(c));
  }

 private:
  [[noreturn]] void fail(const std::string& what) const {
    throw Error(ErrorCode::ParseError, what + " in CI statement '" + std::string(text_) + "'");
  }
  void skip() {
    while (pos_ < text_.size() && std::isspace(static_cast<unsigned char>(text_[pos_]))) ++pos_;
  }
  void expect(char c) {
    skip();
    if (pos_ >= text_.size() || text_[pos_] != c) fail(std::string("expected '") + c + "'");
    ++pos_;
  }
  Vertex number() {
    skip();
    Vertex v = 0;
    auto [ptr, ec] = std::from_chars(text_.data() + pos_, text_.data() + text_.size(), v);
    if (ec != std::errc()) fail("expected vertex number");
    pos_ = static_cast<std::size_t>(ptr - text_.data());
    return v;
  }
  VertexSet set() {
    skip();
    VertexSet out;
    if (pos_ < text_.size() && text_[pos_] == '{') {
      ++pos_;
      skip();
      if (pos_ < text_.size() && text_[pos_] == '}') {
        ++pos_;
        return out;
      }
      for (;;) {
        out.push_back(number());
        skip();
        if (pos_ < text_.size() && text_[pos_] == ',') {
          ++pos_;
          continue;
        }
        expect('}');
        return out;
      }
    }
    out.push_back(number());
    return out;
  }

  std::string_view text_;
  std::size_t pos_ = 0;
};

}  // namespace

CIStmt::CIStmt(VertexSet a, VertexSet b, VertexSet c) : a_(std::move(a)), b_(std::move(b)), c_(std::move(c)) {
  normalize(a_);
  normalize(b_);
  normalize(c_);
  if (a_.empty() || b_.empty()) throw Error(ErrorCode::OverlappingSets, "CI statement needs nonempty A and B");
  auto meets = [](const VertexSet& x, const VertexSet& y) {
    return std::any_of(x.begin(), x.end(), [&](Vertex v) { return std::binary_search(y.begin(), y.end(), v); });
  };
  if (meets(a_, b_) || meets(a_, c_) || meets(b_, c_))
    throw Error(ErrorCode::OverlappingSets, "CI statement sets must be disjoint");
  if (b_ < a_) std::swap(a_, b_);
}

std::string CIStmt::to_string() const {
  return "[" + set_to_string(a_, true) + " _||_ " + set_to_string(b_, true) + " | " + set_to_string(c_, false) + "]";
}

CIStmt CIStmt::parse(std::string_view text) { return StmtParser(text).parse(); }

GaussianRing::GaussianRing(std::size_t n) : n_(n) {
  std::vector<std::string> names;
  for (std::size_t i = 1; i <= n; ++i)
    for (std::size_t j = i; j <= n; ++j) names.push_back(indexed_name("s", {static_cast<int>(i), static_cast<int>(j)}));
  ring_ = ring_new(std::move(names));
}

std::size_t GaussianRing::index(Vertex i, Vertex j) const {
  if (i > j) std::swap(i, j);
  if (i < 1 || static_cast<std::size_t>(j) > n_)
    throw Error(ErrorCode::IndexOutOfRange, "s[" + std::to_string(i) + "," + std::to_string(j) + "] outside n = " +
                                                std::to_string(n_));
  const auto a = static_cast<std::size_t>(i - 1);
  const auto b = static_cast<std::size_t>(j - 1);
  // Rows 0..a-1 contribute n, n-1, ..., n-a+1 entries.
  return a * n_ - a * (a - 1) / 2 + (b - a);
}

PolyMatrix GaussianRing::submatrix(std::span<const Vertex> rows, std::span<const Vertex> cols) const {
  PolyMatrix m;
  for (Vertex r : rows) {
    std::vector<MultiPoly> row;
    for (Vertex c : cols) row.push_back(s(r, c));
    m.push_back(std::move(row));
  }
  return m;
}

std::vector<CIStmt> global_markov(const Graph& g) {
  if (g.directed() && !g.is_acyclic()) throw Error(ErrorCode::CyclicGraph, "global Markov needs an acyclic graph");
  std::vector<CIStmt> out;
  const auto n = static_cast<Vertex>(g.n_vertices());
  for (Vertex i = 1; i <= n; ++i)
    for (Vertex j = i + 1; j <= n; ++j) {
      if (g.adjacent(i, j)) continue;
      for (auto& c : minimal_separators(g, i, j)) out.emplace_back(VertexSet{i}, VertexSet{j}, std::move(c));
    }
  std::sort(out.begin(), out.end());
  out.erase(std::unique(out.begin(), out.end()), out.end());
  return out;
}

namespace {

void for_each_subset(std::size_t n, std::size_t k, const std::function<void(const std::vector<std::size_t>&)>& f) {
  std::vector<std::size_t> pick(k);
  for (std::size_t t = 0; t < k; ++t) pick[t] = t;
  if (k > n) return;
  for (;;) {
    f(pick);
    std::size_t t = k;
    while (t > 0 && pick[t - 1] == n - k + t - 1) --t;
    if (t == 0) return;
    ++pick[t - 1];
    for (std::size_t u = t; u < k; ++u) pick[u] = pick[u - 1] + 1;
  }
}

}  // namespace

Ideal ci_ideal(const GaussianRing& r, std::span<const CIStmt> stmts) {
  std::vector<MultiPoly> gens;
  for (const auto& st : stmts) {
    for (const VertexSet* s : {&st.a(), &st.b(), &st.c()})
      for (Vertex v : *s)
        if (v < 1 || static_cast<std::size_t>(v) > r.n())
          throw Error(ErrorCode::IndexOutOfRange, "vertex " + std::to_string(v) + " in " + st.to_string());
    std::vector<Vertex> rows(st.a());
    rows.insert(rows.end(), st.c().begin(), st.c().end());
    std::vector<Vertex> cols(st.b());
    cols.insert(cols.end(), st.c().begin(), st.c().end());
    const PolyMatrix sigma = r.submatrix(rows, cols);
    const std::size_t k = st.c().size() + 1;
    for_each_subset(rows.size(), k, [&](const std::vector<std::size_t>& rp) {
      for_each_subset(cols.size(), k, [&](const std::vector<std::size_t>& cp) {
        PolyMatrix sub;
        for (std::size_t a : rp) {
          std::vector<MultiPoly> row;
          for (std::size_t b : cp) row.push_back(sigma[a][b]);
          sub.push_back(std::move(row));
        }
        MultiPoly d = determinant(sub, r.ring());
        if (!d.is_zero() && std::find(gens.begin(), gens.end(), d) == gens.end()) gens.push_back(std::move(d));
      });
    });
  }
  return Ideal(r.ring(), std::move(gens));
}

}  // namespace algstat
