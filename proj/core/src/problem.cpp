#include "chowkit/problem.hpp"

#include <algorithm>
#include <cctype>
#include <sstream>

#include "chowkit/errors.hpp"
#include "chowkit/poly_text.hpp"

namespace ck {

namespace {

struct Token {
  std::string text;
  int col = 0;
};

std::vector<Token> words(const std::string& s, int col0) {
  std::vector<Token> out;
  std::size_t i = 0;
  while (i < s.size()) {
    while (i < s.size() && std::isspace(static_cast<unsigned char>(s[i]))) ++i;
    if (i >= s.size()) break;
    std::size_t j = i;
    while (j < s.size() && !std::isspace(static_cast<unsigned char>(s[j]))) ++j;
    out.push_back({s.substr(i, j - i), col0 + static_cast<int>(i)});
    i = j;
  }
  return out;
}

bool valid_name(const std::string& w) {
  if (w.empty() || !(std::isalpha(static_cast<unsigned char>(w[0])) || w[0] == '_')) return false;
  return std::all_of(w.begin(), w.end(), [](char c) { return std::isalnum(static_cast<unsigned char>(c)) || c == '_'; });
}

long long to_int(const Token& t, int line, long long lo, long long hi) {
  std::size_t used = 0;
  long long v = 0;
  try {
    v = std::stoll(t.text, &used);
  } catch (...) {
    throw ParseError("expected an integer, got '" + t.text + "'", line, t.col);
  }
  if (used != t.text.size()) throw ParseError("expected an integer, got '" + t.text + "'", line, t.col);
  if (v < lo || v > hi) throw ParseError("integer out of range: " + t.text, line, t.col);
  return v;
}

}  // namespace

ProblemFile parse_problem(const std::string& text) {
  ProblemFile p;
  std::vector<std::string> names;
  std::vector<std::vector<std::size_t>> blocks;
  struct Pending {
    std::string body;
    int line, col;
  };
  std::vector<Pending> polys;
  std::vector<std::vector<Pending>> rows;
  std::vector<std::pair<Token, int>> dims;

  std::istringstream in(text);
  std::string raw;
  int line = 0;
  while (std::getline(in, raw)) {
    ++line;
    if (auto h = raw.find('#'); h != std::string::npos) raw.erase(h);
    if (!raw.empty() && raw.back() == '\r') raw.pop_back();
    auto ws = words(raw, 1);
    if (ws.empty()) continue;
    const std::string& kw = ws[0].text;
    const int body_col = ws.size() > 1 ? ws[1].col : static_cast<int>(raw.size()) + 1;
    const std::string body = ws.size() > 1 ? raw.substr(ws[1].col - 1) : std::string();
    if (kw == "ring") {
      if (p.vars || !names.empty()) throw ParseError("duplicate ring line", line, ws[0].col);
      if (ws.size() < 2) throw ParseError("ring needs at least one variable", line, body_col);
      for (std::size_t k = 1; k < ws.size(); ++k) {
        if (!valid_name(ws[k].text)) throw ParseError("invalid variable name '" + ws[k].text + "'", line, ws[k].col);
        if (std::count(names.begin(), names.end(), ws[k].text))
          throw ParseError("duplicate variable '" + ws[k].text + "'", line, ws[k].col);
        names.push_back(ws[k].text);
      }
    } else if (kw == "blocks") {
      if (names.empty()) throw ParseError("blocks before ring", line, ws[0].col);
      if (p.has_blocks) throw ParseError("duplicate blocks line", line, ws[0].col);
      p.has_blocks = true;
      std::vector<char> seen(names.size(), 0);
      std::size_t i = ws[0].col - 1 + kw.size();
      while (true) {
        while (i < raw.size() && std::isspace(static_cast<unsigned char>(raw[i]))) ++i;
        if (i >= raw.size()) break;
        if (raw[i] != '(') throw ParseError("expected '('", line, static_cast<int>(i) + 1);
        const std::size_t close = raw.find(')', i);
        if (close == std::string::npos) throw ParseError("missing ')'", line, static_cast<int>(raw.size()) + 1);
        std::vector<std::size_t> blk;
        for (const auto& t : words(raw.substr(i + 1, close - i - 1), static_cast<int>(i) + 2)) {
          auto it = std::find(names.begin(), names.end(), t.text);
          if (it == names.end()) throw ParseError("unknown variable '" + t.text + "'", line, t.col);
          const std::size_t v = it - names.begin();
          if (seen[v]) throw ParseError("variable '" + t.text + "' in two blocks", line, t.col);
          seen[v] = 1;
          blk.push_back(v);
        }
        if (blk.empty()) throw ParseError("empty block", line, static_cast<int>(i) + 1);
        blocks.push_back(std::move(blk));
        i = close + 1;
      }
      for (std::size_t v = 0; v < names.size(); ++v)
        if (!seen[v]) throw ParseError("variable '" + names[v] + "' is in no block", line, ws[0].col);
    } else if (kw == "poly") {
      if (names.empty()) throw ParseError("poly before ring", line, ws[0].col);
      polys.push_back({body, line, body_col});
    } else if (kw == "row") {
      if (names.empty()) throw ParseError("row before ring", line, ws[0].col);
      std::vector<Pending> r;
      std::size_t start = 0;
      const std::size_t base = ws.size() > 1 ? ws[1].col - 1 : raw.size();
      const std::string rest = raw.substr(base);
      while (true) {
        const std::size_t comma = rest.find(',', start);
        const std::string piece = rest.substr(start, comma == std::string::npos ? std::string::npos : comma - start);
        r.push_back({piece, line, static_cast<int>(base + start) + 1});
        if (comma == std::string::npos) break;
        start = comma + 1;
      }
      rows.push_back(std::move(r));
    } else if (kw == "dim") {
      if (ws.size() != 2) throw ParseError("dim takes one integer", line, ws[0].col);
      p.dim = static_cast<int>(to_int(ws[1], line, -1, 1 << 20));
    } else if (kw == "format") {
      if (ws.size() < 2) throw ParseError("format needs entries", line, body_col);
      std::vector<int> a;
      for (std::size_t k = 1; k < ws.size(); ++k) a.push_back(static_cast<int>(to_int(ws[k], line, 0, 1 << 20)));
      p.format = a;
    } else if (kw == "dims") {
      for (std::size_t k = 1; k < ws.size(); ++k) dims.push_back({ws[k], line});
      if (ws.size() < 2) throw ParseError("dims needs entries", line, body_col);
    } else if (kw == "seed") {
      if (ws.size() != 2) throw ParseError("seed takes one integer", line, ws[0].col);
      try {
        std::size_t used = 0;
        p.seed = std::stoull(ws[1].text, &used);
        if (used != ws[1].text.size() || ws[1].text[0] == '-') throw std::invalid_argument("");
      } catch (...) {
        throw ParseError("expected an unsigned integer", line, ws[1].col);
      }
    } else if (kw == "retries") {
      if (ws.size() != 2) throw ParseError("retries takes one integer", line, ws[0].col);
      p.retries = static_cast<int>(to_int(ws[1], line, 1, 1000));
    } else {
      throw ParseError("unknown keyword '" + kw + "'", line, ws[0].col);
    }
  }
  if (names.empty()) throw ParseError("missing ring line", line + 1, 1);
  p.vars = make_vars(names, blocks);

  for (const auto& q : polys) {
    MPoly f = parse_poly(q.body, p.vars, q.line, q.col);
    for (const auto& b : p.vars->blocks())
      if (!is_homogeneous_in(f, b))
        throw ParseError(p.has_blocks ? "polynomial is not multihomogeneous in the blocks" : "polynomial is not homogeneous",
                         q.line, q.col);
    p.polys.push_back(std::move(f));
  }
  for (const auto& r : rows) {
    std::vector<MPoly> out;
    for (const auto& e : r) out.push_back(parse_poly(e.body, p.vars, e.line, e.col));
    p.rows.push_back(std::move(out));
  }
  if (!p.rows.empty())
    for (std::size_t i = 0; i < rows.size(); ++i)
      if (p.rows[i].size() != p.rows.size())
        throw ParseError("matrix must be square", rows[i][0].line, rows[i][0].col);

  if (!dims.empty()) {
    const std::size_t l = p.vars->block_count();
    DimTable t;
    for (const auto& [tok, ln] : dims) {
      const auto colon = tok.text.find(':');
      if (colon == std::string::npos || colon == 0) throw ParseError("expected subset:dimension", ln, tok.col);
      unsigned mask = 0;
      for (std::size_t k = 0; k < colon; ++k) {
        const char c = tok.text[k];
        if (c < '1' || c > '9' || static_cast<std::size_t>(c - '0') > l)
          throw ParseError("block digit out of range", ln, tok.col + static_cast<int>(k));
        mask |= 1u << (c - '1');
      }
      t[mask] = static_cast<int>(to_int({tok.text.substr(colon + 1), tok.col + static_cast<int>(colon) + 1}, ln, -1, 1 << 20));
    }
    p.dims = t;
  }
  if (p.format && p.format->size() != p.vars->block_count())
    throw ParseError("format needs one entry per block", line, 1);
  return p;
}

ProjectiveVariety as_projective(const ProblemFile& p) {
  if (p.vars->block_count() != 1) throw UsageError("command needs a single block of variables");
  ProjectiveVariety V;
  V.polys = p.polys;
  V.x = p.vars->block(0);
  V.dim = p.dim.value_or(-1);
  return V;
}

MultiprojVariety as_multiproj(const ProblemFile& p) {
  MultiprojVariety V;
  V.polys = p.polys;
  V.blocks = p.vars->blocks();
  V.dim = p.dim.value_or(-1);
  return V;
}

PolyMatrix as_matrix(const ProblemFile& p) {
  if (p.rows.empty()) throw UsageError("no matrix rows");
  std::vector<MPoly> e;
  for (const auto& r : p.rows)
    for (const auto& x : r) e.push_back(x);
  return PolyMatrix(p.vars, p.rows.size(), e);
}

}  // namespace ck
