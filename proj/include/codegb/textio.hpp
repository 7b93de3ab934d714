#ifndef CODEGB_TEXTIO_HPP
#define CODEGB_TEXTIO_HPP

#include <charconv>
#include <optional>
#include <sstream>
#include <string>
#include <string_view>
#include <vector>

#include "codegb/code.hpp"
#include "codegb/errors.hpp"
#include "codegb/field.hpp"
#include "codegb/groebner.hpp"
#include "codegb/monomial.hpp"

namespace codegb {

/// Textual variable naming: plain x1..xn, doubled x{i}_{j}, or x's
/// followed by auxiliary y's.
struct VarNames {
  enum class Scheme { plain, doubled, with_aux };

  Scheme scheme = Scheme::plain;
  std::size_t n = 0;      // plain: variables; doubled: blocks; with_aux: x-variables
  std::size_t width = 0;  // doubled only
  std::size_t aux = 0;    // with_aux only

  static VarNames plain(std::size_t n) { return {Scheme::plain, n, 0, 0}; }
  static VarNames doubled(std::size_t blocks, std::size_t width) {
    return {Scheme::doubled, blocks, width, 0};
  }
  static VarNames with_aux(std::size_t n, std::size_t aux) {
    return {Scheme::with_aux, n, 0, aux};
  }

  std::size_t count() const {
    switch (scheme) {
      case Scheme::plain: return n;
      case Scheme::doubled: return n * width;
      case Scheme::with_aux: return n + aux;
    }
    return 0;
  }

  std::string name(std::size_t v) const {
    switch (scheme) {
      case Scheme::plain: return "x" + std::to_string(v + 1);
      case Scheme::doubled:
        return "x" + std::to_string(v / width + 1) + "_" + std::to_string(v % width + 1);
      case Scheme::with_aux:
        return v < n ? "x" + std::to_string(v + 1) : "y" + std::to_string(v - n + 1);
    }
    return {};
  }

  std::optional<std::size_t> index(std::string_view s) const {
    if (s.size() < 2) return std::nullopt;
    char head = s[0];
    auto number = [](std::string_view t) -> std::optional<std::size_t> {
      std::size_t v = 0;
      if (t.empty()) return std::nullopt;
      auto [p, ec] = std::from_chars(t.data(), t.data() + t.size(), v);
      if (ec != std::errc() || p != t.data() + t.size() || v == 0) return std::nullopt;
      return v;
    };
    if (scheme == Scheme::doubled) {
      if (head != 'x') return std::nullopt;
      auto us = s.find('_');
      if (us == std::string_view::npos) return std::nullopt;
      auto i = number(s.substr(1, us - 1));
      auto j = number(s.substr(us + 1));
      if (!i || !j || *i > n || *j > width) return std::nullopt;
      return (*i - 1) * width + (*j - 1);
    }
    if (head == 'x') {
      auto i = number(s.substr(1));
      if (!i || *i > n) return std::nullopt;
      return *i - 1;
    }
    if (head == 'y' && scheme == Scheme::with_aux) {
      auto i = number(s.substr(1));
      if (!i || *i > aux) return std::nullopt;
      return n + *i - 1;
    }
    return std::nullopt;
  }
};

inline std::string monomial_to_string(const Monomial& m, const VarNames& names) {
  if (m.is_one()) return "1";
  std::string out;
  for (std::size_t v = 0; v < m.nvars(); ++v) {
    if (m[v] == 0) continue;
    if (!out.empty()) out += "*";
    out += names.name(v);
    if (m[v] > 1) out += "^" + std::to_string(m[v]);
  }
  return out;
}

inline Monomial parse_monomial(std::string_view s, const VarNames& names, std::size_t line = 0,
                               std::size_t col0 = 0) {
  Monomial m(names.count());
  if (s == "1") return m;
  if (s.empty()) throw parse_failure("empty monomial", line, col0 + 1);
  std::size_t pos = 0;
  while (pos < s.size()) {
    std::size_t star = s.find('*', pos);
    std::string_view factor = s.substr(pos, star == std::string_view::npos ? s.size() - pos
                                                                           : star - pos);
    std::size_t caret = factor.find('^');
    std::string_view var = factor.substr(0, caret);
    Exp exp = 1;
    if (caret != std::string_view::npos) {
      std::string_view es = factor.substr(caret + 1);
      long long v = 0;
      auto [p, ec] = std::from_chars(es.data(), es.data() + es.size(), v);
      if (ec != std::errc() || p != es.data() + es.size() || v < 1)
        throw parse_failure("bad exponent '" + std::string(es) + "'", line, col0 + pos + 1);
      exp = static_cast<Exp>(v);
    }
    auto idx = names.index(var);
    if (!idx) throw parse_failure("unknown variable '" + std::string(var) + "'", line,
                                  col0 + pos + 1);
    m[*idx] += exp;
    if (star == std::string_view::npos) break;
    pos = star + 1;
  }
  return m;
}

inline std::string binomial_to_string(const Binomial& b, const VarNames& names) {
  return monomial_to_string(b.lead(), names) + " - " + monomial_to_string(b.tail(), names);
}

inline Binomial parse_binomial(std::string_view s, const VarNames& names, const MonomialOrder& ord,
                               std::size_t line = 0) {
  std::size_t sep = s.find(" - ");
  if (sep == std::string_view::npos) throw parse_failure("expected 'lead - tail'", line, 1);
  Monomial lead = parse_monomial(s.substr(0, sep), names, line, 0);
  Monomial tail = parse_monomial(s.substr(sep + 3), names, line, sep + 3);
  auto b = Binomial::make(std::move(lead), std::move(tail), ord);
  if (!b) throw parse_failure("zero binomial", line, 1);
  return *b;
}

/// Parse a whitespace/newline separated list of `lead - tail` lines
/// into canonical binomials (blank lines and # comments skipped).
inline std::vector<Binomial> parse_binomial_list(const std::string& text, const VarNames& names,
                                                 const MonomialOrder& ord) {
  std::vector<Binomial> out;
  std::istringstream in(text);
  std::string lstr;
  std::size_t lineno = 0;
  while (std::getline(in, lstr)) {
    ++lineno;
    std::string_view sv(lstr);
    while (!sv.empty() && (sv.front() == ' ' || sv.front() == '\t')) sv.remove_prefix(1);
    while (!sv.empty() && (sv.back() == ' ' || sv.back() == '\t' || sv.back() == '\r'))
      sv.remove_suffix(1);
    if (sv.empty() || sv.front() == '#') continue;
    out.push_back(parse_binomial(sv, names, ord, lineno));
  }
  return out;
}

namespace detail {

inline const char* order_kind_name(OrderKind k) {
  switch (k) {
    case OrderKind::lex: return "lex";
    case OrderKind::degrevlex: return "degrevlex";
    case OrderKind::elim: return "elim";
  }
  return "?";
}

inline std::string join_ints(const std::vector<int>& v) {
  std::string out;
  for (std::size_t i = 0; i < v.size(); ++i) {
    if (i) out += ",";
    out += std::to_string(v[i]);
  }
  return out;
}

inline std::vector<int> split_ints(std::string_view s, std::size_t line) {
  std::vector<int> out;
  std::size_t pos = 0;
  while (pos <= s.size()) {
    std::size_t comma = s.find(',', pos);
    std::string_view tok =
        s.substr(pos, comma == std::string_view::npos ? s.size() - pos : comma - pos);
    int v = 0;
    auto [p, ec] = std::from_chars(tok.data(), tok.data() + tok.size(), v);
    if (ec != std::errc() || p != tok.data() + tok.size())
      throw parse_failure("bad integer list", line, pos + 1);
    out.push_back(v);
    if (comma == std::string_view::npos) break;
    pos = comma + 1;
  }
  return out;
}

}  // namespace detail

/// One binomial per line in canonical orientation, leading terms
/// descending; the header records the order and variable layout.
inline std::string basis_to_string(const GroebnerBasis& B, const VarNames& names) {
  std::string out = "basis order=";
  out += detail::order_kind_name(B.order.kind());
  out += " vars=" + std::to_string(B.nvars());
  switch (names.scheme) {
    case VarNames::Scheme::plain: out += " scheme=plain n=" + std::to_string(names.n); break;
    case VarNames::Scheme::doubled:
      out += " scheme=doubled n=" + std::to_string(names.n) + " w=" + std::to_string(names.width);
      break;
    case VarNames::Scheme::with_aux:
      out += " scheme=aux n=" + std::to_string(names.n) + " m=" + std::to_string(names.aux);
      break;
  }
  if (B.order.kind() == OrderKind::elim)
    out += " block=" + std::to_string(B.order.elim_block());
  if (!B.order.ranking().empty()) out += " ranking=" + detail::join_ints(B.order.ranking());
  out += " reduced=" + std::to_string(B.reduced ? 1 : 0);
  out += "\n";
  for (const Binomial& b : B.elems) out += binomial_to_string(b, names) + "\n";
  return out;
}

inline std::pair<GroebnerBasis, VarNames> parse_basis(const std::string& text) {
  std::istringstream in(text);
  std::string lstr;
  std::size_t lineno = 0;
  // header
  std::string kind, scheme;
  std::size_t vars = 0, n = 0, w = 0, m = 0, block = 0;
  std::vector<int> ranking;
  bool reduced = false;
  bool have_header = false;
  std::string body;
  while (std::getline(in, lstr)) {
    ++lineno;
    std::string_view sv(lstr);
    while (!sv.empty() && (sv.back() == '\r' || sv.back() == ' ')) sv.remove_suffix(1);
    if (sv.empty() || sv.front() == '#') continue;
    if (!have_header) {
      std::istringstream hs{std::string(sv)};
      std::string tok;
      hs >> tok;
      if (tok != "basis") throw parse_failure("expected basis header", lineno, 1);
      while (hs >> tok) {
        auto eq = tok.find('=');
        if (eq == std::string::npos) throw parse_failure("expected key=value", lineno, 1);
        std::string key = tok.substr(0, eq), val = tok.substr(eq + 1);
        try {
          if (key == "order") kind = val;
          else if (key == "vars") vars = std::stoul(val);
          else if (key == "scheme") scheme = val;
          else if (key == "n") n = std::stoul(val);
          else if (key == "w") w = std::stoul(val);
          else if (key == "m") m = std::stoul(val);
          else if (key == "block") block = std::stoul(val);
          else if (key == "ranking") ranking = detail::split_ints(val, lineno);
          else if (key == "reduced") reduced = val == "1";
          else throw parse_failure("unknown header key '" + key + "'", lineno, 1);
        } catch (const parse_failure&) {
          throw;
        } catch (const std::exception&) {
          throw parse_failure("bad value for '" + key + "'", lineno, 1);
        }
      }
      have_header = true;
      continue;
    }
    body += std::string(sv) + "\n";
  }
  if (!have_header) throw parse_failure("missing basis header", lineno, 1);

  VarNames names;
  if (scheme == "plain" || scheme.empty()) names = VarNames::plain(n ? n : vars);
  else if (scheme == "doubled") names = VarNames::doubled(n, w);
  else if (scheme == "aux") names = VarNames::with_aux(n, m);
  else throw parse_failure("unknown scheme '" + scheme + "'", 1, 1);
  if (names.count() != vars) throw parse_failure("vars does not match scheme", 1, 1);

  if (ranking.empty())
    for (std::size_t i = 0; i < vars; ++i) ranking.push_back(static_cast<int>(i));
  MonomialOrder ord = [&] {
    if (kind == "lex") return MonomialOrder::lex(ranking);
    if (kind == "degrevlex") return MonomialOrder::degrevlex(ranking);
    if (kind == "elim") return MonomialOrder::elim(ranking, block);
    throw parse_failure("unknown order '" + kind + "'", 1, 1);
  }();

  GroebnerBasis B{ord, parse_binomial_list(body, names, ord), reduced};
  sort_by_lead_desc(B.elems, ord);
  return {std::move(B), names};
}

/// Field element in entry syntax: digits for prime fields, `0`, `a`
/// or `a^j` for extension fields.
inline FieldElem parse_element(std::string_view tok, const Field& F, std::size_t line,
                               std::size_t col) {
  if (tok == "0") return F.zero();
  if (F.r() == 1) {
    long long v = 0;
    auto [p, ec] = std::from_chars(tok.data(), tok.data() + tok.size(), v);
    if (ec != std::errc() || p != tok.data() + tok.size() || v < 0 || v >= F.p())
      throw parse_failure("bad field element '" + std::string(tok) + "'", line, col);
    return F.from_int(v);
  }
  if (tok == "a") return F.alpha();
  if (tok.size() >= 3 && tok[0] == 'a' && tok[1] == '^') {
    std::string_view es = tok.substr(2);
    long long j = 0;
    auto [p, ec] = std::from_chars(es.data(), es.data() + es.size(), j);
    if (ec == std::errc() && p == es.data() + es.size() && j >= 1) return F.alpha_pow(j);
  }
  throw parse_failure("bad field element '" + std::string(tok) + "'", line, col);
}

inline std::string element_to_string(FieldElem x, const Field& F) {
  if (F.r() == 1) return std::to_string(F.to_int(x));
  if (x.is_zero()) return "0";
  return "a^" + std::to_string(x.idx());
}

inline Word parse_word(std::string_view s, const Field& F, std::size_t line = 0) {
  Word out;
  std::size_t pos = 0;
  while (pos <= s.size()) {
    std::size_t comma = s.find(',', pos);
    std::string_view tok =
        s.substr(pos, comma == std::string_view::npos ? s.size() - pos : comma - pos);
    out.push_back(parse_element(tok, F, line, pos + 1));
    if (comma == std::string_view::npos) break;
    pos = comma + 1;
  }
  return out;
}

inline std::string word_to_string(const Word& w, const Field& F) {
  std::string out;
  for (std::size_t i = 0; i < w.size(); ++i) {
    if (i) out += ",";
    out += element_to_string(w[i], F);
  }
  return out;
}

/// Code-spec file: a field line followed by a generator block.
///
///   field p=<p> r=<r> [poly=<c0,...,cr>] [alpha=<int>]
///   generator
///   <row>
///   ...
///
/// Blank lines and lines starting with # are ignored.
inline LinearCode parse_code_spec(const std::string& text) {
  std::istringstream in(text);
  std::string lstr;
  std::size_t lineno = 0;
  std::optional<FieldSpec> fspec;
  std::shared_ptr<Field> field;
  bool in_rows = false;
  std::vector<std::vector<FieldElem>> rows;
  while (std::getline(in, lstr)) {
    ++lineno;
    std::string_view sv(lstr);
    while (!sv.empty() && (sv.back() == '\r' || sv.back() == ' ' || sv.back() == '\t'))
      sv.remove_suffix(1);
    while (!sv.empty() && (sv.front() == ' ' || sv.front() == '\t')) sv.remove_prefix(1);
    if (sv.empty() || sv.front() == '#') continue;

    std::istringstream ls{std::string(sv)};
    std::string tok;
    if (!fspec) {
      ls >> tok;
      if (tok != "field") throw parse_failure("expected field line", lineno, 1);
      FieldSpec fs;
      bool have_p = false;
      while (ls >> tok) {
        auto eq = tok.find('=');
        if (eq == std::string::npos)
          throw parse_failure("expected key=value in field line", lineno, 1);
        std::string key = tok.substr(0, eq), val = tok.substr(eq + 1);
        try {
          if (key == "p") {
            fs.p = std::stoi(val);
            have_p = true;
          } else if (key == "r") {
            fs.r = std::stoi(val);
          } else if (key == "alpha") {
            fs.alpha = std::stoi(val);
          } else if (key == "poly") {
            for (int c : detail::split_ints(val, lineno)) fs.primitive_poly.push_back(c);
          } else {
            throw parse_failure("unknown field key '" + key + "'", lineno, 1);
          }
        } catch (const parse_failure&) {
          throw;
        } catch (const std::exception&) {
          throw parse_failure("bad value for '" + key + "'", lineno, 1);
        }
      }
      if (!have_p) throw parse_failure("field line needs p=<prime>", lineno, 1);
      fspec = fs;
      field = std::make_shared<Field>(*fspec);
      continue;
    }
    if (!in_rows) {
      ls >> tok;
      if (tok != "generator") throw parse_failure("expected generator line", lineno, 1);
      in_rows = true;
      continue;
    }
    std::vector<FieldElem> row;
    std::size_t col = 1;
    while (ls >> tok) {
      row.push_back(parse_element(tok, *field, lineno, col));
      ++col;
    }
    if (!rows.empty() && row.size() != rows.front().size())
      throw parse_failure("generator rows have unequal lengths", lineno, 1);
    rows.push_back(std::move(row));
  }
  if (!fspec) throw parse_failure("missing field line", lineno, 1);
  if (!in_rows) throw parse_failure("missing generator block", lineno, 1);
  if (rows.empty()) throw parse_failure("empty generator block", lineno, 1);
  Matrix G(rows.size(), rows.front().size());
  for (std::size_t i = 0; i < rows.size(); ++i)
    for (std::size_t j = 0; j < rows.front().size(); ++j) G.at(i, j) = rows[i][j];
  return LinearCode(std::move(field), std::move(G));
}

}  // namespace codegb

#endif
