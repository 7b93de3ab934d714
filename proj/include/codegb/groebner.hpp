#ifndef CODEGB_GROEBNER_HPP
#define CODEGB_GROEBNER_HPP

#include <algorithm>
#include <map>
#include <optional>
#include <set>
#include <vector>

#include "codegb/errors.hpp"
#include "codegb/monomial.hpp"

namespace codegb {

/// Basis of a pure-difference binomial ideal under a fixed order.
/// Elements are stored in canonical orientation, sorted by leading
/// term descending, so set equality is vector equality.
struct GroebnerBasis {
  MonomialOrder order;
  std::vector<Binomial> elems;
  bool reduced = false;

  std::size_t nvars() const { return order.nvars(); }

  friend bool operator==(const GroebnerBasis& a, const GroebnerBasis& b) {
    return a.order == b.order && a.elems == b.elems;
  }
};

inline void sort_by_lead_desc(std::vector<Binomial>& v, const MonomialOrder& ord) {
  std::sort(v.begin(), v.end(), [&](const Binomial& a, const Binomial& b) {
    Cmp c = ord.compare(a.lead(), b.lead());
    if (c != Cmp::equal) return c == Cmp::greater;
    return ord.compare(a.tail(), b.tail()) == Cmp::greater;
  });
}

/// S-polynomial of two pure-difference binomials; again a pure
/// difference, or zero when the two tails collide on the lcm.
inline std::optional<Binomial> spoly(const Binomial& f, const Binomial& g,
                                     const MonomialOrder& ord) {
  Monomial l = lcm(f.lead(), g.lead());
  Monomial u = l - f.lead() + f.tail();
  Monomial v = l - g.lead() + g.tail();
  return Binomial::make(std::move(u), std::move(v), ord);
}

/// Remainder of a monomial on division by a binomial set. Every
/// rewrite step replaces the matched lead by the tail, so the result
/// is a single monomial; it is the unique normal form whenever the
/// set is a Gröbner basis.
inline Monomial normal_form(Monomial m, const std::vector<Binomial>& basis) {
  bool changed = true;
  while (changed) {
    changed = false;
    for (const Binomial& g : basis) {
      if (divides(g.lead(), m)) {
        m = m - g.lead() + g.tail();
        changed = true;
        break;
      }
    }
  }
  return m;
}

/// Remainder of a binomial: both monomials are reduced to normal form;
/// nullopt means the binomial lies in the ideal generated by `basis`.
inline std::optional<Binomial> normal_form(const Binomial& f, const std::vector<Binomial>& basis,
                                           const MonomialOrder& ord) {
  return Binomial::make(normal_form(f.lead(), basis), normal_form(f.tail(), basis), ord);
}

inline Monomial normal_form(const Monomial& m, const GroebnerBasis& B) {
  return normal_form(m, B.elems);
}

/// Membership test x^a - x^b in the ideal of a Gröbner basis.
inline bool in_ideal(const Monomial& a, const Monomial& b, const GroebnerBasis& B) {
  return normal_form(a, B.elems) == normal_form(b, B.elems);
}

namespace detail {

struct SPair {
  std::size_t i, j;
  Monomial l;
  std::int64_t deg;
};

}  // namespace detail

/// Buchberger's algorithm for pure-difference binomial generators.
/// Pair handling follows the Gebauer-Möller update; pair selection is
/// the normal strategy (minimal lcm degree, ties broken by the order
/// on the lcm, then by index). Deterministic for a fixed input order.
inline GroebnerBasis buchberger(const std::vector<Binomial>& gens, const MonomialOrder& ord) {
  std::vector<Binomial> G;
  std::vector<detail::SPair> P;

  auto update = [&](const Binomial& f) {
    const std::size_t t = G.size();
    const Monomial& fl = f.lead();
    P.erase(std::remove_if(P.begin(), P.end(),
                           [&](const detail::SPair& p) {
                             return divides(fl, p.l) && p.l != lcm(G[p.i].lead(), fl) &&
                                    p.l != lcm(G[p.j].lead(), fl);
                           }),
            P.end());
    std::map<Monomial, std::vector<std::size_t>> groups;
    for (std::size_t i = 0; i < t; ++i) groups[lcm(G[i].lead(), fl)].push_back(i);
    std::vector<Monomial> kept;
    for (const auto& [l, idxs] : groups) {
      bool redundant = false;
      for (const Monomial& m : kept)
        if (divides(m, l)) {
          redundant = true;
          break;
        }
      if (redundant) continue;
      kept.push_back(l);
      bool any_coprime = false;
      for (std::size_t i : idxs)
        if (coprime(G[i].lead(), fl)) {
          any_coprime = true;
          break;
        }
      if (!any_coprime) P.push_back({idxs.front(), t, l, l.degree()});
    }
    G.push_back(f);
  };

  for (const Binomial& g : gens) {
    auto f = Binomial::make(g.lead(), g.tail(), ord);
    if (!f) continue;
    if (std::find(G.begin(), G.end(), *f) != G.end()) continue;
    update(*f);
  }

  while (!P.empty()) {
    auto best = std::min_element(P.begin(), P.end(),
                                 [&](const detail::SPair& a, const detail::SPair& b) {
                                   if (a.deg != b.deg) return a.deg < b.deg;
                                   Cmp c = ord.compare(a.l, b.l);
                                   if (c != Cmp::equal) return c == Cmp::less;
                                   if (a.i != b.i) return a.i < b.i;
                                   return a.j < b.j;
                                 });
    detail::SPair p = *best;
    P.erase(best);
    auto s = spoly(G[p.i], G[p.j], ord);
    if (!s) continue;
    auto r = normal_form(*s, G, ord);
    if (r) update(*r);
  }

  sort_by_lead_desc(G, ord);
  return {ord, std::move(G), false};
}

/// Minimalize and tail-reduce a Gröbner basis into the unique reduced
/// basis for its ideal and order. Idempotent.
inline GroebnerBasis reduce_basis(const GroebnerBasis& B) {
  std::vector<Binomial> work = B.elems;
  std::sort(work.begin(), work.end(), [&](const Binomial& a, const Binomial& b) {
    Cmp c = B.order.compare(a.lead(), b.lead());
    if (c != Cmp::equal) return c == Cmp::less;
    return B.order.compare(a.tail(), b.tail()) == Cmp::less;
  });
  std::vector<Binomial> min;
  for (const Binomial& g : work) {
    bool covered = false;
    for (const Binomial& m : min)
      if (divides(m.lead(), g.lead())) {
        covered = true;
        break;
      }
    if (!covered) min.push_back(g);
  }
  for (std::size_t i = 0; i < min.size(); ++i) {
    Monomial t = normal_form(min[i].tail(), min);
    if (t != min[i].tail()) min[i] = Binomial::make(min[i].lead(), std::move(t), B.order).value();
  }
  sort_by_lead_desc(min, B.order);
  return {B.order, std::move(min), true};
}

/// Basis elements supported entirely on the kept variables. The order
/// must eliminate the complement.
inline std::vector<Binomial> eliminate(const GroebnerBasis& B, const std::vector<bool>& keep) {
  if (keep.size() != B.nvars()) fail(errc::length_mismatch, "keep mask arity");
  std::vector<bool> drop(keep.size());
  for (std::size_t i = 0; i < keep.size(); ++i) drop[i] = !keep[i];
  if (!B.order.eliminates(drop))
    fail(errc::wrong_order, "basis order does not eliminate the dropped variables");
  std::vector<Binomial> out;
  auto supported = [&](const Monomial& m) {
    for (std::size_t i = 0; i < m.nvars(); ++i)
      if (m[i] != 0 && !keep[i]) return false;
    return true;
  };
  for (const Binomial& g : B.elems)
    if (supported(g.lead()) && supported(g.tail())) out.push_back(g);
  return out;
}

/// Reindex binomials onto the subring of the listed variables
/// (new variable j = old variable kept[j]), re-orienting under ord.
/// All binomials must be supported on the kept variables.
inline std::vector<Binomial> project(const std::vector<Binomial>& bins,
                                     const std::vector<int>& kept, const MonomialOrder& ord) {
  std::vector<Binomial> out;
  out.reserve(bins.size());
  auto shrink = [&](const Monomial& m) {
    Monomial s(kept.size());
    std::int64_t total = 0;
    for (std::size_t j = 0; j < kept.size(); ++j) {
      s[j] = m[kept[j]];
      total += s[j];
    }
    if (total != m.degree()) fail(errc::not_divisible, "binomial leaves the kept subring");
    return s;
  };
  for (const Binomial& g : bins) {
    auto b = Binomial::make(shrink(g.lead()), shrink(g.tail()), ord);
    if (b) out.push_back(*b);
  }
  return out;
}

/// Per-variable staircase bound when the ideal is zero-dimensional:
/// bounds[i] = least e with x_i^e a leading term. Empty optional when
/// some variable has no pure-power leading term.
inline std::optional<std::vector<Exp>> staircase_bounds(const GroebnerBasis& B) {
  const std::size_t n = B.nvars();
  std::vector<Exp> bounds(n, 0);
  for (const Binomial& g : B.elems) {
    int var = -1;
    bool pure = true;
    for (std::size_t i = 0; i < n; ++i) {
      if (g.lead()[i] == 0) continue;
      if (var >= 0) {
        pure = false;
        break;
      }
      var = static_cast<int>(i);
    }
    if (!pure || var < 0) continue;
    Exp e = g.lead()[var];
    if (bounds[var] == 0 || e < bounds[var]) bounds[var] = e;
  }
  for (Exp b : bounds)
    if (b == 0) return std::nullopt;
  return bounds;
}

/// All monomials outside the leading ideal, enumerated by a staircase
/// walk (ascending raw-lexicographic output order).
inline std::vector<Monomial> standard_monomials(const GroebnerBasis& B, std::size_t cap) {
  auto bounds = staircase_bounds(B);
  if (!bounds) fail(errc::not_zero_dimensional, "a variable has no pure-power leading term");
  const std::size_t n = B.nvars();
  std::vector<Monomial> leads;
  leads.reserve(B.elems.size());
  for (const Binomial& g : B.elems) leads.push_back(g.lead());

  std::vector<Monomial> out;
  Monomial cur(n);
  auto blocked = [&](const Monomial& m) {
    for (const Monomial& l : leads)
      if (divides(l, m)) return true;
    return false;
  };
  auto walk = [&](auto&& self, std::size_t var) -> void {
    if (blocked(cur)) return;  // every extension stays divisible
    if (var == n) {
      if (out.size() == cap) fail(errc::cap_exceeded, "standard monomial cap exceeded");
      out.push_back(cur);
      return;
    }
    for (Exp e = 0; e < (*bounds)[var]; ++e) {
      cur[var] = e;
      self(self, var + 1);
    }
    cur[var] = 0;
  };
  walk(walk, 0);
  return out;
}

/// Order conversion for zero-dimensional binomial ideals. The quotient
/// has a monomial basis, so the linear algebra of the usual algorithm
/// degenerates to first-repeat detection on source normal forms.
inline GroebnerBasis fglm(const GroebnerBasis& source, const MonomialOrder& target) {
  if (target.nvars() != source.nvars()) fail(errc::length_mismatch, "order arity");
  GroebnerBasis src = source.reduced ? source : reduce_basis(source);
  if (!staircase_bounds(src)) fail(errc::not_zero_dimensional, "source ideal not zero-dimensional");
  const std::size_t n = src.nvars();

  auto target_less = [&target](const Monomial& a, const Monomial& b) {
    return target.compare(a, b) == Cmp::less;
  };
  std::set<Monomial, decltype(target_less)> queue(target_less);
  queue.insert(Monomial(n));

  std::map<Monomial, Monomial> rep_of_nf;  // source NF -> target-standard monomial
  std::vector<Monomial> found_leads;
  std::vector<Binomial> out;

  while (!queue.empty()) {
    Monomial m = *queue.begin();
    queue.erase(queue.begin());
    bool skip = false;
    for (const Monomial& l : found_leads)
      if (divides(l, m)) {
        skip = true;
        break;
      }
    if (skip) continue;
    Monomial nf = normal_form(m, src.elems);
    auto it = rep_of_nf.find(nf);
    if (it != rep_of_nf.end()) {
      out.push_back(Binomial::make(m, it->second, target).value());
      found_leads.push_back(std::move(m));
    } else {
      for (std::size_t i = 0; i < n; ++i) queue.insert(m + Monomial::unit(n, i));
      rep_of_nf.emplace(std::move(nf), std::move(m));
    }
  }

  sort_by_lead_desc(out, target);
  return {target, std::move(out), true};
}

}  // namespace codegb

#endif
