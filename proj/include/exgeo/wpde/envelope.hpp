#pragma once

#include <functional>

#include "exgeo/subspace.hpp"
#include "exgeo/wpde/model.hpp"

namespace exgeo::wpde {

// Universal enveloping algebra of the frame Lie algebra, in the PBW basis
// F_0^{e_0} F_1^{e_1} ... (ascending field index, composition order), used to
// rewrite operator words modulo the left ideal generated by the equations.
template <class K>
struct Envelope {
  int m = 0;                                       // number of fields
  std::vector<int> worder;                         // weighted order per field
  std::vector<std::vector<std::vector<K>>> comm;   // [i][j] -> coords of [F_i,F_j]
  using El = std::map<Mono, K>;                    // exponent vector over fields
  std::map<std::vector<int>, El> normal_memo;

  explicit Envelope(const ModelSpace<K>& sp) : m(sp.nfields()), comm(sp.comm) {
    for (const auto& f : sp.fields) worder.push_back(f.order);
  }

  int wdeg(const Mono& e) const {
    int s = 0;
    for (int i = 0; i < m; ++i) s += e[i] * worder[i];
    return s;
  }

  static void add_to(El& a, const El& b, const K& c) {
    for (const auto& [mo, cf] : b) {
      auto it = a.find(mo);
      if (it == a.end())
        a[mo] = cf * c;
      else {
        it->second += cf * c;
        if (is_zero(it->second)) a.erase(it);
      }
    }
  }

  // normal form of a composition word (word[0] acts last)
  const El& normalize(const std::vector<int>& word) {
    auto it = normal_memo.find(word);
    if (it != normal_memo.end()) return it->second;
    El out;
    int bad = -1;
    for (size_t k = 0; k + 1 < word.size(); ++k)
      if (word[k] > word[k + 1]) {
        bad = static_cast<int>(k);
        break;
      }
    if (bad < 0) {
      Mono e(m, 0);
      for (int i : word) e[i] += 1;
      out[std::move(e)] = K(1);
    } else {
      // F_a F_b = F_b F_a + [F_a, F_b]
      std::vector<int> swapped = word;
      std::swap(swapped[bad], swapped[bad + 1]);
      out = normalize(swapped);
      int a = word[bad], b = word[bad + 1];
      for (int t = 0; t < m; ++t) {
        const K& c = comm[a][b][t];
        if (is_zero(c)) continue;
        std::vector<int> shorter;
        shorter.reserve(word.size() - 1);
        shorter.insert(shorter.end(), word.begin(), word.begin() + bad);
        shorter.push_back(t);
        shorter.insert(shorter.end(), word.begin() + bad + 2, word.end());
        add_to(out, normalize(shorter), c);
      }
    }
    return normal_memo.emplace(word, std::move(out)).first->second;
  }

  static std::vector<int> mono_word(const Mono& e) {
    std::vector<int> w;
    for (size_t i = 0; i < e.size(); ++i)
      for (int k = 0; k < e[i]; ++k) w.push_back(static_cast<int>(i));
    return w;
  }

  El product(const El& x, const El& y) {
    El out;
    for (const auto& [mx, cx] : x)
      for (const auto& [my, cy] : y) {
        std::vector<int> w = mono_word(mx);
        auto wy = mono_word(my);
        w.insert(w.end(), wy.begin(), wy.end());
        add_to(out, normalize(w), cx * cy);
      }
    return out;
  }
};

// One rewrite rule: the PBW monomial (as a composition word spelling) equals
// a combination of the standard complementary monomials on every solution.
template <class K>
struct Rewrite {
  Mono monomial;               // PBW exponents
  std::vector<std::pair<Mono, K>> value;  // over standard monomials
};

template <class K>
struct ProlongedRelations {
  std::vector<Mono> standard_monomials;  // quotient basis, ascending (wdeg, lex)
  std::vector<Rewrite<K>> rules;         // for every PBW monomial of wdeg <= order
  // compatibility: the ideal's leading-monomial profile matches the ideal of
  // the principal parts (the flat model of the same symbol)
  bool compatible = true;
  // when incompatible: an ideal element whose leading monomial is standard
  // for the model — a forced new equation breaking the involutive profile
  std::optional<std::vector<std::pair<Mono, K>>> witness;
};

// Left-ideal reduction: computes the standard (complementary) monomials of
// U(frame)/I truncated at the given weighted order and rewrites every PBW
// monomial through them. Requires constant-coefficient equations.
template <class K>
ProlongedRelations<K> prolong_relations(const OperatorSystem<K>& sys, int order) {
  const auto& sp = sys.space;
  Envelope<K> env(sp);
  int m = sp.nfields();

  // generators as enveloping elements, plus their principal (top weighted
  // order) parts which generate the flat-model ideal
  std::vector<typename Envelope<K>::El> gens, principal;
  std::vector<int> gen_order;
  for (const auto& eq : sys.eqs) {
    typename Envelope<K>::El g, top;
    for (const auto& t : eq.terms) {
      // constant coefficient required
      Mono zero(sp.arity(), 0);
      for (const auto& [mo, cf] : t.coeff.t)
        if (mo != zero)
          throw std::invalid_argument("prolong_relations: equations must have constant coefficients");
      K c = t.coeff.coeff(zero);
      if (is_zero(c)) continue;
      env.add_to(g, env.normalize(t.word), c);
      int w = 0;
      for (int f : t.word) w += sp.fields[f].order;
      if (w == eq.worder) env.add_to(top, env.normalize(t.word), c);
    }
    gens.push_back(std::move(g));
    principal.push_back(std::move(top));
    gen_order.push_back(eq.worder);
  }

  // PBW monomials of weighted degree <= order, ascending (wdeg, lex)
  std::vector<Mono> monos;
  {
    Mono cur(m, 0);
    std::function<void(int, int)> rec = [&](int var, int left) {
      if (var == m) {
        monos.push_back(cur);
        return;
      }
      for (int e = 0; e * env.worder[var] <= left; ++e) {
        cur[var] = e;
        rec(var + 1, left - e * env.worder[var]);
      }
      cur[var] = 0;
    };
    rec(0, order);
  }
  std::sort(monos.begin(), monos.end(), [&](const Mono& a, const Mono& b) {
    int wa = env.wdeg(a), wb = env.wdeg(b);
    if (wa != wb) return wa < wb;
    return a < b;
  });
  std::map<Mono, int> mono_pos;
  for (size_t i = 0; i < monos.size(); ++i) mono_pos[monos[i]] = static_cast<int>(i);
  int nm = static_cast<int>(monos.size());

  // ideal rows, coordinates reversed so echelon pivots on leading monomials
  auto coords_of = [&](const typename Envelope<K>::El& el) {
    std::vector<K> v(nm, K(0));
    for (const auto& [mo, cf] : el) {
      auto it = mono_pos.find(mo);
      if (it == mono_pos.end()) throw std::logic_error("prolong_relations: element escapes the truncation");
      v[nm - 1 - it->second] = cf;  // reversed: column 0 = largest monomial
    }
    return v;
  };
  Echelon<K> ideal(nm), model(nm);
  for (size_t gi = 0; gi < gens.size(); ++gi) {
    for (const auto& u : monos) {
      if (env.wdeg(u) + gen_order[gi] > order) continue;
      typename Envelope<K>::El ue;
      ue[u] = K(1);
      ideal.add(coords_of(env.product(ue, gens[gi])));
      model.add(coords_of(env.product(ue, principal[gi])));
    }
  }

  ProlongedRelations<K> out;
  std::vector<bool> is_leading(nm, false);
  for (int p : ideal.pivots) is_leading[nm - 1 - p] = true;  // translate back
  for (int i = 0; i < nm; ++i)
    if (!is_leading[i]) out.standard_monomials.push_back(monos[i]);

  // incompatibility: the leading-monomial profile deviates from the flat
  // model's; the witness is the offending forced relation
  if (ideal.pivots != model.pivots) {
    out.compatible = false;
    std::vector<bool> model_leading(nm, false);
    for (int p : model.pivots) model_leading[nm - 1 - p] = true;
    for (const auto& row : ideal.rows) {
      int lead = -1;
      for (int c = 0; c < nm; ++c)
        if (!is_zero(row[c])) {
          lead = nm - 1 - c;
          break;
        }
      if (lead >= 0 && !model_leading[lead]) {
        std::vector<std::pair<Mono, K>> expr;
        for (int c = 0; c < nm; ++c)
          if (!is_zero(row[c])) expr.push_back(std::make_pair(monos[nm - 1 - c], row[c]));
        out.witness = expr;
        break;
      }
    }
  }

  // rewrite every PBW monomial through the standard ones
  for (const auto& mo : monos) {
    typename Envelope<K>::El el;
    el[mo] = K(1);
    std::vector<K> v = ideal.reduce(coords_of(el));
    Rewrite<K> rw;
    rw.monomial = mo;
    for (int c = 0; c < nm; ++c)
      if (!is_zero(v[c])) rw.value.push_back({monos[nm - 1 - c], v[c]});
    out.rules.push_back(std::move(rw));
  }
  return out;
}

// Reduces an arbitrary composition word (leftmost acts last) to the standard
// monomials.
template <class K>
std::vector<std::pair<Mono, K>> reduce_word(const OperatorSystem<K>& sys, const ProlongedRelations<K>& rel,
                                            const std::vector<int>& word) {
  Envelope<K> env(sys.space);
  auto el = env.normalize(word);
  std::map<Mono, K> acc;
  std::map<Mono, const Rewrite<K>*> by_mono;
  for (const auto& r : rel.rules) by_mono[r.monomial] = &r;
  for (const auto& [mo, cf] : el) {
    auto it = by_mono.find(mo);
    if (it == by_mono.end()) throw std::invalid_argument("reduce_word: word exceeds the prolongation order");
    for (const auto& [sm, c] : it->second->value) {
      acc[sm] += cf * c;
      if (is_zero(acc[sm])) acc.erase(sm);
    }
  }
  return {acc.begin(), acc.end()};
}

}  // namespace exgeo::wpde
