#pragma once

#include <optional>
#include <stdexcept>

#include "exgeo/matrix.hpp"
#include "exgeo/ratfunc.hpp"
#include "exgeo/wpde/poly.hpp"

namespace exgeo::wpde {

// Filtered model space: named coordinates with positive weights and a frame
// of derivations with weight-homogeneous polynomial coefficients. The frame
// must close under brackets with constant coefficients; the commutator table
// is computed from the derivations and revalidated against them.
template <class K>
struct ModelSpace {
  std::vector<std::string> coord_names;
  std::vector<int> weights;
  std::vector<std::string> param_names;  // at most one may stay symbolic (K = RatFunc)

  struct Field {
    std::string name;
    std::vector<Poly<K>> coeff;  // one per coordinate
    int order = 0;               // weighted order w: lowers weighted degree by w
  };
  std::vector<Field> fields;
  // [F_i, F_j] = sum_k comm[i][j][k] F_k
  std::vector<std::vector<std::vector<K>>> comm;

  int ncoords() const { return static_cast<int>(coord_names.size()); }
  int nfields() const { return static_cast<int>(fields.size()); }

  int field_index(const std::string& name) const {
    for (int i = 0; i < nfields(); ++i)
      if (fields[i].name == name) return i;
    throw std::invalid_argument("unknown frame field '" + name + "'");
  }

  Poly<K> apply_field(int f, const Poly<K>& p) const {
    Poly<K> r;
    for (int c = 0; c < ncoords(); ++c) {
      if (fields[f].coeff[c].zero()) continue;
      r = r + fields[f].coeff[c] * p.derivative(c);
    }
    return r;
  }

  // word = (F_{w0} o F_{w1} o ... o F_{wk})(p): rightmost acts first
  Poly<K> apply_word(const std::vector<int>& word, Poly<K> p) const {
    for (size_t i = word.size(); i-- > 0;) p = apply_field(word[i], p);
    return p;
  }

  // Polynomials carry the coordinates first, then the parameters (weight 0).
  int arity() const { return ncoords() + static_cast<int>(param_names.size()); }
  std::vector<int> weights_ext() const {
    std::vector<int> w = weights;
    w.resize(arity(), 0);
    return w;
  }

  // Computes and validates the commutator table: brackets must be constant
  // combinations of the frame fields.
  void finalize() {
    int n = ncoords(), m = nfields();
    auto wext = weights_ext();
    // weight homogeneity of the coefficients pins the field order
    for (auto& f : fields) {
      std::optional<int> order;
      for (int c = 0; c < n; ++c) {
        if (f.coeff[c].zero()) continue;
        int d;
        if (!f.coeff[c].homogeneous(wext, &d))
          throw std::invalid_argument("field " + f.name + ": coefficient of d/d" + coord_names[c] +
                                      " is not weight-homogeneous");
        int w = weights[c] - d;
        if (order && *order != w)
          throw std::invalid_argument("field " + f.name + ": inconsistent weighted order across coordinates");
        order = w;
      }
      if (!order) throw std::invalid_argument("field " + f.name + " is zero");
      if (*order <= 0) throw std::invalid_argument("field " + f.name + " does not lower the weighted degree");
      f.order = *order;
    }
    // bracket closure with constant coefficients
    comm.assign(m, std::vector<std::vector<K>>(m, std::vector<K>(m, K(0))));
    for (int i = 0; i < m; ++i)
      for (int j = 0; j < m; ++j) {
        if (i == j) continue;
        std::vector<Poly<K>> br(n);
        for (int c = 0; c < n; ++c) br[c] = apply_field(i, fields[j].coeff[c]) - apply_field(j, fields[i].coeff[c]);
        // match against sum_k t_k * fields[k].coeff: one equation per
        // (coordinate, monomial)
        std::map<std::pair<int, Mono>, int> eq_index;
        for (int c = 0; c < n; ++c) {
          for (const auto& [mo, cf] : br[c].t) eq_index.emplace(std::make_pair(c, mo), 0);
          for (int k = 0; k < m; ++k)
            for (const auto& [mo, cf] : fields[k].coeff[c].t) eq_index.emplace(std::make_pair(c, mo), 0);
        }
        int r = 0;
        for (auto& [key, idx] : eq_index) idx = r++;
        Mat<K> A(static_cast<int>(eq_index.size()), m);
        std::vector<K> b(eq_index.size(), K(0));
        for (const auto& [key, idx] : eq_index) {
          auto [c, mo] = key;
          for (int k = 0; k < m; ++k) A.at(idx, k) = fields[k].coeff[c].coeff(mo);
          b[idx] = br[c].coeff(mo);
        }
        auto sol = solve(A, b);
        if (!sol) throw std::invalid_argument("frame is not bracket-closed with constant coefficients");
        // validate exactly
        std::vector<Poly<K>> recon(n);
        for (int k = 0; k < m; ++k)
          for (int c = 0; c < n; ++c) recon[c] = recon[c] + (*sol)[k] * fields[k].coeff[c];
        for (int c = 0; c < n; ++c)
          if (!(recon[c] == br[c])) throw std::logic_error("commutator table does not match the derivations");
        comm[i][j] = *sol;
      }
  }
};

// coeff * word, word = composition of frame fields (empty word = identity)
template <class K>
struct OpTerm {
  Poly<K> coeff;
  std::vector<int> word;
};

template <class K>
struct Equation {
  std::vector<OpTerm<K>> terms;  // sum equals zero on solutions
  int worder = 0;                // max weighted length of the words
  std::string source;            // original text, for diagnostics
};

template <class K>
struct OperatorSystem {
  ModelSpace<K> space;
  std::vector<Equation<K>> eqs;

  Poly<K> apply_equation(int e, const Poly<K>& u) const {
    Poly<K> r;
    for (const auto& t : eqs[e].terms) r = r + t.coeff * space.apply_word(t.word, u);
    return r;
  }
  int max_order() const {
    int m = 0;
    for (const auto& e : eqs) m = std::max(m, e.worder);
    return m;
  }
};

struct ParseError : std::runtime_error {
  int line, column;
  ParseError(const std::string& msg, int l, int c)
      : std::runtime_error("line " + std::to_string(l) + ", column " + std::to_string(c) + ": " + msg),
        line(l),
        column(c) {}
};

// Parses the operator-system definition text (see fixtures for the format).
// Parameters stay symbolic; use bind_params to substitute numeric values.
OperatorSystem<RatFunc> parse_system(const std::string& text);

// Substitutes values for parameters (all must be bound) giving an exact
// rational system.
OperatorSystem<Rat> bind_params(const OperatorSystem<RatFunc>& sys, const std::map<std::string, Rat>& values);

// Keeps one named parameter symbolic, binds any others.
OperatorSystem<RatFunc> bind_params_symbolic(const OperatorSystem<RatFunc>& sys,
                                             const std::map<std::string, Rat>& values);

// Shipped fixture registry ("case_i_model", "case_i_deformed", "ea",
// "g2_model", "segre", "veronese_n2", "veronese_n3", "ode_<k>").
std::optional<std::string> fixture_text(const std::string& name);
std::vector<std::string> fixture_names();
// Published solution bases (one polynomial per line) for fixtures that have
// one: "ea", "case_i_deformed", "g2_model", "segre".
std::optional<std::string> fixture_basis_text(const std::string& name);

// Parses a whitespace/newline-separated list of polynomial expressions in the
// system's coordinates and parameters (expected-basis files). Parameters come
// back as extra polynomial variables; bind them with the helpers below.
std::vector<Poly<RatFunc>> parse_poly_list(const std::string& text, const OperatorSystem<RatFunc>& sys);

// Moves parameter-variable exponents into the scalar: numeric values for
// bound parameters, the formal symbol for the single symbolic one.
Poly<Rat> bind_poly(const Poly<RatFunc>& p, const OperatorSystem<RatFunc>& sys,
                    const std::map<std::string, Rat>& values);
Poly<RatFunc> bind_poly_symbolic(const Poly<RatFunc>& p, const OperatorSystem<RatFunc>& sys,
                                 const std::map<std::string, Rat>& values);

}  // namespace exgeo::wpde
