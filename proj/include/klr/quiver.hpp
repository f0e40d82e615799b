// Quivers, dimension vectors, colored sequences and symmetric-group combinatorics.
//
// Conventions: vertices are indices 0..n-1 carrying display names; positions are
// 0-based internally; a permutation is stored in one-line notation w[k] = w(k)
// with composition (uv)(k) = u(v(k)).

#pragma once

#include <algorithm>
#include <fstream>
#include <map>
#include <numeric>
#include <sstream>
#include <stdexcept>
#include <tuple>
#include <string>
#include <utility>
#include <vector>

#include "json.hpp"

namespace klr {

using ColorSeq = std::vector<int>;
using Perm = std::vector<int>;
using Word = std::vector<int>;

class Quiver {
 public:
  Quiver() = default;
  explicit Quiver(std::vector<std::string> names)
      : names_(std::move(names)), h_(names_.size(), std::vector<int>(names_.size(), 0)) {}

  void add_arrows(int from, int to, int count = 1) {
    check_vertex(from);
    check_vertex(to);
    if (from == to) throw std::invalid_argument("quiver: loops are not allowed");
    if (count < 0) throw std::invalid_argument("quiver: negative arrow count");
    h_[static_cast<size_t>(from)][static_cast<size_t>(to)] += count;
  }

  int num_vertices() const { return static_cast<int>(names_.size()); }
  const std::vector<std::string>& names() const { return names_; }
  const std::string& name(int v) const {
    check_vertex(v);
    return names_[static_cast<size_t>(v)];
  }
  int index_of(const std::string& nm) const {
    auto it = std::find(names_.begin(), names_.end(), nm);
    if (it == names_.end()) throw std::invalid_argument("quiver: unknown vertex '" + nm + "'");
    return static_cast<int>(it - names_.begin());
  }

  /// Number of arrows i -> j.
  int h(int i, int j) const {
    check_vertex(i);
    check_vertex(j);
    return h_[static_cast<size_t>(i)][static_cast<size_t>(j)];
  }

  int cartan(int i, int j) const {
    check_vertex(i);
    check_vertex(j);
    if (i == j) return 2;
    return -h(i, j) - h(j, i);
  }

  nlohmann::json to_json() const {
    nlohmann::json arrows = nlohmann::json::array();
    for (int i = 0; i < num_vertices(); ++i)
      for (int j = 0; j < num_vertices(); ++j)
        if (h(i, j) > 0) arrows.push_back({name(i), name(j), h(i, j)});
    return {{"vertices", names_}, {"arrows", arrows}};
  }

  static Quiver from_json(const nlohmann::json& doc) {
    if (!doc.is_object() || !doc.contains("vertices") || !doc["vertices"].is_array())
      throw std::invalid_argument("quiver json: expected object with array 'vertices'");
    std::vector<std::string> names;
    for (const auto& v : doc["vertices"]) {
      if (!v.is_string()) throw std::invalid_argument("quiver json: vertex names must be strings");
      names.push_back(v.get<std::string>());
    }
    if (names.empty()) throw std::invalid_argument("quiver json: no vertices");
    auto sorted = names;
    std::sort(sorted.begin(), sorted.end());
    if (std::adjacent_find(sorted.begin(), sorted.end()) != sorted.end())
      throw std::invalid_argument("quiver json: duplicate vertex name");
    Quiver q(names);
    if (doc.contains("arrows")) {
      if (!doc["arrows"].is_array()) throw std::invalid_argument("quiver json: 'arrows' must be an array");
      for (const auto& a : doc["arrows"]) {
        if (!a.is_array() || a.size() < 2 || a.size() > 3 || !a[0].is_string() || !a[1].is_string())
          throw std::invalid_argument("quiver json: arrow must be [from, to] or [from, to, count]");
        int cnt = 1;
        if (a.size() == 3) {
          if (!a[2].is_number_integer()) throw std::invalid_argument("quiver json: arrow count must be an integer");
          cnt = a[2].get<int>();
        }
        q.add_arrows(q.index_of(a[0].get<std::string>()), q.index_of(a[1].get<std::string>()), cnt);
      }
    }
    return q;
  }

  static Quiver load(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw std::runtime_error("cannot open quiver file: " + path);
    nlohmann::json doc;
    try {
      in >> doc;
    } catch (const nlohmann::json::parse_error& e) {
      throw std::invalid_argument(std::string("quiver json: ") + e.what());
    }
    return from_json(doc);
  }

 private:
  void check_vertex(int v) const {
    if (v < 0 || v >= num_vertices()) throw std::out_of_range("quiver: unknown vertex");
  }

  std::vector<std::string> names_;
  std::vector<std::vector<int>> h_;
};

/// Dimension vector: coordinate per vertex.
struct DimVector {
  std::vector<int> coords;

  DimVector() = default;
  explicit DimVector(std::vector<int> c) : coords(std::move(c)) {
    for (int x : coords)
      if (x < 0) throw std::invalid_argument("dimension vector: negative coordinate");
  }
  int total() const { return std::accumulate(coords.begin(), coords.end(), 0); }
  int operator[](int i) const { return coords[static_cast<size_t>(i)]; }
  bool operator==(const DimVector& o) const { return coords == o.coords; }
  bool operator<(const DimVector& o) const { return coords < o.coords; }
  DimVector operator+(const DimVector& o) const {
    DimVector r = *this;
    for (size_t k = 0; k < r.coords.size(); ++k) r.coords[k] += o.coords[k];
    return r;
  }

  static DimVector of_sequence(const ColorSeq& s, int nverts) {
    DimVector d(std::vector<int>(static_cast<size_t>(nverts), 0));
    for (int c : s) d.coords[static_cast<size_t>(c)]++;
    return d;
  }

  /// Accepts JSON ({"i":2,"j":1}) or the compact form "i:2,j:1" (a bare name counts once).
  static DimVector parse(const Quiver& q, const std::string& text) {
    DimVector d(std::vector<int>(static_cast<size_t>(q.num_vertices()), 0));
    auto trimmed = text;
    trimmed.erase(0, trimmed.find_first_not_of(" \t"));
    if (!trimmed.empty() && trimmed[0] == '{') {
      nlohmann::json doc;
      try {
        doc = nlohmann::json::parse(trimmed);
      } catch (const nlohmann::json::parse_error& e) {
        throw std::invalid_argument(std::string("dimension vector json: ") + e.what());
      }
      for (auto it = doc.begin(); it != doc.end(); ++it) {
        if (!it.value().is_number_integer() || it.value().get<int>() < 0)
          throw std::invalid_argument("dimension vector: coordinates must be non-negative integers");
        d.coords[static_cast<size_t>(q.index_of(it.key()))] += it.value().get<int>();
      }
      return d;
    }
    std::stringstream ss(trimmed);
    std::string item;
    while (std::getline(ss, item, ',')) {
      if (item.empty()) continue;
      auto colon = item.find(':');
      std::string nm = item.substr(0, colon);
      int cnt = 1;
      if (colon != std::string::npos) {
        try {
          cnt = std::stoi(item.substr(colon + 1));
        } catch (const std::exception&) {
          throw std::invalid_argument("dimension vector: bad count in '" + item + "'");
        }
      }
      if (cnt < 0) throw std::invalid_argument("dimension vector: negative count");
      d.coords[static_cast<size_t>(q.index_of(nm))] += cnt;
    }
    return d;
  }

  std::string str(const Quiver& q) const {
    std::string s;
    for (int i = 0; i < q.num_vertices(); ++i) {
      if (coords[static_cast<size_t>(i)] == 0) continue;
      if (!s.empty()) s += "+";
      if (coords[static_cast<size_t>(i)] > 1) s += std::to_string(coords[static_cast<size_t>(i)]);
      s += q.name(i);
    }
    return s.empty() ? "0" : s;
  }
};

/// Divided-power pair y = (colors, powers).
struct DivSeq {
  std::vector<int> colors;
  std::vector<int> powers;

  bool operator==(const DivSeq& o) const { return colors == o.colors && powers == o.powers; }
  bool operator<(const DivSeq& o) const {
    return std::tie(colors, powers) < std::tie(o.colors, o.powers);
  }

  static DivSeq trivial(const ColorSeq& s) { return {s, std::vector<int>(s.size(), 1)}; }

  int total() const { return std::accumulate(powers.begin(), powers.end(), 0); }
  bool is_trivial() const {
    return std::all_of(powers.begin(), powers.end(), [](int a) { return a == 1; });
  }
  DimVector weight(int nverts) const {
    DimVector d(std::vector<int>(static_cast<size_t>(nverts), 0));
    for (size_t l = 0; l < colors.size(); ++l) d.coords[static_cast<size_t>(colors[l])] += powers[l];
    return d;
  }
  /// Concatenation yy'.
  DivSeq operator*(const DivSeq& o) const {
    DivSeq r = *this;
    r.colors.insert(r.colors.end(), o.colors.begin(), o.colors.end());
    r.powers.insert(r.powers.end(), o.powers.begin(), o.powers.end());
    return r;
  }

  std::string str(const Quiver& q) const {
    std::string s = "(";
    for (size_t l = 0; l < colors.size(); ++l) {
      if (l) s += ",";
      s += q.name(colors[l]);
      if (powers[l] != 1) s += "^" + std::to_string(powers[l]);
    }
    return s + ")";
  }

  /// Parses "i^2,j" or "i:2,j:1".
  static DivSeq parse(const Quiver& q, const std::string& text) {
    DivSeq y;
    std::stringstream ss(text);
    std::string item;
    while (std::getline(ss, item, ',')) {
      item.erase(std::remove_if(item.begin(), item.end(), [](char c) { return c == '(' || c == ')' || c == ' '; }),
                 item.end());
      if (item.empty()) continue;
      auto sep = item.find_first_of("^:");
      int p = 1;
      if (sep != std::string::npos) p = std::stoi(item.substr(sep + 1));
      if (p <= 0) throw std::invalid_argument("divided power must be positive");
      y.colors.push_back(q.index_of(item.substr(0, sep)));
      y.powers.push_back(p);
    }
    return y;
  }
};

inline ColorSeq expand(const DivSeq& y) {
  if (y.colors.size() != y.powers.size()) throw std::invalid_argument("expand: malformed pair");
  ColorSeq s;
  for (size_t l = 0; l < y.colors.size(); ++l) s.insert(s.end(), static_cast<size_t>(y.powers[l]), y.colors[l]);
  return s;
}

inline std::string seq_str(const Quiver& q, const ColorSeq& s) {
  std::string r = "(";
  for (size_t k = 0; k < s.size(); ++k) {
    if (k) r += ",";
    r += q.name(s[k]);
  }
  return r + ")";
}

inline int ell(int m) { return m * (m - 1) / 2; }

inline int ell_nu(const DimVector& nu) {
  int s = 0;
  for (int c : nu.coords) s += ell(c);
  return s;
}

inline int ell_powers(const std::vector<int>& a) {
  int s = 0;
  for (int x : a) s += ell(x);
  return s;
}

/// I^nu in lexicographic order.
inline std::vector<ColorSeq> sequences(const DimVector& nu) {
  ColorSeq s;
  for (size_t i = 0; i < nu.coords.size(); ++i) s.insert(s.end(), static_cast<size_t>(nu.coords[i]), static_cast<int>(i));
  std::vector<ColorSeq> out;
  do out.push_back(s);
  while (std::next_permutation(s.begin(), s.end()));
  return out;
}

/// Y_nu in lexicographic order of (colors, powers); |nu| is capped.
inline std::vector<DivSeq> divided_sequences(const DimVector& nu, int cap = 6) {
  if (nu.total() > cap) throw std::length_error("divided_sequences: |nu| exceeds cap");
  std::vector<DivSeq> out;
  DivSeq cur;
  std::vector<int> left = nu.coords;
  auto rec = [&](auto&& self) -> void {
    if (std::all_of(left.begin(), left.end(), [](int x) { return x == 0; })) {
      out.push_back(cur);
      return;
    }
    for (size_t i = 0; i < left.size(); ++i) {
      for (int a = 1; a <= left[i]; ++a) {
        left[i] -= a;
        cur.colors.push_back(static_cast<int>(i));
        cur.powers.push_back(a);
        self(self);
        cur.colors.pop_back();
        cur.powers.pop_back();
        left[i] += a;
      }
    }
  };
  rec(rec);
  std::sort(out.begin(), out.end());
  return out;
}

/// All dimension vectors of a given total, lexicographically descending in coordinates.
inline std::vector<DimVector> dim_vectors_of_total(int nverts, int total) {
  std::vector<DimVector> out;
  std::vector<int> c(static_cast<size_t>(nverts), 0);
  auto rec = [&](auto&& self, int k, int left) -> void {
    if (k == nverts - 1) {
      c[static_cast<size_t>(k)] = left;
      out.emplace_back(c);
      return;
    }
    for (int e = left; e >= 0; --e) {
      c[static_cast<size_t>(k)] = e;
      self(self, k + 1, left - e);
    }
  };
  if (nverts > 0) rec(rec, 0, total);
  return out;
}

// ---------------------------------------------------------------------------
// Permutations

inline Perm identity_perm(int m) {
  Perm p(static_cast<size_t>(m));
  std::iota(p.begin(), p.end(), 0);
  return p;
}

/// Adjacent transposition s_l exchanging l and l+1 (0-based).
inline Perm simple_reflection(int m, int l) {
  if (l < 0 || l + 1 >= m) throw std::out_of_range("simple_reflection: position out of range");
  Perm p = identity_perm(m);
  std::swap(p[static_cast<size_t>(l)], p[static_cast<size_t>(l + 1)]);
  return p;
}

inline Perm compose(const Perm& u, const Perm& v) {
  if (u.size() != v.size()) throw std::invalid_argument("compose: size mismatch");
  Perm r(u.size());
  for (size_t k = 0; k < v.size(); ++k) r[k] = u[static_cast<size_t>(v[k])];
  return r;
}

inline Perm inverse(const Perm& w) {
  Perm r(w.size());
  for (size_t k = 0; k < w.size(); ++k) r[static_cast<size_t>(w[k])] = static_cast<int>(k);
  return r;
}

inline bool is_perm(const Perm& w) {
  std::vector<bool> seen(w.size(), false);
  for (int x : w) {
    if (x < 0 || x >= static_cast<int>(w.size()) || seen[static_cast<size_t>(x)]) return false;
    seen[static_cast<size_t>(x)] = true;
  }
  return true;
}

inline int length(const Perm& w) {
  int inv = 0;
  for (size_t a = 0; a < w.size(); ++a)
    for (size_t b = a + 1; b < w.size(); ++b)
      if (w[a] > w[b]) ++inv;
  return inv;
}

/// s_l w (left multiplication exchanges the values l and l+1).
inline Perm left_mul_s(int l, const Perm& w) {
  Perm r = w;
  for (auto& x : r) {
    if (x == l)
      x = l + 1;
    else if (x == l + 1)
      x = l;
  }
  return r;
}

/// w s_l (right multiplication exchanges the entries at positions l and l+1).
inline Perm right_mul_s(const Perm& w, int l) {
  Perm r = w;
  std::swap(r[static_cast<size_t>(l)], r[static_cast<size_t>(l + 1)]);
  return r;
}

inline bool is_left_descent(const Perm& w, int l) {
  Perm wi = inverse(w);
  return wi[static_cast<size_t>(l)] > wi[static_cast<size_t>(l + 1)];
}

inline bool is_right_descent(const Perm& w, int l) { return w[static_cast<size_t>(l)] > w[static_cast<size_t>(l + 1)]; }

/// w = s_{word[0]} s_{word[1]} ... s_{word[r-1]}.
inline Perm perm_of_word(int m, const Word& word) {
  Perm p = identity_perm(m);
  for (int l : word) p = right_mul_s(p, l);
  return p;
}

/// Lexicographically smallest reduced word: repeatedly strip the smallest left descent.
inline Word canonical_word(const Perm& w) {
  Word out;
  Perm cur = w;
  int m = static_cast<int>(w.size());
  while (true) {
    int found = -1;
    for (int l = 0; l + 1 < m; ++l)
      if (is_left_descent(cur, l)) {
        found = l;
        break;
      }
    if (found < 0) break;
    out.push_back(found);
    cur = left_mul_s(found, cur);
  }
  return out;
}

/// Every reduced word of w, lexicographically sorted.
inline std::vector<Word> reduced_words(const Perm& w) {
  std::vector<Word> out;
  int m = static_cast<int>(w.size());
  Word cur;
  auto rec = [&](auto&& self, const Perm& u) -> void {
    bool any = false;
    for (int l = 0; l + 1 < m; ++l) {
      if (!is_left_descent(u, l)) continue;
      any = true;
      cur.push_back(l);
      self(self, left_mul_s(l, u));
      cur.pop_back();
    }
    if (!any) out.push_back(cur);
  };
  rec(rec, w);
  std::sort(out.begin(), out.end());
  return out;
}

/// All permutations of size m in lexicographic one-line order.
inline std::vector<Perm> all_perms(int m) {
  std::vector<Perm> out;
  Perm p = identity_perm(m);
  do out.push_back(p);
  while (std::next_permutation(p.begin(), p.end()));
  return out;
}

inline Perm longest_perm(int m) {
  Perm p(static_cast<size_t>(m));
  for (int k = 0; k < m; ++k) p[static_cast<size_t>(k)] = m - 1 - k;
  return p;
}

/// Bruhat order via the rank-matrix criterion.
inline bool bruhat_leq(const Perm& u, const Perm& w) {
  int m = static_cast<int>(u.size());
  for (int i = 0; i < m; ++i)
    for (int k = 0; k < m; ++k) {
      int cu = 0, cw = 0;
      for (int a = 0; a <= i; ++a) {
        cu += u[static_cast<size_t>(a)] >= k;
        cw += w[static_cast<size_t>(a)] >= k;
      }
      if (cu > cw) return false;
    }
  return true;
}

inline std::string perm_str(const Perm& w) {
  std::string s = "[";
  for (size_t k = 0; k < w.size(); ++k) {
    if (k) s += ",";
    s += std::to_string(w[k] + 1);
  }
  return s + "]";
}

// ---------------------------------------------------------------------------
// Sequence combinatorics

/// w(i) = i o w^{-1}, i.e. (w(i))_{w(k)} = i_k.
inline ColorSeq perm_act(const Perm& w, const ColorSeq& i) {
  if (w.size() != i.size()) throw std::invalid_argument("perm_act: size mismatch");
  ColorSeq r(i.size());
  for (size_t k = 0; k < i.size(); ++k) r[static_cast<size_t>(w[k])] = i[k];
  return r;
}

inline ColorSeq swap_at(const ColorSeq& i, int l) {
  ColorSeq r = i;
  std::swap(r[static_cast<size_t>(l)], r[static_cast<size_t>(l + 1)]);
  return r;
}

inline void check_position(const ColorSeq& i, int l) {
  if (l < 0 || l + 1 >= static_cast<int>(i.size())) throw std::out_of_range("position out of range");
}

/// h_i(l): arrows i_l -> i_{l+1}, or -1 when the two colors agree.
inline int h_loc(const Quiver& q, const ColorSeq& i, int l) {
  check_position(i, l);
  int a = i[static_cast<size_t>(l)], b = i[static_cast<size_t>(l + 1)];
  return a == b ? -1 : q.h(a, b);
}

/// a_i(l) = -i_l . i_{l+1}, or -2 when the two colors agree.
inline int a_loc(const Quiver& q, const ColorSeq& i, int l) {
  check_position(i, l);
  int a = i[static_cast<size_t>(l)], b = i[static_cast<size_t>(l + 1)];
  return a == b ? -2 : -q.cartan(a, b);
}

/// d_i = ell_nu + sum_{p > r} h_{i_p, i_r}.
inline int dim_tilde_f(const Quiver& q, const ColorSeq& i) {
  DimVector nu = DimVector::of_sequence(i, q.num_vertices());
  int d = ell_nu(nu);
  for (size_t p = 0; p < i.size(); ++p)
    for (size_t r = 0; r < p; ++r) d += q.h(i[p], i[r]);
  return d;
}

/// Parabolic stabilizer of a sequence: all w with w(i) = i.
inline std::vector<Perm> stabilizer(const ColorSeq& i) {
  std::vector<Perm> out;
  for (auto& w : all_perms(static_cast<int>(i.size())))
    if (perm_act(w, i) == i) out.push_back(w);
  return out;
}

/// Sorted (lexicographically least) sequence of content nu.
inline ColorSeq base_sequence(const DimVector& nu) { return sequences(nu).front(); }

inline ColorSeq parse_sequence(const Quiver& q, const std::string& text) {
  ColorSeq s;
  std::stringstream ss(text);
  std::string item;
  while (std::getline(ss, item, ',')) {
    item.erase(std::remove_if(item.begin(), item.end(), [](char c) { return c == '(' || c == ')' || c == ' '; }),
               item.end());
    if (!item.empty()) s.push_back(q.index_of(item));
  }
  return s;
}

}  // namespace klr
