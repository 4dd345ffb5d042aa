#include "fpknot/coset_table.hpp"

#include <algorithm>
#include <deque>
#include <stdexcept>

namespace fpknot {

namespace {

constexpr std::uint32_t kUndef = 0xffffffffu;

struct SpaceExhausted {};

// Mutable enumeration state. Rows accumulate dead cosets until compaction;
// the union-find survivor is always the smaller-numbered coset.
class Enumerator {
 public:
  Enumerator(const Presentation& g, const std::vector<Word>& subgroup_gens,
             const EnumLimits& limits, const EnumStrategy& strategy)
      : _g(g), _subgroup(subgroup_gens), _limits(limits), _strategy(strategy) {
    if (_limits.max_cosets < 1) throw std::invalid_argument("max_cosets must be >= 1");
    _ngens = g.rank();
    _cols = 2 * _ngens;
    for (const Word& w : subgroup_gens) {
      if (w.max_generator() >= static_cast<int>(_ngens)) {
        throw std::invalid_argument("subgroup generator uses a foreign alphabet");
      }
    }
    _definition_cap = _limits.max_definitions
                          ? *_limits.max_definitions
                          : 64ull * static_cast<std::uint64_t>(_limits.max_cosets);
    for (const Word& r : g.relators) {
      std::vector<std::size_t> cols;
      cols.reserve(r.size());
      for (std::size_t i = 0; i < r.size(); ++i) cols.push_back(column_of(r.at(i)));
      _relator_cols.push_back(std::move(cols));
    }
    if (!_relator_cols.empty()) {
      std::rotate(_relator_cols.begin(),
                  _relator_cols.begin() + (_strategy.relator_rotation % _relator_cols.size()),
                  _relator_cols.end());
    }
    for (const Word& w : subgroup_gens) {
      std::vector<std::size_t> cols;
      for (std::size_t i = 0; i < w.size(); ++i) cols.push_back(column_of(w.at(i)));
      _subgroup_cols.push_back(std::move(cols));
    }
  }

  EnumOutcome run() {
    new_coset();  // coset 0 = H
    try {
      for (const auto& h : _subgroup_cols) scan_and_fill(0, h);
      std::size_t p = 0;
      while (p < _rows) {
        if (!alive(p)) {
          ++p;
          continue;
        }
        if (_live > (3 * _limits.max_cosets) / 4 && _live >= _next_lookahead_at) {
          lookahead();
          p = compact(p);
        }
        for (;;) {
          try {
            process_coset(p);
            break;
          } catch (const SpaceExhausted&) {
            if (_stats.cosets_defined >= _definition_cap) return {std::nullopt, _stats};
            const std::size_t live_before = _live;
            lookahead();
            p = compact(p);
            // Retry only when the lookahead reclaimed real space; a trickle
            // of coincidences on a full table is resource exhaustion.
            const std::size_t threshold = std::max<std::size_t>(64, _limits.max_cosets / 64);
            if (live_before - _live < threshold) return {std::nullopt, _stats};
          }
        }
        ++p;
      }
    } catch (const SpaceExhausted&) {
      return {std::nullopt, _stats};
    }
    compact(0);
    CosetTable t;
    t.alphabet = _g.generators;
    t.subgroup = _subgroup;
    t.index = _live;
    t.entries = _table;
    verify_table(t, _g);
    CosetTable s = standardize(t);
    verify_table(s, _g);
    return {std::move(s), _stats};
  }

 private:
  std::size_t column_of(letter_t l) const {
    return letter_sign(l) > 0 ? std::size_t(letter_gen(l)) : _ngens + std::size_t(letter_gen(l));
  }
  std::size_t inv_col(std::size_t c) const { return c < _ngens ? c + _ngens : c - _ngens; }

  std::uint32_t& tab(std::size_t coset, std::size_t col) { return _table[coset * _cols + col]; }
  std::uint32_t tab(std::size_t coset, std::size_t col) const {
    return _table[coset * _cols + col];
  }

  bool alive(std::size_t c) const { return _parent[c] == c; }

  std::uint32_t rep(std::uint32_t c) {
    while (_parent[c] != c) {
      _parent[c] = _parent[_parent[c]];
      c = _parent[c];
    }
    return c;
  }

  std::uint32_t new_coset() {
    if (_rows == _limits.max_cosets) throw SpaceExhausted{};
    if (_stats.cosets_defined >= _definition_cap) throw SpaceExhausted{};
    std::uint32_t c = static_cast<std::uint32_t>(_rows++);
    _table.resize(_rows * _cols, kUndef);
    _parent.push_back(c);
    ++_live;
    ++_stats.cosets_defined;
    return c;
  }

  std::uint32_t define(std::size_t from, std::size_t col) {
    std::uint32_t c = new_coset();
    tab(from, col) = c;
    tab(c, inv_col(col)) = static_cast<std::uint32_t>(from);
    return c;
  }

  void merge(std::uint32_t a, std::uint32_t b, std::deque<std::uint32_t>& queue) {
    a = rep(a);
    b = rep(b);
    if (a == b) return;
    if (a > b) std::swap(a, b);  // smaller-numbered coset survives
    _parent[b] = a;
    --_live;
    ++_stats.coincidences;
    queue.push_back(b);
  }

  void coincidence(std::uint32_t alpha, std::uint32_t beta) {
    std::deque<std::uint32_t> queue;
    merge(alpha, beta, queue);
    while (!queue.empty()) {
      std::uint32_t gamma = queue.front();
      queue.pop_front();
      for (std::size_t x = 0; x < _cols; ++x) {
        std::uint32_t delta = tab(gamma, x);
        if (delta == kUndef) continue;
        tab(gamma, x) = kUndef;
        if (tab(delta, inv_col(x)) == gamma) tab(delta, inv_col(x)) = kUndef;
        std::uint32_t mu = rep(gamma);
        std::uint32_t nu = rep(delta);
        if (tab(mu, x) != kUndef) {
          merge(nu, tab(mu, x), queue);
        } else if (tab(nu, inv_col(x)) != kUndef) {
          merge(mu, tab(nu, inv_col(x)), queue);
        } else {
          tab(mu, x) = nu;
          tab(nu, inv_col(x)) = mu;
        }
      }
    }
  }

  // Scan word w (as column indices) at coset alpha, defining cosets to close
  // the trace. May trigger coincidences; returns immediately after one.
  void scan_and_fill(std::uint32_t alpha, const std::vector<std::size_t>& w) {
    if (w.empty()) return;
    std::ptrdiff_t i = 0, j = static_cast<std::ptrdiff_t>(w.size()) - 1;
    std::uint32_t f = alpha, b = alpha;
    for (;;) {
      while (i <= j && tab(f, w[i]) != kUndef) f = tab(f, w[i++]);
      if (i > j) {
        if (f != b) coincidence(f, b);
        return;
      }
      while (j >= i && tab(b, inv_col(w[j])) != kUndef) b = tab(b, inv_col(w[j--]));
      if (j < i) {
        coincidence(f, b);
        return;
      }
      if (j == i) {
        tab(f, w[i]) = b;
        tab(b, inv_col(w[i])) = f;
        return;
      }
      f = define(f, w[i++]);
    }
  }

  // Deduction-only scan: closes traces that are one entry short and reports
  // mismatches, but never defines a coset.
  void scan_no_fill(std::uint32_t alpha, const std::vector<std::size_t>& w) {
    if (w.empty()) return;
    std::ptrdiff_t i = 0, j = static_cast<std::ptrdiff_t>(w.size()) - 1;
    std::uint32_t f = alpha, b = alpha;
    while (i <= j && tab(f, w[i]) != kUndef) f = tab(f, w[i++]);
    if (i > j) {
      if (f != b) coincidence(f, b);
      return;
    }
    while (j >= i && tab(b, inv_col(w[j])) != kUndef) b = tab(b, inv_col(w[j--]));
    if (j < i) {
      coincidence(f, b);
    } else if (j == i) {
      tab(f, w[i]) = b;
      tab(b, inv_col(w[i])) = f;
    }
  }

  void fill_row(std::size_t p) {
    for (std::size_t col = 0; col < _cols; ++col) {
      if (!alive(p)) return;
      if (tab(p, col) == kUndef) define(p, col);
    }
  }

  void process_coset(std::size_t p) {
    if (_strategy.fill_rows_first) fill_row(p);
    for (const auto& r : _relator_cols) {
      if (!alive(p)) return;
      scan_and_fill(static_cast<std::uint32_t>(p), r);
    }
    if (alive(p)) fill_row(p);
  }

  void lookahead() {
    ++_stats.lookaheads;
    for (std::size_t a = 0; a < _rows; ++a) {
      if (!alive(a)) continue;
      for (const auto& r : _relator_cols) {
        if (!alive(a)) break;
        scan_no_fill(static_cast<std::uint32_t>(a), r);
      }
    }
    // Re-arm only after the table has grown by a real chunk; a pass per
    // defined coset would dominate the run.
    _next_lookahead_at = _live + std::max<std::size_t>(64, _limits.max_cosets / 16);
  }

  // Drops dead rows, renumbering live cosets in order. Returns the new
  // position of old coset p (or of its successor when p is dead).
  std::size_t compact(std::size_t p) {
    std::vector<std::uint32_t> remap(_rows, kUndef);
    std::uint32_t next = 0;
    for (std::size_t c = 0; c < _rows; ++c) {
      if (alive(c)) remap[c] = next++;
    }
    std::size_t new_p = 0;
    for (std::size_t c = 0; c < p && c < _rows; ++c) {
      if (alive(c)) ++new_p;
    }
    std::vector<std::uint32_t> packed(static_cast<std::size_t>(next) * _cols, kUndef);
    for (std::size_t c = 0; c < _rows; ++c) {
      if (!alive(c)) continue;
      for (std::size_t col = 0; col < _cols; ++col) {
        std::uint32_t v = tab(c, col);
        packed[remap[c] * _cols + col] = v == kUndef ? kUndef : remap[rep(v)];
      }
    }
    _table = std::move(packed);
    _rows = next;
    _parent.resize(next);
    for (std::uint32_t c = 0; c < next; ++c) _parent[c] = c;
    return new_p;
  }

  const Presentation& _g;
  std::vector<Word> _subgroup;
  EnumLimits _limits;
  EnumStrategy _strategy;
  std::size_t _ngens = 0, _cols = 0;
  std::vector<std::vector<std::size_t>> _relator_cols, _subgroup_cols;
  std::vector<std::uint32_t> _table;
  std::vector<std::uint32_t> _parent;
  std::size_t _rows = 0, _live = 0, _next_lookahead_at = 0;
  std::uint64_t _definition_cap = 0;
  EnumStats _stats;
};

}  // namespace

std::size_t CosetTable::trace(std::size_t start, const Word& w) const {
  if (start >= index) throw std::invalid_argument("trace start out of range");
  if (w.max_generator() >= static_cast<int>(rank())) {
    throw std::invalid_argument("word uses a foreign alphabet");
  }
  std::size_t c = start;
  for (std::size_t i = 0; i < w.size(); ++i) c = at(c, column_of(w.at(i)));
  return c;
}

EnumOutcome enumerate_cosets(const Presentation& g, const std::vector<Word>& subgroup_gens,
                             const EnumLimits& limits, const EnumStrategy& strategy) {
  Enumerator e(g, subgroup_gens, limits, strategy);
  return e.run();
}

CosetTable standardize(const CosetTable& t) {
  const std::size_t cols = t.columns();
  if (t.index == 0 || t.entries.size() != t.index * cols) {
    throw std::invalid_argument("incomplete coset table");
  }
  std::vector<std::uint32_t> new_of_old(t.index, 0xffffffffu);
  std::vector<std::uint32_t> old_of_new;
  old_of_new.reserve(t.index);
  new_of_old[0] = 0;
  old_of_new.push_back(0);
  for (std::size_t pos = 0; pos < old_of_new.size(); ++pos) {
    std::uint32_t old = old_of_new[pos];
    for (std::size_t col = 0; col < cols; ++col) {
      std::uint32_t img = t.at(old, col);
      if (img >= t.index) throw std::invalid_argument("incomplete coset table");
      if (new_of_old[img] == 0xffffffffu) {
        new_of_old[img] = static_cast<std::uint32_t>(old_of_new.size());
        old_of_new.push_back(img);
      }
    }
  }
  if (old_of_new.size() != t.index) {
    throw std::logic_error("coset table is not transitive");
  }
  CosetTable s;
  s.alphabet = t.alphabet;
  s.subgroup = t.subgroup;
  s.index = t.index;
  s.entries.resize(t.index * cols);
  for (std::size_t c = 0; c < t.index; ++c) {
    for (std::size_t col = 0; col < cols; ++col) {
      s.entries[c * cols + col] = new_of_old[t.at(old_of_new[c], col)];
    }
  }
  return s;
}

void verify_table(const CosetTable& t, const Presentation& g) {
  const std::size_t cols = t.columns();
  if (t.alphabet != g.generators) throw std::logic_error("table alphabet mismatch");
  if (t.entries.size() != t.index * cols) throw std::logic_error("table shape mismatch");
  for (std::size_t c = 0; c < t.index; ++c) {
    for (std::size_t col = 0; col < cols; ++col) {
      std::uint32_t img = t.at(c, col);
      if (img >= t.index) throw std::logic_error("table entry out of range");
      if (t.at(img, t.inverse_column(col)) != c) {
        throw std::logic_error("table action is inconsistent");
      }
    }
  }
  for (const Word& r : g.relators) {
    for (std::size_t c = 0; c < t.index; ++c) {
      if (t.trace(c, r) != c) throw std::logic_error("relator does not close");
    }
  }
  for (const Word& h : t.subgroup) {
    if (t.trace(0, h) != 0) throw std::logic_error("subgroup generator moves coset 0");
  }
}

std::vector<Word> coset_representatives(const CosetTable& t) {
  std::vector<Word> reps(t.index);
  std::vector<bool> seen(t.index, false);
  seen[0] = true;
  std::vector<std::uint32_t> queue{0};
  const std::size_t ngens = t.rank();
  for (std::size_t pos = 0; pos < queue.size(); ++pos) {
    std::uint32_t c = queue[pos];
    for (std::size_t col = 0; col < t.columns(); ++col) {
      std::uint32_t img = t.at(c, col);
      if (seen[img]) continue;
      seen[img] = true;
      int gen = static_cast<int>(col < ngens ? col : col - ngens);
      int sign = col < ngens ? 1 : -1;
      reps[img] = reps[c] * Word::generator(gen, sign);
      queue.push_back(img);
    }
  }
  return reps;
}

}  // namespace fpknot
